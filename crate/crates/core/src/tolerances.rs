//! Tolerances used by the verification suites and the acceptance tests.

pub const JACOBI: f64 = 1e-12;
pub const ANTISYMMETRY: f64 = 1e-14;
pub const PAIRING_LINEARITY: f64 = 1e-14;
pub const GROUP_AXIOMS: f64 = 1e-10;
pub const INVERSE: f64 = 1e-12;
pub const ADJOINT_HOMOMORPHISM: f64 = 1e-10;
pub const ADJOINT_LINEARITY: f64 = 1e-12;
pub const DUALITY: f64 = 1e-9;
pub const COADJOINT_COMPOSITION: f64 = 1e-9;
/// Relative.
pub const CASIMIR: f64 = 1e-9;
pub const KIRILLOV_CLOSED_FORM: f64 = 1e-12;
pub const KIRILLOV_INVERSE: f64 = 1e-10;
pub const ROUND_TRIP: f64 = 1e-12;
pub const BRACKET_FD: f64 = 1e-6;
pub const JACOBI_FD: f64 = 1e-4;
pub const LEIBNIZ_FD: f64 = 1e-6;
pub const OMEGA_CONSISTENCY: f64 = 1e-9;
pub const RK4_VS_CLOSED_FORM: f64 = 1e-9;
pub const H_DRIFT: f64 = 1e-9;
pub const CASIMIR_DRIFT: f64 = 1e-9;
pub const VECTOR_FIELD: f64 = 1e-6;
pub const FLOW_GROUP: f64 = 1e-10;
pub const NEWTON: f64 = 1e-8;
pub const REALIZATION_HOMOMORPHISM: f64 = 1e-8;
