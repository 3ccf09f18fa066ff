//! Extended Galilei and Para-Galilei groups in the plane: algebras, group
//! laws, coadjoint orbits, noncommutative Poisson structures and the free
//! Hamiltonian flow on those orbits.
//!
//! Everything numeric is generic over [`Real`]; the `*64` aliases fix `f64`.

pub mod algebra;
pub mod checks;
pub mod coadjoint;
pub mod conventions;
pub mod dynamics;
pub mod error;
pub mod family;
pub mod groups;
pub mod linalg;
pub mod orbit;
pub mod sample;
pub mod scalar;
pub mod tolerances;

pub use algebra::{build_algebra, pairing, AlgebraElement, AlgebraParams, StructureConstants};
pub use coadjoint::{
    casimirs, coadjoint_action, kirillov_matrix, CasimirSet, CoadjointVector, FieldParams,
    KirillovMatrix,
};
pub use conventions::Vec2;
pub use dynamics::{
    closed_form_flow, hamiltonian, integrate, newton_check, symplectic_realization, Trajectory,
};
pub use error::{Error, Result};
pub use family::Family;
pub use groups::{adjoint_action, inverse, multiply, ExtendedGroupElement};
pub use orbit::{bracket_table, canonical_coords, from_coadjoint, to_coadjoint, OrbitPoint};
pub use scalar::Real;

pub type AlgebraParams64 = AlgebraParams<f64>;
pub type AlgebraElement64 = AlgebraElement<f64>;
pub type GroupElement64 = ExtendedGroupElement<f64>;
pub type CoadjointVector64 = CoadjointVector<f64>;
pub type OrbitPoint64 = OrbitPoint<f64>;
