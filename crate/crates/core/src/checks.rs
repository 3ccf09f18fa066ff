//! Randomized invariant suites shared by `orbitkit verify` and the test
//! targets. Every check reports the largest deviation it saw over its draws.

use crate::algebra::{build_algebra, pairing, AlgebraElement, AlgebraParams};
use crate::coadjoint::{
    casimirs, closed_form_inverse, coadjoint_action, invert_kirillov, kirillov_matrix,
    orbit_basis, closed_form_kirillov, CasimirSet, FieldParams, DEFAULT_PIVOT_TOL,
};
use crate::dynamics::{
    closed_form_flow, closed_form_trajectory, flow_coefficients, hamiltonian,
    hamiltonian_function, hamiltonian_vector_field, integrate, newton_check,
    realization_via_coadjoint, symplectic_realization, Trajectory,
};
use crate::family::Family;
use crate::groups::{adjoint_action, identity, inverse, multiply, ExtendedGroupElement};
use crate::linalg::{identity6, matmul6, max_abs_diff6, scale6};
use crate::orbit::{
    bilinear, bracket_table, canonical_coords, coadjoint_bracket_matrix, gradient, poisson_bracket,
    s_row_formulas, to_coadjoint, Coords, OrbitPoint,
};
use crate::sample;
use crate::tolerances as tol;
use rand::Rng;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub family: Family,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Reported but not part of the pass/fail verdict.
    pub informational: bool,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.max_deviation.is_finite() && self.max_deviation <= self.tolerance
    }
}

/// Running maximum that turns NaN into +inf so it can never pass.
#[derive(Default)]
struct Worst(f64);

impl Worst {
    fn see(&mut self, x: f64) {
        self.0 = if x.is_nan() { f64::INFINITY } else { self.0.max(x) };
    }
}

fn result(name: &'static str, family: Family, samples: usize, w: Worst, tolerance: f64) -> CheckResult {
    CheckResult { name, family, samples, max_deviation: w.0, tolerance, informational: false }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn max_diff<const N: usize>(a: &[f64; N], b: &[f64; N]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

pub fn lie_algebra<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut jac = Worst::default();
    let mut anti = Worst::default();
    for _ in 0..n {
        let cs = build_algebra(&sample::params::<f64, _>(rng, family));
        jac.see(cs.jacobi_residual());
        anti.see(cs.antisymmetry_residual());
    }
    vec![
        result("algebra.jacobi", family, n, jac, tol::JACOBI),
        result("algebra.antisymmetry", family, n, anti, tol::ANTISYMMETRY),
    ]
}

pub fn group_axioms<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut assoc = Worst::default();
    let mut inv = Worst::default();
    let mut unit = Worst::default();
    let mut hom = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let g1 = sample::group_element(rng, family);
        let g2 = sample::group_element(rng, family);
        let g3 = sample::group_element(rng, family);
        let x = sample::algebra_element(rng);
        let mul = |a: &ExtendedGroupElement<f64>, b: &ExtendedGroupElement<f64>| multiply(&p, a, b).unwrap();
        let e = identity(family);
        assoc.see(mul(&mul(&g1, &g2), &g3).max_abs_diff(&mul(&g1, &mul(&g2, &g3))));
        let gi = inverse(&p, &g1).unwrap();
        inv.see(mul(&g1, &gi).max_abs_diff(&e).max(mul(&gi, &g1).max_abs_diff(&e)));
        unit.see(mul(&g1, &e).max_abs_diff(&g1).max(mul(&e, &g1).max_abs_diff(&g1)));
        let ad = |g: &ExtendedGroupElement<f64>, x: &AlgebraElement<f64>| adjoint_action(&p, g, x).unwrap();
        hom.see(ad(&mul(&g1, &g2), &x).max_abs_diff(&ad(&g1, &ad(&g2, &x))));
    }
    vec![
        result("group.associativity", family, n, assoc, tol::GROUP_AXIOMS),
        result("group.inverse", family, n, inv, tol::GROUP_AXIOMS),
        result("group.identity", family, n, unit, tol::GROUP_AXIOMS),
        result("group.adjoint_homomorphism", family, n, hom, tol::ADJOINT_HOMOMORPHISM),
    ]
}

pub fn duality<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut dual = Worst::default();
    let mut comp = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let g1 = sample::group_element(rng, family);
        let g2 = sample::group_element(rng, family);
        let x = sample::algebra_element(rng);
        let xi = sample::coadjoint_vector(rng, &p);
        let moved = coadjoint_action(&p, &g1, &xi).unwrap();
        let adx = adjoint_action(&p, &g1, &x).unwrap();
        dual.see((pairing(&moved, &adx) - pairing(&xi, &x)).abs());
        let g12 = multiply(&p, &g1, &g2).unwrap();
        let lhs = coadjoint_action(&p, &g12, &xi).unwrap();
        let rhs = coadjoint_action(&p, &g1, &coadjoint_action(&p, &g2, &xi).unwrap()).unwrap();
        comp.see(lhs.max_abs_diff(&rhs));
    }
    vec![
        result("coadjoint.duality", family, n, dual, tol::DUALITY),
        result("coadjoint.composition", family, n, comp, tol::COADJOINT_COMPOSITION),
    ]
}

/// Relative deviation |Δ|/max(1, |value|) of each Casimir.
pub fn casimir_invariance<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut w = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let g = sample::group_element(rng, family);
        let xi = sample::coadjoint_vector(rng, &p);
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let before = casimirs(&xi, &fp).unwrap();
        let after = casimirs(&coadjoint_action(&p, &g, &xi).unwrap(), &fp).unwrap();
        let d = |f: fn(&CasimirSet<f64>) -> f64| rel(f(&before), f(&after));
        w.see(d(|c| c.m).max(d(|c| c.h)).max(d(|c| c.intensity)).max(d(|c| c.u)));
    }
    vec![result("coadjoint.casimirs", family, n, w, tol::CASIMIR)]
}

pub fn kirillov<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut closed = Worst::default();
    let mut inv = Worst::default();
    let mut prod = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let pt = sample::orbit_point_for(rng, &p);
        let xi = to_coadjoint(&pt).unwrap();
        let cs = build_algebra(&p);
        let om = kirillov_matrix(&cs, &xi, orbit_basis(family));
        closed.see(max_abs_diff6(&om.entries, &closed_form_kirillov(&xi, &pt.fields).unwrap()));
        let num = invert_kirillov(&om, DEFAULT_PIVOT_TOL).unwrap();
        inv.see(max_abs_diff6(&num, &closed_form_inverse(&xi, &pt.fields).unwrap()));
        prod.see(max_abs_diff6(&matmul6(&om.entries, &num), &identity6()));
    }
    vec![
        result("kirillov.closed_form", family, n, closed, tol::KIRILLOV_CLOSED_FORM),
        result("kirillov.inverse", family, n, inv, tol::KIRILLOV_INVERSE),
        result("kirillov.product", family, n, prod, tol::KIRILLOV_INVERSE),
    ]
}

fn random_quadratic<R: Rng + ?Sized>(rng: &mut R) -> ([f64; 6], [[f64; 6]; 6]) {
    let mut a = [0.0; 6];
    let mut b = [[0.0; 6]; 6];
    for i in 0..6 {
        a[i] = rng.gen_range(-1.0..1.0);
        for j in 0..6 {
            b[i][j] = rng.gen_range(-1.0..1.0);
        }
    }
    (a, b)
}

fn eval_quadratic(q: &([f64; 6], [[f64; 6]; 6]), z: &Coords<f64>) -> f64 {
    let mut out = 0.0;
    for i in 0..6 {
        out += q.0[i] * z[i];
        for j in 0..6 {
            out += q.1[i][j] * z[i] * z[j];
        }
    }
    out
}

/// {F, {G, H}} with both brackets taken by finite differences.
fn nested_bracket<F, G, H>(pt: &OrbitPoint<f64>, f: F, g: G, h: H) -> f64
where
    F: Fn(&Coords<f64>) -> f64,
    G: Fn(&Coords<f64>) -> f64 + Copy,
    H: Fn(&Coords<f64>) -> f64 + Copy,
{
    let inner = |z: &Coords<f64>| {
        let at = pt.with_coords(z);
        bilinear(&at, &gradient(g, z), &gradient(h, z))
    };
    poisson_bracket(f, inner, pt)
}

pub fn brackets<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut coords = Worst::default();
    let mut pots = Worst::default();
    let mut srows = Worst::default();
    let mut jac = Worst::default();
    let mut omega = Worst::default();
    let mut canon = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let pt = sample::orbit_point_for(rng, &p);
        let table = bracket_table(&pt);
        for e in &table.coordinates {
            coords.see((e.finite_difference(&pt) - e.value).abs());
        }
        for e in &table.potentials {
            pots.see((e.finite_difference(&pt) - e.value).abs());
        }
        for e in s_row_formulas(&pt) {
            srows.see((e.finite_difference(&pt) - e.value).abs());
        }

        let (qf, qg, qh) = (random_quadratic(rng), random_quadratic(rng), random_quadratic(rng));
        let (f, g, h) = (
            |z: &Coords<f64>| eval_quadratic(&qf, z),
            |z: &Coords<f64>| eval_quadratic(&qg, z),
            |z: &Coords<f64>| eval_quadratic(&qh, z),
        );
        let cyc = nested_bracket(&pt, f, g, h) + nested_bracket(&pt, g, h, f) + nested_bracket(&pt, h, f, g);
        jac.see(cyc.abs());

        // J·P·Jᵀ = −Ω and (−Ω)·Ω⁻¹ = −I
        let xi = to_coadjoint(&pt).unwrap();
        let om = kirillov_matrix(&build_algebra(&p), &xi, orbit_basis(family));
        let pushed = coadjoint_bracket_matrix(&pt).unwrap();
        let neg_i = scale6(&identity6(), -1.0);
        let inv = closed_form_inverse(&xi, &pt.fields).unwrap();
        omega.see(
            max_abs_diff6(&pushed, &scale6(&om.entries, -1.0))
                .max(max_abs_diff6(&matmul6(&pushed, &inv), &neg_i)),
        );

        // canonical coordinates have {Q_a, Q_b} = standard Darboux pattern
        let cc = |a: usize| move |z: &Coords<f64>| canonical_coords(&pt.with_coords(z))[a];
        // (s, P₁, P₂, α, Q¹, Q²): {s,α} = 1, {P_i, Q^j} = δ_ij, all else 0
        for a in 0..6 {
            for b in 0..6 {
                let expected = match (a, b) {
                    (0, 3) | (1, 4) | (2, 5) => 1.0,
                    (3, 0) | (4, 1) | (5, 2) => -1.0,
                    _ => 0.0,
                };
                canon.see((poisson_bracket(cc(a), cc(b), &pt) - expected).abs());
            }
        }
    }
    let mut s = result("brackets.s_row_formulas", family, n, srows, tol::BRACKET_FD);
    s.informational = true;
    vec![
        result("brackets.coordinates", family, n, coords, tol::BRACKET_FD),
        result("brackets.potentials", family, n, pots, tol::BRACKET_FD),
        result("brackets.jacobi", family, n, jac, tol::JACOBI_FD),
        result("brackets.kirillov_consistency", family, n, omega, tol::OMEGA_CONSISTENCY),
        result("brackets.canonical", family, n, canon, tol::BRACKET_FD),
        s,
    ]
}

/// Largest coordinate gap, each sample scaled by max(1, largest coordinate).
fn trajectory_gap(a: &Trajectory<f64>, b: &Trajectory<f64>) -> f64 {
    a.samples.iter().zip(&b.samples).fold(0.0, |m, (x, y)| {
        let scale = x.point.coords().iter().fold(1f64, |s, c| s.max(c.abs()));
        m.max(x.point.max_abs_diff(&y.point) / scale)
    })
}

/// H drift over max(1, largest |kinetic| + |potential| + |exotic| seen): the
/// individual terms grow like t² while H stays put, so this is the roundoff
/// floor the cancellation can reach.
fn scaled_h_drift(traj: &Trajectory<f64>) -> f64 {
    let scale = traj.samples.iter().fold(1f64, |s, x| {
        let h = hamiltonian(&x.point);
        s.max(h.kinetic.abs() + h.potential.abs() + h.exotic.abs())
    });
    traj.max_h_drift() / scale
}

/// RK4 against the closed form on [0, t_end] with step dt (gaps relative to
/// the state's size), conservation along the flow, and X_H against {H, ·}.
pub fn dynamics<R: Rng + ?Sized>(
    rng: &mut R,
    family: Family,
    n: usize,
    t_end: f64,
    dt: f64,
) -> Vec<CheckResult> {
    let mut rk = Worst::default();
    let mut hd = Worst::default();
    let mut cd = Worst::default();
    let mut vf = Worst::default();
    let mut energy = Worst::default();
    for _ in 0..n {
        let pt = sample::orbit_point::<f64, _>(rng, family);
        let num = integrate(&pt, t_end, dt).unwrap();
        let cf = closed_form_trajectory(&pt, t_end, dt).unwrap();
        rk.see(trajectory_gap(&num, &cf));
        hd.see(scaled_h_drift(&num).max(scaled_h_drift(&cf)));
        cd.see(num.max_casimir_drift().max(cf.max_casimir_drift()));
        let xh = hamiltonian_vector_field(&pt);
        let hf = hamiltonian_function(&pt);
        for (i, v) in xh.iter().enumerate() {
            // ż_i = {H, z_i}
            let zi = move |z: &Coords<f64>| z[i];
            vf.see((poisson_bracket(&hf, zi, &pt) - v).abs());
        }
        let h0 = hamiltonian(&pt).total;
        for t in [0.1, 1.0, 10.0] {
            energy.see(rel(hamiltonian(&closed_form_flow(&pt, t)).total, h0));
        }
    }
    vec![
        result("dynamics.rk4_vs_closed_form", family, n, rk, tol::RK4_VS_CLOSED_FORM),
        result("dynamics.h_drift", family, n, hd, tol::H_DRIFT),
        result("dynamics.casimir_drift", family, n, cd, tol::CASIMIR_DRIFT),
        result("dynamics.vector_field", family, n, vf, tol::VECTOR_FIELD),
        result("dynamics.energy_conservation", family, n, energy, tol::H_DRIFT),
    ]
}

/// Second differences of closed-form and RK4 trajectories against the Newton
/// right-hand sides, and ds/dt against K(t)/m.
pub fn newton<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let (t_end, dt) = (2.0, 0.01);
    let mut law = Worst::default();
    let mut comp = Worst::default();
    let mut sdot = Worst::default();
    for _ in 0..n {
        let pt = sample::orbit_point::<f64, _>(rng, family);
        let fc = flow_coefficients(&pt);
        for traj in [closed_form_trajectory(&pt, t_end, dt).unwrap(), integrate(&pt, t_end, dt).unwrap()] {
            let rep = newton_check(&traj).unwrap();
            law.see([rep.q_accel, Some(rep.s_accel), rep.i_accel].into_iter().flatten().fold(0.0, f64::max));
            if let Some(c) = rep.compliance {
                comp.see(c);
            }
            for w in traj.samples.windows(3) {
                let ds = (w[2].point.s - w[0].point.s) / (w[2].t - w[0].t);
                sdot.see((ds - fc.k_at(w[1].t) / pt.m()).abs());
            }
        }
    }
    let mut out = vec![
        result("newton.second_law", family, n, law, tol::NEWTON),
        result("newton.s_velocity", family, n, sdot, tol::NEWTON),
    ];
    if family.is_para() {
        out.push(result("newton.compliance", family, n, comp, tol::NEWTON));
    }
    out
}

pub fn realization<R: Rng + ?Sized>(rng: &mut R, family: Family, n: usize) -> Vec<CheckResult> {
    let mut hom = Worst::default();
    let mut flow = Worst::default();
    let mut rot = Worst::default();
    let mut via = Worst::default();
    for _ in 0..n {
        let p = sample::params::<f64, _>(rng, family);
        let pt = sample::orbit_point_for(rng, &p);
        let g1 = sample::group_element(rng, family);
        let g2 = sample::group_element(rng, family);
        let d = |g: &ExtendedGroupElement<f64>, x: &OrbitPoint<f64>| symplectic_realization(g, x).unwrap();
        let g12 = multiply(&p, &g1, &g2).unwrap();
        hom.see(d(&g12, &pt).max_abs_diff(&d(&g1, &d(&g2, &pt))));

        let t = g1.t;
        let tt = d(&ExtendedGroupElement::time_translation(family, t), &pt);
        flow.see(max_diff(&tt.coords(), &closed_form_flow(&pt, t).coords()));

        let th = g1.theta;
        let r = d(&ExtendedGroupElement::rotation(family, th), &pt);
        let expected = OrbitPoint { alpha: pt.alpha + th, q: pt.q.rotate(th), mom: pt.mom.rotate(th), ..pt };
        rot.see(max_diff(&r.coords(), &expected.coords()));

        via.see(d(&g1, &pt).max_abs_diff(&realization_via_coadjoint(&p, &g1, &pt).unwrap()));
    }
    vec![
        result("realization.homomorphism", family, n, hom, tol::REALIZATION_HOMOMORPHISM),
        result("realization.time_translation", family, n, flow, 0.0),
        result("realization.rotation", family, n, rot, 0.0),
        result("realization.coadjoint_route", family, n, via, tol::REALIZATION_HOMOMORPHISM),
    ]
}

/// Draw counts for a full run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteSizes {
    pub algebra: usize,
    pub group: usize,
    pub duality: usize,
    pub casimir: usize,
    pub kirillov: usize,
    pub brackets: usize,
    pub dynamics: usize,
    pub newton: usize,
    pub realization: usize,
    pub t_end: f64,
    pub dt: f64,
}

impl Default for SuiteSizes {
    fn default() -> Self {
        SuiteSizes {
            algebra: 100,
            group: 500,
            duality: 500,
            casimir: 1000,
            kirillov: 100,
            brackets: 200,
            dynamics: 5,
            newton: 50,
            realization: 200,
            t_end: 10.0,
            dt: 1e-3,
        }
    }
}

/// Every suite for one family, in a fixed order.
pub fn run_all<R: Rng + ?Sized>(rng: &mut R, family: Family, sizes: &SuiteSizes) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(lie_algebra(rng, family, sizes.algebra));
    out.extend(group_axioms(rng, family, sizes.group));
    out.extend(duality(rng, family, sizes.duality));
    out.extend(casimir_invariance(rng, family, sizes.casimir));
    out.extend(kirillov(rng, family, sizes.kirillov));
    out.extend(brackets(rng, family, sizes.brackets));
    out.extend(dynamics(rng, family, sizes.dynamics, sizes.t_end, sizes.dt));
    out.extend(newton(rng, family, sizes.newton));
    out.extend(realization(rng, family, sizes.realization));
    out
}

/// Checks at one configured point: chart round trip, the bracket tables, the
/// −Ω consistency, and RK4 against the closed form on [0, t_end].
pub fn scenario(pt: &OrbitPoint<f64>, t_end: f64, dt: f64) -> crate::Result<Vec<CheckResult>> {
    let family = pt.family;
    let one = |name, w: Worst, tol| result(name, family, 1, w, tol);
    let xi = to_coadjoint(pt)?;
    let mut round = Worst::default();
    round.see(crate::orbit::from_coadjoint(&xi, &pt.fields)?.max_abs_diff(pt));

    let table = bracket_table(pt);
    let mut br = Worst::default();
    for e in table.all() {
        br.see((e.finite_difference(pt) - e.value).abs());
    }

    // constants recovered from h = mc²/ω and c = ωr
    let w = pt.fields.omega;
    let c = (pt.casimir.h * w / pt.m()).sqrt();
    let p = AlgebraParams::new(family, c, c / w, w)?;
    let om = kirillov_matrix(&build_algebra(&p), &xi, orbit_basis(family));
    let mut omega = Worst::default();
    omega.see(max_abs_diff6(&coadjoint_bracket_matrix(pt)?, &scale6(&om.entries, -1.0)));

    let num = integrate(pt, t_end, dt)?;
    let cf = closed_form_trajectory(pt, t_end, dt)?;
    let (mut rk, mut hd, mut cd) = (Worst::default(), Worst::default(), Worst::default());
    rk.see(trajectory_gap(&num, &cf));
    hd.see(scaled_h_drift(&num).max(scaled_h_drift(&cf)));
    cd.see(num.max_casimir_drift().max(cf.max_casimir_drift()));
    let n = num.samples.len();
    Ok(vec![
        one("scenario.round_trip", round, tol::ROUND_TRIP),
        one("scenario.brackets", br, tol::BRACKET_FD),
        one("scenario.kirillov_consistency", omega, tol::OMEGA_CONSISTENCY),
        result("scenario.rk4_vs_closed_form", family, n, rk, tol::RK4_VS_CLOSED_FORM),
        result("scenario.h_drift", family, n, hd, tol::H_DRIFT),
        result("scenario.casimir_drift", family, n, cd, tol::CASIMIR_DRIFT),
    ])
}
