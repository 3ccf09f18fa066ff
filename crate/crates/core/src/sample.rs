//! Random draws used by the property suites and `orbitkit verify`.

use crate::algebra::{AlgebraElement, AlgebraParams, DIM};
use crate::coadjoint::{CoadjointVector, FieldParams};
use crate::conventions::Vec2;
use crate::family::Family;
use crate::groups::ExtendedGroupElement;
use crate::orbit::{from_coadjoint, OrbitPoint};
use crate::scalar::Real;
use rand::Rng;

fn uni<T: Real, R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> T {
    T::lit(rng.gen_range(lo..hi))
}

fn vec2<T: Real, R: Rng + ?Sized>(rng: &mut R, a: f64) -> Vec2<T> {
    Vec2(uni(rng, -a, a), uni(rng, -a, a))
}

/// c, r, ω uniform in [0.1, 10]; Para families link c = ωr.
pub fn params<T: Real, R: Rng + ?Sized>(rng: &mut R, family: Family) -> AlgebraParams<T> {
    let r = uni(rng, 0.1, 10.0);
    let omega = uni(rng, 0.1, 10.0);
    let out = if family.is_para() {
        AlgebraParams::with_linked_c(family, r, omega)
    } else {
        AlgebraParams::new(family, uni(rng, 0.1, 10.0), r, omega)
    };
    out.expect("sampled constants are positive")
}

pub fn group_element<T: Real, R: Rng + ?Sized>(rng: &mut R, family: Family) -> ExtendedGroupElement<T> {
    ExtendedGroupElement {
        family,
        theta: uni(rng, -3.1, 3.1),
        v: vec2(rng, 2.0),
        x: vec2(rng, 2.0),
        t: uni(rng, -2.0, 2.0),
        aux: vec2(rng, 2.0),
        xi: uni(rng, -2.0, 2.0),
        phi: uni(rng, -2.0, 2.0),
    }
}

pub fn algebra_element<T: Real, R: Rng + ?Sized>(rng: &mut R) -> AlgebraElement<T> {
    let mut coeffs = [T::zero(); DIM];
    for c in coeffs.iter_mut() {
        *c = uni(rng, -1.0, 1.0);
    }
    AlgebraElement { coeffs }
}

/// Coadjoint vector with h = mc²/ω and m ∈ [0.5, 3].
pub fn coadjoint_vector<T: Real, R: Rng + ?Sized>(rng: &mut R, params: &AlgebraParams<T>) -> CoadjointVector<T> {
    let m = uni(rng, 0.5, 3.0);
    CoadjointVector::with_policy(
        params,
        m,
        uni(rng, -2.0, 2.0),
        uni(rng, -2.0, 2.0),
        vec2(rng, 2.0),
        vec2(rng, 2.0),
        vec2(rng, 2.0),
    )
}

/// Orbit point away from the chart singularity: intensity ∈ [0.5, 2],
/// |sin α| > 0.1, moderate q⃗, mom⃗.
pub fn orbit_point<T: Real, R: Rng + ?Sized>(rng: &mut R, family: Family) -> OrbitPoint<T> {
    let p = params::<T, _>(rng, family);
    orbit_point_for(rng, &p)
}

/// As [`orbit_point`], with h and the field products tied to `p`.
pub fn orbit_point_for<T: Real, R: Rng + ?Sized>(rng: &mut R, p: &AlgebraParams<T>) -> OrbitPoint<T> {
    let family = p.family();
    loop {
        let mut xi = coadjoint_vector(rng, p);
        let alpha: T = uni(rng, -3.1, 3.1);
        if alpha.sin().abs() <= T::lit(0.1) {
            continue;
        }
        let w = Vec2::polar(uni(rng, 0.5, 2.0), alpha);
        if family.is_para() {
            xi.p = w;
        } else {
            xi.f_or_i = w;
        }
        let fp = FieldParams::for_mass(xi.m, p.omega());
        if let Ok(pt) = from_coadjoint(&xi, &fp) {
            return pt;
        }
    }
}
