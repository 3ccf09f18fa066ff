//! Coadjoint vectors, the coadjoint action, Casimirs and Kirillov matrices.
//!
//! Galilei ξ = (h, m, j, E, k⃗, p⃗, f⃗) paired as jδθ + k⃗·δv⃗ + p⃗·δx⃗ + f⃗·δη⃗ + Eδt + mδξ + hδφ.
//! Para-Galilei ξ = (h, m, j, E, k⃗, p⃗, I⃗) paired as jδθ + k⃗·δv⃗ + I⃗·δx⃗ + p⃗·δl⃗ + ….

use crate::algebra::{self, pairing, AlgebraElement, AlgebraParams, StructureConstants};
use crate::conventions::Vec2;
use crate::error::{same_family, Error, Result};
use crate::family::Family;
use crate::groups::ExtendedGroupElement;
use crate::linalg::{invert6, zeros6, Mat6};
use crate::scalar::Real;

/// Default pivot tolerance on |f sin α| (resp. |p sin α|).
pub const DEFAULT_PIVOT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoadjointVector<T> {
    pub family: Family,
    pub h: T,
    pub m: T,
    pub j: T,
    pub energy: T,
    pub k: Vec2<T>,
    /// Linear momentum p⃗ (both families).
    pub p: Vec2<T>,
    /// Force f⃗ (Galilei) or I⃗ (Para-Galilei).
    pub f_or_i: Vec2<T>,
}

impl<T: Real> CoadjointVector<T> {
    /// Builds a vector with h = mc²/ω taken from `params`.
    #[allow(clippy::too_many_arguments)]
    pub fn with_policy(
        params: &AlgebraParams<T>,
        m: T,
        j: T,
        energy: T,
        k: Vec2<T>,
        p: Vec2<T>,
        f_or_i: Vec2<T>,
    ) -> Self {
        CoadjointVector {
            family: params.family(),
            h: m * params.c() * params.c() / params.omega(),
            m,
            j,
            energy,
            k,
            p,
            f_or_i,
        }
    }

    /// (dual of δx⃗, dual of δaux): (p⃗, f⃗) for Galilei, (I⃗, p⃗) for Para-Galilei.
    pub fn translation_and_aux_duals(&self) -> (Vec2<T>, Vec2<T>) {
        if self.family.is_para() {
            (self.f_or_i, self.p)
        } else {
            (self.p, self.f_or_i)
        }
    }

    /// The vector whose norm is the nontrivial intensity invariant: f⃗ or p⃗.
    pub fn intensity_vector(&self) -> Vec2<T> {
        if self.family.is_para() {
            self.p
        } else {
            self.f_or_i
        }
    }

    /// The chart momentum: p⃗ (Galilei) or I⃗ (Para-Galilei).
    pub fn chart_momentum(&self) -> Vec2<T> {
        if self.family.is_para() {
            self.f_or_i
        } else {
            self.p
        }
    }

    pub fn q(&self) -> Vec2<T> {
        self.k / self.m
    }

    pub fn to_array(&self) -> [T; 10] {
        [
            self.h, self.m, self.j, self.energy, self.k.0, self.k.1, self.p.0, self.p.1,
            self.f_or_i.0, self.f_or_i.1,
        ]
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.to_array()
            .iter()
            .zip(o.to_array())
            .fold(T::zero(), |m, (a, b)| m.max((*a - b).abs()))
    }
}

/// Field products. Only e*B* and eB are observable, so they are stored whole.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldParams<T> {
    pub estar_bstar: T,
    pub eb: T,
    pub omega: T,
}

impl<T: Real> FieldParams<T> {
    /// e*B* = 1/(mω), eB = mω.
    pub fn for_mass(m: T, omega: T) -> Self {
        FieldParams { estar_bstar: T::one() / (m * omega), eb: m * omega, omega }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CasimirSet<T> {
    pub m: T,
    pub h: T,
    /// ‖f⃗‖ (Galilei) or ‖p⃗‖ (Para-Galilei).
    pub intensity: T,
    pub u: T,
}

pub fn coadjoint_action<T: Real>(
    params: &AlgebraParams<T>,
    g: &ExtendedGroupElement<T>,
    xi: &CoadjointVector<T>,
) -> Result<CoadjointVector<T>> {
    same_family(params.family(), g.family)?;
    same_family(g.family, xi.family)?;
    let (th, v, x, t) = (g.theta, g.v, g.x, g.t);
    let rot = |u: Vec2<T>| u.rotate(th);
    let half = T::half();
    let m = xi.m;

    Ok(if xi.family.is_para() {
        let w2 = params.sigma() * params.omega() * params.omega();
        let h_r2 = xi.h / (params.r() * params.r());
        let (rk, rp, ri) = (rot(xi.k), rot(xi.p), rot(xi.f_or_i));
        CoadjointVector {
            p: rp,
            k: rk + rp * t + x * m,
            f_or_i: ri + rk * (w2 * t) + rp * (w2 * t * t * half) + x.eps() * h_r2
                - (v - x * (w2 * t)) * m,
            energy: xi.energy - w2 * x.dot(rk) - v.dot(rp) - w2 * m * half * x.norm_sq(),
            j: xi.j + x.cross(ri) + v.cross(rk) + g.aux.cross(rp) + (v * (t * half)).cross(rp)
                + m * v.cross(x)
                - h_r2 * half * x.norm_sq(),
            ..*xi
        }
    } else {
        let h_c2 = xi.h / (params.c() * params.c());
        let (rk, rp, rf) = (rot(xi.k), rot(xi.p), rot(xi.f_or_i));
        CoadjointVector {
            f_or_i: rf,
            p: rp + rf * t - v * m,
            k: rk + rp * t + rf * (t * t * half) + (x - v * t) * m + v.eps() * h_c2,
            energy: xi.energy - v.dot(rp) - x.dot(rf) + m * half * v.norm_sq(),
            j: xi.j + x.cross(rp) + v.cross(rk) + g.aux.cross(rf) + (x * (t * half)).cross(rf)
                + m * v.cross(x)
                - h_c2 * half * v.norm_sq(),
            ..*xi
        }
    })
}

fn check_mass<T: Real>(m: T) -> Result<()> {
    if m > T::zero() {
        Ok(())
    } else {
        Err(Error::NonPositiveMass(m.as_f64()))
    }
}

/// Galilei: U = E − p²/2m + f⃗·q⃗ + e*B* f⃗×p⃗.
/// Para-Galilei: U± = E ± mω²q²/2 − p⃗·I⃗/m + (eB/m) p⃗×q⃗.
pub fn casimirs<T: Real>(xi: &CoadjointVector<T>, fp: &FieldParams<T>) -> Result<CasimirSet<T>> {
    check_mass(xi.m)?;
    let m = xi.m;
    let q = xi.q();
    let half = T::half();
    let (intensity, u) = if xi.family.is_para() {
        let sigma: T = xi.family.sign();
        let i = xi.f_or_i;
        let u = xi.energy + sigma * m * fp.omega * fp.omega * half * q.norm_sq() - xi.p.dot(i) / m
            + fp.eb / m * xi.p.cross(q);
        (xi.p.norm(), u)
    } else {
        let f = xi.f_or_i;
        let u = xi.energy - xi.p.norm_sq() / (T::lit(2.0) * m) + f.dot(q)
            + fp.estar_bstar * f.cross(xi.p);
        (f.norm(), u)
    };
    Ok(CasimirSet { m, h: xi.h, intensity, u })
}

#[derive(Clone, Debug, PartialEq)]
pub struct KirillovMatrix<T> {
    pub family: Family,
    pub basis6: [usize; 6],
    pub entries: Mat6<T>,
}

impl<T: Real> KirillovMatrix<T> {
    pub fn labels(&self) -> [&'static str; 6] {
        let all = algebra::labels(self.family);
        self.basis6.map(|i| all[i])
    }
}

/// (J, F₁, K₁, P₁, K₂, P₂) for Galilei, (J, Π₁, K₁, P₁, K₂, P₂) for Para-Galilei.
/// Same indices in both cases since F and Π share the A slot.
pub fn orbit_basis(_family: Family) -> [usize; 6] {
    use algebra::{A1, J, K1, K2, P1, P2};
    [J, A1, K1, P1, K2, P2]
}

/// Ω_ab = ⟨ξ, [e_a, e_b]⟩.
pub fn kirillov_matrix<T: Real>(
    cs: &StructureConstants<T>,
    xi: &CoadjointVector<T>,
    basis6: [usize; 6],
) -> KirillovMatrix<T> {
    let mut entries = zeros6();
    for (i, &a) in basis6.iter().enumerate() {
        for (j, &b) in basis6.iter().enumerate() {
            let br = cs.bracket(&AlgebraElement::basis(a), &AlgebraElement::basis(b));
            entries[i][j] = pairing(xi, &br);
        }
    }
    KirillovMatrix { family: xi.family, basis6, entries }
}

/// The closed-form Ω in the orbit basis, written in terms of q⃗ = k⃗/m and the
/// field products.
pub fn closed_form_kirillov<T: Real>(xi: &CoadjointVector<T>, fp: &FieldParams<T>) -> Result<Mat6<T>> {
    check_mass(xi.m)?;
    let m = xi.m;
    let q = xi.q();
    let z = T::zero();
    Ok(if xi.family.is_para() {
        let (i, ps, eb) = (xi.f_or_i, xi.p.1, fp.eb);
        [
            [z, ps, m * q.1, i.1, -m * q.0, -i.0],
            [-ps, z, z, z, z, z],
            [-m * q.1, z, z, m, z, z],
            [-i.1, z, -m, z, z, eb],
            [m * q.0, z, z, z, z, m],
            [i.0, z, z, -eb, -m, z],
        ]
    } else {
        let (p, fs) = (xi.p, xi.f_or_i.1);
        let b = fp.estar_bstar * m * m;
        [
            [z, fs, m * q.1, p.1, -m * q.0, -p.0],
            [-fs, z, z, z, z, z],
            [-m * q.1, z, z, m, b, z],
            [-p.1, z, -m, z, z, z],
            [m * q.0, z, -b, z, z, m],
            [p.0, z, z, z, -m, z],
        ]
    })
}

fn pivot_check<T: Real>(pivot: T, tol: T) -> Result<()> {
    if pivot.abs() > tol {
        Ok(())
    } else {
        Err(Error::DegenerateOrbitPoint { pivot: pivot.as_f64(), tol: tol.as_f64() })
    }
}

/// Numeric inverse. The (J, A₁) entry is exactly f sin α (resp. p sin α), so
/// that is the pivot tested against `tol`.
pub fn invert_kirillov<T: Real>(om: &KirillovMatrix<T>, tol: T) -> Result<Mat6<T>> {
    let pivot = om.entries[0][1];
    pivot_check(pivot, tol)?;
    invert6(&om.entries, T::zero()).ok_or(Error::DegenerateOrbitPoint {
        pivot: pivot.as_f64(),
        tol: tol.as_f64(),
    })
}

/// The closed-form Ω⁻¹, prefactor 1/(f sin α) resp. 1/(p sin α) folded in.
pub fn closed_form_inverse<T: Real>(
    xi: &CoadjointVector<T>,
    fp: &FieldParams<T>,
) -> Result<Mat6<T>> {
    check_mass(xi.m)?;
    let m = xi.m;
    let q = xi.q();
    let z = T::zero();
    let one = T::one();
    let (pivot, mut out) = if xi.family.is_para() {
        let (i, ps, eb) = (xi.f_or_i, xi.p.1, fp.eb);
        (
            ps,
            [
                [z, -one, z, z, z, z],
                [one, z, -i.1 / m - eb * q.0 / m, q.1, i.0 / m - eb * q.1 / m, -q.0],
                [z, i.1 / m + eb * q.0 / m, z, -ps / m, eb * ps / (m * m), z],
                [z, -q.1, ps / m, z, z, z],
                [z, -i.0 / m + eb * q.1 / m, -eb * ps / (m * m), z, z, -ps / m],
                [z, q.0, z, z, ps / m, z],
            ],
        )
    } else {
        let (p, fs, gb) = (xi.p, xi.f_or_i.1, fp.estar_bstar);
        (
            fs,
            [
                [z, -one, z, z, z, z],
                [one, z, -p.1 / m, q.1 - gb * p.0, p.0 / m, -q.0 - gb * p.1],
                [z, p.1 / m, z, -fs / m, z, z],
                [z, -q.1 + gb * p.0, fs / m, z, z, gb * fs],
                [z, -p.0 / m, z, z, z, -fs / m],
                [z, q.0 + gb * p.1, z, -gb * fs, fs / m, z],
            ],
        )
    };
    pivot_check(pivot, T::lit(DEFAULT_PIVOT_TOL))?;
    out.iter_mut().flatten().for_each(|e| *e /= pivot);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::groups::identity;
    use crate::linalg::{identity6, matmul6, max_abs_diff6, transpose6};

    fn gal_xi(m: f64, k: Vec2<f64>, p: Vec2<f64>, f: Vec2<f64>, energy: f64) -> CoadjointVector<f64> {
        CoadjointVector::with_policy(&AlgebraParams::unit(Family::Galilei), m, 0.0, energy, k, p, f)
    }

    #[test]
    fn identity_leaves_vector_alone() {
        for fam in Family::ALL {
            let p = AlgebraParams::unit(fam);
            let xi = CoadjointVector::with_policy(&p, 1.5, 0.2, -1.0, Vec2(1.0, 2.0), Vec2(-0.5, 0.3), Vec2(0.7, 0.1));
            assert_eq!(coadjoint_action(&p, &identity(fam), &xi).unwrap(), xi);
        }
    }

    #[test]
    fn galilei_boost_example() {
        let p = AlgebraParams::unit(Family::Galilei);
        let xi = gal_xi(1.0, Vec2(0.3, 0.4), Vec2::zero(), Vec2::zero(), 1.0);
        let g = ExtendedGroupElement { v: Vec2(2.0, 0.0), ..identity(Family::Galilei) };
        let out = coadjoint_action(&p, &g, &xi).unwrap();
        assert_eq!(out.p, Vec2(-2.0, 0.0));
        assert_eq!(out.energy, 3.0);
        // k′ = k⃗ + (h/c²)ε(v⃗); with f⃗ = p⃗ = 0 only the h-term moves k
        assert_eq!(out.k, xi.k + Vec2(2.0, 0.0).eps() * xi.h);
    }

    #[test]
    fn para_translation_example() {
        let p = AlgebraParams::unit(Family::ParaGalileiPlus);
        let xi = CoadjointVector::with_policy(&p, 1.0, 0.0, 0.0, Vec2::zero(), Vec2::zero(), Vec2::zero());
        let g = ExtendedGroupElement { x: Vec2(1.0, 0.0), ..identity(Family::ParaGalileiPlus) };
        let out = coadjoint_action(&p, &g, &xi).unwrap();
        assert_eq!(out.f_or_i, Vec2(0.0, -1.0));
        assert_eq!(out.k, Vec2(1.0, 0.0));
        assert_eq!(out.energy, -0.5);
    }

    #[test]
    fn casimir_examples() {
        let fp = FieldParams { estar_bstar: 1.0, eb: 1.0, omega: 1.0 };
        let xi = gal_xi(1.0, Vec2::zero(), Vec2(1.0, 0.0), Vec2(0.0, 1.0), 2.0);
        let c = casimirs(&xi, &fp).unwrap();
        assert_eq!((c.intensity, c.u), (1.0, 0.5));

        let xi = gal_xi(1.0, Vec2::zero(), Vec2::zero(), Vec2::zero(), 3.25);
        assert_eq!(casimirs(&xi, &fp).unwrap().u, 3.25);

        let pp = AlgebraParams::unit(Family::ParaGalileiPlus);
        let xi = CoadjointVector::with_policy(&pp, 1.0, 0.0, 0.0, Vec2(1.0, 0.0), Vec2(0.0, 1.0), Vec2::zero());
        let c = casimirs(&xi, &fp).unwrap();
        assert_eq!((c.intensity, c.u), (1.0, -0.5));

        let bad = CoadjointVector { m: 0.0, ..xi };
        assert!(matches!(casimirs(&bad, &fp), Err(Error::NonPositiveMass(_))));
    }

    #[test]
    fn kirillov_row_example() {
        let p = AlgebraParams::unit(Family::Galilei);
        let xi = gal_xi(1.0, Vec2::zero(), Vec2(0.0, 1.0), Vec2(0.0, 1.0), 0.0);
        let om = kirillov_matrix(&build_algebra(&p), &xi, orbit_basis(Family::Galilei));
        assert_eq!(om.entries[0], [0.0, 1.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(om.entries[2][4], 1.0);
        assert_eq!(om.labels(), ["J", "F1", "K1", "P1", "K2", "P2"]);
        let sum = max_abs_diff6(&om.entries, &crate::linalg::scale6(&transpose6(&om.entries), -1.0));
        assert_eq!(sum, 0.0);

        let inv = invert_kirillov(&om, DEFAULT_PIVOT_TOL).unwrap();
        assert!((inv[0][1] + 1.0).abs() < 1e-12);
        let fp = FieldParams::for_mass(1.0, 1.0);
        let cf = closed_form_inverse(&xi, &fp).unwrap();
        assert_eq!(cf[2][3], -1.0);
        assert!(max_abs_diff6(&matmul6(&om.entries, &inv), &identity6()) < 1e-12);
    }

    #[test]
    fn para_closed_form_entry() {
        let pp = AlgebraParams::unit(Family::ParaGalileiPlus);
        let xi = CoadjointVector::with_policy(&pp, 1.0, 0.0, 0.0, Vec2(1.0, 0.0), Vec2(0.0, 1.0), Vec2::zero());
        let cf = closed_form_inverse(&xi, &FieldParams::for_mass(1.0, 1.0)).unwrap();
        assert_eq!(cf[1][2], -1.0);
    }

    #[test]
    fn degenerate_angle_is_rejected() {
        let p = AlgebraParams::unit(Family::Galilei);
        let xi = gal_xi(1.0, Vec2::zero(), Vec2(0.0, 1.0), Vec2(1.0, 0.0), 0.0);
        let om = kirillov_matrix(&build_algebra(&p), &xi, orbit_basis(Family::Galilei));
        assert!(matches!(invert_kirillov(&om, 1e-9), Err(Error::DegenerateOrbitPoint { .. })));
        assert!(closed_form_inverse(&xi, &FieldParams::for_mass(1.0, 1.0)).is_err());
    }
}
