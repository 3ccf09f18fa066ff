//! Extended Lie algebras as dense structure-constant tensors.
//!
//! Basis order (both families): J, K₁, K₂, P₁, P₂, A₁, A₂, H, M, S where
//! A = F (Galilei force generators) or Π (Para-Galilei).
//! An element's coefficients are the adjoint-action parameters
//! (δθ, δv⃗, δx⃗, δη⃗ or δl⃗, δt, δξ, δφ) in that order.

use crate::coadjoint::CoadjointVector;
use crate::conventions::Vec2;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::scalar::Real;
use std::ops::{Add, Mul, Sub};

pub const DIM: usize = 10;

pub const J: usize = 0;
pub const K1: usize = 1;
pub const K2: usize = 2;
pub const P1: usize = 3;
pub const P2: usize = 4;
pub const A1: usize = 5;
pub const A2: usize = 6;
pub const H: usize = 7;
pub const M: usize = 8;
pub const S: usize = 9;

pub const GALILEI_LABELS: [&str; DIM] = ["J", "K1", "K2", "P1", "P2", "F1", "F2", "H", "M", "S"];
pub const PARA_LABELS: [&str; DIM] = ["J", "K1", "K2", "P1", "P2", "Pi1", "Pi2", "H", "M", "S"];

pub fn labels(family: Family) -> [&'static str; DIM] {
    if family.is_para() {
        PARA_LABELS
    } else {
        GALILEI_LABELS
    }
}

/// Kinematical constants. Construct through [`AlgebraParams::new`] so the
/// positivity checks run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraParams<T> {
    family: Family,
    c: T,
    r: T,
    omega: T,
}

impl<T: Real> AlgebraParams<T> {
    pub fn new(family: Family, c: T, r: T, omega: T) -> Result<Self> {
        for (name, v) in [("c", c), ("r", r), ("omega", omega)] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be positive and finite, got {v}"),
                });
            }
        }
        Ok(AlgebraParams { family, c, r, omega })
    }

    /// c = ωr, the choice that makes h/r² = eB on Para-Galilei orbits.
    pub fn with_linked_c(family: Family, r: T, omega: T) -> Result<Self> {
        Self::new(family, omega * r, r, omega)
    }

    pub fn unit(family: Family) -> Self {
        Self::new(family, T::one(), T::one(), T::one()).unwrap()
    }

    pub fn family(&self) -> Family {
        self.family
    }
    pub fn c(&self) -> T {
        self.c
    }
    pub fn r(&self) -> T {
        self.r
    }
    pub fn omega(&self) -> T {
        self.omega
    }
    /// ± for Para-Galilei.
    pub fn sigma(&self) -> T {
        self.family.sign()
    }
}

/// C^c_{ab}: coefficient of e_c in [e_a, e_b].
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<T> {
    family: Family,
    tensor: Vec<T>,
}

#[inline]
fn idx(a: usize, b: usize, c: usize) -> usize {
    (a * DIM + b) * DIM + c
}

impl<T: Real> StructureConstants<T> {
    fn empty(family: Family) -> Self {
        StructureConstants { family, tensor: vec![T::zero(); DIM * DIM * DIM] }
    }

    /// Sets [e_a, e_b] ∋ v·e_c and the antisymmetric partner.
    fn put(&mut self, a: usize, b: usize, c: usize, v: T) {
        self.tensor[idx(a, b, c)] = v;
        self.tensor[idx(b, a, c)] = -v;
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn labels(&self) -> [&'static str; DIM] {
        labels(self.family)
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> T {
        self.tensor[idx(a, b, c)]
    }

    /// Overwrites one raw entry without touching its antisymmetric partner.
    /// Only useful for building deliberately broken tensors in tests.
    pub fn with_raw_entry(mut self, a: usize, b: usize, c: usize, v: T) -> Self {
        self.tensor[idx(a, b, c)] = v;
        self
    }

    pub fn bracket(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        let mut out = [T::zero(); DIM];
        for a in 0..DIM {
            if x.coeffs[a] == T::zero() {
                continue;
            }
            for b in 0..DIM {
                let w = x.coeffs[a] * y.coeffs[b];
                if w == T::zero() {
                    continue;
                }
                for (c, o) in out.iter_mut().enumerate() {
                    *o += self.get(a, b, c) * w;
                }
            }
        }
        AlgebraElement { coeffs: out }
    }

    /// Max over (a,b,c,d) of |Σ_e C^e_ab C^d_ec + C^e_bc C^d_ea + C^e_ca C^d_eb|,
    /// also folding in the antisymmetry defect |C^c_ab + C^c_ba|. The cyclic sum
    /// alone is blind to a symmetric part sitting on a central generator.
    pub fn jacobi_residual(&self) -> T {
        let mut worst = self.antisymmetry_residual();
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    for d in 0..DIM {
                        let mut sum = T::zero();
                        for e in 0..DIM {
                            sum += self.get(a, b, e) * self.get(e, c, d)
                                + self.get(b, c, e) * self.get(e, a, d)
                                + self.get(c, a, e) * self.get(e, b, d);
                        }
                        worst = worst.max(sum.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn antisymmetry_residual(&self) -> T {
        let mut worst = T::zero();
        for a in 0..DIM {
            for b in 0..DIM {
                for c in 0..DIM {
                    worst = worst.max((self.get(a, b, c) + self.get(b, a, c)).abs());
                }
            }
        }
        worst
    }

    /// Nonzero entries as (a, b, c, value) with a < b.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, T)> {
        let mut out = Vec::new();
        for a in 0..DIM {
            for b in (a + 1)..DIM {
                for c in 0..DIM {
                    let v = self.get(a, b, c);
                    if v != T::zero() {
                        out.push((a, b, c, v));
                    }
                }
            }
        }
        out
    }
}

pub fn build_algebra<T: Real>(params: &AlgebraParams<T>) -> StructureConstants<T> {
    let mut cs = StructureConstants::empty(params.family);
    let one = T::one();
    // rotations: [J,X₁] = X₂, [J,X₂] = −X₁
    for (x1, x2) in [(K1, K2), (P1, P2), (A1, A2)] {
        cs.put(J, x1, x2, one);
        cs.put(J, x2, x1, -one);
    }
    cs.put(K1, P1, M, one);
    cs.put(K2, P2, M, one);
    if params.family.is_para() {
        let w2 = params.sigma() * params.omega * params.omega;
        cs.put(K1, H, A1, one);
        cs.put(K2, H, A2, one);
        cs.put(P1, H, K1, w2);
        cs.put(P2, H, K2, w2);
        cs.put(P1, P2, S, one / (params.r * params.r));
    } else {
        cs.put(K1, H, P1, one);
        cs.put(K2, H, P2, one);
        cs.put(P1, H, A1, one);
        cs.put(P2, H, A2, one);
        cs.put(K1, K2, S, one / (params.c * params.c));
    }
    cs
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraElement<T> {
    pub coeffs: [T; DIM],
}

impl<T: Real> AlgebraElement<T> {
    pub fn zero() -> Self {
        AlgebraElement { coeffs: [T::zero(); DIM] }
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs[i] = T::one();
        e
    }

    pub fn from_parts(
        dtheta: T,
        dv: Vec2<T>,
        dx: Vec2<T>,
        daux: Vec2<T>,
        dt: T,
        dxi: T,
        dphi: T,
    ) -> Self {
        AlgebraElement {
            coeffs: [dtheta, dv.0, dv.1, dx.0, dx.1, daux.0, daux.1, dt, dxi, dphi],
        }
    }

    pub fn dtheta(&self) -> T {
        self.coeffs[J]
    }
    pub fn dv(&self) -> Vec2<T> {
        Vec2(self.coeffs[K1], self.coeffs[K2])
    }
    pub fn dx(&self) -> Vec2<T> {
        Vec2(self.coeffs[P1], self.coeffs[P2])
    }
    /// δη⃗ (Galilei) or δl⃗ (Para-Galilei).
    pub fn daux(&self) -> Vec2<T> {
        Vec2(self.coeffs[A1], self.coeffs[A2])
    }
    pub fn dt(&self) -> T {
        self.coeffs[H]
    }
    pub fn dxi(&self) -> T {
        self.coeffs[M]
    }
    pub fn dphi(&self) -> T {
        self.coeffs[S]
    }

    pub fn max_abs(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        (*self - *o).max_abs()
    }
}

impl<T: Real> Add for AlgebraElement<T> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(o.coeffs) {
            *a += b;
        }
        self
    }
}

impl<T: Real> Sub for AlgebraElement<T> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(o.coeffs) {
            *a -= b;
        }
        self
    }
}

impl<T: Real> Mul<T> for AlgebraElement<T> {
    type Output = Self;
    fn mul(mut self, s: T) -> Self {
        self.coeffs.iter_mut().for_each(|a| *a *= s);
        self
    }
}

/// ⟨ξ, X⟩ = jδθ + k⃗·δv⃗ + (p⃗ | I⃗)·δx⃗ + (f⃗ | p⃗)·δaux + Eδt + mδξ + hδφ.
pub fn pairing<T: Real>(xi: &CoadjointVector<T>, x: &AlgebraElement<T>) -> T {
    let (xdual, auxdual) = xi.translation_and_aux_duals();
    xi.j * x.dtheta()
        + xi.k.dot(x.dv())
        + xdual.dot(x.dx())
        + auxdual.dot(x.daux())
        + xi.energy * x.dt()
        + xi.m * x.dxi()
        + xi.h * x.dphi()
}
