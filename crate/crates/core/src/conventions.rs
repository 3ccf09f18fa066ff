//! Planar conventions shared by every module.
//!
//! The out-of-plane unit vector is ê₃ and cross products with it use the
//! ordinary right-handed rule: a⃗×ê₃ = (a², −a¹), ê₃×a⃗ = (−a², a¹).
//! The antisymmetric symbols all have (1,2) entry = +1, so that
//! `eps_vec(v) = (v², −v¹) = ε^i_j v^j`.
//!
//! Rotation brackets pair indices the other way round: [J, X_j] = ε^j_i X_i,
//! i.e. [J,X₁] = X₂ and [J,X₂] = −X₁. That is what conjugation by exp(θJ)
//! produces for the group law (R(θ) acting on boosts and translations).

use crate::scalar::Real;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

pub type Mat2<T> = [[T; 2]; 2];

/// Planar vector (v¹, v²).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec2<T>(pub T, pub T);

impl<T: Real> Vec2<T> {
    #[inline]
    pub fn new(a: T, b: T) -> Self {
        Vec2(a, b)
    }

    #[inline]
    pub fn zero() -> Self {
        Vec2(T::zero(), T::zero())
    }

    /// `r·(cos α, sin α)`.
    #[inline]
    pub fn polar(r: T, alpha: T) -> Self {
        Vec2(r * alpha.cos(), r * alpha.sin())
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.0 * o.0 + self.1 * o.1
    }

    /// Planar cross product a¹b² − a²b¹.
    #[inline]
    pub fn cross(self, o: Self) -> T {
        cross2(self, o)
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.0.hypot(self.1)
    }

    /// atan2(v², v¹), in (−π, π].
    #[inline]
    pub fn angle(self) -> T {
        self.1.atan2(self.0)
    }

    /// R(θ)v.
    #[inline]
    pub fn rotate(self, theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Vec2(c * self.0 - s * self.1, s * self.0 + c * self.1)
    }

    /// ε(v) = (v², −v¹) = v⃗×ê₃.
    #[inline]
    pub fn eps(self) -> Self {
        eps_vec(self)
    }

    /// ê₃×v⃗ = (−v², v¹).
    #[inline]
    pub fn z_cross(self) -> Self {
        Vec2(-self.1, self.0)
    }

    #[inline]
    pub fn max_abs(self) -> T {
        self.0.abs().max(self.1.abs())
    }

    #[inline]
    pub fn to_array(self) -> [T; 2] {
        [self.0, self.1]
    }

    #[inline]
    pub fn from_array(a: [T; 2]) -> Self {
        Vec2(a[0], a[1])
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Vec2(self.0 + o.0, self.1 + o.1)
    }
}

impl<T: Real> AddAssign for Vec2<T> {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        self.0 += o.0;
        self.1 += o.1;
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Vec2(self.0 - o.0, self.1 - o.1)
    }
}

impl<T: Real> SubAssign for Vec2<T> {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        self.0 -= o.0;
        self.1 -= o.1;
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Vec2(-self.0, -self.1)
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        Vec2(self.0 * s, self.1 * s)
    }
}

impl<T: Real> Div<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Vec2(self.0 / s, self.1 / s)
    }
}

impl<T> Index<usize> for Vec2<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        match i {
            0 => &self.0,
            1 => &self.1,
            _ => panic!("Vec2 index {i} out of range"),
        }
    }
}

pub fn rotation<T: Real>(theta: T) -> Mat2<T> {
    let (s, c) = theta.sin_cos();
    [[c, -s], [s, c]]
}

pub fn eps_vec<T: Real>(v: Vec2<T>) -> Vec2<T> {
    Vec2(v.1, -v.0)
}

/// ε^i_j with ε¹₂ = +1, ε²₁ = −1.
pub fn eps_mixed<T: Real>() -> Mat2<T> {
    [[T::zero(), T::one()], [-T::one(), T::zero()]]
}

/// ε_{ij}, (1,2) entry = +1.
pub fn eps_lower<T: Real>() -> Mat2<T> {
    eps_mixed()
}

/// ε^{ij}, (1,2) entry = +1.
pub fn eps_upper<T: Real>() -> Mat2<T> {
    eps_mixed()
}

pub fn kronecker<T: Real>() -> Mat2<T> {
    [[T::one(), T::zero()], [T::zero(), T::one()]]
}

pub fn cross2<T: Real>(a: Vec2<T>, b: Vec2<T>) -> T {
    a.0 * b.1 - a.1 * b.0
}

pub fn mat_vec<T: Real>(m: Mat2<T>, v: Vec2<T>) -> Vec2<T> {
    Vec2(m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

pub fn mat_mul<T: Real>(a: Mat2<T>, b: Mat2<T>) -> Mat2<T> {
    let mut out = [[T::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn transpose2<T: Real>(a: Mat2<T>) -> Mat2<T> {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn close(a: Mat2<f64>, b: Mat2<f64>, tol: f64) -> bool {
        (0..2).all(|i| (0..2).all(|j| (a[i][j] - b[i][j]).abs() < tol))
    }

    #[test]
    fn eps_vec_matches_example() {
        assert_eq!(eps_vec(Vec2(2.0, 0.0)), Vec2(0.0, -2.0));
        assert_eq!(Vec2(1.0, 2.0).z_cross(), Vec2(-2.0, 1.0));
    }

    #[test]
    fn cross_is_antisymmetric_and_oriented() {
        assert_eq!(cross2(Vec2(1.0, 0.0), Vec2(0.0, 1.0)), 1.0);
        assert_eq!(cross2(Vec2(0.0, 1.0), Vec2(1.0, 0.0)), -1.0);
    }

    #[test]
    fn quarter_turn() {
        let v = Vec2(1.0, 0.0).rotate(std::f64::consts::FRAC_PI_2);
        assert_abs_diff_eq!(v.0, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.1, 1.0, epsilon = 1e-15);
    }

    proptest! {
        #[test]
        fn eps_vec_is_mixed_contraction(a in -1e3..1e3f64, b in -1e3..1e3f64) {
            let v = Vec2(a, b);
            let e = mat_vec(eps_mixed(), v);
            prop_assert_eq!(eps_vec(v), e);
        }

        #[test]
        fn rotations_compose(t1 in -10.0..10.0f64, t2 in -10.0..10.0f64) {
            let lhs = mat_mul(rotation(t1), rotation(t2));
            prop_assert!(close(lhs, rotation(t1 + t2), 1e-12));
            let rtr = mat_mul(transpose2(rotation(t1)), rotation(t1));
            prop_assert!(close(rtr, kronecker(), 1e-14));
        }

        #[test]
        fn rotate_matches_matrix(t in -10.0..10.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64) {
            let v = Vec2(a, b);
            let d = v.rotate(t) - mat_vec(rotation(t), v);
            prop_assert!(d.max_abs() < 1e-14);
        }

        #[test]
        fn cross_is_rotation_invariant(t in -10.0..10.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64,
                                       c in -5.0..5.0f64, d in -5.0..5.0f64) {
            let (u, w) = (Vec2(a, b), Vec2(c, d));
            prop_assert!((u.rotate(t).cross(w.rotate(t)) - u.cross(w)).abs() < 1e-12);
        }
    }
}
