//! Extended group elements, cocycle multiplication, inverses and the adjoint
//! action of the quotient group.
//!
//! Galilei element g = (θ, v⃗, x⃗, t, η⃗, ξ, φ); Para-Galilei uses l⃗ in the
//! `aux` slot. σ below is the Para-Galilei ±.

use crate::algebra::{AlgebraElement, AlgebraParams};
use crate::conventions::Vec2;
use crate::error::{same_family, Result};
use crate::family::Family;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtendedGroupElement<T> {
    pub family: Family,
    pub theta: T,
    pub v: Vec2<T>,
    pub x: Vec2<T>,
    pub t: T,
    /// η⃗ (Galilei) or l⃗ (Para-Galilei).
    pub aux: Vec2<T>,
    pub xi: T,
    pub phi: T,
}

impl<T: Real> ExtendedGroupElement<T> {
    pub fn identity(family: Family) -> Self {
        identity(family)
    }

    pub fn rotation(family: Family, theta: T) -> Self {
        ExtendedGroupElement { theta, ..identity(family) }
    }

    pub fn time_translation(family: Family, t: T) -> Self {
        ExtendedGroupElement { t, ..identity(family) }
    }

    pub fn to_array(&self) -> [T; 10] {
        [
            self.theta, self.v.0, self.v.1, self.x.0, self.x.1, self.t, self.aux.0, self.aux.1,
            self.xi, self.phi,
        ]
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.to_array()
            .iter()
            .zip(o.to_array())
            .fold(T::zero(), |m, (a, b)| m.max((*a - b).abs()))
    }
}

pub fn identity<T: Real>(family: Family) -> ExtendedGroupElement<T> {
    ExtendedGroupElement {
        family,
        theta: T::zero(),
        v: Vec2::zero(),
        x: Vec2::zero(),
        t: T::zero(),
        aux: Vec2::zero(),
        xi: T::zero(),
        phi: T::zero(),
    }
}

pub fn multiply<T: Real>(
    params: &AlgebraParams<T>,
    g1: &ExtendedGroupElement<T>,
    g2: &ExtendedGroupElement<T>,
) -> Result<ExtendedGroupElement<T>> {
    same_family(params.family(), g1.family)?;
    same_family(g1.family, g2.family)?;
    let half = T::half();
    let (th, v, x, t) = (g1.theta, g1.v, g1.x, g1.t);
    let rot = |u: Vec2<T>| u.rotate(th);
    let unrot = |u: Vec2<T>| u.rotate(-th);

    Ok(if g1.family.is_para() {
        let w2 = params.sigma() * params.omega() * params.omega();
        let r2 = params.r() * params.r();
        ExtendedGroupElement {
            family: g1.family,
            theta: th + g2.theta,
            v: rot(g2.v) + v + x * (w2 * g2.t),
            x: rot(g2.x) + x,
            t: t + g2.t,
            aux: g1.aux + rot(g2.aux) + ((v - x * (w2 * t)) * g2.t - rot(g2.v) * t) * half,
            xi: g1.xi + g2.xi - unrot(x).dot(g2.v) - w2 * half * x.norm_sq() * g2.t,
            phi: g1.phi + g2.phi + unrot(x).cross(g2.x) / (T::lit(2.0) * r2),
        }
    } else {
        let c2 = params.c() * params.c();
        ExtendedGroupElement {
            family: g1.family,
            theta: th + g2.theta,
            v: rot(g2.v) + v,
            x: rot(g2.x) + v * g2.t + x,
            t: t + g2.t,
            aux: rot(g2.aux) + g1.aux + ((x - v * t) * g2.t - rot(g2.x) * t) * half,
            xi: g1.xi + g2.xi + unrot(v).dot(g2.x) + half * v.norm_sq() * g2.t,
            phi: g1.phi + g2.phi + unrot(v).cross(g2.v) / (T::lit(2.0) * c2),
        }
    })
}

/// Closed-form inverse, back-substituted through the multiplication law.
pub fn inverse<T: Real>(
    params: &AlgebraParams<T>,
    g: &ExtendedGroupElement<T>,
) -> Result<ExtendedGroupElement<T>> {
    same_family(params.family(), g.family)?;
    let (th, v, x, t) = (g.theta, g.v, g.x, g.t);
    let unrot = |u: Vec2<T>| u.rotate(-th);
    let half = T::half();

    Ok(if g.family.is_para() {
        let w2 = params.sigma() * params.omega() * params.omega();
        ExtendedGroupElement {
            family: g.family,
            theta: -th,
            v: unrot(x * (w2 * t) - v),
            x: -unrot(x),
            t: -t,
            aux: -unrot(g.aux),
            xi: -g.xi - v.dot(x) + w2 * t * half * x.norm_sq(),
            phi: -g.phi,
        }
    } else {
        ExtendedGroupElement {
            family: g.family,
            theta: -th,
            v: -unrot(v),
            x: unrot(v * t - x),
            t: -t,
            aux: -unrot(g.aux),
            xi: -g.xi + v.dot(x) - t * half * v.norm_sq(),
            phi: -g.phi,
        }
    })
}

/// Ad_g X on the coefficient vector (δθ, δv⃗, δx⃗, δaux, δt, δξ, δφ).
pub fn adjoint_action<T: Real>(
    params: &AlgebraParams<T>,
    g: &ExtendedGroupElement<T>,
    xel: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    same_family(params.family(), g.family)?;
    let (th, v, x, t) = (g.theta, g.v, g.x, g.t);
    let rot = |u: Vec2<T>| u.rotate(th);
    let unrot = |u: Vec2<T>| u.rotate(-th);
    let half = T::half();
    let two = T::lit(2.0);
    let (dth, dv, dx, da, dt) = (xel.dtheta(), xel.dv(), xel.dx(), xel.daux(), xel.dt());

    Ok(if g.family.is_para() {
        let w2 = params.sigma() * params.omega() * params.omega();
        let r2 = params.r() * params.r();
        let u = v - x * (w2 * t);
        AlgebraElement::from_parts(
            dth,
            rot(dv) + x * (w2 * dt) + u.eps() * dth - rot(dx) * (w2 * t),
            rot(dx) + x.eps() * dth,
            rot(da) - rot(dv) * t + rot(dx) * (w2 * t * t * half) + u * dt
                + (g.aux - u * (t * half)).eps() * dth,
            dt,
            xel.dxi() - unrot(x).dot(dv) + unrot(v).dot(dx) - w2 * half * x.norm_sq() * dt
                + v.cross(x) * dth,
            xel.dphi() + unrot(x).cross(dx) / r2 - x.norm_sq() * dth / (two * r2),
        )
    } else {
        let c2 = params.c() * params.c();
        AlgebraElement::from_parts(
            dth,
            rot(dv) + v.eps() * dth,
            rot(dx) + v * dt + (x - v * t).eps() * dth - rot(dv) * t,
            rot(da) - rot(dx) * t + (x - v * t) * dt
                + (g.aux - x * (t * half) + v * (t * t * half)).eps() * dth
                + rot(dv) * (t * t * half),
            dt,
            xel.dxi() + unrot(v).dot(dx) - unrot(x).dot(dv) + half * v.norm_sq() * dt
                + v.cross(x) * dth,
            xel.dphi() + unrot(v).cross(dv) / c2 - v.norm_sq() * dth / (two * c2),
        )
    })
}
