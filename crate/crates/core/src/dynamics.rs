//! Hamiltonians, flow coefficients, closed-form and integrated flows, the
//! symplectic realization of the full group, and Newton-law checks.
//!
//!   Galilei  H = p²/2m − f⃗·q⃗ + e*B* p⃗×f⃗            (= E − U)
//!            K = m f⃗×q⃗ − e*B* m p⃗·f⃗,   N = f⃗×p⃗ − e*B* m f²
//!   Para     H = I⃗·p⃗/m ∓ mω²q²/2 + (eB/m) q⃗×p⃗     (= E − U±)
//!            K = I⃗×p⃗ − eB p⃗·q⃗,         N = ±mω² q⃗×p⃗ − eB p²/m
//! and ds/dt = K(t)/m with K(t) = K + N t.

use crate::algebra::AlgebraParams;
use crate::coadjoint::{casimirs, coadjoint_action};
use crate::conventions::Vec2;
use crate::error::{same_family, Error, Result};
use crate::family::Family;
use crate::groups::ExtendedGroupElement;
use crate::orbit::{from_coadjoint, to_coadjoint, Coords, OrbitPoint};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlowCoefficients<T> {
    pub k: T,
    pub n: T,
    /// K/m, an energy.
    pub e0: T,
    /// N/m, a power.
    pub p0: T,
}

impl<T: Real> FlowCoefficients<T> {
    /// K(t) = K + N t.
    pub fn k_at(&self, t: T) -> T {
        self.k + self.n * t
    }
}

pub fn flow_coefficients<T: Real>(pt: &OrbitPoint<T>) -> FlowCoefficients<T> {
    let m = pt.m();
    let w = pt.intensity_vector();
    let (k, n) = if pt.family.is_para() {
        let (i, p, q) = (pt.mom, w, pt.q);
        let sigma: T = pt.family.sign();
        let om2 = pt.fields.omega * pt.fields.omega;
        (
            i.cross(p) - pt.fields.eb * p.dot(q),
            sigma * m * om2 * q.cross(p) - pt.fields.eb * p.norm_sq() / m,
        )
    } else {
        let (p, f, q) = (pt.mom, w, pt.q);
        let gb = pt.fields.estar_bstar;
        (m * f.cross(q) - gb * m * p.dot(f), f.cross(p) - gb * m * f.norm_sq())
    };
    FlowCoefficients { k, n, e0: k / m, p0: n / m }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianBreakdown<T> {
    pub kinetic: T,
    pub potential: T,
    pub exotic: T,
    pub total: T,
    /// ±1/(mω²), Para-Galilei only.
    pub compliance: Option<T>,
}

pub fn hamiltonian<T: Real>(pt: &OrbitPoint<T>) -> HamiltonianBreakdown<T> {
    let m = pt.m();
    let w = pt.intensity_vector();
    let half = T::half();
    let (kinetic, potential, exotic, compliance) = if pt.family.is_para() {
        let sigma: T = pt.family.sign();
        let om2 = pt.fields.omega * pt.fields.omega;
        (
            pt.mom.dot(w) / m,
            -sigma * m * om2 * half * pt.q.norm_sq(),
            pt.fields.eb / m * pt.q.cross(w),
            Some(sigma / (m * om2)),
        )
    } else {
        (
            pt.mom.norm_sq() / (T::lit(2.0) * m),
            -w.dot(pt.q),
            pt.fields.estar_bstar * pt.mom.cross(w),
            None,
        )
    };
    HamiltonianBreakdown {
        kinetic,
        potential,
        exotic,
        total: kinetic + potential + exotic,
        compliance,
    }
}

/// H as a function of the chart coordinates, for bracket evaluation.
pub fn hamiltonian_function<T: Real>(pt: &OrbitPoint<T>) -> impl Fn(&Coords<T>) -> T + '_ {
    move |z| hamiltonian(&pt.with_coords(z)).total
}

/// (ṡ, α̇, q̇⃗, ṁom⃗) = (K/m, 0, p⃗/m, f⃗)  or  (K/m, 0, p⃗/m, ±mω²q⃗).
pub fn hamiltonian_vector_field<T: Real>(pt: &OrbitPoint<T>) -> Coords<T> {
    let fc = flow_coefficients(pt);
    let m = pt.m();
    let w = pt.intensity_vector();
    let (qdot, momdot) = if pt.family.is_para() {
        let sigma: T = pt.family.sign();
        (w / m, pt.q * (sigma * m * pt.fields.omega * pt.fields.omega))
    } else {
        (pt.mom / m, w)
    };
    [fc.e0, T::zero(), qdot.0, qdot.1, momdot.0, momdot.1]
}

/// Exact polynomial flow; K and N are taken at `pt`.
pub fn closed_form_flow<T: Real>(pt: &OrbitPoint<T>, t: T) -> OrbitPoint<T> {
    let fc = flow_coefficients(pt);
    let m = pt.m();
    let w = pt.intensity_vector();
    let tm = t / m;
    let t2m = t * t / (T::lit(2.0) * m);
    let s = pt.s + fc.k * tm + fc.n * t2m;
    if pt.family.is_para() {
        let sigma: T = pt.family.sign();
        let om2 = pt.fields.omega * pt.fields.omega;
        OrbitPoint {
            s,
            q: pt.q + w * tm,
            mom: pt.mom + pt.q * (sigma * m * om2 * t) + w * (sigma * om2 * t * t * T::half()),
            ..*pt
        }
    } else {
        OrbitPoint { s, q: pt.q + pt.mom * tm + w * t2m, mom: pt.mom + w * t, ..*pt }
    }
}

/// D_g on the chart, in closed form.
///   Galilei: α′ = α+θ, p⃗′ = Rp⃗ + tRf⃗ − mv⃗,
///            q⃗′ = Rq⃗ + (Rp⃗ − mv⃗)t/m + Rf⃗ t²/2m + x⃗ + e*B* m ε(v⃗),
///            s′ = s + Kt/m + Nt²/2m + (η⃗ − x⃗t/2 + v⃗t²/2)×Rf⃗
///   Para:    α′ = α+θ, q⃗′ = Rq⃗ + Rp⃗ t/m + x⃗,
///            I⃗′ = RI⃗ ± mω²(Rq⃗ + x⃗)t ± ω²Rp⃗ t²/2 + eB ε(x⃗) − mv⃗,
///            s′ = s + Kt/m + Nt²/2m + (l⃗ − v⃗t/2 ± ω²t²x⃗/2)×Rp⃗
pub fn symplectic_realization<T: Real>(
    g: &ExtendedGroupElement<T>,
    pt: &OrbitPoint<T>,
) -> Result<OrbitPoint<T>> {
    same_family(pt.family, g.family)?;
    let fc = flow_coefficients(pt);
    let m = pt.m();
    let (th, v, x, t) = (g.theta, g.v, g.x, g.t);
    let rot = |u: Vec2<T>| u.rotate(th);
    let half = T::half();
    let tm = t / m;
    let t2m = t * t / (T::lit(2.0) * m);
    let rw = rot(pt.intensity_vector());
    let s_flow = pt.s + fc.k * tm + fc.n * t2m;
    Ok(if pt.family.is_para() {
        let sigma: T = pt.family.sign();
        let om2 = pt.fields.omega * pt.fields.omega;
        let (rq, ri) = (rot(pt.q), rot(pt.mom));
        OrbitPoint {
            alpha: pt.alpha + th,
            q: rq + rw * tm + x,
            mom: ri + (rq + x) * (sigma * m * om2 * t) + rw * (sigma * om2 * t * t * half)
                + x.eps() * pt.fields.eb
                - v * m,
            s: s_flow + (g.aux - v * (t * half) + x * (sigma * om2 * t * t * half)).cross(rw),
            ..*pt
        }
    } else {
        let (rq, rp) = (rot(pt.q), rot(pt.mom));
        OrbitPoint {
            alpha: pt.alpha + th,
            q: rq + (rp - v * m) * tm + rw * t2m + x + v.eps() * (pt.fields.estar_bstar * m),
            mom: rp + rw * t - v * m,
            s: s_flow + (g.aux - x * (t * half) + v * (t * t * half)).cross(rw),
            ..*pt
        }
    })
}

/// The same map computed the long way: chart⁻¹, Ad*_g, chart. `params` must
/// be the ones the point's h was built from (h = mc²/ω, and c = ωr on
/// Para-Galilei orbits).
pub fn realization_via_coadjoint<T: Real>(
    params: &AlgebraParams<T>,
    g: &ExtendedGroupElement<T>,
    pt: &OrbitPoint<T>,
) -> Result<OrbitPoint<T>> {
    let xi = to_coadjoint(pt)?;
    let moved = coadjoint_action(params, g, &xi)?;
    let mut out = from_coadjoint(&moved, &pt.fields)?;
    // keep α on the unwrapped branch of the input
    let two_pi = T::lit(2.0) * T::PI();
    let target = pt.alpha + g.theta;
    out.alpha = out.alpha + ((target - out.alpha) / two_pi).round() * two_pi;
    out.casimir = pt.casimir;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample<T> {
    pub t: T,
    pub point: OrbitPoint<T>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Drift<T> {
    pub h: T,
    pub u: T,
    pub intensity: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<T> {
    pub samples: Vec<Sample<T>>,
    pub drift: Vec<Drift<T>>,
}

impl<T: Real> Trajectory<T> {
    /// Annotates samples with drift relative to the first one.
    pub fn from_samples(samples: Vec<Sample<T>>) -> Result<Self> {
        let first = samples[0].point;
        let h0 = hamiltonian(&first).total;
        let c0 = casimirs(&to_coadjoint(&first)?, &first.fields)?;
        let drift = samples
            .iter()
            .map(|s| {
                let c = casimirs(&to_coadjoint(&s.point)?, &s.point.fields)?;
                Ok(Drift {
                    h: (hamiltonian(&s.point).total - h0).abs(),
                    u: (c.u - c0.u).abs(),
                    intensity: (c.intensity - c0.intensity).abs(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Trajectory { samples, drift })
    }

    pub fn max_h_drift(&self) -> T {
        self.drift.iter().fold(T::zero(), |m, d| m.max(d.h))
    }

    pub fn max_casimir_drift(&self) -> T {
        self.drift.iter().fold(T::zero(), |m, d| m.max(d.u).max(d.intensity))
    }

    pub fn last(&self) -> &Sample<T> {
        self.samples.last().expect("trajectory is never empty")
    }
}

/// Sample times 0, dt, 2dt, …, t_end (the last step shortened if t_end is not
/// a multiple of dt).
pub fn time_grid<T: Real>(t_end: T, dt: T) -> Result<Vec<T>> {
    if !(dt > T::zero()) || !dt.is_finite() {
        return Err(Error::NonPositiveStep(dt.as_f64()));
    }
    if !(t_end >= T::zero()) || !t_end.is_finite() {
        return Err(Error::NegativeEndTime(t_end.as_f64()));
    }
    let ratio = t_end / dt;
    let rounded = ratio.round();
    let n = if (ratio - rounded).abs() <= T::lit(1e-9) * T::one().max(ratio) {
        rounded
    } else {
        ratio.ceil()
    };
    let n = n.to_usize().unwrap_or(0);
    let mut ts: Vec<T> = (0..n).map(|i| T::from_usize(i).unwrap() * dt).collect();
    ts.push(t_end);
    Ok(ts)
}

fn rk4_step<T: Real>(pt: &OrbitPoint<T>, h: T) -> OrbitPoint<T> {
    let z = pt.coords();
    let field = |z: &Coords<T>| hamiltonian_vector_field(&pt.with_coords(z));
    let shift = |z: &Coords<T>, k: &Coords<T>, a: T| -> Coords<T> {
        let mut out = *z;
        for i in 0..6 {
            out[i] += a * k[i];
        }
        out
    };
    let half = T::half();
    let k1 = field(&z);
    let k2 = field(&shift(&z, &k1, h * half));
    let k3 = field(&shift(&z, &k2, h * half));
    let k4 = field(&shift(&z, &k3, h));
    let sixth = h / T::lit(6.0);
    let mut out = z;
    for i in 0..6 {
        out[i] += sixth * (k1[i] + T::lit(2.0) * (k2[i] + k3[i]) + k4[i]);
    }
    pt.with_coords(&out)
}

/// Classical fixed-step RK4 on the Hamiltonian vector field.
pub fn integrate<T: Real>(pt: &OrbitPoint<T>, t_end: T, dt: T) -> Result<Trajectory<T>> {
    pt.validate()?;
    let ts = time_grid(t_end, dt)?;
    let mut samples = Vec::with_capacity(ts.len());
    let mut cur = *pt;
    samples.push(Sample { t: ts[0], point: cur });
    for w in ts.windows(2) {
        cur = rk4_step(&cur, w[1] - w[0]);
        samples.push(Sample { t: w[1], point: cur });
    }
    Trajectory::from_samples(samples)
}

/// The closed-form flow sampled on the same grid as [`integrate`].
pub fn closed_form_trajectory<T: Real>(pt: &OrbitPoint<T>, t_end: T, dt: T) -> Result<Trajectory<T>> {
    pt.validate()?;
    let samples = time_grid(t_end, dt)?
        .into_iter()
        .map(|t| Sample { t, point: closed_form_flow(pt, t) })
        .collect();
    Trajectory::from_samples(samples)
}

/// Largest deviations of the finite-difference Newton laws from their
/// right-hand sides. `None` where a law does not apply to the family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonReport<T> {
    pub family: Family,
    pub samples: usize,
    /// |d²q⃗/dt² − f⃗/m| (Galilei).
    pub q_accel: Option<T>,
    /// |d²s/dt² − N/m|.
    pub s_accel: T,
    /// |d²I⃗/dt² − (±ω²p⃗)| (Para-Galilei).
    pub i_accel: Option<T>,
    /// |dq⃗/dt − C d²I⃗/dt²| (Para-Galilei).
    pub compliance: Option<T>,
}

impl<T: Real> NewtonReport<T> {
    pub fn max_deviation(&self) -> T {
        [self.q_accel, Some(self.s_accel), self.i_accel, self.compliance]
            .into_iter()
            .flatten()
            .fold(T::zero(), |m, x| m.max(x))
    }
}

pub fn newton_check<T: Real>(traj: &Trajectory<T>) -> Result<NewtonReport<T>> {
    let n = traj.samples.len();
    if n < 3 {
        return Err(Error::InsufficientSamples(n));
    }
    let dt = traj.samples[1].t - traj.samples[0].t;
    let uniform = traj.samples.windows(2).all(|w| {
        ((w[1].t - w[0].t) - dt).abs() <= T::lit(1e-9) * T::one().max(dt.abs())
    });
    if !uniform || !(dt > T::zero()) {
        return Err(Error::NonUniformSampling);
    }
    let first = traj.samples[0].point;
    let family = first.family;
    let dt2 = dt * dt;
    let two = T::lit(2.0);
    let mut q_acc = T::zero();
    let mut s_acc = T::zero();
    let mut i_acc = T::zero();
    let mut comp = T::zero();
    for w in traj.samples.windows(3) {
        let (a, b, c) = (&w[0].point, &w[1].point, &w[2].point);
        let fc = flow_coefficients(b);
        let d2s = (c.s - two * b.s + a.s) / dt2;
        s_acc = s_acc.max((d2s - fc.p0).abs());
        let d2q = (c.q - b.q * two + a.q) / dt2;
        let d2mom = (c.mom - b.mom * two + a.mom) / dt2;
        let wv = b.intensity_vector();
        if family.is_para() {
            let sigma: T = family.sign();
            let om2 = b.fields.omega * b.fields.omega;
            i_acc = i_acc.max((d2mom - wv * (sigma * om2)).max_abs());
            let dq = (c.q - a.q) / (two * dt);
            let cmp = sigma / (b.m() * om2);
            comp = comp.max((dq - d2mom * cmp).max_abs());
        } else {
            q_acc = q_acc.max((d2q - wv / b.m()).max_abs());
        }
    }
    let para = family.is_para();
    Ok(NewtonReport {
        family,
        samples: n,
        q_accel: (!para).then_some(q_acc),
        s_accel: s_acc,
        i_accel: para.then_some(i_acc),
        compliance: para.then_some(comp),
    })
}
