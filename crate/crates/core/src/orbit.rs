//! Orbit chart (s, α, q⃗, mom⃗), potentials, the noncommutative Poisson
//! bilinear and canonical coordinates.
//!
//! mom⃗ is p⃗ on Galilei orbits and I⃗ on Para-Galilei orbits. The intensity
//! vector (f⃗ resp. p⃗) is not a chart coordinate: it is `intensity·(cos α, sin α)`.
//!
//! Chart action coordinate:
//!   Galilei       s = j + p⃗×q⃗ − e*B* p²/2   ( = j + p⃗×(q⃗ − e*A⃗*) )
//!   Para-Galilei  s = j + I⃗×q⃗ − eB q²/2     ( = j − q⃗×(I⃗ + eA⃗) )
//! With these, (s, α) is a Darboux pair and the bilinear below is exactly the
//! orbit bracket.

use crate::coadjoint::{casimirs, CasimirSet, CoadjointVector, FieldParams};
use crate::conventions::{eps_lower, eps_mixed, eps_upper, Mat2, Vec2};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::linalg::{matmul6, transpose6, zeros6, Mat6};
use crate::scalar::Real;

pub const S: usize = 0;
pub const ALPHA: usize = 1;
pub const Q1: usize = 2;
pub const Q2: usize = 3;
pub const MOM1: usize = 4;
pub const MOM2: usize = 5;

pub const COORD_NAMES: [&str; 6] = ["s", "alpha", "q1", "q2", "mom1", "mom2"];

pub type Coords<T> = [T; 6];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitPoint<T> {
    pub family: Family,
    pub s: T,
    pub alpha: T,
    pub q: Vec2<T>,
    pub mom: Vec2<T>,
    pub casimir: CasimirSet<T>,
    pub fields: FieldParams<T>,
}

impl<T: Real> OrbitPoint<T> {
    pub fn coords(&self) -> Coords<T> {
        [self.s, self.alpha, self.q.0, self.q.1, self.mom.0, self.mom.1]
    }

    pub fn with_coords(&self, z: &Coords<T>) -> Self {
        OrbitPoint {
            s: z[S],
            alpha: z[ALPHA],
            q: Vec2(z[Q1], z[Q2]),
            mom: Vec2(z[MOM1], z[MOM2]),
            ..*self
        }
    }

    pub fn m(&self) -> T {
        self.casimir.m
    }

    /// f⃗ (Galilei) or p⃗ (Para-Galilei), rebuilt from (intensity, α).
    pub fn intensity_vector(&self) -> Vec2<T> {
        Vec2::polar(self.casimir.intensity, self.alpha)
    }

    /// Checks the chart preconditions: m > 0 and intensity > 0.
    pub fn validate(&self) -> Result<()> {
        if !(self.casimir.m > T::zero()) {
            return Err(Error::NonPositiveMass(self.casimir.m.as_f64()));
        }
        if !(self.casimir.intensity > T::zero()) {
            return Err(Error::ZeroIntensity);
        }
        Ok(())
    }

    /// Pivot of the closed-form Ω⁻¹: intensity·sin α.
    pub fn pivot(&self) -> T {
        self.casimir.intensity * self.alpha.sin()
    }

    pub fn max_abs_diff(&self, o: &Self) -> T {
        self.coords()
            .iter()
            .zip(o.coords())
            .fold(T::zero(), |m, (a, b)| m.max((*a - b).abs()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Potentials<T> {
    /// e*A⃗* = ½e*B* ê₃×p⃗ (Galilei; zero otherwise).
    pub astar: Vec2<T>,
    /// eA⃗ = ½eB ê₃×q⃗ (Para-Galilei; zero otherwise).
    pub a: Vec2<T>,
    /// G^{ij} = e*B* ε^{ij}.
    pub g_upper: Mat2<T>,
    /// F_{ij} = eB ε_{ij}.
    pub f_lower: Mat2<T>,
}

fn scaled<T: Real>(m: Mat2<T>, s: T) -> Mat2<T> {
    [[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]]
}

pub fn potentials<T: Real>(pt: &OrbitPoint<T>) -> Potentials<T> {
    let half = T::half();
    let z = [[T::zero(); 2]; 2];
    if pt.family.is_para() {
        Potentials {
            astar: Vec2::zero(),
            a: pt.q.z_cross() * (half * pt.fields.eb),
            g_upper: z,
            f_lower: scaled(eps_lower(), pt.fields.eb),
        }
    } else {
        Potentials {
            astar: pt.mom.z_cross() * (half * pt.fields.estar_bstar),
            a: Vec2::zero(),
            g_upper: scaled(eps_upper(), pt.fields.estar_bstar),
            f_lower: z,
        }
    }
}

pub fn from_coadjoint<T: Real>(xi: &CoadjointVector<T>, fp: &FieldParams<T>) -> Result<OrbitPoint<T>> {
    let casimir = casimirs(xi, fp)?;
    if !(casimir.intensity > T::zero()) {
        return Err(Error::ZeroIntensity);
    }
    let q = xi.q();
    let mom = xi.chart_momentum();
    let half = T::half();
    let s = if xi.family.is_para() {
        xi.j + mom.cross(q) - half * fp.eb * q.norm_sq()
    } else {
        xi.j + mom.cross(q) - half * fp.estar_bstar * mom.norm_sq()
    };
    Ok(OrbitPoint {
        family: xi.family,
        s,
        alpha: xi.intensity_vector().angle(),
        q,
        mom,
        casimir,
        fields: *fp,
    })
}

pub fn to_coadjoint<T: Real>(pt: &OrbitPoint<T>) -> Result<CoadjointVector<T>> {
    pt.validate()?;
    let (m, q, mom) = (pt.m(), pt.q, pt.mom);
    let w = pt.intensity_vector();
    let fp = &pt.fields;
    let half = T::half();
    let u = pt.casimir.u;
    let (j, energy, p, f_or_i) = if pt.family.is_para() {
        let sigma: T = pt.family.sign();
        let j = pt.s - mom.cross(q) + half * fp.eb * q.norm_sq();
        let e = u - sigma * m * fp.omega * fp.omega * half * q.norm_sq() + w.dot(mom) / m
            - fp.eb / m * w.cross(q);
        (j, e, w, mom)
    } else {
        let j = pt.s - mom.cross(q) + half * fp.estar_bstar * mom.norm_sq();
        let e = u + mom.norm_sq() / (T::lit(2.0) * m) - w.dot(q) - fp.estar_bstar * w.cross(mom);
        (j, e, mom, w)
    };
    Ok(CoadjointVector {
        family: pt.family,
        h: pt.casimir.h,
        m,
        j,
        energy,
        k: q * m,
        p,
        f_or_i,
    })
}

/// Analytic bracket of two phase functions given their chart gradients.
///   Galilei  {F,G} = F_s G_α − F_α G_s + F_{p_i}G_{q^i} − F_{q^i}G_{p_i} − e*B* ε^{ij} F_{q^i}G_{q^j}
///   Para     {F,G} = F_s G_α − F_α G_s + F_{I_i}G_{q^i} − F_{q^i}G_{I_i} − eB ε_{ij} F_{I_i}G_{I_j}
pub fn bilinear<T: Real>(pt: &OrbitPoint<T>, df: &Coords<T>, dg: &Coords<T>) -> T {
    let mut out = df[S] * dg[ALPHA] - df[ALPHA] * dg[S];
    for i in 0..2 {
        out += df[MOM1 + i] * dg[Q1 + i] - df[Q1 + i] * dg[MOM1 + i];
    }
    if pt.family.is_para() {
        out - pt.fields.eb * (df[MOM1] * dg[MOM2] - df[MOM2] * dg[MOM1])
    } else {
        out - pt.fields.estar_bstar * (df[Q1] * dg[Q2] - df[Q2] * dg[Q1])
    }
}

/// Finite-difference step used for coordinate i at z.
pub fn fd_step<T: Real>(zi: T) -> T {
    T::lit(1e-4) * T::one().max(zi.abs())
}

/// Central-difference gradient of a phase function.
pub fn gradient<T: Real, F: Fn(&Coords<T>) -> T>(f: F, z: &Coords<T>) -> Coords<T> {
    let mut g = [T::zero(); 6];
    for i in 0..6 {
        let h = fd_step(z[i]);
        let (mut zp, mut zm) = (*z, *z);
        zp[i] += h;
        zm[i] -= h;
        g[i] = (f(&zp) - f(&zm)) / (zp[i] - zm[i]);
    }
    g
}

/// {F, G} at `pt` with central finite differences.
pub fn poisson_bracket<T, F, G>(f: F, g: G, pt: &OrbitPoint<T>) -> T
where
    T: Real,
    F: Fn(&Coords<T>) -> T,
    G: Fn(&Coords<T>) -> T,
{
    let z = pt.coords();
    bilinear(pt, &gradient(f, &z), &gradient(g, &z))
}

/// Exact {z_a, z_b} for the six chart coordinates.
pub fn poisson_tensor<T: Real>(pt: &OrbitPoint<T>) -> Mat6<T> {
    let mut out = zeros6();
    for (a, row) in out.iter_mut().enumerate() {
        for (b, e) in row.iter_mut().enumerate() {
            let mut da = [T::zero(); 6];
            let mut db = [T::zero(); 6];
            da[a] = T::one();
            db[b] = T::one();
            *e = bilinear(pt, &da, &db);
        }
    }
    out
}

/// Something whose bracket the tables list: a chart coordinate or a
/// potential component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observable {
    Coord(usize),
    /// Component i of e*A⃗* (Galilei) or eA⃗ (Para-Galilei).
    Potential(usize),
}

impl Observable {
    pub fn name(self, family: Family) -> String {
        match self {
            Observable::Coord(i) => COORD_NAMES[i].to_string(),
            Observable::Potential(i) if family.is_para() => format!("A{}", i + 1),
            Observable::Potential(i) => format!("Astar{}", i + 1),
        }
    }

    pub fn eval<T: Real>(self, pt: &OrbitPoint<T>, z: &Coords<T>) -> T {
        match self {
            Observable::Coord(i) => z[i],
            Observable::Potential(i) => {
                let probe = pt.with_coords(z);
                let pot = potentials(&probe);
                if pt.family.is_para() {
                    pot.a[i]
                } else {
                    pot.astar[i]
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BracketEntry<T> {
    pub left: Observable,
    pub right: Observable,
    pub value: T,
}

impl<T: Real> BracketEntry<T> {
    pub fn key(&self, family: Family) -> String {
        format!("{},{}", self.left.name(family), self.right.name(family))
    }

    pub fn finite_difference(&self, pt: &OrbitPoint<T>) -> T {
        let (l, r) = (self.left, self.right);
        poisson_bracket(|z: &Coords<T>| l.eval(pt, z), |z: &Coords<T>| r.eval(pt, z), pt)
    }
}

/// Pair order used by the tables: s, α, mom₁, mom₂, q¹, q².
pub const TABLE_ORDER: [usize; 6] = [S, ALPHA, MOM1, MOM2, Q1, Q2];

#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable<T> {
    /// The 15 coordinate pairs.
    pub coordinates: Vec<BracketEntry<T>>,
    /// {q^i, e*A*_j} (Galilei) or {I_i, eA_j} (Para-Galilei).
    pub potentials: Vec<BracketEntry<T>>,
}

impl<T: Real> BracketTable<T> {
    pub fn all(&self) -> impl Iterator<Item = &BracketEntry<T>> {
        self.coordinates.iter().chain(self.potentials.iter())
    }
}

pub fn bracket_table<T: Real>(pt: &OrbitPoint<T>) -> BracketTable<T> {
    let zero = T::zero();
    let one = T::one();
    let half = T::half();
    let value = |a: usize, b: usize| -> T {
        let pair = |x: usize, y: usize| (a == x && b == y, a == y && b == x);
        let mut v = zero;
        for (x, y, w) in [(S, ALPHA, one), (MOM1, Q1, one), (MOM2, Q2, one)] {
            match pair(x, y) {
                (true, _) => v = w,
                (_, true) => v = -w,
                _ => {}
            }
        }
        let (x, y, w) = if pt.family.is_para() {
            (MOM1, MOM2, -pt.fields.eb)
        } else {
            (Q1, Q2, -pt.fields.estar_bstar)
        };
        match pair(x, y) {
            (true, _) => w,
            (_, true) => -w,
            _ => v,
        }
    };
    let mut coordinates = Vec::with_capacity(15);
    for (i, &a) in TABLE_ORDER.iter().enumerate() {
        for &b in &TABLE_ORDER[i + 1..] {
            coordinates.push(BracketEntry {
                left: Observable::Coord(a),
                right: Observable::Coord(b),
                value: value(a, b),
            });
        }
    }
    let mut potentials = Vec::with_capacity(4);
    let eps = eps_mixed::<T>();
    let epsl = eps_lower::<T>();
    for i in 0..2 {
        for j in 0..2 {
            let (left, v) = if pt.family.is_para() {
                // {I_i, eA_j} = (eB/2) ε_ij
                (Observable::Coord(MOM1 + i), half * pt.fields.eb * epsl[i][j])
            } else {
                // {q^i, e*A*_j} = (e*B*/2) ε^j_i
                (Observable::Coord(Q1 + i), half * pt.fields.estar_bstar * eps[j][i])
            };
            potentials.push(BracketEntry { left, right: Observable::Potential(j), value: v });
        }
    }
    BracketTable { coordinates, potentials }
}

/// The s-row bracket formulas:
///   Galilei  {s,p_j} = p_i ε^i_j,  {s,q^i} = ε^i_j (q^j − e*A*^j),  {s,A*_j} = A*_i ε^i_j
///   Para     {s,I_j} = (I_i − eA_i) ε^i_j,  {s,q^i} = ε^i_j q^j,  {s,A_j} = −A_i ε^i_j
/// The chart bilinear gives 0 for every one of these (s commutes with q⃗ and
/// mom⃗), so they cannot agree away from special points. Kept so the
/// comparison can be reported.
pub fn s_row_formulas<T: Real>(pt: &OrbitPoint<T>) -> Vec<BracketEntry<T>> {
    let e = eps_mixed::<T>();
    let pot = potentials(pt);
    let (q, mom) = (pt.q, pt.mom);
    let sobs = Observable::Coord(S);
    let mut out = Vec::with_capacity(6);
    for j in 0..2 {
        let (mom_v, q_v, a_v) = if pt.family.is_para() {
            let ia = mom - pot.a;
            (
                ia[0] * e[0][j] + ia[1] * e[1][j],
                e[j][0] * q[0] + e[j][1] * q[1],
                -(pot.a[0] * e[0][j] + pot.a[1] * e[1][j]),
            )
        } else {
            let qa = q - pot.astar;
            (
                mom[0] * e[0][j] + mom[1] * e[1][j],
                e[j][0] * qa[0] + e[j][1] * qa[1],
                pot.astar[0] * e[0][j] + pot.astar[1] * e[1][j],
            )
        };
        out.push(BracketEntry { left: sobs, right: Observable::Coord(MOM1 + j), value: mom_v });
        out.push(BracketEntry { left: sobs, right: Observable::Coord(Q1 + j), value: q_v });
        out.push(BracketEntry { left: sobs, right: Observable::Potential(j), value: a_v });
    }
    out
}

/// Galilei: (s, p₁, p₂, α, q̃¹, q̃²) with q̃ = q − e*A*.
/// Para-Galilei: (s, Ĩ₁, Ĩ₂, α, q¹, q²) with Ĩ = I + eA.
pub fn canonical_coords<T: Real>(pt: &OrbitPoint<T>) -> [T; 6] {
    let pot = potentials(pt);
    if pt.family.is_para() {
        let it = pt.mom + pot.a;
        [pt.s, it.0, it.1, pt.alpha, pt.q.0, pt.q.1]
    } else {
        let qt = pt.q - pot.astar;
        [pt.s, pt.mom.0, pt.mom.1, pt.alpha, qt.0, qt.1]
    }
}

/// Jacobian of the coadjoint coordinates dual to the orbit basis
/// (J, A₁, K₁, P₁, K₂, P₂), i.e. (j, f₁|p₁, k₁, p₁|I₁, k₂, p₂|I₂), with
/// respect to the chart coordinates.
pub fn chart_jacobian<T: Real>(pt: &OrbitPoint<T>) -> Mat6<T> {
    let mut jac = zeros6();
    let (q, mom, m) = (pt.q, pt.mom, pt.m());
    let one = T::one();
    // j = s − mom⃗×q⃗ + (G|mom|² or eB q²)/2
    jac[0][S] = one;
    if pt.family.is_para() {
        let eb = pt.fields.eb;
        jac[0][Q1] = mom.1 + eb * q.0;
        jac[0][Q2] = -mom.0 + eb * q.1;
        jac[0][MOM1] = -q.1;
        jac[0][MOM2] = q.0;
    } else {
        let g = pt.fields.estar_bstar;
        jac[0][Q1] = mom.1;
        jac[0][Q2] = -mom.0;
        jac[0][MOM1] = -q.1 + g * mom.0;
        jac[0][MOM2] = q.0 + g * mom.1;
    }
    jac[1][ALPHA] = -pt.casimir.intensity * pt.alpha.sin();
    jac[2][Q1] = m;
    jac[3][MOM1] = one;
    jac[4][Q2] = m;
    jac[5][MOM2] = one;
    jac
}

/// Brackets {ξ_a, ξ_b} of the coadjoint coordinates dual to the orbit basis,
/// pushed forward from the chart: J·P·Jᵀ. On the orbit this is −Ω.
pub fn coadjoint_bracket_matrix<T: Real>(pt: &OrbitPoint<T>) -> Result<Mat6<T>> {
    pt.validate()?;
    let jac = chart_jacobian(pt);
    let p = poisson_tensor(pt);
    Ok(matmul6(&matmul6(&jac, &p), &transpose6(&jac)))
}
