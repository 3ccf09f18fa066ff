//! Scenario configuration: one JSON document, validated up front so every
//! problem surfaces as exit code 2 with the offending field named.

use orbitkit::coadjoint::{CasimirSet, FieldParams};
use orbitkit::{AlgebraParams, CoadjointVector, Family, OrbitPoint, Vec2};
use serde::Deserialize;
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
#[error("{field}: {reason}")]
pub struct ConfigError {
    pub field: String,
    pub reason: String,
}

fn bad(field: impl Into<String>, reason: impl Into<String>) -> ConfigError {
    ConfigError { field: field.into(), reason: reason.into() }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub family: String,
    #[serde(default)]
    pub params: ParamsSection,
    pub initial: Option<InitialSection>,
    pub coadjoint: Option<CoadjointSection>,
    #[serde(default)]
    pub time: TimeSection,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub outputs: Vec<OutputSpec>,
}

fn default_seed() -> u64 {
    42
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    #[serde(default = "one")]
    pub m: f64,
    #[serde(default = "one")]
    pub omega: f64,
    /// Galilei: free. Para-Galilei: ωr when absent, must equal ωr otherwise.
    pub c: Option<f64>,
    #[serde(default = "one")]
    pub r: f64,
}

impl Default for ParamsSection {
    fn default() -> Self {
        ParamsSection { m: 1.0, omega: 1.0, c: None, r: 1.0 }
    }
}

/// Chart point. The Casimirs that the chart does not carry (intensity, U) are
/// given alongside.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialSection {
    pub s: f64,
    pub alpha: f64,
    pub q: [f64; 2],
    pub mom: [f64; 2],
    #[serde(default = "one")]
    pub intensity: f64,
    #[serde(default, rename = "U")]
    pub u: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoadjointSection {
    pub j: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    pub k: [f64; 2],
    pub p: [f64; 2],
    #[serde(rename = "f_or_I")]
    pub f_or_i: [f64; 2],
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSection {
    pub t_end: f64,
    pub dt: f64,
}

impl Default for TimeSection {
    fn default() -> Self {
        TimeSection { t_end: 10.0, dt: 1e-3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputKind {
    /// RK4 trajectory.
    Csv,
    /// Closed-form and RK4 side by side.
    Compare,
    Verify,
    Brackets,
    Table,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub kind: OutputKind,
    pub path: PathBuf,
}

/// A config that passed validation, with the derived objects built.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub family: Family,
    pub params: AlgebraParams<f64>,
    pub m: f64,
    pub fields: FieldParams<f64>,
    /// Present when the config gives `initial` or `coadjoint`.
    pub point: Option<PointSpec>,
    pub t_end: f64,
    pub dt: f64,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub outputs: Vec<OutputSpec>,
}

/// The initial point before the chart is entered; building the orbit point
/// can still fail at run time (degenerate α, zero intensity).
#[derive(Clone, Debug)]
pub enum PointSpec {
    Chart(InitialSection),
    Coadjoint(CoadjointVector<f64>),
}

fn positive(field: &str, v: f64) -> Result<(), ConfigError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(bad(field, format!("must be a finite number > 0 (got {v})")))
    }
}

fn finite(field: &str, vs: &[f64]) -> Result<(), ConfigError> {
    match vs.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(bad(field, format!("must be finite (got {v})"))),
        None => Ok(()),
    }
}

pub fn parse(text: &str) -> Result<ScenarioConfig, ConfigError> {
    serde_json::from_str(text).map_err(|e| bad("config", e.to_string()))
}

pub fn load(path: &Path) -> Result<ScenarioConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad("config", format!("{}: {e}", path.display())))?;
    parse(&text)
}

impl ScenarioConfig {
    pub fn validate(&self, seed: Option<u64>, out_dir: Option<&Path>) -> Result<Scenario, ConfigError> {
        let family = Family::from_name(&self.family).ok_or_else(|| {
            bad("family", format!("unknown family {:?}; expected galilei, paragalilei_plus or paragalilei_minus", self.family))
        })?;
        let p = &self.params;
        positive("params.m", p.m)?;
        positive("params.omega", p.omega)?;
        positive("params.r", p.r)?;
        let c = match (family.is_para(), p.c) {
            (true, None) => p.omega * p.r,
            (true, Some(c)) => {
                positive("params.c", c)?;
                let linked = p.omega * p.r;
                if (c - linked).abs() > 1e-12 * linked.max(1.0) {
                    return Err(bad("params.c", format!("Para-Galilei requires c = omega*r = {linked} (got {c})")));
                }
                c
            }
            (false, c) => {
                let c = c.unwrap_or(1.0);
                positive("params.c", c)?;
                c
            }
        };
        let params = AlgebraParams::new(family, c, p.r, p.omega).map_err(|e| bad("params", e.to_string()))?;

        let point = match (&self.initial, &self.coadjoint) {
            (Some(_), Some(_)) => return Err(bad("initial", "give exactly one of initial and coadjoint")),
            (Some(i), None) => {
                finite("initial", &[i.s, i.alpha, i.q[0], i.q[1], i.mom[0], i.mom[1], i.u])?;
                if !(i.intensity.is_finite() && i.intensity >= 0.0) {
                    return Err(bad("initial.intensity", format!("must be a finite number >= 0 (got {})", i.intensity)));
                }
                Some(PointSpec::Chart(i.clone()))
            }
            (None, Some(x)) => {
                let vals = [x.j, x.energy, x.k[0], x.k[1], x.p[0], x.p[1], x.f_or_i[0], x.f_or_i[1]];
                finite("coadjoint", &vals)?;
                Some(PointSpec::Coadjoint(CoadjointVector::with_policy(
                    &params,
                    p.m,
                    x.j,
                    x.energy,
                    Vec2(x.k[0], x.k[1]),
                    Vec2(x.p[0], x.p[1]),
                    Vec2(x.f_or_i[0], x.f_or_i[1]),
                )))
            }
            (None, None) => None,
        };

        let t = &self.time;
        positive("time.dt", t.dt)?;
        if !(t.t_end.is_finite() && t.t_end >= 0.0) {
            return Err(bad("time.t_end", format!("must be a finite number >= 0 (got {})", t.t_end)));
        }
        for (i, o) in self.outputs.iter().enumerate() {
            if o.path.as_os_str().is_empty() {
                return Err(bad(format!("outputs[{i}].path"), "must not be empty"));
            }
        }

        Ok(Scenario {
            family,
            params,
            m: p.m,
            fields: FieldParams::for_mass(p.m, p.omega),
            point,
            t_end: t.t_end,
            dt: t.dt,
            seed: seed.unwrap_or(self.seed),
            out_dir: out_dir
                .map(Path::to_path_buf)
                .or_else(|| self.out_dir.clone())
                .unwrap_or_else(|| PathBuf::from(".")),
            outputs: self.outputs.clone(),
        })
    }
}

impl Scenario {
    /// Paths for outputs of `kind`, resolved against the output directory;
    /// `default` is used when the config lists none.
    pub fn output_paths(&self, kind: OutputKind, default: Option<&str>) -> Vec<PathBuf> {
        let mut out: Vec<PathBuf> = self
            .outputs
            .iter()
            .filter(|o| o.kind == kind)
            .map(|o| self.out_dir.join(&o.path))
            .collect();
        if out.is_empty() {
            out.extend(default.map(|d| self.out_dir.join(d)));
        }
        out
    }

    /// Builds the orbit point for the configured initial data.
    pub fn orbit_point(&self) -> Option<orbitkit::Result<OrbitPoint<f64>>> {
        let spec = self.point.as_ref()?;
        Some(match spec {
            PointSpec::Coadjoint(xi) => orbitkit::from_coadjoint(xi, &self.fields),
            PointSpec::Chart(i) => Ok(OrbitPoint {
                family: self.family,
                s: i.s,
                alpha: i.alpha,
                q: Vec2(i.q[0], i.q[1]),
                mom: Vec2(i.mom[0], i.mom[1]),
                casimir: CasimirSet {
                    m: self.m,
                    h: self.m * self.params.c() * self.params.c() / self.params.omega(),
                    intensity: i.intensity,
                    u: i.u,
                },
                fields: self.fields,
            }),
        })
    }
}
