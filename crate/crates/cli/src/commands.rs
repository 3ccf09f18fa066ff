//! The four subcommands. Each returns the paths it wrote or a [`Failure`]
//! that maps onto the exit code.

use crate::config::{ConfigError, OutputKind, Scenario};
use crate::output::{compare_csv, trajectory_csv, write_atomic, write_json, SCHEMA_VERSION};
use orbitkit::checks::{self, CheckResult, SuiteSizes};
use orbitkit::coadjoint::{casimirs, DEFAULT_PIVOT_TOL};
use orbitkit::dynamics::{closed_form_trajectory, flow_coefficients, hamiltonian, integrate};
use orbitkit::orbit::{
    bracket_table, canonical_coords, potentials, s_row_formulas, to_coadjoint, BracketEntry,
};
use orbitkit::tolerances;
use orbitkit::{AlgebraParams, Error, Family, OrbitPoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Runtime(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// Outputs were written but some check did not pass.
    #[error("{0}")]
    Checks(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Config(_) => 2,
            _ => 1,
        }
    }
}

pub type Outcome = Result<Vec<PathBuf>, Failure>;

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    family: &'static str,
    samples: usize,
    max_deviation: f64,
    tolerance: f64,
    passed: bool,
    informational: bool,
}

impl From<&CheckResult> for CheckJson {
    fn from(r: &CheckResult) -> Self {
        CheckJson {
            name: r.name,
            family: r.family.name(),
            samples: r.samples,
            max_deviation: r.max_deviation,
            tolerance: r.tolerance,
            passed: r.passed(),
            informational: r.informational,
        }
    }
}

fn required_point(sc: &Scenario, cmd: &str) -> Result<OrbitPoint<f64>, Failure> {
    match sc.orbit_point() {
        None => Err(ConfigError {
            field: "initial".into(),
            reason: format!("{cmd} needs an initial or coadjoint point"),
        }
        .into()),
        Some(pt) => {
            let pt = pt?;
            pt.validate()?;
            Ok(pt)
        }
    }
}

fn non_degenerate(pt: &OrbitPoint<f64>) -> Result<(), Failure> {
    let pivot = pt.pivot();
    if pivot.abs() > DEFAULT_PIVOT_TOL {
        Ok(())
    } else {
        Err(Error::DegenerateOrbitPoint { pivot, tol: DEFAULT_PIVOT_TOL }.into())
    }
}

fn point_json(pt: &OrbitPoint<f64>) -> Value {
    json!({
        "s": pt.s,
        "alpha": pt.alpha,
        "q": [pt.q.0, pt.q.1],
        "mom": [pt.mom.0, pt.mom.1],
        "intensity": pt.casimir.intensity,
        "U": pt.casimir.u,
    })
}

pub fn verify(sc: &Scenario) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(sc.seed);
    let sizes = SuiteSizes::default();
    let mut results = Vec::new();
    for fam in Family::ALL {
        results.extend(checks::run_all(&mut rng, fam, &sizes));
    }
    let point = match sc.orbit_point() {
        Some(pt) => {
            let pt = pt?;
            results.extend(checks::scenario(&pt, sc.t_end, sc.dt)?);
            Some(point_json(&pt))
        }
        None => None,
    };
    let gated: Vec<&CheckResult> = results.iter().filter(|r| !r.informational).collect();
    let failed: Vec<String> = gated
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}[{}]", r.name, r.family))
        .collect();
    for r in &results {
        let tag = match (r.passed(), r.informational) {
            (true, _) => "ok  ",
            (false, true) => "info",
            (false, false) => "FAIL",
        };
        eprintln!(
            "{tag} {:<18} {:<32} max {:.3e} (tol {:.0e}, n={})",
            r.family.name(),
            r.name,
            r.max_deviation,
            r.tolerance,
            r.samples
        );
    }
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "seed": sc.seed,
        "family": sc.family.name(),
        "point": point,
        "passed": failed.is_empty(),
        "checks": results.iter().map(CheckJson::from).collect::<Vec<_>>(),
    });
    let paths = sc.output_paths(OutputKind::Verify, Some("verify.json"));
    for p in &paths {
        write_json(p, &report)?;
    }
    if failed.is_empty() {
        Ok(paths)
    } else {
        Err(Failure::Checks(format!("failed checks: {}", failed.join(", "))))
    }
}

pub fn simulate(sc: &Scenario) -> Outcome {
    let pt = required_point(sc, "simulate")?;
    non_degenerate(&pt)?;
    let rk = integrate(&pt, sc.t_end, sc.dt)?;
    let mut written = Vec::new();
    let compare = sc.output_paths(OutputKind::Compare, None);
    // trajectory.csv is the default only when nothing else was asked for
    let default_csv = compare.is_empty().then_some("trajectory.csv");
    for p in sc.output_paths(OutputKind::Csv, default_csv) {
        write_atomic(&p, &trajectory_csv(&rk)?)?;
        written.push(p);
    }
    if !compare.is_empty() {
        let cf = closed_form_trajectory(&pt, sc.t_end, sc.dt)?;
        let bytes = compare_csv(&cf, &rk)?;
        for p in compare {
            write_atomic(&p, &bytes)?;
            written.push(p);
        }
    }
    Ok(written)
}

fn entry_json(e: &BracketEntry<f64>, pt: &OrbitPoint<f64>) -> Value {
    let fd = e.finite_difference(pt);
    json!({ "analytic": e.value, "finite_difference": fd, "abs_diff": (fd - e.value).abs() })
}

pub fn brackets(sc: &Scenario) -> Outcome {
    let pt = required_point(sc, "brackets")?;
    let fam = pt.family;
    let table = bracket_table(&pt);
    let mut out = Map::new();
    let mut worst: f64 = 0.0;
    for e in table.all() {
        let v = entry_json(e, &pt);
        worst = worst.max(v["abs_diff"].as_f64().unwrap_or(f64::INFINITY));
        out.insert(e.key(fam), v);
    }
    let s_rows: Map<String, Value> = s_row_formulas(&pt).iter().map(|e| (e.key(fam), entry_json(e, &pt))).collect();
    let passed = worst <= tolerances::BRACKET_FD;
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "brackets",
        "family": fam.name(),
        "point": point_json(&pt),
        "fields": { "estar_bstar": pt.fields.estar_bstar, "eb": pt.fields.eb },
        "tolerance": tolerances::BRACKET_FD,
        "max_abs_diff": worst,
        "passed": passed,
        "brackets": out,
        "s_row_formulas": s_rows,
    });
    let paths = sc.output_paths(OutputKind::Brackets, Some("brackets.json"));
    for p in &paths {
        write_json(p, &report)?;
    }
    if passed {
        Ok(paths)
    } else {
        Err(Failure::Checks(format!("bracket table deviates by {worst:.3e}")))
    }
}

/// Point used by `table` for families the config does not describe.
fn default_point(sc: &Scenario, family: Family) -> Result<OrbitPoint<f64>, Failure> {
    let w = sc.params.omega();
    let r = sc.params.r();
    let c = if family.is_para() { w * r } else { sc.params.c() };
    let params = AlgebraParams::new(family, c, r, w)?;
    let mut alt = sc.clone();
    alt.family = family;
    alt.params = params;
    alt.point = Some(crate::config::PointSpec::Chart(crate::config::InitialSection {
        s: 0.0,
        alpha: std::f64::consts::FRAC_PI_3,
        q: [0.5, -0.25],
        mom: [0.75, 0.5],
        intensity: 1.0,
        u: 0.0,
    }));
    Ok(alt.orbit_point().expect("point set above")?)
}

fn v2(v: orbitkit::Vec2<f64>) -> Value {
    json!([v.0, v.1])
}

fn family_table(pt: &OrbitPoint<f64>) -> Result<Value, Failure> {
    let fam = pt.family;
    let para = fam.is_para();
    let xi = to_coadjoint(pt)?;
    let cas = casimirs(&xi, &pt.fields)?;
    let pot = potentials(pt);
    let ham = hamiltonian(pt);
    let fc = flow_coefficients(pt);
    let w = pt.intensity_vector();
    let m = pt.m();
    let table = bracket_table(pt);
    let coords: Map<String, Value> = table.coordinates.iter().map(|e| (e.key(fam), json!(e.value))).collect();
    let pots: Map<String, Value> = table.potentials.iter().map(|e| (e.key(fam), json!(e.value))).collect();
    let om2 = pt.fields.omega * pt.fields.omega;
    let sigma: f64 = fam.sign();
    let newton = if para {
        json!({
            "I_rhs": v2(w * (sigma * om2)),
            "q_velocity": v2(w / m),
            "s_rhs": fc.p0,
            "compliance": ham.compliance,
        })
    } else {
        json!({ "q_rhs": v2(w / m), "p_rhs": v2(w), "s_rhs": fc.p0 })
    };
    let (g12, f12) = if para { (0.0, pt.fields.eb) } else { (pt.fields.estar_bstar, 0.0) };
    Ok(json!({
        "invariants": {
            "m": cas.m,
            "h": cas.h,
            "intensity": cas.intensity,
            "U": cas.u,
        },
        "fields": {
            "G12": pt.fields.estar_bstar,
            "F12": pt.fields.eb,
            "product": pt.fields.estar_bstar * pt.fields.eb,
        },
        "orbit_coordinates": {
            "s": pt.s,
            "alpha": pt.alpha,
            "q": v2(pt.q),
            "mom": v2(pt.mom),
            "intensity_vector": v2(w),
            "canonical": canonical_coords(pt),
        },
        "potentials": {
            "Astar": v2(pot.astar),
            "A": v2(pot.a),
        },
        "symplectic_correction": { "G12": g12, "F12": f12 },
        "brackets": coords,
        "potential_brackets": pots,
        "hamiltonian": {
            "kinetic": ham.kinetic,
            "potential": ham.potential,
            "exotic": ham.exotic,
            "total": ham.total,
        },
        "potential_energy": ham.potential,
        "flow": { "K": fc.k, "N": fc.n, "K_over_m": fc.e0, "N_over_m": fc.p0 },
        "newton": newton,
    }))
}

pub fn table(sc: &Scenario) -> Outcome {
    let mut families = Map::new();
    for fam in Family::ALL {
        let pt = match sc.orbit_point() {
            Some(pt) if fam == sc.family => pt?,
            _ => default_point(sc, fam)?,
        };
        pt.validate()?;
        families.insert(fam.name().to_string(), family_table(&pt)?);
    }
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "table",
        "families": families,
    });
    let paths = sc.output_paths(OutputKind::Table, Some("table.json"));
    for p in &paths {
        write_json(p, &report)?;
    }
    Ok(paths)
}
