//! Atomic file output, CSV trajectories and float formatting.

use orbitkit::coadjoint::casimirs;
use orbitkit::dynamics::{hamiltonian, Trajectory};
use orbitkit::orbit::to_coadjoint;
use serde::Serialize;
use std::io::Write;
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 10] = ["s", "alpha", "q1", "q2", "mom1", "mom2", "H", "U", "dH", "dU"];

/// 17 significant digits; parses back to the same f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes via a temporary file in the target directory, then renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    // NamedTempFile is created 0600; outputs are ordinary files
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(std::fs::Permissions::from_mode(0o644))?;
    }
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

/// (s, α, q¹, q², mom₁, mom₂, H, U, dH, dU) per sample; the drifts are signed
/// differences from the first sample.
pub fn trajectory_rows(traj: &Trajectory<f64>) -> orbitkit::Result<Vec<[f64; 10]>> {
    let first = traj.samples[0].point;
    let h0 = hamiltonian(&first).total;
    let u0 = casimirs(&to_coadjoint(&first)?, &first.fields)?.u;
    traj.samples
        .iter()
        .map(|smp| {
            let pt = &smp.point;
            let h = hamiltonian(pt).total;
            let u = casimirs(&to_coadjoint(pt)?, &pt.fields)?.u;
            Ok([pt.s, pt.alpha, pt.q.0, pt.q.1, pt.mom.0, pt.mom.1, h, u, h - h0, u - u0])
        })
        .collect()
}

fn csv_bytes(header: Vec<String>, rows: impl Iterator<Item = Vec<f64>>) -> std::io::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(&header)?;
    for r in rows {
        w.write_record(r.iter().map(|x| fmt_f64(*x)))?;
    }
    w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))
}

pub fn trajectory_csv(traj: &Trajectory<f64>) -> orbitkit::Result<Vec<u8>> {
    let rows = trajectory_rows(traj)?;
    let header = std::iter::once("t".to_string()).chain(CSV_COLUMNS.iter().map(|c| c.to_string())).collect();
    let it = traj.samples.iter().zip(rows).map(|(s, r)| std::iter::once(s.t).chain(r).collect());
    Ok(csv_bytes(header, it).expect("writing to memory"))
}

/// Closed-form and RK4 columns side by side, suffixed `_cf` and `_rk`.
pub fn compare_csv(cf: &Trajectory<f64>, rk: &Trajectory<f64>) -> orbitkit::Result<Vec<u8>> {
    let (a, b) = (trajectory_rows(cf)?, trajectory_rows(rk)?);
    let header = std::iter::once("t".to_string())
        .chain(CSV_COLUMNS.iter().map(|c| format!("{c}_cf")))
        .chain(CSV_COLUMNS.iter().map(|c| format!("{c}_rk")))
        .collect();
    let it = cf
        .samples
        .iter()
        .zip(a.into_iter().zip(b))
        .map(|(s, (x, y))| std::iter::once(s.t).chain(x).chain(y).collect());
    Ok(csv_bytes(header, it).expect("writing to memory"))
}
