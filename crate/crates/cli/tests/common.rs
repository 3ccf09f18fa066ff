#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_orbitkit")
}

pub fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn default_config() -> PathBuf {
    repo_root().join("configs/default.json")
}

pub fn run(cmd: &str, config: &Path, out_dir: &Path, extra: &[&str]) -> Output {
    Command::new(bin())
        .arg(cmd)
        .arg(config)
        .arg("--out-dir")
        .arg(out_dir)
        .args(extra)
        .output()
        .expect("spawn orbitkit")
}

pub fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

pub fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = repo_root().join("docs/schema").join(format!("{name}.schema.json"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft7)
        .compile(&v)
        .expect("schema compiles")
}

/// Validation errors as strings (empty when valid).
pub fn schema_errors(name: &str, doc: &serde_json::Value) -> Vec<String> {
    let s = schema(name);
    let out = match s.validate(doc) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    out
}

pub fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn malformed_configs() -> Vec<(&'static str, &'static str)> {
    vec![
        ("dt_zero", r#"{"family": "galilei", "time": {"t_end": 1, "dt": 0}}"#),
        ("c_nonpositive", r#"{"family": "galilei", "params": {"c": 0}}"#),
        ("negative_t_end", r#"{"family": "galilei", "time": {"t_end": -1, "dt": 0.1}}"#),
        ("unknown_family", r#"{"family": "poincare"}"#),
        ("unknown_field", r#"{"family": "galilei", "sead": 4}"#),
        ("not_json", "{family: galilei"),
        ("both_points", r#"{"family": "galilei", "initial": {"s": 0, "alpha": 1, "q": [0, 0], "mom": [0, 0]},
            "coadjoint": {"j": 0, "E": 0, "k": [0, 0], "p": [0, 0], "f_or_I": [1, 0]}}"#),
        ("para_c_unlinked", r#"{"family": "paragalilei_plus", "params": {"c": 2, "omega": 1, "r": 1}}"#),
    ]
}
