// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub const COMMANDS: [&str; 11] = [
    "verify", "encode", "decode", "dilate", "contract", "step", "classify", "expand", "bns",
    "decompose", "search",
];

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the built binary from the crate directory.
pub fn addsys(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_addsys"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn golden(name: &str) -> String {
    let path = crate_dir().join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn schema(command: &str) -> Value {
    let path = crate_dir().join(format!("schema/{command}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("schema json")
}

/// Schema violations of `instance`, one line each.
pub fn schema_errors(command: &str, instance: &Value) -> Vec<String> {
    let validator = jsonschema::validator_for(&schema(command)).expect("schema compiles");
    validator
        .iter_errors(instance)
        .map(|e| format!("{}: {e}", e.instance_path()))
        .collect()
}

pub fn example(name: &str) -> String {
    Path::new("examples").join(name).to_string_lossy().into_owned()
}

/// Every `--json` invocation over the example corpus, paired with its schema
/// name and expected exit code.
pub fn json_invocations() -> Vec<(&'static str, Vec<String>, i32)> {
    let sys = ["monetary.sys", "binary.sys", "decimal.sys", "contraction.sys"];
    let mut v: Vec<(&'static str, Vec<String>, i32)> = Vec::new();
    let s = |a: &[&str]| a.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    for f in sys {
        let f = example(f);
        v.push(("verify", s(&["verify", &f, "--json"]), 0));
        v.push(("dilate", s(&["dilate", &f, "--radices", "2,3", "--json"]), 0));
        v.push(("step", s(&["step", &f, "--json"]), 0));
        v.push(("classify", s(&["classify", &f, "--json"]), 0));
    }
    v.push(("encode", s(&["encode", "--preset", "british-monetary", "835", "--json"]), 0));
    v.push(("encode", s(&["encode", "--radices", "2,2,2", "99999999999999999999999", "--json"]), 0));
    v.push(("decode", s(&["decode", "--radices", "12,20", "7,9+3", "--json"]), 0));
    v.push(("decode", s(&["decode", "--preset", "british-monetary", "--display-msd", "3+9,7", "--json"]), 0));
    v.push((
        "contract",
        s(&["contract", &example("monetary.sys"), "--partition", &example("partition.json"), "--json"]),
        0,
    ));
    v.push(("bns", s(&["bns", "--radices", "12,20", "--json"]), 0));
    v.push(("bns", s(&["bns", "--radices", "2,3", "--compare", "2,3,(2)...", "--json"]), 0));
    v.push(("bns", s(&["bns", "--radices", "2,3", "--compare", "2,3,(3)...", "--json"]), 1));
    v.push(("bns", s(&["bns", "--radices", "4", "--tail", "none", "--json"]), 0));
    v.push(("decompose", s(&["decompose", "[0,6)", "--json"]), 0));
    v.push(("decompose", s(&["decompose", "{0,1,3}", "--json"]), 1));
    v.push(("search", s(&["search", "[0,6)", "--json"]), 0));
    v.push(("search", s(&["search", "{0,1,3}", "--json"]), 1));
    v.push(("search", s(&["search", "[0,12)", "--mode", "sumset", "--max-nodes", "10", "--json"]), 1));
    v
}
