// SPDX-License-Identifier: Apache-2.0

//! The `addsys` command line.
//!
//! Exit status is 0 on success, 1 when a check fails or a search finds
//! nothing, and 2 on usage, input or library errors. With `--json` every
//! command prints one object carrying a top-level `verdict`.

pub mod dsl;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use addsys_core::classify::REST_LABEL;
use addsys_core::{
    bns_equal, build_bns, classify, debruijn_step, decode, dilate_family, encode, expand,
    is_decomposable_set, is_indecomposable_system, search, AdditiveSystem, Bound,
    BritishNumberSystem, ClassificationResult, GeneratorSchedule, IndexPartition, Limits,
    MixedRadixDigits, Preset, Radices, SearchError, SearchMode, SearchProblem, TailRule,
    VerificationReport,
};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::dsl::{parse_set, parse_system, SystemDocument};

pub const DEFAULT_BOUND: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "addsys", version, about = "Additive systems for the nonnegative integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Checks cover the window [0, N).
    #[arg(long, default_value_t = DEFAULT_BOUND, value_name = "N")]
    bound: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RadixSource {
    /// Comma-separated radices, each at least 2.
    #[arg(long, value_name = "G1,G2,...")]
    radices: Option<String>,
    /// british-monetary, binary-K, g-adic(G,K) or factorial-K.
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalRadixSource {
    #[arg(long, value_name = "G1,G2,...")]
    radices: Option<String>,
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check unique representation of every integer below the bound.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Mixed-radix digits of a number, least significant first.
    Encode {
        n: String,
        #[command(flatten)]
        radix: RadixSource,
        /// Print the overflow and digits most significant first.
        #[arg(long)]
        display_msd: bool,
        #[arg(long)]
        json: bool,
    },
    /// The number with the given digits, written like `7,9+3`.
    Decode {
        digits: String,
        #[command(flatten)]
        radix: RadixSource,
        /// Read the digits most significant first, like `3+9,7`.
        #[arg(long)]
        display_msd: bool,
        #[arg(long)]
        json: bool,
    },
    /// Dilate a system by a radix sequence.
    Dilate {
        file: PathBuf,
        #[command(flatten)]
        radix: RadixSource,
        #[command(flatten)]
        common: Common,
    },
    /// Replace classes of members by their direct sums.
    Contract {
        file: PathBuf,
        /// Partition as JSON, inline or in a file.
        #[arg(long, value_name = "JSON|FILE")]
        partition: String,
        #[command(flatten)]
        common: Common,
    },
    /// One extraction step: pivot, radix and quotient system.
    Step {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exhibit a system as a contraction of a mixed-radix system.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 32, value_name = "D")]
        depth: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rebuild a system from a classification result.
    Expand {
        /// JSON written by `classify --json`, or the bare result.
        result: PathBuf,
        /// Compare the expansion with this system.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Build and check a truncated mixed-radix system.
    Bns {
        #[command(flatten)]
        radix: OptionalRadixSource,
        /// Radix rule after the prefix: G, periodic:G1,G2,... or none.
        #[arg(long, default_value = "2", value_name = "RULE")]
        tail: String,
        /// Number of digit sets before the closing member.
        #[arg(long, value_name = "R")]
        members: Option<usize>,
        /// Another schedule to compare with, like `12,20,(2)...`.
        #[arg(long, value_name = "SCHEDULE")]
        compare: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Split a set as a direct sum of two sets with at least two elements.
    Decompose {
        /// A set expression such as `[0,6)` or `{0,1,3}`.
        set: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search for sumset decompositions of a finite set.
    Search {
        /// A finite set such as `{0,1,2,3,4,5}` or `[0,6)`.
        set: String,
        #[arg(long, default_value = "direct-sum", value_name = "MODE")]
        mode: String,
        /// Allowed size of the difference with the target in slack modes.
        #[arg(long, default_value_t = 0, value_name = "K")]
        slack: usize,
        #[arg(long, value_name = "N")]
        max_nodes: Option<u64>,
        /// Accepted for reproducibility; the search is deterministic.
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: String) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

type Outcome = Result<Output, String>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(0, text)
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(Output::error)
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Verify { file, common } => cmd_verify(&file, &common),
        Command::Encode {
            n,
            radix,
            display_msd,
            json,
        } => cmd_encode(&n, &radix, display_msd, json),
        Command::Decode {
            digits,
            radix,
            display_msd,
            json,
        } => cmd_decode(&digits, &radix, display_msd, json),
        Command::Dilate {
            file,
            radix,
            common,
        } => cmd_dilate(&file, &radix, &common),
        Command::Contract {
            file,
            partition,
            common,
        } => cmd_contract(&file, &partition, &common),
        Command::Step { file, common } => cmd_step(&file, &common),
        Command::Classify {
            file,
            depth,
            common,
        } => cmd_classify(&file, depth, &common),
        Command::Expand {
            result,
            check,
            common,
        } => cmd_expand(&result, check.as_deref(), &common),
        Command::Bns {
            radix,
            tail,
            members,
            compare,
            common,
        } => cmd_bns(&radix, &tail, members, compare.as_deref(), &common),
        Command::Decompose { set, common } => cmd_decompose(&set, &common),
        Command::Search {
            set,
            mode,
            slack,
            max_nodes,
            seed: _,
            json,
        } => cmd_search(&set, &mode, slack, max_nodes, json),
    }
}

fn bound_of(common: &Common) -> Result<Bound, String> {
    Bound::new(common.bound).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

struct Loaded {
    name: Option<String>,
    system: AdditiveSystem,
}

fn load_system(path: &Path, bound: Bound) -> Result<Loaded, String> {
    let text = read(path)?;
    let doc = parse_system(&text).map_err(|e| format!("{}:{e}", path.display()))?;
    let system = doc
        .to_system(bound)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Loaded {
        name: doc.name,
        system,
    })
}

fn render(name: Option<String>, sys: &AdditiveSystem) -> String {
    SystemDocument::from_system(name, sys).to_string()
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn emit(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

fn nat(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn verdict_name(report: &VerificationReport) -> String {
    to_json(&report.verdict)["kind"]
        .as_str()
        .expect("tagged")
        .to_string()
}

fn radices_of(radices: Option<&str>, preset: Option<&str>) -> Result<Radices, String> {
    match (radices, preset) {
        (Some(r), _) => parse_radices(r),
        (None, Some(p)) => p
            .parse::<Preset>()
            .and_then(|p| p.radices())
            .map_err(|e| e.to_string()),
        (None, None) => Ok(Radices::empty()),
    }
}

fn parse_radices(text: &str) -> Result<Radices, String> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Radices::empty());
    }
    let values = t
        .split(',')
        .map(|g| {
            g.trim()
                .parse::<BigUint>()
                .map_err(|_| format!("malformed radix {g:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Radices::new(values).map_err(|e| e.to_string())
}

fn parse_tail(text: &str) -> Result<TailRule, String> {
    let t = text.trim();
    if t == "none" {
        return Ok(TailRule::None);
    }
    if let Some(p) = t.strip_prefix("periodic:") {
        return TailRule::periodic(parse_radices(p)?).map_err(|e| e.to_string());
    }
    let g: BigUint = t.parse().map_err(|_| format!("malformed tail rule {t:?}"))?;
    TailRule::constant(g).map_err(|e| e.to_string())
}

/// Reads the display form of a schedule: `12,20,(2)...` or `12,20`.
fn parse_schedule(text: &str) -> Result<GeneratorSchedule, String> {
    let t = text.trim();
    let (prefix, tail) = match t.split_once('(') {
        Some((p, rest)) => {
            let pattern = rest
                .strip_suffix(")...")
                .ok_or_else(|| format!("malformed schedule {t:?}"))?;
            let pattern = parse_radices(pattern)?;
            let tail = if pattern.len() == 1 {
                TailRule::constant(pattern[0].clone())
            } else {
                TailRule::periodic(pattern)
            }
            .map_err(|e| e.to_string())?;
            (p.trim_end_matches(',').to_string(), tail)
        }
        None => (t.to_string(), TailRule::None),
    };
    GeneratorSchedule::new(parse_radices(&prefix)?, tail).map_err(|e| e.to_string())
}

fn cmd_verify(file: &Path, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let loaded = load_system(file, bound)?;
    let report = loaded.system.verify(bound);
    let code = if report.is_valid() { 0 } else { 1 };
    let out = if common.json {
        emit(json!({
            "verdict": verdict_name(&report),
            "bound": bound.n_max(),
            "checked": report.checked,
            "members": loaded.system.len(),
            "report": to_json(&report),
        }))
    } else {
        format!("{report}\n")
    };
    Ok(Output::ok(code, out))
}

fn cmd_encode(n: &str, radix: &RadixSource, msd: bool, json_out: bool) -> Outcome {
    let n: BigUint = n
        .trim()
        .parse()
        .map_err(|_| format!("not a nonnegative integer: {n:?}"))?;
    let radices = radices_of(radix.radices.as_deref(), radix.preset.as_deref())?;
    let digits = encode(&n, &radices);
    let text = if msd {
        digits.display_msd()
    } else {
        digits.to_string()
    };
    let out = if json_out {
        emit(json!({
            "verdict": "ok",
            "n": nat(&n),
            "radices": to_json(&radices),
            "digits": to_json(&digits)["digits"],
            "overflow": nat(&digits.overflow),
            "text": text,
        }))
    } else {
        format!("{text}\n")
    };
    Ok(Output::ok(0, out))
}

fn cmd_decode(text: &str, radix: &RadixSource, msd: bool, json_out: bool) -> Outcome {
    let radices = radices_of(radix.radices.as_deref(), radix.preset.as_deref())?;
    let digits = if msd {
        MixedRadixDigits::parse_msd(text)
    } else {
        text.parse()
    }
    .map_err(|e| e.to_string())?;
    let n = decode(&digits, &radices).map_err(|e| e.to_string())?;
    let out = if json_out {
        emit(json!({
            "verdict": "ok",
            "n": nat(&n),
            "radices": to_json(&radices),
            "digits": to_json(&digits)["digits"],
            "overflow": nat(&digits.overflow),
        }))
    } else {
        format!("{n}\n")
    };
    Ok(Output::ok(0, out))
}

fn cmd_dilate(file: &Path, radix: &RadixSource, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let loaded = load_system(file, bound)?;
    let radices = radices_of(radix.radices.as_deref(), radix.preset.as_deref())?;
    let (sys, record) = dilate_family(&loaded.system, &radices).map_err(|e| e.to_string())?;
    let text = render(loaded.name, &sys);
    let out = if common.json {
        emit(json!({
            "verdict": "ok",
            "system": to_json(&sys),
            "record": to_json(&record),
            "text": text,
        }))
    } else {
        text
    };
    Ok(Output::ok(0, out))
}

fn cmd_contract(file: &Path, partition: &str, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let loaded = load_system(file, bound)?;
    let source = if partition.trim_start().starts_with('{') {
        partition.to_string()
    } else {
        read(Path::new(partition))?
    };
    let p: IndexPartition =
        serde_json::from_str(&source).map_err(|e| format!("partition: {e}"))?;
    let sys = addsys_core::contract(&loaded.system, &p, bound).map_err(|e| e.to_string())?;
    let text = render(loaded.name, &sys);
    let out = if common.json {
        emit(json!({
            "verdict": "ok",
            "bound": bound.n_max(),
            "system": to_json(&sys),
            "text": text,
        }))
    } else {
        text
    };
    Ok(Output::ok(0, out))
}

fn cmd_step(file: &Path, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let loaded = load_system(file, bound)?;
    let step = debruijn_step(&loaded.system, bound).map_err(|e| e.to_string())?;
    let text = render(loaded.name, &step.quotient);
    let out = if common.json {
        emit(json!({
            "verdict": "ok",
            "pivot": to_json(&step.pivot),
            "radix": nat(&step.radix),
            "case": to_json(&step.case),
            "quotient_bound": step.quotient_bound.n_max(),
            "step": to_json(&step),
            "witness": to_json(&step.witness()),
            "text": text,
        }))
    } else {
        format!(
            "pivot: {}\nradix: {}\ncase: {}\nquotient up to {}:\n{}",
            step.pivot, step.radix, step.case, step.quotient_bound, text
        )
    };
    Ok(Output::ok(0, out))
}

fn cmd_classify(file: &Path, depth: usize, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let loaded = load_system(file, bound)?;
    let result = classify(&loaded.system, depth, bound).map_err(|e| e.to_string())?;
    let out = if common.json {
        emit(json!({
            "verdict": if result.terminated { "terminated" } else { "truncated" },
            "prefix": to_json(result.prefix()),
            "terminated": result.terminated,
            "depth": result.depth,
            "tail": to_json(result.bns.schedule().tail()),
            "classes": to_json(&result.partition.classes),
            "rest": to_json(&result.partition.rest),
            "certification_bound": result.certification_bound.n_max(),
            "result": to_json(&result),
        }))
    } else {
        let mut s = String::new();
        writeln!(s, "schedule: {}", result.bns).unwrap();
        writeln!(s, "terminated: {}", result.terminated).unwrap();
        writeln!(s, "depth: {}", result.depth).unwrap();
        for c in &result.partition.classes {
            let mut parts: Vec<String> = c.positions.iter().map(ToString::to_string).collect();
            if result.partition.rest.as_ref() == Some(&c.label) {
                parts.push(format!("{}...", result.depth + 1));
            }
            writeln!(s, "{}: {}", c.label, parts.join(",")).unwrap();
        }
        writeln!(s, "certified up to {}", result.certification_bound).unwrap();
        s
    };
    Ok(Output::ok(0, out))
}

fn cmd_expand(file: &Path, check: Option<&Path>, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let value: Value =
        serde_json::from_str(&read(file)?).map_err(|e| format!("{}: {e}", file.display()))?;
    let inner = value.get("result").cloned().unwrap_or(value);
    let result: ClassificationResult =
        serde_json::from_value(inner).map_err(|e| format!("{}: {e}", file.display()))?;
    let sys = expand(&result, bound).map_err(|e| e.to_string())?;
    let text = render(None, &sys);
    let Some(check) = check else {
        let out = if common.json {
            emit(json!({
                "verdict": "expanded",
                "bound": bound.n_max(),
                "system": to_json(&sys),
                "text": text,
            }))
        } else {
            text
        };
        return Ok(Output::ok(0, out));
    };
    let expected = load_system(check, bound)?.system;
    let mismatch = first_mismatch(&sys, &expected, bound);
    let code = if mismatch.is_none() { 0 } else { 1 };
    let out = if common.json {
        emit(json!({
            "verdict": if mismatch.is_none() { "equal" } else { "differs" },
            "bound": bound.n_max(),
            "mismatch": mismatch,
            "system": to_json(&sys),
            "text": text,
        }))
    } else {
        match mismatch {
            None => format!("equal up to {bound}\n"),
            Some(label) => format!("differs at {label} up to {bound}\n"),
        }
    };
    Ok(Output::ok(code, out))
}

fn first_mismatch(x: &AdditiveSystem, y: &AdditiveSystem, bound: Bound) -> Option<String> {
    for m in x.members() {
        match y.get(&m.label) {
            Some(s) if s.bounded_eq(&m.set, bound) => {}
            _ => return Some(m.label.to_string()),
        }
    }
    y.labels()
        .find(|l| x.get(l).is_none())
        .map(ToString::to_string)
}

fn cmd_bns(
    radix: &OptionalRadixSource,
    tail: &str,
    members: Option<usize>,
    compare: Option<&str>,
    common: &Common,
) -> Outcome {
    let bound = bound_of(common)?;
    let prefix = radices_of(radix.radices.as_deref(), radix.preset.as_deref())?;
    let r = members.unwrap_or(prefix.len());
    let schedule = GeneratorSchedule::new(prefix, parse_tail(tail)?).map_err(|e| e.to_string())?;
    let sys = build_bns(&schedule, r).map_err(|e| e.to_string())?;
    let report = sys.verify(bound);
    let bns = BritishNumberSystem::new(schedule.clone()).ok();
    let indecomposable = bns.as_ref().map(is_indecomposable_system);
    let equal = match compare {
        None => None,
        Some(other) => {
            let other = BritishNumberSystem::new(parse_schedule(other)?)
                .map_err(|e| format!("--compare: {e}"))?;
            let this = bns
                .as_ref()
                .ok_or("--compare needs an infinite tail rule")?;
            Some(bns_equal(this, &other))
        }
    };
    let code = if report.is_valid() && equal != Some(false) {
        0
    } else {
        1
    };
    let text = render(None, &sys);
    let out = if common.json {
        emit(json!({
            "verdict": verdict_name(&report),
            "schedule": to_json(&schedule),
            "members": r,
            "rest_label": REST_LABEL,
            "indecomposable": indecomposable,
            "equal": equal,
            "report": to_json(&report),
            "system": to_json(&sys),
            "text": text,
        }))
    } else {
        let mut s = text;
        writeln!(s, "schedule: {schedule}").unwrap();
        writeln!(s, "{report}").unwrap();
        if let Some(i) = indecomposable {
            writeln!(s, "indecomposable: {i}").unwrap();
        }
        if let Some(e) = equal {
            writeln!(s, "equal: {e}").unwrap();
        }
        s
    };
    Ok(Output::ok(code, out))
}

fn cmd_decompose(set: &str, common: &Common) -> Outcome {
    let bound = bound_of(common)?;
    let expr = parse_set(set).map_err(|e| format!("set: {e}"))?;
    let s = expr.to_set(bound).map_err(|e| e.to_string())?;
    let found = is_decomposable_set(&s, bound).map_err(|e| e.to_string())?;
    let code = if found.is_some() { 0 } else { 1 };
    let out = if common.json {
        emit(match &found {
            Some(d) => json!({
                "verdict": "decomposable",
                "set": s.to_string(),
                "left": d.left.to_string(),
                "right": d.right.to_string(),
            }),
            None => json!({
                "verdict": "indecomposable",
                "set": s.to_string(),
            }),
        })
    } else {
        match &found {
            Some(d) => format!("{s} = {} (+) {}\n", group(&d.left), group(&d.right)),
            None => format!("{s} is indecomposable\n"),
        }
    };
    Ok(Output::ok(code, out))
}

fn group(s: &addsys_core::StructuredSet) -> String {
    match s {
        addsys_core::StructuredSet::DirectSum(_) => format!("({s})"),
        _ => s.to_string(),
    }
}

fn cmd_search(set: &str, mode: &str, slack: usize, max_nodes: Option<u64>, json_out: bool) -> Outcome {
    let mode: SearchMode = mode.parse().map_err(|e: SearchError| e.to_string())?;
    let expr = parse_set(set).map_err(|e| format!("set: {e}"))?;
    let s = expr
        .to_set(Bound::new(1).expect("positive"))
        .map_err(|e| e.to_string())?;
    let top = s
        .max_element()
        .ok_or("the search needs a finite set")?
        .to_usize()
        .filter(|&t| t < usize::MAX)
        .ok_or("set too large")?;
    let target: Vec<u64> = s
        .enumerate(Bound::new(top + 1).expect("positive"))
        .iter()
        .map(|x| x.to_u64().expect("below the maximum"))
        .collect();
    let problem = SearchProblem::new(target.iter().copied(), mode, slack).map_err(|e| e.to_string())?;
    let limits = Limits {
        max_nodes,
        max_time: None,
    };
    let (outcome, verdict) = match search(&problem, limits) {
        Ok(o) => {
            let v = if o.witnesses.is_empty() { "none" } else { "found" };
            (o, v)
        }
        Err(SearchError::BudgetExceeded { partial }) => (partial, "budget_exceeded"),
        Err(e) => return Err(e.to_string()),
    };
    let code = if outcome.witnesses.is_empty() { 1 } else { 0 };
    let out = if json_out {
        emit(json!({
            "verdict": verdict,
            "mode": mode.name(),
            "slack": slack,
            "target": target,
            "outcome": to_json(&outcome),
        }))
    } else {
        let mut s = String::new();
        for w in &outcome.witnesses {
            writeln!(s, "{w}").unwrap();
        }
        let state = if outcome.exhausted {
            "exhausted"
        } else {
            "budget exceeded"
        };
        writeln!(
            s,
            "{} witnesses, {state} after {} nodes",
            outcome.witnesses.len(),
            outcome.nodes_explored
        )
        .unwrap();
        s
    };
    Ok(Output::ok(code, out))
}
