// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use addsys_core::systems::Verdict;
use addsys_core::{
    build_bns, classify, debruijn_step, decode, dilate, dilate_family, encode, expand, fixtures,
    is_decomposable_set, search, validate_witness, AdditiveSystem, Bound, ContractionWitness,
    GeneratorSchedule, IndexPartition, Label, Limits, Member, MixedRadixDigits, Radices,
    SearchMode, SearchProblem, StepCase, StructuredSet, TailRule, Witness,
};
use addsys_core::transforms::compose_contraction_dilation;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::{addsys, golden, json_invocations, schema_errors};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn b(n: usize) -> Bound {
    Bound::new(n).expect("positive bound")
}

fn radices(v: &[u64]) -> Radices {
    Radices::from_u64s(v).expect("radices >= 2")
}

fn nat(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Labels and sets agree member by member below `bound`.
fn same_system(x: &AdditiveSystem, y: &AdditiveSystem, bound: Bound) -> Check {
    let lx: BTreeSet<&Label> = x.labels().collect();
    let ly: BTreeSet<&Label> = y.labels().collect();
    ensure!(lx == ly, "labels differ: {lx:?} vs {ly:?}");
    for m in x.members() {
        let other = y.get(&m.label).expect("same labels");
        ensure!(
            m.set.bounded_eq(other, bound),
            "member {} differs below {bound}: {} vs {}",
            m.label,
            m.set,
            other
        );
    }
    Ok(())
}

fn below(set: &StructuredSet, n: usize) -> BTreeSet<u64> {
    set.enumerate(b(n))
        .iter()
        .map(|x| x.to_u64().expect("small"))
        .collect()
}

fn british_monetary_exactness() -> Check {
    let r = radices(&[12, 20]);
    let d = encode(&nat(835), &r);
    ensure!(d == MixedRadixDigits::from_u64s(&[7, 9], 3), "encode(835) = {d}");
    ensure!(d.to_string() == "7,9+3", "display {d}");
    ensure!(decode(&d, &r).map_err(|e| e.to_string())? == nat(835), "decode does not invert");
    // pence + shillings + pounds
    let products = r.partial_products();
    let mut parts: Vec<BigUint> = d.digits.iter().zip(&products).map(|(x, g)| x * g).collect();
    parts.push(&d.overflow * &products[2]);
    ensure!(parts == [nat(7), nat(108), nat(720)], "contributions {parts:?}");
    Ok(())
}

fn digit_map_bijectivity() -> Check {
    let corpus: Vec<Vec<u64>> = vec![vec![2; 13], vec![12, 20], vec![3, 5, 7], vec![10, 10]];
    for prefix in corpus {
        let r = radices(&prefix);
        let top: u64 = prefix.iter().product();
        ensure!(top <= 10_000, "{prefix:?} exceeds the window");
        // odometer over the digit space, least significant first
        let mut digits = vec![0u64; prefix.len()];
        let mut hit = vec![false; top as usize];
        loop {
            let n = decode(&MixedRadixDigits::from_u64s(&digits, 0), &r)
                .map_err(|e| e.to_string())?
                .to_u64()
                .expect("small");
            ensure!(n < top, "{digits:?} decodes to {n} outside [0,{top})");
            ensure!(!hit[n as usize], "{n} reached twice");
            hit[n as usize] = true;
            let back = encode(&nat(n), &r);
            ensure!(
                back == MixedRadixDigits::from_u64s(&digits, 0),
                "encode({n}) = {back}, expected {digits:?}"
            );
            let Some(i) = (0..digits.len()).find(|&i| digits[i] + 1 < prefix[i]) else {
                break;
            };
            digits[i] += 1;
            digits[..i].fill(0);
        }
        ensure!(hit.iter().all(|&h| h), "{prefix:?}: some n in [0,{top}) unreached");
        ensure!(!encode(&nat(top), &r).overflow.is_zero(), "the full product must overflow");
    }
    Ok(())
}

fn verifier_soundness() -> Check {
    let bound = b(10_000);
    let systems = [
        fixtures::example_one(2),
        fixtures::example_one(10),
        fixtures::binary_truncation(6),
        fixtures::binary_truncation(13),
        fixtures::g_adic_truncation(10, 3),
        fixtures::g_adic_truncation(10, 4),
        fixtures::british_monetary(),
    ];
    for sys in systems {
        let report = sys.verify(bound);
        ensure!(report.is_valid(), "{sys}: {report}");
        for gone in sys.members() {
            let rest: Vec<Member> = sys
                .members()
                .iter()
                .filter(|m| m.label != gone.label)
                .cloned()
                .collect();
            let reduced = AdditiveSystem::new(rest).map_err(|e| e.to_string())?;
            let least = gone.set.least_positive().expect("member has a positive element");
            let report = reduced.verify(bound);
            // a gap beyond the window is invisible to a bounded check
            let expected = if least < nat(bound.n_max() as u64) {
                Verdict::MissingRepresentation { n: least.clone() }
            } else {
                Verdict::Valid
            };
            ensure!(
                report.verdict == expected,
                "{sys} without {}: {report}, expected {expected}",
                gone.label
            );
        }
    }
    Ok(())
}

fn random_radices(rng: &mut ChaCha8Rng, len: std::ops::RangeInclusive<usize>) -> Radices {
    let n = rng.random_range(len);
    let v: Vec<u64> = (0..n).map(|_| rng.random_range(2..=6)).collect();
    radices(&v)
}

fn random_small_system(rng: &mut ChaCha8Rng) -> AdditiveSystem {
    let corpus = fixtures::corpus();
    if rng.random_bool(0.5) {
        corpus[rng.random_range(0..corpus.len())].clone()
    } else {
        let prefix = random_radices(rng, 0..=3);
        let tail = TailRule::constant(rng.random_range(2u32..=4)).expect("radix >= 2");
        let r = prefix.len();
        build_bns(&GeneratorSchedule::new(prefix, tail).expect("schedule"), r).expect("bns")
    }
}

fn iterated_dilation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e11);
    let bound = b(1000);
    for _ in 0..50 {
        let sys = random_small_system(&mut rng);
        let r = random_radices(&mut rng, 2..=3);
        let (family, record) = dilate_family(&sys, &r).map_err(|e| e.to_string())?;
        let mut iterated = sys.clone();
        for g in r.as_slice().iter().rev() {
            iterated = dilate(&iterated, g).map_err(|e| e.to_string())?.0;
        }
        same_system(&family, &iterated, bound).map_err(|e| format!("{sys} by {r:?}: {e}"))?;
        let products = r.partial_products();
        ensure!(record.partial_products == products, "record products");
        // introduced set i is the partial product before i times [0, radix i)
        for (i, g) in r.as_slice().iter().enumerate() {
            let want: BTreeSet<u64> = (0..g.to_u64().unwrap())
                .map(|x| x * products[i].to_u64().unwrap())
                .filter(|&x| x < 1000)
                .collect();
            let got = below(family.get(&Label::Position(i as u64 + 1)).expect("introduced"), 1000);
            ensure!(got == want, "position {} of {r:?}", i + 1);
        }
    }
    Ok(())
}

/// Random partition of `labels` into nonempty classes.
fn random_partition(rng: &mut ChaCha8Rng, labels: &[Label], prefix: &str) -> IndexPartition {
    let k = rng.random_range(1..=labels.len());
    let mut classes: Vec<Vec<Label>> = vec![Vec::new(); k];
    for (i, l) in labels.iter().enumerate() {
        // each class gets at least one label
        let c = if i < k { i } else { rng.random_range(0..k) };
        classes[c].push(l.clone());
    }
    IndexPartition::from_classes(
        classes
            .into_iter()
            .enumerate()
            .map(|(i, members)| (Label::name(format!("{prefix}{i}")), members)),
    )
    .expect("disjoint classes")
}

fn shuffled_labels(rng: &mut ChaCha8Rng, sys: &AdditiveSystem) -> Vec<Label> {
    let mut labels: Vec<Label> = sys.labels().cloned().collect();
    for i in (1..labels.len()).rev() {
        labels.swap(i, rng.random_range(0..=i));
    }
    labels
}

fn witness_composition() -> Check {
    let bound = b(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de);
    let corpus = fixtures::corpus();
    for trial in 0..50 {
        let base = &corpus[trial % corpus.len()];
        let s_radices = random_radices(&mut rng, 0..=2);
        let (dilated_base, _) = dilate_family(base, &s_radices).map_err(|e| e.to_string())?;
        let labels = shuffled_labels(&mut rng, &dilated_base);
        let inner = ContractionWitness {
            partition: random_partition(&mut rng, &labels, "B"),
            radices: s_radices,
        };
        let middle = inner.apply(base, bound).map_err(|e| e.to_string())?;
        let r_radices = random_radices(&mut rng, 0..=2);
        let (dilated_middle, _) = dilate_family(&middle, &r_radices).map_err(|e| e.to_string())?;
        let labels = shuffled_labels(&mut rng, &dilated_middle);
        let outer = ContractionWitness {
            partition: random_partition(&mut rng, &labels, "X"),
            radices: r_radices,
        };
        let two_step = outer.apply(&middle, bound).map_err(|e| e.to_string())?;
        let composed = compose_contraction_dilation(&outer, &inner).map_err(|e| e.to_string())?;
        let one_step = composed.apply(base, bound).map_err(|e| e.to_string())?;
        same_system(&two_step, &one_step, bound).map_err(|e| format!("trial {trial}: {e}"))?;
    }

    // an instance where one class draws on all three parts of the formula
    let base = fixtures::contraction_fixture();
    let inner = ContractionWitness {
        partition: IndexPartition::from_classes([
            (Label::name("B1"), vec![Label::Position(1), Label::name("A1")]),
            (Label::name("B2"), vec![Label::Position(2)]),
            (Label::name("B3"), vec![Label::name("A2"), Label::name("A3")]),
        ])
        .map_err(|e| e.to_string())?,
        radices: radices(&[3, 2]),
    };
    let outer = ContractionWitness {
        partition: IndexPartition::from_classes([
            (Label::name("X"), vec![Label::Position(1), Label::name("B1")]),
            (Label::name("Y"), vec![Label::Position(2), Label::name("B2")]),
            (Label::name("Z"), vec![Label::name("B3")]),
        ])
        .map_err(|e| e.to_string())?,
        radices: radices(&[2, 5]),
    };
    let composed = compose_contraction_dilation(&outer, &inner).map_err(|e| e.to_string())?;
    let x = &composed.partition.classes()[0];
    let r = outer.radices.len() as u64;
    let own = x.members.iter().any(|l| l.position().is_some_and(|p| p <= r));
    let moved = x
        .members
        .iter()
        .any(|l| l.position().is_some_and(|p| p > r && p <= r + inner.radices.len() as u64));
    let from_base = x.members.iter().any(|l| !l.is_position());
    ensure!(own && moved && from_base, "class X = {:?}", x.members);
    let two_step = outer
        .apply(&inner.apply(&base, bound).map_err(|e| e.to_string())?, bound)
        .map_err(|e| e.to_string())?;
    let one_step = composed.apply(&base, bound).map_err(|e| e.to_string())?;
    same_system(&two_step, &one_step, bound)
}

fn step_reconstruction() -> Check {
    let mut cases = BTreeSet::new();
    for sys in fixtures::corpus().into_iter().filter(|s| s.len() > 1) {
        let bound = b(10_000);
        let step = debruijn_step(&sys, bound).map_err(|e| e.to_string())?;
        let g = step.radix.to_usize().expect("small radix");
        let window = 10_000 / g * g;
        let rebuilt = step.reconstruct(b(window)).map_err(|e| e.to_string())?;
        same_system(&rebuilt, &sys, b(window)).map_err(|e| format!("{sys}: {e}"))?;
        // quotient sets are {k : k g in A_i}, read off the input directly
        let q = window / g;
        for m in step.quotient.members() {
            let source = below(sys.get(&m.label).expect("quotient keeps labels"), window);
            let want: BTreeSet<u64> = (0..q as u64).filter(|k| source.contains(&(k * g as u64))).collect();
            ensure!(below(&m.set, q) == want, "{sys}: quotient of {}", m.label);
        }
        // g is the least positive integer missing from the member holding 1
        let pivot = below(sys.get(&step.pivot).expect("pivot"), window);
        ensure!(pivot.contains(&1), "pivot lacks 1");
        let least_missing = (1..).find(|n| !pivot.contains(n)).expect("finite window");
        ensure!(least_missing == g as u64, "{sys}: g = {g}, expected {least_missing}");
        cases.insert(format!("{:?}", step.case));
        let expected = if step.quotient.get(&step.pivot).is_some() {
            StepCase::Contraction
        } else {
            StepCase::Dilation
        };
        ensure!(step.case == expected, "{sys}: case {:?}", step.case);
    }
    ensure!(cases.len() == 2, "cases exercised: {cases:?}");
    let fixture = debruijn_step(&fixtures::contraction_fixture(), b(10_000)).map_err(|e| e.to_string())?;
    ensure!(fixture.case == StepCase::Contraction, "fixture case {:?}", fixture.case);
    Ok(())
}

fn classification_round_trip() -> Check {
    let bound = b(10_000);
    for sys in fixtures::corpus() {
        let result = classify(&sys, 32, bound).map_err(|e| e.to_string())?;
        ensure!(result.terminated, "{sys} did not terminate");
        let cert = result.certification_bound;
        let expanded = expand(&result, cert).map_err(|e| e.to_string())?;
        same_system(&expanded, &sys, cert).map_err(|e| format!("{sys}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut prefixes: Vec<Vec<u64>> = vec![vec![], vec![12, 20], vec![2; 6], vec![3, 5, 7]];
    for _ in 0..40 {
        let n = rng.random_range(0..=6);
        prefixes.push((0..n).map(|_| rng.random_range(2..=7)).collect());
    }
    for prefix in prefixes {
        let tail = TailRule::constant(rng.random_range(2u32..=5)).expect("radix >= 2");
        let schedule = GeneratorSchedule::new(radices(&prefix), tail).map_err(|e| e.to_string())?;
        let sys = build_bns(&schedule, prefix.len()).map_err(|e| e.to_string())?;
        let result = classify(&sys, 32, b(1_000_000)).map_err(|e| e.to_string())?;
        ensure!(result.prefix() == schedule.prefix(), "{prefix:?}: recovered {:?}", result.prefix());
        for class in &result.partition.classes {
            let expected = match class.label.position() {
                Some(p) => BTreeSet::from([p]),
                None => BTreeSet::new(),
            };
            ensure!(class.positions == expected, "{prefix:?}: class {} = {:?}", class.label, class.positions);
        }
    }
    Ok(())
}

fn mask_elements(mask: u32) -> Vec<u64> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Every pair of 0-containing subsets of `s` with at least two elements each
/// whose sums are distinct and fill `s` exactly.
fn pair_oracle(s: u32) -> bool {
    let subsets: Vec<u32> = (1..=s)
        .filter(|m| m & !s == 0 && m & 1 == 1 && m.count_ones() >= 2)
        .collect();
    subsets.iter().any(|&x| {
        subsets.iter().any(|&y| {
            let mut acc = 0u64;
            for e in mask_elements(x) {
                let shifted = (y as u64) << e;
                if acc & shifted != 0 {
                    return false;
                }
                acc |= shifted;
            }
            acc == s as u64
        })
    })
}

fn check_split(set: &StructuredSet, left: &StructuredSet, right: &StructuredSet) -> Check {
    let n = set.max_element().and_then(|m| m.to_usize()).expect("finite") + 1;
    let (l, r) = (below(left, n), below(right, n));
    ensure!(l.len() >= 2 && r.len() >= 2, "parts too small: {left}, {right}");
    let mut sums = BTreeSet::new();
    for x in &l {
        for y in &r {
            ensure!(sums.insert(x + y), "{} repeats in {left} + {right}", x + y);
        }
    }
    ensure!(sums == below(set, n), "{left} + {right} != {set}");
    Ok(())
}

fn decomposition_oracle() -> Check {
    let bound = b(64);
    for s in (1u32..1 << 12).filter(|m| m & 1 == 1) {
        let set = StructuredSet::finite(mask_elements(s)).map_err(|e| e.to_string())?;
        let found = is_decomposable_set(&set, bound).map_err(|e| e.to_string())?;
        ensure!(found.is_some() == pair_oracle(s), "{set}: {found:?}");
        if let Some(d) = found {
            check_split(&set, &d.left, &d.right)?;
        }
    }
    for p in [2u32, 3, 5, 7, 11] {
        let set = StructuredSet::interval(p).map_err(|e| e.to_string())?;
        let found = is_decomposable_set(&set, bound).map_err(|e| e.to_string())?;
        ensure!(found.is_none(), "[0,{p}) split as {found:?}");
    }
    for g in [4u32, 6] {
        let set = StructuredSet::interval(g).map_err(|e| e.to_string())?;
        let d = is_decomposable_set(&set, bound)
            .map_err(|e| e.to_string())?
            .ok_or(format!("[0,{g}) not split"))?;
        check_split(&set, &d.left, &d.right)?;
    }
    Ok(())
}

fn lab_exhaustion() -> Check {
    let six = SearchProblem::new(0..6, SearchMode::DirectSum, 0).map_err(|e| e.to_string())?;
    let out = search(&six, Limits::unlimited()).map_err(|e| e.to_string())?;
    let expected = vec![Witness::pair([0, 1], [0, 2, 4]), Witness::pair([0, 1, 2], [0, 3])];
    ensure!(out.exhausted, "[0,6) search not exhausted");
    ensure!(out.witnesses == expected, "[0,6) witnesses {:?}", out.witnesses);
    ensure!(out.witnesses.iter().all(|w| validate_witness(&six, w)), "invalid witness");
    let gap = SearchProblem::new([0, 1, 3], SearchMode::DirectSum, 0).map_err(|e| e.to_string())?;
    let out = search(&gap, Limits::unlimited()).map_err(|e| e.to_string())?;
    ensure!(out.exhausted && out.witnesses.is_empty(), "{{0,1,3}}: {out:?}");
    Ok(())
}

fn cli_contract() -> Check {
    let r = addsys(&["encode", "--preset", "british-monetary", "835"]);
    ensure!(r.code == 0 && r.stdout == golden("encode_monetary.txt"), "encode: {} {}", r.code, r.stdout);
    ensure!(r.stdout.trim() == "7,9+3", "encode: {}", r.stdout);
    let r = addsys(&["verify", "examples/monetary.sys", "--bound", "480"]);
    ensure!(r.code == 0 && r.stdout == golden("verify_monetary.txt"), "verify: {} {}", r.code, r.stdout);
    ensure!(r.stdout.trim() == "Valid up to 480", "verify: {}", r.stdout);
    let r = addsys(&["classify", "examples/monetary.sys", "--json"]);
    ensure!(r.code == 0 && r.stdout == golden("classify_monetary.json"), "classify: {}", r.code);
    let v: Value = serde_json::from_str(&r.stdout).map_err(|e| e.to_string())?;
    ensure!(v["prefix"] == serde_json::json!([12, 20]), "prefix {}", v["prefix"]);
    ensure!(v["terminated"] == Value::Bool(true), "terminated {}", v["terminated"]);
    let errors = schema_errors("classify", &v);
    ensure!(errors.is_empty(), "classify schema: {errors:?}");
    for (command, args, code) in json_invocations() {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let r = addsys(&argv);
        ensure!(r.code == code, "{args:?}: exit {} ({})", r.code, r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).map_err(|e| format!("{args:?}: {e}"))?;
        let errors = schema_errors(command, &v);
        ensure!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    for args in [&["verify"][..], &["no-such-command"], &["encode", "835"], &["verify", "examples/missing.sys"]] {
        let r = addsys(args);
        ensure!(r.code == 2 && !r.stderr.is_empty(), "{args:?}: exit {}", r.code);
    }
    let r = addsys(&["decompose", "{0,1,3}"]);
    ensure!(r.code == 1, "indecomposable set: exit {}", r.code);
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("british monetary exactness", british_monetary_exactness),
        ("digit map bijectivity", digit_map_bijectivity),
        ("verifier soundness", verifier_soundness),
        ("iterated dilation", iterated_dilation),
        ("witness composition", witness_composition),
        ("step reconstruction", step_reconstruction),
        ("classification round trip", classification_round_trip),
        ("set decomposition oracle", decomposition_oracle),
        ("sumset lab exhaustion", lab_exhaustion),
        ("cli contract", cli_contract),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {} {name}: PASS ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
