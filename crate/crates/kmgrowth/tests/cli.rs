use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use kmgrowth::formats::{AlgebraSpec, ElementLine, FitReport, SeriesFile};
use kmgrowth_core::catalog::BUILTIN_NAMES;
use kmgrowth_core::reference;
use serde_json::Value;

fn kmgrowth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmgrowth")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = kmgrowth(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    kmgrowth(args).status.code().unwrap()
}

fn write_json(path: &Path, value: &impl serde::Serialize) {
    fs::write(path, serde_json::to_string(value).unwrap()).unwrap();
}

#[test]
fn cosets_of_a4_in_h() {
    let out = ok(&["cosets", "--algebra", "paperH", "--subset", "1,2,3,4", "--max-degree", "6"]);
    let file: SeriesFile = serde_json::from_str(&out).unwrap();
    assert_eq!(file.coeffs, reference::R1_COUNTS);
    assert_eq!(file.order, Some(6));
}

#[test]
fn poincare_truncated_and_pretty() {
    let out = ok(&["poincare", "--algebra", "paperH", "--max-degree", "4"]);
    assert_eq!(out, "{\"coeffs\":[1,6,20,52,117],\"order\":4}\n");
    let table = ok(&["poincare", "--algebra", "paperH", "--max-degree", "2", "--pretty"]);
    assert_eq!(table, "degree  count\n     0  1\n     1  6\n     2  20\n");
}

#[test]
fn formula_and_bfs_agree_on_finite_builtins() {
    for name in BUILTIN_NAMES.iter().filter(|n| !n.starts_with("aff") && **n != "paperH") {
        let bfs = ok(&["poincare", "--algebra", name]);
        let formula = ok(&["poincare", "--algebra", name, "--method", "formula"]);
        assert_eq!(bfs, formula, "{name}");
        let global = ok(&["poincare", "--algebra", name, "--strategy", "global"]);
        assert_eq!(bfs, global, "{name}");
    }
}

#[test]
fn bott_and_bfs_agree_on_affine_d4() {
    let bfs = ok(&["poincare", "--algebra", "affD4", "--max-degree", "10"]);
    let bott = ok(&["poincare", "--algebra", "affD4", "--max-degree", "10", "--method", "bott"]);
    assert_eq!(bfs, bott);
}

#[test]
fn fit_b5_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("h.json");
    write_json(&series, &SeriesFile { coeffs: reference::HYPERBOLIC_SERIES.to_vec(), order: Some(25) });
    let out = ok(&["fit", "--series", series.to_str().unwrap(), "--numerator", "B5", "--dmax", "24"]);
    let fit: FitReport = serde_json::from_str(&out).unwrap();
    assert_eq!(fit.denominator, reference::Q_B5);
    assert_eq!(fit.slack, 1);
    assert_eq!(fit.verified_to, 25);

    // too few coefficients for blind recovery
    let s = series.to_str().unwrap();
    assert_eq!(code(&["fit", "--series", s, "--dnum-max", "25", "--dden-max", "24"]), 1);
}

#[test]
fn fit_with_numerator_file_and_pade_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("geo.json");
    write_json(&series, &SeriesFile { coeffs: vec![1, 2, 2, 2, 2, 2, 2], order: Some(6) });
    let num = dir.path().join("num.json");
    write_json(&num, &SeriesFile { coeffs: vec![1, 1], order: None });
    let s = series.to_str().unwrap();
    let by_file = ok(&["fit", "--series", s, "--numerator", num.to_str().unwrap(), "--dmax", "1"]);
    let pade = ok(&["fit", "--series", s, "--dnum-max", "1", "--dden-max", "1"]);
    let a: FitReport = serde_json::from_str(&by_file).unwrap();
    let b: FitReport = serde_json::from_str(&pade).unwrap();
    assert_eq!((a.numerator.clone(), a.denominator.clone()), (vec![1, 1], vec![1, -1]));
    assert_eq!((a.numerator, a.denominator), (b.numerator, b.denominator));
    assert_eq!(code(&["fit", "--series", s, "--dmax", "1"]), 2);
}

#[test]
fn element_dump_is_ordered_and_complete() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("w.jsonl");
    let out = ok(&["poincare", "--algebra", "paperH", "--max-degree", "3", "--dump-elements", dump.to_str().unwrap()]);
    let file: SeriesFile = serde_json::from_str(&out).unwrap();
    let text = fs::read_to_string(&dump).unwrap();
    let lines: Vec<ElementLine> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len() as i64, file.coeffs.iter().sum::<i64>());
    let keys: Vec<(usize, Vec<usize>)> = lines.iter().map(|l| (l.length, l.word.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let level2: Vec<Vec<usize>> = lines.iter().filter(|l| l.length == 2).map(|l| l.word.clone()).collect();
    assert_eq!(level2.len(), 20);
}

#[test]
fn list_words_for_cosets() {
    let out = ok(&["cosets", "--algebra", "paperH", "--subset", "1,2,3,4", "--max-degree", "2", "--list-words"]);
    let words: Vec<Vec<usize>> = out
        .lines()
        .map(|l| serde_json::from_str::<ElementLine>(l).unwrap().word)
        .collect();
    assert_eq!(words, vec![vec![], vec![5], vec![6], vec![3, 5], vec![3, 6], vec![5, 6]]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let args = |p: &Path| {
        vec![
            "poincare".to_string(),
            "--algebra".into(),
            "paperH".into(),
            "--max-degree".into(),
            "7".into(),
            "--strategy".into(),
            "global".into(),
            "--dump-elements".into(),
            p.to_str().unwrap().into(),
        ]
    };
    let run = |p: &Path| {
        let v = args(p);
        ok(&v.iter().map(String::as_str).collect::<Vec<_>>())
    };
    assert_eq!(run(&a), run(&b));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn sub_and_relabel_write_loadable_specs() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("affd4.json");
    ok(&["sub", "--algebra", "paperH", "--subset", "2,3,4,5,6", "--out", sub.to_str().unwrap()]);
    let spec: AlgebraSpec = serde_json::from_str(&fs::read_to_string(&sub).unwrap()).unwrap();
    assert_eq!(spec.name, "affD4");
    let from_file = ok(&["poincare", "--algebra", sub.to_str().unwrap(), "--max-degree", "8"]);
    let bott = ok(&["poincare", "--algebra", sub.to_str().unwrap(), "--max-degree", "8", "--method", "bott"]);
    assert_eq!(from_file, bott);

    let rel = dir.path().join("h2.json");
    ok(&["relabel", "--algebra", "paperH", "--order", "6,5,4,3,2,1", "--out", rel.to_str().unwrap()]);
    let relabelled = ok(&["poincare", "--algebra", rel.to_str().unwrap(), "--max-degree", "6"]);
    assert_eq!(relabelled, ok(&["poincare", "--algebra", "paperH", "--max-degree", "6"]));
}

#[test]
fn reflect_gamma_word() {
    assert_eq!(ok(&["reflect", "--algebra", "A2", "--weight", "1,1", "--generator", "1"]), "[-1,2]\n");
    assert_eq!(ok(&["gamma", "--algebra", "A2", "--image", "-1,-1"]), "[2,2]\n");
    assert_eq!(ok(&["word", "--algebra", "A2", "--image", "-1,-1"]), "[1,2,1]\n");
    assert_eq!(code(&["word", "--algebra", "A2", "--image", "-1,-2"]), 2);
}

#[test]
fn verify_single_case() {
    let out = ok(&["verify", "--case", "finite-catalog"]);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["case"], "finite-catalog");
    assert_eq!(lines[0]["pass"], true);
    assert!(lines[0]["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["poincare"]), 2);
    assert_eq!(code(&["poincare", "--algebra", "paperH", "--strategy", "bogus"]), 2);
    assert_eq!(code(&["poincare", "--algebra", "nope", "--max-degree", "2"]), 2);
    assert_eq!(code(&["poincare", "--algebra", "paperH"]), 2);
    assert_eq!(code(&["poincare", "--algebra", "paperH", "--method", "formula"]), 2);
    assert_eq!(code(&["cosets", "--algebra", "paperH", "--subset", "7", "--max-degree", "2"]), 2);
    assert_eq!(code(&["verify", "--case", "nope"]), 2);
    // budget exhaustion is a computation failure
    let out = kmgrowth(&["poincare", "--algebra", "paperH", "--max-degree", "10", "--max-frontier", "100"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"name":"bad","cartan":[[2,1],[-1,2]]}"#).unwrap();
    assert_eq!(code(&["poincare", "--algebra", bad.to_str().unwrap(), "--max-degree", "2"]), 2);
    fs::write(&bad, "not json").unwrap();
    assert_eq!(code(&["poincare", "--algebra", bad.to_str().unwrap(), "--max-degree", "2"]), 2);
}
