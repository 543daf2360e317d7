use serde_json::Value;
use symext::cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("symext").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn admissible_lists_bourbaki_nodes() {
    assert_eq!(exec(&["admissible", "E6"]), (0, "1 6\n".into(), String::new()));
    assert_eq!(exec(&["admissible", "C3"]).1, "3\n");
    assert_eq!(exec(&["admissible", "A3"]).1, "1 2 3\n");
    assert_eq!(exec(&["admissible", "E8"]).1, "\n");
}

#[test]
fn surgery_json_for_e7() {
    let (code, out, _) = exec(&["surgery", "E7", "7", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["source"], "E7");
    assert_eq!(v["node"], 7);
    assert_eq!(v["N"], 26);
    assert_eq!(v["components"][0]["diagram"], "E6");
    let weights = v["weights"].as_array().unwrap();
    assert_eq!(weights.len(), 27);
    let grades: Vec<i64> = weights.iter().map(|w| w["grade"].as_i64().unwrap()).collect();
    assert_eq!(grades.iter().filter(|&&g| g == 1).count(), 16);
    assert_eq!(grades.iter().filter(|&&g| g == 2).count(), 10);
    let labels: Vec<Vec<i64>> = weights
        .iter()
        .map(|w| w["labels"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect();
    let mut sorted = labels.clone();
    sorted.sort();
    assert_eq!(labels, sorted);
}

#[test]
fn surgery_text_names_the_row() {
    let (code, out, _) = exec(&["surgery", "C4", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("row         sym2(n=3)"), "{out}");
    let (_, out, _) = exec(&["surgery", "A4", "1"]);
    assert!(out.contains("totally geodesic"), "{out}");
}

#[test]
fn weights_accepts_negative_labels_and_rejects_non_dominant() {
    let (code, out, _) = exec(&["weights", "A2", "1", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("dimension 8\n"));
    assert!(out.contains("(0,0)  2"));
    let (code, _, err) = exec(&["weights", "A2", "-1", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("not dominant"));
    assert_eq!(exec(&["weights", "A2", "1"]).0, 2);
}

#[test]
fn catalog_json_has_six_rows() {
    let (code, out, _) = exec(&["catalog", "list", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().any(|r| r["family"] == "tensor" && r["formulas"][1] == "Q := p1q2 + q1p2"));
    assert_eq!(exec(&["catalog", "list"]).0, 0);
}

#[test]
fn realize_and_check() {
    let (code, out, _) = exec(&["realize", "sym2", "1", "--check"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 fail"));
    let (code, out, _) = exec(&["realize", "halfspin-d5", "--check", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let (code, out, _) = exec(&["realize", "tensor", "1", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("blocks  [1, 3, 2]"));
    assert_eq!(exec(&["realize", "wedge2", "3", "--check"]).0, 2);
    assert_eq!(exec(&["realize", "e6-27", "--check"]).0, 2);
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = exec(&["verify", "e6", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "e6");
    assert_eq!(v["summary"]["pass"], v["checks"].as_array().unwrap().len());
    let (code, out, _) = exec(&["verify", "signatures"]);
    assert_eq!(code, 0);
    assert!(out.contains("FINDING tensor"));
    assert!(out.lines().last().unwrap().starts_with("signatures: "));
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["bogus"][..], &["verify", "nothing"], &["surgery", "E7", "9"], &["surgery", "E7", "0"], &["admissible", "Q3"], &[]] {
        let (code, _, err) = exec(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
    assert_eq!(exec(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    for args in [&["surgery", "E6", "1", "--json"][..], &["verify", "gauss", "--json"], &["weights", "D5", "0", "0", "0", "0", "1"]] {
        assert_eq!(exec(args), exec(args));
    }
}
