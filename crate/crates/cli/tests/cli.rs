use proptest::prelude::*;
use serde_json::Value;

use moisil::lm::{canonical, check_axioms, AxiomSystem};
use moisil::mutation::{mutate, mutations};
use moisil_cli::document::{parse_document, Document};
use moisil_cli::samples::sample_documents;
use moisil_cli::{emit_report, run_with_stdin, Format, Verdict};

fn report_json(argv: &[&str], stdin: &str) -> (Value, i32) {
    let out = run_with_stdin(argv, stdin);
    let value = serde_json::from_str(&out.render()).expect("reports are JSON");
    (value, out.code())
}

fn raw(argv: &[&str], stdin: &str) -> String {
    let mut argv = argv.to_vec();
    argv.push("--raw");
    let out = run_with_stdin(&argv, stdin);
    assert_eq!(out.code(), 0, "{}", out.render());
    out.render()
}

#[test]
fn gen_canonical_three_is_a_four_element_chain() {
    let text = raw(&["moisil", "gen", "canonical", "--n", "3"], "");
    let Document::Lm { algebra, labels } = parse_document(&text).unwrap() else {
        panic!("expected an lm document");
    };
    assert_eq!(algebra, canonical(3).unwrap());
    assert_eq!(labels.unwrap(), ["0", "1/3", "2/3", "1"]);
}

#[test]
fn check_l_on_canonical_three_passes() {
    let doc = Document::lm(canonical(3).unwrap()).serialize();
    let (report, code) = report_json(&["moisil", "check", "--system", "L"], &doc);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["violations"], Value::Array(vec![]));
}

#[test]
fn laws_checked_is_the_sum_of_case_counts() {
    let c = canonical(3).unwrap();
    let core = check_axioms(&c, AxiomSystem::L).unwrap();
    // L5 ranges over pairs i <= j of 1..=3 and all four elements.
    assert_eq!(core.result("L5").unwrap().checked, 6 * 4);
    let total: u64 = core.results.iter().map(|r| r.checked).sum();
    let (report, _) = report_json(
        &["moisil", "check", "--system", "L"],
        &Document::lm(c).serialize(),
    );
    assert_eq!(report["stats"]["laws_checked"], total);
}

#[test]
fn l5_violation_names_the_law_and_renders_tuples() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/violate_l5.json"
    ))
    .unwrap();
    let out = run_with_stdin(&["moisil", "check", "--system", "L"], &text);
    assert_eq!(out.code(), 1);
    assert_eq!(out.report.verdict, Verdict::Fail);
    let l5 = out
        .report
        .violations
        .iter()
        .find(|v| v.law == "L5")
        .expect("L5 reported");
    let w = l5.witness.as_ref().unwrap();
    assert_eq!(w.indices, [1, 2]);
    assert_eq!(w.elements, [0]);
    assert_eq!(l5.rendered, "L5 fails at indices [1, 2] on (0,0)");
    let text_report = emit_report(&out.report, Format::Text);
    assert!(text_report.contains("violation: L5 fails at indices [1, 2] on (0,0)"));
}

#[test]
fn verify_all_small_passes() {
    let (report, code) = report_json(
        &[
            "moisil",
            "verify",
            "--suite",
            "all",
            "--max-atoms",
            "2",
            "--max-n",
            "4",
        ],
        "",
    );
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["stats"]["sizes"]["suites"], 9);
}

#[test]
fn json_reports_have_sorted_keys() {
    let out = run_with_stdin(&["moisil", "gen", "mvchain", "--n", "2"], "");
    let text = out.render();
    let keys: Vec<&str> = [
        "\"command\"",
        "\"output\"",
        "\"stats\"",
        "\"verdict\"",
        "\"violations\"",
    ]
    .into_iter()
    .collect();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|p| p[0] < p[1]), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for argv in [
        &["moisil", "frobnicate"][..],
        &["moisil", "gen", "canonical"],
        &["moisil", "check", "--system", "Q"],
    ] {
        let out = run_with_stdin(argv, "");
        assert_eq!(out.code(), 2, "{argv:?}");
        assert_eq!(out.report.verdict, Verdict::Error);
    }
    let help = run_with_stdin(&["moisil", "--help"], "");
    assert_eq!(help.code(), 0);
    assert!(help.render().contains("Usage"));
}

#[test]
fn wrong_document_kind_is_an_input_error() {
    let bool_doc = r#"{"kind":"bool","atoms":["p"]}"#;
    let (report, code) = report_json(&["moisil", "center"], bool_doc);
    assert_eq!(code, 2);
    assert_eq!(report["error"]["class"], "schema");
}

#[test]
fn lambda_then_sigma_recovers_j_of_b() {
    let j = raw(&["moisil", "gen", "j", "--n", "3", "--atoms", "2"], "");
    let obj = raw(&["moisil", "lambda"], &j);
    let Document::BoolIdeals(o) = parse_document(&obj).unwrap() else {
        panic!("expected an ideal sequence");
    };
    assert_eq!((o.n(), o.base().atom_count()), (3, 2));
    assert_eq!(o.generators(), [3, 3]);
    let back = raw(&["moisil", "sigma"], &obj);
    let (Document::Lm { algebra: a, .. }, Document::Lm { algebra: b, .. }) =
        (parse_document(&j).unwrap(), parse_document(&back).unwrap())
    else {
        panic!("expected lm documents");
    };
    assert_eq!(a.size(), b.size());
}

#[test]
fn center_of_t_is_the_base() {
    let t = raw(&["moisil", "gen", "t", "--n", "4", "--atoms", "3"], "");
    let center = raw(&["moisil", "center"], &t);
    let Document::Bool(b) = parse_document(&center).unwrap() else {
        panic!("expected a bool document");
    };
    assert_eq!(b.size(), 8);
}

#[test]
fn dualize_twice_reproduces_the_input() {
    let obj = r#"{"kind":"boolideals","n":4,"atoms":["a","b"],"generators":[1,3,1]}"#;
    let space = raw(&["moisil", "dualize"], obj);
    assert_eq!(
        space,
        "{\"kind\":\"space\",\"n\":4,\"opens\":[[0],[0,1],[0]],\"points\":[\"U_a\",\"U_b\"]}\n"
    );
    let back = raw(&["moisil", "dualize"], &space);
    let Document::BoolIdeals(o) = parse_document(&back).unwrap() else {
        panic!("expected an ideal sequence");
    };
    assert_eq!(o.generators(), [1, 3, 1]);
    let (report, code) = report_json(&["moisil", "dualize", "--roundtrip"], obj);
    assert_eq!(code, 0, "{report}");
    assert!(report["stats"]["laws_checked"].as_u64().unwrap() > 0);
}

#[test]
fn proper_and_somv_agree_on_the_non_proper_instance() {
    let obj = r#"{"kind":"boolideals","n":6,"atoms":["p","q"],"generators":[0,1,2,1,0]}"#;
    let (left, code) = report_json(&["moisil", "check", "--system", "proper"], obj);
    assert_eq!(code, 1);
    let space = raw(&["moisil", "dualize"], obj);
    let (right, code) = report_json(&["moisil", "check", "--system", "somv"], &space);
    assert_eq!(code, 1);
    assert_eq!(
        left["violations"][0]["witness"]["indices"],
        serde_json::json!([4, 2])
    );
    assert_eq!(
        right["violations"][0]["witness"]["indices"],
        serde_json::json!([4, 2])
    );
}

#[test]
fn mv_chain_three_fails_mv_two() {
    let chain = raw(&["moisil", "gen", "mvchain", "--n", "3"], "");
    let (report, code) = report_json(&["moisil", "check", "--system", "mvn", "--n", "2"], &chain);
    assert_eq!(code, 1);
    assert!(report["violations"][0]["witness"].is_object());
    let (_, code) = report_json(&["moisil", "check", "--system", "mvn", "--n", "3"], &chain);
    assert_eq!(code, 0);
}

#[test]
fn represent_rejects_a_mutant_with_exit_one() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/violate_l5.json"
    ))
    .unwrap();
    let (report, code) = report_json(&["moisil", "represent"], &text);
    assert_eq!(code, 1);
    assert_eq!(report["verdict"], "fail");
    assert!(!report["violations"].as_array().unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convert_round_trip_is_byte_exact(seed in any::<u64>()) {
        for doc in sample_documents(6, seed).unwrap() {
            if !matches!(doc, Document::Lm { .. }) {
                continue;
            }
            let text = doc.serialize();
            let Document::Lm { algebra, .. } = &doc else { unreachable!() };
            let (there, back) = match algebra.signature() {
                moisil::lm::Signature::Phi => ("j", "phi"),
                moisil::lm::Signature::J => ("phi", "j"),
            };
            let mid = raw(&["moisil", "convert", "--to", there], &text);
            prop_assert_eq!(raw(&["moisil", "convert", "--to", back], &mid), text);
        }
    }

    #[test]
    fn any_single_entry_mutant_exits_one(n in 1usize..=5, seed in any::<u64>()) {
        let c = canonical(n).unwrap();
        for m in mutations(&c, 4, seed) {
            let doc = Document::lm(mutate(&c, &m).unwrap()).serialize();
            let out = run_with_stdin(&["moisil", "check", "--system", "L"], &doc);
            prop_assert_eq!(out.code(), 1, "{:?}", m);
            prop_assert!(!out.report.violations.is_empty());
        }
    }

    #[test]
    fn truncated_documents_exit_two(seed in any::<u64>(), cut in any::<prop::sample::Index>()) {
        for doc in sample_documents(3, seed).unwrap() {
            let text = doc.serialize();
            let body = text.trim_end().len();
            let prefix = &text[..cut.index(body)];
            let out = run_with_stdin(&["moisil", "check", "--system", "L"], prefix);
            prop_assert_eq!(out.code(), 2);
        }
    }

    #[test]
    fn arbitrary_text_never_passes_or_fails(text in "\\PC{0,40}") {
        let out = run_with_stdin(&["moisil", "center"], &text);
        prop_assert_eq!(out.code(), 2);
    }
}

#[test]
fn generated_documents_match_golden_files() {
    let golden = |name: &str| {
        std::fs::read_to_string(format!(
            "{}/tests/fixtures/{name}",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap()
    };
    assert_eq!(
        raw(&["moisil", "gen", "canonical", "--n", "2"], ""),
        golden("golden_canonical2.json")
    );
    assert_eq!(
        raw(&["moisil", "gen", "j", "--n", "2", "--atoms", "2"], ""),
        golden("golden_j_2x2.json")
    );
    let obj = r#"{"kind":"boolideals","n":4,"atoms":["a","b"],"generators":[1,3,1]}"#;
    assert_eq!(
        raw(&["moisil", "dualize"], obj),
        golden("golden_space.json")
    );
    for name in [
        "golden_canonical2.json",
        "golden_j_2x2.json",
        "golden_space.json",
    ] {
        let text = golden(name);
        assert_eq!(parse_document(&text).unwrap().serialize(), text, "{name}");
    }
}
