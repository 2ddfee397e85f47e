use cdalg::harness::{
    check_instance, find_norm_violation, instances, replay, run_all, run_theorem, theorem_ids, Instance,
    RandomSpec, Verdict,
};
use cdalg::{basis, AlgebraError};

/// One entry per statement of the theory, in order.
const EXPECTED: [&str; 18] = [
    "flexibility",
    "lemma_1_1",
    "corollary_1_2",
    "corollary_1_3",
    "proposition_1_4",
    "corollary_1_5",
    "lemma_1_6",
    "lemma_2_1",
    "yui_2_3",
    "proposition_3_1",
    "lemma_3_2",
    "theorem_3_3",
    "lemma_4_1",
    "theorem_4_2",
    "corollary_4_3",
    "theorem_5_1",
    "theorem_5_2",
    "implication_chain",
];

#[test]
fn registry_matches_statement_list() {
    assert_eq!(theorem_ids(), EXPECTED.to_vec());
}

#[test]
fn full_suite_passes_at_levels_3_and_4() {
    let reports = run_all(&RandomSpec::new(0, 3).with_trials(40), &[3, 4]);
    for r in &reports {
        eprintln!("{} {} {} {}ms", r.theorem_id, r.level, r.trials, r.elapsed_ms);
        assert!(r.passed, "{}", r.to_json_line());
        assert!(r.counterexample.is_none());
    }
    // Statements that start at level 4 are skipped at level 3.
    assert_eq!(reports.iter().filter(|r| r.level == 3).count(), 10);
    assert_eq!(reports.iter().filter(|r| r.level == 4).count(), 18);
}

#[test]
fn reports_are_deterministic() {
    let spec = RandomSpec::new(0, 4).with_trials(20);
    for id in ["yui_2_3", "theorem_5_2", "corollary_4_3"] {
        let a = run_theorem(id, &spec).unwrap().without_timing();
        let b = run_theorem(id, &spec).unwrap().without_timing();
        assert_eq!(a.to_json_line(), b.to_json_line());
    }
}

#[test]
fn lemma_3_2_is_exhaustive_at_level_3() {
    let r = run_theorem("lemma_3_2", &RandomSpec::new(1, 3)).unwrap();
    assert!(r.passed);
    assert_eq!(r.trials, 4096);
}

#[test]
fn theorem_4_2_basis_scan() {
    let r = run_theorem("theorem_4_2", &RandomSpec::new(5, 4).with_trials(200)).unwrap();
    assert!(r.passed, "{}", r.to_json_line());
    let strong: Vec<usize> = (0..16)
        .filter(|&i| cdalg::classification::is_strongly_alternative(&basis(4, i)).strongly_alternative)
        .collect();
    assert_eq!(strong, vec![0, 8]);
}

#[test]
fn yui_with_seed_42() {
    let r = run_theorem("yui_2_3", &RandomSpec::new(42, 4).with_trials(200)).unwrap();
    assert!(r.passed, "{}", r.to_json_line());
}

#[test]
fn theorem_5_1_has_enough_pairs() {
    let spec = RandomSpec::new(3, 4).with_trials(20);
    let cases = instances("theorem_5_1", &spec).unwrap();
    assert!(cases.len() >= 20);
    let random = cases.iter().filter(|c| c.get_label("kind").unwrap() == "random_unit").count();
    assert_eq!(random, 20);
    let first = &cases[0];
    assert_eq!(first.get("a").unwrap(), &basis(4, 1));
    assert_eq!(first.get("b").unwrap(), &basis(4, 2));
    assert!(run_theorem("theorem_5_1", &spec).unwrap().passed);
}

#[test]
fn failing_payload_replays() {
    // x = e0 is outside the hypothesis, so the check reports a failure.
    let inst = Instance::of(&[("a", &basis(4, 1)), ("x", &basis(4, 0))]);
    let v = check_instance("lemma_1_1", &inst).unwrap();
    assert!(matches!(v, Verdict::Fails(ref d) if d.contains("doubly pure")));
    let payload = serde_json::json!({ "instance": inst, "detail": "" });
    assert_eq!(replay("lemma_1_1", &payload).unwrap(), v);
    assert!(matches!(replay("lemma_1_1", &serde_json::json!({})), Err(AlgebraError::Payload(_))));
}

#[test]
fn norm_violation_replays_through_normed_with() {
    assert!(find_norm_violation(3).is_none());
    let (x, y) = find_norm_violation(4).unwrap();
    assert!(!cdalg::classification::normed_with(&x, &y).unwrap());
}
