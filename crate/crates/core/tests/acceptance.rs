//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`; failures always show it).
//!
//! Criterion 8 includes the literal triple claim
//! `(Nr3,Nr48,Nr53) ~ (EREC1,Nr50,Nr54)`, which the engine refutes with a
//! finite witness at n = 2. That check is kept asserted rather than
//! patched, so it fails here deliberately; the transported variant that
//! the involution machinery actually proves is asserted right next to it
//! and passes. Criterion 10 (byte-identical output across --jobs) lives in
//! the CLI crate's acceptance tests.

use std::sync::OnceLock;
use std::time::Instant;

use meshlab_core::cfrac;
use meshlab_core::involution::{phi, phi_traced, psi, psi_traced};
use meshlab_core::verify::{run_suite, CheckResult, CheckStatus, Suite};
use meshlab_core::{factorial, Permutation, SweepOptions};

const DEPTH: usize = 7;

fn suite(cache: &'static OnceLock<Vec<CheckResult>>, which: Suite) -> &'static [CheckResult] {
    cache.get_or_init(|| {
        run_suite(which, DEPTH, &SweepOptions::default()).expect("suite runs within the cap")
    })
}

fn involutions() -> &'static [CheckResult] {
    static CACHE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    suite(&CACHE, Suite::Involutions)
}

fn theorems() -> &'static [CheckResult] {
    static CACHE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    suite(&CACHE, Suite::Theorems)
}

fn tables() -> &'static [CheckResult] {
    static CACHE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    suite(&CACHE, Suite::Tables)
}

fn series() -> &'static [CheckResult] {
    static CACHE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    suite(&CACHE, Suite::Series)
}

fn symmetry() -> &'static [CheckResult] {
    static CACHE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    suite(&CACHE, Suite::Symmetry)
}

fn find<'a>(results: &'a [CheckResult], name: &str) -> &'a CheckResult {
    results
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("check {name} missing from suite"))
}

fn assert_passes(criterion: &str, results: &[CheckResult], names: &[&str]) {
    for name in names {
        let r = find(results, name);
        if r.status.is_failure() {
            println!("{criterion}: FAIL — {}: {}", r.name, r.detail);
            panic!("{criterion} failed at {}: {}", r.name, r.detail);
        }
    }
    println!("{criterion}: PASS — {}", names.join(", "));
}

#[test]
fn criterion_01_golden_examples() {
    let pi: Permutation = "257189463".parse().unwrap();
    let rho: Permutation = "931582674".parse().unwrap();

    let (phi_image, phi_trace) = phi_traced(&pi);
    assert_eq!(phi_image.to_string(), "862154973");
    let phi_panels: Vec<String> = phi_trace.steps.iter().map(|s| s.after.to_string()).collect();
    assert_eq!(phi_panels[..2], ["286154973".to_string(), "268154973".to_string()]);

    let (psi_image, psi_trace) = psi_traced(&rho);
    assert_eq!(psi_image.to_string(), "281743965");
    let psi_panels: Vec<String> = psi_trace.steps.iter().map(|s| s.after.to_string()).collect();
    assert_eq!(
        psi_panels[..4],
        [
            "281639547".to_string(),
            "281593674".to_string(),
            "281743659".to_string(),
            "281743695".to_string()
        ]
    );

    // timing: both maps together in under a millisecond
    let start = Instant::now();
    assert_eq!(phi(&pi).to_string(), "862154973");
    assert_eq!(psi(&rho).to_string(), "281743965");
    let elapsed = start.elapsed();
    assert!(elapsed.as_micros() < 1000, "golden maps took {elapsed:?}");

    println!("criterion 1: PASS — golden images and panels exact, {elapsed:?}");
}

#[test]
fn criterion_02_involution_property() {
    assert_passes(
        "criterion 2",
        involutions(),
        &["involution.phi", "involution.psi", "involution.random"],
    );
}

#[test]
fn criterion_03_theorem_triples_and_lemmas() {
    assert_passes(
        "criterion 3",
        theorems(),
        &["theorem.phi.triple", "theorem.psi.triple", "gap.phi.identities", "gap.psi.identities", "gap.sum-consistency"],
    );
    assert_passes(
        "criterion 3 (lemmas)",
        involutions(),
        &[
            "lemma.phi.submaps",
            "lemma.psi.submaps",
            "lemma.phi.adjacent-steps",
            "lemma.psi.adjacent-steps",
            "invariant.phi.antirecords",
            "invariant.psi.antirecord-positions",
        ],
    );
}

#[test]
fn criterion_04_exclusive_statistic_characterizations() {
    assert_passes("criterion 4", symmetry(), &["pattern.exclusive-characterizations"]);
}

#[test]
fn criterion_05_mesh_symmetry_compatibility() {
    assert_passes(
        "criterion 5",
        symmetry(),
        &["symmetry.compatibility", "symmetry.transform-involution", "pattern.transform-chains"],
    );
}

#[test]
fn criterion_06_five_variable_continued_fraction() {
    assert_passes(
        "criterion 6",
        series(),
        &["series.theorem-cf", "series.jfraction-head", "series.contraction", "series.depth-stability", "series.specialization-ladder", "series.factorial-sanity"],
    );
}

#[test]
fn criterion_07_one_variable_continued_fraction() {
    assert_passes(
        "criterion 7",
        series(),
        &["series.conjecture-cf", "series.conjecture-factorial"],
    );
}

#[test]
fn criterion_08a_pair_nr23_nr24() {
    assert_passes("criterion 8a", tables(), &["table.Nr23~Nr24"]);
}

#[test]
fn criterion_08b_chain_nr48_nr49_nr50() {
    assert_passes("criterion 8b", tables(), &["table.Nr48~Nr49", "table.Nr49~Nr50"]);
}

#[test]
fn criterion_08c_literal_triple() {
    // Asserted as stated. The engine refutes it: the joint distributions
    // of (Nr3,Nr48,Nr53) and (EREC1,Nr50,Nr54) differ from n = 2 on,
    // e.g. the all-zero vector has multiplicity 1 vs 0 at n = 2. The
    // transported variant asserted in criterion_08d_transported_triple is
    // the identity that does hold.
    assert_passes("criterion 8c", tables(), &["table.(Nr3,Nr48,Nr53)~(EREC1,Nr50,Nr54)"]);
}

#[test]
fn criterion_08d_transported_triple() {
    assert_passes(
        "criterion 8d",
        tables(),
        &["table.(Nr3,Nr48,Nr53)~(EREC1-transported,Nr50,Nr54)"],
    );
}

#[test]
fn criterion_08e_star_pairs() {
    assert_passes(
        "criterion 8e",
        tables(),
        &["table.Star1~Star2", "table.Star3~Star4", "table.(Star1,Star3)~(Star2,Star4)"],
    );
}

#[test]
fn criterion_08f_open_pairs_reported() {
    for name in ["table.Nr57~Nr58", "table.Nr61~Nr62"] {
        let r = find(tables(), name);
        assert!(
            matches!(r.status, CheckStatus::ObservedEqual | CheckStatus::ObservedDiverged),
            "{name} must be observational, got {:?}",
            r.status
        );
        println!("criterion 8f: PASS — {name} reported: {} ({})", r.status.label(), r.detail);
    }
}

#[test]
fn criterion_09_succession_identities() {
    assert_passes(
        "criterion 9",
        series(),
        &["series.succession-ogf", "series.succession-egf", "series.succession-nr14"],
    );
    // S_n(1) = n!
    let polys = cfrac::succession_polys(8, &SweepOptions::default()).unwrap();
    for (n, poly) in polys.iter().enumerate() {
        assert_eq!(
            poly.sum_of_coefficients(),
            factorial(n).unwrap().into(),
            "S_{n}(1) != {n}!"
        );
    }
    println!("criterion 9: PASS — S_n(1) = n! for n <= 8");
}
