//! Acceptance suite: every check is exact (tolerance zero) in integer
//! arithmetic, mirroring the `verify all` command. Run with
//! `cargo test --test acceptance -- --nocapture` to see one line per
//! criterion.

use gcdegen::verify::{
    check_characters, check_conjugation, check_dims, check_faces, check_gc_prop,
    check_initial_ideal, check_lattice_suite, check_lemma_weights, check_schubert_double,
    check_semigroup_rank, CheckOutcome, DimSweep,
};

fn report(outcome: CheckOutcome) {
    let verdict = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "{verdict} {}: {} [{} cases, {} ms]",
        outcome.id, outcome.description, outcome.cases, outcome.millis
    );
    for note in &outcome.notes {
        println!("    {note}");
    }
    for ce in &outcome.counterexamples {
        println!("    counterexample: {ce}");
    }
    assert!(
        outcome.passed,
        "{} failed: {:?}",
        outcome.id, outcome.counterexamples
    );
}

#[test]
fn a01_initial_ideal_equals_prime_intersection() {
    report(check_initial_ideal(5).unwrap());
}

#[test]
fn a02_schubert_double_construction() {
    report(check_schubert_double(5).unwrap());
}

#[test]
fn a03_dimension_identities() {
    report(
        check_dims(&[
            DimSweep {
                n: 4,
                max_part: 2,
                with_upsilon: true,
            },
            DimSweep {
                n: 3,
                max_part: 4,
                with_upsilon: true,
            },
            DimSweep {
                n: 4,
                max_part: 4,
                with_upsilon: false,
            },
        ])
        .unwrap(),
    );
}

#[test]
fn a04_gc_polytope_correspondence() {
    report(check_gc_prop(4, 2).unwrap());
}

#[test]
fn a05_lemma_weights() {
    report(check_lemma_weights(6).unwrap());
}

#[test]
fn a06_lattice_and_binomials() {
    report(check_lattice_suite(6, 5).unwrap());
}

#[test]
fn a07_semigroup_rank() {
    report(check_semigroup_rank(6).unwrap());
}

#[test]
fn a08_conjugation_exponents() {
    report(check_conjugation(8).unwrap());
}

#[test]
fn a09_rc_faces_and_demazure() {
    report(check_faces(4).unwrap());
}

#[test]
fn a10_character_identities() {
    report(check_characters().unwrap());
}
