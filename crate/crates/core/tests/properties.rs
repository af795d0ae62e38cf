//! Property suites, each with a fixed seed.

mod common;

fn run(name: &str, check: fn() -> common::Outcome) {
    match check() {
        Ok(trials) => println!("{name}: {trials} trials"),
        Err(e) => panic!("{name}: {e}"),
    }
}

#[test]
fn field_axioms() {
    run("field axioms", common::field_axioms);
}

#[test]
fn theta_is_a_field_automorphism() {
    run("theta", common::theta_multiplicative);
}

#[test]
fn skew_ring_associative_and_distributive() {
    run("skew ring laws", common::skew_ring_laws);
}

#[test]
fn division_reconstructs_dividend() {
    run("divmod", common::divmod_reconstruction);
}

#[test]
fn gcrd_is_greatest() {
    run("gcrd maximality", common::gcrd_maximality);
}

#[test]
fn crt_is_a_ring_isomorphism() {
    run("crt", common::crt_isomorphism);
}

#[test]
fn gray_map_is_a_linear_isometry() {
    run("gray", common::gray_isometry);
}

#[test]
fn gray_map_commutes_with_duality() {
    run("gray duality", common::gray_duality_and_lcd);
}

#[test]
fn cardinality_matches_generator_degrees() {
    run("cardinality", common::cardinality_law);
}
