mod common;

const CASES: u32 = 1000;

#[test]
fn lattice_laws() {
    common::lattice_laws(CASES).unwrap();
}

#[test]
fn young_bijection() {
    common::young_bijection(CASES).unwrap();
}

#[test]
fn term_order() {
    common::term_order(CASES).unwrap();
}

#[test]
fn serialization() {
    common::serialization(CASES).unwrap();
}
