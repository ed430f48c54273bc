//! Larger instances, opt-in: `cargo test --release -- --ignored`.

use higher_specht::quotient::verify_family;
use higher_specht::specht::FamilyKind;
use higher_specht::Partition;
use rayon::prelude::*;

fn verify_mu(mu: &Partition) {
    let r = verify_family(&FamilyKind::GarsiaProcesi { mu: mu.clone() }).unwrap();
    assert!(r.verdict, "μ=({mu}): {:?}", r.failures);
}

#[test]
#[ignore = "minutes"]
fn garsia_procesi_n7() {
    Partition::all(7).par_iter().for_each(verify_mu);
}

#[test]
#[ignore = "minutes"]
fn garsia_procesi_332() {
    verify_mu(&"3,3,2".parse().unwrap());
}

#[test]
#[ignore = "minutes"]
fn coinvariant_n7() {
    let r = verify_family(&FamilyKind::Coinvariant { n: 7 }).unwrap();
    assert!(r.verdict, "{:?}", r.failures);
    assert_eq!(r.elements, 5040);
}
