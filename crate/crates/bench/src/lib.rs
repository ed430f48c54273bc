//! Inputs shared by the criterion benches.

use higher_specht::quotient::IdealFamily;
use higher_specht::{Partition, Tableau};

pub fn partition(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

pub fn tableau(s: &str) -> Tableau {
    s.parse().expect("valid tableau")
}

/// Quotients small enough to build many times per second, large enough to
/// exercise elimination in several degrees.
pub fn quotient_cases() -> Vec<(&'static str, IdealFamily)> {
    vec![
        ("R_5", IdealFamily::Rn { n: 5 }),
        (
            "R_(3,2,1)",
            IdealFamily::Rmu {
                mu: partition("3,2,1"),
            },
        ),
        ("R_{5,3}", IdealFamily::Rnk { n: 5, k: 3 }),
        (
            "R_{5,3,(2,1)}",
            IdealFamily::Rnkmu {
                n: 5,
                k: 3,
                mu: partition("2,1"),
            },
        ),
    ]
}
