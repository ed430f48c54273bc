mod common;

use common::*;
use higher_specht::quotient::{GradedQuotient, IdealFamily};
use higher_specht::symfunc::{
    graded_frobenius, grfrob_formula_coinvariant, grfrob_formula_rnk, grfrob_formula_rnkmu,
    hall_littlewood_cocharge, irreducible_block_check, GradedSchurExpansion,
};
use higher_specht::tableaux::{descent_stats, tableau_cocharge};
use higher_specht::{Partition, Tableau};

fn frob(f: IdealFamily) -> (GradedQuotient, GradedSchurExpansion) {
    let q = GradedQuotient::of_family(&f).unwrap();
    let e = graded_frobenius(&q).unwrap();
    (q, e)
}

fn check_module_expansion(q: &GradedQuotient, e: &GradedSchurExpansion) {
    let n = q.nvars();
    assert!(e.is_nonnegative());
    assert_eq!(e.coeff(0, &Partition::row(n)), 1);
    let h: Vec<usize> = e.hilbert().iter().map(|&x| x as usize).collect();
    assert_eq!(h, q.hilbert());
}

#[test]
fn coinvariant_character_by_maj_and_cocharge() {
    for n in 1..=5 {
        let (q, got) = frob(IdealFamily::Rn { n });
        check_module_expansion(&q, &got);
        let mut by_maj = GradedSchurExpansion::new();
        let mut by_cc = GradedSchurExpansion::new();
        for lam in Partition::all(n) {
            for s in Tableau::standard(&lam) {
                by_maj.add(descent_stats(&s).unwrap().maj, &lam, 1);
                by_cc.add(tableau_cocharge(&s).unwrap(), &lam, 1);
            }
        }
        assert_eq!(got, by_maj, "n={n}");
        assert_eq!(got, by_cc, "n={n}");
        assert_eq!(got, grfrob_formula_coinvariant(n).unwrap());
        assert_eq!(
            hall_littlewood_cocharge(&Partition::column(n)).unwrap(),
            got
        );
    }
}

#[test]
fn rnk_character_matches_formula() {
    for n in 1..=4 {
        for k in 1..=n {
            let (q, got) = frob(IdealFamily::Rnk { n, k });
            check_module_expansion(&q, &got);
            assert_eq!(got, grfrob_formula_rnk(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn hook_griffin_character_matches_formula() {
    for n in 2..=5 {
        for k in 1..=n {
            let mu = Partition::row(n - 1);
            let (q, got) = frob(IdealFamily::Rnkmu {
                n,
                k,
                mu: mu.clone(),
            });
            check_module_expansion(&q, &got);
            assert_eq!(got, grfrob_formula_rnkmu(n, k, &mu).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn griffin_formula_collapses_to_coinvariants() {
    for n in 1..=4 {
        let f = grfrob_formula_rnkmu(n, n, &Partition::column(n)).unwrap();
        assert_eq!(f, grfrob_formula_coinvariant(n).unwrap(), "n={n}");
    }
}

#[test]
fn griffin_formula_matches_modules_beyond_hooks() {
    for n in 1..=4 {
        for size in 0..=n {
            for mu in Partition::all(size) {
                for k in mu.len().max(1)..=n {
                    let f = IdealFamily::Rnkmu {
                        n,
                        k,
                        mu: mu.clone(),
                    };
                    let (q, got) = frob(f.clone());
                    check_module_expansion(&q, &got);
                    assert_eq!(got, grfrob_formula_rnkmu(n, k, &mu).unwrap(), "{f}");
                }
            }
        }
    }
}

#[test]
fn garsia_procesi_blocks_are_irreducible() {
    for n in 1..=4 {
        for mu in Partition::all(n) {
            let q = GradedQuotient::of_family(&IdealFamily::Rmu { mu: mu.clone() }).unwrap();
            for lam in Partition::all(n) {
                for s in Tableau::semistandard(&lam, mu.parts()) {
                    let r = irreducible_block_check(&s, &q).unwrap();
                    assert!(r.verdict, "μ=({mu}) S={s}: {r:?}");
                }
            }
        }
    }
}

#[test]
fn content_21_blocks() {
    let q = GradedQuotient::of_family(&IdealFamily::Rmu { mu: part(&[2, 1]) }).unwrap();
    let trivial = irreducible_block_check(&young("112"), &q).unwrap();
    assert_eq!(
        (trivial.dimension, trivial.character.clone()),
        (1, vec![1, 1, 1])
    );
    let standard = irreducible_block_check(&young("2/11"), &q).unwrap();
    assert_eq!(
        (standard.dimension, standard.character.clone()),
        (2, vec![-1, 0, 2])
    );
    assert!(trivial.verdict && standard.verdict);
}

#[test]
fn block_check_rejects_mismatched_ring() {
    let q = GradedQuotient::of_family(&IdealFamily::Rn { n: 3 }).unwrap();
    assert!(irreducible_block_check(&young("2/11"), &q).is_ok());
    assert!(irreducible_block_check(&young("2/111"), &q).is_err());
    // A block that vanishes in the quotient fails the dimension check.
    let q = GradedQuotient::of_family(&IdealFamily::Rnkmu {
        n: 3,
        k: 1,
        mu: part(&[2]),
    })
    .unwrap();
    let r = irreducible_block_check(&young("2/11"), &q).unwrap();
    assert!(!r.verdict);
    assert_eq!(r.dimension, 0);
}

#[test]
fn expansion_json_is_sorted() {
    let (_, e) = frob(IdealFamily::Rmu { mu: part(&[2, 2]) });
    let v = serde_json::to_value(&e).unwrap();
    let entries = v.as_array().unwrap();
    let keys: Vec<(u64, Vec<u64>)> = entries
        .iter()
        .map(|x| {
            let lam = x["lambda"]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| p.as_u64().unwrap())
                .collect();
            (x["degree"].as_u64().unwrap(), lam)
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(e.to_string(), "s_4 + q*s_31 + q^2*s_22");
}
