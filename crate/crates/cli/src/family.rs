//! Resolving `--family` flags into an ideal, and looking up what can be
//! checked against it.

use clap::{Args, ValueEnum};
use higher_specht::quotient::IdealFamily;
use higher_specht::specht::FamilyKind;
use higher_specht::symfunc::{
    grfrob_formula_coinvariant, grfrob_formula_rnk, grfrob_formula_rnkmu, hall_littlewood_cocharge,
    GradedSchurExpansion,
};
use higher_specht::Partition;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum FamilyName {
    #[value(name = "Rn")]
    Rn,
    #[value(name = "Rnk")]
    Rnk,
    #[value(name = "Rnks")]
    Rnks,
    #[value(name = "Rmu")]
    Rmu,
    #[value(name = "Rnkmu")]
    Rnkmu,
}

#[derive(Args, Clone, Debug)]
pub struct FamilyArgs {
    /// Ideal family.
    #[arg(long, value_enum, ignore_case = true)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Partition as comma separated parts, e.g. `3,3,2`.
    #[arg(long)]
    pub mu: Option<Partition>,
}

impl FamilyArgs {
    pub fn resolve(&self) -> Result<IdealFamily, CliError> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("{:?} needs --{flag}", self.family)))
        };
        let reject = |present: bool, flag: &str| {
            if present {
                Err(CliError::Usage(format!(
                    "--{flag} does not apply to {:?}",
                    self.family
                )))
            } else {
                Ok(())
            }
        };
        let mu = || {
            self.mu
                .clone()
                .ok_or_else(|| CliError::Usage(format!("{:?} needs --mu", self.family)))
        };
        let family = match self.family {
            FamilyName::Rn => {
                reject(self.k.is_some(), "k")?;
                reject(self.s.is_some(), "s")?;
                reject(self.mu.is_some(), "mu")?;
                IdealFamily::Rn {
                    n: need(self.n, "n")?,
                }
            }
            FamilyName::Rnk => {
                reject(self.s.is_some(), "s")?;
                reject(self.mu.is_some(), "mu")?;
                IdealFamily::Rnk {
                    n: need(self.n, "n")?,
                    k: need(self.k, "k")?,
                }
            }
            FamilyName::Rnks => {
                reject(self.mu.is_some(), "mu")?;
                IdealFamily::Rnks {
                    n: need(self.n, "n")?,
                    k: need(self.k, "k")?,
                    s: need(self.s, "s")?,
                }
            }
            FamilyName::Rmu => {
                reject(self.k.is_some(), "k")?;
                reject(self.s.is_some(), "s")?;
                let mu = mu()?;
                if let Some(n) = self.n {
                    if n != mu.size() {
                        return Err(CliError::Usage(format!("--n {n} but |μ| = {}", mu.size())));
                    }
                }
                IdealFamily::Rmu { mu }
            }
            FamilyName::Rnkmu => {
                reject(self.s.is_some(), "s")?;
                IdealFamily::Rnkmu {
                    n: need(self.n, "n")?,
                    k: need(self.k, "k")?,
                    mu: mu()?,
                }
            }
        };
        family.validate()?;
        Ok(family)
    }
}

/// The basis family known to descend to `family`, if there is one.
pub fn basis_kind(family: &IdealFamily) -> Option<FamilyKind> {
    Some(match family {
        IdealFamily::Rn { n } => FamilyKind::Coinvariant { n: *n },
        IdealFamily::Rnk { n, k } => FamilyKind::Rnk { n: *n, k: *k },
        IdealFamily::Rnks { n, k, s } => FamilyKind::Rnks {
            n: *n,
            k: *k,
            s: *s,
        },
        IdealFamily::Rmu { mu } => FamilyKind::GarsiaProcesi { mu: mu.clone() },
        IdealFamily::Rnkmu { n, k, mu } if *n >= 2 && *mu == Partition::row(n - 1) => {
            FamilyKind::GriffinHook { n: *n, k: *k }
        }
        IdealFamily::Rnkmu { .. } => return None,
    })
}

pub fn require_basis_kind(family: &IdealFamily) -> Result<FamilyKind, CliError> {
    basis_kind(family)
        .ok_or_else(|| CliError::Usage(format!("no basis family is known for {family}")))
}

/// The closed-form graded Frobenius character of `family`, when one exists.
pub fn formula(family: &IdealFamily) -> Result<GradedSchurExpansion, CliError> {
    Ok(match family {
        IdealFamily::Rn { n } => grfrob_formula_coinvariant(*n)?,
        IdealFamily::Rnk { n, k } => grfrob_formula_rnk(*n, *k)?,
        IdealFamily::Rmu { mu } => hall_littlewood_cocharge(mu)?,
        IdealFamily::Rnkmu { n, k, mu } => grfrob_formula_rnkmu(*n, *k, mu)?,
        IdealFamily::Rnks { .. } => {
            return Err(CliError::Usage(format!(
                "no character formula is known for {family}"
            )))
        }
    })
}

/// Every case of `name` with `n_min ≤ n ≤ n_max`. Only cases that `basis`
/// (or the character formula, when `basis` is false) can handle are listed.
pub fn cases_in_bounds(
    name: FamilyName,
    n_min: usize,
    n_max: usize,
    basis: bool,
) -> Vec<IdealFamily> {
    let mut out = Vec::new();
    for n in n_min.max(1)..=n_max {
        match name {
            FamilyName::Rn => out.push(IdealFamily::Rn { n }),
            FamilyName::Rnk => out.extend((1..=n).map(|k| IdealFamily::Rnk { n, k })),
            FamilyName::Rnks => {
                for k in 1..=n {
                    out.extend((0..=k).map(|s| IdealFamily::Rnks { n, k, s }));
                }
            }
            FamilyName::Rmu => out.extend(
                Partition::all(n)
                    .into_iter()
                    .map(|mu| IdealFamily::Rmu { mu }),
            ),
            FamilyName::Rnkmu if basis => {
                if n >= 2 {
                    let mu = Partition::row(n - 1);
                    out.extend((1..=n).map(|k| IdealFamily::Rnkmu {
                        n,
                        k,
                        mu: mu.clone(),
                    }));
                }
            }
            FamilyName::Rnkmu => {
                for size in 0..=n {
                    for mu in Partition::all(size) {
                        for k in mu.len().max(1)..=n {
                            out.push(IdealFamily::Rnkmu {
                                n,
                                k,
                                mu: mu.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}
