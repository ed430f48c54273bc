use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts a composition into partition form, dropping zero parts.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut p: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Column lengths: `conj[j] = #{i : parts[i] > j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// `μ'_1 + ⋯ + μ'_t − t`, with conjugate parts past the end counted as 0.
    pub fn column_excess(&self, t: usize) -> i64 {
        let conj = self.conjugate();
        (0..t).map(|j| conj.part(j) as i64).sum::<i64>() - t as i64
    }

    /// Decrements part `i` (1-based) and re-sorts into partition form.
    pub fn mu_child(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange(format!(
                "row {i} of partition {self} with {} rows",
                self.len()
            )));
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        Ok(Self::from_composition(&parts))
    }

    /// Diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// `n(λ) = Σ_i (λ'_i choose 2)`.
    pub fn n_statistic(&self) -> usize {
        self.conjugate()
            .0
            .iter()
            .map(|&c| c * c.saturating_sub(1) / 2)
            .sum()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks = BigInt::from(1);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1) + (conj.part(j) - i - 1) + 1;
            }
        }
        factorial(n) / hooks
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// `n! / (μ_1! μ_2! ⋯)`.
pub fn multinomial(mu: &Partition) -> BigInt {
    mu.parts()
        .iter()
        .fold(factorial(mu.size()), |acc, &p| acc / factorial(p))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,3,1").conjugate(), p("3,2,2"));
        assert_eq!(p("1,1,1,1").conjugate(), p("4"));
        assert_eq!(p("3,3,2").conjugate(), p("3,3,2"));
        for n in 0..=8 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn column_excess_uses_formula() {
        assert_eq!(p("3,3,2").column_excess(1), 2);
        assert_eq!(p("3,3,2").column_excess(0), 0);
        assert_eq!(p("1,1,1,1").column_excess(2), 2);
        assert_eq!(p("5,2").column_excess(0), 0);
    }

    #[test]
    fn children() {
        assert_eq!(p("3,3,2").mu_child(1).unwrap(), p("3,2,2"));
        assert_eq!(p("3,3,2").mu_child(2).unwrap(), p("3,2,2"));
        assert_eq!(p("3,3,2").mu_child(3).unwrap(), p("3,3,1"));
        assert_eq!(p("1").mu_child(1).unwrap(), Partition::empty());
        assert!(p("2,1").mu_child(3).is_err());
        assert!(p("2,1").mu_child(0).is_err());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p("2,1").num_standard(), BigInt::from(2));
        assert_eq!(p("3,3").num_standard(), BigInt::from(5));
        assert_eq!(multinomial(&p("3,1,1")), BigInt::from(20));
        assert_eq!(p("3,1,1").n_statistic(), 3);
        assert!(p("3,2").contains(&p("3,1")));
        assert!(!p("3,2").contains(&p("2,2,1")));
    }
}
