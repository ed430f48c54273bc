//! Sparse polynomials in `x_1, …, x_n` with exact rational coefficients and
//! the action of `S_n` by permuting variables.
//!
//! Variables are indexed from 0 in code (`x_1` is index 0) and rendered
//! from 1 in text.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector. Ordered by graded reverse lexicographic order with
/// `x_1 < x_2 < ⋯ < x_n`: higher degree is larger, and within a degree the
/// monomial with the smaller exponent at the first differing variable
/// (scanning from `x_1`) is larger.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u16,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn new(exps: &[usize]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent fits in u8");
            m.deg += e as u16;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn exp(&self, i: usize) -> usize {
        self.exps[i] as usize
    }

    pub fn exponents(&self, n: usize) -> Vec<usize> {
        self.exps[..n].iter().map(|&e| e as usize).collect()
    }

    pub fn max_exp(&self) -> usize {
        self.exps.iter().copied().max().unwrap_or(0) as usize
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps[i] += 1;
        m.deg += 1;
        m
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        m.deg -= 1;
        Some(m)
    }

    /// Index of the first variable dividing `self`.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn permute(&self, sigma: &Permutation) -> Monomial {
        let mut m = Monomial {
            deg: self.deg,
            exps: [0; MAX_VARS],
        };
        for (i, &img) in sigma.images().iter().enumerate() {
            m.exps[img] = self.exps[i];
        }
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in 0..MAX_VARS {
                if self.exps[i] != other.exps[i] {
                    return other.exps[i].cmp(&self.exps[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let parts = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            });
        write!(f, "{}", parts.format("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of degree `d` in `n` variables, largest first.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Monomial::new(cur));
            cur.pop();
            return;
        }
        // Smaller early exponents give larger monomials.
        for e in 0..=left {
            cur.push(e);
            rec(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if d == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A permutation of `{0, …, n−1}` acting on variables by `x_i ↦ x_{σ(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        if line.contains(&0) {
            return Err(Error::InvalidParameter(
                "one-line notation is 1-based".into(),
            ));
        }
        Self::from_images(line.iter().map(|&i| i - 1).collect())
    }

    /// Swaps `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// The canonical permutation of cycle type `rho`: consecutive blocks
    /// `(1 2 … ρ_1)(ρ_1+1 … ρ_1+ρ_2)⋯`.
    pub fn of_cycle_type(rho: &[usize]) -> Self {
        let n = rho.iter().sum();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in rho {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Cycle lengths, sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn sign(&self) -> i64 {
        let c = self.cycle_type();
        if (self.len() - c.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Every permutation of `{0, …, n−1}`, in lexicographic order of images.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().map(|i| i + 1).format(" "))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::ONE)
    }

    pub fn term(nvars: usize, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        assert!(m.support_len() <= nvars, "monomial uses too many variables");
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(nvars: usize, exps: &[usize]) -> Self {
        Self::term(nvars, Monomial::new(exps), Rational::ONE)
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(i), Rational::ONE)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The same polynomial viewed in a ring with `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Poly> {
        if let Some(m) = self.terms.keys().find(|m| m.support_len() > nvars) {
            return Err(Error::VariableMismatch {
                expected: nvars,
                got: m.support_len(),
            });
        }
        Ok(Poly {
            nvars,
            terms: self.terms.clone(),
        })
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.keys().map(|m| m.degree()).all_equal()
    }

    pub fn max_var_exponent(&self) -> usize {
        self.terms.keys().map(|m| m.max_exp()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "polynomials over different rings");
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        self.check_vars(other);
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, &(a * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Product, discarding monomials in which some exponent reaches `cap`.
    pub fn mul_truncated(&self, other: &Poly, cap: Option<usize>) -> Poly {
        self.check_vars(other);
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                let m = m1.mul(m2);
                if cap.is_some_and(|k| m.max_exp() >= k) {
                    continue;
                }
                *acc.entry(m).or_insert(Rational::ZERO) += a * b;
            }
        }
        Poly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.nvars), |acc, _| &acc * self)
    }

    /// `σ · p`, substituting `x_i ↦ x_{σ(i)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Poly> {
        if sigma.len() != self.nvars {
            return Err(Error::VariableMismatch {
                expected: self.nvars,
                got: sigma.len(),
            });
        }
        Ok(Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute(sigma), c.clone()))
                .collect(),
        })
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.clone();
                for (i, x) in point.iter().enumerate() {
                    for _ in 0..m.exp(i) {
                        v *= x;
                    }
                }
                v
            })
            .sum()
    }

    /// Terms of degree `d` only.
    pub fn homogeneous_part(&self, d: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Reads the text rendering back, e.g. `"-5/4*x1^2*x3 + x2 - 3"`.
    pub fn parse(nvars: usize, s: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        let mut p = Poly::zero(nvars);
        if compact == "0" {
            return Ok(p);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for t in terms {
            let (neg, body) = match t.as_bytes().first() {
                Some(b'-') => (true, &t[1..]),
                Some(b'+') => (false, &t[1..]),
                _ => (false, t),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut c = Rational::ONE;
            let mut m = Monomial::one();
            for factor in body.split('*') {
                if let Some(v) = factor.strip_prefix('x') {
                    let (idx, e) = match v.split_once('^') {
                        Some((i, e)) => (i, e.parse::<usize>().map_err(|_| bad())?),
                        None => (v, 1),
                    };
                    let idx = idx.parse::<usize>().map_err(|_| bad())?;
                    if idx == 0 || idx > nvars {
                        return Err(bad());
                    }
                    for _ in 0..e {
                        m = m.times_var(idx - 1);
                    }
                } else {
                    c *= &factor.parse::<Rational>().map_err(|_| bad())?;
                }
            }
            if neg {
                c = -c;
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(rhs, &Rational::ONE);
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(rhs, &-Rational::ONE);
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_truncated(rhs, None)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::ONE)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `e_d` in the variables `vars` (0-based indices) of an `nvars`-variable ring.
pub fn elementary(nvars: usize, d: usize, vars: &[usize]) -> Poly {
    let mut p = Poly::zero(nvars);
    for subset in vars.iter().combinations(d) {
        let mut m = Monomial::one();
        for &&i in &subset {
            m = m.times_var(i);
        }
        p.add_term(m, &Rational::ONE);
    }
    p
}

/// `∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut p = Poly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &(&Poly::var(n, i) - &Poly::var(n, j));
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn monomial_order() {
        let ms = monomials_of_degree(2, 2);
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["x2^2", "x1*x2", "x1^2"]);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one()]);
        assert!(Monomial::new(&[0, 0, 1]) > Monomial::new(&[2, 0, 0]).div_var(0).unwrap());
    }

    #[test]
    fn monomial_counts() {
        for n in 1..=5usize {
            for d in 0..=8usize {
                let ms = monomials_of_degree(n, d);
                let binom = num_integer::binomial(n + d - 1, d);
                assert_eq!(ms.len(), binom);
                assert!(ms.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn permutation_action() {
        let p = poly(2, "x1 - x2");
        assert_eq!(p.permute(&Permutation::identity(2)).unwrap(), p);
        assert_eq!(
            p.permute(&Permutation::transposition(2, 0, 1)).unwrap(),
            -&p
        );
        assert!(p.permute(&Permutation::identity(3)).is_err());
        // x_1 ↦ x_2 ↦ x_3 ↦ x_1
        let c = Permutation::of_cycle_type(&[3]);
        assert_eq!(poly(3, "x1^2*x2").permute(&c).unwrap(), poly(3, "x2^2*x3"));
        assert_eq!(c.cycle_type(), vec![3]);
        assert_eq!(c.sign(), 1);
        assert_eq!(Permutation::of_cycle_type(&[2, 1, 1]).sign(), -1);
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            elementary(5, 2, &[0, 3, 4]),
            poly(5, "x1*x4 + x1*x5 + x4*x5")
        );
        assert_eq!(elementary(4, 0, &[1, 2]), Poly::one(4));
        assert!(elementary(4, 3, &[1, 2]).is_zero());
        let ones = vec![Rational::ONE; 3];
        let total: Rational = (0..=3)
            .map(|d| elementary(3, d, &[0, 1, 2]).eval(&ones))
            .sum();
        assert_eq!(total, Rational::from_int(8));
    }

    #[test]
    fn elementary_is_symmetric() {
        for n in 1..=5 {
            let all: Vec<usize> = (0..n).collect();
            for d in 0..=n {
                let e = elementary(n, d, &all);
                for s in Permutation::all(n) {
                    assert_eq!(e.permute(&s).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(1), Poly::one(1));
        assert_eq!(vandermonde(2), poly(2, "x1 - x2"));
        let v3 = vandermonde(3);
        assert_eq!(v3.num_terms(), 6);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(
                v3.permute(&Permutation::transposition(3, i, j)).unwrap(),
                -&v3
            );
        }
    }

    #[test]
    fn rendering_round_trip() {
        let p = poly(3, "-5/4*x1^2*x3 + x2 - 3 + 2*x1*x2*x3");
        assert_eq!(p.to_string(), "2*x1*x2*x3 - 5/4*x1^2*x3 + x2 - 3");
        assert_eq!(poly(3, &p.to_string()), p);
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert!(Poly::parse(2, "x3").is_err());
        assert!(Poly::parse(2, "x1 +").is_err());
    }

    #[test]
    fn truncated_product() {
        let p = poly(2, "x1 + x2");
        assert_eq!(p.mul_truncated(&p, Some(2)), poly(2, "2*x1*x2"));
        assert_eq!(p.pow(3).num_terms(), 4);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(0usize..3, n), -5i64..=5, 1i64..=3),
            0..6,
        )
        .prop_map(move |ts| {
            Poly::from_terms(
                n,
                ts.into_iter()
                    .map(|(e, a, b)| (Monomial::new(&e), Rational::new(a, b))),
            )
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(
            (a, b, c) in (1usize..=5).prop_flat_map(|n| (arb_poly(n), arb_poly(n), arb_poly(n)))
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn action_is_left_and_homomorphic(
            (s, t, p, q) in (1usize..=5).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_poly(n), arb_poly(n)))
        ) {
            let st = s.compose(&t);
            prop_assert_eq!(p.permute(&st).unwrap(), p.permute(&t).unwrap().permute(&s).unwrap());
            prop_assert_eq!((&p * &q).permute(&s).unwrap(), &p.permute(&s).unwrap() * &q.permute(&s).unwrap());
            let sp = p.permute(&s).unwrap();
            prop_assert_eq!(sp.degree(), p.degree());
            let mut c1: Vec<Rational> = p.terms().map(|(_, c)| c.clone()).collect();
            let mut c2: Vec<Rational> = sp.terms().map(|(_, c)| c.clone()).collect();
            c1.sort();
            c2.sort();
            prop_assert_eq!(c1, c2);
        }
    }
}
