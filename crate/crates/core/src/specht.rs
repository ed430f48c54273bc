//! Specht polynomials and their higher and semistandard generalizations,
//! built by applying Young symmetrizers to cocharge monomials.
//!
//! A permutation acts by `x_i ↦ x_{σ(i)}`. The symmetrizer of a tableau
//! `T` symmetrizes over the rows of `T` first and then antisymmetrizes over
//! its columns, with no normalizing factor.

use std::cmp::Ordering;
use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{elementary, Monomial, Poly};
use crate::rational::Rational;
use crate::tableaux::{
    cocharge_tableau, des, last_letter_cmp, sort_last_letter, Partition, Tableau,
};

/// Row and column entry sets of a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabGroupSpec {
    pub row_groups: Vec<Vec<usize>>,
    pub column_groups: Vec<Vec<usize>>,
}

impl TabGroupSpec {
    pub fn of(t: &Tableau) -> Self {
        let sorted = |v: &Vec<usize>| v.iter().copied().sorted().collect();
        TabGroupSpec {
            row_groups: t.rows().iter().map(sorted).collect(),
            column_groups: t.columns().iter().map(sorted).collect(),
        }
    }

    fn order(groups: &[Vec<usize>]) -> BigInt {
        groups
            .iter()
            .map(|g| crate::tableaux::factorial(g.len()))
            .product()
    }

    pub fn row_group_order(&self) -> BigInt {
        Self::order(&self.row_groups)
    }

    pub fn column_group_order(&self) -> BigInt {
        Self::order(&self.column_groups)
    }
}

/// A pair `(S, T)` of equal shape with `S` semistandard of partition content
/// and `T` a bijective filling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpechtIndex {
    pub s: Tableau,
    pub t: Tableau,
}

impl SpechtIndex {
    pub fn new(s: Tableau, t: Tableau) -> Result<Self> {
        if s.shape() != t.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                s.shape(),
                t.shape()
            )));
        }
        if !t.is_bijective() {
            return Err(Error::InvalidParameter(format!(
                "T = {t} is not a bijective filling"
            )));
        }
        if !s.is_semistandard() {
            return Err(Error::InvalidParameter(format!(
                "S = {s} is not semistandard"
            )));
        }
        Ok(SpechtIndex { s, t })
    }
}

fn inversion_parity(v: &[u8]) -> bool {
    let mut odd = false;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Next lexicographic arrangement of a multiset, in place.
fn next_arrangement(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Σ_{π ∈ Sym(block)} (sgn π if signed) π · p`, for `block` a set of
/// 0-based variable indices.
pub fn block_sum(p: &Poly, block: &[usize], signed: bool) -> Poly {
    if block.len() <= 1 {
        return p.clone();
    }
    let mut acc: HashMap<Monomial, Rational> = HashMap::new();
    for (m, c) in p.terms() {
        let orig: Vec<u8> = block.iter().map(|&v| m.exp(v) as u8).collect();
        let mut arr = orig.clone();
        arr.sort_unstable();
        let has_repeat = arr.windows(2).any(|w| w[0] == w[1]);
        if signed && has_repeat {
            continue;
        }
        let weight = if signed {
            c.clone()
        } else {
            let stab: i64 = arr
                .iter()
                .dedup_with_count()
                .map(|(k, _)| (1..=k as i64).product::<i64>())
                .product();
            c * &Rational::from_int(stab)
        };
        let orig_parity = inversion_parity(&orig);
        let mut exps = m.exponents(p.nvars());
        loop {
            for (&v, &e) in block.iter().zip(&arr) {
                exps[v] = e as usize;
            }
            let coeff = if signed && inversion_parity(&arr) != orig_parity {
                -&weight
            } else {
                weight.clone()
            };
            *acc.entry(Monomial::new(&exps)).or_insert(Rational::ZERO) += coeff;
            if !next_arrangement(&mut arr) {
                break;
            }
        }
    }
    Poly::from_terms(p.nvars(), acc.into_iter().filter(|(_, c)| !c.is_zero()))
}

fn to_vars(group: &[usize]) -> Vec<usize> {
    group.iter().map(|&e| e - 1).collect()
}

/// `ε_T · p`: row symmetrization of `T`, then signed column
/// antisymmetrization.
pub fn apply_symmetrizer(t: &Tableau, p: &Poly) -> Result<Poly> {
    check_filling(t, p.nvars())?;
    let g = TabGroupSpec::of(t);
    let mut q = p.clone();
    for row in &g.row_groups {
        q = block_sum(&q, &to_vars(row), false);
    }
    for col in &g.column_groups {
        q = block_sum(&q, &to_vars(col), true);
    }
    Ok(q)
}

/// `ε_{T'}` for the conjugate tableau: column symmetrization of `T`, then
/// signed row antisymmetrization.
pub fn apply_conjugate_symmetrizer(t: &Tableau, p: &Poly) -> Result<Poly> {
    check_filling(t, p.nvars())?;
    let g = TabGroupSpec::of(t);
    let mut q = p.clone();
    for col in &g.column_groups {
        q = block_sum(&q, &to_vars(col), false);
    }
    for row in &g.row_groups {
        q = block_sum(&q, &to_vars(row), true);
    }
    Ok(q)
}

fn check_filling(t: &Tableau, nvars: usize) -> Result<()> {
    if !t.is_bijective() {
        return Err(Error::InvalidParameter(format!(
            "T = {t} is not a bijective filling"
        )));
    }
    if t.size() != nvars {
        return Err(Error::VariableMismatch {
            expected: nvars,
            got: t.size(),
        });
    }
    Ok(())
}

/// `∏_columns ∏ (x_upper − x_lower)` over pairs of cells in a column.
pub fn specht_classical(t: &Tableau) -> Result<Poly> {
    if !t.is_bijective() {
        return Err(Error::InvalidParameter(format!(
            "T = {t} is not a bijective filling"
        )));
    }
    let n = t.size();
    let mut p = Poly::one(n);
    for col in t.columns() {
        for (i, &lo) in col.iter().enumerate() {
            for &hi in &col[i + 1..] {
                p = &p * &(&Poly::var(n, hi - 1) - &Poly::var(n, lo - 1));
            }
        }
    }
    Ok(p)
}

/// `x_T^{cw(S)}`: each variable `x_{T(c)}` raised to the cocharge label of
/// cell `c` of `S`.
pub fn cocharge_monomial(idx: &SpechtIndex) -> Result<Monomial> {
    let labels = cocharge_tableau(&idx.s)?;
    let mut exps = vec![0; idx.t.size()];
    for (i, j, x) in idx.t.cells() {
        exps[x - 1] = labels[i][j];
    }
    Ok(Monomial::new(&exps))
}

/// `F_T^S = ε_T · x_T^{cw(S)}`.
pub fn higher_specht(idx: &SpechtIndex) -> Result<Poly> {
    let m = cocharge_monomial(idx)?;
    let n = idx.t.size();
    apply_symmetrizer(&idx.t, &Poly::term(n, m, Rational::ONE))
}

/// Convenience wrapper validating the pair first.
pub fn higher_specht_of(s: &Tableau, t: &Tableau) -> Result<Poly> {
    higher_specht(&SpechtIndex::new(s.clone(), t.clone())?)
}

/// `G_T^S = ε_{T'} · x_T^{T−1−S}`, where the exponent at cell `c` is
/// `T(c) − 1 − cw_S(c)`.
pub fn dual_specht(idx: &SpechtIndex) -> Result<Poly> {
    let labels = cocharge_tableau(&idx.s)?;
    let n = idx.t.size();
    let mut exps = vec![0; n];
    for (i, j, x) in idx.t.cells() {
        exps[x - 1] = (x - 1)
            .checked_sub(labels[i][j])
            .ok_or(Error::NegativeExponent { row: i, col: j })?;
    }
    apply_conjugate_symmetrizer(&idx.t, &Poly::monomial(n, &exps))
}

/// Sign of the permutation sorting `exps` into `(n−1, …, 1, 0)`, or `None`
/// when `exps` is not a rearrangement of it.
fn staircase_sign(exps: &[usize]) -> Option<i64> {
    let n = exps.len();
    let mut seen = vec![false; n];
    for &e in exps {
        if e >= n || seen[e] {
            return None;
        }
        seen[e] = true;
    }
    let mut odd = false;
    for i in 0..n {
        for j in i + 1..n {
            if exps[i] < exps[j] {
                odd = !odd;
            }
        }
    }
    Some(if odd { -1 } else { 1 })
}

/// `⟨f, g⟩`: the constant term of the antisymmetrization of `fg` divided
/// by `∏_{i<j}(x_i − x_j)`. Only monomials of `fg` that rearrange the
/// staircase `x_1^{n−1} ⋯ x_{n−1}^1` contribute, each with its sign.
pub fn bilinear_form(f: &Poly, g: &Poly) -> Result<Rational> {
    let n = f.nvars();
    if g.nvars() != n {
        return Err(Error::VariableMismatch {
            expected: n,
            got: g.nvars(),
        });
    }
    let top = n * n.saturating_sub(1) / 2;
    let mut total = Rational::ZERO;
    for (m1, a) in f.terms() {
        for (m2, b) in g.terms() {
            if m1.degree() + m2.degree() != top {
                continue;
            }
            let m = m1.mul(m2);
            if let Some(sign) = staircase_sign(&m.exponents(n)) {
                let v = a * b;
                if sign > 0 {
                    total += v;
                } else {
                    total -= v;
                }
            }
        }
    }
    Ok(total)
}

/// Entries of column `a` in rows `row..` together with entries of column `b`
/// in rows `..=row` (columns and rows 1-based, rows counted from the bottom).
pub fn garnir_set(t: &Tableau, a: usize, b: usize, row: usize) -> Result<Vec<usize>> {
    let cols = t.columns();
    if a == 0 || a >= b || b > cols.len() {
        return Err(Error::IndexOutOfRange(format!(
            "columns {a} < {b} in a tableau with {} columns",
            cols.len()
        )));
    }
    if row == 0 || row > cols[b - 1].len() {
        return Err(Error::IndexOutOfRange(format!(
            "row {row} of column {b} with {} cells",
            cols[b - 1].len()
        )));
    }
    let mut set: Vec<usize> = cols[a - 1][row - 1..].to_vec();
    set.extend_from_slice(&cols[b - 1][..row]);
    Ok(set)
}

/// Applies the signed sum over all permutations of [`garnir_set`].
pub fn garnir_apply(t: &Tableau, a: usize, b: usize, row: usize, p: &Poly) -> Result<Poly> {
    check_filling(t, p.nvars())?;
    let set = garnir_set(t, a, b, row)?;
    Ok(block_sum(p, &to_vars(&set), true))
}

/// Coefficients `c` with `Σ c_i · basis_i = target`, exactly.
pub fn solve_in_span(target: &Poly, basis: &[Poly]) -> Result<Vec<Rational>> {
    let mut cols: Vec<Monomial> = target
        .terms()
        .map(|(m, _)| *m)
        .chain(basis.iter().flat_map(|b| b.terms().map(|(m, _)| *m)))
        .collect();
    cols.sort_unstable();
    cols.dedup();
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let dense = |p: &Poly| {
        let mut row = vec![Rational::ZERO; cols.len()];
        for (m, c) in p.terms() {
            row[index[m]] = c.clone();
        }
        row
    };
    let m = Matrix::from_rows(basis.iter().map(dense).collect());
    if basis.is_empty() {
        return if target.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::Inconsistent("target is not in an empty span".into()))
        };
    }
    m.solve_left(&dense(target))
        .ok_or_else(|| Error::Inconsistent("target is not in the span".into()))
}

/// Expresses `F_T^S` for an arbitrary filling `T` in terms of `F_{T'}^S`
/// over standard `T'` of the same shape, by an exact linear solve. Returns
/// the nonzero coefficients in last letter order of `T'`.
pub fn straighten(s: &Tableau, t: &Tableau) -> Result<Vec<(Tableau, Rational)>> {
    let target = higher_specht_of(s, t)?;
    let mut standard = Tableau::standard(&t.shape());
    sort_last_letter(&mut standard);
    let basis: Vec<Poly> = standard
        .iter()
        .map(|u| higher_specht_of(s, u))
        .collect::<Result<_>>()?;
    let coeffs = solve_in_span(&target, &basis)?;
    Ok(standard
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Order of the stabilizer of the monomial `x_T^{cw_S}` in the row group:
/// the product over rows of `S` of the factorials of repeated cocharge
/// labels. Dividing `F_T^S` by it sums over distinct row arrangements only.
pub fn row_stabilizer_order(s: &Tableau) -> Result<BigInt> {
    if s.size() == 0 {
        return Ok(BigInt::from(1));
    }
    let labels = cocharge_tableau(s)?;
    let mut out = BigInt::from(1);
    for row in labels {
        for (_, group) in &row.into_iter().sorted().chunk_by(|&x| x) {
            out *= crate::tableaux::factorial(group.count());
        }
    }
    Ok(out)
}

/// Which basis family to build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyKind {
    /// `F_T^S` over pairs of standard tableaux of size `n`.
    Coinvariant { n: usize },
    /// `F_T^S · e_1^{i_1} ⋯ e_{n−k}^{i_{n−k}}` with `Σ i < k − des(S)`.
    Rnk { n: usize, k: usize },
    /// `F_T^S · e_1^{i_1} ⋯ e_{n−s}^{i_{n−s}}` with `Σ i < k − des(S)`.
    Rnks { n: usize, k: usize, s: usize },
    /// `F_T^S` with `S` of content `μ` and `T` standard.
    GarsiaProcesi { mu: Partition },
    /// `F_T^S · e_1^i` with `S` of content `(n−1, 1)` and `i < k − des(S)`.
    GriffinHook { n: usize, k: usize },
}

impl FamilyKind {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilyKind::Coinvariant { n } if n == 0 || n > crate::polyring::MAX_VARS => {
                bad(format!("n = {n} out of range"))
            }
            FamilyKind::Rnk { n, k } | FamilyKind::Rnks { n, k, .. }
                if n == 0 || k == 0 || k > n || n > crate::polyring::MAX_VARS =>
            {
                bad(format!("need 1 ≤ k ≤ n, got n = {n}, k = {k}"))
            }
            FamilyKind::Rnks { k, s, .. } if s > k => {
                bad(format!("need s ≤ k, got s = {s}, k = {k}"))
            }
            FamilyKind::GarsiaProcesi { ref mu } if mu.is_empty() => {
                bad("μ must be nonempty".into())
            }
            FamilyKind::GriffinHook { n, k } if n < 2 || k == 0 || k > n => {
                bad(format!("need n ≥ 2 and 1 ≤ k ≤ n, got n = {n}, k = {k}"))
            }
            _ => Ok(()),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            FamilyKind::Coinvariant { n }
            | FamilyKind::Rnk { n, .. }
            | FamilyKind::Rnks { n, .. }
            | FamilyKind::GriffinHook { n, .. } => *n,
            FamilyKind::GarsiaProcesi { mu } => mu.size(),
        }
    }
}

/// Label of a family member: the index pair, the exponent tuple of the
/// symmetric-function multiplier, and the degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyLabel {
    pub shape: Partition,
    #[serde(rename = "S")]
    pub s: Tableau,
    #[serde(rename = "T")]
    pub t: Tableau,
    pub exponents: Vec<usize>,
    pub degree: usize,
}

impl std::fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S=[{}] T=[{}]", self.s, self.t)?;
        if self.exponents.iter().any(|&e| e > 0) {
            write!(f, " e^{:?}", self.exponents)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub label: FamilyLabel,
    pub poly: Poly,
}

/// Sort key of `S` within a family: shape in decreasing lexicographic
/// order, then reading word.
fn s_key(s: &Tableau) -> (std::cmp::Reverse<Partition>, crate::tableaux::Word) {
    (std::cmp::Reverse(s.shape()), s.reading_word())
}

/// Compares labels by degree, then `S`, then `T` in last letter order, then
/// exponent tuple.
pub fn family_cmp(a: &FamilyLabel, b: &FamilyLabel) -> Ordering {
    a.degree
        .cmp(&b.degree)
        .then_with(|| s_key(&a.s).cmp(&s_key(&b.s)))
        .then_with(|| {
            if a.t.shape() == b.t.shape() && a.t.is_standard() && b.t.is_standard() {
                last_letter_cmp(&a.t, &b.t).expect("comparable")
            } else {
                a.t.cmp(&b.t)
            }
        })
        .then_with(|| a.exponents.cmp(&b.exponents))
}

/// All `(S, T)` with `S ∈ SSYT(λ, content)` and `T ∈ SYT(λ)` over `λ ⊢ n`.
pub fn index_pairs(content: &Partition) -> Vec<(Tableau, Tableau)> {
    let mut out = Vec::new();
    for lam in Partition::all(content.size()) {
        let ssyt = Tableau::semistandard(&lam, content.parts());
        if ssyt.is_empty() {
            continue;
        }
        let syt = Tableau::standard(&lam);
        for s in &ssyt {
            for t in &syt {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

/// Nonnegative integer tuples of length `len` with sum below `bound`.
fn bounded_tuples(len: usize, bound: usize) -> Vec<Vec<usize>> {
    if bound == 0 {
        return Vec::new();
    }
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len)
        .map(|_| 0..bound)
        .multi_cartesian_product()
        .filter(|v| v.iter().sum::<usize>() < bound)
        .collect()
}

/// Builds a labeled basis family in family order.
pub fn build_basis_family(kind: &FamilyKind) -> Result<Vec<FamilyMember>> {
    kind.validate()?;
    let n = kind.nvars();
    let (content, mult_len, k) = match kind {
        FamilyKind::Coinvariant { n } => (Partition::column(*n), 0, None),
        FamilyKind::Rnk { n, k } => (Partition::column(*n), n - k, Some(*k)),
        FamilyKind::Rnks { n, k, s } => (Partition::column(*n), n - s, Some(*k)),
        FamilyKind::GarsiaProcesi { mu } => (mu.clone(), 0, None),
        FamilyKind::GriffinHook { n, k } => (Partition::new(vec![n - 1, 1])?, 1, Some(*k)),
    };
    let all_vars: Vec<usize> = (0..n).collect();
    let e: Vec<Poly> = (1..=mult_len)
        .map(|d| elementary(n, d, &all_vars))
        .collect();

    let mut jobs = Vec::new();
    for (s, t) in index_pairs(&content) {
        let tuples = match k {
            None => vec![Vec::new()],
            Some(k) => {
                let d = des(&s)?;
                bounded_tuples(mult_len, k.saturating_sub(d))
            }
        };
        for tup in tuples {
            jobs.push((s.clone(), t.clone(), tup));
        }
    }

    let mut members: Vec<FamilyMember> = jobs
        .into_par_iter()
        .map(|(s, t, tup)| {
            let f = higher_specht_of(&s, &t)?;
            let cc = crate::tableaux::tableau_cocharge(&s)?;
            let mut poly = f;
            for (j, &i) in tup.iter().enumerate() {
                if i > 0 {
                    poly = &poly * &e[j].pow(i);
                }
            }
            let degree = cc
                + tup
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| (j + 1) * i)
                    .sum::<usize>();
            Ok(FamilyMember {
                label: FamilyLabel {
                    shape: s.shape(),
                    s,
                    t,
                    exponents: tup,
                    degree,
                },
                poly,
            })
        })
        .collect::<Result<_>>()?;
    members.sort_by(|a, b| family_cmp(&a.label, &b.label));
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{vandermonde, Permutation};

    fn young(s: &str) -> Tableau {
        crate::tableaux::test_util::young(s)
    }

    fn poly(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn classical_examples() {
        let f = specht_classical(&young("5/247/136")).unwrap();
        let printed = poly(7, "1");
        let printed = [(1, 2), (1, 5), (2, 5), (3, 4), (6, 7)]
            .iter()
            .fold(printed, |acc, &(a, b)| {
                &acc * &(&Poly::var(7, a - 1) - &Poly::var(7, b - 1))
            });
        assert_eq!(f, -&printed);
        assert_eq!(specht_classical(&young("123")).unwrap(), Poly::one(3));
        let col: Tableau = "1/2/3".parse().unwrap();
        assert_eq!(specht_classical(&col).unwrap(), -&vandermonde(3));
    }

    #[test]
    fn symmetrizer_examples() {
        let row = young("1234");
        assert_eq!(
            apply_symmetrizer(&row, &Poly::one(4)).unwrap(),
            Poly::constant(4, Rational::from_int(24))
        );
        let t = young("3/12");
        assert_eq!(
            apply_symmetrizer(&t, &poly(3, "x3")).unwrap(),
            poly(3, "2*x3 - 2*x1")
        );
    }

    #[test]
    fn symmetrizer_matches_group_sum() {
        // Direct sum over C(T) × R(T) as the oracle.
        let t = young("4/23/15");
        let p = poly(5, "x1^2*x2 + 3*x4*x5 - x3");
        let g = TabGroupSpec::of(&t);
        let in_group = |perm: &Permutation, groups: &[Vec<usize>]| {
            groups
                .iter()
                .all(|grp| grp.iter().all(|&e| grp.contains(&(perm.apply(e - 1) + 1))))
        };
        let mut expected = Poly::zero(5);
        for tau in Permutation::all(5).filter(|q| in_group(q, &g.column_groups)) {
            for sigma in Permutation::all(5).filter(|q| in_group(q, &g.row_groups)) {
                let term = p.permute(&sigma).unwrap().permute(&tau).unwrap();
                expected.add_scaled(&term, &Rational::from_int(tau.sign()));
            }
        }
        assert_eq!(apply_symmetrizer(&t, &p).unwrap(), expected);
        assert_eq!(g.row_group_order(), BigInt::from(4));
        assert_eq!(g.column_group_order(), BigInt::from(12));
    }

    #[test]
    fn higher_specht_examples() {
        let f = higher_specht_of(&young("2/11"), &young("3/12")).unwrap();
        assert_eq!(f, poly(3, "2*x3 - 2*x1"));
        let f = higher_specht_of(&young("22/1112"), &young("24/1356")).unwrap();
        let expected = &(&poly(6, "48*x2 - 48*x1") * &poly(6, "x4 - x3")) * &Poly::one(6);
        assert_eq!(f, expected);
    }

    #[test]
    fn superstandard_is_scaled_classical() {
        for lam in Partition::all(5) {
            let rows: Vec<Vec<usize>> = lam
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i + 1; len])
                .collect();
            let s = Tableau::new(rows).unwrap();
            let scale: BigInt = lam
                .parts()
                .iter()
                .map(|&p| crate::tableaux::factorial(p))
                .product();
            for t in Tableau::standard(&lam) {
                let f = higher_specht_of(&s, &t).unwrap();
                let c = specht_classical(&t).unwrap();
                assert_eq!(f, c.scale(&Rational::from_bigint(scale.clone())));
            }
        }
    }

    #[test]
    fn dual_monomials_complement() {
        let mut undefined = Vec::new();
        for lam in Partition::all(4) {
            for s in Tableau::standard(&lam) {
                for t in Tableau::standard(&lam) {
                    let idx = SpechtIndex::new(s.clone(), t.clone()).unwrap();
                    let Ok(g) = dual_specht(&idx) else {
                        undefined.push((s.to_string(), t.to_string()));
                        continue;
                    };
                    assert!(g.is_homogeneous());
                    let labels = cocharge_tableau(&s).unwrap();
                    let mut exps = vec![0; 4];
                    for (i, j, x) in t.cells() {
                        exps[x - 1] = x - 1 - labels[i][j];
                    }
                    let prod = Monomial::new(&exps).mul(&cocharge_monomial(&idx).unwrap());
                    assert_eq!(prod, Monomial::new(&[0, 1, 2, 3]));
                }
            }
        }
        // The cell holding 2 in T carries label 2 in S.
        assert_eq!(
            undefined,
            vec![("1 4/2/3".to_string(), "1 2/3/4".to_string())]
        );
    }

    #[test]
    fn bilinear_form_small_cases() {
        assert!(bilinear_form(&Poly::one(2), &Poly::one(2))
            .unwrap()
            .is_zero());
        let x2 = poly(2, "x2");
        assert_eq!(
            bilinear_form(&x2, &Poly::one(2)).unwrap(),
            Rational::from_int(-1)
        );
        assert_eq!(
            bilinear_form(&poly(2, "x1"), &Poly::one(2)).unwrap(),
            Rational::ONE
        );
    }

    #[test]
    fn bilinear_form_matches_antisymmetrization() {
        // Oracle: antisymmetrize fg literally and divide by the Vandermonde.
        let n = 3;
        let f = poly(n, "x1^2 + 3*x2*x3 - x3");
        let g = poly(n, "x2 + 2*x3 - 5");
        let fg = &f * &g;
        let mut anti = Poly::zero(n);
        for s in Permutation::all(n) {
            anti.add_scaled(&fg.permute(&s).unwrap(), &Rational::from_int(s.sign()));
        }
        let delta = vandermonde(n);
        let coeffs = solve_in_span(&anti.homogeneous_part(3), &[delta]).unwrap();
        assert_eq!(bilinear_form(&f, &g).unwrap(), coeffs[0]);
    }

    #[test]
    fn garnir_examples() {
        let t = young("4/25/13");
        let s = young("5/24/13");
        let f = higher_specht_of(&s, &t).unwrap();
        assert!(garnir_apply(&t, 1, 2, 1, &f).unwrap().is_zero());
        assert!(garnir_apply(&t, 1, 2, 2, &f).unwrap().is_zero());
        assert!(garnir_apply(&t, 1, 3, 1, &f).is_err());
        assert!(garnir_apply(&t, 2, 1, 1, &f).is_err());
        assert_eq!(garnir_set(&t, 1, 2, 2).unwrap(), vec![2, 4, 3, 5]);
        // Applying twice multiplies by the order of the group.
        let p = poly(5, "x1^3*x2 + x4*x5^2");
        let once = garnir_apply(&t, 1, 2, 1, &p).unwrap();
        let twice = garnir_apply(&t, 1, 2, 1, &once).unwrap();
        assert_eq!(twice, once.scale(&Rational::from_int(6)));
    }

    #[test]
    fn straighten_examples() {
        let s = young("22/111");
        let t = young("24/135");
        assert_eq!(
            straighten(&s, &t).unwrap(),
            vec![(t.clone(), Rational::ONE)]
        );
        let got = straighten(&s, &young("43/125")).unwrap();
        assert_eq!(
            got,
            vec![
                (young("24/135"), Rational::from_int(-1)),
                (young("34/125"), Rational::ONE)
            ]
        );
        // Shape (2,1): every filling lands in the span with coefficients in {0, ±1}.
        let s = young("2/11");
        for perm in Permutation::all(3) {
            let filling: Vec<usize> = perm.images().iter().map(|i| i + 1).collect();
            let t = Tableau::with_shape(&"2,1".parse().unwrap(), &filling);
            for (_, c) in straighten(&s, &t).unwrap() {
                assert!(c == Rational::ONE || c == Rational::from_int(-1));
            }
        }
    }

    #[test]
    fn family_sizes() {
        for n in 1..=4 {
            for k in 1..=3.min(n) {
                let fam = build_basis_family(&FamilyKind::Rnks { n, k, s: 0 }).unwrap();
                assert_eq!(fam.len(), k.pow(n as u32));
            }
        }
        for n in 1..=5 {
            for mu in Partition::all(n) {
                let fam =
                    build_basis_family(&FamilyKind::GarsiaProcesi { mu: mu.clone() }).unwrap();
                assert_eq!(BigInt::from(fam.len()), crate::tableaux::multinomial(&mu));
            }
        }
        let base = build_basis_family(&FamilyKind::GriffinHook { n: 4, k: 1 }).unwrap();
        assert_eq!(base.len(), 1);
        assert_eq!(base[0].label.t, young("1234"));
        assert_eq!(base[0].poly, Poly::constant(4, Rational::from_int(24)));
        assert!(build_basis_family(&FamilyKind::Rnks { n: 3, k: 2, s: 3 }).is_err());
    }

    #[test]
    fn family_is_ordered_and_homogeneous() {
        let fam = build_basis_family(&FamilyKind::Rnk { n: 4, k: 3 }).unwrap();
        assert!(fam
            .windows(2)
            .all(|w| family_cmp(&w[0].label, &w[1].label) == Ordering::Less));
        for m in &fam {
            assert!(m.poly.is_homogeneous());
            assert_eq!(m.poly.degree(), Some(m.label.degree));
        }
        let json = serde_json::to_value(&fam[1].label).unwrap();
        assert!(json.get("S").is_some() && json.get("exponents").is_some());
    }
}
