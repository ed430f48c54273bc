//! Characters of `S_n`, graded Schur expansions and the closed-form
//! Frobenius series of the quotient families.
//!
//! q-polynomials are plain integer coefficient vectors, lowest degree first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::Permutation;
use crate::quotient::GradedQuotient;
use crate::rational::Rational;
use crate::specht::{higher_specht_of, straighten};
use crate::tableaux::{
    descent_stats, factorial, sort_last_letter, tableau_cocharge, Partition, Tableau,
};

/// Integer q-polynomial, coefficient of `q^i` at index `i`.
pub type QPoly = Vec<i64>;

fn qtrim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn qmul(a: &[i64], b: &[i64]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

/// Gaussian binomial `[a choose b]_q`; zero when `b > a`.
pub fn qbinomial(a: usize, b: usize) -> QPoly {
    if b > a {
        return Vec::new();
    }
    // Row-by-row Pascal recursion [a, j] = [a−1, j−1] + q^j [a−1, j].
    let mut row: Vec<QPoly> = vec![vec![1]];
    for m in 1..=a {
        let mut next: Vec<QPoly> = Vec::with_capacity(m + 1);
        for j in 0..=m.min(b) {
            let mut p = vec![0; j * (m - j) + 1];
            if j > 0 {
                for (i, c) in row[j - 1].iter().enumerate() {
                    p[i] += c;
                }
            }
            if j < m {
                for (i, c) in row[j].iter().enumerate() {
                    p[i + j] += c;
                }
            }
            next.push(p);
        }
        row = next;
    }
    qtrim(row.swap_remove(b))
}

/// Complete character table of `S_n`, rows and columns indexed by
/// [`Partition::all`] (irreducibles and cycle types respectively).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u64>,
}

/// Murnaghan–Nakayama on beta-sets: strips a rim hook of length `rho[0]`.
fn mn(lambda: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut total = 0;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb: Vec<usize> = beta
            .iter()
            .map(|&x| if x == b { b - r } else { x })
            .collect();
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let smaller: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `z_ρ = ∏ i^{m_i} m_i!`.
fn centralizer_order(rho: &Partition) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| BigInt::from(i).pow(m as u32) * factorial(m))
        .product()
}

impl CharacterTable {
    pub fn build(n: usize) -> CharacterTable {
        let partitions = Partition::all(n);
        let values = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|rho| mn(lam.parts(), rho.parts(), &mut HashMap::new()))
                    .collect()
            })
            .collect();
        let nf = factorial(n);
        let class_sizes = partitions
            .iter()
            .map(|rho| {
                (&nf / centralizer_order(rho))
                    .to_u64()
                    .expect("class size fits")
            })
            .collect();
        CharacterTable {
            n,
            partitions,
            values,
            class_sizes,
        }
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|x| x == p)
    }

    /// `χ^λ(ρ)`.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        let i = self.index(lambda).expect("partition of n");
        let j = self.index(rho).expect("partition of n");
        self.values[i][j]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index(lambda).expect("partition of n")]
    }

    /// Multiplicities of the irreducibles in a class function given by its
    /// values on cycle types (in table order). Fails on non-integral results.
    pub fn decompose(&self, values: &[Rational]) -> Result<Vec<i64>> {
        let nf = Rational::from_bigint(factorial(self.n));
        self.values
            .iter()
            .zip(&self.partitions)
            .map(|(row, lam)| {
                let s: Rational = row
                    .iter()
                    .zip(&self.class_sizes)
                    .zip(values)
                    .map(|((&chi, &size), v)| v * &Rational::from(chi * size as i64))
                    .sum();
                let m = &s * &nf.recip();
                m.to_i64().filter(|_| m.is_integer()).ok_or_else(|| {
                    Error::Inconsistent(format!("multiplicity of s_{lam} is {m}, not an integer"))
                })
            })
            .collect()
    }
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Character table of `S_n`, cached per `n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().expect("table cache").get(&n) {
        return t.clone();
    }
    let t = Arc::new(CharacterTable::build(n));
    tables
        .write()
        .expect("table cache")
        .entry(n)
        .or_insert(t)
        .clone()
}

/// `Σ_{d, λ} c_{λ,d} q^d s_λ` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSchurExpansion {
    coeffs: BTreeMap<(usize, Partition), i64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    degree: usize,
    lambda: Partition,
    mult: i64,
}

impl Serialize for GradedSchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .coeffs
            .iter()
            .map(|((d, l), &m)| Entry {
                degree: *d,
                lambda: l.clone(),
                mult: m,
            })
            .collect();
        entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedSchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(deserializer)?;
        let mut out = GradedSchurExpansion::new();
        for e in entries {
            out.add(e.degree, &e.lambda, e.mult);
        }
        Ok(out)
    }
}

impl GradedSchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, d: usize, lambda: &Partition, m: i64) {
        if m == 0 {
            return;
        }
        let key = (d, lambda.clone());
        let v = self.coeffs.entry(key.clone()).or_insert(0);
        *v += m;
        if *v == 0 {
            self.coeffs.remove(&key);
        }
    }

    /// Adds `p(q) · s_λ`.
    pub fn add_qpoly(&mut self, p: &[i64], lambda: &Partition) {
        for (d, &c) in p.iter().enumerate() {
            self.add(d, lambda, c);
        }
    }

    pub fn add_scaled(&mut self, other: &GradedSchurExpansion, p: &[i64]) {
        for ((d, lam), &m) in &other.coeffs {
            for (e, &c) in p.iter().enumerate() {
                self.add(d + e, lam, m * c);
            }
        }
    }

    pub fn coeff(&self, d: usize, lambda: &Partition) -> i64 {
        self.coeffs.get(&(d, lambda.clone())).copied().unwrap_or(0)
    }

    /// Terms sorted by degree, then `λ` lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Partition, i64)> + '_ {
        self.coeffs.iter().map(|((d, l), &m)| (*d, l, m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&m| m >= 0)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|(d, _)| *d).max()
    }

    /// `q^top · f(q^{−1})`; requires `top` at least the maximum degree.
    pub fn reflect(&self, top: usize) -> Self {
        let mut out = Self::new();
        for ((d, l), &m) in &self.coeffs {
            assert!(*d <= top, "reflection degree {top} below term degree {d}");
            out.add(top - d, l, m);
        }
        out
    }

    /// Reflection in the expansion's own maximum degree.
    pub fn rev_q(&self) -> Self {
        self.reflect(self.max_degree().unwrap_or(0))
    }

    /// Dimension of each graded piece: `Σ_λ c_{λ,d} f^λ`.
    pub fn hilbert(&self) -> Vec<i64> {
        let mut out = vec![0; self.max_degree().map_or(0, |d| d + 1)];
        for ((d, l), &m) in &self.coeffs {
            out[*d] += m * l.num_standard().to_i64().expect("f^λ fits");
        }
        out
    }
}

impl fmt::Display for GradedSchurExpansion {
    /// `s_3 + q*s_21 + 2*q^2*s_21`; parts are comma separated once any
    /// part exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, ((d, l), &m)) in self.coeffs.iter().enumerate() {
            let (sign, abs) = if m < 0 { ("-", -m) } else { ("+", m) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            let wide = l.parts().iter().any(|&p| p > 9);
            let sep = if wide { "," } else { "" };
            let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "s_{}", parts.join(sep))?;
        }
        Ok(())
    }
}

/// Graded Frobenius character of a quotient, from traces of one
/// permutation per cycle type on each graded piece.
pub fn graded_frobenius(q: &GradedQuotient) -> Result<GradedSchurExpansion> {
    let n = q.nvars();
    let table = character_table(n);
    let perms: Vec<Permutation> = table
        .partitions
        .iter()
        .map(|rho| Permutation::of_cycle_type(rho.parts()))
        .collect();
    let mut out = GradedSchurExpansion::new();
    for d in 0..q.hilbert().len() {
        let basis = q.basis(d);
        let traces: Vec<Rational> = perms
            .iter()
            .map(|sigma| {
                basis
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let nf = q.normal_form(&b.permute(sigma));
                        nf.iter()
                            .find(|(c, _)| *c as usize == i)
                            .map_or(Rational::ZERO, |(_, x)| x.clone())
                    })
                    .sum()
            })
            .collect();
        let mults = table.decompose(&traces)?;
        for (lam, m) in table.partitions.iter().zip(mults) {
            if m < 0 {
                return Err(Error::Inconsistent(format!(
                    "negative multiplicity {m} of s_{lam} in degree {d}"
                )));
            }
            out.add(d, lam, m);
        }
    }
    Ok(out)
}

/// `H̃_μ(x; q) = Σ_λ Σ_{S ∈ SSYT(λ, μ)} q^{cc(S)} s_λ`.
pub fn hall_littlewood_cocharge(mu: &Partition) -> Result<GradedSchurExpansion> {
    let mut out = GradedSchurExpansion::new();
    for lam in Partition::all(mu.size()) {
        for s in Tableau::semistandard(&lam, mu.parts()) {
            out.add(tableau_cocharge(&s)?, &lam, 1);
        }
    }
    Ok(out)
}

/// Charge version `H_μ(x; q) = q^{n(μ)} H̃_μ(x; q^{−1})`.
pub fn hall_littlewood_charge(mu: &Partition) -> Result<GradedSchurExpansion> {
    Ok(hall_littlewood_cocharge(mu)?.reflect(mu.n_statistic()))
}

/// `Σ_{S ∈ SYT(n)} q^{maj(S)} s_{shape(S)}`.
pub fn grfrob_formula_coinvariant(n: usize) -> Result<GradedSchurExpansion> {
    grfrob_formula_rnk(n, n)
}

/// `Σ_{S ∈ SYT(n)} q^{maj(S)} [n − des(S) − 1 choose n − k]_q s_{shape(S)}`.
pub fn grfrob_formula_rnk(n: usize, k: usize) -> Result<GradedSchurExpansion> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    let mut out = GradedSchurExpansion::new();
    for lam in Partition::all(n) {
        for s in Tableau::standard(&lam) {
            let st = descent_stats(&s)?;
            let mut p = vec![0; st.maj + 1];
            p[st.maj] = 1;
            let p = qmul(&p, &qbinomial(n - st.des - 1, n - k));
            out.add_qpoly(&p, &lam);
        }
    }
    Ok(out)
}

/// Griffin's expansion of `grFrob(R_{n,k,μ})` in charge Hall–Littlewood
/// polynomials, with `λ'_0 = k` in the `i = 0` factor and `rev_q` taken in
/// the top degree of the whole sum.
pub fn grfrob_formula_rnkmu(n: usize, k: usize, mu: &Partition) -> Result<GradedSchurExpansion> {
    if mu.size() > n || k == 0 || k > n || k < mu.len() {
        return Err(Error::InvalidParameter(format!(
            "need |μ| ≤ n and ℓ(μ) ≤ k ≤ n, got n = {n}, k = {k}, μ = {mu}"
        )));
    }
    Ok(rnkmu_bracket(n, k, mu)?.rev_q())
}

/// The bracketed sum of [`grfrob_formula_rnkmu`] before reflection.
pub fn rnkmu_bracket(n: usize, k: usize, mu: &Partition) -> Result<GradedSchurExpansion> {
    let mu_c = mu.conjugate();
    let mut sum = GradedSchurExpansion::new();
    for lam in Partition::all(n) {
        if lam.len() > k || !lam.contains(mu) {
            continue;
        }
        let lam_c = lam.conjugate();
        // Conjugate parts with λ'_0 = k.
        let lc = |i: usize| if i == 0 { k } else { lam_c.part(i - 1) };
        let mc = |i: usize| if i == 0 { k } else { mu_c.part(i - 1) };
        let shift: usize = (1..=lam.part(0))
            .map(|i| {
                let a = lc(i) - mc(i);
                a * a.saturating_sub(1) / 2
            })
            .sum();
        let mut coef = vec![0; shift + 1];
        coef[shift] = 1;
        for i in 0..=lam.part(0) {
            coef = qmul(&coef, &qbinomial(lc(i) - mc(i + 1), lc(i) - lc(i + 1)));
        }
        sum.add_scaled(&hall_littlewood_charge(&lam)?, &coef);
    }
    Ok(sum)
}

/// Outcome of [`irreducible_block_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    #[serde(rename = "S")]
    pub s: Tableau,
    pub shape: Partition,
    pub degree: usize,
    pub dimension: usize,
    pub expected_dimension: usize,
    /// Character on cycle types, in [`Partition::all`] order.
    pub character: Vec<i64>,
    pub expected_character: Vec<i64>,
    pub verdict: bool,
}

/// Checks that `{F_T^S : T ∈ SYT(shape(S))}` spans a copy of `V_λ` in the
/// quotient: dimension `f^λ` there, and character `χ^λ`, with traces from
/// `σ·F_T^S = F_{σT}^S` and straightening.
pub fn irreducible_block_check(s: &Tableau, q: &GradedQuotient) -> Result<BlockReport> {
    let shape = s.shape();
    let n = shape.size();
    if q.nvars() != n {
        return Err(Error::VariableMismatch {
            expected: q.nvars(),
            got: n,
        });
    }
    let mut ts = Tableau::standard(&shape);
    sort_last_letter(&mut ts);
    let degree = tableau_cocharge(s)?;
    let mut ech = crate::linalg::Echelon::new(q.dim_in_degree(degree));
    for t in &ts {
        ech.insert(&q.project_homogeneous(&higher_specht_of(s, t)?, degree)?);
    }
    let table = character_table(n);
    let mut character = Vec::with_capacity(table.partitions.len());
    for rho in &table.partitions {
        let sigma = Permutation::of_cycle_type(rho.parts());
        let mut trace = Rational::ZERO;
        for t in &ts {
            let moved = t.map_entries(|x| sigma.apply(x - 1) + 1);
            for (u, c) in straighten(s, &moved)? {
                if &u == t {
                    trace += c;
                }
            }
        }
        character.push(
            trace
                .to_i64()
                .filter(|_| trace.is_integer())
                .ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "trace {trace} of cycle type {rho} is not an integer"
                    ))
                })?,
        );
    }
    let expected_character = table.row(&shape).to_vec();
    let expected_dimension = ts.len();
    let dimension = ech.rank();
    Ok(BlockReport {
        s: s.clone(),
        verdict: dimension == expected_dimension && character == expected_character,
        shape,
        degree,
        dimension,
        expected_dimension,
        character,
        expected_character,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn qbinomial_values() {
        assert_eq!(qbinomial(4, 2), vec![1, 1, 2, 1, 1]);
        assert_eq!(qbinomial(5, 0), vec![1]);
        assert_eq!(qbinomial(2, 3), Vec::<i64>::new());
        for k in 2..7 {
            assert_eq!(qbinomial(k - 1, k - 2), vec![1; k - 1]);
        }
        for a in 0..8 {
            for b in 0..=a {
                let p = qbinomial(a, b);
                assert_eq!(p.len(), b * (a - b) + 1);
                let mut r = p.clone();
                r.reverse();
                assert_eq!(p, r);
            }
        }
    }

    #[test]
    fn character_table_small() {
        let t = character_table(3);
        assert_eq!(t.row(&part(&[3])), &[1, 1, 1]);
        // Columns (3), (2,1), (1,1,1): the sign character.
        assert_eq!(t.row(&part(&[1, 1, 1])), &[1, -1, 1]);
        assert_eq!(t.row(&part(&[2, 1])), &[-1, 0, 2]);
        assert_eq!(t.class_sizes, vec![2, 3, 1]);
    }

    #[test]
    fn character_table_orthogonality() {
        for n in 1..=6 {
            let t = character_table(n);
            let nf = factorial(n).to_i64().unwrap();
            let id = t.index(&Partition::column(n)).unwrap();
            for (i, lam) in t.partitions.iter().enumerate() {
                assert_eq!(
                    BigInt::from(t.values[i][id]),
                    BigInt::from(Tableau::standard(lam).len())
                );
                for j in 0..t.partitions.len() {
                    let s: i64 = (0..t.partitions.len())
                        .map(|c| t.class_sizes[c] as i64 * t.values[i][c] * t.values[j][c])
                        .sum();
                    assert_eq!(s, if i == j { nf } else { 0 });
                }
            }
        }
    }

    #[test]
    fn hall_littlewood_small() {
        let h = hall_littlewood_cocharge(&part(&[2, 1])).unwrap();
        assert_eq!(h.to_string(), "s_3 + q*s_21");
        let h = hall_littlewood_cocharge(&part(&[4])).unwrap();
        assert_eq!(h.to_string(), "s_4");
    }

    #[test]
    fn coinvariant_formula_n3() {
        let f = grfrob_formula_coinvariant(3).unwrap();
        assert_eq!(f.to_string(), "s_3 + q*s_21 + q^2*s_21 + q^3*s_111");
        assert_eq!(f.hilbert(), vec![1, 2, 2, 1]);
        assert_eq!(grfrob_formula_rnk(2, 1).unwrap().to_string(), "s_2");
    }

    #[test]
    fn hook_formula_shape() {
        for n in 2..=5 {
            for k in 1..=n {
                let f = grfrob_formula_rnkmu(n, k, &Partition::row(n - 1)).unwrap();
                let mut expected = GradedSchurExpansion::new();
                let mut qk = vec![0; k];
                qk[k - 1] = 1;
                expected.add_scaled(&hall_littlewood_cocharge(&Partition::row(n)).unwrap(), &qk);
                let hook = Partition::new(vec![n - 1, 1]).unwrap();
                expected.add_scaled(&hall_littlewood_cocharge(&hook).unwrap(), &vec![1; k - 1]);
                assert_eq!(f, expected, "n={n} k={k}");
                if k >= 2 {
                    let b = rnkmu_bracket(n, k, &Partition::row(n - 1)).unwrap();
                    assert_eq!(b.max_degree(), Some(k - 1));
                }
            }
        }
    }

    #[test]
    fn expansion_json_round_trip() {
        let f = grfrob_formula_coinvariant(3).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"[{"degree":0,"lambda":[3],"mult":1}"#));
        let g: GradedSchurExpansion = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn frobenius_of_small_quotients() {
        use crate::quotient::IdealFamily;
        let q = GradedQuotient::of_family(&IdealFamily::Rn { n: 3 }).unwrap();
        assert_eq!(
            graded_frobenius(&q).unwrap().to_string(),
            "s_3 + q*s_21 + q^2*s_21 + q^3*s_111"
        );
        let q = GradedQuotient::of_family(&IdealFamily::Rmu { mu: part(&[2, 1]) }).unwrap();
        assert_eq!(graded_frobenius(&q).unwrap().to_string(), "s_3 + q*s_21");
        let q = GradedQuotient::of_family(&IdealFamily::Rnk { n: 3, k: 2 }).unwrap();
        let f = graded_frobenius(&q).unwrap();
        assert_eq!(f, grfrob_formula_rnk(3, 2).unwrap());
        assert_eq!(f.hilbert().iter().sum::<i64>() as usize, q.dim());
    }

    #[test]
    fn blocks_of_content_21() {
        use crate::quotient::IdealFamily;
        let q = GradedQuotient::of_family(&IdealFamily::Rmu { mu: part(&[2, 1]) }).unwrap();
        for s in ["1 1/2", "1 1 2"] {
            let r = irreducible_block_check(&s.parse().unwrap(), &q).unwrap();
            assert!(r.verdict, "{r:?}");
        }
        let r = irreducible_block_check(&"1 1/2".parse().unwrap(), &q).unwrap();
        assert_eq!((r.dimension, r.degree), (2, 1));
    }
}
