//! Quotients of `Q[x_1, …, x_n]` by the homogeneous ideals of the five ring
//! families, computed one degree at a time by exact elimination.
//!
//! Degree `d` is presented by standard monomials `B_d` and normal forms.
//! Every degree-`d` class is a combination of border products `x_i·b` with
//! `b ∈ B_{d−1}`; the relations among border products come from the
//! different ways of peeling one variable off a monomial, together with the
//! generators of degree `d`. Eliminating with the leftmost (largest) border
//! monomial as pivot leaves the smallest monomials standard.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{sparse_to_dense, Accumulator, Echelon, Matrix, SparseVec};
use crate::polyring::{elementary, monomials_of_degree, Monomial, Poly, MAX_VARS};
use crate::rational::Rational;
use crate::specht::{
    build_basis_family, family_cmp, row_stabilizer_order, FamilyKind, FamilyLabel, FamilyMember,
};
use crate::tableaux::{Partition, Tableau};

/// One of the five ideal families, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum IdealFamily {
    /// Coinvariant ideal `⟨e_1, …, e_n⟩`.
    Rn { n: usize },
    /// `⟨x_i^k, e_n, …, e_{n−k+1}⟩`.
    Rnk { n: usize, k: usize },
    /// `⟨x_i^k, e_n, …, e_{n−s+1}⟩`.
    Rnks { n: usize, k: usize, s: usize },
    /// Tanisaki ideal of `μ ⊢ n`.
    Rmu { mu: Partition },
    /// Griffin's ideal: `x_i^k` and shifted Tanisaki generators, `|μ| ≤ n`.
    Rnkmu { n: usize, k: usize, mu: Partition },
}

impl IdealFamily {
    pub fn nvars(&self) -> usize {
        match self {
            IdealFamily::Rn { n }
            | IdealFamily::Rnk { n, .. }
            | IdealFamily::Rnks { n, .. }
            | IdealFamily::Rnkmu { n, .. } => *n,
            IdealFamily::Rmu { mu } => mu.size(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            IdealFamily::Rn { .. } => "Rn",
            IdealFamily::Rnk { .. } => "Rnk",
            IdealFamily::Rnks { .. } => "Rnks",
            IdealFamily::Rmu { .. } => "Rmu",
            IdealFamily::Rnkmu { .. } => "Rnkmu",
        }
    }

    /// Exponent bound `k` from the `x_i^k` generators, if present.
    pub fn power(&self) -> Option<usize> {
        match self {
            IdealFamily::Rnk { k, .. }
            | IdealFamily::Rnks { k, .. }
            | IdealFamily::Rnkmu { k, .. } => Some(*k),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.nvars();
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "need 1 ≤ n ≤ {MAX_VARS}, got n = {n}"
            )));
        }
        match self {
            IdealFamily::Rnk { k, .. } | IdealFamily::Rnks { k, .. } if *k == 0 || *k > n => Err(
                Error::InvalidParameter(format!("need 1 ≤ k ≤ n, got n = {n}, k = {k}")),
            ),
            IdealFamily::Rnks { k, s, .. } if s > k => Err(Error::InvalidParameter(format!(
                "need s ≤ k, got s = {s}, k = {k}"
            ))),
            IdealFamily::Rnkmu { k, mu, .. } => {
                if mu.size() > n {
                    Err(Error::InvalidParameter(format!(
                        "|μ| = {} exceeds n = {n}",
                        mu.size()
                    )))
                } else if *k == 0 || *k > n || *k < mu.len() {
                    Err(Error::InvalidParameter(format!(
                        "need ℓ(μ) ≤ k ≤ n and k ≥ 1, got k = {k}, μ = {mu}"
                    )))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// The ring a basis family is meant to descend to.
    pub fn for_family(kind: &FamilyKind) -> Result<IdealFamily> {
        Ok(match kind {
            FamilyKind::Coinvariant { n } => IdealFamily::Rn { n: *n },
            FamilyKind::Rnk { n, k } => IdealFamily::Rnk { n: *n, k: *k },
            FamilyKind::Rnks { n, k, s } => IdealFamily::Rnks {
                n: *n,
                k: *k,
                s: *s,
            },
            FamilyKind::GarsiaProcesi { mu } => IdealFamily::Rmu { mu: mu.clone() },
            FamilyKind::GriffinHook { n, k } => IdealFamily::Rnkmu {
                n: *n,
                k: *k,
                mu: Partition::row(n - 1),
            },
        })
    }
}

impl fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealFamily::Rn { n } => write!(f, "R_{n}"),
            IdealFamily::Rnk { n, k } => write!(f, "R_{{{n},{k}}}"),
            IdealFamily::Rnks { n, k, s } => write!(f, "R_{{{n},{k},{s}}}"),
            IdealFamily::Rmu { mu } => write!(f, "R_({mu})"),
            IdealFamily::Rnkmu { n, k, mu } => write!(f, "R_{{{n},{k},({mu})}}"),
        }
    }
}

/// A family together with its explicit homogeneous generators.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub family: IdealFamily,
    pub n: usize,
    pub generators: Vec<Poly>,
}

impl IdealSpec {
    /// Degree past which the quotient must vanish; a guard against bad input.
    pub fn degree_cap(&self) -> usize {
        let n = self.n;
        match self.family.power() {
            Some(k) => n * (k - 1),
            None => n * (n - 1) / 2,
        }
    }
}

/// `e_r(S)` for every nonempty `S ⊆ [n]` and `threshold < r ≤ |S|`, where
/// the threshold is `c_{n−|S|}(μ) + shift`.
fn tanisaki_generators(n: usize, mu: &Partition, shift: i64) -> Vec<Poly> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let m = vars.len();
        let threshold = mu.column_excess(n - m) + shift;
        let lo = (threshold + 1).max(1) as usize;
        for r in lo..=m {
            out.push(elementary(n, r, &vars));
        }
    }
    out
}

pub fn build_ideal(family: &IdealFamily) -> Result<IdealSpec> {
    family.validate()?;
    let n = family.nvars();
    let all: Vec<usize> = (0..n).collect();
    let powers = |k: usize| {
        (0..n).map(move |i| {
            let mut exps = vec![0; n];
            exps[i] = k;
            Poly::monomial(n, &exps)
        })
    };
    let top_elementary = |count: usize| (n + 1 - count..=n).rev().map(|d| elementary(n, d, &all));
    let generators: Vec<Poly> = match family {
        IdealFamily::Rn { .. } => top_elementary(n).collect(),
        IdealFamily::Rnk { k, .. } => powers(*k).chain(top_elementary(*k)).collect(),
        IdealFamily::Rnks { k, s, .. } => powers(*k).chain(top_elementary(*s)).collect(),
        IdealFamily::Rmu { mu } => tanisaki_generators(n, mu, 0),
        IdealFamily::Rnkmu { k, mu, .. } => powers(*k)
            .chain(tanisaki_generators(n, mu, (n - mu.size()) as i64))
            .collect(),
    };
    Ok(IdealSpec {
        family: family.clone(),
        n,
        generators,
    })
}

/// One graded piece of the quotient.
struct Slice {
    /// Standard monomials, largest first.
    basis: Vec<Monomial>,
    /// Products `x_i·b` over the previous degree's standard monomials.
    border_index: HashMap<Monomial, u32>,
    /// Normal form of each border monomial over `basis`.
    border_nf: Vec<SparseVec>,
    /// `times[i][b]`: border index of `x_i` times previous basis element `b`.
    times: Vec<Vec<u32>>,
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: usize) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    let mut c: u128 = 1;
    for i in 1..n {
        c = c * (d + i) as u128 / i as u128;
    }
    c
}

/// Cached normal forms are retained while their total entry count stays
/// below this bound; anything beyond is recomputed on demand.
const SEED_BUDGET: usize = 4_000_000;

/// A graded quotient ring `Q[x]/I` with exact normal forms.
pub struct GradedQuotient {
    spec: IdealSpec,
    slices: Vec<Slice>,
    hilbert: Vec<usize>,
    cache: Vec<RwLock<HashMap<Monomial, Arc<SparseVec>>>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct QuotientOptions {
    /// Overrides [`IdealSpec::degree_cap`].
    pub max_degree: Option<usize>,
}

impl GradedQuotient {
    pub fn new(spec: IdealSpec) -> Result<Self> {
        Self::with_options(spec, QuotientOptions::default())
    }

    pub fn of_family(family: &IdealFamily) -> Result<Self> {
        Self::new(build_ideal(family)?)
    }

    pub fn with_options(spec: IdealSpec, opts: QuotientOptions) -> Result<Self> {
        let n = spec.n;
        let cap = opts.max_degree.unwrap_or_else(|| spec.degree_cap());
        let mut by_degree: BTreeMap<usize, Vec<&Poly>> = BTreeMap::new();
        for g in &spec.generators {
            if g.nvars() != n {
                return Err(Error::VariableMismatch {
                    expected: n,
                    got: g.nvars(),
                });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidParameter(format!(
                    "generator {g} is not homogeneous"
                )));
            }
            by_degree.entry(g.degree().unwrap()).or_default().push(g);
        }

        let mut slices: Vec<Slice> = Vec::new();
        let mut hilbert = Vec::new();
        let mut cache: Vec<RwLock<HashMap<Monomial, Arc<SparseVec>>>> = Vec::new();
        let mut prev_nf: HashMap<Monomial, SparseVec> = HashMap::new();
        let mut seeded = 0usize;
        let mut seed = |table: HashMap<Monomial, SparseVec>| {
            let entries: usize = table.values().map(Vec::len).sum();
            if seeded + entries > SEED_BUDGET {
                return HashMap::new();
            }
            seeded += entries;
            table.into_iter().map(|(m, v)| (m, Arc::new(v))).collect()
        };
        for d in 0..=cap + 1 {
            let gens = by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[]);
            let (slice, nf) = build_slice(n, d, slices.last(), &prev_nf, gens);
            let dim = slice.basis.len();
            slices.push(slice);
            if dim == 0 {
                break;
            }
            if d == cap + 1 {
                return Err(Error::InvalidParameter(format!(
                    "{} is nonzero in degree {d}, above the degree cap {cap}",
                    spec.family
                )));
            }
            hilbert.push(dim);
            let done = std::mem::replace(&mut prev_nf, nf);
            if d > 0 {
                cache.push(RwLock::new(seed(done)));
            }
        }
        if !hilbert.is_empty() {
            cache.push(RwLock::new(seed(prev_nf)));
        }
        Ok(GradedQuotient {
            spec,
            slices,
            hilbert,
            cache,
        })
    }

    pub fn spec(&self) -> &IdealSpec {
        &self.spec
    }

    pub fn family(&self) -> &IdealFamily {
        &self.spec.family
    }

    pub fn nvars(&self) -> usize {
        self.spec.n
    }

    /// Quotient dimension per degree, up to the top nonzero degree.
    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn dim(&self) -> usize {
        self.hilbert.iter().sum()
    }

    pub fn dim_in_degree(&self, d: usize) -> usize {
        self.hilbert.get(d).copied().unwrap_or(0)
    }

    /// Standard monomials of degree `d`, largest first.
    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.slices.get(d).map_or(&[], |s| s.basis.as_slice())
    }

    pub fn degree_slice(&self, d: usize) -> DegreeSlice<'_> {
        let total = monomial_count(self.nvars(), d);
        DegreeSlice {
            quotient: self,
            degree: d,
            rank: total - self.dim_in_degree(d) as u128,
        }
    }

    /// Coordinates of the class of `m` over [`GradedQuotient::basis`].
    pub fn normal_form(&self, m: &Monomial) -> Arc<SparseVec> {
        let d = m.degree();
        if d >= self.hilbert.len() {
            return Arc::new(Vec::new());
        }
        if let Some(v) = self.cache[d].read().expect("cache lock").get(m) {
            return v.clone();
        }
        let slice = &self.slices[d];
        let v = if let Some(&c) = slice.border_index.get(m) {
            slice.border_nf[c as usize].clone()
        } else {
            let i0 = m.first_var().expect("degree ≥ 1");
            let prev = self.normal_form(&m.div_var(i0).expect("divisible"));
            let mut acc = Accumulator::new(slice.basis.len());
            for (b, c) in prev.iter() {
                acc.add_scaled(&slice.border_nf[slice.times[i0][*b as usize] as usize], c);
            }
            acc.take()
        };
        let v = Arc::new(v);
        self.cache[d]
            .write()
            .expect("cache lock")
            .insert(*m, v.clone());
        v
    }

    fn check_vars(&self, p: &Poly) -> Result<()> {
        if p.nvars() != self.nvars() {
            return Err(Error::VariableMismatch {
                expected: self.nvars(),
                got: p.nvars(),
            });
        }
        Ok(())
    }

    /// Quotient coordinates of a polynomial whose terms all have degree `d`.
    pub fn project_homogeneous(&self, p: &Poly, d: usize) -> Result<SparseVec> {
        self.check_vars(p)?;
        let width = self.dim_in_degree(d);
        let mut acc = Accumulator::new(width);
        for (m, c) in p.terms() {
            if m.degree() != d {
                return Err(Error::InvalidParameter(format!(
                    "term {m} is not of degree {d}"
                )));
            }
            if width > 0 {
                acc.add_scaled(&self.normal_form(m), c);
            }
        }
        Ok(acc.take())
    }

    /// Quotient coordinates of every graded piece of `p` with a nonzero class.
    pub fn project(&self, p: &Poly) -> Result<BTreeMap<usize, SparseVec>> {
        self.check_vars(p)?;
        let mut degrees: Vec<usize> = p.terms().map(|(m, _)| m.degree()).collect();
        degrees.dedup();
        let mut out = BTreeMap::new();
        for d in degrees {
            let v = self.project_homogeneous(&p.homogeneous_part(d), d)?;
            if !v.is_empty() {
                out.insert(d, v);
            }
        }
        Ok(out)
    }

    /// Whether `p` lies in the ideal.
    pub fn reduces_to_zero(&self, p: &Poly) -> Result<bool> {
        Ok(self.project(p)?.is_empty())
    }

    /// The polynomial `Σ c_b b` for coordinates over the degree-`d` basis.
    pub fn lift(&self, d: usize, coords: &[(u32, Rational)]) -> Poly {
        let basis = self.basis(d);
        Poly::from_terms(
            self.nvars(),
            coords.iter().map(|(b, c)| (basis[*b as usize], c.clone())),
        )
    }

    /// Reduced representative of `p`, a combination of standard monomials.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(self.nvars());
        for (d, v) in self.project(p)? {
            out = &out + &self.lift(d, &v);
        }
        Ok(out)
    }
}

/// View of one degree of a [`GradedQuotient`].
pub struct DegreeSlice<'a> {
    quotient: &'a GradedQuotient,
    pub degree: usize,
    /// Dimension of the ideal's degree-`d` piece.
    pub rank: u128,
}

impl DegreeSlice<'_> {
    pub fn quotient_dim(&self) -> usize {
        self.quotient.dim_in_degree(self.degree)
    }

    pub fn basis(&self) -> &[Monomial] {
        self.quotient.basis(self.degree)
    }

    pub fn project(&self, p: &Poly) -> Result<SparseVec> {
        self.quotient.project_homogeneous(p, self.degree)
    }

    /// Reduced echelon basis of the ideal's degree-`d` piece: one row
    /// `M − NF(M)` per nonstandard monomial `M`, largest `M` first.
    pub fn ideal_rows(&self) -> Vec<Poly> {
        let q = self.quotient;
        let standard: HashSet<&Monomial> = self.basis().iter().collect();
        monomials_of_degree(q.nvars(), self.degree)
            .into_iter()
            .filter(|m| !standard.contains(m))
            .map(|m| {
                let nf = q.lift(self.degree, &q.normal_form(&m));
                &Poly::term(q.nvars(), m, Rational::ONE) - &nf
            })
            .collect()
    }
}

fn build_slice(
    n: usize,
    d: usize,
    prev: Option<&Slice>,
    prev_nf: &HashMap<Monomial, SparseVec>,
    gens: &[&Poly],
) -> (Slice, HashMap<Monomial, SparseVec>) {
    let monomials = monomials_of_degree(n, d);
    let border = match prev {
        None => vec![Monomial::one()],
        Some(prev) => {
            let mut border: Vec<Monomial> = prev
                .basis
                .iter()
                .flat_map(|b| (0..n).map(move |i| b.times_var(i)))
                .collect();
            border.sort_unstable_by(|a, b| b.cmp(a));
            border.dedup();
            border
        }
    };
    let border_index: HashMap<Monomial, u32> = border
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i as u32))
        .collect();
    let times: Vec<Vec<u32>> = match prev {
        None => Vec::new(),
        Some(prev) => (0..n)
            .map(|i| {
                prev.basis
                    .iter()
                    .map(|b| border_index[&b.times_var(i)])
                    .collect()
            })
            .collect(),
    };
    let width = border.len();
    let mut ech = Echelon::new(width);
    let mut acc = Accumulator::new(width);

    // `x_j · NF(m)` in border coordinates, scaled by `s`.
    let lift = |acc: &mut Accumulator, j: usize, nf: &SparseVec, s: &Rational| {
        for (b, c) in nf {
            acc.add(times[j][*b as usize], &(c * s));
        }
    };
    let minus_one = -Rational::ONE;
    // Border representative of a monomial: itself, or `x_{i0}·NF(M/x_{i0})`.
    let phi = |acc: &mut Accumulator, m: &Monomial, s: &Rational| match border_index.get(m) {
        Some(&c) => acc.add(c, s),
        None => {
            let i0 = m.first_var().expect("degree ≥ 1");
            lift(acc, i0, &prev_nf[&m.div_var(i0).unwrap()], s);
        }
    };

    if d > 0 {
        let standard_prev: HashSet<&Monomial> =
            prev.map(|p| p.basis.iter().collect()).unwrap_or_default();
        'outer: for m in &monomials {
            let in_border = border_index.contains_key(m);
            let i0 = m.first_var().unwrap();
            for j in 0..n {
                let Some(q) = m.div_var(j) else { continue };
                if (in_border && standard_prev.contains(&q)) || (!in_border && j == i0) {
                    continue;
                }
                phi(&mut acc, m, &Rational::ONE);
                lift(&mut acc, j, &prev_nf[&q], &minus_one);
                let row = acc.take();
                if !row.is_empty() {
                    ech.insert(&row);
                    if ech.rank() == width {
                        break 'outer;
                    }
                }
            }
        }
    }
    for g in gens {
        if ech.rank() == width {
            break;
        }
        for (m, c) in g.terms() {
            phi(&mut acc, m, c);
        }
        let row = acc.take();
        if !row.is_empty() {
            ech.insert(&row);
        }
    }
    ech.make_reduced();

    let mut basis = Vec::new();
    let mut basis_of_col = vec![u32::MAX; width];
    for (c, m) in border.iter().enumerate() {
        if !ech.is_pivot(c) {
            basis_of_col[c] = basis.len() as u32;
            basis.push(*m);
        }
    }
    let border_nf: Vec<SparseVec> = (0..width)
        .map(|c| match ech.row(c) {
            None => vec![(basis_of_col[c], Rational::ONE)],
            Some(row) => row
                .iter()
                .skip(1)
                .map(|(col, x)| (basis_of_col[*col as usize], -x.clone()))
                .collect(),
        })
        .collect();

    let mut nf = HashMap::with_capacity(monomials.len());
    if !basis.is_empty() {
        let mut acc = Accumulator::new(basis.len());
        for m in &monomials {
            let v = match border_index.get(m) {
                Some(&c) => border_nf[c as usize].clone(),
                None => {
                    let i0 = m.first_var().unwrap();
                    for (b, c) in &prev_nf[&m.div_var(i0).unwrap()] {
                        acc.add_scaled(&border_nf[times[i0][*b as usize] as usize], c);
                    }
                    acc.take()
                }
            };
            nf.insert(*m, v);
        }
    }
    let slice = Slice {
        basis,
        border_index,
        border_nf,
        times,
    };
    (slice, nf)
}

/// Outcome of checking one degree of a candidate basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub d: usize,
    pub expected: usize,
    pub count: usize,
    pub rank: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    #[serde(flatten)]
    pub family: IdealFamily,
    pub verdict: bool,
    pub elements: usize,
    pub hilbert: Vec<usize>,
    pub per_degree: Vec<DegreeCheck>,
    pub failures: Vec<String>,
}

/// Checks that `items` (in family order) descend to a basis of the quotient.
pub fn verify_basis<L: fmt::Display + Sync>(
    q: &GradedQuotient,
    items: &[(L, Poly)],
) -> BasisReport {
    let mut failures = Vec::new();
    let projected: Vec<std::result::Result<(usize, SparseVec), String>> = items
        .par_iter()
        .map(|(label, p)| {
            let Some(d) = p.degree() else {
                return Err(format!("{label} is zero"));
            };
            if !p.is_homogeneous() {
                return Err(format!("{label} is not homogeneous"));
            }
            q.project_homogeneous(p, d)
                .map(|v| (d, v))
                .map_err(|e| format!("{label}: {e}"))
        })
        .collect();

    let mut by_degree: BTreeMap<usize, Vec<(usize, &SparseVec)>> = BTreeMap::new();
    for (i, r) in projected.iter().enumerate() {
        match r {
            Ok((d, v)) => by_degree.entry(*d).or_default().push((i, v)),
            Err(msg) => failures.push(msg.clone()),
        }
    }
    let top = by_degree
        .keys()
        .next_back()
        .map_or(0, |&d| d + 1)
        .max(q.hilbert().len());
    let mut per_degree = Vec::with_capacity(top);
    for d in 0..top {
        let expected = q.dim_in_degree(d);
        let members = by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[]);
        let mut ech = Echelon::new(expected);
        let mut first_dependent = None;
        for (i, v) in members {
            if ech.insert(v).is_none() && first_dependent.is_none() {
                first_dependent = Some(*i);
            }
        }
        if let Some(i) = first_dependent {
            failures.push(format!(
                "degree {d}: {} depends on earlier elements",
                items[i].0
            ));
        }
        if members.len() != expected {
            failures.push(format!(
                "degree {d}: {} elements for a piece of dimension {expected}",
                members.len()
            ));
        }
        per_degree.push(DegreeCheck {
            d,
            expected,
            count: members.len(),
            rank: ech.rank(),
            ok: members.len() == expected && ech.rank() == expected,
        });
    }
    let verdict = failures.is_empty() && per_degree.iter().all(|c| c.ok);
    BasisReport {
        family: q.family().clone(),
        verdict,
        elements: items.len(),
        hilbert: q.hilbert().to_vec(),
        per_degree,
        failures,
    }
}

pub fn labeled(members: &[FamilyMember]) -> Vec<(FamilyLabel, Poly)> {
    members
        .iter()
        .map(|m| (m.label.clone(), m.poly.clone()))
        .collect()
}

/// Builds a family and its ring, then verifies the basis property.
pub fn verify_family(kind: &FamilyKind) -> Result<BasisReport> {
    let q = GradedQuotient::of_family(&IdealFamily::for_family(kind)?)?;
    let members = build_basis_family(kind)?;
    Ok(verify_basis(&q, &labeled(&members)))
}

/// Label of an element `x_n^power · F` of the recursive family, with `F`
/// from the family of `child` in one fewer variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionLabel {
    pub power: usize,
    pub child: Partition,
    pub inner: FamilyLabel,
}

impl fmt::Display for RecursionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.inner),
            1 => write!(f, "x_n*({})", self.inner),
            p => write!(f, "x_n^{p}*({})", self.inner),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RecursionMember {
    pub label: RecursionLabel,
    pub degree: usize,
    pub poly: Poly,
}

/// `B_ν` for a possibly empty `ν`; the empty family is `{1}`.
fn gp_family(nu: &Partition) -> Result<Vec<FamilyMember>> {
    if nu.is_empty() {
        return Ok(vec![FamilyMember {
            label: FamilyLabel {
                shape: Partition::empty(),
                s: Tableau::empty(),
                t: Tableau::empty(),
                exponents: Vec::new(),
                degree: 0,
            },
            poly: Poly::one(0),
        }]);
    }
    build_basis_family(&FamilyKind::GarsiaProcesi { mu: nu.clone() })
}

/// `C_μ = ⋃_{i=1}^{μ'_1} x_n^{i−1} B_{μ^{(i)}}`, ordered by degree, then `i`,
/// then the order of each `B_{μ^{(i)}}`.
pub fn gp_recursion_family(mu: &Partition) -> Result<Vec<RecursionMember>> {
    if mu.is_empty() {
        return Err(Error::InvalidParameter("μ must be nonempty".into()));
    }
    let n = mu.size();
    let xn = Poly::var(n, n - 1);
    let mut out = Vec::new();
    for i in 1..=mu.len() {
        let child = mu.mu_child(i)?;
        for m in gp_family(&child)? {
            let poly = &m.poly.with_nvars(n)? * &xn.pow(i - 1);
            out.push(RecursionMember {
                degree: m.label.degree + i - 1,
                label: RecursionLabel {
                    power: i - 1,
                    child: child.clone(),
                    inner: m.label,
                },
                poly,
            });
        }
    }
    out.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then(a.label.power.cmp(&b.label.power))
            .then_with(|| family_cmp(&a.label.inner, &b.label.inner))
    });
    Ok(out)
}

/// Scaling applied to every `F_T^S` before forming a transition matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `F_T^S` exactly as built by the symmetrizer.
    #[default]
    Raw,
    /// `F_T^S` divided by [`row_stabilizer_order`] of `S`.
    Stabilizer,
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Normalization::Raw),
            "stabilizer" => Ok(Normalization::Stabilizer),
            _ => Err(Error::Parse(format!("unknown normalization `{s}`"))),
        }
    }
}

fn normalized(p: &Poly, s: &Tableau, norm: Normalization) -> Result<Poly> {
    Ok(match norm {
        Normalization::Raw => p.clone(),
        Normalization::Stabilizer => {
            p.scale(&Rational::from_bigint(row_stabilizer_order(s)?).recip())
        }
    })
}

/// Transition matrix from `B_μ^{(d)}` to `C_μ^{(d)}` in `R_μ`.
///
/// Columns follow [`gp_recursion_family`]. Rows are matched to columns by
/// deleting `n` from `T`: scanning rows in family order, each takes the
/// first unused column whose `T` is `T∖n`, and rows are sorted by the
/// column they took (unmatched rows go last, in family order). For two-row
/// `μ` this is the last letter order on `T`.
#[derive(Clone, Debug)]
pub struct Transition {
    pub mu: Partition,
    pub degree: usize,
    pub normalization: Normalization,
    pub rows: Vec<FamilyLabel>,
    pub columns: Vec<RecursionLabel>,
    /// `matrix[i][j]` is the coefficient of column element `j` in row element `i`.
    pub matrix: Matrix,
}

pub fn transition_matrix(mu: &Partition, d: usize, norm: Normalization) -> Result<Transition> {
    let q = GradedQuotient::of_family(&IdealFamily::Rmu { mu: mu.clone() })?;
    transition_matrix_in(&q, mu, d, norm)
}

/// As [`transition_matrix`], reusing an already built `R_μ`.
pub fn transition_matrix_in(
    q: &GradedQuotient,
    mu: &Partition,
    d: usize,
    norm: Normalization,
) -> Result<Transition> {
    if q.family() != &(IdealFamily::Rmu { mu: mu.clone() }) {
        return Err(Error::InvalidParameter(format!(
            "quotient is {}, not R_({mu})",
            q.family()
        )));
    }
    let rows: Vec<FamilyMember> =
        build_basis_family(&FamilyKind::GarsiaProcesi { mu: mu.clone() })?
            .into_iter()
            .filter(|m| m.label.degree == d)
            .collect();
    let cols: Vec<RecursionMember> = gp_recursion_family(mu)?
        .into_iter()
        .filter(|m| m.degree == d)
        .collect();
    let width = q.dim_in_degree(d);
    let dense = |p: &Poly| -> Result<Vec<Rational>> {
        Ok(sparse_to_dense(&q.project_homogeneous(p, d)?, width))
    };
    let n = mu.size();
    let mut rows = rows;
    let mut taken = vec![false; cols.len()];
    let mut slot = Vec::with_capacity(rows.len());
    for r in &rows {
        let shrunk = r.label.t.remove_entry(n)?;
        let j = (0..cols.len()).find(|&j| !taken[j] && cols[j].label.inner.t == shrunk);
        if let Some(j) = j {
            taken[j] = true;
        }
        slot.push(j.unwrap_or(usize::MAX));
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| slot[i]);
    let mut sorted: Vec<Option<FamilyMember>> = rows.drain(..).map(Some).collect();
    let rows: Vec<FamilyMember> = order.iter().map(|&i| sorted[i].take().unwrap()).collect();

    let cmat = Matrix::from_rows(
        cols.iter()
            .map(|c| dense(&normalized(&c.poly, &c.label.inner.s, norm)?))
            .collect::<Result<_>>()?,
    );
    let mut entries = Vec::with_capacity(rows.len());
    for r in &rows {
        let target = dense(&normalized(&r.poly, &r.label.s, norm)?)?;
        let x = if cols.is_empty() {
            Some(Vec::new())
        } else {
            cmat.solve_left(&target)
        };
        let x = x.ok_or_else(|| {
            Error::Inconsistent(format!(
                "{} is outside the span of C_μ in degree {d}",
                r.label
            ))
        })?;
        entries.push(x);
    }
    let matrix = if entries.is_empty() {
        Matrix::zeros(0, cols.len())
    } else {
        Matrix::from_rows(entries)
    };
    Ok(Transition {
        mu: mu.clone(),
        degree: d,
        normalization: norm,
        rows: rows.into_iter().map(|m| m.label).collect(),
        columns: cols.into_iter().map(|m| m.label).collect(),
        matrix,
    })
}

/// Finds an upper triangular `A` with `MA` lower triangular and nonzero
/// diagonal, or `None` if there is none.
///
/// Column `j` of `MA` is a combination of columns `0..=j` of `M`; it must
/// vanish in rows `0..j` and not in row `j`. Such a combination exists iff
/// some null vector of `M[0..j, 0..=j]` does not vanish in row `j`.
pub fn almost_lower_triangular(m: &Matrix) -> Option<Matrix> {
    let n = m.nrows();
    if m.ncols() != n {
        return None;
    }
    let mut a = Matrix::zeros(n, n);
    for j in 0..n {
        let kernel = if j == 0 {
            vec![vec![Rational::ONE]]
        } else {
            m.submatrix(0..j, 0..j + 1).null_space()
        };
        // Prefer the null vector normalized at column j.
        let mut candidates: Vec<&Vec<Rational>> = kernel.iter().filter(|v| v[j].is_one()).collect();
        candidates.extend(kernel.iter().filter(|v| !v[j].is_one()));
        let row_j = m.row(j);
        let pick = candidates.into_iter().find(|v| {
            let s: Rational = v.iter().zip(row_j).map(|(x, y)| x * y).sum();
            !s.is_zero()
        })?;
        for (i, x) in pick.iter().enumerate() {
            a[(i, j)] = x.clone();
        }
    }
    Some(a)
}

/// Dense rows of a sparse coordinate list, padded to `width`.
pub fn coordinate_matrix(vectors: &[SparseVec], width: usize) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zeros(0, width);
    }
    Matrix::from_rows(vectors.iter().map(|v| sparse_to_dense(v, width)).collect())
}
