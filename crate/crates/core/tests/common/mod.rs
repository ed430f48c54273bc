#![allow(dead_code)]

use higher_specht::polyring::Permutation;
use higher_specht::{Partition, Tableau};
use rand::seq::SliceRandom;
use rand::Rng;

/// Compact notation, top row first, single-digit entries: `"7/346/125"`.
pub fn young(s: &str) -> Tableau {
    let rows = s
        .split('/')
        .rev()
        .map(|r| {
            r.chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        })
        .collect();
    Tableau::new(rows).unwrap()
}

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

/// `ωT`: replaces every entry `x` by `ω(x)`.
pub fn act(omega: &Permutation, t: &Tableau) -> Tableau {
    t.map_entries(|x| omega.apply(x - 1) + 1)
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn random_partition<R: Rng>(n: usize, rng: &mut R) -> Partition {
    Partition::all(n).choose(rng).unwrap().clone()
}

/// A uniformly random bijective filling of `shape`.
pub fn random_filling<R: Rng>(shape: &Partition, rng: &mut R) -> Tableau {
    let mut v: Vec<usize> = (1..=shape.size()).collect();
    v.shuffle(rng);
    Tableau::with_shape(shape, &v)
}

/// A random semistandard tableau of partition content, with its shape
/// chosen among those admitting one.
pub fn random_semistandard<R: Rng>(n: usize, rng: &mut R) -> Tableau {
    loop {
        let content = random_partition(n, rng);
        let lam = random_partition(n, rng);
        let all = Tableau::semistandard(&lam, content.parts());
        if let Some(s) = all.choose(rng) {
            return s.clone();
        }
    }
}

/// Every semistandard tableau of partition content and size `n`.
pub fn all_semistandard(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for lam in Partition::all(n) {
        for content in Partition::all(n) {
            out.extend(Tableau::semistandard(&lam, content.parts()));
        }
    }
    out
}

/// All Garnir parameters `(a, b, row)` of a shape, columns and rows 1-based.
pub fn garnir_params(shape: &Partition) -> Vec<(usize, usize, usize)> {
    let conj = shape.conjugate();
    let mut out = Vec::new();
    for b in 2..=conj.len() {
        for a in 1..b {
            for row in 1..=conj.part(b - 1) {
                out.push((a, b, row));
            }
        }
    }
    out
}

/// The unique semistandard tableau of a two-row (or one-row) shape and
/// content, if any.
pub fn unique_semistandard(shape: &[usize], content: &Partition) -> Option<Tableau> {
    let shape = Partition::from_composition(shape);
    let mut all = Tableau::semistandard(&shape, content.parts());
    assert!(
        all.len() <= 1,
        "content {content} fills {shape} in several ways"
    );
    all.pop()
}

/// `F_T^S − α x_n F_{T'}^{S''} − β Σ_j F_{T'_j}^{S'}` for a two-row `μ`,
/// `S` of shape `(n−d, d)` and a standard `T` with `n` in its top row.
/// `None` when the identity involves a tableau `S'` that does not exist.
pub fn two_row_residual(
    mu: &Partition,
    d: usize,
    t: &Tableau,
) -> Option<higher_specht::polyring::Poly> {
    use higher_specht::polyring::Poly;
    use higher_specht::specht::higher_specht_of;
    use higher_specht::Rational;

    let n = mu.size();
    assert!(d >= 1 && t.rows().len() == 2 && *t.rows()[1].last().unwrap() == n);
    let s = unique_semistandard(&[n - d, d], mu)?;
    let s2 = unique_semistandard(&[n - d, d - 1], &mu.mu_child(2).ok()?)?;
    let den = (n - 2 * d + 1) as i64;
    let alpha = &Rational::new(d as i64, den) + &Rational::from(d);
    let beta = Rational::new((n - d) as i64, den);

    let t1 = t.remove_entry(n).unwrap();
    let xn = Poly::var(n, n - 1);
    let lifted = |p: Poly| p.with_nvars(n).unwrap();
    let mut residual = higher_specht_of(&s, t).unwrap();
    let f2 = &lifted(higher_specht_of(&s2, &t1).unwrap()) * &xn;
    residual.add_scaled(&f2, &-&alpha);

    let bottom = &t1.rows()[0];
    let top: &[usize] = t1.rows().get(1).map_or(&[], |r| r.as_slice());
    if n - d > d {
        let s1 = unique_semistandard(&[n - d - 1, d], &mu.mu_child(1).ok()?)?;
        for &j in &bottom[d..n - d] {
            let new_bottom: Vec<usize> = bottom.iter().copied().filter(|&x| x != j).collect();
            let mut new_top = top.to_vec();
            new_top.push(j);
            let tj = Tableau::new(vec![new_bottom, new_top]).unwrap();
            let f = lifted(higher_specht_of(&s1, &tj).unwrap());
            residual.add_scaled(&f, &-&beta);
        }
    }
    Some(residual)
}
