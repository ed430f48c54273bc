//! Row insertion and the RSK bijection, plus the tuple encoding that
//! pairs `(S, T, i)` with semistandard tableaux of bounded entries.

use super::{descent_stats, destandardize, Tableau, Word};
use crate::error::{Error, Result};

/// Row-inserts `x` into `rows` (bottom row first); returns the row that
/// received a new cell.
fn insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = std::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Insertion tableau `P` and recording tableau `Q`.
pub fn rsk(w: &Word) -> Result<(Tableau, Tableau)> {
    if w.letters().contains(&0) {
        return Err(Error::InvalidParameter(
            "word letters must be positive".into(),
        ));
    }
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.letters().iter().enumerate() {
        let row = insert(&mut p, x);
        if row == q.len() {
            q.push(Vec::new());
        }
        q[row].push(step + 1);
    }
    Ok((Tableau::new(p)?, Tableau::new(q)?))
}

pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            p.shape(),
            q.shape()
        )));
    }
    if !p.is_semistandard() || !q.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut rows = p.rows().to_vec();
    let pos = q.positions();
    let n = q.size();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        let (r, _) = pos[step];
        let mut x = rows[r].pop().expect("cell present");
        if rows[r].is_empty() {
            rows.pop();
        }
        for below in (0..r).rev() {
            let row = &mut rows[below];
            let p = row
                .iter()
                .rposition(|&y| y < x)
                .expect("bumped entry exists");
            x = std::mem::replace(&mut row[p], x);
        }
        word[step - 1] = x;
    }
    Ok(Word(word))
}

/// Sends `(S, T, i)` with `Σ i < k − des(S)` to `(R, T)`, where `R` adds the
/// running sums of `i` to the destandardization of `S`.
pub fn raise_destandardized(
    s: &Tableau,
    t: &Tableau,
    incr: &[usize],
    k: usize,
) -> Result<(Tableau, Tableau)> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            s.shape(),
            t.shape()
        )));
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = s.size();
    if incr.len() != n {
        return Err(Error::InvalidParameter(format!(
            "expected {n} increments, got {}",
            incr.len()
        )));
    }
    let des = descent_stats(s)?.des;
    let total: usize = incr.iter().sum();
    if total + des >= k {
        return Err(Error::InvalidParameter(format!(
            "increment sum {total} must be below k - des(S) = {}",
            k as i64 - des as i64
        )));
    }
    let base = destandardize(s)?;
    let mut shift = vec![0; n + 1];
    for j in 1..=n {
        shift[j] = shift[j - 1] + incr[j - 1];
    }
    let pos = s.positions();
    let mut rows = base.rows().to_vec();
    for j in 1..=n {
        let (r, c) = pos[j];
        rows[r][c] += shift[j];
    }
    Ok((Tableau::new(rows)?, t.clone()))
}

/// Inverse of [`raise_destandardized`]: recovers `(S, i)` from `R`.
pub fn lower_destandardized(r: &Tableau, k: usize) -> Result<(Tableau, Vec<usize>)> {
    if !r.is_semistandard() {
        return Err(Error::InvalidParameter("R must be semistandard".into()));
    }
    if r.rows().iter().flatten().any(|&x| x > k) {
        return Err(Error::InvalidParameter(format!("R has an entry above {k}")));
    }
    let s = r.standardize();
    let base = destandardize(&s)?;
    let pos = s.positions();
    let n = s.size();
    let mut prev = 0;
    let mut incr = Vec::with_capacity(n);
    for &(row, col) in pos.iter().skip(1) {
        let c = r.rows()[row][col] - base.rows()[row][col];
        incr.push(
            c.checked_sub(prev)
                .ok_or_else(|| Error::Inconsistent("running sums must be nondecreasing".into()))?,
        );
        prev = c;
    }
    Ok((s, incr))
}
