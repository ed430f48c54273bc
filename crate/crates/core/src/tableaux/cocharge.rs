//! Cocharge labels of words with partition content, via the standard
//! subword decomposition.

use super::{Tableau, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochargeLabeling {
    /// One label per letter position.
    pub labels: Vec<usize>,
    /// 0-based index of the standard subword owning each position.
    pub subword_index: Vec<usize>,
    subwords: Vec<Vec<usize>>,
}

impl CochargeLabeling {
    pub fn cocharge(&self) -> usize {
        self.labels.iter().sum()
    }

    /// Positions (1-based) of each standard subword, listed by letter
    /// `1, 2, …`.
    pub fn subwords(&self) -> &[Vec<usize>] {
        &self.subwords
    }
}

/// Labels of a single standard subword, given its positions in letter
/// order: letter 1 gets 0, and each next letter keeps the label when it
/// lies to the right of its predecessor and increments it otherwise.
fn label_standard(positions: &[usize]) -> Vec<usize> {
    let mut labels = Vec::with_capacity(positions.len());
    let mut cur = 0;
    for (k, &p) in positions.iter().enumerate() {
        if k > 0 && p < positions[k - 1] {
            cur += 1;
        }
        labels.push(cur);
    }
    labels
}

pub fn cocharge_labels(w: &Word) -> Result<CochargeLabeling> {
    let letters = w.letters();
    let content = w.content();
    if content.windows(2).any(|c| c[0] < c[1]) || letters.contains(&0) {
        return Err(Error::NonPartitionContent(content));
    }
    let n = letters.len();
    let mut used = vec![false; n];
    let mut remaining = content.clone();
    let mut labels = vec![0; n];
    let mut subword_index = vec![0; n];
    let mut subwords = Vec::new();

    while remaining.first().is_some_and(|&m| m > 0) {
        let len = remaining.iter().take_while(|&&m| m > 0).count();
        let mut positions = Vec::with_capacity(len);
        let mut prev = n;
        for letter in 1..=len {
            // Rightmost unused `letter` strictly left of `prev`, else the
            // rightmost one overall.
            let pick = (0..prev)
                .rev()
                .find(|&p| !used[p] && letters[p] == letter)
                .or_else(|| (0..n).rev().find(|&p| !used[p] && letters[p] == letter))
                .expect("letter present by content");
            used[pick] = true;
            positions.push(pick);
            prev = pick;
            remaining[letter - 1] -= 1;
        }
        for (&p, l) in positions.iter().zip(label_standard(&positions)) {
            labels[p] = l;
            subword_index[p] = subwords.len();
        }
        subwords.push(positions.iter().map(|p| p + 1).collect());
    }
    Ok(CochargeLabeling {
        labels,
        subword_index,
        subwords,
    })
}

pub fn cocharge(w: &Word) -> Result<usize> {
    Ok(cocharge_labels(w)?.cocharge())
}

/// Cocharge label of each cell of `s`, laid out as a tableau of the same
/// shape (entries are labels, possibly zero).
pub fn cocharge_tableau(s: &Tableau) -> Result<Vec<Vec<usize>>> {
    let lab = cocharge_labels(&s.reading_word())?;
    let mut out: Vec<Vec<usize>> = s.rows().iter().map(|r| vec![0; r.len()]).collect();
    for ((i, j), l) in s.reading_cells().into_iter().zip(lab.labels) {
        out[i][j] = l;
    }
    Ok(out)
}

pub fn tableau_cocharge(s: &Tableau) -> Result<usize> {
    cocharge(&s.reading_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::test_util::young;
    use crate::tableaux::{descent_stats, Partition};

    #[test]
    fn standard_word() {
        let lab = cocharge_labels(&Word(vec![7, 3, 4, 6, 1, 2, 5])).unwrap();
        assert_eq!(lab.labels, vec![3, 1, 1, 2, 0, 0, 1]);
        assert_eq!(lab.cocharge(), 8);
        assert_eq!(lab.subwords().len(), 1);
    }

    #[test]
    fn decreasing_word() {
        for n in 1..8 {
            let w = Word((1..=n).rev().collect());
            let lab = cocharge_labels(&w).unwrap();
            assert_eq!(lab.labels, (0..n).rev().collect::<Vec<_>>());
            assert_eq!(lab.cocharge(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn subword_decomposition() {
        let w = Word(vec![4, 2, 2, 3, 3, 4, 1, 1, 1, 2, 3]);
        let lab = cocharge_labels(&w).unwrap();
        assert_eq!(
            lab.subwords(),
            &[vec![9, 3, 11, 6], vec![8, 2, 5, 1], vec![7, 10, 4]]
        );
        assert_eq!(lab.cocharge(), 9);
        assert_eq!(lab.subword_index, vec![1, 1, 0, 2, 1, 0, 2, 1, 0, 2, 0]);
    }

    #[test]
    fn rejects_non_partition_content() {
        assert_eq!(
            cocharge_labels(&Word(vec![2, 2, 1])),
            Err(Error::NonPartitionContent(vec![1, 2]))
        );
        assert!(cocharge_labels(&Word(vec![1, 3])).is_err());
        assert!(cocharge_labels(&Word(vec![])).is_ok());
    }

    #[test]
    fn standard_cocharge_matches_descents() {
        // For standard tableaux the label jumps happen exactly at descents.
        for n in 1..=6 {
            for lam in Partition::all(n) {
                for s in crate::tableaux::Tableau::standard(&lam) {
                    let st = descent_stats(&s).unwrap();
                    let cc = tableau_cocharge(&s).unwrap();
                    assert_eq!(cc, st.descents.iter().map(|d| n - d).sum::<usize>());
                    let cells = cocharge_tableau(&s).unwrap();
                    let max = cells.iter().flatten().max().copied().unwrap_or(0);
                    assert_eq!(max, st.des);
                }
            }
        }
    }

    #[test]
    fn cells_follow_reading_order() {
        let s = young("7/346/125");
        assert_eq!(
            cocharge_tableau(&s).unwrap(),
            vec![vec![0, 0, 1], vec![1, 1, 2], vec![3]]
        );
    }
}
