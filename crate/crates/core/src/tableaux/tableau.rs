use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Partition;
use crate::error::{Error, Result};

/// A sequence of positive letters; positions are 1-based in the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities `(m_1, m_2, …)` up to the largest letter.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in &self.0 {
            c[x - 1] += 1;
        }
        c
    }

    pub fn is_standard_content(&self) -> bool {
        self.content().iter().all(|&m| m == 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// A filling of a Young diagram in French convention: `rows[0]` is the
/// bottom row, and each row is listed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Standard,
    Semistandard,
    /// Every bijective filling with `1..=n`.
    AllBijective,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidPartition("empty row in tableau".into()));
        }
        Partition::new(rows.iter().map(|r| r.len()).collect())?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Parse("tableau entries must be positive".into()));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// `(row, col, entry)` for every cell, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &x)| (i, j, x)))
    }

    /// Columns, each listed bottom to top.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Tableau {
        Tableau {
            rows: self.columns(),
        }
    }

    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    /// Top row first, each row left to right.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Cells in reading-word order, matching [`Tableau::reading_word`].
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, r)| (0..r.len()).map(move |j| (i, j)))
            .collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Contains each of `1..=n` exactly once.
    pub fn is_bijective(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        self.is_bijective() && self.is_semistandard()
    }

    /// `(row, col)` of each entry of a bijective filling, indexed by entry.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.size() + 1];
        for (i, j, x) in self.cells() {
            pos[x] = (i, j);
        }
        pos
    }

    /// Replaces every entry `x` by `f(x)`.
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect(),
        }
    }

    /// Tableau with the same shape and the given entries in row order
    /// (bottom row first).
    pub fn with_shape(shape: &Partition, entries: &[usize]) -> Tableau {
        let mut rows = Vec::with_capacity(shape.len());
        let mut it = entries.iter().copied();
        for &len in shape.parts() {
            rows.push(it.by_ref().take(len).collect());
        }
        Tableau { rows }
    }

    /// Removes the cell holding `entry`; it must be at the end of its row
    /// and leave a partition shape.
    pub fn remove_entry(&self, entry: usize) -> Result<Tableau> {
        let mut rows = self.rows.clone();
        let (i, j) = self
            .cells()
            .find(|&(_, _, x)| x == entry)
            .map(|(i, j, _)| (i, j))
            .ok_or_else(|| Error::InvalidParameter(format!("entry {entry} not present")))?;
        rows[i].remove(j);
        rows.retain(|r| !r.is_empty());
        Tableau::new(rows)
    }

    /// Standardization of a semistandard tableau: equal letters are numbered
    /// left to right.
    pub fn standardize(&self) -> Tableau {
        let mut cells: Vec<(usize, usize, usize)> = self.cells().collect();
        cells.sort_by_key(|&(i, j, x)| (x, j, i));
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (k, (i, j, _)) in cells.into_iter().enumerate() {
            rows[i][j] = k + 1;
        }
        Tableau { rows }
    }

    /// All fillings of `shape` of the requested flavor, sorted by reading word.
    /// `content` is ignored for [`Flavor::AllBijective`]; for the standard
    /// flavor it must be all ones (or empty, meaning `(1^n)`).
    pub fn enumerate(shape: &Partition, content: &[usize], flavor: Flavor) -> Vec<Tableau> {
        let n = shape.size();
        let mut out = match flavor {
            Flavor::Standard => {
                if !content.is_empty() && (content.len() != n || content.iter().any(|&m| m != 1)) {
                    return Vec::new();
                }
                semistandard(shape, &vec![1; n])
            }
            Flavor::Semistandard => {
                if content.iter().sum::<usize>() != n {
                    return Vec::new();
                }
                semistandard(shape, content)
            }
            Flavor::AllBijective => all_fillings(shape),
        };
        out.sort_by_cached_key(|t| t.reading_word());
        out
    }

    pub fn standard(shape: &Partition) -> Vec<Tableau> {
        Self::enumerate(shape, &[], Flavor::Standard)
    }

    pub fn semistandard(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
        Self::enumerate(shape, content, Flavor::Semistandard)
    }

    /// Single-row tableau `1 2 … n`.
    pub fn row_of(n: usize) -> Tableau {
        if n == 0 {
            return Tableau::empty();
        }
        Tableau {
            rows: vec![(1..=n).collect()],
        }
    }
}

/// Fills letters `1, 2, …` in turn, each as a horizontal strip.
fn semistandard(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    #[allow(clippy::too_many_arguments)]
    fn strips(
        shape: &Partition,
        cur: &[usize],
        letter: usize,
        remaining: usize,
        row: usize,
        next: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        content: &[usize],
        out: &mut Vec<Tableau>,
    ) {
        if row == shape.len() {
            if remaining == 0 {
                place(shape, next, letter + 1, rows, content, out);
            }
            return;
        }
        // A horizontal strip may extend row `row` up to the old length of the row below.
        let cap = if row == 0 {
            shape.part(0)
        } else {
            cur[row - 1].min(shape.part(row))
        };
        let base = cur[row];
        let max_add = cap.saturating_sub(base).min(remaining);
        for add in (0..=max_add).rev() {
            next[row] = base + add;
            for _ in 0..add {
                rows[row].push(letter);
            }
            strips(
                shape,
                cur,
                letter,
                remaining - add,
                row + 1,
                next,
                rows,
                content,
                out,
            );
            for _ in 0..add {
                rows[row].pop();
            }
        }
        next[row] = base;
    }

    fn place(
        shape: &Partition,
        cur: &[usize],
        letter: usize,
        rows: &mut Vec<Vec<usize>>,
        content: &[usize],
        out: &mut Vec<Tableau>,
    ) {
        if letter > content.len() {
            if cur.iter().zip(shape.parts()).all(|(a, b)| a == b) {
                out.push(Tableau { rows: rows.clone() });
            }
            return;
        }
        let mut next = cur.to_vec();
        strips(
            shape,
            cur,
            letter,
            content[letter - 1],
            0,
            &mut next,
            rows,
            content,
            out,
        );
    }

    let mut out = Vec::new();
    if content.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let mut rows = vec![Vec::new(); shape.len()];
    place(
        shape,
        &vec![0; shape.len()],
        1,
        &mut rows,
        content,
        &mut out,
    );
    out
}

fn all_fillings(shape: &Partition) -> Vec<Tableau> {
    use itertools::Itertools;
    let n = shape.size();
    (1..=n)
        .permutations(n)
        .map(|p| Tableau::with_shape(shape, &p))
        .collect()
}

/// Descent set, descent count and major index of a standard tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    pub descents: Vec<usize>,
    pub des: usize,
    pub maj: usize,
}

/// `i` is a descent when `i + 1` sits in a strictly higher row than `i`.
pub fn descent_stats(t: &Tableau) -> Result<DescentStats> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let pos = t.positions();
    let descents: Vec<usize> = (1..t.size()).filter(|&i| pos[i + 1].0 > pos[i].0).collect();
    Ok(DescentStats {
        des: descents.len(),
        maj: descents.iter().sum(),
        descents,
    })
}

/// Descent count of a semistandard tableau, through its standardization.
pub fn des(t: &Tableau) -> Result<usize> {
    if !t.is_semistandard() {
        return Err(Error::NotStandard);
    }
    Ok(descent_stats(&t.standardize())?.des)
}

/// Replaces the runs between consecutive descents by `1, 2, …`.
pub fn destandardize(s: &Tableau) -> Result<Tableau> {
    let stats = descent_stats(s)?;
    let mut value = vec![0; s.size() + 1];
    let mut cur = 1;
    let mut d = stats.descents.iter().peekable();
    for (i, v) in value.iter_mut().enumerate().skip(1) {
        *v = cur;
        if d.peek() == Some(&&i) {
            d.next();
            cur += 1;
        }
    }
    Ok(s.map_entries(|x| value[x]))
}

/// Last letter order on standard tableaux of one shape: `t1 < t2` when the
/// largest entry in different cells lies in a lower row of `t1`.
pub fn last_letter_cmp(t1: &Tableau, t2: &Tableau) -> Result<Ordering> {
    if t1.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            t1.shape(),
            t2.shape()
        )));
    }
    if !t1.is_standard() || !t2.is_standard() {
        return Err(Error::NotStandard);
    }
    let (p1, p2) = (t1.positions(), t2.positions());
    for m in (1..=t1.size()).rev() {
        if p1[m] != p2[m] {
            return Ok(p1[m].0.cmp(&p2[m].0));
        }
    }
    Ok(Ordering::Equal)
}

/// Sorts standard tableaux of one shape increasingly in last letter order.
pub fn sort_last_letter(ts: &mut [Tableau]) {
    ts.sort_by(|a, b| last_letter_cmp(a, b).expect("same-shape standard tableaux"));
}

impl fmt::Display for Tableau {
    /// Rows bottom to top separated by `/`, entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("invalid tableau `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Tableau::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::test_util::young;

    #[test]
    fn reading_words() {
        assert_eq!(
            young("7/346/125").reading_word(),
            Word(vec![7, 3, 4, 6, 1, 2, 5])
        );
        assert_eq!(young("123").reading_word(), Word(vec![1, 2, 3]));
        let s: Tableau = "1 1 1 2 3/2 2 3 3 4/4".parse().unwrap();
        assert_eq!(
            s.reading_word(),
            Word(vec![4, 2, 2, 3, 3, 4, 1, 1, 1, 2, 3])
        );
        assert_eq!(s.to_string(), "1 1 1 2 3/2 2 3 3 4/4");
    }

    #[test]
    fn parse_rejects_bad_shapes() {
        assert!("1/2 3".parse::<Tableau>().is_err());
        assert!("1 a".parse::<Tableau>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(Tableau::standard(&p("2,1")).len(), 2);
        let one_row = Tableau::semistandard(&p("3"), &[2, 1]);
        assert_eq!(one_row, vec![young("112")]);
        let total: usize = Partition::all(4)
            .iter()
            .map(|l| Tableau::standard(l).len().pow(2))
            .sum();
        assert_eq!(total, 24);
        assert_eq!(
            Tableau::enumerate(&p("2,1"), &[], Flavor::AllBijective).len(),
            6
        );
        assert!(Tableau::semistandard(&p("2,1"), &[3]).is_empty());
        assert!(Tableau::semistandard(&p("2"), &[1]).is_empty());
    }

    #[test]
    fn enumeration_matches_hook_formula_and_is_valid() {
        for n in 1..=7 {
            for lam in Partition::all(n) {
                let syt = Tableau::standard(&lam);
                assert_eq!(num_bigint::BigInt::from(syt.len()), lam.num_standard());
                assert!(syt.iter().all(|t| t.is_standard() && t.shape() == lam));
                let mut dedup = syt.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), syt.len());
            }
        }
    }

    #[test]
    fn descents() {
        let s = young("5/247/136");
        let st = descent_stats(&s).unwrap();
        assert_eq!(st.descents, vec![1, 3, 4, 6]);
        assert_eq!((st.maj, st.des), (14, 4));
        let row = descent_stats(&young("1234")).unwrap();
        assert_eq!((row.maj, row.des), (0, 0));
        let col = descent_stats(&"1/2/3/4".parse().unwrap()).unwrap();
        assert_eq!((col.maj, col.des), (6, 3));
        assert_eq!(descent_stats(&young("2/11")), Err(Error::NotStandard));
    }

    #[test]
    fn destandardization() {
        let s = young("6/378/1245");
        assert_eq!(destandardize(&s).unwrap(), young("3/233/1122"));
        assert_eq!(destandardize(&young("1234")).unwrap(), young("1111"));
    }

    #[test]
    fn destandardize_round_trip() {
        for lam in Partition::all(6) {
            for s in Tableau::standard(&lam) {
                let d = destandardize(&s).unwrap();
                assert!(d.is_semistandard());
                let stats = descent_stats(&s).unwrap();
                assert_eq!(d.rows().iter().flatten().max(), Some(&(stats.des + 1)));
                assert_eq!(d.standardize(), s);
            }
        }
    }

    #[test]
    fn last_letter_order_shape_42() {
        let p: Partition = "4,2".parse().unwrap();
        let mut syt = Tableau::standard(&p);
        sort_last_letter(&mut syt);
        let expected: Vec<Tableau> = [
            "24/1356", "34/1256", "25/1346", "35/1246", "45/1236", "26/1345", "36/1245", "46/1235",
            "56/1234",
        ]
        .iter()
        .map(|s| young(s))
        .collect();
        assert_eq!(syt, expected);
    }

    #[test]
    fn last_letter_order_is_total() {
        let p: Partition = "3,2".parse().unwrap();
        let syt = Tableau::standard(&p);
        assert_eq!(syt.len(), 5);
        for a in &syt {
            assert_eq!(last_letter_cmp(a, a).unwrap(), Ordering::Equal);
            for b in &syt {
                let ab = last_letter_cmp(a, b).unwrap();
                assert_eq!(ab, last_letter_cmp(b, a).unwrap().reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &syt {
                    if ab == Ordering::Less && last_letter_cmp(b, c).unwrap() == Ordering::Less {
                        assert_eq!(last_letter_cmp(a, c).unwrap(), Ordering::Less);
                    }
                }
            }
        }
        assert!(last_letter_cmp(&young("12"), &young("2/1")).is_err());
    }
}
