//! Fillings of left-justified diagrams in French notation.
//!
//! Row indices may be zero or negative: weak descent tableaux of virtual
//! words need room below row 1. The shape only records positive rows.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Flag, WeakComposition, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Tableau {
    base_row: i64,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    base_row: i64,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.base_row, raw.rows)
    }
}

impl From<Tableau> for RawTableau {
    fn from(t: Tableau) -> Self {
        RawTableau {
            base_row: t.base_row,
            rows: t.rows,
        }
    }
}

impl Tableau {
    /// `rows[k]` is row `base_row + k`.
    pub fn new(base_row: i64, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Self::from_parts(base_row, rows))
    }

    /// Rows listed from row 1 upward.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(1, rows)
    }

    pub(crate) fn from_parts(base_row: i64, rows: Vec<Vec<usize>>) -> Self {
        let mut t = Tableau { base_row, rows };
        t.canonicalize();
        t
    }

    // Positive rows are always stored from row 1; non-positive rows only as
    // far down as the lowest box.
    fn canonicalize(&mut self) {
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
        while self.base_row < 1 && self.rows.first().is_some_and(Vec::is_empty) {
            self.rows.remove(0);
            self.base_row += 1;
        }
        if self.rows.is_empty() || self.base_row > 1 {
            let pad = (self.base_row - 1).max(0) as usize;
            self.rows.splice(0..0, std::iter::repeat_n(Vec::new(), pad));
            self.base_row = 1;
        }
    }

    pub fn empty() -> Self {
        Tableau {
            base_row: 1,
            rows: Vec::new(),
        }
    }

    pub fn base_row(&self) -> i64 {
        self.base_row
    }

    /// Index of the highest stored row (`base_row − 1` when empty).
    pub fn top_row(&self) -> i64 {
        self.base_row + self.rows.len() as i64 - 1
    }

    pub fn raw_rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, r: i64) -> &[usize] {
        let k = r - self.base_row;
        if k < 0 {
            return &[];
        }
        self.rows.get(k as usize).map_or(&[], Vec::as_slice)
    }

    /// Entry in row `r`, column `c` (columns counted from 1).
    pub fn get(&self, r: i64, c: usize) -> Option<usize> {
        c.checked_sub(1).and_then(|k| self.row(r).get(k).copied())
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.num_boxes() == 0
    }

    pub fn row_range(&self) -> impl DoubleEndedIterator<Item = i64> {
        self.base_row..=self.top_row()
    }

    /// `(row, column, entry)` for every box, bottom row first.
    pub fn boxes(&self) -> impl Iterator<Item = (i64, usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, row)| {
            let r = self.base_row + k as i64;
            row.iter().enumerate().map(move |(c, &v)| (r, c + 1, v))
        })
    }

    pub fn has_nonpositive_boxes(&self) -> bool {
        self.boxes().any(|(r, _, _)| r <= 0)
    }

    /// Row lengths of the positive rows.
    pub fn shape(&self) -> WeakComposition {
        let top = self.top_row().max(0);
        WeakComposition::new((1..=top).map(|r| self.row(r).len()).collect())
    }

    pub fn weight(&self) -> WeakComposition {
        self.row_word().weight()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Entries of column `c`, bottom to top, with their rows.
    pub fn column(&self, c: usize) -> Vec<(i64, usize)> {
        self.row_range()
            .filter_map(|r| self.get(r, c).map(|v| (r, v)))
            .collect()
    }

    /// `row(T) = … r² r¹`: rows from the top down, each left to right.
    pub fn row_word(&self) -> Word {
        Word::from_vec_unchecked(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Reverse column reading word: columns right to left, each read downward.
    pub fn col_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.num_boxes());
        for c in (1..=self.num_columns()).rev() {
            letters.extend(self.column(c).iter().rev().map(|&(_, v)| v));
        }
        Word::from_vec_unchecked(letters)
    }

    /// Moves every box up `n` rows.
    pub fn shift_rows(&self, n: i64) -> Tableau {
        Self::from_parts(self.base_row + n, self.rows.clone())
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&v| f(v)).collect())
            .collect();
        Self::from_parts(self.base_row, rows)
    }

    /// Replaces the entry at `(r, c)`, which must exist.
    pub(crate) fn set(&mut self, r: i64, c: usize, v: usize) {
        let k = (r - self.base_row) as usize;
        self.rows[k][c - 1] = v;
    }

    /// Rows weakly decreasing, columns without repeats, and the condition
    /// that `T_ij > T_kj` with `i < k` forces a box `(i, j+1)` with
    /// `T_{i,j+1} > T_kj`.
    pub fn is_key_tableau(&self) -> bool {
        if self.has_nonpositive_boxes() {
            return false;
        }
        if self.rows.iter().any(|row| row.windows(2).any(|p| p[0] < p[1])) {
            return false;
        }
        for c in 1..=self.num_columns() {
            let col = self.column(c);
            let distinct: BTreeSet<usize> = col.iter().map(|&(_, v)| v).collect();
            if distinct.len() != col.len() {
                return false;
            }
            for (a, &(i, lower)) in col.iter().enumerate() {
                for &(_, upper) in &col[a + 1..] {
                    if lower > upper && self.get(i, c + 1).is_none_or(|right| right <= upper) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every entry in row `i` is at most `φ(i)`.
    pub fn is_flagged(&self, flag: &Flag) -> bool {
        self.boxes().all(|(r, _, v)| r >= 1 && v <= flag.get(r as usize))
    }

    fn has_partition_shape(&self) -> bool {
        self.base_row == 1
            && self.rows.iter().all(|r| !r.is_empty())
            && self.rows.windows(2).all(|p| p[0].len() >= p[1].len())
    }

    /// Partition shape, rows weakly increasing, columns strictly increasing upward.
    pub fn is_semistandard(&self) -> bool {
        self.has_partition_shape()
            && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
            && self
                .rows
                .windows(2)
                .all(|p| p[1].iter().zip(&p[0]).all(|(up, down)| up > down))
    }

    /// Semistandard with strictly increasing rows.
    pub fn is_increasing(&self) -> bool {
        self.is_semistandard() && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
    }
}

impl Default for Tableau {
    fn default() -> Self {
        Self::empty()
    }
}

impl fmt::Display for Tableau {
    /// French notation: the top row is printed first, each line prefixed by
    /// its row index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let width = self
            .row_range()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1);
        let lines: Vec<String> = self
            .row_range()
            .rev()
            .map(|r| {
                let entries: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
                format!("{r:>width$} | {}", entries.join(" ")).trim_end().to_string()
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// All `φ`-flagged key tableaux of shape `α`, sorted.
pub fn enumerate_sskt(alpha: &WeakComposition, flag: &Flag) -> Vec<Tableau> {
    let shape = alpha.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&n| Vec::with_capacity(n)).collect();
    let mut out = Vec::new();
    fill_sskt(&shape, flag, 0, &mut rows, &mut out);
    out.sort();
    out
}

// Rows are filled bottom-up, each left to right, so when a box is placed all
// lower rows are complete and condition (c) can be checked against them.
fn fill_sskt(
    shape: &[usize],
    flag: &Flag,
    r: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if r == shape.len() {
        out.push(Tableau::from_parts(1, rows.clone()));
        return;
    }
    let c = rows[r].len();
    if c == shape[r] {
        fill_sskt(shape, flag, r + 1, rows, out);
        return;
    }
    let max = rows[r].last().copied().unwrap_or(usize::MAX).min(flag.get(r + 1));
    for v in 1..=max {
        let fits = rows[..r].iter().all(|lower| match lower.get(c) {
            None => true,
            Some(&below) if below == v => false,
            Some(&below) if below > v => lower.get(c + 1).is_some_and(|&right| right > v),
            Some(_) => true,
        });
        if fits {
            rows[r].push(v);
            fill_sskt(shape, flag, r, rows, out);
            rows[r].pop();
        }
    }
}

/// Standardization of a key tableau: the `β_i` entries equal to `i` become
/// `1 + Σ_{j<i} β_j, …, Σ_{j≤i} β_j`, assigned from right to left.
pub fn std_key(t: &Tableau) -> Tableau {
    // equal entries of a key tableau never share a column, so right to left
    // is column-descending
    relabel(t, |(r, c, v)| (v, std::cmp::Reverse(c), r))
}

/// Standardization of a semistandard Young tableau, equal entries numbered
/// from left to right.
pub fn std_ssyt(t: &Tableau) -> Result<Tableau> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard(t.to_string()));
    }
    Ok(relabel(t, |(r, c, v)| (v, c, std::cmp::Reverse(r))))
}

fn relabel<K: Ord>(t: &Tableau, key: impl Fn((i64, usize, usize)) -> K) -> Tableau {
    let mut boxes: Vec<(i64, usize, usize)> = t.boxes().collect();
    boxes.sort_by_key(|&b| key(b));
    let mut out = t.clone();
    for (k, (r, c, _)) in boxes.into_iter().enumerate() {
        out.set(r, c, k + 1);
    }
    out
}

/// `key(α)`: the semistandard tableau of weight `α` whose column `c` holds
/// `{i : α_i ≥ c}`.
pub fn key_of(alpha: &WeakComposition) -> Tableau {
    let parts = alpha.parts();
    let height = parts.iter().filter(|&&a| a > 0).count();
    let mut rows = vec![Vec::new(); height];
    let width = parts.iter().copied().max().unwrap_or(0);
    for c in 1..=width {
        let column = (1..=parts.len()).filter(|&i| alpha.get(i) >= c);
        for (r, i) in column.enumerate() {
            rows[r].push(i);
        }
    }
    Tableau::from_parts(1, rows)
}

/// The highest weight element of `SSKT(α, φ)`: column `c` holds
/// `1, 2, …, λ^T_c` from bottom to top.
pub fn highest_weight_sskt(alpha: &WeakComposition) -> Tableau {
    let mut next = vec![1; alpha.parts().iter().copied().max().unwrap_or(0)];
    let rows = alpha
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|c| {
                    next[c] += 1;
                    next[c] - 1
                })
                .collect()
        })
        .collect();
    Tableau::from_parts(1, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(base: i64, rows: &[&[usize]]) -> Tableau {
        Tableau::new(base, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn canonical_form() {
        let a = tab(1, &[&[], &[3], &[]]);
        let b = tab(2, &[&[3]]);
        assert_eq!(a, b);
        assert_eq!(a.base_row(), 1);
        assert_eq!(a.shape(), comp(&[0, 1]));
        let v = tab(-1, &[&[], &[2, 4, 5], &[3, 6]]);
        assert_eq!(v.base_row(), 0);
        assert!(v.has_nonpositive_boxes());
        assert_eq!(v.shape(), comp(&[2]));
        assert_eq!(Tableau::empty(), tab(1, &[&[]]));
    }

    #[test]
    fn reading_words() {
        let t = tab(1, &[&[2, 5, 7], &[], &[3, 6, 9, 9], &[6]]);
        assert_eq!(t.col_word().to_string(), "99765632");
        assert_eq!(t.row_word().to_string(), "63699257");
        assert!(Tableau::empty().col_word().is_empty());
        assert_eq!(tab(1, &[&[1, 2]]).row_word().to_string(), "12");
    }

    #[test]
    fn key_tableau_examples() {
        // shapes (2,4,0,3) and (2,1,2)
        assert!(tab(1, &[&[2, 1], &[7, 6, 5, 5], &[], &[5, 4, 3]]).is_key_tableau());
        assert!(tab(1, &[&[2, 1], &[3], &[5, 4]]).is_key_tableau());
        assert!(!tab(1, &[&[1, 2], &[7, 6, 5, 5], &[], &[5, 4, 3]]).is_key_tableau());
        assert!(!tab(1, &[&[1], &[1]]).is_key_tableau());
        // a 2 below a 1 needs a larger entry to the right of the 2
        assert!(!tab(1, &[&[2], &[1]]).is_key_tableau());
        assert!(tab(1, &[&[2, 2], &[1]]).is_key_tableau());
        assert!(tab(1, &[&[1], &[2, 1]]).is_key_tableau());
        assert!(!tab(0, &[&[1], &[2]]).is_key_tableau());
    }

    #[test]
    fn sskt_1201() {
        let alpha = comp(&[1, 2, 0, 1]);
        let standard = enumerate_sskt(&alpha, &Flag::standard());
        let expected: BTreeSet<Tableau> = [
            tab(1, &[&[1], &[2, 1], &[], &[3]]),
            tab(1, &[&[1], &[2, 2], &[], &[3]]),
            tab(1, &[&[1], &[2, 1], &[], &[4]]),
            tab(1, &[&[1], &[2, 2], &[], &[4]]),
        ]
        .into();
        assert_eq!(standard.iter().cloned().collect::<BTreeSet<_>>(), expected);

        let flag = Flag::new(vec![2, 3, 4, 4]).unwrap();
        let flagged = enumerate_sskt(&alpha, &flag);
        assert_eq!(flagged.len(), 11);
        let extra = [
            tab(1, &[&[1], &[3, 3], &[], &[2]]),
            tab(1, &[&[1], &[3, 3], &[], &[4]]),
            tab(1, &[&[1], &[3, 2], &[], &[4]]),
            tab(1, &[&[1], &[3, 1], &[], &[4]]),
            tab(1, &[&[2], &[3, 3], &[], &[4]]),
            tab(1, &[&[2], &[3, 2], &[], &[4]]),
            tab(1, &[&[2], &[3, 1], &[], &[4]]),
        ];
        for t in expected.iter().chain(&extra) {
            assert!(flagged.contains(t), "missing\n{t}");
        }
        assert!(flagged.iter().all(|t| t.is_key_tableau() && t.is_flagged(&flag)));
    }

    #[test]
    fn sskt_of_zero() {
        assert_eq!(enumerate_sskt(&WeakComposition::zero(), &Flag::standard()), vec![Tableau::empty()]);
    }

    #[test]
    fn sskt_depends_only_on_flag_prefix() {
        let alpha = comp(&[0, 2, 1]);
        let a = Flag::new(vec![2, 3, 3]).unwrap();
        let b = Flag::new(vec![2, 3, 3, 6]).unwrap();
        assert!(a.agrees_on(&b, 3));
        assert_eq!(enumerate_sskt(&alpha, &a), enumerate_sskt(&alpha, &b));
    }

    #[test]
    fn standardizations() {
        let t = tab(1, &[&[], &[5, 4, 3, 1], &[2, 2], &[], &[], &[], &[3]]);
        let s = tab(1, &[&[], &[7, 6, 4, 1], &[3, 2], &[], &[], &[], &[5]]);
        assert_eq!(std_key(&t), s);
        assert_eq!(std_key(&s), s);
        assert_eq!(std_key(&tab(1, &[&[2, 2]])), tab(1, &[&[2, 1]]));
        assert!(std_key(&t).is_key_tableau());

        let ssyt = tab(1, &[&[1, 2, 3, 4, 4], &[2, 3], &[3], &[6]]);
        let expected = tab(1, &[&[1, 3, 6, 7, 8], &[2, 5], &[4], &[9]]);
        assert_eq!(std_ssyt(&ssyt).unwrap(), expected);
        assert!(std_ssyt(&tab(1, &[&[2, 1]])).is_err());
    }

    #[test]
    fn keys() {
        let k = key_of(&comp(&[1, 2, 5, 3, 0, 1]));
        assert_eq!(k, tab(1, &[&[1, 2, 3, 3, 3], &[2, 3, 4], &[3, 4], &[4], &[6]]));
        assert!(k.is_semistandard());
        assert_eq!(k.weight(), comp(&[1, 2, 5, 3, 0, 1]));
        assert_eq!(key_of(&comp(&[1])), tab(1, &[&[1]]));
        assert_eq!(key_of(&comp(&[3])), tab(1, &[&[1, 1, 1]]));
        let k = key_of(&comp(&[1, 2, 0, 1]));
        assert_eq!(k, tab(1, &[&[1, 2], &[2], &[4]]));
        assert_eq!(std_ssyt(&k).unwrap(), tab(1, &[&[1, 3], &[2], &[4]]));
    }

    #[test]
    fn highest_weight_elements() {
        let alpha = comp(&[1, 2, 0, 1]);
        let hw = highest_weight_sskt(&alpha);
        assert_eq!(hw, tab(1, &[&[1], &[2, 1], &[], &[3]]));
        assert!(hw.is_key_tableau());
        assert_eq!(highest_weight_sskt(&WeakComposition::zero()), Tableau::empty());
        let lambda = comp(&[3, 2, 2]);
        assert_eq!(highest_weight_sskt(&lambda), tab(1, &[&[1, 1, 1], &[2, 2], &[3, 3]]));
        for alpha in WeakComposition::all_bounded(4, 5) {
            let hw = highest_weight_sskt(&alpha);
            assert!(hw.is_key_tableau(), "{alpha}");
            assert!(hw.is_flagged(&Flag::standard()));
            assert_eq!(hw.weight(), alpha.sorted());
        }
    }

    #[test]
    fn json_round_trip() {
        let t = tab(0, &[&[2, 4, 5], &[3, 6]]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"base_row":0,"rows":[[2,4,5],[3,6]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<Tableau>(r#"{"base_row":1,"rows":[[0]]}"#).is_err());
    }

    #[test]
    fn display_is_french() {
        let t = tab(1, &[&[1], &[2, 1], &[], &[3]]);
        assert_eq!(t.to_string(), "4 | 3\n3 |\n2 | 2 1\n1 | 1");
    }
}
