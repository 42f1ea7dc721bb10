//! Edelman–Greene insertion, increasing factorizations, and column insertion.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::combinat::{Flag, WeakComposition, Word};
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// A word cut into strictly increasing (possibly empty) blocks.
///
/// Blocks are numbered from the right: `block(1)` is the last one and
/// `block(k)` the first. `blocks()` lists them in reading order, so
/// `blocks()[0]` is `ρ^(k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFactorization", into = "RawFactorization")]
pub struct IncreasingFactorization {
    blocks: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct RawFactorization {
    blocks: Vec<Word>,
}

impl TryFrom<RawFactorization> for IncreasingFactorization {
    type Error = Error;

    fn try_from(raw: RawFactorization) -> Result<Self> {
        IncreasingFactorization::new(raw.blocks)
    }
}

impl From<IncreasingFactorization> for RawFactorization {
    fn from(f: IncreasingFactorization) -> Self {
        RawFactorization { blocks: f.blocks }
    }
}

impl IncreasingFactorization {
    /// `blocks` in reading order (`ρ^(k)` first).
    pub fn new(blocks: Vec<Word>) -> Result<Self> {
        let k = blocks.len();
        if let Some(s) = blocks.iter().position(|b| !b.is_strictly_increasing()) {
            return Err(Error::NotIncreasing(k - s));
        }
        Ok(IncreasingFactorization { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Word>) -> Self {
        debug_assert!(blocks.iter().all(Word::is_strictly_increasing));
        IncreasingFactorization { blocks }
    }

    /// The factorization of `word` into maximal increasing runs.
    pub fn runs(word: &Word) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &a in word.letters() {
            match blocks.last_mut() {
                Some(b) if b.last().is_some_and(|&l| l < a) => b.push(a),
                _ => blocks.push(vec![a]),
            }
        }
        Self::from_blocks_unchecked(blocks.into_iter().map(Word::from_vec_unchecked).collect())
    }

    /// One letter per block.
    pub fn trivial(word: &Word) -> Self {
        Self::from_blocks_unchecked(
            word.letters()
                .iter()
                .map(|&a| Word::from_vec_unchecked(vec![a]))
                .collect(),
        )
    }

    /// Cuts `word` into blocks with `ℓ(ρ^(j)) = lengths[j − 1]`, padding with
    /// empty blocks up to `k` blocks in total.
    pub fn with_lengths(word: &Word, lengths: &[usize], k: usize) -> Result<Self> {
        if lengths.iter().sum::<usize>() != word.len() || lengths.len() > k {
            return Err(Error::Malformed(format!(
                "block lengths {lengths:?} do not fit {word} in {k} blocks"
            )));
        }
        let letters = word.letters();
        let mut end = letters.len();
        let mut blocks = vec![Word::empty(); k];
        for (j, &len) in lengths.iter().enumerate() {
            blocks[k - 1 - j] = Word::from_vec_unchecked(letters[end - len..end].to_vec());
            end -= len;
        }
        Self::new(blocks)
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in reading order, `ρ^(k)` first.
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// `ρ^(j)` for `1 ≤ j ≤ k`.
    pub fn block(&self, j: usize) -> &Word {
        &self.blocks[self.blocks.len() - j]
    }

    pub(crate) fn block_mut(&mut self, j: usize) -> &mut Word {
        let k = self.blocks.len();
        &mut self.blocks[k - j]
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.blocks)
    }

    /// `(ℓ(ρ^(1)), ℓ(ρ^(2)), …)`.
    pub fn weight(&self) -> WeakComposition {
        WeakComposition::new(self.blocks.iter().rev().map(Word::len).collect())
    }

    /// Block `j` nonempty implies `φ(ρ^(j)_1) ≥ j`.
    pub fn is_flagged(&self, flag: &Flag) -> bool {
        (1..=self.num_blocks()).all(|j| self.block(j).first().is_none_or(|a| flag.get(a) >= j))
    }

    /// Adds `n` to every letter.
    pub fn shift(&self, n: usize) -> Self {
        Self::from_blocks_unchecked(self.blocks.iter().map(|b| b.shift(n)).collect())
    }

    /// The same factorization with exactly `n` blocks, if the blocks beyond
    /// `n` are empty.
    pub fn resized(&self, n: usize) -> Option<Self> {
        let k = self.num_blocks();
        if k > n {
            if self.blocks[..k - n].iter().any(|b| !b.is_empty()) {
                return None;
            }
            return Some(Self::from_blocks_unchecked(self.blocks[k - n..].to_vec()));
        }
        let mut blocks = vec![Word::empty(); n - k];
        blocks.extend(self.blocks.iter().cloned());
        Some(Self::from_blocks_unchecked(blocks))
    }
}

impl fmt::Display for IncreasingFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self
            .blocks
            .iter()
            .map(|b| if b.is_empty() { String::new() } else { b.to_string() })
            .join("|");
        write!(f, "({shown})")
    }
}

impl FromStr for IncreasingFactorization {
    type Err = Error;

    /// `3|26|56|4`, optionally parenthesised; use commas inside a block for
    /// letters above 9.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let blocks = s.split('|').map(str::parse).collect::<Result<Vec<Word>>>()?;
        Self::new(blocks)
    }
}

/// One step of Edelman–Greene bumping on rows listed from the bottom.
/// Returns the (0-based) row that gained a box.
fn eg_bump_rows(rows: &mut Vec<Vec<usize>>, x: usize) -> usize {
    let mut x = x;
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&z| z > x) {
            None => {
                row.push(x);
                return r;
            }
            Some(p) => {
                let y = row[p];
                let special = y == x + 1 && p > 0 && row[p - 1] == x;
                if !special {
                    row[p] = x;
                }
                x = y;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

fn rows_of(p: &Tableau) -> Vec<Vec<usize>> {
    assert!(
        p.base_row() == 1,
        "insertion tableaux live in positive rows"
    );
    p.raw_rows().to_vec()
}

/// `P ← x`.
pub fn eg_bump(p: &Tableau, x: usize) -> Tableau {
    let mut rows = rows_of(p);
    eg_bump_rows(&mut rows, x);
    Tableau::from_parts(1, rows)
}

/// `P(ρ)`.
pub fn eg_insert(word: &Word) -> Result<Tableau> {
    word.ensure_reduced()?;
    let mut rows = Vec::new();
    for &a in word.letters() {
        eg_bump_rows(&mut rows, a);
    }
    Ok(Tableau::from_parts(1, rows))
}

/// `(row, column)` of the box added by each successive letter of `ρ`.
pub fn eg_growth(word: &Word) -> Result<Vec<(usize, usize)>> {
    word.ensure_reduced()?;
    let mut rows = Vec::new();
    Ok(word
        .letters()
        .iter()
        .map(|&a| {
            let r = eg_bump_rows(&mut rows, a);
            (r + 1, rows[r].len())
        })
        .collect())
}

/// `(P(ρ^•), Q(ρ^•))`, where `Q` has `k + 1 − j` in the boxes created while
/// inserting block `j`.
pub fn eg_insertion_pair(f: &IncreasingFactorization) -> Result<(Tableau, Tableau)> {
    f.word().ensure_reduced()?;
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    // the s-th block in reading order is block k − s, labelled s + 1
    for (s, block) in f.blocks().iter().enumerate() {
        for &a in block.letters() {
            let r = eg_bump_rows(&mut p, a);
            if r == q.len() {
                q.push(Vec::new());
            }
            q[r].push(s + 1);
        }
    }
    Ok((Tableau::from_parts(1, p), Tableau::from_parts(1, q)))
}

/// `Q(ρ^•)`.
pub fn eg_record(f: &IncreasingFactorization) -> Result<Tableau> {
    eg_insertion_pair(f).map(|(_, q)| q)
}

/// Column insertion of `v_n, v_{n−1}, …, v_1` into the empty tableau: the
/// pair `(v → ∅)` with `Q` standard.
pub fn column_insert_word(v: &Word) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &a) in v.letters().iter().rev().enumerate() {
        let mut x = a;
        let mut c = 0;
        loop {
            if c == p.len() {
                p.push(Vec::new());
                q.push(Vec::new());
            }
            let col = &mut p[c];
            if col.last().is_none_or(|&z| z < x) {
                col.push(x);
                q[c].push(step + 1);
                break;
            }
            if !col.contains(&x) {
                let pos = col.iter().position(|&z| z > x).expect("some entry exceeds x");
                x = std::mem::replace(&mut col[pos], x);
            }
            c += 1;
        }
    }
    (columns_to_tableau(&p), columns_to_tableau(&q))
}

fn columns_to_tableau(columns: &[Vec<usize>]) -> Tableau {
    let height = columns.first().map_or(0, Vec::len);
    let rows = (0..height)
        .map(|r| columns.iter().map_while(|col| col.get(r).copied()).collect())
        .collect();
    Tableau::from_parts(1, rows)
}
