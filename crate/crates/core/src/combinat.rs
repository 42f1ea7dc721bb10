//! Permutations, words, weak compositions and flags.
//!
//! Permutations of the positive integers are stored in one-line notation up
//! to their largest moved point, so `[2, 1]` and `[2, 1, 3]` are the same
//! value. Words, compositions and flags are 1-indexed at the API surface to
//! match the usual combinatorial conventions; internally they are plain
//! vectors.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(parts.into_iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn push(&mut self, letter: usize) {
        assert!(letter > 0, "letters are positive");
        self.0.push(letter);
    }

    /// `wt(u)`: multiplicity of each letter.
    pub fn weight(&self) -> WeakComposition {
        let mut parts = vec![0; self.0.iter().copied().max().unwrap_or(0)];
        for &a in &self.0 {
            parts[a - 1] += 1;
        }
        WeakComposition::new(parts)
    }

    /// Adds `n` to every letter.
    pub fn shift(&self, n: usize) -> Word {
        Word(self.0.iter().map(|a| a + n).collect())
    }

    pub fn product(&self) -> Permutation {
        Permutation::from_word(self)
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    pub(crate) fn ensure_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(self.clone()))
        }
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|&a| a < 10) {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `2736245` (single-digit letters) or `2,7,3,6` for larger letters.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        let letters = if s.contains(',') {
            parse_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Malformed(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters)
    }
}

/// Parses a comma-separated list of non-negative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Malformed(format!("not a non-negative integer: {t:?}")))
        })
        .collect()
}

/// A finitely supported permutation of the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // images w(1..m), trailing fixed points trimmed
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { oneline: Vec::new() }
    }

    pub fn from_oneline(oneline: Vec<usize>) -> Result<Self> {
        let m = oneline.len();
        let mut seen = vec![false; m + 1];
        for &v in &oneline {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(oneline));
            }
            seen[v] = true;
        }
        let mut p = Permutation { oneline };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.oneline.last() {
            if last == self.oneline.len() {
                self.oneline.pop();
            } else {
                break;
            }
        }
    }

    /// The adjacent transposition `s_i`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1);
        Permutation::identity().right_mul_simple(i)
    }

    /// `s_{a_1} s_{a_2} ... s_{a_n}`.
    pub fn from_word(word: &Word) -> Self {
        let mut v: Vec<usize> = Vec::new();
        for &i in word.letters() {
            if v.len() < i + 1 {
                let start = v.len();
                v.extend(start + 1..=i + 1);
            }
            v.swap(i - 1, i);
        }
        let mut p = Permutation { oneline: v };
        p.trim();
        p
    }

    /// `w(i)`.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.oneline.len() {
            self.oneline[i - 1]
        } else {
            i
        }
    }

    /// The largest moved point (0 for the identity).
    pub fn rank(&self) -> usize {
        self.oneline.len()
    }

    /// One-line notation padded to `m` entries (`m` is raised to the rank if smaller).
    pub fn oneline(&self, m: usize) -> Vec<usize> {
        let m = m.max(self.rank());
        (1..=m).map(|i| self.apply(i)).collect()
    }

    pub fn canonical_oneline(&self) -> &[usize] {
        &self.oneline
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.oneline;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&b| b < v[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.oneline.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { oneline: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let m = self.rank().max(other.rank());
        let mut p = Permutation {
            oneline: (1..=m).map(|i| self.apply(other.apply(i))).collect(),
        };
        p.trim();
        p
    }

    /// `w s_i` (swaps positions `i`, `i+1` of the one-line notation).
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut v = self.oneline(i + 1);
        v.swap(i - 1, i);
        let mut p = Permutation { oneline: v };
        p.trim();
        p
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// A canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w = w.right_mul_simple(i);
        }
        rev.reverse();
        Word(rev)
    }

    /// `1_N × w`.
    pub fn shift(&self, n: usize) -> Self {
        let mut p = Permutation {
            oneline: (1..=n).chain(self.oneline.iter().map(|v| v + n)).collect(),
        };
        p.trim();
        p
    }

    /// All of `S_m`, in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        (1..=m)
            .permutations(m)
            .map(|v| Permutation::from_oneline(v).expect("permutation"))
            .collect()
    }

    /// The longest element of `S_m`.
    pub fn longest(m: usize) -> Self {
        Permutation::from_oneline((1..=m).rev().collect()).expect("permutation")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_oneline(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.oneline
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.oneline.is_empty() {
            return f.write_str("1");
        }
        if self.oneline.len() < 10 {
            write!(f, "{}", self.oneline.iter().join(""))
        } else {
            write!(f, "[{}]", self.oneline.iter().join(","))
        }
    }
}

/// The set `R(w)` of reduced words of `w`.
pub fn reduced_words(w: &Permutation) -> BTreeSet<Word> {
    fn go(w: &Permutation, suffix: &mut Vec<usize>, out: &mut BTreeSet<Word>) {
        if w.is_identity() {
            out.insert(Word(suffix.iter().rev().copied().collect()));
            return;
        }
        for i in w.right_descents() {
            suffix.push(i);
            go(&w.right_mul_simple(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(w, &mut Vec::new(), &mut out);
    out
}

/// Words obtained from `word` by one Coxeter-Knuth move at any window.
pub fn ck_neighbors(word: &Word) -> Vec<Word> {
    let v = word.letters();
    let mut out = Vec::new();
    for p in 0..v.len().saturating_sub(2) {
        let (a, b, c) = (v[p], v[p + 1], v[p + 2]);
        let replacement = if b < a && a < c || c < a && a < b {
            // xyz ~ xzy for y < x < z, in either direction
            Some([a, c, b])
        } else if b < c && c < a || a < c && c < b {
            // xyz ~ yxz for y < z < x, in either direction
            Some([b, a, c])
        } else if a == c && (b == a + 1 || a == b + 1) {
            // i(i+1)i ~ (i+1)i(i+1)
            Some([b, a, b])
        } else {
            None
        };
        if let Some(r) = replacement {
            let mut u = v.to_vec();
            u[p..p + 3].copy_from_slice(&r);
            out.push(Word(u));
        }
    }
    out
}

/// The Coxeter-Knuth class of a reduced word, by breadth-first closure.
pub fn ck_class(word: &Word) -> Result<BTreeSet<Word>> {
    word.ensure_reduced()?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word.clone());
    while let Some(u) = queue.pop_front() {
        for v in ck_neighbors(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// A weak composition, with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition(parts)
    }

    pub fn zero() -> Self {
        WeakComposition(Vec::new())
    }

    /// `α_1, ..., α_ℓ`.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `α_i` (1-indexed, zero beyond the length).
    pub fn get(&self, i: usize) -> usize {
        if i >= 1 {
            self.0.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// `α · s_i`: swap components `i` and `i+1`.
    pub fn act_simple(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v.swap(i - 1, i);
        WeakComposition::new(v)
    }

    /// `α · w`, where `(α·w)_j = α_{w(j)}`.
    pub fn act(&self, w: &Permutation) -> Self {
        let m = self.len().max(w.rank());
        WeakComposition::new((1..=m).map(|j| self.get(w.apply(j))).collect())
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        WeakComposition::new(v)
    }

    /// Conjugate of the sorted rearrangement: `λ^T_c = #{i : α_i ≥ c}`.
    pub fn transpose(&self) -> Self {
        let max = self.0.iter().copied().max().unwrap_or(0);
        WeakComposition::new((1..=max).map(|c| self.0.iter().filter(|&&a| a >= c).count()).collect())
    }

    /// Dominance: every prefix sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        let (mut s, mut t) = (0usize, 0usize);
        for i in 1..=n {
            s += self.get(i);
            t += other.get(i);
            if s > t {
                return false;
            }
        }
        true
    }

    /// `0^N × α`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let mut v = vec![0; n];
        v.extend_from_slice(&self.0);
        WeakComposition(v)
    }

    /// All weak compositions with at most `max_len` parts and size at most `max_size`.
    pub fn all_bounded(max_len: usize, max_size: usize) -> Vec<WeakComposition> {
        let mut out = BTreeSet::new();
        fn go(len: usize, left: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<WeakComposition>) {
            if cur.len() == len {
                out.insert(WeakComposition::new(cur.clone()));
                return;
            }
            for a in 0..=left {
                cur.push(a);
                go(len, left - a, cur, out);
                cur.pop();
            }
        }
        go(max_len, max_size, &mut Vec::new(), &mut out);
        out.into_iter().collect()
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(v: Vec<usize>) -> Self {
        WeakComposition::new(v)
    }
}

impl From<WeakComposition> for Vec<usize> {
    fn from(a: WeakComposition) -> Self {
        a.0
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Returns the sorted partition `λ` and the minimal-length `w` with `α · w = λ`.
pub fn sort_and_minimal_sorter(alpha: &WeakComposition) -> (WeakComposition, Permutation) {
    // stable sort of positions by decreasing part: ties keep their relative
    // order, which yields the shortest sorting permutation
    let mut positions: Vec<usize> = (1..=alpha.len()).collect();
    positions.sort_by_key(|&a| std::cmp::Reverse(alpha.get(a)));
    let w = Permutation::from_oneline(positions).expect("positions form a permutation");
    (alpha.sorted(), w)
}

/// A flag: a weakly increasing `φ` with `φ(i) ≥ i`.
///
/// Only a finite prefix is stored. Beyond it, `φ(i) = max(i, φ(n₀))`. The
/// stored prefix is trimmed so that equal flags have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Flag(Vec<usize>);

impl Flag {
    pub fn standard() -> Self {
        Flag(Vec::new())
    }

    pub fn new(values: Vec<usize>) -> Result<Self> {
        for (k, &v) in values.iter().enumerate() {
            let i = k + 1;
            if v < i {
                return Err(Error::InvalidFlag {
                    values,
                    reason: format!("φ({i}) = {v} < {i}"),
                });
            }
            if k > 0 && values[k - 1] > v {
                return Err(Error::InvalidFlag {
                    values,
                    reason: format!("not weakly increasing at {i}"),
                });
            }
        }
        let mut f = Flag(values);
        f.trim();
        Ok(f)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.0.last() {
            let n0 = self.0.len();
            let prev = if n0 >= 2 { self.0[n0 - 2] } else { 0 };
            if last == n0.max(prev) {
                self.0.pop();
            } else {
                break;
            }
        }
    }

    /// `φ(i)` for `i ≥ 1`; `φ(0) = 0`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else if i <= self.0.len() {
            self.0[i - 1]
        } else {
            i.max(self.0.last().copied().unwrap_or(0))
        }
    }

    /// The trimmed stored prefix.
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `φ(1), ..., φ(n)`.
    pub fn prefix(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.0.is_empty()
    }

    pub fn agrees_on(&self, other: &Flag, n: usize) -> bool {
        (1..=n).all(|i| self.get(i) == other.get(i))
    }

    /// `φ − e_i`, failing if the result is not a flag. Values past `i` are
    /// kept, including extended ones.
    pub fn minus_e(&self, i: usize) -> Result<Flag> {
        let mut v = self.prefix((i + 1).max(self.0.len()));
        v[i - 1] -= 1;
        Flag::new(v)
    }

    /// `min{n : φ(n) ≥ i}`, the lowest row (or letter) allowed to reach `i`.
    pub fn lowest_reaching(&self, i: usize) -> usize {
        (1..=i).find(|&n| self.get(n) >= i).unwrap_or(i)
    }

    /// All flags with `i ≤ φ(i) ≤ i + excess` on `[m]`, standard beyond.
    pub fn all_with_excess(m: usize, excess: usize) -> Vec<Flag> {
        let mut out = Vec::new();
        fn go(m: usize, excess: usize, cur: &mut Vec<usize>, out: &mut Vec<Flag>) {
            let i = cur.len() + 1;
            if i > m {
                out.push(Flag::new(cur.clone()).expect("valid by construction"));
                return;
            }
            let lo = i.max(cur.last().copied().unwrap_or(0));
            for v in lo..=i + excess {
                cur.push(v);
                go(m, excess, cur, out);
                cur.pop();
            }
        }
        go(m, excess, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Flag {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Flag::new(v)
    }
}

impl From<Flag> for Vec<usize> {
    fn from(f: Flag) -> Self {
        f.0
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("standard")
        } else {
            write!(f, "({})", self.0.iter().join(","))
        }
    }
}
