//! Crystal operators on reduced factorizations and on key tableaux, Demazure
//! operators, and crystal graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Debug;

use serde::Serialize;

use crate::combinat::{reduced_words, Flag, Permutation, WeakComposition, Word};
use crate::eg::IncreasingFactorization;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::tableau::{enumerate_sskt, Tableau};

fn letter_set(w: &Word) -> BTreeSet<usize> {
    w.letters().iter().copied().collect()
}

fn set_word(s: &BTreeSet<usize>) -> Word {
    Word::from_vec_unchecked(s.iter().copied().collect())
}

/// The unpaired letters `(R_i, L_i)` of blocks `i` and `i + 1`.
///
/// Letters `b` of block `i` are taken in decreasing order, each pairing with
/// the smallest still unpaired `a > b` of block `i + 1`.
pub fn rf_pairing(f: &IncreasingFactorization, i: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
    assert!(i >= 1 && i < f.num_blocks(), "operator index out of range");
    let mut left = letter_set(f.block(i + 1));
    let mut right = BTreeSet::new();
    for &b in f.block(i).letters().iter().rev() {
        match left.range(b + 1..).next().copied() {
            Some(a) => {
                left.remove(&a);
            }
            None => {
                right.insert(b);
            }
        }
    }
    (right, left)
}

/// Lowering operator on `RF_n(w)`.
pub fn rf_f(f: &IncreasingFactorization, i: usize) -> Option<IncreasingFactorization> {
    let (right, _) = rf_pairing(f, i);
    let b = *right.first()?;
    let mut lower = letter_set(f.block(i));
    let mut upper = letter_set(f.block(i + 1));
    let mut t = 0;
    while b > t + 1 && lower.contains(&(b - t - 1)) {
        t += 1;
    }
    lower.remove(&b);
    let fresh = upper.insert(b - t);
    debug_assert!(fresh, "f_{i} collided in block {}", i + 1);
    let mut out = f.clone();
    *out.block_mut(i) = set_word(&lower);
    *out.block_mut(i + 1) = set_word(&upper);
    Some(out)
}

/// Raising operator on `RF_n(w)`.
pub fn rf_e(f: &IncreasingFactorization, i: usize) -> Option<IncreasingFactorization> {
    let (_, left) = rf_pairing(f, i);
    let a = *left.last()?;
    let mut lower = letter_set(f.block(i));
    let mut upper = letter_set(f.block(i + 1));
    let mut s = 0;
    while upper.contains(&(a + s + 1)) {
        s += 1;
    }
    upper.remove(&a);
    let fresh = lower.insert(a + s);
    debug_assert!(fresh, "e_{i} collided in block {i}");
    let mut out = f.clone();
    *out.block_mut(i) = set_word(&lower);
    *out.block_mut(i + 1) = set_word(&upper);
    Some(out)
}

/// `m_i(ρ)` together with every (1-based) `j` attaining it.
pub fn kt_m(word: &Word, i: usize) -> (i64, Vec<usize>) {
    let letters = word.letters();
    if letters.is_empty() {
        return (0, Vec::new());
    }
    let mut suffix = vec![0i64; letters.len()];
    let mut acc = 0;
    for (j, &x) in letters.iter().enumerate().rev() {
        if x == i + 1 {
            acc += 1;
        } else if x == i {
            acc -= 1;
        }
        suffix[j] = acc;
    }
    let m = *suffix.iter().max().unwrap();
    let argmax = (0..letters.len()).filter(|&j| suffix[j] == m).map(|j| j + 1).collect();
    (m, argmax)
}

/// Positions of `col(T)`, aligned with its letters.
fn col_positions(t: &Tableau) -> Vec<(i64, usize)> {
    (1..=t.num_columns())
        .rev()
        .flat_map(|c| t.column(c).into_iter().rev().map(move |(r, _)| (r, c)))
        .collect()
}

/// Raising operator on key tableaux.
pub fn kt_e(t: &Tableau, i: usize) -> Option<Tableau> {
    let word = t.col_word();
    let (m, argmax) = kt_m(&word, i);
    if m <= 0 {
        return None;
    }
    let q = *argmax.last().unwrap();
    let (r, c) = col_positions(t)[q - 1];
    assert_eq!(word.letters()[q - 1], i + 1, "maximal argmax of m_{i} must read i+1");
    let mut out = t.clone();
    let changed: Vec<usize> = (c..=t.row(r).len()).filter(|&cc| t.get(r, cc) == Some(i + 1)).collect();
    for &cc in &changed {
        out.set(r, cc, i);
    }
    for &cc in &changed {
        for (rr, v) in t.column(cc) {
            if rr != r && v == i {
                out.set(rr, cc, i + 1);
            }
        }
    }
    Some(out)
}

/// Lowering operator on `SSKT(α, φ)`: the unique `U` in `within` with
/// `e_i(U) = T`.
pub fn kt_f(t: &Tableau, i: usize, within: &[Tableau]) -> Option<Tableau> {
    within.iter().find(|u| kt_e(u, i).as_ref() == Some(t)).cloned()
}

/// A `gl_n`-crystal given by raising and lowering operators `e_i`, `f_i`
/// for `1 ≤ i < rank`.
pub trait Crystal {
    type Elem: Clone + Ord + Debug + Serialize;

    fn rank(&self) -> usize;
    fn e(&self, x: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn f(&self, x: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn weight(&self, x: &Self::Elem) -> WeakComposition;

    fn is_highest_weight(&self, x: &Self::Elem) -> bool {
        (1..self.rank()).all(|i| self.e(x, i).is_none())
    }
}

/// `RF_n(w)` for any `w`: factorizations with exactly `n` blocks.
#[derive(Clone, Copy, Debug)]
pub struct FactorizationCrystal {
    pub n: usize,
}

impl Crystal for FactorizationCrystal {
    type Elem = IncreasingFactorization;

    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, x: &IncreasingFactorization, i: usize) -> Option<IncreasingFactorization> {
        rf_e(x, i)
    }

    fn f(&self, x: &IncreasingFactorization, i: usize) -> Option<IncreasingFactorization> {
        rf_f(x, i)
    }

    fn weight(&self, x: &IncreasingFactorization) -> WeakComposition {
        x.weight()
    }
}

/// `SSKT(α, φ)` as a `gl_n`-crystal, `n ≥ φ(ℓ(α))`.
#[derive(Clone, Debug)]
pub struct KeyTableauCrystal {
    n: usize,
    elements: Vec<Tableau>,
    lower: BTreeMap<(Tableau, usize), Tableau>,
}

impl KeyTableauCrystal {
    pub fn new(alpha: &WeakComposition, flag: &Flag, n: usize) -> Result<Self> {
        let required = flag.get(alpha.len());
        if n < required {
            return Err(Error::Rank { required, got: n });
        }
        let elements = enumerate_sskt(alpha, flag);
        let mut lower = BTreeMap::new();
        for u in &elements {
            for i in 1..n {
                if let Some(t) = kt_e(u, i) {
                    lower.insert((t, i), u.clone());
                }
            }
        }
        Ok(KeyTableauCrystal { n, elements, lower })
    }

    pub fn elements(&self) -> &[Tableau] {
        &self.elements
    }

    pub fn graph(&self) -> CrystalGraph<Tableau> {
        CrystalGraph::from_subset(self, &self.elements.iter().cloned().collect())
    }
}

impl Crystal for KeyTableauCrystal {
    type Elem = Tableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn e(&self, x: &Tableau, i: usize) -> Option<Tableau> {
        kt_e(x, i)
    }

    fn f(&self, x: &Tableau, i: usize) -> Option<Tableau> {
        self.lower.get(&(x.clone(), i)).cloned()
    }

    fn weight(&self, x: &Tableau) -> WeakComposition {
        x.weight()
    }
}

/// `𝔇_i X`: everything reached from `X` along `f_i`-strings.
pub fn demazure_op<C: Crystal>(c: &C, x: &BTreeSet<C::Elem>, i: usize) -> BTreeSet<C::Elem> {
    let mut out = x.clone();
    for b in x {
        let mut cur = c.f(b, i);
        while let Some(y) = cur {
            cur = c.f(&y, i);
            out.insert(y);
        }
    }
    out
}

/// `𝔇_{i_1} ⋯ 𝔇_{i_k} X`, with `𝔇_{i_k}` applied first.
pub fn demazure_word<C: Crystal>(c: &C, x: &BTreeSet<C::Elem>, word: &[usize]) -> BTreeSet<C::Elem> {
    word.iter().rev().fold(x.clone(), |acc, &i| demazure_op(c, &acc, i))
}

/// `𝔇_{t_1↓s_1} ⋯ 𝔇_{t_k↓s_k} X` where `𝔇_{t↓s} = 𝔇_{t−1} ⋯ 𝔇_s`.
pub fn demazure_chain<C: Crystal>(c: &C, x: &BTreeSet<C::Elem>, chain: &[(usize, usize)]) -> BTreeSet<C::Elem> {
    let word: Vec<usize> = chain.iter().flat_map(|&(t, s)| (s..t).rev()).collect();
    demazure_word(c, x, &word)
}

/// `𝔇_σ{u}` as a crystal with operators truncated to the subset.
pub fn demazure_subcrystal<C: Crystal>(c: &C, u: &C::Elem, sigma: &Permutation) -> Result<CrystalGraph<C::Elem>> {
    if !c.is_highest_weight(u) {
        return Err(Error::NotHighestWeight);
    }
    if sigma.rank() > c.rank() {
        return Err(Error::Rank { required: sigma.rank(), got: c.rank() });
    }
    let seed = BTreeSet::from([u.clone()]);
    let set = demazure_word(c, &seed, sigma.reduced_word().letters());
    Ok(CrystalGraph::from_subset(c, &set))
}

/// The vertex sets `𝔇_σ{u}` for every reduced word of `σ`.
pub fn demazure_sets_all_words<C: Crystal>(c: &C, u: &C::Elem, sigma: &Permutation) -> Vec<BTreeSet<C::Elem>> {
    let seed = BTreeSet::from([u.clone()]);
    reduced_words(sigma)
        .iter()
        .map(|w| demazure_word(c, &seed, w.letters()))
        .collect()
}

type CanonicalForm = Vec<(WeakComposition, Vec<(usize, usize)>)>;

type Adjacency = BTreeMap<usize, usize>;

/// A finite crystal graph: `x →_i y` whenever `f_i(x) = y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    rank: usize,
    vertices: Vec<E>,
    weights: Vec<WeakComposition>,
    /// `(from, i, to)`, sorted.
    edges: Vec<(usize, usize, usize)>,
}

impl<E: Clone + Ord + Debug + Serialize> CrystalGraph<E> {
    /// Closure of `seeds` under every `e_i` and `f_i`.
    pub fn generate<C: Crystal<Elem = E>>(c: &C, seeds: impl IntoIterator<Item = E>) -> Self {
        let mut seen: BTreeSet<E> = BTreeSet::new();
        let mut queue: VecDeque<E> = VecDeque::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for i in 1..c.rank() {
                for y in [c.e(&x, i), c.f(&x, i)].into_iter().flatten() {
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        Self::from_subset(c, &seen)
    }

    /// The full subgraph on `set`; operators leaving the set act as zero.
    pub fn from_subset<C: Crystal<Elem = E>>(c: &C, set: &BTreeSet<E>) -> Self {
        let vertices: Vec<E> = set.iter().cloned().collect();
        let index: BTreeMap<&E, usize> = vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut edges = Vec::new();
        for (k, v) in vertices.iter().enumerate() {
            for i in 1..c.rank() {
                if let Some(&to) = c.f(v, i).as_ref().and_then(|y| index.get(y)) {
                    edges.push((k, i, to));
                }
            }
        }
        let weights = vertices.iter().map(|v| c.weight(v)).collect();
        CrystalGraph { rank: c.rank(), vertices, weights, edges }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, v: usize) -> &WeakComposition {
        &self.weights[v]
    }

    /// `Σ_b x^{wt(b)}`.
    pub fn character(&self) -> IntPolynomial {
        self.weights.iter().map(IntPolynomial::x_pow).sum()
    }

    /// Vertices without incoming edges.
    pub fn highest_weights(&self) -> Vec<usize> {
        let targets: BTreeSet<usize> = self.edges.iter().map(|&(_, _, to)| to).collect();
        (0..self.vertices.len()).filter(|v| !targets.contains(v)).collect()
    }

    /// Connected components (ignoring edge direction), each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, _, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertices.len() {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Outgoing and incoming edges of each vertex, keyed by colour.
    fn adjacency(&self) -> (Vec<Adjacency>, Vec<Adjacency>) {
        let mut out = vec![BTreeMap::new(); self.vertices.len()];
        let mut inc = vec![BTreeMap::new(); self.vertices.len()];
        for &(a, i, b) in &self.edges {
            out[a].insert(i, b);
            inc[b].insert(i, a);
        }
        (out, inc)
    }

    /// BFS encoding of the component of `start`, neighbours visited by
    /// label, outgoing before incoming.
    fn encode_from(&self, start: usize, out: &[BTreeMap<usize, usize>], inc: &[BTreeMap<usize, usize>]) -> CanonicalForm {
        let mut order = vec![start];
        let mut label: BTreeMap<usize, usize> = BTreeMap::from([(start, 0)]);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for i in 1..self.rank {
                for next in [out[v].get(&i), inc[v].get(&i)].into_iter().flatten() {
                    if !label.contains_key(next) {
                        label.insert(*next, order.len());
                        order.push(*next);
                    }
                }
            }
        }
        order
            .iter()
            .map(|&v| {
                let edges = out[v].iter().map(|(&i, to)| (i, label[to])).collect();
                (self.weights[v].clone(), edges)
            })
            .collect()
    }

    /// Canonical forms of all components, sorted.
    pub fn canonical_form(&self) -> Vec<CanonicalForm> {
        let (out, inc) = self.adjacency();
        let highest: BTreeSet<usize> = self.highest_weights().into_iter().collect();
        let mut forms: Vec<CanonicalForm> = self
            .components()
            .into_iter()
            .map(|comp| {
                let starts: Vec<usize> = comp.iter().copied().filter(|v| highest.contains(v)).collect();
                let starts = if starts.is_empty() { comp } else { starts };
                starts.into_iter().map(|s| self.encode_from(s, &out, &inc)).min().unwrap()
            })
            .collect();
        forms.sort();
        forms
    }

    /// A weight- and label-preserving bijection exists.
    pub fn is_isomorphic<F: Clone + Ord + Debug + Serialize>(&self, other: &CrystalGraph<F>) -> bool {
        self.rank == other.rank
            && self.vertices.len() == other.vertices.len()
            && self.edges.len() == other.edges.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Graphviz rendering with compact JSON vertex labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let json = serde_json::to_string(v).expect("serializable vertex");
            s.push_str(&format!("  v{k} [label=\"{}\"];\n", json.replace('\\', "\\\\").replace('"', "\\\"")));
        }
        for &(a, i, b) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::key_polynomial;
    use crate::tableau::highest_weight_sskt;
    use crate::weak_eg::enumerate_rf;

    fn fac(s: &str) -> IncreasingFactorization {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn rf_operators_example() {
        let r = fac("268|14|345");
        assert_eq!(rf_pairing(&r, 1), (BTreeSet::from([4, 5]), BTreeSet::from([1])));
        assert_eq!(rf_pairing(&r, 2), (BTreeSet::new(), BTreeSet::from([8])));
        assert_eq!(rf_f(&r, 1), Some(fac("268|134|35")));
        assert_eq!(rf_e(&r, 1), Some(fac("268|4|1345")));
        assert_eq!(rf_f(&r, 2), None);
        assert_eq!(rf_e(&r, 2), Some(fac("26|148|345")));
        assert_eq!(fac("268|134|35").weight(), comp(&[2, 3, 3]));
    }

    #[test]
    fn rf_pairing_with_empty_block() {
        let r = fac("|13");
        assert_eq!(rf_pairing(&r, 1), (BTreeSet::from([1, 3]), BTreeSet::new()));
        let r = fac("13|");
        assert_eq!(rf_pairing(&r, 1), (BTreeSet::new(), BTreeSet::from([1, 3])));
    }

    #[test]
    fn rf_axioms_on_s4() {
        for w in Permutation::all(4) {
            for r in enumerate_rf(&w, 3) {
                for i in 1..3 {
                    if let Some(up) = rf_e(&r, i) {
                        assert_eq!(rf_f(&up, i).as_ref(), Some(&r));
                        assert!(up.word().is_reduced());
                        assert_eq!(up.word().product(), w);
                        let (a, b) = (r.weight(), up.weight());
                        assert_eq!(b.get(i), a.get(i) + 1);
                        assert_eq!(b.get(i + 1) + 1, a.get(i + 1));
                    }
                    if let Some(down) = rf_f(&r, i) {
                        assert_eq!(rf_e(&down, i).as_ref(), Some(&r));
                    }
                }
            }
        }
    }

    #[test]
    fn kt_e_chain() {
        let steps = [
            tab(&[&[2, 2, 2, 2, 2], &[3, 1, 1], &[], &[4, 4]]),
            tab(&[&[2, 2, 2, 2, 1], &[3, 1, 1], &[], &[4, 4]]),
            tab(&[&[2, 1, 1, 1, 1], &[3, 2, 2], &[], &[4, 4]]),
            tab(&[&[1, 1, 1, 1, 1], &[3, 2, 2], &[], &[4, 4]]),
        ];
        for pair in steps.windows(2) {
            assert_eq!(kt_e(&pair[0], 1).as_ref(), Some(&pair[1]));
        }
        assert_eq!(kt_e(&steps[3], 1), None);

        let alpha = steps[0].shape();
        let within = enumerate_sskt(&alpha, &Flag::new(vec![2, 3, 4, 4]).unwrap());
        assert!(steps.iter().all(|t| within.contains(t)));
        for pair in steps.windows(2) {
            assert_eq!(kt_f(&pair[1], 1, &within).as_ref(), Some(&pair[0]));
        }
    }

    #[test]
    fn kt_m_reads_suffixes() {
        let word: Word = "2212412432".parse().unwrap();
        assert_eq!(kt_m(&word, 1), (3, vec![1]));
        let (m, argmax) = kt_m(&"12".parse().unwrap(), 1);
        assert_eq!((m, argmax), (1, vec![2]));
        assert_eq!(kt_m(&Word::empty(), 1), (0, vec![]));
    }

    #[test]
    fn highest_weight_is_killed() {
        for alpha in WeakComposition::all_bounded(4, 6) {
            let hw = highest_weight_sskt(&alpha);
            for i in 1..6 {
                assert_eq!(kt_e(&hw, i), None, "{alpha} e_{i}");
            }
        }
    }

    #[test]
    fn sskt_crystal_example() {
        let alpha = comp(&[1, 2, 0, 1]);
        let flag = Flag::new(vec![2, 3, 4, 4]).unwrap();
        let c = KeyTableauCrystal::new(&alpha, &flag, 4).unwrap();
        let g = c.graph();
        assert_eq!(g.num_vertices(), 11);
        assert_eq!(g.highest_weights().len(), 1);
        assert_eq!(g.components().len(), 1);
        for t in c.elements() {
            for i in 1..4 {
                if let Some(u) = c.f(t, i) {
                    assert_eq!(kt_e(&u, i).as_ref(), Some(t));
                }
            }
        }
        assert!(KeyTableauCrystal::new(&alpha, &flag, 3).is_err());
    }

    #[test]
    fn sskt_character_is_key_polynomial() {
        for alpha in WeakComposition::all_bounded(4, 5) {
            let c = KeyTableauCrystal::new(&alpha, &Flag::standard(), alpha.len().max(1)).unwrap();
            let g = c.graph();
            assert_eq!(g.character(), key_polynomial(&alpha), "{alpha}");
            assert_eq!(g.components().len(), 1);
            assert_eq!(g.highest_weights(), vec![g.vertices().binary_search(&highest_weight_sskt(&alpha)).unwrap()]);
        }
    }

    #[test]
    fn empty_shape_crystal() {
        let c = KeyTableauCrystal::new(&WeakComposition::zero(), &Flag::standard(), 1).unwrap();
        let g = c.graph();
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
        assert_eq!(g.character(), IntPolynomial::one());
    }

    #[test]
    fn demazure_basics() {
        let c = FactorizationCrystal { n: 3 };
        let w = Permutation::from_oneline(vec![3, 2, 1]).unwrap();
        let all: Vec<_> = enumerate_rf(&w, 3);
        let empty = BTreeSet::new();
        assert!(demazure_op(&c, &empty, 1).is_empty());
        let some: BTreeSet<_> = all.iter().step_by(3).cloned().collect();
        for i in 1..3 {
            let once = demazure_op(&c, &some, i);
            assert!(some.is_subset(&once));
            assert_eq!(demazure_op(&c, &once, i), once);
        }
    }

    #[test]
    fn demazure_subcrystal_independent_of_word() {
        let c = FactorizationCrystal { n: 3 };
        let sigma = Permutation::longest(3);
        for w in Permutation::all(4) {
            for u in enumerate_rf(&w, 3).into_iter().filter(|u| c.is_highest_weight(u)) {
                let sets = demazure_sets_all_words(&c, &u, &sigma);
                assert_eq!(sets.len(), 2);
                assert_eq!(sets[0], sets[1]);
                let g = demazure_subcrystal(&c, &u, &Permutation::identity()).unwrap();
                assert_eq!(g.vertices(), std::slice::from_ref(&u));
                let g = demazure_subcrystal(&c, &u, &sigma).unwrap();
                let expected = IntPolynomial::x_pow(&u.weight()).isobaric_word(&sigma.reduced_word());
                assert_eq!(g.character(), expected);
            }
        }
    }

    #[test]
    fn demazure_subcrystal_rejects() {
        let c = FactorizationCrystal { n: 2 };
        let low = fac("1|");
        assert_eq!(demazure_subcrystal(&c, &low, &Permutation::identity()).unwrap_err(), Error::NotHighestWeight);
        let hw = fac("|1");
        assert!(matches!(demazure_subcrystal(&c, &hw, &Permutation::simple(2)), Err(Error::Rank { .. })));
    }

    #[test]
    fn isomorphism_and_dot() {
        let alpha = comp(&[0, 2]);
        let g1 = KeyTableauCrystal::new(&alpha, &Flag::standard(), 2).unwrap().graph();
        let g2 = KeyTableauCrystal::new(&comp(&[2]), &Flag::new(vec![2]).unwrap(), 2).unwrap().graph();
        assert!(g1.is_isomorphic(&g2));
        let g3 = KeyTableauCrystal::new(&comp(&[1, 1]), &Flag::standard(), 2).unwrap().graph();
        assert!(!g1.is_isomorphic(&g3));

        let dot = g1.to_dot();
        assert!(dot.starts_with("digraph crystal {\n"));
        assert_eq!(dot.matches("->").count(), g1.num_edges());
        assert_eq!(dot, g1.to_dot());
        assert!(dot.contains("\\\"rows\\\""));
    }

    #[test]
    fn generate_matches_subset() {
        let alpha = comp(&[1, 0, 2]);
        let c = KeyTableauCrystal::new(&alpha, &Flag::standard(), 3).unwrap();
        let g = CrystalGraph::generate(&c, [highest_weight_sskt(&alpha)]);
        assert_eq!(g, c.graph());
    }
}
