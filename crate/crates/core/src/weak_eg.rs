//! Weak descent tableaux, Yamanouchi words, the lift operation and weak
//! Edelman–Greene insertion `ρ^• ↦ (P̂, Q̂)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::combinat::{ck_class, Flag, Permutation, WeakComposition, Word};
use crate::eg::{eg_insert, IncreasingFactorization};
use crate::error::{Error, Result};
use crate::tableau::{std_key, Tableau};

/// Places nonempty blocks top-down: each goes to the row of its first letter
/// if that is strictly below the previous block, otherwise directly below it.
fn place_blocks<'a>(blocks: impl IntoIterator<Item = &'a Word>) -> Tableau {
    let mut placed: Vec<(i64, &Word)> = Vec::new();
    for b in blocks {
        let Some(first) = b.first() else { continue };
        let row = match placed.last() {
            Some(&(prev, _)) if first as i64 >= prev => prev - 1,
            _ => first as i64,
        };
        placed.push((row, b));
    }
    let Some(&(base, _)) = placed.last() else {
        return Tableau::empty();
    };
    let top = placed[0].0;
    let mut rows = vec![Vec::new(); (top - base + 1) as usize];
    for (r, b) in placed {
        rows[(r - base) as usize] = b.letters().to_vec();
    }
    Tableau::from_parts(base, rows)
}

/// `WeakDesTab(ρ)`: the runs of `ρ` placed top-down.
pub fn weak_descent_tableau(word: &Word) -> Result<Tableau> {
    word.ensure_reduced()?;
    Ok(place_blocks(IncreasingFactorization::runs(word).blocks()))
}

/// Whether the weak descent tableau reaches a row `≤ 0`.
pub fn is_virtual(word: &Word) -> Result<bool> {
    Ok(weak_descent_tableau(word)?.has_nonpositive_boxes())
}

/// `des(ρ)`, or `None` (the empty value `∅`) when `ρ` is virtual.
pub fn des(word: &Word) -> Result<Option<WeakComposition>> {
    let t = weak_descent_tableau(word)?;
    Ok((!t.has_nonpositive_boxes()).then(|| t.shape()))
}

/// The Yamanouchi members of a Coxeter–Knuth class: non-virtual words whose
/// descent composition is dominated by that of every other non-virtual member.
pub fn yamanouchi_in_class(class: &BTreeSet<Word>) -> Vec<Word> {
    let candidates: Vec<(Word, WeakComposition)> = class
        .iter()
        .filter_map(|w| des(w).ok().flatten().map(|d| (w.clone(), d)))
        .collect();
    candidates
        .iter()
        .filter(|(_, d)| candidates.iter().all(|(_, e)| d.dominated_by(e)))
        .map(|(w, _)| w.clone())
        .collect()
}

/// Whether `ρ` is the minimal non-virtual member of its class.
pub fn is_yamanouchi(word: &Word) -> Result<bool> {
    let Some(d) = des(word)? else {
        return Ok(false);
    };
    let class = ck_class(word)?;
    Ok(class
        .iter()
        .filter_map(|w| des(w).ok().flatten())
        .all(|e| d.dominated_by(&e)))
}

/// Yamanouchi words of `w`, grouped by descent composition. Each word is
/// `row(P̂(ρ))` for the members `ρ` of its class.
pub fn yamanouchi_words(w: &Permutation) -> BTreeMap<WeakComposition, BTreeSet<Word>> {
    let mut out: BTreeMap<WeakComposition, BTreeSet<Word>> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for rho in crate::combinat::reduced_words(w) {
        let p = eg_insert(&rho).expect("reduced");
        if !seen.insert(p.clone()) {
            continue;
        }
        let hat = lift_tableau(&p);
        out.entry(hat.shape()).or_default().insert(hat.row_word());
    }
    out
}

/// `YR_α(w)`.
pub fn yr_alpha(w: &Permutation, alpha: &WeakComposition) -> BTreeSet<Word> {
    yamanouchi_words(w).remove(alpha).unwrap_or_default()
}

/// `lift(τ, σ)` on a pair of increasing words.
pub fn lift_pair(tau: &Word, sigma: &Word) -> Result<(Word, Word)> {
    if !tau.is_strictly_increasing() || !sigma.is_strictly_increasing() {
        return Err(Error::Malformed(format!("lift needs increasing words, got {tau} and {sigma}")));
    }
    let (t, s) = (tau.letters(), sigma.letters());
    // partner[i] = index in τ paired with σ_i
    let mut partner: Vec<Option<usize>> = vec![None; s.len()];
    let (mut t_end, mut s_end) = (t.len(), s.len());
    while t_end > 0 {
        let x = t[t_end - 1];
        match s[..s_end].iter().rposition(|&y| y <= x) {
            None => break,
            Some(i) => {
                partner[i] = Some(t_end - 1);
                t_end -= 1;
                s_end = i;
            }
        }
    }
    let tau0 = &t[..t_end];

    // σ splits into runs of paired letters σ^(1), …, σ^(k+1) separated by the
    // unpaired letters x_1 < … < x_k
    let mut segments: Vec<Vec<usize>> = vec![Vec::new()];
    let mut unpaired = Vec::new();
    for (i, p) in partner.iter().enumerate() {
        match p {
            Some(_) => segments.last_mut().unwrap().push(i),
            None => {
                unpaired.push(s[i]);
                segments.push(Vec::new());
            }
        }
    }

    let mut left: Vec<usize> = tau0.to_vec();
    let mut right: Vec<usize> = Vec::with_capacity(s.len());
    for (j, seg) in segments.iter().enumerate() {
        let tau_seg: Vec<usize> = seg.iter().map(|&i| t[partner[i].unwrap()]).collect();
        let sig_seg: Vec<usize> = seg.iter().map(|&i| s[i]).collect();
        if j > 0 {
            let x = unpaired[j - 1];
            left.push(x);
            let b = if sig_seg.first() == Some(&(x + 1)) {
                (0..seg.len())
                    .take_while(|&q| tau_seg[q] == x + q + 1 && sig_seg[q] == x + q + 1)
                    .count()
            } else {
                0
            };
            right.extend(sig_seg.iter().enumerate().map(|(q, &y)| if q < b { y - 1 } else { y }));
        } else {
            right.extend(&sig_seg);
        }
        left.extend(tau_seg);
    }
    Ok((Word::from_vec_unchecked(left), Word::from_vec_unchecked(right)))
}

/// `lift_i`: lifts blocks `i + 1` and `i` if both are nonempty and the new
/// block `i + 1` keeps its first letter; otherwise the identity.
pub fn lift_i(f: &IncreasingFactorization, i: usize) -> IncreasingFactorization {
    assert!(i >= 1 && i < f.num_blocks(), "lift_i needs 1 ≤ i < k");
    let (upper, lower) = (f.block(i + 1), f.block(i));
    if upper.is_empty() || lower.is_empty() {
        return f.clone();
    }
    let (new_upper, new_lower) = lift_pair(upper, lower).expect("blocks are increasing");
    if new_upper.first() != upper.first() {
        return f.clone();
    }
    let mut out = f.clone();
    *out.block_mut(i + 1) = new_upper;
    *out.block_mut(i) = new_lower;
    out
}

/// `lift_{[i,j]} = lift_j ∘ … ∘ lift_i`.
pub fn lift_seq(f: &IncreasingFactorization, i: usize, j: usize) -> IncreasingFactorization {
    (i..=j).fold(f.clone(), |g, m| lift_i(&g, m))
}

/// Largest `j` such that `lift_{[i,j]}` acts faithfully, if any.
fn faithful_reach(f: &IncreasingFactorization, i: usize) -> Option<usize> {
    let mut cur = f.clone();
    let mut reach = None;
    for m in i..f.num_blocks() {
        let next = lift_i(&cur, m);
        if next == cur {
            break;
        }
        reach = Some(m);
        cur = next;
    }
    reach
}

/// The factorization lifting sequences `[i_n, j_n]` chosen at each step.
pub fn lift_sequences(f: &IncreasingFactorization) -> (IncreasingFactorization, Vec<(usize, usize)>) {
    let mut cur = f.clone();
    let mut steps = Vec::new();
    loop {
        let reaches: Vec<(usize, usize)> = (1..cur.num_blocks())
            .filter_map(|i| faithful_reach(&cur, i).map(|j| (i, j)))
            .collect();
        let Some(j) = reaches.iter().map(|&(_, j)| j).max() else {
            return (cur, steps);
        };
        let i = reaches.iter().find(|&&(_, r)| r >= j).map(|&(i, _)| i).unwrap();
        cur = lift_seq(&cur, i, j);
        steps.push((i, j));
    }
}

/// `lift(ρ^•)`: apply faithful lifting sequences, largest `j` first and then
/// smallest `i`, until no `lift_i` acts.
pub fn lift_full(f: &IncreasingFactorization) -> IncreasingFactorization {
    lift_sequences(f).0
}

/// `lift(T)` for an increasing tableau: lift the run factorization of
/// `row(T)` and place each block `η` in row `η_1`.
pub fn lift_tableau(t: &Tableau) -> Tableau {
    let lifted = lift_full(&IncreasingFactorization::runs(&t.row_word()));
    place_blocks(lifted.blocks())
}

/// `P̂(ρ) = lift(P(ρ))`.
pub fn weak_p(word: &Word) -> Result<Tableau> {
    Ok(lift_tableau(&eg_insert(word)?))
}

/// `P̂` via the Coxeter–Knuth closure: the weak descent tableau of the
/// Yamanouchi member of the class of `ρ`.
pub fn weak_p_by_closure(word: &Word) -> Result<Tableau> {
    let class = ck_class(word)?;
    match yamanouchi_in_class(&class).as_slice() {
        [y] => weak_descent_tableau(y),
        other => Err(Error::Malformed(format!(
            "class of {word} has {} Yamanouchi words",
            other.len()
        ))),
    }
}

/// `(P̂(ρ^•), Q̂(ρ^•))`; `Q̂` holds `j` in the boxes that appear when block `j`
/// is appended.
pub fn weak_insertion_pair(f: &IncreasingFactorization) -> Result<(Tableau, Tableau)> {
    f.word().ensure_reduced()?;
    let mut prefix = Word::empty();
    let mut prev = Tableau::empty();
    let mut q_boxes: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    let k = f.num_blocks();
    for (s, block) in f.blocks().iter().enumerate() {
        if block.is_empty() {
            continue;
        }
        prefix = Word::concat([&prefix, block]);
        let cur = weak_p(&prefix)?;
        let before: BTreeSet<(i64, usize)> = prev.boxes().map(|(r, c, _)| (r, c)).collect();
        let after: BTreeSet<(i64, usize)> = cur.boxes().map(|(r, c, _)| (r, c)).collect();
        if !before.is_subset(&after) || after.len() != before.len() + block.len() {
            return Err(Error::ShapeNesting { prefix: k - s });
        }
        for b in after.difference(&before) {
            q_boxes.insert(*b, k - s);
        }
        prev = cur;
    }
    let q = prev.map_entries(|_| 0);
    let mut q = q;
    for ((r, c), v) in q_boxes {
        q.set(r, c, v);
    }
    Ok((prev, q))
}

/// `Q̂(ρ^•)`.
pub fn weak_q(f: &IncreasingFactorization) -> Result<Tableau> {
    weak_insertion_pair(f).map(|(_, q)| q)
}

/// `Q̂(ρ)`, the recording tableau of the trivial factorization.
pub fn weak_q_word(word: &Word) -> Result<Tableau> {
    weak_q(&IncreasingFactorization::trivial(word))
}

/// All `φ`-flagged factorizations of reduced words of `w` into `n` blocks.
pub fn enumerate_rfc(w: &Permutation, flag: &Flag, n: usize) -> Vec<IncreasingFactorization> {
    let mut out = Vec::new();
    for rho in crate::combinat::reduced_words(w) {
        factorizations_into(&rho, n, &mut |f| {
            if f.is_flagged(flag) {
                out.push(f);
            }
        });
    }
    out.sort();
    out
}

/// `RF_n(w)`: every factorization of every reduced word of `w` into `n`
/// blocks, sorted.
pub fn enumerate_rf(w: &Permutation, n: usize) -> Vec<IncreasingFactorization> {
    let mut out = Vec::new();
    for rho in crate::combinat::reduced_words(w) {
        factorizations_into(&rho, n, &mut |f| out.push(f));
    }
    out.sort();
    out
}

/// Every increasing factorization of `word` into exactly `n` blocks.
pub fn factorizations(word: &Word, n: usize) -> Vec<IncreasingFactorization> {
    let mut out = Vec::new();
    factorizations_into(word, n, &mut |f| out.push(f));
    out
}

fn factorizations_into(word: &Word, n: usize, emit: &mut impl FnMut(IncreasingFactorization)) {
    fn go(
        letters: &[usize],
        start: usize,
        remaining: usize,
        acc: &mut Vec<Word>,
        emit: &mut impl FnMut(IncreasingFactorization),
    ) {
        if remaining == 1 {
            let last = &letters[start..];
            if last.windows(2).all(|p| p[0] < p[1]) {
                acc.push(Word::from_vec_unchecked(last.to_vec()));
                emit(IncreasingFactorization::from_blocks_unchecked(acc.clone()));
                acc.pop();
            }
            return;
        }
        let mut end = start;
        loop {
            acc.push(Word::from_vec_unchecked(letters[start..end].to_vec()));
            go(letters, end, remaining - 1, acc, emit);
            acc.pop();
            if end == letters.len() || (end > start && letters[end - 1] >= letters[end]) {
                break;
            }
            end += 1;
        }
    }
    if n == 0 {
        if word.is_empty() {
            emit(IncreasingFactorization::from_blocks_unchecked(Vec::new()));
        }
        return;
    }
    go(word.letters(), 0, n, &mut Vec::new(), emit);
}

/// Inverts weak EG insertion: given `P̂` (a Yamanouchi weak descent tableau)
/// and a key tableau `Q̂`, rebuilds the `n`-block factorization.
///
/// The word is the unique member of the class of `row(P̂)` whose `Q̂` equals
/// `std_key(Q̂)`; it is then cut according to the weight of `Q̂`.
pub fn weak_insertion_inverse(p_hat: &Tableau, q_hat: &Tableau, n: usize) -> Result<IncreasingFactorization> {
    let class = ck_class(&p_hat.row_word())?;
    let target = std_key(q_hat);
    let mut found = None;
    for rho in &class {
        if weak_q_word(rho)? == target {
            if found.is_some() {
                return Err(Error::Malformed(format!("standard recording tableau repeats in the class of {}", p_hat.row_word())));
            }
            found = Some(rho.clone());
        }
    }
    let rho = found.ok_or_else(|| Error::Malformed("no word has this recording tableau".into()))?;
    IncreasingFactorization::with_lengths(&rho, q_hat.weight().parts(), n)
}
