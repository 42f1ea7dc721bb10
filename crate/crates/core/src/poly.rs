//! Exact integer polynomials in `x_1, x_2, ...` together with the divided
//! difference operators `∂_i` and their isobaric versions `π_i`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::combinat::{sort_and_minimal_sorter, WeakComposition, Word};

/// Exponent vector with trailing zeros removed.
pub type Exponent = Vec<u32>;

fn trim(mut e: Exponent) -> Exponent {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_at(e: &[u32], i: usize) -> u32 {
    e.get(i - 1).copied().unwrap_or(0)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<Exponent, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), 1)
    }

    pub fn monomial(exponent: Exponent, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    /// `x^α`.
    pub fn x_pow(alpha: &WeakComposition) -> Self {
        Self::monomial(alpha.parts().iter().map(|&a| a as u32).collect(), 1)
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(trim(exponent)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let c = o.get_mut();
                *c = c.checked_add(coeff).expect("coefficient overflow");
                if *c == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponent: &[u32]) -> i64 {
        self.terms.get(&trim(exponent.to_vec())).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// `s_i · f`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            e.swap(i - 1, i);
            out.add_term(e, c);
        }
        out
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        &self.swap_vars(i) == self
    }

    /// `∂_i f = (f − s_i f) / (x_i − x_{i+1})`, computed term by term.
    ///
    /// For `m · x_i^a x_{i+1}^b` with `a > b` the quotient is
    /// `m · (x_i x_{i+1})^b · Σ_{k<a−b} x_i^{a−b−1−k} x_{i+1}^k`; the case
    /// `a < b` is the negative of the swapped one and `a = b` gives zero.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1, "divided differences are indexed from 1");
        let mut out = Self::zero();
        for (e, &c) in &self.terms {
            let (a, b) = (exp_at(e, i), exp_at(e, i + 1));
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            let mut base = e.clone();
            if base.len() < i + 1 {
                base.resize(i + 1, 0);
            }
            for k in 0..hi - lo {
                base[i - 1] = lo + (hi - lo - 1 - k);
                base[i] = lo + k;
                out.add_term(base.clone(), sign * c);
            }
        }
        out
    }

    /// `π_i f = ∂_i(x_i f)`.
    pub fn isobaric(&self, i: usize) -> Self {
        (&Self::var(i) * self).divided_difference(i)
    }

    /// `π_{i_1} π_{i_2} ... π_{i_k} f` for a word `i_1 ... i_k` (rightmost applied first).
    pub fn isobaric_word(&self, word: &Word) -> Self {
        word.letters().iter().rev().fold(self.clone(), |f, &i| f.isobaric(i))
    }

    /// `∂_{i_1} ... ∂_{i_k} f` (rightmost applied first).
    pub fn divided_difference_word(&self, word: &Word) -> Self {
        word.letters()
            .iter()
            .rev()
            .fold(self.clone(), |f, &i| f.divided_difference(i))
    }

    /// `π_{t↓s} f = π_{t−1} ... π_{s+1} π_s f`; the identity when `t ≤ s`.
    pub fn pi_down(&self, t: usize, s: usize) -> Self {
        (s..t).fold(self.clone(), |f, i| f.isobaric(i))
    }

    /// Applies `π_{t_1↓s_1} π_{t_2↓s_2} ... π_{t_k↓s_k}`, the last factor first.
    pub fn apply_pi_chain(&self, chain: &[(usize, usize)]) -> Self {
        chain
            .iter()
            .rev()
            .fold(self.clone(), |f, &(t, s)| f.pi_down(t, s))
    }

    /// Largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let e = (0..n)
                    .map(|k| e1.get(k).copied().unwrap_or(0) + e2.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

impl<'a> std::iter::Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + p)
    }
}

impl FromIterator<(Exponent, i64)> for IntPolynomial {
    fn from_iter<I: IntoIterator<Item = (Exponent, i64)>>(iter: I) -> Self {
        let mut p = IntPolynomial::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }
}

// JSON: sorted list of [exponent array, coefficient]
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(Exponent, i64)> = Vec::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for (e, _) in &raw {
            if !seen.insert(trim(e.clone())) {
                return Err(de::Error::custom(format!("repeated exponent {e:?}")));
            }
        }
        Ok(raw.into_iter().collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest exponent vector first
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| if p == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, p) })
                .collect();
            match (mag, vars.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                _ => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `κ_α = π_w x^λ`, where `α · w = λ` with `w` of minimal length.
pub fn key_polynomial(alpha: &WeakComposition) -> IntPolynomial {
    let (lambda, w) = sort_and_minimal_sorter(alpha);
    IntPolynomial::x_pow(&lambda).isobaric_word(&w.reduced_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{reduced_words, Permutation};
    use proptest::prelude::*;

    fn x(e: &[u32]) -> IntPolynomial {
        IntPolynomial::monomial(e.to_vec(), 1)
    }

    fn sum(terms: &[&[u32]]) -> IntPolynomial {
        terms.iter().map(|e| x(e)).sum()
    }

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn kappa_1201() -> IntPolynomial {
        sum(&[&[2, 1, 1, 0], &[1, 2, 1, 0], &[2, 1, 0, 1], &[1, 2, 0, 1]])
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(IntPolynomial::var(1).divided_difference(1), IntPolynomial::one());
        assert_eq!(x(&[2, 1]).divided_difference(1), x(&[1, 1]));
        let sym = &x(&[2, 1]) + &x(&[1, 2]);
        assert!(sym.divided_difference(1).is_zero());
        assert_eq!(sym.isobaric(1), sym);
    }

    #[test]
    fn isobaric_examples() {
        assert_eq!(IntPolynomial::var(1).isobaric(1), sum(&[&[1], &[0, 1]]));
        assert_eq!(IntPolynomial::one().isobaric(1), IntPolynomial::one());
        let f = x(&[2, 1, 1, 0]).isobaric(3).isobaric(1);
        assert_eq!(f, kappa_1201());
    }

    #[test]
    fn key_polynomial_examples() {
        assert_eq!(key_polynomial(&comp(&[1, 2, 0, 1])), kappa_1201());
        assert_eq!(key_polynomial(&comp(&[1])), IntPolynomial::var(1));
        assert_eq!(key_polynomial(&comp(&[0, 1])), sum(&[&[1], &[0, 1]]));
        assert_eq!(key_polynomial(&WeakComposition::zero()), IntPolynomial::one());
    }

    #[test]
    fn key_polynomial_independent_of_reduced_word() {
        for alpha in WeakComposition::all_bounded(4, 4) {
            let (lambda, w) = sort_and_minimal_sorter(&alpha);
            let expected = key_polynomial(&alpha);
            for rw in reduced_words(&w) {
                assert_eq!(IntPolynomial::x_pow(&lambda).isobaric_word(&rw), expected);
            }
        }
    }

    #[test]
    fn pi_chains() {
        let f = kappa_1201();
        assert_eq!(f.pi_down(1, 1), f);
        let lam = x(&[2, 1, 1, 0]);
        assert_eq!(lam.apply_pi_chain(&[(2, 1)]), lam.isobaric(1));
        assert_eq!(lam.apply_pi_chain(&[(2, 1)]), key_polynomial(&comp(&[1, 2, 1])));
        let chained = f.apply_pi_chain(&[(2, 1), (3, 2), (4, 3), (4, 4)]);
        let expected = sum(&[
            &[2, 1, 1, 0],
            &[1, 2, 1, 0],
            &[2, 1, 0, 1],
            &[1, 2, 0, 1],
            &[1, 1, 2, 0],
            &[1, 0, 2, 1],
            &[1, 1, 1, 1],
            &[1, 1, 1, 1],
            &[2, 0, 1, 1],
            &[0, 1, 2, 1],
            &[0, 2, 1, 1],
        ]);
        assert_eq!(expected.coeff(&[1, 1, 1, 1]), 2);
        assert_eq!(chained, expected);
    }

    #[test]
    fn key_polynomial_pi_recursion() {
        // π_i κ_α = κ_{α s_i} if α_i > α_{i+1}, else κ_α
        for alpha in WeakComposition::all_bounded(4, 5) {
            let k = key_polynomial(&alpha);
            for i in 1..4 {
                let expected = if alpha.get(i) > alpha.get(i + 1) {
                    key_polynomial(&alpha.act_simple(i))
                } else {
                    k.clone()
                };
                assert_eq!(k.isobaric(i), expected, "α = {alpha}, i = {i}");
            }
        }
    }

    #[test]
    fn schubert_longest_of_s3_is_monomial_route() {
        let top = x(&[2, 1]);
        let w0 = Permutation::longest(3);
        assert_eq!(top.divided_difference_word(&w0.reduced_word()), IntPolynomial::one());
    }

    #[test]
    fn display_and_json() {
        let p = &x(&[2, 1]) - &(&IntPolynomial::one() + &IntPolynomial::one());
        assert_eq!(p.to_string(), "x1^2*x2 - 2");
        let json = serde_json::to_string(&kappa_1201()).unwrap();
        assert_eq!(json, "[[[1,2,0,1],1],[[1,2,1],1],[[2,1,0,1],1],[[2,1,1],1]]");
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, kappa_1201());
        assert!(serde_json::from_str::<IntPolynomial>("[[[1],1],[[1,0],2]]").is_err());
    }

    fn monomial_strategy() -> impl Strategy<Value = Exponent> {
        prop::collection::vec(0u32..=3, 1..=4).prop_filter("degree ≤ 6", |e| e.iter().sum::<u32>() <= 6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn quotient_times_divisor_recovers_numerator(e in monomial_strategy(), i in 1usize..4) {
            let f = IntPolynomial::monomial(e, 1);
            let q = f.divided_difference(i);
            let divisor = &IntPolynomial::var(i) - &IntPolynomial::var(i + 1);
            prop_assert_eq!(&q * &divisor, &f - &f.swap_vars(i));
        }

        #[test]
        fn nil_and_idempotent_relations(e in monomial_strategy(), i in 1usize..4) {
            let f = IntPolynomial::monomial(e, 1);
            prop_assert!(f.divided_difference(i).divided_difference(i).is_zero());
            let p = f.isobaric(i);
            prop_assert_eq!(p.isobaric(i), p);
        }

        #[test]
        fn braid_relations(e in monomial_strategy(), i in 1usize..3) {
            let f = IntPolynomial::monomial(e, 1);
            let d = |g: &IntPolynomial, a: usize| g.divided_difference(a);
            prop_assert_eq!(d(&d(&d(&f, i), i + 1), i), d(&d(&d(&f, i + 1), i), i + 1));
            let p = |g: &IntPolynomial, a: usize| g.isobaric(a);
            prop_assert_eq!(p(&p(&p(&f, i), i + 1), i), p(&p(&p(&f, i + 1), i), i + 1));
            if i + 3 <= 4 {
                prop_assert_eq!(d(&d(&f, i), i + 2), d(&d(&f, i + 2), i));
            }
        }
    }
}
