//! Flagged key polynomials `κ_(α,φ)` by four independent routes, maximal
//! factorizations `𝒲(α, φ)`, and flagged Schubert polynomials.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::combinat::{Flag, Permutation, WeakComposition, Word};
use crate::eg::column_insert_word;
use crate::error::{Error, Result};
use crate::poly::{key_polynomial, IntPolynomial};
use crate::tableau::{enumerate_sskt, key_of, std_ssyt};
use crate::weak_eg::{enumerate_rfc, yamanouchi_words};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Weight generating function of `SSKT(α, φ)`.
    Enum,
    /// `π_{φ(1)↓1} ⋯ π_{φ(k)↓k} κ_α`.
    PiChain,
    /// Recursion on the first repeated flag value.
    Recursive,
    /// Reiner–Shimozono maximal factorizations.
    Rs,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Enum, Route::PiChain, Route::Recursive, Route::Rs];

    pub fn name(self) -> &'static str {
        match self {
            Route::Enum => "enum",
            Route::PiChain => "pichain",
            Route::Recursive => "recursive",
            Route::Rs => "rs",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown route {s:?} (expected enum, pichain, recursive or rs)")))
    }
}

pub fn flagged_kappa(alpha: &WeakComposition, flag: &Flag, route: Route) -> IntPolynomial {
    match route {
        Route::Enum => flagged_kappa_enum(alpha, flag),
        Route::PiChain => flagged_kappa_pichain(alpha, flag),
        Route::Recursive => flagged_kappa_recursive(alpha, flag),
        Route::Rs => rs_flagged_kappa(alpha, flag),
    }
}

pub fn flagged_kappa_enum(alpha: &WeakComposition, flag: &Flag) -> IntPolynomial {
    enumerate_sskt(alpha, flag).iter().map(|t| IntPolynomial::x_pow(&t.weight())).sum()
}

pub fn flagged_kappa_pichain(alpha: &WeakComposition, flag: &Flag) -> IntPolynomial {
    let chain: Vec<(usize, usize)> = (1..=alpha.len()).map(|i| (flag.get(i), i)).collect();
    key_polynomial(alpha).apply_pi_chain(&chain)
}

/// The `β` with `κ_(α,φ) = κ_β`, following the recursion on `φ(1..k)`,
/// `k = ℓ(α)`.
pub fn recursive_key_index(alpha: &WeakComposition, flag: &Flag) -> WeakComposition {
    let k = alpha.len();
    let mut a = alpha.parts().to_vec();
    let mut phi = flag.prefix(k);
    while let Some(i) = (0..k.saturating_sub(1)).find(|&i| phi[i] == phi[i + 1]) {
        phi[i] -= 1;
        if a[i] > a[i + 1] {
            a.swap(i, i + 1);
        }
    }
    let top = phi.last().copied().unwrap_or(0);
    let mut beta = vec![0; top];
    for (ai, p) in a.into_iter().zip(phi) {
        beta[p - 1] = ai;
    }
    WeakComposition::new(beta)
}

pub fn flagged_kappa_recursive(alpha: &WeakComposition, flag: &Flag) -> IntPolynomial {
    key_polynomial(&recursive_key_index(alpha, flag))
}

/// A factorization `u^n ⋯ u^1` of a word into weakly increasing blocks,
/// stored left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MaximalFactorization {
    blocks: Vec<Word>,
}

impl MaximalFactorization {
    /// Checks that blocks weakly increase and that the factorization is
    /// maximal across every pair of neighbouring nonempty blocks.
    pub fn new(blocks: Vec<Word>) -> Result<Self> {
        let n = blocks.len();
        if let Some(j) = blocks.iter().position(|b| !b.is_weakly_increasing()) {
            return Err(Error::Malformed(format!("block {} is not weakly increasing", n - j)));
        }
        let f = MaximalFactorization { blocks };
        if !f.is_maximal() {
            return Err(Error::Malformed(format!("factorization {f} is not maximal")));
        }
        Ok(f)
    }

    fn is_maximal(&self) -> bool {
        self.blocks
            .iter()
            .filter(|b| !b.is_empty())
            .tuple_windows()
            .all(|(l, r)| l.last() > r.first())
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// `u^j`.
    pub fn block(&self, j: usize) -> &Word {
        &self.blocks[self.blocks.len() - j]
    }

    pub fn word(&self) -> Word {
        Word::concat(&self.blocks)
    }

    pub fn weight(&self) -> WeakComposition {
        self.word().weight()
    }

    /// No letter of `u^i` exceeds `φ(i)`.
    pub fn is_flagged(&self, flag: &Flag) -> bool {
        (1..=self.blocks.len()).all(|j| self.block(j).last().is_none_or(|x| x <= flag.get(j)))
    }
}

impl fmt::Display for MaximalFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            if b.is_empty() {
                f.write_str("()")?;
            } else {
                write!(f, "({b})")?;
            }
        }
        Ok(())
    }
}

/// `𝒲(α, φ)`, sorted.
pub fn enumerate_w(alpha: &WeakComposition, flag: &Flag) -> Vec<MaximalFactorization> {
    let k = alpha.len();
    let target = std_ssyt(&key_of(alpha)).expect("key(α) is semistandard");
    // candidate blocks u^k, ..., u^1 in reading order; for k = 0 the product
    // yields the single empty factorization
    let choices: Vec<Vec<Word>> = (1..=k)
        .rev()
        .map(|i| {
            (1..=flag.get(i))
                .combinations_with_replacement(alpha.get(i))
                .map(Word::from_vec_unchecked)
                .collect()
        })
        .collect();
    let mut out: Vec<MaximalFactorization> = choices
        .into_iter()
        .multi_cartesian_product()
        .map(|blocks| MaximalFactorization { blocks })
        .filter(|f| f.is_maximal() && column_insert_word(&f.word()).1 == target)
        .collect();
    out.sort();
    out
}

pub fn rs_flagged_kappa(alpha: &WeakComposition, flag: &Flag) -> IntPolynomial {
    enumerate_w(alpha, flag).iter().map(|u| IntPolynomial::x_pow(&u.weight())).sum()
}

/// Smallest block count with `RFC_n(w^{-1}, φ)` saturated: `φ(m − 1)` for
/// `w ∈ S_m`, at least 1.
pub fn default_block_count(w: &Permutation, flag: &Flag) -> usize {
    flag.get(w.rank().saturating_sub(1)).max(1)
}

/// `𝔖_(w,φ)`: weights of `RFC_n(w^{-1}, φ)` summed. Fails if `n` is too small
/// for the sum to be complete.
pub fn flagged_schubert(w: &Permutation, flag: &Flag, n: Option<usize>) -> Result<IntPolynomial> {
    let n = n.unwrap_or_else(|| default_block_count(w, flag));
    let v = w.inverse();
    let rfc = enumerate_rfc(&v, flag, n);
    let wider = enumerate_rfc(&v, flag, n + 1);
    if wider.len() != rfc.len() {
        return Err(Error::Rank { required: default_block_count(w, flag), got: n });
    }
    Ok(rfc.iter().map(|f| IntPolynomial::x_pow(&f.weight())).sum())
}

/// `𝔖_w` by divided differences from `𝔖_{w_0} = x^{(m−1, …, 1, 0)}`.
pub fn schubert_oracle(w: &Permutation) -> IntPolynomial {
    let m = w.rank().max(1);
    let top = IntPolynomial::x_pow(&WeakComposition::new((0..m).rev().collect()));
    let longest = Permutation::longest(m);
    let mut word = Vec::new();
    let mut cur = w.clone();
    while cur != longest {
        let i = (1..m).find(|&i| !cur.has_right_descent(i)).expect("non-longest element has an ascent");
        word.push(i);
        cur = cur.right_mul_simple(i);
    }
    top.divided_difference_word(&Word::from_vec_unchecked(word))
}

/// The multiset `{α : YR_α(w^{-1}) ≠ ∅}` with multiplicities `|YR_α(w^{-1})|`,
/// sorted.
pub fn key_expansion(w: &Permutation) -> Vec<WeakComposition> {
    yamanouchi_words(&w.inverse())
        .into_iter()
        .flat_map(|(alpha, words)| std::iter::repeat_n(alpha, words.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn flag(v: &[usize]) -> Flag {
        Flag::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> IntPolynomial {
        terms.iter().map(|&(e, c)| IntPolynomial::monomial(e.to_vec(), c)).sum()
    }

    fn example_polynomial() -> IntPolynomial {
        poly(&[
            (&[2, 1, 1], 1),
            (&[1, 2, 1], 1),
            (&[2, 1, 0, 1], 1),
            (&[1, 2, 0, 1], 1),
            (&[1, 1, 2], 1),
            (&[1, 0, 2, 1], 1),
            (&[1, 1, 1, 1], 2),
            (&[2, 0, 1, 1], 1),
            (&[0, 1, 2, 1], 1),
            (&[0, 2, 1, 1], 1),
        ])
    }

    #[test]
    fn all_routes_on_example() {
        let alpha = comp(&[1, 2, 0, 1]);
        let phi = flag(&[2, 3, 4, 4]);
        let expected = example_polynomial();
        assert_eq!(expected.num_terms(), 10);
        assert_eq!(expected.coeff(&[1, 1, 1, 1]), 2);
        for route in Route::ALL {
            assert_eq!(flagged_kappa(&alpha, &phi, route), expected, "{route}");
        }
        let standard = key_polynomial(&alpha);
        for route in Route::ALL {
            assert_eq!(flagged_kappa(&alpha, &Flag::standard(), route), standard, "{route}");
        }
    }

    #[test]
    fn zero_composition() {
        for route in Route::ALL {
            assert_eq!(flagged_kappa(&WeakComposition::zero(), &flag(&[3]), route), IntPolynomial::one());
        }
    }

    #[test]
    fn strictly_increasing_base_case() {
        let phi = flag(&[1, 3]);
        assert_eq!(recursive_key_index(&comp(&[2, 1]), &phi), comp(&[2, 0, 1]));
        assert_eq!(flagged_kappa_pichain(&comp(&[2, 1]), &phi), key_polynomial(&comp(&[2, 0, 1])));
    }

    #[test]
    fn recursion_swaps_on_descent() {
        // φ = (2,2): α_1 > α_2 swaps, then φ = (1,2) is strictly increasing
        assert_eq!(recursive_key_index(&comp(&[2, 1]), &flag(&[2, 2])), comp(&[1, 2]));
        assert_eq!(recursive_key_index(&comp(&[1, 2]), &flag(&[2, 2])), comp(&[1, 2]));
    }

    #[test]
    fn w_example() {
        let alpha = comp(&[1, 2, 0, 1]);
        let shown = |fs: &[MaximalFactorization]| fs.iter().map(ToString::to_string).collect::<Vec<_>>();
        let standard = enumerate_w(&alpha, &Flag::standard());
        assert_eq!(shown(&standard), ["(3)()(12)(1)", "(3)()(22)(1)", "(4)()(12)(1)", "(4)()(22)(1)"]);
        let phi = flag(&[2, 3, 4, 4]);
        let all = enumerate_w(&alpha, &phi);
        assert_eq!(all.len(), 11);
        let extra: Vec<String> = shown(&all).into_iter().filter(|s| !shown(&standard).contains(s)).collect();
        let mut expected = vec![
            "(3)()(23)(1)", "(4)()(33)(1)", "(4)()(23)(1)", "(4)()(13)(2)", "(4)()(13)(1)", "(4)()(33)(2)", "(4)()(23)(2)",
        ];
        expected.sort();
        assert_eq!(extra, expected);
        assert_eq!(enumerate_w(&WeakComposition::zero(), &Flag::standard()).len(), 1);
    }

    #[test]
    fn maximal_factorization_checks() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert!(MaximalFactorization::new(vec![w("3"), w(""), w("12"), w("1")]).is_ok());
        assert!(MaximalFactorization::new(vec![w("1"), w("2")]).is_err());
        assert!(MaximalFactorization::new(vec![w("21")]).is_err());
        let f = MaximalFactorization::new(vec![w("4"), w(""), w("13"), w("2")]).unwrap();
        assert!(f.is_flagged(&flag(&[2, 3, 4, 4])));
        assert!(!f.is_flagged(&Flag::standard()));
        assert_eq!(f.weight(), comp(&[1, 1, 1, 1]));
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("rsk".parse::<Route>().is_err());
    }

    #[test]
    fn schubert_small() {
        assert_eq!(flagged_schubert(&Permutation::simple(1), &Flag::standard(), None).unwrap(), IntPolynomial::var(1));
        assert_eq!(flagged_schubert(&Permutation::identity(), &Flag::standard(), None).unwrap(), IntPolynomial::one());
        for w in Permutation::all(4) {
            assert_eq!(flagged_schubert(&w, &Flag::standard(), None).unwrap(), schubert_oracle(&w), "{w}");
        }
        let w0 = Permutation::longest(3);
        assert!(flagged_schubert(&w0, &Flag::standard(), Some(1)).is_err());
    }

    #[test]
    fn schubert_is_sum_of_keys() {
        for w in Permutation::all(4) {
            let keys = key_expansion(&w);
            for phi in Flag::all_with_excess(3, 1) {
                let lhs = flagged_schubert(&w, &phi, None).unwrap();
                let rhs: IntPolynomial = keys.iter().map(|a| flagged_kappa_enum(a, &phi)).sum();
                assert_eq!(lhs, rhs, "{w} {phi}");
            }
        }
    }
}
