//! Exhaustive sweeps checking the main identities on small parameters.
//!
//! Every suite enumerates its instances up front, maps them through
//! [`Execution`], and merges failures in instance order, so reports do not
//! depend on the execution strategy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::{ck_class, reduced_words, Flag, Permutation, WeakComposition};
use crate::crystal::{
    demazure_chain, demazure_op, demazure_sets_all_words, kt_e, rf_e, Crystal, FactorizationCrystal, KeyTableauCrystal,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::flagged::{
    default_block_count, flagged_kappa_enum, flagged_kappa_pichain, flagged_kappa_recursive, flagged_schubert,
    key_expansion, recursive_key_index, rs_flagged_kappa, schubert_oracle,
};
use crate::poly::{key_polynomial, IntPolynomial};
use crate::tableau::{enumerate_sskt, Tableau};
use crate::weak_eg::{
    enumerate_rf, enumerate_rfc, weak_descent_tableau, weak_insertion_inverse, weak_insertion_pair, weak_p,
    weak_p_by_closure, yamanouchi_in_class, yamanouchi_words,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Eq1,
    Bijection,
    Intertwine,
    DemazureChain,
    DemazureCharacter,
    RsEquality,
    SchubertKey,
    Recursion,
    LiftRoundtrip,
    Sskt,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Eq1,
        Suite::Bijection,
        Suite::Intertwine,
        Suite::DemazureChain,
        Suite::DemazureCharacter,
        Suite::RsEquality,
        Suite::SchubertKey,
        Suite::Recursion,
        Suite::LiftRoundtrip,
        Suite::Sskt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq1 => "eq1",
            Suite::Bijection => "bijection",
            Suite::Intertwine => "intertwine",
            Suite::DemazureChain => "demazure-chain",
            Suite::DemazureCharacter => "demazure-character",
            Suite::RsEquality => "rs-equality",
            Suite::SchubertKey => "schubert-key",
            Suite::Recursion => "recursion",
            Suite::LiftRoundtrip => "lift-roundtrip",
            Suite::Sskt => "sskt",
        }
    }

    /// What the suite checks, in one line.
    pub fn statement(self) -> &'static str {
        match self {
            Suite::Eq1 => "π_i κ_α = κ_{α·s_i} if α_i > α_{i+1}, else κ_α",
            Suite::Bijection => "ρ• ↦ (P̂, Q̂) is a bijection RFC_n(w,φ) → ⊔_α YR_α(w) × SSKT(α,φ)",
            Suite::Intertwine => "P̂(e_i ρ•) = P̂(ρ•) and Q̂(e_i ρ•) = e_i Q̂(ρ•)",
            Suite::DemazureChain => "RFC_n(w,φ) = 𝔇_{t_1↓1} ⋯ 𝔇_{t_n↓n} RFC_n(w), t_i = min(n, φ(i))",
            Suite::DemazureCharacter => "ch 𝔇_σ{u•} = π_σ x^{wt(u•)} for highest weight u•",
            Suite::RsEquality => "Σ_{𝒲(α,φ)} x^wt = κ_(α,φ)",
            Suite::SchubertKey => "𝔖_w matches the divided-difference recursion; 𝔖_(w,φ) = Σ κ_(α,φ)",
            Suite::Recursion => "all four routes to κ_(α,φ) agree; SSKT crystals match under the recursion",
            Suite::LiftRoundtrip => "P̂(ρ) = lift(P(ρ)) = WeakDesTab(Yamanouchi word); one Yamanouchi word per class",
            Suite::Sskt => "Σ_{SSKT(α)} x^wt = κ_α; SSKT(α,φ) connected with the predicted highest weight",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds. `None` picks the suite's own default.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Permutations range over `S_sn`.
    pub sn: usize,
    /// Flags satisfy `φ(i) ≤ i + flag_excess`.
    pub flag_excess: Option<usize>,
    /// Bound on `|α|`.
    pub deg: usize,
    /// Bound on `ℓ(α)`.
    pub len: Option<usize>,
    pub max_instances: Option<usize>,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { sn: 4, flag_excess: None, deg: 5, len: None, max_instances: None, execution: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub statement: String,
    pub params: BTreeMap<String, usize>,
    /// Instances swept.
    pub cases: usize,
    /// Individual identities checked.
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "{} [{}]", self.theorem, params.join(", "))?;
        writeln!(f, "  {}", self.statement)?;
        write!(f, "  {} cases, {} checks, {} failures", self.cases, self.checks, self.failures.len())?;
        for fail in &self.failures {
            write!(f, "\n  FAIL {fail}")?;
        }
        Ok(())
    }
}

/// Outcome of one instance.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

pub fn run(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    match suite {
        Suite::Eq1 => eq1(config),
        Suite::Bijection => bijection(config),
        Suite::Intertwine => intertwine(config),
        Suite::DemazureChain => demazure_chain_suite(config),
        Suite::DemazureCharacter => demazure_character(config),
        Suite::RsEquality => rs_equality(config),
        Suite::SchubertKey => schubert_key(config),
        Suite::Recursion => recursion(config),
        Suite::LiftRoundtrip => lift_roundtrip(config),
        Suite::Sskt => sskt(config),
    }
}

fn sweep<T: Sync>(
    suite: Suite,
    config: &VerifyConfig,
    params: &[(&str, usize)],
    cases: &[T],
    check: impl Fn(&T, &mut Tally) + Sync + Send,
) -> Result<VerificationReport> {
    if let Some(limit) = config.max_instances {
        if cases.len() > limit {
            return Err(Error::TooManyInstances { count: cases.len(), limit });
        }
    }
    let tallies = config.execution.map(cases, |c| {
        let mut t = Tally::default();
        check(c, &mut t);
        t
    });
    Ok(VerificationReport {
        theorem: suite.name().to_string(),
        statement: suite.statement().to_string(),
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        cases: cases.len(),
        checks: tallies.iter().map(|t| t.checks).sum(),
        failures: tallies.into_iter().flat_map(|t| t.failures).collect(),
    })
}

/// Flags on `[m]` with `φ(i) ≤ i + excess`.
fn flags(m: usize, excess: usize) -> Vec<Flag> {
    Flag::all_with_excess(m, excess)
}

/// `(w, φ)` over `S_sn` and flags on `[sn − 1]`.
fn perm_flag_cases(config: &VerifyConfig, excess: usize) -> Vec<(Permutation, Flag)> {
    let fl = flags(config.sn.saturating_sub(1).max(1), excess);
    Permutation::all(config.sn)
        .into_iter()
        .flat_map(|w| fl.iter().map(move |f| (w.clone(), f.clone())))
        .collect()
}

/// Block count for RFC sweeps: `φ(sn − 1)`.
fn block_count(config: &VerifyConfig, flag: &Flag) -> usize {
    flag.get(config.sn.saturating_sub(1)).max(1)
}

fn eq1(config: &VerifyConfig) -> Result<VerificationReport> {
    let len = config.len.unwrap_or(4);
    let cases = WeakComposition::all_bounded(len, config.deg);
    sweep(Suite::Eq1, config, &[("deg", config.deg), ("len", len)], &cases, |alpha, t| {
        let kappa = key_polynomial(alpha);
        for i in 1..len {
            let expected = if alpha.get(i) > alpha.get(i + 1) { key_polynomial(&alpha.act_simple(i)) } else { kappa.clone() };
            t.check(kappa.isobaric(i) == expected, || format!("α={alpha} i={i}"));
        }
    })
}

fn bijection(config: &VerifyConfig) -> Result<VerificationReport> {
    let excess = config.flag_excess.unwrap_or(1);
    let cases = perm_flag_cases(config, excess);
    let params = [("sn", config.sn), ("flag_excess", excess)];
    sweep(Suite::Bijection, config, &params, &cases, |(w, flag), t| {
        let n = block_count(config, flag);
        let rfc = enumerate_rfc(w, flag, n);
        let mut image = BTreeSet::new();
        for f in &rfc {
            match weak_insertion_pair(f) {
                Ok((p, q)) => {
                    t.check(q.is_flagged(flag), || format!("w={w} φ={flag}: Q̂({f}) not flagged"));
                    let back = weak_insertion_inverse(&p, &q, n);
                    t.check(back.as_ref() == Ok(f), || format!("w={w} φ={flag}: inverse of {f} gave {back:?}"));
                    image.insert((p, q));
                }
                Err(e) => t.check(false, || format!("w={w} φ={flag}: {f}: {e}")),
            }
        }
        t.check(image.len() == rfc.len(), || format!("w={w} φ={flag}: map not injective"));

        let mut expected = BTreeSet::new();
        for (alpha, words) in yamanouchi_words(w) {
            let sskt: Vec<Tableau> = enumerate_sskt(&alpha, flag)
                .into_iter()
                .filter(|q| q.boxes().all(|(_, _, v)| v <= n))
                .collect();
            for y in words {
                let p = weak_descent_tableau(&y).expect("Yamanouchi words are reduced");
                expected.extend(sskt.iter().map(|q| (p.clone(), q.clone())));
            }
        }
        t.check(image == expected, || {
            format!("w={w} φ={flag} n={n}: image has {} pairs, expected {}", image.len(), expected.len())
        });
    })
}

fn intertwine(config: &VerifyConfig) -> Result<VerificationReport> {
    let excess = config.flag_excess.unwrap_or(1);
    let cases = perm_flag_cases(config, excess);
    let params = [("sn", config.sn), ("flag_excess", excess)];
    sweep(Suite::Intertwine, config, &params, &cases, |(w, flag), t| {
        let n = block_count(config, flag);
        for f in enumerate_rfc(w, flag, n) {
            let (p, q) = weak_insertion_pair(&f).expect("flagged factorizations insert");
            for i in 1..n {
                match rf_e(&f, i) {
                    Some(up) => {
                        t.check(up.is_flagged(flag), || format!("w={w} φ={flag}: e_{i}({f}) = {up} not flagged"));
                        let (p2, q2) = weak_insertion_pair(&up).expect("e_i keeps reduced words");
                        t.check(p2 == p, || format!("w={w} φ={flag}: P̂ changed under e_{i} on {f}"));
                        t.check(kt_e(&q, i).as_ref() == Some(&q2), || format!("w={w} φ={flag}: Q̂(e_{i} {f}) ≠ e_{i} Q̂"));
                    }
                    None => t.check(kt_e(&q, i).is_none(), || format!("w={w} φ={flag}: e_{i} kills {f} but not Q̂")),
                }
            }
        }
    })
}

fn demazure_chain_suite(config: &VerifyConfig) -> Result<VerificationReport> {
    let excess = config.flag_excess.unwrap_or(1);
    let cases = perm_flag_cases(config, excess);
    let params = [("sn", config.sn), ("flag_excess", excess)];
    sweep(Suite::DemazureChain, config, &params, &cases, |(w, flag), t| {
        let n = block_count(config, flag);
        let crystal = FactorizationCrystal { n };
        let target: BTreeSet<_> = enumerate_rfc(w, flag, n).into_iter().collect();
        let base: BTreeSet<_> = enumerate_rfc(w, &Flag::standard(), n).into_iter().collect();
        let chain: Vec<(usize, usize)> = (1..=n).map(|i| (n.min(flag.get(i)), i)).collect();
        let got = demazure_chain(&crystal, &base, &chain);
        t.check(got == target, || format!("w={w} φ={flag} n={n}: chain gives {} elements, RFC has {}", got.len(), target.len()));

        // single step: the smallest i with φ(i) > i
        if let Some(i) = (1..=n).find(|&i| flag.get(i) > i) {
            let j = flag.get(i) - 1;
            let lowered = flag.minus_e(i).expect("φ(i) > i keeps a flag");
            let smaller: BTreeSet<_> = enumerate_rfc(w, &lowered, n).into_iter().collect();
            let expected = if i > n || j >= n { smaller } else { demazure_op(&crystal, &smaller, j) };
            t.check(expected == target, || format!("w={w} φ={flag} n={n}: single Demazure step at i={i} fails"));
        }
    })
}

fn demazure_character(config: &VerifyConfig) -> Result<VerificationReport> {
    let n = config.sn.saturating_sub(1).max(1);
    let cases = Permutation::all(config.sn);
    let params = [("sn", config.sn), ("n", n)];
    let sigmas = Permutation::all(n);
    sweep(Suite::DemazureCharacter, config, &params, &cases, |w, t| {
        let crystal = FactorizationCrystal { n };
        for u in enumerate_rf(w, n).into_iter().filter(|u| crystal.is_highest_weight(u)) {
            let top = IntPolynomial::x_pow(&u.weight());
            for sigma in &sigmas {
                let sets = demazure_sets_all_words(&crystal, &u, sigma);
                t.check(sets.windows(2).all(|p| p[0] == p[1]), || format!("w={w} u={u} σ={sigma}: depends on the reduced word"));
                let ch: IntPolynomial = sets[0].iter().map(|b| IntPolynomial::x_pow(&b.weight())).sum();
                t.check(ch == top.isobaric_word(&sigma.reduced_word()), || format!("w={w} u={u} σ={sigma}: character mismatch"));
            }
        }
    })
}

/// `(α, φ)` with `|α| ≤ deg`, `ℓ(α) ≤ len`, flags on `[len]`.
fn comp_flag_cases(config: &VerifyConfig, len: usize, excess: usize) -> Vec<(WeakComposition, Flag)> {
    let fl = flags(len, excess);
    WeakComposition::all_bounded(len, config.deg)
        .into_iter()
        .flat_map(|a| fl.iter().map(move |f| (a.clone(), f.clone())))
        .collect()
}

fn rs_equality(config: &VerifyConfig) -> Result<VerificationReport> {
    let (len, excess) = (config.len.unwrap_or(3), config.flag_excess.unwrap_or(2));
    let cases = comp_flag_cases(config, len, excess);
    let params = [("deg", config.deg), ("len", len), ("flag_excess", excess)];
    sweep(Suite::RsEquality, config, &params, &cases, |(alpha, flag), t| {
        t.check(rs_flagged_kappa(alpha, flag) == flagged_kappa_enum(alpha, flag), || format!("α={alpha} φ={flag}"));
    })
}

fn schubert_key(config: &VerifyConfig) -> Result<VerificationReport> {
    let excess = config.flag_excess.unwrap_or(1);
    let cases = Permutation::all(config.sn);
    let fl = flags(config.sn.saturating_sub(1).max(1), excess);
    let params = [("sn", config.sn), ("flag_excess", excess)];
    sweep(Suite::SchubertKey, config, &params, &cases, |w, t| {
        let standard = flagged_schubert(w, &Flag::standard(), None);
        t.check(standard.as_ref() == Ok(&schubert_oracle(w)), || format!("w={w}: 𝔖_w differs from the ∂ recursion"));
        let keys = key_expansion(w);
        for flag in &fl {
            let rhs: IntPolynomial = keys.iter().map(|a| flagged_kappa_enum(a, flag)).sum();
            match flagged_schubert(w, flag, None) {
                Ok(lhs) => t.check(lhs == rhs, || format!("w={w} φ={flag}: 𝔖_(w,φ) ≠ Σ κ_(α,φ)")),
                Err(e) => t.check(false, || format!("w={w} φ={flag}: {e}")),
            }
            let n = default_block_count(w, flag);
            t.check(n >= 1, || format!("w={w} φ={flag}: bad block count"));
        }
    })
}

fn recursion(config: &VerifyConfig) -> Result<VerificationReport> {
    let (len, excess) = (config.len.unwrap_or(3), config.flag_excess.unwrap_or(2));
    let cases = comp_flag_cases(config, len, excess);
    let params = [("deg", config.deg), ("len", len), ("flag_excess", excess)];
    sweep(Suite::Recursion, config, &params, &cases, |(alpha, flag), t| {
        let base = flagged_kappa_enum(alpha, flag);
        let ctx = || format!("α={alpha} φ={flag}");
        t.check(base.is_positive(), || format!("{}: not monomial positive", ctx()));
        t.check(flagged_kappa_pichain(alpha, flag) == base, || format!("{}: π-chain differs", ctx()));
        t.check(flagged_kappa_recursive(alpha, flag) == base, || format!("{}: recursion differs", ctx()));
        t.check(rs_flagged_kappa(alpha, flag) == base, || format!("{}: 𝒲 route differs", ctx()));
        let beta = recursive_key_index(alpha, flag);
        t.check(key_polynomial(&beta) == base, || format!("{}: not equal to κ_{beta}", ctx()));

        // one recursion step as a crystal isomorphism
        let k = alpha.len();
        let phi = flag.prefix(k);
        if let Some(i) = (1..k).find(|&i| phi[i - 1] == phi[i]) {
            let lowered = Flag::new(phi.clone()).and_then(|f| f.minus_e(i)).expect("first repeat can be lowered");
            let next = if alpha.get(i) > alpha.get(i + 1) { alpha.act_simple(i) } else { alpha.clone() };
            let n = flag.get(k).max(1);
            let g1 = KeyTableauCrystal::new(alpha, flag, n).expect("rank is φ(k)").graph();
            let g2 = KeyTableauCrystal::new(&next, &lowered, n).expect("rank only drops").graph();
            t.check(g1.character() == g2.character(), || format!("{}: characters differ after step {i}", ctx()));
            t.check(g1.is_isomorphic(&g2), || format!("{}: crystals not isomorphic after step {i}", ctx()));
        }
    })
}

fn lift_roundtrip(config: &VerifyConfig) -> Result<VerificationReport> {
    let cases = Permutation::all(config.sn);
    sweep(Suite::LiftRoundtrip, config, &[("sn", config.sn)], &cases, |w, t| {
        let mut remaining = reduced_words(w);
        while let Some(rho) = remaining.pop_first() {
            let class = ck_class(&rho).expect("reduced");
            for other in &class {
                remaining.remove(other);
            }
            let yam = yamanouchi_in_class(&class);
            t.check(yam.len() == 1, || format!("w={w}: class of {rho} has {} Yamanouchi words", yam.len()));
            let Some(y) = yam.first() else { continue };
            let expected = weak_descent_tableau(y).expect("reduced");
            t.check(class.contains(&expected.row_word()), || format!("w={w}: row(P̂) of {rho} leaves the class"));
            for sigma in &class {
                let by_lift = weak_p(sigma).expect("reduced");
                t.check(by_lift == expected, || format!("w={w}: lift route differs on {sigma}"));
                let by_closure = weak_p_by_closure(sigma);
                t.check(by_closure.as_ref() == Ok(&expected), || format!("w={w}: closure route differs on {sigma}"));
            }
        }
    })
}

fn sskt(config: &VerifyConfig) -> Result<VerificationReport> {
    let (len, excess) = (config.len.unwrap_or(4), config.flag_excess.unwrap_or(1));
    let cases = comp_flag_cases(config, len, excess);
    let params = [("deg", config.deg), ("len", len), ("flag_excess", excess)];
    sweep(Suite::Sskt, config, &params, &cases, |(alpha, flag), t| {
        let ctx = || format!("α={alpha} φ={flag}");
        if flag.is_standard() || flag.prefix(len) == (1..=len).collect::<Vec<_>>() {
            t.check(flagged_kappa_enum(alpha, flag) == key_polynomial(alpha), || format!("{}: ≠ κ_α", ctx()));
        }
        let c = KeyTableauCrystal::new(alpha, flag, flag.get(alpha.len()).max(1)).expect("rank is φ(k)");
        let g = c.graph();
        let hw = crate::tableau::highest_weight_sskt(alpha);
        t.check(g.components().len() == 1, || format!("{}: not connected", ctx()));
        let highest: Vec<&Tableau> = g.highest_weights().into_iter().map(|v| &g.vertices()[v]).collect();
        t.check(highest == vec![&hw], || format!("{}: highest weights {highest:?}", ctx()));
        for (a, i, b) in g.edges().iter().copied() {
            let (x, y) = (&g.vertices()[a], &g.vertices()[b]);
            t.check(c.e(y, i).as_ref() == Some(x), || format!("{}: e_{i} does not invert f_{i}", ctx()));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { sn: 3, deg: 3, ..VerifyConfig::default() }
    }

    #[test]
    fn every_suite_passes_small() {
        for suite in Suite::ALL {
            let report = run(suite, &small()).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0, "{suite}");
        }
    }

    #[test]
    fn strategies_agree() {
        let seq = VerifyConfig { execution: Execution::Sequential, ..small() };
        let par = VerifyConfig { execution: Execution::Parallel, ..small() };
        for suite in [Suite::Bijection, Suite::RsEquality] {
            assert_eq!(run(suite, &seq).unwrap(), run(suite, &par).unwrap());
        }
    }

    #[test]
    fn instance_limit() {
        let config = VerifyConfig { max_instances: Some(2), ..small() };
        assert_eq!(run(Suite::Bijection, &config).unwrap_err(), Error::TooManyInstances { count: 6 * 4, limit: 2 });
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
    }
}
