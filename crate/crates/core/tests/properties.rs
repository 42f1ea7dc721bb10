use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::Index;

use keycrystal::combinat::{ck_class, reduced_words};
use keycrystal::crystal::{kt_e, rf_e, rf_f};
use keycrystal::eg::eg_insert;
use keycrystal::weak_eg::{factorizations, weak_insertion_pair, weak_p};
use keycrystal::{IncreasingFactorization, Permutation, Tableau, Word};

fn permutation(max_rank: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_rank)
        .prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_oneline(v).unwrap())
}

fn reduced_word(max_rank: usize) -> impl Strategy<Value = Word> {
    (permutation(max_rank), any::<Index>()).prop_map(|(w, idx)| {
        let words: Vec<Word> = reduced_words(&w).into_iter().collect();
        words[idx.index(words.len())].clone()
    })
}

fn factorization(max_rank: usize, n: usize) -> impl Strategy<Value = IncreasingFactorization> {
    (reduced_word(max_rank), any::<Index>()).prop_filter_map("word needs more blocks", move |(rho, idx)| {
        let all = factorizations(&rho, n);
        (!all.is_empty()).then(|| all[idx.index(all.len())].clone())
    })
}

fn boxes(t: &Tableau) -> Vec<(i64, usize, usize)> {
    t.boxes().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ck_moves_keep_product_and_insertion(rho in reduced_word(5)) {
        let p = eg_insert(&rho).unwrap();
        for sigma in ck_class(&rho).unwrap() {
            prop_assert_eq!(sigma.product(), rho.product());
            prop_assert_eq!(eg_insert(&sigma).unwrap(), p.clone());
        }
    }

    #[test]
    fn weak_p_grows_one_box_at_a_time(rho in reduced_word(5)) {
        let mut prev: BTreeSet<(i64, usize)> = BTreeSet::new();
        for k in 1..=rho.len() {
            let prefix = Word::new(rho.letters()[..k].to_vec()).unwrap();
            let cur: BTreeSet<(i64, usize)> = weak_p(&prefix).unwrap().boxes().map(|(r, c, _)| (r, c)).collect();
            prop_assert!(prev.is_subset(&cur));
            prop_assert_eq!(cur.len(), k);
            prev = cur;
        }
    }

    #[test]
    fn rf_crystal_axioms(f in factorization(5, 3), i in 1usize..3) {
        if let Some(up) = rf_e(&f, i) {
            prop_assert_eq!(rf_f(&up, i), Some(f.clone()));
            prop_assert_eq!(up.word().product(), f.word().product());
            prop_assert!(ck_class(&f.word()).unwrap().contains(&up.word()));
        }
        if let Some(down) = rf_f(&f, i) {
            prop_assert_eq!(rf_e(&down, i), Some(f.clone()));
        }
    }

    #[test]
    fn shift_commutes_with_raising(f in factorization(5, 3), i in 1usize..3, n in 1usize..4) {
        prop_assert_eq!(rf_e(&f.shift(n), i), rf_e(&f, i).map(|g| g.shift(n)));
        prop_assert_eq!(rf_f(&f.shift(n), i), rf_f(&f, i).map(|g| g.shift(n)));
    }

    #[test]
    fn shift_moves_insertion_tableaux(f in factorization(5, 3), n in 1usize..4) {
        let (p, q) = weak_insertion_pair(&f).unwrap();
        let (ps, qs) = weak_insertion_pair(&f.shift(n)).unwrap();
        let up = n as i64;
        prop_assert_eq!(boxes(&ps), boxes(&p.shift_rows(up).map_entries(|v| v + n)));
        prop_assert_eq!(boxes(&qs), boxes(&q.shift_rows(up)));
    }

    #[test]
    fn recording_tableau_intertwines(f in factorization(5, 4), i in 1usize..4) {
        let (p, q) = weak_insertion_pair(&f).unwrap();
        match rf_e(&f, i) {
            Some(up) => {
                let (p2, q2) = weak_insertion_pair(&up).unwrap();
                prop_assert_eq!(p2, p);
                prop_assert_eq!(kt_e(&q, i), Some(q2));
            }
            None => prop_assert_eq!(kt_e(&q, i), None),
        }
    }

    #[test]
    fn factorization_json_round_trip(f in factorization(5, 3)) {
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<IncreasingFactorization>(&json).unwrap(), f);
    }
}
