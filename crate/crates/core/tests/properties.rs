use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;
use smt_core::characters::{char_from_paths, demazure_of_word};
use smt_core::lspath::{OrderKind, PathModel};
use smt_core::richardson::{Lifting, RichardsonSpec};
use smt_core::weyl::{CosetId, CosetSpace, Family, Parabolic, RootSystem, Weight};

fn a2_rho() -> &'static PathModel {
    static M: OnceLock<PathModel> = OnceLock::new();
    M.get_or_init(|| PathModel::new(&RootSystem::new(Family::A, 2).unwrap(), &Weight(vec![1, 1])).unwrap())
}

fn b2_weight() -> &'static PathModel {
    static M: OnceLock<PathModel> = OnceLock::new();
    M.get_or_init(|| PathModel::new(&RootSystem::new(Family::B, 2).unwrap(), &Weight(vec![1, 2])).unwrap())
}

fn a3_flag() -> &'static CosetSpace {
    static S: OnceLock<CosetSpace> = OnceLock::new();
    S.get_or_init(|| CosetSpace::new(&RootSystem::new(Family::A, 3).unwrap(), Parabolic::empty()).unwrap())
}

/// Every reduced word of the element with reduced word `w`, by peeling right descents.
fn reduced_words(rs: &RootSystem, space: &CosetSpace, c: CosetId) -> Vec<Vec<usize>> {
    if space.length(c) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..rs.rank() {
        let mut word = space.word(c).to_vec();
        word.push(i);
        let shorter = space.coset_of_word(&word);
        if space.length(shorter) + 1 == space.length(c) {
            for mut w in reduced_words(rs, space, shorter) {
                w.push(i);
                out.push(w);
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn bruhat_is_a_partial_order(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
        let s = a3_flag();
        let (a, b, c) = (CosetId(a), CosetId(b), CosetId(c));
        prop_assert!(s.leq(a, a));
        if s.leq(a, b) && s.leq(b, a) { prop_assert_eq!(a, b); }
        if s.leq(a, b) && s.leq(b, c) { prop_assert!(s.leq(a, c)); }
        if s.lt(a, b) { prop_assert!(s.length(a) < s.length(b)); }
    }

    #[test]
    fn weyl_action_is_linear(x in prop::collection::vec(-3i64..4, 3), y in prop::collection::vec(-3i64..4, 3), c in 0usize..24) {
        let s = a3_flag();
        let (x, y) = (Weight(x), Weight(y));
        prop_assert_eq!(s.act(CosetId(c), &(&x + &y)), &s.act(CosetId(c), &x) + &s.act(CosetId(c), &y));
    }

    #[test]
    fn lex_orders_are_antisymmetric_and_refined(i in 0usize..64, j in 0usize..64) {
        let m = a2_rho();
        let (p, q) = (m.path(i % m.len()), m.path(j % m.len()));
        for cmp in [PathModel::cmp_lex, PathModel::cmp_revlex] {
            let total = cmp(m, p, q, OrderKind::Total).unwrap();
            prop_assert_eq!(cmp(m, q, p, OrderKind::Total).unwrap(), total.reverse());
            prop_assert_eq!(total == Ordering::Equal, i % m.len() == j % m.len());
            if let Some(partial) = cmp(m, p, q, OrderKind::Bruhat) {
                prop_assert_eq!(partial, total);
            }
        }
        // paths are listed in decreasing total lex order
        prop_assert_eq!(m.cmp_lex(p, q, OrderKind::Total).unwrap(), (j % m.len()).cmp(&(i % m.len())));
    }

    #[test]
    fn wedge_round_trip(seq in prop::collection::vec(0usize..256, 1..4)) {
        let m = b2_weight();
        // turn arbitrary indices into a standard sequence greedily
        let mut chosen: Vec<usize> = Vec::new();
        for k in seq {
            let cands: Vec<usize> = (0..m.len())
                .filter(|&j| chosen.last().is_none_or(|&l| m.space().leq(m.path(j).initial(), m.path(l).end())))
                .collect();
            chosen.push(cands[k % cands.len()]);
        }
        let parts: Vec<_> = chosen.iter().map(|&j| m.path(j).as_convex()).collect();
        let w = m.wedge(&parts);
        prop_assert!(m.is_ls_path(&w));
        prop_assert_eq!(w.initial(), parts[0].initial());
        prop_assert_eq!(w.end(), parts[parts.len() - 1].end());
        let total = parts.iter().fold(Weight::zero(2), |acc, p| &acc + &m.weight_of(p).unwrap());
        prop_assert_eq!(m.weight_of(&w).unwrap(), total);
        let back = m.unwedge(&w, chosen.len()).unwrap();
        let idx: Vec<usize> = back.iter().map(|p| m.index_of(p).unwrap()).collect();
        prop_assert_eq!(idx, chosen);
    }

    #[test]
    fn same_support_wedge_is_a_path(i in 0usize..256, j in 0usize..256) {
        let m = b2_weight();
        let (p, q) = (m.path(i % m.len()), m.path(j % m.len()));
        if p.cosets == q.cosets {
            prop_assert!(m.is_ls_path(&m.wedge(&[p, q])));
        }
    }

    #[test]
    fn characters_are_w_invariant(a in 0i64..3, b in 0i64..3) {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let m = PathModel::new(&rs, &Weight(vec![a, b])).unwrap();
        prop_assert!(char_from_paths(&m).is_w_invariant(&rs));
    }

    #[test]
    fn demazure_independent_of_reduced_word(c in 0usize..8) {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let space = CosetSpace::new(&rs, Parabolic::empty()).unwrap();
        let lambda = Weight(vec![1, 1]);
        let words = reduced_words(&rs, &space, CosetId(c));
        let first = demazure_of_word(&rs, &words[0], &lambda);
        for w in &words {
            prop_assert_eq!(&demazure_of_word(&rs, w, &lambda), &first);
        }
    }

    #[test]
    fn nonregular_standardness_is_monotone(t in 0usize..6, k in 0usize..6, t2 in 0usize..6, k2 in 0usize..6) {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let flag = CosetSpace::new(&rs, Parabolic::empty()).unwrap();
        let model = PathModel::new(&rs, &Weight(vec![2, 0])).unwrap();
        let lifting = Lifting::new(&flag, model.space()).unwrap();
        let small = RichardsonSpec::new(CosetId(t), CosetId(k));
        let big = RichardsonSpec::new(CosetId(t2), CosetId(k2));
        if small.is_contained_in(&flag, &big) {
            for p in model.paths() {
                if lifting.is_standard(&p.cosets, &small) {
                    prop_assert!(lifting.is_standard(&p.cosets, &big));
                }
            }
        }
    }
}
