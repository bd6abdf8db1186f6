use itertools::Itertools;
use smt_core::characters::{
    char_demazure_paths, char_from_paths, char_standard_sequences, demazure_character, weyl_character, weyl_dimension,
};
use smt_core::lspath::{OrderKind, PathModel, DEFAULT_MAX_PATHS};
use smt_core::weyl::{Family, RootSystem, Weight, DEFAULT_MAX_GROUP_SIZE};
use std::cmp::Ordering;

fn grid() -> Vec<(RootSystem, Weight)> {
    let mut out = Vec::new();
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)] {
        let rs = RootSystem::new(f, n).unwrap();
        for coords in (0..n).map(|_| 0..=2i64).multi_cartesian_product() {
            out.push((rs.clone(), Weight(coords)));
        }
    }
    out
}

#[test]
fn path_count_and_character_match_weyl() {
    for (rs, lambda) in grid() {
        let model = PathModel::new(&rs, &lambda).unwrap();
        assert_eq!(model.len() as u128, weyl_dimension(&rs, &lambda), "{} {}", rs.name(), lambda);
        let c = char_from_paths(&model);
        assert_eq!(c, weyl_character(&rs, &lambda, DEFAULT_MAX_GROUP_SIZE).unwrap(), "{} {}", rs.name(), lambda);
        assert!(c.is_w_invariant(&rs));
    }
}

#[test]
fn every_path_is_valid_with_extremes() {
    for (rs, lambda) in grid().into_iter().filter(|(rs, _)| rs.rank() <= 2) {
        let model = PathModel::new(&rs, &lambda).unwrap();
        for p in model.paths() {
            assert!(model.is_ls_path(p));
        }
        let top = model.extremal_path(model.space().top());
        let bottom = model.extremal_path(model.space().identity());
        for p in model.paths() {
            if p.as_convex() != top.as_convex() {
                assert_eq!(model.cmp_lex(&top, p, OrderKind::Bruhat), Some(Ordering::Greater));
            }
            if p.as_convex() != bottom.as_convex() {
                assert_eq!(model.cmp_lex(p, &bottom, OrderKind::Bruhat), Some(Ordering::Greater));
            }
        }
    }
}

#[test]
fn demazure_agrees_with_initial_filter() {
    for (f, n, lambdas) in [
        (Family::A, 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        (Family::B, 2, vec![vec![1, 1]]),
        (Family::G, 2, vec![vec![1, 0], vec![0, 1]]),
    ] {
        let rs = RootSystem::new(f, n).unwrap();
        for l in lambdas {
            let model = PathModel::new(&rs, &Weight(l)).unwrap();
            for tau in model.space().ids() {
                assert_eq!(
                    char_demazure_paths(&model, tau),
                    demazure_character(model.space(), tau, model.lambda())
                );
            }
        }
    }
}

#[test]
fn wedge_bijection_small() {
    let rs = RootSystem::new(Family::A, 2).unwrap();
    for l in [vec![1, 0], vec![1, 1]] {
        let model = PathModel::new(&rs, &Weight(l)).unwrap();
        for m in 1..=3usize {
            let big = model.scaled(m).unwrap();
            let seqs = model.standard_sequences(m, None, None, DEFAULT_MAX_PATHS).unwrap();
            assert_eq!(seqs.len(), big.len());
            assert_eq!(char_standard_sequences(&model, m), char_from_paths(&big));
            for s in &seqs {
                let parts: Vec<_> = s.iter().map(|&j| model.path(j).as_convex()).collect();
                let w = model.wedge(&parts);
                let lifted = big.validate(w.clone()).unwrap();
                assert!(big.index_of(&lifted).is_some());
                let back = model.unwedge(&w, m).unwrap();
                let idx: Vec<usize> = back.iter().map(|p| model.index_of(p).unwrap()).collect();
                assert_eq!(&idx, s);
            }
        }
    }
}
