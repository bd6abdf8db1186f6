//! The acceptance suite: twelve criteria, each exact, each reported on one line.

use itertools::Itertools;
use smt_core::characters::{
    char_demazure_paths, char_from_paths, char_standard_sequences, demazure_of_word, weyl_character, weyl_dimension,
    FormalCharacter,
};
use smt_core::ktheory::{degeneration_check, pieri_chevalley};
use smt_core::lspath::{PathModel, DEFAULT_MAX_PATHS};
use smt_core::pluecker::{parse_subset, subset_name, WedgeModel};
use smt_core::richardson::{
    hilbert_degree, hilbert_recursion_check, Lifting, NonRegular, RichardsonSpec, StandardCounts, Status,
};
use smt_core::weyl::{CosetSpace, Family, Parabolic, RootSystem, Weight, DEFAULT_MAX_GROUP_SIZE};
use smt_core::Result;

/// Criterion ids in the order they are run.
pub const ALL: [u8; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

/// Result of a single criterion.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "path count vs Weyl dimension",
        2 => "path character vs Weyl character",
        3 => "Demazure character identity",
        4 => "wedge bijection",
        5 => "Pieri-Chevalley recursion",
        6 => "Richardson nonemptiness and dimension",
        7 => "straightening constraints",
        8 => "H0 counting vs Pluecker oracle",
        9 => "K-theory Pieri-Chevalley tables",
        10 => "degeneration identity",
        11 => "non-regular weights",
        12 => "determinism",
        _ => "unknown criterion",
    }
}

/// Run one criterion.
pub fn run(id: u8, seed: u64) -> Outcome {
    let result = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(seed),
        8 => c8(seed),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(seed),
        _ => Ok((false, "no such criterion".to_string())),
    };
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    Outcome { id, title: title(id), passed, detail }
}

pub fn run_many(ids: &[u8], seed: u64) -> Vec<Outcome> {
    ids.iter().map(|&id| run(id, seed)).collect()
}

/// The report printed by `smt check --suite`.
pub fn render(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&o.line());
        out.push('\n');
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} criteria passed\n", outcomes.len()));
    out
}

type Check = Result<(bool, String)>;

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).expect("valid type")
}

fn model(f: Family, n: usize, l: &[i64]) -> Result<PathModel> {
    PathModel::new(&rs(f, n), &Weight(l.to_vec()))
}

fn grid() -> Vec<(RootSystem, Weight)> {
    let mut out = Vec::new();
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)] {
        let r = rs(f, n);
        for coords in (0..n).map(|_| 0..=2i64).multi_cartesian_product() {
            out.push((r.clone(), Weight(coords)));
        }
    }
    out
}

fn first_failure(failures: &[String]) -> String {
    failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
}

fn c1() -> Check {
    let mut failures = Vec::new();
    let cases = grid();
    for (r, lambda) in &cases {
        let m = PathModel::new(r, lambda)?;
        let dim = weyl_dimension(r, lambda);
        if m.len() as u128 != dim {
            failures.push(format!("{} {}: {} paths, dim {}", r.name(), lambda, m.len(), dim));
        }
    }
    Ok((failures.is_empty(), format!("{} weights, {} mismatches{}", cases.len(), failures.len(), first_failure(&failures))))
}

fn c2() -> Check {
    let mut failures = Vec::new();
    let cases = grid();
    for (r, lambda) in &cases {
        let m = PathModel::new(r, lambda)?;
        if char_from_paths(&m) != weyl_character(r, lambda, DEFAULT_MAX_GROUP_SIZE)? {
            failures.push(format!("{} {}", r.name(), lambda));
        }
    }
    Ok((failures.is_empty(), format!("{} weights, {} mismatches{}", cases.len(), failures.len(), first_failure(&failures))))
}

fn c3() -> Check {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (f, n, lambdas) in [
        (Family::A, 2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        (Family::B, 2, vec![vec![1, 1]]),
    ] {
        let r = rs(f, n);
        let group = CosetSpace::weyl_group(&r, DEFAULT_MAX_GROUP_SIZE)?;
        for l in lambdas {
            let m = PathModel::new(&r, &Weight(l))?;
            for w in group.ids() {
                let tau = group.project(w, m.space());
                checked += 1;
                if char_demazure_paths(&m, tau) != demazure_of_word(&r, group.word(w), m.lambda()) {
                    failures.push(format!("{} {} w={}", r.name(), m.lambda(), group.name(w)));
                }
            }
        }
    }
    Ok((failures.is_empty(), format!("{checked} (w, λ) cases, {} mismatches{}", failures.len(), first_failure(&failures))))
}

fn c4() -> Check {
    let r = rs(Family::A, 2);
    let mut sequences = 0usize;
    let mut failures = Vec::new();
    for l in [vec![1, 0], vec![1, 1]] {
        let m = PathModel::new(&r, &Weight(l))?;
        for deg in 1..=3usize {
            let big = m.scaled(deg)?;
            let seqs = m.standard_sequences(deg, None, None, DEFAULT_MAX_PATHS)?;
            if seqs.len() != big.len() {
                failures.push(format!("{} m={deg}: {} sequences, {} paths", m.lambda(), seqs.len(), big.len()));
            }
            if char_standard_sequences(&m, deg) != char_from_paths(&big) {
                failures.push(format!("{} m={deg}: characters differ", m.lambda()));
            }
            let mut images = std::collections::HashSet::new();
            for s in &seqs {
                sequences += 1;
                let parts: Vec<_> = s.iter().map(|&j| m.path(j).as_convex()).collect();
                let w = m.wedge(&parts);
                let ok_path = big.validate(w.clone()).ok().and_then(|p| big.index_of(&p));
                let back = m.unwedge(&w, deg).ok().map(|ps| ps.iter().map(|p| m.index_of(p)).collect::<Vec<_>>());
                let expect: Vec<Option<usize>> = s.iter().map(|&j| Some(j)).collect();
                if ok_path.is_none() || back.as_ref() != Some(&expect) {
                    failures.push(format!("{} m={deg}: round trip fails", m.lambda()));
                }
                images.insert(ok_path);
            }
            if images.len() != seqs.len() {
                failures.push(format!("{} m={deg}: wedge not injective", m.lambda()));
            }
        }
    }
    Ok((failures.is_empty(), format!("{sequences} sequences, {} failures{}", failures.len(), first_failure(&failures))))
}

fn all_specs(space: &CosetSpace) -> Vec<RichardsonSpec> {
    space.ids().flat_map(|t| space.ids().map(move |k| RichardsonSpec::new(t, k))).collect()
}

fn c5() -> Check {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, m) in [("A2 ρ", model(Family::A, 2, &[1, 1])?), ("Gr(2,4) ω2", model(Family::A, 3, &[0, 1, 0])?)] {
        let counts = StandardCounts::new(&m, 4);
        for spec in all_specs(m.space()).into_iter().filter(|s| !s.is_empty(m.space())) {
            checked += 1;
            if !hilbert_recursion_check(&counts, &spec) {
                failures.push(format!("{name} {}", spec.display(m.space())));
            }
        }
    }
    Ok((failures.is_empty(), format!("{checked} varieties, m ≤ 4, {} failures{}", failures.len(), first_failure(&failures))))
}

fn c6() -> Check {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (name, m) in [("A2", model(Family::A, 2, &[1, 1])?), ("Gr(2,4)", model(Family::A, 3, &[0, 1, 0])?)] {
        let space = m.space();
        let top = space.length(space.top());
        let counts = StandardCounts::new(&m, top + 3);
        for spec in all_specs(space) {
            checked += 1;
            let comparable = space.leq(spec.kappa, spec.tau);
            let ok = match spec.status(space) {
                Status::Empty => !comparable && (1..=top + 3).all(|d| counts.count_spec(&spec, d) == 0),
                Status::Dimension(d) => {
                    comparable
                        && d == space.length(spec.tau) - space.length(spec.kappa)
                        && hilbert_degree(&counts, &spec, d + 3) == Some(d)
                }
            };
            if !ok {
                failures.push(format!("{name} {}", spec.display(space)));
            }
        }
    }
    Ok((failures.is_empty(), format!("{checked} pairs, {} failures{}", failures.len(), first_failure(&failures))))
}

fn c7(seed: u64) -> Check {
    let mut relations = 0;
    let mut failures = Vec::new();
    for (n, d) in [(4, 2), (5, 2), (6, 3)] {
        let wm = WedgeModel::new(n, d)?;
        wm.certify_standard_independence(seed)?;
        for (a, b) in wm.incomparable_pairs() {
            relations += 1;
            let rel = wm.straighten(&a, &b, seed)?;
            let check = wm.check_support(&rel)?;
            if !check.wedge_bounds || !check.endpoint_bounds || rel.rhs.is_empty() {
                failures.push(format!("Gr({d},{n}) {}·{}", subset_name(&a), subset_name(&b)));
            }
        }
    }
    let wm = WedgeModel::new(4, 2)?;
    let rel = wm.straighten(&parse_subset("14")?, &parse_subset("23")?, seed)?;
    let support: Vec<(String, String)> = rel.rhs.iter().map(|(_, j, k)| (subset_name(j), subset_name(k))).collect();
    let expect = vec![("24".to_string(), "13".to_string()), ("34".to_string(), "12".to_string())];
    let unit = rel.rhs.iter().all(|(c, _, _)| c.numer().magnitude() == c.denom().magnitude());
    if support != expect || !unit {
        failures.push(format!("Gr(2,4) relation support {support:?}"));
    }
    Ok((
        failures.is_empty(),
        format!("{relations} relations, 20 held-out points each, {} failures{}", failures.len(), first_failure(&failures)),
    ))
}

fn c8(seed: u64) -> Check {
    let mut checked = 0;
    let mut failures = Vec::new();
    let wm = WedgeModel::new(4, 2)?;
    let counts = StandardCounts::new(wm.path_model(), 3);
    let space = wm.space();
    for spec in all_specs(space) {
        for deg in 0..=3usize {
            checked += 1;
            let h0 = wm.h0_dim(spec.tau, spec.kappa, deg, seed)? as u128;
            let count = counts.count_spec(&spec, deg);
            if h0 != count {
                failures.push(format!("{} m={deg}: h0 {h0}, count {count}", spec.display(space)));
            }
        }
    }
    for (n, d) in [(4, 2), (5, 2)] {
        let wm = WedgeModel::new(n, d)?;
        let pm = wm.path_model();
        for spec in all_specs(wm.space()) {
            checked += 1;
            let paths = pm.paths().iter().filter(|p| pm.is_standard_on(p, spec.tau, spec.kappa)).count();
            if wm.intersection_dim(spec.tau, spec.kappa) != paths {
                failures.push(format!("Gr({d},{n}) {}", spec.display(wm.space())));
            }
        }
    }
    Ok((failures.is_empty(), format!("{checked} comparisons, {} failures{}", failures.len(), first_failure(&failures))))
}

fn c9() -> Check {
    let mut failures = Vec::new();
    let mono = |w: i64| FormalCharacter::monomial(Weight(vec![w]), 1);
    let m1 = model(Family::A, 1, &[1])?;
    let (s, id) = (m1.space().top(), m1.space().identity());
    let t1 = pieri_chevalley(&m1, s);
    if t1.row(s) != mono(-1) || t1.row(id) != mono(1) || t1.count(s) != 1 || t1.count(id) != 1 {
        failures.push("A1 ω table".to_string());
    }
    let m2 = model(Family::A, 1, &[2])?;
    let t2 = pieri_chevalley(&m2, s);
    if t2.row(s) != mono(-2) || t2.row(id) != mono(0).add(&mono(2)) || t2.count(s) != 1 || t2.count(id) != 2 {
        failures.push("A1 2ω table".to_string());
    }
    let t0 = pieri_chevalley(&m2, id);
    if t0.rows.len() != 1 || t0.row(id) != mono(2) {
        failures.push("A1 τ=id table".to_string());
    }
    let mut tables = vec![t1, t2, t0];
    let a2 = model(Family::A, 2, &[1, 1])?;
    for tau in a2.space().ids() {
        let t = pieri_chevalley(&a2, tau);
        let sum = t.row_sum();
        let demazure = demazure_of_word(a2.root_system(), a2.space().word(tau), a2.lambda());
        if sum != demazure || sum != char_demazure_paths(&a2, tau) {
            failures.push(format!("A2 row sum τ={}", a2.space().name(tau)));
        }
        tables.push(t);
    }
    let effective = tables.iter().all(|t| t.is_effective() && t.counts_match_masses());
    if !effective {
        failures.push("effectivity".to_string());
    }
    Ok((failures.is_empty(), format!("{} tables, {} failures{}", tables.len(), failures.len(), first_failure(&failures))))
}

fn c10() -> Check {
    let mut checked = 0;
    let mut failures = Vec::new();
    let a1 = model(Family::A, 1, &[1])?;
    let r = degeneration_check(&a1, &RichardsonSpec::full(a1.space()), 1)?;
    let split: Vec<u128> = r.terms.iter().map(|(_, a, b)| a * b).collect();
    if !r.passed() || r.direct != 3 || split != vec![2, 1] {
        failures.push("A1 instance".to_string());
    }
    for (name, m) in [("A2 ρ", model(Family::A, 2, &[1, 1])?), ("Gr(2,4) ω2", model(Family::A, 3, &[0, 1, 0])?)] {
        for spec in all_specs(m.space()).into_iter().filter(|s| !s.is_empty(m.space())) {
            for n in 1..=2 {
                checked += 1;
                if !degeneration_check(&m, &spec, n)?.passed() {
                    failures.push(format!("{name} {} n={n}", spec.display(m.space())));
                }
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!("A1 3 = 1×2 + 1×1; {checked} cases, {} failures{}", failures.len(), first_failure(&failures)),
    ))
}

fn c11() -> Check {
    let mut failures = Vec::new();
    let a2 = rs(Family::A, 2);
    let flag = CosetSpace::new(&a2, Parabolic::empty())?;
    let rho = PathModel::new(&a2, &Weight(vec![1, 1]))?;
    let counts = StandardCounts::new(&rho, 3);
    let (mut recursions, mut trivial) = (0, 0);
    for l in [vec![1, 0], vec![0, 1]] {
        let lm = PathModel::new(&a2, &Weight(l))?;
        let nr = NonRegular::new(&flag, &lm)?;
        for spec in all_specs(&flag).into_iter().filter(|s| !s.is_empty(&flag)) {
            match nr.filtration_check(&counts, &spec)? {
                None => trivial += 1,
                Some(true) => recursions += 1,
                Some(false) => failures.push(format!("{} {}", lm.lambda(), spec.display(&flag))),
            }
        }
    }
    let mut chains = 0;
    for (f, n) in [(Family::A, 2), (Family::A, 3)] {
        let r = rs(f, n);
        let fine = CosetSpace::new(&r, Parabolic::empty())?;
        for i in 0..n {
            let lm = PathModel::new(&r, &Weight::fundamental(n, i))?;
            let lifting = Lifting::new(&fine, lm.space())?;
            for spec in all_specs(&fine).into_iter().filter(|s| !s.is_empty(&fine)) {
                for p in lm.paths() {
                    chains += 1;
                    let all = lifting.all_defining_chains(&p.cosets, &spec);
                    let min = lifting.min_defining_chain(&p.cosets, &spec);
                    let max = lifting.max_defining_chain(&p.cosets, &spec);
                    let ok = match (min, max) {
                        (None, None) => all.is_empty(),
                        (Some(lo), Some(hi)) => {
                            all.contains(&lo)
                                && all.contains(&hi)
                                && all.iter().all(|c| {
                                    c.iter().zip(&lo).zip(&hi).all(|((x, a), b)| fine.leq(*a, *x) && fine.leq(*x, *b))
                                })
                        }
                        _ => false,
                    };
                    if !ok {
                        failures.push(format!("{} {} {}", r.name(), lm.lambda(), spec.display(&fine)));
                    }
                }
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "{recursions} recursions m ≤ 3 ({trivial} trivial bundles skipped), {chains} chain comparisons, {} failures{}",
            failures.len(),
            first_failure(&failures)
        ),
    ))
}

fn c12(seed: u64) -> Check {
    let ids: Vec<u8> = ALL.iter().copied().filter(|&i| i != 12).collect();
    let first = render(&run_many(&ids, seed));
    let second = render(&run_many(&ids, seed));
    Ok((first == second, format!("two in-process runs of criteria 1-11, {} report bytes", first.len())))
}
