//! Pieri-Chevalley coefficients `a_{τ,κ}^λ`, `C_{τ,κ}^λ` and the diagonal
//! degeneration identities, all from the path model.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::{demazure_character, FormalCharacter};
use crate::lspath::PathModel;
use crate::richardson::{standard_character, NonRegular, RichardsonSpec, RichardsonUnion, StandardCounts};
use crate::weyl::{CosetId, Weight};

/// Rows `C_{τ,κ}^λ` and counts `a_{τ,κ}^λ` for fixed `τ` and `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriChevalleyTable {
    pub tau: CosetId,
    pub lambda: Weight,
    pub rows: BTreeMap<CosetId, FormalCharacter>,
    pub counts: BTreeMap<CosetId, u128>,
}

impl PieriChevalleyTable {
    fn from_pairs(tau: CosetId, lambda: Weight, pairs: impl Iterator<Item = (CosetId, Weight)>) -> Self {
        let mut rows: BTreeMap<CosetId, FormalCharacter> = BTreeMap::new();
        let mut counts: BTreeMap<CosetId, u128> = BTreeMap::new();
        for (kappa, w) in pairs {
            rows.entry(kappa).or_default().add_term(w, 1);
            *counts.entry(kappa).or_default() += 1;
        }
        PieriChevalleyTable { tau, lambda, rows, counts }
    }

    pub fn row(&self, kappa: CosetId) -> FormalCharacter {
        self.rows.get(&kappa).cloned().unwrap_or_default()
    }

    pub fn count(&self, kappa: CosetId) -> u128 {
        self.counts.get(&kappa).copied().unwrap_or(0)
    }

    /// `Σ_κ C_{τ,κ}^λ`.
    pub fn row_sum(&self) -> FormalCharacter {
        self.rows.values().fold(FormalCharacter::zero(), |acc, c| acc.add(c))
    }

    /// Every row has positive coefficients only.
    pub fn is_effective(&self) -> bool {
        self.rows.values().all(FormalCharacter::is_effective)
    }

    /// `a_{τ,κ}^λ` is `C_{τ,κ}^λ` at `e^μ = 1`.
    pub fn counts_match_masses(&self) -> bool {
        self.rows.iter().all(|(k, c)| c.mass() >= 0 && c.mass() as u128 == self.count(*k))
    }
}

/// `C_{τ,κ}^λ = Σ_{i(π) ≤ τ, e(π) = κ} e^{π(1)}` on `W/W_λ`.
pub fn pieri_chevalley(model: &PathModel, tau: CosetId) -> PieriChevalleyTable {
    let space = model.space();
    let pairs = model.paths().iter().filter(|p| space.leq(p.initial(), tau)).map(|p| (p.end(), model.weight(p)));
    PieriChevalleyTable::from_pairs(tau, model.lambda().clone(), pairs)
}

/// The table on a finer quotient `W/W_Q`: each path standard on `X_τ` is
/// attached to the end of its maximal defining chain.
pub fn pieri_chevalley_nonregular(nr: &NonRegular<'_>, tau: CosetId) -> PieriChevalleyTable {
    let model = nr.model();
    let pairs = model.paths().iter().filter_map(|p| {
        let chain = nr.lifting().top_chain(&p.cosets, tau)?;
        Some((*chain.last()?, model.weight(p)))
    });
    PieriChevalleyTable::from_pairs(tau, model.lambda().clone(), pairs)
}

/// `Σ_κ C_{τ,κ}^λ = Char V_τ(λ)` against the Demazure-operator oracle.
pub fn pittie_ram_sum_check(model: &PathModel, tau: CosetId) -> bool {
    pieri_chevalley(model, tau).row_sum() == demazure_character(model.space(), tau, model.lambda())
}

/// Both sides of the degeneration identities at degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationReport {
    /// Pairs of degree-`n` standard monomials that concatenate to a standard one.
    pub pairs: u128,
    /// Degree-`2n` standard monomials.
    pub direct: u128,
    /// Paths of shape `2nλ` standard on the variety.
    pub scaled_paths: u128,
    /// `Σ_σ a(σ)·b(σ)` over `κ ≤ σ ≤ τ`.
    pub split: u128,
    /// `(σ, a(σ), b(σ))` in increasing `σ`.
    pub terms: Vec<(String, u128, u128)>,
    pub characters_equal: bool,
}

impl DegenerationReport {
    pub fn passed(&self) -> bool {
        self.characters_equal
            && self.pairs == self.direct
            && self.direct == self.scaled_paths
            && self.split == self.direct
    }
}

fn weight_char(model: &PathModel) -> impl Fn(&crate::lspath::LSPath) -> FormalCharacter + '_ {
    |p| FormalCharacter::monomial(model.weight(p), 1)
}

/// Degeneration identities for `X_τ^κ` at degree `n ≥ 1` (regular `λ`).
pub fn degeneration_check(model: &PathModel, spec: &RichardsonSpec, n: usize) -> crate::Result<DegenerationReport> {
    assert!(n >= 1, "degree must be positive");
    let space = model.space();
    let whole = RichardsonUnion::single(space, *spec);
    let counts = StandardCounts::new(model, 2 * n);
    let chars_n = model.sequence_table(n, weight_char(model));
    let ids: Vec<CosetId> = space.ids().collect();

    // pairs (π̄_1, π̄_2) with τ ≥ i(π̄_1), e(π̄_1) ≥ i(π̄_2), e(π̄_2) ≥ κ
    let table_n = counts.table(n);
    let mut pairs = 0u128;
    let mut pairs_char = FormalCharacter::zero();
    if !spec.is_empty(space) {
        for &x1 in ids.iter().filter(|&&x| space.leq(x, spec.tau)) {
            for &y1 in &ids {
                let c1 = *table_n.get(x1, y1);
                if c1 == 0 {
                    continue;
                }
                for &x2 in ids.iter().filter(|&&x| space.leq(x, y1)) {
                    for &y2 in ids.iter().filter(|&&y| space.leq(spec.kappa, y)) {
                        let c2 = *table_n.get(x2, y2);
                        if c2 == 0 {
                            continue;
                        }
                        pairs += c1 * c2;
                        pairs_char = pairs_char.add(&chars_n.get(x1, y1).mul(chars_n.get(x2, y2)));
                    }
                }
            }
        }
    }

    let direct = counts.count(&whole, 2 * n);
    let direct_char = standard_character(model, &whole, 2 * n);

    let big = model.scaled(2 * n)?;
    let standard_big: Vec<_> = big.paths().iter().filter(|p| !spec.is_empty(space) && big.is_standard_on(p, spec.tau, spec.kappa)).collect();
    let scaled_paths = standard_big.len() as u128;
    let mut scaled_char = FormalCharacter::zero();
    for p in standard_big {
        scaled_char.add_term(big.weight(p), 1);
    }

    let mut split = 0u128;
    let mut split_char = FormalCharacter::zero();
    let mut terms = Vec::new();
    if !spec.is_empty(space) {
        for sigma in space.interval(spec.kappa, spec.tau) {
            let a = table_n.sum_where(|x, y| x == sigma && space.leq(spec.kappa, y));
            let a_char = chars_n.sum_where(|x, y| x == sigma && space.leq(spec.kappa, y));
            let upper = RichardsonUnion::single(space, RichardsonSpec::new(spec.tau, sigma));
            let b = counts.count(&upper, n);
            let b_char = standard_character(model, &upper, n);
            split += a * b;
            split_char = split_char.add(&a_char.mul(&b_char));
            terms.push((space.name(sigma), a, b));
        }
    }

    let characters_equal = pairs_char == direct_char && direct_char == scaled_char && split_char == direct_char;
    Ok(DegenerationReport { pairs, direct, scaled_paths, split, terms, characters_equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{Family, RootSystem};

    fn model(f: Family, n: usize, l: &[i64]) -> PathModel {
        PathModel::new(&RootSystem::new(f, n).unwrap(), &Weight(l.to_vec())).unwrap()
    }

    #[test]
    fn a1_tables() {
        let m = model(Family::A, 1, &[1]);
        let (s, id) = (m.space().top(), m.space().identity());
        let t = pieri_chevalley(&m, s);
        assert_eq!(t.row(s), FormalCharacter::monomial(Weight(vec![-1]), 1));
        assert_eq!(t.row(id), FormalCharacter::monomial(Weight(vec![1]), 1));
        assert_eq!((t.count(s), t.count(id)), (1, 1));

        let m2 = model(Family::A, 1, &[2]);
        let t2 = pieri_chevalley(&m2, s);
        assert_eq!(t2.row(s), FormalCharacter::monomial(Weight(vec![-2]), 1));
        let mut expect = FormalCharacter::monomial(Weight(vec![0]), 1);
        expect.add_term(Weight(vec![2]), 1);
        assert_eq!(t2.row(id), expect);
        assert_eq!((t2.count(s), t2.count(id)), (1, 2));
        assert!(t2.is_effective() && t2.counts_match_masses());

        let t0 = pieri_chevalley(&m2, id);
        assert_eq!(t0.rows.len(), 1);
        assert_eq!(t0.row(id), FormalCharacter::monomial(Weight(vec![2]), 1));
    }

    #[test]
    fn a1_degeneration_instance() {
        let m = model(Family::A, 1, &[1]);
        let spec = RichardsonSpec::full(m.space());
        let r = degeneration_check(&m, &spec, 1).unwrap();
        assert_eq!((r.pairs, r.direct, r.split), (3, 3, 3));
        assert_eq!(r.terms, vec![("e".to_string(), 1, 2), ("s1".to_string(), 1, 1)]);
        assert!(r.passed());
    }

    #[test]
    fn point_degeneration() {
        let m = model(Family::A, 2, &[1, 1]);
        let s = m.space().top();
        let r = degeneration_check(&m, &RichardsonSpec::new(s, s), 2).unwrap();
        assert_eq!((r.pairs, r.direct, r.split), (1, 1, 1));
        assert!(r.passed());
    }
}
