//! Richardson varieties `X_τ^κ ⊆ G/Q` as index data.
//!
//! Everything here is combinatorial: nonemptiness and dimension from the
//! Bruhat order, standard monomial counts from the path model, boundaries from
//! Bruhat covers, and defining chains for weights that are not `Q`-regular.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::FormalCharacter;
use crate::error::{Error, Result};
use crate::lspath::{EndpointTable, LSPath, PathModel};
use crate::weyl::{maximal_elements, CosetId, CosetSpace, Weight};

/// The pair `(τ, κ)` in a fixed quotient `W/W_Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RichardsonSpec {
    pub tau: CosetId,
    pub kappa: CosetId,
}

impl RichardsonSpec {
    pub fn new(tau: CosetId, kappa: CosetId) -> Self {
        RichardsonSpec { tau, kappa }
    }

    /// The Schubert variety `X_τ = X_τ^{id}`.
    pub fn schubert(space: &CosetSpace, tau: CosetId) -> Self {
        RichardsonSpec { tau, kappa: space.identity() }
    }

    /// `G/Q` itself.
    pub fn full(space: &CosetSpace) -> Self {
        RichardsonSpec { tau: space.top(), kappa: space.identity() }
    }

    pub fn is_empty(&self, space: &CosetSpace) -> bool {
        !space.leq(self.kappa, self.tau)
    }

    pub fn status(&self, space: &CosetSpace) -> Status {
        if self.is_empty(space) {
            Status::Empty
        } else {
            Status::Dimension(space.length(self.tau) - space.length(self.kappa))
        }
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, space: &CosetSpace, other: &RichardsonSpec) -> bool {
        space.leq(self.tau, other.tau) && space.leq(other.kappa, self.kappa)
    }

    pub fn display(&self, space: &CosetSpace) -> String {
        format!("X_{{{}}}^{{{}}}", space.name(self.tau), space.name(self.kappa))
    }
}

/// Nonemptiness and dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Empty,
    Dimension(usize),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Empty => f.write_str("empty"),
            Status::Dimension(d) => write!(f, "dimension {d}"),
        }
    }
}

/// A finite union of Richardson varieties, kept as its maximal nonempty components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RichardsonUnion {
    components: Vec<RichardsonSpec>,
}

impl RichardsonUnion {
    pub fn new(space: &CosetSpace, specs: impl IntoIterator<Item = RichardsonSpec>) -> Self {
        let mut all: Vec<RichardsonSpec> = specs.into_iter().filter(|s| !s.is_empty(space)).collect();
        all.sort();
        all.dedup();
        let components = all
            .iter()
            .filter(|a| !all.iter().any(|b| b != *a && a.is_contained_in(space, b)))
            .copied()
            .collect();
        RichardsonUnion { components }
    }

    pub fn empty() -> Self {
        RichardsonUnion { components: Vec::new() }
    }

    pub fn single(space: &CosetSpace, spec: RichardsonSpec) -> Self {
        Self::new(space, [spec])
    }

    pub fn components(&self) -> &[RichardsonSpec] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// All components share `τ` or all share `κ`.
    pub fn is_pointed(&self) -> bool {
        match self.components.first() {
            None => true,
            Some(first) => {
                self.components.iter().all(|c| c.tau == first.tau)
                    || self.components.iter().all(|c| c.kappa == first.kappa)
            }
        }
    }

    /// Union of the pairwise intersections with another union.
    pub fn intersect(&self, space: &CosetSpace, other: &RichardsonUnion) -> RichardsonUnion {
        let mut parts = Vec::new();
        for a in &self.components {
            for b in &other.components {
                parts.extend(intersection(space, a, b).components);
            }
        }
        RichardsonUnion::new(space, parts)
    }

    pub fn union(&self, space: &CosetSpace, other: &RichardsonUnion) -> RichardsonUnion {
        RichardsonUnion::new(space, self.components.iter().chain(&other.components).copied())
    }

    pub fn display(&self, space: &CosetSpace) -> String {
        if self.components.is_empty() {
            return "∅".into();
        }
        self.components.iter().map(|c| c.display(space)).collect::<Vec<_>>().join(" ∪ ")
    }
}

/// `X_a ∩ X_b`: components `X_u^v` with `u` a maximal common lower bound of the
/// tops and `v` a minimal common upper bound of the bottoms.
pub fn intersection(space: &CosetSpace, a: &RichardsonSpec, b: &RichardsonSpec) -> RichardsonUnion {
    let tops = space.maximal_lower_bounds(a.tau, b.tau);
    let bottoms = space.minimal_upper_bounds(a.kappa, b.kappa);
    let mut parts = Vec::new();
    for &u in &tops {
        for &v in &bottoms {
            parts.push(RichardsonSpec::new(u, v));
        }
    }
    RichardsonUnion::new(space, parts)
}

/// `∂+X_τ^κ = ∪_{κ ≤ σ ⋖ τ} X_σ^κ`.
pub fn boundary_plus(space: &CosetSpace, spec: &RichardsonSpec) -> RichardsonUnion {
    if spec.is_empty(space) {
        return RichardsonUnion::empty();
    }
    let parts = space
        .lower_covers(spec.tau)
        .iter()
        .filter(|c| space.leq(spec.kappa, c.target))
        .map(|c| RichardsonSpec::new(c.target, spec.kappa));
    RichardsonUnion::new(space, parts)
}

/// `∂−X_τ^κ = ∪_{κ ⋖ σ ≤ τ} X_τ^σ`.
pub fn boundary_minus(space: &CosetSpace, spec: &RichardsonSpec) -> RichardsonUnion {
    if spec.is_empty(space) {
        return RichardsonUnion::empty();
    }
    let parts = space
        .upper_covers(spec.kappa)
        .iter()
        .filter(|c| space.leq(c.target, spec.tau))
        .map(|c| RichardsonSpec::new(spec.tau, c.target));
    RichardsonUnion::new(space, parts)
}

/// Standard monomial counts for a `Q`-regular weight, with the endpoint
/// tables for degrees `1..=max_degree` computed once.
#[derive(Clone, Debug)]
pub struct StandardCounts<'a> {
    model: &'a PathModel,
    tables: Vec<EndpointTable<u128>>,
}

impl<'a> StandardCounts<'a> {
    pub fn new(model: &'a PathModel, max_degree: usize) -> Self {
        let tables = (1..=max_degree).map(|m| model.count_table(m)).collect();
        StandardCounts { model, tables }
    }

    pub fn model(&self) -> &PathModel {
        self.model
    }

    pub fn max_degree(&self) -> usize {
        self.tables.len()
    }

    /// Endpoint table in degree `m ≥ 1`.
    pub fn table(&self, m: usize) -> &EndpointTable<u128> {
        &self.tables[m - 1]
    }

    /// Number of degree-`m` standard monomials standard on at least one component.
    pub fn count(&self, union: &RichardsonUnion, m: usize) -> u128 {
        if union.is_empty() {
            return 0;
        }
        if m == 0 {
            return 1;
        }
        let space = self.model.space();
        self.table(m).sum_where(|x, y| {
            union.components().iter().any(|c| space.leq(x, c.tau) && space.leq(c.kappa, y))
        })
    }

    pub fn count_spec(&self, spec: &RichardsonSpec, m: usize) -> u128 {
        self.count(&RichardsonUnion::single(self.model.space(), *spec), m)
    }
}

/// Count of degree-`m` standard monomials on a union (regular weight).
pub fn count_standard_monomials(model: &PathModel, union: &RichardsonUnion, m: usize) -> u128 {
    StandardCounts::new(model, m).count(union, m)
}

/// Character `Σ e^{π̄(1)}` of the degree-`m` standard monomials on a union.
pub fn standard_character(model: &PathModel, union: &RichardsonUnion, m: usize) -> FormalCharacter {
    if union.is_empty() {
        return FormalCharacter::zero();
    }
    if m == 0 {
        return FormalCharacter::one(model.lambda().rank());
    }
    let space = model.space();
    let table = model.sequence_table(m, |p| FormalCharacter::monomial(model.weight(p), 1));
    table.sum_where(|x, y| union.components().iter().any(|c| space.leq(x, c.tau) && space.leq(c.kappa, y)))
}

/// One subquotient `O_{X_{e(π)}^κ} ⊗ χ_{−π(1)}` of the Pieri-Chevalley filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriEntry {
    pub end: CosetId,
    pub twist: Weight,
}

/// Entries `(e(π), −π(1))` over the paths standard on `X_τ^κ` with `i(π) = τ`,
/// listed in decreasing `⪰` order of the paths.
pub fn pieri_filtration(model: &PathModel, spec: &RichardsonSpec) -> Vec<PieriEntry> {
    let space = model.space();
    model
        .paths()
        .iter()
        .filter(|p| p.initial() == spec.tau && space.leq(spec.kappa, p.end()))
        .map(|p| PieriEntry { end: p.end(), twist: -model.weight(p) })
        .collect()
}

/// `h_X(m) = h_{∂+X}(m) + Σ_{entries} h_{X_{e(π)}^κ}(m−1)` for `1 ≤ m ≤ max_degree`.
pub fn hilbert_recursion_check(counts: &StandardCounts<'_>, spec: &RichardsonSpec) -> bool {
    let model = counts.model();
    let space = model.space();
    if spec.is_empty(space) {
        return true;
    }
    let whole = RichardsonUnion::single(space, *spec);
    let boundary = boundary_plus(space, spec);
    let entries = pieri_filtration(model, spec);
    (1..=counts.max_degree()).all(|m| {
        let rhs: u128 = counts.count(&boundary, m)
            + entries.iter().map(|e| counts.count_spec(&RichardsonSpec::new(e.end, spec.kappa), m - 1)).sum::<u128>();
        counts.count(&whole, m) == rhs
    })
}

/// Degree of the polynomial interpolating the values, read off from finite
/// differences: the least `d` with `Δ^{d+1}` identically zero. `None` for the
/// zero sequence or when the data are too short to decide.
pub fn polynomial_degree(values: &[i128]) -> Option<usize> {
    if values.iter().all(|&v| v == 0) {
        return None;
    }
    let mut diff = values.to_vec();
    for d in 0..values.len() {
        let next: Vec<i128> = diff.windows(2).map(|w| w[1] - w[0]).collect();
        if next.is_empty() {
            return None;
        }
        if next.iter().all(|&v| v == 0) {
            return Some(d);
        }
        diff = next;
    }
    None
}

/// Hilbert-polynomial degree of `X_τ^κ` from counts in degrees `0..=dim+3`.
pub fn hilbert_degree(counts: &StandardCounts<'_>, spec: &RichardsonSpec, upto: usize) -> Option<usize> {
    let values: Vec<i128> = (0..=upto).map(|m| counts.count_spec(spec, m) as i128).collect();
    polynomial_degree(&values)
}

/// Lifting data between `W/W_Q` and the coarser quotient `W/W_λ`.
#[derive(Clone, Debug)]
pub struct Lifting<'a> {
    fine: &'a CosetSpace,
    coarse: &'a CosetSpace,
    proj: Vec<CosetId>,
    lifts: Vec<Vec<CosetId>>,
}

/// Outcome of the λ-boundary construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaBoundary {
    /// `τ` and `κ` project to the same coset: `L_λ` is trivial on `X_τ^κ`.
    EmptyBundle,
    Union(RichardsonUnion),
}

impl<'a> Lifting<'a> {
    pub fn new(fine: &'a CosetSpace, coarse: &'a CosetSpace) -> Result<Self> {
        if !fine.parabolic().is_subset_of(coarse.parabolic()) {
            return Err(Error::ParabolicMismatch {
                finer: fine.parabolic().to_string(),
                coarser: coarse.parabolic().to_string(),
            });
        }
        let proj: Vec<CosetId> = fine.ids().map(|c| fine.project(c, coarse)).collect();
        let mut lifts = vec![Vec::new(); coarse.len()];
        for c in fine.ids() {
            lifts[proj[c.index()].index()].push(c);
        }
        Ok(Lifting { fine, coarse, proj, lifts })
    }

    pub fn fine(&self) -> &CosetSpace {
        self.fine
    }

    pub fn coarse(&self) -> &CosetSpace {
        self.coarse
    }

    pub fn project(&self, c: CosetId) -> CosetId {
        self.proj[c.index()]
    }

    /// All lifts of a coarse coset, in increasing id order.
    pub fn lifts(&self, c: CosetId) -> &[CosetId] {
        &self.lifts[c.index()]
    }

    /// Largest lift of `c` below `bound`.
    pub fn max_lift_below(&self, c: CosetId, bound: CosetId) -> Option<CosetId> {
        let cands: Vec<CosetId> = self.lifts(c).iter().copied().filter(|&x| self.fine.leq(x, bound)).collect();
        let best = *cands.iter().max()?;
        debug_assert!(cands.iter().all(|&x| self.fine.leq(x, best)));
        Some(best)
    }

    /// Smallest lift of `c` above `bound`.
    pub fn min_lift_above(&self, c: CosetId, bound: CosetId) -> Option<CosetId> {
        let cands: Vec<CosetId> = self.lifts(c).iter().copied().filter(|&x| self.fine.leq(bound, x)).collect();
        let best = *cands.iter().min()?;
        debug_assert!(cands.iter().all(|&x| self.fine.leq(best, x)));
        Some(best)
    }

    /// Greedy maximal lifts `τ ≥ σ̃_0 ≥ … ≥ σ̃_p` ignoring the lower bound.
    pub fn top_chain(&self, cosets: &[CosetId], tau: CosetId) -> Option<Vec<CosetId>> {
        let mut prev = tau;
        let mut out = Vec::with_capacity(cosets.len());
        for &c in cosets {
            prev = self.max_lift_below(c, prev)?;
            out.push(prev);
        }
        Some(out)
    }

    /// The maximal defining chain on `X_τ^κ`, if any.
    pub fn max_defining_chain(&self, cosets: &[CosetId], spec: &RichardsonSpec) -> Option<Vec<CosetId>> {
        let chain = self.top_chain(cosets, spec.tau)?;
        self.fine.leq(spec.kappa, *chain.last()?).then_some(chain)
    }

    /// The minimal defining chain on `X_τ^κ`, if any.
    pub fn min_defining_chain(&self, cosets: &[CosetId], spec: &RichardsonSpec) -> Option<Vec<CosetId>> {
        let mut prev = spec.kappa;
        let mut out = Vec::with_capacity(cosets.len());
        for &c in cosets.iter().rev() {
            prev = self.min_lift_above(c, prev)?;
            out.push(prev);
        }
        out.reverse();
        self.fine.leq(out[0], spec.tau).then_some(out)
    }

    /// Whether the path is standard on `X_τ^κ` in the sense of defining chains.
    pub fn is_standard(&self, cosets: &[CosetId], spec: &RichardsonSpec) -> bool {
        self.max_defining_chain(cosets, spec).is_some()
    }

    /// Every defining chain, by exhaustive lift selection.
    pub fn all_defining_chains(&self, cosets: &[CosetId], spec: &RichardsonSpec) -> Vec<Vec<CosetId>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.chains_from(cosets, spec, spec.tau, &mut current, &mut out);
        out
    }

    fn chains_from(
        &self,
        cosets: &[CosetId],
        spec: &RichardsonSpec,
        bound: CosetId,
        current: &mut Vec<CosetId>,
        out: &mut Vec<Vec<CosetId>>,
    ) {
        let Some((&first, rest)) = cosets.split_first() else {
            if current.last().is_some_and(|&l| self.fine.leq(spec.kappa, l)) {
                out.push(current.clone());
            }
            return;
        };
        for &x in self.lifts(first) {
            if self.fine.leq(x, bound) {
                current.push(x);
                self.chains_from(rest, spec, x, current, out);
                current.pop();
            }
        }
    }

    /// The boundary of `X_τ^κ` with respect to `λ`: the preimage of the Schubert
    /// boundary of the projection of `X_τ`, intersected with `X_τ^κ`.
    pub fn lambda_boundary(&self, spec: &RichardsonSpec) -> LambdaBoundary {
        let tbar = self.project(spec.tau);
        if tbar == self.project(spec.kappa) {
            return LambdaBoundary::EmptyBundle;
        }
        let mut parts = Vec::new();
        for cov in self.coarse.lower_covers(tbar) {
            let sigma = *self.lifts(cov.target).iter().max().expect("every coset has a lift");
            let below: Vec<CosetId> = self
                .fine
                .ids()
                .filter(|&u| self.fine.leq(u, spec.tau) && self.fine.leq(u, sigma) && self.fine.leq(spec.kappa, u))
                .collect();
            for u in maximal_elements(self.fine, &below) {
                parts.push(RichardsonSpec::new(u, spec.kappa));
            }
        }
        LambdaBoundary::Union(RichardsonUnion::new(self.fine, parts))
    }
}

/// Standard monomials for a weight that is dominant but not `Q`-regular.
///
/// `model` is the path model of `λ` on `W/W_λ`; paths are tested for defining
/// chains on the components of a pointed union in `W/W_Q`.
pub struct NonRegular<'a> {
    lifting: Lifting<'a>,
    model: &'a PathModel,
}

impl<'a> NonRegular<'a> {
    pub fn new(fine: &'a CosetSpace, model: &'a PathModel) -> Result<Self> {
        Ok(NonRegular { lifting: Lifting::new(fine, model.space())?, model })
    }

    pub fn lifting(&self) -> &Lifting<'a> {
        &self.lifting
    }

    pub fn model(&self) -> &PathModel {
        self.model
    }

    fn standard_somewhere(&self, p: &LSPath, union: &RichardsonUnion) -> bool {
        union.components().iter().any(|c| self.lifting.is_standard(&p.cosets, c))
    }

    /// Degree-`m` standard monomials on a pointed union, counted through the
    /// `m`-fold wedge as paths of shape `mλ` with a defining chain.
    pub fn count(&self, union: &RichardsonUnion, m: usize) -> Result<u128> {
        if !union.is_pointed() {
            return Err(Error::NotPointed);
        }
        if union.is_empty() {
            return Ok(0);
        }
        if m == 0 {
            return Ok(1);
        }
        let scaled;
        let model = if m == 1 {
            self.model
        } else {
            scaled = self.model.scaled(m)?;
            &scaled
        };
        Ok(model.paths().iter().filter(|p| self.standard_somewhere(p, union)).count() as u128)
    }

    /// Mixed monomials of shape `(λ, ρ, …, ρ)` with `m` copies of a regular
    /// weight `ρ`: a path `π` of shape `λ` followed by a standard sequence of
    /// shape `ρ` whose initial coset lies below the bottom of a defining chain.
    /// `m = 0` reduces to the degree-one count.
    pub fn mixed_count(&self, regular: &StandardCounts<'_>, union: &RichardsonUnion, m: usize) -> Result<u128> {
        if !union.is_pointed() {
            return Err(Error::NotPointed);
        }
        if m == 0 {
            return self.count(union, 1);
        }
        let space = self.lifting.fine;
        let table = regular.table(m);
        let mut total = 0u128;
        for p in self.model.paths() {
            let tops: Vec<(CosetId, CosetId)> = union
                .components()
                .iter()
                .filter_map(|c| {
                    let chain = self.lifting.top_chain(&p.cosets, c.tau)?;
                    Some((*chain.last()?, c.kappa))
                })
                .collect();
            if tops.is_empty() {
                continue;
            }
            total += table.sum_where(|x, y| tops.iter().any(|&(t, k)| space.leq(x, t) && space.leq(k, y)));
        }
        Ok(total)
    }

    /// Check, for `0 ≤ m ≤ max_degree`, the counting identity of the λ-boundary
    /// filtration:
    /// `mixed(X, m) = mixed(∂_λX, m) + Σ_{π} h_{X_{e(π)}^κ}(mρ)`, the sum over
    /// paths standard on `X` with `i(π) ≡ τ`, with `e(π)` the end of the maximal
    /// defining chain. Returns `None` when the bundle is trivial.
    pub fn filtration_check(&self, regular: &StandardCounts<'_>, spec: &RichardsonSpec) -> Result<Option<bool>> {
        let space = self.lifting.fine;
        if spec.is_empty(space) {
            return Ok(Some(true));
        }
        let LambdaBoundary::Union(boundary) = self.lifting.lambda_boundary(spec) else {
            return Ok(None);
        };
        let whole = RichardsonUnion::single(space, *spec);
        let tbar = self.lifting.project(spec.tau);
        let ends: Vec<CosetId> = self
            .model
            .paths()
            .iter()
            .filter(|p| p.initial() == tbar)
            .filter_map(|p| self.lifting.max_defining_chain(&p.cosets, spec))
            .map(|chain| *chain.last().expect("nonempty chain"))
            .collect();
        for m in 0..=regular.max_degree() {
            let lhs = self.mixed_count(regular, &whole, m)?;
            let rest: u128 = ends.iter().map(|&e| regular.count_spec(&RichardsonSpec::new(e, spec.kappa), m)).sum();
            if lhs != self.mixed_count(regular, &boundary, m)? + rest {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{Family, Parabolic, RootSystem};

    fn a2_flag() -> CosetSpace {
        CosetSpace::new(&RootSystem::new(Family::A, 2).unwrap(), Parabolic::empty()).unwrap()
    }

    #[test]
    fn status_examples() {
        let s = a2_flag();
        let c = |w: &str| s.parse_coset(w).unwrap();
        assert_eq!(RichardsonSpec::new(c("s1.s2"), c("s1")).status(&s), Status::Dimension(1));
        assert_eq!(RichardsonSpec::new(c("s2"), c("s2")).status(&s), Status::Dimension(0));
        assert_eq!(RichardsonSpec::new(c("s1"), c("s2")).status(&s), Status::Empty);
    }

    #[test]
    fn boundaries() {
        let s = a2_flag();
        let c = |w: &str| s.parse_coset(w).unwrap();
        let b = boundary_plus(&s, &RichardsonSpec::new(c("s1.s2"), c("e")));
        let expect = RichardsonUnion::new(&s, [RichardsonSpec::new(c("s1"), c("e")), RichardsonSpec::new(c("s2"), c("e"))]);
        assert_eq!(b, expect);
        assert!(boundary_plus(&s, &RichardsonSpec::new(c("s1"), c("s1"))).is_empty());
        let a1 = CosetSpace::new(&RootSystem::new(Family::A, 1).unwrap(), Parabolic::empty()).unwrap();
        let bm = boundary_minus(&a1, &RichardsonSpec::full(&a1));
        assert_eq!(bm.components(), &[RichardsonSpec::new(a1.top(), a1.top())]);
    }

    #[test]
    fn union_prunes_and_points() {
        let s = a2_flag();
        let c = |w: &str| s.parse_coset(w).unwrap();
        let u = RichardsonUnion::new(
            &s,
            [
                RichardsonSpec::new(c("s1.s2"), c("e")),
                RichardsonSpec::new(c("s1"), c("e")),
                RichardsonSpec::new(c("s1"), c("s2")),
            ],
        );
        assert_eq!(u.components(), &[RichardsonSpec::new(c("s1.s2"), c("e"))]);
        assert!(u.is_pointed());
        let v = RichardsonUnion::new(&s, [RichardsonSpec::new(c("s1"), c("e")), RichardsonSpec::new(c("s2.s1"), c("s2"))]);
        assert!(!v.is_pointed());
    }

    #[test]
    fn a1_counts_and_pieri() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let model = PathModel::new(&rs, &Weight(vec![1])).unwrap();
        let space = model.space();
        let counts = StandardCounts::new(&model, 5);
        let full = RichardsonSpec::full(space);
        for m in 0..=5 {
            assert_eq!(counts.count_spec(&full, m), m as u128 + 1);
            assert_eq!(counts.count_spec(&RichardsonSpec::new(space.top(), space.top()), m), 1);
        }
        let entries = pieri_filtration(&model, &full);
        assert_eq!(entries, vec![PieriEntry { end: space.top(), twist: Weight(vec![1]) }]);
        assert!(hilbert_recursion_check(&counts, &full));

        let model2 = PathModel::new(&rs, &Weight(vec![2])).unwrap();
        let entries = pieri_filtration(&model2, &RichardsonSpec::full(model2.space()));
        assert_eq!(
            entries,
            vec![
                PieriEntry { end: space.top(), twist: Weight(vec![2]) },
                PieriEntry { end: space.identity(), twist: Weight(vec![0]) },
            ]
        );
    }

    #[test]
    fn finite_difference_degree() {
        assert_eq!(polynomial_degree(&[1, 1, 1, 1]), Some(0));
        assert_eq!(polynomial_degree(&[1, 2, 3, 4, 5]), Some(1));
        assert_eq!(polynomial_degree(&[1, 3, 6, 10, 15]), Some(2));
        assert_eq!(polynomial_degree(&[0, 0, 0]), None);
    }

    #[test]
    fn defining_chain_examples() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let flag = CosetSpace::new(&rs, Parabolic::empty()).unwrap();
        let model = PathModel::new(&rs, &Weight(vec![1, 0])).unwrap();
        let lifting = Lifting::new(&flag, model.space()).unwrap();
        let c = |w: &str| flag.parse_coset(w).unwrap();
        let s1bar = model.space().parse_coset("s1").unwrap();
        let spec = RichardsonSpec::new(c("s1.s2"), c("e"));
        assert_eq!(lifting.min_defining_chain(&[s1bar], &spec), Some(vec![c("s1")]));
        assert_eq!(lifting.max_defining_chain(&[s1bar], &spec), Some(vec![c("s1.s2")]));
        assert!(lifting.is_standard(&[s1bar], &RichardsonSpec::new(c("s2.s1"), c("e"))));
        assert!(!lifting.is_standard(&[s1bar], &RichardsonSpec::new(c("s2"), c("e"))));
        let idbar = model.space().identity();
        assert_eq!(lifting.min_defining_chain(&[idbar], &spec), Some(vec![c("e")]));
    }

    #[test]
    fn lambda_boundary_examples() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let flag = CosetSpace::new(&rs, Parabolic::empty()).unwrap();
        let model = PathModel::new(&rs, &Weight(vec![1, 0])).unwrap();
        let lifting = Lifting::new(&flag, model.space()).unwrap();
        let c = |w: &str| flag.parse_coset(w).unwrap();
        assert_eq!(lifting.lambda_boundary(&RichardsonSpec::new(c("s2"), c("e"))), LambdaBoundary::EmptyBundle);
        let b = lifting.lambda_boundary(&RichardsonSpec::new(c("s1.s2"), c("e")));
        assert_eq!(b, LambdaBoundary::Union(RichardsonUnion::single(&flag, RichardsonSpec::new(c("s2"), c("e")))));

        let nr = NonRegular::new(&flag, &model).unwrap();
        let x = RichardsonUnion::single(&flag, RichardsonSpec::new(c("s1.s2"), c("e")));
        assert_eq!(nr.count(&x, 1).unwrap(), 2);
        assert_eq!(nr.count(&RichardsonUnion::single(&flag, RichardsonSpec::full(&flag)), 1).unwrap(), 3);
        let not_pointed =
            RichardsonUnion::new(&flag, [RichardsonSpec::new(c("s1"), c("e")), RichardsonSpec::new(c("s2.s1"), c("s2"))]);
        assert!(matches!(nr.count(&not_pointed, 1), Err(Error::NotPointed)));
    }

    #[test]
    fn coarser_quotient_is_rejected() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let fine = CosetSpace::new(&rs, Parabolic::from_indices([0])).unwrap();
        let coarse = CosetSpace::new(&rs, Parabolic::from_indices([1])).unwrap();
        assert!(Lifting::new(&fine, &coarse).is_err());
    }
}
