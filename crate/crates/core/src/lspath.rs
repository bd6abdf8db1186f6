//! Lakshmibai-Seshadri paths.
//!
//! A convex subset of shape `λ` is a chain of cosets `τ_0, …, τ_r` in `W/W_λ`
//! together with cuts `0 < a_1 < … < a_r < 1`; the coset `τ_{i-1}` carries the
//! weight `a_i - a_{i-1}` (with `a_0 = 0`, `a_{r+1} = 1`). An L-S path is a
//! convex subset whose chain strictly decreases in the Bruhat order and whose
//! consecutive cosets are joined by a saturated chain of Bruhat covers, each
//! with label `⟨ν, β^∨⟩` divisible by the denominator of the cut.
//!
//! All paths of a fixed shape live in a [`PathModel`], which owns the quotient
//! `W/W_λ`, the divisibility reachability tables and the enumerated set `B(λ)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{format_word, CosetId, CosetSpace, RootSystem, Weight, DEFAULT_MAX_GROUP_SIZE};

/// Default bound on the number of enumerated paths or sequences.
pub const DEFAULT_MAX_PATHS: usize = 2_000_000;

/// Which order on cosets drives the (reverse) weighted lexicographic comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// The Bruhat order; comparisons may be undefined.
    Bruhat,
    /// The fixed total refinement `⪰` (numeric order of coset ids).
    Total,
}

/// A weighted chain of cosets, not necessarily an L-S path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexSubset {
    pub shape: Weight,
    pub cosets: Vec<CosetId>,
    pub cuts: Vec<BigRational>,
}

impl ConvexSubset {
    pub fn new(shape: Weight, cosets: Vec<CosetId>, cuts: Vec<BigRational>) -> Result<Self> {
        if cosets.is_empty() || cuts.len() + 1 != cosets.len() {
            return Err(Error::InvalidPath(format!("{} cosets with {} cuts", cosets.len(), cuts.len())));
        }
        let zero = BigRational::zero();
        let one = BigRational::one();
        let mut prev = &zero;
        for a in &cuts {
            if a <= prev || a >= &one {
                return Err(Error::InvalidPath(format!("cuts not strictly increasing in (0,1): {a}")));
            }
            prev = a;
        }
        Ok(ConvexSubset { shape, cosets, cuts })
    }

    /// The constant path `(τ)`.
    pub fn single(shape: Weight, coset: CosetId) -> Self {
        ConvexSubset { shape, cosets: vec![coset], cuts: Vec::new() }
    }

    /// `i(π) = τ_0`.
    pub fn initial(&self) -> CosetId {
        self.cosets[0]
    }

    /// `e(π) = τ_r`.
    pub fn end(&self) -> CosetId {
        *self.cosets.last().expect("nonempty chain")
    }

    /// Cut `a_i` for `0 ≤ i ≤ r+1`, with the conventions `a_0 = 0`, `a_{r+1} = 1`.
    pub fn cut(&self, i: usize) -> BigRational {
        if i == 0 {
            BigRational::zero()
        } else if i > self.cuts.len() {
            BigRational::one()
        } else {
            self.cuts[i - 1].clone()
        }
    }

    /// The weights `x_1, …, x_{r+1}` of the cosets `τ_0, …, τ_r`.
    pub fn coset_weights(&self) -> Vec<BigRational> {
        (1..=self.cosets.len()).map(|i| self.cut(i) - self.cut(i - 1)).collect()
    }
}

/// A convex subset known to satisfy the L-S conditions for its shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LSPath(ConvexSubset);

impl LSPath {
    pub fn as_convex(&self) -> &ConvexSubset {
        &self.0
    }

    pub fn into_convex(self) -> ConvexSubset {
        self.0
    }
}

impl Deref for LSPath {
    type Target = ConvexSubset;
    fn deref(&self) -> &ConvexSubset {
        &self.0
    }
}

/// JSON form of a path: coset words, cuts as `p/q` strings and the shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub cosets: Vec<String>,
    pub cuts: Vec<String>,
    pub shape: Vec<i64>,
}

/// The set `B(λ)` together with the quotient it lives on.
#[derive(Clone, Debug)]
pub struct PathModel {
    lambda: Weight,
    space: CosetSpace,
    orbit: Vec<Weight>,
    max_label: i64,
    /// `reach[q][x]`: bit set of cosets below `x` joined to it by a saturated
    /// chain whose labels are all divisible by `q`.
    reach: Vec<Vec<Vec<u64>>>,
    cut_candidates: Vec<(BigRational, usize)>,
    paths: Vec<LSPath>,
    index: HashMap<LSPath, usize>,
}

fn bit_iter(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word & (1u64 << b) != 0).map(move |b| w * 64 + b)
    })
}

impl PathModel {
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        Self::with_bounds(rs, lambda, DEFAULT_MAX_GROUP_SIZE, DEFAULT_MAX_PATHS)
    }

    pub fn with_bounds(rs: &RootSystem, lambda: &Weight, group_bound: usize, path_bound: usize) -> Result<Self> {
        rs.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let space = CosetSpace::with_bound(rs, lambda.stabilizer(), group_bound)?;
        let orbit: Vec<Weight> = space.ids().map(|c| space.act(c, lambda)).collect();
        let max_label = (0..rs.num_positive_roots()).map(|k| rs.pair(lambda, k).abs()).max().unwrap_or(0);

        let n = space.len();
        let words = n.div_ceil(64);
        let mut reach = vec![Vec::new(); (max_label.max(1) + 1) as usize];
        for (q, table) in reach.iter_mut().enumerate().skip(2) {
            let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; n];
            for x in space.ids() {
                let mut row = vec![0u64; words];
                for cov in space.lower_covers(x) {
                    let label = rs.pair(&orbit[x.index()], cov.root).abs();
                    if label % q as i64 == 0 {
                        let y = cov.target.index();
                        row[y / 64] |= 1 << (y % 64);
                        for (a, b) in row.iter_mut().zip(&rows[y]) {
                            *a |= *b;
                        }
                    }
                }
                rows[x.index()] = row;
            }
            *table = rows;
        }

        let mut cut_candidates = Vec::new();
        for q in 2..=max_label {
            for p in 1..q {
                if p.gcd(&q) == 1 {
                    cut_candidates.push((BigRational::new(BigInt::from(p), BigInt::from(q)), q as usize));
                }
            }
        }
        cut_candidates.sort();

        let mut model = PathModel {
            lambda: lambda.clone(),
            space,
            orbit,
            max_label,
            reach,
            cut_candidates,
            paths: Vec::new(),
            index: HashMap::new(),
        };
        let mut found = Vec::new();
        for x in model.space.ids() {
            let mut cosets = vec![x];
            let mut cuts = Vec::new();
            model.extend(&mut cosets, &mut cuts, &mut found, path_bound)?;
        }
        let mut paths: Vec<LSPath> = found
            .into_iter()
            .map(|(cosets, cuts)| {
                let cuts = cuts.into_iter().map(|i: usize| model.cut_candidates[i].0.clone()).collect();
                LSPath(ConvexSubset { shape: lambda.clone(), cosets, cuts })
            })
            .collect();
        paths.sort_by(|a, b| model.cmp_total(b, a));
        model.index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        model.paths = paths;
        Ok(model)
    }

    fn extend(
        &self,
        cosets: &mut Vec<CosetId>,
        cuts: &mut Vec<usize>,
        out: &mut Vec<(Vec<CosetId>, Vec<usize>)>,
        bound: usize,
    ) -> Result<()> {
        if out.len() >= bound {
            return Err(Error::BoundExceeded { what: "L-S paths", bound });
        }
        out.push((cosets.clone(), cuts.clone()));
        let x = *cosets.last().expect("nonempty");
        let start = cuts.last().map_or(0, |&i| i + 1);
        for ci in start..self.cut_candidates.len() {
            let q = self.cut_candidates[ci].1;
            let targets: Vec<usize> = bit_iter(&self.reach[q][x.index()]).collect();
            for y in targets {
                cosets.push(CosetId(y));
                cuts.push(ci);
                self.extend(cosets, cuts, out, bound)?;
                cosets.pop();
                cuts.pop();
            }
        }
        Ok(())
    }

    /// The model for the shape `mλ` on the same quotient.
    pub fn scaled(&self, m: usize) -> Result<PathModel> {
        if m == 0 {
            return Err(Error::Invalid("scale factor must be positive".into()));
        }
        PathModel::new(self.space.root_system(), &self.lambda.scale(m as i64))
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn space(&self) -> &CosetSpace {
        &self.space
    }

    pub fn root_system(&self) -> &RootSystem {
        self.space.root_system()
    }

    /// `max_{β>0} ⟨λ, β^∨⟩`.
    pub fn max_label(&self) -> i64 {
        self.max_label
    }

    /// `B(λ)`, sorted decreasingly in the total order `⪰`.
    pub fn paths(&self) -> &[LSPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, i: usize) -> &LSPath {
        &self.paths[i]
    }

    pub fn index_of(&self, p: &LSPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `τ(λ)`.
    pub fn extremal_weight(&self, c: CosetId) -> &Weight {
        &self.orbit[c.index()]
    }

    /// The constant path `(τ)` as an element of `B(λ)`.
    pub fn extremal_path(&self, c: CosetId) -> LSPath {
        LSPath(ConvexSubset::single(self.lambda.clone(), c))
    }

    /// Integrality test for the pair `first > second` with cut `a` (in shape λ).
    pub fn check_integrality(&self, first: CosetId, second: CosetId, a: &BigRational) -> bool {
        if a.is_integer() {
            return self.space.leq(second, first);
        }
        let q = a.denom();
        if q > &BigInt::from(self.max_label) {
            return false;
        }
        let q = usize::try_from(q).expect("small denominator");
        let y = second.index();
        self.reach[q][first.index()][y / 64] & (1 << (y % 64)) != 0
    }

    /// The factor `m` with `shape = mλ`, if any.
    fn scale_of(&self, shape: &Weight) -> Option<BigInt> {
        if shape.rank() != self.lambda.rank() {
            return None;
        }
        if self.lambda.is_zero() {
            return shape.is_zero().then(BigInt::one);
        }
        let (i, &l) = self.lambda.0.iter().enumerate().find(|(_, &l)| l != 0)?;
        let s = shape.0[i];
        if s % l != 0 || s / l <= 0 {
            return None;
        }
        let m = s / l;
        (shape == &self.lambda.scale(m)).then(|| BigInt::from(m))
    }

    /// Whether a convex subset of shape `mλ` (any `m ≥ 1`) is an L-S path.
    pub fn is_ls_path(&self, cs: &ConvexSubset) -> bool {
        let Some(m) = self.scale_of(&cs.shape) else {
            return false;
        };
        if cs.cosets.iter().any(|c| c.index() >= self.space.len()) {
            return false;
        }
        let m = BigRational::from_integer(m);
        cs.cosets.windows(2).zip(&cs.cuts).all(|(pair, a)| {
            self.space.lt(pair[1], pair[0]) && self.check_integrality(pair[0], pair[1], &(a * &m))
        })
    }

    /// Validate a convex subset as an L-S path of some shape `mλ`.
    pub fn validate(&self, cs: ConvexSubset) -> Result<LSPath> {
        if self.is_ls_path(&cs) {
            Ok(LSPath(cs))
        } else {
            Err(Error::InvalidPath(self.describe(&cs)))
        }
    }

    /// `π(1) = Σ x_{i+1} τ_i(shape)`; `None` if not integral.
    pub fn weight_of(&self, cs: &ConvexSubset) -> Option<Weight> {
        let rank = cs.shape.rank();
        let mut acc = vec![BigRational::zero(); rank];
        for (c, x) in cs.cosets.iter().zip(cs.coset_weights()) {
            let point = self.space.act(*c, &cs.shape);
            for (a, &p) in acc.iter_mut().zip(&point.0) {
                *a += &x * BigRational::from_integer(BigInt::from(p));
            }
        }
        acc.iter()
            .map(|a| a.is_integer().then(|| i64::try_from(a.to_integer()).ok()).flatten())
            .collect::<Option<Vec<i64>>>()
            .map(Weight)
    }

    /// The weight of an L-S path, always integral.
    pub fn weight(&self, p: &LSPath) -> Weight {
        self.weight_of(p).expect("L-S paths have integral weight")
    }

    /// Standard on `X_τ^κ`: `τ ≥ i(π)` and `e(π) ≥ κ`.
    pub fn is_standard_on(&self, p: &ConvexSubset, tau: CosetId, kappa: CosetId) -> bool {
        self.space.leq(p.initial(), tau) && self.space.leq(kappa, p.end())
    }

    fn cmp_coset(&self, a: CosetId, b: CosetId, kind: OrderKind) -> Option<Ordering> {
        match kind {
            OrderKind::Total => Some(a.cmp(&b)),
            OrderKind::Bruhat => {
                if a == b {
                    Some(Ordering::Equal)
                } else if self.space.leq(a, b) {
                    Some(Ordering::Less)
                } else if self.space.leq(b, a) {
                    Some(Ordering::Greater)
                } else {
                    None
                }
            }
        }
    }

    /// Weighted lexicographic comparison: `τ_0`, then `a_1`, then `τ_1`, …
    /// An exhausted chain reads its next cut as `1`.
    pub fn cmp_lex(&self, a: &ConvexSubset, b: &ConvexSubset, kind: OrderKind) -> Option<Ordering> {
        let mut i = 0;
        loop {
            match self.cmp_coset(a.cosets[i], b.cosets[i], kind)? {
                Ordering::Equal => {}
                other => return Some(other),
            }
            let ca = a.cut(i + 1);
            let cb = b.cut(i + 1);
            match ca.cmp(&cb) {
                Ordering::Equal => {
                    if i + 1 >= a.cosets.len() || i + 1 >= b.cosets.len() {
                        // both exhausted: a cut strictly below 1 never equals the sentinel
                        return Some(Ordering::Equal);
                    }
                }
                other => return Some(other),
            }
            i += 1;
        }
    }

    /// Reverse weighted lexicographic comparison: `τ_r`, then `1 - a_r`, then
    /// `τ_{r-1}`, … An exhausted chain reads its next value as `1 - a_0 = 1`.
    pub fn cmp_revlex(&self, a: &ConvexSubset, b: &ConvexSubset, kind: OrderKind) -> Option<Ordering> {
        let (ra, rb) = (a.cosets.len(), b.cosets.len());
        let mut k = 0;
        loop {
            match self.cmp_coset(a.cosets[ra - 1 - k], b.cosets[rb - 1 - k], kind)? {
                Ordering::Equal => {}
                other => return Some(other),
            }
            let one = BigRational::one();
            let ca = &one - a.cut(ra - 1 - k);
            let cb = &one - b.cut(rb - 1 - k);
            match ca.cmp(&cb) {
                Ordering::Equal => {
                    if k + 1 >= ra || k + 1 >= rb {
                        return Some(Ordering::Equal);
                    }
                }
                other => return Some(other),
            }
            k += 1;
        }
    }

    fn cmp_total(&self, a: &ConvexSubset, b: &ConvexSubset) -> Ordering {
        self.cmp_lex(a, b, OrderKind::Total).expect("total order")
    }

    /// `π > η` in the partial weighted lexicographic order.
    pub fn gt(&self, a: &ConvexSubset, b: &ConvexSubset) -> bool {
        self.cmp_lex(a, b, OrderKind::Bruhat) == Some(Ordering::Greater)
    }

    /// `π >^r η` in the partial reverse weighted lexicographic order.
    pub fn gt_rev(&self, a: &ConvexSubset, b: &ConvexSubset) -> bool {
        self.cmp_revlex(a, b, OrderKind::Bruhat) == Some(Ordering::Greater)
    }

    /// The wedge product `π_1 ∧ … ∧ π_m`: the union of the cosets in
    /// decreasing `⪰` order, each carrying the average of its weights.
    pub fn wedge(&self, parts: &[&ConvexSubset]) -> ConvexSubset {
        assert!(!parts.is_empty(), "wedge of no paths");
        let m = parts.len();
        let mut weight: std::collections::BTreeMap<CosetId, BigRational> = std::collections::BTreeMap::new();
        for p in parts {
            for (c, x) in p.cosets.iter().zip(p.coset_weights()) {
                *weight.entry(*c).or_insert_with(BigRational::zero) += x;
            }
        }
        let denom = BigRational::from_integer(BigInt::from(m));
        let cosets: Vec<CosetId> = weight.keys().rev().copied().collect();
        let mut cuts = Vec::with_capacity(cosets.len().saturating_sub(1));
        let mut acc = BigRational::zero();
        for c in &cosets[..cosets.len() - 1] {
            acc += &weight[c] / &denom;
            cuts.push(acc.clone());
        }
        ConvexSubset { shape: parts[0].shape.scale(m as i64), cosets, cuts }
    }

    /// Inverse of the `m`-fold wedge on standard sequences: cut the path of
    /// shape `mλ` at the times `j/m` and rescale each piece.
    pub fn unwedge(&self, p: &ConvexSubset, m: usize) -> Result<Vec<LSPath>> {
        if m == 0 || p.shape != self.lambda.scale(m as i64) || !self.is_ls_path(p) {
            return Err(Error::InvalidPath(format!("not an L-S path of shape {}·{}", m, self.lambda)));
        }
        let r = p.cosets.len();
        let mm = BigRational::from_integer(BigInt::from(m));
        let mut pieces = Vec::with_capacity(m);
        for k in 0..m {
            let lo = BigRational::new(BigInt::from(k), BigInt::from(m));
            let hi = BigRational::new(BigInt::from(k + 1), BigInt::from(m));
            let mut cosets = Vec::new();
            let mut cuts = Vec::new();
            for i in 0..r {
                let (start, stop) = (p.cut(i), p.cut(i + 1));
                if start < hi && stop > lo {
                    if !cosets.is_empty() {
                        cuts.push(&start * &mm - BigRational::from_integer(BigInt::from(k)));
                    }
                    cosets.push(p.cosets[i]);
                }
            }
            let piece = ConvexSubset::new(self.lambda.clone(), cosets, cuts)?;
            pieces.push(self.validate(piece)?);
        }
        Ok(pieces)
    }

    /// Standard sequences of length `m`, optionally standard on `X_τ^κ`,
    /// as lists of path indices.
    pub fn standard_sequences(
        &self,
        m: usize,
        tau: Option<CosetId>,
        kappa: Option<CosetId>,
        bound: usize,
    ) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        if m == 0 {
            out.push(Vec::new());
            return Ok(out);
        }
        let mut current = Vec::with_capacity(m);
        self.extend_sequence(m, tau, kappa, &mut current, &mut out, bound)?;
        Ok(out)
    }

    fn extend_sequence(
        &self,
        m: usize,
        tau: Option<CosetId>,
        kappa: Option<CosetId>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        bound: usize,
    ) -> Result<()> {
        if current.len() == m {
            if out.len() >= bound {
                return Err(Error::BoundExceeded { what: "standard sequences", bound });
            }
            out.push(current.clone());
            return Ok(());
        }
        let upper = match current.last() {
            Some(&j) => Some(self.paths[j].end()),
            None => tau,
        };
        for (j, p) in self.paths.iter().enumerate() {
            if upper.is_some_and(|u| !self.space.leq(p.initial(), u)) {
                continue;
            }
            if kappa.is_some_and(|k| !self.space.leq(k, p.end())) {
                continue;
            }
            current.push(j);
            self.extend_sequence(m, tau, kappa, current, out, bound)?;
            current.pop();
        }
        Ok(())
    }

    /// `(i(π̄), e(π̄))`-indexed tallies of standard sequences of length `m ≥ 1`,
    /// each sequence contributing the product of `value(π_j)`.
    pub fn sequence_table<T: Tally>(&self, m: usize, value: impl Fn(&LSPath) -> T) -> EndpointTable<T> {
        assert!(m >= 1, "sequence tables start at length one");
        let n = self.space.len();
        let mut base: EndpointTable<T> = EndpointTable::zero(n);
        for p in &self.paths {
            base.get_mut(p.initial(), p.end()).add_assign(&value(p));
        }
        let mut acc = base.clone();
        for _ in 1..m {
            let mut next: EndpointTable<T> = EndpointTable::zero(n);
            for x in 0..n {
                // up[x'] = Σ_{y' ≥ x'} acc[x][y']
                let mut up: Vec<T> = vec![T::zero(); n];
                for (xp, slot) in up.iter_mut().enumerate() {
                    for yp in xp..n {
                        if self.space.leq(CosetId(xp), CosetId(yp)) {
                            let v = &acc.cells[x * n + yp];
                            if !v.is_zero() {
                                slot.add_assign(v);
                            }
                        }
                    }
                }
                for (xp, u) in up.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for y in 0..n {
                        let b = &base.cells[xp * n + y];
                        if !b.is_zero() {
                            next.cells[x * n + y].add_assign(&u.mul(b));
                        }
                    }
                }
            }
            acc = next;
        }
        acc
    }

    /// Counts of standard sequences of length `m ≥ 1` by endpoints.
    pub fn count_table(&self, m: usize) -> EndpointTable<u128> {
        self.sequence_table(m, |_| 1u128)
    }

    fn collect_saturated(&self, set: &[usize], gt: impl Fn(&ConvexSubset, &ConvexSubset) -> bool) -> bool {
        let member: std::collections::HashSet<usize> = set.iter().copied().collect();
        for (e, eta) in self.paths.iter().enumerate() {
            if member.contains(&e) {
                continue;
            }
            let above = set.iter().any(|&a| gt(&self.paths[a], eta));
            let below = set.iter().any(|&b| gt(eta, &self.paths[b]));
            if above && below {
                return false;
            }
        }
        true
    }

    /// `S` is positive saturated: `π' > η > π` with `π, π' ∈ S` forces `η ∈ S`.
    pub fn is_positive_saturated(&self, set: &[usize]) -> bool {
        self.collect_saturated(set, |a, b| self.gt(a, b))
    }

    /// `S` is negative saturated for the reverse order `>^r`.
    pub fn is_negative_saturated(&self, set: &[usize]) -> bool {
        self.collect_saturated(set, |a, b| self.gt_rev(a, b))
    }

    /// `{η : η ≥ π for some π ∈ S}`, the smallest maximally positive saturated superset.
    pub fn positive_closure(&self, set: &[usize]) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&e| set.iter().any(|&s| e == s || self.gt(&self.paths[e], &self.paths[s])))
            .collect()
    }

    /// `{η : π ≥^r η for some π ∈ S}`, the smallest maximally negative saturated superset.
    pub fn negative_closure(&self, set: &[usize]) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&e| set.iter().any(|&s| e == s || self.gt_rev(&self.paths[s], &self.paths[e])))
            .collect()
    }

    pub fn is_maximally_positive_saturated(&self, set: &[usize]) -> bool {
        let mut closure = self.positive_closure(set);
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        closure.sort_unstable();
        closure == sorted
    }

    pub fn is_maximally_negative_saturated(&self, set: &[usize]) -> bool {
        let mut closure = self.negative_closure(set);
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        closure.sort_unstable();
        closure == sorted
    }

    pub fn to_record(&self, cs: &ConvexSubset) -> PathRecord {
        PathRecord {
            cosets: cs.cosets.iter().map(|&c| self.space.name(c)).collect(),
            cuts: cs.cuts.iter().map(|a| a.to_string()).collect(),
            shape: cs.shape.0.clone(),
        }
    }

    pub fn from_record(&self, rec: &PathRecord) -> Result<ConvexSubset> {
        let cosets = rec.cosets.iter().map(|w| self.space.parse_coset(w)).collect::<Result<Vec<_>>>()?;
        let cuts = rec
            .cuts
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(|_| Error::Parse { what: "rational cut", input: s.clone() }))
            .collect::<Result<Vec<_>>>()?;
        ConvexSubset::new(Weight(rec.shape.clone()), cosets, cuts)
    }

    /// Human-readable form `(s1.s2, s1; 1/2)`.
    pub fn describe(&self, cs: &ConvexSubset) -> String {
        let cosets: Vec<String> = cs.cosets.iter().map(|&c| format_word(self.space.word(c))).collect();
        if cs.cuts.is_empty() {
            format!("({})", cosets.join(","))
        } else {
            let cuts: Vec<String> = cs.cuts.iter().map(|a| a.to_string()).collect();
            format!("({}; {})", cosets.join(","), cuts.join(","))
        }
    }
}

/// A commutative semiring used to tally standard sequences.
pub trait Tally: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += *other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// A square table indexed by (initial coset, final coset).
#[derive(Clone, Debug, PartialEq)]
pub struct EndpointTable<T> {
    n: usize,
    cells: Vec<T>,
}

impl<T: Tally> EndpointTable<T> {
    pub fn zero(n: usize) -> Self {
        EndpointTable { n, cells: vec![T::zero(); n * n] }
    }

    pub fn get(&self, initial: CosetId, end: CosetId) -> &T {
        &self.cells[initial.index() * self.n + end.index()]
    }

    pub fn get_mut(&mut self, initial: CosetId, end: CosetId) -> &mut T {
        &mut self.cells[initial.index() * self.n + end.index()]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Sum of the entries selected by a predicate on (initial, end).
    pub fn sum_where(&self, mut keep: impl FnMut(CosetId, CosetId) -> bool) -> T {
        let mut acc = T::zero();
        for x in 0..self.n {
            for y in 0..self.n {
                let v = &self.cells[x * self.n + y];
                if !v.is_zero() && keep(CosetId(x), CosetId(y)) {
                    acc.add_assign(v);
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Family;

    fn model(f: Family, n: usize, lambda: &[i64]) -> PathModel {
        let rs = RootSystem::new(f, n).unwrap();
        PathModel::new(&rs, &Weight(lambda.to_vec())).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn a1_two_omega() {
        let m = model(Family::A, 1, &[2]);
        assert_eq!(m.len(), 3);
        let s = m.space().top();
        let id = m.space().identity();
        let descr: Vec<String> = m.paths().iter().map(|p| m.describe(p)).collect();
        assert_eq!(descr, vec!["(s1)", "(s1,e; 1/2)", "(e)"]);
        let mid = &m.paths()[1];
        assert_eq!(m.weight(mid), Weight(vec![0]));
        assert!(m.check_integrality(s, id, &q(1, 2)));
        assert!(!m.check_integrality(s, id, &q(1, 3)));
    }

    #[test]
    fn minuscule_and_zero() {
        let m = model(Family::A, 2, &[1, 0]);
        assert_eq!(m.len(), 3);
        assert!(m.paths().iter().all(|p| p.cuts.is_empty()));
        let z = model(Family::B, 2, &[0, 0]);
        assert_eq!(z.len(), 1);
        assert_eq!(z.weight(&z.paths()[0]), Weight(vec![0, 0]));
        let id = z.space().identity();
        assert!(z.check_integrality(id, id, &q(1, 1)));
    }

    #[test]
    fn single_coset_weight_is_extremal() {
        let m = model(Family::G, 2, &[1, 1]);
        for c in m.space().ids() {
            let p = m.extremal_path(c);
            assert_eq!(m.weight(&p), m.space().act(c, m.lambda()));
            assert!(m.index_of(&p).is_some());
        }
    }

    #[test]
    fn lex_comparisons_a1() {
        let m = model(Family::A, 1, &[2]);
        let top = &m.paths()[0];
        let mid = &m.paths()[1];
        let low = &m.paths()[2];
        for kind in [OrderKind::Bruhat, OrderKind::Total] {
            assert_eq!(m.cmp_lex(top, mid, kind), Some(Ordering::Greater));
            assert_eq!(m.cmp_lex(mid, top, kind), Some(Ordering::Less));
            assert_eq!(m.cmp_lex(top, low, kind), Some(Ordering::Greater));
            assert_eq!(m.cmp_revlex(top, low, kind), Some(Ordering::Greater));
            assert_eq!(m.cmp_revlex(mid, low, kind), Some(Ordering::Less));
            assert_eq!(m.cmp_lex(mid, mid, kind), Some(Ordering::Equal));
        }
    }

    #[test]
    fn incomparable_in_bruhat_lex() {
        let m = model(Family::A, 2, &[1, 1]);
        let s1 = m.space().parse_coset("s1").unwrap();
        let s2 = m.space().parse_coset("s2").unwrap();
        let a = m.extremal_path(s1);
        let b = m.extremal_path(s2);
        assert_eq!(m.cmp_lex(&a, &b, OrderKind::Bruhat), None);
        assert!(m.cmp_lex(&a, &b, OrderKind::Total).is_some());
    }

    #[test]
    fn wedge_examples_a1() {
        let m = model(Family::A, 1, &[1]);
        let s = m.extremal_path(m.space().top());
        let e = m.extremal_path(m.space().identity());
        let w = m.wedge(&[&s, &e]);
        assert_eq!(w.shape, Weight(vec![2]));
        assert_eq!(w.cosets, vec![m.space().top(), m.space().identity()]);
        assert_eq!(w.cuts, vec![q(1, 2)]);
        assert_eq!(m.wedge(&[&s, &s]).cosets, vec![m.space().top()]);
        let back = m.unwedge(&w, 2).unwrap();
        assert_eq!(back, vec![s.clone(), e.clone()]);

        let m2 = model(Family::A, 1, &[2]);
        let p: Vec<&ConvexSubset> = m2.paths().iter().map(|p| p.as_convex()).collect();
        let w3 = m2.wedge(&[p[0], p[1], p[2]]);
        assert_eq!(w3.cuts, vec![q(1, 2)]);
        assert_eq!(w3.shape, Weight(vec![6]));
    }

    #[test]
    fn unwedge_rejects_non_paths() {
        let m = model(Family::A, 1, &[1]);
        let bogus = ConvexSubset::new(Weight(vec![2]), vec![m.space().top(), m.space().identity()], vec![q(1, 3)]).unwrap();
        assert!(m.unwedge(&bogus, 2).is_err());
    }

    #[test]
    fn standard_sequences_a1() {
        let m = model(Family::A, 1, &[1]);
        let all = m.standard_sequences(2, None, None, 100).unwrap();
        assert_eq!(all.len(), 3);
        let s = m.space().top();
        let filtered = m.standard_sequences(2, Some(s), Some(s), 100).unwrap();
        assert_eq!(filtered.len(), 1);
        let table = m.count_table(2);
        assert_eq!(table.sum_where(|_, _| true), 3);
    }

    #[test]
    fn standard_on_definition() {
        let m = model(Family::A, 1, &[2]);
        let s = m.space().top();
        let e = m.space().identity();
        assert!(m.is_standard_on(&m.extremal_path(e), s, e));
        assert!(!m.is_standard_on(&m.paths()[1], s, s));
        assert!(m.is_standard_on(&m.extremal_path(s), s, s));
    }

    #[test]
    fn saturation_examples() {
        let m = model(Family::A, 1, &[1]);
        let bottom = m.len() - 1;
        assert_eq!(m.positive_closure(&[bottom]).len(), 2);
        assert!(m.is_maximally_positive_saturated(&[0]));
        assert!(m.is_positive_saturated(&[]));
        assert!(m.is_negative_saturated(&[]));
        let m2 = model(Family::A, 1, &[2]);
        assert!(!m2.is_positive_saturated(&[0, 2]));
        assert!(m2.is_positive_saturated(&[0, 1]));
    }

    #[test]
    fn record_round_trip() {
        let m = model(Family::A, 2, &[1, 1]);
        for p in m.paths() {
            let rec = m.to_record(p);
            let json = serde_json::to_string(&rec).unwrap();
            let back: PathRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(&m.from_record(&back).unwrap(), p.as_convex());
        }
    }
}
