//! Exterior powers `Λ^d C^n = V(ω_d)` for `SL_n` with explicit Chevalley
//! generators, Plücker coordinates and exact linear algebra.
//!
//! Basis vectors are `e_I` for increasing `d`-subsets `I ⊆ {1..n}`; no sign is
//! attached to reordering. The coset of `W/W_{ω_d}` matching `I` is the one
//! whose orbit point is the weight of `e_I`.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CERT_PRIME};
use crate::lspath::{OrderKind, PathModel};
use crate::weyl::{CosetId, CosetSpace, Family, RootSystem, Weight};

/// Number of held-out points a straightening relation is re-checked on.
pub const HELD_OUT_POINTS: usize = 20;

/// `Λ^d C^n` with its index poset and the path model of `ω_d`.
#[derive(Clone, Debug)]
pub struct WedgeModel {
    n: usize,
    d: usize,
    basis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    paths: PathModel,
    coset_of: Vec<CosetId>,
    subset_of: Vec<usize>,
}

/// `p_I p_{I'} = Σ a_{J,K} p_J p_K` over standard pairs `J ≥ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningRelation {
    pub lhs: (Vec<usize>, Vec<usize>),
    pub rhs: Vec<(BigRational, Vec<usize>, Vec<usize>)>,
}

/// Support conditions for one relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportCheck {
    /// `η_1 ∧ η_2 ⪰ π_1 ∧ π_2` lexicographically and `π_1 ∧ π_2 ⪰^r η_1 ∧ η_2`.
    pub wedge_bounds: bool,
    /// `η_1 > π_1, π_2` and `π_1, π_2 > η_2` in the Bruhat order.
    pub endpoint_bounds: bool,
}

/// Compact name of a subset: `[1, 4]` becomes `14`.
pub fn subset_name(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect()
}

/// Parse `14` into `[1, 4]`.
pub fn parse_subset(s: &str) -> Result<Vec<usize>> {
    let err = || Error::Parse { what: "Plücker index", input: s.to_string() };
    let out: Vec<usize> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err)).collect::<Result<_>>()?;
    if out.is_empty() || out.windows(2).any(|w| w[0] >= w[1]) || out[0] == 0 {
        return Err(err());
    }
    Ok(out)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()).collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b[0].len();
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Permutation in one-line notation for a word (letters 0-based, `s_i` swaps `i, i+1`).
fn permutation_of_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for &i in word {
        p.swap(i, i + 1);
    }
    p
}

/// Reduced word of the longest element of the parabolic subgroup fixing `ω_d`.
fn longest_parabolic_word(n: usize, d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for (lo, len) in [(0, d), (d, n - d)] {
        for k in 1..len {
            for j in (0..k).rev() {
                out.push(lo + j);
            }
        }
    }
    out
}

impl WedgeModel {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if !(1 <= d && d < n && n <= 8) {
            return Err(Error::Invalid(format!("exterior power model needs 1 ≤ d < n ≤ 8, got n={n}, d={d}")));
        }
        let rs = RootSystem::new(Family::A, n - 1)?;
        let paths = PathModel::new(&rs, &Weight::fundamental(n - 1, d - 1))?;
        let basis: Vec<Vec<usize>> = (1..=n).combinations(d).collect();
        let index = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut model = WedgeModel { n, d, basis, index, paths, coset_of: Vec::new(), subset_of: Vec::new() };
        let space = model.paths.space();
        let mut coset_of = Vec::with_capacity(model.basis.len());
        let mut subset_of = vec![usize::MAX; space.len()];
        for (k, s) in model.basis.iter().enumerate() {
            let c = space
                .lookup_point(&model.subset_weight(s))
                .ok_or_else(|| Error::Invalid(format!("no coset for subset {}", subset_name(s))))?;
            coset_of.push(c);
            subset_of[c.index()] = k;
        }
        model.coset_of = coset_of;
        model.subset_of = subset_of;
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn space(&self) -> &CosetSpace {
        self.paths.space()
    }

    /// `B(ω_d)`.
    pub fn path_model(&self) -> &PathModel {
        &self.paths
    }

    pub fn subset_index(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn coset_of(&self, s: &[usize]) -> Result<CosetId> {
        let k = self.subset_index(s).ok_or_else(|| Error::Parse { what: "Plücker index", input: subset_name(s) })?;
        Ok(self.coset_of[k])
    }

    pub fn subset_of(&self, c: CosetId) -> &[usize] {
        &self.basis[self.subset_of[c.index()]]
    }

    /// `μ_j = [j ∈ I] − [j+1 ∈ I]`.
    pub fn subset_weight(&self, s: &[usize]) -> Weight {
        Weight((1..self.n).map(|j| i64::from(s.contains(&j)) - i64::from(s.contains(&(j + 1)))).collect())
    }

    /// The index order: `I ≤ J` iff `i_k ≤ j_k` for all `k`.
    pub fn index_leq(a: &[usize], b: &[usize]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    fn apply_move(&self, v: &[BigInt], from: usize, to: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim()];
        for (k, s) in self.basis.iter().enumerate() {
            if v[k].is_zero() || !s.contains(&from) || s.contains(&to) {
                continue;
            }
            let mut t: Vec<usize> = s.iter().map(|&x| if x == from { to } else { x }).collect();
            t.sort_unstable();
            out[self.index[&t]] += &v[k];
        }
        out
    }

    /// `e_i` (0-based `i`): `e_{i+2} ↦ e_{i+1}` in 1-based vector indices.
    pub fn raise(&self, i: usize, v: &[BigInt]) -> Vec<BigInt> {
        self.apply_move(v, i + 2, i + 1)
    }

    /// `f_i`: `e_{i+1} ↦ e_{i+2}`.
    pub fn lower(&self, i: usize, v: &[BigInt]) -> Vec<BigInt> {
        self.apply_move(v, i + 1, i + 2)
    }

    fn unit(&self, k: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim()];
        v[k] = BigInt::one();
        v
    }

    /// `[e_i, f_i]` acts on `e_I` by `⟨wt(e_I), α_i^∨⟩`.
    pub fn check_commutators(&self) -> bool {
        (0..self.n - 1).all(|i| {
            (0..self.dim()).all(|k| {
                let v = self.unit(k);
                let ef = self.raise(i, &self.lower(i, &v));
                let fe = self.lower(i, &self.raise(i, &v));
                let h = BigInt::from(self.subset_weight(&self.basis[k]).0[i]);
                ef.iter().zip(&fe).enumerate().all(|(j, (a, b))| a - b == if j == k { h.clone() } else { BigInt::zero() })
            })
        })
    }

    /// Index order agrees with the Bruhat order on the matching cosets.
    pub fn check_index_order(&self) -> bool {
        let space = self.space();
        self.basis.iter().enumerate().all(|(a, sa)| {
            self.basis.iter().enumerate().all(|(b, sb)| {
                Self::index_leq(sa, sb) == space.leq(self.coset_of[a], self.coset_of[b])
            })
        })
    }

    fn span_closure(&self, start: Vec<BigInt>, up: bool) -> Vec<Vec<BigInt>> {
        let mut span = vec![start];
        let mut head = 0;
        while head < span.len() {
            let v = span[head].clone();
            head += 1;
            for i in 0..self.n - 1 {
                let w = if up { self.raise(i, &v) } else { self.lower(i, &v) };
                if w.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut trial = span.clone();
                trial.push(w);
                if linalg::rank(&trial) == trial.len() {
                    span = trial;
                }
            }
        }
        span
    }

    /// `dim V_τ(ω_d)`: span of the extremal vector under the raising operators.
    pub fn demazure_dim(&self, tau: CosetId) -> usize {
        self.span_closure(self.unit(self.subset_of[tau.index()]), true).len()
    }

    /// `dim V^σ(ω_d)`: span under the lowering operators.
    pub fn opposite_dim(&self, sigma: CosetId) -> usize {
        self.span_closure(self.unit(self.subset_of[sigma.index()]), false).len()
    }

    /// `dim V_τ ∩ V^σ = dim V_τ + dim V^σ − dim(V_τ + V^σ)`.
    pub fn intersection_dim(&self, tau: CosetId, sigma: CosetId) -> usize {
        let a = self.span_closure(self.unit(self.subset_of[tau.index()]), true);
        let b = self.span_closure(self.unit(self.subset_of[sigma.index()]), false);
        let (da, db) = (a.len(), b.len());
        let sum: Vec<Vec<BigInt>> = a.into_iter().chain(b).collect();
        da + db - linalg::rank(&sum)
    }

    /// All Plücker coordinates (maximal minors) of an `n × d` matrix.
    pub fn pluecker(&self, m: &[Vec<BigInt>]) -> Vec<BigInt> {
        self.basis
            .iter()
            .map(|s| {
                let rows: Vec<Vec<BigInt>> = s.iter().map(|&r| m[r - 1].clone()).collect();
                linalg::det(&rows)
            })
            .collect()
    }

    /// Standard pairs `(J, K)` with `J ≥ K`, as basis indices.
    pub fn standard_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.dim() {
            for k in 0..self.dim() {
                if Self::index_leq(&self.basis[k], &self.basis[j]) {
                    out.push((j, k));
                }
            }
        }
        out
    }

    fn random_points(&self, rng: &mut ChaCha8Rng, count: usize) -> Vec<Vec<BigInt>> {
        (0..count).map(|_| self.pluecker(&random_matrix(rng, self.n, self.d))).collect()
    }

    /// Certify that the degree-2 standard monomials are linearly independent
    /// on the cone: full rank of their evaluation matrix modulo a prime.
    pub fn certify_standard_independence(&self, seed: u64) -> Result<()> {
        let pairs = self.standard_pairs();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = self.random_points(&mut rng, pairs.len() + 5);
        let rows: Vec<Vec<u64>> = pts
            .iter()
            .map(|p| pairs.iter().map(|&(j, k)| linalg::reduce_mod(&(&p[j] * &p[k]), CERT_PRIME)).collect())
            .collect();
        let r = linalg::rank_mod(&rows, CERT_PRIME);
        if r == pairs.len() {
            Ok(())
        } else {
            Err(Error::RankDeficient { rank: r, expected: pairs.len() })
        }
    }

    /// Solve for the straightening relation of an incomparable pair. Unknowns
    /// are the standard pairs of the same weight; the solution is checked on
    /// the fitting points and on [`HELD_OUT_POINTS`] further points.
    pub fn straighten(&self, a: &[usize], b: &[usize], seed: u64) -> Result<StraighteningRelation> {
        let ia = self.subset_index(a).ok_or_else(|| Error::Parse { what: "Plücker index", input: subset_name(a) })?;
        let ib = self.subset_index(b).ok_or_else(|| Error::Parse { what: "Plücker index", input: subset_name(b) })?;
        if Self::index_leq(a, b) || Self::index_leq(b, a) {
            return Err(Error::ComparablePair(subset_name(a), subset_name(b)));
        }
        let mut content: Vec<usize> = a.iter().chain(b).copied().collect();
        content.sort_unstable();
        let unknowns: Vec<(usize, usize)> = self
            .standard_pairs()
            .into_iter()
            .filter(|&(j, k)| {
                let mut c: Vec<usize> = self.basis[j].iter().chain(&self.basis[k]).copied().collect();
                c.sort_unstable();
                c == content
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = self.random_points(&mut rng, unknowns.len() + 5);
        let rat = |x: BigInt| BigRational::from_integer(x);
        let matrix: Vec<Vec<BigRational>> =
            pts.iter().map(|p| unknowns.iter().map(|&(j, k)| rat(&p[j] * &p[k])).collect()).collect();
        let rhs: Vec<BigRational> = pts.iter().map(|p| rat(&p[ia] * &p[ib])).collect();
        let (x, rank) = linalg::solve(&matrix, &rhs)
            .ok_or_else(|| Error::Invalid(format!("no relation found for {}·{}", subset_name(a), subset_name(b))))?;
        if rank != unknowns.len() {
            return Err(Error::RankDeficient { rank, expected: unknowns.len() });
        }
        let held = self.random_points(&mut rng, HELD_OUT_POINTS);
        for p in &held {
            let lhs = rat(&p[ia] * &p[ib]);
            let val: BigRational = unknowns.iter().zip(&x).map(|(&(j, k), c)| c * rat(&p[j] * &p[k])).sum();
            if lhs != val {
                return Err(Error::Invalid("straightening relation fails on a held-out point".into()));
            }
        }
        let rhs = unknowns
            .iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(j, k), c)| (c, self.basis[j].clone(), self.basis[k].clone()))
            .collect();
        Ok(StraighteningRelation { lhs: (a.to_vec(), b.to_vec()), rhs })
    }

    /// Check the support of a relation against the wedge-order and endpoint bounds.
    pub fn check_support(&self, rel: &StraighteningRelation) -> Result<SupportCheck> {
        let pm = &self.paths;
        let space = pm.space();
        let p1 = pm.extremal_path(self.coset_of(&rel.lhs.0)?);
        let p2 = pm.extremal_path(self.coset_of(&rel.lhs.1)?);
        let pw = pm.wedge(&[&p1, &p2]);
        let mut wedge_bounds = true;
        let mut endpoint_bounds = true;
        for (_, j, k) in &rel.rhs {
            let (cj, ck) = (self.coset_of(j)?, self.coset_of(k)?);
            let ew = pm.wedge(&[&pm.extremal_path(cj), &pm.extremal_path(ck)]);
            wedge_bounds &= pm.cmp_lex(&ew, &pw, OrderKind::Total) != Some(std::cmp::Ordering::Less)
                && pm.cmp_revlex(&pw, &ew, OrderKind::Total) != Some(std::cmp::Ordering::Less);
            endpoint_bounds &= [p1.initial(), p2.initial()].iter().all(|&c| space.lt(c, cj) && space.lt(ck, c));
        }
        Ok(SupportCheck { wedge_bounds, endpoint_bounds })
    }

    /// All incomparable unordered pairs of indices.
    pub fn incomparable_pairs(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if !Self::index_leq(a, b) && !Self::index_leq(b, a) {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// An `n × d` matrix whose column span is a point of the open Richardson
    /// cell of `X_τ^σ`: a product of simple reflections and one-parameter
    /// lower unipotents along a reduced word of the longest lift of `τ`,
    /// following the positive subexpression for the shortest lift of `σ`.
    pub fn richardson_point(&self, tau: CosetId, sigma: CosetId, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<BigInt>>> {
        let space = self.space();
        if !space.leq(sigma, tau) {
            return Err(Error::Invalid("empty Richardson variety".into()));
        }
        let n = self.n;
        let mut w_word = space.word(tau).to_vec();
        w_word.extend(longest_parabolic_word(n, self.d));
        let v = permutation_of_word(n, space.word(sigma));

        // positive distinguished subexpression, chosen from the right
        let mut current = v;
        let mut factors = Vec::with_capacity(w_word.len());
        for &i in w_word.iter().rev() {
            let mut g = identity(n);
            if current[i] > current[i + 1] {
                current.swap(i, i + 1);
                g[i][i] = BigInt::zero();
                g[i + 1][i + 1] = BigInt::zero();
                g[i][i + 1] = BigInt::from(-1);
                g[i + 1][i] = BigInt::one();
            } else {
                g[i + 1][i] = BigInt::from(rng.gen_range(1i64..=50));
            }
            factors.push(g);
        }
        if current.iter().enumerate().any(|(k, &x)| k != x) {
            return Err(Error::Invalid("shortest lift is not a subword of the longest lift".into()));
        }
        let mut g = identity(n);
        for f in factors.iter().rev() {
            g = mat_mul(&g, f);
        }
        let point: Vec<Vec<BigInt>> = g.into_iter().map(|row| row[..self.d].to_vec()).collect();

        let p = self.pluecker(&point);
        let (it, is) = (self.subset_of[tau.index()], self.subset_of[sigma.index()]);
        let pattern_ok = p[it] != BigInt::zero()
            && p[is] != BigInt::zero()
            && p.iter().enumerate().all(|(k, x)| x.is_zero() || {
                let c = self.coset_of[k];
                space.leq(sigma, c) && space.leq(c, tau)
            });
        if !pattern_ok {
            return Err(Error::Invalid("Richardson point has the wrong Plücker support".into()));
        }
        Ok(point)
    }

    /// `dim H^0(X_τ^σ, L_{mω_d})`: rank of all degree-`m` Plücker monomials
    /// evaluated at points of the open Richardson cell.
    pub fn h0_dim(&self, tau: CosetId, sigma: CosetId, m: usize, seed: u64) -> Result<usize> {
        if !self.space().leq(sigma, tau) {
            return Ok(0);
        }
        if m == 0 {
            return Ok(1);
        }
        let monomials: Vec<Vec<usize>> = (0..self.dim()).combinations_with_replacement(m).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows = Vec::with_capacity(monomials.len() + 5);
        for _ in 0..monomials.len() + 5 {
            let p = self.pluecker(&self.richardson_point(tau, sigma, &mut rng)?);
            rows.push(monomials.iter().map(|mono| mono.iter().map(|&k| p[k].clone()).product()).collect());
        }
        Ok(linalg::rank(&rows))
    }
}
