//! Formal characters in `Z[Λ]`.
//!
//! Besides the path-model characters this module has two oracles that do not
//! look at paths at all: the Weyl character formula (alternating sum divided
//! by the Weyl denominator) and iterated Demazure operators.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lspath::{PathModel, Tally};
use crate::weyl::{CosetSpace, RootSystem, Weight};

/// One term `coeff · e^weight` in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTerm {
    pub weight: Vec<i64>,
    pub coeff: i64,
}

/// A finite integer combination of weights; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<CharTerm>", from = "Vec<CharTerm>")]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl From<FormalCharacter> for Vec<CharTerm> {
    fn from(c: FormalCharacter) -> Self {
        c.terms.into_iter().map(|(w, coeff)| CharTerm { weight: w.0, coeff }).collect()
    }
}

impl From<Vec<CharTerm>> for FormalCharacter {
    fn from(terms: Vec<CharTerm>) -> Self {
        let mut c = FormalCharacter::zero();
        for t in terms {
            c.add_term(Weight(t.weight), t.coeff);
        }
        c
    }
}

impl FormalCharacter {
    pub fn zero() -> Self {
        FormalCharacter { terms: BTreeMap::new() }
    }

    /// `coeff · e^μ`.
    pub fn monomial(mu: Weight, coeff: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(mu, coeff);
        c
    }

    /// `e^0` in the given rank.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn add_term(&mut self, mu: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coeff(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Multiply by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Self {
        FormalCharacter { terms: self.terms.iter().map(|(w, &c)| (w + mu, c)).collect() }
    }

    /// Value at `e^μ = 1` for all `μ`.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Invariance under every simple reflection.
    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| self.terms().all(|(w, c)| self.coeff(&rs.simple_reflect(w, i)) == c))
    }

    pub fn to_terms(&self) -> Vec<CharTerm> {
        self.clone().into()
    }

    /// Divide by `1 - e^{-β}` for a positive root `β` (index into the root list).
    pub fn divide_by_root_factor(&self, rs: &RootSystem, k: usize) -> Result<Self> {
        let beta = rs.root_weight(k);
        let j = beta.0.iter().position(|&b| b > 0).expect("positive roots have a positive coordinate");
        let b = beta.0[j];
        let mut lines: HashMap<Weight, BTreeMap<i64, i64>> = HashMap::new();
        for (mu, c) in self.terms() {
            let t = mu.0[j].div_euclid(b);
            let base = mu - &(t * beta);
            lines.entry(base).or_default().insert(t, c);
        }
        let mut out = Self::zero();
        for (base, line) in lines {
            // g(base + tβ) = Σ_{k≥0} f(base + (t+k)β), summed from the top.
            let lo = *line.keys().next().expect("nonempty line");
            let hi = *line.keys().next_back().expect("nonempty line");
            let mut run = 0i64;
            for t in (lo..=hi).rev() {
                run += line.get(&t).copied().unwrap_or(0);
                out.add_term(&base + &(t * beta), run);
            }
            if run != 0 {
                return Err(Error::Invalid("character not divisible by the Weyl denominator".into()));
            }
        }
        Ok(out)
    }
}

impl Tally for FormalCharacter {
    fn zero() -> Self {
        FormalCharacter::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), c);
        }
    }
    fn mul(&self, other: &Self) -> Self {
        FormalCharacter::mul(self, other)
    }
}

/// `Σ_{π∈B(λ)} e^{π(1)}`.
pub fn char_from_paths(model: &PathModel) -> FormalCharacter {
    char_of_paths(model, model.paths().iter())
}

/// `Σ e^{π(1)}` over a selection of paths.
pub fn char_of_paths<'a>(model: &PathModel, paths: impl Iterator<Item = &'a crate::lspath::LSPath>) -> FormalCharacter {
    let mut c = FormalCharacter::zero();
    for p in paths {
        c.add_term(model.weight(p), 1);
    }
    c
}

/// `Σ_{i(π)≤τ} e^{π(1)}`.
pub fn char_demazure_paths(model: &PathModel, tau: crate::weyl::CosetId) -> FormalCharacter {
    let space = model.space();
    char_of_paths(model, model.paths().iter().filter(|p| space.leq(p.initial(), tau)))
}

/// `Σ e^{π̄(1)}` over standard sequences of length `m`.
pub fn char_standard_sequences(model: &PathModel, m: usize) -> FormalCharacter {
    if m == 0 {
        return FormalCharacter::one(model.lambda().rank());
    }
    let table = model.sequence_table(m, |p| FormalCharacter::monomial(model.weight(p), 1));
    table.sum_where(|_, _| true)
}

/// Weyl character formula: `Σ_w (-1)^{ℓ(w)} e^{w(λ+ρ)-ρ} / Π_{β>0} (1 - e^{-β})`.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight, group_bound: usize) -> Result<FormalCharacter> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let group = CosetSpace::weyl_group(rs, group_bound)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut num = FormalCharacter::zero();
    for w in group.ids() {
        let sign = if group.length(w) % 2 == 0 { 1 } else { -1 };
        num.add_term(&group.act(w, &shifted) - &rho, sign);
    }
    let mut out = num;
    for k in 0..rs.num_positive_roots() {
        out = out.divide_by_root_factor(rs, k)?;
    }
    Ok(out)
}

/// `dim V(λ) = Π_{β>0} ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> u128 {
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut acc = BigRational::one();
    for k in 0..rs.num_positive_roots() {
        acc *= BigRational::new(BigInt::from(rs.pair(&shifted, k)), BigInt::from(rs.pair(&rho, k)));
    }
    acc.to_integer().to_u128().expect("dimension fits in u128")
}

/// The Demazure operator `D_i f = (f - e^{-α_i} s_i f) / (1 - e^{-α_i})`.
pub fn demazure_operator(rs: &RootSystem, i: usize, f: &FormalCharacter) -> FormalCharacter {
    let alpha = rs.simple_root(i);
    let mut out = FormalCharacter::zero();
    for (mu, c) in f.terms() {
        let n = mu.0[i];
        if n >= 0 {
            for k in 0..=n {
                out.add_term(mu - &(k * &alpha), c);
            }
        } else {
            for k in 1..-n {
                out.add_term(mu + &(k * &alpha), -c);
            }
        }
    }
    out
}

/// `D_{i_1} ⋯ D_{i_k} e^λ` for the word `i_1 … i_k`.
pub fn demazure_of_word(rs: &RootSystem, word: &[usize], lambda: &Weight) -> FormalCharacter {
    let mut f = FormalCharacter::monomial(lambda.clone(), 1);
    for &i in word.iter().rev() {
        f = demazure_operator(rs, i, &f);
    }
    f
}

/// Character of the Demazure module `V_τ(λ)` via the canonical word of `τ`.
pub fn demazure_character(space: &CosetSpace, tau: crate::weyl::CosetId, lambda: &Weight) -> FormalCharacter {
    demazure_of_word(space.root_system(), space.word(tau), lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{Family, Parabolic, DEFAULT_MAX_GROUP_SIZE};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    fn chars(pairs: &[(&[i64], i64)]) -> FormalCharacter {
        let mut c = FormalCharacter::zero();
        for (w, k) in pairs {
            c.add_term(Weight(w.to_vec()), *k);
        }
        c
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = chars(&[(&[1], 1), (&[-1], 1)]);
        let b = chars(&[(&[1], 1)]);
        assert_eq!(a.sub(&b), chars(&[(&[-1], 1)]));
        assert_eq!(a.sub(&a).len(), 0);
        assert_eq!(a.mul(&a), chars(&[(&[2], 1), (&[0], 2), (&[-2], 1)]));
        assert_eq!(a.mass(), 2);
    }

    #[test]
    fn weyl_character_small() {
        let a1 = rs(Family::A, 1);
        let c = weyl_character(&a1, &Weight(vec![2]), DEFAULT_MAX_GROUP_SIZE).unwrap();
        assert_eq!(c, chars(&[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        let a2 = rs(Family::A, 2);
        assert_eq!(weyl_character(&a2, &Weight(vec![0, 0]), DEFAULT_MAX_GROUP_SIZE).unwrap(), FormalCharacter::one(2));
        let adj = weyl_character(&a2, &Weight(vec![1, 1]), DEFAULT_MAX_GROUP_SIZE).unwrap();
        assert_eq!(adj.mass(), 8);
        assert_eq!(adj.coeff(&Weight(vec![0, 0])), 2);
        assert!(adj.is_w_invariant(&a2));
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(weyl_dimension(&rs(Family::A, 3), &Weight(vec![0, 2, 0])), 20);
        assert_eq!(weyl_dimension(&rs(Family::G, 2), &Weight(vec![1, 0])), 7);
        assert_eq!(weyl_dimension(&rs(Family::B, 2), &Weight(vec![1, 1])), 16);
    }

    #[test]
    fn demazure_examples() {
        let a2 = rs(Family::A, 2);
        let space = CosetSpace::new(&a2, Parabolic::from_indices([1])).unwrap();
        let lambda = Weight(vec![1, 0]);
        assert_eq!(demazure_character(&space, space.identity(), &lambda), FormalCharacter::monomial(lambda.clone(), 1));
        let s1 = space.parse_coset("s1").unwrap();
        let expect = chars(&[(&[1, 0], 1), (&[-1, 1], 1)]);
        assert_eq!(demazure_character(&space, s1, &lambda), expect);
        let full = demazure_character(&space, space.top(), &lambda);
        assert_eq!(full, weyl_character(&a2, &lambda, DEFAULT_MAX_GROUP_SIZE).unwrap());
    }

    #[test]
    fn demazure_negative_cases() {
        let a1 = rs(Family::A, 1);
        assert!(demazure_operator(&a1, 0, &FormalCharacter::monomial(Weight(vec![-1]), 1)).is_zero());
        let d = demazure_operator(&a1, 0, &FormalCharacter::monomial(Weight(vec![-3]), 1));
        assert_eq!(d, chars(&[(&[-1], -1), (&[1], -1)]));
    }

    #[test]
    fn non_divisible_is_rejected() {
        let a1 = rs(Family::A, 1);
        let f = FormalCharacter::monomial(Weight(vec![0]), 1);
        assert!(f.divide_by_root_factor(&a1, 0).is_err());
    }

    #[test]
    fn json_is_sorted_term_list() {
        let c = chars(&[(&[1, 0], 2), (&[-1, 1], 1)]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"[{"weight":[-1,1],"coeff":1},{"weight":[1,0],"coeff":2}]"#);
        let back: FormalCharacter = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
