//! Root systems, Weyl groups, parabolic quotients `W/W_J` and the Bruhat order.
//!
//! Every quotient `W/W_J` is realized as the Weyl orbit of the weight
//! `λ_J = Σ_{i∉J} ω_i`, whose stabilizer is exactly `W_J`. A coset is then a
//! point of that orbit; its minimal representative has length equal to the
//! orbit distance from `λ_J`, and its left descents are the indices where the
//! orbit point has a negative coordinate. The full group is the case `J = ∅`.
//!
//! Cosets are numbered by `(length, canonical word)`, so the numeric order of
//! [`CosetId`] is the fixed total order refining the Bruhat order.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the size of any enumerated group or quotient.
pub const DEFAULT_MAX_GROUP_SIZE: usize = 40320;

/// Quotients up to this size get a full Bruhat bit table.
const ORDER_TABLE_LIMIT: usize = 8192;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse { what: "root system family", input: s.to_string() }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// An integral weight in fundamental-weight coordinates: entry `i` is the
/// pairing with the `i`-th simple coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// The parabolic generated by the simple reflections fixing this weight.
    pub fn stabilizer(&self) -> Parabolic {
        Parabolic::from_indices(self.0.iter().enumerate().filter(|(_, &c)| c == 0).map(|(i, _)| i))
    }

    /// Dominant and strictly positive exactly off the parabolic.
    pub fn is_regular_for(&self, parabolic: Parabolic) -> bool {
        self.is_dominant() && self.stabilizer() == parabolic
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated fundamental coordinates, e.g. `1,0,2`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        trimmed
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::Parse { what: "weight", input: s.to_string() })
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

/// A set of simple-root indices (0-based) generating a parabolic subgroup `W_J`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parabolic(u32);

impl Parabolic {
    pub fn empty() -> Self {
        Parabolic(0)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Parabolic(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(&self, other: Parabolic) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// `Σ_{i∉J} ω_i`, the canonical weight whose stabilizer is `W_J`.
    pub fn regular_weight(&self, rank: usize) -> Weight {
        Weight((0..rank).map(|i| i64::from(!self.contains(i))).collect())
    }

    /// Parse a 1-based comma-separated index list; empty string is the Borel.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Parabolic::empty());
        }
        let mut out = Parabolic::empty();
        for part in s.split(',') {
            let i: usize = part
                .trim()
                .trim_start_matches('s')
                .parse()
                .map_err(|_| Error::Parse { what: "parabolic", input: s.to_string() })?;
            if i == 0 || i > rank {
                return Err(Error::Parse { what: "parabolic", input: s.to_string() });
            }
            out.0 |= 1 << (i - 1);
        }
        Ok(out)
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Cartan data and positive roots of a simple root system.
///
/// `cartan[i][j] = ⟨α_i^∨, α_j⟩`; roots are stored in the simple-root basis
/// and coroots in the simple-coroot basis, aligned index by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    root_weights: Vec<Weight>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(family, rank)?;
        let (positive_roots, positive_coroots) = generate_positive_roots(&cartan);
        let root_weights = positive_roots
            .iter()
            .map(|b| {
                Weight(
                    (0..rank)
                        .map(|i| (0..rank).map(|k| b[k] * cartan[i][k]).sum())
                        .collect(),
                )
            })
            .collect();
        Ok(RootSystem { family, rank, cartan, positive_roots, positive_coroots, root_weights })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r.as_slice() == root)
    }

    /// Positive root `k` in fundamental-weight coordinates.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_weights[k]
    }

    /// `α_i` in fundamental-weight coordinates (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank).map(|j| self.cartan[j][i]).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// `⟨μ, β_k^∨⟩` via the coroot's simple-coroot expansion.
    pub fn pair(&self, mu: &Weight, k: usize) -> i64 {
        self.positive_coroots[k].iter().zip(&mu.0).map(|(c, m)| c * m).sum()
    }

    pub fn simple_reflect(&self, mu: &Weight, i: usize) -> Weight {
        let c = mu.0[i];
        let mut out = mu.clone();
        if c != 0 {
            for (j, o) in out.0.iter_mut().enumerate() {
                *o -= c * self.cartan[j][i];
            }
        }
        out
    }

    /// `s_β(μ) = μ − ⟨μ, β^∨⟩ β` for the positive root `β_k`.
    pub fn reflect(&self, mu: &Weight, k: usize) -> Weight {
        let c = self.pair(mu, k);
        mu - &self.root_weights[k].scale(c)
    }

    /// Apply `s_{i1} s_{i2} ⋯ s_{ik}` (rightmost letter first).
    pub fn apply_word(&self, word: &[usize], mu: &Weight) -> Weight {
        word.iter().rev().fold(mu.clone(), |acc, &i| self.simple_reflect(&acc, i))
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: mu.rank() });
        }
        Ok(())
    }

    /// Order of the Weyl group from the classification.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn is_valid_type(family: Family, rank: usize) -> bool {
        match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

fn cartan_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    if !RootSystem::is_valid_type(family, n) || n > 16 {
        return Err(Error::InvalidType { family: family.to_string(), rank: n });
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // α_n short
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // α_1 short, α_2 long
            link(0, 1, -3, -1);
        }
    }
    Ok(a)
}

/// Reflection closure of the simple roots, carrying coroots alongside.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = (0..n).map(|i| (unit(i), unit(i))).collect();
    while let Some((root, coroot)) = queue.pop_front() {
        if seen.contains_key(&root) {
            continue;
        }
        for j in 0..n {
            let along: i64 = (0..n).map(|m| root[m] * cartan[j][m]).sum();
            let co_along: i64 = (0..n).map(|m| coroot[m] * cartan[m][j]).sum();
            let mut r = root.clone();
            r[j] -= along;
            let mut c = coroot.clone();
            c[j] -= co_along;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !seen.contains_key(&r) {
                queue.push_back((r, c));
            }
        }
        seen.insert(root, coroot);
    }
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = seen.into_iter().collect();
    pairs.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
    });
    pairs.into_iter().unzip()
}

/// Render a 0-based reduced word as `s1.s2.s1`, the empty word as `e`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(".")
    }
}

/// Parse `s1.s2.s1` (or `1.2.1`, or `e`) into a 0-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "id" {
        return Ok(Vec::new());
    }
    s.split('.')
        .map(|p| {
            p.trim()
                .trim_start_matches('s')
                .parse::<usize>()
                .ok()
                .filter(|&i| i >= 1)
                .map(|i| i - 1)
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Parse { what: "Weyl word", input: s.to_string() })
}

/// A Weyl group element: its matrix on the weight lattice (fundamental
/// coordinates), its length and its lexicographically least reduced word.
/// Equality is matrix equality.
#[derive(Clone, Debug)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    length: usize,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        WeylElement { matrix, length: 0, word: Vec::new() }
    }

    /// Build from a reduced word; the caller is responsible for reducedness.
    pub fn from_reduced_word(rs: &RootSystem, word: &[usize]) -> Self {
        let n = rs.rank();
        let columns: Vec<Weight> = (0..n).map(|j| rs.apply_word(word, &Weight::fundamental(n, j))).collect();
        let matrix = (0..n).map(|i| (0..n).map(|j| columns[j].0[i]).collect()).collect();
        WeylElement { matrix, length: word.len(), word: word.to_vec() }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        Weight(self.matrix.iter().map(|row| row.iter().zip(&mu.0).map(|(a, b)| a * b).sum()).collect())
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word))
    }
}

/// A coset `wW_J` with its minimal-length representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    pub parabolic: Parabolic,
    pub rep: WeylElement,
}

/// Index of a coset inside a [`CosetSpace`]; numeric order is the total order ⪰.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CosetId(pub usize);

impl CosetId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A Bruhat cover `from → target` labelled by the positive root `β` with
/// `target = s_β · from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub target: CosetId,
    pub root: usize,
}

#[derive(Clone, Debug)]
enum BruhatOrder {
    /// `below[v]` holds every `u ≤ v` as a bit row.
    Table { below: Vec<Vec<u64>> },
    OnDemand,
}

/// The quotient `W/W_J` with lengths, canonical words, covers and Bruhat order.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    root_system: RootSystem,
    parabolic: Parabolic,
    base: Weight,
    points: Vec<Weight>,
    index: HashMap<Weight, CosetId>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    left: Vec<Vec<CosetId>>,
    lower_covers: Vec<Vec<Cover>>,
    upper_covers: Vec<Vec<Cover>>,
    order: BruhatOrder,
}

impl CosetSpace {
    pub fn new(rs: &RootSystem, parabolic: Parabolic) -> Result<Self> {
        Self::with_bound(rs, parabolic, DEFAULT_MAX_GROUP_SIZE)
    }

    /// The full Weyl group (`J = ∅`).
    pub fn weyl_group(rs: &RootSystem, bound: usize) -> Result<Self> {
        if rs.weyl_group_order() > bound as u128 {
            return Err(Error::BoundExceeded { what: "Weyl group", bound });
        }
        Self::with_bound(rs, Parabolic::empty(), bound)
    }

    pub fn with_bound(rs: &RootSystem, parabolic: Parabolic, bound: usize) -> Result<Self> {
        let rank = rs.rank();
        if parabolic.indices().iter().any(|&i| i >= rank) {
            return Err(Error::Invalid(format!("parabolic {parabolic} out of range for rank {rank}")));
        }
        let base = parabolic.regular_weight(rank);

        // Orbit by BFS; going up in length means reflecting a positive coordinate.
        let mut points = vec![base.clone()];
        let mut lengths = vec![0usize];
        let mut seen: HashMap<Weight, usize> = HashMap::from([(base.clone(), 0)]);
        let mut head = 0;
        while head < points.len() {
            let mu = points[head].clone();
            for i in 0..rank {
                if mu.0[i] > 0 {
                    let nu = rs.simple_reflect(&mu, i);
                    if !seen.contains_key(&nu) {
                        if points.len() >= bound {
                            return Err(Error::BoundExceeded { what: "coset space", bound });
                        }
                        seen.insert(nu.clone(), points.len());
                        points.push(nu);
                        lengths.push(lengths[head] + 1);
                    }
                }
            }
            head += 1;
        }

        // Lexicographically least reduced words by greedy smallest left descent.
        let n = points.len();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        for k in 0..n {
            if lengths[k] == 0 {
                continue;
            }
            let mu = &points[k];
            let i = (0..rank).find(|&i| mu.0[i] < 0).expect("non-identity coset has a descent");
            let lower = seen[&rs.simple_reflect(mu, i)];
            let mut w = Vec::with_capacity(lengths[k]);
            w.push(i);
            w.extend_from_slice(&words[lower]);
            words[k] = w;
        }

        // Renumber by (length, word).
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
        let points: Vec<Weight> = perm.iter().map(|&k| points[k].clone()).collect();
        let lengths: Vec<usize> = perm.iter().map(|&k| lengths[k]).collect();
        let words: Vec<Vec<usize>> = perm.iter().map(|&k| words[k].clone()).collect();
        let index: HashMap<Weight, CosetId> =
            points.iter().enumerate().map(|(k, p)| (p.clone(), CosetId(k))).collect();

        let left: Vec<Vec<CosetId>> = points
            .iter()
            .map(|mu| (0..rank).map(|i| index[&rs.simple_reflect(mu, i)]).collect())
            .collect();

        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for (k, mu) in points.iter().enumerate() {
            for r in 0..rs.num_positive_roots() {
                if rs.pair(mu, r) > 0 {
                    let j = index[&rs.reflect(mu, r)];
                    if lengths[j.0] == lengths[k] + 1 {
                        upper_covers[k].push(Cover { target: j, root: r });
                        lower_covers[j.0].push(Cover { target: CosetId(k), root: r });
                    }
                }
            }
        }

        let order = if n <= ORDER_TABLE_LIMIT {
            let words_per_row = n.div_ceil(64);
            let mut below: Vec<Vec<u64>> = Vec::with_capacity(n);
            for v in 0..n {
                let mut row = vec![0u64; words_per_row];
                row[v / 64] |= 1 << (v % 64);
                for c in &lower_covers[v] {
                    let lower: &Vec<u64> = &below[c.target.0];
                    for (a, b) in row.iter_mut().zip(lower) {
                        *a |= *b;
                    }
                }
                below.push(row);
            }
            BruhatOrder::Table { below }
        } else {
            BruhatOrder::OnDemand
        };

        Ok(CosetSpace {
            root_system: rs.clone(),
            parabolic,
            base,
            points,
            index,
            lengths,
            words,
            left,
            lower_covers,
            upper_covers,
            order,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn parabolic(&self) -> Parabolic {
        self.parabolic
    }

    /// The weight `λ_J` whose orbit realizes this quotient.
    pub fn base(&self) -> &Weight {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = CosetId> + ExactSizeIterator {
        (0..self.points.len()).map(CosetId)
    }

    pub fn identity(&self) -> CosetId {
        CosetId(0)
    }

    /// The class of the longest element `w_0`.
    pub fn top(&self) -> CosetId {
        CosetId(self.points.len() - 1)
    }

    pub fn length(&self, c: CosetId) -> usize {
        self.lengths[c.0]
    }

    pub fn word(&self, c: CosetId) -> &[usize] {
        &self.words[c.0]
    }

    pub fn name(&self, c: CosetId) -> String {
        format_word(&self.words[c.0])
    }

    /// The orbit point `τ(λ_J)`.
    pub fn point(&self, c: CosetId) -> &Weight {
        &self.points[c.0]
    }

    pub fn lookup_point(&self, mu: &Weight) -> Option<CosetId> {
        self.index.get(mu).copied()
    }

    /// `s_i · τ`.
    pub fn left_mul(&self, i: usize, c: CosetId) -> CosetId {
        self.left[c.0][i]
    }

    pub fn lower_covers(&self, c: CosetId) -> &[Cover] {
        &self.lower_covers[c.0]
    }

    pub fn upper_covers(&self, c: CosetId) -> &[Cover] {
        &self.upper_covers[c.0]
    }

    /// Apply the minimal representative of `c` to an arbitrary weight.
    pub fn act(&self, c: CosetId, mu: &Weight) -> Weight {
        self.root_system.apply_word(&self.words[c.0], mu)
    }

    /// Coset of the element given by any word (reduced or not).
    pub fn coset_of_word(&self, word: &[usize]) -> CosetId {
        self.index[&self.root_system.apply_word(word, &self.base)]
    }

    pub fn parse_coset(&self, s: &str) -> Result<CosetId> {
        let word = parse_word(s)?;
        if word.iter().any(|&i| i >= self.root_system.rank()) {
            return Err(Error::Parse { what: "Weyl word", input: s.to_string() });
        }
        Ok(self.coset_of_word(&word))
    }

    pub fn element(&self, c: CosetId) -> WeylElement {
        WeylElement::from_reduced_word(&self.root_system, &self.words[c.0])
    }

    pub fn coset(&self, c: CosetId) -> Coset {
        Coset { parabolic: self.parabolic, rep: self.element(c) }
    }

    pub fn coset_id_of(&self, w: &WeylElement) -> CosetId {
        self.index[&w.apply(&self.base)]
    }

    /// Bruhat order `u ≤ v`.
    pub fn leq(&self, u: CosetId, v: CosetId) -> bool {
        match &self.order {
            BruhatOrder::Table { below } => below[v.0][u.0 / 64] & (1 << (u.0 % 64)) != 0,
            BruhatOrder::OnDemand => self.leq_search(u, v),
        }
    }

    pub fn lt(&self, u: CosetId, v: CosetId) -> bool {
        u != v && self.leq(u, v)
    }

    pub fn comparable(&self, u: CosetId, v: CosetId) -> bool {
        self.leq(u, v) || self.leq(v, u)
    }

    fn leq_search(&self, u: CosetId, v: CosetId) -> bool {
        let target = self.lengths[u.0];
        if self.lengths[v.0] < target {
            return false;
        }
        let mut visited = vec![false; self.len()];
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if x == u {
                return true;
            }
            if self.lengths[x.0] <= target {
                continue;
            }
            for c in &self.lower_covers[x.0] {
                if !visited[c.target.0] {
                    visited[c.target.0] = true;
                    stack.push(c.target);
                }
            }
        }
        false
    }

    /// All `u ≤ v`, in increasing id order.
    pub fn below(&self, v: CosetId) -> Vec<CosetId> {
        self.ids().filter(|&u| self.leq(u, v)).collect()
    }

    /// Bruhat interval `[lo, hi]`, in increasing id order.
    pub fn interval(&self, lo: CosetId, hi: CosetId) -> Vec<CosetId> {
        self.ids().filter(|&u| self.leq(lo, u) && self.leq(u, hi)).collect()
    }

    /// Maximal elements of `{u : u ≤ a, u ≤ b}`.
    pub fn maximal_lower_bounds(&self, a: CosetId, b: CosetId) -> Vec<CosetId> {
        let common: Vec<CosetId> = self.ids().filter(|&u| self.leq(u, a) && self.leq(u, b)).collect();
        maximal_elements(self, &common)
    }

    /// Minimal elements of `{v : v ≥ a, v ≥ b}`.
    pub fn minimal_upper_bounds(&self, a: CosetId, b: CosetId) -> Vec<CosetId> {
        let common: Vec<CosetId> = self.ids().filter(|&v| self.leq(a, v) && self.leq(b, v)).collect();
        minimal_elements(self, &common)
    }

    /// Image of `c` under the projection to a coarser quotient.
    pub fn project(&self, c: CosetId, coarser: &CosetSpace) -> CosetId {
        coarser.index[&self.root_system.apply_word(&self.words[c.0], &coarser.base)]
    }
}

pub fn maximal_elements(space: &CosetSpace, set: &[CosetId]) -> Vec<CosetId> {
    set.iter().copied().filter(|&u| !set.iter().any(|&w| space.lt(u, w))).collect()
}

pub fn minimal_elements(space: &CosetSpace, set: &[CosetId]) -> Vec<CosetId> {
    set.iter().copied().filter(|&u| !set.iter().any(|&w| space.lt(w, u))).collect()
}

/// All elements of `W` with lengths and canonical words.
pub fn enumerate_weyl(rs: &RootSystem, bound: usize) -> Result<Vec<WeylElement>> {
    let group = CosetSpace::weyl_group(rs, bound)?;
    Ok(group.ids().map(|c| group.element(c)).collect())
}

/// Bruhat order on full-group elements.
pub fn bruhat_leq(group: &CosetSpace, u: &WeylElement, v: &WeylElement) -> bool {
    group.leq(group.coset_id_of(u), group.coset_id_of(v))
}

/// Minimal representative of `wW_J`.
pub fn coset_of(w: &WeylElement, space: &CosetSpace) -> Coset {
    space.coset(space.coset_id_of(w))
}
