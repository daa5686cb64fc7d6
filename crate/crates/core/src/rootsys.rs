//! Simply-laced root systems of type A and D.
//!
//! Roots are stored in simple-root coordinates. Node labels are 1-based and
//! follow the usual picture: type `A_N` is the chain `1 - 2 - ... - N`, and
//! type `D_N` is the chain `1 - 2 - ... - (N-2)` with the two fork nodes
//! `N-1` and `N` both attached to `N-2`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 2,
            Family::D => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => f.write_str("A"),
            Family::D => f.write_str("D"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            _ => Err(Error::Parse {
                what: "finite family",
                input: s.to_string(),
            }),
        }
    }
}

/// A finite Dynkin type `A_N` (N >= 2) or `D_N` (N >= 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteType {
    family: Family,
    rank: usize,
}

impl FiniteType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank {
                family: family.to_string(),
                rank,
                min: family.min_rank(),
            });
        }
        Ok(FiniteType { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(out_of_range(i, self.rank, self.to_string()))
        }
    }

    /// Dynkin edges `(a, b)` with `a < b`, in a fixed order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|k| (k, k + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 2).map(|k| (k, k + 1)).collect();
                e.push((n - 2, n - 1));
                e.push((n - 2, n));
                e
            }
        }
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        match self.family {
            Family::A => b == a + 1 && b <= self.rank,
            Family::D => {
                let n = self.rank;
                (b == a + 1 && b < n && a != n - 1) || (a == n - 2 && b == n)
            }
        }
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.nodes().filter(|&j| j != i && self.are_adjacent(i, j)).collect()
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        if i == j {
            2
        } else if self.are_adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        self.nodes()
            .map(|i| self.nodes().map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// Graph distance between two nodes of the Dynkin diagram.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => i.abs_diff(j),
            Family::D => {
                // fork nodes sit one step beyond N-2
                let depth = |k: usize| if k >= n - 1 { n - 1 } else { k };
                if i >= n - 1 && j >= n - 1 {
                    if i == j {
                        0
                    } else {
                        2
                    }
                } else {
                    depth(i).abs_diff(depth(j))
                }
            }
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn from_coeffs(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// Coefficient of the simple root `alpha_i` (1-based).
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// Index `i` if this is the simple root `alpha_i`.
    pub fn simple_index(&self) -> Option<usize> {
        if self.height() != 1 || !self.is_positive() {
            return None;
        }
        self.0.iter().position(|&c| c == 1).map(|p| p + 1)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", k + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `<h_i, v>` computed from the Cartan matrix.
pub fn pairing(t: FiniteType, i: usize, v: &Root) -> i32 {
    t.nodes().map(|j| t.cartan_entry(i, j) * v.coeff(j)).sum()
}

/// The simple reflection `s_i(v) = v - <h_i, v> alpha_i`.
pub fn reflect(t: FiniteType, i: usize, v: &Root) -> Root {
    let mut out = v.clone();
    out.0[i - 1] -= pairing(t, i, v);
    out
}

/// Applies `s_{w_1} s_{w_2} ... s_{w_k}` to `v` (rightmost letter acts first).
pub fn apply_word(t: FiniteType, word: &[usize], v: &Root) -> Root {
    word.iter().rev().fold(v.clone(), |acc, &i| reflect(t, i, &acc))
}

/// Applies the inverse of the word, i.e. `s_{w_k} ... s_{w_1}`.
pub fn apply_word_inverse(t: FiniteType, word: &[usize], v: &Root) -> Root {
    word.iter().fold(v.clone(), |acc, &i| reflect(t, i, &acc))
}

/// All positive roots, sorted by height and then coefficients.
pub fn positive_roots(t: FiniteType) -> Vec<Root> {
    let n = t.rank();
    let mut seen: Vec<Root> = t.nodes().map(|i| Root::simple(n, i)).collect();
    let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
    // simply laced: beta + alpha_j is a root iff <h_j, beta> = -1
    while let Some(beta) = queue.pop_front() {
        for j in t.nodes() {
            if pairing(t, j, &beta) == -1 {
                let next = &beta + &Root::simple(n, j);
                if !seen.contains(&next) {
                    seen.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    seen.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    seen
}

/// Positive roots together with a lookup table from root to index.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: FiniteType,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: FiniteType) -> Self {
        let roots = positive_roots(ty);
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        RootSystem { ty, roots, index }
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ty
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Pairs of positive roots `(beta, gamma)` with `beta + gamma` positive,
    /// listed once with `beta` before `gamma` in the canonical order.
    pub fn summable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.roots.len() {
            for b in a + 1..self.roots.len() {
                let s = &self.roots[a] + &self.roots[b];
                if let Some(c) = self.index_of(&s) {
                    out.push((a, b, c));
                }
            }
        }
        out
    }
}

/// The roots `beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}` of a word.
/// Fails if the word is not reduced (some `beta_k` is not positive).
pub fn root_sequence(t: FiniteType, letters: &[usize]) -> Result<Vec<Root>> {
    let n = t.rank();
    let mut out = Vec::with_capacity(letters.len());
    for (k, &i) in letters.iter().enumerate() {
        t.check_node(i)?;
        let beta = apply_word(t, &letters[..k], &Root::simple(n, i));
        if !beta.is_positive() {
            return Err(Error::NotReduced(letters.to_vec()));
        }
        out.push(beta);
    }
    Ok(out)
}

/// A reduced word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    ty: FiniteType,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(ty: FiniteType, letters: Vec<usize>) -> Result<Self> {
        root_sequence(ty, &letters)?;
        Ok(ReducedWord { ty, letters })
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ty
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn root_sequence(&self) -> Vec<Root> {
        root_sequence(self.ty, &self.letters).expect("validated at construction")
    }

    pub fn apply(&self, v: &Root) -> Root {
        apply_word(self.ty, &self.letters, v)
    }

    pub fn apply_inverse(&self, v: &Root) -> Root {
        apply_word_inverse(self.ty, &self.letters, v)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Some reduced word for the longest element, built by appending any
/// letter that keeps the word reduced.
pub fn longest_word(t: FiniteType) -> ReducedWord {
    let n = t.rank();
    let mut letters = Vec::new();
    while letters.len() < t.num_positive_roots() {
        let next = t
            .nodes()
            .find(|&i| apply_word(t, &letters, &Root::simple(n, i)).is_positive())
            .expect("a non-longest element has an ascent");
        letters.push(next);
    }
    ReducedWord { ty: t, letters }
}

/// The involution `i -> i*` with `alpha_i = -w0 alpha_{i*}`, returned as a
/// table indexed by `i - 1`.
pub fn w0_involution(t: FiniteType) -> Vec<usize> {
    let n = t.rank();
    t.nodes()
        .map(|i| match t.family() {
            Family::A => n + 1 - i,
            Family::D if n % 2 == 1 && i == n - 1 => n,
            Family::D if n % 2 == 1 && i == n => n - 1,
            Family::D => i,
        })
        .collect()
}

/// Whether `ord`, a permutation of the positive roots, is convex.
pub fn is_convex(t: FiniteType, ord: &[Root]) -> Result<bool> {
    let rs = RootSystem::new(t);
    let pos = positions(&rs, ord)?;
    Ok(rs.summable_pairs().into_iter().all(|(a, b, c)| {
        let (pa, pb, pc) = (pos[a], pos[b], pos[c]);
        (pa < pc && pc < pb) || (pb < pc && pc < pa)
    }))
}

/// For each canonical root index, its position in `ord`.
fn positions(rs: &RootSystem, ord: &[Root]) -> Result<Vec<usize>> {
    if ord.len() != rs.len() {
        return Err(Error::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; rs.len()];
    for (p, r) in ord.iter().enumerate() {
        let k = rs.index_of(r).ok_or(Error::NotAPermutation)?;
        if pos[k] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[k] = p;
    }
    Ok(pos)
}

/// A convex total order on the positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexTotalOrder {
    ty: FiniteType,
    sequence: Vec<Root>,
    position: HashMap<Root, usize>,
}

impl ConvexTotalOrder {
    pub fn new(ty: FiniteType, sequence: Vec<Root>) -> Result<Self> {
        if !is_convex(ty, &sequence)? {
            return Err(Error::InvalidQuiver("order is not convex".into()));
        }
        let position = sequence.iter().enumerate().map(|(p, r)| (r.clone(), p)).collect();
        Ok(ConvexTotalOrder { ty, sequence, position })
    }

    /// The order induced by a reduced word of the longest element.
    pub fn from_longest_word(w: &ReducedWord) -> Result<Self> {
        if w.len() != w.finite_type().num_positive_roots() {
            return Err(Error::NotAPermutation);
        }
        Self::new(w.finite_type(), w.root_sequence())
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ty
    }

    pub fn sequence(&self) -> &[Root] {
        &self.sequence
    }

    pub fn position(&self, r: &Root) -> Option<usize> {
        self.position.get(r).copied()
    }

    pub fn precedes_or_equal(&self, a: &Root, b: &Root) -> bool {
        match (self.position(a), self.position(b)) {
            (Some(x), Some(y)) => x <= y,
            _ => false,
        }
    }
}
