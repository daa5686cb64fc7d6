//! Dynkin quivers, adapted words, the bijection between repetition-quiver
//! vertices and `Delta+ x Z`, and the Auslander-Reiten quiver `Gamma_Q`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{ConvexTotalOrder, FiniteType, ReducedWord, Root, RootSystem};

/// An orientation of a type A or D Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinQuiver {
    ty: FiniteType,
    /// One arrow per Dynkin edge, listed in `FiniteType::edges` order.
    arrows: Vec<(usize, usize)>,
}

impl DynkinQuiver {
    pub fn new(ty: FiniteType, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let edges = ty.edges();
        let mut oriented = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            let hits: Vec<_> = arrows
                .iter()
                .filter(|&&(s, t)| (s, t) == (a, b) || (s, t) == (b, a))
                .collect();
            match hits.as_slice() {
                [one] => oriented.push(**one),
                [] => {
                    return Err(Error::InvalidOrientation(format!(
                        "edge {a}-{b} of {ty} is not oriented"
                    )))
                }
                _ => {
                    return Err(Error::InvalidOrientation(format!(
                        "edge {a}-{b} of {ty} is oriented more than once"
                    )))
                }
            }
        }
        if arrows.len() != edges.len() {
            return Err(Error::InvalidOrientation(format!(
                "{} arrows given but {ty} has {} edges",
                arrows.len(),
                edges.len()
            )));
        }
        Ok(DynkinQuiver { ty, arrows: oriented })
    }

    /// Orientation from a bit mask: bit `e` clear orients edge `e` from its
    /// smaller to its larger endpoint.
    pub fn from_bits(ty: FiniteType, bits: u64) -> Self {
        let arrows = ty
            .edges()
            .into_iter()
            .enumerate()
            .map(|(e, (a, b))| if bits >> e & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        DynkinQuiver { ty, arrows }
    }

    /// `1 -> 2 -> ... ` when `forward`, all arrows reversed otherwise.
    pub fn linear(ty: FiniteType, forward: bool) -> Self {
        Self::from_bits(ty, if forward { 0 } else { u64::MAX })
    }

    /// The orientation whose height function is `xi` (indexed by node - 1).
    pub fn from_heights(ty: FiniteType, xi: &[i32]) -> Result<Self> {
        let mut arrows = Vec::new();
        for (a, b) in ty.edges() {
            let (ha, hb) = (xi[a - 1], xi[b - 1]);
            if ha == hb + 1 {
                arrows.push((a, b));
            } else if hb == ha + 1 {
                arrows.push((b, a));
            } else {
                return Err(Error::InvalidHeight(format!(
                    "heights {ha} and {hb} on edge {a}-{b} differ by more than one"
                )));
            }
        }
        Ok(DynkinQuiver { ty, arrows })
    }

    pub fn finite_type(&self) -> FiniteType {
        self.ty
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn has_arrow(&self, from: usize, to: usize) -> bool {
        self.arrows.contains(&(from, to))
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, t)| t != i || s == i)
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, t)| s != i || t == i)
    }

    pub fn sources(&self) -> Vec<usize> {
        self.ty.nodes().filter(|&i| self.is_source(i)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        self.ty.nodes().filter(|&i| self.is_sink(i)).collect()
    }

    /// `s_i Q`: reverse every arrow incident to `i`.
    pub fn reflect_at(&self, i: usize) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == i || t == i { (t, s) } else { (s, t) })
            .collect();
        DynkinQuiver { ty: self.ty, arrows }
    }

    pub fn reversed(&self) -> Self {
        DynkinQuiver {
            ty: self.ty,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    /// Vertices `j` with a path `j -> ... -> i` (including `i` itself).
    pub fn predecessors(&self, i: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([i]);
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                if t == v && seen.insert(s) {
                    stack.push(s);
                }
            }
        }
        seen
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}>{t}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses the orientation grammar `a>b,c>d,...` for a given type.
pub fn parse_orientation(ty: FiniteType, spec: &str) -> Result<DynkinQuiver> {
    let mut arrows = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part.split_once('>').ok_or_else(|| Error::Parse {
            what: "arrow",
            input: part.to_string(),
        })?;
        let parse = |s: &str| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse {
                what: "node index",
                input: s.to_string(),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        ty.check_node(a)?;
        ty.check_node(b)?;
        if !ty.are_adjacent(a, b) {
            return Err(Error::InvalidOrientation(format!("{a}-{b} is not an edge of {ty}")));
        }
        arrows.push((a, b));
    }
    DynkinQuiver::new(ty, arrows)
}

/// All `2^(#edges)` orientations, ordered by their bit mask.
pub fn all_orientations(ty: FiniteType) -> Vec<DynkinQuiver> {
    let e = ty.edges().len();
    (0..1u64 << e).map(|bits| DynkinQuiver::from_bits(ty, bits)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdaptedTarget {
    Coxeter,
    LongestElement,
}

/// A reduced word adapted to `q`: each letter is a source of the quiver
/// obtained by reflecting at the previous letters.
///
/// For the Coxeter element each vertex is used once, taking the smallest
/// unused source at each step. For the longest element the smallest source
/// that keeps the word reduced is taken until the word has `|Delta+|` letters.
pub fn adapted_word(q: &DynkinQuiver, target: AdaptedTarget) -> ReducedWord {
    let ty = q.finite_type();
    let n = ty.rank();
    let mut current = q.clone();
    let mut letters: Vec<usize> = Vec::new();
    match target {
        AdaptedTarget::Coxeter => {
            let mut used = vec![false; n + 1];
            for _ in 0..n {
                let i = ty
                    .nodes()
                    .find(|&i| !used[i] && current.is_source(i))
                    .expect("a Dynkin quiver minus used vertices has a source");
                used[i] = true;
                letters.push(i);
                current = current.reflect_at(i);
            }
        }
        AdaptedTarget::LongestElement => {
            while letters.len() < ty.num_positive_roots() {
                let i = ty
                    .nodes()
                    .find(|&i| {
                        current.is_source(i)
                            && crate::rootsys::apply_word(ty, &letters, &Root::simple(n, i)).is_positive()
                    })
                    .expect("adapted reduced words of w0 exist for Dynkin quivers");
                letters.push(i);
                current = current.reflect_at(i);
            }
        }
    }
    ReducedWord::new(ty, letters).expect("adapted words are reduced")
}

/// Whether `word` is adapted to `q` (replaying the source condition).
pub fn is_adapted(q: &DynkinQuiver, word: &[usize]) -> bool {
    let mut current = q.clone();
    for &i in word {
        if !current.is_source(i) {
            return false;
        }
        current = current.reflect_at(i);
    }
    true
}

/// A height function `xi` with `xi_i = xi_j + 1` for every arrow `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightFunction {
    xi: Vec<i32>,
}

impl HeightFunction {
    pub fn new(q: &DynkinQuiver, xi: Vec<i32>) -> Result<Self> {
        if xi.len() != q.finite_type().rank() {
            return Err(Error::InvalidHeight(format!(
                "expected {} values, got {}",
                q.finite_type().rank(),
                xi.len()
            )));
        }
        for &(s, t) in q.arrows() {
            if xi[s - 1] != xi[t - 1] + 1 {
                return Err(Error::InvalidHeight(format!("arrow {s}->{t} violated")));
            }
        }
        Ok(HeightFunction { xi })
    }

    pub fn get(&self, i: usize) -> i32 {
        self.xi[i - 1]
    }

    pub fn values(&self) -> &[i32] {
        &self.xi
    }

    pub fn shifted(&self, c: i32) -> Self {
        HeightFunction {
            xi: self.xi.iter().map(|v| v + c).collect(),
        }
    }

    pub fn min(&self) -> i32 {
        *self.xi.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> i32 {
        *self.xi.iter().max().expect("nonempty")
    }
}

/// The unique height function with `xi(base_vertex) = base_value`.
pub fn height_function(q: &DynkinQuiver, base_vertex: usize, base_value: i32) -> Result<HeightFunction> {
    let ty = q.finite_type();
    ty.check_node(base_vertex)?;
    let mut xi: Vec<Option<i32>> = vec![None; ty.rank()];
    xi[base_vertex - 1] = Some(base_value);
    let mut stack = vec![base_vertex];
    while let Some(v) = stack.pop() {
        let hv = xi[v - 1].expect("visited");
        for &(s, t) in q.arrows() {
            let (other, value) = if s == v {
                (t, hv - 1)
            } else if t == v {
                (s, hv + 1)
            } else {
                continue;
            };
            if xi[other - 1].is_none() {
                xi[other - 1] = Some(value);
                stack.push(other);
            }
        }
    }
    HeightFunction::new(q, xi.into_iter().map(|v| v.expect("connected")).collect())
}

/// The Coxeter element adapted to a quiver, `tau = s_{i_1} ... s_{i_N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterElement {
    word: ReducedWord,
}

impl CoxeterElement {
    pub fn adapted_to(q: &DynkinQuiver) -> Self {
        CoxeterElement {
            word: adapted_word(q, AdaptedTarget::Coxeter),
        }
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn apply(&self, v: &Root) -> Root {
        self.word.apply(v)
    }

    pub fn apply_inverse(&self, v: &Root) -> Root {
        self.word.apply_inverse(v)
    }
}

/// `gamma_i`: the sum of `alpha_j` over all `j` with a path `j -> i`.
pub fn gamma(q: &DynkinQuiver, i: usize) -> Root {
    let n = q.finite_type().rank();
    let mut coeffs = vec![0; n];
    for j in q.predecessors(i) {
        coeffs[j - 1] = 1;
    }
    Root::from_coeffs(coeffs)
}

/// A repetition-quiver vertex `(i, p)`.
pub type Vertex = (usize, i32);

/// The bijection `phi: (i, p) -> (beta, m)` tabulated on a window of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    window: (i32, i32),
    forward: BTreeMap<Vertex, (Root, i32)>,
    inverse: HashMap<(Root, i32), Vertex>,
}

impl PhiTable {
    pub fn window(&self) -> (i32, i32) {
        self.window
    }

    pub fn get(&self, v: Vertex) -> Option<&(Root, i32)> {
        self.forward.get(&v)
    }

    pub fn preimage(&self, beta: &Root, m: i32) -> Option<Vertex> {
        self.inverse.get(&(beta.clone(), m)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vertex, &(Root, i32))> {
        self.forward.iter()
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Tabulates `phi` on all repetition-quiver vertices with `p` in `window`.
///
/// Starting from `phi(i, xi_i) = (gamma_i, 0)`, each step down applies
/// `tau` and each step up applies `tau^{-1}`; whenever the result is a
/// negative root it is negated and `m` moves by one.
pub fn phi(q: &DynkinQuiver, xi: &HeightFunction, window: (i32, i32)) -> Result<PhiTable> {
    let (lo, hi) = window;
    if xi.min() < lo || xi.max() > hi {
        return Err(Error::WindowTooSmall { lo, hi });
    }
    let tau = CoxeterElement::adapted_to(q);
    let mut forward = BTreeMap::new();
    for i in q.finite_type().nodes() {
        let start = (gamma(q, i), 0);
        forward.insert((i, xi.get(i)), start.clone());

        let (mut beta, mut m) = start.clone();
        let mut p = xi.get(i);
        while p - 2 >= lo {
            let next = tau.apply(&beta);
            if next.is_positive() {
                beta = next;
            } else {
                beta = -&next;
                m -= 1;
            }
            p -= 2;
            forward.insert((i, p), (beta.clone(), m));
        }

        let (mut beta, mut m) = start;
        let mut p = xi.get(i);
        while p + 2 <= hi {
            let next = tau.apply_inverse(&beta);
            if next.is_positive() {
                beta = next;
            } else {
                beta = -&next;
                m += 1;
            }
            p += 2;
            forward.insert((i, p), (beta.clone(), m));
        }
    }
    let mut inverse = HashMap::with_capacity(forward.len());
    for (v, img) in &forward {
        let clash = inverse.insert(img.clone(), *v);
        assert!(clash.is_none(), "phi is injective");
    }
    Ok(PhiTable {
        window,
        forward,
        inverse,
    })
}

/// Default `p` window: `[min xi - 8N, max xi + 8N]`.
pub fn default_window(ty: FiniteType, xi: &HeightFunction) -> (i32, i32) {
    let pad = 2 * ty.rank() as i32 * 4;
    (xi.min() - pad, xi.max() + pad)
}

/// `Gamma_Q` together with the data it is built from.
#[derive(Debug, Clone)]
pub struct ARData {
    quiver: DynkinQuiver,
    height: HeightFunction,
    coxeter: CoxeterElement,
    phi: PhiTable,
    roots: RootSystem,
    /// Sorted by `(i, p)`.
    vertices: Vec<Vertex>,
    /// Arrows `(i, p) -> (j, p + 1)` between vertices of `Gamma_Q`.
    arrows: Vec<(Vertex, Vertex)>,
    vertex_of_root: Vec<Vertex>,
    m: Vec<usize>,
}

pub fn ar_quiver(q: &DynkinQuiver, xi: &HeightFunction) -> ARData {
    let ty = q.finite_type();
    let table = phi(q, xi, default_window(ty, xi)).expect("default window contains xi");
    let roots = RootSystem::new(ty);
    let coxeter = CoxeterElement::adapted_to(q);

    let vertices: Vec<Vertex> = table.iter().filter(|(_, (_, m))| *m == 0).map(|(v, _)| *v).collect();
    let member: BTreeSet<Vertex> = vertices.iter().copied().collect();
    let mut arrows = Vec::new();
    for &(i, p) in &vertices {
        for j in ty.neighbors(i) {
            if member.contains(&(j, p + 1)) {
                arrows.push(((i, p), (j, p + 1)));
            }
        }
    }
    let vertex_of_root = roots
        .roots()
        .iter()
        .map(|r| table.preimage(r, 0).expect("Gamma_Q meets every positive root"))
        .collect();

    let m = ty
        .nodes()
        .map(|i| {
            let mut beta = gamma(q, i);
            let mut k = 0;
            loop {
                beta = coxeter.apply(&beta);
                if !beta.is_positive() {
                    break k;
                }
                k += 1;
            }
        })
        .collect();

    ARData {
        quiver: q.clone(),
        height: xi.clone(),
        coxeter,
        phi: table,
        roots,
        vertices,
        arrows,
        vertex_of_root,
        m,
    }
}

impl ARData {
    pub fn quiver(&self) -> &DynkinQuiver {
        &self.quiver
    }

    pub fn finite_type(&self) -> FiniteType {
        self.quiver.finite_type()
    }

    pub fn height(&self) -> &HeightFunction {
        &self.height
    }

    pub fn coxeter(&self) -> &CoxeterElement {
        &self.coxeter
    }

    pub fn phi(&self) -> &PhiTable {
        &self.phi
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// `m_i = max{k >= 0 : tau^k(gamma_i) positive}`.
    pub fn m(&self, i: usize) -> usize {
        self.m[i - 1]
    }

    pub fn m_values(&self) -> &[usize] {
        &self.m
    }

    pub fn root_at(&self, v: Vertex) -> Option<&Root> {
        match self.phi.get(v) {
            Some((beta, 0)) => Some(beta),
            _ => None,
        }
    }

    pub fn vertex_of(&self, beta: &Root) -> Option<Vertex> {
        self.roots.index_of(beta).map(|k| self.vertex_of_root[k])
    }

    /// `{(i, p) : xi_i - 2 m_i <= p <= xi_i, p = xi_i mod 2}`.
    pub fn vertices_from_m(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for i in self.finite_type().nodes() {
            let top = self.height.get(i);
            for k in 0..=self.m(i) as i32 {
                out.push((i, top - 2 * k));
            }
        }
        out.sort();
        out
    }

    /// Simple-root vertices `phi^{-1}(alpha_j, 0)`, listed by `j`.
    pub fn simple_vertices(&self) -> Vec<Vertex> {
        let n = self.finite_type().rank();
        self.finite_type()
            .nodes()
            .map(|j| {
                self.vertex_of(&Root::simple(n, j))
                    .expect("simple roots lie in Gamma_Q")
            })
            .collect()
    }
}

/// A partial order on the positive roots, stored as a relation matrix over
/// the canonical root indexing of `RootSystem`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPartialOrder {
    roots: Vec<Root>,
    rel: Vec<Vec<bool>>,
}

impl ConvexPartialOrder {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        self.rel[a][b]
    }

    pub fn leq(&self, a: &Root, b: &Root) -> bool {
        let ia = self.roots.iter().position(|r| r == a);
        let ib = self.roots.iter().position(|r| r == b);
        matches!((ia, ib), (Some(x), Some(y)) if self.rel[x][y])
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.rel
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.roots.len();
        (0..n).all(|a| self.rel[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.rel[a][b] && self.rel[b][a])))
            && (0..n).all(|a| (0..n).all(|b| !self.rel[a][b] || (0..n).all(|c| !self.rel[b][c] || self.rel[a][c])))
    }

    /// Convexity: `beta + gamma` lies between `beta` and `gamma`.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        rs.summable_pairs()
            .into_iter()
            .all(|(a, b, c)| (self.rel[a][c] && self.rel[c][b]) || (self.rel[b][c] && self.rel[c][a]))
    }

    /// Whether the total order extends this partial order.
    pub fn is_refined_by(&self, total: &ConvexTotalOrder) -> bool {
        let pos: Vec<usize> = self
            .roots
            .iter()
            .map(|r| total.position(r).expect("same root system"))
            .collect();
        let n = self.roots.len();
        (0..n).all(|a| (0..n).all(|b| !self.rel[a][b] || pos[a] <= pos[b]))
    }
}

/// `beta <=_Q gamma` iff `d(i, j) <= a - b` where `(i, a)` and `(j, b)` are
/// the vertices of `beta` and `gamma`.
pub fn convex_order_q(ar: &ARData) -> ConvexPartialOrder {
    let ty = ar.finite_type();
    let roots = ar.root_system().roots().to_vec();
    let verts: Vec<Vertex> = roots.iter().map(|r| ar.vertex_of(r).expect("in Gamma_Q")).collect();
    let rel = verts
        .iter()
        .map(|&(i, a)| verts.iter().map(|&(j, b)| ty.distance(i, j) as i32 <= a - b).collect())
        .collect();
    ConvexPartialOrder { roots, rel }
}

/// `beta <= gamma` iff `Gamma_Q` has a path from the vertex of `gamma` to
/// the vertex of `beta`.
pub fn path_order(ar: &ARData) -> ConvexPartialOrder {
    let roots = ar.root_system().roots().to_vec();
    let index: HashMap<Vertex, usize> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| (ar.vertex_of(r).expect("in Gamma_Q"), k))
        .collect();
    let n = roots.len();
    let mut succ = vec![Vec::new(); n];
    for (s, t) in ar.arrows() {
        succ[index[s]].push(index[t]);
    }
    // reach[g][b]: path from g to b
    let mut reach = vec![vec![false; n]; n];
    for (g, row) in reach.iter_mut().enumerate() {
        let mut stack = vec![g];
        row[g] = true;
        while let Some(v) = stack.pop() {
            for &w in &succ[v] {
                if !row[w] {
                    row[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let rel = (0..n).map(|b| (0..n).map(|g| reach[g][b]).collect()).collect();
    ConvexPartialOrder { roots, rel }
}

/// The total order of the adapted reduced word of `w0` chosen by
/// `adapted_word`.
pub fn adapted_total_order(q: &DynkinQuiver) -> ConvexTotalOrder {
    let w = adapted_word(q, AdaptedTarget::LongestElement);
    ConvexTotalOrder::from_longest_word(&w).expect("adapted words of w0 give convex orders")
}

/// All minimal pairs `(beta, gamma)` of `alpha`: `beta + gamma = alpha`,
/// `beta < alpha < gamma`, and no other decomposition nested strictly
/// inside.
pub fn minimal_pairs(order: &ConvexTotalOrder, alpha: &Root) -> Vec<(Root, Root)> {
    let Some(pa) = order.position(alpha) else {
        return Vec::new();
    };
    let seq = order.sequence();
    // (beta position, gamma position) for every decomposition
    let decompositions: Vec<(usize, usize)> = seq[..pa]
        .iter()
        .enumerate()
        .filter_map(|(pb, beta)| {
            let gamma = alpha - beta;
            order.position(&gamma).filter(|&pg| pg > pa).map(|pg| (pb, pg))
        })
        .collect();
    decompositions
        .iter()
        .filter(|&&(pb, pg)| {
            !decompositions
                .iter()
                .any(|&(qb, qg)| (qb, qg) != (pb, pg) && pb <= qb && qg <= pg)
        })
        .map(|&(pb, pg)| (seq[pb].clone(), seq[pg].clone()))
        .collect()
}

impl FromStr for AdaptedTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coxeter" => Ok(AdaptedTarget::Coxeter),
            "w0" => Ok(AdaptedTarget::LongestElement),
            _ => Err(Error::Parse {
                what: "adapted word target",
                input: s.to_string(),
            }),
        }
    }
}
