//! Dorey-type conditions for surjections `V(i,x) (x) V(j,y) ->> V(k,z)`
//! between fundamental modules, their twisted counterparts through `pi`,
//! and the embedding of adjacent pairs into an AR quiver.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{
    all_orientations, ar_quiver, height_function, minimal_pairs, ARData, DynkinQuiver, HeightFunction,
};
use crate::rootsys::{ConvexTotalOrder, Family, FiniteType, Root};
use crate::sequiver::{are_dual, pi, pi_preimages, vertex_class, SeVertex};
use crate::spectral::{zero_order, AffineType, DenominatorTable, SpectralParam};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoreyCondition {
    AI,
    AII,
    DI,
    DII,
    DIII,
}

impl fmt::Display for DoreyCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DoreyCondition::AI => "A-i",
            DoreyCondition::AII => "A-ii",
            DoreyCondition::DI => "D-i",
            DoreyCondition::DII => "D-ii",
            DoreyCondition::DIII => "D-iii",
        })
    }
}

impl Serialize for DoreyCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `((i, x), (j, y), (k, z))` for the question `V(i,x) (x) V(j,y) ->> V(k,z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoreyTriple {
    g: AffineType,
    points: [(usize, SpectralParam); 3],
}

impl DoreyTriple {
    pub fn new(g: AffineType, points: [(usize, SpectralParam); 3]) -> Result<Self> {
        for (i, _) in points {
            g.check_node(i)?;
        }
        Ok(DoreyTriple { g, points })
    }

    pub fn from_vertices(v: [SeVertex; 3]) -> Self {
        DoreyTriple {
            g: v[0].affine_type(),
            points: v.map(|v| (v.i(), v.x())),
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.g
    }

    pub fn points(&self) -> [(usize, SpectralParam); 3] {
        self.points
    }

    pub fn vertices(&self) -> [SeVertex; 3] {
        self.points.map(|(i, x)| vertex_class(self.g, i, x).expect("validated"))
    }

    /// Applies `pi` to every point.
    pub fn pi(&self) -> Result<DoreyTriple> {
        let v = self.vertices();
        Ok(DoreyTriple::from_vertices([pi(&v[0])?, pi(&v[1])?, pi(&v[2])?]))
    }

    /// Multiplies every spectral parameter by `c`.
    pub fn translate(&self, c: SpectralParam) -> DoreyTriple {
        DoreyTriple {
            g: self.g,
            points: self.points.map(|(i, x)| (i, x * c)),
        }
    }
}

impl fmt::Display for DoreyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(i, x), (j, y), (k, z)] = self.points;
        write!(f, "(({i}, {x}), ({j}, {y}), ({k}, {z}))")
    }
}

impl Serialize for DoreyTriple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(3))?;
        for (i, x) in self.points {
            seq.serialize_element(&(i, x))?;
        }
        seq.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoreyVerdict {
    pub holds: bool,
    /// The matched condition, for untwisted queries.
    pub condition: Option<DoreyCondition>,
    /// The lifted untwisted triple and its condition, for twisted queries.
    pub witness: Option<(DoreyTriple, DoreyCondition)>,
}

impl DoreyVerdict {
    fn fails() -> Self {
        DoreyVerdict {
            holds: false,
            condition: None,
            witness: None,
        }
    }
}

fn wrong_type(expected: &str, g: AffineType) -> Error {
    Error::WrongAffineType {
        expected: expected.into(),
        got: g.to_string(),
    }
}

/// Decides `Hom(V(i,x) (x) V(j,y), V(k,z)) != 0` for `A_N^(1)` and
/// `D_N^(1)`.
pub fn dorey_untwisted(t: &DoreyTriple) -> Result<DoreyVerdict> {
    let g = t.g;
    if g.is_twisted() {
        return Err(wrong_type("untwisted", g));
    }
    let [(i, x), (j, y), (k, z)] = t.points;
    let condition = match g.finite_type().family() {
        Family::A => match_a(g.n() as i32, [i as i32, j as i32, k as i32], x / z, y / z),
        Family::D => match_d(g.finite_type(), [i as i32, j as i32, k as i32], x / z, y / z),
    };
    Ok(DoreyVerdict {
        holds: condition.is_some(),
        condition,
        witness: None,
    })
}

fn mq(p: i32) -> SpectralParam {
    SpectralParam::minus_q_pow(p)
}

fn match_a(n: i32, [i, j, k]: [i32; 3], rx: SpectralParam, ry: SpectralParam) -> Option<DoreyCondition> {
    if i + j < n + 1 && k == i + j && rx == mq(-j) && ry == mq(i) {
        return Some(DoreyCondition::AI);
    }
    if i + j > n + 1 && k == i + j - n - 1 && rx == mq(-n - 1 + j) && ry == mq(n + 1 - i) {
        return Some(DoreyCondition::AII);
    }
    None
}

fn match_d(ty: FiniteType, idx: [i32; 3], rx: SpectralParam, ry: SpectralParam) -> Option<DoreyCondition> {
    let n = ty.rank() as i32;
    let [i, j, k] = idx;
    let ratios = |a: i32, b: i32| rx == mq(a) && ry == mq(b);

    let l = *idx.iter().max().expect("three entries");
    let at_max: Vec<usize> = (0..3).filter(|&p| idx[p] == l).collect();
    if l <= n - 2 && at_max.len() == 1 {
        let rest: i32 = idx.iter().sum::<i32>() - l;
        let ok = rest == l
            && match at_max[0] {
                2 => ratios(-j, i),
                0 => ratios(-j, -i + 2 * n - 2),
                _ => ratios(j - 2 * n + 2, i),
            };
        if ok {
            return Some(DoreyCondition::DI);
        }
    }

    if i + j >= n && k == 2 * n - 2 - i - j && i.max(j).max(k) <= n - 2 && ratios(-j, i) {
        return Some(DoreyCondition::DII);
    }

    let s = *idx.iter().min().expect("three entries");
    let at_min: Vec<usize> = (0..3).filter(|&p| idx[p] == s).collect();
    if s <= n - 2 && at_min.len() == 1 {
        let others: Vec<i32> = (0..3).filter(|&p| p != at_min[0]).map(|p| idx[p]).collect();
        if others.iter().all(|&o| o >= n - 1) {
            let star = |a: i32| ty_istar(ty, a);
            let (m, l) = (others[0], others[1]);
            let parity_ok = if at_min[0] == 2 {
                (n - s - (l - m)).rem_euclid(2) == 0
            } else {
                // symmetric in the roles of m and l
                (n - s - (l - star(m))).rem_euclid(2) == 0
            };
            let ok = parity_ok
                && match at_min[0] {
                    2 => ratios(-n + k + 1, n - k - 1),
                    0 => ratios(-n + i + 1, 2 * i),
                    _ => ratios(-2 * j, n - j - 1),
                };
            if ok {
                return Some(DoreyCondition::DIII);
            }
        }
    }
    None
}

fn ty_istar(ty: FiniteType, a: i32) -> i32 {
    crate::rootsys::w0_involution(ty)[a as usize - 1] as i32
}

/// The eight lifts of a twisted triple, in a fixed order.
pub fn lifts(t: &DoreyTriple) -> Result<Vec<DoreyTriple>> {
    if !t.g.is_twisted() {
        return Err(wrong_type("twisted", t.g));
    }
    let v = t.vertices();
    let pre = [pi_preimages(&v[0])?, pi_preimages(&v[1])?, pi_preimages(&v[2])?];
    let mut out = Vec::with_capacity(8);
    for a in pre[0] {
        for b in pre[1] {
            for c in pre[2] {
                out.push(DoreyTriple::from_vertices([a, b, c]));
            }
        }
    }
    Ok(out)
}

/// Decides the twisted question by lifting through `pi`: it holds iff one
/// of the eight lifts satisfies an untwisted condition.
pub fn dorey_twisted(t: &DoreyTriple) -> Result<DoreyVerdict> {
    for lift in lifts(t)? {
        if let Some(c) = dorey_untwisted(&lift)?.condition {
            return Ok(DoreyVerdict {
                holds: true,
                condition: None,
                witness: Some((lift, c)),
            });
        }
    }
    Ok(DoreyVerdict::fails())
}

pub fn dorey(t: &DoreyTriple) -> Result<DoreyVerdict> {
    if t.g.is_twisted() {
        dorey_twisted(t)
    } else {
        dorey_untwisted(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoleClass {
    Simple,
    Double,
}

impl fmt::Display for PoleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PoleClass::Simple => "simple",
            PoleClass::Double => "double",
        })
    }
}

impl Serialize for PoleClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Order of the zero of `d_{i,j}(z)` at `z = y/x` for a holding untwisted
/// triple, classified as simple or double.
pub fn multiple_pole_class(t: &DoreyTriple) -> Result<(PoleClass, u32)> {
    let v = dorey_untwisted(t)?;
    if !v.holds {
        return Err(Error::InvalidQuiver(format!("{t} does not satisfy a Dorey condition")));
    }
    let [(i, x), (j, y), _] = t.points;
    let order = zero_order(t.g, i, j, y / x)?;
    let class = if order >= 2 {
        PoleClass::Double
    } else {
        PoleClass::Simple
    };
    Ok((class, order))
}

/// The triple `((j, (-q)^b), (i, (-q)^a), (k, (-q)^c))` read off from the
/// vertices of `gamma`, `beta` and `alpha` in `Gamma_Q`, mapped through
/// `pi` when `twisted`.
pub fn minimal_pair_triple(
    ar: &ARData,
    order: &ConvexTotalOrder,
    alpha: &Root,
    pair: (&Root, &Root),
    twisted: bool,
) -> Result<DoreyTriple> {
    let (beta, gamma) = pair;
    if !minimal_pairs(order, alpha).iter().any(|(b, c)| b == beta && c == gamma) {
        return Err(Error::NotAMinimalPair {
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            gamma: gamma.to_string(),
        });
    }
    let g = AffineType::untwisted(ar.finite_type());
    let point = |r: &Root| -> Result<SeVertex> {
        let (i, p) = ar.vertex_of(r).ok_or_else(|| Error::NotAPositiveRoot(r.to_string()))?;
        let v = vertex_class(g, i, SpectralParam::minus_q_pow(p))?;
        if twisted {
            pi(&v)
        } else {
            Ok(v)
        }
    };
    Ok(DoreyTriple::from_vertices([point(gamma)?, point(beta)?, point(alpha)?]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, thiserror::Error)]
pub enum EmbedError {
    #[error("the two vertices are not connected by an arrow")]
    NotAdjacent,
    #[error("the two vertices are dual to each other")]
    DualPair,
    #[error("no AR quiver realizes the pair")]
    NotFound,
}

/// A Dynkin quiver, height function and unit `a` with
/// `(i, x) = (i, a (-q)^s)` and `(j, y) = (j, a (-q)^t)` for vertices
/// `(i, s)`, `(j, t)` of `Gamma_Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbedWitness {
    pub quiver: DynkinQuiver,
    pub height: HeightFunction,
    pub a: SpectralParam,
    pub s: i32,
    pub t: i32,
    pub fast_path: bool,
}

impl EmbedWitness {
    /// Rebuilds `Gamma_Q` and checks both vertices.
    pub fn validate(&self, v: &SeVertex, w: &SeVertex) -> bool {
        let ar = ar_quiver(&self.quiver, &self.height);
        ar.contains((v.i(), self.s))
            && ar.contains((w.i(), self.t))
            && v.x() == self.a * SpectralParam::minus_q_pow(self.s)
            && w.x() == self.a * SpectralParam::minus_q_pow(self.t)
    }
}

/// AR data for every orientation of one finite type, built once and shared
/// across embedding queries.
#[derive(Debug, Clone)]
pub struct EmbedSearch {
    g: AffineType,
    table: DenominatorTable,
    ars: Vec<ARData>,
}

impl EmbedSearch {
    pub fn new(ty: FiniteType) -> Self {
        let ars = all_orientations(ty)
            .iter()
            .map(|q| ar_quiver(q, &height_function(q, 1, 0).expect("node 1 exists")))
            .collect();
        let g = AffineType::untwisted(ty);
        EmbedSearch {
            g,
            table: DenominatorTable::new(g),
            ars,
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.g
    }

    fn check(&self, v: &SeVertex, w: &SeVertex) -> std::result::Result<(), EmbedError> {
        let d = self.table.order(v.i(), w.i(), w.x() / v.x()) + self.table.order(w.i(), v.i(), v.x() / w.x());
        if d == 0 {
            return Err(EmbedError::NotAdjacent);
        }
        if are_dual(v, w) || are_dual(w, v) {
            return Err(EmbedError::DualPair);
        }
        Ok(())
    }

    /// The constructive route (fast path) if it applies, else the first
    /// orientation in enumeration order that realizes the pair.
    pub fn embed(&self, v: &SeVertex, w: &SeVertex) -> std::result::Result<EmbedWitness, EmbedError> {
        self.check(v, w)?;
        if let Some(found) = self.fast_path(v, w) {
            return Ok(found);
        }
        self.exhaustive(v, w).ok_or(EmbedError::NotFound)
    }

    /// Exhaustive search only.
    pub fn exhaustive(&self, v: &SeVertex, w: &SeVertex) -> Option<EmbedWitness> {
        let ratio = (w.x() / v.x()).as_minus_q_pow()?;
        for ar in &self.ars {
            for &(i, s) in ar.vertices() {
                if i != v.i() {
                    continue;
                }
                let t = s + ratio;
                if ar.contains((w.i(), t)) {
                    let a = v.x() / SpectralParam::minus_q_pow(s);
                    return Some(normalize(ar.quiver().clone(), ar.height().clone(), a, s, t, false));
                }
            }
        }
        None
    }

    /// Heights chosen following the case analysis for `i >= j`, `s < t`
    /// (and its mirror `i <= j`, `s > t`); validated before returning.
    pub fn fast_path(&self, v: &SeVertex, w: &SeVertex) -> Option<EmbedWitness> {
        let (s, t) = (v.x().m(), w.x().m());
        let a = v.x() / SpectralParam::minus_q_pow(s);
        if w.x() != a * SpectralParam::minus_q_pow(t) {
            return None;
        }
        let (i, j) = (v.i(), w.i());
        let xi = if i >= j && s < t {
            fast_heights(self.g, i, j, s, t)?
        } else if i <= j && s > t {
            fast_heights(self.g, j, i, t, s)?
        } else {
            return None;
        };
        let ty = self.g.finite_type();
        let q = DynkinQuiver::from_heights(ty, &xi).ok()?;
        let height = HeightFunction::new(&q, xi).ok()?;
        let found = EmbedWitness {
            quiver: q,
            height,
            a,
            s,
            t,
            fast_path: true,
        };
        found.validate(v, w).then_some(found)
    }
}

/// Shifts the height function so that `a` becomes a unit.
fn normalize(
    quiver: DynkinQuiver,
    height: HeightFunction,
    a: SpectralParam,
    s: i32,
    t: i32,
    fast_path: bool,
) -> EmbedWitness {
    let e = a.m();
    EmbedWitness {
        quiver,
        height: height.shifted(e),
        a: a / SpectralParam::minus_q_pow(e),
        s: s + e,
        t: t + e,
        fast_path,
    }
}

/// Heights placing `(i, s)` and `(j, t)` in `Gamma_Q` when `i >= j`,
/// `s < t`.
fn fast_heights(g: AffineType, i: usize, j: usize, s: i32, t: i32) -> Option<Vec<i32>> {
    let n = g.n();
    let (ii, jj, ni) = (i as i32, j as i32, n as i32);
    match g.finite_type().family() {
        Family::A => {
            let xi = if t - s <= ii + jj - 2 {
                (1..=ni).map(|k| t + k - jj).collect()
            } else {
                (1..=ni).map(|k| t - k + jj).collect()
            };
            Some(xi)
        }
        Family::D if j + 2 <= n => {
            // with i = N swap the two fork nodes
            let swap = i == n;
            let mut xi = vec![0; n];
            for k in 1..=n - 2 {
                xi[k - 1] = t - (k as i32 - jj).abs();
            }
            xi[n - 2] = xi[n - 3] - 1;
            xi[n - 1] = xi[n - 3] - 1;
            if swap {
                xi.swap(n - 2, n - 1);
            }
            Some(xi)
        }
        Family::D if i + 2 > n && j + 2 > n => {
            let mut xi = vec![0; n];
            let other = |k: usize| if k == n { n - 1 } else { n };
            let mut set = |k: usize, h: i32| xi[k - 1] = h;
            if n.is_multiple_of(2) || i != j {
                set(j, t);
                set(n - 2, t - 1);
                if i != j {
                    set(i, if n.is_multiple_of(2) { t - 2 } else { t });
                } else {
                    set(other(j), t);
                }
            } else {
                set(i, t);
                set(n - 2, t - 1);
                set(other(i), t - 2);
            }
            for k in (1..n - 2).rev() {
                xi[k - 1] = xi[k] - 1;
            }
            Some(xi)
        }
        _ => None,
    }
}

/// One-shot embedding; builds the per-type search data.
pub fn embed_pair_in_ar(v: &SeVertex, w: &SeVertex) -> std::result::Result<EmbedWitness, EmbedError> {
    let g = v.affine_type();
    if g.is_twisted() || w.affine_type() != g {
        return Err(EmbedError::NotFound);
    }
    EmbedSearch::new(g.finite_type()).embed(v, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::adapted_total_order;
    use crate::spectral::AffineFamily;

    fn ty(f: AffineFamily, n: usize) -> AffineType {
        AffineType::new(f, n).unwrap()
    }

    fn triple(g: AffineType, p: [(usize, i32); 3]) -> DoreyTriple {
        DoreyTriple::new(g, p.map(|(i, e)| (i, SpectralParam::minus_q_pow(e)))).unwrap()
    }

    #[test]
    fn untwisted_examples() {
        let a3 = ty(AffineFamily::A1, 3);
        let v = dorey_untwisted(&triple(a3, [(1, -1), (1, 1), (2, 0)])).unwrap();
        assert_eq!(v.condition, Some(DoreyCondition::AI));
        let v = dorey_untwisted(&triple(a3, [(3, -1), (3, 1), (2, 0)])).unwrap();
        assert_eq!(v.condition, Some(DoreyCondition::AII));
        let v = dorey_untwisted(&triple(a3, [(1, 0), (1, 0), (2, 0)])).unwrap();
        assert!(!v.holds);
        let d4 = ty(AffineFamily::D1, 4);
        let v = dorey_untwisted(&triple(d4, [(2, -2), (2, 2), (2, 0)])).unwrap();
        assert_eq!(v.condition, Some(DoreyCondition::DII));
        assert!(dorey_untwisted(&triple(a3.twisted_partner(), [(1, 0), (1, 0), (1, 0)])).is_err());
    }

    #[test]
    fn twisted_examples() {
        let a3 = ty(AffineFamily::A1, 3);
        let t = triple(a3, [(1, -1), (1, 1), (2, 0)]);
        let v = dorey_twisted(&t.pi().unwrap()).unwrap();
        assert!(v.holds);
        assert!(v.condition.is_none());

        let a32 = a3.twisted_partner();
        let m = |e: i32| -SpectralParam::minus_q_pow(e);
        let t = DoreyTriple::new(a32, [(1, m(-1)), (1, m(1)), (2, SpectralParam::ONE)]).unwrap();
        assert!(dorey_twisted(&t).unwrap().holds);
        // two lifts hold; the one through node 3 is A-ii
        let holding: Vec<_> = lifts(&t)
            .unwrap()
            .into_iter()
            .filter_map(|l| {
                dorey_untwisted(&l)
                    .unwrap()
                    .condition
                    .map(|c| (l.points().map(|p| p.0), c))
            })
            .collect();
        assert!(holding.contains(&([3, 3, 2], DoreyCondition::AII)));
        assert!(holding.contains(&([1, 1, 2], DoreyCondition::AI)));

        let t = DoreyTriple::new(a32, [(1, SpectralParam::ONE); 3]).unwrap();
        assert!(!dorey_twisted(&t).unwrap().holds);
    }

    #[test]
    fn pole_examples() {
        let a3 = ty(AffineFamily::A1, 3);
        let (c, o) = multiple_pole_class(&triple(a3, [(1, -1), (1, 1), (2, 0)])).unwrap();
        assert_eq!((c, o), (PoleClass::Simple, 1));
        let d4 = ty(AffineFamily::D1, 4);
        let (c, o) = multiple_pole_class(&triple(d4, [(2, -2), (2, 2), (2, 0)])).unwrap();
        assert_eq!((c, o), (PoleClass::Double, 2));
        // D-i: 1 + 1 = 2 with l = k
        let t = triple(d4, [(1, -1), (1, 1), (2, 0)]);
        assert_eq!(dorey_untwisted(&t).unwrap().condition, Some(DoreyCondition::DI));
        assert_eq!(multiple_pole_class(&t).unwrap().0, PoleClass::Simple);
        assert!(multiple_pole_class(&triple(d4, [(1, 0), (1, 0), (2, 0)])).is_err());
    }

    #[test]
    fn minimal_pair_triple_a2() {
        let a2 = FiniteType::a(2).unwrap();
        let q = DynkinQuiver::linear(a2, true);
        let ar = ar_quiver(&q, &HeightFunction::new(&q, vec![1, 0]).unwrap());
        let ord = adapted_total_order(&q);
        let (a1, a2r, a12) = (Root::simple(2, 1), Root::simple(2, 2), Root::from_coeffs(vec![1, 1]));
        let t = minimal_pair_triple(&ar, &ord, &a12, (&a1, &a2r), false).unwrap();
        assert_eq!(t, triple(AffineType::untwisted(a2), [(1, -1), (1, 1), (2, 0)]));
        assert_eq!(dorey(&t).unwrap().condition, Some(DoreyCondition::AI));
        let t2 = minimal_pair_triple(&ar, &ord, &a12, (&a1, &a2r), true).unwrap();
        assert!(dorey(&t2).unwrap().holds);
        assert!(minimal_pair_triple(&ar, &ord, &a12, (&a2r, &a1), false).is_err());
    }

    #[test]
    fn cross_component_lift() {
        // pi identifies (1, x) and (1, -x) in type D, so a triple mixing
        // components shares its image with a genuine D-i triple.
        let d4 = ty(AffineFamily::D1, 4);
        let good = triple(d4, [(1, -1), (1, 1), (2, 0)]);
        let [(i, x), b, c] = good.points();
        let mixed = DoreyTriple::new(d4, [(i, -x), b, c]).unwrap();
        assert!(dorey(&good).unwrap().holds);
        assert!(!dorey(&mixed).unwrap().holds);
        assert_eq!(good.pi().unwrap(), mixed.pi().unwrap());
        assert!(dorey(&mixed.pi().unwrap()).unwrap().holds);
    }

    #[test]
    fn embedding_examples() {
        let a3 = ty(AffineFamily::A1, 3);
        let v = vertex_class(a3, 1, SpectralParam::minus_q_pow(0)).unwrap();
        let w = vertex_class(a3, 2, SpectralParam::minus_q_pow(3)).unwrap();
        let found = embed_pair_in_ar(&v, &w).unwrap();
        assert!(found.validate(&v, &w));
        assert_eq!(found.a.m(), 0);

        let dual = vertex_class(a3, 3, SpectralParam::minus_q_pow(4)).unwrap();
        assert_eq!(embed_pair_in_ar(&v, &dual), Err(EmbedError::DualPair));
        let far = vertex_class(a3, 2, SpectralParam::minus_q_pow(11)).unwrap();
        assert_eq!(embed_pair_in_ar(&v, &far), Err(EmbedError::NotAdjacent));
    }
}
