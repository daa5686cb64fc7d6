//! The quivers `Se(g)` on classes of fundamental modules, the component
//! `Se_0(g)`, the 2:1 maps `pi` from untwisted to twisted types, and the
//! Schur-Weyl quiver `Se^J` attached to a Dynkin quiver.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labeled::LabeledQuiver;
use crate::quiver::{ARData, DynkinQuiver};
use crate::rootsys::Family;
use crate::spectral::{dual_point, AffineFamily, AffineType, DenominatorTable, SpectralParam};

/// A class `(i, x)` in `Se(g)`, stored by its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeVertex {
    g: AffineType,
    i: usize,
    x: SpectralParam,
}

impl SeVertex {
    pub fn affine_type(&self) -> AffineType {
        self.g
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn x(&self) -> SpectralParam {
        self.x
    }
}

impl fmt::Display for SeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.g.sign_quotient(self.i) {
            write!(f, "({}, ±{})", self.i, self.x)
        } else {
            write!(f, "({}, {})", self.i, self.x)
        }
    }
}

impl Serialize for SeVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SeVertex", 2)?;
        st.serialize_field("i", &self.i)?;
        st.serialize_field("x", &self.x)?;
        st.end()
    }
}

/// The class of `(i, x)`: when `x ~ -x` at `i` the representative has
/// `zeta` in `{0, 1}`.
pub fn vertex_class(g: AffineType, i: usize, x: SpectralParam) -> Result<SeVertex> {
    g.check_node(i)?;
    let x = if g.sign_quotient(i) && x.zeta() >= 2 { -x } else { x };
    Ok(SeVertex { g, i, x })
}

fn class(g: AffineType, i: usize, x: SpectralParam) -> SeVertex {
    vertex_class(g, i, x).expect("index in range")
}

/// Membership in the fixed component `Se_0(g)`.
pub fn se0_contains(v: &SeVertex) -> bool {
    let (g, i, x) = (v.g, v.i as i32, v.x);
    let n = g.n() as i32;
    let (zeta, m) = (x.zeta() as i32, x.m());
    let even = |a: i32| a.rem_euclid(2) == 0;
    match g.family() {
        AffineFamily::A1 => x.as_minus_q_pow().is_some() && even(m - (i - 1)),
        AffineFamily::D1 => {
            let d = if i >= n - 1 { 0 } else { n - 1 - i };
            x.as_minus_q_pow().is_some() && even(m - d)
        }
        AffineFamily::A2 if n % 2 == 0 => x.as_minus_q_pow().is_some(),
        AffineFamily::A2 => even(zeta) && even(m - (i + 1)),
        AffineFamily::D2 => {
            let top = n - 1;
            if i == top {
                even(zeta) && even(m)
            } else if even(top - i) {
                zeta == 1 && even(m)
            } else {
                zeta == 0 && !even(m)
            }
        }
    }
}

/// `pi: Se(g^(1)) -> Se(g^(2))`.
pub fn pi(v: &SeVertex) -> Result<SeVertex> {
    let g = v.g;
    if g.is_twisted() {
        return Err(Error::WrongAffineType {
            expected: "untwisted".into(),
            got: g.to_string(),
        });
    }
    let g2 = g.twisted_partner();
    let n = g.n();
    let (i, x) = (v.i, v.x);
    let sign = |e: usize| SpectralParam::unit(2 * e as i32);
    Ok(match g.finite_type().family() {
        Family::A => {
            if i <= n.div_ceil(2) {
                class(g2, i, x)
            } else {
                class(g2, n + 1 - i, sign(n) * x)
            }
        }
        Family::D => {
            if i + 2 <= n {
                class(g2, i, SpectralParam::unit((n - i) as i32) * x)
            } else {
                class(g2, n - 1, sign(i) * x)
            }
        }
    })
}

/// The two classes of `Se(g^(1))` mapped by `pi` onto `v`.
pub fn pi_preimages(v: &SeVertex) -> Result<[SeVertex; 2]> {
    let g2 = v.g;
    if !g2.is_twisted() {
        return Err(Error::WrongAffineType {
            expected: "twisted".into(),
            got: g2.to_string(),
        });
    }
    let g1 = g2.untwisted_partner();
    let n = g2.n();
    let (i, x) = (v.i, v.x);
    let sign = |e: usize| SpectralParam::unit(2 * e as i32);
    let mut pre = match g2.family() {
        AffineFamily::A2 => [class(g1, i, x), class(g1, n + 1 - i, sign(n) * x)],
        _ => {
            if i + 2 <= n {
                let y = SpectralParam::unit(-((n - i) as i32)) * x;
                [class(g1, i, y), class(g1, i, -y)]
            } else {
                [class(g1, n - 1, sign(n - 1) * x), class(g1, n, sign(n) * x)]
            }
        }
    };
    pre.sort();
    Ok(pre)
}

/// Number of arrows from class `v` to class `w`: the order of the zero of
/// `d_{i,j}(z)` at `z = y/x` on representatives.
pub fn arrow_multiplicity(table: &DenominatorTable, v: &SeVertex, w: &SeVertex) -> u32 {
    let d = table.order(v.i, w.i, w.x / v.x);
    debug_assert!(
        !v.g.sign_quotient(v.i) || d == table.order(v.i, w.i, w.x / -v.x),
        "arrow multiplicity depends on the representative of {v}"
    );
    debug_assert!(
        !w.g.sign_quotient(w.i) || d == table.order(v.i, w.i, -w.x / v.x),
        "arrow multiplicity depends on the representative of {w}"
    );
    d
}

/// Every class `(i, x)` of `Se(g)` with `|m(x)| <= bound`, sorted.
pub fn all_classes(g: AffineType, bound: i32) -> Vec<SeVertex> {
    let mut out = BTreeSet::new();
    for i in g.nodes() {
        for m in -bound..=bound {
            for z in 0..4 {
                out.insert(class(g, i, SpectralParam::new(z, m)));
            }
        }
    }
    out.into_iter().collect()
}

/// The classes of `Se_0(g)` with `|m(x)| <= bound`, sorted.
pub fn se0_window(g: AffineType, bound: i32) -> Vec<SeVertex> {
    all_classes(g, bound).into_iter().filter(se0_contains).collect()
}

/// Full subquiver of `Se(g)` on the given classes.
pub fn full_subquiver(table: &DenominatorTable, vertices: &[SeVertex]) -> LabeledQuiver<SeVertex> {
    let g = table.affine_type();
    let set: BTreeSet<SeVertex> = vertices.iter().copied().collect();
    let mut arrows = Vec::new();
    for v in &set {
        for w in out_neighbors(table, v) {
            if set.contains(&w) {
                arrows.push((*v, w, arrow_multiplicity(table, v, &w)));
            }
        }
    }
    debug_assert!(vertices.iter().all(|v| v.g == g));
    LabeledQuiver::new(set, arrows).expect("Se(g) has no loops or 2-cycles")
}

/// Classes `w` with at least one arrow `v -> w`.
pub fn out_neighbors(table: &DenominatorTable, v: &SeVertex) -> BTreeSet<SeVertex> {
    let g = table.affine_type();
    let mut out = BTreeSet::new();
    for j in g.nodes() {
        for r in table.get(v.i, j).roots().keys() {
            out.insert(class(g, j, v.x * *r));
        }
    }
    out
}

/// Classes `u` with at least one arrow `u -> v`.
pub fn in_neighbors(table: &DenominatorTable, v: &SeVertex) -> BTreeSet<SeVertex> {
    let g = table.affine_type();
    let mut out = BTreeSet::new();
    for j in g.nodes() {
        for r in table.get(j, v.i).roots().keys() {
            out.insert(class(g, j, v.x / *r));
        }
    }
    out
}

/// The full subquiver of `Se(g)` on all classes reachable from `seeds`
/// through arrows in either direction while staying within `|m| <= bound`.
pub fn se_window(g: AffineType, seeds: &[SeVertex], bound: i32) -> LabeledQuiver<SeVertex> {
    let table = DenominatorTable::new(g);
    let mut seen: BTreeSet<SeVertex> = seeds.iter().filter(|v| v.x.m().abs() <= bound).copied().collect();
    let mut queue: VecDeque<SeVertex> = seen.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for w in out_neighbors(&table, &v).into_iter().chain(in_neighbors(&table, &v)) {
            if w.x.m().abs() <= bound && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    full_subquiver(&table, &seen.into_iter().collect::<Vec<_>>())
}

/// `Se^J` for `J` the simple-root vertices of `Gamma_Q`, with its Cartan
/// matrix `A^J` and the exponents `(d_ab, d_ba)` of `Q_ab(u, v)`.
///
/// Elements of `J` are labeled by the simple root they carry, so `J` is
/// identified with `I_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurWeylDatum {
    g: AffineType,
    vertices: Vec<(usize, i32)>,
    s: Vec<usize>,
    x: Vec<SpectralParam>,
    quiver: LabeledQuiver<usize>,
    cartan: Vec<Vec<i32>>,
    qexp: BTreeMap<(usize, usize), (u32, u32)>,
}

impl SchurWeylDatum {
    pub fn affine_type(&self) -> AffineType {
        self.g
    }

    /// `phi^{-1}(alpha_j, 0)` for `j = 1..N`.
    pub fn ar_vertices(&self) -> &[(usize, i32)] {
        &self.vertices
    }

    pub fn s(&self, j: usize) -> usize {
        self.s[j - 1]
    }

    pub fn x(&self, j: usize) -> SpectralParam {
        self.x[j - 1]
    }

    pub fn quiver(&self) -> &LabeledQuiver<usize> {
        &self.quiver
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn qexp(&self) -> &BTreeMap<(usize, usize), (u32, u32)> {
        &self.qexp
    }

    /// Whether the quiver is `q` with every arrow reversed, multiplicities 1.
    pub fn is_reverse_of(&self, q: &DynkinQuiver) -> bool {
        let mine: BTreeSet<(usize, usize, u32)> = self.quiver.labeled_arrows().into_iter().collect();
        let rev: BTreeSet<(usize, usize, u32)> = q.arrows().iter().map(|&(a, b)| (b, a, 1)).collect();
        mine == rev
    }
}

pub fn schur_weyl_quiver(ar: &ARData, twisted: bool) -> SchurWeylDatum {
    let g1 = AffineType::untwisted(ar.finite_type());
    let g = if twisted { g1.twisted_partner() } else { g1 };
    let vertices = ar.simple_vertices();
    let points: Vec<SeVertex> = vertices
        .iter()
        .map(|&(i, p)| {
            let v = class(g1, i, SpectralParam::minus_q_pow(p));
            if twisted {
                pi(&v).expect("untwisted")
            } else {
                v
            }
        })
        .collect();
    let table = DenominatorTable::new(g);
    let n = points.len();
    let mut qexp = BTreeMap::new();
    let mut arrows = Vec::new();
    let mut cartan = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                cartan[a][b] = 2;
                continue;
            }
            let dab = arrow_multiplicity(&table, &points[a], &points[b]);
            let dba = arrow_multiplicity(&table, &points[b], &points[a]);
            cartan[a][b] = -((dab + dba) as i32);
            qexp.insert((a + 1, b + 1), (dab, dba));
            arrows.push((a + 1, b + 1, dab));
        }
    }
    let quiver = LabeledQuiver::new(1..=n, arrows).expect("Se^J has no loops or 2-cycles");
    SchurWeylDatum {
        g,
        vertices,
        s: points.iter().map(|v| v.i).collect(),
        x: points.iter().map(|v| v.x).collect(),
        quiver,
        cartan,
        qexp,
    }
}

/// Whether `w` is the left or right dual of `v`.
pub fn are_dual(v: &SeVertex, w: &SeVertex) -> bool {
    let g = v.g;
    let (i, x) = dual_point(g, v.i, v.x).expect("in range");
    let (j, y) = crate::spectral::right_dual_point(g, v.i, v.x).expect("in range");
    class(g, i, x) == *w || class(g, j, y) == *w
}

/// Class of the left dual.
pub fn dual_class(v: &SeVertex) -> SeVertex {
    let (i, x) = dual_point(v.g, v.i, v.x).expect("in range");
    class(v.g, i, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{all_orientations, ar_quiver, height_function};
    use crate::rootsys::FiniteType;

    fn ty(f: AffineFamily, n: usize) -> AffineType {
        AffineType::new(f, n).unwrap()
    }

    fn sp(s: &str) -> SpectralParam {
        s.parse().unwrap()
    }

    #[test]
    fn classes() {
        let d42 = ty(AffineFamily::D2, 4);
        let x0 = sp("q^3");
        let i = SpectralParam::unit(1);
        assert_eq!(
            vertex_class(d42, 1, i * x0).unwrap(),
            vertex_class(d42, 1, -(i * x0)).unwrap()
        );
        let a52 = ty(AffineFamily::A2, 5);
        assert_eq!(vertex_class(a52, 3, x0).unwrap(), vertex_class(a52, 3, -x0).unwrap());
        let a31 = ty(AffineFamily::A1, 3);
        assert_ne!(vertex_class(a31, 1, x0).unwrap(), vertex_class(a31, 1, -x0).unwrap());
        assert!(vertex_class(a31, 4, x0).is_err());
    }

    #[test]
    fn se0_examples() {
        let a31 = ty(AffineFamily::A1, 3);
        assert!(se0_contains(&class(a31, 1, SpectralParam::minus_q_pow(0))));
        assert!(!se0_contains(&class(a31, 2, SpectralParam::minus_q_pow(0))));
        let d52 = ty(AffineFamily::D2, 5);
        assert!(se0_contains(&class(d52, 4, sp("q^2"))));
        assert!(se0_contains(&class(d52, 4, sp("-q^2"))));
        assert!(!se0_contains(&class(d52, 4, sp("q^1"))));
    }

    #[test]
    fn pi_examples() {
        let a31 = ty(AffineFamily::A1, 3);
        let a32 = a31.twisted_partner();
        let x = sp("iq^5");
        assert_eq!(pi(&class(a31, 3, x)).unwrap(), class(a32, 1, -x));
        let d41 = ty(AffineFamily::D1, 4);
        let d42 = d41.twisted_partner();
        assert_eq!(pi(&class(d41, 4, x)).unwrap(), class(d42, 3, x));
        assert_eq!(pi(&class(d41, 3, x)).unwrap(), class(d42, 3, -x));
        let i = SpectralParam::unit(1);
        assert_eq!(pi(&class(d41, 1, x)).unwrap(), class(d42, 1, i * x));
        assert_eq!(pi(&class(d41, 1, x)).unwrap(), class(d42, 1, -(i * x)));
        assert!(pi(&class(d42, 1, x)).is_err());
    }

    #[test]
    fn preimages_match_brute_force() {
        for (f, n) in [
            (AffineFamily::A1, 2),
            (AffineFamily::A1, 3),
            (AffineFamily::A1, 6),
            (AffineFamily::D1, 4),
            (AffineFamily::D1, 5),
        ] {
            let g1 = ty(f, n);
            let g2 = g1.twisted_partner();
            let mut images: BTreeMap<SeVertex, Vec<SeVertex>> = BTreeMap::new();
            for v in all_classes(g1, 6) {
                images.entry(pi(&v).unwrap()).or_default().push(v);
            }
            for u in all_classes(g2, 6) {
                let mut brute = images.remove(&u).unwrap_or_default();
                brute.sort();
                assert_eq!(brute, pi_preimages(&u).unwrap().to_vec(), "{g2} {u}");
            }
            assert!(images.is_empty());
        }
    }

    #[test]
    fn window_examples() {
        let a21 = ty(AffineFamily::A1, 2);
        let seed = class(a21, 1, SpectralParam::ONE);
        let w = se_window(a21, &[seed], 6);
        assert_eq!(w.multiplicity(&seed, &class(a21, 1, sp("q^2"))), 1);
        assert!(w.vertices().iter().all(se0_contains));
        let table = DenominatorTable::new(a21);
        for i in a21.nodes() {
            assert_eq!(table.order(i, i, SpectralParam::ONE), 0);
        }
    }

    #[test]
    fn schur_weyl_small() {
        let a2 = FiniteType::a(2).unwrap();
        let q = DynkinQuiver::linear(a2, true);
        let ar = ar_quiver(&q, &height_function(&q, 1, 1).unwrap());
        for twisted in [false, true] {
            let sw = schur_weyl_quiver(&ar, twisted);
            assert_eq!(sw.quiver().labeled_arrows(), vec![(2, 1, 1)]);
            assert!(sw.is_reverse_of(&q));
            assert_eq!(sw.cartan(), &[vec![2, -1], vec![-1, 2]]);
            assert_eq!(sw.qexp()[&(2, 1)], (1, 0));
        }
    }

    #[test]
    fn schur_weyl_reverses_small_quivers() {
        for ty in [FiniteType::a(3).unwrap(), FiniteType::d(4).unwrap()] {
            for q in all_orientations(ty) {
                for base in [-3, 0, 2] {
                    let ar = ar_quiver(&q, &height_function(&q, 1, base).unwrap());
                    for twisted in [false, true] {
                        let sw = schur_weyl_quiver(&ar, twisted);
                        assert!(sw.is_reverse_of(&q), "{q} base {base} twisted {twisted}");
                        assert_eq!(sw.cartan(), ty.cartan_matrix());
                    }
                }
            }
        }
    }
}
