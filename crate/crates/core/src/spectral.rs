//! Spectral parameters in `mu_4 x q^Z`, denominators `d_{k,l}(z)` of the
//! normalized R-matrices between fundamental modules, and duality data.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Error, Result};
use crate::rootsys::{w0_involution, Family, FiniteType};

/// `i^zeta * q^m` with `i = sqrt(-1)`.
///
/// Ordered by `m` first so sorted root lists read in increasing `q`-power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralParam {
    m: i32,
    zeta: u8,
}

impl SpectralParam {
    pub const ONE: SpectralParam = SpectralParam { m: 0, zeta: 0 };

    pub fn new(zeta: i32, m: i32) -> Self {
        SpectralParam {
            m,
            zeta: zeta.rem_euclid(4) as u8,
        }
    }

    /// `(-q)^p`.
    pub fn minus_q_pow(p: i32) -> Self {
        Self::new(2 * p, p)
    }

    /// `q^m`.
    pub fn q_pow(m: i32) -> Self {
        Self::new(0, m)
    }

    /// `i^zeta`.
    pub fn unit(zeta: i32) -> Self {
        Self::new(zeta, 0)
    }

    pub fn zeta(self) -> u8 {
        self.zeta
    }

    pub fn m(self) -> i32 {
        self.m
    }

    pub fn inv(self) -> Self {
        Self::new(-(self.zeta as i32), -self.m)
    }

    pub fn pow(self, e: i32) -> Self {
        Self::new(self.zeta as i32 * e, self.m * e)
    }

    /// Whether this is `(-q)^p` for some `p`, returning `p`.
    pub fn as_minus_q_pow(self) -> Option<i32> {
        (self == Self::minus_q_pow(self.m)).then_some(self.m)
    }

    /// Square roots inside `mu_4 x q^Z`, if any.
    pub fn sqrt(self) -> Option<[SpectralParam; 2]> {
        if self.m % 2 != 0 || !self.zeta.is_multiple_of(2) {
            return None;
        }
        let r = Self::new(self.zeta as i32 / 2, self.m / 2);
        Some([r, -r])
    }
}

impl Mul for SpectralParam {
    type Output = SpectralParam;

    fn mul(self, o: SpectralParam) -> SpectralParam {
        Self::new(self.zeta as i32 + o.zeta as i32, self.m + o.m)
    }
}

impl Div for SpectralParam {
    type Output = SpectralParam;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: SpectralParam) -> SpectralParam {
        self * o.inv()
    }
}

impl Neg for SpectralParam {
    type Output = SpectralParam;

    fn neg(self) -> SpectralParam {
        Self::new(self.zeta as i32 + 2, self.m)
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i", "-", "-i"][self.zeta as usize];
        write!(f, "{prefix}q^{}", self.m)
    }
}

impl FromStr for SpectralParam {
    type Err = Error;

    /// Accepts `[+-]?[i]?q^<int>` and `[+-]?(-q)^<int>`; a missing exponent
    /// means 1.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "spectral parameter",
            input: s.to_string(),
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(r) => (2, r),
            None => (0, t.strip_prefix('+').unwrap_or(&t)),
        };
        let exponent = |e: &str| -> Result<i32> {
            if e.is_empty() {
                return Ok(1);
            }
            let e = e.strip_prefix('^').ok_or_else(err)?;
            let e = e.strip_prefix('(').and_then(|e| e.strip_suffix(')')).unwrap_or(e);
            e.parse().map_err(|_| err())
        };
        let base = if let Some(e) = rest.strip_prefix("(-q)") {
            Self::minus_q_pow(exponent(e)?)
        } else if let Some(e) = rest.strip_prefix("iq") {
            Self::new(1, exponent(e)?)
        } else if let Some(e) = rest.strip_prefix('q') {
            Self::q_pow(exponent(e)?)
        } else if rest == "1" {
            Self::ONE
        } else if rest == "i" {
            Self::unit(1)
        } else {
            return Err(err());
        };
        Ok(base * Self::unit(sign))
    }
}

impl Serialize for SpectralParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SpectralParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AffineFamily {
    A1,
    D1,
    A2,
    D2,
}

impl AffineFamily {
    pub fn is_twisted(self) -> bool {
        matches!(self, AffineFamily::A2 | AffineFamily::D2)
    }

    pub fn finite_family(self) -> Family {
        match self {
            AffineFamily::A1 | AffineFamily::A2 => Family::A,
            AffineFamily::D1 | AffineFamily::D2 => Family::D,
        }
    }
}

impl fmt::Display for AffineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AffineFamily::A1 => "A1",
            AffineFamily::D1 => "D1",
            AffineFamily::A2 => "A2",
            AffineFamily::D2 => "D2",
        })
    }
}

impl FromStr for AffineFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A1" | "a1" => Ok(AffineFamily::A1),
            "D1" | "d1" => Ok(AffineFamily::D1),
            "A2" | "a2" => Ok(AffineFamily::A2),
            "D2" | "d2" => Ok(AffineFamily::D2),
            _ => Err(Error::Parse {
                what: "affine family",
                input: s.to_string(),
            }),
        }
    }
}

/// `A_N^(1)`, `D_N^(1)`, `A_N^(2)` or `D_N^(2)`.
///
/// `A_3^(2)` is handled by the `A^(2)` formulas with `N = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineType {
    family: AffineFamily,
    n: usize,
}

impl AffineType {
    pub fn new(family: AffineFamily, n: usize) -> Result<Self> {
        FiniteType::new(family.finite_family(), n)?;
        Ok(AffineType { family, n })
    }

    pub fn untwisted(ty: FiniteType) -> Self {
        let family = match ty.family() {
            Family::A => AffineFamily::A1,
            Family::D => AffineFamily::D1,
        };
        AffineType { family, n: ty.rank() }
    }

    pub fn twisted(ty: FiniteType) -> Self {
        let family = match ty.family() {
            Family::A => AffineFamily::A2,
            Family::D => AffineFamily::D2,
        };
        AffineType { family, n: ty.rank() }
    }

    pub fn family(self) -> AffineFamily {
        self.family
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn is_twisted(self) -> bool {
        self.family.is_twisted()
    }

    /// The finite type `A_N` or `D_N` underlying the untwisted partner.
    pub fn finite_type(self) -> FiniteType {
        FiniteType::new(self.family.finite_family(), self.n).expect("validated at construction")
    }

    /// The untwisted type with the same `N`.
    pub fn untwisted_partner(self) -> AffineType {
        AffineType::untwisted(self.finite_type())
    }

    /// The twisted type with the same `N`.
    pub fn twisted_partner(self) -> AffineType {
        AffineType::twisted(self.finite_type())
    }

    /// `|I_0|`.
    pub fn num_nodes(self) -> usize {
        match self.family {
            AffineFamily::A1 | AffineFamily::D1 => self.n,
            AffineFamily::A2 => self.n.div_ceil(2),
            AffineFamily::D2 => self.n - 1,
        }
    }

    pub fn nodes(self) -> std::ops::RangeInclusive<usize> {
        1..=self.num_nodes()
    }

    pub fn check_node(self, i: usize) -> Result<()> {
        if (1..=self.num_nodes()).contains(&i) {
            Ok(())
        } else {
            Err(out_of_range(i, self.num_nodes(), format!("{self}")))
        }
    }

    /// Whether `V(w_i)_x` and `V(w_i)_{-x}` are isomorphic.
    pub fn sign_quotient(self, i: usize) -> bool {
        match self.family {
            AffineFamily::A2 => self.n % 2 == 1 && i == self.n.div_ceil(2),
            AffineFamily::D2 => i + 2 <= self.n,
            _ => false,
        }
    }

    /// `i*`.
    pub fn istar(self, i: usize) -> usize {
        if self.is_twisted() {
            i
        } else {
            w0_involution(self.finite_type())[i - 1]
        }
    }

    /// `p*`.
    pub fn p_star(self) -> SpectralParam {
        let n = self.n as i32;
        match self.family {
            AffineFamily::A1 => SpectralParam::minus_q_pow(n + 1),
            AffineFamily::D1 => SpectralParam::minus_q_pow(2 * n - 2),
            AffineFamily::A2 => -SpectralParam::q_pow(n + 1),
            AffineFamily::D2 => SpectralParam::new(2 * n, 2 * (n - 1)),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (letter, t) = match self.family {
            AffineFamily::A1 => ('A', 1),
            AffineFamily::D1 => ('D', 1),
            AffineFamily::A2 => ('A', 2),
            AffineFamily::D2 => ('D', 2),
        };
        write!(f, "{letter}{}^({t})", self.n)
    }
}

/// One factor of a denominator as it appears in the product formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// `z - root`
    Linear(SpectralParam),
    /// `z^2 - c`
    Quadratic(SpectralParam),
}

impl Factor {
    pub fn roots(self) -> Vec<SpectralParam> {
        match self {
            Factor::Linear(r) => vec![r],
            Factor::Quadratic(c) => c.sqrt().expect("quadratic factors split in mu_4 x q^Z").to_vec(),
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Factor::Linear(_) => 1,
            Factor::Quadratic(_) => 2,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (var, c) = match self {
            Factor::Linear(r) => ("z", *r),
            Factor::Quadratic(c) => ("z^2", *c),
        };
        let (op, c) = if c.zeta() >= 2 { ('+', -c) } else { ('-', c) };
        write!(f, "({var} {op} {c})")
    }
}

impl Serialize for Factor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `d_{k,l}(z)` as its factor list and its root multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorZeros {
    ty: AffineType,
    k: usize,
    l: usize,
    factors: Vec<Factor>,
    roots: BTreeMap<SpectralParam, u32>,
}

impl DenominatorZeros {
    fn from_factors(ty: AffineType, k: usize, l: usize, factors: Vec<Factor>) -> Self {
        let mut roots = BTreeMap::new();
        for f in &factors {
            for r in f.roots() {
                *roots.entry(r).or_insert(0) += 1;
            }
        }
        DenominatorZeros {
            ty,
            k,
            l,
            factors,
            roots,
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn roots(&self) -> &BTreeMap<SpectralParam, u32> {
        &self.roots
    }

    pub fn degree(&self) -> u32 {
        self.roots.values().sum()
    }

    pub fn order_at(&self, x: SpectralParam) -> u32 {
        self.roots.get(&x).copied().unwrap_or(0)
    }
}

/// `d_{k,l}(z)` for the given affine type.
pub fn denominator(g: AffineType, k: usize, l: usize) -> Result<DenominatorZeros> {
    g.check_node(k)?;
    g.check_node(l)?;
    let n = g.n as i32;
    let (ki, li) = (k as i32, l as i32);
    let mq = SpectralParam::minus_q_pow;
    // (-q^2)^a
    let mq2 = |a: i32| SpectralParam::new(2 * a, 2 * a);
    let mut factors = Vec::new();
    match g.family {
        AffineFamily::A1 => {
            let top = ki.min(li).min(n + 1 - ki).min(n + 1 - li);
            for s in 1..=top {
                factors.push(Factor::Linear(mq((ki - li).abs() + 2 * s)));
            }
        }
        AffineFamily::D1 => {
            let fork = |i: i32| i >= n - 1;
            match (fork(ki), fork(li)) {
                (false, false) => {
                    for s in 1..=ki.min(li) {
                        factors.push(Factor::Linear(mq((ki - li).abs() + 2 * s)));
                        factors.push(Factor::Linear(mq(2 * n - 2 - ki - li + 2 * s)));
                    }
                }
                (false, true) | (true, false) => {
                    let c = ki.min(li);
                    for s in 1..=c {
                        factors.push(Factor::Linear(mq(n - c - 1 + 2 * s)));
                    }
                }
                (true, true) if k != l => {
                    for s in 1..=(n - 1) / 2 {
                        factors.push(Factor::Linear(mq(4 * s)));
                    }
                }
                (true, true) => {
                    for s in 1..=n / 2 {
                        factors.push(Factor::Linear(mq(4 * s - 2)));
                    }
                }
            }
        }
        AffineFamily::A2 => {
            for s in 1..=ki.min(li) {
                factors.push(Factor::Linear(mq((ki - li).abs() + 2 * s)));
                // z + q^{N+1} (-q)^e
                factors.push(Factor::Linear(-(SpectralParam::q_pow(n + 1) * mq(-ki - li + 2 * s))));
            }
        }
        AffineFamily::D2 => {
            let spin = |i: i32| i == n - 1;
            match (spin(ki), spin(li)) {
                (false, false) => {
                    for s in 1..=ki.min(li) {
                        factors.push(Factor::Quadratic(mq2((ki - li).abs() + 2 * s)));
                        factors.push(Factor::Quadratic(mq2(2 * n - 2 - ki - li + 2 * s)));
                    }
                }
                (false, true) | (true, false) => {
                    let c = ki.min(li);
                    for s in 1..=c {
                        // z^2 + (-q^2)^a
                        factors.push(Factor::Quadratic(-mq2(n - 1 - c + 2 * s)));
                    }
                }
                (true, true) => {
                    for s in 1..=n - 1 {
                        // z + (-q^2)^s
                        factors.push(Factor::Linear(-mq2(s)));
                    }
                }
            }
        }
    }
    Ok(DenominatorZeros::from_factors(g, k, l, factors))
}

/// Order of the zero of `d_{k,l}(z)` at `z = x`.
pub fn zero_order(g: AffineType, k: usize, l: usize, x: SpectralParam) -> Result<u32> {
    Ok(denominator(g, k, l)?.order_at(x))
}

/// Left dual `(i*, x / p*)`.
pub fn dual_point(g: AffineType, i: usize, x: SpectralParam) -> Result<(usize, SpectralParam)> {
    g.check_node(i)?;
    Ok((g.istar(i), x / g.p_star()))
}

/// Right dual `(i*, x p*)`.
pub fn right_dual_point(g: AffineType, i: usize, x: SpectralParam) -> Result<(usize, SpectralParam)> {
    g.check_node(i)?;
    Ok((g.istar(i), x * g.p_star()))
}

/// Precomputed denominators for every index pair of one affine type.
#[derive(Debug, Clone)]
pub struct DenominatorTable {
    ty: AffineType,
    table: Vec<DenominatorZeros>,
}

impl DenominatorTable {
    pub fn new(ty: AffineType) -> Self {
        let n = ty.num_nodes();
        let table = (1..=n)
            .flat_map(|k| (1..=n).map(move |l| (k, l)))
            .map(|(k, l)| denominator(ty, k, l).expect("indices in range"))
            .collect();
        DenominatorTable { ty, table }
    }

    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    pub fn get(&self, k: usize, l: usize) -> &DenominatorZeros {
        &self.table[(k - 1) * self.ty.num_nodes() + (l - 1)]
    }

    pub fn order(&self, k: usize, l: usize, x: SpectralParam) -> u32 {
        self.get(k, l).order_at(x)
    }
}
