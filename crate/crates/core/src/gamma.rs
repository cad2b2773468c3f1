//! Γ-series, Gelfand-Tsetlin patterns and the A-GKZ basis `F_μ`.
//!
//! An irreducible representation with highest weight `[m1, m2, 0]` is the
//! space of polynomial solutions of the A-GKZ equation in one group of
//! variables with bidegree `(m1 - m2, m2)`. Its Gelfand-Tsetlin basis vectors
//! are finite combinations `Σ_s q_s ζ^s 𝓕_{μ - s(e_3 + e_12)}` of Γ-series
//! along the lattice `ℤ·v`, `v = e_1 - e_2 - e_13 + e_23`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{var, GroupId, MultiIndex6, SparsePoly};
use crate::Rational;

/// Direction of the Γ-series lattice, `e_1 - e_2 - e_13 + e_23`.
pub const CLASS_DIRECTION: MultiIndex6 = MultiIndex6([1, -1, 0, 0, -1, 1]);

/// Exponent shift paired with each power of `ζ`: `e_3 + e_12`.
pub const ZETA_SHIFT: MultiIndex6 = MultiIndex6([0, 0, 1, 1, 0, 0]);

/// Highest weight `[m1, m2, 0]` of a finite-dimensional irrep of gl3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight3 {
    m1: i32,
    m2: i32,
}

impl Weight3 {
    pub fn new(m1: i32, m2: i32, m3: i32) -> Result<Self> {
        if m3 != 0 {
            return Err(Error::InvalidWeight(format!(
                "m3 = {m3}; only weights [m1, m2, 0] are supported"
            )));
        }
        if m2 < 0 || m1 < m2 {
            return Err(Error::InvalidWeight(format!(
                "[{m1}, {m2}, {m3}] is not dominant"
            )));
        }
        Ok(Weight3 { m1, m2 })
    }

    pub fn trivial() -> Self {
        Weight3 { m1: 0, m2: 0 }
    }

    pub fn m1(&self) -> i32 {
        self.m1
    }

    pub fn m2(&self) -> i32 {
        self.m2
    }

    /// Weyl dimension `(m1 - m2 + 1)(m2 + 1)(m1 + 2) / 2`.
    pub fn dimension(&self) -> u64 {
        let (a, b) = (self.m1 as u64, self.m2 as u64);
        (a - b + 1) * (b + 1) * (a + 2) / 2
    }

    /// Bidegree `(m1 - m2, m2)` of the realizing polynomials.
    pub fn bidegree(&self) -> (i32, i32) {
        (self.m1 - self.m2, self.m2)
    }

    /// All weights with `m1 <= max_m1`, in lexicographic order.
    pub fn all_up_to(max_m1: i32) -> Vec<Weight3> {
        (0..=max_m1)
            .flat_map(|m1| (0..=m1).map(move |m2| Weight3 { m1, m2 }))
            .collect()
    }
}

impl fmt::Display for Weight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},0", self.m1, self.m2)
    }
}

fn parse_ints(s: &str, sep: char, expected: usize, what: &str) -> Result<Vec<i32>> {
    let parts: Vec<&str> = s.split(sep).map(str::trim).collect();
    if parts.len() != expected {
        return Err(Error::InvalidInput(format!(
            "{what} `{s}` needs {expected} entries"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<i32>()
                .map_err(|_| Error::InvalidInput(format!("{what} `{s}`: `{p}` is not an integer")))
        })
        .collect()
}

impl FromStr for Weight3 {
    type Err = Error;

    /// Parses `"m1,m2,m3"`.
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_ints(s, ',', 3, "weight")?;
        Weight3::new(v[0], v[1], v[2])
    }
}

/// Gelfand-Tsetlin pattern
/// ```text
/// m13   m23   m33
///    m12   m22
///       m11
/// ```
/// with `m33 = 0`, `m13 >= m12 >= m23 >= m22 >= m33` and
/// `m12 >= m11 >= m22`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTPattern {
    pub m13: i32,
    pub m23: i32,
    pub m33: i32,
    pub m12: i32,
    pub m22: i32,
    pub m11: i32,
}

impl GTPattern {
    pub fn new(m13: i32, m23: i32, m33: i32, m12: i32, m22: i32, m11: i32) -> Result<Self> {
        let p = GTPattern {
            m13,
            m23,
            m33,
            m12,
            m22,
            m11,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks interlacing; useful for patterns built field by field.
    pub fn validate(&self) -> Result<()> {
        if self.m33 != 0 {
            return Err(Error::NotAPattern(format!("{self}: m33 must be 0")));
        }
        let interlaced = self.m13 >= self.m12
            && self.m12 >= self.m23
            && self.m23 >= self.m22
            && self.m22 >= self.m33
            && self.m12 >= self.m11
            && self.m11 >= self.m22;
        if interlaced {
            Ok(())
        } else {
            Err(Error::NotAPattern(format!("{self} is not interlaced")))
        }
    }

    /// Highest weight read off the top row.
    pub fn top(&self) -> Weight3 {
        Weight3 {
            m1: self.m13,
            m2: self.m23,
        }
    }

    /// Weight `(m11, m12 + m22 - m11, m13 + m23 + m33 - m12 - m22)`.
    pub fn weight(&self) -> [i64; 3] {
        [
            self.m11 as i64,
            (self.m12 + self.m22 - self.m11) as i64,
            (self.m13 + self.m23 + self.m33 - self.m12 - self.m22) as i64,
        ]
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{};{},{};{}",
            self.m13, self.m23, self.m33, self.m12, self.m22, self.m11
        )
    }
}

impl FromStr for GTPattern {
    type Err = Error;

    /// Parses `"m13,m23,m33;m12,m22;m11"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "pattern `{s}` needs three rows separated by `;`"
            )));
        }
        let top = parse_ints(rows[0], ',', 3, "pattern row")?;
        let mid = parse_ints(rows[1], ',', 2, "pattern row")?;
        let bot = parse_ints(rows[2], ',', 1, "pattern row")?;
        GTPattern::new(top[0], top[1], top[2], mid[0], mid[1], bot[0])
    }
}

/// Shifted lattice `μ + ℤ·v` on which a Γ-series is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeClass {
    pub representative: MultiIndex6,
    pub direction: MultiIndex6,
}

impl LatticeClass {
    pub fn new(representative: MultiIndex6) -> Self {
        LatticeClass {
            representative,
            direction: CLASS_DIRECTION,
        }
    }

    /// Whether `point` lies in this class.
    pub fn contains(&self, point: &MultiIndex6) -> bool {
        let d = *point - self.representative;
        // v has a nonzero first entry, so the multiple is pinned by it
        let t = d.0[0];
        d == self.direction.scaled(t)
    }

    /// The `t` range keeping `μ + t v` in the nonnegative octant, if any.
    pub fn nonnegative_range(&self) -> Option<(i32, i32)> {
        let (mut lo, mut hi) = (i32::MIN, i32::MAX);
        for (m, v) in self.representative.0.iter().zip(self.direction.0) {
            match v {
                0 if *m < 0 => return None,
                0 => {}
                1 => lo = lo.max(-m),
                -1 => hi = hi.min(*m),
                _ => unreachable!("direction entries are in {{-1, 0, 1}}"),
            }
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// `𝓕_μ = Σ_t A^{μ+tv} / (μ+tv)!` in group `A`; zero when no term survives.
pub fn gamma_series(mu: MultiIndex6) -> SparsePoly {
    let class = LatticeClass::new(mu);
    let mut out = SparsePoly::zero(&[GroupId::A]);
    if let Some((lo, hi)) = class.nonnegative_range() {
        for t in lo..=hi {
            let e = mu + CLASS_DIRECTION.scaled(t);
            let c = Rational::new(BigInt::one(), e.factorial());
            out = &out + &SparsePoly::monomial(&[(GroupId::A, e)], c);
        }
    }
    out
}

/// Checks the GKZ system of `ℤ·v` with the homogeneities read from `mu`.
pub fn check_gkz(p: &SparsePoly, mu: MultiIndex6) -> bool {
    if p.is_zero() {
        return true;
    }
    if p.groups().len() != 1 {
        return false;
    }
    let g = p.groups()[0];
    let Ok(residual) = p.gkz_operator(g) else {
        return false;
    };
    if !residual.is_zero() {
        return false;
    }
    let m = &mu.0;
    let expected = [
        m[var::A1] + m[var::A2],
        m[var::A1] + m[var::A13],
        m[var::A1] - m[var::A23],
        m[var::A3],
        m[var::A12],
    ];
    p.terms().all(|(mono, _)| {
        let e = &mono[0].0;
        [
            e[var::A1] + e[var::A2],
            e[var::A1] + e[var::A13],
            e[var::A1] - e[var::A23],
            e[var::A3],
            e[var::A12],
        ] == expected
    })
}

/// Zero residual under the A-GKZ operator, for a single-group polynomial.
pub fn check_agkz(p: &SparsePoly) -> bool {
    match p.groups() {
        [] => true,
        [g] => p.agkz_operator(*g).map(|r| r.is_zero()).unwrap_or(false),
        _ => false,
    }
}

/// Representative of the class attached to a pattern, with `δ_13 = 0`.
pub fn gt_to_class(p: &GTPattern) -> Result<LatticeClass> {
    p.validate()?;
    let mut d = [0; 6];
    d[var::A3] = p.m13 - p.m12;
    d[var::A12] = p.m22;
    d[var::A23] = p.m23 - p.m22;
    d[var::A1] = p.m11 - p.m22;
    d[var::A2] = p.m12 - p.m23 - p.m11 + p.m22;
    d[var::A13] = 0;
    Ok(LatticeClass::new(MultiIndex6(d)))
}

/// `ζ = A_1 A_23 - A_2 A_13`.
pub fn zeta() -> SparsePoly {
    let a = |i| SparsePoly::variable(GroupId::A, i);
    &(&a(var::A1) * &a(var::A23)) - &(&a(var::A2) * &a(var::A13))
}

/// The coefficients `q_s` of the closed form: `t_0 = 1`,
/// `t_s = 1 / (s(s+1) + s(μ_1 + μ_2 + μ_13 + μ_23))`, `q_s = t_s / Σ t`.
pub fn closed_form_coefficients(mu: MultiIndex6, s_max: u32) -> Vec<Rational> {
    let sum = (mu.0[var::A1] + mu.0[var::A2] + mu.0[var::A13] + mu.0[var::A23]) as i64;
    let t: Vec<Rational> = (0..=s_max as i64)
        .map(|s| {
            if s == 0 {
                Rational::one()
            } else {
                Rational::new(BigInt::one(), BigInt::from(s * (s + 1) + s * sum))
            }
        })
        .collect();
    let total: Rational = t.iter().cloned().sum();
    t.into_iter().map(|x| x / &total).collect()
}

/// Largest `s` with `𝓕_{μ - s(e_3 + e_12)} ≠ 0`.
fn zeta_bound(mu: MultiIndex6) -> u32 {
    mu.0[var::A3].min(mu.0[var::A12]).max(0) as u32
}

/// The building blocks `ζ^s 𝓕_{μ - s(e_3 + e_12)}`, `s = 0..=bound`.
fn zeta_components(mu: MultiIndex6) -> Vec<SparsePoly> {
    let z = zeta();
    let mut zpow = SparsePoly::one();
    let mut out = Vec::new();
    for s in 0..=zeta_bound(mu) {
        let g = gamma_series(mu - ZETA_SHIFT.scaled(s as i32));
        out.push(&zpow * &g);
        zpow = &zpow * &z;
    }
    out
}

fn combine(parts: &[SparsePoly], q: &[Rational]) -> SparsePoly {
    parts
        .iter()
        .zip(q)
        .fold(SparsePoly::zero(&[GroupId::A]), |acc, (p, c)| &acc + &p.scale(c))
}

/// Coefficients `q_s` pinned by the A-GKZ equation, with `q_0` taken from
/// the closed form's normalization.
pub fn agkz_coefficients(mu: MultiIndex6) -> Result<Vec<Rational>> {
    let parts = zeta_components(mu);
    let closed = closed_form_coefficients(mu, (parts.len() - 1) as u32);
    if check_agkz(&combine(&parts, &closed)) {
        return Ok(closed);
    }
    // Σ_{s≥1} q_s Δ(part_s) = -q_0 Δ(part_0), one equation per monomial
    let images: Vec<SparsePoly> = parts
        .iter()
        .map(|p| p.agkz_operator(GroupId::A))
        .collect::<Result<_>>()?;
    let mut monomials: Vec<_> = images
        .iter()
        .flat_map(|im| im.terms().map(|(m, _)| m.clone()))
        .collect();
    monomials.sort();
    monomials.dedup();
    let n = parts.len() - 1;
    let rows: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| images[1..].iter().map(|im| im.coefficient(m)).collect())
        .collect();
    let rhs: Vec<Rational> = monomials
        .iter()
        .map(|m| -(&closed[0] * images[0].coefficient(m)))
        .collect();
    let tail = linalg::solve(&rows, &rhs, n)
        .ok_or_else(|| Error::Unsolvable(format!("A-GKZ coefficients for μ = {:?}", mu.0)))?;
    let mut q = vec![closed[0].clone()];
    q.extend(tail);
    Ok(q)
}

/// Gelfand-Tsetlin basis vector `F_μ` of a pattern, in group `A`.
pub fn agkz_basis(p: &GTPattern) -> Result<SparsePoly> {
    let mu = gt_to_class(p)?.representative;
    let parts = zeta_components(mu);
    let q = agkz_coefficients(mu)?;
    let f = combine(&parts, &q);
    debug_assert!(check_agkz(&f));
    Ok(f)
}

/// All interlaced patterns with top row `(m1, m2, 0)`, sorted.
pub fn enumerate_patterns(w: Weight3) -> Vec<GTPattern> {
    let (m1, m2) = (w.m1, w.m2);
    let mut out = Vec::new();
    for m12 in m2..=m1 {
        for m22 in 0..=m2 {
            for m11 in m22..=m12 {
                out.push(GTPattern {
                    m13: m1,
                    m23: m2,
                    m33: 0,
                    m12,
                    m22,
                    m11,
                });
            }
        }
    }
    out.sort();
    out
}

/// `⟨F_μ, F_μ⟩`.
pub fn norm_sq(p: &GTPattern) -> Result<Rational> {
    let f = AgkzBasis.vector(p)?;
    f.pairing(&f)
}

/// Source of Gelfand-Tsetlin basis vectors (single-group polynomials in
/// group `A`).
///
/// The definition route of the 6j-symbol is generic over this so that a
/// rescaled basis can be substituted.
pub trait GtBasis: Sync {
    fn vector(&self, p: &GTPattern) -> Result<Arc<SparsePoly>>;
}

/// The A-GKZ basis, memoized in a process-wide cache.
#[derive(Clone, Copy, Debug, Default)]
pub struct AgkzBasis;

fn basis_cache() -> &'static RwLock<HashMap<GTPattern, Arc<SparsePoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<GTPattern, Arc<SparsePoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl GtBasis for AgkzBasis {
    fn vector(&self, p: &GTPattern) -> Result<Arc<SparsePoly>> {
        if let Some(v) = basis_cache().read().expect("basis cache poisoned").get(p) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(agkz_basis(p)?);
        basis_cache()
            .write()
            .expect("basis cache poisoned")
            .entry(*p)
            .or_insert_with(|| Arc::clone(&v));
        Ok(v)
    }
}

/// A basis that multiplies one pattern's vector by a constant and leaves
/// every other vector of `inner` unchanged.
pub struct RescaledBasis<'a, B: GtBasis> {
    pub inner: &'a B,
    pub pattern: GTPattern,
    pub factor: Rational,
}

impl<B: GtBasis> GtBasis for RescaledBasis<'_, B> {
    fn vector(&self, p: &GTPattern) -> Result<Arc<SparsePoly>> {
        let v = self.inner.vector(p)?;
        if *p == self.pattern {
            Ok(Arc::new(v.scale(&self.factor)))
        } else {
            Ok(v)
        }
    }
}

/// Checks that a basis vector's group is the canonical one; used by
/// consumers that read coefficients positionally.
pub(crate) fn single_group_coefficients(
    f: &SparsePoly,
) -> impl Iterator<Item = (MultiIndex6, &Rational)> + '_ {
    debug_assert!(f.groups().len() <= 1);
    f.terms()
        .map(|(m, c)| (m.first().copied().unwrap_or(MultiIndex6::ZERO), c))
}
