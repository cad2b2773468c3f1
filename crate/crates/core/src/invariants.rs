//! Bracket determinants, the semiinvariants `f^τ` of a triple tensor product
//! and their supports in the thirty bracket-term variables `Z`.
//!
//! For three groups `a, b, c` the eight brackets are
//!
//! | τ index | bracket    | expansion                                   |
//! |---------|------------|---------------------------------------------|
//! | 1       | `(abc)`    | `det[a; b; c]` over single-index variables  |
//! | 2       | `(aac)`    | `c · ã`                                     |
//! | 3       | `(acc)`    | `a · c̃`                                     |
//! | 4       | `(aab)`    | `b · ã`                                     |
//! | 5       | `(abb)`    | `a · b̃`                                     |
//! | 6       | `(bbc)`    | `c · b̃`                                     |
//! | 7       | `(bcc)`    | `b · c̃`                                     |
//! | 8       | `(aabbcc)` | `det[ã; b̃; c̃]`                             |
//!
//! with `x̃ = (X_23, -X_13, X_12)`. The thirty `Z` positions follow the
//! order of [`Z_TABLE`]; each is one term of one bracket.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gamma::Weight3;
use crate::lattice::ShiftedLattice;
use crate::poly::{factorial, var, GroupId, MultiIndex6, SparsePoly};
use crate::Rational;

/// One of the eight bracket determinants, in τ order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketKind {
    Abc,
    Aac,
    Acc,
    Aab,
    Abb,
    Bbc,
    Bcc,
    Aabbcc,
}

impl BracketKind {
    pub const ALL: [BracketKind; 8] = [
        BracketKind::Abc,
        BracketKind::Aac,
        BracketKind::Acc,
        BracketKind::Aab,
        BracketKind::Abb,
        BracketKind::Bbc,
        BracketKind::Bcc,
        BracketKind::Aabbcc,
    ];

    /// Zero-based position of this bracket's exponent in a [`TauLabel`].
    pub fn tau_index(self) -> usize {
        self as usize
    }

    /// Number of terms in the expansion.
    pub fn arity(self) -> usize {
        match self {
            BracketKind::Abc | BracketKind::Aabbcc => 6,
            _ => 3,
        }
    }

    /// Contribution of one power of this bracket to the per-letter weights
    /// `[m1, m2]` of `a`, `b`, `c`.
    pub fn weight_contribution(self) -> [[i32; 2]; 3] {
        match self {
            BracketKind::Abc => [[1, 0], [1, 0], [1, 0]],
            BracketKind::Aac => [[1, 1], [0, 0], [1, 0]],
            BracketKind::Acc => [[1, 0], [0, 0], [1, 1]],
            BracketKind::Aab => [[1, 1], [1, 0], [0, 0]],
            BracketKind::Abb => [[1, 0], [1, 1], [0, 0]],
            BracketKind::Bbc => [[0, 0], [1, 1], [1, 0]],
            BracketKind::Bcc => [[0, 0], [1, 0], [1, 1]],
            BracketKind::Aabbcc => [[1, 1], [1, 1], [1, 1]],
        }
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BracketKind::Abc => "(abc)",
            BracketKind::Aac => "(aac)",
            BracketKind::Acc => "(acc)",
            BracketKind::Aab => "(aab)",
            BracketKind::Abb => "(abb)",
            BracketKind::Bbc => "(bbc)",
            BracketKind::Bcc => "(bcc)",
            BracketKind::Aabbcc => "(aabbcc)",
        };
        f.write_str(s)
    }
}

/// Exponents `τ_1 … τ_8` of the eight brackets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauLabel(pub [u32; 8]);

impl TauLabel {
    /// `τ = e_k` for a one-based bracket index `k`.
    pub fn unit(k: usize) -> Self {
        let mut t = [0; 8];
        t[k - 1] = 1;
        TauLabel(t)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Satisfies the basis restriction `τ_1 = 0` or `τ_8 = 0`.
    pub fn is_basis_label(&self) -> bool {
        self.0[0] == 0 || self.0[7] == 0
    }

    /// Highest weights of the three factors carrying `f^τ`.
    pub fn weights(&self) -> [Weight3; 3] {
        let mut acc = [[0i32; 2]; 3];
        for kind in BracketKind::ALL {
            let t = self.0[kind.tau_index()] as i32;
            for (slot, c) in acc.iter_mut().zip(kind.weight_contribution()) {
                slot[0] += t * c[0];
                slot[1] += t * c[1];
            }
        }
        acc.map(|[m1, m2]| Weight3::new(m1, m2, 0).expect("bracket weights are dominant"))
    }

    /// Whether `f^τ` lies in `V(w1) ⊗ V(w2) ⊗ V(w3)`.
    pub fn is_compatible(&self, weights: &[Weight3; 3]) -> bool {
        self.weights() == *weights
    }
}

impl fmt::Display for TauLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for TauLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 8 {
            return Err(Error::InvalidInput(format!("label `{s}` needs 8 entries")));
        }
        let mut t = [0u32; 8];
        for (slot, p) in t.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::InvalidInput(format!("label `{s}`: `{p}` is not a nonnegative integer")))?;
        }
        Ok(TauLabel(t))
    }
}

/// Letters of a bracket factor: `a`, `b`, `c` in slot order.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

/// One `Z` variable: the bracket it belongs to and the `(letter, variable)`
/// factors of its monomial.
#[derive(Clone, Copy, Debug)]
pub struct ZEntry {
    pub bracket: BracketKind,
    pub factors: &'static [(usize, usize)],
}

use var::{A1 as V1, A12 as V12, A13 as V13, A2 as V2, A23 as V23, A3 as V3};

/// The thirty bracket terms, positions `1..=30` stored at `0..30`.
pub const Z_TABLE: [ZEntry; 30] = {
    use BracketKind::*;
    const fn z(bracket: BracketKind, factors: &'static [(usize, usize)]) -> ZEntry {
        ZEntry { bracket, factors }
    }
    [
        z(Aac, &[(C, V1), (A, V23)]),
        z(Aac, &[(C, V2), (A, V13)]),
        z(Aac, &[(C, V3), (A, V12)]),
        z(Acc, &[(A, V1), (C, V23)]),
        z(Acc, &[(A, V2), (C, V13)]),
        z(Acc, &[(A, V3), (C, V12)]),
        z(Bbc, &[(C, V1), (B, V23)]),
        z(Bbc, &[(C, V2), (B, V13)]),
        z(Bbc, &[(C, V3), (B, V12)]),
        z(Bcc, &[(B, V1), (C, V23)]),
        z(Bcc, &[(B, V2), (C, V13)]),
        z(Bcc, &[(B, V3), (C, V12)]),
        z(Aab, &[(B, V1), (A, V23)]),
        z(Aab, &[(B, V2), (A, V13)]),
        z(Aab, &[(B, V3), (A, V12)]),
        z(Abb, &[(A, V1), (B, V23)]),
        z(Abb, &[(A, V2), (B, V13)]),
        z(Abb, &[(A, V3), (B, V12)]),
        z(Abc, &[(A, V1), (B, V2), (C, V3)]),
        z(Abc, &[(A, V2), (B, V3), (C, V1)]),
        z(Abc, &[(A, V3), (B, V1), (C, V2)]),
        z(Abc, &[(A, V2), (B, V1), (C, V3)]),
        z(Abc, &[(A, V1), (B, V3), (C, V2)]),
        z(Abc, &[(A, V3), (B, V2), (C, V1)]),
        z(Aabbcc, &[(A, V23), (B, V13), (C, V12)]),
        z(Aabbcc, &[(A, V13), (B, V12), (C, V23)]),
        z(Aabbcc, &[(A, V12), (B, V23), (C, V13)]),
        z(Aabbcc, &[(A, V13), (B, V23), (C, V12)]),
        z(Aabbcc, &[(A, V23), (B, V12), (C, V13)]),
        z(Aabbcc, &[(A, V12), (B, V13), (C, V23)]),
    ]
};

/// Zero-based position of each bracket's leading term, in τ order; this is
/// where the shift vector κ places `τ_k`.
pub const LEADING_POSITION: [usize; 8] = [18, 0, 3, 12, 15, 6, 9, 24];

/// Number of `Z` variables.
pub const Z_COUNT: usize = 30;

/// Exponent vector over the thirty `Z` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZMonomial(pub [u32; Z_COUNT]);

impl ZMonomial {
    pub fn from_point(p: &[i64]) -> Self {
        let mut e = [0u32; Z_COUNT];
        for (slot, &x) in e.iter_mut().zip(p) {
            *slot = u32::try_from(x).expect("support points are nonnegative");
        }
        ZMonomial(e)
    }

    /// Exponents in the `a`, `b`, `c` variables after substituting each
    /// `Z` by its monomial.
    pub fn project(&self) -> [MultiIndex6; 3] {
        let mut out = [MultiIndex6::ZERO; 3];
        for (entry, &k) in Z_TABLE.iter().zip(&self.0) {
            if k == 0 {
                continue;
            }
            for &(letter, v) in entry.factors {
                out[letter].0[v] += k as i32;
            }
        }
        out
    }

    /// `Π_i z_sign(i)^{x_i}`.
    pub fn sign(&self) -> i32 {
        let odd = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, &k)| k % 2 == 1 && sign_table()[i] < 0)
            .count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `Π_i x_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k))
    }
}

fn letter_vector(g: GroupId, indices: [usize; 3], signs: [i64; 3]) -> [SparsePoly; 3] {
    [0, 1, 2].map(|k| {
        SparsePoly::variable(g, indices[k]).scale(&Rational::from_integer(signs[k].into()))
    })
}

fn single(g: GroupId) -> [SparsePoly; 3] {
    letter_vector(g, [var::A1, var::A2, var::A3], [1, 1, 1])
}

fn tilde(g: GroupId) -> [SparsePoly; 3] {
    letter_vector(g, [var::A23, var::A13, var::A12], [1, -1, 1])
}

fn dot(x: &[SparsePoly; 3], y: &[SparsePoly; 3]) -> SparsePoly {
    let mut acc = SparsePoly::zero(&[]);
    for k in 0..3 {
        acc = &acc + &(&x[k] * &y[k]);
    }
    acc
}

fn det3(rows: [&[SparsePoly; 3]; 3]) -> SparsePoly {
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([1, 0, 2], -1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
    ];
    let mut acc = SparsePoly::zero(&[]);
    for (perm, sign) in PERMS {
        let term = &(&rows[0][perm[0]] * &rows[1][perm[1]]) * &rows[2][perm[2]];
        acc = &acc + &term.scale(&Rational::from_integer(sign.into()));
    }
    acc
}

/// Full signed expansion of a bracket with letters `a, b, c ↦ g1, g2, g3`.
pub fn bracket_poly(kind: BracketKind, g1: GroupId, g2: GroupId, g3: GroupId) -> Result<SparsePoly> {
    if g1 == g2 || g1 == g3 || g2 == g3 {
        return Err(Error::GroupMismatch(format!(
            "bracket letters need distinct groups, got {g1}, {g2}, {g3}"
        )));
    }
    let p = match kind {
        BracketKind::Abc => det3([&single(g1), &single(g2), &single(g3)]),
        BracketKind::Aac => dot(&single(g3), &tilde(g1)),
        BracketKind::Acc => dot(&single(g1), &tilde(g3)),
        BracketKind::Aab => dot(&single(g2), &tilde(g1)),
        BracketKind::Abb => dot(&single(g1), &tilde(g2)),
        BracketKind::Bbc => dot(&single(g3), &tilde(g2)),
        BracketKind::Bcc => dot(&single(g2), &tilde(g3)),
        BracketKind::Aabbcc => det3([&tilde(g1), &tilde(g2), &tilde(g3)]),
    };
    p.aligned_to(&[g1, g2, g3])
}

/// Sign of the `Z` variable at a one-based position inside its bracket's
/// expansion.
pub fn z_sign(position: usize) -> Result<i32> {
    if !(1..=Z_COUNT).contains(&position) {
        return Err(Error::InvalidInput(format!("Z position {position} outside 1..=30")));
    }
    Ok(sign_table()[position - 1])
}

fn sign_table() -> &'static [i32; Z_COUNT] {
    static TABLE: std::sync::OnceLock<[i32; Z_COUNT]> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let groups = [GroupId::A, GroupId::B, GroupId::C];
        let mut out = [0; Z_COUNT];
        for (slot, entry) in out.iter_mut().zip(Z_TABLE.iter()) {
            let poly = bracket_poly(entry.bracket, groups[0], groups[1], groups[2])
                .expect("distinct groups");
            let mut mono = [MultiIndex6::ZERO; 3];
            for &(letter, v) in entry.factors {
                mono[letter].0[v] += 1;
            }
            let c = poly.coefficient(&mono);
            *slot = if c == Rational::one() {
                1
            } else if c == -Rational::one() {
                -1
            } else {
                panic!("Z entry {:?} is not a term of {}", entry.factors, entry.bracket)
            };
        }
        out
    })
}

/// `Π_k bracket_k^{τ_k} / τ_k!`, expanded, with letters `a, b, c ↦ g1, g2, g3`.
pub fn semiinvariant_poly(t: &TauLabel, g1: GroupId, g2: GroupId, g3: GroupId) -> Result<SparsePoly> {
    let mut acc = SparsePoly::one().aligned_to(&[g1, g2, g3])?;
    for kind in BracketKind::ALL {
        let k = t.0[kind.tau_index()];
        if k == 0 {
            continue;
        }
        let b = bracket_poly(kind, g1, g2, g3)?;
        let inv = Rational::new(BigInt::one(), factorial(k));
        acc = &acc * &b.pow(k).scale(&inv);
    }
    Ok(acc)
}

/// Every τ with `f^τ ∈ V(w1) ⊗ V(w2) ⊗ V(w3)`, sorted; includes labels with
/// both `τ_1` and `τ_8` positive.
pub fn enumerate_tau_generators(w1: Weight3, w2: Weight3, w3: Weight3) -> Vec<TauLabel> {
    let (p2, q2, r2) = (w1.m2(), w2.m2(), w3.m2());
    let (p, q, r) = (w1.m1() - p2, w2.m1() - q2, w3.m1() - r2);
    let bound = [w1.m1(), w2.m1(), w3.m1()].into_iter().max().unwrap_or(0);
    let mut out = Vec::new();
    // τ_1, τ_8 and τ_2 are free; the remaining five follow from the
    // weight equations
    for t1 in 0..=bound {
        for t8 in 0..=bound {
            for t2 in 0..=bound {
                let t4 = p2 - t8 - t2;
                let t6 = r - t1 - t2;
                let t5 = q2 - t8 - t6;
                let t3 = p - t1 - t5;
                let t7 = r2 - t8 - t3;
                let tau = [t1, t2, t3, t4, t5, t6, t7, t8];
                if tau.iter().any(|&x| x < 0) || t4 + t7 != q - t1 {
                    continue;
                }
                out.push(TauLabel(tau.map(|x| x as u32)));
            }
        }
    }
    out.sort();
    out
}

/// Multiplicity labels: the generators with `τ_1 = 0` or `τ_8 = 0`.
pub fn enumerate_tau(w1: Weight3, w2: Weight3, w3: Weight3) -> Vec<TauLabel> {
    enumerate_tau_generators(w1, w2, w3)
        .into_iter()
        .filter(TauLabel::is_basis_label)
        .collect()
}

/// Difference generators `p_1 … p_22` of the support lattice in `ℤ^30`.
pub fn support_generators() -> Vec<Vec<i64>> {
    // (leading position, other positions) per block, one-based
    const BLOCKS: [(usize, &[usize]); 8] = [
        (1, &[2, 3]),
        (4, &[5, 6]),
        (7, &[8, 9]),
        (10, &[11, 12]),
        (16, &[17, 18]),
        (13, &[14, 15]),
        (19, &[20, 21, 22, 23, 24]),
        (25, &[26, 27, 28, 29, 30]),
    ];
    let mut out = Vec::with_capacity(22);
    for (lead, others) in BLOCKS {
        for &o in others {
            let mut v = vec![0i64; Z_COUNT];
            v[lead - 1] = 1;
            v[o - 1] = -1;
            out.push(v);
        }
    }
    out
}

/// `κ(τ) + B`, whose nonnegative points are the `Z`-support of `f^τ`.
pub fn z_support(t: &TauLabel) -> ShiftedLattice {
    let mut kappa = vec![0i64; Z_COUNT];
    for kind in BracketKind::ALL {
        kappa[LEADING_POSITION[kind.tau_index()]] = t.0[kind.tau_index()] as i64;
    }
    ShiftedLattice::new(support_generators(), kappa).expect("support generators are independent")
}

/// `f^τ` rebuilt from its `Z`-support as `Σ_x sign(x) Z^x / x!`.
pub fn semiinvariant_from_support(t: &TauLabel, g1: GroupId, g2: GroupId, g3: GroupId) -> Result<SparsePoly> {
    let mut acc = SparsePoly::zero(&[g1, g2, g3]);
    for point in z_support(t).nonnegative_points()? {
        let z = ZMonomial::from_point(&point);
        let [ea, eb, ec] = z.project();
        let c = Rational::new(BigInt::from(z.sign()), z.factorial());
        acc = &acc + &SparsePoly::monomial(&[(g1, ea), (g2, eb), (g3, ec)], c);
    }
    Ok(acc)
}

impl Zero for TauLabel {
    fn zero() -> Self {
        TauLabel([0; 8])
    }
    fn is_zero(&self) -> bool {
        self.0 == [0; 8]
    }
}

impl std::ops::Add for TauLabel {
    type Output = TauLabel;
    fn add(self, rhs: TauLabel) -> TauLabel {
        let mut t = self.0;
        for (a, b) in t.iter_mut().zip(rhs.0) {
            *a += b;
        }
        TauLabel(t)
    }
}
