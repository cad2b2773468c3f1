//! Exact sparse polynomials in groups of six antisymmetric variables.
//!
//! Every group carries the variables `A_X` for the proper nonempty subsets
//! `X ⊂ {1,2,3}`, always stored in the canonical order
//! `1, 2, 3, {1,2}, {1,3}, {2,3}`. A monomial is one exponent vector per
//! group; a [`SparsePoly`] maps monomials to exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Position of each variable inside a [`MultiIndex6`].
pub mod var {
    pub const A1: usize = 0;
    pub const A2: usize = 1;
    pub const A3: usize = 2;
    pub const A12: usize = 3;
    pub const A13: usize = 4;
    pub const A23: usize = 5;
}

/// Sorted subscripts of the six variables, in canonical order.
pub const SUBSETS: [&[u8]; 6] = [&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]];

/// Printable subscript of each variable.
pub const SUBSET_LABELS: [&str; 6] = ["1", "2", "3", "12", "13", "23"];

fn subset_index(sorted: &[u8]) -> usize {
    SUBSETS
        .iter()
        .position(|s| *s == sorted)
        .expect("subset of {1,2,3} with one or two elements")
}

/// Six integer exponents indexed by the canonical variable order.
///
/// Used both as a monomial exponent (all entries nonnegative) and as a
/// lattice vector (entries of any sign).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex6(pub [i32; 6]);

impl MultiIndex6 {
    pub const ZERO: MultiIndex6 = MultiIndex6([0; 6]);

    /// Unit vector of one variable.
    pub fn unit(index: usize) -> Self {
        let mut e = [0; 6];
        e[index] = 1;
        MultiIndex6(e)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Total degree in the single-index variables `A_1, A_2, A_3`.
    pub fn single_degree(&self) -> i32 {
        self.0[..3].iter().sum()
    }

    /// Total degree in the double-index variables `A_12, A_13, A_23`.
    pub fn double_degree(&self) -> i32 {
        self.0[3..].iter().sum()
    }

    /// Eigenvalues of `E_11, E_22, E_33` on the monomial `A^self`.
    pub fn weight(&self) -> [i64; 3] {
        let mut w = [0i64; 3];
        for (idx, subset) in SUBSETS.iter().enumerate() {
            for &k in subset.iter() {
                w[(k - 1) as usize] += self.0[idx] as i64;
            }
        }
        w
    }

    /// Multi-index factorial `Π_X e_X!`; zero when an entry is negative.
    pub fn factorial(&self) -> BigInt {
        if !self.is_nonnegative() {
            return BigInt::zero();
        }
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &e| acc * factorial(e as u32))
    }

    pub fn scaled(&self, k: i32) -> Self {
        MultiIndex6(self.0.map(|x| x * k))
    }
}

impl Add for MultiIndex6 {
    type Output = MultiIndex6;
    fn add(self, rhs: MultiIndex6) -> MultiIndex6 {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        MultiIndex6(out)
    }
}

impl Sub for MultiIndex6 {
    type Output = MultiIndex6;
    fn sub(self, rhs: MultiIndex6) -> MultiIndex6 {
        self + rhs.scaled(-1)
    }
}

const FACTORIAL_TABLE: u32 = 96;

/// `n!` as a big integer. Small arguments come from a shared table.
pub fn factorial(n: u32) -> BigInt {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(FACTORIAL_TABLE as usize + 1);
        t.push(BigInt::one());
        for k in 1..=FACTORIAL_TABLE {
            let next = &t[k as usize - 1] * BigInt::from(k);
            t.push(next);
        }
        t
    });
    if n <= FACTORIAL_TABLE {
        table[n as usize].clone()
    } else {
        (FACTORIAL_TABLE + 1..=n).fold(table[FACTORIAL_TABLE as usize].clone(), |acc, k| {
            acc * BigInt::from(k)
        })
    }
}

/// Identifier of one group of six variables.
///
/// Groups `0, 1, 2` print as `A, B, C`; the six groups of a 6j-symbol are
/// conventionally numbered `1..=6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(pub u8);

impl GroupId {
    pub const A: GroupId = GroupId(0);
    pub const B: GroupId = GroupId(1);
    pub const C: GroupId = GroupId(2);
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'A' + self.0) as char)
        } else {
            write!(f, "G{}", self.0)
        }
    }
}

/// Result of substituting `j ↦ i` in the subscript of one variable.
///
/// Returns the target variable and the sign of the sorting permutation, or
/// `None` when `j ∉ X` or when the substitution repeats a subscript.
pub fn substitute(index: usize, i: u8, j: u8) -> Option<(usize, i32)> {
    let subset = SUBSETS[index];
    if !subset.contains(&j) {
        return None;
    }
    if i == j {
        return Some((index, 1));
    }
    if subset.contains(&i) {
        return None;
    }
    let mut replaced: Vec<u8> = subset.iter().map(|&k| if k == j { i } else { k }).collect();
    let mut sign = 1;
    if replaced.len() == 2 && replaced[0] > replaced[1] {
        replaced.swap(0, 1);
        sign = -1;
    }
    Some((subset_index(&replaced), sign))
}

/// Monomial key: one exponent vector per group, aligned with
/// [`SparsePoly::groups`].
pub type Monomial = Vec<MultiIndex6>;

/// Exact sparse polynomial over a sorted set of variable groups.
///
/// No zero coefficient is ever stored. Operations between polynomials over
/// different group sets work on the union of the sets, with zero exponents in
/// the groups a factor does not mention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    groups: Vec<GroupId>,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePoly {
    pub fn zero(groups: &[GroupId]) -> Self {
        let mut groups = groups.to_vec();
        groups.sort();
        groups.dedup();
        SparsePoly {
            groups,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SparsePoly::zero(&[]);
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        SparsePoly::constant(Rational::one())
    }

    /// The single variable `A_X` of group `g`.
    pub fn variable(g: GroupId, index: usize) -> Self {
        SparsePoly::monomial(&[(g, MultiIndex6::unit(index))], Rational::one())
    }

    /// A single term `c · Π_g A_g^{e_g}`.
    ///
    /// # Panics
    /// If an exponent is negative or a group is listed twice.
    pub fn monomial(parts: &[(GroupId, MultiIndex6)], c: Rational) -> Self {
        let mut parts = parts.to_vec();
        parts.sort_by_key(|(g, _)| *g);
        for w in parts.windows(2) {
            assert!(w[0].0 != w[1].0, "group {} listed twice", w[0].0);
        }
        assert!(
            parts.iter().all(|(_, e)| e.is_nonnegative()),
            "monomial exponents must be nonnegative"
        );
        let groups: Vec<GroupId> = parts.iter().map(|(g, _)| *g).collect();
        let mut p = SparsePoly::zero(&groups);
        if !c.is_zero() {
            p.terms.insert(parts.into_iter().map(|(_, e)| e).collect(), c);
        }
        p
    }

    pub fn groups(&self) -> &[GroupId] {
        &self.groups
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial given in this polynomial's group order.
    pub fn coefficient(&self, monomial: &[MultiIndex6]) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    fn group_position(&self, g: GroupId) -> Result<usize> {
        self.groups
            .binary_search(&g)
            .map_err(|_| Error::GroupMismatch(format!("group {g} not present")))
    }

    fn insert_add(&mut self, key: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-expresses the polynomial over a superset of its groups.
    pub fn aligned_to(&self, groups: &[GroupId]) -> Result<SparsePoly> {
        let mut target = groups.to_vec();
        target.sort();
        target.dedup();
        let mut positions = Vec::with_capacity(self.groups.len());
        for g in &self.groups {
            positions.push(
                target
                    .binary_search(g)
                    .map_err(|_| Error::GroupMismatch(format!("group {g} missing in target")))?,
            );
        }
        let mut out = SparsePoly::zero(&target);
        for (m, c) in &self.terms {
            let mut key = vec![MultiIndex6::ZERO; target.len()];
            for (src, &dst) in positions.iter().enumerate() {
                key[dst] = m[src];
            }
            out.terms.insert(key, c.clone());
        }
        Ok(out)
    }

    fn union_groups(&self, other: &SparsePoly) -> Vec<GroupId> {
        let mut g = self.groups.clone();
        g.extend_from_slice(&other.groups);
        g.sort();
        g.dedup();
        g
    }

    /// Renames groups positionally: `from[k]` becomes `to[k]`.
    pub fn relabeled(&self, from: &[GroupId], to: &[GroupId]) -> Result<SparsePoly> {
        if from.len() != to.len() {
            return Err(Error::GroupMismatch("relabel lists differ in length".into()));
        }
        let mut new_groups = Vec::with_capacity(self.groups.len());
        for g in &self.groups {
            let k = from
                .iter()
                .position(|f| f == g)
                .ok_or_else(|| Error::GroupMismatch(format!("group {g} not relabeled")))?;
            new_groups.push(to[k]);
        }
        let mut order: Vec<usize> = (0..new_groups.len()).collect();
        order.sort_by_key(|&k| new_groups[k]);
        let sorted: Vec<GroupId> = order.iter().map(|&k| new_groups[k]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::GroupMismatch("relabel merges two groups".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (order.iter().map(|&k| m[k]).collect(), c.clone()))
            .collect();
        Ok(SparsePoly {
            groups: sorted,
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(&self.groups);
        }
        SparsePoly {
            groups: self.groups.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂(A_g)_X`.
    pub fn derivative(&self, g: GroupId, index: usize) -> Result<SparsePoly> {
        let pos = self.group_position(g)?;
        let mut out = SparsePoly::zero(&self.groups);
        for (m, c) in &self.terms {
            let e = m[pos].0[index];
            if e == 0 {
                continue;
            }
            let mut key = m.clone();
            key[pos].0[index] -= 1;
            out.insert_add(key, c * Rational::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Applies the A-GKZ operator `∂²/∂A_1∂A_23 − ∂²/∂A_2∂A_13 + ∂²/∂A_3∂A_12`
    /// in group `g`.
    pub fn agkz_operator(&self, g: GroupId) -> Result<SparsePoly> {
        let pos = self.group_position(g)?;
        let pairs = [(var::A1, var::A23, 1), (var::A2, var::A13, -1), (var::A3, var::A12, 1)];
        Ok(self.second_order(pos, &pairs))
    }

    /// Applies `∂²/∂A_1∂A_23 − ∂²/∂A_2∂A_13` in group `g`.
    pub fn gkz_operator(&self, g: GroupId) -> Result<SparsePoly> {
        let pos = self.group_position(g)?;
        let pairs = [(var::A1, var::A23, 1), (var::A2, var::A13, -1)];
        Ok(self.second_order(pos, &pairs))
    }

    fn second_order(&self, pos: usize, pairs: &[(usize, usize, i32)]) -> SparsePoly {
        let mut out = SparsePoly::zero(&self.groups);
        for (m, c) in &self.terms {
            let e = &m[pos].0;
            for &(x, y, sign) in pairs {
                if e[x] == 0 || e[y] == 0 {
                    continue;
                }
                let mut key = m.clone();
                key[pos].0[x] -= 1;
                key[pos].0[y] -= 1;
                let k = BigInt::from(e[x] as i64 * e[y] as i64 * sign as i64);
                out.insert_add(key, c * Rational::from_integer(k));
            }
        }
        out
    }

    /// `E_{i,j}` acting on the variables of group `g` only (Leibniz rule).
    pub fn apply_eij(&self, i: u8, j: u8, g: GroupId) -> Result<SparsePoly> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
            return Err(Error::InvalidInput(format!("E_{{{i},{j}}} is not a gl3 generator")));
        }
        let pos = self.group_position(g)?;
        let mut out = SparsePoly::zero(&self.groups);
        for (m, c) in &self.terms {
            for src in 0..6 {
                let e = m[pos].0[src];
                if e == 0 {
                    continue;
                }
                let Some((dst, sign)) = substitute(src, i, j) else {
                    continue;
                };
                let mut key = m.clone();
                key[pos].0[src] -= 1;
                key[pos].0[dst] += 1;
                out.insert_add(key, c * Rational::from_integer(BigInt::from(e * sign)));
            }
        }
        Ok(out)
    }

    /// `E_{i,j}` acting diagonally, i.e. summed over every group.
    pub fn apply_eij_diagonal(&self, i: u8, j: u8) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero(&self.groups);
        for &g in &self.groups {
            out = &out + &self.apply_eij(i, j, g)?;
        }
        Ok(out)
    }

    /// Common weight of every monomial, one triple per group.
    pub fn weight_of(&self) -> Result<Vec<[i64; 3]>> {
        let mut iter = self.terms.keys();
        let first = iter
            .next()
            .ok_or_else(|| Error::NotWeightVector("zero polynomial has no weight".into()))?;
        let weight: Vec<[i64; 3]> = first.iter().map(MultiIndex6::weight).collect();
        for m in iter {
            if m.iter().map(MultiIndex6::weight).ne(weight.iter().copied()) {
                return Err(Error::NotWeightVector(format!(
                    "monomials of weights {:?} and {:?}",
                    weight,
                    m.iter().map(MultiIndex6::weight).collect::<Vec<_>>()
                )));
            }
        }
        Ok(weight)
    }

    /// Set of `(single, double)` degrees occurring in group `g`.
    pub fn bidegrees(&self, g: GroupId) -> Result<Vec<(i32, i32)>> {
        let pos = self.group_position(g)?;
        let mut out: Vec<(i32, i32)> = self
            .terms
            .keys()
            .map(|m| (m[pos].single_degree(), m[pos].double_degree()))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Invariant pairing `⟨f, g⟩ = f(∂/∂A) g(A) |_{A=0}`.
    pub fn pairing(&self, other: &SparsePoly) -> Result<Rational> {
        if self.groups != other.groups {
            return Err(Error::GroupMismatch(format!(
                "pairing over {:?} and {:?}",
                self.groups, other.groups
            )));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (m, c) in &small.terms {
            if let Some(d) = large.terms.get(m) {
                let fact = m.iter().fold(BigInt::one(), |a, e| a * e.factorial());
                acc += c * d * Rational::from_integer(fact);
            }
        }
        Ok(acc)
    }

    /// Formats a monomial as `A1^2*A12*B3`; the empty monomial prints as `1`.
    pub fn format_monomial(&self, m: &[MultiIndex6]) -> String {
        let mut parts = Vec::new();
        for (g, e) in self.groups.iter().zip(m) {
            for (idx, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(format!("{g}{}", SUBSET_LABELS[idx])),
                    _ => parts.push(format!("{g}{}^{k}", SUBSET_LABELS[idx])),
                }
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}*{}", c.abs(), self.format_monomial(m))?;
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        if self.groups == rhs.groups {
            let mut out = self.clone();
            for (m, c) in &rhs.terms {
                out.insert_add(m.clone(), c.clone());
            }
            return out;
        }
        let groups = self.union_groups(rhs);
        let lhs = self.aligned_to(&groups).expect("union contains every group");
        let rhs = rhs.aligned_to(&groups).expect("union contains every group");
        &lhs + &rhs
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            groups: self.groups.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let groups = self.union_groups(rhs);
        let lhs = self.aligned_to(&groups).expect("union contains every group");
        let rhs = rhs.aligned_to(&groups).expect("union contains every group");
        let mut out = SparsePoly::zero(&groups);
        for (ma, ca) in &lhs.terms {
            for (mb, cb) in &rhs.terms {
                let key: Monomial = ma.iter().zip(mb).map(|(a, b)| *a + *b).collect();
                out.insert_add(key, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use var::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn a(idx: usize) -> SparsePoly {
        SparsePoly::variable(GroupId::A, idx)
    }

    fn b(idx: usize) -> SparsePoly {
        SparsePoly::variable(GroupId::B, idx)
    }

    #[test]
    fn pairing_examples() {
        let a1sq = &a(A1) * &a(A1);
        assert_eq!(a1sq.pairing(&a1sq).unwrap(), q(2));

        let lhs = &a(A1) * &a(A23);
        let rhs = &a(A2) * &a(A13);
        assert_eq!(lhs.pairing(&rhs).unwrap(), q(0));

        let ab = &a(A1) * &b(A2);
        assert_eq!(ab.scale(&q(2)).pairing(&ab).unwrap(), q(2));
    }

    #[test]
    fn pairing_rejects_group_mismatch() {
        let err = a(A1).pairing(&b(A1)).unwrap_err();
        assert!(matches!(err, Error::GroupMismatch(_)));
    }

    #[test]
    fn pairing_is_diagonal_on_monomials() {
        // exhaustive over a slice of exponent space: entries in 0..=6 on two
        // coordinates, the rest fixed
        for x in 0..=6 {
            for y in 0..=6 {
                let alpha = MultiIndex6([x, 1, 0, y, 0, 2]);
                let pa = SparsePoly::monomial(&[(GroupId::A, alpha)], q(1));
                for u in 0..=6 {
                    for v in 0..=6 {
                        let beta = MultiIndex6([u, 1, 0, v, 0, 2]);
                        let pb = SparsePoly::monomial(&[(GroupId::A, beta)], q(1));
                        let expected = if alpha == beta {
                            Rational::from_integer(alpha.factorial())
                        } else {
                            q(0)
                        };
                        assert_eq!(pa.pairing(&pb).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn eij_examples() {
        assert_eq!(a(A1).apply_eij(2, 1, GroupId::A).unwrap(), a(A2));
        assert_eq!(a(A23).apply_eij(1, 2, GroupId::A).unwrap(), a(A13));
        let p = &a(A2) * &a(A13);
        assert_eq!(p.apply_eij(1, 2, GroupId::A).unwrap(), &a(A1) * &a(A13));
    }

    #[test]
    fn eij_sorting_sign_and_repeats() {
        // {1,2} with 1 -> 3 becomes (3,2) = -{2,3}
        assert_eq!(a(A12).apply_eij(3, 1, GroupId::A).unwrap(), -&a(A23));
        // 1 already present
        assert!(a(A12).apply_eij(1, 2, GroupId::A).unwrap().is_zero());
        // 3 absent
        assert!(a(A12).apply_eij(1, 3, GroupId::A).unwrap().is_zero());
        // number operator
        let p = &a(A1) * &a(A12);
        assert_eq!(p.apply_eij(1, 1, GroupId::A).unwrap(), p.scale(&q(2)));
    }

    #[test]
    fn eij_unknown_group() {
        assert!(matches!(
            a(A1).apply_eij(1, 2, GroupId::C),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn weight_examples() {
        let p = &(&a(A1) * &a(A1)) * &a(A12);
        assert_eq!(p.weight_of().unwrap(), vec![[3, 1, 0]]);
        assert_eq!(SparsePoly::one().weight_of().unwrap(), Vec::<[i64; 3]>::new());
        assert!(matches!(
            (&a(A1) + &a(A2)).weight_of(),
            Err(Error::NotWeightVector(_))
        ));
    }

    #[test]
    fn add_and_subtract_cancel() {
        let p = &(&a(A1) * &b(A3)) + &a(A12).scale(&Rational::new(3.into(), 7.into()));
        let q2 = &a(A2) * &a(A23);
        assert_eq!(&(&p + &q2) - &q2, p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn relabel_reorders_groups() {
        let p = &a(A1) * &b(A23);
        let r = p
            .relabeled(&[GroupId::A, GroupId::B], &[GroupId(5), GroupId(2)])
            .unwrap();
        assert_eq!(r.groups(), &[GroupId(2), GroupId(5)]);
        assert_eq!(
            r,
            &SparsePoly::variable(GroupId(5), A1) * &SparsePoly::variable(GroupId(2), A23)
        );
    }

    #[test]
    fn display_is_readable() {
        let p = &a(A1).scale(&q(2)) - &(&a(A2) * &a(A13));
        assert_eq!(p.to_string(), "-1*A2*A13 + 2*A1");
    }
}
