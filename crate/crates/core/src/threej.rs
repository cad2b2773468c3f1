//! 3j-symbols `⟨f^τ, F_α F_β F_γ⟩ / (|F_α|² |F_β|² |F_γ|²)`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gamma::{enumerate_patterns, single_group_coefficients, AgkzBasis, GTPattern, GtBasis, Weight3};
use crate::invariants::{semiinvariant_poly, TauLabel};
use crate::poly::{GroupId, MultiIndex6, SparsePoly};
use crate::Rational;

/// Expanded semiinvariant as `(exponents in a, b, c; coefficient)` terms.
pub type TripleTerms = Vec<([MultiIndex6; 3], Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeJQuery {
    pub weights: [Weight3; 3],
    pub patterns: [GTPattern; 3],
    pub label: TauLabel,
}

impl ThreeJQuery {
    pub fn new(weights: [Weight3; 3], patterns: [GTPattern; 3], label: TauLabel) -> Result<Self> {
        let q = ThreeJQuery {
            weights,
            patterns,
            label,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        for (p, w) in self.patterns.iter().zip(&self.weights) {
            p.validate()?;
            if p.top() != *w {
                return Err(Error::NotAPattern(format!("pattern {p} does not sit under weight {w}")));
            }
        }
        check_label(&self.label, &self.weights)
    }
}

pub(crate) fn check_label(t: &TauLabel, weights: &[Weight3; 3]) -> Result<()> {
    if t.is_compatible(weights) {
        Ok(())
    } else {
        let [w1, w2, w3] = t.weights();
        Err(Error::IncompatibleLabels(format!(
            "label {t} carries weights ({w1}), ({w2}), ({w3}), not ({}), ({}), ({})",
            weights[0], weights[1], weights[2]
        )))
    }
}

/// Terms of `f^τ` with letters `a, b, c` in positions `0, 1, 2`.
pub fn semiinvariant_terms(t: &TauLabel) -> Result<TripleTerms> {
    let groups = [GroupId::A, GroupId::B, GroupId::C];
    let f = semiinvariant_poly(t, groups[0], groups[1], groups[2])?.aligned_to(&groups)?;
    Ok(f.terms().map(|(m, c)| ([m[0], m[1], m[2]], c.clone())).collect())
}

/// `⟨f, F_1 ⊗ F_2 ⊗ F_3⟩` for single-group factors.
pub fn triple_pairing(f: &TripleTerms, factors: [&SparsePoly; 3]) -> Rational {
    let lookups: Vec<HashMap<MultiIndex6, &Rational>> = factors
        .iter()
        .map(|p| single_group_coefficients(p).collect())
        .collect();
    let mut acc = Rational::zero();
    for (m, c) in f {
        let mut term = c.clone();
        for (k, e) in m.iter().enumerate() {
            match lookups[k].get(e) {
                Some(&x) => term *= x * Rational::from_integer(e.factorial()),
                None => {
                    term = Rational::zero();
                    break;
                }
            }
        }
        acc += term;
    }
    acc
}

pub fn threej_value(q: &ThreeJQuery) -> Result<Rational> {
    threej_value_with(q, &AgkzBasis)
}

/// [`threej_value`] over an arbitrary basis.
pub fn threej_value_with<B: GtBasis + ?Sized>(q: &ThreeJQuery, basis: &B) -> Result<Rational> {
    q.validate()?;
    let f = semiinvariant_terms(&q.label)?;
    let vectors = q
        .patterns
        .iter()
        .map(|p| basis.vector(p))
        .collect::<Result<Vec<_>>>()?;
    let num = triple_pairing(&f, [&vectors[0], &vectors[1], &vectors[2]]);
    if num.is_zero() {
        return Ok(num);
    }
    let mut den = Rational::from_integer(1.into());
    for v in &vectors {
        den *= v.pairing(v)?;
    }
    Ok(num / den)
}

/// All nonzero numerators `⟨f^τ, F_α F_β F_γ⟩`, keyed by indices into the
/// sorted pattern lists of the three weights.
pub fn numerator_tensor<B: GtBasis + ?Sized>(
    t: &TauLabel,
    weights: &[Weight3; 3],
    basis: &B,
) -> Result<Vec<([u32; 3], Rational)>> {
    check_label(t, weights)?;
    let f = semiinvariant_terms(t)?;
    // exponent -> [(pattern index, coefficient · exponent!)] per slot
    let mut index: Vec<HashMap<MultiIndex6, Vec<(u32, Rational)>>> = Vec::with_capacity(3);
    for w in weights {
        let mut map: HashMap<MultiIndex6, Vec<(u32, Rational)>> = HashMap::new();
        for (i, p) in enumerate_patterns(*w).iter().enumerate() {
            let v = basis.vector(p)?;
            for (e, c) in single_group_coefficients(&v) {
                map.entry(e)
                    .or_default()
                    .push((i as u32, c * Rational::from_integer(e.factorial())));
            }
        }
        index.push(map);
    }
    let mut acc: HashMap<[u32; 3], Rational> = HashMap::new();
    for (m, c) in &f {
        let (Some(l0), Some(l1), Some(l2)) = (index[0].get(&m[0]), index[1].get(&m[1]), index[2].get(&m[2])) else {
            continue;
        };
        for (i0, c0) in l0 {
            let x0 = c * c0;
            for (i1, c1) in l1 {
                let x1 = &x0 * c1;
                for (i2, c2) in l2 {
                    *acc.entry([*i0, *i1, *i2]).or_insert_with(Rational::zero) += &x1 * c2;
                }
            }
        }
    }
    let mut out: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by_key(|e| e.0);
    Ok(out)
}
