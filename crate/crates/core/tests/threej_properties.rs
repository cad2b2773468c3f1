use gl3sixj::gamma::{enumerate_patterns, RescaledBasis};
use gl3sixj::invariants::{enumerate_tau_generators, semiinvariant_poly};
use gl3sixj::threej::{numerator_tensor, threej_value, threej_value_with};
use gl3sixj::{AgkzBasis, GTPattern, GroupId, GtBasis, Rational, SparsePoly, TauLabel, ThreeJQuery, Weight3};
use num_traits::Zero;
use proptest::prelude::*;

const GROUPS: [GroupId; 3] = [GroupId::A, GroupId::B, GroupId::C];

fn total_weight(f: &SparsePoly) -> [i64; 3] {
    let (m, _) = f.terms().next().expect("nonzero semiinvariant");
    m.iter().fold([0; 3], |acc, e| {
        let w = e.weight();
        [acc[0] + w[0], acc[1] + w[1], acc[2] + w[2]]
    })
}

#[test]
fn nonzero_values_respect_weight_selection() {
    let weights = Weight3::all_up_to(2);
    for &w1 in &weights {
        for &w2 in &weights {
            for &w3 in &weights {
                let ws = [w1, w2, w3];
                let pats: Vec<Vec<GTPattern>> = ws.iter().map(|w| enumerate_patterns(*w)).collect();
                for t in enumerate_tau_generators(w1, w2, w3) {
                    let f = semiinvariant_poly(&t, GROUPS[0], GROUPS[1], GROUPS[2]).unwrap();
                    let target = total_weight(&f);
                    for ([i, j, k], v) in numerator_tensor(&t, &ws, &AgkzBasis).unwrap() {
                        assert!(!v.is_zero());
                        let sum = [&pats[0][i as usize], &pats[1][j as usize], &pats[2][k as usize]]
                            .iter()
                            .fold([0; 3], |acc, p| {
                                let w = p.weight();
                                [acc[0] + w[0], acc[1] + w[1], acc[2] + w[2]]
                            });
                        assert_eq!(sum, target, "{t} at {:?}", [i, j, k]);
                    }
                }
            }
        }
    }
}

fn reconstruct(t: TauLabel, w: Weight3) -> SparsePoly {
    let pats = enumerate_patterns(w);
    let mut acc = SparsePoly::zero(&GROUPS);
    for a in &pats {
        for b in &pats {
            for c in &pats {
                let v = threej_value(&ThreeJQuery::new([w; 3], [*a, *b, *c], t).unwrap()).unwrap();
                if v.is_zero() {
                    continue;
                }
                let part = |p: &GTPattern, g: GroupId| {
                    AgkzBasis.vector(p).unwrap().relabeled(&[GroupId::A], &[g]).unwrap()
                };
                let term = &(&part(a, GROUPS[0]) * &part(b, GROUPS[1])) * &part(c, GROUPS[2]);
                acc = &acc + &term.scale(&v);
            }
        }
    }
    acc
}

#[test]
fn determinant_is_reconstructed_from_its_3j_symbols() {
    let w = Weight3::new(1, 0, 0).unwrap();
    let f = semiinvariant_poly(&TauLabel::unit(1), GROUPS[0], GROUPS[1], GROUPS[2]).unwrap();
    assert_eq!(reconstruct(TauLabel::unit(1), w), f);
}

#[test]
fn tilde_determinant_is_reconstructed_from_its_3j_symbols() {
    let w = Weight3::new(1, 1, 0).unwrap();
    let f = semiinvariant_poly(&TauLabel::unit(8), GROUPS[0], GROUPS[1], GROUPS[2]).unwrap();
    assert_eq!(reconstruct(TauLabel::unit(8), w), f);
}

fn covariance_query() -> ThreeJQuery {
    let ws = [
        Weight3::new(2, 1, 0).unwrap(),
        Weight3::new(1, 1, 0).unwrap(),
        Weight3::new(1, 0, 0).unwrap(),
    ];
    let t = TauLabel([0, 1, 0, 0, 1, 0, 0, 0]);
    let pats: Vec<Vec<GTPattern>> = ws.iter().map(|w| enumerate_patterns(*w)).collect();
    for a in &pats[0] {
        for b in &pats[1] {
            for c in &pats[2] {
                let q = ThreeJQuery::new(ws, [*a, *b, *c], t).unwrap();
                let v = threej_value(&q).unwrap();
                // pick an entry whose first vector has a ζ correction
                if !v.is_zero() && AgkzBasis.vector(a).unwrap().len() > 1 {
                    return q;
                }
            }
        }
    }
    panic!("no nonzero entry");
}

proptest! {
    #[test]
    fn rescaling_a_vector_divides_the_value(n in -9i64..=9, d in 1i64..=9, slot in 0usize..3) {
        prop_assume!(n != 0);
        let c = Rational::new(n.into(), d.into());
        let q = covariance_query();
        let basis = RescaledBasis { inner: &AgkzBasis, pattern: q.patterns[slot], factor: c.clone() };
        let scaled = threej_value_with(&q, &basis).unwrap();
        let base = threej_value(&q).unwrap();
        // a pattern repeated in several slots picks up one factor per slot
        let hits = q.patterns.iter().filter(|p| **p == q.patterns[slot]).count() as i32;
        let mut expected = base;
        for _ in 0..hits {
            expected /= &c;
        }
        prop_assert_eq!(scaled, expected);
    }
}
