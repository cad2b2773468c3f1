//! Counts multiplicity labels against the dimension of the space of
//! harmonic highest-weight vectors of weight `(k, k, k)`, computed by rank.

use std::collections::BTreeMap;

use gl3sixj::invariants::enumerate_tau;
use gl3sixj::{GroupId, MultiIndex6, Rational, SparsePoly, Weight3};
use num_traits::{One, Zero};

const GROUPS: [GroupId; 3] = [GroupId::A, GroupId::B, GroupId::C];

fn exponents(single: i32, double: i32) -> Vec<MultiIndex6> {
    let mut out = Vec::new();
    for x1 in 0..=single {
        for x2 in 0..=single - x1 {
            for y12 in 0..=double {
                for y13 in 0..=double - y12 {
                    out.push(MultiIndex6([x1, x2, single - x1 - x2, y12, y13, double - y12 - y13]));
                }
            }
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] * &inv;
            for c in col..ncols {
                let d = &f * &rows[r][c];
                rows[i][c] -= d;
            }
        }
        r += 1;
    }
    r
}

fn invariant_dimension(ws: [Weight3; 3]) -> usize {
    let total: i32 = ws.iter().map(|w| w.m1() + w.m2()).sum();
    if total % 3 != 0 {
        return 0;
    }
    let k = (total / 3) as i64;
    let per_group: Vec<Vec<MultiIndex6>> = ws.iter().map(|w| exponents(w.m1() - w.m2(), w.m2())).collect();
    let mut basis = Vec::new();
    for a in &per_group[0] {
        for b in &per_group[1] {
            for c in &per_group[2] {
                let w = [a.weight(), b.weight(), c.weight()];
                if (0..3).all(|i| w[0][i] + w[1][i] + w[2][i] == k) {
                    basis.push([*a, *b, *c]);
                }
            }
        }
    }
    if basis.is_empty() {
        return 0;
    }
    // columns: images of each basis monomial under E12, E23 and the three
    // A-GKZ operators
    let mut row_index: BTreeMap<(usize, Vec<MultiIndex6>), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
    for m in &basis {
        let parts: Vec<(GroupId, MultiIndex6)> = GROUPS.iter().copied().zip(m.iter().copied()).collect();
        let f = SparsePoly::monomial(&parts, Rational::one()).aligned_to(&GROUPS).unwrap();
        let images = [
            f.apply_eij_diagonal(1, 2).unwrap(),
            f.apply_eij_diagonal(2, 3).unwrap(),
            f.agkz_operator(GROUPS[0]).unwrap(),
            f.agkz_operator(GROUPS[1]).unwrap(),
            f.agkz_operator(GROUPS[2]).unwrap(),
        ];
        let mut col = Vec::new();
        for (op, im) in images.iter().enumerate() {
            for (mono, c) in im.terms() {
                let n = row_index.len();
                let r = *row_index.entry((op, mono.clone())).or_insert(n);
                col.push((r, c.clone()));
            }
        }
        columns.push(col);
    }
    let mut rows = vec![vec![Rational::zero(); basis.len()]; row_index.len()];
    for (j, col) in columns.iter().enumerate() {
        for (r, c) in col {
            rows[*r][j] = c.clone();
        }
    }
    basis.len() - rank(rows, basis.len())
}

#[test]
fn label_counts_match_invariant_dimensions() {
    let weights = Weight3::all_up_to(2);
    for &w1 in &weights {
        for &w2 in &weights {
            for &w3 in &weights {
                assert_eq!(
                    enumerate_tau(w1, w2, w3).len(),
                    invariant_dimension([w1, w2, w3]),
                    "({w1}) ({w2}) ({w3})"
                );
            }
        }
    }
}

#[test]
fn adjoint_triple_has_two_labels() {
    let w = Weight3::new(2, 1, 0).unwrap();
    assert_eq!(invariant_dimension([w; 3]), 2);
    assert_eq!(enumerate_tau(w, w, w).len(), 2);
}
