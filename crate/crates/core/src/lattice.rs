//! Shifted integer lattices `κ + B` and their points in the nonnegative
//! octant.
//!
//! Enumeration turns `x - κ ∈ B ⊗ ℚ` into linear equations `N x = N κ`
//! (rows of `N` span the orthogonal complement of `B`), bounds every
//! coordinate through an equation with nonnegative coefficients, and walks the
//! coordinates depth-first. Points are then filtered for membership in `B`
//! itself unless `B` is known to be saturated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Rational;

/// Integer lattice given by linearly independent generators, plus a shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedLattice {
    generators: Vec<Vec<i64>>,
    shift: Vec<i64>,
    /// Integer echelon basis of the generator lattice.
    echelon: Vec<Vec<i64>>,
    /// Integer rows `N` with `x ∈ κ + B ⊗ ℚ ⟺ N x = N κ`.
    constraints: Vec<Vec<i64>>,
    saturated: bool,
}

impl ShiftedLattice {
    pub fn new(generators: Vec<Vec<i64>>, shift: Vec<i64>) -> Result<Self> {
        let dim = shift.len();
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::InvalidLattice(format!(
                "generator of length {} in dimension {dim}",
                g.len()
            )));
        }
        let rows: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        if linalg::rank(&rows, dim) != generators.len() {
            return Err(Error::InvalidLattice(
                "generators are linearly dependent".into(),
            ));
        }
        let echelon = integer_echelon(&generators, dim);
        let saturated = echelon
            .iter()
            .all(|row| row.iter().find(|&&x| x != 0).is_some_and(|&x| x.abs() == 1));
        let constraints = linalg::nullspace(&rows, dim)
            .into_iter()
            .map(|v| clear_denominators(&v))
            .collect();
        Ok(ShiftedLattice {
            generators,
            shift,
            echelon,
            constraints,
            saturated,
        })
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Whether `point ∈ κ + B`.
    pub fn contains(&self, point: &[i64]) -> bool {
        if point.len() != self.dim() {
            return false;
        }
        let mut rest: Vec<i64> = point.iter().zip(&self.shift).map(|(p, s)| p - s).collect();
        for row in &self.echelon {
            let pc = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
            if rest[pc] % row[pc] != 0 {
                return false;
            }
            let k = rest[pc] / row[pc];
            for (r, x) in rest.iter_mut().zip(row) {
                *r -= k * x;
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    /// All points of `(κ + B) ∩ ℤ^n_{≥0}`, in lexicographic order.
    pub fn nonnegative_points(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.dim();
        let rhs: Vec<i64> = self
            .constraints
            .iter()
            .map(|row| row.iter().zip(&self.shift).map(|(a, b)| a * b).sum())
            .collect();

        let mut bounding: Vec<usize> = Vec::new();
        for (k, row) in self.constraints.iter().enumerate() {
            if row.iter().all(|&x| x >= 0) || row.iter().all(|&x| x <= 0) {
                bounding.push(k);
            }
        }
        for i in 0..n {
            if !bounding.iter().any(|&k| self.constraints[k][i] != 0) {
                return Err(Error::Unbounded(format!(
                    "coordinate {i} is not bounded by the lattice equations"
                )));
            }
        }
        let last: Vec<usize> = self
            .constraints
            .iter()
            .map(|row| row.iter().rposition(|&x| x != 0).unwrap_or(0))
            .collect();

        let walk = Walk {
            rows: &self.constraints,
            rhs: &rhs,
            bounding: &bounding,
            last: &last,
            n,
        };
        let mut out = Vec::new();
        let mut point = vec![0i64; n];
        let mut partial = vec![0i64; self.constraints.len()];
        walk.descend(0, &mut point, &mut partial, &mut out);
        if !self.saturated {
            out.retain(|p| self.contains(p));
        }
        Ok(out)
    }
}

struct Walk<'a> {
    rows: &'a [Vec<i64>],
    rhs: &'a [i64],
    bounding: &'a [usize],
    last: &'a [usize],
    n: usize,
}

impl Walk<'_> {
    fn descend(&self, i: usize, point: &mut [i64], partial: &mut [i64], out: &mut Vec<Vec<i64>>) {
        if i == self.n {
            out.push(point.to_vec());
            return;
        }
        let mut ub = i64::MAX;
        for &k in self.bounding {
            let c = self.rows[k][i];
            if c != 0 {
                // rows are sign-uniform, so the remaining budget bounds x_i
                let budget = floor_div(self.rhs[k] - partial[k], c);
                ub = ub.min(budget);
            }
        }
        if ub < 0 {
            return;
        }
        for v in 0..=ub {
            point[i] = v;
            let mut ok = true;
            for (k, row) in self.rows.iter().enumerate() {
                partial[k] += row[i] * v;
                if self.last[k] == i && partial[k] != self.rhs[k] {
                    ok = false;
                }
            }
            if ok {
                self.descend(i + 1, point, partial, out);
            }
            for (k, row) in self.rows.iter().enumerate() {
                partial[k] -= row[i] * v;
            }
        }
        point[i] = 0;
    }
}

fn floor_div(a: i64, c: i64) -> i64 {
    if c > 0 {
        a.div_euclid(c)
    } else {
        (-a).div_euclid(-c)
    }
}

fn clear_denominators(v: &[Rational]) -> Vec<i64> {
    let lcm = v
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("constraint coefficients fit in i64")
        })
        .collect()
}

/// Row echelon basis of the integer row span (gcd row operations only).
fn integer_echelon(generators: &[Vec<i64>], dim: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = generators.to_vec();
    let mut r = 0;
    for col in 0..dim {
        if r == m.len() {
            break;
        }
        loop {
            // move the smallest nonzero entry of the column to row r
            let Some(p) = (r..m.len())
                .filter(|&i| m[i][col] != 0)
                .min_by_key(|&i| m[i][col].abs())
            else {
                break;
            };
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][col] != 0 {
                    let k = m[i][col] / m[r][col];
                    for c in 0..dim {
                        m[i][c] -= k * m[r][c];
                    }
                    if m[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][col] != 0 {
            r += 1;
        }
    }
    m.truncate(r);
    m.retain(|row| row.iter().any(|&x| x != 0));
    m
}
