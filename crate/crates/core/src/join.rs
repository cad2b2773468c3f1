//! Tetrahedral contraction of four sparse 3-tensors.
//!
//! The six indices `e_1 … e_6` are shared pairwise by
//! `T_1(e_1,e_2,e_4)`, `T_2(e_4,e_3,e_5)`, `T_3(e_2,e_3,e_6)` and
//! `T_4(e_1,e_6,e_5)`, and each index carries a weight `w_k(e_k)`. The sum
//!
//! `Σ T_1 T_2 T_3 T_4 Π_k w_k(e_k)`
//!
//! is computed as two hash joins (`T_1 ⋈ T_2` over `e_4`, `T_3 ⋈ T_4` over
//! `e_6`) followed by a join of the halves over `(e_1, e_2, e_3, e_5)`.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{AddAssign, Mul};

use num_traits::Zero;

/// Positions of the index slots `0..6` in each of the four tensors.
#[cfg(test)]
const SLOTS: [[usize; 3]; 4] = [[0, 1, 3], [3, 2, 4], [1, 2, 5], [0, 5, 4]];

pub type Entry<K, V> = ([K; 3], V);

pub trait Scalar:
    Clone + Send + Sync + Zero + for<'a> AddAssign<&'a Self> + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + Send + Sync + Zero + for<'a> AddAssign<&'a T> + for<'a> Mul<&'a T, Output = T>
{
}

type Half<K, V> = HashMap<[K; 4], V>;

/// Joins `left` and `right` on `left[lpos] == right[rpos]`, summing
/// `l · r · w(slot, shared)` per output key.
fn half<K, V, W, F>(
    left: &[Entry<K, V>],
    lpos: usize,
    right: &[Entry<K, V>],
    rpos: usize,
    slot: usize,
    key: F,
    weight: &W,
    parallel: bool,
) -> Half<K, V>
where
    K: Hash + Eq + Clone + Send + Sync,
    V: Scalar,
    W: Fn(usize, &K) -> V + Sync,
    F: Fn(&[K; 3], &[K; 3]) -> [K; 4] + Sync,
{
    let mut index: HashMap<&K, Vec<&Entry<K, V>>> = HashMap::new();
    for r in right {
        index.entry(&r.0[rpos]).or_default().push(r);
    }
    let step = |mut acc: Half<K, V>, l: &Entry<K, V>| {
        if let Some(rs) = index.get(&l.0[lpos]) {
            let wl = l.1.clone() * &weight(slot, &l.0[lpos]);
            for r in rs {
                *acc.entry(key(&l.0, &r.0)).or_insert_with(V::zero) += &(wl.clone() * &r.1);
            }
        }
        acc
    };
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            return left
                .par_iter()
                .fold(HashMap::new, step)
                .reduce(HashMap::new, merge);
        }
    }
    left.iter().fold(HashMap::new(), step)
}

#[cfg(feature = "parallel")]
fn merge<K: Hash + Eq, V: Scalar>(mut a: Half<K, V>, b: Half<K, V>) -> Half<K, V> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert_with(V::zero) += &v;
    }
    a
}

fn both<A: Send, B: Send>(parallel: bool, a: impl FnOnce() -> A + Send, b: impl FnOnce() -> B + Send) -> (A, B) {
    if parallel {
        #[cfg(feature = "parallel")]
        return rayon::join(a, b);
    }
    (a(), b())
}

/// `Σ T_1 T_2 T_3 T_4 Π_k w(k, e_k)` over all index assignments.
pub fn tetrahedral<K, V, W>(t: [&[Entry<K, V>]; 4], weight: W, parallel: bool) -> V
where
    K: Hash + Eq + Clone + Send + Sync,
    V: Scalar,
    W: Fn(usize, &K) -> V + Sync,
{
    if t.iter().any(|x| x.is_empty()) {
        return V::zero();
    }
    let w = &weight;
    let (left, right) = both(
        parallel,
        // T_1(e1,e2,e4) ⋈ T_2(e4,e3,e5)
        || {
            half(t[0], 2, t[1], 0, 3, |a, b| [a[0].clone(), a[1].clone(), b[1].clone(), b[2].clone()], w, parallel)
        },
        // T_3(e2,e3,e6) ⋈ T_4(e1,e6,e5)
        || {
            half(t[2], 2, t[3], 1, 5, |a, b| [b[0].clone(), a[0].clone(), a[1].clone(), b[2].clone()], w, parallel)
        },
    );
    let (small, large) = if left.len() <= right.len() {
        (&left, &right)
    } else {
        (&right, &left)
    };
    let close = |(k, v): (&[K; 4], &V)| -> Option<V> {
        let other = large.get(k)?;
        let mut x = v.clone() * other;
        for (slot, e) in [0, 1, 2, 4].into_iter().zip(k) {
            x = x * &w(slot, e);
        }
        Some(x)
    };
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            return small
                .par_iter()
                .filter_map(close)
                .fold(V::zero, |mut a, x| {
                    a += &x;
                    a
                })
                .reduce(V::zero, |mut a, b| {
                    a += &b;
                    a
                });
        }
    }
    small.iter().filter_map(close).fold(V::zero(), |mut a, x| {
        a += &x;
        a
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct six-fold sum over a dense index range.
    fn brute(t: [&[Entry<u32, i64>]; 4], n: u32, w: impl Fn(usize, &u32) -> i64) -> i64 {
        let lookup: Vec<HashMap<[u32; 3], i64>> = t.iter().map(|x| x.iter().cloned().collect()).collect();
        let mut acc = 0;
        let mut e = [0u32; 6];
        loop {
            let mut term = 1;
            for (k, slots) in SLOTS.iter().enumerate() {
                term *= lookup[k].get(&slots.map(|s| e[s])).copied().unwrap_or(0);
            }
            for (k, x) in e.iter().enumerate() {
                term *= w(k, x);
            }
            acc += term;
            let mut i = 0;
            while i < 6 {
                e[i] += 1;
                if e[i] < n {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == 6 {
                return acc;
            }
        }
    }

    fn epsilon() -> Vec<Entry<u32, i64>> {
        vec![([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)]
    }

    #[test]
    fn epsilon_contraction() {
        let e = epsilon();
        let t = [&e[..], &e[..], &e[..], &e[..]];
        assert_eq!(tetrahedral(t, |_, _| 1i64, false), 6);
        assert_eq!(brute(t, 3, |_, _| 1), 6);
    }

    #[test]
    fn weighted_random_tensors_match_brute_force() {
        let mut seed = 7u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for _ in 0..20 {
            let mut ts: Vec<Vec<Entry<u32, i64>>> = Vec::new();
            for _ in 0..4 {
                let mut m: HashMap<[u32; 3], i64> = HashMap::new();
                for _ in 0..10 {
                    let k = [next() as u32 % 3, next() as u32 % 3, next() as u32 % 3];
                    *m.entry(k).or_default() += next() % 7 - 3;
                }
                ts.push(m.into_iter().collect());
            }
            let t = [&ts[0][..], &ts[1][..], &ts[2][..], &ts[3][..]];
            let w = |k: usize, e: &u32| (k as i64 + 1) * (*e as i64 + 2);
            let expected = brute(t, 3, w);
            assert_eq!(tetrahedral(t, w, false), expected);
            assert_eq!(tetrahedral(t, w, true), expected);
        }
    }

    #[test]
    fn empty_factor_gives_zero() {
        let e = epsilon();
        assert_eq!(tetrahedral([&e[..], &[], &e[..], &e[..]], |_, _| 1i64, true), 0);
    }
}
