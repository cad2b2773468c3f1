use gl3sixj::lattice::ShiftedLattice;
use proptest::prelude::*;

/// Lattices generated by differences inside coordinate blocks, with a
/// random shift; their nonnegative points have bounded block sums.
fn block_lattice() -> impl Strategy<Value = (Vec<usize>, Vec<i64>)> {
    prop::collection::vec(1usize..=3, 1..=2).prop_flat_map(|blocks| {
        let n: usize = blocks.iter().sum();
        (Just(blocks), prop::collection::vec(-1i64..=2, n))
    })
}

fn generators(blocks: &[usize]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().sum();
    let mut out = Vec::new();
    let mut start = 0;
    for &b in blocks {
        for k in 1..b {
            let mut v = vec![0; n];
            v[start] = 1;
            v[start + k] = -1;
            out.push(v);
        }
        start += b;
    }
    out
}

fn brute_force(l: &ShiftedLattice, bound: i64) -> Vec<Vec<i64>> {
    let n = l.dim();
    let mut out = Vec::new();
    let mut p = vec![0i64; n];
    loop {
        if l.contains(&p) {
            out.push(p.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            p[i] += 1;
            if p[i] <= bound {
                break;
            }
            p[i] = 0;
        }
    }
}

proptest! {
    #[test]
    fn enumeration_matches_brute_force((blocks, shift) in block_lattice()) {
        let l = ShiftedLattice::new(generators(&blocks), shift.clone()).unwrap();
        // coordinates are bounded by the largest block sum of the shift
        let mut bound = 0;
        let mut start = 0;
        for &b in &blocks {
            bound = bound.max(shift[start..start + b].iter().sum::<i64>());
            start += b;
        }
        prop_assert_eq!(l.nonnegative_points().unwrap(), brute_force(&l, bound));
    }

    #[test]
    fn enumerated_points_are_members((blocks, shift) in block_lattice()) {
        let l = ShiftedLattice::new(generators(&blocks), shift).unwrap();
        for p in l.nonnegative_points().unwrap() {
            prop_assert!(l.contains(&p));
            prop_assert!(p.iter().all(|&x| x >= 0));
        }
    }
}
