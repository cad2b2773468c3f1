//! 6j-symbols: pairings of four semiinvariants across six shared groups.
//!
//! The groups `A¹ … A⁶` carry the weights `V1, V2, V3, U, W, H` and the
//! four semiinvariants use them as
//!
//! | factor | letters `a, b, c` | weights        |
//! |--------|-------------------|----------------|
//! | `f_1`  | `A¹, A², A⁴`      | `V1, V2, U`    |
//! | `f_2`  | `A⁴, A³, A⁵`      | `U, V3, W`     |
//! | `f_3`  | `A², A³, A⁶`      | `V2, V3, H`    |
//! | `f_4`  | `A¹, A⁶, A⁵`      | `V1, H, W`     |
//!
//! Three evaluation routes are provided. [`sixj_lattice`] sums over matched
//! tuples of `Z`-support points, [`sixj_contract`] contracts the expanded
//! coefficients with factorial weights, and [`sixj_by_definition`] sums
//! products of 3j numerators over Gelfand-Tsetlin patterns divided by the
//! norms.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gamma::{enumerate_patterns, AgkzBasis, GtBasis, Weight3};
use crate::invariants::{z_support, TauLabel, ZMonomial};
use crate::join::{self, Entry};
use crate::lattice::ShiftedLattice;
use crate::poly::MultiIndex6;
use crate::threej::{check_label, numerator_tensor, semiinvariant_terms};
use crate::Rational;

/// One-based groups `A^k` read by the letters of each `f_i`.
pub const FACTOR_GROUPS: [[usize; 3]; 4] = [[1, 2, 4], [4, 3, 5], [2, 3, 6], [1, 6, 5]];

/// Position in [`SixJProblem::weights`] of the weight carried by `A^k`,
/// indexed by `k - 1`.
pub const GROUP_WEIGHT: [usize; 6] = [0, 1, 3, 2, 4, 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SixJProblem {
    /// `(V1, V2, U, V3, W, H)`.
    pub weights: [Weight3; 6],
    pub labels: [TauLabel; 4],
}

impl SixJProblem {
    pub fn new(weights: [Weight3; 6], labels: [TauLabel; 4]) -> Result<Self> {
        let p = SixJProblem { weights, labels };
        p.validate()?;
        Ok(p)
    }

    /// All weights zero, all labels zero.
    pub fn trivial() -> Self {
        SixJProblem {
            weights: [Weight3::trivial(); 6],
            labels: [TauLabel::default(); 4],
        }
    }

    /// Weight of group `A^k`, one-based.
    pub fn group_weight(&self, k: usize) -> Weight3 {
        self.weights[GROUP_WEIGHT[k - 1]]
    }

    /// The weight triple each `f_i` lives in.
    pub fn triples(&self) -> [[Weight3; 3]; 4] {
        FACTOR_GROUPS.map(|gs| gs.map(|k| self.group_weight(k)))
    }

    pub fn validate(&self) -> Result<()> {
        for (i, (t, ws)) in self.labels.iter().zip(self.triples()).enumerate() {
            check_label(t, &ws).map_err(|e| match e {
                Error::IncompatibleLabels(msg) => Error::IncompatibleLabels(format!("f{}: {msg}", i + 1)),
                other => other,
            })?;
        }
        Ok(())
    }

    /// Number of six-tuples of patterns summed by the definition route.
    pub fn pattern_tuple_count(&self) -> u128 {
        self.weights.iter().map(|w| w.dimension() as u128).product()
    }
}

impl fmt::Display for SixJProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| format!("[{w}]")).collect();
        let ts: Vec<String> = self.labels.iter().map(|t| format!("[{t}]")).collect();
        write!(f, "{} / {}", ws.join(" "), ts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SixJMethod {
    Lattice,
    Contract,
    Definition,
}

impl SixJMethod {
    pub const ALL: [SixJMethod; 3] = [SixJMethod::Lattice, SixJMethod::Contract, SixJMethod::Definition];

    pub fn name(self) -> &'static str {
        match self {
            SixJMethod::Lattice => "lattice",
            SixJMethod::Contract => "contract",
            SixJMethod::Definition => "definition",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SixJConfig {
    /// Largest pattern six-tuple count the definition route accepts.
    pub max_pattern_tuples: u128,
    /// Run joins on the rayon pool. Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for SixJConfig {
    fn default() -> Self {
        SixJConfig {
            max_pattern_tuples: 1_000_000_000_000,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// A `Z`-support point of `f^τ` with its image in `a, b, c` exponents and
/// its coefficient `sign(x) / x!`.
#[derive(Clone, Debug)]
pub struct SupportPoint {
    pub z: ZMonomial,
    pub projection: [MultiIndex6; 3],
    pub coefficient: Rational,
}

type Cache<V> = OnceLock<RwLock<HashMap<TauLabel, Arc<V>>>>;

fn cached<V>(cache: &'static Cache<V>, t: &TauLabel, make: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
    let lock = cache.get_or_init(Default::default);
    if let Some(v) = lock.read().expect("cache poisoned").get(t) {
        return Ok(Arc::clone(v));
    }
    let v = Arc::new(make()?);
    Ok(Arc::clone(lock.write().expect("cache poisoned").entry(*t).or_insert(v)))
}

/// Enumerated `Z`-support of `f^τ`, memoized per label.
pub fn support_points(t: &TauLabel) -> Result<Arc<Vec<SupportPoint>>> {
    static CACHE: Cache<Vec<SupportPoint>> = OnceLock::new();
    cached(&CACHE, t, || {
        let pts = z_support(t).nonnegative_points()?;
        Ok(pts
            .iter()
            .map(|p| {
                let z = ZMonomial::from_point(p);
                let coefficient = Rational::new(BigInt::from(z.sign()), z.factorial());
                SupportPoint {
                    projection: z.project(),
                    z,
                    coefficient,
                }
            })
            .collect())
    })
}

/// Collected `a, b, c` coefficients of `f^τ`, memoized per label.
fn coefficient_terms(t: &TauLabel) -> Result<Arc<Vec<Entry<MultiIndex6, Rational>>>> {
    static CACHE: Cache<Vec<Entry<MultiIndex6, Rational>>> = OnceLock::new();
    cached(&CACHE, t, || semiinvariant_terms(t))
}

fn factorial_weight(_slot: usize, e: &MultiIndex6) -> Rational {
    Rational::from_integer(e.factorial())
}

/// The four `Z`-supports together with the matching conditions on shared
/// groups.
///
/// A tuple `(x_1, …, x_4)` of support points is matched when, for every
/// group `A^k`, the two factors reading `A^k` project onto the same
/// exponent vector.
pub struct MatchingSystem {
    supports: Vec<ShiftedLattice>,
    points: [Arc<Vec<SupportPoint>>; 4],
}

/// `pr(x)`: for each group `A^k`, the exponent vectors contributed by the
/// two factors that read it.
pub type Projection = [[MultiIndex6; 2]; 6];

impl MatchingSystem {
    pub fn new(p: &SixJProblem) -> Result<Self> {
        p.validate()?;
        let supports = p.labels.iter().map(z_support).collect();
        let points = [
            support_points(&p.labels[0])?,
            support_points(&p.labels[1])?,
            support_points(&p.labels[2])?,
            support_points(&p.labels[3])?,
        ];
        Ok(MatchingSystem { supports, points })
    }

    pub fn supports(&self) -> &[ShiftedLattice] {
        &self.supports
    }

    pub fn points(&self, i: usize) -> &[SupportPoint] {
        &self.points[i]
    }

    pub fn projection(tuple: &[&ZMonomial; 4]) -> Projection {
        let mut out = [[MultiIndex6::ZERO; 2]; 6];
        let mut seen = [0usize; 6];
        for (x, groups) in tuple.iter().zip(FACTOR_GROUPS) {
            let proj = x.project();
            for (e, k) in proj.into_iter().zip(groups) {
                out[k - 1][seen[k - 1]] = e;
                seen[k - 1] += 1;
            }
        }
        out
    }

    /// Membership of `pr(x)` in the diagonal set: paired degrees equal.
    pub fn is_diagonal(pr: &Projection) -> bool {
        pr.iter().all(|[a, b]| a == b)
    }

    fn entries<V: Clone>(&self, value: impl Fn(&SupportPoint) -> V) -> [Vec<Entry<MultiIndex6, V>>; 4] {
        [0, 1, 2, 3].map(|i| self.points[i].iter().map(|s| (s.projection, value(s))).collect())
    }

    /// Number of matched tuples.
    pub fn count(&self, parallel: bool) -> u128 {
        let e = self.entries(|_| 1u128);
        join::tetrahedral([&e[0], &e[1], &e[2], &e[3]], |_, _| 1u128, parallel)
    }

    pub fn is_feasible(&self) -> bool {
        self.count(false) > 0
    }

    /// Every matched tuple, as indices into [`MatchingSystem::points`].
    ///
    /// Fails with [`Error::ScaleExceeded`] when there are more than `limit`.
    pub fn matched_tuples(&self, limit: usize) -> Result<Vec<[usize; 4]>> {
        let total = self.count(false);
        if total > limit as u128 {
            return Err(Error::ScaleExceeded {
                count: total,
                bound: limit as u128,
            });
        }
        let by = |i: usize, pos: usize| {
            let mut m: HashMap<MultiIndex6, Vec<usize>> = HashMap::new();
            for (j, s) in self.points[i].iter().enumerate() {
                m.entry(s.projection[pos]).or_default().push(j);
            }
            m
        };
        // f1 ⋈ f2 on A⁴, f3 ⋈ f4 on A⁶, then the halves on (A¹, A², A³, A⁵)
        let f2_by_a4 = by(1, 0);
        let f4_by_a6 = by(3, 1);
        let mut right: HashMap<[MultiIndex6; 4], Vec<(usize, usize)>> = HashMap::new();
        for (i3, s3) in self.points[2].iter().enumerate() {
            for &i4 in f4_by_a6.get(&s3.projection[2]).into_iter().flatten() {
                let s4 = &self.points[3][i4];
                let key = [s4.projection[0], s3.projection[0], s3.projection[1], s4.projection[2]];
                right.entry(key).or_default().push((i3, i4));
            }
        }
        let mut out = Vec::new();
        for (i1, s1) in self.points[0].iter().enumerate() {
            for &i2 in f2_by_a4.get(&s1.projection[2]).into_iter().flatten() {
                let s2 = &self.points[1][i2];
                let key = [s1.projection[0], s1.projection[1], s2.projection[1], s2.projection[2]];
                for &(i3, i4) in right.get(&key).into_iter().flatten() {
                    out.push([i1, i2, i3, i4]);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Evaluates 6j-symbols over a fixed basis, reusing expanded semiinvariants,
/// 3j numerators and norms across calls.
pub struct SixJEvaluator<'b, B: GtBasis + ?Sized> {
    basis: &'b B,
    config: SixJConfig,
    numerators: Mutex<HashMap<(TauLabel, [Weight3; 3]), Arc<Vec<Entry<u32, Rational>>>>>,
    inverse_norms: Mutex<HashMap<Weight3, Arc<Vec<Rational>>>>,
}

impl SixJEvaluator<'static, AgkzBasis> {
    pub fn agkz(config: SixJConfig) -> Self {
        static BASIS: AgkzBasis = AgkzBasis;
        SixJEvaluator::new(&BASIS, config)
    }
}

impl<'b, B: GtBasis + ?Sized> SixJEvaluator<'b, B> {
    pub fn new(basis: &'b B, config: SixJConfig) -> Self {
        SixJEvaluator {
            basis,
            config,
            numerators: Mutex::default(),
            inverse_norms: Mutex::default(),
        }
    }

    pub fn config(&self) -> &SixJConfig {
        &self.config
    }

    pub fn selection_rule(&self, p: &SixJProblem) -> Result<bool> {
        Ok(MatchingSystem::new(p)?.count(self.config.parallel) > 0)
    }

    /// `Σ_x [Π_i sign(x_i)] [Π_k e_k!] / [Π_i x_i!]` over matched tuples.
    pub fn lattice(&self, p: &SixJProblem) -> Result<Rational> {
        let system = MatchingSystem::new(p)?;
        let e = system.entries(|s| s.coefficient.clone());
        Ok(join::tetrahedral([&e[0], &e[1], &e[2], &e[3]], factorial_weight, self.config.parallel))
    }

    /// `Σ c_1 c_2 c_3 c_4 Π_k e_k!` over shared exponent vectors.
    pub fn contract(&self, p: &SixJProblem) -> Result<Rational> {
        p.validate()?;
        let terms = p
            .labels
            .iter()
            .map(coefficient_terms)
            .collect::<Result<Vec<_>>>()?;
        Ok(join::tetrahedral(
            [&terms[0], &terms[1], &terms[2], &terms[3]],
            factorial_weight,
            self.config.parallel,
        ))
    }

    /// `Σ_α Π_i ⟨f_i, F F F⟩ / Π_k |F_{α_k}|²` over pattern six-tuples.
    pub fn definition(&self, p: &SixJProblem) -> Result<Rational> {
        p.validate()?;
        let count = p.pattern_tuple_count();
        if count > self.config.max_pattern_tuples {
            return Err(Error::ScaleExceeded {
                count,
                bound: self.config.max_pattern_tuples,
            });
        }
        let triples = p.triples();
        let mut tensors = Vec::with_capacity(4);
        for (t, ws) in p.labels.iter().zip(&triples) {
            tensors.push(self.numerators(t, ws)?);
        }
        let norms = (1..=6)
            .map(|k| self.inverse_norms(p.group_weight(k)))
            .collect::<Result<Vec<_>>>()?;
        let weight = |slot: usize, i: &u32| norms[slot][*i as usize].clone();
        Ok(join::tetrahedral(
            [&tensors[0], &tensors[1], &tensors[2], &tensors[3]],
            weight,
            self.config.parallel,
        ))
    }

    pub fn evaluate(&self, p: &SixJProblem, method: SixJMethod) -> Result<Rational> {
        match method {
            SixJMethod::Lattice => self.lattice(p),
            SixJMethod::Contract => self.contract(p),
            SixJMethod::Definition => self.definition(p),
        }
    }

    /// Evaluates many problems, in parallel when configured.
    pub fn evaluate_batch(&self, problems: &[SixJProblem], method: SixJMethod) -> Vec<Result<Rational>> {
        if self.config.parallel {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                return problems.par_iter().map(|p| self.evaluate(p, method)).collect();
            }
        }
        problems.iter().map(|p| self.evaluate(p, method)).collect()
    }

    fn numerators(&self, t: &TauLabel, ws: &[Weight3; 3]) -> Result<Arc<Vec<Entry<u32, Rational>>>> {
        let key = (*t, *ws);
        if let Some(v) = self.numerators.lock().expect("cache poisoned").get(&key) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(numerator_tensor(t, ws, self.basis)?);
        self.numerators
            .lock()
            .expect("cache poisoned")
            .insert(key, Arc::clone(&v));
        Ok(v)
    }

    fn inverse_norms(&self, w: Weight3) -> Result<Arc<Vec<Rational>>> {
        if let Some(v) = self.inverse_norms.lock().expect("cache poisoned").get(&w) {
            return Ok(Arc::clone(v));
        }
        let mut norms = Vec::new();
        for pat in enumerate_patterns(w) {
            let f = self.basis.vector(&pat)?;
            norms.push(Rational::one() / f.pairing(&f)?);
        }
        let v = Arc::new(norms);
        self.inverse_norms
            .lock()
            .expect("cache poisoned")
            .insert(w, Arc::clone(&v));
        Ok(v)
    }
}

fn default_evaluator() -> &'static SixJEvaluator<'static, AgkzBasis> {
    static EVAL: OnceLock<SixJEvaluator<'static, AgkzBasis>> = OnceLock::new();
    EVAL.get_or_init(|| SixJEvaluator::agkz(SixJConfig::default()))
}

/// Whether at least one matched tuple exists; `false` forces the 6j-symbol
/// to vanish.
pub fn selection_rule(p: &SixJProblem) -> Result<bool> {
    default_evaluator().selection_rule(p)
}

pub fn sixj_lattice(p: &SixJProblem) -> Result<Rational> {
    default_evaluator().lattice(p)
}

pub fn sixj_contract(p: &SixJProblem) -> Result<Rational> {
    default_evaluator().contract(p)
}

pub fn sixj_by_definition(p: &SixJProblem) -> Result<Rational> {
    default_evaluator().definition(p)
}

/// Every admissible problem whose weights are among `weights`, with labels
/// drawn from the restricted multiplicity bases.
pub fn admissible_problems(weights: &[Weight3]) -> Vec<SixJProblem> {
    let mut tau_cache: HashMap<[Weight3; 3], Vec<TauLabel>> = HashMap::new();
    let mut taus = |ws: [Weight3; 3]| -> Vec<TauLabel> {
        tau_cache
            .entry(ws)
            .or_insert_with(|| crate::invariants::enumerate_tau(ws[0], ws[1], ws[2]))
            .clone()
    };
    let mut out = Vec::new();
    for &v1 in weights {
        for &v2 in weights {
            for &u in weights {
                let t1 = taus([v1, v2, u]);
                if t1.is_empty() {
                    continue;
                }
                for &v3 in weights {
                    for &w in weights {
                        let t2 = taus([u, v3, w]);
                        if t2.is_empty() {
                            continue;
                        }
                        for &h in weights {
                            let t3 = taus([v2, v3, h]);
                            let t4 = taus([v1, h, w]);
                            for &a in &t1 {
                                for &b in &t2 {
                                    for &c in &t3 {
                                        for &d in &t4 {
                                            out.push(SixJProblem {
                                                weights: [v1, v2, u, v3, w, h],
                                                labels: [a, b, c, d],
                                            });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
