//! Random geometric types and random admissible codes, for tests and demos.

use rand::rngs::SmallRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::boundary::{BoundaryLabel, Flavor};
use crate::code::{BiCode, Direction, OneSidedCode, Symbol};
use crate::geometric_type::GeometricType;
use crate::shift_space::Subshift;

/// A uniformly shaped random valid type with `n ≤ max_n` and `h_i, v_i ≤ max_hv`.
pub fn random_type<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_hv: usize) -> GeometricType {
    assert!(max_n >= 1 && max_hv >= 1);
    let n = rng.gen_range(1..=max_n);
    let h: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_hv)).collect();
    let alpha: usize = h.iter().sum();

    // spread alpha over the v_i, each within 1..=max_hv
    let mut v = vec![1usize; n];
    for _ in 0..alpha - n {
        let open: Vec<usize> = (0..n).filter(|&k| v[k] < max_hv).collect();
        v[*open.choose(rng).expect("alpha ≤ n·max_hv")] += 1;
    }

    let mut targets: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (1..=v[k]).map(move |l| (k + 1, l)))
        .collect();
    targets.shuffle(rng);
    let eps: Vec<i64> = (0..alpha)
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    let hv = h.into_iter().zip(v).collect();
    GeometricType::from_tables(hv, targets, eps).expect("random tables are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    /// Random left and right tails; usually totally interior.
    Generic,
    /// Right tail is a stable boundary code.
    SLeaf,
    /// Left tail is an unstable boundary code.
    ULeaf,
    /// Both tails are boundary codes.
    Corner,
}

/// A random walk `x0, x1, …` that continues for at least `min_len` steps and stops on the
/// first repeat after that; returns the walk split into (transient, period).
fn walk<R: Rng + ?Sized>(
    rng: &mut R,
    start: Symbol,
    min_len: usize,
    step: impl Fn(Symbol) -> Vec<Symbol>,
) -> (Vec<Symbol>, Vec<Symbol>) {
    let mut seq = vec![start];
    loop {
        let cur = *seq.last().unwrap();
        let next = *step(cur)
            .choose(rng)
            .expect("every rectangle has a successor and a predecessor");
        if seq.len() > min_len {
            if let Some(pos) = seq[min_len..].iter().position(|&s| s == next) {
                let cut = min_len + pos;
                let period = seq.split_off(cut);
                return (seq, period);
            }
        }
        seq.push(next);
    }
}

impl Subshift {
    fn successors(&self, a: Symbol) -> Vec<Symbol> {
        (1..=self.matrix().n())
            .filter(|&b| self.matrix().allows(a, b))
            .collect()
    }

    fn predecessors(&self, b: Symbol) -> Vec<Symbol> {
        (1..=self.matrix().n())
            .filter(|&a| self.matrix().allows(a, b))
            .collect()
    }

    /// Random positive code starting after `from` (i.e. its first symbol follows `from`).
    fn random_positive<R: Rng + ?Sized>(&self, rng: &mut R, from: Symbol) -> OneSidedCode {
        let first = *self.successors(from).choose(rng).unwrap();
        let min_len = rng.gen_range(0..=4);
        let (t, p) = walk(rng, first, min_len, |s| self.successors(s));
        OneSidedCode::new(t, p, Direction::Positive).expect("nonempty period")
    }

    /// Random negative code ending before `to`.
    fn random_negative<R: Rng + ?Sized>(&self, rng: &mut R, to: Symbol) -> OneSidedCode {
        let first = *self.predecessors(to).choose(rng).unwrap();
        let min_len = rng.gen_range(0..=4);
        let (t, p) = walk(rng, first, min_len, |s| self.predecessors(s));
        OneSidedCode::new(t, p, Direction::Negative).expect("nonempty period")
    }

    /// A random admissible eventually periodic code of the given kind, randomly re-anchored.
    pub fn random_code<R: Rng + ?Sized>(&self, rng: &mut R, kind: CodeKind) -> BiCode {
        let n = self.matrix().n();
        let s_label = |rng: &mut R| {
            let l: Vec<BoundaryLabel> = BoundaryLabel::all(n, Flavor::S).collect();
            *l.choose(rng).unwrap()
        };
        let u_label = |rng: &mut R| {
            let l: Vec<BoundaryLabel> = BoundaryLabel::all(n, Flavor::U).collect();
            *l.choose(rng).unwrap()
        };
        let (neg, pos) = match kind {
            CodeKind::Generic => {
                let x0 = rng.gen_range(1..=n);
                let neg = self.random_negative(rng, x0);
                let mut t = vec![x0];
                let pos = self.random_positive(rng, x0);
                t.extend_from_slice(pos.transient());
                (
                    neg,
                    OneSidedCode::new(t, pos.period().to_vec(), Direction::Positive).unwrap(),
                )
            }
            CodeKind::SLeaf => {
                let pos = self.codes().code_of(s_label(rng)).clone();
                (self.random_negative(rng, pos.symbol(0)), pos)
            }
            CodeKind::ULeaf => {
                let neg = self.codes().code_of(u_label(rng)).clone();
                (neg.clone(), self.random_positive(rng, neg.symbol(0)))
            }
            CodeKind::Corner => {
                let mut pairs = Vec::new();
                for a in BoundaryLabel::all(n, Flavor::U) {
                    for b in BoundaryLabel::all(n, Flavor::S) {
                        let (neg, pos) = (self.codes().code_of(a), self.codes().code_of(b));
                        if self.matrix().allows(neg.symbol(0), pos.symbol(0)) {
                            pairs.push((neg.clone(), pos.clone()));
                        }
                    }
                }
                match pairs.choose(rng) {
                    Some(p) => p.clone(),
                    None => return self.random_code(rng, CodeKind::SLeaf),
                }
            }
        };
        let w = BiCode::from_halves(&neg, &pos, -1).expect("directions match");
        w.shift(rng.gen_range(-3..=3))
    }
}

/// Seeded source of random types and codes.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SmallRng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SmallRng::seed_from_u64(seed),
        }
    }

    pub fn geometric_type(&mut self, max_n: usize, max_hv: usize) -> GeometricType {
        random_type(&mut self.rng, max_n, max_hv)
    }

    pub fn code(&mut self, sub: &Subshift, kind: CodeKind) -> BiCode {
        sub.random_code(&mut self.rng, kind)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}
