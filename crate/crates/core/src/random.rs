//! Seeded generators for property runs.
//!
//! Every run is keyed by `(seed, index)`: iteration `index` draws from its own
//! ChaCha stream, so results do not depend on how iterations are scheduled.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::nlogic::{Formula, NValue};
use crate::nsets::{unit_interval, BoundKind, GenInterval, NSet};
use crate::ordfield::RationalFunction;

pub type Stream = ChaCha8Rng;

pub fn stream(seed: u64, index: u64) -> Stream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn ratio<R: Rng>(rng: &mut R, num: std::ops::RangeInclusive<i64>, max_den: i64) -> RationalFunction {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(num.start() * d..=num.end() * d);
    RationalFunction::from_ratio(n, d)
}

/// `p + q/X` with `p` in `[lo, hi]` and small `p`, `q`.
pub fn bound_value<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> RationalFunction {
    let p = ratio(rng, lo..=hi, 4);
    if rng.gen_bool(0.5) {
        return p;
    }
    let q = ratio(rng, -2..=2, 2);
    &p + &(&q * &RationalFunction::inv_x_pow(1))
}

pub fn bound_kind<R: Rng>(rng: &mut R) -> BoundKind {
    [BoundKind::Closed, BoundKind::Open, BoundKind::ROUGH][rng.gen_range(0..3)]
}

/// A random interval with standard parts in `[lo, hi]`; about one in five is a point.
pub fn interval<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> GenInterval {
    loop {
        let a = bound_value(rng, lo, hi);
        if rng.gen_bool(0.2) {
            return GenInterval::point(a);
        }
        let b = bound_value(rng, lo, hi);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if let Ok(iv) = GenInterval::new(a, bound_kind(rng), b, bound_kind(rng)) {
            return iv;
        }
    }
}

/// 1 to 3 random intervals with standard parts in `[lo, hi]`.
pub fn nset<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> NSet {
    let n = rng.gen_range(1..=3);
    (0..n).map(|_| interval(rng, lo, hi)).collect()
}

/// A nonempty random subset of the unit interval.
pub fn unit_nset<R: Rng>(rng: &mut R) -> NSet {
    let unit = unit_interval();
    loop {
        let s = nset(rng, 0, 1).intersection(&unit);
        if !s.is_empty() {
            return s;
        }
    }
}

/// 1 to 3 points drawn from a small grid of standard truth degrees.
pub fn finite_unit_set<R: Rng>(rng: &mut R) -> NSet {
    const GRID: [(i64, i64); 7] = [(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)];
    let n = rng.gen_range(1..=3);
    NSet::finite((0..n).map(|_| {
        let &(p, q) = GRID.choose(rng).unwrap();
        RationalFunction::from_ratio(p, q)
    }))
}

/// A truth-value set: a finite set or a union of intervals, equally often.
pub fn truth_set<R: Rng>(rng: &mut R) -> NSet {
    if rng.gen_bool(0.5) {
        finite_unit_set(rng)
    } else {
        unit_nset(rng)
    }
}

pub fn nvalue<R: Rng>(rng: &mut R) -> NValue {
    NValue::new(truth_set(rng), truth_set(rng), truth_set(rng))
}

/// A single point or a single interval inside the unit interval. Every
/// connective maps such sets to sets of the same shape, so values built from
/// them stay small under deep nesting.
pub fn connected_truth_set<R: Rng>(rng: &mut R) -> NSet {
    let unit = unit_interval();
    loop {
        let s = NSet::interval(interval(rng, 0, 1)).intersection(&unit);
        if !s.is_empty() {
            return s;
        }
    }
}

pub fn connected_nvalue<R: Rng>(rng: &mut R) -> NValue {
    NValue::new(connected_truth_set(rng), connected_truth_set(rng), connected_truth_set(rng))
}

/// A random formula of depth at most `depth` over the given atoms.
pub fn formula<R: Rng>(rng: &mut R, depth: usize, atoms: &[&str]) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return Formula::atom(*atoms.choose(rng).unwrap());
    }
    match rng.gen_range(0..4) {
        0 => Formula::not(formula(rng, depth - 1, atoms)),
        1 => Formula::and(formula(rng, depth - 1, atoms), formula(rng, depth - 1, atoms)),
        2 => Formula::or(formula(rng, depth - 1, atoms), formula(rng, depth - 1, atoms)),
        _ => Formula::implies(formula(rng, depth - 1, atoms), formula(rng, depth - 1, atoms)),
    }
}
