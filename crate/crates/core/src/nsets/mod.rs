//! Truth-value sets: finite unions of intervals of ℚ(X) whose bounds may sit
//! at monads, together with the set operators of the logic.

mod cut;
mod display;
mod interval;
mod nset;
mod ops;
mod probe;
mod refute;

use thiserror::Error;

use crate::ordfield::RationalFunction;

pub use cut::{Cut, Order, Side};
pub use interval::{BoundKind, GenInterval};
pub use nset::{left_monad, monad, one_plus, right_monad, unit_interval, unit_interval_def1, NSet};
pub use ops::{
    elem_add, elem_mul, elem_neg, elem_sub, image_h, image_multilinear, obslash, obslash_prime, ovee,
    ovee_prime, owedge, translate, MultiAffineMap,
};
pub use probe::{member_probes, probe_points};
pub use refute::{monad_center, refute, refute_infimum, refute_supremum, verify_refutation, Extremum, RefutationResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("empty interval between {lo} and {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("set is not a two-sided monad")]
    NotAMonad,
    #[error("{0} is not a positive infinitesimal")]
    NotPositiveInfinitesimal(String),
}

pub fn contains(s: &NSet, x: &RationalFunction) -> bool {
    s.contains(x)
}

pub fn union(a: &NSet, b: &NSet) -> NSet {
    a.union(b)
}

pub fn is_subset(a: &NSet, b: &NSet) -> bool {
    a.is_subset(b)
}

pub fn set_eq(a: &NSet, b: &NSet) -> bool {
    a.set_eq(b)
}

pub fn normalize(raw: Vec<GenInterval>) -> NSet {
    NSet::normalize(raw)
}

/// Replaces whatever lies appreciably below the unit interval by `⁻0` and
/// whatever lies appreciably above it by `1⁺`; the rest is kept.
pub fn clamp_to_unit(s: &NSet) -> NSet {
    let zero = RationalFunction::zero();
    let one = RationalFunction::one();
    let floor = Cut::new(zero.clone(), Order::Finite(0), Side::Below);
    let ceil = Cut::new(one.clone(), Order::Finite(0), Side::Above);
    let mut out = s.intersection(&unit_interval());
    if s.intervals().iter().any(|iv| iv.lo() < &floor) {
        out = out.union(&left_monad(&zero));
    }
    if s.intervals().iter().any(|iv| iv.hi() > &ceil) {
        out = out.union(&right_monad(&one));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_ratio(n, d)
    }

    #[test]
    fn clamp_examples() {
        let s = NSet::finite([rf(0, 1), rf(1, 1), rf(2, 1)]);
        let expected = NSet::finite([rf(0, 1), rf(1, 1)]).union(&right_monad(&rf(1, 1)));
        assert_eq!(clamp_to_unit(&s), expected);
        assert_eq!(clamp_to_unit(&unit_interval()), unit_interval());
        assert_eq!(clamp_to_unit(&NSet::point(rf(-1, 1))), left_monad(&rf(0, 1)));
    }

    #[test]
    fn clamp_keeps_in_range_part_of_a_straddling_interval() {
        let iv = GenInterval::new(rf(1, 2), BoundKind::Closed, rf(3, 2), BoundKind::Open).unwrap();
        let c = clamp_to_unit(&NSet::interval(iv));
        let expected = GenInterval::new(rf(1, 2), BoundKind::Closed, rf(1, 1), BoundKind::ROUGH).unwrap();
        assert_eq!(c, NSet::interval(expected));
    }
}
