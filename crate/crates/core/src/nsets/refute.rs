//! Constructive proof that a monad has neither an infimum nor a supremum.
//!
//! Given a candidate bound `L` for `monad(a)`, either some member lies beyond
//! `L` (so `L` is not a bound at all) or a strictly better bound exists (so
//! `L` is not the best one).

use std::fmt;

use crate::ordfield::RationalFunction;

use super::cut::{Order, Side};
use super::nset::NSet;
use super::SetError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Extremum {
    Infimum,
    Supremum,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RefutationResult {
    /// A member of the set strictly beyond the candidate.
    Witness(RationalFunction),
    /// A bound strictly better than the candidate.
    BetterBound(RationalFunction),
}

impl fmt::Display for RefutationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefutationResult::Witness(w) => write!(f, "Witness({})", w.display_expanded()),
            RefutationResult::BetterBound(b) => write!(f, "BetterBound({})", b.display_expanded()),
        }
    }
}

/// The center `a` when `s` is exactly `monad(a)`.
pub fn monad_center(s: &NSet) -> Option<&RationalFunction> {
    let [iv] = s.intervals() else { return None };
    let (lo, hi) = (iv.lo(), iv.hi());
    let is_monad = lo.order() == Order::Finite(0)
        && hi.order() == Order::Finite(0)
        && lo.side() == Side::Below
        && hi.side() == Side::Above
        && lo.center() == hi.center();
    is_monad.then(|| lo.center())
}

fn check_eps(eps: &RationalFunction) -> Result<(), SetError> {
    if eps.signum() > 0 && eps.is_infinitesimal() {
        Ok(())
    } else {
        Err(SetError::NotPositiveInfinitesimal(eps.to_string()))
    }
}

pub fn refute_infimum(
    s: &NSet,
    candidate: &RationalFunction,
    eps: &RationalFunction,
) -> Result<RefutationResult, SetError> {
    refute(s, candidate, eps, Extremum::Infimum)
}

pub fn refute_supremum(
    s: &NSet,
    candidate: &RationalFunction,
    eps: &RationalFunction,
) -> Result<RefutationResult, SetError> {
    refute(s, candidate, eps, Extremum::Supremum)
}

pub fn refute(
    s: &NSet,
    candidate: &RationalFunction,
    eps: &RationalFunction,
    mode: Extremum,
) -> Result<RefutationResult, SetError> {
    check_eps(eps)?;
    let a = monad_center(s).ok_or(SetError::NotAMonad)?;
    // Work with the infimum; the supremum case is its mirror under x ↦ -x.
    let (a, l) = match mode {
        Extremum::Infimum => (a.clone(), candidate.clone()),
        Extremum::Supremum => (-a, -candidate),
    };
    let two = RationalFunction::from_int(2);
    let result = if l.infinitely_close(&a) {
        // l itself is a member with l ≤ l + eps, and so is l - 2·eps.
        RefutationResult::Witness(&l - &(&two * eps))
    } else if l > a {
        RefutationResult::Witness(a)
    } else {
        let half = RationalFunction::from_ratio(1, 2);
        RefutationResult::BetterBound(&l + &(&(&a - &l) * &half))
    };
    Ok(match (mode, result) {
        (Extremum::Infimum, r) => r,
        (Extremum::Supremum, RefutationResult::Witness(w)) => RefutationResult::Witness(-w),
        (Extremum::Supremum, RefutationResult::BetterBound(b)) => RefutationResult::BetterBound(-b),
    })
}

/// Re-checks a refutation from membership and comparisons alone.
pub fn verify_refutation(
    s: &NSet,
    candidate: &RationalFunction,
    mode: Extremum,
    result: &RefutationResult,
) -> bool {
    let beyond = |x: &RationalFunction, y: &RationalFunction| match mode {
        Extremum::Infimum => x < y,
        Extremum::Supremum => x > y,
    };
    match result {
        RefutationResult::Witness(w) => s.contains(w) && beyond(w, candidate),
        RefutationResult::BetterBound(b) => {
            // A bound strictly past the candidate that no member of a monad crosses:
            // it must be appreciably beyond the center.
            let Some(a) = monad_center(s) else { return false };
            beyond(candidate, b) && beyond(b, a) && !b.infinitely_close(a) && !s.contains(b)
        }
    }
}
