use std::fmt;

use crate::ordfield::RationalFunction;

use super::cut::{Cut, Order, Side};
use super::SetError;

/// How an interval bound relates to its value `v`.
///
/// For a lower bound: `Closed` is `x ≥ v`, `Open` is `x > v` and `Rough(0)`
/// is `x > v or x ≈ v`. `Rough(k)` widens "≈" to "differs by something of
/// valuation above `k`", the scale reached when a monad is multiplied by an
/// element of valuation `k`. Upper bounds mirror this.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BoundKind {
    Closed,
    Open,
    Rough(i64),
}

impl BoundKind {
    pub const ROUGH: BoundKind = BoundKind::Rough(0);

    fn lower_cut(self, v: RationalFunction) -> Cut {
        match self {
            BoundKind::Closed => Cut::before(v),
            BoundKind::Open => Cut::after(v),
            BoundKind::Rough(k) => Cut::new(v, Order::Finite(k), Side::Below),
        }
    }

    fn upper_cut(self, v: RationalFunction) -> Cut {
        match self {
            BoundKind::Closed => Cut::after(v),
            BoundKind::Open => Cut::before(v),
            BoundKind::Rough(k) => Cut::new(v, Order::Finite(k), Side::Above),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Closed => write!(f, "closed"),
            BoundKind::Open => write!(f, "open"),
            BoundKind::Rough(0) => write!(f, "rough"),
            BoundKind::Rough(k) => write!(f, "rough({k})"),
        }
    }
}

/// A nonempty convex subset of ℚ(X) bounded by two cuts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenInterval {
    lo: Cut,
    hi: Cut,
}

impl GenInterval {
    pub fn new(
        lo_value: RationalFunction,
        lo_kind: BoundKind,
        hi_value: RationalFunction,
        hi_kind: BoundKind,
    ) -> Result<GenInterval, SetError> {
        let lo = lo_kind.lower_cut(lo_value.clone());
        let hi = hi_kind.upper_cut(hi_value.clone());
        if lo < hi {
            Ok(GenInterval { lo, hi })
        } else {
            Err(SetError::EmptyInterval {
                lo: format!("{lo_kind}:{lo_value}"),
                hi: format!("{hi_value}:{hi_kind}"),
            })
        }
    }

    pub fn point(v: RationalFunction) -> GenInterval {
        GenInterval {
            lo: Cut::before(v.clone()),
            hi: Cut::after(v),
        }
    }

    /// Interval between two cuts, or `None` when nothing lies between them.
    pub(crate) fn from_cuts(lo: Cut, hi: Cut) -> Option<GenInterval> {
        if lo < hi {
            debug_assert!(lo.order() == Order::Point || lo.side() == Side::Below);
            debug_assert!(hi.order() == Order::Point || hi.side() == Side::Above);
            Some(GenInterval { lo, hi })
        } else {
            None
        }
    }

    pub(crate) fn lo(&self) -> &Cut {
        &self.lo
    }

    pub(crate) fn hi(&self) -> &Cut {
        &self.hi
    }

    pub fn lo_value(&self) -> &RationalFunction {
        self.lo.center()
    }

    pub fn hi_value(&self) -> &RationalFunction {
        self.hi.center()
    }

    pub fn lo_kind(&self) -> BoundKind {
        match (self.lo.order(), self.lo.side()) {
            (Order::Point, Side::Below) => BoundKind::Closed,
            (Order::Point, Side::Above) => BoundKind::Open,
            (Order::Finite(k), _) => BoundKind::Rough(k),
        }
    }

    pub fn hi_kind(&self) -> BoundKind {
        match (self.hi.order(), self.hi.side()) {
            (Order::Point, Side::Above) => BoundKind::Closed,
            (Order::Point, Side::Below) => BoundKind::Open,
            (Order::Finite(k), _) => BoundKind::Rough(k),
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo.order() == Order::Point
            && self.hi.order() == Order::Point
            && self.lo.side() == Side::Below
            && self.hi.side() == Side::Above
            && self.lo.center() == self.hi.center()
    }

    pub fn contains(&self, x: &RationalFunction) -> bool {
        self.lo.below(x) && !self.hi.below(x)
    }

    pub fn is_subset_of(&self, other: &GenInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &GenInterval) -> Option<GenInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        GenInterval::from_cuts(lo, hi)
    }

    pub(crate) fn negate(&self) -> GenInterval {
        GenInterval {
            lo: self.hi.negate(),
            hi: self.lo.negate(),
        }
    }

    pub(crate) fn translate(&self, t: &RationalFunction) -> GenInterval {
        GenInterval {
            lo: self.lo.translate(t),
            hi: self.hi.translate(t),
        }
    }

    /// The part of the interval strictly above zero.
    pub(crate) fn positive_part(&self) -> Option<GenInterval> {
        let lo = self.lo.clone().max(Cut::after(RationalFunction::zero()));
        GenInterval::from_cuts(lo, self.hi.clone())
    }

    pub(crate) fn negative_part(&self) -> Option<GenInterval> {
        let hi = self.hi.clone().min(Cut::before(RationalFunction::zero()));
        GenInterval::from_cuts(self.lo.clone(), hi)
    }

    /// Some member of the interval.
    pub fn witness(&self) -> RationalFunction {
        let mut candidates = vec![self.lo.center().clone(), self.hi.center().clone()];
        let mid = (self.lo.center() + self.hi.center()) * RationalFunction::from_ratio(1, 2);
        candidates.push(mid);
        for cut in [&self.lo, &self.hi] {
            let depth = match cut.order() {
                Order::Finite(k) => (k + 1).max(1),
                Order::Point => 1,
            };
            for extra in 0..4 {
                let step = small(depth + extra);
                candidates.push(cut.center() + &step);
                candidates.push(cut.center() - &step);
            }
        }
        candidates
            .into_iter()
            .find(|c| self.contains(c))
            .expect("every nonempty interval has a member among its candidates")
    }
}

/// `X^-n` for any integer `n`.
pub(crate) fn small(n: i64) -> RationalFunction {
    if n >= 0 {
        RationalFunction::inv_x_pow(n as u32)
    } else {
        RationalFunction::x().pow(-n).unwrap()
    }
}
