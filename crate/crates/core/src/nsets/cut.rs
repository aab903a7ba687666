//! Cuts of ℚ(X): the positions an interval bound can occupy.
//!
//! Every bound used by the set calculus sits just below or just above a
//! *ball* `c + B_k`, where `B_k = {x : valuation(x) > k}`. `B_0` is the set
//! of infinitesimals, so `c + B_0` is the monad of `c`; the degenerate ball
//! `{c}` (order [`Order::Point`]) gives ordinary closed and open bounds.
//! Balls either nest or are disjoint, which makes cuts totally ordered.

use std::cmp::Ordering;

use crate::ordfield::RationalFunction;

/// Radius of a ball, as the valuation threshold `k` of `B_k`. Larger means
/// smaller ball; `Point` is the single-point ball.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Order {
    Finite(i64),
    Point,
}

impl Order {
    fn shifted(self, by: i64) -> Order {
        match self {
            Order::Finite(k) => Order::Finite(k + by),
            Order::Point => Order::Point,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    Below,
    Above,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Below => Side::Above,
            Side::Above => Side::Below,
        }
    }
}

/// A ball `center + B_order` with a canonical center.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ball {
    center: RationalFunction,
    order: Order,
}

impl Ball {
    pub fn new(center: RationalFunction, order: Order) -> Ball {
        let center = match order {
            Order::Finite(k) => center.truncate(k),
            Order::Point => center,
        };
        Ball { center, order }
    }

    pub fn point(c: RationalFunction) -> Ball {
        Ball {
            center: c,
            order: Order::Point,
        }
    }

    pub fn center(&self) -> &RationalFunction {
        &self.center
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn contains(&self, x: &RationalFunction) -> bool {
        match self.order {
            Order::Point => &self.center == x,
            Order::Finite(k) => self.center.valuation_of_difference(x).is_none_or(|v| v > k),
        }
    }

    /// True when the two balls share a point (and hence one contains the other).
    fn meets(&self, other: &Ball) -> bool {
        if self.center == other.center {
            return true;
        }
        match self.order.min(other.order) {
            Order::Point => false,
            Order::Finite(k) => self
                .center
                .valuation_of_difference(&other.center)
                .is_none_or(|v| v > k),
        }
    }
}

/// The cut immediately below or above a ball.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cut {
    ball: Ball,
    side: Side,
}

impl Cut {
    pub fn new(center: RationalFunction, order: Order, side: Side) -> Cut {
        Cut {
            ball: Ball::new(center, order),
            side,
        }
    }

    /// Just below `c`: the lower cut of `[c, ...`.
    pub fn before(c: RationalFunction) -> Cut {
        Cut {
            ball: Ball::point(c),
            side: Side::Below,
        }
    }

    /// Just above `c`.
    pub fn after(c: RationalFunction) -> Cut {
        Cut {
            ball: Ball::point(c),
            side: Side::Above,
        }
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    pub fn center(&self) -> &RationalFunction {
        &self.ball.center
    }

    pub fn order(&self) -> Order {
        self.ball.order
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// True when `x` lies above this cut.
    pub fn below(&self, x: &RationalFunction) -> bool {
        if self.ball.contains(x) {
            self.side == Side::Below
        } else {
            x > &self.ball.center
        }
    }

    /// The mirror image under `x ↦ -x`.
    pub fn negate(&self) -> Cut {
        Cut {
            ball: Ball::new(-&self.ball.center, self.ball.order),
            side: self.side.flip(),
        }
    }

    /// Image under `x ↦ x + t`.
    pub fn translate(&self, t: &RationalFunction) -> Cut {
        Cut::new(&self.ball.center + t, self.ball.order, self.side)
    }

    /// Image under `x ↦ c·x` for `c ≠ 0`.
    pub fn scale(&self, c: &RationalFunction) -> Cut {
        let v = c.valuation().expect("scaling a cut by zero");
        let side = if c.signum() < 0 { self.side.flip() } else { self.side };
        Cut::new(&self.ball.center * c, self.ball.order.shifted(v), side)
    }

    /// True when the ball is centred at zero with finite radius.
    pub(crate) fn is_zero_ball(&self) -> bool {
        self.ball.center.is_zero() && self.ball.order != Order::Point
    }
}

impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.ball.meets(&other.ball) {
            match self.ball.order.cmp(&other.ball.order) {
                Ordering::Equal => self.side.cmp(&other.side),
                // Our ball strictly contains the other one.
                Ordering::Less => match self.side {
                    Side::Below => Ordering::Less,
                    Side::Above => Ordering::Greater,
                },
                Ordering::Greater => match other.side {
                    Side::Below => Ordering::Greater,
                    Side::Above => Ordering::Less,
                },
            }
        } else {
            self.ball.center.cmp(&other.ball.center)
        }
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which side wins when two perturbations of equal size combine.
///
/// For a lower cut the exclusive side is `Above` (the set starts above the
/// ball); for an upper cut it is `Below`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Role {
    Lower,
    Upper,
}

impl Role {
    fn exclusive(self) -> Side {
        match self {
            Role::Lower => Side::Above,
            Role::Upper => Side::Below,
        }
    }
}

fn combine(k1: Order, s1: Side, k2: Order, s2: Side, role: Role) -> (Order, Side) {
    match k1.cmp(&k2) {
        Ordering::Less => (k1, s1),
        Ordering::Greater => (k2, s2),
        Ordering::Equal => {
            let excl = role.exclusive();
            let side = if s1 == excl || s2 == excl { excl } else { excl.flip() };
            (k1, side)
        }
    }
}

/// Bound of `{x + y}` from bounds of the summands (both lower or both upper).
pub(crate) fn add_cuts(a: &Cut, b: &Cut, role: Role) -> Cut {
    let (order, side) = combine(a.order(), a.side, b.order(), b.side, role);
    Cut::new(a.center() + b.center(), order, side)
}

/// Bound of `{x·y}` for sets of positive elements, from the corresponding
/// bounds of the factors.
///
/// Lower bounds are either `after(0)` or sit at a ball of positive elements;
/// upper bounds are either the top of a ball around zero or sit at a ball of
/// positive elements.
pub(crate) fn mul_positive_cuts(a: &Cut, b: &Cut, role: Role) -> Cut {
    let zero = RationalFunction::zero();
    match role {
        Role::Lower => {
            let after_zero = Cut::after(zero.clone());
            if *a == after_zero || *b == after_zero {
                return after_zero;
            }
        }
        Role::Upper => match (a.is_zero_ball(), b.is_zero_ball()) {
            (true, true) => {
                let (Order::Finite(k1), Order::Finite(k2)) = (a.order(), b.order()) else {
                    unreachable!()
                };
                return Cut::new(zero, Order::Finite(k1 + k2 + 1), Side::Above);
            }
            (true, false) | (false, true) => {
                let (z, r) = if a.is_zero_ball() { (a, b) } else { (b, a) };
                let Order::Finite(k) = z.order() else { unreachable!() };
                let v = r.center().valuation().expect("positive bound at zero");
                return Cut::new(zero, Order::Finite(k + v), Side::Above);
            }
            (false, false) => {}
        },
    }
    debug_assert!(a.center().signum() > 0 && b.center().signum() > 0);
    let va = a.center().valuation().unwrap();
    let vb = b.center().valuation().unwrap();
    // x·y - ab = a·δy + b·δx + δx·δy; the last term never dominates.
    let (order, side) = combine(b.order().shifted(va), b.side, a.order().shifted(vb), a.side, role);
    Cut::new(a.center() * b.center(), order, side)
}
