use std::fmt;

use super::cut::{Order, Side};
use super::interval::GenInterval;
use super::nset::{unit_interval, NSet};

enum Shape<'a> {
    Point,
    Monad,
    Left,
    Right,
    General(&'a GenInterval),
}

fn shape(iv: &GenInterval) -> Shape<'_> {
    if iv.is_point() {
        return Shape::Point;
    }
    let (lo, hi) = (iv.lo(), iv.hi());
    if lo.center() != hi.center() {
        return Shape::General(iv);
    }
    let monad_lo = lo.order() == Order::Finite(0) && lo.side() == Side::Below;
    let monad_hi = hi.order() == Order::Finite(0) && hi.side() == Side::Above;
    let at_center_lo = lo.order() == Order::Point && lo.side() == Side::Above;
    let at_center_hi = hi.order() == Order::Point && hi.side() == Side::Below;
    match (monad_lo, monad_hi, at_center_lo, at_center_hi) {
        (true, true, _, _) => Shape::Monad,
        (true, _, _, true) => Shape::Left,
        (_, true, true, _) => Shape::Right,
        _ => Shape::General(iv),
    }
}

/// Canonical text: `{}` for the empty set, `unit`, otherwise the intervals in
/// ascending order joined by ` u `, with runs of points grouped as `{a, b}`.
impl fmt::Display for NSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        if *self == unit_interval() {
            return write!(f, "unit");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut points: Vec<String> = Vec::new();
        let flush = |points: &mut Vec<String>, parts: &mut Vec<String>| {
            if !points.is_empty() {
                parts.push(format!("{{{}}}", points.join(", ")));
                points.clear();
            }
        };
        for iv in self.intervals() {
            let v = iv.lo_value();
            let text = match shape(iv) {
                Shape::Point => {
                    points.push(v.to_string());
                    continue;
                }
                Shape::Monad => format!("mon({v})"),
                Shape::Left => format!("left({v})"),
                Shape::Right => format!("right({v})"),
                Shape::General(iv) => format!(
                    "iv({}:{}, {}:{})",
                    iv.lo_kind(),
                    iv.lo_value(),
                    iv.hi_value(),
                    iv.hi_kind()
                ),
            };
            flush(&mut points, &mut parts);
            parts.push(text);
        }
        flush(&mut points, &mut parts);
        write!(f, "{}", parts.join(" u "))
    }
}

#[cfg(test)]
mod tests {
    use crate::nsets::*;
    use crate::ordfield::RationalFunction;

    fn rf(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_ratio(n, d)
    }

    #[test]
    fn named_forms() {
        assert_eq!(NSet::empty().to_string(), "{}");
        assert_eq!(unit_interval().to_string(), "unit");
        assert_eq!(one_plus().to_string(), "right(1)");
        assert_eq!(left_monad(&rf(0, 1)).to_string(), "left(0)");
        assert_eq!(monad(&rf(1, 2)).to_string(), "mon(1/2)");
    }

    #[test]
    fn points_and_intervals() {
        let s = NSet::finite([rf(1, 1), rf(0, 1)]).union(&right_monad(&rf(1, 1)));
        assert_eq!(s.to_string(), "{0} u iv(closed:1, 1:rough)");
        let t = NSet::finite([rf(0, 1), rf(1, 2)]).union(&right_monad(&rf(1, 1)));
        assert_eq!(t.to_string(), "{0, 1/2} u right(1)");
        let iv = GenInterval::new(rf(0, 1), BoundKind::Open, RationalFunction::x(), BoundKind::Closed).unwrap();
        assert_eq!(NSet::interval(iv).to_string(), "iv(open:0, X:closed)");
    }
}
