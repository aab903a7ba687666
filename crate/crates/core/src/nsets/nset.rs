use crate::ordfield::RationalFunction;

use super::cut::{Cut, Order, Side};
use super::interval::{BoundKind, GenInterval};

/// A finite union of [`GenInterval`]s in normal form: sorted, pairwise
/// disjoint and with no two intervals touching. Normal forms are unique, so
/// structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NSet {
    intervals: Vec<GenInterval>,
}

impl NSet {
    pub fn empty() -> NSet {
        NSet::default()
    }

    pub fn point(v: RationalFunction) -> NSet {
        NSet {
            intervals: vec![GenInterval::point(v)],
        }
    }

    pub fn interval(iv: GenInterval) -> NSet {
        NSet { intervals: vec![iv] }
    }

    pub fn finite<I: IntoIterator<Item = RationalFunction>>(points: I) -> NSet {
        NSet::normalize(points.into_iter().map(GenInterval::point).collect())
    }

    /// Sorts and merges overlapping or touching intervals.
    pub fn normalize(mut raw: Vec<GenInterval>) -> NSet {
        raw.sort_by(|a, b| a.lo().cmp(b.lo()));
        let mut out: Vec<GenInterval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match out.last_mut() {
                Some(last) if iv.lo() <= last.hi() => {
                    if iv.hi() > last.hi() {
                        *last = GenInterval::from_cuts(last.lo().clone(), iv.hi().clone()).unwrap();
                    }
                }
                _ => out.push(iv),
            }
        }
        NSet { intervals: out }
    }

    pub fn intervals(&self) -> &[GenInterval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &RationalFunction) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x))
    }

    pub fn union(&self, other: &NSet) -> NSet {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        let mut all = self.intervals.clone();
        all.extend(other.intervals.iter().cloned());
        NSet::normalize(all)
    }

    pub fn intersection(&self, other: &NSet) -> NSet {
        let mut out = Vec::new();
        for a in &self.intervals {
            for b in &other.intervals {
                if let Some(c) = a.intersect(b) {
                    out.push(c);
                }
            }
        }
        NSet::normalize(out)
    }

    /// Each interval of a normal form is convex, so it lies in `other` iff it
    /// lies in a single interval of `other`.
    pub fn is_subset(&self, other: &NSet) -> bool {
        self.intervals
            .iter()
            .all(|a| other.intervals.iter().any(|b| a.is_subset_of(b)))
    }

    pub fn set_eq(&self, other: &NSet) -> bool {
        self == other
    }

    /// True when the set has exactly the listed points as members.
    pub fn as_points(&self) -> Option<Vec<&RationalFunction>> {
        self.intervals
            .iter()
            .map(|iv| iv.is_point().then(|| iv.lo_value()))
            .collect()
    }

    pub(crate) fn map_intervals(&self, f: impl Fn(&GenInterval) -> GenInterval) -> NSet {
        NSet::normalize(self.intervals.iter().map(f).collect())
    }
}

impl FromIterator<GenInterval> for NSet {
    fn from_iter<I: IntoIterator<Item = GenInterval>>(iter: I) -> Self {
        NSet::normalize(iter.into_iter().collect())
    }
}

fn monad_cuts(a: &RationalFunction) -> (Cut, Cut) {
    (
        Cut::new(a.clone(), Order::Finite(0), Side::Below),
        Cut::new(a.clone(), Order::Finite(0), Side::Above),
    )
}

/// `{x : 0 ⪅ x ⪅ 1}`.
pub fn unit_interval() -> NSet {
    let iv = GenInterval::new(
        RationalFunction::zero(),
        BoundKind::ROUGH,
        RationalFunction::one(),
        BoundKind::ROUGH,
    )
    .unwrap();
    NSet::interval(iv)
}

/// The open interval `(0 - eps, 1 + eps)` for a fixed `eps`. Unlike
/// [`unit_interval`] this excludes `-2·eps` although it is infinitely close
/// to 0.
pub fn unit_interval_def1(eps: &RationalFunction) -> NSet {
    let lo = -eps;
    let hi = &RationalFunction::one() + eps;
    match GenInterval::new(lo, BoundKind::Open, hi, BoundKind::Open) {
        Ok(iv) => NSet::interval(iv),
        Err(_) => NSet::empty(),
    }
}

/// `{a - x : x positive infinitesimal}`.
pub fn left_monad(a: &RationalFunction) -> NSet {
    let (lo, _) = monad_cuts(a);
    NSet::interval(GenInterval::from_cuts(lo, Cut::before(a.clone())).unwrap())
}

/// `{b + x : x positive infinitesimal}`.
pub fn right_monad(b: &RationalFunction) -> NSet {
    let (_, hi) = monad_cuts(b);
    NSet::interval(GenInterval::from_cuts(Cut::after(b.clone()), hi).unwrap())
}

/// `{x : x ≈ a}`.
pub fn monad(a: &RationalFunction) -> NSet {
    let (lo, hi) = monad_cuts(a);
    NSet::interval(GenInterval::from_cuts(lo, hi).unwrap())
}

/// `1⁺`, the right monad of 1.
pub fn one_plus() -> NSet {
    right_monad(&RationalFunction::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_ratio(n, d)
    }

    fn eps() -> RationalFunction {
        RationalFunction::inv_x_pow(1)
    }

    fn closed(a: RationalFunction, b: RationalFunction) -> GenInterval {
        GenInterval::new(a, BoundKind::Closed, b, BoundKind::Closed).unwrap()
    }

    #[test]
    fn unit_interval_membership() {
        let u = unit_interval();
        assert!(u.contains(&-(eps() * rf(2, 1))));
        assert!(u.contains(&rf(1, 2)));
        assert!(!u.contains(&rf(2, 1)));
        assert!(u.contains(&rf(0, 1)) && u.contains(&rf(1, 1)));
        assert!(u.contains(&(rf(1, 1) + eps())));
        assert!(u.contains(&(rf(1, 2) + eps())));
    }

    #[test]
    fn definition_one_diverges() {
        let d1 = unit_interval_def1(&eps());
        assert!(!d1.contains(&-(eps() * rf(2, 1))));
        assert!(d1.contains(&rf(0, 1)));
        assert!(!d1.contains(&-eps()));
    }

    #[test]
    fn monads() {
        let a = rf(1, 3);
        assert!(left_monad(&a).contains(&(&a - &eps())));
        let open = GenInterval::new(&a - &eps(), BoundKind::Open, a.clone(), BoundKind::Open).unwrap();
        assert!(!open.contains(&(&a - &eps())));
        assert!(monad(&rf(1, 2)).contains(&rf(1, 2)));
        assert!(!right_monad(&rf(1, 1)).contains(&rf(1, 1)));
    }

    #[test]
    fn union_and_subset() {
        let a = NSet::interval(closed(rf(0, 1), rf(1, 2)));
        assert_eq!(a.union(&NSet::empty()), a);
        let two = NSet::point(rf(0, 1)).union(&NSet::point(rf(1, 1)));
        assert_eq!(two, NSet::finite([rf(1, 1), rf(0, 1)]));
        assert_eq!(two.intervals()[0].lo_value(), &rf(0, 1));
        assert!(right_monad(&rf(1, 1)).is_subset(&unit_interval()));
        assert!(!NSet::point(rf(2, 1)).is_subset(&unit_interval()));
    }

    #[test]
    fn normalize_examples() {
        let merged = NSet::normalize(vec![closed(rf(0, 1), rf(1, 2)), closed(rf(1, 2), rf(1, 1))]);
        assert_eq!(merged, NSet::interval(closed(rf(0, 1), rf(1, 1))));
        let z = RationalFunction::zero();
        let m = NSet::normalize(vec![
            GenInterval::new(z.clone(), BoundKind::ROUGH, z.clone(), BoundKind::ROUGH).unwrap(),
            GenInterval::point(z.clone()),
        ]);
        assert_eq!(m, monad(&z));
        assert!(NSet::normalize(vec![]).is_empty());
        // left(1) ∪ {1} ∪ right(1) = mon(1)
        let pieces = left_monad(&rf(1, 1))
            .union(&NSet::point(rf(1, 1)))
            .union(&right_monad(&rf(1, 1)));
        assert_eq!(pieces, monad(&rf(1, 1)));
        // open intervals sharing an excluded endpoint stay apart
        let apart = NSet::normalize(vec![
            GenInterval::new(rf(0, 1), BoundKind::Closed, rf(1, 2), BoundKind::Open).unwrap(),
            GenInterval::new(rf(1, 2), BoundKind::Open, rf(1, 1), BoundKind::Closed).unwrap(),
        ]);
        assert_eq!(apart.intervals().len(), 2);
        assert!(!apart.contains(&rf(1, 2)));
    }
}
