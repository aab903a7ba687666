//! Oracles shared by the integration tests and the acceptance run.
//!
//! They decide membership questions about images from pointwise arithmetic
//! alone, never from the interval code under test.

#![allow(dead_code)]

use nsl_core::nsets::{member_probes, one_plus, GenInterval, MultiAffineMap, NSet};
use nsl_core::ordfield::RationalFunction;

pub fn rf(n: i64, d: i64) -> RationalFunction {
    RationalFunction::from_ratio(n, d)
}

pub fn x_pow(j: u32) -> RationalFunction {
    RationalFunction::inv_x_pow(j)
}

/// Members of `s` near its bounds and inside it: probes, plus each bound
/// value shifted by `±c/X^j`, plus interval witnesses and midpoints.
pub fn candidates(s: &NSet) -> Vec<RationalFunction> {
    let mut out = member_probes(s);
    let scales = [rf(1, 1), rf(2, 1), rf(1, 2)];
    for iv in s.intervals() {
        out.push(iv.witness());
        let (lo, hi) = (iv.lo_value().clone(), iv.hi_value().clone());
        out.push((&lo + &hi) * rf(1, 2));
        for v in [&lo, &hi] {
            for j in 1..=3 {
                for c in &scales {
                    let d = c * &x_pow(j);
                    out.push(v + &d);
                    out.push(v - &d);
                }
            }
        }
    }
    out.retain(|x| s.contains(x));
    out.sort();
    out.dedup();
    out
}

/// A few members of `1⁺` at different scales.
pub fn one_plus_members() -> Vec<RationalFunction> {
    let one = RationalFunction::one();
    let c: Vec<_> = [x_pow(1), x_pow(2) * rf(3, 1), x_pow(3)].iter().map(|e| &one + e).collect();
    assert!(c.iter().all(|v| one_plus().contains(v)));
    c
}

/// A binary map `(a, b) ↦ y` together with solvers for either argument.
#[derive(Clone, Copy, Debug)]
pub enum BinMap {
    Sum,
    Product,
    ProbSum,
    /// `c - a + ab` with fixed `c`.
    Implication,
}

fn div(a: &RationalFunction, b: &RationalFunction) -> Option<RationalFunction> {
    a.checked_div(b).ok()
}

impl BinMap {
    pub fn eval(self, c: &RationalFunction, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        match self {
            BinMap::Sum => a + b,
            BinMap::Product => MultiAffineMap::Product.eval(c, a, b),
            BinMap::ProbSum => MultiAffineMap::ProbabilisticSum.eval(c, a, b),
            BinMap::Implication => MultiAffineMap::Implication.eval(c, a, b),
        }
    }

    /// All `b` with `map(c, a, b) = y`: `Some(vec![])` if none, `None` if every `b` works.
    fn solve_b(self, c: &RationalFunction, a: &RationalFunction, y: &RationalFunction) -> Option<Vec<RationalFunction>> {
        let one = RationalFunction::one();
        // map = k + m·b
        let (k, m) = match self {
            BinMap::Sum => (a.clone(), one),
            BinMap::Product => (RationalFunction::zero(), a.clone()),
            BinMap::ProbSum => (a.clone(), &one - a),
            BinMap::Implication => (c - a, a.clone()),
        };
        if m.is_zero() {
            return if &k == y { None } else { Some(vec![]) };
        }
        Some(div(&(y - &k), &m).into_iter().collect())
    }

    /// All `a` with `map(c, a, b) = y`, as for [`BinMap::solve_b`].
    fn solve_a(self, c: &RationalFunction, b: &RationalFunction, y: &RationalFunction) -> Option<Vec<RationalFunction>> {
        let one = RationalFunction::one();
        let (k, m) = match self {
            BinMap::Sum => (b.clone(), one),
            BinMap::Product => (RationalFunction::zero(), b.clone()),
            BinMap::ProbSum => (b.clone(), &one - b),
            BinMap::Implication => (c.clone(), b - &one),
        };
        if m.is_zero() {
            return if &k == y { None } else { Some(vec![]) };
        }
        Some(div(&(y - &k), &m).into_iter().collect())
    }
}

/// Pointwise soundness: `map(c, a, b)` lies in `image` for every `c` in
/// `cs` and all member probes `a`, `b` of the operands.
/// Returns the first counterexample.
pub fn soundness(
    map: BinMap,
    cs: &[RationalFunction],
    a: &NSet,
    b: &NSet,
    image: &NSet,
) -> Result<(), String> {
    let (ca, cb) = (member_probes(a), member_probes(b));
    for c in cs {
        for x in &ca {
            for y in &cb {
                let v = map.eval(c, x, y);
                if !image.contains(&v) {
                    return Err(format!("{map:?}({c}, {x}, {y}) = {v} not in {image}"));
                }
            }
        }
    }
    Ok(())
}

/// Searches for `(c, a, b)` with `map(c, a, b) = y` and `c ∈ c_set`, `a ∈ a`,
/// `b ∈ b`: fixes one or two arguments at candidates and solves the affine
/// equation for the remaining one.
pub fn preimage(
    map: BinMap,
    (c_set, cc): (&NSet, &[RationalFunction]),
    (a, ca): (&NSet, &[RationalFunction]),
    (b, cb): (&NSet, &[RationalFunction]),
    y: &RationalFunction,
) -> Option<(RationalFunction, RationalFunction, RationalFunction)> {
    let solve_one = |c: &RationalFunction| {
        for x in ca {
            match map.solve_b(c, x, y) {
                None => return Some((c.clone(), x.clone(), cb.first()?.clone())),
                Some(sols) => {
                    if let Some(s) = sols.into_iter().find(|s| b.contains(s)) {
                        return Some((c.clone(), x.clone(), s));
                    }
                }
            }
        }
        for z in cb {
            match map.solve_a(c, z, y) {
                None => return Some((c.clone(), ca.first()?.clone(), z.clone())),
                Some(sols) => {
                    if let Some(s) = sols.into_iter().find(|s| a.contains(s)) {
                        return Some((c.clone(), s, z.clone()));
                    }
                }
            }
        }
        None
    };
    // A few spread-out values of c settle most probes.
    let step = (cc.len() / 4).max(1);
    if let Some(found) = cc.iter().step_by(step).find_map(solve_one) {
        return Some(found);
    }
    if let BinMap::Implication = map {
        // c enters additively: c = y - map(0, a, b).
        let zero = RationalFunction::zero();
        for x in ca {
            for z in cb {
                let c = y - &map.eval(&zero, x, z);
                if c_set.contains(&c) {
                    return Some((c, x.clone(), z.clone()));
                }
            }
        }
    }
    cc.iter().find_map(solve_one)
}

/// Completeness: every member probe of `image` has a verified preimage.
/// `c_set` is `{0}` for maps that ignore `c`.
pub fn completeness(map: BinMap, c_set: &NSet, a: &NSet, b: &NSet, image: &NSet) -> Result<(), String> {
    let (cc, ca, cb) = (candidates(c_set), candidates(a), candidates(b));
    for y in member_probes(image) {
        match preimage(map, (c_set, &cc), (a, &ca), (b, &cb), &y) {
            Some((c, x, z)) => {
                let ok = c_set.contains(&c) && a.contains(&x) && b.contains(&z) && map.eval(&c, &x, &z) == y;
                if !ok {
                    return Err(format!("bad preimage for {y}"));
                }
            }
            None => return Err(format!("{y} in {image} has no preimage found for {map:?} over {a} and {b}")),
        }
    }
    Ok(())
}

/// Exact image of closed boxes by corner enumeration.
pub fn corner_image(
    map: BinMap,
    c: (&RationalFunction, &RationalFunction),
    a: (&RationalFunction, &RationalFunction),
    b: (&RationalFunction, &RationalFunction),
) -> (RationalFunction, RationalFunction) {
    let mut vals = Vec::new();
    for cc in [c.0, c.1] {
        for x in [a.0, a.1] {
            for y in [b.0, b.1] {
                vals.push(map.eval(cc, x, y));
            }
        }
    }
    let lo = vals.iter().min().unwrap().clone();
    let hi = vals.iter().max().unwrap().clone();
    (lo, hi)
}

pub fn closed(a: &RationalFunction, b: &RationalFunction) -> NSet {
    use nsl_core::nsets::BoundKind::Closed;
    NSet::interval(GenInterval::new(a.clone(), Closed, b.clone(), Closed).unwrap())
}
