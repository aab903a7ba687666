use crate::ordfield::RationalFunction;

use super::cut::{Cut, Order};
use super::interval::small;
use super::nset::NSet;

fn offsets() -> Vec<RationalFunction> {
    let e = RationalFunction::inv_x_pow(1);
    let half = RationalFunction::from_ratio(1, 2);
    vec![
        RationalFunction::one(),
        half.clone(),
        e.clone(),
        &e * &RationalFunction::from_int(2),
        &half + &e,
    ]
}

fn push_around(out: &mut Vec<RationalFunction>, cut: &Cut, base: &[RationalFunction]) {
    let v = cut.center();
    out.push(v.clone());
    for d in base {
        out.push(v + d);
        out.push(v - d);
    }
    // Balls of other radii need offsets at their own scale.
    if let Order::Finite(k) = cut.order() {
        if k != 0 {
            for d in [small(k), small(k + 1), &small(k + 1) * &RationalFunction::from_int(2)] {
                out.push(v + &d);
                out.push(v - &d);
            }
        }
    }
}

/// Deterministic probe family around every bound of `s`: the bound value
/// `v`, `v ± 1`, `v ± 1/2`, `v ± 1/X`, `v ± 2/X`, `v ± (1/2 + 1/X)`, plus
/// offsets at the matching scale for balls of order other than 0.
/// Sorted and deduplicated.
pub fn probe_points(s: &NSet) -> Vec<RationalFunction> {
    let base = offsets();
    let mut out = Vec::new();
    for iv in s.intervals() {
        push_around(&mut out, iv.lo(), &base);
        push_around(&mut out, iv.hi(), &base);
    }
    out.sort();
    out.dedup();
    out
}

/// Probe points that are members of `s`.
pub fn member_probes(s: &NSet) -> Vec<RationalFunction> {
    probe_points(s).into_iter().filter(|x| s.contains(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nsets::unit_interval;

    #[test]
    fn probes_of_a_point() {
        let p = probe_points(&NSet::point(RationalFunction::zero()));
        let e = RationalFunction::inv_x_pow(1);
        assert!(p.contains(&-e.clone()));
        assert!(p.contains(&RationalFunction::zero()));
        assert!(p.contains(&e));
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn probes_of_the_unit_interval() {
        let p = probe_points(&unit_interval());
        let two_e = RationalFunction::from_ratio(2, 1) * RationalFunction::inv_x_pow(1);
        assert!(p.contains(&-two_e.clone()));
        assert!(p.contains(&(RationalFunction::one() + two_e)));
    }
}
