//! Exact images of sets under the arithmetic maps of the logic.
//!
//! Each of `f(a,b) = ab`, `g(a,b) = a + b - ab` and `h(c,a,b) = c - a + ab`
//! can be rewritten so every argument occurs once:
//!
//! ```text
//! g(a,b)   = 1 - (1 - a)(1 - b)
//! h(c,a,b) = c + a(b - 1)
//! ```
//!
//! so their images are compositions of translations, negations, Minkowski
//! sums and elementwise products. Those are computed bound-by-bound on cuts:
//! sums combine ball radii by taking the larger ball, products scale each
//! factor's ball by the other factor's magnitude (after splitting intervals
//! by sign). Scaling a monad by an infinitesimal gives a smaller ball, which
//! is why bounds carry a ball order rather than a bare "rough" flag.

use crate::ordfield::RationalFunction;

use super::cut::{add_cuts, mul_positive_cuts, Role};
use super::interval::GenInterval;
use super::nset::{one_plus, NSet};

fn add_intervals(a: &GenInterval, b: &GenInterval) -> GenInterval {
    let lo = add_cuts(a.lo(), b.lo(), Role::Lower);
    let hi = add_cuts(a.hi(), b.hi(), Role::Upper);
    GenInterval::from_cuts(lo, hi).expect("sum of nonempty intervals is nonempty")
}

/// Splits into (sign, magnitude) pieces; the zero piece is `(0, {0})`.
fn sign_pieces(a: &GenInterval) -> Vec<(i8, GenInterval)> {
    let mut out = Vec::with_capacity(3);
    if let Some(n) = a.negative_part() {
        out.push((-1, n.negate()));
    }
    if a.contains(&RationalFunction::zero()) {
        out.push((0, GenInterval::point(RationalFunction::zero())));
    }
    if let Some(p) = a.positive_part() {
        out.push((1, p));
    }
    out
}

fn mul_positive(a: &GenInterval, b: &GenInterval) -> GenInterval {
    let lo = mul_positive_cuts(a.lo(), b.lo(), Role::Lower);
    let hi = mul_positive_cuts(a.hi(), b.hi(), Role::Upper);
    GenInterval::from_cuts(lo, hi).expect("product of nonempty intervals is nonempty")
}

fn mul_intervals(a: &GenInterval, b: &GenInterval, out: &mut Vec<GenInterval>) {
    let pb = sign_pieces(b);
    for (sa, ma) in sign_pieces(a) {
        for (sb, mb) in &pb {
            if sa == 0 || *sb == 0 {
                out.push(GenInterval::point(RationalFunction::zero()));
                continue;
            }
            let m = mul_positive(&ma, mb);
            out.push(if sa * sb < 0 { m.negate() } else { m });
        }
    }
}

/// `A ⊕ B = {a + b}`.
pub fn elem_add(a: &NSet, b: &NSet) -> NSet {
    let mut out = Vec::with_capacity(a.intervals().len() * b.intervals().len());
    for x in a.intervals() {
        for y in b.intervals() {
            out.push(add_intervals(x, y));
        }
    }
    NSet::normalize(out)
}

pub fn elem_neg(a: &NSet) -> NSet {
    a.map_intervals(GenInterval::negate)
}

/// `A ⊖ B = {a - b}`.
pub fn elem_sub(a: &NSet, b: &NSet) -> NSet {
    elem_add(a, &elem_neg(b))
}

/// `A ⊙ B = {a·b}`.
pub fn elem_mul(a: &NSet, b: &NSet) -> NSet {
    let mut out = Vec::new();
    for x in a.intervals() {
        for y in b.intervals() {
            mul_intervals(x, y, &mut out);
        }
    }
    NSet::normalize(out)
}

/// `{t + a}`.
pub fn translate(a: &NSet, t: &RationalFunction) -> NSet {
    a.map_intervals(|iv| iv.translate(t))
}

/// `{1 - a}`.
fn one_minus(a: &NSet) -> NSet {
    translate(&elem_neg(a), &RationalFunction::one())
}

/// The three maps behind the connectives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MultiAffineMap {
    /// `f(a, b) = ab`
    Product,
    /// `g(a, b) = a + b - ab`
    ProbabilisticSum,
    /// `h(c, a, b) = c - a + ab`, with `c` ranging over `1⁺`
    Implication,
}

impl MultiAffineMap {
    /// Pointwise value; `c` is ignored except by `Implication`.
    pub fn eval(self, c: &RationalFunction, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        match self {
            MultiAffineMap::Product => a * b,
            MultiAffineMap::ProbabilisticSum => &(a + b) - &(a * b),
            MultiAffineMap::Implication => &(c - a) + &(a * b),
        }
    }
}

/// Exact image of `A × B` (and of `1⁺ × A × B` for the implication map).
pub fn image_multilinear(map: MultiAffineMap, a: &NSet, b: &NSet) -> NSet {
    match map {
        MultiAffineMap::Product => elem_mul(a, b),
        MultiAffineMap::ProbabilisticSum => one_minus(&elem_mul(&one_minus(a), &one_minus(b))),
        MultiAffineMap::Implication => image_h(&one_plus(), a, b),
    }
}

/// Exact image `{c - a + ab : c ∈ C, a ∈ A, b ∈ B}`.
pub fn image_h(c: &NSet, a: &NSet, b: &NSet) -> NSet {
    let b_minus_one = translate(b, &-RationalFunction::one());
    elem_add(c, &elem_mul(a, &b_minus_one))
}

/// `A ⊗ B = {ab}`.
pub fn owedge(a: &NSet, b: &NSet) -> NSet {
    image_multilinear(MultiAffineMap::Product, a, b)
}

/// `A ⊕̃ B = {a + b - ab}`.
pub fn ovee(a: &NSet, b: &NSet) -> NSet {
    image_multilinear(MultiAffineMap::ProbabilisticSum, a, b)
}

/// `A ⊘ B = {c - a + ab : c ∈ 1⁺}`.
pub fn obslash(a: &NSet, b: &NSet) -> NSet {
    image_multilinear(MultiAffineMap::Implication, a, b)
}

/// `(A ⊕ B) ⊖ (A ⊙ B)`, each occurrence of an operand drawn independently.
pub fn ovee_prime(a: &NSet, b: &NSet) -> NSet {
    elem_sub(&elem_add(a, b), &elem_mul(a, b))
}

/// `1⁺ ⊖ A ⊕ (A ⊙ B)`, each occurrence of an operand drawn independently.
pub fn obslash_prime(a: &NSet, b: &NSet) -> NSet {
    elem_add(&elem_sub(&one_plus(), a), &elem_mul(a, b))
}
