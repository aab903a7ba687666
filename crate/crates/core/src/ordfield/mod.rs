//! Exact arithmetic and order theory for the nonarchimedean field ℚ(X).
//!
//! Elements are rational functions in one indeterminate `X` with rational
//! coefficients. The ordering takes as positive cone the fractions whose
//! leading coefficients have positive ratio, which makes `X` infinite and
//! `1/X`, `1/X²`, ... positive infinitesimals. Infinitesimality, finiteness
//! and standard parts all reduce to degree comparisons.

mod poly;
mod ratfunc;

use std::cmp::Ordering;

use thiserror::Error;

pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rationals, kept reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is infinite and has no standard part")]
    NotFinite(String),
}

pub fn embed_rational(q: Rational) -> RationalFunction {
    RationalFunction::embed(q)
}

/// -1, 0 or +1.
pub fn sign(r: &RationalFunction) -> i32 {
    r.signum()
}

pub fn compare(r: &RationalFunction, s: &RationalFunction) -> Ordering {
    r.cmp(s)
}

pub fn is_infinitesimal(r: &RationalFunction) -> bool {
    r.is_infinitesimal()
}

pub fn is_finite(r: &RationalFunction) -> bool {
    r.is_finite()
}

pub fn infinitely_close(r: &RationalFunction, s: &RationalFunction) -> bool {
    r.infinitely_close(s)
}

pub fn roughly_le(r: &RationalFunction, s: &RationalFunction) -> bool {
    r.roughly_le(s)
}

pub fn standard_part(r: &RationalFunction) -> Result<Rational, FieldError> {
    r.standard_part()
}
