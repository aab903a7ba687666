use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FieldError, Polynomial, Rational};

/// An element of ℚ(X) kept in canonical form: the fraction is reduced and the
/// denominator is monic, so two values are equal exactly when their
/// representations are.
///
/// The order is the one whose positive cone is given by leading coefficients:
/// `num/den > 0` iff `lc(num)/lc(den) > 0`. Under it `X` exceeds every
/// rational and `1/X` is a positive infinitesimal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::embed(Rational::one())
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        RationalFunction {
            num: Polynomial::monomial(Rational::one(), 1),
            den: Polynomial::one(),
        }
    }

    /// `X^-n`, a positive infinitesimal for `n > 0`.
    pub fn inv_x_pow(n: u32) -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::monomial(Rational::one(), n as usize),
        }
    }

    /// Canonical embedding ℚ → ℚ(X).
    pub fn embed(q: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(q),
            den: Polynomial::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::embed(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::embed(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else if den.is_monic_monomial() {
            // Only powers of X can be shared.
            let k = num.trailing_zeros().min(den.degree().unwrap());
            (num.shift_down(k), den.shift_down(k))
        } else if den.degree() == Some(1) {
            // A linear denominator divides the numerator iff its root is a root of it.
            let root = -(den.coeff(0) / den.coeff(1));
            if num.eval(&root).is_zero() {
                (num.div_rem(&den).0, Polynomial::one())
            } else {
                (num, den)
            }
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// `n` when the denominator is `X^n`.
    fn monomial_den(&self) -> Option<usize> {
        if self.den.is_monic_monomial() {
            self.den.degree()
        } else {
            None
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if this element lies in the image of ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => self.num.leading_coeff().cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        if other.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn recip(&self) -> Result<Self, FieldError> {
        Self::one().checked_div(self)
    }

    /// `self^n` for any integer `n`; negative powers invert.
    pub fn pow(&self, n: i64) -> Result<Self, FieldError> {
        let mut base = if n < 0 { self.recip()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Sign under the leading-coefficient cone: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        // The denominator is monic, so only the numerator's leading coefficient matters.
        match self.num.leading_coeff() {
            None => 0,
            Some(lc) if lc.is_positive() => 1,
            Some(_) => -1,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Order of vanishing at infinity: `deg(den) - deg(num)`; `None` for zero.
    ///
    /// Positive exactly for nonzero infinitesimals, nonnegative exactly for
    /// nonzero finite elements.
    pub fn valuation(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(self.den.degree().unwrap() as i64 - n)
    }

    /// Valuation of `self - other` without building the reduced difference.
    pub fn valuation_of_difference(&self, other: &Self) -> Option<i64> {
        if let (Some(a), Some(b)) = (self.monomial_den(), other.monomial_den()) {
            let (i, _) = top_difference(self.num.coeffs(), b, other.num.coeffs(), a)?;
            return Some((a + b) as i64 - i as i64);
        }
        if self.den == other.den {
            let n = self.num.sub(&other.num).degree()? as i64;
            return Some(self.den.degree().unwrap() as i64 - n);
        }
        let n = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let d = self.den.degree().unwrap() + other.den.degree().unwrap();
        Some(d as i64 - n.degree()? as i64)
    }

    /// `|self| <= q` for every positive rational `q`.
    pub fn is_infinitesimal(&self) -> bool {
        self.valuation().is_none_or(|v| v > 0)
    }

    /// `|self| <= q` for some positive rational `q`.
    pub fn is_finite(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// `self - other` is infinitesimal.
    pub fn infinitely_close(&self, other: &Self) -> bool {
        self.valuation_of_difference(other).is_none_or(|v| v > 0)
    }

    /// `self < other` or `self ≈ other`.
    pub fn roughly_le(&self, other: &Self) -> bool {
        self < other || self.infinitely_close(other)
    }

    /// The rational infinitely close to a finite element.
    pub fn standard_part(&self) -> Result<Rational, FieldError> {
        match self.valuation() {
            None => Ok(Rational::zero()),
            Some(v) if v > 0 => Ok(Rational::zero()),
            Some(0) => Ok(self.num.leading_coeff().unwrap() / self.den.leading_coeff().unwrap()),
            Some(_) => Err(FieldError::NotFinite(self.to_string())),
        }
    }

    /// Truncates the expansion in powers of `1/X` after the terms of valuation
    /// `order`: the result differs from `self` by an element of valuation
    /// `> order`, and depends only on the class of `self` modulo such elements.
    pub fn truncate(&self, order: i64) -> Self {
        let Some(n) = self.num.degree() else {
            return Self::zero();
        };
        let d = self.den.degree().unwrap();
        let lead_val = d as i64 - n as i64;
        if lead_val > order {
            return Self::zero();
        }
        if self.den.degree() == Some(0) && order >= 0 {
            // A polynomial has no terms of positive valuation.
            return self.clone();
        }
        // Series division in t = 1/X: num/den = X^(n-d) * a(t)/b(t).
        let terms = (order - lead_val) as usize + 1;
        let a = |i: usize| {
            if i <= n {
                self.num.coeff(n - i)
            } else {
                Rational::zero()
            }
        };
        let b = |i: usize| {
            if i <= d {
                self.den.coeff(d - i)
            } else {
                Rational::zero()
            }
        };
        let mut q: Vec<Rational> = Vec::with_capacity(terms);
        for i in 0..terms {
            let mut c = a(i);
            for l in 1..=i.min(d) {
                c -= b(l) * &q[i - l];
            }
            q.push(c);
        }
        // q[i] multiplies X^(n-d-i); lowest exponent is n-d-(terms-1) = -order.
        let low = -order;
        let mut coeffs = vec![Rational::zero(); terms];
        for (i, c) in q.into_iter().enumerate() {
            let e = n as i64 - d as i64 - i as i64;
            coeffs[(e - low) as usize] = c;
        }
        let p = Polynomial::new(coeffs);
        if low >= 0 {
            Self::from_poly(p.shift_up(low as usize))
        } else {
            Self::reduce(p, Polynomial::monomial(Rational::one(), (-low) as usize))
        }
    }

    /// Prints Laurent polynomials (denominator a power of `X`) as a sum of
    /// terms, e.g. `1/2 - 2/X`; anything else in canonical `num/den` form.
    pub fn display_expanded(&self) -> String {
        if !self.den.is_monic_monomial() || self.num.is_single_term() {
            return self.to_string();
        }
        let shift = self.den.degree().unwrap();
        let mut out = String::new();
        for (i, c) in self.num.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 - shift as i64;
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coef = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            match e.cmp(&0) {
                Ordering::Equal => out.push_str(&coef),
                Ordering::Greater => {
                    if !abs.is_one() {
                        out.push_str(&coef);
                        out.push('*');
                    }
                    out.push('X');
                    if e > 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
                Ordering::Less => {
                    out.push_str(&coef);
                    out.push_str("/X");
                    if e < -1 {
                        out.push_str(&format!("^{}", -e));
                    }
                }
            }
        }
        out
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for RationalFunction {
    fn from(q: Rational) -> Self {
        Self::embed(q)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        // sign(n1*d2 - n2*d1); both denominators have positive leading coefficient.
        if let (Some(a), Some(b)) = (self.monomial_den(), other.monomial_den()) {
            return cmp_shifted(self.num.coeffs(), b, other.num.coeffs(), a);
        }
        if self.den == other.den {
            return cmp_shifted(self.num.coeffs(), 0, other.num.coeffs(), 0);
        }
        let diff = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        match diff.leading_coeff() {
            None => Ordering::Equal,
            Some(lc) if lc.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }
}

/// Highest power where `a·X^sa` and `b·X^sb` differ, with the comparison
/// of the two coefficients there.
fn top_difference(a: &[Rational], sa: usize, b: &[Rational], sb: usize) -> Option<(usize, Ordering)> {
    let zero = Rational::zero();
    let top = (a.len() + sa).max(b.len() + sb);
    (0..top).rev().find_map(|i| {
        let ca = i.checked_sub(sa).and_then(|j| a.get(j)).unwrap_or(&zero);
        let cb = i.checked_sub(sb).and_then(|j| b.get(j)).unwrap_or(&zero);
        match ca.cmp(cb) {
            Ordering::Equal => None,
            o => Some((i, o)),
        }
    })
}

fn cmp_shifted(a: &[Rational], sa: usize, b: &[Rational], sb: usize) -> Ordering {
    top_difference(a, sa, b, sb).map_or(Ordering::Equal, |(_, o)| o)
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_poly(self.num.add(&rhs.num));
            }
            return RationalFunction::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        if let (Some(a), Some(b)) = (self.monomial_den(), rhs.monomial_den()) {
            let (num, den) = if a >= b {
                (self.num.add(&rhs.num.shift_up(a - b)), &self.den)
            } else {
                (self.num.shift_up(b - a).add(&rhs.num), &rhs.den)
            };
            return RationalFunction::reduce(num, den.clone());
        }
        RationalFunction::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(self.num.mul(&rhs.num));
        }
        RationalFunction::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

/// Canonical form: `num/den`, parenthesised where needed, e.g. `(X - 1)/X`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let simple_num = self.num.is_single_term() && {
            let lc = self.num.leading_coeff().unwrap();
            if self.num.degree() == Some(0) {
                lc.is_integer()
            } else {
                lc.abs().is_one()
            }
        };
        if simple_num {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.is_monic_monomial() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
