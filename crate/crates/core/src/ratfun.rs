//! Rational functions: quotients of scalars, gcd-reduced with a monic
//! denominator, so equality is syntactic equality of canonical forms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::scalar::{forward_owned_ops, scalar_gcd, Scalar};

/// A quotient `num/den` of scalars with `den` nonzero. Canonical form:
/// `gcd(num, den) = 1` and the leading rational coefficient of `den` is one.
/// Zero is uniquely `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Scalar,
    den: Scalar,
}

impl RationalFunction {
    /// Build and normalize. Panics when `den` is identically zero; use
    /// [`RationalFunction::try_new`] when the denominator is not known to be
    /// nonzero.
    pub fn new(num: Scalar, den: Scalar) -> Self {
        Self::try_new(num, den).expect("denominator is identically zero")
    }

    pub fn try_new(num: Scalar, den: Scalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RationalFunction {
                num: Scalar::zero(),
                den: Scalar::one(),
            });
        }
        let g = scalar_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides the numerator");
        let den = den.exact_div(&g).expect("gcd divides the denominator");
        let (den, lead) = den.make_monic();
        let num = &num * &Scalar::constant(lead.recip());
        Some(RationalFunction { num, den })
    }

    pub fn from_scalar(s: Scalar) -> Self {
        RationalFunction {
            num: s,
            den: Scalar::one(),
        }
    }

    pub fn numerator(&self) -> &Scalar {
        &self.num
    }

    pub fn denominator(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying scalar when the denominator is one.
    pub fn as_polynomial(&self) -> Option<&Scalar> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Quotient-rule derivative along coordinate `i`.
    pub fn differentiate(&self, i: usize) -> Self {
        let dn = self.num.differentiate(i);
        let dd = self.den.differentiate(i);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        Self::new(num, den)
    }

    /// Printed form: bare numerator when the denominator is one, otherwise
    /// `num/(den)` with the numerator parenthesized when it is a sum.
    pub fn render(&self, coords: &[Arc<str>]) -> String {
        let n = self.num.render(coords);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.render(coords);
        if self.num.terms().len() > 1 || n.starts_with('-') {
            format!("({n})/({d})")
        } else {
            format!("{n}/({d})")
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl From<Scalar> for RationalFunction {
    fn from(s: Scalar) -> Self {
        Self::from_scalar(s)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

forward_owned_ops!(RationalFunction);

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        &self / &rhs
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_scalar(Scalar::zero())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Scalar {
        Scalar::coord(0)
    }
    fn y() -> Scalar {
        Scalar::coord(1)
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (2x^2 + 2xy) / (4x) = (x + y)/2
        let num = &(&Scalar::int(2) * &x()) * &(&x() + &y());
        let den = &Scalar::int(4) * &x();
        let r = RationalFunction::new(num, den);
        assert_eq!(r.denominator(), &Scalar::one());
        assert_eq!(
            r.numerator(),
            &(&Scalar::constant(crate::scalar::ratio(1, 2)) * &(&x() + &y()))
        );
    }

    #[test]
    fn field_identities() {
        let r = RationalFunction::new(x(), &x() + &Scalar::one());
        let s = RationalFunction::new(Scalar::one(), &x() + &Scalar::one());
        let sum = &r + &s;
        assert!(sum.is_one());
        let inv = r.inverse().unwrap();
        assert!((&r * &inv).is_one());
    }

    #[test]
    fn cross_multiplication_equality() {
        // x/(x^2) equals 1/x after normalization
        let a = RationalFunction::new(x(), &x() * &x());
        let b = RationalFunction::new(Scalar::one(), x());
        assert_eq!(a, b);
        assert_eq!(
            &a.numerator() * &b.denominator(),
            &b.numerator() * &a.denominator()
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let r = RationalFunction::new(Scalar::one(), x());
        let d = r.differentiate(0);
        assert_eq!(d, RationalFunction::new(-&Scalar::one(), &x() * &x()));
    }

    #[test]
    fn rendering() {
        let r = RationalFunction::new(x(), &x() + &Scalar::one());
        assert_eq!(r.render(&[]), "x1/(x1 + 1)");
        let s = RationalFunction::new(&x() + &y(), &x() - &y());
        assert_eq!(s.render(&[]), "(x1 + x2)/(x1 - x2)");
    }
}
