//! Coefficient-ring abstraction. All geometric structures are generic over a
//! differential ring `C`: exact polynomial data ([`Scalar`]) or its fraction
//! field ([`RationalFunction`]). Linear algebra that needs division lifts
//! through [`ToField`].

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::ratfun::RationalFunction;
use crate::scalar::{Rational, Scalar};

/// A commutative differential ring over the rationals, with partial
/// derivatives along the base coordinates and an embedding of polynomial data.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(q: Rational) -> Self;

    fn from_scalar(s: Scalar) -> Self;

    /// Partial derivative along coordinate `i` (zero-based).
    fn differentiate(&self, i: usize) -> Self;

    /// Exact division; `None` when `d` does not divide `self` in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;

    /// Record every parameter and function-symbol name occurring here.
    fn collect_names(&self, out: &mut BTreeSet<Arc<str>>);

    /// Canonical printed form with the given coordinate names.
    fn render(&self, coords: &[Arc<str>]) -> String;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn half() -> Self {
        Self::from_rational(Rational::new(1.into(), 2.into()))
    }
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait FieldCoefficient: Coefficient {
    fn inverse(&self) -> Option<Self>;
}

/// Embedding of a coefficient ring into a field of fractions.
pub trait ToField: Coefficient {
    type Field: FieldCoefficient + ToField<Field = Self::Field>;

    fn to_field(&self) -> Self::Field;
}

impl Coefficient for Scalar {
    fn from_rational(q: Rational) -> Self {
        Scalar::constant(q)
    }

    fn from_scalar(s: Scalar) -> Self {
        s
    }

    fn differentiate(&self, i: usize) -> Self {
        Scalar::differentiate(self, i)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        Scalar::exact_div(self, d)
    }

    fn collect_names(&self, out: &mut BTreeSet<Arc<str>>) {
        Scalar::collect_names(self, out)
    }

    fn render(&self, coords: &[Arc<str>]) -> String {
        Scalar::render(self, coords)
    }
}

impl ToField for Scalar {
    type Field = RationalFunction;

    fn to_field(&self) -> RationalFunction {
        RationalFunction::from_scalar(self.clone())
    }
}

impl Coefficient for RationalFunction {
    fn from_rational(q: Rational) -> Self {
        RationalFunction::from_scalar(Scalar::constant(q))
    }

    fn from_scalar(s: Scalar) -> Self {
        RationalFunction::from_scalar(s)
    }

    fn differentiate(&self, i: usize) -> Self {
        RationalFunction::differentiate(self, i)
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }

    fn collect_names(&self, out: &mut BTreeSet<Arc<str>>) {
        self.numerator().collect_names(out);
        self.denominator().collect_names(out);
    }

    fn render(&self, coords: &[Arc<str>]) -> String {
        RationalFunction::render(self, coords)
    }
}

impl FieldCoefficient for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        RationalFunction::inverse(self)
    }
}

impl ToField for RationalFunction {
    type Field = RationalFunction;

    fn to_field(&self) -> RationalFunction {
        self.clone()
    }
}
