//! Exact coefficient arithmetic: multivariate polynomials over base coordinates,
//! formal parameters, and jets of declared function symbols.
//!
//! A [`Scalar`] is a canonically ordered sum of terms, each a [`Rational`]
//! coefficient times a [`Monomial`]. Indeterminates come in three kinds:
//!
//! * base coordinates `x_1 .. x_n`, indexed by position,
//! * formal parameters (e.g. `lambda`), which differentiate to zero,
//! * jets `f_{,alpha}` of declared function symbols, indexed by a sorted
//!   multi-index over coordinates.
//!
//! Keeping generic smooth functions as first-class jet families makes identity
//! checks quantified over arbitrary functions complete at the jet level instead
//! of sampled. Equality of scalars is syntactic equality of canonical forms.

mod gcd;
mod parse;

pub use gcd::scalar_gcd;
pub use parse::{parse_scalar, ParseError, SymbolTable};

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

/// Exact rational coefficient: arbitrary-precision, always reduced, positive
/// denominator, zero uniquely `0/1`.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// One indeterminate of the coefficient ring.
///
/// The derived order is the global stable numbering used by the monomial
/// order: coordinates first (by index), then parameters (by name), then jets
/// by (symbol, multi-index).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indet {
    /// Base coordinate `x_i` (zero-based index).
    Coord(u32),
    /// Formal parameter; constant under differentiation.
    Param(Arc<str>),
    /// Jet of a function symbol. The multi-index is stored sorted, which
    /// identifies `f_{,xy}` with `f_{,yx}`. An empty multi-index is the
    /// symbol itself.
    Jet { symbol: Arc<str>, index: Box<[u32]> },
}

impl Indet {
    fn jet(symbol: Arc<str>, mut index: Vec<u32>) -> Self {
        index.sort_unstable();
        Indet::Jet {
            symbol,
            index: index.into_boxed_slice(),
        }
    }

    /// Derivative of this indeterminate along coordinate `i`:
    /// `None` means zero, `Some(None)` means the constant one, and
    /// `Some(Some(v))` means the indeterminate `v`.
    fn derivative(&self, i: u32) -> Option<Option<Indet>> {
        match self {
            Indet::Coord(j) => (*j == i).then_some(None),
            Indet::Param(_) => None,
            Indet::Jet { symbol, index } => {
                let mut idx = index.to_vec();
                idx.push(i);
                Some(Some(Indet::jet(symbol.clone(), idx)))
            }
        }
    }
}

/// A monomial: finite exponent assignment over indeterminates, kept sorted by
/// the global indeterminate order with all exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Indet, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn indet(v: Indet) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Canonicalize an arbitrary factor list: merge repeats, drop zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (Indet, u32)>) -> Self {
        let mut map: BTreeMap<Indet, u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            factors: map.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).sum()
    }

    pub fn factors(&self) -> &[(Indet, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|(v, e)| (v.clone(), *e)),
        )
    }

    /// Exact monomial quotient, `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.factors.clone();
        for (v, e) in &other.factors {
            let slot = out.iter_mut().find(|(w, _)| w == v)?;
            if slot.1 < *e {
                return None;
            }
            slot.1 -= *e;
        }
        Some(Monomial {
            factors: out.into_iter().filter(|(_, e)| *e > 0).collect(),
        })
    }

    /// Exponent of `v` in this monomial.
    pub fn exponent(&self, v: &Indet) -> u32 {
        self.factors
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Monomial with `v` struck out entirely.
    fn without(&self, v: &Indet) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .filter(|(w, _)| w != v)
                .cloned()
                .collect(),
        }
    }
}

/// Graded lexicographic order: total degree first, then by exponent on the
/// earliest indeterminate where the monomials differ (larger exponent wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.factors.iter();
        let mut b = other.factors.iter();
        let (mut pa, mut pb) = (a.next(), b.next());
        loop {
            match (pa, pb) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    // self has a positive exponent on an earlier variable
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        pa = a.next();
                        pb = b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A normalized multivariate polynomial: terms sorted descending by the
/// monomial order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(Monomial, Rational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(rat(n))
    }

    /// The coordinate `x_i` (zero-based).
    pub fn coord(i: usize) -> Self {
        Scalar::indet(Indet::Coord(i as u32))
    }

    pub fn param(name: &str) -> Self {
        Scalar::indet(Indet::Param(name.into()))
    }

    /// A declared function symbol, i.e. the order-zero jet.
    pub fn symbol(name: &str) -> Self {
        Scalar::indet(Indet::Jet {
            symbol: name.into(),
            index: Box::new([]),
        })
    }

    /// Jet of `symbol` with the given coordinate multi-index.
    pub fn jet(symbol: &str, index: &[usize]) -> Self {
        Scalar::indet(Indet::jet(
            symbol.into(),
            index.iter().map(|&i| i as u32).collect(),
        ))
    }

    pub fn indet(v: Indet) -> Self {
        Scalar {
            terms: vec![(Monomial::indet(v), Rational::one())],
        }
    }

    /// Canonicalizing constructor: merges equal monomials, drops zeros, sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match map.entry(m) {
                Entry::Vacant(e) => {
                    e.insert(c);
                }
                Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().collect();
        terms.reverse();
        Scalar { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the scalar is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Partial derivative along coordinate `i` (zero-based). Coordinates
    /// differentiate polynomially, parameters to zero, and jets pick up one
    /// more index: `f_{,alpha} -> f_{,alpha i}`.
    pub fn differentiate(&self, i: usize) -> Scalar {
        let i = i as u32;
        let mut out: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            for (v, e) in m.factors() {
                let Some(dv) = v.derivative(i) else { continue };
                let coeff = c * rat(*e as i64);
                let mut base = m.without(v).factors().to_vec();
                if *e > 1 {
                    base.push((v.clone(), e - 1));
                }
                if let Some(w) = dv {
                    base.push((w, 1));
                }
                out.push((Monomial::from_factors(base), coeff));
            }
        }
        Scalar::from_terms(out)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact multivariate division: `Some(q)` with `self = q * d` when the
    /// division leaves no remainder.
    pub fn exact_div(&self, d: &Scalar) -> Option<Scalar> {
        assert!(!d.is_zero(), "division by the zero scalar");
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let (dm, dc) = d.leading_term().unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            quo.push((qm.clone(), qc.clone()));
            let piece = Scalar {
                terms: vec![(qm, qc)],
            };
            rem = &rem - &(&piece * d);
        }
        Some(Scalar::from_terms(quo))
    }

    /// Divide by the leading rational coefficient, returning (monic, lead).
    pub fn make_monic(&self) -> (Scalar, Rational) {
        match self.leading_term() {
            None => (Scalar::zero(), Rational::one()),
            Some((_, c)) => {
                let c = c.clone();
                let inv = Scalar::constant(c.recip());
                (&inv * self, c)
            }
        }
    }

    /// Names of all parameters and function symbols occurring in this scalar.
    pub fn collect_names(&self, out: &mut BTreeSet<Arc<str>>) {
        for (m, _) in &self.terms {
            for (v, _) in m.factors() {
                match v {
                    Indet::Coord(_) => {}
                    Indet::Param(name) => {
                        out.insert(name.clone());
                    }
                    Indet::Jet { symbol, .. } => {
                        out.insert(symbol.clone());
                    }
                }
            }
        }
    }

    /// Collect the coefficient scalars of each power of `v`, lowest first.
    /// The returned coefficients do not involve `v`.
    pub(crate) fn decompose(&self, v: &Indet) -> Vec<Scalar> {
        let deg = self
            .terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            out[e].push((m.without(v), c.clone()));
        }
        out.into_iter().map(Scalar::from_terms).collect()
    }

    /// Inverse of [`Scalar::decompose`].
    pub(crate) fn recompose(coeffs: &[Scalar], v: &Indet) -> Scalar {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, q) in &c.terms {
                let mut fs = m.factors().to_vec();
                if e > 0 {
                    fs.push((v.clone(), e as u32));
                }
                terms.push((Monomial::from_factors(fs), q.clone()));
            }
        }
        Scalar::from_terms(terms)
    }

    /// Smallest indeterminate occurring in the scalar, if any.
    pub(crate) fn smallest_indet(&self) -> Option<Indet> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.factors().iter().map(|(v, _)| v.clone()))
            .min()
    }

    /// Canonical printed form under the expression grammar. `coords` supplies
    /// coordinate names; missing entries fall back to `x1, x2, ...`.
    pub fn render(&self, coords: &[Arc<str>]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let ac = c.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !ac.is_one() || m.is_one() {
                pieces.push(render_rational(&ac));
            }
            for (v, e) in m.factors() {
                let name = render_indet(v, coords);
                if *e == 1 {
                    pieces.push(name);
                } else {
                    pieces.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&pieces.join("*"));
        }
        out
    }
}

fn render_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn coord_name(i: u32, coords: &[Arc<str>]) -> String {
    coords
        .get(i as usize)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("x{}", i + 1))
}

fn render_indet(v: &Indet, coords: &[Arc<str>]) -> String {
    match v {
        Indet::Coord(i) => coord_name(*i, coords),
        Indet::Param(name) => name.to_string(),
        Indet::Jet { symbol, index } => {
            if index.is_empty() {
                symbol.to_string()
            } else {
                let suffix: String = index.iter().map(|&i| coord_name(i, coords)).collect();
                format!("{symbol}_{suffix}")
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Deterministically pick `count` symbol names of the form `f1, f2, ...`
/// avoiding everything in `used`.
pub fn fresh_symbols(used: &BTreeSet<Arc<str>>, count: usize) -> Vec<Arc<str>> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1usize;
    while out.len() < count {
        let candidate: Arc<str> = format!("f{k}").into();
        if !used.contains(&candidate) {
            out.push(candidate);
        }
        k += 1;
    }
    out
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Scalar::from_terms(terms)
    }
}

macro_rules! forward_owned_ops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

forward_owned_ops!(Scalar);

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
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
    fn polynomial_derivative() {
        // d/dx (x y^2) = y^2
        let s = &x() * &(&y() * &y());
        assert_eq!(s.differentiate(0), &y() * &y());
        // d/dx (x^3) = 3 x^2
        let c = x().pow(3);
        assert_eq!(c.differentiate(0), &Scalar::int(3) * &x().pow(2));
    }

    #[test]
    fn jet_rule_and_symmetry() {
        let f = Scalar::symbol("f");
        assert_eq!(f.differentiate(0), Scalar::jet("f", &[0]));
        let fx = f.differentiate(0);
        let fxy = fx.differentiate(1);
        let fyx = f.differentiate(1).differentiate(0);
        assert_eq!(fxy, fyx);
        assert_eq!(fxy, Scalar::jet("f", &[0, 1]));
    }

    #[test]
    fn parameter_is_constant() {
        let s = &Scalar::param("lambda") * &x();
        assert_eq!(s.differentiate(0), Scalar::param("lambda"));
        assert!(Scalar::param("lambda").differentiate(0).is_zero());
    }

    #[test]
    fn grlex_order() {
        // x^2 > x*y > y^2 > x > y > 1
        let x2 = x().pow(2);
        let xy = &x() * &y();
        let y2 = y().pow(2);
        let seq = [x2, xy, y2, x(), y(), Scalar::one()];
        for w in seq.windows(2) {
            let a = w[0].leading_term().unwrap().0;
            let b = w[1].leading_term().unwrap().0;
            assert!(a > b, "{a:?} should exceed {b:?}");
        }
    }

    #[test]
    fn cancellation_and_canonical_form() {
        let s = &(&x() + &y()) - &(&y() + &x());
        assert!(s.is_zero());
        let t = Scalar::from_terms(vec![
            (Monomial::indet(Indet::Coord(0)), rat(2)),
            (Monomial::indet(Indet::Coord(0)), rat(-2)),
        ]);
        assert!(t.is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = p.exact_div(&(&x() + &y())).unwrap();
        assert_eq!(q, &x() - &y());
        assert!(p.exact_div(&(&x() + &Scalar::one())).is_none());
    }

    #[test]
    fn render_canonical() {
        let s = &(&Scalar::int(3) * &(&x() * &x())) - &(&ratio_s(1, 2) * &y());
        assert_eq!(s.render(&[]), "3*x1^2 - 1/2*x2");
        let names: Vec<Arc<str>> = vec!["x".into(), "y".into()];
        assert_eq!(s.render(&names), "3*x^2 - 1/2*y");
        let j = Scalar::jet("f", &[0, 0, 1]);
        assert_eq!(j.render(&names), "f_xxy");
    }

    fn ratio_s(n: i64, d: i64) -> Scalar {
        Scalar::constant(ratio(n, d))
    }
}
