//! Multivariate polynomial gcd by recursive content/primitive-part reduction
//! and a primitive pseudo-remainder sequence in the chosen main variable.
//!
//! The gcd is normalized so its leading rational coefficient is one; this is
//! the unit normalization used to keep rational functions canonical.

use super::{Indet, Scalar};

/// Normalized gcd of two scalars. `gcd(0, 0) = 0`; otherwise the result is
/// monic in the sense of a unit leading coefficient.
pub fn scalar_gcd(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        return b.make_monic().0;
    }
    if b.is_zero() {
        return a.make_monic().0;
    }
    let va = a.smallest_indet();
    let vb = b.smallest_indet();
    let v = match (va, vb) {
        // Both constants: any nonzero rational is a unit.
        (None, None) => return Scalar::one(),
        (Some(v), None) | (None, Some(v)) => {
            // One side is a nonzero constant, hence a unit.
            let _ = v;
            return Scalar::one();
        }
        (Some(va), Some(vb)) => va.min(vb),
    };
    if a.terms().iter().all(|(m, _)| m.exponent(&v) == 0) || b
        .terms()
        .iter()
        .all(|(m, _)| m.exponent(&v) == 0)
    {
        // One operand does not involve the main variable: gcd divides that
        // operand, so it reduces to the gcd with the other's content.
        let (free, mixed) = if a.terms().iter().all(|(m, _)| m.exponent(&v) == 0) {
            (a, b)
        } else {
            (b, a)
        };
        let (cont, _) = content_and_primitive(mixed, &v);
        return scalar_gcd(free, &cont);
    }

    let (cont_a, prim_a) = content_and_primitive(a, &v);
    let (cont_b, prim_b) = content_and_primitive(b, &v);
    let cont_gcd = scalar_gcd(&cont_a, &cont_b);
    let prim_gcd = primitive_prs(prim_a, prim_b, &v);
    (&cont_gcd * &prim_gcd).make_monic().0
}

/// Content (gcd of the coefficients in the main variable) and primitive part.
fn content_and_primitive(s: &Scalar, v: &Indet) -> (Scalar, Scalar) {
    let coeffs = s.decompose(v);
    let mut cont = Scalar::zero();
    for c in &coeffs {
        cont = scalar_gcd(&cont, c);
        if cont.is_one() {
            break;
        }
    }
    let prim = s
        .exact_div(&cont)
        .expect("content must divide the polynomial");
    (cont, prim)
}

/// Primitive pseudo-remainder sequence for two primitive polynomials in `v`.
fn primitive_prs(mut r0: Scalar, mut r1: Scalar, v: &Indet) -> Scalar {
    let deg = |s: &Scalar| s.decompose(v).len() as i64 - 1;
    if deg(&r0) < deg(&r1) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let rem = pseudo_rem(&r0, &r1, v);
        if rem.is_zero() {
            let (_, prim) = content_and_primitive(&r1, v);
            return prim;
        }
        if rem.terms().iter().all(|(m, _)| m.exponent(v) == 0) {
            // Degree-zero remainder: the gcd is free of v, and since the
            // inputs are primitive it is a unit.
            return Scalar::one();
        }
        let (_, prim) = content_and_primitive(&rem, v);
        r0 = r1;
        r1 = prim;
    }
}

/// Pseudo-remainder of `u` by `w` in the variable `v`:
/// `lc(w)^(deg u - deg w + 1) * u  mod  w`.
fn pseudo_rem(u: &Scalar, w: &Scalar, v: &Indet) -> Scalar {
    let wc = w.decompose(v);
    let dw = wc.len() - 1;
    let lw = wc.last().unwrap().clone();
    let mut uc = u.decompose(v);

    loop {
        while uc.last().map(|c| c.is_zero()).unwrap_or(false) {
            uc.pop();
        }
        let du = uc.len().saturating_sub(1);
        if uc.is_empty() || du < dw {
            return Scalar::recompose(&uc, v);
        }
        let lead = uc.last().unwrap().clone();
        // uc <- lw * uc - lead * w * v^(du - dw)
        for c in uc.iter_mut() {
            *c = &*c * &lw;
        }
        let shift = du - dw;
        for (k, wk) in wc.iter().enumerate() {
            uc[k + shift] = &uc[k + shift] - &(&lead * wk);
        }
        debug_assert!(uc.last().unwrap().is_zero());
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
    fn gcd_of_products() {
        let f = &x() + &y();
        let g = &x() - &y();
        let a = &f * &g;
        let b = &f * &f;
        assert_eq!(scalar_gcd(&a, &b), f);
    }

    #[test]
    fn coprime_gives_unit() {
        let a = &x() + &Scalar::one();
        let b = &y() + &Scalar::one();
        assert!(scalar_gcd(&a, &b).is_one());
    }

    #[test]
    fn content_is_extracted() {
        // gcd(2x^2 + 2xy, x^2 y + x y^2) = x*(x + y) up to a unit
        let f = &x() + &y();
        let a = &(&Scalar::int(2) * &x()) * &f;
        let b = &(&x() * &y()) * &f;
        let g = scalar_gcd(&a, &b);
        assert_eq!(g, &x() * &f);
    }

    #[test]
    fn gcd_with_jets() {
        let f = Scalar::symbol("f");
        let p = &f * &x();
        let q = &f * &y();
        assert_eq!(scalar_gcd(&p, &q), f);
    }

    #[test]
    fn zero_cases() {
        assert!(scalar_gcd(&Scalar::zero(), &Scalar::zero()).is_zero());
        let a = &Scalar::int(2) * &x();
        assert_eq!(scalar_gcd(&a, &Scalar::zero()), x());
    }
}
