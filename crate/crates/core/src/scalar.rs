//! Two-level scalar tower: exact complex rationals with a floating-point
//! escape hatch.
//!
//! Convolution, star, expectations and structure constants stay exact as long
//! as every operand is exact. Any arithmetic touching an approximate value
//! demotes the result to `Approx` (complex `f64`). Equality is exact between
//! two exact scalars and tolerance-based otherwise.

use num::complex::Complex64;
use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

#[derive(Clone, Debug)]
pub enum Scalar {
    /// re + im·i with exact rational parts.
    Exact(Rational, Rational),
    Approx(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::Exact(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar::Exact(re, Rational::zero())
    }

    pub fn from_parts(re: Rational, im: Rational) -> Self {
        Scalar::Exact(re, im)
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(..))
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(re, im) => Complex64::new(
                re.to_f64().unwrap_or(f64::NAN),
                im.to_f64().unwrap_or(f64::NAN),
            ),
            Scalar::Approx(z) => *z,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact(re, im) => Scalar::Exact(re.clone(), -im.clone()),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    /// |z|², exact when the scalar is exact.
    pub fn norm_sqr(&self) -> Scalar {
        match self {
            Scalar::Exact(re, im) => Scalar::Exact(re * re + im * im, Rational::zero()),
            Scalar::Approx(z) => Scalar::Approx(Complex64::new(z.norm_sqr(), 0.0)),
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_complex().norm()
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Exact(re, im) => Scalar::Exact(re * c, im * c),
            Scalar::Approx(z) => Scalar::Approx(z * c.to_f64().unwrap_or(f64::NAN)),
        }
    }

    /// Division by a nonzero rational; exactness is preserved.
    pub fn div_rational(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Exact(re, im) => Scalar::Exact(re / c, im / c),
            Scalar::Approx(z) => Scalar::Approx(z / c.to_f64().unwrap_or(f64::NAN)),
        }
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        match self {
            Scalar::Exact(re, im) => re.is_zero() && im.is_zero(),
            Scalar::Approx(z) => z.norm() <= tol,
        }
    }

    /// Exact comparison when both sides are exact, absolute tolerance
    /// otherwise.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Exact(ar, ai), Scalar::Exact(br, bi)) => ar == br && ai == bi,
            _ => (self.to_complex() - other.to_complex()).norm() <= tol,
        }
    }

    /// The exact rational parts, if this scalar is exact.
    pub fn exact_parts(&self) -> Option<(&Rational, &Rational)> {
        match self {
            Scalar::Exact(re, im) => Some((re, im)),
            Scalar::Approx(_) => None,
        }
    }

    /// Exact real part, if this scalar is exact and purely real.
    pub fn exact_real(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(re, im) if im.is_zero() => Some(re),
            _ => None,
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Exact(re, im) => {
                if im.is_zero() {
                    write!(f, "{re}")
                } else if im.is_negative() {
                    write!(f, "{re}-{}i", -im.clone())
                } else {
                    write!(f, "{re}+{im}i")
                }
            }
            Scalar::Approx(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else if z.im < 0.0 {
                    write!(f, "{}-{}i", z.re, -z.im)
                } else {
                    write!(f, "{}+{}i", z.re, z.im)
                }
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(ar, ai), Scalar::Exact(br, bi)) => {
                        scalar_binop!(@exact $op, ar, ai, br, bi)
                    }
                    _ => Scalar::Approx(self.to_complex() $op rhs.to_complex()),
                }
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
    (@exact +, $ar:ident, $ai:ident, $br:ident, $bi:ident) => {
        Scalar::Exact($ar + $br, $ai + $bi)
    };
    (@exact -, $ar:ident, $ai:ident, $br:ident, $bi:ident) => {
        Scalar::Exact($ar - $br, $ai - $bi)
    };
    (@exact *, $ar:ident, $ai:ident, $br:ident, $bi:ident) => {
        Scalar::Exact($ar * $br - $ai * $bi, $ar * $bi + $ai * $br)
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(re, im) => Scalar::Exact(-re.clone(), -im.clone()),
            Scalar::Approx(z) => Scalar::Approx(-z),
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    text.trim().parse::<Rational>().ok()
}

/// Best rational p/q with q ≤ `max_denominator` within `tol` of `x`, if any.
///
/// Denominators are scanned in increasing order, so the reconstruction is
/// canonical (smallest denominator wins).
pub fn rational_from_f64(x: f64, max_denominator: u64, tol: f64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    for q in 1..=max_denominator {
        let p = (x * q as f64).round();
        if (x - p / q as f64).abs() <= tol {
            return Some(Rational::new(
                BigInt::from(p as i64),
                BigInt::from(q as i64),
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_exact() {
        let a = Scalar::from_parts(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 3.into()),
        );
        let b = Scalar::from_parts(
            Rational::new(1.into(), 5.into()),
            Rational::new((-2).into(), 7.into()),
        );
        let p = &a * &b;
        assert!(p.is_exact());
        // (1/2 + i/3)(1/5 - 2i/7) = 1/10 + 2/21 + i(1/15 - 1/7)
        let expect = Scalar::from_parts(
            Rational::new(1.into(), 10.into()) + Rational::new(2.into(), 21.into()),
            Rational::new(1.into(), 15.into()) - Rational::new(1.into(), 7.into()),
        );
        assert!(p.approx_eq(&expect, 0.0));
    }

    #[test]
    fn mixed_arithmetic_demotes() {
        let a = Scalar::from_integer(2);
        let b = Scalar::from_f64(0.5, 0.0);
        assert!(!(&a * &b).is_exact());
        assert!((&a * &b).approx_eq(&Scalar::one(), 1e-15));
    }

    #[test]
    fn conjugation_and_norm() {
        let a = Scalar::from_parts(Rational::from_integer(3.into()), Rational::from_integer(4.into()));
        assert!(a.norm_sqr().approx_eq(&Scalar::from_integer(25), 0.0));
        assert!((&a.conj() + &a).approx_eq(&Scalar::from_integer(6), 0.0));
    }

    #[test]
    fn rational_reconstruction() {
        let r = rational_from_f64(1.0 / 3.0, 12, 1e-9).unwrap();
        assert_eq!(r, Rational::new(1.into(), 3.into()));
        assert_eq!(rational_from_f64(0.0, 12, 1e-9).unwrap(), Rational::zero());
        assert!(rational_from_f64(std::f64::consts::PI, 4, 1e-9).is_none());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(
            parse_rational("-3/4").unwrap(),
            Rational::new((-3).into(), 4.into())
        );
        assert_eq!(parse_rational("5").unwrap(), Rational::from_integer(5.into()));
        assert!(parse_rational("a/b").is_none());
    }
}
