//! Scalars for the two arithmetic modes.
//!
//! [`QComplex`] is either an exact rational or a complex number built from two
//! MPFR floats. Arithmetic never mixes the two; doing so is a logic error and
//! panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

/// Complex number with MPFR real and imaginary parts of equal precision.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: Float,
    pub im: Float,
}

impl BigComplex {
    pub fn new(re: Float, im: Float) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex::new(Float::with_val(prec, 0), Float::with_val(prec, 0))
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        BigComplex::new(Float::with_val(prec, r), Float::with_val(prec, 0))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        BigComplex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    fn add_ref(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        BigComplex::new(
            Float::with_val(p, &self.re + &o.re),
            Float::with_val(p, &self.im + &o.im),
        )
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        BigComplex::new(
            Float::with_val(p, &self.re - &o.re),
            Float::with_val(p, &self.im - &o.im),
        )
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let ad = Float::with_val(p, &self.re * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        BigComplex::new(ac - bd, ad + bc)
    }

    fn div_ref(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let den = Float::with_val(p, o.re.square_ref()) + Float::with_val(p, o.im.square_ref());
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        let ad = Float::with_val(p, &self.re * &o.im);
        BigComplex::new((ac + bd) / &den, (bc - ad) / &den)
    }

    fn neg_ref(&self) -> Self {
        BigComplex::new(-self.re.clone(), -self.im.clone())
    }

    /// Principal square root (branch cut along the negative real axis).
    pub fn sqrt(&self) -> Self {
        let p = self.prec();
        if self.is_zero() {
            return BigComplex::zero(p);
        }
        let r = self.abs();
        if self.re.cmp0() != Some(Ordering::Less) {
            let t = (Float::with_val(p, &r + &self.re) / 2u32).sqrt();
            let im = Float::with_val(p, &self.im / &t) / 2u32;
            BigComplex::new(t, im)
        } else {
            let t = (Float::with_val(p, &r - &self.re) / 2u32).sqrt();
            let re = Float::with_val(p, self.im.abs_ref()) / &t / 2u32;
            let im = if self.im.is_sign_negative() && !self.im.is_zero() {
                -t
            } else {
                t
            };
            BigComplex::new(re, im)
        }
    }
}

/// A scalar in the active arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum QComplex {
    Rational(Rational),
    Complex(BigComplex),
}

impl QComplex {
    pub fn is_exact(&self) -> bool {
        matches!(self, QComplex::Rational(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            QComplex::Rational(r) => r.cmp0() == Ordering::Equal,
            QComplex::Complex(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            QComplex::Rational(r) => *r == 1,
            QComplex::Complex(c) => c.re == 1 && c.im.is_zero(),
        }
    }

    /// The same-mode constant `v`.
    pub fn scalar_like(&self, v: i64) -> QComplex {
        match self {
            QComplex::Rational(_) => QComplex::Rational(Rational::from(v)),
            QComplex::Complex(c) => {
                let p = c.prec();
                QComplex::Complex(BigComplex::new(Float::with_val(p, v), Float::with_val(p, 0)))
            }
        }
    }

    /// Modulus as an MPFR float (128 bits for rationals).
    pub fn abs_float(&self) -> Float {
        match self {
            QComplex::Rational(r) => Float::with_val(128, r).abs(),
            QComplex::Complex(c) => c.abs(),
        }
    }

    /// Modulus in double precision; saturates to 0 or infinity.
    pub fn abs_f64(&self) -> f64 {
        self.abs_float().to_f64()
    }

    pub fn recip(&self) -> QComplex {
        self.scalar_like(1) / self
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, k: i64) -> QComplex {
        match self {
            QComplex::Rational(r) => {
                let e = i32::try_from(k).expect("exponent out of range");
                QComplex::Rational(Rational::from(r.pow(e)))
            }
            QComplex::Complex(_) => {
                let mut base = if k < 0 { self.recip() } else { self.clone() };
                let mut e = k.unsigned_abs();
                let mut acc = self.scalar_like(1);
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &base;
                    }
                    e >>= 1;
                    if e > 0 {
                        base = &base * &base;
                    }
                }
                acc
            }
        }
    }

    /// Principal square root; float mode only.
    pub fn sqrt(&self) -> Result<QComplex> {
        match self {
            QComplex::Rational(_) => Err(Error::UnsupportedMode {
                required: "high-precision-float",
            }),
            QComplex::Complex(c) => Ok(QComplex::Complex(c.sqrt())),
        }
    }

    /// `[re, im]` as strings: exact `p/q` for rationals, `digits` significant
    /// decimal digits for floats.
    pub fn to_strings(&self, digits: usize) -> [String; 2] {
        match self {
            QComplex::Rational(r) => [r.to_string(), "0".to_string()],
            QComplex::Complex(c) => [
                c.re.to_string_radix(10, Some(digits)),
                c.im.to_string_radix(10, Some(digits)),
            ],
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            QComplex::Rational(r) => Some(r),
            QComplex::Complex(_) => None,
        }
    }

    pub fn as_complex(&self) -> Option<&BigComplex> {
        match self {
            QComplex::Complex(c) => Some(c),
            QComplex::Rational(_) => None,
        }
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QComplex::Rational(r) => write!(f, "{r}"),
            QComplex::Complex(c) => {
                let digits = f.precision().unwrap_or(20);
                write!(
                    f,
                    "({} + {}i)",
                    c.re.to_string_radix(10, Some(digits)),
                    c.im.to_string_radix(10, Some(digits))
                )
            }
        }
    }
}

fn mixed() -> ! {
    panic!("mixed arithmetic modes in one computation")
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $cm:ident, $op:tt) => {
        impl<'a> $tr<&'a QComplex> for &'a QComplex {
            type Output = QComplex;
            fn $m(self, rhs: &'a QComplex) -> QComplex {
                match (self, rhs) {
                    (QComplex::Rational(a), QComplex::Rational(b)) => {
                        QComplex::Rational(Rational::from(a $op b))
                    }
                    (QComplex::Complex(a), QComplex::Complex(b)) => QComplex::Complex(a.$cm(b)),
                    _ => mixed(),
                }
            }
        }
        impl<'a> $tr<&'a QComplex> for QComplex {
            type Output = QComplex;
            fn $m(self, rhs: &'a QComplex) -> QComplex {
                (&self).$m(rhs)
            }
        }
        impl $tr<QComplex> for QComplex {
            type Output = QComplex;
            fn $m(self, rhs: QComplex) -> QComplex {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<QComplex> for &'a QComplex {
            type Output = QComplex;
            fn $m(self, rhs: QComplex) -> QComplex {
                self.$m(&rhs)
            }
        }
        impl<'a> $atr<&'a QComplex> for QComplex {
            fn $am(&mut self, rhs: &'a QComplex) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<QComplex> for QComplex {
            fn $am(&mut self, rhs: QComplex) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, add_ref, +);
binop!(Sub, sub, SubAssign, sub_assign, sub_ref, -);
binop!(Mul, mul, MulAssign, mul_assign, mul_ref, *);
binop!(Div, div, DivAssign, div_assign, div_ref, /);

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        match self {
            QComplex::Rational(r) => QComplex::Rational(Rational::from(-r)),
            QComplex::Complex(c) => QComplex::Complex(c.neg_ref()),
        }
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        -&self
    }
}

/// Parses an exact rational from `p/q`, an integer, or a decimal with an
/// optional exponent (`-1.25e-3`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.contains('/') {
        return s.parse::<Rational>().map_err(|_| bad());
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all = format!("{}{}", int_part, frac_part);
    let n: rug::Integer = all.parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = Rational::from(10);
    let mut r = Rational::from(n) * ten.pow(scale);
    if neg {
        r = -r;
    }
    Ok(r)
}

/// Parses a real number into a float of the given precision. Fractions
/// `p/q` are rounded once.
pub fn parse_float(s: &str, prec: u32) -> Result<Float> {
    let s = s.trim();
    if s.contains('/') {
        return Ok(Float::with_val(prec, parse_rational(s)?));
    }
    let parsed = Float::parse(s).map_err(|_| Error::Parse(format!("not a number: {s:?}")))?;
    Ok(Float::with_val(prec, parsed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> QComplex {
        QComplex::Complex(BigComplex::from_f64(re, im, 200))
    }

    #[test]
    fn parses_decimal_and_fraction_forms() {
        assert_eq!(parse_rational("1/3").unwrap(), Rational::from((1, 3)));
        assert_eq!(parse_rational("-0.25").unwrap(), Rational::from((-1, 4)));
        assert_eq!(parse_rational("1.5e2").unwrap(), Rational::from(150));
        assert_eq!(parse_rational("2e-1").unwrap(), Rational::from((1, 5)));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn complex_division_inverts_multiplication() {
        let a = c(0.3, -1.7);
        let b = c(-2.5, 0.4);
        let back = &(&a * &b) / &b;
        assert!((&back - &a).abs_f64() < 1e-55);
    }

    #[test]
    fn sqrt_is_principal() {
        let z = c(-4.0, 0.0);
        let r = z.sqrt().unwrap();
        let rc = r.as_complex().unwrap();
        assert!(rc.re.to_f64().abs() < 1e-60);
        assert!((rc.im.to_f64() - 2.0).abs() < 1e-60);
        let w = c(-3.0, -4.0);
        let s = w.sqrt().unwrap();
        let sc = s.as_complex().unwrap();
        assert!((sc.re.to_f64() - 1.0).abs() < 1e-15);
        assert!((sc.im.to_f64() + 2.0).abs() < 1e-15);
        assert!((&(&s * &s) - &w).abs_f64() < 1e-55);
    }

    #[test]
    fn powi_matches_repeated_products() {
        let z = c(0.6, 0.2);
        let p = z.powi(5);
        let direct = &(&(&(&z * &z) * &z) * &z) * &z;
        assert!((&p - &direct).abs_f64() < 1e-55);
        let inv = z.powi(-3);
        assert!((&(&inv * &z.powi(3)) - &z.scalar_like(1)).abs_f64() < 1e-55);
        let r = QComplex::Rational(Rational::from((2, 3)));
        assert_eq!(r.powi(-2), QComplex::Rational(Rational::from((9, 4))));
    }

    #[test]
    #[should_panic(expected = "mixed arithmetic")]
    fn mixing_modes_panics() {
        let _ = &c(1.0, 0.0) + &QComplex::Rational(Rational::from(1));
    }
}
