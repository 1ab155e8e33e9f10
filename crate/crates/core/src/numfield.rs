//! Exact arithmetic in ℚ(√5).
//!
//! Every coefficient in the crate is a [`QuadRat`], a pair of arbitrary
//! precision rationals `rat + irr·√5`. Both components are always kept in
//! lowest terms with positive denominators (the `num-rational` invariant), so
//! equality is structural.
//!
//! The text form is `<rat>`, `<rat>*r5` or `<rat>(+|-)<rat>*r5`, where
//! `<rat> = [-]digits[/digits]`:
//!
//! ```
//! use quintic_core::numfield::QuadRat;
//! let x: QuadRat = "3/2-1/5*r5".parse().unwrap();
//! assert_eq!(x.to_string(), "3/2-1/5*r5");
//! assert_eq!((x.clone() * x.conj()).to_string(), "41/20");
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Operations shared by every coefficient domain used in matrices and
/// group computations: [`QuadRat`] for exact numeric work and
/// [`RatFunc`](crate::symca::RatFunc) for symbolic work.
pub trait Field: Clone + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn recip(&self) -> Result<Self>;

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.times(&other.recip()?))
    }

    /// Mathematical equality (may be more expensive than structural `==`).
    fn equals(&self, other: &Self) -> bool {
        self.minus(other).is_zero()
    }

    fn is_one(&self) -> bool {
        self.equals(&Self::one())
    }

    /// Rough size, used to prefer cheap pivots during elimination.
    fn weight(&self) -> usize {
        1
    }

    fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.times(&base);
        }
        Ok(acc)
    }
}

/// An element `rat + irr·√5` of ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadRat {
    pub rat: BigRational,
    pub irr: BigRational,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl QuadRat {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        QuadRat { rat, irr }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        QuadRat {
            rat,
            irr: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(rational(num, den))
    }

    /// `(a + b√5)` with small integer parts.
    pub fn from_parts(a: (i64, i64), b: (i64, i64)) -> Self {
        QuadRat::new(rational(a.0, a.1), rational(b.0, b.1))
    }

    pub fn sqrt5() -> Self {
        QuadRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        QuadRat::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadRat::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `rat² − 5·irr²`.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(5.into()) * &self.irr * &self.irr
    }

    /// Conjugate and norm, so that `a⁻¹ = conj(a) / norm(a)`.
    pub fn inv_norm(&self) -> Result<(QuadRat, BigRational)> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero in Q(sqrt5)".into()));
        }
        Ok((self.conj(), self.norm()))
    }

    pub fn inv(&self) -> Result<QuadRat> {
        let (c, n) = self.inv_norm()?;
        Ok(QuadRat::new(c.rat / &n, c.irr / n))
    }

    pub fn checked_div(&self, other: &QuadRat) -> Result<QuadRat> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> QuadRat {
        QuadRat::new(&self.rat * r, &self.irr * r)
    }

    pub fn pow(&self, e: u32) -> QuadRat {
        let mut acc = QuadRat::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Square root inside ℚ(√5), if one exists. The root whose first nonzero
    /// component is positive is returned.
    pub fn sqrt(&self) -> Option<QuadRat> {
        if self.is_zero() {
            return Some(QuadRat::zero());
        }
        // (x + y√5)² = a + b√5  ⇔  x² + 5y² = a, 2xy = b; so x² is a root of
        // X² − aX + 5b²/4 = 0, i.e. x² = (a ± √norm)/2.
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        for cand in [(&self.rat + &n) / &two, (&self.rat - &n) / &two] {
            if cand.is_negative() {
                continue;
            }
            let Some(x) = rational_sqrt(&cand) else {
                continue;
            };
            let root = if x.is_zero() {
                // a + 0√5 with a = 5y²
                let y2 = &self.rat / BigRational::from_integer(5.into());
                match rational_sqrt(&y2) {
                    Some(y) if self.irr.is_zero() => QuadRat::new(BigRational::zero(), y),
                    _ => continue,
                }
            } else {
                let y = &self.irr / (&two * &x);
                QuadRat::new(x, y)
            };
            if &(&root * &root) == self {
                return Some(root.canonical_sign());
            }
        }
        None
    }

    fn canonical_sign(self) -> QuadRat {
        if self.rat.is_negative() || (self.rat.is_zero() && self.irr.is_negative()) {
            -self
        } else {
            self
        }
    }

    /// Exact real `n`-th root of a rational element, if it is rational.
    pub fn rational_root(&self, n: u32) -> Option<QuadRat> {
        if !self.is_rational() {
            return None;
        }
        let r = &self.rat;
        if r.is_negative() && n % 2 == 0 {
            return None;
        }
        let num = exact_int_root(r.numer(), n)?;
        let den = exact_int_root(r.denom(), n)?;
        Some(QuadRat::from_rational(BigRational::new(num, den)))
    }

    /// Approximate value, only for diagnostics.
    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64().unwrap_or(f64::NAN) + self.irr.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_int_root(r.numer(), 2)?;
    let d = exact_int_root(r.denom(), 2)?;
    Some(BigRational::new(n, d))
}

impl Field for QuadRat {
    fn zero() -> Self {
        QuadRat::zero()
    }
    fn one() -> Self {
        QuadRat::one()
    }
    fn from_i64(n: i64) -> Self {
        QuadRat::from_int(n)
    }
    fn is_zero(&self) -> bool {
        QuadRat::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn recip(&self) -> Result<Self> {
        QuadRat::inv(self)
    }
    fn equals(&self, other: &Self) -> bool {
        self == other
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        QuadRat::from_int(n)
    }
}

impl From<BigRational> for QuadRat {
    fn from(r: BigRational) -> Self {
        QuadRat::from_rational(r)
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.rat + &o.rat, &self.irr + &o.irr)
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, o: &QuadRat) -> QuadRat {
        QuadRat::new(&self.rat - &o.rat, &self.irr - &o.irr)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, o: &QuadRat) -> QuadRat {
        if self.irr.is_zero() && o.irr.is_zero() {
            return QuadRat::from_rational(&self.rat * &o.rat);
        }
        let five = BigRational::from_integer(5.into());
        QuadRat::new(
            &self.rat * &o.rat + five * &self.irr * &o.irr,
            &self.rat * &o.irr + &self.irr * &o.rat,
        )
    }
}

/// Panics on division by zero, like the primitive numeric types; use
/// [`QuadRat::checked_div`] when the divisor may vanish.
impl<'a> Div<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn div(self, o: &QuadRat) -> QuadRat {
        self.checked_div(o).expect("division by zero in Q(sqrt5)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, o: QuadRat) -> QuadRat { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, o: &QuadRat) -> QuadRat { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&QuadRat> for QuadRat {
    fn add_assign(&mut self, o: &QuadRat) {
        self.rat += &o.rat;
        self.irr += &o.irr;
    }
}

impl SubAssign<&QuadRat> for QuadRat {
    fn sub_assign(&mut self, o: &QuadRat) {
        self.rat -= &o.rat;
        self.irr -= &o.irr;
    }
}

impl MulAssign<&QuadRat> for QuadRat {
    fn mul_assign(&mut self, o: &QuadRat) {
        *self = &*self * o;
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-self.rat, -self.irr)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat::new(-&self.rat, -&self.irr)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.rat)),
            (true, false) => write!(f, "{}*r5", fmt_rat(&self.irr)),
            (false, false) => {
                let sign = if self.irr.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*r5", fmt_rat(&self.rat), sign, fmt_rat(&self.irr.abs()))
            }
        }
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: format!("{msg} in {:?}", self.text),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    /// `[-]digits[/digits]`
    fn rat(&mut self) -> Result<BigRational> {
        let neg = self.eat("-");
        let num = self.digits()?;
        let den = if self.eat("/") {
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        let r = BigRational::new(num, den);
        Ok(if neg { -r } else { r })
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let mut c = Cursor { text, pos: 0 };
    c.skip_ws();
    let r = c.rat()?;
    c.skip_ws();
    if c.pos != text.len() {
        return Err(c.err("trailing characters"));
    }
    Ok(r)
}

pub fn format_rational(r: &BigRational) -> String {
    fmt_rat(r)
}

impl FromStr for QuadRat {
    type Err = Error;

    fn from_str(text: &str) -> Result<QuadRat> {
        let mut c = Cursor { text, pos: 0 };
        c.skip_ws();
        let first = c.rat()?;
        c.skip_ws();
        if c.eat("*r5") {
            c.skip_ws();
            if c.pos != text.len() {
                return Err(c.err("trailing characters"));
            }
            return Ok(QuadRat::new(BigRational::zero(), first));
        }
        if c.pos == text.len() {
            return Ok(QuadRat::from_rational(first));
        }
        let neg = if c.eat("+") {
            false
        } else if c.eat("-") {
            true
        } else {
            return Err(c.err("expected '+' or '-'"));
        };
        c.skip_ws();
        if c.peek() == Some('-') {
            return Err(c.err("unexpected sign"));
        }
        let irr = c.rat()?;
        c.skip_ws();
        if !c.eat("*r5") {
            return Err(c.err("expected '*r5'"));
        }
        c.skip_ws();
        if c.pos != text.len() {
            return Err(c.err("trailing characters"));
        }
        Ok(QuadRat::new(first, if neg { -irr } else { irr }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadRat {
        s.parse().unwrap()
    }

    #[test]
    fn sqrt5_squared_is_five() {
        let r5 = QuadRat::sqrt5();
        assert_eq!(&r5 * &r5, QuadRat::from_int(5));
    }

    #[test]
    fn rationalizes_inverse_of_sqrt5() {
        assert_eq!(QuadRat::one() / QuadRat::sqrt5(), q("1/5*r5"));
    }

    #[test]
    fn norm_form() {
        assert_eq!(q("1+1*r5") * q("1-1*r5"), QuadRat::from_int(-4));
    }

    #[test]
    fn inv_norm_examples() {
        let (c, n) = QuadRat::from_int(2).inv_norm().unwrap();
        assert_eq!((c, n), (QuadRat::from_int(2), rational(4, 1)));
        let (c, n) = QuadRat::sqrt5().inv_norm().unwrap();
        assert_eq!((c, n), (q("-1*r5"), rational(-5, 1)));
        let (c, n) = q("3+1*r5").inv_norm().unwrap();
        assert_eq!((c, n), (q("3-1*r5"), rational(4, 1)));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(QuadRat::zero().inv(), Err(Error::DivisionByZero(_))));
        assert!(QuadRat::one().checked_div(&QuadRat::zero()).is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(q("1/5*r5"), QuadRat::new(BigRational::zero(), rational(1, 5)));
        assert_eq!(q("-25"), QuadRat::from_int(-25));
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q(" 2 - 3/6*r5 ").to_string(), "2-1/2*r5");
        assert_eq!(q("-1/5*r5").to_string(), "-1/5*r5");
    }

    #[test]
    fn parse_errors_carry_position() {
        for (text, pos) in [("", 0), ("1/", 2), ("1+2", 3), ("1*r4", 1), ("1/0", 2), ("3 x", 2)] {
            match text.parse::<QuadRat>() {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn square_roots() {
        assert_eq!(QuadRat::from_int(9).sqrt(), Some(QuadRat::from_int(3)));
        assert_eq!(QuadRat::from_int(5).sqrt(), Some(QuadRat::sqrt5()));
        assert_eq!(QuadRat::frac(1, 5).sqrt(), Some(q("1/5*r5")));
        // (2 + √5)² = 9 + 4√5
        assert_eq!(q("9+4*r5").sqrt(), Some(q("2+1*r5")));
        // ±(1 - 2√5) square to 21 - 4√5; the positive-rational-part root wins
        assert_eq!(q("21-4*r5").sqrt(), Some(q("1-2*r5")));
        assert_eq!(q("21+4*r5").sqrt().unwrap().to_string(), "1+2*r5");
        assert_eq!(QuadRat::from_int(2).sqrt(), None);
        assert_eq!(QuadRat::from_int(-4).sqrt(), None);
    }

    #[test]
    fn rational_roots() {
        assert_eq!(QuadRat::from_int(-1).rational_root(3), Some(QuadRat::from_int(-1)));
        assert_eq!(QuadRat::frac(-8, 27).rational_root(3), Some(QuadRat::frac(-2, 3)));
        assert_eq!(QuadRat::from_int(2).rational_root(3), None);
        assert_eq!(QuadRat::sqrt5().rational_root(3), None);
    }
}
