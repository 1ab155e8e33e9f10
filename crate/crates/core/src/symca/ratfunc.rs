use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numfield::{Field, QuadRat};

use super::poly::{Monomial, Poly};
use super::Var;

/// A quotient `num / (mono · den)`.
///
/// Normal form: `den` is monic and free of monomial factors, `num` and
/// `mono` share no variable, and `num` is not divisible by `den` nor by the
/// discriminant `s0¹⁰ − s4¹⁰` when `den` is. This is not a canonical form in
/// general; [`RatFunc::equals`] decides equality by cross-multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    mono: Monomial,
    den: Poly,
}

fn discriminant() -> Poly {
    Poly::var(Var::s(0)).pow(10).minus(&Poly::var(Var::s(4)).pow(10))
}

thread_local! {
    static DISC: Poly = discriminant();
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            mono: Monomial::one(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(QuadRat::one())
    }

    pub fn constant(c: QuadRat) -> Self {
        RatFunc {
            num: Poly::constant(c),
            ..Self::zero()
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(QuadRat::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::constant(QuadRat::frac(n, d))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn s(i: usize) -> Self {
        Self::var(Var::s(i))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, ..Self::zero() }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        Ok(Self::normalize(num, Monomial::one(), den))
    }

    /// Numerator and full denominator.
    pub fn parts(&self) -> (Poly, Poly) {
        (self.num.clone(), self.den.mul_monomial(&self.mono))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom_monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn denom_poly(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.mono.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<QuadRat> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Rough size, used to pick cheap pivots.
    pub fn size(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.num.depends_on(v) || self.mono.exp(v) > 0 || self.den.depends_on(v)
    }

    fn normalize(num: Poly, mono: Monomial, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dc = den.monomial_content();
        let (mut den, mut mono) = if dc.is_one() {
            (den, mono)
        } else {
            (den.div_monomial(&dc), mono.times(&dc))
        };
        let g = num.monomial_content().gcd(&mono);
        let mut num = if g.is_one() {
            num
        } else {
            mono = mono.div(&g).unwrap();
            num.div_monomial(&g)
        };
        if den.as_constant().is_none() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = Poly::one();
            } else {
                DISC.with(|d| {
                    while let Some(dq) = den.div_exact(d) {
                        match num.div_exact(d) {
                            Some(nq) => {
                                num = nq;
                                den = dq;
                            }
                            None => break,
                        }
                    }
                });
            }
        }
        let lc = den.leading_coeff();
        if lc != QuadRat::one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, mono, den }
    }

    pub fn plus(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let l = self.mono.lcm(&o.mono);
        let a = self.num.mul_monomial(&l.div(&self.mono).unwrap());
        let b = o.num.mul_monomial(&l.div(&o.mono).unwrap());
        if self.den == o.den {
            return Self::normalize(a.plus(&b), l, self.den.clone());
        }
        if self.den.num_terms() <= o.den.num_terms() {
            if let Some(e) = o.den.div_exact(&self.den) {
                return Self::normalize(a.times(&e).plus(&b), l, o.den.clone());
            }
        } else if let Some(e) = self.den.div_exact(&o.den) {
            return Self::normalize(a.plus(&b.times(&e)), l, self.den.clone());
        }
        Self::normalize(a.times(&o.den).plus(&b.times(&self.den)), l, self.den.times(&o.den))
    }

    pub fn negated(&self) -> Self {
        RatFunc {
            num: self.num.negated(),
            ..self.clone()
        }
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    pub fn scale(&self, c: &QuadRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            ..self.clone()
        }
    }

    pub fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        let (mut n1, mut d1) = (self.num.clone(), self.den.clone());
        let (mut n2, mut d2) = (o.num.clone(), o.den.clone());
        if !d1.is_one() {
            if let Some(q) = n2.div_exact(&d1) {
                n2 = q;
                d1 = Poly::one();
            }
        }
        if !d2.is_one() {
            if let Some(q) = n1.div_exact(&d2) {
                n1 = q;
                d2 = Poly::one();
            }
        }
        Self::normalize(n1.times(&n2), self.mono.times(&o.mono), d1.times(&d2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of the zero rational function".into()));
        }
        Ok(Self::normalize(self.den.mul_monomial(&self.mono), Monomial::one(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self.times(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let e = e.unsigned_abs();
        RatFunc {
            num: base.num.pow(e),
            mono: Monomial::one(),
            den: Poly::one(),
        }
        .times(&RatFunc {
            num: Poly::one(),
            mono: mono_pow(&base.mono, e),
            den: base.den.pow(e),
        })
    }

    /// Mathematical equality by cross-multiplication.
    pub fn equals(&self, o: &Self) -> bool {
        if self == o {
            return true;
        }
        let (n1, d1) = self.parts();
        let (n2, d2) = o.parts();
        n1.times(&d2) == n2.times(&d1)
    }

    /// Partial derivative by the quotient rule.
    pub fn diff(&self, v: Var) -> Self {
        let dn = self.num.diff(v);
        let e = self.mono.exp(v) as i64;
        let dd = self.den.diff(v);
        if e == 0 && dd.is_zero() {
            return RatFunc { num: dn, ..self.clone() }.renormalized();
        }
        let x = Poly::var(v);
        if dd.is_zero() {
            // (n'·v − e·n) / (v · mono · den)
            let num = dn.times(&x).minus(&self.num.scale(&QuadRat::from_int(e)));
            return Self::normalize(num, self.mono.times(&Monomial::var(v, 1)), self.den.clone());
        }
        // (n'·v·P − n·(e·P + v·P')) / (v · mono · P²)
        let num = dn
            .times(&x)
            .times(&self.den)
            .minus(&self.num.times(&self.den.scale(&QuadRat::from_int(e)).plus(&x.times(&dd))));
        Self::normalize(num, self.mono.times(&Monomial::var(v, 1)), self.den.times(&self.den))
    }

    fn renormalized(self) -> Self {
        Self::normalize(self.num, self.mono, self.den)
    }

    /// Value at a point; every variable present must be bound.
    pub fn eval(&self, point: &BTreeMap<Var, QuadRat>) -> Result<QuadRat> {
        let n = self.num.substitute_scalars(point);
        let d = self.den.mul_monomial(&self.mono).substitute_scalars(point);
        let (Some(n), Some(d)) = (n.as_constant(), d.as_constant()) else {
            return Err(Error::Evaluation(format!("unbound variables in {self}")));
        };
        n.checked_div(&d)
            .map_err(|_| Error::Evaluation(format!("denominator of {self} vanishes at the point")))
    }

    /// Substitutes scalar values for some variables, keeping the rest symbolic.
    pub fn substitute_scalars(&self, values: &BTreeMap<Var, QuadRat>) -> Result<Self> {
        let d = self.den.mul_monomial(&self.mono).substitute_scalars(values);
        if d.is_zero() {
            return Err(Error::Evaluation(format!("denominator of {self} vanishes")));
        }
        Ok(Self::normalize(self.num.substitute_scalars(values), Monomial::one(), d))
    }

    /// Substitutes rational functions for variables.
    pub fn substitute(&self, values: &BTreeMap<Var, RatFunc>) -> Result<Self> {
        let n = subst_poly(&self.num, values);
        let d = subst_poly(&self.den.mul_monomial(&self.mono), values);
        if d.is_zero() {
            return Err(Error::Evaluation(format!("denominator of {self} vanishes after substitution")));
        }
        n.checked_div(&d)
    }
}

fn mono_pow(m: &Monomial, e: u32) -> Monomial {
    let mut r = Monomial::one();
    for _ in 0..e {
        r = r.times(m);
    }
    r
}

fn subst_poly(p: &Poly, values: &BTreeMap<Var, RatFunc>) -> RatFunc {
    let mut powers: BTreeMap<(Var, u16), RatFunc> = BTreeMap::new();
    let mut acc = RatFunc::zero();
    let mut poly_rest = Poly::zero();
    for (m, c) in p.terms() {
        let mut t = RatFunc::constant(c.clone());
        let mut rest = m.clone();
        for (v, e) in m.vars() {
            if let Some(x) = values.get(&v) {
                let pw = powers.entry((v, e)).or_insert_with(|| x.pow(e as i32)).clone();
                t = t.times(&pw);
                rest = rest.without(v);
            }
        }
        if t.is_polynomial() {
            poly_rest = poly_rest.plus(&t.num.mul_monomial(&rest));
        } else {
            acc = acc.plus(&t.times(&RatFunc::from_poly(Poly::term(rest, QuadRat::one()))));
        }
    }
    acc.plus(&RatFunc::from_poly(poly_rest))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::int(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        RatFunc::plus(self, o)
    }
    fn minus(&self, o: &Self) -> Self {
        RatFunc::minus(self, o)
    }
    fn times(&self, o: &Self) -> Self {
        RatFunc::times(self, o)
    }
    fn negated(&self) -> Self {
        RatFunc::negated(self)
    }
    fn recip(&self) -> Result<Self> {
        self.inv()
    }
    fn equals(&self, o: &Self) -> bool {
        RatFunc::equals(self, o)
    }
    fn weight(&self) -> usize {
        self.size()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let full = self.den.mul_monomial(&self.mono);
        if full.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.num_terms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        if full.num_terms() > 1 || !self.den.is_one() {
            write!(f, "{n}/({full})")
        } else {
            write!(f, "{n}/{full}")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<QuadRat> for RatFunc {
    fn from(c: QuadRat) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

macro_rules! rf_ops {
    ($($tr:ident $m:ident $f:expr),*) => {$(
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc { $f(self, o) }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { $f(&self, &o) }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc { $f(&self, o) }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { $f(self, &o) }
        }
    )*};
}

/// Panics on division by the zero function; use [`RatFunc::checked_div`]
/// when the divisor may vanish.
fn rf_div(a: &RatFunc, b: &RatFunc) -> RatFunc {
    a.checked_div(b).expect("division by the zero rational function")
}

rf_ops!(Add add RatFunc::plus, Sub sub RatFunc::minus, Mul mul RatFunc::times, Div div rf_div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::negated(&self)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::negated(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> RatFunc {
        RatFunc::s(i)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!((&s(0) * &s(0)).to_string(), "s0^2");
        let lhs = (s(0).pow(2) - s(4).pow(2)) / (s(0) - s(4));
        assert!(lhs.equals(&(s(0) + s(4))));
        let r = s(5).inv().unwrap();
        assert_eq!((&r + &r).to_string(), "2/s5");
        assert!(s(0).checked_div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn derivative_examples() {
        let v0 = Var::s(0);
        assert_eq!(s(0).pow(2).diff(v0).to_string(), "2*s0");
        let z = s(4).pow(10) / s(0).pow(10);
        assert!(z.diff(v0).equals(&(RatFunc::int(-10) * s(4).pow(10) / s(0).pow(11))));
        assert!(s(5).inv().unwrap().diff(Var::s(5)).equals(&(RatFunc::int(-1) / s(5).pow(2))));
        let d = s(0).pow(10) - s(4).pow(10);
        let f = s(1) / d.clone();
        let df = f.diff(v0);
        let expect = RatFunc::int(-10) * s(1) * s(0).pow(9) / d.pow(2);
        assert!(df.equals(&expect));
    }

    #[test]
    fn cancellation() {
        let d = s(0).pow(10) - s(4).pow(10);
        let f = (d.clone() * s(3)) / (d.clone() * s(5));
        assert_eq!(f.to_string(), "s3/s5");
        let g = (s(0).pow(3) * s(2)) / (s(0) * s(2).pow(2));
        assert_eq!(g.to_string(), "s0^2/s2");
        let h = RatFunc::int(3) / (RatFunc::int(2) * s(0) - RatFunc::int(4) * s(4));
        assert_eq!(h.denom_poly().leading_coeff(), QuadRat::one());
    }

    #[test]
    fn evaluation_and_substitution() {
        let f = (s(0) + s(1)) / s(5);
        let mut pt = BTreeMap::new();
        pt.insert(Var::s(0), QuadRat::sqrt5());
        pt.insert(Var::s(1), QuadRat::from_int(1));
        pt.insert(Var::s(5), QuadRat::from_int(2));
        assert_eq!(f.eval(&pt).unwrap().to_string(), "1/2+1/2*r5");
        pt.insert(Var::s(5), QuadRat::zero());
        assert!(f.eval(&pt).is_err());
        let mut sub = BTreeMap::new();
        sub.insert(Var::s(1), s(0) * s(0));
        sub.insert(Var::s(5), s(0));
        assert!(f.substitute(&sub).unwrap().equals(&(RatFunc::one() + s(0))));
    }
}
