use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::numfield::QuadRat;

use super::{Var, NVARS};

/// Exponent vector over the registered symbols, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u16; NVARS]);

impl Default for Monomial {
    fn default() -> Self {
        Monomial([0; NVARS])
    }
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn times(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        r
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if !o.divides(self) {
            return None;
        }
        let mut r = self.clone();
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a -= b;
        }
        Some(r)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).min(*b);
        }
        r
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    /// Same monomial with `v` removed.
    pub fn without(&self, v: Var) -> Self {
        let mut r = self.clone();
        r.0[v.index()] = 0;
        r
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::all().filter_map(|v| {
            let e = self.exp(v);
            (e > 0).then_some((v, e))
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, QuadRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QuadRat::one())
    }

    pub fn constant(c: QuadRat) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: QuadRat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), QuadRat::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, QuadRat)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: QuadRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &QuadRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c == QuadRat::one())
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<QuadRat> {
        match self.terms.len() {
            0 => Some(QuadRat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &QuadRat)> {
        self.terms.last_key_value()
    }

    pub fn leading_coeff(&self) -> QuadRat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn coeff(&self, m: &Monomial) -> QuadRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::all().filter(|&v| self.depends_on(v)).collect()
    }

    /// Largest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub fn scale(&self, c: &QuadRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self.terms.iter().map(|(k, a)| (k.times(m), a.clone())).collect(),
        }
    }

    /// Exact division by a monomial; panics if it does not divide.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.div(m).expect("monomial does not divide polynomial"), a.clone()))
                .collect(),
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let (mut big, small) = if self.terms.len() >= o.terms.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn negated(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
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
        let mut acc: std::collections::HashMap<Monomial, QuadRat> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let c = ca * cb;
                acc.entry(ma.times(mb))
                    .and_modify(|x| *x += &c)
                    .or_insert(c);
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Partial derivative.
    pub fn diff(&self, v: Var) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[v.index()] -= 1;
            r.add_term(k, c * &QuadRat::from_int(e as i64));
        }
        r
    }

    fn max_degrees(&self) -> [u16; NVARS] {
        let mut d = [0u16; NVARS];
        for m in self.terms.keys() {
            for (a, b) in d.iter_mut().zip(m.0.iter()) {
                *a = (*a).max(*b);
            }
        }
        d
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (lm_d, lc_d) = d.leading()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv().ok()?));
        }
        let (da, dd) = (self.max_degrees(), d.max_degrees());
        if da.iter().zip(dd.iter()).any(|(a, b)| a < b) {
            return None;
        }
        let lc_inv = lc_d.inv().ok()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((lm_r, lc_r)) = r.leading() {
            let m = lm_r.div(lm_d)?;
            let c = lc_r * &lc_inv;
            for (mb, cb) in &d.terms {
                r.add_term(mb.times(&m), -(&c * cb));
            }
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Coefficients with respect to `v`: `self = Σ_k c_k · v^k`.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<u16, Poly> {
        let mut out: BTreeMap<u16, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v)).or_default().add_term(m.without(v), c.clone());
        }
        out
    }

    /// Substitutes scalar values for some of the variables.
    pub fn substitute_scalars(&self, values: &BTreeMap<Var, QuadRat>) -> Self {
        let mut powers: BTreeMap<(Var, u16), QuadRat> = BTreeMap::new();
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let mut c = c.clone();
            for (v, e) in m.vars() {
                if let Some(x) = values.get(&v) {
                    let p = powers.entry((v, e)).or_insert_with(|| x.pow(e as u32));
                    c *= &*p;
                    k.0[v.index()] = 0;
                }
            }
            r.add_term(k, c);
        }
        r
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if num_traits::Zero::is_zero(&c.irr) && c.rat < num_rational::BigRational::from_integer(0.into()) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = if num_traits::Zero::is_zero(&mag.irr) || num_traits::Zero::is_zero(&mag.rat) {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if mag == QuadRat::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<QuadRat> for Poly {
    fn from(c: QuadRat) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::constant(QuadRat::from_int(n))
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

macro_rules! poly_ops {
    ($($tr:ident $m:ident $f:ident),*) => {$(
        impl<'a> $tr<&'a Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly { Poly::$f(self, o) }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { Poly::$f(&self, &o) }
        }
    )*};
}
poly_ops!(Add add plus, Sub sub minus, Mul mul times);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::negated(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> Poly {
        Poly::var(Var::s(i))
    }

    #[test]
    fn arithmetic_and_division() {
        let a = &s(0) - &s(4);
        let b = &s(0) + &s(4);
        let p = &a * &b;
        assert_eq!(p.to_string(), "s0^2 - s4^2");
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&s(5)), None);
        assert_eq!((&p + &Poly::one()).div_exact(&a), None);
        let d = s(0).pow(10) - s(4).pow(10);
        let f = &d * &(&s(5) * &s(0).pow(3));
        assert_eq!(f.div_exact(&d).unwrap(), &s(5) * &s(0).pow(3));
    }

    #[test]
    fn derivative_and_content() {
        let p = &s(0).pow(2) * &s(5) + s(0).pow(3).scale(&QuadRat::sqrt5());
        assert_eq!(p.diff(Var::s(0)).to_string(), "3*r5*s0^2 + 2*s0*s5");
        assert_eq!(p.monomial_content(), Monomial::var(Var::s(0), 2));
        assert!(p.diff(Var::s(1)).is_zero());
    }

    #[test]
    fn scalar_substitution() {
        let p = &s(0).pow(2) * &s(5) - s(3);
        let mut vals = BTreeMap::new();
        vals.insert(Var::s(0), QuadRat::sqrt5());
        assert_eq!(p.substitute_scalars(&vals).to_string(), "-s3 + 5*s5");
        let c = p.coeffs_in(Var::s(5));
        assert_eq!(c[&1], s(0).pow(2));
        assert_eq!(c[&0], -s(3));
    }
}
