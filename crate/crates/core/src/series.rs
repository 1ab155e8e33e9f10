//! Truncated Puiseux series in `q` with exponents in `(1/ram)ℤ≥0`.
//!
//! A series stores the coefficient of `q^{m/ram}` under the integer key `m`
//! and a truncation `trunc`: every exponent `m ≥ trunc` is unknown. Zero
//! coefficients are never stored. Arithmetic propagates truncation
//! pessimistically and never invents precision.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numfield::QuadRat;

/// Ramification index used throughout the solver (`x = q^{1/10}`).
pub const RAM: u32 = 10;

#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    ram: u32,
    coeffs: BTreeMap<u32, QuadRat>,
    trunc: u32,
}

impl PuiseuxSeries {
    pub fn zero(ram: u32, trunc: u32) -> Self {
        assert!(ram > 0, "ramification index must be positive");
        PuiseuxSeries {
            ram,
            coeffs: BTreeMap::new(),
            trunc,
        }
    }

    pub fn from_terms(ram: u32, trunc: u32, terms: impl IntoIterator<Item = (u32, QuadRat)>) -> Self {
        let mut s = Self::zero(ram, trunc);
        for (m, c) in terms {
            s.add_term(m, &c);
        }
        s
    }

    /// Builds a series from a dense coefficient vector; `trunc` is its length.
    pub fn from_dense(ram: u32, dense: &[QuadRat]) -> Self {
        Self::from_terms(
            ram,
            dense.len() as u32,
            dense.iter().enumerate().map(|(m, c)| (m as u32, c.clone())),
        )
    }

    pub fn constant(c: QuadRat, ram: u32, trunc: u32) -> Self {
        Self::from_terms(ram, trunc, [(0, c)])
    }

    pub fn one(ram: u32, trunc: u32) -> Self {
        Self::constant(QuadRat::one(), ram, trunc)
    }

    /// `c · q^{m/ram}`.
    pub fn monomial(m: u32, c: QuadRat, ram: u32, trunc: u32) -> Self {
        Self::from_terms(ram, trunc, [(m, c)])
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &QuadRat)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^{m/ram}`; `None` when `m` is beyond the truncation.
    pub fn coeff(&self, m: u32) -> Option<QuadRat> {
        (m < self.trunc).then(|| self.coeffs.get(&m).cloned().unwrap_or_default())
    }

    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    fn add_term(&mut self, m: u32, c: &QuadRat) {
        if m >= self.trunc || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    fn check_ram(&self, other: &Self) {
        assert_eq!(self.ram, other.ram, "ramification mismatch");
    }

    /// Drops everything at or beyond `trunc` (never extends precision).
    pub fn truncate(&self, trunc: u32) -> Self {
        let t = trunc.min(self.trunc);
        PuiseuxSeries {
            ram: self.ram,
            coeffs: self.coeffs.range(..t).map(|(m, c)| (*m, c.clone())).collect(),
            trunc: t,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ram(other);
        let mut out = self.truncate(other.trunc);
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&QuadRat::from_int(-1))
    }

    pub fn scale(&self, c: &QuadRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.ram, self.trunc);
        }
        PuiseuxSeries {
            ram: self.ram,
            coeffs: self.coeffs.iter().map(|(m, a)| (*m, a * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Valuation used for truncation bookkeeping: the lowest known nonzero
    /// exponent, or the truncation itself for a series that is `O(q^{trunc})`.
    fn bookkeeping_valuation(&self) -> u32 {
        self.valuation().unwrap_or(self.trunc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ram(other);
        let trunc = (self.trunc + other.bookkeeping_valuation())
            .min(other.trunc + self.bookkeeping_valuation());
        let mut out = Self::zero(self.ram, trunc);
        for (i, a) in self.terms() {
            if i >= trunc {
                break;
            }
            for (j, b) in other.coeffs.range(..trunc - i) {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap_or_else(|| Self::one(self.ram, self.trunc))
    }

    /// `self / other`. The divisor must have a known nonzero term and the
    /// quotient must not acquire negative exponents.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_ram(other);
        let v = other.valuation().ok_or(Error::SeriesDivision)?;
        let vf = self.bookkeeping_valuation();
        if vf < v {
            return Err(Error::Domain(format!(
                "quotient has negative exponent {}/{}",
                vf as i64 - v as i64,
                self.ram
            )));
        }
        let trunc = vf - v + (self.trunc - vf).min(other.trunc - v);
        let lead_inv = other.coeffs[&v].inv()?;
        let unit: Vec<(u32, &QuadRat)> = other.terms().map(|(m, c)| (m - v, c)).skip(1).collect();
        let mut q = vec![QuadRat::zero(); trunc as usize];
        for k in 0..trunc {
            let mut acc = self.coeffs.get(&(k + v)).cloned().unwrap_or_default();
            for &(j, u) in &unit {
                if j > k {
                    break;
                }
                let prev = &q[(k - j) as usize];
                if !prev.is_zero() {
                    acc -= &(u * prev);
                }
            }
            q[k as usize] = &acc * &lead_inv;
        }
        Ok(Self::from_dense(self.ram, &q))
    }

    /// The `n`-th root with leading coefficient 1. Requires the leading
    /// coefficient of `self` to be 1 and its valuation to be divisible by `n`.
    pub fn root(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("root of order zero".into()));
        }
        let v = self
            .valuation()
            .ok_or_else(|| Error::UnsupportedRoot("series has no known nonzero term".into()))?;
        if self.coeffs[&v] != QuadRat::one() {
            return Err(Error::UnsupportedRoot(format!(
                "leading coefficient {} is not 1",
                self.coeffs[&v]
            )));
        }
        if v % n != 0 {
            return Err(Error::UnsupportedRoot(format!(
                "leading exponent {v}/{} not divisible by {n}",
                self.ram
            )));
        }
        let rel = (self.trunc - v) as usize;
        let u: Vec<QuadRat> = (0..rel as u32)
            .map(|k| self.coeffs.get(&(k + v)).cloned().unwrap_or_default())
            .collect();
        // Miller's recurrence for g = u^α with u₀ = 1:
        //   k·g_k = Σ_{j=1..k} ((α+1)·j − k)·u_j·g_{k−j}
        let alpha = BigRational::new(BigInt::one(), BigInt::from(n));
        let alpha1 = &alpha + BigRational::one();
        let mut g = vec![QuadRat::zero(); rel];
        if rel > 0 {
            g[0] = QuadRat::one();
        }
        for k in 1..rel {
            let mut acc = QuadRat::zero();
            for j in 1..=k {
                if u[j].is_zero() || g[k - j].is_zero() {
                    continue;
                }
                let w = &alpha1 * BigRational::from_integer(j.into()) - BigRational::from_integer(k.into());
                acc += &(&u[j] * &g[k - j]).scale(&w);
            }
            g[k] = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
        }
        let shift = v / n;
        Ok(Self::from_terms(
            self.ram,
            shift + rel as u32,
            g.into_iter().enumerate().map(|(k, c)| (k as u32 + shift, c)),
        ))
    }

    /// The derivation `scale · q d/dq`: multiplies the coefficient of
    /// `q^{m/ram}` by `scale · m/ram`.
    pub fn theta(&self, scale: &QuadRat) -> Self {
        let ram = BigInt::from(self.ram);
        Self::from_terms(
            self.ram,
            self.trunc,
            self.terms().map(|(m, c)| {
                let e = BigRational::new(BigInt::from(m), ram.clone());
                (m, (c * scale).scale(&e))
            }),
        )
    }

    /// One line per stored term, `m<TAB>coeff`, after a `ram=R trunc=N` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("ram={} trunc={}\n", self.ram, self.trunc);
        for (m, c) in self.terms() {
            out.push_str(&format!("{m}\t{c}\n"));
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Error offsets are byte
    /// offsets into `text`.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = LineCursor::new(text);
        let (header_at, header) = lines
            .next()
            .ok_or(Error::Parse { pos: 0, msg: "missing series header".into() })?;
        let (ram, trunc) = parse_header(header, header_at)?;
        let mut s = Self::zero(ram, trunc);
        let mut last: Option<u32> = None;
        for (at, line) in lines {
            if line.is_empty() {
                continue;
            }
            let (m, c) = parse_term(line, at)?;
            if m >= trunc || last.is_some_and(|l| m <= l) || c.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("term {m} out of order, zero, or beyond truncation"),
                });
            }
            last = Some(m);
            s.coeffs.insert(m, c);
        }
        Ok(s)
    }
}

pub(crate) struct LineCursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> LineCursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        LineCursor { text, pos: 0 }
    }
}

impl<'a> Iterator for LineCursor<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<(usize, &'a str)> {
        if self.pos >= self.text.len() {
            return None;
        }
        let start = self.pos;
        let rest = &self.text[start..];
        let end = rest.find('\n').map_or(rest.len(), |i| i);
        self.pos = start + end + 1;
        Some((start, &rest[..end]))
    }
}

fn shift_err(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: base + pos, msg },
        other => other,
    }
}

pub(crate) fn parse_header(line: &str, at: usize) -> Result<(u32, u32)> {
    let bad = |msg: &str| Error::Parse {
        pos: at,
        msg: format!("{msg}: {line:?}"),
    };
    let mut parts = line.split_whitespace();
    let ram = parts
        .next()
        .and_then(|p| p.strip_prefix("ram="))
        .and_then(|v| v.parse::<u32>().ok())
        .filter(|&r| r > 0)
        .ok_or_else(|| bad("expected 'ram=R'"))?;
    let trunc = parts
        .next()
        .and_then(|p| p.strip_prefix("trunc="))
        .and_then(|v| v.parse::<u32>().ok())
        .ok_or_else(|| bad("expected 'trunc=N'"))?;
    if parts.next().is_some() {
        return Err(bad("trailing header fields"));
    }
    Ok((ram, trunc))
}

fn parse_term(line: &str, at: usize) -> Result<(u32, QuadRat)> {
    let (m, c) = line.split_once('\t').ok_or(Error::Parse {
        pos: at,
        msg: format!("expected 'm<TAB>coeff', got {line:?}"),
    })?;
    let m: u32 = m.parse().map_err(|_| Error::Parse {
        pos: at,
        msg: format!("bad exponent {m:?}"),
    })?;
    let c: QuadRat = c.parse().map_err(|e| shift_err(e, at + line.find('\t').unwrap_or(0) + 1))?;
    Ok((m, c))
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = BigRational::new(BigInt::from(m), BigInt::from(self.ram));
            if m == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*q^{}", crate::numfield::format_rational(&e))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        let t = BigRational::new(BigInt::from(self.trunc), BigInt::from(self.ram));
        write!(f, " + O(q^{})", crate::numfield::format_rational(&t))
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ram={}] {}", self.ram, self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    Closed,
    Open,
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sector::Closed => "closed",
            Sector::Open => "open",
        })
    }
}

impl std::str::FromStr for Sector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Sector::Closed),
            "open" => Ok(Sector::Open),
            _ => Err(Error::Input(format!("unknown sector {s:?}"))),
        }
    }
}

/// Instanton numbers `n_d` of one sector, keyed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub sector: Sector,
    pub entries: BTreeMap<u32, BigRational>,
}

impl InvariantTable {
    pub fn get(&self, d: u32) -> Option<&BigRational> {
        self.entries.get(&d)
    }

    /// Whether every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|v| v.is_integer())
    }
}

impl fmt::Display for InvariantTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, n) in &self.entries {
            writeln!(f, "{d} {}", crate::numfield::format_rational(n))?;
        }
        Ok(())
    }
}

fn divisors(m: u32) -> impl Iterator<Item = u32> {
    (1..=m).filter(move |d| m % d == 0)
}

fn big(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Inverts `c_m = Σ_{d|m} n_d·d³` for `1 ≤ m ≤ max_degree`.
pub fn lambert_closed_invert(coeffs: &BTreeMap<u32, BigRational>, max_degree: u32) -> Result<InvariantTable> {
    if coeffs.contains_key(&0) {
        return Err(Error::Input("constant term must be stripped before Lambert inversion".into()));
    }
    let mut entries = BTreeMap::new();
    for m in 1..=max_degree {
        let c = coeffs
            .get(&m)
            .ok_or_else(|| Error::Input(format!("missing coefficient of q^{m}")))?;
        let mut rest = c.clone();
        for d in divisors(m).filter(|&d| d < m) {
            rest -= &entries[&d] * big(d * d * d);
        }
        entries.insert(m, rest / big(m * m * m));
    }
    Ok(InvariantTable {
        sector: Sector::Closed,
        entries,
    })
}

/// Inverts `c_m = Σ_{d|m} n_d·d²` over odd `m ≤ max_degree`, where `c_m` is
/// the coefficient of `q^{m/2}` in `Σ_{d odd} n_d d² q^{d/2}/(1 − q^d)`.
pub fn lambert_open_invert(coeffs: &BTreeMap<u32, BigRational>, max_degree: u32) -> Result<InvariantTable> {
    if let Some(even) = coeffs.keys().find(|m| *m % 2 == 0) {
        return Err(Error::Input(format!("open-sector index {even} is even")));
    }
    let mut entries = BTreeMap::new();
    for m in (1..=max_degree).step_by(2) {
        let c = coeffs
            .get(&m)
            .ok_or_else(|| Error::Input(format!("missing coefficient of q^({m}/2)")))?;
        let mut rest = c.clone();
        for d in divisors(m).filter(|&d| d < m) {
            rest -= &entries[&d] * big(d * d);
        }
        entries.insert(m, rest / big(m * m));
    }
    Ok(InvariantTable {
        sector: Sector::Open,
        entries,
    })
}

/// Forward closed Lambert sum, coefficients of `q^m` for `1 ≤ m ≤ max_degree`.
pub fn lambert_closed_forward(table: &BTreeMap<u32, BigRational>, max_degree: u32) -> BTreeMap<u32, BigRational> {
    let mut out: BTreeMap<u32, BigRational> = (1..=max_degree).map(|m| (m, BigRational::zero())).collect();
    for (&d, n) in table {
        if d == 0 {
            continue;
        }
        for m in (d..=max_degree).step_by(d as usize) {
            *out.get_mut(&m).unwrap() += n * big(d * d * d);
        }
    }
    out
}

/// Forward open Lambert sum, coefficients of `q^{m/2}` for odd `m ≤ max_degree`.
pub fn lambert_open_forward(table: &BTreeMap<u32, BigRational>, max_degree: u32) -> BTreeMap<u32, BigRational> {
    let mut out: BTreeMap<u32, BigRational> =
        (1..=max_degree).step_by(2).map(|m| (m, BigRational::zero())).collect();
    for (&d, n) in table {
        if d % 2 == 0 {
            continue;
        }
        for m in (d..=max_degree).step_by(2 * d as usize) {
            *out.get_mut(&m).unwrap() += n * big(d * d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rational;

    fn q(s: &str) -> QuadRat {
        s.parse().unwrap()
    }

    fn int_map(pairs: &[(u32, i64)]) -> BTreeMap<u32, BigRational> {
        pairs.iter().map(|&(k, v)| (k, rational(v, 1))).collect()
    }

    /// 1 + c·q as a ram-10 series
    fn one_plus(c: i64, trunc: u32) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(RAM, trunc, [(0, QuadRat::one()), (10, QuadRat::from_int(c))])
    }

    #[test]
    fn difference_of_squares() {
        let p = one_plus(1, 60).mul(&one_plus(-1, 60));
        assert_eq!(p, PuiseuxSeries::from_terms(RAM, 60, [(0, QuadRat::one()), (20, QuadRat::from_int(-1))]));
    }

    #[test]
    fn tenth_power_of_x_is_q() {
        let x = PuiseuxSeries::monomial(1, QuadRat::one(), RAM, 40);
        let mut acc = PuiseuxSeries::one(RAM, 40);
        for _ in 0..10 {
            acc = acc.mul(&x);
        }
        assert_eq!(acc.terms().collect::<Vec<_>>(), vec![(10, &QuadRat::one())]);
        assert_eq!(acc.trunc(), 49);
        assert_eq!(x.pow(10), acc);
    }

    #[test]
    fn geometric_series() {
        let s = PuiseuxSeries::one(RAM, 41).div(&one_plus(-1, 41)).unwrap();
        let expect = PuiseuxSeries::from_terms(RAM, 41, (0..=4).map(|k| (10 * k, QuadRat::one())));
        assert_eq!(s, expect);
    }

    #[test]
    fn division_errors() {
        let z = PuiseuxSeries::zero(RAM, 10);
        assert!(matches!(PuiseuxSeries::one(RAM, 10).div(&z), Err(Error::SeriesDivision)));
        let x = PuiseuxSeries::monomial(1, QuadRat::one(), RAM, 10);
        assert!(matches!(PuiseuxSeries::one(RAM, 10).div(&x), Err(Error::Domain(_))));
        // x²/x = x with relative precision kept
        let x2 = x.mul(&x);
        let r = x2.div(&x).unwrap();
        assert_eq!(r.terms().collect::<Vec<_>>(), vec![(1, &QuadRat::one())]);
    }

    #[test]
    fn truncation_propagation() {
        let a = PuiseuxSeries::one(RAM, 30);
        let b = PuiseuxSeries::monomial(5, QuadRat::one(), RAM, 20);
        assert_eq!(a.add(&b).trunc(), 20);
        assert_eq!(a.mul(&b).trunc(), 20);
        assert_eq!(b.mul(&b).trunc(), 25);
    }

    #[test]
    fn root_of_one_plus_ten_q() {
        // (1 + 10q)^{1/10} = 1 + q − (9/2)q² + 57/2 q³ − …  (binomial series)
        let r = one_plus(10, 31).root(10).unwrap();
        assert_eq!(r.coeff(0), Some(QuadRat::one()));
        assert_eq!(r.coeff(10), Some(QuadRat::one()));
        assert_eq!(r.coeff(20), Some(QuadRat::frac(-9, 2)));
        assert_eq!(r.coeff(30), Some(QuadRat::frac(57, 2)));
        assert_eq!(r.pow(10), one_plus(10, 31));
    }

    #[test]
    fn root_examples() {
        let q10 = PuiseuxSeries::monomial(100, QuadRat::one(), RAM, 200);
        let r = q10.root(10).unwrap();
        assert_eq!(r.terms().collect::<Vec<_>>(), vec![(10, &QuadRat::one())]);
        assert_eq!(PuiseuxSeries::one(RAM, 20).root(3).unwrap(), PuiseuxSeries::one(RAM, 20));
        let two = PuiseuxSeries::constant(QuadRat::from_int(2), RAM, 20);
        assert!(matches!(two.root(2), Err(Error::UnsupportedRoot(_))));
        let x3 = PuiseuxSeries::monomial(3, QuadRat::one(), RAM, 20);
        assert!(matches!(x3.root(2), Err(Error::UnsupportedRoot(_))));
    }

    #[test]
    fn theta_examples() {
        let half = PuiseuxSeries::monomial(5, QuadRat::one(), RAM, 20);
        assert_eq!(half.theta(&QuadRat::one()), PuiseuxSeries::monomial(5, QuadRat::frac(1, 2), RAM, 20));
        let c = PuiseuxSeries::constant(q("3+1*r5"), RAM, 20);
        assert!(c.theta(&QuadRat::from_int(5)).is_empty());
        let f = PuiseuxSeries::from_terms(RAM, 40, [(10, QuadRat::one()), (20, QuadRat::one())]);
        let expect = PuiseuxSeries::from_terms(RAM, 40, [(10, QuadRat::from_int(5)), (20, QuadRat::from_int(10))]);
        assert_eq!(f.theta(&QuadRat::from_int(5)), expect);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let s = PuiseuxSeries::from_terms(RAM, 36, [(0, q("-6")), (5, q("1/2-3*r5")), (35, q("7*r5"))]);
        let text = s.to_text();
        assert_eq!(text, "ram=10 trunc=36\n0\t-6\n5\t1/2-3*r5\n35\t7*r5\n");
        assert_eq!(PuiseuxSeries::from_text(&text).unwrap(), s);
        let bad = "ram=10 trunc=36\n0\t-6\n5\t1/2-3*x5\n";
        match PuiseuxSeries::from_text(bad) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 28),
            other => panic!("{other:?}"),
        }
        assert!(PuiseuxSeries::from_text("ram=0 trunc=3\n").is_err());
        assert!(PuiseuxSeries::from_text("ram=10 trunc=3\n5\t1\n").is_err());
    }

    #[test]
    fn lambert_closed_examples() {
        let t = lambert_closed_invert(&int_map(&[(1, 2875)]), 1).unwrap();
        assert_eq!(t.entries, int_map(&[(1, 2875)]));
        let t = lambert_closed_invert(&int_map(&[(1, 2875), (2, 4876875)]), 2).unwrap();
        assert_eq!(t.get(2), Some(&rational(609250, 1)));
        let t = lambert_closed_invert(&int_map(&[(1, 2875), (2, 4876875), (3, 8564575000)]), 3).unwrap();
        assert_eq!(t.entries, int_map(&[(1, 2875), (2, 609250), (3, 317206375)]));
        assert!(t.is_integral());
        assert!(lambert_closed_invert(&int_map(&[(1, 2875)]), 2).is_err());
        assert!(lambert_closed_invert(&int_map(&[(0, 5), (1, 2875)]), 1).is_err());
    }

    #[test]
    fn lambert_open_examples() {
        let t = lambert_open_invert(&int_map(&[(1, 30)]), 1).unwrap();
        assert_eq!(t.entries, int_map(&[(1, 30)]));
        let t = lambert_open_invert(&int_map(&[(1, 30), (3, 13800)]), 3).unwrap();
        assert_eq!(t.get(3), Some(&rational(1530, 1)));
        let c = int_map(&[(1, 30), (3, 13800), (5, 27206280), (7, 47823842250)]);
        let t = lambert_open_invert(&c, 7).unwrap();
        assert_eq!(t.entries, int_map(&[(1, 30), (3, 1530), (5, 1088250), (7, 975996780)]));
        assert!(matches!(lambert_open_invert(&int_map(&[(1, 30), (2, 1)]), 3), Err(Error::Input(_))));
    }

    #[test]
    fn non_integral_lambert_values_are_kept() {
        let t = lambert_closed_invert(&int_map(&[(1, 1), (2, 2)]), 2).unwrap();
        assert_eq!(t.get(2), Some(&rational(1, 8)));
        assert!(!t.is_integral());
    }

    #[test]
    fn divisor_sums_of_composites() {
        // m = 9 (open) has divisors 1, 3, 9; m = 6 (closed) has 1, 2, 3, 6
        let n = int_map(&[(1, 2), (3, 5), (9, 7)]);
        let f = lambert_open_forward(&n, 9);
        assert_eq!(f[&9], rational(2 + 5 * 9 + 7 * 81, 1));
        assert_eq!(lambert_open_invert(&f, 9).unwrap().entries, n.into_iter().chain((5..=7).step_by(2).map(|m| (m, rational(0, 1)))).collect());
        let n = int_map(&[(1, 1), (2, 1), (3, 1), (6, 1)]);
        let f = lambert_closed_forward(&n, 6);
        assert_eq!(f[&6], rational(1 + 8 + 27 + 216, 1));
    }
}
