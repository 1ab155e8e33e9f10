use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::series::PuiseuxSeries;

use super::poly::{Monomial, Poly};
use super::ratfunc::RatFunc;
use super::Var;

/// Evaluates polynomials and rational functions on Puiseux series, caching
/// variable powers across calls.
pub struct SeriesEvaluator {
    bindings: BTreeMap<Var, PuiseuxSeries>,
    ram: u32,
    trunc: u32,
    powers: HashMap<(Var, u16), PuiseuxSeries>,
}

impl SeriesEvaluator {
    /// All bindings must share one ramification index; they are truncated
    /// to `trunc`.
    pub fn new(bindings: &BTreeMap<Var, PuiseuxSeries>, trunc: u32) -> Result<Self> {
        let ram = bindings
            .values()
            .next()
            .map(|s| s.ram())
            .ok_or_else(|| Error::Evaluation("no series bindings".into()))?;
        if bindings.values().any(|s| s.ram() != ram) {
            return Err(Error::Evaluation("bindings with different ramification".into()));
        }
        Ok(SeriesEvaluator {
            bindings: bindings.iter().map(|(v, s)| (*v, s.truncate(trunc))).collect(),
            ram,
            trunc,
            powers: HashMap::new(),
        })
    }

    fn power(&mut self, v: Var, e: u16) -> Result<PuiseuxSeries> {
        if let Some(p) = self.powers.get(&(v, e)) {
            return Ok(p.clone());
        }
        let base = self
            .bindings
            .get(&v)
            .ok_or_else(|| Error::Evaluation(format!("no series bound to {v}")))?
            .clone();
        let p = if e == 1 {
            base
        } else {
            self.power(v, e - 1)?.mul(&base)
        };
        self.powers.insert((v, e), p.clone());
        Ok(p)
    }

    fn monomial(&mut self, m: &Monomial) -> Result<PuiseuxSeries> {
        let mut acc: Option<PuiseuxSeries> = None;
        for (v, e) in m.vars() {
            let p = self.power(v, e)?;
            acc = Some(match acc {
                None => p,
                Some(a) => a.mul(&p),
            });
        }
        Ok(acc.unwrap_or_else(|| PuiseuxSeries::one(self.ram, self.trunc)))
    }

    pub fn eval_poly(&mut self, p: &Poly) -> Result<PuiseuxSeries> {
        let mut acc = PuiseuxSeries::zero(self.ram, self.trunc);
        for (m, c) in p.terms() {
            acc = acc.add(&self.monomial(m)?.scale(c));
        }
        Ok(acc)
    }

    pub fn eval(&mut self, f: &RatFunc) -> Result<PuiseuxSeries> {
        let n = self.eval_poly(f.numer())?;
        let d = self.monomial(f.denom_monomial())?.mul(&self.eval_poly(f.denom_poly())?);
        if d.is_empty() {
            return Err(Error::Evaluation(format!("denominator of {f} has no known nonzero term")));
        }
        n.div(&d).map_err(|e| Error::Evaluation(format!("{f}: {e}")))
    }
}

/// Substitutes series for the variables of `f`, working to truncation `trunc`.
pub fn rf_substitute(f: &RatFunc, bindings: &BTreeMap<Var, PuiseuxSeries>, trunc: u32) -> Result<PuiseuxSeries> {
    SeriesEvaluator::new(bindings, trunc)?.eval(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::QuadRat;
    use crate::series::RAM;

    fn one_plus_q(c: i64) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(RAM, 100, [(0, QuadRat::from_int(c)), (10, QuadRat::one())])
    }

    #[test]
    fn substitution_examples() {
        let mut b = BTreeMap::new();
        b.insert(Var::s(0), one_plus_q(1));
        let r = rf_substitute(&(RatFunc::s(0) * RatFunc::s(0)), &b, 60).unwrap();
        assert_eq!(
            r,
            PuiseuxSeries::from_terms(RAM, 60, [(0, QuadRat::one()), (10, QuadRat::from_int(2)), (20, QuadRat::one())])
        );
        b.insert(Var::s(5), one_plus_q(-1));
        let r = rf_substitute(&RatFunc::s(5).inv().unwrap(), &b, 41).unwrap();
        let expect = PuiseuxSeries::from_terms(RAM, 41, (0..=4).map(|k| (10 * k, QuadRat::from_int(-1))));
        assert_eq!(r, expect);
        assert!(rf_substitute(&RatFunc::s(3), &b, 10).is_err());
        let zero = PuiseuxSeries::zero(RAM, 20);
        b.insert(Var::s(6), zero);
        assert!(matches!(
            rf_substitute(&RatFunc::s(6).inv().unwrap(), &b, 20),
            Err(Error::Evaluation(_))
        ));
    }
}
