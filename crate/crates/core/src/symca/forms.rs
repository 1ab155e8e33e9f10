use std::collections::BTreeMap;
use std::fmt;

use super::matrix::RFMatrix;
use super::ratfunc::RatFunc;
use super::Var;

/// Matrix of 1-forms `Σ_v M_v dv`; absent components are zero.
#[derive(Clone, Debug)]
pub struct OneFormMatrix {
    rows: usize,
    cols: usize,
    comps: BTreeMap<Var, RFMatrix>,
}

impl OneFormMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        OneFormMatrix {
            rows,
            cols,
            comps: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Sets the `dv` component; zero matrices are dropped.
    pub fn set(&mut self, v: Var, m: RFMatrix) {
        assert_eq!((m.rows(), m.cols()), (self.rows, self.cols), "component dimension mismatch");
        if m.is_zero() {
            self.comps.remove(&v);
        } else {
            self.comps.insert(v, m);
        }
    }

    pub fn component(&self, v: Var) -> RFMatrix {
        self.comps
            .get(&v)
            .cloned()
            .unwrap_or_else(|| RFMatrix::zeros(self.rows, self.cols))
    }

    pub fn components(&self) -> impl Iterator<Item = (Var, &RFMatrix)> {
        self.comps.iter().map(|(v, m)| (*v, m))
    }

    pub fn vars(&self) -> Vec<Var> {
        self.comps.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|m| m.is_zero())
    }

    /// Applies `f` to every component.
    pub fn map(&self, mut f: impl FnMut(Var, &RFMatrix) -> RFMatrix) -> Self {
        let mut out: Option<OneFormMatrix> = None;
        for (v, m) in &self.comps {
            let r = f(*v, m);
            let o = out.get_or_insert_with(|| OneFormMatrix::zero(r.rows(), r.cols()));
            o.set(*v, r);
        }
        out.unwrap_or_else(|| OneFormMatrix::zero(self.rows, self.cols))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dims(), o.dims(), "dimension mismatch");
        let mut out = self.clone();
        for (v, m) in &o.comps {
            let sum = match self.comps.get(v) {
                Some(a) => a.add(m),
                None => m.clone(),
            };
            out.set(*v, sum);
        }
        out
    }

    /// `M · self` with a function matrix on the left.
    pub fn left_mul(&self, m: &RFMatrix) -> Self {
        let mut out = OneFormMatrix::zero(m.rows(), self.cols);
        for (v, c) in &self.comps {
            out.set(*v, m.mul(c));
        }
        out
    }

    /// `self · M` with a function matrix on the right.
    pub fn right_mul(&self, m: &RFMatrix) -> Self {
        let mut out = OneFormMatrix::zero(self.rows, m.cols());
        for (v, c) in &self.comps {
            out.set(*v, c.mul(m));
        }
        out
    }

    /// `f · M` for a scalar 1-form `f = Σ f_v dv` and a function matrix `M`.
    pub fn from_scalar_form(form: &BTreeMap<Var, RatFunc>, m: &RFMatrix) -> Self {
        let mut out = OneFormMatrix::zero(m.rows(), m.cols());
        for (v, f) in form {
            out.set(*v, m.scale(f));
        }
        out
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.dims() == o.dims()
            && self
                .comps
                .keys()
                .chain(o.comps.keys())
                .all(|v| self.component(*v).equals(&o.component(*v)))
    }
}

impl fmt::Display for OneFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, m) in &self.comps {
            writeln!(f, "d{v}:")?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Vector field `Σ_v X_v ∂/∂v`; absent components are zero.
#[derive(Clone, Debug, Default)]
pub struct VectorField {
    comps: BTreeMap<Var, RatFunc>,
}

impl VectorField {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_components(comps: impl IntoIterator<Item = (Var, RatFunc)>) -> Self {
        let mut v = Self::new();
        for (k, f) in comps {
            v.set(k, f);
        }
        v
    }

    pub fn set(&mut self, v: Var, f: RatFunc) {
        if f.is_zero() {
            self.comps.remove(&v);
        } else {
            self.comps.insert(v, f);
        }
    }

    pub fn get(&self, v: Var) -> RatFunc {
        self.comps.get(&v).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (Var, &RatFunc)> {
        self.comps.iter().map(|(v, f)| (*v, f))
    }

    /// Derivative of `f` along the field.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (v, x) in &self.comps {
            if f.depends_on(*v) {
                acc = acc.plus(&x.times(&f.diff(*v)));
            }
        }
        acc
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.comps
            .keys()
            .chain(o.comps.keys())
            .all(|v| self.get(*v).equals(&o.get(*v)))
    }
}

/// Entry-wise total differential.
pub fn mat_d(m: &RFMatrix) -> OneFormMatrix {
    let mut out = OneFormMatrix::zero(m.rows(), m.cols());
    for v in Var::all() {
        if m.entries().any(|(_, f)| f.depends_on(v)) {
            out.set(v, m.map(|f| if f.depends_on(v) { f.diff(v) } else { RatFunc::zero() }));
        }
    }
    out
}

/// `Σ_v V[v] · Ω[v]`.
pub fn oneform_contract(omega: &OneFormMatrix, field: &VectorField) -> RFMatrix {
    let (r, c) = omega.dims();
    let mut acc = RFMatrix::zeros(r, c);
    for (v, m) in omega.components() {
        let x = field.get(v);
        if !x.is_zero() {
            acc = acc.add(&m.scale(&x));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize) -> RatFunc {
        RatFunc::s(i)
    }

    fn one_by_one(f: RatFunc) -> RFMatrix {
        RFMatrix::from_rows(vec![vec![f]])
    }

    #[test]
    fn differential_examples() {
        let d = mat_d(&one_by_one(s(0) * s(0)));
        assert_eq!(d.vars(), vec![Var::s(0)]);
        assert!(d.component(Var::s(0)).equals(&one_by_one(RatFunc::int(2) * s(0))));
        assert!(mat_d(&RFMatrix::identity(3)).is_zero());
        let d = mat_d(&one_by_one(s(0) * s(5)));
        assert!(d.component(Var::s(0)).equals(&one_by_one(s(5))));
        assert!(d.component(Var::s(5)).equals(&one_by_one(s(0))));
    }

    #[test]
    fn contraction_examples() {
        let mut om = OneFormMatrix::zero(2, 2);
        om.set(Var::s(0), RFMatrix::identity(2));
        let v = VectorField::from_components([(Var::s(0), RatFunc::one())]);
        assert!(oneform_contract(&om, &v).equals(&RFMatrix::identity(2)));

        let r = VectorField::from_components([(Var::s(0), s(3) / s(5)), (Var::s(7), -s(8))]);
        let c = oneform_contract(&mat_d(&one_by_one(s(0))), &r);
        assert!(c.equals(&one_by_one(s(3) / s(5))));

        let n = RFMatrix::from_rows(vec![vec![s(2), RatFunc::zero()], vec![RatFunc::one(), s(1)]]);
        om.set(Var::s(1), n.clone());
        let v = VectorField::from_components([(Var::s(1), RatFunc::one())]);
        assert!(oneform_contract(&om, &v).equals(&n));
    }
}
