//! Integration of the modular vector field as exact Puiseux series in
//! `x = q^{1/10}`, the potentials `Y` and `F`, instanton numbers, and the
//! inhomogeneous Picard-Fuchs solution `φ`.
//!
//! With `θ = 5q d/dq` acting on `x^m` as `m/2`, the coefficient of `x^m` in
//! `θ s = R(s)` reads `((m/2)·I − J)·s_m = rhs_m`, where `J` is the Jacobian
//! of `R` at the seeds and `rhs_m` depends on lower orders only. The right
//! side is evaluated by a relaxed straight-line program: every node keeps its
//! coefficients and extends them by one order at a time.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gmconn;
use crate::numfield::QuadRat;
use crate::report::Report;
use crate::series::{lambert_closed_invert, lambert_open_invert, InvariantTable, PuiseuxSeries, Sector, RAM};
use crate::symca::{Matrix, Monomial, Poly, RatFunc, SeriesEvaluator, Var, VectorField};

/// Default truncation order in `x`.
pub const DEFAULT_ORDER: u32 = 60;

/// Free coefficients at resonant orders: `(order, component)`; the value is
/// [`SeedConstants::s4_lead`].
const NORMALIZATION: [(u32, usize); 1] = [(1, 4)];

/// Constant terms of the nine coordinates and the `x¹` coefficient of `s4`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedConstants {
    pub values: [QuadRat; 9],
    pub s4_lead: QuadRat,
}

impl SeedConstants {
    fn point(&self) -> BTreeMap<Var, QuadRat> {
        Var::moduli().zip(self.values.iter().cloned()).collect()
    }
}

fn seed_err(msg: impl Into<String>) -> Error {
    Error::Seed(msg.into())
}

/// Solves `f = 0` for `u` after substituting the known values; `f` must be
/// affine in `u` once the others are fixed.
fn solve_affine(f: &RatFunc, known: &BTreeMap<Var, QuadRat>, u: Var) -> Result<QuadRat> {
    let g = f.substitute_scalars(known)?;
    let coeffs = g.numer().coeffs_in(u);
    let constant = |d: u16| -> Result<QuadRat> {
        match coeffs.get(&d) {
            None => Ok(QuadRat::zero()),
            Some(p) => p.as_constant().ok_or_else(|| seed_err(format!("{f} involves unknowns besides {u}"))),
        }
    };
    if coeffs.keys().any(|&d| d > 1) {
        return Err(seed_err(format!("{f} is not affine in {u}")));
    }
    let a = constant(1)?;
    if a.is_zero() {
        return Err(seed_err(format!("{f} does not determine {u}")));
    }
    let value = -(&constant(0)? / &a);
    let mut at = known.clone();
    at.insert(u, value.clone());
    f.eval(&at).map_err(|e| seed_err(format!("{u} = {value} is singular for {f}: {e}")))?;
    Ok(value)
}

/// Solves the order-zero system: `s0 = 1/√5` and `s4 = 0` are pinned,
/// `−5³Y(0) = 5` fixes `s5` (real cube root), `F(0) = 0` fixes `s7`, and the
/// remaining constants come from the equations affine in one unknown. The
/// leftover equations are checked.
pub fn seed_constants() -> Result<SeedConstants> {
    let r = gmconn::reference_vector_field(gmconn::EPSILON);
    let mut known = BTreeMap::new();
    known.insert(Var::s(0), QuadRat::sqrt5().inv()?);
    known.insert(Var::s(4), QuadRat::zero());

    // Y(0)·s5³ is a constant once s0, s4 are fixed
    let mut y_point = known.clone();
    y_point.insert(Var::s(5), QuadRat::one());
    let y_at_one = gmconn::yukawa().eval(&y_point)?;
    let cube = &y_at_one / &QuadRat::frac(-1, 25);
    let s5 = cube
        .rational_root(3)
        .ok_or_else(|| seed_err(format!("s5^3 = {cube} has no rational cube root")))?;
    known.insert(Var::s(5), s5);

    let f = gmconn::disk_function();
    known.insert(Var::s(7), solve_affine(&f, &known, Var::s(7))?);
    for (eq, unknown) in [(7, 8), (0, 3), (1, 1), (2, 2), (5, 6)] {
        let value = solve_affine(&r.get(Var::s(eq)), &known, Var::s(unknown))?;
        known.insert(Var::s(unknown), value);
    }
    for i in 0..9 {
        let v = r.get(Var::s(i)).eval(&known)?;
        if !v.is_zero() {
            return Err(seed_err(format!("order-zero equation for s{i} leaves {v}")));
        }
    }
    Ok(SeedConstants {
        values: std::array::from_fn(|i| known[&Var::s(i)].clone()),
        s4_lead: QuadRat::one(),
    })
}

enum Node {
    Var(usize),
    Const(QuadRat),
    Mul(usize, usize),
    Lin(Vec<(QuadRat, usize)>),
    Div(usize, usize),
}

/// Straight-line program for the nine components of a vector field.
struct Program {
    nodes: Vec<Node>,
    outputs: Vec<usize>,
    powers: HashMap<(usize, u16), usize>,
    monomials: HashMap<Monomial, usize>,
}

impl Program {
    fn compile(field: &VectorField) -> Result<Self> {
        let mut p = Program {
            nodes: Vec::new(),
            outputs: Vec::new(),
            powers: HashMap::new(),
            monomials: HashMap::new(),
        };
        for v in Var::moduli() {
            let out = p.ratfunc(&field.get(v))?;
            p.outputs.push(out);
        }
        Ok(p)
    }

    fn push(&mut self, n: Node) -> usize {
        self.nodes.push(n);
        self.nodes.len() - 1
    }

    fn power(&mut self, var: usize, e: u16) -> usize {
        if let Some(&n) = self.powers.get(&(var, e)) {
            return n;
        }
        let n = if e == 1 {
            self.push(Node::Var(var))
        } else {
            let half = self.power(var, e / 2);
            let sq = self.push(Node::Mul(half, half));
            if e % 2 == 1 {
                let one = self.power(var, 1);
                self.push(Node::Mul(sq, one))
            } else {
                sq
            }
        };
        self.powers.insert((var, e), n);
        n
    }

    fn monomial(&mut self, m: &Monomial) -> Result<usize> {
        if let Some(&n) = self.monomials.get(m) {
            return Ok(n);
        }
        let mut acc: Option<usize> = None;
        for (v, e) in m.vars() {
            let i = v
                .moduli_index()
                .ok_or_else(|| Error::Input(format!("{v} is not a moduli coordinate")))?;
            let pw = self.power(i, e);
            acc = Some(match acc {
                None => pw,
                Some(a) => self.push(Node::Mul(a, pw)),
            });
        }
        let n = match acc {
            Some(n) => n,
            None => self.push(Node::Const(QuadRat::one())),
        };
        self.monomials.insert(m.clone(), n);
        Ok(n)
    }

    fn poly(&mut self, p: &Poly) -> Result<usize> {
        if let Some(c) = p.as_constant() {
            return Ok(self.push(Node::Const(c)));
        }
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            terms.push((c.clone(), self.monomial(m)?));
        }
        Ok(self.push(Node::Lin(terms)))
    }

    fn ratfunc(&mut self, f: &RatFunc) -> Result<usize> {
        let num = self.poly(f.numer())?;
        let mono = f.denom_monomial();
        let den = f.denom_poly();
        if mono.is_one() && den.is_one() {
            return Ok(num);
        }
        let mut d = self.monomial(mono)?;
        if !den.is_one() {
            let dp = self.poly(den)?;
            d = self.push(Node::Mul(d, dp));
        }
        Ok(self.push(Node::Div(num, d)))
    }
}

/// Coefficient arrays of every node, extended order by order.
struct Relaxed<'a> {
    prog: &'a Program,
    vals: Vec<Vec<QuadRat>>,
}

impl<'a> Relaxed<'a> {
    fn new(prog: &'a Program) -> Self {
        Relaxed {
            prog,
            vals: prog.nodes.iter().map(|_| Vec::new()).collect(),
        }
    }

    /// Computes (or recomputes) coefficient `m` of every node from the
    /// coordinate coefficients `vars[i][0..=m]`.
    fn step(&mut self, m: usize, vars: &[Vec<QuadRat>]) -> Result<()> {
        for k in 0..self.prog.nodes.len() {
            let c = match &self.prog.nodes[k] {
                Node::Var(i) => vars[*i][m].clone(),
                Node::Const(c) => {
                    if m == 0 {
                        c.clone()
                    } else {
                        QuadRat::zero()
                    }
                }
                Node::Mul(a, b) => {
                    let (a, b) = (&self.vals[*a], &self.vals[*b]);
                    let mut acc = QuadRat::zero();
                    for j in 0..=m {
                        if !a[j].is_zero() && !b[m - j].is_zero() {
                            acc += &(&a[j] * &b[m - j]);
                        }
                    }
                    acc
                }
                Node::Lin(terms) => {
                    let mut acc = QuadRat::zero();
                    for (c, n) in terms {
                        let x = &self.vals[*n][m];
                        if !x.is_zero() {
                            acc += &(c * x);
                        }
                    }
                    acc
                }
                Node::Div(a, b) => {
                    let (num, den, quo) = (&self.vals[*a], &self.vals[*b], &self.vals[k]);
                    let mut acc = num[m].clone();
                    for j in 1..=m {
                        if !den[j].is_zero() && !quo[m - j].is_zero() {
                            acc -= &(&den[j] * &quo[m - j]);
                        }
                    }
                    if den[0].is_zero() {
                        return Err(Error::Evaluation("denominator vanishes at the seeds".into()));
                    }
                    acc.checked_div(&den[0])?
                }
            };
            let v = &mut self.vals[k];
            if v.len() == m {
                v.push(c);
            } else {
                v[m] = c;
            }
        }
        Ok(())
    }

    fn output(&self, i: usize, m: usize) -> &QuadRat {
        &self.vals[self.prog.outputs[i]][m]
    }
}

/// The nine solved series with `Y`, `F`; all are known through `x^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionBundle {
    pub order: u32,
    pub epsilon: i32,
    pub seeds: SeedConstants,
    pub s: Vec<PuiseuxSeries>,
    pub y: PuiseuxSeries,
    pub f: PuiseuxSeries,
}

/// Names accepted by [`SolutionBundle::series`].
pub const SERIES_NAMES: [&str; 11] = ["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "Y", "F"];

impl SolutionBundle {
    /// Assembles a bundle from the nine coordinate series, recomputing the
    /// potentials.
    pub fn from_series(order: u32, epsilon: i32, seeds: SeedConstants, s: Vec<PuiseuxSeries>) -> Result<Self> {
        if s.len() != 9 {
            return Err(Error::Input(format!("expected 9 series, got {}", s.len())));
        }
        let s: Vec<PuiseuxSeries> = s.iter().map(|x| x.truncate(order + 1)).collect();
        if let Some((i, x)) = s.iter().enumerate().find(|(_, x)| x.ram() != RAM || x.trunc() != order + 1) {
            return Err(Error::Input(format!("s{i} has ram {} trunc {}, need ram {RAM} trunc {}", x.ram(), x.trunc(), order + 1)));
        }
        let (y, f) = potentials_of(&s, order)?;
        Ok(SolutionBundle { order, epsilon, seeds, s, y, f })
    }

    pub fn series(&self, name: &str) -> Option<&PuiseuxSeries> {
        match name {
            "Y" => Some(&self.y),
            "F" => Some(&self.f),
            _ => {
                let i: usize = name.strip_prefix('s')?.parse().ok()?;
                self.s.get(i)
            }
        }
    }

    /// The same solution known only through `x^order`.
    pub fn truncated(&self, order: u32) -> Result<Self> {
        if order > self.order {
            return Err(Error::Precision {
                required: order as usize,
                available: self.order as usize,
            });
        }
        let t = |x: &PuiseuxSeries| x.truncate(order + 1);
        Ok(SolutionBundle {
            order,
            epsilon: self.epsilon,
            seeds: self.seeds.clone(),
            s: self.s.iter().map(t).collect(),
            y: t(&self.y),
            f: t(&self.f),
        })
    }

    fn bindings(&self) -> BTreeMap<Var, PuiseuxSeries> {
        Var::moduli().zip(self.s.iter().cloned()).collect()
    }
}

fn potentials_of(s: &[PuiseuxSeries], order: u32) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    let bindings: BTreeMap<Var, PuiseuxSeries> = Var::moduli().zip(s.iter().cloned()).collect();
    let mut ev = SeriesEvaluator::new(&bindings, order + 1)?;
    let y = ev.eval(&gmconn::yukawa())?;
    let f = y.mul(&s[7]).neg();
    Ok((y, f))
}

/// `Y` and `F` recomputed from the coordinate series.
pub fn potentials(bundle: &SolutionBundle) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    potentials_of(&bundle.s, bundle.order)
}

fn jacobian(field: &VectorField, seeds: &SeedConstants) -> Result<Matrix<QuadRat>> {
    let point = seeds.point();
    let mut j = Matrix::zeros(9, 9);
    for (a, va) in Var::moduli().enumerate() {
        let f = field.get(va);
        for (b, vb) in Var::moduli().enumerate() {
            if f.depends_on(vb) {
                j[(a, b)] = f.diff(vb).eval(&point)?;
            }
        }
    }
    Ok(j)
}

/// Solves `((m/2)·I − J)·v = rhs`, fixing free directions at resonant
/// orders from the normalization table.
fn solve_order(m: u32, jac: &Matrix<QuadRat>, rhs: &[QuadRat], seeds: &SeedConstants) -> Result<Vec<QuadRat>> {
    let half_m = QuadRat::frac(m as i64, 2);
    let a = Matrix::from_fn(9, 9, |i, j| {
        let d = if i == j { half_m.clone() } else { QuadRat::zero() };
        &d - &jac[(i, j)]
    });
    let fixed: Vec<usize> = NORMALIZATION.iter().filter(|(o, _)| *o == m).map(|(_, i)| *i).collect();
    match a.solve(rhs) {
        Ok(v) if fixed.is_empty() => Ok(v),
        Ok(_) => Err(Error::Resonance {
            order: m as usize,
            detail: "expected resonance is absent".into(),
        }),
        Err(Error::NonUnique(_) | Error::Verification(_)) if !fixed.is_empty() => {
            let mut a2 = a.clone();
            let mut rhs2 = rhs.to_vec();
            for &i in &fixed {
                for j in 0..9 {
                    a2[(i, j)] = if i == j { QuadRat::one() } else { QuadRat::zero() };
                }
                rhs2[i] = seeds.s4_lead.clone();
            }
            let v = a2.solve(&rhs2).map_err(|e| Error::Resonance {
                order: m as usize,
                detail: format!("normalized system: {e}"),
            })?;
            for i in 0..9 {
                let lhs = (0..9).fold(QuadRat::zero(), |acc, j| &acc + &(&a[(i, j)] * &v[j]));
                if lhs != rhs[i] {
                    return Err(Error::Resonance {
                        order: m as usize,
                        detail: format!("row {i} unsolvable: {lhs} != {}", rhs[i]),
                    });
                }
            }
            Ok(v)
        }
        Err(Error::NonUnique(e) | Error::Verification(e)) => Err(Error::Resonance {
            order: m as usize,
            detail: format!("singular system without normalization: {e}"),
        }),
        Err(e) => Err(e),
    }
}

/// Integrates the modular vector field through `x^order` and verifies the
/// residuals.
pub fn solve(order: u32, epsilon: i32) -> Result<SolutionBundle> {
    if order < 1 {
        return Err(Error::Input("truncation order must be at least 1".into()));
    }
    if epsilon.abs() != 1 {
        return Err(Error::Input(format!("epsilon must be +1 or -1, got {epsilon}")));
    }
    let bundle = integrate(order, epsilon)?;
    let residual = residual_report(&bundle)?;
    if !residual.passed() {
        return Err(Error::Internal(format!("residuals do not vanish:\n{residual}")));
    }
    Ok(bundle)
}

fn integrate(order: u32, epsilon: i32) -> Result<SolutionBundle> {
    let seeds = seed_constants()?;
    let field = gmconn::reference_vector_field(epsilon);
    let jac = jacobian(&field, &seeds)?;
    let prog = Program::compile(&field)?;
    let mut rel = Relaxed::new(&prog);
    let mut vars: Vec<Vec<QuadRat>> = seeds.values.iter().map(|c| vec![c.clone()]).collect();
    rel.step(0, &vars)?;
    for m in 1..=order as usize {
        for v in vars.iter_mut() {
            v.push(QuadRat::zero());
        }
        rel.step(m, &vars)?;
        let rhs: Vec<QuadRat> = (0..9).map(|i| rel.output(i, m).clone()).collect();
        let sol = solve_order(m as u32, &jac, &rhs, &seeds)?;
        for (v, x) in vars.iter_mut().zip(sol) {
            v[m] = x;
        }
        rel.step(m, &vars)?;
    }
    let s: Vec<PuiseuxSeries> = vars.iter().map(|v| PuiseuxSeries::from_dense(RAM, v)).collect();
    SolutionBundle::from_series(order, epsilon, seeds, s)
}

/// `θ s_i − R_i(s)` through `x^order` for every coordinate.
pub fn residual_report(bundle: &SolutionBundle) -> Result<Report> {
    let field = gmconn::reference_vector_field(bundle.epsilon);
    let mut ev = SeriesEvaluator::new(&bundle.bindings(), bundle.order + 1)?;
    let five = QuadRat::from_int(5);
    let mut rep = Report::new("residuals");
    for (i, v) in Var::moduli().enumerate() {
        let r = ev.eval(&field.get(v))?;
        let res = bundle.s[i].theta(&five).sub(&r);
        rep.check(
            format!("residual {v}"),
            format!("{} terms", res.len()),
            format!("0 + O(x^{})", bundle.order + 1),
            res.is_empty(),
        );
    }
    Ok(rep)
}

fn support_ok(x: &PuiseuxSeries, pred: impl Fn(u32) -> bool) -> bool {
    x.terms().all(|(m, _)| pred(m))
}

/// Sector support, √5-rationality, and consistency with the symbolic side.
pub fn property_report(bundle: &SolutionBundle) -> Result<Report> {
    let mut rep = residual_report(bundle)?;
    for i in [0, 1, 2, 3, 5, 6] {
        let ok = support_ok(&bundle.s[i], |m| m % 10 == 0);
        rep.check(format!("support s{i}"), if ok { "x^(10k)" } else { "other" }, "x^(10k)", ok);
    }
    let ok = support_ok(&bundle.s[4], |m| m % 10 == 1);
    rep.check("support s4", if ok { "x^(10k+1)" } else { "other" }, "x^(10k+1)", ok);
    for i in [7, 8] {
        let ok = support_ok(&bundle.s[i], |m| m % 10 == 5);
        rep.check(format!("support s{i}"), if ok { "x^(5 odd)" } else { "other" }, "x^(5 odd)", ok);
    }
    for (name, x) in [("Y", &bundle.y), ("F", &bundle.f)] {
        let ok = x.terms().all(|(_, c)| c.is_rational());
        rep.check(format!("{name} rational"), if ok { "irr = 0" } else { "irr != 0" }, "irr = 0", ok);
    }
    let s4_10 = bundle.s[4].pow(10);
    let lead = s4_10.terms().next().map(|(m, c)| (m, c.clone()));
    let ok = support_ok(&s4_10, |m| m % 10 == 0) && lead == Some((10, QuadRat::one()));
    rep.check("s4^10 leading term", lead.map_or("none".into(), |(m, c)| format!("({c})*x^{m}")), "(1)*x^10", ok);

    let (y, f) = potentials(bundle)?;
    rep.check("potentials Y", if y == bundle.y { "recomputed" } else { "differs" }, "stored", y == bundle.y);
    rep.check("potentials F", if f == bundle.f { "recomputed" } else { "differs" }, "stored", f == bundle.f);
    let derived = gmconn::derive_modular_vector_field(&gmconn::build_connection(bundle.epsilon)?)?;
    let mut ev = SeriesEvaluator::new(&bundle.bindings(), bundle.order + 1)?;
    let ys = ev.eval(&derived.y)?;
    let fs = ev.eval(&derived.f)?;
    rep.check("derived Y on series", if ys == bundle.y { "equal" } else { "differs" }, "Y", ys == bundle.y);
    rep.check("derived F on series", if fs == bundle.f { "equal" } else { "differs" }, "F", fs == bundle.f);
    let f_plus = bundle.f.add(&bundle.s[7].mul(&bundle.y));
    rep.check("F + s7*Y", format!("{} terms", f_plus.len()), "0", f_plus.is_empty());

    let seeds = bundle.seeds.point();
    let field = gmconn::reference_vector_field(bundle.epsilon);
    let r3 = field.get(Var::s(3)).eval(&seeds)?;
    rep.check("order-zero equation s3", r3.to_string(), "0", r3.is_zero());
    Ok(rep)
}

fn series_coeff_rational(x: &PuiseuxSeries, m: u32, what: &str) -> Result<BigRational> {
    let c = x.coeff(m).unwrap_or_default();
    if !c.is_rational() {
        return Err(Error::Verification(format!("{what} coefficient at x^{m} is irrational: {c}")));
    }
    Ok(c.rat)
}

/// `−5³Y` (closed) or `(4/5³)F` (open), the generating functions of the
/// instanton numbers.
pub fn sector_series(bundle: &SolutionBundle, sector: Sector) -> PuiseuxSeries {
    match sector {
        Sector::Closed => bundle.y.scale(&QuadRat::from_int(-125)),
        Sector::Open => bundle.f.scale(&QuadRat::frac(4, 125)),
    }
}

/// Instanton numbers through degree `max_degree`.
pub fn invariants(bundle: &SolutionBundle, sector: Sector, max_degree: u32) -> Result<InvariantTable> {
    let gen = sector_series(bundle, sector);
    let mut coeffs = BTreeMap::new();
    match sector {
        Sector::Closed => {
            let required = 10 * max_degree;
            if required > bundle.order {
                return Err(Error::Precision {
                    required: required as usize,
                    available: bundle.order as usize,
                });
            }
            for d in 1..=max_degree {
                coeffs.insert(d, series_coeff_rational(&gen, 10 * d, "-125*Y")?);
            }
            lambert_closed_invert(&coeffs, max_degree)
        }
        Sector::Open => {
            let top = if max_degree % 2 == 1 { max_degree } else { max_degree.saturating_sub(1) };
            let required = 5 * top;
            if required > bundle.order {
                return Err(Error::Precision {
                    required: required as usize,
                    available: bundle.order as usize,
                });
            }
            for m in (1..=top).step_by(2) {
                coeffs.insert(m, series_coeff_rational(&gen, 5 * m, "(4/125)*F")?);
            }
            lambert_open_invert(&coeffs, max_degree)
        }
    }
}

fn double_factorial(n: u32) -> BigInt {
    (1..=n).rev().step_by(2).fold(BigInt::one(), |acc, k| acc * k)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `φ = 2·Σ_{m odd} (5m)!!/(m!!)⁵ w^m` through `w^max`, as a series with
/// ramification 1 in `w = (5⁻⁵z)^{1/2}`.
pub fn phi_series(max: u32) -> PuiseuxSeries {
    let terms = (1..=max).step_by(2).map(|m| {
        let c = BigRational::new(BigInt::from(2) * double_factorial(5 * m), double_factorial(m).pow(5));
        (m, QuadRat::from_rational(c))
    });
    PuiseuxSeries::from_terms(1, max + 1, terms)
}

/// `Σ_m (5m)!/(m!)⁵ (5⁻⁵z)^m` through `z^max`, in `w`.
pub fn holomorphic_series(max: u32) -> PuiseuxSeries {
    let terms = (0..=max).map(|m| {
        let c = BigRational::new(factorial(5 * m), factorial(m).pow(5));
        (2 * m, QuadRat::from_rational(c))
    });
    PuiseuxSeries::from_terms(1, 2 * max + 1, terms)
}

/// `θ⁴ − z(θ+1/5)(θ+2/5)(θ+3/5)(θ+4/5)` on a `w`-series, with
/// `θ = (1/2) w d/dw` and `z = 5⁵w²`.
pub fn quintic_operator(f: &PuiseuxSeries) -> PuiseuxSeries {
    let half = QuadRat::frac(1, 2);
    let th = |g: &PuiseuxSeries| g.theta(&half);
    let th4 = th(&th(&th(&th(f))));
    let mut prod = f.clone();
    for k in 1..=4 {
        prod = th(&prod).add(&prod.scale(&QuadRat::frac(k, 5)));
    }
    let z = PuiseuxSeries::monomial(2, QuadRat::from_int(3125), 1, f.trunc() + 2);
    th4.sub(&z.mul(&prod).truncate(f.trunc()))
}

fn w_text(x: &PuiseuxSeries) -> String {
    x.to_string().replace("q^", "w^")
}

/// The inhomogeneous Picard-Fuchs equation for `φ` through `w^w_order` and
/// the homogeneous one for the holomorphic period through `z^z_order`.
pub fn verify_pfih(w_order: u32, z_order: u32) -> Report {
    let mut rep = Report::new("picard-fuchs");
    let phi = phi_series(w_order);
    for (m, want) in [(1, QuadRat::from_int(30)), (2, QuadRat::zero()), (3, QuadRat::frac(50050, 3))] {
        let got = phi.coeff(m).unwrap_or_default();
        rep.check(format!("phi w^{m}"), got.to_string(), want.to_string(), got == want);
    }
    let lhs = quintic_operator(&phi);
    let rhs = PuiseuxSeries::monomial(1, QuadRat::frac(15, 8), 1, w_order + 1);
    rep.check(format!("L(phi) through w^{w_order}"), w_text(&lhs), w_text(&rhs), lhs == rhs);
    let hol = holomorphic_series(z_order);
    let l_hol = quintic_operator(&hol);
    rep.check(format!("L(varpi) through z^{z_order}"), w_text(&l_hol), "0", l_hol.is_empty());
    let l_one = quintic_operator(&PuiseuxSeries::one(1, 5));
    // −(24/625)z = −120 w²
    let want = PuiseuxSeries::monomial(2, QuadRat::from_int(-120), 1, 5);
    rep.check("L(1)", w_text(&l_one), w_text(&want), l_one == want);
    rep
}

/// Seeds, properties and anchored coefficients of a solved bundle.
pub fn verify_solution(bundle: &SolutionBundle) -> Result<Report> {
    let mut rep = Report::new("modular solution");
    let expect = [(0, -1, 1, 5), (1, 3, 1, -25), (2, 2, 1, -35), (3, 3, 1, -6), (5, 5, 1, -1), (6, 6, 1, -15)];
    for (i, _, _, v) in expect {
        let want = if i == 0 { QuadRat::frac(1, 5) * QuadRat::sqrt5() } else { QuadRat::from_int(v) };
        let got = &bundle.seeds.values[i];
        rep.check(format!("seed s{i}"), got.to_string(), want.to_string(), *got == want);
    }
    rep.extend(property_report(bundle)?);
    let closed = sector_series(bundle, Sector::Closed);
    for (d, v) in [(0u32, 5i64), (1, 2875), (2, 4876875), (3, 8564575000)] {
        if 10 * d <= bundle.order {
            let got = closed.coeff(10 * d).unwrap_or_default();
            let want = QuadRat::from_int(v);
            rep.check(format!("-125*Y q^{d}"), got.to_string(), want.to_string(), got == want);
        }
    }
    let open = sector_series(bundle, Sector::Open);
    for (m, v) in [(1u32, 30i64), (3, 13800), (5, 27206280), (7, 47823842250)] {
        if 5 * m <= bundle.order {
            let got = open.coeff(5 * m).unwrap_or_default();
            let want = QuadRat::from_int(v);
            rep.check(format!("(4/125)*F q^({m}/2)"), got.to_string(), want.to_string(), got == want);
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        let s = seed_constants().unwrap();
        let ints = [(1, -25), (2, -35), (3, -6), (4, 0), (5, -1), (6, -15), (7, 0), (8, 0)];
        for (i, v) in ints {
            assert_eq!(s.values[i], QuadRat::from_int(v), "s{i}");
        }
        assert_eq!(s.values[0], QuadRat::from_parts((0, 1), (1, 5)));
    }

    #[test]
    fn jacobian_resonance() {
        let s = seed_constants().unwrap();
        let j = jacobian(&gmconn::reference_vector_field(-1), &s).unwrap();
        assert_eq!(j[(4, 4)], QuadRat::frac(1, 2));
        assert!((0..9).all(|k| k == 4 || j[(4, k)].is_zero()));
    }

    #[test]
    fn small_solve() {
        let b = solve(21, gmconn::EPSILON).unwrap();
        assert_eq!(b.y.coeff(0), Some(QuadRat::frac(-1, 25)));
        assert_eq!(b.f.coeff(0), Some(QuadRat::zero()));
        let open = sector_series(&b, Sector::Open);
        assert_eq!(open.coeff(5), Some(QuadRat::from_int(30)));
        assert_eq!(open.coeff(15), Some(QuadRat::from_int(13800)));
        let closed = sector_series(&b, Sector::Closed);
        assert_eq!(closed.coeff(10), Some(QuadRat::from_int(2875)));
        assert_eq!(b.s[4].coeff(1), Some(QuadRat::one()));
        let rep = property_report(&b).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn precision_errors() {
        let b = solve(12, gmconn::EPSILON).unwrap();
        assert!(matches!(
            invariants(&b, Sector::Closed, 2),
            Err(Error::Precision { required: 20, available: 12 })
        ));
        assert!(matches!(
            invariants(&b, Sector::Open, 3),
            Err(Error::Precision { required: 15, available: 12 })
        ));
        let t = invariants(&b, Sector::Closed, 1).unwrap();
        assert_eq!(t.get(1), Some(&BigRational::from_integer(2875.into())));
    }

    #[test]
    fn phi_coefficients() {
        let p = phi_series(5);
        assert_eq!(p.coeff(1), Some(QuadRat::from_int(30)));
        assert_eq!(p.coeff(3), Some(QuadRat::frac(50050, 3)));
        assert_eq!(p.coeff(2), Some(QuadRat::zero()));
        let rep = verify_pfih(15, 10);
        assert!(rep.passed(), "{rep}");
    }
}
