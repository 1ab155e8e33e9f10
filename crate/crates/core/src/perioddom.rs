//! The gauge group `G`, its action on the moduli coordinates and on period
//! matrices, and the τ-normal form of a period matrix.
//!
//! Group elements use the eight-coordinate chart `(g1..g6, h1, h2)`. The
//! matrix depends on `g1` only through `g1²`, so a [`GroupElement`] is a point
//! of the double cover; composition multiplies `g1` directly.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gmconn;
use crate::numfield::{Field, QuadRat};
use crate::report::Report;
use crate::symca::{Matrix, RFMatrix, RatFunc, Var};

/// A point `(g1, …, g6, h1, h2)` of the chart of `G`.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement<T> {
    pub g: [T; 6],
    pub h: [T; 2],
}

fn c<T: Field>(n: i64) -> T {
    T::from_i64(n)
}

impl<T: Field> GroupElement<T> {
    pub fn new(g: [T; 6], h: [T; 2]) -> Self {
        GroupElement { g, h }
    }

    pub fn identity() -> Self {
        GroupElement {
            g: [T::one(), T::one(), T::zero(), T::zero(), T::zero(), T::zero()],
            h: [T::zero(), T::zero()],
        }
    }

    /// `g_i` for `1 ≤ i ≤ 6`.
    pub fn gi(&self, i: usize) -> &T {
        &self.g[i - 1]
    }

    fn check_chart(&self) -> Result<()> {
        if self.g[0].is_zero() {
            return Err(Error::Chart("g1 = 0 leaves the chart".into()));
        }
        if self.g[1].is_zero() {
            return Err(Error::Chart("g2 = 0 leaves the chart".into()));
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<Matrix<T>> {
        self.check_chart()?;
        let [g1, g2, g3, g4, g5, g6] = &self.g;
        let [h1, h2] = &self.h;
        let k = g1.times(g1);
        let kinv = k.recip()?;
        let g2inv = g2.recip()?;
        let mut m = Matrix::zeros(5, 5);
        m[(0, 0)] = T::one();
        m[(0, 3)] = h1.clone();
        m[(0, 4)] = h2.clone();
        m[(1, 1)] = kinv.clone();
        m[(1, 2)] = g3.negated().times(&kinv);
        m[(1, 3)] = g3.times(g6).negated().plus(g4).times(&kinv);
        m[(1, 4)] = g3.times(g4).negated().plus(g5).times(&kinv);
        m[(2, 2)] = g2inv.clone();
        m[(2, 3)] = g6.times(&g2inv);
        m[(2, 4)] = g4.times(&g2inv);
        m[(3, 3)] = g2.clone();
        m[(3, 4)] = g2.times(g3);
        m[(4, 4)] = k;
        Ok(m)
    }

    /// Reads coordinates from a matrix of `G`; `g1` is supplied because the
    /// matrix only determines `g1²`.
    pub fn from_matrix(m: &Matrix<T>, g1: T) -> Result<Self> {
        let g2 = m[(3, 3)].clone();
        if g2.is_zero() {
            return Err(Error::Chart("g2 = 0 leaves the chart".into()));
        }
        let g3 = m[(3, 4)].try_div(&g2)?;
        let g6 = m[(2, 3)].times(&g2);
        let g4 = m[(2, 4)].times(&g2);
        let k = g1.times(&g1);
        let g5 = m[(1, 4)].times(&k).plus(&g3.times(&g4));
        let out = GroupElement {
            g: [g1, g2, g3, g4, g5, g6],
            h: [m[(0, 3)].clone(), m[(0, 4)].clone()],
        };
        if !out.to_matrix()?.equals(m) {
            return Err(Error::Chart("matrix is not in the image of the chart".into()));
        }
        Ok(out)
    }

    pub fn compose(&self, o: &Self) -> Result<Self> {
        let m = self.to_matrix()?.mul(&o.to_matrix()?);
        Self::from_matrix(&m, self.g[0].times(&o.g[0]))
    }

    pub fn inverse(&self) -> Result<Self> {
        let m = self.to_matrix()?.inverse()?;
        Self::from_matrix(&m, self.g[0].recip()?)
    }

    /// Mathematical equality of coordinates.
    pub fn equals(&self, o: &Self) -> bool {
        self.g.iter().zip(&o.g).all(|(a, b)| a.equals(b)) && self.h.iter().zip(&o.h).all(|(a, b)| a.equals(b))
    }
}

impl<T: Field> fmt::Display for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.g.iter().chain(self.h.iter()).map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The four defining relations of `G` on a 5×5 matrix.
pub fn group_relations_hold<T: Field>(m: &Matrix<T>) -> bool {
    let e = |i: usize, j: usize| m[(i, j)].clone();
    e(1, 1).times(&e(4, 4)).equals(&T::one())
        && e(2, 2).times(&e(3, 3)).equals(&T::one())
        && e(1, 2).times(&e(4, 4)).plus(&e(2, 2).times(&e(3, 4))).is_zero()
        && e(1, 3).times(&e(4, 4)).plus(&e(2, 3).times(&e(3, 4))).minus(&e(2, 4).times(&e(3, 3))).is_zero()
}

/// `(a, b, c, d)` of the frame matrix at a point.
pub fn frame_entries<T: Field>(s: &[T; 9]) -> Result<[T; 4]> {
    let pw = |x: &T, e: i32| x.powi(e);
    let a = c::<T>(3125).times(&pw(&s[0], 8)?).plus(&s[3]).negated().try_div(&s[5])?;
    let d = c::<T>(625).times(&pw(&s[4], 10)?.minus(&pw(&s[0], 10)?));
    let b = d.negated().try_div(&s[5])?;
    let cc = c::<T>(3125).times(&pw(&s[0], 6)?).plus(&s[2]).plus(&s[6].times(&a)).try_div(&b)?;
    Ok([a, b, cc, d])
}

fn check_domain<T: Field>(s: &[T; 9]) -> Result<()> {
    let d = s[0].powi(10)?.minus(&s[4].powi(10)?);
    if s[5].is_zero() || s[0].is_zero() || s[4].is_zero() || d.is_zero() {
        return Err(Error::Domain("point outside s0·s4·s5·(s0¹⁰ − s4¹⁰) ≠ 0".into()));
    }
    Ok(())
}

/// The right action `point • g` on the nine moduli coordinates.
pub fn act_moduli<T: Field>(s: &[T; 9], g: &GroupElement<T>) -> Result<[T; 9]> {
    check_domain(s)?;
    g.check_chart()?;
    let [a, b, cc, _] = frame_entries(s)?;
    let [g1, g2, g3, g4, g5, g6] = &g.g;
    let [h1, h2] = &g.h;
    let k = g1.times(g1);
    let k2 = k.times(&k);
    let k3 = k2.times(&k);
    let k4 = k3.times(&k);
    let g2g3 = g2.times(g3);
    let g4_g2 = g4.try_div(g2)?;
    let out = [
        s[0].times(g1),
        s[1].times(&k2)
            .plus(&cc.times(&k).times(&g2g3))
            .plus(&a.times(&k).times(&g4_g2))
            .minus(&g3.times(g4))
            .plus(g5),
        s[2].times(&k3).plus(&s[6].times(&k2).times(&g2g3)).plus(&b.times(&k2).times(&g4_g2)),
        s[3].times(&k4).plus(&s[5].times(&k3).times(&g2g3)),
        s[4].times(g1),
        s[5].times(&k3).times(g2),
        s[6].times(&k2).times(g2).plus(&b.times(&k2).times(&g6.try_div(g2)?)),
        s[7].times(g2).plus(h1),
        s[7].times(&g2g3).plus(&s[8].times(&k)).plus(h2),
    ];
    if let Err(e) = check_domain(&out) {
        return Err(Error::Domain(format!("degenerate image: {e}")));
    }
    Ok(out)
}

/// Entry positions of `gᵀ·S·K` holding the new coordinates.
pub const READ_OFF: [(usize, (usize, usize)); 7] =
    [(7, (3, 0)), (6, (3, 2)), (5, (3, 3)), (8, (4, 0)), (1, (4, 1)), (2, (4, 2)), (3, (4, 3))];

fn sym_point() -> [RatFunc; 9] {
    std::array::from_fn(RatFunc::s)
}

fn sym_group() -> GroupElement<RatFunc> {
    GroupElement {
        g: std::array::from_fn(|i| RatFunc::var(Var::g(i + 1))),
        h: std::array::from_fn(|i| RatFunc::var(Var::h(i + 1))),
    }
}

/// Recomputes the action from `M = gᵀ·S·K` (`K = diag(1, k, …, k⁴)`,
/// `k = g1²`) with symbolic `g` and `s`, and compares every entry of `M`
/// with the frame matrix at `point • g`.
pub fn verify_action_derivation() -> Result<Report> {
    let g = sym_group();
    let s = gmconn::build_s();
    let k = RatFunc::var(Var::g(1)).pow(2);
    let kk = RFMatrix::diag((0..5).map(|e| k.pow(e)).collect());
    let m = g.to_matrix()?.transpose().mul(&s).mul(&kk);
    let image = act_moduli(&sym_point(), &g)?;
    let [a, b, cc, d] = frame_entries(&image)?;
    let mut rep = Report::new("group action");
    for (idx, (i, j)) in READ_OFF {
        let got = &m[(i, j)];
        rep.check(format!("s{idx} from M[{i},{j}]"), got.to_string(), image[idx].to_string(), got.equals(&image[idx]));
    }
    for (name, (i, j), want) in [("a", (2, 1), a), ("b", (2, 2), b), ("c", (3, 1), cc), ("d", (4, 4), d)] {
        let got = &m[(i, j)];
        rep.check(format!("{name} at image from M[{i},{j}]"), got.to_string(), want.to_string(), got.equals(&want));
    }
    let fixed = [((0, 0), 1), ((1, 1), 1)];
    for ((i, j), v) in fixed {
        let want = RatFunc::int(v);
        rep.check(format!("M[{i},{j}]"), m[(i, j)].to_string(), want.to_string(), m[(i, j)].equals(&want));
    }
    for (i, j) in [(0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (1, 2), (1, 3), (1, 4), (2, 0), (2, 3), (2, 4), (3, 4)] {
        rep.check(format!("M[{i},{j}]"), m[(i, j)].to_string(), "0", m[(i, j)].is_zero());
    }
    let z = gmconn::z();
    let mut sub = BTreeMap::new();
    sub.insert(Var::s(0), image[0].clone());
    sub.insert(Var::s(4), image[4].clone());
    let z_image = z.substitute(&sub)?;
    rep.check("z at image", z_image.to_string(), z.to_string(), z_image.equals(&z));
    Ok(rep)
}

/// The six period coordinates of a τ-shaped matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct TauData<T> {
    pub tau: [T; 6],
}

impl<T: Field> TauData<T> {
    pub fn to_matrix(&self) -> Matrix<T> {
        let t = &self.tau;
        let z = T::zero;
        let o = T::one;
        Matrix::from_rows(vec![
            vec![o(), t[4].clone(), t[5].clone(), z(), z()],
            vec![z(), t[0].clone(), o(), z(), z()],
            vec![z(), o(), z(), z(), z()],
            vec![z(), t[1].clone(), t[3].clone(), o(), z()],
            vec![z(), t[2].clone(), t[0].times(&t[3]).negated().plus(&t[1]), t[0].negated(), o()],
        ])
    }

    /// Reads τ from a matrix of the normal form; `None` if the shape differs.
    pub fn from_matrix(m: &Matrix<T>) -> Option<Self> {
        let tau = [
            m[(1, 1)].clone(),
            m[(3, 1)].clone(),
            m[(4, 1)].clone(),
            m[(3, 2)].clone(),
            m[(0, 1)].clone(),
            m[(0, 2)].clone(),
        ];
        let t = TauData { tau };
        t.to_matrix().equals(m).then_some(t)
    }
}

/// `Ψ⁻ᵀ` with the degenerate `δ0` direction: `0 ⊕ (Ψ's 4×4 block)⁻ᵀ`.
pub fn psi_inv_t<T: Field>() -> Matrix<T> {
    let block: Matrix<T> = Matrix::from_fn(4, 4, |i, j| psi::<T>()[(i + 1, j + 1)].clone());
    let inv_t = block.inverse().expect("intersection block is unimodular").transpose();
    Matrix::from_fn(5, 5, |i, j| if i == 0 || j == 0 { T::zero() } else { inv_t[(i - 1, j - 1)].clone() })
}

/// Intersection matrix of the homology basis `δ0..δ4`.
pub fn psi<T: Field>() -> Matrix<T> {
    let mut m = Matrix::zeros(5, 5);
    m[(1, 3)] = T::one();
    m[(2, 4)] = T::one();
    m[(3, 1)] = c(-1);
    m[(4, 2)] = c(-1);
    m
}

/// Whether `Pᵀ·Ψ⁻ᵀ·P = Φ`.
pub fn check_period_relations<T: Field>(p: &Matrix<T>) -> bool {
    p.transpose().mul(&psi_inv_t()).mul(p).equals(&gmconn::phi())
}

/// The coordinates of `g' = g⁻¹` from the entries of `P`, with `h' = 0`.
fn inverse_coordinates<T: Field>(p: &Matrix<T>, g1: T) -> Result<GroupElement<T>> {
    let e = |i: usize, j: usize| p[(i, j)].clone();
    let minor = e(1, 1).times(&e(2, 2)).minus(&e(1, 2).times(&e(2, 1)));
    if minor.is_zero() {
        return Err(Error::Normalization("P11·P22 − P12·P21 vanishes".into()));
    }
    let p21 = e(2, 1);
    let g2 = p21.negated().try_div(&minor)?;
    let g3 = e(2, 2).negated().try_div(&p21)?;
    let g4 = e(1, 3).times(&e(2, 2)).minus(&e(1, 2).times(&e(2, 3))).try_div(&minor)?;
    let g5 = e(1, 1)
        .times(&e(2, 2))
        .times(&e(2, 4))
        .minus(&e(1, 2).times(&e(2, 1)).times(&e(2, 4)))
        .plus(&e(1, 2).times(&e(2, 2)).times(&e(2, 3)))
        .minus(&e(1, 3).times(&e(2, 2)).times(&e(2, 2)))
        .try_div(&minor.times(&p21))?;
    let g6 = e(1, 1).times(&e(2, 3)).minus(&e(1, 3).times(&e(2, 1))).try_div(&minor)?;
    Ok(GroupElement {
        g: [g1, g2, g3, g4, g5, g6],
        h: [T::zero(), T::zero()],
    })
}

/// Finds `g ∈ G` with `P·g` of τ-shape and returns `g` with the τ data.
pub fn tau_normalize(p: &Matrix<QuadRat>) -> Result<(GroupElement<QuadRat>, TauData<QuadRat>)> {
    let p21 = p[(2, 1)].clone();
    if p21.is_zero() {
        return Err(Error::Normalization("P21 vanishes".into()));
    }
    let g1 = p21
        .inv()?
        .sqrt()
        .ok_or_else(|| Error::Normalization(format!("1/P21 = {} has no square root in Q(sqrt5)", p21.inv().unwrap())))?;
    let mut gp = inverse_coordinates(p, g1)?;
    // h' enters P·(g')⁻¹ affinely; solve for the entries (0,3), (0,4) to vanish
    let row0 = |gp: &GroupElement<QuadRat>| -> Result<[QuadRat; 2]> {
        let pg = p.mul(&gp.inverse()?.to_matrix()?);
        Ok([pg[(0, 3)].clone(), pg[(0, 4)].clone()])
    };
    let base = row0(&gp)?;
    let mut cols = Vec::new();
    for k in 0..2 {
        let mut e = gp.clone();
        e.h[k] = QuadRat::one();
        let r = row0(&e)?;
        cols.push([&r[0] - &base[0], &r[1] - &base[1]]);
    }
    let sys = Matrix::from_rows(vec![vec![cols[0][0].clone(), cols[1][0].clone()], vec![cols[0][1].clone(), cols[1][1].clone()]]);
    let h = sys
        .solve(&[-&base[0], -&base[1]])
        .map_err(|e| Error::Normalization(format!("h-system: {e}")))?;
    gp.h = [h[0].clone(), h[1].clone()];
    let g = gp.inverse()?;
    let t = p.mul(&g.to_matrix()?);
    let tau = TauData::from_matrix(&t).ok_or_else(|| Error::Normalization(format!("P·g is not of τ-shape:\n{t}")))?;
    Ok((g, tau))
}

fn small_rational<R: Rng>(rng: &mut R, nonzero: bool) -> QuadRat {
    loop {
        let x = QuadRat::from_parts((rng.gen_range(-9..=9), rng.gen_range(1..=5)), (rng.gen_range(-3..=3), rng.gen_range(1..=3)));
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

/// Random chart point with `g1, g2 ≠ 0`.
pub fn random_group_element<R: Rng>(rng: &mut R) -> GroupElement<QuadRat> {
    GroupElement {
        g: std::array::from_fn(|i| small_rational(rng, i < 2)),
        h: std::array::from_fn(|_| small_rational(rng, false)),
    }
}

pub fn random_tau<R: Rng>(rng: &mut R) -> TauData<QuadRat> {
    TauData {
        tau: std::array::from_fn(|_| small_rational(rng, false)),
    }
}

/// Random point of `T_op` with rational coordinates.
pub fn random_moduli_point<R: Rng>(rng: &mut R) -> [QuadRat; 9] {
    loop {
        let s: [QuadRat; 9] = std::array::from_fn(|_| QuadRat::frac(rng.gen_range(-7..=7), rng.gen_range(1..=3)));
        if check_domain(&s).is_ok() && frame_entries(&s).is_ok_and(|e| !e[1].is_zero()) {
            return s;
        }
    }
}

/// Seed of the randomized suites.
pub const DEFAULT_SEED: u64 = 0x5eed_0005;
/// Number of randomized instances per property.
pub const DEFAULT_INSTANCES: usize = 100;

/// Chart, composition and action checks on seeded random instances.
pub fn verify_group(seed: u64, instances: usize) -> Result<Report> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let mut rep = verify_action_derivation()?;
    let id = GroupElement::<QuadRat>::identity();
    let idm = id.to_matrix()?;
    rep.check("identity matrix", if idm == Matrix::identity(5) { "I" } else { "other" }, "I", idm == Matrix::identity(5));
    let (mut rel, mut comp, mut inv, mut act) = (0, 0, 0, 0);
    for _ in 0..instances {
        let g = random_group_element(rng);
        let h = random_group_element(rng);
        if group_relations_hold(&g.to_matrix()?) {
            rel += 1;
        }
        let gh = g.compose(&h)?;
        if gh.to_matrix()? == g.to_matrix()?.mul(&h.to_matrix()?) && g.compose(&id)? == g {
            comp += 1;
        }
        if g.compose(&g.inverse()?)?.equals(&id) {
            inv += 1;
        }
        let s = random_moduli_point(rng);
        let lhs = act_moduli(&act_moduli(&s, &g)?, &h)?;
        let rhs = act_moduli(&s, &gh)?;
        if lhs == rhs && act_moduli(&s, &id)? == s {
            act += 1;
        }
    }
    let n = instances.to_string();
    rep.check("relations of G on random elements", rel.to_string(), n.clone(), rel == instances);
    rep.check("compose matches matrix product", comp.to_string(), n.clone(), comp == instances);
    rep.check("g·g⁻¹ = identity", inv.to_string(), n.clone(), inv == instances);
    rep.check("(s•g)•g' = s•(gg')", act.to_string(), n, act == instances);
    let r = QuadRat::frac(3, 2);
    let scaling = GroupElement::new(
        [r.clone(), QuadRat::one(), QuadRat::zero(), QuadRat::zero(), QuadRat::zero(), QuadRat::zero()],
        [QuadRat::zero(), QuadRat::zero()],
    );
    let s = random_moduli_point(rng);
    let t = act_moduli(&s, &scaling)?;
    let ok = t[0] == &s[0] * &r && t[4] == &s[4] * &r;
    rep.check("scaling subgroup on (s0, s4)", format!("({}, {})", t[0], t[4]), "(r*s0, r*s4)", ok);
    Ok(rep)
}

/// Normal-form checks: symbolic formulas for `g'`, seeded round trips,
/// idempotence and preservation of the period relations.
pub fn verify_tau(seed: u64, instances: usize) -> Result<Report> {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new("tau normal form");
    // symbolic: P = τ·g with symbols, the g' formulas must return g
    let tau = TauData {
        tau: std::array::from_fn(|i| RatFunc::var(Var::tau(i))),
    };
    let g = sym_group();
    let tm = tau.to_matrix();
    rep.check("tau satisfies relations", "symbolic", "Phi", check_period_relations(&tm));
    let p = tm.mul(&g.to_matrix()?);
    rep.check("tau*g satisfies relations", "symbolic", "Phi", check_period_relations(&p));
    let gp = inverse_coordinates(&p, g.g[0].clone())?;
    let g1sq = p[(2, 1)].recip()?;
    let want = g.g[0].pow(2);
    rep.check("(g'1)^2 = 1/P21", g1sq.to_string(), want.to_string(), g1sq.equals(&want));
    for i in 2..=6 {
        let (a, b) = (gp.gi(i), g.gi(i));
        rep.check(format!("g'{i}"), a.to_string(), b.to_string(), a.equals(b));
    }
    let e = |i: usize, j: usize| p[(i, j)].clone();
    let minor = &e(1, 1) * &e(2, 2) - &e(1, 2) * &e(2, 1);
    let display = [
        ("tau4 = P01/P21", &e(0, 1) / &e(2, 1), &tau.tau[4]),
        ("tau5", (&e(0, 1) * &e(2, 2) - &e(0, 2) * &e(2, 1)) / minor.clone(), &tau.tau[5]),
        ("tau0 = P11/P21", &e(1, 1) / &e(2, 1), &tau.tau[0]),
        ("tau1 = P31/P21", &e(3, 1) / &e(2, 1), &tau.tau[1]),
        ("tau3", (&e(2, 2) * &e(3, 1) - &e(2, 1) * &e(3, 2)) / minor.clone(), &tau.tau[3]),
        ("tau2 = P41/P21", &e(4, 1) / &e(2, 1), &tau.tau[2]),
    ];
    for (name, got, want) in display {
        rep.check(name, got.to_string(), want.to_string(), got.equals(want));
    }
    let e42 = (&e(2, 2) * &e(4, 1) - &e(2, 1) * &e(4, 2)) / minor;
    let want42 = &tau.tau[1] - &(&tau.tau[0] * &tau.tau[3]);
    rep.check("P g [4,2] = -tau0*tau3 + tau1", e42.to_string(), want42.to_string(), e42.equals(&want42));

    let (mut shape, mut idem, mut rel, mut ginv) = (0, 0, 0, 0);
    for _ in 0..instances {
        let t = random_tau(rng);
        let g0 = random_group_element(rng);
        let p = t.to_matrix().mul(&g0.to_matrix()?);
        let (g, t2) = tau_normalize(&p)?;
        if t2 == t && p.mul(&g.to_matrix()?) == t.to_matrix() {
            shape += 1;
        }
        if g.to_matrix()? == g0.to_matrix()?.inverse()? {
            ginv += 1;
        }
        let (g_id, t3) = tau_normalize(&t2.to_matrix())?;
        if g_id.to_matrix()? == Matrix::identity(5) && t3 == t2 {
            idem += 1;
        }
        if check_period_relations(&t.to_matrix()) && check_period_relations(&p) {
            rel += 1;
        }
    }
    let n = instances.to_string();
    rep.check("round trip recovers tau", shape.to_string(), n.clone(), shape == instances);
    rep.check("normalizing g = g0^-1", ginv.to_string(), n.clone(), ginv == instances);
    rep.check("normalization idempotent", idem.to_string(), n.clone(), idem == instances);
    rep.check("right action preserves relations", rel.to_string(), n, rel == instances);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadRat {
        QuadRat::from_int(n)
    }

    #[test]
    fn chart_examples() {
        let id = GroupElement::<QuadRat>::identity();
        assert_eq!(id.to_matrix().unwrap(), Matrix::identity(5));
        let g = GroupElement::new([q(2), q(3), q(5), q(7), q(11), q(13)], [q(17), q(19)]);
        let m = g.to_matrix().unwrap();
        assert_eq!(m[(1, 1)], QuadRat::frac(1, 4));
        assert_eq!(m[(0, 3)], q(17));
        assert!(group_relations_hold(&m));
        let bad = GroupElement::new([q(0), q(3), q(5), q(7), q(11), q(13)], [q(17), q(19)]);
        assert!(matches!(bad.to_matrix(), Err(Error::Chart(_))));
    }

    #[test]
    fn printed_g12_breaks_relations() {
        let g = GroupElement::new([q(2), q(3), q(5), q(7), q(11), q(13)], [q(0), q(0)]);
        let mut m = g.to_matrix().unwrap();
        m[(1, 2)] = -(&q(5) / &q(2));
        assert!(!group_relations_hold(&m));
    }

    #[test]
    fn action_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = random_moduli_point(&mut rng);
        let g = random_group_element(&mut rng);
        let t = act_moduli(&s, &g).unwrap();
        assert_eq!(t[0], &s[0] * &g.g[0]);
        let k = &g.g[0] * &g.g[0];
        assert_eq!(t[5], &(&s[5] * &k.pow(3)) * &g.g[1]);
        assert_eq!(act_moduli(&s, &GroupElement::identity()).unwrap(), s);
    }

    #[test]
    fn derivation_of_action() {
        let rep = verify_action_derivation().unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn period_relation_examples() {
        assert!(!check_period_relations(&psi::<QuadRat>()));
        let t = TauData { tau: [q(1), q(2), q(3), q(4), q(5), q(6)] };
        let m = t.to_matrix();
        assert!(check_period_relations(&m));
        let mut bad = m.clone();
        bad[(1, 1)] = &bad[(1, 1)] * &q(2);
        assert!(!check_period_relations(&bad));
    }

    #[test]
    fn normalize_already_normal() {
        let t = TauData { tau: [q(1), q(-2), q(3), QuadRat::sqrt5(), q(5), q(0)] };
        let (g, t2) = tau_normalize(&t.to_matrix()).unwrap();
        assert_eq!(g.to_matrix().unwrap(), Matrix::identity(5));
        assert_eq!(t2, t);
    }

    #[test]
    fn small_random_suites() {
        let rep = verify_group(11, 10).unwrap();
        assert!(rep.passed(), "{rep}");
        let rep = verify_tau(12, 10).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
