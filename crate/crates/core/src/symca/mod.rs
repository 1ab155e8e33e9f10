//! Sparse polynomials and rational functions over ℚ(√5) in a fixed set of
//! registered symbols, with matrices, total differentials, one-forms and
//! vector fields on top.
//!
//! The symbols are, in order, the moduli coordinates `s0..s8`, the group
//! coordinates `g1..g6, h1, h2` and the period coordinates `tau0..tau5`.
//! Monomials compare lexicographically in this order, which fixes both the
//! leading term used for exact division and the rendering order.

mod checks;
mod forms;
mod matrix;
mod poly;
mod ratfunc;
mod subst;

pub use checks::verify_algebra;
pub use forms::{mat_d, oneform_contract, OneFormMatrix, VectorField};
pub use matrix::{Matrix, RFMatrix};
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use subst::{rf_substitute, SeriesEvaluator};

use std::fmt;

use crate::error::{Error, Result};

pub const NVARS: usize = 23;

const NAMES: [&str; NVARS] = [
    "s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "g1", "g2", "g3", "g4", "g5", "g6", "h1", "h2",
    "tau0", "tau1", "tau2", "tau3", "tau4", "tau5",
];

/// A registered symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub fn s(i: usize) -> Var {
        assert!(i < 9, "no moduli coordinate s{i}");
        Var(i as u8)
    }

    /// Group coordinate `g_i`, `1 ≤ i ≤ 6`.
    pub fn g(i: usize) -> Var {
        assert!((1..=6).contains(&i), "no group coordinate g{i}");
        Var(8 + i as u8)
    }

    /// Group coordinate `h_i`, `i ∈ {1, 2}`.
    pub fn h(i: usize) -> Var {
        assert!((1..=2).contains(&i), "no group coordinate h{i}");
        Var(14 + i as u8)
    }

    pub fn tau(i: usize) -> Var {
        assert!(i < 6, "no period coordinate tau{i}");
        Var(17 + i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    /// Index `i` of a moduli coordinate `s_i`.
    pub fn moduli_index(self) -> Option<usize> {
        (self.0 < 9).then_some(self.0 as usize)
    }

    pub fn moduli() -> impl Iterator<Item = Var> {
        (0..9).map(Var::s)
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS as u8).map(Var)
    }
}

impl std::str::FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| Var(i as u8))
            .ok_or_else(|| Error::Input(format!("unknown variable {s:?}")))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
