//! Seeded algebraic self-checks run by the verification front end.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numfield::QuadRat;
use crate::report::Report;
use crate::series::PuiseuxSeries;

use super::{Matrix, Poly, RatFunc, Var};

fn quad<R: Rng>(rng: &mut R) -> QuadRat {
    QuadRat::from_parts((rng.gen_range(-20..=20), rng.gen_range(1..=6)), (rng.gen_range(-20..=20), rng.gen_range(1..=6)))
}

fn poly<R: Rng>(rng: &mut R) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(1..5) {
        let mut m = Poly::constant(QuadRat::from_int(rng.gen_range(-5..=5)));
        for v in [Var::s(0), Var::s(1), Var::s(5)] {
            m = m.times(&Poly::var(v).pow(rng.gen_range(0..3)));
        }
        p = p.plus(&m);
    }
    p
}

fn ratfunc<R: Rng>(rng: &mut R) -> RatFunc {
    loop {
        let d = poly(rng);
        if !d.is_zero() {
            return RatFunc::new(poly(rng), d).expect("nonzero denominator");
        }
    }
}

/// Field axioms, the Leibniz rule, matrix inverses and series identities on
/// `instances` seeded random inputs each.
pub fn verify_algebra(seed: u64, instances: usize) -> Report {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let mut count = [0usize; 5];
    for _ in 0..instances {
        let (a, b, c) = (quad(rng), quad(rng), quad(rng));
        let field = &(&a + &b) * &c == &(&a * &c) + &(&b * &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && (a.is_zero() || &a * &a.inv().expect("nonzero") == QuadRat::one());
        count[0] += field as usize;

        let (f, g) = (ratfunc(rng), ratfunc(rng));
        let v = Var::s(0);
        let leibniz = f.times(&g).diff(v).equals(&f.diff(v).times(&g).plus(&f.times(&g.diff(v))));
        count[1] += leibniz as usize;
        let inverse = f.is_zero() || f.times(&f.inv().expect("nonzero")).equals(&RatFunc::one());
        count[2] += inverse as usize;

        let m = Matrix::from_fn(3, 3, |_, _| quad(rng));
        let round = match m.inverse() {
            Ok(inv) => m.mul(&inv) == Matrix::identity(3) && inv.mul(&m) == Matrix::identity(3),
            Err(_) => m.det().is_zero(),
        };
        count[3] += round as usize;

        let dense: Vec<QuadRat> = (0..12).map(|i| if i == 0 { QuadRat::one() } else { quad(rng) }).collect();
        let u = PuiseuxSeries::from_dense(10, &dense);
        let w = PuiseuxSeries::from_dense(10, &(0..12).map(|_| quad(rng)).collect::<Vec<_>>());
        let five = QuadRat::from_int(5);
        let series = w.div(&u).is_ok_and(|q| q.mul(&u) == w)
            && u.mul(&w).theta(&five) == u.theta(&five).mul(&w).add(&u.mul(&w.theta(&five)))
            && u.root(3).is_ok_and(|r| r.pow(3) == u);
        count[4] += series as usize;
    }
    let mut rep = Report::new("algebra");
    let names = ["field axioms", "Leibniz rule", "rational function inverse", "matrix inverse round trip", "series identities"];
    for (name, k) in names.iter().zip(count) {
        rep.check(*name, k, instances, k == instances);
    }
    rep
}
