use std::time::Instant;

use num_rational::BigRational;
use quintic_core::gmconn::EPSILON;
use quintic_core::modsolver::{invariants, solve, verify_solution, DEFAULT_ORDER};
use quintic_core::series::Sector;
use quintic_core::QuadRat;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn default_order_solution() {
    let t = Instant::now();
    let b = solve(DEFAULT_ORDER, EPSILON).unwrap();
    eprintln!("solve({DEFAULT_ORDER}) in {:?}", t.elapsed());
    let t = Instant::now();
    let rep = verify_solution(&b).unwrap();
    eprintln!("{rep}verified in {:?}", t.elapsed());
    assert!(rep.passed());

    let closed = invariants(&b, Sector::Closed, 6).unwrap();
    assert!(closed.is_integral());
    assert_eq!(closed.get(1), Some(&int(2875)));
    assert_eq!(closed.get(2), Some(&int(609250)));
    assert_eq!(closed.get(3), Some(&int(317206375)));
    let open = invariants(&b, Sector::Open, 11).unwrap();
    assert!(open.is_integral());
    assert_eq!(open.get(1), Some(&int(30)));
    assert_eq!(open.get(3), Some(&int(1530)));
    assert_eq!(open.get(5), Some(&int(1088250)));
    assert_eq!(open.get(7), Some(&int(975996780)));
    eprintln!("{closed}\n{open}");
}

#[test]
fn opposite_sign_flips_disk_function() {
    let a = solve(15, EPSILON).unwrap();
    let b = solve(15, -EPSILON).unwrap();
    assert_eq!(a.y, b.y);
    assert_eq!(a.f, b.f.neg());
}

#[test]
fn twelve_root_five_is_the_q_coefficient_of_s0() {
    let b = solve(10, EPSILON).unwrap();
    assert_eq!(b.s[0].coeff(0), Some(QuadRat::from_parts((0, 1), (1, 5))));
    assert_eq!(b.s[0].coeff(10), Some(QuadRat::from_parts((0, 1), (12, 1))));
}
