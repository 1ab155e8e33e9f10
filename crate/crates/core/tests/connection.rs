use std::time::Instant;

use quintic_core::gmconn::{self, EPSILON};
use quintic_core::symca::{RatFunc, Var};

#[test]
fn connection_chain_and_vector_field() {
    let t = Instant::now();
    let bundle = gmconn::build_connection(EPSILON).unwrap();
    eprintln!("connection built in {:?}", t.elapsed());

    let rep = gmconn::verify_normal_form(&bundle);
    eprintln!("{rep}");
    assert!(rep.passed());
    eprintln!("normal form checked at {:?}", t.elapsed());

    let derived = gmconn::derive_modular_vector_field(&bundle).unwrap();
    eprintln!("derived at {:?}", t.elapsed());
    assert!(derived.r.get(Var::s(7)).equals(&-RatFunc::s(8)));
    let s4 = (RatFunc::int(15625) * RatFunc::s(0).pow(8) * RatFunc::s(4) + RatFunc::int(5) * RatFunc::s(3) * RatFunc::s(4))
        / (RatFunc::int(10) * RatFunc::s(5));
    assert!(derived.r.get(Var::s(4)).equals(&s4));
    assert!(derived.y.equals(&gmconn::yukawa()));
    assert!(derived.f.equals(&gmconn::disk_function()));
    assert!(derived.r.equals(&gmconn::reference_vector_field(EPSILON)));
}
