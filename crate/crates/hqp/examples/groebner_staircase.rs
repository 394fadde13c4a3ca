//! Groebner bases and staircases under weighted orders
//!
//! This example demonstrates:
//! - Buchberger's algorithm and reduced bases
//! - Normal forms (division with remainder)
//! - Initial ideals and staircase enumeration
//! - A case where the input generators are *not* already a basis
//!
//! Run with: cargo run --example groebner_staircase

use hqp::codes::extend_to_iq;
use hqp::groebner::{
    buchberger, enumerate_staircase, initial_ideal, is_groebner_basis, normal_form,
};
use hqp::io::{monomial_strings, parse_polynomial, parse_problem};

fn main() {
    hermitian();
    ree_needs_completion();
}

fn hermitian() {
    println!("--- Hermitian curve over GF(4) ---\n");
    let spec = parse_problem(
        "field = GF(4)\nvars = x, y\nweights = 2, 3\norder = lex(x < y)\nideal = x^3 - y^2 - y\nq = 4\n",
    )
    .unwrap();
    let basis = buchberger(&spec.generators, 100_000).unwrap();
    println!("reduced basis:");
    for g in basis.polys() {
        println!("  {g}");
    }
    assert!(is_groebner_basis(&basis).unwrap());

    let f = parse_polynomial("y^2", &spec.ring).unwrap();
    let nf = normal_form(&f, basis.polys()).unwrap();
    println!("normal form of y^2: {nf}");

    let init = initial_ideal(&basis);
    println!(
        "initial ideal: {:?}",
        monomial_strings(init.gens(), &spec.ring)
    );

    // the staircase of I itself is infinite, but adding the field
    // equations makes it an 8-element box
    let iq = extend_to_iq(&spec.generators, &spec.ring, 4).unwrap();
    let basis_iq = buchberger(&iq, 100_000).unwrap();
    let init_iq = initial_ideal(&basis_iq);
    let stairs = enumerate_staircase(&init_iq, spec.ring.order()).unwrap();
    println!(
        "staircase of in(I_q): {:?}\n",
        monomial_strings(&stairs, &spec.ring)
    );
}

fn ree_needs_completion() {
    println!("--- A generator pair that is not yet a basis ---\n");
    let spec = parse_problem(
        "field = GF(729)\nvars = x, y, z\nweights = 3, 4, 5\norder = lex(z < y < x)\nideal = x^4 - x^2 - y^3 + y; x*y^3 - x*y - z^3 + z\n",
    )
    .unwrap();
    println!("input generators:");
    for g in &spec.generators {
        println!("  {g}");
    }
    let basis = buchberger(&spec.generators, 100_000).unwrap();
    println!(
        "Buchberger completes them to {} elements; initial ideal: {:?}",
        basis.len(),
        monomial_strings(initial_ideal(&basis).gens(), &spec.ring)
    );
    assert!(is_groebner_basis(&basis).unwrap());
}
