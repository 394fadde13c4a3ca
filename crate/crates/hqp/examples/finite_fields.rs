//! Exact coefficient fields
//!
//! This example demonstrates:
//! - Arbitrary-precision rationals with no rounding
//! - Prime fields and extension fields from the built-in modulus table
//! - Supplying an explicit irreducible modulus (and what happens to a
//!   reducible one)
//! - Field laws checked by brute force on a small field
//!
//! Run with: cargo run --example finite_fields

use num_bigint::BigInt;

use hqp::fields::Field;
use hqp::io::parse_field;

fn main() {
    rationals();
    small_fields();
    explicit_moduli();
}

fn rationals() {
    println!("--- Rationals ---\n");
    let q = Field::rationals();
    let third = q.from_ratio(&BigInt::from(1), &BigInt::from(3)).unwrap();
    let sixth = q.from_ratio(&BigInt::from(1), &BigInt::from(6)).unwrap();
    let sum = third.add(&sixth).unwrap();
    println!("1/3 + 1/6 = {sum}   (exact, always reduced)");
    let back = sum.mul(&q.from_integer(2)).unwrap();
    println!("(1/3 + 1/6) * 2 = {back}");
    println!();
}

fn small_fields() {
    println!("--- Prime and extension fields ---\n");
    let f3 = Field::prime(3).unwrap();
    let two = f3.from_integer(2);
    println!("in GF(3):  2^-1 = {}   (2*2 = 4 = 1)", two.inv().unwrap());

    // GF(4) from the built-in table, modulus a^2 + a + 1
    let f4 = Field::of_order(4).unwrap();
    println!("built-in field: {f4}");
    let a = f4.generator().unwrap();
    println!("a * a = {}   (reduced modulo a^2+a+1)", a.mul(&a).unwrap());
    println!(
        "elements of GF(4): {:?}",
        f4.elements()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
    );

    // the multiplicative group law, exhaustively
    let q = f4.order().unwrap();
    for x in f4.elements() {
        if !x.is_zero() {
            assert!(x.pow(q - 1).is_one());
        }
    }
    println!("x^(q-1) = 1 verified for every nonzero x in GF(4)");
    println!();
}

fn explicit_moduli() {
    println!("--- Explicit moduli ---\n");
    // the field spec grammar accepted by problem files
    let f = parse_field("GF(3^2; a^2+1)").unwrap();
    println!("parse_field(\"GF(3^2; a^2+1)\") = {f}   (a^2+1 has no root mod 3)");

    // a reducible modulus is rejected with a clear error
    match Field::extension(2, &[1, 0, 1]) {
        Err(e) => println!("GF(2)[a]/(a^2+1) rejected: {e}   ((a+1)^2 = a^2+1 over GF(2))"),
        Ok(_) => unreachable!(),
    }

    // GF(729) backs the largest curve examples
    let f729 = Field::of_order(729).unwrap();
    println!(
        "table also covers {f729} with {} elements",
        f729.order().unwrap()
    );
}
