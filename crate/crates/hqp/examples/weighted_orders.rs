//! Weighted monomial orders
//!
//! This example demonstrates:
//! - Weighted degrees and the generalized weighted degree ordering
//! - Tie-breaking by lex under an explicit variable precedence
//! - Top-weight monomials of a polynomial (the heart of condition C1)
//! - Weighted homogeneity
//!
//! Run with: cargo run --example weighted_orders

use std::cmp::Ordering;

use hqp::io::{parse_polynomial, parse_problem};
use hqp::poly::{compare, weight, Monomial, WeightVector};

fn main() {
    let spec =
        parse_problem("field = Q\nvars = x, y\nweights = 2, 3\norder = lex(x < y)\n").unwrap();
    let ring = &spec.ring;
    let w = ring.weights();

    println!("ring: {ring}, weights {:?}\n", w.entries());

    // weighted degrees
    let x3 = Monomial::new(vec![3, 0]);
    let y2 = Monomial::new(vec![0, 2]);
    println!("w(x^3) = {}", weight(&x3, w).unwrap());
    println!("w(y^2) = {}", weight(&y2, w).unwrap());

    // equal weight: the tie-break decides, and y beats x here
    let ord = ring.order();
    assert_eq!(compare(&x3, &y2, ord).unwrap(), Ordering::Less);
    println!("x^3 < y^2 under the order (weights tie at 6, lex tie-break, x < y)\n");

    // the Hermitian polynomial has exactly two monomials of top weight
    let f = parse_polynomial("x^3 - y^2 - y", ring).unwrap();
    let tops = f.top_weight_monomials(w).unwrap();
    println!(
        "top-weight monomials of {f}: {:?}",
        tops.iter()
            .map(|m| m.format(ring.vars()))
            .collect::<Vec<_>>()
    );

    // weighted homogeneity depends on the weights
    let g = parse_polynomial("x^3 - y^2", ring).unwrap();
    println!("{g} homogeneous under (2,3)? {}", g.is_w_homogeneous(w));
    let w11 = WeightVector::new(vec![1, 1]).unwrap();
    println!("{g} homogeneous under (1,1)? {}", g.is_w_homogeneous(&w11));
}
