//! Hilbert quasi-polynomials
//!
//! This example demonstrates:
//! - The piece table of a weighted polynomial ring (exact interpolation)
//! - The leading-coefficient law 1/((n-1)! w_1 ... w_n)
//! - Rescaling to a scaled weight vector
//! - Quotient quasi-polynomials by convolution with the numerator
//!
//! Run with: cargo run --example quasi_poly

use num_rational::BigRational;

use hqp::groebner::MonomialIdeal;
use hqp::hilbert::{
    hilbert_numerator, hr_values, quasi_poly_r, quotient_quasi_polynomial, rescale,
};
use hqp::poly::{Monomial, WeightVector};

fn piece_string(p: &hqp::hilbert::QPoly) -> String {
    let cs = p.coeff_strings();
    let mut parts = Vec::new();
    for (i, c) in cs.iter().enumerate().rev() {
        if c == "0" && cs.len() > 1 {
            continue;
        }
        match i {
            0 => parts.push(c.clone()),
            1 => parts.push(format!("{c}*k")),
            _ => parts.push(format!("{c}*k^{i}")),
        }
    }
    parts.join(" + ")
}

fn main() {
    ring_pieces();
    rescaling();
    quotient_pieces();
}

fn ring_pieces() {
    println!("--- Pieces for the full ring, W = (2, 3) ---\n");
    let w = WeightVector::new(vec![2, 3]).unwrap();
    let p = quasi_poly_r(&w).unwrap();
    println!("period d = {}", p.period());
    for (i, piece) in p.pieces().iter().enumerate() {
        println!("  P_{i}(k) = {}", piece_string(piece));
    }
    println!("every piece has degree 1 and leading coefficient 1/6\n");

    // the pieces really compute the Hilbert function
    let hr = hr_values(&w, 30).unwrap();
    for k in 0..=30u64 {
        assert_eq!(p.eval(k), BigRational::from_integer(hr[k as usize].clone()));
    }
}

fn rescaling() {
    println!("--- Rescaling W -> 2W ---\n");
    let w = WeightVector::new(vec![2, 3]).unwrap();
    let p = quasi_poly_r(&w).unwrap();
    let p2 = rescale(&p, 2);
    println!(
        "period doubles to {}; odd residues get the zero piece:",
        p2.period()
    );
    for (i, piece) in p2.pieces().iter().enumerate().take(4) {
        println!("  P_{i}(k) = {}", piece_string(piece));
    }
    println!("  ...\n");
}

fn quotient_pieces() {
    println!("--- Quotient pieces ---\n");
    // the Hermitian quotient: all six pieces collapse to the constant 1
    let w = WeightVector::new(vec![2, 3]).unwrap();
    let m = MonomialIdeal::new(2, vec![Monomial::new(vec![0, 2])]);
    let h = hilbert_numerator(&m, &w).unwrap();
    let q = quotient_quasi_polynomial(&h, 1_000_000).unwrap();
    println!(
        "(y^2), W=(2,3): {} pieces, all equal to {}; valid from ri = {}",
        q.period(),
        piece_string(&q.pieces()[0]),
        q.ri()
    );

    // a quotient whose pieces stay genuinely linear
    let w = WeightVector::new(vec![3, 4, 5]).unwrap();
    let m = MonomialIdeal::new(
        3,
        vec![Monomial::new(vec![4, 0, 0]), Monomial::new(vec![1, 3, 0])],
    );
    let h = hilbert_numerator(&m, &w).unwrap();
    let q = quotient_quasi_polynomial(&h, 1_000_000).unwrap();
    let distinct = q.distinct_pieces();
    println!(
        "(x^4, x*y^3), W=(3,4,5): {} pieces of degree 1, {} distinct; first few:",
        q.period(),
        distinct.len()
    );
    for (piece, residues) in distinct.iter().take(4) {
        println!(
            "  residues {:?}...: {}",
            &residues[..residues.len().min(3)],
            piece_string(piece)
        );
    }
    println!("non-constant pieces mean some weight eventually carries two staircase monomials");
}
