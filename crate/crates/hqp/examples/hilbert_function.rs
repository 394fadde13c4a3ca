//! Hilbert series numerators and fast Hilbert function values
//!
//! This example demonstrates:
//! - The series numerator of a monomial-ideal quotient (colon recursion)
//! - The generalized regularity index
//! - Hilbert function values by the integer recurrence, cross-checked by
//!   brute-force partition counting
//!
//! Run with: cargo run --example hilbert_function

use hqp::groebner::MonomialIdeal;
use hqp::hilbert::{hilbert_numerator, hr_values, quotient_h_values, regularity_index};
use hqp::oracle;
use hqp::poly::{Monomial, WeightVector};

fn main() {
    numerators();
    recurrence_vs_bruteforce();
}

fn numerators() {
    println!("--- Numerators and regularity ---\n");
    // quotient by (y^2) with weights (2, 3): the Hermitian staircase
    let w = WeightVector::new(vec![2, 3]).unwrap();
    let m = MonomialIdeal::new(2, vec![Monomial::new(vec![0, 2])]);
    let h = hilbert_numerator(&m, &w).unwrap();
    let shown: Vec<String> = h.terms().map(|(e, c)| format!("{c}*t^{e}")).collect();
    println!("numerator for (y^2), W=(2,3): {}", shown.join(" + "));
    println!("regularity index: {}", regularity_index(&h));

    // the function values: exactly one monomial per representable weight
    let hr = hr_values(&w, 12).unwrap();
    let hq = quotient_h_values(&h, &hr, 12).unwrap();
    println!(
        "H(0..12) = {:?}",
        hq.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    println!("(1 is the only gap of the semigroup generated by 2 and 3)\n");
}

fn recurrence_vs_bruteforce() {
    println!("--- Recurrence vs. enumeration ---\n");
    let weights = vec![3u64, 4, 5];
    let w = WeightVector::new(weights.clone()).unwrap();
    let kmax = 40;
    let hr = hr_values(&w, kmax).unwrap();
    println!("W = {weights:?}");
    for k in [10u64, 20, 30, 40] {
        let brute = oracle::count_partitions(&weights, k);
        println!(
            "H({k}) = {}   brute-force partition count = {brute}",
            hr[k as usize]
        );
        assert_eq!(hr[k as usize], brute);
    }
    println!("\nthe recurrence needs O(n k^2) integer operations; enumeration is O(k^n)");
}
