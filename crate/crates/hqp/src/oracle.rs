//! Independent brute-force reference implementations.
//!
//! Everything in here is deliberately naive — direct enumeration, no
//! recurrences, no shared code with the fast paths — so the test suite and
//! the `selftest` command can check the real implementations against an
//! independent route. Keep it that way: these functions must not call into
//! [`crate::hilbert`] or [`crate::groebner`] internals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Monomial, WeightVector};

/// Number of solutions of α₁w₁ + ⋯ + α_n w_n = k in non-negative integers,
/// by plain depth-first enumeration.
pub fn count_partitions(weights: &[u64], k: u64) -> BigInt {
    fn rec(weights: &[u64], rem: u64) -> BigInt {
        match weights {
            [] => {
                if rem == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            [w] => {
                if rem.is_multiple_of(*w) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            [w, rest @ ..] => {
                let mut acc = BigInt::zero();
                let mut used = 0u64;
                loop {
                    acc += rec(rest, rem - used);
                    used += w;
                    if used > rem {
                        break;
                    }
                }
                acc
            }
        }
    }
    rec(weights, k)
}

/// All monomials of weight exactly `k` outside the monomial ideal spanned by
/// `gens` (an arbitrary generating set; minimality is not assumed), by plain
/// depth-first enumeration. Sorted by exponent vector.
pub fn staircase_monomials_at_weight(gens: &[Monomial], weights: &[u64], k: u64) -> Vec<Monomial> {
    let n = weights.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        gens: &[Monomial],
        weights: &[u64],
        i: usize,
        rem: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i == cur.len() {
            if rem == 0 {
                let cand = Monomial::new(cur.clone());
                if !gens.iter().any(|g| g.divides(&cand)) {
                    out.push(cand);
                }
            }
            return;
        }
        let mut e = 0u32;
        loop {
            let used = e as u64 * weights[i];
            if used > rem {
                break;
            }
            cur[i] = e;
            rec(gens, weights, i + 1, rem - used, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    rec(gens, weights, 0, k, &mut cur, &mut out);
    out.sort();
    out
}

/// The brute-force staircase-collision predicate behind the second
/// order-domain condition: true iff no two staircase monomials of weight at
/// most `bound` share a weight.
pub fn no_weight_collision_up_to(gens: &[Monomial], weights: &WeightVector, bound: u64) -> bool {
    for k in 0..=bound {
        if staircase_monomials_at_weight(gens, weights.entries(), k).len() >= 2 {
            return false;
        }
    }
    true
}

/// Semigroup membership by direct search: is `value` a non-negative integer
/// combination of the generators?
pub fn in_numerical_semigroup(gens: &[u64], value: u64) -> bool {
    if value == 0 {
        return true;
    }
    fn rec(gens: &[u64], rem: u64) -> bool {
        match gens {
            [] => rem == 0,
            [g] => rem.is_multiple_of(*g),
            [g, rest @ ..] => {
                let mut used = 0u64;
                loop {
                    if rec(rest, rem - used) {
                        return true;
                    }
                    used += g;
                    if used > rem {
                        return false;
                    }
                }
            }
        }
    }
    rec(gens, value)
}

/// Divided-difference (Newton form) interpolation through the points
/// `(xs[i], ys[i])`; returns monomial-basis coefficients, ascending degree.
/// Used to cross-check the fraction-free linear solver.
pub fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    assert_eq!(n, ys.len());
    // divided-difference table
    let mut table: Vec<BigRational> = ys.to_vec();
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    if n == 0 {
        return coeffs;
    }
    coeffs.push(table[0].clone());
    for level in 1..n {
        for i in 0..(n - level) {
            let num = &table[i + 1] - &table[i];
            let den = &xs[i + level] - &xs[i];
            table[i] = num / den;
        }
        table.truncate(n - level);
        coeffs.push(table[0].clone());
    }
    // expand Newton form: sum coeffs[j] * prod_{i<j} (x - xs[i])
    let mut result = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()]; // running product
    for (j, c) in coeffs.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            result[i] += c * b;
        }
        if j + 1 < n {
            // basis *= (x - xs[j])
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &xs[j];
            }
            basis = next;
        }
    }
    while result.len() > 1 && result.last().map(|c| c.is_zero()) == Some(true) {
        result.pop();
    }
    result
}
