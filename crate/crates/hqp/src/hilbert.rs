//! Hilbert–Poincaré numerators of monomial ideals, fast exact Hilbert
//! function values, the generalized regularity index, and Hilbert
//! quasi-polynomials.
//!
//! For a weight vector W = [w₁,…,w_n] the Hilbert series of the full ring is
//! 1/∏(1−t^{wᵢ}); quotients by a monomial ideal contribute an integer
//! numerator h(t). The Hilbert function eventually agrees with a
//! quasi-polynomial of period d = lcm(wᵢ): one rational polynomial per
//! residue class, each of degree ≤ n−1. This module computes all of that
//! exactly:
//!
//! - [`hilbert_numerator`] uses the colon recursion
//!   h(M + (m)) = h(M) − t^{w(m)}·h(M : m);
//! - [`hr_values`] evaluates H_R by an integer recurrence derived from the
//!   logarithmic derivative of the series (the root-of-unity sums collapse
//!   to A_r = Σ_{wᵢ | r} wᵢ, so no complex arithmetic is ever needed);
//! - [`quasi_poly_r`] interpolates each piece on the abscissas j, j+d, …,
//!   moving the known leading coefficient 1/((n−1)!·∏wᵢ) to the right-hand
//!   side and solving the remaining Vandermonde system exactly by
//!   fraction-free elimination;
//! - [`rescale`] and [`quasi_poly_quotient`] transport the result to scaled
//!   weight vectors and to quotient rings.
//!
//! Everything downstream of the initial ideal consumes only the monomial
//! data and the weights, never field elements.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::poly::{Monomial, WeightVector};

// ---------------------------------------------------------------------------
// numerator
// ---------------------------------------------------------------------------

/// The numerator h(t) of a Hilbert–Poincaré series, stored densely with its
/// weight vector (the denominator ∏(1−t^{wᵢ}) is implied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: Vec<BigInt>,
    weights: WeightVector,
}

impl HilbertNumerator {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn degree(&self) -> u64 {
        (self.coeffs.len() as u64).saturating_sub(1)
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c))
    }

    /// h(1); zero exactly when the denominator fails to cancel the pole.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

fn numerator_rec(gens: &[Monomial], n_vars: usize, w: &WeightVector) -> BTreeMap<u64, BigInt> {
    // unit ideal: zero numerator
    if gens.iter().any(|g| g.is_one()) {
        return BTreeMap::new();
    }
    match gens.split_last() {
        None => BTreeMap::from([(0, BigInt::one())]),
        Some((m, rest)) => {
            let mut h = numerator_rec(rest, n_vars, w);
            let colon: Vec<Monomial> = rest
                .iter()
                .map(|g| {
                    Monomial::new(
                        g.exps()
                            .iter()
                            .zip(m.exps())
                            .map(|(&a, &b)| a.saturating_sub(b))
                            .collect(),
                    )
                })
                .collect();
            let colon = MonomialIdeal::new(n_vars, colon);
            let hc = numerator_rec(colon.gens(), n_vars, w);
            let wm = m.weight(w);
            for (e, c) in hc {
                let entry = h.entry(e + wm).or_insert_with(BigInt::zero);
                *entry -= c;
                if entry.is_zero() {
                    h.remove(&(e + wm));
                }
            }
            h
        }
    }
}

/// Exact numerator of HP_{R/M} for a monomial ideal, via the colon
/// recursion. The unit ideal is rejected.
pub fn hilbert_numerator(m: &MonomialIdeal, w: &WeightVector) -> Result<HilbertNumerator> {
    if m.n_vars() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            got: m.n_vars(),
        });
    }
    if m.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let sparse = numerator_rec(m.gens(), m.n_vars(), w);
    let deg = sparse.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
    for (e, c) in sparse {
        coeffs[e as usize] = c;
    }
    Ok(HilbertNumerator {
        coeffs,
        weights: w.clone(),
    })
}

/// The same numerator by inclusion–exclusion over generator subsets,
/// h(t) = Σ_{S ⊆ gens} (−1)^{|S|} t^{w(lcm S)}. Exponential in the number of
/// generators; used to cross-check [`hilbert_numerator`] on small ideals.
pub fn hilbert_numerator_incl_excl(
    m: &MonomialIdeal,
    w: &WeightVector,
) -> Result<HilbertNumerator> {
    if m.contains_one() {
        return Err(Error::UnitIdeal);
    }
    let gens = m.gens();
    if gens.len() > 24 {
        return Err(Error::ResourceExhausted(
            "inclusion-exclusion limited to 24 generators".into(),
        ));
    }
    let mut sparse: BTreeMap<u64, BigInt> = BTreeMap::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut l = Monomial::one(m.n_vars());
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = l.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let e = l.weight(w);
        let entry = sparse.entry(e).or_insert_with(BigInt::zero);
        *entry += sign;
        if entry.is_zero() {
            sparse.remove(&e);
        }
    }
    let deg = sparse.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg as usize + 1];
    for (e, c) in sparse {
        coeffs[e as usize] = c;
    }
    Ok(HilbertNumerator {
        coeffs,
        weights: w.clone(),
    })
}

/// The generalized regularity index max{0, deg h − Σwᵢ + 1}: the least k₀
/// from which the Hilbert function agrees with its quasi-polynomial.
pub fn regularity_index(h: &HilbertNumerator) -> u64 {
    let deg_den = h.weights.sum();
    (h.degree() + 1).saturating_sub(deg_den)
}

// ---------------------------------------------------------------------------
// Hilbert function values
// ---------------------------------------------------------------------------

/// H_R(0..=kmax) for the full ring, by the exact recurrence
/// H_R(k) = (1/k) Σ_{r=1..k} A_r H_R(k−r) with A_r = Σ_{i : wᵢ | r} wᵢ.
///
/// Every division is exact; a non-integer intermediate signals an
/// implementation bug and is reported as an error rather than truncated.
pub fn hr_values(w: &WeightVector, kmax: u64) -> Result<Vec<BigInt>> {
    let kmax = kmax as usize;
    let mut a = vec![0u64; kmax + 1];
    for (r, slot) in a.iter_mut().enumerate().skip(1) {
        *slot = w
            .entries()
            .iter()
            .filter(|&&wi| (r as u64).is_multiple_of(wi))
            .sum();
    }
    let mut h = Vec::with_capacity(kmax + 1);
    h.push(BigInt::one());
    for k in 1..=kmax {
        let mut sum = BigInt::zero();
        for r in 1..=k {
            if a[r] != 0 && !h[k - r].is_zero() {
                sum += &h[k - r] * BigInt::from(a[r]);
            }
        }
        let (q, rem) = num_integer::Integer::div_rem(&sum, &BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::NonIntegerIntermediate(k as u64));
        }
        h.push(q);
    }
    Ok(h)
}

/// H_{R/M}(0..=kmax) by convolving the numerator with H_R values
/// (H_R(k) := 0 for k < 0). `hr` must cover 0..=kmax.
pub fn quotient_h_values(h: &HilbertNumerator, hr: &[BigInt], kmax: u64) -> Result<Vec<BigInt>> {
    let kmax = kmax as usize;
    assert!(hr.len() > kmax, "hr must cover 0..=kmax");
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let mut v = BigInt::zero();
        for (e, c) in h.terms() {
            let e = e as usize;
            if e <= k {
                v += c * &hr[k - e];
            }
        }
        if v.is_negative() {
            return Err(Error::NegativeValue(k as u64));
        }
        out.push(v);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// univariate rational polynomials and quasi-polynomials
// ---------------------------------------------------------------------------

/// A univariate polynomial with rational coefficients, ascending order,
/// trailing zeros trimmed (zero polynomial = empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True iff this is the constant polynomial 0 or 1.
    pub fn is_constant_zero_or_one(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs[0].is_one(),
            _ => false,
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    fn add_scaled(&self, other: &QPoly, scale: &BigInt) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len().max(other.coeffs.len()), BigRational::zero());
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c * BigRational::from_integer(scale.clone());
        }
        QPoly::from_coeffs(coeffs)
    }

    /// P(x − s), by Horner in the shifted variable.
    pub fn shift_arg(&self, s: u64) -> QPoly {
        let s = BigRational::from_integer(BigInt::from(s));
        let mut acc: Vec<BigRational> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc = acc * (x - s) + c
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * &s;
            }
            if next.is_empty() {
                next.push(BigRational::zero());
            }
            next[0] += c;
            acc = next;
        }
        QPoly::from_coeffs(acc)
    }

    /// P(x / a): coefficient i is divided by a^i.
    pub fn scale_arg_div(&self, a: u64) -> QPoly {
        let a = BigInt::from(a);
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c / BigRational::from_integer(pow.clone());
                pow = &pow * &a;
                out
            })
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// Coefficients as exact strings, ascending ("0" for the zero
    /// polynomial), for reports.
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.coeffs.is_empty() {
            return vec!["0".to_string()];
        }
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect()
    }
}

/// A period-d family of rational polynomials P₀,…,P_{d−1} together with the
/// validity threshold: f(k) = P_{k mod d}(k) for all k ≥ ri.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    ri: u64,
    pieces: Vec<QPoly>,
}

impl QuasiPolynomial {
    pub fn period(&self) -> u64 {
        self.period
    }

    /// The generalized regularity index this quasi-polynomial is valid from.
    pub fn ri(&self) -> u64 {
        self.ri
    }

    pub fn pieces(&self) -> &[QPoly] {
        &self.pieces
    }

    pub fn piece_for(&self, k: u64) -> &QPoly {
        &self.pieces[(k % self.period) as usize]
    }

    pub fn eval(&self, k: u64) -> BigRational {
        self.piece_for(k).eval_u64(k)
    }

    /// Distinct pieces with the residue classes they serve, in order of
    /// first appearance.
    pub fn distinct_pieces(&self) -> Vec<(QPoly, Vec<u64>)> {
        let mut out: Vec<(QPoly, Vec<u64>)> = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            match out.iter_mut().find(|(q, _)| q == p) {
                Some((_, residues)) => residues.push(i as u64),
                None => out.push((p.clone(), vec![i as u64])),
            }
        }
        out
    }

    /// True iff every piece is the constant polynomial 0 or 1.
    pub fn all_pieces_zero_or_one(&self) -> bool {
        self.pieces.iter().all(QPoly::is_constant_zero_or_one)
    }
}

// ---------------------------------------------------------------------------
// exact linear algebra
// ---------------------------------------------------------------------------

/// Solve the square integer system `mat · x = rhs` exactly by fraction-free
/// (Bareiss) Gaussian elimination; all intermediate divisions are exact.
pub fn fraction_free_solve(
    mut mat: Vec<Vec<BigInt>>,
    mut rhs: Vec<BigInt>,
) -> Result<Vec<BigRational>> {
    let n = mat.len();
    assert!(mat.iter().all(|row| row.len() == n));
    assert_eq!(rhs.len(), n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !mat[r][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        mat.swap(k, pivot_row);
        rhs.swap(k, pivot_row);
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = num / &prev; // exact by Bareiss
            }
            let num = &rhs[i] * &mat[k][k] - &mat[i][k] * &rhs[k];
            rhs[i] = num / &prev;
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    // back substitution over the rationals
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(rhs[i].clone());
        for j in (i + 1)..n {
            acc -= BigRational::from_integer(mat[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(mat[i][i].clone());
    }
    Ok(x)
}

// ---------------------------------------------------------------------------
// quasi-polynomial construction
// ---------------------------------------------------------------------------

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// The quasi-polynomial of the full ring R for a weight vector with
/// gcd(W) = 1. Each of the d pieces has degree n−1 with leading coefficient
/// 1/((n−1)!·∏wᵢ); the remaining coefficients are interpolated at the
/// abscissas x_r = j + r·d and solved exactly.
pub fn quasi_poly_r(w: &WeightVector) -> Result<QuasiPolynomial> {
    assert_eq!(w.gcd(), 1, "caller must normalize the weights");
    let n = w.len();
    let d128 = w.period();
    let d = u64::try_from(d128)
        .map_err(|_| Error::ResourceExhausted("quasi-polynomial period exceeds u64".to_string()))?;

    if n == 1 {
        // W = [1]: H_R is identically 1
        return Ok(QuasiPolynomial {
            period: 1,
            ri: 0,
            pieces: vec![QPoly::constant(BigRational::one())],
        });
    }

    let weight_product: BigInt = w.entries().iter().map(|&wi| BigInt::from(wi)).product();
    let scale = factorial(n as u64 - 1) * &weight_product; // 1/scale is the leading coefficient
    let lead = BigRational::new(BigInt::one(), scale.clone());

    let kmax = d
        .checked_mul(n as u64 - 1)
        .and_then(|v| v.checked_sub(1))
        .expect("abscissa range overflow");
    let hr = hr_values(w, kmax)?;

    let m = n - 1; // unknown count per piece
    let mut pieces = Vec::with_capacity(d as usize);
    for j in 0..d {
        let xs: Vec<u64> = (0..m as u64).map(|r| j + r * d).collect();
        // scaled system: V · y = scale·H(x_r) − x_r^{n−1}, with a_i = y_i/scale
        let mat: Vec<Vec<BigInt>> = xs
            .iter()
            .map(|&x| {
                let x = BigInt::from(x);
                let mut row = Vec::with_capacity(m);
                let mut p = BigInt::one();
                for _ in 0..m {
                    row.push(p.clone());
                    p *= &x;
                }
                row
            })
            .collect();
        let rhs: Vec<BigInt> = xs
            .iter()
            .map(|&x| {
                let xb = BigInt::from(x);
                &scale * &hr[x as usize] - xb.pow(n as u32 - 1)
            })
            .collect();
        let y = fraction_free_solve(mat, rhs)?;
        let mut coeffs: Vec<BigRational> = y
            .into_iter()
            .map(|yi| yi / BigRational::from_integer(scale.clone()))
            .collect();
        coeffs.push(lead.clone());
        pieces.push(QPoly::from_coeffs(coeffs));
    }
    Ok(QuasiPolynomial {
        period: d,
        ri: 0,
        pieces,
    })
}

/// Transport a quasi-polynomial for W to one for a·W: period a·d, piece i is
/// zero unless a | i, in which case it is P_{i/a}(x/a).
pub fn rescale(p: &QuasiPolynomial, a: u64) -> QuasiPolynomial {
    assert!(a > 0);
    if a == 1 {
        return p.clone();
    }
    let mut pieces = Vec::with_capacity((p.period * a) as usize);
    for i in 0..(p.period * a) {
        if i % a == 0 {
            pieces.push(p.pieces[(i / a) as usize].scale_arg_div(a));
        } else {
            pieces.push(QPoly::zero());
        }
    }
    QuasiPolynomial {
        period: p.period * a,
        ri: p.ri * a,
        pieces,
    }
}

/// The quotient quasi-polynomial: piece i is Σⱼ hⱼ · P_{(i−j) mod d}(x − j),
/// valid from the regularity index of the numerator.
pub fn quasi_poly_quotient(h: &HilbertNumerator, p_r: &QuasiPolynomial) -> QuasiPolynomial {
    let d = p_r.period;
    let mut pieces = Vec::with_capacity(d as usize);
    for i in 0..d {
        let mut acc = QPoly::zero();
        for (e, c) in h.terms() {
            let src = &p_r.pieces[((i + d - (e % d)) % d) as usize];
            acc = acc.add_scaled(&src.shift_arg(e), c);
        }
        pieces.push(acc);
    }
    QuasiPolynomial {
        period: d,
        ri: regularity_index(h),
        pieces,
    }
}

/// Full pipeline for a quotient: normalize the weights, build the ring
/// quasi-polynomial, rescale back, and convolve with the numerator.
pub fn quotient_quasi_polynomial(
    h: &HilbertNumerator,
    period_budget: u64,
) -> Result<QuasiPolynomial> {
    let w = h.weights();
    let d = w.period();
    if d > period_budget as u128 {
        return Err(Error::ResourceExhausted(format!(
            "quasi-polynomial period {d} exceeds the budget {period_budget}"
        )));
    }
    let (g, wn) = w.normalized();
    let pc = quasi_poly_r(&wn)?;
    let p_r = rescale(&pc, g);
    Ok(quasi_poly_quotient(h, &p_r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::poly::WeightVector;

    type CaseTable = Vec<(usize, Vec<&'static [u32]>, Vec<u64>)>;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    fn wv(entries: &[u64]) -> WeightVector {
        WeightVector::new(entries.to_vec()).unwrap()
    }

    fn int_coeffs(h: &HilbertNumerator) -> Vec<(u64, i64)> {
        h.terms()
            .map(|(e, c)| (e, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn numerator_examples() {
        // (y^2) with W=[2,3] -> 1 - t^6
        let h = hilbert_numerator(&ideal(2, &[&[0, 2]]), &wv(&[2, 3])).unwrap();
        assert_eq!(int_coeffs(&h), vec![(0, 1), (6, -1)]);
        // (y^16) with W=[16,7] -> 1 - t^112
        let h = hilbert_numerator(&ideal(2, &[&[0, 16]]), &wv(&[16, 7])).unwrap();
        assert_eq!(int_coeffs(&h), vec![(0, 1), (112, -1)]);
        // (x^4, x*y^3) with W=[3,4,5] -> 1 - t^12 - t^15 + t^24
        let h = hilbert_numerator(&ideal(3, &[&[4, 0, 0], &[1, 3, 0]]), &wv(&[3, 4, 5])).unwrap();
        assert_eq!(int_coeffs(&h), vec![(0, 1), (12, -1), (15, -1), (24, 1)]);
        // unit ideal is rejected
        assert!(matches!(
            hilbert_numerator(&ideal(2, &[&[0, 0]]), &wv(&[1, 1])),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn numerator_matches_inclusion_exclusion() {
        let cases: CaseTable = vec![
            (2, vec![&[2, 0], &[1, 1]], vec![1, 1]),
            (3, vec![&[4, 0, 0], &[1, 3, 0]], vec![3, 4, 5]),
            (3, vec![&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]], vec![2, 5, 7]),
            (2, vec![&[5, 0], &[3, 2], &[1, 4], &[0, 6]], vec![2, 3]),
        ];
        for (n, gens, w) in cases {
            let m = ideal(n, &gens);
            let w = wv(&w);
            assert_eq!(
                hilbert_numerator(&m, &w).unwrap(),
                hilbert_numerator_incl_excl(&m, &w).unwrap()
            );
        }
    }

    #[test]
    fn regularity_index_examples() {
        let h = hilbert_numerator(&ideal(2, &[&[0, 2]]), &wv(&[2, 3])).unwrap();
        assert_eq!(regularity_index(&h), 2);
        let h = hilbert_numerator(&ideal(2, &[]), &wv(&[2, 3])).unwrap();
        assert_eq!(regularity_index(&h), 0);
        let h = hilbert_numerator(&ideal(2, &[&[0, 16]]), &wv(&[16, 7])).unwrap();
        assert_eq!(regularity_index(&h), 90);
    }

    #[test]
    fn hr_values_against_enumeration() {
        // frozen example first
        let got: Vec<i64> = hr_values(&wv(&[2, 3]), 6)
            .unwrap()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(got, vec![1, 0, 1, 1, 1, 1, 2]);
        assert_eq!(hr_values(&wv(&[1, 3]), 3).unwrap()[3], BigInt::from(2));
        // a few random-ish configurations against the brute-force oracle
        for w in [
            vec![1u64, 1],
            vec![2, 3, 7],
            vec![4, 6],
            vec![5, 5, 5],
            vec![3, 4, 5, 6],
        ] {
            let kmax = 40u64;
            let hr = hr_values(&wv(&w), kmax).unwrap();
            for k in 0..=kmax {
                assert_eq!(
                    hr[k as usize],
                    oracle::count_partitions(&w, k),
                    "W={w:?} k={k}"
                );
            }
        }
    }

    #[test]
    fn quotient_values_examples() {
        let w = wv(&[2, 3]);
        let h = hilbert_numerator(&ideal(2, &[&[0, 2]]), &w).unwrap();
        let hr = hr_values(&w, 7).unwrap();
        let hq = quotient_h_values(&h, &hr, 7).unwrap();
        let got: Vec<i64> = hq.iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(got, vec![1, 0, 1, 1, 1, 1, 1, 1]);

        // h = 1 is the identity convolution
        let h1 = hilbert_numerator(&ideal(2, &[]), &w).unwrap();
        assert_eq!(quotient_h_values(&h1, &hr, 7).unwrap(), hr);

        // the standard-grading counterexample: H(1) = 2
        let w11 = wv(&[1, 1]);
        let h = hilbert_numerator(&ideal(2, &[&[2, 0], &[1, 1]]), &w11).unwrap();
        assert_eq!(int_coeffs(&h), vec![(0, 1), (2, -2), (3, 1)]);
        let hr = hr_values(&w11, 5).unwrap();
        let hq = quotient_h_values(&h, &hr, 5).unwrap();
        assert_eq!(hq[1], BigInt::from(2));
    }

    #[test]
    fn ring_quasi_polynomial_examples() {
        // W=[1]: single piece, constantly 1
        let p = quasi_poly_r(&wv(&[1])).unwrap();
        assert_eq!(p.period(), 1);
        assert!(p.pieces()[0].is_constant_zero_or_one());

        // W=[2,3]: 6 pieces, degree 1, leading coefficient 1/6
        let p = quasi_poly_r(&wv(&[2, 3])).unwrap();
        assert_eq!(p.period(), 6);
        let sixth = BigRational::new(BigInt::one(), BigInt::from(6));
        for piece in p.pieces() {
            assert_eq!(piece.degree(), Some(1));
            assert_eq!(piece.leading_coeff().unwrap(), &sixth);
        }

        // W=[1,1]: the single piece is x + 1
        let p = quasi_poly_r(&wv(&[1, 1])).unwrap();
        assert_eq!(p.period(), 1);
        assert_eq!(
            p.pieces()[0].coeffs(),
            &[BigRational::one(), BigRational::one(),]
        );
    }

    #[test]
    fn quasi_poly_agrees_with_h_values() {
        for w in [vec![2u64, 3], vec![3, 4, 5], vec![1, 2, 2], vec![2, 5, 12]] {
            let w = wv(&w);
            let p = quasi_poly_r(&w).unwrap();
            let d = p.period();
            let hr = hr_values(&w, 3 * d).unwrap();
            for k in 0..=3 * d {
                assert_eq!(
                    p.eval(k),
                    BigRational::from_integer(hr[k as usize].clone()),
                    "W={:?} k={k}",
                    w.entries()
                );
            }
        }
    }

    #[test]
    fn rescale_examples() {
        let p = quasi_poly_r(&wv(&[1])).unwrap();
        assert_eq!(rescale(&p, 1), p);
        // W=[1] scaled by 2: pieces 1, 0
        let p2 = rescale(&p, 2);
        assert_eq!(p2.period(), 2);
        assert!(p2.pieces()[0].is_constant_zero_or_one());
        assert!(!p2.pieces()[0].is_zero());
        assert!(p2.pieces()[1].is_zero());
        // evaluation matches direct H values for W=[2]
        let hr = hr_values(&wv(&[2]), 10).unwrap();
        for k in 0..=10u64 {
            assert_eq!(
                p2.eval(k),
                BigRational::from_integer(hr[k as usize].clone())
            );
        }

        // W=[2,3] from its normalized twin [2,3]/1; scale [1,3]... use gcd 2 case
        let w46 = wv(&[4, 6]);
        let (g, wn) = w46.normalized();
        assert_eq!(g, 2);
        let p = rescale(&quasi_poly_r(&wn).unwrap(), g);
        assert_eq!(p.period(), 12);
        for (i, piece) in p.pieces().iter().enumerate() {
            if i % 2 == 1 {
                assert!(piece.is_zero());
            }
        }
        let hr = hr_values(&w46, 36).unwrap();
        for k in 0..=36u64 {
            assert_eq!(p.eval(k), BigRational::from_integer(hr[k as usize].clone()));
        }
    }

    #[test]
    fn quotient_quasi_polynomial_examples() {
        // h = 1 leaves the ring quasi-polynomial unchanged
        let w = wv(&[2, 3]);
        let h1 = hilbert_numerator(&ideal(2, &[]), &w).unwrap();
        let p_r = quasi_poly_r(&w).unwrap();
        let q = quasi_poly_quotient(&h1, &p_r);
        assert_eq!(q.pieces(), p_r.pieces());

        // Hermitian: six pieces, all the constant 1
        let h = hilbert_numerator(&ideal(2, &[&[0, 2]]), &w).unwrap();
        let q = quasi_poly_quotient(&h, &p_r);
        assert_eq!(q.period(), 6);
        assert_eq!(q.ri(), 2);
        assert!(q.all_pieces_zero_or_one());
        assert!(q.pieces().iter().all(|p| !p.is_zero()));

        // quotient by (x^4, x*y^3) under W=[3,4,5]: 60 pieces of degree 1
        let w = wv(&[3, 4, 5]);
        let h = hilbert_numerator(&ideal(3, &[&[4, 0, 0], &[1, 3, 0]]), &w).unwrap();
        let q = quotient_quasi_polynomial(&h, 1_000_000).unwrap();
        assert_eq!(q.period(), 60);
        assert!(q.pieces().iter().all(|p| p.degree() == Some(1)));
        // the pieces repeat: 20 distinct lines across the 60 residues
        assert_eq!(q.distinct_pieces().len(), 20);
        // agreement with the convolved H values well past the threshold
        let hr = hr_values(&w, 300).unwrap();
        let hq = quotient_h_values(&h, &hr, 300).unwrap();
        for k in q.ri()..=300 {
            assert_eq!(q.eval(k), BigRational::from_integer(hq[k as usize].clone()));
        }
    }

    #[test]
    fn quotient_pipeline_handles_common_weight_factors() {
        // gcd(W) = 2: the ring pieces come from the normalized twin and are
        // rescaled before the convolution
        let w = wv(&[4, 6]);
        let h = hilbert_numerator(&ideal(2, &[&[0, 2]]), &w).unwrap();
        assert_eq!(int_coeffs(&h), vec![(0, 1), (12, -1)]);
        let q = quotient_quasi_polynomial(&h, 1_000_000).unwrap();
        assert_eq!(q.period(), 12);
        assert_eq!(q.ri(), 3);
        let hr = hr_values(&w, 60).unwrap();
        let hq = quotient_h_values(&h, &hr, 60).unwrap();
        for k in q.ri()..=60 {
            assert_eq!(
                q.eval(k),
                BigRational::from_integer(hq[k as usize].clone()),
                "k={k}"
            );
        }
        // odd weights are unrepresentable: those residue pieces are zero
        for (i, piece) in q.pieces().iter().enumerate() {
            if i % 2 == 1 {
                assert!(piece.is_zero());
            }
        }
    }

    #[test]
    fn h_values_count_staircase_monomials() {
        // cross-module consistency: H(k) equals the number of staircase
        // monomials of weight k, checked by direct enumeration up to 60
        let cases: CaseTable = vec![
            (2, vec![&[0, 2]], vec![2, 3]),
            (3, vec![&[4, 0, 0], &[1, 3, 0]], vec![3, 4, 5]),
            (2, vec![&[2, 0], &[1, 1]], vec![1, 1]),
            (3, vec![&[0, 4, 0], &[0, 0, 7]], vec![4, 3, 2]),
            (2, vec![], vec![2, 5]),
        ];
        for (n, gens, weights) in cases {
            let m = ideal(n, &gens);
            let w = wv(&weights);
            let h = hilbert_numerator(&m, &w).unwrap();
            let hr = hr_values(&w, 60).unwrap();
            let hq = quotient_h_values(&h, &hr, 60).unwrap();
            for k in 0..=60u64 {
                let count =
                    crate::oracle::staircase_monomials_at_weight(m.gens(), w.entries(), k).len();
                assert_eq!(
                    hq[k as usize],
                    BigInt::from(count),
                    "gens {:?} W {:?} k {k}",
                    m.gens(),
                    weights
                );
            }
        }
    }

    #[test]
    fn solver_matches_newton_interpolation() {
        // random-ish small Vandermonde systems
        let xs: Vec<u64> = vec![2, 7, 11, 20];
        let ys: Vec<i64> = vec![5, -3, 14, 0];
        let n = xs.len();
        let mat: Vec<Vec<BigInt>> = xs
            .iter()
            .map(|&x| {
                (0..n)
                    .map(|i| BigInt::from(x).pow(i as u32))
                    .collect::<Vec<_>>()
            })
            .collect();
        let rhs: Vec<BigInt> = ys.iter().map(|&y| BigInt::from(y)).collect();
        let solved = fraction_free_solve(mat, rhs).unwrap();
        let xs_q: Vec<BigRational> = xs
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let ys_q: Vec<BigRational> = ys
            .iter()
            .map(|&y| BigRational::from_integer(BigInt::from(y)))
            .collect();
        let mut newton = oracle::newton_interpolate(&xs_q, &ys_q);
        newton.resize(n, BigRational::zero());
        assert_eq!(solved, newton);

        // singular system is reported
        let mat = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert!(matches!(
            fraction_free_solve(mat, vec![BigInt::one(), BigInt::one()]),
            Err(Error::SingularSystem)
        ));
    }

    #[test]
    fn leading_coefficient_law_small() {
        for w in [vec![2u64, 3], vec![1, 4, 5], vec![2, 2, 6, 9, 12]] {
            let w = wv(&w);
            assert_eq!(w.gcd(), 1);
            let n = w.len() as u64;
            let p = quasi_poly_r(&w).unwrap();
            let denom: BigInt = w
                .entries()
                .iter()
                .map(|&x| BigInt::from(x))
                .product::<BigInt>()
                * factorial(n - 1);
            let lead = BigRational::new(BigInt::one(), denom);
            for piece in p.pieces() {
                assert_eq!(piece.degree(), Some(n as usize - 1));
                assert_eq!(piece.leading_coeff().unwrap(), &lead);
            }
        }
    }
}
