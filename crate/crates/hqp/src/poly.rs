//! Monomials, multivariate polynomials, and the generalized weighted degree
//! ordering.
//!
//! The ordering compares weighted degrees Σ αᵢwᵢ first and breaks ties with
//! a classical monomial order (lex or degrevlex) under an explicit variable
//! precedence, so `x ≺ y` setups from the literature can be expressed
//! directly. Polynomials store their terms sorted descending under the
//! ring's order, with no zero coefficients and no duplicate monomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};

/// Exponent vector of a monomial. Exponents are machine integers with
/// checked arithmetic; weighted degrees are accumulated in 128 bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// x_i^e in `n` variables.
    pub fn var_pow(i: usize, e: u32, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Weighted degree Σ αᵢwᵢ. Checked: the full precondition is that the
    /// dimensions agree; use [`weight`] for the validated entry point.
    pub fn weight(&self, w: &WeightVector) -> u64 {
        debug_assert_eq!(self.n_vars(), w.len());
        let total: u128 = self
            .exps
            .iter()
            .zip(w.entries())
            .map(|(&a, &wi)| a as u128 * wi as u128)
            .sum();
        u64::try_from(total).expect("weighted degree overflow")
    }

    /// Render with the given variable names, e.g. `x^2*y` (and `1` for the
    /// constant monomial). Matches the expression grammar of the `io` module.
    pub fn format(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars[i].clone()),
                _ => parts.push(format!("{}^{}", vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Checked weighted degree of a monomial (dimension-validated entry point).
pub fn weight(m: &Monomial, w: &WeightVector) -> Result<u64> {
    if m.n_vars() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            got: m.n_vars(),
        });
    }
    Ok(m.weight(w))
}

/// Positive variable weights together with the derived period data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<u64>,
}

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightVector { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// d = lcm(w₁, …, w_n), computed in 128 bits.
    pub fn period(&self) -> u128 {
        self.entries
            .iter()
            .fold(1u128, |acc, &w| acc.lcm(&(w as u128)))
    }

    pub fn gcd(&self) -> u64 {
        self.entries.iter().fold(0u64, |acc, &w| acc.gcd(&w))
    }

    /// Σ wᵢ (the degree of the Hilbert series denominator).
    pub fn sum(&self) -> u64 {
        let s: u128 = self.entries.iter().map(|&w| w as u128).sum();
        u64::try_from(s).expect("weight sum overflow")
    }

    /// The normalized twin W / gcd(W) and the gcd itself.
    pub fn normalized(&self) -> (u64, WeightVector) {
        let g = self.gcd();
        (
            g,
            WeightVector {
                entries: self.entries.iter().map(|&w| w / g).collect(),
            },
        )
    }

    /// Componentwise scaling a·W.
    pub fn scaled(&self, a: u64) -> WeightVector {
        assert!(a > 0);
        WeightVector {
            entries: self
                .entries
                .iter()
                .map(|&w| w.checked_mul(a).expect("weight overflow"))
                .collect(),
        }
    }
}

/// The classical monomial order used to break weight ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Lex,
    DegRevLex,
}

impl TieBreak {
    pub fn name(&self) -> &'static str {
        match self {
            TieBreak::Lex => "lex",
            TieBreak::DegRevLex => "degrevlex",
        }
    }
}

/// Generalized weighted degree ordering: weight first, then the tie-break
/// order applied under a variable precedence.
///
/// `precedence[0]` is the most significant variable index. For the usual
/// `x ≺ y` two-variable setup the precedence is `[1, 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrder {
    weights: WeightVector,
    tiebreak: TieBreak,
    precedence: Vec<usize>,
}

impl WeightedOrder {
    pub fn new(weights: WeightVector, tiebreak: TieBreak, precedence: Vec<usize>) -> Result<Self> {
        let n = weights.len();
        let mut seen = vec![false; n];
        if precedence.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: precedence.len(),
            });
        }
        for &i in &precedence {
            if i >= n || seen[i] {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: precedence.len(),
                });
            }
            seen[i] = true;
        }
        Ok(WeightedOrder {
            weights,
            tiebreak,
            precedence,
        })
    }

    /// Default precedence: the first declared variable is most significant.
    pub fn with_default_precedence(weights: WeightVector, tiebreak: TieBreak) -> Self {
        let n = weights.len();
        WeightedOrder {
            weights,
            tiebreak,
            precedence: (0..n).collect(),
        }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn tiebreak(&self) -> TieBreak {
        self.tiebreak
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    /// Same order, different tie-break kind.
    pub fn with_tiebreak(&self, tiebreak: TieBreak) -> Self {
        WeightedOrder {
            weights: self.weights.clone(),
            tiebreak,
            precedence: self.precedence.clone(),
        }
    }

    fn tiebreak_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.tiebreak {
            TieBreak::Lex => {
                for &v in &self.precedence {
                    match a.exps()[v].cmp(&b.exps()[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TieBreak::DegRevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for &v in self.precedence.iter().rev() {
                    // smaller exponent in the least significant variable wins
                    match b.exps()[v].cmp(&a.exps()[v]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Total comparison; assumes dimensions agree (see [`compare`]).
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.weight(&self.weights).cmp(&b.weight(&self.weights)) {
            Ordering::Equal => self.tiebreak_cmp(a, b),
            other => other,
        }
    }
}

/// Dimension-validated comparison of two monomials under a weighted order.
pub fn compare(a: &Monomial, b: &Monomial, ord: &WeightedOrder) -> Result<Ordering> {
    let n = ord.weights().len();
    for m in [a, b] {
        if m.n_vars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.n_vars(),
            });
        }
    }
    Ok(ord.cmp(a, b))
}

#[derive(Debug)]
struct RingRepr {
    field: Field,
    vars: Vec<String>,
    order: WeightedOrder,
}

impl PartialEq for RingRepr {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.vars == other.vars && self.order == other.order
    }
}

/// A polynomial ring context: coefficient field, named variables, and the
/// weighted order used to sort terms. Cheap to clone.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingRepr>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: WeightedOrder) -> Result<Self> {
        if vars.len() != order.weights().len() {
            return Err(Error::WeightCountMismatch {
                expected: vars.len(),
                got: order.weights().len(),
            });
        }
        Ok(PolyRing(Arc::new(RingRepr { field, vars, order })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn n_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.0.order
    }

    pub fn weights(&self) -> &WeightVector {
        self.0.order.weights()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same ring with a different order; polynomials must be re-sorted by
    /// reconstructing them in the new ring.
    pub fn with_order(&self, order: WeightedOrder) -> Result<Self> {
        PolyRing::new(self.0.field.clone(), self.0.vars.clone(), order)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.0.field.one())
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.n_vars()), c)],
        }
    }

    /// The variable xᵢ as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var_pow(i, 1, self.n_vars()), self.0.field.one())
    }

    /// c·m as a polynomial.
    pub fn monomial(&self, m: Monomial, c: FieldElement) -> Polynomial {
        assert_eq!(m.n_vars(), self.n_vars());
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs:
    /// duplicates are merged, zeros dropped, terms sorted descending.
    pub fn from_terms(&self, terms: Vec<(Monomial, FieldElement)>) -> Result<Polynomial> {
        let mut merged: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        let mut sorted = terms;
        for (m, _) in &sorted {
            if m.n_vars() != self.n_vars() {
                return Err(Error::DimensionMismatch {
                    expected: self.n_vars(),
                    got: m.n_vars(),
                });
            }
        }
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        for (m, c) in sorted {
            if c.field() != self.field() {
                return Err(Error::FieldMismatch);
            }
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.add(&c)?;
                }
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.sort_by(|a, b| self.0.order.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.clone(),
            terms: merged,
        })
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

/// A multivariate polynomial with terms sorted descending under its ring's
/// weighted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Terms in descending order under the ring's order.
    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|(_, c)| c)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        self.ring.from_terms(terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.mul(m2), c1.mul(c2)?));
            }
        }
        self.ring.from_terms(prods)
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(self.ring.zero());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| Ok((m.clone(), cc.mul(c)?)))
                .collect::<Result<_>>()?,
        })
    }

    /// `self - c · x^m · other`, the division-step workhorse.
    pub fn sub_scaled(
        &self,
        c: &FieldElement,
        m: &Monomial,
        other: &Polynomial,
    ) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (om, oc) in &other.terms {
            terms.push((om.mul(m), oc.mul(c)?.neg()));
        }
        self.ring.from_terms(terms)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
        if lc.is_one() {
            return Ok(self.clone());
        }
        self.scalar_mul(&lc.inv()?)
    }

    /// All monomials of the support attaining the maximal weight, in
    /// descending order under the ring's order.
    pub fn top_weight_monomials(&self, w: &WeightVector) -> Result<Vec<Monomial>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let weights: Vec<u64> = self
            .terms
            .iter()
            .map(|(m, _)| weight(m, w))
            .collect::<Result<_>>()?;
        let top = *weights.iter().max().expect("nonempty");
        let mut out: Vec<Monomial> = self
            .terms
            .iter()
            .zip(&weights)
            .filter(|(_, &wt)| wt == top)
            .map(|((m, _), _)| m.clone())
            .collect();
        out.sort_by(|a, b| self.ring.order().cmp(b, a));
        Ok(out)
    }

    /// True iff all support monomials share one weight (vacuously for 0).
    pub fn is_w_homogeneous(&self, w: &WeightVector) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.weight(w));
        match it.next() {
            None => true,
            Some(first) => it.all(|wt| wt == first),
        }
    }

    /// Evaluate at a point with coordinates in the ring's field.
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.n_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.n_vars(),
                got: point.len(),
            });
        }
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e as u64))?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Renders in the grammar accepted by `io::parse_polynomial`, so printing
/// and re-parsing round-trips exactly.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = coeff_string(c);
            if i == 0 {
                if sign < 0 {
                    write!(f, "-")?;
                }
            } else if sign < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", m.format(vars))?;
            } else {
                write!(f, "{}*{}", mag, m.format(vars))?;
            }
        }
        Ok(())
    }
}

/// Sign and magnitude rendering of a coefficient. Rational coefficients use
/// a real sign; finite-field coefficients are always canonical (sign +1),
/// with multi-term extension elements parenthesized so the output re-parses.
fn coeff_string(c: &FieldElement) -> (i8, String) {
    if let Some(r) = c.as_rational() {
        use num_traits::Signed;
        let sign = if r.is_negative() { -1 } else { 1 };
        let mag = r.abs();
        let s = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        return (sign, s);
    }
    let s = c.to_string();
    let n_terms = c
        .as_coeffs()
        .map(|v| v.iter().filter(|&&x| x != 0).count())
        .unwrap_or(1);
    if n_terms > 1 {
        (1, format!("({s})"))
    } else {
        (1, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring_q(weights: Vec<u64>, prec: Vec<usize>) -> PolyRing {
        let n = weights.len();
        let names = ["x", "y", "z", "u", "v", "w"];
        let order =
            WeightedOrder::new(WeightVector::new(weights).unwrap(), TieBreak::Lex, prec).unwrap();
        PolyRing::new(
            Field::rationals(),
            names[..n].iter().map(|s| s.to_string()).collect(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        let w = WeightVector::new(vec![2, 3]).unwrap();
        assert_eq!(weight(&Monomial::new(vec![3, 0]), &w).unwrap(), 6);
        assert_eq!(weight(&Monomial::one(2), &w).unwrap(), 0);
        let w = WeightVector::new(vec![16, 7]).unwrap();
        assert_eq!(weight(&Monomial::new(vec![1, 2]), &w).unwrap(), 30);
        // dimension mismatch is caught
        assert!(weight(&Monomial::one(3), &w).is_err());
    }

    #[test]
    fn compare_weight_first_then_tiebreak() {
        // W=[2,3], x ≺ y: x^3 and y^2 tie at weight 6, lex gives y^2 the win
        let ord = WeightedOrder::new(
            WeightVector::new(vec![2, 3]).unwrap(),
            TieBreak::Lex,
            vec![1, 0],
        )
        .unwrap();
        let x3 = Monomial::new(vec![3, 0]);
        let y2 = Monomial::new(vec![0, 2]);
        assert_eq!(compare(&x3, &y2, &ord).unwrap(), Ordering::Less);
        assert_eq!(compare(&x3, &x3, &ord).unwrap(), Ordering::Equal);

        let ord = WeightedOrder::with_default_precedence(
            WeightVector::new(vec![3, 4, 5]).unwrap(),
            TieBreak::Lex,
        );
        let x4 = Monomial::new(vec![4, 0, 0]);
        let xy3 = Monomial::new(vec![1, 3, 0]);
        assert_eq!(compare(&x4, &xy3, &ord).unwrap(), Ordering::Less); // 12 < 15
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring_q(vec![1, 1], vec![0, 1]);
        let x = r.var(0);
        let y = r.var(1);
        let f = x.add(&y).unwrap();
        assert!(f.add(&f.neg()).unwrap().is_zero());
        let g = x.sub(&y).unwrap();
        let prod = f.mul(&g).unwrap();
        let x2 = x.mul(&x).unwrap();
        let y2 = y.mul(&y).unwrap();
        assert_eq!(prod, x2.sub(&y2).unwrap());
        assert_eq!(prod.to_string(), "x^2 - y^2");
    }

    #[test]
    fn char_two_square_is_frobenius() {
        let f2 = Field::prime(2).unwrap();
        let order = WeightedOrder::with_default_precedence(
            WeightVector::new(vec![1, 1]).unwrap(),
            TieBreak::Lex,
        );
        let r = PolyRing::new(f2, vec!["x".into(), "y".into()], order).unwrap();
        let f = r.var(0).add(&r.var(1)).unwrap();
        let sq = f.mul(&f).unwrap();
        let expected = r
            .monomial(Monomial::new(vec![2, 0]), r.field().one())
            .add(&r.monomial(Monomial::new(vec![0, 2]), r.field().one()))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn top_weight_monomials_examples() {
        // Hermitian generator, W = [2,3]: both x^3 and y^2 at weight 6,
        // descending order puts y^2 first under x ≺ y.
        let r = ring_q(vec![2, 3], vec![1, 0]);
        let f = r
            .monomial(Monomial::new(vec![3, 0]), r.field().one())
            .sub(&r.monomial(Monomial::new(vec![0, 2]), r.field().one()))
            .unwrap()
            .sub(&r.var(1))
            .unwrap();
        let tops = f.top_weight_monomials(r.weights()).unwrap();
        assert_eq!(
            tops,
            vec![Monomial::new(vec![0, 2]), Monomial::new(vec![3, 0])]
        );

        let single = r.var(0);
        assert_eq!(
            single.top_weight_monomials(r.weights()).unwrap(),
            vec![Monomial::new(vec![1, 0])]
        );
        assert!(r.zero().top_weight_monomials(r.weights()).is_err());

        // x^4 - x^2 - y^3 + y with W=[3,4]: x^4 and y^3 both weigh 12
        let r = ring_q(vec![3, 4], vec![0, 1]);
        let f = r
            .monomial(Monomial::new(vec![4, 0]), r.field().one())
            .sub(&r.monomial(Monomial::new(vec![2, 0]), r.field().one()))
            .unwrap()
            .sub(&r.monomial(Monomial::new(vec![0, 3]), r.field().one()))
            .unwrap()
            .add(&r.var(1))
            .unwrap();
        let tops = f.top_weight_monomials(r.weights()).unwrap();
        assert_eq!(
            tops,
            vec![Monomial::new(vec![4, 0]), Monomial::new(vec![0, 3])]
        );
    }

    #[test]
    fn w_homogeneous_examples() {
        let r = ring_q(vec![2, 3], vec![1, 0]);
        let f = r
            .monomial(Monomial::new(vec![3, 0]), r.field().one())
            .sub(&r.monomial(Monomial::new(vec![0, 2]), r.field().one()))
            .unwrap();
        assert!(f.is_w_homogeneous(r.weights()));
        let w11 = WeightVector::new(vec![1, 1]).unwrap();
        assert!(!f.is_w_homogeneous(&w11));
        assert!(r.zero().is_w_homogeneous(r.weights()));
    }

    // ---- property tests -------------------------------------------------

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, n).prop_map(Monomial::new)
    }

    fn arb_order(n: usize) -> impl Strategy<Value = WeightedOrder> {
        (
            proptest::collection::vec(1u64..12, n),
            prop_oneof![Just(TieBreak::Lex), Just(TieBreak::DegRevLex)],
            proptest::collection::vec(proptest::num::u32::ANY, n),
        )
            .prop_map(move |(w, tb, keys)| {
                // argsort of random keys gives a random permutation
                let mut prec: Vec<usize> = (0..n).collect();
                prec.sort_by_key(|&i| (keys[i], i));
                WeightedOrder::new(WeightVector::new(w).unwrap(), tb, prec).unwrap()
            })
    }

    proptest! {
        #[test]
        fn order_is_total_and_consistent(
            (a, b, c, ord) in (2usize..5).prop_flat_map(|n| {
                (arb_monomial(n), arb_monomial(n), arb_monomial(n), arb_order(n))
            })
        ) {
            // antisymmetry
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            // EQ only for identical monomials
            if ord.cmp(&a, &b) == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            // transitivity
            if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn order_is_multiplicative(
            (a, b, m, ord) in (2usize..5).prop_flat_map(|n| {
                (arb_monomial(n), arb_monomial(n), arb_monomial(n), arb_order(n))
            })
        ) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&m), &b.mul(&m)));
        }

        #[test]
        fn weight_is_additive(
            (a, b, w) in (2usize..5).prop_flat_map(|n| {
                (arb_monomial(n), arb_monomial(n),
                 proptest::collection::vec(1u64..12, n))
            })
        ) {
            let w = WeightVector::new(w).unwrap();
            prop_assert_eq!(a.mul(&b).weight(&w), a.weight(&w) + b.weight(&w));
        }

        #[test]
        fn well_order_no_infinite_descent(
            (seed, ord) in (2usize..4).prop_flat_map(|n| {
                (arb_monomial(n), arb_order(n))
            })
        ) {
            // any strictly descending chain from a random start, stepping to a
            // proper divisor or weight-reducing neighbor, hits 1 in finitely
            // many steps: simulate by walking divisors
            let mut cur = seed;
            let mut steps = 0usize;
            while !cur.is_one() {
                let mut exps = cur.exps().to_vec();
                let i = exps.iter().position(|&e| e > 0).unwrap();
                exps[i] -= 1;
                let next = Monomial::new(exps);
                prop_assert_eq!(ord.cmp(&next, &cur), Ordering::Less);
                cur = next;
                steps += 1;
                prop_assert!(steps < 10_000);
            }
        }

        #[test]
        fn leading_monomial_of_product(
            (fa, fb) in (2usize..4).prop_flat_map(|n| {
                (proptest::collection::vec((arb_monomial(n), -4i64..5), 1..5),
                 proptest::collection::vec((arb_monomial(n), -4i64..5), 1..5))
            })
        ) {
            let n = fa[0].0.n_vars();
            let r = ring_q(vec![2, 3, 5, 7][..n].to_vec(), (0..n).collect());
            let build = |ts: &[(Monomial, i64)]| {
                r.from_terms(
                    ts.iter()
                        .map(|(m, c)| (m.clone(), r.field().from_integer(*c)))
                        .collect(),
                )
                .unwrap()
            };
            let f = build(&fa);
            let g = build(&fb);
            if let (Some(lf), Some(lg)) = (f.leading_monomial(), g.leading_monomial()) {
                let prod = f.mul(&g).unwrap();
                // coefficients are in Q, an integral domain, so lm(fg) = lm(f)lm(g)
                prop_assert_eq!(prod.leading_monomial().unwrap(), &lf.mul(lg));
            }
        }
    }
}
