//! Evaluation codes over the rational points of a variety, and the
//! semigroup lower bounds on their minimum distance.
//!
//! Adding the field equations xᵢ^q − xᵢ to an ideal I cuts the variety down
//! to its 𝔽_q-rational points; the quotient by I_q is then a finite-
//! dimensional vector space whose monomial staircase evaluates isomorphically
//! onto 𝔽_q^N. Codes are built by evaluating the ≺_W-smallest staircase
//! monomials at all N points.
//!
//! When the order-domain check succeeded, the weight semigroup
//! Γ = w(staircase of I) has a cheap membership oracle — λ ∈ Γ exactly when
//! H(λ) = 1 — and the counting functions μ and σ bound the minimum distance
//! of the dual and primal codes. The module refuses to produce semigroup
//! bounds when the order-domain check failed, since they are meaningless
//! there; the exhaustive distance oracle works regardless.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::FieldElement;
use crate::groebner::{buchberger, enumerate_staircase, initial_ideal, normal_form, GroebnerBasis};
use crate::hilbert::{hr_values, quotient_h_values, HilbertNumerator};
use crate::io::ProblemSpec;
use crate::orderdomain::{check_order_domain, OrderDomainReport};
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::Budgets;

/// The 𝔽_q-rational points of a variety, deduplicated, in canonical order
/// (lexicographic on coordinates, first coordinate most significant).
#[derive(Debug, Clone)]
pub struct VarietyPoints {
    points: Vec<Vec<FieldElement>>,
}

impl VarietyPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }
}

/// A linear evaluation code given by its generator matrix: row i is the
/// evaluation of the i-th chosen monomial at all points.
#[derive(Debug, Clone)]
pub struct EvaluationCode {
    matrix: Vec<Vec<FieldElement>>,
    monomials: Vec<Monomial>,
}

impl EvaluationCode {
    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    pub fn length(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    /// The monomials spanning the function space, ascending under ≺_W.
    /// Empty for codes not built from monomials (e.g. dual codes).
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn matrix(&self) -> &[Vec<FieldElement>] {
        &self.matrix
    }

    /// Rows as space-separated element strings, for plain-text export.
    pub fn matrix_rows(&self) -> Vec<String> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

/// Append the field equations xᵢ^q − xᵢ. `q` must be the order of the
/// coefficient field.
pub fn extend_to_iq(gens: &[Polynomial], ring: &PolyRing, q: u64) -> Result<Vec<Polynomial>> {
    if ring.field().order() != Some(q) {
        return Err(Error::FieldMismatch);
    }
    let qe = u32::try_from(q).map_err(|_| Error::ResourceExhausted("q too large".into()))?;
    let mut out = gens.to_vec();
    let one = ring.field().one();
    for i in 0..ring.n_vars() {
        let fe = ring
            .monomial(Monomial::var_pow(i, qe, ring.n_vars()), one.clone())
            .sub(&ring.var(i))?;
        out.push(fe);
    }
    Ok(out)
}

/// Exhaustively scan 𝔽_q^n for common zeros of the generators.
pub fn enumerate_points(
    gens: &[Polynomial],
    ring: &PolyRing,
    budget_points: u64,
) -> Result<VarietyPoints> {
    let q = ring.field().order().ok_or_else(|| {
        Error::ResourceExhausted("point enumeration requires a finite field".into())
    })?;
    let n = ring.n_vars() as u32;
    let total = q
        .checked_pow(n)
        .filter(|&t| t <= budget_points)
        .ok_or_else(|| {
            Error::ResourceExhausted(format!(
                "point scan q^n = {q}^{n} exceeds the budget {budget_points}"
            ))
        })?;
    let field = ring.field();
    let mut points = Vec::new();
    for idx in 0..total {
        // decompose big-endian so points come out in lexicographic order
        let mut coords = vec![field.zero(); n as usize];
        let mut t = idx;
        for i in (0..n as usize).rev() {
            coords[i] = field.element_from_index(t % q);
            t /= q;
        }
        let mut ok = true;
        for g in gens {
            if !g.eval(&coords)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            points.push(coords);
        }
    }
    Ok(VarietyPoints { points })
}

/// Evaluate the chosen monomials at all points and verify full rank.
pub fn build_code(
    points: &VarietyPoints,
    monomials: &[Monomial],
    ring: &PolyRing,
) -> Result<EvaluationCode> {
    let field = ring.field();
    let mut matrix = Vec::with_capacity(monomials.len());
    for m in monomials {
        let poly = ring.monomial(m.clone(), field.one());
        let row: Vec<FieldElement> = points
            .points
            .iter()
            .map(|p| poly.eval(p))
            .collect::<Result<_>>()?;
        matrix.push(row);
    }
    let code = EvaluationCode {
        matrix,
        monomials: monomials.to_vec(),
    };
    if rank(&code.matrix)? != code.dimension() {
        return Err(Error::RankDeficient);
    }
    Ok(code)
}

/// Row rank by exact Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn rank(matrix: &[Vec<FieldElement>]) -> Result<usize> {
    let mut rows: Vec<Vec<FieldElement>> = matrix.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].inv()?;
        for j in col..ncols {
            rows[r][j] = rows[r][j].mul(&inv)?;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..ncols {
                    let sub = rows[r][j].mul(&f)?;
                    rows[i][j] = rows[i][j].sub(&sub)?;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(r)
}

/// A basis of the right null space of the generator matrix: the dual code's
/// generator matrix. Exact elimination; used as a test oracle.
#[allow(clippy::needless_range_loop)]
pub fn dual_code(code: &EvaluationCode, ring: &PolyRing) -> Result<EvaluationCode> {
    let field = ring.field();
    let k = code.dimension();
    let n = code.length();
    // reduced row echelon form
    let mut rows = code.matrix.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        let Some(p) = (r..k).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv()?;
        for j in 0..n {
            rows[r][j] = rows[r][j].mul(&inv)?;
        }
        for i in 0..k {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..n {
                    let sub = rows[r][j].mul(&f)?;
                    rows[i][j] = rows[i][j].sub(&sub)?;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == k {
            break;
        }
    }
    if r != k {
        return Err(Error::RankDeficient);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![field.zero(); n];
        v[fc] = field.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[ri][fc].neg();
        }
        basis.push(v);
    }
    Ok(EvaluationCode {
        matrix: basis,
        monomials: Vec::new(),
    })
}

/// Minimum Hamming weight over all nonzero codewords, by exhaustive message
/// enumeration. `None` for the zero code (dimension 0).
pub fn exact_min_distance(code: &EvaluationCode, budget_messages: u64) -> Result<Option<u64>> {
    let k = code.dimension();
    if k == 0 {
        return Ok(None);
    }
    let field = code.matrix[0][0].field().clone();
    let q = field.order().expect("codes live over finite fields");
    let total = (q as u128)
        .checked_pow(k as u32)
        .filter(|&t| t <= budget_messages as u128)
        .ok_or_else(|| {
            Error::ResourceExhausted(format!(
                "message scan q^k = {q}^{k} exceeds the budget {budget_messages}"
            ))
        })? as u64;
    let n = code.length();
    let mut best: Option<u64> = None;
    for idx in 1..total {
        let mut word = vec![field.zero(); n];
        let mut t = idx;
        for row in &code.matrix {
            let digit = t % q;
            t /= q;
            if digit != 0 {
                let c = field.element_from_index(digit);
                for (w, e) in word.iter_mut().zip(row) {
                    *w = w.add(&e.mul(&c)?)?;
                }
            }
        }
        let wt = word.iter().filter(|e| !e.is_zero()).count() as u64;
        debug_assert!(wt > 0, "generator matrix has full rank");
        best = Some(best.map_or(wt, |b| b.min(wt)));
        if best == Some(1) {
            break; // cannot do better
        }
    }
    Ok(best)
}

/// The weight function induced by the order-domain structure: −∞ (None) on
/// members of the ideal, otherwise the maximal support weight of the normal
/// form. Only a genuine weight function when the order-domain check passed.
pub fn rho_evaluate(f: &Polynomial, basis: &GroebnerBasis) -> Result<Option<u64>> {
    let nf = normal_form(f, basis.polys())?;
    if nf.is_zero() {
        return Ok(None);
    }
    let w = f.ring().weights();
    Ok(nf.terms().iter().map(|(m, _)| m.weight(w)).max())
}

// ---------------------------------------------------------------------------
// the weight semigroup
// ---------------------------------------------------------------------------

/// Membership oracle for Γ = w(staircase of I) up to a bound, together with
/// the finite weight set w(staircase of I_q).
///
/// Membership is read off the Hilbert function: λ ∈ Γ ⇔ H(λ) = 1, which is
/// valid exactly when the second order-domain condition holds. The
/// constructor rejects Hilbert data with H(λ) ≥ 2.
#[derive(Debug, Clone)]
pub struct SemigroupView {
    member: Vec<bool>,
    bound: u64,
    finite_weights: Vec<u64>,
}

impl SemigroupView {
    pub fn new(h: &HilbertNumerator, finite_weights: Vec<u64>, bound: u64) -> Result<Self> {
        let hr = hr_values(h.weights(), bound)?;
        let hq = quotient_h_values(h, &hr, bound)?;
        let one = BigInt::one();
        let mut member = Vec::with_capacity(bound as usize + 1);
        for v in &hq {
            if *v > one {
                return Err(Error::NotOrderDomain);
            }
            member.push(v.is_one());
        }
        Ok(SemigroupView {
            member,
            bound,
            finite_weights,
        })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Weights of the I_q staircase, ascending.
    pub fn finite_weights(&self) -> &[u64] {
        &self.finite_weights
    }

    pub fn contains(&self, value: u64) -> Result<bool> {
        if value > self.bound {
            return Err(Error::BoundExceeded(value, self.bound));
        }
        Ok(self.member[value as usize])
    }
}

/// μ(λ) = #{α ∈ Γ : λ − α ∈ Γ}: the dual-distance counting function.
pub fn mu(lambda: u64, gamma: &SemigroupView) -> Result<u64> {
    if lambda > gamma.bound() {
        return Err(Error::BoundExceeded(lambda, gamma.bound()));
    }
    let mut count = 0u64;
    for alpha in 0..=lambda {
        if gamma.contains(alpha)? && gamma.contains(lambda - alpha)? {
            count += 1;
        }
    }
    Ok(count)
}

/// σ(α) = #{λ ∈ w(staircase of I_q) : λ − α ∈ Γ}: the primal-distance
/// counting function.
pub fn sigma(alpha: u64, gamma: &SemigroupView) -> Result<u64> {
    let mut count = 0u64;
    for &lambda in gamma.finite_weights() {
        if lambda >= alpha && gamma.contains(lambda - alpha)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Semigroup lower bounds for the code and its dual.
#[derive(Debug, Clone, Serialize)]
pub struct DistanceBounds {
    /// min σ(w(m)) over the chosen monomials: bound for the primal code.
    pub primal: u64,
    /// min μ(λ) over Γ-values up to the maximal staircase weight that are
    /// not chosen weights: bound for the dual code. `None` when the scan
    /// range is empty.
    pub dual: Option<u64>,
}

/// Compute both bounds for a code built from staircase monomials.
///
/// The dual scan ranges over Γ ∩ [0, max w(staircase of I_q)] minus the
/// chosen monomial weights; weights beyond the maximal staircase weight
/// cannot index dual coordinates.
pub fn distance_bounds(
    code: &EvaluationCode,
    gamma: &SemigroupView,
    w: &crate::poly::WeightVector,
) -> Result<DistanceBounds> {
    let chosen: Vec<u64> = code.monomials.iter().map(|m| m.weight(w)).collect();
    let mut primal: Option<u64> = None;
    for &alpha in &chosen {
        let s = sigma(alpha, gamma)?;
        primal = Some(primal.map_or(s, |p| p.min(s)));
    }
    let primal = primal.ok_or(Error::RankDeficient)?;

    let max_fw = gamma.finite_weights().iter().copied().max().unwrap_or(0);
    let mut dual: Option<u64> = None;
    for lambda in 0..=max_fw {
        if gamma.contains(lambda)? && !chosen.contains(&lambda) {
            let m = mu(lambda, gamma)?;
            dual = Some(dual.map_or(m, |d| d.min(m)));
        }
    }
    Ok(DistanceBounds { primal, dual })
}

// ---------------------------------------------------------------------------
// pipeline contexts
// ---------------------------------------------------------------------------

/// Everything needed to evaluate codes on a variety: the I_q basis, its
/// staircase (ascending under ≺_W), and the rational points.
#[derive(Debug, Clone)]
pub struct VarietyContext {
    pub ring: PolyRing,
    pub q: u64,
    pub basis_iq: GroebnerBasis,
    pub staircase: Vec<Monomial>,
    pub points: VarietyPoints,
}

impl VarietyContext {
    /// Build from a problem spec. Checks the length law: the number of
    /// points equals the staircase size of in(I_q).
    pub fn new(spec: &ProblemSpec, budgets: &Budgets) -> Result<Self> {
        let ring = spec.ring.clone();
        let q = ring.field().order().ok_or_else(|| {
            Error::ResourceExhausted("codes require a finite coefficient field".into())
        })?;
        if let Some(declared) = spec.q {
            if declared != q {
                return Err(Error::FieldMismatch);
            }
        }
        let iq_gens = extend_to_iq(&spec.generators, &ring, q)?;
        let basis_iq = buchberger(&iq_gens, budgets.pairs)?;
        let init_iq = initial_ideal(&basis_iq);
        let staircase = enumerate_staircase(&init_iq, ring.order())?;
        let points = enumerate_points(&iq_gens, &ring, budgets.points)?;
        assert_eq!(
            points.len(),
            staircase.len(),
            "variety size must match the I_q staircase size"
        );
        Ok(VarietyContext {
            ring,
            q,
            basis_iq,
            staircase,
            points,
        })
    }

    /// The code spanned by the k smallest staircase monomials.
    pub fn code(&self, k: usize) -> Result<EvaluationCode> {
        if k == 0 || k > self.staircase.len() {
            return Err(Error::ResourceExhausted(format!(
                "code dimension {k} out of range 1..={}",
                self.staircase.len()
            )));
        }
        build_code(&self.points, &self.staircase[..k], &self.ring)
    }
}

/// A variety context plus the weight-semigroup machinery; only available
/// when the order-domain check succeeded.
#[derive(Debug, Clone)]
pub struct SemigroupContext {
    pub variety: VarietyContext,
    pub report: OrderDomainReport,
    pub gamma: SemigroupView,
}

impl SemigroupContext {
    pub fn new(spec: &ProblemSpec, budgets: &Budgets) -> Result<Self> {
        let report = check_order_domain(spec, budgets)?;
        if !report.is_order_domain {
            return Err(Error::NotOrderDomain);
        }
        let variety = VarietyContext::new(spec, budgets)?;
        let w = spec.ring.weights();
        let mut finite_weights: Vec<u64> = variety.staircase.iter().map(|m| m.weight(w)).collect();
        finite_weights.sort_unstable();
        // under the second condition these are pairwise distinct
        let before = finite_weights.len();
        finite_weights.dedup();
        assert_eq!(before, finite_weights.len(), "staircase weights collide");
        let bound = finite_weights.last().copied().unwrap_or(0);
        let numerator = report
            .numerator
            .as_ref()
            .expect("order-domain run computes the numerator");
        let gamma = SemigroupView::new(numerator, finite_weights, bound)?;
        Ok(SemigroupContext {
            variety,
            report,
            gamma,
        })
    }

    pub fn bounds(&self, k: usize) -> Result<(EvaluationCode, DistanceBounds)> {
        let code = self.variety.code(k)?;
        let bounds = distance_bounds(&code, &self.gamma, self.variety.ring.weights())?;
        Ok((code, bounds))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_problem;

    fn hermitian_spec() -> ProblemSpec {
        parse_problem(
            "field = GF(4)\nvars = x, y\nweights = 2, 3\norder = lex(x < y)\nideal = x^3 - y^2 - y\nq = 4\n",
        )
        .unwrap()
    }

    #[test]
    fn extend_to_iq_examples() {
        let spec = hermitian_spec();
        let iq = extend_to_iq(&spec.generators, &spec.ring, 4).unwrap();
        assert_eq!(iq.len(), 3);
        // char 2: x^4 - x = x^4 + x
        assert_eq!(iq[1].to_string(), "x^4 + x");
        assert_eq!(iq[2].to_string(), "y^4 + y");
        // q must match the field order
        assert!(matches!(
            extend_to_iq(&spec.generators, &spec.ring, 2),
            Err(Error::FieldMismatch)
        ));

        // n = 1 over GF(2): {f} gains x^2 - x
        let spec1 = parse_problem("field = GF(2)\nvars = x\nweights = 1\nideal = x\n").unwrap();
        let iq = extend_to_iq(&spec1.generators, &spec1.ring, 2).unwrap();
        assert_eq!(iq.len(), 2);
        assert_eq!(iq[1].to_string(), "x^2 + x");

        // empty ideal: just the field equations
        let spec0 = parse_problem("field = GF(2)\nvars = x\nweights = 1\n").unwrap();
        let iq = extend_to_iq(&spec0.generators, &spec0.ring, 2).unwrap();
        assert_eq!(iq.len(), 1);
    }

    #[test]
    fn hermitian_has_eight_points() {
        let spec = hermitian_spec();
        let iq = extend_to_iq(&spec.generators, &spec.ring, 4).unwrap();
        let pts = enumerate_points(&iq, &spec.ring, 1_000_000).unwrap();
        assert_eq!(pts.len(), 8);
        // every point satisfies the curve equation
        for p in pts.points() {
            for g in &spec.generators {
                assert!(g.eval(p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn degenerate_point_sets() {
        // I = (1): empty variety
        let spec = parse_problem("field = GF(2)\nvars = x\nweights = 1\nideal = 1\n").unwrap();
        let pts = enumerate_points(&spec.generators, &spec.ring, 100).unwrap();
        assert_eq!(pts.len(), 0);
        // I = (0) over GF(3), one variable: all 3 points
        let spec = parse_problem("field = GF(3)\nvars = x\nweights = 1\n").unwrap();
        let pts = enumerate_points(&spec.generators, &spec.ring, 100).unwrap();
        assert_eq!(pts.len(), 3);
        // budget enforcement
        assert!(matches!(
            enumerate_points(&spec.generators, &spec.ring, 2),
            Err(Error::ResourceExhausted(_))
        ));
    }

    #[test]
    fn variety_context_length_law_and_codes() {
        let spec = hermitian_spec();
        let ctx = VarietyContext::new(&spec, &Budgets::default()).unwrap();
        assert_eq!(ctx.points.len(), 8);
        assert_eq!(ctx.staircase.len(), 8);

        // k = 1 with the constant monomial: the all-ones row
        let c1 = ctx.code(1).unwrap();
        assert!(c1.matrix()[0].iter().all(|e| e.is_one()));

        // k = N: invertible square matrix, distance 1
        let cn = ctx.code(8).unwrap();
        assert_eq!(cn.dimension(), 8);
        assert_eq!(exact_min_distance(&cn, 1_000_000).unwrap(), Some(1));

        // k = 3: full-rank 3x8 generator matrix
        let c3 = ctx.code(3).unwrap();
        assert_eq!(c3.dimension(), 3);
        assert_eq!(c3.length(), 8);
    }

    #[test]
    fn rho_examples_and_multiplicativity() {
        let spec = hermitian_spec();
        let basis = buchberger(&spec.generators, 1000).unwrap();
        let zero = spec.ring.zero();
        assert_eq!(rho_evaluate(&zero, &basis).unwrap(), None);
        let x = spec.ring.var(0);
        let y = spec.ring.var(1);
        assert_eq!(rho_evaluate(&x, &basis).unwrap(), Some(2));
        assert_eq!(rho_evaluate(&y, &basis).unwrap(), Some(3));

        // multiplicativity on a few reduced samples
        let samples = [
            x.clone(),
            y.clone(),
            x.add(&y).unwrap(),
            x.mul(&x).unwrap().add(&spec.ring.one()).unwrap(),
        ];
        for f in &samples {
            for g in &samples {
                let pf = rho_evaluate(f, &basis).unwrap().unwrap();
                let pg = rho_evaluate(g, &basis).unwrap().unwrap();
                let pfg = rho_evaluate(&f.mul(g).unwrap(), &basis).unwrap().unwrap();
                assert_eq!(pfg, pf + pg);
            }
        }
    }

    #[test]
    fn semigroup_view_and_counting_functions() {
        let ctx = SemigroupContext::new(&hermitian_spec(), &Budgets::default()).unwrap();
        let gamma = &ctx.gamma;
        // finite weights of the 8 staircase monomials
        assert_eq!(gamma.finite_weights(), &[0, 2, 3, 4, 5, 6, 7, 9]);
        // membership agrees with the numerical semigroup <2,3>
        for v in 0..=gamma.bound() {
            assert_eq!(
                gamma.contains(v).unwrap(),
                crate::oracle::in_numerical_semigroup(&[2, 3], v),
                "membership at {v}"
            );
        }
        // closure under addition within the bound
        for a in 0..=gamma.bound() {
            for b in 0..=(gamma.bound() - a) {
                if gamma.contains(a).unwrap() && gamma.contains(b).unwrap() {
                    assert!(gamma.contains(a + b).unwrap());
                }
            }
        }
        // mu examples over <2,3>
        assert_eq!(mu(0, gamma).unwrap(), 1);
        assert_eq!(mu(1, gamma).unwrap(), 0);
        assert_eq!(mu(6, gamma).unwrap(), 5);
        // sigma: top weight reaches only itself; 0 reaches everything
        assert_eq!(sigma(9, gamma).unwrap(), 1);
        assert_eq!(sigma(0, gamma).unwrap(), 8);
        // the full golden table over the staircase weights
        let table: Vec<(u64, u64)> = gamma
            .finite_weights()
            .iter()
            .map(|&a| (a, sigma(a, gamma).unwrap()))
            .collect();
        assert_eq!(
            table,
            vec![
                (0, 8),
                (2, 6),
                (3, 5),
                (4, 4),
                (5, 3),
                (6, 2),
                (7, 2),
                (9, 1)
            ]
        );
        // bound violations are reported
        assert!(matches!(
            gamma.contains(100),
            Err(Error::BoundExceeded(100, _))
        ));
    }

    #[test]
    fn bounds_are_sound_for_a_few_dimensions() {
        let ctx = SemigroupContext::new(&hermitian_spec(), &Budgets::default()).unwrap();
        for k in [1usize, 3, 8] {
            let (code, bounds) = ctx.bounds(k).unwrap();
            let exact = exact_min_distance(&code, 1_000_000).unwrap().unwrap();
            assert!(
                bounds.primal <= exact,
                "k={k}: primal bound {} vs exact {exact}",
                bounds.primal
            );
            let dual = dual_code(&code, &ctx.variety.ring).unwrap();
            let dual_exact = exact_min_distance(&dual, 1_000_000).unwrap();
            if let (Some(b), Some(e)) = (bounds.dual, dual_exact) {
                assert!(b <= e, "k={k}: dual bound {b} vs exact {e}");
            }
        }
        // k=1 (the constant monomial): primal bound is the full length
        let (_, bounds) = ctx.bounds(1).unwrap();
        assert_eq!(bounds.primal, 8);
        // k=N: primal bound 1
        let (_, bounds) = ctx.bounds(8).unwrap();
        assert_eq!(bounds.primal, 1);
    }

    #[test]
    fn semigroup_machinery_refuses_non_order_domains() {
        // the standard-grading counterexample fails the check
        let spec = parse_problem("field = GF(2)\nvars = x, y\nweights = 1, 1\nideal = x^2; x*y\n")
            .unwrap();
        assert!(matches!(
            SemigroupContext::new(&spec, &Budgets::default()),
            Err(Error::NotOrderDomain)
        ));
    }

    #[test]
    fn dual_code_is_orthogonal() {
        let ctx = VarietyContext::new(&hermitian_spec(), &Budgets::default()).unwrap();
        let code = ctx.code(3).unwrap();
        let dual = dual_code(&code, &ctx.ring).unwrap();
        assert_eq!(dual.dimension(), 5);
        let field = ctx.ring.field();
        for row in code.matrix() {
            for drow in dual.matrix() {
                let mut acc = field.zero();
                for (a, b) in row.iter().zip(drow) {
                    acc = acc.add(&a.mul(b).unwrap()).unwrap();
                }
                assert!(acc.is_zero());
            }
        }
    }
}
