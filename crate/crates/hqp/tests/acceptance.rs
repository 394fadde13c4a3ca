//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured facts. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hqp::codes::{dual_code, exact_min_distance, SemigroupContext};
use hqp::groebner::MonomialIdeal;
use hqp::hilbert::{
    hilbert_numerator, hr_values, quasi_poly_r, quotient_h_values, quotient_quasi_polynomial,
};
use hqp::io::parse_problem;
use hqp::oracle;
use hqp::orderdomain::{check_c2, check_order_domain};
use hqp::poly::{Monomial, TieBreak, WeightVector, WeightedOrder};
use hqp::Budgets;

const HERMITIAN: &str = include_str!("../problems/hermitian.od");
const MAXIMAL_Y16: &str = include_str!("../problems/maximal_y16.od");
const GK: &str = include_str!("../problems/gk.od");
const REE: &str = include_str!("../problems/ree.od");

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE {n} PASS: {what}");
}

fn numerator_pairs(h: &hqp::hilbert::HilbertNumerator) -> Vec<(u64, i64)> {
    h.terms()
        .map(|(e, c)| (e, i64::try_from(c).unwrap()))
        .collect()
}

fn wv(entries: &[u64]) -> WeightVector {
    WeightVector::new(entries.to_vec()).unwrap()
}

#[test]
fn criterion_1_hermitian() {
    let started = Instant::now();
    let spec = parse_problem(HERMITIAN).unwrap();
    let report = check_order_domain(&spec, &Budgets::default()).unwrap();

    assert!(report.is_order_domain, "verdict must be TRUE");
    let h = report.numerator.as_ref().unwrap();
    assert_eq!(
        numerator_pairs(h),
        vec![(0, 1), (6, -1)],
        "numerator 1 - t^6"
    );
    assert_eq!(report.ri, Some(2));
    assert_eq!(report.d, 6);
    let quasi = report.quasi.as_ref().unwrap();
    assert_eq!(quasi.period(), 6);
    let one = BigRational::one();
    for k in 0..6u64 {
        assert_eq!(
            quasi.pieces()[k as usize].eval_u64(k + 600),
            one,
            "piece {k} is 1"
        );
    }
    // H(1) = 0 (1 is a gap of the weight semigroup)
    let hr = hr_values(spec.ring.weights(), 1).unwrap();
    let hq = quotient_h_values(h, &hr, 1).unwrap();
    assert_eq!(hq[1], BigInt::from(0));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(1, &format!(
        "hermitian: numerator 1-t^6, ri=2, d=6, six pieces == 1, H(1)=0, verdict TRUE in {elapsed:?}"
    ));
}

#[test]
fn criterion_2_maximal_y16() {
    let started = Instant::now();
    let spec = parse_problem(MAXIMAL_Y16).unwrap();
    let report = check_order_domain(&spec, &Budgets::default()).unwrap();

    assert!(report.is_order_domain, "verdict must be TRUE");
    assert_eq!(
        report.initial_ideal.gens(),
        &[Monomial::new(vec![0, 16])],
        "initial ideal (y^16)"
    );
    let h = report.numerator.as_ref().unwrap();
    assert_eq!(
        numerator_pairs(h),
        vec![(0, 1), (112, -1)],
        "numerator 1 - t^112"
    );
    assert_eq!(report.ri, Some(90));
    assert_eq!(report.d, 112);
    let quasi = report.quasi.as_ref().unwrap();
    assert_eq!(quasi.period(), 112);
    assert!(quasi.all_pieces_zero_or_one());
    assert!(
        quasi.pieces().iter().all(|p| !p.is_zero()),
        "all 112 pieces are 1"
    );
    // the missing-variable shortcut fires: x is absent from (y^16)
    assert_eq!(report.shortcut_variable, Some(0));
    assert_eq!(report.prefix_scanned, Some(false));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(2, &format!(
        "maximal y16: initial ideal (y^16), numerator 1-t^112, ri=90, d=112, 112 pieces == 1, shortcut fired, verdict TRUE in {elapsed:?}"
    ));
}

#[test]
fn criterion_3_gk() {
    let started = Instant::now();
    let spec = parse_problem(GK).unwrap();
    let report = check_order_domain(&spec, &Budgets::default()).unwrap();

    assert!(report.is_order_domain, "verdict must be TRUE");
    let mut init = report.initial_ideal.gens().to_vec();
    init.sort();
    assert_eq!(
        init,
        vec![Monomial::new(vec![0, 0, 7]), Monomial::new(vec![0, 4, 0])],
        "initial ideal (v^4, w^7)"
    );
    assert_eq!(report.d, 756);
    let quasi = report.quasi.as_ref().unwrap();
    assert_eq!(quasi.period(), 756);
    assert!(quasi.all_pieces_zero_or_one());
    assert!(
        quasi.pieces().iter().all(|p| !p.is_zero()),
        "all 756 pieces are 1"
    );
    // verdict obtained via the shortcut: u is absent from the initial ideal
    assert_eq!(report.shortcut_variable, Some(0));
    assert_eq!(report.prefix_scanned, Some(false));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    pass(3, &format!(
        "gk: initial ideal (v^4, w^7), d=756, 756 pieces == 1, shortcut fired, verdict TRUE in {elapsed:?}"
    ));
}

/// The printed generator pair of this curve is not a Groebner basis under
/// the weighted order (its first S-polynomial has an irreducible normal
/// form), so the end-to-end pipeline sees a six-generator initial ideal.
/// The criterion's quasi-polynomial data belongs to the two-generator
/// monomial ideal (x^4, x*y^3); it is checked here through the direct
/// monomial-ideal route. Both routes agree on the verdict FALSE and on the
/// first collision: y^2 and x*z share weight 8.
#[test]
fn criterion_4_ree() {
    let started = Instant::now();
    let spec = parse_problem(REE).unwrap();
    let report = check_order_domain(&spec, &Budgets::default()).unwrap();

    assert!(!report.is_order_domain, "verdict must be FALSE");
    assert_eq!(report.d, 60);
    let witness = report
        .c2
        .as_ref()
        .and_then(|c| c.witness.as_ref())
        .expect("a concrete witness pair");
    assert_eq!(witness.monomials_raw.len(), 2);
    assert_ne!(witness.monomials_raw[0], witness.monomials_raw[1]);
    let w = spec.ring.weights();
    for m in &witness.monomials_raw {
        assert_eq!(m.weight(w), witness.weight, "witness weights agree");
        assert!(
            !report.initial_ideal.contains(m),
            "witness monomials sit in the staircase"
        );
    }
    assert_eq!(witness.weight, 8);
    assert_eq!(witness.monomials, vec!["y^2", "x*z"]);

    // the expected quasi-polynomial shape, on the monomial ideal (x^4, x*y^3)
    let m = MonomialIdeal::new(
        3,
        vec![Monomial::new(vec![4, 0, 0]), Monomial::new(vec![1, 3, 0])],
    );
    let w345 = wv(&[3, 4, 5]);
    let h = hilbert_numerator(&m, &w345).unwrap();
    assert_eq!(
        numerator_pairs(&h),
        vec![(0, 1), (12, -1), (15, -1), (24, 1)],
        "numerator 1 - t^12 - t^15 + t^24"
    );
    let quasi = quotient_quasi_polynomial(&h, 1_000_000).unwrap();
    assert_eq!(quasi.period(), 60, "60 pieces");
    assert!(
        quasi.pieces().iter().all(|p| p.degree() == Some(1)),
        "every piece has degree 1"
    );
    // the 60 degree-1 pieces trace out 20 distinct lines (each serving
    // three residue classes)
    assert_eq!(quasi.distinct_pieces().len(), 20);
    // and the direct c2 check on that ideal rejects as well
    let ord = WeightedOrder::new(w345, TieBreak::Lex, vec![0, 1, 2]).unwrap();
    let analysis = check_c2(&m, &ord, true, &Budgets::default()).unwrap();
    assert!(!analysis.result.holds);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    pass(4, &format!(
        "ree: verdict FALSE with witness y^2 ~ x*z at weight 8; (x^4, x*y^3) gives 60 degree-1 pieces (20 distinct) in {elapsed:?}"
    ));
}

#[test]
fn criterion_5_prefix_scan_guard() {
    // constant quasi-polynomial piece 1, but H(1) = 2: only the scan below
    // the regularity index catches the violation
    let m = MonomialIdeal::new(
        2,
        vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])],
    );
    let ord = WeightedOrder::with_default_precedence(wv(&[1, 1]), TieBreak::Lex);
    let analysis = check_c2(&m, &ord, false, &Budgets::default()).unwrap();

    let quasi = &analysis.quasi;
    assert_eq!(quasi.period(), 1);
    assert!(
        quasi.all_pieces_zero_or_one() && !quasi.pieces()[0].is_zero(),
        "the single piece is the constant 1"
    );
    let h = &analysis.numerator;
    let hr = hr_values(&wv(&[1, 1]), 1).unwrap();
    let hq = quotient_h_values(h, &hr, 1).unwrap();
    assert_eq!(hq[1], BigInt::from(2), "H(1) = 2");
    assert!(!analysis.result.holds, "checker returns FALSE");
    assert!(analysis.prefix_scanned);
    let witness = analysis.result.witness.unwrap();
    assert_eq!(witness.weight, 1);
    assert!(witness.failing_piece.is_none(), "caught by the prefix scan");

    pass(
        5,
        "prefix-scan guard: piece == 1 but H(1) = 2 rejected below the regularity index",
    );
}

#[test]
fn criterion_6_oracle_suite() {
    // 200 random weight/argument pairs: the recurrence equals brute-force
    // partition counting exactly
    let mut rng = StdRng::seed_from_u64(0x6f7261636c65);
    for i in 0..200 {
        let n = rng.gen_range(1..=4usize);
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=12)).collect();
        let k = rng.gen_range(0..=120u64);
        let w = wv(&weights);
        let hr = hr_values(&w, k).unwrap();
        let expected = oracle::count_partitions(&weights, k);
        assert_eq!(
            hr[k as usize], expected,
            "instance {i}: W={weights:?} k={k}"
        );
    }

    // 50 random monomial ideals: the c2 verdict equals the brute-force
    // staircase-collision predicate
    let mut rng = StdRng::seed_from_u64(0x73746169726373);
    for i in 0..50 {
        let n = rng.gen_range(1..=3usize);
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=6)).collect();
        let n_gens = rng.gen_range(0..=4usize);
        let gens: Vec<Monomial> = (0..n_gens)
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=5u32)).collect::<Vec<_>>()))
            .filter(|m| !m.is_one())
            .collect();
        let m = MonomialIdeal::new(n, gens);
        let ord = WeightedOrder::with_default_precedence(wv(&weights), TieBreak::Lex);
        let analysis = check_c2(&m, &ord, false, &Budgets::default()).unwrap();
        let bound = analysis.ri + 2 * analysis.d;
        let brute = oracle::no_weight_collision_up_to(m.gens(), ord.weights(), bound);
        assert_eq!(
            analysis.result.holds,
            brute,
            "instance {i}: ideal {:?} W={weights:?}",
            m.gens()
        );
    }

    pass(
        6,
        "200 partition-count instances and 50 staircase-collision instances agree with brute force",
    );
}

#[test]
fn criterion_7_leading_coefficient_law() {
    let mut rng = StdRng::seed_from_u64(0x6c656164);
    let mut checked = 0;
    while checked < 20 {
        let n = rng.gen_range(1..=5usize);
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=10)).collect();
        let w = wv(&weights);
        if w.gcd() != 1 {
            continue;
        }
        // keep the period desk-sized so twenty instances stay fast
        let d = w.period();
        if d > 180 {
            continue;
        }
        checked += 1;
        let d = d as u64;
        let p = quasi_poly_r(&w).unwrap();
        assert_eq!(p.period(), d);
        let fact: BigInt = (1..n as u64).map(BigInt::from).product();
        let denom: BigInt = weights.iter().map(|&x| BigInt::from(x)).product::<BigInt>() * fact;
        let lead = BigRational::new(BigInt::one(), denom);
        for piece in p.pieces() {
            assert_eq!(piece.degree(), Some(n - 1), "degree n-1 for W={weights:?}");
            assert_eq!(
                piece.leading_coeff().unwrap(),
                &lead,
                "leading coefficient for W={weights:?}"
            );
        }
        // exact agreement with the Hilbert function out to 3d
        let hr = hr_values(&w, 3 * d).unwrap();
        for k in 0..=3 * d {
            assert_eq!(
                p.eval(k),
                BigRational::from_integer(hr[k as usize].clone()),
                "P(k) = H(k) at k={k} for W={weights:?}"
            );
        }
    }
    pass(7, "20 random gcd-1 weight vectors: degree n-1, leading coefficient 1/((n-1)! prod w), P(k) = H(k) up to 3d");
}

#[test]
fn criterion_8_performance_reproduction() {
    // five variables: the full piece table in under five seconds
    let started = Instant::now();
    let w = wv(&[2, 2, 6, 9, 12]);
    assert_eq!(w.gcd(), 1);
    let p = quasi_poly_r(&w).unwrap();
    assert_eq!(p.period(), 36);
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");

    // six variables: all 18 pieces exactly right, overflow impossible by
    // construction, verified against the Hilbert function
    let w = wv(&[1, 1, 1, 2, 2, 9]);
    let p = quasi_poly_r(&w).unwrap();
    assert_eq!(p.period(), 18);
    let d = p.period();
    let hr = hr_values(&w, 3 * d).unwrap();
    for k in 0..=3 * d {
        assert_eq!(
            p.eval(k),
            BigRational::from_integer(hr[k as usize].clone()),
            "piece-vs-H at k={k}"
        );
    }

    pass(8, &format!(
        "W=[2,2,6,9,12] solved in {elapsed:?} (< 5 s); W=[1,1,1,2,2,9] gives 18 pieces agreeing with H"
    ));
}

#[test]
fn criterion_9_hermitian_code_bounds() {
    let spec = parse_problem(HERMITIAN).unwrap();
    let ctx = SemigroupContext::new(&spec, &Budgets::default()).unwrap();
    assert_eq!(ctx.variety.points.len(), 8, "8 variety points");
    assert_eq!(ctx.variety.staircase.len(), 8, "staircase size 8");

    for k in 1..=8usize {
        let (code, bounds) = ctx.bounds(k).unwrap();
        let exact = exact_min_distance(&code, 1_000_000).unwrap().unwrap();
        assert!(
            bounds.primal <= exact,
            "k={k}: primal bound {} exceeds exact distance {exact}",
            bounds.primal
        );
        let dual = dual_code(&code, &ctx.variety.ring).unwrap();
        let dual_exact = exact_min_distance(&dual, 1_000_000).unwrap();
        match (bounds.dual, dual_exact) {
            (Some(b), Some(e)) => assert!(b <= e, "k={k}: dual bound {b} exceeds exact {e}"),
            (Some(_), None) => {} // zero dual code: bound vacuously sound
            (None, _) => panic!("k={k}: dual scan range unexpectedly empty"),
        }
    }

    pass(9, "hermitian over GF(4): 8 points, staircase 8, primal/dual bounds sound for every k in 1..=8");
}
