//! Evaluation codes and semigroup distance bounds
//!
//! This example demonstrates:
//! - Variety points of I_q and the evaluation isomorphism (length law)
//! - The weight function rho on the quotient ring
//! - The counting functions mu and sigma on the weight semigroup
//! - Primal/dual distance bounds against the exhaustive oracle, for every
//!   dimension of the Hermitian code over GF(4)
//!
//! Run with: cargo run --example code_bounds

use hqp::codes::{dual_code, exact_min_distance, mu, rho_evaluate, sigma, SemigroupContext};
use hqp::groebner::buchberger;
use hqp::io::{monomial_strings, parse_problem};
use hqp::Budgets;

fn main() {
    let spec = parse_problem(include_str!("../problems/hermitian.od")).unwrap();
    let budgets = Budgets::default();
    let ctx = SemigroupContext::new(&spec, &budgets).unwrap();

    println!("--- The Hermitian code over GF(4) ---\n");
    println!(
        "variety points: {} (staircase size {}, as the evaluation isomorphism demands)",
        ctx.variety.points.len(),
        ctx.variety.staircase.len()
    );
    println!(
        "staircase: {:?}",
        monomial_strings(&ctx.variety.staircase, &spec.ring)
    );
    println!("staircase weights: {:?}\n", ctx.gamma.finite_weights());

    // the weight function on the quotient
    let basis = buchberger(&spec.generators, budgets.pairs).unwrap();
    let x = spec.ring.var(0);
    let y = spec.ring.var(1);
    println!("rho(x) = {:?}", rho_evaluate(&x, &basis).unwrap());
    println!("rho(y) = {:?}", rho_evaluate(&y, &basis).unwrap());
    println!(
        "rho(x*y) = {:?}   (rho is additive on products)\n",
        rho_evaluate(&x.mul(&y).unwrap(), &basis).unwrap()
    );

    // the counting functions
    println!("mu over the semigroup generated by 2 and 3:");
    for lambda in [0u64, 1, 4, 6, 8] {
        println!("  mu({lambda}) = {}", mu(lambda, &ctx.gamma).unwrap());
    }
    println!("sigma over the staircase weights:");
    for &alpha in ctx.gamma.finite_weights() {
        print!("  sigma({alpha}) = {}", sigma(alpha, &ctx.gamma).unwrap());
    }
    println!("\n");

    // bounds vs truth for every dimension
    println!("k  length  primal>=  exact  dual>=  dual-exact");
    for k in 1..=ctx.variety.staircase.len() {
        let (code, bounds) = ctx.bounds(k).unwrap();
        let exact = exact_min_distance(&code, budgets.messages)
            .unwrap()
            .unwrap();
        let dual = dual_code(&code, &ctx.variety.ring).unwrap();
        let dual_exact = exact_min_distance(&dual, budgets.messages).unwrap();
        println!(
            "{k}  {:>6}  {:>8}  {:>5}  {:>6}  {}",
            code.length(),
            bounds.primal,
            exact,
            bounds.dual.map_or("-".into(), |b| b.to_string()),
            dual_exact.map_or("-".into(), |e| e.to_string()),
        );
        assert!(bounds.primal <= exact);
    }
    println!("\nevery bound sits at or below the exhaustive oracle value");
}
