//! The full order-domain decision on the bundled curves
//!
//! This example demonstrates:
//! - The end-to-end pipeline: basis, condition C1, initial ideal, Hilbert
//!   data, missing-variable shortcut, prefix scan, piece check
//! - Positive verdicts (Hermitian, a maximal plane curve, the GK curve)
//! - A negative verdict with a concrete equal-weight witness pair
//!
//! Run with: cargo run --example order_domain_check

use hqp::io::parse_problem;
use hqp::orderdomain::check_order_domain;
use hqp::Budgets;

const CASES: &[(&str, &str)] = &[
    ("hermitian", include_str!("../problems/hermitian.od")),
    ("maximal_y16", include_str!("../problems/maximal_y16.od")),
    ("gk", include_str!("../problems/gk.od")),
    ("ree", include_str!("../problems/ree.od")),
    ("remark", include_str!("../problems/remark.od")),
];

fn main() {
    let budgets = Budgets::default();
    for (name, source) in CASES {
        let spec = parse_problem(source).unwrap();
        let started = std::time::Instant::now();
        let report = check_order_domain(&spec, &budgets).unwrap();
        let elapsed = started.elapsed();

        println!("=== {name} ===");
        println!("  ring: {}", spec.ring);
        println!("  weights: {:?}", spec.ring.weights().entries());
        println!("  order domain: {}", report.is_order_domain);
        println!(
            "  d = {}, ri = {:?}, k1 = {:?}, shortcut: {}",
            report.d,
            report.ri,
            report.k1,
            report
                .shortcut_variable
                .map(|i| spec.ring.vars()[i].clone())
                .unwrap_or_else(|| "none".into()),
        );
        if !report.c1.holds {
            let v = report.c1.violation.as_ref().unwrap();
            println!(
                "  c1 violated by {} (top monomials {:?})",
                v.generator, v.top_weight_monomials
            );
        }
        if let Some(w) = report.c2.as_ref().and_then(|c| c.witness.as_ref()) {
            println!(
                "  c2 witness: {} and {} both have weight {}",
                w.monomials[0], w.monomials[1], w.weight
            );
        }
        if let Some(q) = &report.quasi {
            let distinct = q.distinct_pieces();
            println!(
                "  quasi-polynomial: {} pieces, {} distinct",
                q.period(),
                distinct.len()
            );
        }
        println!("  ({} ms)\n", elapsed.as_millis());
    }
}
