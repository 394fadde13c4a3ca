//! Normal forms, Buchberger's algorithm under the weighted order, initial
//! ideals, and staircase enumeration.
//!
//! The ordering is carried by the polynomials' ring, so these functions take
//! no separate order argument. Everything here is deterministic: divisors
//! are tried in basis order, the reducible monomial chosen is always the
//! largest, and S-pairs are processed by minimal lcm weight with a
//! lexicographic tie-break on the lcm exponent vector.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, WeightVector};

/// A reduced Groebner basis: monic elements, no leading monomial divides
/// another, all tails fully reduced; sorted ascending by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// A monomial ideal by its minimal generators (an antichain under
/// divisibility), kept sorted by exponent vector for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize and sort the given generators.
    pub fn new(n_vars: usize, gens: Vec<Monomial>) -> Self {
        let mut gens: Vec<Monomial> = {
            let mut g = gens;
            g.sort();
            g.dedup();
            g
        };
        gens.retain({
            let all = gens.clone();
            move |m| !all.iter().any(|g| g != m && g.divides(m))
        });
        MonomialIdeal { n_vars, gens }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    /// True iff `m` lies in the ideal, i.e. some generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

fn check_same_ring(polys: &[&Polynomial]) -> Result<()> {
    if let Some((first, rest)) = polys.split_first() {
        for p in rest {
            if p.ring() != first.ring() {
                return Err(Error::RingMismatch);
            }
        }
    }
    Ok(())
}

/// Remainder of `f` on division by `basis`.
///
/// Deterministic: the largest reducible monomial is reduced first, trying
/// divisors in basis order. No monomial of the result is divisible by any
/// basis leading monomial, and `f - result` lies in the ideal generated by
/// the basis. Zero basis elements are skipped.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    check_same_ring(&std::iter::once(f).chain(basis).collect::<Vec<_>>())?;
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut r = f.clone();
    'outer: loop {
        for (m, c) in r.terms() {
            for g in &divisors {
                let glm = g.leading_monomial().expect("nonzero");
                if let Some(q) = m.try_div(glm) {
                    let factor = c.div(g.leading_coeff().expect("nonzero"))?;
                    r = r.sub_scaled(&factor, &q, g)?;
                    continue 'outer;
                }
            }
        }
        return Ok(r);
    }
}

/// The S-polynomial of `f` and `g`.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fl, gl) = (
        f.leading_monomial().expect("nonzero"),
        g.leading_monomial().expect("nonzero"),
    );
    let l = fl.lcm(gl);
    let fq = l.try_div(fl).expect("lcm divisible");
    let gq = l.try_div(gl).expect("lcm divisible");
    let zero = f.ring().zero();
    let a = zero.sub_scaled(&f.leading_coeff().unwrap().inv()?.neg(), &fq, f)?;
    let b = zero.sub_scaled(&g.leading_coeff().unwrap().inv()?.neg(), &gq, g)?;
    a.sub(&b)
}

/// Buchberger's algorithm: the reduced Groebner basis of the ideal spanned
/// by `gens` under the ring's weighted order.
///
/// S-pairs with coprime leading monomials are skipped. The pair queue is
/// processed by minimal lcm weight first, ties broken by the lcm exponent
/// vector, so runs are reproducible. `pair_budget` bounds the number of
/// S-pairs considered.
pub fn buchberger(gens: &[Polynomial], pair_budget: usize) -> Result<GroebnerBasis> {
    check_same_ring(&gens.iter().collect::<Vec<_>>())?;
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic()?);
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis { polys: vec![] });
    }
    let ring = basis[0].ring().clone();
    let weights = ring.weights().clone();

    // queue keyed by (w(lcm), lcm exponents, i, j)
    let mut queue: BTreeSet<(u64, Vec<u32>, usize, usize)> = BTreeSet::new();
    let push_pairs =
        |queue: &mut BTreeSet<(u64, Vec<u32>, usize, usize)>, basis: &[Polynomial], j: usize| {
            let lj = basis[j].leading_monomial().expect("nonzero");
            for (i, gi) in basis.iter().enumerate().take(j) {
                let li = gi.leading_monomial().expect("nonzero");
                let l = li.lcm(lj);
                queue.insert((l.weight(&weights), l.exps().to_vec(), i, j));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }

    let mut processed = 0usize;
    while let Some(entry) = queue.iter().next().cloned() {
        queue.remove(&entry);
        let (_, _, i, j) = entry;
        processed += 1;
        if processed > pair_budget {
            return Err(Error::ResourceExhausted(format!(
                "S-pair budget of {pair_budget} exhausted"
            )));
        }
        let li = basis[i].leading_monomial().expect("nonzero");
        let lj = basis[j].leading_monomial().expect("nonzero");
        // coprime criterion
        if li
            .exps()
            .iter()
            .zip(lj.exps())
            .all(|(&a, &b)| a == 0 || b == 0)
        {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = normal_form(&s, &basis)?;
        if !r.is_zero() {
            basis.push(r.monic()?);
            push_pairs(&mut queue, &basis, basis.len() - 1);
        }
    }

    // minimalize: sorted ascending by lm, keep only those whose lm is not
    // divisible by an earlier kept lm
    basis.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }

    // inter-reduce tails (leading monomials are an antichain, so they are
    // untouched and one pass reaches the reduced basis)
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        minimal[i] = normal_form(&minimal[i], &others)?.monic()?;
    }

    Ok(GroebnerBasis { polys: minimal })
}

/// Independent verification of the Buchberger postcondition: every
/// S-polynomial of the basis reduces to zero against it.
pub fn is_groebner_basis(basis: &GroebnerBasis) -> Result<bool> {
    let polys = basis.polys();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            let s = s_polynomial(&polys[i], &polys[j])?;
            if !normal_form(&s, polys)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The initial ideal: minimal generators drawn from the basis leading
/// monomials.
pub fn initial_ideal(basis: &GroebnerBasis) -> MonomialIdeal {
    let n = basis.polys.first().map(|p| p.ring().n_vars()).unwrap_or(0);
    MonomialIdeal::new(
        n,
        basis
            .polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero").clone())
            .collect(),
    )
}

/// True iff the staircase of `m` is finite, i.e. every variable has a pure
/// power among the generators.
pub fn staircase_is_finite(m: &MonomialIdeal) -> bool {
    if m.contains_one() {
        return true;
    }
    (0..m.n_vars()).all(|i| {
        m.gens()
            .iter()
            .any(|g| g.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
    })
}

/// All staircase monomials (those not divisible by any generator), sorted
/// ascending under `order`'s comparison on the ideal's variable count.
pub fn enumerate_staircase(
    m: &MonomialIdeal,
    order: &crate::poly::WeightedOrder,
) -> Result<Vec<Monomial>> {
    if !staircase_is_finite(m) {
        return Err(Error::InfiniteStaircase);
    }
    let n = m.n_vars();
    // bounding box from the minimal pure powers
    let mut bounds = vec![0u32; n];
    for (i, bound) in bounds.iter_mut().enumerate() {
        let mut best: Option<u32> = None;
        for g in m.gens() {
            if g.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0) {
                let e = g.exps()[i];
                best = Some(best.map_or(e, |b| b.min(e)));
            }
        }
        *bound = best.expect("finite staircase has a pure power per variable");
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let cand = Monomial::new(cur.clone());
        if !m.contains(&cand) {
            out.push(cand);
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| order.cmp(a, b));
                return Ok(out);
            }
            if bounds[i] == 0 {
                i += 1;
                continue;
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// All staircase monomials of weight exactly `k`, sorted ascending under
/// `order`. Bounded exponent search: the i-th exponent is at most k/wᵢ.
pub fn staircase_monomials_of_weight(
    m: &MonomialIdeal,
    weights: &WeightVector,
    order: &crate::poly::WeightedOrder,
    k: u64,
) -> Vec<Monomial> {
    let n = m.n_vars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        m: &MonomialIdeal,
        weights: &[u64],
        i: usize,
        rem: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i + 1 == cur.len() {
            if rem.is_multiple_of(weights[i]) {
                let e = rem / weights[i];
                if let Ok(e32) = u32::try_from(e) {
                    cur[i] = e32;
                    let cand = Monomial::new(cur.clone());
                    if !m.contains(&cand) {
                        out.push(cand);
                    }
                    cur[i] = 0;
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
            rec(m, weights, i + 1, rem - used, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    if n == 0 {
        return out;
    }
    rec(m, weights.entries(), 0, k, &mut cur, &mut out);
    out.sort_by(|a, b| order.cmp(a, b));
    out
}
