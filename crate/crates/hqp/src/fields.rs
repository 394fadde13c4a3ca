//! Exact coefficient arithmetic: arbitrary-precision rationals, prime fields
//! 𝔽_p, and extension fields 𝔽_{p^k} presented by an irreducible modulus.
//!
//! A [`Field`] is a cheap-to-clone descriptor; a [`FieldElement`] carries a
//! handle to its field so that mixing elements of different fields is caught
//! as [`Error::FieldMismatch`] instead of producing garbage. All values are
//! immutable and all operations are pure.
//!
//! Extension-field elements are coefficient vectors over 𝔽_p reduced modulo
//! a fixed monic irreducible polynomial in the generator `a`. Irreducibility
//! is checked by trial division against every monic polynomial of degree at
//! most k/2, which is plenty for the small fields this crate targets.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// What kind of field a [`Field`] describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldKind {
    /// The rationals ℚ.
    Rational,
    /// 𝔽_p for a prime p.
    Prime { p: u64 },
    /// 𝔽_{p^k}, k ≥ 2, as 𝔽_p\[a\]/(modulus). The modulus is stored as
    /// coefficients in ascending degree, monic, of degree k.
    Extension { p: u64, k: u32, modulus: Vec<u64> },
}

#[derive(Debug, PartialEq, Eq)]
struct FieldRepr {
    kind: FieldKind,
}

/// A field descriptor. Clones share the underlying representation.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

/// The value payload of a field element.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Rat(BigRational),
    /// Coefficient vector of length k over 𝔽_p (k = 1 for prime fields),
    /// every entry in [0, p).
    Fin(Vec<u64>),
}

/// An immutable element of a specific [`Field`].
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Field,
    value: Value,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}

impl Eq for FieldElement {}

const MAX_PRIME: u64 = 1 << 20;

fn is_prime(p: u64) -> Result<bool> {
    if p > MAX_PRIME {
        return Err(Error::ResourceExhausted(format!(
            "characteristic {p} exceeds the supported range"
        )));
    }
    if p < 2 {
        return Ok(false);
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Ok(false);
        }
        d += 1;
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// polynomial helpers over F_p (coefficient vectors, ascending degree)
// ---------------------------------------------------------------------------

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(mut num: Vec<u64>, den: &[u64], p: u64) -> Vec<u64> {
    // den is monic
    let dd = den.len() - 1;
    while num.len() > dd {
        let lead = num[num.len() - 1];
        if lead != 0 {
            let shift = num.len() - 1 - dd;
            for (i, &c) in den.iter().enumerate() {
                let idx = shift + i;
                num[idx] = (num[idx] + p - lead * c % p) % p;
            }
        }
        num.pop();
        fp_trim(&mut num);
        if num.len() <= dd {
            break;
        }
    }
    num
}

fn fp_divides(den: &[u64], num: &[u64], p: u64) -> bool {
    fp_rem(num.to_vec(), den, p).is_empty()
}

/// True iff the monic polynomial (ascending coefficients) is irreducible
/// over 𝔽_p, by trial division against all monic polynomials of degree
/// 1 ..= deg/2.
fn fp_is_irreducible(modulus: &[u64], p: u64) -> Result<bool> {
    let deg = modulus.len() - 1;
    if deg == 0 {
        return Ok(false);
    }
    if deg == 1 {
        return Ok(true);
    }
    if modulus[0] == 0 {
        return Ok(false); // divisible by a
    }
    let half = deg / 2;
    if (p as u128).pow(half as u32) > 1_000_000 {
        return Err(Error::ResourceExhausted(format!(
            "irreducibility check over GF({p}) at degree {deg} is too large"
        )));
    }
    for d in 1..=half {
        // enumerate monic polynomials of degree d: free coefficients c_0..c_{d-1}
        let total = (p as u128).pow(d as u32);
        for idx in 0..total {
            let mut cand = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                cand.push((t % p as u128) as u64);
                t /= p as u128;
            }
            cand.push(1);
            if fp_divides(&cand, modulus, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn fp_format(coeffs: &[u64]) -> String {
    // ascending input; print descending, compact: "a^2+2*a+1"
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => "a".to_string(),
            (1, c) => format!("{c}*a"),
            (i, 1) => format!("a^{i}"),
            (i, c) => format!("{c}*a^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Built-in moduli so the common small fields work without user input.
/// Each entry is (p, k, modulus coefficients ascending). Every entry is
/// verified irreducible by the constructor (and by tests).
const DEFAULT_MODULI: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),             // a^2 + a + 1
    (2, 3, &[1, 1, 0, 1]),          // a^3 + a + 1
    (3, 2, &[1, 0, 1]),             // a^2 + 1
    (2, 4, &[1, 1, 0, 0, 1]),       // a^4 + a + 1
    (5, 2, &[1, 1, 1]),             // a^2 + a + 1
    (3, 3, &[1, 2, 0, 1]),          // a^3 + 2a + 1
    (7, 2, &[1, 0, 1]),             // a^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]), // a^6 + a + 1
    (3, 4, &[2, 1, 0, 0, 1]),       // a^4 + a + 2
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]), // a^6 + a + 2
];

impl Field {
    /// The field ℚ of arbitrary-precision rationals.
    pub fn rationals() -> Field {
        Field(Arc::new(FieldRepr {
            kind: FieldKind::Rational,
        }))
    }

    /// The prime field 𝔽_p.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p)? {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Prime { p },
        })))
    }

    /// 𝔽_{p^k} presented by a monic irreducible `modulus` over 𝔽_p, given as
    /// coefficients in ascending degree (degree = modulus.len() - 1 ≥ 1).
    ///
    /// A linear modulus yields the prime field itself. Reducible moduli are
    /// rejected.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p)? {
            return Err(Error::NotPrime(p));
        }
        let mut m: Vec<u64> = modulus.iter().map(|&c| c % p).collect();
        fp_trim(&mut m);
        if m.len() < 2 {
            return Err(Error::ReducibleModulus(
                "modulus must have degree at least 1".into(),
            ));
        }
        if m[m.len() - 1] != 1 {
            return Err(Error::ReducibleModulus("modulus must be monic".into()));
        }
        if m.len() == 2 {
            return Field::prime(p);
        }
        if !fp_is_irreducible(&m, p)? {
            return Err(Error::ReducibleModulus(fp_format(&m)));
        }
        let k = (m.len() - 1) as u32;
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Extension { p, k, modulus: m },
        })))
    }

    /// The field with `q` elements, using the built-in modulus table for
    /// proper prime powers.
    pub fn of_order(q: u64) -> Result<Field> {
        if is_prime(q)? {
            return Field::prime(q);
        }
        // factor q as p^k
        let mut p = 2u64;
        while p * p <= q {
            if q.is_multiple_of(p) {
                let mut k = 0u32;
                let mut t = q;
                while t.is_multiple_of(p) {
                    t /= p;
                    k += 1;
                }
                if t != 1 {
                    return Err(Error::NotPrime(q));
                }
                for &(tp, tk, m) in DEFAULT_MODULI {
                    if tp == p && tk == k {
                        return Field::extension(p, m);
                    }
                }
                return Err(Error::ReducibleModulus(format!(
                    "no built-in modulus for GF({p}^{k}); supply one explicitly"
                )));
            }
            p += 1;
        }
        Err(Error::NotPrime(q))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    /// Characteristic (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        match &self.0.kind {
            FieldKind::Rational => 0,
            FieldKind::Prime { p } => *p,
            FieldKind::Extension { p, .. } => *p,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(&self) -> Option<u64> {
        match &self.0.kind {
            FieldKind::Rational => None,
            FieldKind::Prime { p } => Some(*p),
            FieldKind::Extension { p, k, .. } => p.checked_pow(*k),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.0.kind, FieldKind::Rational)
    }

    fn ext_degree(&self) -> usize {
        match &self.0.kind {
            FieldKind::Rational => 0,
            FieldKind::Prime { .. } => 1,
            FieldKind::Extension { k, .. } => *k as usize,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match &self.0.kind {
            FieldKind::Rational => FieldElement {
                field: self.clone(),
                value: Value::Rat(BigRational::zero()),
            },
            _ => FieldElement {
                field: self.clone(),
                value: Value::Fin(vec![0; self.ext_degree()]),
            },
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    /// Canonical image of an integer.
    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    /// Canonical image of an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match &self.0.kind {
            FieldKind::Rational => FieldElement {
                field: self.clone(),
                value: Value::Rat(BigRational::from_integer(n.clone())),
            },
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let digit: u64 = r.try_into().expect("residue fits in u64");
                let mut v = vec![0; self.ext_degree()];
                v[0] = digit;
                FieldElement {
                    field: self.clone(),
                    value: Value::Fin(v),
                }
            }
        }
    }

    /// An exact rational c; fails outside ℚ unless the denominator is
    /// invertible, in which case num/den is taken in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.0.kind {
            FieldKind::Rational => Ok(FieldElement {
                field: self.clone(),
                value: Value::Rat(BigRational::new(num.clone(), den.clone())),
            }),
            _ => {
                let n = self.from_bigint(num);
                let d = self.from_bigint(den);
                n.div(&d)
            }
        }
    }

    /// The residue class of the generator `a` (extension fields only).
    pub fn generator(&self) -> Option<FieldElement> {
        match &self.0.kind {
            FieldKind::Extension { .. } => {
                let mut v = vec![0; self.ext_degree()];
                v[1] = 1;
                Some(FieldElement {
                    field: self.clone(),
                    value: Value::Fin(v),
                })
            }
            _ => None,
        }
    }

    /// The i-th element in the canonical enumeration (base-p digits of i,
    /// little-endian). Requires a finite field and i < order.
    pub fn element_from_index(&self, i: u64) -> FieldElement {
        let p = self.characteristic();
        assert!(p > 0, "element_from_index requires a finite field");
        let k = self.ext_degree();
        let mut v = vec![0; k];
        let mut t = i;
        for slot in v.iter_mut() {
            *slot = t % p;
            t /= p;
        }
        assert_eq!(t, 0, "index out of range");
        FieldElement {
            field: self.clone(),
            value: Value::Fin(v),
        }
    }

    /// All elements of a finite field, in canonical order.
    pub fn elements(&self) -> Vec<FieldElement> {
        let q = self.order().expect("elements() requires a finite field");
        (0..q).map(|i| self.element_from_index(i)).collect()
    }

    fn p_and_modulus(&self) -> (u64, Option<&[u64]>) {
        match &self.0.kind {
            FieldKind::Rational => unreachable!("finite-field op on Q"),
            FieldKind::Prime { p } => (*p, None),
            FieldKind::Extension { p, modulus, .. } => (*p, Some(modulus)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "GF({p})"),
            FieldKind::Extension { p, k, modulus } => {
                write!(f, "GF({p}^{k}; {})", fp_format(modulus))
            }
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Fin(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_one(),
            Value::Fin(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
        }
    }

    /// The rational value, if this element lives in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            Value::Fin(_) => None,
        }
    }

    /// Coefficient vector over 𝔽_p, if this element lives in a finite field.
    pub fn as_coeffs(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Fin(v) => Some(v),
            Value::Rat(_) => None,
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Fin(a), Value::Fin(b)) => {
                let (p, _) = self.field.p_and_modulus();
                Value::Fin(a.iter().zip(b).map(|(&x, &y)| (x + y) % p).collect())
            }
            _ => unreachable!(),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Fin(a) => {
                let (p, _) = self.field.p_and_modulus();
                Value::Fin(a.iter().map(|&x| (p - x) % p).collect())
            }
        };
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Fin(a), Value::Fin(b)) => {
                let (p, modulus) = self.field.p_and_modulus();
                let mut prod = vec![0u64; a.len() + b.len() - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut red = match modulus {
                    Some(m) => fp_rem(prod, m, p),
                    None => prod,
                };
                red.resize(a.len(), 0);
                Value::Fin(red)
            }
            _ => unreachable!(),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Fin(v) => {
                let (p, modulus) = self.field.p_and_modulus();
                match modulus {
                    None => Value::Fin(vec![mod_inv(v[0], p)]),
                    Some(m) => Value::Fin(ext_inv(v, m, p)),
                }
            }
        };
        Ok(FieldElement {
            field: self.field.clone(),
            value,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.mul(&other.inv()?)
    }

    /// Exponentiation by squaring; `pow(0)` is 1 even for 0.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime, a != 0
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

fn ext_inv(v: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    // extended Euclid in F_p[a]: find u with u*v = 1 mod modulus
    let k = v.len();
    let mut r0: Vec<u64> = modulus.to_vec();
    let mut r1: Vec<u64> = v.to_vec();
    fp_trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut quo = vec![0u64; rem.len().saturating_sub(r1.len()) + 1];
        let lead_inv = mod_inv(r1[r1.len() - 1], p);
        while rem.len() >= r1.len() && !rem.is_empty() {
            let shift = rem.len() - r1.len();
            let c = rem[rem.len() - 1] * lead_inv % p;
            quo[shift] = c;
            for (i, &rc) in r1.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p - c * rc % p) % p;
            }
            fp_trim(&mut rem);
        }
        // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - quo*s1)
        let mut t = s0.clone();
        let prod_len = quo.len() + s1.len();
        let mut prod = vec![0u64; prod_len.saturating_sub(1).max(1)];
        for (i, &qc) in quo.iter().enumerate() {
            if qc == 0 {
                continue;
            }
            for (j, &sc) in s1.iter().enumerate() {
                prod[i + j] = (prod[i + j] + qc * sc) % p;
            }
        }
        if t.len() < prod.len() {
            t.resize(prod.len(), 0);
        }
        for (i, &pc) in prod.iter().enumerate() {
            t[i] = (t[i] + p - pc) % p;
        }
        fp_trim(&mut t);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = t;
    }
    // r0 = gcd (a nonzero constant since modulus is irreducible and v != 0)
    debug_assert_eq!(r0.len(), 1);
    let scale = mod_inv(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&c| c * scale % p).collect();
    out.resize(k, 0);
    out
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Fin(v) => write!(f, "{}", fp_format(v)),
        }
    }
}
