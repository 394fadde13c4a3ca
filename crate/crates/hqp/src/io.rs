//! Problem-description parsing and machine-readable reports.
//!
//! Problem files are line-oriented `key = value` documents:
//!
//! ```text
//! # Hermitian curve, q = 2
//! field   = GF(4)
//! vars    = x, y
//! weights = 2, 3
//! order   = lex(x < y)
//! ideal   = x^3 - y^2 - y
//! q       = 4
//! code_k  = 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. `field` accepts
//! `Q`, `GF(p)`, `GF(p^k)` (built-in modulus table), and
//! `GF(p^k; m(a))` with an explicit modulus in the generator `a`.
//! `order` is `lex` or `degrevlex`, optionally with a precedence chain such
//! as `lex(x < y)` or `lex(w > v > u)`; without a chain the first declared
//! variable is most significant. `ideal` is a semicolon-separated list of
//! polynomial expressions.
//!
//! The expression grammar (no implicit multiplication):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' nat)? | '(' expr ')'
//! coeff  := integer | integer '/' integer
//! ```
//!
//! Over an extension field the symbol `a` denotes the field generator, e.g.
//! `(a+1)*x^2`.
//!
//! All reports serialize deterministically: struct key order is fixed,
//! rationals print as `p/q` strings, and no floats appear anywhere.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Location, Result};
use crate::fields::{Field, FieldKind};
use crate::poly::{Monomial, PolyRing, Polynomial, TieBreak, WeightVector, WeightedOrder};

// ---------------------------------------------------------------------------
// tokenizer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    loc: Location,
}

fn tokenize(src: &str, start: Location) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = start.line;
    let mut col = start.col;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let loc = Location { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '+' | '-' | '*' | '^' | '/' | '(' | ')' => {
                chars.next();
                col += 1;
                out.push(Token {
                    tok: match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        '/' => Tok::Slash,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    },
                    loc,
                });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    loc,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Ident(s),
                    loc,
                });
            }
            other => {
                return Err(Error::SyntaxError {
                    location: loc,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// expression parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a PolyRing,
    end: Location,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn loc(&self) -> Location {
        self.tokens.get(self.pos).map(|t| t.loc).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let loc = self.loc();
        match self.next() {
            Some(t) if t.tok == tok => Ok(()),
            _ => Err(Error::SyntaxError {
                location: loc,
                message: format!("expected {what}"),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.parse_term()?)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.parse_term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            acc = acc.mul(&self.parse_factor()?)?;
        }
        Ok(acc)
    }

    fn parse_nat(&mut self) -> Result<u32> {
        let loc = self.loc();
        match self.next() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => u32::try_from(&n).map_err(|_| Error::SyntaxError {
                location: loc,
                message: "exponent out of range".into(),
            }),
            _ => Err(Error::SyntaxError {
                location: loc,
                message: "expected exponent".into(),
            }),
        }
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        let loc = self.loc();
        match self.next() {
            Some(Token {
                tok: Tok::Int(n), ..
            }) => {
                // integer or integer/integer
                if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let dloc = self.loc();
                    match self.next() {
                        Some(Token {
                            tok: Tok::Int(d), ..
                        }) => {
                            let c = self.ring.field().from_ratio(&n, &d).map_err(|e| match e {
                                Error::DivisionByZero => Error::CoefficientNotInField {
                                    location: dloc,
                                    message: format!(
                                        "{n}/{d} has no meaning in {}",
                                        self.ring.field()
                                    ),
                                },
                                other => other,
                            })?;
                            Ok(self.ring.constant(c))
                        }
                        _ => Err(Error::SyntaxError {
                            location: dloc,
                            message: "expected denominator".into(),
                        }),
                    }
                } else {
                    Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
                }
            }
            Some(Token {
                tok: Tok::Ident(name),
                ..
            }) => {
                let base = if let Some(i) = self.ring.var_index(&name) {
                    self.ring.var(i)
                } else if name == "a" {
                    match self.ring.field().generator() {
                        Some(g) => self.ring.constant(g),
                        None => {
                            return Err(Error::UnknownVariable {
                                name,
                                location: loc,
                            })
                        }
                    }
                } else {
                    return Err(Error::UnknownVariable {
                        name,
                        location: loc,
                    });
                };
                if self.peek() == Some(&Tok::Caret) {
                    self.next();
                    let mut e = self.parse_nat()?;
                    let mut acc = self.ring.one();
                    let mut b = base;
                    while e > 0 {
                        if e & 1 == 1 {
                            acc = acc.mul(&b)?;
                        }
                        e >>= 1;
                        if e > 0 {
                            b = b.mul(&b)?;
                        }
                    }
                    Ok(acc)
                } else {
                    Ok(base)
                }
            }
            Some(Token {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            _ => Err(Error::SyntaxError {
                location: loc,
                message: "expected coefficient, variable, or parenthesized expression".into(),
            }),
        }
    }
}

fn end_location(src: &str, start: Location) -> Location {
    let mut line = start.line;
    let mut col = start.col;
    for c in src.chars() {
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    Location { line, col }
}

fn parse_polynomial_at(src: &str, ring: &PolyRing, start: Location) -> Result<Polynomial> {
    let tokens = tokenize(src, start)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        end: end_location(src, start),
    };
    let poly = p.parse_expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::SyntaxError {
            location: p.loc(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(poly)
}

/// Parse a polynomial expression in the given ring.
pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    parse_polynomial_at(src, ring, Location { line: 1, col: 1 })
}

// ---------------------------------------------------------------------------
// field descriptor strings
// ---------------------------------------------------------------------------

/// Parse `Q`, `GF(p)`, `GF(p^k)`, or `GF(p^k; m(a))`.
pub fn parse_field(spec: &str) -> Result<Field> {
    let s = spec.trim();
    if s == "Q" {
        return Ok(Field::rationals());
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::SyntaxError {
            location: Location { line: 1, col: 1 },
            message: format!(
                "unrecognized field `{s}` (expected Q, GF(p), GF(p^k), or GF(p^k; m(a)))"
            ),
        })?;
    let (order_part, modulus_part) = match inner.split_once(';') {
        Some((o, m)) => (o.trim(), Some(m.trim())),
        None => (inner.trim(), None),
    };
    let (p, k) = match order_part.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad_num(order_part))?;
            let k: u32 = k.trim().parse().map_err(|_| bad_num(order_part))?;
            (p, k)
        }
        None => {
            let p: u64 = order_part.parse().map_err(|_| bad_num(order_part))?;
            (p, 1)
        }
    };
    match modulus_part {
        None => {
            if k == 1 {
                // `GF(4)` style: q may itself be a prime power
                Field::of_order(p)
            } else {
                let q = p.checked_pow(k).ok_or_else(|| {
                    Error::ResourceExhausted(format!("field order {p}^{k} overflows"))
                })?;
                Field::of_order(q)
            }
        }
        Some(m) => {
            let coeffs = parse_modulus(m, p)?;
            let field = Field::extension(p, &coeffs)?;
            if let FieldKind::Extension { k: got, .. } = field.kind() {
                if *got != k {
                    return Err(Error::SyntaxError {
                        location: Location { line: 1, col: 1 },
                        message: format!("modulus degree {got} does not match GF({p}^{k})"),
                    });
                }
            }
            Ok(field)
        }
    }
}

fn bad_num(s: &str) -> Error {
    Error::SyntaxError {
        location: Location { line: 1, col: 1 },
        message: format!("invalid number in field spec `{s}`"),
    }
}

/// Parse a modulus polynomial in `a` with integer coefficients, reduced
/// modulo p, ascending coefficient order.
fn parse_modulus(src: &str, p: u64) -> Result<Vec<u64>> {
    // reuse the expression parser over Q[a]
    let order =
        WeightedOrder::with_default_precedence(WeightVector::new(vec![1]).unwrap(), TieBreak::Lex);
    let ring = PolyRing::new(Field::rationals(), vec!["a".into()], order)?;
    let poly = parse_polynomial(src, &ring)?;
    let deg = poly
        .leading_monomial()
        .map(|m| m.exps()[0] as usize)
        .unwrap_or(0);
    let mut coeffs = vec![0u64; deg + 1];
    for (m, c) in poly.terms() {
        let r = c.as_rational().expect("rational ring");
        if !r.is_integer() {
            return Err(Error::SyntaxError {
                location: Location { line: 1, col: 1 },
                message: "modulus coefficients must be integers".into(),
            });
        }
        let p_big = BigInt::from(p);
        let mut v = r.numer() % &p_big;
        if v.is_negative() {
            v += &p_big;
        }
        coeffs[m.exps()[0] as usize] = u64::try_from(v).expect("reduced residue");
    }
    Ok(coeffs)
}

// ---------------------------------------------------------------------------
// problem files
// ---------------------------------------------------------------------------

/// A fully validated problem description.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub ring: PolyRing,
    pub generators: Vec<Polynomial>,
    /// Field-equation order for I_q; defaults to the field order.
    pub q: Option<u64>,
    /// Requested code dimension.
    pub code_k: Option<usize>,
}

fn ident_ok(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parse a problem file. See the module docs for the format.
pub fn parse_problem(contents: &str) -> Result<ProblemSpec> {
    let mut field_spec: Option<(String, Location)> = None;
    let mut vars_spec: Option<(String, Location)> = None;
    let mut weights_spec: Option<(String, Location)> = None;
    let mut order_spec: Option<(String, Location)> = None;
    let mut ideal_spec: Option<(String, Location)> = None;
    let mut q_spec: Option<(String, Location)> = None;
    let mut code_k_spec: Option<(String, Location)> = None;

    for (lineno, raw) in contents.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let loc = Location {
            line: lineno + 1,
            col: 1,
        };
        let (key, value) = line.split_once('=').ok_or(Error::SyntaxError {
            location: loc,
            message: "expected `key = value`".to_string(),
        })?;
        let key = key.trim();
        let value_col = raw.find('=').unwrap_or(0) + 2;
        let vloc = Location {
            line: lineno + 1,
            col: value_col,
        };
        let slot = match key {
            "field" => &mut field_spec,
            "vars" => &mut vars_spec,
            "weights" => &mut weights_spec,
            "order" => &mut order_spec,
            "ideal" => &mut ideal_spec,
            "q" => &mut q_spec,
            "code_k" => &mut code_k_spec,
            other => {
                return Err(Error::SyntaxError {
                    location: loc,
                    message: format!("unknown key `{other}`"),
                })
            }
        };
        if slot.is_some() {
            return Err(Error::SyntaxError {
                location: loc,
                message: format!("duplicate key `{key}`"),
            });
        }
        *slot = Some((value.trim().to_string(), vloc));
    }

    let (field_str, _) = field_spec.ok_or_else(|| missing_key("field"))?;
    let field = parse_field(&field_str)?;

    let (vars_str, vars_loc) = vars_spec.ok_or_else(|| missing_key("vars"))?;
    let vars: Vec<String> = vars_str
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(Error::SyntaxError {
            location: vars_loc,
            message: "at least one variable is required".into(),
        });
    }
    for v in &vars {
        if !ident_ok(v) {
            return Err(Error::SyntaxError {
                location: vars_loc,
                message: format!("invalid variable name `{v}`"),
            });
        }
        if v == "a" && matches!(field.kind(), FieldKind::Extension { .. }) {
            return Err(Error::SyntaxError {
                location: vars_loc,
                message: "variable name `a` collides with the field generator".into(),
            });
        }
    }
    if vars.iter().collect::<std::collections::BTreeSet<_>>().len() != vars.len() {
        return Err(Error::SyntaxError {
            location: vars_loc,
            message: "duplicate variable name".into(),
        });
    }

    let (weights_str, weights_loc) = weights_spec.ok_or_else(|| missing_key("weights"))?;
    let mut weights = Vec::new();
    for part in weights_str.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let w: i128 = part.parse().map_err(|_| Error::SyntaxError {
            location: weights_loc,
            message: format!("invalid weight `{part}`"),
        })?;
        if w <= 0 {
            return Err(Error::NonPositiveWeight);
        }
        weights.push(u64::try_from(w).map_err(|_| Error::NonPositiveWeight)?);
    }
    if weights.len() != vars.len() {
        return Err(Error::WeightCountMismatch {
            expected: vars.len(),
            got: weights.len(),
        });
    }
    let weights = WeightVector::new(weights)?;

    let order = match order_spec {
        None => WeightedOrder::with_default_precedence(weights, TieBreak::Lex),
        Some((s, loc)) => parse_order(&s, &vars, weights, loc)?,
    };

    let ring = PolyRing::new(field.clone(), vars, order)?;

    let mut generators = Vec::new();
    if let Some((ideal_str, iloc)) = ideal_spec {
        for part in ideal_str.split(';') {
            if part.trim().is_empty() {
                continue;
            }
            let poly = parse_polynomial_at(part, &ring, iloc)?;
            generators.push(poly);
        }
    }

    let q = match q_spec {
        None => None,
        Some((s, loc)) => Some(s.parse::<u64>().map_err(|_| Error::SyntaxError {
            location: loc,
            message: format!("invalid q `{s}`"),
        })?),
    };
    let code_k = match code_k_spec {
        None => None,
        Some((s, loc)) => Some(s.parse::<usize>().map_err(|_| Error::SyntaxError {
            location: loc,
            message: format!("invalid code_k `{s}`"),
        })?),
    };

    Ok(ProblemSpec {
        ring,
        generators,
        q,
        code_k,
    })
}

fn missing_key(key: &str) -> Error {
    Error::SyntaxError {
        location: Location { line: 1, col: 1 },
        message: format!("missing required key `{key}`"),
    }
}

/// `lex`, `degrevlex`, optionally with a precedence chain:
/// `lex(x < y)` (ascending) or `lex(w > v > u)` (descending).
fn parse_order(
    s: &str,
    vars: &[String],
    weights: WeightVector,
    loc: Location,
) -> Result<WeightedOrder> {
    let s = s.trim();
    let (name, chain) = match s.find('(') {
        None => (s, None),
        Some(i) => {
            let close = s.rfind(')').ok_or(Error::SyntaxError {
                location: loc,
                message: "unclosed precedence chain".to_string(),
            })?;
            (s[..i].trim(), Some(s[i + 1..close].trim()))
        }
    };
    let tiebreak = match name {
        "lex" => TieBreak::Lex,
        "degrevlex" => TieBreak::DegRevLex,
        other => {
            return Err(Error::SyntaxError {
                location: loc,
                message: format!("unknown order `{other}` (expected lex or degrevlex)"),
            })
        }
    };
    let precedence = match chain {
        None | Some("") => (0..vars.len()).collect(),
        Some(chain) => {
            let ascending = chain.contains('<');
            if ascending && chain.contains('>') {
                return Err(Error::SyntaxError {
                    location: loc,
                    message: "mixed `<` and `>` in precedence chain".into(),
                });
            }
            let sep = if ascending { '<' } else { '>' };
            let mut idx = Vec::new();
            for part in chain.split(sep) {
                let name = part.trim();
                let i =
                    vars.iter()
                        .position(|v| v == name)
                        .ok_or_else(|| Error::UnknownVariable {
                            name: name.to_string(),
                            location: loc,
                        })?;
                idx.push(i);
            }
            if ascending {
                idx.reverse(); // most significant first
            }
            if idx.len() != vars.len() {
                return Err(Error::SyntaxError {
                    location: loc,
                    message: "precedence chain must mention every variable exactly once".into(),
                });
            }
            idx
        }
    };
    WeightedOrder::new(weights, tiebreak, precedence)
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

/// Serialize any report deterministically (struct key order is declaration
/// order; all numbers that can be large are strings).
pub fn emit_report<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("report serialization")
    } else {
        serde_json::to_string(value).expect("report serialization")
    }
}

/// JSON error object used by the CLI.
#[derive(Debug, Serialize)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<LocationReport>,
}

#[derive(Debug, Serialize)]
pub struct LocationReport {
    pub line: usize,
    pub col: usize,
}

impl ErrorReport {
    pub fn from_error(e: &Error) -> Self {
        ErrorReport {
            kind: e.kind().to_string(),
            message: e.to_string(),
            location: e.location().map(|l| LocationReport {
                line: l.line,
                col: l.col,
            }),
        }
    }
}

/// Sparse numerator rendering: ascending `[exponent, coefficient]` pairs
/// with exact string coefficients.
pub fn numerator_terms(h: &crate::hilbert::HilbertNumerator) -> Vec<(u64, String)> {
    h.terms().map(|(e, c)| (e, c.to_string())).collect()
}

/// Quasi-polynomial wire format: `{period, ri, pieces}` plus a distinct-piece
/// summary. Pieces are coefficient-string arrays, constant term first.
#[derive(Debug, Serialize)]
pub struct QuasiPolynomialReport {
    pub period: u64,
    pub ri: u64,
    pub pieces: Vec<Vec<String>>,
    pub distinct_pieces: Vec<DistinctPieceReport>,
}

#[derive(Debug, Serialize)]
pub struct DistinctPieceReport {
    pub coeffs: Vec<String>,
    pub degree: Option<usize>,
    pub residue_count: usize,
    pub first_residue: u64,
}

impl QuasiPolynomialReport {
    pub fn new(qp: &crate::hilbert::QuasiPolynomial) -> Self {
        QuasiPolynomialReport {
            period: qp.period(),
            ri: qp.ri(),
            pieces: qp.pieces().iter().map(|p| p.coeff_strings()).collect(),
            distinct_pieces: qp
                .distinct_pieces()
                .into_iter()
                .map(|(p, residues)| DistinctPieceReport {
                    coeffs: p.coeff_strings(),
                    degree: p.degree(),
                    residue_count: residues.len(),
                    first_residue: residues[0],
                })
                .collect(),
        }
    }
}

/// Format a monomial list with the ring's variable names.
pub fn monomial_strings(ms: &[Monomial], ring: &PolyRing) -> Vec<String> {
    ms.iter().map(|m| m.format(ring.vars())).collect()
}
