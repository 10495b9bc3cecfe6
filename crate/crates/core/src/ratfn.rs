//! Exact rational functions of the summation index `n`.
//!
//! A [`RationalFn`] is a quotient of integer-coefficient polynomials in
//! canonical form (no common polynomial factor, joint coefficient content 1,
//! positive leading denominator coefficient) plus a finite override map for
//! special values such as f(0) = 0. Pole evaluation without an override is a
//! hard error, never a silent value.

use crate::error::{OverrideConflict, ParseError, PoleError};
use crate::poly::Poly;
use rug::{Integer, Rational};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Largest exponent the expression grammar accepts.
pub const EXPONENT_CAP: u64 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
    overrides: BTreeMap<u64, Rational>,
}

/// Symbolic decay analysis of a term, driving the convergence preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecayReport {
    /// deg den > deg num, i.e. f(n) -> 0.
    pub decays_to_zero: bool,
    /// The exponent e with |f(n+1) - f(n)| = Theta(n^-e); `None` means the
    /// function is constant (differences identically zero).
    pub difference_order: Option<i64>,
    /// Nonnegative integer roots of the denominator.
    pub poles: Vec<u64>,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn { num: Poly::zero(), den: Poly::one(), overrides: BTreeMap::new() }
    }

    pub fn one() -> Self {
        RationalFn::constant(Rational::from(1))
    }

    pub fn constant(q: Rational) -> Self {
        RationalFn::from_parts(Poly::constant(q), Poly::one())
    }

    /// The identity function n.
    pub fn var() -> Self {
        RationalFn::from_parts(Poly::x(), Poly::one())
    }

    /// Build from numerator and denominator polynomials, canonicalizing.
    /// Panics if `den` is the zero polynomial.
    pub fn from_parts(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        let (num, den) = canonicalize(num, den);
        RationalFn { num, den, overrides: BTreeMap::new() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn overrides(&self) -> &BTreeMap<u64, Rational> {
        &self.overrides
    }

    /// Add or replace the override f(n) = value.
    pub fn with_override(mut self, n: u64, value: Rational) -> Self {
        self.overrides.insert(n, value);
        self
    }

    pub fn is_zero_fn(&self) -> bool {
        self.num.is_zero() && self.overrides.values().all(|v| v.cmp0() == Ordering::Equal)
    }

    /// `Some(c)` when the rational part is the constant c.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            let d = self.den.coeff(0);
            Some(Rational::from(self.num.coeff(0) / d))
        } else {
            None
        }
    }

    pub fn num_degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn den_degree(&self) -> Option<usize> {
        self.den.degree()
    }

    /// Exact evaluation; overrides take precedence over the rational part.
    pub fn eval_exact(&self, n: u64) -> Result<Rational, PoleError> {
        if let Some(v) = self.overrides.get(&n) {
            return Ok(v.clone());
        }
        let x = Integer::from(n);
        let den = self.den.eval_int(&x);
        if den == 0 {
            return Err(PoleError { n });
        }
        let num = self.num.eval_int(&x);
        Ok(Rational::from((num, den)))
    }

    /// g with g(n) = f(a*n + b); only overrides at indices congruent to b
    /// modulo a survive, remapped to (index - b)/a.
    pub fn compose_affine(&self, a: u64, b: u64) -> Self {
        assert!(a >= 1, "affine scale must be positive");
        let num = self.num.compose_affine(a, b);
        let den = self.den.compose_affine(a, b);
        let mut out = RationalFn::from_parts(num, den);
        for (&m, v) in &self.overrides {
            if m >= b && (m - b) % a == 0 {
                out.overrides.insert((m - b) / a, v.clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &RationalFn) -> Result<RationalFn, OverrideConflict> {
        self.combine(rhs, Op::Add)
    }

    pub fn sub(&self, rhs: &RationalFn) -> Result<RationalFn, OverrideConflict> {
        self.combine(rhs, Op::Sub)
    }

    pub fn mul(&self, rhs: &RationalFn) -> Result<RationalFn, OverrideConflict> {
        self.combine(rhs, Op::Mul)
    }

    /// Division; panics if the right-hand side is the zero function.
    pub fn div(&self, rhs: &RationalFn) -> Result<RationalFn, OverrideConflict> {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        self.combine(rhs, Op::Div)
    }

    /// Scale by an exact rational (one of the rf_arith ops).
    pub fn scale(&self, q: &Rational) -> RationalFn {
        if q.cmp0() == Ordering::Equal {
            return RationalFn::zero();
        }
        let mut out = RationalFn::from_parts(self.num.scale(q), self.den.clone());
        for (&m, v) in &self.overrides {
            out.overrides.insert(m, Rational::from(v * q));
        }
        out
    }

    pub fn neg(&self) -> RationalFn {
        self.scale(&Rational::from(-1))
    }

    pub fn pow(&self, k: u32) -> Result<RationalFn, OverrideConflict> {
        let mut acc = RationalFn::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Pointwise combination. The rational parts combine symbolically; for
    /// every index carrying an override on either side, both sides must be
    /// defined there, and the combined value is recorded as an override when
    /// it disagrees with (or repairs a pole of) the combined rational part.
    fn combine(&self, rhs: &RationalFn, op: Op) -> Result<RationalFn, OverrideConflict> {
        let (num, den) = match op {
            Op::Add => (
                self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
                self.den.mul(&rhs.den),
            ),
            Op::Sub => (
                self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
                self.den.mul(&rhs.den),
            ),
            Op::Mul => (self.num.mul(&rhs.num), self.den.mul(&rhs.den)),
            Op::Div => (self.num.mul(&rhs.den), self.den.mul(&rhs.num)),
        };
        let mut out = RationalFn::from_parts(num, den);
        for &n in self.overrides.keys().chain(rhs.overrides.keys()) {
            let a = self.eval_exact(n).map_err(|_| OverrideConflict {
                n,
                reason: "left side undefined".into(),
            })?;
            let b = rhs.eval_exact(n).map_err(|_| OverrideConflict {
                n,
                reason: "right side undefined".into(),
            })?;
            let v = match op {
                Op::Add => Rational::from(&a + &b),
                Op::Sub => Rational::from(&a - &b),
                Op::Mul => Rational::from(&a * &b),
                Op::Div => {
                    if b.cmp0() == Ordering::Equal {
                        return Err(OverrideConflict {
                            n,
                            reason: "division by zero at override".into(),
                        });
                    }
                    Rational::from(&a / &b)
                }
            };
            match out.eval_exact(n) {
                Ok(w) if w == v => {}
                _ => {
                    out.overrides.insert(n, v);
                }
            }
        }
        Ok(out)
    }

    /// Symbolic decay analysis; overrides are irrelevant asymptotically.
    pub fn analyze_decay(&self) -> DecayReport {
        let poles = self.den.nonneg_integer_roots();
        let decays_to_zero = self.num.is_zero()
            || self.num.degree().unwrap_or(0) < self.den.degree().unwrap_or(0);
        // Difference f(n+1) - f(n), computed exactly.
        let shifted = RationalFn::from_parts(
            self.num.compose_affine(1, 1),
            self.den.compose_affine(1, 1),
        );
        let diff = shifted.combine(self, Op::Sub).expect("no overrides here");
        let difference_order = if diff.num.is_zero() {
            None
        } else {
            let dn = diff.num.degree().unwrap_or(0) as i64;
            let dd = diff.den.degree().unwrap_or(0) as i64;
            Some(dd - dn)
        };
        DecayReport { decays_to_zero, difference_order, poles }
    }

    /// The difference f(n+1) - f(n) as an exact rational function
    /// (rational parts only; overrides are dropped).
    pub fn forward_difference(&self) -> RationalFn {
        let shifted = RationalFn::from_parts(
            self.num.compose_affine(1, 1),
            self.den.compose_affine(1, 1),
        );
        let plain = RationalFn { num: self.num.clone(), den: self.den.clone(), overrides: BTreeMap::new() };
        shifted.combine(&plain, Op::Sub).expect("no overrides")
    }

    pub fn parse(text: &str) -> Result<RationalFn, ParseError> {
        Parser::new(text).run()
    }
}

impl FromStr for RationalFn {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RationalFn::parse(s)
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Canonical form: no common polynomial factor, integer coefficients with
/// joint content 1, positive leading denominator coefficient.
fn canonicalize(num: Poly, den: Poly) -> (Poly, Poly) {
    if num.is_zero() {
        return (Poly::zero(), Poly::one());
    }
    let g = num.gcd(&den);
    let (mut num, mut den) = if g.degree().map_or(false, |d| d >= 1) {
        (num.div_rem(&g).0, den.div_rem(&g).0)
    } else {
        (num, den)
    };
    // Clear rational denominators jointly.
    let l = Integer::from(num.denom_lcm().lcm(&den.denom_lcm()));
    if l != 1 {
        let lq = Rational::from(&l);
        num = num.scale(&lq);
        den = den.scale(&lq);
    }
    // Joint content 1.
    let c = Integer::from(num.content().gcd(&den.content()));
    if c > 1 {
        let inv = Rational::from((Integer::from(1), c));
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    // Positive leading denominator coefficient.
    if den.leading_coeff().cmp0() == Ordering::Less {
        let m = Rational::from(-1);
        num = num.scale(&m);
        den = den.scale(&m);
    }
    (num, den)
}

// ---------------------------------------------------------------------------
// Expression grammar
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('+' | '-')* primary ('^' uint)?
//   primary := uint | 'n' | '(' expr ')'
//
// Juxtaposition is not multiplication: `2n` is a syntax error, `2*n` is not.
// ---------------------------------------------------------------------------

use crate::lexer::{Lexer, Token};

struct Parser<'a> {
    lx: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { lx: Lexer::new(text) }
    }

    fn run(mut self) -> Result<RationalFn, ParseError> {
        self.lx.advance()?;
        let f = self.expr()?;
        if !self.lx.at_end() {
            return Err(self.lx.err("unexpected trailing input"));
        }
        Ok(f)
    }

    fn expr(&mut self) -> Result<RationalFn, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.lx.token() {
                Token::Plus => {
                    self.lx.advance()?;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).expect("grammar values carry no overrides");
                }
                Token::Minus => {
                    self.lx.advance()?;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).expect("grammar values carry no overrides");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFn, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.lx.token() {
                Token::Star => {
                    self.lx.advance()?;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs).expect("grammar values carry no overrides");
                }
                Token::Slash => {
                    let at = self.lx.token_pos();
                    self.lx.advance()?;
                    let rhs = self.factor()?;
                    if rhs.num.is_zero() {
                        return Err(ParseError::DivisionByZeroPoly { pos: at });
                    }
                    acc = acc.div(&rhs).expect("grammar values carry no overrides");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFn, ParseError> {
        let mut sign = 1i32;
        loop {
            match self.lx.token() {
                Token::Plus => self.lx.advance()?,
                Token::Minus => {
                    sign = -sign;
                    self.lx.advance()?;
                }
                _ => break,
            }
        }
        let mut v = self.primary()?;
        if *self.lx.token() == Token::Caret {
            self.lx.advance()?;
            let e = match self.lx.token() {
                Token::Int(k) => {
                    let e = k.to_u64().unwrap_or(u64::MAX);
                    if e > EXPONENT_CAP {
                        return Err(ParseError::ExponentOverflow(e));
                    }
                    e as u32
                }
                _ => return Err(self.lx.err("expected a nonnegative integer exponent")),
            };
            self.lx.advance()?;
            v = v.pow(e).expect("grammar values carry no overrides");
        }
        if sign < 0 {
            v = v.neg();
        }
        Ok(v)
    }

    fn primary(&mut self) -> Result<RationalFn, ParseError> {
        match self.lx.token().clone() {
            Token::Int(k) => {
                self.lx.advance()?;
                Ok(RationalFn::constant(Rational::from(k)))
            }
            Token::Ident(name) if name == "n" => {
                self.lx.advance()?;
                Ok(RationalFn::var())
            }
            Token::LParen => {
                self.lx.advance()?;
                let inner = self.expr()?;
                if *self.lx.token() != Token::RParen {
                    return Err(self.lx.err("expected ')'"));
                }
                self.lx.advance()?;
                Ok(inner)
            }
            _ => Err(self.lx.err("expected an integer, 'n', or '('")),
        }
    }
}

// ---------------------------------------------------------------------------
// Printing (the parse-print fixed point)
// ---------------------------------------------------------------------------

fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.cmp0() == Ordering::Equal {
            continue;
        }
        let neg = c.cmp0() == Ordering::Less;
        let mag = Rational::from(c.abs_ref());
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        debug_assert_eq!(*mag.denom(), 1);
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != 1u32 {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push('n');
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
    }
    out
}

fn term_count(p: &Poly) -> usize {
    p.coeffs().iter().filter(|c| c.cmp0() != Ordering::Equal).count()
}

/// True when the polynomial can stand unparenthesized as a denominator
/// (an integer constant, n, or n^k).
fn den_is_atomic(p: &Poly) -> bool {
    if term_count(p) != 1 {
        return false;
    }
    let deg = p.degree().unwrap();
    deg == 0 || p.leading_coeff() == 1u32
}

impl fmt::Display for RationalFn {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return write!(out, "0");
        }
        if self.den.is_one() {
            return write!(out, "{}", poly_to_string(&self.num));
        }
        let num = if term_count(&self.num) > 1 {
            format!("({})", poly_to_string(&self.num))
        } else {
            poly_to_string(&self.num)
        };
        let den = if den_is_atomic(&self.den) {
            poly_to_string(&self.den)
        } else {
            format!("({})", poly_to_string(&self.den))
        };
        write!(out, "{}/{}", num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFn {
        RationalFn::parse(s).unwrap()
    }

    #[test]
    fn parses_catalog_terms() {
        let f = rf("(4*n+1)/(2*n*(2*n+1)*(2*n+2))");
        assert_eq!(f.num_degree(), Some(1));
        assert_eq!(f.den_degree(), Some(3));

        let g = rf("1/(n*(n+1))");
        assert_eq!(g.num_degree(), Some(0));
        assert_eq!(g.den_degree(), Some(2));

        let h = rf("(8*n^2+4*n+1)/(2*n*(2*n+1)*(4*n+1))");
        assert_eq!(h.num_degree(), Some(2));
        assert_eq!(h.den_degree(), Some(3));
    }

    #[test]
    fn eval_exact_matches_hand_values() {
        let f = rf("(4*n+1)/(2*n*(2*n+1)*(2*n+2))");
        assert_eq!(f.eval_exact(1).unwrap(), Rational::from((5, 24)));
        let g = rf("1/(n*(n+1))");
        assert_eq!(g.eval_exact(3).unwrap(), Rational::from((1, 12)));
    }

    #[test]
    fn override_takes_precedence_and_poles_error() {
        let f = rf("1/n").with_override(0, Rational::new());
        assert_eq!(f.eval_exact(0).unwrap(), Rational::new());
        let g = rf("1/n");
        assert_eq!(g.eval_exact(0).unwrap_err(), PoleError { n: 0 });
    }

    #[test]
    fn decay_analysis_examples() {
        let f = rf("1/n").analyze_decay();
        assert!(f.decays_to_zero);
        assert_eq!(f.difference_order, Some(2));
        assert_eq!(f.poles, vec![0]);

        let g = rf("1/(n*(n+1))").analyze_decay();
        assert_eq!(g.difference_order, Some(3));
        assert_eq!(g.poles, vec![0]);

        let h = rf("(4*n+1)/(2*n*(2*n+1))").analyze_decay();
        assert_eq!(h.difference_order, Some(2));
        assert_eq!(h.poles, vec![0]);

        let c = rf("7").analyze_decay();
        assert_eq!(c.difference_order, None);
        assert!(!c.decays_to_zero);

        // tends to 1, differences still order 2
        let t = rf("n/(n+1)").analyze_decay();
        assert!(!t.decays_to_zero);
        assert_eq!(t.difference_order, Some(2));
    }

    #[test]
    fn compose_affine_examples() {
        let f = rf("1/n");
        let g = f.compose_affine(2, 1);
        assert_eq!(g, rf("1/(2*n+1)"));
        assert!(g.analyze_decay().poles.is_empty());
        let h = f.compose_affine(4, 1);
        assert_eq!(h, rf("1/(4*n+1)"));
    }

    #[test]
    fn compose_affine_remaps_overrides() {
        let f = rf("1/n").with_override(0, Rational::from(7));
        let g = f.compose_affine(2, 0);
        assert_eq!(g.eval_exact(0).unwrap(), Rational::from(7));
        let h = f.compose_affine(2, 1);
        // 0 is even, so the override disappears and 1/(2n+1) has no pole.
        assert!(h.overrides().is_empty());
    }

    #[test]
    fn telescoping_difference() {
        let a = rf("1/n");
        let b = rf("1/(n+1)");
        let d = a.sub(&b).unwrap();
        assert_eq!(d, rf("1/(n*(n+1))"));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = rf("(4*n+1)/(2*n*(2*n+1))");
        let z = RationalFn::zero();
        assert_eq!(f.add(&z).unwrap(), f);
    }

    #[test]
    fn shap_combination_of_reciprocal() {
        // R - R(2n) + R(2n+1) - 2 R(4n+1) for R = 1/n.
        let r = rf("1/n");
        let combo = r
            .sub(&r.compose_affine(2, 0))
            .unwrap()
            .add(&r.compose_affine(2, 1))
            .unwrap()
            .sub(&r.compose_affine(4, 1).scale(&Rational::from(2)))
            .unwrap();
        assert_eq!(combo, rf("(8*n^2+4*n+1)/(2*n*(2*n+1)*(4*n+1))"));
    }

    #[test]
    fn digit_corollary_combination() {
        // (B-1)/(n(n+1)) + 2B/((Bn+j)(Bn+j+1)) at B=2, j=1 equals
        // 4*(4n+1)/(2n(2n+1)(2n+2)).
        let a = rf("1/(n*(n+1))");
        let b = rf("4/((2*n+1)*(2*n+2))");
        let combo = a.add(&b).unwrap();
        let target = rf("(4*n+1)/(2*n*(2*n+1)*(2*n+2))").scale(&Rational::from(4));
        assert_eq!(combo, target);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match RationalFn::parse("2n+1") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match RationalFn::parse("1/(n-n)") {
            Err(ParseError::DivisionByZeroPoly { pos }) => assert_eq!(pos, 1),
            other => panic!("expected zero-poly error, got {:?}", other),
        }
        match RationalFn::parse("n^65") {
            Err(ParseError::ExponentOverflow(65)) => {}
            other => panic!("expected exponent overflow, got {:?}", other),
        }
    }

    #[test]
    fn print_parse_fixed_point_on_examples() {
        for src in [
            "(4*n+1)/(2*n*(2*n+1)*(2*n+2))",
            "1/(n*(n+1))",
            "(8*n^2+4*n+1)/(2*n*(2*n+1)*(4*n+1))",
            "n/(n+1)",
            "1/n",
            "-3",
            "0",
            "(128*n^3+176*n^2+76*n+9)/(4*n*(4*n+1)*(4*n+2)*(4*n+3))",
        ] {
            let f = rf(src);
            let printed = f.to_string();
            let reparsed = rf(&printed);
            assert_eq!(f, reparsed, "round-trip failed for {src} -> {printed}");
        }
    }

    #[test]
    fn unary_minus_and_powers() {
        assert_eq!(rf("-n^2"), RationalFn::zero().sub(&rf("n^2")).unwrap());
        assert_eq!(rf("(-n)^2"), rf("n^2"));
        assert_eq!(rf("2^6"), rf("64"));
    }
}
