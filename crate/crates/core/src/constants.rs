//! Exact closed-form constants: harmonic and Euler numbers, Dirichlet beta,
//! and the symbolic right-hand sides of the identity catalog.
//!
//! A [`SymbolicConstant`] is a finite sum of Gaussian-rational multiples of
//! basis atoms (powers of pi, logs of positive rationals, sqrt 2, and sin/cos
//! of rational multiples of 2*pi), normalized so that structural equality
//! implies numeric equality. Everything evaluates to a complex ball at any
//! requested precision.

use crate::ball::{Ball, CBall};
use crate::error::{ConstantError, ParseError};
use crate::lexer::{Lexer, Token};
use rug::ops::Pow;
use rug::{Complete, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// H_n (alternating = false) or H*_n (alternating = true); both 0 at n = 0.
pub fn harmonic(n: u64, alternating: bool) -> Rational {
    let mut acc = Rational::new();
    for k in 1..=n {
        let sign = if alternating && k % 2 == 0 { -1i64 } else { 1 };
        acc += Rational::from((Integer::from(sign), Integer::from(k)));
    }
    acc
}

/// Euler number E_m for even m, from the recurrence
/// sum_{j=0..k} C(2k, 2j) E_{2j} = 0 with E_0 = 1.
pub fn euler_number(m: u64) -> Result<Integer, ConstantError> {
    if m % 2 != 0 {
        return Err(ConstantError::OddEulerIndex(m));
    }
    let k_max = (m / 2) as u32;
    let mut table: Vec<Integer> = Vec::with_capacity(k_max as usize + 1);
    table.push(Integer::from(1));
    for k in 1..=k_max {
        let mut acc = Integer::new();
        for j in 0..k {
            let c = Integer::binomial_u(2 * k, 2 * j).complete();
            acc += c * &table[j as usize];
        }
        table.push(-acc);
    }
    Ok(table.pop().unwrap())
}

/// Dirichlet beta at s > 0 by direct alternating summation. The radius is
/// rigorous: the terms decrease monotonically, so the truncation error is
/// at most the first omitted term.
pub fn beta_numeric(s: f64, prec: u32) -> Ball {
    assert!(s > 0.0, "beta requires s > 0");
    // Enough terms to push the alternating tail under 2^-prec, capped at
    // 100000; past the cap the reported radius simply stays wider.
    let want = (f64::from(prec) / s).exp2();
    let terms: u64 = if want.is_finite() && want < 2.0e5 {
        (want as u64 / 2).max(16)
    } else {
        100_000
    };
    let is_int = s.fract() == 0.0 && s <= 64.0;
    let mut acc = Ball::zero(prec);
    for k in 0..terms {
        let odd = 2 * k + 1;
        let term = if is_int {
            let den = Integer::from(odd).pow(s as u32);
            Ball::from_integer_quotient(prec, &Integer::from(1), &den)
        } else {
            let base = Ball::from_integer(prec, &Integer::from(odd));
            let e = Ball::from_f64(prec, -s, 0.0);
            base.pow_ball(&e)
        };
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    // Alternating tail bound: |tail| <= (2*terms+1)^(-s).
    let tail = ((2 * terms + 1) as f64).powf(-s) * (1.0 + 1e-12);
    Ball::from_f64(prec, 0.0, tail).add(&acc)
}

/// 2^s / (2^s - 1), the factor relating the paperfolding series to beta.
pub fn paperfold_reduction_factor(s: u32) -> Rational {
    let p = Integer::from(1) << s;
    Rational::from((p.clone(), p - 1))
}

fn factorial(n: u32) -> Integer {
    Integer::factorial(n).complete()
}

/// beta(2d+1) = (pi/2)^(2d+1) |E_2d| / (2 (2d)!), exact symbolic.
pub fn beta_odd(d: u64) -> SymbolicConstant {
    let e = euler_number(2 * d).expect("even index").abs();
    let fact = factorial(2 * d as u32);
    let two_pow = Integer::from(1) << (2 * d as u32 + 1);
    let coeff = Rational::from((e, two_pow * 2 * fact));
    SymbolicConstant::pi_pow(coeff, (2 * d + 1) as u32)
}

/// pi^(2d+1) |E_2d| / ((2^(2d+2) - 2) (2d)!), the paperfolding closed form.
pub fn paperfold_rhs(d: u64) -> SymbolicConstant {
    let e = euler_number(2 * d).expect("even index").abs();
    let fact = factorial(2 * d as u32);
    let den = (Integer::from(1) << (2 * d as u32 + 2)) - 2;
    let coeff = Rational::from((e, den * fact));
    SymbolicConstant::pi_pow(coeff, (2 * d + 1) as u32)
}

// ---------------------------------------------------------------------------
// Symbolic constants
// ---------------------------------------------------------------------------

/// A basis atom. `SinTau(q)`/`CosTau(q)` denote sin/cos of 2*pi*q.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymAtom {
    One,
    Pi(u32),
    /// log of a rational > 1 (canonical; log 2 is `Log(2)`).
    Log(Rational),
    Sqrt2,
    SinTau(Rational),
    CosTau(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct SymTerm {
    re: Rational,
    im: Rational,
    atom: SymAtom,
}

/// An exact symbolic constant: a sum of Gaussian-rational multiples of atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicConstant {
    terms: Vec<SymTerm>,
}

impl SymbolicConstant {
    pub fn zero() -> Self {
        SymbolicConstant { terms: Vec::new() }
    }

    pub fn from_rational(q: Rational) -> Self {
        SymbolicConstant::term(q, Rational::new(), SymAtom::One)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from(v))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        SymbolicConstant::term(Rational::new(), Rational::from(1), SymAtom::One)
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        SymbolicConstant::term(re, im, SymAtom::One)
    }

    /// coeff * pi^k.
    pub fn pi_pow(coeff: Rational, k: u32) -> Self {
        SymbolicConstant::term(coeff, Rational::new(), SymAtom::Pi(k))
    }

    /// coeff * log 2.
    pub fn log2(coeff: Rational) -> Self {
        SymbolicConstant::term(coeff, Rational::new(), SymAtom::Log(Rational::from(2)))
    }

    /// coeff * log q for rational q > 0.
    pub fn log_rational(coeff: Rational, q: Rational) -> Result<Self, ConstantError> {
        if q.cmp0() != Ordering::Greater {
            return Err(ConstantError::NonPositiveLog(q.to_string()));
        }
        Ok(SymbolicConstant::term(coeff, Rational::new(), SymAtom::Log(q)))
    }

    /// coeff * sqrt 2.
    pub fn sqrt2(coeff: Rational) -> Self {
        SymbolicConstant::term(coeff, Rational::new(), SymAtom::Sqrt2)
    }

    /// sin(2*pi*q).
    pub fn sin_tau(q: Rational) -> Self {
        SymbolicConstant::term(Rational::from(1), Rational::new(), SymAtom::SinTau(q))
    }

    /// cos(2*pi*q).
    pub fn cos_tau(q: Rational) -> Self {
        SymbolicConstant::term(Rational::from(1), Rational::new(), SymAtom::CosTau(q))
    }

    fn term(re: Rational, im: Rational, atom: SymAtom) -> Self {
        SymbolicConstant { terms: vec![SymTerm { re, im, atom }] }.normalized()
    }

    /// Canonical form: atoms normalized (angles reduced, rational
    /// specializations folded into `One`, Pi(0) -> One, log arguments > 1),
    /// like atoms merged, zero terms dropped, terms sorted by atom.
    fn normalized(mut self) -> Self {
        let mut flat: Vec<SymTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            flat.extend(normalize_term(t));
        }
        flat.sort_by(|a, b| a.atom.cmp(&b.atom));
        let mut out: Vec<SymTerm> = Vec::new();
        for t in flat {
            if let Some(last) = out.last_mut() {
                if last.atom == t.atom {
                    last.re += &t.re;
                    last.im += &t.im;
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| t.re.cmp0() != Ordering::Equal || t.im.cmp0() != Ordering::Equal);
        SymbolicConstant { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::new()),
            [t] if t.atom == SymAtom::One && t.im.cmp0() == Ordering::Equal => Some(t.re.clone()),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &SymbolicConstant) -> SymbolicConstant {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        SymbolicConstant { terms }.normalized()
    }

    pub fn neg(&self) -> SymbolicConstant {
        self.scale(&Rational::from(-1))
    }

    pub fn sub(&self, rhs: &SymbolicConstant) -> SymbolicConstant {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, q: &Rational) -> SymbolicConstant {
        let terms = self
            .terms
            .iter()
            .map(|t| SymTerm {
                re: Rational::from(&t.re * q),
                im: Rational::from(&t.im * q),
                atom: t.atom.clone(),
            })
            .collect();
        SymbolicConstant { terms }.normalized()
    }

    /// Product, defined when every atom pairing stays inside the basis
    /// (rational factors, powers of pi, sqrt2 * sqrt2).
    pub fn mul(&self, rhs: &SymbolicConstant) -> Result<SymbolicConstant, ConstantError> {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let re = (&a.re * &b.re).complete() - (&a.im * &b.im).complete();
                let im = (&a.re * &b.im).complete() + (&a.im * &b.re).complete();
                let (atom, extra) = mul_atoms(&a.atom, &b.atom)?;
                terms.push(SymTerm { re: re * &extra, im: im * &extra, atom });
            }
        }
        Ok(SymbolicConstant { terms }.normalized())
    }

    /// Division, defined for divisors that are a single Gaussian rational or
    /// a rational multiple of sqrt 2.
    pub fn div(&self, rhs: &SymbolicConstant) -> Result<SymbolicConstant, ConstantError> {
        let inv = rhs.invert()?;
        self.mul(&inv)
    }

    fn invert(&self) -> Result<SymbolicConstant, ConstantError> {
        match self.terms.as_slice() {
            [t] if t.atom == SymAtom::One => {
                // 1/(a+bi) = (a-bi)/(a^2+b^2)
                let norm = (&t.re * &t.re).complete() + (&t.im * &t.im).complete();
                if norm.cmp0() == Ordering::Equal {
                    return Err(ConstantError::OutsideBasis("division by zero".into()));
                }
                Ok(SymbolicConstant::term(
                    Rational::from(&t.re / &norm),
                    -Rational::from(&t.im / &norm),
                    SymAtom::One,
                ))
            }
            [t] if t.atom == SymAtom::Sqrt2 && t.im.cmp0() == Ordering::Equal => {
                // 1/(c sqrt2) = sqrt2/(2c)
                if t.re.cmp0() == Ordering::Equal {
                    return Err(ConstantError::OutsideBasis("division by zero".into()));
                }
                let c = Rational::from(2 * t.re.clone());
                Ok(SymbolicConstant::sqrt2(c.recip()))
            }
            _ => Err(ConstantError::OutsideBasis(format!("cannot divide by `{self}`"))),
        }
    }

    pub fn pow(&self, k: u32) -> Result<SymbolicConstant, ConstantError> {
        let mut acc = SymbolicConstant::from_i64(1);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Evaluate to a complex ball.
    pub fn eval(&self, prec: u32) -> CBall {
        let mut acc = CBall::zero(prec);
        for t in &self.terms {
            let a = atom_ball(&t.atom, prec);
            let re = Ball::from_rational(prec, &t.re);
            let im = Ball::from_rational(prec, &t.im);
            acc = acc.add(&CBall::new(re, im).mul_real(&a));
        }
        acc
    }

    pub fn parse(text: &str) -> Result<SymbolicConstant, ParseError> {
        let mut lx = Lexer::new(text);
        lx.advance()?;
        let v = const_expr(&mut lx)?;
        if !lx.at_end() {
            return Err(lx.err("unexpected trailing input"));
        }
        Ok(v)
    }
}

fn normalize_term(t: SymTerm) -> Vec<SymTerm> {
    if t.re.cmp0() == Ordering::Equal && t.im.cmp0() == Ordering::Equal {
        return Vec::new();
    }
    let one = |re: Rational, im: Rational| SymTerm { re, im, atom: SymAtom::One };
    match t.atom {
        SymAtom::Pi(0) => vec![one(t.re, t.im)],
        SymAtom::Log(q) => match q.cmp(&Rational::from(1)) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => {
                vec![SymTerm { re: -t.re, im: -t.im, atom: SymAtom::Log(q.recip()) }]
            }
            Ordering::Greater => vec![SymTerm { re: t.re, im: t.im, atom: SymAtom::Log(q) }],
        },
        SymAtom::SinTau(q) => {
            let q = frac_mod_one(q);
            if q.cmp0() == Ordering::Equal || q == Rational::from((1, 2)) {
                return Vec::new();
            }
            if q == Rational::from((1, 4)) {
                return vec![one(t.re, t.im)];
            }
            if q == Rational::from((3, 4)) {
                return vec![one(-t.re, -t.im)];
            }
            // sin(2 pi (1-q)) = -sin(2 pi q): keep angles in (0, 1/2)
            if q > Rational::from((1, 2)) {
                let folded = Rational::from(1) - q;
                return vec![SymTerm { re: -t.re, im: -t.im, atom: SymAtom::SinTau(folded) }];
            }
            vec![SymTerm { re: t.re, im: t.im, atom: SymAtom::SinTau(q) }]
        }
        SymAtom::CosTau(q) => {
            let q = frac_mod_one(q);
            if q.cmp0() == Ordering::Equal {
                return vec![one(t.re, t.im)];
            }
            if q == Rational::from((1, 2)) {
                return vec![one(-t.re, -t.im)];
            }
            if q == Rational::from((1, 4)) || q == Rational::from((3, 4)) {
                return Vec::new();
            }
            // cos(2 pi (1-q)) = cos(2 pi q)
            if q > Rational::from((1, 2)) {
                let folded = Rational::from(1) - q;
                return vec![SymTerm { re: t.re, im: t.im, atom: SymAtom::CosTau(folded) }];
            }
            vec![SymTerm { re: t.re, im: t.im, atom: SymAtom::CosTau(q) }]
        }
        atom => vec![SymTerm { re: t.re, im: t.im, atom }],
    }
}

fn frac_mod_one(q: Rational) -> Rational {
    let floor = q.clone().floor();
    q - floor
}

/// Atom product, with an extra rational factor (sqrt2 * sqrt2 = 2 * One).
fn mul_atoms(a: &SymAtom, b: &SymAtom) -> Result<(SymAtom, Rational), ConstantError> {
    let one = Rational::from(1);
    match (a, b) {
        (SymAtom::One, x) | (x, SymAtom::One) => Ok((x.clone(), one)),
        (SymAtom::Pi(j), SymAtom::Pi(k)) => Ok((SymAtom::Pi(j + k), one)),
        (SymAtom::Sqrt2, SymAtom::Sqrt2) => Ok((SymAtom::One, Rational::from(2))),
        _ => Err(ConstantError::OutsideBasis(format!(
            "product {a:?} * {b:?} is outside the constant basis"
        ))),
    }
}

fn atom_ball(atom: &SymAtom, prec: u32) -> Ball {
    match atom {
        SymAtom::One => Ball::one(prec),
        SymAtom::Pi(k) => Ball::pi(prec).pow_u32(*k),
        SymAtom::Log(q) => {
            if *q == 2u32 {
                Ball::log2(prec)
            } else {
                Ball::from_rational(prec, q).ln()
            }
        }
        SymAtom::Sqrt2 => Ball::from_i64(prec, 2).sqrt(),
        SymAtom::SinTau(q) => two_pi_q(prec, q).sin(),
        SymAtom::CosTau(q) => two_pi_q(prec, q).cos(),
    }
}

fn two_pi_q(prec: u32, q: &Rational) -> Ball {
    Ball::pi(prec).mul(&Ball::from_rational(prec, &Rational::from(2 * q.clone())))
}

// ---------------------------------------------------------------------------
// Constant expression parser: same operator grammar as rational terms, with
// atoms  int | pi | log2 | sqrt2 | i | sin2pi(p/q) | cos2pi(p/q) | log(p/q)
// ---------------------------------------------------------------------------

fn basis_err(lx: &Lexer<'_>, e: ConstantError) -> ParseError {
    ParseError::BadConstant(format!("{e} (near byte {})", lx.token_pos()))
}

fn const_expr(lx: &mut Lexer<'_>) -> Result<SymbolicConstant, ParseError> {
    let mut acc = const_term(lx)?;
    loop {
        match lx.token() {
            Token::Plus => {
                lx.advance()?;
                acc = acc.add(&const_term(lx)?);
            }
            Token::Minus => {
                lx.advance()?;
                acc = acc.sub(&const_term(lx)?);
            }
            _ => return Ok(acc),
        }
    }
}

fn const_term(lx: &mut Lexer<'_>) -> Result<SymbolicConstant, ParseError> {
    let mut acc = const_factor(lx)?;
    loop {
        match lx.token() {
            Token::Star => {
                lx.advance()?;
                let rhs = const_factor(lx)?;
                acc = acc.mul(&rhs).map_err(|e| basis_err(lx, e))?;
            }
            Token::Slash => {
                lx.advance()?;
                let rhs = const_factor(lx)?;
                acc = acc.div(&rhs).map_err(|e| basis_err(lx, e))?;
            }
            _ => return Ok(acc),
        }
    }
}

fn const_factor(lx: &mut Lexer<'_>) -> Result<SymbolicConstant, ParseError> {
    let mut sign = 1i64;
    loop {
        match lx.token() {
            Token::Plus => lx.advance()?,
            Token::Minus => {
                sign = -sign;
                lx.advance()?;
            }
            _ => break,
        }
    }
    let mut v = const_primary(lx)?;
    if *lx.token() == Token::Caret {
        lx.advance()?;
        let e = match lx.token() {
            Token::Int(k) => k.to_u32().ok_or_else(|| lx.err("exponent too large"))?,
            _ => return Err(lx.err("expected a nonnegative integer exponent")),
        };
        if u64::from(e) > crate::ratfn::EXPONENT_CAP {
            return Err(ParseError::ExponentOverflow(u64::from(e)));
        }
        lx.advance()?;
        v = v.pow(e).map_err(|err| basis_err(lx, err))?;
    }
    if sign < 0 {
        v = v.neg();
    }
    Ok(v)
}

fn const_primary(lx: &mut Lexer<'_>) -> Result<SymbolicConstant, ParseError> {
    match lx.token().clone() {
        Token::Int(k) => {
            lx.advance()?;
            Ok(SymbolicConstant::from_rational(Rational::from(k)))
        }
        Token::Ident(name) => {
            lx.advance()?;
            match name.as_str() {
                "pi" => Ok(SymbolicConstant::pi_pow(Rational::from(1), 1)),
                "log2" => Ok(SymbolicConstant::log2(Rational::from(1))),
                "sqrt2" => Ok(SymbolicConstant::sqrt2(Rational::from(1))),
                "i" => Ok(SymbolicConstant::i()),
                "sin2pi" | "cos2pi" | "log" => {
                    let q = parse_rational_arg(lx)?;
                    match name.as_str() {
                        "sin2pi" => Ok(SymbolicConstant::sin_tau(q)),
                        "cos2pi" => Ok(SymbolicConstant::cos_tau(q)),
                        _ => SymbolicConstant::log_rational(Rational::from(1), q)
                            .map_err(|e| basis_err(lx, e)),
                    }
                }
                other => Err(lx.err(&format!("unknown constant `{other}`"))),
            }
        }
        Token::LParen => {
            lx.advance()?;
            let inner = const_expr(lx)?;
            if *lx.token() != Token::RParen {
                return Err(lx.err("expected ')'"));
            }
            lx.advance()?;
            Ok(inner)
        }
        _ => Err(lx.err("expected a constant, integer, or '('")),
    }
}

/// Parses "(p/q)" or "(p)" after a function name.
fn parse_rational_arg(lx: &mut Lexer<'_>) -> Result<Rational, ParseError> {
    if *lx.token() != Token::LParen {
        return Err(lx.err("expected '('"));
    }
    lx.advance()?;
    let mut neg = false;
    while *lx.token() == Token::Minus {
        neg = !neg;
        lx.advance()?;
    }
    let p = match lx.token() {
        Token::Int(k) => k.clone(),
        _ => return Err(lx.err("expected an integer")),
    };
    lx.advance()?;
    let q = if *lx.token() == Token::Slash {
        lx.advance()?;
        let q = match lx.token() {
            Token::Int(k) => k.clone(),
            _ => return Err(lx.err("expected an integer denominator")),
        };
        lx.advance()?;
        q
    } else {
        Integer::from(1)
    };
    if *lx.token() != Token::RParen {
        return Err(lx.err("expected ')'"));
    }
    lx.advance()?;
    if q == 0 {
        return Err(lx.err("zero denominator"));
    }
    let mut r = Rational::from((p, q));
    if neg {
        r = -r;
    }
    Ok(r)
}

impl FromStr for SymbolicConstant {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SymbolicConstant::parse(s)
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        for t in &self.terms {
            for (coeff, with_i) in [(&t.re, false), (&t.im, true)] {
                if coeff.cmp0() == Ordering::Equal {
                    continue;
                }
                let neg = coeff.cmp0() == Ordering::Less;
                if first {
                    if neg {
                        write!(out, "-")?;
                    }
                    first = false;
                } else {
                    write!(out, "{}", if neg { " - " } else { " + " })?;
                }
                write_term_magnitude(out, &Rational::from(coeff.abs_ref()), with_i, &t.atom)?;
            }
        }
        Ok(())
    }
}

fn write_term_magnitude(
    out: &mut fmt::Formatter<'_>,
    mag: &Rational,
    with_i: bool,
    atom: &SymAtom,
) -> fmt::Result {
    let atom_txt = match atom {
        SymAtom::One => None,
        SymAtom::Pi(1) => Some("pi".to_string()),
        SymAtom::Pi(k) => Some(format!("pi^{k}")),
        SymAtom::Log(q) => {
            if *q == 2u32 {
                Some("log2".to_string())
            } else {
                Some(format!("log({q})"))
            }
        }
        SymAtom::Sqrt2 => Some("sqrt2".to_string()),
        SymAtom::SinTau(q) => Some(format!("sin2pi({q})")),
        SymAtom::CosTau(q) => Some(format!("cos2pi({q})")),
    };
    let num = mag.numer();
    let den = mag.denom();
    let mut pieces: Vec<String> = Vec::new();
    if *num != 1 || (atom_txt.is_none() && !with_i) {
        pieces.push(num.to_string());
    }
    if with_i {
        pieces.push("i".to_string());
    }
    if let Some(a) = atom_txt {
        pieces.push(a);
    }
    write!(out, "{}", pieces.join("*"))?;
    if *den != 1 {
        write!(out, "/{den}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(3, false), Rational::from((11, 6)));
        assert_eq!(harmonic(2, true), Rational::from((1, 2)));
        assert_eq!(harmonic(3, true), Rational::from((5, 6)));
        assert_eq!(harmonic(0, false), Rational::new());
    }

    #[test]
    fn euler_numbers_small() {
        assert_eq!(euler_number(0).unwrap(), 1);
        assert_eq!(euler_number(2).unwrap(), -1);
        assert_eq!(euler_number(4).unwrap(), 5);
        assert_eq!(euler_number(6).unwrap(), -61);
        assert_eq!(euler_number(8).unwrap(), 1385);
        assert_eq!(euler_number(10).unwrap(), -50521);
        assert!(euler_number(3).is_err());
    }

    #[test]
    fn beta_odd_closed_forms() {
        assert_eq!(beta_odd(0), SymbolicConstant::pi_pow(Rational::from((1, 4)), 1));
        assert_eq!(beta_odd(1), SymbolicConstant::pi_pow(Rational::from((1, 32)), 3));
        assert_eq!(beta_odd(2), SymbolicConstant::pi_pow(Rational::from((5, 1536)), 5));
    }

    #[test]
    fn paperfold_rhs_values() {
        assert_eq!(paperfold_rhs(0), SymbolicConstant::pi_pow(Rational::from((1, 2)), 1));
        assert_eq!(paperfold_rhs(1), SymbolicConstant::pi_pow(Rational::from((1, 28)), 3));
        assert_eq!(paperfold_rhs(2), SymbolicConstant::pi_pow(Rational::from((5, 1488)), 5));
        assert_eq!(paperfold_reduction_factor(2), Rational::from((4, 3)));
    }

    #[test]
    fn beta_numeric_contains_closed_forms() {
        for d in 0..=5u64 {
            let b = beta_numeric((2 * d + 1) as f64, 128);
            let exact = beta_odd(d).eval(256);
            let diff = (b.to_f64() - exact.re.to_f64()).abs();
            assert!(
                diff <= b.rad() + exact.re.rad() + 1e-30,
                "beta({}) enclosure misses closed form: diff={diff:.3e} rad={:.3e}",
                2 * d + 1,
                b.rad()
            );
        }
    }

    #[test]
    fn beta_numeric_catalan() {
        // Catalan's constant via an independent reference value.
        let b = beta_numeric(2.0, 96);
        assert!((b.to_f64() - 0.915_965_594_177_219).abs() <= b.rad() + 1e-14);
    }

    #[test]
    fn constant_parser_round_trips() {
        for src in [
            "-1/4",
            "pi/2",
            "pi^3/28",
            "5*pi^5/1488",
            "-log2/2",
            "-log2",
            "sqrt2/2",
            "i",
            "0",
            "1",
            "-3",
            "sin2pi(1/5)",
            "cos2pi(1/8)",
            "-1/36",
            "1/2 + i/2",
            "log(3/2)",
        ] {
            let c = SymbolicConstant::parse(src).unwrap();
            let printed = c.to_string();
            let reparsed = SymbolicConstant::parse(&printed).unwrap();
            assert_eq!(c, reparsed, "round-trip failed: {src} -> {printed}");
        }
    }

    #[test]
    fn structural_equality_catches_identities() {
        let a = SymbolicConstant::parse("1/sqrt2").unwrap();
        let b = SymbolicConstant::parse("sqrt2/2").unwrap();
        assert_eq!(a, b);
        let c = SymbolicConstant::parse("sqrt2^2").unwrap();
        assert_eq!(c.as_rational(), Some(Rational::from(2)));
        let d = SymbolicConstant::parse("i^2").unwrap();
        assert_eq!(d.as_rational(), Some(Rational::from(-1)));
        assert_eq!(
            SymbolicConstant::parse("sin2pi(1/4)").unwrap().as_rational(),
            Some(Rational::from(1))
        );
        assert_eq!(
            SymbolicConstant::parse("cos2pi(1/2)").unwrap().as_rational(),
            Some(Rational::from(-1))
        );
    }

    #[test]
    fn evaluation_radius_is_tight() {
        for src in ["pi/2", "-log2/2", "sqrt2/2", "5*pi^5/1488", "sin2pi(1/5)"] {
            let c = SymbolicConstant::parse(src).unwrap();
            let b = c.eval(128);
            let mag = b.re.abs_upper_f64().max(1.0);
            assert!(b.re.rad() <= mag * 2f64.powi(8 - 128), "{src}: radius too wide");
        }
    }

    #[test]
    fn eval_matches_f64_references() {
        let cases: Vec<(&str, f64)> = vec![
            ("pi/2", std::f64::consts::FRAC_PI_2),
            ("-log2/2", -std::f64::consts::LN_2 / 2.0),
            ("sqrt2/2", std::f64::consts::FRAC_1_SQRT_2),
            ("pi^3/28", std::f64::consts::PI.powi(3) / 28.0),
            ("sin2pi(1/5)", (2.0 * std::f64::consts::PI / 5.0).sin()),
            ("cos2pi(1/8)", (std::f64::consts::PI / 4.0).cos()),
        ];
        for (src, expected) in cases {
            let b = SymbolicConstant::parse(src).unwrap().eval(128);
            assert!((b.re.to_f64() - expected).abs() < 1e-14, "{src}");
            assert!(b.im.is_exact_zero() || b.im.rad() == 0.0);
        }
    }
}
