//! Exact complex values in cyclotomic fields.
//!
//! Sequence values here are rational multiples of roots of unity (and finite
//! sums of those, e.g. Gaussian rationals or partial sums), so exactness is
//! kept through products and sums instead of falling back to floats. A value
//! carries one of three representations: a scaled root of unity, a general
//! cyclotomic-field element, or a complex ball for genuinely inexact input.

use crate::ball::{Ball, CBall};
use crate::poly::Poly;
use rug::{Integer, Rational};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Hard cap on cyclotomic field orders; constructors validate against it.
pub const MAX_ORDER: u32 = 4096;

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The d-th cyclotomic polynomial, computed by dividing x^d - 1 by the
/// cyclotomic polynomials of the proper divisors of d.
pub fn cyclotomic_poly(d: u32) -> Poly {
    assert!(d >= 1 && d <= MAX_ORDER, "cyclotomic order {d} out of range");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let result = if d == 1 {
        Poly::from_coeffs(vec![Rational::from(-1), Rational::from(1)])
    } else {
        // x^d - 1
        let mut coeffs = vec![Rational::new(); d as usize + 1];
        coeffs[0] = Rational::from(-1);
        coeffs[d as usize] = Rational::from(1);
        let mut num = Poly::from_coeffs(coeffs);
        for e in 1..d {
            if d % e == 0 {
                let (q, r) = num.div_rem(&cyclotomic_poly(e));
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    cyclo_cache().lock().unwrap().insert(d, result.clone());
    result
}

/// An exact element of Q(zeta_d), stored as a polynomial in zeta_d reduced
/// modulo the d-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u32,
    poly: Poly,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, poly: Poly::zero() }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { order: 1, poly: Poly::constant(q) }
    }

    /// q * zeta_order^power, reduced.
    pub fn scaled_root(q: Rational, order: u32, power: u32) -> Self {
        assert!(order >= 1 && order <= MAX_ORDER, "order {order} out of range");
        let power = power % order;
        let mut coeffs = vec![Rational::new(); power as usize + 1];
        coeffs[power as usize] = q;
        Cyclotomic { order, poly: Poly::from_coeffs(coeffs) }.reduced()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn reduced(mut self) -> Self {
        let phi = cyclotomic_poly(self.order);
        if self.poly.degree().map_or(false, |d| d >= phi.degree().unwrap()) {
            self.poly = self.poly.div_rem(&phi).1;
        }
        if self.poly.is_constant() {
            self.order = 1;
        }
        self
    }

    /// Re-express in Q(zeta_target); `target` must be a multiple of the order.
    fn lift(&self, target: u32) -> Cyclotomic {
        if target == self.order {
            return self.clone();
        }
        debug_assert_eq!(target % self.order, 0);
        let k = (target / self.order) as usize;
        let src = self.poly.coeffs();
        let mut coeffs = vec![Rational::new(); src.len().saturating_sub(1) * k + 1];
        for (j, c) in src.iter().enumerate() {
            if c.cmp0() != Ordering::Equal {
                coeffs[j * k] = c.clone();
            }
        }
        Cyclotomic { order: target, poly: Poly::from_coeffs(coeffs) }.reduced()
    }

    fn common_order(&self, rhs: &Cyclotomic) -> u32 {
        let l = lcm_u32(self.order, rhs.order);
        assert!(l <= MAX_ORDER, "cyclotomic order {l} exceeds cap {MAX_ORDER}");
        l
    }

    pub fn add(&self, rhs: &Cyclotomic) -> Cyclotomic {
        let l = self.common_order(rhs);
        let a = self.lift(l);
        let b = rhs.lift(l);
        Cyclotomic { order: l, poly: a.poly.add(&b.poly) }.reduced()
    }

    pub fn sub(&self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { order: self.order, poly: self.poly.neg() }
    }

    pub fn mul(&self, rhs: &Cyclotomic) -> Cyclotomic {
        let l = self.common_order(rhs);
        let a = self.lift(l);
        let b = rhs.lift(l);
        Cyclotomic { order: l, poly: a.poly.mul(&b.poly) }.reduced()
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic { order: self.order, poly: self.poly.scale(q) }.reduced()
    }

    /// Complex conjugate: zeta^j -> zeta^(order-j).
    pub fn conj(&self) -> Cyclotomic {
        if self.order == 1 {
            return self.clone();
        }
        let l = self.order;
        let mut coeffs = vec![Rational::new(); l as usize];
        for (j, c) in self.poly.coeffs().iter().enumerate() {
            if c.cmp0() != Ordering::Equal {
                let idx = if j == 0 { 0 } else { l as usize - j };
                coeffs[idx] += c;
            }
        }
        Cyclotomic { order: l, poly: Poly::from_coeffs(coeffs) }.reduced()
    }

    /// |z|^2 as an exact cyclotomic (always a real algebraic number).
    pub fn abs_sq(&self) -> Cyclotomic {
        self.mul(&self.conj())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.poly.is_constant() {
            Some(self.poly.coeff(0))
        } else {
            None
        }
    }

    pub fn equals(&self, rhs: &Cyclotomic) -> bool {
        let l = self.common_order(rhs);
        self.lift(l).poly == rhs.lift(l).poly
    }

    /// Complex enclosure: sum of coefficient * (cos, sin)(2*pi*j/order).
    pub fn to_cball(&self, prec: u32) -> CBall {
        let mut re = Ball::zero(prec);
        let mut im = Ball::zero(prec);
        for (j, c) in self.poly.coeffs().iter().enumerate() {
            if c.cmp0() == Ordering::Equal {
                continue;
            }
            let cb = Ball::from_rational(prec, c);
            let (cos_b, sin_b) = root_unit_cball(prec, self.order, j as u32);
            re = re.add(&cb.mul(&cos_b));
            im = im.add(&cb.mul(&sin_b));
        }
        CBall::new(re, im)
    }
}

/// (cos, sin) of 2*pi*power/order as balls; quarter-turn angles are exact.
pub fn root_unit_cball(prec: u32, order: u32, power: u32) -> (Ball, Ball) {
    let power = power % order;
    match (4u64 * u64::from(power)) % (4 * u64::from(order)) {
        k if k == 0 => return (Ball::one(prec), Ball::zero(prec)),
        k if k == u64::from(order) => return (Ball::zero(prec), Ball::one(prec)),
        k if k == 2 * u64::from(order) => return (Ball::from_i64(prec, -1), Ball::zero(prec)),
        k if k == 3 * u64::from(order) => return (Ball::zero(prec), Ball::from_i64(prec, -1)),
        _ => {}
    }
    let theta = Ball::pi(prec)
        .mul(&Ball::from_rational(prec, &Rational::from((2 * u64::from(power), u64::from(order)))));
    (theta.cos(), theta.sin())
}

/// Heuristic lower bound on |z| over a complex ball (used only to order
/// `Approx` values against a rational bound).
fn cball_abs_lower(b: &CBall) -> f64 {
    let mr = b.re.mid().to_f64().abs();
    let mi = b.im.mid().to_f64().abs();
    let mid = mr.hypot(mi) * (1.0 - 1e-13);
    let rad = b.re.rad().hypot(b.im.rad()) * (1.0 + 1e-13);
    (mid - rad).max(0.0)
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    let g = gcd_u32(a, b);
    a / g * b
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An exact-or-enclosed complex number used for sequence values and their
/// partial sums. The `Root` and `Sum` variants are exact and closed under
/// products; `Approx` only arises from explicitly inexact input.
#[derive(Clone, Debug)]
pub enum CycloValue {
    /// scale * zeta_order^power in canonical form: scale > 0 (or the value is
    /// zero), power < order, gcd(power, order) = 1 (sign folds into the root).
    Root { scale: Rational, order: u32, power: u32 },
    /// A general exact cyclotomic-field element.
    Sum(Cyclotomic),
    /// Complex ball fallback for inexact input.
    Approx(Box<CBall>),
}

impl CycloValue {
    pub fn zero() -> Self {
        CycloValue::Root { scale: Rational::new(), order: 1, power: 0 }
    }

    pub fn one() -> Self {
        CycloValue::from_rational(Rational::from(1))
    }

    pub fn from_rational(q: Rational) -> Self {
        if q.cmp0() == Ordering::Less {
            CycloValue::Root { scale: -q, order: 2, power: 1 }
        } else {
            CycloValue::Root { scale: q, order: 1, power: 0 }
        }
    }

    pub fn from_i64(v: i64) -> Self {
        CycloValue::from_rational(Rational::from(v))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        CycloValue::Root { scale: Rational::from(1), order: 4, power: 1 }
    }

    /// q * zeta_d^m.
    pub fn scaled_root(q: Rational, d: u32, m: u32) -> Self {
        assert!(d >= 1 && d <= MAX_ORDER, "root order {d} out of range");
        Self::canonical_root(q, d, m)
    }

    pub fn root_of_unity(d: u32, m: u32) -> Self {
        Self::scaled_root(Rational::from(1), d, m)
    }

    pub fn gaussian(re: Rational, im: Rational) -> Self {
        if im.cmp0() == Ordering::Equal {
            return CycloValue::from_rational(re);
        }
        if re.cmp0() == Ordering::Equal {
            // pure imaginary: q*i = q*zeta_4
            return Self::canonical_root(im, 4, 1);
        }
        let c = Cyclotomic::from_rational(re)
            .add(&Cyclotomic::scaled_root(im, 4, 1));
        CycloValue::Sum(c)
    }

    /// Inexact input as a complex ball.
    pub fn approx(re: f64, im: f64, prec: u32) -> Self {
        CycloValue::Approx(Box::new(CBall::new(
            Ball::from_f64(prec, re, 0.0),
            Ball::from_f64(prec, im, 0.0),
        )))
    }

    fn canonical_root(scale: Rational, order: u32, power: u32) -> Self {
        if scale.cmp0() == Ordering::Equal {
            return CycloValue::zero();
        }
        let mut order = order;
        let mut power = power % order;
        let mut scale = scale;
        if scale.cmp0() == Ordering::Less {
            // Fold -1 = zeta_2 into the phase.
            scale = -scale;
            let l = lcm_u32(order, 2);
            assert!(l <= MAX_ORDER, "root order {l} exceeds cap");
            power = (power * (l / order) + l / 2) % l;
            order = l;
        }
        if power == 0 {
            return CycloValue::Root { scale, order: 1, power: 0 };
        }
        let g = gcd_u32(power, order);
        CycloValue::Root { scale, order: order / g, power: power / g }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, CycloValue::Approx(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            CycloValue::Root { scale, .. } => scale.cmp0() == Ordering::Equal,
            CycloValue::Sum(c) => c.is_zero(),
            CycloValue::Approx(b) => b.re.is_exact_zero() && b.im.is_exact_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, CycloValue::Root { scale, order: 1, .. } if *scale == 1u32)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            CycloValue::Root { scale, order: 1, .. } => Some(scale.clone()),
            CycloValue::Root { scale, order: 2, power: 1 } => Some(Rational::from(-scale.clone())),
            CycloValue::Root { .. } => None,
            CycloValue::Sum(c) => c.as_rational(),
            CycloValue::Approx(_) => None,
        }
    }

    fn to_cyclotomic(&self) -> Option<Cyclotomic> {
        match self {
            CycloValue::Root { scale, order, power } => {
                Some(Cyclotomic::scaled_root(scale.clone(), *order, *power))
            }
            CycloValue::Sum(c) => Some(c.clone()),
            CycloValue::Approx(_) => None,
        }
    }

    pub fn mul(&self, rhs: &CycloValue) -> CycloValue {
        match (self, rhs) {
            (
                CycloValue::Root { scale: s1, order: d1, power: m1 },
                CycloValue::Root { scale: s2, order: d2, power: m2 },
            ) => {
                let scale = Rational::from(s1 * s2);
                if scale.cmp0() == Ordering::Equal {
                    return CycloValue::zero();
                }
                let l = lcm_u32(*d1, *d2);
                assert!(l <= MAX_ORDER, "root order {l} exceeds cap");
                let power = (u64::from(*m1) * u64::from(l / d1)
                    + u64::from(*m2) * u64::from(l / d2))
                    % u64::from(l);
                Self::canonical_root(scale, l, power as u32)
            }
            (CycloValue::Approx(a), _) => {
                let prec = a.prec();
                CycloValue::Approx(Box::new(a.mul(&rhs.to_cball(prec))))
            }
            (_, CycloValue::Approx(b)) => {
                let prec = b.prec();
                CycloValue::Approx(Box::new(self.to_cball(prec).mul(b)))
            }
            _ => {
                let a = self.to_cyclotomic().expect("exact");
                let b = rhs.to_cyclotomic().expect("exact");
                CycloValue::from_cyclotomic(a.mul(&b))
            }
        }
    }

    pub fn add(&self, rhs: &CycloValue) -> CycloValue {
        match (self, rhs) {
            (CycloValue::Approx(a), _) => {
                let prec = a.prec();
                CycloValue::Approx(Box::new(a.add(&rhs.to_cball(prec))))
            }
            (_, CycloValue::Approx(b)) => {
                let prec = b.prec();
                CycloValue::Approx(Box::new(self.to_cball(prec).add(b)))
            }
            _ => {
                let a = self.to_cyclotomic().expect("exact");
                let b = rhs.to_cyclotomic().expect("exact");
                CycloValue::from_cyclotomic(a.add(&b))
            }
        }
    }

    pub fn neg(&self) -> CycloValue {
        match self {
            CycloValue::Root { scale, order, power } => {
                Self::canonical_root(Rational::from(-scale.clone()), *order, *power)
            }
            CycloValue::Sum(c) => CycloValue::from_cyclotomic(c.neg()),
            CycloValue::Approx(b) => CycloValue::Approx(Box::new(b.neg())),
        }
    }

    pub fn sub(&self, rhs: &CycloValue) -> CycloValue {
        self.add(&rhs.neg())
    }

    pub fn conj(&self) -> CycloValue {
        match self {
            CycloValue::Root { scale, order, power } => {
                let p = if *power == 0 { 0 } else { order - power };
                CycloValue::Root { scale: scale.clone(), order: *order, power: p }
            }
            CycloValue::Sum(c) => CycloValue::from_cyclotomic(c.conj()),
            CycloValue::Approx(b) => CycloValue::Approx(Box::new(b.conj())),
        }
    }

    pub fn pow(&self, k: u32) -> CycloValue {
        let mut acc = CycloValue::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn from_cyclotomic(c: Cyclotomic) -> CycloValue {
        if let Some(q) = c.as_rational() {
            return CycloValue::from_rational(q);
        }
        // Detect a single reduced-basis monomial c*zeta^j.
        let nz: Vec<usize> = c
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, q)| q.cmp0() != Ordering::Equal)
            .map(|(j, _)| j)
            .collect();
        if nz.len() == 1 {
            let j = nz[0];
            return Self::canonical_root(c.poly.coeff(j), c.order, j as u32);
        }
        CycloValue::Sum(c)
    }

    /// Exact modulus when one is representable as a rational: always available
    /// for `Root` values, and for sums whose |z|^2 is a rational perfect square.
    pub fn abs_exact(&self) -> Option<Rational> {
        match self {
            CycloValue::Root { scale, .. } => Some(scale.clone()),
            CycloValue::Sum(c) => {
                let sq = c.abs_sq().as_rational()?;
                rational_sqrt(&sq)
            }
            CycloValue::Approx(_) => None,
        }
    }

    /// Compare |z| against a nonnegative rational bound, refining a ball
    /// enclosure until the comparison is decided when no exact route exists.
    /// Returns `None` only for `Approx` values whose enclosure straddles the bound.
    pub fn abs_cmp(&self, bound: &Rational) -> Option<Ordering> {
        if let Some(a) = self.abs_exact() {
            return Some(a.cmp(bound));
        }
        match self {
            CycloValue::Approx(b) => {
                let bf = bound.to_f64();
                let hi = b.abs_upper_f64();
                let lo = cball_abs_lower(b);
                if hi < bf {
                    Some(Ordering::Less)
                } else if lo > bf {
                    Some(Ordering::Greater)
                } else {
                    None
                }
            }
            CycloValue::Sum(c) => {
                // |z|^2 - bound^2 is a nonzero real algebraic number here
                // (a zero difference would make |z|^2 rational and take the
                // exact route), so refinement terminates.
                let diff = c.abs_sq().sub(&Cyclotomic::from_rational(Rational::from(bound * bound)));
                let mut prec = 64;
                loop {
                    let ball = diff.to_cball(prec).re;
                    if ball.abs_lower_f64() > 0.0 {
                        return Some(if ball.mid().is_sign_positive() {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        });
                    }
                    prec *= 2;
                    assert!(prec <= 1 << 16, "abs comparison failed to converge");
                }
            }
            CycloValue::Root { .. } => unreachable!(),
        }
    }

    pub fn to_cball(&self, prec: u32) -> CBall {
        match self {
            CycloValue::Root { scale, order, power } => {
                let s = Ball::from_rational(prec, scale);
                let (c, si) = root_unit_cball(prec, *order, *power);
                CBall::new(s.mul(&c), s.mul(&si))
            }
            CycloValue::Sum(c) => c.to_cball(prec),
            CycloValue::Approx(b) => CBall::new(b.re.with_prec(prec), b.im.with_prec(prec)),
        }
    }

    /// Structural equality for exact values; `Approx` values compare by
    /// midpoint/radius identity.
    pub fn equals(&self, rhs: &CycloValue) -> bool {
        match (self.to_cyclotomic(), rhs.to_cyclotomic()) {
            (Some(a), Some(b)) => a.equals(&b),
            (None, None) => {
                if let (CycloValue::Approx(a), CycloValue::Approx(b)) = (self, rhs) {
                    a.re.mid() == b.re.mid()
                        && a.im.mid() == b.im.mid()
                        && a.re.rad() == b.re.rad()
                        && a.im.rad() == b.im.rad()
                } else {
                    false
                }
            }
            _ => false,
        }
    }

    /// The real and imaginary parts as exact rationals, when available.
    pub fn to_gaussian(&self) -> Option<(Rational, Rational)> {
        let c = self.to_cyclotomic()?;
        if let Some(q) = c.as_rational() {
            return Some((q, Rational::new()));
        }
        let lifted = c.lift_to_gaussian()?;
        Some(lifted)
    }
}

impl Cyclotomic {
    /// For order-4 elements: (re, im) parts. Others return None unless rational.
    fn lift_to_gaussian(&self) -> Option<(Rational, Rational)> {
        if self.order == 4 {
            // basis 1, zeta_4 = i
            Some((self.poly.coeff(0), self.poly.coeff(1)))
        } else {
            None
        }
    }
}

/// sqrt of a nonnegative rational, when it is itself rational.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.cmp0() == Ordering::Less {
        return None;
    }
    let num = q.numer();
    let den = q.denom();
    let ns = Integer::from(num.sqrt_ref());
    let ds = Integer::from(den.sqrt_ref());
    if Integer::from(&ns * &ns) == *num && Integer::from(&ds * &ds) == *den {
        Some(Rational::from((ns, ds)))
    } else {
        None
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloValue::Root { scale, order, power } => match (order, power) {
                (1, _) => write!(out, "{}", scale),
                (2, 1) => write!(out, "-{}", scale),
                (4, 1) => {
                    if *scale == 1u32 {
                        write!(out, "i")
                    } else {
                        write!(out, "{}*i", scale)
                    }
                }
                (4, 3) => {
                    if *scale == 1u32 {
                        write!(out, "-i")
                    } else {
                        write!(out, "-{}*i", scale)
                    }
                }
                (d, m) => {
                    if *scale == 1u32 {
                        write!(out, "zeta({},{})", d, m)
                    } else {
                        write!(out, "{}*zeta({},{})", scale, d, m)
                    }
                }
            },
            CycloValue::Sum(c) => {
                if let Some((re, im)) = self.to_gaussian() {
                    let sign = if im.cmp0() == Ordering::Less { "-" } else { "+" };
                    return write!(out, "{}{}{}*i", re, sign, im.abs());
                }
                write!(out, "cyclotomic(order={})", c.order)
            }
            CycloValue::Approx(b) => write!(out, "{}", b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys_are_classical() {
        let p1 = cyclotomic_poly(1);
        assert_eq!(p1.coeffs().len(), 2);
        // Phi_4 = x^2 + 1
        let p4 = cyclotomic_poly(4);
        assert_eq!(p4, Poly::from_coeffs(vec![1.into(), 0.into(), 1.into()]));
        // Phi_6 = x^2 - x + 1
        let p6 = cyclotomic_poly(6);
        assert_eq!(p6, Poly::from_coeffs(vec![1.into(), (-1).into(), 1.into()]));
        // Phi_5 = x^4 + x^3 + x^2 + x + 1
        assert_eq!(cyclotomic_poly(5).coeffs().len(), 5);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycloValue::i();
        let sq = i.mul(&i);
        assert_eq!(sq.as_rational(), Some(Rational::from(-1)));
    }

    #[test]
    fn zeta6_squared_is_zeta3() {
        let z6 = CycloValue::root_of_unity(6, 1);
        let sq = z6.mul(&z6);
        assert!(sq.equals(&CycloValue::root_of_unity(3, 1)));
    }

    #[test]
    fn zeta5_to_the_fifth_is_one() {
        let z = CycloValue::root_of_unity(5, 1);
        assert!(z.pow(5).is_one());
        // sum of all fifth roots vanishes
        let mut s = CycloValue::zero();
        for m in 0..5 {
            s = s.add(&CycloValue::root_of_unity(5, m));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn products_of_exact_values_stay_exact() {
        let a = CycloValue::scaled_root(Rational::from((2, 3)), 8, 3);
        let b = CycloValue::gaussian(Rational::from(1), Rational::from(1));
        let c = a.mul(&b);
        assert!(c.is_exact());
        let d = b.mul(&b).mul(&b);
        assert!(d.is_exact());
    }

    #[test]
    fn modulus_of_unit_root_is_exactly_one() {
        let z = CycloValue::root_of_unity(5, 2);
        assert_eq!(z.abs_exact(), Some(Rational::from(1)));
        let w = CycloValue::i().mul(&CycloValue::from_i64(-1));
        assert_eq!(w.abs_exact(), Some(Rational::from(1)));
    }

    #[test]
    fn gaussian_modulus_three_four_five() {
        let z = CycloValue::gaussian(Rational::from((3, 5)), Rational::from((4, 5)));
        assert_eq!(z.abs_exact(), Some(Rational::from(1)));
    }

    #[test]
    fn abs_cmp_of_one_plus_zeta5() {
        // |1 + zeta_5| = 2 cos(pi/5) ~ 1.618 > 1, irrational modulus.
        let z = CycloValue::one().add(&CycloValue::root_of_unity(5, 1));
        assert!(z.abs_exact().is_none());
        assert_eq!(z.abs_cmp(&Rational::from(1)), Some(Ordering::Greater));
        assert_eq!(z.abs_cmp(&Rational::from(2)), Some(Ordering::Less));
    }

    #[test]
    fn enclosure_contains_value() {
        let z = CycloValue::root_of_unity(3, 1);
        let b = z.to_cball(128);
        // zeta_3 = -1/2 + sqrt(3)/2 i
        assert!(b.re.contains_rational(&Rational::from((-1, 2))));
        assert!((b.im.to_f64() - 0.8660254037844386).abs() < 1e-12);
    }

    #[test]
    fn quarter_turn_enclosures_are_exact() {
        let b = CycloValue::i().to_cball(64);
        assert!(b.re.is_exact_zero());
        assert_eq!(b.im.rad(), 0.0);
        let m = CycloValue::from_i64(-1).to_cball(64);
        assert_eq!(m.re.rad(), 0.0);
        assert!(m.im.is_exact_zero());
    }

    #[test]
    fn conj_times_self_is_abs_squared() {
        let z = CycloValue::gaussian(Rational::from(2), Rational::from(-3));
        let n = z.mul(&z.conj());
        assert_eq!(n.as_rational(), Some(Rational::from(13)));
    }
}
