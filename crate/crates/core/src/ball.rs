//! Midpoint-radius ball arithmetic on arbitrary-precision floats.
//!
//! Midpoints are MPFR floats rounded to nearest at the working precision;
//! radii are `f64` values combined with upward-rounded arithmetic, so every
//! operation returns a ball that contains the exact result whenever the
//! inputs contain theirs. Radii only ever grow through rounding.

use rug::float::{Constant, Round};
use rug::ops::{AssignRound, Pow};
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;
use std::fmt;

/// Smallest positive `f64`; radius underflow clamps here to stay sound.
const RAD_FLOOR: f64 = f64::MIN_POSITIVE;

/// Next representable `f64` upward. Upper bound for any value that rounded
/// to `x` under any rounding mode.
fn bump(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::INFINITY;
    }
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        return 0.0;
    }
    f64::from_bits(x.to_bits() + 1)
}

/// Next representable `f64` downward (safe lower bound after a rounded op).
fn next_down(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x == 0.0 {
        return -RAD_FLOOR;
    }
    if x > 0.0 {
        f64::from_bits(x.to_bits() - 1)
    } else {
        -f64::from_bits((-x).to_bits() + 1)
    }
}

fn ru_add(a: f64, b: f64) -> f64 {
    bump(a + b)
}

fn ru_mul(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    bump(a * b)
}

fn ru_div(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    bump(a / b)
}

/// Upper bound on 2^k as f64, clamped to stay sound at the extremes.
fn exp2_up(k: i64) -> f64 {
    if k < -1022 {
        return RAD_FLOOR;
    }
    if k > 1023 {
        return f64::INFINITY;
    }
    f64::from_bits(((k + 1023) as u64) << 52)
}

/// Upper bound on |f| as f64.
fn abs_up_f64(f: &Float) -> f64 {
    if f.is_zero() {
        return 0.0;
    }
    let d = f.to_f64_round(if f.is_sign_positive() { Round::Up } else { Round::Down });
    bump(d.abs())
}

/// Lower bound on |f| as f64.
fn abs_down_f64(f: &Float) -> f64 {
    if f.is_zero() {
        return 0.0;
    }
    let d = f.to_f64_round(if f.is_sign_positive() { Round::Down } else { Round::Up });
    let a = d.abs();
    if a == 0.0 {
        0.0
    } else {
        f64::from_bits(a.to_bits() - 1)
    }
}

/// A real ball: arbitrary-precision midpoint plus an `f64` error radius.
#[derive(Clone, Debug)]
pub struct Ball {
    mid: Float,
    rad: f64,
}

impl Ball {
    /// Exact zero at the given working precision.
    pub fn zero(prec: u32) -> Self {
        Ball { mid: Float::new(prec), rad: 0.0 }
    }

    pub fn one(prec: u32) -> Self {
        Ball { mid: Float::with_val(prec, 1), rad: 0.0 }
    }

    pub fn from_i64(prec: u32, v: i64) -> Self {
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(v, Round::Nearest);
        let rad = half_ulp(&mid, ord);
        Ball { mid, rad }
    }

    pub fn from_integer(prec: u32, v: &Integer) -> Self {
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(v, Round::Nearest);
        let rad = half_ulp(&mid, ord);
        Ball { mid, rad }
    }

    pub fn from_rational(prec: u32, v: &Rational) -> Self {
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(v, Round::Nearest);
        let rad = half_ulp(&mid, ord);
        Ball { mid, rad }
    }

    /// Ball for the quotient `num/den` of two exact integers; `den` must be nonzero.
    pub fn from_integer_quotient(prec: u32, num: &Integer, den: &Integer) -> Self {
        debug_assert!(*den != 0);
        let a = Ball::from_integer(prec, num);
        let b = Ball::from_integer(prec, den);
        a.div(&b)
    }

    /// Ball from an f64 midpoint and radius (both taken as exact).
    pub fn from_f64(prec: u32, mid: f64, rad: f64) -> Self {
        Ball { mid: Float::with_val(prec, mid), rad }
    }

    pub fn pi(prec: u32) -> Self {
        let (mid, ord) = Float::with_val_round(prec, Constant::Pi, Round::Nearest);
        let rad = half_ulp(&mid, ord);
        Ball { mid, rad }
    }

    pub fn log2(prec: u32) -> Self {
        let (mid, ord) = Float::with_val_round(prec, Constant::Log2, Round::Nearest);
        let rad = half_ulp(&mid, ord);
        Ball { mid, rad }
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec()
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> f64 {
        self.rad
    }

    pub fn is_finite(&self) -> bool {
        self.mid.is_finite() && self.rad.is_finite()
    }

    /// True when the ball is the single point 0.
    pub fn is_exact_zero(&self) -> bool {
        self.mid.is_zero() && self.rad == 0.0
    }

    /// Everything-ball used when an operation's result cannot be bounded.
    fn whole_line(prec: u32) -> Self {
        Ball { mid: Float::new(prec), rad: f64::INFINITY }
    }

    fn check(mut self) -> Self {
        if !self.mid.is_finite() {
            let prec = self.mid.prec();
            return Ball::whole_line(prec);
        }
        if self.rad.is_nan() {
            self.rad = f64::INFINITY;
        }
        self
    }

    pub fn neg(&self) -> Self {
        Ball { mid: Float::from(-self.mid.clone()), rad: self.rad }
    }

    pub fn abs(&self) -> Self {
        Ball { mid: self.mid.clone().abs(), rad: self.rad }
    }

    pub fn add(&self, rhs: &Ball) -> Self {
        if self.is_exact_zero() {
            return rhs.clone();
        }
        if rhs.is_exact_zero() {
            return self.clone();
        }
        let prec = self.prec().max(rhs.prec());
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(&self.mid + &rhs.mid, Round::Nearest);
        let rad = ru_add(ru_add(self.rad, rhs.rad), half_ulp(&mid, ord));
        Ball { mid, rad }.check()
    }

    pub fn sub(&self, rhs: &Ball) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Ball) -> Self {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return Ball::zero(self.prec().max(rhs.prec()));
        }
        let prec = self.prec().max(rhs.prec());
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(&self.mid * &rhs.mid, Round::Nearest);
        let a_hi = abs_up_f64(&self.mid);
        let b_hi = abs_up_f64(&rhs.mid);
        let rad = ru_add(
            ru_add(
                ru_add(ru_mul(a_hi, rhs.rad), ru_mul(b_hi, self.rad)),
                ru_mul(self.rad, rhs.rad),
            ),
            half_ulp(&mid, ord),
        );
        Ball { mid, rad }.check()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        let prec = self.prec();
        self.mul(&Ball::from_i64(prec, k))
    }

    pub fn div(&self, rhs: &Ball) -> Self {
        let prec = self.prec().max(rhs.prec());
        // The divisor ball must exclude zero.
        let b_lo = {
            let m = abs_down_f64(&rhs.mid);
            let lo = m - rhs.rad;
            if lo <= 0.0 { 0.0 } else { f64::from_bits(lo.to_bits() - 1) }
        };
        if b_lo <= 0.0 {
            return Ball::whole_line(prec);
        }
        if self.is_exact_zero() {
            return Ball::zero(prec);
        }
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(&self.mid / &rhs.mid, Round::Nearest);
        let q_hi = abs_up_f64(&mid);
        let rad = ru_add(
            ru_div(ru_add(self.rad, ru_mul(q_hi, rhs.rad)), b_lo),
            half_ulp(&mid, ord),
        );
        Ball { mid, rad }.check()
    }

    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        if self.is_exact_zero() {
            return Ball::zero(prec);
        }
        let lo = self.lower_f64();
        if lo < 0.0 {
            return Ball::whole_line(prec);
        }
        let mut mid = self.mid.clone();
        let ord = mid.sqrt_round(Round::Nearest);
        let rad = if self.rad == 0.0 {
            half_ulp(&mid, ord)
        } else if lo == 0.0 {
            // Interval touches zero: fall back to sqrt(rad) growth.
            ru_add(bump(self.rad.sqrt()), half_ulp(&mid, ord))
        } else {
            let s_lo = f64::from_bits(lo.sqrt().to_bits() - 1);
            ru_add(ru_div(self.rad, 2.0 * s_lo), half_ulp(&mid, ord))
        };
        Ball { mid, rad }.check()
    }

    pub fn exp(&self) -> Self {
        let mut mid = self.mid.clone();
        let ord = mid.exp_round(Round::Nearest);
        let rad = if self.rad == 0.0 {
            half_ulp(&mid, ord)
        } else {
            // |exp(x) - exp(m)| <= exp(m + r) * r; pad the f64 exp generously.
            let hi = ru_add(abs_up_f64(&self.mid).min(f64::MAX), self.rad);
            let mut e = hi.exp();
            for _ in 0..8 {
                e = bump(e);
            }
            ru_add(ru_mul(e, self.rad), half_ulp(&mid, ord))
        };
        Ball { mid, rad }.check()
    }

    pub fn ln(&self) -> Self {
        let prec = self.prec();
        let lo = self.lower_f64();
        if lo <= 0.0 {
            return Ball::whole_line(prec);
        }
        let mut mid = self.mid.clone();
        let ord = mid.ln_round(Round::Nearest);
        let rad = ru_add(ru_div(self.rad, lo), half_ulp(&mid, ord));
        Ball { mid, rad }.check()
    }

    pub fn sin(&self) -> Self {
        let mut mid = self.mid.clone();
        let ord = mid.sin_round(Round::Nearest);
        let rad = ru_add(self.rad, half_ulp(&mid, ord));
        Ball { mid, rad }.check()
    }

    pub fn cos(&self) -> Self {
        let mut mid = self.mid.clone();
        let ord = mid.cos_round(Round::Nearest);
        let rad = ru_add(self.rad, half_ulp(&mid, ord));
        Ball { mid, rad }.check()
    }

    /// Integer power with nonnegative exponent.
    pub fn pow_u32(&self, k: u32) -> Self {
        let prec = self.prec();
        if k == 0 {
            return Ball::one(prec);
        }
        if k == 1 {
            return self.clone();
        }
        if self.is_exact_zero() {
            return Ball::zero(prec);
        }
        let mut mid = Float::new(prec);
        let ord = mid.assign_round((&self.mid).pow(k), Round::Nearest);
        // |d/dx x^k| <= k * hi^(k-1) on the interval.
        let hi = ru_add(abs_up_f64(&self.mid), self.rad);
        let mut deriv = (k as f64) * hi.powi(k as i32 - 1);
        for _ in 0..8 {
            deriv = bump(deriv);
        }
        let rad = ru_add(ru_mul(deriv, self.rad), half_ulp(&mid, ord));
        Ball { mid, rad }.check()
    }

    /// Real power: self^e computed as exp(e * ln(self)); requires a positive ball.
    pub fn pow_ball(&self, e: &Ball) -> Self {
        self.ln().mul(e).exp()
    }

    /// Lower bound of the ball as f64 (midpoint lower bound minus radius).
    pub fn lower_f64(&self) -> f64 {
        let m = if self.mid.is_zero() {
            0.0
        } else {
            self.mid.to_f64_round(Round::Down)
        };
        next_down(m - self.rad)
    }

    /// Upper bound on |x| over the ball, as f64.
    pub fn abs_upper_f64(&self) -> f64 {
        ru_add(abs_up_f64(&self.mid), self.rad)
    }

    /// Lower bound on |x| over the ball (0 when the ball straddles zero).
    pub fn abs_lower_f64(&self) -> f64 {
        let lo = abs_down_f64(&self.mid) - self.rad;
        if lo <= 0.0 { 0.0 } else { f64::from_bits(lo.to_bits() - 1) }
    }

    pub fn contains_zero(&self) -> bool {
        self.abs_lower_f64() == 0.0
    }

    /// Rigorous containment test for an exact rational point.
    pub fn contains_rational(&self, q: &Rational) -> bool {
        if !self.is_finite() {
            return true;
        }
        // |mid - q| <= rad, decided in exact rational arithmetic.
        let m = self.mid.to_rational().expect("finite float");
        let diff = Rational::from(&m - q).abs();
        let rad = Rational::from_f64(self.rad).expect("finite radius");
        diff <= rad
    }

    /// Distance |mid - q| as an upper-bounded f64, for diagnostics.
    pub fn mid_distance_f64(&self, q: &Rational) -> f64 {
        let m = match self.mid.to_rational() {
            Some(m) => m,
            None => return f64::INFINITY,
        };
        let diff = Rational::from(&m - q).abs();
        let mut f = Float::new(64);
        f.assign_round(&diff, Round::Up);
        f.to_f64_round(Round::Up)
    }

    /// Midpoint as decimal string with the given number of significant digits.
    pub fn mid_to_string(&self, digits: usize) -> String {
        format_float(&self.mid, digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Round-trip the midpoint at a new precision (exact when growing).
    pub fn with_prec(&self, prec: u32) -> Self {
        let mut mid = Float::new(prec);
        let ord = mid.assign_round(&self.mid, Round::Nearest);
        let rad = ru_add(self.rad, half_ulp(&mid, ord));
        Ball { mid, rad }
    }
}

/// One full ulp of `mid` as an f64 upper bound, or 0 when the rounding was exact.
fn half_ulp(mid: &Float, ord: Ordering) -> f64 {
    if ord == Ordering::Equal {
        return 0.0;
    }
    match mid.get_exp() {
        // |mid| < 2^exp and the mantissa has prec bits, so ulp = 2^(exp-prec);
        // a nearest rounding is off by at most half that. We charge a full ulp.
        Some(exp) => exp2_up(exp as i64 - mid.prec() as i64),
        None => RAD_FLOOR,
    }
}

/// Decimal rendering without MPFR's default exponent-always style for small exponents.
pub fn format_float(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    if !f.is_finite() {
        return f.to_string();
    }
    let s = f.to_string_radix(10, Some(digits.max(2)));
    // rug prints e.g. "-3.333e-1"; normalize exponent marker.
    s.replace('@', "e")
}

impl fmt::Display for Ball {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[{} +/- {:.2e}]", format_float(&self.mid, 20), self.rad)
    }
}

/// A complex ball with independent real and imaginary components.
#[derive(Clone, Debug)]
pub struct CBall {
    pub re: Ball,
    pub im: Ball,
}

impl CBall {
    pub fn zero(prec: u32) -> Self {
        CBall { re: Ball::zero(prec), im: Ball::zero(prec) }
    }

    pub fn from_real(re: Ball) -> Self {
        let prec = re.prec();
        CBall { re, im: Ball::zero(prec) }
    }

    pub fn new(re: Ball, im: Ball) -> Self {
        CBall { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_exact_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn add(&self, rhs: &CBall) -> Self {
        CBall { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &CBall) -> Self {
        CBall { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn neg(&self) -> Self {
        CBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, rhs: &CBall) -> Self {
        if self.is_real() && rhs.is_real() {
            return CBall::from_real(self.re.mul(&rhs.re));
        }
        let re = self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        CBall { re, im }
    }

    /// Multiply by a real ball.
    pub fn mul_real(&self, rhs: &Ball) -> Self {
        CBall { re: self.re.mul(rhs), im: self.im.mul(rhs) }
    }

    pub fn div(&self, rhs: &CBall) -> Self {
        if rhs.is_real() {
            return CBall { re: self.re.div(&rhs.re), im: self.im.div(&rhs.re) };
        }
        // (a + bi)/(c + di) = (a + bi)(c - di) / (c^2 + d^2)
        let den = rhs.re.mul(&rhs.re).add(&rhs.im.mul(&rhs.im));
        let num = self.mul(&rhs.conj());
        CBall { re: num.re.div(&den), im: num.im.div(&den) }
    }

    pub fn conj(&self) -> Self {
        CBall { re: self.re.clone(), im: self.im.neg() }
    }

    /// Complex exponential.
    pub fn exp(&self) -> Self {
        if self.is_real() {
            return CBall::from_real(self.re.exp());
        }
        let scale = self.re.exp();
        CBall {
            re: scale.mul(&self.im.cos()),
            im: scale.mul(&self.im.sin()),
        }
    }

    /// Upper bound on the modulus over the ball.
    pub fn abs_upper_f64(&self) -> f64 {
        let a = self.re.abs_upper_f64();
        let b = self.im.abs_upper_f64();
        bump(a.hypot(b))
    }

    /// Largest component radius; "the" radius of the enclosure for reporting.
    pub fn rad(&self) -> f64 {
        self.re.rad().max(self.im.rad())
    }

    /// Upper bound on the distance between the two midpoints.
    pub fn mid_distance_f64(&self, rhs: &CBall) -> f64 {
        let dr = abs_up_f64(&Float::from(self.re.mid() - rhs.re.mid().clone()));
        let di = abs_up_f64(&Float::from(self.im.mid() - rhs.im.mid().clone()));
        bump(dr.hypot(di))
    }
}

impl fmt::Display for CBall {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(out, "{}", self.re)
        } else {
            write!(out, "{} + {}*i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_small_integers() {
        let a = Ball::from_i64(64, 3);
        let b = Ball::from_i64(64, 4);
        let c = a.add(&b);
        assert_eq!(c.rad(), 0.0);
        assert_eq!(c.mid().to_f64(), 7.0);
        let d = a.mul(&b);
        assert_eq!(d.rad(), 0.0);
        assert_eq!(d.mid().to_f64(), 12.0);
    }

    #[test]
    fn inexact_division_contains_truth() {
        let a = Ball::from_i64(64, 1);
        let b = Ball::from_i64(64, 3);
        let q = a.div(&b);
        assert!(q.rad() > 0.0);
        assert!(q.contains_rational(&Rational::from((1, 3))));
    }

    #[test]
    fn division_by_ball_containing_zero_is_unbounded() {
        let a = Ball::from_i64(64, 1);
        let b = Ball::from_f64(64, 0.5, 1.0);
        let q = a.div(&b);
        assert!(!q.is_finite());
    }

    #[test]
    fn sqrt2_squared_contains_two() {
        let two = Ball::from_i64(128, 2);
        let s = two.sqrt();
        let sq = s.mul(&s);
        assert!(sq.contains_rational(&Rational::from(2)));
        assert!(sq.rad() < 1e-35);
    }

    #[test]
    fn pi_matches_f64() {
        let pi = Ball::pi(128);
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!(pi.rad() < 1e-37);
    }

    #[test]
    fn exp_ln_roundtrip_contains() {
        let x = Ball::from_rational(128, &Rational::from((7, 5)));
        let y = x.exp().ln();
        assert!(y.contains_rational(&Rational::from((7, 5))));
    }

    #[test]
    fn radius_shrinks_with_precision() {
        let q = Rational::from((1, 7));
        let a = Ball::from_rational(64, &q);
        let b = Ball::from_rational(128, &q);
        assert!(b.rad() < a.rad());
        let sa = a.sqrt();
        let sb = b.sqrt();
        assert!(sb.rad() < sa.rad());
    }

    #[test]
    fn complex_product_in_gaussian_integers() {
        // (1 + i)^2 = 2i, exactly representable at any precision.
        let one = Ball::one(64);
        let z = CBall::new(one.clone(), one);
        let sq = z.mul(&z);
        assert!(sq.re.is_exact_zero());
        assert_eq!(sq.im.mid().to_f64(), 2.0);
        assert_eq!(sq.im.rad(), 0.0);
    }

    #[test]
    fn complex_exp_of_zero_is_one() {
        let z = CBall::zero(64);
        let e = z.exp();
        assert_eq!(e.re.mid().to_f64(), 1.0);
        assert!(e.im.is_exact_zero() || e.im.rad() == 0.0);
    }
}
