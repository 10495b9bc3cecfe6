//! Dense univariate polynomials over the rationals.
//!
//! Internal plumbing for rational functions and cyclotomic reduction. The
//! coefficient vector never has a trailing zero; the zero polynomial is the
//! empty vector.

use rug::{Integer, Rational};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly { coeffs: vec![Rational::new(), Rational::from(1)] }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.cmp0() == Ordering::Equal) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1u32
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(Rational::from(self.coeff(i) + rhs.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(Rational::from(self.coeff(i) - rhs.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| Rational::from(-c.clone())).collect() }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == Ordering::Equal {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.cmp0() == Ordering::Equal {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect() }
    }

    /// Euclidean division: returns (quotient, remainder) with deg rem < deg rhs.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let d = rhs.degree().unwrap();
        let lead_inv = Rational::from(rhs.leading_coeff().recip_ref());
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::new(); rem.len() - d];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let q = Rational::from(rem.last().unwrap() * &lead_inv);
            if q.cmp0() != Ordering::Equal {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    let t = Rational::from(&q * b);
                    rem[k + j] -= t;
                }
            }
            quot[k] = q;
            // The leading entry is now exactly zero by construction.
            rem.pop();
            while rem.len() > d && rem.last().map_or(false, |c| c.cmp0() == Ordering::Equal) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (Euclid over Q[x]).
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = Rational::from(a.leading_coeff().recip_ref());
        a.scale(&inv)
    }

    /// Evaluate at a rational point (Horner).
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Evaluate at an integer point; valid only for integer-coefficient polynomials.
    pub fn eval_int(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            debug_assert_eq!(*c.denom(), 1);
            acc *= x;
            acc += c.numer();
        }
        acc
    }

    /// Substitute x -> a*x + b.
    pub fn compose_affine(&self, a: u64, b: u64) -> Poly {
        let lin = Poly::from_coeffs(vec![Rational::from(b), Rational::from(a)]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc = acc.add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
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

    /// Least common multiple of the coefficient denominators.
    pub fn denom_lcm(&self) -> Integer {
        let mut l = Integer::from(1);
        for c in &self.coeffs {
            l.lcm_mut(c.denom());
        }
        l
    }

    /// Gcd of the coefficient numerators, for an integer-coefficient polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            debug_assert_eq!(*c.denom(), 1);
            g.gcd_mut(c.numer());
        }
        g
    }

    /// All nonnegative integer roots, in increasing order.
    ///
    /// Candidates are 0 plus the divisors of the constant term that fall under
    /// the Cauchy root bound; divisors come from trial-division factoring, with
    /// any cofactor left after 10^6 treated as prime (roots that are products of
    /// two primes above 10^6 would have to exceed 10^12 and the Cauchy bound to
    /// be missed).
    pub fn nonneg_integer_roots(&self) -> Vec<u64> {
        if self.is_zero() {
            return Vec::new();
        }
        // Work on the integer form.
        let l = self.denom_lcm();
        let scaled: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| Integer::from(c.numer() * &l) / c.denom())
            .collect();
        let mut roots = Vec::new();
        // Factor out x^k.
        let k = scaled.iter().position(|c| *c != 0).unwrap_or(0);
        if k > 0 {
            roots.push(0);
        }
        let poly = &scaled[k..];
        if poly.len() <= 1 {
            roots.sort_unstable();
            return roots;
        }
        let c0 = poly[0].clone().abs();
        let lead = poly.last().unwrap().clone().abs();
        // Cauchy bound: 1 + max |c_i| / |lead|.
        let mut max_c = Integer::new();
        for c in poly.iter() {
            let a = Integer::from(c.abs_ref());
            if a > max_c {
                max_c = a;
            }
        }
        let bound = Integer::from(&max_c / &lead) + 2u32;
        for d in divisors_up_to(&c0, &bound) {
            let x = Integer::from(d);
            let mut acc = Integer::new();
            for c in poly.iter().rev() {
                acc *= &x;
                acc += c;
            }
            if acc == 0 {
                roots.push(d);
            }
        }
        roots.sort_unstable();
        roots.dedup();
        roots
    }
}

/// Positive divisors of |n| that are <= bound and fit in u64.
fn divisors_up_to(n: &Integer, bound: &Integer) -> Vec<u64> {
    let mut rem = Integer::from(n.abs_ref());
    if rem == 0 {
        return Vec::new();
    }
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let mut p = 2u32;
    while u64::from(p) * u64::from(p) <= rem && p <= 1_000_000 {
        if rem.is_divisible_u(p) {
            let mut e = 0u32;
            while rem.is_divisible_u(p) {
                rem.div_exact_u_mut(p);
                e += 1;
            }
            factors.push((Integer::from(p), e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rem != 1 {
        factors.push((rem, 1));
    }
    let mut divs: Vec<Integer> = vec![Integer::from(1)];
    for (p, e) in &factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            for i in 0..=*e {
                if cur > *bound {
                    break;
                }
                next.push(cur.clone());
                if i < *e {
                    cur *= p;
                }
            }
        }
        next.sort();
        next.dedup();
        divs = next;
        if divs.len() > 200_000 {
            break;
        }
    }
    divs.into_iter().filter_map(|d| d.to_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_i(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly_i(&[1, 0, -3, 2, 5]);
        let b = poly_i(&[2, 1, 1]);
        let (q, r) = a.div_rem(&b);
        let back = q.mul(&b).add(&r);
        assert_eq!(back, a);
        assert!(r.degree().map_or(true, |d| d < 2));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x+2) and (x+1)(x+3) share x+1.
        let a = poly_i(&[2, 3, 1]);
        let b = poly_i(&[3, 4, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, poly_i(&[1, 1]));
    }

    #[test]
    fn compose_affine_matches_pointwise() {
        let p = poly_i(&[1, -2, 0, 4]);
        let q = p.compose_affine(3, 5);
        for n in 0..6u64 {
            let direct = p.eval(&Rational::from(3 * n + 5));
            let composed = q.eval(&Rational::from(n));
            assert_eq!(direct, composed);
        }
    }

    #[test]
    fn integer_roots_found() {
        // x(x-3)(x-10) = x^3 - 13x^2 + 30x
        let p = poly_i(&[0, 30, -13, 1]);
        assert_eq!(p.nonneg_integer_roots(), vec![0, 3, 10]);
        // (x+1)(x+2): no nonnegative roots
        let q = poly_i(&[2, 3, 1]);
        assert!(q.nonneg_integer_roots().is_empty());
        // 2n(2n+1)(2n+2) = 8n^3+12n^2+4n: root only at 0
        let r = poly_i(&[0, 4, 12, 8]);
        assert_eq!(r.nonneg_integer_roots(), vec![0]);
    }

    #[test]
    fn eval_int_matches_eval() {
        let p = poly_i(&[7, -5, 1]);
        for n in 0..10u64 {
            let a = p.eval_int(&Integer::from(n));
            let b = p.eval(&Rational::from(n));
            assert_eq!(Rational::from(a), b);
        }
    }
}
