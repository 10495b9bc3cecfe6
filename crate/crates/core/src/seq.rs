//! The sequence families that twist the series.
//!
//! Strongly B-multiplicative sequences (value at n is the product of values
//! at its base-B digits), digit and block counters, and the two recurrence
//! sequences: paperfolding v(2n) = (-1)^n, v(2n+1) = v(n), and
//! Golay-Shapiro-Rudin r(2n) = r(n), r(2n+1) = (-1)^n r(n).

use crate::cyclo::CycloValue;
use crate::error::{ParseError, SequenceError};
use rug::Rational;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

/// A strongly B-multiplicative sequence: u(0) = 1 and u(Bn+k) = u(n)u(k).
#[derive(Clone, Debug)]
pub struct StrongMultSeq {
    base: u64,
    values: Vec<CycloValue>,
    bounded_by_one: bool,
    lemma_ok: bool,
}

impl StrongMultSeq {
    /// Build from the digit values [u(0), ..., u(B-1)]; u(0) must be 1.
    /// The convergence flags are recomputed here, never taken on trust.
    pub fn new(base: u64, values: Vec<CycloValue>) -> Result<Self, SequenceError> {
        if base < 2 {
            return Err(SequenceError::BadBase(base));
        }
        if values.len() != base as usize {
            return Err(SequenceError::WrongValueCount {
                expected: base as usize,
                got: values.len(),
            });
        }
        if !values[0].is_one() {
            return Err(SequenceError::UnitValueRequired);
        }
        let one = Rational::from(1);
        let bounded_by_one = values
            .iter()
            .all(|v| matches!(v.abs_cmp(&one), Some(Ordering::Less) | Some(Ordering::Equal)));
        let degenerate = values.iter().skip(1).all(|v| v.is_zero());
        let sum = values.iter().fold(CycloValue::zero(), |acc, v| acc.add(v));
        let below_base = matches!(sum.abs_cmp(&Rational::from(base)), Some(Ordering::Less));
        let lemma_ok = below_base && !degenerate;
        Ok(StrongMultSeq { base, values, bounded_by_one, lemma_ok })
    }

    /// (-1)^(s_B(n)): digit values u(k) = (-1)^k.
    pub fn sign_digit_sum(base: u64) -> Self {
        let values = (0..base)
            .map(|k| CycloValue::from_i64(if k % 2 == 0 { 1 } else { -1 }))
            .collect();
        StrongMultSeq::new(base, values).expect("valid by construction")
    }

    /// (-1)^(N_{j,B}(n)) for j != 0: u(j) = -1, all other digits +1.
    pub fn sign_digit_count(base: u64, digit: u64) -> Result<Self, SequenceError> {
        if digit == 0 || digit >= base {
            return Err(SequenceError::DigitOutOfRange { digit, base });
        }
        let values = (0..base)
            .map(|k| CycloValue::from_i64(if k == digit { -1 } else { 1 }))
            .collect();
        StrongMultSeq::new(base, values)
    }

    /// a^(s_B(n)) for an exact base value a.
    pub fn power_of_digit_sum(base: u64, a: CycloValue) -> Result<Self, SequenceError> {
        let mut values = Vec::with_capacity(base as usize);
        let mut cur = CycloValue::one();
        for _ in 0..base {
            values.push(cur.clone());
            cur = cur.mul(&a);
        }
        StrongMultSeq::new(base, values)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn values(&self) -> &[CycloValue] {
        &self.values
    }

    /// |u(k)| <= 1 for every digit value (recomputed at construction).
    pub fn bounded_by_one(&self) -> bool {
        self.bounded_by_one
    }

    /// |sum u(k)| < B and the sequence is not (1, 0, 0, ...).
    pub fn lemma_ok(&self) -> bool {
        self.lemma_ok
    }

    /// Sum of the digit values.
    pub fn digit_value_sum(&self) -> CycloValue {
        self.values.iter().fold(CycloValue::zero(), |acc, v| acc.add(v))
    }

    /// u(n) = product of u(d) over the base-B digits d of n; u(0) = 1
    /// (the expansion of 0 is empty).
    pub fn eval(&self, n: u64) -> CycloValue {
        let mut acc = CycloValue::one();
        let mut m = n;
        while m > 0 {
            let d = (m % self.base) as usize;
            m /= self.base;
            if !self.values[d].is_one() {
                acc = acc.mul(&self.values[d]);
            }
        }
        acc
    }

    /// Exact partial sum over n < limit using the base-B self-similarity:
    /// grouping by the first digit position where n drops below limit gives
    /// sum_{n<N} u(n) = sum_i (prod of u over higher digits of N)
    ///                  * (sum_{c < d_i} u(c)) * sigma^i.
    pub fn partial_sum(&self, limit: u64) -> CycloValue {
        if limit == 0 {
            return CycloValue::zero();
        }
        let mut digits = Vec::new();
        let mut m = limit;
        while m > 0 {
            digits.push((m % self.base) as usize);
            m /= self.base;
        }
        let sigma = self.digit_value_sum();
        // prefix sums of values: below[d] = u(0) + ... + u(d-1)
        let mut below = Vec::with_capacity(self.base as usize + 1);
        below.push(CycloValue::zero());
        for v in &self.values {
            let last = below.last().unwrap().clone();
            below.push(last.add(v));
        }
        let mut total = CycloValue::zero();
        let mut prefix = CycloValue::one();
        let mut sigma_pow: Vec<CycloValue> = Vec::with_capacity(digits.len());
        sigma_pow.push(CycloValue::one());
        for i in 1..digits.len() {
            let prev = sigma_pow[i - 1].clone();
            sigma_pow.push(prev.mul(&sigma));
        }
        for (idx, &d) in digits.iter().enumerate().rev() {
            if d > 0 {
                total = total.add(&prefix.mul(&below[d]).mul(&sigma_pow[idx]));
            }
            prefix = prefix.mul(&self.values[d]);
        }
        total
    }
}

/// Which +/-1 recurrence sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceKind {
    Paperfolding,
    GolayShapiroRudin,
}

/// Memoized terms below this bound live in a dense per-kind table.
const DENSE_LIMIT: u64 = 1 << 16;

fn dense_table(kind: RecurrenceKind) -> &'static [i8] {
    static PAPERFOLD: OnceLock<Vec<i8>> = OnceLock::new();
    static GSR: OnceLock<Vec<i8>> = OnceLock::new();
    let build = move || {
        let mut t = vec![0i8; DENSE_LIMIT as usize];
        t[0] = 1;
        for n in 1..DENSE_LIMIT as usize {
            let half = n / 2;
            t[n] = match (kind, n % 2 == 0) {
                (RecurrenceKind::Paperfolding, true) => {
                    if half % 2 == 0 { 1 } else { -1 }
                }
                (RecurrenceKind::Paperfolding, false) => t[half],
                (RecurrenceKind::GolayShapiroRudin, true) => t[half],
                (RecurrenceKind::GolayShapiroRudin, false) => {
                    if half % 2 == 0 { t[half] } else { -t[half] }
                }
            };
        }
        t
    };
    match kind {
        RecurrenceKind::Paperfolding => PAPERFOLD.get_or_init(build),
        RecurrenceKind::GolayShapiroRudin => GSR.get_or_init(build),
    }
}

fn sparse_table(kind: RecurrenceKind) -> &'static Mutex<HashMap<u64, i8>> {
    static PAPERFOLD: OnceLock<Mutex<HashMap<u64, i8>>> = OnceLock::new();
    static GSR: OnceLock<Mutex<HashMap<u64, i8>>> = OnceLock::new();
    match kind {
        RecurrenceKind::Paperfolding => PAPERFOLD.get_or_init(|| Mutex::new(HashMap::new())),
        RecurrenceKind::GolayShapiroRudin => GSR.get_or_init(|| Mutex::new(HashMap::new())),
    }
}

/// A +/-1 sequence defined by even/odd index recurrences. Terms below 2^16
/// are memoized densely per kind, terms above in a lock-guarded sparse map;
/// evaluation is re-entrant and safe for concurrent readers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecurrenceSeq {
    kind: RecurrenceKind,
}

impl RecurrenceSeq {
    pub fn new(kind: RecurrenceKind) -> Self {
        RecurrenceSeq { kind }
    }

    pub fn kind(&self) -> RecurrenceKind {
        self.kind
    }

    /// The n-th term, in {-1, +1}.
    pub fn eval(&self, n: u64) -> i32 {
        if n < DENSE_LIMIT {
            return i32::from(dense_table(self.kind)[n as usize]);
        }
        if let Some(&v) = sparse_table(self.kind).lock().unwrap().get(&n) {
            return i32::from(v);
        }
        let v = self.eval_uncached(n);
        sparse_table(self.kind).lock().unwrap().insert(n, v as i8);
        v
    }

    /// Recurrence unwinding with no memo writes; used by bulk scans so the
    /// shared sparse map is not flooded.
    pub fn eval_uncached(&self, n: u64) -> i32 {
        let mut n = n;
        let mut sign = 1i32;
        loop {
            if n < DENSE_LIMIT {
                return sign * i32::from(dense_table(self.kind)[n as usize]);
            }
            let half = n / 2;
            match (self.kind, n % 2 == 0) {
                (RecurrenceKind::Paperfolding, true) => {
                    return if half % 2 == 0 { sign } else { -sign };
                }
                (RecurrenceKind::Paperfolding, false) => n = half,
                (RecurrenceKind::GolayShapiroRudin, true) => n = half,
                (RecurrenceKind::GolayShapiroRudin, false) => {
                    if half % 2 != 0 {
                        sign = -sign;
                    }
                    n = half;
                }
            }
        }
    }

    pub fn partial_sum_i64(&self, limit: u64) -> i64 {
        (0..limit).map(|n| i64::from(self.eval_uncached(n))).sum()
    }
}

/// What a [`DigitCounter`] counts in the base-B expansion of n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountTarget {
    /// Occurrences of a single digit j.
    Digit(u64),
    /// The digit sum s_B(n).
    DigitSum,
    /// Possibly overlapping occurrences of a bit block (base 2 only).
    Block(Vec<u8>),
}

/// Counts digits, digit sums, or overlapping bit blocks over the standard
/// base-B expansion with no leading zeros; n = 0 has the empty expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitCounter {
    base: u64,
    target: CountTarget,
}

impl DigitCounter {
    pub fn digit(base: u64, digit: u64) -> Result<Self, SequenceError> {
        if base < 2 {
            return Err(SequenceError::BadBase(base));
        }
        if digit >= base {
            return Err(SequenceError::DigitOutOfRange { digit, base });
        }
        Ok(DigitCounter { base, target: CountTarget::Digit(digit) })
    }

    pub fn digit_sum(base: u64) -> Result<Self, SequenceError> {
        if base < 2 {
            return Err(SequenceError::BadBase(base));
        }
        Ok(DigitCounter { base, target: CountTarget::DigitSum })
    }

    /// Bit-block counter over binary expansions, e.g. block [1, 1] for a(n).
    pub fn block(bits: Vec<u8>) -> Result<Self, SequenceError> {
        if bits.is_empty() || bits.iter().any(|&b| b > 1) {
            return Err(SequenceError::DigitOutOfRange { digit: 2, base: 2 });
        }
        Ok(DigitCounter { base: 2, target: CountTarget::Block(bits) })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn target(&self) -> &CountTarget {
        &self.target
    }

    pub fn count(&self, n: u64) -> u32 {
        match &self.target {
            CountTarget::Digit(j) => {
                let mut m = n;
                let mut c = 0;
                while m > 0 {
                    if m % self.base == *j {
                        c += 1;
                    }
                    m /= self.base;
                }
                c
            }
            CountTarget::DigitSum => {
                let mut m = n;
                let mut s = 0u64;
                while m > 0 {
                    s += m % self.base;
                    m /= self.base;
                }
                s as u32
            }
            CountTarget::Block(bits) => {
                if n == 0 {
                    return 0;
                }
                let len = 64 - n.leading_zeros() as usize;
                if bits.len() > len {
                    return 0;
                }
                let mut c = 0;
                for start in 0..=(len - bits.len()) {
                    // start counts from the most significant bit
                    let ok = bits.iter().enumerate().all(|(i, &b)| {
                        let shift = len - 1 - (start + i);
                        ((n >> shift) & 1) as u8 == b
                    });
                    if ok {
                        c += 1;
                    }
                }
                c
            }
        }
    }
}

/// Kronecker symbol (-1/n) for n >= 1: completely multiplicative with
/// (-1/2) = +1, so it is determined by the odd part of n mod 4.
pub fn kronecker_minus_one(n: u64) -> Result<i32, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroArgument);
    }
    let odd = n >> n.trailing_zeros();
    Ok(if odd % 4 == 1 { 1 } else { -1 })
}

/// A sequence as specified on the command line or in catalog records.
#[derive(Clone, Debug)]
pub enum Sequence {
    StrongMult(StrongMultSeq),
    Recurrence(RecurrenceSeq),
    /// (-1)^(count(n)); kept distinct from `StrongMult` so the digit-counting
    /// route stays an independent code path.
    SignedCounter(DigitCounter),
    /// Raw integer-valued counter (dump and partial sums only).
    Counter(DigitCounter),
}

impl Sequence {
    pub fn paperfolding() -> Self {
        Sequence::Recurrence(RecurrenceSeq::new(RecurrenceKind::Paperfolding))
    }

    pub fn gsr() -> Self {
        Sequence::Recurrence(RecurrenceSeq::new(RecurrenceKind::GolayShapiroRudin))
    }

    /// The n-th value, exact.
    pub fn value(&self, n: u64) -> CycloValue {
        match self {
            Sequence::StrongMult(s) => s.eval(n),
            Sequence::Recurrence(r) => CycloValue::from_i64(i64::from(r.eval(n))),
            Sequence::SignedCounter(c) => {
                CycloValue::from_i64(if c.count(n) % 2 == 0 { 1 } else { -1 })
            }
            Sequence::Counter(c) => CycloValue::from_i64(i64::from(c.count(n))),
        }
    }

    /// Exact sum of the first `limit` values.
    pub fn partial_sum(&self, limit: u64) -> CycloValue {
        match self {
            Sequence::StrongMult(s) => s.partial_sum(limit),
            Sequence::Recurrence(r) => CycloValue::from_i64(r.partial_sum_i64(limit)),
            Sequence::SignedCounter(c) => {
                let mut acc = 0i64;
                for n in 0..limit {
                    acc += if c.count(n) % 2 == 0 { 1 } else { -1 };
                }
                CycloValue::from_i64(acc)
            }
            Sequence::Counter(c) => {
                let mut acc = 0i64;
                for n in 0..limit {
                    acc += i64::from(c.count(n));
                }
                CycloValue::from_i64(acc)
            }
        }
    }

    /// The base whose powers align with the sequence's self-similarity
    /// (2 for the recurrence sequences).
    pub fn block_base(&self) -> u64 {
        match self {
            Sequence::StrongMult(s) => s.base(),
            Sequence::Recurrence(_) => 2,
            Sequence::SignedCounter(c) | Sequence::Counter(c) => c.base(),
        }
    }
}

impl FromStr for Sequence {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence_spec(s)
    }
}

impl fmt::Display for Sequence {
    /// Prints the canonical specification string. Faithful (reparseable) for
    /// every sequence the mini-language can express; strongly multiplicative
    /// sequences with non-monomial exact values print their raw value forms.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sequence::StrongMult(s) => {
                write!(out, "strongmult:B={}", s.base())?;
                for (k, v) in s.values().iter().enumerate().skip(1) {
                    write!(out, ";u{}={}", k, v)?;
                }
                Ok(())
            }
            Sequence::Recurrence(r) => match r.kind() {
                RecurrenceKind::Paperfolding => write!(out, "paperfold"),
                RecurrenceKind::GolayShapiroRudin => write!(out, "gsr"),
            },
            Sequence::SignedCounter(c) | Sequence::Counter(c) => {
                match c.target() {
                    CountTarget::Digit(j) => write!(out, "count:B={};digit={}", c.base(), j)?,
                    CountTarget::DigitSum => write!(out, "digitsum:B={}", c.base())?,
                    CountTarget::Block(bits) => {
                        write!(out, "count:B=2;block=")?;
                        for b in bits {
                            write!(out, "{}", b)?;
                        }
                    }
                }
                if matches!(self, Sequence::SignedCounter(_)) {
                    write!(out, ";sign")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_sequence_spec(s: &str) -> Result<Sequence, ParseError> {
    let bad = |m: &str| ParseError::BadSequenceSpec(m.to_string());
    let s = s.trim();
    match s {
        "paperfold" => return Ok(Sequence::paperfolding()),
        "gsr" => return Ok(Sequence::gsr()),
        _ => {}
    }
    let (head, rest) = match s.split_once(':') {
        Some(p) => p,
        None => return Err(bad(&format!("unknown sequence `{s}`"))),
    };
    let mut fields: Vec<(&str, Option<&str>)> = Vec::new();
    for part in rest.split(';') {
        match part.split_once('=') {
            Some((k, v)) => fields.push((k.trim(), Some(v.trim()))),
            None => fields.push((part.trim(), None)),
        }
    }
    let get = |key: &str| -> Option<&str> {
        fields.iter().find(|(k, _)| *k == key).and_then(|(_, v)| *v)
    };
    let has_flag = |key: &str| fields.iter().any(|(k, v)| *k == key && v.is_none());
    let base: u64 = get("B")
        .ok_or_else(|| bad("missing B=<base>"))?
        .parse()
        .map_err(|_| bad("B must be an integer"))?;
    match head {
        "strongmult" => {
            if base < 2 || base > 64 {
                return Err(bad("base must be in 2..=64"));
            }
            let mut values = vec![CycloValue::one()];
            for k in 1..base {
                let key = format!("u{k}");
                let text = get(&key).ok_or_else(|| bad(&format!("missing {key}=<value>")))?;
                values.push(parse_value(text)?);
            }
            StrongMultSeq::new(base, values)
                .map(Sequence::StrongMult)
                .map_err(|e| bad(&e.to_string()))
        }
        "digitsum" => {
            if base < 2 || base > 64 {
                return Err(bad("base must be in 2..=64"));
            }
            if has_flag("sign") {
                let c = DigitCounter::digit_sum(base).map_err(|e| bad(&e.to_string()))?;
                Ok(Sequence::SignedCounter(c))
            } else {
                let c = DigitCounter::digit_sum(base).map_err(|e| bad(&e.to_string()))?;
                Ok(Sequence::Counter(c))
            }
        }
        "count" => {
            if base < 2 || base > 64 {
                return Err(bad("base must be in 2..=64"));
            }
            let counter = if let Some(d) = get("digit") {
                let digit: u64 = d.parse().map_err(|_| bad("digit must be an integer"))?;
                DigitCounter::digit(base, digit).map_err(|e| bad(&e.to_string()))?
            } else if let Some(w) = get("block") {
                if base != 2 {
                    return Err(bad("block counting requires B=2"));
                }
                let bits: Result<Vec<u8>, _> = w
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        _ => Err(bad("block must be a bit string")),
                    })
                    .collect();
                DigitCounter::block(bits?).map_err(|e| bad(&e.to_string()))?
            } else {
                return Err(bad("count needs digit=<j> or block=<bits>"));
            };
            if has_flag("sign") {
                Ok(Sequence::SignedCounter(counter))
            } else {
                Ok(Sequence::Counter(counter))
            }
        }
        other => Err(bad(&format!("unknown sequence kind `{other}`"))),
    }
}

/// Value mini-grammar: `['-'] part ('*' part)*` with
/// `part := int['/'int] | 'i' | 'zeta(d,m)'`.
fn parse_value(text: &str) -> Result<CycloValue, ParseError> {
    let bad = |m: String| ParseError::BadSequenceSpec(m);
    let mut t = text.trim();
    let mut negate = false;
    while let Some(rest) = t.strip_prefix('-') {
        negate = !negate;
        t = rest.trim();
    }
    let mut acc = CycloValue::one();
    for part in t.split('*') {
        let part = part.trim();
        let v = if part == "i" {
            CycloValue::i()
        } else if let Some(args) = part.strip_prefix("zeta(").and_then(|p| p.strip_suffix(')')) {
            let (d, m) = args
                .split_once(',')
                .ok_or_else(|| bad(format!("zeta needs two arguments in `{part}`")))?;
            let d: u32 = d.trim().parse().map_err(|_| bad(format!("bad zeta order in `{part}`")))?;
            let m: u32 = m.trim().parse().map_err(|_| bad(format!("bad zeta power in `{part}`")))?;
            if d == 0 || d > 64 {
                return Err(bad(format!("zeta order must be in 1..=64, got {d}")));
            }
            CycloValue::root_of_unity(d, m)
        } else {
            let q: Rational = part
                .parse()
                .map_err(|_| bad(format!("cannot parse value part `{part}`")))?;
            CycloValue::from_rational(q)
        };
        acc = acc.mul(&v);
    }
    if negate {
        acc = acc.neg();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strong_mult_eval_examples() {
        // (B=2, u=[1,-1]) at n=3: two one-bits, so +1.
        let tm = StrongMultSeq::sign_digit_sum(2);
        assert!(tm.eval(3).is_one());
        // (B=2, u=[1,i]) at n=2 = 10_2: i^1 = i.
        let iu = StrongMultSeq::power_of_digit_sum(2, CycloValue::i()).unwrap();
        assert!(iu.eval(2).equals(&CycloValue::i()));
        // (B=4, u=[1,-1,1,-1]) at n=9 = 21_4: s_4(9) = 3, so -1.
        let s4 = StrongMultSeq::sign_digit_sum(4);
        assert_eq!(s4.eval(9).as_rational(), Some(Rational::from(-1)));
    }

    #[test]
    fn strong_mult_is_multiplicative_on_digits() {
        let seq = StrongMultSeq::power_of_digit_sum(3, CycloValue::root_of_unity(6, 1)).unwrap();
        for n in 0..200u64 {
            for k in 0..3u64 {
                let lhs = seq.eval(3 * n + k);
                let rhs = seq.eval(n).mul(&seq.eval(k));
                assert!(lhs.equals(&rhs), "failed at n={n} k={k}");
            }
        }
    }

    #[test]
    fn flags_recomputed() {
        let tm = StrongMultSeq::sign_digit_sum(2);
        assert!(tm.bounded_by_one());
        assert!(tm.lemma_ok());
        // u = (1, 1): sum = 2 = B, lemma fails.
        let ones = StrongMultSeq::new(2, vec![CycloValue::one(), CycloValue::one()]).unwrap();
        assert!(ones.bounded_by_one());
        assert!(!ones.lemma_ok());
        // u = (1, 0): the excluded degenerate sequence.
        let degen = StrongMultSeq::new(2, vec![CycloValue::one(), CycloValue::zero()]).unwrap();
        assert!(!degen.lemma_ok());
        // u = (1, 2): not bounded by one.
        let big = StrongMultSeq::new(2, vec![CycloValue::one(), CycloValue::from_i64(2)]).unwrap();
        assert!(!big.bounded_by_one());
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(DigitCounter::digit(2, 1).unwrap().count(5), 2); // 101
        assert_eq!(DigitCounter::digit_sum(4).unwrap().count(9), 3); // 21_4
        let a = DigitCounter::block(vec![1, 1]).unwrap();
        assert_eq!(a.count(7), 2); // 111 has two overlapping 11 blocks
        assert_eq!(a.count(0), 0);
        assert_eq!(a.count(3), 1); // 11
    }

    #[test]
    fn recurrence_prefixes_match_listed_signs() {
        let v = RecurrenceSeq::new(RecurrenceKind::Paperfolding);
        let signs: Vec<i32> = (0..7).map(|n| v.eval(n)).collect();
        assert_eq!(signs, vec![1, 1, -1, 1, 1, -1, -1]);
        let r = RecurrenceSeq::new(RecurrenceKind::GolayShapiroRudin);
        let signs: Vec<i32> = (0..8).map(|n| r.eval(n)).collect();
        assert_eq!(signs, vec![1, 1, 1, -1, 1, 1, -1, 1]);
    }

    #[test]
    fn recurrence_memo_crosses_dense_boundary() {
        let r = RecurrenceSeq::new(RecurrenceKind::GolayShapiroRudin);
        for n in (DENSE_LIMIT - 4)..(DENSE_LIMIT + 4) {
            assert_eq!(r.eval(n), r.eval_uncached(n));
        }
        let v = RecurrenceSeq::new(RecurrenceKind::Paperfolding);
        assert_eq!(v.eval(1 << 40), v.eval_uncached(1 << 40));
    }

    #[test]
    fn gsr_matches_block_counter() {
        let r = RecurrenceSeq::new(RecurrenceKind::GolayShapiroRudin);
        let a = DigitCounter::block(vec![1, 1]).unwrap();
        for n in 0..5000u64 {
            let expected = if a.count(n) % 2 == 0 { 1 } else { -1 };
            assert_eq!(r.eval_uncached(n), expected, "mismatch at n={n}");
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_minus_one(1).unwrap(), 1);
        assert_eq!(kronecker_minus_one(3).unwrap(), -1);
        assert!(kronecker_minus_one(0).is_err());
        let v = RecurrenceSeq::new(RecurrenceKind::Paperfolding);
        for n in 1..5000u64 {
            assert_eq!(kronecker_minus_one(n).unwrap(), v.eval_uncached(n - 1), "n={n}");
        }
    }

    #[test]
    fn partial_sums() {
        let gsr = Sequence::gsr();
        assert_eq!(gsr.partial_sum(8).as_rational(), Some(Rational::from(4)));
        let tm = Sequence::StrongMult(StrongMultSeq::sign_digit_sum(2));
        assert!(tm.partial_sum(2).is_zero());
        // digit-DP partial sum agrees with the naive scan
        let seq = StrongMultSeq::power_of_digit_sum(3, CycloValue::root_of_unity(6, 1)).unwrap();
        for limit in [0u64, 1, 2, 7, 26, 27, 28, 80, 121] {
            let mut naive = CycloValue::zero();
            for n in 0..limit {
                naive = naive.add(&seq.eval(n));
            }
            assert!(seq.partial_sum(limit).equals(&naive), "limit={limit}");
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for spec in [
            "paperfold",
            "gsr",
            "strongmult:B=2;u1=-1",
            "strongmult:B=2;u1=i",
            "strongmult:B=2;u1=zeta(5,1)",
            "strongmult:B=3;u1=1/2;u2=-1/2",
            "count:B=3;digit=1;sign",
            "count:B=2;block=11;sign",
            "digitsum:B=4;sign",
            "digitsum:B=3",
        ] {
            let seq: Sequence = spec.parse().unwrap();
            let printed = seq.to_string();
            let reparsed: Sequence = printed.parse().unwrap();
            for n in 0..50 {
                assert!(
                    seq.value(n).equals(&reparsed.value(n)),
                    "value mismatch for {spec} at {n}"
                );
            }
        }
    }

    #[test]
    fn signed_counter_matches_strongmult_route() {
        let counter: Sequence = "count:B=3;digit=1;sign".parse().unwrap();
        let equivalent = StrongMultSeq::sign_digit_count(3, 1).unwrap();
        for n in 0..2000 {
            assert!(counter.value(n).equals(&equivalent.eval(n)), "n={n}");
        }
        // first four signs of (-1)^(N_{1,3}): expansions (empty), 1, 2, 10
        let signs: Vec<String> = (0..4).map(|n| counter.value(n).to_string()).collect();
        assert_eq!(signs, vec!["1", "-1", "1", "-1"]);
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!("strongmult:B=1;".parse::<Sequence>().is_err());
        assert!("strongmult:B=3;u1=1".parse::<Sequence>().is_err()); // missing u2
        assert!("count:B=3;digit=5;sign".parse::<Sequence>().is_err());
        assert!("count:B=3;block=11".parse::<Sequence>().is_err());
        assert!("mystery".parse::<Sequence>().is_err());
        assert!("strongmult:B=2;u1=zeta(100,1)".parse::<Sequence>().is_err());
    }
}
