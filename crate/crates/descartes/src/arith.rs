//! Exact integer and rational arithmetic, primality, factorization, and the
//! divisor-sum function `sigma`.
//!
//! Everything downstream trusts this module, so the ground rules are strict:
//! arbitrary-precision integers (no wrapping, ever), rationals kept in lowest
//! terms with positive denominators, comparisons by cross-multiplication, and
//! a *deterministic* primality test — proof replay must not depend on
//! probabilistic choices. Operations whose certified range could be exceeded
//! (primality above the Miller-Rabin witness bound, factorization with a
//! composite cofactor beyond the trial-division horizon) fail loudly with an
//! error instead of guessing.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact signed integer; alias for an arbitrary-precision [`BigInt`].
pub type Integer = BigInt;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("expected a positive integer, got {0}")]
    NonPositive(Integer),
    #[error("{0} is not prime")]
    NotPrime(Integer),
    #[error("primality for {0} exceeds the deterministic witness range")]
    PrimalityRangeExceeded(Integer),
    #[error("cannot factor {0}: composite cofactor {1} beyond trial-division range")]
    FactorRangeExceeded(Integer, Integer),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("cannot parse {0:?} as an integer or factored literal")]
    ParseError(String),
}

// Deterministic Miller-Rabin witness set: correct for all n < 3,317,044,064,679,887,385,961,981
// (Sorenson & Webster), which covers the full u64 range and everything this
// crate ever tests.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_CERTIFIED_BOUND: &str = "3317044064679887385961981";

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for `u64` via Miller-Rabin with a fixed witness set.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_prime_biguint(n: &BigUint) -> bool {
    let one = BigUint::one();
    let d0: BigUint = n - &one;
    let s = d0.trailing_zeros().unwrap_or(0);
    let d = &d0 >> s;
    'witness: for &a in &MR_WITNESSES {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == d0 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == d0 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Deterministic primality test.
///
/// Exact for everything below the certified Miller-Rabin witness bound
/// (~3.3e24); larger inputs are rejected rather than answered probabilistically.
pub fn is_prime(n: &Integer) -> Result<bool, ArithError> {
    if n.is_negative() || n.is_zero() {
        return Ok(false);
    }
    if let Some(v) = n.to_u64() {
        return Ok(is_prime_u64(v));
    }
    let u = n.magnitude();
    for &p in &MR_WITNESSES {
        if (u % p).is_zero() {
            return Ok(false);
        }
    }
    let bound: BigUint = MR_CERTIFIED_BOUND.parse().expect("constant parses");
    if *u >= bound {
        return Err(ArithError::PrimalityRangeExceeded(n.clone()));
    }
    Ok(is_prime_biguint(u))
}

/// All primes in `[2, limit]`, ascending (sieve of Eratosthenes).
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

const TRIAL_DIVISION_LIMIT: u64 = 100_000;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(TRIAL_DIVISION_LIMIT))
}

/// An ascending iterator over primes starting at `from`, for open-ended scans.
pub(crate) fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_prime_u64(n))
}

/// Exact prime-power decomposition with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Integer, u32)>,
}

impl Factorization {
    /// The empty factorization of 1.
    pub fn one() -> Self {
        Factorization { factors: Vec::new() }
    }

    /// Builds a factorization from `(prime, exponent)` pairs.
    ///
    /// Input order is irrelevant; duplicates are merged. Every base must pass
    /// the deterministic primality test and every exponent must be >= 1.
    pub fn new(factors: Vec<(Integer, u32)>) -> Result<Self, ArithError> {
        let mut merged: Vec<(Integer, u32)> = Vec::with_capacity(factors.len());
        let mut sorted = factors;
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        for (p, e) in sorted {
            if e == 0 {
                return Err(ArithError::InvalidFactorization(format!(
                    "exponent 0 for prime {p}"
                )));
            }
            if !is_prime(&p)? {
                return Err(ArithError::NotPrime(p));
            }
            match merged.last_mut() {
                Some((last, exp)) if *last == p => *exp += e,
                _ => merged.push((p, e)),
            }
        }
        Ok(Factorization { factors: merged })
    }

    /// Convenience constructor from small `(prime, exponent)` pairs.
    pub fn from_pairs(pairs: &[(u64, u32)]) -> Result<Self, ArithError> {
        Self::new(pairs.iter().map(|&(p, e)| (Integer::from(p), e)).collect())
    }

    pub fn factors(&self) -> &[(Integer, u32)] {
        &self.factors
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> Integer {
        let mut v = Integer::one();
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        v
    }

    /// Number of distinct prime factors (the omega function).
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// True iff 2 does not appear.
    pub fn is_odd(&self) -> bool {
        self.factors.first().is_none_or(|(p, _)| p.to_u32() != Some(2))
    }

    /// True iff every exponent is <= 2 (no prime cube divides the value).
    pub fn is_cube_free(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e <= 2)
    }

    /// True iff every exponent is exactly 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn contains_prime(&self, p: &Integer) -> bool {
        self.factors.iter().any(|(q, _)| q == p)
    }

    pub fn exponent_of(&self, p: &Integer) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    /// Product of two factorizations (exponents of shared primes add).
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut out: Vec<(Integer, u32)> = Vec::with_capacity(self.factors.len() + other.omega());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    out.push(self.factors[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.factors[i].0.clone(), self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Factorization { factors: out }
    }

    /// The square (all exponents doubled).
    pub fn square(&self) -> Factorization {
        Factorization {
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * 2)).collect(),
        }
    }

    /// Greatest common divisor by intersecting the two factor lists.
    pub fn gcd(&self, other: &Factorization) -> Factorization {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((
                        self.factors[i].0.clone(),
                        self.factors[i].1.min(other.factors[j].1),
                    ));
                    i += 1;
                    j += 1;
                }
            }
        }
        Factorization { factors: out }
    }

    /// Parses an integer literal (`"9018009"`) or a factored literal in the
    /// grammar `p^e*p^e*...` (`"3^2*7^2*11^2*13^2"`; `^1` may be omitted).
    /// Factored input need not be sorted; it is normalized and every base is
    /// checked for primality.
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ArithError::ParseError(s.to_string()));
        }
        if !s.contains('*') && !s.contains('^') {
            let n: Integer = s
                .parse()
                .map_err(|_| ArithError::ParseError(s.to_string()))?;
            return factorize(&n);
        }
        let mut pairs = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => {
                    let exp: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| ArithError::ParseError(part.to_string()))?;
                    (b.trim(), exp)
                }
                None => (part, 1),
            };
            let p: Integer = base
                .parse()
                .map_err(|_| ArithError::ParseError(part.to_string()))?;
            pairs.push((p, exp));
        }
        Factorization::new(pairs)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors a positive integer by trial division over a sieved prime list.
///
/// A cofactor surviving trial division is kept only if it passes the
/// deterministic primality test; a composite cofactor beyond the horizon is
/// an error, never a silently wrong answer.
pub fn factorize(n: &Integer) -> Result<Factorization, ArithError> {
    if !n.is_positive() {
        return Err(ArithError::NonPositive(n.clone()));
    }
    if let Some(v) = n.to_u64() {
        return factorize_u64(v, n);
    }
    let mut rest = n.clone();
    let mut factors = Vec::new();
    for &p in small_primes() {
        let pb = Integer::from(p);
        if (&pb * &pb) > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
        if let Some(v) = rest.to_u64() {
            let tail = factorize_u64(v, &rest)?;
            for (q, eq) in tail.factors {
                factors.push((q, eq));
            }
            return Ok(Factorization { factors });
        }
    }
    if !rest.is_one() {
        if is_prime(&rest)? {
            factors.push((rest, 1));
        } else {
            return Err(ArithError::FactorRangeExceeded(n.clone(), rest));
        }
    }
    Ok(Factorization { factors })
}

fn factorize_u64(mut v: u64, original: &Integer) -> Result<Factorization, ArithError> {
    let mut factors = Vec::new();
    for &p in small_primes() {
        if p * p > v {
            break;
        }
        if v.is_multiple_of(p) {
            let mut e = 0u32;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            factors.push((Integer::from(p), e));
        }
    }
    if v > 1 {
        if v <= TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT || is_prime_u64(v) {
            // below the square of the horizon the survivor is necessarily prime
            factors.push((Integer::from(v), 1));
        } else {
            return Err(ArithError::FactorRangeExceeded(
                original.clone(),
                Integer::from(v),
            ));
        }
    }
    Ok(Factorization { factors })
}

/// Divisor sum `sigma(n)` evaluated multiplicatively:
/// the product over prime powers of `(p^(e+1) - 1) / (p - 1)`.
pub fn sigma(f: &Factorization) -> Integer {
    let mut out = Integer::one();
    for (p, e) in f.factors() {
        let geometric = (p.pow(e + 1) - 1) / (p - Integer::one());
        out *= geometric;
    }
    out
}

/// `f(p) = p^2 / sigma(p^2) = p^2 / (p^2 + p + 1)` for a prime `p`.
///
/// Strictly increasing in `p` and always < 1.
pub fn f_of_p(p: &Integer) -> Result<Rational, ArithError> {
    if !is_prime(p)? {
        return Err(ArithError::NotPrime(p.clone()));
    }
    let p2 = p * p;
    let denom = &p2 + p + 1;
    Ok(Rational::new(p2, denom))
}

pub(crate) fn f_rat(p: u64) -> Rational {
    let p = Integer::from(p);
    let p2 = &p * &p;
    let denom = &p2 + &p + 1;
    Rational::new(p2, denom)
}

/// Exact ordering of two rationals (cross-multiplication, no rounding).
pub fn rational_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
