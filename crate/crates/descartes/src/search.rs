//! Finite candidate enumerations under exact rational inequality constraints,
//! plus congruence combination.
//!
//! The searches here make the case analysis's candidate lists reproducible:
//! given a fixed odd cube-free base `B` and a lower bound `L` on `m`, a
//! candidate `k = B * p^2 * q^2` must satisfy
//!
//! ```text
//! 2L/(L+1) <= sigma(k)/k = (sigma(B)/B) / (f(p) f(q)) < 2
//! ```
//!
//! equivalently `R/2 < f(p) f(q) <= R*(L+1)/(2L)` with `R = sigma(B)/B`.
//! All cutoffs are derived from this form and the monotonicity of
//! `f(p) = p^2/(p^2+p+1)`, never guessed: since `f(q) < 1`, a prime `p`
//! admits partners only when `f(p)` exceeds the product's lower bound, and
//! the partner range is finite exactly when `f(p)` exceeds the product's
//! upper bound `U` (then `f(q) <= U/f(p) < 1` caps `q`). A constraint whose
//! solution set is provably infinite is reported as an error instead of
//! being truncated.

use std::fmt;

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{f_rat, is_prime_u64, primes_from, sigma, ArithError, Factorization, Integer, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid search constraint: {0}")]
    InvalidConstraint(String),
    #[error("search is not finite: {0}")]
    Unbounded(String),
    #[error("inconsistent congruences: {0} conflicts with {1}")]
    InconsistentCongruences(Box<Fact>, Box<Fact>),
    #[error("sieve segment of {0} values exceeds the memory budget of {1}")]
    SegmentTooLarge(u64, u64),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// The fixed part of a candidate search: `k = base * p^2 * q^2` (or
/// `base * q^2` for single-prime searches), `m >= m_lower`, optional residue
/// class mod 3 for the free primes, and primes that must not appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraint {
    pub base: Factorization,
    pub m_lower: u64,
    pub residue_mod3: Option<u32>,
    pub excluded_primes: Vec<u64>,
}

impl SearchConstraint {
    /// Builds a constraint; the base must be odd and cube-free.
    pub fn new(base: Factorization, m_lower: u64) -> Result<Self, SearchError> {
        if !base.is_odd() {
            return Err(SearchError::InvalidConstraint(format!("base {base} is even")));
        }
        if !base.is_cube_free() {
            return Err(SearchError::InvalidConstraint(format!(
                "base {base} is not cube-free"
            )));
        }
        if m_lower < 1 {
            return Err(SearchError::InvalidConstraint("m_lower must be >= 1".into()));
        }
        Ok(SearchConstraint {
            base,
            m_lower,
            residue_mod3: None,
            excluded_primes: Vec::new(),
        })
    }

    pub fn with_residue_mod3(mut self, r: u32) -> Self {
        self.residue_mod3 = Some(r);
        self
    }

    pub fn with_excluded(mut self, primes: &[u64]) -> Self {
        self.excluded_primes = primes.to_vec();
        self
    }

    fn admits(&self, p: u64) -> bool {
        if let Some(r) = self.residue_mod3 {
            if p % 3 != u64::from(r) {
                return false;
            }
        }
        !self.excluded_primes.contains(&p)
    }

    /// `(R/2, R*(L+1)/(2L)]` — the exact window for `f(p)f(q)` (pair mode)
    /// or `f(q)` (single-prime mode).
    fn product_window(&self) -> (Rational, Rational) {
        let r = Rational::new(sigma(&self.base), self.base.value());
        let l = Integer::from(self.m_lower);
        let upper = &r * Rational::new(&l + Integer::one(), Integer::from(2) * &l);
        let lower = r / Rational::from_integer(Integer::from(2));
        (lower, upper)
    }
}

/// All pairs of distinct odd primes `p < q` with
/// `2L/(L+1) <= (sigma(B)/B)/(f(p)f(q)) < 2`, in lexicographic order.
///
/// Primes dividing the base are *not* excluded here: the cube-free filter is
/// a separate, later step, so the raw enumeration matches the unfiltered
/// candidate lists.
pub fn pair_search(c: &SearchConstraint) -> Result<Vec<(u64, u64)>, SearchError> {
    if !c.base.is_cube_free() {
        return Err(SearchError::InvalidConstraint(format!(
            "base {} is not cube-free",
            c.base
        )));
    }
    let (lo, up) = c.product_window();
    if up >= Rational::one() {
        return Err(SearchError::Unbounded(format!(
            "f(p)f(q) <= {up} does not cap the candidate primes"
        )));
    }
    let mut out = Vec::new();
    for p in primes_from(3) {
        let fp = f_rat(p);
        if &fp * &fp >= up {
            break; // p < q forces f(p)^2 < f(p)f(q) <= U
        }
        if !c.admits(p) {
            continue;
        }
        if fp <= lo {
            continue; // f(p)f(q) < f(p) <= R/2: upper ratio bound unreachable
        }
        if fp <= up {
            return Err(SearchError::Unbounded(format!(
                "every large q pairs with p = {p}: f({p}) lies inside the product window"
            )));
        }
        let q_hi = &up / &fp;
        let q_lo = &lo / &fp;
        for q in primes_from(p + 1) {
            let fq = f_rat(q);
            if fq > q_hi {
                break;
            }
            if fq <= q_lo || !c.admits(q) {
                continue;
            }
            out.push((p, q));
        }
    }
    Ok(out)
}

/// All primes `q` with `2L/(L+1) <= (sigma(B)/B)/f(q) < 2`, ascending
/// (`k = base * q^2`, one free prime).
pub fn single_prime_search(c: &SearchConstraint) -> Result<Vec<u64>, SearchError> {
    let (lo, up) = c.product_window();
    if up >= Rational::one() {
        return Err(SearchError::Unbounded(format!(
            "f(q) <= {up} does not cap the candidate primes"
        )));
    }
    let mut out = Vec::new();
    for q in primes_from(3) {
        let fq = f_rat(q);
        if fq > up {
            break;
        }
        if fq <= lo || !c.admits(q) {
            continue;
        }
        out.push(q);
    }
    Ok(out)
}

/// Residue and exclusion constraints for [`f_product_interval_search`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResidueRule {
    pub residue_mod3: Option<u32>,
    pub excluded_primes: Vec<u64>,
}

impl ResidueRule {
    fn admits(&self, p: u64) -> bool {
        if let Some(r) = self.residue_mod3 {
            if p % 3 != u64::from(r) {
                return false;
            }
        }
        !self.excluded_primes.contains(&p)
    }
}

/// All prime pairs `p < q` with `lower <= f(p)*f(q) <= upper`, both primes
/// at least `p_min` and admitted by the rule.
///
/// `upper >= 1` is rejected outright — `f` never reaches 1, so no cutoff
/// could be derived. Square-root comparisons are executed on squares.
pub fn f_product_interval_search(
    lower: &Rational,
    upper: &Rational,
    p_min: u64,
    rule: &ResidueRule,
) -> Result<Vec<(u64, u64)>, SearchError> {
    if *upper >= Rational::one() {
        return Err(SearchError::InvalidConstraint(format!(
            "upper bound {upper} >= 1 admits no cutoff (f(p) < 1 for all primes)"
        )));
    }
    if !lower.is_positive() || lower > upper {
        return Err(SearchError::InvalidConstraint(format!(
            "empty or invalid interval [{lower}, {upper}]"
        )));
    }
    let mut out = Vec::new();
    for p in primes_from(p_min.max(3)) {
        let fp = f_rat(p);
        if &fp * &fp > *upper {
            break;
        }
        if !rule.admits(p) {
            continue;
        }
        if fp <= *lower {
            continue; // f(p)f(q) < f(p) <= lower for every q
        }
        if fp <= *upper {
            return Err(SearchError::Unbounded(format!(
                "f({p}) lies inside [{lower}, {upper}]: every large q completes a pair"
            )));
        }
        let q_hi = upper / &fp;
        let q_lo = lower / &fp;
        for q in primes_from(p + 1) {
            let fq = f_rat(q);
            if fq > q_hi {
                break;
            }
            if fq < q_lo || !rule.admits(q) {
                continue;
            }
            out.push((p, q));
        }
    }
    Ok(out)
}

/// All cube-free odd `m` with exactly `omega_m` distinct prime factors —
/// each a required prime, exponent 1 or 2 — and `m = mod12_residue (mod 12)`,
/// ascending.
///
/// `omega_m` must equal the number of required primes: a free prime slot
/// would make the candidate set infinite.
pub fn enumerate_m_candidates(
    required_primes: &[u64],
    omega_m: usize,
    mod12_residue: u32,
) -> Result<Vec<Integer>, SearchError> {
    for &p in required_primes {
        if !is_prime_u64(p) || p == 2 {
            return Err(SearchError::InvalidConstraint(format!(
                "required factor {p} is not an odd prime"
            )));
        }
    }
    let mut distinct = required_primes.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != required_primes.len() {
        return Err(SearchError::InvalidConstraint(
            "required primes must be distinct".into(),
        ));
    }
    if omega_m != required_primes.len() {
        return Err(SearchError::Unbounded(format!(
            "omega(m) = {omega_m} with {} required primes leaves a free prime slot",
            required_primes.len()
        )));
    }
    let mut out = Vec::new();
    // exponent vectors in {1, 2}^omega
    for mask in 0u32..(1 << omega_m) {
        let mut m = Integer::one();
        for (i, &p) in distinct.iter().enumerate() {
            let e = if mask & (1 << i) == 0 { 1 } else { 2 };
            m *= Integer::from(p).pow(e);
        }
        if (&m % Integer::from(12)) == Integer::from(mod12_residue) {
            out.push(m);
        }
    }
    out.sort();
    Ok(out)
}

/// A divisibility or congruence fact about `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    /// `d | m`
    DivisibleBy(Integer),
    /// `m = residue (mod modulus)`
    Congruent { residue: Integer, modulus: Integer },
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::DivisibleBy(d) => write!(f, "{d} | m"),
            Fact::Congruent { residue, modulus } => write!(f, "m = {residue} (mod {modulus})"),
        }
    }
}

impl Fact {
    fn class(&self) -> Result<CongruenceClass, SearchError> {
        match self {
            Fact::DivisibleBy(d) => {
                if !d.is_positive() {
                    return Err(SearchError::InvalidConstraint(format!(
                        "divisor {d} must be positive"
                    )));
                }
                Ok(CongruenceClass {
                    modulus: d.clone(),
                    residue: Integer::zero(),
                })
            }
            Fact::Congruent { residue, modulus } => {
                if !modulus.is_positive() {
                    return Err(SearchError::InvalidConstraint(format!(
                        "modulus {modulus} must be positive"
                    )));
                }
                Ok(CongruenceClass {
                    modulus: modulus.clone(),
                    residue: residue.mod_floor(modulus),
                })
            }
        }
    }
}

/// A single congruence class `residue (mod modulus)` with
/// `0 <= residue < modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    pub modulus: Integer,
    pub residue: Integer,
}

impl CongruenceClass {
    pub fn contains(&self, n: &Integer) -> bool {
        n.mod_floor(&self.modulus) == self.residue
    }

    /// Least positive member of the class.
    pub fn least_positive(&self) -> Integer {
        if self.residue.is_zero() {
            self.modulus.clone()
        } else {
            self.residue.clone()
        }
    }

    fn merge(&self, other: &CongruenceClass) -> Option<CongruenceClass> {
        let ext = self.modulus.extended_gcd(&other.modulus);
        let g = ext.gcd;
        let diff = &other.residue - &self.residue;
        if !(&diff % &g).is_zero() {
            return None;
        }
        let lcm = &self.modulus / &g * &other.modulus;
        let n2g = &other.modulus / &g;
        // ext.x inverts modulus/g modulo other.modulus/g
        let t = ((diff / &g) * ext.x).mod_floor(&n2g);
        let residue = (&self.residue + &self.modulus * t).mod_floor(&lcm);
        Some(CongruenceClass { modulus: lcm, residue })
    }
}

impl fmt::Display for CongruenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

/// Combines divisibility and congruence facts into a single congruence class
/// modulo the lcm of the moduli (Chinese Remainder Theorem, non-coprime
/// moduli allowed). An inconsistent set is reported with a conflicting pair
/// of facts.
pub fn forced_residue(facts: &[Fact]) -> Result<CongruenceClass, SearchError> {
    let mut acc = CongruenceClass {
        modulus: Integer::one(),
        residue: Integer::zero(),
    };
    for (i, fact) in facts.iter().enumerate() {
        let class = fact.class()?;
        acc = match acc.merge(&class) {
            Some(next) => next,
            None => {
                // congruence classes have the Helly property, so a global
                // conflict always shows up in some pair
                for earlier in &facts[..i] {
                    if earlier.class()?.merge(&class).is_none() {
                        return Err(SearchError::InconsistentCongruences(
                            Box::new(earlier.clone()),
                            Box::new(fact.clone()),
                        ));
                    }
                }
                return Err(SearchError::InconsistentCongruences(
                    Box::new(facts[0].clone()),
                    Box::new(fact.clone()),
                ));
            }
        };
    }
    Ok(acc)
}
