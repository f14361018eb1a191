//! Admissibility filters for Descartes pairs, as executable predicates.
//!
//! Each check returns a [`LemmaVerdict`] carrying a witness exactly when it
//! fails, so proof transcripts can cite *which* condition fired. The
//! conditions implemented here (statements only — their proofs are external
//! results recorded as axiom citations in transcripts):
//!
//! * lemma 2 — `3 | k` and exactly two distinct primes `p | k` with
//!   `p = 1 (mod 3)`;
//! * lemma 4 — for squarefree `s`, `sigma(s^2)` has no prime divisor
//!   `q = 2 (mod 3)`;
//! * lemma 5 — `m = 1 (mod 12)` and `gcd(k, m) = 1`;
//! * lemma 6 — `k = s^2` for squarefree `s`, and `m | sigma(k)`;
//! * lemma 9 — `m >= 49`, `m = 1 (mod 12)`, and `m` composite, with the
//!   below-49 candidates {1, 13, 25, 37} each excluded for a nameable reason.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{factorize, is_prime, sigma, ArithError, Factorization, Integer};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LemmaError {
    #[error("lemma 4 requires a squarefree input, got {0}")]
    NotSquarefree(Factorization),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Which admissibility condition a verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    Lemma2,
    Lemma4,
    Lemma5,
    Lemma6,
    Lemma9,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LemmaId::Lemma2 => "lemma 2",
            LemmaId::Lemma4 => "lemma 4",
            LemmaId::Lemma5 => "lemma 5",
            LemmaId::Lemma6 => "lemma 6",
            LemmaId::Lemma9 => "lemma 9",
        };
        f.write_str(s)
    }
}

/// Evidence attached to a failing verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A single offending value.
    Value(Integer),
    /// The offending primes.
    Primes(Vec<Integer>),
    /// A named exclusion or textual reason.
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Value(v) => write!(f, "{v}"),
            Witness::Primes(ps) => {
                let s: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", s.join(", "))
            }
            Witness::Note(n) => f.write_str(n),
        }
    }
}

/// Uniform result carrier for the lemma checks.
///
/// Invariant: `witness` is present exactly when `holds` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub lemma_id: LemmaId,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl LemmaVerdict {
    fn pass(lemma_id: LemmaId) -> Self {
        LemmaVerdict {
            lemma_id,
            holds: true,
            witness: None,
        }
    }

    fn fail(lemma_id: LemmaId, witness: Witness) -> Self {
        LemmaVerdict {
            lemma_id,
            holds: false,
            witness: Some(witness),
        }
    }
}

fn residue_mod3(p: &Integer) -> u32 {
    let r = p % Integer::from(3);
    // p >= 0 for primes, so the remainder is already canonical
    r.try_into().unwrap_or(0)
}

/// Lemma 2 filter: `3 | k` and exactly two distinct primes `p | k` with
/// `p = 1 (mod 3)`. On failure the witness lists the residue-1 primes.
pub fn lemma2_filter(k: &Factorization) -> LemmaVerdict {
    let three = Integer::from(3);
    let residue_one: Vec<Integer> = k
        .factors()
        .iter()
        .filter(|(p, _)| residue_mod3(p) == 1)
        .map(|(p, _)| p.clone())
        .collect();
    if !k.contains_prime(&three) {
        return LemmaVerdict::fail(LemmaId::Lemma2, Witness::Note("3 does not divide k".into()));
    }
    if residue_one.len() != 2 {
        return LemmaVerdict::fail(LemmaId::Lemma2, Witness::Primes(residue_one));
    }
    LemmaVerdict::pass(LemmaId::Lemma2)
}

/// Lemma 4 check: no prime divisor of `sigma(s^2)` is `2 (mod 3)`.
///
/// `sigma(s^2)` is the product of `p^2 + p + 1` over the primes `p | s`, so
/// each factor is factored separately. Rejects non-squarefree input.
pub fn lemma4_check(s: &Factorization) -> Result<LemmaVerdict, LemmaError> {
    if !s.is_squarefree() {
        return Err(LemmaError::NotSquarefree(s.clone()));
    }
    for (p, _) in s.factors() {
        let term = p * p + p + 1;
        let tf = factorize(&term)?;
        for (q, _) in tf.factors() {
            if residue_mod3(q) == 2 {
                return Ok(LemmaVerdict::fail(LemmaId::Lemma4, Witness::Value(q.clone())));
            }
        }
    }
    Ok(LemmaVerdict::pass(LemmaId::Lemma4))
}

/// Lemma 5 check: `m = 1 (mod 12)` and `gcd(k, m) = 1`.
pub fn lemma5_check(k: &Factorization, m: &Factorization) -> LemmaVerdict {
    let mv = m.value();
    let r = &mv % Integer::from(12);
    if r != Integer::from(1) {
        return LemmaVerdict::fail(
            LemmaId::Lemma5,
            Witness::Note(format!("m = {r} (mod 12)")),
        );
    }
    let g = k.gcd(m);
    if !g.is_one() {
        return LemmaVerdict::fail(LemmaId::Lemma5, Witness::Value(g.value()));
    }
    LemmaVerdict::pass(LemmaId::Lemma5)
}

/// Lemma 6 check: every exponent of `k` equals 2 (so `k = s^2` with `s`
/// squarefree) and `m | sigma(k)`.
pub fn lemma6_check(k: &Factorization, m: &Factorization) -> LemmaVerdict {
    if let Some((p, e)) = k.factors().iter().find(|(_, e)| *e != 2) {
        return LemmaVerdict::fail(
            LemmaId::Lemma6,
            Witness::Note(format!("exponent of {p} in k is {e}, not 2")),
        );
    }
    let s = sigma(k);
    let mv = m.value();
    if !(&s % &mv).is_zero() {
        return LemmaVerdict::fail(
            LemmaId::Lemma6,
            Witness::Note(format!("{mv} does not divide sigma(k) = {s}")),
        );
    }
    LemmaVerdict::pass(LemmaId::Lemma6)
}

/// Named exclusions for the lemma 9 admissibility check on `m`.
pub mod exclusion {
    pub const M_IS_ONE: &str = "m = 1 forces sigma(k) = k";
    pub const M_IS_25: &str = "m = 25 is excluded: 25 | sigma(s^2) is impossible (5 = 2 mod 3)";
    pub const M_PRIME: &str = "m is prime, so n would be an odd perfect number";
    pub const M_NOT_1_MOD_12: &str = "m is not 1 (mod 12)";
    pub const M_BELOW_49: &str = "m < 49";
}

/// Lemma 9 admissibility: `m >= 49`, `m = 1 (mod 12)`, and `m` composite.
///
/// On failure the witness names the exclusion that fired, matching the case
/// analysis that eliminates every candidate below 49 ({1, 13, 25, 37}).
pub fn lemma9_admissible(m: &Integer) -> LemmaVerdict {
    let fail = |note: &str| LemmaVerdict::fail(LemmaId::Lemma9, Witness::Note(note.into()));
    if *m == Integer::from(1) {
        return fail(exclusion::M_IS_ONE);
    }
    if (m % Integer::from(12)) != Integer::from(1) {
        return fail(exclusion::M_NOT_1_MOD_12);
    }
    if is_prime(m).unwrap_or(false) {
        return fail(exclusion::M_PRIME);
    }
    if *m == Integer::from(25) {
        return fail(exclusion::M_IS_25);
    }
    if *m < Integer::from(49) {
        return fail(exclusion::M_BELOW_49);
    }
    LemmaVerdict::pass(LemmaId::Lemma9)
}
