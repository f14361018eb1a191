//! The defining equation of a Descartes pair and its solver.
//!
//! A pair of positive integers `(k, m)` is a Descartes pair when `n = k*m`
//! is odd, `n > 1`, and `sigma(k) * (m + 1) = 2*k*m` holds exactly. The
//! degenerate `(1, 1)` satisfies the raw equation but is excluded: it gives
//! `n = 1`, for which the equation degenerates to `sigma(k) = k`.
//!
//! Rearranging the equation shows `m` is determined by `k` alone:
//! `m = sigma(k) / (2k - sigma(k))`, defined exactly when the denominator is
//! positive and divides `sigma(k)`. That rearrangement is what [`solve_m`]
//! computes and what the brute-force oracle sweeps.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{sigma, Factorization, Integer, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("k must be odd, got {0}")]
    EvenK(Integer),
    #[error("({k}, {m}) is not a Descartes pair")]
    NotDescartes { k: Integer, m: Integer },
}

/// A verified Descartes pair `(k, m)` together with `n = k*m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescartesPair {
    k: Factorization,
    m: Factorization,
    n_value: Integer,
}

impl DescartesPair {
    /// Validates the defining equation and constructs the pair.
    pub fn new(k: Factorization, m: Factorization) -> Result<Self, PairError> {
        if !is_descartes_pair(&k, &m) {
            return Err(PairError::NotDescartes {
                k: k.value(),
                m: m.value(),
            });
        }
        let n_value = k.value() * m.value();
        Ok(DescartesPair { k, m, n_value })
    }

    pub fn k(&self) -> &Factorization {
        &self.k
    }

    pub fn m(&self) -> &Factorization {
        &self.m
    }

    pub fn n_value(&self) -> &Integer {
        &self.n_value
    }

    /// The abundancy `sigma(k)/k`, which for a Descartes pair equals
    /// `2m/(m+1)` exactly.
    pub fn abundancy(&self) -> Rational {
        Rational::new(sigma(&self.k), self.k.value())
    }
}

/// True iff `k*m` is odd, `k*m > 1`, and `sigma(k)*(m+1) = 2*k*m` exactly.
///
/// This checks the definition and nothing else; admissibility filters are
/// deliberately separate so a raw sweep can find anything satisfying the
/// equation.
pub fn is_descartes_pair(k: &Factorization, m: &Factorization) -> bool {
    if !k.is_odd() || !m.is_odd() {
        return false;
    }
    let (kv, mv) = (k.value(), m.value());
    if (&kv * &mv) <= Integer::one() {
        return false;
    }
    let lhs = sigma(k) * (&mv + Integer::one());
    let rhs = Integer::from(2) * kv * mv;
    lhs == rhs
}

/// Solves `sigma(k)*(m+1) = 2*k*m` for `m` given odd `k`.
///
/// Returns `Some(m)` iff `d = 2k - sigma(k)` is positive, divides `sigma(k)`
/// exactly, and `m = sigma(k)/d` is odd with `k*m > 1`. Any returned `m`
/// satisfies [`is_descartes_pair`] by construction.
pub fn solve_m(k: &Factorization) -> Result<Option<Integer>, PairError> {
    if !k.is_odd() {
        return Err(PairError::EvenK(k.value()));
    }
    let s = sigma(k);
    let kv = k.value();
    let d = Integer::from(2) * &kv - &s;
    if !num_traits::Signed::is_positive(&d) {
        return Ok(None); // k perfect or abundant: no solution
    }
    if !(&s % &d).is_zero() {
        return Ok(None);
    }
    let m = s / d;
    if (&m % Integer::from(2)).is_zero() {
        return Ok(None);
    }
    if kv * &m <= Integer::one() {
        return Ok(None); // degenerate (1, 1)
    }
    Ok(Some(m))
}

/// True iff no prime cube divides the value (all exponents <= 2).
pub fn is_cube_free(f: &Factorization) -> bool {
    f.is_cube_free()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    fn fact(pairs: &[(u64, u32)]) -> Factorization {
        Factorization::from_pairs(pairs).unwrap()
    }

    #[test]
    fn the_classical_pair_verifies() {
        let k = fact(&[(3, 2), (7, 2), (11, 2), (13, 2)]);
        let m = fact(&[(19, 2), (61, 1)]);
        assert!(is_descartes_pair(&k, &m));
        let pair = DescartesPair::new(k, m).unwrap();
        assert_eq!(pair.n_value(), &Integer::from(198585576189u64));
        // sigma(k)/k == 2m/(m+1)
        assert_eq!(
            pair.abundancy(),
            Rational::new(Integer::from(2 * 22021), Integer::from(22022))
        );
    }

    #[test]
    fn degenerate_and_perturbed_pairs_fail() {
        let one = Factorization::one();
        assert!(!is_descartes_pair(&one, &one));
        let k = fact(&[(3, 2), (7, 2), (11, 2), (13, 2)]);
        let m_off = factorize(&Integer::from(22023)).unwrap();
        assert!(!is_descartes_pair(&k, &m_off));
        let even = fact(&[(2, 1), (11, 1)]);
        assert!(!is_descartes_pair(&even, &one));
    }

    #[test]
    fn solve_m_examples() {
        let k = fact(&[(3, 2), (7, 2), (11, 2), (13, 2)]);
        assert_eq!(solve_m(&k).unwrap(), Some(Integer::from(22021)));
        assert_eq!(solve_m(&fact(&[(3, 2)])).unwrap(), None); // 13/5 not integral
        assert_eq!(solve_m(&fact(&[(3, 3), (5, 1), (7, 1)])).unwrap(), None); // 945 abundant
        assert_eq!(solve_m(&Factorization::one()).unwrap(), None); // degenerate
        assert!(solve_m(&fact(&[(2, 1)])).is_err());
    }

    #[test]
    fn solve_m_agrees_with_verifier() {
        for k in (1u64..3000).step_by(2) {
            let kf = factorize(&Integer::from(k)).unwrap();
            if let Some(m) = solve_m(&kf).unwrap() {
                let mf = factorize(&m).unwrap();
                assert!(is_descartes_pair(&kf, &mf), "k = {k}");
            }
        }
    }

    #[test]
    fn cube_free_examples() {
        let d = fact(&[(3, 2), (7, 2), (11, 2), (13, 2), (19, 2), (61, 1)]);
        assert!(is_cube_free(&d));
        assert!(!is_cube_free(&fact(&[(3, 3)])));
        assert!(is_cube_free(&Factorization::one()));
    }
}
