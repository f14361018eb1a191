//! Exact verification, enumeration, and proof replay for cube-free Descartes
//! numbers (spoof odd perfect numbers).
//!
//! A Descartes number is an odd `n = k*m` with `sigma(k)*(m+1) = 2*k*m`; the
//! classical example is `D = 3^2 7^2 11^2 13^2 * 22021`, which would be an odd
//! perfect number if `22021 = 19^2 * 61` were prime. This crate provides:
//!
//! * [`arith`] — exact integers, rationals, primality, factorization, and the
//!   divisor-sum function `sigma`. No floating point anywhere.
//! * [`pair`] — the Descartes-pair predicate, the `m`-solver derived from the
//!   defining equation, and the cube-free predicate.
//! * [`lemmas`] — admissibility filters (residue counts, squarefree kernels,
//!   congruence and divisibility side conditions) as executable predicates
//!   with failure witnesses.
//! * [`search`] — finite candidate enumerations under exact rational
//!   inequality constraints, plus congruence combination (CRT).
//! * [`sieve`] — a segmented divisor-sum sieve and the brute-force oracle
//!   that sweeps the defining equation over a whole range of `k`.
//! * [`replay`] — the case analysis of the "no cube-free Descartes number
//!   with seven distinct prime factors" proof, re-executed step by step into
//!   auditable transcripts.
//! * [`cli`] — the `descartes` command-line tool.

pub mod arith;
pub mod cli;
pub mod lemmas;
pub mod pair;
pub mod replay;
pub mod search;
pub mod sieve;

pub use arith::{
    f_of_p, factorize, rational_cmp, sieve_primes, sigma, ArithError, Factorization, Integer,
    Rational,
};
pub use lemmas::{
    lemma2_filter, lemma4_check, lemma5_check, lemma6_check, lemma9_admissible, LemmaId,
    LemmaVerdict, Witness,
};
pub use pair::{is_cube_free, is_descartes_pair, solve_m, DescartesPair, PairError};
pub use replay::{
    emit_transcript, parse_transcript, replay_lemma10, replay_lemma9, replay_theorem1, run_step,
    CaseStep, OutputFormat, StepKind, Target, Transcript, Verdict,
};
pub use search::{
    enumerate_m_candidates, f_product_interval_search, forced_residue, pair_search,
    single_prime_search, CongruenceClass, Fact, SearchConstraint, SearchError,
};
pub use sieve::{brute_force_oracle, brute_force_oracle_with, sigma_sieve, OracleConfig, SigmaTable};
