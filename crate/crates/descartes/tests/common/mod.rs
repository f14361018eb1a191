//! Shared helpers for the integration suites: an independent brute-force
//! enumeration oracle (u128 cross-multiplication, no shared code with the
//! search implementation) and a mutation helper for negative-control tests.

#![allow(dead_code)]

use descartes::replay::{
    CaseStep, CmpOp, DivisibilitySpec, EquationSpec, ExpectedList, FilterSpec, SolveOutcome,
    StepSpec,
};
use descartes::Integer;

/// Primes up to `limit` by plain trial division — deliberately independent of
/// the library's sieve.
pub fn trial_primes(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

fn value_and_sigma(base: &[(u64, u32)]) -> (u128, u128) {
    let mut value = 1u128;
    let mut sig = 1u128;
    for &(p, e) in base {
        let p = p as u128;
        let mut power = 1u128;
        let mut series = 1u128;
        for _ in 0..e {
            power *= p;
            series += power;
        }
        value *= power;
        sig *= series;
    }
    (value, sig)
}

fn admitted(p: u64, residue: Option<u32>, excluded: &[u64]) -> bool {
    if let Some(r) = residue {
        if p % 3 != u64::from(r) {
            return false;
        }
    }
    !excluded.contains(&p)
}

fn f_parts(p: u64) -> (u128, u128) {
    let p = p as u128;
    (p * p, p * p + p + 1)
}

/// All odd prime pairs p < q <= 10^4 with
/// `2L/(L+1) <= (sigma(B)/B) / (f(p) f(q)) < 2`, by direct double loop.
pub fn naive_pair_enumeration(
    base: &[(u64, u32)],
    m_lower: u64,
    residue: Option<u32>,
    excluded: &[u64],
) -> Vec<(u64, u64)> {
    let (b, s) = value_and_sigma(base);
    let l = m_lower as u128;
    let primes: Vec<u64> = trial_primes(10_000).into_iter().filter(|&p| p > 2).collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if !admitted(p, residue, excluded) {
            continue;
        }
        let (fnp, fdp) = f_parts(p);
        for &q in &primes[i + 1..] {
            if !admitted(q, residue, excluded) {
                continue;
            }
            let (fnq, fdq) = f_parts(q);
            // ratio = s*fdp*fdq / (b*fnp*fnq)
            let num = s * fdp * fdq;
            let den = b * fnp * fnq;
            if num * (l + 1) >= 2 * l * den && num < 2 * den {
                out.push((p, q));
            }
        }
    }
    out
}

/// Single-prime variant of [`naive_pair_enumeration`].
pub fn naive_single_enumeration(
    base: &[(u64, u32)],
    m_lower: u64,
    residue: Option<u32>,
    excluded: &[u64],
) -> Vec<u64> {
    let (b, s) = value_and_sigma(base);
    let l = m_lower as u128;
    let mut out = Vec::new();
    for p in trial_primes(10_000) {
        if p == 2 || !admitted(p, residue, excluded) {
            continue;
        }
        let (fnp, fdp) = f_parts(p);
        let num = s * fdp;
        let den = b * fnp;
        if num * (l + 1) >= 2 * l * den && num < 2 * den {
            out.push(p);
        }
    }
    out
}

/// All prime pairs p < q <= 10^4 with `lower <= f(p)f(q) <= upper`,
/// by direct double loop on u128 cross-products.
pub fn naive_interval_enumeration(
    lower: (u128, u128),
    upper: (u128, u128),
    p_min: u64,
    residue: Option<u32>,
    excluded: &[u64],
) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = trial_primes(10_000)
        .into_iter()
        .filter(|&p| p >= p_min.max(3))
        .collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if !admitted(p, residue, excluded) {
            continue;
        }
        let (fnp, fdp) = f_parts(p);
        for &q in &primes[i + 1..] {
            if !admitted(q, residue, excluded) {
                continue;
            }
            let (fnq, fdq) = f_parts(q);
            // lower.0/lower.1 <= (fnp*fnq)/(fdp*fdq) <= upper.0/upper.1
            if lower.0 * fdp * fdq <= lower.1 * fnp * fnq
                && upper.0 * fdp * fdq >= upper.1 * fnp * fnq
            {
                out.push((p, q));
            }
        }
    }
    out
}

fn negate(op: CmpOp) -> CmpOp {
    match op {
        CmpOp::Lt => CmpOp::Ge,
        CmpOp::Le => CmpOp::Gt,
        CmpOp::Eq => CmpOp::Lt,
        CmpOp::Ge => CmpOp::Lt,
        CmpOp::Gt => CmpOp::Le,
    }
}

fn mutate_expected_list(list: &mut ExpectedList) {
    match list {
        ExpectedList::Pairs(pairs) => {
            if pairs.is_empty() {
                pairs.push((3, 5));
            } else {
                pairs.pop();
            }
        }
        ExpectedList::Values(vals) => {
            if vals.is_empty() {
                vals.push(3);
            } else {
                vals.pop();
            }
        }
    }
}

/// Perturbs the step's expected value in place. Returns false for steps with
/// nothing to tamper (axiom citations).
pub fn tamper_step(step: &mut CaseStep) -> bool {
    match &mut step.spec {
        StepSpec::Inequality { op, .. } => {
            *op = negate(*op);
            true
        }
        StepSpec::Enumeration { expected, .. } => {
            mutate_expected_list(expected);
            true
        }
        StepSpec::Filter(filter) => {
            match filter {
                FilterSpec::PairSurvivors { expected, .. } => {
                    if expected.is_empty() {
                        expected.push((3, 5));
                    } else {
                        expected.pop();
                    }
                }
                FilterSpec::MAdmissible { expected_witness, .. } => {
                    *expected_witness = Some("tampered exclusion".into());
                }
                FilterSpec::PrimeSetResidueCount { expected_holds, .. } => {
                    *expected_holds = !*expected_holds;
                }
            }
            true
        }
        StepSpec::Integrality { expected, .. } => match expected.first_mut() {
            Some(first) => {
                *first = match first {
                    SolveOutcome::NoSolution => SolveOutcome::Solution {
                        m: Integer::from(1),
                        omega: 1,
                    },
                    SolveOutcome::Solution { .. } => SolveOutcome::NoSolution,
                };
                true
            }
            None => false,
        },
        StepSpec::Equation(eq) => {
            match eq {
                EquationSpec::ForcedPair { expected_equal, .. } => {
                    *expected_equal = !*expected_equal;
                }
                EquationSpec::ForcedSingle {
                    expected_no_prime_q, ..
                } => {
                    *expected_no_prime_q = !*expected_no_prime_q;
                }
            }
            true
        }
        StepSpec::Divisibility(div) => {
            match div {
                DivisibilitySpec::Crt { expected, .. } => {
                    expected.residue += Integer::from(1);
                }
                DivisibilitySpec::Congruence { expected_holds, .. } => {
                    *expected_holds = !*expected_holds;
                }
            }
            true
        }
        StepSpec::MEnumeration { expected, .. } => {
            if expected.is_empty() {
                expected.push(Integer::from(3));
            } else {
                expected.pop();
            }
            true
        }
        StepSpec::Axiom { .. } => false,
    }
}
