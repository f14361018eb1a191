//! Segmented divisor-sum sieving and the brute-force oracle.
//!
//! The oracle is deliberately independent of every admissibility filter: it
//! sweeps *all* odd `k` up to a limit and keeps exactly those where the
//! defining equation pins down an odd `m` (the equation rearranges to
//! `m = sigma(k) / (2k - sigma(k))`, so one pass over `k` suffices). Sweeps
//! run over sieved segments so no full-range `sigma` table is ever
//! materialized, and segments may be processed in parallel — results are
//! merged in segment order, so output is identical for any worker count.

use rayon::prelude::*;

use crate::arith::{factorize, sieve_primes, Integer};
use crate::pair::DescartesPair;
use crate::search::SearchError;

/// Hard cap on a single sieve segment (values, not bytes): two u64 arrays of
/// this length stay within a ~0.5 GB budget.
const MAX_SEGMENT_VALUES: u64 = 1 << 25;

/// `sigma(n)` for every `n` in a contiguous range `[lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    lo: u64,
    values: Vec<u64>,
}

impl SigmaTable {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.lo + self.values.len() as u64
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        if n < self.lo {
            return None;
        }
        self.values.get((n - self.lo) as usize).copied()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Sieves `sigma(n)` for all `n` in `[lo, hi)`.
///
/// For each prime `p <= sqrt(hi)`, the full `p`-power is divided out of every
/// multiple in the range and its geometric series multiplied in; whatever
/// remains afterwards is a single prime factor `> sqrt(hi)` contributing
/// `rem + 1`. A segment over the memory budget is an error, never a partial
/// table.
pub fn sigma_sieve(lo: u64, hi: u64) -> Result<SigmaTable, SearchError> {
    if lo < 1 || lo >= hi {
        return Err(SearchError::InvalidConstraint(format!(
            "sigma_sieve range [{lo}, {hi}) is empty or starts below 1"
        )));
    }
    let len = hi - lo;
    if len > MAX_SEGMENT_VALUES {
        return Err(SearchError::SegmentTooLarge(len, MAX_SEGMENT_VALUES));
    }
    let len = len as usize;
    let mut sig = vec![1u64; len];
    let mut rem: Vec<u64> = (lo..hi).collect();

    let root = (hi - 1).isqrt();
    for p in sieve_primes(root) {
        let mut j = lo.div_ceil(p) * p;
        while j < hi {
            let idx = (j - lo) as usize;
            // divide the full p-power out of rem and multiply in 1 + p + ... + p^e
            let mut series = 1u64;
            let mut power = 1u64;
            while rem[idx].is_multiple_of(p) {
                rem[idx] /= p;
                power *= p;
                series += power;
            }
            sig[idx] *= series;
            j += p;
        }
    }
    for idx in 0..len {
        if rem[idx] > 1 {
            sig[idx] *= rem[idx] + 1; // a single prime factor > sqrt(hi)
        }
    }

    Ok(SigmaTable { lo, values: sig })
}

/// Options for [`brute_force_oracle_with`].
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Values per sieve segment.
    pub segment_size: u64,
    /// Worker threads; 1 means fully sequential.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            segment_size: 1 << 20,
            workers: 1,
        }
    }
}

/// Sweeps every odd `k <= k_limit` with default options.
pub fn brute_force_oracle(k_limit: u64) -> Result<Vec<DescartesPair>, SearchError> {
    brute_force_oracle_with(k_limit, &OracleConfig::default())
}

/// Sweeps every odd `k <= k_limit` and returns each `(k, m)` satisfying the
/// defining equation with `m` odd and `k*m > 1`, as verified pairs in
/// ascending `k`.
pub fn brute_force_oracle_with(
    k_limit: u64,
    cfg: &OracleConfig,
) -> Result<Vec<DescartesPair>, SearchError> {
    if k_limit < 1 {
        return Err(SearchError::InvalidConstraint(
            "oracle limit must be >= 1".into(),
        ));
    }
    if cfg.segment_size < 1 {
        return Err(SearchError::InvalidConstraint(
            "segment size must be >= 1".into(),
        ));
    }
    let seg = cfg.segment_size.min(MAX_SEGMENT_VALUES);
    let starts: Vec<u64> = (1..=k_limit).step_by(seg as usize).collect();

    let scan = |&lo: &u64| -> Result<Vec<(u64, u64)>, SearchError> {
        let hi = (lo + seg).min(k_limit + 1);
        let table = sigma_sieve(lo, hi)?;
        let mut hits = Vec::new();
        let mut k = if lo % 2 == 1 { lo } else { lo + 1 };
        while k < hi {
            let s = table.get(k).expect("k within segment");
            if 2 * k > s {
                let d = 2 * k - s;
                if s % d == 0 {
                    let m = s / d;
                    if m % 2 == 1 && (k as u128) * (m as u128) > 1 {
                        hits.push((k, m));
                    }
                }
            }
            k += 2;
        }
        Ok(hits)
    };

    let raw: Vec<(u64, u64)> = if cfg.workers <= 1 {
        let mut all = Vec::new();
        for lo in &starts {
            all.extend(scan(lo)?);
        }
        all
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| SearchError::InvalidConstraint(format!("thread pool: {e}")))?;
        let per_segment: Result<Vec<Vec<(u64, u64)>>, SearchError> =
            pool.install(|| starts.par_iter().map(scan).collect());
        per_segment?.into_iter().flatten().collect()
    };

    raw.into_iter()
        .map(|(k, m)| {
            let kf = factorize(&Integer::from(k))?;
            let mf = factorize(&Integer::from(m))?;
            DescartesPair::new(kf, mf).map_err(|e| {
                SearchError::InvalidConstraint(format!("oracle hit failed verification: {e}"))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sigma;

    #[test]
    fn sigma_table_first_ten() {
        let t = sigma_sieve(1, 11).unwrap();
        assert_eq!(t.values(), &[1, 3, 4, 7, 6, 12, 8, 15, 13, 18]);
    }

    #[test]
    fn sigma_table_single_value() {
        let t = sigma_sieve(1, 2).unwrap();
        assert_eq!(t.values(), &[1]);
    }

    #[test]
    fn sigma_table_spot_value() {
        let t = sigma_sieve(9018009, 9018010).unwrap();
        assert_eq!(t.get(9018009), Some(18035199));
        let f = factorize(&Integer::from(9018009u64)).unwrap();
        assert_eq!(sigma(&f), Integer::from(18035199));
    }

    #[test]
    fn sigma_table_mid_range_segment_agrees_with_factorization() {
        let t = sigma_sieve(999_000, 1_000_000).unwrap();
        for n in [999_001u64, 999_983, 999_999] {
            let f = factorize(&Integer::from(n)).unwrap();
            assert_eq!(Integer::from(t.get(n).unwrap()), sigma(&f), "n = {n}");
        }
    }

    #[test]
    fn sigma_sieve_rejects_bad_ranges() {
        assert!(sigma_sieve(0, 10).is_err());
        assert!(sigma_sieve(5, 5).is_err());
        assert!(matches!(
            sigma_sieve(1, 2 + MAX_SEGMENT_VALUES),
            Err(SearchError::SegmentTooLarge(_, _))
        ));
    }

    #[test]
    fn oracle_degenerate_and_small() {
        assert!(brute_force_oracle(1).unwrap().is_empty()); // k = 1 is the excluded (1, 1)
        assert!(brute_force_oracle(100_000).unwrap().is_empty());
        assert!(brute_force_oracle(0).is_err());
    }

    #[test]
    fn oracle_segment_boundaries_do_not_lose_hits() {
        // place 9018009 near segment edges
        for seg in [9018009, 9018010, 4509005, 1 << 20] {
            let cfg = OracleConfig {
                segment_size: seg,
                workers: 1,
            };
            let hits = brute_force_oracle_with(9018009, &cfg).unwrap();
            assert_eq!(hits.len(), 1, "segment_size = {seg}");
            assert_eq!(hits[0].n_value(), &Integer::from(198585576189u64));
        }
    }
}
