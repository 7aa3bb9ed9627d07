//! Analyzers that run over finite prefixes: factor complexity, pattern
//! scans, letter frequencies, recurrence gaps, and occurrence statistics.

pub mod complexity;
pub mod frequency;
pub mod patterns;

pub use complexity::{factor_complexity, ComplexityProfile};
pub use frequency::{letter_frequency, primitivity, FrequencyReport};
pub use patterns::{
    find_additive_cubes, find_k_powers, find_overlaps, find_xxxr, run_statistics,
};

use std::collections::HashMap;

use serde::Serialize;

use crate::words::{occurrences, Word};
use crate::{Error, Result};

/// Where a factor occurs in a prefix and how far apart the occurrences sit.
#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub factor: String,
    pub positions: Vec<usize>,
    /// Largest distance between consecutive starts, None with < 2 hits.
    pub max_gap: Option<usize>,
    pub scanned_length: usize,
}

pub fn gap_report(w: &Word, factor: &Word) -> Result<GapReport> {
    let positions = occurrences(w, factor)?;
    let max_gap = positions.windows(2).map(|p| p[1] - p[0]).max();
    Ok(GapReport {
        factor: factor.display(),
        positions,
        max_gap,
        scanned_length: w.len(),
    })
}

/// The word w[start], w[start+step], ... with `count` terms.
pub fn arithmetic_subsequence(w: &Word, start: usize, step: usize, count: usize) -> Result<Word> {
    if step == 0 {
        return Err(Error::Invalid("arithmetic step must be positive".into()));
    }
    if count > 0 {
        let last = start + step * (count - 1);
        if last >= w.len() {
            return Err(Error::RangeOutOfWord {
                start,
                step,
                count,
                len: w.len(),
            });
        }
    }
    let ids: Vec<u32> = (0..count).map(|i| w.symbols()[start + step * i]).collect();
    Ok(Word::from_ids(w.alphabet(), ids))
}

/// Occurrence counts of one letter in each checkpoint-length prefix.
pub fn occurrence_growth(w: &Word, letter: &str, checkpoints: &[usize]) -> Result<Vec<u64>> {
    let id = w.alphabet().id(letter)?;
    if let Some(&deepest) = checkpoints.iter().max() {
        if deepest > w.len() {
            return Err(Error::Invalid(format!(
                "checkpoint {} exceeds scanned prefix of length {}",
                deepest,
                w.len()
            )));
        }
    }
    let mut running = vec![0u64; w.len() + 1];
    for (i, &s) in w.symbols().iter().enumerate() {
        running[i + 1] = running[i] + u64::from(s == id);
    }
    Ok(checkpoints.iter().map(|&n| running[n]).collect())
}

/// One factor length in a recurrence sweep: every length-`n` factor of the
/// discovery prefix was looked up across the full word.
#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceRow {
    pub length: usize,
    pub distinct_factors: usize,
    /// Factors of the discovery prefix seen fewer than twice in the full word.
    pub non_recurring: usize,
    /// Largest gap between consecutive occurrences, over all factors.
    pub max_gap: Option<usize>,
}

/// For each factor length 1..=max_len, collects the factors of
/// `w[..discovery_len]` and checks that each reappears in all of `w`,
/// recording the worst occurrence gap. A length with `non_recurring > 0`
/// witnesses a factor that never came back within the scanned budget.
pub fn recurrence_sweep(w: &Word, discovery_len: usize, max_len: usize) -> Result<Vec<RecurrenceRow>> {
    if discovery_len > w.len() {
        return Err(Error::Invalid(format!(
            "discovery prefix {} exceeds scanned prefix of length {}",
            discovery_len,
            w.len()
        )));
    }
    if max_len == 0 || max_len > discovery_len {
        return Err(Error::WindowTooLarge {
            n_max: max_len,
            len: discovery_len,
        });
    }
    let s = w.symbols();
    let mut rows = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        // first pass: which factors exist in the discovery prefix
        let mut tracked: HashMap<&[u32], (usize, Option<usize>, u32)> = HashMap::new();
        for i in 0..=(discovery_len - n) {
            tracked.entry(&s[i..i + n]).or_insert((0, None, 0));
        }
        // second pass: occurrences across the whole scanned word
        for i in 0..=(s.len() - n) {
            if let Some((last, max_gap, count)) = tracked.get_mut(&s[i..i + n]) {
                if *count > 0 {
                    let gap = i - *last;
                    *max_gap = Some(max_gap.map_or(gap, |g| g.max(gap)));
                }
                *last = i;
                *count += 1;
            }
        }
        let distinct_factors = tracked.len();
        let non_recurring = tracked.values().filter(|(_, _, c)| *c < 2).count();
        let max_gap = tracked.values().filter_map(|(_, g, _)| *g).max();
        rows.push(RecurrenceRow {
            length: n,
            distinct_factors,
            non_recurring,
            max_gap,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{WordStream, DEFAULT_STREAM_BUDGET};
    use crate::morphism::Morphism;

    fn fib_prefix(n: usize) -> Word {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        WordStream::new(phi, "0", None, DEFAULT_STREAM_BUDGET)
            .unwrap()
            .prefix(n)
            .unwrap()
    }

    #[test]
    fn gaps_of_a_recurring_factor() {
        let w = fib_prefix(1000);
        let f = Word::parse(w.alphabet(), "00").unwrap();
        let report = gap_report(&w, &f).unwrap();
        assert!(report.positions.len() > 100);
        // consecutive 00 occurrences sit 3 or 5 apart (first few: 2,7,10,15,20)
        assert_eq!(report.max_gap, Some(5));
    }

    #[test]
    fn absent_factor_has_no_gap() {
        let w = fib_prefix(1000);
        let f = Word::parse(w.alphabet(), "11").unwrap();
        let report = gap_report(&w, &f).unwrap();
        assert!(report.positions.is_empty());
        assert_eq!(report.max_gap, None);
    }

    #[test]
    fn arithmetic_rows() {
        let w = fib_prefix(20);
        // 01001010010010100101 -> every other letter from 0
        let sub = arithmetic_subsequence(&w, 0, 2, 10).unwrap();
        assert_eq!(sub.display(), "0011001100");
        let err = arithmetic_subsequence(&w, 0, 2, 11);
        assert!(matches!(err, Err(Error::RangeOutOfWord { .. })));
        assert!(arithmetic_subsequence(&w, 0, 0, 3).is_err());
    }

    #[test]
    fn growth_checkpoints() {
        let w = fib_prefix(1000);
        let counts = occurrence_growth(&w, "0", &[1, 2, 3, 1000]).unwrap();
        assert_eq!(&counts[..3], &[1, 1, 2]);
        // golden-ratio density: 1000 * (sqrt(5)-1)/2 ~ 618
        assert!((counts[3] as i64 - 618).abs() <= 1);
        assert!(occurrence_growth(&w, "0", &[1001]).is_err());
    }

    #[test]
    fn sweep_sees_uniform_recurrence() {
        let w = fib_prefix(10_000);
        let rows = recurrence_sweep(&w, 1000, 8).unwrap();
        for row in &rows {
            assert_eq!(row.non_recurring, 0, "length {}", row.length);
            // linear-complexity word: factor counts are n + 1
            assert_eq!(row.distinct_factors, row.length + 1);
            assert!(row.max_gap.unwrap() < 100);
        }
    }

    #[test]
    fn sweep_flags_vanishing_factor() {
        // 1 occurs only once: every factor through it never recurs
        let a = crate::words::Alphabet::new(["0", "1"]).unwrap();
        let mut ids = vec![0u32; 50];
        ids[3] = 1;
        let w = Word::from_ids(&a, ids);
        let rows = recurrence_sweep(&w, 10, 3).unwrap();
        assert_eq!(rows[0].non_recurring, 1);
        assert_eq!(rows[1].non_recurring, 2);
        assert_eq!(rows[2].non_recurring, 3);
    }
}
