//! Primitivity of incidence matrices and Perron letter frequencies.

use serde::Serialize;

use crate::morphism::Morphism;
use crate::words::Word;
use crate::{Error, Result};

const EIGEN_TOLERANCE: f64 = 1e-10;
const EIGEN_MAX_ROUNDS: u32 = 100_000;

/// Smallest n with M(m)^n entrywise positive, i.e. every letter's n-th image
/// contains every letter. None when no such n exists; the search may stop at
/// the Wielandt bound (|alphabet|-1)^2 + 1, past which no new n can work.
pub fn primitivity(m: &Morphism) -> Option<u32> {
    let k = m.alphabet().len();
    let base: Vec<Vec<bool>> = m
        .incidence_matrix()
        .entries()
        .iter()
        .map(|row| row.iter().map(|&e| e > 0).collect())
        .collect();
    let bound = ((k - 1) * (k - 1) + 1) as u32;
    let mut acc = base.clone();
    for n in 1..=bound {
        if acc.iter().all(|row| row.iter().all(|&b| b)) {
            return Some(n);
        }
        let mut next = vec![vec![false; k]; k];
        for a in 0..k {
            for c in 0..k {
                if acc[a][c] {
                    for b in 0..k {
                        if base[c][b] {
                            next[a][b] = true;
                        }
                    }
                }
            }
        }
        acc = next;
    }
    None
}

/// Observed and limiting letter frequencies for a primitive morphism.
#[derive(Debug, Clone, Serialize)]
pub struct FrequencyReport {
    pub letters: Vec<String>,
    /// Exact occurrence counts over the scanned prefix.
    pub counts: Vec<u64>,
    pub prefix_length: usize,
    /// Normalized left Perron eigenvector of the incidence matrix.
    pub theoretical: Vec<f64>,
    pub residual: f64,
    pub rounds: u32,
}

impl FrequencyReport {
    pub fn empirical(&self, letter_index: usize) -> f64 {
        self.counts[letter_index] as f64 / self.prefix_length as f64
    }

    pub fn max_deviation(&self) -> f64 {
        (0..self.letters.len())
            .map(|i| (self.empirical(i) - self.theoretical[i]).abs())
            .fold(0.0, f64::max)
    }
}

/// Counts letters in `w` and iterates v <- normalize(M^T v) until the step
/// moves every entry by less than 1e-10. Requires a primitive morphism over
/// the word's alphabet and a non-empty prefix.
pub fn letter_frequency(w: &Word, m: &Morphism) -> Result<FrequencyReport> {
    if w.alphabet() != m.alphabet() {
        return Err(Error::AlphabetMismatch(
            "frequency needs the word over the morphism's alphabet".into(),
        ));
    }
    if w.is_empty() {
        return Err(Error::Invalid("frequency needs a non-empty prefix".into()));
    }
    if primitivity(m).is_none() {
        return Err(Error::NotPrimitive);
    }

    let k = m.alphabet().len();
    let mut counts = vec![0u64; k];
    for &s in w.symbols() {
        counts[s as usize] += 1;
    }

    let matrix = m.incidence_matrix();
    let mut v = vec![1.0 / k as f64; k];
    let mut residual = f64::INFINITY;
    let mut rounds = 0;
    while rounds < EIGEN_MAX_ROUNDS {
        rounds += 1;
        // next = M^T v, i.e. next[b] = sum_a M[a][b] v[a]
        let mut next = vec![0.0f64; k];
        for a in 0..k {
            let va = v[a];
            if va == 0.0 {
                continue;
            }
            for b in 0..k {
                next[b] += matrix.entry(a, b) as f64 * va;
            }
        }
        let norm: f64 = next.iter().sum();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::EigenDivergence(rounds));
        }
        for x in &mut next {
            *x /= norm;
        }
        residual = v
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        v = next;
        if residual < EIGEN_TOLERANCE {
            break;
        }
    }
    if residual >= EIGEN_TOLERANCE {
        return Err(Error::EigenDivergence(rounds));
    }

    Ok(FrequencyReport {
        letters: m.alphabet().letters().map(str::to_string).collect(),
        counts,
        prefix_length: w.len(),
        theoretical: v,
        residual,
        rounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{WordStream, DEFAULT_STREAM_BUDGET};

    #[test]
    fn primitivity_exponents() {
        let mu = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
        assert_eq!(primitivity(&mu), Some(1));

        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        assert_eq!(primitivity(&phi), Some(2));

        // 2 -> 210 covers everything at once but 0 -> 1 -> 20 needs 3 rounds
        let g = Morphism::parse("2 -> 210; 1 -> 20; 0 -> 1").unwrap();
        assert_eq!(primitivity(&g), Some(3));

        let reducible = Morphism::parse("a -> ab; b -> b").unwrap();
        assert_eq!(primitivity(&reducible), None);
    }

    #[test]
    fn golden_ratio_frequency() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        let mut s = WordStream::new(phi.clone(), "0", None, DEFAULT_STREAM_BUDGET).unwrap();
        let w = s.prefix(100_000).unwrap();
        let report = letter_frequency(&w, &phi).unwrap();
        let expected = (5f64.sqrt() - 1.0) / 2.0;
        assert!((report.theoretical[0] - expected).abs() < 1e-9);
        assert!(report.max_deviation() < 1e-4);
        assert!(report.residual < 1e-10);
    }

    #[test]
    fn frequency_rejects_non_primitive() {
        let m = Morphism::parse("a -> ab; b -> b").unwrap();
        let mut s = WordStream::new(m.clone(), "a", None, DEFAULT_STREAM_BUDGET).unwrap();
        let w = s.prefix(100).unwrap();
        assert!(matches!(letter_frequency(&w, &m), Err(Error::NotPrimitive)));
    }
}
