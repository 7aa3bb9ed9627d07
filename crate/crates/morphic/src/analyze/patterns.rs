//! Bounded scans for repetition patterns: k-th powers, overlaps, additive
//! cubes, and palindromic xxx^R blocks.
//!
//! Every scan uses the period trick: for a fixed period p, mark positions i
//! with w[i] = w[i+p]; a long enough run of marks is an occurrence. Cost is
//! O(|w| * max_period) and results carry (position, period).

use crate::words::Word;
use crate::{Error, Result};

/// All (pos, period) with w[pos .. pos+k*period) = u^k, period <= max_period.
/// Non-primitive periods report too: "aaaa" holds squares of periods 1 and 2.
pub fn find_k_powers(w: &Word, k: usize, max_period: usize) -> Vec<(usize, usize)> {
    if k < 2 {
        return Vec::new();
    }
    let s = w.symbols();
    let mut out = Vec::new();
    for p in 1..=max_period.min(s.len() / k) {
        // need (k-1)*p consecutive positions with s[i] == s[i+p]
        let need = (k - 1) * p;
        let mut run = 0usize;
        for i in (0..s.len() - p).rev() {
            run = if s[i] == s[i + p] { run + 1 } else { 0 };
            if run >= need {
                out.push((i, p));
            }
        }
    }
    out.sort();
    out
}

/// All (pos, period) where w[pos .. pos+2*period+1) has the shape xyxyx
/// with |xy| = period: a repetition one symbol beyond a square.
pub fn find_overlaps(w: &Word, max_period: usize) -> Vec<(usize, usize)> {
    let s = w.symbols();
    let mut out = Vec::new();
    for p in 1..=max_period.min(s.len().saturating_sub(1) / 2) {
        let need = p + 1;
        let mut run = 0usize;
        for i in (0..s.len() - p).rev() {
            run = if s[i] == s[i + p] { run + 1 } else { 0 };
            if run >= need {
                out.push((i, p));
            }
        }
    }
    out.sort();
    out
}

/// All (pos, block) with three consecutive length-`block` factors of equal
/// value sum. `values[id]` gives each letter's numeric value.
pub fn find_additive_cubes(
    w: &Word,
    values: &[i64],
    max_block: usize,
) -> Result<Vec<(usize, usize)>> {
    if values.len() != w.alphabet().len() {
        return Err(Error::Invalid(format!(
            "{} letter values supplied for an alphabet of {}",
            values.len(),
            w.alphabet().len()
        )));
    }
    let s = w.symbols();
    let mut prefix = Vec::with_capacity(s.len() + 1);
    prefix.push(0i64);
    for &c in s {
        prefix.push(prefix.last().unwrap() + values[c as usize]);
    }
    let sum = |a: usize, b: usize| prefix[b] - prefix[a];
    let mut out = Vec::new();
    for block in 1..=max_block.min(s.len() / 3) {
        for pos in 0..=s.len() - 3 * block {
            let s1 = sum(pos, pos + block);
            let s2 = sum(pos + block, pos + 2 * block);
            if s1 != s2 {
                continue;
            }
            if s2 == sum(pos + 2 * block, pos + 3 * block) {
                out.push((pos, block));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All (pos, len) with w[pos..] starting x x x^R, 1 <= |x| = len <= max_len.
pub fn find_xxxr(w: &Word, max_len: usize) -> Vec<(usize, usize)> {
    let s = w.symbols();
    let mut out = Vec::new();
    for len in 1..=max_len.min(s.len() / 3) {
        'pos: for pos in 0..=s.len() - 3 * len {
            for i in 0..len {
                if s[pos + i] != s[pos + len + i] {
                    continue 'pos;
                }
            }
            for i in 0..len {
                if s[pos + 2 * len + i] != s[pos + len - 1 - i] {
                    continue 'pos;
                }
            }
            out.push((pos, len));
        }
    }
    out.sort();
    out
}

/// Maximal runs of `letter` as (start, length), in position order.
pub fn run_statistics(w: &Word, letter: &str) -> Result<Vec<(usize, usize)>> {
    let id = w.alphabet().id(letter)?;
    let s = w.symbols();
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        if s[i] == id {
            let start = i;
            while i < s.len() && s[i] == id {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn bin(text: &str) -> Word {
        let a = Alphabet::new(["0", "1"]).unwrap();
        Word::parse(&a, text).unwrap()
    }

    #[test]
    fn cubes_in_aaa() {
        let a = Alphabet::new(["a"]).unwrap();
        let w = Word::parse(&a, "aaa").unwrap();
        assert_eq!(find_k_powers(&w, 3, 10), vec![(0, 1)]);
    }

    #[test]
    fn squares_with_all_periods() {
        let w = bin("1111");
        assert_eq!(find_k_powers(&w, 2, 10), vec![(0, 1), (0, 2), (1, 1), (2, 1)]);
    }

    #[test]
    fn squarefree_word_is_clean() {
        let abc = Alphabet::new(["0", "1", "2"]).unwrap();
        let w = Word::parse(&abc, "210201").unwrap();
        assert!(find_k_powers(&w, 2, 3).is_empty());
    }

    #[test]
    fn overlap_shapes() {
        // 01010 = (01)(01)0: period 2 overlap at 0; also period-1 runs inside
        let w = bin("01010");
        assert_eq!(find_overlaps(&w, 5), vec![(0, 2)]);
        let w = bin("00100");
        assert!(find_overlaps(&w, 5).is_empty());
        let w = bin("000");
        assert_eq!(find_overlaps(&w, 5), vec![(0, 1)]);
    }

    #[test]
    fn every_reported_power_checks_out() {
        let w = bin("0110100110010110100101100");
        for (pos, p) in find_k_powers(&w, 2, 12) {
            assert_eq!(
                w.symbols()[pos..pos + p],
                w.symbols()[pos + p..pos + 2 * p],
                "bad square at ({pos}, {p})"
            );
        }
    }

    #[test]
    fn additive_cube_detection() {
        let digits = Alphabet::new(["0", "1", "3", "4"]).unwrap();
        // 03 + 30 + 03: each block sums to 3 though the middle one differs
        let w = Word::parse(&digits, "033003").unwrap();
        let vals = [0i64, 1, 3, 4];
        let hits = find_additive_cubes(&w, &vals, 3).unwrap();
        assert_eq!(hits, vec![(0, 2)]);

        // 04 + 13 + 31: pairwise distinct blocks, all summing to 4
        let w = Word::parse(&digits, "041331").unwrap();
        assert_eq!(find_additive_cubes(&w, &vals, 3).unwrap(), vec![(0, 2)]);

        // exact cubes are additive cubes
        let w = Word::parse(&digits, "111").unwrap();
        assert_eq!(find_additive_cubes(&w, &vals, 3).unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn xxxr_shapes() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        // abb abb bba: third block reverses the first
        let w = Word::parse(&ab, "abbabbbba").unwrap();
        let hits = find_xxxr(&w, 5);
        assert!(hits.contains(&(0, 3)), "{hits:?}");
        // aaa is x x x^R with |x| = 1
        let w = Word::parse(&ab, "aaa").unwrap();
        assert_eq!(find_xxxr(&w, 5), vec![(0, 1)]);
    }

    #[test]
    fn run_listing() {
        let w = bin("0110001");
        assert_eq!(run_statistics(&w, "1").unwrap(), vec![(1, 2), (6, 1)]);
        assert_eq!(run_statistics(&w, "0").unwrap(), vec![(0, 1), (3, 3)]);
    }
}
