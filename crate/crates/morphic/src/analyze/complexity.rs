//! Factor complexity p(n): distinct factors of each length.
//!
//! Counting goes through a suffix automaton: every non-initial state covers
//! the length interval (len(link)+1 ..= len), each length in it contributing
//! one distinct factor. A difference array over those intervals gives the
//! whole profile in one pass.

use serde::Serialize;

use crate::words::Word;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub prefix_length: usize,
    /// values[i] = p(i+1), the number of distinct factors of length i+1.
    pub values: Vec<usize>,
}

impl ComplexityProfile {
    pub fn p(&self, n: usize) -> usize {
        self.values[n - 1]
    }
}

struct SamState {
    len: u32,
    link: i32,
    next: Vec<u32>, // one slot per letter; u32::MAX = absent
}

struct SuffixAutomaton {
    states: Vec<SamState>,
    last: usize,
    k: usize,
}

const ABSENT: u32 = u32::MAX;

impl SuffixAutomaton {
    fn new(k: usize) -> Self {
        SuffixAutomaton {
            states: vec![SamState {
                len: 0,
                link: -1,
                next: vec![ABSENT; k],
            }],
            last: 0,
            k,
        }
    }

    fn push(&mut self, c: usize) {
        let cur = self.states.len();
        let cur_len = self.states[self.last].len + 1;
        self.states.push(SamState {
            len: cur_len,
            link: -1,
            next: vec![ABSENT; self.k],
        });
        let mut p = self.last as i32;
        while p >= 0 && self.states[p as usize].next[c] == ABSENT {
            self.states[p as usize].next[c] = cur as u32;
            p = self.states[p as usize].link;
        }
        if p < 0 {
            self.states[cur].link = 0;
        } else {
            let q = self.states[p as usize].next[c] as usize;
            if self.states[p as usize].len + 1 == self.states[q].len {
                self.states[cur].link = q as i32;
            } else {
                let clone = self.states.len();
                self.states.push(SamState {
                    len: self.states[p as usize].len + 1,
                    link: self.states[q].link,
                    next: self.states[q].next.clone(),
                });
                while p >= 0 && self.states[p as usize].next[c] == q as u32 {
                    self.states[p as usize].next[c] = clone as u32;
                    p = self.states[p as usize].link;
                }
                self.states[q].link = clone as i32;
                self.states[cur].link = clone as i32;
            }
        }
        self.last = cur;
    }
}

/// p(1..=n_max) over `w`. Windows longer than half the word say little, so
/// n_max must stay at or below |w|/2.
pub fn factor_complexity(w: &Word, n_max: usize) -> Result<ComplexityProfile> {
    if n_max == 0 || n_max > w.len() / 2 {
        return Err(Error::WindowTooLarge {
            n_max,
            len: w.len(),
        });
    }
    let mut sam = SuffixAutomaton::new(w.alphabet().len());
    for &s in w.symbols() {
        sam.push(s as usize);
    }
    let mut diff = vec![0i64; n_max + 2];
    for st in &sam.states[1..] {
        let lo = (sam.states[st.link as usize].len + 1) as usize;
        let hi = st.len as usize;
        if lo > n_max {
            continue;
        }
        diff[lo] += 1;
        diff[hi.min(n_max) + 1] -= 1;
    }
    let mut values = Vec::with_capacity(n_max);
    let mut acc = 0i64;
    for n in 1..=n_max {
        acc += diff[n];
        values.push(acc as usize);
    }
    Ok(ComplexityProfile {
        prefix_length: w.len(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{WordStream, DEFAULT_STREAM_BUDGET};
    use crate::morphism::Morphism;
    use crate::words::Alphabet;
    use std::collections::HashSet;

    fn naive(w: &Word, n_max: usize) -> Vec<usize> {
        (1..=n_max)
            .map(|n| {
                let mut set = HashSet::new();
                for i in 0..=w.len() - n {
                    set.insert(&w.symbols()[i..i + n]);
                }
                set.len()
            })
            .collect()
    }

    #[test]
    fn matches_naive_on_small_words() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let w = Word::parse(&a, "abaababaabaab").unwrap();
        let profile = factor_complexity(&w, 6).unwrap();
        assert_eq!(profile.values, naive(&w, 6));
    }

    #[test]
    fn fibonacci_complexity_is_n_plus_one() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        let mut s = WordStream::new(phi, "0", None, DEFAULT_STREAM_BUDGET).unwrap();
        let w = s.prefix(10_000).unwrap();
        let profile = factor_complexity(&w, 30).unwrap();
        for n in 1..=30 {
            assert_eq!(profile.p(n), n + 1, "p({n})");
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let w = Word::parse(&a, "abab").unwrap();
        assert!(factor_complexity(&w, 3).is_err());
        assert!(factor_complexity(&w, 0).is_err());
        assert!(factor_complexity(&w, 2).is_ok());
    }
}
