//! Fixed points of prolongable morphisms.
//!
//! A morphism m is prolongable on a when m(a) = a·x and x never dies under
//! iteration; the stream then expands a·x·m(x)·m²(x)··· lazily with a work
//! queue, O(1) amortized per emitted symbol.

use crate::morphism::{Coding, Morphism};
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// Default cap on how many symbols a stream will materialize.
pub const DEFAULT_STREAM_BUDGET: usize = 10_000_000;

/// Mortality and growth flags per letter.
///
/// mortal(b): mⁿ(b) = ε for some n. growing(b): |mⁿ(b)| is unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterStructure {
    alphabet: Alphabet,
    mortal: Vec<bool>,
    growing: Vec<bool>,
}

impl LetterStructure {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_mortal(&self, letter: &str) -> Result<bool> {
        Ok(self.mortal[self.alphabet.id(letter)? as usize])
    }

    pub fn is_growing(&self, letter: &str) -> Result<bool> {
        Ok(self.growing[self.alphabet.id(letter)? as usize])
    }

    pub fn mortal_ids(&self) -> &[bool] {
        &self.mortal
    }

    pub fn growing_ids(&self) -> &[bool] {
        &self.growing
    }

    pub fn mortal_letters(&self) -> Vec<&str> {
        self.flagged(&self.mortal)
    }

    pub fn growing_letters(&self) -> Vec<&str> {
        self.flagged(&self.growing)
    }

    fn flagged<'a>(&'a self, flags: &'a [bool]) -> Vec<&'a str> {
        self.alphabet
            .letters()
            .zip(flags)
            .filter_map(|(l, &f)| f.then_some(l))
            .collect()
    }
}

/// Computes mortality by closing {b : m(b) = ε} upward, then growth on the
/// mortal-free reduction: a letter grows iff it reaches a cycle letter whose
/// reduced image has length >= 2.
pub fn letter_structure(m: &Morphism) -> LetterStructure {
    let k = m.alphabet().len();

    // mortal fixpoint: stabilizes within k rounds
    let mut mortal = vec![false; k];
    loop {
        let mut changed = false;
        for a in 0..k {
            if !mortal[a] && m.image_ids(a as u32).iter().all(|&b| mortal[b as usize]) {
                mortal[a] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // reduced morphism: drop mortal letters from every image; live letters
    // then have non-empty reduced images (some survivor must occur)
    let reduced: Vec<Vec<usize>> = (0..k)
        .map(|a| {
            m.image_ids(a as u32)
                .iter()
                .map(|&b| b as usize)
                .filter(|&b| !mortal[b])
                .collect()
        })
        .collect();

    // reachability over the reduced occurrence graph, 1 or more steps
    let mut reach = vec![vec![false; k]; k];
    for a in 0..k {
        for &b in &reduced[a] {
            reach[a][b] = true;
        }
    }
    for via in 0..k {
        for a in 0..k {
            if reach[a][via] {
                for b in 0..k {
                    if reach[via][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }

    let anchor: Vec<bool> = (0..k)
        .map(|c| !mortal[c] && reach[c][c] && reduced[c].len() >= 2)
        .collect();
    let growing: Vec<bool> = (0..k)
        .map(|a| !mortal[a] && (anchor[a] || (0..k).any(|c| reach[a][c] && anchor[c])))
        .collect();

    LetterStructure {
        alphabet: m.alphabet().clone(),
        mortal,
        growing,
    }
}

/// m is prolongable on a iff m(a) = a·x with x containing a non-mortal
/// letter; the fixed point m^ω(a) is then infinite.
pub fn is_prolongable(m: &Morphism, letter: &str) -> Result<bool> {
    let a = m.alphabet().id(letter)?;
    let img = m.image_ids(a);
    if img.first() != Some(&a) || img.len() < 2 {
        return Ok(false);
    }
    let structure = letter_structure(m);
    Ok(img[1..].iter().any(|&b| !structure.mortal_ids()[b as usize]))
}

/// mⁿ(a) by repeated application, capped at `budget` symbols.
pub fn iterate(m: &Morphism, letter: &str, n: u32, budget: usize) -> Result<Word> {
    let mut w = m.image(letter)?;
    if n == 0 {
        return Ok(Word::parse(m.alphabet(), letter)
            .unwrap_or_else(|_| Word::from_ids(m.alphabet(), vec![])));
    }
    for _ in 1..n {
        if w.len() > budget {
            return Err(Error::BudgetExceeded {
                needed: w.len(),
                budget,
            });
        }
        w = m.apply(&w)?;
    }
    if w.len() > budget {
        return Err(Error::BudgetExceeded {
            needed: w.len(),
            budget,
        });
    }
    Ok(w)
}

/// Lazy prefix generator for m^ω(seed), optionally followed by a coding.
pub struct WordStream {
    morphism: Morphism,
    coding: Option<Coding>,
    buffer: Vec<u32>, // prefix of the raw fixed point
    expanded: usize,  // buffer[..expanded] have had their images appended
    budget: usize,
}

impl WordStream {
    pub fn new(
        morphism: Morphism,
        seed: &str,
        coding: Option<Coding>,
        budget: usize,
    ) -> Result<Self> {
        let a = morphism.alphabet().id(seed)?;
        let img = morphism.image_ids(a);
        if img.first() != Some(&a) || img.len() < 2 {
            return Err(Error::NotProlongable {
                letter: seed.to_string(),
                reason: "image must start with the letter and continue".into(),
            });
        }
        let structure = letter_structure(&morphism);
        if img[1..].iter().all(|&b| structure.mortal_ids()[b as usize]) {
            return Err(Error::NotProlongable {
                letter: seed.to_string(),
                reason: "every continuation letter is mortal, the fixed point is finite".into(),
            });
        }
        if let Some(c) = &coding {
            if c.source() != morphism.alphabet() {
                return Err(Error::AlphabetMismatch(
                    "coding source must match the morphism's alphabet".into(),
                ));
            }
        }
        let buffer = img.to_vec();
        Ok(WordStream {
            morphism,
            coding,
            buffer,
            expanded: 1,
            budget,
        })
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    /// Alphabet of emitted symbols (the coding target when present).
    pub fn alphabet(&self) -> &Alphabet {
        match &self.coding {
            Some(c) => c.target(),
            None => self.morphism.alphabet(),
        }
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        if n > self.budget {
            return Err(Error::BudgetExceeded {
                needed: n,
                budget: self.budget,
            });
        }
        while self.buffer.len() < n {
            // prolongability keeps |m(prefix_e)| > e, so the cursor never
            // catches up with the frontier
            let c = self.buffer[self.expanded];
            self.buffer.extend_from_slice(self.morphism.image_ids(c));
            self.expanded += 1;
        }
        Ok(())
    }

    /// Raw fixed-point prefix, before any coding.
    pub fn raw_prefix(&mut self, n: usize) -> Result<Word> {
        self.ensure(n)?;
        Ok(Word::from_ids(
            self.morphism.alphabet(),
            self.buffer[..n].to_vec(),
        ))
    }

    /// Emitted prefix of length n.
    pub fn prefix(&mut self, n: usize) -> Result<Word> {
        self.ensure(n)?;
        match &self.coding {
            Some(c) => {
                let out = self.buffer[..n].iter().map(|&s| c.map_id(s)).collect();
                Ok(Word::from_ids(c.target(), out))
            }
            None => self.raw_prefix(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::DEFAULT_SYMBOL_BUDGET;

    #[test]
    fn mortal_and_growing_flags() {
        // 1 only rewrites to itself: unbounded growth happens through 0
        let delta = Morphism::parse("0 -> 0010; 1 -> 1").unwrap();
        let s = letter_structure(&delta);
        assert_eq!(s.mortal_letters(), Vec::<&str>::new());
        assert_eq!(s.growing_letters(), vec!["0"]);
        assert!(!s.is_growing("1").unwrap());

        // b and c die; a then only ever reproduces itself, so nothing grows
        let erasing = Morphism::parse("a -> ab; b -> c; c ->").unwrap();
        let s = letter_structure(&erasing);
        assert_eq!(s.mortal_letters(), vec!["b", "c"]);
        assert_eq!(s.growing_letters(), Vec::<&str>::new());

        // here a duplicates itself each round even though b dies
        let erasing = Morphism::parse("a -> aba; b ->").unwrap();
        let s = letter_structure(&erasing);
        assert_eq!(s.mortal_letters(), vec!["b"]);
        assert_eq!(s.growing_letters(), vec!["a"]);
    }

    #[test]
    fn growth_through_a_cycle_neighbor() {
        // c -> d -> ce: c's own image is short but its cycle expands
        let m = Morphism::parse("c -> d; d -> ce; e -> e").unwrap();
        let s = letter_structure(&m);
        assert!(s.is_growing("c").unwrap());
        assert!(s.is_growing("d").unwrap());
        assert!(!s.is_growing("e").unwrap());
    }

    #[test]
    fn prolongability() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        assert!(is_prolongable(&phi, "0").unwrap());
        assert!(!is_prolongable(&phi, "1").unwrap());

        // x = bb is wholly mortal: a's fixed point would be finite
        let dying = Morphism::parse("a -> abb; b ->").unwrap();
        assert!(!is_prolongable(&dying, "a").unwrap());
    }

    #[test]
    fn fibonacci_prefix() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        let mut s = WordStream::new(phi, "0", None, DEFAULT_STREAM_BUDGET).unwrap();
        assert_eq!(s.prefix(8).unwrap().display(), "01001010");
        assert_eq!(s.prefix(13).unwrap().display(), "0100101001001");
    }

    #[test]
    fn thue_morse_prefix() {
        let mu = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
        let mut s = WordStream::new(mu, "0", None, DEFAULT_STREAM_BUDGET).unwrap();
        assert_eq!(s.prefix(16).unwrap().display(), "0110100110010110");
    }

    #[test]
    fn stream_survives_erasing_letters() {
        // b is mortal but the stream must keep making progress
        let m = Morphism::parse("a -> abbc; b ->; c -> cc").unwrap();
        let mut s = WordStream::new(m, "a", None, DEFAULT_STREAM_BUDGET).unwrap();
        assert_eq!(s.prefix(10).unwrap().display(), "abbccccccc");
    }

    #[test]
    fn iterate_matches_stream() {
        let delta = Morphism::parse("0 -> 0010; 1 -> 1").unwrap();
        let w3 = iterate(&delta, "0", 2, DEFAULT_SYMBOL_BUDGET).unwrap();
        assert_eq!(w3.display(), "0010001010010");
        let mut s = WordStream::new(delta, "0", None, DEFAULT_STREAM_BUDGET).unwrap();
        assert_eq!(s.prefix(13).unwrap(), w3);
    }

    #[test]
    fn stream_budget_refuses() {
        let mu = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
        let mut s = WordStream::new(mu, "0", None, 100).unwrap();
        assert!(matches!(
            s.prefix(101),
            Err(Error::BudgetExceeded { needed: 101, budget: 100 })
        ));
        assert_eq!(s.prefix(100).unwrap().len(), 100);
    }
}
