//! Alphabets of string tokens and finite words over them.
//!
//! Letters are arbitrary non-empty tokens ("0", "c1", "gamma"); words store
//! dense ids into their alphabet, so analyzers index in O(1).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Debug)]
struct AlphabetInner {
    letters: Vec<String>,
    index: HashMap<String, u32>,
}

/// Ordered set of distinct letters. Clones share storage.
#[derive(Clone)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::BadLetter {
                    token: l.clone(),
                    reason: "letters must be non-empty and whitespace-free".into(),
                });
            }
            if index.insert(l.clone(), i as u32).is_some() {
                return Err(Error::BadLetter {
                    token: l.clone(),
                    reason: "duplicate letter".into(),
                });
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { letters, index })))
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty alphabets
    }

    pub fn letter(&self, id: u32) -> &str {
        &self.0.letters[id as usize]
    }

    pub fn letters(&self) -> impl Iterator<Item = &str> {
        self.0.letters.iter().map(String::as_str)
    }

    pub fn id(&self, token: &str) -> Result<u32> {
        self.0.index.get(token).copied().ok_or_else(|| Error::UnknownLetter {
            token: token.to_string(),
        })
    }

    pub fn contains(&self, token: &str) -> bool {
        self.0.index.contains_key(token)
    }

    /// True when every letter is a single character, so words print densely.
    pub fn single_char(&self) -> bool {
        self.0.letters.iter().all(|l| l.chars().count() == 1)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.letters == other.0.letters
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", self.0.letters)
    }
}

/// A finite word over a fixed alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u32>,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Word {
            alphabet: alphabet.clone(),
            symbols: Vec::new(),
        }
    }

    /// Wraps raw ids; callers must only pass ids below `alphabet.len()`.
    pub fn from_ids(alphabet: &Alphabet, symbols: Vec<u32>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet.len()));
        Word {
            alphabet: alphabet.clone(),
            symbols,
        }
    }

    pub fn from_tokens<S: AsRef<str>>(alphabet: &Alphabet, tokens: &[S]) -> Result<Self> {
        let symbols = tokens
            .iter()
            .map(|t| alphabet.id(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_ids(alphabet, symbols))
    }

    /// Parses either whitespace-separated tokens or, for single-character
    /// alphabets, a dense string like "0100101".
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        if text.contains(char::is_whitespace) {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            Word::from_tokens(alphabet, &tokens)
        } else if alphabet.single_char() {
            let symbols = text
                .chars()
                .map(|c| alphabet.id(&c.to_string()))
                .collect::<Result<Vec<_>>>()?;
            Ok(Word::from_ids(alphabet, symbols))
        } else if text.is_empty() {
            Ok(Word::empty(alphabet))
        } else {
            Word::from_tokens(alphabet, &[text])
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn token(&self, i: usize) -> &str {
        self.alphabet.letter(self.symbols[i])
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(|&s| self.alphabet.letter(s))
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from_ids(&self.alphabet, self.symbols[..n.min(self.symbols.len())].to_vec())
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::from_ids(&self.alphabet, self.symbols[start..start + len].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                "concat needs both words over one alphabet".into(),
            ));
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word::from_ids(&self.alphabet, symbols))
    }

    /// Dense rendering for single-character alphabets, token list otherwise.
    pub fn display(&self) -> String {
        if self.alphabet.single_char() {
            self.tokens().collect()
        } else {
            self.tokens().collect::<Vec<_>>().join(" ")
        }
    }

    /// Token-wise equality; usable across distinct alphabets.
    pub fn same_tokens(&self, other: &Word) -> bool {
        self.len() == other.len() && self.tokens().eq(other.tokens())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.display())
    }
}

/// All start positions of `x` in `w`, overlapping occurrences included.
/// The empty factor matches nowhere.
pub fn occurrences(w: &Word, x: &Word) -> Result<Vec<usize>> {
    if w.alphabet != x.alphabet {
        return Err(Error::AlphabetMismatch(
            "occurrences needs factor and word over one alphabet".into(),
        ));
    }
    let (h, n) = (w.symbols(), x.symbols());
    if n.is_empty() || n.len() > h.len() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for i in 0..=h.len() - n.len() {
        if &h[i..i + n.len()] == n {
            out.push(i);
        }
    }
    Ok(out)
}

/// Reads a word of digit letters as a base-k integer, most significant first.
/// The empty word has value 0.
pub fn base_k_value(w: &Word, k: u32) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::Invalid(format!("base {k} out of range (need k >= 2)")));
    }
    let digit_of = |id: u32| -> Result<u32> {
        let token = w.alphabet().letter(id);
        match token.parse::<u32>() {
            Ok(d) if d < k => Ok(d),
            _ => Err(Error::NotADigit {
                token: token.to_string(),
                base: k,
            }),
        }
    };
    let mut acc = BigUint::zero();
    for &s in w.symbols() {
        acc = acc * k + digit_of(s)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empties() {
        assert!(matches!(
            Alphabet::new(["a", "a"]),
            Err(Error::BadLetter { .. })
        ));
        assert!(matches!(Alphabet::new([""]), Err(Error::BadLetter { .. })));
        assert!(matches!(
            Alphabet::new(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        ));
    }

    #[test]
    fn parse_dense_and_tokenized() {
        let a = ab();
        let w = Word::parse(&a, "abba").unwrap();
        assert_eq!(w.display(), "abba");
        let w2 = Word::parse(&a, "a b b a").unwrap();
        assert_eq!(w, w2);

        let multi = Alphabet::new(["c0", "e0"]).unwrap();
        let w3 = Word::parse(&multi, "c0 e0 c0").unwrap();
        assert_eq!(w3.display(), "c0 e0 c0");
    }

    #[test]
    fn occurrences_overlap() {
        let a = ab();
        let w = Word::parse(&a, "aabaaaba").unwrap();
        let x = Word::parse(&a, "aa").unwrap();
        assert_eq!(occurrences(&w, &x).unwrap(), vec![0, 3, 4]);
        let absent = Word::parse(&a, "bb").unwrap();
        assert!(occurrences(&w, &absent).unwrap().is_empty());
        let empty = Word::empty(&a);
        assert!(occurrences(&w, &empty).unwrap().is_empty());
    }

    #[test]
    fn base_k_value_examples() {
        let digits = Alphabet::new(["0", "1", "2"]).unwrap();
        let w = Word::parse(&digits, "20").unwrap();
        assert_eq!(base_k_value(&w, 3).unwrap(), 6u32.into());
        let w = Word::parse(&digits, "101").unwrap();
        assert_eq!(base_k_value(&w, 2).unwrap(), 5u32.into());
        assert_eq!(base_k_value(&Word::empty(&digits), 3).unwrap(), 0u32.into());
        let w = Word::parse(&digits, "2").unwrap();
        assert!(matches!(
            base_k_value(&w, 2),
            Err(Error::NotADigit { .. })
        ));
    }
}
