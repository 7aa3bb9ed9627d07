//! Morphisms of the free monoid, codings, and incidence matrices.
//!
//! A morphism stores one image word per letter and extends to words by
//! concatenation: m(xy) = m(x)m(y). A coding is the 1-uniform special case,
//! possibly into a different alphabet.

use std::fmt;

use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// Total budget (in symbols) that `power` and `iterate` may materialize.
pub const DEFAULT_SYMBOL_BUDGET: usize = 100_000_000;

#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Vec<u32>>, // images[a] = ids of m(a); may be empty
}

impl Morphism {
    /// Builds from (letter, image tokens) rules. Every alphabet letter needs
    /// exactly one rule and images stay inside the same alphabet.
    pub fn new<S: AsRef<str>>(alphabet: &Alphabet, rules: &[(S, Vec<S>)]) -> Result<Self> {
        let mut images: Vec<Option<Vec<u32>>> = vec![None; alphabet.len()];
        for (letter, image) in rules {
            let id = alphabet.id(letter.as_ref())? as usize;
            if images[id].is_some() {
                return Err(Error::Invalid(format!(
                    "duplicate rule for letter {:?}",
                    letter.as_ref()
                )));
            }
            let image = image
                .iter()
                .map(|t| alphabet.id(t.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            images[id] = Some(image);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(id, img)| {
                img.ok_or_else(|| Error::Invalid(format!(
                    "missing rule for letter {:?}",
                    alphabet.letter(id as u32)
                )))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism {
            alphabet: alphabet.clone(),
            images,
        })
    }

    /// Test-friendly constructor: "0 -> 0 1; 1 -> 0". The alphabet is the
    /// rule heads in order; dense images like "01" split per character when
    /// all heads are single characters.
    pub fn parse(text: &str) -> Result<Self> {
        let mut heads = Vec::new();
        let mut bodies = Vec::new();
        for rule in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (head, body) = rule.split_once("->").ok_or_else(|| {
                Error::Invalid(format!("rule {rule:?} is missing '->'"))
            })?;
            heads.push(head.trim().to_string());
            bodies.push(body.trim().to_string());
        }
        let alphabet = Alphabet::new(heads.clone())?;
        let rules: Vec<(String, Vec<String>)> = heads
            .into_iter()
            .zip(bodies)
            .map(|(h, b)| {
                let image = Word::parse(&alphabet, &b)?;
                Ok((h, image.tokens().map(str::to_string).collect()))
            })
            .collect::<Result<_>>()?;
        Morphism::new(&alphabet, &rules)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image_ids(&self, id: u32) -> &[u32] {
        &self.images[id as usize]
    }

    pub fn image(&self, letter: &str) -> Result<Word> {
        let id = self.alphabet.id(letter)?;
        Ok(Word::from_ids(&self.alphabet, self.images[id as usize].clone()))
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if *w.alphabet() != self.alphabet {
            return Err(Error::AlphabetMismatch(
                "apply needs a word over the morphism's alphabet".into(),
            ));
        }
        let total: usize = w.symbols().iter().map(|&s| self.images[s as usize].len()).sum();
        let mut out = Vec::with_capacity(total);
        for &s in w.symbols() {
            out.extend_from_slice(&self.images[s as usize]);
        }
        Ok(Word::from_ids(&self.alphabet, out))
    }

    /// self ∘ inner: applies `inner` first, then self.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if self.alphabet != inner.alphabet {
            return Err(Error::AlphabetMismatch(
                "compose needs both morphisms over one alphabet".into(),
            ));
        }
        let images = inner
            .images
            .iter()
            .map(|img| {
                let mut out = Vec::new();
                for &s in img {
                    out.extend_from_slice(&self.images[s as usize]);
                }
                out
            })
            .collect();
        Ok(Morphism {
            alphabet: self.alphabet.clone(),
            images,
        })
    }

    /// n-fold composition; power(m, 0) is the identity. `budget` caps the
    /// total number of image symbols the result may hold.
    pub fn power(&self, n: u32, budget: usize) -> Result<Morphism> {
        let mut acc = Morphism::identity(&self.alphabet);
        for _ in 0..n {
            acc = self.compose(&acc)?;
            let size: usize = acc.images.iter().map(Vec::len).sum();
            if size > budget {
                return Err(Error::BudgetExceeded {
                    needed: size,
                    budget,
                });
            }
        }
        Ok(acc)
    }

    pub fn identity(alphabet: &Alphabet) -> Morphism {
        Morphism {
            alphabet: alphabet.clone(),
            images: (0..alphabet.len() as u32).map(|id| vec![id]).collect(),
        }
    }

    /// Occurrence counts: entry[a][b] = number of b's in m(a).
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let k = self.alphabet.len();
        let mut entries = vec![vec![0u64; k]; k];
        for (a, img) in self.images.iter().enumerate() {
            for &b in img {
                entries[a][b as usize] += 1;
            }
        }
        IncidenceMatrix {
            alphabet: self.alphabet.clone(),
            entries,
        }
    }

    pub fn classify_shape(&self) -> ShapeReport {
        let lens: Vec<usize> = self.images.iter().map(Vec::len).collect();
        let first = lens[0];
        ShapeReport {
            uniform_width: lens.iter().all(|&l| l == first).then_some(first),
            erasing: lens.iter().any(|&l| l == 0),
            expanding: lens.iter().all(|&l| l >= 2),
            coding: lens.iter().all(|&l| l == 1),
        }
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .alphabet
            .letters()
            .enumerate()
            .map(|(i, l)| {
                let img: Vec<&str> = self.images[i]
                    .iter()
                    .map(|&s| self.alphabet.letter(s))
                    .collect();
                format!("{} -> {}", l, img.join(" "))
            })
            .collect();
        write!(f, "Morphism{{{}}}", rules.join("; "))
    }
}

/// Structural flags of a morphism's images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ShapeReport {
    /// Some(w) when every image has length w.
    pub uniform_width: Option<usize>,
    pub erasing: bool,
    /// Every image has length at least 2.
    pub expanding: bool,
    /// Every image has length exactly 1.
    pub coding: bool,
}

/// Letter-to-letter map between alphabets, extended letterwise to words.
#[derive(Clone, PartialEq, Eq)]
pub struct Coding {
    source: Alphabet,
    target: Alphabet,
    map: Vec<u32>, // map[source id] = target id
}

impl Coding {
    pub fn new<S: AsRef<str>>(
        source: &Alphabet,
        target: &Alphabet,
        pairs: &[(S, S)],
    ) -> Result<Self> {
        let mut map: Vec<Option<u32>> = vec![None; source.len()];
        for (from, to) in pairs {
            let sid = source.id(from.as_ref())? as usize;
            if map[sid].is_some() {
                return Err(Error::Invalid(format!(
                    "duplicate coding for letter {:?}",
                    from.as_ref()
                )));
            }
            map[sid] = Some(target.id(to.as_ref())?);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(id, t)| {
                t.ok_or_else(|| Error::Invalid(format!(
                    "coding misses letter {:?}",
                    source.letter(id as u32)
                )))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Coding {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    /// "abcd" to "0011" style constructor over single-char letter lists.
    pub fn parse(source: &Alphabet, images: &str) -> Result<Self> {
        let images: Vec<String> = if images.contains(char::is_whitespace) {
            images.split_whitespace().map(str::to_string).collect()
        } else {
            images.chars().map(|c| c.to_string()).collect()
        };
        if images.len() != source.len() {
            return Err(Error::Invalid(format!(
                "coding lists {} images for {} letters",
                images.len(),
                source.len()
            )));
        }
        let mut target_letters = Vec::new();
        for img in &images {
            if !target_letters.contains(img) {
                target_letters.push(img.clone());
            }
        }
        let target = Alphabet::new(target_letters)?;
        let pairs: Vec<(String, String)> = source
            .letters()
            .map(str::to_string)
            .zip(images)
            .collect();
        Coding::new(source, &target, &pairs)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn map_id(&self, id: u32) -> u32 {
        self.map[id as usize]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if *w.alphabet() != self.source {
            return Err(Error::AlphabetMismatch(
                "coding needs a word over its source alphabet".into(),
            ));
        }
        let out = w.symbols().iter().map(|&s| self.map[s as usize]).collect();
        Ok(Word::from_ids(&self.target, out))
    }
}

impl fmt::Debug for Coding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .source
            .letters()
            .enumerate()
            .map(|(i, l)| format!("{}->{}", l, self.target.letter(self.map[i])))
            .collect();
        write!(f, "Coding{{{}}}", pairs.join(" "))
    }
}

/// Row-per-source occurrence-count matrix of a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    alphabet: Alphabet,
    entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn entry(&self, a: usize, b: usize) -> u64 {
        self.entries[a][b]
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, rhs: &IncidenceMatrix) -> Result<IncidenceMatrix> {
        if self.alphabet != rhs.alphabet {
            return Err(Error::AlphabetMismatch(
                "matrix product needs one alphabet".into(),
            ));
        }
        let k = self.dim();
        let mut entries = vec![vec![0u64; k]; k];
        for a in 0..k {
            for c in 0..k {
                let lac = self.entries[a][c];
                if lac == 0 {
                    continue;
                }
                for b in 0..k {
                    entries[a][b] += lac * rhs.entries[c][b];
                }
            }
        }
        Ok(IncidenceMatrix {
            alphabet: self.alphabet.clone(),
            entries,
        })
    }

    /// Row sum: |m(a)|.
    pub fn row_sum(&self, a: usize) -> u64 {
        self.entries[a].iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_images_and_power() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        assert_eq!(phi.image("0").unwrap().display(), "01");
        // phi^3(0) = 01001
        let p3 = phi.power(3, DEFAULT_SYMBOL_BUDGET).unwrap();
        assert_eq!(p3.image("0").unwrap().display(), "01001");
        assert_eq!(p3.image("1").unwrap().display(), "010");
    }

    #[test]
    fn compose_applies_inner_first() {
        let gamma = Morphism::parse("0 -> 03; 1 -> 43; 3 -> 1; 4 -> 01").unwrap();
        let gg = gamma.compose(&gamma).unwrap();
        assert_eq!(gg.image("0").unwrap().display(), "031");
    }

    #[test]
    fn incidence_counts() {
        let phi = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
        let m = phi.incidence_matrix();
        assert_eq!(m.entries(), &[vec![1, 1], vec![1, 0]]);

        let mu = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
        assert_eq!(mu.incidence_matrix().entries(), &[vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn incidence_of_composition_multiplies_reversed() {
        let m1 = Morphism::parse("a -> ab; b -> a").unwrap();
        let m2 = Morphism::parse("a -> aab; b -> b").unwrap();
        let comp = m1.compose(&m2).unwrap(); // a -> m1(m2(a))
        let lhs = comp.incidence_matrix();
        let rhs = m2.incidence_matrix().mul(&m1.incidence_matrix()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shape_flags() {
        let mu = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
        let s = mu.classify_shape();
        assert_eq!(s.uniform_width, Some(2));
        assert!(!s.erasing && s.expanding && !s.coding);

        let erasing = Morphism::parse("a -> ab; b ->").unwrap();
        assert!(erasing.classify_shape().erasing);
    }

    #[test]
    fn coding_parse_and_apply() {
        let abcd = Alphabet::new(["a", "b", "c", "d"]).unwrap();
        let tau = Coding::parse(&abcd, "0011").unwrap();
        let w = Word::parse(&abcd, "abacabdb").unwrap();
        assert_eq!(tau.apply(&w).unwrap().display(), "00010010");
    }

    #[test]
    fn power_budget_trips() {
        let m = Morphism::parse("a -> aa").unwrap();
        assert!(matches!(
            m.power(40, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
