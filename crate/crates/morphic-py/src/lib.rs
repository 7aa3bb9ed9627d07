//! Python bindings: morphisms and fixed points, specification-text
//! generation, the pattern and complexity analyzers, the property
//! taxonomy, and the bundled corpus.
//!
//! Words cross the boundary as strings: single-character letters are
//! concatenated, multi-character letters are whitespace-separated, matching
//! the text format everywhere else.

use std::collections::HashMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use morphic::analyze;
use morphic::corpus;
use morphic::dsl;
use morphic::generate::{WordStream, DEFAULT_STREAM_BUDGET};
use morphic::taxonomy;
use morphic::{Alphabet, Coding, Word};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Rebuilds a word from its text form, inferring the alphabet from the
/// letters in order of first appearance.
fn word_from_text(text: &str) -> PyResult<Word> {
    let tokens: Vec<String> = if text.contains(char::is_whitespace) {
        text.split_whitespace().map(str::to_string).collect()
    } else {
        text.chars().map(String::from).collect()
    };
    if tokens.is_empty() {
        return Err(value_error("empty word"));
    }
    let mut letters: Vec<String> = Vec::new();
    for t in &tokens {
        if !letters.contains(t) {
            letters.push(t.clone());
        }
    }
    let alphabet = Alphabet::new(letters).map_err(value_error)?;
    Word::from_tokens(&alphabet, &tokens).map_err(value_error)
}

/// A letter-to-word substitution given as rule text, e.g. "0 -> 01; 1 -> 0".
#[pyclass(frozen)]
struct Morphism {
    inner: morphic::Morphism,
}

#[pymethods]
impl Morphism {
    #[new]
    fn new(rules: &str) -> PyResult<Self> {
        Ok(Morphism {
            inner: morphic::Morphism::parse(rules).map_err(value_error)?,
        })
    }

    fn __repr__(&self) -> String {
        let a = self.inner.alphabet();
        let rules: Vec<String> = a
            .letters()
            .enumerate()
            .map(|(i, l)| {
                let image: Vec<&str> = self
                    .inner
                    .image_ids(i as u32)
                    .iter()
                    .map(|&id| a.letter(id))
                    .collect();
                format!("{l} -> {}", image.join(""))
            })
            .collect();
        format!("Morphism(\"{}\")", rules.join("; "))
    }

    /// Letters of the source alphabet, in declaration order.
    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().letters().map(str::to_string).collect()
    }

    /// The image of one letter.
    fn image(&self, letter: &str) -> PyResult<String> {
        Ok(self.inner.image(letter).map_err(value_error)?.display())
    }

    /// Applies the morphism to a word.
    fn apply(&self, word: &str) -> PyResult<String> {
        let w = Word::parse(self.inner.alphabet(), word).map_err(value_error)?;
        Ok(self.inner.apply(&w).map_err(value_error)?.display())
    }

    /// The n-th iterated image of a letter.
    #[pyo3(signature = (letter, n, budget=None))]
    fn iterate(&self, letter: &str, n: u32, budget: Option<usize>) -> PyResult<String> {
        let budget = budget.unwrap_or(DEFAULT_STREAM_BUDGET);
        Ok(morphic::generate::iterate(&self.inner, letter, n, budget)
            .map_err(value_error)?
            .display())
    }

    /// The first n symbols of the fixed point grown from `seed`, optionally
    /// renamed through a coding ("011" or "x y z", one image per letter).
    #[pyo3(signature = (seed, n, coding=None, budget=None))]
    fn prefix(
        &self,
        seed: &str,
        n: usize,
        coding: Option<&str>,
        budget: Option<usize>,
    ) -> PyResult<String> {
        let budget = budget.unwrap_or(DEFAULT_STREAM_BUDGET);
        let coding = coding
            .map(|images| Coding::parse(self.inner.alphabet(), images))
            .transpose()
            .map_err(value_error)?;
        let mut stream = WordStream::new(self.inner.clone(), seed, coding, budget)
            .map_err(value_error)?;
        Ok(stream.prefix(n).map_err(value_error)?.display())
    }

    /// Occurrence counts: entry [a][b] counts letter b in the image of a.
    fn incidence_matrix(&self) -> Vec<Vec<u64>> {
        self.inner.incidence_matrix().entries().to_vec()
    }

    /// Smallest n making every n-th image contain every letter, or None.
    fn primitivity(&self) -> Option<u32> {
        analyze::primitivity(&self.inner)
    }

    /// Common image length, when all images share one.
    fn uniform_width(&self) -> Option<usize> {
        self.inner.classify_shape().uniform_width
    }

    /// Limiting letter frequencies of the fixed point (primitive case).
    fn letter_frequencies(&self, seed: &str, n: usize) -> PyResult<HashMap<String, f64>> {
        let mut stream =
            WordStream::new(self.inner.clone(), seed, None, DEFAULT_STREAM_BUDGET)
                .map_err(value_error)?;
        let w = stream.prefix(n).map_err(value_error)?;
        let report = analyze::letter_frequency(&w, &self.inner).map_err(value_error)?;
        Ok(report
            .letters
            .iter()
            .zip(&report.theoretical)
            .map(|(l, &f)| (l.clone(), f))
            .collect())
    }
}

/// Generates the first n symbols of the word a specification text names.
#[pyfunction]
#[pyo3(signature = (spec_text, n, budget=None))]
fn generate(spec_text: &str, n: usize, budget: Option<usize>) -> PyResult<String> {
    let doc = dsl::parse_spec(spec_text).map_err(value_error)?;
    let spec = doc.word_spec().map_err(value_error)?;
    let budget = budget.unwrap_or(DEFAULT_STREAM_BUDGET);
    Ok(spec.materialize(n, budget).map_err(value_error)?.display())
}

/// Number of distinct factors of each length 1..=n_max.
#[pyfunction]
fn factor_complexity(word: &str, n_max: usize) -> PyResult<Vec<usize>> {
    let w = word_from_text(word)?;
    Ok(analyze::factor_complexity(&w, n_max)
        .map_err(value_error)?
        .values)
}

/// (start, period) of every k-th power with period at most max_period.
#[pyfunction]
fn find_powers(word: &str, k: usize, max_period: usize) -> PyResult<Vec<(usize, usize)>> {
    Ok(analyze::find_k_powers(&word_from_text(word)?, k, max_period))
}

/// (start, period) of every overlap xyxyx with period at most max_period.
#[pyfunction]
fn find_overlaps(word: &str, max_period: usize) -> PyResult<Vec<(usize, usize)>> {
    Ok(analyze::find_overlaps(&word_from_text(word)?, max_period))
}

/// The twenty property classes as (label, {property: bool}) pairs.
#[pyfunction]
fn enumerate_classes() -> Vec<(String, HashMap<String, bool>)> {
    taxonomy::enumerate_classes()
        .iter()
        .map(|class| {
            let props = taxonomy::PROPS
                .iter()
                .map(|&p| (p.short(), class.holds(p)))
                .collect();
            (class.label.to_string(), props)
        })
        .collect()
}

/// Closes evidence like "P5=true,P4=false" and returns the compatible
/// class labels. Raises ValueError on contradictory evidence.
#[pyfunction]
fn classify(evidence: &str) -> PyResult<Vec<String>> {
    let mut pairs = Vec::new();
    for item in evidence.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (prop, value) = item
            .split_once('=')
            .ok_or_else(|| value_error(format!("evidence {item:?} is not PROP=BOOL")))?;
        let prop = taxonomy::Prop::parse(prop).map_err(value_error)?;
        let value = match value.trim() {
            "true" => true,
            "false" => false,
            other => return Err(value_error(format!("{other:?} is neither true nor false"))),
        };
        pairs.push((prop, value));
    }
    let labels = taxonomy::classify_evidence(taxonomy::Assignment::of(&pairs))
        .map_err(value_error)?;
    Ok(labels.iter().map(char::to_string).collect())
}

/// (id, title, specification text) of every corpus entry.
#[pyfunction]
fn corpus_entries() -> Vec<(String, String, String)> {
    corpus::catalog()
        .iter()
        .map(|entry| {
            let doc = dsl::SpecDocument::from_word_spec(&entry.spec)
                .expect("every corpus construction has a specification text");
            (
                entry.id.to_string(),
                entry.title.to_string(),
                dsl::print_spec(&doc),
            )
        })
        .collect()
}

/// Runs one corpus entry's checks; returns (passed, [(name, status, detail)]).
#[pyfunction]
#[pyo3(signature = (key, budget=None))]
fn corpus_verify(
    key: &str,
    budget: Option<usize>,
) -> PyResult<(bool, Vec<(String, String, String)>)> {
    let entry =
        corpus::find_entry(key).ok_or_else(|| value_error(format!("no corpus entry {key:?}")))?;
    let report = corpus::verify(&entry, budget);
    let checks = report
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                corpus::CheckStatus::Pass => "PASS",
                corpus::CheckStatus::Fail => "FAIL",
                corpus::CheckStatus::Skipped => "SKIP",
            };
            (c.name.clone(), status.to_string(), c.detail.clone())
        })
        .collect();
    Ok((report.passed, checks))
}

#[pymodule]
fn morphic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Morphism>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(factor_complexity, m)?)?;
    m.add_function(wrap_pyfunction!(find_powers, m)?)?;
    m.add_function(wrap_pyfunction!(find_overlaps, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_classes, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_entries, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_verify, m)?)?;
    Ok(())
}
