//! Built-in word constructions bundled with classification evidence and
//! desk-scale assertion suites.

pub mod catalog;
pub mod sturmian;

pub use catalog::{catalog, find_entry};
pub use sturmian::{Angle, QuadraticReal, SturmianSampler};

use serde::Serialize;

use crate::generate::{WordStream, DEFAULT_STREAM_BUDGET};
use crate::morphism::{Coding, Morphism};
use crate::taxonomy::{closure, Assignment, Prop};
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// Which increasing integer set a characteristic word marks with 1s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IntegerStream {
    Factorials,
    FibonacciNumbers,
    PowersOf(u64),
}

impl IntegerStream {
    /// Members of the set below `limit`, ascending, without duplicates.
    pub fn members_below(&self, limit: u64) -> Vec<u64> {
        let mut out = Vec::new();
        match self {
            IntegerStream::Factorials => {
                let mut f: u64 = 1;
                let mut n: u64 = 1;
                while f < limit {
                    out.push(f);
                    n += 1;
                    f = match f.checked_mul(n) {
                        Some(next) => next,
                        None => break,
                    };
                }
            }
            IntegerStream::FibonacciNumbers => {
                let (mut a, mut b) = (0u64, 1u64);
                while a < limit {
                    if out.last() != Some(&a) {
                        out.push(a);
                    }
                    let next = a + b;
                    a = b;
                    b = next;
                }
            }
            IntegerStream::PowersOf(k) => {
                let mut p: u64 = 1;
                while p < limit {
                    out.push(p);
                    p = match p.checked_mul(*k) {
                        Some(next) => next,
                        None => break,
                    };
                }
            }
        }
        out
    }
}

/// Closed-form product words: concatenations of indexed blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductFormula {
    /// ∏_{n≥1} 0·1^{(ν₂(n)+1)²} — every complete 1-run length is a square.
    SquareRuns,
}

/// A recipe that can materialize any prefix of a specific infinite word.
#[derive(Debug, Clone)]
pub enum WordSpec {
    /// Fixed point of a prolongable morphism, optionally followed by a coding.
    MorphicFixedPoint {
        morphism: Morphism,
        seed: String,
        coding: Option<Coding>,
    },
    /// The base word with its first letters overwritten by `replacement`.
    PrefixPatch {
        base: Box<WordSpec>,
        replacement: Vec<String>,
    },
    /// The base word with its first `offset` letters dropped.
    Shift { base: Box<WordSpec>, offset: usize },
    /// 0/1 word with a 1 exactly at the positions in the integer set.
    Characteristic(IntegerStream),
    /// Base-k digit strings of 1, 2, 3, … concatenated.
    BaseConcat(u32),
    /// s_n = ⌊(n+1)α+ρ⌋ − ⌊nα+ρ⌋ over the letters ⌊α⌋ and ⌊α⌋+1.
    Sturmian { alpha: Angle, rho: Angle },
    /// Image of the ruler sequence ν₂(1), ν₂(2), … under
    /// i → 0^zeros · 1^(ones_base^(i+1)).
    RulerImage { zeros: usize, ones_base: u64 },
    Product(ProductFormula),
}

fn binary_alphabet() -> Alphabet {
    Alphabet::new(["0", "1"]).expect("binary alphabet")
}

/// 2-adic valuation of n ≥ 1.
pub fn nu2(n: u64) -> u32 {
    n.trailing_zeros()
}

impl WordSpec {
    /// Exact first `n` symbols; `n` must stay within `budget`.
    pub fn materialize(&self, n: usize, budget: usize) -> Result<Word> {
        if n > budget {
            return Err(Error::BudgetExceeded { needed: n, budget });
        }
        match self {
            WordSpec::MorphicFixedPoint {
                morphism,
                seed,
                coding,
            } => {
                let mut stream =
                    WordStream::new(morphism.clone(), seed, coding.clone(), budget)?;
                stream.prefix(n)
            }
            WordSpec::PrefixPatch { base, replacement } => {
                let inner = base.materialize(n, budget)?;
                let mut letters: Vec<String> =
                    inner.alphabet().letters().map(str::to_string).collect();
                for t in replacement {
                    if !letters.iter().any(|l| l == t) {
                        letters.push(t.clone());
                    }
                }
                let alphabet = Alphabet::new(letters)?;
                let mut ids = Vec::with_capacity(n);
                for i in 0..n {
                    let token = if i < replacement.len() {
                        replacement[i].as_str()
                    } else {
                        inner.token(i)
                    };
                    ids.push(alphabet.id(token)?);
                }
                Ok(Word::from_ids(&alphabet, ids))
            }
            WordSpec::Shift { base, offset } => {
                let inner = base.materialize(n + offset, budget)?;
                Ok(inner.factor(*offset, n))
            }
            WordSpec::Characteristic(stream) => {
                let alphabet = binary_alphabet();
                let mut ids = vec![0u32; n];
                for m in stream.members_below(n as u64) {
                    ids[m as usize] = 1;
                }
                Ok(Word::from_ids(&alphabet, ids))
            }
            WordSpec::BaseConcat(k) => {
                if !(2..=10).contains(k) {
                    return Err(Error::BadConstant(format!(
                        "concatenation base {k} out of range 2..=10"
                    )));
                }
                let letters: Vec<String> = (0..*k).map(|d| d.to_string()).collect();
                let alphabet = Alphabet::new(letters)?;
                let mut ids: Vec<u32> = Vec::with_capacity(n);
                let mut value: u64 = 1;
                let mut digits: Vec<u32> = Vec::new();
                while ids.len() < n {
                    digits.clear();
                    let mut v = value;
                    while v > 0 {
                        digits.push((v % u64::from(*k)) as u32);
                        v /= u64::from(*k);
                    }
                    ids.extend(digits.iter().rev());
                    value += 1;
                }
                ids.truncate(n);
                Ok(Word::from_ids(&alphabet, ids))
            }
            WordSpec::Sturmian { alpha, rho } => {
                let sampler = SturmianSampler::new(alpha.clone(), rho.clone())?;
                let (lo, hi) = sampler.letters();
                let alphabet = Alphabet::new([lo.to_string(), hi.to_string()])?;
                let mut ids = Vec::with_capacity(n);
                let mut prev = sampler.floor_at(0)?;
                for i in 0..n {
                    let cur = sampler.floor_at(i as u64 + 1)?;
                    let step: i64 = (&cur - &prev)
                        .try_into()
                        .map_err(|_| Error::BadConstant("floor step out of range".into()))?;
                    prev = cur;
                    let id = if step == lo {
                        0
                    } else if step == hi {
                        1
                    } else {
                        return Err(Error::BadConstant(format!(
                            "floor step {step} outside {{{lo}, {hi}}}"
                        )));
                    };
                    ids.push(id);
                }
                Ok(Word::from_ids(&alphabet, ids))
            }
            WordSpec::RulerImage { zeros, ones_base } => {
                let alphabet = binary_alphabet();
                let mut ids: Vec<u32> = Vec::with_capacity(n);
                let mut m: u64 = 1;
                while ids.len() < n {
                    ids.extend(std::iter::repeat(0).take(*zeros));
                    let ones = u128::from(*ones_base)
                        .checked_pow(nu2(m) + 1)
                        .unwrap_or(u128::MAX)
                        .min((n + 1) as u128) as usize;
                    ids.extend(std::iter::repeat(1).take(ones));
                    m += 1;
                }
                ids.truncate(n);
                Ok(Word::from_ids(&alphabet, ids))
            }
            WordSpec::Product(ProductFormula::SquareRuns) => {
                let alphabet = binary_alphabet();
                let mut ids: Vec<u32> = Vec::with_capacity(n);
                let mut m: u64 = 1;
                while ids.len() < n {
                    ids.push(0);
                    let ones = ((nu2(m) + 1) as usize).pow(2).min(n + 1);
                    ids.extend(std::iter::repeat(1).take(ones));
                    m += 1;
                }
                ids.truncate(n);
                Ok(Word::from_ids(&alphabet, ids))
            }
        }
    }

    /// Short structural description for listings.
    pub fn describe(&self) -> String {
        match self {
            WordSpec::MorphicFixedPoint {
                morphism,
                seed,
                coding,
            } => {
                let a = morphism.alphabet();
                let rules: Vec<String> = a
                    .letters()
                    .enumerate()
                    .map(|(i, l)| {
                        let img: Vec<&str> = morphism
                            .image_ids(i as u32)
                            .iter()
                            .map(|&id| a.letter(id))
                            .collect();
                        format!("{l}->{}", img.join(""))
                    })
                    .collect();
                let mut s = format!("fixed point of {} on {}", rules.join(", "), seed);
                if let Some(c) = coding {
                    let map: Vec<String> = c
                        .source()
                        .letters()
                        .enumerate()
                        .map(|(i, l)| format!("{l}->{}", c.target().letter(c.map_id(i as u32))))
                        .collect();
                    s.push_str(&format!(", coded {}", map.join(", ")));
                }
                s
            }
            WordSpec::PrefixPatch { base, replacement } => format!(
                "{} with prefix patched to {}",
                base.describe(),
                replacement.join("")
            ),
            WordSpec::Shift { base, offset } => {
                format!("{} shifted by {offset}", base.describe())
            }
            WordSpec::Characteristic(stream) => match stream {
                IntegerStream::Factorials => "characteristic word of the factorials".into(),
                IntegerStream::FibonacciNumbers => {
                    "characteristic word of the Fibonacci numbers".into()
                }
                IntegerStream::PowersOf(k) => {
                    format!("characteristic word of the powers of {k}")
                }
            },
            WordSpec::BaseConcat(k) => {
                format!("base-{k} expansions of 1, 2, 3, … concatenated")
            }
            WordSpec::Sturmian { alpha, rho } => format!(
                "floor-difference word s_n = [(n+1)α+ρ]-[nα+ρ], α = {alpha:?}, ρ = {rho:?}"
            ),
            WordSpec::RulerImage { zeros, ones_base } => format!(
                "ruler sequence ν₂(n) mapped through i -> 0^{zeros} 1^({ones_base}^(i+1))"
            ),
            WordSpec::Product(ProductFormula::SquareRuns) => {
                "product word ∏ 0·1^((ν₂(n)+1)²)".into()
            }
        }
    }
}

/// One executable assertion bundled with a corpus entry.
pub struct Check {
    pub name: &'static str,
    /// Symbols of the primary word the check needs at full fidelity.
    pub needed: usize,
    runner: Box<dyn Fn(&mut CheckCtx) -> Result<CheckOutcome> + Send + Sync>,
}

impl Check {
    pub fn new(
        name: &'static str,
        needed: usize,
        runner: impl Fn(&mut CheckCtx) -> Result<CheckOutcome> + Send + Sync + 'static,
    ) -> Self {
        Check {
            name,
            needed,
            runner: Box::new(runner),
        }
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Check({}, needs {})", self.name, self.needed)
    }
}

pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
}

pub fn pass(detail: impl Into<String>) -> Result<CheckOutcome> {
    Ok(CheckOutcome {
        passed: true,
        detail: detail.into(),
    })
}

pub fn fail(detail: impl Into<String>) -> Result<CheckOutcome> {
    Ok(CheckOutcome {
        passed: false,
        detail: detail.into(),
    })
}

/// Shared state handed to check runners: the entry's own word (cached at the
/// longest prefix requested so far) plus the effective budget.
pub struct CheckCtx<'a> {
    spec: &'a WordSpec,
    budget: usize,
    cache: Option<Word>,
}

impl CheckCtx<'_> {
    /// Prefix of the entry's primary word.
    pub fn word(&mut self, n: usize) -> Result<Word> {
        let have = self.cache.as_ref().map_or(0, Word::len);
        if have < n {
            self.cache = Some(self.spec.materialize(n, self.budget)?);
        }
        Ok(self.cache.as_ref().unwrap().prefix(n))
    }

    /// Materialize an auxiliary construction under the same budget.
    pub fn aux(&self, spec: &WordSpec, n: usize) -> Result<Word> {
        spec.materialize(n, self.budget)
    }

    pub fn budget(&self) -> usize {
        self.budget
    }
}

/// Identifier of a corpus entry: a one-letter class label or a word name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EntryId {
    Class(char),
    Named(&'static str),
}

impl std::fmt::Display for EntryId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EntryId::Class(c) => write!(f, "{c}"),
            EntryId::Named(s) => write!(f, "{s}"),
        }
    }
}

pub struct CorpusEntry {
    pub id: EntryId,
    /// Conventional short name of the word, when it has one (f, t, chi, …).
    pub symbol: Option<&'static str>,
    pub title: &'static str,
    pub spec: WordSpec,
    /// Property facts established by the construction, as a partial
    /// assignment; its closure must be contradiction-free.
    pub evidence: Assignment,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub title: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl EntryReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Default symbol budget for [`verify`]: enough for every built-in assertion.
pub const DEFAULT_VERIFY_BUDGET: usize = DEFAULT_STREAM_BUDGET;

/// Runs the entry's evidence closure, label consistency, and every bundled
/// assertion. Checks needing more symbols than the budget are reported as
/// skipped, not failed; runtime errors inside a check are failures.
pub fn verify(entry: &CorpusEntry, budget: Option<usize>) -> EntryReport {
    let budget = budget.unwrap_or(DEFAULT_VERIFY_BUDGET);
    let mut results = Vec::with_capacity(entry.checks.len() + 2);

    let closed = closure(entry.evidence.clone());
    match &closed {
        Ok(assignment) => {
            results.push(CheckResult {
                name: "evidence-closure".into(),
                status: CheckStatus::Pass,
                detail: format!(
                    "closure fixes {} of {} properties without contradiction",
                    assignment.slots().iter().filter(|s| s.is_some()).count(),
                    crate::taxonomy::PROP_COUNT
                ),
            });
        }
        Err(contradiction) => {
            results.push(CheckResult {
                name: "evidence-closure".into(),
                status: CheckStatus::Fail,
                detail: format!("evidence is inconsistent: {contradiction}"),
            });
        }
    }

    if let EntryId::Class(label) = entry.id {
        let status = match &closed {
            Ok(assignment) => match assignment.as_total() {
                Some(props) => match crate::taxonomy::class_label(&props) {
                    Ok(found) if found == label => CheckResult {
                        name: "class-label".into(),
                        status: CheckStatus::Pass,
                        detail: format!(
                            "evidence closes to the full assignment of class ({label})"
                        ),
                    },
                    Ok(found) => CheckResult {
                        name: "class-label".into(),
                        status: CheckStatus::Fail,
                        detail: format!("evidence closes to class ({found}), not ({label})"),
                    },
                    Err(e) => CheckResult {
                        name: "class-label".into(),
                        status: CheckStatus::Fail,
                        detail: format!("closure is not a consistent class: {e}"),
                    },
                },
                None => {
                    let consistent = crate::taxonomy::enumerate_classes()
                        .iter()
                        .find(|c| c.label == label)
                        .map(|c| assignment.consistent_with(&c.props))
                        .unwrap_or(false);
                    CheckResult {
                        name: "class-label".into(),
                        status: if consistent {
                            CheckStatus::Pass
                        } else {
                            CheckStatus::Fail
                        },
                        detail: format!(
                            "partial evidence is{} consistent with class ({label})",
                            if consistent { "" } else { " not" }
                        ),
                    }
                }
            },
            Err(_) => CheckResult {
                name: "class-label".into(),
                status: CheckStatus::Fail,
                detail: "cannot match label: evidence closure failed".into(),
            },
        };
        results.push(status);
    }

    let mut ctx = CheckCtx {
        spec: &entry.spec,
        budget,
        cache: None,
    };
    for check in &entry.checks {
        if check.needed > budget {
            results.push(CheckResult {
                name: check.name.into(),
                status: CheckStatus::Skipped,
                detail: format!(
                    "needs {} symbols but the budget is {budget}",
                    check.needed
                ),
            });
            continue;
        }
        let result = match (check.runner)(&mut ctx) {
            Ok(outcome) => CheckResult {
                name: check.name.into(),
                status: if outcome.passed {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                detail: outcome.detail,
            },
            Err(e) => CheckResult {
                name: check.name.into(),
                status: CheckStatus::Fail,
                detail: format!("check aborted: {e}"),
            },
        };
        results.push(result);
    }

    let passed = results.iter().all(|r| r.status != CheckStatus::Fail);
    EntryReport {
        id: entry.id.to_string(),
        title: entry.title.to_string(),
        checks: results,
        passed,
    }
}

/// Convenience: evidence assignment from (property, value) facts.
pub fn evidence(facts: &[(Prop, bool)]) -> Assignment {
    Assignment::of(facts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_words() {
        let a = WordSpec::Characteristic(IntegerStream::Factorials);
        assert_eq!(
            a.materialize(26, 1000).unwrap().display(),
            "01100010000000000000000010"
        );
        let chi = WordSpec::Characteristic(IntegerStream::FibonacciNumbers);
        assert_eq!(chi.materialize(14, 1000).unwrap().display(), "11110100100001");
        let pow = WordSpec::Characteristic(IntegerStream::PowersOf(2));
        assert_eq!(pow.materialize(9, 1000).unwrap().display(), "011010001");
    }

    #[test]
    fn base_concat() {
        let b = WordSpec::BaseConcat(2);
        assert_eq!(b.materialize(17, 1000).unwrap().display(), "11011100101110111");
        let t = WordSpec::BaseConcat(3);
        // 1 2 10 11 12 20 21 22 100 …
        assert_eq!(t.materialize(12, 1000).unwrap().display(), "121011122021");
        assert!(WordSpec::BaseConcat(1).materialize(5, 1000).is_err());
    }

    #[test]
    fn patch_and_shift() {
        let fib = WordSpec::MorphicFixedPoint {
            morphism: Morphism::parse("0 -> 01; 1 -> 0").unwrap(),
            seed: "0".into(),
            coding: None,
        };
        let patched = WordSpec::PrefixPatch {
            base: Box::new(fib.clone()),
            replacement: vec!["2".into(), "2".into()],
        };
        assert_eq!(patched.materialize(8, 1000).unwrap().display(), "22001010");
        let shifted = WordSpec::Shift {
            base: Box::new(fib),
            offset: 1,
        };
        assert_eq!(shifted.materialize(7, 1000).unwrap().display(), "1001010");
    }

    #[test]
    fn ruler_image_and_product() {
        let y = WordSpec::RulerImage {
            zeros: 3,
            ones_base: 3,
        };
        assert_eq!(
            y.materialize(27, 1000).unwrap().display(),
            "000111000111111111000111000"
        );
        let x = WordSpec::Product(ProductFormula::SquareRuns);
        assert_eq!(
            x.materialize(28, 1000).unwrap().display(),
            "0101111010111111111010111101"
        );
    }

    #[test]
    fn sturmian_pi_prefix() {
        let c = WordSpec::Sturmian {
            alpha: Angle::Pi,
            rho: Angle::zero(),
        };
        assert_eq!(c.materialize(8, 1000).unwrap().display(), "33333334");
    }

    #[test]
    fn budget_is_enforced() {
        let spec = WordSpec::Characteristic(IntegerStream::Factorials);
        assert!(matches!(
            spec.materialize(100, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
