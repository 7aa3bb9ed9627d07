//! Line-oriented text format for word specifications.
//!
//! A specification names an infinite word in one of two shapes:
//!
//! * a rule table — `alphabet:`, `rule`, and `seed:` lines defining a
//!   morphism fixed point, optionally followed by a `coding:` line;
//! * a built-in family — a single `source:` line naming a closed-form
//!   construction (characteristic words, digit concatenations, Sturmian
//!   words, ruler-sequence images, run products).
//!
//! Either shape may carry pipeline directives: `patch:` overwrites the
//! opening symbols, `shift:` drops opening symbols (the patch, if any, is
//! applied first), and `values:` attaches integer letter values for additive
//! analyses (rule tables only). `#` starts a comment; blank lines are
//! ignored.
//!
//! ```text
//! # the Fibonacci word
//! alphabet: 0 1
//! rule 0 -> 0 1
//! rule 1 -> 0
//! seed: 0
//! ```
//!
//! [`print_spec`] emits a canonical form (rules in alphabet order, one
//! directive per line, no comments); parsing it yields the same document.

use std::fmt::Write as _;

use crate::corpus::{Angle, IntegerStream, ProductFormula, QuadraticReal, WordSpec};
use crate::morphism::{Coding, Morphism};
use crate::words::Alphabet;
use crate::{Error, Result};

/// A closed-form construction selected by a `source:` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinSource {
    Characteristic(IntegerStream),
    BaseConcat(u32),
    Sturmian { alpha: Angle, rho: Angle },
    RulerImage { zeros: usize, ones_base: u64 },
    SquareRunProduct,
}

/// How the base word is produced: a morphism rule table or a built-in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecSource {
    Rules {
        alphabet: Vec<String>,
        /// One entry per alphabet letter, in alphabet order.
        rules: Vec<(String, Vec<String>)>,
        seed: String,
    },
    Builtin(BuiltinSource),
}

/// A parsed specification file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub source: SpecSource,
    /// Letter-to-letter renaming applied to the fixed point; empty = none.
    pub coding: Vec<(String, String)>,
    /// Integer letter values for additive analyses; empty = none.
    pub values: Vec<(String, i64)>,
    /// Replacement for the opening symbols; empty = none.
    pub patch: Vec<String>,
    /// Opening symbols to drop after patching; 0 = none.
    pub shift: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Tokens of one line with their 1-based character columns.
fn tokens_with_cols(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((col_of(line, s), &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((col_of(line, s), &line[s..]));
    }
    out
}

fn col_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

struct Parser {
    alphabet: Vec<String>,
    rules: Vec<(String, Vec<String>)>,
    seed: Option<String>,
    builtin: Option<BuiltinSource>,
    coding: Vec<(String, String)>,
    values: Vec<(String, i64)>,
    patch: Vec<String>,
    shift: usize,
    lines_seen: usize,
}

impl Parser {
    fn declared(&self, letter: &str) -> bool {
        self.alphabet.iter().any(|l| l == letter)
    }

    fn need_table(&self, line: usize, col: usize, what: &str) -> Result<()> {
        if self.builtin.is_some() {
            return Err(err(
                line,
                col,
                format!("{what} cannot be combined with a `source:` line"),
            ));
        }
        if self.alphabet.is_empty() {
            return Err(err(
                line,
                col,
                format!("{what} appears before the `alphabet:` declaration"),
            ));
        }
        Ok(())
    }
}

/// Parses specification text; errors carry the offending line and column.
pub fn parse_spec(text: &str) -> Result<SpecDocument> {
    let mut p = Parser {
        alphabet: Vec::new(),
        rules: Vec::new(),
        seed: None,
        builtin: None,
        coding: Vec::new(),
        values: Vec::new(),
        patch: Vec::new(),
        shift: 0,
        lines_seen: 0,
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        p.lines_seen = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens_with_cols(content);
        let Some(&(dcol, directive)) = toks.first() else {
            continue;
        };
        let rest = &toks[1..];
        match directive {
            "alphabet:" => {
                if p.builtin.is_some() {
                    return Err(err(
                        line_no,
                        dcol,
                        "an alphabet cannot be combined with a `source:` line",
                    ));
                }
                if !p.alphabet.is_empty() {
                    return Err(err(line_no, dcol, "duplicate `alphabet:` line"));
                }
                if rest.is_empty() {
                    return Err(err(line_no, dcol, "`alphabet:` line declares no letters"));
                }
                for &(col, tok) in rest {
                    if tok == "->" {
                        return Err(err(line_no, col, "the arrow `->` is not a valid letter"));
                    }
                    if p.declared(tok) {
                        return Err(err(line_no, col, format!("repeated letter {tok:?}")));
                    }
                    p.alphabet.push(tok.to_string());
                }
            }
            "rule" => {
                p.need_table(line_no, dcol, "a rule")?;
                let Some(&(hcol, head)) = rest.first() else {
                    return Err(err(line_no, dcol, "`rule` line names no letter"));
                };
                if !p.declared(head) {
                    return Err(err(line_no, hcol, format!("undeclared letter {head:?}")));
                }
                if p.rules.iter().any(|(l, _)| l == head) {
                    return Err(err(
                        line_no,
                        hcol,
                        format!("duplicate rule for letter {head:?}"),
                    ));
                }
                match rest.get(1) {
                    Some(&(_, "->")) => {}
                    Some(&(col, other)) => {
                        return Err(err(
                            line_no,
                            col,
                            format!("expected `->` after the rule letter, found {other:?}"),
                        ));
                    }
                    None => {
                        return Err(err(line_no, dcol, "expected `->` after the rule letter"));
                    }
                }
                let mut body = Vec::new();
                for &(col, tok) in &rest[2..] {
                    if !p.declared(tok) {
                        return Err(err(line_no, col, format!("undeclared letter {tok:?}")));
                    }
                    body.push(tok.to_string());
                }
                p.rules.push((head.to_string(), body));
            }
            "seed:" => {
                p.need_table(line_no, dcol, "a seed")?;
                if p.seed.is_some() {
                    return Err(err(line_no, dcol, "duplicate `seed:` line"));
                }
                let [(col, letter)] = rest else {
                    return Err(err(line_no, dcol, "`seed:` expects exactly one letter"));
                };
                if !p.declared(letter) {
                    return Err(err(line_no, *col, format!("undeclared letter {letter:?}")));
                }
                p.seed = Some(letter.to_string());
            }
            "coding:" => {
                p.need_table(line_no, dcol, "a coding")?;
                if !p.coding.is_empty() {
                    return Err(err(line_no, dcol, "duplicate `coding:` line"));
                }
                if rest.is_empty() {
                    return Err(err(line_no, dcol, "`coding:` line lists no pairs"));
                }
                for &(col, tok) in rest {
                    let Some((from, to)) = tok.split_once("->") else {
                        return Err(err(
                            line_no,
                            col,
                            format!("coding pair {tok:?} is not of the form L->T"),
                        ));
                    };
                    if !p.declared(from) {
                        return Err(err(line_no, col, format!("undeclared letter {from:?}")));
                    }
                    if to.is_empty() {
                        return Err(err(line_no, col, format!("coding pair {tok:?} has no target")));
                    }
                    if p.coding.iter().any(|(l, _)| l == from) {
                        return Err(err(
                            line_no,
                            col,
                            format!("duplicate coding for letter {from:?}"),
                        ));
                    }
                    p.coding.push((from.to_string(), to.to_string()));
                }
            }
            "values:" => {
                p.need_table(line_no, dcol, "a value map")?;
                if !p.values.is_empty() {
                    return Err(err(line_no, dcol, "duplicate `values:` line"));
                }
                for &(col, tok) in rest {
                    let Some((letter, num)) = tok.split_once('=') else {
                        return Err(err(
                            line_no,
                            col,
                            format!("value {tok:?} is not of the form L=integer"),
                        ));
                    };
                    if !p.declared(letter) {
                        return Err(err(line_no, col, format!("undeclared letter {letter:?}")));
                    }
                    if p.values.iter().any(|(l, _)| l == letter) {
                        return Err(err(
                            line_no,
                            col,
                            format!("duplicate value for letter {letter:?}"),
                        ));
                    }
                    let v: i64 = num.parse().map_err(|_| {
                        err(line_no, col, format!("value {num:?} is not an integer"))
                    })?;
                    p.values.push((letter.to_string(), v));
                }
            }
            "patch:" => {
                if !p.patch.is_empty() {
                    return Err(err(line_no, dcol, "duplicate `patch:` line"));
                }
                if rest.is_empty() {
                    return Err(err(line_no, dcol, "`patch:` line lists no letters"));
                }
                p.patch = rest.iter().map(|&(_, t)| t.to_string()).collect();
            }
            "shift:" => {
                if p.shift != 0 {
                    return Err(err(line_no, dcol, "duplicate `shift:` line"));
                }
                let [(col, num)] = rest else {
                    return Err(err(line_no, dcol, "`shift:` expects exactly one count"));
                };
                p.shift = num.parse().map_err(|_| {
                    err(line_no, *col, format!("shift {num:?} is not a count"))
                })?;
            }
            "source:" => {
                if p.builtin.is_some() {
                    return Err(err(line_no, dcol, "duplicate `source:` line"));
                }
                if !p.alphabet.is_empty() || p.seed.is_some() {
                    return Err(err(
                        line_no,
                        dcol,
                        "a `source:` line cannot be combined with a rule table",
                    ));
                }
                p.builtin = Some(parse_builtin(line_no, dcol, rest)?);
            }
            other => {
                return Err(err(line_no, dcol, format!("unknown directive {other:?}")));
            }
        }
    }

    let end = p.lines_seen + 1;
    let source = if let Some(builtin) = p.builtin {
        SpecSource::Builtin(builtin)
    } else {
        if p.alphabet.is_empty() {
            return Err(err(1, 1, "empty specification: no rule table or `source:` line"));
        }
        let Some(seed) = p.seed else {
            return Err(err(end, 1, "missing seed (`seed: L`)"));
        };
        let mut rules = Vec::with_capacity(p.alphabet.len());
        for letter in &p.alphabet {
            match p.rules.iter().find(|(l, _)| l == letter) {
                Some(rule) => rules.push(rule.clone()),
                None => {
                    return Err(err(end, 1, format!("missing rule for letter {letter:?}")));
                }
            }
        }
        SpecSource::Rules {
            alphabet: p.alphabet,
            rules,
            seed,
        }
    };
    Ok(SpecDocument {
        source,
        coding: p.coding,
        values: p.values,
        patch: p.patch,
        shift: p.shift,
    })
}

fn parse_builtin(line: usize, dcol: usize, rest: &[(usize, &str)]) -> Result<BuiltinSource> {
    let Some(&(col, family)) = rest.first() else {
        return Err(err(line, dcol, "`source:` names no construction"));
    };
    let args = &rest[1..];
    let want = |n: usize, usage: &str| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(err(line, col, format!("usage: source: {usage}")))
        }
    };
    match family {
        "characteristic" => {
            let Some(&(scol, set)) = args.first() else {
                return Err(err(
                    line,
                    col,
                    "usage: source: characteristic factorials|fibonacci|powers K",
                ));
            };
            match set {
                "factorials" => {
                    want(1, "characteristic factorials")?;
                    Ok(BuiltinSource::Characteristic(IntegerStream::Factorials))
                }
                "fibonacci" => {
                    want(1, "characteristic fibonacci")?;
                    Ok(BuiltinSource::Characteristic(IntegerStream::FibonacciNumbers))
                }
                "powers" => {
                    want(2, "characteristic powers K")?;
                    let (kcol, k) = args[1];
                    let k: u64 = k.parse().map_err(|_| {
                        err(line, kcol, format!("power base {k:?} is not an integer"))
                    })?;
                    if k < 2 {
                        return Err(err(line, kcol, "power base must be at least 2"));
                    }
                    Ok(BuiltinSource::Characteristic(IntegerStream::PowersOf(k)))
                }
                other => Err(err(
                    line,
                    scol,
                    format!("unknown characteristic set {other:?}"),
                )),
            }
        }
        "base-concat" => {
            want(1, "base-concat K")?;
            let (kcol, k) = args[0];
            let k: u32 = k
                .parse()
                .map_err(|_| err(line, kcol, format!("base {k:?} is not an integer")))?;
            Ok(BuiltinSource::BaseConcat(k))
        }
        "sturmian" => {
            let (alpha, rho) = match args {
                [(acol, a)] => (parse_angle(line, *acol, a)?, Angle::zero()),
                [(acol, a), (_, "rho"), (rcol, r)] => {
                    (parse_angle(line, *acol, a)?, parse_angle(line, *rcol, r)?)
                }
                _ => {
                    return Err(err(line, col, "usage: source: sturmian ALPHA [rho RHO]"));
                }
            };
            Ok(BuiltinSource::Sturmian { alpha, rho })
        }
        "ruler-image" => {
            want(2, "ruler-image zeros=Z ones-base=B")?;
            let mut zeros = None;
            let mut ones_base = None;
            for &(acol, arg) in args {
                if let Some(z) = arg.strip_prefix("zeros=") {
                    zeros = Some(z.parse::<usize>().map_err(|_| {
                        err(line, acol, format!("zero count {z:?} is not an integer"))
                    })?);
                } else if let Some(b) = arg.strip_prefix("ones-base=") {
                    ones_base = Some(b.parse::<u64>().map_err(|_| {
                        err(line, acol, format!("ones base {b:?} is not an integer"))
                    })?);
                } else {
                    return Err(err(line, acol, format!("unknown argument {arg:?}")));
                }
            }
            match (zeros, ones_base) {
                (Some(zeros), Some(ones_base)) => Ok(BuiltinSource::RulerImage { zeros, ones_base }),
                _ => Err(err(line, col, "usage: source: ruler-image zeros=Z ones-base=B")),
            }
        }
        "run-product" => {
            want(1, "run-product squares")?;
            let (scol, kind) = args[0];
            if kind == "squares" {
                Ok(BuiltinSource::SquareRunProduct)
            } else {
                Err(err(line, scol, format!("unknown run product {kind:?}")))
            }
        }
        other => Err(err(line, col, format!("unknown construction {other:?}"))),
    }
}

/// `pi`, `P/R`, `P`, or `(P+Q*sqrt(D))/R` (the sign may be `-`).
fn parse_angle(line: usize, col: usize, tok: &str) -> Result<Angle> {
    let bad = |msg: String| err(line, col, msg);
    if tok == "pi" {
        return Ok(Angle::Pi);
    }
    if let Some(inner) = tok.strip_prefix('(') {
        let Some((body, denom)) = inner.split_once(")/") else {
            return Err(bad(format!("constant {tok:?} is missing its `)/R` tail")));
        };
        let split = body[1..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .ok_or_else(|| bad(format!("constant {tok:?} needs `P+Q*sqrt(D)` inside parens")))?;
        let p: i64 = body[..split]
            .parse()
            .map_err(|_| bad(format!("rational part of {tok:?} is not an integer")))?;
        let sign: i64 = if body[split..].starts_with('-') { -1 } else { 1 };
        let rest = &body[split + 1..];
        let Some((q, d)) = rest.split_once("*sqrt(") else {
            return Err(bad(format!("constant {tok:?} needs a `Q*sqrt(D)` term")));
        };
        let q: i64 = q
            .parse()
            .map_err(|_| bad(format!("surd coefficient of {tok:?} is not an integer")))?;
        let Some(d) = d.strip_suffix(')') else {
            return Err(bad(format!("constant {tok:?} has an unclosed sqrt")));
        };
        let d: u64 = d
            .parse()
            .map_err(|_| bad(format!("radicand of {tok:?} is not an integer")))?;
        let r: i64 = denom
            .parse()
            .map_err(|_| bad(format!("denominator of {tok:?} is not an integer")))?;
        let value = QuadraticReal::new(p, sign * q, d, r)
            .map_err(|e| bad(format!("constant {tok:?}: {e}")))?;
        return Ok(Angle::Quadratic(value));
    }
    let (p, r) = match tok.split_once('/') {
        Some((p, r)) => (p, r),
        None => (tok, "1"),
    };
    let p: i64 = p
        .parse()
        .map_err(|_| bad(format!("constant {tok:?} is not an integer or P/R fraction")))?;
    let r: i64 = r
        .parse()
        .map_err(|_| bad(format!("denominator of {tok:?} is not an integer")))?;
    let value = QuadraticReal::new(p, 0, 0, r).map_err(|e| bad(format!("constant {tok:?}: {e}")))?;
    Ok(Angle::Quadratic(value))
}

fn print_angle(angle: &Angle) -> String {
    match angle {
        Angle::Pi => "pi".to_string(),
        Angle::Quadratic(x) => {
            let (p, q, d, r) = x.parts();
            if q == 0 {
                format!("{p}/{r}")
            } else {
                let sign = if q < 0 { '-' } else { '+' };
                format!("({p}{sign}{}*sqrt({d}))/{r}", q.abs())
            }
        }
    }
}

/// Canonical text form; parsing it reproduces the document.
pub fn print_spec(doc: &SpecDocument) -> String {
    let mut out = String::new();
    match &doc.source {
        SpecSource::Rules {
            alphabet,
            rules,
            seed,
        } => {
            writeln!(out, "alphabet: {}", alphabet.join(" ")).unwrap();
            for (letter, body) in rules {
                if body.is_empty() {
                    writeln!(out, "rule {letter} ->").unwrap();
                } else {
                    writeln!(out, "rule {letter} -> {}", body.join(" ")).unwrap();
                }
            }
            writeln!(out, "seed: {seed}").unwrap();
        }
        SpecSource::Builtin(builtin) => {
            let text = match builtin {
                BuiltinSource::Characteristic(IntegerStream::Factorials) => {
                    "characteristic factorials".to_string()
                }
                BuiltinSource::Characteristic(IntegerStream::FibonacciNumbers) => {
                    "characteristic fibonacci".to_string()
                }
                BuiltinSource::Characteristic(IntegerStream::PowersOf(k)) => {
                    format!("characteristic powers {k}")
                }
                BuiltinSource::BaseConcat(k) => format!("base-concat {k}"),
                BuiltinSource::Sturmian { alpha, rho } => {
                    format!("sturmian {} rho {}", print_angle(alpha), print_angle(rho))
                }
                BuiltinSource::RulerImage { zeros, ones_base } => {
                    format!("ruler-image zeros={zeros} ones-base={ones_base}")
                }
                BuiltinSource::SquareRunProduct => "run-product squares".to_string(),
            };
            writeln!(out, "source: {text}").unwrap();
        }
    }
    if !doc.coding.is_empty() {
        let pairs: Vec<String> = doc
            .coding
            .iter()
            .map(|(from, to)| format!("{from}->{to}"))
            .collect();
        writeln!(out, "coding: {}", pairs.join(" ")).unwrap();
    }
    if !doc.values.is_empty() {
        let pairs: Vec<String> = doc
            .values
            .iter()
            .map(|(letter, v)| format!("{letter}={v}"))
            .collect();
        writeln!(out, "values: {}", pairs.join(" ")).unwrap();
    }
    if !doc.patch.is_empty() {
        writeln!(out, "patch: {}", doc.patch.join(" ")).unwrap();
    }
    if doc.shift != 0 {
        writeln!(out, "shift: {}", doc.shift).unwrap();
    }
    out
}

impl SpecDocument {
    /// The construction this document names.
    pub fn word_spec(&self) -> Result<WordSpec> {
        let base = match &self.source {
            SpecSource::Rules {
                alphabet,
                rules,
                seed,
            } => {
                let a = Alphabet::new(alphabet.clone())?;
                let morphism = Morphism::new(&a, rules)?;
                let coding = if self.coding.is_empty() {
                    None
                } else {
                    let mut targets: Vec<String> = Vec::new();
                    for (_, to) in &self.coding {
                        if !targets.contains(to) {
                            targets.push(to.clone());
                        }
                    }
                    let target = Alphabet::new(targets)?;
                    Some(Coding::new(&a, &target, &self.coding)?)
                };
                WordSpec::MorphicFixedPoint {
                    morphism,
                    seed: seed.clone(),
                    coding,
                }
            }
            SpecSource::Builtin(builtin) => {
                if !self.coding.is_empty() {
                    return Err(Error::Invalid(
                        "a coding needs a rule table, not a built-in source".into(),
                    ));
                }
                match builtin {
                    BuiltinSource::Characteristic(stream) => {
                        WordSpec::Characteristic(stream.clone())
                    }
                    BuiltinSource::BaseConcat(k) => WordSpec::BaseConcat(*k),
                    BuiltinSource::Sturmian { alpha, rho } => WordSpec::Sturmian {
                        alpha: alpha.clone(),
                        rho: rho.clone(),
                    },
                    BuiltinSource::RulerImage { zeros, ones_base } => WordSpec::RulerImage {
                        zeros: *zeros,
                        ones_base: *ones_base,
                    },
                    BuiltinSource::SquareRunProduct => {
                        WordSpec::Product(ProductFormula::SquareRuns)
                    }
                }
            }
        };
        let base = if self.patch.is_empty() {
            base
        } else {
            WordSpec::PrefixPatch {
                base: Box::new(base),
                replacement: self.patch.clone(),
            }
        };
        Ok(if self.shift == 0 {
            base
        } else {
            WordSpec::Shift {
                base: Box::new(base),
                offset: self.shift,
            }
        })
    }

    /// Integer letter values as a vector aligned to the declared alphabet,
    /// for additive analyses. Every declared letter must carry a value.
    pub fn value_vector(&self) -> Result<Vec<i64>> {
        let SpecSource::Rules { alphabet, .. } = &self.source else {
            return Err(Error::Invalid(
                "letter values need a rule table, not a built-in source".into(),
            ));
        };
        if self.values.is_empty() {
            return Err(Error::Invalid("the specification has no `values:` line".into()));
        }
        alphabet
            .iter()
            .map(|letter| {
                self.values
                    .iter()
                    .find(|(l, _)| l == letter)
                    .map(|&(_, v)| v)
                    .ok_or_else(|| Error::MissingValue {
                        token: letter.clone(),
                    })
            })
            .collect()
    }

    /// Expresses a construction as a document, when the format can say it:
    /// at most one patch and one shift, with the patch innermost.
    pub fn from_word_spec(spec: &WordSpec) -> Option<SpecDocument> {
        let mut shift = 0;
        let mut cur = spec;
        if let WordSpec::Shift { base, offset } = cur {
            shift = *offset;
            cur = base;
        }
        let mut patch = Vec::new();
        if let WordSpec::PrefixPatch { base, replacement } = cur {
            patch = replacement.clone();
            cur = base;
        }
        let (source, coding) = match cur {
            WordSpec::MorphicFixedPoint {
                morphism,
                seed,
                coding,
            } => {
                let a = morphism.alphabet();
                let alphabet: Vec<String> = a.letters().map(str::to_string).collect();
                let rules: Vec<(String, Vec<String>)> = alphabet
                    .iter()
                    .enumerate()
                    .map(|(i, letter)| {
                        let body = morphism
                            .image_ids(i as u32)
                            .iter()
                            .map(|&id| a.letter(id).to_string())
                            .collect();
                        (letter.clone(), body)
                    })
                    .collect();
                let pairs = coding.as_ref().map_or_else(Vec::new, |c| {
                    alphabet
                        .iter()
                        .enumerate()
                        .map(|(i, letter)| {
                            let target = c.target().letter(c.map_id(i as u32));
                            (letter.clone(), target.to_string())
                        })
                        .collect()
                });
                (
                    SpecSource::Rules {
                        alphabet,
                        rules,
                        seed: seed.clone(),
                    },
                    pairs,
                )
            }
            WordSpec::Characteristic(stream) => (
                SpecSource::Builtin(BuiltinSource::Characteristic(stream.clone())),
                Vec::new(),
            ),
            WordSpec::BaseConcat(k) => {
                (SpecSource::Builtin(BuiltinSource::BaseConcat(*k)), Vec::new())
            }
            WordSpec::Sturmian { alpha, rho } => (
                SpecSource::Builtin(BuiltinSource::Sturmian {
                    alpha: alpha.clone(),
                    rho: rho.clone(),
                }),
                Vec::new(),
            ),
            WordSpec::RulerImage { zeros, ones_base } => (
                SpecSource::Builtin(BuiltinSource::RulerImage {
                    zeros: *zeros,
                    ones_base: *ones_base,
                }),
                Vec::new(),
            ),
            WordSpec::Product(ProductFormula::SquareRuns) => (
                SpecSource::Builtin(BuiltinSource::SquareRunProduct),
                Vec::new(),
            ),
            WordSpec::PrefixPatch { .. } | WordSpec::Shift { .. } => return None,
        };
        Some(SpecDocument {
            source,
            coding,
            values: Vec::new(),
            patch,
            shift,
        })
    }

    /// Letters a `values:` line may name, when the source is a rule table.
    pub fn declared_letters(&self) -> Option<&[String]> {
        match &self.source {
            SpecSource::Rules { alphabet, .. } => Some(alphabet),
            SpecSource::Builtin(_) => None,
        }
    }
}
