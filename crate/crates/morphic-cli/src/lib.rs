//! Command-line front end for the morphic-sequence workbench.
//!
//! Subcommands: `gen` prints a prefix of a specified word, `analyze` runs
//! the requested analyzers on such a prefix, `classify` closes partial
//! property evidence against the implication rules, `taxonomy enumerate`
//! prints the twenty property classes, and `corpus list` / `corpus verify`
//! work with the bundled example words.
//!
//! Exit codes: 0 on success, 1 when an assertion fails (a corpus check,
//! contradictory evidence, or a computation that cannot finish within its
//! budget), 2 on usage or parse errors.
//!
//! Output goes to the supplied writer in text form, or as one JSON object
//! (`--format json`) with the fixed top-level keys `command`, `input`,
//! `results`, `budgets`, and `version`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use morphic::analyze::{
    factor_complexity, find_additive_cubes, find_k_powers, find_overlaps, gap_report,
    letter_frequency,
};
use morphic::corpus::{catalog, find_entry, verify, CheckStatus, EntryId};
use morphic::dsl::{parse_spec, print_spec, SpecDocument, SpecSource};
use morphic::generate::DEFAULT_STREAM_BUDGET;
use morphic::taxonomy::{
    classify_evidence, closure, enumerate_classes, Assignment, Prop, PROPS,
};
use morphic::{Morphism, Word};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable overriding the default symbol budget.
pub const BUDGET_VAR: &str = "MORPHIC_BUDGET";

#[derive(Parser)]
#[command(
    name = "morphic",
    version,
    about = "Workbench for morphic sequences: generate, analyze, classify"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a prefix of the word a specification file describes.
    Gen(GenArgs),
    /// Generate a prefix and run the requested analyzers on it.
    Analyze(AnalyzeArgs),
    /// Close property evidence and list the compatible classes.
    Classify(ClassifyArgs),
    /// Inspect the property taxonomy.
    Taxonomy {
        #[command(subcommand)]
        command: TaxonomyCmd,
    },
    /// Inspect or verify the bundled word corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCmd,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Specification file.
    #[arg(long)]
    spec: PathBuf,
    /// Number of symbols to print.
    #[arg(long)]
    length: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Specification file.
    #[arg(long)]
    spec: PathBuf,
    /// Number of symbols to analyze.
    #[arg(long)]
    length: usize,
    /// Factor complexity p(1)..p(M).
    #[arg(long, value_name = "M")]
    complexity: Option<usize>,
    /// k-th powers with period at most P, written K,P.
    #[arg(long, value_name = "K,P", value_parser = parse_powers)]
    powers: Option<(usize, usize)>,
    /// Overlaps (xyxyx shapes) with period at most P.
    #[arg(long, value_name = "P")]
    overlaps: Option<usize>,
    /// Occurrence positions and gaps of the factor X.
    #[arg(long, value_name = "X")]
    gaps: Option<String>,
    /// Letter frequencies; rule tables also get the eigenvector prediction.
    #[arg(long)]
    freq: bool,
    /// Additive cubes over the spec's `values:` map, blocks up to B symbols.
    #[arg(long, value_name = "B")]
    additive: Option<usize>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated facts, e.g. P1=true,P6=true,P4=false.
    #[arg(long)]
    evidence: String,
}

#[derive(Subcommand)]
enum TaxonomyCmd {
    /// Print all twenty property classes with their truth tables.
    Enumerate,
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List every corpus entry with its specification text.
    List,
    /// Run the bundled checks for one entry, or for all of them.
    Verify {
        /// Class label (a..t), entry name, or symbol.
        entry: Option<String>,
        /// Symbol budget; checks needing more are skipped.
        #[arg(long)]
        budget: Option<usize>,
    },
}

fn parse_powers(s: &str) -> Result<(usize, usize), String> {
    let (k, p) = s
        .split_once(',')
        .ok_or_else(|| format!("expected K,P (power and max period), got {s:?}"))?;
    let k: usize = k.parse().map_err(|_| format!("power {k:?} is not an integer"))?;
    let p: usize = p
        .parse()
        .map_err(|_| format!("period bound {p:?} is not an integer"))?;
    if k < 2 {
        return Err("the power must be at least 2".into());
    }
    Ok((k, p))
}

/// A failed run: what to say and which exit code to use.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn assertion(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

/// A finished run: the envelope fields plus the text rendering.
struct Report {
    command: &'static str,
    input: Value,
    results: Value,
    budgets: Value,
    text: String,
    exit: i32,
}

/// Parses `args` and runs the selected subcommand, writing output to `out`.
/// Returns the process exit code.
pub fn run<I, S, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    let (command, outcome) = match cli.command {
        Cmd::Gen(args) => ("gen", cmd_gen(&args)),
        Cmd::Analyze(args) => ("analyze", cmd_analyze(&args)),
        Cmd::Classify(args) => ("classify", cmd_classify(&args)),
        Cmd::Taxonomy {
            command: TaxonomyCmd::Enumerate,
        } => ("taxonomy enumerate", cmd_taxonomy_enumerate()),
        Cmd::Corpus {
            command: CorpusCmd::List,
        } => ("corpus list", cmd_corpus_list()),
        Cmd::Corpus {
            command: CorpusCmd::Verify { entry, budget },
        } => ("corpus verify", cmd_corpus_verify(entry.as_deref(), budget)),
    };
    match outcome {
        Ok(report) => {
            match format {
                Format::Text => {
                    let _ = out.write_all(report.text.as_bytes());
                }
                Format::Json => {
                    let envelope = json!({
                        "command": report.command,
                        "input": report.input,
                        "results": report.results,
                        "budgets": report.budgets,
                        "version": VERSION,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&envelope).unwrap());
                }
            }
            report.exit
        }
        Err(failure) => {
            match format {
                Format::Text => {
                    let _ = writeln!(out, "error: {}", failure.message);
                }
                Format::Json => {
                    let envelope = json!({
                        "command": command,
                        "error": failure.message,
                        "version": VERSION,
                    });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&envelope).unwrap());
                }
            }
            failure.code
        }
    }
}

/// Default symbol budget, honoring the `MORPHIC_BUDGET` override.
fn default_budget() -> usize {
    std::env::var(BUDGET_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_STREAM_BUDGET)
}

fn load_document(path: &PathBuf) -> Result<SpecDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn materialize(doc: &SpecDocument, length: usize, budget: usize) -> Result<Word, Failure> {
    let spec = doc
        .word_spec()
        .map_err(|e| Failure::usage(e.to_string()))?;
    spec.materialize(length, budget)
        .map_err(|e| Failure::assertion(e.to_string()))
}

fn cmd_gen(args: &GenArgs) -> Result<Report, Failure> {
    let budget = default_budget();
    let doc = load_document(&args.spec)?;
    let w = materialize(&doc, args.length, budget)?;
    let letters: Vec<&str> = w.alphabet().letters().collect();
    Ok(Report {
        command: "gen",
        input: json!({
            "spec": args.spec.display().to_string(),
            "length": args.length,
        }),
        results: json!({
            "word": w.display(),
            "length": w.len(),
            "alphabet": letters,
        }),
        budgets: json!({ "stream": budget }),
        text: format!("{}\n", w.display()),
        exit: 0,
    })
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<Report, Failure> {
    let budget = default_budget();
    let doc = load_document(&args.spec)?;
    let w = materialize(&doc, args.length, budget)?;
    let letters: Vec<String> = w.alphabet().letters().map(str::to_string).collect();

    let mut results = Map::new();
    let mut text = String::new();
    results.insert("length".into(), json!(w.len()));
    results.insert("alphabet".into(), json!(letters));
    let _ = writeln!(
        text,
        "analyzed {} symbols over {{{}}}",
        w.len(),
        letters.join(", ")
    );

    if let Some(m) = args.complexity {
        let profile =
            factor_complexity(&w, m).map_err(|e| Failure::assertion(e.to_string()))?;
        let _ = writeln!(text, "factor complexity:");
        for (i, &v) in profile.values.iter().enumerate() {
            let _ = writeln!(text, "  p({}) = {v}", i + 1);
        }
        results.insert(
            "complexity".into(),
            json!({ "n_max": m, "values": profile.values }),
        );
    }

    if let Some((k, max_period)) = args.powers {
        let hits = find_k_powers(&w, k, max_period);
        let _ = writeln!(
            text,
            "{k}-powers with period <= {max_period}: {}",
            describe_hits(&hits, "period")
        );
        results.insert(
            "powers".into(),
            json!({
                "k": k,
                "max_period": max_period,
                "count": hits.len(),
                "first": head_pairs(&hits),
            }),
        );
    }

    if let Some(max_period) = args.overlaps {
        let hits = find_overlaps(&w, max_period);
        let _ = writeln!(
            text,
            "overlaps with period <= {max_period}: {}",
            describe_hits(&hits, "period")
        );
        results.insert(
            "overlaps".into(),
            json!({
                "max_period": max_period,
                "count": hits.len(),
                "first": head_pairs(&hits),
            }),
        );
    }

    if let Some(factor_text) = &args.gaps {
        let factor = Word::parse(w.alphabet(), factor_text)
            .map_err(|e| Failure::usage(format!("gap factor: {e}")))?;
        let report = gap_report(&w, &factor).map_err(|e| Failure::assertion(e.to_string()))?;
        match report.max_gap {
            Some(gap) => {
                let _ = writeln!(
                    text,
                    "factor {}: {} occurrences, max gap {gap}",
                    report.factor,
                    report.positions.len()
                );
            }
            None => {
                let _ = writeln!(
                    text,
                    "factor {}: {} occurrences",
                    report.factor,
                    report.positions.len()
                );
            }
        }
        let first: Vec<usize> = report.positions.iter().copied().take(10).collect();
        results.insert(
            "gaps".into(),
            json!({
                "factor": report.factor,
                "count": report.positions.len(),
                "max_gap": report.max_gap,
                "first_positions": first,
                "scanned_length": report.scanned_length,
            }),
        );
    }

    if args.freq {
        let plain_table = matches!(doc.source, SpecSource::Rules { .. })
            && doc.coding.is_empty()
            && doc.patch.is_empty()
            && doc.shift == 0;
        if plain_table {
            let SpecSource::Rules {
                alphabet, rules, ..
            } = &doc.source
            else {
                unreachable!()
            };
            let a = morphic::Alphabet::new(alphabet.clone())
                .map_err(|e| Failure::usage(e.to_string()))?;
            let m = Morphism::new(&a, rules).map_err(|e| Failure::usage(e.to_string()))?;
            let report =
                letter_frequency(&w, &m).map_err(|e| Failure::assertion(e.to_string()))?;
            let _ = writeln!(text, "letter frequencies over {} symbols:", report.prefix_length);
            for (i, letter) in report.letters.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "  {letter}: {:.6} observed, {:.6} predicted",
                    report.empirical(i),
                    report.theoretical[i]
                );
            }
            let _ = writeln!(text, "  largest deviation {:.3e}", report.max_deviation());
            let empirical: Vec<f64> = (0..report.letters.len())
                .map(|i| report.empirical(i))
                .collect();
            results.insert(
                "freq".into(),
                json!({
                    "letters": report.letters,
                    "counts": report.counts,
                    "empirical": empirical,
                    "theoretical": report.theoretical,
                    "max_deviation": report.max_deviation(),
                }),
            );
        } else {
            let mut counts = vec![0u64; w.alphabet().len()];
            for &s in w.symbols() {
                counts[s as usize] += 1;
            }
            let empirical: Vec<f64> = counts
                .iter()
                .map(|&c| c as f64 / w.len() as f64)
                .collect();
            let _ = writeln!(text, "letter frequencies over {} symbols:", w.len());
            for (i, letter) in letters.iter().enumerate() {
                let _ = writeln!(text, "  {letter}: {:.6} observed", empirical[i]);
            }
            results.insert(
                "freq".into(),
                json!({
                    "letters": letters,
                    "counts": counts,
                    "empirical": empirical,
                }),
            );
        }
    }

    if let Some(max_block) = args.additive {
        let values = doc.value_vector().map_err(|e| Failure::usage(e.to_string()))?;
        let hits = find_additive_cubes(&w, &values, max_block)
            .map_err(|e| Failure::assertion(e.to_string()))?;
        let _ = writeln!(
            text,
            "additive cubes with blocks <= {max_block}: {}",
            describe_hits(&hits, "block")
        );
        results.insert(
            "additive".into(),
            json!({
                "max_block": max_block,
                "values": values,
                "count": hits.len(),
                "first": head_pairs(&hits),
            }),
        );
    }

    Ok(Report {
        command: "analyze",
        input: json!({
            "spec": args.spec.display().to_string(),
            "length": args.length,
        }),
        results: Value::Object(results),
        budgets: json!({ "stream": budget }),
        text,
        exit: 0,
    })
}

fn describe_hits(hits: &[(usize, usize)], measure: &str) -> String {
    match hits.first() {
        None => "none".into(),
        Some(&(start, size)) => format!(
            "{} found, first at {start} ({measure} {size})",
            hits.len()
        ),
    }
}

fn head_pairs(hits: &[(usize, usize)]) -> Vec<Vec<usize>> {
    hits.iter().take(10).map(|&(a, b)| vec![a, b]).collect()
}

fn parse_evidence(text: &str) -> Result<Assignment, Failure> {
    let mut pairs = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (prop, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("evidence {item:?} is not PROP=BOOL")))?;
        let prop = Prop::parse(prop).map_err(|e| Failure::usage(e.to_string()))?;
        let value = match value.trim() {
            "true" => true,
            "false" => false,
            other => {
                return Err(Failure::usage(format!(
                    "evidence value {other:?} is neither true nor false"
                )))
            }
        };
        pairs.push((prop, value));
    }
    if pairs.is_empty() {
        return Err(Failure::usage("no evidence given"));
    }
    Ok(Assignment::of(&pairs))
}

fn assignment_json(a: &Assignment) -> Value {
    let mut map = Map::new();
    for p in PROPS {
        map.insert(
            p.short(),
            match a.get(p) {
                Some(v) => Value::Bool(v),
                None => Value::Null,
            },
        );
    }
    Value::Object(map)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<Report, Failure> {
    let evidence = parse_evidence(&args.evidence)?;
    let input = json!({ "evidence": args.evidence });
    match closure(evidence) {
        Err(contradiction) => {
            let message = contradiction.to_string();
            Ok(Report {
                command: "classify",
                input,
                results: json!({
                    "contradiction": {
                        "rule": contradiction.rule().render(),
                        "message": message,
                    },
                    "matches": [],
                }),
                budgets: json!({}),
                text: format!("contradiction: {message}\n"),
                exit: 1,
            })
        }
        Ok(closed) => {
            let matches = classify_evidence(evidence).expect("closure succeeded");
            let labels: Vec<String> = matches.iter().map(char::to_string).collect();
            let mut text = String::from("closure:\n");
            for p in PROPS {
                let state = match closed.get(p) {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "open",
                };
                let _ = writeln!(text, "  {:<4} {:<30} {state}", p.short(), p.describe());
            }
            let _ = writeln!(
                text,
                "compatible classes ({}): {}",
                labels.len(),
                if labels.is_empty() {
                    "none".to_string()
                } else {
                    labels.join(" ")
                }
            );
            Ok(Report {
                command: "classify",
                input,
                results: json!({
                    "closure": assignment_json(&closed),
                    "matches": labels,
                }),
                budgets: json!({}),
                text,
                exit: 0,
            })
        }
    }
}

fn cmd_taxonomy_enumerate() -> Result<Report, Failure> {
    let classes = enumerate_classes();
    let mut text = String::new();
    let _ = writeln!(
        text,
        "      {}",
        PROPS
            .iter()
            .map(|p| format!("{:>3}", p.short()))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let mut rows = Vec::new();
    for class in &classes {
        let marks: Vec<String> = class
            .props
            .iter()
            .map(|&v| format!("{:>3}", if v { "+" } else { "-" }))
            .collect();
        let _ = writeln!(text, "({})   {}", class.label, marks.join(" "));
        let mut props = Map::new();
        for p in PROPS {
            props.insert(p.short(), Value::Bool(class.holds(p)));
        }
        rows.push(json!({
            "label": class.label.to_string(),
            "properties": props,
            "positive": class.positive(),
        }));
    }
    let _ = writeln!(text, "{} classes", classes.len());
    let _ = writeln!(text, "legend:");
    for p in PROPS {
        let _ = writeln!(text, "  {:<4} {}", p.short(), p.describe());
    }
    Ok(Report {
        command: "taxonomy enumerate",
        input: json!({}),
        results: json!({ "count": classes.len(), "classes": rows }),
        budgets: json!({}),
        text,
        exit: 0,
    })
}

fn entry_heading(id: &EntryId, symbol: Option<&str>, title: &str) -> String {
    let name = match id {
        EntryId::Class(label) => format!("({label})"),
        EntryId::Named(name) => name.to_string(),
    };
    match symbol {
        Some(s) => format!("{name} [{s}] {title}"),
        None => format!("{name} {title}"),
    }
}

fn cmd_corpus_list() -> Result<Report, Failure> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let entries = catalog();
    for entry in &entries {
        let doc = SpecDocument::from_word_spec(&entry.spec)
            .expect("every corpus construction has a specification text");
        let spec_text = print_spec(&doc);
        let _ = writeln!(
            text,
            "{}",
            entry_heading(&entry.id, entry.symbol, entry.title)
        );
        for line in spec_text.lines() {
            let _ = writeln!(text, "    {line}");
        }
        let _ = writeln!(text);
        rows.push(json!({
            "id": entry.id.to_string(),
            "symbol": entry.symbol,
            "title": entry.title,
            "spec": spec_text,
        }));
    }
    Ok(Report {
        command: "corpus list",
        input: json!({}),
        results: json!({ "count": entries.len(), "entries": rows }),
        budgets: json!({}),
        text,
        exit: 0,
    })
}

fn cmd_corpus_verify(key: Option<&str>, budget: Option<usize>) -> Result<Report, Failure> {
    let budget = budget.unwrap_or_else(default_budget);
    let entries = match key {
        Some(key) => vec![
            find_entry(key).ok_or_else(|| Failure::usage(format!("no corpus entry {key:?}")))?
        ],
        None => catalog(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_passed = true;
    let mut failures = 0usize;
    let mut skips = 0usize;
    for entry in &entries {
        let report = verify(entry, Some(budget));
        let mut checks = Vec::new();
        for check in &report.checks {
            let status = match check.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            match check.status {
                CheckStatus::Fail => {
                    failures += 1;
                    let _ = writeln!(
                        text,
                        "{} {}: {status} — {}",
                        report.id, check.name, check.detail
                    );
                }
                CheckStatus::Skipped => {
                    skips += 1;
                    let _ = writeln!(
                        text,
                        "{} {}: {status} ({})",
                        report.id, check.name, check.detail
                    );
                }
                CheckStatus::Pass => {
                    let _ = writeln!(text, "{} {}: {status}", report.id, check.name);
                }
            }
            checks.push(json!({
                "name": check.name,
                "status": status,
                "detail": check.detail,
            }));
        }
        all_passed &= report.passed;
        rows.push(json!({
            "id": report.id,
            "title": report.title,
            "passed": report.passed,
            "checks": checks,
        }));
    }
    let _ = writeln!(
        text,
        "{} entries, {} checks: {}{}",
        entries.len(),
        rows.iter()
            .map(|r| r["checks"].as_array().unwrap().len())
            .sum::<usize>(),
        if all_passed { "all passed" } else { "FAILURES" },
        match (failures, skips) {
            (0, 0) => String::new(),
            (f, 0) => format!(" ({f} failed)"),
            (0, s) => format!(" ({s} skipped)"),
            (f, s) => format!(" ({f} failed, {s} skipped)"),
        }
    );
    Ok(Report {
        command: "corpus verify",
        input: json!({ "entry": key, "budget": budget }),
        results: json!({
            "entries": rows,
            "all_passed": all_passed,
            "failed_checks": failures,
            "skipped_checks": skips,
        }),
        budgets: json!({ "verify": budget }),
        text,
        exit: if all_passed { 0 } else { 1 },
    })
}
