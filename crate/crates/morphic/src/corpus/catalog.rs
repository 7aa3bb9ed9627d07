//! The built-in corpus: twenty class representatives (one per taxonomy
//! class, labeled a–t) and a handful of named words, each bundled with the
//! construction recipe, classification evidence, and executable assertions.

use std::collections::BTreeSet;

use crate::analyze::{
    arithmetic_subsequence, factor_complexity, find_additive_cubes, find_k_powers, find_overlaps,
    find_xxxr, letter_frequency, primitivity, recurrence_sweep, run_statistics,
};
use crate::generate::iterate;
use crate::morphism::{Coding, Morphism};
use crate::taxonomy::{class_seed, Prop};
use crate::words::{occurrences, Alphabet, Word};

use super::{
    evidence, fail, pass, Angle, Check, CorpusEntry, EntryId, IntegerStream, ProductFormula,
    QuadraticReal, SturmianSampler, WordSpec,
};

// Rule texts shared by several entries.
const FIBONACCI_RULES: &str = "0 -> 01; 1 -> 0";
const THUE_MORSE_RULES: &str = "0 -> 01; 1 -> 10";
const SQUARE_FREE_RULES: &str = "2 -> 210; 1 -> 20; 0 -> 1";
const TERNARY_BLOCK_RULES: &str = "0 -> 0012; 1 -> 12; 2 -> 012";
const BINARY_BLOCK_RULES: &str = "0 -> 0010; 1 -> 1";
const PAIR_PARITY_RULES: &str = "a -> ab; b -> ac; c -> db; d -> dc";

fn m(rules: &str) -> Morphism {
    Morphism::parse(rules).expect("catalog rule text")
}

fn mfp(rules: &str, seed: &str) -> WordSpec {
    WordSpec::MorphicFixedPoint {
        morphism: m(rules),
        seed: seed.to_string(),
        coding: None,
    }
}

fn mfp_coded(rules: &str, seed: &str, images: &str) -> WordSpec {
    let morphism = m(rules);
    let coding = Coding::parse(morphism.alphabet(), images).expect("catalog coding text");
    WordSpec::MorphicFixedPoint {
        morphism,
        seed: seed.to_string(),
        coding: Some(coding),
    }
}

fn patched(base: WordSpec, replacement: &[&str]) -> WordSpec {
    WordSpec::PrefixPatch {
        base: Box::new(base),
        replacement: replacement.iter().map(|t| t.to_string()).collect(),
    }
}

fn first_mismatch(a: &Word, b: &Word) -> Option<usize> {
    let shared = a.len().min(b.len());
    (0..shared)
        .find(|&i| a.token(i) != b.token(i))
        .or((a.len() != b.len()).then_some(shared))
}

/// The word's opening symbols, frozen as a display string.
fn prefix_check(expected: &'static str) -> Check {
    Check::new("prefix-display", expected.len(), move |ctx| {
        let got = ctx.word(expected.len())?.display();
        if got == expected {
            pass(format!("first {} symbols read {}", expected.len(), got))
        } else {
            fail(format!("expected {expected}, got {got}"))
        }
    })
}

/// Two constructions produce the same symbols out to `len`.
fn agreement_check(name: &'static str, len: usize, other: WordSpec) -> Check {
    Check::new(name, len, move |ctx| {
        let w = ctx.word(len)?;
        let v = ctx.aux(&other, len)?;
        match first_mismatch(&w, &v) {
            None => pass(format!("both constructions agree on {len} symbols")),
            Some(i) => fail(format!(
                "constructions disagree at position {i}: {} vs {}",
                w.token(i),
                v.token(i)
            )),
        }
    })
}

fn occurs_exactly(
    name: &'static str,
    factor: &'static str,
    prefix: usize,
    count: usize,
) -> Check {
    Check::new(name, prefix, move |ctx| {
        let w = ctx.word(prefix)?;
        let f = Word::parse(w.alphabet(), factor)?;
        let hits = occurrences(&w, &f)?.len();
        if hits == count {
            pass(format!("{factor:?} occurs {hits} time(s) in {prefix} symbols"))
        } else {
            fail(format!(
                "{factor:?} occurs {hits} time(s) in {prefix} symbols, expected {count}"
            ))
        }
    })
}

/// The named rules have a primitive incidence matrix, positive at `expected`.
fn primitivity_check(name: &'static str, rules: &'static str, expected: u32) -> Check {
    Check::new(name, 0, move |_ctx| match primitivity(&m(rules)) {
        Some(k) if k == expected => {
            pass(format!("incidence matrix is positive at power {k}"))
        }
        Some(k) => fail(format!(
            "incidence matrix positive at power {k}, expected {expected}"
        )),
        None => fail("incidence matrix never becomes positive"),
    })
}

fn square_free_check(prefix: usize, max_period: usize) -> Check {
    Check::new("square-free", prefix, move |ctx| {
        let w = ctx.word(prefix)?;
        let hits = find_k_powers(&w, 2, max_period);
        if hits.is_empty() {
            pass(format!(
                "no square with period <= {max_period} in {prefix} symbols"
            ))
        } else {
            let (pos, p) = hits[0];
            fail(format!("square of period {p} at position {pos}"))
        }
    })
}

/// Every factor up to `max_len` seen in the first `discovery` symbols occurs
/// at least twice in the first `scan` symbols.
fn recurrence_check(scan: usize, discovery: usize, max_len: usize) -> Check {
    Check::new("factors-recur", scan, move |ctx| {
        let w = ctx.word(scan)?;
        let rows = recurrence_sweep(&w, discovery, max_len)?;
        for row in &rows {
            if row.non_recurring > 0 {
                return fail(format!(
                    "{} factor(s) of length {} occur only once in {scan} symbols",
                    row.non_recurring, row.length
                ));
            }
        }
        pass(format!(
            "all factors up to length {max_len} from the first {discovery} symbols recur"
        ))
    })
}

/// Factor complexity matches `law(n)` for n = 1..=n_max.
fn complexity_check(
    name: &'static str,
    prefix: usize,
    n_max: usize,
    law: fn(usize) -> usize,
    law_text: &'static str,
) -> Check {
    Check::new(name, prefix, move |ctx| {
        let w = ctx.word(prefix)?;
        let profile = factor_complexity(&w, n_max)?;
        for n in 1..=n_max {
            let want = law(n);
            let got = profile.p(n);
            if got != want {
                return fail(format!("p({n}) = {got}, expected {want} (= {law_text})"));
            }
        }
        pass(format!("p(n) = {law_text} for n = 1..={n_max}"))
    })
}

/// Largest run of `letter`, truncated to the first `cp` symbols.
fn truncated_run_max(runs: &[(usize, usize)], cp: usize) -> usize {
    runs.iter()
        .filter(|(start, _)| *start < cp)
        .map(|(start, len)| (start + len).min(cp) - start)
        .max()
        .unwrap_or(0)
}

fn class(label: char, title: &'static str, spec: WordSpec, checks: Vec<Check>) -> CorpusEntry {
    CorpusEntry {
        id: EntryId::Class(label),
        symbol: None,
        title,
        spec,
        evidence: class_seed(label).expect("class label"),
        checks,
    }
}

fn named(
    id: &'static str,
    symbol: Option<&'static str>,
    title: &'static str,
    spec: WordSpec,
    facts: &[(Prop, bool)],
    checks: Vec<Check>,
) -> CorpusEntry {
    CorpusEntry {
        id: EntryId::Named(id),
        symbol,
        title,
        spec,
        evidence: evidence(facts),
        checks,
    }
}

fn class_a() -> CorpusEntry {
    class(
        'a',
        "characteristic word of the factorials",
        WordSpec::Characteristic(IntegerStream::Factorials),
        vec![
            prefix_check("01100010000000000000000010"),
            occurs_exactly("adjacent-ones-once", "11", 100_000, 1),
            Check::new("ones-at-factorial-checkpoints", 362_881, |ctx| {
                let w = ctx.word(362_881)?;
                let mut fact: usize = 1;
                for n in 1..=9usize {
                    fact *= n;
                    let ones = w
                        .symbols()
                        .iter()
                        .take(fact + 1)
                        .filter(|&&s| w.alphabet().letter(s) == "1")
                        .count();
                    if ones != n {
                        return fail(format!(
                            "prefix of length {}!+1 holds {ones} ones, expected {n}",
                            n
                        ));
                    }
                }
                pass("the prefix of length n!+1 holds exactly n ones for n = 1..=9")
            }),
        ],
    )
}

fn class_b() -> CorpusEntry {
    class(
        'b',
        "binary representations of 1, 2, 3, … concatenated",
        WordSpec::BaseConcat(2),
        vec![
            prefix_check("11011100101110111"),
            complexity_check(
                "complexity-doubles",
                500_000,
                14,
                |n| 1usize << n,
                "2^n",
            ),
            Check::new("zero-run-growth", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let runs = run_statistics(&w, "0")?;
                let got: Vec<usize> = [1_000, 10_000, 100_000]
                    .iter()
                    .map(|&cp| truncated_run_max(&runs, cp))
                    .collect();
                if got == [7, 10, 13] {
                    pass("longest zero run is 7, 10, 13 at 10^3, 10^4, 10^5 symbols")
                } else {
                    fail(format!("zero-run maxima {got:?}, expected [7, 10, 13]"))
                }
            }),
        ],
    )
}

fn class_c() -> CorpusEntry {
    class(
        'c',
        "Sturmian word of slope pi",
        WordSpec::Sturmian {
            alpha: Angle::Pi,
            rho: Angle::zero(),
        },
        vec![
            prefix_check("33333334"),
            Check::new("float-shadow-agreement", 10_000, |ctx| {
                let w = ctx.word(10_000)?;
                let sampler = SturmianSampler::new(Angle::Pi, Angle::zero())?;
                for n in 0..10_000u64 {
                    let exact = w.token(n as usize);
                    let float = sampler.symbol_f64(n).to_string();
                    if exact != float {
                        return fail(format!(
                            "exact symbol {exact} differs from float estimate {float} at n = {n}"
                        ));
                    }
                }
                pass("exact integer floors match the f64 evaluation for n < 10^4")
            }),
            recurrence_check(100_000, 10_000, 12),
        ],
    )
}

fn class_d() -> CorpusEntry {
    class(
        'd',
        "Fibonacci word with its first two symbols overwritten",
        patched(mfp(FIBONACCI_RULES, "0"), &["2", "2"]),
        vec![
            prefix_check("22001010"),
            agreement_check(
                "matches-coded-route",
                100_000,
                mfp_coded("a -> ab; b -> c; c -> cd; d -> c", "a", "2201"),
            ),
            occurs_exactly("letter-two-twice", "2", 100_000, 2),
            Check::new("zero-frequency-golden", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let zero = w.alphabet().id("0")?;
                let count = w.symbols().iter().filter(|&&s| s == zero).count();
                let empirical = count as f64 / 100_000.0;
                let golden = (5f64.sqrt() - 1.0) / 2.0;
                if (empirical - golden).abs() < 1e-3 {
                    pass(format!(
                        "zero frequency {empirical:.6} sits within 10^-3 of (sqrt5-1)/2"
                    ))
                } else {
                    fail(format!(
                        "zero frequency {empirical:.6} is off from {golden:.6}"
                    ))
                }
            }),
        ],
    )
}

fn class_e() -> CorpusEntry {
    class(
        'e',
        "runs of ones with square lengths",
        mfp_coded("a -> ababb; b -> bc; c -> c", "a", "011"),
        vec![
            prefix_check("0101111010111111111010111101"),
            agreement_check(
                "matches-square-run-product",
                100_000,
                WordSpec::Product(ProductFormula::SquareRuns),
            ),
            Check::new("complete-one-runs-are-squares", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let mut runs = run_statistics(&w, "1")?;
                if let Some(&(start, len)) = runs.last() {
                    if start + len == w.len() {
                        runs.pop();
                    }
                }
                let got: BTreeSet<usize> = runs.iter().map(|&(_, len)| len).collect();
                let want: BTreeSet<usize> = (1..=14).map(|k| k * k).collect();
                if got == want {
                    pass("complete one-run lengths are exactly the squares 1..=196")
                } else {
                    fail(format!("one-run lengths {got:?}, expected squares 1..=196"))
                }
            }),
        ],
    )
}

fn class_f() -> CorpusEntry {
    let alpha = || Angle::Quadratic(QuadraticReal::new(3, -1, 5, 2).expect("slope"));
    let rho = || Angle::Quadratic(QuadraticReal::new(3, -1, 5, 1).expect("intercept"));
    class(
        'f',
        "Sturmian word of slope (3-sqrt5)/2, the shifted Fibonacci word",
        WordSpec::Sturmian {
            alpha: alpha(),
            rho: rho(),
        },
        vec![
            prefix_check("100101001001"),
            agreement_check(
                "matches-coded-route",
                10_000,
                mfp_coded("a -> ac; c -> b; b -> ac", "a", "100"),
            ),
            agreement_check(
                "matches-shifted-fibonacci",
                10_000,
                WordSpec::Shift {
                    base: Box::new(mfp(FIBONACCI_RULES, "0")),
                    offset: 1,
                },
            ),
            primitivity_check("generator-primitivity", "a -> ac; c -> b; b -> ac", 3),
        ],
    )
}

fn class_g() -> CorpusEntry {
    class(
        'g',
        "square-free word with its second symbol overwritten",
        patched(mfp(SQUARE_FREE_RULES, "2"), &["2", "2"]),
        vec![
            prefix_check("220201210120"),
            Check::new("unpatched-matches-coded-route", 100_000, |ctx| {
                let base = ctx.aux(&mfp(SQUARE_FREE_RULES, "2"), 100_000)?;
                let route = ctx.aux(
                    &mfp_coded("a -> ab; b -> ca; c -> cd; d -> ac", "a", "2101"),
                    100_000,
                )?;
                match first_mismatch(&base, &route) {
                    None => pass("the unpatched word and the coded route agree on 10^5 symbols"),
                    Some(i) => fail(format!(
                        "unpatched word and coded route disagree at position {i}"
                    )),
                }
            }),
            agreement_check(
                "matches-six-letter-coded-route",
                100_000,
                mfp_coded(
                    "0 -> 01; 1 -> 23; 2 -> 24; 3 -> 35; 4 -> 32; 5 -> 23",
                    "0",
                    "220211",
                ),
            ),
            occurs_exactly("adjacent-twos-once", "22", 100_000, 1),
        ],
    )
}

fn class_h() -> CorpusEntry {
    class(
        'h',
        "block coding of the Thue-Morse word",
        mfp_coded("a -> abba; b -> bccb; c -> cbbc", "a", "001"),
        vec![
            prefix_check(
                "0000011001100000011010011001011001101001100101100000",
            ),
            Check::new("aligned-blocks-inventory", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let want: BTreeSet<&str> = ["0000", "0110", "1001"].into();
                let mut seen = BTreeSet::new();
                for i in (0..w.len()).step_by(4) {
                    let block = w.factor(i, 4).display();
                    if !want.contains(block.as_str()) {
                        return fail(format!("unexpected aligned block {block} at {i}"));
                    }
                    seen.insert(block);
                }
                if seen.len() == want.len() {
                    pass("4-aligned blocks are exactly 0000, 0110, 1001")
                } else {
                    fail(format!("only saw aligned blocks {seen:?}"))
                }
            }),
            Check::new("alternate-coding-gives-thue-morse", 16_384, |ctx| {
                let x = ctx.aux(&mfp_coded("a -> abba; b -> bccb; c -> cbbc", "a", "010"), 16_384)?;
                let t = ctx.aux(&mfp(THUE_MORSE_RULES, "0"), 16_384)?;
                match first_mismatch(&x, &t) {
                    None => pass("swapping the middle coding letter yields the Thue-Morse word"),
                    Some(i) => fail(format!("words disagree at position {i}")),
                }
            }),
            Check::new("companion-ruler-image-route", 100_000, |ctx| {
                let a = ctx.aux(&mfp_coded("a -> aba; b -> ccc; c -> ccc", "a", "001"), 100_000)?;
                let b = ctx.aux(
                    &WordSpec::RulerImage {
                        zeros: 3,
                        ones_base: 3,
                    },
                    100_000,
                )?;
                match first_mismatch(&a, &b) {
                    None => pass("the companion word equals the ruler-sequence image"),
                    Some(i) => fail(format!("words disagree at position {i}")),
                }
            }),
            Check::new("ruler-sequence-square-free", 0, |_ctx| {
                let letters: Vec<String> = (0..=14).map(|v| v.to_string()).collect();
                let alphabet = Alphabet::new(letters)?;
                let ids: Vec<u32> = (1..=10_000u64).map(super::nu2).collect();
                let w = Word::from_ids(&alphabet, ids);
                let hits = find_k_powers(&w, 2, 5_000);
                if hits.is_empty() {
                    pass("the 2-adic ruler sequence is square-free over 10^4 terms")
                } else {
                    let (pos, p) = hits[0];
                    fail(format!("square of period {p} at position {pos}"))
                }
            }),
        ],
    )
}

fn class_i() -> CorpusEntry {
    class(
        'i',
        "parity of adjacent 1-pairs in binary expansions",
        mfp_coded(PAIR_PARITY_RULES, "a", "0011"),
        vec![
            prefix_check("0001001000011101"),
            Check::new("binary-pair-parity", 65_536, |ctx| {
                let w = ctx.word(65_536)?;
                let one = w.alphabet().id("1")?;
                let zero = w.alphabet().id("0")?;
                for n in 0..65_536u64 {
                    let parity = (n & (n >> 1)).count_ones() & 1;
                    let want = if parity == 1 { one } else { zero };
                    if w.symbols()[n as usize] != want {
                        return fail(format!(
                            "symbol at {n} disagrees with the pair-parity of its binary digits"
                        ));
                    }
                }
                pass("symbol n equals the parity of adjacent 1-pairs in binary n, n < 2^16")
            }),
            Check::new("cubes-are-exactly-000-111", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let mut seen = BTreeSet::new();
                for (pos, p) in find_k_powers(&w, 3, 20) {
                    if p != 1 {
                        return fail(format!("cube of period {p} at position {pos}"));
                    }
                    seen.insert(w.factor(pos, 3).display());
                }
                let want: BTreeSet<String> = ["000", "111"].map(String::from).into();
                if seen == want {
                    pass("the only cubes with period <= 20 in 10^5 symbols are 000 and 111")
                } else {
                    fail(format!("cube inventory {seen:?}, expected 000 and 111"))
                }
            }),
        ],
    )
}

fn class_j() -> CorpusEntry {
    class(
        'j',
        "Fibonacci word with its first symbol overwritten",
        patched(mfp(FIBONACCI_RULES, "0"), &["2"]),
        vec![
            prefix_check("21001010"),
            agreement_check(
                "matches-three-letter-route",
                100_000,
                mfp("2 -> 21; 1 -> 0; 0 -> 01", "2"),
            ),
            occurs_exactly("letter-two-once", "2", 100_000, 1),
        ],
    )
}

fn class_k() -> CorpusEntry {
    class(
        'k',
        "doubling runs of ones inside a recurrent skeleton",
        mfp("0 -> 010; 1 -> 11", "0"),
        vec![
            prefix_check("0101101011110101"),
            recurrence_check(100_000, 10_000, 10),
            Check::new("first-long-one-run-positions", 16_384, |ctx| {
                let w = ctx.word(16_384)?;
                let runs = run_statistics(&w, "1")?;
                for n in 2..=1024usize {
                    let m = (usize::BITS - (n - 1).leading_zeros()) as usize;
                    let want = (m + 2) << (m - 1);
                    let got = runs.iter().find(|&&(_, len)| len >= n).map(|&(s, _)| s);
                    if got != Some(want) {
                        return fail(format!(
                            "first run of >= {n} ones starts at {got:?}, expected {want}"
                        ));
                    }
                }
                pass("first run of n ones starts at (m+2)*2^(m-1), m = ceil(log2 n), n <= 1024")
            }),
        ],
    )
}

fn class_l() -> CorpusEntry {
    class(
        'l',
        "binary coding of the ternary block word",
        mfp_coded(TERNARY_BLOCK_RULES, "0", "010"),
        vec![
            prefix_check("0010001010010"),
            Check::new("ternary-prefix-display", 13, |ctx| {
                let c = ctx.aux(&mfp(TERNARY_BLOCK_RULES, "0"), 13)?;
                let got = c.display();
                if got == "0012001212012" {
                    pass("the uncoded ternary word opens 0012001212012")
                } else {
                    fail(format!("uncoded ternary word opens {got}"))
                }
            }),
            primitivity_check("generator-primitivity", TERNARY_BLOCK_RULES, 2),
            Check::new("binary-generator-image-lengths", 797_161, |ctx| {
                let delta = m(BINARY_BLOCK_RULES);
                for n in 0..=12u32 {
                    let len = iterate(&delta, "0", n, ctx.budget())?.len();
                    let want = ((3u64.pow(n + 1) - 1) / 2) as usize;
                    if len != want {
                        return fail(format!(
                            "|delta^{n}(0)| = {len}, expected (3^{}-1)/2 = {want}",
                            n + 1
                        ));
                    }
                }
                pass("|delta^n(0)| = (3^(n+1)-1)/2 for n = 0..=12")
            }),
            complexity_check(
                "complexity-affine",
                100_000,
                30,
                |n| if n == 1 { 2 } else { 2 * n - 1 },
                "2n-1 for n >= 2",
            ),
            Check::new("ternary-complexity-affine", 100_000, |ctx| {
                let c = ctx.aux(&mfp(TERNARY_BLOCK_RULES, "0"), 100_000)?;
                let profile = factor_complexity(&c, 30)?;
                for n in 1..=30 {
                    if profile.p(n) != 2 * n + 1 {
                        return fail(format!(
                            "uncoded ternary word has p({n}) = {}, expected 2n+1",
                            profile.p(n)
                        ));
                    }
                }
                pass("the uncoded ternary word has p(n) = 2n+1 for n = 1..=30")
            }),
            agreement_check("matches-binary-generator", 1_000_000, mfp(BINARY_BLOCK_RULES, "0")),
            Check::new("square-prefixes-are-generator-images", 10_000, |ctx| {
                let w = ctx.word(10_000)?;
                let s = w.symbols();
                let mut found = Vec::new();
                for half in 1..=5_000usize {
                    if s[..half] == s[half..2 * half] {
                        found.push(half);
                    }
                }
                let want = [1usize, 4, 13, 40, 121, 364, 1093, 3280];
                if found == want {
                    pass("square prefixes have the half-lengths |delta^n(0)|, n = 0..=7")
                } else {
                    fail(format!(
                        "square-prefix half-lengths {found:?}, expected {want:?}"
                    ))
                }
            }),
            Check::new("sparse-position-samples", 3_587_227, |ctx| {
                let w = ctx.word(3_587_227)?;
                let reference = "01010010";
                for (n, want) in reference.chars().enumerate() {
                    let x = ((3u64.pow(2 * n as u32 + 1) - 3) / 4) as usize;
                    let got = w.token(x);
                    if got != want.to_string() {
                        return fail(format!(
                            "symbol at (3^(2n+1)-3)/4 = {x} is {got}, expected {want} (n = {n})"
                        ));
                    }
                }
                pass("samples at (3^(2n+1)-3)/4 spell 01010010 for n = 0..=7")
            }),
        ],
    )
}

fn class_m() -> CorpusEntry {
    class(
        'm',
        "Fibonacci word",
        mfp(FIBONACCI_RULES, "0"),
        vec![
            prefix_check("01001010"),
            primitivity_check("generator-primitivity", FIBONACCI_RULES, 2),
            complexity_check("complexity-affine", 10_000, 30, |n| n + 1, "n+1"),
            Check::new("golden-ratio-frequency", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let report = letter_frequency(&w, &m(FIBONACCI_RULES))?;
                let golden = (5f64.sqrt() - 1.0) / 2.0;
                let zero = w.alphabet().id("0")? as usize;
                let theory_gap = (report.theoretical[zero] - golden).abs();
                if theory_gap > 1e-9 {
                    return fail(format!(
                        "eigenvector zero-frequency misses (sqrt5-1)/2 by {theory_gap:.2e}"
                    ));
                }
                let deviation = report.max_deviation();
                if deviation < 1e-3 {
                    pass(format!(
                        "frequencies match the dominant eigenvector within {deviation:.2e}"
                    ))
                } else {
                    fail(format!(
                        "empirical frequencies deviate by {deviation:.2e} at 10^5 symbols"
                    ))
                }
            }),
        ],
    )
}

fn class_n() -> CorpusEntry {
    class(
        'n',
        "telescoping product of square-free blocks",
        mfp("3 -> 32; 2 -> 102012; 1 -> 1012; 0 -> 02", "3"),
        vec![
            prefix_check("32102012"),
            Check::new("telescoping-product", 131_072, |ctx| {
                let h = m("3 -> 32; 2 -> 102012; 1 -> 1012; 0 -> 02");
                let g = m(SQUARE_FREE_RULES);
                for n in 0..=8u32 {
                    let lhs = iterate(&h, "3", n + 1, ctx.budget())?;
                    let mut tokens = vec!["3".to_string()];
                    for k in (1..=n).rev() {
                        let block = iterate(&g, "2", 2 * k, ctx.budget())?;
                        tokens.extend(block.tokens().map(str::to_string));
                    }
                    tokens.push("2".to_string());
                    let rhs = Word::from_tokens(h.alphabet(), &tokens)?;
                    if !lhs.same_tokens(&rhs) {
                        return fail(format!(
                            "iterate {} does not telescope into square-free blocks",
                            n + 1
                        ));
                    }
                }
                pass("h^(n+1)(3) = 3 g^(2n)(2) g^(2n-2)(2) … g^2(2) 2 for n = 0..=8")
            }),
            Check::new("five-letter-block-heads", 4_096, |ctx| {
                let d5 = m("a -> ab; b -> cd; c -> bd; d -> eb; e -> db");
                let rho = Coding::parse(d5.alphabet(), "32101")?;
                for n in 1..=12u32 {
                    let c_head = rho.apply(&iterate(&d5, "c", n, ctx.budget())?)?.prefix(2);
                    let e_head = rho.apply(&iterate(&d5, "e", n, ctx.budget())?)?.prefix(2);
                    let (want_c, want_e) = if n % 2 == 1 {
                        ("20", "02")
                    } else {
                        ("10", "12")
                    };
                    if c_head.display() != want_c || e_head.display() != want_e {
                        return fail(format!(
                            "iterate {n} block heads read {} and {}, expected {want_c} and {want_e}",
                            c_head.display(),
                            e_head.display()
                        ));
                    }
                }
                pass("coded images of c and e open 20/10 and 02/12 by parity, n = 1..=12")
            }),
            agreement_check(
                "matches-five-letter-coded-route",
                100_000,
                mfp_coded("a -> ab; b -> cd; c -> bd; d -> eb; e -> db", "a", "32101"),
            ),
            occurs_exactly("letter-three-once", "3", 100_000, 1),
        ],
    )
}

fn class_o() -> CorpusEntry {
    class(
        'o',
        "geometric runs of threes",
        mfp("0 -> 01120; 1 -> 1; 2 -> 2333333333333; 3 -> 33333", "0"),
        vec![
            prefix_check("01120112333333333333"),
            Check::new("first-two-three-runs", 1_000, |ctx| {
                let w = ctx.word(1_000)?;
                let runs = run_statistics(&w, "3")?;
                if runs.len() >= 2 && runs[0] == (8, 12) && runs[1] == (28, 72) {
                    pass("the first runs of threes are 12 at position 8 and 72 at position 28")
                } else {
                    fail(format!("leading three-runs {:?}", &runs[..runs.len().min(2)]))
                }
            }),
            Check::new("composition-square-identity", 0, |ctx| {
                let _ = ctx;
                let h = m("0 -> 01120; 1 -> 1; 2 -> 2333333333333; 3 -> 33333");
                let f = m("a -> abcda; b -> bcdee; c -> eeeee; d -> eeeee; e -> eeeee");
                let g = Coding::parse(f.alphabet(), "01123")?;
                for letter in ["a", "b", "c", "d", "e"] {
                    let image = f.image(letter)?;
                    let lhs = h.apply(&g.apply(&image)?)?;
                    let rhs = g.apply(&f.apply(&image)?)?;
                    if !lhs.same_tokens(&rhs) {
                        return fail(format!("h∘g∘f and g∘f∘f differ on letter {letter}"));
                    }
                }
                pass("h(g(f(x))) = g(f(f(x))) on every letter")
            }),
            agreement_check(
                "matches-coded-route",
                100_000,
                mfp_coded(
                    "a -> abcda; b -> bcdee; c -> eeeee; d -> eeeee; e -> eeeee",
                    "a",
                    "01123",
                ),
            ),
        ],
    )
}

fn class_p() -> CorpusEntry {
    class(
        'p',
        "letter-pair image of the Thue-Morse word",
        mfp("a -> acb; b -> bca; c -> c", "a"),
        vec![
            prefix_check("acbcbcacbcacacbc"),
            Check::new("image-of-thue-morse", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let t = ctx.aux(&mfp(THUE_MORSE_RULES, "0"), 50_000)?;
                let mut tokens = Vec::with_capacity(100_000);
                for sym in t.tokens() {
                    tokens.push(if sym == "0" { "a" } else { "b" });
                    tokens.push("c");
                }
                let image = Word::from_tokens(w.alphabet(), &tokens)?;
                match first_mismatch(&w, &image) {
                    None => pass("the word is the image of Thue-Morse under 0 -> ac, 1 -> bc"),
                    Some(i) => fail(format!("image disagrees at position {i}")),
                }
            }),
            agreement_check(
                "matches-uniform-coded-route",
                100_000,
                mfp_coded("0 -> 01; 1 -> 23; 2 -> 23; 3 -> 01", "0", "acbc"),
            ),
            primitivity_check(
                "uniform-generator-primitivity",
                "0 -> 01; 1 -> 23; 2 -> 23; 3 -> 01",
                2,
            ),
            Check::new("thue-morse-progressions-mixed", 32_768, |ctx| {
                let t = ctx.aux(&mfp(THUE_MORSE_RULES, "0"), 32_768)?;
                for step in 1..=64usize {
                    for start in 0..step {
                        let seq = arithmetic_subsequence(&t, start, step, 256)?;
                        let mut seen = [false; 2];
                        for &s in seq.symbols() {
                            seen[s as usize] = true;
                        }
                        if !(seen[0] && seen[1]) {
                            return fail(format!(
                                "progression start {start}, step {step} is constant over 256 terms"
                            ));
                        }
                    }
                }
                pass("every progression with step <= 64 mixes both letters within 256 terms")
            }),
        ],
    )
}

fn class_q() -> CorpusEntry {
    class(
        'q',
        "square-free ternary word",
        mfp(SQUARE_FREE_RULES, "2"),
        vec![
            prefix_check("210201"),
            square_free_check(100_000, 100),
            primitivity_check("generator-primitivity", SQUARE_FREE_RULES, 3),
        ],
    )
}

fn class_r() -> CorpusEntry {
    class(
        'r',
        "uniform word whose first letter never returns",
        mfp("a -> ab; b -> bc; c -> cc", "a"),
        vec![
            prefix_check("abbcbccc"),
            occurs_exactly("letter-a-once", "a", 100_000, 1),
            Check::new("uniform-width-two", 0, |_ctx| {
                let shape = m("a -> ab; b -> bc; c -> cc").classify_shape();
                if shape.uniform_width == Some(2) {
                    pass("every image has width 2")
                } else {
                    fail(format!("uniform width {:?}", shape.uniform_width))
                }
            }),
        ],
    )
}

fn class_s() -> CorpusEntry {
    class(
        's',
        "tripling runs of ones inside a recurrent skeleton",
        mfp("0 -> 010; 1 -> 111", "0"),
        vec![
            prefix_check("0101110101111111"),
            recurrence_check(100_000, 10_000, 12),
            Check::new("one-run-growth", 100_000, |ctx| {
                let w = ctx.word(100_000)?;
                let mut runs = run_statistics(&w, "1")?;
                if let Some(&(start, len)) = runs.last() {
                    if start + len == w.len() {
                        runs.pop();
                    }
                }
                for &(start, len) in &runs {
                    let mut v = len;
                    while v % 3 == 0 {
                        v /= 3;
                    }
                    if v != 1 {
                        return fail(format!(
                            "one-run of length {len} at {start} is not a power of three"
                        ));
                    }
                }
                let maxima: Vec<usize> = [1_000, 10_000, 100_000]
                    .iter()
                    .map(|&cp| truncated_run_max(&runs, cp))
                    .collect();
                if maxima[0] < maxima[1] && maxima[1] < maxima[2] {
                    pass(format!(
                        "one-runs are powers of three with growing maxima {maxima:?}"
                    ))
                } else {
                    fail(format!("one-run maxima {maxima:?} fail to grow"))
                }
            }),
        ],
    )
}

fn class_t() -> CorpusEntry {
    class(
        't',
        "Thue-Morse word",
        mfp(THUE_MORSE_RULES, "0"),
        vec![
            prefix_check("0110100110010110"),
            Check::new("fixed-point-equation", 10_000, |ctx| {
                let w = ctx.word(10_000)?;
                let image = m(THUE_MORSE_RULES).apply(&w.prefix(5_000))?;
                match first_mismatch(&w, &image) {
                    None => pass("applying the rules to a prefix reproduces the word"),
                    Some(i) => fail(format!("image disagrees with the word at position {i}")),
                }
            }),
            Check::new("overlap-free", 16_384, |ctx| {
                let w = ctx.word(16_384)?;
                let hits = find_overlaps(&w, 4_096);
                if hits.is_empty() {
                    pass("no overlap with period <= 4096 in 2^14 symbols")
                } else {
                    let (pos, p) = hits[0];
                    fail(format!("overlap of period {p} at position {pos}"))
                }
            }),
            primitivity_check("generator-primitivity", THUE_MORSE_RULES, 1),
        ],
    )
}

fn named_entries() -> Vec<CorpusEntry> {
    vec![
        named(
            "fibonacci",
            Some("f"),
            "Fibonacci word",
            mfp(FIBONACCI_RULES, "0"),
            &[(Prop::PurePrimitive, true), (Prop::Uniform, false)],
            vec![
                prefix_check("0100101001001"),
                complexity_check("complexity-affine", 10_000, 20, |n| n + 1, "n+1"),
            ],
        ),
        named(
            "thue-morse",
            Some("t"),
            "Thue-Morse word",
            mfp(THUE_MORSE_RULES, "0"),
            &[(Prop::PureUniformPrimitive, true)],
            vec![
                prefix_check("01101001"),
                Check::new("overlap-free", 8_192, |ctx| {
                    let w = ctx.word(8_192)?;
                    let hits = find_overlaps(&w, 2_048);
                    if hits.is_empty() {
                        pass("no overlap with period <= 2048 in 2^13 symbols")
                    } else {
                        let (pos, p) = hits[0];
                        fail(format!("overlap of period {p} at position {pos}"))
                    }
                }),
            ],
        ),
        named(
            "chi",
            Some("chi"),
            "characteristic word of the Fibonacci numbers",
            mfp_coded(
                "c0 -> c0 e0; e0 -> c1; c1 -> c1 e1; e1 -> c2; c2 -> c2 e1",
                "c0",
                "11100",
            ),
            &[(Prop::Morphic, true)],
            vec![
                prefix_check("11110100100001"),
                agreement_check(
                    "matches-characteristic-word",
                    100_000,
                    WordSpec::Characteristic(IntegerStream::FibonacciNumbers),
                ),
            ],
        ),
        named(
            "rudin-shapiro",
            Some("r"),
            "Rudin-Shapiro word",
            mfp_coded(PAIR_PARITY_RULES, "a", "0011"),
            &[(Prop::UniformPrimitive, true), (Prop::PureMorphic, false)],
            vec![
                prefix_check("0001001000011101"),
                Check::new("binary-pair-parity", 4_096, |ctx| {
                    let w = ctx.word(4_096)?;
                    let one = w.alphabet().id("1")?;
                    let zero = w.alphabet().id("0")?;
                    for n in 0..4_096u64 {
                        let parity = (n & (n >> 1)).count_ones() & 1;
                        let want = if parity == 1 { one } else { zero };
                        if w.symbols()[n as usize] != want {
                            return fail(format!("symbol at {n} disagrees with pair parity"));
                        }
                    }
                    pass("symbol n equals the parity of adjacent 1-pairs in binary n, n < 2^12")
                }),
            ],
        ),
        named(
            "gamma-word",
            None,
            "additive-cube-free quaternary word",
            mfp("0 -> 03; 1 -> 43; 3 -> 1; 4 -> 01", "0"),
            &[(Prop::PurePrimitive, true)],
            vec![
                prefix_check("0314301103434303101101103"),
                Check::new("sixth-iterates", 0, |ctx| {
                    let g = m("0 -> 03; 1 -> 43; 3 -> 1; 4 -> 01");
                    let want = [
                        ("0", "03143011034343031011011"),
                        ("1", "03143011031011011031011011"),
                        ("3", "03143034343034343"),
                        ("4", "0314301103434303143034343034343"),
                    ];
                    for (letter, image) in want {
                        let got = iterate(&g, letter, 6, ctx.budget())?.display();
                        if got != image {
                            return fail(format!(
                                "sixth iterate on {letter} reads {got}, expected {image}"
                            ));
                        }
                    }
                    pass("sixth iterates on 0, 1, 3, 4 match their frozen expansions")
                }),
                Check::new("additive-cube-free", 10_000, |ctx| {
                    let w = ctx.word(10_000)?;
                    let hits = find_additive_cubes(&w, &[0, 1, 3, 4], 50)?;
                    if hits.is_empty() {
                        pass("no additive cube with block <= 50 in 10^4 symbols")
                    } else {
                        let (pos, block) = hits[0];
                        fail(format!("additive cube of block {block} at position {pos}"))
                    }
                }),
                primitivity_check("generator-primitivity", "0 -> 03; 1 -> 43; 3 -> 1; 4 -> 01", 6),
            ],
        ),
        named(
            "rote-fibonacci",
            Some("R"),
            "Rote word of Fibonacci type",
            mfp_coded("a -> abcab; b -> cda; c -> cdacd; d -> abc", "a", "0011"),
            &[(Prop::Primitive, true)],
            vec![
                prefix_check("0010011011011001"),
                Check::new("palindromic-triple-free", 10_000, |ctx| {
                    let w = ctx.word(10_000)?;
                    let hits = find_xxxr(&w, 50);
                    if hits.is_empty() {
                        pass("no factor x x reverse(x) with |x| <= 50 in 10^4 symbols")
                    } else {
                        let (pos, len) = hits[0];
                        fail(format!("x x reverse(x) with |x| = {len} at position {pos}"))
                    }
                }),
                primitivity_check(
                    "generator-primitivity",
                    "a -> abcab; b -> cda; c -> cdacd; d -> abc",
                    2,
                ),
            ],
        ),
        named(
            "T",
            None,
            "square-free ternary word",
            mfp(SQUARE_FREE_RULES, "2"),
            &[(Prop::PurePrimitive, true), (Prop::UniformPrimitive, true)],
            vec![prefix_check("210201"), square_free_check(10_000, 50)],
        ),
        named(
            "C",
            None,
            "ternary block word",
            mfp(TERNARY_BLOCK_RULES, "0"),
            &[(Prop::PurePrimitive, true)],
            vec![
                prefix_check("0012001212012"),
                primitivity_check("generator-primitivity", TERNARY_BLOCK_RULES, 2),
                complexity_check("complexity-affine", 10_000, 30, |n| 2 * n + 1, "2n+1"),
            ],
        ),
        named(
            "D",
            None,
            "binary coding of the ternary block word",
            mfp_coded(TERNARY_BLOCK_RULES, "0", "010"),
            &[
                (Prop::PureMorphic, true),
                (Prop::Primitive, true),
                (Prop::PurePrimitive, false),
                (Prop::Uniform, false),
            ],
            vec![
                prefix_check("0010001010010"),
                agreement_check("matches-binary-generator", 100_000, mfp(BINARY_BLOCK_RULES, "0")),
                complexity_check(
                    "complexity-affine",
                    10_000,
                    20,
                    |n| if n == 1 { 2 } else { 2 * n - 1 },
                    "2n-1 for n >= 2",
                ),
            ],
        ),
    ]
}

/// Every built-in entry: the twenty class representatives a–t, then the
/// named words.
pub fn catalog() -> Vec<CorpusEntry> {
    let mut entries = vec![
        class_a(),
        class_b(),
        class_c(),
        class_d(),
        class_e(),
        class_f(),
        class_g(),
        class_h(),
        class_i(),
        class_j(),
        class_k(),
        class_l(),
        class_m(),
        class_n(),
        class_o(),
        class_p(),
        class_q(),
        class_r(),
        class_s(),
        class_t(),
    ];
    entries.extend(named_entries());
    entries
}

/// Look an entry up by class label, entry name, or conventional symbol, in
/// that order.
pub fn find_entry(key: &str) -> Option<CorpusEntry> {
    let mut entries = catalog();
    let class_label = (key.len() == 1)
        .then(|| key.chars().next().unwrap())
        .filter(|c| ('a'..='t').contains(c));
    let position = if let Some(label) = class_label {
        entries.iter().position(|e| e.id == EntryId::Class(label))
    } else {
        entries
            .iter()
            .position(|e| matches!(e.id, EntryId::Named(n) if n == key))
            .or_else(|| entries.iter().position(|e| e.symbol == Some(key)))
    };
    position.map(|i| entries.swap_remove(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{verify, CheckStatus};
    use crate::taxonomy::closure;

    #[test]
    fn catalog_covers_every_class_once() {
        let entries = catalog();
        let labels: Vec<char> = entries
            .iter()
            .filter_map(|e| match e.id {
                EntryId::Class(c) => Some(c),
                EntryId::Named(_) => None,
            })
            .collect();
        assert_eq!(labels, ('a'..='t').collect::<Vec<_>>());
        assert_eq!(entries.len(), 29);
    }

    #[test]
    fn every_evidence_assignment_closes() {
        for entry in catalog() {
            assert!(
                closure(entry.evidence.clone()).is_ok(),
                "evidence for {} is contradictory",
                entry.id
            );
        }
    }

    #[test]
    fn lookup_prefers_class_labels() {
        assert!(matches!(find_entry("t").unwrap().id, EntryId::Class('t')));
        assert!(matches!(
            find_entry("thue-morse").unwrap().id,
            EntryId::Named("thue-morse")
        ));
        assert!(matches!(
            find_entry("f").unwrap().id,
            EntryId::Class('f')
        ));
        assert!(matches!(
            find_entry("fibonacci").unwrap().id,
            EntryId::Named("fibonacci")
        ));
        assert!(matches!(find_entry("D").unwrap().id, EntryId::Named("D")));
        assert!(matches!(
            find_entry("R").unwrap().id,
            EntryId::Named("rote-fibonacci")
        ));
        assert!(find_entry("zz").is_none());
    }

    #[test]
    fn small_budget_skips_instead_of_failing() {
        let entry = find_entry("a").unwrap();
        let report = verify(&entry, Some(2_000));
        assert!(report.passed, "report: {:?}", report.checks);
        assert!(report
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::Skipped));
        assert!(report
            .checks
            .iter()
            .any(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn desk_scale_spot_verification() {
        for key in ["m", "q", "t", "fibonacci", "C"] {
            let entry = find_entry(key).unwrap();
            let report = verify(&entry, Some(200_000));
            for check in report.failures() {
                panic!("{} / {}: {}", entry.id, check.name, check.detail);
            }
        }
    }
}
