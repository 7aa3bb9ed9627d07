//! Randomized structural laws: morphisms are homomorphisms, incidence
//! matrices track lengths and composition, fixed points obey their defining
//! equation, stream prefixes nest, and specification text round-trips.

use proptest::collection::vec;
use proptest::prelude::*;

use morphic::corpus::WordSpec;
use morphic::dsl::{parse_spec, print_spec, SpecDocument, SpecSource};
use morphic::generate::{iterate, WordStream};
use morphic::{Alphabet, Morphism, Word};

const LETTERS: [&str; 4] = ["0", "1", "2", "3"];

fn alphabet(size: usize) -> Alphabet {
    Alphabet::new(LETTERS[..size].to_vec()).unwrap()
}

fn morphism_from(size: usize, images: &[Vec<usize>]) -> Morphism {
    let a = alphabet(size);
    let rules: Vec<(String, Vec<String>)> = images
        .iter()
        .enumerate()
        .map(|(i, body)| {
            (
                LETTERS[i].to_string(),
                body.iter().map(|&j| LETTERS[j].to_string()).collect(),
            )
        })
        .collect();
    Morphism::new(&a, &rules).unwrap()
}

/// A random morphism over `size` letters with image lengths in `lens`.
fn images_strategy(
    size: usize,
    lens: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<Vec<usize>>> {
    vec(vec(0..size, lens), size)
}

fn word_from(size: usize, ids: &[usize]) -> Word {
    Word::from_ids(&alphabet(size), ids.iter().map(|&i| i as u32).collect())
}

proptest! {
    /// h(uv) = h(u) h(v).
    #[test]
    fn morphisms_are_homomorphisms(
        size in 2..=4usize,
        images in images_strategy(4, 0..=4),
        u in vec(0..4usize, 0..=25),
        v in vec(0..4usize, 0..=25),
    ) {
        let images = images[..size].iter()
            .map(|body| body.iter().map(|&j| j % size).collect())
            .collect::<Vec<Vec<usize>>>();
        let m = morphism_from(size, &images);
        let u: Vec<usize> = u.into_iter().map(|i| i % size).collect();
        let v: Vec<usize> = v.into_iter().map(|i| i % size).collect();
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let hu = m.apply(&word_from(size, &u)).unwrap();
        let hv = m.apply(&word_from(size, &v)).unwrap();
        let huv = m.apply(&word_from(size, &uv)).unwrap();
        let glued: Vec<u32> = hu.symbols().iter().chain(hv.symbols()).copied().collect();
        prop_assert_eq!(huv.symbols(), &glued[..]);
    }

    /// |h(w)| is the count-weighted sum of incidence row sums.
    #[test]
    fn incidence_rows_predict_image_lengths(
        size in 2..=4usize,
        images in images_strategy(4, 0..=4),
        w in vec(0..4usize, 0..=40),
    ) {
        let images = images[..size].iter()
            .map(|body| body.iter().map(|&j| j % size).collect())
            .collect::<Vec<Vec<usize>>>();
        let m = morphism_from(size, &images);
        let w: Vec<usize> = w.into_iter().map(|i| i % size).collect();
        let matrix = m.incidence_matrix();
        let predicted: u64 = w.iter().map(|&a| matrix.row_sum(a)).sum();
        let image = m.apply(&word_from(size, &w)).unwrap();
        prop_assert_eq!(image.len() as u64, predicted);
    }

    /// M(g after h) = M(h) · M(g), with M[a][b] counting b in the image of a.
    #[test]
    fn incidence_matrices_track_composition(
        size in 2..=4usize,
        g_images in images_strategy(4, 0..=3),
        h_images in images_strategy(4, 0..=3),
    ) {
        let trim = |images: &[Vec<usize>]| -> Vec<Vec<usize>> {
            images[..size].iter()
                .map(|body| body.iter().map(|&j| j % size).collect())
                .collect()
        };
        let g = morphism_from(size, &trim(&g_images));
        let h = morphism_from(size, &trim(&h_images));
        let composed = g.compose(&h).unwrap();
        let expected = h.incidence_matrix().mul(&g.incidence_matrix()).unwrap();
        let actual = composed.incidence_matrix();
        prop_assert_eq!(actual.entries(), expected.entries());
    }

    /// h^(p+q) = h^p after h^q, and iteration steps through apply.
    #[test]
    fn powers_add(
        size in 2..=3usize,
        images in images_strategy(3, 1..=2),
        p in 0..=3u32,
        q in 0..=3u32,
    ) {
        let images = images[..size].iter()
            .map(|body| body.iter().map(|&j| j % size).collect())
            .collect::<Vec<Vec<usize>>>();
        let m = morphism_from(size, &images);
        let budget = 2_000_000;
        let lhs = m.power(p + q, budget);
        let rhs = m.power(p, budget)
            .and_then(|hp| m.power(q, budget).and_then(|hq| hp.compose(&hq)));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "one side failed: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
        let n = p.min(3);
        let step = iterate(&m, LETTERS[0], n, budget)
            .and_then(|w| m.apply(&w));
        let direct = iterate(&m, LETTERS[0], n + 1, budget);
        match (step, direct) {
            (Ok(a), Ok(b)) => prop_assert!(a.same_tokens(&b)),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "one side failed: {:?} vs {:?}", a.is_ok(), b.is_ok()),
        }
    }

    /// A generated prefix w satisfies the fixed-point law: h(w) extends w.
    #[test]
    fn fixed_points_satisfy_their_equation(
        size in 2..=4usize,
        images in images_strategy(4, 1..=3),
        n in 1..=400usize,
    ) {
        let mut images: Vec<Vec<usize>> = images[..size].iter()
            .map(|body| body.iter().map(|&j| j % size).collect())
            .collect();
        // force prolongability on letter 0
        images[0][0] = 0;
        if images[0].len() == 1 {
            images[0].push(1 % size);
        }
        let m = morphism_from(size, &images);
        let mut stream = match WordStream::new(m.clone(), LETTERS[0], None, 1_000_000) {
            Ok(s) => s,
            Err(_) => return Ok(()), // finite fixed point: nothing to test
        };
        let w = match stream.prefix(n) {
            Ok(w) => w,
            Err(_) => return Ok(()), // budget: nothing to test
        };
        prop_assume!(w.len() == n);
        let image = m.apply(&w).unwrap();
        prop_assert!(image.len() >= w.len());
        prop_assert_eq!(&image.symbols()[..w.len()], w.symbols());
    }

    /// Shorter materializations are prefixes of longer ones.
    #[test]
    fn materialized_prefixes_nest(
        pick in 0..=4usize,
        n in 1..=3000usize,
        extra in 0..=2000usize,
    ) {
        let spec = sample_specs().swap_remove(pick);
        let small = spec.materialize(n, 1_000_000).unwrap();
        let large = spec.materialize(n + extra, 1_000_000).unwrap();
        prop_assert_eq!(small.symbols(), &large.symbols()[..n]);
    }

    /// Printing then parsing a document reproduces it exactly.
    #[test]
    fn documents_round_trip(
        size in 2..=4usize,
        images in images_strategy(4, 0..=3),
        seed in 0..=3usize,
        with_coding in any::<bool>(),
        coding_targets in vec(0..2usize, 4),
        with_values in any::<bool>(),
        values in vec(-100..100i64, 4),
        patch in vec(0..=9usize, 0..=3),
        shift in 0..=5usize,
    ) {
        let alphabet: Vec<String> = LETTERS[..size].iter().map(|s| s.to_string()).collect();
        let rules: Vec<(String, Vec<String>)> = alphabet.iter().enumerate()
            .map(|(i, l)| {
                let body = images[i].iter().map(|&j| LETTERS[j % size].to_string()).collect();
                (l.clone(), body)
            })
            .collect();
        let doc = SpecDocument {
            source: SpecSource::Rules {
                alphabet: alphabet.clone(),
                rules,
                seed: alphabet[seed % size].clone(),
            },
            coding: if with_coding {
                alphabet.iter().enumerate()
                    .map(|(i, l)| (l.clone(), ["x", "y"][coding_targets[i]].to_string()))
                    .collect()
            } else {
                Vec::new()
            },
            values: if with_values {
                alphabet.iter().enumerate().map(|(i, l)| (l.clone(), values[i])).collect()
            } else {
                Vec::new()
            },
            patch: patch.iter().map(|&d| d.to_string()).collect(),
            shift,
        };
        let printed = print_spec(&doc);
        let reparsed = parse_spec(&printed).unwrap();
        prop_assert_eq!(&reparsed, &doc);
        prop_assert_eq!(print_spec(&reparsed), printed);
    }

    /// The digit-concatenation stream agrees with independently formatted
    /// numerals in every base it supports.
    #[test]
    fn base_concatenation_matches_formatting(k in 2..=10u32, n in 1..=3000usize) {
        let mut expected = String::new();
        let mut i: u64 = 1;
        while expected.len() < n {
            let mut digits = Vec::new();
            let mut v = i;
            while v > 0 {
                digits.push(char::from_digit((v % k as u64) as u32, k).unwrap());
                v /= k as u64;
            }
            digits.reverse();
            expected.extend(digits);
            if k == 2 {
                let direct = format!("{i:b}");
                prop_assert!(expected.ends_with(&direct));
            }
            i += 1;
        }
        expected.truncate(n);
        let w = WordSpec::BaseConcat(k).materialize(n, 1_000_000).unwrap();
        prop_assert_eq!(w.display(), expected);
    }
}

fn sample_specs() -> Vec<WordSpec> {
    let fib = Morphism::parse("0 -> 01; 1 -> 0").unwrap();
    let tm = Morphism::parse("0 -> 01; 1 -> 10").unwrap();
    vec![
        WordSpec::MorphicFixedPoint {
            morphism: fib.clone(),
            seed: "0".into(),
            coding: None,
        },
        WordSpec::MorphicFixedPoint {
            morphism: tm,
            seed: "0".into(),
            coding: None,
        },
        WordSpec::BaseConcat(2),
        WordSpec::PrefixPatch {
            base: Box::new(WordSpec::MorphicFixedPoint {
                morphism: fib.clone(),
                seed: "0".into(),
                coding: None,
            }),
            replacement: vec!["2".into(), "2".into()],
        },
        WordSpec::Shift {
            base: Box::new(WordSpec::MorphicFixedPoint {
                morphism: fib,
                seed: "0".into(),
                coding: None,
            }),
            offset: 1,
        },
    ]
}
