//! Ten structural properties of infinite words, the implication rules that
//! bind them, and the classification lattice the rules induce.
//!
//! Closure works in three-valued logic: a slot is true, false, or unknown.
//! Forward chaining fires a rule whose antecedents all hold; contrapositive
//! chaining refutes the last open antecedent of a rule whose consequent
//! fails. Brute force over all total assignments yields exactly twenty
//! consistent classes, labeled (a) through (t).

use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

pub const PROP_COUNT: usize = 10;

/// The ten properties, in lattice order P1..P10.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Prop {
    PureMorphic,            // P1: fixed point of a morphism
    Morphic,                // P2: coding of a pure morphic word
    PureUniform,            // P3: fixed point of a k-uniform morphism
    Uniform,                // P4: coding of such a fixed point (k-automatic)
    PurePrimitive,          // P5: fixed point of a primitive morphism
    Primitive,              // P6: coding of such a fixed point
    PureUniformPrimitive,   // P7
    UniformPrimitive,       // P8
    UniformlyRecurrent,     // P9
    Recurrent,              // P10
}

pub const PROPS: [Prop; PROP_COUNT] = [
    Prop::PureMorphic,
    Prop::Morphic,
    Prop::PureUniform,
    Prop::Uniform,
    Prop::PurePrimitive,
    Prop::Primitive,
    Prop::PureUniformPrimitive,
    Prop::UniformPrimitive,
    Prop::UniformlyRecurrent,
    Prop::Recurrent,
];

impl Prop {
    pub fn index(self) -> usize {
        PROPS.iter().position(|&p| p == self).unwrap()
    }

    /// Short name "P1".."P10".
    pub fn short(self) -> String {
        format!("P{}", self.index() + 1)
    }

    pub fn describe(self) -> &'static str {
        match self {
            Prop::PureMorphic => "pure morphic",
            Prop::Morphic => "morphic",
            Prop::PureUniform => "pure uniform morphic",
            Prop::Uniform => "uniform morphic",
            Prop::PurePrimitive => "pure primitive morphic",
            Prop::Primitive => "primitive morphic",
            Prop::PureUniformPrimitive => "pure uniform primitive morphic",
            Prop::UniformPrimitive => "uniform primitive morphic",
            Prop::UniformlyRecurrent => "uniformly recurrent",
            Prop::Recurrent => "recurrent",
        }
    }

    /// Accepts "P3", "p3", or the long name ("pure uniform morphic").
    pub fn parse(token: &str) -> Result<Prop> {
        let t = token.trim();
        if let Some(num) = t.strip_prefix(['P', 'p']) {
            if let Ok(i) = num.parse::<usize>() {
                if (1..=PROP_COUNT).contains(&i) {
                    return Ok(PROPS[i - 1]);
                }
            }
        }
        PROPS
            .iter()
            .copied()
            .find(|p| p.describe().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Invalid(format!("unknown property {token:?}")))
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short())
    }
}

/// Three-valued property vector: each slot true, false, or unknown.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
pub struct Assignment {
    slots: [Option<bool>; PROP_COUNT],
}

impl Assignment {
    pub fn unknown() -> Self {
        Assignment::default()
    }

    pub fn of(pairs: &[(Prop, bool)]) -> Self {
        let mut a = Assignment::default();
        for &(p, v) in pairs {
            a.slots[p.index()] = Some(v);
        }
        a
    }

    pub fn from_total(values: [bool; PROP_COUNT]) -> Self {
        Assignment {
            slots: values.map(Some),
        }
    }

    pub fn get(&self, p: Prop) -> Option<bool> {
        self.slots[p.index()]
    }

    pub fn set(&mut self, p: Prop, v: bool) {
        self.slots[p.index()] = Some(v);
    }

    pub fn slots(&self) -> &[Option<bool>; PROP_COUNT] {
        &self.slots
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    pub fn as_total(&self) -> Option<[bool; PROP_COUNT]> {
        let mut out = [false; PROP_COUNT];
        for (o, s) in out.iter_mut().zip(&self.slots) {
            *o = (*s)?;
        }
        Some(out)
    }

    /// Determined slots of `self` agree with the total vector.
    pub fn consistent_with(&self, total: &[bool; PROP_COUNT]) -> bool {
        self.slots
            .iter()
            .zip(total)
            .all(|(s, t)| s.map_or(true, |v| v == *t))
    }

    /// Every slot determined here is determined identically in `other`.
    pub fn refines(&self, other: &Assignment) -> bool {
        self.slots
            .iter()
            .zip(&other.slots)
            .all(|(s, o)| s.map_or(true, |v| *o == Some(v)))
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = PROPS
            .iter()
            .filter_map(|&p| {
                self.get(p)
                    .map(|v| format!("{}={}", p.short(), if v { "T" } else { "F" }))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Horn clause: antecedents jointly imply the consequent.
#[derive(Debug, Clone, Serialize)]
pub struct Rule {
    pub antecedents: &'static [Prop],
    pub consequent: Prop,
    /// Where the implication comes from: a containment between the defining
    /// classes of machines, or a named theorem.
    pub provenance: &'static str,
}

impl Rule {
    pub fn render(&self) -> String {
        let ante: Vec<String> = self.antecedents.iter().map(|p| p.short()).collect();
        format!(
            "{} => {} [{}]",
            ante.join(" & "),
            self.consequent.short(),
            self.provenance
        )
    }

    fn satisfied_by(&self, total: &[bool; PROP_COUNT]) -> bool {
        !(self.antecedents.iter().all(|p| total[p.index()]) && !total[self.consequent.index()])
    }
}

use Prop::*;

/// The full rule set: definition containments plus the four theorem-backed
/// implications (Cobham's two, the pure-uniform corollary, Durand's).
pub const RULES: &[Rule] = &[
    Rule { antecedents: &[PureMorphic], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PureUniform], consequent: PureMorphic, provenance: "definition" },
    Rule { antecedents: &[PureUniform], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PureUniform], consequent: Uniform, provenance: "definition" },
    Rule { antecedents: &[Uniform], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PurePrimitive], consequent: PureMorphic, provenance: "definition" },
    Rule { antecedents: &[PurePrimitive], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PurePrimitive], consequent: Primitive, provenance: "definition" },
    Rule { antecedents: &[Primitive], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: PureMorphic, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: PureUniform, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: Uniform, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: PurePrimitive, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: Primitive, provenance: "definition" },
    Rule { antecedents: &[PureUniformPrimitive], consequent: UniformPrimitive, provenance: "definition" },
    Rule { antecedents: &[UniformPrimitive], consequent: Morphic, provenance: "definition" },
    Rule { antecedents: &[UniformPrimitive], consequent: Uniform, provenance: "definition" },
    Rule { antecedents: &[UniformPrimitive], consequent: Primitive, provenance: "definition" },
    Rule { antecedents: &[UniformlyRecurrent], consequent: Recurrent, provenance: "definition" },
    Rule {
        antecedents: &[Primitive],
        consequent: UniformlyRecurrent,
        provenance: "cobham: primitive morphic words are uniformly recurrent",
    },
    Rule {
        antecedents: &[Uniform, Primitive],
        consequent: UniformPrimitive,
        provenance: "cobham: uniform + primitive morphic is realized by one uniform primitive system",
    },
    Rule {
        antecedents: &[PureUniform, UniformlyRecurrent],
        consequent: PureUniformPrimitive,
        provenance: "corollary: a uniformly recurrent pure uniform word has a primitive uniform generator",
    },
    Rule {
        antecedents: &[Morphic, UniformlyRecurrent],
        consequent: Primitive,
        provenance: "durand: uniformly recurrent morphic words are primitive morphic",
    },
];

/// A rule falsified by determined slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contradiction {
    pub rule_index: usize,
}

impl Contradiction {
    pub fn rule(&self) -> &'static Rule {
        &RULES[self.rule_index]
    }
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "assignment violates {}", self.rule().render())
    }
}

/// Least fixpoint of forward plus contrapositive chaining. Never revokes a
/// determined slot; reports the violated rule on conflict.
pub fn closure(start: Assignment) -> std::result::Result<Assignment, Contradiction> {
    let mut a = start;
    loop {
        let mut changed = false;
        for (i, rule) in RULES.iter().enumerate() {
            let ante: Vec<Option<bool>> = rule.antecedents.iter().map(|&p| a.get(p)).collect();
            let cons = a.get(rule.consequent);

            if ante.iter().all(|v| *v == Some(true)) {
                match cons {
                    Some(true) => {}
                    Some(false) => return Err(Contradiction { rule_index: i }),
                    None => {
                        a.set(rule.consequent, true);
                        changed = true;
                    }
                }
            } else if cons == Some(false)
                && !ante.iter().any(|v| *v == Some(false))
                && ante.iter().filter(|v| v.is_none()).count() == 1
            {
                let open = rule.antecedents[ante.iter().position(Option::is_none).unwrap()];
                a.set(open, false);
                changed = true;
            }
        }
        if !changed {
            return Ok(a);
        }
    }
}

/// One consistent total assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Class {
    pub label: char,
    pub props: [bool; PROP_COUNT],
}

impl Class {
    pub fn holds(&self, p: Prop) -> bool {
        self.props[p.index()]
    }

    /// The properties that hold, e.g. "P1 P2 P10".
    pub fn positive(&self) -> String {
        let names: Vec<String> = PROPS
            .iter()
            .filter(|p| self.holds(**p))
            .map(|p| p.short())
            .collect();
        if names.is_empty() {
            "none".into()
        } else {
            names.join(" ")
        }
    }
}

/// Determined slots that pin each class down; closure fills the rest.
/// Ordered (a)..(t).
const CLASS_SEEDS: [(char, &[(Prop, bool)]); 20] = [
    ('a', &[(Morphic, false), (Recurrent, false)]),
    ('b', &[(Recurrent, true), (Morphic, false), (UniformlyRecurrent, false)]),
    ('c', &[(UniformlyRecurrent, true), (Morphic, false)]),
    ('d', &[(Morphic, true), (PureMorphic, false), (Uniform, false), (Primitive, false), (Recurrent, false)]),
    ('e', &[(Morphic, true), (Recurrent, true), (PureMorphic, false), (Uniform, false), (Primitive, false), (UniformlyRecurrent, false)]),
    ('f', &[(Primitive, true), (PureMorphic, false), (Uniform, false)]),
    ('g', &[(Uniform, true), (PureMorphic, false), (Primitive, false), (Recurrent, false)]),
    ('h', &[(Uniform, true), (Recurrent, true), (PureMorphic, false), (Primitive, false)]),
    ('i', &[(UniformPrimitive, true), (PureMorphic, false)]),
    ('j', &[(PureMorphic, true), (Uniform, false), (Primitive, false), (Recurrent, false)]),
    ('k', &[(PureMorphic, true), (Recurrent, true), (Uniform, false), (Primitive, false), (UniformlyRecurrent, false)]),
    ('l', &[(PureMorphic, true), (Primitive, true), (Uniform, false), (PurePrimitive, false)]),
    ('m', &[(PurePrimitive, true), (Uniform, false)]),
    ('n', &[(PureMorphic, true), (Uniform, true), (PureUniform, false), (Primitive, false), (Recurrent, false)]),
    ('o', &[(PureMorphic, true), (Uniform, true), (Recurrent, true), (PureUniform, false), (Primitive, false)]),
    ('p', &[(PureMorphic, true), (UniformPrimitive, true), (PureUniform, false), (PurePrimitive, false)]),
    ('q', &[(PurePrimitive, true), (UniformPrimitive, true), (PureUniform, false)]),
    ('r', &[(PureUniform, true), (Primitive, false), (Recurrent, false)]),
    ('s', &[(PureUniform, true), (Recurrent, true), (Primitive, false)]),
    ('t', &[(PureUniformPrimitive, true)]),
];

/// The twenty classes in label order. Each label's seed closes to a total
/// assignment, and brute force over all 2^10 vectors finds exactly these.
pub fn enumerate_classes() -> Vec<Class> {
    let classes: Vec<Class> = CLASS_SEEDS
        .iter()
        .map(|(label, seed)| {
            let closed = closure(Assignment::of(seed))
                .unwrap_or_else(|c| panic!("class ({label}) seed is inconsistent: {c}"));
            let props = closed
                .as_total()
                .unwrap_or_else(|| panic!("class ({label}) seed does not close to a total assignment: {closed:?}"));
            Class { label: *label, props }
        })
        .collect();

    // cross-check against the exhaustive search
    let mut brute: Vec<[bool; PROP_COUNT]> = (0u32..1 << PROP_COUNT)
        .map(|mask| {
            let mut p = [false; PROP_COUNT];
            for (i, slot) in p.iter_mut().enumerate() {
                *slot = mask >> i & 1 == 1;
            }
            p
        })
        .filter(|p| RULES.iter().all(|r| r.satisfied_by(p)))
        .collect();
    brute.sort();
    let mut labeled: Vec<[bool; PROP_COUNT]> = classes.iter().map(|c| c.props).collect();
    labeled.sort();
    assert_eq!(
        brute, labeled,
        "label table and exhaustive enumeration disagree"
    );

    classes
}

/// The defining facts of one class, as a partial assignment whose closure
/// is the class's full truth table.
pub fn class_seed(label: char) -> Result<Assignment> {
    CLASS_SEEDS
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, seed)| Assignment::of(seed))
        .ok_or_else(|| Error::Invalid(format!("no class labeled ({label})")))
}

/// Label of a rule-consistent total assignment.
pub fn class_label(props: &[bool; PROP_COUNT]) -> Result<char> {
    enumerate_classes()
        .iter()
        .find(|c| c.props == *props)
        .map(|c| c.label)
        .ok_or_else(|| Error::Invalid("assignment violates the implication rules".into()))
}

/// Closes the evidence, then lists every class it is consistent with.
pub fn classify_evidence(
    evidence: Assignment,
) -> std::result::Result<Vec<char>, Contradiction> {
    let closed = closure(evidence)?;
    Ok(enumerate_classes()
        .iter()
        .filter(|c| closed.consistent_with(&c.props))
        .map(|c| c.label)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_classes_in_label_order() {
        let classes = enumerate_classes();
        assert_eq!(classes.len(), 20);
        let labels: String = classes.iter().map(|c| c.label).collect();
        assert_eq!(labels, "abcdefghijklmnopqrst");
    }

    #[test]
    fn spot_class_contents() {
        let classes = enumerate_classes();
        let by_label = |l: char| classes.iter().find(|c| c.label == l).unwrap().positive();
        assert_eq!(by_label('a'), "none");
        assert_eq!(by_label('i'), "P2 P4 P6 P8 P9 P10");
        assert_eq!(by_label('m'), "P1 P2 P5 P6 P9 P10");
        assert_eq!(by_label('t'), "P1 P2 P3 P4 P5 P6 P7 P8 P9 P10");
    }

    #[test]
    fn closure_forward_chains() {
        // primitive morphic pulls in uniform recurrence, then recurrence
        let a = closure(Assignment::of(&[(Primitive, true)])).unwrap();
        assert_eq!(a.get(UniformlyRecurrent), Some(true));
        assert_eq!(a.get(Recurrent), Some(true));
        assert_eq!(a.get(Morphic), Some(true));
        assert_eq!(a.get(PureMorphic), None);
    }

    #[test]
    fn closure_contrapositive_chains() {
        // not recurrent refutes uniform recurrence
        let a = closure(Assignment::of(&[(Recurrent, false)])).unwrap();
        assert_eq!(a.get(UniformlyRecurrent), Some(false));

        // morphic and not primitive cannot be uniformly recurrent
        let a = closure(Assignment::of(&[(Morphic, true), (Primitive, false)])).unwrap();
        assert_eq!(a.get(UniformlyRecurrent), Some(false));
    }

    #[test]
    fn durand_conflict_is_reported() {
        let e = Assignment::of(&[
            (Morphic, true),
            (UniformlyRecurrent, true),
            (Primitive, false),
        ]);
        let c = closure(e).unwrap_err();
        assert!(c.rule().provenance.starts_with("durand"));
    }

    #[test]
    fn partial_label_lookups() {
        let close_total = |pairs: &[(Prop, bool)]| {
            closure(Assignment::of(pairs)).unwrap().as_total().unwrap()
        };
        assert_eq!(
            class_label(&close_total(&[(UniformPrimitive, true), (PureMorphic, false)])).unwrap(),
            'i'
        );
        assert_eq!(
            class_label(&close_total(&[
                (PureUniform, true),
                (Primitive, false),
                (Recurrent, false)
            ]))
            .unwrap(),
            'r'
        );
        assert_eq!(
            class_label(&close_total(&[(PurePrimitive, true), (Uniform, false)])).unwrap(),
            'm'
        );
    }

    #[test]
    fn classify_candidates() {
        let labels =
            classify_evidence(Assignment::of(&[(Primitive, true), (PureMorphic, false)]))
                .unwrap();
        assert_eq!(labels, vec!['f', 'i']);

        let labels = classify_evidence(Assignment::of(&[(Recurrent, false)])).unwrap();
        assert_eq!(labels, vec!['a', 'd', 'g', 'j', 'n', 'r']);

        let labels = classify_evidence(Assignment::unknown()).unwrap();
        assert_eq!(labels.len(), 20);
    }

    #[test]
    fn closure_is_idempotent_and_monotone_everywhere() {
        // exhaustive over all 3^10 partial assignments
        let n = 3usize.pow(PROP_COUNT as u32);
        let mut consistent = 0usize;
        for code in 0..n {
            let mut c = code;
            let mut a = Assignment::unknown();
            for p in PROPS {
                match c % 3 {
                    0 => {}
                    1 => a.set(p, true),
                    2 => a.set(p, false),
                    _ => unreachable!(),
                }
                c /= 3;
            }
            match closure(a) {
                Ok(closed) => {
                    consistent += 1;
                    assert!(a.refines(&closed), "closure dropped a slot: {a:?} -> {closed:?}");
                    assert_eq!(closure(closed), Ok(closed), "closure not idempotent");
                }
                Err(_) => {}
            }
        }
        // sanity: plenty of partial assignments survive, including all-unknown
        assert!(consistent > 1000);
    }
}
