//! Cross-KB constraint alignment.
//!
//! An [`Alignment`] is an injective partial map from the concepts of a source
//! KB into a target KB. [`validate_alignment`] enforces the conditions under
//! which translated verdicts can be trusted:
//!
//! - order preservation *and* reflection on mapped pairs (`x <= y` iff
//!   `α(x) <= α(y)`),
//! - preservation of disjointness (target may add more),
//! - witness completeness: if a groundable value's concept is mapped, its
//!   entire down-set must be mapped, otherwise the restriction would silently
//!   drop the very witnesses that make constraints compatible.
//!
//! Constraint translation ([`align_constraint`]) degrades to an indeterminate
//! marker instead of guessing: an ungrounded value, an unmapped grounding, or
//! a denotation that leaves the mapped region (complement and up-set
//! operators under a partial map) all yield `Unknown` downstream rather than
//! a fabricated conflict.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constraint::Constraint;
use crate::denotation::{denote, Denotation, EvalMode};
use crate::kb::{ConceptId, Domain, KbError, KbSpec, KnowledgeBase};
use crate::verdict::{check_pair, PairVerdict, Verdict, VerdictError};

/// An injective partial concept map between two knowledge bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Alignment {
    /// Id of the source KB.
    pub source: String,
    /// Id of the target KB.
    pub target: String,
    /// `[source_concept, target_concept]` pairs.
    pub map: Vec<(ConceptId, ConceptId)>,
}

impl Alignment {
    pub fn new(
        source: impl Into<String>,
        target: impl Into<String>,
        map: Vec<(ConceptId, ConceptId)>,
    ) -> Self {
        Alignment {
            source: source.into(),
            target: target.into(),
            map,
        }
    }

    /// The mapping as a lookup table (first entry wins on duplicate sources;
    /// duplicates are reported by validation).
    fn lookup(&self) -> BTreeMap<&ConceptId, &ConceptId> {
        let mut m = BTreeMap::new();
        for (s, t) in &self.map {
            m.entry(s).or_insert(t);
        }
        m
    }
}

/// A violated alignment condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlignmentViolation {
    SourceKbMismatch { alignment: String, kb: String },
    TargetKbMismatch { alignment: String, kb: String },
    UnknownSourceConcept { id: ConceptId },
    UnknownTargetConcept { id: ConceptId },
    DuplicateSource { id: ConceptId },
    /// Two source concepts share a target.
    InjectivityViolation {
        x1: ConceptId,
        x2: ConceptId,
        target: ConceptId,
    },
    /// `x <= y` in the source but not `α(x) <= α(y)` in the target.
    OrderNotPreserved { x: ConceptId, y: ConceptId },
    /// `α(x) <= α(y)` in the target but not `x <= y` in the source.
    OrderNotReflected { x: ConceptId, y: ConceptId },
    /// `disjoint(x, y)` in the source but not in the target.
    DisjointnessNotPreserved { x: ConceptId, y: ConceptId },
    /// A groundable concept is mapped but part of its down-set is not.
    WitnessIncomplete {
        grounded: ConceptId,
        missing: ConceptId,
    },
}

impl fmt::Display for AlignmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlignmentViolation::SourceKbMismatch { alignment, kb } => {
                write!(f, "alignment source '{alignment}' does not match KB '{kb}'")
            }
            AlignmentViolation::TargetKbMismatch { alignment, kb } => {
                write!(f, "alignment target '{alignment}' does not match KB '{kb}'")
            }
            AlignmentViolation::UnknownSourceConcept { id } => {
                write!(f, "source concept '{id}' is not in the source KB")
            }
            AlignmentViolation::UnknownTargetConcept { id } => {
                write!(f, "target concept '{id}' is not in the target KB")
            }
            AlignmentViolation::DuplicateSource { id } => {
                write!(f, "source concept '{id}' is mapped more than once")
            }
            AlignmentViolation::InjectivityViolation { x1, x2, target } => {
                write!(f, "'{x1}' and '{x2}' both map to '{target}'")
            }
            AlignmentViolation::OrderNotPreserved { x, y } => {
                write!(f, "{x} <= {y} holds in the source but not between their images")
            }
            AlignmentViolation::OrderNotReflected { x, y } => write!(
                f,
                "images of {x} and {y} are ordered in the target but {x} <= {y} fails in the source"
            ),
            AlignmentViolation::DisjointnessNotPreserved { x, y } => {
                write!(f, "disjoint({x}, {y}) holds in the source but not between their images")
            }
            AlignmentViolation::WitnessIncomplete { grounded, missing } => {
                write!(f, "'{grounded}' is grounded and mapped but '{missing}' below it is unmapped")
            }
        }
    }
}

/// Errors raised when an alignment is used for translation.
#[derive(Debug, thiserror::Error)]
pub enum AlignmentError {
    #[error("alignment is invalid: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { violations: Vec<AlignmentViolation> },
    #[error(transparent)]
    Verdict(#[from] VerdictError),
    #[error(transparent)]
    Kb(#[from] KbError),
}

/// Checks every alignment condition and reports all violations found.
pub fn validate_alignment(
    kb_a: &KnowledgeBase,
    kb_b: &KnowledgeBase,
    alignment: &Alignment,
) -> Vec<AlignmentViolation> {
    let mut out = Vec::new();
    if alignment.source != kb_a.id() {
        out.push(AlignmentViolation::SourceKbMismatch {
            alignment: alignment.source.clone(),
            kb: kb_a.id().to_owned(),
        });
    }
    if alignment.target != kb_b.id() {
        out.push(AlignmentViolation::TargetKbMismatch {
            alignment: alignment.target.clone(),
            kb: kb_b.id().to_owned(),
        });
    }

    let mut seen_sources: BTreeSet<&ConceptId> = BTreeSet::new();
    let mut by_target: BTreeMap<&ConceptId, &ConceptId> = BTreeMap::new();
    let mut resolved: Vec<(&ConceptId, &ConceptId)> = Vec::new();
    for (s, t) in &alignment.map {
        if !seen_sources.insert(s) {
            out.push(AlignmentViolation::DuplicateSource { id: s.clone() });
            continue;
        }
        let mut ok = true;
        if !kb_a.contains(s) {
            out.push(AlignmentViolation::UnknownSourceConcept { id: s.clone() });
            ok = false;
        }
        if !kb_b.contains(t) {
            out.push(AlignmentViolation::UnknownTargetConcept { id: t.clone() });
            ok = false;
        }
        if !ok {
            continue;
        }
        if let Some(prev) = by_target.get(t) {
            out.push(AlignmentViolation::InjectivityViolation {
                x1: (*prev).clone(),
                x2: s.clone(),
                target: t.clone(),
            });
            continue;
        }
        by_target.insert(t, s);
        resolved.push((s, t));
    }

    // Order biconditional and disjointness preservation over mapped pairs.
    for (x, tx) in &resolved {
        for (y, ty) in &resolved {
            let src_leq = kb_a.leq(x, y).expect("validated source concept");
            let tgt_leq = kb_b.leq(tx, ty).expect("validated target concept");
            if src_leq && !tgt_leq {
                out.push(AlignmentViolation::OrderNotPreserved {
                    x: (*x).clone(),
                    y: (*y).clone(),
                });
            }
            if tgt_leq && !src_leq {
                out.push(AlignmentViolation::OrderNotReflected {
                    x: (*x).clone(),
                    y: (*y).clone(),
                });
            }
            if x < y {
                let src_disj = kb_a.disjoint(x, y).expect("validated source concept");
                let tgt_disj = kb_b.disjoint(tx, ty).expect("validated target concept");
                if src_disj && !tgt_disj {
                    out.push(AlignmentViolation::DisjointnessNotPreserved {
                        x: (*x).clone(),
                        y: (*y).clone(),
                    });
                }
            }
        }
    }

    // Witness completeness: a mapped, groundable concept must bring its whole
    // down-set along, otherwise compatibility witnesses vanish silently.
    let dom: BTreeSet<&ConceptId> = resolved.iter().map(|(s, _)| *s).collect();
    let mut checked: BTreeSet<&ConceptId> = BTreeSet::new();
    for (_, g) in kb_a.gamma_entries() {
        if !dom.contains(g) || !checked.insert(g) {
            continue;
        }
        for w in kb_a.concepts() {
            if kb_a.leq(w, g).expect("own concept") && !dom.contains(w) {
                out.push(AlignmentViolation::WitnessIncomplete {
                    grounded: g.clone(),
                    missing: w.clone(),
                });
            }
        }
    }

    out
}

/// Why a translated constraint became indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegradeReason {
    /// A right-operand value has no gamma entry in the source KB.
    UngroundedValue { value: String },
    /// A grounding concept has no image under the alignment.
    UnmappedConcept { concept: ConceptId },
    /// The source denotation leaves the mapped region, so evaluating the
    /// restriction could fabricate a conflict.
    DenotationNotCovered { concept: ConceptId },
}

/// A constraint translated through an alignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AlignedConstraint {
    /// Fully translated: evaluate against the restricted target KB, whose
    /// gamma grounds the original value strings at the mapped concepts.
    Mapped(Constraint),
    /// Translation lost information; any verdict involving this constraint is
    /// `Unknown`.
    Indeterminate {
        constraint: Constraint,
        reason: DegradeReason,
    },
}

/// Translates a constraint through an alignment.
pub fn align_constraint(
    kb_a: &KnowledgeBase,
    alignment: &Alignment,
    c: &Constraint,
) -> AlignedConstraint {
    let lookup = alignment.lookup();
    for v in c.values() {
        let g = match kb_a.ground(v) {
            Some(g) => g,
            None => {
                return AlignedConstraint::Indeterminate {
                    constraint: c.clone(),
                    reason: DegradeReason::UngroundedValue { value: v.clone() },
                }
            }
        };
        if !lookup.contains_key(g) {
            return AlignedConstraint::Indeterminate {
                constraint: c.clone(),
                reason: DegradeReason::UnmappedConcept { concept: g.clone() },
            };
        }
    }
    if let Denotation::Concrete(den) = denote(kb_a, c) {
        for x in &den {
            if !lookup.contains_key(x) {
                return AlignedConstraint::Indeterminate {
                    constraint: c.clone(),
                    reason: DegradeReason::DenotationNotCovered { concept: x.clone() },
                };
            }
        }
    }
    AlignedConstraint::Mapped(c.clone())
}

/// Restricts the target KB to the image of a valid alignment, composing the
/// source KB's gamma through the map so that source value strings ground at
/// their image concepts.
pub fn restrict_kb(
    kb_a: &KnowledgeBase,
    kb_b: &KnowledgeBase,
    alignment: &Alignment,
) -> Result<KnowledgeBase, AlignmentError> {
    let violations = validate_alignment(kb_a, kb_b, alignment);
    if !violations.is_empty() {
        return Err(AlignmentError::Invalid { violations });
    }
    let lookup = alignment.lookup();
    let image: BTreeSet<&ConceptId> = lookup.values().copied().collect();

    let mut spec = KbSpec::new(
        format!("{}@{}", kb_b.id(), kb_a.id()),
        kb_b.domain(),
    );
    spec.una = kb_b.una();
    // Keep the target KB's concept order for determinism.
    spec.concepts = kb_b
        .concepts()
        .iter()
        .filter(|c| image.contains(c))
        .cloned()
        .collect();
    for x in &spec.concepts {
        for y in &spec.concepts {
            if x != y && kb_b.leq(x, y).expect("image concept") && kb_b.domain() != Domain::Nominal
            {
                spec.leq.push((x.clone(), y.clone()));
            }
            if x < y && kb_b.disjoint(x, y).expect("image concept") {
                spec.disjoint.push((x.clone(), y.clone()));
            }
            if kb_b.not_leq(x, y).expect("image concept") {
                spec.not_leq.push((x.clone(), y.clone()));
            }
        }
    }
    for (v, g) in kb_a.gamma_entries() {
        if let Some(t) = lookup.get(g) {
            spec.gamma.insert(v.to_owned(), (*t).clone());
        }
    }
    Ok(KnowledgeBase::from_spec(&spec)?)
}

/// Result of checking a constraint pair in the source KB and again through an
/// alignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlignedOutcome {
    pub source: PairVerdict,
    pub aligned: PairVerdict,
    /// Set when translation degraded and forced the aligned verdict to
    /// `Unknown`.
    pub degraded: Option<DegradeReason>,
}

/// Checks `c1` vs `c2` in the source KB and through the alignment.
///
/// The aligned check evaluates the translated constraints against the
/// restricted target KB; if either translation degrades, the aligned verdict
/// is `Unknown` rather than a guess.
pub fn aligned_verdict(
    kb_a: &KnowledgeBase,
    kb_b: &KnowledgeBase,
    alignment: &Alignment,
    c1: &Constraint,
    c2: &Constraint,
    mode: EvalMode,
) -> Result<AlignedOutcome, AlignmentError> {
    let source = check_pair(kb_a, c1, c2, mode)?;
    let restricted = restrict_kb(kb_a, kb_b, alignment)?;
    let a1 = align_constraint(kb_a, alignment, c1);
    let a2 = align_constraint(kb_a, alignment, c2);
    let (aligned, degraded) = match (a1, a2) {
        (AlignedConstraint::Mapped(m1), AlignedConstraint::Mapped(m2)) => {
            (check_pair(&restricted, &m1, &m2, mode)?, None)
        }
        (AlignedConstraint::Indeterminate { reason, .. }, _)
        | (_, AlignedConstraint::Indeterminate { reason, .. }) => (
            PairVerdict {
                verdict: Verdict::Unknown,
                witness: None,
            },
            Some(reason),
        ),
    };
    Ok(AlignedOutcome {
        source,
        aligned,
        degraded,
    })
}
