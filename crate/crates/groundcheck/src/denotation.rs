//! Constraint denotations over a knowledge base.
//!
//! The closed-world reading maps a grounded constraint to the subset of the
//! concept space it admits ([`denote`]); an ungrounded value (no gamma entry)
//! yields [`Denotation::Top`], which records epistemic indeterminacy rather
//! than "everything". Intersection of denotations ([`intersect`]) is
//! conservative: a concrete empty side forces the empty set even when the
//! other side is `Top`, because no completion of the missing grounding can
//! repopulate an empty denotation.
//!
//! The open-world reading asks, per concept, whether membership is forced,
//! refuted, or undetermined by the stored facts ([`member3`]): absence of an
//! order fact is only evidence against membership when the KB asserts
//! disjointness, a negative order fact, or (for identity tests) unique names.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constraint::{Constraint, Operator};
use crate::kb::{ConceptId, KnowledgeBase};
use crate::kleene::Kleene;

/// Evaluation mode for verdicts and membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalMode {
    /// Literal denotational semantics over the stored facts.
    Closed,
    /// Sound three-valued semantics: definite answers hold under every
    /// completion of the KB's relations.
    Open,
}

impl fmt::Display for EvalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalMode::Closed => "closed",
            EvalMode::Open => "open",
        })
    }
}

impl FromStr for EvalMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed" => Ok(EvalMode::Closed),
            "open" => Ok(EvalMode::Open),
            other => Err(format!("unknown mode '{other}' (expected 'open' or 'closed')")),
        }
    }
}

/// The denotation of a constraint: a concrete subset of the concept space, or
/// `Top` when some right-operand value has no grounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Denotation {
    /// Indeterminate: the constraint mentions a value the KB cannot ground.
    Top,
    Concrete(BTreeSet<ConceptId>),
}

impl Denotation {
    pub fn is_top(&self) -> bool {
        matches!(self, Denotation::Top)
    }

    /// Concrete and empty.
    pub fn is_empty(&self) -> bool {
        matches!(self, Denotation::Concrete(s) if s.is_empty())
    }

    pub fn as_set(&self) -> Option<&BTreeSet<ConceptId>> {
        match self {
            Denotation::Top => None,
            Denotation::Concrete(s) => Some(s),
        }
    }

    pub fn contains(&self, c: &ConceptId) -> bool {
        match self {
            Denotation::Top => false,
            Denotation::Concrete(s) => s.contains(c),
        }
    }
}

impl fmt::Display for Denotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Denotation::Top => f.write_str("TOP"),
            Denotation::Concrete(s) => {
                let items: Vec<&str> = s.iter().map(|c| c.as_str()).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

/// Errors raised by open-world membership evaluation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("constraint {constraint} is ungrounded: no gamma entry for value '{value}'")]
    UngroundedConstraint { constraint: String, value: String },
    #[error("concept '{id}' is not in the knowledge base")]
    UnknownConcept { id: String },
}

/// Grounds every right-operand value; `Err` carries the first missing value.
fn ground_all(kb: &KnowledgeBase, c: &Constraint) -> Result<Vec<usize>, String> {
    let mut out = Vec::with_capacity(c.values().len());
    for v in c.values() {
        match kb.ground_idx(v) {
            Some(i) => {
                if !out.contains(&i) {
                    out.push(i);
                }
            }
            None => return Err(v.clone()),
        }
    }
    Ok(out)
}

/// Closed-world denotation of a constraint.
///
/// Any ungrounded right-operand value (including one element of a set
/// operator's list) yields [`Denotation::Top`]. `neq` excludes only the named
/// concept, not its descendants; `isA` and `isPartOf` are the same down-set
/// construction read through the KB's domain.
pub fn denote(kb: &KnowledgeBase, c: &Constraint) -> Denotation {
    let groundings = match ground_all(kb, c) {
        Ok(g) => g,
        Err(_) => return Denotation::Top,
    };
    let n = kb.len();
    let indices: Vec<usize> = match c.operator() {
        Operator::Eq => groundings,
        Operator::Neq => {
            let g = groundings[0];
            (0..n).filter(|&i| i != g).collect()
        }
        Operator::IsA | Operator::IsPartOf => kb.down_set_idx(groundings[0]),
        Operator::HasPart => kb.up_set_idx(groundings[0]),
        Operator::IsAnyOf => (0..n)
            .filter(|&i| groundings.iter().any(|&g| kb.leq_idx(i, g)))
            .collect(),
        Operator::IsAllOf => (0..n)
            .filter(|&i| groundings.iter().all(|&g| kb.leq_idx(i, g)))
            .collect(),
        Operator::IsNoneOf => (0..n)
            .filter(|&i| !groundings.iter().any(|&g| kb.leq_idx(i, g)))
            .collect(),
    };
    Denotation::Concrete(indices.into_iter().map(|i| kb.concept(i).clone()).collect())
}

/// Conservative intersection of two denotations.
///
/// A concrete empty operand dominates `Top`: whatever the missing grounding
/// turns out to be, intersecting with the empty set stays empty. Only when
/// both sides are concrete and the result could be non-empty is a set
/// returned; `Top` is sticky otherwise.
pub fn intersect(a: &Denotation, b: &Denotation) -> Denotation {
    if a.is_empty() || b.is_empty() {
        return Denotation::Concrete(BTreeSet::new());
    }
    match (a, b) {
        (Denotation::Concrete(x), Denotation::Concrete(y)) => {
            Denotation::Concrete(x.intersection(y).cloned().collect())
        }
        _ => Denotation::Top,
    }
}

/// Open-world membership of concept `x` in the denotation of `c`, by index.
pub(crate) fn member3_idx(
    kb: &KnowledgeBase,
    x: usize,
    c: &Constraint,
) -> Result<Kleene, EvalError> {
    let groundings = ground_all(kb, c).map_err(|value| EvalError::UngroundedConstraint {
        constraint: c.to_string(),
        value,
    })?;
    Ok(member3_grounded(kb, x, c.operator(), &groundings))
}

/// Membership with groundings already resolved (shared with the verdict loop).
pub(crate) fn member3_grounded(
    kb: &KnowledgeBase,
    x: usize,
    op: Operator,
    groundings: &[usize],
) -> Kleene {
    let eq3 = |g: usize| -> Kleene {
        if x == g {
            Kleene::True
        } else if kb.una() {
            Kleene::False
        } else {
            Kleene::Unknown
        }
    };
    // Positive order fact forces membership; an asserted disjointness or
    // negative order fact refutes it; otherwise the KB is silent.
    let below3 = |a: usize, b: usize| -> Kleene {
        if kb.leq_idx(a, b) {
            Kleene::True
        } else if kb.disjoint_idx(a, b) || kb.not_leq_idx(a, b) {
            Kleene::False
        } else {
            Kleene::Unknown
        }
    };
    match op {
        Operator::Eq => eq3(groundings[0]),
        Operator::Neq => !eq3(groundings[0]),
        Operator::IsA | Operator::IsPartOf => below3(x, groundings[0]),
        Operator::HasPart => below3(groundings[0], x),
        Operator::IsAnyOf => Kleene::any(groundings.iter().map(|&g| below3(x, g))),
        Operator::IsAllOf => Kleene::all(groundings.iter().map(|&g| below3(x, g))),
        Operator::IsNoneOf => !Kleene::any(groundings.iter().map(|&g| below3(x, g))),
    }
}

/// Open-world three-valued membership: is `x` in the denotation of `c`?
///
/// `True` and `False` answers are sound under every completion of the KB's
/// relations; `Unknown` means the stored facts do not decide the question.
/// The constraint must be grounded and `x` must be a known concept.
pub fn member3(kb: &KnowledgeBase, x: &ConceptId, c: &Constraint) -> Result<Kleene, EvalError> {
    let xi = kb
        .index_of(x)
        .ok_or_else(|| EvalError::UnknownConcept { id: x.as_str().to_owned() })?;
    member3_idx(kb, xi, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::{Domain, KbSpec};
    use std::collections::BTreeSet;

    fn cid(s: &str) -> ConceptId {
        ConceptId::new(s)
    }

    fn geo_kb() -> KnowledgeBase {
        let mut s = KbSpec::new("GEO000", Domain::Mereological);
        s.concepts = vec![cid("europe"), cid("germany"), cid("france"), cid("bavaria")];
        s.leq = vec![
            (cid("germany"), cid("europe")),
            (cid("france"), cid("europe")),
            (cid("bavaria"), cid("germany")),
        ];
        s.disjoint = vec![(cid("germany"), cid("france"))];
        for (v, c) in [
            ("geo:europe", "europe"),
            ("geo:germany", "germany"),
            ("geo:france", "france"),
            ("geo:bavaria", "bavaria"),
        ] {
            s.gamma.insert(v.to_owned(), cid(c));
        }
        KnowledgeBase::from_spec(&s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<ConceptId> {
        items.iter().map(|s| cid(s)).collect()
    }

    fn con(op: Operator, values: &[&str]) -> Constraint {
        Constraint::new("spatial", op, values.iter().map(|v| v.to_string()).collect()).unwrap()
    }

    #[test]
    fn is_part_of_denotes_the_down_set() {
        let kb = geo_kb();
        let d = denote(&kb, &con(Operator::IsPartOf, &["geo:europe"]));
        assert_eq!(
            d,
            Denotation::Concrete(set(&["bavaria", "europe", "france", "germany"]))
        );
    }

    #[test]
    fn has_part_denotes_the_up_set() {
        let kb = geo_kb();
        let d = denote(&kb, &con(Operator::HasPart, &["geo:bavaria"]));
        assert_eq!(d, Denotation::Concrete(set(&["bavaria", "europe", "germany"])));
    }

    #[test]
    fn eq_and_neq_are_point_and_point_complement() {
        let kb = geo_kb();
        assert_eq!(
            denote(&kb, &con(Operator::Eq, &["geo:france"])),
            Denotation::Concrete(set(&["france"]))
        );
        assert_eq!(
            denote(&kb, &con(Operator::Neq, &["geo:france"])),
            Denotation::Concrete(set(&["bavaria", "europe", "germany"]))
        );
    }

    #[test]
    fn ungrounded_value_denotes_top_even_inside_a_list() {
        let kb = geo_kb();
        assert!(denote(&kb, &con(Operator::Eq, &["geo:atlantis"])).is_top());
        assert!(denote(
            &kb,
            &con(Operator::IsAnyOf, &["geo:germany", "geo:atlantis"])
        )
        .is_top());
    }

    #[test]
    fn set_operators_union_intersect_and_complement_down_sets() {
        let kb = geo_kb();
        assert_eq!(
            denote(&kb, &con(Operator::IsAnyOf, &["geo:germany", "geo:france"])),
            Denotation::Concrete(set(&["bavaria", "france", "germany"]))
        );
        // germany and france are incomparable: nothing is below both.
        assert_eq!(
            denote(&kb, &con(Operator::IsAllOf, &["geo:germany", "geo:france"])),
            Denotation::Concrete(BTreeSet::new())
        );
        assert_eq!(
            denote(&kb, &con(Operator::IsNoneOf, &["geo:germany"])),
            Denotation::Concrete(set(&["europe", "france"]))
        );
    }

    #[test]
    fn duplicate_values_are_deduplicated_after_grounding() {
        let kb = geo_kb();
        assert_eq!(
            denote(&kb, &con(Operator::IsAnyOf, &["geo:germany", "geo:germany"])),
            denote(&kb, &con(Operator::IsAnyOf, &["geo:germany"]))
        );
    }

    #[test]
    fn intersection_is_conservative() {
        let top = Denotation::Top;
        let empty = Denotation::Concrete(BTreeSet::new());
        let ab = Denotation::Concrete(set(&["a", "b"]));
        let bc = Denotation::Concrete(set(&["b", "c"]));
        assert_eq!(intersect(&ab, &bc), Denotation::Concrete(set(&["b"])));
        assert_eq!(intersect(&top, &ab), Denotation::Top, "TOP absorbs non-empty");
        assert_eq!(intersect(&top, &empty), empty, "empty dominates TOP");
        assert_eq!(intersect(&empty, &top), empty);
        assert_eq!(intersect(&top, &top), Denotation::Top);
    }

    #[test]
    fn member3_uses_order_disjointness_and_silence() {
        let kb = geo_kb();
        let c = con(Operator::IsPartOf, &["geo:germany"]);
        assert_eq!(member3(&kb, &cid("bavaria"), &c).unwrap(), Kleene::True);
        assert_eq!(member3(&kb, &cid("france"), &c).unwrap(), Kleene::False);
        // europe <= germany is not stored and nothing refutes it.
        assert_eq!(member3(&kb, &cid("europe"), &c).unwrap(), Kleene::Unknown);
    }

    #[test]
    fn member3_eq_respects_unique_names() {
        let kb = geo_kb();
        let c = con(Operator::Eq, &["geo:france"]);
        assert_eq!(member3(&kb, &cid("france"), &c).unwrap(), Kleene::True);
        assert_eq!(member3(&kb, &cid("germany"), &c).unwrap(), Kleene::False);

        let mut spec = kb.to_spec();
        spec.una = false;
        let no_una = KnowledgeBase::from_spec(&spec).unwrap();
        assert_eq!(
            member3(&no_una, &cid("germany"), &c).unwrap(),
            Kleene::Unknown,
            "without unique names, distinct identifiers may corefer"
        );
    }

    #[test]
    fn member3_not_leq_refutes_membership() {
        let mut s = KbSpec::new("neg", Domain::Mereological);
        s.concepts = vec![cid("a"), cid("b")];
        s.not_leq = vec![(cid("a"), cid("b"))];
        s.gamma.insert("vb".into(), cid("b"));
        let kb = KnowledgeBase::from_spec(&s).unwrap();
        let c = con(Operator::IsPartOf, &["vb"]);
        assert_eq!(member3(&kb, &cid("a"), &c).unwrap(), Kleene::False);
    }

    #[test]
    fn member3_errors_on_ungrounded_constraint_and_unknown_concept() {
        let kb = geo_kb();
        let c = con(Operator::Eq, &["geo:atlantis"]);
        assert!(matches!(
            member3(&kb, &cid("france"), &c),
            Err(EvalError::UngroundedConstraint { .. })
        ));
        let c = con(Operator::Eq, &["geo:france"]);
        assert!(matches!(
            member3(&kb, &cid("mars"), &c),
            Err(EvalError::UnknownConcept { .. })
        ));
    }

    #[test]
    fn nominal_is_a_degenerates_to_eq() {
        let mut s = KbSpec::new("NOM", Domain::Nominal);
        s.concepts = vec![cid("sftp"), cid("https"), cid("ftp"), cid("email")];
        for c in ["sftp", "https", "ftp", "email"] {
            s.gamma.insert(format!("proto:{c}"), cid(c));
        }
        let kb = KnowledgeBase::from_spec(&s).unwrap();
        for v in ["proto:sftp", "proto:https", "proto:ftp", "proto:email"] {
            assert_eq!(
                denote(&kb, &con(Operator::IsA, &[v])),
                denote(&kb, &con(Operator::Eq, &[v])),
                "in a nominal KB the down-set of {v} is the point itself"
            );
        }
        // And membership is never Unknown: identity or disjointness decides.
        for x in kb.concepts() {
            let m = member3(&kb, x, &con(Operator::IsA, &["proto:sftp"])).unwrap();
            assert_ne!(m, Kleene::Unknown);
        }
    }

    #[test]
    fn single_concept_neq_denotes_empty() {
        let mut s = KbSpec::new("SNG", Domain::Taxonomic);
        s.concepts = vec![cid("only")];
        s.gamma.insert("v".into(), cid("only"));
        let kb = KnowledgeBase::from_spec(&s).unwrap();
        assert!(denote(&kb, &con(Operator::Neq, &["v"])).is_empty());
    }
}
