//! Conflict verdicts for constraint pairs and composite rules.
//!
//! A verdict is three-valued and sound rather than forced: [`Verdict::Conflict`]
//! means no assignment can satisfy both constraints, [`Verdict::Compatible`]
//! means a common witness exists (and is reported), and [`Verdict::Unknown`]
//! means the knowledge base does not decide the question. In closed mode the
//! verdict reads off the conservative intersection of denotations; in open
//! mode it quantifies three-valued membership over the concept space, so that
//! definite answers remain valid under every completion of the KB.
//!
//! Composite rules are trees under `and`/`or`/`xone`. [`check_composite`]
//! pairs leaves by shared left operand across the two sides, computes
//! per-operand verdicts, and folds the left tree's structure through
//! [`compose`]; the right side acts as the counterparty and contributes its
//! constraints per operand, conjoined (ODRL refinement lists conjoin by
//! default). Operands constrained on one side only are vacuously satisfiable
//! and excluded from pairing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constraint::{CompositeConstraint, CompositionMode, Constraint};
use crate::denotation::{denote, member3_grounded, Denotation, EvalMode};
use crate::kb::{ConceptId, KnowledgeBase};
use crate::kleene::Kleene;

/// Outcome of a conflict check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Conflict,
    Compatible,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Conflict => "CONFLICT",
            Verdict::Compatible => "COMPATIBLE",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

/// Outcome of a subsumption check between two constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SubsumptionResult {
    Confirmed,
    Refuted,
    Unknown,
}

impl fmt::Display for SubsumptionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubsumptionResult::Confirmed => "CONFIRMED",
            SubsumptionResult::Refuted => "REFUTED",
            SubsumptionResult::Unknown => "UNKNOWN",
        })
    }
}

/// Errors raised by the verdict layer.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerdictError {
    #[error("constraints target different operands: '{left}' vs '{right}'")]
    OperandMismatch { left: String, right: String },
    #[error("no knowledge base registered for operand '{operand}'")]
    MissingKb { operand: String },
}

/// A verdict together with its witness, when one exists.
///
/// The witness is the lexicographically least concept admitted by both
/// constraints; it is present exactly for `Compatible` verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub verdict: Verdict,
    pub witness: Option<ConceptId>,
}

impl PairVerdict {
    fn bare(verdict: Verdict) -> Self {
        PairVerdict {
            verdict,
            witness: None,
        }
    }
}

/// Checks a pair of constraints on the same operand for conflict.
pub fn check_pair(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    mode: EvalMode,
) -> Result<PairVerdict, VerdictError> {
    if c1.left_operand() != c2.left_operand() {
        return Err(VerdictError::OperandMismatch {
            left: c1.left_operand().to_owned(),
            right: c2.left_operand().to_owned(),
        });
    }
    Ok(check_lists(kb, &[c1], &[c2], mode))
}

/// Conflict check between two conjunctions of constraints on one operand.
///
/// The binary case is exactly the pair semantics; larger lists arise when a
/// side refines the same operand several times.
fn check_lists(
    kb: &KnowledgeBase,
    left: &[&Constraint],
    right: &[&Constraint],
    mode: EvalMode,
) -> PairVerdict {
    match mode {
        EvalMode::Closed => {
            let denotations: Vec<Denotation> = left
                .iter()
                .chain(right.iter())
                .map(|c| denote(kb, c))
                .collect();
            // Conservative n-ary intersection: if the concrete sides already
            // fail to intersect the result is empty regardless of any TOP;
            // otherwise a single TOP makes the result indeterminate.
            let mut acc: Option<BTreeSet<ConceptId>> = None;
            let mut saw_top = false;
            for d in &denotations {
                match d {
                    Denotation::Top => saw_top = true,
                    Denotation::Concrete(s) => {
                        acc = Some(match acc {
                            None => s.clone(),
                            Some(prev) => prev.intersection(s).cloned().collect(),
                        });
                    }
                }
            }
            match acc {
                Some(s) if s.is_empty() => PairVerdict::bare(Verdict::Conflict),
                _ if saw_top => PairVerdict::bare(Verdict::Unknown),
                Some(s) => PairVerdict {
                    verdict: Verdict::Compatible,
                    witness: s.iter().next().cloned(),
                },
                // Both lists empty never occurs: callers pass >= 1 constraint.
                None => PairVerdict::bare(Verdict::Unknown),
            }
        }
        EvalMode::Open => {
            // Resolve groundings up front; any ungrounded constraint makes the
            // question indeterminate.
            let mut resolved: Vec<(&Constraint, Vec<usize>)> = Vec::new();
            for c in left.iter().chain(right.iter()) {
                let mut g = Vec::new();
                for v in c.values() {
                    match kb.ground_idx(v) {
                        Some(i) => {
                            if !g.contains(&i) {
                                g.push(i);
                            }
                        }
                        None => return PairVerdict::bare(Verdict::Unknown),
                    }
                }
                resolved.push((c, g));
            }
            let mut all_refuted = true;
            let mut witness: Option<usize> = None;
            for x in 0..kb.len() {
                let joint = Kleene::all(
                    resolved
                        .iter()
                        .map(|(c, g)| member3_grounded(kb, x, c.operator(), g)),
                );
                match joint {
                    Kleene::True => {
                        let better = match witness {
                            None => true,
                            Some(w) => kb.concept(x) < kb.concept(w),
                        };
                        if better {
                            witness = Some(x);
                        }
                        all_refuted = false;
                    }
                    Kleene::Unknown => all_refuted = false,
                    Kleene::False => {}
                }
            }
            if let Some(w) = witness {
                PairVerdict {
                    verdict: Verdict::Compatible,
                    witness: Some(kb.concept(w).clone()),
                }
            } else if all_refuted {
                PairVerdict::bare(Verdict::Conflict)
            } else {
                PairVerdict::bare(Verdict::Unknown)
            }
        }
    }
}

/// Does `c1` subsume into `c2`, i.e. is every concept admitted by `c1` also
/// admitted by `c2`?
///
/// Closed mode compares denotations directly and answers `Unknown` when either
/// side is ungrounded. Open mode confirms when membership in `c1` forces
/// membership in `c2` pointwise, and refutes on a definite counterexample.
pub fn subsumes(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    mode: EvalMode,
) -> Result<SubsumptionResult, VerdictError> {
    if c1.left_operand() != c2.left_operand() {
        return Err(VerdictError::OperandMismatch {
            left: c1.left_operand().to_owned(),
            right: c2.left_operand().to_owned(),
        });
    }
    match mode {
        EvalMode::Closed => {
            let d1 = denote(kb, c1);
            let d2 = denote(kb, c2);
            match (d1.as_set(), d2.as_set()) {
                (Some(s1), Some(s2)) => {
                    if s1.is_subset(s2) {
                        Ok(SubsumptionResult::Confirmed)
                    } else {
                        Ok(SubsumptionResult::Refuted)
                    }
                }
                _ => Ok(SubsumptionResult::Unknown),
            }
        }
        EvalMode::Open => {
            let resolve = |c: &Constraint| -> Option<Vec<usize>> {
                let mut g = Vec::new();
                for v in c.values() {
                    let i = kb.ground_idx(v)?;
                    if !g.contains(&i) {
                        g.push(i);
                    }
                }
                Some(g)
            };
            let (g1, g2) = match (resolve(c1), resolve(c2)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Ok(SubsumptionResult::Unknown),
            };
            let mut confirmed = true;
            for x in 0..kb.len() {
                let m1 = member3_grounded(kb, x, c1.operator(), &g1);
                let m2 = member3_grounded(kb, x, c2.operator(), &g2);
                if m1 == Kleene::True && m2 == Kleene::False {
                    return Ok(SubsumptionResult::Refuted);
                }
                if !(m2 == Kleene::True || m1 == Kleene::False) {
                    confirmed = false;
                }
            }
            if confirmed {
                Ok(SubsumptionResult::Confirmed)
            } else {
                Ok(SubsumptionResult::Unknown)
            }
        }
    }
}

/// Combines branch verdicts under a composition mode.
///
/// `and`: compatible iff all branches are, conflict iff any is.
/// `or`: compatible iff any branch is, conflict iff all are.
/// `xone`: compatible iff exactly one branch is compatible and every other
/// branch conflicts; conflict iff all branches conflict.
/// On an empty list `and` is vacuously compatible and `or`/`xone` conflict.
pub fn compose(mode: CompositionMode, verdicts: &[Verdict]) -> Verdict {
    let n = verdicts.len();
    let compatible = verdicts.iter().filter(|v| **v == Verdict::Compatible).count();
    let conflict = verdicts.iter().filter(|v| **v == Verdict::Conflict).count();
    match mode {
        CompositionMode::And => {
            if conflict > 0 {
                Verdict::Conflict
            } else if compatible == n {
                Verdict::Compatible
            } else {
                Verdict::Unknown
            }
        }
        CompositionMode::Or => {
            if compatible > 0 {
                Verdict::Compatible
            } else if conflict == n {
                Verdict::Conflict
            } else {
                Verdict::Unknown
            }
        }
        CompositionMode::Xone => {
            if compatible == 1 && conflict == n - 1 {
                Verdict::Compatible
            } else if conflict == n {
                Verdict::Conflict
            } else {
                Verdict::Unknown
            }
        }
    }
}

/// Knowledge bases indexed by the left operand they serve.
#[derive(Clone, Debug, Default)]
pub struct KbRegistry {
    by_operand: BTreeMap<String, KnowledgeBase>,
}

impl KbRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, operand: impl Into<String>, kb: KnowledgeBase) {
        self.by_operand.insert(operand.into(), kb);
    }

    pub fn get(&self, operand: &str) -> Option<&KnowledgeBase> {
        self.by_operand.get(operand)
    }

    pub fn operands(&self) -> impl Iterator<Item = &str> {
        self.by_operand.keys().map(|s| s.as_str())
    }

    fn require(&self, operand: &str) -> Result<&KnowledgeBase, VerdictError> {
        self.get(operand).ok_or_else(|| VerdictError::MissingKb {
            operand: operand.to_owned(),
        })
    }
}

/// Per-operand outcome inside a composite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperandOutcome {
    pub verdict: Verdict,
    pub witness: Option<ConceptId>,
}

/// Diagnostic result of a composite check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositeReport {
    pub verdict: Verdict,
    pub mode: EvalMode,
    /// Operands constrained on both sides, in lexicographic order.
    pub shared_operands: Vec<String>,
    /// Flat per-operand verdicts (all same-operand constraints of a side
    /// conjoined), independent of the tree structure.
    pub per_operand: BTreeMap<String, OperandOutcome>,
    /// Operands whose verdict forced the final result: the conflicting
    /// operands of a `CONFLICT`, or the undetermined ones of an `UNKNOWN`.
    pub blocking: Vec<String>,
}

fn leaves_by_operand<'a>(tree: &'a CompositeConstraint) -> BTreeMap<&'a str, Vec<&'a Constraint>> {
    let mut map: BTreeMap<&str, Vec<&Constraint>> = BTreeMap::new();
    for leaf in tree.leaves() {
        map.entry(leaf.left_operand()).or_default().push(leaf);
    }
    map
}

/// Folds one side's tree against the counterparty's per-operand constraints.
///
/// Leaves on unshared operands are vacuous and contribute nothing. Same-operand
/// leaves that are direct children of an `and` node are pre-combined
/// conjunctively before pairing; `or`/`xone` branches are paired independently
/// so that a disjunction can be resolved by a single branch.
fn fold_tree(
    registry: &KbRegistry,
    tree: &CompositeConstraint,
    shared: &BTreeSet<&str>,
    counterparty: &BTreeMap<&str, Vec<&Constraint>>,
    mode: EvalMode,
) -> Result<Option<Verdict>, VerdictError> {
    match tree {
        CompositeConstraint::Leaf(c) => {
            let operand = c.left_operand();
            if !shared.contains(operand) {
                return Ok(None);
            }
            let kb = registry.require(operand)?;
            Ok(Some(
                check_lists(kb, &[c], &counterparty[operand], mode).verdict,
            ))
        }
        CompositeConstraint::Node { mode: comp, children } => {
            let mut verdicts = Vec::new();
            if *comp == CompositionMode::And {
                let mut groups: BTreeMap<&str, Vec<&Constraint>> = BTreeMap::new();
                for child in children {
                    match child {
                        CompositeConstraint::Leaf(c) if shared.contains(c.left_operand()) => {
                            groups.entry(c.left_operand()).or_default().push(c);
                        }
                        CompositeConstraint::Leaf(_) => {}
                        node => {
                            if let Some(v) =
                                fold_tree(registry, node, shared, counterparty, mode)?
                            {
                                verdicts.push(v);
                            }
                        }
                    }
                }
                for (operand, group) in groups {
                    let kb = registry.require(operand)?;
                    verdicts.push(check_lists(kb, &group, &counterparty[operand], mode).verdict);
                }
            } else {
                for child in children {
                    if let Some(v) = fold_tree(registry, child, shared, counterparty, mode)? {
                        verdicts.push(v);
                    }
                }
            }
            if verdicts.is_empty() {
                Ok(None)
            } else {
                Ok(Some(compose(*comp, &verdicts)))
            }
        }
    }
}

/// Checks two composite rules for conflict.
///
/// The left tree drives the composition structure; the right side is the
/// counterparty whose same-operand constraints are conjoined per operand.
/// With no shared operand the rules cannot interact and the verdict is
/// `Unknown` with an empty diagnostic.
pub fn check_composite(
    registry: &KbRegistry,
    left: &CompositeConstraint,
    right: &CompositeConstraint,
    mode: EvalMode,
) -> Result<CompositeReport, VerdictError> {
    let left_ops = leaves_by_operand(left);
    let right_ops = leaves_by_operand(right);
    let shared: BTreeSet<&str> = left_ops
        .keys()
        .filter(|k| right_ops.contains_key(**k))
        .copied()
        .collect();

    if shared.is_empty() {
        return Ok(CompositeReport {
            verdict: Verdict::Unknown,
            mode,
            shared_operands: Vec::new(),
            per_operand: BTreeMap::new(),
            blocking: Vec::new(),
        });
    }

    let mut per_operand = BTreeMap::new();
    for &operand in &shared {
        let kb = registry.require(operand)?;
        let pv = check_lists(kb, &left_ops[operand], &right_ops[operand], mode);
        per_operand.insert(
            operand.to_owned(),
            OperandOutcome {
                verdict: pv.verdict,
                witness: pv.witness,
            },
        );
    }

    let verdict = fold_tree(registry, left, &shared, &right_ops, mode)?
        .expect("a shared operand guarantees at least one paired leaf");

    let blocking: Vec<String> = match verdict {
        Verdict::Conflict => per_operand
            .iter()
            .filter(|(_, o)| o.verdict == Verdict::Conflict)
            .map(|(k, _)| k.clone())
            .collect(),
        Verdict::Unknown => per_operand
            .iter()
            .filter(|(_, o)| o.verdict == Verdict::Unknown)
            .map(|(k, _)| k.clone())
            .collect(),
        Verdict::Compatible => Vec::new(),
    };

    Ok(CompositeReport {
        verdict,
        mode,
        shared_operands: shared.iter().map(|s| (*s).to_owned()).collect(),
        per_operand,
        blocking,
    })
}

/// Mutual exclusivity of two branches of a composite (typically `xone`
/// siblings): the `and` of their pair verdicts over shared operands.
/// Branches with no operand in common are vacuously compatible.
pub fn branch_exclusivity(
    registry: &KbRegistry,
    b1: &CompositeConstraint,
    b2: &CompositeConstraint,
    mode: EvalMode,
) -> Result<Verdict, VerdictError> {
    let ops1 = leaves_by_operand(b1);
    let ops2 = leaves_by_operand(b2);
    let mut verdicts = Vec::new();
    for (operand, group1) in &ops1 {
        if let Some(group2) = ops2.get(operand) {
            let kb = registry.require(operand)?;
            verdicts.push(check_lists(kb, group1, group2, mode).verdict);
        }
    }
    Ok(compose(CompositionMode::And, &verdicts))
}
