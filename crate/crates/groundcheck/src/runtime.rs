//! Runtime contexts and the bridge from static verdicts to request-time
//! decisions.
//!
//! An [`ExecutionContext`] assigns concrete values to operands, as an
//! incoming request would. [`satisfies`] decides whether such a context meets
//! a constraint: the operand must be assigned, the assigned value must ground
//! in the KB, and the grounded concept must belong to the constraint's
//! denotation. In open mode the membership test is strengthened to "provably
//! a member" — an `Unknown` membership denies the request (default-deny).
//!
//! [`exhaustive_soundness_check`] connects the two layers: it enumerates one
//! context per concept in the KB and verifies that a static `CONFLICT` is
//! never contradicted by a context satisfying both constraints at runtime.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constraint::Constraint;
use crate::denotation::{denote, member3, Denotation, EvalMode};
use crate::kb::{ConceptId, KnowledgeBase};
use crate::kleene::Kleene;
use crate::verdict::{check_pair, KbRegistry, Verdict, VerdictError};

/// A runtime assignment of operands to values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExecutionContext {
    assignments: BTreeMap<String, String>,
}

impl ExecutionContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(mut self, operand: impl Into<String>, value: impl Into<String>) -> Self {
        self.assignments.insert(operand.into(), value.into());
        self
    }

    pub fn get(&self, operand: &str) -> Option<&str> {
        self.assignments.get(operand).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.assignments
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

/// Decides whether a context satisfies a constraint, resolving the KB for
/// the constraint's operand from the registry. An operand with no KB cannot
/// be evaluated and is denied.
pub fn satisfies(
    kbs: &KbRegistry,
    ctx: &ExecutionContext,
    c: &Constraint,
    mode: EvalMode,
) -> bool {
    match kbs.get(c.left_operand()) {
        Some(kb) => satisfies_in(kb, ctx, c, mode),
        None => false,
    }
}

/// Decides whether a context satisfies a constraint against a specific KB.
///
/// Requires the operand to be assigned and the assigned value to ground in
/// the KB; an ungrounded *constraint* (denotation unknown) is never a reason
/// to deny, since it cannot exclude anything. In open mode membership must be
/// provable: `Unknown` denies.
pub fn satisfies_in(
    kb: &KnowledgeBase,
    ctx: &ExecutionContext,
    c: &Constraint,
    mode: EvalMode,
) -> bool {
    let value = match ctx.get(c.left_operand()) {
        Some(v) => v,
        None => return false,
    };
    let x = match kb.ground(value) {
        Some(x) => x.clone(),
        None => return false,
    };
    match denote(kb, c) {
        Denotation::Top => true,
        Denotation::Concrete(den) => match mode {
            EvalMode::Closed => den.contains(&x),
            EvalMode::Open => member3(kb, &x, c).map(Kleene::is_true).unwrap_or(false),
        },
    }
}

/// Outcome of [`exhaustive_soundness_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    /// Static verdict for the pair.
    pub verdict: Verdict,
    /// Number of candidate contexts enumerated (one per concept).
    pub checked: usize,
    /// Contexts that satisfied both constraints at runtime.
    pub satisfying_both: Vec<ExecutionContext>,
    /// `false` only if a static `CONFLICT` was contradicted at runtime.
    pub sound: bool,
}

/// Enumerates one candidate context per concept and cross-checks the static
/// verdict for `c1` vs `c2`.
///
/// Concepts without a gamma preimage get a synthetic value; extending gamma
/// never weakens a verdict, so a conflict confirmed here is conclusive for
/// every context expressible over the original KB.
pub fn exhaustive_soundness_check(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    mode: EvalMode,
) -> Result<SoundnessReport, VerdictError> {
    let verdict = check_pair(kb, c1, c2, mode)?.verdict;

    // Lexicographically least gamma preimage per concept, synthesizing values
    // for concepts no existing value grounds to.
    let mut preimage: BTreeMap<&ConceptId, String> = BTreeMap::new();
    for (v, g) in kb.gamma_entries() {
        preimage.entry(g).or_insert_with(|| v.to_owned());
    }
    let mut augmented_spec = kb.to_spec();
    for x in kb.concepts() {
        if !preimage.contains_key(x) {
            let v = format!("urn:ctx:{x}");
            augmented_spec.gamma.insert(v.clone(), x.clone());
            preimage.insert(x, v);
        }
    }
    let augmented =
        KnowledgeBase::from_spec(&augmented_spec).expect("gamma extension preserves validity");

    let operand = c1.left_operand();
    let mut satisfying_both = Vec::new();
    let mut checked = 0;
    for x in kb.concepts() {
        let ctx = ExecutionContext::new().assign(operand, preimage[x].clone());
        checked += 1;
        if satisfies_in(&augmented, &ctx, c1, mode) && satisfies_in(&augmented, &ctx, c2, mode) {
            satisfying_both.push(ctx);
        }
    }
    let sound = verdict != Verdict::Conflict || satisfying_both.is_empty();
    Ok(SoundnessReport {
        verdict,
        checked,
        satisfying_both,
        sound,
    })
}
