//! Finite knowledge bases.
//!
//! A [`KnowledgeBase`] is a finite concept space `C` together with
//!
//! - a reflexive-transitive order `leq` (subclass for taxonomic domains,
//!   part-of for mereological domains, identity for nominal domains),
//! - a symmetric, irreflexive, downward-closed disjointness relation,
//! - optional negative order facts `not_leq` (asserted non-subsumption),
//! - a partial grounding map `gamma` from policy value strings to concepts,
//! - a unique-name flag `una` (distinct identifiers denote distinct concepts).
//!
//! Knowledge bases are built from a declarative [`KbSpec`] via
//! [`KnowledgeBase::from_spec`], which computes the closures mechanically and
//! rejects specs whose closure is contradictory (a pair that ends up both
//! ordered and disjoint, or both ordered and `not_leq`). Hand-assembled
//! relations can be checked with [`validate_kb`], which reports every violated
//! invariant instead of stopping at the first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

/// Identifier of a concept inside one knowledge base.
///
/// Ordering is plain lexicographic byte order; witnesses reported by the
/// verdict layer are the least concept under this order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConceptId(String);

impl ConceptId {
    pub fn new(id: impl Into<String>) -> Self {
        ConceptId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ConceptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ConceptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for ConceptId {
    fn from(s: &str) -> Self {
        ConceptId(s.to_owned())
    }
}

impl From<String> for ConceptId {
    fn from(s: String) -> Self {
        ConceptId(s)
    }
}

/// Interpretation of the order relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    /// `leq` is subclass-of (e.g. purpose or language taxonomies).
    Taxonomic,
    /// `leq` is part-of (e.g. spatial containment).
    Mereological,
    /// Flat identifier space: `leq` is identity and distinct concepts are
    /// pairwise disjoint.
    Nominal,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Domain::Taxonomic => "taxonomic",
            Domain::Mereological => "mereological",
            Domain::Nominal => "nominal",
        };
        f.write_str(s)
    }
}

fn default_una() -> bool {
    true
}

/// Declarative form of a knowledge base, mirroring the on-disk JSON format.
///
/// `leq`, `disjoint` and `not_leq` list direct facts; closures are computed by
/// [`KnowledgeBase::from_spec`]. Unknown JSON fields are rejected so that a
/// typo like `"disjoints"` cannot silently weaken a KB.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KbSpec {
    pub id: String,
    pub domain: Domain,
    #[serde(default = "default_una")]
    pub una: bool,
    pub concepts: Vec<ConceptId>,
    #[serde(default)]
    pub leq: Vec<(ConceptId, ConceptId)>,
    #[serde(default)]
    pub disjoint: Vec<(ConceptId, ConceptId)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub not_leq: Vec<(ConceptId, ConceptId)>,
    #[serde(default)]
    pub gamma: BTreeMap<String, ConceptId>,
}

impl KbSpec {
    /// Convenience constructor for programmatic specs (fixtures, tests).
    pub fn new(id: impl Into<String>, domain: Domain) -> Self {
        KbSpec {
            id: id.into(),
            domain,
            una: true,
            concepts: Vec::new(),
            leq: Vec::new(),
            disjoint: Vec::new(),
            not_leq: Vec::new(),
            gamma: BTreeMap::new(),
        }
    }
}

/// Square boolean relation over concept indices.
#[derive(Clone, PartialEq, Eq)]
struct RelMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl RelMatrix {
    fn new(n: usize) -> Self {
        RelMatrix {
            n,
            bits: vec![false; n * n],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.n + j] = v;
    }
}

impl fmt::Debug for RelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j))
            .collect();
        write!(f, "{pairs:?}")
    }
}

/// A validated, closure-complete knowledge base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeBase {
    id: String,
    domain: Domain,
    una: bool,
    concepts: Vec<ConceptId>,
    index: HashMap<String, usize>,
    /// Reflexive-transitive closure of the declared order facts.
    leq: RelMatrix,
    /// Symmetric and downward-closed w.r.t. `leq`.
    disjoint: RelMatrix,
    /// Asserted negative order facts, stored as declared (directional).
    not_leq: RelMatrix,
    /// Value string -> concept index.
    gamma: BTreeMap<String, usize>,
}

/// Errors raised while building or querying a knowledge base.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum KbError {
    #[error("concept set of KB '{kb}' is empty")]
    EmptyConceptSet { kb: String },
    #[error("unknown concept '{id}' referenced in {context}")]
    UnknownConcept { id: String, context: String },
    #[error("domain violation in KB '{kb}': {detail}")]
    DomainViolation { kb: String, detail: String },
    #[error("closure of KB '{kb}' is contradictory: {}", format_violations(.violations))]
    ClosureContradiction {
        kb: String,
        violations: Vec<KbViolation>,
    },
}

fn format_violations(vs: &[KbViolation]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    parts.join("; ")
}

/// A single violated KB invariant, as reported by [`validate_kb`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KbViolation {
    NotReflexive { x: ConceptId },
    NotTransitive { x: ConceptId, y: ConceptId, z: ConceptId },
    DisjointNotSymmetric { x: ConceptId, y: ConceptId },
    /// `disjoint(x, x)` — forbidden for every concept.
    Irreflexivity { x: ConceptId },
    /// `disjoint(x, y)` holds but some `xp <= x`, `yp <= y` pair is not disjoint.
    DisjointNotDownwardClosed {
        x: ConceptId,
        y: ConceptId,
        xp: ConceptId,
        yp: ConceptId,
    },
    /// `x <= y` and `disjoint(x, y)` simultaneously.
    LemmaViolation { x: ConceptId, y: ConceptId },
    /// `x <= y` and `not_leq(x, y)` simultaneously.
    NotLeqContradiction { x: ConceptId, y: ConceptId },
    /// Non-identity order fact in a nominal KB.
    NominalOrderViolation { x: ConceptId, y: ConceptId },
    /// Distinct nominal concepts that are not disjoint.
    NominalDisjointMissing { x: ConceptId, y: ConceptId },
}

impl fmt::Display for KbViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KbViolation::NotReflexive { x } => write!(f, "leq({x}, {x}) missing"),
            KbViolation::NotTransitive { x, y, z } => {
                write!(f, "leq({x}, {y}) and leq({y}, {z}) but leq({x}, {z}) missing")
            }
            KbViolation::DisjointNotSymmetric { x, y } => {
                write!(f, "disjoint({x}, {y}) without disjoint({y}, {x})")
            }
            KbViolation::Irreflexivity { x } => write!(f, "disjoint({x}, {x}) is forbidden"),
            KbViolation::DisjointNotDownwardClosed { x, y, xp, yp } => write!(
                f,
                "disjoint({x}, {y}) with {xp} <= {x} and {yp} <= {y} but disjoint({xp}, {yp}) missing"
            ),
            KbViolation::LemmaViolation { x, y } => {
                write!(f, "{x} <= {y} contradicts disjoint({x}, {y})")
            }
            KbViolation::NotLeqContradiction { x, y } => {
                write!(f, "{x} <= {y} contradicts not_leq({x}, {y})")
            }
            KbViolation::NominalOrderViolation { x, y } => {
                write!(f, "nominal KB declares order fact {x} <= {y}")
            }
            KbViolation::NominalDisjointMissing { x, y } => {
                write!(f, "nominal concepts {x} and {y} must be disjoint")
            }
        }
    }
}

impl KnowledgeBase {
    /// Builds a KB from a declarative spec: resolves identifiers, computes the
    /// reflexive-transitive closure of `leq` and the symmetric + downward
    /// closure of `disjoint`, and validates every invariant.
    ///
    /// Duplicate concepts, edges and pairs are deduplicated silently. A spec
    /// whose closure violates order-disjointness consistency (some pair both
    /// ordered and disjoint, or both ordered and `not_leq`) is rejected with
    /// [`KbError::ClosureContradiction`].
    pub fn from_spec(spec: &KbSpec) -> Result<Self, KbError> {
        let kb = Self::close_spec(spec)?;
        let violations = validate_kb(&kb);
        if violations.is_empty() {
            Ok(kb)
        } else {
            Err(KbError::ClosureContradiction {
                kb: spec.id.clone(),
                violations,
            })
        }
    }

    /// Resolves and closes a spec without the final invariant check.
    ///
    /// This is the entry point for validation tooling that wants the full
    /// violation list from [`validate_kb`] rather than an error.
    pub fn close_spec(spec: &KbSpec) -> Result<Self, KbError> {
        if spec.concepts.is_empty() {
            return Err(KbError::EmptyConceptSet {
                kb: spec.id.clone(),
            });
        }

        let mut concepts: Vec<ConceptId> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        for c in &spec.concepts {
            if !index.contains_key(c.as_str()) {
                index.insert(c.as_str().to_owned(), concepts.len());
                concepts.push(c.clone());
            }
        }
        let n = concepts.len();

        let resolve = |c: &ConceptId, context: &str| -> Result<usize, KbError> {
            index.get(c.as_str()).copied().ok_or(KbError::UnknownConcept {
                id: c.as_str().to_owned(),
                context: context.to_owned(),
            })
        };

        if spec.domain == Domain::Nominal && !spec.leq.is_empty() {
            return Err(KbError::DomainViolation {
                kb: spec.id.clone(),
                detail: "nominal KBs admit no order facts (leq must be empty)".to_owned(),
            });
        }

        // Reflexive-transitive closure of the declared order edges.
        let mut leq = RelMatrix::new(n);
        for i in 0..n {
            leq.set(i, i, true);
        }
        for (x, y) in &spec.leq {
            let (i, j) = (resolve(x, "leq")?, resolve(y, "leq")?);
            leq.set(i, j, true);
        }
        for k in 0..n {
            for i in 0..n {
                if leq.get(i, k) {
                    for j in 0..n {
                        if leq.get(k, j) {
                            leq.set(i, j, true);
                        }
                    }
                }
            }
        }

        // Symmetric closure of declared disjointness, then downward closure
        // along the (already transitive) order.
        let mut base = Vec::new();
        for (x, y) in &spec.disjoint {
            let (i, j) = (resolve(x, "disjoint")?, resolve(y, "disjoint")?);
            base.push((i, j));
            base.push((j, i));
        }
        if spec.domain == Domain::Nominal {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        base.push((i, j));
                    }
                }
            }
        }
        let mut disjoint = RelMatrix::new(n);
        for (i, j) in base {
            for a in 0..n {
                if leq.get(a, i) {
                    for b in 0..n {
                        if leq.get(b, j) {
                            disjoint.set(a, b, true);
                        }
                    }
                }
            }
        }

        let mut not_leq = RelMatrix::new(n);
        for (x, y) in &spec.not_leq {
            let (i, j) = (resolve(x, "not_leq")?, resolve(y, "not_leq")?);
            not_leq.set(i, j, true);
        }

        let mut gamma = BTreeMap::new();
        for (value, concept) in &spec.gamma {
            let i = resolve(concept, "gamma")?;
            gamma.insert(value.clone(), i);
        }

        Ok(KnowledgeBase {
            id: spec.id.clone(),
            domain: spec.domain,
            una: spec.una,
            concepts,
            index,
            leq,
            disjoint,
            not_leq,
            gamma,
        })
    }

    /// Assembles a KB from literal relations, without closure or validation.
    ///
    /// Intended for validation tooling and tests that need to observe invalid
    /// states; everything else should go through [`KnowledgeBase::from_spec`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_raw(
        id: impl Into<String>,
        domain: Domain,
        una: bool,
        concepts: Vec<ConceptId>,
        leq: &[(ConceptId, ConceptId)],
        disjoint: &[(ConceptId, ConceptId)],
        not_leq: &[(ConceptId, ConceptId)],
        gamma: BTreeMap<String, ConceptId>,
    ) -> Result<Self, KbError> {
        let id = id.into();
        if concepts.is_empty() {
            return Err(KbError::EmptyConceptSet { kb: id });
        }
        let mut uniq: Vec<ConceptId> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        for c in concepts {
            if !index.contains_key(c.as_str()) {
                index.insert(c.as_str().to_owned(), uniq.len());
                uniq.push(c);
            }
        }
        let n = uniq.len();
        let resolve = |c: &ConceptId, context: &str| -> Result<usize, KbError> {
            index.get(c.as_str()).copied().ok_or(KbError::UnknownConcept {
                id: c.as_str().to_owned(),
                context: context.to_owned(),
            })
        };
        let fill = |pairs: &[(ConceptId, ConceptId)], context: &str| -> Result<RelMatrix, KbError> {
            let mut m = RelMatrix::new(n);
            for (x, y) in pairs {
                m.set(resolve(x, context)?, resolve(y, context)?, true);
            }
            Ok(m)
        };
        let leq = fill(leq, "leq")?;
        let disjoint = fill(disjoint, "disjoint")?;
        let not_leq = fill(not_leq, "not_leq")?;
        let mut g = BTreeMap::new();
        for (value, concept) in gamma {
            g.insert(value, resolve(&concept, "gamma")?);
        }
        Ok(KnowledgeBase {
            id,
            domain,
            una,
            concepts: uniq,
            index,
            leq,
            disjoint,
            not_leq,
            gamma: g,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn una(&self) -> bool {
        self.una
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[ConceptId] {
        &self.concepts
    }

    pub fn contains(&self, c: &ConceptId) -> bool {
        self.index.contains_key(c.as_str())
    }

    pub(crate) fn index_of(&self, c: &ConceptId) -> Option<usize> {
        self.index.get(c.as_str()).copied()
    }

    pub(crate) fn concept(&self, i: usize) -> &ConceptId {
        &self.concepts[i]
    }

    fn resolve_pair(&self, x: &ConceptId, y: &ConceptId) -> Result<(usize, usize), KbError> {
        let i = self.index_of(x).ok_or_else(|| KbError::UnknownConcept {
            id: x.as_str().to_owned(),
            context: "query".to_owned(),
        })?;
        let j = self.index_of(y).ok_or_else(|| KbError::UnknownConcept {
            id: y.as_str().to_owned(),
            context: "query".to_owned(),
        })?;
        Ok((i, j))
    }

    /// `x <= y` in the stored closure.
    pub fn leq(&self, x: &ConceptId, y: &ConceptId) -> Result<bool, KbError> {
        let (i, j) = self.resolve_pair(x, y)?;
        Ok(self.leq.get(i, j))
    }

    pub fn disjoint(&self, x: &ConceptId, y: &ConceptId) -> Result<bool, KbError> {
        let (i, j) = self.resolve_pair(x, y)?;
        Ok(self.disjoint.get(i, j))
    }

    pub fn not_leq(&self, x: &ConceptId, y: &ConceptId) -> Result<bool, KbError> {
        let (i, j) = self.resolve_pair(x, y)?;
        Ok(self.not_leq.get(i, j))
    }

    #[inline]
    pub(crate) fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub(crate) fn disjoint_idx(&self, i: usize, j: usize) -> bool {
        self.disjoint.get(i, j)
    }

    #[inline]
    pub(crate) fn not_leq_idx(&self, i: usize, j: usize) -> bool {
        self.not_leq.get(i, j)
    }

    /// Grounds a policy value string, returning `None` when gamma is undefined.
    pub fn ground(&self, value: &str) -> Option<&ConceptId> {
        self.gamma.get(value).map(|&i| &self.concepts[i])
    }

    pub(crate) fn ground_idx(&self, value: &str) -> Option<usize> {
        self.gamma.get(value).copied()
    }

    /// Iterates over `(value, concept)` grounding entries in value order.
    pub fn gamma_entries(&self) -> impl Iterator<Item = (&str, &ConceptId)> {
        self.gamma
            .iter()
            .map(|(v, &i)| (v.as_str(), &self.concepts[i]))
    }

    /// All `i` with `i <= g`.
    pub(crate) fn down_set_idx(&self, g: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.leq.get(i, g)).collect()
    }

    /// All `i` with `g <= i`.
    pub(crate) fn up_set_idx(&self, g: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.leq.get(g, i)).collect()
    }

    /// Serializes the KB back to a declarative spec. The emitted `leq` and
    /// `disjoint` lists are the stored closures, so
    /// `from_spec(&kb.to_spec())` rebuilds a structurally identical KB.
    pub fn to_spec(&self) -> KbSpec {
        let n = self.len();
        let mut leq = Vec::new();
        let mut disjoint = Vec::new();
        let mut not_leq = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq.get(i, j) {
                    leq.push((self.concepts[i].clone(), self.concepts[j].clone()));
                }
                if i < j && self.disjoint.get(i, j) {
                    disjoint.push((self.concepts[i].clone(), self.concepts[j].clone()));
                }
                if self.not_leq.get(i, j) {
                    not_leq.push((self.concepts[i].clone(), self.concepts[j].clone()));
                }
            }
        }
        let leq = if self.domain == Domain::Nominal { Vec::new() } else { leq };
        KbSpec {
            id: self.id.clone(),
            domain: self.domain,
            una: self.una,
            concepts: self.concepts.clone(),
            leq,
            disjoint,
            not_leq,
            gamma: self
                .gamma
                .iter()
                .map(|(v, &i)| (v.clone(), self.concepts[i].clone()))
                .collect(),
        }
    }
}

/// Checks every structural invariant of a knowledge base and reports all
/// violations found. A KB produced by [`KnowledgeBase::from_spec`] always
/// yields an empty report; [`KnowledgeBase::from_raw`] can produce anything.
pub fn validate_kb(kb: &KnowledgeBase) -> Vec<KbViolation> {
    let n = kb.len();
    let c = |i: usize| kb.concepts[i].clone();
    let mut out = Vec::new();

    for i in 0..n {
        if !kb.leq.get(i, i) {
            out.push(KbViolation::NotReflexive { x: c(i) });
        }
        if kb.disjoint.get(i, i) {
            out.push(KbViolation::Irreflexivity { x: c(i) });
        }
    }

    for i in 0..n {
        for k in 0..n {
            if !kb.leq.get(i, k) {
                continue;
            }
            for j in 0..n {
                if kb.leq.get(k, j) && !kb.leq.get(i, j) {
                    out.push(KbViolation::NotTransitive {
                        x: c(i),
                        y: c(k),
                        z: c(j),
                    });
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            if kb.disjoint.get(i, j) && !kb.disjoint.get(j, i) {
                out.push(KbViolation::DisjointNotSymmetric { x: c(i), y: c(j) });
            }
            if kb.leq.get(i, j) && kb.disjoint.get(i, j) {
                out.push(KbViolation::LemmaViolation { x: c(i), y: c(j) });
            }
            if kb.leq.get(i, j) && kb.not_leq.get(i, j) {
                out.push(KbViolation::NotLeqContradiction { x: c(i), y: c(j) });
            }
        }
    }

    // Downward closure: disjoint(x, y) must propagate to everything below.
    for x in 0..n {
        for y in 0..n {
            if !kb.disjoint.get(x, y) {
                continue;
            }
            for xp in 0..n {
                if !kb.leq.get(xp, x) {
                    continue;
                }
                for yp in 0..n {
                    if kb.leq.get(yp, y) && !kb.disjoint.get(xp, yp) {
                        out.push(KbViolation::DisjointNotDownwardClosed {
                            x: c(x),
                            y: c(y),
                            xp: c(xp),
                            yp: c(yp),
                        });
                    }
                }
            }
        }
    }

    if kb.domain == Domain::Nominal {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if kb.leq.get(i, j) {
                    out.push(KbViolation::NominalOrderViolation { x: c(i), y: c(j) });
                }
                if !kb.disjoint.get(i, j) {
                    out.push(KbViolation::NominalDisjointMissing { x: c(i), y: c(j) });
                }
            }
        }
    }

    out
}
