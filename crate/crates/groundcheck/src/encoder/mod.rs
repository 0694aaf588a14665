//! Export of constraint-pair problems to TPTP (FOF) and SMT-LIB 2.
//!
//! Both emissions share one formula construction: the KB's stored facts and
//! structural axioms, membership predicates `in_1`/`in_2` defined by
//! quantifier-free biconditionals, a domain-closure axiom, and a single
//! conjecture whose polarity selects the question being asked:
//!
//! - [`Polarity::Conflict`]: `¬∃X (in_1(X) ∧ in_2(X))` — proving it
//!   (`Theorem` / `unsat`) certifies the pair can never be jointly
//!   satisfied, under any completion of the KB.
//! - [`Polarity::Compatible`]: `∃X (in_1(X) ∧ in_2(X))` — proving it
//!   certifies a joint witness exists in every completion.
//!
//! A `CounterSatisfiable` / `sat` answer leaves the question open and maps
//! to an `UNKNOWN` verdict. Every emitted problem stays inside the
//! Bernays–Schönfinkel fragment (checked by [`EncodedProblem::epr_compliant`])
//! and is therefore decidable; the built-in ground oracle
//! ([`EncodedProblem::solve_ground`]) decides it by instantiation and is how
//! [`emit_problem`] computes the expected prover status ahead of time.

mod epr;
mod fol;
mod ground;
mod smt;
mod tptp;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constraint::{Constraint, Operator};
use crate::kb::KnowledgeBase;
use crate::verdict::Verdict;

use fol::{Formula, Term};

pub use epr::EprViolation;

/// Which question the conjecture asks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Conflict,
    Compatible,
}

impl Polarity {
    pub const BOTH: [Polarity; 2] = [Polarity::Conflict, Polarity::Compatible];

    pub fn name(self) -> &'static str {
        match self {
            Polarity::Conflict => "conflict",
            Polarity::Compatible => "compatible",
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Prover status a problem is expected to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpectedStatus {
    Theorem,
    CounterSatisfiable,
}

impl ExpectedStatus {
    /// SZS status word for ATP systems.
    pub fn szs(self) -> &'static str {
        match self {
            ExpectedStatus::Theorem => "Theorem",
            ExpectedStatus::CounterSatisfiable => "CounterSatisfiable",
        }
    }

    /// `check-sat` answer for SMT solvers (the script asserts the negated
    /// conjecture, so proving means `unsat`).
    pub fn smt(self) -> &'static str {
        match self {
            ExpectedStatus::Theorem => "unsat",
            ExpectedStatus::CounterSatisfiable => "sat",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EncodeError {
    #[error("constraints constrain different operands: '{left}' vs '{right}'")]
    OperandMismatch { left: String, right: String },
    #[error("value '{value}' does not ground in KB '{kb}'")]
    UngroundedValue { kb: String, value: String },
    #[error("unrecognized prover output: '{output}'")]
    UnrecognizedProverOutput { output: String },
}

/// A fully rendered problem plus enough structure to re-check it.
#[derive(Clone, Debug)]
pub struct EncodedProblem {
    pub problem_id: String,
    pub polarity: Polarity,
    /// Status computed ahead of time by the ground oracle.
    pub expected: ExpectedStatus,
    /// TPTP FOF rendering.
    pub tptp: String,
    /// SMT-LIB 2 rendering.
    pub smtlib: String,
    constants: Vec<String>,
    axioms: Vec<(String, Formula)>,
    conjecture: (String, Formula),
}

impl EncodedProblem {
    /// True when every axiom, and the negated conjecture, lies in the
    /// decidable ∃*∀* fragment without function symbols.
    pub fn epr_compliant(&self) -> bool {
        self.axioms
            .iter()
            .all(|(_, f)| epr::check_asserted(f).is_ok())
            && epr::check_refuted(&self.conjecture.1).is_ok()
    }

    /// Decides the problem by ground instantiation over its own constants.
    pub fn solve_ground(&self) -> ExpectedStatus {
        let refs: Vec<&Formula> = self.axioms.iter().map(|(_, f)| f).collect();
        let negated = Formula::not(self.conjecture.1.clone());
        if ground::satisfiable(&self.constants, &refs, &negated) {
            ExpectedStatus::CounterSatisfiable
        } else {
            ExpectedStatus::Theorem
        }
    }
}

/// Maps raw prover output (an SZS status line or a bare `sat`/`unsat`) to a
/// verdict under the given polarity.
pub fn interpret_result(polarity: Polarity, output: &str) -> Result<Verdict, EncodeError> {
    let proved = if let Some(rest) = output.split("SZS status ").nth(1) {
        let word = rest.split_whitespace().next().unwrap_or("");
        match word {
            "Theorem" | "Unsatisfiable" => true,
            "CounterSatisfiable" | "Satisfiable" => false,
            _ => {
                return Err(EncodeError::UnrecognizedProverOutput {
                    output: output.to_owned(),
                })
            }
        }
    } else {
        match output.trim() {
            "unsat" => true,
            "sat" => false,
            _ => {
                return Err(EncodeError::UnrecognizedProverOutput {
                    output: output.to_owned(),
                })
            }
        }
    };
    Ok(match (proved, polarity) {
        (true, Polarity::Conflict) => Verdict::Conflict,
        (true, Polarity::Compatible) => Verdict::Compatible,
        (false, _) => Verdict::Unknown,
    })
}

/// Emits a constraint pair as one TPTP and one SMT-LIB problem.
///
/// Both constraints must ground fully in the KB; see the suite for how
/// ungrounded (degraded) problems are represented.
pub fn emit_problem(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    polarity: Polarity,
    problem_id: &str,
) -> Result<EncodedProblem, EncodeError> {
    for c in [c1, c2] {
        for v in c.values() {
            if kb.ground(v).is_none() {
                return Err(EncodeError::UngroundedValue {
                    kb: kb.id().to_owned(),
                    value: v.clone(),
                });
            }
        }
    }
    emit_problem_lenient(kb, c1, c2, polarity, problem_id)
}

/// Like [`emit_problem`] but represents ungrounded values as fresh constants
/// with no facts: the prover then has no information about them, and both
/// polarities come out counter-satisfiable.
pub(crate) fn emit_problem_lenient(
    kb: &KnowledgeBase,
    c1: &Constraint,
    c2: &Constraint,
    polarity: Polarity,
    problem_id: &str,
) -> Result<EncodedProblem, EncodeError> {
    if c1.left_operand() != c2.left_operand() {
        return Err(EncodeError::OperandMismatch {
            left: c1.left_operand().to_owned(),
            right: c2.left_operand().to_owned(),
        });
    }
    let symbols = SymbolTable::build(kb, [c1, c2]);
    let axioms = build_axioms(kb, &symbols, c1, c2);
    let conjecture = build_conjecture(polarity, problem_id);

    let header = format!(
        "problem: {problem_id}\npolarity: {polarity}\nkb: {}",
        kb.id()
    );
    let tptp = tptp::problem(&header, &axioms, &conjecture);
    let predicates: &[(&str, usize)] = &[("leq", 2), ("disj", 2), ("in_1", 1), ("in_2", 1)];
    let smtlib = smt::problem(&header, &symbols.all, predicates, &axioms, &conjecture);

    let mut problem = EncodedProblem {
        problem_id: problem_id.to_owned(),
        polarity,
        expected: ExpectedStatus::CounterSatisfiable,
        tptp,
        smtlib,
        constants: symbols.all.clone(),
        axioms,
        conjecture,
    };
    problem.expected = problem.solve_ground();
    Ok(problem)
}

/// Deterministic concept-id → symbol mapping.
struct SymbolTable {
    /// Constant per KB concept, in KB concept order.
    concept_consts: Vec<String>,
    /// Fresh constant per ungrounded right-operand value.
    fresh: BTreeMap<String, String>,
    /// All constants in emission order (concepts first).
    all: Vec<String>,
}

impl SymbolTable {
    fn build(kb: &KnowledgeBase, constraints: [&Constraint; 2]) -> SymbolTable {
        let mut used: BTreeSet<String> = BTreeSet::new();
        let mut concept_consts = Vec::with_capacity(kb.len());
        for c in kb.concepts() {
            concept_consts.push(unique(&mut used, "c_", c.as_str()));
        }
        let mut ungrounded: BTreeSet<&str> = BTreeSet::new();
        for c in constraints {
            for v in c.values() {
                if kb.ground(v).is_none() {
                    ungrounded.insert(v);
                }
            }
        }
        let mut fresh = BTreeMap::new();
        for v in ungrounded {
            fresh.insert(v.to_owned(), unique(&mut used, "u_", v));
        }
        let mut all = concept_consts.clone();
        all.extend(fresh.values().cloned());
        SymbolTable {
            concept_consts,
            fresh,
            all,
        }
    }

    /// Constant for a right-operand value, grounded or fresh.
    fn value_const(&self, kb: &KnowledgeBase, value: &str) -> String {
        match kb.ground(value) {
            Some(g) => {
                let idx = kb
                    .concepts()
                    .iter()
                    .position(|c| c == g)
                    .expect("gamma target is a KB concept");
                self.concept_consts[idx].clone()
            }
            None => self.fresh[value].clone(),
        }
    }

    /// Axiom-name token for the concept at a KB index.
    fn token(&self, idx: usize) -> &str {
        &self.concept_consts[idx][2..]
    }
}

fn unique(used: &mut BTreeSet<String>, prefix: &str, raw: &str) -> String {
    let mut base = String::with_capacity(prefix.len() + raw.len());
    base.push_str(prefix);
    for ch in raw.chars() {
        if ch.is_ascii_alphanumeric() {
            base.push(ch.to_ascii_lowercase());
        } else {
            base.push('_');
        }
    }
    let mut candidate = base.clone();
    let mut n = 1usize;
    while !used.insert(candidate.clone()) {
        n += 1;
        candidate = format!("{base}_{n}");
    }
    candidate
}

fn var(name: &str) -> Term {
    Term::var(name)
}

fn leq_of(a: Term, b: Term) -> Formula {
    Formula::pred("leq", vec![a, b])
}

fn disj_of(a: Term, b: Term) -> Formula {
    Formula::pred("disj", vec![a, b])
}

fn build_axioms(
    kb: &KnowledgeBase,
    symbols: &SymbolTable,
    c1: &Constraint,
    c2: &Constraint,
) -> Vec<(String, Formula)> {
    let mut out: Vec<(String, Formula)> = Vec::new();
    let cn = |i: usize| Term::constant(symbols.concept_consts[i].clone());

    // Structural schemas for the stored relations.
    out.push((
        "ax_leq_refl".into(),
        Formula::forall(&["X"], leq_of(var("X"), var("X"))),
    ));
    out.push((
        "ax_leq_trans".into(),
        Formula::forall(
            &["X", "Y", "Z"],
            Formula::Or(vec![
                Formula::not(leq_of(var("X"), var("Y"))),
                Formula::not(leq_of(var("Y"), var("Z"))),
                leq_of(var("X"), var("Z")),
            ]),
        ),
    ));
    out.push((
        "ax_disj_sym".into(),
        Formula::forall(
            &["X", "Y"],
            Formula::Or(vec![
                Formula::not(disj_of(var("X"), var("Y"))),
                disj_of(var("Y"), var("X")),
            ]),
        ),
    ));
    out.push((
        "ax_disj_irrefl".into(),
        Formula::forall(&["X"], Formula::not(disj_of(var("X"), var("X")))),
    ));
    out.push((
        "ax_disj_down".into(),
        Formula::forall(
            &["X", "Y", "Z"],
            Formula::Or(vec![
                Formula::not(disj_of(var("X"), var("Y"))),
                Formula::not(leq_of(var("Z"), var("X"))),
                disj_of(var("Z"), var("Y")),
            ]),
        ),
    ));

    let n = kb.len();
    // Unique names, only among KB concepts — fresh constants stay free.
    if kb.una() {
        for i in 0..n {
            for j in (i + 1)..n {
                out.push((
                    format!("ax_una_{}_{}", symbols.token(i), symbols.token(j)),
                    Formula::not(Formula::Eq(cn(i), cn(j))),
                ));
            }
        }
    }
    // Stored order closure (reflexive pairs are covered by the schema).
    let concepts = kb.concepts();
    for i in 0..n {
        for j in 0..n {
            if i != j && kb.leq(&concepts[i], &concepts[j]).expect("own concept") {
                out.push((
                    format!("ax_leq_{}_{}", symbols.token(i), symbols.token(j)),
                    leq_of(cn(i), cn(j)),
                ));
            }
        }
    }
    // Negative order facts.
    for i in 0..n {
        for j in 0..n {
            if kb.not_leq(&concepts[i], &concepts[j]).expect("own concept") {
                out.push((
                    format!("ax_nleq_{}_{}", symbols.token(i), symbols.token(j)),
                    Formula::not(leq_of(cn(i), cn(j))),
                ));
            }
        }
    }
    // Stored disjointness (one direction; symmetry is an axiom).
    for i in 0..n {
        for j in (i + 1)..n {
            if kb.disjoint(&concepts[i], &concepts[j]).expect("own concept") {
                out.push((
                    format!("ax_disj_{}_{}", symbols.token(i), symbols.token(j)),
                    disj_of(cn(i), cn(j)),
                ));
            }
        }
    }

    // Membership definitions.
    for (idx, c) in [(1usize, c1), (2, c2)] {
        let pred = Formula::pred(format!("in_{idx}"), vec![var("X")]);
        out.push((
            format!("ax_def_in_{idx}"),
            Formula::forall(&["X"], Formula::iff(pred, membership_body(kb, symbols, c))),
        ));
    }

    // Domain closure over every declared constant.
    let closure = Formula::Or(
        symbols
            .all
            .iter()
            .map(|c| Formula::Eq(var("X"), Term::constant(c.clone())))
            .collect(),
    );
    out.push(("ax_domain".into(), Formula::forall(&["X"], closure)));
    out
}

/// Quantifier-free membership condition for `X`.
fn membership_body(kb: &KnowledgeBase, symbols: &SymbolTable, c: &Constraint) -> Formula {
    let t = |v: &str| Term::constant(symbols.value_const(kb, v));
    match c.operator() {
        Operator::Eq => Formula::Eq(var("X"), t(c.value())),
        Operator::Neq => Formula::not(Formula::Eq(var("X"), t(c.value()))),
        Operator::IsA | Operator::IsPartOf => leq_of(var("X"), t(c.value())),
        Operator::HasPart => leq_of(t(c.value()), var("X")),
        Operator::IsAnyOf => {
            Formula::Or(c.values().iter().map(|v| leq_of(var("X"), t(v))).collect())
        }
        Operator::IsAllOf => {
            Formula::And(c.values().iter().map(|v| leq_of(var("X"), t(v))).collect())
        }
        Operator::IsNoneOf => Formula::And(
            c.values()
                .iter()
                .map(|v| Formula::not(leq_of(var("X"), t(v))))
                .collect(),
        ),
    }
}

fn build_conjecture(polarity: Polarity, problem_id: &str) -> (String, Formula) {
    let mut used = BTreeSet::new();
    let name = unique(&mut used, "cj_", problem_id);
    let joint = Formula::exists(
        &["X"],
        Formula::And(vec![
            Formula::pred("in_1", vec![var("X")]),
            Formula::pred("in_2", vec![var("X")]),
        ]),
    );
    let f = match polarity {
        Polarity::Conflict => Formula::not(joint),
        Polarity::Compatible => joint,
    };
    (name, f)
}
