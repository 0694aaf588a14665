//! Built-in benchmark suite: fixture knowledge bases, 154 problems with
//! expected verdicts in both evaluation modes, and a runner that can emit
//! every problem as TPTP/SMT-LIB and cross-check the engine against the
//! ground-instantiation oracle.
//!
//! The suite serves three roles:
//!
//! - **regression corpus** — every problem stores its expected closed- and
//!   open-mode verdicts, so one run reports any drift;
//! - **encoder validation** — with emission enabled each problem (or each
//!   branch slice of a composite) is rendered in both polarities, decided by
//!   the ground oracle, and the oracle-implied verdict is compared with the
//!   engine's open-mode verdict on the same knowledge base;
//! - **degradation tracking** — problems flagged [`BenchmarkProblem::degradation`]
//!   contain values that do not ground (or do not survive an alignment) and
//!   must come out counter-satisfiable in both polarities.
//!
//! Problem ids use an `ODRLxxx` numbering grouped into blocks; see
//! [`problems`] for the block layout.

mod fixtures;
mod problems;
mod runner;

pub use runner::{
    run_suite, write_suite, EncodingOutcome, ProblemResult, RunOptions, RunReport,
    RuntimeSummary, SuiteError,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alignment::Alignment;
use crate::constraint::{CompositeConstraint, Constraint};
use crate::denotation::EvalMode;
use crate::kb::KnowledgeBase;
use crate::verdict::{KbRegistry, Verdict};

/// Problem family, mirroring the suite's block structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// Single constraint pairs per operator, including negative-fact and
    /// unique-name variations.
    Operators,
    /// Chains, diamonds, singletons and near-miss lattices.
    Structural,
    /// Composite rules under and/or/xone.
    Composition,
    /// Cross-KB checks through concept alignments.
    Alignment,
    /// Pairs whose static verdict is validated against exhaustive runtime
    /// context enumeration.
    Runtime,
}

/// One aligned pair inside a multi-domain alignment problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignedItem {
    /// Target KB id.
    pub target: String,
    pub alignment: Alignment,
    pub c1: Constraint,
    pub c2: Constraint,
}

/// What a problem actually checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProblemBody {
    /// Two constraints on one KB.
    Pair { c1: Constraint, c2: Constraint },
    /// Two composite rules over the operand registry.
    Composite {
        left: CompositeConstraint,
        right: CompositeConstraint,
    },
    /// A pair evaluated on the source KB and re-evaluated across an
    /// alignment into the target KB.
    Aligned {
        /// Target KB id (the source KB is the problem's `kb`).
        target: String,
        alignment: Alignment,
        c1: Constraint,
        c2: Constraint,
    },
    /// Several aligned pairs whose verdicts are conjoined.
    MultiAligned { items: Vec<AlignedItem> },
    /// A pair whose static verdict is additionally validated by enumerating
    /// every runtime context the KB can name.
    Runtime { c1: Constraint, c2: Constraint },
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// One suite entry: a check plus its expected verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchmarkProblem {
    pub id: String,
    pub category: Category,
    /// KB the problem evaluates on; `None` for composite and multi-aligned
    /// problems, which resolve KBs per operand.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kb: Option<String>,
    pub body: ProblemBody,
    pub expect_closed: Verdict,
    pub expect_open: Verdict,
    /// True when the problem carries values that cannot ground (directly or
    /// after alignment): its encodings must be counter-satisfiable in both
    /// polarities.
    #[serde(default, skip_serializing_if = "is_false")]
    pub degradation: bool,
    pub note: String,
}

impl BenchmarkProblem {
    /// Expected verdict under the given evaluation mode.
    pub fn expected(&self, mode: EvalMode) -> Verdict {
        match mode {
            EvalMode::Closed => self.expect_closed,
            EvalMode::Open => self.expect_open,
        }
    }
}

/// The full suite: fixture KBs plus problems.
#[derive(Clone, Debug)]
pub struct Suite {
    pub kbs: BTreeMap<String, KnowledgeBase>,
    pub problems: Vec<BenchmarkProblem>,
}

impl Suite {
    pub fn kb(&self, id: &str) -> Option<&KnowledgeBase> {
        self.kbs.get(id)
    }

    /// Operand → KB registry used by composite problems and context lookup.
    pub fn registry(&self) -> KbRegistry {
        let mut registry = KbRegistry::new();
        for (operand, kb_id) in [
            ("spatial", "GEO000"),
            ("purpose", "DPV000"),
            ("language", "LNG000"),
            ("channel", "NOM000"),
        ] {
            if let Some(kb) = self.kbs.get(kb_id) {
                registry.insert(operand, kb.clone());
            }
        }
        registry
    }
}

/// Builds the built-in fixture KBs and all 154 problems.
pub fn build_builtin_suite() -> Suite {
    Suite {
        kbs: fixtures::builtin_kbs(),
        problems: problems::builtin_problems(),
    }
}
