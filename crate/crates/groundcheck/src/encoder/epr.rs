//! Decidable-fragment check.
//!
//! A problem is decidable by ground instantiation when its refutation form
//! (axioms plus negated conjecture) lies in the Bernays–Schönfinkel class:
//! an ∃*∀* quantifier prefix after normalization and no function symbols of
//! positive arity. Our [`Term`] type cannot express function application, so
//! the structural conditions reduce to a quantifier-shape check: in negation
//! normal form, no existential may occur inside the scope of a universal.

use super::fol::{nnf, Formula};

/// Why a formula falls outside the decidable fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EprViolation {
    /// An existential quantifier under a universal one (would Skolemize to a
    /// function symbol).
    ExistentialUnderUniversal { formula: String },
}

/// Checks that `f`, asserted positively, stays in the fragment.
pub(crate) fn check_asserted(f: &Formula) -> Result<(), EprViolation> {
    let normalized = nnf(f, false);
    check_nnf(&normalized, false, &normalized)
}

/// Checks that refuting `f` (asserting its negation) stays in the fragment.
pub(crate) fn check_refuted(f: &Formula) -> Result<(), EprViolation> {
    let normalized = nnf(f, true);
    check_nnf(&normalized, false, &normalized)
}

fn check_nnf(f: &Formula, under_forall: bool, root: &Formula) -> Result<(), EprViolation> {
    match f {
        Formula::Pred(..) | Formula::Eq(..) | Formula::Not(..) => Ok(()),
        Formula::And(fs) | Formula::Or(fs) => {
            for g in fs {
                check_nnf(g, under_forall, root)?;
            }
            Ok(())
        }
        Formula::Iff(..) => unreachable!("nnf removes Iff"),
        Formula::Forall(_, body) => check_nnf(body, true, root),
        Formula::Exists(_, body) => {
            if under_forall {
                Err(EprViolation::ExistentialUnderUniversal {
                    formula: format!("{root:?}"),
                })
            } else {
                check_nnf(body, under_forall, root)
            }
        }
    }
}
