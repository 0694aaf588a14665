//! A small first-order formula AST shared by the TPTP and SMT-LIB printers,
//! the decidable-fragment check, and the ground oracle.
//!
//! Terms are variables or constants only — the encoding never needs function
//! symbols, which is what keeps every emitted problem inside the
//! Bernays–Schönfinkel (EPR) fragment.

/// A first-order term: a variable or an uninterpreted constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }
}

/// A first-order formula over unary/binary predicates and equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `pred(t1, ..., tn)`.
    Pred(String, Vec<Term>),
    /// `t1 = t2`.
    Eq(Term, Term),
    Not(Box<Formula>),
    /// Conjunction; empty means `true`.
    And(Vec<Formula>),
    /// Disjunction; empty means `false`.
    Or(Vec<Formula>),
    /// Biconditional.
    Iff(Box<Formula>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
    Exists(Vec<String>, Box<Formula>),
}

impl Formula {
    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Pred(name.into(), args)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(vars: &[&str], body: Formula) -> Formula {
        Formula::Forall(vars.iter().map(|v| v.to_string()).collect(), Box::new(body))
    }

    pub fn exists(vars: &[&str], body: Formula) -> Formula {
        Formula::Exists(vars.iter().map(|v| v.to_string()).collect(), Box::new(body))
    }
}

/// Negation normal form. `negate` pushes an outer negation inward.
///
/// `Iff` is expanded, so the result contains only predicates, equalities,
/// literal negations, conjunction, disjunction, and quantifiers.
pub fn nnf(f: &Formula, negate: bool) -> Formula {
    match f {
        Formula::Pred(..) | Formula::Eq(..) => {
            if negate {
                Formula::not(f.clone())
            } else {
                f.clone()
            }
        }
        Formula::Not(g) => nnf(g, !negate),
        Formula::And(fs) => {
            let parts: Vec<Formula> = fs.iter().map(|g| nnf(g, negate)).collect();
            if negate {
                Formula::Or(parts)
            } else {
                Formula::And(parts)
            }
        }
        Formula::Or(fs) => {
            let parts: Vec<Formula> = fs.iter().map(|g| nnf(g, negate)).collect();
            if negate {
                Formula::And(parts)
            } else {
                Formula::Or(parts)
            }
        }
        Formula::Iff(a, b) => {
            if negate {
                // ¬(a ⇔ b)  ≡  (a ∧ ¬b) ∨ (¬a ∧ b)
                Formula::Or(vec![
                    Formula::And(vec![nnf(a, false), nnf(b, true)]),
                    Formula::And(vec![nnf(a, true), nnf(b, false)]),
                ])
            } else {
                // a ⇔ b  ≡  (¬a ∨ b) ∧ (a ∨ ¬b)
                Formula::And(vec![
                    Formula::Or(vec![nnf(a, true), nnf(b, false)]),
                    Formula::Or(vec![nnf(a, false), nnf(b, true)]),
                ])
            }
        }
        Formula::Forall(vars, body) => {
            if negate {
                Formula::Exists(vars.clone(), Box::new(nnf(body, true)))
            } else {
                Formula::Forall(vars.clone(), Box::new(nnf(body, false)))
            }
        }
        Formula::Exists(vars, body) => {
            if negate {
                Formula::Forall(vars.clone(), Box::new(nnf(body, true)))
            } else {
                Formula::Exists(vars.clone(), Box::new(nnf(body, false)))
            }
        }
    }
}
