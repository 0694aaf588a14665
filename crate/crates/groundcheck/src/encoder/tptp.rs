//! TPTP (FOF dialect) printer.
//!
//! Output is deterministic: the same formula always prints to the same bytes.

use std::fmt::Write;

use super::fol::{Formula, Term};

fn term(t: &Term) -> &str {
    match t {
        Term::Var(v) => v,
        Term::Const(c) => c,
    }
}

/// Prints a formula in TPTP FOF syntax. Binary connectives are always
/// parenthesized, so precedence never matters.
pub(crate) fn formula(f: &Formula) -> String {
    match f {
        Formula::Pred(name, args) => {
            if args.is_empty() {
                name.clone()
            } else {
                let joined: Vec<&str> = args.iter().map(term).collect();
                format!("{}({})", name, joined.join(","))
            }
        }
        Formula::Eq(a, b) => format!("({} = {})", term(a), term(b)),
        // `!=` reads better than `~(a = b)` and is standard FOF.
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Eq(a, b) => format!("({} != {})", term(a), term(b)),
            _ => format!("~{}", formula_atomic(inner)),
        },
        Formula::And(fs) => nary(fs, "&", "$true"),
        Formula::Or(fs) => nary(fs, "|", "$false"),
        Formula::Iff(a, b) => format!("({} <=> {})", formula(a), formula(b)),
        Formula::Forall(vars, body) => format!("(! [{}] : {})", vars.join(","), formula(body)),
        Formula::Exists(vars, body) => format!("(? [{}] : {})", vars.join(","), formula(body)),
    }
}

/// Like [`formula`] but guarantees the result binds tighter than `~`.
fn formula_atomic(f: &Formula) -> String {
    match f {
        Formula::Pred(..) => formula(f),
        _ => {
            let s = formula(f);
            if s.starts_with('(') {
                s
            } else {
                format!("({s})")
            }
        }
    }
}

fn nary(fs: &[Formula], op: &str, empty: &str) -> String {
    match fs.len() {
        0 => empty.to_owned(),
        1 => formula(&fs[0]),
        _ => {
            let parts: Vec<String> = fs.iter().map(formula).collect();
            format!("({})", parts.join(&format!(" {op} ")))
        }
    }
}

/// One `fof(...)` annotated formula.
pub(crate) fn fof(name: &str, role: &str, f: &Formula) -> String {
    format!("fof({}, {}, {}).", name, role, formula(f))
}

/// A complete TPTP problem: header comment, axioms, one conjecture.
pub(crate) fn problem(
    header: &str,
    axioms: &[(String, Formula)],
    conjecture: &(String, Formula),
) -> String {
    let mut out = String::new();
    for line in header.lines() {
        let _ = writeln!(out, "% {line}");
    }
    for (name, f) in axioms {
        let _ = writeln!(out, "{}", fof(name, "axiom", f));
    }
    let _ = writeln!(out, "{}", fof(&conjecture.0, "conjecture", &conjecture.1));
    out
}
