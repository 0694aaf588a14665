//! Atomic and composite constraints.
//!
//! An atomic [`Constraint`] is a triple `(leftOperand, operator, rightOperand)`
//! in the ODRL style: `(spatial, isPartOf, "https://sws.geonames.org/6255148/")`.
//! Operator names are the case-sensitive ODRL identifiers. Scalar operators
//! carry exactly one value; the set operators `isAnyOf`/`isAllOf`/`isNoneOf`
//! carry a non-empty value list. Arity is enforced at construction and at
//! JSON parse time.
//!
//! A [`CompositeConstraint`] is a tree of atomic constraints combined with
//! `and`, `or`, or `xone`, serialized as `{"and": [ ... ]}` with plain
//! constraint objects as leaves.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The eight supported ODRL constraint operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operator {
    #[serde(rename = "eq")]
    Eq,
    #[serde(rename = "neq")]
    Neq,
    #[serde(rename = "isA")]
    IsA,
    #[serde(rename = "isPartOf")]
    IsPartOf,
    #[serde(rename = "hasPart")]
    HasPart,
    #[serde(rename = "isAnyOf")]
    IsAnyOf,
    #[serde(rename = "isAllOf")]
    IsAllOf,
    #[serde(rename = "isNoneOf")]
    IsNoneOf,
}

impl Operator {
    pub const ALL: [Operator; 8] = [
        Operator::Eq,
        Operator::Neq,
        Operator::IsA,
        Operator::IsPartOf,
        Operator::HasPart,
        Operator::IsAnyOf,
        Operator::IsAllOf,
        Operator::IsNoneOf,
    ];

    /// Whether the operator takes a value list rather than a single value.
    pub fn takes_set(self) -> bool {
        matches!(self, Operator::IsAnyOf | Operator::IsAllOf | Operator::IsNoneOf)
    }

    pub fn name(self) -> &'static str {
        match self {
            Operator::Eq => "eq",
            Operator::Neq => "neq",
            Operator::IsA => "isA",
            Operator::IsPartOf => "isPartOf",
            Operator::HasPart => "hasPart",
            Operator::IsAnyOf => "isAnyOf",
            Operator::IsAllOf => "isAllOf",
            Operator::IsNoneOf => "isNoneOf",
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = ConstraintError;

    /// Case-sensitive: `isa` or `EQ` are unknown operators.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Operator::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| ConstraintError::UnknownOperator { name: s.to_owned() })
    }
}

/// Errors raised when assembling a constraint.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstraintError {
    #[error("unknown operator '{name}'")]
    UnknownOperator { name: String },
    #[error("operator '{operator}' takes exactly one value, got {got}")]
    ScalarArity { operator: Operator, got: usize },
    #[error("operator '{operator}' takes a non-empty value list")]
    EmptyValueList { operator: Operator },
    #[error("operator '{operator}' takes a value list, got a single value")]
    ExpectedValueList { operator: Operator },
    #[error("composite '{mode}' has no children")]
    EmptyComposite { mode: CompositionMode },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintWire {
    #[serde(rename = "leftOperand")]
    left_operand: String,
    operator: Operator,
    #[serde(rename = "rightOperand")]
    right_operand: OneOrMany,
}

/// An atomic constraint triple. Construction validates operator arity, so a
/// value of this type is always well-formed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ConstraintWire", into = "ConstraintWire")]
pub struct Constraint {
    left_operand: String,
    operator: Operator,
    values: Vec<String>,
}

impl Constraint {
    /// Builds a constraint, enforcing operator arity.
    pub fn new(
        left_operand: impl Into<String>,
        operator: Operator,
        values: Vec<String>,
    ) -> Result<Self, ConstraintError> {
        if operator.takes_set() {
            if values.is_empty() {
                return Err(ConstraintError::EmptyValueList { operator });
            }
        } else if values.len() != 1 {
            return Err(ConstraintError::ScalarArity {
                operator,
                got: values.len(),
            });
        }
        Ok(Constraint {
            left_operand: left_operand.into(),
            operator,
            values,
        })
    }

    /// Shorthand for scalar operators.
    pub fn unary(
        left_operand: impl Into<String>,
        operator: Operator,
        value: impl Into<String>,
    ) -> Result<Self, ConstraintError> {
        Constraint::new(left_operand, operator, vec![value.into()])
    }

    pub fn left_operand(&self) -> &str {
        &self.left_operand
    }

    pub fn operator(&self) -> Operator {
        self.operator
    }

    /// All right-operand values (length 1 for scalar operators).
    pub fn values(&self) -> &[String] {
        &self.values
    }

    /// The single value of a scalar constraint.
    pub fn value(&self) -> &str {
        &self.values[0]
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.operator.takes_set() {
            write!(
                f,
                "({}, {}, [{}])",
                self.left_operand,
                self.operator,
                self.values.join(", ")
            )
        } else {
            write!(f, "({}, {}, {})", self.left_operand, self.operator, self.values[0])
        }
    }
}

impl TryFrom<ConstraintWire> for Constraint {
    type Error = ConstraintError;

    fn try_from(wire: ConstraintWire) -> Result<Self, Self::Error> {
        let values = match wire.right_operand {
            OneOrMany::One(v) => {
                if wire.operator.takes_set() {
                    return Err(ConstraintError::ExpectedValueList {
                        operator: wire.operator,
                    });
                }
                vec![v]
            }
            OneOrMany::Many(vs) => {
                if !wire.operator.takes_set() {
                    return Err(ConstraintError::ScalarArity {
                        operator: wire.operator,
                        got: vs.len(),
                    });
                }
                vs
            }
        };
        Constraint::new(wire.left_operand, wire.operator, values)
    }
}

impl From<Constraint> for ConstraintWire {
    fn from(c: Constraint) -> Self {
        let right_operand = if c.operator.takes_set() {
            OneOrMany::Many(c.values)
        } else {
            OneOrMany::One(c.values.into_iter().next().expect("scalar constraint has a value"))
        };
        ConstraintWire {
            left_operand: c.left_operand,
            operator: c.operator,
            right_operand,
        }
    }
}

/// Logical mode of a composite node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositionMode {
    And,
    Or,
    Xone,
}

impl fmt::Display for CompositionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CompositionMode::And => "and",
            CompositionMode::Or => "or",
            CompositionMode::Xone => "xone",
        };
        f.write_str(s)
    }
}

#[derive(Serialize, Deserialize)]
enum NodeWire {
    #[serde(rename = "and")]
    And(Vec<CompositeWire>),
    #[serde(rename = "or")]
    Or(Vec<CompositeWire>),
    #[serde(rename = "xone")]
    Xone(Vec<CompositeWire>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CompositeWire {
    Node(NodeWire),
    Leaf(Constraint),
}

/// A tree of constraints under `and`/`or`/`xone` composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CompositeWire", into = "CompositeWire")]
pub enum CompositeConstraint {
    Leaf(Constraint),
    Node {
        mode: CompositionMode,
        children: Vec<CompositeConstraint>,
    },
}

impl CompositeConstraint {
    pub fn leaf(c: Constraint) -> Self {
        CompositeConstraint::Leaf(c)
    }

    pub fn node(
        mode: CompositionMode,
        children: Vec<CompositeConstraint>,
    ) -> Result<Self, ConstraintError> {
        if children.is_empty() {
            return Err(ConstraintError::EmptyComposite { mode });
        }
        Ok(CompositeConstraint::Node { mode, children })
    }

    pub fn and(children: Vec<CompositeConstraint>) -> Result<Self, ConstraintError> {
        Self::node(CompositionMode::And, children)
    }

    pub fn or(children: Vec<CompositeConstraint>) -> Result<Self, ConstraintError> {
        Self::node(CompositionMode::Or, children)
    }

    pub fn xone(children: Vec<CompositeConstraint>) -> Result<Self, ConstraintError> {
        Self::node(CompositionMode::Xone, children)
    }

    /// All atomic constraints in the tree, left to right.
    pub fn leaves(&self) -> Vec<&Constraint> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Constraint>) {
        match self {
            CompositeConstraint::Leaf(c) => out.push(c),
            CompositeConstraint::Node { children, .. } => {
                for child in children {
                    child.collect_leaves(out);
                }
            }
        }
    }

    /// The set of left operands constrained anywhere in the tree.
    pub fn operands(&self) -> BTreeSet<&str> {
        self.leaves().iter().map(|c| c.left_operand()).collect()
    }
}

impl TryFrom<CompositeWire> for CompositeConstraint {
    type Error = ConstraintError;

    fn try_from(wire: CompositeWire) -> Result<Self, Self::Error> {
        match wire {
            CompositeWire::Leaf(c) => Ok(CompositeConstraint::Leaf(c)),
            CompositeWire::Node(node) => {
                let (mode, children) = match node {
                    NodeWire::And(cs) => (CompositionMode::And, cs),
                    NodeWire::Or(cs) => (CompositionMode::Or, cs),
                    NodeWire::Xone(cs) => (CompositionMode::Xone, cs),
                };
                let children = children
                    .into_iter()
                    .map(CompositeConstraint::try_from)
                    .collect::<Result<Vec<_>, _>>()?;
                CompositeConstraint::node(mode, children)
            }
        }
    }
}

impl From<CompositeConstraint> for CompositeWire {
    fn from(c: CompositeConstraint) -> Self {
        match c {
            CompositeConstraint::Leaf(leaf) => CompositeWire::Leaf(leaf),
            CompositeConstraint::Node { mode, children } => {
                let children = children.into_iter().map(CompositeWire::from).collect();
                CompositeWire::Node(match mode {
                    CompositionMode::And => NodeWire::And(children),
                    CompositionMode::Or => NodeWire::Or(children),
                    CompositionMode::Xone => NodeWire::Xone(children),
                })
            }
        }
    }
}
