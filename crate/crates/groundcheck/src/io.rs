//! File formats and loading helpers.
//!
//! Everything on disk is JSON:
//!
//! - **KB**: the [`KbSpec`](crate::kb::KbSpec) wire shape (`id`, `domain`,
//!   `una`, `concepts`, `leq`, `disjoint`, `not_leq`, `gamma`).
//! - **Constraint**: `{"leftOperand": ..., "operator": ..., "rightOperand":
//!   value-or-list}`.
//! - **Policy**: a constraint, or a composition node `{"and": [...]}` /
//!   `{"or": [...]}` / `{"xone": [...]}`, nested arbitrarily.
//! - **Alignment**: `{"source": kb-id, "target": kb-id, "map": [[src, tgt],
//!   ...]}`.
//! - **Context**: a flat `{operand: value}` object.
//! - **Manifest**: `{"operands": {operand: kb-file, ...}}`, with paths
//!   resolved relative to the manifest's directory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::alignment::Alignment;
use crate::constraint::CompositeConstraint;
use crate::constraint::Constraint;
use crate::kb::{KbError, KbSpec, KnowledgeBase};
use crate::runtime::ExecutionContext;
use crate::verdict::KbRegistry;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON in {path}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("invalid knowledge base in {path}")]
    Kb {
        path: PathBuf,
        #[source]
        source: KbError,
    },
}

fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Read {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| LoadError::Json {
        path: path.to_owned(),
        source,
    })
}

/// Loads and closes a knowledge base.
pub fn load_kb(path: impl AsRef<Path>) -> Result<KnowledgeBase, LoadError> {
    let path = path.as_ref();
    let spec: KbSpec = load_json(path)?;
    KnowledgeBase::from_spec(&spec).map_err(|source| LoadError::Kb {
        path: path.to_owned(),
        source,
    })
}

/// Loads a KB spec without closing or validating it (for diagnostics).
pub fn load_kb_spec(path: impl AsRef<Path>) -> Result<KbSpec, LoadError> {
    load_json(path.as_ref())
}

/// Loads a single constraint.
pub fn load_constraint(path: impl AsRef<Path>) -> Result<Constraint, LoadError> {
    load_json(path.as_ref())
}

/// Loads a policy: either a bare constraint or a composition tree.
pub fn load_policy(path: impl AsRef<Path>) -> Result<CompositeConstraint, LoadError> {
    load_json(path.as_ref())
}

/// Loads an alignment.
pub fn load_alignment(path: impl AsRef<Path>) -> Result<Alignment, LoadError> {
    load_json(path.as_ref())
}

/// Loads an execution context.
pub fn load_context(path: impl AsRef<Path>) -> Result<ExecutionContext, LoadError> {
    load_json(path.as_ref())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    operands: BTreeMap<String, PathBuf>,
}

/// Loads a registry manifest mapping operands to KB files.
///
/// Relative KB paths are resolved against the manifest's directory. The same
/// file may back several operands; it is parsed once.
pub fn load_registry(manifest_path: impl AsRef<Path>) -> Result<KbRegistry, LoadError> {
    let manifest_path = manifest_path.as_ref();
    let manifest: Manifest = load_json(manifest_path)?;
    let base = manifest_path.parent().unwrap_or_else(|| Path::new("."));
    let mut cache: BTreeMap<PathBuf, KnowledgeBase> = BTreeMap::new();
    let mut registry = KbRegistry::new();
    for (operand, rel) in manifest.operands {
        let path = if rel.is_absolute() {
            rel
        } else {
            base.join(rel)
        };
        let kb = match cache.get(&path) {
            Some(kb) => kb.clone(),
            None => {
                let kb = load_kb(&path)?;
                cache.insert(path.clone(), kb.clone());
                kb
            }
        };
        registry.insert(operand, kb);
    }
    Ok(registry)
}
