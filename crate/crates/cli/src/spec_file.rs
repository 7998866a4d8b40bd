//! Ring-spec files: a small TOML document declaring a quotient ring and its
//! externally sourced metadata.
//!
//! ```toml
//! name = "a1-p3"
//! p = 3
//! vars = ["x", "y", "z"]
//! relations = ["x^2 + y*z"]
//! graded = true
//! expected_dimension = 2
//!
//! [metadata]
//! unmixed = true
//! cm_image = true
//! cohen_macaulay = true
//! singularity = "quadric cone"
//! char_restrictions = "p odd"
//! known_e_hk = "3/2"
//! known_e_hk_provenance = "dimension-2 classification"
//! max_e = 3          # optional per-ring sampling cap
//! f_chain = true     # compute the m, m^2, m^[p] statistics
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use hk_core::hk::{KnownValue, RingMetadata, RingPresentation};
use hk_core::ideal::IdealPresentation;
use hk_core::monomial::MonomialOrder;
use hk_core::parse::parse_polynomial;
use hk_core::poly::PolyRing;
use hk_core::rational::rat_from_str;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{origin}: TOML syntax error: {message}")]
    Toml { origin: String, message: String },

    #[error("{origin}: p must be prime and < 2^16: {source}")]
    BadRing {
        origin: String,
        #[source]
        source: hk_core::poly::RingError,
    },

    #[error("{origin}: relation {index} (`{text}`): {message}")]
    BadRelation {
        origin: String,
        index: usize,
        text: String,
        message: String,
    },

    #[error("{origin}: {message}")]
    Validation { origin: String, message: String },

    #[error("{origin}: characteristic restriction `{restriction}` rejects p = {p}")]
    CharRestriction {
        origin: String,
        restriction: String,
        p: u32,
    },
}

impl SpecError {
    fn validation(origin: &str, message: impl Into<String>) -> Self {
        SpecError::Validation {
            origin: origin.to_string(),
            message: message.into(),
        }
    }
}

/// The serialized document shape; field order here is the canonical
/// formatting order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RingSpecDoc {
    pub name: String,
    pub p: u32,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub graded: bool,
    pub expected_dimension: usize,
    #[serde(default)]
    pub metadata: MetadataDoc,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct MetadataDoc {
    #[serde(default)]
    pub unmixed: bool,
    #[serde(default)]
    pub cm_image: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohen_macaulay: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singularity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_restrictions: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_e_hk: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_e_hk_provenance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_chain: Option<bool>,
}

/// A validated spec: the ring presentation plus the pipeline hints that do
/// not belong to the mathematical presentation itself.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedSpec {
    pub presentation: RingPresentation,
    pub order: MonomialOrder,
    pub max_e: Option<u32>,
    pub f_chain: bool,
    doc: RingSpecDoc,
}

impl LoadedSpec {
    pub fn name(&self) -> &str {
        self.presentation.name()
    }

    pub fn doc(&self) -> &RingSpecDoc {
        &self.doc
    }
}

fn check_char_restriction(restriction: &str, p: u32) -> Result<bool, String> {
    let norm = restriction.trim().to_lowercase();
    let tokens: Vec<&str> = norm.split_whitespace().collect();
    match tokens.as_slice() {
        ["p", "odd"] | ["odd"] => Ok(p % 2 == 1),
        ["p", "!=", n] => n
            .parse::<u32>()
            .map(|v| p != v)
            .map_err(|_| format!("bad number in `{restriction}`")),
        ["p", ">", n] => n
            .parse::<u32>()
            .map(|v| p > v)
            .map_err(|_| format!("bad number in `{restriction}`")),
        ["p", ">=", n] => n
            .parse::<u32>()
            .map(|v| p >= v)
            .map_err(|_| format!("bad number in `{restriction}`")),
        _ => Err(format!(
            "unsupported characteristic restriction `{restriction}` \
             (expected `p odd`, `p != N`, `p > N`, or `p >= N`)"
        )),
    }
}

/// Parses and validates a ring-spec document. `origin` names the source
/// (usually the file path) for error messages.
pub fn parse_ring_spec(
    text: &str,
    origin: &str,
    order: MonomialOrder,
) -> Result<LoadedSpec, SpecError> {
    let doc: RingSpecDoc = toml::from_str(text).map_err(|e| SpecError::Toml {
        origin: origin.to_string(),
        message: e.to_string(),
    })?;
    load_doc(doc, origin, order)
}

fn load_doc(doc: RingSpecDoc, origin: &str, order: MonomialOrder) -> Result<LoadedSpec, SpecError> {
    if doc.name.trim().is_empty() {
        return Err(SpecError::validation(origin, "name must be nonempty"));
    }
    let var_refs: Vec<&str> = doc.vars.iter().map(|s| s.as_str()).collect();
    let ring: Arc<PolyRing> = PolyRing::new(doc.p, &var_refs).map_err(|source| SpecError::BadRing {
        origin: origin.to_string(),
        source,
    })?;

    if let Some(restriction) = &doc.metadata.char_restrictions {
        let ok = check_char_restriction(restriction, doc.p)
            .map_err(|m| SpecError::validation(origin, m))?;
        if !ok {
            return Err(SpecError::CharRestriction {
                origin: origin.to_string(),
                restriction: restriction.clone(),
                p: doc.p,
            });
        }
    }

    let mut gens = Vec::with_capacity(doc.relations.len());
    for (index, text) in doc.relations.iter().enumerate() {
        let g = parse_polynomial(text, &ring, order).map_err(|e| SpecError::BadRelation {
            origin: origin.to_string(),
            index,
            text: text.clone(),
            message: e.to_string(),
        })?;
        gens.push(g);
    }
    let defining = IdealPresentation::new(&ring, order, gens)
        .map_err(|e| SpecError::validation(origin, e.to_string()))?;

    let known_e_hk = match (&doc.metadata.known_e_hk, &doc.metadata.known_e_hk_provenance) {
        (None, _) => None,
        (Some(_), None) => {
            return Err(SpecError::validation(
                origin,
                "known_e_hk requires a known_e_hk_provenance note",
            ))
        }
        (Some(v), Some(prov)) => Some(KnownValue {
            value: rat_from_str(v).map_err(|m| SpecError::validation(origin, m))?,
            provenance: prov.clone(),
        }),
    };

    let metadata = RingMetadata {
        name: doc.name.clone(),
        expected_dimension: Some(doc.expected_dimension),
        graded: doc.graded,
        unmixed: doc.metadata.unmixed,
        cm_image: doc.metadata.cm_image,
        cohen_macaulay: doc.metadata.cohen_macaulay,
        singularity: doc.metadata.singularity.clone(),
        char_restrictions: doc.metadata.char_restrictions.clone(),
        known_e_hk,
    };
    let presentation = RingPresentation::new(&ring, defining, metadata)
        .map_err(|e| SpecError::validation(origin, e.to_string()))?;

    Ok(LoadedSpec {
        presentation,
        order,
        max_e: doc.metadata.max_e,
        f_chain: doc.metadata.f_chain.unwrap_or(true),
        doc,
    })
}

/// Canonical formatting: relations re-emitted from their parsed canonical
/// form, section order fixed. Re-parsing the output yields an identical
/// presentation.
pub fn format_ring_spec(spec: &LoadedSpec) -> String {
    let mut doc = spec.doc.clone();
    doc.relations = spec
        .presentation
        .defining_ideal()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    toml::to_string(&doc).expect("spec document serializes")
}
