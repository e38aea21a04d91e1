//! Twisting-pair spec files (JSON):
//!
//! ```json
//! {"base": "base.json",
//!  "fiber": "fiber.json",
//!  "t": {"g": {"a": "~a", "~a": "a"}},
//!  "eta": [["g", "g", "y"]]}
//! ```
//!
//! `base` and `fiber` name partial-group files (resolved by the caller).
//! `t` maps base element names to fiber element maps; omitted elements twist
//! by the identity. `eta` lists `[g, h, value]` triples over the degree-2
//! base domain; omitted pairs default to the unit.

use crate::pair::TwistingPair;
use crate::ExtensionError;
use homotopy_aut::PGHom;
use pgroup_core::{PartialGroupTable, Word, UNIT};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Serialize, Deserialize)]
pub struct PairFile {
    pub base: String,
    pub fiber: String,
    #[serde(default)]
    pub t: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub eta: Vec<(String, String, String)>,
}

pub fn parse_pair_file(s: &str) -> Result<PairFile, ExtensionError> {
    serde_json::from_str(s).map_err(|e| ExtensionError::Unsupported(e.to_string()))
}

pub fn build_pair(
    base: Arc<PartialGroupTable>,
    fiber: Arc<PartialGroupTable>,
    file: &PairFile,
) -> Result<TwistingPair, ExtensionError> {
    let resolve_fiber = |name: &str| {
        fiber.element_by_name(name).ok_or_else(|| {
            ExtensionError::Unsupported(format!("unknown fiber element \"{name}\""))
        })
    };
    let resolve_base = |name: &str| {
        base.element_by_name(name).ok_or_else(|| {
            ExtensionError::Unsupported(format!("unknown base element \"{name}\""))
        })
    };

    let mut t = vec![PGHom::identity(&fiber); base.element_count()];
    for (g_name, map) in &file.t {
        let g = resolve_base(g_name)?;
        let mut element_map: Vec<usize> = (0..fiber.element_count()).collect();
        for (from, to) in map {
            element_map[resolve_fiber(from)?] = resolve_fiber(to)?;
        }
        t[g] = PGHom::new(fiber.clone(), fiber.clone(), element_map).map_err(|e| {
            ExtensionError::Unsupported(format!("t(\"{g_name}\") is not a homomorphism: {e}"))
        })?;
    }

    let mut eta = vec![UNIT; base.simplices(2)?.len()];
    for (g_name, h_name, value) in &file.eta {
        let (g, h) = (resolve_base(g_name)?, resolve_base(h_name)?);
        let idx = base.word_index(&Word::pair(g, h)).ok_or_else(|| {
            ExtensionError::Unsupported(format!(
                "({g_name}, {h_name}) is not a composable base pair"
            ))
        })?;
        eta[idx] = resolve_fiber(value)?;
    }

    TwistingPair::new(base, fiber, t, eta)
}

pub fn pair_to_json(pair: &TwistingPair, base_path: &str, fiber_path: &str) -> String {
    let base = pair.base();
    let fiber = pair.fiber();
    let mut t = BTreeMap::new();
    for g in 1..base.element_count() {
        let hom = pair.twist(g);
        if *hom == PGHom::identity(fiber) {
            continue;
        }
        let map: BTreeMap<String, String> = hom
            .describe()
            .into_iter()
            .filter(|(from, to)| from != to)
            .collect();
        t.insert(base.name(g).to_string(), map);
    }
    let mut eta = Vec::new();
    for (w, &value) in base.simplices(2).unwrap().iter().zip(pair.eta_table()) {
        if value != UNIT {
            eta.push((
                base.name(w.get(0)).to_string(),
                base.name(w.get(1)).to_string(),
                fiber.name(value).to_string(),
            ));
        }
    }
    let file = PairFile {
        base: base_path.to_string(),
        fiber: fiber_path.to_string(),
        t,
        eta,
    };
    serde_json::to_string_pretty(&file).expect("pair file serializes")
}
