use pgroup_core::{ElemId, PartialGroupTable, Word, UNIT};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a homomorphism: {reason} at {witness}")]
pub struct HomFailure {
    pub witness: String,
    pub reason: String,
}

/// Checks the morphism conditions for a total element map: the unit and
/// inverses are preserved, every domain word maps entrywise into the target
/// domain, and the extended product is preserved. Comparison runs up to the
/// smaller of the two truncation degrees; on failure the witness word is
/// returned.
pub fn is_homomorphism(
    source: &PartialGroupTable,
    target: &PartialGroupTable,
    map: &[ElemId],
) -> Result<(), HomFailure> {
    assert_eq!(map.len(), source.element_count(), "map must be total");
    assert!(
        map.iter().all(|&y| y < target.element_count()),
        "map value out of range"
    );
    let limit = source.max_degree().min(target.max_degree());
    for n in 2..=limit {
        for w in source.simplices(n).unwrap() {
            let image: Word = w.entries().iter().map(|&x| map[x]).collect();
            if !target.contains(&image) {
                return Err(HomFailure {
                    witness: source.render_word(w),
                    reason: format!(
                        "image {} is not in the target domain",
                        target.render_word(&image)
                    ),
                });
            }
            let expected = map[source.pi(w).unwrap()];
            let got = target.pi(&image).unwrap();
            if got != expected {
                return Err(HomFailure {
                    witness: source.render_word(w),
                    reason: "extended product is not preserved".into(),
                });
            }
        }
    }
    // Unit and inverse preservation follow from the conditions above on
    // valid tables, but are part of the contract and checked directly.
    if map[UNIT] != UNIT {
        return Err(HomFailure {
            witness: "(1)".into(),
            reason: "unit is not preserved".into(),
        });
    }
    for x in 0..source.element_count() {
        if map[source.inv(x)] != target.inv(map[x]) {
            return Err(HomFailure {
                witness: source.render_word(&Word::single(x)),
                reason: "inverses are not preserved".into(),
            });
        }
    }
    Ok(())
}

/// A validated homomorphism of partial groups, stored as a total map on
/// elements. Tables are shared immutably.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGHom {
    source: Arc<PartialGroupTable>,
    target: Arc<PartialGroupTable>,
    map: Vec<ElemId>,
}

impl PGHom {
    pub fn new(
        source: Arc<PartialGroupTable>,
        target: Arc<PartialGroupTable>,
        map: Vec<ElemId>,
    ) -> Result<Self, HomFailure> {
        is_homomorphism(&source, &target, &map)?;
        Ok(PGHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(table: &Arc<PartialGroupTable>) -> Self {
        PGHom {
            source: table.clone(),
            target: table.clone(),
            map: (0..table.element_count()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<PartialGroupTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PartialGroupTable> {
        &self.target
    }

    pub fn map(&self) -> &[ElemId] {
        &self.map
    }

    pub fn apply(&self, x: ElemId) -> ElemId {
        self.map[x]
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        w.entries().iter().map(|&x| self.map[x]).collect()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &PGHom) -> PGHom {
        assert!(
            Arc::ptr_eq(&self.source, &other.target) || *self.source == *other.target,
            "composition middle tables differ"
        );
        PGHom {
            source: other.source.clone(),
            target: self.target.clone(),
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.element_count() != self.target.element_count() {
            return false;
        }
        let mut seen = vec![false; self.target.element_count()];
        for &y in &self.map {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// The inverse homomorphism, when the map is bijective and its inverse
    /// is again a homomorphism (which is what makes `self` an isomorphism).
    pub fn inverse(&self) -> Option<PGHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv_map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv_map[y] = x;
        }
        PGHom::new(self.target.clone(), self.source.clone(), inv_map).ok()
    }

    /// Rendering of the element map by names, for reports.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(x, &y)| {
                (
                    self.source.name(x).to_string(),
                    self.target.name(y).to_string(),
                )
            })
            .collect()
    }
}
