use crate::conjugation::normalizer;
use crate::hom::{is_homomorphism, PGHom};
use crate::SearchError;
use pgroup_core::{ElemId, PartialGroupTable, Word, UNIT};
use std::sync::Arc;

struct Search<'a> {
    a: &'a PartialGroupTable,
    b: &'a PartialGroupTable,
    map: Vec<ElemId>,
    used: Vec<bool>,
    results: Vec<Vec<ElemId>>,
    first_only: bool,
}

const UNSET: ElemId = usize::MAX;

impl Search<'_> {
    /// Degree-2 consistency of the partial assignment: membership in the
    /// domain must match in both directions on assigned pairs, and assigned
    /// products must correspond.
    fn consistent(&self) -> bool {
        let count = self.a.element_count();
        for p in 0..count {
            if self.map[p] == UNSET {
                continue;
            }
            for q in 0..count {
                if self.map[q] == UNSET {
                    continue;
                }
                let in_a = self.a.contains(&Word::pair(p, q));
                let in_b = self.b.contains(&Word::pair(self.map[p], self.map[q]));
                if in_a != in_b {
                    return false;
                }
                if in_a {
                    let prod_a = self.a.prod2(p, q).unwrap();
                    if self.map[prod_a] != UNSET
                        && self.b.prod2(self.map[p], self.map[q]) != Some(self.map[prod_a])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn recurse(&mut self, x: ElemId) {
        if self.first_only && !self.results.is_empty() {
            return;
        }
        let count = self.a.element_count();
        if x == count {
            // Full assignment: keep it only if it is an isomorphism, i.e.
            // a homomorphism whose inverse map is one as well.
            if is_homomorphism(self.a, self.b, &self.map).is_ok() {
                let mut inverse = vec![0; count];
                for (p, &q) in self.map.iter().enumerate() {
                    inverse[q] = p;
                }
                if is_homomorphism(self.b, self.a, &inverse).is_ok() {
                    self.results.push(self.map.clone());
                }
            }
            return;
        }
        let forced = {
            let ix = self.a.inv(x);
            if ix != x && self.map[ix] != UNSET {
                Some(self.b.inv(self.map[ix]))
            } else {
                None
            }
        };
        for y in 0..count {
            if self.used[y] {
                continue;
            }
            if let Some(forced) = forced {
                if y != forced {
                    continue;
                }
            }
            if self.a.inv(x) == x && self.b.inv(y) != y {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.consistent() {
                self.recurse(x + 1);
            }
            self.map[x] = UNSET;
            self.used[y] = false;
        }
    }
}

fn search_isomorphisms(
    a: &PartialGroupTable,
    b: &PartialGroupTable,
    bound: usize,
    first_only: bool,
) -> Result<Vec<Vec<ElemId>>, SearchError> {
    let count = a.element_count();
    if count > bound {
        return Err(SearchError::BoundExceeded { count, bound });
    }
    if count != b.element_count() {
        return Ok(Vec::new());
    }
    let mut search = Search {
        a,
        b,
        map: vec![UNSET; count],
        used: vec![false; count],
        results: Vec::new(),
        first_only,
    };
    search.map[UNIT] = UNIT;
    search.used[UNIT] = true;
    search.recurse(1);
    Ok(search.results)
}

/// All isomorphisms `a -> b`, in lexicographic order of the element map.
pub fn isomorphisms(
    a: &Arc<PartialGroupTable>,
    b: &Arc<PartialGroupTable>,
    bound: usize,
) -> Result<Vec<PGHom>, SearchError> {
    let maps = search_isomorphisms(a, b, bound, false)?;
    Ok(maps
        .into_iter()
        .map(|map| {
            PGHom::new(a.clone(), b.clone(), map).expect("search output is a homomorphism")
        })
        .collect())
}

/// The first isomorphism in the deterministic search order, if any.
pub fn find_isomorphism(
    a: &Arc<PartialGroupTable>,
    b: &Arc<PartialGroupTable>,
    bound: usize,
) -> Result<Option<PGHom>, SearchError> {
    let maps = search_isomorphisms(a, b, bound, true)?;
    Ok(maps.into_iter().next().map(|map| {
        PGHom::new(a.clone(), b.clone(), map).expect("search output is a homomorphism")
    }))
}

/// Exhaustive automorphism list: bijective self-maps that are homomorphisms
/// in both directions, pruned early on unit, inversion and degree-2
/// compatibility. Deterministic order.
pub fn automorphisms(
    table: &Arc<PartialGroupTable>,
    bound: usize,
) -> Result<Vec<PGHom>, SearchError> {
    isomorphisms(table, table, bound)
}

/// Automorphisms partitioned into homotopy classes: `f ~ g` iff
/// `f = c_eta ∘ g` for some normalizer element `eta`. Class lists hold
/// indices into the automorphism list; the exact sequence gives the
/// cardinality law `|Aut| * |Z| = |N| * |Out|`.
#[derive(Clone, Debug)]
pub struct OuterClasses {
    pub automorphisms: Vec<PGHom>,
    pub classes: Vec<Vec<usize>>,
}

pub fn outer_classes(
    table: &Arc<PartialGroupTable>,
    bound: usize,
) -> Result<OuterClasses, SearchError> {
    let auts = automorphisms(table, bound)?;
    let norm = normalizer(table);
    let mut assigned = vec![false; auts.len()];
    let mut classes = Vec::new();
    for i in 0..auts.len() {
        if assigned[i] {
            continue;
        }
        let mut class = Vec::new();
        for c in &norm.conjugations {
            let composed = c.compose(&auts[i]);
            let j = auts
                .iter()
                .position(|a| *a == composed)
                .expect("inner twist of an automorphism is an automorphism");
            if !assigned[j] {
                assigned[j] = true;
                class.push(j);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(OuterClasses {
        automorphisms: auts,
        classes,
    })
}
