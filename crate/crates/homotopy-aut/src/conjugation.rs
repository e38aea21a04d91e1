use crate::hom::PGHom;
use crate::homotopy::check_homotopy;
use pgroup_core::{ElemId, PartialGroupTable, UNIT};
use std::sync::Arc;

/// The conjugation endomorphism `c_eta` with `c_eta <-eta- Id`, if it
/// exists: for each `x` the equation `eta * x = c(x) * eta` is solved inside
/// the domain (cancellation makes the solution unique), and the resulting
/// map must be a homomorphism homotopic to the identity through `eta`.
pub fn conjugation(table: &Arc<PartialGroupTable>, eta: ElemId) -> Option<PGHom> {
    let mut map = Vec::with_capacity(table.element_count());
    for x in 0..table.element_count() {
        let lhs = table.prod2(eta, x)?;
        let mut solutions =
            (0..table.element_count()).filter(|&y| table.prod2(y, eta) == Some(lhs));
        let y = solutions.next()?;
        if solutions.next().is_some() {
            return None; // cancellation fails; not a valid table
        }
        map.push(y);
    }
    let hom = PGHom::new(table.clone(), table.clone(), map).ok()?;
    check_homotopy(&hom, &PGHom::identity(table), eta).ok()?;
    Some(hom)
}

/// The normalizer: all elements defining a homotopy of the identity,
/// together with their conjugation automorphisms. Verified to be closed
/// under the product and inverses (it is a group).
#[derive(Clone, Debug)]
pub struct Normalizer {
    pub elements: Vec<ElemId>,
    pub conjugations: Vec<PGHom>,
}

impl Normalizer {
    pub fn conjugation_by(&self, eta: ElemId) -> Option<&PGHom> {
        self.elements
            .iter()
            .position(|&e| e == eta)
            .map(|i| &self.conjugations[i])
    }
}

pub fn normalizer(table: &Arc<PartialGroupTable>) -> Normalizer {
    let mut elements = Vec::new();
    let mut conjugations = Vec::new();
    for eta in 0..table.element_count() {
        if let Some(c) = conjugation(table, eta) {
            elements.push(eta);
            conjugations.push(c);
        }
    }
    for &a in &elements {
        assert!(
            elements.contains(&table.inv(a)),
            "normalizer must be closed under inverses"
        );
        for &b in &elements {
            let p = table
                .prod2(a, b)
                .expect("normalizer elements must be composable");
            assert!(
                elements.contains(&p),
                "normalizer must be closed under the product"
            );
        }
    }
    Normalizer {
        elements,
        conjugations,
    }
}

/// The center: normalizer elements whose conjugation is the identity.
/// Verified to be abelian.
pub fn center(table: &Arc<PartialGroupTable>) -> Vec<ElemId> {
    let n = normalizer(table);
    let id = PGHom::identity(table);
    let out: Vec<ElemId> = n
        .elements
        .iter()
        .zip(&n.conjugations)
        .filter(|(_, c)| **c == id)
        .map(|(&e, _)| e)
        .collect();
    for &a in &out {
        for &b in &out {
            assert_eq!(
                table.prod2(a, b),
                table.prod2(b, a),
                "center must be commutative"
            );
        }
    }
    debug_assert!(out.contains(&UNIT));
    out
}
