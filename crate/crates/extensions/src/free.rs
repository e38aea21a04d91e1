use crate::pair::TwistingPair;
use crate::ExtensionError;
use constructions::free_partial_group;
use homotopy_aut::{outer_classes, PGHom};
use pgroup_core::{PartialGroupTable, UNIT};
use std::sync::Arc;

/// All outer actions of a free base on the fiber, each realized as a
/// twisting pair: a pointed map from the generators to Out(fiber) extends
/// multiplicatively to a twist with constant unit eta, because the only
/// composable non-unit base pairs are (x, ~x) and (~x, x).
///
/// The base must be shaped like a free partial group: no non-unit element
/// may be self-inverse, and generators are the elements below their
/// inverses.
pub fn enumerate_outer_actions(
    base: &Arc<PartialGroupTable>,
    fiber: &Arc<PartialGroupTable>,
    bound: usize,
) -> Result<Vec<TwistingPair>, ExtensionError> {
    let mut generators = Vec::new();
    for x in 1..base.element_count() {
        if base.inv(x) == x {
            return Err(ExtensionError::Unsupported(
                "base is not a free partial group (self-inverse element)".into(),
            ));
        }
        if x < base.inv(x) {
            generators.push(x);
        }
    }
    let oc = outer_classes(fiber, bound)?;
    let reps: Vec<&PGHom> = oc
        .classes
        .iter()
        .map(|class| &oc.automorphisms[class[0]])
        .collect();
    let rep_inverses: Vec<PGHom> = reps
        .iter()
        .map(|r| r.inverse().expect("automorphisms invert"))
        .collect();

    let eta = vec![UNIT; base.simplices(2)?.len()];
    let mut out = Vec::new();
    let mut choice = vec![0usize; generators.len()];
    loop {
        let mut t = vec![PGHom::identity(fiber); base.element_count()];
        for (slot, &g) in generators.iter().enumerate() {
            t[g] = reps[choice[slot]].clone();
            t[base.inv(g)] = rep_inverses[choice[slot]].clone();
        }
        out.push(TwistingPair::new(
            base.clone(),
            fiber.clone(),
            t,
            eta.clone(),
        )?);
        let mut pos = generators.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < reps.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Number of equivalence classes of extensions of the free partial group on
/// `x_gens` generators by the free partial group on `y_gens` generators:
/// one class per outer action, which the enumeration produces through the
/// brute-force automorphism search (independent of the closed formula
/// `(y!·2^y)^x`).
pub fn count_free_extensions(
    x_gens: usize,
    y_gens: usize,
    bound: usize,
) -> Result<u128, ExtensionError> {
    let name = |prefix: &str, k: usize| -> Vec<String> {
        (0..k).map(|i| format!("{prefix}{}", i + 1)).collect()
    };
    let base = Arc::new(free_partial_group(&name("x", x_gens), 4)?);
    let fiber = Arc::new(free_partial_group(&name("y", y_gens), 4)?);
    let actions = enumerate_outer_actions(&base, &fiber, bound)?;
    Ok(actions.len() as u128)
}
