use crate::CohomologyError;
use abelian_linalg::{AbHom, FinAbGroup, Matrix};
use num_bigint::BigInt;
use num_traits::Zero;
use pgroup_core::{ElemId, PartialGroupTable, UNIT};
use std::sync::Arc;

/// An action of a partial group on an abelian coefficient group: one
/// automorphism per element, multiplicative on composable pairs. This is a
/// partial group homomorphism into Aut(coeffs); checking the degree-2
/// condition pins it in all degrees by contraction coherence.
///
/// The table is expected to be validated; operations rely on face and
/// degeneracy closure.
#[derive(Clone, Debug)]
pub struct PGAction {
    table: Arc<PartialGroupTable>,
    coeffs: FinAbGroup,
    phi: Vec<AbHom>,
}

impl PGAction {
    pub fn new(
        table: Arc<PartialGroupTable>,
        coeffs: FinAbGroup,
        phi: Vec<AbHom>,
    ) -> Result<Self, CohomologyError> {
        if phi.len() != table.element_count() {
            return Err(CohomologyError::Action(format!(
                "phi defined on {} elements, expected {}",
                phi.len(),
                table.element_count()
            )));
        }
        for (x, h) in phi.iter().enumerate() {
            if h.source().factors() != coeffs.factors()
                || h.target().factors() != coeffs.factors()
            {
                return Err(CohomologyError::Action(format!(
                    "phi({}) is not an endomorphism of the coefficient group",
                    table.name(x)
                )));
            }
        }
        if !phi[UNIT].is_identity() {
            return Err(CohomologyError::Action("phi(1) is not the identity".into()));
        }
        for x in 0..table.element_count() {
            let both = phi[x].compose(&phi[table.inv(x)])?;
            let other = phi[table.inv(x)].compose(&phi[x])?;
            if !both.is_identity() || !other.is_identity() {
                return Err(CohomologyError::Action(format!(
                    "phi({}) is not inverse to phi({})",
                    table.name(table.inv(x)),
                    table.name(x)
                )));
            }
        }
        for w in table.simplices(2)? {
            let (a, b) = (w.get(0), w.get(1));
            let p = table.prod2(a, b).unwrap();
            if phi[a].compose(&phi[b])? != phi[p] {
                return Err(CohomologyError::Action(format!(
                    "phi is not multiplicative on {}",
                    table.render_word(w)
                )));
            }
        }
        Ok(PGAction { table, coeffs, phi })
    }

    /// The action through identity automorphisms.
    pub fn trivial(table: Arc<PartialGroupTable>, coeffs: FinAbGroup) -> Self {
        let id = AbHom::identity(&coeffs);
        let phi = vec![id; table.element_count()];
        PGAction { table, coeffs, phi }
    }

    pub fn table(&self) -> &Arc<PartialGroupTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &FinAbGroup {
        &self.coeffs
    }

    pub fn phi(&self, x: ElemId) -> &AbHom {
        &self.phi[x]
    }

    /// The cochain group `C^n`: one copy of the coefficient group per
    /// degree-n word, factor-major (coordinate `i * |D_n| + j` is factor `i`
    /// of the word with index `j`).
    pub fn cochain_group(&self, n: usize) -> Result<FinAbGroup, CohomologyError> {
        let words = self.table.simplices(n)?;
        Ok(self.coeffs.direct_power(words.len()))
    }
}

/// All actions of `table` on `coeffs`, found by brute force: candidate
/// automorphisms are enumerated from all matrices over the presentation,
/// then assignments are extended element by element under the
/// multiplicativity constraints. Deterministic order; only finite
/// coefficient groups are supported, and the candidate pool is capped by
/// `bound`.
pub fn enumerate_actions(
    table: &Arc<PartialGroupTable>,
    coeffs: &FinAbGroup,
    bound: usize,
) -> Result<Vec<PGAction>, CohomologyError> {
    let order = coeffs.order().ok_or_else(|| {
        CohomologyError::Action("action enumeration needs finite coefficients".into())
    })?;
    if order > num_bigint::BigUint::from(4096u32) {
        return Err(CohomologyError::Action(
            "action enumeration is desk-scale only (coefficient order above 4096)".into(),
        ));
    }
    let r = coeffs.rank();
    if r == 0 {
        return Ok(vec![PGAction::trivial(table.clone(), coeffs.clone())]);
    }
    // All endomorphism matrices, column by column: column j ranges over all
    // element vectors killed by the j-th relation.
    let mut column_choices: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(r);
    for j in 0..r {
        let mut cols = Vec::new();
        let mut col = vec![BigInt::zero(); r];
        loop {
            let hom_ok = {
                let s = &coeffs.factors()[j];
                let s = BigInt::from(s.clone());
                col.iter().zip(coeffs.factors()).all(|(e, t)| {
                    let image = e * &s;
                    num_integer::Integer::mod_floor(&image, &BigInt::from(t.clone())).is_zero()
                })
            };
            if hom_ok {
                cols.push(col.clone());
            }
            let mut pos = r;
            loop {
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
                pos -= 1;
                col[pos] += 1;
                if BigInt::from(coeffs.factors()[pos].clone()) > col[pos] {
                    break;
                }
                col[pos] = BigInt::zero();
            }
            if pos == usize::MAX {
                break;
            }
        }
        column_choices.push(cols);
    }
    let mut candidates: Vec<AbHom> = Vec::new();
    let mut stack = vec![0usize; r];
    'outer: loop {
        let cols: Vec<Vec<BigInt>> = (0..r)
            .map(|j| column_choices[j][stack[j]].clone())
            .collect();
        let m = Matrix::from_columns(r, &cols);
        if let Ok(h) = AbHom::new(coeffs.clone(), coeffs.clone(), m) {
            // Keep automorphisms only: the map must permute the finite group.
            if is_bijective_endo(&h, coeffs, &order) {
                candidates.push(h);
            }
        }
        if candidates.len() > bound {
            return Err(CohomologyError::Action(format!(
                "more than {bound} automorphism candidates; raise the bound"
            )));
        }
        let mut j = r;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            stack[j] += 1;
            if stack[j] < column_choices[j].len() {
                break;
            }
            stack[j] = 0;
        }
    }

    // Assign candidates to elements by backtracking on the degree-2 law.
    let id_index = candidates
        .iter()
        .position(|h| h.is_identity())
        .expect("identity is always a candidate");
    let count = table.element_count();
    let mut assignment = vec![usize::MAX; count];
    assignment[UNIT] = id_index;
    let mut results = Vec::new();
    assign_actions(
        table,
        coeffs,
        &candidates,
        &mut assignment,
        1,
        &mut results,
    );
    Ok(results)
}

fn is_bijective_endo(h: &AbHom, coeffs: &FinAbGroup, order: &num_bigint::BigUint) -> bool {
    use num_bigint::BigUint;
    use num_traits::One;
    // Apply to every element of the (small) group and watch for collisions.
    let mut seen = std::collections::HashSet::new();
    let r = coeffs.rank();
    let mut v = vec![BigInt::zero(); r];
    let mut count = BigUint::zero();
    loop {
        let image = h.apply(&v);
        if !seen.insert(image) {
            return false;
        }
        count += BigUint::one();
        let mut pos = r;
        loop {
            if pos == 0 {
                return count == *order;
            }
            pos -= 1;
            v[pos] += 1;
            if BigInt::from(coeffs.factors()[pos].clone()) > v[pos] {
                break;
            }
            v[pos] = BigInt::zero();
        }
    }
}

fn assign_actions(
    table: &Arc<PartialGroupTable>,
    coeffs: &FinAbGroup,
    candidates: &[AbHom],
    assignment: &mut Vec<usize>,
    x: ElemId,
    results: &mut Vec<PGAction>,
) {
    let count = table.element_count();
    if x == count {
        let phi: Vec<AbHom> = assignment.iter().map(|&i| candidates[i].clone()).collect();
        if let Ok(action) = PGAction::new(table.clone(), coeffs.clone(), phi) {
            results.push(action);
        }
        return;
    }
    for i in 0..candidates.len() {
        assignment[x] = i;
        if actions_consistent(table, candidates, assignment) {
            assign_actions(table, coeffs, candidates, assignment, x + 1, results);
        }
        assignment[x] = usize::MAX;
    }
}

fn actions_consistent(
    table: &Arc<PartialGroupTable>,
    candidates: &[AbHom],
    assignment: &[usize],
) -> bool {
    for w in table.simplices(2).unwrap() {
        let (a, b) = (w.get(0), w.get(1));
        let p = table.prod2(a, b).unwrap();
        if assignment[a] == usize::MAX
            || assignment[b] == usize::MAX
            || assignment[p] == usize::MAX
        {
            continue;
        }
        let composed = candidates[assignment[a]]
            .compose(&candidates[assignment[b]])
            .expect("candidates share the presentation");
        if composed != candidates[assignment[p]] {
            return false;
        }
    }
    true
}
