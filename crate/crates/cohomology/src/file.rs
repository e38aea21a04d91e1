//! Action spec files (JSON):
//!
//! ```json
//! {"group": "free_a.json",
//!  "coeffs": [2],
//!  "phi": {"a": [[1]], "~a": [[1]]}}
//! ```
//!
//! `group` names the partial-group file (resolved by the caller), `coeffs`
//! lists invariant factors, and `phi` gives an integer matrix over the
//! coefficient presentation per non-unit element; the unit is implied.

use crate::action::PGAction;
use crate::CohomologyError;
use abelian_linalg::{AbHom, FinAbGroup, Matrix};
use pgroup_core::{PartialGroupTable, UNIT};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Serialize, Deserialize)]
pub struct ActionFile {
    pub group: String,
    pub coeffs: Vec<u64>,
    pub phi: BTreeMap<String, Vec<Vec<i64>>>,
}

pub fn parse_action_file(s: &str) -> Result<ActionFile, CohomologyError> {
    serde_json::from_str(s).map_err(|e| CohomologyError::Action(e.to_string()))
}

/// Builds an action from a parsed file against an already-loaded table.
pub fn build_action(
    table: Arc<PartialGroupTable>,
    file: &ActionFile,
) -> Result<PGAction, CohomologyError> {
    let coeffs = FinAbGroup::from_u64s(&file.coeffs);
    let mut phi = Vec::with_capacity(table.element_count());
    for x in 0..table.element_count() {
        if x == UNIT {
            phi.push(AbHom::identity(&coeffs));
            continue;
        }
        let name = table.name(x);
        let rows = file.phi.get(name).ok_or_else(|| {
            CohomologyError::Action(format!("phi missing for element \"{name}\""))
        })?;
        let matrix = Matrix::from_rows(
            &rows
                .iter()
                .map(|r| r.to_vec())
                .collect::<Vec<_>>(),
        );
        phi.push(
            AbHom::new(coeffs.clone(), coeffs.clone(), matrix).map_err(|e| {
                CohomologyError::Action(format!("phi(\"{name}\"): {e}"))
            })?,
        );
    }
    PGAction::new(table, coeffs, phi)
}

pub fn action_to_json(action: &PGAction, group_path: &str) -> String {
    let table = action.table();
    let coeffs = action
        .coeffs()
        .factors()
        .iter()
        .map(|f| {
            use num_traits::ToPrimitive;
            f.to_u64().expect("desk-scale factors fit in u64")
        })
        .collect();
    let mut phi = BTreeMap::new();
    for x in 1..table.element_count() {
        let m = action.phi(x).matrix();
        let rows: Vec<Vec<i64>> = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| {
                        use num_traits::ToPrimitive;
                        m.get(i, j).to_i64().expect("reduced entries fit in i64")
                    })
                    .collect()
            })
            .collect();
        phi.insert(table.name(x).to_string(), rows);
    }
    let file = ActionFile {
        group: group_path.to_string(),
        coeffs,
        phi,
    };
    serde_json::to_string_pretty(&file).expect("action file serializes")
}
