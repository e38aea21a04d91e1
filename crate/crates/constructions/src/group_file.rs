//! Multiplication-table files for finite groups (JSON):
//! `{"elements": ["1", "g"], "table": [["1", "g"], ["g", "1"]]}`
//! where `table[a][b]` names the product of elements `a` and `b`.

use crate::{FiniteGroupTable, GroupError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Serialize, Deserialize)]
struct GroupFile {
    elements: Vec<String>,
    table: Vec<Vec<String>>,
}

pub fn group_from_json(s: &str) -> Result<FiniteGroupTable, GroupError> {
    let file: GroupFile =
        serde_json::from_str(s).map_err(|e| GroupError::Invalid(e.to_string()))?;
    let lookup: HashMap<&str, usize> = file
        .elements
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    if lookup.len() != file.elements.len() {
        return Err(GroupError::Invalid("duplicate element name".into()));
    }
    let mut mul = Vec::with_capacity(file.table.len());
    for row in &file.table {
        let ids: Result<Vec<usize>, GroupError> = row
            .iter()
            .map(|n| {
                lookup
                    .get(n.as_str())
                    .copied()
                    .ok_or_else(|| GroupError::Invalid(format!("unknown element \"{n}\"")))
            })
            .collect();
        mul.push(ids?);
    }
    FiniteGroupTable::new(file.elements, mul)
}

pub fn group_to_json(g: &FiniteGroupTable) -> String {
    let table = (0..g.order())
        .map(|a| {
            (0..g.order())
                .map(|b| g.name(g.mul(a, b)).to_string())
                .collect()
        })
        .collect();
    let file = GroupFile {
        elements: g.names().to_vec(),
        table,
    };
    serde_json::to_string_pretty(&file).expect("group file serializes")
}
