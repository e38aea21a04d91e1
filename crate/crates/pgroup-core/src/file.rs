//! Partial-group spec files (JSON, UTF-8).
//!
//! ```json
//! {"elements": ["1", "a", "~a"],
//!  "inv": {"a": "~a", "~a": "a"},
//!  "max_degree": 4,
//!  "domain": {"2": [["a", "~a"], ...], "3": [...]},
//!  "product": [["a", "~a", "1"], ...]}
//! ```
//!
//! Degrees 0 and 1 are implicit. Parsing performs structural checks only;
//! axiom checking (including required unit/inverse pairs) is `validate`.

use crate::table::PartialGroupTable;
use crate::word::Word;
use crate::{ElemId, Error, UNIT};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Serialize, Deserialize)]
struct PartialGroupFile {
    elements: Vec<String>,
    inv: BTreeMap<String, String>,
    max_degree: usize,
    domain: BTreeMap<String, Vec<Vec<String>>>,
    product: Vec<(String, String, String)>,
}

fn structural(e: impl std::fmt::Display) -> Error {
    Error::Structural(e.to_string())
}

pub fn from_json(s: &str) -> Result<PartialGroupTable, Error> {
    let file: PartialGroupFile = serde_json::from_str(s).map_err(structural)?;
    let lookup: HashMap<&str, ElemId> = file
        .elements
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    if lookup.len() != file.elements.len() {
        return Err(structural("duplicate element name"));
    }
    let resolve = |name: &str| -> Result<ElemId, Error> {
        lookup
            .get(name)
            .copied()
            .ok_or_else(|| structural(format!("unknown element name \"{name}\"")))
    };

    let mut inv = vec![usize::MAX; file.elements.len()];
    inv[UNIT] = UNIT;
    for (from, to) in &file.inv {
        inv[resolve(from)?] = resolve(to)?;
    }
    if let Some(x) = inv.iter().position(|&v| v == usize::MAX) {
        return Err(structural(format!(
            "involution missing for element \"{}\"",
            file.elements[x]
        )));
    }

    let mut domain = BTreeMap::new();
    for (degree, words) in &file.domain {
        let degree: usize = degree
            .parse()
            .map_err(|_| structural(format!("bad domain degree key \"{degree}\"")))?;
        let mut ws = Vec::with_capacity(words.len());
        for names in words {
            let entries: Result<Vec<ElemId>, Error> =
                names.iter().map(|n| resolve(n)).collect();
            ws.push(Word::new(entries?));
        }
        domain.insert(degree, ws);
    }

    let mut prod2 = HashMap::new();
    for (a, b, p) in &file.product {
        prod2.insert((resolve(a)?, resolve(b)?), resolve(p)?);
    }

    PartialGroupTable::new(file.elements, inv, file.max_degree, domain, prod2)
}

pub fn to_json(table: &PartialGroupTable) -> String {
    let name = |x: ElemId| table.name(x).to_string();
    let inv = (0..table.element_count())
        .filter(|&x| x != UNIT)
        .map(|x| (name(x), name(table.inv(x))))
        .collect();
    let mut domain = BTreeMap::new();
    for degree in 2..=table.max_degree() {
        let words: Vec<Vec<String>> = table
            .simplices(degree)
            .unwrap()
            .iter()
            .map(|w| w.entries().iter().map(|&x| name(x)).collect())
            .collect();
        domain.insert(degree.to_string(), words);
    }
    let product = table
        .simplices(2)
        .unwrap()
        .iter()
        .map(|w| {
            let p = table.prod2(w.get(0), w.get(1)).unwrap();
            (name(w.get(0)), name(w.get(1)), name(p))
        })
        .collect();
    let file = PartialGroupFile {
        elements: table.names().to_vec(),
        inv,
        max_degree: table.max_degree(),
        domain,
        product,
    };
    serde_json::to_string_pretty(&file).expect("partial-group file serializes")
}
