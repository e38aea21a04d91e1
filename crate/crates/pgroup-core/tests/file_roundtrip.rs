mod common;

use common::{bar_z2, free_one};
use pgroup_core::file::{from_json, to_json};
use pgroup_core::{Error, Violation};

#[test]
fn emit_parse_roundtrip() {
    for table in [bar_z2(3), free_one(4)] {
        let json = to_json(&table);
        let back = from_json(&json).unwrap();
        assert_eq!(back, table);
        // Emission is deterministic.
        assert_eq!(to_json(&back), json);
    }
}

#[test]
fn parse_rejects_unknown_names() {
    let json = r#"{
        "elements": ["1", "a", "~a"],
        "inv": {"a": "~a", "~a": "a"},
        "max_degree": 2,
        "domain": {"2": [["a", "b"]]},
        "product": [["a", "b", "1"]]
    }"#;
    assert!(matches!(from_json(json), Err(Error::Structural(_))));
}

#[test]
fn parse_rejects_missing_involution() {
    let json = r#"{
        "elements": ["1", "a", "~a"],
        "inv": {"a": "~a"},
        "max_degree": 2,
        "domain": {"2": []},
        "product": []
    }"#;
    assert!(matches!(from_json(json), Err(Error::Structural(_))));
}

#[test]
fn file_omitting_unit_pairs_fails_validation() {
    // Structurally fine, but the required unit and inverse pairs are absent
    // from the degree-2 domain, so validation must reject it.
    let json = r#"{
        "elements": ["1", "a", "~a"],
        "inv": {"a": "~a", "~a": "a"},
        "max_degree": 2,
        "domain": {"2": [["a", "~a"], ["~a", "a"]]},
        "product": [["a", "~a", "1"], ["~a", "a", "1"]]
    }"#;
    let table = from_json(json).unwrap();
    let report = table.validate();
    assert!(!report.is_valid());
    assert!(report
        .violations()
        .iter()
        .any(|v| matches!(v, Violation::MissingUnitPair { .. })));
}
