use constructions::{bar, free_partial_group, FiniteGroupTable};
use homotopy_aut::{check_homotopy, is_homomorphism, PGHom};
use std::sync::Arc;

fn gens(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn identity_is_a_homomorphism() {
    let t = Arc::new(free_partial_group(&gens(&["a"]), 4).unwrap());
    let id = PGHom::identity(&t);
    assert!(is_homomorphism(&t, &t, id.map()).is_ok());
}

#[test]
fn free_to_bar_collapse_is_a_homomorphism() {
    // a and ~a both map to the involution of Z/2: every alternating word
    // lands in a composable word and products match by parity.
    let free = free_partial_group(&gens(&["a"]), 4).unwrap();
    let z2 = bar(&FiniteGroupTable::cyclic(2), 4).unwrap();
    assert!(is_homomorphism(&free, &z2, &[0, 1, 1]).is_ok());
}

#[test]
fn bar_to_free_fails_with_witness() {
    let free = free_partial_group(&gens(&["a"]), 4).unwrap();
    let z2 = bar(&FiniteGroupTable::cyclic(2), 4).unwrap();
    let err = is_homomorphism(&z2, &free, &[0, 1]).unwrap_err();
    assert_eq!(err.witness, "(g, g)");
}

#[test]
fn bar_is_functorial_on_group_homomorphisms() {
    // Z/2 -> Z/4 doubling, Z/4 -> Z/2 reduction, S_3 -> Z/2 sign.
    let z2 = Arc::new(bar(&FiniteGroupTable::cyclic(2), 4).unwrap());
    let z4 = Arc::new(bar(&FiniteGroupTable::cyclic(4), 4).unwrap());
    assert!(PGHom::new(z2.clone(), z4.clone(), vec![0, 2]).is_ok());
    assert!(PGHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).is_ok());

    let s3 = Arc::new(bar(&FiniteGroupTable::symmetric(3), 3).unwrap());
    // Element order: s012(unit), s021, s102, s120, s201, s210; the three
    // transpositions s021, s102, s210 are odd.
    let sign = vec![0, 1, 1, 0, 0, 1];
    assert!(PGHom::new(s3, z2, sign).is_ok());
}

#[test]
fn constant_homotopy_via_unit() {
    let t = Arc::new(bar(&FiniteGroupTable::cyclic(3), 4).unwrap());
    let id = PGHom::identity(&t);
    assert!(check_homotopy(&id, &id, 0).is_ok());
}

#[test]
fn conjugation_homotopy_in_a_bar_table() {
    // In BG, conjugation by t is homotopic to the identity through t.
    let s3 = FiniteGroupTable::symmetric(3);
    let table = Arc::new(bar(&s3, 3).unwrap());
    let t = table.element_by_name("s102").unwrap();
    // Conjugation map computed from the group table; bar keeps the order.
    let map: Vec<usize> = (0..s3.order())
        .map(|x| s3.mul(s3.mul(t, x), s3.inv(t)))
        .collect();
    let conj = PGHom::new(table.clone(), table.clone(), map).unwrap();
    let id = PGHom::identity(&table);
    assert!(check_homotopy(&conj, &id, t).is_ok());
    // The identity is NOT homotopic to itself through a non-central element.
    assert!(check_homotopy(&id, &id, t).is_err());
}

#[test]
fn free_generator_is_not_a_self_homotopy() {
    let free = Arc::new(free_partial_group(&gens(&["a"]), 4).unwrap());
    let id = PGHom::identity(&free);
    let a = free.element_by_name("a").unwrap();
    let err = check_homotopy(&id, &id, a).unwrap_err();
    // The 1-simplex (a) is the witness: (a, a) is not composable.
    assert_eq!(err.witness, "(a)");
}

#[test]
fn composition_and_inverse() {
    let free = Arc::new(free_partial_group(&gens(&["a"]), 4).unwrap());
    // The swap a <-> ~a is an automorphism of order two.
    let swap = PGHom::new(free.clone(), free.clone(), vec![0, 2, 1]).unwrap();
    assert!(swap.compose(&swap) == PGHom::identity(&free));
    assert_eq!(swap.inverse().unwrap(), swap);
}
