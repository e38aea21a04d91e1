mod common;

use common::{bar_z2, free_one};
use pgroup_core::{Error, PartialGroupTable, Word};

#[test]
fn face_examples() {
    let free = free_one(4);
    let (a, ta) = (1, 2);
    // d_1 contracts (a, ~a) to the unit 1-simplex.
    assert_eq!(
        free.face(&Word::pair(a, ta), 1).unwrap(),
        Word::single(0)
    );
    // d_0 drops the first entry.
    assert_eq!(free.face(&Word::pair(a, ta), 0).unwrap(), Word::single(ta));

    let bar = bar_z2(4);
    let g = 1;
    // d_2 on (g, g, g) contracts the last pair: g*g = 1.
    assert_eq!(
        bar.face(&Word::new(vec![g, g, g]), 2).unwrap(),
        Word::pair(g, 0)
    );
    assert!(matches!(
        bar.face(&Word::pair(g, g), 3),
        Err(Error::Index { index: 3, degree: 2 })
    ));
}

#[test]
fn degeneracy_examples() {
    let free = free_one(4);
    let (a, ta) = (1, 2);
    assert_eq!(free.degeneracy(&Word::empty(), 0).unwrap(), Word::single(0));
    assert_eq!(
        free.degeneracy(&Word::pair(a, ta), 1).unwrap(),
        Word::new(vec![a, 0, ta])
    );
    let bar = bar_z2(4);
    assert_eq!(
        bar.degeneracy(&Word::single(1), 0).unwrap(),
        Word::pair(0, 1)
    );
    // Exceeding the truncation degree fails loudly.
    let full = Word::new(vec![1, 1, 1, 1]);
    assert!(matches!(
        bar.degeneracy(&full, 0),
        Err(Error::Truncation { degree: 5, max_degree: 4 })
    ));
}

#[test]
fn simplices_enumeration() {
    let free = free_one(4);
    // All 9 pairs over {1, a, ~a} except (a, a) and (~a, ~a).
    assert_eq!(free.simplices(2).unwrap().len(), 7);
    assert_eq!(free.simplices(0).unwrap(), &[Word::empty()]);

    let bar = bar_z2(4);
    assert_eq!(bar.simplices(2).unwrap().len(), 4);
    assert!(matches!(
        bar.simplices(5),
        Err(Error::Truncation { degree: 5, max_degree: 4 })
    ));

    // Deterministic lexicographic order and no duplicates (spine injectivity).
    for table in [&free, &bar] {
        for n in 0..=4 {
            let words = table.simplices(n).unwrap();
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}

#[test]
fn degenerate_flag_is_unit_membership() {
    let bar = bar_z2(4);
    for n in 0..=4 {
        for w in bar.simplices(n).unwrap() {
            assert_eq!(w.is_degenerate(), w.entries().contains(&0));
        }
    }
}

fn check_simplicial_identities(table: &PartialGroupTable) {
    let max = table.max_degree();
    for n in 1..=max {
        for w in table.simplices(n).unwrap() {
            // d_i d_j = d_{j-1} d_i for i < j
            for j in 1..=n {
                for i in 0..j {
                    if n >= 2 {
                        let a = table.face(&table.face(w, j).unwrap(), i).unwrap();
                        let b = table.face(&table.face(w, i).unwrap(), j - 1).unwrap();
                        assert_eq!(a, b, "d_{i} d_{j} on {}", table.render_word(w));
                    }
                }
            }
            if n + 2 <= max {
                // s_i s_j = s_{j+1} s_i for i <= j
                for j in 0..=n {
                    for i in 0..=j {
                        let a = table
                            .degeneracy(&table.degeneracy(w, j).unwrap(), i)
                            .unwrap();
                        let b = table
                            .degeneracy(&table.degeneracy(w, i).unwrap(), j + 1)
                            .unwrap();
                        assert_eq!(a, b, "s_{i} s_{j} on {}", table.render_word(w));
                    }
                }
            }
            if n + 1 <= max {
                // d_i s_j interchange
                for j in 0..=n {
                    let sj = table.degeneracy(w, j).unwrap();
                    for i in 0..=n + 1 {
                        let got = table.face(&sj, i).unwrap();
                        if i == j || i == j + 1 {
                            assert_eq!(&got, w);
                        } else if i < j {
                            let expect = table
                                .degeneracy(&table.face(w, i).unwrap(), j - 1)
                                .unwrap();
                            assert_eq!(got, expect);
                        } else {
                            let expect = table
                                .degeneracy(&table.face(w, i - 1).unwrap(), j)
                                .unwrap();
                            assert_eq!(got, expect);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn simplicial_identities_hold_exhaustively() {
    check_simplicial_identities(&bar_z2(4));
    check_simplicial_identities(&free_one(4));
    check_simplicial_identities(&free_one(5));
}

/// Every maximal sequence of adjacent contractions of a domain word ends at
/// the same element.
fn all_contraction_results(table: &PartialGroupTable, w: &Word) -> Vec<usize> {
    if w.is_empty() {
        return vec![0];
    }
    if w.len() == 1 {
        return vec![w.get(0)];
    }
    let mut out = Vec::new();
    for p in 0..w.len() - 1 {
        let prod = table
            .prod2(w.get(p), w.get(p + 1))
            .unwrap_or_else(|| panic!("missing pair in valid table"));
        out.extend(all_contraction_results(table, &w.contract(p, prod)));
    }
    out
}

#[test]
fn pi_is_contraction_order_independent() {
    for table in [bar_z2(4), free_one(4)] {
        for n in 0..=table.max_degree() {
            for w in table.simplices(n).unwrap() {
                let results = all_contraction_results(&table, w);
                let pi = table.pi(w).unwrap();
                assert!(results.iter().all(|&r| r == pi), "word {}", table.render_word(w));
            }
        }
    }
}

#[test]
fn invert_word_examples_and_involution() {
    let free = free_one(4);
    let (a, ta) = (1, 2);
    assert_eq!(free.invert_word(&Word::pair(a, 0)), Word::pair(0, ta));
    assert_eq!(free.invert_word(&Word::empty()), Word::empty());
    assert_eq!(
        free.invert_word(&Word::new(vec![a, ta, a])),
        Word::new(vec![ta, a, ta])
    );
    for n in 0..=4 {
        for w in free.simplices(n).unwrap() {
            assert_eq!(free.invert_word(&free.invert_word(w)), *w);
        }
    }
}

#[test]
fn inversion_axiom_within_truncation() {
    for table in [bar_z2(4), free_one(4)] {
        let op = table.opposite();
        for n in 0..=table.max_degree() {
            for w in table.simplices(n).unwrap() {
                let iw = table.invert_word(w);
                // invert_word lands in the domain of the opposite table
                assert!(op.contains(&iw));
                if 2 * n <= table.max_degree() {
                    let combined = iw.concat(w);
                    assert_eq!(table.pi(&combined).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn opposite_is_involutive_and_transposes_products() {
    let free = free_one(4);
    let op = free.opposite();
    assert_eq!(op.opposite(), free);
    // (~a, a) is composable with product 1 in the opposite.
    assert_eq!(op.prod2(2, 1), Some(0));
    // Z/2 is abelian: the opposite is the same table.
    let bar = bar_z2(3);
    assert_eq!(bar.opposite(), bar);
    assert!(free.opposite().validate().is_valid());
}
