use constructions::{bar, free_partial_group, product, FiniteGroupTable};
use pgroup_core::{PartialGroupTable, Word, UNIT};

fn gens(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[test]
fn bar_sizes_and_validity() {
    let triv = bar(&FiniteGroupTable::trivial(), 3).unwrap();
    for n in 0..=3 {
        assert_eq!(triv.simplices(n).unwrap().len(), 1);
    }
    assert!(triv.validate().is_valid());

    let z2 = bar(&FiniteGroupTable::cyclic(2), 3).unwrap();
    assert_eq!(z2.simplices(2).unwrap().len(), 4);

    let s3 = bar(&FiniteGroupTable::symmetric(3), 2).unwrap();
    assert_eq!(s3.element_count(), 6);
    assert_eq!(s3.simplices(2).unwrap().len(), 36);
}

#[test]
fn bar_validates_for_small_groups() {
    let groups = [
        FiniteGroupTable::cyclic(2),
        FiniteGroupTable::cyclic(3),
        FiniteGroupTable::cyclic(4),
        FiniteGroupTable::klein_four(),
        FiniteGroupTable::cyclic(6),
        FiniteGroupTable::symmetric(3),
    ];
    for g in &groups {
        let degree = if g.order() > 4 { 3 } else { 4 };
        let table = bar(g, degree).unwrap();
        let report = table.validate();
        assert!(report.is_valid(), "bar of order {} fails: {report}", g.order());
    }
}

#[test]
fn free_on_empty_set_is_the_trivial_partial_group() {
    let empty = free_partial_group(&[], 4).unwrap();
    assert_eq!(empty, bar(&FiniteGroupTable::trivial(), 4).unwrap());
}

#[test]
fn free_partial_group_shapes() {
    let one = free_partial_group(&gens(&["a"]), 4).unwrap();
    assert_eq!(one.names(), &["1", "a", "~a"]);
    assert_eq!(one.inv(1), 2);
    assert_eq!(one.simplices(2).unwrap().len(), 7);
    assert!(one.validate().is_valid());

    let two = free_partial_group(&gens(&["a", "b"]), 4).unwrap();
    assert_eq!(two.element_count(), 5);
    // 9 unit-padded pairs plus (a,~a),(~a,a),(b,~b),(~b,b); (a,b) is excluded.
    assert_eq!(two.simplices(2).unwrap().len(), 13);
    let a = two.element_by_name("a").unwrap();
    let b = two.element_by_name("b").unwrap();
    assert!(!two.contains(&Word::pair(a, b)));
    assert!(two.validate().is_valid());
}

#[test]
fn free_product_rule_agrees_with_contraction() {
    // The closed-form count rule and the iterated-contraction product must
    // agree on every domain word.
    let table = free_partial_group(&gens(&["a", "b"]), 4).unwrap();
    let gen_of = |x: usize| if x > 2 { x - 2 } else { x };
    for n in 0..=4 {
        for w in table.simplices(n).unwrap() {
            let core: Vec<usize> = w.entries().iter().copied().filter(|&x| x != UNIT).collect();
            let expected = if core.is_empty() {
                UNIT
            } else {
                let g = gen_of(core[0]);
                let plus = core.iter().filter(|&&x| x == g).count();
                let minus = core.len() - plus;
                match plus.cmp(&minus) {
                    std::cmp::Ordering::Greater => g,
                    std::cmp::Ordering::Equal => UNIT,
                    std::cmp::Ordering::Less => g + 2,
                }
            };
            assert_eq!(table.pi(w).unwrap(), expected, "word {}", table.render_word(w));
        }
    }
}

#[test]
fn all_units_word_is_in_every_degree() {
    // The empty reduction counts as "built on no generator"; inclusion is
    // forced by degeneracy closure.
    let table = free_partial_group(&gens(&["a"]), 4).unwrap();
    for n in 2..=4 {
        assert!(table.contains(&Word::new(vec![UNIT; n])));
    }
}

#[test]
fn product_with_trivial_is_the_same_table_up_to_names() {
    let t = free_partial_group(&gens(&["a"]), 4).unwrap();
    let triv = bar(&FiniteGroupTable::trivial(), 4).unwrap();
    let p = product(&t, &triv).unwrap();
    // Pair encoding with a one-element second factor is the identity on ids.
    assert_eq!(p.element_count(), t.element_count());
    for n in 0..=4 {
        assert_eq!(p.simplices(n).unwrap(), t.simplices(n).unwrap());
    }
    assert_eq!(p.prod2_table(), t.prod2_table());
    assert_eq!(p.inv_map(), t.inv_map());
}

#[test]
fn product_of_bars_is_bar_of_product() {
    let z2 = FiniteGroupTable::cyclic(2);
    let p = product(&bar(&z2, 3).unwrap(), &bar(&z2, 3).unwrap()).unwrap();
    let expected = bar(&FiniteGroupTable::klein_four(), 3).unwrap();
    assert_eq!(p, expected);
}

#[test]
fn product_sizes_and_validity() {
    let free = free_partial_group(&gens(&["a"]), 4).unwrap();
    let z2 = bar(&FiniteGroupTable::cyclic(2), 4).unwrap();
    let p = product(&free, &z2).unwrap();
    assert_eq!(p.element_count(), 6);
    assert_eq!(p.simplices(2).unwrap().len(), 7 * 4);
    assert!(p.validate().is_valid());
}

#[test]
fn product_truncates_to_the_smaller_degree() {
    let a = bar(&FiniteGroupTable::cyclic(2), 4).unwrap();
    let b = bar(&FiniteGroupTable::cyclic(3), 3).unwrap();
    let p: PartialGroupTable = product(&a, &b).unwrap();
    assert_eq!(p.max_degree(), 3);
}
