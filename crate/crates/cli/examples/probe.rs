// Timing probe for the corpus pieces that dominate the acceptance suite.
use abelian_linalg::FinAbGroup;
use cohomology::{compare_theories, enumerate_actions, PGAction};
use constructions::{bar, free_partial_group, product, FiniteGroupTable};
use std::sync::Arc;
use std::time::Instant;

fn main() {
    let tables: Vec<(&str, Arc<pgroup_core::PartialGroupTable>)> = vec![
        ("bar(Z/2)", Arc::new(bar(&FiniteGroupTable::cyclic(2), 4).unwrap())),
        ("bar(Z/3)", Arc::new(bar(&FiniteGroupTable::cyclic(3), 4).unwrap())),
        ("bar(Z/4)", Arc::new(bar(&FiniteGroupTable::cyclic(4), 4).unwrap())),
        ("bar(V4)", Arc::new(bar(&FiniteGroupTable::klein_four(), 4).unwrap())),
        ("bar(Z/5)", Arc::new(bar(&FiniteGroupTable::cyclic(5), 4).unwrap())),
        ("free(a)", Arc::new(free_partial_group(&["a".into()], 4).unwrap())),
        ("free(a,b)", Arc::new(free_partial_group(&["a".into(), "b".into()], 4).unwrap())),
        (
            "free(a) x bar(Z/2)",
            Arc::new(
                product(
                    &free_partial_group(&["a".into()], 4).unwrap(),
                    &bar(&FiniteGroupTable::cyclic(2), 4).unwrap(),
                )
                .unwrap(),
            ),
        ),
    ];
    for (name, t) in &tables {
        println!(
            "{name}: elements={} |D_3|={} |D_4|={}",
            t.element_count(),
            t.simplices(3).unwrap().len(),
            t.simplices(4).unwrap().len()
        );
    }
    for coeffs in [vec![2u64, 2], vec![3, 3], vec![2, 4], vec![9]] {
        let g = FinAbGroup::from_u64s(&coeffs);
        for (name, t) in &tables {
            let t0 = Instant::now();
            let actions = enumerate_actions(t, &g, 50_000).unwrap();
            let enum_t = t0.elapsed();
            let action = PGAction::trivial(t.clone(), g.clone());
            let t0 = Instant::now();
            let ok = compare_theories(&action, 3).unwrap();
            println!(
                "{name} coeffs {g}: {} actions (enum {enum_t:.2?}), compare3 {:.2?} ok={ok}",
                actions.len(),
                t0.elapsed()
            );
        }
    }
}
