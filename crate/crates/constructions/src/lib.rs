//! Builders for the canonical examples of partial groups: the bar
//! construction of a finite group (every word composable), the free partial
//! group on a pointed set (only unit-padded alternating words composable),
//! and cartesian products.

mod group;
pub mod group_file;

pub use group::FiniteGroupTable;

use pgroup_core::{ElemId, Error, PartialGroupTable, Word, UNIT};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    Invalid(String),
}

/// All length-`degree` words over an alphabet of size `count`, in
/// lexicographic order.
fn all_words(count: usize, degree: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..count.pow(degree as u32)).map(move |code| {
        let mut c = code;
        let mut w = vec![0usize; degree];
        for pos in (0..degree).rev() {
            w[pos] = c % count;
            c /= count;
        }
        w
    })
}

/// The bar construction of a finite group, truncated at `max_degree`: the
/// unit comes first (renamed "1"), every length-n word is a domain word, and
/// the product is the group multiplication. `|D_n| = |G|^n`.
pub fn bar(g: &FiniteGroupTable, max_degree: usize) -> Result<PartialGroupTable, Error> {
    // Reorder so the unit is element 0.
    let order: Vec<usize> = std::iter::once(g.unit())
        .chain((0..g.order()).filter(|&x| x != g.unit()))
        .collect();
    let mut to_new = vec![0usize; g.order()];
    for (new, &old) in order.iter().enumerate() {
        to_new[old] = new;
    }
    let names: Vec<String> = order
        .iter()
        .enumerate()
        .map(|(new, &old)| {
            if new == 0 {
                "1".to_string()
            } else {
                g.name(old).to_string()
            }
        })
        .collect();
    let inv: Vec<ElemId> = order.iter().map(|&old| to_new[g.inv(old)]).collect();

    let n = g.order();
    let mut domain = BTreeMap::new();
    for degree in 2..=max_degree {
        let words = all_words(n, degree).map(Word::new).collect();
        domain.insert(degree, words);
    }
    let mut prod2 = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            prod2.insert(
                (to_new[a], to_new[b]),
                to_new[g.mul(a, b)],
            );
        }
    }
    PartialGroupTable::new(names, inv, max_degree, domain, prod2)
}

/// Whether the unit-free reduction of `w` is an alternating string on a
/// single generator. Ids `1..=k` are the generators, `k+1..=2k` their
/// inverses.
fn is_alternating(entries: &[ElemId], gens: usize) -> bool {
    let core: Vec<ElemId> = entries.iter().copied().filter(|&x| x != UNIT).collect();
    if core.is_empty() {
        return true;
    }
    let gen_of = |x: ElemId| if x > gens { x - gens } else { x };
    let g = gen_of(core[0]);
    core.iter().all(|&x| gen_of(x) == g) && core.windows(2).all(|p| p[0] != p[1])
}

/// Product of an alternating word by the count rule: more `x` than `~x`
/// gives `x`, equal counts give the unit, fewer give `~x`.
fn alternating_product(entries: &[ElemId], gens: usize) -> ElemId {
    debug_assert!(is_alternating(entries, gens));
    let core: Vec<ElemId> = entries.iter().copied().filter(|&x| x != UNIT).collect();
    let Some(&lead) = core.first() else {
        return UNIT;
    };
    let gen = if lead > gens { lead - gens } else { lead };
    let plus = core.iter().filter(|&&x| x == gen).count();
    let minus = core.len() - plus;
    match plus.cmp(&minus) {
        std::cmp::Ordering::Greater => gen,
        std::cmp::Ordering::Equal => UNIT,
        std::cmp::Ordering::Less => gen + gens,
    }
}

/// The free partial group on the pointed set `{1} ⊔ X* ⊔ ~X*`. The domain
/// words of each degree are generated by filtering all words over the
/// element set through the alternating-reduction predicate.
pub fn free_partial_group(generators: &[String], max_degree: usize) -> Result<PartialGroupTable, Error> {
    let k = generators.len();
    let mut names = Vec::with_capacity(2 * k + 1);
    names.push("1".to_string());
    names.extend(generators.iter().cloned());
    names.extend(generators.iter().map(|g| format!("~{g}")));
    let mut inv = vec![UNIT];
    inv.extend((1..=k).map(|i| i + k));
    inv.extend((1..=k).map(|i| i));

    let count = 2 * k + 1;
    let mut domain = BTreeMap::new();
    for degree in 2..=max_degree {
        let words = all_words(count, degree)
            .filter(|w| is_alternating(w, k))
            .map(Word::new)
            .collect();
        domain.insert(degree, words);
    }
    let mut prod2 = HashMap::new();
    for a in 0..count {
        for b in 0..count {
            if is_alternating(&[a, b], k) {
                prod2.insert((a, b), alternating_product(&[a, b], k));
            }
        }
    }
    PartialGroupTable::new(names, inv, max_degree, domain, prod2)
}

/// Cartesian product: elements are pairs (first factor major), the unit pair
/// is renamed "1", domain words are componentwise pairs of domain words, and
/// products and inverses act componentwise. Truncated at the smaller of the
/// two degrees.
pub fn product(a: &PartialGroupTable, b: &PartialGroupTable) -> Result<PartialGroupTable, Error> {
    let nb = b.element_count();
    let encode = |xa: ElemId, xb: ElemId| xa * nb + xb;
    let max_degree = a.max_degree().min(b.max_degree());
    let mut names = Vec::with_capacity(a.element_count() * nb);
    for xa in 0..a.element_count() {
        for xb in 0..nb {
            if xa == UNIT && xb == UNIT {
                names.push("1".to_string());
            } else {
                names.push(format!("({},{})", a.name(xa), b.name(xb)));
            }
        }
    }
    let mut inv = Vec::with_capacity(names.len());
    for xa in 0..a.element_count() {
        for xb in 0..nb {
            inv.push(encode(a.inv(xa), b.inv(xb)));
        }
    }
    let mut domain = BTreeMap::new();
    for degree in 2..=max_degree {
        let mut words = Vec::new();
        for wa in a.simplices(degree)? {
            for wb in b.simplices(degree)? {
                let entries = wa
                    .entries()
                    .iter()
                    .zip(wb.entries())
                    .map(|(&xa, &xb)| encode(xa, xb))
                    .collect();
                words.push(Word::new(entries));
            }
        }
        domain.insert(degree, words);
    }
    let mut prod2 = HashMap::new();
    for wa in a.simplices(2)? {
        let pa = a.prod2(wa.get(0), wa.get(1)).unwrap();
        for wb in b.simplices(2)? {
            let pb = b.prod2(wb.get(0), wb.get(1)).unwrap();
            prod2.insert(
                (
                    encode(wa.get(0), wb.get(0)),
                    encode(wa.get(1), wb.get(1)),
                ),
                encode(pa, pb),
            );
        }
    }
    PartialGroupTable::new(names, inv, max_degree, domain, prod2)
}
