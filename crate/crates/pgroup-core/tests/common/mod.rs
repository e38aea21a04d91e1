use pgroup_core::{PartialGroupTable, Word};
use std::collections::{BTreeMap, HashMap};

/// Z/2 with every word composable, truncated at degree `n`. Elements `1, g`,
/// product is xor. Built by hand so these tests do not depend on the builder
/// crate they help to check.
pub fn bar_z2(n: usize) -> PartialGroupTable {
    let names = vec!["1".to_string(), "g".to_string()];
    let inv = vec![0, 1];
    let mut domain = BTreeMap::new();
    for degree in 2..=n {
        let words = (0..1usize << degree)
            .map(|bits| Word::new((0..degree).map(|k| (bits >> k) & 1).collect()))
            .collect();
        domain.insert(degree, words);
    }
    let mut prod2 = HashMap::new();
    for a in 0..2 {
        for b in 0..2 {
            prod2.insert((a, b), a ^ b);
        }
    }
    PartialGroupTable::new(names, inv, n, domain, prod2).unwrap()
}

fn alternating(w: &[usize]) -> bool {
    let core: Vec<usize> = w.iter().copied().filter(|&x| x != 0).collect();
    core.windows(2).all(|p| p[0] != p[1])
}

fn count_product(w: &[usize]) -> usize {
    let plus = w.iter().filter(|&&x| x == 1).count();
    let minus = w.iter().filter(|&&x| x == 2).count();
    match plus.cmp(&minus) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => 2,
    }
}

/// Free partial group on one generator `a`: elements `1, a, ~a`; the domain
/// words are the unit-padded alternating words, the product counts the
/// surplus of `a` over `~a`.
pub fn free_one(n: usize) -> PartialGroupTable {
    let names = vec!["1".to_string(), "a".to_string(), "~a".to_string()];
    let inv = vec![0, 2, 1];
    let mut domain = BTreeMap::new();
    for degree in 2..=n {
        let mut words = Vec::new();
        for code in 0..3usize.pow(degree as u32) {
            let mut c = code;
            let entries: Vec<usize> = (0..degree)
                .map(|_| {
                    let e = c % 3;
                    c /= 3;
                    e
                })
                .collect();
            if alternating(&entries) {
                words.push(Word::new(entries));
            }
        }
        domain.insert(degree, words);
    }
    let mut prod2 = HashMap::new();
    for a in 0..3 {
        for b in 0..3 {
            if alternating(&[a, b]) {
                prod2.insert((a, b), count_product(&[a, b]));
            }
        }
    }
    PartialGroupTable::new(names, inv, n, domain, prod2).unwrap()
}
