use crate::twisted::ExtensionTable;
use crate::ExtensionError;
use homotopy_aut::{is_homomorphism, SearchError};
use pgroup_core::{ElemId, Word, UNIT};

const UNSET: ElemId = usize::MAX;

/// Whether two extensions of the same base by the same fiber are
/// equivalent: some isomorphism of the total spaces fixes the fiber
/// inclusion pointwise and commutes with the projections. The ladder
/// constraints shrink the search to one fiber bijection per base element;
/// candidates are pruned on degree-2 consistency.
pub fn extension_equivalent(
    e1: &ExtensionTable,
    e2: &ExtensionTable,
    bound: usize,
) -> Result<bool, ExtensionError> {
    if **e1.base() != **e2.base() || **e1.fiber() != **e2.fiber() {
        return Err(ExtensionError::Unsupported(
            "extensions have different base or fiber".into(),
        ));
    }
    let t1 = e1.total();
    let t2 = e2.total();
    let count = t1.element_count();
    if count != t2.element_count() {
        return Ok(false);
    }
    if count > bound {
        return Err(ExtensionError::Search(SearchError::BoundExceeded {
            count,
            bound,
        }));
    }

    let mut state = Equiv {
        e1,
        e2,
        map: vec![UNSET; count],
        used: vec![false; count],
        found: false,
    };
    // The fiber over the unit is fixed pointwise.
    for x in 0..e1.fiber().element_count() {
        let from = e1.encode(x, UNIT);
        let to = e2.encode(x, UNIT);
        state.map[from] = to;
        state.used[to] = true;
    }
    state.recurse(0);
    Ok(state.found)
}

struct Equiv<'a> {
    e1: &'a ExtensionTable,
    e2: &'a ExtensionTable,
    map: Vec<ElemId>,
    used: Vec<bool>,
    found: bool,
}

impl Equiv<'_> {
    fn consistent(&self) -> bool {
        let t1 = self.e1.total();
        let t2 = self.e2.total();
        for p in 0..self.map.len() {
            if self.map[p] == UNSET {
                continue;
            }
            if t2.inv(self.map[p]) != self.map[t1.inv(p)] && self.map[t1.inv(p)] != UNSET {
                return false;
            }
            for q in 0..self.map.len() {
                if self.map[q] == UNSET {
                    continue;
                }
                let in_1 = t1.contains(&Word::pair(p, q));
                let in_2 = t2.contains(&Word::pair(self.map[p], self.map[q]));
                if in_1 != in_2 {
                    return false;
                }
                if in_1 {
                    let prod = t1.prod2(p, q).unwrap();
                    if self.map[prod] != UNSET
                        && t2.prod2(self.map[p], self.map[q]) != Some(self.map[prod])
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn recurse(&mut self, e: ElemId) {
        if self.found {
            return;
        }
        let count = self.map.len();
        if e == count {
            let t1 = self.e1.total();
            let t2 = self.e2.total();
            if is_homomorphism(t1, t2, &self.map).is_ok() {
                let mut inverse = vec![0; count];
                for (p, &q) in self.map.iter().enumerate() {
                    inverse[q] = p;
                }
                if is_homomorphism(t2, t1, &inverse).is_ok() {
                    self.found = true;
                }
            }
            return;
        }
        if self.map[e] != UNSET {
            self.recurse(e + 1);
            return;
        }
        // Projection must commute: the image keeps the base component.
        let (_, g) = self.e1.decode(e);
        for x in 0..self.e2.fiber().element_count() {
            let y = self.e2.encode(x, g);
            if self.used[y] {
                continue;
            }
            self.map[e] = y;
            self.used[y] = true;
            if self.consistent() {
                self.recurse(e + 1);
            }
            self.map[e] = UNSET;
            self.used[y] = false;
        }
    }
}
