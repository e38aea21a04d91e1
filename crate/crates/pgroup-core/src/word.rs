use crate::{ElemId, UNIT};

/// A finite sequence of elements. Domain words of length `n` are the
/// `n`-simplices of the partial group; the length-0 word is the empty word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word(Vec<ElemId>);

impl Word {
    pub fn new(entries: Vec<ElemId>) -> Self {
        Word(entries)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(x: ElemId) -> Self {
        Word(vec![x])
    }

    pub fn pair(a: ElemId, b: ElemId) -> Self {
        Word(vec![a, b])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[ElemId] {
        &self.0
    }

    pub fn get(&self, i: usize) -> ElemId {
        self.0[i]
    }

    pub fn first(&self) -> Option<ElemId> {
        self.0.first().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// A word is a degenerate simplex iff it contains the unit.
    pub fn is_degenerate(&self) -> bool {
        self.0.contains(&UNIT)
    }

    /// Replaces the adjacent pair at positions `(p, p+1)` by `product`.
    pub fn contract(&self, p: usize, product: ElemId) -> Word {
        debug_assert!(p + 1 < self.0.len());
        let mut v = Vec::with_capacity(self.0.len() - 1);
        v.extend_from_slice(&self.0[..p]);
        v.push(product);
        v.extend_from_slice(&self.0[p + 2..]);
        Word(v)
    }

    /// Inserts the unit at index `pos` (the degeneracy `s_i` uses `pos = i`).
    pub fn insert_unit(&self, pos: usize) -> Word {
        debug_assert!(pos <= self.0.len());
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..pos]);
        v.push(UNIT);
        v.extend_from_slice(&self.0[pos..]);
        Word(v)
    }

    /// Removes the entry at index `pos`.
    pub fn remove(&self, pos: usize) -> Word {
        debug_assert!(pos < self.0.len());
        let mut v = self.0.clone();
        v.remove(pos);
        Word(v)
    }

    pub fn drop_first(&self) -> Word {
        Word(self.0[1..].to_vec())
    }

    pub fn drop_last(&self) -> Word {
        Word(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn subword(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }
}

impl FromIterator<ElemId> for Word {
    fn from_iter<T: IntoIterator<Item = ElemId>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}
