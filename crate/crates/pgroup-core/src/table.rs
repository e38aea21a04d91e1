use crate::word::Word;
use crate::{ElemId, Error, UNIT};
use std::collections::{BTreeMap, HashMap};

/// An element of the table, as (index, display name). Index 0 is always the
/// unit, named "1".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub id: ElemId,
    pub name: String,
}

#[derive(Clone, Debug, Default)]
struct Level {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Level {
    fn from_sorted(words: Vec<Word>) -> Self {
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Level { words, index }
    }
}

/// A finite partial group truncated at word length `max_degree`: an element
/// set with involution, the domain words of each length up to the truncation,
/// and the binary product on the degree-2 domain. Longer products are
/// recovered by iterated contraction; validation checks that this is
/// coherent, so tables are immutable once built and all operations are pure.
#[derive(Clone, Debug)]
pub struct PartialGroupTable {
    names: Vec<String>,
    inv: Vec<ElemId>,
    max_degree: usize,
    levels: Vec<Level>,
    prod2: HashMap<(ElemId, ElemId), ElemId>,
}

impl PartialEq for PartialGroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.inv == other.inv
            && self.max_degree == other.max_degree
            && self.prod2 == other.prod2
            && self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.words == b.words)
    }
}

impl Eq for PartialGroupTable {}

impl PartialGroupTable {
    /// Builds a table from its parts, checking structural well-formedness
    /// only (indices in range, product defined exactly on the degree-2
    /// domain). The partial-group axioms are checked by [`validate`].
    ///
    /// `domain` maps each degree `2 ..= max_degree` to its words; degrees 0
    /// and 1 are implicit. Missing degrees are treated as empty.
    ///
    /// [`validate`]: PartialGroupTable::validate
    pub fn new(
        names: Vec<String>,
        inv: Vec<ElemId>,
        max_degree: usize,
        domain: BTreeMap<usize, Vec<Word>>,
        prod2: HashMap<(ElemId, ElemId), ElemId>,
    ) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::Structural("element list is empty".into()));
        }
        if names[0] != "1" {
            return Err(Error::Structural(format!(
                "element 0 must be the unit named \"1\", found \"{}\"",
                names[0]
            )));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for n in &names {
                if n.is_empty() {
                    return Err(Error::Structural("empty element name".into()));
                }
                if !seen.insert(n) {
                    return Err(Error::Structural(format!("duplicate element name \"{n}\"")));
                }
            }
        }
        let count = names.len();
        if inv.len() != count {
            return Err(Error::Structural(format!(
                "involution defined on {} elements, expected {}",
                inv.len(),
                count
            )));
        }
        if let Some(bad) = inv.iter().find(|&&x| x >= count) {
            return Err(Error::Structural(format!(
                "involution value {bad} out of range"
            )));
        }
        if max_degree < 2 {
            return Err(Error::Structural(format!(
                "truncation degree must be at least 2, got {max_degree}"
            )));
        }

        let mut levels = vec![Level::default(); max_degree + 1];
        levels[0] = Level::from_sorted(vec![Word::empty()]);
        levels[1] = Level::from_sorted((0..count).map(Word::single).collect());
        for (&degree, words) in &domain {
            if !(2..=max_degree).contains(&degree) {
                return Err(Error::Structural(format!(
                    "domain degree {degree} outside 2..={max_degree}"
                )));
            }
            let mut ws: Vec<Word> = words.clone();
            for w in &ws {
                if w.len() != degree {
                    return Err(Error::Structural(format!(
                        "word of length {} listed under degree {degree}",
                        w.len()
                    )));
                }
                if let Some(&bad) = w.entries().iter().find(|&&x| x >= count) {
                    return Err(Error::Structural(format!(
                        "element index {bad} out of range in a degree-{degree} word"
                    )));
                }
            }
            ws.sort();
            ws.dedup();
            levels[degree] = Level::from_sorted(ws);
        }

        for (&(a, b), &p) in &prod2 {
            if a >= count || b >= count || p >= count {
                return Err(Error::Structural(
                    "product entry with element index out of range".into(),
                ));
            }
        }
        let table = PartialGroupTable {
            names,
            inv,
            max_degree,
            levels,
            prod2,
        };
        for w in &table.levels[2].words {
            if !table.prod2.contains_key(&(w.get(0), w.get(1))) {
                return Err(Error::Structural(format!(
                    "product undefined on the degree-2 domain word {}",
                    table.render_word(w)
                )));
            }
        }
        for &(a, b) in table.prod2.keys() {
            if !table.levels[2].index.contains_key(&Word::pair(a, b)) {
                return Err(Error::Structural(format!(
                    "product defined on {} which is not a degree-2 domain word",
                    table.render_word(&Word::pair(a, b))
                )));
            }
        }
        Ok(table)
    }

    pub fn element_count(&self) -> usize {
        self.names.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn name(&self, x: ElemId) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElemId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.names.iter().enumerate().map(|(id, name)| Element {
            id,
            name: name.clone(),
        })
    }

    pub fn inv(&self, x: ElemId) -> ElemId {
        self.inv[x]
    }

    pub fn inv_map(&self) -> &[ElemId] {
        &self.inv
    }

    pub fn prod2(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        self.prod2.get(&(a, b)).copied()
    }

    pub fn prod2_table(&self) -> &HashMap<(ElemId, ElemId), ElemId> {
        &self.prod2
    }

    /// Membership in the domain of definition. Words of length 0 and 1 are
    /// always members; words longer than the truncation degree never are.
    pub fn contains(&self, w: &Word) -> bool {
        let n = w.len();
        if n > self.max_degree {
            return false;
        }
        if n <= 1 {
            return w.entries().iter().all(|&x| x < self.names.len());
        }
        self.levels[n].index.contains_key(w)
    }

    /// Position of `w` in the deterministic enumeration of its degree.
    pub fn word_index(&self, w: &Word) -> Option<usize> {
        let n = w.len();
        if n > self.max_degree {
            return None;
        }
        self.levels[n].index.get(w).copied()
    }

    /// The degree-`n` simplices in lexicographic element-id order. A word is
    /// a degenerate simplex iff it contains the unit ([`Word::is_degenerate`]).
    pub fn simplices(&self, n: usize) -> Result<&[Word], Error> {
        if n > self.max_degree {
            return Err(Error::Truncation {
                degree: n,
                max_degree: self.max_degree,
            });
        }
        Ok(&self.levels[n].words)
    }

    /// Extended product by iterated leftmost adjacent contraction. For valid
    /// tables the result is independent of the contraction order.
    pub fn pi(&self, w: &Word) -> Result<ElemId, Error> {
        if w.len() > self.max_degree {
            return Err(Error::Truncation {
                degree: w.len(),
                max_degree: self.max_degree,
            });
        }
        if !self.contains(w) {
            return Err(Error::Domain(self.render_word(w)));
        }
        self.fold_product(w)
    }

    /// Left fold of the binary product; reports the first undefined pair.
    pub(crate) fn fold_product(&self, w: &Word) -> Result<ElemId, Error> {
        if w.is_empty() {
            return Ok(UNIT);
        }
        let mut acc = w.get(0);
        for &x in &w.entries()[1..] {
            acc = self
                .prod2(acc, x)
                .ok_or_else(|| Error::Domain(self.render_word(&Word::pair(acc, x))))?;
        }
        Ok(acc)
    }

    /// Face map `d_i`: drop the first entry (`i = 0`), drop the last
    /// (`i = n`), or contract the adjacent pair at positions `i, i+1`
    /// (1-based) through the product.
    pub fn face(&self, w: &Word, i: usize) -> Result<Word, Error> {
        let n = w.len();
        if n == 0 || i > n {
            return Err(Error::Index {
                index: i,
                degree: n,
            });
        }
        if !self.contains(w) {
            return Err(Error::Domain(self.render_word(w)));
        }
        if i == 0 {
            Ok(w.drop_first())
        } else if i == n {
            Ok(w.drop_last())
        } else {
            let (a, b) = (w.get(i - 1), w.get(i));
            let p = self
                .prod2(a, b)
                .ok_or_else(|| Error::Domain(self.render_word(&Word::pair(a, b))))?;
            Ok(w.contract(i - 1, p))
        }
    }

    /// Degeneracy `s_i`: insert the unit after position `i` (1-based), i.e.
    /// at index `i` of the entry list.
    pub fn degeneracy(&self, w: &Word, i: usize) -> Result<Word, Error> {
        let n = w.len();
        if i > n {
            return Err(Error::Index {
                index: i,
                degree: n,
            });
        }
        if n + 1 > self.max_degree {
            return Err(Error::Truncation {
                degree: n + 1,
                max_degree: self.max_degree,
            });
        }
        if !self.contains(w) {
            return Err(Error::Domain(self.render_word(w)));
        }
        Ok(w.insert_unit(i))
    }

    /// `(x_1, ..., x_n) -> (x_n^{-1}, ..., x_1^{-1})`; involutive.
    pub fn invert_word(&self, w: &Word) -> Word {
        w.entries().iter().rev().map(|&x| self.inv[x]).collect()
    }

    /// The opposite table: degree-`n` words reversed, product transposed.
    /// Taking the opposite twice returns the original table.
    pub fn opposite(&self) -> PartialGroupTable {
        let mut domain = BTreeMap::new();
        for degree in 2..=self.max_degree {
            let words: Vec<Word> = self.levels[degree]
                .words
                .iter()
                .map(|w| w.entries().iter().rev().copied().collect())
                .collect();
            domain.insert(degree, words);
        }
        let prod2 = self
            .prod2
            .iter()
            .map(|(&(a, b), &p)| ((b, a), p))
            .collect();
        PartialGroupTable::new(
            self.names.clone(),
            self.inv.clone(),
            self.max_degree,
            domain,
            prod2,
        )
        .expect("opposite of a well-formed table is well-formed")
    }

    pub fn render_word(&self, w: &Word) -> String {
        let parts: Vec<&str> = w.entries().iter().map(|&x| self.name(x)).collect();
        format!("({})", parts.join(", "))
    }
}
