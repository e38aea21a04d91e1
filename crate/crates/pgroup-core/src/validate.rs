use crate::table::PartialGroupTable;
use crate::word::Word;
use crate::UNIT;
use std::fmt;

/// One violated axiom instance, with a rendered witness word. The variants
/// follow the invariant list of the table type; an empty report means the
/// table is a partial group up to its truncation degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `inv(inv(x)) != x`
    Involution { element: String },
    /// `inv(1) != 1`
    UnitInverse { got: String },
    /// `(1,x)` or `(x,1)` missing from the degree-2 domain
    MissingUnitPair { witness: String },
    /// `prod2(1,x) != x` or `prod2(x,1) != x`
    UnitLaw { witness: String, got: String },
    /// `(x^{-1}, x)` missing from the degree-2 domain
    MissingInversePair { witness: String },
    /// `prod2(x^{-1}, x) != 1`
    InverseLaw { witness: String, got: String },
    /// a contiguous subword of a domain word is not a domain word
    SubwordClosure { word: String, subword: String },
    /// contracting an adjacent pair leaves the domain
    ContractionClosure { word: String, contracted: String },
    /// two contraction orders disagree on the extended product
    ContractionCoherence {
        word: String,
        position: usize,
        expected: String,
        got: String,
    },
    /// inserting the unit leaves the domain
    UnitInsertionClosure { word: String, inserted: String },
    /// inserting the unit changes the extended product
    UnitInsertionProduct { word: String, inserted: String },
    /// a word containing the unit is not a degeneracy of a domain word
    DegeneracyOrigin { word: String, reduced: String },
    /// `w^{-1} ∘ w` leaves the domain (checked for `2n <= N`)
    InversionClosure { word: String, combined: String },
    /// `Π(w^{-1} ∘ w) != 1`
    InversionProduct { word: String, got: String },
    /// `prod2(a,b) = prod2(a,c)` with `b != c`
    Cancellation {
        first: String,
        second: String,
        product: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Involution { element } => {
                write!(f, "involution is not self-inverse at {element}")
            }
            Violation::UnitInverse { got } => write!(f, "inverse of the unit is {got}, not 1"),
            Violation::MissingUnitPair { witness } => {
                write!(f, "unit pair {witness} missing from the domain")
            }
            Violation::UnitLaw { witness, got } => {
                write!(f, "unit law fails on {witness}: product is {got}")
            }
            Violation::MissingInversePair { witness } => {
                write!(f, "inverse pair {witness} missing from the domain")
            }
            Violation::InverseLaw { witness, got } => {
                write!(f, "inverse law fails on {witness}: product is {got}")
            }
            Violation::SubwordClosure { word, subword } => {
                write!(f, "subword {subword} of {word} is not in the domain")
            }
            Violation::ContractionClosure { word, contracted } => {
                write!(f, "contraction {contracted} of {word} is not in the domain")
            }
            Violation::ContractionCoherence {
                word,
                position,
                expected,
                got,
            } => write!(
                f,
                "contracting {word} at position {position} gives product {got}, expected {expected}"
            ),
            Violation::UnitInsertionClosure { word, inserted } => {
                write!(f, "unit insertion {inserted} of {word} is not in the domain")
            }
            Violation::UnitInsertionProduct { word, inserted } => write!(
                f,
                "unit insertion {inserted} of {word} changes the extended product"
            ),
            Violation::DegeneracyOrigin { word, reduced } => write!(
                f,
                "{word} contains the unit but {reduced} is not in the domain"
            ),
            Violation::InversionClosure { word, combined } => {
                write!(f, "inverse word concatenation {combined} of {word} is not in the domain")
            }
            Violation::InversionProduct { word, got } => {
                write!(f, "product of inverse concatenation of {word} is {got}, not 1")
            }
            Violation::Cancellation {
                first,
                second,
                product,
            } => write!(
                f,
                "cancellation fails: {first} and {second} both have product {product}"
            ),
        }
    }
}

/// Every violated invariant found in a table, in a deterministic order.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl PartialGroupTable {
    /// Checks every partial-group axiom within the truncation degree and
    /// reports each violation with a witness. An empty report means the
    /// table is a valid partial group up to degree `max_degree`.
    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        let r = |w: &Word| self.render_word(w);

        // Involution laws.
        if self.inv(UNIT) != UNIT {
            out.push(Violation::UnitInverse {
                got: self.name(self.inv(UNIT)).to_string(),
            });
        }
        for x in 0..self.element_count() {
            if self.inv(self.inv(x)) != x {
                out.push(Violation::Involution {
                    element: self.name(x).to_string(),
                });
            }
        }

        // Unit laws and the degree-1 inversion axiom.
        for x in 0..self.element_count() {
            for pair in [Word::pair(UNIT, x), Word::pair(x, UNIT)] {
                match self.prod2(pair.get(0), pair.get(1)) {
                    None => out.push(Violation::MissingUnitPair { witness: r(&pair) }),
                    Some(p) if p != x => out.push(Violation::UnitLaw {
                        witness: r(&pair),
                        got: self.name(p).to_string(),
                    }),
                    _ => {}
                }
            }
            let pair = Word::pair(self.inv(x), x);
            match self.prod2(self.inv(x), x) {
                None => out.push(Violation::MissingInversePair { witness: r(&pair) }),
                Some(p) if p != UNIT => out.push(Violation::InverseLaw {
                    witness: r(&pair),
                    got: self.name(p).to_string(),
                }),
                _ => {}
            }
        }

        // Per-word closure and coherence, bottom-up in the degree.
        for n in 2..=self.max_degree() {
            let words: Vec<Word> = self.simplices(n).unwrap().to_vec();
            for w in &words {
                // Subword closure (lengths 0 and 1 are implicit).
                for len in 2..n {
                    for start in 0..=n - len {
                        let sub = w.subword(start, len);
                        if !self.contains(&sub) {
                            out.push(Violation::SubwordClosure {
                                word: r(w),
                                subword: r(&sub),
                            });
                        }
                    }
                }
                // Contraction closure and order-independence of the product.
                let pi_w = self.fold_product(w).ok();
                for p in 0..n - 1 {
                    let Some(prod) = self.prod2(w.get(p), w.get(p + 1)) else {
                        continue; // missing pair already reported as a subword violation
                    };
                    let contracted = w.contract(p, prod);
                    if !self.contains(&contracted) {
                        out.push(Violation::ContractionClosure {
                            word: r(w),
                            contracted: r(&contracted),
                        });
                        continue;
                    }
                    if let (Some(expect), Ok(got)) = (pi_w, self.fold_product(&contracted)) {
                        if got != expect {
                            out.push(Violation::ContractionCoherence {
                                word: r(w),
                                position: p + 1,
                                expected: self.name(expect).to_string(),
                                got: self.name(got).to_string(),
                            });
                        }
                    }
                }
                // Degenerate words must come from unit insertion.
                for pos in 0..n {
                    if w.get(pos) == UNIT {
                        let reduced = w.remove(pos);
                        if !self.contains(&reduced) {
                            out.push(Violation::DegeneracyOrigin {
                                word: r(w),
                                reduced: r(&reduced),
                            });
                        }
                    }
                }
                // Unit-insertion closure within the truncation.
                if n + 1 <= self.max_degree() {
                    for pos in 0..=n {
                        let inserted = w.insert_unit(pos);
                        if !self.contains(&inserted) {
                            out.push(Violation::UnitInsertionClosure {
                                word: r(w),
                                inserted: r(&inserted),
                            });
                        } else if let (Ok(a), Ok(b)) =
                            (self.fold_product(w), self.fold_product(&inserted))
                        {
                            if a != b {
                                out.push(Violation::UnitInsertionProduct {
                                    word: r(w),
                                    inserted: r(&inserted),
                                });
                            }
                        }
                    }
                }
                // Truncated inversion axiom (degree 1 handled above).
                if 2 * n <= self.max_degree() {
                    let combined = self.invert_word(w).concat(w);
                    if !self.contains(&combined) {
                        out.push(Violation::InversionClosure {
                            word: r(w),
                            combined: r(&combined),
                        });
                    } else if let Ok(p) = self.fold_product(&combined) {
                        if p != UNIT {
                            out.push(Violation::InversionProduct {
                                word: r(w),
                                got: self.name(p).to_string(),
                            });
                        }
                    }
                }
            }
        }

        // Cancellation on the left factor; the right-handed case follows by
        // inversion but is checked directly as well.
        let pairs: Vec<Word> = self.simplices(2).unwrap().to_vec();
        let mut by_left: std::collections::HashMap<(usize, usize), &Word> =
            std::collections::HashMap::new();
        let mut by_right: std::collections::HashMap<(usize, usize), &Word> =
            std::collections::HashMap::new();
        for w in &pairs {
            let p = self.prod2(w.get(0), w.get(1)).unwrap();
            if let Some(prev) = by_left.insert((w.get(0), p), w) {
                out.push(Violation::Cancellation {
                    first: r(prev),
                    second: r(w),
                    product: self.name(p).to_string(),
                });
            }
            if let Some(prev) = by_right.insert((w.get(1), p), w) {
                out.push(Violation::Cancellation {
                    first: r(prev),
                    second: r(w),
                    product: self.name(p).to_string(),
                });
            }
        }

        ValidationReport { violations: out }
    }
}
