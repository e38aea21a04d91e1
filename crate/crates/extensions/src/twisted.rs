use crate::pair::TwistingPair;
use crate::ExtensionError;
use homotopy_aut::PGHom;
use pgroup_core::{ElemId, PartialGroupTable, Word, UNIT};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// The total space of a twisted product, with its projection onto the base
/// and the inclusion of the fiber over the unit. Total elements are pairs
/// `(x, g)` encoded fiber-major, so the trivial pair reproduces the
/// cartesian product table exactly.
#[derive(Clone, Debug)]
pub struct ExtensionTable {
    total: Arc<PartialGroupTable>,
    base: Arc<PartialGroupTable>,
    fiber: Arc<PartialGroupTable>,
    projection: PGHom,
    fiber_inclusion: PGHom,
}

impl ExtensionTable {
    pub fn total(&self) -> &Arc<PartialGroupTable> {
        &self.total
    }

    pub fn base(&self) -> &Arc<PartialGroupTable> {
        &self.base
    }

    pub fn fiber(&self) -> &Arc<PartialGroupTable> {
        &self.fiber
    }

    pub fn projection(&self) -> &PGHom {
        &self.projection
    }

    pub fn fiber_inclusion(&self) -> &PGHom {
        &self.fiber_inclusion
    }

    pub fn encode(&self, x: ElemId, g: ElemId) -> ElemId {
        x * self.base.element_count() + g
    }

    pub fn decode(&self, e: ElemId) -> (ElemId, ElemId) {
        let n = self.base.element_count();
        (e / n, e % n)
    }

    /// Desk-scale local-triviality check: over every base word the fiber
    /// has exactly `|D_n(fiber)|` simplices, and projection is surjective
    /// in every degree.
    pub fn check_fibers(&self) -> bool {
        for n in 0..=self.total.max_degree() {
            let mut counts: HashMap<Word, usize> = HashMap::new();
            for w in self.total.simplices(n).unwrap() {
                let projected = self.projection.apply_word(w);
                *counts.entry(projected).or_insert(0) += 1;
            }
            let expected = self.fiber.simplices(n).unwrap().len();
            let base_words = self.base.simplices(n).unwrap();
            if counts.len() != base_words.len() {
                return false;
            }
            if base_words.iter().any(|b| counts.get(b) != Some(&expected)) {
                return false;
            }
        }
        true
    }
}

impl TwistingPair {
    /// Builds the twisted product: elements are pairs, a degree-n word is a
    /// domain word iff its base components form a base domain word and its
    /// twisted fiber components form a fiber domain word, the product is
    /// `(x, g) * (z, h) = (x · t(g)(z) · eta(g, h), g · h)`, and the inverse
    /// is `(eta(g^{-1}, g)^{-1} · t(g^{-1})(x^{-1}), g^{-1})`.
    ///
    /// The output passing `validate()` is the structure-theorem check; the
    /// pair itself must validate first.
    pub fn twisted_product(&self, max_degree: Option<usize>) -> Result<ExtensionTable, ExtensionError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(ExtensionError::InvalidPair(report.to_string()));
        }
        let base = self.base().clone();
        let fiber = self.fiber().clone();
        let degree_cap = base.max_degree().min(fiber.max_degree());
        let max_degree = max_degree.unwrap_or(degree_cap).min(degree_cap);

        let nb = base.element_count();
        let encode = |x: ElemId, g: ElemId| x * nb + g;
        let mut names = Vec::with_capacity(fiber.element_count() * nb);
        for x in 0..fiber.element_count() {
            for g in 0..nb {
                if x == UNIT && g == UNIT {
                    names.push("1".to_string());
                } else {
                    names.push(format!("({},{})", fiber.name(x), base.name(g)));
                }
            }
        }

        // Inverse: (x, g)^{-1} = (eta(g^{-1}, g)^{-1} · t(g^{-1})(x^{-1}), g^{-1}).
        let mut inv = Vec::with_capacity(names.len());
        for x in 0..fiber.element_count() {
            for g in 0..nb {
                let ginv = base.inv(g);
                let head = fiber.inv(self.eta(ginv, g));
                let tail = self.twist(ginv).apply(fiber.inv(x));
                let fx = fiber
                    .prod2(head, tail)
                    .expect("normalizer inverses compose with everything");
                inv.push(encode(fx, ginv));
            }
        }

        // Inverse twist maps, computed once.
        let tinv_maps: Vec<Vec<ElemId>> = (0..nb)
            .map(|g| {
                let mut out = vec![0; fiber.element_count()];
                for (x, &y) in self.twist(g).map().iter().enumerate() {
                    out[y] = x;
                }
                out
            })
            .collect();

        // Domain words, constructed fiberwise: a degree-n word over a fixed
        // base word corresponds bijectively to a fiber domain word through
        // the prefix twists `P_i = t(g_1) ∘ ... ∘ t(g_{i-1})`: the i-th
        // fiber component is `P_i^{-1}(v_i)`.
        let mut domain = BTreeMap::new();
        for degree in 2..=max_degree {
            let mut words = Vec::new();
            for wb in base.simplices(degree)? {
                let mut pinv: Vec<Vec<ElemId>> = Vec::with_capacity(degree);
                let mut acc: Vec<ElemId> = (0..fiber.element_count()).collect();
                pinv.push(acc.clone());
                for i in 0..degree - 1 {
                    let tinv = &tinv_maps[wb.get(i)];
                    acc = acc.iter().map(|&y| tinv[y]).collect();
                    pinv.push(acc.clone());
                }
                for v in fiber.simplices(degree)? {
                    let entries: Vec<ElemId> = (0..degree)
                        .map(|i| encode(pinv[i][v.get(i)], wb.get(i)))
                        .collect();
                    words.push(Word::new(entries));
                }
            }
            words.sort();
            domain.insert(degree, words);
        }

        // Product: (x, g) * (z, h) = (x · t(g)(z) · eta(g, h), g · h).
        let mut prod2 = HashMap::new();
        for w in domain.get(&2).expect("degree 2 present").clone() {
            let (x, g) = (w.get(0) / nb, w.get(0) % nb);
            let (z, h) = (w.get(1) / nb, w.get(1) % nb);
            let twisted = self.twist(g).apply(z);
            let first = fiber
                .prod2(x, twisted)
                .expect("degree-2 simplex condition");
            let fx = fiber
                .prod2(first, self.eta(g, h))
                .expect("normalizer values compose on the right");
            let bg = base.prod2(g, h).expect("base pair is composable");
            prod2.insert((w.get(0), w.get(1)), encode(fx, bg));
        }

        let total = Arc::new(PartialGroupTable::new(
            names, inv, max_degree, domain, prod2,
        )?);

        let projection_map: Vec<ElemId> = (0..total.element_count()).map(|e| e % nb).collect();
        let projection = PGHom::new(total.clone(), base.clone(), projection_map)
            .expect("projection of a twisted product is a homomorphism");
        let inclusion_map: Vec<ElemId> =
            (0..fiber.element_count()).map(|x| encode(x, UNIT)).collect();
        let fiber_inclusion = PGHom::new(fiber.clone(), total.clone(), inclusion_map)
            .expect("fiber inclusion of a twisted product is a homomorphism");

        Ok(ExtensionTable {
            total,
            base,
            fiber,
            projection,
            fiber_inclusion,
        })
    }
}
