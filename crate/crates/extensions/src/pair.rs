use crate::ExtensionError;
use homotopy_aut::{check_homotopy, normalizer, PGHom};
use pgroup_core::{ElemId, PartialGroupTable, Word, UNIT};
use std::fmt;
use std::sync::Arc;

/// A twisting pair for building an extension of the base by the fiber:
/// an automorphism `t(g)` of the fiber per base element and a normalizer
/// element `eta(g, h)` per composable base pair, indexed in the
/// deterministic degree-2 word order.
#[derive(Clone, Debug)]
pub struct TwistingPair {
    base: Arc<PartialGroupTable>,
    fiber: Arc<PartialGroupTable>,
    t: Vec<PGHom>,
    eta: Vec<ElemId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairViolation {
    /// `t(1) != Id`
    UnitTwist,
    /// `eta(g,1) != 1` or `eta(1,g) != 1`
    UnitEta { witness: String },
    /// an eta value is not in the fiber's normalizer (condition (i))
    EtaOutsideNormalizer { witness: String, value: String },
    /// `eta(g,h)` is not a homotopy `t(g)∘t(h) <- t(g·h)` (condition (i))
    HomotopyCondition { witness: String, detail: String },
    /// the degree-3 cocycle products are undefined in the fiber
    CocycleUndefined { witness: String, detail: String },
    /// `t(g)(eta(h,k)) · eta(g,h·k) != eta(g,h) · eta(g·h,k)` (condition (iii))
    CocycleCondition { witness: String },
}

impl fmt::Display for PairViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairViolation::UnitTwist => write!(f, "t(1) is not the identity"),
            PairViolation::UnitEta { witness } => {
                write!(f, "eta is not 1 on the unit pair {witness}")
            }
            PairViolation::EtaOutsideNormalizer { witness, value } => {
                write!(f, "eta{witness} = {value} is outside the fiber normalizer")
            }
            PairViolation::HomotopyCondition { witness, detail } => {
                write!(f, "homotopy condition fails on {witness}: {detail}")
            }
            PairViolation::CocycleUndefined { witness, detail } => {
                write!(f, "cocycle products undefined on {witness}: {detail}")
            }
            PairViolation::CocycleCondition { witness } => {
                write!(f, "cocycle condition fails on {witness}")
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TwistingReport {
    violations: Vec<PairViolation>,
}

impl TwistingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[PairViolation] {
        &self.violations
    }
}

impl fmt::Display for TwistingReport {
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

impl TwistingPair {
    /// Structural construction: `t` total on base elements with each value
    /// an automorphism of the fiber, `eta` total on the degree-2 base
    /// domain. The pair axioms are checked by [`validate`].
    ///
    /// [`validate`]: TwistingPair::validate
    pub fn new(
        base: Arc<PartialGroupTable>,
        fiber: Arc<PartialGroupTable>,
        t: Vec<PGHom>,
        eta: Vec<ElemId>,
    ) -> Result<Self, ExtensionError> {
        if t.len() != base.element_count() {
            return Err(ExtensionError::Unsupported(format!(
                "t defined on {} elements, expected {}",
                t.len(),
                base.element_count()
            )));
        }
        for (g, hom) in t.iter().enumerate() {
            if **hom.source() != *fiber || **hom.target() != *fiber {
                return Err(ExtensionError::Unsupported(format!(
                    "t({}) is not a self-map of the fiber",
                    base.name(g)
                )));
            }
            if hom.inverse().is_none() {
                return Err(ExtensionError::Unsupported(format!(
                    "t({}) is not an automorphism of the fiber",
                    base.name(g)
                )));
            }
        }
        let pairs = base.simplices(2)?.len();
        if eta.len() != pairs {
            return Err(ExtensionError::Unsupported(format!(
                "eta defined on {} pairs, expected {pairs}",
                eta.len()
            )));
        }
        if let Some(&bad) = eta.iter().find(|&&x| x >= fiber.element_count()) {
            return Err(ExtensionError::Unsupported(format!(
                "eta value {bad} out of range"
            )));
        }
        Ok(TwistingPair {
            base,
            fiber,
            t,
            eta,
        })
    }

    /// The trivial pair: identity twists and unit eta.
    pub fn trivial(
        base: Arc<PartialGroupTable>,
        fiber: Arc<PartialGroupTable>,
    ) -> Result<Self, ExtensionError> {
        let t = vec![PGHom::identity(&fiber); base.element_count()];
        let eta = vec![UNIT; base.simplices(2)?.len()];
        TwistingPair::new(base, fiber, t, eta)
    }

    pub fn base(&self) -> &Arc<PartialGroupTable> {
        &self.base
    }

    pub fn fiber(&self) -> &Arc<PartialGroupTable> {
        &self.fiber
    }

    pub fn twist(&self, g: ElemId) -> &PGHom {
        &self.t[g]
    }

    pub fn eta(&self, g: ElemId, h: ElemId) -> ElemId {
        let idx = self
            .base
            .word_index(&Word::pair(g, h))
            .expect("eta is indexed by the degree-2 base domain");
        self.eta[idx]
    }

    pub fn eta_table(&self) -> &[ElemId] {
        &self.eta
    }

    /// Checks conditions (i)-(iii) of the twisting-pair definition and
    /// reports every violation with a witness simplex.
    pub fn validate(&self) -> TwistingReport {
        let mut out = Vec::new();
        let base = &self.base;
        let fiber = &self.fiber;

        if self.t[UNIT] != PGHom::identity(fiber) {
            out.push(PairViolation::UnitTwist);
        }

        let norm = normalizer(fiber);
        let pairs: Vec<Word> = base.simplices(2).unwrap().to_vec();
        for w in &pairs {
            let (g, h) = (w.get(0), w.get(1));
            let e = self.eta(g, h);
            if (g == UNIT || h == UNIT) && e != UNIT {
                out.push(PairViolation::UnitEta {
                    witness: base.render_word(w),
                });
                continue;
            }
            if !norm.elements.contains(&e) {
                out.push(PairViolation::EtaOutsideNormalizer {
                    witness: base.render_word(w),
                    value: fiber.name(e).to_string(),
                });
                continue;
            }
            let composed = self.t[g].compose(&self.t[h]);
            let product = base.prod2(g, h).unwrap();
            if let Err(fail) = check_homotopy(&composed, &self.t[product], e) {
                out.push(PairViolation::HomotopyCondition {
                    witness: base.render_word(w),
                    detail: fail.to_string(),
                });
            }
        }

        for w in base.simplices(3).unwrap() {
            let (g, h, k) = (w.get(0), w.get(1), w.get(2));
            let hk = base.prod2(h, k).unwrap();
            let gh = base.prod2(g, h).unwrap();
            let lhs = Word::pair(self.t[g].apply(self.eta(h, k)), self.eta(g, hk));
            let rhs = Word::pair(self.eta(g, h), self.eta(gh, k));
            let (Ok(l), Ok(r)) = (fiber.pi(&lhs), fiber.pi(&rhs)) else {
                out.push(PairViolation::CocycleUndefined {
                    witness: base.render_word(w),
                    detail: format!(
                        "{} or {} is not composable in the fiber",
                        fiber.render_word(&lhs),
                        fiber.render_word(&rhs)
                    ),
                });
                continue;
            };
            if l != r {
                out.push(PairViolation::CocycleCondition {
                    witness: base.render_word(w),
                });
            }
        }

        TwistingReport { violations: out }
    }
}
