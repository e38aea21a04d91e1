use crate::action::PGAction;
use crate::CohomologyError;
use num_bigint::BigInt;
use num_traits::Zero;
use pgroup_core::{Word, UNIT};

/// A degree-n cochain: one coefficient vector per degree-n domain word, in
/// the deterministic word order. Values are always stored reduced modulo
/// the coefficient relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: Vec<Vec<BigInt>>,
}

impl Cochain {
    pub fn new(
        action: &PGAction,
        degree: usize,
        mut values: Vec<Vec<BigInt>>,
    ) -> Result<Self, CohomologyError> {
        let words = action.table().simplices(degree)?;
        if values.len() != words.len() {
            return Err(CohomologyError::Precondition(format!(
                "cochain has {} values for {} degree-{degree} words",
                values.len(),
                words.len()
            )));
        }
        for v in &mut values {
            if v.len() != action.coeffs().rank() {
                return Err(CohomologyError::Precondition(
                    "coefficient vector length mismatch".into(),
                ));
            }
            action.coeffs().reduce_vec(v);
        }
        Ok(Cochain { degree, values })
    }

    pub fn zero(action: &PGAction, degree: usize) -> Result<Self, CohomologyError> {
        let count = action.table().simplices(degree)?.len();
        Ok(Cochain {
            degree,
            values: vec![action.coeffs().zero_vec(); count],
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn value(&self, word_index: usize) -> &[BigInt] {
        &self.values[word_index]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Vanishes on every degenerate word.
    pub fn is_normalized(&self, action: &PGAction) -> bool {
        self.vanishes_when(action, |w| w.is_degenerate())
    }

    /// Vanishes whenever one of the first `i` entries is the unit.
    pub fn is_i_normalized(&self, action: &PGAction, i: usize) -> bool {
        self.vanishes_when(action, |w| {
            w.entries().iter().take(i).any(|&x| x == UNIT)
        })
    }

    fn vanishes_when(&self, action: &PGAction, pred: impl Fn(&Word) -> bool) -> bool {
        let words = action.table().simplices(self.degree).unwrap();
        words
            .iter()
            .zip(&self.values)
            .all(|(w, v)| !pred(w) || v.iter().all(Zero::is_zero))
    }

    pub fn add(&self, action: &PGAction, other: &Cochain) -> Cochain {
        self.combine(action, other, false)
    }

    pub fn sub(&self, action: &PGAction, other: &Cochain) -> Cochain {
        self.combine(action, other, true)
    }

    fn combine(&self, action: &PGAction, other: &Cochain, negate: bool) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochain degrees differ");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| {
                let mut v: Vec<BigInt> = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| if negate { x - y } else { x + y })
                    .collect();
                action.coeffs().reduce_vec(&mut v);
                v
            })
            .collect();
        Cochain {
            degree: self.degree,
            values,
        }
    }

    /// Flattening into the factor-major coordinates of the cochain group,
    /// matching the coboundary matrices.
    pub fn to_vec(&self, action: &PGAction) -> Vec<BigInt> {
        let k = self.values.len();
        let r = action.coeffs().rank();
        let mut out = vec![BigInt::zero(); r * k];
        for (j, v) in self.values.iter().enumerate() {
            for (i, e) in v.iter().enumerate() {
                out[i * k + j] = e.clone();
            }
        }
        out
    }

    pub fn from_vec(
        action: &PGAction,
        degree: usize,
        flat: &[BigInt],
    ) -> Result<Self, CohomologyError> {
        let k = action.table().simplices(degree)?.len();
        let r = action.coeffs().rank();
        if flat.len() != r * k {
            return Err(CohomologyError::Precondition(
                "flat vector length mismatch".into(),
            ));
        }
        let values = (0..k)
            .map(|j| (0..r).map(|i| flat[i * k + j].clone()).collect())
            .collect();
        Cochain::new(action, degree, values)
    }
}
