use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// A finitely generated abelian group presented by its invariant factors:
/// a list `m_1 | m_2 | ... ` of nonnegative integers where `0` encodes an
/// infinite cyclic factor and factors equal to `1` are omitted.
///
/// The constructor normalizes arbitrary diagonal presentations into this
/// canonical form, so equality of `FinAbGroup` values is isomorphism of the
/// groups they present.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinAbGroup {
    factors: Vec<BigUint>,
}

impl FinAbGroup {
    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    /// Repeatedly replacing a non-dividing pair `(a, b)` by `(gcd, lcm)`
    /// sorts the prime exponents without ever factorizing anything.
    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = BigUint>,
    {
        let mut f: Vec<BigUint> = factors.into_iter().filter(|m| !m.is_one()).collect();
        loop {
            let mut changed = false;
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    let divides = if f[i].is_zero() {
                        f[j].is_zero()
                    } else if f[j].is_zero() {
                        true
                    } else {
                        (&f[j] % &f[i]).is_zero()
                    };
                    if !divides {
                        let g = f[i].gcd(&f[j]);
                        let l = f[i].lcm(&f[j]);
                        f[i] = g;
                        f[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        f.retain(|m| !m.is_one());
        f.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
            (false, false) => a.cmp(b),
            (false, true) => std::cmp::Ordering::Less,
            (true, false) => std::cmp::Ordering::Greater,
            (true, true) => std::cmp::Ordering::Equal,
        });
        FinAbGroup { factors: f }
    }

    pub fn from_u64s(factors: &[u64]) -> Self {
        Self::from_factors(factors.iter().map(|&m| BigUint::from(m)))
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    /// `Z/m`, or `Z` when `m == 0`.
    pub fn cyclic(m: u64) -> Self {
        Self::from_u64s(&[m])
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            factors: vec![BigUint::zero(); rank],
        }
    }

    /// `k`-fold direct sum with factor-major coordinate layout: coordinate
    /// `i * k + j` is factor `i` of the `j`-th summand. Repeating each factor
    /// `k` times in place keeps the list in canonical form.
    pub fn direct_power(&self, k: usize) -> Self {
        let mut factors = Vec::with_capacity(self.factors.len() * k);
        for f in &self.factors {
            for _ in 0..k {
                factors.push(f.clone());
            }
        }
        FinAbGroup { factors }
    }

    /// Number of generators in the presentation.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Group order; `None` when an infinite cyclic factor is present.
    pub fn order(&self) -> Option<BigUint> {
        let mut o = BigUint::one();
        for f in &self.factors {
            if f.is_zero() {
                return None;
            }
            o *= f;
        }
        Some(o)
    }

    /// Reduces a coordinate vector to the canonical representative modulo
    /// the relations (`0 <= v_i < m_i` for finite factors).
    pub fn reduce_vec(&self, v: &mut [BigInt]) {
        assert_eq!(v.len(), self.factors.len(), "vector length mismatch");
        for (vi, f) in v.iter_mut().zip(&self.factors) {
            if !f.is_zero() {
                let m = BigInt::from(f.clone());
                *vi = vi.mod_floor(&m);
            }
        }
    }

    pub fn vec_is_zero(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.factors.len(), "vector length mismatch");
        v.iter().zip(&self.factors).all(|(vi, f)| {
            if f.is_zero() {
                vi.is_zero()
            } else {
                vi.mod_floor(&BigInt::from(f.clone())).is_zero()
            }
        })
    }

    pub fn zero_vec(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.factors.len()]
    }
}

/// True iff the two groups have the same canonical invariant factors.
pub fn iso_class_equal(a: &FinAbGroup, b: &FinAbGroup) -> bool {
    a == b
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|m| {
                if m.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{}", m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}
