use abelian_linalg::{snf, Matrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// Fraction-free determinant (Bareiss), independent of the SNF code path.
fn bareiss_det(m: &Matrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
            .prop_map(move |rows| Matrix::from_rows(&rows))
    })
}

proptest! {
    #[test]
    fn snf_roundtrip_and_unimodularity(m in matrix_strategy()) {
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(bareiss_det(&s.u).abs(), BigInt::from(1));
        prop_assert_eq!(bareiss_det(&s.v).abs(), BigInt::from(1));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        // Off-diagonal entries vanish.
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_first_factor_is_entry_gcd(m in matrix_strategy()) {
        use num_integer::Integer;
        let s = snf(&m);
        let gcd = m.entries().iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
        if gcd.is_zero() {
            prop_assert_eq!(s.rank(), 0);
        } else {
            prop_assert_eq!(BigInt::from(s.diagonal()[0].clone()), gcd);
        }
    }
}

#[test]
fn snf_is_deterministic() {
    let m = Matrix::from_rows(&[vec![3, 1, -4], vec![2, -3, 1], vec![-4, 4, 0]]);
    let a = snf(&m);
    let b = snf(&m);
    assert_eq!(a.u, b.u);
    assert_eq!(a.v, b.v);
    assert_eq!(a.d, b.d);
}
