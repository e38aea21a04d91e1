use crate::matrix::Matrix;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular and `D`
/// diagonal, nonnegative, satisfying the divisibility chain `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d.get(i, i).is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigUint> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).magnitude().clone()).collect()
    }
}

#[derive(Clone, Copy, Default)]
pub(crate) struct Track {
    pub u: bool,
    pub v: bool,
}

pub(crate) struct SnfCore {
    pub d: Matrix,
    pub rank: usize,
    pub u: Option<Matrix>,
    pub v: Option<Matrix>,
}

/// Full Smith normal form with both transforms.
pub fn snf(m: &Matrix) -> SnfResult {
    let core = snf_with(m, Track { u: true, v: true });
    SnfResult {
        u: core.u.unwrap(),
        d: core.d,
        v: core.v.unwrap(),
    }
}

/// Pivot rule: smallest absolute value among nonzero entries of the trailing
/// submatrix, ties broken by row-major position. Fixed so that outputs are
/// reproducible bit-for-bit.
fn find_pivot(a: &Matrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_mag: Option<BigUint> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let mag = e.magnitude();
            if best_mag.as_ref().is_none_or(|b| mag < b) {
                best = Some((i, j));
                best_mag = Some(mag.clone());
            }
        }
    }
    best
}

fn find_nondivisible(a: &Matrix, k: usize) -> Option<usize> {
    let p = a.get(k, k);
    for i in k + 1..a.rows() {
        for j in k + 1..a.cols() {
            let e = a.get(i, j);
            if !e.is_zero() && !(e % p).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

pub(crate) fn snf_with(m: &Matrix, track: Track) -> SnfCore {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = track.u.then(|| Matrix::identity(rows));
    let mut v = track.v.then(|| Matrix::identity(cols));

    let mut k = 0;
    let bound = rows.min(cols);
    while k < bound {
        let Some((pi, pj)) = find_pivot(&a, k) else {
            break;
        };
        a.swap_rows(k, pi);
        if let Some(u) = u.as_mut() {
            u.swap_rows(k, pi);
        }
        a.swap_cols(k, pj);
        if let Some(v) = v.as_mut() {
            v.swap_cols(k, pj);
        }

        'reduce: loop {
            // Clear the pivot column. A nonzero remainder is strictly smaller
            // than the pivot, so swapping it up makes progress.
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let q = a.get(i, k) / a.get(k, k);
                a.row_axpy(i, k, &q);
                if let Some(u) = u.as_mut() {
                    u.row_axpy(i, k, &q);
                }
                if !a.get(i, k).is_zero() {
                    a.swap_rows(i, k);
                    if let Some(u) = u.as_mut() {
                        u.swap_rows(i, k);
                    }
                    continue 'reduce;
                }
            }
            // Clear the pivot row.
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let q = a.get(k, j) / a.get(k, k);
                a.col_axpy(j, k, &q);
                if let Some(v) = v.as_mut() {
                    v.col_axpy(j, k, &q);
                }
                if !a.get(k, j).is_zero() {
                    a.swap_cols(j, k);
                    if let Some(v) = v.as_mut() {
                        v.swap_cols(j, k);
                    }
                    continue 'reduce;
                }
            }
            // Row and column are clean; enforce the divisibility chain by
            // folding any offending row into the pivot row.
            if let Some(i) = find_nondivisible(&a, k) {
                let minus_one = BigInt::from(-1);
                a.row_axpy(k, i, &minus_one);
                if let Some(u) = u.as_mut() {
                    u.row_axpy(k, i, &minus_one);
                }
                continue 'reduce;
            }
            break;
        }

        if a.get(k, k).is_negative() {
            a.negate_row(k);
            if let Some(u) = u.as_mut() {
                u.negate_row(k);
            }
        }
        k += 1;
    }

    SnfCore { d: a, rank: k, u, v }
}

/// Echelon basis of the lattice spanned by the columns of `gens`, computed
/// with integer column operations only.
pub(crate) fn column_lattice_basis(gens: &Matrix) -> Matrix {
    let mut a = gens.clone();
    let rows = a.rows();
    let cols = a.cols();
    let mut r = 0;
    for row in 0..rows {
        if r == cols {
            break;
        }
        loop {
            let mut jmin: Option<usize> = None;
            let mut best: Option<BigUint> = None;
            for j in r..cols {
                let e = a.get(row, j);
                if e.is_zero() {
                    continue;
                }
                let mag = e.magnitude();
                if best.as_ref().is_none_or(|b| mag < b) {
                    jmin = Some(j);
                    best = Some(mag.clone());
                }
            }
            let Some(jmin) = jmin else {
                break;
            };
            a.swap_cols(r, jmin);
            let mut remainder = false;
            for j in r + 1..cols {
                if a.get(row, j).is_zero() {
                    continue;
                }
                let q = a.get(row, j) / a.get(row, r);
                a.col_axpy(j, r, &q);
                if !a.get(row, j).is_zero() {
                    remainder = true;
                }
            }
            if !remainder {
                break;
            }
        }
        if !a.get(row, r).is_zero() {
            if a.get(row, r).is_negative() {
                a.negate_col(r);
            }
            r += 1;
        }
    }
    a.take_columns(0..r)
}

/// Solves `B x = b` for `B` with full column rank, given the SNF of `B`.
/// Panics if no integer solution exists; callers use this only where a
/// solution is mathematically guaranteed.
pub(crate) fn solve_full_rank(basis_snf: &SnfCore, b: &[BigInt]) -> Vec<BigInt> {
    let u = basis_snf.u.as_ref().expect("solver needs U");
    let v = basis_snf.v.as_ref().expect("solver needs V");
    let rank = basis_snf.rank;
    let y = u.apply(b);
    let mut z = vec![BigInt::zero(); v.rows()];
    for (i, yi) in y.iter().enumerate() {
        if i < rank {
            let d = basis_snf.d.get(i, i);
            let (q, r) = (yi / d, yi % d);
            assert!(r.is_zero(), "vector not in the lattice spanned by basis");
            z[i] = q;
        } else {
            assert!(yi.is_zero(), "vector not in the lattice spanned by basis");
        }
    }
    v.apply(&z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_roundtrip(m: &Matrix) -> SnfResult {
        let s = snf(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "U*M*V != D");
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero in the chain");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "chain {} | {} fails", w[0], w[1]);
            }
        }
        s
    }

    #[test]
    fn snf_identity() {
        let s = check_roundtrip(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
    }

    #[test]
    fn snf_zero() {
        let s = check_roundtrip(&Matrix::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn snf_two_by_two() {
        // |det| = 8 and the gcd of the entries is 2, so D = diag(2, 4).
        let m = Matrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check_roundtrip(&m);
        let expect = Matrix::from_rows(&[vec![2, 0], vec![0, 4]]);
        assert_eq!(s.d, expect);
    }

    #[test]
    fn snf_rectangular() {
        let m = Matrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let s = check_roundtrip(&m);
        assert_eq!(
            s.diagonal(),
            vec![
                BigUint::from(2u32),
                BigUint::from(2u32),
                BigUint::from(156u32)
            ]
        );
    }

    #[test]
    fn kernel_columns_of_v() {
        let m = Matrix::from_rows(&[vec![1, 0, 1]]);
        let core = snf_with(&m, Track { u: false, v: true });
        let k = core.v.unwrap().take_columns(core.rank..3);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn column_lattice_of_redundant_generators() {
        let gens = Matrix::from_rows(&[vec![2, 4, 0], vec![0, 0, 3]]);
        let b = column_lattice_basis(&gens);
        assert_eq!(b.cols(), 2);
        assert_eq!(*b.get(0, 0), BigInt::from(2));
        assert_eq!(*b.get(1, 1), BigInt::from(3));
    }

    #[test]
    fn solver_recovers_combination() {
        let basis = Matrix::from_rows(&[vec![2, 0], vec![0, 3], vec![1, 1]]);
        let core = snf_with(&basis, Track { u: true, v: true });
        let b = basis.apply(&[BigInt::from(5), BigInt::from(-2)]);
        let x = solve_full_rank(&core, &b);
        assert_eq!(basis.apply(&x), b);
    }
}
