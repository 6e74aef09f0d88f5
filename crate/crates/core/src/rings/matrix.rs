//! Exact dense matrices and nullspace computation.
//!
//! Over the rationals the kernel is found by fraction-free (Bareiss-style
//! integer) elimination after clearing row denominators; over a prime field
//! by standard elimination with delayed reduction. Pivoting is deterministic:
//! leftmost nonzero column, then smallest row index. Nullspace vectors are
//! normalized so their first nonzero entry is 1.

use crate::num::{Field, Fp, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            a: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.a[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    acc.add_mul_assign(self.at(i, j), &v[j]);
                }
                acc
            })
            .collect()
    }

    /// Right nullspace basis via plain field elimination.
    pub fn nullspace_generic(&self) -> Vec<Vec<F>> {
        let mut m = self.a.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut row = 0usize;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let Some(p) = (row..rows).find(|&i| !m[i * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(p * cols + j, row * cols + j);
            }
            let inv = m[row * cols + col].inv().expect("pivot invertible");
            for j in col..cols {
                m[row * cols + j] = m[row * cols + j].mul(&inv);
            }
            for i in 0..rows {
                if i == row || m[i * cols + col].is_zero() {
                    continue;
                }
                let f = m[i * cols + col].clone();
                for j in col..cols {
                    let t = f.mul(&m[row * cols + j]);
                    m[i * cols + j] = m[i * cols + j].sub(&t);
                }
            }
            pivot_of_col[col] = Some(row);
            row += 1;
        }
        nullspace_from_rref(&m, rows, cols, &pivot_of_col, |x| x.clone())
    }
}

fn nullspace_from_rref<T, F: Field>(
    m: &[T],
    _rows: usize,
    cols: usize,
    pivot_of_col: &[Option<usize>],
    to_field: impl Fn(&T) -> F,
) -> Vec<Vec<F>> {
    let mut basis = vec![];
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for col in 0..cols {
            if let Some(r) = pivot_of_col[col] {
                v[col] = to_field(&m[r * cols + free]).neg();
            }
        }
        // normalize: first nonzero entry 1
        if let Some(k) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[k].inv().expect("field");
            for x in v.iter_mut() {
                *x = x.mul(&inv);
            }
        }
        basis.push(v);
    }
    basis
}

/// Right nullspace of a rational matrix by fraction-free elimination.
pub fn nullspace_rat(mat: &Matrix<Rat>) -> Vec<Vec<Rat>> {
    let (rows, cols) = (mat.rows, mat.cols);
    // Clear denominators row by row.
    let mut m: Vec<BigInt> = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let mut l = BigInt::one();
        for j in 0..cols {
            l = l.lcm(mat.at(i, j).denom());
        }
        for j in 0..cols {
            let x = mat.at(i, j);
            m.push(x.numer() * (&l / x.denom()));
        }
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut piv_rows: Vec<usize> = vec![];
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i * cols + col].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..cols {
                m.swap(p * cols + j, row * cols + j);
            }
        }
        let pv = m[row * cols + col].clone();
        let row_data: Vec<BigInt> = m[row * cols..(row + 1) * cols].to_vec();
        let chunk = cols;
        m.par_chunks_mut(chunk).enumerate().for_each(|(i, r)| {
            if i == row || r[col].is_zero() {
                return;
            }
            let f = r[col].clone();
            let g = f.gcd(&pv);
            let fr = &f / &g;
            let pr = &pv / &g;
            for j in 0..cols {
                r[j] = &r[j] * &pr - &row_data[j] * &fr;
            }
            // keep growth in check
            let mut content = BigInt::zero();
            for j in 0..cols {
                content = content.gcd(&r[j]);
                if content.is_one() {
                    break;
                }
            }
            if !content.is_zero() && !content.is_one() {
                for j in 0..cols {
                    r[j] = &r[j] / &content;
                }
            }
        });
        pivot_of_col[col] = Some(row);
        piv_rows.push(col);
        row += 1;
    }
    // back substitution on the integer echelon form, done rationally
    let mut basis = vec![];
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &pcol) in piv_rows.iter().enumerate().rev() {
            // m[r] . v = 0  =>  v[pcol] = -(sum_{j>pcol} m[r][j] v[j]) / m[r][pcol]
            let mut acc = Rat::zero();
            for j in (pcol + 1)..cols {
                let coef = &m[r * cols + j];
                if !coef.is_zero() && !v[j].is_zero() {
                    acc = &acc + &(&Rat::from_integer(coef.clone()) * &v[j]);
                }
            }
            let pv = Rat::from_integer(m[r * cols + pcol].clone());
            v[pcol] = &acc.neg() / &pv;
        }
        if let Some(k) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[k].recip();
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
        basis.push(v);
    }
    basis
}

/// Right nullspace over `F_p` on flat `u64` rows; the hot kernel behind the
/// mod-prime fits. Returns `Err` only on an internal inverse failure (the
/// modulus was not prime).
pub fn nullspace_fp(rows_in: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = rows_in.len();
    let mut m: Vec<u64> = Vec::with_capacity(rows * cols);
    for r in rows_in {
        assert_eq!(r.len(), cols);
        m.extend_from_slice(r);
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&i| m[i * cols + col] % p != 0) else {
            continue;
        };
        if pr != row {
            for j in 0..cols {
                m.swap(pr * cols + j, row * cols + j);
            }
        }
        let inv = Fp::new(m[row * cols + col], p).try_inv().expect("prime").v;
        for j in col..cols {
            m[row * cols + j] = Fp::new(m[row * cols + j], p).mul(&Fp::new(inv, p)).v;
        }
        let pivot_row: Vec<u64> = m[row * cols..(row + 1) * cols].to_vec();
        m.par_chunks_mut(cols).enumerate().for_each(|(i, r)| {
            if i == row {
                return;
            }
            let f = r[col] % p;
            if f == 0 {
                return;
            }
            let fneg = p - f;
            for j in col..cols {
                let x = pivot_row[j];
                if x != 0 {
                    r[j] = ((r[j] as u128 + fneg as u128 * x as u128) % p as u128) as u64;
                }
            }
        });
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = vec![];
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for col in 0..cols {
            if let Some(r) = pivot_of_col[col] {
                let x = m[r * cols + free] % p;
                v[col] = if x == 0 { 0 } else { p - x };
            }
        }
        if let Some(k) = v.iter().position(|&x| x != 0) {
            let inv = Fp::new(v[k], p).try_inv().expect("prime").v;
            for x in v.iter_mut() {
                *x = ((*x as u128 * inv as u128) % p as u128) as u64;
            }
        }
        basis.push(v);
    }
    basis
}

/// Field-dispatching nullspace used by the public `ExactMatrix` surface.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.nullspace_generic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint};

    #[test]
    fn rank_one_matrix() {
        let m = Matrix::from_rows(vec![vec![rint(1), rint(2)], vec![rint(2), rint(4)]]);
        let ns = nullspace_rat(&m);
        assert_eq!(ns.len(), 1);
        // normalized: first nonzero entry 1 -> (1, -1/2)
        assert_eq!(ns[0], vec![rint(1), rat(-1, 2)]);
        assert!(m.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn full_rank_identity() {
        let m = Matrix::from_rows(vec![
            vec![rint(1), rint(0), rint(0)],
            vec![rint(0), rint(1), rint(0)],
            vec![rint(0), rint(0), rint(1)],
        ]);
        assert!(nullspace_rat(&m).is_empty());
        assert!(m.nullspace_generic().is_empty());
    }

    #[test]
    fn two_by_three_system() {
        // [[1,1,0],[0,1,1]] -> basis {(1,-1,1)}
        let m = Matrix::from_rows(vec![
            vec![rint(1), rint(1), rint(0)],
            vec![rint(0), rint(1), rint(1)],
        ]);
        let ns = nullspace_rat(&m);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![rint(1), rint(-1), rint(1)]);
    }

    #[test]
    fn fp_kernel_matches_generic() {
        let p = 27449u64;
        let rows = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        let ns = nullspace_fp(&rows, 3, p);
        assert_eq!(ns.len(), 1);
        // (1, -2, 1) normalized
        assert_eq!(ns[0], vec![1, p - 2, 1]);
    }
}
