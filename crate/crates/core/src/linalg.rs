//! Exact dense linear algebra over Q and Q(i).
//!
//! Elimination is fraction-free in the Bareiss style: rows are first scaled
//! to integral entries, and the one-step cross-multiplication rule keeps all
//! intermediate entries integral (they are minors of the scaled matrix),
//! which bounds coefficient blow-up. Pivots are chosen by smallest bit size;
//! this is a heuristic only, correctness does not depend on it.

use crate::poly::Poly;
use crate::scalar::{Rat, Scalar};

/// Dense row-major matrix over an exact scalar field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_column(&mut self, j: usize, col: &[T]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn matmul(&self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows);
        let mut out: Matrix<T> = Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * o[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, f: &T) -> Matrix<T> {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = x.clone() * f.clone();
        }
        out
    }

    pub fn add(&self, o: &Matrix<T>) -> Matrix<T> {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(o.data.iter()) {
            *x = x.clone() + y.clone();
        }
        out
    }

    /// Fraction-free row echelon reduction. Returns the reduced working
    /// matrix together with the pivot column of each of the first `rank`
    /// rows.
    fn echelon(&self) -> (Matrix<T>, Vec<usize>) {
        let mut w = self.clone();
        for i in 0..w.rows {
            let start = i * w.cols;
            T::clear_row_denominators(&mut w.data[start..start + w.cols]);
        }
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        let mut prev = T::one();
        for col in 0..w.cols {
            // Smallest-bit-size nonzero pivot in this column at or below `row`.
            let pivot_row = (row..w.rows)
                .filter(|&i| !w[(i, col)].is_zero())
                .min_by_key(|&i| w[(i, col)].bit_size());
            let Some(p) = pivot_row else { continue };
            if p != row {
                w.swap_rows(p, row);
            }
            for i in row + 1..w.rows {
                if w[(i, col)].is_zero() {
                    // Still renormalize to keep the Bareiss invariant.
                    for j in col..w.cols {
                        let t = w[(row, col)].clone() * w[(i, j)].clone();
                        w[(i, j)] = t / prev.clone();
                    }
                    continue;
                }
                for j in (col..w.cols).rev() {
                    let t = w[(row, col)].clone() * w[(i, j)].clone()
                        - w[(i, col)].clone() * w[(row, j)].clone();
                    w[(i, j)] = t / prev.clone();
                }
            }
            prev = w[(row, col)].clone();
            pivot_cols.push(col);
            row += 1;
            if row == w.rows {
                break;
            }
        }
        (w, pivot_cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of the right nullspace.
    ///
    /// Each basis vector is normalized so that its lowest-index nonzero
    /// coordinate equals 1; `dim = cols - rank`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (w, pivot_cols) = self.echelon();
        let rank = pivot_cols.len();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; w.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..w.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![T::zero(); w.cols];
            v[free] = T::one();
            // Back substitution through the echelon rows.
            for i in (0..rank).rev() {
                let pc = pivot_cols[i];
                if pc > free {
                    continue;
                }
                let mut acc = T::zero();
                for j in pc + 1..w.cols {
                    if !w[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + w[(i, j)].clone() * v[j].clone();
                    }
                }
                v[pc] = -(acc / w[(i, pc)].clone());
            }
            // Normalize: lowest-index nonzero coordinate becomes 1.
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let f = v[first].inv();
                for x in v.iter_mut() {
                    if !x.is_zero() {
                        *x = x.clone() * f.clone();
                    }
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `A x = b` for a single right-hand side; `None` if inconsistent.
    ///
    /// When the solution is not unique, free variables are set to zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (w, pivot_cols) = aug.echelon();
        // Inconsistent iff some pivot lands in the augmented column.
        if pivot_cols.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for i in (0..pivot_cols.len()).rev() {
            let pc = pivot_cols[i];
            let mut acc = w[(i, self.cols)].clone();
            for j in pc + 1..self.cols {
                if !w[(i, j)].is_zero() && !x[j].is_zero() {
                    acc = acc - w[(i, j)].clone() * x[j].clone();
                }
            }
            x[pc] = acc / w[(i, pc)].clone();
        }
        Some(x)
    }

    /// Characteristic polynomial `det(xI - A)`, exact.
    ///
    /// Faddeev–LeVerrier trace recursion with exact division by the step
    /// index; shares no code with the tridiagonal determinant recurrence.
    pub fn charpoly(&self) -> Poly<T> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Matrix::<T>::zero(n, n);
        for k in 1..=n {
            // M_k = A * (M_{k-1} + c_{n-k+1} I)
            let mut step = m.clone();
            if k > 1 {
                let c = coeffs[n - k + 1].clone();
                for i in 0..n {
                    step[(i, i)] = step[(i, i)].clone() + c.clone();
                }
                m = self.matmul(&step);
            } else {
                m = self.clone();
            }
            let inv_k = T::from_rat(Rat::new(1.into(), (k as i64).into()));
            coeffs[n - k] = -(m.trace() * inv_k);
        }
        Poly::from_coeffs(coeffs)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, GaussRat};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).nullspace().is_empty());
    }

    #[test]
    fn nullspace_of_zero_matrix_is_full() {
        let basis = Matrix::<Rat>::zero(2, 2).nullspace();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn nullspace_rank_one() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let basis = a.nullspace();
        assert_eq!(basis, vec![vec![rint(1), rat(-1, 2)]]);
        assert_eq!(a.mul_vec(&basis[0]), vec![rint(0), rint(0)]);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[rint(3), rint(1)]), Some(vec![rint(2), rint(1)]));
        let b = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(b.solve(&[rint(1), rint(3)]), None);
    }

    #[test]
    fn charpoly_small() {
        // [[0,-1],[-1,0]] -> x^2 - 1
        let a = m(&[&[0, -1], &[-1, 0]]);
        assert_eq!(
            a.charpoly(),
            Poly::from_coeffs(vec![rint(-1), rint(0), rint(1)])
        );
    }

    #[test]
    fn gauss_matrix_nullspace() {
        // (0, 1; 0, i) has the kernel spanned by (1, 0).
        let a = Matrix::from_rows(vec![
            vec![GaussRat::zero(), GaussRat::one()],
            vec![GaussRat::zero(), GaussRat::i()],
        ]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![GaussRat::one(), GaussRat::zero()]]);
    }

    /// Laplace-expansion determinant, the brute-force oracle for rank.
    fn cofactor_det(a: &Matrix<Rat>) -> Rat {
        let n = a.rows();
        if n == 0 {
            return rint(1);
        }
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut acc = rint(0);
        for j in 0..n {
            if a[(0, j)].is_zero() {
                continue;
            }
            let minor = Matrix::from_rows(
                (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| a[(i, c)].clone())
                            .collect()
                    })
                    .collect(),
            );
            let term = a[(0, j)].clone() * cofactor_det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Rank by exhaustive minors, oracle for `rank + nullity = cols`.
    fn cofactor_rank(a: &Matrix<Rat>) -> usize {
        let max = a.rows().min(a.cols());
        for size in (1..=max).rev() {
            let row_sets = subsets(a.rows(), size);
            let col_sets = subsets(a.cols(), size);
            for rs in &row_sets {
                for cs in &col_sets {
                    let sub = Matrix::from_rows(
                        rs.iter()
                            .map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect())
                            .collect(),
                    );
                    if !cofactor_det(&sub).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity_matches_cofactor_oracle(
            rows in 1usize..=4,
            cols in 1usize..=4,
            seed in proptest::collection::vec(-4i64..=4, 16),
        ) {
            let a = Matrix::from_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| rint(seed[i * 4 + j])).collect())
                    .collect(),
            );
            let ns = a.nullspace();
            prop_assert_eq!(a.rank() + ns.len(), cols);
            prop_assert_eq!(a.rank(), cofactor_rank(&a));
            for v in &ns {
                let prod = a.mul_vec(v);
                prop_assert!(prod.iter().all(|x| x.is_zero()));
            }
        }
    }
}
