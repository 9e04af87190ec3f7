//! Dense matrices over exact scalars and fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range (dimension {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("duplicate index {index}")]
    DuplicateIndex { index: usize },
}

/// Row-major rectangular matrix. Generic over the entry type: the crate uses
/// it with [`Rational`] entries publicly and with `BigInt` entries inside the
/// determinant after denominators are cleared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<T>,
}

/// Matrix of exact rationals; the only instantiation in the public API.
pub type RationalMatrix = Matrix<Rational>;

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            entries.extend(row);
        }
        Matrix { n_rows, n_cols, entries }
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                entries.push(f(i, j));
            }
        }
        Matrix { n_rows, n_cols, entries }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        assert!(row < self.n_rows && col < self.n_cols, "index out of range");
        &self.entries[row * self.n_cols + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n_cols.max(1)).take(self.n_rows)
    }
}

impl<T: Clone> Matrix<T> {
    /// The submatrix with the given rows and columns removed; the order of
    /// the remaining rows and columns is preserved.
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Result<Matrix<T>, MatrixError> {
        let keep_rows = keep_indices(drop_rows, self.n_rows)?;
        let keep_cols = keep_indices(drop_cols, self.n_cols)?;
        let mut entries = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &i in &keep_rows {
            for &j in &keep_cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(Matrix {
            n_rows: keep_rows.len(),
            n_cols: keep_cols.len(),
            entries,
        })
    }
}

fn keep_indices(drop: &[usize], len: usize) -> Result<Vec<usize>, MatrixError> {
    let mut dropped = vec![false; len];
    for &index in drop {
        if index >= len {
            return Err(MatrixError::IndexOutOfRange { index, len });
        }
        if dropped[index] {
            return Err(MatrixError::DuplicateIndex { index });
        }
        dropped[index] = true;
    }
    Ok((0..len).filter(|&i| !dropped[i]).collect())
}

impl Matrix<Rational> {
    /// Exact determinant. The 0x0 determinant is 1 (empty product), so double
    /// minors of 2x2 Laplacians stay well-defined.
    ///
    /// Denominators are cleared row by row and the resulting integer matrix
    /// is reduced by Bareiss fraction-free elimination, which keeps every
    /// intermediate value an exact minor determinant instead of letting
    /// coefficients blow up.
    pub fn det(&self) -> Result<Rational, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        let n = self.n_rows;
        if n == 0 {
            return Ok(Rational::one());
        }

        let mut scale = BigInt::one();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.rows() {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            rows.push(
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect(),
            );
            scale *= lcm;
        }

        Ok(Rational::new(bareiss_det(rows), scale))
    }
}

/// Bareiss fraction-free elimination over the integers. Every division is
/// exact; the final pivot is the determinant.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign_flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn mat(rows: Vec<Vec<(i64, i64)>>) -> RationalMatrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(n, d)| ratio(n, d)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let m = RationalMatrix::from_rows(vec![]);
        assert_eq!(m.det().unwrap(), ratio(1, 1));
    }

    #[test]
    fn det_of_1x1() {
        assert_eq!(mat(vec![vec![(5, 3)]]).det().unwrap(), ratio(5, 3));
    }

    #[test]
    fn det_of_2x2() {
        let m = mat(vec![vec![(1, 1), (2, 1)], vec![(3, 1), (4, 1)]]);
        assert_eq!(m.det().unwrap(), ratio(-2, 1));
    }

    #[test]
    fn det_needs_square() {
        let m = mat(vec![vec![(1, 1), (2, 1)]]);
        assert_eq!(
            m.det(),
            Err(MatrixError::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn det_singular_with_zero_pivot() {
        // first pivot zero, forces a swap; second case is genuinely singular
        let m = mat(vec![vec![(0, 1), (1, 1)], vec![(1, 1), (0, 1)]]);
        assert_eq!(m.det().unwrap(), ratio(-1, 1));
        let z = mat(vec![vec![(0, 1), (0, 1)], vec![(0, 1), (1, 1)]]);
        assert_eq!(z.det().unwrap(), ratio(0, 1));
    }

    #[test]
    fn minor_keeps_order() {
        let m = mat(vec![
            vec![(1, 1), (2, 1), (3, 1)],
            vec![(4, 1), (5, 1), (6, 1)],
            vec![(7, 1), (8, 1), (9, 1)],
        ]);
        let keep_all = m.minor(&[], &[]).unwrap();
        assert_eq!(keep_all, m);
        let sub = m.minor(&[1], &[1]).unwrap();
        assert_eq!(sub, mat(vec![vec![(1, 1), (3, 1)], vec![(7, 1), (9, 1)]]));
    }

    #[test]
    fn minor_of_identity() {
        let id3 = RationalMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                ratio(1, 1)
            } else {
                ratio(0, 1)
            }
        });
        let id2 = id3.minor(&[1], &[1]).unwrap();
        assert_eq!(
            id2,
            RationalMatrix::from_fn(2, 2, |i, j| if i == j { ratio(1, 1) } else { ratio(0, 1) })
        );
    }

    #[test]
    fn minor_to_empty() {
        let m = mat(vec![vec![(1, 1), (2, 1)], vec![(3, 1), (4, 1)]]);
        let empty = m.minor(&[0, 1], &[0, 1]).unwrap();
        assert_eq!(empty.n_rows(), 0);
        assert_eq!(empty.det().unwrap(), ratio(1, 1));
    }

    #[test]
    fn minor_rejects_bad_indices() {
        let m = mat(vec![vec![(1, 1), (2, 1)], vec![(3, 1), (4, 1)]]);
        assert_eq!(
            m.minor(&[2], &[]),
            Err(MatrixError::IndexOutOfRange { index: 2, len: 2 })
        );
        assert_eq!(
            m.minor(&[0, 0], &[]),
            Err(MatrixError::DuplicateIndex { index: 0 })
        );
    }
}
