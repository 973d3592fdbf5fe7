//! Dense matrices over [`Scalar`], with exact elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{Signed, Zero};

use super::{Rational, Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of [`Matrix::linear_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Scalar>),
    /// The system is inconsistent; `witness` lists the nonzero right-hand
    /// sides left over after elimination.
    NoSolution {
        witness: Vec<Scalar>,
    },
    Underdetermined {
        rank: usize,
    },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, ScalarError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ScalarError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diag(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// True when every entry is parameter-free.
    pub fn is_constant(&self) -> bool {
        self.data.iter().all(Scalar::is_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|a| a * s)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Rank over the rational-function field.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let pivot = m[(rank, col)].clone();
            for r in rank + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pivot;
                for c in col..m.cols {
                    let v = &m[(r, c)] - &(&f * &m[(rank, c)]);
                    m[(r, c)] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Solves `self * x = y` exactly.
    ///
    /// Pivots are chosen among entries that are not identically zero,
    /// preferring parameter-free ones; a symbolic pivot is treated as
    /// generically nonzero.
    pub fn linear_solve(&self, y: &[Scalar]) -> LinearSolution {
        assert_eq!(self.rows, y.len(), "right-hand side length");
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut rhs = y.to_vec();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            let candidates: Vec<usize> = (r..rows).filter(|&i| !a[(i, col)].is_zero()).collect();
            let Some(&p) = candidates
                .iter()
                .find(|&&i| a[(i, col)].is_constant())
                .or(candidates.first())
            else {
                continue;
            };
            a.swap_rows(r, p);
            rhs.swap(r, p);
            let pivot = a[(r, col)].clone();
            for i in 0..rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] / &pivot;
                for c in col..cols {
                    let v = &a[(i, c)] - &(&f * &a[(r, c)]);
                    a[(i, c)] = v;
                }
                let v = &rhs[i] - &(&f * &rhs[r]);
                rhs[i] = v;
            }
            pivot_cols.push(col);
            r += 1;
            if r == rows {
                break;
            }
        }
        let witness: Vec<Scalar> = rhs[r..].iter().filter(|s| !s.is_zero()).cloned().collect();
        if !witness.is_empty() {
            return LinearSolution::NoSolution { witness };
        }
        if r < cols {
            return LinearSolution::Underdetermined { rank: r };
        }
        let x = pivot_cols
            .iter()
            .enumerate()
            .map(|(row, &col)| &rhs[row] / &a[(row, col)])
            .collect::<Vec<_>>();
        LinearSolution::Unique(x)
    }

    /// Inverse of a symmetric invertible matrix by Gauss-Jordan elimination.
    pub fn invert_symmetric(&self) -> Result<Matrix, ScalarError> {
        if !self.is_symmetric() {
            return Err(ScalarError::NotSymmetric);
        }
        self.invert()
    }

    pub fn invert(&self) -> Result<Matrix, ScalarError> {
        if !self.is_square() {
            return Err(ScalarError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let candidates: Vec<usize> = (col..n).filter(|&i| !a[(i, col)].is_zero()).collect();
            let Some(&p) = candidates
                .iter()
                .find(|&&i| a[(i, col)].is_constant())
                .or(candidates.first())
            else {
                return Err(ScalarError::Singular);
            };
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pivot = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &pivot;
                inv[(col, c)] = &inv[(col, c)] / &pivot;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for c in 0..n {
                    let v = &a[(i, c)] - &(&f * &a[(col, c)]);
                    a[(i, c)] = v;
                    let w = &inv[(i, c)] - &(&f * &inv[(col, c)]);
                    inv[(i, c)] = w;
                }
            }
        }
        Ok(inv)
    }

    /// Inertia `(p, q)` of a constant symmetric invertible matrix, computed by
    /// symmetric (congruence) pivoting. Sylvester's law makes the counts
    /// independent of the pivot sequence.
    pub fn signature(&self) -> Result<(usize, usize), ScalarError> {
        if !self.is_symmetric() {
            return Err(ScalarError::NotSymmetric);
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = self[(i, j)]
                    .as_rational()
                    .ok_or(ScalarError::SymbolicSignature { row: i, col: j })?;
            }
        }
        let (mut pos, mut neg) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
            let k = match pivot {
                Some(k) => k,
                None => {
                    // all remaining diagonal entries vanish: use an off-diagonal
                    // entry a[i][j] != 0 and replace e_i by e_i + e_j
                    let Some((i, j)) = active
                        .iter()
                        .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero())
                    else {
                        return Err(ScalarError::Singular);
                    };
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[i][c] += v;
                    }
                    for r in 0..n {
                        let v = a[r][j].clone();
                        a[r][i] += v;
                    }
                    i
                }
            };
            let d = a[k][k].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for &i in &active {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &d;
                for &c in &active {
                    let v = &f * &a[k][c];
                    a[i][c] -= v;
                }
            }
            for &i in &active {
                if i != k {
                    a[k][i] = Rational::zero();
                }
            }
            active.retain(|&i| i != k);
        }
        Ok((pos, neg))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Params;
    use proptest::prelude::*;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn solve_identity() {
        let y = vec![Scalar::from_int(3), Scalar::from_ratio(-1, 2)];
        assert_eq!(Matrix::identity(2).linear_solve(&y), LinearSolution::Unique(y));
    }

    #[test]
    fn solve_inconsistent_rows() {
        let a = ints(&[&[1], &[1]]);
        match a.linear_solve(&[Scalar::from_int(1), Scalar::from_int(2)]) {
            LinearSolution::NoSolution { witness } => {
                assert_eq!(witness, vec![Scalar::from_int(1)]);
            }
            other => panic!("expected no-solution, got {other:?}"),
        }
    }

    #[test]
    fn solve_underdetermined() {
        let a = ints(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            a.linear_solve(&[Scalar::from_int(1), Scalar::from_int(2)]),
            LinearSolution::Underdetermined { rank: 1 }
        );
    }

    #[test]
    fn solve_symbolic_witness() {
        // a = 1 and a = 1 + beta: consistent only when beta = 0
        let p = Params::new(["beta"]);
        let a = ints(&[&[1], &[1]]);
        let y = vec![Scalar::one(), Scalar::one() + Scalar::param(&p, 0)];
        match a.linear_solve(&y) {
            LinearSolution::NoSolution { witness } => {
                assert_eq!(witness[0].to_string(), "beta");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn signature_examples() {
        let d = |v: &[i64]| Matrix::diag(v.iter().map(|&x| Scalar::from_int(x)).collect());
        assert_eq!(d(&[1, -1, 1]).signature(), Ok((2, 1)));
        assert_eq!(d(&[4, -4, 16]).signature(), Ok((2, 1)));
        assert_eq!(d(&[1, 1, 1]).signature(), Ok((3, 0)));
        assert_eq!(d(&[1, 0, 1]).signature(), Err(ScalarError::Singular));
        // hyperbolic plane has zero diagonal
        assert_eq!(ints(&[&[0, 1], &[1, 0]]).signature(), Ok((1, 1)));
    }

    #[test]
    fn signature_refuses_parameters() {
        let p = Params::new(["t"]);
        let m = Matrix::diag(vec![Scalar::param(&p, 0), Scalar::one()]);
        assert!(matches!(m.signature(), Err(ScalarError::SymbolicSignature { .. })));
    }

    #[test]
    fn invert_examples() {
        let d = |v: &[Scalar]| Matrix::diag(v.to_vec());
        let g = d(&[Scalar::from_int(1), Scalar::from_int(-1), Scalar::from_int(1)]);
        assert_eq!(g.invert_symmetric().unwrap(), g);
        let g = d(&[Scalar::from_int(4), Scalar::from_int(-4), Scalar::from_int(16)]);
        assert_eq!(
            g.invert_symmetric().unwrap(),
            d(&[
                Scalar::from_ratio(1, 4),
                Scalar::from_ratio(-1, 4),
                Scalar::from_ratio(1, 16)
            ])
        );
        let m = ints(&[&[2, 3], &[3, -1]]);
        let inv = m.invert_symmetric().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(ints(&[&[1, 2], &[2, 4]]).invert_symmetric(), Err(ScalarError::Singular));
    }

    fn arb_invertible() -> impl Strategy<Value = Matrix> {
        prop::collection::vec(-3i64..=3, 9)
            .prop_map(|v| Matrix::from_fn(3, 3, |i, j| Scalar::from_int(v[3 * i + j])))
            .prop_filter("invertible", |m| m.rank() == 3)
    }

    proptest! {
        #[test]
        fn signature_is_congruence_invariant(p in arb_invertible(), s in prop::sample::select(vec![[1i64, -1, 1], [1, 1, -1], [-1, -1, 2], [3, 1, 1]])) {
            let base = Matrix::diag(s.iter().map(|&x| Scalar::from_int(x)).collect());
            let congruent = &(&p.transpose() * &base) * &p;
            prop_assert_eq!(congruent.signature().unwrap(), base.signature().unwrap());
        }
    }
}
