//! Dense matrices over any [`Ring`], with a division-free determinant.
//!
//! Entries of the even Grassmann subring commute but include nilpotents, so
//! elimination methods that divide are unusable; the determinant is a Laplace
//! expansion memoized on the set of remaining columns (`O(2^n·n)` products).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    zero: R,
}

pub const MAX_DET_SIZE: usize = 24;

impl<R: Ring> Matrix<R> {
    /// `zero` fixes the ambient ring (e.g. generator count) for empty shapes.
    pub fn from_rows(rows: Vec<Vec<R>>, zero: &R) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            zero: zero.zero_like(),
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        zero: &R,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            zero: zero.zero_like(),
        }
    }

    pub fn zeros(rows: usize, cols: usize, zero: &R) -> Self {
        Self::from_fn(rows, cols, zero, |_, _| zero.zero_like())
    }

    pub fn identity(n: usize, zero: &R) -> Self {
        Self::from_fn(n, n, zero, |i, j| {
            if i == j {
                zero.one_like()
            } else {
                zero.zero_like()
            }
        })
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

    pub fn zero_element(&self) -> &R {
        &self.zero
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &R> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, zero: &S, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.zero, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Copy of the block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, &self.zero, |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, &self.zero, |i, j| {
            (0..self.cols).fold(self.zero.zero_like(), |acc, k| {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(b))
                }
            })
        }))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, &self.zero, |i, j| {
            self.get(i, j).add(other.get(i, j))
        }))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, &self.zero, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        }))
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Multiplies every entry by `c` on the left.
    pub fn scale_left(&self, c: &R) -> Self {
        Self::from_fn(self.rows, self.cols, &self.zero, |i, j| {
            c.mul(self.get(i, j))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    fn check_square_central(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} is not square",
                self.rows, self.cols
            )));
        }
        if let Some(pos) = self.data.iter().position(|e| !e.is_central()) {
            return Err(Error::Parity(format!(
                "entry ({}, {}) is not even; determinant needs commuting entries",
                pos / self.cols + 1,
                pos % self.cols + 1
            )));
        }
        Ok(())
    }

    /// Division-free determinant over the commutative ring of the entries.
    pub fn det(&self) -> Result<R> {
        self.check_square_central()?;
        if self.rows > MAX_DET_SIZE {
            return Err(Error::SizeTooLarge(self.rows));
        }
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> R {
        let n = self.rows;
        if n == 0 {
            return self.zero.one_like();
        }
        let mut memo: HashMap<u64, R> = HashMap::new();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.minor_det(full, &mut memo)
    }

    /// Determinant of the rows `n - |cols|..n` restricted to the column set.
    fn minor_det(&self, cols: u64, memo: &mut HashMap<u64, R>) -> R {
        let k = cols.count_ones() as usize;
        if k == 0 {
            return self.zero.one_like();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let row = self.rows - k;
        let mut acc = self.zero.zero_like();
        let mut rest = cols;
        let mut position = 0;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = self.get(row, c);
            if !entry.is_zero() {
                let sub = self.minor_det(cols & !(1u64 << c), memo);
                if !sub.is_zero() {
                    let term = entry.mul(&sub);
                    acc = if position % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
            zero: self.zero.clone(),
        }
    }

    /// Classical adjoint: transposed matrix of signed cofactors, so that
    /// `adj(E)·E = E·adj(E) = det(E)·I`.
    pub fn adjugate(&self) -> Result<Self> {
        self.check_square_central()?;
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        if n == 1 {
            return Ok(Self::identity(1, &self.zero));
        }
        let mut out = Self::zeros(n, n, &self.zero);
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).det_unchecked();
                out.set(j, i, if (i + j) % 2 == 0 { cof } else { cof.neg() });
            }
        }
        Ok(out)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}
