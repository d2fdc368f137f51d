use std::fmt;

use super::poly::Poly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Dense matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(d: &[R]) -> Self {
        Self::from_fn(d.len(), d.len(), |i, j| {
            if i == j {
                d[i].clone()
            } else {
                R::zero()
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].plus(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn trace(&self) -> Result<R> {
        self.require_square()?;
        Ok((0..self.rows).fold(R::zero(), |acc, i| acc.plus(self.get(i, i))))
    }

    /// Coefficients of det(xI − M), leading coefficient first, by Berkowitz's
    /// division-free algorithm.
    ///
    /// Read lowest degree first, the same list is det(I − xM).
    pub fn charpoly_coeffs(&self) -> Result<Vec<R>> {
        self.require_square()?;
        let mut p = vec![R::one()];
        for k in 0..self.rows {
            // Leading block A[0..k][0..k], column C = A[0..k][k], row R = A[k][0..k].
            let mut t = Vec::with_capacity(k + 2);
            t.push(R::one());
            t.push(self.get(k, k).negated());
            let mut v: Vec<R> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let rv = (0..k).fold(R::zero(), |acc, j| acc.plus(&self.get(k, j).times(&v[j])));
                t.push(rv.negated());
                v = (0..k)
                    .map(|i| {
                        (0..k).fold(R::zero(), |acc, j| acc.plus(&self.get(i, j).times(&v[j])))
                    })
                    .collect();
            }
            let mut next = vec![R::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate().take(i + 1) {
                    if i - j < t.len() {
                        *slot = slot.plus(&t[i - j].times(pj));
                    }
                }
            }
            p = next;
        }
        Ok(p)
    }

    /// det(xI − M) as a polynomial in x.
    pub fn charpoly(&self) -> Result<Poly<R>> {
        let mut c = self.charpoly_coeffs()?;
        c.reverse();
        Ok(Poly::new(c))
    }

    /// det(I − xM) as a polynomial in x.
    pub fn det_one_minus_x(&self) -> Result<Poly<R>> {
        Ok(Poly::new(self.charpoly_coeffs()?))
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

impl<R: Field> Matrix<R> {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<R> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return Ok(R::zero());
                };
                m.swap_rows(k, swap);
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m
                        .get(i, j)
                        .times(&pivot)
                        .minus(&m.get(i, k).times(m.get(k, j)))
                        .divide(&prev)
                        .expect("Bareiss divisor is a previous nonzero pivot");
                    m.set(i, j, v);
                }
                m.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.negated() } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).minus(&f.times(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {v : Mv = 0}.
    pub fn nullspace(&self) -> Vec<Vec<R>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![R::zero(); self.cols];
                v[f] = R::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).negated();
                }
                v
            })
            .collect()
    }

    /// Basis of the ζ-eigenspace ker(M − ζI).
    pub fn eigenspace_basis(&self, zeta: &R) -> Result<Vec<Vec<R>>> {
        self.require_square()?;
        let shifted = self.sub(&Self::identity(self.rows).scale(zeta))?;
        Ok(shifted.nullspace())
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                R::one()
            } else {
                R::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Solve M x = b for one solution, if any.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![R::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring + fmt::Display> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Cyclotomic, Rational};

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn det_small() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det().unwrap(), q(-2));
        assert_eq!(
            m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).det().unwrap(),
            q(1)
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), q(0));
    }

    #[test]
    fn charpoly_three_cycle() {
        let p = m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]).charpoly().unwrap();
        assert_eq!(p, Poly::from_ints(&[-1, 0, 0, 1]));
    }

    #[test]
    fn det_one_minus_x() {
        let id = Matrix::<Rational>::identity(2);
        assert_eq!(id.det_one_minus_x().unwrap(), Poly::from_ints(&[1, -2, 1]));
        let d = m(&[&[-1, 0], &[0, 1]]);
        assert_eq!(d.det_one_minus_x().unwrap(), Poly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn eigenspaces() {
        let swap = m(&[&[0, 1], &[1, 0]]);
        let b = swap.eigenspace_basis(&q(-1)).unwrap();
        assert_eq!(b, vec![vec![q(-1), q(1)]]);
        assert_eq!(
            Matrix::<Rational>::identity(2)
                .eigenspace_basis(&q(1))
                .unwrap()
                .len(),
            2
        );
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let d = Matrix::diagonal(&[z3.clone(), &z3 * &z3]);
        assert!(d
            .eigenspace_basis(&Cyclotomic::root_of_unity(5, 1))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn not_square() {
        assert!(matches!(
            Matrix::<Rational>::zeros(2, 3).det(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
    }
}
