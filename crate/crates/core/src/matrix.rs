use std::fmt;

use num::BigRational;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::{Poly, Vars};

/// A ring whose elements know their own context (variable set, strand count).
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.vars())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Products above this many inner multiplications fan out over rows.
const PAR_THRESHOLD: usize = 4096;

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize, proto: &R) -> Self {
        let z = proto.zero_like();
        Matrix { rows, cols, data: vec![z; rows * cols] }
    }

    pub fn identity(n: usize, proto: &R) -> Self {
        let (z, o) = (proto.zero_like(), proto.one_like());
        Self::from_fn(n, n, |r, c| if r == c { o.clone() } else { z.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    /// Ordered product: entries of `self` multiply on the left.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let exec = if self.rows * self.cols * other.cols >= PAR_THRESHOLD { Exec::Parallel } else { Exec::Sequential };
        self.mul_with(other, exec)
    }

    pub fn mul_with(&self, other: &Self, exec: Exec) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch { left: self.shape(), right: other.shape() });
        }
        let proto = self.data.first().or(other.data.first());
        let Some(proto) = proto else {
            return Ok(Matrix { rows: self.rows, cols: other.cols, data: Vec::new() });
        };
        let zero = proto.zero_like();
        let rows = exec.map_range(self.rows, |r| {
            (0..other.cols)
                .map(|c| {
                    let mut acc = zero.clone();
                    for k in 0..self.cols {
                        let a = self.get(r, k);
                        if a.is_zero() {
                            continue;
                        }
                        let b = other.get(k, c);
                        if b.is_zero() {
                            continue;
                        }
                        acc = acc.add(&a.mul(b));
                    }
                    acc
                })
                .collect::<Vec<_>>()
        });
        Ok(Matrix { rows: self.rows, cols: other.cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn scale_left(&self, x: &R) -> Self {
        self.map(|e| x.mul(e))
    }

    pub fn scale_right(&self, x: &R) -> Self {
        self.map(|e| e.mul(x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.entries().all(|(r, c, x)| if r == c { *x == x.one_like() } else { x.is_zero() })
    }

    /// First position where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.entries().zip(&other.data).find(|((_, _, a), b)| a != b).map(|((r, c, _), _)| (r, c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for (r, c, x) in block.entries() {
            self.set(r0 + r, c0 + c, x.clone());
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows.start + r, cols.start + c).clone())
    }

    /// Assembles a block matrix from a grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<Self>]) -> Result<Self> {
        let br = blocks.len();
        let bc = blocks.first().map_or(0, |b| b.len());
        let (h, w) = blocks.first().and_then(|b| b.first()).map_or((0, 0), |m| m.shape());
        let proto = blocks.first().and_then(|b| b.first()).and_then(|m| m.data.first());
        if blocks.iter().any(|row| row.len() != bc || row.iter().any(|m| m.shape() != (h, w))) {
            return Err(Error::SizeMismatch("uneven blocks".into()));
        }
        let Some(proto) = proto else {
            return Ok(Matrix { rows: br * h, cols: bc * w, data: Vec::new() });
        };
        let mut out = Self::zeros(br * h, bc * w, proto);
        for (i, row) in blocks.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                out.set_block(i * h, j * w, m);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let proto = self.data.first().ok_or_else(|| Error::Invalid("empty matrix".into()))?;
        let mut out = Self::identity(self.rows, proto);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

impl<R: Ring> Matrix<R> {
    /// Coefficients `[1, c_1, .., c_n]` of `det(xI - M) = x^n + c_1 x^(n-1) + .. + c_n`.
    ///
    /// Division-free (Berkowitz), so it works over any commutative ring.
    pub fn charpoly(&self) -> Result<Vec<R>> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: self.shape() });
        }
        let Some(proto) = self.data.first() else {
            return Err(Error::Invalid("charpoly of an empty matrix needs a ring context".into()));
        };
        Ok(berkowitz(self, proto))
    }

    pub fn det(&self) -> Result<R> {
        let cp = self.charpoly()?;
        let n = self.rows;
        let last = cp[n].clone();
        Ok(if n.is_multiple_of(2) { last } else { last.neg() })
    }

    /// `adj(M)` via Cayley-Hamilton.
    pub fn adjugate(&self) -> Result<Self> {
        let cp = self.charpoly()?;
        let n = self.rows;
        let proto = &self.data[0];
        // M^(n-1) + c_1 M^(n-2) + .. + c_(n-1) I, then sign (-1)^(n-1)
        let mut acc = Self::identity(n, proto);
        for c in cp.iter().take(n).skip(1) {
            acc = self.mul(&acc)?.add(&Self::identity(n, proto).scale_left(c))?;
        }
        Ok(if n % 2 == 1 { acc } else { acc.neg() })
    }
}

fn berkowitz<R: Ring>(m: &Matrix<R>, proto: &R) -> Vec<R> {
    let n = m.rows;
    let one = proto.one_like();
    if n == 0 {
        return vec![one];
    }
    // Work from the bottom-right corner outwards.
    let mut vect = vec![one.clone(), m.get(n - 1, n - 1).neg()];
    for k in (0..n - 1).rev() {
        let size = n - k;
        let a = m.get(k, k);
        let row: Vec<R> = (k + 1..n).map(|c| m.get(k, c).clone()).collect();
        let col: Vec<R> = (k + 1..n).map(|r| m.get(r, k).clone()).collect();
        let sub = m.submatrix(k + 1..n, k + 1..n);
        let mut diags = vec![one.clone(), a.neg()];
        let mut v = col;
        for _ in 0..size - 1 {
            let dot = row.iter().zip(&v).fold(proto.zero_like(), |acc, (x, y)| acc.add(&x.mul(y)));
            diags.push(dot.neg());
            v = (0..size - 1)
                .map(|r| (0..size - 1).fold(proto.zero_like(), |acc, c| acc.add(&sub.get(r, c).mul(&v[c]))))
                .collect();
        }
        // Toeplitz (size+1) x size lower-triangular times vect.
        vect = (0..=size)
            .map(|i| {
                (0..size.min(i + 1)).fold(proto.zero_like(), |acc, j| {
                    if j < vect.len() {
                        acc.add(&diags[i - j].mul(&vect[j]))
                    } else {
                        acc
                    }
                })
            })
            .collect();
    }
    vect
}

impl Matrix<Poly> {
    pub fn vars(&self) -> Option<&Vars> {
        self.data.first().map(|p| p.vars())
    }

    pub fn embed(&self, target: &Vars) -> Result<Self> {
        self.try_map(|p| p.embed(target))
    }

    pub fn int(vars: &Vars, rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| Poly::int(vars, x)).collect()).collect())
            .expect("rectangular")
    }

    /// Inverse over the Laurent ring; needs a unit determinant.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch { left: self.shape(), right: self.shape() });
        }
        let det = self.det()?;
        let inv = det.inverse()?;
        Ok(self.adjugate()?.scale_left(&inv))
    }

    pub fn substitute(&self, target: &Vars, values: &[(&str, Poly)]) -> Result<Self> {
        self.try_map(|p| p.substitute(target, values))
    }

    /// Evaluates every entry at rational values, giving a constant matrix.
    pub fn eval(&self, values: &[BigRational]) -> Result<Self> {
        let empty = Vars::empty();
        self.try_map(|p| Ok(Poly::constant(&empty, p.eval(values)?)))
    }

    /// Kronecker-style expansion of a scalar to a `d x d` block.
    pub fn scalar(vars: &Vars, d: usize, x: &Poly) -> Self {
        Self::identity(d, &Poly::zero(vars)).scale_left(x)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Vars {
        Vars::new(&["t"])
    }

    fn p(s: &str) -> Poly {
        Poly::parse(&v(), s).unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<Poly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn det_and_charpoly() {
        let b = m(&[&["0", "t"], &["1", "1 - t"]]);
        assert_eq!(b.det().unwrap(), p("-t"));
        let cp = b.charpoly().unwrap();
        assert_eq!(cp, vec![p("1"), p("t - 1"), p("-t")]);
        let c = m(&[&["2", "1", "0"], &["1", "3", "t"], &["0", "1", "1"]]);
        // 2(3 - t) - 1(1) = 5 - 2t
        assert_eq!(c.det().unwrap(), p("5 - 2*t"));
    }

    #[test]
    fn inverse_of_burau_block() {
        let b = m(&[&["0", "t"], &["1", "1 - t"]]);
        let inv = b.inverse().unwrap();
        assert_eq!(inv, m(&[&["1 - t^-1", "1"], &["t^-1", "0"]]));
        assert!(b.mul(&inv).unwrap().is_identity());
        let singular = m(&[&["1", "1"], &["1", "1"]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn shape_errors() {
        let a = m(&[&["1", "2"]]);
        assert!(a.mul(&a).is_err());
        assert!(a.add(&m(&[&["1"]])).is_err());
    }

    #[test]
    fn parallel_product_matches_sequential() {
        let a = Matrix::from_fn(9, 9, |r, c| Poly::int(&v(), (r * 3 + c) as i64 - 7).mul(&p("t + 1")));
        let b = a.transpose();
        assert_eq!(a.mul_with(&b, Exec::Parallel).unwrap(), a.mul_with(&b, Exec::Sequential).unwrap());
    }
}
