//! Exact dense matrices over a generic ring.
//!
//! Determinants stay in the coefficient ring: fraction-free Bareiss
//! elimination when entries admit exact division, and memoized minor
//! expansion for polynomial entries. Characteristic polynomials can also be
//! cross-checked with Faddeev-LeVerrier over Q-algebras.

use crate::poly::{MPoly, VarSet};
use crate::ring::{ArithError, Coeff, ExactDiv, Field, Ring};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                if self[(i, k)].is_zero() || other[(k, j)].is_zero() {
                    continue;
                }
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Determinant by minor expansion along successive rows, memoized on the
    /// set of surviving columns. Exact over any commutative ring; intended
    /// for symbolic entries where fraction-free elimination would require
    /// polynomial division.
    pub fn det_expansion(&self) -> Result<T, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        assert!(n <= 64, "expansion determinant limited to 64 columns");
        let mut memo: HashMap<u64, T> = HashMap::new();
        let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        Ok(self.det_minor(full, 0, &mut memo))
    }

    fn det_minor(&self, cols: u64, row: usize, memo: &mut HashMap<u64, T>) -> T {
        if cols == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut sign_pos = true;
        for j in 0..self.cols {
            if cols & (1u64 << j) == 0 {
                continue;
            }
            let e = &self[(row, j)];
            if !e.is_zero() {
                let sub = self.det_minor(cols & !(1u64 << j), row + 1, memo);
                let term = e.clone() * sub;
                acc = if sign_pos { acc + term } else { acc - term };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Ring + ExactDiv> Matrix<T> {
    /// Fraction-free Bareiss elimination; all divisions are exact in the
    /// entry ring.
    pub fn det_bareiss(&self) -> Result<T, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut sign_pos = true;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[(i, k)].is_zero());
                match pivot {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign_pos = !sign_pos;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num.exact_div(&prev);
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if sign_pos { det } else { -det })
    }
}

impl<T: Field> Matrix<T> {
    /// Exact rank by Gaussian elimination over a field.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&i| !m[(i, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != row && !m[(i, col)].is_zero() {
                    let f = m[(i, col)].clone();
                    for j in col..m.cols {
                        let v = m[(row, j)].clone() * f.clone();
                        m[(i, j)] = m[(i, j)].clone() - v;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Characteristic polynomial coefficients (monic, lowest degree first)
    /// via Hessenberg reduction; O(n^3) field operations, used for bulk
    /// numeric evaluation.
    pub fn char_poly_coeffs(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return vec![T::one()];
        }
        // Reduce to upper Hessenberg form by a similarity transform.
        let mut h = self.clone();
        for k in 1..n.saturating_sub(1) {
            // Find a nonzero entry below the subdiagonal position (k, k-1).
            let pivot = (k..n).find(|&i| !h[(i, k - 1)].is_zero());
            let Some(p) = pivot else { continue };
            if p != k {
                h.swap_rows(k, p);
                h.swap_cols(k, p);
            }
            let inv = h[(k, k - 1)].inv().expect("nonzero pivot");
            for i in k + 1..n {
                if h[(i, k - 1)].is_zero() {
                    continue;
                }
                let f = h[(i, k - 1)].clone() * inv.clone();
                // row_i -= f * row_k, then col_k += f * col_i to preserve similarity.
                for j in 0..n {
                    let v = h[(k, j)].clone() * f.clone();
                    h[(i, j)] = h[(i, j)].clone() - v;
                }
                for j in 0..n {
                    let v = h[(j, i)].clone() * f.clone();
                    h[(j, k)] = h[(j, k)].clone() + v;
                }
            }
        }
        // p_k(x) = det(x I_k - H_k) by the Hessenberg recurrence.
        let mut polys: Vec<Vec<T>> = vec![vec![T::one()]];
        for k in 1..=n {
            // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] (prod subdiag) p_i
            let mut p = poly_shift_mul(&polys[k - 1], &h[(k - 1, k - 1)]);
            let mut beta = T::one();
            for i in (0..k - 1).rev() {
                beta = beta * h[(i + 1, i)].clone();
                if h[(i, k - 1)].is_zero() || beta.is_zero() {
                    if beta.is_zero() {
                        break;
                    }
                    continue;
                }
                let c = h[(i, k - 1)].clone() * beta.clone();
                for (idx, coeff) in polys[i].iter().enumerate() {
                    let v = coeff.clone() * c.clone();
                    p[idx] = p[idx].clone() - v;
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

/// (x - a) * p for dense univariate coefficients.
fn poly_shift_mul<T: Field>(p: &[T], a: &T) -> Vec<T> {
    let mut out = vec![T::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].clone() + c.clone();
        let v = c.clone() * a.clone();
        out[i] = out[i].clone() - v;
    }
    out
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

impl<C: Coeff> Matrix<MPoly<C>> {
    fn entry_vars(&self) -> Option<Arc<VarSet>> {
        self.data
            .iter()
            .find(|p| !p.vars().is_empty())
            .or(self.data.first())
            .map(|p| p.vars().clone())
    }

    /// det(M - u I) over the entry ring extended by a fresh variable `u`.
    ///
    /// The expansion strategy stays in the polynomial ring; Bareiss is used
    /// only by scalar callers.
    pub fn char_poly(&self, u_name: &str) -> Result<MPoly<C>, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape(format!(
                "characteristic polynomial of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let vars = self
            .entry_vars()
            .ok_or_else(|| ArithError::Shape("empty matrix has no variable list".into()))?;
        assert!(vars.index_of(u_name).is_none(), "variable {u_name} already in use");
        let evars = vars.extended(u_name);
        let positions: Vec<usize> = (0..vars.len()).collect();
        let u = MPoly::<C>::var_named(&evars, u_name);
        let shifted = Matrix::from_fn(self.rows, self.cols, |i, j| {
            let e = self[(i, j)].embed(&evars, &positions);
            if i == j {
                e - u.clone()
            } else {
                e
            }
        });
        shifted.det_expansion()
    }

    /// Faddeev-LeVerrier characteristic polynomial for Q-algebra
    /// coefficients; returns the same det(M - u I) normalization.
    pub fn char_poly_faddeev(&self, u_name: &str) -> Result<MPoly<C>, ArithError>
    where
        C: Field,
    {
        if !self.is_square() {
            return Err(ArithError::Shape("non-square matrix".into()));
        }
        let vars = self
            .entry_vars()
            .ok_or_else(|| ArithError::Shape("empty matrix has no variable list".into()))?;
        let n = self.rows;
        let evars = vars.extended(u_name);
        let positions: Vec<usize> = (0..vars.len()).collect();
        let u = MPoly::<C>::var_named(&evars, u_name);
        // det(xI - M) = x^n + c_1 x^{n-1} + ... + c_n
        let mut cs: Vec<MPoly<C>> = Vec::with_capacity(n);
        let mut mk = self.clone();
        let mut c = -mk.trace();
        cs.push(c.clone());
        for k in 2..=n {
            let adj = mk.add(&Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    c.clone()
                } else {
                    MPoly::zero_over(&vars)
                }
            }));
            mk = self.mul(&adj);
            c = (-mk.trace()).div_scalar_usize(k);
            cs.push(c.clone());
        }
        let mut acc = u.pow(n as u32);
        for (k, ck) in cs.iter().enumerate() {
            acc = acc + ck.embed(&evars, &positions) * u.pow((n - 1 - k) as u32);
        }
        // det(M - uI) = (-1)^n det(uI - M)
        if n % 2 == 1 {
            acc = -acc;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> MPoly<C> {
        assert!(self.is_square());
        let vars = self.entry_vars().expect("nonempty");
        let mut acc = MPoly::zero_over(&vars);
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    /// Exact rank for a matrix of constant polynomials over a field.
    /// Non-constant entries are a domain error.
    pub fn rank_scalar(&self) -> Result<usize, ArithError>
    where
        C: Field,
    {
        let mut scalars = Vec::with_capacity(self.data.len());
        for p in &self.data {
            match p.as_constant() {
                Some(c) => scalars.push(c),
                None => {
                    return Err(ArithError::Domain(
                        "rank needs scalar entries, found a polynomial".into(),
                    ))
                }
            }
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data: scalars }.rank())
    }

    /// Evaluate every entry at scalar bindings.
    pub fn eval_entries(&self, values: &[C]) -> Matrix<C> {
        self.map(|p| p.eval(values))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        let mut widths = vec![0usize; self.cols];
        for row in &strings {
            for (j, s) in row.iter().enumerate() {
                widths[j] = widths[j].max(s.len());
            }
        }
        for row in &strings {
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>width$}", s, width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rint, CycNum, Integer, Rational, SplitMix64};

    #[test]
    fn det_of_empty_is_one() {
        let m = Matrix::<Integer>::zero(0, 0);
        assert_eq!(m.det_expansion().unwrap(), Integer::from(1));
        assert_eq!(m.det_bareiss().unwrap(), Integer::from(1));
    }

    #[test]
    fn det_two_by_two_symbolic() {
        let vars = VarSet::new(&["a0", "a1", "a2", "a3"]);
        let a = |i: usize| MPoly::<Integer>::var(&vars, i);
        let m = Matrix::from_rows(vec![vec![a(1), a(3)], vec![a(0), a(2)]]);
        let d = m.det_expansion().unwrap();
        assert_eq!(d.to_string(), "a1*a2 - a0*a3");
    }

    #[test]
    fn det_identity() {
        for n in 1..6 {
            let m = Matrix::<Rational>::identity(n);
            assert_eq!(m.det_bareiss().unwrap(), rint(1));
        }
    }

    #[test]
    fn non_square_det_is_shape_error() {
        let m = Matrix::<Integer>::zero(2, 3);
        assert!(matches!(m.det_expansion(), Err(ArithError::Shape(_))));
    }

    #[test]
    fn det_multiplicative_random() {
        let mut rng = SplitMix64::new(0xdead);
        for n in 1..5usize {
            for _ in 0..6 {
                let a = Matrix::<Rational>::from_fn(n, n, |_, _| {
                    crate::rat(rng.below(11) as i64 - 5, 1 + rng.below(3) as i64)
                });
                let b = Matrix::<Rational>::from_fn(n, n, |_, _| {
                    crate::rat(rng.below(11) as i64 - 5, 1 + rng.below(3) as i64)
                });
                let lhs = a.mul(&b).det_bareiss().unwrap();
                let rhs = a.det_bareiss().unwrap() * b.det_bareiss().unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(a.det_bareiss().unwrap(), a.det_expansion().unwrap());
            }
        }
    }

    #[test]
    fn char_poly_zero_matrix() {
        let vars = VarSet::new(&["x"]);
        let m = Matrix::from_fn(2, 2, |_, _| MPoly::<Integer>::zero_over(&vars));
        let ch = m.char_poly("U").unwrap();
        assert_eq!(ch.to_string(), "U^2");
    }

    #[test]
    fn char_poly_at_zero_is_det() {
        let mut rng = SplitMix64::new(7);
        let vars = VarSet::new(&["x"]);
        for n in 1..5usize {
            let m = Matrix::from_fn(n, n, |_, _| {
                MPoly::constant(&vars, Integer::from(rng.below(9) as i64 - 4))
            });
            let ch = m.char_poly("U").unwrap();
            let u = ch.vars().index_of("U").unwrap();
            let at_zero = ch.coeff_of_power(u, 0);
            let det = m.det_expansion().unwrap().embed(ch.vars(), &[0]);
            assert_eq!(at_zero, det);
        }
    }

    #[test]
    fn faddeev_agrees_with_expansion() {
        let mut rng = SplitMix64::new(99);
        let vars = VarSet::new(&["x"]);
        for n in 1..5usize {
            let m = Matrix::from_fn(n, n, |_, _| {
                MPoly::constant(&vars, crate::rat(rng.below(9) as i64 - 4, 1))
            });
            assert_eq!(m.char_poly("U").unwrap(), m.char_poly_faddeev("U").unwrap());
        }
    }

    #[test]
    fn hessenberg_char_poly_matches_symbolic() {
        let mut rng = SplitMix64::new(0x5eed);
        let vars = VarSet::new(&["x"]);
        for n in 1..6usize {
            let m = Matrix::<Rational>::from_fn(n, n, |_, _| {
                crate::rat(rng.below(7) as i64 - 3, 1)
            });
            let coeffs = m.char_poly_coeffs(); // det(xI - M)
            let sym = m
                .map(|c| MPoly::constant(&vars, c.clone()))
                .char_poly("U")
                .unwrap();
            let u = sym.vars().index_of("U").unwrap();
            // det(M - uI) = (-1)^n det(uI - M)
            for (k, c) in coeffs.iter().enumerate() {
                let mut expect = c.clone();
                if n % 2 == 1 {
                    expect = -expect;
                }
                let got = sym.coeff_of_power(u, k as u16).as_constant().unwrap();
                assert_eq!(got, expect, "coefficient of U^{k} for n={n}");
            }
        }
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::<Rational>::identity(5).rank(), 5);
        assert_eq!(Matrix::<Rational>::zero(4, 4).rank(), 0);
        let m = Matrix::<Rational>::from_rows(vec![
            vec![rint(1), rint(2)],
            vec![rint(2), rint(4)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_rejects_polynomial_entries() {
        let vars = VarSet::new(&["x"]);
        let m = Matrix::from_fn(2, 2, |_, _| MPoly::<Rational>::var(&vars, 0));
        assert!(matches!(m.rank_scalar(), Err(ArithError::Domain(_))));
    }

    #[test]
    fn rank_over_cyclotomics() {
        let i = CycNum::zeta(2);
        let one = CycNum::from_int(1);
        // [[1, i], [i, -1]] has rank 1 since row2 = i * row1.
        let m = Matrix::from_rows(vec![
            vec![one.clone(), i.clone()],
            vec![i.clone(), -one],
        ]);
        assert_eq!(m.rank(), 1);
    }
}
