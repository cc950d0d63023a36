//! Dense matrices over an arbitrary [`Ring`], with Gaussian elimination
//! over fields and fraction-free (Bareiss) elimination over polynomial
//! rings.
//!
//! Graded pieces of the modules in this crate are small (at most a few
//! hundred columns) and dense, so no sparse machinery is used.

use super::{Field, Ring};
use alloc::vec;
use alloc::vec::Vec;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn filled(rows: usize, cols: usize, e: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![e; rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &E {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, e: E) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = e;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<E> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn map<T: Clone>(&self, mut f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| f(e)).collect(),
        }
    }
}

pub fn zero<R: Ring>(ring: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::filled(rows, cols, ring.zero())
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { ring.one() } else { ring.zero() })
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = zero(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.at(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let t = ring.mul(aik, b.at(k, j));
                let cur = out.at(i, j);
                out.set(i, j, ring.add(cur, &t));
            }
        }
    }
    out
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| super::dot(ring, a.row(i), v))
        .collect()
}

pub fn mat_add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_fn(a.rows, a.cols, |r, c| ring.add(a.at(r, c), b.at(r, c)))
}

pub fn mat_sub<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_fn(a.rows, a.cols, |r, c| ring.sub(a.at(r, c), b.at(r, c)))
}

pub fn mat_scale<R: Ring>(ring: &R, a: &Matrix<R::Elem>, s: &R::Elem) -> Matrix<R::Elem> {
    Matrix::from_fn(a.rows, a.cols, |r, c| ring.mul(a.at(r, c), s))
}

/// Reduced row echelon form in place. Returns the pivot columns.
pub fn rref_in_place<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !field.is_zero(m.at(r, col))) else {
            continue;
        };
        if pr != row {
            for c in 0..m.cols {
                let tmp = m.at(pr, c).clone();
                let other = m.at(row, c).clone();
                m.set(pr, c, other);
                m.set(row, c, tmp);
            }
        }
        let inv = field.inv(m.at(row, col));
        for c in col..m.cols {
            let v = field.mul(m.at(row, c), &inv);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || field.is_zero(m.at(r, col)) {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in col..m.cols {
                let t = field.mul(&factor, m.at(row, c));
                let v = field.sub(m.at(r, c), &t);
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref_in_place(field, &mut work).len()
}

/// Basis of the (right) null space: columns of the result are independent
/// vectors `v` with `m v = 0`.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let mut work = m.clone();
    let pivots = rref_in_place(field, &mut work);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = zero(field, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, field.one());
        for (prow, &pc) in pivots.iter().enumerate() {
            out.set(pc, k, field.neg(work.at(prow, fc)));
        }
    }
    out
}

/// Solve `a x = b`; returns one solution if consistent.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Matrix::from_fn(a.rows, a.cols + 1, |r, c| {
        if c < a.cols {
            a.at(r, c).clone()
        } else {
            b[r].clone()
        }
    });
    let pivots = rref_in_place(field, &mut aug);
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![field.zero(); a.cols];
    for (prow, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(prow, a.cols).clone();
    }
    Some(x)
}

/// A growing subspace of row vectors over a field, kept in reduced
/// echelon form. The workhorse behind spans and membership tests.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduce `v` against the current echelon rows.
    fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(self.pivots.iter()) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let factor = v[pc].clone();
            for (c, rv) in row.iter().enumerate() {
                if !f.is_zero(rv) {
                    let t = f.mul(&factor, rv);
                    v[c] = f.sub(&v[c], &t);
                }
            }
        }
    }

    /// Insert a vector; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field.clone();
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|e| !f.is_zero(e)) else {
            return false;
        };
        let inv = f.inv(&v[pc]);
        for e in v.iter_mut() {
            *e = f.mul(e, &inv);
        }
        // Back-reduce existing rows so the basis stays in RREF.
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[pc]) {
                let factor = row[pc].clone();
                for (c, e) in v.iter().enumerate() {
                    if !f.is_zero(e) {
                        let t = f.mul(&factor, e);
                        row[c] = f.sub(&row[c], &t);
                    }
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > pc).unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        self.pivots.insert(pos, pc);
        true
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|e| self.field.is_zero(e))
    }

    /// Basis rows, in echelon order.
    pub fn basis_rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }
}

/// Fraction-free (Bareiss) row echelon over an integral domain. Works on
/// rectangular matrices with pivot search; returns the pivot columns, the
/// echelon matrix, and the row permutation sign.
pub fn bareiss_echelon<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> (Matrix<R::Elem>, Vec<usize>, bool) {
    let mut a = m.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = ring.one();
    let mut sign = true;
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(pr) = (row..a.rows).find(|&r| !ring.is_zero(a.at(r, col))) else {
            continue;
        };
        if pr != row {
            sign = !sign;
            for c in 0..a.cols {
                let tmp = a.at(pr, c).clone();
                let other = a.at(row, c).clone();
                a.set(pr, c, other);
                a.set(row, c, tmp);
            }
        }
        let piv = a.at(row, col).clone();
        for r in row + 1..a.rows {
            let head = a.at(r, col).clone();
            for c in col..a.cols {
                // Sylvester identity keeps this division exact.
                let num = ring.sub(
                    &ring.mul(&piv, a.at(r, c)),
                    &ring.mul(&head, a.at(row, c)),
                );
                let q = ring
                    .exact_div(&num, &prev)
                    .expect("Bareiss division must be exact over a domain");
                a.set(r, c, q);
            }
        }
        pivots.push(col);
        prev = piv;
        row += 1;
    }
    (a, pivots, sign)
}

pub fn bareiss_rank<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    bareiss_echelon(ring, m).1.len()
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn bareiss_det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    assert_eq!(m.rows, m.cols);
    if m.rows == 0 {
        return ring.one();
    }
    let (ech, pivots, sign) = bareiss_echelon(ring, m);
    if pivots.len() < m.rows {
        return ring.zero();
    }
    let d = ech.at(m.rows - 1, m.cols - 1).clone();
    if sign {
        d
    } else {
        ring.neg(&d)
    }
}

/// Null-space basis over the fraction field of a domain, returned with
/// polynomial (denominator-cleared) entries. Columns of the result are the
/// kernel vectors.
pub fn bareiss_kernel<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let (ech, pivots, _) = bareiss_echelon(ring, m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let r = pivots.len();
    let mut out = zero(ring, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        // Back-substitute with explicit fractions (num, den), then clear.
        let mut num = vec![ring.zero(); r];
        let mut den = vec![ring.one(); r];
        for j in (0..r).rev() {
            // pivot row j: ech[j][pivots[j]] * x_j + sum_{l>j} ech[j][pivots[l]] * x_l + ech[j][fc] = 0
            let mut acc_n = ech.at(j, fc).clone();
            let mut acc_d = ring.one();
            for l in j + 1..r {
                let coef = ech.at(j, pivots[l]);
                if ring.is_zero(coef) || ring.is_zero(&num[l]) {
                    continue;
                }
                // acc += coef * num[l] / den[l]
                let t_n = ring.mul(coef, &num[l]);
                let new_n = ring.add(&ring.mul(&acc_n, &den[l]), &ring.mul(&t_n, &acc_d));
                acc_d = ring.mul(&acc_d, &den[l]);
                acc_n = new_n;
            }
            num[j] = ring.neg(&acc_n);
            den[j] = ring.mul(&acc_d, ech.at(j, pivots[j]));
        }
        // Clear denominators: multiply everything by prod(den).
        let mut common = ring.one();
        for d in &den {
            common = ring.mul(&common, d);
        }
        out.set(fc, k, common.clone());
        for j in 0..r {
            let scale = ring
                .exact_div(&common, &den[j])
                .expect("denominator divides the common product");
            out.set(pivots[j], k, ring.mul(&num[j], &scale));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FpField, ParamRing};

    #[test]
    fn rref_rank_kernel_over_f5() {
        let f = FpField::new(5);
        // Rank-2 matrix with a 1-dim kernel.
        let m = Matrix::from_rows(vec![vec![1u64, 2, 3], vec![2, 4, 1], vec![3, 6, 4]]);
        assert_eq!(rank(&f, &m), 2);
        let k = kernel_basis(&f, &m);
        assert_eq!(k.cols, 1);
        let v = k.col_vec(0);
        let img = mat_vec(&f, &m, &v);
        assert!(img.iter().all(|e| *e == 0));
    }

    #[test]
    fn subspace_membership() {
        let f = FpField::new(3);
        let mut s = Subspace::new(f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1])); // 1*(1,2,0) - 2*(0,1,1) = (1,0,-2) = (1,0,1)
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[2, 1, 2]));
        assert!(!s.contains(&[0, 0, 1]));
    }

    #[test]
    fn bareiss_det_matches_cofactor_over_params() {
        let r = ParamRing::new(3);
        let c1 = r.var(1);
        let c2 = r.var(2);
        let m = Matrix::from_rows(vec![
            vec![c1.clone(), c2.clone()],
            vec![c2.clone(), c1.clone()],
        ]);
        let det = bareiss_det(&r, &m);
        let expect = r.sub(&r.mul(&c1, &c1), &r.mul(&c2, &c2));
        assert_eq!(det, expect);
        assert_eq!(bareiss_rank(&r, &m), 2);
    }

    #[test]
    fn bareiss_kernel_annihilates() {
        let r = ParamRing::new(3);
        let c1 = r.var(1);
        let c2 = r.var(2);
        // 1x2 matrix [c1, c1] -> kernel (1, -1) up to scale.
        let m = Matrix::from_rows(vec![vec![c1.clone(), c1.clone()]]);
        let k = bareiss_kernel(&r, &m);
        assert_eq!(k.cols, 1);
        let v = k.col_vec(0);
        let img = mat_vec(&r, &m, &v);
        assert!(img.iter().all(|e| r.is_zero(e)));
        assert_eq!(r.add(&v[0], &v[1]), r.zero());

        // A genuinely parametric kernel: [c1, c2].
        let m2 = Matrix::from_rows(vec![vec![c1.clone(), c2.clone()]]);
        let k2 = bareiss_kernel(&r, &m2);
        assert_eq!(k2.cols, 1);
        let v2 = k2.col_vec(0);
        let img2 = mat_vec(&r, &m2, &v2);
        assert!(img2.iter().all(|e| r.is_zero(e)));
        assert!(!v2.iter().all(|e| e.is_constant()));
    }

    #[test]
    fn solve_consistent_system() {
        let f = FpField::new(7);
        let a = Matrix::from_rows(vec![vec![1u64, 1], vec![2, 3]]);
        let x = solve(&f, &a, &[5, 4]).unwrap();
        let b = mat_vec(&f, &a, &x);
        assert_eq!(b, vec![5, 4]);
    }
}
