//! Dense exact matrices and the elimination kernels everything else uses.
//!
//! Pivoting is fixed (leftmost nonzero column, first nonzero row) so that all
//! outputs are deterministic.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};
use std::fmt;
use std::sync::Arc;

/// Dense row-major matrix over an exact field. Entries are shared on clone
/// and copied on first write, so passing matrices around by value is cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    entries: Arc<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: Arc::new(vec![field.zero(); rows * cols]),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert_eq!(v.field(), field);
                entries.push(v);
            }
        }
        Matrix { field, rows, cols, entries: Arc::new(entries) }
    }

    /// Builds a matrix from integer rows.
    pub fn from_int_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(field, r, c, |i, j| field.from_int(rows[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        Arc::make_mut(&mut self.entries)[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    /// Raw residues when this is a small prime-field matrix; the elimination
    /// and multiplication kernels run on these directly to avoid per-entry
    /// enum dispatch and clones.
    fn fp_values(&self) -> Option<(u64, Vec<u64>)> {
        let FieldSpec::PrimeField(p) = self.field else {
            return None;
        };
        if p >= 1 << 32 {
            return None;
        }
        let vals = self
            .entries
            .iter()
            .map(|e| match e {
                Scalar::Fp { value, .. } => *value,
                Scalar::Rat(_) => unreachable!("rational entry in prime-field matrix"),
            })
            .collect();
        Some((p, vals))
    }

    fn store_fp_values(&mut self, p: u64, vals: &[u64]) {
        let entries = Arc::make_mut(&mut self.entries);
        for (slot, &value) in entries.iter_mut().zip(vals) {
            *slot = Scalar::Fp { p, value };
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        if let (Some((p, a)), Some((_, b))) = (self.fp_values(), other.fp_values()) {
            let mut c = vec![0u64; self.rows * other.cols];
            if p == 2 {
                // rows of b packed 64 entries to a word; row i of the product
                // is the XOR of the b-rows selected by row i of a
                let words = other.cols.div_ceil(64);
                let mut packed = vec![0u64; other.rows * words];
                for k in 0..other.rows {
                    for j in 0..other.cols {
                        if b[k * other.cols + j] != 0 {
                            packed[k * words + j / 64] |= 1 << (j % 64);
                        }
                    }
                }
                let mut acc = vec![0u64; words];
                for i in 0..self.rows {
                    acc.fill(0);
                    for k in 0..self.cols {
                        if a[i * self.cols + k] != 0 {
                            for w in 0..words {
                                acc[w] ^= packed[k * words + w];
                            }
                        }
                    }
                    for j in 0..other.cols {
                        c[i * other.cols + j] = (acc[j / 64] >> (j % 64)) & 1;
                    }
                }
            } else {
                // p < 2^32, so a full row of products accumulates in u128
                // without overflow and one reduction per output entry
                // suffices; zero entries of the left factor are skipped
                let mut acc = vec![0u128; other.cols];
                for i in 0..self.rows {
                    acc.fill(0);
                    for k in 0..self.cols {
                        let av = a[i * self.cols + k];
                        if av == 0 {
                            continue;
                        }
                        let av = av as u128;
                        for j in 0..other.cols {
                            acc[j] += av * b[k * other.cols + j] as u128;
                        }
                    }
                    for j in 0..other.cols {
                        c[i * other.cols + j] = (acc[j] % p as u128) as u64;
                    }
                }
            }
            out.store_fp_values(p, &c);
            return out;
        }
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix power (square matrices).
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        Matrix::hstack_all(&[self, other])
    }

    /// Horizontal concatenation of any number of parts (at least one, all
    /// with the same row count).
    pub fn hstack_all(parts: &[&Matrix]) -> Matrix {
        let first = parts.first().expect("hstack_all needs at least one part");
        let (field, rows) = (first.field, first.rows);
        assert!(parts.iter().all(|m| m.rows == rows && m.field == field));
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for m in parts {
                entries.extend_from_slice(&m.entries[i * m.cols..(i + 1) * m.cols]);
            }
        }
        Matrix { field, rows, cols, entries: Arc::new(entries) }
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        assert!(cols.iter().all(|c| c.len() == rows));
        Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// In-place reduced row echelon form. Returns the pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        if let Some((p, mut vals)) = self.fp_values() {
            let pivots = rref_fp(&mut vals, self.rows, self.cols, p);
            self.store_fp_values(p, &vals);
            return pivots;
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            self.swap_rows(row, pr);
            let inv = self.get(row, col).inv();
            for j in col..self.cols {
                let v = self.get(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j).sub(&factor.mul(self.get(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let entries = Arc::make_mut(&mut self.entries);
        for j in 0..self.cols {
            entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    /// Rank by exact elimination.
    pub fn rank(&self) -> usize {
        if let Some((p, mut vals)) = self.fp_values() {
            return rref_fp(&mut vals, self.rows, self.cols, p).len();
        }
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right null space, in the reduced echelon convention: one
    /// vector per free column, unit entry at that column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![self.field.zero(); self.cols];
            vec[free] = self.field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                vec[pc] = r.get(i, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    /// Column-space basis: the columns of `self` at the pivot positions of its
    /// echelon form, returned as a matrix.
    pub fn column_space_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solves `self * x = rhs` column-wise. Returns None if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.field, rhs.field);
        // prime-field path: assemble the augmented system directly in raw
        // residues, skipping the Scalar-level concatenation and clones
        if let (Some((p, a)), Some((_, b))) = (self.fp_values(), rhs.fp_values()) {
            let cols = self.cols + rhs.cols;
            let mut aug = Vec::with_capacity(self.rows * cols);
            for i in 0..self.rows {
                aug.extend_from_slice(&a[i * self.cols..(i + 1) * self.cols]);
                aug.extend_from_slice(&b[i * rhs.cols..(i + 1) * rhs.cols]);
            }
            let pivots = rref_fp(&mut aug, self.rows, cols, p);
            if pivots.iter().any(|&c| c >= self.cols) {
                return None;
            }
            let mut x = vec![0u64; self.cols * rhs.cols];
            for (i, &pc) in pivots.iter().enumerate() {
                for j in 0..rhs.cols {
                    x[pc * rhs.cols + j] = aug[i * cols + self.cols + j];
                }
            }
            let mut out = Matrix::zero(self.field, self.cols, rhs.cols);
            out.store_fp_values(p, &x);
            return Some(out);
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // inconsistent iff a pivot falls in the rhs block
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.field, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Exact inverse; None if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        // `solve` against the identity: for an invertible matrix the
        // particular solution is the inverse, and a singular square matrix
        // always forces a pivot into the right-hand block.
        self.solve(&Matrix::identity(self.field, self.rows))
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot else {
                return self.field.zero();
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = det.neg();
            }
            let p = m.get(col, col).clone();
            det = det.mul(&p);
            let inv = p.inv();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for j in col..n {
                    let v = m.get(r, j).sub(&factor.mul(m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Checks whether every column of `other` lies in the column space of `self`.
    pub fn contains_columns(&self, other: &Matrix) -> bool {
        if other.cols == 0 {
            return true;
        }
        self.solve(other).is_some()
    }

    /// Serializes as row-major nested arrays of scalar strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn from_string_rows(field: FieldSpec, rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Matrix> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "expected {rows}x{cols} entries, got {} rows",
                data.len()
            )));
        }
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, field.parse(&data[i][j])?);
            }
        }
        Ok(m)
    }
}

/// Reduced row echelon form on raw prime-field residues. Mirrors the generic
/// loop exactly (same pivot choice: leftmost nonzero column, first nonzero
/// row) so the two paths agree entry for entry.
fn rref_fp(vals: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    if p == 2 {
        return rref_f2(vals, rows, cols);
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| vals[r * cols + col] != 0) else {
            continue;
        };
        if pr != row {
            for j in 0..cols {
                vals.swap(row * cols + j, pr * cols + j);
            }
        }
        // p < 2^32, so products of two residues fit in u64 and all the
        // modular work stays in native words
        let inv = crate::scalar::mod_inverse(vals[row * cols + col], p);
        for j in col..cols {
            vals[row * cols + j] = vals[row * cols + j] * inv % p;
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = vals[r * cols + col];
            if factor == 0 {
                continue;
            }
            let nf = p - factor;
            for j in col..cols {
                let sub = nf * vals[row * cols + j] % p;
                let v = vals[r * cols + j] + sub;
                vals[r * cols + j] = if v >= p { v - p } else { v };
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// GF(2) elimination on rows packed 64 entries to a word; row operations are
/// whole-word XORs. Same pivot rule as the generic loop.
fn rref_f2(vals: &mut [u64], rows: usize, cols: usize) -> Vec<usize> {
    let words = cols.div_ceil(64);
    let mut packed = vec![0u64; rows * words];
    for i in 0..rows {
        for j in 0..cols {
            if vals[i * cols + j] != 0 {
                packed[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pr) = (row..rows).find(|&r| packed[r * words + w] & bit != 0) else {
            continue;
        };
        if pr != row {
            for j in 0..words {
                packed.swap(row * words + j, pr * words + j);
            }
        }
        for r in 0..rows {
            if r != row && packed[r * words + w] & bit != 0 {
                let (dst, src) = if r < row {
                    let (a, b) = packed.split_at_mut(row * words);
                    (&mut a[r * words..r * words + words], &b[..words])
                } else {
                    let (a, b) = packed.split_at_mut(r * words);
                    (&mut b[..words], &a[row * words..row * words + words])
                };
                for j in w..words {
                    dst[j] ^= src[j];
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    for i in 0..rows {
        for j in 0..cols {
            vals[i * cols + j] = (packed[i * words + j / 64] >> (j % 64)) & 1;
        }
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        let q = FieldSpec::Rationals;
        assert_eq!(Matrix::identity(q, 3).rank(), 3);
        assert_eq!(Matrix::zero(q, 2, 3).rank(), 0);
        assert_eq!(Matrix::from_int_rows(q, &[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let q = FieldSpec::Rationals;
        assert!(Matrix::identity(q, 4).kernel_basis().is_empty());

        let gf2 = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::from_int_rows(gf2, &[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![gf2.one(), gf2.one()]);

        let z = Matrix::zero(q, 1, 2);
        assert_eq!(z.kernel_basis().len(), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_int_rows(q, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q, 2));
        let b = Matrix::from_int_rows(q, &[vec![3], vec![2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        // inconsistent system
        let s = Matrix::from_int_rows(q, &[vec![1, 1], vec![1, 1]]);
        let rhs = Matrix::from_int_rows(q, &[vec![0], vec![1]]);
        assert!(s.solve(&rhs).is_none());
    }

    #[test]
    fn determinant() {
        let q = FieldSpec::Rationals;
        let a = Matrix::from_int_rows(q, &[vec![2, 1], vec![1, 1]]);
        assert_eq!(a.det(), q.from_int(1));
        let s = Matrix::from_int_rows(q, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.det(), q.from_int(0));
    }

    fn arb_gf5_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0i64..5, rows * cols).prop_map(move |v| {
            let f = FieldSpec::prime_field(5).unwrap();
            Matrix::from_fn(f, rows, cols, |i, j| f.from_int(v[i * cols + j]))
        })
    }

    proptest! {
        // rank + nullity = cols
        #[test]
        fn rank_nullity(m in arb_gf5_matrix(4, 6)) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols);
        }

        // kernel vectors are actually in the kernel
        #[test]
        fn kernel_annihilates(m in arb_gf5_matrix(3, 5)) {
            let f = m.field;
            for v in m.kernel_basis() {
                let col = Matrix::from_columns(f, 5, &[v]);
                prop_assert!(m.mul(&col).is_zero());
            }
        }
    }
}
