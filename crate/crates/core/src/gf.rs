//! Dense linear algebra over a small prime field GF(q).

use std::fmt;

use crate::error::{Error, Result};

/// An element of GF(q), carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub value: u32,
    pub modulus: u32,
}

impl FieldElement {
    pub fn new(value: u64, modulus: u32) -> Self {
        FieldElement {
            value: (value % modulus as u64) as u32,
            modulus,
        }
    }
}

/// A prime field GF(q). Construction checks primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if q < 2
            || (2..)
                .take_while(|i| i * i <= q)
                .any(|i| q.is_multiple_of(i))
        {
            return Err(Error::Construction(format!("field order {q} is not prime")));
        }
        // products of two residues must fit in u64
        if q > 1 << 31 {
            return Err(Error::Construction(format!("field order {q} too large")));
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn elem(&self, v: u64) -> FieldElement {
        FieldElement::new(v, self.q)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.q),
            "zero has no inverse in GF({})",
            self.q
        );
        self.pow(a, self.q as u64 - 2)
    }
}

/// Row-major dense matrix over a [`PrimeField`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over GF({})",
            self.rows, self.cols, self.field.q
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.q;
        }
        m
    }

    /// Builds from rows of raw residues (reduced mod q). All rows must have
    /// length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&v| v % field.q));
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn column(field: PrimeField, values: &[u32]) -> Self {
        Matrix {
            field,
            rows: values.len(),
            cols: 1,
            data: values.iter().map(|&v| v % field.q).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        FieldElement {
            value: self.data[r * self.cols + c],
            modulus: self.field.q,
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.q;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.data[r * self.cols + i];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.data[i * other.cols + c]));
                }
            }
        }
        Ok(out)
    }

    /// Stacks matrices vertically. An empty slice yields a `0 x cols` matrix.
    pub fn vstack(field: PrimeField, cols: usize, parts: &[&Matrix]) -> Result<Matrix> {
        let mut out = Matrix::zeros(field, 0, cols);
        for p in parts {
            out.check_field(p)?;
            if p.cols != cols {
                return Err(Error::DimensionMismatch(format!(
                    "vstack of {} columns onto {cols}",
                    p.cols
                )));
            }
            out.data.extend_from_slice(&p.data);
            out.rows += p.rows;
        }
        Ok(out)
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "GF({}) vs GF({})",
                self.field.q, other.field.q
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols_limit: usize) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols_limit.min(self.cols) {
            let Some(p) = (row..self.rows).find(|&r| self.data[r * self.cols + col] != 0) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.data[row * self.cols + col]);
            for c in 0..self.cols {
                let idx = row * self.cols + c;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.data[r * self.cols + col];
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let sub = f.mul(factor, self.data[row * self.cols + c]);
                    let idx = r * self.cols + c;
                    self.data[idx] = f.sub(self.data[idx], sub);
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place(self.cols).len()
    }

    /// Solves `self * x = b`. Returns `Ok(None)` when the system is
    /// inconsistent; when it is underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} system with {}x{} right-hand side",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let n = self.cols;
        let w = n + b.cols;
        let mut aug = Matrix::zeros(self.field, self.rows, w);
        for r in 0..self.rows {
            aug.data[r * w..r * w + n].copy_from_slice(self.row(r));
            aug.data[r * w + n..(r + 1) * w].copy_from_slice(b.row(r));
        }
        let pivots = aug.rref_in_place(n);
        let rank = pivots.len();
        if (rank..aug.rows).any(|r| aug.data[r * w + n..(r + 1) * w].iter().any(|&v| v != 0)) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            x.data[pc * b.cols..(pc + 1) * b.cols]
                .copy_from_slice(&aug.data[r * w + n..(r + 1) * w]);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self
            .solve(&Matrix::identity(self.field, self.rows))
            .ok()??;
        (self.rank() == self.rows).then_some(x)
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per
    /// column of the result.
    pub fn null_space(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field;
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.data[fc * free.len() + j] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.data[r * self.cols + fc];
                basis.data[pc * free.len() + j] = f.sub(0, v);
            }
        }
        basis
    }
}
