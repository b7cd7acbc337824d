use std::collections::HashMap;

use super::gamma::{dp_basis, DPMonomial};
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; row `(a, b)` sits at `a * other.rows + b`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }
}

/// `Δ: Γⁿ(A^q) -> Γⁱ(A^q) ⊗ Γʲ(A^q)`, `γ^m ↦ Σ_{a+b=m, |a|=i} γ^a ⊗ γ^b`.
///
/// Columns follow `dp_basis(q, n)`; row `(a, b)` sits at `index(a) * |Γʲ| + index(b)`.
pub fn comultiplication(q: usize, n: u32, i: u32, j: u32) -> Result<IntMatrix> {
    if i + j != n {
        return Err(Error::DegreeMismatch(format!("{} + {} != {}", i, j, n)));
    }
    let bi = dp_basis(q, i);
    let bj = dp_basis(q, j);
    let bn = dp_basis(q, n);
    let index_j: HashMap<&DPMonomial, usize> = bj.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut out = IntMatrix::zero(bi.len() * bj.len(), bn.len());
    for (col, m) in bn.iter().enumerate() {
        for (r, a) in bi.iter().enumerate() {
            if let Some(b) = a.quotient_of(m) {
                out.set(r * bj.len() + index_j[&b], col, 1);
            }
        }
    }
    Ok(out)
}

/// `Γⁱ ⊗ Γʲ -> Γʲ ⊗ Γⁱ`.
pub fn swap(q: usize, i: u32, j: u32) -> IntMatrix {
    let (ni, nj) = (dp_basis(q, i).len(), dp_basis(q, j).len());
    let mut out = IntMatrix::zero(nj * ni, ni * nj);
    for a in 0..ni {
        for b in 0..nj {
            out.set(b * ni + a, a * nj + b, 1);
        }
    }
    out
}

/// Identity on `Γⁿ(A^q)`.
pub fn gamma_identity(q: usize, n: u32) -> IntMatrix {
    IntMatrix::identity(dp_basis(q, n).len())
}

/// The counit `ε: Γ⁰ -> A`.
pub fn counit() -> IntMatrix {
    IntMatrix::identity(1)
}
