use super::engine::{Element, Engine};
use super::ideal::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Element of a free module `R^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModuleVector {
    pub entries: Vec<Polynomial>,
}

impl FreeModuleVector {
    pub fn new(entries: Vec<Polynomial>) -> Self {
        FreeModuleVector { entries }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        FreeModuleVector {
            entries: vec![Polynomial::zero(nvars); rank],
        }
    }

    pub fn unit(rank: usize, nvars: usize, i: usize) -> Self {
        let mut v = Self::zero(rank, nvars);
        v.entries[i] = Polynomial::one(nvars);
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        FreeModuleVector {
            entries: self.entries.iter().map(|e| e * f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        FreeModuleVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        FreeModuleVector {
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        FreeModuleVector { entries }
    }
}

/// Dense matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Polynomial>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        Matrix {
            rows,
            cols,
            nvars,
            data: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zero(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars));
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    c
                )));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::VariableCountMismatch {
                        expected: nvars,
                        found: p.nvars(),
                    });
                }
                data.push(p);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            nvars,
            data,
        })
    }

    /// Matrix with the given vectors as columns (`rows` fixes the shape when empty).
    pub fn from_columns(rows: usize, nvars: usize, cols: &[FreeModuleVector]) -> Self {
        let mut m = Self::zero(rows, cols.len(), nvars);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.rank(), rows, "column length");
            for i in 0..rows {
                m.set(i, j, c.entries[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> FreeModuleVector {
        FreeModuleVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<FreeModuleVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> FreeModuleVector {
        FreeModuleVector::new((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &FreeModuleVector) -> Result<FreeModuleVector> {
        if v.rank() != self.cols {
            return Err(Error::RankMismatch {
                expected: self.cols,
                found: v.rank(),
            });
        }
        Ok(FreeModuleVector::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = Polynomial::zero(self.nvars);
                    for k in 0..self.cols {
                        acc = &acc + &(self.get(i, k) * &v.entries[k]);
                    }
                    acc
                })
                .collect(),
        ))
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Block diagonal sum.
    pub fn block_diagonal(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows + other.rows, self.cols + other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hconcat row counts".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Ok(Matrix::from_columns(self.rows, self.nvars, &cols))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }
}

/// Reduced Gröbner basis of a submodule `N + I·R^r` of a free module `R^r`,
/// where `I` is the ideal of a fixed quotient ring (possibly zero).
///
/// The module order is position-over-term (lower positions larger) with the
/// given monomial order on terms.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    rank: usize,
    nvars: usize,
    order: MonomialOrder,
    quotient: GroebnerBasis,
    cached: Vec<Element>,
}

impl SubmoduleBasis {
    /// Basis of the submodule spanned by `generators` plus `quotient`'s ideal in every coordinate.
    pub fn new(
        rank: usize,
        generators: &[FreeModuleVector],
        quotient: &GroebnerBasis,
    ) -> Result<Self> {
        let nvars = quotient.nvars();
        let order = quotient.order().clone();
        let engine = Engine::new(&order);
        let mut gens: Vec<Element> = Vec::new();
        for g in generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if let Some(p) = g.entries.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            gens.push(engine.encode_entries(&g.entries));
        }
        gens.extend(quotient_vectors(&engine, rank, quotient));
        gens.retain(|g| !g.is_empty());
        let cached = engine.groebner(gens, false);
        Ok(SubmoduleBasis {
            rank,
            nvars,
            order,
            quotient: quotient.clone(),
            cached,
        })
    }

    fn from_cached(
        rank: usize,
        quotient: &GroebnerBasis,
        cached: Vec<Element>,
    ) -> Self {
        SubmoduleBasis {
            rank,
            nvars: quotient.nvars(),
            order: quotient.order().clone(),
            quotient: quotient.clone(),
            cached,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// All basis elements, including those lying in `I·R^r`.
    pub fn elements(&self) -> Vec<FreeModuleVector> {
        let engine = Engine::new(&self.order);
        self.cached
            .iter()
            .map(|e| FreeModuleVector::new(engine.to_entries(e, self.rank, self.nvars)))
            .collect()
    }

    /// Basis elements that are nonzero over the quotient ring, entries in normal form.
    /// Together with `I·R^r` these generate the submodule.
    pub fn generators(&self) -> Vec<FreeModuleVector> {
        self.elements()
            .into_iter()
            .map(|v| v.map_entries(|p| self.quotient.normal_form(p)))
            .filter(|v| !v.is_zero())
            .collect()
    }

    pub fn normal_form(&self, v: &FreeModuleVector) -> FreeModuleVector {
        assert_eq!(v.rank(), self.rank, "module normal form: rank");
        let engine = Engine::new(&self.order);
        let r = engine.reduce(engine.encode_entries(&v.entries), &self.cached);
        FreeModuleVector::new(engine.to_entries(&r, self.rank, self.nvars))
    }

    pub fn contains(&self, v: &FreeModuleVector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_all(&self, vs: &[FreeModuleVector]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    /// True if the submodule is `I·R^r`, i.e. zero over the quotient ring.
    pub fn is_zero_over_quotient(&self) -> bool {
        self.generators().is_empty()
    }

    /// True if the submodule is all of `R^r`.
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|i| self.contains(&FreeModuleVector::unit(self.rank, self.nvars, i)))
    }

    pub fn satisfies_buchberger_criterion(&self) -> bool {
        Engine::new(&self.order).is_groebner(&self.cached)
    }

    /// Mutual containment.
    pub fn same_submodule(&self, other: &SubmoduleBasis) -> bool {
        self.rank == other.rank
            && self.contains_all(&other.elements())
            && other.contains_all(&self.elements())
    }
}

fn quotient_vectors(engine: &Engine<'_>, rank: usize, quotient: &GroebnerBasis) -> Vec<Element> {
    let nvars = quotient.nvars();
    let mut out = Vec::new();
    for k in 0..rank {
        for g in quotient.elements() {
            let mut v = vec![Polynomial::zero(nvars); rank];
            v[k] = g.clone();
            out.push(engine.encode_entries(&v));
        }
    }
    out
}

/// Generators of `{ v in A^p : M·v = 0 }` for a `q × p` matrix over `A = R/I`,
/// where `quotient` is the Gröbner basis of `I` (empty for a polynomial ring).
pub fn syzygies(matrix: &Matrix, quotient: &GroebnerBasis) -> SubmoduleBasis {
    let (q, p) = (matrix.rows(), matrix.cols());
    let nvars = quotient.nvars();
    let order = quotient.order();
    let engine = Engine::new(order);
    let mut gens: Vec<Element> = Vec::new();
    for j in 0..p {
        let mut v = matrix.column(j).entries;
        v.extend(FreeModuleVector::unit(p, nvars, j).entries);
        gens.push(engine.encode_entries(&v));
    }
    for e in quotient_vectors(&engine, q, quotient) {
        gens.push(e);
    }
    gens.retain(|g| !g.is_empty());
    let basis = engine.groebner(gens, false);
    let projected: Vec<Element> = basis
        .into_iter()
        .filter(|e| e[0].pos >= q)
        .map(|e| {
            e.into_iter()
                .map(|mut t| {
                    t.pos -= q;
                    t
                })
                .collect()
        })
        .collect();
    SubmoduleBasis::from_cached(p, quotient, projected)
}

/// Expresses vectors as `A`-combinations of fixed generators.
#[derive(Clone, Debug)]
pub struct LiftingBasis {
    rank: usize,
    ngens: usize,
    nvars: usize,
    order: MonomialOrder,
    quotient: GroebnerBasis,
    cached: Vec<Element>,
}

impl LiftingBasis {
    pub fn new(rank: usize, generators: &[FreeModuleVector], quotient: &GroebnerBasis) -> Self {
        let nvars = quotient.nvars();
        let order = quotient.order().clone();
        let engine = Engine::new(&order);
        let s = generators.len();
        let mut gens: Vec<Element> = Vec::new();
        for (k, g) in generators.iter().enumerate() {
            assert_eq!(g.rank(), rank, "lifting generator rank");
            let v = g.concat(&FreeModuleVector::unit(s, nvars, k));
            gens.push(engine.encode_entries(&v.entries));
        }
        gens.extend(quotient_vectors(&engine, rank, quotient));
        gens.retain(|g| !g.is_empty());
        let cached = engine.groebner(gens, false);
        LiftingBasis {
            rank,
            ngens: s,
            nvars,
            order,
            quotient: quotient.clone(),
            cached,
        }
    }

    /// Coefficients `c` with `v = Σ c_k g_k` over `A`, or `None` if `v` is not in the span.
    pub fn lift(&self, v: &FreeModuleVector) -> Option<Vec<Polynomial>> {
        assert_eq!(v.rank(), self.rank);
        let engine = Engine::new(&self.order);
        let padded = v.concat(&FreeModuleVector::zero(self.ngens, self.nvars));
        let r = engine.reduce(engine.encode_entries(&padded.entries), &self.cached);
        if r.first().map(|t| t.pos < self.rank).unwrap_or(false) {
            return None;
        }
        let entries = engine.to_entries(&r, self.rank + self.ngens, self.nvars);
        Some(
            entries[self.rank..]
                .iter()
                .map(|c| self.quotient.normal_form(&-c))
                .collect(),
        )
    }
}
