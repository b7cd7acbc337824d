use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleVector, Matrix};
use crate::poly::{binomial, monomials_of_degree, Monomial, Polynomial, Rational};
use crate::presented::{ModuleMap, PresentedModule, PresentedRing};

/// Exponents `m` of `γ^{m_1}(e_1) × ... × γ^{m_q}(e_q)`.
pub type DPMonomial = Monomial;

/// Basis of `Γⁿ(A^q)`, lex descending; `C(q+n-1, n)` elements.
pub fn dp_basis(q: usize, n: u32) -> Vec<DPMonomial> {
    monomials_of_degree(&vec![1; q], n)
}

/// Homogeneous element of `Γⁿ(A^q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement {
    ring: PresentedRing,
    rank: usize,
    degree: u32,
    coords: BTreeMap<DPMonomial, Polynomial>,
}

impl GammaElement {
    pub fn zero(ring: &PresentedRing, rank: usize, degree: u32) -> Self {
        GammaElement {
            ring: ring.clone(),
            rank,
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// `c · γ^m`.
    pub fn term(ring: &PresentedRing, m: DPMonomial, c: Polynomial) -> Self {
        let mut g = Self::zero(ring, m.nvars(), m.degree());
        g.add_term(m, c);
        g
    }

    pub fn basis_element(ring: &PresentedRing, m: DPMonomial) -> Self {
        Self::term(ring, m, ring.one())
    }

    /// The element with the given coordinates on `dp_basis(rank, degree)`.
    pub fn from_vector(ring: &PresentedRing, rank: usize, degree: u32, v: &FreeModuleVector) -> Self {
        let basis = dp_basis(rank, degree);
        assert_eq!(basis.len(), v.rank(), "coordinate count");
        let mut g = Self::zero(ring, rank, degree);
        for (m, c) in basis.into_iter().zip(&v.entries) {
            g.add_term(m, c.clone());
        }
        g
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coefficient(&self, m: &DPMonomial) -> Polynomial {
        self.coords.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DPMonomial, &Polynomial)> {
        self.coords.iter()
    }

    fn add_term(&mut self, m: DPMonomial, c: Polynomial) {
        assert_eq!(m.degree(), self.degree, "divided power degree");
        let entry = self.coords.entry(m.clone()).or_insert_with(|| self.ring.zero());
        *entry = self.ring.reduce(&(&*entry + &c));
        if entry.is_zero() {
            self.coords.remove(&m);
        }
    }

    pub fn to_vector(&self) -> FreeModuleVector {
        FreeModuleVector::new(
            dp_basis(self.rank, self.degree)
                .iter()
                .map(|m| self.coefficient(m))
                .collect(),
        )
    }

    pub fn add(&self, other: &GammaElement) -> Result<GammaElement> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "adding degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (m, c) in &other.coords {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, f: &Polynomial) -> GammaElement {
        let mut out = Self::zero(&self.ring, self.rank, self.degree);
        for (m, c) in &self.coords {
            out.add_term(m.clone(), c * f);
        }
        out
    }

    fn check_compatible(&self, other: &GammaElement) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        Ok(())
    }
}

/// `γ^a × γ^b = Π C(a_i + b_i, a_i) γ^{a+b}`, extended bilinearly.
pub fn dp_multiply(a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
    a.check_compatible(b)?;
    let mut out = GammaElement::zero(&a.ring, a.rank, a.degree + b.degree);
    for (ma, ca) in &a.coords {
        for (mb, cb) in &b.coords {
            let mut coeff = num_bigint::BigInt::from(1);
            for (x, y) in ma.exponents().iter().zip(mb.exponents()) {
                coeff *= binomial(x + y, *x);
            }
            let c = (ca * cb).scale(&Rational::from_integer(coeff));
            out.add_term(ma.mul(mb), c);
        }
    }
    Ok(out)
}

/// `γⁿ(Σ f_i e_i) = Σ_{|m| = n} Π f_i^{m_i} γ^m`.
pub fn gamma_of_vector(ring: &PresentedRing, v: &FreeModuleVector, n: u32) -> GammaElement {
    let q = v.rank();
    let mut out = GammaElement::zero(ring, q, n);
    for m in dp_basis(q, n) {
        let mut c = ring.one();
        for (f, &e) in v.entries.iter().zip(m.exponents()) {
            if e > 0 {
                c = ring.reduce(&(&c * &f.pow(e)));
            }
            if c.is_zero() {
                break;
            }
        }
        out.add_term(m, c);
    }
    out
}

/// `Γⁿ(M)` as a quotient of `Γⁿ(A^q)`.
#[derive(Clone, Debug)]
pub struct GammaModuleDegree {
    pub degree: u32,
    pub rank: usize,
    pub basis: Vec<DPMonomial>,
    pub relations: Vec<GammaElement>,
    /// The same data as a presented module over `A`, on `basis`.
    pub module: PresentedModule,
}

/// Relations of `Γⁿ(M)`: `γ^b × γᵏ(r)` for each presentation column `r`,
/// `1 ≤ k ≤ n` and `|b| = n - k`.
pub fn gamma_module_degree(m: &PresentedModule, n: u32) -> GammaModuleDegree {
    let ring = m.ring();
    let q = m.rank();
    let mut relations = Vec::new();
    for r in m.relations() {
        for k in 1..=n {
            let g = gamma_of_vector(ring, r, k);
            if g.is_zero() {
                continue;
            }
            for b in dp_basis(q, n - k) {
                let p = dp_multiply(&GammaElement::basis_element(ring, b), &g).expect("same rank");
                if !p.is_zero() {
                    relations.push(p);
                }
            }
        }
    }
    let basis = dp_basis(q, n);
    let module = PresentedModule::new(
        ring,
        basis.len(),
        relations.iter().map(GammaElement::to_vector).collect(),
    )
    .expect("relations live on the basis");
    GammaModuleDegree {
        degree: n,
        rank: q,
        basis,
        relations,
        module,
    }
}

/// `Γⁿ(f): Γⁿ(M) -> Γⁿ(N)`, `γ^m ↦ Π γ^{m_i}(f(e_i))`.
pub fn gamma_map_degree(f: &ModuleMap, n: u32) -> Result<ModuleMap> {
    let ring = f.source().ring();
    let src = gamma_module_degree(f.source(), n);
    let tgt = gamma_module_degree(f.target(), n);
    let q = f.target().rank();
    let mut cols = Vec::with_capacity(src.basis.len());
    for m in &src.basis {
        let mut g = GammaElement::basis_element(ring, Monomial::one(q));
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                g = dp_multiply(&g, &gamma_of_vector(ring, &f.matrix().column(i), e))?;
            }
        }
        cols.push(g.to_vector());
    }
    let matrix = Matrix::from_columns(tgt.basis.len(), ring.nvars(), &cols);
    ModuleMap::new(&src.module, &tgt.module, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::SubmoduleBasis;

    fn truncated() -> PresentedRing {
        PresentedRing::parse(&["x"], &["x^2"]).unwrap()
    }

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn basis_examples() {
        assert_eq!(dp_basis(1, 3), vec![m(&[3])]);
        assert_eq!(dp_basis(2, 2), vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(dp_basis(3, 0), vec![m(&[0, 0, 0])]);
        assert!(dp_basis(0, 2).is_empty());
    }

    #[test]
    fn multiplication_examples() {
        let q = PresentedRing::polynomial_ring(&[]);
        let g1 = GammaElement::basis_element(&q, m(&[1]));
        let sq = dp_multiply(&g1, &g1).unwrap();
        assert_eq!(sq, GammaElement::term(&q, m(&[2]), Polynomial::constant(0, crate::poly::rational(2))));
        let unit = GammaElement::basis_element(&q, m(&[0]));
        assert_eq!(dp_multiply(&unit, &sq).unwrap(), sq);
        let a = GammaElement::basis_element(&q, m(&[1, 0]));
        let b = GammaElement::basis_element(&q, m(&[0, 1]));
        assert_eq!(dp_multiply(&a, &b).unwrap(), GammaElement::basis_element(&q, m(&[1, 1])));
        assert_eq!(
            dp_multiply(&a, &g1),
            Err(Error::RankMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn gamma_of_vector_examples() {
        let r = PresentedRing::polynomial_ring(&["f"]);
        let one = r.one();
        let sum = FreeModuleVector::new(vec![one.clone(), one.clone()]);
        let g = gamma_of_vector(&r, &sum, 2);
        assert_eq!(g.to_vector(), FreeModuleVector::new(vec![one.clone(); 3]));
        let f = r.variable(0);
        let g = gamma_of_vector(&r, &FreeModuleVector::new(vec![f.clone()]), 3);
        assert_eq!(g, GammaElement::term(&r, m(&[3]), f.pow(3)));
        assert!(gamma_of_vector(&r, &FreeModuleVector::zero(2, 1), 3).is_zero());
    }

    #[test]
    fn gamma_of_residue_field() {
        let a = truncated();
        let x = a.variable(0);
        let module = PresentedModule::new(&a, 1, vec![FreeModuleVector::new(vec![x.clone()])]).unwrap();
        let g1 = gamma_module_degree(&module, 1);
        assert_eq!(g1.module, module);
        let g2 = gamma_module_degree(&module, 2);
        let expected =
            SubmoduleBasis::new(1, &[FreeModuleVector::new(vec![x.clone()])], a.gb()).unwrap();
        assert!(g2.module.relation_basis().same_submodule(&expected));
        assert_eq!(g2.module.rational_dimension(), Ok(1));
        let free = gamma_module_degree(&PresentedModule::free(&a, 2), 3);
        assert!(free.relations.is_empty());
        assert_eq!(free.basis.len(), 4);
    }

    #[test]
    fn gamma_of_surjection() {
        let a = truncated();
        let x = a.variable(0);
        let target = PresentedModule::new(&a, 1, vec![FreeModuleVector::new(vec![x])]).unwrap();
        let f = ModuleMap::new(&PresentedModule::free(&a, 1), &target, Matrix::identity(1, 1)).unwrap();
        for n in 0..=3 {
            assert!(gamma_map_degree(&f, n).unwrap().is_surjective());
        }
    }
}
