use super::coalgebra::comultiplication;
use super::gamma::{dp_basis, gamma_module_degree, DPMonomial, GammaElement};
use crate::error::{Error, Result};
use crate::groebner::FreeModuleVector;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::presented::{dual, DualModule, PresentedModule, PresentedRing};

/// Element of `Hom_A(Γⁿ(A^q), A)`, by its values on `dp_basis(q, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    ring: PresentedRing,
    rank: usize,
    degree: u32,
    coords: Vec<Polynomial>,
}

impl DualFunctional {
    pub fn from_vector(ring: &PresentedRing, rank: usize, degree: u32, v: &FreeModuleVector) -> Result<Self> {
        let len = dp_basis(rank, degree).len();
        if v.rank() != len {
            return Err(Error::RankMismatch {
                expected: len,
                found: v.rank(),
            });
        }
        Ok(DualFunctional {
            ring: ring.clone(),
            rank,
            degree,
            coords: v.entries.iter().map(|p| ring.reduce(p)).collect(),
        })
    }

    pub fn zero(ring: &PresentedRing, rank: usize, degree: u32) -> Self {
        DualFunctional {
            ring: ring.clone(),
            rank,
            degree,
            coords: vec![ring.zero(); dp_basis(rank, degree).len()],
        }
    }

    /// `(γ^m)*`.
    pub fn dual_basis(ring: &PresentedRing, m: &DPMonomial) -> Self {
        let basis = dp_basis(m.nvars(), m.degree());
        let mut f = Self::zero(ring, m.nvars(), m.degree());
        let i = basis.iter().position(|b| b == m).expect("m is a basis monomial");
        f.coords[i] = ring.one();
        f
    }

    /// The degree-0 functional `γ⁰ ↦ 1`.
    pub fn unit(ring: &PresentedRing, rank: usize) -> Self {
        Self::dual_basis(ring, &Monomial::one(rank))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coordinates(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn to_vector(&self) -> FreeModuleVector {
        FreeModuleVector::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    pub fn apply(&self, g: &GammaElement) -> Result<Polynomial> {
        if g.rank() != self.rank || g.degree() != self.degree {
            return Err(Error::DegreeMismatch(format!(
                "functional of degree {} on an element of degree {}",
                self.degree,
                g.degree()
            )));
        }
        let basis = dp_basis(self.rank, self.degree);
        let mut out = self.ring.zero();
        for (m, c) in g.terms() {
            let i = basis.iter().position(|b| b == m).expect("basis monomial");
            out = &out + &(c * &self.coords[i]);
        }
        Ok(self.ring.reduce(&out))
    }

    /// True if every element of `relations` is sent to zero.
    pub fn annihilates(&self, relations: &[GammaElement]) -> Result<bool> {
        for r in relations {
            if !self.apply(r)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn add(&self, other: &DualFunctional) -> Result<DualFunctional> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch("adding functionals of different degrees".into()));
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| self.ring.reduce(&(a + b)))
            .collect();
        Ok(DualFunctional {
            coords,
            ..self.clone()
        })
    }

    pub fn scale(&self, f: &Polynomial) -> DualFunctional {
        DualFunctional {
            coords: self.coords.iter().map(|c| self.ring.reduce(&(c * f))).collect(),
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &DualFunctional) -> Result<()> {
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

/// `(u • v)(γ) = (u ⊗ v)(Δ(γ))`.
pub fn bullet(u: &DualFunctional, v: &DualFunctional) -> Result<DualFunctional> {
    u.check_compatible(v)?;
    let (i, j) = (u.degree, v.degree);
    let delta = comultiplication(u.rank, i + j, i, j)?;
    let nj = v.coords.len();
    let ring = &u.ring;
    let mut coords = Vec::with_capacity(delta.cols());
    for col in 0..delta.cols() {
        let mut acc = ring.zero();
        for row in 0..delta.rows() {
            let d = delta.get(row, col);
            if d == 0 {
                continue;
            }
            let t = &u.coords[row / nj] * &v.coords[row % nj];
            acc = &acc + &t.scale(&Rational::from_integer(d.into()));
        }
        coords.push(ring.reduce(&acc));
    }
    Ok(DualFunctional {
        ring: ring.clone(),
        rank: u.rank,
        degree: i + j,
        coords,
    })
}

/// `u^{•k}`.
pub fn bullet_power(u: &DualFunctional, k: u32) -> DualFunctional {
    let mut out = DualFunctional::unit(&u.ring, u.rank);
    for _ in 0..k {
        out = bullet(&out, u).expect("compatible");
    }
    out
}

/// Images of the degree-`n` monomials of `Sym(F)`, `F` free of rank `q`, under the
/// algebra map `S_i ↦ γ¹(x_i)*`; listed in the order of `dp_basis(q, n)`.
pub fn sym_dual_iso(ring: &PresentedRing, q: usize, n: u32) -> Vec<DualFunctional> {
    let degree_one: Vec<DualFunctional> = (0..q)
        .map(|i| DualFunctional::dual_basis(ring, &Monomial::variable(q, i)))
        .collect();
    dp_basis(q, n)
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .zip(&degree_one)
                .fold(DualFunctional::unit(ring, q), |acc, (&e, u)| {
                    bullet(&acc, &bullet_power(u, e)).expect("compatible")
                })
        })
        .collect()
}

/// `Hom_A(Γⁿ(M), A)`, as functionals on `Γⁿ(A^q)` killing the relations.
pub fn gamma_dual_degree(m: &PresentedModule, n: u32) -> DualModule {
    dual(&gamma_module_degree(m, n).module)
}
