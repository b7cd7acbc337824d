//! The canonical map `Sym(M) -> Γ(M*)^∨`, its degreewise kernels, and the
//! comparison with the Rees algebra computed through a versal map.

use crate::divided_powers::{bullet, bullet_power, dp_basis, gamma_module_degree, DualFunctional};
use crate::error::{Error, Result};
use crate::groebner::{syzygies, FreeModuleVector, Matrix, SubmoduleBasis};
use crate::poly::Monomial;
use crate::presented::{dual, DualModule, PresentedModule};
use crate::sym_rees::{graded_piece, rees_via_versal, sym_presentation};

/// `Symⁿ(M) -> Γⁿ(M*)^* ⊂ Γⁿ(A^m)^*` in coordinates.
#[derive(Clone, Debug)]
pub struct DegreewiseMap {
    pub degree: u32,
    /// Degree-`n` monomials in the generators of `M`; the columns of `matrix`.
    pub sym_basis: Vec<Monomial>,
    /// `dp_basis(m, n)` for the `m` computed generators of `M*`; the rows.
    pub gamma_basis: Vec<Monomial>,
    /// `Symⁿ(M)` presented on `sym_basis`.
    pub source: PresentedModule,
    pub matrix: Matrix,
}

impl DegreewiseMap {
    /// The image of the `k`-th monomial as a functional.
    pub fn image(&self, dual: &DualModule, k: usize) -> DualFunctional {
        DualFunctional::from_vector(
            self.source.ring(),
            dual.count(),
            self.degree,
            &self.matrix.column(k),
        )
        .expect("column length matches the basis")
    }

    /// Generators of the kernel, including the relations of `Symⁿ(M)`.
    pub fn kernel(&self) -> Vec<FreeModuleVector> {
        let ring = self.source.ring();
        let mut gens = syzygies(&self.matrix, ring.gb()).generators();
        gens.extend(self.source.relations().iter().cloned());
        gens
    }
}

fn canonical_map_with(m: &PresentedModule, d: &DualModule, n: u32) -> Result<DegreewiseMap> {
    let ring = m.ring();
    let count = d.count();
    // u_j = evaluation at e_j, a functional on the generators of M*
    let units: Vec<DualFunctional> = (0..m.rank())
        .map(|j| DualFunctional::from_vector(ring, count, 1, &d.generators.row(j)).expect("degree one"))
        .collect();
    let piece = graded_piece(&sym_presentation(m), n)?;
    let gamma_basis = dp_basis(count, n);
    let mut cols = Vec::with_capacity(piece.basis.len());
    for a in &piece.basis {
        let mut f = DualFunctional::unit(ring, count);
        for (&e, u) in a.exponents().iter().zip(&units) {
            if e > 0 {
                f = bullet(&f, &bullet_power(u, e))?;
            }
        }
        cols.push(f);
    }
    let relations = gamma_module_degree(&d.module, n).relations;
    for f in &cols {
        if !f.annihilates(&relations)? {
            return Err(Error::AnnihilationFailure { degree: n });
        }
    }
    let vectors: Vec<FreeModuleVector> = cols.iter().map(DualFunctional::to_vector).collect();
    Ok(DegreewiseMap {
        degree: n,
        matrix: Matrix::from_columns(gamma_basis.len(), ring.nvars(), &vectors),
        sym_basis: piece.basis,
        gamma_basis,
        source: piece.module,
    })
}

/// Fails with `AnnihilationFailure` if an image does not kill the relations of `Γⁿ(M*)`.
pub fn canonical_map_degree(m: &PresentedModule, n: u32) -> Result<DegreewiseMap> {
    canonical_map_with(m, &dual(m), n)
}

/// Kernel of `Symⁿ(M) -> Γⁿ(M*)^*` as a submodule of the free module on `basis`.
#[derive(Clone, Debug)]
pub struct DegreeKernel {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub generators: Vec<FreeModuleVector>,
}

/// Degreewise kernels for `1 ≤ n ≤ d`.
pub fn rees_via_gamma(m: &PresentedModule, d: u32) -> Result<Vec<DegreeKernel>> {
    let dm = dual(m);
    (1..=d)
        .map(|n| {
            let map = canonical_map_with(m, &dm, n)?;
            Ok(DegreeKernel {
                degree: n,
                generators: map.kernel(),
                basis: map.sym_basis,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeVerdict {
    pub degree: u32,
    /// Number of kernel generators from the versal route.
    pub versal_generators: usize,
    /// Number of kernel generators from the divided-power route.
    pub gamma_generators: usize,
    pub agree: bool,
}

/// Per-degree comparison up to `bound`; says nothing about higher degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    pub bound: u32,
    pub degrees: Vec<DegreeVerdict>,
}

impl TheoremAReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|v| v.agree)
    }
}

/// Compares `ker(Symⁿ(M) -> Symⁿ(F))` for the versal `F` with the kernel of
/// the canonical map, by mutual containment, for `1 ≤ n ≤ d`.
pub fn verify_theorem_a(m: &PresentedModule, d: u32) -> Result<TheoremAReport> {
    let ring = m.ring();
    let rees = rees_via_versal(m)?;
    let gamma = rees_via_gamma(m, d)?;
    let mut degrees = Vec::with_capacity(d as usize);
    for k in gamma {
        let piece = graded_piece(&rees, k.degree)?;
        debug_assert_eq!(piece.basis, k.basis);
        let rank = k.basis.len();
        let versal = SubmoduleBasis::new(rank, piece.module.relations(), ring.gb())?;
        let via_gamma = SubmoduleBasis::new(rank, &k.generators, ring.gb())?;
        degrees.push(DegreeVerdict {
            degree: k.degree,
            versal_generators: piece.module.relations().len(),
            gamma_generators: via_gamma.generators().len(),
            agree: versal.same_submodule(&via_gamma),
        });
    }
    Ok(TheoremAReport { bound: d, degrees })
}
