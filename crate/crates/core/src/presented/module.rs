use super::ring::PresentedRing;
use crate::error::{Error, Result};
use crate::groebner::{syzygies, FreeModuleVector, LiftingBasis, Matrix, SubmoduleBasis};
use crate::poly::Polynomial;

/// Cokernel presentation `A^p --P--> A^q --> M --> 0`.
///
/// `relations` are the columns of `P`, entries in normal form; zero columns are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    ring: PresentedRing,
    rank: usize,
    relations: Vec<FreeModuleVector>,
}

impl PresentedModule {
    pub fn new(ring: &PresentedRing, rank: usize, relations: Vec<FreeModuleVector>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: r.rank(),
                });
            }
            if let Some(p) = r.entries.iter().find(|p| p.nvars() != ring.nvars()) {
                return Err(Error::VariableCountMismatch {
                    expected: ring.nvars(),
                    found: p.nvars(),
                });
            }
            let r = r.map_entries(|p| ring.reduce(p));
            if !r.is_zero() {
                rels.push(r);
            }
        }
        Ok(PresentedModule {
            ring: ring.clone(),
            rank,
            relations: rels,
        })
    }

    pub fn free(ring: &PresentedRing, rank: usize) -> Self {
        PresentedModule {
            ring: ring.clone(),
            rank,
            relations: Vec::new(),
        }
    }

    pub fn zero(ring: &PresentedRing) -> Self {
        Self::free(ring, 0)
    }

    /// `coker(P)` for a `q × p` matrix.
    pub fn cokernel(ring: &PresentedRing, matrix: &Matrix) -> Result<Self> {
        if matrix.nvars() != ring.nvars() {
            return Err(Error::VariableCountMismatch {
                expected: ring.nvars(),
                found: matrix.nvars(),
            });
        }
        Self::new(ring, matrix.rows(), matrix.columns())
    }

    /// The ideal generated by `gens`, presented on those generators.
    pub fn from_ideal(ring: &PresentedRing, gens: &[Polynomial]) -> Result<Self> {
        let row: Vec<Polynomial> = gens.iter().map(|g| ring.reduce(g)).collect();
        let m = Matrix::from_rows(ring.nvars(), vec![row])?;
        let syz = syzygies(&m, ring.gb());
        Self::new(ring, gens.len(), syz.generators())
    }

    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[FreeModuleVector] {
        &self.relations
    }

    pub fn relation_matrix(&self) -> Matrix {
        Matrix::from_columns(self.rank, self.ring.nvars(), &self.relations)
    }

    pub fn has_free_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    /// Basis of the relation submodule (plus the ring's ideal) inside `R^q`.
    pub fn relation_basis(&self) -> SubmoduleBasis {
        SubmoduleBasis::new(self.rank, &self.relations, self.ring.gb()).expect("consistent ranks")
    }

    /// True if `v` represents zero in `M`.
    pub fn is_zero_element(&self, v: &FreeModuleVector) -> bool {
        self.relation_basis().contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.relation_basis().is_everything()
    }

    /// `QQ`-dimension of `M`; requires a finite-dimensional base ring.
    pub fn rational_dimension(&self) -> Result<usize> {
        let std = self.ring.standard_monomials().ok_or(Error::InfiniteDimensional)?;
        let basis = self.relation_basis();
        let nvars = self.ring.nvars();
        // a (position, monomial) pair is standard iff its unit vector is its own normal form
        let mut count = 0;
        for i in 0..self.rank {
            for m in &std {
                let mut v = FreeModuleVector::zero(self.rank, nvars);
                v.entries[i] = Polynomial::term(m.clone(), num_traits::One::one());
                if basis.normal_form(&v) == v {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    pub fn unit(&self, i: usize) -> FreeModuleVector {
        FreeModuleVector::unit(self.rank, self.ring.nvars(), i)
    }

    pub(crate) fn reduce_vector(&self, v: &FreeModuleVector) -> FreeModuleVector {
        v.map_entries(|p| self.ring.reduce(p))
    }
}

/// `M ⊕ N` with the block presentation.
pub fn direct_sum(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    m.ring.check_same(&n.ring)?;
    let nvars = m.ring.nvars();
    let mut rels = Vec::new();
    for r in &m.relations {
        rels.push(r.concat(&FreeModuleVector::zero(n.rank, nvars)));
    }
    for r in &n.relations {
        rels.push(FreeModuleVector::zero(m.rank, nvars).concat(r));
    }
    PresentedModule::new(&m.ring, m.rank + n.rank, rels)
}

/// Homomorphism of presented modules, given on ambient generators by a
/// `target.rank × source.rank` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: PresentedModule,
    target: PresentedModule,
    matrix: Matrix,
}

impl ModuleMap {
    /// Checks that every source relation maps into the target's relations.
    pub fn new(source: &PresentedModule, target: &PresentedModule, matrix: Matrix) -> Result<Self> {
        source.ring.check_same(&target.ring)?;
        if matrix.rows() != target.rank || matrix.cols() != source.rank {
            return Err(Error::ShapeMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank,
                source.rank
            )));
        }
        let ring = &source.ring;
        let matrix = matrix.map_entries(|p| ring.reduce(p));
        let basis = target.relation_basis();
        for (k, r) in source.relations.iter().enumerate() {
            if !basis.contains(&matrix.apply(r)?) {
                return Err(Error::IllDefinedMap(format!(
                    "relation {} is not sent to a relation of the target",
                    k
                )));
            }
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn identity(m: &PresentedModule) -> Self {
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.rank, m.ring.nvars()),
        }
    }

    pub fn source(&self) -> &PresentedModule {
        &self.source
    }

    pub fn target(&self) -> &PresentedModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.source {
            return Err(Error::IllDefinedMap("maps are not composable".into()));
        }
        let m = other.matrix.mul(&self.matrix)?;
        ModuleMap::new(&self.source, &other.target, m)
    }

    pub fn apply(&self, v: &FreeModuleVector) -> Result<FreeModuleVector> {
        Ok(self.target.reduce_vector(&self.matrix.apply(v)?))
    }

    /// Generators (in the source's ambient `A^q`) of the kernel, including the
    /// source relations.
    pub fn kernel(&self) -> Vec<FreeModuleVector> {
        let aug = self
            .matrix
            .hconcat(&self.target.relation_matrix())
            .expect("row counts agree");
        let q = self.source.rank;
        syzygies(&aug, self.source.ring.gb())
            .generators()
            .into_iter()
            .map(|v| FreeModuleVector::new(v.entries[..q].to_vec()))
            .map(|v| self.source.reduce_vector(&v))
            .filter(|v| !v.is_zero())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        let rel = self.source.relation_basis();
        rel.contains_all(&self.kernel())
    }

    pub fn is_surjective(&self) -> bool {
        let mut gens = self.matrix.columns();
        gens.extend(self.target.relations.iter().cloned());
        SubmoduleBasis::new(self.target.rank, &gens, self.target.ring.gb())
            .expect("ranks")
            .is_everything()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// True if both maps agree on every generator, modulo the target relations.
    pub fn agrees_with(&self, other: &ModuleMap) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let basis = self.target.relation_basis();
        (0..self.source.rank).all(|j| {
            let d = self.matrix.column(j).add(&other.matrix.column(j).map_entries(|p| -p));
            basis.contains(&d)
        })
    }
}

/// `φ ⊕ ψ` as a block-diagonal map.
pub fn direct_sum_map(phi: &ModuleMap, psi: &ModuleMap) -> Result<ModuleMap> {
    let source = direct_sum(&phi.source, &psi.source)?;
    let target = direct_sum(&phi.target, &psi.target)?;
    ModuleMap::new(&source, &target, phi.matrix.block_diagonal(&psi.matrix))
}

/// `M* = Hom_A(M, A)` presented on explicit functionals.
#[derive(Clone, Debug)]
pub struct DualModule {
    /// `M*` presented on the generators below.
    pub module: PresentedModule,
    /// `q × m`: column `i` is the functional sending `e_j` to entry `j`.
    pub generators: Matrix,
}

impl DualModule {
    pub fn functionals(&self) -> Vec<FreeModuleVector> {
        self.generators.columns()
    }

    pub fn count(&self) -> usize {
        self.generators.cols()
    }
}

/// Presentation of `M*` as `ker(P^T)` with the relations among its generators.
pub fn dual(m: &PresentedModule) -> DualModule {
    let ring = &m.ring;
    let nvars = ring.nvars();
    let pt = m.relation_matrix().transpose();
    let pt = if m.relations.is_empty() {
        Matrix::zero(0, m.rank, nvars)
    } else {
        pt
    };
    let gens = syzygies(&pt, ring.gb()).generators();
    let generators = Matrix::from_columns(m.rank, nvars, &gens);
    let rels = if gens.is_empty() {
        Vec::new()
    } else {
        syzygies(&generators, ring.gb()).generators()
    };
    let module = PresentedModule::new(ring, gens.len(), rels).expect("ranks from syzygies");
    DualModule { module, generators }
}

/// The canonical `M -> M**` together with the embedding of `M**` into `F = (F')*`.
#[derive(Clone, Debug)]
pub struct DoubleDual {
    pub dual: DualModule,
    pub double_dual: DualModule,
    /// `M -> M**`, on the generators of `M**`.
    pub map: ModuleMap,
}

impl DoubleDual {
    /// `M** -> F` where `F` is free on the generators of `M*`; the matrix of
    /// generators of `M**` as functionals on those generators.
    pub fn embedding(&self) -> Result<ModuleMap> {
        let f = PresentedModule::free(self.map.source.ring(), self.dual.count());
        ModuleMap::new(&self.double_dual.module, &f, self.double_dual.generators.clone())
    }
}

pub fn double_dual(m: &PresentedModule) -> Result<DoubleDual> {
    let d1 = dual(m);
    let d2 = dual(&d1.module);
    let ring = &m.ring;
    let lifter = LiftingBasis::new(d1.count(), &d2.functionals(), ring.gb());
    let mut cols = Vec::with_capacity(m.rank);
    for j in 0..m.rank {
        // evaluation at e_j, as a functional on the generators of M*
        let ev = d1.generators.row(j);
        let c = lifter.lift(&ev).ok_or_else(|| {
            Error::IllDefinedMap(format!("evaluation at generator {} is not in M**", j))
        })?;
        cols.push(FreeModuleVector::new(c));
    }
    let matrix = Matrix::from_columns(d2.count(), ring.nvars(), &cols);
    let map = ModuleMap::new(m, &d2.module, matrix)?;
    Ok(DoubleDual {
        dual: d1,
        double_dual: d2,
        map,
    })
}

pub fn double_dual_map(m: &PresentedModule) -> Result<ModuleMap> {
    Ok(double_dual(m)?.map)
}

/// `φ*: F* -> M*` is surjective.
pub fn is_versal(phi: &ModuleMap) -> Result<bool> {
    if !phi.target.has_free_presentation() {
        return Err(Error::TargetNotFree);
    }
    let m = &phi.source;
    let d = dual(m);
    let rows: Vec<FreeModuleVector> = (0..phi.matrix.rows()).map(|k| phi.matrix.row(k)).collect();
    let image = SubmoduleBasis::new(m.rank, &rows, m.ring.gb())?;
    Ok(image.contains_all(&d.functionals()))
}

/// `M -> M** -> F` with `F` free on the computed generators of `M*`.
pub fn versal_map(m: &PresentedModule) -> Result<ModuleMap> {
    let d = dual(m);
    let f = PresentedModule::free(&m.ring, d.count());
    ModuleMap::new(m, &f, d.generators.transpose())
}

/// `f*: N* -> M*` on the computed generators of the duals.
pub fn dual_map(f: &ModuleMap) -> Result<ModuleMap> {
    let dm = dual(&f.source);
    let dn = dual(&f.target);
    let ring = f.source.ring();
    let lifter = LiftingBasis::new(f.source.rank, &dm.functionals(), ring.gb());
    let ft = f.matrix.transpose();
    let mut cols = Vec::new();
    for h in dn.functionals() {
        let pulled = ft.apply(&h)?;
        let c = lifter
            .lift(&pulled)
            .ok_or_else(|| Error::IllDefinedMap("pulled-back functional not in M*".into()))?;
        cols.push(FreeModuleVector::new(c));
    }
    let matrix = Matrix::from_columns(dm.count(), ring.nvars(), &cols);
    ModuleMap::new(&dn.module, &dm.module, matrix)
}
