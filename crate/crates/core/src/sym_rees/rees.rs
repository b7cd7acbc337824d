use super::presentation::{fresh_name, name_pool, GradedAlgebraMap, GradedAlgebraPresentation};
use crate::error::{Error, Result};
use crate::groebner::{eliminate_variables, Ideal, Matrix};
use crate::poly::Polynomial;
use crate::presented::{versal_map, ModuleMap, PresentedModule, PresentedRing};

/// `Sym(M)` on generators `S, T, ...`, one per ambient generator of `M`.
pub fn sym_presentation(m: &PresentedModule) -> GradedAlgebraPresentation {
    sym_presentation_named(m, 'S')
}

/// `Sym(M)` with generator names drawn from the letters starting at `start`.
pub fn sym_presentation_named(m: &PresentedModule, start: char) -> GradedAlgebraPresentation {
    let ring = m.ring();
    let names = name_pool(start, m.rank(), ring.names());
    let q = m.rank();
    let nvars = ring.nvars() + q;
    let rels = m
        .relations()
        .iter()
        .map(|r| linear_form(ring, &r.entries, nvars))
        .collect();
    GradedAlgebraPresentation::new(ring, names, vec![1; q], rels).expect("linear relations are homogeneous")
}

/// `Σ c_i T_i` in the joined variables of an algebra over `ring`.
fn linear_form(ring: &PresentedRing, coeffs: &[Polynomial], nvars: usize) -> Polynomial {
    let extra = nvars - ring.nvars();
    let mut out = Polynomial::zero(nvars);
    for (i, c) in coeffs.iter().enumerate() {
        let t = Polynomial::variable(nvars, ring.nvars() + i);
        out = &out + &(&c.extend_vars(extra) * &t);
    }
    out
}

/// `Sym(φ)` between the default symmetric algebra presentations.
pub fn sym_map(phi: &ModuleMap) -> Result<GradedAlgebraMap> {
    sym_map_between(phi, &sym_presentation(phi.source()), &sym_presentation(phi.target()))
}

/// `Sym(φ)` between given presentations of `Sym(source)` and `Sym(target)`
/// (or quotients of them).
pub fn sym_map_between(
    phi: &ModuleMap,
    source: &GradedAlgebraPresentation,
    target: &GradedAlgebraPresentation,
) -> Result<GradedAlgebraMap> {
    let ring = phi.source().ring();
    if source.ngens() != phi.source().rank() || target.ngens() != phi.target().rank() {
        return Err(Error::GeneratorMismatch(
            "algebra generators do not match module generators".into(),
        ));
    }
    let images = (0..phi.source().rank())
        .map(|j| linear_form(ring, &phi.matrix().column(j).entries, target.nvars()))
        .collect();
    GradedAlgebraMap::new(source, target, images)
}

/// Kernel of `f`, as an ideal in the source's joined variables. It contains the
/// source relations.
pub fn algebra_map_kernel(f: &GradedAlgebraMap) -> Ideal {
    let src = f.source();
    let tgt = f.target();
    let k = src.base_nvars();
    let (s, t) = (src.ngens(), tgt.ngens());
    let n = k + t + s;
    // joined order: base < target generators < source generators
    let src_map: Vec<usize> = (0..k).chain((0..s).map(|j| k + t + j)).collect();
    let tgt_map: Vec<usize> = (0..k + t).collect();
    let mut gens: Vec<Polynomial> = src.ideal().generators().iter().map(|g| g.remap(n, &src_map)).collect();
    gens.extend(tgt.ideal().generators().iter().map(|g| g.remap(n, &tgt_map)));
    for (j, img) in f.images().iter().enumerate() {
        let sj = Polynomial::variable(n, k + t + j);
        gens.push(&sj - &img.remap(n, &tgt_map));
    }
    let graph = Ideal::new(n, gens).expect("consistent variables");
    let elim: Vec<usize> = (k..k + t).collect();
    let kernel = eliminate_variables(&graph, &elim);
    // back to base, source generators
    let mut back = vec![0usize; n];
    for (i, b) in back.iter_mut().enumerate().take(k) {
        *b = i;
    }
    for j in 0..s {
        back[k + t + j] = k + j;
    }
    let gens = kernel
        .generators()
        .iter()
        .map(|g| g.remap(k + s, &back))
        .collect();
    Ideal::new(k + s, gens).expect("consistent variables")
}

/// `Sym(M) / ker Sym(φ)` for a map `φ` into a free module.
pub fn rees_of_map(phi: &ModuleMap) -> Result<GradedAlgebraPresentation> {
    rees_of_map_named(phi, 'U')
}

fn rees_of_map_named(phi: &ModuleMap, start: char) -> Result<GradedAlgebraPresentation> {
    if !phi.target().has_free_presentation() {
        return Err(Error::TargetNotFree);
    }
    let sym = sym_presentation_named(phi.source(), start);
    let f = sym_map_between(phi, &sym, &sym_presentation(phi.target()))?;
    let kernel = algebra_map_kernel(&f);
    quotient_by(&sym, kernel)
}

fn quotient_by(sym: &GradedAlgebraPresentation, kernel: Ideal) -> Result<GradedAlgebraPresentation> {
    GradedAlgebraPresentation::new(
        sym.base(),
        sym.generators().to_vec(),
        sym.degrees().to_vec(),
        kernel.into_generators(),
    )
}

/// `R(M)` through the computed versal map, on generators `U, V, ...`.
pub fn rees_via_versal(m: &PresentedModule) -> Result<GradedAlgebraPresentation> {
    rees_of_map(&versal_map(m)?)
}

/// `R(f): R(M) -> R(N)` induced by `f: M -> N`.
pub fn rees_map(f: &ModuleMap) -> Result<GradedAlgebraMap> {
    let src = rees_via_versal(f.source())?;
    let tgt = rees_via_versal(f.target())?;
    sym_map_between(f, &src, &tgt)
}

/// The two presentations of the Rees algebra of an ideal.
#[derive(Clone, Debug)]
pub struct IdealRees {
    /// `im(Sym(I) -> Sym(A))`.
    pub image_of_sym: GradedAlgebraPresentation,
    /// `ker(A[T] -> A[t])`, `T_j ↦ g_j t`.
    pub classical: GradedAlgebraPresentation,
}

impl IdealRees {
    pub fn agree(&self) -> bool {
        self.image_of_sym.gb().elements() == self.classical.gb().elements()
    }
}

pub fn rees_of_ideal_routes(ring: &PresentedRing, gens: &[Polynomial]) -> Result<IdealRees> {
    if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
        return Err(Error::VariableCountMismatch {
            expected: ring.nvars(),
            found: g.nvars(),
        });
    }
    let m = gens.len();
    let row: Vec<Polynomial> = gens.iter().map(|g| ring.reduce(g)).collect();
    let ideal = PresentedModule::from_ideal(ring, &row)?;
    let a = PresentedModule::free(ring, 1);
    let inclusion = ModuleMap::new(&ideal, &a, Matrix::from_rows(ring.nvars(), vec![row.clone()])?)?;
    let image_of_sym = rees_of_map_named(&inclusion, 'S')?;

    let names = name_pool('S', m, ring.names());
    let mut taken = ring.names().to_vec();
    taken.extend(names.iter().cloned());
    let t_name = fresh_name("t", &taken);
    let poly = GradedAlgebraPresentation::polynomial(ring, names, vec![1; m])?;
    let line = GradedAlgebraPresentation::polynomial(ring, vec![t_name], vec![1])?;
    let k = ring.nvars();
    let t = line.generator(0);
    let images = row.iter().map(|g| &g.extend_vars(1) * &t).collect();
    let f = GradedAlgebraMap::new(&poly, &line, images)?;
    let classical = quotient_by(&poly, algebra_map_kernel(&f))?;
    debug_assert_eq!(classical.base_nvars(), k);
    Ok(IdealRees {
        image_of_sym,
        classical,
    })
}

/// `R(I)` on generators `S, T, ...`; fails if the two routes disagree.
pub fn rees_of_ideal(ring: &PresentedRing, gens: &[Polynomial]) -> Result<GradedAlgebraPresentation> {
    let r = rees_of_ideal_routes(ring, gens)?;
    if r.agree() {
        Ok(r.classical)
    } else {
        Err(Error::RouteMismatch(format!(
            "image of Sym(I) is {}, classical Rees algebra is {}",
            r.image_of_sym, r.classical
        )))
    }
}
