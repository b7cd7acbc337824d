use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, FreeModuleVector, GroebnerBasis, Ideal, Matrix};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::presented::{ModuleMap, PresentedModule, PresentedRing};

/// `A[T_1..T_s] / J` with positive generator degrees.
///
/// Polynomials live in the joined variables: base variables first, then the
/// generators. `J` always contains the base ring's defining ideal.
#[derive(Clone)]
pub struct GradedAlgebraPresentation {
    base: PresentedRing,
    generators: Vec<String>,
    degrees: Vec<u32>,
    ideal: Ideal,
    gb: GroebnerBasis,
}

impl GradedAlgebraPresentation {
    /// `relations` are polynomials in the joined variables; each must be
    /// homogeneous for the generator grading.
    pub fn new(
        base: &PresentedRing,
        generators: Vec<String>,
        degrees: Vec<u32>,
        relations: Vec<Polynomial>,
    ) -> Result<Self> {
        if generators.len() != degrees.len() {
            return Err(Error::GeneratorMismatch(format!(
                "{} generators but {} degrees",
                generators.len(),
                degrees.len()
            )));
        }
        if degrees.contains(&0) {
            return Err(Error::DegreeMismatch("generator degrees must be positive".into()));
        }
        for g in &generators {
            if base.names().contains(g) || generators.iter().filter(|h| *h == g).count() > 1 {
                return Err(Error::GeneratorMismatch(format!("generator name {} is not fresh", g)));
            }
        }
        let k = base.nvars();
        let nvars = k + generators.len();
        let mut gens: Vec<Polynomial> = base
            .defining_ideal()
            .generators()
            .iter()
            .map(|g| g.extend_vars(generators.len()))
            .collect();
        for r in relations {
            if r.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    found: r.nvars(),
                });
            }
            if homogeneous_degree(&r, k, &degrees).is_none() {
                return Err(Error::DegreeMismatch(
                    "relation is not homogeneous in the generators".into(),
                ));
            }
            gens.push(r);
        }
        let ideal = Ideal::new(nvars, gens)?;
        let gb = buchberger(&ideal, base.order());
        Ok(GradedAlgebraPresentation {
            base: base.clone(),
            generators,
            degrees,
            ideal,
            gb,
        })
    }

    /// `A[T_1..T_s]` with no relations.
    pub fn polynomial(base: &PresentedRing, generators: Vec<String>, degrees: Vec<u32>) -> Result<Self> {
        Self::new(base, generators, degrees, Vec::new())
    }

    pub fn base(&self) -> &PresentedRing {
        &self.base
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn base_nvars(&self) -> usize {
        self.base.nvars()
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars() + self.generators.len()
    }

    /// All variable names, base first.
    pub fn names(&self) -> Vec<String> {
        let mut v = self.base.names().to_vec();
        v.extend(self.generators.iter().cloned());
        v
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Basis elements of `J` that involve a generator.
    pub fn relations(&self) -> Vec<Polynomial> {
        let k = self.base_nvars();
        self.gb
            .elements()
            .iter()
            .filter(|g| !g.only_uses(0..k))
            .cloned()
            .collect()
    }

    pub fn generator(&self, j: usize) -> Polynomial {
        Polynomial::variable(self.nvars(), self.base_nvars() + j)
    }

    /// A base-ring polynomial viewed in the joined variables.
    pub fn lift_base(&self, p: &Polynomial) -> Polynomial {
        p.extend_vars(self.ngens())
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.gb.normal_form(p)
    }

    pub fn parse_polynomial(&self, text: &str) -> Result<Polynomial> {
        crate::poly::parse_polynomial(text, &self.names())
    }

    pub fn render_polynomial(&self, p: &Polynomial) -> String {
        p.render(&self.names(), self.gb.order())
    }

    /// Generator degree of a homogeneous polynomial (`None` if zero or inhomogeneous).
    pub fn degree_of(&self, p: &Polynomial) -> Option<u32> {
        homogeneous_degree(p, self.base_nvars(), &self.degrees)
    }

    /// `A[U, V] / (x*U, U^2)` style text.
    pub fn render(&self) -> String {
        let head = format!("{}[{}]", self.base.label(), self.generators.join(", "));
        let rels: Vec<String> = self
            .relations()
            .iter()
            .map(|r| self.render_polynomial(r))
            .collect();
        if rels.is_empty() {
            head
        } else {
            format!("{} / ({})", head, rels.join(", "))
        }
    }

    /// Generator monomials of degree `n` (as exponent vectors over the generators).
    pub fn degree_basis(&self, n: u32) -> Vec<Monomial> {
        monomials_of_degree(&self.degrees, n)
    }

    /// The joined-variable monomial for generator exponents `m`.
    pub fn monomial(&self, m: &Monomial) -> Polynomial {
        let mut e = vec![0; self.base_nvars()];
        e.extend_from_slice(m.exponents());
        Polynomial::term(Monomial::new(e), num_traits::One::one())
    }

    /// Coordinates of a polynomial of degree `n` on `degree_basis(n)`, with
    /// coefficients in the base ring.
    pub fn coordinates(&self, p: &Polynomial, n: u32) -> Result<FreeModuleVector> {
        let basis = self.degree_basis(n);
        let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let k = self.base_nvars();
        let mut entries = vec![Polynomial::zero(k); basis.len()];
        for (m, c) in p.terms() {
            let (b, g) = m.exponents().split_at(k);
            let g = Monomial::new(g.to_vec());
            let i = *index.get(&g).ok_or_else(|| {
                Error::DegreeMismatch(format!("term outside degree {}", n))
            })?;
            entries[i].add_term(Monomial::new(b.to_vec()), c.clone());
        }
        Ok(FreeModuleVector::new(entries))
    }
}

pub(crate) fn homogeneous_degree(p: &Polynomial, k: usize, degrees: &[u32]) -> Option<u32> {
    let mut deg = None;
    for (m, _) in p.terms() {
        let d: u32 = m.exponents()[k..]
            .iter()
            .zip(degrees)
            .map(|(e, w)| e * w)
            .sum();
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    deg
}

impl PartialEq for GradedAlgebraPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
            && self.generators == other.generators
            && self.degrees == other.degrees
            && self.gb == other.gb
    }
}

impl Eq for GradedAlgebraPresentation {}

impl fmt::Debug for GradedAlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for GradedAlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A homomorphism of graded algebras over the same base, fixing the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraMap {
    source: GradedAlgebraPresentation,
    target: GradedAlgebraPresentation,
    images: Vec<Polynomial>,
}

impl GradedAlgebraMap {
    /// `images[j]` is the image of generator `j`, in the target's joined variables.
    pub fn new(
        source: &GradedAlgebraPresentation,
        target: &GradedAlgebraPresentation,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        source.base.check_same(&target.base)?;
        if images.len() != source.ngens() {
            return Err(Error::GeneratorMismatch(format!(
                "{} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        for (j, p) in images.iter().enumerate() {
            if p.nvars() != target.nvars() {
                return Err(Error::VariableCountMismatch {
                    expected: target.nvars(),
                    found: p.nvars(),
                });
            }
            let p = target.reduce(p);
            if !p.is_zero() && target.degree_of(&p) != Some(source.degrees[j]) {
                return Err(Error::DegreeMismatch(format!(
                    "image of {} is not homogeneous of degree {}",
                    source.generators[j], source.degrees[j]
                )));
            }
        }
        let images: Vec<Polynomial> = images.iter().map(|p| target.reduce(p)).collect();
        let f = GradedAlgebraMap {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        for r in source.gb.elements() {
            if !target.reduce(&f.image(r)).is_zero() {
                return Err(Error::IllDefinedMap(format!(
                    "relation {} is not preserved",
                    source.render_polynomial(r)
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(b: &GradedAlgebraPresentation) -> Self {
        GradedAlgebraMap {
            source: b.clone(),
            target: b.clone(),
            images: (0..b.ngens()).map(|j| b.generator(j)).collect(),
        }
    }

    pub fn source(&self) -> &GradedAlgebraPresentation {
        &self.source
    }

    pub fn target(&self) -> &GradedAlgebraPresentation {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of a source polynomial, not reduced.
    pub(crate) fn image(&self, p: &Polynomial) -> Polynomial {
        let k = self.source.base_nvars();
        let mut subs: Vec<Polynomial> = (0..k)
            .map(|i| Polynomial::variable(self.target.nvars(), i))
            .collect();
        subs.extend(self.images.iter().cloned());
        p.substitute(self.target.nvars(), &subs)
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        self.target.reduce(&self.image(p))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GradedAlgebraMap) -> Result<GradedAlgebraMap> {
        if self.target != other.source {
            return Err(Error::IllDefinedMap("algebra maps are not composable".into()));
        }
        let images = self.images.iter().map(|p| other.apply(p)).collect();
        GradedAlgebraMap::new(&self.source, &other.target, images)
    }

    /// The induced map of degree-`n` pieces as presented base-ring modules.
    pub fn degree_map(&self, n: u32) -> Result<ModuleMap> {
        let src = graded_piece(&self.source, n)?;
        let tgt = graded_piece(&self.target, n)?;
        let cols = src
            .basis
            .iter()
            .map(|m| self.target.coordinates(&self.apply(&self.source.monomial(m)), n))
            .collect::<Result<Vec<_>>>()?;
        let nvars = self.source.base_nvars();
        let matrix = Matrix::from_columns(tgt.basis.len(), nvars, &cols);
        ModuleMap::new(&src.module, &tgt.module, matrix)
    }

    /// Surjective in every degree `1..=d`.
    pub fn is_surjective_up_to(&self, d: u32) -> Result<bool> {
        for n in 1..=d {
            if !self.degree_map(n)?.is_surjective() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The degree-`n` piece `B_n` as a module over the base, on the generator
/// monomials of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub module: PresentedModule,
}

pub fn graded_piece(b: &GradedAlgebraPresentation, n: u32) -> Result<GradedPiece> {
    let basis = b.degree_basis(n);
    let mut rels = Vec::new();
    for r in b.gb.elements() {
        let e = match b.degree_of(r) {
            Some(e) if e <= n => e,
            _ => continue,
        };
        for m in b.degree_basis(n - e) {
            rels.push(b.coordinates(&(&b.monomial(&m) * r), n)?);
        }
    }
    let module = PresentedModule::new(&b.base, basis.len(), rels)?;
    Ok(GradedPiece {
        degree: n,
        basis,
        module,
    })
}

/// Picks a name not in `taken`, starting from `hint`'s letter.
pub(crate) fn fresh_name(hint: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == hint) {
        return hint.to_string();
    }
    if let Some(c) = hint.chars().next().filter(|c| c.is_ascii_uppercase()) {
        for l in (c as u8)..=b'Z' {
            let s = (l as char).to_string();
            if !taken.contains(&s) {
                return s;
            }
        }
    }
    (1..)
        .map(|i| format!("{}{}", hint, i))
        .find(|s| !taken.contains(s))
        .expect("infinite supply")
}

/// `count` consecutive letters from `start`, or `start1, start2, ...` when the
/// alphabet runs out or a letter is taken.
pub(crate) fn name_pool(start: char, count: usize, taken: &[String]) -> Vec<String> {
    let letters: Vec<String> = ((start as u8)..=b'Z')
        .map(|l| (l as char).to_string())
        .take(count)
        .collect();
    if letters.len() == count && letters.iter().all(|l| !taken.contains(l)) {
        return letters;
    }
    let mut out = Vec::with_capacity(count);
    let mut i = 1;
    while out.len() < count {
        let s = format!("{}{}", start, i);
        if !taken.contains(&s) {
            out.push(s);
        }
        i += 1;
    }
    out
}

/// `B ⊗_A C`: disjoint union of generators, colliding names in `C` renamed.
pub fn tensor_presentation(
    b: &GradedAlgebraPresentation,
    c: &GradedAlgebraPresentation,
) -> Result<GradedAlgebraPresentation> {
    b.base.check_same(&c.base)?;
    let k = b.base_nvars();
    let mut names = b.generators.clone();
    let mut taken: Vec<String> = b.base.names().to_vec();
    taken.extend(names.iter().cloned());
    taken.extend(c.generators.iter().cloned());
    for g in &c.generators {
        let n = if names.contains(g) {
            fresh_name(g, &taken)
        } else {
            g.clone()
        };
        taken.push(n.clone());
        names.push(n);
    }
    let mut degrees = b.degrees.clone();
    degrees.extend(c.degrees.iter().cloned());
    let nvars = k + names.len();
    let b_map: Vec<usize> = (0..b.nvars()).collect();
    let c_map: Vec<usize> = (0..k).chain((0..c.ngens()).map(|j| k + b.ngens() + j)).collect();
    let mut rels: Vec<Polynomial> = b.relations().iter().map(|r| r.remap(nvars, &b_map)).collect();
    rels.extend(c.relations().iter().map(|r| r.remap(nvars, &c_map)));
    GradedAlgebraPresentation::new(&b.base, names, degrees, rels)
}

/// Same relation ideal on positionally matching generators (names are ignored).
pub fn presentation_equal(b: &GradedAlgebraPresentation, c: &GradedAlgebraPresentation) -> Result<bool> {
    b.base.check_same(&c.base)?;
    if b.degrees != c.degrees {
        return Err(Error::GeneratorMismatch(format!(
            "generator degrees {:?} and {:?}",
            b.degrees, c.degrees
        )));
    }
    Ok(b.gb.elements() == c.gb.elements())
}

/// `QQ`-dimensions of the pieces of degree `0..=d`, by counting standard monomials.
pub fn hilbert_function(b: &GradedAlgebraPresentation, d: u32) -> Result<Vec<usize>> {
    let base_std = b.base.standard_monomials().ok_or(Error::InfiniteDimensional)?;
    let leads = b.gb.leading_monomials();
    let mut out = Vec::with_capacity(d as usize + 1);
    for n in 0..=d {
        let mut count = 0;
        for g in b.degree_basis(n) {
            for s in &base_std {
                let mut e = s.exponents().to_vec();
                e.extend_from_slice(g.exponents());
                let m = Monomial::new(e);
                if !leads.iter().any(|l| l.divides(&m)) {
                    count += 1;
                }
            }
        }
        out.push(count);
    }
    Ok(out)
}
