//! Executes a parsed script against the library.

use std::collections::HashMap;

use reeskit::divided_powers::{gamma_dual_degree, gamma_module_degree};
use reeskit::gamma_rees::rees_via_gamma;
use reeskit::groebner::SubmoduleBasis;
use reeskit::poly::{Monomial, MonomialOrder, Polynomial};
use reeskit::presented::{direct_sum, dual, is_versal, versal_map};
use reeskit::sym_rees::{
    hilbert_function, presentation_equal, rees_of_ideal, rees_of_map, rees_via_versal,
    sym_presentation, sym_presentation_named, tensor_presentation,
};
use reeskit::{
    verify_theorem_a, FreeModuleVector, GradedAlgebraPresentation, Matrix, ModuleMap, PresentedModule,
    PresentedRing,
};

use crate::output::*;
use crate::script::{AlgebraDef, Command, CommandKind, Method, ModuleDef, SessionScript, Statement};

#[derive(Clone, Debug)]
pub struct Settings {
    pub max_degree: u32,
    pub order: MonomialOrder,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_degree: 4,
            order: MonomialOrder::Grevlex,
        }
    }
}

#[derive(Default)]
struct Session {
    active: Option<PresentedRing>,
    ideals: HashMap<String, (PresentedRing, Vec<Polynomial>)>,
    modules: HashMap<String, PresentedModule>,
    maps: HashMap<String, ModuleMap>,
    algebras: HashMap<String, GradedAlgebraPresentation>,
}

type Step = Result<(String, Data, Option<bool>), String>;

fn domain(e: reeskit::Error) -> String {
    e.to_string()
}

/// Runs every statement in order. A failing declaration stops the run;
/// a failing command is reported and the run continues.
pub fn run(script: &SessionScript, settings: &Settings) -> Report {
    let mut session = Session::default();
    let mut results = Vec::new();
    for (statement, pos) in script.statements.iter().zip(&script.positions) {
        match statement {
            Statement::Command(c) => {
                let outcome = session.command(c, settings);
                results.push(CommandResult::new(*pos, c.kind.keyword(), &c.args, outcome));
            }
            declaration => {
                if let Err(e) = session.declare(declaration, settings) {
                    let (keyword, name) = declaration_header(declaration);
                    results.push(CommandResult::new(*pos, keyword, &[name], Err(e)));
                    break;
                }
            }
        }
    }
    Report::new(results)
}

fn declaration_header(s: &Statement) -> (&'static str, String) {
    match s {
        Statement::Ring { name, .. } => ("ring", name.clone()),
        Statement::Ideal { name, .. } => ("ideal", name.clone()),
        Statement::Module { name, .. } => ("module", name.clone()),
        Statement::Map { name, .. } => ("map", name.clone()),
        Statement::Algebra { name, .. } => ("algebra", name.clone()),
        Statement::Command(c) => ("command", c.kind.keyword().to_string()),
    }
}

fn matrix_of(ring: &PresentedRing, rows: &[Vec<Polynomial>]) -> Result<Matrix, String> {
    for p in rows.iter().flatten() {
        if p.nvars() != ring.nvars() {
            return Err(format!(
                "matrix is written over {} variables but the ring has {}",
                p.nvars(),
                ring.nvars()
            ));
        }
    }
    Matrix::from_rows(ring.nvars(), rows.to_vec()).map_err(domain)
}

impl Session {
    fn ring(&self) -> Result<&PresentedRing, String> {
        self.active.as_ref().ok_or_else(|| "no ring declared".to_string())
    }

    fn module(&self, name: &str) -> Result<&PresentedModule, String> {
        self.modules.get(name).ok_or_else(|| format!("module '{}' is not available", name))
    }

    fn algebra(&self, name: &str) -> Result<&GradedAlgebraPresentation, String> {
        self.algebras.get(name).ok_or_else(|| format!("algebra '{}' is not available", name))
    }

    fn ideal(&self, name: &str) -> Result<&(PresentedRing, Vec<Polynomial>), String> {
        self.ideals.get(name).ok_or_else(|| format!("ideal '{}' is not available", name))
    }

    fn declare(&mut self, s: &Statement, settings: &Settings) -> Result<(), String> {
        match s {
            Statement::Ring {
                name,
                variables,
                relations,
            } => {
                let ring = PresentedRing::with_order(variables.clone(), relations.clone(), settings.order.clone())
                    .map_err(domain)?
                    .with_label(name);
                self.active = Some(ring);
            }
            Statement::Ideal { name, generators } => {
                let ring = self.ring()?.clone();
                self.ideals.insert(name.clone(), (ring, generators.clone()));
            }
            Statement::Module { name, definition } => {
                let m = match definition {
                    ModuleDef::Coker(rows) => {
                        let ring = self.ring()?;
                        PresentedModule::cokernel(ring, &matrix_of(ring, rows)?).map_err(domain)?
                    }
                    ModuleDef::Free(n) => PresentedModule::free(self.ring()?, *n),
                    ModuleDef::Ideal(i) => {
                        let (ring, gens) = self.ideal(i)?;
                        PresentedModule::from_ideal(ring, gens).map_err(domain)?
                    }
                    ModuleDef::DirectSum(parts) => {
                        let mut acc = self.module(&parts[0])?.clone();
                        for p in &parts[1..] {
                            acc = direct_sum(&acc, self.module(p)?).map_err(domain)?;
                        }
                        acc
                    }
                    ModuleDef::Dual(m) => dual(self.module(m)?).module,
                };
                self.modules.insert(name.clone(), m);
            }
            Statement::Map {
                name,
                source,
                target,
                matrix,
            } => {
                let src = self.module(source)?;
                let tgt = self.module(target)?;
                let f = ModuleMap::new(src, tgt, matrix_of(src.ring(), matrix)?).map_err(domain)?;
                self.maps.insert(name.clone(), f);
            }
            Statement::Algebra { name, definition } => {
                let b = match definition {
                    AlgebraDef::Sym(m) => sym_presentation(self.module(m)?),
                    AlgebraDef::Rees(m) => match self.maps.get(m) {
                        Some(f) => rees_of_map(f).map_err(domain)?,
                        None => rees_via_versal(self.module(m)?).map_err(domain)?,
                    },
                    AlgebraDef::ReesIdeal(i) => {
                        let (ring, gens) = self.ideal(i)?;
                        rees_of_ideal(ring, gens).map_err(domain)?
                    }
                    AlgebraDef::Tensor(b, c) => {
                        tensor_presentation(self.algebra(b)?, self.algebra(c)?).map_err(domain)?
                    }
                };
                self.algebras.insert(name.clone(), b);
            }
            Statement::Command(_) => unreachable!("commands are not declarations"),
        }
        Ok(())
    }

    fn command(&self, c: &Command, settings: &Settings) -> Step {
        let d = c.max_degree.unwrap_or(settings.max_degree);
        let arg = |k: usize| c.args[k].as_str();
        match c.kind {
            CommandKind::Groebner => self.groebner(arg(0)),
            CommandKind::Dual => self.dual(arg(0)),
            CommandKind::Versal => self.versal(arg(0)),
            CommandKind::Sym => {
                let b = sym_presentation(self.module(arg(0))?);
                let text = format!("Sym({}) = {}", arg(0), b.render());
                Ok((text, Data::Presentation(PresentationData::of(&b)), None))
            }
            CommandKind::Rees => self.rees(arg(0), c.method.unwrap_or(Method::Versal), d),
            CommandKind::ReesIdeal => {
                let (ring, gens) = self.ideal(arg(0))?;
                let b = rees_of_ideal(ring, gens).map_err(domain)?;
                let text = format!("R({}) = {}", arg(0), b.render());
                Ok((text, Data::Presentation(PresentationData::of(&b)), None))
            }
            CommandKind::Gamma => self.gamma(arg(0), d),
            CommandKind::Hilbert => {
                let (label, b) = match self.algebras.get(arg(0)) {
                    Some(b) => (arg(0).to_string(), b.clone()),
                    None => (format!("R({})", arg(0)), rees_via_versal(self.module(arg(0))?).map_err(domain)?),
                };
                let values = hilbert_function(&b, d).map_err(domain)?;
                let text = format!(
                    "H({}) = [{}]",
                    label,
                    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
                );
                Ok((text, Data::Hilbert(HilbertData { bound: d, values }), None))
            }
            CommandKind::VerifyTheoremA => {
                let report = verify_theorem_a(self.module(arg(0))?, d).map_err(domain)?;
                let data = TheoremData::of(&report);
                let mut text = format!("verify-theorem-a {} up to degree {}", arg(0), d);
                for v in &data.degrees {
                    text.push_str(&format!(
                        "\n  degree {}: {} (versal {}, gamma {} generators)",
                        v.degree,
                        if v.agree { "ok" } else { "differs" },
                        v.versal_generators,
                        v.gamma_generators
                    ));
                }
                text.push_str(&format!("\nholds up to degree {}: {}", d, data.holds));
                let holds = data.holds;
                Ok((text, Data::Theorem(data), Some(holds)))
            }
            CommandKind::Tensor => {
                let b = tensor_presentation(self.algebra(arg(0))?, self.algebra(arg(1))?).map_err(domain)?;
                let text = format!("{} (x) {} = {}", arg(0), arg(1), b.render());
                Ok((text, Data::Presentation(PresentationData::of(&b)), None))
            }
            CommandKind::Equal => {
                let equal = presentation_equal(self.algebra(arg(0))?, self.algebra(arg(1))?).map_err(domain)?;
                let text = format!("{} == {}: {}", arg(0), arg(1), equal);
                Ok((text, Data::Equal(EqualData { equal }), None))
            }
        }
    }

    fn groebner(&self, name: &str) -> Step {
        let (ring, gens) = self.ideal(name)?;
        let mut all = gens.clone();
        all.extend(ring.defining_ideal().generators().iter().cloned());
        let ideal = reeskit::Ideal::new(ring.nvars(), all).map_err(domain)?;
        let gb = ideal.groebner(ring.order());
        let basis: Vec<String> = gb.elements().iter().map(|p| ring.render(p)).collect();
        let text = format!("GB({}) = ({})", name, basis.join(", "));
        Ok((
            text,
            Data::Groebner(GroebnerData {
                order: ring.order().name(),
                basis,
            }),
            None,
        ))
    }

    fn dual(&self, name: &str) -> Step {
        let m = self.module(name)?;
        let ring = m.ring();
        let d = dual(m);
        let data = DualData {
            count: d.count(),
            generators: render_matrix(ring, &d.generators),
            relations: d.module.relations().iter().map(|v| render_vector(ring, v)).collect(),
        };
        let mut text = format!("{}* has {} generator(s)", name, data.count);
        if data.count > 0 {
            text.push_str("\n  generator matrix (each column is a functional):");
            for row in &data.generators {
                text.push_str(&format!("\n    [{}]", row.join(", ")));
            }
        }
        let relations: Vec<String> = data.relations.iter().map(|r| format!("[{}]", r.join(", "))).collect();
        text.push_str(&format!("\n  relations: {}", list_or_none(&relations)));
        Ok((text, Data::Dual(data), None))
    }

    fn versal(&self, name: &str) -> Step {
        let phi = match self.maps.get(name) {
            Some(f) => f.clone(),
            None => versal_map(self.module(name)?).map_err(domain)?,
        };
        let ring = phi.source().ring();
        let versal = is_versal(&phi).map_err(domain)?;
        let matrix = render_matrix(ring, phi.matrix());
        let mut text = format!("versal {} -> {}^{}", name, ring.label(), phi.target().rank());
        text.push_str("\n  matrix:");
        if matrix.len() == 1 {
            text.push_str(&format!(" [{}]", matrix[0].join(", ")));
        } else {
            for row in &matrix {
                text.push_str(&format!("\n    [{}]", row.join(", ")));
            }
        }
        text.push_str(&format!("\n  is_versal: {}", versal));
        Ok((text, Data::Versal(VersalData { matrix, is_versal: versal }), None))
    }

    fn rees(&self, name: &str, method: Method, d: u32) -> Step {
        if let Some(f) = self.maps.get(name) {
            if method != Method::Versal {
                return Err("the divided-power route needs a module, not a map".into());
            }
            let b = rees_of_map(f).map_err(domain)?;
            let text = format!("R({}) = {}", name, b.render());
            let data = ReesData {
                method: method.keyword().into(),
                presentation: Some(PresentationData::of(&b)),
                degrees: None,
                agree: None,
            };
            return Ok((text, Data::Rees(data), None));
        }
        let m = self.module(name)?;
        let mut lines = Vec::new();
        let mut data = ReesData {
            method: method.keyword().into(),
            presentation: None,
            degrees: None,
            agree: None,
        };
        if method != Method::Gamma {
            let b = rees_via_versal(m).map_err(domain)?;
            lines.push(format!("R({}) = {}", name, b.render()));
            data.presentation = Some(PresentationData::of(&b));
        }
        if method != Method::Versal {
            let sym = sym_presentation_named(m, 'U');
            let kernels = rees_via_gamma(m, d).map_err(domain)?;
            lines.push(format!("R({}) via divided powers, degrees 1..{}", name, d));
            let mut degrees = Vec::new();
            for k in kernels {
                let basis = SubmoduleBasis::new(k.basis.len(), &k.generators, m.ring().gb()).map_err(domain)?;
                let kernel: Vec<String> = basis
                    .generators()
                    .iter()
                    .map(|v| sym_polynomial(&sym, &k.basis, v))
                    .filter(|p| !p.is_zero())
                    .map(|p| sym.render_polynomial(&p))
                    .collect();
                lines.push(format!("  degree {}: {}", k.degree, list_or_none(&kernel)));
                degrees.push(KernelData {
                    degree: k.degree,
                    kernel,
                });
            }
            data.degrees = Some(degrees);
        }
        let mut verified = None;
        if method == Method::Both {
            let holds = verify_theorem_a(m, d).map_err(domain)?.holds();
            lines.push(format!("routes agree up to degree {}: {}", d, holds));
            data.agree = Some(holds);
            verified = Some(holds);
        }
        Ok((lines.join("\n"), Data::Rees(data), verified))
    }

    fn gamma(&self, name: &str, d: u32) -> Step {
        let m = self.module(name)?;
        let ring = m.ring();
        let mut degrees = Vec::new();
        let mut text = format!("Gamma({}) up to degree {}", name, d);
        for n in 1..=d {
            let g = gamma_module_degree(m, n);
            let gd = gamma_dual_degree(m, n);
            let basis: Vec<String> = g.basis.iter().map(render_divided_power).collect();
            let relations: Vec<String> = g
                .module
                .relations()
                .iter()
                .map(|v| render_gamma(ring, &basis, v))
                .collect();
            let dual_generators: Vec<String> = gd
                .functionals()
                .iter()
                .map(|v| format!("[{}]", render_vector(ring, v).join(", ")))
                .collect();
            text.push_str(&format!(
                "\n  degree {}: basis {}; relations {}; dual generators {}",
                n,
                list_or_none(&basis),
                list_or_none(&relations),
                list_or_none(&dual_generators)
            ));
            degrees.push(GammaDegreeData {
                degree: n,
                basis,
                relations,
                dual_generators,
            });
        }
        Ok((text, Data::Gamma(GammaData { degrees }), None))
    }
}

/// `Σ v_k · basis_k` in the joined variables of `sym`.
fn sym_polynomial(sym: &GradedAlgebraPresentation, basis: &[Monomial], v: &FreeModuleVector) -> Polynomial {
    let mut out = Polynomial::zero(sym.nvars());
    for (c, m) in v.entries.iter().zip(basis) {
        let c = sym.lift_base(c);
        out = &out + &(&c * &sym.monomial(m));
    }
    out
}
