//! Command results and their text and JSON forms.

use serde::Serialize;

use reeskit::gamma_rees::TheoremAReport;
use reeskit::poly::Monomial;
use reeskit::{FreeModuleVector, GradedAlgebraPresentation, Matrix, PresentedRing};

use crate::script::Position;

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const VERIFICATION_FAILED: i32 = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// Ran, but a verification returned false.
    Failed,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationData {
    pub base: String,
    pub generators: Vec<String>,
    pub degrees: Vec<u32>,
    pub relations: Vec<String>,
    pub text: String,
}

impl PresentationData {
    pub fn of(b: &GradedAlgebraPresentation) -> Self {
        PresentationData {
            base: b.base().label().to_string(),
            generators: b.generators().to_vec(),
            degrees: b.degrees().to_vec(),
            relations: b.relations().iter().map(|r| b.render_polynomial(r)).collect(),
            text: b.render(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerData {
    pub order: String,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualData {
    pub count: usize,
    /// Rows indexed by generators of the module, columns by functionals.
    pub generators: Vec<Vec<String>>,
    pub relations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VersalData {
    pub matrix: Vec<Vec<String>>,
    pub is_versal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelData {
    pub degree: u32,
    pub kernel: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReesData {
    pub method: String,
    pub presentation: Option<PresentationData>,
    pub degrees: Option<Vec<KernelData>>,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaDegreeData {
    pub degree: u32,
    pub basis: Vec<String>,
    pub relations: Vec<String>,
    pub dual_generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaData {
    pub degrees: Vec<GammaDegreeData>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertData {
    pub bound: u32,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictData {
    pub degree: u32,
    pub versal_generators: usize,
    pub gamma_generators: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremData {
    pub bound: u32,
    pub holds: bool,
    pub degrees: Vec<VerdictData>,
}

impl TheoremData {
    pub fn of(r: &TheoremAReport) -> Self {
        TheoremData {
            bound: r.bound,
            holds: r.holds(),
            degrees: r
                .degrees
                .iter()
                .map(|v| VerdictData {
                    degree: v.degree,
                    versal_generators: v.versal_generators,
                    gamma_generators: v.gamma_generators,
                    agree: v.agree,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EqualData {
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Data {
    Groebner(GroebnerData),
    Dual(DualData),
    Versal(VersalData),
    Presentation(PresentationData),
    Rees(ReesData),
    Gamma(GammaData),
    Hilbert(HilbertData),
    Theorem(TheoremData),
    Equal(EqualData),
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub line: usize,
    pub col: usize,
    pub command: String,
    pub args: Vec<String>,
    pub status: Status,
    pub text: String,
    pub data: Option<Data>,
    pub error: Option<String>,
}

impl CommandResult {
    pub fn new(
        pos: Position,
        command: &str,
        args: &[String],
        outcome: Result<(String, Data, Option<bool>), String>,
    ) -> Self {
        let (status, text, data, error) = match outcome {
            Ok((text, data, verified)) => {
                let status = if verified == Some(false) { Status::Failed } else { Status::Ok };
                (status, text, Some(data), None)
            }
            Err(e) => (Status::Error, format!("error in {}: {}", command, e), None, Some(e)),
        };
        CommandResult {
            line: pos.line,
            col: pos.col,
            command: command.to_string(),
            args: args.to_vec(),
            status,
            text,
            data,
            error,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub status: Status,
    pub exit_code: i32,
    pub results: Vec<CommandResult>,
}

impl Report {
    pub fn new(results: Vec<CommandResult>) -> Self {
        let status = if results.iter().any(|r| r.status == Status::Error) {
            Status::Error
        } else if results.iter().any(|r| r.status == Status::Failed) {
            Status::Failed
        } else {
            Status::Ok
        };
        let exit_code = match status {
            Status::Ok => exit::OK,
            Status::Failed => exit::VERIFICATION_FAILED,
            Status::Error => exit::DOMAIN,
        };
        Report {
            version: SCHEMA_VERSION,
            status,
            exit_code,
            results,
        }
    }

    /// Successful results on stdout, one block per command.
    pub fn stdout_text(&self) -> String {
        let mut out = String::new();
        for r in self.results.iter().filter(|r| r.status != Status::Error) {
            out.push_str(&r.text);
            out.push('\n');
        }
        out
    }

    /// Diagnostics for failed commands, `line:col`-prefixed.
    pub fn diagnostics(&self) -> Vec<String> {
        self.results
            .iter()
            .filter_map(|r| r.error.as_ref().map(|e| format!("{}:{}: error in {}: {}", r.line, r.col, r.command, e)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn render_vector(ring: &PresentedRing, v: &FreeModuleVector) -> Vec<String> {
    v.entries.iter().map(|p| ring.render(p)).collect()
}

pub fn render_matrix(ring: &PresentedRing, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| render_vector(ring, &m.row(i))).collect()
}

pub fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(", ")
    }
}

/// `e1^[2]*e2` for the divided power `γ²(e1)γ¹(e2)`.
pub fn render_divided_power(m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("e{}", i + 1) } else { format!("e{}^[{}]", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `Σ c_k · basis_k` with the coefficients rendered in the ring.
pub fn render_gamma(ring: &PresentedRing, basis: &[String], v: &FreeModuleVector) -> String {
    let terms: Vec<String> = v
        .entries
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, b)| {
            let c = ring.render(c);
            if c == "1" {
                b.clone()
            } else if c.contains(' ') {
                format!("({})*{}", c, b)
            } else {
                format!("{}*{}", c, b)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
