//! Small named examples used by the test suites and benchmarks.

use crate::groebner::Matrix;
use crate::poly::Polynomial;
use crate::presented::{direct_sum, ModuleMap, PresentedModule, PresentedRing};

/// `QQ[x] / (x^2)`.
pub fn truncated_ring() -> PresentedRing {
    PresentedRing::parse(&["x"], &["x^2"]).expect("valid ring")
}

/// `A / x` over `A = QQ[x] / (x^2)`.
pub fn residue_field() -> PresentedModule {
    let a = truncated_ring();
    coker_scalar(&a, a.variable(0))
}

fn coker_scalar(a: &PresentedRing, f: Polynomial) -> PresentedModule {
    PresentedModule::cokernel(a, &Matrix::from_rows(a.nvars(), vec![vec![f]]).expect("1x1"))
        .expect("valid module")
}

fn ideal_module(a: &PresentedRing, gens: &[&str]) -> PresentedModule {
    let gens: Vec<Polynomial> = gens
        .iter()
        .map(|g| a.parse_polynomial(g).expect("valid generator"))
        .collect();
    PresentedModule::from_ideal(a, &gens).expect("valid ideal")
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: &'static str,
    pub module: PresentedModule,
}

/// The core modules: `A`, `A^2`, `A/x`, `A/x ⊕ A/x` over `QQ[x]/(x^2)`, and the
/// ideals `(x, y) ⊂ QQ[x, y]` and `(x) ⊂ QQ[x]` as modules.
pub fn theorem_modules() -> Vec<NamedModule> {
    let a = truncated_ring();
    let k = residue_field();
    let qxy = PresentedRing::polynomial_ring(&["x", "y"]);
    let qx = PresentedRing::polynomial_ring(&["x"]);
    vec![
        NamedModule {
            name: "A^1",
            module: PresentedModule::free(&a, 1),
        },
        NamedModule {
            name: "A^2",
            module: PresentedModule::free(&a, 2),
        },
        NamedModule {
            name: "A/x",
            module: k.clone(),
        },
        NamedModule {
            name: "A/x + A/x",
            module: direct_sum(&k, &k).expect("same ring"),
        },
        NamedModule {
            name: "(x, y) in QQ[x, y]",
            module: ideal_module(&qxy, &["x", "y"]),
        },
        NamedModule {
            name: "(x) in QQ[x]",
            module: ideal_module(&qx, &["x"]),
        },
    ]
}

/// `theorem_modules` plus a few more with torsion, mixed summands and zero divisors.
pub fn modules() -> Vec<NamedModule> {
    let mut out = theorem_modules();
    let a = truncated_ring();
    let qx = PresentedRing::polynomial_ring(&["x"]);
    let node = PresentedRing::parse(&["x", "y"], &["x*y"]).expect("valid ring");
    out.push(NamedModule {
        name: "QQ[x]/x",
        module: coker_scalar(&qx, qx.variable(0)),
    });
    out.push(NamedModule {
        name: "A/x + A",
        module: direct_sum(&residue_field(), &PresentedModule::free(&a, 1)).expect("same ring"),
    });
    out.push(NamedModule {
        name: "(x) in QQ[x, y]/(xy)",
        module: ideal_module(&node, &["x"]),
    });
    out.push(NamedModule {
        name: "(x^2, x*y) in QQ[x, y]",
        module: ideal_module(&PresentedRing::polynomial_ring(&["x", "y"]), &["x^2", "x*y"]),
    });
    out
}

#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: &'static str,
    pub ring: PresentedRing,
    pub generators: Vec<Polynomial>,
}

pub fn ideals() -> Vec<NamedIdeal> {
    let qx = PresentedRing::polynomial_ring(&["x"]);
    let qxy = PresentedRing::polynomial_ring(&["x", "y"]);
    let node = PresentedRing::parse(&["x", "y"], &["x*y"]).expect("valid ring");
    let a = truncated_ring();
    let mk = |name, ring: &PresentedRing, gens: &[&str]| NamedIdeal {
        name,
        ring: ring.clone(),
        generators: gens
            .iter()
            .map(|g| ring.parse_polynomial(g).expect("valid generator"))
            .collect(),
    };
    vec![
        mk("(x) in QQ[x]", &qx, &["x"]),
        mk("(x, y) in QQ[x, y]", &qxy, &["x", "y"]),
        mk("(1) in QQ[x, y]", &qxy, &["1"]),
        mk("(x^2, x*y) in QQ[x, y]", &qxy, &["x^2", "x*y"]),
        mk("(x, y) in QQ[x, y]/(xy)", &node, &["x", "y"]),
        mk("(x) in QQ[x]/(x^2)", &a, &["x"]),
    ]
}

#[derive(Clone, Debug)]
pub struct NamedMap {
    pub name: &'static str,
    pub map: ModuleMap,
}

/// Surjections between presented modules.
pub fn surjections() -> Vec<NamedMap> {
    let a = truncated_ring();
    let k = residue_field();
    let kk = direct_sum(&k, &k).expect("same ring");
    let free1 = PresentedModule::free(&a, 1);
    let free2 = PresentedModule::free(&a, 2);
    let x = a.variable(0);
    let (one, zero) = (a.one(), a.zero());
    let m = |rows: Vec<Vec<Polynomial>>| Matrix::from_rows(1, rows).expect("rectangular");
    let mixed = direct_sum(&k, &free1).expect("same ring");
    vec![
        NamedMap {
            name: "A -> A/x",
            map: ModuleMap::new(&free1, &k, Matrix::identity(1, 1)).expect("well defined"),
        },
        NamedMap {
            name: "A^2 -> A/x + A/x",
            map: ModuleMap::new(&free2, &kk, Matrix::identity(2, 1)).expect("well defined"),
        },
        NamedMap {
            name: "A^2 -> A, (1, x)",
            map: ModuleMap::new(&free2, &free1, m(vec![vec![one.clone(), x.clone()]]))
                .expect("well defined"),
        },
        NamedMap {
            name: "A/x + A -> A/x",
            map: ModuleMap::new(&mixed, &k, m(vec![vec![one.clone(), zero.clone()]]))
                .expect("well defined"),
        },
        NamedMap {
            name: "A/x + A/x -> A/x",
            map: ModuleMap::new(&kk, &k, m(vec![vec![one.clone(), one]])).expect("well defined"),
        },
    ]
}

/// Pairs `(f, g)` with `g ∘ f` defined.
pub fn composable_pairs() -> Vec<(NamedMap, NamedMap)> {
    let s = surjections();
    let find = |n: &str| s.iter().find(|m| m.name == n).expect("named map").clone();
    let a = truncated_ring();
    let k = residue_field();
    let kk = direct_sum(&k, &k).expect("same ring");
    let x = a.variable(0);
    let diag = NamedMap {
        name: "A/x -> A/x + A/x, diagonal",
        map: ModuleMap::new(&k, &kk, Matrix::from_rows(1, vec![vec![a.one()], vec![a.one()]]).expect("2x1"))
            .expect("well defined"),
    };
    let times_x = NamedMap {
        name: "A -> A, x",
        map: ModuleMap::new(
            &PresentedModule::free(&a, 1),
            &PresentedModule::free(&a, 1),
            Matrix::from_rows(1, vec![vec![x]]).expect("1x1"),
        )
        .expect("well defined"),
    };
    vec![
        (find("A^2 -> A, (1, x)"), find("A -> A/x")),
        (find("A^2 -> A/x + A/x"), find("A/x + A/x -> A/x")),
        (diag.clone(), find("A/x + A/x -> A/x")),
        (find("A -> A/x"), diag),
        (times_x, find("A -> A/x")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjections_are_surjective() {
        for s in surjections() {
            assert!(s.map.is_surjective(), "{}", s.name);
        }
    }

    #[test]
    fn pairs_compose() {
        for (f, g) in composable_pairs() {
            assert!(f.map.then(&g.map).is_ok(), "{} then {}", f.name, g.name);
        }
    }
}
