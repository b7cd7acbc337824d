//! Worked examples checked against brute-force linear algebra over QQ.

mod common;

use common::*;
use num_traits::One;
use reeskit::corpus::{residue_field, truncated_ring};
use reeskit::divided_powers::{
    bullet, comultiplication, dp_basis, gamma_dual_degree, gamma_module_degree, DualFunctional,
};
use reeskit::gamma_rees::rees_via_gamma;
use reeskit::groebner::{buchberger, eliminate, eliminate_variables, syzygies, Ideal};
use reeskit::poly::{monomials_of_degree, parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational};
use reeskit::presented::{direct_sum, dual};
use reeskit::sym_rees::{
    algebra_map_kernel, hilbert_function, rees_of_ideal, rees_via_versal, sym_map, sym_presentation,
    GradedAlgebraPresentation,
};
use reeskit::{FreeModuleVector, Matrix, PresentedModule, PresentedRing};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn p(text: &str, vars: &[&str]) -> Polynomial {
    parse_polynomial(text, &names(vars)).unwrap()
}

// ---- Gröbner bases and elimination ----

#[test]
fn twisted_cubic_relation_is_in_the_ideal() {
    let vars = ["x", "y", "z"];
    let gens = vec![p("x^2 - y", &vars), p("x^3 - z", &vars)];
    let gb = buchberger(&Ideal::new(3, gens.clone()).unwrap(), &MonomialOrder::Lex);
    let target = p("y^3 - z^2", &vars);
    assert!(gb.elements().iter().any(|g| g == &target || g == &-&target));
    // every basis element is a QQ-combination of multiples of the generators
    let oracle = span_of_multiples(&gens, &monomials_up_to(3, 6), |q| q.clone());
    for g in gb.elements() {
        assert!(oracle.contains(&poly_vector(g)), "{:?}", g);
    }
    for g in &gens {
        assert!(gb.contains(g));
    }
}

#[test]
fn single_division_step() {
    let vars = ["x", "y"];
    let gb = buchberger(&Ideal::new(2, vec![p("x^2 - y", &vars)]).unwrap(), &MonomialOrder::Grevlex);
    assert_eq!(gb.normal_form(&p("x^2", &vars)), p("y", &vars));
}

/// `I_{<=d} ∩ QQ[kept]` from the multiples of the generators.
fn truncated_elimination(gens: &[Polynomial], eliminated: &[usize], d: u32) -> Span<Monomial> {
    let nvars = gens[0].nvars();
    let mults = monomials_up_to(nvars, d);
    // order keys so monomials involving an eliminated variable come first
    let mut s: Span<(u8, Monomial)> = Span::new();
    for g in gens {
        for m in &mults {
            let v = poly_vector(&(&monomial_poly(m) * g));
            if !total_degree_at_most(&v, d) {
                continue;
            }
            let tagged = v
                .into_iter()
                .map(|(mo, c)| {
                    let hit = eliminated.iter().any(|&i| mo.exponents()[i] > 0);
                    ((if hit { 0 } else { 1 }, mo), c)
                })
                .collect();
            s.insert(tagged);
        }
    }
    Span::from_vectors(
        s.rows()
            .filter(|r| r.keys().next().unwrap().0 == 1)
            .map(|r| r.iter().map(|((_, m), c)| (m.clone(), c.clone())).collect()),
    )
}

#[test]
fn elimination_of_parameter_gives_koszul_relation() {
    let vars = ["x", "y", "t", "S", "T"];
    let gens = vec![p("S - x*t", &vars), p("T - y*t", &vars)];
    let out = eliminate_variables(&Ideal::new(5, gens.clone()).unwrap(), &[2]);
    let expected = p("x*T - y*S", &vars);
    assert_eq!(out.generators().len(), 1);
    let g = &out.generators()[0];
    assert!(g == &expected || g == &-&expected);
    // products of degree <= d see the multiples of the relation of degree < d
    let principal = |d: u32| {
        let kept: Vec<Monomial> = monomials_up_to(5, d - 2)
            .into_iter()
            .filter(|m| m.exponents()[2] == 0)
            .collect();
        span_of_multiples(std::slice::from_ref(&expected), &kept, |q| q.clone())
    };
    for d in 3..=4 {
        let oracle = truncated_elimination(&gens, &[2], d);
        assert!(oracle.contains(&poly_vector(&expected)));
        assert!(principal(d).contains_span(&oracle), "degree {}", d);
        assert!(oracle.contains_span(&principal(d - 1)), "degree {}", d);
    }
}

#[test]
fn elimination_without_relation_is_zero() {
    let vars = ["t", "x", "y"];
    let gens = vec![p("t*x - y", &vars)];
    let out = eliminate(&Ideal::new(3, gens.clone()).unwrap(), 1);
    assert!(out.generators().is_empty());
    for d in 1..=4 {
        assert_eq!(truncated_elimination(&gens, &[0], d).rank(), 0);
    }
}

// ---- syzygies ----

type Key = (usize, Monomial);

fn module_vector(v: &FreeModuleVector) -> Vector<Key> {
    let mut out = Vector::new();
    for (i, e) in v.entries.iter().enumerate() {
        for (m, c) in e.terms() {
            out.insert((i, m.clone()), c.clone());
        }
    }
    out
}

#[test]
fn koszul_syzygy_is_complete_in_low_degree() {
    let vars = ["x", "y"];
    let row = Matrix::from_rows(2, vec![vec![p("x", &vars), p("y", &vars)]]).unwrap();
    let syz = syzygies(&row, &reeskit::GroebnerBasis::zero(2, MonomialOrder::Grevlex));
    let gens = syz.generators();
    assert_eq!(gens.len(), 1);
    for g in &gens {
        assert!(row.apply(g).unwrap().is_zero());
    }
    for e in 0..=3u32 {
        let basis: Vec<Key> = (0..2)
            .flat_map(|i| monomials_up_to(2, e).into_iter().map(move |m| (i, m)))
            .collect();
        let ker = kernel(&basis, |(i, m)| poly_vector(&(&monomial_poly(m) * row.get(0, *i))));
        let mut from_gens = Span::new();
        for g in &gens {
            for m in monomials_up_to(2, e.saturating_sub(1)) {
                let v = module_vector(&g.scale(&monomial_poly(&m)));
                if v.keys().all(|(_, mo)| mo.degree() <= e) {
                    from_gens.insert(v);
                }
            }
        }
        assert!(from_gens.same_as(&ker), "degree {}", e);
    }
}

#[test]
fn annihilator_in_truncated_ring() {
    let a = truncated_ring();
    let oracle_ring = MonomialQuotient::new(1, vec![vec![2]]);
    let basis = oracle_ring.basis_up_to(1);
    let x = a.variable(0);
    let ker = kernel(&basis, |m| poly_vector(&oracle_ring.reduce(&(&monomial_poly(m) * &x))));
    let syz = syzygies(&Matrix::from_rows(1, vec![vec![x.clone()]]).unwrap(), a.gb());
    let computed = span_of_multiples(
        &syz.generators().iter().map(|g| g.entries[0].clone()).collect::<Vec<_>>(),
        &basis,
        |q| oracle_ring.reduce(q),
    );
    assert_eq!(ker.rank(), 1);
    assert!(computed.same_as(&ker));
    assert!(syzygies(&Matrix::identity(3, 1), a.gb()).generators().is_empty());
}

// ---- duals ----

#[test]
fn dual_of_residue_field_matches_annihilator() {
    let a = truncated_ring();
    let oracle_ring = MonomialQuotient::new(1, vec![vec![2]]);
    let d = dual(&residue_field());
    let basis = oracle_ring.basis_up_to(1);
    let x = a.variable(0);
    let ker = kernel(&basis, |m| poly_vector(&oracle_ring.reduce(&(&monomial_poly(m) * &x))));
    let functionals: Vec<Polynomial> = d.functionals().iter().map(|f| f.entries[0].clone()).collect();
    assert!(span_of_multiples(&functionals, &basis, |q| oracle_ring.reduce(q)).same_as(&ker));
    assert_eq!(d.module.rational_dimension(), Ok(ker.rank()));
}

#[test]
fn dual_of_torsion_module_over_domain_is_zero() {
    let qx = PresentedRing::polynomial_ring(&["x"]);
    let m = PresentedModule::cokernel(&qx, &Matrix::from_rows(1, vec![vec![qx.variable(0)]]).unwrap()).unwrap();
    for d in 0..=3 {
        let basis = monomials_up_to(1, d);
        let ker = kernel(&basis, |mo| poly_vector(&(&monomial_poly(mo) * &qx.variable(0))));
        assert_eq!(ker.rank(), 0);
    }
    assert_eq!(dual(&m).count(), 0);
}

// ---- symmetric and Rees algebras ----

/// Brute-force kernel of `A[T]_n -> A[S]_n`, `T_j ↦ images[j]`, over a
/// monomial quotient, as vectors over the source's joined monomials.
fn algebra_kernel_piece(
    base: &MonomialQuotient,
    base_basis: &[Monomial],
    ngens: usize,
    images: &[Polynomial],
    n: u32,
) -> Span<Monomial> {
    let domain: Vec<Monomial> = base_basis
        .iter()
        .flat_map(|b| monomials_of_degree(&vec![1; ngens], n).into_iter().map(move |g| joined(b, &g)))
        .collect();
    let target_nvars = images.first().map(Polynomial::nvars).unwrap_or(base.nvars);
    kernel(&domain, |mono| {
        let mut subs: Vec<Polynomial> = (0..base.nvars).map(|i| Polynomial::variable(target_nvars, i)).collect();
        subs.extend(images.iter().cloned());
        poly_vector(&base.reduce(&monomial_poly(mono).substitute(target_nvars, &subs)))
    })
}

/// Span of `b · m · r` inside the degree-`n` piece, for homogeneous relations.
fn relation_piece(
    base: &MonomialQuotient,
    base_basis: &[Monomial],
    pres: &GradedAlgebraPresentation,
    relations: &[Polynomial],
    n: u32,
) -> Span<Monomial> {
    let k = base.nvars;
    let q = pres.ngens();
    let base_deg = |r: &Polynomial| -> Option<u32> {
        let ds: Vec<u32> = r.terms().map(|(m, _)| m.exponents()[..k].iter().sum()).collect();
        ds.first().copied().filter(|d| ds.iter().all(|e| e == d))
    };
    let target_base: Vec<u32> = base_basis.iter().map(Monomial::degree).collect();
    let (lo, hi) = (*target_base.iter().min().unwrap(), *target_base.iter().max().unwrap());
    let mut s = Span::new();
    for r in relations {
        let Some(e) = pres.degree_of(r).filter(|&e| e <= n) else { continue };
        for g in monomials_of_degree(&vec![1; q], n - e) {
            for b in monomials_up_to(k, hi) {
                if let Some(rb) = base_deg(r) {
                    let total = rb + b.degree();
                    if total < lo || total > hi {
                        continue;
                    }
                }
                let v = base.reduce(&(&monomial_poly(&joined(&b, &g)) * r));
                let v = poly_vector(&v);
                if v.keys().all(|m| base_basis.contains(&Monomial::new(m.exponents()[..k].to_vec()))) {
                    s.insert(v);
                }
            }
        }
    }
    s
}

fn sym_targets(k: usize, ngens: usize, cols: &[Vec<&str>], vars: &[&str]) -> Vec<Polynomial> {
    assert_eq!(cols.len(), ngens);
    assert_eq!(vars.len(), k + cols[0].len());
    cols.iter()
        .map(|c| {
            let mut sum = Polynomial::zero(vars.len());
            for (i, coeff) in c.iter().enumerate() {
                let t = Polynomial::variable(vars.len(), k + i);
                sum = &sum + &(&p(coeff, vars) * &t);
            }
            sum
        })
        .collect()
}

#[test]
fn kernel_of_multiplication_by_x_on_sym() {
    let base = MonomialQuotient::new(1, vec![vec![2]]);
    let basis = base.basis_up_to(1);
    let m = residue_field();
    let f = sym_map(&reeskit::presented::versal_map(&m).unwrap()).unwrap();
    let kernel_ideal = algebra_map_kernel(&f);
    let pres = sym_presentation(&m);
    let images = sym_targets(1, 1, &[vec!["x"]], &["x", "S"]);
    for n in 1..=4 {
        let oracle = algebra_kernel_piece(&base, &basis, 1, &images, n);
        let computed = relation_piece(&base, &basis, &pres, kernel_ideal.generators(), n);
        assert!(computed.same_as(&oracle), "degree {}", n);
    }
    // and the expected answer (S^2) + (x*S)
    let expected = vec![p("x*S", &["x", "S"]), p("S^2", &["x", "S"])];
    for n in 1..=4 {
        let oracle = algebra_kernel_piece(&base, &basis, 1, &images, n);
        assert!(relation_piece(&base, &basis, &pres, &expected, n).same_as(&oracle));
    }
}

#[test]
fn kernel_on_sum_of_residue_fields() {
    let base = MonomialQuotient::new(1, vec![vec![2]]);
    let basis = base.basis_up_to(1);
    let k = residue_field();
    let mm = direct_sum(&k, &k).unwrap();
    let pres = sym_presentation(&mm);
    let vars = ["x", "S", "T"];
    let images = sym_targets(1, 2, &[vec!["x", "0"], vec!["0", "x"]], &vars);
    let expected: Vec<Polynomial> = ["x*S", "x*T", "S^2", "S*T", "T^2"].iter().map(|e| p(e, &vars)).collect();
    let f = sym_map(&reeskit::presented::versal_map(&mm).unwrap()).unwrap();
    let kernel_ideal = algebra_map_kernel(&f);
    for n in 1..=3 {
        let oracle = algebra_kernel_piece(&base, &basis, 2, &images, n);
        assert!(relation_piece(&base, &basis, &pres, &expected, n).same_as(&oracle), "degree {}", n);
        assert!(relation_piece(&base, &basis, &pres, kernel_ideal.generators(), n).same_as(&oracle));
    }
}

#[test]
fn hilbert_functions_match_brute_force() {
    let base = MonomialQuotient::new(1, vec![vec![2]]);
    let basis = base.basis_up_to(1);
    let k = residue_field();
    let cases: Vec<(PresentedModule, Vec<Polynomial>, usize, u32)> = vec![
        (k.clone(), sym_targets(1, 1, &[vec!["x"]], &["x", "S"]), 1, 3),
        (
            direct_sum(&k, &k).unwrap(),
            sym_targets(1, 2, &[vec!["x", "0"], vec!["0", "x"]], &["x", "S", "T"]),
            2,
            2,
        ),
    ];
    for (m, images, q, d) in cases {
        let r = rees_via_versal(&m).unwrap();
        let h = hilbert_function(&r, d).unwrap();
        for n in 0..=d {
            let ambient = basis.len() * monomials_of_degree(&vec![1; q], n).len();
            let oracle = ambient - algebra_kernel_piece(&base, &basis, q, &images, n).rank();
            assert_eq!(h[n as usize], oracle, "degree {}", n);
        }
    }
    assert_eq!(hilbert_function(&rees_via_versal(&k).unwrap(), 3), Ok(vec![2, 1, 0, 0]));
}

#[test]
fn rees_algebra_of_plane_ideals_in_low_bidegree() {
    let free = MonomialQuotient::new(2, vec![]);
    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["x", "y"], vec!["x*T - y*S"]),
        (vec!["x^2", "x*y"], vec!["y*S - x*T"]),
    ];
    let qxy = PresentedRing::polynomial_ring(&["x", "y"]);
    for (gens, expected) in cases {
        let gens_p: Vec<Polynomial> = gens.iter().map(|g| p(g, &["x", "y"])).collect();
        let r = rees_of_ideal(&qxy, &gens_p).unwrap();
        let images: Vec<Polynomial> = gens.iter().map(|g| p(&format!("({})*t", g), &["x", "y", "t"])).collect();
        let expected: Vec<Polynomial> = expected.iter().map(|e| p(e, &["x", "y", "S", "T"])).collect();
        for n in 1..=3 {
            for e in 0..=3 {
                let bb = free.basis_of_degree(e);
                let oracle = algebra_kernel_piece(&free, &bb, 2, &images, n);
                let computed = relation_piece(&free, &bb, &r, &r.relations(), n);
                let wanted = relation_piece(&free, &bb, &r, &expected, n);
                assert!(computed.same_as(&oracle), "bidegree ({}, {})", e, n);
                assert!(wanted.same_as(&oracle));
            }
        }
    }
}

#[test]
fn principal_ideal_of_nonzerodivisor_has_no_relations() {
    let qx = PresentedRing::polynomial_ring(&["x"]);
    let r = rees_of_ideal(&qx, &[qx.variable(0)]).unwrap();
    assert!(r.relations().is_empty());
    let free = MonomialQuotient::new(1, vec![]);
    let image = p("x*t", &["x", "t"]);
    for n in 1..=3 {
        for e in 0..=3 {
            assert_eq!(algebra_kernel_piece(&free, &free.basis_of_degree(e), 1, std::slice::from_ref(&image), n).rank(), 0);
        }
    }
}

// ---- divided powers ----

#[test]
fn dp_basis_counts_by_enumeration() {
    for q in 0..=4usize {
        for n in 0..=6u32 {
            // count vectors in [0, n]^q summing to n
            let mut count = 0;
            let total = (n as usize + 1).pow(q as u32);
            for code in 0..total {
                let mut c = code;
                let mut s = 0;
                for _ in 0..q {
                    s += c % (n as usize + 1);
                    c /= n as usize + 1;
                }
                if s == n as usize {
                    count += 1;
                }
            }
            assert_eq!(dp_basis(q, n).len(), count, "q={} n={}", q, n);
        }
    }
}

fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// `Δ` read off from `x^m/m! ↦ (y + z)^m / m!` and `γ^a ⊗ γ^b ↔ y^a z^b / (a! b!)`.
fn delta_by_polynomial_model(q: usize, n: u32, i: u32, j: u32) -> Vec<Vec<Rational>> {
    let bn = dp_basis(q, n);
    let bi = dp_basis(q, i);
    let bj = dp_basis(q, j);
    let nv = 2 * q;
    let mut out = vec![vec![Rational::from_integer(0.into()); bn.len()]; bi.len() * bj.len()];
    for (col, m) in bn.iter().enumerate() {
        let mut prod = Polynomial::one(nv);
        let mut denom = Rational::one();
        for (k, &e) in m.exponents().iter().enumerate() {
            let s = &Polynomial::variable(nv, k) + &Polynomial::variable(nv, q + k);
            prod = &prod * &s.pow(e);
            denom *= factorial(e);
        }
        for (ra, a) in bi.iter().enumerate() {
            for (rb, b) in bj.iter().enumerate() {
                let mut e = a.exponents().to_vec();
                e.extend_from_slice(b.exponents());
                let mut w = prod.coefficient(&Monomial::new(e)) / &denom;
                for &x in a.exponents().iter().chain(b.exponents()) {
                    w *= factorial(x);
                }
                out[ra * bj.len() + rb][col] = w;
            }
        }
    }
    out
}

#[test]
fn comultiplication_matches_polynomial_model() {
    for q in 0..=3 {
        for n in 0..=4 {
            for i in 0..=n {
                let d = comultiplication(q, n, i, n - i).unwrap();
                let model = delta_by_polynomial_model(q, n, i, n - i);
                for (r, row) in model.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        assert_eq!(Rational::from_integer(d.get(r, c).into()), *v);
                    }
                }
            }
        }
    }
}

#[test]
fn mixed_bullet_product() {
    let q = PresentedRing::polynomial_ring(&[]);
    let s1 = DualFunctional::dual_basis(&q, &Monomial::new(vec![1, 0]));
    let s2 = DualFunctional::dual_basis(&q, &Monomial::new(vec![0, 1]));
    assert_eq!(bullet(&s1, &s2).unwrap(), DualFunctional::dual_basis(&q, &Monomial::new(vec![1, 1])));
}

/// `QQ`-dimension of `coker` of a relation list over `QQ[x]/(x^2)` by linear algebra.
fn quotient_dimension(base: &MonomialQuotient, rank: usize, relations: &[FreeModuleVector]) -> usize {
    let basis = base.basis_up_to(1);
    let mut s: Span<Key> = Span::new();
    for r in relations {
        for b in &basis {
            let v = r.scale(&monomial_poly(b)).map_entries(|e| base.reduce(e));
            s.insert(module_vector(&v));
        }
    }
    rank * basis.len() - s.rank()
}

#[test]
fn divided_powers_of_residue_field_agree_with_symmetric_powers() {
    // over QQ, Γⁿ(M) ≅ Symⁿ(M); Symⁿ(A/x) has QQ-dimension 1
    let base = MonomialQuotient::new(1, vec![vec![2]]);
    let m = residue_field();
    for n in 1..=5 {
        let g = gamma_module_degree(&m, n);
        assert_eq!(quotient_dimension(&base, g.basis.len(), g.module.relations()), 1);
        assert_eq!(g.module.rational_dimension(), Ok(1));
    }
}

#[test]
fn dual_of_divided_powers_of_residue_field() {
    let base = MonomialQuotient::new(1, vec![vec![2]]);
    let basis = base.basis_up_to(1);
    let x = truncated_ring().variable(0);
    // Hom(A/x, A) = ann(x)
    let ann = kernel(&basis, |m| poly_vector(&base.reduce(&(&monomial_poly(m) * &x))));
    for n in 1..=5 {
        let d = gamma_dual_degree(&residue_field(), n);
        assert_eq!(d.module.rational_dimension(), Ok(ann.rank()));
    }
}

// ---- the divided-power route ----

#[test]
fn gamma_route_kernel_for_maximal_ideal_matches_brute_force() {
    let qxy = PresentedRing::polynomial_ring(&["x", "y"]);
    let i = PresentedModule::from_ideal(&qxy, &[qxy.variable(0), qxy.variable(1)]).unwrap();
    let ks = rees_via_gamma(&i, 2).unwrap();
    let k2 = &ks[1];
    let free = MonomialQuotient::new(2, vec![]);
    let images = vec![p("x*t", &["x", "y", "t"]), p("y*t", &["x", "y", "t"])];
    // kernel generators as polynomials in x, y, S, T
    let polys: Vec<Polynomial> = k2
        .generators
        .iter()
        .map(|v| {
            let mut out = Polynomial::zero(4);
            for (c, m) in v.entries.iter().zip(&k2.basis) {
                let mono = monomial_poly(&joined(&Monomial::one(2), m));
                out = &out + &(&c.extend_vars(2) * &mono);
            }
            out
        })
        .collect();
    let pres = GradedAlgebraPresentation::polynomial(&qxy, names(&["S", "T"]), vec![1, 1]).unwrap();
    for e in 0..=3 {
        let bb = free.basis_of_degree(e);
        let oracle = algebra_kernel_piece(&free, &bb, 2, &images, 2);
        assert!(relation_piece(&free, &bb, &pres, &polys, 2).same_as(&oracle), "base degree {}", e);
    }
}
