//! Brute-force linear algebra over QQ, independent of the Gröbner engine.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use reeskit::poly::{monomials_of_degree, Monomial, Polynomial, Rational};

pub type Vector<K> = BTreeMap<K, Rational>;

/// Row-echelon span of sparse vectors; the pivot of a row is its smallest key.
#[derive(Clone, Debug)]
pub struct Span<K: Ord + Clone> {
    rows: BTreeMap<K, Vector<K>>,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors(vs: impl IntoIterator<Item = Vector<K>>) -> Self {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn reduce(&self, mut v: Vector<K>) -> Vector<K> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = v[&k].clone();
                for (key, val) in row {
                    let e = v.entry(key.clone()).or_insert_with(Rational::zero);
                    *e -= &c * val;
                    if e.is_zero() {
                        v.remove(key);
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: Vector<K>) -> bool {
        let v = self.reduce(v);
        let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        let row = v.into_iter().map(|(key, val)| (key, val * &inv)).collect();
        self.rows.insert(k, row);
        true
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vector<K>> {
        self.rows.values()
    }

    pub fn contains_span(&self, other: &Span<K>) -> bool {
        other.rows().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Span<K>) -> bool {
        self.rank() == other.rank() && self.contains_span(other)
    }
}

pub fn poly_vector(p: &Polynomial) -> Vector<Monomial> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// `QQ[x_1..x_k] / (monomials)`, reduced by dropping divisible terms.
#[derive(Clone, Debug)]
pub struct MonomialQuotient {
    pub nvars: usize,
    pub zero: Vec<Monomial>,
}

impl MonomialQuotient {
    pub fn new(nvars: usize, zero: Vec<Vec<u32>>) -> Self {
        MonomialQuotient {
            nvars,
            zero: zero.into_iter().map(Monomial::new).collect(),
        }
    }

    pub fn is_zero_monomial(&self, m: &Monomial) -> bool {
        let base = Monomial::new(m.exponents()[..self.nvars].to_vec());
        self.zero.iter().any(|z| z.divides(&base))
    }

    /// Drops every term whose base part lies in the monomial ideal (extra
    /// variables after the base ones are untouched).
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            p.nvars(),
            p.terms()
                .filter(|(m, _)| !self.is_zero_monomial(m))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Standard monomials of exact degree `d`.
    pub fn basis_of_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(&vec![1; self.nvars], d)
            .into_iter()
            .filter(|m| !self.is_zero_monomial(m))
            .collect()
    }

    /// All standard monomials of degree `<= d`.
    pub fn basis_up_to(&self, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|e| self.basis_of_degree(e)).collect()
    }
}

pub fn monomial_poly(m: &Monomial) -> Polynomial {
    Polynomial::term(m.clone(), Rational::one())
}

/// `base · gen` as a monomial in the joined variables.
pub fn joined(base: &Monomial, gens: &Monomial) -> Monomial {
    let mut e = base.exponents().to_vec();
    e.extend_from_slice(gens.exponents());
    Monomial::new(e)
}

/// Kernel of the QQ-linear map `b ↦ image(b)` on the given basis, as vectors
/// over the basis keys.
pub fn kernel<K: Ord + Clone>(basis: &[K], image: impl Fn(&K) -> Vector<Monomial>) -> Span<K> {
    // augmented vectors: image part sorts before the identity part
    let mut aug: Span<(u8, Monomial, Option<K>)> = Span::new();
    for b in basis {
        let mut v: Vector<(u8, Monomial, Option<K>)> = image(b)
            .into_iter()
            .map(|(m, c)| ((0, m, None), c))
            .collect();
        v.insert((1, Monomial::one(0), Some(b.clone())), Rational::one());
        aug.insert(v);
    }
    Span::from_vectors(aug.rows().filter(|r| r.keys().next().unwrap().0 == 1).map(|r| {
        r.iter()
            .map(|((_, _, k), c)| (k.clone().unwrap(), c.clone()))
            .collect()
    }))
}

/// Span of `m · g` for the given polynomials and multipliers, keeping only
/// products whose monomials all satisfy `keep`.
pub fn span_of_multiples(
    gens: &[Polynomial],
    multipliers: &[Monomial],
    reduce: impl Fn(&Polynomial) -> Polynomial,
) -> Span<Monomial> {
    let mut s = Span::new();
    for g in gens {
        for m in multipliers {
            if m.nvars() != g.nvars() {
                continue;
            }
            s.insert(poly_vector(&reduce(&(&monomial_poly(m) * g))));
        }
    }
    s
}

/// All monomials in `nvars` variables of total degree `<= d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|e| monomials_of_degree(&vec![1; nvars], e)).collect()
}

pub fn total_degree_at_most(p: &Vector<Monomial>, d: u32) -> bool {
    p.keys().all(|m| m.degree() <= d)
}

pub mod strategies {
    use proptest::prelude::*;
    use reeskit::poly::{Monomial, Polynomial, Rational};

    pub fn coefficient() -> impl Strategy<Value = Rational> {
        (-4i64..=4, 1i64..=3)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    pub fn monomial(nvars: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0..=max_deg, nvars)
            .prop_filter("bounded degree", move |e| e.iter().sum::<u32>() <= max_deg)
            .prop_map(Monomial::new)
    }

    pub fn polynomial(nvars: usize, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((monomial(nvars, max_deg), coefficient()), 1..=max_terms)
            .prop_map(move |ts| Polynomial::from_terms(nvars, ts))
    }

    pub fn nonzero_polynomial(nvars: usize, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        polynomial(nvars, max_terms, max_deg).prop_filter("nonzero", |p| !p.is_zero())
    }

    /// Small generating sets in 2 or 3 variables.
    pub fn ideal_generators() -> impl Strategy<Value = (usize, Vec<Polynomial>)> {
        (2usize..=3).prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(nonzero_polynomial(n, 3, 3), 1..=3),
            )
        })
    }

    /// A `rows × cols` matrix of small polynomials (entries may be zero).
    pub fn matrix_entries(nvars: usize, rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
        proptest::collection::vec(
            proptest::collection::vec(
                prop_oneof![
                    1 => Just(Polynomial::zero(nvars)),
                    3 => polynomial(nvars, 2, 2),
                ],
                cols,
            ),
            rows,
        )
    }
}
