use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::rational::{render_rational, Rational};
use crate::error::{Error, Result};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in a map keyed by exponent vector with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::variable(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic, ascending) storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient in `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Re-embeds into `nvars` variables, sending variable `i` to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }

    /// Appends `extra` fresh variables after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(self.nvars + extra, &map)
    }

    /// Substitutes `images[i]` for variable `i`; every image has `target` variables.
    pub fn substitute(&self, target: usize, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// True if every variable of every term lies in `range`.
    pub fn only_uses(&self, range: std::ops::Range<usize>) -> bool {
        self.terms.keys().all(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || range.contains(&i))
        })
    }

    /// Text rendering with terms descending in `order`, e.g. `2*x^2*y - 1/3`.
    pub fn render(&self, names: &[String], order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mono = render_monomial(m, names);
            if mono.is_empty() {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&render_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Default variable names `x0, x1, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{}", i)).collect()
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars), &MonomialOrder::Grevlex))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Operator forms panic on mismatched variable counts; use the `checked_*` methods
// when the counts come from user input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
