use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial};

/// `A = QQ[x_1..x_k] / I` together with the reduced Gröbner basis of `I`.
///
/// Cheap to clone; equality compares variable names and the basis, not the label.
#[derive(Clone)]
pub struct PresentedRing {
    inner: Arc<RingData>,
}

struct RingData {
    label: String,
    names: Vec<String>,
    ideal: Ideal,
    gb: GroebnerBasis,
}

impl PresentedRing {
    pub fn new(names: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        Self::with_order(names, relations, MonomialOrder::Grevlex)
    }

    pub fn with_order(
        names: Vec<String>,
        relations: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let ideal = Ideal::new(names.len(), relations)?;
        let gb = buchberger(&ideal, &order);
        Ok(PresentedRing {
            inner: Arc::new(RingData {
                label: "A".into(),
                names,
                ideal,
                gb,
            }),
        })
    }

    pub fn polynomial_ring(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect(), Vec::new())
            .expect("no relations")
    }

    /// Parses relations written in the ring's variables, e.g. `["x^2"]`.
    pub fn parse(names: &[&str], relations: &[&str]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_polynomial(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    /// The same ring with a display label (used when rendering `A[U] / (...)`).
    pub fn with_label(&self, label: &str) -> Self {
        PresentedRing {
            inner: Arc::new(RingData {
                label: label.to_string(),
                names: self.inner.names.clone(),
                ideal: self.inner.ideal.clone(),
                gb: self.inner.gb.clone(),
            }),
        }
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn nvars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.inner.ideal
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.inner.gb
    }

    pub fn order(&self) -> &MonomialOrder {
        self.inner.gb.order()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.inner.gb.normal_form(p)
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        Ok(self.element(parse_polynomial(text, self.names())?))
    }

    pub fn parse_polynomial(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, self.names())
    }

    pub fn element(&self, p: Polynomial) -> RingElement {
        RingElement {
            value: self.reduce(&p),
            ring: self.clone(),
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    pub fn variable(&self, i: usize) -> Polynomial {
        Polynomial::variable(self.nvars(), i)
    }

    /// The standard monomials of `I`, when there are finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        standard_monomials(self.nvars(), &self.inner.gb.leading_monomials())
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.standard_monomials().is_some()
    }

    pub fn rational_dimension(&self) -> Result<usize> {
        self.standard_monomials()
            .map(|s| s.len())
            .ok_or(Error::InfiniteDimensional)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(self.names(), self.order())
    }

    pub fn ptr_eq(&self, other: &PresentedRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub(crate) fn check_same(&self, other: &PresentedRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

/// Monomials not divisible by any of `leads`, or `None` if that set is infinite.
pub(crate) fn standard_monomials(nvars: usize, leads: &[Monomial]) -> Option<Vec<Monomial>> {
    // finite iff every variable has a pure power among the leading monomials
    let mut bounds = vec![u32::MAX; nvars];
    for m in leads {
        let support: Vec<usize> = (0..nvars).filter(|&i| m.exponents()[i] > 0).collect();
        if support.is_empty() {
            return Some(Vec::new());
        }
        if support.len() == 1 {
            let i = support[0];
            bounds[i] = bounds[i].min(m.exponents()[i]);
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    loop {
        let m = Monomial::new(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, bounds)
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort();
                return Some(out);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

impl PartialEq for PresentedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.inner.names == other.inner.names && self.inner.gb == other.inner.gb)
    }
}

impl Eq for PresentedRing {}

impl fmt::Debug for PresentedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .gb()
            .elements()
            .iter()
            .map(|g| self.render(g))
            .collect();
        if rels.is_empty() {
            write!(f, "QQ[{}]", self.names().join(", "))
        } else {
            write!(f, "QQ[{}] / ({})", self.names().join(", "), rels.join(", "))
        }
    }
}

/// Element of a presented ring, kept in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: PresentedRing,
    value: Polynomial,
}

impl RingElement {
    pub fn ring(&self) -> &PresentedRing {
        &self.ring
    }

    pub fn value(&self) -> &Polynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        Ok(self.ring.element(self.value.checked_add(&other.value)?))
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        Ok(self.ring.element(self.value.checked_sub(&other.value)?))
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        Ok(self.ring.element(self.value.checked_mul(&other.value)?))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_polynomial_ring() {
        let a = PresentedRing::parse(&["x"], &["x^2"]).unwrap();
        let x = a.parse_element("x").unwrap();
        assert!(x.mul(&x).unwrap().is_zero());
        assert_eq!(a.rational_dimension(), Ok(2));
        assert_eq!(format!("{:?}", a), "QQ[x] / (x^2)");
    }

    #[test]
    fn polynomial_ring_is_infinite() {
        let a = PresentedRing::polynomial_ring(&["x", "y"]);
        assert!(!a.is_finite_dimensional());
        assert_eq!(a.rational_dimension(), Err(Error::InfiniteDimensional));
        let q = PresentedRing::polynomial_ring(&[]);
        assert_eq!(q.rational_dimension(), Ok(1));
    }

    #[test]
    fn standard_monomials_of_box() {
        let a = PresentedRing::parse(&["x", "y"], &["x^2", "y^2", "x*y"]).unwrap();
        assert_eq!(a.rational_dimension(), Ok(3));
    }

    #[test]
    fn ring_mismatch() {
        let a = PresentedRing::parse(&["x"], &["x^2"]).unwrap();
        let b = PresentedRing::parse(&["x"], &["x^3"]).unwrap();
        let x = a.parse_element("x").unwrap();
        let y = b.parse_element("x").unwrap();
        assert_eq!(x.add(&y), Err(Error::RingMismatch));
        assert_eq!(a.with_label("B"), a);
    }
}
