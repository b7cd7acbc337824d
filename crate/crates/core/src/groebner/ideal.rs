use super::engine::{Element, Engine};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Ideal of a polynomial ring, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
        }
        Ok(Ideal { nvars, generators })
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn groebner(&self, order: &MonomialOrder) -> GroebnerBasis {
        buchberger(self, order)
    }
}

/// Reduced Gröbner basis of an ideal, sorted by descending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    cached: Vec<Element>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    /// Basis of the zero ideal.
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        GroebnerBasis {
            nvars,
            order,
            elements: Vec::new(),
            cached: Vec::new(),
        }
    }

    fn from_elements(nvars: usize, order: MonomialOrder, cached: Vec<Element>) -> Self {
        let engine = Engine::new(&order);
        let elements = cached
            .iter()
            .map(|e| engine.to_polynomial(e, nvars))
            .collect();
        GroebnerBasis {
            nvars,
            order,
            elements,
            cached,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Always true: bases are only constructed by the reducing algorithm.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn ideal(&self) -> Ideal {
        Ideal {
            nvars: self.nvars,
            generators: self.elements.clone(),
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "normal form: variable count");
        let engine = Engine::new(&self.order);
        let r = engine.reduce(engine.encode_polynomial(p), &self.cached);
        engine.to_polynomial(&r, self.nvars)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Checks Buchberger's criterion (all S-polynomials reduce to zero).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        Engine::new(&self.order).is_groebner(&self.cached)
    }

    pub(crate) fn leading_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.cached.iter().map(|e| e[0].mono.clone()).collect()
    }
}

/// Reduced Gröbner basis of `ideal` with respect to `order`.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    let engine = Engine::new(order);
    let gens = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.encode_polynomial(g))
        .collect();
    let basis = engine.groebner(gens, true);
    GroebnerBasis::from_elements(ideal.nvars, order.clone(), basis)
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

/// `I ∩ k[x_keep_from, ..., x_n]`: eliminates the variables before `keep_from`.
pub fn eliminate(ideal: &Ideal, keep_from: usize) -> Ideal {
    let vars: Vec<usize> = (0..keep_from).collect();
    eliminate_variables(ideal, &vars)
}

/// Eliminates an arbitrary set of variables. The result lives in the same
/// ambient ring and only involves the remaining variables; it is a reduced
/// basis for a block order with the eliminated variables in the first block.
pub fn eliminate_variables(ideal: &Ideal, vars: &[usize]) -> Ideal {
    let n = ideal.nvars;
    if vars.is_empty() {
        return buchberger(ideal, &MonomialOrder::Grevlex).ideal();
    }
    // permutation placing eliminated variables first
    let mut perm: Vec<usize> = vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let split = perm.len();
    perm.extend((0..n).filter(|i| !vars.contains(i)));
    let mut forward = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        forward[old] = new;
    }
    let permuted = Ideal {
        nvars: n,
        generators: ideal.generators.iter().map(|g| g.remap(n, &forward)).collect(),
    };
    let gb = buchberger(&permuted, &MonomialOrder::elimination(split));
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.only_uses(split..n))
        .map(|g| g.remap(n, &perm))
        .collect();
    Ideal {
        nvars: n,
        generators: kept,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn ideal(names: &[String], gens: &[&str]) -> Ideal {
        Ideal::new(
            names.len(),
            gens.iter().map(|g| parse_polynomial(g, names).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn principal_and_zero() {
        let n = ring(&["x"]);
        let gb = buchberger(&ideal(&n, &["3*x"]), &MonomialOrder::Grevlex);
        assert_eq!(gb.elements(), &[parse_polynomial("x", &n).unwrap()]);
        let z = buchberger(&Ideal::zero(1), &MonomialOrder::Grevlex);
        assert!(z.is_empty());
        let p = parse_polynomial("x^2 + 1", &n).unwrap();
        assert_eq!(z.normal_form(&p), p);
    }

    #[test]
    fn twisted_cubic_lex() {
        let n = ring(&["x", "y", "z"]);
        let i = ideal(&n, &["x^2 - y", "x^3 - z"]);
        let gb = buchberger(&i, &MonomialOrder::Lex);
        let target = parse_polynomial("y^3 - z^2", &n).unwrap();
        assert!(gb.elements().contains(&target));
        assert!(gb.contains(&target));
        for g in i.generators() {
            assert!(gb.contains(g));
        }
        // every basis element lies in the ideal generated by the input (checked the other way)
        let back = buchberger(&gb.ideal(), &MonomialOrder::Lex);
        assert_eq!(back, gb);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn single_division_step() {
        let n = ring(&["x", "y"]);
        let gb = buchberger(&ideal(&n, &["x^2 - y"]), &MonomialOrder::Grevlex);
        assert_eq!(
            gb.normal_form(&parse_polynomial("x^2", &n).unwrap()),
            parse_polynomial("y", &n).unwrap()
        );
        let gb = buchberger(&ideal(&n, &["x"]), &MonomialOrder::Grevlex);
        assert!(gb.normal_form(&parse_polynomial("x^2", &n).unwrap()).is_zero());
    }

    #[test]
    fn eliminate_without_relation() {
        let n = ring(&["t", "x", "y"]);
        let i = ideal(&n, &["t*x - y"]);
        assert!(eliminate(&i, 1).generators().is_empty());
    }

    #[test]
    fn eliminate_parameter_of_line() {
        let n = ring(&["x", "y", "t", "S", "T"]);
        let i = ideal(&n, &["S - x*t", "T - y*t"]);
        let e = eliminate_variables(&i, &[2]);
        let expect = parse_polynomial("x*T - y*S", &n).unwrap();
        assert_eq!(e.generators().len(), 1);
        let g = &e.generators()[0];
        assert!(g == &expect || g == &(-&expect));
        let gb = buchberger(&i, &MonomialOrder::Grevlex);
        assert!(gb.contains(&expect));
    }

    #[test]
    fn eliminate_nothing_is_reduced_basis() {
        let n = ring(&["x", "y"]);
        let i = ideal(&n, &["x^2 - y", "x*y"]);
        let e = eliminate(&i, 0);
        assert_eq!(e.generators(), buchberger(&i, &MonomialOrder::Grevlex).elements());
    }
}
