use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial. Its length is the number of ambient variables.
///
/// The derived `Ord` is lexicographic with the first variable largest; it is only
/// used for canonical storage; use [`MonomialOrder`] for term orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree of the monomial in the variables `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}

/// A term order on exponent vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_0 > x_1 > ...`.
    #[default]
    Grevlex,
    /// Lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Product order: compare the variables `[0, split)` with `first`, break ties on
    /// `[split, n)` with `second`. Eliminates the first block.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}


impl MonomialOrder {
    /// Block order eliminating the first `split` variables, grevlex inside each block.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::Grevlex),
            second: Box::new(MonomialOrder::Grevlex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_slices(&a.0, &b.0)
    }

    fn compare_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let s = (*split).min(a.len());
                first
                    .compare_slices(&a[..s], &b[..s])
                    .then_with(|| second.compare_slices(&a[s..], &b[s..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => format!("block({}, {}, {})", split, first.name(), second.name()),
        }
    }
}

/// All monomials of weighted degree `n`, where variable `i` has weight `weights[i] > 0`,
/// in lex-descending order of exponent vectors.
pub fn monomials_of_degree(weights: &[u32], n: u32) -> Vec<Monomial> {
    assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
    let mut out = Vec::new();
    let mut e = vec![0u32; weights.len()];
    fill(weights, n, 0, &mut e, &mut out);
    out
}

fn fill(weights: &[u32], left: u32, i: usize, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if left == 0 {
            out.push(Monomial::new(e.clone()));
        }
        return;
    }
    for k in (0..=left / weights[i]).rev() {
        e[i] = k;
        fill(weights, left - k * weights[i], i + 1, e, out);
    }
    e[i] = 0;
}
