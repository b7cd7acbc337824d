//! Buchberger's algorithm on sparse vectors of polynomials.
//!
//! Terms carry a position; the module order is position-over-term with lower
//! positions larger, so a basis computed here eliminates leading positions.
//! Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Terms sorted strictly descending in the engine's order, no zero coefficients.
pub(crate) type Element = Vec<Term>;

pub(crate) struct Engine<'o> {
    pub order: &'o MonomialOrder,
}

impl<'o> Engine<'o> {
    pub fn new(order: &'o MonomialOrder) -> Self {
        Engine { order }
    }

    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        b.pos
            .cmp(&a.pos)
            .then_with(|| self.order.compare(&a.mono, &b.mono))
    }

    pub fn encode_entries(&self, entries: &[Polynomial]) -> Element {
        let mut out: Element = entries
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().map(move |(m, c)| Term {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    pub fn encode_polynomial(&self, p: &Polynomial) -> Element {
        self.encode_entries(std::slice::from_ref(p))
    }

    pub fn to_entries(&self, e: &[Term], rank: usize, nvars: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(nvars); rank];
        for t in e {
            out[t.pos].add_term(t.mono.clone(), t.coeff.clone());
        }
        out
    }

    pub fn to_polynomial(&self, e: &[Term], nvars: usize) -> Polynomial {
        self.to_entries(e, 1, nvars).pop().expect("rank one")
    }

    /// `a - c * m * b`, both inputs sorted.
    fn sub_scaled(&self, a: &[Term], c: &Rational, m: &Monomial, b: &[Term]) -> Element {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let scaled = |t: &Term| Term {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: -(c * &t.coeff),
        };
        while i < a.len() && j < b.len() {
            let bt = scaled(&b[j]);
            match self.cmp(&a[i], &bt) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bt);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].coeff + &bt.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            pos: bt.pos,
                            mono: bt.mono,
                            coeff: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(scaled));
        out
    }

    fn find_reducer<'b>(&self, t: &Term, basis: &'b [Element]) -> Option<&'b Element> {
        basis.iter().find(|g| {
            let l = &g[0];
            l.pos == t.pos && l.mono.divides(&t.mono)
        })
    }

    /// Full normal form of `p` with respect to `basis`.
    pub fn reduce(&self, mut p: Element, basis: &[Element]) -> Element {
        let mut i = 0;
        while i < p.len() {
            match self.find_reducer(&p[i], basis) {
                Some(g) => {
                    let t = &p[i];
                    let q = g[0].mono.quotient_of(&t.mono).expect("divides");
                    let c = &t.coeff / &g[0].coeff;
                    let tail = self.sub_scaled(&p[i + 1..], &c, &q, &g[1..]);
                    p.truncate(i);
                    p.extend(tail);
                }
                None => i += 1,
            }
        }
        p
    }

    pub fn s_vector(&self, f: &[Term], g: &[Term]) -> Element {
        let lcm = f[0].mono.lcm(&g[0].mono);
        let qf = f[0].mono.quotient_of(&lcm).expect("lcm");
        let qg = g[0].mono.quotient_of(&lcm).expect("lcm");
        let cf = f[0].coeff.recip();
        let cg = &g[0].coeff.recip();
        let lhs: Element = f[1..]
            .iter()
            .map(|t| Term {
                pos: t.pos,
                mono: t.mono.mul(&qf),
                coeff: &t.coeff * &cf,
            })
            .collect();
        self.sub_scaled(&lhs, cg, &qg, &g[1..])
    }

    fn monic(e: &mut Element) {
        if let Some(first) = e.first() {
            if !first.coeff.is_one() {
                let inv = first.coeff.recip();
                for t in e.iter_mut() {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    /// Reduced Gröbner basis of the span of `gens`, sorted by descending leading term.
    ///
    /// `product_criterion` may only be set for ideals (all terms in position 0).
    pub fn groebner(&self, gens: Vec<Element>, product_criterion: bool) -> Vec<Element> {
        let mut basis: Vec<Element> = Vec::new();
        // (lcm degree, i, j) with i < j
        let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let push = |basis: &mut Vec<Element>,
                    queue: &mut BTreeSet<(u32, usize, usize)>,
                    pending: &mut HashSet<(usize, usize)>,
                    mut r: Element| {
            Self::monic(&mut r);
            let idx = basis.len();
            for (k, g) in basis.iter().enumerate() {
                if g[0].pos == r[0].pos {
                    let deg = g[0].mono.lcm(&r[0].mono).degree();
                    queue.insert((deg, k, idx));
                    pending.insert((k, idx));
                }
            }
            basis.push(r);
        };

        for g in gens {
            let r = self.reduce(g, &basis);
            if !r.is_empty() {
                push(&mut basis, &mut queue, &mut pending, r);
            }
        }

        while let Some(&key) = queue.iter().next() {
            queue.remove(&key);
            let (_, i, j) = key;
            pending.remove(&(i, j));
            let (li, lj) = (&basis[i][0], &basis[j][0]);
            if product_criterion && li.mono.is_coprime(&lj.mono) {
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            let pos = li.pos;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].pos == pos
                    && basis[k][0].mono.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis);
            if !r.is_empty() {
                push(&mut basis, &mut queue, &mut pending, r);
            }
        }

        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<Element>) -> Vec<Element> {
        let n = basis.len();
        let keep: Vec<bool> = (0..n)
            .map(|i| {
                !(0..n).any(|j| {
                    j != i
                        && basis[j][0].pos == basis[i][0].pos
                        && basis[j][0].mono.divides(&basis[i][0].mono)
                        && (basis[j][0].mono != basis[i][0].mono || j < i)
                })
            })
            .collect();
        let mut minimal: Vec<Element> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        for i in 0..minimal.len() {
            let g = std::mem::take(&mut minimal[i]);
            let head = g[0].clone();
            let others: Vec<Element> = minimal
                .iter()
                .enumerate()
                .filter(|(k, e)| *k != i && !e.is_empty())
                .map(|(_, e)| e.clone())
                .collect();
            let mut tail = self.reduce(g[1..].to_vec(), &others);
            let mut r = vec![head];
            r.append(&mut tail);
            minimal[i] = r;
        }
        minimal.sort_by(|a, b| self.cmp(&b[0], &a[0]));
        minimal
    }

    /// Buchberger's criterion: every S-vector of `basis` reduces to zero.
    pub fn is_groebner(&self, basis: &[Element]) -> bool {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if basis[i][0].pos != basis[j][0].pos {
                    continue;
                }
                let s = self.s_vector(&basis[i], &basis[j]);
                if !self.reduce(s, basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
