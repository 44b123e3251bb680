//! Sparse elements of free modules `C^r` under position-over-term orders.

use std::cmp::Ordering;

use crate::engine::poly::Poly;
use crate::monomial::{Monomial, TermOrder};
use crate::scalar::{Field, Scalar};

/// Position-over-term order: a lower position index is more significant,
/// then the term order decides within a position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModOrder {
    pub term: TermOrder,
    pub rank: usize,
}

impl ModOrder {
    pub fn ideal(term: TermOrder) -> Self {
        ModOrder { term, rank: 1 }
    }

    pub fn module(term: TermOrder, rank: usize) -> Self {
        ModOrder { term, rank }
    }

    pub fn cmp(&self, a: &MTerm, b: &MTerm) -> Ordering {
        b.pos
            .cmp(&a.pos)
            .then_with(|| self.term.cmp(&a.mono, &b.mono))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// An element of `C^r`; terms sorted descending in the owning order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModVec {
    pub(crate) terms: Vec<MTerm>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub fn from_components(comps: &[Poly], order: &ModOrder) -> Self {
        let mut terms: Vec<MTerm> = comps
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| MTerm {
                    pos,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(b, a));
        ModVec { terms }
    }

    pub fn from_poly(p: &Poly, order: &ModOrder) -> Self {
        Self::from_components(std::slice::from_ref(p), order)
    }

    /// Components as canonical polynomials; `rank` entries.
    pub fn to_components(&self, field: Field, nvars: usize, rank: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_terms(field, nvars, b))
            .collect()
    }

    pub fn component(&self, field: Field, nvars: usize, pos: usize) -> Poly {
        Poly::from_terms(
            field,
            nvars,
            self.terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| (t.mono.clone(), t.coeff.clone()))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn monic(&self) -> ModVec {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// `self - c·m·g`, with the result sorted in `order`.
    pub fn sub_mul(&self, c: &Scalar, m: &Monomial, g: &ModVec, order: &ModOrder) -> ModVec {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let shifted = g.terms.iter().map(|t| MTerm {
            pos: t.pos,
            mono: t.mono.mul(m),
            coeff: t.coeff.mul(c).neg(),
        });
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.cmp(x, y) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = x.coeff.add(&y.coeff);
                        if !s.is_zero() {
                            out.push(MTerm { coeff: s, ..x });
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        ModVec { terms: out }
    }

    pub fn add(&self, g: &ModVec, order: &ModOrder) -> ModVec {
        match g.terms.first() {
            None => self.clone(),
            Some(t) => {
                let one = Monomial::one(t.mono.nvars());
                let minus_one = t.coeff.field().int(-1);
                self.sub_mul(&minus_one, &one, g, order)
            }
        }
    }

    pub fn mul_poly(&self, p: &Poly, order: &ModOrder) -> ModVec {
        let mut acc = ModVec::zero();
        for (m, c) in p.terms() {
            acc = acc.sub_mul(&c.neg(), m, self, order);
        }
        acc
    }

    /// Re-sorts under a different order.
    pub fn reorder(&self, order: &ModOrder) -> ModVec {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(b, a));
        ModVec { terms }
    }

    /// Moves every position by `delta` (may be negative); terms whose new
    /// position would be negative are dropped.
    pub fn shift_positions(&self, delta: isize, order: &ModOrder) -> ModVec {
        let terms: Vec<MTerm> = self
            .terms
            .iter()
            .filter(|t| t.pos as isize + delta >= 0)
            .map(|t| MTerm {
                pos: (t.pos as isize + delta) as usize,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            })
            .collect();
        ModVec { terms }.reorder(order)
    }
}
