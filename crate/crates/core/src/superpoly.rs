//! Elements of the free superalgebra `k[x1..xn | θ1..θd]` in canonical signed
//! form.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::engine::module::{MTerm, ModOrder, ModVec};
use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::odd::{OddMask, OddProduct};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub even: Monomial,
    pub odd: OddMask,
}

/// Canonical order on terms: grevlex on the even part, then the odd mask
/// bit pattern.
pub fn term_cmp(a: &Term, b: &Term) -> Ordering {
    TermOrder::Grevlex
        .cmp(&a.even, &b.even)
        .then_with(|| a.odd.cmp(&b.odd))
}

/// A superpolynomial. Terms are sorted descending, with distinct
/// `(even, odd)` keys and nonzero coefficients; zero has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperPoly {
    field: Field,
    nvars: usize,
    nodd: usize,
    terms: Vec<Term>,
}

impl SuperPoly {
    pub fn zero(field: Field, nvars: usize, nodd: usize) -> Self {
        SuperPoly {
            field,
            nvars,
            nodd,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, nodd: usize, c: Scalar) -> Self {
        Self::from_terms(
            field,
            nvars,
            nodd,
            vec![Term {
                coeff: c,
                even: Monomial::one(nvars),
                odd: OddMask::EMPTY,
            }],
        )
    }

    pub fn one(field: Field, nvars: usize, nodd: usize) -> Self {
        Self::constant(field, nvars, nodd, field.one())
    }

    /// The even variable `x_{i+1}`.
    pub fn even_var(field: Field, nvars: usize, nodd: usize, i: usize) -> Self {
        Self::from_terms(
            field,
            nvars,
            nodd,
            vec![Term {
                coeff: field.one(),
                even: Monomial::var(nvars, i),
                odd: OddMask::EMPTY,
            }],
        )
    }

    /// The odd variable `θ_{i+1}`.
    pub fn odd_var(field: Field, nvars: usize, nodd: usize, i: usize) -> Self {
        Self::odd_monomial(field, nvars, nodd, OddMask::single(i))
    }

    pub fn odd_monomial(field: Field, nvars: usize, nodd: usize, mask: OddMask) -> Self {
        Self::from_terms(
            field,
            nvars,
            nodd,
            vec![Term {
                coeff: field.one(),
                even: Monomial::one(nvars),
                odd: mask,
            }],
        )
    }

    pub fn from_terms(field: Field, nvars: usize, nodd: usize, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| term_cmp(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.even == t.even && l.odd == t.odd => l.coeff = l.coeff.add(&t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        SuperPoly {
            field,
            nvars,
            nodd,
            terms: out,
        }
    }

    /// Embeds a commutative polynomial as the purely even body.
    pub fn from_poly(p: &Poly, nodd: usize) -> Self {
        Self::from_components(
            p.field(),
            p.nvars(),
            nodd,
            &BTreeMap::from([(OddMask::EMPTY, p.clone())]),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nodd(&self) -> usize {
        self.nodd
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ambient(&self, o: &SuperPoly) -> bool {
        self.field == o.field && self.nvars == o.nvars && self.nodd == o.nodd
    }

    pub fn checked_add(&self, o: &SuperPoly) -> Result<SuperPoly> {
        if !self.same_ambient(o) {
            return Err(Error::AmbientMismatch);
        }
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        Ok(Self::from_terms(self.field, self.nvars, self.nodd, terms))
    }

    pub fn checked_mul(&self, o: &SuperPoly) -> Result<SuperPoly> {
        if !self.same_ambient(o) {
            return Err(Error::AmbientMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for a in &self.terms {
            for b in &o.terms {
                if let OddProduct::Signed { sign, mask } = a.odd.mul(b.odd) {
                    let c = a.coeff.mul(&b.coeff);
                    terms.push(Term {
                        coeff: if sign < 0 { c.neg() } else { c },
                        even: a.even.mul(&b.even),
                        odd: mask,
                    });
                }
            }
        }
        Ok(Self::from_terms(self.field, self.nvars, self.nodd, terms))
    }

    /// Sum; panics on ambient mismatch (use `checked_add` for user input).
    pub fn add(&self, o: &SuperPoly) -> SuperPoly {
        self.checked_add(o).expect("ambient mismatch")
    }

    pub fn sub(&self, o: &SuperPoly) -> SuperPoly {
        self.add(&o.neg())
    }

    /// Product; panics on ambient mismatch (use `checked_mul` for user input).
    pub fn mul(&self, o: &SuperPoly) -> SuperPoly {
        self.checked_mul(o).expect("ambient mismatch")
    }

    pub fn neg(&self) -> SuperPoly {
        self.scale(&self.field.int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> SuperPoly {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.mul(c),
                ..t.clone()
            })
            .collect();
        Self::from_terms(self.field, self.nvars, self.nodd, terms)
    }

    pub fn pow(&self, e: u32) -> SuperPoly {
        let mut r = SuperPoly::one(self.field, self.nvars, self.nodd);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn parity(&self) -> Parity {
        let odd = self.terms.iter().filter(|t| t.odd.is_odd()).count();
        if odd == 0 {
            Parity::Even
        } else if odd == self.terms.len() {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity() != Parity::Mixed
    }

    /// `(even part, odd part)`.
    pub fn homogeneous_split(&self) -> (SuperPoly, SuperPoly) {
        let (odd, even): (Vec<Term>, Vec<Term>) =
            self.terms.iter().cloned().partition(|t| t.odd.is_odd());
        (
            SuperPoly {
                terms: even,
                ..self.clone()
            },
            SuperPoly {
                terms: odd,
                ..self.clone()
            },
        )
    }

    /// The commutative coefficient `c_I(x)` of each odd monomial `θ_I`.
    pub fn grassmann_components(&self) -> BTreeMap<OddMask, Poly> {
        let mut buckets: BTreeMap<OddMask, Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for t in &self.terms {
            buckets
                .entry(t.odd)
                .or_default()
                .push((t.even.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|(m, ts)| (m, Poly::from_terms(self.field, self.nvars, ts)))
            .collect()
    }

    /// Reassembles `Σ c_I θ_I`.
    pub fn from_components(
        field: Field,
        nvars: usize,
        nodd: usize,
        comps: &BTreeMap<OddMask, Poly>,
    ) -> SuperPoly {
        let terms = comps
            .iter()
            .flat_map(|(mask, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    coeff: c.clone(),
                    even: m.clone(),
                    odd: *mask,
                })
            })
            .collect();
        Self::from_terms(field, nvars, nodd, terms)
    }

    /// The `θ_∅` component (the body).
    pub fn body(&self) -> Poly {
        self.component(OddMask::EMPTY)
    }

    pub fn component(&self, mask: OddMask) -> Poly {
        Poly::from_terms(
            self.field,
            self.nvars,
            self.terms
                .iter()
                .filter(|t| t.odd == mask)
                .map(|t| (t.even.clone(), t.coeff.clone()))
                .collect(),
        )
    }

    /// True when every term is purely even (no odd variables at all).
    pub fn is_body_only(&self) -> bool {
        self.terms.iter().all(|t| t.odd.is_empty())
    }

    /// As a vector of `C^{2^d}`, position = mask bit pattern.
    pub fn to_modvec(&self, order: &ModOrder) -> ModVec {
        let mut terms: Vec<MTerm> = self
            .terms
            .iter()
            .map(|t| MTerm {
                pos: t.odd.index(),
                mono: t.even.clone(),
                coeff: t.coeff.clone(),
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(b, a));
        ModVec { terms }
    }

    pub fn from_modvec(field: Field, nvars: usize, nodd: usize, v: &ModVec) -> SuperPoly {
        let terms = v
            .terms()
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                even: t.mono.clone(),
                odd: OddMask(t.pos as u32),
            })
            .collect();
        Self::from_terms(field, nvars, nodd, terms)
    }

    /// Largest even total degree among the terms.
    pub fn even_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.even.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> SuperPoly {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }
}
