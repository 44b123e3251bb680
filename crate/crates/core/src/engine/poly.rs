//! Sparse commutative polynomials over the even variables.

use std::cmp::Ordering;

use crate::monomial::{Monomial, TermOrder};
use crate::scalar::{Field, Scalar};

/// A polynomial in `k[x1..xn]`, terms sorted descending in grevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Poly {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        Poly {
            field,
            nvars,
            terms: vec![(Monomial::var(nvars, i), field.one())],
        }
    }

    pub fn monomial(field: Field, m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let mut p = Self::zero(field, nvars);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(field: Field, nvars: usize, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        terms.sort_by(|a, b| TermOrder::Grevlex.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            field,
            nvars,
            terms: out,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match TermOrder::Grevlex.cmp(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&o.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&self.field.int(-1))
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.nvars);
        }
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field, self.nvars);
        }
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                terms.push((m.mul(n), a.mul(b)));
            }
        }
        Poly::from_terms(self.field, self.nvars, terms)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one(self.field, self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[i] > 0)
            .map(|(m, c)| {
                let e = m.exps()[i];
                let mut ex = m.exps().to_vec();
                ex[i] -= 1;
                (Monomial::from_exps(&ex), c.mul(&self.field.int(e as i64)))
            })
            .collect();
        Poly::from_terms(self.field, self.nvars, terms)
    }

    /// Evaluates at a point of `k^n`.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes `x_i -> x_i + shift_i`.
    pub fn translate(&self, shift: &[Scalar]) -> Poly {
        let mut acc = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(self.field, self.nvars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                let lin = Poly::var(self.field, self.nvars, i).add(&Poly::constant(
                    self.field,
                    self.nvars,
                    shift[i].clone(),
                ));
                t = t.mul(&lin.pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exps()[i] > 0))
            .collect()
    }

    /// Exact quotient `self / d` when `d` divides `self`; `None` otherwise.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?.clone();
        let mut rem = self.clone();
        let mut q = Poly::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading().cloned() {
            if !dm.divides(&m) {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = c.div(&dc);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            q = q.add(&Poly::monomial(self.field, qm, qc));
        }
        Some(q)
    }

    pub fn prepend_vars(&self, k: usize) -> Poly {
        Poly::from_terms(
            self.field,
            self.nvars + k,
            self.terms
                .iter()
                .map(|(m, c)| (m.prepend_vars(k), c.clone()))
                .collect(),
        )
    }

    pub fn drop_front(&self, k: usize) -> Poly {
        Poly::from_terms(
            self.field,
            self.nvars - k,
            self.terms
                .iter()
                .map(|(m, c)| (m.drop_front(k), c.clone()))
                .collect(),
        )
    }

    /// Dense coefficients (low degree first) in variable `i`, when no other
    /// variable occurs.
    pub fn univariate_coeffs(&self, i: usize) -> Option<Vec<Scalar>> {
        let mut out: Vec<Scalar> = Vec::new();
        for (m, c) in &self.terms {
            if m.exps().iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            let e = m.exps()[i] as usize;
            if out.len() <= e {
                out.resize(e + 1, self.field.zero());
            }
            out[e] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(field: Field, nvars: usize, i: usize, coeffs: &[Scalar]) -> Poly {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| {
                let mut ex = vec![0u32; nvars];
                ex[i] = e as u32;
                (Monomial::from_exps(&ex), c.clone())
            })
            .collect();
        Poly::from_terms(field, nvars, terms)
    }
}
