//! Ideals of the commutative ring `C = k[x1..xn]`.

use crate::engine::groebner::{ideal_groebner, GroebnerBasis, Limits};
use crate::engine::module::{ModOrder, ModVec};
use crate::engine::poly::Poly;
use crate::engine::syzygy::preimage;
use crate::error::Result;
use crate::monomial::{Monomial, TermOrder};
use crate::scalar::Field;

/// An ideal of `C` held through its reduced grevlex Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CIdeal {
    field: Field,
    nvars: usize,
    gb: GroebnerBasis,
}

impl CIdeal {
    pub fn new(field: Field, nvars: usize, gens: &[Poly], limits: &Limits) -> Result<CIdeal> {
        let gb = ideal_groebner(gens, TermOrder::Grevlex, limits)?;
        Ok(CIdeal { field, nvars, gb })
    }

    pub fn zero(field: Field, nvars: usize) -> CIdeal {
        Self::new(field, nvars, &[], &Limits::default()).expect("empty basis")
    }

    pub fn unit(field: Field, nvars: usize) -> CIdeal {
        Self::new(field, nvars, &[Poly::one(field, nvars)], &Limits::default()).expect("unit basis")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Reduced Gröbner basis elements, monic, ascending.
    pub fn gens(&self) -> Vec<Poly> {
        self.gb.polys(self.field, self.nvars)
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_zero_module()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.contains_unit_at(0)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let order = self.gb.order().clone();
        self.gb
            .normal_form(&ModVec::from_poly(f, &order))
            .expect("rank one")
            .component(self.field, self.nvars, 0)
    }

    pub fn contains_ideal(&self, other: &CIdeal) -> bool {
        other.gens().iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &CIdeal, limits: &Limits) -> Result<CIdeal> {
        let mut g = self.gens();
        g.extend(other.gens());
        CIdeal::new(self.field, self.nvars, &g, limits)
    }

    /// Krull dimension of `C / self`; `-1` for the unit ideal.
    pub fn krull_dim_quotient(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        max_independent_set(&self.gb.leading_monomials(0), self.nvars).len() as i64
    }

    /// Whether every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[crate::scalar::Scalar]) -> bool {
        self.gens().iter().all(|g| g.eval(point).is_zero())
    }
}

/// A largest set `U` of variables such that no leading monomial lies in
/// `k[U]`. Its size is the Krull dimension of `C / in(I)`.
pub fn max_independent_set(leads: &[Monomial], nvars: usize) -> Vec<usize> {
    let supports: Vec<u64> = leads
        .iter()
        .map(|m| {
            m.exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    // a set U is independent iff every support meets the complement of U
    let independent = |u: u64| supports.iter().all(|s| s & !u != 0);
    let mut best = 0u64;
    fn search(
        i: usize,
        nvars: usize,
        u: u64,
        len: u32,
        independent: &dyn Fn(u64) -> bool,
        best: &mut u64,
        best_len: &mut u32,
    ) {
        if len + (nvars - i) as u32 <= *best_len {
            return;
        }
        if i == nvars {
            *best = u;
            *best_len = len;
            return;
        }
        let with = u | 1 << i;
        if independent(with) {
            search(i + 1, nvars, with, len + 1, independent, best, best_len);
        }
        search(i + 1, nvars, u, len, independent, best, best_len);
    }
    if independent(0) {
        let mut best_len = 0u32;
        search(0, nvars, 0, 0, &independent, &mut best, &mut best_len);
    }
    (0..nvars).filter(|i| best >> i & 1 == 1).collect()
}

/// `a ∩ b` by eliminating `t` from `t·a + (1 - t)·b`.
pub fn ideal_intersect(a: &CIdeal, b: &CIdeal, limits: &Limits) -> Result<CIdeal> {
    let field = a.field;
    let n = a.nvars;
    let t = Poly::var(field, n + 1, 0);
    let one_minus_t = Poly::one(field, n + 1).sub(&t);
    let mut gens: Vec<Poly> = a.gens().iter().map(|g| t.mul(&g.prepend_vars(1))).collect();
    gens.extend(b.gens().iter().map(|g| one_minus_t.mul(&g.prepend_vars(1))));
    let gb = ideal_groebner(&gens, TermOrder::Elim(1), limits)?;
    let kept: Vec<Poly> = gb
        .polys(field, n + 1)
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exps()[0] == 0))
        .map(|p| p.drop_front(1))
        .collect();
    CIdeal::new(field, n, &kept, limits)
}

/// `(a : g) = { f : f·g ∈ a }`.
pub fn ideal_colon(a: &CIdeal, g: &Poly, limits: &Limits) -> Result<CIdeal> {
    let order = ModOrder::ideal(TermOrder::Grevlex);
    let image = ModVec::from_poly(g, &order);
    let target: Vec<ModVec> = a.gb.elems().to_vec();
    let pre = preimage(
        &[image],
        &target,
        1,
        a.nvars,
        a.field,
        &TermOrder::Grevlex,
        limits,
    )?;
    let gens: Vec<Poly> = pre
        .iter()
        .map(|v| v.component(a.field, a.nvars, 0))
        .collect();
    CIdeal::new(a.field, a.nvars, &gens, limits)
}

/// `a ∩ k[remaining variables]`, kept in the ambient ring.
pub fn eliminate(a: &CIdeal, vars: &[usize], limits: &Limits) -> Result<CIdeal> {
    let mask = vars.iter().fold(0u64, |m, &v| m | 1 << v);
    let gb = ideal_groebner(&a.gens(), TermOrder::Elim(mask), limits)?;
    let kept: Vec<Poly> = gb
        .polys(a.field, a.nvars)
        .into_iter()
        .filter(|p| {
            p.terms()
                .iter()
                .all(|(m, _)| vars.iter().all(|&v| m.exps()[v] == 0))
        })
        .collect();
    CIdeal::new(a.field, a.nvars, &kept, limits)
}

/// Whether `f` lies in the radical of `a`: `1 ∈ a + (1 - t·f)` in `C[t]`.
pub fn radical_contains(a: &CIdeal, f: &Poly, limits: &Limits) -> Result<bool> {
    let field = a.field;
    let n = a.nvars;
    let t = Poly::var(field, n + 1, 0);
    let mut gens: Vec<Poly> = a.gens().iter().map(|g| g.prepend_vars(1)).collect();
    gens.push(Poly::one(field, n + 1).sub(&t.mul(&f.prepend_vars(1))));
    let gb = ideal_groebner(&gens, TermOrder::Grevlex, limits)?;
    Ok(gb.contains_unit_at(0))
}

/// Jacobian matrix: rows are generators, columns variables.
pub fn jacobian_matrix(gens: &[Poly]) -> Vec<Vec<Poly>> {
    gens.iter()
        .map(|g| (0..g.nvars()).map(|i| g.derivative(i)).collect())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Poly>], field: Field, nvars: usize) -> Poly {
    match m.len() {
        0 => Poly::one(field, nvars),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero(field, nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&determinant(&minor, field, nvars));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All `h × h` minors of the Jacobian of `gens`, `h` the codimension of
/// `V(gens)`.
pub fn jacobian_minors(a: &CIdeal) -> Vec<Poly> {
    let gens = a.gens();
    let dim = a.krull_dim_quotient();
    if dim < 0 {
        return vec![Poly::one(a.field, a.nvars)];
    }
    let h = a.nvars - dim as usize;
    let jac = jacobian_matrix(&gens);
    let mut minors = Vec::new();
    for rows in combinations(gens.len(), h) {
        for cols in combinations(a.nvars, h) {
            let sub: Vec<Vec<Poly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub, a.field, a.nvars);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    minors
}

/// The ideal plus all maximal minors of its Jacobian.
pub fn jacobian_ideal(a: &CIdeal, limits: &Limits) -> Result<CIdeal> {
    let mut gens = a.gens();
    gens.extend(jacobian_minors(a));
    CIdeal::new(a.field, a.nvars, &gens, limits)
}
