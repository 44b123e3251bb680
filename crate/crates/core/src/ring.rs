//! Presented superrings `R = k[x1..xn | θ1..θd] / 𝔞`.
//!
//! Every element of the free superalgebra is a vector of `C^{2^d}` (one
//! commuting coefficient per odd monomial `θ_I`, position = bit pattern of
//! `I`). A superideal is a `C`-submodule closed under multiplication by the
//! `θ_i`, so all ideal arithmetic runs on module Gröbner bases.

use std::fmt;
use std::sync::Arc;

use crate::engine::groebner::{groebner, GroebnerBasis, Limits};
use crate::engine::ideal::CIdeal;
use crate::engine::module::{ModOrder, ModVec};
use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::monomial::TermOrder;
use crate::odd::OddMask;
use crate::scalar::{Field, Scalar};
use crate::superpoly::SuperPoly;

pub const DEFAULT_MAX_ODD: usize = 8;

/// Resource configuration shared by all computations in one ring.
#[derive(Debug, Clone)]
pub struct Config {
    pub limits: Limits,
    pub max_odd: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            max_odd: DEFAULT_MAX_ODD,
        }
    }
}

#[derive(Debug)]
struct RingData {
    field: Field,
    even_names: Vec<String>,
    odd_names: Vec<String>,
    defining: Vec<SuperPoly>,
    closed: GroebnerBasis,
    reduced: CIdeal,
    config: Config,
}

/// A finitely presented superring. Cheap to clone; clones share state.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.even_names == other.0.even_names
                && self.0.odd_names == other.0.odd_names
                && self.0.closed == other.0.closed)
    }
}

impl Eq for Ring {}

/// Splits every generator into its even and odd parts, dropping zeros.
pub fn homogeneous_split_gens(gens: &[SuperPoly]) -> Vec<SuperPoly> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let (e, o) = g.homogeneous_split();
        for h in [e, o] {
            if !h.is_zero() && !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

pub(crate) fn module_order(nodd: usize) -> ModOrder {
    ModOrder::module(TermOrder::Grevlex, 1 << nodd)
}

/// Gröbner basis of the smallest θ-closed submodule containing `base` and
/// `gens`. Each round multiplies the current basis by every `θ_i`; the
/// minimum Grassmann degree of a new element grows, so at most `d + 1`
/// rounds run.
pub(crate) fn close_module(
    field: Field,
    nvars: usize,
    nodd: usize,
    base: &[ModVec],
    gens: &[SuperPoly],
    limits: &Limits,
) -> Result<GroebnerBasis> {
    let order = module_order(nodd);
    let mut input: Vec<ModVec> = base.to_vec();
    input.extend(gens.iter().map(|g| g.to_modvec(&order)));
    let mut gb = groebner(&input, &order, limits)?;
    loop {
        let mut fresh = Vec::new();
        for g in gb.elems() {
            let sp = SuperPoly::from_modvec(field, nvars, nodd, g);
            for i in 0..nodd {
                let th = SuperPoly::odd_var(field, nvars, nodd, i);
                let v = th.mul(&sp).to_modvec(&order);
                let r = gb.normal_form(&v)?;
                if !r.is_zero() {
                    fresh.push(r);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(gb);
        }
        let mut all = gb.elems().to_vec();
        all.extend(fresh);
        gb = groebner(&all, &order, limits)?;
    }
}

/// C-module generators of the θ-closure of `gens` in the free superalgebra
/// (homogeneous split first), as a reduced basis.
pub fn theta_closure(
    field: Field,
    nvars: usize,
    nodd: usize,
    gens: &[SuperPoly],
    limits: &Limits,
) -> Result<Vec<SuperPoly>> {
    let split = homogeneous_split_gens(gens);
    let gb = close_module(field, nvars, nodd, &[], &split, limits)?;
    Ok(gb
        .elems()
        .iter()
        .map(|v| SuperPoly::from_modvec(field, nvars, nodd, v))
        .collect())
}

/// Builds `k[evens | odds] / (gens)`.
pub fn make_ring(
    field: Field,
    even_names: &[&str],
    odd_names: &[&str],
    gens: &[SuperPoly],
    config: Config,
) -> Result<Ring> {
    let nvars = even_names.len();
    let nodd = odd_names.len();
    if nodd > config.max_odd {
        return Err(Error::TooManyOddVariables {
            got: nodd,
            cap: config.max_odd,
        });
    }
    if gens
        .iter()
        .any(|g| g.field() != field || g.nvars() != nvars || g.nodd() != nodd)
    {
        return Err(Error::AmbientMismatch);
    }
    let defining = homogeneous_split_gens(gens);
    let closed = close_module(field, nvars, nodd, &[], &defining, &config.limits)?;
    if closed.contains_unit_at(0) {
        return Err(Error::TrivialRing);
    }
    // R̄ = C / (𝔞 + J)_∅: the body components of the closed basis
    let bodies: Vec<Poly> = closed
        .elems()
        .iter()
        .map(|v| v.component(field, nvars, 0))
        .filter(|p| !p.is_zero())
        .collect();
    let reduced = CIdeal::new(field, nvars, &bodies, &config.limits)?;
    Ok(Ring(Arc::new(RingData {
        field,
        even_names: even_names.iter().map(|s| s.to_string()).collect(),
        odd_names: odd_names.iter().map(|s| s.to_string()).collect(),
        defining,
        closed,
        reduced,
        config,
    })))
}

/// Default odd-variable names `t1..td`.
pub fn default_odd_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("t{i}")).collect()
}

impl Ring {
    /// The free superalgebra `k[evens | odds]`.
    pub fn free(field: Field, even_names: &[&str], odd_names: &[&str]) -> Result<Ring> {
        make_ring(field, even_names, odd_names, &[], Config::default())
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.even_names.len()
    }

    pub fn nodd(&self) -> usize {
        self.0.odd_names.len()
    }

    pub fn rank(&self) -> usize {
        1 << self.nodd()
    }

    pub fn even_names(&self) -> &[String] {
        &self.0.even_names
    }

    pub fn odd_names(&self) -> &[String] {
        &self.0.odd_names
    }

    pub fn config(&self) -> &Config {
        &self.0.config
    }

    pub fn limits(&self) -> &Limits {
        &self.0.config.limits
    }

    pub fn order(&self) -> ModOrder {
        module_order(self.nodd())
    }

    /// Homogeneous defining generators.
    pub fn defining_gens(&self) -> &[SuperPoly] {
        &self.0.defining
    }

    /// θ-closed module basis of the defining ideal.
    pub fn defining_basis(&self) -> &GroebnerBasis {
        &self.0.closed
    }

    /// True when the defining ideal is zero (a free superalgebra).
    pub fn is_free(&self) -> bool {
        self.0.closed.is_zero_module()
    }

    /// The ideal `c ⊆ C` with `R̄ = C / c`.
    pub fn reduced_ideal(&self) -> &CIdeal {
        &self.0.reduced
    }

    pub fn zero(&self) -> SuperPoly {
        SuperPoly::zero(self.field(), self.nvars(), self.nodd())
    }

    pub fn one(&self) -> SuperPoly {
        SuperPoly::one(self.field(), self.nvars(), self.nodd())
    }

    pub fn int(&self, n: i64) -> SuperPoly {
        SuperPoly::constant(self.field(), self.nvars(), self.nodd(), self.field().int(n))
    }

    pub fn scalar(&self, c: Scalar) -> SuperPoly {
        SuperPoly::constant(self.field(), self.nvars(), self.nodd(), c)
    }

    /// Even variable by index.
    pub fn x(&self, i: usize) -> SuperPoly {
        SuperPoly::even_var(self.field(), self.nvars(), self.nodd(), i)
    }

    /// Odd variable by index (0-based: `theta(0)` is `θ1`).
    pub fn theta(&self, i: usize) -> SuperPoly {
        SuperPoly::odd_var(self.field(), self.nvars(), self.nodd(), i)
    }

    pub fn theta_product(&self, mask: OddMask) -> SuperPoly {
        SuperPoly::odd_monomial(self.field(), self.nvars(), self.nodd(), mask)
    }

    pub fn from_poly(&self, p: &Poly) -> SuperPoly {
        SuperPoly::from_poly(p, self.nodd())
    }

    pub fn poly_zero(&self) -> Poly {
        Poly::zero(self.field(), self.nvars())
    }

    pub fn var_index(&self, name: &str) -> Option<Variable> {
        if let Some(i) = self.0.even_names.iter().position(|n| n == name) {
            return Some(Variable::Even(i));
        }
        self.0
            .odd_names
            .iter()
            .position(|n| n == name)
            .map(Variable::Odd)
    }

    pub(crate) fn check(&self, f: &SuperPoly) -> Result<()> {
        if f.field() != self.field() || f.nvars() != self.nvars() || f.nodd() != self.nodd() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Canonical representative modulo the defining ideal.
    pub fn reduce(&self, f: &SuperPoly) -> Result<SuperPoly> {
        self.check(f)?;
        let order = self.order();
        let r = self.0.closed.normal_form(&f.to_modvec(&order))?;
        Ok(SuperPoly::from_modvec(
            self.field(),
            self.nvars(),
            self.nodd(),
            &r,
        ))
    }

    pub fn is_zero_element(&self, f: &SuperPoly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Product in `R`, reduced.
    pub fn mul(&self, a: &SuperPoly, b: &SuperPoly) -> Result<SuperPoly> {
        self.reduce(&a.checked_mul(b)?)
    }

    pub fn add(&self, a: &SuperPoly, b: &SuperPoly) -> Result<SuperPoly> {
        self.reduce(&a.checked_add(b)?)
    }

    pub(crate) fn modvec(&self, f: &SuperPoly) -> ModVec {
        f.to_modvec(&self.order())
    }

    pub(crate) fn superpoly(&self, v: &ModVec) -> SuperPoly {
        SuperPoly::from_modvec(self.field(), self.nvars(), self.nodd(), v)
    }

    /// Element stored in a module basis.
    pub fn superpoly_of(&self, v: &ModVec) -> SuperPoly {
        self.superpoly(v)
    }

    /// Text form using this ring's variable names.
    pub fn format(&self, f: &SuperPoly) -> String {
        crate::text::format_superpoly(f, self)
    }

    /// Rational point coordinates from integers.
    pub fn point(&self, coords: &[i64]) -> Vec<Scalar> {
        coords.iter().map(|&c| self.field().int(c)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    Even(usize),
    Odd(usize),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", self.field(), self.even_names().join(", "))?;
        if self.nodd() > 0 {
            write!(f, " | {}", self.odd_names().join(", "))?;
        }
        write!(f, "]")?;
        if !self.0.defining.is_empty() {
            let gens: Vec<String> = self
                .0
                .defining
                .iter()
                .map(|g| crate::text::format_superpoly(g, self))
                .collect();
            write!(f, " / ({})", gens.join(", "))?;
        }
        Ok(())
    }
}
