//! Syzygies, preimages and intersections of submodules of `C^r`, all read
//! off one Gröbner basis of an augmented module.
//!
//! For images `w_1..w_k ∈ C^r` the module spanned by `(w_i, e_i) ∈ C^{r+k}`
//! meets `0 ⊕ C^k` exactly in the relations among the `w_i`. Under a
//! position-over-term order with the first `r` positions most significant,
//! the basis elements leading in the last `k` positions generate that
//! intersection.

use crate::engine::groebner::{groebner, Limits};
use crate::engine::module::{MTerm, ModOrder, ModVec};
use crate::error::Result;
use crate::monomial::{Monomial, TermOrder};
use crate::scalar::Field;

/// Generators of `{ c ∈ C^k : Σ c_i w_i = 0 }`. Zero vectors among the
/// inputs contribute their unit syzygy.
pub fn syzygies(
    vectors: &[ModVec],
    rank: usize,
    nvars: usize,
    field: Field,
    term: &TermOrder,
    limits: &Limits,
) -> Result<Vec<ModVec>> {
    let k = vectors.len();
    let proj_order = ModOrder::module(term.clone(), k);
    let mut out = Vec::new();
    let mut nonzero = Vec::new();
    let mut index = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.is_zero() {
            out.push(unit(i, nvars, field, &proj_order));
        } else {
            nonzero.push(v.clone());
            index.push(i);
        }
    }
    let relations = preimage(&nonzero, &[], rank, nvars, field, term, limits)?;
    for r in relations {
        let terms = r
            .terms()
            .iter()
            .map(|t| MTerm {
                pos: index[t.pos],
                ..t.clone()
            })
            .collect();
        out.push(ModVec { terms }.reorder(&proj_order));
    }
    Ok(out)
}

fn unit(pos: usize, nvars: usize, field: Field, order: &ModOrder) -> ModVec {
    ModVec {
        terms: vec![MTerm {
            pos,
            mono: Monomial::one(nvars),
            coeff: field.one(),
        }],
    }
    .reorder(order)
}

/// `{ c ∈ C^k : Σ c_i w_i ∈ B }` for `B` spanned by `target`, returned as a
/// generating set in `C^k`.
pub fn preimage(
    images: &[ModVec],
    target: &[ModVec],
    rank: usize,
    nvars: usize,
    field: Field,
    term: &TermOrder,
    limits: &Limits,
) -> Result<Vec<ModVec>> {
    let k = images.len();
    let order = ModOrder::module(term.clone(), rank + k);
    let proj_order = ModOrder::module(term.clone(), k);
    let mut gens = Vec::with_capacity(k + target.len());
    for (i, w) in images.iter().enumerate() {
        gens.push(
            w.reorder(&order)
                .add(&unit(rank + i, nvars, field, &order), &order),
        );
    }
    for b in target {
        if !b.is_zero() {
            gens.push(b.reorder(&order));
        }
    }
    let gb = groebner(&gens, &order, limits)?;
    Ok(gb
        .elems()
        .iter()
        .filter(|g| g.lead().map(|t| t.pos >= rank).unwrap_or(false))
        .map(|g| g.shift_positions(-(rank as isize), &proj_order))
        .collect())
}

/// Generators of `span(a) ∩ span(b)` in `C^r`.
pub fn module_intersect(
    a: &[ModVec],
    b: &[ModVec],
    rank: usize,
    term: &TermOrder,
    limits: &Limits,
) -> Result<Vec<ModVec>> {
    // (g, g) for g in a and (h, 0) for h in b: elements with vanishing first
    // block carry an element of the intersection in the second block.
    let order = ModOrder::module(term.clone(), 2 * rank);
    let out_order = ModOrder::module(term.clone(), rank);
    let mut gens = Vec::new();
    for g in a.iter().filter(|g| !g.is_zero()) {
        let lifted = g.shift_positions(rank as isize, &order);
        gens.push(g.reorder(&order).add(&lifted, &order));
    }
    for h in b.iter().filter(|h| !h.is_zero()) {
        gens.push(h.reorder(&order));
    }
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let gb = groebner(&gens, &order, limits)?;
    Ok(gb
        .elems()
        .iter()
        .filter(|g| g.lead().map(|t| t.pos >= rank).unwrap_or(false))
        .map(|g| g.shift_positions(-(rank as isize), &out_order))
        .collect())
}
