//! Krull superdimension `r|s`: `r` is the Krull dimension of the
//! superreduced ring, `s` the longest system of odd parameters among the
//! odd generators.

use std::fmt;

use crate::engine::ideal::CIdeal;
use crate::error::Result;
use crate::odd::OddMask;
use crate::ring::Ring;
use crate::superideal::annihilator;
use crate::superpoly::SuperPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperDimension {
    pub even: usize,
    pub odd: usize,
}

impl fmt::Display for SuperDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// A subset of odd generators whose product has an annihilator of full
/// dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddParameterWitness {
    pub subset: OddMask,
    pub annihilator: CIdeal,
}

pub fn even_ksdim(ring: &Ring) -> usize {
    ring.reduced_ideal().krull_dim_quotient().max(0) as usize
}

/// `Ann_{R0}(g)` modulo nilpotents, as an ideal of the even polynomial ring;
/// the unit ideal when `g` is zero in the ring.
pub fn ann_even(ring: &Ring, g: &SuperPoly) -> Result<CIdeal> {
    let g = ring.reduce(g)?;
    if g.is_zero() {
        return Ok(CIdeal::unit(ring.field(), ring.nvars()));
    }
    annihilator(ring, &g)?.body_ideal()
}

/// Longest system of odd parameters among `gens` (the product over a subset
/// is taken in the given order).
pub fn odd_ksdim_over(
    ring: &Ring,
    gens: &[SuperPoly],
) -> Result<(usize, Option<OddParameterWitness>)> {
    let target = even_ksdim(ring) as i64;
    let k = gens.len();
    for l in (1..=k).rev() {
        for subset in OddMask::all(k).filter(|m| m.len() as usize == l) {
            let mut prod = ring.one();
            for i in subset.indices() {
                prod = prod.mul(&gens[i - 1]);
            }
            let ann = ann_even(ring, &prod)?;
            if ann.krull_dim_quotient() == target {
                return Ok((
                    l,
                    Some(OddParameterWitness {
                        subset,
                        annihilator: ann,
                    }),
                ));
            }
        }
    }
    Ok((0, None))
}

pub fn odd_ksdim(ring: &Ring) -> Result<(usize, Option<OddParameterWitness>)> {
    let gens: Vec<SuperPoly> = (0..ring.nodd()).map(|i| ring.theta(i)).collect();
    odd_ksdim_over(ring, &gens)
}

pub fn ksdim(ring: &Ring) -> Result<SuperDimension> {
    Ok(SuperDimension {
        even: even_ksdim(ring),
        odd: odd_ksdim(ring)?.0,
    })
}
