//! Buchberger's algorithm with the Gebauer–Möller pair criteria, for ideals
//! of `C = k[x1..xn]` and submodules of `C^r`.

use std::cell::Cell;
use std::time::Instant;

use crate::engine::module::{MTerm, ModOrder, ModVec};
use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::scalar::Field;

/// Resource caps for Gröbner computations. Exceeding one is an error, never
/// a truncated answer.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest total degree an S-pair lcm may reach.
    pub max_degree: u32,
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 64,
            deadline: None,
        }
    }
}

impl Limits {
    fn check_time(&self) -> Result<()> {
        let scoped = SCOPED_DEADLINE.with(|c| c.get());
        let now = Instant::now();
        if [self.deadline, scoped].iter().flatten().any(|d| now > *d) {
            return Err(Error::Resource("timeout".into()));
        }
        Ok(())
    }
}

thread_local! {
    static SCOPED_DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

/// Runs `f` with an additional deadline applied to every Gröbner computation
/// on the current thread.
pub fn with_deadline<T>(deadline: Option<Instant>, f: impl FnOnce() -> T) -> T {
    struct Restore(Option<Instant>);
    impl Drop for Restore {
        fn drop(&mut self) {
            SCOPED_DEADLINE.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(SCOPED_DEADLINE.with(|c| c.replace(deadline)));
    f()
}

/// A reduced, monic Gröbner basis. Elements are sorted ascending by leading
/// term, so two bases of the same module under the same order compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    order: ModOrder,
    elems: Vec<ModVec>,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

fn lead(v: &ModVec) -> &MTerm {
    v.lead().expect("nonzero element")
}

/// Fully reduces `f` by the elements of `basis` that are flagged active.
fn reduce(f: &ModVec, basis: &[ModVec], active: &[bool], order: &ModOrder) -> ModVec {
    let mut p = f.clone();
    let mut k = 0;
    while k < p.terms.len() {
        let t = &p.terms[k];
        let divisor = basis.iter().zip(active).find(|(g, &a)| {
            a && {
                let l = lead(g);
                l.pos == t.pos && l.mono.divides(&t.mono)
            }
        });
        match divisor {
            Some((g, _)) => {
                let l = lead(g);
                let c = t.coeff.div(&l.coeff);
                let m = l.mono.quotient_of(&t.mono);
                p = p.sub_mul(&c, &m, g, order);
            }
            None => k += 1,
        }
    }
    p
}

fn spoly(f: &ModVec, g: &ModVec, lcm: &Monomial, order: &ModOrder) -> ModVec {
    let lf = lead(f);
    let lg = lead(g);
    let mf = lf.mono.quotient_of(lcm);
    let mg = lg.mono.quotient_of(lcm);
    let minus_inv = lf.coeff.inv().neg();
    ModVec::zero()
        .sub_mul(&minus_inv, &mf, f, order)
        .sub_mul(&lg.coeff.inv(), &mg, g, order)
}

struct Builder<'a> {
    order: &'a ModOrder,
    limits: &'a Limits,
    basis: Vec<ModVec>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    product_criterion: bool,
}

impl Builder<'_> {
    fn disjoint(&self, a: &Monomial, b: &Monomial) -> bool {
        self.product_criterion && a.is_coprime(b)
    }

    fn insert(&mut self, h: ModVec) {
        let h_idx = self.basis.len();
        let lh = lead(&h).clone();
        self.basis.push(h);
        self.active.push(true);

        let cands: Vec<(usize, Monomial)> = (0..h_idx)
            .filter(|&g| self.active[g] && lead(&self.basis[g]).pos == lh.pos)
            .map(|g| (g, lh.mono.lcm(&lead(&self.basis[g]).mono)))
            .collect();

        // Gebauer–Möller: drop (h, g1) when another (h, g2) has an lcm
        // dividing lcm(h, g1).
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g1, l1)) in cands.iter().enumerate() {
            let lg1 = &lead(&self.basis[*g1]).mono;
            if self.disjoint(&lh.mono, lg1) {
                kept.push((*g1, l1.clone()));
                continue;
            }
            let dominated = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l1))
                || kept.iter().any(|(_, l2)| l2.divides(l1));
            if !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.disjoint(&lh.mono, &lead(&self.basis[*g]).mono))
            .map(|(g, lcm)| Pair {
                i: g,
                j: h_idx,
                lcm,
                pos: lh.pos,
            })
            .collect();

        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.pos != lh.pos || !lh.mono.divides(&p.lcm) {
                return true;
            }
            let li = lead(&basis[p.i]).mono.lcm(&lh.mono);
            let lj = lead(&basis[p.j]).mono.lcm(&lh.mono);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in 0..h_idx {
            if self.active[g] {
                let l = lead(&self.basis[g]);
                if l.pos == lh.pos && lh.mono.divides(&l.mono) {
                    self.active[g] = false;
                }
            }
        }
    }

    fn add_generator(&mut self, g: &ModVec) -> Result<()> {
        let h = reduce(g, &self.basis, &self.active, self.order);
        if !h.is_zero() {
            self.insert(h.monic());
        }
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let pa = &self.pairs[a];
                let pb = &self.pairs[b];
                pa.lcm.degree().cmp(&pb.lcm.degree()).then_with(|| {
                    let ta = MTerm {
                        pos: pa.pos,
                        mono: pa.lcm.clone(),
                        coeff: Field::Rational.zero(),
                    };
                    let tb = MTerm {
                        pos: pb.pos,
                        mono: pb.lcm.clone(),
                        coeff: Field::Rational.zero(),
                    };
                    order.cmp(&ta, &tb)
                })
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.next_pair() {
            self.limits.check_time()?;
            if p.lcm.degree() > self.limits.max_degree {
                return Err(Error::Resource(format!(
                    "S-pair degree {} exceeds the degree cap {}",
                    p.lcm.degree(),
                    self.limits.max_degree
                )));
            }
            let s = spoly(&self.basis[p.i], &self.basis[p.j], &p.lcm, self.order);
            let h = reduce(&s, &self.basis, &self.active, self.order);
            if !h.is_zero() {
                self.insert(h.monic());
            }
        }
        Ok(())
    }

    fn finish(self) -> GroebnerBasis {
        let order = self.order.clone();
        let minimal: Vec<ModVec> = self
            .basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g.clone())
            .collect();
        let mut elems = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let flags: Vec<bool> = (0..minimal.len()).map(|j| j != k).collect();
            let g = &minimal[k];
            // the leading term is irreducible by minimality; reduce the tail
            let head = ModVec {
                terms: vec![g.terms[0].clone()],
            };
            let tail = ModVec {
                terms: g.terms[1..].to_vec(),
            };
            let red = reduce(&tail, &minimal, &flags, &order);
            elems.push(head.add(&red, &order));
        }
        elems.sort_by(|a, b| order.cmp(lead(a), lead(b)));
        GroebnerBasis { order, elems }
    }
}

/// Computes the reduced Gröbner basis of the span of `gens`.
pub fn groebner(gens: &[ModVec], order: &ModOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let mut b = Builder {
        order,
        limits,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        product_criterion: order.rank == 1,
    };
    for g in gens {
        let g = g.reorder(order);
        if let Some(t) = g.lead() {
            if t.pos >= order.rank {
                return Err(Error::RankMismatch {
                    expected: order.rank,
                    got: t.pos + 1,
                });
            }
        }
        b.add_generator(&g)?;
    }
    b.run()?;
    Ok(b.finish())
}

impl GroebnerBasis {
    pub fn order(&self) -> &ModOrder {
        &self.order
    }

    pub fn elems(&self) -> &[ModVec] {
        &self.elems
    }

    pub fn is_zero_module(&self) -> bool {
        self.elems.is_empty()
    }

    /// The unique fully reduced remainder of `v`.
    pub fn normal_form(&self, v: &ModVec) -> Result<ModVec> {
        if let Some(t) = v.terms.iter().map(|t| t.pos).max() {
            if t >= self.order.rank {
                return Err(Error::RankMismatch {
                    expected: self.order.rank,
                    got: t + 1,
                });
            }
        }
        let flags = vec![true; self.elems.len()];
        Ok(reduce(
            &v.reorder(&self.order),
            &self.elems,
            &flags,
            &self.order,
        ))
    }

    pub fn contains(&self, v: &ModVec) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// True when the basis contains a unit vector `e_pos` for some position.
    pub fn contains_unit_at(&self, pos: usize) -> bool {
        self.elems.iter().any(|g| {
            let l = lead(g);
            l.pos == pos && l.mono.is_one()
        })
    }

    /// Leading monomials of the elements leading at `pos`.
    pub fn leading_monomials(&self, pos: usize) -> Vec<Monomial> {
        self.elems
            .iter()
            .map(lead)
            .filter(|t| t.pos == pos)
            .map(|t| t.mono.clone())
            .collect()
    }

    /// For rank-one bases: the elements as polynomials.
    pub fn polys(&self, field: Field, nvars: usize) -> Vec<Poly> {
        self.elems
            .iter()
            .map(|g| g.component(field, nvars, 0))
            .collect()
    }
}

/// Gröbner basis of the ideal generated by `polys` in `k[x1..xn]`.
pub fn ideal_groebner(polys: &[Poly], term: TermOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let order = ModOrder::ideal(term);
    let gens: Vec<ModVec> = polys.iter().map(|p| ModVec::from_poly(p, &order)).collect();
    groebner(&gens, &order, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(Q, n, i)
    }

    fn c(n: usize, v: i64) -> Poly {
        Poly::constant(Q, n, Q.int(v))
    }

    #[test]
    fn x2_xy_is_already_a_basis() {
        let gens = [x(2, 0).mul(&x(2, 0)), x(2, 0).mul(&x(2, 1))];
        let gb = ideal_groebner(&gens, TermOrder::Grevlex, &Limits::default()).unwrap();
        // ascending by leading term
        assert_eq!(gb.polys(Q, 2), vec![gens[1].clone(), gens[0].clone()]);
        let x2y = x(2, 0).mul(&x(2, 0)).mul(&x(2, 1));
        let order = gb.order().clone();
        assert!(gb
            .normal_form(&ModVec::from_poly(&x2y, &order))
            .unwrap()
            .is_zero());
        let y2 = x(2, 1).mul(&x(2, 1));
        assert_eq!(
            gb.normal_form(&ModVec::from_poly(&y2, &order)).unwrap(),
            ModVec::from_poly(&y2, &order)
        );
        assert!(gb.normal_form(&ModVec::zero()).unwrap().is_zero());
    }

    #[test]
    fn unit_ideal() {
        let gens = [x(1, 0), x(1, 0).add(&c(1, 1))];
        let gb = ideal_groebner(&gens, TermOrder::Grevlex, &Limits::default()).unwrap();
        assert_eq!(gb.polys(Q, 1), vec![c(1, 1)]);
    }

    #[test]
    fn disjoint_positions() {
        let order = ModOrder::module(TermOrder::Grevlex, 2);
        let z = Poly::zero(Q, 1);
        let a = ModVec::from_components(&[x(1, 0), z.clone()], &order);
        let b = ModVec::from_components(&[z, x(1, 0)], &order);
        let gb = groebner(&[a.clone(), b.clone()], &order, &Limits::default()).unwrap();
        assert_eq!(gb.elems(), &[b, a]);
    }

    #[test]
    fn module_tail_interaction_is_kept() {
        // (x, 1) and (y, 0): the S-vector y·(x,1) - x·(y,0) = (0, y) is new.
        let order = ModOrder::module(TermOrder::Grevlex, 2);
        let a = ModVec::from_components(&[x(2, 0), c(2, 1)], &order);
        let b = ModVec::from_components(&[x(2, 1), Poly::zero(Q, 2)], &order);
        let gb = groebner(&[a, b], &order, &Limits::default()).unwrap();
        let target = ModVec::from_components(&[Poly::zero(Q, 2), x(2, 1)], &order);
        assert!(gb.contains(&target).unwrap());
    }

    #[test]
    fn degree_cap_is_an_error() {
        let gens = [
            x(2, 0).pow(5).sub(&x(2, 1)),
            x(2, 1).pow(5).sub(&x(2, 0)).add(&c(2, 1)),
        ];
        let limits = Limits {
            max_degree: 3,
            deadline: None,
        };
        assert!(matches!(
            ideal_groebner(&gens, TermOrder::Lex, &limits),
            Err(Error::Resource(_))
        ));
    }
}
