//! Superideals of a presented superring and the structural predicates built
//! on them.

use std::fmt;
use std::sync::OnceLock;

use crate::engine::factor::{irreducible_cert, IrreducibleCert};
use crate::engine::groebner::{ideal_groebner, GroebnerBasis, Limits};
use crate::engine::ideal::CIdeal;
use crate::engine::module::ModVec;
use crate::engine::poly::Poly;
use crate::engine::syzygy::{module_intersect, preimage};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::odd::OddMask;
use crate::ring::{close_module, homogeneous_split_gens, Ring};
use crate::scalar::Field;
use crate::superpoly::{Parity, SuperPoly};
use crate::text::{format_poly, format_superpoly};
use crate::verdict::{Tri, Verdict};

/// A θ-closed, homogeneously generated ideal of a presented superring. The
/// stored basis always contains the defining ideal of the ring.
#[derive(Debug, Clone)]
pub struct SuperIdeal {
    ring: Ring,
    gb: GroebnerBasis,
    gens: OnceLock<Vec<SuperPoly>>,
}

impl PartialEq for SuperIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb == other.gb
    }
}

impl Eq for SuperIdeal {}

impl SuperIdeal {
    /// The superideal generated by `gens`; non-homogeneous inputs are split
    /// into their even and odd parts.
    pub fn new(ring: &Ring, gens: &[SuperPoly]) -> Result<SuperIdeal> {
        let mut reduced = Vec::new();
        for g in homogeneous_split_gens(gens) {
            let r = ring.reduce(&g)?;
            if !r.is_zero() && !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        let gb = close_module(
            ring.field(),
            ring.nvars(),
            ring.nodd(),
            ring.defining_basis().elems(),
            &reduced,
            ring.limits(),
        )?;
        Ok(SuperIdeal {
            ring: ring.clone(),
            gb,
            gens: OnceLock::from(reduced),
        })
    }

    pub(crate) fn from_module(ring: &Ring, vecs: &[ModVec]) -> Result<SuperIdeal> {
        let mut base = ring.defining_basis().elems().to_vec();
        base.extend(vecs.iter().filter(|v| !v.is_zero()).cloned());
        let gb = close_module(
            ring.field(),
            ring.nvars(),
            ring.nodd(),
            &base,
            &[],
            ring.limits(),
        )?;
        Ok(SuperIdeal {
            ring: ring.clone(),
            gb,
            gens: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> SuperIdeal {
        SuperIdeal {
            ring: ring.clone(),
            gb: ring.defining_basis().clone(),
            gens: OnceLock::from(Vec::new()),
        }
    }

    pub fn unit(ring: &Ring) -> Result<SuperIdeal> {
        SuperIdeal::new(ring, &[ring.one()])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Reduced module Gröbner basis (including the defining ideal).
    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Homogeneous generators, reduced modulo the defining ideal. For
    /// computed ideals a small generating set is extracted from the basis.
    pub fn gens(&self) -> &[SuperPoly] {
        self.gens.get_or_init(|| self.extract_gens())
    }

    fn extract_gens(&self) -> Vec<SuperPoly> {
        let ring = &self.ring;
        let mut cands: Vec<SuperPoly> = self
            .gb
            .elems()
            .iter()
            .map(|v| ring.reduce(&ring.superpoly(v)).expect("same ambient"))
            .filter(|p| !p.is_zero())
            .map(|p| p.monic())
            .collect();
        cands.sort_by_key(|p| {
            let odd = p.terms().iter().map(|t| t.odd.len()).max().unwrap_or(0);
            (p.even_degree(), odd, p.terms().len())
        });
        let mut kept: Vec<SuperPoly> = Vec::new();
        let mut acc = ring.defining_basis().clone();
        for c in cands {
            if acc == self.gb {
                break;
            }
            if acc.contains(&ring.modvec(&c)).unwrap_or(false) {
                continue;
            }
            match close_module(
                ring.field(),
                ring.nvars(),
                ring.nodd(),
                acc.elems(),
                std::slice::from_ref(&c),
                ring.limits(),
            ) {
                Ok(next) => acc = next,
                Err(_) => {
                    // fall back to the full basis
                    return self
                        .gb
                        .elems()
                        .iter()
                        .map(|v| ring.superpoly(v))
                        .filter(|p| !ring.is_zero_element(p).unwrap_or(true))
                        .collect();
                }
            }
            kept.push(c);
        }
        kept
    }

    fn same_ring(&self, other: &SuperIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, f: &SuperPoly) -> Result<bool> {
        self.ring.check(f)?;
        self.gb.contains(&self.ring.modvec(f))
    }

    pub fn contains_ideal(&self, other: &SuperIdeal) -> Result<bool> {
        self.same_ring(other)?;
        for v in other.gb.elems() {
            if !self.gb.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via the unique reduced basis.
    pub fn equals(&self, other: &SuperIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb == other.gb)
    }

    pub fn is_unit(&self) -> bool {
        self.gb.contains_unit_at(0)
    }

    /// True when the ideal is zero in the quotient ring.
    pub fn is_zero(&self) -> bool {
        &self.gb == self.ring.defining_basis()
    }

    /// Normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &SuperPoly) -> Result<SuperPoly> {
        self.ring.check(f)?;
        let r = self.gb.normal_form(&self.ring.modvec(f))?;
        Ok(self.ring.superpoly(&r))
    }

    pub fn sum(&self, other: &SuperIdeal) -> Result<SuperIdeal> {
        self.same_ring(other)?;
        let mut vecs = self.gb.elems().to_vec();
        vecs.extend(other.gb.elems().iter().cloned());
        SuperIdeal::from_module(&self.ring, &vecs)
    }

    /// The product ideal, spanned by pairwise products of generators.
    pub fn product(&self, other: &SuperIdeal) -> Result<SuperIdeal> {
        self.same_ring(other)?;
        let mut prods = Vec::new();
        for a in self.gens() {
            for b in other.gens() {
                let p = a.checked_mul(b)?;
                if !p.is_zero() {
                    prods.push(self.ring.modvec(&p));
                }
            }
        }
        SuperIdeal::from_module(&self.ring, &prods)
    }

    pub fn intersection(&self, other: &SuperIdeal) -> Result<SuperIdeal> {
        self.same_ring(other)?;
        let r = &self.ring;
        let vecs = module_intersect(
            self.gb.elems(),
            other.gb.elems(),
            r.rank(),
            &TermOrder::Grevlex,
            r.limits(),
        )?;
        SuperIdeal::from_module(r, &vecs)
    }

    /// `(self : f) = { g : g·f ∈ self }`.
    pub fn colon_element(&self, f: &SuperPoly) -> Result<SuperIdeal> {
        let r = &self.ring;
        r.check(f)?;
        // g = Σ a_I θ_I, so g·f = Σ a_I (θ_I f): the preimage of the ideal
        // under the C-linear map a ↦ Σ a_I (θ_I f)
        let images: Vec<ModVec> = OddMask::all(r.nodd())
            .map(|m| r.modvec(&r.theta_product(m).mul(f)))
            .collect();
        let pre = preimage(
            &images,
            self.gb.elems(),
            r.rank(),
            r.nvars(),
            r.field(),
            &TermOrder::Grevlex,
            r.limits(),
        )?;
        SuperIdeal::from_module(r, &pre)
    }

    /// `(self : other) = { g : g·other ⊆ self }`.
    pub fn colon(&self, other: &SuperIdeal) -> Result<SuperIdeal> {
        self.same_ring(other)?;
        let mut acc: Option<SuperIdeal> = None;
        for c in other.gens() {
            let q = self.colon_element(c)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => SuperIdeal::unit(&self.ring),
        }
    }

    /// The C-ideal of body components `self ∩ C` after adjoining the
    /// canonical superideal; always contains the reduced ideal of the ring.
    pub fn body_ideal(&self) -> Result<CIdeal> {
        let r = &self.ring;
        let bodies: Vec<Poly> = self
            .gb
            .elems()
            .iter()
            .map(|v| v.component(r.field(), r.nvars(), 0))
            .filter(|p| !p.is_zero())
            .collect();
        CIdeal::new(r.field(), r.nvars(), &bodies, r.limits())
    }

    /// The even elements of the basis.
    pub fn even_basis(&self) -> Vec<SuperPoly> {
        self.gb
            .elems()
            .iter()
            .map(|v| self.ring.superpoly(v))
            .filter(|p| p.parity() == Parity::Even)
            .collect()
    }

    pub fn is_prime(&self) -> Result<Verdict> {
        let r = &self.ring;
        if self.is_unit() {
            return Ok(Verdict::new(Tri::False, "unit ideal"));
        }
        for i in 0..r.nodd() {
            let th = r.theta(i);
            if !self.contains(&th)? {
                let name = &r.odd_names()[i];
                return Ok(Verdict::new(
                    Tri::False,
                    format!("{name}*{name} = 0 lies in the ideal but {name} does not"),
                )
                .with_witness(th));
            }
        }
        let body = self.body_ideal()?;
        commutative_verdict(r, &body, "quotient")
    }

    pub fn is_maximal(&self) -> Result<Verdict> {
        let prime = self.is_prime()?;
        if prime.value == Tri::False {
            return Ok(prime);
        }
        let dim = self.body_ideal()?.krull_dim_quotient();
        if dim > 0 {
            return Ok(Verdict::new(
                Tri::False,
                format!("quotient has Krull dimension {dim}"),
            ));
        }
        match prime.value {
            Tri::True => Ok(Verdict::new(
                Tri::True,
                format!("{}; quotient has Krull dimension 0", prime.reason),
            )),
            _ => Ok(Verdict::new(Tri::Unknown, prime.reason)),
        }
    }
}

impl fmt::Display for SuperIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens()
            .iter()
            .map(|g| format_superpoly(g, &self.ring))
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Outcome of the restricted commutative primality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutativePrime {
    Prime(String),
    /// `a·b` lies in the ideal while neither factor does.
    NotPrime {
        a: Poly,
        b: Poly,
    },
    Unit,
    Unknown(String),
}

/// Primality of `C / a` on a restricted decision set: linear ideals, and
/// ideals that become principal after eliminating linear relations, decided
/// by univariate irreducibility or a variable factor. Several variable
/// orders are tried for the elimination.
pub fn commutative_prime(a: &CIdeal, limits: &Limits) -> Result<CommutativePrime> {
    if a.is_unit() {
        return Ok(CommutativePrime::Unit);
    }
    if a.is_zero() {
        return Ok(CommutativePrime::Prime("polynomial ring".into()));
    }
    let mut first = None;
    for perm in variable_orders(a.nvars()) {
        let inv = inverse_perm(&perm);
        let gens: Vec<Poly> = a.gens().iter().map(|g| permute_vars(g, &perm)).collect();
        match prime_under_lex(&gens, a.field(), a.nvars(), limits)? {
            CommutativePrime::NotPrime { a, b } => {
                return Ok(CommutativePrime::NotPrime {
                    a: permute_vars(&a, &inv),
                    b: permute_vars(&b, &inv),
                })
            }
            CommutativePrime::Unknown(why) => {
                first.get_or_insert(why);
            }
            decided => return Ok(decided),
        }
    }
    Ok(CommutativePrime::Unknown(first.unwrap_or_default()))
}

/// Identity, rotations and reversal; every order when there are at most
/// four variables.
fn variable_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut push = |p: Vec<usize>| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    let id: Vec<usize> = (0..n).collect();
    push(id.clone());
    if n <= 4 {
        let mut stack = vec![(Vec::new(), id.clone())];
        while let Some((pre, left)) = stack.pop() {
            if left.is_empty() {
                push(pre);
                continue;
            }
            for (k, &v) in left.iter().enumerate().rev() {
                let mut p = pre.clone();
                p.push(v);
                let mut l = left.clone();
                l.remove(k);
                stack.push((p, l));
            }
        }
    } else {
        for r in 1..n {
            let mut p = id.clone();
            p.rotate_left(r);
            push(p);
        }
        push(id.iter().rev().copied().collect());
    }
    out
}

fn inverse_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v] = k;
    }
    inv
}

/// Renames variables so that new variable `k` is old variable `perm[k]`.
fn permute_vars(p: &Poly, perm: &[usize]) -> Poly {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let e = m.exps();
            let exps: Vec<u32> = perm.iter().map(|&v| e[v]).collect();
            (Monomial::from_exps(&exps), c.clone())
        })
        .collect();
    Poly::from_terms(p.field(), p.nvars(), terms)
}

fn prime_under_lex(
    gens: &[Poly],
    field: Field,
    n: usize,
    limits: &Limits,
) -> Result<CommutativePrime> {
    let lex = ideal_groebner(gens, TermOrder::Lex, limits)?;
    let mut rest: Vec<(Monomial, Poly)> = Vec::new();
    for v in lex.elems() {
        let lead = v.lead().expect("nonzero basis element").mono.clone();
        if lead.degree() != 1 {
            rest.push((lead, v.component(field, n, 0)));
        }
    }
    if rest.is_empty() {
        return Ok(CommutativePrime::Prime(
            "generated by linear forms; quotient is a polynomial ring".into(),
        ));
    }
    // a variable factor of a reduced basis element splits it into two
    // factors outside the ideal
    for (_, f) in &rest {
        for i in 0..n {
            if f.terms().iter().all(|(m, _)| m.exps()[i] > 0) {
                let x = Poly::var(field, n, i);
                let q = f.exact_div(&x).expect("variable divides every term");
                return Ok(CommutativePrime::NotPrime { a: x, b: q });
            }
        }
    }
    if rest.len() == 1 {
        let f = &rest[0].1;
        if f.support().len() == 1 {
            return Ok(match irreducible_cert(f)? {
                IrreducibleCert::Irreducible { witness_prime } => {
                    CommutativePrime::Prime(format!("irreducible modulo {witness_prime}"))
                }
                IrreducibleCert::Reducible(g) => {
                    let h = f.exact_div(&g).expect("certified factor");
                    CommutativePrime::NotPrime { a: g, b: h }
                }
                IrreducibleCert::Unknown => {
                    CommutativePrime::Unknown("no irreducibility certificate found".into())
                }
            });
        }
        return Ok(CommutativePrime::Unknown(
            "multivariate principal part outside the decision set".into(),
        ));
    }
    Ok(CommutativePrime::Unknown(
        "several nonlinear relations; outside the decision set".into(),
    ))
}

fn commutative_verdict(ring: &Ring, a: &CIdeal, what: &str) -> Result<Verdict> {
    let names = ring.even_names();
    Ok(match commutative_prime(a, ring.limits())? {
        CommutativePrime::Unit => Verdict::new(Tri::False, format!("{what} is the zero ring")),
        CommutativePrime::Prime(why) => {
            Verdict::new(Tri::True, format!("{what} is a domain: {why}"))
        }
        CommutativePrime::NotPrime { a, b } => Verdict::new(
            Tri::False,
            format!(
                "({})*({}) vanishes in the {what} while neither factor does",
                format_poly(&a, names),
                format_poly(&b, names)
            ),
        )
        .with_witness(ring.from_poly(&a)),
        CommutativePrime::Unknown(why) => Verdict::new(Tri::Unknown, why),
    })
}

/// The canonical superideal, generated by the odd variables.
pub fn canonical_superideal(ring: &Ring) -> Result<SuperIdeal> {
    let gens: Vec<SuperPoly> = (0..ring.nodd()).map(|i| ring.theta(i)).collect();
    SuperIdeal::new(ring, &gens)
}

/// The superreduced ring as a commutative presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superreduced {
    pub even_names: Vec<String>,
    pub ideal: CIdeal,
}

impl fmt::Display for Superreduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .ideal
            .gens()
            .iter()
            .map(|g| format_poly(g, &self.even_names))
            .collect();
        write!(
            f,
            "{}[{}] / ({})",
            self.ideal.field(),
            self.even_names.join(", "),
            if gens.is_empty() {
                "0".to_string()
            } else {
                gens.join(", ")
            }
        )
    }
}

pub fn superreduce(ring: &Ring) -> Superreduced {
    Superreduced {
        even_names: ring.even_names().to_vec(),
        ideal: ring.reduced_ideal().clone(),
    }
}

/// Whether `f` annihilates some nonzero element of the ring.
pub fn is_zerodivisor(ring: &Ring, f: &SuperPoly) -> Result<bool> {
    let f = ring.reduce(f)?;
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ann = SuperIdeal::zero(ring).colon_element(&f)?;
    Ok(!ann.is_zero())
}

/// The annihilator `(0 : f)` as a superideal.
pub fn annihilator(ring: &Ring, f: &SuperPoly) -> Result<SuperIdeal> {
    SuperIdeal::zero(ring).colon_element(f)
}

pub fn is_superdomain(ring: &Ring) -> Result<Verdict> {
    commutative_verdict(ring, ring.reduced_ideal(), "superreduced ring")
}

/// Strong superdomain check: every even element outside the square of the
/// odd part must be a non-zerodivisor. Certified structurally for free
/// superalgebras and purely even domains; refuted by a searched witness;
/// unknown otherwise.
pub fn is_strong_superdomain(ring: &Ring, probes: &[SuperPoly]) -> Result<Verdict> {
    let sd = is_superdomain(ring)?;
    if sd.value == Tri::True && ring.is_free() {
        return Ok(Verdict::new(
            Tri::True,
            "free superalgebra: multiplication by an element with nonzero body is injective",
        ));
    }
    if sd.value == Tri::True && ring.nodd() == 0 {
        return Ok(Verdict::new(
            Tri::True,
            "purely even domain: every nonzero element is a non-zerodivisor",
        ));
    }
    let witness = strong_witness(ring, probes)?;
    if sd.value == Tri::False {
        let v = Verdict::new(Tri::False, format!("not a superdomain: {}", sd.reason));
        return Ok(match witness.or(sd.witness) {
            Some(w) => v.with_witness(w),
            None => v,
        });
    }
    Ok(match witness {
        Some(w) => Verdict::new(
            Tri::False,
            format!(
                "{} is even, outside the square of the odd part, and a zerodivisor",
                format_superpoly(&w, ring)
            ),
        )
        .with_witness(w),
        None => Verdict::new(
            Tri::Unknown,
            "no zerodivisor witness among the searched candidates",
        ),
    })
}

fn strong_witness(ring: &Ring, probes: &[SuperPoly]) -> Result<Option<SuperPoly>> {
    let mut cands: Vec<SuperPoly> = (0..ring.nvars()).map(|i| ring.x(i)).collect();
    for v in ring.defining_basis().elems() {
        let sp = ring.superpoly(v);
        for (_, c) in sp.grassmann_components() {
            if !c.is_constant() {
                cands.push(ring.from_poly(&c.monic()));
            }
        }
    }
    for p in probes {
        ring.check(p)?;
        let (e, _) = p.homogeneous_split();
        cands.push(e);
    }
    let mut seen = Vec::new();
    for c in cands {
        if seen.contains(&c) {
            continue;
        }
        seen.push(c.clone());
        if ring.reduced_ideal().contains(&c.body()) {
            continue;
        }
        if is_zerodivisor(ring, &c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, Config};
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn counter() -> Ring {
        let f = Ring::free(Q, &["X"], &["t1", "t2"]).unwrap();
        let g = f.x(0).mul(&f.theta(0)).mul(&f.theta(1));
        make_ring(Q, &["X"], &["t1", "t2"], &[g], Config::default()).unwrap()
    }

    #[test]
    fn membership_by_division() {
        let r = Ring::free(Q, &["x", "y"], &[]).unwrap();
        let (x, y) = (r.x(0), r.x(1));
        let i = SuperIdeal::new(&r, &[x.pow(2), x.mul(&y)]).unwrap();
        assert!(i.contains(&x.pow(2).mul(&y)).unwrap());
        assert!(!i.contains(&y.pow(2)).unwrap());
    }

    #[test]
    fn product_of_odd_principals() {
        let r = Ring::free(Q, &["x"], &["t1", "t2"]).unwrap();
        let a = SuperIdeal::new(&r, &[r.theta(0)]).unwrap();
        let b = SuperIdeal::new(&r, &[r.theta(1)]).unwrap();
        let p = a.product(&b).unwrap();
        let expect = SuperIdeal::new(&r, &[r.theta(0).mul(&r.theta(1))]).unwrap();
        assert!(p.equals(&expect).unwrap());
    }

    #[test]
    fn annihilator_of_top_product() {
        let r = counter();
        let z = r.theta(0).mul(&r.theta(1));
        let ann = annihilator(&r, &z).unwrap();
        let expect = SuperIdeal::new(&r, &[r.x(0), r.theta(0), r.theta(1)]).unwrap();
        assert!(ann.equals(&expect).unwrap());
        // oracle: a + b θ1θ2 + odd times θ1θ2 is a θ1θ2, zero iff X | a
        assert!(ann.contains(&r.x(0).pow(3)).unwrap());
        assert!(!ann.contains(&r.one()).unwrap());
        assert!(!ann.contains(&r.x(0).add(&r.one())).unwrap());
    }

    #[test]
    fn zerodivisors() {
        let r = counter();
        assert!(is_zerodivisor(&r, &r.x(0)).unwrap());
        let f = Ring::free(Q, &["x"], &["t"]).unwrap();
        assert!(!is_zerodivisor(&f, &f.x(0)).unwrap());
        assert!(is_zerodivisor(&f, &f.theta(0)).unwrap());
        assert_eq!(is_zerodivisor(&f, &f.zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn canonical_and_superreduced() {
        let r = Ring::free(Q, &["x"], &["t1", "t2"]).unwrap();
        let j = canonical_superideal(&r).unwrap();
        assert_eq!(j.gens(), &[r.theta(0), r.theta(1)]);
        let e = Ring::free(Q, &["x"], &[]).unwrap();
        assert!(canonical_superideal(&e).unwrap().is_zero());
        assert!(superreduce(&counter()).ideal.is_zero());
    }

    #[test]
    fn primality_examples() {
        let r = Ring::free(Q, &["x"], &["t1", "t2"]).unwrap();
        let j = canonical_superideal(&r).unwrap();
        assert_eq!(j.is_prime().unwrap().value, Tri::True);
        let s = Ring::free(Q, &["x"], &["t"]).unwrap();
        let m = SuperIdeal::new(&s, &[s.x(0), s.theta(0)]).unwrap();
        assert_eq!(m.is_maximal().unwrap().value, Tri::True);
        let px = SuperIdeal::new(&s, &[s.x(0)]).unwrap();
        let v = px.is_prime().unwrap();
        assert_eq!(v.value, Tri::False);
        assert_eq!(v.witness, Some(s.theta(0)));
        assert_eq!(j.is_maximal().unwrap().value, Tri::False);
    }

    #[test]
    fn primality_decision_set() {
        let r = Ring::free(Q, &["x", "y"], &[]).unwrap();
        let (x, y) = (r.x(0), r.x(1));
        let one = r.one();
        let irreducible = SuperIdeal::new(&r, &[x.pow(2).add(&one), y.sub(&x)]).unwrap();
        assert_eq!(irreducible.is_prime().unwrap().value, Tri::True);
        let split = SuperIdeal::new(&r, &[x.pow(2).sub(&one)]).unwrap();
        assert_eq!(split.is_prime().unwrap().value, Tri::False);
        let cusp = SuperIdeal::new(&r, &[y.pow(2).sub(&x.pow(3))]).unwrap();
        assert_eq!(cusp.is_prime().unwrap().value, Tri::Unknown);
        let monomial = SuperIdeal::new(&r, &[x.mul(&y)]).unwrap();
        assert_eq!(monomial.is_prime().unwrap().value, Tri::False);
    }

    #[test]
    fn superdomain_verdicts() {
        let f = Ring::free(Q, &["x"], &["t"]).unwrap();
        assert_eq!(is_superdomain(&f).unwrap().value, Tri::True);
        assert_eq!(is_strong_superdomain(&f, &[]).unwrap().value, Tri::True);

        let r = counter();
        assert_eq!(is_superdomain(&r).unwrap().value, Tri::True);
        let s = is_strong_superdomain(&r, &[]).unwrap();
        assert_eq!(s.value, Tri::False);
        assert_eq!(s.witness, Some(r.x(0)));

        let e = Ring::free(Q, &["x", "y"], &[]).unwrap();
        let xy = e.x(0).mul(&e.x(1));
        let n = make_ring(Q, &["x", "y"], &[], &[xy], Config::default()).unwrap();
        assert_eq!(is_superdomain(&n).unwrap().value, Tri::False);
        assert_eq!(is_strong_superdomain(&n, &[]).unwrap().value, Tri::False);
    }

    #[test]
    fn lattice_relations_on_counter_ring() {
        let r = counter();
        let b = SuperIdeal::new(&r, &[r.x(0), r.theta(0)]).unwrap();
        let c = SuperIdeal::new(&r, &[r.theta(1)]).unwrap();
        let bc = b.product(&c).unwrap();
        let meet = b.intersection(&c).unwrap();
        assert!(meet.contains_ideal(&bc).unwrap());
        assert!(b.contains_ideal(&meet).unwrap());
        assert!(b.sum(&c).unwrap().contains_ideal(&b).unwrap());
        let q = b.colon(&c).unwrap();
        assert!(b.contains_ideal(&q.product(&c).unwrap()).unwrap());
        for g in q.basis().elems() {
            for i in 0..r.nodd() {
                let v = r.theta(i).mul(&r.superpoly(g));
                assert!(q.contains(&v).unwrap());
            }
        }
    }
}
