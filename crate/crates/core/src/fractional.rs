//! Fractional superideals `M = (1/den)·N` inside the total ring of fractions,
//! their products and inverses, and elementwise fraction arithmetic.

use std::fmt;

use crate::engine::groebner::Limits;
use crate::engine::ideal::{ideal_intersect, CIdeal};
use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::superideal::{is_zerodivisor, SuperIdeal};
use crate::superpoly::{Parity, SuperPoly};
use crate::text::format_superpoly;
use crate::verdict::Tri;

/// Greatest common divisor in the even polynomial ring, normalized monic.
pub fn poly_gcd(f: &Poly, g: &Poly, limits: &Limits) -> Result<Poly> {
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Poly::one(f.field(), f.nvars()));
    }
    let (field, n) = (f.field(), f.nvars());
    let a = CIdeal::new(field, n, std::slice::from_ref(f), limits)?;
    let b = CIdeal::new(field, n, std::slice::from_ref(g), limits)?;
    let lcm = ideal_intersect(&a, &b, limits)?
        .gens()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("empty intersection of principal ideals".into()))?;
    f.mul(g)
        .exact_div(&lcm)
        .map(|q| q.monic())
        .ok_or_else(|| Error::Internal("lcm does not divide the product".into()))
}

fn check_denominator(ring: &Ring, den: &SuperPoly) -> Result<SuperPoly> {
    let den = ring.reduce(den)?;
    if den.is_zero() {
        return Err(Error::ZerodivisorDenominator);
    }
    if den.parity() != Parity::Even {
        return Err(Error::NotEven);
    }
    if is_zerodivisor(ring, &den)? {
        return Err(Error::ZerodivisorDenominator);
    }
    Ok(den.monic())
}

/// Largest common factor of `den` (when it is a pure polynomial in the even
/// variables) and every Grassmann component of `nums`.
fn common_factor(ring: &Ring, den: &SuperPoly, nums: &[SuperPoly]) -> Result<Option<Poly>> {
    if !den.is_body_only() {
        return Ok(None);
    }
    let mut h = den.body();
    for g in nums {
        for (_, c) in g.grassmann_components() {
            if h.is_constant() {
                return Ok(None);
            }
            h = poly_gcd(&h, &c, ring.limits())?;
        }
    }
    if h.is_constant() {
        return Ok(None);
    }
    Ok(Some(h))
}

fn divide_components(ring: &Ring, f: &SuperPoly, h: &Poly) -> SuperPoly {
    let comps = f
        .grassmann_components()
        .into_iter()
        .map(|(m, c)| (m, c.exact_div(h).expect("common factor divides")))
        .collect();
    SuperPoly::from_components(ring.field(), ring.nvars(), ring.nodd(), &comps)
}

/// `M = (1/den)·N` with `den` an even non-zerodivisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalSuperideal {
    pub num: SuperIdeal,
    pub den: SuperPoly,
}

impl FractionalSuperideal {
    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    /// The ring itself, `(1)/1`.
    pub fn unit(ring: &Ring) -> Result<FractionalSuperideal> {
        Ok(FractionalSuperideal {
            num: SuperIdeal::unit(ring)?,
            den: ring.one(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for FractionalSuperideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.num)?;
        if !self.den.is_body_only() || !self.den.body().is_constant() {
            write!(f, "/({})", format_superpoly(&self.den, self.ring()))?;
        }
        Ok(())
    }
}

pub fn frac_make(ring: &Ring, gens: &[SuperPoly], den: &SuperPoly) -> Result<FractionalSuperideal> {
    let den = check_denominator(ring, den)?;
    Ok(FractionalSuperideal {
        num: SuperIdeal::new(ring, gens)?,
        den,
    })
}

/// Wraps an ideal of the ring as the fractional superideal `N/1`.
pub fn frac_from_ideal(n: &SuperIdeal) -> FractionalSuperideal {
    FractionalSuperideal {
        num: n.clone(),
        den: n.ring().one(),
    }
}

/// Cancels the largest common polynomial factor of the denominator and all
/// numerator generators, when it is a non-zerodivisor.
pub fn frac_normalize(m: &FractionalSuperideal) -> Result<FractionalSuperideal> {
    let ring = m.ring();
    let gens = m.num.gens().to_vec();
    let Some(h) = common_factor(ring, &m.den, &gens)? else {
        return Ok(m.clone());
    };
    let hs = ring.from_poly(&h);
    if is_zerodivisor(ring, &hs)? {
        return Ok(m.clone());
    }
    let new_gens: Vec<SuperPoly> = gens
        .iter()
        .map(|g| divide_components(ring, g, &h))
        .collect();
    let den = ring.from_poly(
        &m.den
            .body()
            .exact_div(&h)
            .expect("factor of the denominator"),
    );
    Ok(FractionalSuperideal {
        num: SuperIdeal::new(ring, &new_gens)?,
        den: den.monic(),
    })
}

pub fn frac_product(
    a: &FractionalSuperideal,
    b: &FractionalSuperideal,
) -> Result<FractionalSuperideal> {
    let ring = a.ring();
    if ring != b.ring() {
        return Err(Error::AmbientMismatch);
    }
    let p = FractionalSuperideal {
        num: a.num.product(&b.num)?,
        den: ring.mul(&a.den, &b.den)?.monic(),
    };
    frac_normalize(&p)
}

/// Ideal generated by `s·N`.
fn scaled(n: &SuperIdeal, s: &SuperPoly) -> Result<SuperIdeal> {
    let gens: Vec<SuperPoly> = n.gens().iter().map(|g| s.mul(g)).collect();
    SuperIdeal::new(n.ring(), &gens)
}

/// Cross-multiplied equality `den_b·N_a = den_a·N_b`.
pub fn frac_equal(a: &FractionalSuperideal, b: &FractionalSuperideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::AmbientMismatch);
    }
    scaled(&a.num, &b.den)?.equals(&scaled(&b.num, &a.den)?)
}

#[derive(Debug, Clone)]
pub enum Inverse {
    /// `inverse = M⁻¹`, computed through the even non-zerodivisor `unit ∈ N`.
    Found {
        inverse: FractionalSuperideal,
        unit: SuperPoly,
    },
    NoUnitCandidate,
}

/// Even non-zerodivisor in `n`: even basis elements with nonzero body, then
/// their pairwise sums, then the hints.
pub fn find_unit_candidate(n: &SuperIdeal, hints: &[SuperPoly]) -> Result<Option<SuperPoly>> {
    let ring = n.ring();
    let mut base: Vec<SuperPoly> = Vec::new();
    for g in n.gens().iter().cloned().chain(n.even_basis()) {
        let g = ring.reduce(&g)?;
        if g.parity() == Parity::Even && !g.body().is_zero() && !base.contains(&g) {
            base.push(g);
        }
    }
    let mut cands = base.clone();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            cands.push(base[i].add(&base[j]));
            cands.push(base[i].sub(&base[j]));
        }
    }
    for h in hints {
        ring.check(h)?;
        let (e, _) = h.homogeneous_split();
        if n.contains(&e)? {
            cands.push(e);
        }
    }
    for c in cands {
        let c = ring.reduce(&c)?;
        if c.is_zero() {
            continue;
        }
        if !is_zerodivisor(ring, &c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn frac_inverse(m: &FractionalSuperideal) -> Result<Inverse> {
    frac_inverse_with_hints(m, &[])
}

/// `M⁻¹ = (1/c)·((c·den)R : N)` for an even non-zerodivisor `c ∈ N`.
pub fn frac_inverse_with_hints(m: &FractionalSuperideal, hints: &[SuperPoly]) -> Result<Inverse> {
    if m.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = m.ring();
    let Some(c) = find_unit_candidate(&m.num, hints)? else {
        return Ok(Inverse::NoUnitCandidate);
    };
    let cd = ring.mul(&c, &m.den)?;
    let principal = SuperIdeal::new(ring, &[cd])?;
    let q = principal.colon(&m.num)?;
    let inverse = frac_normalize(&FractionalSuperideal {
        num: q,
        den: c.monic(),
    })?;
    Ok(Inverse::Found { inverse, unit: c })
}

#[derive(Debug, Clone)]
pub struct InvertibilityReport {
    pub value: bool,
    pub inverse: Option<FractionalSuperideal>,
    /// `M⁻¹M` as an ideal of the ring; present when an inverse was found.
    pub witness: Option<SuperIdeal>,
    pub no_unit_candidate: bool,
}

pub fn is_invertible(m: &FractionalSuperideal) -> Result<InvertibilityReport> {
    is_invertible_with_hints(m, &[])
}

pub fn is_invertible_with_hints(
    m: &FractionalSuperideal,
    hints: &[SuperPoly],
) -> Result<InvertibilityReport> {
    let ring = m.ring();
    match frac_inverse_with_hints(m, hints)? {
        Inverse::NoUnitCandidate => Ok(InvertibilityReport {
            value: false,
            inverse: None,
            witness: None,
            no_unit_candidate: true,
        }),
        Inverse::Found { inverse, .. } => {
            // M⁻¹M = P / D with D an even non-zerodivisor; as an ideal of R
            // it is (P : D)
            let p = inverse.num.product(&m.num)?;
            let d = ring.mul(&inverse.den, &m.den)?;
            let w = p.colon_element(&d)?;
            Ok(InvertibilityReport {
                value: w.is_unit(),
                inverse: Some(inverse),
                witness: Some(w),
                no_unit_candidate: false,
            })
        }
    }
}

/// Whether `b ⊆ c` after localizing at the prime `p`.
pub fn contained_at(b: &SuperIdeal, c: &SuperIdeal, p: &SuperIdeal) -> Result<bool> {
    if p.is_prime()?.value != Tri::True {
        return Err(Error::NotPrime);
    }
    let q = c.colon(b)?;
    Ok(!p.contains_ideal(&q)?)
}

/// An element `num/den` of the total ring of fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFraction {
    pub num: SuperPoly,
    pub den: SuperPoly,
}

impl KFraction {
    pub fn new(ring: &Ring, num: &SuperPoly, den: &SuperPoly) -> Result<KFraction> {
        let d = ring.reduce(den)?;
        let num = ring.reduce(num)?;
        let den = check_denominator(ring, &d)?;
        // den was scaled to be monic
        let scale = d.leading_coeff().expect("nonzero").inv();
        Ok(KFraction {
            num: num.scale(&scale),
            den,
        })
    }

    pub fn from_element(ring: &Ring, f: &SuperPoly) -> Result<KFraction> {
        Ok(KFraction {
            num: ring.reduce(f)?,
            den: ring.one(),
        })
    }

    /// Cancels a common polynomial factor of numerator and denominator.
    pub fn normalize(&self, ring: &Ring) -> Result<KFraction> {
        if self.num.is_zero() {
            return Ok(KFraction {
                num: self.num.clone(),
                den: ring.one(),
            });
        }
        let Some(h) = common_factor(ring, &self.den, std::slice::from_ref(&self.num))? else {
            return Ok(self.clone());
        };
        let den = self
            .den
            .body()
            .exact_div(&h)
            .expect("factor of the denominator");
        let lc = den.leading().expect("nonzero").1.inv();
        Ok(KFraction {
            num: divide_components(ring, &self.num, &h).scale(&lc),
            den: ring.from_poly(&den.monic()),
        })
    }
}

pub fn kfrac_add(ring: &Ring, a: &KFraction, b: &KFraction) -> Result<KFraction> {
    let num = ring.add(&ring.mul(&a.num, &b.den)?, &ring.mul(&b.num, &a.den)?)?;
    KFraction::new(ring, &num, &ring.mul(&a.den, &b.den)?)
}

pub fn kfrac_mul(ring: &Ring, a: &KFraction, b: &KFraction) -> Result<KFraction> {
    KFraction::new(ring, &ring.mul(&a.num, &b.num)?, &ring.mul(&a.den, &b.den)?)
}

pub fn kfrac_eq(ring: &Ring, a: &KFraction, b: &KFraction) -> Result<bool> {
    let lhs = ring.mul(&a.num, &b.den)?;
    let rhs = ring.mul(&b.num, &a.den)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use crate::text::parse_expr;

    const Q: Field = Field::Rational;

    fn r() -> Ring {
        Ring::free(Q, &["x"], &["t"]).unwrap()
    }

    fn p(ring: &Ring, s: &str) -> SuperPoly {
        parse_expr(s, ring).unwrap()
    }

    fn frac(ring: &Ring, gens: &[&str], den: &str) -> FractionalSuperideal {
        let g: Vec<SuperPoly> = gens.iter().map(|s| p(ring, s)).collect();
        frac_make(ring, &g, &p(ring, den)).unwrap()
    }

    #[test]
    fn normalization() {
        let ring = r();
        let m = frac_normalize(&frac(&ring, &["x^2", "x*t"], "x")).unwrap();
        assert!(m
            .num
            .equals(&SuperIdeal::new(&ring, &[p(&ring, "x"), p(&ring, "t")]).unwrap())
            .unwrap());
        assert_eq!(m.den, ring.one());
        let t = frac(&ring, &["t"], "1");
        assert_eq!(frac_normalize(&t).unwrap(), t);
        let inv_x = frac(&ring, &["1"], "x");
        assert_eq!(frac_normalize(&inv_x).unwrap(), inv_x);
    }

    #[test]
    fn zerodivisor_denominators_rejected() {
        let ring = r();
        assert_eq!(
            frac_make(&ring, &[ring.one()], &ring.theta(0)).unwrap_err(),
            Error::NotEven
        );
        assert_eq!(
            frac_make(&ring, &[ring.one()], &ring.zero()).unwrap_err(),
            Error::ZerodivisorDenominator
        );
    }

    #[test]
    fn products() {
        let ring = r();
        let t = frac(&ring, &["t"], "1");
        assert!(frac_product(&t, &t).unwrap().is_zero());
        let m = frac(&ring, &["x", "t"], "1");
        let m2 = frac_product(&m, &m).unwrap();
        assert!(frac_equal(&m2, &frac(&ring, &["x^2", "x*t"], "1")).unwrap());
        let one = FractionalSuperideal::unit(&ring).unwrap();
        assert!(frac_equal(&frac_product(&m, &one).unwrap(), &m).unwrap());
    }

    #[test]
    fn inverses() {
        let ring = r();
        let px = frac(&ring, &["x"], "1");
        match frac_inverse(&px).unwrap() {
            Inverse::Found { inverse, .. } => {
                assert!(frac_equal(&inverse, &frac(&ring, &["1"], "x")).unwrap())
            }
            Inverse::NoUnitCandidate => panic!(),
        }
        let m = frac(&ring, &["x", "t"], "1");
        match frac_inverse(&m).unwrap() {
            Inverse::Found { inverse, unit } => {
                assert_eq!(unit, ring.x(0));
                assert!(frac_equal(&inverse, &frac(&ring, &["x", "t"], "x")).unwrap());
            }
            Inverse::NoUnitCandidate => panic!(),
        }
        let t = frac(&ring, &["t"], "1");
        assert!(matches!(
            frac_inverse(&t).unwrap(),
            Inverse::NoUnitCandidate
        ));
        let zero = frac(&ring, &[], "1");
        assert_eq!(frac_inverse(&zero).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn invertibility() {
        let ring = r();
        assert!(is_invertible(&frac(&ring, &["x"], "1")).unwrap().value);
        let m = frac(&ring, &["x", "t"], "1");
        let rep = is_invertible(&m).unwrap();
        assert!(!rep.value);
        assert!(rep.witness.unwrap().equals(&m.num).unwrap());
        let rep = is_invertible(&frac(&ring, &["t"], "1")).unwrap();
        assert!(!rep.value && rep.no_unit_candidate);
    }

    #[test]
    fn localized_containment() {
        let ring = r();
        let b = SuperIdeal::new(&ring, &[p(&ring, "x")]).unwrap();
        let c = SuperIdeal::new(&ring, &[p(&ring, "x^2")]).unwrap();
        let m0 = SuperIdeal::new(&ring, &[p(&ring, "x"), p(&ring, "t")]).unwrap();
        let m1 = SuperIdeal::new(&ring, &[p(&ring, "x - 1"), p(&ring, "t")]).unwrap();
        assert!(!contained_at(&b, &c, &m0).unwrap());
        assert!(contained_at(&b, &c, &m1).unwrap());
        assert_eq!(contained_at(&b, &c, &b).unwrap_err(), Error::NotPrime);
        assert!(frac_equal(&frac(&ring, &["x"], "1"), &frac(&ring, &["x^2"], "x")).unwrap());
    }

    #[test]
    fn fraction_arithmetic() {
        let ring = r();
        let a = KFraction::new(&ring, &p(&ring, "t"), &p(&ring, "x")).unwrap();
        let s = kfrac_add(&ring, &a, &a).unwrap();
        assert_eq!(s.num, p(&ring, "2*x*t"));
        let n = s.normalize(&ring).unwrap();
        assert_eq!((n.num, n.den), (p(&ring, "2*t"), p(&ring, "x")));
        let one = KFraction::from_element(&ring, &ring.one()).unwrap();
        let xx = KFraction::new(&ring, &ring.x(0), &ring.x(0)).unwrap();
        assert!(kfrac_eq(&ring, &xx, &one).unwrap());
        let sq = kfrac_mul(&ring, &a, &a).unwrap();
        assert!(sq.num.is_zero());
        assert_eq!(sq.den, p(&ring, "x^2"));
        assert_eq!(
            KFraction::new(&ring, &ring.one(), &ring.theta(0)).unwrap_err(),
            Error::NotEven
        );
    }
}
