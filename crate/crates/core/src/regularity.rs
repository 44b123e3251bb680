//! Local regularity at rational points, the global defect locus of the odd
//! condition, and the Dedekind verdict.
//!
//! At a rational point `a` with maximal ideal `𝔪`, the ring is regular iff
//! the superreduced ring is regular at `a` and `Ann_{R0}(z) = R1²` after
//! localizing, where `z` is the product of a minimal system of odd
//! generators at `a`.

use std::fmt;

use crate::dimension::even_ksdim;
use crate::engine::groebner::Limits;
use crate::engine::ideal::{
    ideal_colon, ideal_intersect, jacobian_ideal, radical_contains, CIdeal,
};
use crate::engine::linalg::{independent_rows, rref};
use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::odd::OddMask;
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};
use crate::superideal::{annihilator, is_superdomain, is_zerodivisor, SuperIdeal};
use crate::superpoly::{Parity, SuperPoly};
use crate::text::{format_poly, format_superpoly};
use crate::verdict::{Tri, Verdict};

/// A maximal superideal `(x1 - a1, .., xn - an, θ1, .., θd)` at a rational
/// point of the superreduced variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalIdealPoint {
    pub ideal: SuperIdeal,
    pub point: Vec<Scalar>,
}

impl MaximalIdealPoint {
    pub fn from_coords(ring: &Ring, point: &[Scalar]) -> Result<MaximalIdealPoint> {
        if point.len() != ring.nvars() || point.iter().any(|c| c.field() != ring.field()) {
            return Err(Error::AmbientMismatch);
        }
        if !ring.reduced_ideal().vanishes_at(point) {
            return Err(Error::NonRationalPoint(
                "the point does not lie on the superreduced variety".into(),
            ));
        }
        let mut gens: Vec<SuperPoly> = (0..ring.nvars())
            .map(|i| ring.x(i).sub(&ring.scalar(point[i].clone())))
            .collect();
        gens.extend((0..ring.nodd()).map(|i| ring.theta(i)));
        Ok(MaximalIdealPoint {
            ideal: SuperIdeal::new(ring, &gens)?,
            point: point.to_vec(),
        })
    }

    /// Reads off the point of a maximal superideal; fails unless the ideal
    /// is `(x - a, θ)` for a rational `a`.
    pub fn from_ideal(m: &SuperIdeal) -> Result<MaximalIdealPoint> {
        let ring = m.ring();
        if m.is_unit() {
            return Err(Error::NonRationalPoint("unit ideal".into()));
        }
        for i in 0..ring.nodd() {
            if !m.contains(&ring.theta(i))? {
                return Err(Error::NonRationalPoint(format!(
                    "{} is not in the ideal",
                    ring.odd_names()[i]
                )));
            }
        }
        let body = m.body_ideal()?;
        let mut point = Vec::with_capacity(ring.nvars());
        for i in 0..ring.nvars() {
            let nf = body.normal_form(&Poly::var(ring.field(), ring.nvars(), i));
            if !nf.is_constant() {
                return Err(Error::NonRationalPoint(format!(
                    "{} has no rational value modulo the ideal",
                    ring.even_names()[i]
                )));
            }
            point.push(
                nf.leading()
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| ring.field().zero()),
            );
        }
        MaximalIdealPoint::from_coords(ring, &point)
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }
}

/// Lifts of a basis of `R1 / 𝔪0 R1`, chosen among the odd variables.
pub fn minimal_odd_generators_at(ring: &Ring, m: &MaximalIdealPoint) -> Vec<SuperPoly> {
    let rows = linear_relations_at(ring, &m.point);
    let (_, pivots) = rref(&rows);
    (0..ring.nodd())
        .filter(|j| !pivots.contains(j))
        .map(|j| ring.theta(j))
        .collect()
}

/// Degree-one parts of the odd relations, one row per relation, as
/// polynomial entries.
fn linear_relation_matrix(ring: &Ring) -> Vec<Vec<Poly>> {
    let mut rows = Vec::new();
    for v in ring.defining_basis().elems() {
        let g = ring.superpoly(v);
        if g.parity() != Parity::Odd {
            continue;
        }
        let row: Vec<Poly> = (0..ring.nodd())
            .map(|j| g.component(OddMask::single(j)))
            .collect();
        if row.iter().any(|p| !p.is_zero()) {
            rows.push(row);
        }
    }
    rows
}

fn linear_relations_at(ring: &Ring, point: &[Scalar]) -> Vec<Vec<Scalar>> {
    linear_relation_matrix(ring)
        .iter()
        .map(|row| row.iter().map(|p| p.eval(point)).collect())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regularity {
    Regular,
    NotRegular,
    Unknown,
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regularity::Regular => "regular",
            Regularity::NotRegular => "not regular",
            Regularity::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub verdict: Regularity,
    /// Regularity of the superreduced ring at the point.
    pub reduced: Tri,
    /// `Ann_{R0}(z) = R1²` locally.
    pub odd_condition: Tri,
    /// Local Krull dimension of the superreduced ring, when regular there.
    pub local_dim: Option<usize>,
    pub odd_generators: Vec<SuperPoly>,
    pub z: SuperPoly,
    pub reasons: Vec<String>,
    pub witness: Option<SuperPoly>,
}

/// Regularity of a commutative quotient `C / c` at a rational point: with
/// `F ⊆ c` a maximal set of generators whose gradients at the point are
/// independent, the local ring is regular iff `c` agrees with `(F)` there.
/// Returns the verdict, the local dimension when regular, and a generator of
/// `c` outside `(F)` locally when not.
pub fn reduced_regular_at(
    c: &CIdeal,
    point: &[Scalar],
    limits: &Limits,
) -> Result<(Tri, Option<usize>, Option<Poly>)> {
    let n = c.nvars();
    if c.is_zero() {
        return Ok((Tri::True, Some(n), None));
    }
    if let Field::Prime(_) = c.field() {
        return Ok((Tri::Unknown, None, None));
    }
    let gens = c.gens();
    let jac: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|g| (0..n).map(|i| g.derivative(i).eval(point)).collect())
        .collect();
    let chosen = independent_rows(&jac);
    let f: Vec<Poly> = chosen.iter().map(|&i| gens[i].clone()).collect();
    let fi = CIdeal::new(c.field(), n, &f, limits)?;
    for g in &gens {
        if fi.contains(g) {
            continue;
        }
        if ideal_colon(&fi, g, limits)?.vanishes_at(point) {
            return Ok((Tri::False, None, Some(g.clone())));
        }
    }
    Ok((Tri::True, Some(n - chosen.len()), None))
}

fn odd_square(ring: &Ring) -> Result<SuperIdeal> {
    let mut gens = Vec::new();
    for i in 0..ring.nodd() {
        for j in i + 1..ring.nodd() {
            gens.push(ring.theta(i).mul(&ring.theta(j)));
        }
    }
    SuperIdeal::new(ring, &gens)
}

fn product(ring: &Ring, gens: &[SuperPoly]) -> SuperPoly {
    gens.iter().fold(ring.one(), |acc, g| acc.mul(g))
}

pub fn is_regular_at(ring: &Ring, m: &MaximalIdealPoint) -> Result<RegularityReport> {
    let a = &m.point;
    let mut reasons = Vec::new();
    let mut witness = None;

    let (reduced, local_dim, bad) = reduced_regular_at(ring.reduced_ideal(), a, ring.limits())?;
    match reduced {
        Tri::True => {}
        Tri::False => {
            let g = bad.expect("witness accompanies failure");
            reasons.push(format!(
                "superreduced ring is singular at the point: {} is not generated locally by relations with independent gradients",
                format_poly(&g, ring.even_names())
            ));
            witness = Some(ring.from_poly(&g));
        }
        Tri::Unknown => reasons
            .push("regularity of the superreduced ring is not decided over a prime field".into()),
    }

    let gens = minimal_odd_generators_at(ring, m);
    let z = ring.reduce(&product(ring, &gens))?;
    let odd_condition = if z.is_zero() {
        reasons.push(format!(
            "the product {} of minimal odd generators is zero",
            format_superpoly(&product(ring, &gens), ring)
        ));
        Tri::False
    } else {
        let ann = annihilator(ring, &z)?;
        let body = ann.body_ideal()?;
        if !body.vanishes_at(a) {
            reasons.push(format!(
                "z = {} vanishes locally: its annihilator contains a unit at the point",
                format_superpoly(&z, ring)
            ));
            if witness.is_none() {
                witness = Some(z.clone());
            }
            Tri::False
        } else {
            let j2 = odd_square(ring)?;
            let mut ok = Tri::True;
            for e in ann.even_basis() {
                if j2.contains(&e)? {
                    continue;
                }
                if j2.colon_element(&e)?.body_ideal()?.vanishes_at(a) {
                    let e = ring.reduce(&e)?;
                    reasons.push(format!(
                        "{} annihilates z = {} but is not in the square of the odd part locally",
                        format_superpoly(&e, ring),
                        format_superpoly(&z, ring)
                    ));
                    if witness.is_none() {
                        witness = Some(e);
                    }
                    ok = Tri::False;
                    break;
                }
            }
            ok
        }
    };

    let verdict = match reduced.and(odd_condition) {
        Tri::True => Regularity::Regular,
        Tri::False => Regularity::NotRegular,
        Tri::Unknown => Regularity::Unknown,
    };
    Ok(RegularityReport {
        verdict,
        reduced,
        odd_condition,
        local_dim,
        odd_generators: gens,
        z,
        reasons,
        witness,
    })
}

/// The locus where the odd condition fails, with a flag telling whether the
/// odd variables are a minimal generating system at every point (then the
/// locus is exact).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectLocus {
    pub ideal: CIdeal,
    pub certified: bool,
}

pub fn regular_defect_locus(ring: &Ring) -> Result<DefectLocus> {
    let field = ring.field();
    let n = ring.nvars();
    let limits = ring.limits();
    let c = ring.reduced_ideal();
    if ring.nodd() == 0 {
        return Ok(DefectLocus {
            ideal: CIdeal::unit(field, n),
            certified: true,
        });
    }
    let mut certified = true;
    'rows: for row in linear_relation_matrix(ring) {
        for entry in row {
            if !entry.is_zero() && !radical_contains(c, &entry, limits)? {
                certified = false;
                break 'rows;
            }
        }
    }
    let all: Vec<SuperPoly> = (0..ring.nodd()).map(|i| ring.theta(i)).collect();
    let z = ring.reduce(&product(ring, &all))?;
    if z.is_zero() {
        return Ok(DefectLocus {
            ideal: c.clone(),
            certified,
        });
    }
    let ann = annihilator(ring, &z)?;
    let j2 = odd_square(ring)?;
    let mut locus = CIdeal::unit(field, n);
    for e in ann.even_basis() {
        if j2.contains(&e)? {
            continue;
        }
        let part = j2.colon_element(&e)?.body_ideal()?;
        locus = ideal_intersect(&locus, &part, limits)?;
    }
    Ok(DefectLocus {
        ideal: locus.sum(c, limits)?,
        certified,
    })
}

#[derive(Debug, Clone)]
pub struct DedekindReport {
    pub verdict: Tri,
    pub superdomain: Verdict,
    pub even_dim: usize,
    pub smooth: Tri,
    pub defect: DefectLocus,
    pub reasons: Vec<String>,
}

pub fn is_dedekind(ring: &Ring) -> Result<DedekindReport> {
    let limits = ring.limits();
    let c = ring.reduced_ideal();
    let mut reasons = Vec::new();

    let sd = is_superdomain(ring)?;
    if sd.value != Tri::True {
        reasons.push(format!("superdomain: {}", sd.reason));
    }
    let even_dim = even_ksdim(ring);
    let dim_ok = Tri::from_bool(even_dim == 1);
    if even_dim != 1 {
        reasons.push(format!("even Krull dimension is {even_dim}, not 1"));
    }
    let smooth = if c.is_zero() {
        Tri::True
    } else if let Field::Prime(_) = ring.field() {
        reasons.push("smoothness is not decided over a prime field".into());
        Tri::Unknown
    } else if jacobian_ideal(c, limits)?.is_unit() {
        Tri::True
    } else {
        reasons.push("superreduced ring is singular: the Jacobian ideal is proper".into());
        Tri::False
    };
    let defect = regular_defect_locus(ring)?;
    let defect_ok = if !defect.certified {
        reasons.push(
            "odd variables are not minimal generators everywhere; defect locus uncertified".into(),
        );
        Tri::Unknown
    } else if defect.ideal.is_unit() {
        Tri::True
    } else {
        let gens: Vec<String> = defect
            .ideal
            .gens()
            .iter()
            .map(|g| format_poly(g, ring.even_names()))
            .collect();
        reasons.push(format!(
            "odd regularity fails on the locus ({})",
            if gens.is_empty() {
                "0".to_string()
            } else {
                gens.join(", ")
            }
        ));
        Tri::False
    };
    let verdict = sd.value.and(dim_ok).and(smooth).and(defect_ok);
    Ok(DedekindReport {
        verdict,
        superdomain: sd,
        even_dim,
        smooth,
        defect,
        reasons,
    })
}

/// Whether the localization at `m` is a discrete valuation superring.
pub fn dvr_check_local(ring: &Ring, m: &MaximalIdealPoint) -> Result<Verdict> {
    let reg = is_regular_at(ring, m)?;
    match reg.verdict {
        Regularity::NotRegular => {
            return Ok(Verdict::new(
                Tri::False,
                format!("not regular at the point: {}", reg.reasons.join("; ")),
            ))
        }
        Regularity::Unknown => {
            return Ok(Verdict::new(Tri::Unknown, reg.reasons.join("; ")));
        }
        Regularity::Regular => {}
    }
    let dim = reg.local_dim.expect("regular implies a local dimension");
    if dim != 1 {
        return Ok(Verdict::new(
            Tri::False,
            format!("superreduced ring has local dimension {dim}, not 1"),
        ));
    }
    let probe = regular_element(ring, m)?;
    let Some(u) = probe else {
        return Ok(Verdict::new(
            Tri::Unknown,
            "no non-zerodivisor found in the maximal ideal",
        ));
    };
    Ok(Verdict::new(
        Tri::True,
        format!(
            "regular of local dimension 1|{}; {} is a non-zerodivisor in the maximal ideal",
            reg.odd_generators.len(),
            format_superpoly(&u, ring)
        ),
    )
    .with_witness(u))
}

/// An even non-zerodivisor of `m`, searched among `x_i - a_i` and the even
/// basis elements of `m`.
fn regular_element(ring: &Ring, m: &MaximalIdealPoint) -> Result<Option<SuperPoly>> {
    let mut cands: Vec<SuperPoly> = (0..ring.nvars())
        .map(|i| ring.x(i).sub(&ring.scalar(m.point[i].clone())))
        .collect();
    cands.extend(m.ideal.even_basis());
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{default_odd_names, make_ring, Config};
    use crate::text::parse_expr;

    const Q: Field = Field::Rational;

    fn ring(evens: &[&str], d: usize, gens: &[&str]) -> Ring {
        let odd = default_odd_names(d);
        let refs: Vec<&str> = odd.iter().map(|s| s.as_str()).collect();
        let free = Ring::free(Q, evens, &refs).unwrap();
        let g: Vec<SuperPoly> = gens.iter().map(|s| parse_expr(s, &free).unwrap()).collect();
        make_ring(Q, evens, &refs, &g, Config::default()).unwrap()
    }

    fn at(r: &Ring, coords: &[i64]) -> MaximalIdealPoint {
        MaximalIdealPoint::from_coords(r, &r.point(coords)).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let r = ring(&["x"], 2, &[]);
        assert_eq!(
            minimal_odd_generators_at(&r, &at(&r, &[0])),
            vec![r.theta(0), r.theta(1)]
        );
        let r = ring(&["x"], 2, &["t2 - x*t1"]);
        assert_eq!(
            minimal_odd_generators_at(&r, &at(&r, &[0])),
            vec![r.theta(0)]
        );
        let r = ring(&["x"], 0, &[]);
        assert!(minimal_odd_generators_at(&r, &at(&r, &[0])).is_empty());
    }

    #[test]
    fn regularity_examples() {
        let r = ring(&["x"], 1, &[]);
        assert_eq!(
            is_regular_at(&r, &at(&r, &[0])).unwrap().verdict,
            Regularity::Regular
        );

        let c = ring(&["X"], 2, &["X*t1*t2"]);
        let rep = is_regular_at(&c, &at(&c, &[0])).unwrap();
        assert_eq!(rep.verdict, Regularity::NotRegular);
        assert_eq!(rep.witness, Some(c.x(0)));
        let rep = is_regular_at(&c, &at(&c, &[1])).unwrap();
        assert_eq!(rep.verdict, Regularity::NotRegular);
        assert_eq!(rep.witness, Some(c.theta(0).mul(&c.theta(1))));
    }

    #[test]
    fn point_from_ideal() {
        let r = ring(&["x", "y"], 1, &[]);
        let m =
            SuperIdeal::new(&r, &[parse_expr("x - 2", &r).unwrap(), r.x(1), r.theta(0)]).unwrap();
        let p = MaximalIdealPoint::from_ideal(&m).unwrap();
        assert_eq!(p.point, r.point(&[2, 0]));
        let bad = SuperIdeal::new(
            &r,
            &[parse_expr("x^2 + 1", &r).unwrap(), r.x(1), r.theta(0)],
        )
        .unwrap();
        assert!(matches!(
            MaximalIdealPoint::from_ideal(&bad),
            Err(Error::NonRationalPoint(_))
        ));
    }

    #[test]
    fn defect_locus_examples() {
        let d = regular_defect_locus(&ring(&["x"], 2, &[])).unwrap();
        assert!(d.certified && d.ideal.is_unit());
        let d = regular_defect_locus(&ring(&["X"], 2, &["X*t1*t2"])).unwrap();
        assert!(d.certified && d.ideal.is_zero());
        let d = regular_defect_locus(&ring(&["x"], 0, &[])).unwrap();
        assert!(d.certified && d.ideal.is_unit());
    }

    #[test]
    fn dedekind_examples() {
        for n in 0..=3 {
            assert_eq!(
                is_dedekind(&ring(&["x"], n, &[])).unwrap().verdict,
                Tri::True
            );
        }
        assert_eq!(
            is_dedekind(&ring(&["X"], 2, &["X*t1*t2"])).unwrap().verdict,
            Tri::False
        );
        let cusp = ring(&["x", "y"], 0, &["y^2 - x^3"]);
        let rep = is_dedekind(&cusp).unwrap();
        assert_eq!(rep.verdict, Tri::False);
        assert_eq!(rep.smooth, Tri::False);
    }

    #[test]
    fn dvr_examples() {
        let r = ring(&["x"], 1, &[]);
        assert_eq!(dvr_check_local(&r, &at(&r, &[0])).unwrap().value, Tri::True);
        let r = ring(&["x", "y"], 1, &["y"]);
        assert_eq!(
            dvr_check_local(&r, &at(&r, &[0, 0])).unwrap().value,
            Tri::True
        );
        let c = ring(&["X"], 2, &["X*t1*t2"]);
        assert_eq!(
            dvr_check_local(&c, &at(&c, &[0])).unwrap().value,
            Tri::False
        );
    }

    #[test]
    fn cusp_is_singular_only_at_origin() {
        let cusp = ring(&["x", "y"], 0, &["y^2 - x^3"]);
        let c = cusp.reduced_ideal();
        let l = cusp.limits();
        assert_eq!(
            reduced_regular_at(c, &cusp.point(&[0, 0]), l).unwrap().0,
            Tri::False
        );
        let (v, dim, _) = reduced_regular_at(c, &cusp.point(&[1, 1]), l).unwrap();
        assert_eq!((v, dim), (Tri::True, Some(1)));
    }
}
