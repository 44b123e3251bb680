//! Generators, brute-force oracles and the shared ring corpus.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superring_core::engine::{Limits, Poly};
use superring_core::{make_ring, Config, Field, Monomial, OddMask, Ring, Scalar, SuperPoly, Term};

pub const Q: Field = Field::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    loop {
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=3);
        let c = field.int(num).div(&field.int(den));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Monomial {
    let total = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    if n > 0 {
        for _ in 0..total {
            exps[rng.gen_range(0..n)] += 1;
        }
    }
    Monomial::from_exps(&exps)
}

pub fn mask(rng: &mut ChaCha8Rng, d: usize, parity: Option<bool>) -> OddMask {
    loop {
        let m = OddMask(rng.gen_range(0..(1u32 << d)));
        if parity.is_none_or(|odd| m.is_odd() == odd) {
            return m;
        }
        if d == 0 {
            return OddMask(0);
        }
    }
}

/// Random element with up to `nterms` terms; `parity` of `Some(true)` asks
/// for an odd element and `Some(false)` for an even one.
pub fn superpoly(
    rng: &mut ChaCha8Rng,
    field: Field,
    n: usize,
    d: usize,
    max_deg: u32,
    nterms: usize,
    parity: Option<bool>,
) -> SuperPoly {
    let parity = if d == 0 {
        parity.map(|_| false)
    } else {
        parity
    };
    let k = rng.gen_range(0..=nterms);
    let terms = (0..k)
        .map(|_| Term {
            coeff: scalar(rng, field),
            even: monomial(rng, n, max_deg),
            odd: mask(rng, d, parity),
        })
        .collect();
    SuperPoly::from_terms(field, n, d, terms)
}

pub fn poly(rng: &mut ChaCha8Rng, field: Field, n: usize, max_deg: u32, nterms: usize) -> Poly {
    let k = rng.gen_range(1..=nterms);
    let terms = (0..k)
        .map(|_| (monomial(rng, n, max_deg), scalar(rng, field)))
        .collect();
    Poly::from_terms(field, n, terms)
}

pub fn homogeneous_poly(
    rng: &mut ChaCha8Rng,
    field: Field,
    n: usize,
    deg: u32,
    nterms: usize,
) -> Poly {
    let k = rng.gen_range(1..=nterms);
    let terms = (0..k)
        .map(|_| {
            let mut exps = vec![0u32; n];
            for _ in 0..deg {
                exps[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exps(&exps), scalar(rng, field))
        })
        .collect();
    Poly::from_terms(field, n, terms)
}

/// Dense representation keyed by even exponents and the odd indices in
/// ascending order.
pub type Dense = BTreeMap<(Vec<u32>, Vec<usize>), Scalar>;

pub fn to_dense(f: &SuperPoly) -> Dense {
    f.terms()
        .iter()
        .map(|t| ((t.even.exps().to_vec(), t.odd.indices()), t.coeff.clone()))
        .collect()
}

/// Sorts the concatenated odd indices by adjacent transpositions.
fn sort_with_sign(mut idx: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut negative = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] == idx[j + 1] {
                return None;
            }
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, negative))
}

pub fn dense_mul(a: &Dense, b: &Dense, field: Field) -> Dense {
    let mut out: Dense = BTreeMap::new();
    for ((ea, oa), ca) in a {
        for ((eb, ob), cb) in b {
            let odd: Vec<usize> = oa.iter().chain(ob.iter()).copied().collect();
            let Some((odd, negative)) = sort_with_sign(odd) else {
                continue;
            };
            let even: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let mut c = ca.mul(cb);
            if negative {
                c = c.neg();
            }
            let slot = out.entry((even, odd)).or_insert_with(|| field.zero());
            *slot = slot.add(&c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn dense_add(a: &Dense, b: &Dense, field: Field) -> Dense {
    let mut out = a.clone();
    for (k, c) in b {
        let slot = out.entry(k.clone()).or_insert_with(|| field.zero());
        *slot = slot.add(c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn monomials_up_to(n: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=(deg - used) {
                let mut m2 = m.clone();
                m2.push(e);
                next.push(m2);
            }
        }
        out = next;
    }
    out
}

fn is_homogeneous(p: &Poly) -> bool {
    let mut degs = p.terms().iter().map(|(m, _)| m.degree());
    match degs.next() {
        Some(d0) => degs.all(|d| d == d0),
        None => true,
    }
}

/// Membership of `f` in `(gens)` by linear algebra over all monomial
/// multiples of the generators of degree at most `cap`. A positive answer
/// is always conclusive; a negative one only for homogeneous input.
pub fn linear_member(gens: &[Poly], f: &Poly, cap: u32) -> Option<bool> {
    let field = f.field();
    let n = f.nvars();
    let mut rows: Vec<HashMap<Vec<u32>, Scalar>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let gd = g.total_degree().unwrap_or(0);
        if gd > cap {
            continue;
        }
        for m in monomials_up_to(n, cap - gd) {
            let mm = Monomial::from_exps(&m);
            let row: HashMap<Vec<u32>, Scalar> = g
                .mul_term(&mm, &field.one())
                .terms()
                .iter()
                .map(|(t, c)| (t.exps().to_vec(), c.clone()))
                .collect();
            rows.push(row);
        }
    }
    let mut target: HashMap<Vec<u32>, Scalar> = f
        .terms()
        .iter()
        .map(|(t, c)| (t.exps().to_vec(), c.clone()))
        .collect();
    // Echelon form keyed by pivot monomial.
    let mut pivots: HashMap<Vec<u32>, HashMap<Vec<u32>, Scalar>> = HashMap::new();
    let reduce = |row: &mut HashMap<Vec<u32>, Scalar>,
                  pivots: &HashMap<Vec<u32>, HashMap<Vec<u32>, Scalar>>| loop {
        let hit = row
            .iter()
            .filter(|(k, _)| pivots.contains_key(*k))
            .map(|(k, c)| (k.clone(), c.clone()))
            .next();
        let Some((k, c)) = hit else { break };
        for (k2, c2) in &pivots[&k] {
            let slot = row.entry(k2.clone()).or_insert_with(|| c.field().zero());
            *slot = slot.sub(&c.mul(c2));
            if slot.is_zero() {
                row.remove(k2);
            }
        }
    };
    for mut row in rows {
        reduce(&mut row, &pivots);
        let Some(k) = row.keys().max().cloned() else {
            continue;
        };
        let inv = row[&k].inv();
        for c in row.values_mut() {
            *c = c.mul(&inv);
        }
        // Keep pivot columns eliminated from earlier rows.
        for other in pivots.values_mut() {
            if let Some(c) = other.get(&k).cloned() {
                for (k2, c2) in &row {
                    let slot = other.entry(k2.clone()).or_insert_with(|| field.zero());
                    *slot = slot.sub(&c.mul(c2));
                }
                other.retain(|_, c| !c.is_zero());
            }
        }
        pivots.insert(k, row);
    }
    reduce(&mut target, &pivots);
    if target.is_empty() {
        return Some(true);
    }
    let exact = gens.iter().all(is_homogeneous)
        && is_homogeneous(f)
        && f.total_degree().is_none_or(|d| d <= cap);
    exact.then_some(false)
}

pub struct CorpusRing {
    pub name: &'static str,
    pub ring: Ring,
    pub points: Vec<Vec<i64>>,
}

pub fn ring(evens: &[&str], odds: &[&str], rels: &[&str]) -> Ring {
    let free = make_ring(Q, evens, odds, &[], Config::default()).unwrap();
    let gens: Vec<SuperPoly> = rels
        .iter()
        .map(|r| superring_core::parse_expr(r, &free).unwrap())
        .collect();
    make_ring(Q, evens, odds, &gens, Config::default()).unwrap()
}

pub fn free_line(n: usize) -> Ring {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    ring(&["x"], &refs, &[])
}

/// Rings exercised by the corpus-level properties, each with rational
/// points of its superreduced variety.
pub fn corpus() -> Vec<CorpusRing> {
    let line_points = vec![vec![0], vec![1], vec![-2]];
    let mut out = Vec::new();
    for (n, name) in [
        "Q[x]",
        "Q[x|t1]",
        "Q[x|t1,t2]",
        "Q[x|t1,t2,t3]",
        "Q[x|t1..t4]",
    ]
    .into_iter()
    .enumerate()
    {
        out.push(CorpusRing {
            name,
            ring: free_line(n),
            points: line_points.clone(),
        });
    }
    out.push(CorpusRing {
        name: "Q[X|t1,t2]/(X*t1*t2)",
        ring: ring(&["X"], &["t1", "t2"], &["X*t1*t2"]),
        points: vec![vec![0], vec![1], vec![3]],
    });
    out.push(CorpusRing {
        name: "Q[x,y]/(y^2-x^3)",
        ring: ring(&["x", "y"], &[], &["y^2 - x^3"]),
        points: vec![vec![0, 0], vec![1, 1], vec![4, 8]],
    });
    out.push(CorpusRing {
        name: "Q[x,y|t]",
        ring: ring(&["x", "y"], &["t"], &[]),
        points: vec![vec![0, 0], vec![1, 2], vec![-1, 3]],
    });
    out.push(CorpusRing {
        name: "Q[x,y|t]/(y-x^2)",
        ring: ring(&["x", "y"], &["t"], &["y - x^2"]),
        points: vec![vec![0, 0], vec![1, 1], vec![2, 4]],
    });
    out.push(CorpusRing {
        name: "Q[x|t1,t2]/(x*t1)",
        ring: ring(&["x"], &["t1", "t2"], &["x*t1"]),
        points: vec![vec![0], vec![1], vec![5]],
    });
    out.push(CorpusRing {
        name: "Q[x|t1,t2]/(t1*t2)",
        ring: ring(&["x"], &["t1", "t2"], &["t1*t2"]),
        points: vec![vec![0], vec![2], vec![-1]],
    });
    out
}

pub fn limits() -> Limits {
    Limits::default()
}

/// One random instance of the membership comparison. Returns the number of
/// targets on which the linear-algebra oracle was conclusive.
pub fn groebner_case(seed: u64) -> Result<usize, String> {
    use superring_core::engine::CIdeal;
    let mut r = rng(seed);
    let field = if seed.is_multiple_of(5) {
        Field::prime(101).unwrap()
    } else {
        Q
    };
    let n = r.gen_range(1..=3usize);
    let k = r.gen_range(1..=3usize);
    let homogeneous = r.gen_bool(0.5);
    let gens: Vec<Poly> = (0..k)
        .map(|_| {
            if homogeneous {
                let deg = r.gen_range(1..=3u32);
                homogeneous_poly(&mut r, field, n, deg, 3)
            } else {
                poly(&mut r, field, n, 3, 3)
            }
        })
        .collect();
    let ideal = CIdeal::new(field, n, &gens, &limits()).map_err(|e| e.to_string())?;
    let again = CIdeal::new(field, n, &ideal.gens(), &limits()).map_err(|e| e.to_string())?;
    if again != ideal {
        return Err(format!("seed {seed}: basis of a basis differs"));
    }
    let mut targets = Vec::new();
    let mut combo = Poly::zero(field, n);
    for g in &gens {
        let h = if homogeneous {
            let deg = r.gen_range(0..=2u32);
            homogeneous_poly(&mut r, field, n, deg, 2)
        } else {
            poly(&mut r, field, n, 2, 2)
        };
        combo = combo.add(&h.mul(g));
    }
    targets.push((combo, true));
    for _ in 0..3 {
        let f = if homogeneous {
            let deg = r.gen_range(1..=4u32);
            homogeneous_poly(&mut r, field, n, deg, 3)
        } else {
            poly(&mut r, field, n, 3, 3)
        };
        targets.push((f, false));
    }
    let mut conclusive = 0;
    for (f, member) in targets {
        let nf = ideal.normal_form(&f);
        if ideal.normal_form(&nf) != nf {
            return Err(format!("seed {seed}: normal form not idempotent"));
        }
        if !f.sub(&nf).is_zero() && !ideal.contains(&f.sub(&nf)) {
            return Err(format!("seed {seed}: f - NF(f) outside the ideal"));
        }
        if member && !nf.is_zero() {
            return Err(format!(
                "seed {seed}: combination of generators not reduced to 0"
            ));
        }
        if let Some(v) = linear_member(&gens, &f, 8) {
            conclusive += 1;
            if v != nf.is_zero() {
                return Err(format!(
                    "seed {seed}: oracle says {v}, normal form is {}",
                    if nf.is_zero() { "zero" } else { "nonzero" }
                ));
            }
        }
    }
    Ok(conclusive)
}

fn err(ctx: &str, e: impl std::fmt::Display) -> String {
    format!("{ctx}: {e}")
}

/// Random homogeneous element of `ring`, reduced.
pub fn homogeneous_element(r: &mut ChaCha8Rng, ring: &Ring) -> SuperPoly {
    let odd = ring.nodd() > 0 && r.gen_bool(0.5);
    let f = superpoly(r, ring.field(), ring.nvars(), ring.nodd(), 2, 2, Some(odd));
    ring.reduce(&f).unwrap()
}

fn random_superideal(
    r: &mut ChaCha8Rng,
    ring: &Ring,
) -> Result<superring_core::SuperIdeal, String> {
    let k = r.gen_range(1..=2);
    let gens: Vec<SuperPoly> = (0..k).map(|_| homogeneous_element(r, ring)).collect();
    superring_core::SuperIdeal::new(ring, &gens).map_err(|e| err("ideal", e))
}

fn theta_closed(i: &superring_core::SuperIdeal) -> Result<bool, String> {
    let ring = i.ring();
    for v in i.basis().elems() {
        let g = ring.superpoly_of(v);
        for t in 0..ring.nodd() {
            let tg = ring.mul(&ring.theta(t), &g).map_err(|e| err("mul", e))?;
            if !i.contains(&tg).map_err(|e| err("contains", e))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Inclusion chain, colon soundness, θ-closure, canonical superideal and
/// superreduction over the corpus. Returns the number of ideal pairs.
pub fn superideal_properties(pairs_per_ring: usize) -> Result<usize, String> {
    use superring_core::{canonical_superideal, superreduce, SuperIdeal};
    let mut count = 0;
    for (ix, c) in corpus().into_iter().enumerate() {
        let ring = &c.ring;
        let name = c.name;
        let thetas: Vec<SuperPoly> = (0..ring.nodd()).map(|i| ring.theta(i)).collect();
        let j = canonical_superideal(ring).map_err(|e| err(name, e))?;
        let expect = SuperIdeal::new(ring, &thetas).map_err(|e| err(name, e))?;
        if !j.equals(&expect).map_err(|e| err(name, e))? {
            return Err(format!("{name}: canonical superideal is not (θ1..θd)"));
        }
        let red = superreduce(ring);
        if red.ideal.nvars() != ring.nvars() {
            return Err(format!("{name}: superreduced ring has the wrong variables"));
        }
        if !red.ideal.contains_ideal(ring.reduced_ideal()) {
            return Err(format!("{name}: superreduction lost relations"));
        }
        let mut r = rng(1000 + ix as u64);
        for _ in 0..pairs_per_ring {
            let b = random_superideal(&mut r, ring)?;
            let cc = random_superideal(&mut r, ring)?;
            let ctx = format!("{name}: b = {b}, c = {cc}");
            let prod = b.product(&cc).map_err(|e| err(&ctx, e))?;
            let meet = b.intersection(&cc).map_err(|e| err(&ctx, e))?;
            let sum = b.sum(&cc).map_err(|e| err(&ctx, e))?;
            let colon = b.colon(&cc).map_err(|e| err(&ctx, e))?;
            let chain = [
                meet.contains_ideal(&prod),
                b.contains_ideal(&meet),
                cc.contains_ideal(&meet),
                sum.contains_ideal(&b),
                sum.contains_ideal(&cc),
            ];
            for (k, ok) in chain.into_iter().enumerate() {
                if !ok.map_err(|e| err(&ctx, e))? {
                    return Err(format!("{ctx}: inclusion {k} of bc ⊆ b∩c ⊆ b ⊆ b+c fails"));
                }
            }
            let back = colon.product(&cc).map_err(|e| err(&ctx, e))?;
            if !b.contains_ideal(&back).map_err(|e| err(&ctx, e))? {
                return Err(format!("{ctx}: colon(b, c)·c ⊄ b"));
            }
            for i in [&b, &cc, &prod, &meet, &sum, &colon] {
                if !theta_closed(i)? {
                    return Err(format!("{ctx}: {i} is not θ-closed"));
                }
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Principal fractional superideals generated by even non-zerodivisors,
/// and their products, satisfy the group law. Returns the number of
/// elements checked.
pub fn fractional_group_law() -> Result<usize, String> {
    use superring_core::{
        frac_equal, frac_inverse, frac_make, frac_product, is_invertible, FractionalSuperideal,
        Inverse,
    };
    let cases: Vec<(Ring, Vec<(&str, &str)>)> = vec![
        (
            free_line(1),
            vec![
                ("x", "1"),
                ("x + 1", "1"),
                ("x^2 + 1", "x"),
                ("x + 2", "x - 3"),
            ],
        ),
        (
            free_line(2),
            vec![
                ("x + t1*t2", "1"),
                ("x", "x + 1"),
                ("x^2 - 2", "1"),
                ("3*x + 1 + t1*t2", "x"),
            ],
        ),
        (
            ring(&["x", "y"], &["t"], &["y - x^2"]),
            vec![("x", "1"), ("y + 1", "1"), ("x - 1", "x + 2")],
        ),
        (
            ring(&["X"], &["t1", "t2"], &["X*t1*t2"]),
            vec![("X + 1", "1"), ("X^2 + 2", "X + 1")],
        ),
    ];
    let mut count = 0;
    for (ring, specs) in cases {
        let name = ring.to_string();
        let one = FractionalSuperideal::unit(&ring).map_err(|e| err(&name, e))?;
        let mut fracs = Vec::new();
        for (num, den) in specs {
            let num = superring_core::parse_expr(num, &ring).map_err(|e| err(&name, e))?;
            let den = superring_core::parse_expr(den, &ring).map_err(|e| err(&name, e))?;
            fracs.push(frac_make(&ring, &[num], &den).map_err(|e| err(&name, e))?);
        }
        let mut extended = fracs.clone();
        for i in 0..fracs.len() {
            for j in i..fracs.len() {
                extended.push(frac_product(&fracs[i], &fracs[j]).map_err(|e| err(&name, e))?);
            }
        }
        let eq = |a: &FractionalSuperideal, b: &FractionalSuperideal| -> Result<bool, String> {
            frac_equal(a, b).map_err(|e| err(&name, e))
        };
        let prod = |a: &FractionalSuperideal, b: &FractionalSuperideal| {
            frac_product(a, b).map_err(|e| err(&name, e))
        };
        for m in &extended {
            let ctx = format!("{name}: M = {m}");
            if !eq(&prod(m, &one)?, m)? || !eq(&prod(&one, m)?, m)? {
                return Err(format!("{ctx}: R is not an identity"));
            }
            let inv = match frac_inverse(m).map_err(|e| err(&ctx, e))? {
                Inverse::Found { inverse, .. } => inverse,
                Inverse::NoUnitCandidate => return Err(format!("{ctx}: no inverse found")),
            };
            if !eq(&prod(&inv, m)?, &one)? {
                return Err(format!("{ctx}: M⁻¹M ≠ R"));
            }
            if !is_invertible(m).map_err(|e| err(&ctx, e))?.value {
                return Err(format!("{ctx}: reported not invertible"));
            }
            count += 1;
        }
        for a in &fracs {
            for b in &fracs {
                if !eq(&prod(a, b)?, &prod(b, a)?)? {
                    return Err(format!("{name}: product of {a} and {b} not commutative"));
                }
                for c in &fracs {
                    if !eq(&prod(&prod(a, b)?, c)?, &prod(a, &prod(b, c)?)?)? {
                        return Err(format!("{name}: product of {a}, {b}, {c} not associative"));
                    }
                }
            }
        }
    }
    Ok(count)
}

pub fn point_of(ring: &Ring, coords: &[i64]) -> Result<superring_core::MaximalIdealPoint, String> {
    superring_core::MaximalIdealPoint::from_coords(ring, &ring.point(coords))
        .map_err(|e| err("point", e))
}

/// For every corpus ring with odd variables reported Dedekind, no sampled
/// rational maximal ideal is invertible. Returns `(rings, points)` checked.
pub fn maximal_ideals_not_invertible() -> Result<(usize, usize), String> {
    use superring_core::{frac_from_ideal, is_dedekind, is_invertible, Tri};
    let (mut rings, mut points) = (0, 0);
    for c in corpus() {
        if c.ring.nodd() == 0 {
            continue;
        }
        let rep = is_dedekind(&c.ring).map_err(|e| err(c.name, e))?;
        if rep.verdict != Tri::True {
            continue;
        }
        rings += 1;
        for p in &c.points {
            let m = point_of(&c.ring, p)?;
            let inv = is_invertible(&frac_from_ideal(&m.ideal)).map_err(|e| err(c.name, e))?;
            if inv.value {
                return Err(format!(
                    "{}: maximal ideal at {p:?} reported invertible",
                    c.name
                ));
            }
            points += 1;
        }
    }
    Ok((rings, points))
}

/// Ring with `n` even and `d` odd variables under default names.
pub fn named_ring(field: Field, n: usize, d: usize) -> Ring {
    let evens: Vec<String> = ["x", "y", "z", "w"][..n]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let odds = superring_core::ring::default_odd_names(d);
    let e: Vec<&str> = evens.iter().map(String::as_str).collect();
    let o: Vec<&str> = odds.iter().map(String::as_str).collect();
    make_ring(field, &e, &o, &[], Config::default()).unwrap()
}

/// `parse(print(f)) = f` for a random canonical element.
pub fn roundtrip_case(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let field = if seed.is_multiple_of(3) {
        Field::prime(11).unwrap()
    } else {
        Q
    };
    let n = r.gen_range(0..=3usize);
    let d = r.gen_range(0..=4usize);
    let ring = named_ring(field, n, d);
    let f = superpoly(&mut r, field, n, d, 5, 6, None);
    let text = ring.format(&f);
    let back = superring_core::parse_expr(&text, &ring).map_err(|e| format!("`{text}`: {e}"))?;
    if back != f {
        return Err(format!("`{text}` parsed to `{}`", ring.format(&back)));
    }
    Ok(())
}

fn law_setup(seed: u64) -> (ChaCha8Rng, Field, usize, usize) {
    let mut r = rng(seed);
    let field = if seed.is_multiple_of(4) {
        Field::prime(7).unwrap()
    } else {
        Q
    };
    let n = r.gen_range(0..=3usize);
    let d = r.gen_range(0..=4usize);
    (r, field, n, d)
}

/// `fg = (-1)^{|f||g|} gf` on random homogeneous elements.
pub fn supercommutativity_case(seed: u64) -> Result<(), String> {
    let (mut r, field, n, d) = law_setup(seed);
    let (pf, pg) = (r.gen_bool(0.5), r.gen_bool(0.5));
    let f = superpoly(&mut r, field, n, d, 4, 4, Some(pf));
    let g = superpoly(&mut r, field, n, d, 4, 4, Some(pg));
    let gf = g.mul(&f);
    let odd = |p: &SuperPoly| p.parity() == superring_core::Parity::Odd;
    let expect = if odd(&f) && odd(&g) { gf.neg() } else { gf };
    if f.mul(&g) != expect {
        return Err(format!("seed {seed}: sign law fails"));
    }
    Ok(())
}

/// Associativity and two-sided distributivity, each product also compared
/// with the dense multiplier.
pub fn ring_axioms_case(seed: u64) -> Result<(), String> {
    let (mut r, field, n, d) = law_setup(seed);
    let a = superpoly(&mut r, field, n, d, 4, 4, None);
    let b = superpoly(&mut r, field, n, d, 4, 4, None);
    let c = superpoly(&mut r, field, n, d, 4, 4, None);
    let (da, db, dc) = (to_dense(&a), to_dense(&b), to_dense(&c));
    let abc = a.mul(&b).mul(&c);
    if abc != a.mul(&b.mul(&c)) {
        return Err(format!("seed {seed}: associativity fails"));
    }
    if to_dense(&abc) != dense_mul(&dense_mul(&da, &db, field), &dc, field) {
        return Err(format!(
            "seed {seed}: triple product disagrees with the dense multiplier"
        ));
    }
    let left = a.mul(&b.add(&c));
    if left != a.mul(&b).add(&a.mul(&c)) || b.add(&c).mul(&a) != b.mul(&a).add(&c.mul(&a)) {
        return Err(format!("seed {seed}: distributivity fails"));
    }
    let dense = dense_add(
        &dense_mul(&da, &db, field),
        &dense_mul(&da, &dc, field),
        field,
    );
    if to_dense(&left) != dense {
        return Err(format!(
            "seed {seed}: a(b+c) disagrees with the dense multiplier"
        ));
    }
    Ok(())
}

/// `θᵢ² = 0` and `f² = 0` for odd `f`.
pub fn odd_square_case(seed: u64) -> Result<(), String> {
    let (mut r, field, n, d) = law_setup(seed);
    let d = d.max(1);
    let i = r.gen_range(0..d);
    let t = SuperPoly::odd_var(field, n, d, i);
    let f = superpoly(&mut r, field, n, d, 4, 4, Some(true));
    if !t.mul(&t).is_zero() || !f.mul(&f).is_zero() {
        return Err(format!("seed {seed}: odd square is nonzero"));
    }
    Ok(())
}
