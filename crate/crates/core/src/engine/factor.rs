//! Univariate factorization over GF(p) (squarefree, distinct-degree and
//! equal-degree splitting) and the irreducibility certificate over ℚ that
//! rests on it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::{inv_mod, mul_mod, Field, Scalar};

/// Dense polynomial over GF(p), lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl UPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly { p, c }
    }

    fn one(p: u64) -> Self {
        UPoly::new(p, vec![1])
    }

    fn x(p: u64) -> Self {
        UPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        UPoly::new(
            self.p,
            self.c.iter().map(|&a| mul_mod(a, inv, self.p)).collect(),
        )
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
            .collect();
        UPoly::new(p, v)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::new(self.p, vec![]);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        UPoly::new(self.p, v)
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mul_mod(r[k + dd], inv, p);
            q[k] = coef;
            if coef != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mul_mod(coef, b, p)) % p;
                }
            }
        }
        (UPoly::new(p, q), UPoly::new(p, r))
    }

    fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> UPoly {
        let p = self.p;
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mul_mod(a, i as u64 % p, p))
            .collect();
        UPoly::new(p, v)
    }

    fn powmod(&self, mut e: u128, m: &UPoly) -> UPoly {
        let mut base = self.rem(m);
        let mut acc = UPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    fn powmod_big(&self, e: &BigUint, m: &UPoly) -> UPoly {
        let mut acc = UPoly::one(self.p).rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(self).rem(m);
            }
        }
        acc
    }

    // f(x) = g(x^p) -> g
    fn pth_root(&self) -> UPoly {
        let p = self.p as usize;
        let v = self.c.iter().step_by(p).copied().collect();
        UPoly::new(self.p, v)
    }
}

/// Squarefree decomposition of a monic polynomial: `(factor, multiplicity)`.
fn squarefree(f: &UPoly) -> Vec<(UPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree(&f.pth_root()) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (g, m) in squarefree(&c.pth_root()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &UPoly) -> Vec<(UPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = UPoly::x(p);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).0.monic();
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of irreducibles of degree `d`.
fn equal_degree(f: &UPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<UPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = UPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd(&a);
        let split = if g.degree().unwrap_or(0) > 0 && g.degree() != f.degree() {
            Some(g)
        } else {
            let b = a.powmod_big(&e, f).sub(&UPoly::one(p));
            let g = f.gcd(&b);
            if g.degree().unwrap_or(0) > 0 && g.degree() != f.degree() {
                Some(g)
            } else {
                None
            }
        };
        if let Some(g) = split {
            let h = f.divrem(&g).0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities.
pub fn factor_mod_p(f: &UPoly) -> Vec<(UPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    for (sf, mult) in squarefree(&f.monic()) {
        for (g, d) in distinct_degree(&sf) {
            for h in equal_degree(&g, d, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.c
            .len()
            .cmp(&b.0.c.len())
            .then_with(|| a.0.c.cmp(&b.0.c))
    });
    out
}

/// Rabin-style irreducibility check over GF(p).
pub fn is_irreducible_mod_p(f: &UPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fac = factor_mod_p(f);
            fac.len() == 1 && fac[0].1 == 1
        }
    }
}

/// Outcome of the irreducibility certifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibleCert {
    /// Irreducible modulo `p` with unchanged degree.
    Irreducible {
        witness_prime: u64,
    },
    /// A nontrivial factor.
    Reducible(Poly),
    Unknown,
}

pub const CERT_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

// Rational-root search is skipped when coefficients are too large to
// enumerate divisors.
const ROOT_SEARCH_BOUND: u64 = 1_000_000_000_000;

/// Certifies irreducibility of a univariate polynomial over ℚ (or decides it
/// exactly over GF(p)).
pub fn irreducible_cert(f: &Poly) -> Result<IrreducibleCert> {
    let support = f.support();
    if f.is_zero() || f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if support.len() != 1 {
        return Err(Error::NotUnivariate);
    }
    let var = support[0];
    let coeffs = f.univariate_coeffs(var).expect("univariate");
    match f.field() {
        Field::Prime(p) => {
            let u = UPoly::new(p, coeffs.iter().map(fp_value).collect());
            if is_irreducible_mod_p(&u) {
                return Ok(IrreducibleCert::Irreducible { witness_prime: p });
            }
            let fac = factor_mod_p(&u);
            let g = &fac[0].0;
            let sc: Vec<Scalar> = g.c.iter().map(|&v| Scalar::Fp { v, p }).collect();
            Ok(IrreducibleCert::Reducible(Poly::from_univariate(
                f.field(),
                f.nvars(),
                var,
                &sc,
            )))
        }
        Field::Rational => {
            let ints = primitive_integer(&coeffs);
            let deg = ints.len() - 1;
            if deg == 1 {
                let p = CERT_PRIMES
                    .iter()
                    .copied()
                    .find(|&p| !(&ints[1] % BigInt::from(p)).is_zero())
                    .unwrap_or(3);
                return Ok(IrreducibleCert::Irreducible { witness_prime: p });
            }
            if let Some(root) = rational_root(&ints) {
                let lin = [Scalar::Q(-root), Scalar::Q(BigRational::one())];
                return Ok(IrreducibleCert::Reducible(Poly::from_univariate(
                    f.field(),
                    f.nvars(),
                    var,
                    &lin,
                )));
            }
            for &p in CERT_PRIMES.iter() {
                let pb = BigInt::from(p);
                if (&ints[deg] % &pb).is_zero() {
                    continue;
                }
                let u = UPoly::new(
                    p,
                    ints.iter()
                        .map(|a| a.mod_floor(&pb).to_u64().unwrap())
                        .collect(),
                );
                if u.gcd(&u.derivative()).degree() == Some(0) && is_irreducible_mod_p(&u) {
                    return Ok(IrreducibleCert::Irreducible { witness_prime: p });
                }
            }
            Ok(IrreducibleCert::Unknown)
        }
    }
}

fn fp_value(s: &Scalar) -> u64 {
    match s {
        Scalar::Fp { v, .. } => *v,
        Scalar::Q(_) => panic!("rational coefficient in a prime-field polynomial"),
    }
}

/// Clears denominators and content; leading coefficient made positive.
fn primitive_integer(coeffs: &[Scalar]) -> Vec<BigInt> {
    let rats: Vec<BigRational> = coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients").clone())
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats
        .iter()
        .map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if !g.is_zero() {
        for a in ints.iter_mut() {
            *a /= &g;
        }
    }
    if ints.last().map(|a| a.is_negative()).unwrap_or(false) {
        for a in ints.iter_mut() {
            *a = -a.clone();
        }
    }
    ints
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > ROOT_SEARCH_BOUND {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

fn rational_root(ints: &[BigInt]) -> Option<BigRational> {
    if ints[0].is_zero() {
        return Some(BigRational::zero());
    }
    let nums = divisors(&ints[0])?;
    let dens = divisors(ints.last().unwrap())?;
    for &a in &nums {
        for &b in &dens {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * BigInt::from(a), BigInt::from(b));
                let mut acc = BigRational::zero();
                for c in ints.iter().rev() {
                    acc = acc * &r + BigRational::from_integer(c.clone());
                }
                if acc.is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn upoly(p: u64, c: &[u64]) -> UPoly {
        UPoly::new(p, c.to_vec())
    }

    fn qpoly(c: &[i64]) -> Poly {
        let sc: Vec<Scalar> = c.iter().map(|&v| Q.int(v)).collect();
        Poly::from_univariate(Q, 1, 0, &sc)
    }

    #[test]
    fn x2_plus_1_certified_mod_3() {
        assert_eq!(
            irreducible_cert(&qpoly(&[1, 0, 1])).unwrap(),
            IrreducibleCert::Irreducible { witness_prime: 3 }
        );
    }

    #[test]
    fn x2_minus_1_has_rational_root() {
        match irreducible_cert(&qpoly(&[-1, 0, 1])).unwrap() {
            IrreducibleCert::Reducible(g) => {
                assert_eq!(g.total_degree(), Some(1));
                assert!(qpoly(&[-1, 0, 1]).exact_div(&g).is_some());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn x4_plus_1_is_unknown() {
        assert_eq!(
            irreducible_cert(&qpoly(&[1, 0, 0, 0, 1])).unwrap(),
            IrreducibleCert::Unknown
        );
    }

    #[test]
    fn constant_input_rejected() {
        assert_eq!(irreducible_cert(&qpoly(&[3])), Err(Error::ConstantInput));
    }

    #[test]
    fn factorization_multiplies_back() {
        // (x+1)^2 (x^2+1) (x+2) over GF(7)
        let p = 7;
        let f = upoly(p, &[1, 1])
            .mul(&upoly(p, &[1, 1]))
            .mul(&upoly(p, &[1, 0, 1]))
            .mul(&upoly(p, &[2, 1]));
        let fac = factor_mod_p(&f);
        let mut prod = UPoly::one(p);
        for (g, m) in &fac {
            assert!(is_irreducible_mod_p(g));
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f.monic());
        assert_eq!(fac.len(), 3);
    }

    #[test]
    fn inseparable_power_in_char_p() {
        // x^3 - 1 = (x - 1)^3 over GF(3)
        let f = upoly(3, &[2, 0, 0, 1]);
        assert_eq!(factor_mod_p(&f), vec![(upoly(3, &[2, 1]), 3)]);
    }

    // every degree-2 and degree-3 monic polynomial over GF(5): the
    // irreducibility verdict agrees with the absence of roots
    #[test]
    fn low_degree_irreducibility_matches_root_search() {
        let p: u64 = 5;
        for deg in 2..=3usize {
            let count = p.pow(deg as u32);
            for code in 0..count {
                let mut c: Vec<u64> = (0..deg).map(|i| code / p.pow(i as u32) % p).collect();
                c.push(1);
                let f = upoly(p, &c);
                let has_root = (0..p).any(|a| {
                    let mut acc = 0u64;
                    for &ci in f.c.iter().rev() {
                        acc = (mul_mod(acc, a, p) + ci) % p;
                    }
                    acc == 0
                });
                assert_eq!(is_irreducible_mod_p(&f), !has_root, "{c:?}");
            }
        }
    }
}
