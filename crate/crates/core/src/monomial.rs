//! Exponent vectors over the even variables and the term orders on them.

use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector of a monomial in the even (commuting) variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u32; 6]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial {
            deg: exps.iter().sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), o.nvars());
        Monomial {
            deg: self.deg + o.deg,
            exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial {
            deg: o.deg - self.deg,
            exps: o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 6]> = self
            .exps
            .iter()
            .zip(&o.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&o.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Inserts `k` fresh variables with exponent zero in front.
    pub fn prepend_vars(&self, k: usize) -> Monomial {
        let mut exps: SmallVec<[u32; 6]> = SmallVec::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Monomial {
            deg: self.deg,
            exps,
        }
    }

    /// Drops the first `k` variables; they must have exponent zero.
    pub fn drop_front(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        Monomial::from_exps(&self.exps[k..])
    }
}

/// Term orders on even monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Degree reverse lexicographic, `x1 > x2 > ... > xn`.
    Grevlex,
    /// Pure lexicographic, `x1 > x2 > ... > xn`.
    Lex,
    /// Block order: the variables flagged in the mask are compared first
    /// (grevlex on that block), then grevlex on the rest.
    Elim(u64),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => grevlex(a, b),
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::Elim(mask) => {
                let block = |m: &Monomial| -> (u32, SmallVec<[u32; 6]>, SmallVec<[u32; 6]>) {
                    let mut inb = SmallVec::new();
                    let mut out = SmallVec::new();
                    for (i, e) in m.exps.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            inb.push(*e);
                        } else {
                            out.push(*e);
                        }
                    }
                    (inb.iter().sum(), inb, out)
                };
                let (da, ia, oa) = block(a);
                let (db, ib, ob) = block(b);
                da.cmp(&db)
                    .then_with(|| revlex_tail(&ia, &ib))
                    .then_with(|| {
                        let sa: u32 = oa.iter().sum();
                        let sb: u32 = ob.iter().sum();
                        sa.cmp(&sb).then_with(|| revlex_tail(&oa, &ob))
                    })
            }
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.deg
        .cmp(&b.deg)
        .then_with(|| revlex_tail(&a.exps, &b.exps))
}

// Equal total degree assumed: the monomial with the smaller exponent in the
// last differing variable is larger.
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}
