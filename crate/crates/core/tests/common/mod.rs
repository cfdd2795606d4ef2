//! Independent reference implementations used by the integration tests.
//!
//! Everything here is deliberately naive: dense enumeration and linear
//! algebra over Q, with its own polynomial arithmetic on exponent maps.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use subalg::poly::{Coefficient, Field, Monomial, PolyRing, Polynomial};

/// A polynomial over Q as an exponent map.
pub type Poly = BTreeMap<Vec<u32>, BigRational>;

pub fn to_map(p: &Polynomial) -> Poly {
    p.terms()
        .map(|(m, c)| match c {
            Coefficient::Rational(q) => (m.exponents().to_vec(), q.clone()),
            _ => panic!("oracles work over Q"),
        })
        .collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e.clone()).or_insert_with(BigRational::zero);
            *c += ca * cb;
            if c.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

pub fn one(nvars: usize) -> Poly {
    Poly::from([(vec![0; nvars], BigRational::one())])
}

/// `∏ fi^ai`.
pub fn power_product(f: &[Poly], a: &[u32], nvars: usize) -> Poly {
    let mut acc = one(nvars);
    for (fi, &k) in f.iter().zip(a) {
        for _ in 0..k {
            acc = mul(&acc, fi);
        }
    }
    acc
}

/// All exponent vectors of length `n` with total degree at most `d`.
pub fn exponents_upto(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Incremental row echelon form over Q.
#[derive(Default)]
pub struct Span {
    basis: Vec<(Vec<u32>, Poly)>,
}

impl Span {
    fn reduce(&self, v: &Poly) -> Poly {
        let mut v = v.clone();
        for (pivot, b) in &self.basis {
            if let Some(c) = v.get(pivot).cloned() {
                for (e, x) in b {
                    let y = v.entry(e.clone()).or_insert_with(BigRational::zero);
                    *y -= &c * x;
                    if y.is_zero() {
                        v.remove(e);
                    }
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: &Poly) {
        let r = self.reduce(v);
        if let Some((pivot, c)) = r.iter().next_back() {
            let inv = c.recip();
            let pivot = pivot.clone();
            let r: Poly = r.into_iter().map(|(e, x)| (e, x * &inv)).collect();
            self.basis.push((pivot, r));
        }
    }

    pub fn contains(&self, v: &Poly) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Smallest `D <= max_deg` with `g = p(f)` for some `deg p <= D`.
pub fn min_certificate_degree(f: &[Poly], g: &Poly, nvars: usize, max_deg: u32) -> Option<u32> {
    let mut span = Span::default();
    for d in 0..=max_deg {
        for a in exponents_upto(f.len(), d).into_iter().filter(|a| a.iter().sum::<u32>() == d) {
            span.insert(&power_product(f, &a, nvars));
        }
        if span.contains(g) {
            return Some(d);
        }
    }
    None
}

/// Smallest `D <= max_deg` with `g = Σ hi·fi` for some `deg hi <= D`.
pub fn min_representation_degree(f: &[Poly], g: &Poly, nvars: usize, max_deg: u32) -> Option<u32> {
    if g.is_empty() {
        return Some(0);
    }
    let mut span = Span::default();
    for d in 0..=max_deg {
        for gamma in exponents_upto(nvars, d).into_iter().filter(|a| a.iter().sum::<u32>() == d) {
            let m = Poly::from([(gamma, BigRational::one())]);
            for fi in f {
                span.insert(&mul(&m, fi));
            }
        }
        if span.contains(g) {
            return Some(d);
        }
    }
    None
}

/// Does some `T` meet every set in exactly one element?
pub fn one_in_three_brute(sets: &[Vec<u64>]) -> bool {
    let universe: Vec<u64> = {
        let mut u: Vec<u64> = sets.iter().flatten().copied().collect();
        u.sort();
        u.dedup();
        u
    };
    (0u32..1 << universe.len()).any(|mask| {
        sets.iter().all(|s| s.iter().filter(|x| mask >> universe.iter().position(|u| u == *x).unwrap() & 1 == 1).count() == 1)
    })
}

/// Exhaustive search over `0 <= ci <= |β| / |αi|`.
pub fn monomial_brute(gens: &[Vec<u32>], beta: &[u32]) -> bool {
    let total: u32 = beta.iter().sum();
    let bounds: Vec<u32> = gens
        .iter()
        .map(|a| {
            let d: u32 = a.iter().sum();
            total.checked_div(d).unwrap_or(0)
        })
        .collect();
    let mut c = vec![0u32; gens.len()];
    loop {
        if (0..beta.len()).all(|k| gens.iter().zip(&c).map(|(a, ci)| a[k] * ci).sum::<u32>() == beta[k]) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == c.len() {
                return false;
            }
            c[k] += 1;
            if c[k] <= bounds[k] {
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Degree bounds evaluated by a separate exact formula evaluator.
pub const HERMANN: [((u64, u64, u64, u64), u64); 7] = [
    ((2, 3, 2, 0), 1296),
    ((0, 5, 3, 7), 22),
    ((1, 2, 3, 4), 40),
    ((3, 2, 2, 1), 65537),
    ((2, 3, 0, 9), 9),
    ((1, 1, 1, 0), 1),
    ((4, 1, 2, 3), 65539),
];
pub const CI: [((u64, u64, u64), u64); 5] = [((3, 2, 1), 9), ((0, 5, 4), 5), ((4, 1, 2), 3), ((5, 3, 0), 243), ((2, 7, 10), 59)];
pub const DUBE: [((u64, u64), u64); 8] = [
    ((1, 2), 8),
    ((2, 2), 32),
    ((1, 1), 3),
    ((2, 1), 5),
    ((3, 1), 11),
    ((3, 2), 512),
    ((2, 3), 113),
    ((4, 2), 131072),
];
pub type MayrRitscherRow = ((u64, u64, &'static [u64]), u64);
pub const MAYR_RITSCHER: [MayrRitscherRow; 7] = [
    ((2, 1, &[2]), 32),
    ((1, 0, &[3]), 15),
    ((2, 0, &[2, 2]), 260),
    ((2, 2, &[2, 2]), 79),
    ((3, 1, &[3, 2]), 847602),
    ((3, 2, &[2]), 512),
    ((1, 1, &[5]), 61),
];
pub const CERTIFICATION: [((u64, u64, u64, u64), u64); 6] = [
    ((1, 1, 1, 1), 364),
    ((1, 1, 1, 0), 0),
    ((1, 1, 2, 1), 1419858),
    ((0, 1, 1, 1), 8),
    ((1, 0, 1, 2), 24),
    ((0, 0, 3, 1), 6),
];

/// The 12 configurations of the counting automaton on `00`, simulated by hand.
pub const COUNTER_TRACE_N2: [&str; 12] = [
    "(q0,1,▷00◁)",
    "(q1,0,▷10◁)",
    "(q0,1,▷10◁)",
    "(q0,2,▷00◁)",
    "(q1,1,▷01◁)",
    "(q1,0,▷01◁)",
    "(q0,1,▷01◁)",
    "(q1,0,▷11◁)",
    "(q0,1,▷11◁)",
    "(q0,2,▷01◁)",
    "(q0,3,▷00◁)",
    "(q_halt,2,▷00◁)",
];

pub fn xring(field: Field, n: usize) -> Arc<PolyRing> {
    PolyRing::with_names(field, (1..=n).map(|i| format!("x{i}"))).unwrap()
}

/// Up to `terms` terms of degree between 1 and `deg`, coefficients in -3..=3.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, terms: usize, deg: u32) -> Polynomial {
    let n = ring.nvars();
    let k = rng.gen_range(1..=terms);
    let ts: Vec<_> = (0..k)
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(1..=deg) {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::new(e), ring.field().from_int(rng.gen_range(-3..=3)))
        })
        .collect();
    Polynomial::from_terms(ring, ts).unwrap()
}

/// A nonzero homogeneous polynomial of degree `deg`.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, terms: usize, deg: u32) -> Polynomial {
    let n = ring.nvars();
    loop {
        let ts: Vec<_> = (0..rng.gen_range(1..=terms))
            .map(|_| {
                let mut e = vec![0u32; n];
                for _ in 0..deg {
                    e[rng.gen_range(0..n)] += 1;
                }
                (Monomial::new(e), ring.field().from_int(rng.gen_range(-3..=3)))
            })
            .collect();
        let p = Polynomial::from_terms(ring, ts).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random polynomial in `s` tag variables of degree at most `deg`.
pub fn random_tag_poly(rng: &mut ChaCha8Rng, tags: &Arc<PolyRing>, deg: u32) -> Polynomial {
    let s = tags.nvars();
    let ts: Vec<_> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let mut e = vec![0u32; s];
            if s > 0 {
                for _ in 0..rng.gen_range(0..=deg) {
                    e[rng.gen_range(0..s)] += 1;
                }
            }
            (Monomial::new(e), tags.field().from_int(rng.gen_range(-3..=3)))
        })
        .collect();
    Polynomial::from_terms(tags, ts).unwrap()
}
