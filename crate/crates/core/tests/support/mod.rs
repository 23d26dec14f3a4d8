//! Test-only oracles and fixtures shared by the integration targets.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use nsgp::NumericalSemigroup;
use rand::Rng;
use rayon::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

pub fn sg(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(gens.iter().copied()).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Random semigroups with at most five generators from `2..=40`, gcd 1.
pub fn random_suite(count: usize) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=5);
        let hi = if rng.gen_bool(0.4) { 15 } else { 40 };
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=hi)).collect();
        if gens.iter().fold(0, |g, &a| gcd(g, a)) != 1 {
            continue;
        }
        out.push(NumericalSemigroup::new(gens).unwrap());
    }
    out
}

/// Membership by plain dynamic programming over the given generators.
pub fn brute_membership(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for n in 1..=bound {
        reach[n] = gens.iter().any(|&a| a as usize <= n && reach[n - a as usize]);
    }
    reach
}

/// Every factorization of `k` over `gens`, by plain recursion.
pub fn brute_factorizations(gens: &[u64], k: u64) -> Vec<Vec<u64>> {
    fn go(gens: &[u64], i: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for c in 0..=rest / gens[i] {
            cur.push(c);
            go(gens, i + 1, rest - c * gens[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

const PRIMES: [u64; 2] = [2_147_483_647, 1_000_000_007];

/// Incremental sparse row echelon form over `F_p`.
struct SparseEchelon {
    p: u64,
    pivots: HashMap<usize, Vec<(usize, u64)>>,
}

impl SparseEchelon {
    fn new(p: u64) -> Self {
        Self {
            p,
            pivots: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut base, mut e, mut r) = (a % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, base, self.p);
            }
            base = mul(base, base, self.p);
            e >>= 1;
        }
        r
    }

    /// Inserts a row given as `(column, value mod p)`; true if independent.
    fn insert(&mut self, row: Vec<(usize, u64)>) -> bool {
        let p = self.p;
        let mut row: Vec<(usize, u64)> = row.into_iter().map(|(c, v)| (c, v % p)).collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        row.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 = (a.1 + b.1) % p;
                true
            } else {
                false
            }
        });
        row.retain(|&(_, v)| v != 0);
        // rows stay sorted, so the leading entry is the pivot candidate
        while let Some(&(col, val)) = row.first() {
            match self.pivots.get(&col) {
                None => {
                    let inv = self.inv(val);
                    row.iter_mut().for_each(|e| e.1 = mul(e.1, inv, p));
                    self.pivots.insert(col, row);
                    return true;
                }
                Some(pivot_row) => row = axpy(&row, pivot_row, p - val, p),
            }
        }
        false
    }
}

/// `row + factor * pivot` over sorted sparse rows.
fn axpy(row: &[(usize, u64)], pivot: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i]);
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, mul(pivot[j].1, factor, p)));
            j += 1;
        } else {
            let v = (row[i].1 + mul(pivot[j].1, factor, p)) % p;
            if v != 0 {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn modp(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// `dim T¹(n)` of the monomial curve of `s` computed directly from the
/// definition `T¹ = Hom_R(I/I², R) / Der(P, R)`, without using any
/// presentation of `I`.
///
/// A degree-`n` homomorphism is a family of linear functionals on the
/// graded pieces `I_k` (sum-zero combinations of monomials of degree `k`),
/// zero when `k + n ∉ S`, compatible with multiplication by every `x_j`.
/// Functionals on `I_k` are coordinatized by `y_{k,u} = x_{k,u} − x_{k,u_0}`
/// for a base monomial `u_0`. Degrees run up to `top`.
pub fn t1_oracle_dim(s: &NumericalSemigroup, n: i64, top: u64) -> usize {
    oracle_dim(s, &FactorTables::new(s, top), n)
}

/// Factorizations of every degree up to `top`, with a reverse index.
pub struct FactorTables {
    top: u64,
    facts: Vec<Vec<Vec<u64>>>,
    index: Vec<HashMap<Vec<u64>, usize>>,
}

impl FactorTables {
    pub fn new(s: &NumericalSemigroup, top: u64) -> Self {
        let gens = s.minimal_generators();
        let facts: Vec<Vec<Vec<u64>>> = (0..=top).map(|k| brute_factorizations(gens, k)).collect();
        let index = facts
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect())
            .collect();
        Self { top, facts, index }
    }
}

fn oracle_dim(s: &NumericalSemigroup, tables: &FactorTables, n: i64) -> usize {
    let gens = s.minimal_generators().to_vec();
    let g = gens.len();
    let (top, facts, index) = (tables.top, &tables.facts, &tables.index);
    let in_s = |m: i64| s.contains(m);

    // variable ids for (k, u) with u not the base monomial and k + n ∈ S
    let mut var: HashMap<(u64, usize), usize> = HashMap::new();
    for k in 0..=top {
        if !in_s(k as i64 + n) {
            continue;
        }
        for i in 1..facts[k as usize].len() {
            let id = var.len();
            var.insert((k, i), id);
        }
    }
    let nvars = var.len();
    if nvars == 0 {
        return 0;
    }

    // y_{k,u} as a sparse combination of variables (base monomial is 0)
    let y = |k: u64, i: usize| -> Option<usize> {
        if i == 0 {
            None
        } else {
            var.get(&(k, i)).copied()
        }
    };

    let mut constraints: Vec<Vec<(usize, i64)>> = Vec::new();
    for k in 0..=top {
        let fs = &facts[k as usize];
        if fs.len() < 2 {
            continue;
        }
        for (j, &a) in gens.iter().enumerate() {
            let k2 = k + a;
            if k2 > top {
                continue;
            }
            let shift = |u: &Vec<u64>| {
                let mut v = u.clone();
                v[j] += 1;
                index[k2 as usize][&v]
            };
            let base_up = shift(&fs[0]);
            for (i, u) in fs.iter().enumerate().skip(1) {
                // y_{k2,u+e_j} − y_{k2,u0+e_j} − y_{k,u} = 0
                let mut row: BTreeMap<usize, i64> = BTreeMap::new();
                let up = shift(u);
                if let Some(v) = y(k2, up) {
                    *row.entry(v).or_insert(0) += 1;
                }
                if let Some(v) = y(k2, base_up) {
                    *row.entry(v).or_insert(0) -= 1;
                }
                if let Some(v) = y(k, i) {
                    *row.entry(v).or_insert(0) -= 1;
                }
                if !row.is_empty() {
                    constraints.push(row.into_iter().collect());
                }
            }
        }
    }

    // derivations t^{n + a_j} ∂_j
    let mut derivations: Vec<Vec<(usize, i64)>> = Vec::new();
    for j in 0..g {
        if !in_s(n + gens[j] as i64) {
            continue;
        }
        let mut row = Vec::new();
        for (&(k, i), &v) in &var {
            let fs = &facts[k as usize];
            let val = fs[i][j] as i64 - fs[0][j] as i64;
            if val != 0 {
                row.push((v, val));
            }
        }
        derivations.push(row);
    }

    // derivations are homomorphisms themselves
    for d in &derivations {
        let mut value = vec![0i64; nvars];
        d.iter().for_each(|&(col, v)| value[col] = v);
        for c in &constraints {
            let dot: i64 = c.iter().map(|&(col, v)| v * value[col]).sum();
            assert_eq!(dot, 0, "derivation violates a compatibility constraint");
        }
    }

    // a rank mod p never exceeds the rank over Q
    let rank = |rows: &[Vec<(usize, i64)>]| {
        PRIMES
            .iter()
            .map(|&p| {
                let mut ech = SparseEchelon::new(p);
                // high degrees pivot first, which keeps fill-in small
                for r in rows {
                    ech.insert(r.iter().map(|&(col, v)| (nvars - 1 - col, modp(v, p))).collect());
                }
                ech.rank()
            })
            .max()
            .unwrap()
    };
    let hom = nvars - rank(&constraints);
    hom - rank(&derivations)
}

/// Full oracle spectrum over a weight range wide enough to contain every
/// nonzero piece.
pub fn t1_oracle_spectrum(s: &NumericalSemigroup) -> BTreeMap<i64, usize> {
    let c = s.conductor();
    let sum: u64 = s.minimal_generators().iter().sum();
    let maxgen = *s.minimal_generators().iter().max().unwrap();
    let lo = -((c + sum) as i64);
    let hi = (c + maxgen) as i64;
    let top = 2 * (c + sum) + maxgen;
    let tables = FactorTables::new(s, top);
    (lo..=hi)
        .into_par_iter()
        .filter_map(|n| {
            let d = oracle_dim(s, &tables, n);
            (d > 0).then_some((n, d))
        })
        .collect()
}
