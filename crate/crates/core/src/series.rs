//! Hilbert–Poincaré series of `k[S]` and the identities they satisfy.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ci::glue;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::semigroup::NumericalSemigroup;

/// `Σ_{s ∈ S, s ≤ n} t^s`.
pub fn poincare_truncated(s: &NumericalSemigroup, n: u64) -> IntPolynomial {
    IntPolynomial::new(
        (0..=n)
            .map(|k| BigInt::from(u8::from(s.contains(k as i64))))
            .collect(),
    )
}

/// `(1 − t) P_S(t) = Σ_{s<c} t^s (1 − t) + t^c`.
pub(crate) fn one_minus_t_times_series(s: &NumericalSemigroup) -> IntPolynomial {
    let c = s.conductor() as usize;
    let below = IntPolynomial::new(
        (0..c)
            .map(|k| BigInt::from(u8::from(s.contains(k as i64))))
            .collect(),
    );
    &below * &IntPolynomial::one_minus_t_pow(1) + IntPolynomial::monomial(1, c)
}

/// The numerator `Q` in `P_S(t) = Q(t) / Π (1 − t^{a_i})` over the minimal
/// generators.
pub fn hilbert_numerator(s: &NumericalSemigroup) -> IntPolynomial {
    let gens = s.minimal_generators();
    // one factor (1 − t^{a_1}) absorbs the (1 − t) of the finite form
    let geometric = IntPolynomial::new(vec![BigInt::one(); gens[0] as usize]);
    gens[1..]
        .iter()
        .fold(&one_minus_t_times_series(s) * &geometric, |acc, &a| {
            &acc * &IntPolynomial::one_minus_t_pow(a as usize)
        })
}

/// Power series `Q / Π (1 − t^{a_i})` through degree `n`.
pub fn expand_rational(numerator: &IntPolynomial, denominator_exponents: &[u64], n: u64) -> IntPolynomial {
    denominator_exponents
        .iter()
        .fold(numerator.truncate(n as usize), |acc, &a| {
            acc.series_div_one_minus_t_pow(a as usize, n as usize)
        })
}

/// Stanley's functional equation for the one-dimensional domain `k[S]`,
/// tested as palindromicity of `Q` up to a global sign.
pub fn gorenstein_functional_check(s: &NumericalSemigroup) -> bool {
    hilbert_numerator(s).is_palindromic_up_to_sign()
}

/// `Q = Π_{m ∈ degrees} (1 − t^m)` exactly.
pub fn ci_numerator_check(s: &NumericalSemigroup, degrees: &[u64]) -> bool {
    let product = degrees
        .iter()
        .fold(IntPolynomial::one(), |acc, &m| &acc * &IntPolynomial::one_minus_t_pow(m as usize));
    hilbert_numerator(s) == product
}

static CYCLOTOMIC: OnceLock<RwLock<BTreeMap<usize, Arc<IntPolynomial>>>> = OnceLock::new();

/// `Φ_n`, built as `Π_{d | n} (t^d − 1)^{μ(n/d)}` with exact sparse
/// multiplications and divisions, and cached.
pub fn cyclotomic(n: usize) -> Arc<IntPolynomial> {
    assert!(n > 0);
    let cache = CYCLOTOMIC.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let mut coeffs = vec![0i64; 1];
    coeffs[0] = 1;
    let mut dividers = Vec::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match mobius(n / d) {
            1 => multiply_binomial(&mut coeffs, d),
            -1 => dividers.push(d),
            _ => {}
        }
    }
    for d in dividers {
        divide_binomial(&mut coeffs, d);
    }
    let p = Arc::new(IntPolynomial::from_i64(&coeffs));
    cache
        .write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

// coeffs *= (t^d − 1)
fn multiply_binomial(coeffs: &mut Vec<i64>, d: usize) {
    let old = coeffs.clone();
    coeffs.resize(old.len() + d, 0);
    for c in coeffs.iter_mut().take(old.len()) {
        *c = -*c;
    }
    for (i, c) in old.into_iter().enumerate() {
        coeffs[i + d] += c;
    }
}

// coeffs /= (t^d − 1), exact
fn divide_binomial(coeffs: &mut Vec<i64>, d: usize) {
    let n = coeffs.len() - 1;
    let mut q = vec![0i64; n + 1 - d];
    let mut r = coeffs.clone();
    for k in (0..q.len()).rev() {
        q[k] = r[k + d];
        r[k + d] = 0;
        r[k] += q[k];
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    *coeffs = q;
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn totients(limit: usize) -> Vec<usize> {
    let mut phi: Vec<usize> = (0..=limit).collect();
    for p in 2..=limit {
        if phi[p] == p {
            for k in (p..=limit).step_by(p) {
                phi[k] -= phi[k] / p;
            }
        }
    }
    phi
}

/// Largest `d` that can have `φ(d) ≤ deg`, from `φ(d) > d / (e^γ ln ln d + 3 / ln ln d)`.
fn index_bound(deg: usize) -> usize {
    let mut d = 30usize.max(2 * deg + 2);
    loop {
        let ll = (d as f64).ln().ln();
        if d as f64 / (1.7811 * ll + 3.0 / ll) > deg as f64 + 1.0 {
            return d;
        }
        d *= 2;
    }
}

/// Floating evaluation at `ζ_d = e^{2πi/d}`; false only when `p(ζ_d) ≠ 0`
/// is certain.
fn may_vanish_at_root_of_unity(p: &IntPolynomial, d: usize) -> bool {
    let theta = std::f64::consts::TAU / d as f64;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    let mut l1 = 0.0f64;
    for (k, c) in p.coeffs().iter().enumerate() {
        let c = c.to_f64().unwrap_or(f64::INFINITY);
        let angle = theta * (k % d) as f64;
        re += c * angle.cos();
        im += c * angle.sin();
        l1 += c.abs();
    }
    if !l1.is_finite() {
        return true;
    }
    (re * re + im * im).sqrt() <= 1e-8 * (l1 + 1.0)
}

/// True iff `q` is `± t^k` times a product of cyclotomic polynomials.
pub fn cyclotomic_test(q: &IntPolynomial) -> Result<bool> {
    let Some(v) = q.valuation() else {
        return Err(Error::ZeroPolynomial);
    };
    let mut rest = q.shift_down(v);
    let deg = rest.degree().unwrap_or(0);
    if deg > 0 {
        let limit = index_bound(deg);
        let phi = totients(limit);
        for d in 1..=limit {
            let current = rest.degree().unwrap_or(0);
            if current == 0 {
                break;
            }
            if phi[d] > current || !may_vanish_at_root_of_unity(&rest, d) {
                continue;
            }
            let cyc = cyclotomic(d);
            while let Some(next) = rest.div_exact(&cyc) {
                rest = next;
                if rest.degree() == Some(0) {
                    break;
                }
            }
        }
    }
    Ok(rest.degree() == Some(0) && rest.coeff(0).abs().is_one())
}

/// Checks `P_S(t) = (1 − t^{d_1 d_2}) P_{S_1}(t^{d_1}) P_{S_2}(t^{d_2})` for
/// the gluing, by comparing power series up to a degree that bounds the
/// numerators of both sides over their common denominator.
pub fn gluing_series_check(s1: &NumericalSemigroup, s2: &NumericalSemigroup, d1: u64, d2: u64) -> Result<bool> {
    let glued = glue(s1, s2, d1, d2)?;
    let s = &glued.semigroup;
    let span = |t: &NumericalSemigroup| {
        (t.conductor() + t.minimal_generators().iter().sum::<u64>()).saturating_sub(1)
    };
    let n = span(s).max(d1 * d2 + d1 * span(s1) + d2 * span(s2));
    let lhs = poincare_truncated(s, n);
    let p1 = poincare_truncated(s1, n / d1).substitute_power(d1 as usize);
    let p2 = poincare_truncated(s2, n / d2).substitute_power(d2 as usize);
    let rhs = IntPolynomial::one_minus_t_pow(glued.relation_degree as usize)
        .mul_truncated(&p1.mul_truncated(&p2, n as usize), n as usize);
    Ok(lhs == rhs)
}

/// Multiplicity of `t = 1` as a root.
pub fn root_multiplicity_at_one(p: &IntPolynomial) -> usize {
    let mut rest = p.clone();
    let mut k = 0;
    let line = IntPolynomial::one_minus_t_pow(1);
    while !rest.is_zero() && rest.eval_one().is_zero() {
        rest = rest.div_exact(&line).expect("root at 1 divides exactly");
        k += 1;
    }
    k
}
