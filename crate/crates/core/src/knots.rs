//! Alexander polynomials of algebraic and L-space knots and the formal
//! semigroups read off from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::semigroup::NumericalSemigroup;
use crate::series::one_minus_t_times_series;

/// `(1 − t) Σ_{s∈S} t^s`, a polynomial of degree `c`.
pub fn alexander_from_semigroup(s: &NumericalSemigroup) -> IntPolynomial {
    one_minus_t_times_series(s)
}

/// Removes a unit factor `± t^k` so the constant term is `+1`.
pub fn normalize_alexander(p: &IntPolynomial) -> Result<IntPolynomial> {
    let v = p.valuation().ok_or(Error::ZeroPolynomial)?;
    let q = p.shift_down(v);
    let c0 = q.coeff(0);
    if c0 == BigInt::one() {
        Ok(q)
    } else if c0 == -BigInt::one() {
        Ok(-q)
    } else {
        Err(Error::NotLSpaceShape(format!("constant term {c0} is not a unit")))
    }
}

/// Validates the L-space shape: coefficients in `{−1, 0, 1}`, nonzero
/// coefficients alternating in sign from `+1` at degree 0.
pub fn validate_alexander(p: &IntPolynomial) -> Result<Vec<usize>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.coeff(0) != BigInt::one() {
        return Err(Error::NotLSpaceShape("constant term must be +1".into()));
    }
    let mut exponents = Vec::new();
    let mut expected = 1i64;
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match c.to_i64() {
            Some(v) if v == expected => {}
            Some(v) if v.abs() == 1 => {
                return Err(Error::NotLSpaceShape(format!("signs do not alternate at degree {i}")))
            }
            _ => return Err(Error::NotLSpaceShape(format!("coefficient {c} at degree {i}"))),
        }
        exponents.push(i);
        expected = -expected;
    }
    Ok(exponents)
}

/// A set `F ⊆ ℕ` given by its finitely many elements below `tail_from` and
/// every integer from `tail_from` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSemigroup {
    pub sporadic: Vec<u64>,
    pub tail_from: u64,
    pub closed: bool,
    pub witness: Option<(u64, u64)>,
}

impl FormalSemigroup {
    /// Builds the set and runs the closure check.
    pub fn new(mut sporadic: Vec<u64>, tail_from: u64) -> Self {
        sporadic.retain(|&x| x < tail_from);
        sporadic.sort_unstable();
        sporadic.dedup();
        let mut f = Self {
            sporadic,
            tail_from,
            closed: true,
            witness: None,
        };
        let check = is_true_semigroup(&f);
        f.closed = check.closed;
        f.witness = check.witness;
        f
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.tail_from || self.sporadic.binary_search(&n).is_ok()
    }

    /// Elements up to `bound`, inclusive.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }
}

impl Serialize for FormalSemigroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("sporadic", &self.sporadic)?;
        map.serialize_entry("tail_from", &self.tail_from)?;
        map.serialize_entry("closed", &self.closed)?;
        map.serialize_entry("witness", &self.witness.map(|(x, y)| [x, y]))?;
        map.end()
    }
}

/// Reads `p(t)/(1 − t)` as the indicator series of a set.
pub fn formal_semigroup_from_alexander(p: &IntPolynomial) -> Result<FormalSemigroup> {
    validate_alexander(p)?;
    let deg = p.degree().expect("nonzero");
    let mut sum = BigInt::zero();
    let mut sporadic = Vec::new();
    for i in 0..=deg {
        sum += p.coeff(i);
        match sum.to_i64() {
            Some(1) if i < deg => sporadic.push(i as u64),
            Some(1) => {}
            Some(0) if i < deg => {}
            _ => {
                return Err(Error::QuotientNotIndicator {
                    degree: i,
                    sum: sum.to_i64().unwrap_or(i64::MAX),
                })
            }
        }
    }
    Ok(FormalSemigroup::new(sporadic, deg as u64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCheck {
    pub closed: bool,
    pub witness: Option<(u64, u64)>,
}

/// Exhaustive closure check; the witness is the lexicographically least
/// pair `x ≤ y` of elements whose sum is missing.
pub fn is_true_semigroup(f: &FormalSemigroup) -> ClosureCheck {
    if !f.contains(0) {
        return ClosureCheck {
            closed: false,
            witness: None,
        };
    }
    // a sum involving a tail element stays in the tail
    for (i, &x) in f.sporadic.iter().enumerate() {
        for &y in &f.sporadic[i..] {
            if !f.contains(x + y) {
                return ClosureCheck {
                    closed: false,
                    witness: Some((x, y)),
                };
            }
        }
    }
    ClosureCheck {
        closed: true,
        witness: None,
    }
}

/// Necessary condition for `F` to be the formal semigroup of an L-space
/// knot: `F` is a semigroup and that semigroup is symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realizability {
    pub is_semigroup: bool,
    /// `None` when `F` is not closed.
    pub symmetric: Option<bool>,
    pub passes: bool,
    pub semigroup: Option<NumericalSemigroup>,
}

/// Converts a closed formal semigroup into a numerical semigroup.
pub fn to_numerical_semigroup(f: &FormalSemigroup) -> Option<NumericalSemigroup> {
    if !f.closed || !f.contains(0) {
        return None;
    }
    let least = (1..).find(|&n| f.contains(n)).expect("tail is nonempty");
    let gens: Vec<u64> = (1..=f.tail_from + least).filter(|&n| f.contains(n)).collect();
    NumericalSemigroup::new(gens).ok()
}

pub fn realizability_necessary(f: &FormalSemigroup) -> Realizability {
    match to_numerical_semigroup(f) {
        None => Realizability {
            is_semigroup: false,
            symmetric: None,
            passes: false,
            semigroup: None,
        },
        Some(s) => {
            let symmetric = s.is_symmetric();
            Realizability {
                is_semigroup: true,
                symmetric: Some(symmetric),
                passes: symmetric,
                semigroup: Some(s),
            }
        }
    }
}

/// `Δ_{T(p,q)} = (1 − t)(1 − t^{pq}) / ((1 − t^p)(1 − t^q))`.
pub fn torus_alexander(p: u64, q: u64) -> Result<IntPolynomial> {
    if p == 0 || q == 0 {
        return Err(Error::ZeroArgument);
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let num = &IntPolynomial::one_minus_t_pow(1) * &IntPolynomial::one_minus_t_pow((p * q) as usize);
    let den = &IntPolynomial::one_minus_t_pow(p as usize) * &IntPolynomial::one_minus_t_pow(q as usize);
    num.div_exact(&den)
        .ok_or_else(|| Error::InternalInconsistency(format!("torus quotient ({p},{q}) not exact")))
}

/// The two families of L-space knot semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `⟨4, 4n+2, 4n+5⟩`.
    A,
    /// `⟨6, 6n+4, 6n+8, 12n+11, 12n+15⟩`.
    B,
}

pub fn teragaito_family(n: u64, family: Family) -> Result<NumericalSemigroup> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    match family {
        Family::A => NumericalSemigroup::new([4, 4 * n + 2, 4 * n + 5]),
        Family::B => NumericalSemigroup::new([6, 6 * n + 4, 6 * n + 8, 12 * n + 11, 12 * n + 15]),
    }
}

/// Coefficient sequence equals its reversal, up to sign.
pub fn is_palindromic(p: &IntPolynomial) -> bool {
    let r = p.reversed();
    r == *p || r == -p.clone()
}
