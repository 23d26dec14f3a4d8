//! Exact univariate polynomials over ℤ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};

/// Polynomial in `t` with arbitrary-precision integer coefficients, indexed
/// from degree 0. Trailing zeros are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 − t^n`.
    pub fn one_minus_t_pow(n: usize) -> Self {
        Self::one() - Self::monomial(1, n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k > 0);
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// `t^{deg p} p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Coefficient sequence reads the same backwards, up to a global sign.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let r = self.reversed();
        let lead_shift = self.valuation().unwrap_or(0);
        // compare after removing the t-power factor so the reversal aligns
        let core = self.shift_down(lead_shift);
        let rcore = r.shift_down(r.valuation().unwrap_or(0));
        rcore == core || rcore == -core.clone()
    }

    /// Divides by `t^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Exact quotient `self / divisor` over ℤ, or `None` when the division
    /// leaves a remainder or needs non-integral coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(Self::zero());
        };
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Power-series coefficients of `self / (1 − t^a)` through degree `n`.
    pub fn series_div_one_minus_t_pow(&self, a: usize, n: usize) -> Self {
        assert!(a > 0);
        let mut out: Vec<BigInt> = (0..=n).map(|i| self.coeff(i)).collect();
        for i in a..=n {
            let prev = out[i - a].clone();
            out[i] += prev;
        }
        Self::new(out)
    }

    /// Product truncated at degree `n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Parses either an ascending coefficient list `"1,-1,0,1"` or a sparse
    /// sum of terms such as `"1 - t + t^3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if (text.contains(',') || !text.contains('t'))
            && (text.contains(',') || text.parse::<i64>().is_ok()) {
                return text
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<BigInt>()
                            .map_err(|e| Error::Parse(format!("bad coefficient {s:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(Self::new);
            }
        parse_terms(text)
    }
}

fn parse_terms(text: &str) -> Result<IntPolynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !current.ends_with('^') {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);

    let bad = |t: &str| Error::Parse(format!("bad term {t:?}"));
    let mut acc = IntPolynomial::zero();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, exp) = match body.find('t') {
            None => (body.parse::<BigInt>().map_err(|_| bad(&term))?, 0usize),
            Some(pos) => {
                let head = body[..pos].trim_end_matches('*');
                let coef = if head.is_empty() {
                    BigInt::one()
                } else {
                    head.parse::<BigInt>().map_err(|_| bad(&term))?
                };
                let tail = &body[pos + 1..];
                let exp = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(|| bad(&term))?
                        .parse::<usize>()
                        .map_err(|_| bad(&term))?
                };
                (coef, exp)
            }
        };
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coef * sign;
        acc = acc + IntPolynomial::new(coeffs);
    }
    Ok(acc)
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> Self {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(if show_coeff { "*t" } else { "t" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a [BigInt]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(|c| match c.to_i64() {
                    Some(v) => CoeffJson::Small(v),
                    None => CoeffJson::Big(c.to_string()),
                }))
            }
        }
        #[derive(Serialize)]
        #[serde(untagged)]
        enum CoeffJson {
            Small(i64),
            Big(String),
        }
        let mut st = serializer.serialize_struct("IntPolynomial", 1)?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}
