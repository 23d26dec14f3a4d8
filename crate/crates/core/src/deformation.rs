//! Graded pieces of `T¹` for monomial curves.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::Result;
use crate::linalg;
use crate::resolution::{minimal_relations, SyzygyData};
use crate::semigroup::NumericalSemigroup;

/// Raw value of Buchweitz's formula at weight `n` (may be negative).
pub fn t1_formula(s: &NumericalSemigroup, relations: &SyzygyData, n: i64) -> i64 {
    let outside = s
        .minimal_generators()
        .iter()
        .filter(|&&a| !s.contains(a as i64 + n))
        .count() as i64;
    let selected: Vec<&[i64]> = relations
        .relations
        .iter()
        .filter(|r| !s.contains(r.degree as i64 + n))
        .map(|r| r.z.as_slice())
        .collect();
    (outside - 1).max(0) - linalg::rank(&selected) as i64
}

/// `dim T¹(n)` from the given presentation, clamped at 0.
pub fn t1_dimension_with(s: &NumericalSemigroup, relations: &SyzygyData, n: i64) -> usize {
    t1_formula(s, relations, n).max(0) as usize
}

pub fn t1_dimension(s: &NumericalSemigroup, n: i64) -> Result<usize> {
    Ok(t1_dimension_with(s, &minimal_relations(s)?, n))
}

/// Nonzero graded dimensions of `T¹` and the split of `τ` by weight sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1Spectrum {
    pub dims: BTreeMap<i64, usize>,
    /// Half-open `[lo, hi)`; every weight outside has dimension 0.
    pub window: (i64, i64),
    pub tau: usize,
    /// `Σ_{n>0} dim T¹(n)`.
    pub tau_plus: usize,
    /// `Σ_{n<0} dim T¹(n)`.
    pub tau_minus: usize,
    /// Weights at which the raw formula went negative.
    pub clamped: usize,
}

/// The window `[−max m_i, c − min a_i)`, empty for `⟨1⟩`.
pub fn t1_window(s: &NumericalSemigroup, relations: &SyzygyData) -> (i64, i64) {
    let Some(top) = relations.relations.iter().map(|r| r.degree).max() else {
        return (0, 0);
    };
    (-(top as i64), s.conductor() as i64 - s.multiplicity() as i64)
}

pub fn t1_spectrum_with(s: &NumericalSemigroup, relations: &SyzygyData) -> T1Spectrum {
    let window = t1_window(s, relations);
    let mut dims = BTreeMap::new();
    let mut clamped = 0;
    for n in window.0..window.1 {
        let raw = t1_formula(s, relations, n);
        if raw < 0 {
            clamped += 1;
        } else if raw > 0 {
            dims.insert(n, raw as usize);
        }
    }
    let tau_plus = dims.range(1..).map(|(_, d)| d).sum();
    let tau_minus = dims.range(..0).map(|(_, d)| d).sum();
    T1Spectrum {
        tau: dims.values().sum(),
        dims,
        window,
        tau_plus,
        tau_minus,
        clamped,
    }
}

pub fn t1_spectrum(s: &NumericalSemigroup) -> Result<T1Spectrum> {
    Ok(t1_spectrum_with(s, &minimal_relations(s)?))
}

impl Serialize for T1Spectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let dims: BTreeMap<String, usize> = self.dims.iter().map(|(n, d)| (n.to_string(), *d)).collect();
        let mut map = serializer.serialize_map(Some(6))?;
        map.serialize_entry("dims", &dims)?;
        map.serialize_entry("tau", &self.tau)?;
        map.serialize_entry("tau_plus", &self.tau_plus)?;
        map.serialize_entry("tau_minus", &self.tau_minus)?;
        map.serialize_entry("window", &[self.window.0, self.window.1])?;
        map.serialize_entry("clamped", &self.clamped)?;
        map.end()
    }
}
