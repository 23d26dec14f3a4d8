use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::Serialize;

use super::complex::ShadedComplex;
use crate::semigroup::NumericalSemigroup;

/// Graded Betti numbers `β_{i,m} = dim H̃_i(Δ_m)`, where `i = 0` counts the
/// minimal generators of the defining ideal. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    theta: u64,
    embedding_dimension: usize,
    entries: BTreeMap<(usize, u64), usize>,
}

/// Largest element of `S` not exceeding `c − 1 + Σ a_i`; every `Δ_m` above
/// it is a full simplex.
pub fn theta(s: &NumericalSemigroup) -> u64 {
    let sum: u64 = s.minimal_generators().iter().sum();
    let bound = s.conductor() + sum - 1;
    (0..=bound).rev().find(|&m| s.contains(m as i64)).unwrap_or(0)
}

impl BettiDiagram {
    pub fn compute(s: &NumericalSemigroup) -> Self {
        let theta = theta(s);
        let g = s.embedding_dimension();
        let degrees: Vec<u64> = s.elements_up_to(theta).collect();
        let entries: BTreeMap<(usize, u64), usize> = degrees
            .par_iter()
            .flat_map_iter(|&m| {
                let h = ShadedComplex::new(s, m as i64).reduced_homology();
                (0..g)
                    .filter_map(move |i| {
                        let d = h.dim(i as isize);
                        (d > 0).then_some(((i, m), d))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        Self {
            theta,
            embedding_dimension: g,
            entries,
        }
    }

    pub fn theta(&self) -> u64 {
        self.theta
    }

    pub fn embedding_dimension(&self) -> usize {
        self.embedding_dimension
    }

    pub fn get(&self, i: usize, m: u64) -> usize {
        self.entries.get(&(i, m)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, m)`.
    pub fn entries(&self) -> &BTreeMap<(usize, u64), usize> {
        &self.entries
    }

    /// `(m, β_{i,m})` for the nonzero entries of column `i`.
    pub fn column(&self, i: usize) -> Vec<(u64, usize)> {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(&(_, m), &b)| (m, b))
            .collect()
    }

    /// `Σ_m β_{i,m}`.
    pub fn total(&self, i: usize) -> usize {
        self.column(i).iter().map(|(_, b)| b).sum()
    }

    /// Degrees with at least one nonzero entry.
    pub fn support_degrees(&self) -> Vec<u64> {
        let mut ms: Vec<u64> = self.entries.keys().map(|&(_, m)| m).collect();
        ms.sort_unstable();
        ms.dedup();
        ms
    }

    /// Gorenstein duality of the resolution. With `j = i + 1` the homological
    /// index (the ring itself sits at `j = 0`, degree 0), the square must be
    /// invariant under `(j, m) ↦ (g − 1 − j, M − m)`, `M` the largest
    /// support degree.
    pub fn square_is_symmetric(&self) -> bool {
        let g = self.embedding_dimension as isize;
        let top = self.entries.keys().map(|&(_, m)| m).max().unwrap_or(0);
        let value = |i: isize, m: i64| -> usize {
            if i == -1 {
                return usize::from(m == 0);
            }
            if i < 0 || m < 0 {
                return 0;
            }
            self.get(i as usize, m as u64)
        };
        let mut support: Vec<(isize, i64, usize)> = self
            .entries
            .iter()
            .map(|(&(i, m), &b)| (i as isize, m as i64, b))
            .collect();
        support.push((-1, 0, 1));
        support
            .into_iter()
            .all(|(i, m, b)| value(g - 3 - i, top as i64 - m) == b)
    }
}

/// Betti numbers of a complete intersection with relation degrees
/// `m_1 ≤ … ≤ m_{g−1}`: `β_{i,m}` counts the `(i+1)`-element index subsets
/// whose degrees sum to `m`.
pub fn ci_predicted_diagram(degrees: &[u64]) -> BTreeMap<(usize, u64), usize> {
    let mut out = BTreeMap::new();
    let k = degrees.len();
    assert!(k < 32, "too many relation degrees");
    for mask in 1u32..(1 << k) {
        let size = mask.count_ones() as usize;
        let sum: u64 = (0..k).filter(|j| mask >> j & 1 == 1).map(|j| degrees[j]).sum();
        *out.entry((size - 1, sum)).or_insert(0) += 1;
    }
    out
}

impl Serialize for BettiDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a BTreeMap<(usize, u64), usize>);
        struct Entry(usize, u64, usize);
        impl Serialize for Entry {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(3))?;
                map.serialize_entry("i", &self.0)?;
                map.serialize_entry("m", &self.1)?;
                map.serialize_entry("beta", &self.2)?;
                map.end()
            }
        }
        impl Serialize for Entries<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(|(&(i, m), &b)| Entry(i, m, b)))
            }
        }
        let mut st = serializer.serialize_struct("BettiDiagram", 2)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("entries", &Entries(&self.entries))?;
        st.end()
    }
}
