use serde::Serialize;

use super::betti::theta;
use super::complex::ShadedComplex;
use crate::error::{Error, Result};
use crate::factor::all_factorizations;
use crate::semigroup::NumericalSemigroup;

/// Coefficients `α` with `Σ α_i a_i = m` over the minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    pub fn degree(&self, generators: &[u64]) -> u64 {
        self.0.iter().zip(generators).map(|(c, a)| c * a).sum()
    }

    pub fn support_mask(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// `self − other` as an integer vector.
    pub fn difference(&self, other: &Factorization) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }
}

/// One minimal relation `x^left − x^right` of the defining ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub degree: u64,
    /// `left − right`.
    pub z: Vec<i64>,
    pub left: Factorization,
    pub right: Factorization,
}

/// A minimal presentation: one binomial per unit of `β_{0,m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyData {
    pub generators: Vec<u64>,
    pub relations: Vec<Relation>,
}

impl SyzygyData {
    pub fn degrees(&self) -> Vec<u64> {
        self.relations.iter().map(|r| r.degree).collect()
    }

    pub fn vectors(&self) -> Vec<Vec<i64>> {
        self.relations.iter().map(|r| r.z.clone()).collect()
    }
}

/// Every factorization of `m` over the minimal generators, in lexicographic
/// order. Empty when `m ∉ S`.
pub fn factorizations(s: &NumericalSemigroup, m: i64) -> Vec<Factorization> {
    if !s.contains(m) {
        return Vec::new();
    }
    all_factorizations(s.minimal_generators(), m as u64)
        .into_iter()
        .map(Factorization)
        .collect()
}

/// Components of the graph on `facts` joining two factorizations whose
/// supports meet. Returns the lexicographically least member of each
/// component, ascending.
pub fn component_representatives(facts: &[Factorization]) -> Vec<Factorization> {
    let n = facts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let masks: Vec<u32> = facts.iter().map(Factorization::support_mask).collect();
    for i in 0..n {
        for j in i + 1..n {
            if masks[i] & masks[j] != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    // facts are sorted, so the smallest index of each component is its least
    // member
    let mut reps: Vec<Factorization> = (0..n)
        .filter(|&i| find(&mut parent, i) == i)
        .map(|i| facts[i].clone())
        .collect();
    reps.sort();
    reps
}

/// Minimal relations read off the disconnected complexes `Δ_m`, `m ≤ θ`.
/// Each degree with `k` factorization-graph components contributes `k − 1`
/// relations `rep_j − rep_0`; the count is checked against `dim H̃_0(Δ_m)`.
pub fn minimal_relations(s: &NumericalSemigroup) -> Result<SyzygyData> {
    let theta = theta(s);
    let mut relations = Vec::new();
    for m in s.elements_up_to(theta) {
        if m == 0 {
            continue;
        }
        let complex = ShadedComplex::new(s, m as i64);
        if complex.component_count() < 2 {
            continue;
        }
        let homology = complex.reduced_homology().dim(0);
        let facts = factorizations(s, m as i64);
        let reps = component_representatives(&facts);
        if reps.len() != homology + 1 {
            return Err(Error::InternalInconsistency(format!(
                "degree {m}: {} factorization components but dim H0 = {homology}",
                reps.len()
            )));
        }
        let base = &reps[0];
        for rep in &reps[1..] {
            relations.push(Relation {
                degree: m,
                z: rep.difference(base),
                left: rep.clone(),
                right: base.clone(),
            });
        }
    }
    Ok(SyzygyData {
        generators: s.minimal_generators().to_vec(),
        relations,
    })
}
