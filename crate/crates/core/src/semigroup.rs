//! Numerical semigroups and their first-order invariants.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::greedy_factorization;

/// A numerical semigroup `S ⊆ ℕ` given by generators with gcd 1.
///
/// Immutable once built. Membership is tabulated on `0..=conductor + max
/// generator`; everything at or above the conductor is in `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    minimal_generators: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    genus: u64,
    membership: Vec<bool>,
}

/// Frobenius data plus the singularity invariants derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NumericInvariants {
    pub frobenius: i64,
    pub conductor: u64,
    pub genus: u64,
    /// Dimension of the normalization quotient; equal to the genus.
    pub delta: u64,
    /// Milnor number `2·delta` of the (irreducible) monomial curve.
    pub milnor: u64,
    /// `|{x ∈ S : x < c}|`.
    pub elements_below_conductor: u64,
}

/// Witness that a generator ordering satisfies the free condition
/// `n_i a_i ∈ ⟨a_1, …, a_{i−1}⟩` with `n_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeData {
    pub ordering: Vec<u64>,
    /// `n_2, …, n_g`.
    pub n: Vec<u64>,
    /// `ell[i]` writes `n_{i+2} a_{i+2}` in terms of the preceding generators.
    pub ell: Vec<Vec<u64>>,
    /// `n_i a_i` for `i = 2..g`.
    pub relation_degrees: Vec<u64>,
}

/// Branch type of a free semigroup, with the ordering that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "ordering")]
pub enum BranchClass {
    PlaneBranch(Vec<u64>),
    AtInfinity(Vec<u64>),
    FreeOther(Vec<u64>),
    NotFree,
}

/// Parses a comma-separated generator list such as `"5,7,9"`.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad generator {s:?}: {e}")))
        })
        .collect()
}

/// Divides a generator list by its gcd, so that it generates a numerical
/// semigroup.
pub fn normalize(generators: &[u64]) -> Result<Vec<u64>> {
    check_positive(generators)?;
    let d = gcd_all(generators);
    Ok(generators.iter().map(|a| a / d).collect())
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |acc, &a| acc.gcd(&a))
}

fn check_positive(generators: &[u64]) -> Result<()> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    Ok(())
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`. Order and duplicates
    /// are irrelevant; the gcd must be 1.
    pub fn new<I: IntoIterator<Item = u64>>(generators: I) -> Result<Self> {
        let mut generators: Vec<u64> = generators.into_iter().collect();
        check_positive(&generators)?;
        generators.sort_unstable();
        generators.dedup();
        let d = gcd_all(&generators);
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }

        let minimal_generators = minimal_subset(&generators);
        let apery = apery_of_multiplicity(&minimal_generators);
        let multiplicity = minimal_generators[0];
        let frobenius = *apery.iter().max().unwrap() as i64 - multiplicity as i64;
        let conductor = (frobenius + 1) as u64;
        let max_gen = *generators.last().unwrap();
        let extent = (conductor + max_gen) as usize;
        let membership: Vec<bool> = (0..=extent)
            .map(|n| apery[n % multiplicity as usize] <= n as u64)
            .collect();
        let genus = membership[..conductor as usize]
            .iter()
            .filter(|&&x| !x)
            .count() as u64;

        Ok(Self {
            generators,
            minimal_generators,
            frobenius,
            conductor,
            genus,
            membership,
        })
    }

    /// Parses `"a,b,c"` and builds the semigroup.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_generators(text)?)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.minimal_generators[0]
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n as u64 >= self.conductor {
            return true;
        }
        self.membership[n as usize]
    }

    /// Elements of `S` in `0..=bound`, ascending.
    pub fn elements_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&n| self.contains(n as i64))
    }

    /// Gaps `ℕ ∖ S`, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&n| !self.membership[n as usize])
            .collect()
    }

    /// `Ap(S, s)`: the least element of `S` in each residue class mod `s`,
    /// sorted ascending.
    pub fn apery_set(&self, s: u64) -> Result<Vec<u64>> {
        if s == 0 {
            return Err(Error::ZeroArgument);
        }
        if !self.contains(s as i64) {
            return Err(Error::NotAnElement(s));
        }
        let mut least = vec![None; s as usize];
        let mut found = 0;
        let mut n = 0u64;
        while found < s {
            if self.contains(n as i64) {
                let slot = &mut least[(n % s) as usize];
                if slot.is_none() {
                    *slot = Some(n);
                    found += 1;
                }
            }
            n += 1;
        }
        let mut out: Vec<u64> = least.into_iter().map(Option::unwrap).collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn numeric_invariants(&self) -> NumericInvariants {
        NumericInvariants {
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: self.genus,
            delta: self.genus,
            milnor: 2 * self.genus,
            elements_below_conductor: self.conductor - self.genus,
        }
    }

    /// `x ∈ S ⟺ F − x ∉ S` for all `0 ≤ x ≤ F`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// Checks the free condition for `ordering`, a permutation of the minimal
    /// generators. Witness factorizations are chosen greedily from the
    /// largest preceding generator down.
    pub fn is_free(&self, ordering: &[u64]) -> Result<Option<FreeData>> {
        let mut sorted = ordering.to_vec();
        sorted.sort_unstable();
        if sorted != self.minimal_generators {
            return Err(Error::NotAPermutation);
        }
        Ok(free_data(ordering))
    }

    /// Searches all orderings of the minimal generators for a free one and
    /// classifies it by the chain conditions `n_i a_i < a_{i+1}` (plane
    /// branch) or `n_i a_i > a_{i+1}` (at infinity).
    pub fn classify_branch(&self) -> BranchClass {
        if self.embedding_dimension() <= 2 {
            return BranchClass::PlaneBranch(self.minimal_generators.clone());
        }
        let mut first_free = None;
        let mut first_infinity = None;
        let mut ordering = self.minimal_generators.clone();
        loop {
            if let Some(data) = free_data(&ordering) {
                let g = ordering.len();
                // relation_degrees[k] = n_{k+2} a_{k+2}; compare with a_{k+3}
                let chain = |less: bool| {
                    (0..g - 2).all(|k| {
                        let lhs = data.relation_degrees[k];
                        let rhs = ordering[k + 2];
                        if less {
                            lhs < rhs
                        } else {
                            lhs > rhs
                        }
                    })
                };
                if chain(true) {
                    return BranchClass::PlaneBranch(ordering);
                }
                if chain(false) && first_infinity.is_none() {
                    first_infinity = Some(ordering.clone());
                }
                if first_free.is_none() {
                    first_free = Some(ordering.clone());
                }
            }
            if !next_permutation(&mut ordering) {
                break;
            }
        }
        match (first_infinity, first_free) {
            (Some(o), _) => BranchClass::AtInfinity(o),
            (None, Some(o)) => BranchClass::FreeOther(o),
            (None, None) => BranchClass::NotFree,
        }
    }
}

fn free_data(ordering: &[u64]) -> Option<FreeData> {
    let mut n = Vec::new();
    let mut ell = Vec::new();
    let mut relation_degrees = Vec::new();
    let mut d_prev = ordering[0];
    for i in 1..ordering.len() {
        let a = ordering[i];
        let d = d_prev.gcd(&a);
        let n_i = d_prev / d;
        if n_i <= 1 {
            return None;
        }
        let degree = n_i * a;
        let witness = greedy_factorization(&ordering[..i], degree)?;
        n.push(n_i);
        ell.push(witness);
        relation_degrees.push(degree);
        d_prev = d;
    }
    Some(FreeData {
        ordering: ordering.to_vec(),
        n,
        ell,
        relation_degrees,
    })
}

/// Lexicographic successor; false when `v` was the last permutation.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Keeps the generators that are not combinations of smaller ones.
fn minimal_subset(sorted: &[u64]) -> Vec<u64> {
    let max = *sorted.last().unwrap() as usize;
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    let mut minimal = Vec::new();
    for &a in sorted {
        if reach[a as usize] {
            continue;
        }
        minimal.push(a);
        let a = a as usize;
        for r in a..=max {
            if reach[r - a] {
                reach[r] = true;
            }
        }
    }
    minimal
}

/// Apéry set with respect to the smallest generator, indexed by residue
/// (shortest paths in the residue graph).
fn apery_of_multiplicity(minimal: &[u64]) -> Vec<u64> {
    let m = minimal[0] as usize;
    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &a in &minimal[1..] {
            let nd = d + a;
            let nr = (r + a as usize) % m;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

#[derive(Serialize)]
struct SemigroupJson<'a> {
    generators: &'a [u64],
    minimal_generators: &'a [u64],
    frobenius: i64,
    conductor: u64,
    genus: u64,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupJson {
            generators: &self.generators,
            minimal_generators: &self.minimal_generators,
            frobenius: self.frobenius,
            conductor: self.conductor,
            genus: self.genus,
        }
        .serialize(serializer)
    }
}
