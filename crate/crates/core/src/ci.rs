//! Complete intersections: Delorme's gluing search, the gluing constructor,
//! the Herzog–Kunz invariant `m(S)` and the Dedekind semimodule `D(S,h)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_integer::Integer;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::greedy_factorization;
use crate::linalg::IndependentSet;
use crate::resolution::{factorizations, theta, Factorization};
use crate::semigroup::{gcd_all, NumericalSemigroup};

/// Least positive element of `⟨a⟩ ∩ ⟨b⟩`.
pub fn min_intersection(a: &[u64], b: &[u64]) -> u64 {
    assert!(!a.is_empty() && !b.is_empty(), "blocks must be nonempty");
    assert!(a.iter().chain(b).all(|&x| x > 0), "generators must be positive");
    let (da, db) = (gcd_all(a), gcd_all(b));
    let scaled_conductor = |gens: &[u64], d: u64| {
        NumericalSemigroup::new(gens.iter().map(|x| x / d))
            .expect("gcd divided out")
            .conductor()
    };
    let bound = (da * scaled_conductor(a, da)).max(db * scaled_conductor(b, db)) + da.lcm(&db);
    let ra = reachable(a, bound);
    let rb = reachable(b, bound);
    (1..=bound as usize)
        .find(|&n| ra[n] && rb[n])
        .expect("bound always contains a common element") as u64
}

fn reachable(gens: &[u64], bound: u64) -> Vec<bool> {
    let n = bound as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &a in gens {
        for r in a as usize..=n {
            if reach[r - a as usize] {
                reach[r] = true;
            }
        }
    }
    reach
}

/// Binary tree recording the order in which generator blocks were glued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingTree {
    Leaf {
        /// Position in the input generator list.
        index: usize,
        value: u64,
    },
    Node {
        left: Box<GluingTree>,
        right: Box<GluingTree>,
        d_left: u64,
        d_right: u64,
        relation_degree: u64,
        /// Coefficients over `left.leaves()`, in leaf order.
        left_factorization: Factorization,
        right_factorization: Factorization,
    },
}

impl GluingTree {
    /// Leaf positions, sorted ascending.
    pub fn leaf_indices(&self) -> Vec<usize> {
        match self {
            GluingTree::Leaf { index, .. } => vec![*index],
            GluingTree::Node { left, right, .. } => {
                let mut v = left.leaf_indices();
                v.extend(right.leaf_indices());
                v.sort_unstable();
                v
            }
        }
    }

    pub fn leaf_values(&self) -> Vec<u64> {
        match self {
            GluingTree::Leaf { value, .. } => vec![*value],
            GluingTree::Node { left, right, .. } => {
                let mut pairs: Vec<(usize, u64)> = left
                    .leaf_indices()
                    .into_iter()
                    .zip(left.leaf_values())
                    .chain(right.leaf_indices().into_iter().zip(right.leaf_values()))
                    .collect();
                pairs.sort_unstable();
                pairs.into_iter().map(|(_, v)| v).collect()
            }
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            GluingTree::Leaf { .. } => 0,
            GluingTree::Node { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }

    /// Relation degrees of all nodes, ascending.
    pub fn relation_degrees(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.visit_nodes(&mut |n| {
            if let GluingTree::Node { relation_degree, .. } = n {
                out.push(*relation_degree);
            }
        });
        out.sort_unstable();
        out
    }

    fn visit_nodes(&self, f: &mut impl FnMut(&GluingTree)) {
        f(self);
        if let GluingTree::Node { left, right, .. } = self {
            left.visit_nodes(f);
            right.visit_nodes(f);
        }
    }

    /// Indented text rendering, one line per vertex.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            GluingTree::Leaf { value, .. } => {
                writeln!(out, "{pad}leaf {value}").unwrap();
            }
            GluingTree::Node {
                left,
                right,
                d_left,
                d_right,
                relation_degree,
                ..
            } => {
                writeln!(out, "{pad}glue deg {relation_degree} (d_left {d_left}, d_right {d_right})").unwrap();
                left.render_into(depth + 1, out);
                right.render_into(depth + 1, out);
            }
        }
    }
}

impl Serialize for GluingTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GluingTree::Leaf { value, .. } => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("leaf", value)?;
                map.end()
            }
            GluingTree::Node {
                left,
                right,
                d_left,
                d_right,
                relation_degree,
                ..
            } => {
                let mut map = serializer.serialize_map(Some(5))?;
                map.serialize_entry("d_left", d_left)?;
                map.serialize_entry("d_right", d_right)?;
                map.serialize_entry("degree", relation_degree)?;
                map.serialize_entry("left", left)?;
                map.serialize_entry("right", right)?;
                map.end()
            }
        }
    }
}

/// Why Delorme's algorithm stopped without a gluing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FailureReason {
    /// No two blocks share the same `m_L`.
    NoMatchingPair,
    /// Blocks with equal `m_L` exist but none of them has `m_L = lcm(gcd L, gcd L')`.
    DegreeNotLcm {
        left: Vec<u64>,
        right: Vec<u64>,
        m: u64,
        lcm: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIFailure {
    /// Blocks of the partition at the failing step, as generator values.
    pub partition: Vec<Vec<u64>>,
    pub m_values: Vec<(Vec<u64>, u64)>,
    pub reason: FailureReason,
}

impl Serialize for CIFailure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            block: &'a [u64],
            m: u64,
        }
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("partition", &self.partition)?;
        let m: Vec<Entry> = self
            .m_values
            .iter()
            .map(|(b, m)| Entry { block: b, m: *m })
            .collect();
        map.serialize_entry("m_values", &m)?;
        map.serialize_entry("reason", &self.reason)?;
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CIReport {
    pub is_ci: bool,
    pub tree: Option<GluingTree>,
    pub failure: Option<CIFailure>,
}

impl CIReport {
    /// `m_L` for the failing partition, keyed by the smallest generator of
    /// each block.
    pub fn m_values_by_min(&self) -> BTreeMap<u64, u64> {
        self.failure
            .iter()
            .flat_map(|f| f.m_values.iter().map(|(b, m)| (b[0], *m)))
            .collect()
    }
}

/// Which valid pair to merge when several satisfy the merge test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairSelection {
    /// Smallest `m_L`, then smallest block minima.
    #[default]
    SmallestDegree,
    /// Largest `m_L`, then largest block minima.
    LargestDegree,
}

struct Block {
    indices: Vec<usize>,
    tree: GluingTree,
}

/// Delorme's algorithm on the generator list, with the default pair
/// selection.
pub fn delorme_check(generators: &[u64]) -> Result<CIReport> {
    delorme_check_with(generators, PairSelection::default())
}

pub fn delorme_check_with(generators: &[u64], selection: PairSelection) -> Result<CIReport> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if generators.contains(&0) {
        return Err(Error::ZeroGenerator);
    }
    let d = gcd_all(generators);
    if d != 1 {
        return Err(Error::GcdNotOne(d));
    }
    let mut blocks: Vec<Block> = generators
        .iter()
        .enumerate()
        .map(|(index, &value)| Block {
            indices: vec![index],
            tree: GluingTree::Leaf { index, value },
        })
        .collect();
    let values = |b: &Block| -> Vec<u64> {
        let mut v: Vec<u64> = b.indices.iter().map(|&i| generators[i]).collect();
        v.sort_unstable();
        v
    };

    while blocks.len() > 1 {
        let m_values: Vec<u64> = blocks
            .par_iter()
            .map(|b| {
                let inside: Vec<u64> = b.indices.iter().map(|&i| generators[i]).collect();
                let outside: Vec<u64> = (0..generators.len())
                    .filter(|i| !b.indices.contains(i))
                    .map(|i| generators[i])
                    .collect();
                min_intersection(&inside, &outside)
            })
            .collect();
        let gcds: Vec<u64> = blocks.iter().map(|b| gcd_all(&values(b))).collect();
        let minima: Vec<u64> = blocks.iter().map(|b| values(b)[0]).collect();

        let mut matching = Vec::new();
        let mut valid = Vec::new();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if m_values[i] != m_values[j] {
                    continue;
                }
                matching.push((i, j));
                if m_values[i] == gcds[i].lcm(&gcds[j]) {
                    valid.push((i, j));
                }
            }
        }
        let key = |&(i, j): &(usize, usize)| {
            let (lo, hi) = (minima[i].min(minima[j]), minima[i].max(minima[j]));
            (m_values[i], lo, hi)
        };
        let chosen = match selection {
            PairSelection::SmallestDegree => valid.iter().min_by_key(|p| key(p)),
            PairSelection::LargestDegree => valid.iter().max_by_key(|p| key(p)),
        };
        let Some(&(i, j)) = chosen else {
            let reason = match matching.first() {
                None => FailureReason::NoMatchingPair,
                Some(&(i, j)) => FailureReason::DegreeNotLcm {
                    left: values(&blocks[i]),
                    right: values(&blocks[j]),
                    m: m_values[i],
                    lcm: gcds[i].lcm(&gcds[j]),
                },
            };
            let mut order: Vec<usize> = (0..blocks.len()).collect();
            order.sort_by_key(|&k| minima[k]);
            return Ok(CIReport {
                is_ci: false,
                tree: None,
                failure: Some(CIFailure {
                    partition: order.iter().map(|&k| values(&blocks[k])).collect(),
                    m_values: order.iter().map(|&k| (values(&blocks[k]), m_values[k])).collect(),
                    reason,
                }),
            });
        };

        let (li, ri) = if minima[i] <= minima[j] { (i, j) } else { (j, i) };
        let degree = m_values[i];
        // remove the higher index first so the lower one stays valid
        let (first, second) = if li > ri { (li, ri) } else { (ri, li) };
        let b_first = blocks.remove(first);
        let b_second = blocks.remove(second);
        let (left, right) = if first == li { (b_first, b_second) } else { (b_second, b_first) };
        let factor = |b: &Block| {
            let gens: Vec<u64> = b.tree.leaf_values();
            let coeffs = greedy_factorization(&gens, degree).ok_or_else(|| {
                Error::InternalInconsistency(format!("{degree} not in the block generated by {gens:?}"))
            })?;
            Ok::<_, Error>(Factorization(coeffs))
        };
        let left_factorization = factor(&left)?;
        let right_factorization = factor(&right)?;
        let mut indices = left.indices.clone();
        indices.extend(&right.indices);
        indices.sort_unstable();
        let node = GluingTree::Node {
            d_left: gcd_all(&left.tree.leaf_values()),
            d_right: gcd_all(&right.tree.leaf_values()),
            relation_degree: degree,
            left_factorization,
            right_factorization,
            left: Box::new(left.tree),
            right: Box::new(right.tree),
        };
        blocks.push(Block { indices, tree: node });
    }

    Ok(CIReport {
        is_ci: true,
        tree: blocks.pop().map(|b| b.tree),
        failure: None,
    })
}

/// Binomial `x^left − x^right` in the ambient variables `x_1, …, x_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub degree: u64,
    pub left: Vec<u64>,
    pub right: Vec<u64>,
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn monomial(exps: &[u64]) -> String {
            let parts: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        }
        write!(f, "{} - {}  (deg {})", monomial(&self.left), monomial(&self.right), self.degree)
    }
}

/// One binomial per gluing node, sorted by degree.
pub fn defining_binomials(tree: &GluingTree) -> Vec<Binomial> {
    let g = tree.leaf_indices().into_iter().max().map_or(0, |m| m + 1);
    let mut out = Vec::new();
    tree.visit_nodes(&mut |n| {
        if let GluingTree::Node {
            left,
            right,
            relation_degree,
            left_factorization,
            right_factorization,
            ..
        } = n
        {
            let lift = |sub: &GluingTree, f: &Factorization| {
                let mut v = vec![0u64; g];
                for (idx, c) in sub.leaf_indices().into_iter().zip(&f.0) {
                    v[idx] = *c;
                }
                v
            };
            out.push(Binomial {
                degree: *relation_degree,
                left: lift(left, left_factorization),
                right: lift(right, right_factorization),
            });
        }
    });
    out.sort_by(|a, b| (a.degree, &a.left).cmp(&(b.degree, &b.left)));
    out
}

/// `⟨d1·S1 ∪ d2·S2⟩` together with the degree of the new relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Glued {
    pub semigroup: NumericalSemigroup,
    pub relation_degree: u64,
}

pub fn glue(s1: &NumericalSemigroup, s2: &NumericalSemigroup, d1: u64, d2: u64) -> Result<Glued> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::ZeroArgument);
    }
    if d1.gcd(&d2) != 1 {
        return Err(Error::NotCoprime(d1, d2));
    }
    if !s1.contains(d2 as i64) {
        return Err(Error::MultiplierNotInPartner { which: 2, value: d2 });
    }
    if !s2.contains(d1 as i64) {
        return Err(Error::MultiplierNotInPartner { which: 1, value: d1 });
    }
    let gens = s1
        .minimal_generators()
        .iter()
        .map(|a| a * d1)
        .chain(s2.minimal_generators().iter().map(|b| b * d2));
    Ok(Glued {
        semigroup: NumericalSemigroup::new(gens)?,
        relation_degree: d1 * d2,
    })
}

/// `m(S)` and a minimum-weight independent set of syzygies realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HerzogKunz {
    pub m: u64,
    pub chosen: Vec<(u64, Vec<i64>)>,
}

/// Matroid greedy over factorization differences by ascending degree,
/// stopping at rank `g − 1`.
pub fn herzog_kunz_m(s: &NumericalSemigroup) -> HerzogKunz {
    let g = s.embedding_dimension();
    let mut set = IndependentSet::new(g);
    let mut chosen = Vec::new();
    if g > 1 {
        'degrees: for m in s.elements_up_to(theta(s)) {
            let facts = factorizations(s, m as i64);
            if facts.len() < 2 {
                continue;
            }
            // differences against one base span every pairwise difference
            for f in &facts[1..] {
                let z = f.difference(&facts[0]);
                if set.insert(&z) {
                    chosen.push((m, z));
                    if set.rank() == g - 1 {
                        break 'degrees;
                    }
                }
            }
        }
    }
    HerzogKunz {
        m: chosen.iter().map(|(d, _)| d).sum(),
        chosen,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HerzogKunzCheck {
    pub bound_holds: bool,
    pub is_ci: bool,
    pub c: u64,
    pub rhs: i64,
    pub m: u64,
}

/// `c ≤ m(S) − Σ a_i + 1`, with equality exactly for complete intersections.
pub fn herzog_kunz_check(s: &NumericalSemigroup) -> Result<HerzogKunzCheck> {
    let hk = herzog_kunz_m(s);
    let sum: u64 = s.minimal_generators().iter().sum();
    let rhs = hk.m as i64 - sum as i64 + 1;
    let c = s.conductor();
    if c as i64 > rhs {
        return Err(Error::InternalInconsistency(format!(
            "conductor {c} exceeds m(S) - sum + 1 = {rhs}"
        )));
    }
    Ok(HerzogKunzCheck {
        bound_holds: true,
        is_ci: c as i64 == rhs,
        c,
        rhs,
        m: hk.m,
    })
}

/// Membership of `D(S,h)` on `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemimoduleWindow {
    pub base: u64,
    pub bound: u64,
    pub membership: Vec<bool>,
}

impl SemimoduleWindow {
    pub fn contains(&self, n: u64) -> bool {
        n > self.bound || self.membership[n as usize]
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..=self.bound).filter(|&n| self.membership[n as usize]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DedekindReport {
    pub window: SemimoduleWindow,
    pub principal: bool,
    pub equals_shifted_conductor_ideal: bool,
}

/// `D(S,h) = ∩_{γ ∈ Ap(S,h)} (γ + S)`, compared with `(h + c − 1) + S`.
pub fn dedekind_semimodule(s: &NumericalSemigroup, h: u64) -> Result<DedekindReport> {
    let apery = s.apery_set(h)?;
    let c = s.conductor();
    let bound = h + 2 * c;
    let membership: Vec<bool> = (0..=bound)
        .map(|n| apery.iter().all(|&gamma| s.contains(n as i64 - gamma as i64)))
        .collect();
    let shift = (h + c) as i64 - 1;
    let equal = (0..=bound).all(|n| membership[n as usize] == s.contains(n as i64 - shift));
    Ok(DedekindReport {
        window: SemimoduleWindow {
            base: h,
            bound,
            membership,
        },
        principal: equal,
        equals_shifted_conductor_ideal: equal,
    })
}
