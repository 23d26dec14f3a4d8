use std::fmt::Write as _;

use crate::linalg;
use crate::semigroup::NumericalSemigroup;

/// The shaded complex `Δ_m`: subsets `I` of generator indices with
/// `m − Σ_{i∈I} a_i ∈ S`. Faces are bitmasks over the minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadedComplex {
    degree: i64,
    generators: Vec<u64>,
    faces: Vec<u32>,
}

/// Dimensions of reduced homology over ℚ, `H̃_{-1}` through `H̃_{g-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_k`, for `k ≥ -1`.
    pub fn dim(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }

    /// Dimensions indexed from `H̃_{-1}`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `Σ_k (−1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        signed_sum(&self.dims)
    }
}

// index 0 carries sign −1 (degree −1)
fn signed_sum(by_degree_from_minus_one: &[usize]) -> i64 {
    by_degree_from_minus_one
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
        .sum()
}

impl ShadedComplex {
    pub fn new(s: &NumericalSemigroup, m: i64) -> Self {
        let generators = s.minimal_generators().to_vec();
        let g = generators.len();
        assert!(g < 32, "embedding dimension too large for shaded complexes");
        let mut faces: Vec<u32> = (0u32..1 << g)
            .filter(|&mask| {
                let sum: i64 = (0..g)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| generators[i] as i64)
                    .sum();
                s.contains(m - sum)
            })
            .collect();
        faces.sort_by_key(|&f| (f.count_ones(), f));
        Self {
            degree: m,
            generators,
            faces,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The minimal generators labelling the vertices.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Faces as bitmasks over generator indices, ordered by size.
    pub fn face_masks(&self) -> &[u32] {
        &self.faces
    }

    /// Faces as sorted lists of generator indices.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|&f| mask_indices(f)).collect()
    }

    pub fn contains_face(&self, indices: &[usize]) -> bool {
        let mask = indices.iter().fold(0u32, |acc, &i| acc | 1 << i);
        self.faces.binary_search_by_key(&(mask.count_ones(), mask), |&f| (f.count_ones(), f)).is_ok()
    }

    /// Faces with `k + 1` vertices (so `k = −1` is the empty face).
    pub fn faces_of_dim(&self, k: isize) -> Vec<u32> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.count_ones() as isize == k + 1)
            .collect()
    }

    /// Face counts `f_{-1}, f_0, …, f_{g-1}`.
    pub fn f_vector(&self) -> Vec<usize> {
        let g = self.generators.len();
        let mut f = vec![0; g + 1];
        for &face in &self.faces {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// `Σ_k (−1)^k f_k` over all faces including the empty one.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        signed_sum(&self.f_vector())
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.faces.len() == 1 << self.generators.len()
    }

    /// Connected components of the vertex set (0 when there are no vertices).
    pub fn component_count(&self) -> usize {
        let vertices = self.faces_of_dim(0);
        let g = self.generators.len();
        let mut parent: Vec<usize> = (0..g).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in self.faces_of_dim(1) {
            let ix = mask_indices(e);
            let (a, b) = (find(&mut parent, ix[0]), find(&mut parent, ix[1]));
            parent[a] = b;
        }
        let mut roots: Vec<usize> = vertices
            .iter()
            .map(|&v| find(&mut parent, v.trailing_zeros() as usize))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Reduced simplicial homology over ℚ from the ranks of the boundary maps
    /// of the augmented chain complex.
    pub fn reduced_homology(&self) -> ReducedHomology {
        let g = self.generators.len();
        // by_dim[k + 1] = faces of dimension k
        let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); g + 1];
        for &f in &self.faces {
            by_dim[f.count_ones() as usize].push(f);
        }
        // ranks[k + 1] = rank of ∂_k : C_k → C_{k-1}; ∂_{-1} = 0
        let mut ranks = vec![0usize; g + 2];
        for k in 0..g {
            let rows = &by_dim[k + 1];
            let cols = &by_dim[k];
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let matrix: Vec<Vec<i64>> = rows
                .iter()
                .map(|&face| {
                    let mut row = vec![0i64; cols.len()];
                    for (pos, i) in mask_indices(face).into_iter().enumerate() {
                        let facet = face & !(1 << i);
                        let j = cols.binary_search(&facet).expect("complex is closed under faces");
                        row[j] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    row
                })
                .collect();
            ranks[k + 1] = linalg::rank(&matrix);
        }
        let dims = (0..=g)
            .map(|i| by_dim[i].len() - ranks[i] - ranks[i + 1])
            .collect();
        ReducedHomology { dims }
    }

    /// Graphviz rendering: vertices labelled by generator values, edges for
    /// 1-faces, a filled cluster for every 2-face.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let label = |i: usize| self.generators[i].to_string();
        writeln!(out, "graph delta_{} {{", self.degree).unwrap();
        writeln!(out, "  label=\"Delta_{}\";", self.degree).unwrap();
        for v in self.faces_of_dim(0) {
            writeln!(out, "  \"{}\";", label(v.trailing_zeros() as usize)).unwrap();
        }
        for e in self.faces_of_dim(1) {
            let ix = mask_indices(e);
            writeln!(out, "  \"{}\" -- \"{}\";", label(ix[0]), label(ix[1])).unwrap();
        }
        for (n, t) in self.faces_of_dim(2).into_iter().enumerate() {
            let names: Vec<String> = mask_indices(t).into_iter().map(label).collect();
            writeln!(out, "  // 2-face {{{}}}: style=filled", names.join(",")).unwrap();
            writeln!(out, "  subgraph cluster_face_{n} {{").unwrap();
            writeln!(out, "    style=filled; fillcolor=lightgrey;").unwrap();
            for name in &names {
                writeln!(out, "    \"{name}\";").unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}
