//! Minimal presentations and graded Betti numbers of `k[S]` via the shaded
//! complexes `Δ_m`.

mod betti;
mod complex;
mod relations;

pub use betti::{ci_predicted_diagram, theta, BettiDiagram};
pub use complex::{ReducedHomology, ShadedComplex};
pub use relations::{
    component_representatives, factorizations, minimal_relations, Factorization, Relation,
    SyzygyData,
};

use crate::semigroup::NumericalSemigroup;

pub fn shaded_complex(s: &NumericalSemigroup, m: i64) -> ShadedComplex {
    ShadedComplex::new(s, m)
}

pub fn reduced_homology_dims(complex: &ShadedComplex) -> ReducedHomology {
    complex.reduced_homology()
}

pub fn betti_diagram(s: &NumericalSemigroup) -> BettiDiagram {
    BettiDiagram::compute(s)
}

pub fn square_is_symmetric(diagram: &BettiDiagram) -> bool {
    diagram.square_is_symmetric()
}
