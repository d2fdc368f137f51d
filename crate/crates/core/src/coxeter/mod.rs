//! Coxeter matrices and systems, root systems, words and classification.

mod classify;
mod matrix;
mod primes;
mod system;
mod words;

pub use classify::{classify_finite_type, match_table_graphs, FiniteType};
pub use matrix::{
    cartan_with_infinity, is_finite, standard_cartan, two_cos_pi_over, CartanMatrix, CoxeterMatrix,
};
pub use primes::{bad_and_torsion_primes, bad_and_torsion_primes_named, CrystalType};
pub use system::{
    reflection_rep, roots, CoxeterElement, CoxeterSystem, ReflectionRep, RootSystem,
    DEFAULT_ROOT_LIMIT,
};
pub use words::{all_reduced_words, bruhat_leq, matsumoto_fold, subexpressions, support};
