//! Exact calculator for loop braid words.
//!
//! Given a word in the generators of the loop braid group on `n` circles,
//! this crate computes the twisted matrix representations of the word over
//! a Laurent-polynomial ring, the unreduced Burau matrix, and the
//! fixed-point report derived from them: a Laurent polynomial whose nonzero
//! terms are essential fixed-point classes (index + linking numbers), the
//! resulting Nielsen lower bound, and a lower bound for periodic points of
//! any period.
//!
//! Every polynomial-level result is validated against an independent oracle
//! that works one level up, in the integral group ring of the free group:
//! conjugating automorphisms, Fox derivatives, and chain matrices that only
//! collapse to Laurent polynomials at the very end.
//!
//! All values are immutable and all operations are pure functions; the
//! whole crate is safe to use from multiple threads without shared state.

pub mod braidword;
pub mod chains;
pub mod corpus;
pub mod dynamics;
pub mod laurent;
pub mod presentation;
pub mod rep;

pub use braidword::{BraidWord, CycleDecomposition, GenKind, Generator, Perm, Sign, WordError};
pub use chains::{
    aut_of_generator, aut_of_word, chain_gen_matrix, chain_matrix_of_word, fox_derivative,
    ChainLevel, ChainMatrix, ConjAutomorphism, FreeWord, GroupRingElement, Letter,
};
pub use dynamics::{
    circle_periods, gcd_filtered_term_count, lefschetz_report, periodic_bound, trace_power_poly,
    DynamicsError, LefschetzReport, NielsenClassEntry, PaperConformance, PeriodicBound,
};
pub use laurent::{
    ExponentVector, LaurentError, LaurentPolynomial, VarNames, VarTarget, VariableMap,
};
pub use presentation::{relation_instances, RelationFamily, RelationReport};
pub use rep::{
    burau, gen_matrix, project_mu, rep_of_word, s_matrix, twisted_product, verify_relations,
    PolyMatrix, RepError, RepKind,
};
