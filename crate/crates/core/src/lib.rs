//! Exact combinatorics for the strength of small graphs.
//!
//! The crate computes the strength `str(G)` of a graph (the best possible
//! maximum edge label over all vertex numberings), decides generalized
//! Ramsey questions for the nested family `F_k` by isomorph-free
//! exhaustive search, and evaluates the Nordhaus-Gaddum-type bounds on
//! `str(G) + str(complement(G))`. Everything is exact integer arithmetic
//! over bitset adjacency rows; every search result carries a
//! machine-checkable witness.
//!
//! ```
//! use strengthlab::{ramsey_fk, strength, Graph};
//!
//! // str(K_{2,3}) = 2s + t = 7, witnessed by an optimal numbering
//! let g = Graph::complete_bipartite(2, 3).unwrap();
//! let r = strength(&g).unwrap();
//! assert_eq!(r.value, 7);
//! assert_eq!(r.witness.strength_value(), Some(7));
//!
//! // r(F_4, F_4) = 7 by exhaustive search; the unique extremal graph
//! // one order below is K_{3,3}
//! let r = ramsey_fk(4, 4, 10).unwrap();
//! assert_eq!(r.value, Some(7));
//! assert_eq!(r.witness.unwrap().family_name().unwrap(), "K_{3,3}");
//! ```

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod matching;
pub mod numbering;
pub mod ramsey;
pub mod strength;
pub mod subgraph;
pub mod verify;

pub use bounds::{bounds_table, f_max, f_via_ramsey, rho, rho_prime, sigma, BoundsRow, FValue};
pub use canon::{canonical_form, is_canonically_labeled, CanonicalForm};
pub use enumerate::{
    cursor_resume, enumerate_graphs, enumerate_partitioned, EnumCursor, Enumerator, CLASS_COUNTS,
    MAX_ENUM_ORDER,
};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_ORDER};
pub use graph6::{graph6_decode, graph6_encode};
pub use independence::independence_number;
pub use matching::{has_one_factor, matching_number};
pub use numbering::{strength_of_numbering, Numbering};
pub use ramsey::{
    arrows_fk, arrows_fk_with_progress, chvatal_fk_lower, chvatal_tree_formula, known_classical,
    r_f3_formula, r_f4_formula, ramsey_fk, ramsey_fk_resumable, ramsey_fk_with_progress, ramsey_p3,
    ArrowsOutcome, RamseyCheckpoint, RamseyResult, RamseyStatus,
};
pub use strength::{
    max_fk_subgraph, strength, strength_bruteforce, strength_isolated_invariance_check,
    strength_lower_bound, strength_upper_bound_beta, StrengthMethod, StrengthResult,
};
pub use subgraph::{contains_subgraph, find_subgraph, PatternQuery};
