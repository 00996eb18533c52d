//! Combinatorial calculus of geometric types of Markov partitions.
//!
//! A [`GeometricType`] is the quadruple `(n, {(h_i, v_i)}, rho, eps)` describing how the
//! horizontal sub-rectangles of a Markov partition are mapped onto vertical ones. This crate
//! validates such quadruples, computes their incidence matrices, performs the binary
//! refinement, derives the boundary codes of the induced subshift of finite type, and
//! implements the identifications of codes (`~s`, `~u`, `~T`) that make the refined type a
//! conjugacy invariant.
//!
//! ```
//! use geotype::{binary_refinement, incidence_matrix, GeometricType};
//!
//! // one rectangle, two horizontal strips mapped in order without flips
//! let t = GeometricType::from_tables(vec![(2, 2)], vec![(1, 1), (1, 2)], vec![1, 1]).unwrap();
//! assert!(!incidence_matrix(&t).is_binary());
//! let b = binary_refinement(&t);
//! assert_eq!(incidence_matrix(&b).rows(), vec![vec![1, 1], vec![1, 1]]);
//! ```

pub mod boundary;
pub mod code;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod geometric_type;
pub mod refinement;
pub mod sample;
pub mod shift_space;

pub use boundary::{
    check_injectivity, eta, gamma, orbit, s_boundary_code, theta, u_boundary_code, upsilon,
    BoundaryCodes, BoundaryLabel, Flavor, OrbitDecomposition,
};
pub use code::{BiCode, Direction, OneSidedCode, Symbol};
pub use equivalence::{
    class_of, compare_types, pivot_k, pivot_z, s_partner, sim_s, sim_t, sim_u, u_partner,
    ChainEdge, ClassReport, CompareReport, OptionCase, PartnerCertificate, Relation, Verdict,
    DEFAULT_CLASS_CAP,
};
pub use error::{Error, Result};
pub use format::{parse_label, parse_type, read_raw, to_file_string, GeoTypeFile};
pub use geometric_type::{
    advisories, alpha, incidence_matrix, is_binary, is_mixing, validate, word_count, Advisory,
    GeometricType, HLabel, IncidenceMatrix, RawType, Sign, VLabel, ValidationReport, Violation,
};
pub use refinement::{binary_refinement, lex_index, refine_if_needed};
pub use shift_space::{
    classify, enumerate_periodic, is_admissible, is_admissible_in, list_words, ClassificationFlags,
    Subshift, DEFAULT_PERIODIC_BUDGET,
};
