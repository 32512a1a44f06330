//! Exact computations with bound quiver algebras: modules, syzygies,
//! projective dimensions, torsion radicals, radical layer lengths and
//! filtration certificates for extension-dimension upper bounds.

pub mod algebra;
pub mod certificate;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod extdim;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod random;
pub mod report;
pub mod rep;
pub mod torsion;

pub use algebra::{Algebra, AlgebraSpec, Arrow, BoundQuiverAlgebra, Path, Relation};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use parse::{parse_algebra, parse_job, Job};
pub use rep::{ModuleMap, Representation, Submodule};
pub use certificate::{resolution_to_filtration, verify_filtration, CertNode, FiltrationCertificate, Verdict};
pub use corpus::{parse_corpus_entry, CorpusEntry, GoldenValue};
pub use decompose::{decompose, is_in_add, AddGenerator, DecomposeConfig, DEFAULT_SEED};
pub use extdim::{diamond_bruteforce, extension_dim_bruteforce, tn_membership_search, SearchBudget};
pub use homology::{
    ext1, global_dimension, minimal_projective_resolution, omega, omega_inv, proj_dimension, syzygy, PdResult,
    Resolution, ShortExactSequence,
};
pub use report::{bound_report, check_entry, BoundReport, ReportOptions};
pub use torsion::{
    best_bound, layer_length, thm319_bound, thm319_certificate, torsion_radical, SimpleSubset, SubsetStrategy,
};
