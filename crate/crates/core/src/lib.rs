//! Partition bijections between Gordon-type and Rogers-Selberg-type
//! partition classes, with an exact truncated q-series engine for checking
//! the identities that connect them.
//!
//! - [`partition`]: canonical partitions, union/sum/difference, and the
//!   decomposition into distinct blocks and repeated pairs
//! - [`classes`]: membership predicates and brute-force enumeration
//! - [`bijection`]: the maps `f`, `f⁻¹`, `g`, `h` and `f̄`
//! - [`diagram`]: S-diagrams and barred S-diagrams
//! - [`series`], [`products`], [`identities`]: truncated series, product
//!   builders, and the registered identity checks

pub mod bijection;
pub mod classes;
pub mod diagram;
pub mod error;
pub mod identities;
pub mod partition;
pub mod products;
pub mod series;

pub use bijection::{
    f_closed_form, f_forward, f_inverse, f_recursive, fbar, fbar_inverse, g_inverse, g_shift,
    h_inverse, h_map,
};
pub use classes::{class_gf, count_class, enumerate_class, for_each_partition, ClassSpec, Violation};
pub use diagram::{s_diagram, sbar_diagram, DiagramVariant, SDiagram};
pub use error::{Error, Result};
pub use identities::{
    build_e, build_f, check_families_agree, check_qdifference_system, check_t_generating_function,
    run_checks, verify_identity, Check, Exponent, Family, Identity, Mismatch, Status,
    VerificationReport,
};
pub use partition::{Block, Decomposition, Partition, RepeatedParts};
pub use products::{
    geometric_inverse, inverse_q_factorial, pochhammer, residue_product,
    residue_product_with_numerators, Length,
};
pub use series::{BiSeries, Series};
