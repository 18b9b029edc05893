//! The Campbell–Baker–Hausdorff series `C(a,b)` with `e^a e^b = e^{C(a,b)}`,
//! built from the associative logarithm and the Dynkin projection.

mod assoc;
mod schema;

pub use assoc::{assoc_log_of_product, expand_pattern, AssocPoly, Word};
pub use schema::{cbh_schema, dynkin_project, BracketTerm, CbhSchema, DEFAULT_MAX_SCHEMA_DEGREE};
