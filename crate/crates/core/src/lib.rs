//! Enumeration of minimal a,b-separators with at most `k` vertices.
//!
//! The crate provides:
//!
//! - [`takata`]: the binary-partition search over all minimal a,b-separators,
//!   with polynomial delay;
//! - [`important`]: bounded vertex min-cuts and important-separator
//!   enumeration;
//! - [`bounded`]: the size-bounded enumerator, whose delay is polynomial in the
//!   input times `min(4^k, R)` after `R` outputs;
//! - [`hardness`]: the set-cover gadget showing the per-node decision problem
//!   is NP-complete;
//! - [`oracle`]: brute-force counterparts of all of the above;
//! - [`io`], [`gen`], [`cli`]: formats, generators and the command line.

pub mod bounded;
pub mod cli;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hardness;
pub mod important;
pub mod io;
pub mod oracle;
pub mod takata;

pub use bounded::{enumerate_bounded, BoundedContext, EnumSession};
pub use error::{Error, Result};
pub use graph::{Graph, Separator, VertexSet};
pub use takata::{enumerate_all, EnumContext, SearchStats, TakataNode};
