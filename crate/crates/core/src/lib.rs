//! Fixed hooks in arbitrary columns of partitions.
//!
//! A hook at cell `(i, m)` of a partition is `h`-fixed when its length is
//! `i + h`. This crate builds the generating functions counting such hooks,
//! by the size of the part they sit on or by their own length, and checks
//! them against direct enumeration.
//!
//! - [`partition`]: partitions, conjugates, hook lengths, enumeration;
//! - [`series`]: truncated Laurent series, q-Pochhammer symbols, Gaussian binomials;
//! - [`oracle`]: brute-force counts;
//! - [`catalog`]: the generating functions;
//! - [`verify`]: coefficient-wise comparison of the two.

pub mod catalog;
pub mod oracle;
pub mod partition;
pub mod series;
pub mod verify;

pub use catalog::{build, CatalogError, Params, TheoremId, Variant};
pub use partition::{enumerate, Family, Partition, Partitions, TwoColoredPartition};
pub use series::{gauss_binomial, pochhammer, LaurentSeries, PochCount, PochSpec, SeriesError, Sign};
pub use verify::{run_case, run_cases, CoefficientRow, Grid, IdentityCase, Mismatch, Status, VerifyReport};
