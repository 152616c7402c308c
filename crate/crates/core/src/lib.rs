//! Exact combinatorics of integer partitions: hook-difference statistics,
//! border-path departure words, m-cores and m-quotients, truncated q,t-series,
//! and a verifier that checks generating-function identities coefficient by
//! coefficient against brute-force enumeration.

pub mod cores;
pub mod error;
pub mod params;
pub mod partition;
pub mod qseries;
pub mod verifier;
pub mod walks;

pub use error::{Error, Result};
pub use params::Params;
pub use partition::{parse_partition, partitions_of, partitions_up_to, Cell, Partition, StatParams};
pub use qseries::{Poly, QTSeries};
