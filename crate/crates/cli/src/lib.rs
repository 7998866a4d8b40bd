//! Command-line front end for the hk-core engine: ring-spec files, the
//! content-addressed result cache, report emission, and the verification
//! pipeline behind the `hk` binary.

pub mod cache;
pub mod pipeline;
pub mod report;
pub mod spec_file;
