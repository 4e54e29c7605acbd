//! Exact machinery for character tables of symmetric groups: complementary
//! submatrices, basic sets and Cartan matrices, Smith normal forms, partition
//! generating functions, and verification of k-Schur transition tables.
//!
//! All arithmetic is exact (`num_bigint::BigInt` / `num_rational::BigRational`);
//! there is no floating point anywhere in this crate.

pub mod basic_sets;
pub mod char_tables;
pub mod error;
pub mod kschur;
pub mod linalg;
pub mod partitions;
pub mod reg_sing;
pub mod report;
pub mod series;

pub use error::Error;
