//! Reference oracles for the specphase test suites.
//!
//! Everything in this crate is deliberately written by the slowest, most
//! literal route available: direct-summation DFTs, the textbook quadratic
//! LZ76 parser, adaptive quadrature for t tails, and brute-force enumeration
//! of donor assignments. None of it shares code with `specphase-core`; it
//! operates on plain slices so the two paths can only agree by computing the
//! same thing.

pub mod dft;
pub mod enumeration;
pub mod ks;
pub mod lz;
pub mod quadrature;
pub mod ttest;
