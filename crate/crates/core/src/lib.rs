//! Reverse multiples ("palintiples"): numbers equal to an integer multiple of
//! their own digit reversal, such as `8712 = 4 · 2178`.
//!
//! The crate covers
//!
//! * digit/carry conversion, validation and carry-pattern classification
//!   ([`instance`]);
//! * exhaustive enumeration by a depth-first walk over carry pairs, an
//!   independent brute-force oracle and the bounded negative scans
//!   ([`search`]);
//! * families of higher-base palintiples whose carries are the digits of a
//!   lower-base one ([`derive`]);
//! * exact integer polynomials and the factorisation identities of the
//!   induced palinomials ([`palinomial`]);
//! * Young graphs, their canonical forms and isomorphism classes
//!   ([`young`]);
//! * a regression corpus of published worked examples ([`corpus`]).

pub mod arith;
pub mod corpus;
pub mod derive;
pub mod instance;
pub mod palinomial;
pub mod search;
pub mod young;

pub use derive::{
    derive_family, instantiate, instantiate_with, permutiple_search, theorem_family, AffineValue, DerivationMode,
    DeriveError, ParametricFamily, PermutipleWitness, Theorem,
};
pub use instance::{Palintiple, PalintipleClass, PalintipleError, SymmetricProfile};
