//! Chow rings of matroids, their Feichtner–Yuzvinsky bases, Bergman-type
//! fans, Stembridge codes, and the symmetric-function side of the story.
//!
//! The crate is organized bottom-up:
//!
//! * [`subset`] / [`perm`] — ground-set combinatorics;
//! * [`matroid`] — matroids given by their bases, closure, flats;
//! * [`lattice`] — finite atomic lattices, building sets, nested sets;
//! * [`fans`] — Bergman and augmented Bergman fans as simplicial complexes;
//! * [`chow`] — ring presentations, monomial bases, an exact Hilbert oracle;
//! * [`codes`] / [`bijections`] — marked codes and the two bijections;
//! * [`symfunc`] — graded Frobenius characteristics and Eulerian identities;
//! * [`verify`] — bundled consistency suites used by the CLI and tests.
//!
//! Enumeration-heavy routines are data-parallel via rayon when the default
//! `parallel` feature is on; disable default features for a sequential build
//! with identical results.

pub mod bijections;
pub mod chow;
pub mod codes;
pub mod complex;
pub mod fans;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod par;
pub mod perm;
pub mod subset;
pub mod symfunc;
pub mod verify;

pub use matroid::Matroid;
pub use perm::Perm;
pub use subset::Subset;

/// Errors reported by constructors and validators across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("not nested: {0}")]
    NotNested(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
