//! Essential divisors and Nash components of quasi-ordinary hypersurface
//! germs, computed from characteristic exponents, singular-locus faces and
//! pairwise contact exponents.
//!
//! * [`intlat`]: exact lattices in `Q^d` (Hermite/Smith normal forms, duals,
//!   indices, primitive vectors).
//! * [`qobranch`]: the lattice tower of a branch and its dual lattice `N`.
//! * [`conegeom`]: faces of the orthant relative to `N`, minimal vectors of
//!   the singular part, barycenters, monomial valuations.
//! * [`nashmap`]: essential divisors relative to `B`, per branch and summed
//!   over the branches of a reducible germ.
//! * [`oracle`]: exhaustive reference implementations for cross-checking.
//! * [`cli`]: the `qonash` command and its JSON schema.

pub mod cli;
pub mod conegeom;
pub mod error;
pub mod intlat;
pub mod nashmap;
pub mod oracle;
pub mod qobranch;

pub use conegeom::{Divisor, Face, FaceSet, Origin};
pub use error::{Error, Result};
pub use intlat::{Lattice, RatVec};
pub use nashmap::{analyze_branch, analyze_variety, BranchInput, BranchReport, Contact, VarietyReport};
pub use qobranch::{build_tower, BranchLattices, BranchSpec};

/// Version of the JSON input and report schema.
pub const SCHEMA_VERSION: u32 = 1;
