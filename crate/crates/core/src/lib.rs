//! Few-Lee-weight linear codes over `Z2[u]` (`u² = 0`) built from simplicial
//! complexes with a single maximal element.
//!
//! A message `a = (p, q + u·r)` in the mixed alphabet `Z2^m × (Z2 + uZ2)^m`
//! is encoded against a defining set `L` of triples `(t1, t2 + u·t3)` drawn
//! from the complements of three complexes `Δ_D`, `Δ_E`, `Δ_F`. The crate
//! computes the Lee weight distribution of the resulting code two
//! independent ways (exhaustive enumeration and closed-form counting) and
//! analyzes the binary Gray image for self-orthogonality and minimality.
//!
//! Module map:
//!
//! - [`ring`]: `Z2`, `Z2[u]`, mixed words, Gray map, Lee weight.
//! - [`simplicial`]: supports, complexes, `χ`, generating-function
//!   evaluations and subset-counting formulas.
//! - [`code`]: defining sets, encoding, brute-force distributions, kernels.
//! - [`closed_form`]: per-message weight formula and the tabulated
//!   distribution.
//! - [`gray`]: Gray images, self-orthogonality, minimality.
//! - [`report`]: the aggregated per-instance analysis.

pub mod closed_form;
pub mod code;
mod error;
pub mod gray;
pub mod report;
pub mod ring;
pub mod simplicial;

pub use code::{DefiningSet, Instance, WeightDistribution};
pub use error::{Error, Result};
pub use ring::{BinaryWord, BitVec, CodewordZ2u, MixedWord, Z2uElement};
pub use simplicial::SupportSet;
