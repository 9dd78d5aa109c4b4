//! Exact confidence nets for a location parameter under the symmetry of a
//! finite reflection group.
//!
//! A sample `y` and a group `G` with a parabolic copy of the symmetric group
//! define a ray `y - theta * v`. The live roots (those not orthogonal to `v`)
//! cut the line into intervals whose exact coverage probabilities are the
//! normalised coefficients of
//!
//! ```text
//! G(q) = prod_j (1 - q^{d_j}) / prod_{i=1}^{n} (1 - q^i)
//! ```
//!
//! where `d_j` are the basic degrees of `G`. The [`oracle`] module checks the
//! algebra by brute force on the Cayley graph and the statistics by Monte Carlo.

pub mod approx;
pub mod cli;
pub mod error;
pub mod group;
pub mod linalg;
pub mod net;
pub mod nongroup;
pub mod oracle;
pub mod polynomial;
pub mod report;
pub mod roots;

pub use error::{Error, Result};
pub use group::GroupType;
pub use net::{ConfidenceNet, NetKind, Sample};
pub use polynomial::{DegreeList, Polynomial};
pub use roots::{LiveRoots, RootSystem};
