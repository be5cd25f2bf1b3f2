pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod format;
pub mod isomorphism;
pub mod notation;
pub mod verify;

pub use algebra::{Algebra, IdentityCheck, IdentityKind, SeriesKind, Witness};
pub use cohomology::{Cocycle, Flavor};
pub use error::{Error, Result};
