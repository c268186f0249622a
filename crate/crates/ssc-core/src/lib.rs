//! Exact machinery for classifying the simple supercuspidal representations
//! of a split adjoint simple p-adic group and for checking the numerology of
//! the Langlands parameters attached to them.
//!
//! Everything here is exact: integer root-system combinatorics, finite-field
//! arithmetic, and polynomial identities over Z[t]. No floating point enters
//! at any stage, so every verification in the test suite is a proof for the
//! parameters it covers.

pub mod chevalley;
pub mod covectors;
pub mod gf;
pub mod inventory;
pub mod lparam;
pub mod orbits;
pub mod poly;
pub mod root_data;

pub use chevalley::{ChevalleyTable, LieBasis, LieVec};
pub use covectors::{Covector, TorusElem};
pub use gf::{Embedding, Field, FieldElem};
pub use inventory::{FormalDegree, InputPair, SscLabel};
pub use lparam::{FdcCandidate, FdcVerdict, ParamNumerology, SscInvariants};
pub use orbits::{ClassificationReport, OrbitPartition, StableSet};
pub use poly::{IntPoly, RatFunc};
pub use root_data::{Family, OmegaGroup, Root, RootDatum, RootOfUnity};
