//! Isomorphism testing, canonical forms, and bounded enumeration.

pub mod budget;
pub mod canonical;
pub mod iso;
pub mod lemma6;
pub mod spheres;

pub use budget::{SearchBudget, SearchStatus};
pub use canonical::{canonical_form, CanonicalForm};
pub use iso::{is_isomorphic, iso};
pub use lemma6::{lemma6_combinatorial_check, scan_sphere, Lemma6Report};
pub use spheres::{brute_force_2sphere_count, enumerate_2spheres, SphereCensus, SphereEnumeration};
