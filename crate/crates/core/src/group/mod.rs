//! Elementary abelian 2-group actions on labeled complexes.

pub mod action;
pub mod automorphism;
pub mod element;
pub mod position;
pub mod quotient;

pub use action::{
    check_equivariance, fixed_points, orbit_census, orbits, parity_check, stabilizer,
    BoundAction, EquivarianceReport, GroupAction, LabelPermutation,
};
pub use element::{GroupElement, Subgroup};
pub use position::{
    characteristic_vector, face_stabilizer, FacePosition, HiddenFixedPoint, PositionData,
};
pub use quotient::{quotient_by_action, Quotient};
pub use automorphism::{
    automorphism_group, find_z2n_subaction, find_z2n_subactions, AutomorphismGroup, SubactionSearch,
    Z2nSubaction,
};
