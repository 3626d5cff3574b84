//! Text formats for complexes (`.tri`) and group actions (`.act`).

pub mod action;
pub mod tri;

pub use action::{parse_action, to_action_string};
pub use tri::{parse_tri, to_tri_string};
