#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod dhomothety;
pub mod fixtures;
pub mod frontend;
pub mod geometry;
pub mod identities;
pub mod model;
pub mod oracle;
pub mod scalar;
