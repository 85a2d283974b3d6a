#![allow(clippy::needless_range_loop, clippy::len_without_is_empty)]

pub mod chi;
pub mod coalg;
pub mod dickson;
pub mod error;
pub mod ff;
pub mod mono;
pub mod reps;
pub mod verify;

pub use error::{Error, Result};
