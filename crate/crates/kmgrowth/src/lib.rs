//! File formats, verification cases and the command-line front end around
//! [`kmgrowth_core`].

pub mod formats;
pub mod verify;

pub use kmgrowth_core;
