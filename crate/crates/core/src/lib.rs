pub mod algebras;
pub mod cbh;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod factor;
pub mod liecore;
pub mod pbwcheck;
mod util;

pub use error::{Error, Result};
