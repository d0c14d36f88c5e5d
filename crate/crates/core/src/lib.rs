pub mod classical;
pub mod error;
pub mod hilbert;
pub mod hs_strat;
pub mod job;
pub mod modified;
pub mod mora;
pub mod param_poly;
pub mod param_ring;
pub mod poly;
pub mod render;
pub mod sample;
pub mod stratify;

pub use error::{Error, Result};
