pub mod betti;
mod bigjson;
pub mod combinat;
pub mod error;
pub mod exactla;
pub mod hilbert;
pub mod orbitmod;
pub mod render;
pub mod reps;
pub mod resolve;
pub mod verify;

pub use error::{Error, Result};
