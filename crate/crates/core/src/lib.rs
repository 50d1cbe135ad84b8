pub mod canon;
pub mod constructors;
pub mod detect;
pub mod error;
pub mod exec;
pub mod generate;
pub mod graph;
pub mod io;
pub mod poly;
pub mod spectral;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Component, DegreeClassification, Graph};
