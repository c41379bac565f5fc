pub mod characters;
pub mod error;
pub mod exec;
pub mod ext;
pub mod gaussian;
pub mod kgroup;
pub mod lyubeznik;
pub mod origin;
pub mod partitions;
pub mod poly;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use exec::Exec;
pub use poly::Poly;
