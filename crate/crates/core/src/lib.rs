pub mod alpha;
pub mod crosszeros;
pub mod error;
pub mod pleijel;
pub mod roots;
pub mod specfun;
pub mod validate;
pub mod willis;

pub use error::{Error, Result};
