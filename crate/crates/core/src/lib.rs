//! Plane contact of power-law graded elastic bodies: Hertzian and adhesive
//! solutions by a Gegenbauer spectral method, with quadrature-based
//! cross-check oracles.

pub mod assembly;
pub mod displacement;
pub mod error;
pub mod hertz;
pub mod jkr;
pub mod kernel;
pub mod linalg;
pub mod oracle;
pub mod quadrature;
pub mod roots;
pub mod specfun;
pub mod tables_io;

pub use error::{ContactError, Result};
