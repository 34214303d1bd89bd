pub mod bubble;
pub mod cli;
pub mod error;
pub mod homogeneous;
pub mod inverse;
pub mod model;
pub mod quad;
pub mod specfun;
pub mod units;
