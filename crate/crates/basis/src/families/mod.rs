//! Per-family evaluators. Each takes plain (possibly doubled) quantum numbers
//! and natural coordinates.

pub mod fourier;
pub mod hermite;
pub mod jacobi;
pub mod laguerre;
pub mod spherical;
pub mod zernike;
