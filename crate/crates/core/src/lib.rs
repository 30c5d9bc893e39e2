//! Re-encoding and coordinate transformation for algebraic list decoding of
//! Reed-Solomon codes.
//!
//! The interpolation step of soft-decision decoding solves a bivariate
//! problem with thousands of linear constraints. Interpolating k
//! high-multiplicity points by a polynomial e(X), shifting them to Y = 0 and
//! dividing Y by g(X) = prod (X - x_i) leaves a far smaller problem whose
//! solution H(X, Y) can be factored directly for the candidate messages.
//!
//! ```
//! use reencode::galois::Field;
//! use reencode::koetter::{InterpolationPoint, InterpolationProblem};
//! use reencode::decoder::{decode_reduced, DecodeOptions};
//!
//! let gf = Field::build(3, 0b1011).unwrap();
//! let a = |i| gf.from_exponent(i);
//! let pts = vec![
//!     InterpolationPoint::new(a(1), a(4), 2),
//!     InterpolationPoint::new(a(2), a(6), 1),
//!     InterpolationPoint::new(a(2), a(3), 1),
//!     InterpolationPoint::new(a(3), a(0), 1),
//!     InterpolationPoint::new(a(3), a(1), 1),
//!     InterpolationPoint::new(a(0), a(1), 1),
//!     InterpolationPoint::new(a(0), a(0), 1),
//! ];
//! let problem = InterpolationProblem::new(pts, 2).unwrap();
//! let report = decode_reduced(&gf, &problem, &DecodeOptions::default()).unwrap();
//! assert_eq!(report.accepted().len(), 2);
//! ```

pub mod cli;
pub mod decoder;
pub mod error;
pub mod factorization;
pub mod galois;
pub mod koetter;
pub mod oracle;
pub mod poly;
pub mod reencoding;
pub mod rs_codec;

pub use error::{Error, Result};
