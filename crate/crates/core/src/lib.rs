//! Skew polynomial algebra and skew constacyclic LCD codes over finite
//! fields and the semi-local ring `F_q + vF_q` (`v^2 = v`).
//!
//! ```
//! use skewlcd::{ConstaModulus, Field, Inner, SkewConstaCode, SkewRing};
//!
//! let ring = SkewRing::new(&Field::gf9(), 1);
//! let m = ConstaModulus::new(&ring, 10, ring.field().one())?;
//! let c = SkewConstaCode::from_generator_poly(&m, &ring.parse("x^4+w*x^2+1")?)?;
//! assert!(c.is_skew_lcd(Inner::Euclidean)?);
//! assert_eq!(c.dim(), 6);
//! # Ok::<(), skewlcd::Error>(())
//! ```

pub mod catalog;
pub mod census;
pub mod cli;
pub mod codes;
pub mod error;
pub mod fp_poly;
pub mod gf;
pub mod matrix;
mod parse;
pub mod ring_r;
pub mod skewpoly;
pub mod tables;

pub use codes::{Distance, Inner, LinearCode, SkewConstaCode};
pub use error::{Error, Result};
pub use gf::{Automorphism, Elem, Field, FieldElem};
pub use ring_r::{RLambda, RSkewCode, RingElem};
pub use skewpoly::{ConstaModulus, SkewPoly, SkewRing};
