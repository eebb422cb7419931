//! Exact computations with Witt vectors of the free algebra `Z{X, Y}`.
//!
//! Two constructions of "Witt vectors of a noncommutative ring" are modelled
//! side by side:
//!
//! - [`ghost`]: Hesselholt's `W_n(A)`, represented by ghost components in
//!   `A/[A,A]`.
//! - [`cd`]: the subgroup `X_n(A)` of `A^{n+1}` built from Teichmüller lifts
//!   and Verschiebung.
//!
//! [`rmap`] implements the recursive map `R` and replays the explicit element
//! at `p = 2` whose image in `X(A)` escapes the closed commutator subgroup.
//! [`verify`] bundles every identity as a reproducible named check.
//!
//! ```
//! use ncwitt::freealg::Alphabet;
//! use ncwitt::ghost::WittContext;
//! use ncwitt::parse::parse_poly;
//!
//! let xy = Alphabet::xy();
//! let ctx = WittContext::new(&xy, 2, 2).unwrap();
//! let a = ctx
//!     .coordinates(vec![parse_poly("XY - YX", &xy).unwrap(), parse_poly("0", &xy).unwrap()])
//!     .unwrap();
//! assert_eq!(ctx.ghost_map(&a).to_string(), "(0, -2[XXYY] + 2[XYXY])");
//! ```

pub mod cd;
pub mod cycquot;
pub mod error;
pub mod f2;
pub mod freealg;
pub mod ghost;
pub mod parse;
pub mod report;
pub mod rmap;
pub mod sample;
pub mod verify;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
