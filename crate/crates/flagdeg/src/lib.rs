//! Face-to-flag degree sequences of graded face posets.
//!
//! A pure rank-`k` poset assigns every rank-`s1` face a *degree* for each
//! composition `(s1, s2, ..., sm)` of `k`: the number of flags
//! `F < X2 < ... < Xm` whose ranks are the partial sums of the composition.
//! Collecting the degrees of all rank-`s1` faces in non-increasing order
//! gives a degree sequence; sequences for rearranged compositions are
//! comparable in the (weak) majorization order once the poset satisfies the
//! right structural hypotheses (boolean ideals, or simple facets).
//!
//! The crate computes those sequences three independent ways (dynamic
//! programming over rank levels, brute-force chain enumeration, and a
//! closed-form shortcut valid on boolean-ideal posets), validates the
//! structural hypotheses, and mechanically checks the comparison identities
//! on any input. All counting is done in exact unbounded integers.
//!
//! ```
//! use flagdeg::complexes::parse_facets;
//! use flagdeg::degrees::degree_sequence;
//! use flagdeg::{compare, Composition, MajorizationVerdict};
//!
//! let p = parse_facets("1 2 3 4\n1 2 4 6\n1 2 5 6\n").to_poset()?;
//! let head_light = degree_sequence(&p, &Composition::new(vec![1, 1, 2])?)?;
//! let head_heavy = degree_sequence(&p, &Composition::new(vec![2, 1, 1])?)?;
//! assert_eq!(head_light.to_string(), "(9,9,6,6,3,3)");
//! assert_eq!(
//!     compare(&head_light, &head_heavy).verdict,
//!     MajorizationVerdict::Majorizes
//! );
//! # Ok::<(), flagdeg::Error>(())
//! ```

pub mod complexes;
pub mod degrees;
pub mod poset;
pub mod seq;
pub mod verify;

mod error;
pub(crate) mod jsonnum;
pub(crate) mod util;

pub use error::{Error, ErrorKind};
pub use poset::{ElemId, Interval, RankedPoset};
pub use seq::{compare, Composition, DegreeSequence, MajorizationRelation, MajorizationVerdict};
