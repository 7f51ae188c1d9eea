//! Chekanov–Eliashberg differential graded algebras of Legendrian knots
//! given as plat closures of positive braids.
//!
//! The crate is organised along the computation:
//!
//! * [`front`] parses braid words and builds labelled plat fronts;
//! * [`freealg`] is exact arithmetic in the free algebra over Z/2 or Z[t,t^-1];
//! * [`dga`] resolves a front, counts disks and produces the graded DGA;
//! * [`charalg`] rewrites modulo two-sided ideals, finds forced zeros,
//!   simplifies presentations and searches for unit witnesses;
//! * [`cert`] certifies nontriviality through shift-operator
//!   representations and augmentations.
//!
//! [`knots`] holds the built-in knot table and the knot file format,
//! [`report`] the machine-readable run report, and [`suite`] the seeded
//! checklist run by the `paper-suite` command.

pub mod cert;
pub mod charalg;
pub mod dga;
pub mod error;
pub mod freealg;
pub mod front;
pub mod knots;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use freealg::{Gen, Laurent, LaurentPoly, Poly, Word, Z2Poly, Z2};
pub use front::{build_front, parse_plat_word, FrontDiagram, PlatBraid};
