//! Exact arithmetic in the group ring `K[P]` of the Promislow group over a
//! prime field, with tools to construct, decide and search for units.
//!
//! Group ring elements are quadruples of Laurent polynomials over `Z^3`
//! indexed by the Klein four-group; see [`groupring::RingElemP`].

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod group;
pub mod groupring;
pub mod matembed;
pub mod parse;
pub mod report;
pub mod selftest;
pub mod units;
