//! Baer invariants of finitely generated abelian groups with respect to
//! polynilpotent varieties, with exact arithmetic and independent
//! cross-checks through Hall basic commutators and Schur multipliers.

pub mod abelian;
pub mod arith;
pub mod class_row;
pub mod cli;
pub mod error;
pub mod hall;
pub mod multiplier;
pub mod oracle;

pub use abelian::{FgAbelianGroup, IntegerMatrix};
pub use arith::BigCount;
pub use class_row::ClassRow;
pub use cli::parse_group;
pub use error::{Error, ParseError, Result};
pub use multiplier::{
    metabelian_multiplier, nilpotent_multiplier, polynilpotent_multiplier, solvable_multiplier, MultiplierReport,
};
