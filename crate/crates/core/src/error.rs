use thiserror::Error;

use crate::eisenstein::LKind;
use crate::weyl::Parabolic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("w{label} is not a Kostant representative for {parabolic}")]
    NotKostant { label: u8, parabolic: Parabolic },

    #[error("{0} is not a maximal parabolic")]
    NotMaximal(Parabolic),

    #[error("Levi weight (a = {a}, b = {b}) is not admissible: {reason}")]
    InvalidLeviWeight { a: i64, b: i64, reason: &'static str },

    #[error("L-oracle has no entry for {lkind} at weight k = {k}")]
    OracleMissing { lkind: LKind, k: u32 },

    #[error("L-oracle entry {lkind}.{k}: {reason}")]
    OracleInvalid { lkind: LKind, k: String, reason: String },

    #[error("L-oracle file: {0}")]
    OracleFile(String),

    #[error("oracle mode `{0}` does not fix the central value of individual eigenforms")]
    OracleUndetermined(String),

    #[error("unknown L-oracle `{0}` (expected symbolic, all-nonzero, all-zero, sign or file:PATH)")]
    OracleSpec(String),

    #[error("reference table: {0}")]
    Table(String),
}
