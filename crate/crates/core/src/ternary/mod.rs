//! Ternary groupoids in canonical and tabular form, identity checking,
//! canonicalization, isomorphism and compatibility.

mod algebra;
mod canon;
mod canonical;
mod catalog;
mod check;
mod props;
mod table;
mod term;

pub use algebra::{compatible, derived_malcev, retract, CompatReport, Retract};
pub use canon::{canonicalize, iso_test, verify_homomorphism, Canonicalized, IsoReport, Structure};
pub use canonical::{parse_kt_spec, CanonicalKt, DEFAULT_TABLE_BOUND};
pub use catalog::{catalog, catalog_identity};
pub use check::{
    check_identity, CheckMode, IdentityReport, DEFAULT_SAMPLES, DEFAULT_SEED,
    DEFAULT_TUPLE_BUDGET,
};
pub use props::{property_report, CheckPolicy, Flag, PropertyReport, PROPERTY_NAMES};
pub use table::{check_quasigroup, TernaryTable};
pub use term::{eval_term, Identity, Term};

use crate::error::Result;

/// A ternary operation on the carrier `{0..size-1}`.
pub trait TernaryOps {
    fn size(&self) -> usize;

    fn bracket(&self, x: usize, y: usize, z: usize) -> usize;

    /// The unique `z` with `[x z x] = x`.
    fn skew(&self, x: usize) -> Result<usize>;

    /// Human-readable form of a carrier element.
    fn label(&self, x: usize) -> String {
        x.to_string()
    }
}

impl<T: TernaryOps + ?Sized> TernaryOps for &T {
    fn size(&self) -> usize {
        (**self).size()
    }

    fn bracket(&self, x: usize, y: usize, z: usize) -> usize {
        (**self).bracket(x, y, z)
    }

    fn skew(&self, x: usize) -> Result<usize> {
        (**self).skew(x)
    }

    fn label(&self, x: usize) -> String {
        (**self).label(x)
    }
}
