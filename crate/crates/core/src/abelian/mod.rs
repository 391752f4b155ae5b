//! Exact arithmetic for finite abelian groups, their 2-torsion and its
//! automorphism orbits, and integer Smith normal form.

mod group;
mod identify;
mod orbits;
mod snf;
mod spec;

pub use group::{factorize, prime_power, AbelianGroup, Element};
pub use identify::{identify_abelian, BinaryTable, Identified};
pub use orbits::{
    aut_orbits_by_search, aut_orbits_on_two_torsion, find_automorphism, two_torsion_orbit_count,
    Automorphism,
};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
pub use spec::{parse_group_spec, parse_presentation, Presentation};

pub(crate) use group::gcd;
pub(crate) use spec::{parse_moduli, Cursor};
