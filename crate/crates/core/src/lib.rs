//! A finite-group engine built on dense Cayley tables, with tools for
//! studying the set of distinct element centralizers.
//!
//! The crate covers:
//!
//! * group construction and validation ([`group`], [`families`]),
//! * subgroups, quotients and derived series ([`subgroup`]),
//! * distinct centralizers and their structure ([`centralizers`], [`clique`],
//!   [`frobenius`]),
//! * isomorphism testing and central-quotient classification ([`iso`]),
//! * the group-expression language used on the command line ([`expr`]),
//! * corpus sweeps producing machine-readable reports ([`verify`]).
//!
//! ```
//! use centra_core::{cent_count, parse_group};
//!
//! let d14 = parse_group("D14").unwrap();
//! assert_eq!(cent_count(&d14), 9);
//! ```

pub mod bitset;
pub mod centralizers;
pub mod clique;
pub mod error;
pub mod expr;
pub mod families;
pub mod frobenius;
pub mod group;
pub mod iso;
pub mod subgroup;
pub mod verify;

pub use bitset::ElementSet;
pub use centralizers::{
    cent_count, cent_set, cover_profile, is_ca, setwise_product, three_cover_index, CentProfile, CoverViolation, Limits,
};
pub use clique::{max_noncommuting, max_noncommuting_set};
pub use error::GroupError;
pub use expr::{parse, parse_group, GroupExpr, ParseError, SpecError};
pub use families::{direct_product, make_family, semidirect_cyclic, FamilyKind};
pub use frobenius::{is_frobenius, FrobeniusWitness};
pub use group::FiniteGroup;
pub use iso::{classify_central_quotient, is_isomorphic, Fingerprint, QuotientClass};
pub use subgroup::{
    all_subgroups, center, centralizer, derived_series, element_order_histogram, is_solvable, quotient, GroupHom,
    Subgroup,
};
