//! Fixed inputs shared by the benchmarks.

use centra_core::{parse_group, FiniteGroup};

/// The 9-centralizer witnesses, smallest first.
pub const WITNESSES: [&str; 5] = ["D14", "C7:C3(k=2)", "C7:C6(k=3)", "D14xC5", "Heis7"];

pub fn group(spec: &str) -> FiniteGroup {
    parse_group(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}
