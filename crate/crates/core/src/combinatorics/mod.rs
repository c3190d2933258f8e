//! Finite combinatorial objects: compositions, subsets, permutations, set
//! compositions, set partitions, and the Möbius machinery on them.

pub mod coefficients;
pub mod mobius;
pub mod numbers;
pub mod setcomp;
pub mod setpart;
pub mod subset;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use coefficients::{coeff_c, script_c, script_d, script_d_by_meet, CoeffTable};
pub use mobius::{mobius_odd, mobius_odd_blockwise, mobius_odd_signed_catalan, mu_ell, mu_ell_closed_form};
pub use numbers::{binomial, catalan, eulerian, eulerian_row, factorial, multinomial};
pub use setcomp::{
    estd_pair, is_enriched_standard, is_standard, refines, set_comp, setcomp_odd, std_pair, SetComposition,
};
pub use setpart::{mobius_partition, SetPartition};
pub use subset::{
    comp_of_subset, compositions, odd_compositions, odd_of_peak, odiff, parse_subset, peak_of_odd, subset_of_comp,
    Composition, Permutation, Subset,
};

/// Families that [`enumerate`] can list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    SetCompositions,
    OddSetCompositions,
    SetPartitions,
    OddSetPartitions,
    Compositions,
    OddCompositions,
    PeakSets,
    Subsets,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::SetCompositions,
        Kind::OddSetCompositions,
        Kind::SetPartitions,
        Kind::OddSetPartitions,
        Kind::Compositions,
        Kind::OddCompositions,
        Kind::PeakSets,
        Kind::Subsets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::SetCompositions => "set_compositions",
            Kind::OddSetCompositions => "odd_set_compositions",
            Kind::SetPartitions => "set_partitions",
            Kind::OddSetPartitions => "odd_set_partitions",
            Kind::Compositions => "compositions",
            Kind::OddCompositions => "odd_compositions",
            Kind::PeakSets => "peak_sets",
            Kind::Subsets => "subsets",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Kind::ALL.into_iter().find(|k| k.name() == norm).ok_or_else(|| Error::Parse(format!("unknown kind {s:?}")))
    }
}

/// Every object of the given kind on `[n]` (or of size `n`), in canonical
/// order, rendered in the shared text format.
pub fn enumerate(kind: Kind, n: usize) -> Vec<String> {
    fn show<T: fmt::Display>(v: Vec<T>) -> Vec<String> {
        v.iter().map(T::to_string).collect()
    }
    match kind {
        Kind::SetCompositions => show(SetComposition::all(n)),
        Kind::OddSetCompositions => show(SetComposition::all_odd(n)),
        Kind::SetPartitions => show(SetPartition::all(n)),
        Kind::OddSetPartitions => show(SetPartition::all_odd(n)),
        Kind::Compositions => show(compositions(n)),
        Kind::OddCompositions => show(odd_compositions(n)),
        Kind::PeakSets => Subset::peak_sets(n).iter().map(|s| format!("{{{s}}}")).collect(),
        Kind::Subsets => {
            let mut v = Subset::all(n);
            v.sort();
            v.iter().map(|s| format!("{{{s}}}")).collect()
        }
    }
}
