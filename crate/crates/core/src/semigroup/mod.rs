//! Finite semigroups: tables, Green's relations, maximal subgroups and
//! brute-force oracles.

pub mod green;
pub mod group;
pub mod iso;
pub mod oracle;
pub mod table;

pub use green::{green_structure, principal_series, GreenStructure, PrincipalSeries};
pub use group::{maximal_subgroup, GroupData};
pub use iso::{find_isomorphism, is_isomorphism};
pub use oracle::{brute_force_is_inverse, is_semisimple_algebra, InverseOracle};
pub use table::{parse_sgt, validate_table, write_sgt, SemigroupTable, SgtFile};
