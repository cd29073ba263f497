//! Decomposition of characters into irreducibles, trivial multiplicities,
//! and consistency checks on the resulting tables.

mod branch;
mod decompose;
mod oracle;
pub mod reference;
mod table;

pub use branch::{branch_consistency_check, BranchReport};
pub use decompose::{
    decompose, decompose_with_chooser, maximal_weights, reconstruct, row_order,
    trivial_multiplicity, Decomposition,
};
pub use oracle::{invariant_dim_ct, invariant_dim_ct_capped, CT_RANK_CAP};
pub use table::{
    betti_checksum, check_stable, decompose_all, decompose_cell, default_rank, family_for,
    DecompositionTable, TableEntry,
};
