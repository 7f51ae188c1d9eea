//! Characteristic algebras `A / ⟨Im ∂⟩` over Z/2: rewriting, bounded
//! completion, forced zeros, simplified presentations and unit witnesses.
//!
//! Words are ordered degree-lexicographically with higher generator labels
//! larger, so a linear relation such as `x_28 + x_2` orients to the rule
//! `x_28 → x_2`.

mod completion;
mod presentation;
pub mod relations;
mod rewrite;
mod witness;

pub use completion::{
    complete_bounded, complete_with, ideal_equiv_bounded, not_in_ideal, CompletionOptions, EquivalenceVerdict,
    DEFAULT_CAP, DEFAULT_MAX_RULES,
};
pub use presentation::{derive_zero_generators, simplify_presentation, Presentation};
pub use rewrite::{reduce_normal_form, CompletionStatus, Provenance, RewriteRule, RewriteSystem};
pub use witness::{
    search_unit_witness, search_unit_witness_with, verify_unit_witness, UnitWitness, WitnessSearch,
    WitnessSearchOptions,
};
