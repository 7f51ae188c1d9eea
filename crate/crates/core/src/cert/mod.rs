//! Certificates of nontriviality: operator representations on the space ℋ
//! of finitely supported Z/2 sequences, and augmentations.
//!
//! A representation in which every `∂x` acts by zero, and some generator
//! acts by a nonzero operator, shows `1 ∉ ⟨Im ∂⟩`, since 1 acts as the
//! identity. A nontrivial characteristic algebra in turn forces nonvanishing
//! contact homology.

mod augment;
pub mod matrix;
mod representation;
mod seq;

pub use augment::{
    augmentation_search, augmentation_search_with, certify_augmentation, Augmentation, AugmentationOptions,
    AugmentationSearch, DEFAULT_GENERATOR_LIMIT,
};
pub use representation::{
    certify_representation, check_relations, check_representation, m10_161_representation,
    six_generator_representation, Certificate, CertificateKind, Representation, RepresentationReport, DEFAULT_SAMPLE,
    NONVANISHING_NOTE,
};
pub use seq::{apply_op, shift_names, standard_shift_operators, SeqOp, SeqVec, Shift};
