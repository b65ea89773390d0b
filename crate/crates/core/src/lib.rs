// SPDX-License-Identifier: Apache-2.0

//! Additive systems for the nonnegative integers.
//!
//! A family of sets, each containing 0 and at least one positive element, is
//! an additive system when every nonnegative integer is, in exactly one way,
//! a finite sum of one element from each set. This crate provides a symbolic
//! set algebra, an exhaustive verifier, dilation and contraction with
//! checkable witnesses, the classification of every additive system as a
//! contraction of a mixed-radix system, mixed-radix codecs, and small
//! exhaustive searches for sumset decompositions.

pub mod classify;
pub mod codec;
pub mod fixtures;
pub mod lab;
pub mod label;
pub mod nat;
pub mod radix;
pub mod sets;
pub mod systems;
pub mod transforms;
mod window;

pub use classify::{
    bns_equal, build_bns, classify, debruijn_step, expand, is_decomposable_set,
    is_indecomposable_system, BritishNumberSystem, ClassificationResult, ClassifyError,
    Decomposition, ExtractionStep, GeneratorSchedule, PartitionSpec, StepCase, TailRule,
};
pub use codec::{decode, encode, preset, CodecError, MixedRadixDigits, Preset};
pub use lab::{search, validate_witness, Limits, SearchError, SearchMode, SearchOutcome, SearchProblem, Witness};
pub use label::Label;
pub use radix::{RadixError, Radices};
pub use sets::{Bound, SetError, StructuredSet};
pub use systems::{
    AdditiveSystem, Member, Representation, SystemError, Term, Verdict, VerificationReport,
};
pub use transforms::{
    compose_contraction_dilation, compose_contractions, contract, dilate, dilate_family,
    ContractionWitness, DilationRecord, IndexPartition, PartitionClass, TransformError,
};
