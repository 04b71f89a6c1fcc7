//! Exact contraction of objective coefficients for multi-objective binary
//! optimization (MOBO) problems.
//!
//! A MOBO instance minimizes `p` linear objectives over a feasible set
//! `X ⊆ {0,1}^n`. Large or widely ranged integer objective coefficients blow
//! up the objective space and destabilize objective-space algorithms. This
//! crate replaces each objective's coefficient vector `c` with the *minimal*
//! integer vector `d` that induces exactly the same order (including ties) on
//! all subset sums over the hypercube — and therefore the same dominance
//! relation and the same efficient set.
//!
//! The pieces:
//!
//! * [`model`] — instances, points, dominance, Pareto sets.
//! * [`measure`] — exact hypervolume and the contraction factor.
//! * [`enumeration`] — brute-force ground truth: feasible-set enumeration,
//!   Pareto fronts, order signatures, and order-preservation verifiers.
//! * [`kernel`] — an exact integer-programming kernel: the bounded master
//!   problem over cut rows, and the two separation oracles.
//! * [`contraction`] — the cutting-plane driver tying the kernel together.
//! * [`scaling`] — heuristic baselines (gcd scaling, scale-and-round, row
//!   scaling) and their failure modes.
//!
//! All arithmetic is exact. Objective values and signed subset sums are
//! evaluated in 128-bit integers (inputs are bounded so overflow is
//! impossible, see [`kernel`]); measures and ratios use arbitrary-precision
//! integers and rationals.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded use. Wall-clock time limits are injected
//! through the [`clock::Clock`] trait so the core stays IO- and OS-free.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod clock;
pub mod contraction;
pub mod enumeration;
pub mod error;
pub mod kernel;
pub mod measure;
pub mod model;
pub mod scaling;

mod dominance;

pub use clock::{Clock, DeadlineInterrupt, FrozenClock, Interrupt, Never};
pub use contraction::{
    contract_instance, contract_instance_with_clock, contract_objective,
    contract_objective_with_clock, contract_signed, contract_signed_with_clock, initial_rows,
    preprocess, separate, ContractionConfig, ContractionResult, ContractionStatus, Preprocessed,
    SignedMode, TracePoint,
};
pub use dominance::{dominates, ideal_point, nondominated_filter};
pub use enumeration::{
    enumerate_feasible, order_signature, pareto_front, verify_ocpset_feasible,
    verify_order_preserving, OrderSignature, ViolationKind, ViolationReport, ENUMERATION_CAP,
    OCPSET_CHECK_CAP, SIGNATURE_CAP,
};
pub use error::Error;
pub use kernel::{
    oracle_a, oracle_b, solve_master, solve_master_with, CutRow, MasterModel, MasterOutcome,
    OracleSolution, RowSense, KERNEL_VAR_CAP,
};
pub use measure::{contraction_factor, hypervolume};
pub use model::{
    CoefficientVector, ConstraintSense, Instance, LinearConstraint, ObjectiveMatrix, ParetoEntry,
    ParetoSet, Point, SignClass,
};
pub use scaling::{gcd_scale, row_scale, scale_round, scale_round_rational, ScaleReport};

// Re-exported so downstream crates can name the exact-arithmetic types in our
// public signatures without depending on the num crates directly.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
