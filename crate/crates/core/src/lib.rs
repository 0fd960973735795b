//! Numerical library for Jackson's second and third q-Bessel functions and the
//! geometric properties of their normalized power series on the unit disk.
//!
//! The crate has two halves that deliberately check each other:
//!
//! * **Closed forms**: q-Pochhammer products, the normalized series
//!   coefficients, positivity conditions, the starlike/convex/P0 coefficient
//!   bounds and their critical-order thresholds, Hardy-space classification,
//!   and Hadamard-convolution certificates. See [`qseries`], [`qbessel`],
//!   [`geomclass`], [`hardy`].
//! * **Brute force**: disk sampling of the defining functionals
//!   (Re zf'/f, Re(1 + zf''/f'), Re f/z), integral means, and partial-sum
//!   cross-checks that verify every certificate numerically. See [`oracle`]
//!   and [`suite`].
//!
//! All certificates are one-directional: a `holds = true` verdict is backed by
//! a sufficient condition, while `false` (or `Unclassified`) only means the
//! condition failed, never that membership fails.

// frozen oracle constants keep their 20-digit provenance even where f64
// truncates them
#![allow(clippy::excessive_precision)]
// domain guards are written as !(x > lo && x < hi) on purpose: NaN must fail
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod domain;
pub mod error;
mod gamma;
pub mod geomclass;
pub mod hardy;
pub mod oracle;
pub mod qbessel;
pub mod qseries;
pub mod series;
pub mod suite;
pub mod sums;

pub use bessel::classical_bessel_j;
pub use domain::{QDomain, Tolerance};
pub use error::Error;
pub use geomclass::{
    alpha_threshold, corollary_flags, gamma_combine, kappa_closed_bound, kappa_direct,
    p0_alpha_bound, p0_condition, positivity_condition, AlphaThreshold, ConditionId,
    ConditionReport, GeomProperty,
};
pub use hardy::{
    bounded_convolution_verdict, convolution_r0_verdict, hadamard_sup_bound, hardy_classify,
    is_exceptional_form, macgregor_check, ConvolutionCertificate, HardyBasis, HardyMembership,
    R0ConvolutionCertificate,
};
pub use oracle::{
    crosscheck_sufficient_vs_sampled, integral_mean, min_re_functional, CertProperty,
    CrossCheckReport, DiskGrid, Functional,
};
pub use qbessel::{
    coeff_h, eval_jackson, limit_relation_error, majorant_ratio, series_h, CertifiedValue,
    FamilyKind,
};
pub use qseries::{c_nu, qpochhammer, qpochhammer_inf, InfiniteProduct};
pub use series::{hadamard, CoefficientSeries, TailBound};
pub use sums::{geom_sum_closed, GeomSumKind};

/// Complex double used throughout the crate.
pub type Complex64 = num_complex::Complex64;
