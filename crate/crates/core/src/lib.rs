//! Exact computer algebra for power sums of Fibonacci and Lucas
//! polynomials expressed in the s-Fibopolynomial basis.
//!
//! Everything is integer-exact: polynomials carry `BigInt` coefficients and
//! every identity check is a structural equality in `Z[x]` (or `Z[x][z]`).
//! The crate is organized bottom-up:
//!
//! - [`bigpoly`]: dense polynomial arithmetic in `x` and in `z` over `x`.
//! - [`lucas_seq`]: the two polynomial sequences and their small identity
//!   toolkit (quotient sums, index reduction, derivatives).
//! - [`fibopoly`]: s-Fibopolynomials by recurrence and by exact quotient,
//!   plus the shared sign exponent.
//! - [`ztransform`]: rational forms of the power sequences and the series,
//!   expansion and recurrence checks.
//! - [`powersums`]: the power-sum decompositions, admissibility conditions,
//!   parity tables and the named-identity catalog.
//! - [`scanner`]: grid exploration comparing table predictions against
//!   exact condition polynomials.
//! - [`selftest`]: the end-to-end verification suite used by tests and the
//!   CLI alike.

pub mod bigpoly;
pub mod fibopoly;
pub mod lucas_seq;
pub mod powersums;
pub mod scanner;
pub mod selftest;
pub mod ztransform;
pub use bigpoly::{DivError, PolyX, PolyZX};
pub use fibopoly::{
    binom, binom_or_zero, fibopolynomial, fibopolynomial_quotient, sign_exponent, FibopolyError,
    FibopolyKey,
};
pub use lucas_seq::{
    check_derivative_formulas, check_index_reduction, check_quotient_identities, fib_poly,
    lucas_poly, x_squared_plus_4, IndexReductionVariant, SeqKind,
};
pub use powersums::{
    admissibility_condition, derivative_identity, direct_power_sum, expansion_coefficients,
    named_identity, table_predicts, verify_expansion, verify_expansion_failure,
    verify_unconditional_decomposition, ConditionReport, PowerSumExpansion, PowersumError,
    SignMode, SumSpec, DERIVATIVE_IDENTITY_TAGS, NAMED_IDENTITY_TAGS,
};
pub use scanner::{conjecture_evidence, scan, DirectCheck, ScanGrid, ScanReport, ScanRow};
pub use ztransform::{
    alternating_series_check, build_denominator, build_denominator_factored, build_numerator,
    expansion_check, recurrence_check, series_check, FamilyParams, RationalZ,
};
