//! Polynomial classification and growth-bound machinery.

pub mod growth;
pub mod interval;
pub mod polynomial;

pub use growth::{
    growth_bounds_check, odd_part_decomposition, scale_invariance_check, BoundStatus, GrowthOptions, GrowthReport,
    IndexRecord, LowerTermConstant,
};
pub use polynomial::{
    classify_polynomial, dilation_monomial_test, summation_polynomial, MonomialResult, PolynomialExact,
};
