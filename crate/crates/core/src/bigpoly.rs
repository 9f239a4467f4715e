//! Exact dense polynomial arithmetic over arbitrary-precision integers.
//!
//! Two layers: [`PolyX`] is a univariate polynomial in `x` with `BigInt`
//! coefficients, and [`PolyZX`] is a polynomial in a second variable `z`
//! whose coefficients are `PolyX` values. Everything is immutable and
//! canonicalized on construction: the zero polynomial is the empty
//! coefficient list, and a nonzero polynomial never has a zero leading
//! coefficient. Equality is therefore structural.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by exact division.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivError {
    /// The divisor does not divide the dividend exactly over the integers.
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    /// The divisor is the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Dense univariate polynomial over `BigInt`, coefficients ascending by
/// degree (`coeffs[i]` is the coefficient of `x^i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyX {
    coeffs: Vec<BigInt>,
}

impl PolyX {
    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        PolyX::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        PolyX::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        PolyX::from_coeffs(vec![c.into()])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyX { coeffs }
    }

    /// Convenience constructor from machine integers, ascending by degree.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PolyX::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        PolyX::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyX) -> PolyX {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &PolyX) -> PolyX {
        if self.is_zero() || other.is_zero() {
            return PolyX::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyX::from_coeffs(out)
    }

    pub fn mul_bigint(&self, c: &BigInt) -> PolyX {
        if c.is_zero() {
            return PolyX::zero();
        }
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_i64(&self, c: i64) -> PolyX {
        self.mul_bigint(&BigInt::from(c))
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Long division is run with integer coefficients only: if any leading
    /// term fails to divide, or a nonzero remainder survives, the divisor
    /// does not divide `self` in `Z[x]` and `NotDivisible` is returned.
    pub fn exact_div(&self, divisor: &PolyX) -> Result<PolyX, DivError> {
        if divisor.is_zero() {
            return Err(DivError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(PolyX::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Err(DivError::NotDivisible);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for step in (dd..rem.len()).rev() {
            let top = std::mem::replace(&mut rem[step], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            let q = &top / lead;
            if !(&top % lead).is_zero() {
                return Err(DivError::NotDivisible);
            }
            for (i, b) in divisor.coeffs[..dd].iter().enumerate() {
                let idx = step - dd + i;
                rem[idx] -= &q * b;
            }
            quot[step - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivError::NotDivisible);
        }
        Ok(PolyX::from_coeffs(quot))
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_int(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Formal derivative with respect to `x`.
    pub fn derivative(&self) -> PolyX {
        if self.coeffs.len() <= 1 {
            return PolyX::zero();
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i as u64 + 1))
            .collect();
        PolyX::from_coeffs(out)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, exp: u32) -> PolyX {
        let mut base = self.clone();
        let mut exp = exp;
        let mut acc = PolyX::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Ascending coefficients as decimal strings (arbitrary precision safe).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Parse the ascending decimal-string form produced by
    /// [`to_decimal_strings`](Self::to_decimal_strings).
    pub fn from_decimal_strings<S: AsRef<str>>(strings: &[S]) -> Option<PolyX> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            coeffs.push(s.as_ref().parse::<BigInt>().ok()?);
        }
        Some(PolyX::from_coeffs(coeffs))
    }
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyX({self})")
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Polynomial in `z` with `PolyX` coefficients, ascending by `z`-degree.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyZX {
    coeffs: Vec<PolyX>,
}

impl PolyZX {
    pub fn zero() -> Self {
        PolyZX { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZX {
            coeffs: vec![PolyX::one()],
        }
    }

    /// Build from ascending `z`-coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<PolyX>) -> Self {
        while coeffs.last().is_some_and(PolyX::is_zero) {
            coeffs.pop();
        }
        PolyZX { coeffs }
    }

    /// The monomial `c(x) * z^deg`.
    pub fn monomial(c: PolyX, deg: usize) -> Self {
        if c.is_zero() {
            return PolyZX::zero();
        }
        let mut coeffs = vec![PolyX::zero(); deg + 1];
        coeffs[deg] = c;
        PolyZX { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `z`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> PolyX {
        self.coeffs.get(i).cloned().unwrap_or_else(PolyX::zero)
    }

    pub fn coeffs(&self) -> &[PolyX] {
        &self.coeffs
    }

    pub fn add(&self, other: &PolyZX) -> PolyZX {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        PolyZX::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyZX) -> PolyZX {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyZX {
        PolyZX {
            coeffs: self.coeffs.iter().map(PolyX::neg).collect(),
        }
    }

    /// Exact product in `z`.
    pub fn mul(&self, other: &PolyZX) -> PolyZX {
        if self.is_zero() || other.is_zero() {
            return PolyZX::zero();
        }
        let mut out = vec![PolyX::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        PolyZX::from_coeffs(out)
    }

    /// Product with every `z`-degree above `trunc` discarded.
    pub fn series_mul_trunc(&self, other: &PolyZX, trunc: usize) -> PolyZX {
        let mut out = vec![PolyX::zero(); trunc + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > trunc || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        PolyZX::from_coeffs(out)
    }

    /// Discard every `z`-degree above `trunc`.
    pub fn truncate(&self, trunc: usize) -> PolyZX {
        PolyZX::from_coeffs(
            self.coeffs
                .iter()
                .take(trunc + 1)
                .cloned()
                .collect::<Vec<_>>(),
        )
    }

    /// Coefficient reversal for the substitution `w = 1/z`: the coefficient
    /// of `z^m` becomes the coefficient of `w^(fixed_degree - m)`. The
    /// reversal degree is pinned by the caller so that the numerator and
    /// denominator of a rational form are reversed consistently.
    ///
    /// Panics if the actual degree exceeds `fixed_degree`.
    pub fn reversed(&self, fixed_degree: usize) -> PolyZX {
        assert!(
            self.coeffs.len() <= fixed_degree + 1,
            "reversal degree {} below actual degree {:?}",
            fixed_degree,
            self.degree()
        );
        let mut out = vec![PolyX::zero(); fixed_degree + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            out[fixed_degree - m] = c.clone();
        }
        PolyZX::from_coeffs(out)
    }

    /// Substitute `z -> -z` (negate odd `z`-degree coefficients).
    pub fn substitute_neg_z(&self) -> PolyZX {
        PolyZX {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }
}

impl fmt::Debug for PolyZX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "PolyZX(0)");
        }
        write!(f, "PolyZX(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i == 1 {
                write!(f, "*z")?;
            } else if i > 1 {
                write!(f, "*z^{i}")?;
            }
        }
        write!(f, ")")
    }
}
