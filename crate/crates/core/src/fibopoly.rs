//! s-Fibopolynomials: the generalized binomials built from the subsequence
//! `F_{s*m}(x)`.
//!
//! Two independent routes are implemented. The normative one is the
//! addition-formula recurrence
//! `binom(n,k) = F_{s(n-k)+1} binom(n-1,k-1) + F_{sk-1} binom(n-1,k)`
//! with boundary `binom(n,0) = binom(n,n) = 1`, which never divides and so
//! proves polynomiality constructively. The second route is the raw product
//! quotient `F_{sn} ... F_{s(n-k+1)} / (F_s ... F_{ks})` through exact
//! division; it exists as an oracle against the first.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::bigpoly::PolyX;
use crate::lucas_seq::fib_poly;

/// Index triple of an s-Fibopolynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FibopolyKey {
    pub n: u32,
    pub k: u32,
    pub s: u32,
}

impl FibopolyKey {
    pub fn new(n: u32, k: u32, s: u32) -> Result<Self, FibopolyError> {
        if k > n || s == 0 {
            return Err(FibopolyError::InvalidIndex { n, k, s });
        }
        Ok(FibopolyKey { n, k, s })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibopolyError {
    #[error("invalid fibopolynomial index: n={n}, k={k}, s={s} (need k <= n and s >= 1)")]
    InvalidIndex { n: u32, k: u32, s: u32 },
    /// The product quotient failed to divide exactly. This cannot happen
    /// for valid indices; surfacing it keeps the oracle honest.
    #[error("fibopolynomial product quotient not exact at n={n}, k={k}, s={s}")]
    NotDivisible { n: u32, k: u32, s: u32 },
}

// Per-s triangles of rows; row n holds binom(n, 0..=n).
fn triangle_cache() -> &'static Mutex<HashMap<u32, Vec<Vec<PolyX>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Vec<PolyX>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// s-Fibopolynomial by the recurrence route. Memoized per `s` over the
/// `(n, k)` triangle.
pub fn fibopolynomial(key: FibopolyKey) -> PolyX {
    let FibopolyKey { n, k, s } = key;
    let mut cache = triangle_cache().lock().unwrap();
    let triangle = cache.entry(s).or_insert_with(|| vec![vec![PolyX::one()]]);
    while triangle.len() <= n as usize {
        let prev = triangle.last().unwrap();
        let nn = triangle.len() as i64;
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(PolyX::one());
        for kk in 1..nn {
            let s64 = i64::from(s);
            let left = fib_poly(s64 * (nn - kk) + 1).mul(&prev[(kk - 1) as usize]);
            let right = fib_poly(s64 * kk - 1).mul(&prev[kk as usize]);
            row.push(left.add(&right));
        }
        row.push(PolyX::one());
        triangle.push(row);
    }
    triangle[n as usize][k as usize].clone()
}

/// Same value by the product-quotient route, via exact division.
pub fn fibopolynomial_quotient(key: FibopolyKey) -> Result<PolyX, FibopolyError> {
    let FibopolyKey { n, k, s } = key;
    if k == 0 || k == n {
        return Ok(PolyX::one());
    }
    let s64 = i64::from(s);
    let mut numerator = PolyX::one();
    for m in (i64::from(n) - i64::from(k) + 1)..=i64::from(n) {
        numerator = numerator.mul(&fib_poly(s64 * m));
    }
    let mut denominator = PolyX::one();
    for m in 1..=i64::from(k) {
        denominator = denominator.mul(&fib_poly(s64 * m));
    }
    numerator
        .exact_div(&denominator)
        .map_err(|_| FibopolyError::NotDivisible { n, k, s })
}

/// Convenience wrapper validating the index triple.
pub fn binom(n: u32, k: u32, s: u32) -> Result<PolyX, FibopolyError> {
    Ok(fibopolynomial(FibopolyKey::new(n, k, s)?))
}

/// `binom(top, bottom)` with the usual convention that the value is zero
/// when `bottom > top`. Used by the expansion sums, where shifted top
/// indices routinely dip below the bottom one.
pub fn binom_or_zero(top: u32, bottom: u32, s: u32) -> PolyX {
    if bottom > top {
        PolyX::zero()
    } else {
        fibopolynomial(FibopolyKey { n: top, k: bottom, s })
    }
}

/// Parity (0 or 1) of `(s*j + 2(s+1)) * (j+1) / 2`, the exponent attached
/// to every signed term of the rational forms and expansion coefficients.
/// The product is always even, so the halving is exact.
pub fn sign_exponent(s: u32, j: u32) -> u8 {
    let s = u128::from(s);
    let j = u128::from(j);
    let product = (s * j + 2 * (s + 1)) * (j + 1);
    debug_assert_eq!(product % 2, 0);
    ((product / 2) % 2) as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn key(n: u32, k: u32, s: u32) -> FibopolyKey {
        FibopolyKey::new(n, k, s).unwrap()
    }

    #[test]
    fn boundaries_are_one() {
        for s in 1..=3 {
            for n in 0..=6 {
                assert_eq!(fibopolynomial(key(n, 0, s)), PolyX::one());
                assert_eq!(fibopolynomial(key(n, n, s)), PolyX::one());
                assert_eq!(fibopolynomial_quotient(key(n, n, s)), Ok(PolyX::one()));
            }
        }
    }

    #[test]
    fn invalid_index_rejected() {
        assert_eq!(
            FibopolyKey::new(3, 4, 1),
            Err(FibopolyError::InvalidIndex { n: 3, k: 4, s: 1 })
        );
        assert_eq!(
            FibopolyKey::new(3, 1, 0),
            Err(FibopolyError::InvalidIndex { n: 3, k: 1, s: 0 })
        );
    }

    #[test]
    fn fibonomial_value_at_one() {
        // binom(5,2) at s=1, x=1 is the Fibonomial F_5 F_4 / (F_1 F_2) = 15
        let p = fibopolynomial(key(5, 2, 1));
        assert_eq!(p.eval_int(&BigInt::from(1)), BigInt::from(15));
    }

    #[test]
    fn degree_law_spot_checks() {
        // deg binom(n,k) = s k (n-k)
        assert_eq!(fibopolynomial(key(4, 2, 2)).degree(), Some(8));
        assert_eq!(fibopolynomial(key(6, 3, 1)).degree(), Some(9));
        assert_eq!(fibopolynomial(key(5, 1, 3)).degree(), Some(12));
    }

    #[test]
    fn quotient_route_examples() {
        // binom(3,1) at s=2 is F_6/F_2 = x^4 + 4x^2 + 3
        assert_eq!(
            fibopolynomial_quotient(key(3, 1, 2)),
            Ok(PolyX::from_i64s(&[3, 0, 4, 0, 1]))
        );
        // binom(5,2) at s=1 is (F_5 F_4)/(F_1 F_2)
        let expected = PolyX::from_i64s(&[1, 0, 3, 0, 1])
            .mul(&PolyX::from_i64s(&[0, 2, 0, 1]))
            .exact_div(&PolyX::x())
            .unwrap();
        assert_eq!(fibopolynomial_quotient(key(5, 2, 1)), Ok(expected.clone()));
        assert_eq!(fibopolynomial(key(5, 2, 1)), expected);
    }

    #[test]
    fn routes_agree_on_grid() {
        for s in 1..=4 {
            for n in 0..=12 {
                for k in 0..=n {
                    let by_recurrence = fibopolynomial(key(n, k, s));
                    let by_quotient = fibopolynomial_quotient(key(n, k, s)).unwrap();
                    assert_eq!(by_recurrence, by_quotient, "n={n} k={k} s={s}");
                    // symmetry and the degree law on the same grid
                    assert_eq!(by_recurrence, fibopolynomial(key(n, n - k, s)));
                    assert_eq!(
                        by_recurrence.degree(),
                        Some((s * k * (n - k)) as usize),
                        "n={n} k={k} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn hoggatt_fibonomial_rows() {
        let expected: [&[i64]; 5] = [&[1], &[1, 1], &[1, 1, 1], &[1, 2, 2, 1], &[1, 3, 6, 3, 1]];
        let one = BigInt::from(1);
        for (n, row) in expected.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                let p = fibopolynomial(key(n as u32, k as u32, 1));
                assert_eq!(p.eval_int(&one), BigInt::from(v), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binom_or_zero_convention() {
        assert_eq!(binom_or_zero(2, 4, 1), PolyX::zero());
        assert_eq!(binom_or_zero(4, 2, 1), fibopolynomial(key(4, 2, 1)));
    }

    #[test]
    fn sign_exponent_examples() {
        // j=0 reduces to the parity of s+1
        for s in 1..=6 {
            assert_eq!(sign_exponent(s, 0), if s % 2 == 1 { 0 } else { 1 });
        }
        assert_eq!(sign_exponent(1, 1), 1); // (1+4)*2/2 = 5
        assert_eq!(sign_exponent(2, 3), 0); // (6+6)*4/2 = 24
    }
}
