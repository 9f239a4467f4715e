//! Fibonacci and Lucas polynomials for arbitrary integer index, plus the
//! small identity toolkit built directly on the recurrences: the quotient
//! sums clearing `F_s(x)`, the index-reduction family, and the closed
//! derivative formulas.
//!
//! Both sequences satisfy `a_{n+1} = x a_n + a_{n-1}` with seeds
//! `F_0 = 0, F_1 = 1` and `L_0 = 2, L_1 = x`. Negative indices follow
//! `F_{-n} = (-1)^{n+1} F_n` and `L_{-n} = (-1)^n L_n`, the only extension
//! compatible with the recurrence in both directions.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::bigpoly::PolyX;

/// Which of the two polynomial sequences is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Fibonacci,
    Lucas,
}

impl SeqKind {
    /// Sequence value at a signed index.
    pub fn poly(self, n: i64) -> PolyX {
        match self {
            SeqKind::Fibonacci => fib_poly(n),
            SeqKind::Lucas => lucas_poly(n),
        }
    }
}

/// The three shapes of the index-reduction identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexReductionVariant {
    /// `F_M F_N - F_{M+K} F_{N-K} = (-1)^{N-K} F_{M+K-N} F_K`
    FF,
    /// `F_M L_N - F_{M+K} L_{N-K} = (-1)^{N-K+1} L_{M+K-N} F_K`
    FL,
    /// `(x^2+4) F_M F_N - L_{M+K} L_{N-K} = (-1)^{N-K+1} L_{M+K-N} L_K`
    LL,
}

/// The discriminant polynomial `x^2 + 4` of the defining recurrence.
pub fn x_squared_plus_4() -> PolyX {
    PolyX::from_i64s(&[4, 0, 1])
}

fn fib_cache() -> &'static Mutex<Vec<PolyX>> {
    static CACHE: OnceLock<Mutex<Vec<PolyX>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![PolyX::zero(), PolyX::one()]))
}

fn lucas_cache() -> &'static Mutex<Vec<PolyX>> {
    static CACHE: OnceLock<Mutex<Vec<PolyX>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![PolyX::constant(2), PolyX::x()]))
}

fn seq_nonneg(cache: &Mutex<Vec<PolyX>>, n: usize) -> PolyX {
    let mut table = cache.lock().unwrap();
    let x = PolyX::x();
    while table.len() <= n {
        let next = x.mul(&table[table.len() - 1]).add(&table[table.len() - 2]);
        table.push(next);
    }
    table[n].clone()
}

/// Fibonacci polynomial `F_n(x)` for any signed index.
pub fn fib_poly(n: i64) -> PolyX {
    let p = seq_nonneg(fib_cache(), n.unsigned_abs() as usize);
    // F_{-n} = (-1)^{n+1} F_n: negate exactly when |n| is even
    if n < 0 && n % 2 == 0 {
        p.neg()
    } else {
        p
    }
}

/// Lucas polynomial `L_n(x)` for any signed index.
pub fn lucas_poly(n: i64) -> PolyX {
    let p = seq_nonneg(lucas_cache(), n.unsigned_abs() as usize);
    // L_{-n} = (-1)^n L_n: negate exactly when |n| is odd
    if n < 0 && n % 2 != 0 {
        p.neg()
    } else {
        p
    }
}

fn neg_if_odd(p: PolyX, exponent: i64) -> PolyX {
    if exponent.rem_euclid(2) == 1 {
        p.neg()
    } else {
        p
    }
}

/// Verify the pair of quotient identities expressing `F_{(2p-1)s}/F_s` and
/// `F_{2ps}/F_s` as signed sums of Lucas polynomials, with `F_s` cleared so
/// the comparison stays in `Z[x]`.
pub fn check_quotient_identities(s: u32, p: u32) -> bool {
    assert!(s >= 1 && p >= 1);
    let (s, p) = (i64::from(s), i64::from(p));
    let f_s = fib_poly(s);

    // F_{(2p-1)s} = F_s * (sum_{k=0}^{p-1} (-1)^{sk} L_{2(p-k-1)s} - (-1)^{s(p-1)})
    let mut sum_odd = PolyX::zero();
    for k in 0..p {
        sum_odd = sum_odd.add(&neg_if_odd(lucas_poly(2 * (p - k - 1) * s), s * k));
    }
    sum_odd = sum_odd.sub(&neg_if_odd(PolyX::one(), s * (p - 1)));
    if fib_poly((2 * p - 1) * s) != f_s.mul(&sum_odd) {
        return false;
    }

    // F_{2ps} = F_s * sum_{k=0}^{p-1} (-1)^{sk} L_{(2p-2k-1)s}
    let mut sum_even = PolyX::zero();
    for k in 0..p {
        sum_even = sum_even.add(&neg_if_odd(lucas_poly((2 * p - 2 * k - 1) * s), s * k));
    }
    fib_poly(2 * p * s) == f_s.mul(&sum_even)
}

/// Verify one variant of the index-reduction identity at signed indices.
pub fn check_index_reduction(m: i64, n: i64, k: i64, variant: IndexReductionVariant) -> bool {
    match variant {
        IndexReductionVariant::FF => {
            let lhs = fib_poly(m)
                .mul(&fib_poly(n))
                .sub(&fib_poly(m + k).mul(&fib_poly(n - k)));
            let rhs = neg_if_odd(fib_poly(m + k - n).mul(&fib_poly(k)), n - k);
            lhs == rhs
        }
        IndexReductionVariant::FL => {
            let lhs = fib_poly(m)
                .mul(&lucas_poly(n))
                .sub(&fib_poly(m + k).mul(&lucas_poly(n - k)));
            let rhs = neg_if_odd(lucas_poly(m + k - n).mul(&fib_poly(k)), n - k + 1);
            lhs == rhs
        }
        IndexReductionVariant::LL => {
            let lhs = x_squared_plus_4()
                .mul(&fib_poly(m))
                .mul(&fib_poly(n))
                .sub(&lucas_poly(m + k).mul(&lucas_poly(n - k)));
            let rhs = neg_if_odd(lucas_poly(m + k - n).mul(&lucas_poly(k)), n - k + 1);
            lhs == rhs
        }
    }
}

/// Verify the closed derivative formulas at index `n`:
/// `(x^2+4) F_n' = n L_n - x F_n` and `L_n' = n F_n`.
///
/// The first is checked in cleared form, so the divisibility of
/// `n L_n - x F_n` by `x^2 + 4` is part of the assertion.
pub fn check_derivative_formulas(n: i64) -> bool {
    let f = fib_poly(n);
    let l = lucas_poly(n);
    let n_big = BigInt::from(n);

    let fib_side = x_squared_plus_4().mul(&f.derivative());
    let fib_closed = l.mul_bigint(&n_big).sub(&PolyX::x().mul(&f));
    if fib_side != fib_closed {
        return false;
    }
    l.derivative() == f.mul_bigint(&n_big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn fib_seeds_and_small_values() {
        assert_eq!(fib_poly(0), PolyX::zero());
        assert_eq!(fib_poly(1), PolyX::one());
        assert_eq!(fib_poly(2), PolyX::x());
        // F_5 = x^4 + 3x^2 + 1 by four recurrence steps
        assert_eq!(fib_poly(5), PolyX::from_i64s(&[1, 0, 3, 0, 1]));
        // F_{-3} = F_3 = x^2 + 1
        assert_eq!(fib_poly(-3), PolyX::from_i64s(&[1, 0, 1]));
        assert_eq!(fib_poly(-4), fib_poly(4).neg());
    }

    #[test]
    fn lucas_seeds_and_small_values() {
        assert_eq!(lucas_poly(0), PolyX::constant(2));
        assert_eq!(lucas_poly(1), PolyX::x());
        // L_3 = x^3 + 3x
        assert_eq!(lucas_poly(3), PolyX::from_i64s(&[0, 3, 0, 1]));
        // L_{-2} = L_2 = x^2 + 2
        assert_eq!(lucas_poly(-2), PolyX::from_i64s(&[2, 0, 1]));
        assert_eq!(lucas_poly(-3), lucas_poly(3).neg());
    }

    #[test]
    fn fib_at_one_is_fibonacci_numbers() {
        let one = BigInt::from(1);
        let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
        for n in 0..=40 {
            assert_eq!(fib_poly(n).eval_int(&one), a, "n = {n}");
            let next = &a + &b;
            a = b;
            b = next;
        }
    }

    #[test]
    fn binet_square_relation() {
        // L_n^2 - (x^2+4) F_n^2 = 4 (-1)^n anchors the signed-index convention
        let disc = x_squared_plus_4();
        for n in -40..=40 {
            let lhs = lucas_poly(n)
                .pow(2)
                .sub(&disc.mul(&fib_poly(n).pow(2)));
            let rhs = if n.rem_euclid(2) == 0 {
                PolyX::constant(4)
            } else {
                PolyX::constant(-4)
            };
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn quotient_identities_hold() {
        // s=1, p=1: F_1 = F_1 (L_0 - 1) and F_2 = F_1 L_1
        assert!(check_quotient_identities(1, 1));
        assert!(check_quotient_identities(2, 2));
        assert!(check_quotient_identities(3, 3));
        for s in 1..=4 {
            for p in 1..=5 {
                assert!(check_quotient_identities(s, p), "s={s} p={p}");
            }
        }
    }

    #[test]
    fn index_reduction_examples() {
        // the specialization used to derive the fibopolynomial recurrence
        let (s, n, k) = (2i64, 3i64, 1i64);
        assert!(check_index_reduction(
            s * n,
            1,
            -s * k + 1,
            IndexReductionVariant::FF
        ));
        assert!(check_index_reduction(0, 0, 0, IndexReductionVariant::FF));
        assert!(check_index_reduction(3, 2, 1, IndexReductionVariant::LL));
    }

    #[test]
    fn index_reduction_grid() {
        for m in -4..=4 {
            for n in -4..=4 {
                for k in -4..=4 {
                    for v in [
                        IndexReductionVariant::FF,
                        IndexReductionVariant::FL,
                        IndexReductionVariant::LL,
                    ] {
                        assert!(check_index_reduction(m, n, k, v), "m={m} n={n} k={k} {v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_formulas_hold() {
        assert!(check_derivative_formulas(0));
        assert!(check_derivative_formulas(5));
        assert!(check_derivative_formulas(-4));
        for n in -30..=30 {
            assert!(check_derivative_formulas(n), "n = {n}");
        }
    }
}
