//! Power sums of Fibonacci and Lucas polynomials in the s-Fibopolynomial
//! basis: the proposed linear combinations, the exact admissibility
//! conditions that decide them, the parity tables predicting when the
//! conditions vanish, and a catalog of printed identities (including the
//! derivative family) verified in cleared-denominator form.
//!
//! The central objects are the four sum families over `n = 0..=q`
//! (plain, alternating, and the two parity-unified weights `(-1)^(sn)` and
//! `(-1)^((s+1)n)`, which reduce to plain or alternating by the parity of
//! `s`). Each family is compared against a linear combination of
//! `binom(q+m, tk)` for `m = 1..=tk`, whose coefficients are q-independent
//! base polynomials; the alternating families additionally carry a
//! `(-1)^(q+m)` twist per term.

use num_bigint::BigInt;
use thiserror::Error;

use crate::bigpoly::PolyX;
use crate::fibopoly::{binom_or_zero, fibopolynomial, sign_exponent, FibopolyKey};
use crate::lucas_seq::{fib_poly, lucas_poly, x_squared_plus_4, SeqKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowersumError {
    #[error("unknown identity tag `{0}`")]
    UnknownIdentity(String),
    #[error("invalid sum spec: t={t}, k={k}, s={s} (all must be >= 1)")]
    InvalidSpec { t: u32, k: u32, s: u32 },
}

/// Sign weight attached to the summand at index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignMode {
    /// Weight 1.
    Plain,
    /// Weight `(-1)^n`.
    Alternating,
    /// Weight `(-1)^(sn)`: plain for even `s`, alternating for odd `s`.
    SPower,
    /// Weight `(-1)^((s+1)n)`: plain for odd `s`, alternating for even `s`.
    SPlusOnePower,
}

/// One sum family: `sum_{n=0}^{q} w_n A_{tsn}^k(x)` with `A` and `w` chosen
/// by `kind` and `sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumSpec {
    pub t: u32,
    pub k: u32,
    pub s: u32,
    pub kind: SeqKind,
    pub sign: SignMode,
}

impl SumSpec {
    pub fn new(t: u32, k: u32, s: u32, kind: SeqKind, sign: SignMode) -> Result<Self, PowersumError> {
        if t == 0 || k == 0 || s == 0 {
            return Err(PowersumError::InvalidSpec { t, k, s });
        }
        Ok(SumSpec { t, k, s, kind, sign })
    }

    pub fn tk(&self) -> u32 {
        self.t * self.k
    }

    /// Collapse the parity-unified modes to `Plain` or `Alternating` by the
    /// parity of `s`; the summand weights coincide term by term.
    pub fn resolved(&self) -> SumSpec {
        let sign = match self.sign {
            SignMode::Plain | SignMode::Alternating => self.sign,
            SignMode::SPower => {
                if self.s % 2 == 0 {
                    SignMode::Plain
                } else {
                    SignMode::Alternating
                }
            }
            SignMode::SPlusOnePower => {
                if self.s % 2 == 1 {
                    SignMode::Plain
                } else {
                    SignMode::Alternating
                }
            }
        };
        SumSpec { sign, ..*self }
    }

    /// True when the weight of summand `n` is `-1`.
    fn weight_is_negative(&self, n: u32) -> bool {
        let n = u64::from(n);
        let s = u64::from(self.s);
        let exponent = match self.sign {
            SignMode::Plain => 0,
            SignMode::Alternating => n,
            SignMode::SPower => s * n,
            SignMode::SPlusOnePower => (s + 1) * n,
        };
        exponent % 2 == 1
    }
}

/// The q-independent part of a proposed expansion: `base_coeffs[m-1]` is
/// attached to `binom(q+m, tk)`, and when `q_parity_twist` is set each
/// term additionally carries `(-1)^(q+m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumExpansion {
    pub spec: SumSpec,
    base_coeffs: Vec<PolyX>,
    pub q_parity_twist: bool,
}

impl PowerSumExpansion {
    /// Coefficient polynomial for `m` in `1..=tk`.
    pub fn base_coeff(&self, m: u32) -> &PolyX {
        &self.base_coeffs[(m - 1) as usize]
    }

    pub fn base_coeffs(&self) -> &[PolyX] {
        &self.base_coeffs
    }

    /// Assemble the right-hand side at a concrete `q`.
    pub fn assemble(&self, q: u32) -> PolyX {
        let tk = self.spec.tk();
        let s = self.spec.s;
        let mut acc = PolyX::zero();
        for m in 1..=tk {
            let mut term = self.base_coeffs[(m - 1) as usize].mul(&binom_or_zero(q + m, tk, s));
            if self.q_parity_twist && (q + m) % 2 == 1 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// The admissibility condition attached to a spec: the expansion holds for
/// every `q` exactly when `condition_poly` is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub spec: SumSpec,
    pub condition_poly: PolyX,
    pub is_zero: bool,
    pub table_predicts: bool,
}

fn neg_if(p: PolyX, negative: bool) -> PolyX {
    if negative {
        p.neg()
    } else {
        p
    }
}

/// Inner sums `V_i = sum_{j=0}^{i} (-1)^(eps(s,j)) binom(tk+1,j) A_{ts(i-j)}^k`
/// for `i = 0..=tk`; every coefficient, condition and trailing term is a
/// signed partial sum of these.
fn inner_sums(spec: &SumSpec) -> Vec<PolyX> {
    let tk = spec.tk();
    let (t, s) = (i64::from(spec.t), i64::from(spec.s));
    let powers: Vec<PolyX> = (0..=tk)
        .map(|r| spec.kind.poly(t * s * i64::from(r)).pow(spec.k))
        .collect();
    let binoms: Vec<PolyX> = (0..=tk)
        .map(|j| fibopolynomial(FibopolyKey { n: tk + 1, k: j, s: spec.s }))
        .collect();
    (0..=tk)
        .map(|i| {
            let mut acc = PolyX::zero();
            for j in 0..=i {
                acc = acc.add(&neg_if(
                    binoms[j as usize].mul(&powers[(i - j) as usize]),
                    sign_exponent(spec.s, j) == 1,
                ));
            }
            acc
        })
        .collect()
}

/// Coefficient polynomials of the proposed expansion. The parity-unified
/// modes are resolved first; the stored spec keeps the caller's sign mode.
pub fn expansion_coefficients(spec: &SumSpec) -> PowerSumExpansion {
    let resolved = spec.resolved();
    let tk = resolved.tk();
    let alternating = resolved.sign == SignMode::Alternating;
    let v = inner_sums(&resolved);
    let mut base_coeffs = Vec::with_capacity(tk as usize);
    for m in 1..=tk {
        let mut acc = PolyX::zero();
        for i in 0..=(tk - m) {
            acc = acc.add(&neg_if(v[i as usize].clone(), alternating && (i + tk) % 2 == 1));
        }
        base_coeffs.push(neg_if(acc, resolved.s % 2 == 0));
    }
    PowerSumExpansion {
        spec: *spec,
        base_coeffs,
        q_parity_twist: alternating,
    }
}

/// The exact condition polynomial whose vanishing is equivalent to the
/// expansion holding for all `q`, plus what the parity tables predict.
pub fn admissibility_condition(spec: &SumSpec) -> ConditionReport {
    let resolved = spec.resolved();
    let tk = resolved.tk();
    let alternating = resolved.sign == SignMode::Alternating;
    let v = inner_sums(&resolved);
    let mut condition_poly = PolyX::zero();
    for i in 0..=tk {
        condition_poly =
            condition_poly.add(&neg_if(v[i as usize].clone(), alternating && i % 2 == 1));
    }
    let is_zero = condition_poly.is_zero();
    ConditionReport {
        spec: *spec,
        condition_poly,
        is_zero,
        table_predicts: table_predicts(spec),
    }
}

/// Pure parity arithmetic: does some sufficient-condition row apply?
///
/// Plain Fibonacci rows: (t even, k odd, s even), (t odd, k = 2 mod 4,
/// s odd), (t = 0 mod 4, k odd, any s). Plain Lucas rows: (t even, k odd,
/// s even), (t = 0 mod 4, k odd, any s). Alternating Fibonacci rows:
/// (k = 0 mod 4), (k even, s even), (t = 2 mod 4, s odd), (t even,
/// k even). Alternating Lucas row: (s odd, k odd, t = 2 mod 4).
pub fn table_predicts(spec: &SumSpec) -> bool {
    let SumSpec { t, k, s, kind, sign } = spec.resolved();
    match (kind, sign) {
        (SeqKind::Fibonacci, SignMode::Plain) => {
            (t % 2 == 0 && k % 2 == 1 && s % 2 == 0)
                || (t % 2 == 1 && k % 4 == 2 && s % 2 == 1)
                || (t % 4 == 0 && k % 2 == 1)
        }
        (SeqKind::Lucas, SignMode::Plain) => {
            (t % 2 == 0 && k % 2 == 1 && s % 2 == 0) || (t % 4 == 0 && k % 2 == 1)
        }
        (SeqKind::Fibonacci, SignMode::Alternating) => {
            (k % 4 == 0)
                || (k % 2 == 0 && s % 2 == 0)
                || (t % 4 == 2 && s % 2 == 1)
                || (t % 2 == 0 && k % 2 == 0)
        }
        (SeqKind::Lucas, SignMode::Alternating) => s % 2 == 1 && k % 2 == 1 && t % 4 == 2,
        _ => unreachable!("resolved() leaves only Plain and Alternating"),
    }
}

/// Left-hand side by brute force: `sum_{n=0}^{q} w_n A_{tsn}^k`.
pub fn direct_power_sum(spec: &SumSpec, q: u32) -> PolyX {
    let (t, s) = (i64::from(spec.t), i64::from(spec.s));
    let mut acc = PolyX::zero();
    for n in 0..=q {
        let value = spec.kind.poly(t * s * i64::from(n)).pow(spec.k);
        acc = acc.add(&neg_if(value, spec.weight_is_negative(n)));
    }
    acc
}

/// First `q` at which the direct sum and the assembled expansion differ,
/// together with the difference, or `None` when all `q = 0..=q_max` agree.
pub fn verify_expansion_failure(spec: &SumSpec, q_max: u32) -> Option<(u32, PolyX)> {
    let resolved = spec.resolved();
    let expansion = expansion_coefficients(&resolved);
    for q in 0..=q_max {
        let lhs = direct_power_sum(&resolved, q);
        let rhs = expansion.assemble(q);
        if lhs != rhs {
            return Some((q, lhs.sub(&rhs)));
        }
    }
    None
}

/// Does the proposed expansion match the direct sum for all `q = 0..=q_max`?
pub fn verify_expansion(spec: &SumSpec, q_max: u32) -> bool {
    verify_expansion_failure(spec, q_max).is_none()
}

/// Sum of `binom(n, tk)` over `n = 0..=q`, optionally weighted by `(-1)^n`.
fn binom_tail_sum(q: u32, tk: u32, s: u32, alternating: bool) -> PolyX {
    let mut acc = PolyX::zero();
    for n in 0..=q {
        acc = acc.add(&neg_if(binom_or_zero(n, tk, s), alternating && n % 2 == 1));
    }
    acc
}

/// The decomposition that holds with no condition on the parameters: the
/// expansion terms plus the trailing condition-weighted sum of
/// `binom(n, tk)` over `n = 0..=q` (sign-weighted in the alternating case).
pub fn verify_unconditional_decomposition(spec: &SumSpec, q_max: u32) -> bool {
    let resolved = spec.resolved();
    let tk = resolved.tk();
    let alternating = resolved.sign == SignMode::Alternating;
    let expansion = expansion_coefficients(&resolved);
    let condition = admissibility_condition(&resolved);
    // trailing coefficient: (-1)^(s+1) times the condition, with an extra
    // (-1)^(tk) in the alternating case where the condition carries
    // exponent i rather than i + tk
    let mut trailing = neg_if(condition.condition_poly.clone(), resolved.s % 2 == 0);
    if alternating && tk % 2 == 1 {
        trailing = trailing.neg();
    }
    for q in 0..=q_max {
        let lhs = direct_power_sum(&resolved, q);
        let rhs = expansion
            .assemble(q)
            .add(&trailing.mul(&binom_tail_sum(q, tk, resolved.s, alternating)));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Tags accepted by [`named_identity`].
pub const NAMED_IDENTITY_TAGS: &[&str] = &[
    "1.15", "3.18", "3.31", "4.19", "4.20", "4.21", "4.24", "4.27", "4.36", "4.37", "4.43",
    "4.44", "4.45",
];

/// Tags accepted by [`derivative_identity`].
pub const DERIVATIVE_IDENTITY_TAGS: &[&str] = &["5.4", "5.5", "5.39"];

/// Representative `(t, k)` pairs for the corollary classes: `t` odd with
/// `k = 2 mod 4`, and `t = 2 mod 4` with `k` odd.
const T_ODD_K_2MOD4_REPS: &[(u32, u32)] = &[(1, 2), (1, 6), (3, 2)];
const T_2MOD4_K_ODD_REPS: &[(u32, u32)] = &[(2, 1), (2, 3), (6, 1)];

fn spec(t: u32, k: u32, s: u32, kind: SeqKind, sign: SignMode) -> SumSpec {
    SumSpec::new(t, k, s, kind, sign).expect("catalog specs are valid")
}

/// Verify a printed identity from the catalog for `q = 0..=q_max`.
/// Identities stated with divisions are checked after clearing
/// denominators, so every comparison is exact in `Z[x]`.
pub fn named_identity(tag: &str, s: u32, q_max: u32) -> Result<bool, PowersumError> {
    let s64 = i64::from(s);
    let odd = |e: i64| e.rem_euclid(2) == 1;
    let ok = match tag {
        // sum of squared Fibonacci numbers as a product and as a Fibonomial,
        // an integer identity at x = 1
        "1.15" => {
            let one = BigInt::from(1);
            (0..=q_max).all(|q| {
                let direct: BigInt = (0..=q)
                    .map(|n| {
                        let v = fib_poly(i64::from(n)).eval_int(&one);
                        &v * &v
                    })
                    .sum();
                let product = fib_poly(i64::from(q)).eval_int(&one)
                    * fib_poly(i64::from(q) + 1).eval_int(&one);
                let fibonomial = binom_or_zero(q + 1, 2, 1).eval_int(&one);
                direct == product && direct == fibonomial
            })
        }
        // plain sum of F_{4sn} as a three-term combination scaled by F_{4s}
        "3.18" => {
            let scale = fib_poly(4 * s64);
            let middle = neg_if(lucas_poly(2 * s64), s % 2 == 0);
            (0..=q_max).all(|q| {
                let lhs = direct_power_sum(&spec(4, 1, s, SeqKind::Fibonacci, SignMode::Plain), q);
                let combo = binom_or_zero(q + 1, 4, s)
                    .add(&middle.mul(&binom_or_zero(q + 2, 4, s)))
                    .add(&binom_or_zero(q + 3, 4, s));
                lhs == scale.mul(&combo)
            })
        }
        // plain sum of L_{4sn} with all four coefficients explicit
        "3.31" => {
            let l2 = lucas_poly(2 * s64);
            let l4 = lucas_poly(4 * s64);
            let l6 = lucas_poly(6 * s64);
            let c4 = PolyX::constant(2);
            let c3 = l4.neg().add(&neg_if(l2.mul_i64(2), s % 2 == 0));
            let c2 = neg_if(
                l6.add(&l2).add(&neg_if(PolyX::constant(2), s % 2 == 1)),
                s % 2 == 1,
            );
            let c1 = l4.neg();
            (0..=q_max).all(|q| {
                let lhs = direct_power_sum(&spec(4, 1, s, SeqKind::Lucas, SignMode::Plain), q);
                let rhs = c4
                    .mul(&binom_or_zero(q + 4, 4, s))
                    .add(&c3.mul(&binom_or_zero(q + 3, 4, s)))
                    .add(&c2.mul(&binom_or_zero(q + 2, 4, s)))
                    .add(&c1.mul(&binom_or_zero(q + 1, 4, s)));
                lhs == rhs
            })
        }
        // corollary families on their class representatives
        "4.19" => T_ODD_K_2MOD4_REPS.iter().all(|&(t, k)| {
            verify_expansion(&spec(t, k, s, SeqKind::Fibonacci, SignMode::SPlusOnePower), q_max)
        }),
        "4.20" => T_2MOD4_K_ODD_REPS.iter().all(|&(t, k)| {
            verify_expansion(&spec(t, k, s, SeqKind::Fibonacci, SignMode::SPower), q_max)
        }),
        "4.43" => T_2MOD4_K_ODD_REPS.iter().all(|&(t, k)| {
            verify_expansion(&spec(t, k, s, SeqKind::Lucas, SignMode::SPower), q_max)
        }),
        // sum of (-1)^((s+1)(n+q)) F_{sn}^2 collapses to F_s^2 binom(q+1,2)
        "4.21" => (0..=q_max).all(|q| {
            let base = direct_power_sum(&spec(1, 2, s, SeqKind::Fibonacci, SignMode::SPlusOnePower), q);
            let lhs = neg_if(base, odd((s64 + 1) * i64::from(q)));
            lhs == fib_poly(s64).pow(2).mul(&binom_or_zero(q + 1, 2, s))
        }),
        // sum of (-1)^(s(n+q)) F_{2sn} collapses to F_{2s} binom(q+1,2)
        "4.24" => (0..=q_max).all(|q| {
            let base = direct_power_sum(&spec(2, 1, s, SeqKind::Fibonacci, SignMode::SPower), q);
            let lhs = neg_if(base, odd(s64 * i64::from(q)));
            lhs == fib_poly(2 * s64).mul(&binom_or_zero(q + 1, 2, s))
        }),
        // the two collapsed sums above agree and equal F_{s(q+1)} F_{sq}
        "4.27" => (0..=q_max).all(|q| {
            let q64 = i64::from(q);
            let a = neg_if(
                lucas_poly(s64).mul(&direct_power_sum(
                    &spec(1, 2, s, SeqKind::Fibonacci, SignMode::SPlusOnePower),
                    q,
                )),
                odd((s64 + 1) * q64),
            );
            let b = neg_if(
                fib_poly(s64).mul(&direct_power_sum(
                    &spec(2, 1, s, SeqKind::Fibonacci, SignMode::SPower),
                    q,
                )),
                odd(s64 * q64),
            );
            let c = fib_poly(s64 * (q64 + 1)).mul(&fib_poly(s64 * q64));
            a == b && b == c
        }),
        // alternating fourth powers scaled by F_s^4
        "4.36" => {
            let scale = fib_poly(s64).pow(4);
            let middle = neg_if(lucas_poly(2 * s64), s % 2 == 1)
                .mul_i64(3)
                .add(&PolyX::constant(4));
            (0..=q_max).all(|q| {
                let base =
                    direct_power_sum(&spec(1, 4, s, SeqKind::Fibonacci, SignMode::Alternating), q);
                let lhs = neg_if(base, q % 2 == 1);
                let combo = binom_or_zero(q + 1, 4, s)
                    .add(&binom_or_zero(q + 3, 4, s))
                    .add(&middle.mul(&binom_or_zero(q + 2, 4, s)));
                lhs == scale.mul(&combo)
            })
        }
        // alternating squares at doubled stride scaled by F_{2s}^2
        "4.37" => {
            let scale = fib_poly(2 * s64).pow(2);
            let middle = neg_if(lucas_poly(2 * s64), s % 2 == 0);
            (0..=q_max).all(|q| {
                let base =
                    direct_power_sum(&spec(2, 2, s, SeqKind::Fibonacci, SignMode::Alternating), q);
                let lhs = neg_if(base, q % 2 == 1);
                let combo = binom_or_zero(q + 1, 4, s)
                    .add(&middle.mul(&binom_or_zero(q + 2, 4, s)))
                    .add(&binom_or_zero(q + 3, 4, s));
                lhs == scale.mul(&combo)
            })
        }
        // Lucas companion to 4.24, two-term combination form
        "4.44" => (0..=q_max).all(|q| {
            let base = direct_power_sum(&spec(2, 1, s, SeqKind::Lucas, SignMode::SPower), q);
            let lhs = neg_if(base, odd(s64 * i64::from(q)));
            let rhs = binom_or_zero(q + 2, 2, s)
                .mul_i64(2)
                .sub(&lucas_poly(2 * s64).mul(&binom_or_zero(q + 1, 2, s)));
            lhs == rhs
        }),
        // same sum in product form, cleared by F_s
        "4.45" => (0..=q_max).all(|q| {
            let q64 = i64::from(q);
            let base = direct_power_sum(&spec(2, 1, s, SeqKind::Lucas, SignMode::SPower), q);
            let lhs = fib_poly(s64).mul(&neg_if(base, odd(s64 * q64)));
            lhs == lucas_poly(s64 * q64).mul(&fib_poly(s64 * (q64 + 1)))
        }),
        _ => return Err(PowersumError::UnknownIdentity(tag.to_string())),
    };
    Ok(ok)
}

/// Index-weighted power sum `sum_{n=0}^{q} (-1)^(wn) n A_{2sn}` with weight
/// exponent `w = s` or `s+1`.
fn weighted_stride2_sum(kind: SeqKind, s: u32, weight_exp: i64, q: u32) -> PolyX {
    let s64 = i64::from(s);
    let mut acc = PolyX::zero();
    for n in 0..=i64::from(q) {
        let term = kind.poly(2 * s64 * n).mul_bigint(&BigInt::from(n));
        acc = acc.add(&if (weight_exp * n).rem_euclid(2) == 1 {
            term.neg()
        } else {
            term
        });
    }
    acc
}

/// Verify one of the derivative identities for `q = 0..=q_max`, in cleared
/// form: the first is multiplied through by `L_s`, the second by `F_s`,
/// the third by `(x^2+4) F_s`.
pub fn derivative_identity(tag: &str, s: u32, q_max: u32) -> Result<bool, PowersumError> {
    let s64 = i64::from(s);
    let odd = |e: i64| e.rem_euclid(2) == 1;
    let f_s = fib_poly(s64);
    let l_s = lucas_poly(s64);
    let ok = match tag {
        // (-1)^((s+1)q) 2 L_s^2 sum (-1)^((s+1)n) n F_{2sn}
        //   = L_s (2q F_{s(2q+1)} + F_{sq} L_{s(q+1)}) - (x^2+4) F_s F_{s(q+1)} F_{sq}
        "5.4" => (0..=q_max).all(|q| {
            let q64 = i64::from(q);
            let sum = weighted_stride2_sum(SeqKind::Fibonacci, s, s64 + 1, q);
            let lhs = neg_if(
                l_s.pow(2).mul_i64(2).mul(&sum),
                odd((s64 + 1) * q64),
            );
            let bracket = fib_poly(s64 * (2 * q64 + 1))
                .mul_i64(2 * q64)
                .add(&fib_poly(s64 * q64).mul(&lucas_poly(s64 * (q64 + 1))));
            let rhs = l_s.mul(&bracket).sub(
                &x_squared_plus_4()
                    .mul(&f_s)
                    .mul(&fib_poly(s64 * (q64 + 1)))
                    .mul(&fib_poly(s64 * q64)),
            );
            lhs == rhs
        }),
        // (-1)^(sq) 2 F_s^2 sum (-1)^(sn) n L_{2sn}
        //   = F_s (2q F_{s(2q+1)} + F_{sq} L_{s(q+1)}) - L_s F_{s(q+1)} F_{sq}
        "5.5" => (0..=q_max).all(|q| {
            let q64 = i64::from(q);
            let sum = weighted_stride2_sum(SeqKind::Lucas, s, s64, q);
            let lhs = neg_if(f_s.pow(2).mul_i64(2).mul(&sum), odd(s64 * q64));
            let bracket = fib_poly(s64 * (2 * q64 + 1))
                .mul_i64(2 * q64)
                .add(&fib_poly(s64 * q64).mul(&lucas_poly(s64 * (q64 + 1))));
            let rhs = f_s
                .mul(&bracket)
                .sub(&l_s.mul(&fib_poly(s64 * (q64 + 1))).mul(&fib_poly(s64 * q64)));
            lhs == rhs
        }),
        // (-1)^(sq) (x^2+4) F_s^2 sum (-1)^(sn) n F_{2sn}
        //   = (-1)^(s+1) F_{2sq} + q F_s L_{s(2q+1)}
        "5.39" => (0..=q_max).all(|q| {
            let q64 = i64::from(q);
            let sum = weighted_stride2_sum(SeqKind::Fibonacci, s, s64, q);
            let lhs = neg_if(
                x_squared_plus_4().mul(&f_s.pow(2)).mul(&sum),
                odd(s64 * q64),
            );
            let rhs = neg_if(fib_poly(2 * s64 * q64), s % 2 == 0)
                .add(&f_s.mul(&lucas_poly(s64 * (2 * q64 + 1))).mul_i64(q64));
            lhs == rhs
        }),
        _ => return Err(PowersumError::UnknownIdentity(tag.to_string())),
    };
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn fib_spec(t: u32, k: u32, s: u32, sign: SignMode) -> SumSpec {
        SumSpec::new(t, k, s, SeqKind::Fibonacci, sign).unwrap()
    }

    fn lucas_spec(t: u32, k: u32, s: u32, sign: SignMode) -> SumSpec {
        SumSpec::new(t, k, s, SeqKind::Lucas, sign).unwrap()
    }

    #[test]
    fn resolution_by_s_parity() {
        assert_eq!(fib_spec(1, 2, 2, SignMode::SPower).resolved().sign, SignMode::Plain);
        assert_eq!(
            fib_spec(1, 2, 3, SignMode::SPower).resolved().sign,
            SignMode::Alternating
        );
        assert_eq!(
            fib_spec(1, 2, 3, SignMode::SPlusOnePower).resolved().sign,
            SignMode::Plain
        );
        assert_eq!(
            fib_spec(1, 2, 2, SignMode::SPlusOnePower).resolved().sign,
            SignMode::Alternating
        );
        assert_eq!(fib_spec(1, 2, 5, SignMode::Plain).resolved().sign, SignMode::Plain);
    }

    #[test]
    fn coefficients_of_quadruple_stride_sum() {
        // base coefficients F_{4s} * [1, (-1)^(s+1) L_{2s}, 1, 0]
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let exp = expansion_coefficients(&fib_spec(4, 1, s, SignMode::Plain));
            let f4s = fib_poly(4 * s64);
            assert_eq!(exp.base_coeff(1), &f4s, "s={s}");
            let middle = if s % 2 == 1 {
                f4s.mul(&lucas_poly(2 * s64))
            } else {
                f4s.mul(&lucas_poly(2 * s64)).neg()
            };
            assert_eq!(exp.base_coeff(2), &middle, "s={s}");
            assert_eq!(exp.base_coeff(3), &f4s, "s={s}");
            assert_eq!(exp.base_coeff(4), &PolyX::zero(), "s={s}");
            assert!(!exp.q_parity_twist);
        }
    }

    #[test]
    fn coefficients_of_quadruple_stride_lucas_sum() {
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let exp = expansion_coefficients(&lucas_spec(4, 1, s, SignMode::Plain));
            let l2 = lucas_poly(2 * s64);
            let l4 = lucas_poly(4 * s64);
            let l6 = lucas_poly(6 * s64);
            let sgn = |p: PolyX, negative: bool| if negative { p.neg() } else { p };
            assert_eq!(exp.base_coeff(4), &PolyX::constant(2), "s={s}");
            let c3 = l4.neg().add(&sgn(l2.mul_i64(2), s % 2 == 0));
            assert_eq!(exp.base_coeff(3), &c3, "s={s}");
            let c2 = sgn(
                l6.add(&l2).add(&sgn(PolyX::constant(2), s % 2 == 1)),
                s % 2 == 1,
            );
            assert_eq!(exp.base_coeff(2), &c2, "s={s}");
            assert_eq!(exp.base_coeff(1), &l4.neg(), "s={s}");
        }
    }

    #[test]
    fn sixth_power_coefficients_at_one() {
        // t=1, k=6, s=1 resolved from the (s+1)-power mode; at x=1 the
        // coefficients are 1, -11, -64, -11, 1, 0 for m = 1..6
        let exp = expansion_coefficients(&fib_spec(1, 6, 1, SignMode::SPlusOnePower));
        let one = BigInt::from(1);
        let expected = [1i64, -11, -64, -11, 1, 0];
        for (m, &want) in (1..=6).zip(expected.iter()) {
            assert_eq!(exp.base_coeff(m).eval_int(&one), BigInt::from(want), "m={m}");
        }
        assert!(!exp.q_parity_twist);
    }

    #[test]
    fn cube_condition_polynomial() {
        // condition for t=1, k=3 is -F_s^3 (2 L_s + 1 + (-1)^s), never zero
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let report = admissibility_condition(&fib_spec(1, 3, s, SignMode::Plain));
            let constant = if s % 2 == 0 { 2 } else { 0 };
            let expected = fib_poly(s64)
                .pow(3)
                .mul(&lucas_poly(s64).mul_i64(2).add(&PolyX::constant(constant)))
                .neg();
            assert_eq!(report.condition_poly, expected, "s={s}");
            assert!(!report.is_zero);
            assert!(!report.table_predicts);
        }
    }

    #[test]
    fn condition_zero_cases() {
        let r = admissibility_condition(&fib_spec(4, 1, 2, SignMode::Plain));
        assert!(r.is_zero && r.table_predicts);
        let r = admissibility_condition(&fib_spec(2, 1, 1, SignMode::Alternating));
        assert!(r.is_zero && r.table_predicts);
    }

    #[test]
    fn table_rows() {
        assert!(table_predicts(&fib_spec(2, 1, 2, SignMode::Plain)));
        assert!(table_predicts(&fib_spec(1, 4, 3, SignMode::Alternating)));
        assert!(!table_predicts(&fib_spec(1, 3, 1, SignMode::Plain)));
        assert!(table_predicts(&lucas_spec(4, 3, 3, SignMode::Plain)));
        assert!(table_predicts(&lucas_spec(2, 1, 1, SignMode::Alternating)));
        assert!(!table_predicts(&lucas_spec(2, 1, 2, SignMode::Alternating)));
    }

    #[test]
    fn expansion_verification() {
        assert!(verify_expansion(&fib_spec(4, 1, 3, SignMode::Plain), 8));
        assert!(verify_expansion(&fib_spec(1, 2, 2, SignMode::SPlusOnePower), 10));
        assert!(!verify_expansion(&fib_spec(1, 3, 1, SignMode::Plain), 5));
        // the cube case first diverges at q = tk = 3, where the trailing
        // sum of binom(n, tk) picks up its first nonzero term, and the gap
        // is the condition polynomial -2x times binom(3,3) = 1
        let (q, diff) = verify_expansion_failure(&fib_spec(1, 3, 1, SignMode::Plain), 4).unwrap();
        assert_eq!(q, 3);
        assert_eq!(diff, PolyX::from_i64s(&[0, -2]));
    }

    #[test]
    fn squared_sum_collapses_to_single_fibopolynomial() {
        // the (s+1)-power square sum equals F_s^2 binom(q+1, 2)
        for s in 1..=3u32 {
            let exp = expansion_coefficients(&fib_spec(1, 2, s, SignMode::SPlusOnePower));
            for q in 0..=10u32 {
                let direct = direct_power_sum(&fib_spec(1, 2, s, SignMode::SPlusOnePower), q);
                assert_eq!(exp.assemble(q), direct);
            }
        }
    }

    #[test]
    fn unconditional_decomposition_holds_with_or_without_condition() {
        assert!(verify_unconditional_decomposition(
            &fib_spec(1, 3, 1, SignMode::Plain),
            6
        ));
        assert!(verify_unconditional_decomposition(
            &fib_spec(1, 1, 1, SignMode::Plain),
            8
        ));
        assert!(verify_unconditional_decomposition(
            &lucas_spec(2, 1, 2, SignMode::Alternating),
            6
        ));
    }

    #[test]
    fn named_identity_catalog() {
        assert_eq!(named_identity("1.15", 1, 20), Ok(true));
        assert_eq!(named_identity("4.27", 2, 8), Ok(true));
        assert_eq!(named_identity("4.45", 3, 8), Ok(true));
        assert_eq!(named_identity("3.18", 2, 8), Ok(true));
        assert_eq!(named_identity("3.31", 3, 6), Ok(true));
        assert_eq!(named_identity("4.21", 4, 8), Ok(true));
        assert_eq!(named_identity("4.24", 3, 8), Ok(true));
        assert_eq!(named_identity("4.36", 2, 6), Ok(true));
        assert_eq!(named_identity("4.37", 3, 6), Ok(true));
        assert_eq!(named_identity("4.44", 4, 8), Ok(true));
        assert!(matches!(
            named_identity("9.99", 1, 1),
            Err(PowersumError::UnknownIdentity(_))
        ));
    }

    #[test]
    fn corollary_families_both_parities() {
        for s in [1u32, 2] {
            assert_eq!(named_identity("4.19", s, 6), Ok(true), "s={s}");
            assert_eq!(named_identity("4.20", s, 6), Ok(true), "s={s}");
            assert_eq!(named_identity("4.43", s, 6), Ok(true), "s={s}");
        }
    }

    #[test]
    fn derivative_identities() {
        assert_eq!(derivative_identity("5.4", 1, 6), Ok(true));
        assert_eq!(derivative_identity("5.5", 2, 6), Ok(true));
        assert_eq!(derivative_identity("5.39", 1, 0), Ok(true));
        assert_eq!(derivative_identity("5.39", 3, 6), Ok(true));
        assert!(matches!(
            derivative_identity("5.6", 1, 1),
            Err(PowersumError::UnknownIdentity(_))
        ));
    }

    #[test]
    fn invalid_spec_rejected() {
        assert!(SumSpec::new(0, 1, 1, SeqKind::Fibonacci, SignMode::Plain).is_err());
        assert!(SumSpec::new(1, 1, 0, SeqKind::Lucas, SignMode::Plain).is_err());
    }
}
