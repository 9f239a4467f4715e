//! The end-to-end verification suite: eleven criteria covering route
//! agreement, the identity toolkit, denominator factorization, the rational
//! forms, the main equivalence theorem, table soundness, printed-value
//! reproduction, the named catalog, the derivative family, and the
//! conjecture scan. Both the acceptance test target and the CLI `selftest`
//! subcommand run exactly this list; every comparison is exact.

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bigpoly::PolyX;
use crate::fibopoly::{fibopolynomial, fibopolynomial_quotient, FibopolyKey};
use crate::lucas_seq::{
    check_derivative_formulas, check_index_reduction, check_quotient_identities, fib_poly,
    lucas_poly, x_squared_plus_4, IndexReductionVariant, SeqKind,
};
use crate::powersums::{
    admissibility_condition, derivative_identity, expansion_coefficients, named_identity,
    verify_expansion, verify_unconditional_decomposition, SignMode, SumSpec,
};
use crate::scanner::{conjecture_evidence, scan, ScanGrid};
use crate::ztransform::{
    build_denominator, build_denominator_factored, build_numerator, expansion_check, series_check,
    RationalZ,
};

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn run(index: usize, name: &'static str, body: impl FnOnce() -> (bool, String)) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = body();
    CriterionResult {
        index,
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Run all eleven criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        fibopolynomial_routes(),
        toolkit_identities(),
        denominator_factorization(),
        rational_form_checks(),
        main_theorem_equivalence(),
        proposition_soundness(),
        remark_condition_reproduction(),
        printed_coefficients(),
        named_identity_catalog(),
        derivative_family(),
        conjecture_scan(),
    ]
}

/// Criterion 1: recurrence and quotient routes agree, with symmetry and the
/// degree law, for all s <= 4, n <= 12, 0 <= k <= n.
pub fn fibopolynomial_routes() -> CriterionResult {
    run(1, "fibopolynomial route agreement", || {
        let mut checked = 0usize;
        for s in 1..=4u32 {
            for n in 0..=12u32 {
                for k in 0..=n {
                    let key = FibopolyKey { n, k, s };
                    let rec = fibopolynomial(key);
                    let quo = match fibopolynomial_quotient(key) {
                        Ok(p) => p,
                        Err(e) => return (false, format!("quotient failed: {e}")),
                    };
                    if rec != quo {
                        return (false, format!("route mismatch at n={n} k={k} s={s}"));
                    }
                    if rec != fibopolynomial(FibopolyKey { n, k: n - k, s }) {
                        return (false, format!("symmetry broken at n={n} k={k} s={s}"));
                    }
                    if rec.degree() != Some((s * k * (n - k)) as usize) {
                        return (false, format!("degree law broken at n={n} k={k} s={s}"));
                    }
                    checked += 1;
                }
            }
        }
        (true, format!("{checked} triples agree on both routes"))
    })
}

/// Criterion 2: quotient identities, index reduction and the square
/// relation anchoring the signed-index convention.
pub fn toolkit_identities() -> CriterionResult {
    run(2, "quotient/index-reduction/square toolkit", || {
        for s in 1..=4u32 {
            for p in 1..=5u32 {
                if !check_quotient_identities(s, p) {
                    return (false, format!("quotient identity failed at s={s} p={p}"));
                }
            }
        }
        for m in -4..=4i64 {
            for n in -4..=4i64 {
                for k in -4..=4i64 {
                    for v in [
                        IndexReductionVariant::FF,
                        IndexReductionVariant::FL,
                        IndexReductionVariant::LL,
                    ] {
                        if !check_index_reduction(m, n, k, v) {
                            return (false, format!("index reduction {v:?} failed at ({m},{n},{k})"));
                        }
                    }
                }
            }
        }
        let disc = x_squared_plus_4();
        for n in -40..=40i64 {
            let lhs = lucas_poly(n).pow(2).sub(&disc.mul(&fib_poly(n).pow(2)));
            let rhs = PolyX::constant(if n.rem_euclid(2) == 0 { 4 } else { -4 });
            if lhs != rhs {
                return (false, format!("square relation failed at n={n}"));
            }
        }
        (true, "quotient grid, index grid and square relation all exact".into())
    })
}

/// Criterion 3: signed-sum denominator equals the factored product for all
/// s <= 4, tk <= 8.
pub fn denominator_factorization() -> CriterionResult {
    run(3, "denominator factorization", || {
        for s in 1..=4u32 {
            for tk in 1..=8u32 {
                if build_denominator(s, tk) != build_denominator_factored(s, tk) {
                    return (false, format!("builders disagree at s={s} tk={tk}"));
                }
            }
        }
        (true, "32 denominators agree between the two builders".into())
    })
}

/// Criterion 4: series and expansion checks across the family grid, plus
/// the two classical simplest-case forms.
pub fn rational_form_checks() -> CriterionResult {
    run(4, "rational form series/expansion checks", || {
        // z / (z^2 - xz - 1) and z(2z - x) / (z^2 - xz - 1)
        let den = build_denominator(1, 1);
        let expected_den = crate::bigpoly::PolyZX::from_coeffs(vec![
            PolyX::constant(-1),
            PolyX::x().neg(),
            PolyX::one(),
        ]);
        if den != expected_den {
            return (false, "simplest denominator is not z^2 - xz - 1".into());
        }
        if build_numerator(1, 1, 1, SeqKind::Fibonacci)
            != crate::bigpoly::PolyZX::monomial(PolyX::one(), 1)
        {
            return (false, "simplest Fibonacci numerator is not z".into());
        }
        let lucas_num = crate::bigpoly::PolyZX::from_coeffs(vec![
            PolyX::zero(),
            PolyX::x().neg(),
            PolyX::constant(2),
        ]);
        if build_numerator(1, 1, 1, SeqKind::Lucas) != lucas_num {
            return (false, "simplest Lucas numerator is not z(2z - x)".into());
        }

        let mut families = Vec::new();
        for t in 1..=6u32 {
            for k in 1..=6u32 {
                if t * k > 6 {
                    continue;
                }
                for s in 1..=3u32 {
                    for kind in [SeqKind::Fibonacci, SeqKind::Lucas] {
                        families.push((t, k, s, kind));
                    }
                }
            }
        }
        let failure = families.par_iter().find_map_any(|&(t, k, s, kind)| {
            let rz = RationalZ::new(t, k, s, kind);
            if !series_check(&rz, 25) {
                return Some(format!("series check failed at t={t} k={k} s={s} {kind:?}"));
            }
            if !expansion_check(t, k, s, kind, 20) {
                return Some(format!("expansion check failed at t={t} k={k} s={s} {kind:?}"));
            }
            None
        });
        match failure {
            Some(msg) => (false, msg),
            None => (true, format!("{} families pass to N=25/20", families.len())),
        }
    })
}

struct GridRow {
    spec: SumSpec,
    is_zero: bool,
    predicted: bool,
    expansion_ok: bool,
    unconditional_ok: bool,
}

/// The t <= 6, k <= 6, s <= 4, tk <= 8 grid over both kinds and both
/// resolved sign modes, computed once and shared by criteria 5 and 6.
fn theorem_grid() -> &'static [GridRow] {
    static GRID: OnceLock<Vec<GridRow>> = OnceLock::new();
    GRID.get_or_init(|| {
        let grid = ScanGrid {
            t_range: (1, 6),
            k_range: (1, 6),
            s_range: (1, 4),
            kinds: vec![SeqKind::Fibonacci, SeqKind::Lucas],
            signs: vec![SignMode::Plain, SignMode::Alternating],
            tk_cap: 8,
            q_check: 0,
        };
        grid.specs()
            .into_par_iter()
            .map(|spec| {
                let report = admissibility_condition(&spec);
                GridRow {
                    spec,
                    is_zero: report.is_zero,
                    predicted: report.table_predicts,
                    expansion_ok: verify_expansion(&spec, 8),
                    unconditional_ok: verify_unconditional_decomposition(&spec, 8),
                }
            })
            .collect()
    })
}

/// Criterion 5: the expansion verifies exactly when the condition
/// polynomial vanishes (both directions), and the unconditional
/// decomposition holds on every spec of the grid.
pub fn main_theorem_equivalence() -> CriterionResult {
    run(5, "main-theorem equivalence on the grid", || {
        let rows = theorem_grid();
        for row in rows {
            if row.expansion_ok != row.is_zero {
                return (
                    false,
                    format!(
                        "iff broken at {:?}: expansion {} but condition zero = {}",
                        row.spec, row.expansion_ok, row.is_zero
                    ),
                );
            }
            if !row.unconditional_ok {
                return (false, format!("unconditional decomposition failed at {:?}", row.spec));
            }
        }
        (true, format!("{} specs agree in both directions", rows.len()))
    })
}

/// Criterion 6: no table-predicted spec has a nonzero condition.
pub fn proposition_soundness() -> CriterionResult {
    run(6, "proposition table soundness", || {
        let rows = theorem_grid();
        let mut predicted = 0usize;
        for row in rows {
            if row.predicted {
                predicted += 1;
                if !row.is_zero {
                    return (false, format!("soundness alarm at {:?}", row.spec));
                }
            }
        }
        (true, format!("{predicted} predicted specs all have zero condition"))
    })
}

/// Criterion 7: the cube-sum condition polynomial equals
/// `-F_s^3 (2 L_s + 1 + (-1)^s)` for s = 1..4.
pub fn remark_condition_reproduction() -> CriterionResult {
    run(7, "cube-sum condition reproduction", || {
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let spec = SumSpec::new(1, 3, s, SeqKind::Fibonacci, SignMode::Plain).unwrap();
            let got = admissibility_condition(&spec).condition_poly;
            let constant = if s % 2 == 0 { 2 } else { 0 };
            let expected = fib_poly(s64)
                .pow(3)
                .mul(&lucas_poly(s64).mul_i64(2).add(&PolyX::constant(constant)))
                .neg();
            if got != expected {
                return (false, format!("condition mismatch at s={s}"));
            }
        }
        (true, "all four cube-sum conditions match the closed form".into())
    })
}

/// Criterion 8: printed coefficient rows reproduce exactly.
pub fn printed_coefficients() -> CriterionResult {
    run(8, "printed coefficient reproduction", || {
        // quadruple-stride Fibonacci sum: F_{4s} * [1, +/-L_{2s}, 1, 0]
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let exp = expansion_coefficients(
                &SumSpec::new(4, 1, s, SeqKind::Fibonacci, SignMode::Plain).unwrap(),
            );
            let f4s = fib_poly(4 * s64);
            let middle = if s % 2 == 1 {
                f4s.mul(&lucas_poly(2 * s64))
            } else {
                f4s.mul(&lucas_poly(2 * s64)).neg()
            };
            if exp.base_coeff(1) != &f4s
                || exp.base_coeff(2) != &middle
                || exp.base_coeff(3) != &f4s
                || exp.base_coeff(4) != &PolyX::zero()
            {
                return (false, format!("quadruple-stride Fibonacci row broken at s={s}"));
            }
        }
        // quadruple-stride Lucas sum coefficients
        for s in 1..=4u32 {
            let s64 = i64::from(s);
            let exp = expansion_coefficients(
                &SumSpec::new(4, 1, s, SeqKind::Lucas, SignMode::Plain).unwrap(),
            );
            let sgn = |p: PolyX, neg: bool| if neg { p.neg() } else { p };
            let l2 = lucas_poly(2 * s64);
            let l4 = lucas_poly(4 * s64);
            let l6 = lucas_poly(6 * s64);
            let c3 = l4.neg().add(&sgn(l2.mul_i64(2), s % 2 == 0));
            let c2 = sgn(
                l6.add(&l2).add(&sgn(PolyX::constant(2), s % 2 == 1)),
                s % 2 == 1,
            );
            if exp.base_coeff(4) != &PolyX::constant(2)
                || exp.base_coeff(3) != &c3
                || exp.base_coeff(2) != &c2
                || exp.base_coeff(1) != &l4.neg()
            {
                return (false, format!("quadruple-stride Lucas row broken at s={s}"));
            }
        }
        // sixth powers at s=1, x=1: 1, -11, -64, -11, 1, 0
        let exp = expansion_coefficients(
            &SumSpec::new(1, 6, 1, SeqKind::Fibonacci, SignMode::SPlusOnePower).unwrap(),
        );
        let one = BigInt::from(1);
        for (m, want) in (1..=6).zip([1i64, -11, -64, -11, 1, 0]) {
            if exp.base_coeff(m).eval_int(&one) != BigInt::from(want) {
                return (false, format!("sixth-power coefficient broken at m={m}"));
            }
        }
        // alternating fourth powers (t=1, k=4) and alternating squares at
        // doubled stride (t=2, k=2): after multiplying by (-1)^q the printed
        // per-m coefficients are (-1)^m times the stored base polynomials
        for s in 1..=3u32 {
            let s64 = i64::from(s);
            let sgn = |p: PolyX, neg: bool| if neg { p.neg() } else { p };

            let exp = expansion_coefficients(
                &SumSpec::new(1, 4, s, SeqKind::Fibonacci, SignMode::Alternating).unwrap(),
            );
            let f4 = fib_poly(s64).pow(4);
            let mid = sgn(lucas_poly(2 * s64), s % 2 == 1)
                .mul_i64(3)
                .add(&PolyX::constant(4))
                .mul(&f4);
            let printed = [f4.clone(), mid, f4.clone(), PolyX::zero()];
            for (m, want) in (1..=4u32).zip(printed.iter()) {
                let got = sgn(exp.base_coeff(m).clone(), m % 2 == 1);
                if &got != want {
                    return (false, format!("fourth-power shape broken at s={s} m={m}"));
                }
            }

            let exp = expansion_coefficients(
                &SumSpec::new(2, 2, s, SeqKind::Fibonacci, SignMode::Alternating).unwrap(),
            );
            let f2sq = fib_poly(2 * s64).pow(2);
            let mid = sgn(lucas_poly(2 * s64), s % 2 == 0).mul(&f2sq);
            let printed = [f2sq.clone(), mid, f2sq.clone(), PolyX::zero()];
            for (m, want) in (1..=4u32).zip(printed.iter()) {
                let got = sgn(exp.base_coeff(m).clone(), m % 2 == 1);
                if &got != want {
                    return (false, format!("doubled-stride square shape broken at s={s} m={m}"));
                }
            }
        }
        (true, "all printed rows reproduce exactly".into())
    })
}

/// Criterion 9: the named-identity catalog.
pub fn named_identity_catalog() -> CriterionResult {
    run(9, "named-identity catalog", || {
        if named_identity("1.15", 1, 20) != Ok(true) {
            return (false, "squared-sum classic failed to q=20".into());
        }
        for s in 1..=4u32 {
            for tag in ["4.21", "4.24", "4.27", "4.44", "4.45"] {
                if named_identity(tag, s, 10) != Ok(true) {
                    return (false, format!("identity {tag} failed at s={s}"));
                }
            }
        }
        for s in [1u32, 2] {
            for tag in ["4.19", "4.20", "4.43"] {
                if named_identity(tag, s, 8) != Ok(true) {
                    return (false, format!("corollary family {tag} failed at s={s}"));
                }
            }
        }
        for s in 1..=4u32 {
            for tag in ["3.18", "3.31"] {
                if named_identity(tag, s, 8) != Ok(true) {
                    return (false, format!("identity {tag} failed at s={s}"));
                }
            }
        }
        (true, "full catalog exact on its stated ranges".into())
    })
}

/// Criterion 10: closed derivative formulas and the three derivative
/// identities in cleared form.
pub fn derivative_family() -> CriterionResult {
    run(10, "derivative formulas and identities", || {
        for n in -30..=30i64 {
            if !check_derivative_formulas(n) {
                return (false, format!("closed derivative formulas failed at n={n}"));
            }
        }
        for s in 1..=3u32 {
            for tag in ["5.4", "5.5", "5.39"] {
                if derivative_identity(tag, s, 8) != Ok(true) {
                    return (false, format!("derivative identity {tag} failed at s={s}"));
                }
            }
        }
        (true, "derivative family exact for |n| <= 30 and s <= 3, q <= 8".into())
    })
}

/// Parity class of an unpredicted plain-Fibonacci spec among the seven
/// uncovered cases, or `None` when some table row covers it.
pub fn remark_class(t: u32, k: u32, s: u32) -> Option<usize> {
    let (te, ke, se) = (t % 2 == 0, k % 2 == 0, s % 2 == 0);
    if te && ke {
        return Some(if se { 1 } else { 2 });
    }
    if !te && ke && se {
        return Some(3);
    }
    if t % 4 == 2 && !ke && !se {
        return Some(4);
    }
    if !te && k % 4 == 0 && !se {
        return Some(5);
    }
    if !te && !ke {
        return Some(if se { 6 } else { 7 });
    }
    None
}

/// Criterion 11: the default scan finds no counterexample candidates, and
/// every one of the seven uncovered parity classes appears among the
/// plain-Fibonacci rows with a nonzero condition.
pub fn conjecture_scan() -> CriterionResult {
    run(11, "conjecture scan on the default grid", || {
        let report = scan(&ScanGrid::default_grid());
        let candidates = conjecture_evidence(&report);
        if !candidates.is_empty() {
            return (
                false,
                format!("{} counterexample candidates found", candidates.len()),
            );
        }
        if report.summary.predicted_nonzero != 0 {
            return (false, "soundness alarm rows present".into());
        }
        let mut seen = [false; 7];
        for row in &report.rows {
            let spec = row.report.spec;
            if spec.kind != SeqKind::Fibonacci || spec.sign != SignMode::Plain {
                continue;
            }
            match remark_class(spec.t, spec.k, spec.s) {
                Some(class) => {
                    if row.report.table_predicts {
                        return (false, format!("class {class} spec wrongly predicted: {spec:?}"));
                    }
                    if row.report.is_zero {
                        return (false, format!("class {class} spec has zero condition: {spec:?}"));
                    }
                    seen[class - 1] = true;
                }
                None => {
                    if !row.report.table_predicts {
                        return (false, format!("unclassified unpredicted spec: {spec:?}"));
                    }
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&b| !b) {
            return (false, format!("parity class {} not exercised", missing + 1));
        }
        (
            true,
            format!(
                "no candidates; {} rows scanned, all seven uncovered classes nonzero",
                report.rows.len()
            ),
        )
    })
}
