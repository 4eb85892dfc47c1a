//! Acceptance gate: eleven numbered criteria, one test per criterion.
//!
//! Each test prints a single `criterion N: PASS/FAIL (...)` line, so
//! `cargo test -p emsum --test acceptance -- --nocapture` reads as a
//! checklist, and then asserts with the same detail. Oracles used here are
//! built inside this file (Bernoulli triangle recurrence, the published
//! power-sum table, Machin-formula pi bounds, brute-force sums) so every
//! check crosses two independent routes.
//!
//! Two comparisons are against classical published digits that were printed
//! truncated rather than rounded, so they sit farther from the true values
//! than the stated tolerances allow for any correct pipeline: the harmonic
//! table rows x = 10 and x = 100000 (criterion 6) and the ten-term squares
//! sum (criterion 10). The tests assert the stated tolerances anyway and
//! those rows are expected to stay red; the failure messages carry the
//! exact deltas.

use std::collections::BTreeMap;

use emsum::polynomial::newton_refine;
use emsum::rational::{factorial, rat, Rational};
use emsum::real::{ln_rational, Real};
use emsum::{
    determine_constant, euler_mascheroni, harmonic_table, leibniz_pi, odd_harmonic_constant,
    optimal_truncation, power_sum, zeta_int, EmCoefficientTable, PoleTermFamily,
    PowerSumPolynomial, RationalPolynomial, SummationOptions,
};
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pow10(scale: u32) -> BigInt {
    BigInt::from(10).pow(scale)
}

/// `units * 10^-scale` as an exact rational tolerance.
fn tol(units: i64, scale: u32) -> Rational {
    Rational::new(BigInt::from(units), pow10(scale))
}

/// Compact scientific rendering for failure messages; f64 is plenty for
/// reporting a delta whose exact value the assertion already carries.
fn sci(value: &Rational) -> String {
    format!("{:.3e}", value.to_f64().unwrap_or(f64::NAN))
}

fn decimal(text: &str) -> Rational {
    text.parse::<Real>().expect("fixture decimal").to_rational()
}

/// Print the one checklist line and panic with the same detail on failure.
fn verdict(criterion: u32, failures: &[String], pass_detail: &str) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS ({pass_detail})");
    } else {
        let detail = failures.join("; ");
        println!("criterion {criterion}: FAIL ({detail})");
        panic!("criterion {criterion}: {detail}");
    }
}

/// Independent Bernoulli oracle: the triangle recurrence
/// `sum_{j<=m} C(m+1, j) B_j = 0` (which lands on `B_1 = -1/2`), then the
/// lone sign flip at index 1 to match the `B_1 = +1/2` convention the
/// coefficient table uses. Deliberately a different identity from the
/// library's own generator.
fn bernoulli_oracle(upto: usize) -> Vec<Rational> {
    let mut seq = vec![Rational::one()];
    for m in 1..=upto {
        let mut acc = Rational::zero();
        for (j, b) in seq.iter().enumerate() {
            acc += b * Rational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j)));
        }
        seq.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    if upto >= 1 {
        seq[1] = rat(1, 2);
    }
    seq
}

/// Partial sums of `atan(1/q) = sum_k (-1)^k / ((2k+1) q^(2k+1))` taken at
/// consecutive cuts; alternating terms with decreasing magnitude mean the
/// two cuts bracket the limit.
fn atan_inv_bounds(q: u32, terms: u32) -> (Rational, Rational) {
    let base = BigInt::from(q);
    let mut sum = Rational::zero();
    let mut prev = Rational::zero();
    for k in 0..=terms {
        prev = sum.clone();
        let denom = base.pow(2 * k + 1) * BigInt::from(2 * k + 1);
        let mut term = Rational::new(BigInt::one(), denom);
        if k % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    if sum < prev {
        (sum, prev)
    } else {
        (prev, sum)
    }
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)` with interval
/// bounds: pairing the low cut of the positive part with the high cut of
/// the subtracted part (and vice versa) brackets pi. The chosen cut depths
/// leave the bracket narrower than 1e-40.
fn machin_pi_bounds() -> (Rational, Rational) {
    let (lo5, hi5) = atan_inv_bounds(5, 40);
    let (lo239, hi239) = atan_inv_bounds(239, 12);
    let sixteen = Rational::from_integer(BigInt::from(16));
    let four = Rational::from_integer(BigInt::from(4));
    let lo = &sixteen * &lo5 - &four * &hi239;
    let hi = &sixteen * &hi5 - &four * &lo239;
    assert!(&hi - &lo < tol(1, 40), "pi bracket too wide");
    (lo, hi)
}

fn machin_pi_midpoint() -> Rational {
    let (lo, hi) = machin_pi_bounds();
    (lo + hi) / Rational::from_integer(BigInt::from(2))
}

#[test]
fn criterion_01_coefficient_table_and_bernoulli_oracle() {
    let entry = |numer: i64, fact_of: u64, mult: i64| {
        Rational::new(BigInt::from(numer), factorial(fact_of) * BigInt::from(mult))
    };
    let expected = [
        rat(1, 1),
        rat(1, 2),
        rat(1, 12),
        rat(0, 1),
        rat(-1, 720),
        rat(0, 1),
        rat(1, 30240),
        rat(0, 1),
        rat(-1, 1209600),
        rat(0, 1),
        entry(5, 11, 6),
        rat(0, 1),
        entry(-691, 13, 210),
        rat(0, 1),
        entry(35, 15, 2),
        rat(0, 1),
        entry(-3617, 17, 30),
    ];

    let table = EmCoefficientTable::generate(31);
    let mut failures = Vec::new();
    for (k, want) in expected.iter().enumerate() {
        let got = table.get(k).expect("table shorter than 17");
        if got != want {
            failures.push(format!("a[{k}] = {got}, want {want}"));
        }
    }

    let oracle = bernoulli_oracle(30);
    for (k, want) in oracle.iter().enumerate() {
        let scaled = Rational::from_integer(factorial(k as u64)) * table.get(k).unwrap();
        if &scaled != want {
            failures.push(format!("{k}! * a[{k}] = {scaled}, Bernoulli oracle {want}"));
        }
    }

    verdict(
        1,
        &failures,
        "17 published entries exact; k! * a_k matches the Bernoulli oracle for k <= 30",
    );
}

/// The classical published power-sum table for n = 1..16 as printed,
/// `(power, coefficient)` pairs per row. Row 7 carries the known misprint:
/// its second term is printed as x^7/7 where the recurrence gives x^7/2.
fn published_power_sum_rows() -> Vec<(u32, Vec<(usize, Rational)>)> {
    vec![
        (1, vec![(2, rat(1, 2)), (1, rat(1, 2))]),
        (2, vec![(3, rat(1, 3)), (2, rat(1, 2)), (1, rat(1, 6))]),
        (3, vec![(4, rat(1, 4)), (3, rat(1, 2)), (2, rat(1, 4))]),
        (4, vec![(5, rat(1, 5)), (4, rat(1, 2)), (3, rat(1, 3)), (1, rat(-1, 30))]),
        (5, vec![(6, rat(1, 6)), (5, rat(1, 2)), (4, rat(5, 12)), (2, rat(-1, 12))]),
        (
            6,
            vec![(7, rat(1, 7)), (6, rat(1, 2)), (5, rat(1, 2)), (3, rat(-1, 6)), (1, rat(1, 42))],
        ),
        (
            7,
            vec![(8, rat(1, 8)), (7, rat(1, 7)), (6, rat(7, 12)), (4, rat(-7, 24)), (2, rat(1, 12))],
        ),
        (
            8,
            vec![
                (9, rat(1, 9)),
                (8, rat(1, 2)),
                (7, rat(2, 3)),
                (5, rat(-7, 15)),
                (3, rat(2, 9)),
                (1, rat(-1, 30)),
            ],
        ),
        (
            9,
            vec![
                (10, rat(1, 10)),
                (9, rat(1, 2)),
                (8, rat(3, 4)),
                (6, rat(-7, 10)),
                (4, rat(1, 2)),
                (2, rat(-3, 20)),
            ],
        ),
        (
            10,
            vec![
                (11, rat(1, 11)),
                (10, rat(1, 2)),
                (9, rat(5, 6)),
                (7, rat(-1, 1)),
                (5, rat(1, 1)),
                (3, rat(-1, 2)),
                (1, rat(5, 66)),
            ],
        ),
        (
            11,
            vec![
                (12, rat(1, 12)),
                (11, rat(1, 2)),
                (10, rat(11, 12)),
                (8, rat(-11, 8)),
                (6, rat(11, 6)),
                (4, rat(-11, 8)),
                (2, rat(5, 12)),
            ],
        ),
        (
            12,
            vec![
                (13, rat(1, 13)),
                (12, rat(1, 2)),
                (11, rat(1, 1)),
                (9, rat(-11, 6)),
                (7, rat(22, 7)),
                (5, rat(-33, 10)),
                (3, rat(5, 3)),
                (1, rat(-691, 2730)),
            ],
        ),
        (
            13,
            vec![
                (14, rat(1, 14)),
                (13, rat(1, 2)),
                (12, rat(13, 12)),
                (10, rat(-143, 60)),
                (8, rat(143, 28)),
                (6, rat(-143, 20)),
                (4, rat(65, 12)),
                (2, rat(-691, 420)),
            ],
        ),
        (
            14,
            vec![
                (15, rat(1, 15)),
                (14, rat(1, 2)),
                (13, rat(7, 6)),
                (11, rat(-91, 30)),
                (9, rat(143, 18)),
                (7, rat(-143, 10)),
                (5, rat(91, 6)),
                (3, rat(-691, 90)),
                (1, rat(7, 6)),
            ],
        ),
        (
            15,
            vec![
                (16, rat(1, 16)),
                (15, rat(1, 2)),
                (14, rat(5, 4)),
                (12, rat(-91, 24)),
                (10, rat(143, 12)),
                (8, rat(-429, 16)),
                (6, rat(455, 12)),
                (4, rat(-691, 24)),
                (2, rat(35, 4)),
            ],
        ),
        (
            16,
            vec![
                (17, rat(1, 17)),
                (16, rat(1, 2)),
                (15, rat(4, 3)),
                (13, rat(-14, 3)),
                (11, rat(52, 3)),
                (9, rat(-143, 3)),
                (7, rat(260, 3)),
                (5, rat(-1382, 15)),
                (3, rat(140, 3)),
                (1, rat(-3617, 510)),
            ],
        ),
    ]
}

#[test]
fn criterion_02_power_sum_table_and_identities() {
    let mut failures = Vec::new();

    for (n, printed_row) in published_power_sum_rows() {
        let generated: BTreeMap<usize, Rational> = PowerSumPolynomial::new(n)
            .polynomial()
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (p, c.clone()))
            .collect();
        let mut printed: BTreeMap<usize, Rational> = printed_row.into_iter().collect();
        if n == 7 {
            // The documented misprint: the generator must say 1/2 where the
            // published row says 1/7, and agree everywhere else.
            if generated.get(&7) != Some(&rat(1, 2)) {
                failures.push("n = 7 generated x^7 coefficient is not 1/2".into());
            }
            if printed.remove(&7) != Some(rat(1, 7)) {
                failures.push("n = 7 published fixture lost its 1/7 misprint".into());
            }
            let mut rest = generated.clone();
            rest.remove(&7);
            if rest != printed {
                failures.push("n = 7 rows differ beyond the known misprint".into());
            }
        } else if generated != printed {
            failures.push(format!("n = {n} generated row differs from the published table"));
        }
    }

    for n in 0..=16u32 {
        let sum = PowerSumPolynomial::new(n);
        let poly = sum.polynomial();
        let difference = poly.add(&poly.taylor_shift(&rat(-1, 1)).scale(&rat(-1, 1)));
        if difference != RationalPolynomial::monomial(Rational::one(), n as usize) {
            failures.push(format!("S(x) - S(x - 1) != x^{n}"));
        }

        let mut direct = Rational::zero();
        for x in 1..=100u64 {
            direct += Rational::from_integer(BigInt::from(x).pow(n));
            if sum.evaluate(x) != direct {
                failures.push(format!("power sum n = {n} diverges from brute force at x = {x}"));
                break;
            }
        }
    }
    if power_sum(2, 4) != rat(30, 1) {
        failures.push("power_sum(2, 4) != 30".into());
    }

    verdict(
        2,
        &failures,
        "published rows match with only the n = 7 misprint; forward difference and brute force exact for n <= 16, x <= 100",
    );
}

#[test]
fn criterion_03_newton_refinement() {
    let poly: RationalPolynomial = "-20,-3,0,1".parse().unwrap();
    // A tolerance far below any reachable residual forces the iteration
    // counts to be exactly what max_iters asks for.
    let unreachable = Real::from_rational(&Rational::new(BigInt::one(), pow10(80)), 80);
    let mut failures = Vec::new();

    let first = newton_refine(&poly, rat(3, 1), &unreachable, 1).unwrap();
    if first.current() != &rat(37, 12) {
        failures.push(format!("first iterate {} is not 37/12", first.current()));
    }

    let sixth = newton_refine(&poly, rat(3, 1), &unreachable, 6).unwrap();
    if sixth.iterations() != 6 {
        failures.push(format!("expected 6 iterations, ran {}", sixth.iterations()));
    }
    let residual = sixth.residual().abs();
    if residual > tol(1, 20) {
        failures.push(format!("residual after 6 iterations {} exceeds 1e-20", sci(&residual)));
    }

    verdict(
        3,
        &failures,
        "first iterate 37/12 exact; sixth-iteration residual below 1e-20",
    );
}

#[test]
fn criterion_04_quadrature_matches_antiderivative() {
    let mut failures = Vec::new();
    let zero = RationalPolynomial::zero();
    if zero.quadrature_series() != zero.antiderivative() {
        failures.push("zero polynomial disagrees".into());
    }

    let mut rng = StdRng::seed_from_u64(0x1db7);
    for case in 0..50 {
        let degree = rng.gen_range(0..=10usize);
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| rat(rng.gen_range(-999i64..=999), rng.gen_range(1i64..=99)))
            .collect();
        let poly = RationalPolynomial::new(coeffs);
        if poly.quadrature_series() != poly.antiderivative() {
            failures.push(format!("case {case} ({poly}) disagrees"));
        }
    }

    verdict(
        4,
        &failures,
        "alternating derivative series equals the coefficient-wise antiderivative on 50 seeded random polynomials, exactly",
    );
}

#[test]
fn criterion_05_euler_mascheroni_digits() {
    let report = euler_mascheroni(20).unwrap();
    let value = report.value().to_rational();
    let printed = report.paper_value().unwrap().to_rational();
    let mut failures = Vec::new();

    let delta = (&value - &printed).abs();
    if delta > tol(5, 17) {
        failures.push(format!("constant delta {} exceeds 5e-17", sci(&delta)));
    }

    let complement = Rational::one() - &value;
    let complement_delta = (complement - decimal("0.4227843350984670")).abs();
    if complement_delta > tol(1, 15) {
        failures.push(format!("1 - constant delta {} exceeds 1e-15", sci(&complement_delta)));
    }

    verdict(
        5,
        &failures,
        "constant within 5e-17 of the published digits and its complement within 1e-15",
    );
}

#[test]
fn criterion_06_harmonic_table_digits() {
    // Computed at 30 digits so the comparison measures the pipeline, not
    // the final rounding grid. Rows x = 10 and x = 100000 were published
    // truncated, sit 6.8e-17 and 5.3e-17 from the true sums, and cannot
    // meet 5e-17; this test is expected to stay red on exactly those two.
    let limit = tol(5, 17);
    let mut failures = Vec::new();
    for report in harmonic_table(30).unwrap() {
        let delta = (report.value().to_rational() - report.paper_value().unwrap().to_rational()).abs();
        if delta > limit {
            failures.push(format!("x = {}: delta {} exceeds 5e-17", report.n(), sci(&delta)));
        }
    }

    verdict(6, &failures, "all six published rows within 5e-17");
}

#[test]
fn criterion_07_odd_harmonic_constant_and_identity() {
    let report = odd_harmonic_constant(30).unwrap();
    let constant = report.value().to_rational();
    let mut failures = Vec::new();

    let delta = (&constant - &report.paper_value().unwrap().to_rational()).abs();
    if delta > tol(5, 16) {
        failures.push(format!("constant delta {} exceeds 5e-16", sci(&delta)));
    }

    let gamma = euler_mascheroni(30).unwrap().value().to_rational();
    let ln2 = ln_rational(&rat(2, 1), 30).unwrap().to_rational();
    let residual = (Rational::from_integer(BigInt::from(2)) * &constant - gamma - ln2).abs();
    if residual > tol(1, 15) {
        failures.push(format!("2C - gamma - ln 2 = {} exceeds 1e-15", sci(&residual)));
    }

    verdict(
        7,
        &failures,
        "constant within 5e-16 of the published digits; 2C - gamma - ln 2 vanishes within 1e-15",
    );
}

#[test]
fn criterion_08_zeta_values() {
    let mut failures = Vec::new();

    let zeta2 = zeta_int(2, 30).unwrap();
    let delta2 = (zeta2.value().to_rational() - zeta2.paper_value().unwrap().to_rational()).abs();
    if delta2 > tol(5, 21) {
        failures.push(format!("zeta(2) delta {} exceeds 5e-21", sci(&delta2)));
    }

    let zeta3 = zeta_int(3, 30).unwrap();
    let delta3 = (zeta3.value().to_rational() - zeta3.paper_value().unwrap().to_rational()).abs();
    if delta3 > tol(5, 16) {
        failures.push(format!("zeta(3) delta {} exceeds 5e-16", sci(&delta3)));
    }

    // The published zeta(4) digits drift in the last place, so the check is
    // deliberately two-sided: loose against the print, tight against the
    // independent pi^4/90 oracle.
    let zeta4 = zeta_int(4, 30).unwrap();
    let value4 = zeta4.value().to_rational();
    let delta4 = (&value4 - &zeta4.paper_value().unwrap().to_rational()).abs();
    if delta4 > tol(1, 13) {
        failures.push(format!("zeta(4) delta vs print {} exceeds 1e-13", sci(&delta4)));
    }
    let pi = machin_pi_midpoint();
    let oracle4 = &pi * &pi * &pi * &pi / Rational::from_integer(BigInt::from(90));
    let oracle_delta4 = (&value4 - &oracle4).abs();
    if oracle_delta4 > tol(1, 20) {
        failures.push(format!("zeta(4) delta vs pi^4/90 {} exceeds 1e-20", sci(&oracle_delta4)));
    }

    verdict(
        8,
        &failures,
        "zeta(2) within 5e-21, zeta(3) within 5e-16, zeta(4) within 1e-13 of the print and 1e-20 of pi^4/90",
    );
}

#[test]
fn criterion_09_pi_from_alternating_series() {
    let report = leibniz_pi(30).unwrap();
    let mut failures = Vec::new();
    if report.n() != 20 {
        failures.push(format!("anchor n = {}, want 20", report.n()));
    }

    let delta = (report.value().to_rational() - machin_pi_midpoint()).abs();
    if delta > tol(1, 12) {
        failures.push(format!("4C delta vs pi oracle {} exceeds 1e-12", sci(&delta)));
    }

    verdict(
        9,
        &failures,
        "four times the alternating-series constant within 1e-12 of the Machin pi oracle",
    );
}

#[test]
fn criterion_10_ten_term_direct_sums() {
    // The squares entry was published truncated (..540 for ..540690..), a
    // 6.9e-16 gap no exact summation can close; expected to stay red there.
    let cases = [
        (PoleTermFamily::harmonic(), "2.9289682539682539", "harmonic"),
        (PoleTermFamily::zeta(2).unwrap(), "1.549767731166540", "squares"),
        (PoleTermFamily::zeta(3).unwrap(), "1.197531985674193", "cubes"),
    ];
    let limit = tol(5, 16);
    let mut failures = Vec::new();
    for (family, printed, label) in cases {
        let mut sum = Rational::zero();
        for x in 1..=10 {
            sum += family.evaluate(&rat(x, 1)).unwrap();
        }
        let delta = (&sum - &decimal(printed)).abs();
        if delta > limit {
            failures.push(format!(
                "{label} sum {} is {} from the printed {printed}, exceeds 5e-16",
                Real::from_rational(&sum, 16),
                sci(&delta),
            ));
        }
    }

    verdict(
        10,
        &failures,
        "harmonic, squares and cubes ten-term sums within 5e-16 of the published intermediates",
    );
}

#[test]
fn criterion_11_property_suites() {
    let mut failures = Vec::new();
    let families = [
        ("harmonic", PoleTermFamily::harmonic()),
        ("odd_harmonic", PoleTermFamily::odd_harmonic()),
        ("zeta2", PoleTermFamily::zeta(2).unwrap()),
        ("zeta3", PoleTermFamily::zeta(3).unwrap()),
        ("zeta4", PoleTermFamily::zeta(4).unwrap()),
        ("leibniz", PoleTermFamily::leibniz()),
    ];

    // Truncation determinism, plus the two pinned harmonic cut points.
    for (name, family) in &families {
        for x in [5u64, 10, 50] {
            let first = optimal_truncation(family, x, 17).unwrap();
            for _ in 0..3 {
                if optimal_truncation(family, x, 17).unwrap() != first {
                    failures.push(format!("{name} truncation at x = {x} is not deterministic"));
                    break;
                }
            }
        }
    }
    let harmonic = PoleTermFamily::harmonic();
    if optimal_truncation(&harmonic, 1, 17).unwrap() != 3 {
        failures.push("harmonic cut at x = 1 is not 3".into());
    }
    if optimal_truncation(&harmonic, 10, 17).unwrap() != 17 {
        failures.push("harmonic cut at x = 10 is not 17".into());
    }

    // Anchor independence: constants from x = 10 and x = 20 must agree to
    // within twice the looser (x = 10) first-omitted-term estimate.
    let options = SummationOptions::new(30, 17);
    for (name, family) in &families {
        let at_10 = determine_constant(family, 10, &options).unwrap();
        let at_20 = determine_constant(family, 20, &options).unwrap();
        let gap = (at_10.constant().to_rational() - at_20.constant().to_rational()).abs();
        let bound = Rational::from_integer(BigInt::from(2)) * at_10.error_estimate().to_rational();
        if gap > bound {
            failures.push(format!(
                "{name} constants from n = 10 and n = 20 differ by {}, above twice the estimate {}",
                sci(&gap),
                sci(&at_10.error_estimate().to_rational()),
            ));
        }
    }

    // Logarithm checks: pinned digits for ln 10, and the product rule at
    // the working scale for seeded random rationals.
    let ln10_delta =
        (ln_rational(&rat(10, 1), 25).unwrap().to_rational() - decimal("2.302585092994045684")).abs();
    if ln10_delta > tol(5, 19) {
        failures.push(format!("ln 10 delta {} exceeds 5e-19", sci(&ln10_delta)));
    }
    let mut rng = StdRng::seed_from_u64(0x109b);
    for _ in 0..20 {
        let a = rat(rng.gen_range(1i64..=9999), rng.gen_range(1i64..=9999));
        let b = rat(rng.gen_range(1i64..=9999), rng.gen_range(1i64..=9999));
        let product = ln_rational(&(&a * &b), 30).unwrap();
        let split = ln_rational(&a, 30).unwrap().add(&ln_rational(&b, 30).unwrap());
        let delta = product.abs_delta(&split).to_rational();
        if delta > tol(2, 29) {
            failures.push(format!("ln({a} * {b}) breaks the product rule by {}", sci(&delta)));
        }
    }

    verdict(
        11,
        &failures,
        "truncation deterministic with pinned harmonic cuts; anchors self-consistent; ln digits and product rule hold",
    );
}
