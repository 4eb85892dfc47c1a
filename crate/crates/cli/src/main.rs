//! Command-line front end for the summation engine.
//!
//! Every subcommand is a pure function of its arguments: identical argv
//! produces byte-identical output. Text output is one `label = value` line
//! per datum; JSON output is a single object whose numeric fields are
//! decimal strings, never binary floats.
//!
//! Exit codes: 0 success, 1 domain error (poles, divergence, bad literals),
//! 2 usage error (unknown commands, flags, or flag values).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use emsum::pipelines::NamedConstantReport;
use emsum::polynomial::newton_refine;
use emsum::rational::{parse_rational, rat_abs, rat_pow, Rational};
use emsum::real::GUARD_DIGITS;
use emsum::summation::{
    determine_constant, em_tail, infinite_sum, optimal_truncation, InfiniteSum, SummationOptions,
};
use emsum::{
    euler_mascheroni, harmonic_partial, harmonic_table, leibniz_pi, odd_harmonic_constant,
    power_sum, zeta_int, EmCoefficientTable, PoleTermFamily, PowerSumPolynomial,
    RationalPolynomial, Real,
};

#[derive(Parser)]
#[command(
    name = "emsum",
    version,
    about = "Exact Euler-Maclaurin summation: coefficient tables, power sums, asymptotic tails, and high-precision series constants"
)]
struct Cli {
    /// Fractional digits for rendered values (minimum 6).
    #[arg(
        long,
        global = true,
        env = "EMSUM_DIGITS",
        default_value_t = 30,
        value_parser = clap::value_parser!(u32).range(6..)
    )]
    digits: u32,

    /// Cap on the number of derivative terms in asymptotic tails.
    #[arg(
        long,
        global = true,
        default_value_t = 17,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    max_terms: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum NumberFormat {
    Fraction,
    Decimal,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    Harmonic,
    OddHarmonic,
    Zeta2,
    Zeta3,
    Zeta4,
    Leibniz,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WhichTable {
    Faulhaber,
    Harmonic,
    Coeffs,
}

#[derive(Subcommand)]
enum Command {
    /// Print the leading summation coefficients a[0], a[1], ...
    Coeffs {
        /// Number of entries.
        #[arg(long, default_value_t = 17)]
        count: usize,
        /// Render entries as exact fractions or decimals.
        #[arg(long, value_enum, default_value_t = NumberFormat::Fraction)]
        format: NumberFormat,
    },
    /// Closed-form polynomial for the power sum 1^n + ... + x^n.
    Faulhaber {
        #[arg(long)]
        power: u32,
    },
    /// Evaluate the power sum 1^n + ... + x^n exactly.
    Powersum {
        #[arg(long)]
        power: u32,
        #[arg(long)]
        upto: u64,
    },
    /// Refine a polynomial root by Newton iteration in exact rationals.
    Newton {
        /// Coefficients, lowest power first, e.g. -20,-3,0,1.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Starting point, an integer or fraction.
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        /// Iteration cap.
        #[arg(long, default_value_t = 12)]
        iters: usize,
    },
    /// Taylor-shift a polynomial: p(x) -> p(x + by).
    Shift {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        by: String,
    },
    /// Antiderivative of a polynomial via the alternating derivative series.
    Quadrature {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Expansion pieces of a term family at a sample point.
    Tail {
        /// Family literal, e.g. "1/(4x-3)^1; -1/(4x-1)^1".
        #[arg(long, allow_hyphen_values = true)]
        family: String,
        #[arg(long)]
        x: u64,
    },
    /// Determine a summation constant for a named series or a family literal.
    Constant {
        /// One of the named series.
        #[arg(long, value_enum, conflicts_with = "family")]
        series: Option<SeriesName>,
        /// A family literal instead of a named series.
        #[arg(long, requires = "n", allow_hyphen_values = true)]
        family: Option<String>,
        /// Anchor: number of terms summed exactly (family literals only;
        /// named series pin their own anchors).
        #[arg(long, conflicts_with = "series")]
        n: Option<u64>,
        /// Report the infinite sum instead of the constant; diverging
        /// families are a domain error.
        #[arg(long)]
        infinite: bool,
    },
    /// Partial sum of the harmonic series at x.
    Harmonic {
        #[arg(long)]
        x: u64,
    },
    /// Reference tables: power-sum polynomials, the harmonic table, or the
    /// coefficient table.
    Table {
        #[arg(long, value_enum)]
        which: WhichTable,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<emsum::Error> for Failure {
    fn from(error: emsum::Error) -> Failure {
        Failure::Domain(error.to_string())
    }
}

/// The one JSON shape every command renders to. Field order is fixed, and
/// every computed number is a decimal (or fraction) string.
#[derive(Serialize)]
struct JsonReport {
    command: &'static str,
    parameters: serde_json::Value,
    value: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    paper_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<String>,
    truncation_k: usize,
    error_estimate: String,
    digits: u32,
}

impl JsonReport {
    /// A report for an exact computation: no truncation, zero error.
    fn exact(
        command: &'static str,
        parameters: serde_json::Value,
        value: serde_json::Value,
        digits: u32,
    ) -> JsonReport {
        JsonReport {
            command,
            parameters,
            value,
            paper_value: None,
            delta: None,
            truncation_k: 0,
            error_estimate: "0".into(),
            digits,
        }
    }
}

struct Rendered {
    text: String,
    json: JsonReport,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => {
            match cli.output {
                Output::Text => print!("{}", rendered.text),
                Output::Json => {
                    let body = serde_json::to_string_pretty(&rendered.json)
                        .expect("reports serialize");
                    println!("{body}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Rendered, Failure> {
    let digits = cli.digits;
    let options = SummationOptions::new(digits, cli.max_terms as usize);
    match &cli.command {
        Command::Coeffs { count, format } => coeffs(*count, *format, digits),
        Command::Faulhaber { power } => faulhaber(*power, digits),
        Command::Powersum { power, upto } => powersum(*power, *upto, digits),
        Command::Newton { poly, x0, iters } => newton(poly, x0, *iters, digits),
        Command::Shift { poly, by } => shift(poly, by, digits),
        Command::Quadrature { poly } => quadrature(poly, digits),
        Command::Tail { family, x } => tail(family, *x, &options),
        Command::Constant { series, family, n, infinite } => {
            constant(series.as_ref(), family.as_deref(), *n, *infinite, &options)
        }
        Command::Harmonic { x } => harmonic(*x, &options),
        Command::Table { which } => table(*which, &options),
    }
}

fn coeffs(count: usize, format: NumberFormat, digits: u32) -> Result<Rendered, Failure> {
    let table = EmCoefficientTable::generate(count);
    let values: Vec<String> = match format {
        NumberFormat::Fraction => table.as_slice().iter().map(|c| c.to_string()).collect(),
        NumberFormat::Decimal => (0..count)
            .map(|k| table.decimal(k, digits).map(|r| r.to_string()))
            .collect::<Result<_, _>>()?,
    };
    let mut text = String::new();
    for (k, value) in values.iter().enumerate() {
        let _ = writeln!(text, "a[{k}] = {value}");
    }
    let format_name = match format {
        NumberFormat::Fraction => "fraction",
        NumberFormat::Decimal => "decimal",
    };
    let json = JsonReport::exact(
        "coeffs",
        serde_json::json!({ "count": count, "format": format_name }),
        serde_json::json!(values),
        digits,
    );
    Ok(Rendered { text, json })
}

fn faulhaber(power: u32, digits: u32) -> Result<Rendered, Failure> {
    let sum = PowerSumPolynomial::new(power);
    let csv = sum.polynomial().to_string();
    let terms = sum.to_term_string();
    let text = format!("polynomial = {csv}\nterms = {terms}\n");
    let json = JsonReport::exact(
        "faulhaber",
        serde_json::json!({ "power": power }),
        serde_json::json!(csv),
        digits,
    );
    Ok(Rendered { text, json })
}

fn powersum(power: u32, upto: u64, digits: u32) -> Result<Rendered, Failure> {
    let value = power_sum(power, upto);
    let text = format!("sum = {value}\n");
    let json = JsonReport::exact(
        "powersum",
        serde_json::json!({ "power": power, "upto": upto }),
        serde_json::json!(value.to_string()),
        digits,
    );
    Ok(Rendered { text, json })
}

fn newton(poly: &str, x0: &str, iters: usize, digits: u32) -> Result<Rendered, Failure> {
    let poly: RationalPolynomial = poly.parse().map_err(Failure::from)?;
    let start = parse_rational(x0)?;
    let tol = Real::from_rational(&rat_pow(&Rational::from_integer(10.into()), -(digits as i64))?, digits);
    let state = newton_refine(&poly, start, &tol, iters)?;
    let residual = Real::from_rational(&rat_abs(state.residual()), digits + GUARD_DIGITS);
    let mut text = String::new();
    let _ = writeln!(text, "root = {}", state.current());
    let _ = writeln!(text, "residual = {residual}");
    let _ = writeln!(text, "iterations = {}", state.iterations());
    let json = JsonReport {
        command: "newton",
        parameters: serde_json::json!({
            "poly": poly.to_string(),
            "x0": x0,
            "iters": iters,
        }),
        value: serde_json::json!(state.current().to_string()),
        paper_value: None,
        delta: None,
        truncation_k: state.iterations(),
        error_estimate: residual.to_string(),
        digits,
    };
    Ok(Rendered { text, json })
}

fn shift(poly: &str, by: &str, digits: u32) -> Result<Rendered, Failure> {
    let poly: RationalPolynomial = poly.parse().map_err(Failure::from)?;
    let by = parse_rational(by)?;
    let shifted = poly.taylor_shift(&by);
    let text = format!("shifted = {shifted}\n");
    let json = JsonReport::exact(
        "shift",
        serde_json::json!({ "poly": poly.to_string(), "by": by.to_string() }),
        serde_json::json!(shifted.to_string()),
        digits,
    );
    Ok(Rendered { text, json })
}

fn quadrature(poly: &str, digits: u32) -> Result<Rendered, Failure> {
    let poly: RationalPolynomial = poly.parse().map_err(Failure::from)?;
    let anti = poly.quadrature_series();
    let text = format!("antiderivative = {anti}\n");
    let json = JsonReport::exact(
        "quadrature",
        serde_json::json!({ "poly": poly.to_string() }),
        serde_json::json!(anti.to_string()),
        digits,
    );
    Ok(Rendered { text, json })
}

fn tail(family: &str, x: u64, options: &SummationOptions) -> Result<Rendered, Failure> {
    let family: PoleTermFamily = family.parse().map_err(Failure::from)?;
    // One extra term so the first omitted term is on hand for the estimate.
    let tail = em_tail(&family, x, options.max_terms + 1, options.digits)?;
    let k = optimal_truncation(&family, x, options.max_terms)?;
    let estimate = Real::from_rational(
        &rat_abs(&tail.derivative_fractions()[k]),
        options.digits + GUARD_DIGITS,
    );
    let value = tail.truncated_value(k);
    let mut text = String::new();
    let _ = writeln!(text, "integral = {}", tail.integral_part());
    let _ = writeln!(text, "half = {}", tail.half_term());
    for (i, term) in tail.derivative_terms().iter().take(options.max_terms).enumerate() {
        let _ = writeln!(text, "term[{}] = {term}", i + 1);
    }
    let _ = writeln!(text, "value = {value}");
    let _ = writeln!(text, "truncation_k = {k}");
    let _ = writeln!(text, "error_estimate = {estimate}");
    let json = JsonReport {
        command: "tail",
        parameters: serde_json::json!({
            "family": family.to_string(),
            "x": x,
            "max_terms": options.max_terms,
        }),
        value: serde_json::json!(value.to_string()),
        paper_value: None,
        delta: None,
        truncation_k: k,
        error_estimate: estimate.to_string(),
        digits: options.digits,
    };
    Ok(Rendered { text, json })
}

fn series_family(series: SeriesName) -> (PoleTermFamily, u64, &'static str) {
    match series {
        SeriesName::Harmonic => (PoleTermFamily::harmonic(), 10, "harmonic"),
        SeriesName::OddHarmonic => (PoleTermFamily::odd_harmonic(), 10, "odd-harmonic"),
        SeriesName::Zeta2 => (PoleTermFamily::zeta(2).expect("static"), 10, "zeta2"),
        SeriesName::Zeta3 => (PoleTermFamily::zeta(3).expect("static"), 10, "zeta3"),
        SeriesName::Zeta4 => (PoleTermFamily::zeta(4).expect("static"), 10, "zeta4"),
        SeriesName::Leibniz => (PoleTermFamily::leibniz(), 20, "leibniz"),
    }
}

fn named_report(series: SeriesName, digits: u32) -> Result<NamedConstantReport, Failure> {
    let report = match series {
        SeriesName::Harmonic => euler_mascheroni(digits)?,
        SeriesName::OddHarmonic => odd_harmonic_constant(digits)?,
        SeriesName::Zeta2 => zeta_int(2, digits)?,
        SeriesName::Zeta3 => zeta_int(3, digits)?,
        SeriesName::Zeta4 => zeta_int(4, digits)?,
        SeriesName::Leibniz => leibniz_pi(digits)?,
    };
    Ok(report)
}

fn report_rendered(
    command: &'static str,
    parameters: serde_json::Value,
    report: &NamedConstantReport,
) -> Rendered {
    let mut text = String::new();
    let _ = writeln!(text, "name = {}", report.name());
    let _ = writeln!(text, "n = {}", report.n());
    let _ = writeln!(text, "value = {}", report.value());
    if let Some(paper) = report.paper_value() {
        let _ = writeln!(text, "paper_value = {paper}");
    }
    if let Some(delta) = report.abs_delta() {
        let _ = writeln!(text, "delta = {delta}");
    }
    let _ = writeln!(text, "truncation_k = {}", report.truncation_k());
    let _ = writeln!(text, "error_estimate = {}", report.error_estimate());
    let _ = writeln!(text, "digits = {}", report.digits());
    let json = JsonReport {
        command,
        parameters,
        value: serde_json::json!(report.value().to_string()),
        paper_value: report.paper_value().map(|p| p.to_string()),
        delta: report.abs_delta().map(|d| d.to_string()),
        truncation_k: report.truncation_k(),
        error_estimate: report.error_estimate().to_string(),
        digits: report.digits(),
    };
    Rendered { text, json }
}

fn constant(
    series: Option<&SeriesName>,
    family: Option<&str>,
    n: Option<u64>,
    infinite: bool,
    options: &SummationOptions,
) -> Result<Rendered, Failure> {
    match (series, family) {
        (Some(series), None) => {
            if infinite {
                let (family, anchor, label) = series_family(*series);
                let anchored = determine_constant(&family, anchor, options)?;
                let value = match infinite_sum(&family, anchored.constant()) {
                    InfiniteSum::Convergent(value) => value,
                    InfiniteSum::Divergent => {
                        return Err(Failure::Domain(format!(
                            "the {label} series diverges; no finite sum exists"
                        )))
                    }
                };
                let mut text = String::new();
                let _ = writeln!(text, "name = {label}");
                let _ = writeln!(text, "value = {value}");
                let _ = writeln!(text, "truncation_k = {}", anchored.truncation_k());
                let _ = writeln!(text, "error_estimate = {}", anchored.error_estimate());
                let _ = writeln!(text, "digits = {}", options.digits);
                let json = JsonReport {
                    command: "constant",
                    parameters: serde_json::json!({
                        "series": label,
                        "n": anchored.n(),
                        "max_terms": options.max_terms,
                        "infinite": true,
                    }),
                    value: serde_json::json!(value.to_string()),
                    paper_value: None,
                    delta: None,
                    truncation_k: anchored.truncation_k(),
                    error_estimate: anchored.error_estimate().to_string(),
                    digits: options.digits,
                };
                Ok(Rendered { text, json })
            } else {
                let (_, _, label) = series_family(*series);
                let report = named_report(*series, options.digits)?;
                let parameters = serde_json::json!({
                    "series": label,
                    "n": report.n(),
                    "max_terms": options.max_terms,
                });
                Ok(report_rendered("constant", parameters, &report))
            }
        }
        (None, Some(literal)) => {
            let family: PoleTermFamily = literal.parse().map_err(Failure::from)?;
            let anchor = n.expect("clap enforces --n with --family");
            let result = determine_constant(&family, anchor, options)?;
            let value = if infinite {
                match infinite_sum(&family, result.constant()) {
                    InfiniteSum::Convergent(value) => value,
                    InfiniteSum::Divergent => {
                        return Err(Failure::Domain(
                            "the family diverges; no finite sum exists".into(),
                        ))
                    }
                }
            } else {
                result.constant().clone()
            };
            let mut text = String::new();
            let _ = writeln!(text, "family = {family}");
            let _ = writeln!(text, "n = {}", result.n());
            let _ = writeln!(text, "value = {value}");
            let _ = writeln!(text, "truncation_k = {}", result.truncation_k());
            let _ = writeln!(text, "error_estimate = {}", result.error_estimate());
            let _ = writeln!(text, "digits = {}", options.digits);
            let json = JsonReport {
                command: "constant",
                parameters: serde_json::json!({
                    "family": family.to_string(),
                    "n": anchor,
                    "max_terms": options.max_terms,
                    "infinite": infinite,
                }),
                value: serde_json::json!(value.to_string()),
                paper_value: None,
                delta: None,
                truncation_k: result.truncation_k(),
                error_estimate: result.error_estimate().to_string(),
                digits: options.digits,
            };
            Ok(Rendered { text, json })
        }
        _ => Err(Failure::Usage(
            "pass exactly one of --series or --family (with --n)".into(),
        )),
    }
}

fn harmonic(x: u64, options: &SummationOptions) -> Result<Rendered, Failure> {
    let report = harmonic_partial(x, options.digits)?;
    let parameters = serde_json::json!({
        "x": x,
        "max_terms": options.max_terms,
    });
    Ok(report_rendered("harmonic", parameters, &report))
}

fn table(which: WhichTable, options: &SummationOptions) -> Result<Rendered, Failure> {
    match which {
        WhichTable::Coeffs => {
            let mut rendered = coeffs(17, NumberFormat::Fraction, options.digits)?;
            rendered.json.command = "table";
            rendered.json.parameters = serde_json::json!({ "which": "coeffs" });
            Ok(rendered)
        }
        WhichTable::Faulhaber => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for power in 1..=16u32 {
                let sum = PowerSumPolynomial::new(power);
                let terms = sum.to_term_string();
                let _ = writeln!(text, "S[{power}] = {terms}");
                rows.push(terms);
            }
            let json = JsonReport::exact(
                "table",
                serde_json::json!({ "which": "faulhaber" }),
                serde_json::json!(rows),
                options.digits,
            );
            Ok(Rendered { text, json })
        }
        WhichTable::Harmonic => {
            let reports = harmonic_table(options.digits)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for report in &reports {
                let _ = writeln!(text, "S({}) = {}", report.n(), report.value());
                rows.push(serde_json::json!({
                    "x": report.n(),
                    "value": report.value().to_string(),
                    "paper_value": report.paper_value().map(|p| p.to_string()),
                    "delta": report.abs_delta().map(|d| d.to_string()),
                    "truncation_k": report.truncation_k(),
                }));
            }
            let json = JsonReport {
                command: "table",
                parameters: serde_json::json!({ "which": "harmonic" }),
                value: serde_json::json!(rows),
                paper_value: None,
                delta: None,
                truncation_k: 0,
                error_estimate: "0".into(),
                digits: options.digits,
            };
            Ok(Rendered { text, json })
        }
    }
}
