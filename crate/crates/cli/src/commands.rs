//! One function per subcommand. Each returns the rendered output; the binary
//! only prints and maps errors to exit codes.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use lehmer_core::analytics::{self, CurvePoint, DensityReport, OmegaStats, MAX_ROOT_PRIME};
use lehmer_core::arith::Factorization;
use lehmer_core::lehmer::{FieldInvariants, LehmerField, MDecomposition};
use lehmer_core::polya::{MonogenicityReport, PolyaReport};
use lehmer_core::polyring::{lehmer_quartic, IntPolynomial};

use crate::error::CliError;
use crate::format::{render_pairs, Format};
use crate::sweep;

/// Rendered command output. `failed` marks partial output that still has to
/// exit with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub body: String,
    pub failed: bool,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Rendered { body, failed: false }
    }
}

/// Everything `classify` reports about one `K_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub n: i128,
    pub polynomial: Vec<i128>,
    pub m: u128,
    pub factorization: Factorization,
    pub decomposition: MDecomposition,
    pub field: FieldInvariants,
    pub polya: PolyaReport,
    pub monogenicity: MonogenicityReport,
}

impl ClassifyReport {
    pub fn compute(n: i128) -> Result<Self, CliError> {
        let field = LehmerField::new(n)?;
        Ok(ClassifyReport {
            n,
            polynomial: field.quintic().poly.coeffs().to_vec(),
            m: field.m(),
            factorization: field.factorization().clone(),
            decomposition: field.decomposition(),
            field: field.invariants()?,
            polya: field.classify()?,
            monogenicity: field.monogenicity_report()?,
        })
    }

    fn pairs(&self) -> Vec<(String, String)> {
        let d = &self.decomposition;
        let p = &self.polya;
        let mono = &self.monogenicity;
        let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
        let ramified: Vec<String> =
            self.field.ramified_primes.iter().map(|p| p.to_string()).collect();
        let poly = IntPolynomial::new(self.polynomial.clone());
        vec![
            ("n".into(), self.n.to_string()),
            ("f_n".into(), poly.to_string()),
            ("m_n".into(), self.m.to_string()),
            ("factorization".into(), self.factorization.to_string()),
            (
                "decomposition".into(),
                format!("5^{} * A * B^2 with A = {}, B = {}", d.b, d.simple_part, d.square_part),
            ),
            ("cube part".into(), d.cube.to_string()),
            ("cube-free".into(), yes_no(d.is_cube_free)),
            ("conductor".into(), self.field.conductor.to_string()),
            ("field discriminant".into(), self.field.field_disc.to_string()),
            ("ramified primes".into(), ramified.join(" ")),
            ("|Po|".into(), p.po_order.to_string()),
            ("Po structure".into(), format!("(Z/5Z)^{}", p.po_rank)),
            ("verdict".into(), if p.is_polya { "Polya" } else { "non-Polya" }.to_string()),
            (
                "verdict basis".into(),
                if p.theorem1_applies {
                    "cube-free m_n"
                } else {
                    "conductor formula (m_n not cube-free)"
                }
                .to_string(),
            ),
            ("genus number".into(), p.genus_number.to_string()),
            ("Polya number bound".into(), p.polya_number_bound.to_string()),
            ("theta index".into(), mono.theta_index.to_string()),
            ("gcd(theta index, 6)".into(), mono.gcd_with_six.to_string()),
            (
                "monogenic".into(),
                if mono.non_monogenic { "no" } else { "undetermined" }.to_string(),
            ),
            ("field index is 1".into(), yes_no(mono.field_index_one)),
        ]
    }
}

/// `classify <n>`.
pub fn cmd_classify(n: i128, format: Format) -> Result<Rendered, CliError> {
    let report = ClassifyReport::compute(n)?;
    let body = match format {
        Format::Json => json_line(&report)?,
        _ => render_pairs(&report.pairs(), format)?,
    };
    Ok(Rendered::ok(body))
}

/// One row of the non-Pólya table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Row label: the multiplier (field `K_{5n}`), or the field index itself
    /// in raw mode.
    pub n: i128,
    pub m: u128,
    pub cube_part: u128,
    /// `k` with `|Po| = 5^k`.
    pub po_order_exponent: u32,
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonRow {
    Row(TableRow),
    Error { n: i128, error: String },
}

/// One table row, or the error that stopped it, keyed by `n`.
pub type RowResult = (i128, Result<TableRow, CliError>);

/// Computes the rows for `from..=to`. Outside raw mode the field is `K_{5n}`
/// and `n = 0` is skipped.
pub fn table_rows(from: i128, to: i128, raw: bool) -> Result<Vec<RowResult>, CliError> {
    if from > to {
        return Err(CliError::usage(format!("--from {from} is greater than --to {to}")));
    }
    let labels: Vec<i128> = (from..=to).filter(|&n| raw || n != 0).collect();
    let indices = labels
        .iter()
        .map(|&n| if raw { Some(n) } else { n.checked_mul(5) })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CliError::usage("table range overflows"))?;
    let fields = sweep::fields(&indices);
    Ok(labels
        .into_iter()
        .zip(fields)
        .map(|(n, field)| {
            let row = field.map_err(CliError::from).and_then(|f| {
                let report = f.classify()?;
                Ok(TableRow {
                    n,
                    m: f.m(),
                    cube_part: f.factorization().cube_part(),
                    po_order_exponent: report.po_rank,
                })
            });
            (n, row)
        })
        .collect())
}

/// `table --from a --to b`.
pub fn cmd_table(from: i128, to: i128, raw: bool, format: Format) -> Result<Rendered, CliError> {
    let rows = table_rows(from, to, raw)?;
    if format == Format::Json {
        let failed = rows.iter().any(|(_, r)| r.is_err());
        let json: Vec<JsonRow> = rows
            .into_iter()
            .map(|(n, r)| match r {
                Ok(row) => JsonRow::Row(row),
                Err(e) => JsonRow::Error { n, error: e.to_string() },
            })
            .collect();
        return Ok(Rendered { body: json_line(&json)?, failed });
    }
    let rows = rows.into_iter().map(|(_, r)| r).collect::<Result<Vec<_>, _>>()?;
    let (m_head, c_head, po_head) =
        if raw { ("m_n", "C(m_n)", "#Po(K_n)") } else { ("m_5n", "C(m_5n)", "#Po(K_5n)") };
    let body = match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(["n", "m", "cube_part", "po_order"])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.m.to_string(),
                    r.cube_part.to_string(),
                    r.po_order_exponent.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))?
        }
        Format::Md => {
            let mut s =
                format!("| n | {m_head} | {c_head} | {po_head} |\n|---:|---:|---:|:---:|\n");
            for r in &rows {
                writeln!(s, "| {} | {} | {} | 5^{} |", r.n, r.m, r.cube_part, r.po_order_exponent)
                    .unwrap();
            }
            s
        }
        _ => {
            let mut s = format!("{:>6} {:>14} {:>10} {:>10}\n", "n", m_head, c_head, po_head);
            for r in &rows {
                writeln!(
                    s,
                    "{:>6} {:>14} {:>10} {:>10}",
                    r.n,
                    r.m,
                    r.cube_part,
                    format!("5^{}", r.po_order_exponent)
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Rendered::ok(body))
}

/// Parses `c4,c3,c2,c1,c0` (highest degree first).
pub fn parse_poly(spec: &str) -> Result<IntPolynomial, CliError> {
    let coeffs = spec
        .split(',')
        .map(|c| c.trim().parse::<i128>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::usage(format!("bad coefficient list {spec:?}: {e}")))?;
    if coeffs.len() != 5 {
        return Err(CliError::usage("expected five coefficients c4,c3,c2,c1,c0"));
    }
    Ok(IntPolynomial::new(coeffs))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub polynomial: Vec<i128>,
    pub bound: u128,
    pub points: Vec<CurvePoint>,
}

/// `curve [--poly ...]`.
pub fn cmd_curve(poly: Option<&str>, format: Format) -> Result<Rendered, CliError> {
    let f = match poly {
        Some(spec) => parse_poly(spec)?,
        None => lehmer_quartic(),
    };
    let (bound, points) = sweep::curve_points(&f).map_err(|e| match e {
        lehmer_core::Error::PerfectSquare => CliError::usage(format!(
            "{f} is a perfect square; the curve has infinitely many integral points"
        )),
        lehmer_core::Error::InvalidArgument(msg) => CliError::Usage(msg),
        e => e.into(),
    })?;
    let report = CurveReport { polynomial: f.coeffs().to_vec(), bound, points };
    let body = match format {
        Format::Json => json_line(&report)?,
        Format::Csv | Format::Md => {
            let rows: Vec<(String, String)> =
                report.points.iter().map(|p| (p.x.to_string(), p.y.to_string())).collect();
            render_table(&["x", "y"], &rows, format)?
        }
        Format::Text => {
            let mut s = format!("curve: y^2 = {f}\nscanned: |x| <= {bound}\n");
            writeln!(s, "integral points (y >= 0; (x, -y) also solves): {}", report.points.len())
                .unwrap();
            for p in &report.points {
                writeln!(s, "  ({}, {})", p.x, p.y).unwrap();
            }
            s
        }
    };
    Ok(Rendered::ok(body))
}

fn ratio_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Serialize)]
struct DensityJson<'a> {
    #[serde(flatten)]
    report: &'a DensityReport,
    empirical_density_f64: f64,
    truncated_product_f64: f64,
    #[serde(with = "lehmer_core::serde_decimal::big_rational")]
    hel_constant: BigRational,
    hel_constant_f64: f64,
}

/// `density --limit L --cutoff P`.
pub fn cmd_density(limit: u64, cutoff: u64, format: Format) -> Result<Rendered, CliError> {
    if limit < 10 {
        return Err(CliError::usage("--limit must be at least 10"));
    }
    if !(2..=MAX_ROOT_PRIME).contains(&cutoff) {
        return Err(CliError::usage(format!("--cutoff must lie in 2..={MAX_ROOT_PRIME}")));
    }
    let report = sweep::cubefree_density(limit, cutoff)?;
    let hel = analytics::hel_constant(cutoff)?;
    let body = match format {
        Format::Json => json_line(&DensityJson {
            report: &report,
            empirical_density_f64: ratio_f64(&report.empirical_density),
            truncated_product_f64: ratio_f64(&report.truncated_product),
            hel_constant_f64: ratio_f64(&hel),
            hel_constant: hel,
        })?,
        Format::Csv | Format::Md => {
            let rows: Vec<(String, String)> =
                report.root_counts.iter().map(|(p, r)| (p.to_string(), r.to_string())).collect();
            render_table(&["p", "rho_p3"], &rows, format)?
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "g(k) = 25k^4 + 25k^3 + 15k^2 + 5k + 1, k = 1..={limit}").unwrap();
            writeln!(s, "cube-free values: {} of {}", report.cubefree_count, report.tested)
                .unwrap();
            writeln!(
                s,
                "empirical density: {:.6} ({})",
                ratio_f64(&report.empirical_density),
                report.empirical_density
            )
            .unwrap();
            writeln!(
                s,
                "truncated product over p <= {cutoff}: {:.6} ({})",
                ratio_f64(&report.truncated_product),
                report.truncated_product
            )
            .unwrap();
            writeln!(
                s,
                "prime-argument constant c' over p <= {cutoff}: {:.6} ({})",
                ratio_f64(&hel),
                hel
            )
            .unwrap();
            writeln!(s, "rho(p^3):").unwrap();
            for (p, r) in &report.root_counts {
                writeln!(s, "  {p:>7} {r}").unwrap();
            }
            s
        }
    };
    Ok(Rendered::ok(body))
}

#[derive(Serialize)]
struct OmegaJson<'a> {
    #[serde(flatten)]
    stats: &'a OmegaStats,
    mean_omega_f64: f64,
}

/// `omega --limit L`.
pub fn cmd_omega(limit: u64, format: Format) -> Result<Rendered, CliError> {
    if limit < 2 {
        return Err(CliError::usage("--limit must be at least 2"));
    }
    let stats = sweep::omega_over_primes(limit)?;
    let failed = !stats.failed.is_empty();
    let mean = ratio_f64(&stats.mean_omega);
    let body = match format {
        Format::Json => json_line(&OmegaJson { stats: &stats, mean_omega_f64: mean })?,
        Format::Csv | Format::Md => {
            let rows: Vec<(String, String)> =
                stats.samples.iter().map(|(p, w)| (p.to_string(), w.to_string())).collect();
            render_table(&["p", "omega"], &rows, format)?
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "omega(m_5p) for primes p <= {limit}").unwrap();
            for (p, w) in &stats.samples {
                writeln!(s, "  {p:>7} {w}").unwrap();
            }
            writeln!(s, "samples: {}", stats.samples.len()).unwrap();
            writeln!(s, "mean omega: {mean:.6} ({})", stats.mean_omega).unwrap();
            writeln!(s, "mean ln ln p: {:.6}", stats.mean_loglog).unwrap();
            if failed {
                let list: Vec<String> = stats.failed.iter().map(|p| p.to_string()).collect();
                writeln!(s, "factorization failed for p = {}", list.join(" ")).unwrap();
            }
            s
        }
    };
    Ok(Rendered { body, failed })
}

fn json_line<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

fn render_table(
    header: &[&str; 2],
    rows: &[(String, String)],
    format: Format,
) -> Result<String, CliError> {
    crate::format::render_rows(header, rows, format)
}
