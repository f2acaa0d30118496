//! Command-line interface: determinant families, series, kernel solving,
//! degree lists, and the verification suites, with JSON, CSV, or pretty
//! output.
//!
//! Exit codes: 0 on success (and on passing verification), 1 when a
//! verification suite fails, 2 on usage errors (bad flags, malformed
//! rationals, out-of-domain parameters).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ultraheun_core::ktype::{degree_labels, ktype_crosscheck, ktype_degrees};
use ultraheun_core::poly::Poly;
use ultraheun_core::rep::{MChar, Model};
use ultraheun_core::scalar::{parse_rat, Rat};
use ultraheun_core::seqdet::{family_poly, Family};
use ultraheun_core::series::{
    hypergeom_poly, uv_coefficients, HgKind, SeriesError, UvKind,
};
use ultraheun_core::solver::{expected_dimension, m_rep_classify, solution_space, Irr};
use ultraheun_core::verify::run_suites;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Parser)]
#[command(
    name = "ultraheun",
    version,
    about = "Exact determinant families, local series solutions, kernel classification, and verification suites over Q and Q(i)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "Cay")]
    Cay,
    #[value(name = "Kraw")]
    Kraw,
    #[value(name = "Sylv")]
    Sylv,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::P => Family::P,
            FamilyArg::Q => Family::Q,
            FamilyArg::Cay => Family::Cay,
            FamilyArg::Kraw => Family::Kraw,
            FamilyArg::Sylv => Family::Sylv,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::I => Model::I,
            ModelArg::II => Model::II,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesKind {
    U,
    V,
    A,
    B,
    Cplus,
    Cminus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SigmaArg {
    Pp,
    Pm,
    Mp,
    Mm,
    #[value(name = "H")]
    H,
}

impl From<SigmaArg> for Irr {
    fn from(s: SigmaArg) -> Irr {
        match s {
            SigmaArg::Pp => Irr::Char(MChar::PP),
            SigmaArg::Pm => Irr::Char(MChar::PM),
            SigmaArg::Mp => Irr::Char(MChar::MP),
            SigmaArg::Mm => Irr::Char(MChar::MM),
            SigmaArg::H => Irr::H,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Determinants,
    Palindromic,
    Solver,
    Ktype,
    Appendix,
}

impl SuiteArg {
    fn token(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            SuiteArg::Determinants => "determinants",
            SuiteArg::Palindromic => "palindromic",
            SuiteArg::Solver => "solver",
            SuiteArg::Ktype => "ktype",
            SuiteArg::Appendix => "appendix",
        }
    }
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one member of a determinant family as a polynomial or value.
    Seq {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Index of the family member (for Sylv this is `n`).
        #[arg(long)]
        k: usize,
        /// The second argument `y` of the family (ignored for Sylv).
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        y: Rat,
        /// Evaluate at `x` instead of printing coefficients.
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        x: Option<Rat>,
    },
    /// Series or polynomial coefficients of a local solution.
    Heun {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        s: Rat,
        #[arg(long)]
        n: usize,
        /// Number of series coefficients for kinds u and v.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Exact kernel of the realized operator, with its classification.
    Sol {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        s: Rat,
        #[arg(long)]
        n: usize,
    },
    /// Degree list for one irreducible, cross-checked against the kernels.
    Ktype {
        #[arg(long, value_enum)]
        sigma: SigmaArg,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        s: Rat,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Run a verification suite and report pass/fail per check.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
}

fn poly_strings(p: &Poly<Rat>) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Serialize)]
struct SeqPolyOut {
    poly: Vec<String>,
}

#[derive(Serialize)]
struct SeqValueOut {
    value: String,
}

#[derive(Serialize)]
struct HeunOut {
    kind: String,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct SolOut {
    dim: usize,
    mrep: String,
    expected: usize,
    #[serde(rename = "match")]
    matches: bool,
    basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct KtypeOut {
    sigma: String,
    s: String,
    degrees: Vec<usize>,
    spins: Vec<String>,
    agree: bool,
    mismatches: Vec<usize>,
    literal_discrepancies: Vec<usize>,
    models_agree: bool,
}

#[derive(Serialize)]
struct VerifyCheckOut {
    suite: String,
    id: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyOut {
    status: String,
    checks: Vec<VerifyCheckOut>,
}

enum Rendered {
    /// (json, csv rows, pretty lines)
    Ready {
        json: String,
        csv: Vec<Vec<String>>,
        pretty: Vec<String>,
    },
}

fn emit(cli_format: Format, out: &Option<PathBuf>, r: Rendered) -> Result<(), String> {
    let Rendered::Ready { json, csv, pretty } = r;
    let text = match cli_format {
        Format::Json => json,
        Format::Csv => {
            let mut s = String::new();
            for row in csv {
                let quoted: Vec<String> = row
                    .iter()
                    .map(|f| {
                        if f.contains(',') || f.contains('"') {
                            format!("\"{}\"", f.replace('"', "\"\""))
                        } else {
                            f.clone()
                        }
                    })
                    .collect();
                s.push_str(&quoted.join(","));
                s.push('\n');
            }
            s.trim_end().to_string()
        }
        Format::Pretty => pretty.join("\n"),
    };
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| e.to_string()),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}").map_err(|e| e.to_string())
        }
    }
}

fn json_of<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn series_error_message(e: &SeriesError) -> String {
    format!("parameters outside the admissible domain: {e}")
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Seq { family, k, y, x } => {
            let family: Family = family.into();
            match x {
                Some(x) => {
                    let value = ultraheun_core::seqdet::family_value(family, k, &x, &y);
                    let out = SeqValueOut {
                        value: value.to_string(),
                    };
                    emit(
                        cli.format,
                        &cli.out,
                        Rendered::Ready {
                            json: json_of(&out),
                            csv: vec![vec!["value".into()], vec![out.value.clone()]],
                            pretty: vec![format!("value = {}", out.value)],
                        },
                    )?;
                }
                None => {
                    let p = family_poly(family, k, &y);
                    let out = SeqPolyOut {
                        poly: poly_strings(&p),
                    };
                    let mut csv = vec![vec!["exponent".into(), "coefficient".into()]];
                    for (e, c) in out.poly.iter().enumerate() {
                        csv.push(vec![e.to_string(), c.clone()]);
                    }
                    emit(
                        cli.format,
                        &cli.out,
                        Rendered::Ready {
                            json: json_of(&out),
                            csv,
                            pretty: vec![p.to_string_var("x")],
                        },
                    )?;
                }
            }
            Ok(0)
        }
        Cmd::Heun { kind, s, n, terms } => {
            let coeffs: Vec<String> = match kind {
                SeriesKind::U | SeriesKind::V => {
                    let count = terms.unwrap_or(n / 2 + 3);
                    let uv = match kind {
                        SeriesKind::U => uv_coefficients(UvKind::U, &s, n, count),
                        _ => uv_coefficients(UvKind::V, &s, n, count),
                    };
                    uv.iter().map(|c| c.to_string()).collect()
                }
                SeriesKind::A | SeriesKind::B | SeriesKind::Cplus | SeriesKind::Cminus => {
                    let hg = match kind {
                        SeriesKind::A => HgKind::A,
                        SeriesKind::B => HgKind::B,
                        SeriesKind::Cplus => HgKind::CPlus,
                        _ => HgKind::CMinus,
                    };
                    let p = hypergeom_poly(hg, &s, n).map_err(|e| series_error_message(&e))?;
                    poly_strings(&p)
                }
            };
            let kind_name = match kind {
                SeriesKind::U => "u",
                SeriesKind::V => "v",
                SeriesKind::A => "a",
                SeriesKind::B => "b",
                SeriesKind::Cplus => "cplus",
                SeriesKind::Cminus => "cminus",
            };
            let out = HeunOut {
                kind: kind_name.to_string(),
                coeffs,
            };
            let mut csv = vec![vec!["index".into(), "coefficient".into()]];
            for (i, c) in out.coeffs.iter().enumerate() {
                csv.push(vec![i.to_string(), c.clone()]);
            }
            let pretty = vec![format!("{}: [{}]", out.kind, out.coeffs.join(", "))];
            emit(
                cli.format,
                &cli.out,
                Rendered::Ready {
                    json: json_of(&out),
                    csv,
                    pretty,
                },
            )?;
            Ok(0)
        }
        Cmd::Sol { model, s, n } => {
            let model: Model = model.into();
            let space = solution_space(model, &s, n);
            let mrep = m_rep_classify(model, &s, n).map_err(|e| e.to_string())?;
            let expected = expected_dimension(model, &s, n);
            let out = SolOut {
                dim: space.dim(),
                mrep: mrep.token(),
                expected,
                matches: space.dim() == expected,
                basis: space
                    .basis
                    .iter()
                    .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
                    .collect(),
            };
            let mut csv = vec![
                vec!["dim".into(), out.dim.to_string()],
                vec!["mrep".into(), out.mrep.clone()],
                vec!["expected".into(), out.expected.to_string()],
                vec!["match".into(), out.matches.to_string()],
            ];
            for (i, b) in out.basis.iter().enumerate() {
                csv.push(vec![format!("basis{i}"), b.join(" ")]);
            }
            let mut pretty = vec![format!(
                "dim = {} (expected {}), decomposition = {}",
                out.dim, out.expected, out.mrep
            )];
            for p in &space.basis {
                pretty.push(format!("  {}", p.to_string_var("t")));
            }
            emit(
                cli.format,
                &cli.out,
                Rendered::Ready {
                    json: json_of(&out),
                    csv,
                    pretty,
                },
            )?;
            Ok(0)
        }
        Cmd::Ktype { sigma, s, max_n } => {
            let sigma: Irr = sigma.into();
            let degrees = ktype_degrees(&sigma, &s, max_n);
            let cross = ktype_crosscheck(&sigma, &s, max_n).map_err(|e| e.to_string())?;
            let out = KtypeOut {
                sigma: sigma.token().to_string(),
                s: s.to_string(),
                spins: degree_labels(&degrees).into_iter().map(|d| d.spin).collect(),
                degrees,
                agree: cross.agree,
                mismatches: cross.mismatches,
                literal_discrepancies: cross.literal_discrepancies,
                models_agree: cross.models_agree,
            };
            let csv = vec![
                vec!["sigma".into(), out.sigma.clone()],
                vec!["s".into(), out.s.clone()],
                vec![
                    "degrees".into(),
                    out.degrees
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ],
                vec!["agree".into(), out.agree.to_string()],
            ];
            let pretty = vec![
                format!("sigma = {}, s = {}", out.sigma, out.s),
                format!("degrees: {:?}", out.degrees),
                format!("spins:   [{}]", out.spins.join(", ")),
                format!(
                    "crosscheck: agree = {}, models_agree = {}, literal-set discrepancies at n in {:?}",
                    out.agree, out.models_agree, out.literal_discrepancies
                ),
            ];
            emit(
                cli.format,
                &cli.out,
                Rendered::Ready {
                    json: json_of(&out),
                    csv,
                    pretty,
                },
            )?;
            Ok(0)
        }
        Cmd::Verify { suite, max_n } => {
            let reports =
                run_suites(suite.token(), max_n).expect("suite names are validated by clap");
            let all_pass = reports.iter().all(|r| r.pass());
            let mut checks = Vec::new();
            for r in &reports {
                for c in &r.checks {
                    checks.push(VerifyCheckOut {
                        suite: r.suite.clone(),
                        id: c.id.clone(),
                        pass: c.pass,
                        detail: c.detail.clone(),
                    });
                }
            }
            let out = VerifyOut {
                status: if all_pass { "pass" } else { "fail" }.to_string(),
                checks,
            };
            let mut csv = vec![vec![
                "suite".into(),
                "check".into(),
                "pass".into(),
                "detail".into(),
            ]];
            for c in &out.checks {
                csv.push(vec![
                    c.suite.clone(),
                    c.id.clone(),
                    c.pass.to_string(),
                    c.detail.clone(),
                ]);
            }
            let mut pretty = Vec::new();
            for c in &out.checks {
                pretty.push(format!(
                    "[{}] {}/{} — {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.suite,
                    c.id,
                    c.detail
                ));
            }
            pretty.push(format!("overall: {}", out.status));
            emit(
                cli.format,
                &cli.out,
                Rendered::Ready {
                    json: json_of(&out),
                    csv,
                    pretty,
                },
            )?;
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
