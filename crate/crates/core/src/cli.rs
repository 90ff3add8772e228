//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing claim, 2 on usage
//! or engine errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::MatrixOrdering;
use crate::fan::{cone_of_basis, fan_of, groebner_fan};
use crate::figures::render_figures;
use crate::groebner::buchberger;
use crate::json::{groebner_fan_to_json, marked_basis_to_json};
use crate::nash::{jn_generators, nash_fan, verify_paper, A3Context};
use crate::semigroup::AffineSemigroup;
use crate::{Cone, LatticeVector, QMarkedBasis, QPolynomial, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "nashfan", version, about = "Gröbner fans of J_n and higher Nash blowups of toric surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced marked Gröbner basis of J_n
    Gb(GbArgs),
    /// Gröbner fan of J_n over σ
    Fan(GbArgs),
    /// Singularity verdict for the normalized n-th Nash blowup
    Nash(NashArgs),
    /// Check the structural claims about GB(J_n) on A3 for n = 1..n_max
    Verify(VerifyArgs),
    /// SVG diagram of P_n and D_n on A3
    Figures(FigureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Args, Debug)]
pub struct GbArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Support cone σ as x1,y1,x2,y2 (default: the A3 cone 0,1,4,-3)
    #[arg(long, value_parser = parse_cone, allow_hyphen_values = true)]
    pub cone: Option<Cone>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct NashArgs {
    #[arg(long, value_parser = parse_cone, allow_hyphen_values = true)]
    pub cone: Cone,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

/// Parses "x1,y1,x2,y2" into a cone.
pub fn parse_cone(s: &str) -> Result<Cone, String> {
    let nums: Vec<i64> =
        s.split(',').map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"))).collect::<Result<_, _>>()?;
    let [x1, y1, x2, y2] = nums[..] else {
        return Err(format!("expected four integers x1,y1,x2,y2, got {}", nums.len()));
    };
    Cone::new(LatticeVector::new(x1, y1), LatticeVector::new(x2, y2)).map_err(|e| e.to_string())
}

struct Failure(String);

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure(e.to_string())
    }
}

/// Semigroup and ordering for a support cone; A3 with its standard ordering by default.
fn setup(cone: Option<&Cone>) -> Result<(Arc<AffineSemigroup>, MatrixOrdering), Failure> {
    match cone {
        None => {
            let a3 = A3Context::new();
            Ok((a3.semigroup().clone(), a3.ordering().clone()))
        }
        Some(sigma) => {
            let sg = Arc::new(AffineSemigroup::from_support_cone(sigma));
            let ord = MatrixOrdering::new(&sg, vec![*sigma.ray1(), *sigma.ray2()])?;
            Ok((sg, ord))
        }
    }
}

pub fn basis_text(b: &QMarkedBasis) -> String {
    let ord = b.ordering();
    let mut out = String::new();
    for e in b.elements() {
        let line = QPolynomial::render_terms(ord.sorted_terms(&e.poly), Some(&e.mark));
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn emit(out: &Option<String>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure(format!("cannot write {path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes()).map_err(|e| Failure(e.to_string()))
        }
    }
}

fn to_pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    Failure(format!("{cmd} does not support --format {f:?}").to_lowercase())
}

fn run_command(cmd: Command) -> Result<i32, Failure> {
    match cmd {
        Command::Gb(a) => {
            let (sg, ord) = setup(a.cone.as_ref())?;
            let gb = buchberger(&jn_generators::<Rational>(&sg, a.n)?, &ord)?;
            let content = match a.format {
                Format::Text => basis_text(&gb),
                Format::Json => to_pretty(&marked_basis_to_json(&gb)),
                f => return Err(unsupported("gb", f)),
            };
            emit(&a.out, &content)?;
        }
        Command::Fan(a) => {
            let (sg, _) = setup(a.cone.as_ref())?;
            let cones = groebner_fan(&jn_generators::<Rational>(&sg, a.n)?)?;
            let content = match a.format {
                Format::Json => to_pretty(&groebner_fan_to_json(sg.support_cone(), &cones)),
                Format::Text => {
                    let fan = fan_of(sg.support_cone(), &cones);
                    let mut s = format!("support {}\n", fan.support());
                    for gc in &cones {
                        s.push_str(&format!(
                            "{} multiplicity {} with {} basis elements\n",
                            gc.cone,
                            gc.multiplicity(),
                            gc.basis.len()
                        ));
                    }
                    s
                }
                f => return Err(unsupported("fan", f)),
            };
            emit(&a.out, &content)?;
        }
        Command::Nash(a) => {
            let nf = nash_fan::<Rational>(&a.cone, a.n)?;
            let verdict = if nf.is_singular {
                format!("SINGULAR (max multiplicity {})", nf.max_multiplicity())
            } else {
                "SMOOTH".to_string()
            };
            let content = match a.format {
                Format::Text => {
                    let mut s = String::new();
                    for (c, m) in nf.fan.cones().iter().zip(nf.fan.cones().iter().map(|c| c.multiplicity())) {
                        s.push_str(&format!("{c} multiplicity {m}\n"));
                    }
                    s.push_str(&verdict);
                    s.push('\n');
                    s
                }
                Format::Json => {
                    let mut v = groebner_fan_to_json(nf.semigroup.support_cone(), &nf.cones);
                    v["is_singular"] = nf.is_singular.into();
                    v["max_multiplicity"] = nf.max_multiplicity().into();
                    to_pretty(&v)
                }
                f => return Err(unsupported("nash", f)),
            };
            emit(&a.out, &content)?;
        }
        Command::Verify(a) => {
            let report = verify_paper(a.n_max)?;
            let content = match a.format {
                Format::Json => to_pretty(&report),
                Format::Text => {
                    let mut s = String::new();
                    for r in &report.results {
                        for c in &r.claims {
                            let status = if c.pass { "PASS" } else { "FAIL" };
                            s.push_str(&format!("n={} ({}) {status}: {}\n", r.n, c.claim_id, c.statement));
                            if !c.pass {
                                s.push_str(&format!("    witness: {}\n", c.witness));
                            }
                        }
                    }
                    s
                }
                f => return Err(unsupported("verify", f)),
            };
            emit(&a.out, &content)?;
            if !report.all_pass() {
                return Ok(EXIT_CLAIM_FAILED);
            }
        }
        Command::Figures(a) => {
            if a.format != Format::Svg {
                return Err(unsupported("figures", a.format));
            }
            emit(&a.out, &render_figures(a.n))?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses arguments and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            EXIT_ERROR
        }
    }
}

/// The cone of the A3 basis for `n`, used by the text renderings in tests.
pub fn a3_cone(n: u32) -> crate::Result<Cone> {
    let a3 = A3Context::new();
    let gb = buchberger(&a3.jn::<Rational>(n), a3.ordering())?;
    Ok(cone_of_basis(&gb, a3.semigroup().support_cone())?.cone)
}
