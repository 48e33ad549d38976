//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 if any verification mismatched, 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::fforacle::verify_counts;
use crate::gluing::{glue, Sector};
use crate::moduli::{check_identities, moduli_epoly_from, HolonomyClass};
use crate::poly::IntPoly;
use crate::recursion::{sector_vector, sector_vectors};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping every genus argument.
pub const MAX_GENUS_VAR: &str = "EPOLY_MAX_GENUS";
pub const DEFAULT_MAX_GENUS: u32 = 100;

#[derive(Parser, Debug)]
#[command(
    name = "sl2-epoly",
    version,
    about = "E-polynomials of SL(2,C) character varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// E-polynomial of one character variety.
    Compute {
        #[arg(long, short)]
        genus: u32,
        /// One of id, minus-id, jplus, jminus, xi.
        #[arg(long = "holonomy")]
        holonomy: HolonomyClass,
    },
    /// All five holonomies for genus 1 through max-genus.
    Table {
        #[arg(long)]
        max_genus: u32,
    },
    /// Check the identity suite.
    Identities {
        #[arg(long)]
        max_genus: u32,
    },
    /// Compare point counts over F_p with the polynomials at q = p.
    Verify {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 2)]
        max_genus: u32,
    },
    /// Glue sector vectors of genus `left` and `right`.
    Glue {
        #[arg(long)]
        left: u32,
        #[arg(long)]
        right: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn genus_cap() -> Result<u32, Usage> {
    match std::env::var(MAX_GENUS_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| {
            Usage(format!(
                "{MAX_GENUS_VAR}={s:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_GENUS),
    }
}

fn check_genus(g: u32) -> Result<u32, Usage> {
    let cap = genus_cap()?;
    if g == 0 {
        Err(Error::GenusOutOfRange { genus: 0, min: 1 }.into())
    } else if g > cap {
        Err(Usage(format!(
            "genus {g} exceeds the cap {cap} (set {MAX_GENUS_VAR} to raise it)"
        )))
    } else {
        Ok(g)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(out) => out,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    code
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<(String, i32), Usage> {
    match &cli.command {
        Command::Compute { genus, holonomy } => {
            let g = check_genus(*genus)?;
            let p = moduli_epoly_from(*holonomy, &sector_vector(g))?;
            let out = match cli.format {
                Format::Text => format!("{p}\n"),
                Format::Json => json(&p),
                Format::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(g, *holonomy, &p)),
                Format::Latex => format!("{} = {}\n", latex_name(*holonomy), latex(&p)),
            };
            Ok((out, EXIT_OK))
        }
        Command::Table { max_genus } => {
            let g_max = check_genus(*max_genus)?;
            let vectors = sector_vectors(g_max);
            let mut rows = Vec::new();
            for v in &vectors[1..] {
                for c in HolonomyClass::ALL {
                    rows.push(TableRow {
                        genus: v.genus,
                        holonomy: c,
                        epoly: moduli_epoly_from(c, v)?,
                    });
                }
            }
            Ok((render_table(&rows, cli.format), EXIT_OK))
        }
        Command::Identities { max_genus } => {
            let report = check_identities(check_genus(*max_genus)?)?;
            let mut out = String::new();
            match cli.format {
                Format::Json => out = json(&report),
                Format::Csv => {
                    out.push_str("identity,genus,passed,residual\n");
                    for c in &report.checks {
                        let _ = writeln!(
                            out,
                            "{},{},{},\"{}\"",
                            c.identity, c.genus, c.passed, c.residual
                        );
                    }
                }
                Format::Text | Format::Latex => {
                    for c in &report.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let _ = write!(out, "{status} {} g={}", c.identity, c.genus);
                        if !c.residual.is_zero() {
                            let _ = write!(out, " residual: {}", c.residual);
                        }
                        if let (false, Some(d)) = (c.passed, &c.detail) {
                            let _ = write!(out, " ({d})");
                        }
                        out.push('\n');
                    }
                    let failed = report.failures().count();
                    let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
                }
            }
            Ok((
                out,
                if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                },
            ))
        }
        Command::Verify { prime, max_genus } => {
            let report = verify_counts(*prime, check_genus(*max_genus)?)?;
            let mut out = String::new();
            match cli.format {
                Format::Json => out = json(&report),
                Format::Csv => {
                    out.push_str("p,genus,holonomy,expected,actual,passed\n");
                    for c in &report.comparisons {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            c.p, c.genus, c.holonomy, c.expected, c.actual, c.passed
                        );
                    }
                }
                Format::Text | Format::Latex => {
                    let _ = writeln!(
                        out,
                        "SL(2,F_{}): {} elements, {} classes",
                        report.p, report.group_order, report.class_count
                    );
                    for c in &report.comparisons {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        let _ = writeln!(
                            out,
                            "{status} g={} {}: count {} expected {}",
                            c.genus, c.holonomy, c.actual, c.expected
                        );
                    }
                    let failed = report.mismatches().count();
                    let _ = writeln!(
                        out,
                        "{} comparisons, {failed} mismatched",
                        report.comparisons.len()
                    );
                }
            }
            Ok((
                out,
                if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                },
            ))
        }
        Command::Glue { left, right } => {
            let (k, h) = (check_genus(*left)?, check_genus(*right)?);
            check_genus(k + h)?;
            let out = glue(&sector_vector(k), &sector_vector(h));
            let text = match cli.format {
                Format::Json => json(&out),
                Format::Csv => {
                    let mut s = String::from("component,epoly\n");
                    for sec in Sector::ALL {
                        let _ = writeln!(s, "{sec},\"{}\"", out.e[sec.index()]);
                    }
                    let _ = writeln!(s, "R4.T,\"{}\"\nR4.N,\"{}\"", out.r4.t, out.r4.n);
                    s
                }
                Format::Text | Format::Latex => {
                    let mut s = format!("genus {k} + {h} = {}\n", out.genus);
                    for sec in Sector::ALL {
                        let _ = writeln!(s, "{sec} = {}", out.e[sec.index()]);
                    }
                    let _ = writeln!(s, "R4 = ({}) T + ({}) N", out.r4.t, out.r4.n);
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
    }
}

const CSV_HEADER: &str = "genus,holonomy,degree,coefficients";

/// Coefficients from the constant term up, separated by `;`.
fn csv_row(g: u32, c: HolonomyClass, p: &IntPoly) -> String {
    let coeffs: Vec<String> = p.to_dense().iter().map(|c| c.to_string()).collect();
    let degree = p.degree().map_or_else(|| "-".to_owned(), |d| d.to_string());
    format!("{g},{c},{degree},{}", coeffs.join(";"))
}

#[derive(Serialize)]
struct TableRow {
    genus: u32,
    holonomy: HolonomyClass,
    epoly: IntPoly,
}

fn render_table(rows: &[TableRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = json(&rows),
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&csv_row(r.genus, r.holonomy, &r.epoly));
                out.push('\n');
            }
        }
        Format::Text => {
            for r in rows {
                let _ = writeln!(out, "g={} {}: {}", r.genus, r.holonomy, r.epoly);
            }
        }
        Format::Latex => {
            out.push_str("\\begin{tabular}{rll}\n$g$ & $C$ & $e(\\mathcal{M}_C)$ \\\\\n\\hline\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{} & ${}$ & ${}$ \\\\",
                    r.genus,
                    latex_holonomy(r.holonomy),
                    latex(&r.epoly)
                );
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}

fn latex_holonomy(c: HolonomyClass) -> &'static str {
    match c {
        HolonomyClass::Id => "\\mathrm{Id}",
        HolonomyClass::MinusId => "-\\mathrm{Id}",
        HolonomyClass::JPlus => "J_{+}",
        HolonomyClass::JMinus => "J_{-}",
        HolonomyClass::XiLambda => "\\xi_{\\lambda}",
    }
}

fn latex_name(c: HolonomyClass) -> String {
    format!("e(\\mathcal{{M}}_{{{}}})", latex_holonomy(c))
}

/// Descending-degree rendering with braced exponents.
pub fn latex(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms_desc().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = c.magnitude().to_string();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if e == 0 || mag != "1" {
            out.push_str(&mag);
        }
        match e {
            0 => {}
            1 => out.push('q'),
            _ => {
                let _ = write!(out, "q^{{{e}}}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sl2-epoly").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(
            latex(&poly(&[(6, 1), (4, -2), (1, -30), (0, 1)])),
            "q^{6} - 2q^{4} - 30q + 1"
        );
        assert_eq!(latex(&poly(&[(3, -1)])), "-q^{3}");
        assert_eq!(latex(&IntPoly::zero()), "0");
    }

    #[test]
    fn compute_minus_id() {
        let (code, out, _) = run_capture(&[
            "compute",
            "--genus",
            "2",
            "--holonomy",
            "minus-id",
            "--format",
            "text",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "q^6 - 2q^4 - 30q^3 - 2q^2 + 1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(
            run_capture(&["compute", "--genus", "2", "--holonomy", "bogus"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["compute", "--genus", "0", "--holonomy", "id"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["verify", "--prime", "9"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--prime", "3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&[]).0, EXIT_USAGE);
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("compute"));
    }

    #[test]
    fn glue_text() {
        let (code, out, _) = run_capture(&["glue", "--left", "1", "--right", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("genus 1 + 1 = 2\n"));
        assert!(out.contains("e1 = q^9 - 3q^7 - 30q^6 + 30q^4 + 3q^3 - q"));
    }
}
