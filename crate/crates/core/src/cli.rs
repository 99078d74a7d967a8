//! Command-line front end. [`run`] does all the work and returns the exit code
//! with the text for stdout and stderr, so the binary is a thin wrapper.
//!
//! Exit codes: 0 on success (or a unit for `verify`), 1 when `verify` finds a
//! non-unit or `selftest` has a failing check, 2 on any input error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use log::info;

use crate::algebra::Modulus;
use crate::analysis::{
    length_l, mirowicz_e, search_units_with_progress, unique_products, SearchSpec,
};
use crate::group::PElement;
use crate::groupring::RingElemP;
use crate::matembed::{decide_unit, Decision};
use crate::parse::{
    format_dihedral, format_poly, format_ring_element, parse_pelement, parse_ring_element,
};
use crate::report::{Check, Report};
use crate::selftest;
use crate::units::{
    check_lemma_criterion, counterexample, family_alpha, SymmetricQuadruple, UnitCertificate,
};

#[derive(Parser, Debug)]
#[command(
    name = "promislow",
    version,
    about = "Exact arithmetic in the group ring of the Promislow group"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Prime modulus for parsed input.
    #[arg(long, global = true, default_value_t = 2)]
    modulus: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether an element is a unit and print its inverse.
    Verify { element: String },
    /// Print the non-trivial unit, its inverse and their verification.
    Counterexample,
    /// Print the unit α_k of the stretched family.
    Family {
        #[arg(long)]
        k: u32,
        /// Also check the image of a^-1·α_k·b in F_2[D∞].
        #[arg(long)]
        project: bool,
    },
    /// Print the image of an element in K[D∞].
    Project { element: String },
    /// Multiplicity census of A·B; files hold one group element per line.
    UniqueProducts {
        #[arg(long = "A", visible_alias = "a")]
        a: PathBuf,
        #[arg(long = "B", visible_alias = "b")]
        b: PathBuf,
    },
    /// Bounded exhaustive search for non-trivial units.
    Search {
        #[arg(long)]
        spec: PathBuf,
        /// Override the worker count from the spec file.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print the dihedral length measure of an element.
    Length { element: String },
    /// Run the built-in acceptance checks.
    Selftest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, report)) => CliOutput {
            code,
            stdout: if cli.json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(InputError(msg)) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<(i32, Report), InputError> {
    let modulus = Modulus::new(cli.modulus)?;
    let parse = |text: &str| parse_ring_element(text, modulus);
    match &cli.command {
        Command::Verify { element } => verify(&parse(element)?),
        Command::Counterexample => Ok((
            0,
            certificate_report("counterexample", &counterexample(), true),
        )),
        Command::Family { k, project } => family(*k, *project),
        Command::Project { element } => {
            let alpha = parse(element)?;
            let mut r = Report::new("project");
            r.set_element(&alpha);
            r.value("image", format_dihedral(&alpha.project()));
            Ok((0, r))
        }
        Command::UniqueProducts { a, b } => {
            let (a, b) = (read_elements(a)?, read_elements(b)?);
            let census = unique_products(&a, &b)?;
            let mut r = Report::new("unique-products");
            r.value("products", census.total());
            r.value("distinct", census.entries.len());
            r.value("unique", census.unique_elements.len());
            r.list("unique element", &census.unique_elements);
            Ok((0, r))
        }
        Command::Search { spec, workers } => {
            let mut spec = SearchSpec::parse(&read(spec)?)?;
            if let Some(w) = workers {
                spec.workers = *w;
            }
            let cardinality = spec.cardinality();
            info!("search space: {cardinality} candidates");
            let found = search_units_with_progress(&spec, &|done, total| {
                info!("decided {done}/{total}");
            })?;
            let mut r = Report::new("search");
            r.value("candidates", cardinality.to_string());
            r.value("non-trivial units", found.len());
            r.list("unit", found.iter().map(|c| format_ring_element(c.alpha())));
            Ok((0, r))
        }
        Command::Length { element } => {
            let alpha = parse(element)?;
            let mut r = Report::new("length");
            r.set_element(&alpha);
            r.value("length", length_l(&alpha)?);
            Ok((0, r))
        }
        Command::Selftest => {
            let mut r = Report::new("selftest");
            for o in selftest::run_all() {
                r.push(
                    Check::new(format!("{:>2} {}", o.id, o.name), o.passed).with_detail(o.detail),
                );
            }
            Ok((if r.all_passed() { 0 } else { 1 }, r))
        }
    }
}

fn verify(alpha: &RingElemP) -> Result<(i32, Report), InputError> {
    match decide_unit(alpha)? {
        Decision::Unit(cert) => Ok((0, certificate_report("verify", &cert, false))),
        Decision::NonUnit { determinant } => {
            let mut r = Report::new("verify");
            r.set_element(alpha);
            r.is_unit = Some(false);
            r.value("determinant", format_poly(&determinant));
            r.push(
                Check::new("determinant is a monomial", false)
                    .with_detail(format!("det = {}", format_poly(&determinant))),
            );
            Ok((1, r))
        }
    }
}

fn certificate_report(command: &str, cert: &UnitCertificate, with_lemma: bool) -> Report {
    let mut r = Report::new(command);
    r.set_element(cert.alpha());
    r.is_unit = Some(true);
    r.set_inverse(cert.alpha_inv());
    r.value("trivial", cert.alpha().is_trivial_unit());
    let left = (cert.alpha_inv() * cert.alpha()).is_one();
    let right = (cert.alpha() * cert.alpha_inv()).is_one();
    r.push(Check::new("left inverse", left));
    r.push(Check::new("right inverse", right));
    r.push(Check::new("verified", left && right).with_detail("both sides"));
    if with_lemma {
        let crit = check_lemma_criterion(&SymmetricQuadruple::counterexample_data(Modulus::TWO))
            .map(|c| c.passed())
            .unwrap_or(false);
        r.push(Check::new("symmetric criterion", crit));
    }
    r
}

fn family(k: u32, project: bool) -> Result<(i32, Report), InputError> {
    let cert = family_alpha(k);
    let mut r = certificate_report("family", &cert, false);
    r.value("k", k);
    if project {
        let image = cert
            .alpha()
            .translate(PElement::a().inv(), PElement::b())
            .project();
        let index = 4 * k as i64 + 2;
        let expected = mirowicz_e(index, 0)?;
        r.value("image", format_dihedral(&image));
        r.push(Check::new(
            format!("image of a^-1*alpha*b equals e({index},0)"),
            image == expected,
        ));
    }
    Ok((0, r))
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// One group element per line; blank lines and `#` comments are skipped.
fn read_elements(path: &Path) -> Result<Vec<PElement>, InputError> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let e = parse_pelement(line)
            .map_err(|e| InputError(format!("{}:{}: {e}", path.display(), n + 1)))?;
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutput {
        run(std::iter::once("promislow").chain(args.iter().copied()))
    }

    #[test]
    fn counterexample_text() {
        let out = run_args(&["counterexample"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("support sizes: 21/21"));
        assert!(out.stdout.contains("[ok] verified: both sides"));
    }

    #[test]
    fn verify_non_unit() {
        let out = run_args(&["verify", "1+x"]);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("unit: no"));
    }

    #[test]
    fn bad_input() {
        assert_eq!(run_args(&["verify", "1+"]).code, 2);
        assert_eq!(run_args(&["--modulus", "4", "verify", "1"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn family_projection() {
        let out = run_args(&["family", "--k", "3", "--project", "--json"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let checks = v["checks"].as_array().unwrap();
        let last = checks.last().unwrap();
        assert_eq!(last["name"], "image of a^-1*alpha*b equals e(14,0)");
        assert_eq!(last["passed"], true);
    }
}
