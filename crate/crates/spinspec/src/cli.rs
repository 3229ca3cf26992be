//! Command-line front end: compute spectra, run the verification suites,
//! and query branching multiplicities and Weyl dimensions directly.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::branching::{sp_branch_multiplicity, sphere_group, spin_interlaces, su_branch_contains};
use crate::engine::{cross_validate, enumerate_spectrum, oracle_validate, ValidationReport};
use crate::error::{Error, Result};
use crate::rational::format_rational;
use crate::rep::weyl_dimension;
use crate::spaces::{parse_space_spec, Sector};
use crate::weight::{GroupDescriptor, Weight};

#[derive(Parser)]
#[command(
    name = "spinspec",
    version,
    about = "Exact spectra of squared Dirac and Rarita-Schwinger operators on compact rank-one symmetric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SectorArg {
    #[value(name = "im-p")]
    ImP,
    #[value(name = "ker-pstar")]
    KerPStar,
    #[value(name = "dirac")]
    Dirac,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Sector {
        match s {
            SectorArg::ImP => Sector::ImP,
            SectorArg::KerPStar => Sector::KerPStar,
            SectorArg::Dirac => Sector::FullSpinor,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
pub enum Command {
    /// Enumerate a spectrum: exact eigenvalues with multiplicities
    Spectrum {
        /// Space spec, e.g. sphere:7, cpn:3, hpn:2
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "ker-pstar")]
        sector: SectorArg,
        /// Largest free family index to enumerate
        #[arg(long, default_value_t = 10)]
        cutoff: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
    },
    /// Run the exact cross-validation suite (optionally the branching oracle)
    Verify {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 10)]
        cutoff: i64,
        /// Also compare the branching rules against the character oracle
        #[arg(long)]
        oracle: bool,
        /// Highest-weight level bound for the oracle sweep
        #[arg(long, default_value_t = 4)]
        level: i64,
    },
    /// Branching multiplicity of mu in V_lambda for one isotropy reduction
    Branch {
        /// Reduction: sp:N (Sp(N+1) to Sp(1)xSp(N)), su:N (SU(N+1) to S(U(N)xU(1))), spin:N (Spin(N+1) to Spin(N))
        #[arg(long)]
        group: String,
        /// Highest weight, comma-separated rationals
        #[arg(long)]
        lambda: String,
        /// Subgroup label; for sp:N use "s;m1,...,mN"
        #[arg(long)]
        mu: String,
    },
    /// Weyl dimension of an irreducible module
    Dim {
        /// Group descriptor, e.g. D4, B3, A3, C3
        #[arg(long)]
        group: String,
        /// Highest weight, comma-separated rationals
        #[arg(long)]
        weight: String,
    },
}

#[derive(Serialize)]
struct JsonRational {
    num: String,
    den: String,
}

#[derive(Serialize)]
struct JsonContributor {
    label: String,
    weight: String,
    coefficient: i64,
}

#[derive(Serialize)]
struct JsonLine {
    eigenvalue: JsonRational,
    multiplicity: String,
    contributors: Vec<JsonContributor>,
}

#[derive(Serialize)]
struct OutputDocument {
    tool_version: &'static str,
    space: String,
    sector: String,
    cutoff: i64,
    lines: Vec<JsonLine>,
}

/// Maps an error to the scripting exit-code contract: 2 for usage and
/// parameter problems, 3 for the resource guard.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ResourceGuard { .. } => 3,
        _ => 2,
    }
}

/// Runs one parsed command, printing to stdout. Validation failures return
/// exit code 4 without an error.
pub fn run(command: &Command, out: &mut impl std::io::Write) -> Result<i32> {
    match command {
        Command::Spectrum {
            space,
            sector,
            cutoff,
            format,
        } => {
            let model = parse_space_spec(space)?;
            if *cutoff < 0 {
                return Err(Error::InvalidParameter("cutoff must be >= 0".into()));
            }
            let sector: Sector = (*sector).into();
            let lines = enumerate_spectrum(&model, sector, *cutoff)?;
            let rendered = match format {
                FormatArg::Json => {
                    let doc = OutputDocument {
                        tool_version: env!("CARGO_PKG_VERSION"),
                        space: format!("{}:{}", model.kind, model.n),
                        sector: sector.to_string(),
                        cutoff: *cutoff,
                        lines: lines
                            .iter()
                            .map(|l| JsonLine {
                                eigenvalue: JsonRational {
                                    num: l.eigenvalue.numer().to_string(),
                                    den: l.eigenvalue.denom().to_string(),
                                },
                                multiplicity: l.multiplicity.to_string(),
                                contributors: l
                                    .contributors
                                    .iter()
                                    .map(|(label, w, c)| JsonContributor {
                                        label: label.to_string(),
                                        weight: w.to_string(),
                                        coefficient: *c,
                                    })
                                    .collect(),
                            })
                            .collect(),
                    };
                    let mut s = serde_json::to_string_pretty(&doc)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    s.push('\n');
                    s
                }
                FormatArg::Csv => {
                    let mut s = String::new();
                    for l in &lines {
                        let _ = writeln!(
                            s,
                            "{},{}",
                            format_rational(&l.eigenvalue),
                            l.multiplicity
                        );
                    }
                    s
                }
                FormatArg::Table => {
                    let mut s = format!(
                        "# {}:{} sector={} cutoff={}\n",
                        model.kind, model.n, sector, cutoff
                    );
                    let _ = writeln!(s, "{:>16}  {:>14}  contributors", "eigenvalue", "multiplicity");
                    for l in &lines {
                        let contribs = l
                            .contributors
                            .iter()
                            .map(|(label, _, c)| {
                                if *c == 1 {
                                    label.to_string()
                                } else {
                                    format!("{c}*{label}")
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(" + ");
                        let _ = writeln!(
                            s,
                            "{:>16}  {:>14}  {}",
                            format_rational(&l.eigenvalue),
                            l.multiplicity.to_string(),
                            contribs
                        );
                    }
                    s
                }
            };
            out.write_all(rendered.as_bytes())
                .map_err(|e| Error::Parse(e.to_string()))?;
            Ok(0)
        }
        Command::Verify {
            space,
            cutoff,
            oracle,
            level,
        } => {
            let model = parse_space_spec(space)?;
            let mut report = cross_validate(&model, *cutoff)?;
            if *oracle {
                let oracle_report = oracle_validate(&model, *level)?;
                report.checks.extend(oracle_report.checks);
                report.skipped_labels.extend(oracle_report.skipped_labels);
            }
            let rendered = render_report(&report);
            out.write_all(rendered.as_bytes())
                .map_err(|e| Error::Parse(e.to_string()))?;
            Ok(if report.all_passed() { 0 } else { 4 })
        }
        Command::Branch { group, lambda, mu } => {
            let lam = Weight::parse(lambda)?;
            let (kind, num) = group.split_once(':').ok_or_else(|| {
                Error::Parse(format!("group {group:?} must look like sp:2, su:3 or spin:7"))
            })?;
            let n: usize = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank {num:?}")))?;
            let mult = match kind {
                "sp" => {
                    let (s, rest) = mu.split_once(';').ok_or_else(|| {
                        Error::Parse(format!("sp label {mu:?} must look like \"s;m1,...\""))
                    })?;
                    let mut coords = vec![crate::rational::parse_rational(s)?];
                    coords.extend(Weight::parse(rest)?.coords().to_vec());
                    sp_branch_multiplicity(&lam, &Weight::new(coords), n)?
                }
                "su" => {
                    let mu = Weight::parse(mu)?;
                    crate::Integer::from(u8::from(su_branch_contains(&lam, &mu, n)?))
                }
                "spin" => {
                    let g = sphere_group(n)?;
                    let mu = Weight::parse(mu)?;
                    crate::Integer::from(u8::from(spin_interlaces(&lam, &g, &mu)?))
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown branching family {other:?} (expected sp, su or spin)"
                    )))
                }
            };
            writeln!(out, "{mult}").map_err(|e| Error::Parse(e.to_string()))?;
            Ok(0)
        }
        Command::Dim { group, weight } => {
            let g = GroupDescriptor::parse(group)?;
            let w = Weight::parse(weight)?;
            let dim = weyl_dimension(&w, &g)?;
            writeln!(out, "{dim}").map_err(|e| Error::Parse(e.to_string()))?;
            Ok(0)
        }
    }
}

fn render_report(report: &ValidationReport) -> String {
    let mut s = String::new();
    for check in &report.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "[{tag}] {}: {}", check.name, check.witness);
    }
    if report.skipped_labels.is_empty() {
        let _ = writeln!(s, "skipped labels: none");
    } else {
        for skip in &report.skipped_labels {
            let _ = writeln!(s, "skipped: {skip}");
        }
    }
    let _ = writeln!(
        s,
        "result: {}",
        if report.all_passed() {
            "all checks passed"
        } else {
            "FAILURES PRESENT"
        }
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(cmd: &Command) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(cmd, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn spectrum_csv_matches_known_rows() {
        let (code, text) = run_to_string(&Command::Spectrum {
            space: "sphere:7".into(),
            sector: SectorArg::KerPStar,
            cutoff: 1,
            format: FormatArg::Csv,
        });
        assert_eq!(code, 0);
        assert_eq!(text, "81/4,320\n121/4,1680\n");
    }

    #[test]
    fn spectrum_rejects_even_cp() {
        let mut buf = Vec::new();
        let err = run(
            &Command::Spectrum {
                space: "cpn:4".into(),
                sector: SectorArg::Dirac,
                cutoff: 1,
                format: FormatArg::Csv,
            },
            &mut buf,
        )
        .unwrap_err();
        assert!(err.to_string().contains("no spin structure"));
        assert_eq!(exit_code_for(&err), 2);
    }

    #[test]
    fn branch_and_dim_examples() {
        let (code, text) = run_to_string(&Command::Branch {
            group: "sp:2".into(),
            lambda: "1,1,0".into(),
            mu: "0;1,1".into(),
        });
        assert_eq!((code, text.trim()), (0, "1"));
        let (code, text) = run_to_string(&Command::Dim {
            group: "D4".into(),
            weight: "3/2,1/2,1/2,1/2".into(),
        });
        assert_eq!((code, text.trim()), (0, "56"));
        let (code, text) = run_to_string(&Command::Dim {
            group: "A3".into(),
            weight: "0,0,0".into(),
        });
        assert_eq!((code, text.trim()), (0, "1"));
    }

    #[test]
    fn verify_reports_positivity_for_large_spheres() {
        let (code, text) = run_to_string(&Command::Verify {
            space: "sphere:9".into(),
            cutoff: 6,
            oracle: false,
            level: 0,
        });
        assert_eq!(code, 0);
        assert!(text.contains("no Ker P* zero modes"));
        assert!(text.contains("all checks passed"));
    }

    #[test]
    fn json_document_is_stable() {
        let (code, a) = run_to_string(&Command::Spectrum {
            space: "hpn:2".into(),
            sector: SectorArg::ImP,
            cutoff: 3,
            format: FormatArg::Json,
        });
        let (_, b) = run_to_string(&Command::Spectrum {
            space: "hpn:2".into(),
            sector: SectorArg::ImP,
            cutoff: 3,
            format: FormatArg::Json,
        });
        assert_eq!(code, 0);
        assert_eq!(a, b);
        assert!(a.contains("\"num\""));
        assert!(a.contains("\"den\""));
    }
}
