//! Batch CLI for the exact character-table toolkit.
//!
//! Exit codes: 0 = everything requested passed, 1 = at least one check
//! failed, 2 = usage, parse or i/o error.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use output::Format;
use symchar_core::basic_sets::{cartan_report, split, verify_theorems, Cut};
use symchar_core::char_tables::{CharTable, PermTable};
use symchar_core::kschur::{self, KTable};
use symchar_core::linalg::IntMatrix;
use symchar_core::partitions::{enumerate, PartSet, Partition};
use symchar_core::reg_sing;
use symchar_core::report::Report;
use symchar_core::series;

/// Order up to which enumeration-backed oracles run inside `genfun --check`.
const GENFUN_ENUM_CAP: u32 = 30;

#[derive(Parser)]
#[command(name = "symchar", version, about = "Exact symmetric-group character table toolkit")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the irreducible character table of S_n
    Table { n: u32 },
    /// Print the permutation character table of S_n
    PermTable { n: u32 },
    /// Print the four submatrices cut by a partition
    Split {
        n: u32,
        /// Cut partition ("1^2,3" syntax) or "ALL"
        #[arg(long)]
        alpha: String,
    },
    /// Check the determinant, SNF, basic-set and Cartan identities for cuts
    Verify {
        n: u32,
        /// Cut partition or "ALL"
        #[arg(long, conflicts_with = "all_alphas")]
        alpha: Option<String>,
        /// Sweep every cut in P(n) plus ALL (default when --alpha is absent)
        #[arg(long)]
        all_alphas: bool,
    },
    /// Cartan matrices and determinants for one cut
    Cartan {
        n: u32,
        #[arg(long)]
        alpha: String,
    },
    /// Partition generating functions and p-valuation identities
    Genfun {
        /// all | bounded:K | nonmult:L | explicit:a,b,c
        #[arg(long)]
        set: String,
        #[arg(long)]
        prime: u32,
        #[arg(long, default_value_t = 60)]
        order: u32,
        /// Verify the identities instead of printing coefficients
        #[arg(long)]
        check: bool,
    },
    /// Regular/singular character-table checks for a modulus
    Regsing { n: u32, ell: u32 },
    /// k-Schur transition-table verification
    #[command(subcommand)]
    Kschur(KschurCommand),
}

#[derive(Subcommand)]
enum KschurCommand {
    /// Verify an ingested transition-table file
    Verify { file: PathBuf },
    /// Write the trivial fixture table for k >= n
    Fixture {
        n: u32,
        k: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `symchar table 12 | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli, start) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, start: Instant) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::Table { n } => {
            let table = cache::load_or_build(n)?;
            emit_square_table(format, n, table.labels(), table.values(), start)?;
            Ok(true)
        }
        Command::PermTable { n } => {
            let table = PermTable::build(n)?;
            emit_square_table(format, n, table.labels(), table.values(), start)?;
            Ok(true)
        }
        Command::Split { n, alpha } => {
            let table = cache::load_or_build(n)?;
            let cut = Cut::parse(&alpha, n)?;
            let sp = split(&table, &cut)?;
            let all_labels = output::labels_to_strings(table.labels());
            let small = output::labels_to_strings(&sp.small_labels);
            let large = output::labels_to_strings(&sp.large_labels);
            let blocks: [(&str, &[String], &[String], &IntMatrix); 4] = [
                ("x_small", &small, &small, &sp.x_small),
                ("x_large", &large, &large, &sp.x_large),
                ("xbar_small", &all_labels, &small, &sp.xbar_small),
                ("xbar_large", &all_labels, &large, &sp.xbar_large),
            ];
            match format {
                Format::Human => {
                    for (name, rows_l, cols_l, m) in &blocks {
                        println!("{name} ({}x{})", m.rows(), m.cols());
                        print!(
                            "{}",
                            output::render_matrix(rows_l, cols_l, &output::matrix_rows(m))
                        );
                        println!();
                    }
                }
                Format::Csv => {
                    for (name, rows_l, cols_l, m) in &blocks {
                        println!("# {name}");
                        print!(
                            "{}",
                            output::render_csv(rows_l, cols_l, &output::matrix_rows(m))
                        );
                    }
                }
                Format::Machine => {
                    let body = json!({
                        "n": n,
                        "alpha": cut.to_string(),
                        "small_labels": small,
                        "large_labels": large,
                        "x_small": output::matrix_rows(&sp.x_small),
                        "x_large": output::matrix_rows(&sp.x_large),
                        "xbar_small": output::matrix_rows(&sp.xbar_small),
                        "xbar_large": output::matrix_rows(&sp.xbar_large),
                    });
                    print!(
                        "{}",
                        output::machine_envelope("split", body, start.elapsed().as_millis())
                    );
                }
            }
            Ok(true)
        }
        Command::Verify { n, alpha, all_alphas: _ } => {
            let table = cache::load_or_build(n)?;
            let cuts: Vec<Cut> = match alpha {
                Some(a) => vec![Cut::parse(&a, n)?],
                None => all_cuts(n),
            };
            let mut reports = Vec::new();
            for cut in &cuts {
                reports.push(verify_theorems(&table, cut)?);
            }
            emit_reports(format, &reports, start)
        }
        Command::Cartan { n, alpha } => {
            let table = cache::load_or_build(n)?;
            let cut = Cut::parse(&alpha, n)?;
            run_cartan(format, &table, &cut, start)
        }
        Command::Genfun { set, prime, order, check } => {
            let set: PartSet = set.parse()?;
            if check {
                let report = series::verify_section4(&set, prime, order, GENFUN_ENUM_CAP)?;
                emit_reports(format, &[report], start)
            } else {
                run_genfun(format, &set, prime, order, start)?;
                Ok(true)
            }
        }
        Command::Regsing { n, ell } => {
            let table = cache::load_or_build(n)?;
            let report = reg_sing::verify_section5(&table, ell)?;
            emit_reports(format, &[report], start)
        }
        Command::Kschur(KschurCommand::Verify { file }) => {
            let table =
                KTable::load(&file).with_context(|| format!("loading {}", file.display()))?;
            let reports = vec![
                kschur::verify_thm61(&table)?,
                kschur::verify_observations(&table)?,
            ];
            emit_reports(format, &reports, start)
        }
        Command::Kschur(KschurCommand::Fixture { n, k, output }) => {
            let fixture = kschur::make_trivial_fixture(n, k)?;
            fixture
                .save(&output)
                .with_context(|| format!("writing {}", output.display()))?;
            match format {
                Format::Human => println!("wrote fixture n={n} k={k} to {}", output.display()),
                Format::Machine => {
                    let body = json!({
                        "path": output.display().to_string(),
                        "n": n,
                        "k": k,
                    });
                    print!(
                        "{}",
                        output::machine_envelope("fixture", body, start.elapsed().as_millis())
                    );
                }
                Format::Csv => bail!("--format csv is only available for matrix output"),
            }
            Ok(true)
        }
    }
}

fn all_cuts(n: u32) -> Vec<Cut> {
    let mut cuts: Vec<Cut> = enumerate(n, &PartSet::All)
        .into_iter()
        .map(Cut::Alpha)
        .collect();
    cuts.push(Cut::Top);
    cuts
}

fn emit_square_table(
    format: Format,
    n: u32,
    labels: &[Partition],
    values: &IntMatrix,
    start: Instant,
) -> Result<()> {
    let label_strings = output::labels_to_strings(labels);
    let rows = output::matrix_rows(values);
    match format {
        Format::Human => print!(
            "{}",
            output::render_matrix(&label_strings, &label_strings, &rows)
        ),
        Format::Csv => print!(
            "{}",
            output::render_csv(&label_strings, &label_strings, &rows)
        ),
        Format::Machine => {
            let doc = cache::TableDoc::new(n, labels, values);
            print!(
                "{}",
                output::machine_envelope(
                    "table",
                    serde_json::to_value(doc)?,
                    start.elapsed().as_millis()
                )
            );
        }
    }
    Ok(())
}

fn emit_reports(format: Format, reports: &[Report], start: Instant) -> Result<bool> {
    match format {
        Format::Human => {
            for report in reports {
                print!("{}", output::render_report_human(report));
            }
            let passed = reports.iter().all(|r| r.passed());
            println!("overall: {}", if passed { "PASS" } else { "FAIL" });
        }
        Format::Machine => {
            let body = serde_json::to_value(reports)?;
            print!(
                "{}",
                output::machine_envelope("reports", body, start.elapsed().as_millis())
            );
        }
        Format::Csv => bail!("--format csv is only available for matrix output"),
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn run_cartan(format: Format, table: &CharTable, cut: &Cut, start: Instant) -> Result<bool> {
    let rep = cartan_report(table, cut)?;
    let sp = split(table, cut)?;
    let small = output::labels_to_strings(&sp.small_labels);
    let large = output::labels_to_strings(&sp.large_labels);

    let mut checks = Report::new(format!("cartan n={} alpha={}", table.n(), cut));
    checks.check(
        "cartan_dets_equal",
        rep.det_small == rep.det_large,
        vec![
            ("det_small", rep.det_small.to_string()),
            ("det_large", rep.det_large.to_string()),
        ],
    );
    checks.check(
        "cartan_det_matches_quotient",
        &rep.det_small * &rep.predicted_den == rep.predicted_num,
        vec![
            ("det", rep.det_small.to_string()),
            ("b_small", rep.predicted_num.to_string()),
            ("a_small", rep.predicted_den.to_string()),
        ],
    );

    match format {
        Format::Human => {
            println!("C_(alpha) ({0}x{0})", rep.c_small.rows());
            print!(
                "{}",
                output::render_matrix(&small, &small, &output::matrix_rows(&rep.c_small))
            );
            println!();
            println!("C^(alpha) ({0}x{0})", rep.c_large.rows());
            print!(
                "{}",
                output::render_matrix(&large, &large, &output::matrix_rows(&rep.c_large))
            );
            println!();
            println!(
                "det C_(alpha) = {}, det C^(alpha) = {}, predicted {}/{}",
                rep.det_small, rep.det_large, rep.predicted_num, rep.predicted_den
            );
            print!("{}", output::render_report_human(&checks));
        }
        Format::Csv => {
            println!("# c_small");
            print!(
                "{}",
                output::render_csv(&small, &small, &output::matrix_rows(&rep.c_small))
            );
            println!("# c_large");
            print!(
                "{}",
                output::render_csv(&large, &large, &output::matrix_rows(&rep.c_large))
            );
        }
        Format::Machine => {
            let body = json!({
                "n": table.n(),
                "alpha": cut.to_string(),
                "small_labels": small,
                "large_labels": large,
                "c_small": output::matrix_rows(&rep.c_small),
                "c_large": output::matrix_rows(&rep.c_large),
                "det_small": rep.det_small.to_string(),
                "det_large": rep.det_large.to_string(),
                "predicted_num": rep.predicted_num.to_string(),
                "predicted_den": rep.predicted_den.to_string(),
                "report": serde_json::to_value(&checks)?,
            });
            print!(
                "{}",
                output::machine_envelope("cartan", body, start.elapsed().as_millis())
            );
        }
    }
    Ok(checks.passed())
}

fn run_genfun(format: Format, set: &PartSet, prime: u32, order: u32, start: Instant) -> Result<()> {
    let p = series::p_series(set, order);
    let t = series::t_series(set, order);
    let l = series::l_series(set, order);
    let e = series::e_series(set, prime, order)?;
    let f = series::f_series(set, prime, order)?;
    let (a, b) = series::ab_series(set, prime, order)?;

    let columns: [(&str, &series::TruncSeries); 7] = [
        ("p", &p),
        ("t", &t),
        ("l", &l),
        ("e", &e),
        ("f", &f),
        ("a", &a),
        ("b", &b),
    ];
    match format {
        Format::Human | Format::Csv => {
            let col_labels: Vec<String> =
                columns.iter().map(|(name, _)| name.to_string()).collect();
            let row_labels: Vec<String> = (0..=order).map(|n| n.to_string()).collect();
            let rows: Vec<Vec<String>> = (0..=order as usize)
                .map(|n| {
                    columns
                        .iter()
                        .map(|(_, s)| s.coeffs()[n].to_string())
                        .collect()
                })
                .collect();
            if format == Format::Human {
                println!("S = {set}, p = {prime}, order {order}");
                print!("{}", output::render_matrix(&row_labels, &col_labels, &rows));
            } else {
                print!("{}", output::render_csv(&row_labels, &col_labels, &rows));
            }
        }
        Format::Machine => {
            let mut body = serde_json::Map::new();
            body.insert("set".into(), json!(set.to_string()));
            body.insert("prime".into(), json!(prime));
            body.insert("order".into(), json!(order));
            for (name, s) in &columns {
                let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
                body.insert((*name).into(), json!(coeffs));
            }
            print!(
                "{}",
                output::machine_envelope(
                    "series",
                    serde_json::Value::Object(body),
                    start.elapsed().as_millis()
                )
            );
        }
    }
    Ok(())
}
