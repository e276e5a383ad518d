//! Argument parsing and command dispatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use polygram_core::dirichlet::expand_v;
use polygram_core::hyperd::{count_hyper, HyperBoxSpec, DEFAULT_MAX_DIMENSION};
use polygram_core::polycube::{table_c, table_s};
use polygram_core::polyomino::{table_b, table_g};
use polygram_core::CountTable;

use crate::error::{CliError, Result};
use crate::output::{Format, TableDocument};
use crate::reference::{table1_note, TABLE1_MISPRINT};
use crate::verify::{self, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polygram",
    version,
    about = "Exact counts of parallelogram polyominoes, polycubes and polyhypercubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of counts.
    Table(TableArgs),
    /// Print the zeta expansion of V_k.
    Expand(ExpandArgs),
    /// Run the cross-validation suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// b(k,n): polyominoes by width and area
    B,
    /// c(k,n): polycubes by width and volume
    C,
    /// g(k,n): polyominoes by width and height
    G,
    /// s(k,n,m): polycubes by width, height and depth
    S,
    /// s(k,n1..n_{d-1}): d-dimensional polyhypercubes by width and heights
    H,
}

#[derive(Debug, clap::Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Largest width.
    #[arg(long, default_value_t = 10)]
    pub k: u64,
    /// Largest area, volume or height.
    #[arg(long, default_value_t = 10)]
    pub n: u64,
    /// Largest depth (table s; defaults to --n).
    #[arg(long)]
    pub m: Option<u64>,
    /// Dimension (table h).
    #[arg(long, default_value_t = 3)]
    pub d: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct ExpandArgs {
    /// Width k of V_k.
    #[arg(long)]
    pub k: usize,
    /// Print only the number of terms.
    #[arg(long)]
    pub count_only: bool,
    /// Annotate the d-dimensional generating function (V_k)^(d-1).
    #[arg(long, value_name = "D")]
    pub power: Option<u32>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Area bound for the polyomino oracle (also the width+height bound).
    #[arg(long, default_value_t = 10)]
    pub max_area: u32,
    /// Volume bound for the polycube oracle; the width+height+depth bound is one more.
    #[arg(long, default_value_t = 8)]
    pub max_volume: u32,
    /// Directory of OEIS b-files named bNNNNNN.txt.
    #[arg(long)]
    pub oeis_dir: Option<PathBuf>,
    /// A width/area table in CSV to compare cell by cell.
    #[arg(long)]
    pub table1: Option<PathBuf>,
}

/// Runs a parsed command, writing results to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> i32 {
    let result = match &cli.command {
        Command::Table(args) => cmd_table(args).map(|s| (s, EXIT_OK)),
        Command::Expand(args) => cmd_expand(args).map(|s| (s, EXIT_OK)),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok((text, code)) => match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("polygram: {e}");
                EXIT_FAILED
            }
        },
        Err(e) => {
            eprintln!("polygram: {e}");
            EXIT_USAGE
        }
    }
}

fn positive(name: &str, value: u64) -> Result<()> {
    if value == 0 {
        return Err(CliError::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

/// Builds the requested table with its parameters and notes.
pub fn build_table(args: &TableArgs) -> Result<TableDocument> {
    positive("k", args.k)?;
    positive("n", args.n)?;
    let (k, n) = (args.k, args.n);
    let mut params = BTreeMap::from([("k".to_string(), k), ("n".to_string(), n)]);
    let mut notes = Vec::new();
    let table = match args.kind {
        TableKind::B => {
            let (mk, mn, ..) = TABLE1_MISPRINT;
            if k >= mk && n >= mn {
                notes.push(table1_note());
            }
            table_b(k as usize, n as usize)
        }
        TableKind::C => table_c(k as usize, n as usize),
        TableKind::G => table_g(k, n),
        TableKind::S => {
            let m = args.m.unwrap_or(n);
            positive("m", m)?;
            params.insert("m".into(), m);
            table_s(k, n, m)
        }
        TableKind::H => {
            params.insert("d".into(), u64::from(args.d));
            table_h(args.d, k, n)?
        }
    };
    Ok(TableDocument::from_table(&table, params, notes))
}

/// Rows `(k, n1..n_{d-2})`, columns `n_{d-1}`, all heights up to `n`.
fn table_h(d: u32, max_width: u64, max_height: u64) -> Result<CountTable> {
    HyperBoxSpec::new(d, 1, vec![1; d.saturating_sub(1) as usize])?;
    let free = d as usize - 2;
    let mut rows = Vec::new();
    for k in 1..=max_width {
        let mut h = vec![1u64; free];
        loop {
            rows.push(
                std::iter::once(k)
                    .chain(h.iter().copied())
                    .collect::<Vec<u64>>(),
            );
            let Some(i) = h.iter().rposition(|&v| v < max_height) else {
                break;
            };
            h[i] += 1;
            h[i + 1..].iter_mut().for_each(|v| *v = 1);
        }
    }
    let axes: Vec<String> = std::iter::once("k".to_string())
        .chain((1..=free).map(|i| format!("n{i}")))
        .collect();
    let axes: Vec<&str> = axes.iter().map(String::as_str).collect();
    let col_axis = format!("n{}", d - 1);
    Ok(CountTable::build(
        "h",
        &axes,
        &col_axis,
        rows,
        (1..=max_height).collect(),
        |row, last| {
            let heights = row[1..].iter().copied().chain([last]).collect();
            count_hyper(&HyperBoxSpec::new(d, row[0], heights).expect("validated dimension"))
        },
    ))
}

pub fn cmd_table(args: &TableArgs) -> Result<String> {
    Ok(build_table(args)?.render(args.format))
}

pub fn cmd_expand(args: &ExpandArgs) -> Result<String> {
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    if let Some(d) = args.power {
        if !(2..=DEFAULT_MAX_DIMENSION).contains(&d) {
            return Err(CliError::Usage(format!(
                "--power must be in 2..={DEFAULT_MAX_DIMENSION}, got {d}"
            )));
        }
    }
    let expansion = expand_v(args.k)?;
    if args.count_only {
        return Ok(format!("{}\n", expansion.len()));
    }
    let mut text = String::new();
    if let Some(d) = args.power {
        let k = args.k;
        let vars = (1..=k)
            .map(|i| format!("x{i}"))
            .collect::<Vec<_>>()
            .join(", ");
        text.push_str(&format!(
            "# P_{{{d},{k}}}({vars}) = (V_{k}({vars}))^{} with\n",
            d - 1
        ));
        text.push_str(&format!("# V_{k}({vars}) =\n"));
    }
    text.push_str(&format!("{expansion}\n"));
    Ok(text)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(String, i32)> {
    let config = VerifyConfig {
        max_area: args.max_area,
        max_volume: args.max_volume,
        oeis_dir: args.oeis_dir.clone(),
        table1: args.table1.clone(),
    };
    let report = verify::run(&config)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok((report.render(), code))
}
