//! Terminal interface to the schubert toolkit: cup products, overlap
//! queries, codimension bounds, diagram encoding conversions, and the
//! finite-field verification sweeps.
//!
//! Exit codes are a stable contract for scripting: 0 success, 1 validation
//! error, 2 enumeration budget exceeded, 3 verification failure.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use schubert::bounds::{
    main_bound, rank_variety_codim, reduction_f, schubert_bound, BoundReport, BoundStatus,
    MatrixSpaceShape,
};
use schubert::oracle::{
    rank_census, schubert_cell_census, Budget, CellCensusReport, FqFlag, RankCensusReport,
};
use schubert::ring::cup_basis;
use schubert::verify::{
    associativity_sweep, cells_sweep, fibers_sweep, lemma_sweep, ranks_sweep, richardson_sweep,
    SweepReport, DEFAULT_SEED,
};
use schubert::young::{
    complement, diagram_from_jumps, first_overlap_row, jumps_from_diagram, rank_table_from_jumps,
    JumpingNumbers, RectangleContext, YoungDiagram,
};
use schubert::Error;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Schubert calculus on Grassmannians with a finite-field oracle",
    after_help = "The SCHUBERT_BUDGET environment variable (a point count) raises the \
                  enumeration limits of the verify sweeps at your own risk."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized parts of the verify sweeps
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Cup product of two basis classes in A*(k,n)
    Cup {
        #[command(flatten)]
        rect: RectArgs,
        /// First diagram, e.g. "5,3,2,2,1" ("0" is the empty diagram)
        lambda: String,
        /// Second diagram
        mu: String,
    },
    /// Rotated-overlap test: decides whether the product vanishes
    Overlap {
        #[command(flatten)]
        rect: RectArgs,
        lambda: String,
        mu: String,
        /// Draw the rectangle with both figures
        #[arg(long)]
        picture: bool,
    },
    /// Codimension bounds and the reduction function
    Bound {
        #[command(subcommand)]
        which: BoundCommand,
    },
    /// Conversions between the diagram encodings
    Diagram {
        #[command(subcommand)]
        which: DiagramCommand,
    },
    /// Verification sweeps against the finite-field oracle
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Args)]
struct RectArgs {
    /// Number of rows k (subspace dimension)
    #[arg(short)]
    k: u32,
    /// Ambient dimension n
    #[arg(short)]
    n: u32,
}

impl RectArgs {
    fn ctx(&self) -> Result<RectangleContext, Error> {
        RectangleContext::new(self.k, self.n)
    }
}

#[derive(Subcommand)]
enum BoundCommand {
    /// codim X >= m+1-e for column-invariant sets avoiding an e-dim subspace
    Main {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        e: u32,
    },
    /// codim Y >= k+1-e for subvarieties of G_k(C^n) missing S_k(E)
    Schubert {
        #[arg(short)]
        e: u32,
        #[arg(short)]
        k: u32,
        #[arg(short)]
        n: u32,
    },
    /// codim R_k = (m-k)(n-k) for the rank <= k stratum
    Rank {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        k: u32,
    },
    /// The reduction function f(k) = (m-k)(n-k)+k+1-e
    F {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        e: u32,
        /// Evaluate at a single k (omit with --sweep for the whole range)
        #[arg(short)]
        k: Option<u32>,
        /// Tabulate f over 0..=min(m,n-1)
        #[arg(long)]
        sweep: bool,
    },
}

#[derive(Subcommand)]
enum DiagramCommand {
    /// Diagram (plus rank table) from jumping numbers
    FromJumps {
        #[command(flatten)]
        rect: RectArgs,
        /// Jumping numbers, e.g. "3,6,8,9,11"
        jumps: String,
    },
    /// Jumping numbers from a diagram
    ToJumps {
        #[command(flatten)]
        rect: RectArgs,
        diagram: String,
    },
    /// Complementary diagram (180°-rotated gap of the rectangle)
    Complement {
        #[command(flatten)]
        rect: RectArgs,
        diagram: String,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// cup_nonzero == overlap_test on all pairs, plus sampled associativity
    Lemma {
        /// Largest rectangle area k(n-k) to sweep
        #[arg(long, default_value_t = 12)]
        max_area: u64,
        /// Number of associativity samples
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Schubert cell census laws over F_q
    Cells {
        #[arg(short)]
        q: u8,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Rank stratum census against the closed form
    Ranks {
        #[arg(short)]
        q: u8,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
    },
    /// Column-space fiber independence and the product law
    Fibers {
        #[arg(short)]
        q: u8,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
    },
    /// Richardson intersections against the overlap criterion
    Richardson {
        #[arg(short)]
        q: u8,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
}

#[derive(Serialize)]
struct OverlapOut {
    k: u32,
    n: u32,
    lambda: Vec<u32>,
    mu: Vec<u32>,
    no_overlap: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<OverlapViolation>,
}

#[derive(Serialize)]
struct OverlapViolation {
    row: u32,
    lambda_part: u32,
    mu_part: u32,
    width: u32,
}

#[derive(Serialize)]
struct DiagramOut {
    k: u32,
    n: u32,
    diagram: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jumps: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank_table: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complement: Option<Vec<u32>>,
}

#[derive(Serialize)]
struct SweepOut<'a> {
    name: &'a str,
    passed: bool,
    summary: &'a str,
    failures: &'a [String],
}

impl<'a> SweepOut<'a> {
    fn of(report: &'a SweepReport) -> Self {
        Self {
            name: report.name,
            passed: report.passed,
            summary: &report.summary,
            failures: &report.failures,
        }
    }
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    suite: &'a str,
    passed: bool,
    reports: Vec<SweepOut<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cells: Option<CellCensusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ranks: Option<RankCensusReport>,
}

#[derive(Serialize)]
struct FSweepOut {
    formula: &'static str,
    n: u32,
    m: u32,
    e: u32,
    sweep: Vec<FSweepRow>,
}

#[derive(Serialize)]
struct FSweepRow {
    k: u32,
    value: i64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Cup { rect, lambda, mu } => {
            let ctx = rect.ctx()?;
            let la: YoungDiagram = lambda.parse()?;
            let mu: YoungDiagram = mu.parse()?;
            let product = cup_basis(&la, &mu, ctx)?;
            match cli.format {
                Format::Text => println!("{product}"),
                Format::Json => println!("{}", product.to_json_string()),
            }
            Ok(0)
        }
        Command::Overlap {
            rect,
            lambda,
            mu,
            picture,
        } => {
            let ctx = rect.ctx()?;
            let la: YoungDiagram = lambda.parse()?;
            let mu: YoungDiagram = mu.parse()?;
            let violation = first_overlap_row(&la, &mu, ctx)?;
            match cli.format {
                Format::Text => {
                    match violation {
                        None => println!("no-overlap (product nonzero)"),
                        Some((row, a, b)) => {
                            println!("overlap at row i={row} ({a}+{b}>{})", ctx.width())
                        }
                    }
                    if *picture {
                        print!("{}", render_picture(&la, &mu, ctx));
                    }
                }
                Format::Json => {
                    let out = OverlapOut {
                        k: ctx.k(),
                        n: ctx.n(),
                        lambda: la.parts().to_vec(),
                        mu: mu.parts().to_vec(),
                        no_overlap: violation.is_none(),
                        violation: violation.map(|(row, a, b)| OverlapViolation {
                            row,
                            lambda_part: a,
                            mu_part: b,
                            width: ctx.width(),
                        }),
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
            }
            Ok(0)
        }
        Command::Bound { which } => run_bound(cli, which),
        Command::Diagram { which } => run_diagram(cli, which),
        Command::Verify { suite } => run_verify(cli, suite),
    }
}

fn print_bound(cli: &Cli, report: &BoundReport) {
    match cli.format {
        Format::Text => {
            let suffix = match report.status {
                BoundStatus::Informative => "",
                BoundStatus::Vacuous => " (vacuous)",
                BoundStatus::VacuouslyTrue => " (vacuously true)",
            };
            println!("{} = {}{suffix}", report.formula, report.value);
        }
        Format::Json => println!("{}", serde_json::to_string(report).expect("serializable")),
    }
}

fn run_bound(cli: &Cli, which: &BoundCommand) -> Result<u8, Error> {
    match *which {
        BoundCommand::Main { n, m, e } => {
            let report = main_bound(MatrixSpaceShape::new(n, m)?, e)?;
            print_bound(cli, &report);
        }
        BoundCommand::Schubert { e, k, n } => {
            let report = schubert_bound(e, RectangleContext::new(k, n)?)?;
            print_bound(cli, &report);
        }
        BoundCommand::Rank { n, m, k } => {
            let shape = MatrixSpaceShape::new(n, m)?;
            let value = rank_variety_codim(shape, k)?;
            match cli.format {
                Format::Text => println!("(m-k)(n-k) = {value}"),
                Format::Json => {
                    let report = BoundReport {
                        formula: "(m-k)(n-k)",
                        n: Some(n),
                        m: Some(m),
                        k: Some(k),
                        e: None,
                        value,
                        status: BoundStatus::Informative,
                    };
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                }
            }
        }
        BoundCommand::F { n, m, e, k, sweep } => {
            let shape = MatrixSpaceShape::new(n, m)?;
            if sweep {
                let kmax = m.min(n - 1);
                let rows: Vec<FSweepRow> = (0..=kmax)
                    .map(|k| {
                        Ok(FSweepRow {
                            k,
                            value: reduction_f(k, shape, e)?,
                        })
                    })
                    .collect::<Result<_, Error>>()?;
                match cli.format {
                    Format::Text => {
                        println!("{:>3}  {:>6}", "k", "f(k)");
                        for row in &rows {
                            println!("{:>3}  {:>6}", row.k, row.value);
                        }
                        println!("f({kmax}) = m+1-e = {}", main_bound(shape, e)?.value);
                    }
                    Format::Json => {
                        let out = FSweepOut {
                            formula: "(m-k)(n-k)+k+1-e",
                            n,
                            m,
                            e,
                            sweep: rows,
                        };
                        println!("{}", serde_json::to_string(&out).expect("serializable"));
                    }
                }
            } else {
                let k = k.ok_or(Error::Parse {
                    what: "bound f",
                    detail: "provide -k or --sweep".into(),
                })?;
                let value = reduction_f(k, shape, e)?;
                match cli.format {
                    Format::Text => println!("f({k}) = {value}"),
                    Format::Json => {
                        let report = BoundReport {
                            formula: "(m-k)(n-k)+k+1-e",
                            n: Some(n),
                            m: Some(m),
                            k: Some(k),
                            e: Some(e),
                            value,
                            status: BoundStatus::Informative,
                        };
                        println!("{}", serde_json::to_string(&report).expect("serializable"));
                    }
                }
            }
        }
    }
    Ok(0)
}

fn run_diagram(cli: &Cli, which: &DiagramCommand) -> Result<u8, Error> {
    match which {
        DiagramCommand::FromJumps { rect, jumps } => {
            let ctx = rect.ctx()?;
            let jumps: JumpingNumbers = jumps.parse()?;
            let diagram = diagram_from_jumps(&jumps, ctx)?;
            let table = rank_table_from_jumps(&jumps, ctx)?;
            match cli.format {
                Format::Text => println!("{diagram}"),
                Format::Json => {
                    let out = DiagramOut {
                        k: ctx.k(),
                        n: ctx.n(),
                        diagram: diagram.parts().to_vec(),
                        jumps: Some(jumps.indices().to_vec()),
                        rank_table: Some(table.values().to_vec()),
                        complement: None,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
            }
        }
        DiagramCommand::ToJumps { rect, diagram } => {
            let ctx = rect.ctx()?;
            let diagram: YoungDiagram = diagram.parse()?;
            let jumps = jumps_from_diagram(&diagram, ctx)?;
            let table = rank_table_from_jumps(&jumps, ctx)?;
            match cli.format {
                Format::Text => println!("{jumps}"),
                Format::Json => {
                    let out = DiagramOut {
                        k: ctx.k(),
                        n: ctx.n(),
                        diagram: diagram.parts().to_vec(),
                        jumps: Some(jumps.indices().to_vec()),
                        rank_table: Some(table.values().to_vec()),
                        complement: None,
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
            }
        }
        DiagramCommand::Complement { rect, diagram } => {
            let ctx = rect.ctx()?;
            let diagram: YoungDiagram = diagram.parse()?;
            let comp = complement(&diagram, ctx)?;
            match cli.format {
                Format::Text => println!("{comp}"),
                Format::Json => {
                    let out = DiagramOut {
                        k: ctx.k(),
                        n: ctx.n(),
                        diagram: diagram.parts().to_vec(),
                        jumps: None,
                        rank_table: None,
                        complement: Some(comp.parts().to_vec()),
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                }
            }
        }
    }
    Ok(0)
}

fn run_verify(cli: &Cli, suite: &VerifySuite) -> Result<u8, Error> {
    let budget = Budget::from_env();
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let mut reports: Vec<SweepReport> = Vec::new();
    let mut cells_payload: Option<CellCensusReport> = None;
    let mut ranks_payload: Option<RankCensusReport> = None;
    let suite_name = match suite {
        VerifySuite::Lemma { max_area, samples } => {
            reports.push(lemma_sweep(*max_area));
            reports.push(associativity_sweep((*max_area).min(9), *samples, seed));
            "lemma"
        }
        VerifySuite::Cells { q, n, k } => {
            reports.push(cells_sweep(*q, *n, *k, &budget)?);
            let flag = FqFlag::standard(*q, *n)?;
            let counts = schubert_cell_census(&flag, *k, &budget)?;
            cells_payload = Some(CellCensusReport::from_counts(
                *q, *n as u32, *k as u32, &counts,
            ));
            "cells"
        }
        VerifySuite::Ranks { q, n, m } => {
            reports.push(ranks_sweep(*q, *n, *m, &budget)?);
            let counts = rank_census(*q, *n, *m, &budget)?;
            ranks_payload = Some(RankCensusReport::from_counts(
                *q, *n as u32, *m as u32, &counts,
            ));
            "ranks"
        }
        VerifySuite::Fibers { q, n, m } => {
            reports.push(fibers_sweep(*q, *n, *m, &budget)?);
            "fibers"
        }
        VerifySuite::Richardson { q, n, k } => {
            reports.push(richardson_sweep(*q, *n, *k, &budget)?);
            "richardson"
        }
    };
    let passed = reports.iter().all(|r| r.passed);
    match cli.format {
        Format::Text => {
            for report in &reports {
                if report.passed {
                    println!("PASS: {}", report.summary);
                } else {
                    println!("FAIL: {}", report.summary);
                    for failure in &report.failures {
                        println!("  counterexample: {failure}");
                    }
                }
            }
        }
        Format::Json => {
            let out = VerifyOut {
                suite: suite_name,
                passed,
                reports: reports.iter().map(SweepOut::of).collect(),
                cells: cells_payload,
                ranks: ranks_payload,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
    }
    Ok(if passed { 0 } else { 3 })
}

/// ASCII picture of the rectangle: `#` for λ, `o` for the rotated μ, `!`
/// where they collide, `.` elsewhere.
fn render_picture(la: &YoungDiagram, mu: &YoungDiagram, ctx: RectangleContext) -> String {
    let k = ctx.k() as usize;
    let w = ctx.width();
    let mut out = String::new();
    for i in 0..k {
        for j in 1..=w {
            let in_lambda = j <= la.part(i);
            let in_rotated = j > w - mu.part(k - 1 - i);
            out.push(match (in_lambda, in_rotated) {
                (true, true) => '!',
                (true, false) => '#',
                (false, true) => 'o',
                (false, false) => '.',
            });
        }
        out.push('\n');
    }
    out
}
