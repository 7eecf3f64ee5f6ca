use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use permsyz::betti::{betti_table, Method};
use permsyz::orbitmod::Ideal;
use permsyz::render::{render_betti, render_equivariant, render_report, EquivariantDoc, Format};
use permsyz::verify::{run_suite, Suite, VerifyOptions, RESOLVE_N_MAX};
use permsyz::Error;

#[derive(Parser)]
#[command(name = "permsyz", version, about = "Syzygies of the ideal of 2x2 permanents")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Md)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = IdealArg::P)]
        ideal: IdealArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Summation)]
        method: MethodArg,
        /// Largest internal degree for the resolve method.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        unsafe_large: bool,
    },
    /// Equivariant Betti numbers as orbit modules.
    Equivariant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = IdealArg::P)]
        ideal: IdealArg,
        /// Keep the S_2 factor swapping the two rows.
        #[arg(long)]
        g2: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        opts: VerifyArgs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = IdealArg::P)]
    ideal: IdealArg,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    unsafe_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealArg {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Summation,
    Closed,
    Ghsw,
    Descriptors,
    Resolve,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tor,
    Characters,
    Hilbert,
    Crosscheck,
    All,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Md => Format::Md,
        }
    }
}

impl From<IdealArg> for Ideal {
    fn from(i: IdealArg) -> Self {
        match i {
            IdealArg::P => Ideal::P,
            IdealArg::D => Ideal::D,
        }
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Summation => Method::Summation,
            MethodArg::Closed => Method::Closed,
            MethodArg::Ghsw => Method::Ghsw,
            MethodArg::Descriptors => Method::Descriptors,
            MethodArg::Resolve => Method::Resolve,
        }
    }
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Tor => Suite::Tor,
            SuiteArg::Characters => Suite::Characters,
            SuiteArg::Hilbert => Suite::Hilbert,
            SuiteArg::Crosscheck => Suite::Crosscheck,
            SuiteArg::All => Suite::All,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegreeLimit { .. } => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<(String, bool), Error> {
    let format = Format::from(cli.format);
    match cli.command {
        Command::Betti {
            n,
            ideal,
            method,
            max_degree,
            unsafe_large,
        } => {
            let (ideal, method) = (Ideal::from(ideal), Method::from(method));
            let table = if method == Method::Resolve {
                if n > RESOLVE_N_MAX && !unsafe_large {
                    return Err(Error::DegreeLimit {
                        limit: RESOLVE_N_MAX,
                        requested: n,
                    });
                }
                permsyz::resolve::betti_table(n, ideal, max_degree)?
            } else {
                betti_table(n, ideal, method)?
            };
            Ok((render_betti(&table, format)?, true))
        }
        Command::Equivariant { n, ideal, g2 } => {
            let doc = EquivariantDoc::build(n, ideal.into(), g2)?;
            Ok((render_equivariant(&doc, format)?, true))
        }
        Command::Verify { suite, opts } => {
            let opts = VerifyOptions {
                n: opts.n,
                n_max: opts.n_max,
                max_degree: opts.max_degree,
                ideal: opts.ideal.into(),
                unsafe_large: opts.unsafe_large,
            };
            let report = run_suite(suite.into(), &opts)?;
            let s = &report.summary;
            eprintln!(
                "{} items: {} match, {} mismatch, {} skip, {} documented discrepancy",
                s.total, s.matched, s.mismatch, s.skip, s.documented_discrepancy
            );
            Ok((render_report(&report, format)?, report.ok()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let out = cli.out.clone();
    match run(cli) {
        Ok((text, ok)) => {
            let written = match out {
                Some(path) => std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
