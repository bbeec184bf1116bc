use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewverify::suite::{run_suite, Fault, Format, SuiteConfig};
use skewverify::{fixtures, parse_spec, render, CliError, EXIT_AXIOM_FAILURE, EXIT_INPUT_ERROR, EXIT_OK};
use skewverify_core::braidop::{braid_equal, BraidWord};

#[derive(Parser)]
#[command(
    name = "skewverify",
    version,
    about = "Exact checks of braided skew monoidal structures on Vect[B]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite on a bialgebra spec or a bundled fixture.
    Check(CheckArgs),
    /// Bundled fixtures.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
    /// Braid word utilities.
    Braid {
        #[command(subcommand)]
        command: BraidCommand,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// List fixture names with a one-line description.
    List,
    /// Print a fixture's spec JSON.
    Show { name: String },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Exit 0 if the two words are equal braids, 1 if not.
    Eq { left: String, right: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    spec: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated probe dimensions, each in 1..=3.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    probe_dims: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also require S1 and the other symmetry laws.
    #[arg(long)]
    symmetric: bool,
    /// Report elapsed time as 0.
    #[arg(long)]
    no_timing: bool,
    /// corrupt-s-after-check or tamper-associator.
    #[arg(long)]
    inject_fault: Option<String>,
}

fn check(args: CheckArgs) -> Result<i32, CliError> {
    let cfg = SuiteConfig {
        suite: args.suite.parse()?,
        probe_dims: args.probe_dims,
        seed: args.seed,
        format: match args.format {
            FormatArg::Human => Format::Human,
            FormatArg::Json => Format::Json,
        },
        jobs: args.jobs,
        symmetric: args.symmetric,
        timing: !args.no_timing,
        fault: args.inject_fault.as_deref().map(str::parse::<Fault>).transpose()?,
    };
    let spec = match (&args.spec, &args.fixture) {
        (Some(path), _) => parse_spec(path)?,
        (None, Some(name)) => fixtures::find(name)?.spec(),
        (None, None) => return Err(CliError::Usage("one of --spec or --fixture is required".into())),
    };
    let run = run_suite(&spec, &cfg)?;
    match cfg.format {
        Format::Human => print!("{}", render::human(&run)),
        Format::Json => print!("{}", render::json(&run)),
    }
    Ok(run.exit_code)
}

fn braid_eq(left: &str, right: &str) -> Result<i32, CliError> {
    let parse = |w: &str| w.parse::<BraidWord>().map_err(|e| CliError::Usage(e.to_string()));
    let (l, r) = (parse(left)?, parse(right)?);
    let equal = braid_equal(&l, &r).map_err(|e| CliError::Usage(e.to_string()))?;
    println!("{}", if equal { "equal" } else { "not equal" });
    Ok(if equal { EXIT_OK } else { EXIT_AXIOM_FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => check(args),
        Command::Fixtures {
            command: FixturesCommand::List,
        } => {
            for f in &fixtures::FIXTURES {
                println!("{:<18} {}", f.name, f.summary);
            }
            Ok(EXIT_OK)
        }
        Command::Fixtures {
            command: FixturesCommand::Show { name },
        } => fixtures::find(&name).map(|f| {
            print!("{}", f.json);
            EXIT_OK
        }),
        Command::Braid {
            command: BraidCommand::Eq { left, right },
        } => braid_eq(&left, &right),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
