//! Command-line front end.
//!
//! Exit codes: 0 success, 1 semantic negative (non-member, failing suite),
//! 2 usage, parse, shape or witness error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cantor::{EvPeriodicSet, GroundSet};
use crate::error::{Error, Result};
use crate::homeo::tuple_literals;
use crate::named::{homeo_by_name, HomeoArgs};
use crate::verify::{
    agreement_suite, axiom_suite, modulus_probe, modulus_probe_at, preservation_suite,
    roundtrip_suite, Report,
};
use crate::zoo::{filter_by_name, semifilter_t, FilterKind, FilterSpec};

#[derive(Parser, Debug)]
#[command(name = "filtersq", version, about = "Executable homeomorphisms between filters on ω")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a named homeomorphism to a tuple of point literals.
    Apply {
        /// restriction, product, main, code, disjoint-encode, square or power.
        homeo: String,
        #[command(flatten)]
        ground: Ground,
        /// Coordinates separated by `;`, or `-` to read stdin.
        #[arg(long)]
        input: String,
        /// Apply the inverse map.
        #[arg(long)]
        inverse: bool,
    },
    /// Decide membership of a point in a filter: prints `in` or `out`.
    Mem { filter: String, point: String },
    /// Run a randomized verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        homeo: Option<String>,
        #[command(flatten)]
        ground: Ground,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Oracle depth for the agreement suite.
        #[arg(long, default_value_t = 512)]
        depth: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the modulus of continuity table of a forward map.
    Modulus {
        homeo: String,
        #[command(flatten)]
        ground: Ground,
        #[arg(long, default_value_t = 64)]
        k: usize,
        /// Probe at this tuple instead of a random one.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The built-in filters.
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Subcommand, Debug)]
enum ZooCommand {
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Roundtrip,
    Preservation,
    Agreement,
    Axioms,
}

#[derive(Args, Debug)]
struct Ground {
    #[arg(long)]
    omega: Option<String>,
    #[arg(long = "omega-star")]
    omega_star: Option<String>,
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

impl Ground {
    fn filter(&self) -> Result<Option<FilterSpec>> {
        self.filter.as_deref().map(filter_by_name).transpose()
    }

    fn homeo_args(&self) -> Result<HomeoArgs> {
        let ground = |s: &Option<String>| -> Result<Option<GroundSet>> {
            s.as_deref().map(|s| GroundSet::new(s.parse()?)).transpose()
        };
        Ok(HomeoArgs {
            omega: ground(&self.omega)?,
            omega_star: ground(&self.omega_star)?,
            filter: self.filter()?,
            m: self.m,
            n: self.n,
        })
    }
}

/// Splits a tuple argument on `;` (and on newlines, so `apply` output can be
/// piped back in).
fn split_tuple(s: &str) -> Vec<&str> {
    s.split([';', '\n']).map(str::trim).filter(|t| !t.is_empty()).collect()
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn input(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(s)
    }

    fn print(&mut self, s: &str) -> Result<()> {
        self.out.write_all(s.as_bytes()).map_err(|e| Error::Parse(format!("writing output: {e}")))
    }
}

fn dispatch(cli: Cli, io: &mut Io<'_>) -> Result<i32> {
    match cli.command {
        Command::Apply { homeo, ground, input, inverse } => {
            let h = homeo_by_name(&homeo, &ground.homeo_args()?)?;
            let text = io.input(&input)?;
            let shape = if inverse { h.codomain() } else { h.domain() };
            let x = shape.parse_tuple(&split_tuple(&text))?;
            let y = if inverse { h.backward(&x)? } else { h.forward(&x)? };
            for lit in tuple_literals(&y) {
                io.print(&format!("{lit}\n"))?;
            }
            Ok(0)
        }
        Command::Mem { filter, point } => {
            let f = filter_by_name(&filter)?;
            let x: EvPeriodicSet = point.trim().parse()?;
            let member = f.decide(&x);
            io.print(if member { "in\n" } else { "out\n" })?;
            Ok(if member { 0 } else { 1 })
        }
        Command::Verify { suite, homeo, ground, trials, seed, depth, out } => {
            let report = run_suite(suite, homeo.as_deref(), &ground, trials, seed, depth)?;
            let text = report.render();
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::Parse(format!("writing {path}: {e}")))?,
                None => io.print(&text)?,
            }
            Ok(report.exit_code())
        }
        Command::Modulus { homeo, ground, k, input, seed } => {
            let h = homeo_by_name(&homeo, &ground.homeo_args()?)?;
            let table = match input {
                Some(arg) => {
                    let text = io.input(&arg)?;
                    modulus_probe_at(&h, &h.domain().parse_tuple(&split_tuple(&text))?, k)?
                }
                None => modulus_probe(&h, k, seed)?,
            };
            io.print(&table.render())?;
            Ok(0)
        }
        Command::Zoo { command: ZooCommand::List } => {
            for f in [filter_by_name("frechet")?, filter_by_name("dyadic")?] {
                let kind = match f.kind() {
                    FilterKind::Principal { generator } => format!("principal generator={generator}"),
                    FilterKind::NonPrincipal { omega, omega_star } => {
                        format!("non-principal omega={omega} omega-star={omega_star}")
                    }
                };
                io.print(&format!("{}\tfilter\t{kind}\n", f.name()))?;
            }
            io.print("principal:<literal>\tfilter\tprincipal on an infinite set\n")?;
            let t = semifilter_t();
            io.print(&format!(
                "{}\tsemifilter\tomega1={} omega2={} (axioms suite only)\n",
                t.name(),
                t.omega1(),
                t.omega2()
            ))?;
            Ok(0)
        }
    }
}

fn run_suite(
    suite: Suite,
    homeo: Option<&str>,
    ground: &Ground,
    trials: usize,
    seed: u64,
    depth: usize,
) -> Result<Report> {
    let need_homeo = || -> Result<_> {
        let name = homeo.ok_or_else(|| Error::Domain("missing --homeo".into()))?;
        homeo_by_name(name, &ground.homeo_args()?)
    };
    let need_filter_name =
        || ground.filter.as_deref().ok_or_else(|| Error::Domain("missing --filter".into()));
    Ok(match suite {
        Suite::Roundtrip => roundtrip_suite(&need_homeo()?, trials, seed),
        Suite::Agreement => agreement_suite(&need_homeo()?, trials, depth, seed),
        Suite::Preservation => preservation_suite(&filter_by_name(need_filter_name()?)?, trials, seed)?,
        Suite::Axioms => {
            let name = need_filter_name()?;
            let t = semifilter_t();
            if name == t.name() {
                let decide = move |x: &EvPeriodicSet| t.decide(x);
                axiom_suite(name, decide, &[], false, trials, seed)
            } else {
                let f = filter_by_name(name)?;
                let g = f.clone();
                axiom_suite(name, move |x: &EvPeriodicSet| g.decide(x), f.basis(), true, trials, seed)
            }
        }
    })
}

/// Runs the command line given by `args` against the supplied streams and
/// returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli, &mut Io { stdin, out }) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run() -> i32 {
    let stdin = io::stdin();
    let mut lock = stdin.lock();
    let code = run_with(
        std::env::args_os(),
        &mut lock as &mut dyn BufRead,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    let _ = io::stdout().flush();
    code
}
