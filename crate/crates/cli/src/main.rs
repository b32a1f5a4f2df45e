use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdyck::counting::{compositions_gf, count_enumeration, gf_for, CountTable};
use rdyck::{
    check_bijection, comp_to_path, count_recurrence, enumerate_compositions, generate, member,
    oracle_all_height2, oracle_generate, path_to_comp, phi, phi_inv, series_coeffs, Composition,
    DyckPath, PartSet, PathClass, RationalParam,
};

mod verify;

const DEFAULT_MAX_N: usize = 20;
const MAX_N_VAR: &str = "RDYCK_MAX_N";

#[derive(Parser)]
#[command(
    name = "rdyck",
    version,
    about = "Rational Dyck paths of height at most two"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a path belongs to a class.
    Member {
        #[arg(long)]
        class: ClassArg,
        #[arg(long)]
        q: RationalParam,
        path: String,
    },
    /// List the paths (or compositions) of a given size.
    Enumerate(EnumerateArgs),
    /// Count class members for n = 0..=nmax.
    Count(CountArgs),
    /// Print a generating function and optionally its coefficients.
    Series {
        #[arg(long)]
        class: SeriesClass,
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Apply the composition bijection.
    Map {
        direction: MapDirection,
        #[arg(long)]
        q: RationalParam,
        input: String,
    },
    /// Apply phi to a member of Q.
    Phi {
        #[arg(long)]
        q: RationalParam,
        path: String,
    },
    /// Apply the inverse of phi to a member of Rtilde.
    PhiInv {
        #[arg(long)]
        q: RationalParam,
        path: String,
    },
    /// Apply phi to all of Q_n and report injectivity and surjectivity.
    CheckBijection {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Run every invariant check; exits 0 only if all pass.
    Verify {
        #[arg(long)]
        q: RationalParam,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Args)]
struct CapArgs {
    /// Ignore the enumeration size cap.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, conflicts_with = "parts")]
    class: Option<ClassArg>,
    /// Enumerate compositions instead of paths.
    #[arg(long)]
    parts: Option<PartsArg>,
    #[arg(long)]
    q: Option<RationalParam>,
    #[arg(long)]
    n: usize,
    /// Filter all height-≤2 paths instead of building constructively.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    #[command(flatten)]
    cap: CapArgs,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    class: ClassArg,
    #[arg(long)]
    q: RationalParam,
    #[arg(long)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = Method::Recurrence, conflicts_with = "all_methods")]
    method: Method,
    /// Print enumeration, recurrence and series counts, one line each.
    #[arg(long)]
    all_methods: bool,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    #[command(flatten)]
    cap: CapArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    R,
    Rtilde,
    Q,
    /// Every path of height at most 2 (enumerate only).
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesClass {
    R,
    Rtilde,
    Q,
    /// Compositions with parts in the finite part set.
    Comp,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartsArg {
    /// The infinite part set A.
    A,
    /// The finite part set A-tilde.
    Atilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapDirection {
    Comp2path,
    Path2comp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumeration,
    Recurrence,
    Series,
}

/// Domain failures; reported on stderr with exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

impl ClassArg {
    fn path_class(self) -> Result<PathClass, Failure> {
        match self {
            ClassArg::R => Ok(PathClass::R),
            ClassArg::Rtilde => Ok(PathClass::RTilde),
            ClassArg::Q => Ok(PathClass::Q),
            ClassArg::All => Err(Failure("class 'all' is only valid for enumerate".into())),
        }
    }
}

fn size_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure(format!(
                "{MAX_N_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(n: usize, cap: &CapArgs) -> Result<(), Failure> {
    let limit = size_cap()?;
    if n > limit && !cap.force {
        return Err(Failure(format!(
            "n = {n} exceeds the enumeration cap {limit}; pass --force or set {MAX_N_VAR}"
        )));
    }
    Ok(())
}

fn print_list(items: &[String], format: Format) {
    match format {
        Format::Lines => {
            for item in items {
                println!("{item}");
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string(items).expect("strings serialize")
        ),
    }
}

fn print_counts(table: &CountTable, format: Format) {
    match format {
        Format::Lines => println!("{table}"),
        Format::Json => println!("{}", table.to_json()),
    }
}

fn enumerate(args: EnumerateArgs) -> Outcome {
    check_cap(args.n, &args.cap)?;
    let need_q = || args.q.ok_or_else(|| Failure("--q is required".into()));
    let items: Vec<String> = if let Some(parts) = args.parts {
        let q = need_q()?;
        let set = match parts {
            PartsArg::A => PartSet::unbounded(q),
            PartsArg::Atilde => PartSet::bounded(q),
        };
        enumerate_compositions(set, args.n)
            .iter()
            .map(Composition::to_string)
            .collect()
    } else {
        let paths = match args.class.unwrap_or(ClassArg::All) {
            ClassArg::All => oracle_all_height2(args.n),
            other => {
                let class = other.path_class()?;
                if args.oracle {
                    oracle_generate(need_q()?, class, args.n)
                } else {
                    generate(need_q()?, class, args.n)
                }
            }
        };
        paths.iter().map(DyckPath::render).collect()
    };
    print_list(&items, args.format);
    Ok(ExitCode::SUCCESS)
}

fn count(args: CountArgs) -> Outcome {
    let class = args.class.path_class()?;
    let methods: Vec<Method> = if args.all_methods {
        vec![Method::Enumeration, Method::Recurrence, Method::Series]
    } else {
        vec![args.method]
    };
    for method in methods {
        let table = match method {
            Method::Enumeration => {
                check_cap(args.nmax, &args.cap)?;
                count_enumeration(args.q, class, args.nmax)
            }
            Method::Recurrence => count_recurrence(args.q, class, args.nmax),
            Method::Series => series_coeffs(&gf_for(args.q, class), args.nmax)?,
        };
        print_counts(&table, args.format);
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Member { class, q, path } => {
            println!("{}", member(q, class.path_class()?, &path.parse()?));
        }
        Command::Enumerate(args) => return enumerate(args),
        Command::Count(args) => return count(args),
        Command::Series { class, q, nmax } => {
            let series = match class {
                SeriesClass::R => gf_for(q, PathClass::R),
                SeriesClass::Rtilde => gf_for(q, PathClass::RTilde),
                SeriesClass::Q => gf_for(q, PathClass::Q),
                SeriesClass::Comp => compositions_gf(q),
            };
            println!("{series}");
            if let Some(nmax) = nmax {
                println!("{}", series_coeffs(&series, nmax)?);
            }
        }
        Command::Map {
            direction,
            q,
            input,
        } => match direction {
            MapDirection::Comp2path => {
                let composition: Composition = input.parse()?;
                println!("{}", comp_to_path(q, &composition)?);
            }
            MapDirection::Path2comp => {
                let path: DyckPath = input.parse()?;
                println!("{}", path_to_comp(q, &path)?);
            }
        },
        Command::Phi { q, path } => println!("{}", phi(q, &path.parse()?)?),
        Command::PhiInv { q, path } => println!("{}", phi_inv(q, &path.parse()?)?),
        Command::CheckBijection { q, nmax, cap } => {
            check_cap(nmax + q.t_floor() as usize + 1, &cap)?;
            for n in 0..=nmax {
                let report = check_bijection(q, n)?;
                println!(
                    "n={} t={} domain={} codomain={} injective={} surjective={} collisions={}",
                    report.n,
                    report.t,
                    report.card_domain,
                    report.card_codomain,
                    report.injective,
                    report.surjective,
                    report.collisions.len()
                );
                for (a, b) in &report.collisions {
                    println!("  collision {a} {b}");
                }
            }
        }
        Command::Verify { q, nmax, cap } => {
            check_cap(nmax + q.t_floor() as usize + 1, &cap)?;
            let checks = verify::run(q, nmax);
            let mut all_ok = true;
            for check in &checks {
                match &check.failure {
                    None => println!("ok    {}", check.name),
                    Some(why) => {
                        all_ok = false;
                        println!("FAIL  {}: {why}", check.name);
                    }
                }
            }
            if !all_ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
