//! `fibward`: words, curves, snowflakes, metrics, verification and SVG output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use fibward_core::conformance::{self, Config, Status};
use fibward_core::curve::{ab_curve, fractal_curve, segments, symmetry_class};
use fibward_core::metrics::{metrics_report, perimeter};
use fibward_core::render::{file_name, render_curve, render_polyomino, render_tiling};
use fibward_core::snowflake::{bn_square_factorizations, boundary_word, build_polyomino};
use fibward_core::tiling::certificates;
use fibward_core::word::{ab_fib_number, ab_fib_word, fib_number, fib_word, fib_word_prefix};
use fibward_core::{Curve, Error, Polyomino};

/// Longest word `word` will print.
const MAX_WORD: u64 = 1 << 26;
/// Longest word `curve` will trace.
const MAX_CURVE: u64 = 1 << 22;
/// Longest boundary `snowflake`, `tile` and `render` will fill.
const MAX_BOUNDARY: u64 = 1 << 14;
const MAX_METRICS_N: u32 = 10_000;

#[derive(Parser)]
#[command(name = "fibward", version, about = "Generalized Fibonacci words, curves and snowflakes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f_n^[i], a prefix of f^[i], or an (a,b)-Fibonacci word.
    Word(WordArgs),
    /// Trace the odd-even curve of f_n^[i] or of an (a,b)-word.
    Curve(CurveArgs),
    /// Build the snowflake polyomino of order n.
    Snowflake(SnowflakeArgs),
    /// Closed-form perimeter, area, bounding side, endpoint and dimension.
    Metrics(MetricsArgs),
    /// Run the property suite and write CONFORMANCE.md.
    Verify(VerifyArgs),
    /// Certify and draw the tilings by translation of a snowflake.
    Tile(TileArgs),
    /// Write <kind>_<i>_<n>.svg files into a directory.
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Curve,
    Snowflake,
    Tiling,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct WordArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(1..), conflicts_with_all = ["a", "b"])]
    i: Option<u64>,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(0..=100_000), conflicts_with = "length")]
    n: Option<u32>,
    #[arg(short = 'a', value_parser = clap::value_parser!(u64).range(1..), requires_all = ["b", "n"])]
    a: Option<u64>,
    #[arg(short = 'b', value_parser = clap::value_parser!(u64).range(1..), requires_all = ["a", "n"])]
    b: Option<u64>,
    /// Prefix length of the infinite word f^[i].
    #[arg(short = 'l', long = "length", value_parser = clap::value_parser!(u64).range(0..=MAX_WORD))]
    length: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(1..), required_unless_present = "a", conflicts_with_all = ["a", "b"])]
    i: Option<u64>,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(0..=100_000))]
    n: u32,
    #[arg(short = 'a', value_parser = clap::value_parser!(u64).range(1..), requires = "b")]
    a: Option<u64>,
    #[arg(short = 'b', value_parser = clap::value_parser!(u64).range(1..), requires = "a")]
    b: Option<u64>,
    /// Pixels per lattice unit.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..=1000))]
    scale: i64,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SnowflakeArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(2..))]
    i: u64,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=1000))]
    n: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..=1000))]
    scale: i64,
    /// Draw the unit-cell grid.
    #[arg(long)]
    grid: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct MetricsArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(2..))]
    i: u64,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=MAX_METRICS_N as i64))]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every check group (the default; kept for explicitness).
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=4))]
    max_n: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=12))]
    max_i: u64,
    /// Largest word index for the word-level checks.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(6..=20))]
    max_word_n: u32,
    /// Prefix length for the characteristic-word check.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
    characteristic_len: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Where to write the markdown report.
    #[arg(short = 'o', long = "output", default_value = "CONFORMANCE.md")]
    output: PathBuf,
}

#[derive(Args)]
struct TileArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(2..))]
    i: u64,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=1000))]
    n: u32,
    /// Number of translated copies to draw.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..=400))]
    copies: u64,
    /// Which certificate to draw, counted from 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    certificate: u64,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..=1000))]
    scale: i64,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(short = 'i', value_parser = clap::value_parser!(u64).range(2..))]
    i: u64,
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..=1000))]
    n: u32,
    /// Render only this kind; all three by default.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..=1000))]
    scale: i64,
    /// Output directory.
    #[arg(short = 'o', long = "output", default_value = ".")]
    output: PathBuf,
}

/// Errors that end the run with a specific status.
enum Failure {
    Usage(String),
    Verification(String),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::InvalidSymbol { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

type Run = std::result::Result<ExitCode, Failure>;

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn emit(out: &Option<PathBuf>, body: &str) -> std::result::Result<(), Failure> {
    match out {
        Some(path) => write_file(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .context("writing stdout")?;
            Ok(())
        }
    }
}

fn write_file(path: &Path, body: &str) -> std::result::Result<(), Failure> {
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn check_size(what: &str, len: &BigUint, max: u64) -> std::result::Result<(), Failure> {
    if *len > BigUint::from(max) {
        return usage(format!("{what} would have {len} symbols; the limit is {max}"));
    }
    Ok(())
}

fn boundary_guard(n: u32, i: u64) -> std::result::Result<(), Failure> {
    let per = perimeter(n, i)?;
    check_size("the boundary", per.magnitude(), MAX_BOUNDARY)
}

fn word(args: WordArgs) -> Run {
    let (body, json) = match (args.i, args.a, args.b) {
        (Some(i), None, None) => match (args.n, args.length) {
            (Some(n), None) => {
                check_size("f_n^[i]", &fib_number(n, i)?, MAX_WORD)?;
                let w = fib_word(n, i)?;
                let j = json!({ "i": i, "n": n, "length": w.len(), "word": w });
                (w.to_string(), j)
            }
            (None, Some(len)) => {
                let w = fib_word_prefix(i, len as usize)?;
                let j = json!({ "i": i, "length": w.len(), "word": w });
                (w.to_string(), j)
            }
            _ => return usage("word -i needs exactly one of -n or -l"),
        },
        (None, Some(a), Some(b)) => {
            let n = args.n.expect("clap requires -n with -a");
            if args.length.is_some() {
                return usage("-l applies to f^[i] only");
            }
            check_size("the (a,b) word", &ab_fib_number(a, b, n)?, MAX_WORD)?;
            let w = ab_fib_word(a, b, n)?;
            let j = json!({ "a": a, "b": b, "n": n, "length": w.len(), "word": w });
            (w.to_string(), j)
        }
        _ => return usage("word needs -i, or both -a and -b"),
    };
    match args.format {
        Format::Text => emit(&args.out.output, &format!("{body}\n"))?,
        Format::Json => emit(&args.out.output, &json_line(&json))?,
        Format::Svg => return usage("word has no svg format; use the curve verb"),
    }
    Ok(ExitCode::SUCCESS)
}

fn build_curve(args: &CurveArgs) -> std::result::Result<Curve, Failure> {
    match (args.i, args.a, args.b) {
        (Some(i), _, _) => {
            check_size("f_n^[i]", &fib_number(args.n, i)?, MAX_CURVE)?;
            Ok(fractal_curve(args.n, i)?)
        }
        (None, Some(a), Some(b)) => {
            check_size("the (a,b) word", &ab_fib_number(a, b, args.n)?, MAX_CURVE)?;
            Ok(ab_curve(a, b, args.n)?)
        }
        _ => usage("curve needs -i, or both -a and -b"),
    }
}

fn curve(args: CurveArgs) -> Run {
    let c = build_curve(&args)?;
    let body = match args.format {
        Format::Svg => render_curve(&c, args.scale)?.to_string(),
        Format::Json => json_line(&json!({
            "steps": c.source.len(),
            "endpoint": c.displacement(),
            "points": c.points(),
        })),
        Format::Text => {
            let segs = segments(&c);
            let d = c.displacement();
            format!(
                "steps {}\nendpoint ({}, {})\nsegments {}\nsymmetry of the trimmed curve: {:?}\n",
                c.source.len(),
                d.x,
                d.y,
                segs.len(),
                symmetry_class(&c.without_final_step())
            )
        }
    };
    emit(&args.out.output, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn snowflake_polyomino(n: u32, i: u64) -> std::result::Result<Polyomino, Failure> {
    boundary_guard(n, i)?;
    Ok(build_polyomino(&boundary_word(n, i)?)?)
}

fn snowflake(args: SnowflakeArgs) -> Run {
    let p = snowflake_polyomino(args.n, args.i)?;
    let fs = bn_square_factorizations(&p.boundary)?;
    let body = match args.format {
        Format::Svg => render_polyomino(&p, args.scale, args.grid)?.to_string(),
        Format::Json => json_line(&json!({
            "i": args.i,
            "n": args.n,
            "perimeter": p.perimeter(),
            "area": p.area(),
            "polyomino": p,
            "factorizations": fs,
        })),
        Format::Text => {
            let (w, h) = p.bounding_box();
            let mut s = format!(
                "boundary {}\nperimeter {}\narea {}\nbounding box {w} x {h}\n",
                p.boundary,
                p.perimeter(),
                p.area()
            );
            for f in &fs {
                s.push_str(&format!("factorization at {}: A={} B={}\n", f.rotation, f.a, f.b));
            }
            s
        }
    };
    emit(&args.out.output, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn metrics(args: MetricsArgs) -> Run {
    let r = metrics_report(args.n, args.i)?;
    let body = match args.format {
        Format::Json => json_line(&r),
        Format::Text => format!(
            "perimeter {}\narea {}\nbounding side {}\nendpoint {}\ndimension estimate {:.6}\n",
            r.perimeter, r.area, r.bounding_side, r.endpoint, r.dimension_estimate
        ),
        Format::Svg => return usage("metrics has no svg format"),
    };
    emit(&args.out.output, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Run {
    let cfg = Config {
        max_n: args.max_n,
        max_i: args.max_i,
        max_word_n: args.max_word_n,
        characteristic_len: args.characteristic_len as usize,
    };
    let records = conformance::run_all(&cfg);
    write_file(&args.output, &conformance::to_markdown(&records))?;
    let body = match args.format {
        Format::Json => json_line(&records),
        Format::Text => records.iter().map(|r| format!("{r}\n")).collect(),
        Format::Svg => return usage("verify has no svg format"),
    };
    emit(&None, &body)?;
    if conformance::all_passed(&records) {
        return Ok(ExitCode::SUCCESS);
    }
    for r in records.iter().filter(|r| r.status == Status::Fail) {
        eprintln!("violated: {} ({})", r.claim, r.detail);
    }
    Ok(ExitCode::from(1))
}

fn tile(args: TileArgs) -> Run {
    let p = snowflake_polyomino(args.n, args.i)?;
    let certs = certificates(&p)?;
    let bad: Vec<_> = certs.iter().filter(|c| !c.verified()).collect();
    if !bad.is_empty() {
        return Err(Failure::Verification(format!(
            "{} of {} certificates failed window coverage",
            bad.len(),
            certs.len()
        )));
    }
    let body = match args.format {
        Format::Json => json_line(&json!({ "i": args.i, "n": args.n, "area": p.area(), "certificates": certs })),
        Format::Svg => {
            let k = args.certificate as usize;
            let Some(cert) = certs.get(k - 1) else {
                return usage(format!("certificate {k} requested, {} available", certs.len()));
            };
            render_tiling(&p, cert, args.copies as usize, args.scale)?.to_string()
        }
        Format::Text => return usage("tile has no text format; use svg or json"),
    };
    emit(&args.out.output, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn render(args: RenderArgs) -> Run {
    let kinds = match args.kind {
        Some(k) => vec![k],
        None => vec![Kind::Curve, Kind::Snowflake, Kind::Tiling],
    };
    fs::create_dir_all(&args.output)
        .with_context(|| format!("creating {}", args.output.display()))?;
    let mut written = String::new();
    for kind in kinds {
        let (name, svg) = match kind {
            Kind::Curve => {
                check_size("f_n^[i]", &fib_number(args.n, args.i)?, MAX_CURVE)?;
                let c = fractal_curve(args.n, args.i)?;
                ("curve", render_curve(&c, args.scale)?.to_string())
            }
            Kind::Snowflake => {
                let p = snowflake_polyomino(args.n, args.i)?;
                ("snowflake", render_polyomino(&p, args.scale, false)?.to_string())
            }
            Kind::Tiling => {
                let p = snowflake_polyomino(args.n, args.i)?;
                let certs = certificates(&p)?;
                let Some(cert) = certs.first() else {
                    return Err(Failure::Verification("no tiling certificate".into()));
                };
                ("tiling", render_tiling(&p, cert, 25, args.scale)?.to_string())
            }
        };
        let path = args.output.join(file_name(name, args.i, args.n));
        write_file(&path, &svg)?;
        written.push_str(&format!("{}\n", path.display()));
    }
    emit(&None, &written)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Word(a) => word(a),
        Command::Curve(a) => curve(a),
        Command::Snowflake(a) => snowflake(a),
        Command::Metrics(a) => metrics(a),
        Command::Verify(a) => verify(a),
        Command::Tile(a) => tile(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
