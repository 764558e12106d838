//! `polyhull`: verification suites, reports and drawings for polyomino
//! convex hulls.
//!
//! Exit status is 0 when every check passes, 1 when a check fails or the
//! input is invalid, and 2 when a size guard would be exceeded.

mod manifest;
mod render;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polyhull::constructions::{construct, extremal_max};
use polyhull::enumeration::{count_extremal, count_extremal_via_shapes, spectrum_of, EnumerationTask, Mode};
use polyhull::formulas::{c2_closed, extremal_box, max_area_2d, max_m_2d, max_volume_d};
use polyhull::hexgrid::{check_hex_conjecture, hex_reports_csv, HexPolyomino};
use polyhull::hull::hull_volume;
use polyhull::lattice::parse_cell_list;
use polyhull::rational::fmt_exact;
use polyhull::{Error, Polyomino};
use serde::Serialize;

use manifest::RunManifest;
use verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "polyhull", version, about = "Exact convex hulls of polyominoes")]
struct Cli {
    /// Directory for reports, drawings and the run manifest.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Enumeration threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Run a verification suite and write a CSV and JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest size checked (each suite has its own default).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 4)]
        d_max: usize,
    },
    /// Largest hull area of an n-omino.
    MaxArea {
        #[arg(long)]
        n: u64,
    },
    /// Largest hull volume of an n-cell animal in dimension d.
    MaxVolume {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Number of free n-ominoes with maximal hull area.
    CountExtremal {
        #[arg(long)]
        n: u64,
        /// Also count by exhaustive enumeration.
        #[arg(long)]
        enumerate: bool,
    },
    /// Every hull volume attained by n-cell animals, with multiplicities.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Free)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// A polyomino with n cells and hull area n + m/2.
    Construct {
        #[arg(long)]
        n: u64,
        /// A number, or `max`.
        #[arg(long)]
        m: String,
        #[arg(long, value_enum, default_value_t = Format::Txt)]
        format: Format,
    },
    /// Draw a cell-list file or a construction with its hull.
    Render {
        /// Cell-list file; axial coordinates with `--lattice hex`.
        #[arg(long, conflicts_with_all = ["n", "m"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "m")]
        n: Option<u64>,
        #[arg(long, requires = "n")]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = Lattice::Square)]
        lattice: Lattice,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
    },
    /// Largest polyhex hull area against the conjectured bound.
    Hex {
        /// A single size; otherwise 1..=n-max.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::MaxArea { .. } => "max-area",
            Command::MaxVolume { .. } => "max-volume",
            Command::CountExtremal { .. } => "count-extremal",
            Command::Spectrum { .. } => "spectrum",
            Command::Construct { .. } => "construct",
            Command::Render { .. } => "render",
            Command::Hex { .. } => "hex",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum ModeArg {
    Fixed,
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Csv,
    Txt,
    Json,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Lattice {
    Square,
    Hex,
}

/// What a command reports back to the driver.
#[derive(Default)]
struct Outcome {
    /// 0 passed, 1 a check failed, 2 a guard stopped the run.
    code: u8,
    summary: String,
    artifacts: Vec<PathBuf>,
}

impl Outcome {
    fn ok(summary: String) -> Self {
        Outcome {
            summary,
            ..Outcome::default()
        }
    }
}

struct Ctx {
    out: PathBuf,
    workers: usize,
}

impl Ctx {
    fn write(&self, outcome: &mut Outcome, name: &str, text: &str) -> Result<()> {
        let path = self.out.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        outcome.artifacts.push(path);
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    if let Err(e) = fs::create_dir_all(&cli.out) {
        eprintln!("error: cannot create {}: {e}", cli.out.display());
        return ExitCode::from(1);
    }
    let ctx = Ctx {
        out: cli.out.clone(),
        workers,
    };
    let start = Instant::now();
    let result = dispatch(&ctx, &cli.command);
    let mut parameters = serde_json::to_value(&cli.command).expect("serializable");
    parameters["workers"] = workers.into();
    let mut manifest = RunManifest::new(cli.command.name(), parameters, start.elapsed());
    let code = match result {
        Ok(outcome) => {
            manifest.result = outcome.summary;
            manifest.artifacts = outcome.artifacts;
            outcome.code
        }
        Err(e) => {
            let limit = e
                .downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::ResourceLimit { .. }));
            eprintln!("error: {e:#}");
            manifest.result = format!("error: {e:#}");
            if limit {
                2
            } else {
                1
            }
        }
    };
    manifest.exit_code = code;
    if let Err(e) = manifest.write(&ctx.out) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<Outcome> {
    match command {
        Command::Verify { suite, n_max, d_max } => cmd_verify(ctx, *suite, *n_max, *d_max),
        Command::MaxArea { n } => cmd_max_volume(*n, 2),
        Command::MaxVolume { n, d } => cmd_max_volume(*n, *d),
        Command::CountExtremal { n, enumerate } => cmd_count_extremal(ctx, *n, *enumerate),
        Command::Spectrum { n, d, mode, format } => cmd_spectrum(ctx, *n, *d, *mode, *format),
        Command::Construct { n, m, format } => cmd_construct(ctx, *n, m, *format),
        Command::Render {
            input,
            n,
            m,
            lattice,
            format,
        } => cmd_render(ctx, input.as_deref(), *n, m.as_deref(), *lattice, *format),
        Command::Hex { n, n_max, format } => cmd_hex(ctx, *n, *n_max, *format),
    }
}

fn cmd_verify(ctx: &Ctx, suite: Suite, n_max: Option<usize>, d_max: usize) -> Result<Outcome> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut outcome = Outcome::default();
    let mut lines = Vec::new();
    for s in suites {
        let n = n_max.unwrap_or(s.default_n_max());
        let run = match verify::run(s, n, d_max, ctx.workers) {
            Ok(run) => run,
            Err(e @ Error::ResourceLimit { .. }) => {
                // keep going so `all` still reports the other suites
                let line = format!("{s}: {e}");
                eprintln!("{line}");
                lines.push(line);
                outcome.code = 2;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        for c in &run.checks {
            println!(
                "{} {} n={} d={}: expected {} actual {} {}",
                c.suite,
                c.check,
                c.n,
                c.d,
                c.expected,
                c.actual,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
        let failures = run.failures();
        let line = format!("{s}: {} checks, {failures} failed", run.checks.len());
        println!("{line}");
        lines.push(line);
        if failures > 0 && outcome.code == 0 {
            outcome.code = 1;
        }
        ctx.write(&mut outcome, &format!("verify_{s}.csv"), &verify::checks_csv(&run.checks)?)?;
        let report = serde_json::json!({
            "suite": s,
            "n_max": n,
            "d_max": d_max,
            "checks": run.checks,
            "failures": failures,
        });
        ctx.write(
            &mut outcome,
            &format!("verify_{s}.json"),
            &(serde_json::to_string_pretty(&report)? + "\n"),
        )?;
        if !run.hex.is_empty() {
            ctx.write(&mut outcome, "verify_hex_table.csv", &hex_reports_csv(&run.hex)?)?;
        }
    }
    outcome.summary = lines.join("; ");
    Ok(outcome)
}

fn cmd_max_volume(n: u64, d: usize) -> Result<Outcome> {
    if n == 0 {
        bail!("n must be positive");
    }
    let formula = max_volume_d(n, d);
    let witness = extremal_max(n, d)?;
    let attained = hull_volume(&witness)?;
    let dims: Vec<String> = extremal_box(n, d).iter().map(i64::to_string).collect();
    println!("n={n} d={d} max={}", fmt_exact(&formula));
    println!("witness box {} hull {}", dims.join("x"), fmt_exact(&attained));
    if d == 2 {
        println!("m={} area={}", max_m_2d(n), fmt_exact(&max_area_2d(n)));
    }
    let mut outcome = Outcome::ok(format!("max={}", fmt_exact(&formula)));
    outcome.code = u8::from(attained != formula);
    Ok(outcome)
}

fn cmd_count_extremal(ctx: &Ctx, n: u64, enumerate: bool) -> Result<Outcome> {
    if n == 0 {
        bail!("n must be positive");
    }
    let closed = c2_closed(n);
    let shapes = count_extremal_via_shapes(n);
    println!("n={n} closed={closed} shapes={shapes}");
    let mut agree = closed == shapes;
    if enumerate {
        let counted = count_extremal(n as usize, ctx.workers)?;
        println!("enumerated={counted}");
        agree &= counted == closed;
    }
    let mut outcome = Outcome::ok(format!("c2({n})={closed}"));
    outcome.code = u8::from(!agree);
    Ok(outcome)
}

fn cmd_spectrum(ctx: &Ctx, n: usize, d: usize, mode: ModeArg, format: Format) -> Result<Outcome> {
    let mode = match mode {
        ModeArg::Fixed => Mode::Fixed,
        ModeArg::Free => Mode::Free,
    };
    let task = EnumerationTask::new(n, d, mode)?.with_workers(ctx.workers);
    let report = spectrum_of(&task);
    report.validate()?;
    let stem = format!("spectrum_n{n}_d{d}_{mode}");
    let mut outcome = Outcome::ok(format!("{} values over {} polyominoes", report.entries().len(), report.total()));
    match format {
        Format::Csv => ctx.write(&mut outcome, &format!("{stem}.csv"), &report.to_csv()?)?,
        Format::Json => ctx.write(
            &mut outcome,
            &format!("{stem}.json"),
            &(serde_json::to_string_pretty(&report.to_json())? + "\n"),
        )?,
        Format::Txt => {
            let mut text = String::new();
            for e in report.entries() {
                text.push_str(&format!("{} {}\n", fmt_exact(&e.volume), e.count));
            }
            ctx.write(&mut outcome, &format!("{stem}.txt"), &text)?;
        }
        other => bail!("spectrum cannot be written as {other:?}"),
    }
    for e in report.entries() {
        println!("{} {}", fmt_exact(&e.volume), e.count);
    }
    Ok(outcome)
}

fn parse_m(n: u64, m: &str) -> Result<u64> {
    if m == "max" {
        return Ok(max_m_2d(n));
    }
    m.parse().with_context(|| format!("--m must be a number or `max`, got {m:?}"))
}

fn cmd_construct(ctx: &Ctx, n: u64, m: &str, format: Format) -> Result<Outcome> {
    let m = parse_m(n, m)?;
    let c = construct(n, m)?;
    println!("n={n} m={m} area={} family={}", fmt_exact(&c.area), c.params);
    let mut outcome = Outcome::ok(format!("area={} family={}", fmt_exact(&c.area), c.params));
    let stem = format!("construct_n{n}_m{m}");
    match format {
        Format::Txt => ctx.write(&mut outcome, &format!("{stem}.txt"), &c.polyomino.to_cell_list())?,
        Format::Svg => ctx.write(&mut outcome, &format!("{stem}.svg"), &render::svg(&c.polyomino)?)?,
        Format::Ascii => ctx.write(&mut outcome, &format!("{stem}.txt"), &render::ascii(&c.polyomino)?)?,
        other => bail!("a construction cannot be written as {other:?}"),
    }
    Ok(outcome)
}

fn cmd_render(
    ctx: &Ctx,
    input: Option<&Path>,
    n: Option<u64>,
    m: Option<&str>,
    lattice: Lattice,
    format: Format,
) -> Result<Outcome> {
    let (stem, text) = match (input, lattice) {
        (Some(path), Lattice::Hex) => {
            let rows = parse_cell_list(&fs::read_to_string(path)?)?;
            let cells = rows
                .iter()
                .map(|r| match r[..] {
                    [q, r] => Ok((q, r)),
                    _ => Err(Error::DimensionMismatch {
                        expected: 2,
                        found: r.len(),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if format != Format::Svg {
                bail!("polyhexes render only as svg");
            }
            (stem_of(path), render::hex_svg(&HexPolyomino::from_axial(&cells)?))
        }
        (Some(path), Lattice::Square) => {
            let p = Polyomino::from_cell_list(&fs::read_to_string(path)?)?;
            (stem_of(path), draw(&p, format)?)
        }
        (None, Lattice::Square) => {
            let (Some(n), Some(m)) = (n, m) else {
                bail!("render needs --input or both --n and --m");
            };
            let m = parse_m(n, m)?;
            (format!("construct_n{n}_m{m}"), draw(&construct(n, m)?.polyomino, format)?)
        }
        (None, Lattice::Hex) => bail!("hex rendering needs --input"),
    };
    let ext = if format == Format::Svg { "svg" } else { "txt" };
    let mut outcome = Outcome::ok(format!("rendered {stem}"));
    ctx.write(&mut outcome, &format!("{stem}.{ext}"), &text)?;
    if format != Format::Svg {
        print!("{text}");
    }
    Ok(outcome)
}

fn stem_of(path: &Path) -> String {
    path.file_stem().map_or("render".into(), |s| s.to_string_lossy().into_owned())
}

fn draw(p: &Polyomino, format: Format) -> Result<String> {
    Ok(match format {
        Format::Svg => render::svg(p)?,
        Format::Ascii | Format::Txt => render::ascii(p)?,
        other => bail!("cannot render as {other:?}"),
    })
}

fn cmd_hex(ctx: &Ctx, n: Option<usize>, n_max: usize, format: Format) -> Result<Outcome> {
    let sizes: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (1..=n_max).collect(),
    };
    let mut reports = Vec::new();
    for n in sizes {
        let r = check_hex_conjecture(n, ctx.workers)?;
        println!("{}", r.summary());
        reports.push(r);
    }
    let violations = reports.iter().filter(|r| !r.holds()).count();
    let mut outcome = Outcome::ok(format!("{} sizes, {violations} counterexamples", reports.len()));
    outcome.code = u8::from(violations > 0);
    match format {
        Format::Csv => ctx.write(&mut outcome, "hex.csv", &hex_reports_csv(&reports)?)?,
        Format::Txt => {
            let text: String = reports.iter().map(|r| r.summary() + "\n").collect();
            ctx.write(&mut outcome, "hex.txt", &text)?;
        }
        other => bail!("hex reports cannot be written as {other:?}"),
    }
    Ok(outcome)
}
