use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use merodiff::experiments::{self, EllipticConfig, EllipticFunction, Gauge, KummerConfig};
use merodiff::report::{self, Format, KummerSummary};
use merodiff::{differentiation_matrix, Basis, Complex64, Error, NodeSet, PoleSet, Result};

#[derive(Parser)]
#[command(name = "merodiff", version, about = "Complex differentiation matrices and reproducible experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write results here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Relative error of the third-derivative rational matrix per node count.
    Table1 {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 11)]
        n_max: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Convergence of the periodic-meromorphic matrix on an elliptic function.
    Elliptic {
        /// jacobi or weierstrass.
        #[arg(long)]
        function: String,
        /// Odd node counts: a list such as `5,9,13` or a progression `5,7,...,21`.
        #[arg(long, default_value = "5,7,...,21")]
        n: String,
        /// First full period as `RE,IM` (weierstrass only).
        #[arg(long, allow_hyphen_values = true)]
        omega1: Option<String>,
        /// Second full period as `RE,IM` (weierstrass only).
        #[arg(long, allow_hyphen_values = true)]
        omega2: Option<String>,
        /// Node direction `RE,IM`; nodes are `ray·(1 + k/N)/2`.
        #[arg(long, allow_hyphen_values = true)]
        ray: Option<String>,
        /// Override every pole order (0 disables the pole correction).
        #[arg(long)]
        pole_order: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Smallest eigenpair of the discretized Kummer operator.
    Kummer {
        /// Parameter b as `RE` or `RE,IM`.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 21)]
        n: usize,
        /// Nodes are `scale·k/N` with scale `RE,IM`.
        #[arg(long, default_value = "5,5", allow_hyphen_values = true)]
        scale: String,
        /// algebraic or trigonometric.
        #[arg(long, default_value = "algebraic")]
        basis: String,
        /// max-entry or least-squares.
        #[arg(long, default_value = "max-entry")]
        gauge: String,
        /// Write the summary JSON here; with CSV output it otherwise goes to stderr.
        #[arg(long)]
        summary: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Apply a differentiation matrix to sampled data.
    Diff {
        /// `{"nodes":[[re,im],...]}`.
        #[arg(long)]
        nodes: PathBuf,
        /// `{"poles":[{"re":..,"im":..,"order":..}]}`; required for pole bases.
        #[arg(long)]
        poles: Option<PathBuf>,
        /// `{"samples":[[re,im],...]}`.
        #[arg(long)]
        samples: PathBuf,
        /// algebraic, trigonometric, rational or periodic-meromorphic.
        #[arg(long)]
        basis: String,
        #[arg(long, default_value_t = 1)]
        order: u32,
        /// Also write the matrix as JSON.
        #[arg(long)]
        dump_matrix: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("merodiff: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Table1 { n_min, n_max, output } => {
            let format = output.format.parse()?;
            let rows = experiments::table1(n_min, n_max)?;
            emit(&output, |w| match format {
                Format::Csv => report::write_error_csv(w, &rows),
                Format::Json => json_line(w, &rows),
            })
        }
        Command::Elliptic {
            function,
            n,
            omega1,
            omega2,
            ray,
            pole_order,
            output,
        } => {
            let format = output.format.parse()?;
            let function: EllipticFunction = function.parse()?;
            let mut cfg = EllipticConfig::for_function(function);
            if let Some(w) = omega1 {
                cfg.omega1 = parse_complex(&w)?;
            }
            if let Some(w) = omega2 {
                cfg.omega2 = parse_complex(&w)?;
            }
            if let Some(r) = ray {
                cfg.ray = parse_complex(&r)?;
            }
            cfg.pole_order = pole_order;
            let rows = experiments::elliptic_sweep(&cfg, &parse_counts(&n)?)?;
            emit(&output, |w| match format {
                Format::Csv => report::write_error_csv(w, &rows),
                Format::Json => json_line(w, &rows),
            })
        }
        Command::Kummer {
            b,
            n,
            scale,
            basis,
            gauge,
            summary,
            output,
        } => {
            let format = output.format.parse()?;
            let basis: Basis = basis.parse()?;
            let gauge: Gauge = gauge.parse()?;
            let cfg = KummerConfig {
                n,
                scale: parse_complex(&scale)?,
                basis,
                gauge,
                ..KummerConfig::new(parse_complex(&b)?)
            };
            let result = experiments::kummer(&cfg)?;
            let summary_json = serde_json::to_string(&KummerSummary::from(&result))?;
            match &summary {
                Some(path) => fs::write(path, format!("{summary_json}\n"))?,
                None if format == Format::Csv => eprintln!("{summary_json}"),
                None => {}
            }
            emit(&output, |w| match format {
                Format::Csv => report::write_kummer_csv(w, &result.rows),
                Format::Json => json_line(w, &result),
            })
        }
        Command::Diff {
            nodes,
            poles,
            samples,
            basis,
            order,
            dump_matrix,
            output,
        } => {
            let format = output.format.parse()?;
            let basis: Basis = basis.parse()?;
            let nodes = NodeSet::from_json(&read(&nodes)?)?;
            let poles = poles.map(|p| read(&p).and_then(|s| PoleSet::from_json(&s))).transpose()?;
            let samples = report::samples_from_json(&read(&samples)?)?;
            let d = differentiation_matrix(basis, &nodes, poles.as_ref(), order)?;
            if let Some(path) = dump_matrix {
                fs::write(path, d.to_json()?)?;
            }
            let rows = report::derivative_rows(nodes.points(), &d.apply(&samples)?);
            emit(&output, |w| match format {
                Format::Csv => report::write_derivative_csv(w, &rows),
                Format::Json => json_line(w, &rows),
            })
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(output: &Output, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match &output.out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
        }
    }
    Ok(())
}

fn json_line<T: serde::Serialize + ?Sized>(w: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

/// `RE` or `RE,IM`.
fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let real = |p: &str| {
        p.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::Parse(format!("'{p}' is not a finite number")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(real(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(real(re)?, real(im)?)),
        _ => Err(Error::Parse(format!("expected RE or RE,IM, got '{s}'"))),
    }
}

/// Comma-separated counts; `a,b,...,c` expands the progression with step `b − a`.
fn parse_counts(s: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let count = |p: &str| p.parse::<usize>().map_err(|_| Error::Parse(format!("'{p}' is not a count")));
    let Some(dots) = parts.iter().position(|&p| p == "...") else {
        return parts.iter().map(|p| count(p)).collect();
    };
    if dots < 2 || dots + 2 != parts.len() {
        return Err(Error::Parse(format!("'...' needs two leading terms and one final term in '{s}'")));
    }
    let mut out = parts[..dots].iter().map(|p| count(p)).collect::<Result<Vec<_>>>()?;
    let (a, b, end) = (out[dots - 2], out[dots - 1], count(parts[dots + 1])?);
    if b <= a || end < b || (end - b) % (b - a) != 0 {
        return Err(Error::Parse(format!("'{s}' is not an increasing progression")));
    }
    let mut next = b + (b - a);
    while next <= end {
        out.push(next);
        next += b - a;
    }
    Ok(out)
}
