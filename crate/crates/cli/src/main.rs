use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fszd::indicators::{Backend, GammaReduction, Session, SessionOptions};
use fszd::oracle;
use fszd::permcore::{construct_group_with, Group, Limits};
use fszd::Error;
use serde_json::json;

/// Frobenius–Schur indicators of Drinfeld doubles of permutation groups.
#[derive(Parser, Debug)]
#[command(name = "fszd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indicators of every simple module of D(G).
    Indicators {
        #[command(flatten)]
        common: Common,
        /// Comma-separated m values (default: all divisors of exp(G)).
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = BackendArg::Characters)]
        backend: BackendArg,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Decide whether all indicators lie in Q(ζ_d); exit status 1 when not.
    Fsz {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Print γ_m^z on the classes of C_G(z).
    Gamma {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        z_class: usize,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = BackendArg::Characters)]
        backend: BackendArg,
    },
    /// Cross-check class-level results against the element-level oracle.
    Selftest {
        #[arg(long)]
        max_order: Option<u128>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the class-level sweep against the naive sweep.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Group spec: S<n>, A<n>, C<n>, D<n>, Q8, products with x, or perm:<gens>.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Largest group order to enumerate (overrides FSZD_MAX_ORDER).
    #[arg(long)]
    max_order: Option<u128>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BackendArg {
    Characters,
    Cmc,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Characters => Backend::Characters,
            BackendArg::Cmc => Backend::Cmc,
        }
    }
}

/// Exit status plus the text to emit.
struct Outcome {
    text: String,
    status: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Status(s)) => ExitCode::from(s),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Failure {
    Status(u8),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (outcome, output) = match cli.command {
        Command::Indicators {
            common,
            m,
            backend,
            workers,
        } => (indicators(&common, m, backend.into(), workers)?, common.output),
        Command::Fsz { common, d, workers } => (fsz(&common, d, workers)?, common.output),
        Command::Gamma {
            common,
            z_class,
            m,
            backend,
        } => (gamma(&common, z_class, m, backend.into())?, common.output),
        Command::Selftest {
            max_order,
            format,
            output,
        } => (selftest(max_order, format)?, output),
        Command::Bench { common, workers } => (bench(&common, workers)?, common.output),
    };
    match output {
        Some(path) => std::fs::write(&path, &outcome.text).map_err(|e| {
            Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("{}", outcome.text),
    }
    if outcome.status == 0 {
        Ok(())
    } else {
        Err(Failure::Status(outcome.status))
    }
}

fn max_order(flag: Option<u128>) -> Result<Option<u128>, Error> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("FSZD_MAX_ORDER") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("FSZD_MAX_ORDER={v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn limits(flag: Option<u128>) -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Some(n) = max_order(flag)? {
        limits.max_enumeration = n;
    }
    Ok(limits)
}

fn load(common: &Common) -> Result<Group, Error> {
    construct_group_with(&common.group, limits(common.max_order)?)
}

fn session(common: &Common, options: SessionOptions) -> Result<Session, Error> {
    Ok(Session::with_options(load(common)?, options)?.with_label(common.group.clone()))
}

fn indicators(
    common: &Common,
    m: Option<Vec<u64>>,
    backend: Backend,
    workers: usize,
) -> Result<Outcome, Error> {
    let options = SessionOptions {
        backend,
        workers,
        ..SessionOptions::default()
    };
    let report = session(common, options)?.all_indicators(m.as_deref())?;
    let text = match common.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv()?,
        Format::Table => report.to_table(),
    };
    Ok(Outcome { text, status: 0 })
}

fn fsz(common: &Common, d: u64, workers: usize) -> Result<Outcome, Error> {
    let options = SessionOptions {
        workers,
        ..SessionOptions::default()
    };
    let session = session(common, options)?;
    let outcome = session.fsz_test(d)?;
    let status = if outcome.verdict { 0 } else { 1 };
    let rep = |c: usize| session.classes().representative(c).to_string();
    let text = match common.format {
        Format::Json => {
            let witness = outcome.witness.as_ref().map(|w| {
                json!({
                    "z_class": w.z_class,
                    "z": rep(w.z_class),
                    "m": w.m,
                    "chi": w.chi,
                    "beta": w.beta,
                    "beta_pretty": w.beta.pretty(),
                })
            });
            let v = json!({
                "group": common.group,
                "d": d,
                "fsz": outcome.verdict,
                "witness": witness,
                "beta_evaluations": outcome.beta_evaluations,
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("group,d,fsz,z_class,m,chi,beta,beta_evaluations\n");
            let w = outcome.witness.as_ref();
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                csv_field(&common.group),
                d,
                outcome.verdict,
                w.map_or(String::new(), |w| w.z_class.to_string()),
                w.map_or(String::new(), |w| w.m.to_string()),
                w.map_or(String::new(), |w| w.chi.to_string()),
                w.map_or(String::new(), |w| csv_field(&w.beta.pretty())),
                outcome.beta_evaluations
            );
            s
        }
        Format::Table => {
            let mut s = format!("FSZ: {}\n", outcome.verdict);
            if d != 1 {
                let _ = writeln!(s, "d: {d}");
            }
            if let Some(w) = &outcome.witness {
                let _ = writeln!(
                    s,
                    "witness: z-class {} {}, m = {}, chi = {}, beta = {}",
                    w.z_class,
                    rep(w.z_class),
                    w.m,
                    w.chi,
                    w.beta.pretty()
                );
            }
            let _ = writeln!(s, "beta evaluations: {}", outcome.beta_evaluations);
            s
        }
    };
    Ok(Outcome { text, status })
}

fn gamma(common: &Common, z_class: usize, m: u64, backend: Backend) -> Result<Outcome, Error> {
    let session = session(common, SessionOptions::default())?;
    let f = session.gamma_with(z_class, m, backend)?;
    let reduction = match session.reduce_gamma_params(z_class, m)? {
        GammaReduction::Delta => "delta".to_string(),
        GammaReduction::Zero => "zero".to_string(),
        GammaReduction::Reduced { m, a } => format!("psi^{a} gamma_{m}"),
    };
    let cd = session.centralizer(z_class)?;
    let classes = cd.classes();
    let values: Vec<String> = f.values().iter().map(|v| v.pretty()).collect();
    let text = match common.format {
        Format::Json => {
            let rows: Vec<_> = (0..classes.len())
                .map(|c| {
                    json!({
                        "index": c,
                        "rep": classes.representative(c).to_string(),
                        "size": classes.size(c),
                        "value": values[c],
                    })
                })
                .collect();
            let v = json!({
                "group": common.group,
                "z_class": z_class,
                "z": cd.z().to_string(),
                "m": m,
                "reduction": reduction,
                "classes": rows,
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("index,rep,size,value\n");
            for c in 0..classes.len() {
                let rep = classes.representative(c).to_string();
                let _ = writeln!(s, "{c},{},{},{}", csv_field(&rep), classes.size(c), values[c]);
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "gamma for z = {} (class {z_class}), m = {m} [{reduction}]\n",
                cd.z()
            );
            let reps: Vec<String> = (0..classes.len())
                .map(|c| classes.representative(c).to_string())
                .collect();
            let w = reps.iter().map(String::len).max().unwrap_or(0).max(3);
            let _ = writeln!(s, "class  {:<w$}  size  value", "rep");
            for c in 0..classes.len() {
                let _ = writeln!(s, "{c:>5}  {:<w$}  {:>4}  {}", reps[c], classes.size(c), values[c]);
            }
            let _ = writeln!(s, "values: {}", values.join(" "));
            s
        }
    };
    Ok(Outcome { text, status: 0 })
}

fn selftest(flag: Option<u128>, format: Format) -> Result<Outcome, Error> {
    let bound = max_order(flag)?.unwrap_or(oracle::DEFAULT_ORDER_BOUND);
    let entries = oracle::selftest(bound, Limits::default())?;
    let mismatches: usize = entries.iter().map(|e| e.mismatches).sum();
    let checks: usize = entries.iter().map(|e| e.checks).sum();
    let text = match format {
        Format::Json => {
            let v = json!({
                "max_order": bound.to_string(),
                "groups": entries,
                "checks": checks,
                "mismatches": mismatches,
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("group,order,checks,mismatches\n");
            for e in &entries {
                let _ = writeln!(s, "{},{},{},{}", csv_field(&e.group), e.order, e.checks, e.mismatches);
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for e in &entries {
                let _ = writeln!(
                    s,
                    "{:<8} order {:>4}: {:>5} checks, {} mismatches",
                    e.group, e.order, e.checks, e.mismatches
                );
            }
            let _ = writeln!(s, "total: {checks} checks, {mismatches} mismatches");
            s
        }
    };
    Ok(Outcome {
        text,
        status: u8::from(mismatches > 0),
    })
}

fn bench(common: &Common, workers: usize) -> Result<Outcome, Error> {
    let bound = max_order(common.max_order)?.unwrap_or(oracle::DEFAULT_ORDER_BOUND);
    let group = construct_group_with(&common.group, Limits::default())?;
    let b = oracle::bench(&common.group, &group, workers, bound)?;
    let text = match common.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "group": b.group,
            "order": b.order,
            "simples": b.simples,
            "ms": b.ms,
            "workers": b.workers,
            "class_level_seconds": b.class_level.as_secs_f64(),
            "naive_seconds": b.naive.as_secs_f64(),
            "ratio": b.ratio,
            "mismatches": b.mismatches,
        }))
        .expect("json value")
            + "\n",
        Format::Csv => format!(
            "group,order,simples,workers,class_level_seconds,naive_seconds,ratio,mismatches\n{},{},{},{},{:.6},{:.6},{:.2},{}\n",
            csv_field(&b.group),
            b.order,
            b.simples,
            b.workers,
            b.class_level.as_secs_f64(),
            b.naive.as_secs_f64(),
            b.ratio,
            b.mismatches
        ),
        Format::Table => format!(
            "group {} (order {}), {} simples x {} values of m, workers {}\nclass-level: {:.3}s\nnaive:       {:.3}s\nratio:       {:.1}x\nmismatches:  {}\n",
            b.group,
            b.order,
            b.simples,
            b.ms.len(),
            b.workers,
            b.class_level.as_secs_f64(),
            b.naive.as_secs_f64(),
            b.ratio,
            b.mismatches
        ),
    };
    Ok(Outcome {
        text,
        status: u8::from(b.mismatches > 0),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("(1,2)"), "\"(1,2)\"");
        assert_eq!(csv_field("()"), "()");
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["fszd", "indicators", "--group", "S3", "--m", "2,3"]).unwrap();
        match cli.command {
            Command::Indicators { common, m, .. } => {
                assert_eq!(common.group, "S3");
                assert_eq!(m, Some(vec![2, 3]));
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["fszd", "frobnicate"]).is_err());
        assert!(Cli::try_parse_from(["fszd", "fsz", "--group", "S3", "--bogus"]).is_err());
    }
}
