use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hookdiff::cores::{m_core, quotient_and_shift};
use hookdiff::qseries::{qt_catalan, reflected_catalan, rhs_series};
use hookdiff::verifier::{
    conjecture_scan, list_identities, statistic_series, verify, Filter, StatSpec, Statistic,
    VerificationReport, VerifyOptions,
};
use hookdiff::walks::departure_words;
use hookdiff::{parse_partition, Params, Partition, QTSeries, StatParams};
use serde_json::{json, Value};

/// Hook-difference statistics, cores and identity checks for integer partitions.
#[derive(Parser, Debug)]
#[command(name = "hookdiff", version)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for enumeration (0 = all cores). Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Omit wall-clock timings so identical arguments give identical bytes.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h_{alpha,beta} of a partition and the cells it counts.
    Stat {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
        #[arg(long, default_value_t = 1)]
        alpha: u32,
        #[arg(long, default_value_t = 1)]
        beta: u32,
    },
    /// The m-core of a partition.
    Core {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// The m-quotient and m-shift of a partition.
    Quotient {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Departure words of the (m-1,1) border path and their inversion total.
    Words {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// q^binom(n,2) C_n(1/q) and the q,t-Catalan polynomial.
    Catalan {
        #[arg(long)]
        n: usize,
    },
    /// Expand a brute-force statistic series, or the closed side of an identity.
    Series(SeriesArgs),
    /// Check a registered identity.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 12)]
        qmax: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Scan a conjecture up to a size bound.
    Conjecture {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Registered identities with their formulas.
    ListIdentities,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    core: Option<Partition>,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params {
            m: self.m,
            j: self.j,
            n: self.n,
            alpha: self.alpha,
            beta: self.beta,
            core: self.core.clone(),
        }
    }
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, default_value_t = 10)]
    qmax: usize,
    /// Closed form of this identity instead of a brute-force series.
    #[arg(long)]
    rhs: Option<String>,
    /// Statistic: h (with --alpha/--beta), h0, a (with --a-m), h11+h0, none.
    #[arg(long, default_value = "h")]
    stat: String,
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    #[arg(long, default_value_t = 1)]
    beta: u32,
    #[arg(long = "a-m", default_value_t = 2)]
    a_m: usize,
    /// Keep partitions with 2-core size binom(2j,2).
    #[arg(long, allow_hyphen_values = true)]
    two_core_j: Option<i64>,
    /// Keep partitions with this m-core (needs --m).
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    core: Option<Partition>,
    #[arg(long)]
    m: Option<usize>,
    /// Keep partitions inside the n-staircase.
    #[arg(long)]
    staircase: Option<usize>,
    #[arg(long)]
    distinct: bool,
    /// Keep m-restricted partitions.
    #[arg(long)]
    restricted: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
}

type Fallible<T> = Result<T, String>;

fn series_json(s: &QTSeries) -> Value {
    json!({ "qmax": s.qmax(), "triples": s.triples() })
}

fn pretty<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn report_text(r: &VerificationReport) -> String {
    let mut out = format!("{}: {} to q^{}\n", r.id, r.status.as_str(), r.qmax);
    if let Some(m) = &r.first_mismatch {
        out += &format!(
            "first mismatch at q^{} t^{}: lhs {} rhs {}\n",
            m.q_exp, m.t_exp, m.lhs, m.rhs
        );
    }
    for note in &r.notes {
        out += &format!("note: {note}\n");
    }
    if r.elapsed_ms > 0 {
        out += &format!("elapsed: {} ms\n", r.elapsed_ms);
    }
    out
}

fn build_series(a: &SeriesArgs, threads: usize) -> Fallible<QTSeries> {
    if let Some(id) = &a.rhs {
        let params = Params {
            m: a.m,
            j: a.j,
            n: a.n,
            alpha: Some(a.alpha),
            beta: Some(a.beta),
            core: a.core.clone(),
        };
        return rhs_series(id, &params, a.qmax).map_err(|e| e.to_string());
    }
    let statistic = match a.stat.as_str() {
        "h" => Statistic::h(a.alpha, a.beta).map_err(|e| e.to_string())?,
        "h0" => Statistic::HZero,
        "a" => Statistic::A(a.a_m),
        "h11+h0" => Statistic::HookPlusZero,
        "none" => Statistic::Trivial,
        other => return Err(format!("unknown statistic `{other}`")),
    };
    let mut filters = Vec::new();
    if let Some(j) = a.two_core_j {
        filters.push(Filter::TwoCoreSize(j));
    }
    if let Some(core) = &a.core {
        let m = a.m.ok_or("--core needs --m")?;
        filters.push(Filter::MCore { m, core: core.clone() });
    }
    if let Some(n) = a.staircase {
        filters.push(Filter::FitsStaircase(n));
    }
    if a.distinct {
        filters.push(Filter::DistinctParts);
    }
    if let Some(m) = a.restricted {
        filters.push(Filter::MRestricted(m));
    }
    if filters.is_empty() {
        filters.push(Filter::All);
    }
    let spec = StatSpec::new(statistic, filters).map_err(|e| e.to_string())?;
    statistic_series(&spec, a.qmax, threads).map_err(|e| e.to_string())
}

/// Runs one command, returning the output and whether a counterexample was found.
fn run(cli: &Cli) -> Fallible<(String, bool)> {
    let opts = VerifyOptions {
        threads: cli.threads,
        timed: !cli.seedless,
    };
    let err = |e: hookdiff::Error| e.to_string();
    let (text, value, failed) = match &cli.command {
        Command::Stat { partition, alpha, beta } => {
            let p = StatParams::new(*alpha, *beta).map_err(err)?;
            let cells = partition.hook_set(p);
            let list: Vec<String> = cells.iter().map(ToString::to_string).collect();
            let text = format!(
                "h_{{{alpha},{beta}}}({partition}) = {}\ncells: {}\n",
                cells.len(),
                if list.is_empty() { "-".to_string() } else { list.join(" ") }
            );
            let value = json!({
                "partition": partition,
                "alpha": alpha,
                "beta": beta,
                "value": cells.len(),
                "cells": cells.iter().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
            });
            (text, pretty(&value), false)
        }
        Command::Core { m, partition } => {
            let core = m_core(partition, *m).map_err(err)?;
            (format!("{core}\n"), pretty(&json!({ "m": m, "partition": partition, "core": core })), false)
        }
        Command::Quotient { m, partition } => {
            let qs = quotient_and_shift(partition, *m).map_err(err)?;
            let comps: Vec<String> = qs.quotient.iter().map(ToString::to_string).collect();
            let shift: Vec<String> = qs.shift.iter().map(ToString::to_string).collect();
            let text = format!("quotient: ({})\nshift: ({})\n", comps.join("; "), shift.join(","));
            let value = json!({ "m": m, "partition": partition, "quotient": qs.quotient, "shift": qs.shift });
            (text, pretty(&value), false)
        }
        Command::Words { m, partition } => {
            let words = departure_words(partition, *m).map_err(err)?;
            let inv = words.inversion_total();
            let shown = if words.is_empty() { "(no words)".to_string() } else { words.to_string() };
            let text = format!("{shown}\ninversions: {inv}\n");
            let value = json!({ "m": m, "partition": partition, "words": words.to_strings(), "inversions": inv });
            (text, pretty(&value), false)
        }
        Command::Catalan { n } => {
            let c = reflected_catalan(*n);
            let qt = qt_catalan(*n);
            let text = format!("q^binom(n,2) C_n(1/q) = {}\nq,t-Catalan = {qt}\n", c.display("q"));
            let coeffs: Vec<String> = c.coeffs().iter().map(ToString::to_string).collect();
            let value = json!({ "n": n, "reflected": coeffs, "qt": series_json(&qt) });
            (text, pretty(&value), false)
        }
        Command::Series(a) => {
            let s = build_series(a, cli.threads)?;
            (format!("{s}\n"), pretty(&series_json(&s)), false)
        }
        Command::Verify { id, qmax, params } => {
            let r = verify(id, *qmax, &params.params(), opts).map_err(err)?;
            (report_text(&r), pretty(&r), !r.passed())
        }
        Command::Conjecture { name, nmax, params } => {
            let r = conjecture_scan(name, &params.params(), *nmax, opts).map_err(err)?;
            (report_text(&r), pretty(&r), !r.passed())
        }
        Command::ListIdentities => {
            let mut text = String::new();
            for i in list_identities() {
                let kind = serde_json::to_value(i.kind).expect("serializable");
                let params = if i.params.is_empty() { "-" } else { i.params };
                text += &format!("{:<18} {:<11} {:<20} {}\n", i.id, kind.as_str().unwrap_or(""), params, i.anchor);
            }
            (text, pretty(&list_identities()), false)
        }
    };
    let out = if cli.json { value } else { text };
    Ok((out, failed))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, failed)) => {
            print!("{out}");
            ExitCode::from(u8::from(failed))
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
