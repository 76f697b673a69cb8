use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use metaplectic_ice::coeffring::{gauss_sums_numeric, poly_to_json, NumericBackend};
use metaplectic_ice::lattice::{
    build_system, partition_by_charge_with, partition_function_with, LeftBoundary, Mutation, Partition,
    PartitionEngine, Variant, VertexType, WeightTable,
};
use metaplectic_ice::rmatrix::{
    kojima_match, kojima_reference_text, BasisChange, KojimaOptions, RBase, RCase, RTable, Rep, TwistFunction, Vars,
};
use metaplectic_ice::scattering::{intertwiner_check, scattering_identity_check, taumatch_check, whittaker_report};
use metaplectic_ice::ybe::{
    case10_tables, numeric_sample, rrr_check, rtt_check_all, unitarity_check, unitarity_normalized_check, NumericSuite,
    RttConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "metice",
    version,
    about = "Metaplectic ice partition functions and Yang-Baxter checks"
)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition function of the system attached to a partition.
    Partition(PartitionArgs),
    /// Run a verification suite; exit 1 if it finds a counterexample.
    Verify(VerifyArgs),
    /// Dump a weight table.
    Tables(TablesArgs),
    /// Derived quantities.
    Compute {
        #[command(subcommand)]
        what: ComputeCommand,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Enum,
    Transfer,
    Both,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[arg(long, default_value_t = 1)]
    n: u32,
    /// Number of rows (defaults to the number of parts).
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    lambda: String,
    /// Left-edge charges, one per row: computes Z_lambda(z; c).
    #[arg(long)]
    charges: Option<String>,
    /// `gamma` or `modified`; defaults to `modified` with --charges, else `gamma`.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum, default_value_t = EngineArg::Transfer)]
    engine: EngineArg,
    /// Grid width; defaults to lambda_1 + r with --charges, else lambda_1 + r + 1.
    #[arg(long)]
    ncols: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Rtt,
    Rrr,
    Unitarity,
    Kojima,
    Taumatch,
    Scattering,
    Intertwiner,
    Case10,
    Numeric,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Row weights for `rtt` (both when omitted).
    #[arg(long)]
    variant: Option<String>,
    /// Inject a weight fault (`b1`).
    #[arg(long)]
    mutate: Option<String>,
    /// Decoration offset for `case10`.
    #[arg(long, default_value_t = 1)]
    k: i64,
    #[arg(long, default_value = "1,0")]
    lambda: String,
    #[arg(long)]
    r: Option<usize>,
    /// Simple root index for `scattering` and `intertwiner` (all when omitted).
    #[arg(long)]
    i: Option<usize>,
    /// Prime for the numeric oracle (defaults to the least prime p = 1 mod 2n).
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fraction of cases sampled by the numeric oracle.
    #[arg(long, default_value_t = 0.1)]
    fraction: f64,
    /// Kojima comparison: also negate the crossing entries.
    #[arg(long)]
    flip_iii: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableName {
    GammaVertex,
    ModifiedVertex,
    GammaR,
    Rhat,
    RhatPrinted,
    Kojima,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, value_enum)]
    table: TableName,
    #[arg(long, default_value_t = 2)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum ComputeCommand {
    /// Charge-restricted partition functions against Whittaker coset data.
    Whittaker {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        r: Option<usize>,
    },
}

/// A JSON document and whether the command verified what it was asked to.
struct Outcome {
    doc: Value,
    pass: bool,
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().with_context(|| format!("bad {what} entry {t:?}")))
        .collect()
}

fn rows_for(lambda: &Partition, r: Option<usize>) -> usize {
    r.unwrap_or(lambda.parts().len().max(1))
}

fn cmd_partition(a: &PartitionArgs) -> Result<Outcome> {
    let lambda = Partition::parse(&a.lambda)?;
    let r = rows_for(&lambda, a.r);
    let charges = a.charges.as_deref().map(|c| parse_list(c, "charge")).transpose()?;
    let restricted = charges.is_some();
    let variant: Variant = match &a.variant {
        Some(v) => v.parse()?,
        None if restricted => Variant::Modified,
        None => Variant::Gamma,
    };
    let ncols = a
        .ncols
        .unwrap_or(lambda.first() as usize + r + usize::from(!restricted));
    let sys = build_system(&lambda, r, a.n, ncols, vec![LeftBoundary::Free; r], variant)?;
    let table = WeightTable::new(variant, a.n);
    let eval = |engine| -> Result<_> {
        Ok(match &charges {
            Some(c) => partition_by_charge_with(&sys, &table, c, engine)?,
            None => partition_function_with(&sys, &table, engine, None),
        })
    };
    let (value, agree) = match a.engine {
        EngineArg::Enum => (eval(PartitionEngine::Enumerate)?, None),
        EngineArg::Transfer => (eval(PartitionEngine::Transfer)?, None),
        EngineArg::Both => {
            let x = eval(PartitionEngine::Transfer)?;
            let y = eval(PartitionEngine::Enumerate)?;
            let same = x == y;
            (x, Some(same))
        }
    };
    let mut doc = json!({
        "lambda": lambda.padded(r)?,
        "r": r,
        "n": a.n,
        "ncols": ncols,
        "variant": variant,
        "charges": charges,
        "engine": format!("{:?}", a.engine).to_lowercase(),
        "text": value.to_string(),
        "value": poly_to_json(&value),
    });
    if let Some(same) = agree {
        doc["engines_agree"] = json!(same);
    }
    Ok(Outcome {
        doc,
        pass: agree.unwrap_or(true),
    })
}

fn default_backend(n: u32, prime: Option<u64>) -> Result<NumericBackend> {
    if let Some(p) = prime {
        return Ok(gauss_sums_numeric(p, n)?);
    }
    let step = 2 * n as u64;
    (1..)
        .map(|k| k * step + 1)
        .find_map(|p| gauss_sums_numeric(p, n).ok())
        .context("no prime found")
}

struct Suites<'a> {
    args: &'a VerifyArgs,
    reports: Vec<Value>,
    pass: bool,
}

impl Suites<'_> {
    fn push(&mut self, name: &str, pass: bool, report: impl serde::Serialize) -> Result<()> {
        self.pass &= pass;
        let mut v = serde_json::to_value(report)?;
        if let Value::Object(m) = &mut v {
            m.insert("check".into(), json!(name));
            m.insert("pass".into(), json!(pass));
        }
        self.reports.push(v);
        Ok(())
    }

    fn rtt(&mut self) -> Result<()> {
        let a = self.args;
        let variants = match &a.variant {
            Some(v) => vec![v.parse::<Variant>()?],
            None => vec![Variant::Gamma, Variant::Modified],
        };
        let mutation = a.mutate.as_deref().map(str::parse::<Mutation>).transpose()?;
        for variant in variants {
            let mut cfg = RttConfig::new(a.n, variant);
            cfg.mutation = mutation;
            let rep = rtt_check_all(&cfg)?;
            self.push("rtt", rep.pass(), &rep)?;
        }
        Ok(())
    }

    fn rrr(&mut self) -> Result<()> {
        let n = self.args.n;
        let tables = [
            RTable::gamma(n),
            RTable::rhat(n),
            RTable::gamma(n).change_basis(BasisChange::plus_power(Rep::One)),
            RTable::gamma(n).twist(TwistFunction::kojima(n))?,
            RTable::rhat(n).twist(TwistFunction::kojima(n))?,
        ];
        for t in &tables {
            let rep = rrr_check(t)?;
            self.push("rrr", rep.pass(), &rep)?;
        }
        Ok(())
    }

    fn unitarity(&mut self) -> Result<()> {
        let rep = unitarity_check(self.args.n)?;
        self.push("unitarity", rep.pass(), &rep)?;
        let rep = unitarity_normalized_check(self.args.n)?;
        self.push("unitarity-normalized", rep.pass(), &rep)
    }

    fn kojima(&mut self) -> Result<()> {
        let opts = KojimaOptions {
            flip_iii: self.args.flip_iii,
            ..KojimaOptions::default()
        };
        let rep = kojima_match(self.args.n, &opts)?;
        self.push("kojima", rep.pass, &rep)
    }

    fn taumatch(&mut self) -> Result<()> {
        let rep = taumatch_check(self.args.n)?;
        self.push("taumatch", rep.pass, &rep)
    }

    fn roots(&self, r: usize) -> Result<Vec<usize>> {
        match self.args.i {
            Some(i) if i == 0 || i >= r => bail!("--i must lie in 1..{r}"),
            Some(i) => Ok(vec![i]),
            None => Ok((1..r).collect()),
        }
    }

    fn scattering(&mut self) -> Result<()> {
        let lambda = Partition::parse(&self.args.lambda)?;
        let r = rows_for(&lambda, self.args.r);
        for i in self.roots(r)? {
            let rep = scattering_identity_check(&lambda, r, self.args.n, i)?;
            self.push("scattering", rep.pass, &rep)?;
        }
        Ok(())
    }

    fn intertwiner(&mut self) -> Result<()> {
        let r = self.args.r.unwrap_or(2);
        for i in self.roots(r)? {
            let rep = intertwiner_check(self.args.n, r, i)?;
            self.push("intertwiner", rep.pass, &rep)?;
        }
        Ok(())
    }

    fn case10(&mut self) -> Result<()> {
        let tables = case10_tables(self.args.n, self.args.k)?;
        for t in &tables {
            self.push("case10", t.equal, t)?;
        }
        Ok(())
    }

    fn numeric(&mut self) -> Result<()> {
        let a = self.args;
        let backend = default_backend(a.n, a.prime)?;
        let defect = backend.relation_defect();
        self.push(
            "gauss-relations",
            defect < 1e-9,
            json!({"n": a.n, "p": backend.p, "defect": defect, "tolerance": 1e-9}),
        )?;
        for suite in [NumericSuite::Rtt, NumericSuite::Rrr, NumericSuite::Unitarity] {
            let rep = numeric_sample(suite, a.n, &backend, a.seed, a.fraction)?;
            self.push("numeric", rep.pass, &rep)?;
        }
        Ok(())
    }

    fn run(&mut self, suite: Suite) -> Result<()> {
        match suite {
            Suite::Rtt => self.rtt(),
            Suite::Rrr => self.rrr(),
            Suite::Unitarity => self.unitarity(),
            Suite::Kojima => self.kojima(),
            Suite::Taumatch => self.taumatch(),
            Suite::Scattering => self.scattering(),
            Suite::Intertwiner => self.intertwiner(),
            Suite::Case10 => self.case10(),
            Suite::Numeric => self.numeric(),
            Suite::All => {
                for s in [Suite::Rtt, Suite::Rrr, Suite::Unitarity, Suite::Kojima, Suite::Taumatch] {
                    self.run(s)?;
                }
                if self.args.n >= 2 && self.args.k.rem_euclid(self.args.n as i64) != 0 {
                    self.case10()?;
                }
                self.scattering()?;
                self.intertwiner()?;
                self.numeric()
            }
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    if a.n == 0 {
        bail!("--n must be positive");
    }
    if a.mutate.is_some() && a.suite != Suite::Rtt {
        bail!("--mutate applies to the rtt suite only");
    }
    let mut s = Suites {
        args: a,
        reports: Vec::new(),
        pass: true,
    };
    s.run(a.suite)?;
    let suite = serde_json::to_value(format!("{:?}", a.suite).to_lowercase())?;
    Ok(Outcome {
        doc: json!({"suite": suite, "n": a.n, "pass": s.pass, "reports": s.reports}),
        pass: s.pass,
    })
}

fn vertex_table(variant: Variant, n: u32) -> Value {
    let table = WeightTable::new(variant, n);
    let rows: Vec<Value> = VertexType::ALL
        .iter()
        .map(|&vt| {
            let by_charge: Vec<Value> = (0..n as i64)
                .map(|a| {
                    let w = table.vertex_weight(vt, a, 0, 1);
                    json!({"charge": a, "text": w.to_string(), "weight": poly_to_json(&w)})
                })
                .collect();
            json!({
                "vertex": vt.name(),
                "spins": vt.spins().map(|s| s.symbol().to_string()),
                "weights": by_charge,
            })
        })
        .collect();
    json!({"table": format!("{variant}-vertex"), "n": n, "order": "left, top, right, bottom", "entries": rows})
}

fn r_table(name: &str, base: RBase, n: u32) -> Value {
    let table = RTable::new(base, n);
    let vars = Vars::pair();
    let entries = table.entries(&vars);
    let cases: Vec<Value> = RCase::ALL
        .iter()
        .map(|&case| {
            let rows: Vec<Value> = entries
                .iter()
                .filter(|(_, c, _)| *c == case)
                .map(|(l, _, w)| json!({"labels": l.map(|x| x.to_string()), "weight": w}))
                .collect();
            let mut v = json!({"case": case.to_string(), "pattern": case.pattern(), "entries": rows});
            if base == RBase::Kojima {
                v["reference"] = json!(kojima_reference_text(case));
            }
            v
        })
        .collect();
    json!({
        "table": name,
        "n": n,
        "order": "bottom-left, top-left, top-right, bottom-right",
        "cases": cases,
    })
}

fn cmd_tables(a: &TablesArgs) -> Result<Outcome> {
    if a.n == 0 {
        bail!("--n must be positive");
    }
    let doc = match a.table {
        TableName::GammaVertex => vertex_table(Variant::Gamma, a.n),
        TableName::ModifiedVertex => vertex_table(Variant::Modified, a.n),
        TableName::GammaR => r_table("gamma-r", RBase::Gamma, a.n),
        TableName::Rhat => r_table("rhat", RBase::Rhat, a.n),
        TableName::RhatPrinted => r_table("rhat-printed", RBase::RhatPrinted, a.n),
        TableName::Kojima => r_table("kojima", RBase::Kojima, a.n),
    };
    Ok(Outcome { doc, pass: true })
}

fn cmd_compute(c: &ComputeCommand) -> Result<Outcome> {
    match c {
        ComputeCommand::Whittaker { n, lambda, r } => {
            let lambda = Partition::parse(lambda)?;
            let r = rows_for(&lambda, *r);
            let rep = whittaker_report(&lambda, r, *n)?;
            let pass = rep.engines_agree && rep.sum_matches_gamma;
            Ok(Outcome {
                doc: serde_json::to_value(&rep)?,
                pass,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot configure the worker pool")?;
    }
    match &cli.command {
        Command::Partition(a) => cmd_partition(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Tables(a) => cmd_tables(a),
        Command::Compute { what } => cmd_compute(what),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.doc).expect("JSON values serialize");
    text.push('\n');
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
