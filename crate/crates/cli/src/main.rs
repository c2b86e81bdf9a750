//! `qhopf`: command-line frontend for the exact classification toolkit.
//!
//! Subcommands: `classify` (abelian / cyclic / ddn), `orbits`, `conic`,
//! `snf`, `verify`, `biproduct`. Output is a deterministic TSV table by
//! default, or JSON with `--format json`; identical inputs produce
//! byte-identical output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use biprod2_core::classify::{
    conic_scan, cyclic_pairs, ddn_pairs, descriptor, dim4_semisimple_count, enumerate_pairs,
    orbit_count_cyclic,
};
use biprod2_core::cocycles::CocycleDatum;
use biprod2_core::groups::AbelianGroupSpec;
use biprod2_core::qha::{
    biproduct_theta, check_axioms, from_classification, h2, h4, hq8, kgw, nichols, pq_elements,
    QSign, QuasiHopfData,
};
use biprod2_core::zlattice::{smith_normal_form, IntMat};

#[derive(Parser)]
#[command(name = "qhopf", version, about = "Exact rank-2 biproduct classification tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "tsv", value_parser = ["tsv", "json"])]
    format: String,
    /// Exhaustive-check cap on group order / algebra dimension.
    #[arg(long, global = true, default_value_t = 64)]
    cap: u64,
    /// Write the table to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify 2-dimensional braided Hopf algebra data.
    Classify {
        #[command(subcommand)]
        target: ClassifyTarget,
    },
    /// Orbit counts for twist-inequivalent semisimple structures.
    Orbits(OrbitsArgs),
    /// Bounded rational-point scan of the two-factor conic family.
    Conic {
        #[arg(long)]
        m1: u64,
        #[arg(long)]
        m2: u64,
        #[arg(long)]
        datum: String,
    },
    /// Smith normal form of an integer matrix read from a text file
    /// (whitespace-separated rows); prints U, the diagonal, and V in the
    /// same format, separated by blank lines.
    Snf { file: std::path::PathBuf },
    /// Run the quasi-Hopf axiom and p_R/q_R report on a preset.
    Verify {
        /// h2 | h4 | hq8:+ | hq8:- | nichols:<n> | kGw:abelian:<moduli>:<datum>
        #[arg(long)]
        preset: String,
    },
    /// Build the rank-2 biproduct for a classified pair over k^G_omega.
    Biproduct {
        #[arg(long)]
        group: String,
        #[arg(long)]
        datum: String,
        /// Pair spec, e.g. "f=0,1;lambda=0,1".
        #[arg(long)]
        pair: String,
        /// Also run the axiom report on the result.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum ClassifyTarget {
    /// All (sigma, lambda, v) rows for a finite abelian group and datum.
    Abelian {
        /// Group spec, e.g. abelian:2,6.
        #[arg(long)]
        group: String,
        /// Datum spec, e.g. "c=0,0;c12=0".
        #[arg(long)]
        datum: String,
    },
    /// The cyclic-group case C_m with datum c.
    Cyclic {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        c: u64,
    },
    /// The double dihedral case: maps rho with d(rho) = flat_{R^n} omega_p.
    Ddn {
        #[arg(long)]
        n: u64,
        /// A single p, or "all".
        #[arg(long)]
        p: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OrbitsArgs {
    /// Orbits of the unit-square action on Z_n (cyclic case).
    #[arg(long)]
    cyclic: Option<u64>,
    /// The combined count in dimension 4.
    #[arg(long)]
    dim4: bool,
}

/// Rows as ordered (column, value) lists; TSV prints the values, JSON an
/// object per row in the same column order.
struct Table {
    rows: Vec<Vec<(&'static str, serde_json::Value)>>,
}

impl Table {
    fn new() -> Self {
        Table { rows: Vec::new() }
    }

    fn push(&mut self, cells: Vec<(&'static str, serde_json::Value)>) {
        self.rows.push(cells);
    }

    fn render(&self, format: &str) -> String {
        if format == "json" {
            let objects: Vec<serde_json::Value> = self
                .rows
                .iter()
                .map(|row| {
                    let mut map = serde_json::Map::new();
                    for (k, v) in row {
                        map.insert((*k).to_string(), v.clone());
                    }
                    serde_json::Value::Object(map)
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&objects).expect("serialization cannot fail");
            s.push('\n');
            s
        } else {
            let mut out = String::new();
            for row in &self.rows {
                let line: Vec<String> = row
                    .iter()
                    .map(|(_, v)| match v {
                        serde_json::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                out.push_str(&line.join("\t"));
                out.push('\n');
            }
            out
        }
    }
}

fn joined(v: &[u64]) -> serde_json::Value {
    serde_json::Value::String(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn parse_abelian(spec: &str) -> Result<AbelianGroupSpec, biprod2_core::Error> {
    let rest = spec.strip_prefix("abelian:").ok_or_else(|| {
        biprod2_core::Error::Parse(format!("expected abelian:<m1,..>, got `{spec}`"))
    })?;
    let moduli: Result<Vec<u64>, _> = rest.split(',').map(|x| x.trim().parse::<u64>()).collect();
    let moduli = moduli.map_err(|e| biprod2_core::Error::Parse(e.to_string()))?;
    AbelianGroupSpec::new(moduli)
}

fn run(cli: &Cli) -> Result<String, biprod2_core::Error> {
    let mut table = Table::new();
    match &cli.command {
        Command::Classify { target } => match target {
            ClassifyTarget::Abelian { group, datum } => {
                let g = parse_abelian(group)?;
                let d = CocycleDatum::parse(datum, g.rank())?;
                for warning in d.validate(&g)? {
                    eprintln!("warning: {warning}");
                }
                for p in enumerate_pairs(&g, &d, cli.cap)? {
                    let desc = descriptor(&g, &d, &p);
                    table.push(vec![
                        ("group", serde_json::Value::String(group.clone())),
                        ("datum", serde_json::Value::String(d.render())),
                        ("f", joined(&p.f)),
                        ("lambda", joined(&p.lambda)),
                        ("n", serde_json::json!(desc.n_modulus)),
                        ("v_exps", joined(&desc.v_exps)),
                    ]);
                }
            }
            ClassifyTarget::Cyclic { m, c } => {
                let out = cyclic_pairs(*m, *c)?;
                for (f, lambda) in &out.pairs {
                    // v = sum_j q^{(m lambda + c f) j} 1_j over modulus m^2.
                    let n = m * m;
                    let v_exps: Vec<u64> =
                        (0..*m).map(|j| ((m * lambda + c * f) * j) % n).collect();
                    table.push(vec![
                        ("group", serde_json::Value::String(format!("cyclic:{m}"))),
                        ("datum", serde_json::Value::String(format!("c={c}"))),
                        ("f", joined(&[*f])),
                        ("lambda", joined(&[*lambda])),
                        ("n", serde_json::json!(n)),
                        ("v_exps", joined(&v_exps)),
                    ]);
                }
            }
            ClassifyTarget::Ddn { n, p } => {
                let ps: Vec<u64> = if p == "all" {
                    (0..2 * n).collect()
                } else {
                    vec![p
                        .parse::<u64>()
                        .map_err(|e| biprod2_core::Error::Parse(e.to_string()))?]
                };
                for pv in ps {
                    for (i, rho) in ddn_pairs(*n, pv)?.iter().enumerate() {
                        table.push(vec![
                            ("group", serde_json::Value::String(format!("ddn:{n}"))),
                            ("p", serde_json::json!(pv)),
                            ("rho", serde_json::json!(i + 1)),
                            ("modulus", serde_json::json!(rho.modulus)),
                            ("rho_exps", joined(&rho.table)),
                        ]);
                    }
                }
            }
        },
        Command::Orbits(args) => {
            if args.dim4 {
                table.push(vec![("count", serde_json::json!(dim4_semisimple_count()))]);
            } else if let Some(n) = args.cyclic {
                if n == 0 {
                    return Err(biprod2_core::Error::InvalidParam("n must be >= 1".into()));
                }
                table.push(vec![("count", serde_json::json!(orbit_count_cyclic(n)))]);
            }
        }
        Command::Conic { m1, m2, datum } => {
            let d = CocycleDatum::parse(datum, 2)?;
            for s in conic_scan(*m1, *m2, &d)? {
                table.push(vec![
                    ("m1", serde_json::json!(m1)),
                    ("m2", serde_json::json!(m2)),
                    ("datum", serde_json::Value::String(d.render())),
                    ("x", serde_json::json!(s.x)),
                    ("y", serde_json::json!(s.y)),
                    ("lambda1", serde_json::json!(s.lambda1)),
                    ("lambda2", serde_json::json!(s.lambda2)),
                    ("k", serde_json::json!(s.k)),
                ]);
            }
        }
        Command::Snf { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| biprod2_core::Error::Parse(format!("{}: {e}", file.display())))?;
            let rows: Vec<Vec<i64>> = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| {
                    l.split_whitespace()
                        .map(|x| {
                            x.parse::<i64>().map_err(|e| biprod2_core::Error::Parse(e.to_string()))
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let a = IntMat::from_rows(&rows)?;
            let snf = smith_normal_form(&a);
            let mut out = String::new();
            let emit = |m: &IntMat, out: &mut String| {
                for i in 0..m.rows() {
                    let line: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
            };
            emit(&snf.u, &mut out);
            out.push('\n');
            let diag_line: Vec<String> = snf.diag.iter().map(|x| x.to_string()).collect();
            out.push_str(&diag_line.join(" "));
            out.push_str("\n\n");
            emit(&snf.v, &mut out);
            return Ok(out);
        }
        Command::Verify { preset } => {
            let q = parse_preset(preset)?;
            report_rows(&mut table, &q, cli.cap)?;
        }
        Command::Biproduct { group, datum, pair, check } => {
            let g = parse_abelian(group)?;
            let d = CocycleDatum::parse(datum, g.rank())?;
            let (f, lambda) = parse_pair(pair, g.rank())?;
            let pairs = enumerate_pairs(&g, &d, cli.cap)?;
            let Some(p) = pairs.iter().find(|p| p.f == f && p.lambda == lambda) else {
                return Err(biprod2_core::Error::InvalidParam(format!(
                    "pair f={f:?}, lambda={lambda:?} is not admissible for this datum"
                )));
            };
            let q = kgw(&g, &d)?;
            let desc = descriptor(&g, &d, p);
            let sv = from_classification(&g, &q, &desc);
            let bp = biproduct_theta(&q, &sv)?;
            table.push(vec![
                ("item", serde_json::Value::String("dimension".into())),
                ("status", serde_json::json!(bp.dim)),
                ("witness", serde_json::Value::String(String::new())),
            ]);
            if *check {
                report_rows(&mut table, &bp, cli.cap)?;
            }
        }
    }
    Ok(table.render(&cli.format))
}

/// Axiom + p_R/q_R report rows: `name PASS` / `name FAIL <witness>`.
fn report_rows(table: &mut Table, q: &QuasiHopfData, cap: u64) -> Result<(), biprod2_core::Error> {
    let mut push = |name: &'static str, result: &std::result::Result<(), String>| {
        table.push(vec![
            ("item", serde_json::Value::String(name.to_string())),
            (
                "status",
                serde_json::Value::String(if result.is_ok() { "PASS" } else { "FAIL" }.into()),
            ),
            ("witness", serde_json::Value::String(result.clone().err().unwrap_or_default())),
        ]);
    };
    let report = check_axioms(q, cap)?;
    for (name, result) in &report.entries {
        push(name, result);
    }
    let pq = pq_elements(q)?;
    for (name, result) in &pq.identities {
        push(name, result);
    }
    Ok(())
}

fn parse_pair(spec: &str, n: usize) -> Result<(Vec<u64>, Vec<u64>), biprod2_core::Error> {
    let mut f = None;
    let mut lambda = None;
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part.split_once('=').ok_or_else(|| {
            biprod2_core::Error::Parse(format!("expected key=value in `{part}`"))
        })?;
        let nums: Result<Vec<u64>, _> = value.split(',').map(|x| x.trim().parse::<u64>()).collect();
        let nums = nums.map_err(|e| biprod2_core::Error::Parse(e.to_string()))?;
        if nums.len() != n {
            return Err(biprod2_core::Error::Parse(format!(
                "`{key}` needs {n} entries, got {}",
                nums.len()
            )));
        }
        match key.trim() {
            "f" => f = Some(nums),
            "lambda" => lambda = Some(nums),
            other => return Err(biprod2_core::Error::Parse(format!("unknown pair key `{other}`"))),
        }
    }
    match (f, lambda) {
        (Some(f), Some(l)) => Ok((f, l)),
        _ => Err(biprod2_core::Error::Parse("pair needs both f=.. and lambda=..".into())),
    }
}

fn parse_preset(spec: &str) -> Result<QuasiHopfData, biprod2_core::Error> {
    match spec {
        "h2" => return Ok(h2()),
        "h4" => return Ok(h4()),
        "hq8:+" => return Ok(hq8(QSign::Plus)),
        "hq8:-" => return Ok(hq8(QSign::Minus)),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("nichols:") {
        let n: usize = rest
            .parse()
            .map_err(|e: std::num::ParseIntError| biprod2_core::Error::Parse(e.to_string()))?;
        return nichols(n);
    }
    for prefix in ["kGw:", "kgw:"] {
        if let Some(rest) = spec.strip_prefix(prefix) {
            // kGw:abelian:2,2:c=0,1;c12=1
            let Some((group_part, datum_part)) =
                rest.strip_prefix("abelian:").and_then(|r| r.split_once(':'))
            else {
                return Err(biprod2_core::Error::Parse(format!(
                    "expected {prefix}abelian:<moduli>:<datum>, got `{spec}`"
                )));
            };
            let g = parse_abelian(&format!("abelian:{group_part}"))?;
            let d = CocycleDatum::parse(datum_part, g.rank())?;
            return kgw(&g, &d);
        }
    }
    Err(biprod2_core::Error::Parse(format!("unknown preset `{spec}`")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(output.as_bytes()).is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
