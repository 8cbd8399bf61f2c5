use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use linper::coweights::{lemma443_margin, Partition};
use linper::flagmod::{collided_fiber_mass, fiber_row};
use linper::levi::{parse_blocks, sweep_a12, verify_a12, cube, is_antistandard, RhoData};
use linper::rsorbits::{bar_e, orbit_row};
use linper::schur::{f_map, lemma242_decomposition, lemma242_index};
use linper::selftest::{run_all, Bounds};
use linper::stratcomb::{
    character_by_class, enumerate_c_pairs, enumerate_e, invariants_dim, invariants_dim_closed,
    strata_for, verify_induced_iso,
};
use linper::Error;

#[derive(Parser, Debug)]
#[command(name = "linper", version, about = "Exhaustive checks of linear-period combinatorics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long, env = "LINPER_JOBS", global = true)]
    jobs: Option<usize>,
    /// Sweep bound override for `selftest`, as key=value (repeatable).
    #[arg(long = "bound", value_name = "KEY=VALUE", global = true)]
    bounds: Vec<String>,
    /// Random seed. Every check is exact and deterministic, so this is accepted and ignored.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur decomposition of Sym^d(wedge^2 V) x Sym^(d'-d) V for dim V = 2n.
    Lemma242 { n: usize, d: u32, dp: u32 },
    /// Condition-(C) pairs, the set E, strata and the Ind_E character.
    Strata { d: usize, dp: usize },
    /// Flag-stack dimension margins for all |mu|, |mu'| <= dmax.
    Flagdim { dmax: u32 },
    /// Collided fiber mass: degree, leading coefficient and |E|.
    Fibermass { d: u32, dp: u32 },
    /// K-orbits on complete flags over F_q against bar_E.
    Orbits { d: usize, dp: usize, q: u32 },
    /// Levi inequality sweep; blocks like 1,3/2,4.
    Levi {
        n: usize,
        blocks: String,
        lambda_bound: i64,
        nu_bound: i64,
    },
    /// Every acceptance check at default bounds.
    Selftest,
}

/// A table plus its JSON rendering and any failed checks.
struct Report {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
    failures: Vec<String>,
}

impl Report {
    fn new(header: Vec<&'static str>) -> Self {
        Report {
            header,
            rows: Vec::new(),
            json: Value::Null,
            failures: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn fail(&mut self, statement: impl Into<String>) {
        self.failures.push(statement.into());
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = self.header.join("\t") + "\n";
                for r in &self.rows {
                    out += &(r.join("\t") + "\n");
                }
                for f in &self.failures {
                    out += &format!("FAIL\t{f}\n");
                }
                out
            }
            Format::Json => {
                let doc = json!({
                    "ok": self.failures.is_empty(),
                    "rows": self.json,
                    "failures": self.failures,
                });
                serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn csv(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn set_str<'a>(s: impl IntoIterator<Item = &'a usize>) -> String {
    let items: Vec<String> = s.into_iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn lemma242(n: usize, d: u32, dp: u32) -> Result<Report, Error> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut rep = Report::new(vec!["lambda", "mult", "indexed", "f_map"]);
    let dec = lemma242_decomposition(n, d, dp)?;
    let index = lemma242_index(n, d, dp)?;
    let mut json_rows = Vec::new();
    for (lambda, &mult) in dec.multiplicities() {
        let indexed = index.contains(lambda);
        let image = if indexed {
            f_map(lambda, n, d, dp)?.to_string()
        } else {
            "-".to_string()
        };
        rep.row(vec![lambda.to_string(), mult.to_string(), indexed.to_string(), image.clone()]);
        json_rows.push(json!({"lambda": lambda, "mult": mult, "indexed": indexed, "f_map": image}));
        if mult != 1 || !indexed {
            rep.fail(format!(
                "Schur decomposition of Sym^d(wedge^2 V) x Sym^(d'-d) V is multiplicity free over the index set: lambda={lambda} mult={mult} indexed={indexed}"
            ));
        }
    }
    for lambda in index.iter().filter(|l| dec.multiplicity(l) == 0) {
        rep.fail(format!("index set member missing from the decomposition: lambda={lambda}"));
    }
    rep.json = Value::Array(json_rows);
    Ok(rep)
}

fn strata(d: usize, dp: usize) -> Result<Report, Error> {
    let mut rep = Report::new(vec!["section", "key", "value"]);
    let pairs = enumerate_c_pairs(d, dp)?;
    let e = enumerate_e(d, dp)?;
    let mut strata_json = Vec::new();
    for p in &pairs {
        rep.row(vec!["C-pair".into(), format!("{}|{}", set_str(&p.j), set_str(&p.jp)), p.disjoint.to_string()]);
    }
    for alpha in &e {
        rep.row(vec!["E".into(), alpha.to_string(), String::new()]);
    }
    for p in pairs.iter().filter(|p| p.disjoint) {
        let ws = strata_for(&p.j, &p.jp, Some(d + dp))?;
        let names: Vec<String> = ws.iter().map(ToString::to_string).collect();
        rep.row(vec!["stratum".into(), format!("{}|{}", set_str(&p.j), set_str(&p.jp)), names.join(" ")]);
        strata_json.push(json!({"J": p.j, "Jp": p.jp, "involutions": ws}));
    }
    let chars = character_by_class(d, dp)?;
    for (class, value) in &chars {
        rep.row(vec!["character".into(), class.clone(), value.to_string()]);
    }
    let iso = verify_induced_iso(d, dp)?;
    rep.row(vec!["induced-iso".into(), String::new(), iso.to_string()]);
    if !iso {
        rep.fail(format!("Ind_E character equals the induced pair-sign character: d={d} d'={dp}"));
    }
    let mut invariants = Vec::new();
    for r in 1..=4u64 {
        let got = invariants_dim(d, dp, r)?;
        let want = invariants_dim_closed(d, dp, r) as i128;
        rep.row(vec!["invariants".into(), format!("r={r}"), got.to_string()]);
        invariants.push(json!({"r": r, "dim": got, "closed": want}));
        if got != want {
            rep.fail(format!("invariant dimension matches Sym^d(wedge^2 W) x Sym^(d'-d) W: d={d} d'={dp} r={r}"));
        }
    }
    rep.json = json!({
        "c_pairs": pairs,
        "E": e,
        "strata": strata_json,
        "character": chars,
        "induced_iso": iso,
        "invariants": invariants,
    });
    Ok(rep)
}

fn flagdim(dmax: u32) -> Result<Report, Error> {
    let mut rep = Report::new(vec!["mu", "mu'", "degree", "margin", "interleaved"]);
    let parts: Vec<Partition> = (0..=dmax).flat_map(Partition::all_of).collect();
    let mut rows = Vec::new();
    for mu in &parts {
        for mu_p in &parts {
            let row = fiber_row(mu, mu_p);
            rep.row(vec![
                mu.to_string(),
                mu_p.to_string(),
                row.degree.to_string(),
                row.margin.to_string(),
                row.interleaved.to_string(),
            ]);
            let eq = lemma443_margin(mu, mu_p).equality;
            if row.margin > 0 || eq != row.interleaved || row.degree != row.margin - i64::from(mu_p.size()) {
                rep.fail(format!(
                    "flag-stack dimension is at most -d' with equality iff interleaved: mu={mu} mu'={mu_p}"
                ));
            }
            rows.push(row);
        }
    }
    rep.json = to_json(&rows);
    Ok(rep)
}

fn fibermass(d: u32, dp: u32) -> Result<Report, Error> {
    let mut rep = Report::new(vec!["d", "d'", "degree", "leading", "|E|", "match"]);
    let c = collided_fiber_mass(d, dp)?;
    rep.row(vec![
        d.to_string(),
        dp.to_string(),
        c.degree.to_string(),
        c.leading.to_string(),
        c.e_count.to_string(),
        c.matches().to_string(),
    ]);
    if !c.matches() {
        rep.fail(format!(
            "collided fiber mass has degree -d' and leading coefficient |E|: d={d} d'={dp}"
        ));
    }
    rep.json = json!([{
        "d": d, "dp": dp, "degree": c.degree, "leading": c.leading,
        "E": c.e_count, "match": c.matches(), "mass": c.mass,
    }]);
    Ok(rep)
}

fn orbits(d: usize, dp: usize, q: u32) -> Result<Report, Error> {
    let mut rep = Report::new(vec!["d", "d'", "q", "orbits", "barE", "dual_barE", "match"]);
    let r = orbit_row(d, dp, q)?;
    rep.row(vec![
        d.to_string(),
        dp.to_string(),
        q.to_string(),
        r.orbits.to_string(),
        r.bar_e.to_string(),
        r.dual_bar_e.to_string(),
        r.matches().to_string(),
    ]);
    if !r.matches() {
        rep.fail(format!("K-orbits on flags are counted by bar_E and its dual: d={d} d'={dp} q={q}"));
    }
    rep.json = json!([{ "row": r, "match": r.matches(), "barE": bar_e(d, dp) }]);
    Ok(rep)
}

fn levi(n: usize, blocks: &str, lambda_bound: i64, nu_bound: i64) -> Result<Report, Error> {
    if lambda_bound < 0 || nu_bound < 0 {
        return Err(Error::Precondition("bounds must be nonnegative".into()));
    }
    let l = parse_blocks(n, blocks)?;
    let mut rep = Report::new(vec![
        "levi", "antistandard", "cells", "mu_checked", "equalities", "divergent_lambdas", "holds",
    ]);
    let s = sweep_a12(&l, lambda_bound, nu_bound)?;
    rep.row(vec![
        l.to_string(),
        is_antistandard(&l).to_string(),
        s.cells.to_string(),
        s.mu_checked.to_string(),
        s.equalities.to_string(),
        s.divergent_lambdas.to_string(),
        s.holds().to_string(),
    ]);
    for w in &s.failures {
        rep.fail(format!(
            "antistandard Levi inequality f(mu) <= <lambda, 2rho - 2rho_M> and its equality case: lambda={} mu={} mu'={} f={} rhs={}",
            csv(&w.lambda), csv(&w.mu), csv(&w.mu_prime), w.f, w.rhs
        ));
    }
    let mut reports = Vec::new();
    let nus: Vec<Vec<i64>> = cube(n, nu_bound)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    for lambda in cube(n, lambda_bound) {
        for nu in &nus {
            let r = verify_a12(&lambda, nu, &l)?;
            if !r.witnesses.is_empty() || !r.failures.is_empty() {
                reports.push(r);
            }
        }
    }
    rep.json = json!({ "summary": s, "rho": RhoData::new(&l), "reports": reports });
    Ok(rep)
}

fn selftest(bounds: &Bounds) -> Report {
    let mut rep = Report::new(vec!["criterion", "statement", "checked", "passed"]);
    let results = run_all(bounds);
    for r in &results {
        rep.row(vec![r.id.to_string(), r.name.to_string(), r.checked.to_string(), r.passed.to_string()]);
        for f in &r.failures {
            rep.fail(format!("criterion {}: {f}", r.id));
        }
    }
    rep.json = to_json(&results);
    rep
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let mut bounds = Bounds::default();
    for b in &cli.bounds {
        bounds.set(b)?;
    }
    let raised = bounds.raised();
    if !raised.is_empty() {
        eprintln!("warning: bounds raised above defaults ({}); runtime may grow sharply", raised.join(", "));
    }
    match &cli.command {
        Command::Lemma242 { n, d, dp } => lemma242(*n, *d, *dp),
        Command::Strata { d, dp } => {
            if d + dp > 8 {
                return Err(Error::SizeBound(format!("d + d' = {} exceeds 8", d + dp)));
            }
            strata(*d, *dp)
        }
        Command::Flagdim { dmax } => flagdim(*dmax),
        Command::Fibermass { d, dp } => fibermass(*d, *dp),
        Command::Orbits { d, dp, q } => orbits(*d, *dp, *q),
        Command::Levi {
            n,
            blocks,
            lambda_bound,
            nu_bound,
        } => levi(*n, blocks, *lambda_bound, *nu_bound),
        Command::Selftest => Ok(selftest(&bounds)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            // A closed pipe (e.g. `| head`) is not an error for the caller.
            let _ = std::io::stdout().lock().write_all(report.render(cli.format).as_bytes());
            if report.failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
