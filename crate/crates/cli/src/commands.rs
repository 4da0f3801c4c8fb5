//! Subcommands. Decisions exit 0 (yes) or 1 (no); usage, parse and resource
//! errors exit 2.

use std::fs;
use std::io::{self, Read, Write};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use linkform::arith::factorize;
use linkform::lens::{degree_one_onto_lens, lens_residue_classes, spin_degree_one, LensSpace};
use linkform::oracle::{diagonalize_odd, gram_invariant_table, gram_quad_invariant_table, GramPairing};
use linkform::realize::{realize, realize_quadratic};
use linkform::summands::{orthogonal_summand, quadratic_summand};
use linkform::tables::{check_admissible_any, AdmissibilityReport};
use linkform::{AnyTable, Error, Flavor, Limits, Pairing, QuadraticForm};

use crate::format::{parse_gram, parse_table, table_json, GramData};
use crate::parse::{parse_expr, parse_pairing, parse_quadratic, Expr};

#[derive(Debug, Parser)]
#[command(name = "linkform", version, about = "Linking pairings and quadratic forms on finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the invariant tables of an expression.
    Invariants(InvariantsArgs),
    /// Decide whether two expressions are isomorphic.
    Iso { left: String, right: String },
    /// Decide whether a table file is admissible.
    Admissible(AdmissibleArgs),
    /// Print an expression realizing a table file.
    Realize { file: String },
    /// Decide whether `part` is an orthogonal summand of `whole`.
    Summand(SummandArgs),
    /// Decide whether the source admits a degree-one map onto L(n,q).
    Lens {
        /// Target lens space as `n,q`.
        #[arg(long)]
        target: String,
        /// Source pairing; lens sums such as `L(8,1)#L(16,3)` are accepted.
        #[arg(long)]
        source: String,
    },
    /// Decide whether the source maps with degree one onto every lens space with fundamental group Z/n.
    LensAll {
        #[arg(long)]
        pi: u64,
        #[arg(long)]
        source: String,
    },
    /// Work directly on a Gram matrix file.
    Gram(GramArgs),
    /// Quadratic-form variants.
    #[command(subcommand)]
    Quad(QuadCommand),
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    pub expr: String,
    /// Only the table at this prime.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AdmissibleArgs {
    pub file: String,
    /// List the violated conditions.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct SummandArgs {
    #[arg(long)]
    pub part: String,
    #[arg(long)]
    pub whole: String,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["invariants", "decompose", "nondegenerate"])))]
pub struct GramArgs {
    pub file: String,
    #[arg(long)]
    pub invariants: bool,
    #[arg(long)]
    pub decompose: bool,
    #[arg(long)]
    pub nondegenerate: bool,
    /// JSON output for --invariants.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum QuadCommand {
    Invariants(InvariantsArgs),
    Admissible(AdmissibleArgs),
    Realize { file: String },
    Summand(SummandArgs),
    /// Decide whether the source maps with degree one onto a lens-type target, preserving spin structures.
    Spin {
        #[arg(long)]
        target: String,
        #[arg(long)]
        source: String,
    },
}

/// An error that ends the invocation with exit status 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure(format!("json error: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

fn input<'a>(what: &str, text: &'a str) -> impl FnOnce(crate::parse::ParseError) -> Failure + 'a {
    let what = what.to_string();
    move |e| Failure(format!("cannot parse {what} \"{text}\": {e}"))
}

fn read_file(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {path}: {e}")))
}

fn load_table(path: &str) -> Result<AnyTable, Failure> {
    parse_table(&read_file(path)?).map_err(|e| Failure(format!("{path}: {e}")))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let limits = Limits::default();
    match &cli.command {
        Command::Invariants(a) => invariants(a, false, out),
        Command::Iso { left, right } => iso(left, right, out),
        Command::Admissible(a) => admissible(a, None, out),
        Command::Realize { file } => realize_file(file, false, out),
        Command::Summand(a) => summand(a, out),
        Command::Lens { target, source } => lens(target, source, out),
        Command::LensAll { pi, source } => lens_all(*pi, source, out),
        Command::Gram(a) => gram(a, &limits, out),
        Command::Quad(q) => match q {
            QuadCommand::Invariants(a) => invariants(a, true, out),
            QuadCommand::Admissible(a) => admissible(a, Some(Flavor::Quadratic), out),
            QuadCommand::Realize { file } => realize_file(file, true, out),
            QuadCommand::Summand(a) => quad_summand(a, out),
            QuadCommand::Spin { target, source } => spin(target, source, out),
        },
    }
}

fn odd_primes(x: &Pairing) -> Vec<u64> {
    x.primes().into_iter().filter(|&p| p != 2).collect()
}

fn check_prime(p: u64) -> Result<(), Failure> {
    if linkform::arith::is_prime(p) {
        Ok(())
    } else {
        Err(Failure(format!("--prime {p} is not prime")))
    }
}

fn invariants(a: &InvariantsArgs, quadratic_only: bool, out: &mut dyn Write) -> Outcome {
    let expr = parse_expr(&a.expr).map_err(input("expression", &a.expr))?;
    let expr = match expr {
        Expr::Pairing(x) if quadratic_only => {
            Expr::Quadratic(parse_quadratic(&x.to_string()).map_err(input("quadratic form", &a.expr))?)
        }
        e => e,
    };
    if let Some(p) = a.prime {
        check_prime(p)?;
    }
    // (table, provenance of σ at index 0): σ_0 is an exact Gauss sum, the rest are closed forms.
    let mut tables: Vec<(AnyTable, bool)> = Vec::new();
    let (canonical, base) = match &expr {
        Expr::Pairing(x) => {
            tables.push((AnyTable::Sig(x.invariant_table_two()), false));
            (x.to_string(), x.clone())
        }
        Expr::Quadratic(q) => {
            tables.push((AnyTable::Sig(q.quad_invariant_table()?), true));
            (q.to_string(), q.underlying_pairing())
        }
    };
    let mut primes = odd_primes(&base);
    if let Some(p) = a.prime {
        if p != 2 && !primes.contains(&p) {
            primes.push(p);
        }
        primes.retain(|&q| q == p);
        if p != 2 {
            tables.clear();
        }
    }
    for p in primes {
        tables.push((base.invariant_table(p), false));
    }
    if a.json {
        let docs: Vec<Value> = tables
            .iter()
            .map(|(t, oracle0)| {
                let oracle0 = *oracle0;
                table_json(t, Some(&move |k| if oracle0 && k == 0 { "oracle" } else { "closed-form" }))
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&json!({"expression": canonical, "tables": docs}))?)?;
    } else {
        for (t, _) in &tables {
            writeln!(out, "{}: {t}", label(t.flavor()))?;
        }
    }
    Ok(0)
}

fn label(f: Flavor) -> String {
    match f {
        Flavor::Two => "p=2".into(),
        Flavor::Quadratic => "p=2 (quadratic)".into(),
        Flavor::Odd(p) => format!("p={p}"),
    }
}

fn as_quadratic(e: Expr) -> Option<QuadraticForm> {
    match e {
        Expr::Quadratic(q) => Some(q),
        Expr::Pairing(x) if x.two_part().is_empty() => Some(QuadraticForm::from_parts(Vec::new(), x.odd_part().to_vec())),
        Expr::Pairing(_) => None,
    }
}

fn iso(left: &str, right: &str, out: &mut dyn Write) -> Outcome {
    let l = parse_expr(left).map_err(input("expression", left))?;
    let r = parse_expr(right).map_err(input("expression", right))?;
    let same = match (l, r) {
        (Expr::Pairing(x), Expr::Pairing(y)) => x.is_isomorphic(&y),
        (l, r) => match (as_quadratic(l), as_quadratic(r)) {
            (Some(x), Some(y)) => x.is_isomorphic(&y)?,
            _ => return Err(Failure("cannot compare a pairing with a quadratic form".into())),
        },
    };
    writeln!(out, "{}", if same { "ISOMORPHIC" } else { "NOT ISOMORPHIC" })?;
    Ok(if same { 0 } else { 1 })
}

fn write_report(report: &AdmissibilityReport, out: &mut dyn Write) -> io::Result<()> {
    for v in &report.violations {
        let at: Vec<String> = v.indices.iter().map(|k| k.to_string()).collect();
        writeln!(out, "  {} at m={}: {}", v.condition, at.join(","), v.detail)?;
    }
    Ok(())
}

fn admissible(a: &AdmissibleArgs, flavor: Option<Flavor>, out: &mut dyn Write) -> Outcome {
    let t = load_table(&a.file)?;
    if let Some(f) = flavor {
        if t.flavor() != f {
            return Err(Error::FlavorMismatch(t.flavor().to_string(), f.to_string()).into());
        }
    }
    let report = check_admissible_any(&t);
    writeln!(out, "{}", if report.verdict { "ADMISSIBLE" } else { "NOT ADMISSIBLE" })?;
    if a.explain {
        write_report(&report, out)?;
    }
    Ok(if report.verdict { 0 } else { 1 })
}

fn realize_file(file: &str, quadratic_only: bool, out: &mut dyn Write) -> Outcome {
    let t = load_table(file)?;
    if quadratic_only && t.flavor() != Flavor::Quadratic {
        return Err(Error::FlavorMismatch(t.flavor().to_string(), Flavor::Quadratic.to_string()).into());
    }
    let result = match &t {
        AnyTable::Sig(s) if s.flavor() == Flavor::Quadratic => realize_quadratic(s).map(|q| q.to_string()),
        t => realize(t).map(|x| x.to_string()),
    };
    match result {
        Ok(text) => {
            writeln!(out, "{text}")?;
            Ok(0)
        }
        Err(Error::Inadmissible(report)) => {
            writeln!(out, "NOT ADMISSIBLE")?;
            write_report(&report, out)?;
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn decision(witness: Option<String>, out: &mut dyn Write) -> Outcome {
    match witness {
        Some(w) => {
            writeln!(out, "{w}")?;
            Ok(0)
        }
        None => {
            writeln!(out, "NONE")?;
            Ok(1)
        }
    }
}

fn summand(a: &SummandArgs, out: &mut dyn Write) -> Outcome {
    let part = parse_pairing(&a.part).map_err(input("part", &a.part))?;
    let whole = parse_pairing(&a.whole).map_err(input("whole", &a.whole))?;
    decision(orthogonal_summand(&part, &whole)?.map(|c| c.to_string()), out)
}

fn quad_summand(a: &SummandArgs, out: &mut dyn Write) -> Outcome {
    let part = parse_quadratic(&a.part).map_err(input("part", &a.part))?;
    let whole = parse_quadratic(&a.whole).map_err(input("whole", &a.whole))?;
    decision(quadratic_summand(&part, &whole)?.map(|c| c.to_string()), out)
}

fn parse_target(text: &str) -> Result<LensSpace, Failure> {
    let bad = || Failure(format!("cannot parse target \"{text}\": expected n,q"));
    let (n, q) = text.split_once(',').ok_or_else(bad)?;
    let n: u64 = n.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    Ok(LensSpace::new(n, q)?)
}

fn lens(target: &str, source: &str, out: &mut dyn Write) -> Outcome {
    let target = parse_target(target)?;
    let source = parse_pairing(source).map_err(input("source", source))?;
    decision(degree_one_onto_lens(&source, &target)?.map(|c| c.to_string()), out)
}

fn lens_all(pi: u64, source: &str, out: &mut dyn Write) -> Outcome {
    let source = parse_pairing(source).map_err(input("source", source))?;
    let mut all = true;
    for q in lens_residue_classes(pi)? {
        let l = LensSpace::new(pi, q as i64)?;
        let w = degree_one_onto_lens(&source, &l)?;
        all &= w.is_some();
        writeln!(out, "{l}: {}", w.map_or_else(|| "NONE".to_string(), |c| c.to_string()))?;
    }
    writeln!(out, "{}", if all { "ALL" } else { "NOT ALL" })?;
    Ok(if all { 0 } else { 1 })
}

fn spin(target: &str, source: &str, out: &mut dyn Write) -> Outcome {
    let target = parse_quadratic(target).map_err(input("target", target))?;
    let source = parse_quadratic(source).map_err(input("source", source))?;
    decision(spin_degree_one(&source, &target)?.map(|c| c.to_string()), out)
}

fn gram_primes(g: &GramPairing) -> Vec<u64> {
    let mut ps: Vec<u64> = g.orders().iter().flat_map(|&d| factorize(d).into_iter().map(|(p, _)| p)).collect();
    ps.sort_unstable();
    ps.dedup();
    ps
}

fn gram(a: &GramArgs, limits: &Limits, out: &mut dyn Write) -> Outcome {
    let path = &a.file;
    let data = parse_gram(&read_file(path)?).map_err(|e| Failure(format!("{path}: {e}")))?;
    let base = match &data {
        GramData::Pairing(g) => g,
        GramData::Quadratic(q) => q.base(),
    };
    if a.nondegenerate {
        let yes = base.nondegenerate();
        writeln!(out, "{}", if yes { "NONDEGENERATE" } else { "DEGENERATE" })?;
        return Ok(if yes { 0 } else { 1 });
    }
    if !base.nondegenerate() {
        return Err(Failure(format!("{path}: the pairing is degenerate")));
    }
    let odd: Vec<u64> = gram_primes(base).into_iter().filter(|&p| p != 2).collect();
    let mut tables = Vec::new();
    match &data {
        GramData::Pairing(g) => tables.push(gram_invariant_table(g, 2, limits)?),
        GramData::Quadratic(q) => tables.push(AnyTable::Sig(gram_quad_invariant_table(q, limits)?)),
    }
    for &p in &odd {
        tables.push(gram_invariant_table(base, p, limits)?);
    }

    if a.invariants {
        if a.json {
            let docs: Vec<Value> = tables.iter().map(|t| table_json(t, Some(&|_| "oracle"))).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({"tables": docs}))?)?;
        } else {
            for t in &tables {
                writeln!(out, "{}: {t}", label(t.flavor()))?;
            }
        }
        return Ok(0);
    }

    // Decomposition: the 2-part is rebuilt from its oracle table, odd parts
    // come straight from diagonalization.
    let mut odd_gens = Vec::new();
    for &p in &odd {
        odd_gens.extend(diagonalize_odd(base, p, limits)?);
    }
    let text = match &tables[0] {
        AnyTable::Sig(t) if t.flavor() == Flavor::Quadratic => {
            let q = realize_quadratic(t)?;
            QuadraticForm::from_parts(q.two_part().to_vec(), odd_gens).to_string()
        }
        two => {
            let x = realize(two)?;
            Pairing::from_parts(x.two_part().to_vec(), odd_gens).to_string()
        }
    };
    writeln!(out, "{text}")?;
    Ok(0)
}
