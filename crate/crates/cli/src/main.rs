//! Command line front end: exact homology tables and verification sweeps
//! over built-in or user-supplied monoid and ring tables.
//!
//! Reports are versioned JSON on stdout; human-readable tables go to
//! stderr. Output is byte-deterministic for a fixed seed unless `--timing`
//! is passed. Exit codes: 0 success, 1 verification failure, 2 input
//! error, 3 capacity guard.
//!
//! Input files are JSON with fields `elements` (list of names), `mul`
//! (table of element indices), and optionally `add`, `zero`, `one`,
//! `commutative`. `elements` plus `mul` define a monoid; `add` makes it a
//! ring (with `zero`/`one`/`commutative` cross-checked when present).
//! Built-in names: z2, z3, z4, f2x (dual numbers over F2), gl2z2. For bar
//! constructions the ring names resolve to their additive groups.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyctrace::abelian::{homology, AbGroup};
use cyctrace::barcons::{bar, cyclic_bar, FiniteMonoid, FiniteRing, TableError};
use cyctrace::builtins;
use cyctrace::operad::tuples;
use cyctrace::simplicial::{chain_complex, ComplexMode, SimplicialSet};
use cyctrace::tracehh::{AdditiveBasis, HhComplex};
use cyctrace::verify::{
    cyclic_identities_suite, gamma_suite, morita_suite, operad_suite, trace_suite,
    SuiteReport,
};
use serde_json::{json, Map, Value};
use std::time::Instant;

const SCHEMA_VERSION: u64 = 1;

/// Largest per-degree generator count any homology object may reach.
const SIZE_GUARD: u128 = 2_000_000;

#[derive(Parser)]
#[command(name = "cyctrace", version, about = "Exact homology and trace verification for finite monoids and rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral homology table of a standard construction
    Homology(HomologyArgs),
    /// Run a verification sweep; nonzero exit on any failed item
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    /// bar construction of a monoid
    Bar,
    /// cyclic bar construction of a monoid
    Cyclicbar,
    /// Hochschild complex of a ring
    Hochschild,
    /// permutation-tuple object at a fixed arity
    BeOperad,
}

#[derive(Args)]
struct HomologyArgs {
    /// Built-in name or path to a JSON table file (unused for be-operad)
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum)]
    object: ObjectKind,
    /// Highest homology degree reported
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// Arity of the permutation-tuple object
    #[arg(long, default_value_t = 2)]
    arity: usize,
    /// Include wall-clock timing in the JSON report (breaks byte determinism)
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteKind {
    Trace,
    Operad,
    Gamma,
    CyclicIdentities,
    Morita,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteKind,
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Random instances per seeded item
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Monoid for the cyclic-identities suite (built-in name or file)
    #[arg(long, default_value = "z2")]
    monoid: String,
    /// Ring for the morita suite (built-in name or file)
    #[arg(long, default_value = "z2")]
    ring: String,
    /// Matrix rank for the morita suite
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Highest degree checked where a suite is graded
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Include wall-clock timing in the JSON report (breaks byte determinism)
    #[arg(long)]
    timing: bool,
}

enum CliError {
    /// Bad name, unreadable file, schema violation, or axiom failure.
    Input(String),
    /// A size guard refused the computation.
    Capacity(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capacity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) => m,
            CliError::Capacity(m) => m,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Homology(args) => run_homology(&args),
        Command::Verify(args) => run_verify(&args),
    };
    let code = match code {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    };
    std::process::exit(code);
}

// ---------------------------------------------------------------------------
// input loading

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn monoid_digest(m: &FiniteMonoid) -> String {
    let mut s = String::new();
    for a in 0..m.size() {
        s.push_str(m.label(a));
        s.push(';');
        for b in 0..m.size() {
            s.push_str(&m.mul(a, b).to_string());
            s.push(',');
        }
    }
    format!("fnv1a:{:016x}", fnv1a(s.as_bytes()))
}

fn ring_digest(r: &FiniteRing) -> String {
    let mut s = String::new();
    for a in 0..r.size() {
        s.push_str(r.label(a));
        s.push(';');
        for b in 0..r.size() {
            s.push_str(&r.add(a, b).to_string());
            s.push(',');
            s.push_str(&r.mul(a, b).to_string());
            s.push(',');
        }
    }
    format!("fnv1a:{:016x}", fnv1a(s.as_bytes()))
}

struct TableFile {
    name: String,
    elements: Vec<String>,
    mul: Vec<Vec<usize>>,
    add: Option<Vec<Vec<usize>>>,
    zero: Option<usize>,
    one: Option<usize>,
    commutative: Option<bool>,
}

fn want_table(v: &Value, field: &str, size: usize) -> Result<Vec<Vec<usize>>, CliError> {
    let rows = v
        .as_array()
        .ok_or_else(|| CliError::Input(format!("{field}: expected an array of rows")))?;
    if rows.len() != size {
        return Err(CliError::Input(format!(
            "{field}: expected {size} rows, found {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(size);
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| CliError::Input(format!("{field}[{i}]: expected an array")))?;
        if cells.len() != size {
            return Err(CliError::Input(format!(
                "{field}[{i}]: expected {size} entries, found {}",
                cells.len()
            )));
        }
        let mut r = Vec::with_capacity(size);
        for (j, cell) in cells.iter().enumerate() {
            let n = cell.as_u64().ok_or_else(|| {
                CliError::Input(format!("{field}[{i}][{j}]: expected a nonnegative integer"))
            })?;
            if n as usize >= size {
                return Err(CliError::Input(format!(
                    "{field}[{i}][{j}]: index {n} out of range 0..{size}"
                )));
            }
            r.push(n as usize);
        }
        out.push(r);
    }
    Ok(out)
}

fn want_index(obj: &Map<String, Value>, field: &str, size: usize) -> Result<Option<usize>, CliError> {
    match obj.get(field) {
        None => Ok(None),
        Some(v) => {
            let n = v.as_u64().ok_or_else(|| {
                CliError::Input(format!("{field}: expected a nonnegative integer"))
            })?;
            if n as usize >= size {
                return Err(CliError::Input(format!(
                    "{field}: index {n} out of range 0..{size}"
                )));
            }
            Ok(Some(n as usize))
        }
    }
}

fn parse_table_file(path: &str) -> Result<TableFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Input(format!("{path}: expected a JSON object")))?;
    let elements_v = obj
        .get("elements")
        .ok_or_else(|| CliError::Input("elements: missing field".to_string()))?;
    let elements_arr = elements_v
        .as_array()
        .ok_or_else(|| CliError::Input("elements: expected an array of names".to_string()))?;
    let mut elements = Vec::with_capacity(elements_arr.len());
    for (i, e) in elements_arr.iter().enumerate() {
        elements.push(
            e.as_str()
                .ok_or_else(|| CliError::Input(format!("elements[{i}]: expected a string")))?
                .to_string(),
        );
    }
    let size = elements.len();
    let mul_v = obj
        .get("mul")
        .ok_or_else(|| CliError::Input("mul: missing field".to_string()))?;
    let mul = want_table(mul_v, "mul", size)?;
    let add = match obj.get("add") {
        None => None,
        Some(a) => Some(want_table(a, "add", size)?),
    };
    let zero = want_index(obj, "zero", size)?;
    let one = want_index(obj, "one", size)?;
    let commutative = match obj.get("commutative") {
        None => None,
        Some(c) => Some(c.as_bool().ok_or_else(|| {
            CliError::Input("commutative: expected a boolean".to_string())
        })?),
    };
    let name = std::path::Path::new(path)
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string());
    Ok(TableFile {
        name,
        elements,
        mul,
        add,
        zero,
        one,
        commutative,
    })
}

fn table_error(e: TableError) -> CliError {
    match e {
        TableError::TooLarge { .. } => CliError::Capacity(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}

fn monoid_from_file(f: &TableFile) -> Result<FiniteMonoid, CliError> {
    let m = FiniteMonoid::new(&f.name, f.elements.clone(), &f.mul).map_err(table_error)?;
    if let Some(want) = f.commutative {
        if m.is_commutative() != want {
            return Err(CliError::Input(format!(
                "commutative: declared {want} but the mul table says {}",
                m.is_commutative()
            )));
        }
    }
    if let Some(one) = f.one {
        if m.unit() != one {
            return Err(CliError::Input(format!(
                "one: declared {one} but the mul table has unit {}",
                m.unit()
            )));
        }
    }
    Ok(m)
}

fn ring_from_file(f: &TableFile) -> Result<FiniteRing, CliError> {
    let add = f
        .add
        .as_ref()
        .ok_or_else(|| CliError::Input("add: missing field (required for a ring)".to_string()))?;
    let r = FiniteRing::new(&f.name, f.elements.clone(), add, &f.mul).map_err(table_error)?;
    if let Some(zero) = f.zero {
        if r.zero() != zero {
            return Err(CliError::Input(format!(
                "zero: declared {zero} but the add table has unit {}",
                r.zero()
            )));
        }
    }
    if let Some(one) = f.one {
        if r.one() != one {
            return Err(CliError::Input(format!(
                "one: declared {one} but the mul table has unit {}",
                r.one()
            )));
        }
    }
    if let Some(want) = f.commutative {
        let is = r.multiplicative_monoid().is_commutative();
        if is != want {
            return Err(CliError::Input(format!(
                "commutative: declared {want} but the mul table says {is}"
            )));
        }
    }
    Ok(r)
}

/// A built-in name, or a path to a JSON table file. Built-in ring names
/// resolve to the additive group, the bar-construction input of interest.
fn load_monoid(input: &str) -> Result<FiniteMonoid, CliError> {
    if let Some(m) = builtins::monoid_by_name(input) {
        return Ok(m);
    }
    if std::path::Path::new(input).exists() {
        return monoid_from_file(&parse_table_file(input)?);
    }
    Err(CliError::Input(format!(
        "{input}: not a built-in monoid (z2, z3, z4, f2x, gl2z2) and no such file"
    )))
}

fn load_ring(input: &str) -> Result<FiniteRing, CliError> {
    if let Some(r) = builtins::ring_by_name(input) {
        return Ok(r);
    }
    if std::path::Path::new(input).exists() {
        return ring_from_file(&parse_table_file(input)?);
    }
    Err(CliError::Input(format!(
        "{input}: not a built-in ring (z2, z3, z4, f2x) and no such file"
    )))
}

// ---------------------------------------------------------------------------
// homology command

fn group_str(g: &AbGroup) -> String {
    let mut parts = Vec::new();
    if g.rank == 1 {
        parts.push("Z".to_string());
    } else if g.rank > 1 {
        parts.push(format!("Z^{}", g.rank));
    }
    for t in &g.torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" x ")
    }
}

fn group_json(g: &AbGroup) -> (u64, Vec<String>) {
    (
        g.rank as u64,
        g.torsion.iter().map(|t| t.to_string()).collect(),
    )
}

fn guard_sizes(x: &SimplicialSet, degree: usize) -> Result<(), CliError> {
    for k in 0..=degree + 1 {
        let size = x.size(k).map_err(|e| CliError::Capacity(e.to_string()))? as u128;
        if size > SIZE_GUARD {
            return Err(CliError::Capacity(format!(
                "degree {k} holds {size} simplices, over the {SIZE_GUARD} guard"
            )));
        }
    }
    Ok(())
}

fn simplicial_table(x: &SimplicialSet, degree: usize) -> Result<Vec<AbGroup>, CliError> {
    guard_sizes(x, degree)?;
    let c = chain_complex(x, degree, ComplexMode::Normalized)
        .map_err(|e| CliError::Capacity(e.to_string()))?;
    (0..=degree)
        .map(|i| homology(&c, i).map_err(|e| CliError::Capacity(e.to_string())))
        .collect()
}

fn run_homology(args: &HomologyArgs) -> Result<i32, CliError> {
    let start = Instant::now();
    let need_input = || {
        args.input.as_deref().ok_or_else(|| {
            CliError::Input("--input is required for this object".to_string())
        })
    };
    let (table, input_desc): (Vec<AbGroup>, Value) = match args.object {
        ObjectKind::Bar => {
            let m = load_monoid(need_input()?)?;
            let x = bar(&m, args.degree + 1);
            (
                simplicial_table(&x, args.degree)?,
                json!({"name": m.name(), "digest": monoid_digest(&m)}),
            )
        }
        ObjectKind::Cyclicbar => {
            let m = load_monoid(need_input()?)?;
            let x = cyclic_bar(&m, args.degree + 1);
            (
                simplicial_table(&x, args.degree)?,
                json!({"name": m.name(), "digest": monoid_digest(&m)}),
            )
        }
        ObjectKind::Hochschild => {
            let r = load_ring(need_input()?)?;
            let basis = AdditiveBasis::compute(r.additive_monoid());
            let gens: u128 = (basis.dim() as u128).pow(args.degree as u32 + 2);
            if gens > SIZE_GUARD {
                return Err(CliError::Capacity(format!(
                    "degree {} holds {gens} generators, over the {SIZE_GUARD} guard",
                    args.degree + 1
                )));
            }
            let hh = HhComplex::with_basis(&r, basis);
            let c = hh.chain_complex(args.degree);
            let table = (0..=args.degree)
                .map(|i| homology(&c, i).map_err(|e| CliError::Capacity(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            (table, json!({"name": r.name(), "digest": ring_digest(&r)}))
        }
        ObjectKind::BeOperad => {
            let mut fact: u128 = 1;
            for i in 1..=args.arity as u128 {
                fact = fact.saturating_mul(i);
            }
            if fact.saturating_pow(args.degree as u32 + 2) > SIZE_GUARD {
                return Err(CliError::Capacity(format!(
                    "arity {} tuples exceed the {SIZE_GUARD} simplex guard",
                    args.arity
                )));
            }
            let x = tuples(args.arity, args.degree + 1);
            (
                simplicial_table(&x, args.degree)?,
                json!({"name": format!("tuples({})", args.arity), "digest": Value::Null}),
            )
        }
    };
    let object_name = match args.object {
        ObjectKind::Bar => "bar",
        ObjectKind::Cyclicbar => "cyclicbar",
        ObjectKind::Hochschild => "hochschild",
        ObjectKind::BeOperad => "be-operad",
    };
    eprintln!(
        "homology of {} on {} up to degree {}",
        object_name,
        input_desc["name"].as_str().unwrap_or("?"),
        args.degree
    );
    for (i, g) in table.iter().enumerate() {
        eprintln!("  H_{i} = {}", group_str(g));
    }
    let rows: Vec<Value> = table
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (rank, torsion) = group_json(g);
            json!({"degree": i as u64, "rank": rank, "torsion": torsion})
        })
        .collect();
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "homology",
        "object": object_name,
        "input": input_desc,
        "degree": args.degree as u64,
        "table": rows,
        "pass": true,
    });
    if args.timing {
        report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify command

fn suite_json(report: &SuiteReport) -> Value {
    let items: Vec<Value> = report
        .items
        .iter()
        .map(|i| {
            json!({
                "name": i.name,
                "pass": i.pass,
                "cases": i.cases,
                "counterexample": i.counterexample,
            })
        })
        .collect();
    json!({"suite": report.suite, "items": items, "pass": report.passed()})
}

fn print_suite(report: &SuiteReport) {
    eprintln!("suite {}", report.suite);
    for i in &report.items {
        if i.pass {
            eprintln!("  pass  {} ({} cases)", i.name, i.cases);
        } else {
            eprintln!(
                "  FAIL  {}: {}",
                i.name,
                i.counterexample.as_deref().unwrap_or("no detail")
            );
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let start = Instant::now();
    let mut params = Map::new();
    let report = match args.suite {
        SuiteKind::Trace => {
            params.insert("seed".into(), json!(args.seed));
            params.insert("instances".into(), json!(args.instances as u64));
            trace_suite(args.seed, args.instances)
        }
        SuiteKind::Operad => {
            params.insert("seed".into(), json!(args.seed));
            params.insert("instances".into(), json!(args.instances as u64));
            operad_suite(args.seed, args.instances)
        }
        SuiteKind::Gamma => gamma_suite(args.seed, args.instances),
        SuiteKind::CyclicIdentities => {
            let m = load_monoid(&args.monoid)?;
            params.insert(
                "input".into(),
                json!({"name": m.name(), "digest": monoid_digest(&m)}),
            );
            params.insert("degree".into(), json!(args.degree as u64));
            cyclic_identities_suite(&m, args.degree)
        }
        SuiteKind::Morita => {
            let r = load_ring(&args.ring)?;
            params.insert(
                "input".into(),
                json!({"name": r.name(), "digest": ring_digest(&r)}),
            );
            params.insert("n".into(), json!(args.n as u64));
            params.insert("degree".into(), json!(args.degree as u64));
            morita_suite(&r, args.n, args.degree).map_err(table_error)?
        }
    };
    print_suite(&report);
    let mut out = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
    });
    for (k, v) in params {
        out[k] = v;
    }
    let body = suite_json(&report);
    for (k, v) in body.as_object().unwrap() {
        out[k.as_str()] = v.clone();
    }
    if args.timing {
        out["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(if report.passed() { 0 } else { 1 })
}
