//! Command-line front end for `ktern`.
//!
//! Exit status is 0 on success, 1 when the answer is mathematically
//! negative (not isomorphic, incompatible, audit mismatch) and 2 on usage or
//! input errors.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use ktern::classify::{enumerate_kt, table1_compare, AuditReport, ClassificationReport};
use ktern::coloring::{
    coloring_group, count_bruteforce, count_colorings, enumerate_colorings, invariant_vector,
    named_catalog, Coloring, ColoringReport, DEFAULT_BRUTE_BUDGET, DEFAULT_COLORING_CAP,
};
use ktern::diagram::{builtin, parse_diagram, Diagram};
use ktern::ternary::{
    catalog, catalog_identity, check_identity, compatible, iso_test, property_report,
    CanonicalKt, CheckPolicy, CompatReport, Identity, IdentityReport, IsoReport,
    PropertyReport, Structure, TernaryOps, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TUPLE_BUDGET,
};
use ktern::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Lines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Affine,
    Brute,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "ktern", version, about = "Knot-theoretic ternary groups and diagram colorings")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "lines", global = true)]
    pub format: Format,
    /// Largest number of assignments checked exhaustively per identity.
    #[arg(long, default_value_t = DEFAULT_TUPLE_BUDGET, global = true, value_parser = positive_u128)]
    pub tuple_budget: u128,
    /// Random assignments tried when an identity exceeds the tuple budget.
    #[arg(long, default_value_t = DEFAULT_SAMPLES, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Largest assignment space for brute-force coloring counts.
    #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET, global = true, value_parser = positive_u128)]
    pub brute_budget: u128,
    #[command(subcommand)]
    pub command: Command,
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural properties of a kt-spec or a table file.
    Check { structure: String },
    /// Model-check catalog identities.
    Identities {
        structure: String,
        /// Comma-separated identity names.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Isomorphism classes of a given order.
    Enumerate {
        n: u64,
        /// Also print one representative per class.
        #[arg(long)]
        reps: bool,
    },
    /// Compare the classification with the published counts.
    Table1 {
        #[arg(long, default_value_t = 64)]
        max: u64,
    },
    /// Decide whether two structures are isomorphic.
    Iso { first: String, second: String },
    /// Check that a flat and a virtual structure may be mixed.
    Compat { flat: String, virt: String },
    /// Count colorings of a diagram file or `builtin:<name>`.
    Color {
        diagram: String,
        #[arg(long)]
        flat: Option<String>,
        #[arg(long)]
        virt: Option<String>,
        #[arg(long)]
        enumerate: bool,
        /// Counts over a named catalog (`order2`, `order4`).
        #[arg(long)]
        vector: Option<String>,
        /// Canonical form of the structure on the coloring set.
        #[arg(long)]
        group: bool,
        #[arg(long, value_enum, default_value = "affine")]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_COLORING_CAP)]
        cap: usize,
    },
}

/// Failure of a subcommand: exit code and message.
struct Failure(i32, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(2, msg.into())
    }
}

fn input_error(source: &str, e: Error) -> Failure {
    match e {
        Error::Incompatible(_) => Failure(1, e.to_string()),
        Error::Parse { .. } => Failure(2, format!("{source}:{e}")),
        _ => Failure(2, format!("{source}: {e}")),
    }
}

type Out = Vec<String>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut lines = Vec::new();
    let code = match execute(&cli, &mut lines) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    };
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    code
}

fn policy(cli: &Cli) -> CheckPolicy {
    CheckPolicy {
        tuple_budget: cli.tuple_budget,
        samples: cli.samples,
        seed: cli.seed,
    }
}

/// Reads a structure: a file when the path exists, a kt-spec otherwise.
fn load_structure(arg: &str) -> Result<Structure, Failure> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
        Structure::parse(&text).map_err(|e| input_error(arg, e))
    } else {
        Structure::parse(arg).map_err(|e| input_error(arg, e))
    }
}

fn load_kt(arg: &str) -> Result<CanonicalKt, Failure> {
    load_structure(arg)?
        .canonical_form()
        .map(|c| c.kt)
        .map_err(|e| input_error(arg, e))
}

fn load_diagram(arg: &str) -> Result<Diagram, Failure> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return builtin(name).map_err(|e| input_error(arg, e));
    }
    let text =
        std::fs::read_to_string(arg).map_err(|e| Failure::usage(format!("{arg}: {e}")))?;
    let name = Path::new(arg)
        .file_stem()
        .map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
    parse_diagram(&text, &name).map_err(|e| input_error(arg, e))
}

fn execute(cli: &Cli, out: &mut Out) -> Result<i32, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Check { structure } => {
            let s = load_structure(structure)?;
            let report = property_report(&s, &policy(cli));
            out.extend(render_properties(&report, fmt));
            Ok(0)
        }
        Command::Identities { structure, only } => {
            let s = load_structure(structure)?;
            let ids: Vec<&Identity> = if only.is_empty() {
                catalog().iter().collect()
            } else {
                only.iter()
                    .map(|name| {
                        catalog_identity(name).map_err(|e| Failure::usage(e.to_string()))
                    })
                    .collect::<Result<_, _>>()?
            };
            let mut reports = Vec::new();
            for id in ids {
                let r = check_identity(&s, id, policy(cli).mode())
                    .map_err(|e| input_error(id.name(), e))?;
                reports.push((id, r));
            }
            out.extend(render_identities(&s, &reports, fmt));
            Ok(0)
        }
        Command::Enumerate { n, reps } => {
            let report = enumerate_kt(*n).map_err(|e| Failure::usage(e.to_string()))?;
            out.extend(render_enumeration(&report, *reps, fmt));
            Ok(0)
        }
        Command::Table1 { max } => {
            let report = table1_compare(*max).map_err(|e| Failure::usage(e.to_string()))?;
            out.extend(render_audit(&report, fmt));
            Ok(if report.all_match() { 0 } else { 1 })
        }
        Command::Iso { first, second } => {
            let a = load_structure(first)?;
            let b = load_structure(second)?;
            let report = iso_test(&a, &b).map_err(|e| input_error(&format!("{first} {second}"), e))?;
            out.extend(render_iso(&report, fmt));
            Ok(if report.isomorphic { 0 } else { 1 })
        }
        Command::Compat { flat, virt } => {
            let f = load_structure(flat)?;
            let v = load_structure(virt)?;
            let report = compatible(&f, &v).map_err(|e| input_error(virt, e))?;
            out.extend(render_compat(&f, &report, fmt));
            Ok(if report.compatible { 0 } else { 1 })
        }
        Command::Color {
            diagram,
            flat,
            virt,
            enumerate,
            vector,
            group,
            method,
            cap,
        } => {
            let d = load_diagram(diagram)?;
            if let Some(name) = vector {
                let cat = named_catalog(name)
                    .ok_or_else(|| Failure::usage(format!("unknown catalog `{name}`")))?;
                let v = invariant_vector(&d, &cat).map_err(|e| input_error(diagram, e))?;
                out.push(render_vector(&d, name, &v, fmt));
            }
            let Some(flat) = flat else {
                if vector.is_none() {
                    return Err(Failure::usage("color needs --flat or --vector"));
                }
                return Ok(0);
            };
            let f = load_kt(flat)?;
            let v = virt.as_deref().map(load_kt).transpose()?;
            let mut reports = Vec::new();
            if matches!(method, MethodArg::Affine | MethodArg::Both) {
                reports.push(count_colorings(&d, &f, v.as_ref()).map_err(|e| input_error(diagram, e))?);
            }
            if matches!(method, MethodArg::Brute | MethodArg::Both) {
                reports.push(
                    count_bruteforce(&d, &f, v.as_ref(), cli.brute_budget)
                        .map_err(|e| input_error(diagram, e))?,
                );
            }
            if *enumerate {
                let list = enumerate_colorings(&d, &f, v.as_ref(), *cap)
                    .map_err(|e| input_error(diagram, e))?;
                if let Some(r) = reports.first_mut() {
                    r.colorings = Some(list);
                }
            }
            for r in &reports {
                out.extend(render_coloring(&d, &f, v.as_ref(), r, fmt));
            }
            if *group {
                let g = coloring_group(&d, &f).map_err(|e| input_error(diagram, e))?;
                out.push(match fmt {
                    Format::Lines => format!("diagram={} coloring_group={}", d.name, g.kt),
                    Format::Text => format!("coloring group of {}: {}", d.name, g.kt),
                });
            }
            if reports.len() == 2 && reports[0].count != reports[1].count {
                return Err(Failure(2, "affine and brute-force counts disagree".into()));
            }
            Ok(0)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_properties(r: &PropertyReport, fmt: Format) -> Vec<String> {
    let mut out: Vec<String> = r
        .entries()
        .iter()
        .map(|(name, flag)| match fmt {
            Format::Lines => format!("property={name} value={} sampled={}", flag.value, flag.sampled),
            Format::Text => format!(
                "{name:<26}{}{}",
                yes_no(flag.value),
                if flag.sampled { " (sampled)" } else { "" }
            ),
        })
        .collect();
    for f in &r.findings {
        out.push(match fmt {
            Format::Lines => format!("finding={f:?}"),
            Format::Text => format!("warning: {f}"),
        });
    }
    out
}

/// `x=(1,0),y=(0,0)` in element coordinates.
fn render_assignment(s: &dyn TernaryOps, id: &Identity, values: &[usize]) -> String {
    id.var_names()
        .iter()
        .zip(values)
        .map(|(v, &x)| format!("{v}={}", s.label(x)))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn render_identities(
    s: &dyn TernaryOps,
    reports: &[(&Identity, IdentityReport)],
    fmt: Format,
) -> Vec<String> {
    reports
        .iter()
        .map(|(id, r)| {
            let cex = r
                .counterexample
                .as_ref()
                .map_or_else(|| "-".to_string(), |c| render_assignment(s, id, c));
            match fmt {
                Format::Lines => format!(
                    "identity={} holds={} checked={} sampled={} counterexample={cex}",
                    r.name, r.holds, r.checked, r.sampled
                ),
                Format::Text => {
                    let tail = if r.holds { String::new() } else { format!("  at {cex}") };
                    format!("{:<20}{}{}", r.name, yes_no(r.holds), tail)
                }
            }
        })
        .collect()
}

pub fn render_enumeration(r: &ClassificationReport, reps: bool, fmt: Format) -> Vec<String> {
    let c = r.counts;
    let mut out = vec![match fmt {
        Format::Lines => format!(
            "n={} all={} idempotent={} commutative={}",
            r.order, c.all, c.idempotent, c.commutative
        ),
        Format::Text => format!(
            "order {}: {} classes, {} idempotent, {} commutative",
            r.order, c.all, c.idempotent, c.commutative
        ),
    }];
    if reps {
        out.extend(r.representatives.iter().map(|kt| match fmt {
            Format::Lines => format!("rep={kt}"),
            Format::Text => format!("  {kt}"),
        }));
    }
    out
}

pub fn render_audit(r: &AuditReport, fmt: Format) -> Vec<String> {
    match fmt {
        Format::Lines => r
            .rows
            .iter()
            .map(|row| {
                format!(
                    "n={} paper={} computed={} match={}",
                    row.n,
                    row.paper,
                    row.computed,
                    row.matches()
                )
            })
            .collect(),
        Format::Text => {
            let mut out = vec![format!("{:>3}  {:<10}{}", "n", "paper", "computed")];
            for row in &r.rows {
                out.push(format!(
                    "{:>3}  {:<10}{:<10}{}",
                    row.n,
                    row.paper.to_string(),
                    row.computed.to_string(),
                    if row.matches() { "" } else { "MISMATCH" }
                ).trim_end().to_string());
            }
            out
        }
    }
}

pub fn render_iso(r: &IsoReport, fmt: Format) -> Vec<String> {
    let witness = r.witness.as_ref().map(|w| {
        w.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    });
    vec![match (fmt, witness) {
        (Format::Lines, Some(w)) => format!("isomorphic=true witness={w}"),
        (Format::Lines, None) => "isomorphic=false".to_string(),
        (Format::Text, Some(w)) => format!("isomorphic via {w}"),
        (Format::Text, None) => "not isomorphic".to_string(),
    }]
}

fn quad(s: &dyn TernaryOps, q: Option<[usize; 4]>) -> String {
    q.map_or_else(
        || "-".to_string(),
        |q| {
            let parts: Vec<String> = ["a", "b", "c", "d"]
                .iter()
                .zip(q)
                .map(|(v, x)| format!("{v}={}", s.label(x)))
                .collect();
            parts.join(",")
        },
    )
}

pub fn render_compat(s: &dyn TernaryOps, r: &CompatReport, fmt: Format) -> Vec<String> {
    let cex = quad(s, r.counterexample);
    let cex2 = quad(s, r.companion_counterexample);
    match fmt {
        Format::Lines => vec![format!(
            "compatible={} counterexample={cex} companion={} companion_counterexample={cex2}",
            r.compatible, r.companion
        )],
        Format::Text => {
            let mut out = vec![if r.compatible {
                "compatible".to_string()
            } else {
                format!("not compatible at {cex}")
            }];
            if !r.companion {
                out.push(format!("companion equation fails at {cex2}"));
            }
            out
        }
    }
}

fn render_colorings(kt: &CanonicalKt, list: &[Coloring]) -> Vec<String> {
    list.iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(|&x| kt.label(x)).collect();
            format!("coloring={}", parts.join(","))
        })
        .collect()
}

pub fn render_coloring(
    d: &Diagram,
    flat: &CanonicalKt,
    virt: Option<&CanonicalKt>,
    r: &ColoringReport,
    fmt: Format,
) -> Vec<String> {
    let v = virt.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = vec![match fmt {
        Format::Lines => format!(
            "diagram={} flat={flat} virt={v} count={} method={}",
            d.name, r.count, r.method
        ),
        Format::Text => format!(
            "{}: {} colorings over {flat} / {v} ({})",
            d.name, r.count, r.method
        ),
    }];
    if let Some(list) = &r.colorings {
        out.extend(render_colorings(flat, list));
    }
    out
}

pub fn render_vector(d: &Diagram, catalog: &str, v: &[u128], fmt: Format) -> String {
    let items: Vec<String> = v.iter().map(u128::to_string).collect();
    match fmt {
        Format::Lines => format!("diagram={} catalog={catalog} vector=[{}]", d.name, items.join(",")),
        Format::Text => format!("{} over {catalog}: [{}]", d.name, items.join(", ")),
    }
}
