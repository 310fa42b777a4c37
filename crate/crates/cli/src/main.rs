//! `algd`: batch verification of structure-constant fixtures.
//!
//! Exit codes: 0 = clean, 1 = axiom violations or failed report clauses,
//! 2 = parse, shape, or usage errors.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use algebroids::{
    evaluate_criteria, probe_dim1_extension, probe_reference, FamilySpec, ProbeVariant, Rat,
    RatMatrix, Report, Subspace,
};
use algebroids_cli::fixture::{family_fixture, Fixture, Loaded};
use algebroids_cli::report_doc::ReportDoc;

#[derive(Parser)]
#[command(
    name = "algd",
    about = "Exact verification of Leibniz algebras, 1-truncated conformal algebras, and vertex algebroids given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the axiom suite of a fixture file.
    Check {
        path: PathBuf,
        /// Assert the fixture has this kind.
        #[arg(long)]
        kind: Option<String>,
        /// Emit a machine-readable JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Structural invariants of a vertex algebroid fixture.
    Invariants {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the classified sl2 family: emit the fixture or verify it.
    Family {
        /// Number of two-dimensional radical summands (>= 1).
        #[arg(long)]
        l: usize,
        /// Print the fixture JSON to stdout.
        #[arg(long)]
        emit: bool,
        /// Recompute and verify every structural claim.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the indecomposability / non-simplicity criteria.
    Criteria {
        path: PathBuf,
        /// Levi candidate as ordered rows "e;f;h", entries comma-separated.
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Feasibility probe for a one-dimensional radical summand.
    Probe {
        /// Which square to assume for the summand generator: unit | nil.
        #[arg(long)]
        variant: Option<String>,
        /// Run the two-dimensional reference model instead.
        #[arg(long)]
        reference: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
struct CmdError(String);

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, CmdError> {
    Err(CmdError(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_fixture(path: &PathBuf) -> Result<Fixture, CmdError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CmdError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CmdError(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn load(path: &PathBuf) -> Result<(Fixture, Loaded), CmdError> {
    let fx = read_fixture(path)?;
    let loaded = fx
        .load()
        .map_err(|e| CmdError(format!("{}: {e}", path.display())))?;
    Ok((fx, loaded))
}

fn run(cmd: Cmd) -> Result<u8, CmdError> {
    match cmd {
        Cmd::Check { path, kind, json } => cmd_check(&path, kind.as_deref(), json),
        Cmd::Invariants { path, json } => cmd_invariants(&path, json),
        Cmd::Family {
            l,
            emit,
            verify,
            json,
        } => cmd_family(l, emit, verify, json),
        Cmd::Criteria { path, levi, json } => cmd_criteria(&path, levi.as_deref(), json),
        Cmd::Probe {
            variant,
            reference,
            json,
        } => cmd_probe(variant.as_deref(), reference, json),
    }
}

fn cmd_check(path: &PathBuf, kind: Option<&str>, json: bool) -> Result<u8, CmdError> {
    let (fx, loaded) = load(path)?;
    if let Some(want) = kind {
        if want != loaded.kind() {
            return fail(format!(
                "{}: kind mismatch: file has {:?}, --kind asked for {want:?}",
                path.display(),
                loaded.kind()
            ));
        }
    }
    let violations = match &loaded {
        Loaded::CommAlg(a) => a.check(),
        Loaded::Leibniz(l) => l.check(),
        Loaded::Tca(t) => t.check(),
        Loaded::VertexAlgebroid(b) => b.check(),
    };
    if json {
        let mut doc = ReportDoc::new(&fx.name);
        doc.push_violations("axioms", &violations);
        print!("{}", doc.to_json());
    } else if violations.is_empty() {
        println!("{}: {} axioms hold (0 violations)", fx.name, loaded.kind());
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
        println!("{}: {} violation(s)", fx.name, violations.len());
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn render_subspace(tag: &str, s: &Subspace) -> String {
    if s.is_zero() {
        format!("{tag}: dim 0")
    } else {
        let rows: Vec<String> = s
            .basis_rows()
            .iter()
            .map(|r| {
                let coords: Vec<String> = r.iter().map(Rat::to_string).collect();
                format!("[{}]", coords.join(","))
            })
            .collect();
        format!("{tag}: dim {}, basis {}", s.dim(), rows.join(" "))
    }
}

fn cmd_invariants(path: &PathBuf, json: bool) -> Result<u8, CmdError> {
    let (fx, loaded) = load(path)?;
    let Loaded::VertexAlgebroid(b) = loaded else {
        return fail(format!(
            "{}: invariants requires a vertex_algebroid fixture, found {:?}",
            path.display(),
            loaded.kind()
        ));
    };
    let violations = b.check();
    if !violations.is_empty() {
        if json {
            let mut doc = ReportDoc::new(&fx.name);
            doc.push_violations("axioms", &violations);
            print!("{}", doc.to_json());
        } else {
            for v in &violations {
                println!("violation: {v}");
            }
            println!(
                "{}: {} violation(s); invariants not computed",
                fx.name,
                violations.len()
            );
        }
        return Ok(1);
    }

    let lb = b.leibniz();
    let leib = lb.leib_ideal();
    let rad = b.rad_pairing();
    let ann = b.annihilator();
    let ada = b.a_partial_a();
    let ker = b.ker_partial();
    let jac = b.algebra().jacobson_radical();
    let local = b.algebra().is_local();
    let mut combined = Report::new();
    for r in [
        b.check_containments(),
        b.check_ker_partial(),
        b.verify_ann_equality(),
    ] {
        combined.clauses.extend(r.clauses);
    }

    if json {
        let mut doc = ReportDoc::new(&fx.name);
        for (id, s) in [
            ("leib", &leib),
            ("rad-pairing", &rad),
            ("annihilator", &ann),
            ("a-partial-a", &ada),
            ("ker-partial", &ker),
            ("jacobson-radical", &jac),
        ] {
            doc.checks.push(algebroids_cli::report_doc::CheckDoc {
                id: format!("dim-{id}"),
                pass: true,
                witness: Some(format!("dim {}", s.dim())),
            });
        }
        doc.checks.push(algebroids_cli::report_doc::CheckDoc {
            id: "a-local".to_string(),
            pass: true,
            witness: Some(format!("{local}")),
        });
        doc.push_report(&combined);
        print!("{}", doc.to_json());
    } else {
        println!("fixture: {}", fx.name);
        println!("dim A = {}, dim degree-1 = {}", b.adim(), b.gdim());
        println!("{}", render_subspace("Leib", &leib));
        println!("{}", render_subspace("rad pairing", &rad));
        println!("{}", render_subspace("annihilator", &ann));
        println!("{}", render_subspace("A.d(A)", &ada));
        println!("{}", render_subspace("ker d", &ker));
        println!("{}", render_subspace("jacobson radical of A", &jac));
        println!("A local: {local}");
        print!("{combined}");
    }
    // Failed "hyp-*" clauses gate conditional conclusions and are
    // information, not defects of the fixture.
    let ok = combined
        .clauses
        .iter()
        .all(|c| c.status != algebroids::ClauseStatus::Fail || c.id.starts_with("hyp-"));
    Ok(if ok { 0 } else { 1 })
}

fn cmd_family(l: usize, emit: bool, verify: bool, json: bool) -> Result<u8, CmdError> {
    if l == 0 {
        return fail("--l must be at least 1");
    }
    if emit == verify {
        return fail("family needs exactly one of --emit or --verify");
    }
    if emit {
        let fx = family_fixture(l).map_err(|e| CmdError(e.to_string()))?;
        print!("{}", fx.emit());
        return Ok(0);
    }
    let spec = FamilySpec::new(l).map_err(|e| CmdError(e.to_string()))?;
    let report = spec.verify();
    if json {
        let mut doc = ReportDoc::new(&format!("sl2-vertex-algebroid-l{l}"));
        doc.push_report(&report);
        print!("{}", doc.to_json());
    } else {
        print!("{report}");
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn parse_levi_rows(text: &str, gdim: usize) -> Result<RatMatrix, CmdError> {
    let mut rows = Vec::new();
    for (n, row) in text.split(';').enumerate() {
        let mut coords = Vec::new();
        for (m, entry) in row.split(',').enumerate() {
            let r: Rat = entry.trim().parse().map_err(|_| {
                CmdError(format!(
                    "--levi row {n} entry {m}: invalid rational {entry:?}"
                ))
            })?;
            coords.push(r);
        }
        if coords.len() != gdim {
            return fail(format!(
                "--levi row {n}: expected {gdim} entries, found {}",
                coords.len()
            ));
        }
        rows.push(coords);
    }
    Ok(RatMatrix::from_rows(rows))
}

fn cmd_criteria(path: &PathBuf, levi: Option<&str>, json: bool) -> Result<u8, CmdError> {
    let (fx, loaded) = load(path)?;
    let Loaded::VertexAlgebroid(b) = loaded else {
        return fail(format!(
            "{}: criteria requires a vertex_algebroid fixture, found {:?}",
            path.display(),
            loaded.kind()
        ));
    };
    let violations = b.check();
    if !violations.is_empty() {
        for v in violations.iter().take(5) {
            eprintln!("violation: {v}");
        }
        eprintln!("{}: not a valid vertex algebroid", fx.name);
        return Ok(1);
    }
    let levi_rows = match levi {
        Some(text) => Some(parse_levi_rows(text, b.gdim())?),
        None => fx
            .subspace_rows("levi", b.gdim())
            .map_err(|e| CmdError(e.to_string()))?,
    };
    let verdict = evaluate_criteria(&b, levi_rows.as_ref());
    if json {
        let mut doc = ReportDoc::new(&fx.name);
        doc.push_report(&verdict.report());
        doc.verdict = Some(verdict.conclusion.to_string());
        print!("{}", doc.to_json());
    } else {
        print!("{}", verdict.report());
        println!("verdict: {}", verdict.conclusion);
    }
    Ok(0)
}

fn cmd_probe(variant: Option<&str>, reference: bool, json: bool) -> Result<u8, CmdError> {
    let (name, outcome) = if reference {
        if variant.is_some() {
            return fail("probe takes either --variant or --reference, not both");
        }
        ("probe-reference".to_string(), probe_reference())
    } else {
        let v = match variant {
            Some("unit") => ProbeVariant::Unit,
            Some("nil") => ProbeVariant::Nil,
            Some(other) => return fail(format!("--variant must be unit or nil, not {other:?}")),
            None => return fail("probe needs --variant unit|nil or --reference"),
        };
        (
            format!("probe-{}", variant.unwrap()),
            probe_dim1_extension(v),
        )
    };
    let verdict = if outcome.is_infeasible() {
        "INFEASIBLE"
    } else {
        "FEASIBLE"
    };
    if json {
        let mut doc = ReportDoc::new(&name);
        for (n, line) in outcome.trace().iter().enumerate() {
            doc.checks.push(algebroids_cli::report_doc::CheckDoc {
                id: format!("step-{n}"),
                pass: true,
                witness: Some(line.clone()),
            });
        }
        doc.verdict = Some(verdict.to_string());
        print!("{}", doc.to_json());
    } else {
        for line in outcome.trace() {
            println!("{line}");
        }
        println!("verdict: {verdict}");
    }
    Ok(0)
}
