//! `ncpeak`: command-line access to the library.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ncpeak_core::algebra::{realize, Basis, Element, TensorElement, DEFAULT_CAP};
use ncpeak_core::combinatorics::{enumerate, Kind, SetComposition};
use ncpeak_core::convert::{
    convert, coproduct_element, internal_element, omega_element, product_elements, rho_element, theta_element,
};
use ncpeak_core::identities::{
    scan_c_nonneg, scan_conjecture_euler, verify_all, verify_int1, verify_int2, verify_internal, verify_main, Check,
    Identity, Report,
};
use ncpeak_core::posets::{triple_of_digraph, EdgeColouredDigraph, LabelledPoset};
use ncpeak_core::text::{element_to_json, read_element, tensor_to_json};
use ncpeak_core::{ncpeak, ncqsym, ncsym, theta, Error};

const GRAMMAR: &str = "\
Elements are written inline as `<coeff>*<basis>:<key> [+ ...]`, e.g.
  \"3/2*M:1,3|2 - K:B={2};sigma=1,3,2\"
Coefficients are rationals p/q and default to 1; `0` is the zero element.
Bases: M F K Eta m p e h q nbasis QSymM QSymF QSymK QSymEta.
Keys: set compositions `2,5,6|1,3|4` (`{}` if empty), set partitions `1,3/2`,
subsets `A={2,4};n=5` or `B={2};n=4`, and pairs `A={..};sigma=..` (M, F) or
`B={..};sigma=..` (K, Eta). Any --elem may instead name a JSON file or hold
a JSON object `{\"n\":..,\"basis\":..,\"terms\":[{\"key\",\"num\",\"den\"}]}`.";

#[derive(Parser)]
#[command(name = "ncpeak", version, about = "Peak algebras in noncommuting variables", after_help = GRAMMAR)]
struct Cli {
    /// Write JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension of a graded piece: ncqsym, ncpeak, ncsym, ncomega, qsym-peak.
    Dim {
        space: String,
        #[arg(long)]
        n: usize,
    },
    /// List the objects of one kind, e.g. odd-set-compositions or peak-sets.
    Enumerate {
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Change of basis.
    Convert {
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        elem: ElemArgs,
    },
    /// Product of two elements.
    Product {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        elem2: String,
        #[arg(long)]
        to: Option<String>,
    },
    /// Coproduct; both legs written in --to (default: the input basis).
    Coproduct {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        to: Option<String>,
    },
    /// Internal coproduct; left legs in M, right legs in --to.
    Internal {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        to: Option<String>,
    },
    /// The descent-to-peak map (result in K, or QSymK for commutative input).
    Theta {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long)]
        to: Option<String>,
    },
    /// Commute the variables.
    Rho {
        #[command(flatten)]
        elem: ElemArgs,
    },
    /// The involution ω on NCSym.
    Omega {
        #[command(flatten)]
        elem: ElemArgs,
    },
    /// Labelled posets and edge-coloured digraphs.
    Digraph {
        #[command(subcommand)]
        cmd: DigraphCmd,
    },
    /// Check an identity, on given inputs or exhaustively in degree N.
    Verify(VerifyArgs),
    /// Report on a conjecture for every degree up to N.
    Scan {
        which: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// One coefficient of the internal coproduct of η_φ.
    CoeffC {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        phiprime: String,
    },
}

#[derive(Args)]
struct ElemArgs {
    /// Inline element, JSON object, or path to a JSON file.
    #[arg(long)]
    elem: String,
    /// Degree, needed only for the zero element.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum DigraphCmd {
    /// Expand the P-partition generating function of a triple or digraph.
    Expand {
        /// JSON triple `{vertices, solid, double, gamma, sigma}` or bare digraph `{vertices, solid, double}`, inline or a file.
        #[arg(long)]
        triple: String,
        /// Enriched P-partitions (K basis) instead of ordinary ones (F basis).
        #[arg(long)]
        enriched: bool,
        /// Also compare against brute-force enumeration on this many variables.
        #[arg(long)]
        realize: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// case1, int1, main, int2, internal, theta-diagram, ncsym-theta-p, lem-odd-set, special-even.
    which: String,
    #[arg(long)]
    n: Option<usize>,
    /// Run every degree from 1 to N instead of N alone.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    phi: Option<String>,
    #[arg(long)]
    psi: Option<String>,
    #[arg(long)]
    phiprime: Option<String>,
}

/// Errors the binary distinguishes when choosing an exit code.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn basis(s: &str) -> CliResult<Basis> {
    Ok(s.parse()?)
}

fn opt_basis(s: &Option<String>) -> CliResult<Option<Basis>> {
    s.as_deref().map(basis).transpose()
}

/// Inline text, or the contents of the named file.
fn load(s: &str) -> CliResult<String> {
    if Path::new(s).is_file() {
        fs::read_to_string(s).map_err(|e| Failure::Usage(format!("{s}: {e}")))
    } else {
        Ok(s.to_string())
    }
}

fn element(a: &ElemArgs, fallback_basis: Option<Basis>) -> CliResult<Element> {
    let fallback = a.n.map(|n| (fallback_basis.unwrap_or(Basis::M), n));
    Ok(read_element(&load(&a.elem)?, fallback)?)
}

fn comp(s: &str) -> CliResult<SetComposition> {
    Ok(s.parse()?)
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }
}

fn elem_out(x: &Element) -> Output {
    Output::new(x.to_string(), element_to_json(x))
}

fn tensor_out(t: &TensorElement) -> Output {
    Output::new(t.to_string(), tensor_to_json(t))
}

fn reports_out(reports: &[Report], verdicts: bool) -> Output {
    let text = reports.iter().map(Report::to_string).collect::<Vec<_>>().join("\n");
    let json = Value::Array(reports.iter().map(Report::to_json).collect());
    Output { text, json, ok: !verdicts || reports.iter().all(|r| r.ok) }
}

fn dim(space: &str, n: usize) -> CliResult<usize> {
    Ok(match space {
        "ncqsym" => ncqsym::dim_ncqsym(n),
        "ncpeak" => ncpeak::dim_ncpeak(n),
        "ncsym" => ncpeak_core::combinatorics::SetPartition::all(n).len(),
        "ncomega" => ncsym::dim_ncomega(n),
        "qsym-peak" => theta::qsym::dim_peak_qsym(n),
        _ => return Err(Failure::Usage(format!("unknown space {space:?}"))),
    })
}

fn read_poset(s: &str) -> CliResult<LabelledPoset> {
    let text = load(s)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("JSON: {e}")))?;
    if v.get("gamma").is_some() {
        Ok(LabelledPoset::from_json(&v)?)
    } else {
        Ok(triple_of_digraph(&EdgeColouredDigraph::from_json(&v)?)?)
    }
}

fn digraph_expand(triple: &str, enriched: bool, m: Option<usize>, cap: u128) -> CliResult<Output> {
    let p = read_poset(triple)?;
    let (b, keys, in_m) = if enriched {
        (Basis::K, p.fcal_expansion_k(), p.fcal_expansion())
    } else {
        (Basis::F, p.y_expansion_f(), p.y_expansion())
    };
    let x = Element::from_comps(b, p.n(), &keys)?;
    let mut out = elem_out(&x);
    if let Some(m) = m {
        let agrees = realize(&in_m, p.n(), m, cap)? == p.enumerate_colourings(m, enriched, cap)?;
        out.text.push_str(&format!("\nrealization m={m}: {}", if agrees { "agrees" } else { "differs" }));
        out.json = json!({ "expansion": out.json, "realization": { "m": m, "agrees": agrees } });
        out.ok = agrees;
    }
    Ok(out)
}

fn check_out(name: &str, n: usize, c: Check) -> Output {
    let r = Report { identity: name.into(), n, ok: c.holds, detail: c.detail };
    let mut out = reports_out(std::slice::from_ref(&r), true);
    out.text = if r.ok { "ok".into() } else { format!("counterexample\n{}", r.detail) };
    out
}

fn verify(a: &VerifyArgs) -> CliResult<Output> {
    let id: Identity = a.which.parse()?;
    if let Some(phi) = &a.phi {
        let phi = comp(phi)?;
        let n = phi.n();
        let psi = || -> CliResult<SetComposition> {
            comp(a.psi.as_deref().ok_or_else(|| Failure::Usage("--psi is required".into()))?)
        };
        let c = match id {
            Identity::Int1 => verify_int1(&phi, &psi()?)?,
            Identity::Main => verify_main(&phi, &psi()?)?,
            Identity::Int2 => {
                let pp = a.phiprime.as_deref().ok_or_else(|| Failure::Usage("--phiprime is required".into()))?;
                verify_int2(&phi, &psi()?, &comp(pp)?)?
            }
            Identity::Internal => verify_internal(&phi)?,
            _ => return Err(Failure::Usage(format!("{} takes --n, not --phi", id.name()))),
        };
        return Ok(check_out(id.name(), n, c));
    }
    let n = a.n.ok_or_else(|| Failure::Usage("--n or --phi is required".into()))?;
    if !a.all {
        let r = verify_all(id, n)?;
        let mut out = reports_out(std::slice::from_ref(&r), true);
        out.text = if r.ok { "ok".into() } else { format!("counterexample\n{}", r.detail) };
        return Ok(out);
    }
    let degrees: Vec<usize> = match id {
        Identity::SpecialEven => (2..=n).step_by(2).collect(),
        _ => (1..=n).collect(),
    };
    let reports = degrees.into_iter().map(|k| verify_all(id, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(reports_out(&reports, true))
}

fn scan(which: &str, n_max: usize, jobs: Option<usize>) -> CliResult<Output> {
    let run = || -> CliResult<Vec<Report>> {
        match which {
            "euler" => Ok(scan_conjecture_euler(n_max)),
            "c-nonneg" => Ok(scan_c_nonneg(n_max)?),
            _ => Err(Failure::Usage(format!("unknown scan {which:?}"))),
        }
    };
    let reports = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    // Scans report; a counterexample is a finding, not a failure.
    Ok(reports_out(&reports, false))
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.cmd {
        Cmd::Dim { space, n } => {
            let d = dim(space, *n)?;
            Ok(Output::new(d.to_string(), json!({ "space": space, "n": n, "dim": d })))
        }
        Cmd::Enumerate { kind, n } => {
            let items = enumerate(kind.parse::<Kind>()?, *n);
            Ok(Output::new(items.join("\n"), json!({ "kind": kind, "n": n, "items": items })))
        }
        Cmd::Convert { from, to, elem } => {
            let from = opt_basis(from)?;
            let x = element(elem, from)?;
            if let Some(b) = from {
                if b != x.basis() {
                    return Err(Failure::Domain(format!("element is in {}, not {b}", x.basis())));
                }
            }
            Ok(elem_out(&convert(&x, basis(to)?)?))
        }
        Cmd::Product { elem, elem2, to } => {
            let x = element(elem, None)?;
            let y = read_element(&load(elem2)?, None)?;
            Ok(elem_out(&product_elements(&x, &y, opt_basis(to)?)?))
        }
        Cmd::Coproduct { elem, to } => Ok(tensor_out(&coproduct_element(&element(elem, None)?, opt_basis(to)?)?)),
        Cmd::Internal { elem, to } => Ok(tensor_out(&internal_element(&element(elem, None)?, opt_basis(to)?)?)),
        Cmd::Theta { elem, to } => Ok(elem_out(&theta_element(&element(elem, None)?, opt_basis(to)?)?)),
        Cmd::Rho { elem } => Ok(elem_out(&rho_element(&element(elem, None)?)?)),
        Cmd::Omega { elem } => Ok(elem_out(&omega_element(&element(elem, Some(Basis::P))?)?)),
        Cmd::Digraph { cmd: DigraphCmd::Expand { triple, enriched, realize, cap } } => {
            digraph_expand(triple, *enriched, *realize, *cap)
        }
        Cmd::Verify(a) => verify(a),
        Cmd::Scan { which, n_max, jobs } => scan(which, *n_max, *jobs),
        Cmd::CoeffC { phi, psi, phiprime } => {
            let c = ncpeak_core::combinatorics::coeff_c(&comp(phi)?, &comp(psi)?, &comp(phiprime)?)?;
            Ok(Output::new(c.to_string(), json!({ "num": c.numer().to_string(), "den": c.denom().to_string() })))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { out.json.to_string() } else { out.text };
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
