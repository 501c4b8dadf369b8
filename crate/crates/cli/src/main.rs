mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poisson_core::deformation::describe;
use poisson_core::{
    combine, extend_jet, lie_biderivation_space, list_entries, ph_cochain_space, ph_delta_check, rigidity_probe,
    verify, verify_jet, Algebra, CochainSymmetry, DeformationKind, Extension, Jet, MultilinearMap, OperatorKind,
    PoissonPair, Subspace, SymmetryFilter,
};
use serde::Serialize;
use serde_json::{json, Value};

use input::{read_json, InputError, Source};

#[derive(Parser, Debug)]
#[command(name = "poisson", version, about = "Exact computations on finite-dimensional Poisson algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Poisson axioms and the single-product identity.
    Verify(Source),
    /// Split an algebra JSON into its symmetric and skew parts.
    Split { file: PathBuf },
    /// Combine a Poisson-pair JSON into one product.
    Combine { file: PathBuf },
    /// List the catalog entries and their parameters.
    CatalogList,
    /// Instantiate a catalog entry.
    CatalogShow {
        name: String,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        bracket: Option<String>,
        /// Emit the bullet/bracket pair instead of the combined product.
        #[arg(long)]
        pair: bool,
    },
    /// Kernel of one coboundary operator.
    Cocycles {
        #[command(flatten)]
        source: Source,
        /// P1, P2, C2, H2, L1, L2, LP2, Chevalley1-3 or Hochschild1-3.
        #[arg(long, default_value = "P2")]
        operator: String,
        /// none, symmetric or skew (bilinear cochains only).
        #[arg(long, default_value = "none")]
        filter: String,
    },
    /// Bilinear maps that are bracket derivations in each argument.
    Biderivations {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "none")]
        filter: String,
    },
    /// Cochains of the Poisson-Hochschild complex in one degree.
    PhSpace {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Symmetry::Alternator)]
        symmetry: Symmetry,
    },
    /// Check a jet order by order.
    DeformVerify {
        jet: PathBuf,
        /// general, lie or associative.
        #[arg(long, default_value = "general")]
        kind: String,
    },
    /// Solve for the next term of a jet.
    DeformExtend {
        jet: PathBuf,
        #[arg(long, default_value = "general")]
        kind: String,
        /// Print the jet extended by the particular solution.
        #[arg(long)]
        emit_jet: bool,
    },
    /// First-order deformation dimensions.
    Rigidity(Source),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Symmetry {
    Alternator,
    Full,
}

/// Payload of a finished computation.
struct Report {
    json: Value,
    text: String,
    /// The computation ran but the property it checks does not hold.
    failed: bool,
}

impl Report {
    fn new<T: Serialize>(payload: &T, text: String) -> Result<Self, InputError> {
        let json = serde_json::to_value(payload).map_err(|e| InputError(e.to_string()))?;
        Ok(Report { json, text, failed: false })
    }

    fn failing_if(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("json value")),
                Format::Text => print!("{}", report.text),
            }
            ExitCode::from(if report.failed { 2 } else { 0 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Report, InputError> {
    match command {
        Command::Verify(source) => {
            let r = verify(&source.load()?);
            let mut text = String::new();
            for (name, ok) in [
                ("commutative", r.commutative),
                ("associative", r.associative),
                ("jacobi", r.jacobi),
                ("leibniz", r.leibniz),
                ("markl_remm", r.markl_remm),
            ] {
                let _ = writeln!(text, "{name:<12} {ok}");
            }
            for w in &r.witnesses {
                let _ = writeln!(text, "witness {:?} at {:?}: residual {}", w.axiom, w.triple, vector(&w.residual));
            }
            Ok(Report::new(&r, text)?.failing_if(!r.all_hold()))
        }
        Command::Split { file } => {
            let a: Algebra = read_json(&file)?;
            let p = poisson_core::split(&a);
            let text = pair_text(&p);
            Report::new(&p, text)
        }
        Command::Combine { file } => {
            let p: PoissonPair = read_json(&file)?;
            let a = combine(&p);
            let text = format!("{}\n", describe(a.product()));
            Report::new(&a, text)
        }
        Command::CatalogList => {
            let entries = list_entries();
            let text = entries.iter().map(|e| format!("{e}\n")).collect();
            Report::new(&entries, text)
        }
        Command::CatalogShow { name, params, bracket, pair } => {
            let source = Source { file: None, catalog: Some(name), params, bracket };
            let p = source.load()?;
            if pair {
                let text = pair_text(&p);
                Report::new(&p, text)
            } else {
                let a = combine(&p);
                let text = format!("{}\n", describe(a.product()));
                Report::new(&a, text)
            }
        }
        Command::Cocycles { source, operator, filter } => {
            let kind: OperatorKind = operator.parse()?;
            let filter: SymmetryFilter = filter.parse()?;
            let a = combine(&source.load()?);
            let space = poisson_core::cocycle_space(&a, kind, filter)?;
            let basis = as_maps(kind.input_arity(), a.dim(), &space)?;
            space_report(json!({"operator": kind.to_string(), "filter": filter_name(filter)}), basis)
        }
        Command::Biderivations { source, filter } => {
            let filter: SymmetryFilter = filter.parse()?;
            let p = source.load()?;
            let space = lie_biderivation_space(&p, filter)?;
            let basis = as_maps(2, p.dim(), &space)?;
            space_report(json!({"filter": filter_name(filter)}), basis)
        }
        Command::PhSpace { source, k, symmetry } => {
            let p = source.load()?;
            let sym = match symmetry {
                Symmetry::Alternator => CochainSymmetry::Alternator,
                Symmetry::Full => CochainSymmetry::Full,
            };
            let space = ph_cochain_space(&p, k, sym)?;
            let basis = as_maps(k, p.dim(), &space)?;
            let mut closed = true;
            for psi in &basis {
                let r = ph_delta_check(&p, psi)?;
                closed &= r.is_lie_derivation && r.is_v_symmetric;
            }
            let head = json!({
                "k": k,
                "symmetry": format!("{symmetry:?}").to_lowercase(),
                "coboundaries_are_cochains": closed,
            });
            Ok(space_report(head, basis)?.failing_if(!closed))
        }
        Command::DeformVerify { jet, kind } => {
            let kind: DeformationKind = kind.parse()?;
            let j: Jet = read_json(&jet)?;
            let check = verify_jet(&j, kind);
            let text = match &check.first_failure {
                None => format!("ok through order {}\n", j.order()),
                Some(f) => format!("fails at order {} ({:?})\n", f.order, f.reason),
            };
            Ok(Report::new(&check, text)?.failing_if(!check.ok))
        }
        Command::DeformExtend { jet, kind, emit_jet } => {
            let kind: DeformationKind = kind.parse()?;
            let mut j: Jet = read_json(&jet)?;
            let ext = extend_jet(&j, kind)?;
            match ext {
                Extension::Solutions { particular, .. } if emit_jet => {
                    j.push(particular)?;
                    let text = format!("extended to order {}\n", j.order());
                    Report::new(&j, text)
                }
                Extension::Solutions { ref particular, ref kernel } => {
                    let text = format!(
                        "order {} term: {}\nfree directions: {}\n",
                        j.order() + 1,
                        describe(particular),
                        kernel.dim()
                    );
                    Report::new(&ext, text)
                }
                Extension::Obstructed { ref residual } => {
                    let text = format!("obstructed at order {}: {}\n", j.order() + 1, describe(residual));
                    Ok(Report::new(&ext, text)?.failing_if(true))
                }
            }
        }
        Command::Rigidity(source) => {
            let r = rigidity_probe(&source.load()?)?;
            let text = format!(
                "associative rigid at first order: {}\nlie first-order dim: {}\nsymmetric first-order dim: {}\n\
                 biderivation dim: {}\ncocycle dim: {}\ncoboundary dim: {}\n",
                r.assoc_rigid_order1,
                r.lie_order1_dim,
                r.sym_order1_dim,
                r.biderivation_dim,
                r.cocycle_dim,
                r.coboundary_dim
            );
            Report::new(&r, text)
        }
    }
}

fn filter_name(f: SymmetryFilter) -> &'static str {
    match f {
        SymmetryFilter::None => "none",
        SymmetryFilter::Symmetric => "symmetric",
        SymmetryFilter::Skew => "skew",
    }
}

fn vector(v: &[poisson_core::Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn pair_text(p: &PoissonPair) -> String {
    format!("bullet:  {}\nbracket: {}\n", describe(p.bullet()), describe(p.bracket()))
}

fn as_maps(arity: usize, dim: usize, space: &Subspace) -> Result<Vec<MultilinearMap>, InputError> {
    space.basis().iter().map(|v| MultilinearMap::new(arity, dim, v.clone()).map_err(InputError::from)).collect()
}

/// `head` plus the dimension and a basis of multilinear maps.
fn space_report(mut head: Value, basis: Vec<MultilinearMap>) -> Result<Report, InputError> {
    let mut text = format!("dim {}\n", basis.len());
    for (i, b) in basis.iter().enumerate() {
        let _ = writeln!(text, "[{}] {}", i + 1, describe(b));
    }
    head["dim"] = json!(basis.len());
    head["basis"] = serde_json::to_value(&basis).map_err(|e| InputError(e.to_string()))?;
    Ok(Report { json: head, text, failed: false })
}
