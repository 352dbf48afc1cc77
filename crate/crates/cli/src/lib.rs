//! Command-line surface of `yamaguti`.
//!
//! Every command prints one JSON report on standard output. Exit code 0 means
//! the computation ran and every check passed, 1 means a mathematical check
//! failed (the report carries a witness), 2 means the input or the command
//! line was unusable.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use yamaguti::cohomology::{coboundary_preimage, cohomology_23, morphism_cohomology_23, CohomologyReport};
use yamaguti::deformation::{
    infinitesimal_cocycle_check, n_infinitesimal, rigidity_check, try_reduce, verify_deformation, ReductionStop,
};
use yamaguti::extension::{
    canonical_section, check_extension, check_section, cocycle_from_extension, extension_from_cocycle,
    induced_representation, isomorphism_from_cohomologous, Section,
};
use yamaguti::model::{cochain_value, matrix_value, model_to_value, parse_model, vector_value, Base, CochainModel, Model};
use yamaguti::{Error, MorphismRepresentation, Representation, Verdict, Witness};

#[derive(Parser, Debug)]
#[command(name = "yamaguti", version, about = "Exact cohomology, deformations and extensions of Lie-Yamaguti morphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the axioms of a model file.
    Check {
        what: CheckKind,
        file: PathBuf,
    },
    #[command(subcommand)]
    Cohomology(CohomologyCommand),
    /// Work with a formal deformation of a morphism.
    Deform {
        action: DeformAction,
        file: PathBuf,
    },
    /// Decide rigidity of a morphism from its second cohomology.
    Rigidity {
        file: PathBuf,
    },
    #[command(subcommand)]
    Ext(ExtCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    Algebra,
    Morphism,
    Rep,
    Mrep,
    Extension,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeformAction {
    Verify,
    Infinitesimal,
    Reduce,
}

/// Dimensions of cocycles, coboundaries and cohomology in degree (2,3).
#[derive(Subcommand, Debug)]
enum CohomologyCommand {
    Algebra {
        file: PathBuf,
        /// `adjoint`, `trivial`, or a representation file.
        #[arg(long, default_value = "adjoint")]
        rep: String,
        #[arg(long)]
        certificates: bool,
    },
    Morphism {
        /// A morphism (coefficients in itself) or a morphism representation.
        file: PathBuf,
        /// Use the complex without the morphism component.
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        certificates: bool,
    },
}

/// Abelian extensions of morphisms.
#[derive(Subcommand, Debug)]
enum ExtCommand {
    /// Build the extension of a cocycle.
    Build { file: PathBuf },
    /// Recover the representation and cocycle of an extension.
    Cocycle {
        file: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Isomorphism between the extensions of two cohomologous cocycles.
    Iso { file: PathBuf },
}

/// What a run produced: exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input { message: String, position: Option<(usize, usize)> },
    Math { reason: String, witness: Witness },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Rejected { reason, witness } => Failure::Math { reason, witness },
            Error::Consistency(m) => Failure::Math {
                reason: m,
                witness: Witness::new("internal consistency", vec![]),
            },
            Error::Parse { line, column, message } => Failure::Input {
                message,
                position: Some((line, column)),
            },
            other => Failure::Input {
                message: other.to_string(),
                position: None,
            },
        }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure::Input {
        message: message.into(),
        position: None,
    }
}

/// A finished computation: its verdict and whatever it wants to report.
struct Done {
    verdict: Verdict,
    data: Map<String, Value>,
}

impl Done {
    fn pass(data: Map<String, Value>) -> Self {
        Done {
            verdict: Verdict::Pass,
            data,
        }
    }

    fn verdict(verdict: Verdict) -> Self {
        Done {
            verdict,
            data: Map::new(),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            return failure_outcome(&input(text.trim_end()));
        }
    };
    match dispatch(cli.command) {
        Ok(done) => {
            let mut o = Map::new();
            o.insert("ok".into(), Value::Bool(done.verdict.is_pass()));
            if !done.data.is_empty() {
                o.insert("data".into(), Value::Object(done.data));
            }
            let code = match &done.verdict {
                Verdict::Pass => 0,
                Verdict::Fail(w) => {
                    o.insert("witness".into(), witness_value(w));
                    1
                }
            };
            Outcome {
                code,
                stderr: match &done.verdict {
                    Verdict::Pass => String::new(),
                    Verdict::Fail(w) => format!("check failed: {w}\n"),
                },
                stdout: render(Value::Object(o)),
            }
        }
        Err(f) => failure_outcome(&f),
    }
}

fn failure_outcome(f: &Failure) -> Outcome {
    let mut o = Map::new();
    o.insert("ok".into(), Value::Bool(false));
    let (code, stderr) = match f {
        Failure::Input { message, position } => {
            let mut e = Map::new();
            e.insert("message".into(), Value::from(message.as_str()));
            if let Some((line, column)) = position {
                e.insert("line".into(), Value::from(*line));
                e.insert("column".into(), Value::from(*column));
            }
            o.insert("error".into(), Value::Object(e));
            (2, format!("error: {message}\n"))
        }
        Failure::Math { reason, witness } => {
            o.insert("reason".into(), Value::from(reason.as_str()));
            o.insert("witness".into(), witness_value(witness));
            (1, format!("rejected: {reason} ({witness})\n"))
        }
    };
    Outcome {
        code,
        stdout: render(Value::Object(o)),
        stderr,
    }
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn witness_value(w: &Witness) -> Value {
    let mut o = Map::new();
    o.insert("check".into(), Value::from(w.check.as_str()));
    o.insert("tuple".into(), Value::from(w.tuple_one_based()));
    if let Some(n) = w.order {
        o.insert("order".into(), Value::from(n));
    }
    Value::Object(o)
}

fn load(path: &Path) -> Result<Model, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_model(&text)?)
}

fn wrong_kind(path: &Path, m: &Model, expected: &str) -> Failure {
    input(format!("{}: expected a {expected} file, got {}", path.display(), m.kind()))
}

fn tagged(v: Verdict, name: &str) -> Verdict {
    match v {
        Verdict::Pass => Verdict::Pass,
        Verdict::Fail(w) => Verdict::Fail(Witness {
            check: format!("{name} {}", w.check),
            ..w
        }),
    }
}

fn dispatch(command: Command) -> Result<Done, Failure> {
    match command {
        Command::Check { what, file } => check(what, &file),
        Command::Cohomology(CohomologyCommand::Algebra { file, rep, certificates }) => {
            cohomology_algebra(&file, &rep, certificates)
        }
        Command::Cohomology(CohomologyCommand::Morphism {
            file,
            simple,
            certificates,
        }) => cohomology_morphism(&file, simple, certificates),
        Command::Deform { action, file } => deform(action, &file),
        Command::Rigidity { file } => rigidity(&file),
        Command::Ext(ExtCommand::Build { file }) => ext_build(&file),
        Command::Ext(ExtCommand::Cocycle { file, section }) => ext_cocycle(&file, section.as_deref()),
        Command::Ext(ExtCommand::Iso { file }) => ext_iso(&file),
    }
}

fn check(what: CheckKind, file: &Path) -> Result<Done, Failure> {
    let m = load(file)?;
    let verdict = match (what, &m) {
        (CheckKind::Algebra, Model::Algebra(l)) => l.check_axioms(),
        (CheckKind::Morphism, Model::Morphism(phi)) => phi.check(),
        (CheckKind::Rep, Model::Representation(r)) => {
            tagged(r.algebra().check_axioms(), "algebra").and_then(|| r.check_representation())
        }
        (CheckKind::Mrep, Model::MorphismRepresentation(mr)) => mr.phi().check().and_then(|| mr.check()),
        (CheckKind::Extension, Model::Extension(e)) => check_extension(e)?,
        (k, m) => {
            let expected = match k {
                CheckKind::Algebra => "algebra",
                CheckKind::Morphism => "morphism",
                CheckKind::Rep => "representation",
                CheckKind::Mrep => "morphism_representation",
                CheckKind::Extension => "extension",
            };
            return Err(wrong_kind(file, m, expected));
        }
    };
    Ok(Done::verdict(verdict))
}

fn dims_value(r: &CohomologyReport, certificates: bool) -> Map<String, Value> {
    let mut dims = Map::new();
    dims.insert("Z".into(), Value::from(r.dim_z));
    dims.insert("B".into(), Value::from(r.dim_b));
    dims.insert("H".into(), Value::from(r.dim_h));
    let mut o = Map::new();
    o.insert("dims".into(), Value::Object(dims));
    if certificates {
        let basis = |s: &yamaguti::Subspace| Value::Array(s.basis().iter().map(|v| vector_value(v)).collect());
        let mut c = Map::new();
        c.insert("cocycles".into(), basis(&r.cocycles));
        c.insert("coboundaries".into(), basis(&r.coboundaries));
        o.insert("certificates".into(), Value::Object(c));
    }
    o
}

fn cohomology_algebra(file: &Path, rep: &str, certificates: bool) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Algebra(l) = &m else {
        return Err(wrong_kind(file, &m, "algebra"));
    };
    let r = match rep {
        "adjoint" => Representation::adjoint(l),
        "trivial" => Representation::trivial(l),
        path => match load(Path::new(path))? {
            Model::Representation(r) if r.algebra() == l => r,
            Model::Representation(_) => return Err(input(format!("{path}: representation is over a different algebra"))),
            other => return Err(wrong_kind(Path::new(path), &other, "representation")),
        },
    };
    let verdict = l.check_axioms().and_then(|| r.check_representation());
    if !verdict.is_pass() {
        return Ok(Done::verdict(verdict));
    }
    Ok(Done::pass(dims_value(&cohomology_23(l, &r)?, certificates)))
}

/// A morphism file means coefficients in the morphism itself.
fn morphism_base(file: &Path) -> Result<(MorphismRepresentation, bool), Failure> {
    match load(file)? {
        Model::Morphism(phi) => Ok((Base::Morphism(phi).morphism_representation(), true)),
        Model::MorphismRepresentation(mr) => Ok((mr, false)),
        other => Err(wrong_kind(file, &other, "morphism or morphism_representation")),
    }
}

fn cohomology_morphism(file: &Path, simple: bool, certificates: bool) -> Result<Done, Failure> {
    let (mr, is_self) = morphism_base(file)?;
    let verdict = mr.phi().check().and_then(|| mr.check());
    if !verdict.is_pass() {
        return Ok(Done::verdict(verdict));
    }
    let h = morphism_cohomology_23(&mr)?;
    let report = if simple { &h.simple } else { &h.full };
    let mut data = dims_value(report, certificates);
    data.insert("complex".into(), Value::from(if simple { "simple" } else { "full" }));
    if is_self && !simple {
        data.insert("rigid".into(), Value::Bool(h.full.dim_h == 0));
    }
    Ok(Done::pass(data))
}

fn deform(action: DeformAction, file: &Path) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Deformation(def) = &m else {
        return Err(wrong_kind(file, &m, "deformation"));
    };
    let mut data = Map::new();
    data.insert("order".into(), Value::from(def.order()));
    match action {
        DeformAction::Verify => Ok(Done {
            verdict: verify_deformation(def)?,
            data,
        }),
        DeformAction::Infinitesimal => {
            let verdict = infinitesimal_cocycle_check(def)?;
            match n_infinitesimal(def) {
                None => {
                    data.insert("trivial".into(), Value::Bool(true));
                }
                Some((n, z)) => {
                    let mr = Base::Morphism(def.phi.clone()).morphism_representation();
                    data.insert("trivial".into(), Value::Bool(false));
                    data.insert("leading_order".into(), Value::from(n));
                    data.insert("infinitesimal".into(), Value::Object(cochain_value(&z)));
                    data.insert("cocycle".into(), Value::Bool(verdict.is_pass()));
                    if verdict.is_pass() {
                        data.insert("coboundary".into(), Value::Bool(coboundary_preimage(&mr, &z)?.is_some()));
                    }
                }
            }
            Ok(Done { verdict, data })
        }
        DeformAction::Reduce => {
            let r = try_reduce(def)?;
            data.insert("changed".into(), Value::Bool(r.changed));
            match &r.stop {
                ReductionStop::Trivial => {
                    data.insert("stop".into(), Value::from("trivial"));
                }
                ReductionStop::NotCoboundary { order, infinitesimal } => {
                    data.insert("stop".into(), Value::from("not_coboundary"));
                    data.insert("leading_order".into(), Value::from(*order));
                    data.insert("infinitesimal".into(), Value::Object(cochain_value(infinitesimal)));
                }
            }
            let mut eq = Map::new();
            eq.insert("source".into(), Value::Array(r.equivalence.psi_terms.iter().map(matrix_value).collect()));
            eq.insert("target".into(), Value::Array(r.equivalence.psip_terms.iter().map(matrix_value).collect()));
            data.insert("equivalence".into(), Value::Object(eq));
            data.insert("deformation".into(), model_to_value(&Model::Deformation(r.deformation)));
            Ok(Done::pass(data))
        }
    }
}

fn rigidity(file: &Path) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Morphism(phi) = &m else {
        return Err(wrong_kind(file, &m, "morphism"));
    };
    let verdict = phi.check();
    if !verdict.is_pass() {
        return Ok(Done::verdict(verdict));
    }
    let r = rigidity_check(phi)?;
    let mut data = Map::new();
    data.insert("H".into(), Value::from(r.dim_h));
    data.insert("verdict".into(), Value::from(if r.rigid { "rigid" } else { "inconclusive" }));
    Ok(Done::pass(data))
}

fn ext_build(file: &Path) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Cochain(c) = &m else {
        return Err(wrong_kind(file, &m, "cochain"));
    };
    let e = extension_from_cocycle(&c.base.morphism_representation(), &c.cochain)?;
    let mut data = Map::new();
    data.insert("extension".into(), model_to_value(&Model::Extension(e)));
    Ok(Done::pass(data))
}

fn ext_cocycle(file: &Path, section: Option<&Path>) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Extension(e) = &m else {
        return Err(wrong_kind(file, &m, "extension"));
    };
    let verdict = check_extension(e)?;
    if !verdict.is_pass() {
        return Ok(Done::verdict(verdict));
    }
    let sec: Section = match section {
        None => canonical_section(e)?,
        Some(p) => match load(p)? {
            Model::Section(s) => s,
            other => return Err(wrong_kind(p, &other, "section")),
        },
    };
    let verdict = check_section(e, &sec);
    if !verdict.is_pass() {
        return Ok(Done::verdict(verdict));
    }
    let mr = induced_representation(e, &sec)?;
    let c = cocycle_from_extension(e, &sec)?;
    let mut data = Map::new();
    data.insert("section".into(), model_to_value(&Model::Section(sec)));
    data.insert(
        "cocycle".into(),
        model_to_value(&Model::Cochain(CochainModel {
            base: Base::Representation(mr),
            cochain: c,
        })),
    );
    Ok(Done::pass(data))
}

fn ext_iso(file: &Path) -> Result<Done, Failure> {
    let m = load(file)?;
    let Model::Iso(iso) = &m else {
        return Err(wrong_kind(file, &m, "iso"));
    };
    let mr = iso.base.morphism_representation();
    let out = isomorphism_from_cohomologous(&mr, &iso.first, &iso.second, iso.xi.clone())?;
    let mut xi = Map::new();
    xi.insert("source".into(), matrix_value(&out.xi));
    xi.insert("target".into(), matrix_value(&out.xi_bar));
    let mut data = Map::new();
    data.insert("alpha".into(), matrix_value(out.alpha.matrix()));
    data.insert("beta".into(), matrix_value(out.beta.matrix()));
    data.insert("xi".into(), Value::Object(xi));
    Ok(Done::pass(data))
}
