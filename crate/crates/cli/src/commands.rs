//! The four subcommands, as pure functions from inputs to output text.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use alia_core::{Bundle, LawId, Scalar};

use crate::corpus;
use crate::dispatch::{apply_override, construct, evaluate, Kind, RepChoice};
use crate::error::CliError;
use crate::format::{emit, parse_document, Document};
use crate::report::{Certification, Outcome, Point, Report, DEGREE_BOUND, GRID};

/// Options shared by `check`, `certify` and `construct`.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub files: Vec<PathBuf>,
    pub sets: Vec<(String, Scalar)>,
    pub overrides: Vec<(String, String)>,
    pub rep: Option<RepChoice>,
}

/// Text to print and the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

struct Loaded {
    names: Vec<String>,
    docs: Vec<Document>,
}

impl Loaded {
    fn declared(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for d in &self.docs {
            for p in &d.params {
                if seen.insert(p.clone()) {
                    out.push(p.clone());
                }
            }
        }
        out
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn load(inputs: &Inputs) -> Result<Loaded, CliError> {
    if inputs.files.is_empty() {
        return Err(CliError::Usage("no input files".into()));
    }
    let mut names = Vec::new();
    let mut docs = Vec::new();
    for path in &inputs.files {
        names.push(path.display().to_string());
        docs.push(parse_document(&read(path)?)?);
    }
    let loaded = Loaded { names, docs };
    let declared = loaded.declared();
    for (name, _) in &inputs.sets {
        if !declared.contains(name) {
            return Err(CliError::UnknownParam(name.clone()));
        }
    }
    Ok(loaded)
}

fn merge(parts: Vec<Bundle>) -> Result<Bundle, CliError> {
    let mut it = parts.into_iter();
    let mut out = it.next().expect("at least one input");
    for b in it {
        if b.dim != out.dim {
            return Err(CliError::Conflict(format!(
                "inputs have dimensions {} and {}",
                out.dim, b.dim
            )));
        }
        let clash = |what: &str| CliError::Conflict(format!("{what} is defined in two inputs"));
        if b.algebra.is_some() {
            if out.algebra.is_some() {
                return Err(clash("`bracket`"));
            }
            out.algebra = b.algebra;
        }
        if b.coalgebra.is_some() {
            if out.coalgebra.is_some() {
                return Err(clash("`comul`"));
            }
            out.coalgebra = b.coalgebra;
        }
        for (k, v) in b.maps {
            if out.maps.insert(k.clone(), v).is_some() {
                return Err(clash(&format!("map `{k}`")));
            }
        }
        for (k, v) in b.tensors {
            if out.tensors.insert(k.clone(), v).is_some() {
                return Err(clash(&format!("tensor `{k}`")));
            }
        }
        for (k, v) in b.forms {
            if out.forms.insert(k.clone(), v).is_some() {
                return Err(clash(&format!("form `{k}`")));
            }
        }
    }
    Ok(out)
}

fn bundle_at(
    loaded: &Loaded,
    bindings: &BTreeMap<String, Scalar>,
    overrides: &[(String, String)],
) -> Result<Bundle, CliError> {
    let parts = loaded
        .docs
        .iter()
        .map(|d| d.resolve(bindings))
        .collect::<Result<Vec<_>, _>>()?;
    let mut b = merge(parts)?;
    for (name, spec) in overrides {
        apply_override(&mut b, name, spec)?;
    }
    Ok(b)
}

fn fixed_bindings(inputs: &Inputs) -> BTreeMap<String, Scalar> {
    inputs.sets.iter().cloned().collect()
}

fn text_map<V: ToString>(pairs: impl IntoIterator<Item = (String, V)>) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k, v.to_string())).collect()
}

fn uses_rep(law: LawId) -> bool {
    use LawId::*;
    matches!(
        law,
        Representation
            | NijenhuisRepresentation
            | Admissible
            | RelativeRotaBaxter
            | WeakRelativeRotaBaxter
            | SemidirectAdmissibility
    )
}

fn base_report(command: &str, law: LawId, loaded: &Loaded, inputs: &Inputs) -> Report {
    let rep = inputs.rep.unwrap_or_default();
    Report {
        command: command.to_string(),
        law: law.name().to_string(),
        inputs: loaded.names.clone(),
        bindings: text_map(inputs.sets.iter().cloned()),
        overrides: text_map(inputs.overrides.iter().cloned()),
        rep: uses_rep(law).then(|| rep.name().to_string()),
        verdict: String::new(),
        outcome: Outcome {
            passed: true,
            failing: Vec::new(),
            entries: Vec::new(),
        },
        certification: None,
    }
}

/// Evaluates `law` once. Exit 0 if the residual vanishes, 1 otherwise.
pub fn check(inputs: &Inputs, law: LawId) -> Result<(Report, u8), CliError> {
    let loaded = load(inputs)?;
    check_loaded(&loaded, inputs, law)
}

fn check_loaded(loaded: &Loaded, inputs: &Inputs, law: LawId) -> Result<(Report, u8), CliError> {
    let bundle = bundle_at(loaded, &fixed_bindings(inputs), &inputs.overrides)?;
    let res = evaluate(law, &bundle, inputs.rep.unwrap_or_default())?;
    let mut report = base_report("check", law, loaded, inputs);
    report.outcome = Outcome::from_residual(&res);
    report.verdict = if res.passed() { "PASS" } else { "FAIL" }.to_string();
    let code = if res.passed() { 0 } else { 1 };
    Ok((report, code))
}

/// Every assignment of grid values to `params`, first parameter slowest.
fn grid_points(params: &[String]) -> Vec<BTreeMap<String, Scalar>> {
    let mut points = vec![BTreeMap::new()];
    for p in params {
        points = points
            .into_iter()
            .flat_map(|base| {
                GRID.iter().map(move |&v| {
                    let mut m = base.clone();
                    m.insert(p.clone(), Scalar::from_int(v));
                    m
                })
            })
            .collect();
    }
    points
}

/// Evaluates `law` at every grid point of the parameters left unset.
/// Without free parameters this is exactly [`check`].
pub fn certify(inputs: &Inputs, law: LawId) -> Result<(Report, u8), CliError> {
    let loaded = load(inputs)?;
    let fixed = fixed_bindings(inputs);
    let free: Vec<String> = loaded
        .declared()
        .into_iter()
        .filter(|p| !fixed.contains_key(p))
        .collect();
    if free.is_empty() {
        return check_loaded(&loaded, inputs, law);
    }
    let rep = inputs.rep.unwrap_or_default();
    let mut points = Vec::new();
    let mut witness = None;
    let mut outcome = None;
    for point in grid_points(&free) {
        let mut bindings = fixed.clone();
        bindings.extend(point.clone());
        let bundle = bundle_at(&loaded, &bindings, &inputs.overrides)?;
        let res = evaluate(law, &bundle, rep)?;
        let shown = text_map(point);
        if !res.passed() && witness.is_none() {
            witness = Some(shown.clone());
            outcome = Some(Outcome::from_residual(&res));
        }
        points.push(Point {
            bindings: shown,
            passed: res.passed(),
        });
    }
    let certified = witness.is_none();
    let mut report = base_report("certify", law, &loaded, inputs);
    report.verdict = if certified {
        "CERTIFIED"
    } else {
        "NOT CERTIFIED"
    }
    .to_string();
    if let Some(o) = outcome {
        report.outcome = o;
    }
    report.certification = Some(Certification {
        params: free,
        grid: GRID.iter().map(|v| v.to_string()).collect(),
        degree_bound: DEGREE_BOUND,
        points,
        certified,
        witness,
    });
    Ok((report, if certified { 0 } else { 1 }))
}

/// Runs a construction and returns the canonical text of its output.
pub fn construct_text(inputs: &Inputs, kind: Kind) -> Result<String, CliError> {
    let loaded = load(inputs)?;
    let bundle = bundle_at(&loaded, &fixed_bindings(inputs), &inputs.overrides)?;
    let out = construct(kind, &bundle, inputs.rep.unwrap_or_default())?;
    Ok(emit(&out))
}

/// Lists the built-in corpus, or returns one file's text.
pub fn examples(name: Option<&str>) -> Result<String, CliError> {
    match name {
        None => {
            let width = corpus::CORPUS
                .iter()
                .map(|e| e.name.len())
                .max()
                .unwrap_or(0);
            Ok(corpus::CORPUS
                .iter()
                .map(|e| format!("{:width$}  {}\n", e.name, e.summary))
                .collect())
        }
        Some(n) => corpus::find(n)
            .map(|e| e.text.to_string())
            .ok_or_else(|| CliError::Usage(format!("no built-in example `{n}`"))),
    }
}
