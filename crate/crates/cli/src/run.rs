use std::fs;
use std::path::Path;

use lmbraid::gassner::{gassner, gassner_rep};
use lmbraid::io::{export_matrices, read_representation, write_representation, MatrixFormat};
use lmbraid::lawrence::{lawrence_step_rep, lawrence_tower, specialize_lawrence, universal_lawrence, LawrenceBasis};
use lmbraid::long_moody::{lm_tower, long_moody, phi, phi_r, rescale_rep, restrict_from_bn1, specialize};
use lmbraid::rep::{GroupKind, Representation};
use lmbraid::subgroup::BraidSubgroup;
use lmbraid::suites::{
    braid_relation_suite, entry_claim_suite, gassner_suite, hecke_suite, lawrence_relation_suite, quadratic_suite,
    reduced_relation_suite, representation_suite, standard_hecke_inputs, Report,
};
use lmbraid::{BraidWord, Error, Exec, Matrix, Poly, Vars};

use crate::cli::{ApplyArgs, Command, Construction, Family, Format, GenArgs, Suite, VerifyArgs};

/// Why a command did not succeed, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed words, flags, parameters or files: exit 2.
    Input(String),
    /// Well-formed input outside a construction's domain: exit 3.
    Precondition(String),
    /// A verification check failed: exit 1. Carries the full report.
    Check(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn input(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

fn precondition(e: Error) -> Failure {
    match e {
        Error::Parse(_) => Failure::Input(e.to_string()),
        _ => Failure::Precondition(e.to_string()),
    }
}

/// Runs a command, returning the text for standard output.
pub fn run(command: Command) -> Outcome<String> {
    match command {
        Command::Gen(args) => {
            let text = gen(&args)?;
            emit(text, args.out.as_deref())
        }
        Command::Verify(args) => verify(&args),
        Command::Apply(args) => {
            let text = apply(&args)?;
            emit(text, args.out.as_deref())
        }
    }
}

fn emit(text: String, out: Option<&Path>) -> Outcome<String> {
    match out {
        None => Ok(text),
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
    }
}

/// Parameter assignments; `None` keeps every parameter symbolic.
struct Params(Option<Vec<(String, Poly)>>);

impl Params {
    fn parse(text: &str) -> Outcome<Self> {
        let text = text.trim();
        if text == "symbolic" {
            return Ok(Params(None));
        }
        let mut out = Vec::new();
        for part in text.split(',') {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Failure::Input(format!("expected name=value in --params, got `{part}`")))?;
            let name = name.trim().to_string();
            if out.iter().any(|(n, _)| *n == name) {
                return Err(Failure::Input(format!("parameter `{name}` assigned twice")));
            }
            out.push((name, Poly::parse_auto(value.trim()).map_err(input)?));
        }
        Ok(Params(Some(out)))
    }

    fn is_symbolic(&self) -> bool {
        self.0.is_none()
    }

    /// Values for `names` over one common ring: assigned values, or the
    /// parameter itself when unassigned.
    fn values(&self, names: &[String]) -> Outcome<(Vars, Vec<Poly>)> {
        let assigned = self.0.as_deref().unwrap_or(&[]);
        if let Some((extra, _)) = assigned.iter().find(|(n, _)| !names.contains(n)) {
            return Err(Failure::Input(format!("unknown parameter `{extra}`; expected one of {}", names.join(", "))));
        }
        let raw: Vec<Poly> = names
            .iter()
            .map(|name| match assigned.iter().find(|(n, _)| n == name) {
                Some((_, v)) => v.clone(),
                None => Poly::var(&Vars::new(&[name]), name).expect("declared"),
            })
            .collect();
        let vars = raw.iter().fold(Vars::empty(), |acc, p| acc.union(p.vars()));
        let values = raw.iter().map(|p| p.embed(&vars)).collect::<Result<Vec<_>, _>>().map_err(input)?;
        Ok((vars, values))
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn matrix_format(f: Format) -> MatrixFormat {
    match f {
        Format::Plain => MatrixFormat::Plain,
        Format::Json => MatrixFormat::Json,
        Format::Latex => MatrixFormat::Latex,
    }
}

fn one_dim_input(n: usize, params: &Params) -> Outcome<Representation> {
    let (_, v) = params.values(&names(&["s", "t"]))?;
    Representation::one_dim_semidirect(n, &v[0], &v[1]).map_err(precondition)
}

fn gen(args: &GenArgs) -> Outcome<String> {
    let n = args.n;
    if n == 0 {
        return Err(Failure::Input("--n must be at least 1".into()));
    }
    let word = BraidWord::parse(n, &args.word).map_err(input)?;
    let params = Params::parse(&args.params)?;
    let format = matrix_format(args.format);
    let shown = if word.is_empty() { "1".to_string() } else { word.to_string() };
    let one = |label: String, m: Matrix<Poly>| export_matrices(&[(label, m)], format);
    let text = match args.family {
        Family::Burau => {
            let rho = one_dim_input(n, &params)?;
            one(
                format!("burau n={n} word={shown}"),
                specialize(&phi(&word).map_err(precondition)?, &rho).map_err(precondition)?,
            )
        }
        Family::Universal | Family::Reduced => {
            let reduced = args.family == Family::Reduced;
            let u = if reduced { phi_r(&word) } else { phi(&word) }.map_err(precondition)?;
            let label = format!("{} n={n} word={shown}", if reduced { "reduced" } else { "universal" });
            if params.is_symbolic() {
                export_matrices(&[(label, u)], format)
            } else {
                one(label, specialize(&u, &one_dim_input(n, &params)?).map_err(precondition)?)
            }
        }
        Family::Gassner => {
            if !word.is_pure() {
                return Err(Failure::Precondition(format!("`{shown}` is not a pure braid")));
            }
            let ts: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
            let (vars, values) = params.values(&ts)?;
            let trivial = Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n: n + 1 }), &vars, 1);
            one(format!("gassner n={n} word={shown}"), gassner(&trivial, &values, &word).map_err(precondition)?)
        }
        Family::Lawrence => {
            let m = args.m.ok_or_else(|| Failure::Input("gen lawrence needs --m".into()))?;
            if m > n {
                return Err(Failure::Precondition(format!("m = {m} exceeds n = {n}")));
            }
            let basis = LawrenceBasis::new(n, m).map_err(precondition)?;
            let labels: Vec<String> = (0..basis.len()).map(|k| basis.label(k)).collect();
            let label = format!("lawrence n={n} m={m} word={shown} basis=[{}]", labels.join(", "));
            let u = universal_lawrence(n, m, &word).map_err(precondition)?;
            if params.is_symbolic() {
                export_matrices(&[(label, u)], format)
            } else {
                let (vars, v) = params.values(&names(&["q", "t"]))?;
                let kind = GroupKind::Braid(BraidSubgroup::Full { n: m.max(1) });
                let rho =
                    Representation::one_dim(kind, &vars, vec![v[1].clone(); m.max(1) - 1]).map_err(precondition)?;
                one(label, specialize_lawrence(&u, &rho, &v[0]).map_err(precondition)?)
            }
        }
    };
    Ok(text)
}

fn read_rep(path: &Path) -> Outcome<Representation> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    read_representation(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verify(args: &VerifyArgs) -> Outcome<String> {
    let exec = if args.sequential { Exec::Sequential } else { Exec::Parallel };
    let n = args.n;
    let reports: Vec<Report> = match args.suite {
        Suite::BraidRelations => match (&args.rep, args.m) {
            (Some(path), _) => {
                let rep = read_rep(path)?;
                if rep.kind().strands() != n {
                    return Err(Failure::Precondition(format!("--n {n} but the file describes {}", rep.kind())));
                }
                vec![representation_suite(&rep, exec).map_err(precondition)?]
            }
            (None, Some(m)) => {
                if m > n {
                    return Err(Failure::Precondition(format!("m = {m} exceeds n = {n}")));
                }
                vec![lawrence_relation_suite(n, m, exec).map_err(precondition)?]
            }
            (None, None) => vec![braid_relation_suite(n, exec).map_err(precondition)?],
        },
        Suite::Quadratic => vec![quadratic_suite(n, exec).map_err(precondition)?],
        Suite::Reduced => vec![reduced_relation_suite(n, exec).map_err(precondition)?],
        Suite::Gassner => vec![gassner_suite(n, exec).map_err(precondition)?],
        Suite::Hecke => {
            let inputs = match &args.rep {
                Some(path) => vec![(path.display().to_string(), read_rep(path)?)],
                None => {
                    let m = args.m.ok_or_else(|| Failure::Input("verify hecke needs --m or --rep".into()))?;
                    standard_hecke_inputs(m).map_err(precondition)?
                }
            };
            let mut reports = Vec::new();
            let mut input_m = None;
            for (name, rho) in inputs {
                let m = match rho.kind() {
                    GroupKind::Braid(BraidSubgroup::Full { n }) => n,
                    other => {
                        return Err(Failure::Precondition(format!(
                            "{name}: expected a representation of B_m, found {other}"
                        )))
                    }
                };
                if let Some(want) = args.m.filter(|&want| want != m) {
                    return Err(Failure::Precondition(format!("--m {want} but {name} is a representation of B_{m}")));
                }
                if m > n {
                    return Err(Failure::Precondition(format!("m = {m} exceeds n = {n}")));
                }
                let q = Poly::var(rho.vars(), "q")
                    .map_err(|_| Failure::Precondition(format!("{name}: the scalar ring has no `q`")))?;
                let mut report = hecke_suite(n, &rho, &q, exec).map_err(precondition)?;
                report.name = format!("{} [{name}]", report.name);
                reports.push(report);
                input_m = Some(m);
            }
            if let Some(m) = input_m {
                reports.push(entry_claim_suite(n, m, exec).map_err(precondition)?);
            }
            reports
        }
    };
    let passed = reports.iter().all(Report::passed);
    let text: String = reports
        .iter()
        .map(|r| {
            if args.quiet {
                r.to_string().lines().next().unwrap_or_default().to_string() + "\n"
            } else {
                r.to_string()
            }
        })
        .collect();
    if passed {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn params_list(text: Option<&str>, base: &Vars) -> Outcome<(Vars, Vec<Poly>)> {
    let raw = match text {
        None => Vec::new(),
        Some(t) => t.split(',').map(|p| Poly::parse_auto(p.trim()).map_err(input)).collect::<Outcome<Vec<_>>>()?,
    };
    let vars = raw.iter().fold(base.clone(), |acc, p| acc.union(p.vars()));
    let values = raw.iter().map(|p| p.embed(&vars)).collect::<Result<Vec<_>, _>>().map_err(input)?;
    Ok((vars, values))
}

fn apply(args: &ApplyArgs) -> Outcome<String> {
    let rep = read_rep(&args.rep)?;
    let (vars, params) = params_list(args.params.as_deref(), rep.vars())?;
    let rep = rep.embed(&vars).map_err(precondition)?;
    let single = |what: &str| -> Outcome<Option<Poly>> {
        match params.len() {
            0 => Ok(None),
            1 => Ok(Some(params[0].clone())),
            k => Err(Failure::Input(format!("{what} takes one parameter, got {k}"))),
        }
    };
    let lm = |input: Representation, t: Option<Poly>| -> Outcome<Representation> {
        let input = match t {
            Some(t) => rescale_rep(&input, &t).map_err(precondition)?,
            None => input,
        };
        long_moody(&input).map_err(precondition)
    };
    let out = match args.construction {
        Construction::Lm => lm(rep, single("lm")?)?,
        Construction::Subgroup => lm(restrict_from_bn1(&rep).map_err(precondition)?, single("subgroup")?)?,
        Construction::Gassner => {
            if params.is_empty() {
                return Err(Failure::Input("gassner needs --params t1,..,tn".into()));
            }
            gassner_rep(&rep, &params).map_err(precondition)?
        }
        Construction::LawrenceStep => lawrence_step_rep(&rep).map_err(precondition)?,
        Construction::Tower => {
            let steps = args.iterations.unwrap_or(params.len());
            let values = match params.len() {
                1 => vec![params[0].clone(); steps],
                k if k == steps => params.clone(),
                k => return Err(Failure::Input(format!("{k} parameters for {steps} iterations"))),
            };
            let n = rep.kind().strands();
            if steps >= n {
                return Err(Failure::Precondition(format!("{steps} iterations from B_{n} leave no strands")));
            }
            lm_tower(&rep, &values, n - steps).map_err(precondition)?
        }
        Construction::Lawrence => {
            let n = args.n.ok_or_else(|| Failure::Input("the lawrence construction needs --n".into()))?;
            let q = match single("lawrence")? {
                Some(q) => q,
                None => {
                    let vars = rep.vars().union(&Vars::new(&["q"]));
                    Poly::var(&vars, "q").expect("declared")
                }
            };
            lawrence_tower(&rep, &q, n).map_err(precondition)?
        }
    };
    Ok(write_representation(&out))
}
