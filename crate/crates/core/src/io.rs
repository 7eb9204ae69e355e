//! The representation file format and matrix export.
//!
//! A representation file is a JSON document:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "group": { "kind": "braid", "n": 2, "m": 0 },
//!   "scalar_ring": ["t"],
//!   "dim": 1,
//!   "generators": { "s1": [["t"]] },
//!   "inverses": { "s1": [["t^-1"]] }
//! }
//! ```
//!
//! Group kinds are `braid`, `pure`, `mixed` and their semidirect products
//! with the free group, `free-braid`, `free-pure` and `free-mixed`.
//! Generators appear in canonical order; `inverses` is optional and is
//! computed over the Laurent ring when absent.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Ring};
use crate::poly::{Poly, Vars};
use crate::rep::{GroupKind, Representation};
use crate::subgroup::BraidSubgroup;

pub const FORMAT_VERSION: u32 = 1;

type NamedMatrices = IndexMap<String, Vec<Vec<String>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub kind: String,
    pub n: usize,
    #[serde(default)]
    pub m: usize,
}

impl GroupSpec {
    pub fn from_kind(kind: GroupKind) -> Self {
        let (prefix, g) = match kind {
            GroupKind::Braid(g) => ("", g),
            GroupKind::FreeSemidirect(g) => ("free-", g),
        };
        let (name, n, m) = match g {
            BraidSubgroup::Full { n } => ("braid", n, 0),
            BraidSubgroup::Pure { n } => ("pure", n, 0),
            BraidSubgroup::Mixed { n, m } => ("mixed", n, m),
        };
        GroupSpec { kind: format!("{prefix}{name}"), n, m }
    }

    pub fn to_kind(&self) -> Result<GroupKind> {
        let (free, name) = match self.kind.strip_prefix("free-") {
            Some(rest) => (true, rest),
            None => (false, self.kind.as_str()),
        };
        let g = match (name, self.n, self.m) {
            (_, 0, _) => return Err(Error::Invalid("group needs n ≥ 1".into())),
            ("braid", n, 0) => BraidSubgroup::Full { n },
            ("pure", n, 0) => BraidSubgroup::Pure { n },
            ("mixed", n, m) if m > 0 => BraidSubgroup::Mixed { n, m },
            ("braid" | "pure", _, m) => return Err(Error::Invalid(format!("`{name}` takes no m (got {m})"))),
            ("mixed", _, _) => return Err(Error::Invalid("`mixed` needs m ≥ 1".into())),
            _ => return Err(Error::Parse(format!("unknown group kind `{}`", self.kind))),
        };
        Ok(if free { GroupKind::FreeSemidirect(g) } else { GroupKind::Braid(g) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub format_version: u32,
    pub group: GroupSpec,
    pub scalar_ring: Vec<String>,
    pub dim: usize,
    pub generators: NamedMatrices,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverses: Option<NamedMatrices>,
}

fn matrix_strings(m: &Matrix<Poly>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|p| p.to_string()).collect()).collect()
}

fn parse_matrix(vars: &Vars, dim: usize, name: &str, rows: &[Vec<String>]) -> Result<Matrix<Poly>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        let cols = rows.iter().map(Vec::len).find(|&c| c != dim).unwrap_or(dim);
        return Err(Error::Invalid(format!(
            "generator {name}: expected a {dim}×{dim} matrix, got {}×{cols}",
            rows.len()
        )));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| Poly::parse(vars, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if dim == 0 {
        return Ok(Matrix::zeros(0, 0, &Poly::zero(vars)));
    }
    Matrix::from_rows(rows)
}

fn parse_named(vars: &Vars, dim: usize, names: &[String], named: &NamedMatrices) -> Result<Vec<Matrix<Poly>>> {
    if let Some(extra) = named.keys().find(|k| !names.contains(k)) {
        return Err(Error::Invalid(format!("unknown generator `{extra}`")));
    }
    names
        .iter()
        .map(|name| {
            let rows = named.get(name).ok_or_else(|| Error::MissingImage(name.clone()))?;
            parse_matrix(vars, dim, name, rows)
        })
        .collect()
}

impl RepresentationFile {
    pub fn from_representation(rep: &Representation) -> Self {
        let names = rep.generator_names();
        let named = |list: &[Matrix<Poly>]| -> NamedMatrices {
            names.iter().cloned().zip(list.iter().map(matrix_strings)).collect()
        };
        RepresentationFile {
            format_version: FORMAT_VERSION,
            group: GroupSpec::from_kind(rep.kind()),
            scalar_ring: rep.vars().names().to_vec(),
            dim: rep.dim(),
            generators: named(rep.images()),
            inverses: Some(named(rep.inverses())),
        }
    }

    pub fn to_representation(&self) -> Result<Representation> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Invalid(format!("unsupported format_version {}", self.format_version)));
        }
        let kind = self.group.to_kind()?;
        let vars = Vars::new(&self.scalar_ring);
        if vars.len() != self.scalar_ring.len() {
            return Err(Error::Invalid("duplicate scalar_ring variables".into()));
        }
        let names = kind.generator_names();
        let images = parse_named(&vars, self.dim, &names, &self.generators)?;
        match &self.inverses {
            None => Representation::new(kind, &vars, self.dim, images),
            Some(inv) => {
                let inverses = parse_named(&vars, self.dim, &names, inv)?;
                for ((name, a), b) in names.iter().zip(&images).zip(&inverses) {
                    if self.dim > 0 && !a.mul(b)?.is_identity() {
                        return Err(Error::Invalid(format!("inverse of {name} does not invert its image")));
                    }
                }
                Representation::with_inverses(kind, &vars, self.dim, images, inverses)
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("representation files serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn write_representation(rep: &Representation) -> String {
    RepresentationFile::from_representation(rep).to_json()
}

pub fn read_representation(text: &str) -> Result<Representation> {
    RepresentationFile::from_json(text)?.to_representation()
}

/// Output formats for matrices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MatrixFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

impl FromStr for MatrixFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(MatrixFormat::Plain),
            "json" => Ok(MatrixFormat::Json),
            "latex" => Ok(MatrixFormat::Latex),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for MatrixFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixFormat::Plain => "plain",
            MatrixFormat::Json => "json",
            MatrixFormat::Latex => "latex",
        })
    }
}

#[derive(Serialize)]
struct MatrixDocument<'a> {
    format_version: u32,
    matrices: Vec<LabeledRows<'a>>,
}

#[derive(Serialize)]
struct LabeledRows<'a> {
    label: &'a str,
    rows: Vec<Vec<String>>,
}

/// Rewrites an entry for LaTeX: `t12^-3*s` becomes `t_{12}^{-3} s`.
pub fn latex_entry(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                out.push(chars[i]);
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i > start {
                out.push_str("_{");
                out.extend(&chars[start..i]);
                out.push('}');
            }
        } else if c == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push_str("^{");
            out.extend(&chars[start..i]);
            out.push('}');
        } else if c == '*' {
            out.push(' ');
            i += 1;
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

/// Renders labeled matrices. Plain output is one `label:` header and one
/// bracketed line per row; JSON carries `format_version`; LaTeX emits bare
/// `pmatrix` environments preceded by a comment line.
pub fn export_matrices<R: Ring>(items: &[(String, Matrix<R>)], format: MatrixFormat) -> String {
    let rows_of = |m: &Matrix<R>| -> Vec<Vec<String>> {
        (0..m.rows()).map(|r| m.row(r).iter().map(|e| e.to_string()).collect()).collect()
    };
    match format {
        MatrixFormat::Plain => {
            let blocks: Vec<String> = items.iter().map(|(label, m)| format!("{label}:\n{m}")).collect();
            blocks.join("\n")
        }
        MatrixFormat::Json => {
            let doc = MatrixDocument {
                format_version: FORMAT_VERSION,
                matrices: items.iter().map(|(label, m)| LabeledRows { label, rows: rows_of(m) }).collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("matrices serialize");
            text.push('\n');
            text
        }
        MatrixFormat::Latex => {
            let mut out = String::new();
            for (label, m) in items {
                out.push_str(&format!("% {label}\n\\begin{{pmatrix}}\n"));
                let rows: Vec<String> = rows_of(m)
                    .iter()
                    .map(|r| r.iter().map(|e| latex_entry(e)).collect::<Vec<_>>().join(" & "))
                    .collect();
                out.push_str(&rows.join(" \\\\\n"));
                out.push_str("\n\\end{pmatrix}\n");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn burau_b2() -> Representation {
        let vars = Vars::new(&["t"]);
        let t = Poly::var(&vars, "t").unwrap();
        let one = Poly::one(&vars);
        let m = Matrix::from_rows(vec![vec![Poly::zero(&vars), t.clone()], vec![one.clone(), one.sub(&t)]]).unwrap();
        Representation::new(GroupKind::Braid(BraidSubgroup::Full { n: 2 }), &vars, 2, vec![m]).unwrap()
    }

    #[test]
    fn round_trip() {
        let rep = burau_b2();
        let text = write_representation(&rep);
        assert!(text.contains("\"format_version\": 1"));
        let back = read_representation(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(write_representation(&back), text);
    }

    #[test]
    fn inverses_are_optional() {
        let rep = burau_b2();
        let mut file = RepresentationFile::from_representation(&rep);
        file.inverses = None;
        assert_eq!(file.to_representation().unwrap(), rep);
    }

    #[test]
    fn group_kinds_round_trip() {
        let kinds = [
            GroupKind::Braid(BraidSubgroup::Full { n: 3 }),
            GroupKind::Braid(BraidSubgroup::Pure { n: 3 }),
            GroupKind::Braid(BraidSubgroup::Mixed { n: 2, m: 1 }),
            GroupKind::FreeSemidirect(BraidSubgroup::Full { n: 2 }),
            GroupKind::FreeSemidirect(BraidSubgroup::Pure { n: 2 }),
            GroupKind::FreeSemidirect(BraidSubgroup::Mixed { n: 1, m: 2 }),
        ];
        for k in kinds {
            assert_eq!(GroupSpec::from_kind(k).to_kind().unwrap(), k);
        }
        let bad = GroupSpec { kind: "mixed".into(), n: 2, m: 0 };
        assert!(bad.to_kind().is_err());
        let bad = GroupSpec { kind: "cyclic".into(), n: 2, m: 0 };
        assert!(bad.to_kind().is_err());
    }

    #[test]
    fn malformed_files_are_rejected() {
        let text = write_representation(&burau_b2());
        assert!(read_representation(&text.replace("\"dim\": 2", "\"dim\": 3")).is_err());
        assert!(read_representation(&text.replace("\"-t + 1\"", "\"-t + \"")).is_err());
        assert!(read_representation(&text.replace("\"s1\"", "\"s2\"")).is_err());
        assert!(read_representation("{").is_err());
        let mut file = RepresentationFile::from_representation(&burau_b2());
        file.format_version = 2;
        assert!(file.to_representation().is_err());
    }

    #[test]
    fn export_formats() {
        let vars = Vars::new(&["t1", "s"]);
        let m = Matrix::from_rows(vec![vec![Poly::parse(&vars, "t1^-2*s").unwrap(), Poly::one(&vars)]]).unwrap();
        let items = vec![("A".to_string(), m)];
        assert_eq!(export_matrices(&items, MatrixFormat::Plain), "A:\n[t1^-2*s, 1]\n");
        assert_eq!(
            export_matrices(&items, MatrixFormat::Latex),
            "% A\n\\begin{pmatrix}\nt_{1}^{-2} s & 1\n\\end{pmatrix}\n"
        );
        let json: serde_json::Value = serde_json::from_str(&export_matrices(&items, MatrixFormat::Json)).unwrap();
        assert_eq!(json["format_version"], 1);
        assert_eq!(json["matrices"][0]["rows"][0][0], "t1^-2*s");
    }
}
