//! Named diagrams with expected invariant values.
//!
//! A catalog file has one entry per line,
//! `name<TAB>gauss code<TAB>key=value,...`, with `#` starting a comment
//! line. Recognised keys: `det`, `v2` (mod 2), `c2` (the exact `<C_2>`,
//! which must equal `<C'_2>` at every basepoint), `mod<p>=yes|no`, `mock`
//! (a mock Seifert matrix with rows separated by `/`), `mockdet`, `prov`,
//! `source` and `status` (`verified` or `quarantined`).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::arrow::{conway_pairing, Variant};
use crate::coloring::determinant;
use crate::diagram::{parse_gauss_code, BasedGaussDiagram, ParseError};
use crate::matrix::{mock_det, IntMatrix};

const BUILTIN: &str = include_str!("../data/catalog.tsv");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad Gauss code: {source}")]
    Code { line: usize, source: ParseError },
    #[error("line {line}: duplicate entry {name:?}")]
    Duplicate { line: usize, name: String },
    #[error("cannot read catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    /// Not trusted until its expected values are reproduced.
    Quarantined,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub det: Option<u128>,
    pub v2: Option<i64>,
    pub c2: Option<i64>,
    pub numberable: BTreeMap<u64, bool>,
    pub mock: Option<IntMatrix>,
    pub mockdet: Option<u128>,
}

impl Expected {
    fn is_empty(&self) -> bool {
        *self == Expected::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub code: String,
    pub diagram: BasedGaussDiagram,
    pub expected: Expected,
    pub provenance: Option<String>,
    pub source: Option<String>,
    pub status: Status,
    pub line: usize,
}

/// A disagreement between a catalog value and the recomputed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub entry: String,
    pub key: String,
    pub expected: String,
    pub found: String,
    pub provenance: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} expected {} but found {} (provenance: {})",
            self.entry, self.key, self.expected, self.found, self.provenance
        )
    }
}

fn parse_matrix(text: &str) -> Option<IntMatrix> {
    text.replace('/', "\n").parse().ok()
}

fn parse_line(line_no: usize, line: &str) -> Result<CatalogEntry, CatalogError> {
    let syntax = |message: String| CatalogError::Syntax { line: line_no, message };
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() < 2 || fields.len() > 3 {
        return Err(syntax(format!("expected 2 or 3 tab-separated fields, found {}", fields.len())));
    }
    let name = fields[0].trim();
    if name.is_empty() {
        return Err(syntax("empty name".into()));
    }
    let code = fields[1].trim();
    let diagram = parse_gauss_code(code).map_err(|source| CatalogError::Code { line: line_no, source })?;
    let mut expected = Expected::default();
    let (mut provenance, mut source, mut status) = (None, None, Status::Verified);
    for pair in fields.get(2).map_or("", |s| s.trim()).split(',').filter(|s| !s.trim().is_empty()) {
        let (key, value) = pair.split_once('=').ok_or_else(|| syntax(format!("{pair:?} is not key=value")))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = || syntax(format!("bad value {value:?} for {key}"));
        match key {
            "det" => expected.det = Some(value.parse().map_err(|_| bad())?),
            "v2" => expected.v2 = Some(value.parse().map_err(|_| bad())?),
            "c2" => expected.c2 = Some(value.parse().map_err(|_| bad())?),
            "mock" => expected.mock = Some(parse_matrix(value).ok_or_else(bad)?),
            "mockdet" => expected.mockdet = Some(value.parse().map_err(|_| bad())?),
            "prov" => provenance = Some(value.to_string()),
            "source" => source = Some(value.to_string()),
            "status" => {
                status = match value {
                    "verified" => Status::Verified,
                    "quarantined" => Status::Quarantined,
                    _ => return Err(bad()),
                }
            }
            _ if key.starts_with("mod") => {
                let p: u64 = key[3..].parse().map_err(|_| syntax(format!("unknown key {key:?}")))?;
                let yes = match value {
                    "yes" => true,
                    "no" => false,
                    _ => return Err(bad()),
                };
                expected.numberable.insert(p, yes);
            }
            _ => return Err(syntax(format!("unknown key {key:?}"))),
        }
    }
    if !expected.is_empty() && provenance.is_none() {
        return Err(syntax(format!("{name}: expected values need a prov note")));
    }
    Ok(CatalogEntry {
        name: name.to_string(),
        code: code.to_string(),
        diagram,
        expected,
        provenance,
        source,
        status,
        line: line_no,
    })
}

/// Parses catalog text; line numbers in errors start at 1.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let entry = parse_line(i + 1, line)?;
        if out.iter().any(|e| e.name == entry.name) {
            return Err(CatalogError::Duplicate { line: i + 1, name: entry.name });
        }
        out.push(entry);
    }
    Ok(out)
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    parse_catalog(&std::fs::read_to_string(path)?)
}

/// The catalog shipped with the crate.
pub fn builtin() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| parse_catalog(BUILTIN).expect("built-in catalog parses"))
}

pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    builtin().iter().find(|e| e.name == name)
}

impl CatalogEntry {
    /// Recomputes every expected value; returns the disagreements.
    pub fn verify(&self) -> Vec<Mismatch> {
        let g = &self.diagram;
        let mut out = Vec::new();
        let mut check = |key: &str, expected: String, found: String| {
            if expected != found {
                out.push(Mismatch {
                    entry: self.name.clone(),
                    key: key.to_string(),
                    expected,
                    found,
                    provenance: self.provenance.clone().unwrap_or_default(),
                });
            }
        };
        let show = |r: Result<String, String>| r.unwrap_or_else(|e| format!("error ({e})"));
        if let Some(d) = self.expected.det {
            check("det", d.to_string(), show(determinant(g).map(|x| x.to_string()).map_err(|e| e.to_string())));
        }
        if let Some(v) = self.expected.v2 {
            let found = conway_pairing(g, 2, Variant::Ascending).map(|x| x.rem_euclid(2).to_string());
            check("v2", v.rem_euclid(2).to_string(), show(found.map_err(|e| e.to_string())));
        }
        if let Some(c) = self.expected.c2 {
            for (b, h) in g.basepoint_variants().iter().enumerate() {
                for variant in [Variant::Ascending, Variant::Descending] {
                    let found = conway_pairing(h, 2, variant).map(|x| x.to_string()).map_err(|e| e.to_string());
                    check(&format!("c2 ({variant:?}, basepoint {b})"), c.to_string(), show(found));
                }
            }
        }
        for (&p, &yes) in &self.expected.numberable {
            let found = g.is_mod_p_numberable(p).map(|x| x.to_string()).map_err(|e| e.to_string());
            check(&format!("mod{p}"), yes.to_string(), show(found));
        }
        if let (Some(m), Some(d)) = (&self.expected.mock, self.expected.mockdet) {
            check("mockdet", d.to_string(), show(mock_det(m).map(|x| x.to_string()).map_err(|e| e.to_string())));
        }
        out
    }
}
