//! Canonical JSON fixture format for structure-constant data.
//!
//! Kinds: `comm_alg`, `leibniz`, `tca`, `vertex_algebroid`. Structure
//! constants are sparse entries `[i, j, k, "p/q"]` in strictly increasing
//! lexicographic order with nonzero canonical rational values; the boundary
//! map uses `[row, col, "p/q"]`. Parsing rejects anything non-canonical,
//! which makes emit -> parse -> emit byte-identical.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use algebroids::exactlin::basis_vec;
use algebroids::{CommAlg, LeibnizAlg, Rat, RatMatrix, Subspace, Tca, Trilinear, VertexAlgebroid};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SparseEntry(pub usize, pub usize, pub usize, pub String);

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixEntry(pub usize, pub usize, pub String);

/// On-disk fixture document. Field order is the canonical emission order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub kind: String,
    pub name: String,
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub basis: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub tables: BTreeMap<String, Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partial: Option<Vec<MatrixEntry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Vec<String>>>,
}

/// A fixture parsed into core objects.
pub enum Loaded {
    CommAlg(CommAlg),
    Leibniz(LeibnizAlg),
    Tca(Tca),
    VertexAlgebroid(VertexAlgebroid),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::CommAlg(_) => "comm_alg",
            Loaded::Leibniz(_) => "leibniz",
            Loaded::Tca(_) => "tca",
            Loaded::VertexAlgebroid(_) => "vertex_algebroid",
        }
    }
}

#[derive(Debug)]
pub struct FormatError {
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        message: message.into(),
    })
}

/// Parses a canonical rational literal, rejecting non-canonical spellings.
fn parse_canonical_rat(s: &str, at: &str) -> Result<Rat, FormatError> {
    let r = Rat::from_str(s).map_err(|_| FormatError {
        message: format!("{at}: invalid rational literal {s:?}"),
    })?;
    if r.to_string() != s {
        return err(format!(
            "{at}: non-canonical rational {s:?} (canonical form is {r})"
        ));
    }
    Ok(r)
}

fn parse_vector(strings: &[String], dim: usize, at: &str) -> Result<Vec<Rat>, FormatError> {
    if strings.len() != dim {
        return err(format!(
            "{at}: expected {dim} coordinates, found {}",
            strings.len()
        ));
    }
    strings
        .iter()
        .enumerate()
        .map(|(i, s)| parse_canonical_rat(s, &format!("{at}[{i}]")))
        .collect()
}

fn parse_table(
    entries: &[SparseEntry],
    dims: (usize, usize, usize),
    at: &str,
) -> Result<Trilinear, FormatError> {
    let mut t = Trilinear::zero(dims.0, dims.1, dims.2);
    let mut prev: Option<(usize, usize, usize)> = None;
    for (n, SparseEntry(i, j, k, val)) in entries.iter().enumerate() {
        let here = format!("{at} entry {n}");
        if *i >= dims.0 || *j >= dims.1 || *k >= dims.2 {
            return err(format!(
                "{here}: index ({i},{j},{k}) out of range for shape {dims:?}"
            ));
        }
        if let Some(p) = prev {
            if (*i, *j, *k) <= p {
                return err(format!(
                    "{here}: entries must be strictly increasing in (i,j,k)"
                ));
            }
        }
        prev = Some((*i, *j, *k));
        let r = parse_canonical_rat(val, &here)?;
        if r.is_zero() {
            return err(format!("{here}: zero entries must be omitted"));
        }
        t.set(*i, *j, *k, r);
    }
    Ok(t)
}

fn parse_partial(
    entries: &[MatrixEntry],
    rows: usize,
    cols: usize,
) -> Result<RatMatrix, FormatError> {
    let mut m = RatMatrix::zero(rows, cols);
    let mut prev: Option<(usize, usize)> = None;
    for (n, MatrixEntry(i, j, val)) in entries.iter().enumerate() {
        let here = format!("partial entry {n}");
        if *i >= rows || *j >= cols {
            return err(format!(
                "{here}: index ({i},{j}) out of range for shape ({rows},{cols})"
            ));
        }
        if let Some(p) = prev {
            if (*i, *j) <= p {
                return err(format!(
                    "{here}: entries must be strictly increasing in (row,col)"
                ));
            }
        }
        prev = Some((*i, *j));
        let r = parse_canonical_rat(val, &here)?;
        if r.is_zero() {
            return err(format!("{here}: zero entries must be omitted"));
        }
        *m.at_mut(*i, *j) = r;
    }
    Ok(m)
}

fn required_dim(fx: &Fixture, key: &str) -> Result<usize, FormatError> {
    fx.dims.get(key).copied().ok_or_else(|| FormatError {
        message: format!("dims: missing key {key:?}"),
    })
}

fn require_table_keys(fx: &Fixture, keys: &[&str]) -> Result<(), FormatError> {
    let found: Vec<&str> = fx.tables.keys().map(String::as_str).collect();
    if found != keys {
        return err(format!("tables: expected keys {keys:?}, found {found:?}"));
    }
    Ok(())
}

fn check_dim_keys(fx: &Fixture, keys: &[&str]) -> Result<(), FormatError> {
    let found: Vec<&str> = fx.dims.keys().map(String::as_str).collect();
    if found != keys {
        return err(format!("dims: expected keys {keys:?}, found {found:?}"));
    }
    Ok(())
}

fn check_basis_labels(fx: &Fixture, sizes: &[(&str, usize)]) -> Result<(), FormatError> {
    for (key, labels) in &fx.basis {
        match sizes.iter().find(|(k, _)| k == key) {
            None => return err(format!("basis: unknown space {key:?}")),
            Some((_, want)) => {
                if labels.len() != *want {
                    return err(format!(
                        "basis.{key}: expected {want} labels, found {}",
                        labels.len()
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_subspaces(fx: &Fixture, ambient: usize) -> Result<(), FormatError> {
    for (name, rows) in &fx.subspaces {
        for (n, row) in rows.iter().enumerate() {
            parse_vector(row, ambient, &format!("subspaces.{name}[{n}]"))?;
        }
    }
    Ok(())
}

impl Fixture {
    /// Full shape validation followed by conversion into core objects.
    pub fn load(&self) -> Result<Loaded, FormatError> {
        match self.kind.as_str() {
            "comm_alg" => {
                check_dim_keys(self, &["a"])?;
                let n = required_dim(self, "a")?;
                if n == 0 {
                    return err("dims.a: a unital algebra needs dimension >= 1");
                }
                require_table_keys(self, &["mul"])?;
                let unit = match &self.unit {
                    None => return err("unit: required for comm_alg"),
                    Some(u) => parse_vector(u, n, "unit")?,
                };
                if self.partial.is_some() {
                    return err("partial: not allowed for comm_alg");
                }
                check_basis_labels(self, &[("a", n)])?;
                check_subspaces(self, n)?;
                let mul = parse_table(&self.tables["mul"], (n, n, n), "tables.mul")?;
                Ok(Loaded::CommAlg(CommAlg::new(n, unit, mul)))
            }
            "leibniz" => {
                check_dim_keys(self, &["dim"])?;
                let n = required_dim(self, "dim")?;
                require_table_keys(self, &["brk"])?;
                if self.unit.is_some() {
                    return err("unit: not allowed for leibniz");
                }
                if self.partial.is_some() {
                    return err("partial: not allowed for leibniz");
                }
                check_basis_labels(self, &[("dim", n)])?;
                check_subspaces(self, n)?;
                let brk = parse_table(&self.tables["brk"], (n, n, n), "tables.brk")?;
                Ok(Loaded::Leibniz(LeibnizAlg::new(n, brk)))
            }
            "tca" => {
                check_dim_keys(self, &["c0", "c1"])?;
                let d0 = required_dim(self, "c0")?;
                let d1 = required_dim(self, "c1")?;
                require_table_keys(self, &["act0", "brk0", "pair1"])?;
                if self.unit.is_some() {
                    return err("unit: not allowed for tca");
                }
                let Some(partial) = &self.partial else {
                    return err("partial: required for tca (may be empty)");
                };
                check_basis_labels(self, &[("c0", d0), ("c1", d1)])?;
                check_subspaces(self, d1)?;
                let act0 = parse_table(&self.tables["act0"], (d1, d0, d0), "tables.act0")?;
                let brk0 = parse_table(&self.tables["brk0"], (d1, d1, d1), "tables.brk0")?;
                let pair1 = parse_table(&self.tables["pair1"], (d1, d1, d0), "tables.pair1")?;
                let partial = parse_partial(partial, d1, d0)?;
                Ok(Loaded::Tca(Tca::new(d0, d1, partial, act0, brk0, pair1)))
            }
            "vertex_algebroid" => {
                check_dim_keys(self, &["a", "gamma"])?;
                let n = required_dim(self, "a")?;
                let g = required_dim(self, "gamma")?;
                if n == 0 {
                    return err("dims.a: a unital algebra needs dimension >= 1");
                }
                require_table_keys(self, &["act", "brk", "mact", "mul", "pair"])?;
                let unit = match &self.unit {
                    None => return err("unit: required for vertex_algebroid"),
                    Some(u) => parse_vector(u, n, "unit")?,
                };
                let Some(partial) = &self.partial else {
                    return err("partial: required for vertex_algebroid (may be empty)");
                };
                check_basis_labels(self, &[("a", n), ("gamma", g)])?;
                check_subspaces(self, g)?;
                let mul = parse_table(&self.tables["mul"], (n, n, n), "tables.mul")?;
                let mact = parse_table(&self.tables["mact"], (n, g, g), "tables.mact")?;
                let brk = parse_table(&self.tables["brk"], (g, g, g), "tables.brk")?;
                let pair = parse_table(&self.tables["pair"], (g, g, n), "tables.pair")?;
                let act = parse_table(&self.tables["act"], (g, n, n), "tables.act")?;
                let partial = parse_partial(partial, g, n)?;
                let a = CommAlg::new(n, unit, mul);
                Ok(Loaded::VertexAlgebroid(VertexAlgebroid::new(
                    a, g, mact, brk, pair, act, partial,
                )))
            }
            other => err(format!("kind: unknown fixture kind {other:?}")),
        }
    }

    /// A named subspace from the `subspaces` map as raw ordered rows.
    pub fn subspace_rows(
        &self,
        name: &str,
        ambient: usize,
    ) -> Result<Option<RatMatrix>, FormatError> {
        let Some(rows) = self.subspaces.get(name) else {
            return Ok(None);
        };
        let parsed: Result<Vec<Vec<Rat>>, _> = rows
            .iter()
            .enumerate()
            .map(|(n, row)| parse_vector(row, ambient, &format!("subspaces.{name}[{n}]")))
            .collect();
        Ok(Some(RatMatrix::from_rows(parsed?)))
    }

    /// Canonical serialization: pretty JSON plus a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixture serializes");
        s.push('\n');
        s
    }
}

fn table_entries(t: &Trilinear) -> Vec<SparseEntry> {
    t.entries()
        .map(|(i, j, k, v)| SparseEntry(i, j, k, v.to_string()))
        .collect()
}

fn matrix_entries(m: &RatMatrix) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.at(i, j);
            if !v.is_zero() {
                out.push(MatrixEntry(i, j, v.to_string()));
            }
        }
    }
    out
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(Rat::to_string).collect()
}

/// Fixture document for a vertex algebroid, including basis labels and a
/// designated subspace per entry of `subspaces`.
pub fn from_vertex_algebroid(
    name: &str,
    b: &VertexAlgebroid,
    basis: BTreeMap<String, Vec<String>>,
    subspaces: BTreeMap<String, Vec<Vec<String>>>,
) -> Fixture {
    let mut dims = BTreeMap::new();
    dims.insert("a".to_string(), b.adim());
    dims.insert("gamma".to_string(), b.gdim());
    let mut tables = BTreeMap::new();
    tables.insert("mul".to_string(), table_entries(b.algebra().table()));
    tables.insert("mact".to_string(), table_entries(b.mact_table()));
    tables.insert("brk".to_string(), table_entries(b.brk_table()));
    tables.insert("pair".to_string(), table_entries(b.pair_table()));
    tables.insert("act".to_string(), table_entries(b.act_table()));
    Fixture {
        kind: "vertex_algebroid".to_string(),
        name: name.to_string(),
        dims,
        basis,
        unit: Some(strings(b.algebra().unit())),
        tables,
        partial: Some(matrix_entries(b.partial_matrix())),
        subspaces,
    }
}

pub fn from_comm_alg(name: &str, a: &CommAlg) -> Fixture {
    let mut dims = BTreeMap::new();
    dims.insert("a".to_string(), a.dim());
    let mut tables = BTreeMap::new();
    tables.insert("mul".to_string(), table_entries(a.table()));
    Fixture {
        kind: "comm_alg".to_string(),
        name: name.to_string(),
        dims,
        basis: BTreeMap::new(),
        unit: Some(strings(a.unit())),
        tables,
        partial: None,
        subspaces: BTreeMap::new(),
    }
}

pub fn from_leibniz(name: &str, l: &LeibnizAlg) -> Fixture {
    let mut dims = BTreeMap::new();
    dims.insert("dim".to_string(), l.dim());
    let mut tables = BTreeMap::new();
    tables.insert("brk".to_string(), table_entries(l.table()));
    Fixture {
        kind: "leibniz".to_string(),
        name: name.to_string(),
        dims,
        basis: BTreeMap::new(),
        unit: None,
        tables,
        partial: None,
        subspaces: BTreeMap::new(),
    }
}

pub fn from_tca(name: &str, t: &Tca) -> Fixture {
    let (d0, d1) = t.dims();
    let mut dims = BTreeMap::new();
    dims.insert("c0".to_string(), d0);
    dims.insert("c1".to_string(), d1);
    let mut tables = BTreeMap::new();
    tables.insert("act0".to_string(), table_entries(t.act0_table()));
    tables.insert("brk0".to_string(), table_entries(t.brk0_table()));
    tables.insert("pair1".to_string(), table_entries(t.pair1_table()));
    Fixture {
        kind: "tca".to_string(),
        name: name.to_string(),
        dims,
        basis: BTreeMap::new(),
        unit: None,
        tables,
        partial: Some(matrix_entries(t.partial())),
        subspaces: BTreeMap::new(),
    }
}

/// The classified family as a fixture, with basis labels and the canonical
/// Levi candidate rows.
pub fn family_fixture(l: usize) -> Result<Fixture, FormatError> {
    let spec = algebroids::FamilySpec::new(l).map_err(|e| FormatError {
        message: e.to_string(),
    })?;
    let b = spec.build();
    let mut a_labels = vec!["1".to_string()];
    let mut g_labels = vec!["e".to_string(), "f".to_string(), "h".to_string()];
    for j in 1..=l {
        for i in 0..2 {
            a_labels.push(format!("a{j}_{i}"));
            g_labels.push(format!("da{j}_{i}"));
        }
    }
    let mut basis = BTreeMap::new();
    basis.insert("a".to_string(), a_labels);
    basis.insert("gamma".to_string(), g_labels);
    let g = spec.gdim();
    let levi: Vec<Vec<String>> = (0..3).map(|i| strings(&basis_vec(g, i))).collect();
    let mut subspaces = BTreeMap::new();
    subspaces.insert("levi".to_string(), levi);
    Ok(from_vertex_algebroid(
        &format!("sl2-vertex-algebroid-l{l}"),
        &b,
        basis,
        subspaces,
    ))
}

/// Helper for rendering a computed subspace in reports.
pub fn subspace_rows_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_rows().iter().map(|r| strings(r)).collect()
}
