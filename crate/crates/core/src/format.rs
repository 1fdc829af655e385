//! The structured text format for algebras, Hopf algebras, Ore data,
//! actions and search grids.
//!
//! The format is line-oriented: named sections with `key: value` lines and
//! indented sparse blocks whose entries read `i j k -> scalar`. Rendering is
//! canonical (sorted entries, canonical scalar strings), so documents
//! round-trip exactly and diffs stay readable.

use crate::algebra::{AlgElement, FinAlgebra, SparseVec};
use crate::hopf::{CoproductEntry, FinHopf};
use crate::linalg::Matrix;
use crate::ore::HopfOreDatum;
use crate::paction::{ActionHost, PartialActionMap};
use crate::scalar::Scalar;
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown reference `{0}`")]
    UnknownReference(String),
    #[error("section `{0}`: {1}")]
    Invalid(String, String),
}

fn perr(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraData {
    pub labels: Vec<String>,
    pub unit: Vec<Scalar>,
    /// entries (i, j, k, c): e_i e_j contains c e_k
    pub mult: Vec<(usize, usize, usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    /// entries (i, j, k, c): Delta(e_i) contains c e_j (x) e_k
    pub coproduct: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    /// entries (i, j, c): S(e_j) contains c e_i
    pub antipode: Vec<(usize, usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OreData {
    pub base: String,
    pub g_label: String,
    pub var: String,
    pub sigma: Vec<(usize, usize, Scalar)>,
    pub delta: Vec<(usize, usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActionData {
    pub hopf: String,
    pub target: String,
    /// per host-basis label, sparse matrix entries (i, j, c)
    pub matrices: Vec<(String, Vec<(usize, usize, Scalar)>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridData {
    pub pool: Vec<Scalar>,
}

/// A rank-one datum (G, chi, g, beta): the group by its multiplication
/// table, the character values, the distinguished central element and the
/// nilpotency flag.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOneData {
    pub labels: Vec<String>,
    /// entries (i, j, k): g_i g_j = g_k
    pub table: Vec<(usize, usize, usize)>,
    pub chi: Vec<Scalar>,
    pub g_label: String,
    pub beta: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SectionData {
    Algebra(AlgebraData),
    Hopf(HopfData),
    Ore(OreData),
    Action(ActionData),
    Grid(GridData),
    RankOne(RankOneData),
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Document {
    pub sections: Vec<(String, SectionData)>,
}

// ---------------------------------------------------------------- parsing

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
    peeked: Option<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            iter: text.lines().enumerate(),
            peeked: None,
        }
    }

    /// Next non-empty, non-comment line as (1-based number, trimmed text).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        if let Some(p) = self.peeked.take() {
            return Some(p);
        }
        for (n, raw) in self.iter.by_ref() {
            let line = match raw.split_once('#') {
                Some((before, _)) => before,
                None => raw,
            }
            .trim();
            if !line.is_empty() {
                return Some((n + 1, line));
            }
        }
        None
    }

    fn push_back(&mut self, item: (usize, &'a str)) {
        self.peeked = Some(item);
    }
}

fn parse_scalar(line: usize, s: &str) -> Result<Scalar, FormatError> {
    s.parse::<Scalar>().map_err(|e| perr(line, e.to_string()))
}

fn parse_scalar_list(line: usize, s: &str) -> Result<Vec<Scalar>, FormatError> {
    s.split_whitespace()
        .map(|t| parse_scalar(line, t))
        .collect()
}

/// Parse a `{ ... }` block of sparse entries with `n` leading indices.
fn parse_sparse_block(
    lines: &mut Lines,
    n: usize,
) -> Result<Vec<(Vec<usize>, Scalar)>, FormatError> {
    let mut out = Vec::new();
    loop {
        let Some((ln, text)) = lines.next() else {
            return Err(perr(0, "unexpected end of file inside a block"));
        };
        if text == "}" {
            return Ok(out);
        }
        let (idx_part, val_part) = text
            .split_once("->")
            .ok_or_else(|| perr(ln, "expected `indices -> scalar`"))?;
        let indices: Vec<usize> = idx_part
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| perr(ln, format!("bad index `{t}`"))))
            .collect::<Result<_, _>>()?;
        if indices.len() != n {
            return Err(perr(
                ln,
                format!("expected {n} indices, found {}", indices.len()),
            ));
        }
        let value = parse_scalar(ln, val_part.trim())?;
        out.push((indices, value));
    }
}

fn expect_kv<'a>(lines: &mut Lines<'a>, key: &str) -> Result<(usize, &'a str), FormatError> {
    let Some((ln, text)) = lines.next() else {
        return Err(perr(0, format!("expected `{key}: ...`, found end of file")));
    };
    let Some(rest) = text.strip_prefix(key).and_then(|r| r.strip_prefix(':')) else {
        return Err(perr(ln, format!("expected `{key}: ...`, found `{text}`")));
    };
    Ok((ln, rest.trim()))
}

fn parse_algebra_body(lines: &mut Lines) -> Result<AlgebraData, FormatError> {
    let (ln, dim_s) = expect_kv(lines, "dim")?;
    let dim: usize = dim_s.parse().map_err(|_| perr(ln, "bad dimension"))?;
    let (ln, labels_s) = expect_kv(lines, "labels")?;
    let labels: Vec<String> = labels_s.split_whitespace().map(str::to_string).collect();
    if labels.len() != dim {
        return Err(perr(
            ln,
            format!("expected {dim} labels, found {}", labels.len()),
        ));
    }
    let (ln, unit_s) = expect_kv(lines, "unit")?;
    let unit = parse_scalar_list(ln, unit_s)?;
    if unit.len() != dim {
        return Err(perr(ln, format!("expected {dim} unit coefficients")));
    }
    let Some((ln, text)) = lines.next() else {
        return Err(perr(0, "expected `mult {`"));
    };
    if text != "mult {" {
        return Err(perr(ln, format!("expected `mult {{`, found `{text}`")));
    }
    let entries = parse_sparse_block(lines, 3)?;
    let mut mult = Vec::with_capacity(entries.len());
    for (idx, c) in entries {
        if idx.iter().any(|&i| i >= dim) {
            return Err(perr(ln, "mult index out of range"));
        }
        mult.push((idx[0], idx[1], idx[2], c));
    }
    Ok(AlgebraData { labels, unit, mult })
}

fn parse_matrix_block(
    lines: &mut Lines,
    dim_bound: Option<usize>,
) -> Result<Vec<(usize, usize, Scalar)>, FormatError> {
    let entries = parse_sparse_block(lines, 2)?;
    let mut out = Vec::with_capacity(entries.len());
    for (idx, c) in entries {
        if let Some(d) = dim_bound {
            if idx[0] >= d || idx[1] >= d {
                return Err(perr(0, "matrix index out of range"));
            }
        }
        out.push((idx[0], idx[1], c));
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut lines = Lines::new(text);
    let mut doc = Document::default();
    while let Some((ln, header)) = lines.next() {
        let mut parts = header.split_whitespace();
        let kind = parts.next().unwrap_or_default();
        let name = parts
            .next()
            .ok_or_else(|| perr(ln, "section header needs a name"))?
            .to_string();
        if parts.next() != Some("{") {
            return Err(perr(ln, "section header must end with `{`"));
        }
        let data = match kind {
            "algebra" => {
                let body = parse_algebra_body(&mut lines)?;
                expect_close(&mut lines)?;
                SectionData::Algebra(body)
            }
            "hopf" => {
                let algebra = parse_algebra_body(&mut lines)?;
                let dim = algebra.labels.len();
                let Some((ln2, t)) = lines.next() else {
                    return Err(perr(ln, "expected `coproduct {`"));
                };
                if t != "coproduct {" {
                    return Err(perr(ln2, format!("expected `coproduct {{`, found `{t}`")));
                }
                let cop = parse_sparse_block(&mut lines, 3)?;
                let coproduct = cop
                    .into_iter()
                    .map(|(idx, c)| (idx[0], idx[1], idx[2], c))
                    .collect();
                let (ln3, counit_s) = expect_kv(&mut lines, "counit")?;
                let counit = parse_scalar_list(ln3, counit_s)?;
                if counit.len() != dim {
                    return Err(perr(ln3, format!("expected {dim} counit values")));
                }
                let Some((ln4, t)) = lines.next() else {
                    return Err(perr(ln, "expected `antipode {`"));
                };
                if t != "antipode {" {
                    return Err(perr(ln4, format!("expected `antipode {{`, found `{t}`")));
                }
                let antipode = parse_matrix_block(&mut lines, Some(dim))?;
                expect_close(&mut lines)?;
                SectionData::Hopf(HopfData {
                    algebra,
                    coproduct,
                    counit,
                    antipode,
                })
            }
            "ore" => {
                let (_, base) = expect_kv(&mut lines, "base")?;
                let (_, g_label) = expect_kv(&mut lines, "g")?;
                let (_, var) = expect_kv(&mut lines, "var")?;
                let Some((ln2, t)) = lines.next() else {
                    return Err(perr(ln, "expected `sigma {`"));
                };
                if t != "sigma {" {
                    return Err(perr(ln2, format!("expected `sigma {{`, found `{t}`")));
                }
                let sigma = parse_matrix_block(&mut lines, None)?;
                let Some((ln3, t)) = lines.next() else {
                    return Err(perr(ln, "expected `delta {`"));
                };
                if t != "delta {" {
                    return Err(perr(ln3, format!("expected `delta {{`, found `{t}`")));
                }
                let delta = parse_matrix_block(&mut lines, None)?;
                expect_close(&mut lines)?;
                SectionData::Ore(OreData {
                    base: base.to_string(),
                    g_label: g_label.to_string(),
                    var: var.to_string(),
                    sigma,
                    delta,
                })
            }
            "action" => {
                let (_, hopf) = expect_kv(&mut lines, "hopf")?;
                let (_, target) = expect_kv(&mut lines, "target")?;
                let mut matrices = Vec::new();
                loop {
                    let Some((ln2, t)) = lines.next() else {
                        return Err(perr(ln, "unterminated action section"));
                    };
                    if t == "}" {
                        lines.push_back((ln2, t));
                        break;
                    }
                    let label = t
                        .strip_prefix("matrix ")
                        .and_then(|r| r.strip_suffix('{'))
                        .map(str::trim)
                        .ok_or_else(|| {
                            perr(ln2, format!("expected `matrix <label> {{`, found `{t}`"))
                        })?;
                    let entries = parse_matrix_block(&mut lines, None)?;
                    matrices.push((label.to_string(), entries));
                }
                expect_close(&mut lines)?;
                SectionData::Action(ActionData {
                    hopf: hopf.to_string(),
                    target: target.to_string(),
                    matrices,
                })
            }
            "grid" => {
                let (ln2, pool_s) = expect_kv(&mut lines, "pool")?;
                let pool = parse_scalar_list(ln2, pool_s)?;
                expect_close(&mut lines)?;
                SectionData::Grid(GridData { pool })
            }
            "rankone" => {
                let (_, labels_s) = expect_kv(&mut lines, "labels")?;
                let labels: Vec<String> = labels_s.split_whitespace().map(str::to_string).collect();
                let Some((ln2, t)) = lines.next() else {
                    return Err(perr(ln, "expected `table {`"));
                };
                if t != "table {" {
                    return Err(perr(ln2, format!("expected `table {{`, found `{t}`")));
                }
                let mut table = Vec::new();
                loop {
                    let Some((ln3, text)) = lines.next() else {
                        return Err(perr(ln, "unterminated table block"));
                    };
                    if text == "}" {
                        break;
                    }
                    let (idx_part, val_part) = text
                        .split_once("->")
                        .ok_or_else(|| perr(ln3, "expected `i j -> k`"))?;
                    let idx: Vec<usize> = idx_part
                        .split_whitespace()
                        .map(|v| v.parse().map_err(|_| perr(ln3, "bad index")))
                        .collect::<Result<_, _>>()?;
                    if idx.len() != 2 {
                        return Err(perr(ln3, "expected two indices"));
                    }
                    let k: usize = val_part
                        .trim()
                        .parse()
                        .map_err(|_| perr(ln3, "bad product index"))?;
                    table.push((idx[0], idx[1], k));
                }
                let (ln4, chi_s) = expect_kv(&mut lines, "chi")?;
                let chi = parse_scalar_list(ln4, chi_s)?;
                let (_, g_label) = expect_kv(&mut lines, "g")?;
                let (ln5, beta_s) = expect_kv(&mut lines, "beta")?;
                let beta = match beta_s {
                    "0" => false,
                    "1" => true,
                    _ => return Err(perr(ln5, "beta must be 0 or 1")),
                };
                expect_close(&mut lines)?;
                SectionData::RankOne(RankOneData {
                    labels,
                    table,
                    chi,
                    g_label: g_label.to_string(),
                    beta,
                })
            }
            other => return Err(perr(ln, format!("unknown section kind `{other}`"))),
        };
        doc.sections.push((name, data));
    }
    Ok(doc)
}

fn expect_close(lines: &mut Lines) -> Result<(), FormatError> {
    match lines.next() {
        Some((_, "}")) => Ok(()),
        Some((ln, t)) => Err(perr(ln, format!("expected `}}`, found `{t}`"))),
        None => Err(perr(0, "expected `}`, found end of file")),
    }
}

// -------------------------------------------------------------- rendering

fn render_sparse3(out: &mut String, name: &str, entries: &[(usize, usize, usize, Scalar)]) {
    let mut sorted: Vec<_> = entries.to_vec();
    sorted.sort_by_key(|(i, j, k, _)| (*i, *j, *k));
    let _ = writeln!(out, "  {name} {{");
    for (i, j, k, c) in sorted {
        let _ = writeln!(out, "    {i} {j} {k} -> {c}");
    }
    let _ = writeln!(out, "  }}");
}

fn render_sparse2(out: &mut String, name: &str, entries: &[(usize, usize, Scalar)], indent: &str) {
    let mut sorted: Vec<_> = entries.to_vec();
    sorted.sort_by_key(|(i, j, _)| (*i, *j));
    let _ = writeln!(out, "{indent}{name} {{");
    for (i, j, c) in sorted {
        let _ = writeln!(out, "{indent}  {i} {j} -> {c}");
    }
    let _ = writeln!(out, "{indent}}}");
}

fn render_algebra_body(out: &mut String, data: &AlgebraData) {
    let _ = writeln!(out, "  dim: {}", data.labels.len());
    let _ = writeln!(out, "  labels: {}", data.labels.join(" "));
    let unit: Vec<String> = data.unit.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "  unit: {}", unit.join(" "));
    render_sparse3(out, "mult", &data.mult);
}

pub fn render_document(doc: &Document) -> String {
    let mut out = String::new();
    for (name, data) in &doc.sections {
        match data {
            SectionData::Algebra(a) => {
                let _ = writeln!(out, "algebra {name} {{");
                render_algebra_body(&mut out, a);
                let _ = writeln!(out, "}}");
            }
            SectionData::Hopf(h) => {
                let _ = writeln!(out, "hopf {name} {{");
                render_algebra_body(&mut out, &h.algebra);
                render_sparse3(&mut out, "coproduct", &h.coproduct);
                let counit: Vec<String> = h.counit.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "  counit: {}", counit.join(" "));
                render_sparse2(&mut out, "antipode", &h.antipode, "  ");
                let _ = writeln!(out, "}}");
            }
            SectionData::Ore(o) => {
                let _ = writeln!(out, "ore {name} {{");
                let _ = writeln!(out, "  base: {}", o.base);
                let _ = writeln!(out, "  g: {}", o.g_label);
                let _ = writeln!(out, "  var: {}", o.var);
                render_sparse2(&mut out, "sigma", &o.sigma, "  ");
                render_sparse2(&mut out, "delta", &o.delta, "  ");
                let _ = writeln!(out, "}}");
            }
            SectionData::Action(a) => {
                let _ = writeln!(out, "action {name} {{");
                let _ = writeln!(out, "  hopf: {}", a.hopf);
                let _ = writeln!(out, "  target: {}", a.target);
                for (label, entries) in &a.matrices {
                    render_sparse2(&mut out, &format!("matrix {label}"), entries, "  ");
                }
                let _ = writeln!(out, "}}");
            }
            SectionData::Grid(g) => {
                let _ = writeln!(out, "grid {name} {{");
                let pool: Vec<String> = g.pool.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "  pool: {}", pool.join(" "));
                let _ = writeln!(out, "}}");
            }
            SectionData::RankOne(r) => {
                let _ = writeln!(out, "rankone {name} {{");
                let _ = writeln!(out, "  labels: {}", r.labels.join(" "));
                let mut sorted = r.table.clone();
                sorted.sort_unstable();
                let _ = writeln!(out, "  table {{");
                for (i, j, k) in sorted {
                    let _ = writeln!(out, "    {i} {j} -> {k}");
                }
                let _ = writeln!(out, "  }}");
                let chi: Vec<String> = r.chi.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "  chi: {}", chi.join(" "));
                let _ = writeln!(out, "  g: {}", r.g_label);
                let _ = writeln!(out, "  beta: {}", if r.beta { 1 } else { 0 });
                let _ = writeln!(out, "}}");
            }
        }
        let _ = writeln!(out);
    }
    out
}

// ------------------------------------------------------------- resolution

impl AlgebraData {
    pub fn to_algebra(&self) -> FinAlgebra {
        let dim = self.labels.len();
        let mut mult = vec![vec![SparseVec::new(); dim]; dim];
        for (i, j, k, c) in &self.mult {
            mult[*i][*j].push((*k, c.clone()));
        }
        FinAlgebra::new(self.labels.clone(), mult, self.unit.clone())
    }

    pub fn from_algebra(alg: &FinAlgebra) -> AlgebraData {
        let mut mult = Vec::new();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for (k, c) in alg.basis_product(i, j) {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        AlgebraData {
            labels: alg.labels().to_vec(),
            unit: alg.unit_coeffs().to_vec(),
            mult,
        }
    }
}

impl HopfData {
    pub fn to_hopf(&self) -> FinHopf {
        let alg = self.algebra.to_algebra();
        let dim = alg.dim();
        let mut coproduct: Vec<Vec<CoproductEntry>> = vec![Vec::new(); dim];
        for (i, j, k, c) in &self.coproduct {
            coproduct[*i].push((c.clone(), *j, *k));
        }
        let mut antipode = Matrix::zeros(dim, dim);
        for (i, j, c) in &self.antipode {
            antipode.set(*i, *j, c.clone());
        }
        FinHopf::new(alg, coproduct, self.counit.clone(), antipode)
    }

    pub fn from_hopf(h: &FinHopf) -> HopfData {
        let dim = h.dim();
        let mut coproduct = Vec::new();
        for i in 0..dim {
            for (c, j, k) in h.coproduct_entries(i) {
                coproduct.push((i, *j, *k, c.clone()));
            }
        }
        let mut antipode = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let c = h.antipode_matrix().get(i, j);
                if !c.is_zero() {
                    antipode.push((i, j, c.clone()));
                }
            }
        }
        HopfData {
            algebra: AlgebraData::from_algebra(h.alg()),
            coproduct,
            counit: (0..dim).map(|i| h.counit_value(i).clone()).collect(),
            antipode,
        }
    }
}

impl Document {
    pub fn find(&self, name: &str) -> Option<&SectionData> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
    }

    pub fn algebra(&self, name: &str) -> Result<FinAlgebra, FormatError> {
        match self.find(name) {
            Some(SectionData::Algebra(a)) => Ok(a.to_algebra()),
            Some(SectionData::Hopf(h)) => Ok(h.algebra.to_algebra()),
            _ => Err(FormatError::UnknownReference(name.to_string())),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<FinHopf, FormatError> {
        match self.find(name) {
            Some(SectionData::Hopf(h)) => Ok(h.to_hopf()),
            _ => Err(FormatError::UnknownReference(name.to_string())),
        }
    }

    pub fn ore_datum(&self, name: &str) -> Result<HopfOreDatum, FormatError> {
        let Some(SectionData::Ore(o)) = self.find(name) else {
            return Err(FormatError::UnknownReference(name.to_string()));
        };
        let base = self.hopf(&o.base)?;
        let dim = base.dim();
        let g_index = base.alg().label_index(&o.g_label).ok_or_else(|| {
            FormatError::Invalid(name.into(), format!("no basis label `{}`", o.g_label))
        })?;
        let mut sigma = Matrix::zeros(dim, dim);
        for (i, j, c) in &o.sigma {
            if *i >= dim || *j >= dim {
                return Err(FormatError::Invalid(
                    name.into(),
                    "sigma index out of range".into(),
                ));
            }
            sigma.set(*i, *j, c.clone());
        }
        let mut delta = Matrix::zeros(dim, dim);
        for (i, j, c) in &o.delta {
            if *i >= dim || *j >= dim {
                return Err(FormatError::Invalid(
                    name.into(),
                    "delta index out of range".into(),
                ));
            }
            delta.set(*i, *j, c.clone());
        }
        HopfOreDatum::new(Arc::new(base), sigma, delta, g_index, &o.var)
            .map_err(|e| FormatError::Invalid(name.into(), e.to_string()))
    }

    pub fn action(&self, name: &str) -> Result<PartialActionMap, FormatError> {
        let Some(SectionData::Action(a)) = self.find(name) else {
            return Err(FormatError::UnknownReference(name.to_string()));
        };
        let hopf = Arc::new(self.hopf(&a.hopf)?);
        let target = Arc::new(self.algebra(&a.target)?);
        let rdim = target.dim();
        let mut mats = vec![Matrix::zeros(rdim, rdim); hopf.dim()];
        for (label, entries) in &a.matrices {
            let idx = hopf.alg().label_index(label).ok_or_else(|| {
                FormatError::Invalid(name.into(), format!("no basis label `{label}`"))
            })?;
            let mut m = Matrix::zeros(rdim, rdim);
            for (i, j, c) in entries {
                if *i >= rdim || *j >= rdim {
                    return Err(FormatError::Invalid(
                        name.into(),
                        "matrix index out of range".into(),
                    ));
                }
                m.set(*i, *j, c.clone());
            }
            mats[idx] = m;
        }
        Ok(PartialActionMap::new(ActionHost::Hopf(hopf), target, mats))
    }

    pub fn rank_one_datum(&self, name: &str) -> Result<crate::families::RankOneDatum, FormatError> {
        let Some(SectionData::RankOne(r)) = self.find(name) else {
            return Err(FormatError::UnknownReference(name.to_string()));
        };
        let n = r.labels.len();
        let mut table = vec![vec![usize::MAX; n]; n];
        for (i, j, k) in &r.table {
            if *i >= n || *j >= n || *k >= n {
                return Err(FormatError::Invalid(
                    name.into(),
                    "table index out of range".into(),
                ));
            }
            table[*i][*j] = *k;
        }
        if table.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(FormatError::Invalid(
                name.into(),
                "incomplete group table".into(),
            ));
        }
        let g = r
            .labels
            .iter()
            .position(|l| l == &r.g_label)
            .ok_or_else(|| {
                FormatError::Invalid(name.into(), format!("no label `{}`", r.g_label))
            })?;
        if r.chi.len() != n {
            return Err(FormatError::Invalid(
                name.into(),
                "chi has the wrong length".into(),
            ));
        }
        Ok(crate::families::RankOneDatum {
            group: crate::families::GroupTable {
                labels: r.labels.clone(),
                table,
            },
            chi: r.chi.clone(),
            g,
            beta: r.beta,
        })
    }

    pub fn grid(&self, name: &str) -> Result<crate::oracle::SearchGrid, FormatError> {
        match self.find(name) {
            Some(SectionData::Grid(g)) => Ok(crate::oracle::SearchGrid::new(g.pool.clone())),
            _ => Err(FormatError::UnknownReference(name.to_string())),
        }
    }

    /// First section of each kind, for commands that take a single fixture.
    pub fn first_action_name(&self) -> Option<&str> {
        self.sections
            .iter()
            .find_map(|(n, d)| matches!(d, SectionData::Action(_)).then_some(n.as_str()))
    }

    pub fn first_ore_name(&self) -> Option<&str> {
        self.sections
            .iter()
            .find_map(|(n, d)| matches!(d, SectionData::Ore(_)).then_some(n.as_str()))
    }

    pub fn action_matrices_from(pa: &PartialActionMap, host_labels: &[String]) -> ActionData {
        let mut matrices = Vec::new();
        for (idx, label) in host_labels.iter().enumerate() {
            let m = pa.matrix(idx);
            let mut entries = Vec::new();
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m.get(i, j).is_zero() {
                        entries.push((i, j, m.get(i, j).clone()));
                    }
                }
            }
            matrices.push((label.clone(), entries));
        }
        ActionData {
            hopf: String::new(),
            target: String::new(),
            matrices,
        }
    }
}

/// Convenience: element rendered against basis labels, e.g. for reports.
pub fn render_element(labels: &[String], v: &AlgElement) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.coeffs.iter().enumerate() {
        if !c.is_zero() {
            if c.is_one() {
                parts.push(labels[i].clone());
            } else {
                parts.push(format!("({})*{}", c, labels[i]));
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{sweedler, sweedler_partial_action};

    #[test]
    fn documents_round_trip() {
        let h = sweedler();
        let target = FinAlgebra::matrix_algebra(2);
        let mut omega = AlgElement::zero(4);
        omega.coeffs[1] = Scalar::one();
        let pa = sweedler_partial_action(Arc::new(target.clone()), &omega).unwrap();
        let mut action = Document::action_matrices_from(&pa, &h.alg().labels().to_vec());
        action.hopf = "H4".into();
        action.target = "R".into();

        let doc = Document {
            sections: vec![
                ("H4".into(), SectionData::Hopf(HopfData::from_hopf(&h))),
                (
                    "R".into(),
                    SectionData::Algebra(AlgebraData::from_algebra(&target)),
                ),
                ("sw".into(), SectionData::Action(action)),
                (
                    "pool".into(),
                    SectionData::Grid(GridData {
                        pool: vec![Scalar::zero(), Scalar::one(), Scalar::from_int(-1)],
                    }),
                ),
            ],
        };
        let text = render_document(&doc);
        let parsed = parse_document(&text).unwrap();
        assert_eq!(parsed, doc);
        // and rendering is a fixed point
        assert_eq!(render_document(&parsed), text);

        // resolution produces working objects
        assert!(parsed.hopf("H4").unwrap().validate().passed());
        let pa2 = parsed.action("sw").unwrap();
        assert_eq!(pa2.matrices(), pa.matrices());
        assert_eq!(parsed.grid("pool").unwrap().pool().len(), 3);
    }

    #[test]
    fn ore_sections_resolve() {
        let h = sweedler();
        let doc = Document {
            sections: vec![
                ("H4".into(), SectionData::Hopf(HopfData::from_hopf(&h))),
                (
                    "H4y".into(),
                    SectionData::Ore(OreData {
                        base: "H4".into(),
                        g_label: "g".into(),
                        var: "y".into(),
                        sigma: vec![
                            (0, 0, Scalar::one()),
                            (1, 1, Scalar::from_int(-1)),
                            (2, 2, Scalar::from_int(-1)),
                            (3, 3, Scalar::one()),
                        ],
                        delta: vec![],
                    }),
                ),
            ],
        };
        let text = render_document(&doc);
        let parsed = parse_document(&text).unwrap();
        let datum = parsed.ore_datum("H4y").unwrap();
        assert_eq!(datum.q(), &Scalar::from_int(-1));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text =
            "algebra A {\n  dim: 2\n  labels: a b\n  unit: 1 0\n  mult {\n    0 0 -> 1\n  }\n}\n";
        let err = parse_document(text).unwrap_err();
        match err {
            FormatError::Parse { line, .. } => assert_eq!(line, 6),
            other => panic!("unexpected {other}"),
        }
        assert!(parse_document("bogus A {\n}\n").is_err());
    }
}
