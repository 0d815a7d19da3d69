//! The subalgebra tables as data, and a runner that re-derives every row.

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::algebra::{ad_rank, bracket, is_nilpotent_element, is_semisimple_element, AlgElement, DIM};
use crate::error::{G2Error, Result};
use crate::nilpotent::{classify_nilpotent, lemma5_branch, match_table10_schema, Lemma5Branch};
use crate::parse::{format_element, format_element_list, parse_element, parse_element_list, parse_rational};
use crate::regular::{classify_regular_types, counts_by_dimension, radical_and_levi, LType, RegularSpec};
use crate::reps::{
    decompose_under_sl2, dynkin_index, irreducible_weights, root_weights, verify_submodule, verify_triple,
    weight_multiplicities, Sl2Triple,
};
use crate::roots::{ClosedSubset, RootSet};
use crate::scalar::{FieldElement, Rational};
use crate::subspace::{
    contains_nonzero_semisimple, derived_series, is_regular_form, is_subalgebra, normalizer, positive_nilradical,
    span, Subspace,
};

const TABLES: &str = include_str!("../data/tables.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableId {
    T2,
    T3,
    T10,
    T20,
    T40,
    Prop1,
    Prop2,
    Witnesses,
}

impl TableId {
    pub const ALL: [TableId; 8] = [
        TableId::T2,
        TableId::T3,
        TableId::T10,
        TableId::T20,
        TableId::T40,
        TableId::Prop1,
        TableId::Prop2,
        TableId::Witnesses,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::T10 => "T10",
            TableId::T20 => "T20",
            TableId::T40 => "T40",
            TableId::Prop1 => "PROP1",
            TableId::Prop2 => "PROP2",
            TableId::Witnesses => "WITNESSES",
        }
    }

    /// Case-insensitive lookup by name.
    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for TableId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One line of the table file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub table: TableId,
    pub row: String,
    pub fields: Vec<(String, String)>,
    pub line: usize,
}

impl CatalogEntry {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_all(&self, key: &str) -> Vec<&str> {
        self.fields.iter().filter(|(k, _)| k == key).map(|(_, v)| v.as_str()).collect()
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| {
            G2Error::Catalog(format!("line {}: {}:{} has no `{key}`", self.line, self.table, self.row))
        })
    }

    fn require_int(&self, key: &str) -> Result<usize> {
        let v = self.require(key)?;
        v.parse()
            .map_err(|_| G2Error::Catalog(format!("line {}: `{key}` is not an integer: {v}", self.line)))
    }
}

fn split_outside_quotes(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut quoted = false;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == '"' {
            quoted = !quoted;
        } else if c == sep && !quoted {
            out.push(&s[start..i]);
            start = i + c.len_utf8();
        }
    }
    out.push(&s[start..]);
    out
}

fn unquote(v: &str) -> &str {
    let v = v.trim();
    v.strip_prefix('"').and_then(|w| w.strip_suffix('"')).unwrap_or(v)
}

/// Parses the `[TABLE:ROW] key = value ; ...` format; `#` starts a comment line.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let err = |msg: &str| G2Error::Catalog(format!("line {line}: {msg}"));
        let rest = t.strip_prefix('[').ok_or_else(|| err("expected `[`"))?;
        let (head, body) = rest.split_once(']').ok_or_else(|| err("expected `]`"))?;
        let (table, row) = head.split_once(':').ok_or_else(|| err("expected TABLE:ROW"))?;
        let table = TableId::parse(table).ok_or_else(|| err(&format!("unknown table {table}")))?;
        if row.is_empty() {
            return Err(err("empty row id"));
        }
        if body.matches('"').count() % 2 != 0 {
            return Err(err("unbalanced quote"));
        }
        let mut fields = Vec::new();
        for part in split_outside_quotes(body, ';') {
            if part.trim().is_empty() {
                continue;
            }
            let (k, v) = part.split_once('=').ok_or_else(|| err(&format!("expected key = value in `{}`", part.trim())))?;
            fields.push((k.trim().to_string(), unquote(v).to_string()));
        }
        out.push(CatalogEntry {
            table,
            row: row.to_string(),
            fields,
            line,
        });
    }
    Ok(out)
}

/// The shipped tables.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(TABLES).expect("shipped table file is well formed"))
}

pub fn entries(table: TableId) -> Vec<&'static CatalogEntry> {
    catalog().iter().filter(|e| e.table == table).collect()
}

pub fn entry(table: TableId, row: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.table == table && e.row == row)
}

/// Fields holding element expressions (or lists of them).
const EXPRESSION_KEYS: [&str; 15] = [
    "gens",
    "sub",
    "normalizer",
    "corrected_normalizer",
    "f",
    "e_plus",
    "e_minus",
    "rep",
    "cartan",
    "gamma",
    "levi",
    "triple",
    "lambda_term",
    "weight_vector",
    "weights_h",
];

/// Every element expression of an entry (summand generator lists included).
pub fn expressions(e: &CatalogEntry) -> Vec<String> {
    let mut out = Vec::new();
    for (k, v) in &e.fields {
        if EXPRESSION_KEYS.contains(&k.as_str()) {
            out.push(v.clone());
        } else if k == "summand" {
            if let Some(g) = v.split('|').nth(3) {
                out.push(g.trim().to_string());
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("PASS"),
            Status::Fail => f.write_str("FAIL"),
            Status::Skipped(r) => write!(f, "SKIPPED({r})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub table_id: TableId,
    pub row_id: String,
    pub check: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn record(&mut self, table: TableId, row: &str, check: &str, status: Status, details: impl Into<String>) {
        self.entries.push(ReportEntry {
            table_id: table,
            row_id: row.to_string(),
            check: check.to_string(),
            status,
            details: details.into(),
        });
    }

    pub fn check(&mut self, table: TableId, row: &str, check: &str, ok: bool, details: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.record(table, row, check, status, details);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.entries.iter().filter(|e| pred(&e.status)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|s| *s == Status::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(|s| *s == Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, Status::Skipped(_)))
    }

    /// No check failed (skips are allowed).
    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn for_row(&self, table: TableId, row: &str) -> Vec<&ReportEntry> {
        self.entries.iter().filter(|e| e.table_id == table && e.row_id == row).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!("{}:{} {} {}", e.table_id, e.row_id, e.check, e.status));
            if !e.details.is_empty() {
                s.push_str(&format!(" | {}", e.details));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "summary: pass={} fail={} skipped={}\n",
            self.passed(),
            self.failed(),
            self.skipped()
        ));
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            entries: &'a [ReportEntry],
            pass: usize,
            fail: usize,
            skipped: usize,
        }
        let doc = Doc {
            entries: &self.entries,
            pass: self.passed(),
            fail: self.failed(),
            skipped: self.skipped(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

/// Knobs for a verification run.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Replaces the stored λ samples of family rows.
    pub lambda: Option<Vec<Rational>>,
    /// Restricts PROP2 to one subalgebra label.
    pub subalgebra: Option<String>,
}

pub fn verify_table(table: TableId) -> VerificationReport {
    verify_table_with(table, &VerifyOptions::default())
}

pub fn verify_table_with(table: TableId, opts: &VerifyOptions) -> VerificationReport {
    match table {
        TableId::T2 => verify_t2(),
        TableId::T3 => verify_t3(opts),
        TableId::T10 => verify_t10(),
        TableId::T20 => verify_t20(),
        TableId::T40 => verify_t40(opts),
        TableId::Prop1 => verify_prop1(),
        TableId::Prop2 => verify_prop2(opts),
        TableId::Witnesses => crate::witnesses::conjugation_witnesses(),
    }
}

/// Every table, then the witnesses, then the round-trip check over the file.
pub fn verify_all(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::default();
    for t in TableId::ALL {
        r.extend(verify_table_with(t, opts));
    }
    r.extend(verify_round_trip());
    r
}

/// `(regular types, non-regular semisimple, non-regular solvable)`.
pub fn theorem1_counts() -> (usize, usize, usize) {
    let regular = classify_regular_types().len();
    let semisimple = entries(TableId::T2).iter().filter(|e| e.get("regular") != Some("true")).count();
    let solvable = entries(TableId::T3).len();
    (regular, semisimple, solvable)
}

/// Parse-then-print of every stored expression is byte-identical.
pub fn verify_round_trip() -> VerificationReport {
    let mut r = VerificationReport::default();
    for e in catalog() {
        for text in expressions(e) {
            let printed = parse_element_list(&text).map(|xs| format_element_list(&xs));
            let (ok, details) = match printed {
                Ok(p) if p == text => (true, text),
                Ok(p) => (false, format!("{text} printed as {p}")),
                Err(err) => (false, format!("{text}: {err}")),
            };
            r.check(e.table, &e.row, "round_trip", ok, details);
        }
    }
    r
}

fn fail(r: &mut VerificationReport, e: &CatalogEntry, check: &str, err: G2Error) {
    r.record(e.table, &e.row, check, Status::Fail, err.to_string());
}

fn parse_list(text: &str) -> Result<Vec<AlgElement>> {
    parse_element_list(text)
}

fn parse_span(text: &str) -> Result<Subspace> {
    Ok(span(&parse_list(text)?))
}

fn parse_lambdas(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(|s| parse_rational(s.trim())).collect()
}

fn lambda_label(l: &Rational) -> String {
    format!("lambda={l}")
}

/// The generator lists of an entry: one list, or one per λ sample for family rows.
fn instances(e: &CatalogEntry, key: &str, opts: &VerifyOptions) -> Result<Vec<(String, Vec<AlgElement>)>> {
    let base = parse_list(e.require(key)?)?;
    let Some(term) = e.get("lambda_term") else {
        return Ok(vec![(String::new(), base)]);
    };
    let term = parse_element(term)?;
    let i = e.require_int("lambda_gen")?;
    if i >= base.len() {
        return Err(G2Error::Catalog(format!("line {}: lambda_gen out of range", e.line)));
    }
    let samples = match &opts.lambda {
        Some(l) => l.clone(),
        None => parse_lambdas(e.require("lambda")?)?,
    };
    Ok(samples
        .iter()
        .map(|l| {
            let mut gens = base.clone();
            gens[i] = &gens[i] + &term.scale(&FieldElement::from_rational(l.clone()));
            (lambda_label(l), gens)
        })
        .collect())
}

fn suffixed(check: &str, tag: &str) -> String {
    if tag.is_empty() {
        check.to_string()
    } else {
        format!("{check}@{tag}")
    }
}

fn triple_from(f: &str, ep: &str, em: &str) -> Result<Sl2Triple> {
    Ok(Sl2Triple::new(parse_element(f)?, parse_element(ep)?, parse_element(em)?))
}

fn verify_t2() -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::T2;
    for e in entries(t) {
        let triple = match (|| triple_from(e.require("f")?, e.require("e_plus")?, e.require("e_minus")?))() {
            Ok(x) => x,
            Err(err) => {
                fail(&mut r, e, "parse", err);
                continue;
            }
        };
        let rel = verify_triple(&triple);
        r.check(t, &e.row, "triple_relations", rel.is_ok(), rel.err().unwrap_or_default());
        let s = triple.span();
        r.check(t, &e.row, "subalgebra", s.dim() == 3 && is_subalgebra(&s), format!("dim={}", s.dim()));
        match (dynkin_index(&triple), e.require_int("index")) {
            (Ok(idx), Ok(want)) => {
                r.check(t, &e.row, "dynkin_index", idx == Rational::from_integer(want.into()), format!("index={idx}"))
            }
            (Err(err), _) | (_, Err(err)) => fail(&mut r, e, "dynkin_index", err),
        }
        if e.get("regular") != Some("true") {
            r.check(t, &e.row, "not_regular_form", !is_regular_form(&s), "");
        }
    }
    let (_, semisimple, _) = theorem1_counts();
    r.check(t, "ALL", "non_regular_count", semisimple == 2, format!("count={semisimple}"));
    r
}

struct T3Expect {
    branch: String,
    cartan: Option<AlgElement>,
    gamma: Option<AlgElement>,
    t40: Option<String>,
}

fn t3_expect(e: &CatalogEntry) -> Result<T3Expect> {
    Ok(T3Expect {
        branch: e.require("branch")?.to_string(),
        cartan: e.get("cartan").map(parse_element).transpose()?,
        gamma: e.get("gamma").map(parse_element).transpose()?,
        t40: e.get("t40").map(str::to_string),
    })
}

fn verify_t3(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::T3;
    let mut seen: Vec<(String, Subspace)> = Vec::new();
    for e in entries(t) {
        let (insts, want) = match instances(e, "gens", opts).and_then(|i| Ok((i, t3_expect(e)?))) {
            Ok(x) => x,
            Err(err) => {
                fail(&mut r, e, "parse", err);
                continue;
            }
        };
        for (tag, gens) in insts {
            let s = span(&gens);
            let c = |name: &str| suffixed(name, &tag);
            r.check(
                t,
                &e.row,
                &c("subalgebra"),
                s.dim() == gens.len() && is_subalgebra(&s),
                format!("dim={}", s.dim()),
            );
            if !is_subalgebra(&s) {
                continue;
            }
            let derived = derived_series(&s).expect("checked subalgebra");
            let dims: Vec<String> = derived.iter().map(|d| d.dim().to_string()).collect();
            r.check(
                t,
                &e.row,
                &c("solvable"),
                derived.last().map(Subspace::dim) == Some(0),
                format!("derived={}", dims.join(",")),
            );
            r.check(t, &e.row, &c("not_regular_form"), !is_regular_form(&s), "");
            let branch = lemma5_branch(&s);
            match &branch {
                Ok(b) => r.check(t, &e.row, &c("branch"), b.name() == want.branch, b.to_string()),
                Err(err) => r.record(t, &e.row, &c("branch"), Status::Fail, err.to_string()),
            }
            if want.branch == "INSIDE_N" {
                let inside = positive_nilradical().contains_space(&s);
                let ok = inside && gens.iter().all(is_nilpotent_element) && !contains_nonzero_semisimple(&s);
                r.check(t, &e.row, &c("nilpotent_elements"), ok, "");
            }
            if let Some(h) = &want.cartan {
                let ok = h.in_cartan() && !h.is_zero() && s.contains(h) && is_semisimple_element(h);
                r.check(t, &e.row, &c("cartan_element"), ok, format!("{h}"));
                if let Ok(Lemma5Branch::CartanGenerator(x)) = &branch {
                    r.check(t, &e.row, &c("cartan_generator"), span(std::slice::from_ref(x)) == span(std::slice::from_ref(h)), format!("{x}"));
                }
            }
            if let Some(g) = &want.gamma {
                let ok = match &branch {
                    Ok(Lemma5Branch::SemisimplePlusRoot { gamma, .. }) => AlgElement::x(*gamma) == *g,
                    _ => false,
                };
                r.check(t, &e.row, &c("gamma"), ok, format!("{g}"));
            }
            if let Some(row40) = &want.t40 {
                match t40_normalizer(row40) {
                    Ok((n, d)) => {
                        let got = normalizer(&s);
                        r.check(
                            t,
                            &e.row,
                            &c("normalizer"),
                            got == n && got.dim() == d,
                            format!("T40:{row40} dim={}", got.dim()),
                        );
                    }
                    Err(err) => r.record(t, &e.row, &c("normalizer"), Status::Fail, err.to_string()),
                }
            }
            seen.push((format!("{}{}", e.row, if tag.is_empty() { String::new() } else { format!("@{tag}") }), s));
        }
    }
    let mut clashes = Vec::new();
    for i in 0..seen.len() {
        for j in (i + 1)..seen.len() {
            if seen[i].1 == seen[j].1 {
                clashes.push(format!("{}={}", seen[i].0, seen[j].0));
            }
        }
    }
    r.check(t, "ALL", "pairwise_distinct", clashes.is_empty(), clashes.join(" "));
    let rows = entries(t).len();
    r.check(t, "ALL", "row_count", rows == 49, format!("rows={rows}"));
    r
}

/// The normalizer a T40 row asserts: the corrected value where one is recorded.
fn t40_normalizer(row: &str) -> Result<(Subspace, usize)> {
    let e = entry(TableId::T40, row).ok_or_else(|| G2Error::Catalog(format!("no T40 row {row}")))?;
    if e.get("corrected_normalizer").is_some() {
        Ok((parse_span(e.require("corrected_normalizer")?)?, e.require_int("corrected_dim")?))
    } else {
        Ok((parse_span(e.require("normalizer")?)?, e.require_int("dim")?))
    }
}

fn verify_t10() -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::T10;
    for e in entries(t) {
        let (s, want) = match (|| Ok::<_, G2Error>((parse_span(e.require("gens")?)?, e.require_int("row")?)))() {
            Ok(x) => x,
            Err(err) => {
                fail(&mut r, e, "parse", err);
                continue;
            }
        };
        let (ok, details) = schema_check(&s, Some(want));
        r.check(t, &e.row, "schema", ok, details);
    }
    r
}

/// Runs the schema matcher, turning a panic (no matching row) into a failure.
pub fn schema_check(s: &Subspace, want: Option<usize>) -> (bool, String) {
    match catch_unwind(AssertUnwindSafe(|| match_table10_schema(s))) {
        Ok(Ok(sig)) => {
            let ok = want.is_none_or(|w| sig.row as usize == w);
            (ok, format!("row={} pivots={}", sig.row, sig.leading_roots.join(" ")))
        }
        Ok(Err(err)) => (false, err.to_string()),
        Err(_) => (false, "no schema matches".to_string()),
    }
}

fn verify_t20() -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::T20;
    for e in entries(t) {
        let (x, want) = match (|| Ok::<_, G2Error>((parse_element(e.require("rep")?)?, e.require_int("orbit_dim")?)))() {
            Ok(v) => v,
            Err(err) => {
                fail(&mut r, e, "parse", err);
                continue;
            }
        };
        let rank = ad_rank(&x);
        r.check(t, &e.row, "ad_rank", rank == want, format!("rank={rank}"));
        match classify_nilpotent(&x) {
            Ok(l) => r.check(t, &e.row, "orbit_label", l.name() == e.row, l.name()),
            Err(err) => fail(&mut r, e, "orbit_label", err),
        }
    }
    r
}

fn verify_t40(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::T40;
    for e in entries(t) {
        let parsed = (|| {
            let published = (parse_span(e.require("normalizer")?)?, e.require_int("dim")?);
            let (want, dim) = t40_normalizer(&e.row)?;
            Ok::<_, G2Error>((instances(e, "sub", opts)?, want, dim, published))
        })();
        let (insts, want, dim, published) = match parsed {
            Ok(v) => v,
            Err(err) => {
                fail(&mut r, e, "parse", err);
                continue;
            }
        };
        for (tag, gens) in insts {
            let s = span(&gens);
            let n = normalizer(&s);
            r.check(t, &e.row, &suffixed("normalizer_dim", &tag), n.dim() == dim, format!("dim={}", n.dim()));
            r.check(t, &e.row, &suffixed("normalizer_basis", &tag), n == want, format!("{n}"));
            if let Some(note) = e.get("erratum") {
                // The published span must be a proper part of the true normalizer.
                let refuted = n != published.0 && n.contains_space(&published.0) && n.dim() != published.1;
                r.check(
                    t,
                    &e.row,
                    &suffixed("erratum", &tag),
                    refuted,
                    format!("published dim={} computed dim={}: {note}", published.1, n.dim()),
                );
            }
            r.check(
                t,
                &e.row,
                &suffixed("contains_subalgebra", &tag),
                is_subalgebra(&s) && n.contains_space(&s),
                "",
            );
        }
    }
    r
}

fn verify_prop1() -> VerificationReport {
    let mut r = VerificationReport::default();
    let t = TableId::Prop1;
    let classes = classify_regular_types();
    let counts = counts_by_dimension(&classes);
    for e in entries(t) {
        if e.get("count").is_some() {
            let want = match e.require_int("count") {
                Ok(w) => w,
                Err(err) => {
                    fail(&mut r, e, "count", err);
                    continue;
                }
            };
            let got = if e.row == "TOTAL" {
                classes.len()
            } else {
                match e.row.parse::<usize>() {
                    Ok(d) if d < counts.len() => counts[d],
                    _ => {
                        fail(&mut r, e, "count", G2Error::Catalog(format!("bad dimension {}", e.row)));
                        continue;
                    }
                }
            };
            r.check(t, &e.row, "count", got == want, format!("count={got}"));
        } else {
            verify_parabolic(&mut r, e);
        }
    }
    r
}

fn verify_parabolic(r: &mut VerificationReport, e: &CatalogEntry) {
    let t = e.table;
    let parsed = (|| {
        Ok::<_, G2Error>((parse_span(e.require("gens")?)?, parse_span(e.require("levi")?)?, e.require_int("radical_dim")?))
    })();
    let (s, levi, rad_dim) = match parsed {
        Ok(v) => v,
        Err(err) => {
            fail(r, e, "parse", err);
            return;
        }
    };
    r.check(t, &e.row, "subalgebra", is_subalgebra(&s) && s.dim() == 9, format!("dim={}", s.dim()));
    r.check(t, &e.row, "regular_form", is_regular_form(&s), "");
    let roots: Vec<_> = (2..DIM)
        .filter(|&i| s.contains(&AlgElement::basis(i)))
        .filter_map(crate::algebra::basis_root)
        .collect();
    let Some(sigma) = ClosedSubset::new(RootSet::from_roots(&roots)) else {
        r.record(t, &e.row, "levi", Status::Fail, "root support is not closed");
        return;
    };
    let spec = RegularSpec {
        sigma,
        l_type: LType::FullH,
    };
    match radical_and_levi(&spec, &Subspace::cartan()) {
        Ok((rad, lv)) => {
            r.check(t, &e.row, "levi", lv == levi && levi.bracket_space(&levi) == levi, format!("{lv}"));
            r.check(t, &e.row, "radical_dim", rad.dim() == rad_dim, format!("dim={}", rad.dim()));
        }
        Err(err) => fail(r, e, "levi", err),
    }
}

/// `NAME | KIND | DIM | generators`.
struct Summand {
    name: String,
    kind: String,
    dim: usize,
    space: Subspace,
}

fn parse_summand(text: &str) -> Result<Summand> {
    let parts: Vec<&str> = text.split('|').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(G2Error::Catalog(format!("summand needs 4 fields: {text}")));
    }
    let dim = parts[2]
        .parse()
        .map_err(|_| G2Error::Catalog(format!("summand dimension: {}", parts[2])))?;
    Ok(Summand {
        name: parts[0].to_string(),
        kind: parts[1].to_string(),
        dim,
        space: parse_span(parts[3])?,
    })
}

fn verify_prop2(opts: &VerifyOptions) -> VerificationReport {
    let mut r = VerificationReport::default();
    for e in entries(TableId::Prop2) {
        if let Some(only) = &opts.subalgebra {
            if !only.eq_ignore_ascii_case(&e.row) {
                continue;
            }
        }
        verify_prop2_entry(&mut r, e);
    }
    r
}

fn verify_prop2_entry(r: &mut VerificationReport, e: &CatalogEntry) {
    let t = e.table;
    let parsed = (|| {
        let triple = match e.get("triple") {
            Some(s) => {
                let xs = parse_list(s)?;
                if xs.len() != 3 {
                    return Err(G2Error::Catalog(format!("line {}: triple needs three elements", e.line)));
                }
                Some(Sl2Triple::new(xs[0].clone(), xs[1].clone(), xs[2].clone()))
            }
            None => None,
        };
        let gens = match &triple {
            Some(tr) => tr.generators(),
            None => parse_list(e.require("gens")?)?,
        };
        let summands = e.get_all("summand").into_iter().map(parse_summand).collect::<Result<Vec<_>>>()?;
        Ok::<_, G2Error>((triple, gens, summands))
    })();
    let (triple, gens, summands) = match parsed {
        Ok(v) => v,
        Err(err) => {
            fail(r, e, "parse", err);
            return;
        }
    };
    let sub = crate::subspace::generated_subalgebra(&gens);
    if let Some(tr) = &triple {
        let rel = verify_triple(tr);
        r.check(t, &e.row, "triple_relations", rel.is_ok(), rel.err().unwrap_or_default());
    }
    let want_dim = e.get("dim").and_then(|d| d.parse().ok()).unwrap_or(3);
    r.check(t, &e.row, "subalgebra_dim", sub.dim() == want_dim, format!("dim={}", sub.dim()));

    let mut expected_spins: BTreeMap<u32, usize> = BTreeMap::from([(2, 1)]);
    for sm in &summands {
        let check = verify_submodule(&gens, &sm.space, sm.dim);
        let name = |c: &str| format!("{}:{c}", sm.name);
        r.check(t, &e.row, &name("invariant"), check.invariant, "");
        r.check(t, &e.row, &name("dim"), check.dim_ok, format!("dim={}", check.dim));
        match sm.kind.as_str() {
            "trivial" => {
                r.check(t, &e.row, &name("trivial"), check.trivial, "");
                *expected_spins.entry(0).or_default() += sm.dim;
            }
            "irr" => r.check(t, &e.row, &name("irreducible"), check.irreducible, ""),
            k => match k.strip_prefix("D:").and_then(|n| n.parse::<u32>().ok()) {
                Some(two_s) => {
                    r.check(t, &e.row, &name("irreducible"), check.irreducible, "");
                    *expected_spins.entry(two_s).or_default() += 1;
                    if let Some(tr) = &triple {
                        let ok = weight_multiplicities(&tr.f, &sm.space).map(|m| m == irreducible_weights(two_s));
                        r.check(t, &e.row, &name("weights"), ok == Ok(true), format!("D_{}", crate::reps::Sl2DecompReport::spin_label(two_s)));
                    }
                }
                None => r.record(t, &e.row, &name("kind"), Status::Fail, format!("unknown kind {k}")),
            },
        }
    }
    let total: usize = sub.dim() + summands.iter().map(|s| s.dim).sum::<usize>();
    let all = summands.iter().fold(sub.clone(), |acc, s| acc.sum(&s.space));
    r.check(
        t,
        &e.row,
        "direct_sum",
        total == DIM && all.dim() == DIM,
        format!("total={total} span={}", all.dim()),
    );
    if let Some(tr) = &triple {
        match decompose_under_sl2(tr) {
            Ok(d) => {
                let label: Vec<String> = d
                    .multiplicities
                    .iter()
                    .map(|(k, n)| format!("D_{}^{n}", crate::reps::Sl2DecompReport::spin_label(*k)))
                    .collect();
                r.check(
                    t,
                    &e.row,
                    "decomposition",
                    d.multiplicities == expected_spins && d.total_dim_check == DIM,
                    label.join(" "),
                );
            }
            Err(err) => fail(r, e, "decomposition", err),
        }
    }
    if let (Some(hs), Some(ws)) = (e.get("weights_h"), e.get("weights")) {
        let ok = (|| {
            let hs = parse_list(hs)?;
            let mut want: Vec<(FieldElement, FieldElement)> = ws
                .split(';')
                .map(|p| {
                    let (a, b) = p.split_once(',').ok_or_else(|| G2Error::Catalog(format!("weight pair {p}")))?;
                    Ok((
                        FieldElement::from_rational(parse_rational(a.trim())?),
                        FieldElement::from_rational(parse_rational(b.trim())?),
                    ))
                })
                .collect::<Result<_>>()?;
            let w = &summands
                .first()
                .ok_or_else(|| G2Error::Catalog("weights need a summand".into()))?
                .space;
            let mut got = root_weights(w, &hs[0], &hs[1]).unwrap_or_default();
            want.sort_by_key(|p| format!("{}|{}", p.0, p.1));
            got.sort_by_key(|p| format!("{}|{}", p.0, p.1));
            Ok::<_, G2Error>(got == want)
        })();
        match ok {
            Ok(v) => r.check(t, &e.row, "weights", v, ""),
            Err(err) => fail(r, e, "weights", err),
        }
    }
    if let (Some(v), Some(tr)) = (e.get("weight_vector"), &triple) {
        match parse_element(v) {
            Ok(x) => {
                let inside = summands.iter().any(|s| s.space.contains(&x));
                let fx = bracket(&tr.f, &x);
                let eigen = span(std::slice::from_ref(&x)).contains(&fx);
                r.check(t, &e.row, "weight_vector", inside && eigen && !x.is_zero(), format!("[f,v]={}", format_element(&fx)));
            }
            Err(err) => fail(r, e, "weight_vector", err),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_quoted_semicolons() {
        let es = parse_catalog("[T3:7] gens = \"X[0,1]+X[3,1]; X[2,1]; X[3,2]\" ; t40 = 15\n").unwrap();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].get("gens"), Some("X[0,1]+X[3,1]; X[2,1]; X[3,2]"));
        assert_eq!(es[0].get("t40"), Some("15"));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(parse_catalog("T3:1 gens = \"X[1,0]\"").is_err());
        assert!(parse_catalog("[T99:1] gens = \"X[1,0]\"").is_err());
        assert!(parse_catalog("[T3:1] gens = \"X[1,0]").is_err());
        assert!(parse_catalog("[T3:1] gens").is_err());
    }

    #[test]
    fn shipped_catalog_sizes() {
        assert_eq!(entries(TableId::T3).len(), 49);
        assert_eq!(entries(TableId::T40).len(), 25);
        assert_eq!(entries(TableId::T20).len(), 4);
        assert_eq!(entries(TableId::T10).len(), 25);
    }

    #[test]
    fn status_text() {
        assert_eq!(Status::Skipped("no rational point".into()).to_string(), "SKIPPED(no rational point)");
    }
}
