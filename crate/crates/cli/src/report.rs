//! Rendering of plan, scan, verify and catalog results in text, JSON and CSV.

use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;
use sha2::{Digest, Sha256};

use symgeo_core::blocks::{catalog as lookup, CATALOG_NAMES};
use symgeo_core::planner::{CoverageReport, PlanResult};
use symgeo_core::surgery::{ManifoldState, Pi1Status, Pi1Summary, Recipe, TraceEntry};
use symgeo_core::CharNumbers;

use crate::Format;

/// First 16 hex digits of the SHA-256 of the compact recipe JSON.
pub fn recipe_id(r: &Recipe) -> String {
    let digest = Sha256::digest(r.canonical_json().as_bytes());
    hex::encode(digest)[..16].to_string()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    c: i64,
    chi: i64,
    e: i64,
    sigma: i64,
    status: &'a str,
    pi1_status: &'a str,
    recipe_id: String,
}

fn csv_text<'a>(rows: impl IntoIterator<Item = CsvRow<'a>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_text<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Everything learned from evaluating a recipe.
#[derive(Serialize)]
struct Evaluation<'a> {
    evaluated: CharNumbers,
    c1sq: i64,
    chi_h: Option<i64>,
    pi1: Option<&'a Pi1Summary>,
    odd_form: bool,
    odd_form_witness: Option<&'a str>,
    minimality_chain: &'a [String],
    trace: &'a [TraceEntry],
}

impl<'a> Evaluation<'a> {
    fn of(st: &'a ManifoldState) -> Self {
        Evaluation {
            evaluated: st.char,
            c1sq: st.char.c1sq(),
            chi_h: st.char.chi_h(),
            pi1: st.pi1.as_ref(),
            odd_form: st.has_odd_form_witness(),
            odd_form_witness: st.odd_form_witness.as_deref(),
            minimality_chain: &st.minimality_chain,
            trace: &st.trace,
        }
    }
}

#[derive(Serialize)]
struct PlanReport<'a> {
    #[serde(flatten)]
    plan: &'a PlanResult,
    expected_c1sq: i64,
    recipe_id: Option<String>,
    char_match: Option<bool>,
    #[serde(flatten)]
    evaluation: Option<Evaluation<'a>>,
}

pub fn plan(p: &PlanResult, st: Option<&ManifoldState>, format: Format) -> Result<String> {
    match format {
        Format::Json => json_text(&PlanReport {
            plan: p,
            expected_c1sq: p.expected.c1sq(),
            recipe_id: p.recipe.as_ref().map(recipe_id),
            char_match: st.map(|s| s.char == p.expected),
            evaluation: st.map(Evaluation::of),
        }),
        Format::Csv => csv_text([CsvRow {
            c: p.c,
            chi: p.chi,
            e: p.expected.e,
            sigma: p.expected.sigma,
            status: p.status.as_str(),
            pi1_status: st.map_or(Pi1Status::Unknown, |s| s.pi1_status()).as_str(),
            recipe_id: p.recipe.as_ref().map(recipe_id).unwrap_or_default(),
        }]),
        Format::Text => {
            let mut out = String::new();
            let (m, n) = p.expected.cp2_label();
            writeln!(out, "point      c1^2 = {}, chi_h = {}", p.c, p.chi)?;
            writeln!(out, "target     e = {}, sigma = {}  ({m}CP2 # {n}(-CP2))", p.expected.e, p.expected.sigma)?;
            writeln!(out, "status     {}", p.status.as_str())?;
            writeln!(out, "branch     {}", p.branch)?;
            if let Some(d) = &p.decomposition {
                writeln!(out, "blocks     (b,c,d,g,k) = {d}")?;
            }
            if let Some(r) = &p.recipe {
                writeln!(out, "recipe id  {}", recipe_id(r))?;
            }
            if let Some(st) = st {
                let verdict = if st.char == p.expected { "matches" } else { "MISMATCH" };
                writeln!(out, "evaluated  e = {}, sigma = {}  {verdict}", st.char.e, st.char.sigma)?;
                write_state(&mut out, st)?;
            }
            Ok(out)
        }
    }
}

fn write_state(out: &mut String, st: &ManifoldState) -> Result<()> {
    writeln!(out, "\nconstruction (e, sigma after each step):")?;
    for t in &st.trace {
        writeln!(out, "  {}{}  ({}, {})", "  ".repeat(t.depth), t.step, t.e, t.sigma)?;
    }
    writeln!(out)?;
    match &st.pi1 {
        Some(s) => {
            write!(out, "pi_1       {}", s.status.as_str())?;
            if s.steps > 0 {
                write!(out, ", {} eliminations", s.steps)?;
            }
            if s.used_cyclic_rotation {
                write!(out, ", cyclic rotation used")?;
            }
            writeln!(out)?;
            if let Some(ab) = &s.abelianization {
                let note = if s.cover && !ab.is_trivial() { " (presentation may omit relators)" } else { "" };
                writeln!(out, "H_1        {ab}{note}")?;
            }
            if !s.released_tiers.is_empty() {
                writeln!(out, "ambient    released for {}", s.released_tiers.join(", "))?;
            }
        }
        None => writeln!(out, "pi_1       unknown")?,
    }
    let odd = match (&st.odd_form_witness, st.has_odd_form_witness()) {
        (Some(w), _) => format!("odd ({w})"),
        (None, true) => "odd".into(),
        (None, false) => "no witness".into(),
    };
    writeln!(out, "form       {odd}")?;
    if !st.minimality_chain.is_empty() {
        writeln!(out, "minimality")?;
        for m in &st.minimality_chain {
            writeln!(out, "  {m}")?;
        }
    }
    Ok(())
}

pub fn scan(r: &CoverageReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json_text(r),
        Format::Csv => csv_text(r.rows.iter().map(|row| CsvRow {
            c: row.c(),
            chi: row.chi(),
            e: row.plan.expected.e,
            sigma: row.plan.expected.sigma,
            status: row.plan.status.as_str(),
            pi1_status: row.pi1_status.as_str(),
            recipe_id: row.plan.recipe.as_ref().map(recipe_id).unwrap_or_default(),
        })),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{:>4} {:>4} {:>5} {:>6}  {:<13} {:<21} branch", "chi", "c", "e", "sigma", "status", "pi_1")?;
            for row in &r.rows {
                let mut status = row.plan.status.as_str().to_string();
                if row.plan.status.has_recipe() && !row.char_match {
                    status.push('!');
                }
                writeln!(
                    out,
                    "{:>4} {:>4} {:>5} {:>6}  {:<13} {:<21} {}",
                    row.chi(),
                    row.c(),
                    row.plan.expected.e,
                    row.plan.expected.sigma,
                    status,
                    row.pi1_status.as_str(),
                    row.plan.branch
                )?;
                if let Some(e) = &row.error {
                    writeln!(out, "           error: {e}")?;
                }
            }
            writeln!(out, "\nchi <= {}: {} points", r.chi_max, r.rows.len())?;
            for (k, v) in &r.totals {
                writeln!(out, "  {k:<13} {v}")?;
            }
            let proved = r.rows.iter().filter(|x| x.pi1_status == Pi1Status::ProvedTrivial).count();
            writeln!(out, "  pi_1 proved trivial: {proved}")?;
            writeln!(out, "exceptions: {}", pairs(&r.exceptions))?;
            writeln!(out, "char mismatches: {}", pairs(&r.char_mismatches))?;
            writeln!(out, "unplannable: {}", pairs(&r.unplannable))?;
            Ok(out)
        }
    }
}

fn pairs(v: &[(i64, i64)]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(|(c, chi)| format!("({c},{chi})")).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    recipe_id: String,
    recipe: &'a Recipe,
    #[serde(flatten)]
    evaluation: Evaluation<'a>,
}

pub fn verify(r: &Recipe, st: &ManifoldState, format: Format) -> Result<String> {
    match format {
        Format::Json => json_text(&VerifyReport { recipe_id: recipe_id(r), recipe: r, evaluation: Evaluation::of(st) }),
        Format::Csv => {
            let (c, chi) = (st.char.c1sq(), st.char.chi_h().unwrap_or_default());
            csv_text([CsvRow {
                c,
                chi,
                e: st.char.e,
                sigma: st.char.sigma,
                status: "verified",
                pi1_status: st.pi1_status().as_str(),
                recipe_id: recipe_id(r),
            }])
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "recipe id  {}", recipe_id(r))?;
            write!(out, "evaluated  e = {}, sigma = {}, c1^2 = {}", st.char.e, st.char.sigma, st.char.c1sq())?;
            match st.char.chi_h() {
                Some(chi) => writeln!(out, ", chi_h = {chi}")?,
                None => writeln!(out, ", chi_h not integral")?,
            }
            write_state(&mut out, st)?;
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct CatalogEntry {
    name: String,
    params: Option<&'static str>,
    example: String,
    e: i64,
    sigma: i64,
    tori: Vec<String>,
    surfaces: Vec<String>,
    axiom: bool,
    citation: String,
}

fn catalog_entries() -> Result<Vec<CatalogEntry>> {
    CATALOG_NAMES
        .iter()
        .map(|&(name, param)| {
            let params: &[i64] = match param {
                None => &[],
                Some("k") => &[1],
                Some(_) => &[2, 1],
            };
            let b = lookup(name, params)?;
            let example = if params.is_empty() {
                name.to_string()
            } else {
                let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                format!("{name}({})", ps.join(","))
            };
            Ok(CatalogEntry {
                name: name.into(),
                params: param,
                example,
                e: b.char.e,
                sigma: b.char.sigma,
                tori: b.tori.iter().map(|t| t.name.clone()).collect(),
                surfaces: b.surfaces.iter().map(|s| format!("{}(g={},sq={})", s.name, s.genus, s.square)).collect(),
                axiom: b.is_axiom(),
                citation: b.citation,
            })
        })
        .collect()
}

pub fn catalog(format: Format) -> Result<String> {
    let entries = catalog_entries()?;
    match format {
        Format::Json => json_text(&entries),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "params", "example", "e", "sigma", "tori", "surfaces", "axiom", "citation"])?;
            for x in &entries {
                w.write_record([
                    x.name.as_str(),
                    x.params.unwrap_or(""),
                    x.example.as_str(),
                    &x.e.to_string(),
                    &x.sigma.to_string(),
                    &x.tori.join(" "),
                    &x.surfaces.join(" "),
                    &x.axiom.to_string(),
                    x.citation.as_str(),
                ])?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        Format::Text => {
            let mut out = String::new();
            for x in &entries {
                let kind = if x.axiom { "axiom" } else { "presented" };
                writeln!(out, "{:<22} e = {:>3}, sigma = {:>3}  {kind}", x.example, x.e, x.sigma)?;
                if !x.tori.is_empty() {
                    writeln!(out, "    tori      {}", x.tori.join(", "))?;
                }
                if !x.surfaces.is_empty() {
                    writeln!(out, "    surfaces  {}", x.surfaces.join(", "))?;
                }
                writeln!(out, "    {}", x.citation)?;
            }
            Ok(out)
        }
    }
}
