//! Text, CSV and JSON renderings. Everything here is a pure function of the
//! already-sorted reports, so output is byte-for-byte stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixed_hooks::catalog::{Params, TheoremId, Variant};
use fixed_hooks::verify::{Status, VerifyReport};
use serde::Serialize;

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| e.to_string())?;
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn json_lines<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r).map_err(|e| e.to_string())?);
        out.push('\n');
    }
    Ok(out)
}

pub fn param_label(p: Params) -> String {
    let mut parts = Vec::new();
    if let Some(m) = p.m {
        parts.push(format!("m={m}"));
    }
    if let Some(k) = p.k {
        parts.push(format!("k={k}"));
    }
    if let Some(h) = p.h {
        parts.push(format!("h={h}"));
    }
    parts.join(" ")
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct VerifyRow<'a> {
    theorem: &'static str,
    variant: Option<Variant>,
    m: Option<usize>,
    k: Option<usize>,
    h: Option<i64>,
    n: Option<i64>,
    coefficient: Option<i64>,
    oracle: Option<i64>,
    status: &'static str,
    note: Option<&'a str>,
}

fn verify_rows(reports: &[VerifyReport]) -> Vec<VerifyRow<'_>> {
    let mut out = Vec::new();
    for r in reports {
        let c = &r.case;
        let base = |n, coefficient, oracle, status| VerifyRow {
            theorem: c.theorem.name(),
            variant: c.variant,
            m: c.params.m,
            k: c.params.k,
            h: c.params.h,
            n,
            coefficient,
            oracle,
            status,
            note: r.note.as_deref(),
        };
        if r.rows.is_empty() {
            out.push(base(None, None, None, r.status.name()));
        }
        for row in &r.rows {
            let status = if row.agrees() { "pass" } else { "fail" };
            out.push(base(Some(row.n), Some(row.coefficient), Some(row.oracle), status));
        }
        // a failure found by a secondary oracle or the weight-shift check
        // would otherwise be invisible in the per-exponent rows
        if let Some(mm) = &r.first_mismatch {
            if r.rows.iter().all(|x| x.agrees()) {
                out.push(base(Some(mm.exponent), Some(mm.coefficient), Some(mm.oracle), "fail"));
            }
        }
    }
    out
}

pub fn verify_csv(reports: &[VerifyReport]) -> Result<String, String> {
    csv_string(|w| {
        w.write_record(["theorem", "variant", "m", "k", "h", "n", "coefficient", "oracle", "status", "note"])?;
        for r in verify_rows(reports) {
            let opt = |v: Option<String>| v.unwrap_or_default();
            w.write_record([
                r.theorem.to_string(),
                opt(r.variant.map(|v| v.to_string())),
                opt(r.m.map(|v| v.to_string())),
                opt(r.k.map(|v| v.to_string())),
                opt(r.h.map(|v| v.to_string())),
                opt(r.n.map(|v| v.to_string())),
                opt(r.coefficient.map(|v| v.to_string())),
                opt(r.oracle.map(|v| v.to_string())),
                r.status.to_string(),
                r.note.unwrap_or("").to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn verify_json(reports: &[VerifyReport]) -> Result<String, String> {
    json_lines(&verify_rows(reports))
}

pub fn verify_summary(reports: &[VerifyReport]) -> String {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    format!(
        "{} cases: {} pass, {} fail, {} skipped\n",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    )
}

/// The two readings of each formula that has them, keyed by the stated tag.
fn reading(t: TheoremId, v: Option<Variant>) -> Option<(TheoremId, Variant)> {
    match t {
        TheoremId::DistinctBySize => Some((t, Variant::Stated)),
        TheoremId::DistinctBySizeVariantB => Some((TheoremId::DistinctBySize, Variant::Rederived)),
        _ if t.has_variants() => v.map(|v| (t, v)),
        _ => None,
    }
}

pub fn variant_resolution(reports: &[VerifyReport]) -> String {
    let mut tally: BTreeMap<(TheoremId, Variant), (usize, usize)> = BTreeMap::new();
    for r in reports.iter().filter(|r| r.status != Status::Skipped) {
        if let Some(key) = reading(r.case.theorem, r.case.variant) {
            let e = tally.entry(key).or_default();
            e.1 += 1;
            if r.passed() {
                e.0 += 1;
            }
        }
    }
    let mut out = String::new();
    let theorems: Vec<TheoremId> = {
        let mut t: Vec<TheoremId> = tally.keys().map(|k| k.0).collect();
        t.dedup();
        t
    };
    for t in theorems {
        let mut parts = Vec::new();
        let mut matching = Vec::new();
        for v in [Variant::Stated, Variant::Rederived] {
            if let Some(&(pass, total)) = tally.get(&(t, v)) {
                parts.push(format!("{v} {pass}/{total} pass"));
                if pass == total {
                    matching.push(v.name());
                }
            }
        }
        let verdict = if matching.is_empty() { "none".to_string() } else { matching.join(", ") };
        let _ = writeln!(out, "variant resolution: {t}: {}; matching: {verdict}", parts.join(", "));
    }
    out
}

pub fn verify_text(reports: &[VerifyReport], timings: bool, resolution: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = write!(out, "{:<7} {}", r.status.name(), r.case);
        if let Some(mm) = &r.first_mismatch {
            let _ = write!(out, "  first mismatch {mm}");
        }
        if let Some(note) = &r.note {
            let _ = write!(out, "  ({note})");
        }
        if timings {
            let _ = write!(out, "  {:.3} ms", r.elapsed.as_secs_f64() * 1e3);
        }
        out.push('\n');
    }
    if let [only] = reports {
        for row in &only.rows {
            let mark = if row.agrees() { "" } else { "  <-- differs" };
            let _ = writeln!(out, "  q^{:<4} series {:>8}  oracle {:>8}{mark}", row.n, row.coefficient, row.oracle);
        }
    }
    if resolution {
        out.push_str(&variant_resolution(reports));
    }
    out.push_str(&verify_summary(reports));
    out
}

// ---------------------------------------------------------------------------
// series

#[derive(Serialize)]
pub struct SeriesRow {
    pub theorem: &'static str,
    #[serde(skip)]
    pub params: Params,
    pub n: i64,
    pub coefficient: i64,
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    theorem: &'a str,
    m: Option<usize>,
    k: Option<usize>,
    h: Option<i64>,
    n: i64,
    coefficient: i64,
}

pub fn series_text(rows: &[SeriesRow]) -> String {
    rows.iter().map(|r| format!("{} {}\n", r.n, r.coefficient)).collect()
}

pub fn series_csv(rows: &[SeriesRow]) -> Result<String, String> {
    csv_string(|w| {
        w.write_record(["theorem", "m", "k", "h", "n", "coefficient"])?;
        for r in rows {
            let p = r.params;
            let opt = |v: Option<String>| v.unwrap_or_default();
            w.write_record([
                r.theorem.to_string(),
                opt(p.m.map(|v| v.to_string())),
                opt(p.k.map(|v| v.to_string())),
                opt(p.h.map(|v| v.to_string())),
                r.n.to_string(),
                r.coefficient.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn series_json(rows: &[SeriesRow]) -> Result<String, String> {
    let rows: Vec<SeriesJson> = rows
        .iter()
        .map(|r| SeriesJson { theorem: r.theorem, m: r.params.m, k: r.params.k, h: r.params.h, n: r.n, coefficient: r.coefficient })
        .collect();
    json_lines(&rows)
}

// ---------------------------------------------------------------------------
// count

#[derive(Serialize)]
pub struct CountRow {
    pub oracle: &'static str,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub h: Option<i64>,
    pub n: usize,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
}

pub fn count_text(rows: &[CountRow]) -> String {
    let mut out = String::new();
    let single = rows.len() == 1;
    for r in rows {
        if single {
            let _ = writeln!(out, "{}", r.count);
        } else {
            let _ = writeln!(out, "{} {}", r.n, r.count);
        }
        for w in r.witnesses.iter().flatten() {
            let _ = writeln!(out, "{w}");
        }
    }
    out
}

pub fn count_csv(rows: &[CountRow]) -> Result<String, String> {
    let listing = rows.iter().any(|r| r.witnesses.is_some());
    csv_string(|w| {
        let mut header = vec!["oracle", "m", "k", "h", "n", "count"];
        if listing {
            header.push("witnesses");
        }
        w.write_record(&header)?;
        for r in rows {
            let opt = |v: Option<String>| v.unwrap_or_default();
            let mut rec = vec![
                r.oracle.to_string(),
                opt(r.m.map(|v| v.to_string())),
                opt(r.k.map(|v| v.to_string())),
                opt(r.h.map(|v| v.to_string())),
                r.n.to_string(),
                r.count.to_string(),
            ];
            if listing {
                rec.push(r.witnesses.as_deref().unwrap_or_default().join("; "));
            }
            w.write_record(&rec)?;
        }
        Ok(())
    })
}

pub fn count_json(rows: &[CountRow]) -> Result<String, String> {
    json_lines(rows)
}

// ---------------------------------------------------------------------------
// table

pub type Column = (Params, Vec<i64>);

pub fn table_text(columns: &[Column], order: usize) -> String {
    let labels: Vec<String> = columns.iter().map(|c| param_label(c.0)).collect();
    let widths: Vec<usize> = columns
        .iter()
        .zip(&labels)
        .map(|(c, l)| c.1.iter().map(|v| v.to_string().len()).max().unwrap_or(0).max(l.len()))
        .collect();
    let nw = order.saturating_sub(1).to_string().len().max(1);
    let mut out = format!("{:>nw$}", "n");
    for (l, w) in labels.iter().zip(&widths) {
        let _ = write!(out, "  {l:>w$}");
    }
    out.push('\n');
    if columns.is_empty() {
        return out;
    }
    for n in 0..order {
        let _ = write!(out, "{n:>nw$}");
        for (c, w) in columns.iter().zip(&widths) {
            let _ = write!(out, "  {:>w$}", c.1[n]);
        }
        out.push('\n');
    }
    out
}

pub fn table_csv(columns: &[Column], order: usize) -> Result<String, String> {
    csv_string(|w| {
        let mut header = vec!["n".to_string()];
        header.extend(columns.iter().map(|c| param_label(c.0)));
        w.write_record(&header)?;
        if columns.is_empty() {
            return Ok(());
        }
        for n in 0..order {
            let mut rec = vec![n.to_string()];
            rec.extend(columns.iter().map(|c| c.1[n].to_string()));
            w.write_record(&rec)?;
        }
        Ok(())
    })
}

#[derive(Serialize)]
struct TableCell<'a> {
    theorem: &'a str,
    m: Option<usize>,
    k: Option<usize>,
    h: Option<i64>,
    n: usize,
    coefficient: i64,
}

/// One JSON array of cells, column-major.
pub fn table_json(theorem: &str, columns: &[Column], order: usize) -> Result<String, String> {
    let cells: Vec<TableCell> = columns
        .iter()
        .flat_map(|(p, coeffs)| {
            (0..order).map(move |n| TableCell { theorem, m: p.m, k: p.k, h: p.h, n, coefficient: coeffs[n] })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&cells).map_err(|e| e.to_string())?;
    s.push('\n');
    Ok(s)
}
