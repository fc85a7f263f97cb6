use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use fixed_hooks::catalog::{build, Params, TheoremId, Variant};
use fixed_hooks::oracle::{
    colored_thm11_witnesses, count_colored_thm11, count_colored_thm13, count_hooks_of_size, count_restricted_thm12,
    fixed_by_hook_witnesses, fixed_by_part_witnesses, thm13_shifted_weight, HookQuery,
};
use fixed_hooks::partition::Family;
use fixed_hooks::verify::{run_cases, Grid, IdentityCase, Status};

use crate::params::{parse_range, parse_range_usize, Config};
use crate::report::{self, CountRow, SeriesRow};
use crate::{CountArgs, Format, SeriesArgs, Shared, TableArgs, VariantChoice, VerifyArgs};

const DEFAULT_ORDER: usize = 30;

/// Flags merged with the config file.
struct Settings {
    config: Config,
    order: Option<usize>,
    m: Option<Vec<usize>>,
    k: Option<Vec<usize>>,
    h: Option<Vec<i64>>,
    family: Option<Family>,
    format: Format,
    out: Option<PathBuf>,
    jobs: Option<usize>,
}

impl Settings {
    fn resolve(shared: &Shared) -> Result<Self, String> {
        let config = match &shared.config {
            Some(p) => Config::load(p)?,
            None => Config::default(),
        };
        let order = config
            .pick(shared.order.as_ref(), "order")
            .map(|s| s.trim().parse::<usize>().map_err(|e| format!("bad order '{s}': {e}")))
            .transpose()?;
        let m = config.pick(shared.m.as_ref(), "m").map(|s| parse_range_usize(&s)).transpose()?;
        let k = config.pick(shared.k.as_ref(), "k").map(|s| parse_range_usize(&s)).transpose()?;
        let h = config.pick(shared.h.as_ref(), "h").map(|s| parse_range(&s)).transpose()?;
        let family = config
            .pick(shared.family.as_ref(), "family")
            .map(|s| s.parse::<Family>().map_err(|e| e.to_string()))
            .transpose()?;
        let format = match (shared.format, config.get("format")) {
            (Some(f), _) => f,
            (None, Some(s)) => match s.to_ascii_lowercase().as_str() {
                "text" => Format::Text,
                "csv" => Format::Csv,
                "json" => Format::Json,
                other => return Err(format!("bad format '{other}' in config")),
            },
            (None, None) => Format::Text,
        };
        let out = shared.out.clone().or_else(|| config.get("out").map(PathBuf::from));
        let jobs = match shared.jobs {
            Some(j) => Some(j),
            None => config.get("jobs").map(|s| s.parse::<usize>().map_err(|e| format!("bad jobs '{s}': {e}"))).transpose()?,
        };
        Ok(Settings { config, order, m, k, h, family, format, out, jobs })
    }

    fn order(&self) -> usize {
        self.order.unwrap_or(DEFAULT_ORDER)
    }

    fn variant_choice(&self, flag: Option<VariantChoice>) -> Result<VariantChoice, String> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.config.get("variant").map(str::to_ascii_lowercase).as_deref() {
            None | Some("rederived") => Ok(VariantChoice::Rederived),
            Some("stated") => Ok(VariantChoice::Stated),
            Some("both") => Ok(VariantChoice::Both),
            Some(other) => Err(format!("bad variant '{other}' in config")),
        }
    }

    fn emit(&self, text: &str) -> Result<(), String> {
        match &self.out {
            Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes()).map_err(|e| e.to_string())
            }
        }
    }
}

fn single<T: Copy + std::fmt::Display>(name: &str, values: &Option<Vec<T>>) -> Result<Option<T>, String> {
    match values.as_deref() {
        None => Ok(None),
        Some([v]) => Ok(Some(*v)),
        Some(vs) => Err(format!("--{name} takes a single value here, got {} values", vs.len())),
    }
}

fn required<T>(name: &str, v: Option<T>) -> Result<T, String> {
    v.ok_or_else(|| format!("--{name} is required"))
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse::<TheoremId>().map_err(|e| e.to_string())
}

fn single_variant(choice: VariantChoice) -> Result<Variant, String> {
    match choice {
        VariantChoice::Stated => Ok(Variant::Stated),
        VariantChoice::Rederived => Ok(Variant::Rederived),
        VariantChoice::Both => Err("--variant both is only meaningful for verify".into()),
    }
}

/// `DistinctBySize` names the stated reading and `DistinctBySizeB` the
/// rederived one; a variant choice picks between them.
fn select_theorems(requested: Vec<TheoremId>, choice: VariantChoice) -> Vec<TheoremId> {
    let mut out = Vec::new();
    for t in requested {
        if t == TheoremId::DistinctBySize {
            match choice {
                VariantChoice::Stated => out.push(TheoremId::DistinctBySize),
                VariantChoice::Rederived => out.push(TheoremId::DistinctBySizeVariantB),
                VariantChoice::Both => out.extend([TheoremId::DistinctBySize, TheoremId::DistinctBySizeVariantB]),
            }
        } else {
            out.push(t);
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let s = Settings::resolve(&args.shared)?;
    let mut names = args.thm.clone();
    if names.is_empty() {
        if let Some(list) = s.config.get("thm") {
            names = list.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect();
        }
    }
    let choice = s.variant_choice(args.variant)?;
    let requested: Vec<TheoremId> = match (args.all, names.is_empty()) {
        (true, false) => return Err("--all and --thm are mutually exclusive".into()),
        (false, true) => return Err("give --thm TAG[,TAG...] or --all".into()),
        (true, true) => {
            let mut all = TheoremId::ALL.to_vec();
            all.retain(|&t| t != TheoremId::DistinctBySizeVariantB);
            all
        }
        (false, false) => names.iter().map(|n| parse_theorem(n)).collect::<Result<_, _>>()?,
    };
    let mut theorems = select_theorems(requested, choice);
    if let Some(f) = s.family {
        theorems.retain(|t| t.family() == f);
    }
    let variants = match choice {
        VariantChoice::Stated => vec![Variant::Stated],
        VariantChoice::Rederived => vec![Variant::Rederived],
        VariantChoice::Both => vec![Variant::Stated, Variant::Rederived],
    };
    let defaults = Grid::default();
    let grid = Grid {
        theorems,
        m: s.m.clone().unwrap_or(defaults.m),
        k: s.k.clone(),
        h: s.h.clone(),
        order: s.order(),
        variants,
    };
    let timings = args.timings || s.config.get("timings").is_some_and(|v| v == "true" || v == "1");
    let cases: Vec<IdentityCase> = grid.cases();
    let reports = run_cases(&cases, s.jobs);
    let text = match s.format {
        Format::Text => report::verify_text(&reports, timings, choice == VariantChoice::Both),
        Format::Csv => report::verify_csv(&reports)?,
        Format::Json => report::verify_json(&reports)?,
    };
    s.emit(&text)?;
    if s.format != Format::Text {
        eprint!("{}", report::verify_summary(&reports));
    }
    let bad = reports.iter().any(|r| r.status == Status::Fail || r.is_builder_error());
    Ok(if bad { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn theorem_params(t: TheoremId, s: &Settings) -> Result<Params, String> {
    let m = if t.uses_m() { Some(required("m", single("m", &s.m)?)?) } else { None };
    let k = if t.uses_k() { Some(required("k", single("k", &s.k)?)?) } else { None };
    let h = if t.uses_h() { Some(required("h", single("h", &s.h)?)?) } else { None };
    Ok(Params::new(m, k, h))
}

pub fn series(args: SeriesArgs) -> Result<ExitCode, String> {
    let s = Settings::resolve(&args.shared)?;
    let t = parse_theorem(&args.thm)?;
    let variant = single_variant(s.variant_choice(args.variant)?)?;
    let params = theorem_params(t, &s)?;
    let order = s.order();
    let series = build(t, params, order, Some(variant)).map_err(|e| e.to_string())?;
    let rows: Vec<SeriesRow> = series
        .negative_terms()
        .into_iter()
        .chain((0..order as i64).map(|n| (n, series.coeff(n).unwrap_or(0))))
        .map(|(n, coefficient)| SeriesRow { theorem: t.name(), params, n, coefficient })
        .collect();
    let text = match s.format {
        Format::Text => report::series_text(&rows),
        Format::Csv => report::series_csv(&rows)?,
        Format::Json => report::series_json(&rows)?,
    };
    s.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OracleName {
    FixedByPart,
    FixedByHook,
    Hooks,
    ColoredT11,
    RestrictedT12,
    ColoredT13,
}

impl OracleName {
    fn parse(s: &str) -> Result<Self, String> {
        Ok(match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "fixed-by-part" => OracleName::FixedByPart,
            "fixed-by-hook" => OracleName::FixedByHook,
            "hooks" | "hooks-of-size" => OracleName::Hooks,
            "colored-t11" => OracleName::ColoredT11,
            "restricted-t12" => OracleName::RestrictedT12,
            "colored-t13" => OracleName::ColoredT13,
            _ => {
                return Err(format!(
                    "unknown oracle '{s}' (expected fixed-by-part, fixed-by-hook, hooks, colored-t11, restricted-t12, colored-t13)"
                ))
            }
        })
    }

    fn name(self) -> &'static str {
        match self {
            OracleName::FixedByPart => "fixed-by-part",
            OracleName::FixedByHook => "fixed-by-hook",
            OracleName::Hooks => "hooks",
            OracleName::ColoredT11 => "colored-t11",
            OracleName::RestrictedT12 => "restricted-t12",
            OracleName::ColoredT13 => "colored-t13",
        }
    }
}

pub fn count(args: CountArgs) -> Result<ExitCode, String> {
    let s = Settings::resolve(&args.shared)?;
    let oracle = OracleName::parse(&args.oracle)?;
    let ns = s.config.pick(args.n.as_ref(), "n").ok_or("--n is required")?;
    let ns = parse_range_usize(&ns)?;
    let m = single("m", &s.m)?;
    let k = single("k", &s.k)?;
    let h = single("h", &s.h)?;
    let family = s.family.unwrap_or(Family::All);
    if args.list && !matches!(oracle, OracleName::FixedByPart | OracleName::FixedByHook | OracleName::ColoredT11) {
        return Err(format!("--list is not available for {}", oracle.name()));
    }
    if args.sum_k && oracle != OracleName::FixedByHook {
        return Err("--sum-k applies to fixed-by-hook only".into());
    }
    let col = || required("m", m);
    let mut rows = Vec::new();
    for &n in &ns {
        let (count, witnesses): (u64, Vec<String>) = match oracle {
            OracleName::FixedByPart => {
                let (m, h, k) = (col()?, required("h", h)?, required("k", k)?);
                let w = fixed_by_part_witnesses(HookQuery::new(n, m, h, k), family).map_err(|e| e.to_string())?;
                (w.len() as u64, w.iter().map(|x| format!("{}  row {} hook {}", x.partition, x.row, x.hook)).collect())
            }
            OracleName::FixedByHook => {
                let (m, h) = (col()?, required("h", h)?);
                let k = if args.sum_k {
                    if k.is_some() {
                        return Err("--sum-k and --k are mutually exclusive".into());
                    }
                    None
                } else {
                    Some(required("k", k)?)
                };
                let w = fixed_by_hook_witnesses(n, m, h, k, family).map_err(|e| e.to_string())?;
                (w.len() as u64, w.iter().map(|x| format!("{}  row {} hook {}", x.partition, x.row, x.hook)).collect())
            }
            OracleName::Hooks => {
                let k = required("k", k)?;
                if k == 0 {
                    return Err("--k must be at least 1".into());
                }
                (count_hooks_of_size(n, k, m, family), Vec::new())
            }
            OracleName::ColoredT11 => {
                let m = col()?;
                if args.list {
                    let w = colored_thm11_witnesses(n, m);
                    (w.len() as u64, w.iter().map(|x| format!("{}  L={}", x.colored, x.part_size)).collect())
                } else {
                    (count_colored_thm11(n, m), Vec::new())
                }
            }
            OracleName::RestrictedT12 => (count_restricted_thm12(n, col()?, required("h", h)?), Vec::new()),
            OracleName::ColoredT13 => {
                let (m, k) = (col()?, required("k", k)?);
                let weight = match h {
                    Some(h) => thm13_shifted_weight(n, m, k, h),
                    None => n as i64,
                };
                (count_colored_thm13(weight, m, k), Vec::new())
            }
        };
        let witnesses = if args.list { Some(witnesses) } else { None };
        rows.push(CountRow { oracle: oracle.name(), m, k, h, n, count, witnesses });
    }
    let text = match s.format {
        Format::Text => report::count_text(&rows),
        Format::Csv => report::count_csv(&rows)?,
        Format::Json => report::count_json(&rows)?,
    };
    s.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn table(args: TableArgs) -> Result<ExitCode, String> {
    let s = Settings::resolve(&args.shared)?;
    let t = parse_theorem(&args.thm)?;
    let variant = single_variant(s.variant_choice(args.variant)?)?;
    let order = s.order();
    let axis = |used: bool, name: &str, v: &Option<Vec<usize>>| -> Result<Vec<Option<usize>>, String> {
        if !used {
            return Ok(vec![None]);
        }
        Ok(v.as_ref().ok_or_else(|| format!("--{name} is required for {t}"))?.iter().copied().map(Some).collect())
    };
    let ms = axis(t.uses_m(), "m", &s.m)?;
    let ks = axis(t.uses_k(), "k", &s.k)?;
    let hs: Vec<Option<i64>> = if t.uses_h() {
        s.h.as_ref().ok_or_else(|| format!("--h is required for {t}"))?.iter().copied().map(Some).collect()
    } else {
        vec![None]
    };
    let mut columns = Vec::new();
    for &m in &ms {
        for &k in &ks {
            for &h in &hs {
                let params = Params::new(m, k, h);
                match build(t, params, order, Some(variant)) {
                    Ok(series) => {
                        let coeffs = (0..order as i64).map(|n| series.coeff(n).unwrap_or(0)).collect();
                        columns.push((params, coeffs));
                    }
                    Err(fixed_hooks::CatalogError::Precondition(why)) => {
                        eprintln!("skipping {}: {why}", report::param_label(params));
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    let text = match s.format {
        Format::Text => report::table_text(&columns, order),
        Format::Csv => report::table_csv(&columns, order)?,
        Format::Json => report::table_json(t.name(), &columns, order)?,
    };
    s.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}
