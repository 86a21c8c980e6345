//! Record building and rendering behind the `regen` binary. Kept in the
//! library so the output formats can be tested without spawning processes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;

use crate::codes::{build_glued, GlueOptions, DEFAULT_FIELD_ORDER, DEFAULT_MAX_GLUE_NODES};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, to_decimal, to_exact_string, Rational};
use crate::gf::PrimeField;
use crate::simulate::{
    mk_oracle_with_cap, sweep_reconstructions, sweep_repairs, DEFAULT_ORACLE_MAX_NODES,
};
use crate::tradeoff::{
    baseline_point, baseline_raw, construction1_point, construction1_raw, construction2_file_size,
    construction2_point, construction2_raw, functional_vertices, match_small_code, mbr_point,
    min_functional_gamma, msr_point, space_sharing_curve, theorem2_region, ParityRule, Provenance,
    SystemParams, TradeoffPoint,
};

pub const DECIMAL_PLACES: u32 = 15;
pub const CSV_HEADER: &str = "series,khat,alpha_exact,gamma_exact,alpha,gamma";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    Functional,
    SpaceShare,
    Baseline,
    C1,
    C2,
    Hull,
}

impl Series {
    pub const ALL: [Series; 6] = [
        Series::Functional,
        Series::SpaceShare,
        Series::Baseline,
        Series::C1,
        Series::C2,
        Series::Hull,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Series::Functional => "functional",
            Series::SpaceShare => "space-share",
            Series::Baseline => "baseline",
            Series::C1 => "c1",
            Series::C2 => "c2",
            Series::Hull => "hull",
        }
    }

    /// Parses a comma-separated list; `all` selects every series.
    pub fn parse_list(s: &str) -> std::result::Result<Vec<Series>, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Series::ALL);
                continue;
            }
            let found = Series::ALL
                .iter()
                .find(|x| x.name() == part)
                .ok_or_else(|| format!("unknown series {part:?}"))?;
            out.push(*found);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Msr,
    Mbr,
    C1,
    C2,
    Baseline,
}

impl FromStr for Construction {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "msr" => Ok(Construction::Msr),
            "mbr" => Ok(Construction::Mbr),
            "c1" => Ok(Construction::C1),
            "c2" => Ok(Construction::C2),
            "baseline" => Ok(Construction::Baseline),
            _ => Err(format!(
                "unknown construction {s:?} (expected msr, mbr, c1, c2 or baseline)"
            )),
        }
    }
}

/// One emitted point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRow {
    pub series: String,
    pub khat: Option<usize>,
    pub alpha: Rational,
    pub gamma: Rational,
    pub provenance: Option<Provenance>,
}

impl OutputRow {
    fn from_point(series: &str, p: &TradeoffPoint) -> Self {
        OutputRow {
            series: series.to_string(),
            khat: p.provenance.k_hat(),
            alpha: p.alpha.clone(),
            gamma: p.gamma.clone(),
            provenance: Some(p.provenance),
        }
    }
}

/// Rows for one set of system parameters plus what produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub params: SystemParams,
    pub raw: bool,
    pub rows: Vec<OutputRow>,
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::from(CSV_HEADER);
                out.push('\n');
                for r in &self.rows {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        r.series,
                        r.khat.map(|k| k.to_string()).unwrap_or_default(),
                        to_exact_string(&r.alpha),
                        to_exact_string(&r.gamma),
                        to_decimal(&r.alpha, DECIMAL_PLACES),
                        to_decimal(&r.gamma, DECIMAL_PLACES),
                    );
                }
                out
            }
            Format::Json => {
                let rows: Vec<_> = self
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "series": r.series,
                            "khat": r.khat,
                            "alpha_exact": to_exact_string(&r.alpha),
                            "gamma_exact": to_exact_string(&r.gamma),
                            "alpha": to_decimal(&r.alpha, DECIMAL_PLACES),
                            "gamma": to_decimal(&r.gamma, DECIMAL_PLACES),
                            "provenance": r.provenance.map(|p| p.label()),
                        })
                    })
                    .collect();
                let v = json!({
                    "n": self.params.n,
                    "k": self.params.k,
                    "d": self.params.d,
                    "raw": self.raw,
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Parses CSV produced by [`OutputRecord::render`] back into rows, using
/// only the exact columns.
pub fn parse_csv(text: &str) -> Result<Vec<OutputRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::Parse("missing CSV header".into()));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 6 {
                return Err(Error::Parse(line.to_string()));
            }
            let khat = if cols[1].is_empty() {
                None
            } else {
                Some(
                    cols[1]
                        .parse()
                        .map_err(|_| Error::Parse(cols[1].to_string()))?,
                )
            };
            Ok(OutputRow {
                series: cols[0].to_string(),
                khat,
                alpha: parse_rational(cols[2])?,
                gamma: parse_rational(cols[3])?,
                provenance: None,
            })
        })
        .collect()
}

fn raw_row(series: &str, prov: Provenance, raw: crate::tradeoff::RawPoint) -> OutputRow {
    OutputRow {
        series: series.to_string(),
        khat: prov.k_hat(),
        alpha: raw.alpha,
        gamma: raw.gamma,
        provenance: Some(prov),
    }
}

/// A single point.
pub fn cmd_point(
    params: &SystemParams,
    construction: Construction,
    k_hat: Option<usize>,
    raw: bool,
) -> Result<OutputRecord> {
    let need_k_hat =
        || k_hat.ok_or_else(|| Error::InvalidParams("this construction needs --khat".into()));
    let row = match construction {
        Construction::Msr => OutputRow::from_point("msr", &msr_point(params)),
        Construction::Mbr => OutputRow::from_point("mbr", &mbr_point(params)),
        Construction::C1 => {
            let kh = need_k_hat()?;
            if raw {
                raw_row(
                    "c1",
                    Provenance::Construction1(kh),
                    construction1_raw(params, kh)?,
                )
            } else {
                OutputRow::from_point("c1", &construction1_point(params, kh)?)
            }
        }
        Construction::C2 => {
            let kh = need_k_hat()?;
            if raw {
                raw_row(
                    "c2",
                    Provenance::Construction2(kh),
                    construction2_raw(params, kh)?,
                )
            } else {
                OutputRow::from_point("c2", &construction2_point(params, kh)?)
            }
        }
        Construction::Baseline => {
            let kh = need_k_hat()?;
            if raw {
                raw_row(
                    "baseline",
                    Provenance::Baseline(kh),
                    baseline_raw(params, kh)?,
                )
            } else {
                OutputRow::from_point("baseline", &baseline_point(params, kh)?)
            }
        }
    };
    Ok(OutputRecord {
        params: params.clone(),
        raw,
        rows: vec![row],
    })
}

/// Smallest functional-repair bandwidth at a given storage, as a one-row record.
pub fn cmd_functional(params: &SystemParams, alpha: &Rational) -> Result<OutputRecord> {
    let gamma = min_functional_gamma(params, alpha)?;
    Ok(OutputRecord {
        params: params.clone(),
        raw: false,
        rows: vec![OutputRow {
            series: "functional".into(),
            khat: None,
            alpha: alpha.clone(),
            gamma,
            provenance: None,
        }],
    })
}

/// The selected series, in the fixed order of [`Series::ALL`].
pub fn cmd_region(params: &SystemParams, series: &[Series], raw: bool) -> Result<OutputRecord> {
    let mut rows = Vec::new();
    let mut selected = series.to_vec();
    selected.sort();
    selected.dedup();
    for s in selected {
        let name = s.name();
        match s {
            Series::Functional => {
                rows.extend(
                    functional_vertices(params)
                        .iter()
                        .map(|p| OutputRow::from_point(name, p)),
                );
            }
            Series::SpaceShare => {
                rows.extend(
                    space_sharing_curve(params)
                        .anchors
                        .iter()
                        .map(|p| OutputRow::from_point(name, p)),
                );
            }
            Series::Baseline => {
                for kh in 1..=params.d {
                    rows.push(if raw {
                        raw_row(name, Provenance::Baseline(kh), baseline_raw(params, kh)?)
                    } else {
                        OutputRow::from_point(name, &baseline_point(params, kh)?)
                    });
                }
            }
            Series::C1 => {
                for kh in 1..=params.k {
                    rows.push(if raw {
                        raw_row(
                            name,
                            Provenance::Construction1(kh),
                            construction1_raw(params, kh)?,
                        )
                    } else {
                        OutputRow::from_point(name, &construction1_point(params, kh)?)
                    });
                }
            }
            Series::C2 => {
                for kh in 1..=params.d {
                    rows.push(if raw {
                        raw_row(
                            name,
                            Provenance::Construction2(kh),
                            construction2_raw(params, kh)?,
                        )
                    } else {
                        OutputRow::from_point(name, &construction2_point(params, kh)?)
                    });
                }
            }
            Series::Hull => {
                let hull = theorem2_region(params)?.hull_vertices()?;
                rows.extend(hull.iter().map(|p| OutputRow::from_point(name, p)));
            }
        }
    }
    Ok(OutputRecord {
        params: params.clone(),
        raw,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub params: SystemParams,
    pub k_hat: usize,
    pub oracle: Rational,
    pub closed_form: Rational,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.oracle == self.closed_form
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => format!(
                "n,k,d,khat,oracle_exact,closed_form_exact,oracle,agree\n{},{},{},{},{},{},{},{}\n",
                self.params.n,
                self.params.k,
                self.params.d,
                self.k_hat,
                to_exact_string(&self.oracle),
                to_exact_string(&self.closed_form),
                to_decimal(&self.oracle, DECIMAL_PLACES),
                self.agrees()
            ),
            Format::Json => {
                let v = json!({
                    "n": self.params.n, "k": self.params.k, "d": self.params.d,
                    "khat": self.k_hat,
                    "oracle_exact": to_exact_string(&self.oracle),
                    "closed_form_exact": to_exact_string(&self.closed_form),
                    "oracle": to_decimal(&self.oracle, DECIMAL_PLACES),
                    "agree": self.agrees(),
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("json values serialize")
                )
            }
        }
    }
}

pub fn cmd_oracle(params: &SystemParams, k_hat: usize, cap_override: bool) -> Result<OracleReport> {
    let cap = if cap_override {
        usize::MAX
    } else {
        DEFAULT_ORACLE_MAX_NODES
    };
    let oracle = mk_oracle_with_cap(params, k_hat, cap)?;
    let small = match_small_code(params, k_hat, ParityRule::Repair)?;
    let closed_form = construction2_file_size(params, &small)?;
    Ok(OracleReport {
        params: params.clone(),
        k_hat,
        oracle,
        closed_form,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyCheck {
    pub name: String,
    pub measured: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub params: SystemParams,
    pub k_hat: usize,
    pub seed: u64,
    pub field: u32,
    pub copies: usize,
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = format!(
                    "# verify (n,k,d) = {} khat = {} field = GF({}) seed = {} copies = {}\n",
                    self.params, self.k_hat, self.field, self.seed, self.copies
                );
                out.push_str("check,measured,expected,status\n");
                for c in &self.checks {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        c.name,
                        c.measured,
                        c.expected,
                        if c.pass { "PASS" } else { "FAIL" }
                    );
                }
                let _ = writeln!(
                    out,
                    "overall,,,{}",
                    if self.passed() { "PASS" } else { "FAIL" }
                );
                out
            }
            Format::Json => {
                let checks: Vec<_> = self
                    .checks
                    .iter()
                    .map(|c| json!({"check": c.name, "measured": c.measured, "expected": c.expected, "pass": c.pass}))
                    .collect();
                let v = json!({
                    "n": self.params.n, "k": self.params.k, "d": self.params.d,
                    "khat": self.k_hat, "field": self.field, "seed": self.seed,
                    "copies": self.copies, "checks": checks, "pass": self.passed(),
                });
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&v).expect("json values serialize")
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub field: u32,
    pub cap_override: bool,
    /// Negative-control hook: perturb `(node, copy)` before sweeping.
    pub tamper: Option<(usize, usize)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            field: DEFAULT_FIELD_ORDER,
            cap_override: false,
            tamper: None,
        }
    }
}

/// Builds, glues and sweeps the concrete code, comparing measurements with
/// the analytic construction-1 values. Failures of the sweep itself (a
/// wrong repair or reconstruction) are reported as failed checks.
pub fn cmd_verify(
    params: &SystemParams,
    k_hat: usize,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    if params.n - params.k != 2 {
        return Err(Error::InvalidParams(format!(
            "concrete codes need n - k = 2, got {}",
            params
        )));
    }
    if params.d > params.k + 1 {
        return Err(Error::InvalidParams(format!(
            "concrete codes need d in {{k, k+1}}, got {}",
            params
        )));
    }
    if k_hat < 1 || k_hat > params.k {
        return Err(Error::OutOfRange {
            name: "k_hat",
            value: k_hat as i64,
            lo: 1,
            hi: params.k as i64,
        });
    }
    let field = PrimeField::new(opts.field)?;
    let glue = GlueOptions {
        seed: opts.seed,
        max_nodes: if opts.cap_override {
            usize::MAX
        } else {
            DEFAULT_MAX_GLUE_NODES
        },
    };
    let mut code = build_glued(params.n, k_hat, field, &glue)?;
    if let Some((node, copy)) = opts.tamper {
        code.tamper(node, copy)?;
    }

    let analytic = construction1_point(params, k_hat)?;
    let n_hat = k_hat + 2;
    let gamma1 = &analytic.gamma * Rational::new((params.n as i64).into(), (n_hat as i64).into());

    let mut checks = Vec::new();
    let mut push = |name: String, measured: String, expected: String, pass: bool| {
        checks.push(VerifyCheck {
            name,
            measured,
            expected,
            pass,
        });
    };

    let storage: Vec<Rational> = (0..params.n).map(|v| code.normalized_storage(v)).collect();
    let uniform = storage.iter().all(|s| *s == storage[0]);
    push(
        "alpha".into(),
        to_exact_string(&storage[0]),
        to_exact_string(&analytic.alpha),
        uniform && storage[0] == analytic.alpha,
    );

    match sweep_repairs(&code, params.d) {
        Ok(ledger) => {
            push(
                "gamma".into(),
                to_exact_string(&ledger.gamma),
                to_exact_string(&analytic.gamma),
                ledger.gamma == analytic.gamma,
            );
            push(
                "gamma_nonempty".into(),
                to_exact_string(&ledger.nonempty_gamma),
                to_exact_string(&gamma1),
                ledger.nonempty_gamma == gamma1,
            );
            for (i, g) in ledger.node_gamma.iter().enumerate() {
                push(
                    format!("gamma_{i}"),
                    to_exact_string(g),
                    to_exact_string(&analytic.gamma),
                    *g == analytic.gamma,
                );
            }
            push(
                "repairs".into(),
                format!("{} exact", ledger.records.len() * code.copies.len()),
                String::new(),
                true,
            );
        }
        Err(e) => push("repairs".into(), e.to_string(), "all exact".into(), false),
    }

    match sweep_reconstructions(&code, params.k) {
        Ok(count) => push(
            "reconstructions".into(),
            format!("{count} exact"),
            String::new(),
            true,
        ),
        Err(e) => push(
            "reconstructions".into(),
            e.to_string(),
            "all exact".into(),
            false,
        ),
    }

    Ok(VerifyReport {
        params: params.clone(),
        k_hat,
        seed: opts.seed,
        field: opts.field,
        copies: code.copies.len(),
        checks,
    })
}
