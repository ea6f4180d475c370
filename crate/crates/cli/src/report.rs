//! Report rows and their JSON/CSV serializations. The CSV schema is flat,
//! versioned by its leading column, and fixed so downstream diffs stay
//! stable across releases.

use std::collections::BTreeMap;

use agchull_core::conormcodes::{Prediction, PredictionKind};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Prediction slots in fixed CSV order.
pub const PREDICTION_SLOTS: [&str; 13] = [
    "prop51",
    "remark34",
    "thm32_lb",
    "thm32_eq",
    "thm41_lb",
    "thm41_eq",
    "cor42_lb",
    "cor42_eq",
    "cor43_lb",
    "cor43_eq",
    "ex52",
    "ex53",
    "ex54",
];

#[derive(Debug, Clone, Serialize)]
pub struct ConditionRow {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictionRow {
    /// CSV slot name: source label plus `_lb`/`_eq` for two-sided sources.
    pub slot: String,
    pub source: String,
    pub kind: String,
    pub value: String,
    pub applicable: bool,
    pub assumes_duality: bool,
    /// `applicable` and the predicted value agrees with the oracle hull.
    pub matched: bool,
    pub conditions: Vec<ConditionRow>,
}

impl PredictionRow {
    pub fn from_prediction(p: &Prediction, oracle_hull: usize) -> PredictionRow {
        let kind = match p.kind {
            PredictionKind::Equality => "equality",
            PredictionKind::LowerBound => "lower-bound",
        };
        let two_sided = matches!(p.source.label(), "thm32" | "thm41" | "cor42" | "cor43");
        let slot = if two_sided {
            format!(
                "{}_{}",
                p.source.label(),
                if p.kind == PredictionKind::Equality { "eq" } else { "lb" }
            )
        } else {
            p.source.label().to_string()
        };
        PredictionRow {
            slot,
            source: p.source.label().to_string(),
            kind: kind.to_string(),
            value: p.value.to_string(),
            applicable: p.applicable,
            assumes_duality: p.assumes_duality,
            matched: p.matches(oracle_hull),
            conditions: p
                .conditions
                .iter()
                .map(|c| ConditionRow { name: c.name.clone(), holds: c.holds })
                .collect(),
        }
    }
}

/// One verified instance: base-code data, extension data when present, the
/// assumption audit flags, and every prediction with its match flag.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub schema_version: u32,
    pub id: String,
    pub q: u32,
    pub n: usize,
    pub a: i64,
    pub b: i64,
    pub family: String,
    pub t: u32,
    pub m: u32,
    pub k: usize,
    pub h_base_rank: usize,
    pub h_base_intersection: usize,
    pub deg_gcd: i64,
    pub ell_gcd: i64,
    pub gcd_special: bool,
    pub gcd_divisor: String,
    pub is_lcd: bool,
    pub is_self_dual: bool,
    pub genus_ext: Option<i64>,
    pub deg_diff: Option<i64>,
    pub n_prime: Option<usize>,
    pub k_prime: Option<usize>,
    pub h_prime_rank: Option<usize>,
    pub h_prime_intersection: Option<usize>,
    pub deg_con_gcd: Option<i64>,
    pub ell_con_gcd: Option<i64>,
    pub con_gcd_divisor: Option<String>,
    pub eq3_holds: Option<bool>,
    pub eq5_necessary_lhs: Option<String>,
    pub eq5_necessary_pass: Option<bool>,
    pub eq5_empirical: Option<bool>,
    pub prime_is_lcd: Option<bool>,
    pub prime_is_self_dual: Option<bool>,
    pub lcd_preserved: Option<bool>,
    pub predictions: Vec<PredictionRow>,
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SourceSummary {
    pub applicable: usize,
    pub matched: usize,
    pub mismatched: usize,
}

/// A sweep report: ordered rows plus per-source match counts.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub rows: Vec<ReportRow>,
    pub summary: BTreeMap<String, SourceSummary>,
}

impl Report {
    pub fn new(rows: Vec<ReportRow>) -> Report {
        let mut summary: BTreeMap<String, SourceSummary> = BTreeMap::new();
        for row in &rows {
            for pred in &row.predictions {
                let entry = summary.entry(pred.slot.clone()).or_default();
                if pred.applicable {
                    entry.applicable += 1;
                    if pred.matched {
                        entry.matched += 1;
                    } else {
                        entry.mismatched += 1;
                    }
                }
            }
        }
        Report { schema_version: SCHEMA_VERSION, rows, summary }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&csv_header());
        out.push('\n');
        for row in &self.rows {
            out.push_str(&csv_row(row));
            out.push('\n');
        }
        out
    }
}

pub fn csv_header() -> String {
    let mut cols: Vec<String> = [
        "schema_version",
        "id",
        "q",
        "n",
        "a",
        "b",
        "family",
        "t",
        "m",
        "k",
        "h_base",
        "deg_gcd",
        "ell_gcd",
        "gcd_special",
        "is_lcd",
        "is_self_dual",
        "genus_ext",
        "deg_diff",
        "n_prime",
        "k_prime",
        "h_prime",
        "deg_con_gcd",
        "ell_con_gcd",
        "eq3_holds",
        "eq5_necessary_lhs",
        "eq5_necessary_pass",
        "eq5_empirical",
        "prime_is_lcd",
        "prime_is_self_dual",
        "lcd_preserved",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for slot in PREDICTION_SLOTS {
        cols.push(format!("{slot}_applicable"));
        cols.push(format!("{slot}_value"));
        cols.push(format!("{slot}_match"));
    }
    cols.push("diagnostic".to_string());
    cols.join(",")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn csv_row(row: &ReportRow) -> String {
    let mut cols: Vec<String> = vec![
        row.schema_version.to_string(),
        row.id.clone(),
        row.q.to_string(),
        row.n.to_string(),
        row.a.to_string(),
        row.b.to_string(),
        row.family.clone(),
        row.t.to_string(),
        row.m.to_string(),
        row.k.to_string(),
        row.h_base_rank.to_string(),
        row.deg_gcd.to_string(),
        row.ell_gcd.to_string(),
        row.gcd_special.to_string(),
        row.is_lcd.to_string(),
        row.is_self_dual.to_string(),
        opt(&row.genus_ext),
        opt(&row.deg_diff),
        opt(&row.n_prime),
        opt(&row.k_prime),
        opt(&row.h_prime_rank),
        opt(&row.deg_con_gcd),
        opt(&row.ell_con_gcd),
        opt(&row.eq3_holds),
        opt(&row.eq5_necessary_lhs),
        opt(&row.eq5_necessary_pass),
        opt(&row.eq5_empirical),
        opt(&row.prime_is_lcd),
        opt(&row.prime_is_self_dual),
        opt(&row.lcd_preserved),
    ];
    for slot in PREDICTION_SLOTS {
        match row.predictions.iter().find(|p| p.slot == slot) {
            Some(p) => {
                cols.push(p.applicable.to_string());
                cols.push(p.value.clone());
                cols.push(p.matched.to_string());
            }
            None => {
                cols.push(String::new());
                cols.push(String::new());
                cols.push(String::new());
            }
        }
    }
    cols.push(row.diagnostic.clone().unwrap_or_default());
    cols.into_iter().map(|c| csv_escape(&c)).collect::<Vec<_>>().join(",")
}

/// Quote a field when it carries CSV metacharacters; quotes double up.
fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
