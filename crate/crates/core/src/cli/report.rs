use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::coint::TestResult;
use crate::sim::{EmpiricalPValue, H0SimConfig};
use crate::tables::{QuantileTable, LEVELS, SIGNIFICANCE_LEVELS};

/// JSON number, or the strings `"inf"` / `"-inf"` / `"nan"` for
/// non-finite values.
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        json!("nan")
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn fmt_stat(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.7}")
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn fmt_quantile(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.2}")
    } else {
        "-Inf".into()
    }
}

pub fn test_report(res: &TestResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Cointegration test for high-dimensional VAR(k)");
    let _ = writeln!(s, "===============================================");
    let _ = writeln!(s, "n: {}", res.n);
    let _ = writeln!(s, "t: {}", res.t);
    let _ = writeln!(s, "k: {}", res.k);
    let _ = writeln!(s, "r: {}", res.r);
    let _ = writeln!(s, "alpha: {:.2}", res.alpha);
    let _ = writeln!(s, "lambda_minus: {:.7}", res.params.lambda_minus);
    let _ = writeln!(s, "lambda_plus: {:.7}", res.params.lambda_plus);
    let _ = writeln!(s, "c1: {:.7}", res.params.c1);
    let _ = writeln!(s, "c2: {:.7}", res.params.c2);
    let _ = writeln!(s, "lr_raw: {}", fmt_stat(res.lr_raw));
    if let Some(row) = res.significance_table.get(res.r - 1) {
        for (lvl, q) in SIGNIFICANCE_LEVELS.iter().zip(row.quantiles) {
            let _ = writeln!(s, "quantile_0.{lvl}: {}", fmt_quantile(q));
        }
        let _ = writeln!(s, "If the test statistic is larger than the quantile, reject H0.");
    }
    let _ = writeln!(s, "statistic: {}", fmt_stat(res.statistic));
    match (res.p_value, res.decision) {
        (Some(p), Some(d)) => {
            let _ = writeln!(s, "p_value: {p:.2}");
            let _ = writeln!(s, "decision: {}", u8::from(d));
        }
        _ => {
            let _ = writeln!(
                s,
                "note: p-value and decision are available only for r = 1..10"
            );
        }
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "Significance table");
    let _ = writeln!(s, "{:<6}{:>9}{:>9}{:>9}{:>9}{:>14}", "", "0.90", "0.95", "0.97", "0.99", "Test stat.");
    for row in &res.significance_table {
        let _ = write!(s, "{:<6}", format!("r={}", row.r));
        for q in row.quantiles {
            let _ = write!(s, "{:>9}", fmt_quantile(q));
        }
        let _ = writeln!(s, "{:>14}", fmt_stat(row.statistic));
    }
    s
}

pub fn test_json(res: &TestResult) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(res.n));
    m.insert("t".into(), json!(res.t));
    m.insert("k".into(), json!(res.k));
    m.insert("r".into(), json!(res.r));
    m.insert("alpha".into(), num(res.alpha));
    m.insert(
        "eigenvalues".into(),
        Value::Array(res.eigenvalues.iter().map(|&e| num(e)).collect()),
    );
    m.insert("lr_raw".into(), num(res.lr_raw));
    m.insert("statistic".into(), num(res.statistic));
    m.insert("c1".into(), num(res.params.c1));
    m.insert("c2".into(), num(res.params.c2));
    m.insert("lambda_minus".into(), num(res.params.lambda_minus));
    m.insert("lambda_plus".into(), num(res.params.lambda_plus));
    if let Some(row) = res.significance_table.get(res.r - 1) {
        for (lvl, q) in SIGNIFICANCE_LEVELS.iter().zip(row.quantiles) {
            m.insert(format!("quantile_0.{lvl}"), num(q));
        }
    }
    m.insert("p_value".into(), res.p_value.map_or(Value::Null, num));
    m.insert(
        "decision".into(),
        res.decision.map_or(Value::Null, |d| json!(u8::from(d))),
    );
    m.insert(
        "significance_table".into(),
        Value::Array(
            res.significance_table
                .iter()
                .map(|row| {
                    json!({
                        "r": row.r,
                        "q0.90": num(row.quantiles[0]),
                        "q0.95": num(row.quantiles[1]),
                        "q0.97": num(row.quantiles[2]),
                        "q0.99": num(row.quantiles[3]),
                        "statistic": num(row.statistic),
                    })
                })
                .collect(),
        ),
    );
    Value::Object(m)
}

/// 10×10 grid: row `0.a`, column `b` holds the `0.ab` quantile.
pub fn quantile_grid(table: &QuantileTable) -> String {
    let mut s = String::new();
    let _ = write!(s, "{:<5}", "");
    for c in 0..10 {
        let _ = write!(s, "{c:>8}");
    }
    let _ = writeln!(s);
    for row in 0..10 {
        let _ = write!(s, "{:<5}", format!("0.{row}"));
        for c in 0..10 {
            let _ = write!(s, "{:>8}", fmt_quantile(table.at(row * 10 + c)));
        }
        let _ = writeln!(s);
    }
    s
}

pub fn quantiles_json(table: &QuantileTable) -> Value {
    let levels: Map<String, Value> = (0..LEVELS)
        .map(|i| (format!("0.{i:02}"), num(table.at(i))))
        .collect();
    json!({ "r": table.r(), "quantiles": levels })
}

pub(super) fn simulate_report(cfg: &H0SimConfig, stat: f64, res: &EmpiricalPValue) -> String {
    format!(
        "Simulated null distribution of the test statistic\n\
         n: {}\ntau: {}\nk: {}\nr: {}\nsims: {}\nseed: {}\nstat_value: {}\n\
         empirical_p_value: {}\n",
        cfg.n,
        cfg.tau,
        cfg.k,
        cfg.r,
        cfg.sim_num,
        res.seed,
        fmt_stat(stat),
        res.p_value
    )
}
