//! Per-case report records and their two serializations.
//!
//! JSON lines: one object per case, keys in this order: `theorem`, `params`
//! (an object whose keys keep the parameter order, e.g. `n`, `d`, `r`),
//! then `family`, `holds`, `a`, `exponent`, `sign`, `branch`, `residual`,
//! `detail`, `error`, `elapsed_ms`. Absent values are omitted rather than
//! written as `null`. `exponent` is `E` for the base-`q^d` congruences and
//! `F` for the integer-top one.
//!
//! CSV: a header row, then one row per case with the same columns; `params`
//! is flattened to `n=5;d=2;r=1` and absent values are empty.

use std::io::Write;
use std::time::Duration;

use anyhow::Result;
use qcong::theorems::{CheckReport, TheoremId};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

fn ordered_params<S: Serializer>(params: &[(String, i64)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(params.len()))?;
    for (k, v) in params {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    #[serde(skip)]
    pub theorem_id: TheoremId,
    pub theorem: String,
    #[serde(serialize_with = "ordered_params")]
    pub params: Vec<(String, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CaseRecord {
    pub fn new(theorem: TheoremId, params: Vec<(&str, i64)>, family: Option<String>) -> Self {
        CaseRecord {
            theorem_id: theorem,
            theorem: theorem.to_string(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            family,
            holds: false,
            a: None,
            exponent: None,
            sign: None,
            branch: None,
            residual: None,
            detail: None,
            error: None,
            elapsed_ms: None,
        }
    }

    pub fn from_report(rep: CheckReport) -> Self {
        let mut rec = CaseRecord::new(rep.theorem, rep.params, rep.family);
        rec.holds = rep.holds;
        rec.a = rep.a;
        rec.exponent = rep.exponent;
        rec.sign = rep.sign;
        rec.branch = rep.branch.map(|b| b.to_string());
        rec.residual = rep.residual;
        rec.detail = rep.detail;
        rec
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = Some(elapsed.as_secs_f64() * 1e3);
        self
    }

    /// Sort key: theorem, then parameter values in order, then family.
    pub fn sort_key(&self) -> (TheoremId, Vec<i64>, &str) {
        (self.theorem_id, self.params.iter().map(|(_, v)| *v).collect(), self.family.as_deref().unwrap_or(""))
    }

    /// One human-readable line, plus the residual on failure.
    pub fn summary_line(&self) -> String {
        let mut s = format!("{} {}", if self.holds { "PASS" } else { "FAIL" }, self.theorem);
        for (k, v) in &self.params {
            s += &format!(" {k}={v}");
        }
        if let Some(f) = &self.family {
            s += &format!(" family={f}");
        }
        if let Some(a) = self.a {
            s += &format!(" a={a}");
        }
        if let Some(e) = self.exponent {
            s += &format!(" {}={e}", if self.theorem_id == TheoremId::Thm21 { "F" } else { "E" });
        }
        if let Some(sign) = self.sign {
            s += &format!(" sign={}", if sign > 0 { "+1" } else { "-1" });
        }
        if let Some(b) = &self.branch {
            s += &format!(" branch={b}");
        }
        if let Some(d) = &self.detail {
            s += &format!(" ({d})");
        }
        if let Some(e) = &self.error {
            s += &format!(" error: {e}");
        }
        if let Some(r) = &self.residual {
            s += &format!("\n  residual: {r}");
        }
        s
    }
}

pub fn write_jsonl<W: Write>(out: &mut W, records: &[CaseRecord]) -> Result<()> {
    for rec in records {
        serde_json::to_writer(&mut *out, rec)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, records: &[CaseRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "theorem",
        "params",
        "family",
        "holds",
        "a",
        "exponent",
        "sign",
        "branch",
        "residual",
        "detail",
        "error",
        "elapsed_ms",
    ])?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for rec in records {
        let params = rec.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
        w.write_record([
            rec.theorem.clone(),
            params,
            opt(rec.family.clone()),
            rec.holds.to_string(),
            opt(rec.a.map(|v| v.to_string())),
            opt(rec.exponent.map(|v| v.to_string())),
            opt(rec.sign.map(|v| v.to_string())),
            opt(rec.branch.clone()),
            opt(rec.residual.clone()),
            opt(rec.detail.clone()),
            opt(rec.error.clone()),
            opt(rec.elapsed_ms.map(|v| format!("{v:.3}"))),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keeps_parameter_order() {
        let mut rec = CaseRecord::new(TheoremId::Thm11, vec![("n", 5), ("d", 2), ("r", 1)], Some("ones".into()));
        rec.holds = true;
        rec.sign = Some(-1);
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &[rec]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"theorem\":\"thm1.1\",\"params\":{\"n\":5,\"d\":2,\"r\":1},\"family\":\"ones\",\"holds\":true,\"sign\":-1}\n"
        );
    }

    #[test]
    fn csv_rows() {
        let rec = CaseRecord::new(TheoremId::EvenSign, vec![("n", 4)], None);
        let mut buf = Vec::new();
        write_csv(&mut buf, &[rec]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "even-sign,n=4,,false,,,,,,,,");
    }
}
