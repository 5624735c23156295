//! Sweep reports and their CSV and JSON forms.
//!
//! CSV columns, in order:
//!
//! | column | meaning |
//! |---|---|
//! | `n` | size of the shape |
//! | `partition` | comma-separated parts (quoted) |
//! | `ln_f` | `ln f^λ` |
//! | `ln_f_per_n` | `ln f^λ / n` |
//! | `rhs_log` | `n ln β` |
//! | `rhs_per_n` | `ln β` |
//! | `margin` | `ln_f - rhs_log` |
//! | `mode` | `exact` or `log-domain` |
//! | `verdict` | `PASS`, `MARGINAL`, `FAIL` or `HYPOTHESIS` |
//! | `class` | `M1`, `M2` or `M3` |
//! | `dispatched` | bound covering the class |
//! | `dispatched_rhs_per_n` | that bound's right-hand log over `n` |
//! | `dispatched_verdict` | that bound's verdict, or `HYPOTHESIS` |
//! | `detail` | hypothesis message, when there is one |
//!
//! Logs are written with 15 significant digits.

use std::io::Write;

use hookgrowth::certify::{BoundCertificate, BoundName, Comparison, GrowthClass, Mode, Verdict};
use hookgrowth::{Partition, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::sweep::{Family, SweepFormat};
use crate::{CliError, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_PASS};

pub const CSV_HEADER: [&str; 14] = [
    "n",
    "partition",
    "ln_f",
    "ln_f_per_n",
    "rhs_log",
    "rhs_per_n",
    "margin",
    "mode",
    "verdict",
    "class",
    "dispatched",
    "dispatched_rhs_per_n",
    "dispatched_verdict",
    "detail",
];

/// A log value with 15 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.14e}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub alpha: Rational,
    pub beta: Rational,
    pub n_from: usize,
    pub n_to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub n: usize,
    pub partition: Partition,
    pub ln_f: f64,
    pub rhs_log: Option<f64>,
    pub margin: Option<f64>,
    pub mode: Option<Mode>,
    /// `None` when the shape falls outside the theorem's hypotheses.
    pub verdict: Option<Verdict>,
    pub class: Option<GrowthClass>,
    pub dispatched: Option<BoundName>,
    pub dispatched_rhs_log: Option<f64>,
    pub dispatched_verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl GrowthRow {
    pub fn from_certificate(cert: &BoundCertificate) -> Self {
        let dispatched = cert.dispatched.as_deref();
        let detail = cert
            .parameters
            .get("dispatch_error")
            .and_then(|v| v.as_str())
            .map(str::to_string);
        GrowthRow {
            n: cert.partition.size(),
            partition: cert.partition.clone(),
            ln_f: cert.lhs_log,
            rhs_log: Some(cert.rhs_log),
            margin: Some(cert.margin),
            mode: Some(cert.mode),
            verdict: Some(cert.verdict),
            class: cert.class,
            dispatched: dispatched.map(|d| d.bound_name),
            dispatched_rhs_log: dispatched.map(|d| d.rhs_log),
            dispatched_verdict: dispatched.map(|d| d.verdict),
            detail,
        }
    }

    pub fn hypothesis(partition: &Partition, ln_f: f64, message: String) -> Self {
        GrowthRow {
            n: partition.size(),
            partition: partition.clone(),
            ln_f,
            rhs_log: None,
            margin: None,
            mode: None,
            verdict: None,
            class: None,
            dispatched: None,
            dispatched_rhs_log: None,
            dispatched_verdict: None,
            detail: Some(message),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict.is_some_and(Verdict::is_pass)
    }

    /// True when the verdict follows from `ln_f`, `rhs_log`, `margin` and
    /// `mode` alone.
    pub fn revalidates(&self) -> bool {
        match (self.rhs_log, self.margin, self.mode, self.verdict) {
            (Some(rhs_log), Some(margin), Some(mode), Some(verdict)) => Comparison {
                name: "theorem".into(),
                lhs_log: self.ln_f,
                rhs_log,
                margin,
                mode,
                verdict,
            }
            .revalidates(),
            (None, None, None, None) => true,
            _ => false,
        }
    }

    fn csv_record(&self) -> Vec<String> {
        let n = self.n.max(1) as f64;
        let opt = |x: Option<f64>| x.map(sci).unwrap_or_default();
        let verdict = |v: Option<Verdict>| match v {
            Some(v) => label(&v),
            None => "HYPOTHESIS".to_string(),
        };
        vec![
            self.n.to_string(),
            self.partition.to_string(),
            sci(self.ln_f),
            sci(self.ln_f / n),
            opt(self.rhs_log),
            opt(self.rhs_log.map(|r| r / n)),
            opt(self.margin),
            self.mode.map(|m| label(&m)).unwrap_or_default(),
            verdict(self.verdict),
            self.class.map(|c| c.to_string()).unwrap_or_default(),
            self.dispatched
                .map(|b| b.as_str().to_string())
                .unwrap_or_default(),
            opt(self.dispatched_rhs_log.map(|r| r / n)),
            if self.class.is_some() {
                verdict(self.dispatched_verdict)
            } else {
                String::new()
            },
            self.detail.clone().unwrap_or_default(),
        ]
    }
}

/// The serialized name of a unit enum variant.
fn label<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        _ => unreachable!("unit variants serialize as strings"),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub family: FamilySpec,
    pub rows: Vec<GrowthRow>,
    /// Least `n` from which every row in the tested range passes.
    #[serde(serialize_with = "ser_n0", deserialize_with = "de_n0")]
    pub n0: Option<usize>,
    /// Values of `n` whose constrained family is empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub empty_n: Vec<usize>,
}

fn ser_n0<S: Serializer>(n0: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match n0 {
        Some(n) => s.serialize_u64(*n as u64),
        None => s.serialize_str("not reached"),
    }
}

fn de_n0<'de, D: Deserializer<'de>>(d: D) -> Result<Option<usize>, D::Error> {
    match serde_json::Value::deserialize(d)? {
        serde_json::Value::Number(n) => n
            .as_u64()
            .map(|n| Some(n as usize))
            .ok_or_else(|| serde::de::Error::custom("n0 must be a non-negative integer")),
        serde_json::Value::String(s) if s == "not reached" => Ok(None),
        other => Err(serde::de::Error::custom(format!("bad n0 {other}"))),
    }
}

/// Least tested `n` above every size with a row that does not pass.
pub fn empirical_n0(rows: &[GrowthRow]) -> Option<usize> {
    let last_bad = rows.iter().filter(|r| !r.is_pass()).map(|r| r.n).max();
    rows.iter()
        .map(|r| r.n)
        .filter(|&n| last_bad.is_none_or(|b| n > b))
        .min()
}

impl GrowthReport {
    pub fn new(family: FamilySpec, rows: Vec<GrowthRow>, empty_n: Vec<usize>) -> Self {
        let n0 = empirical_n0(&rows);
        GrowthReport {
            family,
            rows,
            n0,
            empty_n,
        }
    }

    pub fn n0_text(&self) -> String {
        self.n0
            .map(|n| n.to_string())
            .unwrap_or_else(|| "not reached".into())
    }

    pub fn exit_code(&self) -> i32 {
        if self
            .rows
            .iter()
            .any(|r| r.verdict.is_some() && !r.is_pass())
        {
            EXIT_FAIL
        } else if self.rows.iter().any(|r| r.verdict.is_none()) {
            EXIT_HYPOTHESIS
        } else {
            EXIT_PASS
        }
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for row in &self.rows {
            w.write_record(row.csv_record())?;
        }
        w.into_inner()
            .map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Writes the report; in CSV mode `n0` and empty sizes go to `err`.
    pub fn write(
        &self,
        format: SweepFormat,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> Result<(), CliError> {
        match format {
            SweepFormat::Csv => {
                out.write_all(&self.to_csv()?)?;
                if !self.empty_n.is_empty() {
                    writeln!(err, "no constrained shapes for n in {:?}", self.empty_n)?;
                }
                writeln!(err, "n0: {}", self.n0_text())?;
            }
            SweepFormat::Json => writeln!(out, "{}", self.to_json())?,
        }
        Ok(())
    }
}
