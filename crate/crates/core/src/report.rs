//! Serialized forms of a net and the sample-file reader.
//!
//! JSON output is canonical: fixed field order, floats printed with 17
//! significant digits in exponent form, infinite interval ends as the strings
//! `"-inf"` and `"+inf"`. Parsing a report and writing it again reproduces
//! the same bytes.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::net::ConfidenceNet;

#[derive(Debug, Clone, PartialEq)]
pub struct IntervalReport {
    pub lo: f64,
    pub hi: f64,
    pub num: i64,
    pub den: i64,
}

impl IntervalReport {
    pub fn prob(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetReport {
    pub group: String,
    pub n: usize,
    pub boundaries: Vec<f64>,
    pub intervals: Vec<IntervalReport>,
    pub warnings: Vec<String>,
    pub gf: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" | "txt" => Ok(Format::Text),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

impl NetReport {
    /// `gf` lists the unmerged generating-function coefficients.
    pub fn new(net: &ConfidenceNet, n: usize, gf: Vec<u64>) -> Self {
        let intervals = net
            .probs
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let (lo, hi) = net.interval(j);
                IntervalReport {
                    lo,
                    hi,
                    num: *p.numer(),
                    den: *p.denom(),
                }
            })
            .collect();
        NetReport {
            group: net.kind.to_string(),
            n,
            boundaries: net.boundaries.clone(),
            intervals,
            warnings: net.merged.clone(),
            gf,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\"group\":");
        s.push_str(&json_string(&self.group));
        write!(s, ",\"n\":{}", self.n).unwrap();
        s.push_str(",\"boundaries\":[");
        join_into(&mut s, self.boundaries.iter().map(|&b| format_float(b)));
        s.push_str("],\"intervals\":[");
        join_into(
            &mut s,
            self.intervals.iter().map(|iv| {
                format!(
                    "{{\"lo\":{},\"hi\":{},\"num\":{},\"den\":{}}}",
                    format_end(iv.lo),
                    format_end(iv.hi),
                    iv.num,
                    iv.den
                )
            }),
        );
        s.push_str("],\"warnings\":[");
        join_into(&mut s, self.warnings.iter().map(|w| json_string(w)));
        s.push_str("],\"gf\":[");
        join_into(&mut s, self.gf.iter().map(u64::to_string));
        s.push_str("]}");
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("report JSON: {what}"));
        let v: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let field = |k: &str| obj.get(k).ok_or_else(|| bad(&format!("missing field {k}")));
        let array = |k: &str| -> Result<&Vec<Value>> {
            field(k)?
                .as_array()
                .ok_or_else(|| bad(&format!("{k} must be an array")))
        };
        let float = |x: &Value| x.as_f64().ok_or_else(|| bad("expected a number"));
        let end = |x: &Value| match x.as_str() {
            Some("-inf") => Ok(f64::NEG_INFINITY),
            Some("+inf") => Ok(f64::INFINITY),
            Some(other) => Err(bad(&format!("unexpected interval end {other:?}"))),
            None => float(x),
        };
        let int = |x: &Value| x.as_i64().ok_or_else(|| bad("expected an integer"));

        let intervals = array("intervals")?
            .iter()
            .map(|iv| {
                let get = |k: &str| {
                    iv.get(k)
                        .ok_or_else(|| bad(&format!("interval missing {k}")))
                };
                Ok(IntervalReport {
                    lo: end(get("lo")?)?,
                    hi: end(get("hi")?)?,
                    num: int(get("num")?)?,
                    den: int(get("den")?)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(NetReport {
            group: field("group")?
                .as_str()
                .ok_or_else(|| bad("group must be a string"))?
                .to_string(),
            n: field("n")?
                .as_u64()
                .and_then(|n| n.to_usize())
                .ok_or_else(|| bad("n must be a nonnegative integer"))?,
            boundaries: array("boundaries")?
                .iter()
                .map(float)
                .collect::<Result<_>>()?,
            intervals,
            warnings: array("warnings")?
                .iter()
                .map(|w| {
                    w.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad("warning must be a string"))
                })
                .collect::<Result<_>>()?,
            gf: array("gf")?
                .iter()
                .map(|c| {
                    c.as_u64()
                        .ok_or_else(|| bad("gf entries must be nonnegative integers"))
                })
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("interval,lo,hi,num,den,prob\n");
        for (j, iv) in self.intervals.iter().enumerate() {
            writeln!(
                s,
                "{j},{},{},{},{},{}",
                plain_end(iv.lo),
                plain_end(iv.hi),
                iv.num,
                iv.den,
                format_float(iv.prob())
            )
            .unwrap();
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "group {}  n = {}  intervals = {}",
            self.group,
            self.n,
            self.intervals.len()
        )
        .unwrap();
        for (j, iv) in self.intervals.iter().enumerate() {
            let frac = format!("{}/{}", iv.num, iv.den);
            writeln!(
                s,
                "U_{j:<3} ({:>12}, {:>12})  {frac:>12}  {:.6}",
                plain_end(iv.lo),
                plain_end(iv.hi),
                iv.prob()
            )
            .unwrap();
        }
        for w in &self.warnings {
            writeln!(s, "warning: {w}").unwrap();
        }
        s
    }
}

fn join_into(s: &mut String, items: impl Iterator<Item = String>) {
    for (i, item) in items.enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&item);
    }
}

/// Seventeen significant digits, which round-trips every finite `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_end(x: f64) -> String {
    if x == f64::NEG_INFINITY {
        "\"-inf\"".into()
    } else if x == f64::INFINITY {
        "\"+inf\"".into()
    } else {
        format_float(x)
    }
}

fn plain_end(x: f64) -> String {
    if x.is_infinite() {
        if x < 0.0 { "-inf" } else { "+inf" }.into()
    } else {
        format!("{x}")
    }
}

fn json_string(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

/// Reads one sample: numbers separated by commas and/or newlines. Blank lines
/// and anything after `#` are ignored.
pub fn parse_sample(text: &str) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for field in line.split(',') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let x: f64 = field.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("cannot parse {field:?} as a number"),
            })?;
            if !x.is_finite() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("value {field:?} is not finite"),
                });
            }
            values.push(x);
        }
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "no values found".into(),
        });
    }
    Ok(values)
}
