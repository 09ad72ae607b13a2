use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Session;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Indicators of all requested simple modules of `D(G)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndicatorReport {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassEntry>,
    pub simples: Vec<SimpleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub index: usize,
    pub rep: String,
    pub size: usize,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub g_class: usize,
    pub eta_index: usize,
    pub eta_degree: u64,
    pub indicators: Vec<IndicatorEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndicatorEntry {
    pub m: u64,
    pub value: Cyclotomic,
    pub rational: bool,
    pub pretty: String,
    pub approx: f64,
}

impl IndicatorEntry {
    pub fn new(m: u64, value: Cyclotomic) -> Self {
        let r = value.rationality();
        IndicatorEntry {
            m,
            rational: r.is_rational,
            pretty: r.pretty,
            approx: r.approx,
            value,
        }
    }
}

impl IndicatorReport {
    pub(crate) fn new(session: &Session, simples: Vec<SimpleEntry>) -> Self {
        let classes = session
            .classes()
            .classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassEntry {
                index,
                rep: c.representative.to_string(),
                size: c.size,
                order: c.element_order,
            })
            .collect();
        IndicatorReport {
            group: session.label().to_string(),
            order: session.classes().group_order() as u64,
            exponent: session.exponent(),
            classes,
            simples,
        }
    }

    /// Every reported value lies in `ℚ`.
    pub fn all_rational(&self) -> bool {
        self.values().all(|(_, e)| e.rational)
    }

    /// All `(simple, entry)` pairs in report order.
    pub fn values(&self) -> impl Iterator<Item = (&SimpleEntry, &IndicatorEntry)> {
        self.simples
            .iter()
            .flat_map(|s| s.indicators.iter().map(move |e| (s, e)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse("indicator report", e.to_string()))
    }

    /// One row per (simple, m).
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
        w.write_record([
            "group", "g_class", "g_rep", "eta_index", "eta_degree", "m", "value", "rational",
            "approx", "conductor", "coeffs",
        ])
        .map_err(csv_err)?;
        for (s, e) in self.values() {
            let coeffs: Vec<String> = e.value.coeffs().iter().map(ToString::to_string).collect();
            w.write_record([
                self.group.clone(),
                s.g_class.to_string(),
                self.classes[s.g_class].rep.clone(),
                s.eta_index.to_string(),
                s.eta_degree.to_string(),
                e.m.to_string(),
                e.pretty.clone(),
                e.rational.to_string(),
                format!("{:.12}", e.approx),
                e.value.conductor().to_string(),
                coeffs.join(" "),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    /// Aligned plain-text table: one row per simple, one column per `m`.
    pub fn to_table(&self) -> String {
        let ms: Vec<u64> = self
            .simples
            .first()
            .map(|s| s.indicators.iter().map(|e| e.m).collect())
            .unwrap_or_default();
        let mut header = vec!["class".to_string(), "rep".into(), "eta".into(), "deg".into()];
        header.extend(ms.iter().map(|m| format!("m={m}")));
        let mut rows = vec![header];
        for s in &self.simples {
            let mut row = vec![
                s.g_class.to_string(),
                self.classes[s.g_class].rep.clone(),
                s.eta_index.to_string(),
                s.eta_degree.to_string(),
            ];
            row.extend(s.indicators.iter().map(|e| e.pretty.clone()));
            rows.push(row);
        }
        let ncols = rows[0].len();
        let widths: Vec<usize> = (0..ncols)
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!(
            "group {}  order {}  exponent {}\n",
            self.group, self.order, self.exponent
        );
        for row in rows {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::construct_group;

    #[test]
    fn s3_report_formats() {
        let s = Session::new(construct_group("S3").unwrap())
            .unwrap()
            .with_label("S3");
        let r = s.all_indicators(None).unwrap();
        assert_eq!(r.simples.len(), 8);
        assert!(r.values().all(|(_, e)| e.value.to_integer().is_some()));
        assert_eq!(IndicatorReport::from_json(&r.to_json()).unwrap(), r);
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 1 + 8 * 4);
        assert!(csv.lines().nth(1).unwrap().starts_with("S3,0,(),0,1,1,1,true"));
        let table = r.to_table();
        assert!(table.contains("m=6"));
        assert_eq!(table.lines().count(), 2 + 8);
    }
}
