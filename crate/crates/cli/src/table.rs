//! Output tables and their CSV / JSON encodings.

use serde_json::{json, Map, Value};

/// Metadata value: kept typed so JSON carries numbers as numbers.
#[derive(Debug, Clone, PartialEq)]
pub enum Meta {
    Text(String),
    Int(usize),
    Num(f64),
    Null,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientRow {
    pub n: usize,
    pub degree: usize,
    pub coefficient: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub meta: Vec<(&'static str, Meta)>,
    pub coefficients: Option<Vec<CoefficientRow>>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub summary: Vec<(&'static str, f64)>,
}

/// Nine significant digits, scientific.
pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

impl Meta {
    fn csv(&self) -> String {
        match self {
            Meta::Text(s) => s.clone(),
            Meta::Int(i) => i.to_string(),
            Meta::Num(x) => sci(*x),
            Meta::Null => "none".into(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Meta::Text(s) => json!(s),
            Meta::Int(i) => json!(i),
            Meta::Num(x) => json!(x),
            Meta::Null => Value::Null,
        }
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, s: &str| {
            out.push_str(s);
            out.push('\n');
        };
        line(&mut out, &format!("# hpm {}", env!("CARGO_PKG_VERSION")));
        let meta: Vec<String> = self.meta.iter().map(|(k, v)| format!("{k}={}", v.csv())).collect();
        line(&mut out, &format!("# {}", meta.join(" ")));
        if let Some(coeffs) = &self.coefficients {
            line(&mut out, "# coefficients: n,degree,coefficient");
            for c in coeffs {
                line(&mut out, &format!("# {},{},{}", c.n, c.degree, sci(c.coefficient)));
            }
        }
        if !self.summary.is_empty() {
            let s: Vec<String> = self.summary.iter().map(|(k, v)| format!("{k}={}", sci(*v))).collect();
            line(&mut out, &format!("# summary: {}", s.join(" ")));
        }
        line(&mut out, &self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| sci(x)).collect();
            line(&mut out, &cells.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut meta = Map::new();
        meta.insert("tool".into(), json!("hpm"));
        meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        for (k, v) in &self.meta {
            meta.insert((*k).into(), v.json());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(r).map(|(c, v)| ((*c).to_string(), json!(v))).collect();
                Value::Object(obj)
            })
            .collect();
        let summary: Map<String, Value> =
            self.summary.iter().map(|(k, v)| ((*k).to_string(), json!(v))).collect();

        let mut doc = Map::new();
        doc.insert("meta".into(), Value::Object(meta));
        if let Some(coeffs) = &self.coefficients {
            let list: Vec<Value> = coeffs
                .iter()
                .map(|c| json!({ "n": c.n, "degree": c.degree, "coefficient": c.coefficient }))
                .collect();
            doc.insert("coefficients".into(), Value::Array(list));
        }
        doc.insert("rows".into(), Value::Array(rows));
        doc.insert("summary".into(), Value::Object(summary));
        let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("finite table");
        text.push('\n');
        text
    }
}
