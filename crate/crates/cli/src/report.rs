use std::collections::BTreeMap;
use std::fmt::Write as _;

use hochschild_core::{IntPolynomial, Permutation};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One asserted equality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub passed: bool,
}

/// The outcome of one command. Optional fields are omitted from JSON when absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub strata: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<Number>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            n: None,
            polynomial: None,
            strata: BTreeMap::new(),
            euler: None,
            checks: Vec::new(),
            details: BTreeMap::new(),
            status: Status::Pass,
            ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Records `expected == actual`; a failed check fails the report.
    pub fn check(
        &mut self,
        name: &str,
        expected: impl Into<Value>,
        actual: impl Into<Value>,
    ) -> bool {
        let (expected, actual) = (expected.into(), actual.into());
        let passed = expected == actual;
        if !passed {
            self.status = Status::Fail;
        }
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            actual,
            passed,
        });
        passed
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect();
        let _ = writeln!(out, "{} {}", self.command, params.join(" "));
        if let Some(poly) = &self.polynomial {
            let _ = writeln!(out, "polynomial: {}", render_polynomial(poly));
        }
        if !self.strata.is_empty() {
            let width = self
                .strata
                .keys()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max(1);
            let _ = writeln!(out, "{:<width$}  value", "w");
            for (w, v) in &self.strata {
                let value = match v {
                    Value::Array(coefficients) => render_values(coefficients),
                    other => plain(other),
                };
                let _ = writeln!(out, "{w:<width$}  {value}");
            }
        }
        if let Some(euler) = &self.euler {
            let _ = writeln!(out, "euler characteristic: {euler}");
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "{k}: {}", plain(v));
        }
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "[{mark}] {}: expected {}, got {}",
                c.name,
                plain(&c.expected),
                plain(&c.actual)
            );
        }
        let _ = writeln!(
            out,
            "status: {}",
            if self.passed() { "pass" } else { "fail" }
        );
        if let Some(ms) = self.ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_values(coefficients: &[Value]) -> String {
    let parsed: Option<Vec<BigInt>> = coefficients
        .iter()
        .map(|c| match c {
            Value::Number(n) => n.to_string().parse().ok(),
            _ => None,
        })
        .collect();
    match parsed {
        Some(c) => IntPolynomial::from_coefficients(c).to_string(),
        None => Value::Array(coefficients.to_vec()).to_string(),
    }
}

fn render_polynomial(coefficients: &[Number]) -> String {
    render_values(
        &coefficients
            .iter()
            .cloned()
            .map(Value::Number)
            .collect::<Vec<_>>(),
    )
}

pub fn number(x: &BigInt) -> Number {
    x.to_string()
        .parse()
        .expect("integers are valid JSON numbers")
}

pub fn number_value(x: &BigInt) -> Value {
    Value::Number(number(x))
}

/// Ascending coefficients.
pub fn coefficients(p: &IntPolynomial) -> Vec<Number> {
    p.coefficients().iter().map(number).collect()
}

pub fn polynomial_value(p: &IntPolynomial) -> Value {
    Value::Array(coefficients(p).into_iter().map(Value::Number).collect())
}

/// Compact label: the one-line window, e.g. `213`.
pub fn label(w: &Permutation) -> String {
    w.window()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(if w.rank() > 9 { "," } else { "" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = RunReport::new("euler");
        r.param("n", 2);
        r.n = Some(2);
        r.polynomial = Some(coefficients(&IntPolynomial::from_coefficients([
            0, 1, 0, 1,
        ])));
        r.euler = Some(number(&BigInt::from(2)));
        r.check("euler", 2, 2);
        r.strata
            .insert("12".into(), polynomial_value(&IntPolynomial::monomial(2)));
        let json = r.to_json();
        assert_eq!(RunReport::from_json(&json).unwrap(), r);
        assert!(json.contains("\"polynomial\": [\n    0,\n    1,\n    0,\n    1\n  ]"));
    }

    #[test]
    fn big_numbers_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut r = RunReport::new("x");
        r.euler = Some(number(&big));
        let back = RunReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back.euler.unwrap().to_string(), big.to_string());
    }

    #[test]
    fn failed_check_fails_report() {
        let mut r = RunReport::new("x");
        assert!(!r.check("c", 1, 2));
        assert_eq!(r.status, Status::Fail);
        assert!(r.to_table().contains("[FAIL] c: expected 1, got 2"));
    }

    #[test]
    fn labels() {
        assert_eq!(label(&Permutation::from_window(&[2, 1, 3]).unwrap()), "213");
    }
}
