//! Machine readable result records.
//!
//! Every command emits one record per instance. The default output is JSON
//! Lines; `--format csv` flattens the subset (instance, g, h, ms). Field
//! order is fixed by the struct, map keys are sorted, and nothing varying
//! between runs is emitted unless `--timing` asks for it, so output is byte
//! reproducible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Timeout,
}

/// A solved parameter: the exact value, or the timeout marker when the
/// budget expired before optimality was proved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Answer {
    Exact(usize),
    Status(Status),
}

impl Answer {
    pub fn exact(self) -> Option<usize> {
        match self {
            Answer::Exact(v) => Some(v),
            Answer::Status(_) => None,
        }
    }
}

/// Reference value a computed parameter is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Expected {
    Exact(usize),
    Range { min: usize, max: usize },
}

impl Expected {
    pub fn admits(self, value: usize) -> bool {
        match self {
            Expected::Exact(want) => value == want,
            Expected::Range { min, max } => (min..=max).contains(&value),
        }
    }
}

/// Aggregated result of one named property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CheckCell {
    pub passes: u64,
    pub skips: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub schema_version: u32,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<u16>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Answer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Answer>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_g: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_h: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_g: Option<Expected>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_h: Option<Expected>,
    /// Whether every computed value met its expectation; absent when there
    /// was nothing to compare or a timeout left the comparison undecided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eccentric: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contour: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periphery: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<BTreeMap<String, CheckCell>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

impl ResultRecord {
    pub const CSV_HEADER: &'static str = "instance,g,h,ms";

    pub fn new(instance: impl Into<String>) -> ResultRecord {
        ResultRecord {
            schema_version: 1,
            instance: instance.into(),
            order: None,
            size: None,
            diameter: None,
            radius: None,
            g: None,
            h: None,
            witness_g: None,
            witness_h: None,
            expected_g: None,
            expected_h: None,
            holds: None,
            ext: None,
            boundary: None,
            eccentric: None,
            contour: None,
            periphery: None,
            checks: None,
            ms: None,
        }
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("records contain no non-serializable values")
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            csv_quote(&self.instance),
            answer_cell(self.g),
            answer_cell(self.h),
            self.ms.map(|v| v.to_string()).unwrap_or_default()
        )
    }
}

fn answer_cell(a: Option<Answer>) -> String {
    match a {
        None => String::new(),
        Some(Answer::Exact(v)) => v.to_string(),
        Some(Answer::Status(Status::Timeout)) => "timeout".to_string(),
    }
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn answers_round_trip_as_number_or_timeout() {
        let exact = serde_json::to_string(&Answer::Exact(5)).unwrap();
        assert_eq!(exact, "5");
        let timeout = serde_json::to_string(&Answer::Status(Status::Timeout)).unwrap();
        assert_eq!(timeout, "\"timeout\"");
        assert_eq!(serde_json::from_str::<Answer>("5").unwrap(), Answer::Exact(5));
        assert_eq!(
            serde_json::from_str::<Answer>("\"timeout\"").unwrap(),
            Answer::Status(Status::Timeout)
        );
    }

    #[test]
    fn expectations_admit_their_ranges() {
        assert!(Expected::Exact(4).admits(4));
        assert!(!Expected::Exact(4).admits(5));
        let r = Expected::Range { min: 5, max: 6 };
        assert!(r.admits(5) && r.admits(6) && !r.admits(7));
        assert_eq!(serde_json::to_string(&Expected::Exact(4)).unwrap(), "4");
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            "{\"min\":5,\"max\":6}"
        );
        assert_eq!(
            serde_json::from_str::<Expected>("{\"min\":5,\"max\":6}").unwrap(),
            r
        );
    }

    #[test]
    fn records_round_trip_through_json() {
        let mut rec = ResultRecord::new("K3 x C4");
        rec.order = Some(12);
        rec.g = Some(Answer::Exact(4));
        rec.h = Some(Answer::Status(Status::Timeout));
        rec.witness_g = Some(vec![0, 3, 5, 9]);
        rec.expected_g = Some(Expected::Range { min: 4, max: 6 });
        rec.holds = Some(true);
        let mut checks = BTreeMap::new();
        checks.insert(
            "distance_formula".to_string(),
            CheckCell {
                passes: 12,
                skips: 0,
                failures: vec![],
            },
        );
        rec.checks = Some(checks);

        let line = rec.to_jsonl();
        assert!(line.starts_with("{\"schema_version\":1,\"instance\":\"K3 x C4\""));
        let back: ResultRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
    }

    #[test]
    fn absent_fields_stay_off_the_wire() {
        let rec = ResultRecord::new("P2");
        let line = rec.to_jsonl();
        assert_eq!(line, "{\"schema_version\":1,\"instance\":\"P2\"}");
    }

    #[test]
    fn csv_rows_quote_the_instance() {
        let mut rec = ResultRecord::new("C5 x C7");
        rec.g = Some(Answer::Exact(7));
        assert_eq!(rec.to_csv_row(), "\"C5 x C7\",7,,");
        rec.h = Some(Answer::Status(Status::Timeout));
        rec.ms = Some(31);
        assert_eq!(rec.to_csv_row(), "\"C5 x C7\",7,timeout,31");
    }
}
