//! Verification reports: per-point comparison of a closed form with its oracle.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::exactq::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Discrepant,
}

/// Parameter ranges for a harness run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    /// Bound on partition weight (`|κ|`, `2m`).
    pub max_weight: usize,
    /// Bound on the number of variables `N`.
    pub max_vars: usize,
    /// Bound on univariate degrees and indices (`n`, `s`, `N+ℓ`).
    pub max_n: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            max_weight: 4,
            max_vars: 3,
            max_n: 10,
        }
    }
}

/// One grid point. `closed` and `oracle` are rendered scalars.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub params: Map<String, Value>,
    pub status: Status,
    pub closed: String,
    pub oracle: String,
    /// `closed / oracle`; `"inf"` when only the oracle vanishes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qpower: Option<i64>,
}

impl PointResult {
    pub fn compare(params: Map<String, Value>, closed: &Scalar, oracle: &Scalar) -> Self {
        let mut point = PointResult {
            params,
            status: Status::Equal,
            closed: closed.to_string(),
            oracle: oracle.to_string(),
            ratio: None,
            sign: None,
            qpower: None,
        };
        if closed == oracle {
            return point;
        }
        point.status = Status::Discrepant;
        match oracle.inv() {
            Some(inv) => {
                let ratio = closed * &inv;
                if let Some((sign, k)) = ratio.as_signed_q_power() {
                    point.sign = Some(sign);
                    point.qpower = Some(k);
                }
                point.ratio = Some(ratio.to_string());
            }
            None => point.ratio = Some("inf".into()),
        }
        point
    }

    pub fn is_discrepant(&self) -> bool {
        self.status == Status::Discrepant
    }

    /// Discrepant with a ratio that is not `±q^j`.
    pub fn is_non_monomial(&self) -> bool {
        self.is_discrepant() && self.qpower.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub points: usize,
    pub equal: usize,
    pub discrepant: usize,
    /// Discrepant points whose ratio is `±q^j`.
    pub monomial: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub grid: Grid,
    pub points: Vec<PointResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, grid: Grid, points: Vec<PointResult>) -> Self {
        let discrepant = points.iter().filter(|p| p.is_discrepant()).count();
        let monomial = points
            .iter()
            .filter(|p| p.is_discrepant() && p.qpower.is_some())
            .count();
        let summary = Summary {
            points: points.len(),
            equal: points.len() - discrepant,
            discrepant,
            monomial,
        };
        VerificationReport {
            identity: identity.into(),
            grid,
            points,
            summary,
        }
    }

    pub fn all_equal(&self) -> bool {
        self.summary.discrepant == 0
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &PointResult> {
        self.points.iter().filter(|p| p.is_discrepant())
    }

    /// The point whose params match every `(key, value)` given.
    pub fn find(&self, params: &[(&str, u64)]) -> Option<&PointResult> {
        self.points.iter().find(|p| {
            params
                .iter()
                .all(|(k, v)| p.params.get(*k).and_then(Value::as_u64) == Some(*v))
        })
    }
}

/// Ordered parameter map from `(name, value)` pairs.
pub fn params(pairs: &[(&str, usize)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::from(*v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let p = PointResult::compare(params(&[("n", 1)]), &Scalar::q(), &Scalar::q());
        assert_eq!(p.status, Status::Equal);
        assert!(p.ratio.is_none());

        let p = PointResult::compare(params(&[("n", 1)]), &-Scalar::q_pow(3), &Scalar::q());
        assert_eq!((p.sign, p.qpower), (Some(-1), Some(2)));
        assert_eq!(p.ratio.as_deref(), Some("-q^2"));

        let p = PointResult::compare(params(&[]), &Scalar::q(), &(Scalar::one() + Scalar::q()));
        assert!(p.is_non_monomial());

        let p = PointResult::compare(params(&[]), &Scalar::one(), &Scalar::zero());
        assert_eq!(p.ratio.as_deref(), Some("inf"));
        assert!(p.is_non_monomial());
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let points = vec![
            PointResult::compare(params(&[("N", 1), ("m", 1)]), &Scalar::one(), &Scalar::one()),
            PointResult::compare(params(&[("N", 2), ("m", 1)]), &-Scalar::one(), &Scalar::one()),
        ];
        let report = VerificationReport::new("demo", Grid::default(), points);
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
        assert!(text.find("\"N\"").unwrap() < text.find("\"m\"").unwrap());
        assert_eq!(report.summary.discrepant, 1);
        assert_eq!(report.find(&[("N", 2)]).unwrap().sign, Some(-1));
    }
}
