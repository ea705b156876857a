use serde::{Deserialize, Serialize};

use crate::error::{Result, SolError};
use crate::par::{map_collect, Execution};
use crate::sol::SolPoint;
use crate::triangles::{interior_angles, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn set(self, p: &mut SolPoint, v: f64) {
        match self {
            Axis::X => p.x = v,
            Axis::Y => p.y = v,
            Axis::Z => p.z = v,
        }
    }
}

/// One value of the free coordinate with the label it is displayed under.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepValue {
    pub label: String,
    pub value: f64,
}

impl SweepValue {
    pub fn new(label: impl Into<String>, value: f64) -> Self {
        Self {
            label: label.into(),
            value,
        }
    }
}

impl From<f64> for SweepValue {
    fn from(v: f64) -> Self {
        Self {
            label: v.to_string(),
            value: v,
        }
    }
}

/// A family of triangles `A_1, A_2, A_3(s)` where one coordinate of `A_3`
/// runs over `values`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub a1: SolPoint,
    pub a2: SolPoint,
    /// `A_3` with the free coordinate ignored.
    pub a3_template: SolPoint,
    pub free: Axis,
    pub values: Vec<SweepValue>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(SolError::InvalidSweep("no values to sweep".into()));
        }
        for p in [self.a1, self.a2] {
            p.ensure_finite("sweep vertex")?;
        }
        if let Some(v) = self.values.iter().find(|v| !v.value.is_finite()) {
            return Err(SolError::InvalidSweep(format!(
                "non-finite value {}",
                v.label
            )));
        }
        Ok(())
    }

    pub fn vertex(&self, value: f64) -> SolPoint {
        let mut p = self.a3_template;
        self.free.set(&mut p, value);
        p
    }

    pub fn triangle(&self, value: f64) -> Result<Triangle> {
        Triangle::new(self.a1, self.a2, self.vertex(value))
    }
}

/// Labels and values of the free coordinate used by both reference tables.
pub const TABLE_VALUES: [(&str, f64); 11] = [
    ("-10", -10.0),
    ("-2", -2.0),
    ("-1", -1.0),
    ("1/100", 0.01),
    ("1/10", 0.1),
    ("1/2", 0.5),
    ("3/4", 0.75),
    ("3/2", 1.5),
    ("2", 2.0),
    ("5", 5.0),
    ("10", 10.0),
];

/// Reference sweeps with `A_1 = O`, `A_2 = (-1, 1, 1)`:
/// table 1 varies `z` in `A_3 = (1/2, 5, z)`, table 2 varies `y` in `A_3 = (1/2, y, 1/2)`.
pub fn table_spec(which: u8) -> Result<SweepSpec> {
    let (template, free) = match which {
        1 => (SolPoint::new(0.5, 5.0, 0.0), Axis::Z),
        2 => (SolPoint::new(0.5, 0.0, 0.5), Axis::Y),
        _ => {
            return Err(SolError::InvalidSweep(format!(
                "no table {which}; expected 1 or 2"
            )))
        }
    };
    Ok(SweepSpec {
        a1: SolPoint::ORIGIN,
        a2: SolPoint::new(-1.0, 1.0, 1.0),
        a3_template: template,
        free,
        values: TABLE_VALUES
            .iter()
            .map(|&(l, v)| SweepValue::new(l, v))
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub label: String,
    pub value: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub angle_sum: f64,
    /// Set when the row's triangle is degenerate; angles are NaN then.
    pub error: Option<String>,
}

impl SweepRow {
    pub fn omega(&self) -> [f64; 3] {
        [self.omega1, self.omega2, self.omega3]
    }
}

pub fn table_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    table_sweep_with(spec, Execution::default())
}

pub fn table_sweep_with(spec: &SweepSpec, exec: Execution) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    Ok(map_collect(spec.values.len(), exec, |i| {
        let SweepValue { label, value } = spec.values[i].clone();
        match spec.triangle(value).and_then(|t| interior_angles(&t)) {
            Ok(w) => SweepRow {
                label,
                value,
                omega1: w[0],
                omega2: w[1],
                omega3: w[2],
                angle_sum: w.iter().sum(),
                error: None,
            },
            Err(e) => SweepRow {
                label,
                value,
                omega1: f64::NAN,
                omega2: f64::NAN,
                omega3: f64::NAN,
                angle_sum: f64::NAN,
                error: Some(e.to_string()),
            },
        }
    }))
}
