//! JSON instance files.
//!
//! ```json
//! {"kind": "unit_intervals", "s": "3/2", "items": ["0", "1/2", "1"]}
//! {"kind": "weighted_intervals", "items": [{"center": "0", "length": "2", "weight": "1"}]}
//! {"kind": "disks", "metric": "L2", "items": [{"x": "0", "y": "0", "kind": "heavy", "k": 6}]}
//! ```
//!
//! Numbers are rational strings (`"3/4"`, `"1.25"`) or JSON integers; JSON
//! floats are rejected. Unknown fields are rejected at every level.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::geometry::{DiskKind, Interval, IntervalCollection, Metric, Point};
use crate::rational::Rational;
use crate::reductions::disks::{GadgetDiskCollection, Role};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    UnitIntervals,
    WeightedIntervals,
    Disks,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: InstanceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Rational>,
    pub items: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Metric>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightedItem {
    center: Rational,
    length: Rational,
    #[serde(default = "Rational::one")]
    weight: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum DiskItemKind {
    Transition,
    Heavy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiskItem {
    x: Rational,
    y: Rational,
    kind: DiskItemKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<Role>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    moved_to: Option<(Rational, Rational)>,
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    UnitIntervals { centers: Vec<Rational>, s: Option<Rational> },
    WeightedIntervals { intervals: IntervalCollection, s: Option<Rational> },
    Disks(GadgetDiskCollection),
}

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("item {index}: {message}")]
    Item { index: usize, message: String },
    #[error("{0}")]
    Field(String),
}

fn item_err(index: usize, e: impl std::fmt::Display) -> IoError {
    IoError::Item { index, message: e.to_string() }
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::UnitIntervals { .. } => InstanceKind::UnitIntervals,
            Instance::WeightedIntervals { .. } => InstanceKind::WeightedIntervals,
            Instance::Disks(_) => InstanceKind::Disks,
        }
    }

    pub fn from_file(file: InstanceFile) -> Result<Self, IoError> {
        if file.kind != InstanceKind::Disks && file.metric.is_some() {
            return Err(IoError::Field("\"metric\" applies to disk instances only".into()));
        }
        match file.kind {
            InstanceKind::UnitIntervals => {
                let centers = file
                    .items
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| serde_json::from_value::<Rational>(v).map_err(|e| item_err(i, e)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Instance::UnitIntervals { centers, s: file.s })
            }
            InstanceKind::WeightedIntervals => {
                let mut items = Vec::with_capacity(file.items.len());
                for (i, v) in file.items.into_iter().enumerate() {
                    let w: WeightedItem = serde_json::from_value(v).map_err(|e| item_err(i, e))?;
                    if !w.length.is_positive() || !w.weight.is_positive() {
                        return Err(item_err(i, "length and weight must be positive"));
                    }
                    items.push(Interval::new(w.center, w.length, w.weight, i));
                }
                Ok(Instance::WeightedIntervals { intervals: IntervalCollection::new(items), s: file.s })
            }
            InstanceKind::Disks => {
                if file.s.is_some() {
                    return Err(IoError::Field("\"s\" does not apply to disk instances".into()));
                }
                let metric = file
                    .metric
                    .ok_or_else(|| IoError::Field("disk instances need \"metric\"".into()))?;
                let mut coll = GadgetDiskCollection::new(metric);
                for (i, v) in file.items.into_iter().enumerate() {
                    let d: DiskItem = serde_json::from_value(v).map_err(|e| item_err(i, e))?;
                    let kind = match (d.kind, d.k) {
                        (DiskItemKind::Transition, None) => DiskKind::Transition,
                        (DiskItemKind::Heavy, Some(k)) if (1..=30).contains(&k) => DiskKind::Heavy(k),
                        (DiskItemKind::Transition, Some(_)) => return Err(item_err(i, "transition disks take no k")),
                        (DiskItemKind::Heavy, _) => return Err(item_err(i, "heavy disks need k in 1..=30")),
                    };
                    let role = d.role.unwrap_or(match kind {
                        DiskKind::Transition => Role::Transition,
                        DiskKind::Heavy(_) => Role::Heavy,
                    });
                    let idx = coll.push(Point::new(d.x, d.y), kind, role, d.label);
                    coll.disks[idx].moved_to = d.moved_to.map(|(x, y)| Point::new(x, y));
                }
                Ok(Instance::Disks(coll))
            }
        }
    }

    pub fn to_file(&self) -> InstanceFile {
        match self {
            Instance::UnitIntervals { centers, s } => InstanceFile {
                kind: InstanceKind::UnitIntervals,
                s: s.clone(),
                items: centers.iter().map(to_value).collect(),
                metric: None,
            },
            Instance::WeightedIntervals { intervals, s } => InstanceFile {
                kind: InstanceKind::WeightedIntervals,
                s: s.clone(),
                items: intervals
                    .items
                    .iter()
                    .map(|it| {
                        to_value(&WeightedItem {
                            center: it.center.clone(),
                            length: it.length.clone(),
                            weight: it.weight.clone(),
                        })
                    })
                    .collect(),
                metric: None,
            },
            Instance::Disks(coll) => InstanceFile {
                kind: InstanceKind::Disks,
                s: None,
                items: coll
                    .disks
                    .iter()
                    .zip(&coll.roles)
                    .zip(&coll.labels)
                    .map(|((d, r), l)| {
                        let (kind, k) = match d.kind {
                            DiskKind::Transition => (DiskItemKind::Transition, None),
                            DiskKind::Heavy(k) => (DiskItemKind::Heavy, Some(k)),
                        };
                        to_value(&DiskItem {
                            x: d.center.x.clone(),
                            y: d.center.y.clone(),
                            kind,
                            k,
                            role: Some(*r),
                            label: l.clone(),
                            moved_to: d.moved_to.as_ref().map(|p| (p.x.clone(), p.y.clone())),
                        })
                    })
                    .collect(),
                metric: Some(coll.metric),
            },
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("in-memory serialization")
}

pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    Instance::from_file(file)
}

pub fn emit_instance(instance: &Instance) -> String {
    serde_json::to_string_pretty(&instance.to_file()).expect("in-memory serialization")
}
