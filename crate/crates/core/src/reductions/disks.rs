//! Weighted unit-disk collections with roles, blocked zones and the
//! sequential chain-move executor.
//!
//! Blocked zones are Euclidean balls under both moving metrics: they encode
//! where another unit disk may not be centered, and disk intersection is
//! Euclidean. The metric only enters the moving cost.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::geometry::{squared_euclidean, Disk, DiskKind, Metric, MetricCost, Point};
use crate::graph::build_disk_graph;
use crate::rational::{q, Rational};

/// The budget `K` every non-heavy move must respect.
pub fn budget() -> Rational {
    Rational::one()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Transition,
    Heavy,
    /// `T_c`, concentric with a 6-heavy disk.
    ClauseDisk,
    /// `S_x`, concentric with a 6-heavy disk.
    TruthSetter,
    Blocking,
    Link,
    /// Last transition of an arm, `D_c`.
    ArmEnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetDiskCollection {
    pub disks: Vec<Disk>,
    pub roles: Vec<Role>,
    /// Free-form names such as `x1.B<S_t,1>`; empty for anonymous disks.
    pub labels: Vec<String>,
    pub metric: Metric,
}

impl GadgetDiskCollection {
    pub fn new(metric: Metric) -> Self {
        GadgetDiskCollection { disks: Vec::new(), roles: Vec::new(), labels: Vec::new(), metric }
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn push(&mut self, center: Point, kind: DiskKind, role: Role, label: impl Into<String>) -> usize {
        self.disks.push(Disk::unit(center, kind, self.metric));
        self.roles.push(role);
        self.labels.push(label.into());
        self.disks.len() - 1
    }

    pub fn heavy(&mut self, center: Point, k: u32) -> usize {
        self.push(center, DiskKind::Heavy(k), Role::Heavy, "")
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of the disk with the given original center and kind.
    pub fn find_at(&self, center: &Point, kind: DiskKind) -> Option<usize> {
        self.disks.iter().position(|d| d.center == *center && d.kind == kind)
    }

    pub fn translate(&mut self, by: &Point) {
        for d in &mut self.disks {
            d.center = d.center.translate(by);
            if let Some(m) = &mut d.moved_to {
                *m = m.translate(by);
            }
        }
    }

    fn map_points(&mut self, f: impl Fn(&Point) -> Point) {
        for d in &mut self.disks {
            d.center = f(&d.center);
            if let Some(m) = &mut d.moved_to {
                *m = f(m);
            }
        }
    }

    /// `x -> -x`.
    pub fn mirror_x(&mut self) {
        self.map_points(|p| Point::new(-p.x.clone(), p.y.clone()));
    }

    /// `y -> -y`.
    pub fn mirror_y(&mut self) {
        self.map_points(|p| Point::new(p.x.clone(), -p.y.clone()));
    }

    pub fn prefix_labels(&mut self, prefix: &str) {
        for l in &mut self.labels {
            if !l.is_empty() {
                *l = format!("{prefix}.{l}");
            }
        }
    }

    /// Appends `other`, skipping anonymous heavy disks that duplicate an
    /// existing heavy disk of the same kind and center (adjacent cells share
    /// walls). Returns the number of disks added.
    pub fn extend(&mut self, other: GadgetDiskCollection) -> usize {
        let mut seen: HashSet<(Point, DiskKind)> = HashSet::new();
        for (d, r) in self.disks.iter().zip(&self.roles) {
            if *r == Role::Heavy {
                seen.insert((d.center.clone(), d.kind));
            }
        }
        let mut added = 0;
        for ((mut d, r), l) in other.disks.into_iter().zip(other.roles).zip(other.labels) {
            if r == Role::Heavy && !seen.insert((d.center.clone(), d.kind)) {
                continue;
            }
            d.metric = self.metric;
            self.disks.push(d);
            self.roles.push(r);
            self.labels.push(l);
            added += 1;
        }
        added
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        for d in &mut self.disks {
            d.metric = metric;
        }
        self
    }

    pub fn intersecting_pairs(&self) -> Vec<(usize, usize)> {
        build_disk_graph(&self.disks).edges()
    }

    pub fn is_edgeless(&self) -> bool {
        build_disk_graph(&self.disks).edge_count() == 0
    }

    pub fn count_kind(&self, kind: DiskKind) -> usize {
        self.disks.iter().filter(|d| d.kind == kind).count()
    }
}

/// Squared radius of the blocked zone, `None` when the zone is empty.
pub fn blocked_zone_radius_sq(d: &Disk) -> Option<Rational> {
    match (&d.moved_to, d.kind) {
        (Some(_), _) => Some(Rational::one()),
        (None, DiskKind::Transition) => None,
        (None, DiskKind::Heavy(k)) => {
            let den = 1i64 << k;
            let r = q(den - 1, den);
            Some(&r * &r)
        }
    }
}

/// Strict membership in the blocked zone of `d` at its current position.
pub fn blocked_zone_contains(d: &Disk, p: &Point) -> bool {
    match blocked_zone_radius_sq(d) {
        Some(r2) => squared_euclidean(d.position(), p) < r2,
        None => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Probe {
    Feasible,
    TooFar(String),
    Blocked(usize),
}

/// Whether disk `idx` may be centered at `p`: cost from its original center
/// at most `K`, and `p` outside every other disk's blocked zone.
pub fn probe(collection: &GadgetDiskCollection, idx: usize, p: &Point) -> Probe {
    let d = &collection.disks[idx];
    let cost = d.moving_cost(p);
    if !cost.le(&budget()) {
        return Probe::TooFar(cost.to_string());
    }
    for (j, other) in collection.disks.iter().enumerate() {
        if j != idx && blocked_zone_contains(other, p) {
            return Probe::Blocked(j);
        }
    }
    Probe::Feasible
}

pub fn feasible_area_probe(collection: &GadgetDiskCollection, idx: usize, p: &Point) -> bool {
    probe(collection, idx, p) == Probe::Feasible
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub max_weighted_cost: Rational,
    /// Display form; under L2 the cost may be irrational.
    pub max_weighted_cost_text: String,
    pub steps: usize,
    pub final_edgeless: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("step {step}: disk {disk} ({label}) to {target}: cost {cost} exceeds K")]
    TooFar { step: usize, disk: usize, label: String, target: Point, cost: String },
    #[error("step {step}: disk {disk} ({label}) to {target} lies in the blocked zone of disk {blocker} ({blocker_label})")]
    Blocked {
        step: usize,
        disk: usize,
        label: String,
        target: Point,
        blocker: usize,
        blocker_label: String,
    },
}

/// Applies `script` in order, checking each target against the current state.
/// On failure the collection keeps the moves made so far.
pub fn execute_chain_move(
    collection: &mut GadgetDiskCollection,
    script: &[(usize, Point)],
) -> Result<ChainReport, ChainError> {
    let mut max = MetricCost::zero(collection.metric);
    for (step, (idx, target)) in script.iter().enumerate() {
        let label = collection.labels[*idx].clone();
        match probe(collection, *idx, target) {
            Probe::Feasible => {}
            Probe::TooFar(cost) => {
                return Err(ChainError::TooFar { step, disk: *idx, label, target: target.clone(), cost })
            }
            Probe::Blocked(blocker) => {
                return Err(ChainError::Blocked {
                    step,
                    disk: *idx,
                    label,
                    target: target.clone(),
                    blocker,
                    blocker_label: collection.labels[blocker].clone(),
                })
            }
        }
        let cost = collection.disks[*idx].moving_cost(target);
        if cost > max {
            max = cost;
        }
        collection.disks[*idx].moved_to = Some(target.clone());
    }
    Ok(ChainReport {
        // Rounded up under L2 only when irrational; the text keeps the exact form.
        max_weighted_cost: max.exact().unwrap_or_else(|| {
            let MetricCost::L2Squared(c2) = &max else { unreachable!() };
            crate::rational::sqrt_bounds(c2, 64).1
        }),
        max_weighted_cost_text: max.to_string(),
        steps: script.len(),
        final_edgeless: collection.is_edgeless(),
    })
}
