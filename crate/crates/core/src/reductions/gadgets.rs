//! Cell, clause and variable gadgets and the three arm shapes.
//!
//! Coordinates are stored in quarter units relative to the gadget's own
//! transition disk (`T_c` for clauses, `S_x` for variables and arms); kind `0`
//! is a transition disk, otherwise the heavy exponent `k`.

use serde::Serialize;

use super::disks::{GadgetDiskCollection, Role};
use crate::geometry::{DiskKind, Metric, Point};
use crate::rational::q;

const CELL: &[(i64, i64, u32)] = &[
    (-4, 4, 6), (0, 4, 6), (4, 4, 6), (-4, 0, 6), (0, 0, 0), (4, 0, 6), (-4, -4, 6), (0, -4, 6),
    (4, -4, 6),
];

const CLAUSE: &[(i64, i64, u32)] = &[
    (4, 4, 6), (8, 4, 6), (12, 4, 6), (16, 4, 6), (-16, 0, 6), (-12, 0, 0), (-8, 0, 6),
    (-4, 0, 6), (0, 0, 0), (0, 0, 6), (4, 0, 6), (8, 0, 6), (12, 0, 0), (16, 0, 6),
    (-16, -4, 6), (-12, -4, 6), (-8, -4, 6), (-4, -4, 6), (0, -4, 6), (4, -4, 6), (8, -4, 6),
    (12, -4, 6), (16, -4, 6), (-4, -8, 6), (0, -8, 6), (4, -8, 6), (-4, -12, 6), (0, -12, 0),
    (4, -12, 6), (-4, -16, 6), (0, -16, 6), (4, -16, 6),
];

const CENTRAL: &[(i64, i64, u32)] = &[
    (16, 15, 6), (-20, 12, 6), (-12, 12, 6), (12, 12, 6), (20, 12, 6), (-16, 9, 1), (16, 9, 1),
    (-20, 8, 6), (-12, 8, 6), (-8, 8, 6), (-4, 8, 6), (0, 8, 6), (4, 8, 6), (8, 8, 6),
    (12, 8, 6), (20, 8, 6), (-32, 4, 6), (-28, 4, 6), (-24, 4, 6), (-20, 4, 6), (-12, 4, 6),
    (-8, 4, 6), (-4, 4, 6), (0, 4, 6), (4, 4, 6), (8, 4, 6), (12, 4, 6), (20, 4, 6), (24, 4, 6),
    (28, 4, 6), (32, 4, 6), (-16, 3, 2), (16, 3, 2), (-31, 0, 6), (-24, 0, 1), (-19, 0, 2),
    (-14, 0, 1), (-8, 0, 6), (-4, 0, 6), (0, 0, 0), (0, 0, 6), (4, 0, 6), (8, 0, 6), (14, 0, 1),
    (19, 0, 2), (24, 0, 1), (31, 0, 6), (-16, -3, 2), (16, -3, 2), (-32, -4, 6), (-28, -4, 6),
    (-24, -4, 6), (-20, -4, 6), (-12, -4, 6), (-8, -4, 6), (-4, -4, 6), (0, -4, 6), (4, -4, 6),
    (8, -4, 6), (12, -4, 6), (20, -4, 6), (24, -4, 6), (28, -4, 6), (32, -4, 6), (-20, -8, 6),
    (-12, -8, 6), (-8, -8, 6), (-4, -8, 6), (0, -8, 6), (4, -8, 6), (8, -8, 6), (12, -8, 6),
    (20, -8, 6), (-16, -9, 1), (16, -9, 1), (-20, -12, 6), (-12, -12, 6), (12, -12, 6),
    (20, -12, 6), (-16, -15, 6), (16, -15, 6), (-20, -16, 6), (-12, -16, 6), (12, -16, 6),
    (20, -16, 6),
];

const ARM1: &[(i64, i64, u32)] = &[
    (-20, 36, 6), (-16, 36, 6), (-12, 36, 6), (-20, 32, 6), (-16, 32, 0), (-12, 32, 6),
    (-20, 28, 6), (-16, 28, 6), (-12, 28, 6), (-20, 24, 6), (-12, 24, 6), (-16, 23, 0),
    (-20, 20, 6), (-12, 20, 6), (-16, 19, 6),
];

const ARM2: &[(i64, i64, u32)] = &[
    (-36, 32, 6), (-44, 28, 6), (-40, 28, 6), (-36, 28, 6), (-44, 24, 6), (-40, 24, 6),
    (-36, 24, 6), (-44, 20, 6), (-40, 20, 0), (-36, 20, 6), (-44, 16, 6), (-40, 16, 6),
    (-36, 16, 6), (-44, 12, 6), (-40, 12, 6), (-36, 12, 6), (-44, 8, 6), (-40, 8, 0),
    (-36, 8, 6), (-44, 4, 6), (-40, 4, 6), (-36, 4, 6), (-44, 0, 6), (-39, 0, 0), (-35, 0, 6),
    (-44, -4, 6), (-40, -4, 6), (-36, -4, 6),
];

const ARM3: &[(i64, i64, u32)] = &[
    (-60, 32, 6), (-68, 28, 6), (-64, 28, 6), (-60, 28, 6), (-68, 24, 6), (-64, 24, 6),
    (-60, 24, 6), (-68, 20, 6), (-64, 20, 0), (-60, 20, 6), (-68, 16, 6), (-64, 16, 6),
    (-60, 16, 6), (-68, 12, 6), (-64, 12, 6), (-60, 12, 6), (-68, 8, 6), (-64, 8, 0),
    (-60, 8, 6), (-68, 4, 6), (-64, 4, 6), (-60, 4, 6), (-68, 0, 6), (-64, 0, 6), (-60, 0, 6),
    (-68, -4, 6), (-64, -4, 0), (-60, -4, 6), (-68, -8, 6), (-64, -8, 6), (-60, -8, 6),
    (-68, -12, 6), (-64, -12, 6), (-60, -12, 6), (-68, -16, 6), (-64, -16, 0), (-60, -16, 6),
    (-16, -19, 6), (-68, -20, 6), (-64, -20, 6), (-60, -20, 6), (-56, -20, 6), (-52, -20, 6),
    (-48, -20, 6), (-44, -20, 6), (-40, -20, 6), (-36, -20, 6), (-32, -20, 6), (-28, -20, 6),
    (-24, -20, 6), (-20, -20, 6), (-12, -20, 6), (-16, -23, 0), (-68, -24, 6), (-62, -24, 0),
    (-58, -24, 6), (-54, -24, 6), (-50, -24, 0), (-46, -24, 6), (-42, -24, 6), (-38, -24, 0),
    (-34, -24, 6), (-30, -24, 6), (-26, -24, 0), (-20, -24, 6), (-12, -24, 6), (-68, -28, 6),
    (-64, -28, 6), (-60, -28, 6), (-56, -28, 6), (-52, -28, 6), (-48, -28, 6), (-44, -28, 6),
    (-40, -28, 6), (-36, -28, 6), (-32, -28, 6), (-28, -28, 6), (-24, -28, 6), (-20, -28, 6),
    (-16, -28, 6), (-12, -28, 6),
];

/// Rows the clause table leaves out: the upper wall of the left cell and the
/// top of the ring around `T_c`, mirroring the printed right half.
const CLAUSE_COMPLETION: &[(i64, i64, u32)] = &[(-16, 4, 6), (-12, 4, 6), (-8, 4, 6), (-4, 4, 6), (0, 4, 6)];

/// Upper counterparts of the printed lower rows `(±4, -3-3/4)`, `(±5, -4)`, `(±3, -4)`.
const CENTRAL_COMPLETION: &[(i64, i64, u32)] = &[(-16, 15, 6), (-20, 16, 6), (-12, 16, 6), (12, 16, 6), (20, 16, 6)];

pub const CLAUSE_TABLE_ROWS: usize = 37;
pub const CENTRAL_TABLE_ROWS: usize = 90;

pub fn quarter(x: i64, y: i64) -> Point {
    Point::new(q(x, 4), q(y, 4))
}

fn kind_of(k: u32) -> DiskKind {
    if k == 0 {
        DiskKind::Transition
    } else {
        DiskKind::Heavy(k)
    }
}

fn from_table(
    rows: &[(i64, i64, u32)],
    metric: Metric,
    role: impl Fn(i64, i64, u32) -> (Role, String),
) -> GadgetDiskCollection {
    let mut c = GadgetDiskCollection::new(metric);
    for &(x, y, k) in rows {
        let (r, label) = role(x, y, k);
        c.push(quarter(x, y), kind_of(k), r, label);
    }
    c
}

fn placed(mut c: GadgetDiskCollection, center: &Point) -> GadgetDiskCollection {
    c.translate(center);
    c
}

pub fn build_cell_gadget(center: &Point, metric: Metric) -> GadgetDiskCollection {
    placed(
        from_table(CELL, metric, |_, _, k| {
            if k == 0 {
                (Role::Transition, String::new())
            } else {
                (Role::Heavy, String::new())
            }
        }),
        center,
    )
}

/// The clause cell on each side of `T_c`, in the order the literals attach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClauseSide {
    Left,
    Bottom,
    Right,
}

impl ClauseSide {
    pub const ALL: [ClauseSide; 3] = [ClauseSide::Left, ClauseSide::Bottom, ClauseSide::Right];

    pub fn label(self) -> &'static str {
        match self {
            ClauseSide::Left => "cell_left",
            ClauseSide::Bottom => "cell_bottom",
            ClauseSide::Right => "cell_right",
        }
    }

    /// Offset of the cell from `T_c` in quarter units, before any mirroring.
    pub fn offset(self) -> (i64, i64) {
        match self {
            ClauseSide::Left => (-12, 0),
            ClauseSide::Bottom => (0, -12),
            ClauseSide::Right => (12, 0),
        }
    }
}

/// `mirror_y` flips the gadget so the third cell points up.
pub fn build_clause_gadget(center: &Point, mirror_y: bool, metric: Metric) -> GadgetDiskCollection {
    let rows: Vec<_> = CLAUSE.iter().chain(CLAUSE_COMPLETION).copied().collect();
    let mut c = from_table(&rows, metric, |x, y, k| match (x, y, k) {
        (0, 0, 0) => (Role::ClauseDisk, "T_c".into()),
        (_, _, 0) => {
            let side = ClauseSide::ALL.into_iter().find(|s| s.offset() == (x, y)).expect("clause cell");
            (Role::Transition, side.label().into())
        }
        _ => (Role::Heavy, String::new()),
    });
    if mirror_y {
        c.mirror_y();
    }
    placed(c, center)
}

fn central_role(x: i64, y: i64, k: u32) -> (Role, String) {
    let side = |x: i64, left: u32| if x < 0 { left } else { left + 3 };
    match (x.abs(), y, k) {
        (0, 0, 0) => (Role::TruthSetter, "S_x".into()),
        (14, 0, 1) => (Role::Blocking, format!("B<S_t,{}>", if x < 0 { 1 } else { 2 })),
        (16, 9, 1) => (Role::Blocking, format!("B<S_c,{}>", side(x, 1))),
        (24, 0, 1) => (Role::Blocking, format!("B<S_c,{}>", side(x, 2))),
        (16, -9, 1) => (Role::Blocking, format!("B<S_c,{}>", side(x, 3))),
        (16, 3, 2) => (Role::Link, format!("L<S_c,{}>", side(x, 1))),
        (19, 0, 2) => (Role::Link, format!("L<S_c,{}>", side(x, 2))),
        (16, -3, 2) => (Role::Link, format!("L<S_c,{}>", side(x, 3))),
        _ => (Role::Heavy, String::new()),
    }
}

/// Central part of a variable gadget. The table is left-right symmetric, so
/// `mirror_x` only swaps which side carries the labels `t,1` and `c,1..3`.
pub fn build_variable_gadget(center: &Point, mirror_x: bool, metric: Metric) -> GadgetDiskCollection {
    let rows: Vec<_> = CENTRAL.iter().chain(CENTRAL_COMPLETION).copied().collect();
    let mut c = from_table(&rows, metric, central_role);
    if mirror_x {
        c.mirror_x();
    }
    placed(c, center)
}

/// How an arm is oriented relative to its variable's `S_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArmPlacement {
    pub variant: u8,
    /// Attach on the right side (`x -> -x`).
    pub right: bool,
    /// Run downwards (`y -> -y`).
    pub down: bool,
}

impl ArmPlacement {
    pub fn new(variant: u8, right: bool, down: bool) -> Self {
        assert!((1..=3).contains(&variant), "arm variant must be 1, 2 or 3");
        ArmPlacement { variant, right, down }
    }

    fn orient(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (if self.right { -x } else { x }, if self.down { -y } else { y })
    }

    fn table(&self) -> &'static [(i64, i64, u32)] {
        match self.variant {
            1 => ARM1,
            2 => ARM2,
            _ => ARM3,
        }
    }

    /// Transition disks of the table from the far end to `D_c`, quarter units.
    pub fn chain(&self) -> Vec<(i64, i64)> {
        let raw: &[(i64, i64)] = match self.variant {
            1 => &[(-16, 32), (-16, 23)],
            2 => &[(-40, 20), (-40, 8), (-39, 0)],
            _ => &[
                (-64, 20),
                (-64, 8),
                (-64, -4),
                (-64, -16),
                (-62, -24),
                (-50, -24),
                (-38, -24),
                (-26, -24),
                (-16, -23),
            ],
        };
        raw.iter().map(|&p| self.orient(p)).collect()
    }

    /// Center of the first route cell beyond the table: the route connects
    /// here and its transition steps onto `chain()[0]`.
    pub fn entry(&self) -> (i64, i64) {
        self.orient(match self.variant {
            1 => (-16, 44),
            2 => (-40, 32),
            _ => (-64, 32),
        })
    }

    /// The free slot `s_{c,i}` `D_c` moves into.
    pub fn slot(&self) -> (i64, i64) {
        self.orient(match self.variant {
            1 => (-16, 11),
            2 => (-27, 0),
            _ => (-16, -11),
        })
    }

    /// Label `i` of the slot in `B<S_c,i>` terms.
    pub fn slot_index(&self) -> u32 {
        let (x, y) = self.slot();
        let base = match y.signum() {
            1 => 1,
            0 => 2,
            _ => 3,
        };
        if x < 0 {
            base
        } else {
            base + 3
        }
    }
}

/// Arm cells for one clause occurrence, anchored at the variable's `S_x`.
pub fn build_arm(anchor: &Point, placement: ArmPlacement, metric: Metric) -> GadgetDiskCollection {
    let end = placement.chain().last().copied().expect("non-empty chain");
    let mut c = GadgetDiskCollection::new(metric);
    for &(x, y, k) in placement.table() {
        let p = placement.orient((x, y));
        let (role, label) = match k {
            0 if p == end => (Role::ArmEnd, "D_c".to_string()),
            0 => (Role::Transition, String::new()),
            _ => (Role::Heavy, String::new()),
        };
        c.push(quarter(p.0, p.1), kind_of(k), role, label);
    }
    placed(c, anchor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn origin() -> Point {
        Point::from_ints(0, 0)
    }

    #[test]
    fn table_sizes() {
        assert_eq!(build_cell_gadget(&origin(), Metric::L2).len(), 9);
        assert_eq!(build_clause_gadget(&origin(), false, Metric::L2).len(), CLAUSE_TABLE_ROWS);
        assert_eq!(build_variable_gadget(&origin(), false, Metric::L2).len(), CENTRAL_TABLE_ROWS);
        let sizes: Vec<usize> = (1..=3)
            .map(|v| build_arm(&origin(), ArmPlacement::new(v, false, false), Metric::L2).len())
            .collect();
        assert_eq!(sizes, vec![15, 28, 81]);
    }

    #[test]
    fn cell_layout() {
        let c = build_cell_gadget(&Point::from_ints(5, 7), Metric::L2);
        assert_eq!(c.count_kind(DiskKind::Transition), 1);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let kind = if (dx, dy) == (0, 0) { DiskKind::Transition } else { DiskKind::Heavy(6) };
                assert!(c.find_at(&Point::from_ints(5 + dx, 7 + dy), kind).is_some());
            }
        }
        assert_eq!(c.disks[4].weight(), q(1, 3));
        assert_eq!(c.disks[0].weight(), Rational::from_integer(64));
    }

    #[test]
    fn clause_transitions() {
        let c = build_clause_gadget(&origin(), false, Metric::L2);
        let mut ts: Vec<Point> = c
            .disks
            .iter()
            .filter(|d| d.kind == DiskKind::Transition)
            .map(|d| d.center.clone())
            .collect();
        ts.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
        let expect = [(-3, 0), (0, -3), (0, 0), (3, 0)].map(|(x, y)| Point::from_ints(x, y));
        assert_eq!(ts, expect);
        assert_eq!(c.disks[c.find("cell_bottom").unwrap()].center, Point::from_ints(0, -3));
        let up = build_clause_gadget(&origin(), true, Metric::L2);
        assert_eq!(up.disks[up.find("cell_bottom").unwrap()].center, Point::from_ints(0, 3));
    }

    #[test]
    fn variable_labels() {
        let v = build_variable_gadget(&origin(), false, Metric::L2);
        let at = |label: &str| v.disks[v.find(label).unwrap()].clone();
        assert_eq!(at("B<S_t,1>").center, Point::new(q(-7, 2), q(0, 1)));
        assert_eq!(at("B<S_t,1>").kind, DiskKind::Heavy(1));
        assert_eq!(at("L<S_c,2>").center, Point::new(q(-19, 4), q(0, 1)));
        assert_eq!(at("L<S_c,2>").kind, DiskKind::Heavy(2));
        assert_eq!(at("L<S_c,3>").center, Point::new(q(-4, 1), q(-3, 4)));
        assert_eq!(at("B<S_c,5>").center, Point::from_ints(6, 0));
        let m = build_variable_gadget(&origin(), true, Metric::L2);
        assert_eq!(m.disks[m.find("B<S_t,1>").unwrap()].center, Point::new(q(7, 2), q(0, 1)));
    }

    #[test]
    fn arm_geometry() {
        for v in 1..=3 {
            for (right, down) in [(false, false), (true, false), (false, true), (true, true)] {
                let a = ArmPlacement::new(v, right, down);
                let arm = build_arm(&origin(), a, Metric::L2);
                let end = &arm.disks[arm.find("D_c").unwrap()].center;
                let (sx, sy) = a.slot();
                let slot = quarter(sx, sy);
                // D_c reaches its slot with one transition move of length 3.
                assert_eq!(crate::geometry::squared_euclidean(end, &slot), q(9, 1));
                for t in a.chain() {
                    assert!(arm.find_at(&quarter(t.0, t.1), DiskKind::Transition).is_some());
                }
            }
        }
        assert_eq!(ArmPlacement::new(1, false, true).slot_index(), 3);
        assert_eq!(ArmPlacement::new(2, true, false).slot_index(), 5);
    }
}
