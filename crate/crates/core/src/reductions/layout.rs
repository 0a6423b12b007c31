//! Assembled clause components and the worked formula, with the move scripts
//! that resolve every intersection under a satisfying assignment.
//!
//! Positive occurrences hang off the left side of a variable gadget and
//! negative ones off the right. Setting `x` true moves `S_x` into the right
//! truth slot, which frees the left slots.
//!
//! Routes are rectilinear chains of cells three apart; a segment whose length
//! is not a multiple of three starts with one or two steps of two, where the
//! neighbouring cells share a wall.

use serde::Serialize;

use super::disks::{execute_chain_move, ChainError, ChainReport, GadgetDiskCollection, Role};
use super::gadgets::{build_arm, build_cell_gadget, build_clause_gadget, build_variable_gadget, quarter, ArmPlacement, ClauseSide};
use crate::geometry::{DiskKind, Metric, Point};
use crate::rational::{q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wire {
    pub literal: Literal,
    pub side: ClauseSide,
    pub arm_variant: u8,
    /// Route corners between the clause cell and the arm entry, unit coordinates.
    pub corners: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseSpec {
    pub center: (i64, i64),
    /// Clause below the variables, its third cell pointing up.
    pub below: bool,
    pub wires: Vec<Wire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayoutSpec {
    pub variable_names: Vec<String>,
    pub variables: Vec<(i64, i64)>,
    pub clauses: Vec<ClauseSpec>,
}

impl ClauseSpec {
    fn placement(&self, wire: &Wire) -> ArmPlacement {
        ArmPlacement::new(wire.arm_variant, !wire.literal.positive, self.below)
    }
}

/// Transitions of one wire from `T_c` to `D_c`, with its slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WireChain {
    pub literal: Literal,
    pub transitions: Vec<usize>,
    pub slot: Point,
    /// `B<S_c,i>` guarding the slot.
    pub blocking: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assembly {
    pub spec: LayoutSpec,
    pub disks: GadgetDiskCollection,
    pub chains: Vec<Vec<WireChain>>,
}

fn unit(p: (i64, i64)) -> Point {
    Point::from_ints(p.0, p.1)
}

/// Cell centers after `from` up to and including `to` along one axis.
pub fn segment_cells(from: (i64, i64), to: (i64, i64)) -> Vec<(i64, i64)> {
    assert!(from.0 == to.0 || from.1 == to.1, "route segments are axis-parallel");
    let len = (to.0 - from.0).abs() + (to.1 - from.1).abs();
    let dir = ((to.0 - from.0).signum(), (to.1 - from.1).signum());
    let twos = match len % 3 {
        0 => 0,
        1 => 2,
        _ => 1,
    };
    assert!(len >= 2 * twos, "segment of length {len} is too short");
    let mut steps = vec![2; twos as usize];
    steps.extend(std::iter::repeat_n(3, ((len - 2 * twos) / 3) as usize));
    let mut at = from;
    steps
        .into_iter()
        .map(|s| {
            at = (at.0 + dir.0 * s, at.1 + dir.1 * s);
            at
        })
        .collect()
}

fn truth_moves(c: &GadgetDiskCollection, name: &str, center: &Point, value: bool) -> Vec<(usize, Point)> {
    let sg = if value { 1 } else { -1 };
    let (far_t, near_t, far_links) = if value { (2, 1, [4, 5, 6]) } else { (1, 2, [1, 2, 3]) };
    let at = |x: Rational, y: Rational| Point::new(&center.x + &(&x * &Rational::from_integer(sg)), &center.y + &y);
    let find = |l: String| c.find(&format!("{name}.{l}")).unwrap_or_else(|| panic!("missing {name}.{l}"));
    vec![
        (find(format!("B<S_t,{far_t}>")), at(q(4, 1), q(0, 1))),
        (find(format!("L<S_c,{}>", far_links[0])), at(q(4, 1), q(1, 1))),
        (find(format!("L<S_c,{}>", far_links[1])), at(q(5, 1), q(0, 1))),
        (find(format!("L<S_c,{}>", far_links[2])), at(q(4, 1), q(-1, 1))),
        (find("S_x".into()), at(q(3, 1), q(0, 1))),
        (find(format!("B<S_t,{near_t}>")), at(q(-3, 1), q(0, 1))),
    ]
}

impl Assembly {
    pub fn build(spec: &LayoutSpec, metric: Metric) -> Assembly {
        let mut disks = GadgetDiskCollection::new(metric);
        for (name, &v) in spec.variable_names.iter().zip(&spec.variables) {
            let mut g = build_variable_gadget(&unit(v), false, metric);
            g.prefix_labels(name);
            disks.extend(g);
        }
        let mut pending = Vec::new();
        for (j, clause) in spec.clauses.iter().enumerate() {
            let center = unit(clause.center);
            let mut g = build_clause_gadget(&center, clause.below, metric);
            let cells: Vec<(i64, i64)> = ClauseSide::ALL
                .iter()
                .map(|s| {
                    let (dx, dy) = s.offset();
                    let dy = if clause.below { -dy } else { dy };
                    (clause.center.0 + dx / 4, clause.center.1 + dy / 4)
                })
                .collect();
            g.prefix_labels(&format!("c{}", j + 1));
            disks.extend(g);
            let mut wires = Vec::new();
            for wire in &clause.wires {
                let placement = clause.placement(wire);
                let var = spec.variables[wire.literal.var];
                let anchor = unit(var);
                let mut arm = build_arm(&anchor, placement, metric);
                arm.prefix_labels(&format!("c{}.{}", j + 1, spec.variable_names[wire.literal.var]));
                disks.extend(arm);

                let (ex, ey) = placement.entry();
                let entry = (var.0 + ex / 4, var.1 + ey / 4);
                let start = cells[ClauseSide::ALL.iter().position(|s| *s == wire.side).expect("side")];
                let mut route = vec![start];
                let mut at = start;
                for &corner in wire.corners.iter().chain(std::iter::once(&entry)) {
                    route.extend(segment_cells(at, corner));
                    at = corner;
                }
                for &cell in &route[1..] {
                    disks.extend(build_cell_gadget(&unit(cell), metric));
                }
                wires.push((wire.literal, route, placement, anchor));
            }
            pending.push((center, wires));
        }

        let chains = pending
            .into_iter()
            .map(|(center, wires)| {
                wires
                    .into_iter()
                    .map(|(literal, route, placement, anchor)| {
                        let mut points = vec![center.clone()];
                        points.extend(route.iter().map(|&p| unit(p)));
                        points.extend(placement.chain().into_iter().map(|(x, y)| quarter(x, y).translate(&anchor)));
                        let transitions = points
                            .iter()
                            .map(|p| {
                                disks
                                    .disks
                                    .iter()
                                    .position(|d| d.center == *p && d.kind == DiskKind::Transition)
                                    .unwrap_or_else(|| panic!("no transition at {p}"))
                            })
                            .collect();
                        let (sx, sy) = placement.slot();
                        let name = &spec.variable_names[literal.var];
                        let blocking = disks
                            .find(&format!("{name}.B<S_c,{}>", placement.slot_index()))
                            .expect("slot blocking disk");
                        WireChain { literal, transitions, slot: quarter(sx, sy).translate(&anchor), blocking }
                    })
                    .collect()
            })
            .collect();
        Assembly { spec: spec.clone(), disks, chains }
    }

    /// Pairs intersecting by design: concentric `T_c`/`S_x` and their heavy
    /// disk, and each `B<S_t,i>` with the two outer link disks beside it.
    pub fn intended_intersection(&self, a: usize, b: usize) -> bool {
        let roles = (self.disks.roles[a], self.disks.roles[b]);
        let concentric = self.disks.disks[a].center == self.disks.disks[b].center;
        let one_of = |r: Role| roles.0 == r || roles.1 == r;
        (concentric && (one_of(Role::ClauseDisk) || one_of(Role::TruthSetter)) && one_of(Role::Heavy))
            || (one_of(Role::Blocking) && one_of(Role::Link))
    }

    /// Setting moves for every variable, then for each clause the chain of
    /// its first literal made true.
    pub fn satisfying_script(&self, assignment: &[bool]) -> Option<Vec<(usize, Point)>> {
        let mut script = Vec::new();
        for ((name, &v), &value) in self.spec.variable_names.iter().zip(&self.spec.variables).zip(assignment) {
            script.extend(truth_moves(&self.disks, name, &unit(v), value));
        }
        for chains in &self.chains {
            let wire = chains.iter().find(|w| assignment[w.literal.var] == w.literal.positive)?;
            script.extend(self.wire_script(wire));
        }
        Some(script)
    }

    /// Clear the slot, drop `D_c` into it, and shift each transition onto its
    /// successor's original center, ending with `T_c` leaving its heavy twin.
    pub fn wire_script(&self, wire: &WireChain) -> Vec<(usize, Point)> {
        let b = &self.disks.disks[wire.blocking].center;
        let away = b.sub(&wire.slot);
        let len = away.x.abs() + away.y.abs();
        let target = Point::new(&wire.slot.x + &(&away.x / &len), &wire.slot.y + &(&away.y / &len));
        let mut script = vec![(wire.blocking, target)];
        let t = &wire.transitions;
        script.push((*t.last().expect("non-empty"), wire.slot.clone()));
        for k in (0..t.len() - 1).rev() {
            script.push((t[k], self.disks.disks[t[k + 1]].center.clone()));
        }
        script
    }

    pub fn run(&mut self, assignment: &[bool]) -> Result<ChainReport, ChainError> {
        let script = self.satisfying_script(assignment).expect("assignment satisfies every clause");
        execute_chain_move(&mut self.disks, &script)
    }
}

fn lit(var: usize, positive: bool) -> Literal {
    Literal { var, positive }
}

fn wire(var: usize, positive: bool, side: ClauseSide, arm_variant: u8, corners: &[(i64, i64)]) -> Wire {
    Wire { literal: lit(var, positive), side, arm_variant, corners: corners.to_vec() }
}

/// `(x1 ∨ ¬x2 ∨ x4) ∧ (x2 ∨ x3 ∨ ¬x4) ∧ (¬x2 ∨ ¬x3 ∨ x4)`; the third clause
/// nests inside the first above the variable row, the second sits below.
pub fn worked_formula() -> LayoutSpec {
    use ClauseSide::*;
    LayoutSpec {
        variable_names: ["x1", "x2", "x3", "x4"].map(String::from).to_vec(),
        variables: vec![(0, 0), (50, 0), (100, 0), (150, 0)],
        clauses: vec![
            ClauseSpec {
                center: (54, 29),
                below: false,
                wires: vec![
                    wire(0, true, Left, 1, &[(-4, 29)]),
                    wire(1, false, Bottom, 1, &[]),
                    wire(3, true, Right, 1, &[(146, 29)]),
                ],
            },
            ClauseSpec {
                center: (96, -20),
                below: true,
                wires: vec![
                    wire(1, true, Left, 1, &[(46, -20)]),
                    wire(2, true, Bottom, 1, &[]),
                    wire(3, false, Right, 1, &[(154, -20)]),
                ],
            },
            ClauseSpec {
                center: (104, 20),
                below: false,
                wires: vec![
                    wire(1, false, Left, 2, &[(60, 20)]),
                    wire(2, false, Bottom, 1, &[]),
                    wire(3, true, Right, 2, &[(140, 20)]),
                ],
            },
        ],
    }
}

/// The assignment used for the worked formula.
pub const WORKED_ASSIGNMENT: [bool; 4] = [true, false, true, true];

/// The first clause of the worked formula on its own: `(x1 ∨ ¬x2 ∨ x4)`.
pub fn worked_component() -> LayoutSpec {
    let full = worked_formula();
    LayoutSpec {
        variable_names: ["x1", "x2", "x4"].map(String::from).to_vec(),
        variables: vec![(0, 0), (50, 0), (150, 0)],
        clauses: vec![ClauseSpec {
            wires: full.clauses[0]
                .wires
                .iter()
                .map(|w| {
                    let var = if w.literal.var == 3 { 2 } else { w.literal.var };
                    Wire { literal: lit(var, w.literal.positive), ..w.clone() }
                })
                .collect(),
            ..full.clauses[0].clone()
        }],
    }
}

pub fn evaluate(spec: &LayoutSpec, assignment: &[bool]) -> bool {
    spec.clauses
        .iter()
        .all(|c| c.wires.iter().any(|w| assignment[w.literal.var] == w.literal.positive))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments() {
        assert_eq!(segment_cells((0, 0), (9, 0)), vec![(3, 0), (6, 0), (9, 0)]);
        assert_eq!(segment_cells((0, 0), (0, -5)), vec![(0, -2), (0, -5)]);
        assert_eq!(segment_cells((7, 0), (0, 0)), vec![(5, 0), (3, 0), (0, 0)]);
    }

    #[test]
    fn only_intended_intersections() {
        for spec in [worked_component(), worked_formula()] {
            let a = Assembly::build(&spec, Metric::L2);
            for (x, y) in a.disks.intersecting_pairs() {
                assert!(a.intended_intersection(x, y), "{} {:?} / {} {:?}", a.disks.labels[x], a.disks.disks[x].center, a.disks.labels[y], a.disks.disks[y].center);
            }
        }
    }

    #[test]
    fn component_chain() {
        for metric in [Metric::L1, Metric::L2] {
            for assignment in [[true, true, false], [false, false, false], [false, true, true]] {
                let mut a = Assembly::build(&worked_component(), metric);
                let report = a.run(&assignment).unwrap();
                assert!(report.final_edgeless);
                assert!(report.max_weighted_cost <= Rational::one());
            }
        }
    }

    #[test]
    fn unsatisfied_component_has_no_script() {
        let a = Assembly::build(&worked_component(), Metric::L2);
        assert!(a.satisfying_script(&[false, true, false]).is_none());
    }

    #[test]
    fn formula_chains() {
        let spec = worked_formula();
        assert!(evaluate(&spec, &WORKED_ASSIGNMENT));
        let mut satisfying = 0;
        for bits in 0..16u32 {
            let assignment: Vec<bool> = (0..4).map(|i| bits >> i & 1 == 1).collect();
            let mut a = Assembly::build(&spec, Metric::L2);
            match a.satisfying_script(&assignment) {
                Some(_) => {
                    satisfying += 1;
                    let report = a.run(&assignment).unwrap();
                    assert!(report.final_edgeless && report.max_weighted_cost <= Rational::one());
                }
                None => assert!(!evaluate(&spec, &assignment)),
            }
        }
        assert!(satisfying > 0);
        let mut a = Assembly::build(&spec, Metric::L1);
        assert!(a.run(&WORKED_ASSIGNMENT).unwrap().final_edgeless);
    }
}
