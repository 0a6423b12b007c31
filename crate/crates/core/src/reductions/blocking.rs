//! Point checks behind the blocking argument of the variable gadget.
//!
//! With `S_x` moved to the left truth slot, `B<S_t,1>` is pushed into a small
//! rectangle where it meets all three left link disks, and the link and slot
//! blocking disks it displaces close the three left slots.

use serde::Serialize;

use super::disks::GadgetDiskCollection;
use super::gadgets::{build_variable_gadget, quarter};
use super::holes::{circle_intersections, EnclosedPoint};
use crate::geometry::{disks_intersect, lm_distance, squared_euclidean, DiskKind, Metric, Point};
use crate::rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockingReport {
    pub metric: Metric,
    pub checks: Vec<CheckLine>,
}

impl BlockingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckLine> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn pt(x: Rational, y: Rational) -> Point {
    Point::new(x, y)
}

fn zone_r2() -> Rational {
    let r = q(63, 64);
    &r * &r
}

/// `((63/64)^2 - 1/4)`, the squared half-height of the lens two adjacent
/// 6-heavy zones cover.
pub fn observation_height_sq() -> Rational {
    zone_r2() - q(1, 4)
}

/// Points `(x', y0 + t h)` with `x'` on the `1/128` grid of `[x-1/2, x+3/2]`
/// and `t` in `{-1, -1/2, 0, 1/2, 1}` lie in the union of the zones of
/// `H1 = (x, y0)` and `H2 = (x+1, y0)`: strictly for `|t| < 1`, in the closure
/// for `|t| = 1`. The squared distance `dx^2 + t^2 h^2` is rational.
fn observation_holds(dx_to_h1: &Rational, dx_to_h2: &Rational, t: &Rational) -> bool {
    let hh = observation_height_sq();
    let vert = &(t * t) * &hh;
    let d = std::cmp::min(dx_to_h1 * dx_to_h1, dx_to_h2 * dx_to_h2) + vert;
    if t.abs() == Rational::one() {
        d <= zone_r2()
    } else {
        d < zone_r2()
    }
}

/// The band check is translation invariant, so it runs once on offsets.
pub fn observation_band_covered() -> bool {
    let ts = [q(-1, 1), q(-1, 2), q(0, 1), q(1, 2), q(1, 1)];
    (0..=256).all(|i| {
        let along = q(i - 64, 128);
        let to_h2 = &along - &Rational::one();
        ts.iter().all(|t| observation_holds(&along, &to_h2, t))
    })
}

/// Horizontally and vertically adjacent unmoved 6-heavy pairs.
fn adjacent_pairs(c: &GadgetDiskCollection) -> (usize, usize) {
    let heavies: std::collections::HashSet<&Point> = c
        .disks
        .iter()
        .filter(|d| d.kind == DiskKind::Heavy(6) && d.moved_to.is_none())
        .map(|d| &d.center)
        .collect();
    let count = |dx: i64, dy: i64| {
        heavies
            .iter()
            .filter(|h| heavies.contains(&pt(&h.x + &Rational::from_integer(dx), &h.y + &Rational::from_integer(dy))))
            .count()
    };
    (count(1, 0), count(0, 1))
}

fn distance_below_one(a: &Point, b: &Point, metric: Metric) -> bool {
    lm_distance(a, b, metric) < Rational::one()
}

/// Runs every check on a variable gadget at the origin with `S_x` moved to
/// `(-3, 0)`. Disk intersection is Euclidean; each distance claim is also
/// checked under `metric`.
pub fn check_blocking_lemmas(metric: Metric) -> BlockingReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(CheckLine { name: name.to_string(), passed, detail })
    };

    let mut g = build_variable_gadget(&Point::from_ints(0, 0), false, metric);
    let sx = g.find("S_x").expect("S_x");
    g.disks[sx].moved_to = Some(Point::from_ints(-3, 0));

    let hh = observation_height_sq();
    push(
        "lens half-height",
        hh == q(2945, 4096) && hh.is_positive(),
        format!("(63/64)^2 - 1/4 = {hh}"),
    );
    let (horizontal, vertical) = adjacent_pairs(&g);
    push(
        "adjacent zones cover the band",
        observation_band_covered() && horizontal > 0 && vertical > 0,
        format!("{horizontal} horizontal and {vertical} vertical 6-heavy pairs"),
    );

    let bt1 = g.find("B<S_t,1>").expect("B<S_t,1>");
    let links: Vec<usize> = (1..=3).map(|i| g.find(&format!("L<S_c,{i}>")).expect("link")).collect();
    let expected_links = [quarter(-16, 3), quarter(-19, 0), quarter(-16, -3)];
    push(
        "link disk positions",
        links.iter().zip(&expected_links).all(|(&l, p)| g.disks[l].center == *p),
        "L<S_c,1..3> at (-4,3/4), (-19/4,0), (-4,-3/4)".into(),
    );
    let corners = [
        pt(q(-4, 1), q(1, 100)),
        pt(q(-199, 50), q(1, 100)),
        pt(q(-199, 50), q(-1, 100)),
        pt(q(-4, 1), q(-1, 100)),
    ];
    for corner in &corners {
        g.disks[bt1].moved_to = Some(corner.clone());
        let meets = links.iter().all(|&l| {
            disks_intersect(&g.disks[bt1], &g.disks[l]) && distance_below_one(corner, &g.disks[l].center, metric)
        });
        push("B<S_t,1> at a corner of R' meets all links", meets, format!("corner {corner}"));
    }
    g.disks[bt1].moved_to = None;

    // Closest feasible points of the first slot: the zones of (-5,3) and
    // (-3,3) meet the zone of (-4, 3 3/4) at their lower crossing.
    let top = quarter(-16, 15);
    let exact_corners: Vec<EnclosedPoint> = [Point::from_ints(-5, 3), Point::from_ints(-3, 3)]
        .iter()
        .flat_map(|side| circle_intersections(side, &zone_r2(), &top, &zone_r2()))
        .filter(|p| p.y.hi < q(3, 1))
        .collect();
    let refs = [pt(q(-405, 100), q(277, 100)), pt(q(-395, 100), q(277, 100))];
    for dx in [q(-1, 50), q(1, 50)] {
        let b = pt(&q(-4, 1) + &dx, q(197, 100));
        for r in &refs {
            let inside = squared_euclidean(&b, r) < Rational::one() && distance_below_one(&b, r, metric);
            push("reference point inside moved B<S_c,1> zone", inside, format!("B at {b}, point {r}"));
        }
        let be = EnclosedPoint::exact(&b);
        let covered = exact_corners.len() == 2
            && exact_corners.iter().all(|p| be.dist_sq(p).hi < Rational::one());
        push(
            "exact slot corners inside moved B<S_c,1> zone",
            covered,
            format!("B at {b}, corners ~{:?}", exact_corners.iter().map(EnclosedPoint::approx).collect::<Vec<_>>()),
        );
    }

    BlockingReport { metric, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let corner = pt(q(-199, 50), q(-1, 100));
        let l2 = pt(q(-19, 4), q(0, 1));
        assert!(squared_euclidean(&corner, &l2) < Rational::one());
        let b = pt(q(-199, 50), q(197, 100));
        assert!(squared_euclidean(&b, &pt(q(-405, 100), q(277, 100))) < Rational::one());
        assert_eq!(observation_height_sq(), q(2945, 4096));
    }

    #[test]
    fn observation_is_tight() {
        // On the boundary at t = 1 but not beyond.
        assert!(observation_holds(&q(1, 2), &q(-1, 2), &Rational::one()));
        assert!(!observation_holds(&q(1, 2), &q(-1, 2), &q(65, 64)));
    }

    #[test]
    fn all_checks_pass() {
        for metric in [Metric::L1, Metric::L2] {
            let r = check_blocking_lemmas(metric);
            assert!(r.all_passed(), "{:?}", r.failures());
            assert_eq!(r.checks.len(), 1 + 1 + 1 + 4 + 2 * 3);
        }
    }
}
