//! Interior holes: the part of an enclosure's convex hull that no blocked
//! zone covers.
//!
//! A hole is bounded by arcs that bulge into it, so its diameter is the
//! largest distance between two of its vertices. Vertices are circle-circle
//! intersections `A ± sqrt(H) * B` with rational `A`, `B`, `H`; they are carried
//! as rational enclosures, and every undecided comparison keeps the vertex,
//! which can only enlarge the reported diameter bound.

use serde::Serialize;

use super::disks::{blocked_zone_contains, blocked_zone_radius_sq, GadgetDiskCollection};
use super::gadgets::{build_arm, build_cell_gadget, build_variable_gadget, quarter, ArmPlacement};
use crate::geometry::{squared_euclidean, Disk, DiskKind, Metric, Point};
use crate::rational::{q, sqrt_bounds, Rational};

const SQRT_BITS: u32 = 64;

/// Closed rational interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn exact(v: Rational) -> Self {
        Enclosure { lo: v.clone(), hi: v }
    }

    fn add(&self, o: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn sub(&self, o: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    fn mul(&self, o: &Enclosure) -> Enclosure {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        Enclosure {
            lo: c.iter().min().expect("four").clone(),
            hi: c.iter().max().expect("four").clone(),
        }
    }

    fn square(&self) -> Enclosure {
        if !self.lo.is_negative() {
            Enclosure { lo: &self.lo * &self.lo, hi: &self.hi * &self.hi }
        } else if !self.hi.is_positive() {
            Enclosure { lo: &self.hi * &self.hi, hi: &self.lo * &self.lo }
        } else {
            let m = std::cmp::max(-self.lo.clone(), self.hi.clone());
            Enclosure { lo: Rational::zero(), hi: &m * &m }
        }
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }
}

#[derive(Debug, Clone)]
pub struct EnclosedPoint {
    pub x: Enclosure,
    pub y: Enclosure,
}

impl EnclosedPoint {
    pub fn exact(p: &Point) -> Self {
        EnclosedPoint { x: Enclosure::exact(p.x.clone()), y: Enclosure::exact(p.y.clone()) }
    }

    pub fn dist_sq(&self, o: &EnclosedPoint) -> Enclosure {
        self.x.sub(&o.x).square().add(&self.y.sub(&o.y).square())
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.x.mid_f64(), self.y.mid_f64())
    }
}

/// Intersection points of two circle boundaries, or none when they do not cross.
pub fn circle_intersections(c1: &Point, r1_sq: &Rational, c2: &Point, r2_sq: &Rational) -> Vec<EnclosedPoint> {
    let u = c2.sub(c1);
    let d = squared_euclidean(c1, c2);
    if d.is_zero() {
        return Vec::new();
    }
    // Foot of the chord at c1 + t*u, half-chord sqrt(h) * |u|.
    let t = (&d + r1_sq - r2_sq) / (&d * &q(2, 1));
    let h = r1_sq / &d - &t * &t;
    if !h.is_positive() {
        return Vec::new();
    }
    let (lo, hi) = sqrt_bounds(&h, SQRT_BITS);
    let s = Enclosure { lo, hi };
    let ax = &c1.x + &(&t * &u.x);
    let ay = &c1.y + &(&t * &u.y);
    let (bx, by) = (-u.y.clone(), u.x.clone());
    [1i64, -1]
        .into_iter()
        .map(|sign| {
            let sg = Rational::from_integer(sign);
            EnclosedPoint {
                x: Enclosure::exact(ax.clone()).add(&s.mul(&Enclosure::exact(&bx * &sg))),
                y: Enclosure::exact(ay.clone()).add(&s.mul(&Enclosure::exact(&by * &sg))),
            }
        })
        .collect()
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    let (ax, ay) = (&a.x - &o.x, &a.y - &o.y);
    let (bx, by) = (&b.x - &o.x, &b.y - &o.y);
    &ax * &by - &ay * &bx
}

/// Counter-clockwise convex hull, collinear points dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for p in iter {
            while hull.len() >= start + 2
                && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p).is_positive()
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

/// `false` only when `p` is certainly outside or on the hull boundary.
fn maybe_strictly_inside(hull: &[Point], p: &EnclosedPoint) -> bool {
    (0..hull.len()).all(|i| {
        let a = &hull[i];
        let b = &hull[(i + 1) % hull.len()];
        let ex = Enclosure::exact(&b.x - &a.x);
        let ey = Enclosure::exact(&b.y - &a.y);
        let px = p.x.sub(&Enclosure::exact(a.x.clone()));
        let py = p.y.sub(&Enclosure::exact(a.y.clone()));
        ex.mul(&py).sub(&ey.mul(&px)).hi.is_positive()
    })
}

fn point_strictly_inside(hull: &[Point], p: &Point) -> bool {
    (0..hull.len()).all(|i| cross(&hull[i], &hull[(i + 1) % hull.len()], p).is_positive())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HoleError {
    #[error("disk {0} is not a transition disk")]
    NotATransition(usize),
    #[error("transition {0} is not enclosed by heavy disks")]
    Unenclosed(usize),
    #[error("unknown cell shape {0:?}")]
    UnknownShape(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HoleReport {
    pub nonempty: bool,
    pub contains_center: bool,
    pub admits_one_disk: bool,
    pub vertices: usize,
    /// Rigorous upper bound on the squared diameter.
    pub diameter_sq_upper: Rational,
    pub diameter_approx: f64,
    /// Kept vertices, approximately, for plots and diagnostics.
    pub vertex_approx: Vec<(f64, f64)>,
}

/// Enclosure of transition disk `idx`: heavy disks centered closer than 2.
fn enclosure(collection: &GadgetDiskCollection, idx: usize) -> Vec<&Disk> {
    let c = &collection.disks[idx].center;
    collection
        .disks
        .iter()
        .enumerate()
        .filter(|(j, d)| {
            *j != idx
                && matches!(d.kind, DiskKind::Heavy(_))
                && d.moved_to.is_none()
                && squared_euclidean(&d.center, c) < q(4, 1)
        })
        .map(|(_, d)| d)
        .collect()
}

/// Zones that can reach the hull: any disk with a nonempty zone within 3.
fn nearby_zones(collection: &GadgetDiskCollection, idx: usize) -> Vec<(Point, Rational)> {
    let c = &collection.disks[idx].center;
    collection
        .disks
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != idx)
        .filter_map(|(_, d)| {
            let r2 = blocked_zone_radius_sq(d)?;
            (squared_euclidean(d.position(), c) < q(9, 1)).then(|| (d.position().clone(), r2))
        })
        .collect()
}

pub fn hole_vertices(collection: &GadgetDiskCollection, idx: usize) -> Result<Vec<EnclosedPoint>, HoleError> {
    if collection.disks[idx].kind != DiskKind::Transition {
        return Err(HoleError::NotATransition(idx));
    }
    let walls: Vec<Point> = enclosure(collection, idx).iter().map(|d| d.center.clone()).collect();
    let hull = convex_hull(&walls);
    let center = &collection.disks[idx].center;
    if hull.len() < 3 || !point_strictly_inside(&hull, center) {
        return Err(HoleError::Unenclosed(idx));
    }
    let zones = nearby_zones(collection, idx);
    let mut kept = Vec::new();
    for i in 0..zones.len() {
        for j in i + 1..zones.len() {
            for p in circle_intersections(&zones[i].0, &zones[i].1, &zones[j].0, &zones[j].1) {
                if !maybe_strictly_inside(&hull, &p) {
                    continue;
                }
                let covered = zones.iter().enumerate().any(|(k, (zc, r2))| {
                    k != i && k != j && p.dist_sq(&EnclosedPoint::exact(zc)).hi < *r2
                });
                if !covered {
                    kept.push(p);
                }
            }
        }
    }
    Ok(kept)
}

pub fn hole_report(collection: &GadgetDiskCollection, idx: usize) -> Result<HoleReport, HoleError> {
    let vertices = hole_vertices(collection, idx)?;
    let center = &collection.disks[idx].center;
    let contains_center = collection
        .disks
        .iter()
        .enumerate()
        .all(|(j, d)| j == idx || !blocked_zone_contains(d, center));
    let mut diam = Rational::zero();
    let mut pair = (0, 0);
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let d = vertices[a].dist_sq(&vertices[b]).hi;
            if d > diam {
                diam = d;
                pair = (a, b);
            }
        }
    }
    let diameter_approx = if vertices.len() >= 2 {
        let (a, b) = (vertices[pair.0].approx(), vertices[pair.1].approx());
        ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
    } else {
        0.0
    };
    Ok(HoleReport {
        nonempty: contains_center || !vertices.is_empty(),
        contains_center,
        admits_one_disk: diam < Rational::one(),
        vertices: vertices.len(),
        diameter_sq_upper: diam,
        diameter_approx,
        vertex_approx: vertices.iter().map(EnclosedPoint::approx).collect(),
    })
}

/// Independent check by sampling: the squared diameter, exact, of the
/// uncovered grid points at spacing `1/resolution` strictly inside the hull.
/// A lower bound on the true squared diameter.
pub fn grid_diameter_lower_bound(
    collection: &GadgetDiskCollection,
    idx: usize,
    resolution: i64,
    half_width: &Rational,
) -> Result<Rational, HoleError> {
    let walls: Vec<Point> = enclosure(collection, idx).iter().map(|d| d.center.clone()).collect();
    let hull = convex_hull(&walls);
    if hull.len() < 3 {
        return Err(HoleError::Unenclosed(idx));
    }
    let center = collection.disks[idx].center.clone();
    let zones = nearby_zones(collection, idx);
    let steps = (half_width * &Rational::from_integer(resolution)).floor();
    let steps: i64 = steps.to_string().parse().expect("small integer");
    let mut hits: Vec<(i64, i64)> = Vec::new();
    for i in -steps..=steps {
        for j in -steps..=steps {
            let p = Point::new(&center.x + &q(i, resolution), &center.y + &q(j, resolution));
            if !point_strictly_inside(&hull, &p) {
                continue;
            }
            if zones.iter().all(|(zc, r2)| squared_euclidean(zc, &p) >= *r2) {
                hits.push((i, j));
            }
        }
    }
    let mut best = 0i64;
    for a in 0..hits.len() {
        for b in a + 1..hits.len() {
            let (dx, dy) = (hits[a].0 - hits[b].0, hits[a].1 - hits[b].1);
            best = best.max(dx * dx + dy * dy);
        }
    }
    Ok(q(best, resolution * resolution))
}

/// Four `k`-heavy disks at the corners of a unit square leave no hole: the
/// minimax center is covered (`1/2 < r^2`) and so is every point of the
/// `1/128` grid strictly inside the square.
pub fn square_hole_empty(k: u32) -> bool {
    let corners: Vec<Disk> = [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(x, y)| Disk::unit(Point::from_ints(x, y), DiskKind::Heavy(k), Metric::L2))
        .collect();
    let covered = |p: &Point| corners.iter().any(|d| blocked_zone_contains(d, p));
    if !covered(&Point::new(q(1, 2), q(1, 2))) {
        return false;
    }
    (1..128).all(|i| (1..128).all(|j| covered(&Point::new(q(i, 128), q(j, 128)))))
}

pub fn check_square_hole_empty() -> bool {
    square_hole_empty(6)
}

/// The cell shapes that occur in the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CellShape {
    Regular,
    /// Squeezed cell of the third arm's bottom row, walls at `x ± 1/2`.
    IrregularA,
    /// Arm end `D_c` next to a slot.
    IrregularB,
    /// Corner cell of the third arm's bottom row next to `D_c`.
    IrregularC,
}

impl CellShape {
    pub const ALL: [CellShape; 4] =
        [CellShape::Regular, CellShape::IrregularA, CellShape::IrregularB, CellShape::IrregularC];

    /// Diameter bound claimed for the shape.
    pub fn claimed_bound(self) -> Rational {
        match self {
            CellShape::Regular => Rational::one(),
            CellShape::IrregularA => q(31, 100),
            CellShape::IrregularB => q(11, 100),
            CellShape::IrregularC => q(57, 100),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CellShape::Regular => "regular",
            CellShape::IrregularA => "irregular-a",
            CellShape::IrregularB => "irregular-b",
            CellShape::IrregularC => "irregular-c",
        }
    }
}

impl std::str::FromStr for CellShape {
    type Err = HoleError;

    fn from_str(s: &str) -> Result<Self, HoleError> {
        CellShape::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().trim_start_matches("irregular-") == s)
            .ok_or_else(|| HoleError::UnknownShape(s.to_string()))
    }
}

/// Left half of a variable gadget with all three arms, `S_x` at the origin.
pub fn left_side_with_arms(metric: Metric) -> GadgetDiskCollection {
    let origin = Point::from_ints(0, 0);
    let mut c = build_variable_gadget(&origin, false, metric);
    for v in 1..=3 {
        c.extend(build_arm(&origin, ArmPlacement::new(v, false, false), metric));
    }
    c
}

/// The gadget holding a cell of the given shape, and the index of its transition.
pub fn shape_instance(shape: CellShape, metric: Metric) -> (GadgetDiskCollection, usize) {
    let (c, at) = match shape {
        CellShape::Regular => (build_cell_gadget(&Point::from_ints(0, 0), metric), quarter(0, 0)),
        CellShape::IrregularA => (left_side_with_arms(metric), quarter(-50, -24)),
        CellShape::IrregularB => (left_side_with_arms(metric), quarter(-16, -23)),
        CellShape::IrregularC => (left_side_with_arms(metric), quarter(-26, -24)),
    };
    let idx = c.find_at(&at, DiskKind::Transition).expect("shape transition present");
    (c, idx)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeCheck {
    pub shape: CellShape,
    pub report: HoleReport,
    pub bound: Rational,
    /// Whether the rigorous diameter upper bound is below the claimed bound.
    pub within_bound: bool,
}

pub fn check_cell_hole(shape: CellShape, metric: Metric) -> ShapeCheck {
    let (c, idx) = shape_instance(shape, metric);
    let report = hole_report(&c, idx).expect("shapes are enclosed");
    let bound = shape.claimed_bound();
    let within_bound = report.diameter_sq_upper < &bound * &bound;
    ShapeCheck { shape, report, bound, within_bound }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_holes() {
        assert!(check_square_hole_empty());
        assert!(!square_hole_empty(1));
    }

    #[test]
    fn hull_is_ccw() {
        let pts: Vec<Point> = [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 0)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert!(point_strictly_inside(&h, &Point::from_ints(1, 1)));
        assert!(!point_strictly_inside(&h, &Point::from_ints(1, 0)));
    }

    #[test]
    fn intersections_are_tight() {
        let pts = circle_intersections(&Point::from_ints(0, 0), &q(1, 1), &Point::from_ints(1, 0), &q(1, 1));
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert!(p.x.lo <= q(1, 2) && q(1, 2) <= p.x.hi);
            let y2 = p.y.square();
            assert!(y2.lo <= q(3, 4) && q(3, 4) <= y2.hi);
        }
        assert!(circle_intersections(&Point::from_ints(0, 0), &q(1, 1), &Point::from_ints(3, 0), &q(1, 1)).is_empty());
    }

    #[test]
    fn regular_cell() {
        let r = check_cell_hole(CellShape::Regular, Metric::L2).report;
        assert!(r.nonempty && r.contains_center && r.admits_one_disk);
        assert_eq!(r.vertices, 4);
    }

    #[test]
    fn non_transition_rejected() {
        let c = build_cell_gadget(&Point::from_ints(0, 0), Metric::L2);
        assert_eq!(hole_report(&c, 0), Err(HoleError::NotATransition(0)));
        assert!("irregular-d".parse::<CellShape>().is_err());
        assert_eq!("b".parse::<CellShape>(), Ok(CellShape::IrregularB));
    }
}
