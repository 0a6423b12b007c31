//! Intervals, disks, points and the two distance metrics.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{q, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn translate(&self, by: &Point) -> Point {
        Point::new(&self.x + &by.x, &self.y + &by.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }
}

impl From<[Rational; 2]> for Point {
    fn from([x, y]: [Rational; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [Rational; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Metric {
    L1,
    L2,
}

/// L1 returns `|dx| + |dy|`; L2 returns the *squared* Euclidean distance.
pub fn lm_distance(p: &Point, r: &Point, metric: Metric) -> Rational {
    let dx = &p.x - &r.x;
    let dy = &p.y - &r.y;
    match metric {
        Metric::L1 => dx.abs() + dy.abs(),
        Metric::L2 => &dx * &dx + &dy * &dy,
    }
}

pub fn squared_euclidean(p: &Point, r: &Point) -> Rational {
    lm_distance(p, r, Metric::L2)
}

/// A weighted distance under one of the two metrics. For L2 only the square
/// is stored, so comparisons against rational thresholds stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MetricCost {
    L1(Rational),
    L2Squared(Rational),
}

impl MetricCost {
    pub fn zero(metric: Metric) -> Self {
        match metric {
            Metric::L1 => MetricCost::L1(Rational::zero()),
            Metric::L2 => MetricCost::L2Squared(Rational::zero()),
        }
    }

    pub fn weighted(weight: &Rational, p: &Point, r: &Point, metric: Metric) -> Self {
        match metric {
            Metric::L1 => MetricCost::L1(weight * &lm_distance(p, r, metric)),
            Metric::L2 => MetricCost::L2Squared(weight * weight * lm_distance(p, r, metric)),
        }
    }

    /// Compare against a non-negative rational threshold.
    pub fn cmp_value(&self, v: &Rational) -> Ordering {
        match self {
            MetricCost::L1(c) => c.cmp(v),
            MetricCost::L2Squared(c2) => c2.cmp(&(v * v)),
        }
    }

    pub fn le(&self, v: &Rational) -> bool {
        self.cmp_value(v) != Ordering::Greater
    }

    /// Comparable key: the value itself for L1, its square for L2.
    fn key(&self) -> &Rational {
        match self {
            MetricCost::L1(c) | MetricCost::L2Squared(c) => c,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            MetricCost::L1(c) => c.to_f64(),
            MetricCost::L2Squared(c2) => c2.to_f64().sqrt(),
        }
    }

    /// The exact value when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        match self {
            MetricCost::L1(c) => Some(c.clone()),
            MetricCost::L2Squared(c2) => c2.exact_sqrt(),
        }
    }
}

impl PartialOrd for MetricCost {
    /// Costs under different metrics are incomparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (MetricCost::L1(_), MetricCost::L1(_))
            | (MetricCost::L2Squared(_), MetricCost::L2Squared(_)) => {
                Some(self.key().cmp(other.key()))
            }
            _ => None,
        }
    }
}

impl fmt::Display for MetricCost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricCost::L1(c) => write!(f, "{c}"),
            MetricCost::L2Squared(c2) => match c2.exact_sqrt() {
                Some(c) => write!(f, "{c}"),
                None => write!(f, "sqrt({c2}) ~ {:.6}", c2.to_f64().sqrt()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub center: Rational,
    pub length: Rational,
    pub weight: Rational,
    pub id: usize,
}

impl Interval {
    pub fn new(center: Rational, length: Rational, weight: Rational, id: usize) -> Self {
        assert!(length.is_positive(), "interval length must be positive");
        assert!(weight.is_positive(), "interval weight must be positive");
        Interval { center, length, weight, id }
    }

    pub fn unit(center: Rational, id: usize) -> Self {
        Interval::new(center, Rational::one(), Rational::one(), id)
    }

    pub fn left(&self) -> Rational {
        &self.center - &(&self.length / &q(2, 1))
    }

    pub fn right(&self) -> Rational {
        &self.center + &(&self.length / &q(2, 1))
    }

    /// Weighted cost of moving the center to `x`.
    pub fn moving_cost(&self, x: &Rational) -> Rational {
        &self.weight * &(&self.center - x).abs()
    }

    pub fn moved_to(&self, center: Rational) -> Interval {
        Interval { center, ..self.clone() }
    }
}

/// Open intervals: they meet iff the center gap is strictly below the mean length.
pub fn intervals_intersect(a: &Interval, b: &Interval) -> bool {
    let gap = (&a.center - &b.center).abs();
    &gap * &q(2, 1) < &a.length + &b.length
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalCollection {
    pub items: Vec<Interval>,
    pub sorted: bool,
}

impl IntervalCollection {
    pub fn new(items: Vec<Interval>) -> Self {
        IntervalCollection { items, sorted: false }
    }

    /// Unit intervals with ids `0..n` in the given order.
    pub fn unit(centers: &[Rational]) -> Self {
        let items = centers
            .iter()
            .enumerate()
            .map(|(i, c)| Interval::unit(c.clone(), i))
            .collect();
        IntervalCollection::new(items)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn centers(&self) -> Vec<Rational> {
        self.items.iter().map(|i| i.center.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.items.iter().all(|i| i.length == Rational::one())
    }

    /// Permutation that sorts by center, ties by ascending id.
    pub fn sorted_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.items.len()).collect();
        order.sort_by(|&a, &b| {
            let (ia, ib) = (&self.items[a], &self.items[b]);
            ia.center.cmp(&ib.center).then(ia.id.cmp(&ib.id))
        });
        order
    }

    pub fn sorted(&self) -> IntervalCollection {
        let items = self
            .sorted_order()
            .into_iter()
            .map(|i| self.items[i].clone())
            .collect();
        IntervalCollection { items, sorted: true }
    }

    /// Checks the actual order, not just the flag.
    pub fn is_sorted(&self) -> bool {
        self.items.windows(2).all(|w| {
            w[0].center
                .cmp(&w[1].center)
                .then(w[0].id.cmp(&w[1].id))
                != Ordering::Greater
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "k")]
pub enum DiskKind {
    Transition,
    Heavy(u32),
}

impl DiskKind {
    /// Distance weight with K = 1.
    pub fn weight(&self) -> Rational {
        match self {
            DiskKind::Transition => q(1, 3),
            DiskKind::Heavy(k) => Rational::from_integer(1i64 << k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: Rational,
    pub kind: DiskKind,
    pub moved_to: Option<Point>,
    pub metric: Metric,
}

impl Disk {
    pub fn unit(center: Point, kind: DiskKind, metric: Metric) -> Self {
        Disk { center, radius: q(1, 2), kind, moved_to: None, metric }
    }

    pub fn position(&self) -> &Point {
        self.moved_to.as_ref().unwrap_or(&self.center)
    }

    pub fn weight(&self) -> Rational {
        self.kind.weight()
    }

    /// Weighted distance from the original center to `target`.
    pub fn moving_cost(&self, target: &Point) -> MetricCost {
        MetricCost::weighted(&self.weight(), &self.center, target, self.metric)
    }
}

/// Open Euclidean disks at their current positions.
pub fn disks_intersect(a: &Disk, b: &Disk) -> bool {
    let r = &a.radius + &b.radius;
    squared_euclidean(a.position(), b.position()) < &r * &r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn metric_examples() {
        assert_eq!(lm_distance(&p(0, 0), &p(3, 4), Metric::L2), q(25, 1));
        assert_eq!(lm_distance(&p(0, 0), &p(3, 4), Metric::L1), q(7, 1));
        let half = Point::new(q(1, 2), q(0, 1));
        assert_eq!(lm_distance(&half, &p(0, 0), Metric::L2), q(1, 4));
    }

    #[test]
    fn open_interval_examples() {
        let u = |c| Interval::unit(c, 0);
        assert!(!intervals_intersect(&u(q(0, 1)), &u(q(1, 1))));
        assert!(intervals_intersect(&u(q(0, 1)), &u(q(1, 2))));
        let long = Interval::new(q(3, 2), q(2, 1), q(1, 1), 1);
        assert!(!intervals_intersect(&u(q(0, 1)), &long));
    }

    #[test]
    fn moving_cost_examples() {
        assert_eq!(Interval::unit(q(0, 1), 0).moving_cost(&q(3, 2)), q(3, 2));
        let heavy = Interval::new(q(0, 1), q(1, 1), q(12 * 4 * 4, 1), 0);
        assert_eq!(heavy.moving_cost(&q(1, 4)), q(48, 1));
        let t = Disk::unit(p(0, 0), DiskKind::Transition, Metric::L1);
        assert_eq!(t.moving_cost(&p(2, 1)), MetricCost::L1(q(1, 1)));
        let t2 = Disk::unit(p(0, 0), DiskKind::Transition, Metric::L2);
        assert_eq!(t2.moving_cost(&p(3, 0)).exact(), Some(q(1, 1)));
        assert_eq!(t2.moving_cost(&p(0, 0)).exact(), Some(q(0, 1)));
    }

    #[test]
    fn l2_cost_orders_by_square() {
        let t = Disk::unit(p(0, 0), DiskKind::Transition, Metric::L2);
        let diag = t.moving_cost(&Point::new(q(5, 2), q(1, 4)));
        assert!(diag.le(&q(1, 1)));
        assert!(!t.moving_cost(&p(3, 1)).le(&q(1, 1)));
        assert!(diag < t.moving_cost(&p(3, 0)));
    }

    #[test]
    fn disk_weights() {
        assert_eq!(DiskKind::Transition.weight(), q(1, 3));
        assert_eq!(DiskKind::Heavy(6).weight(), q(64, 1));
        assert_eq!(DiskKind::Heavy(1).weight(), q(2, 1));
    }

    #[test]
    fn point_serde_is_pair() {
        let pt = Point::new(q(1, 2), q(-3, 1));
        let s = serde_json::to_string(&pt).unwrap();
        assert_eq!(s, r#"["0.5","-3"]"#);
        assert_eq!(serde_json::from_str::<Point>(&s).unwrap(), pt);
    }
}
