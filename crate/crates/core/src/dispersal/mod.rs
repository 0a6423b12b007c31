//! Exact O(n log n) interval dispersal.
//!
//! Sorted intervals are cut into maximal runs whose consecutive centers are at
//! most `s` apart. Each run is equispaced at a median of its breakpoints, and
//! adjacent runs whose optima collide are merged, left to right with a stack,
//! until no two neighbours collide.
//!
//! Breakpoints are stored in the frame of the whole sorted collection: the
//! `i`-th (0-based) of `n` intervals contributes `c_i + (n - 1 - i) s`. A run
//! `a..=b` on its own would contribute `c_i + (b - i) s`, a constant shift of
//! `(n - 1 - b) s`, so merging two runs is a plain multiset union and the
//! collision test `y1 <= x2 + |J| s` reduces to `y1 <= x2`.

mod treap;

use serde::Serialize;

use crate::geometry::IntervalCollection;
use crate::rational::Rational;
use treap::{TreapArena, NIL};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DispersalError {
    #[error("interval {id} has length {length}, expected 1")]
    NonUnitLength { id: usize, length: Rational },
    #[error("separation s = {0} is below 1")]
    SeparationBelowOne(Rational),
    #[error("median of an empty breakpoint set")]
    EmptyBreakpoints,
    #[error("blocks {left} and {right} are not adjacent")]
    NonAdjacentBlocks { left: usize, right: usize },
    #[error("intervals must be sorted by center")]
    Unsorted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispersalInstance {
    pub intervals: IntervalCollection,
    pub s: Rational,
}

impl DispersalInstance {
    pub fn new(intervals: IntervalCollection, s: Rational) -> Result<Self, DispersalError> {
        if s < Rational::one() {
            return Err(DispersalError::SeparationBelowOne(s));
        }
        if let Some(bad) = intervals.items.iter().find(|i| i.length != Rational::one()) {
            return Err(DispersalError::NonUnitLength { id: bad.id, length: bad.length.clone() });
        }
        Ok(DispersalInstance { intervals, s })
    }

    pub fn unit(centers: &[Rational], s: Rational) -> Result<Self, DispersalError> {
        Self::new(IntervalCollection::unit(centers), s)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MovementVector {
    displacements: Vec<Rational>,
    total: Rational,
}

impl MovementVector {
    pub fn new(displacements: Vec<Rational>) -> Self {
        let total = displacements.iter().map(|d| d.abs()).sum();
        MovementVector { displacements, total }
    }

    /// Keeps a caller-supplied total as is, for validating external claims.
    pub fn with_claimed_total(displacements: Vec<Rational>, total: Rational) -> Self {
        MovementVector { displacements, total }
    }

    pub fn zero(n: usize) -> Self {
        MovementVector { displacements: vec![Rational::zero(); n], total: Rational::zero() }
    }

    pub fn displacements(&self) -> &[Rational] {
        &self.displacements
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.displacements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.displacements.is_empty()
    }

    /// Σ w_i |d_i|.
    pub fn weighted_total(&self, weights: &[Rational]) -> Rational {
        assert_eq!(weights.len(), self.displacements.len());
        self.displacements.iter().zip(weights).map(|(d, w)| w * &d.abs()).sum()
    }
}

fn require_sorted(c: &IntervalCollection) -> Result<(), DispersalError> {
    if c.is_sorted() {
        Ok(())
    } else {
        Err(DispersalError::Unsorted)
    }
}

/// E(I, x) = Σ |x - c_i - (n - i) s| over the sorted collection (1-based i).
pub fn equispace_cost(
    sorted: &IntervalCollection,
    s: &Rational,
    x: &Rational,
) -> Result<Rational, DispersalError> {
    require_sorted(sorted)?;
    let n = sorted.len();
    Ok(sorted
        .items
        .iter()
        .enumerate()
        .map(|(i, it)| (x - &it.center - s * &Rational::from(n - 1 - i)).abs())
        .sum())
}

/// Final centers when the last interval sits at `x` and the rest follow at
/// spacing exactly `s`.
pub fn equispace_positions(
    sorted: &IntervalCollection,
    s: &Rational,
    x: &Rational,
) -> Result<Vec<Rational>, DispersalError> {
    require_sorted(sorted)?;
    let n = sorted.len();
    Ok((0..n).map(|i| x - &(s * &Rational::from(n - 1 - i))).collect())
}

/// Displacements `E_x(I)` in sorted order.
pub fn equispace_displacements(
    sorted: &IntervalCollection,
    s: &Rational,
    x: &Rational,
) -> Result<Vec<Rational>, DispersalError> {
    let pos = equispace_positions(sorted, s, x)?;
    Ok(pos.iter().zip(&sorted.items).map(|(p, it)| p - &it.center).collect())
}

/// The breakpoint multiset `{c_i + (n - i) s}`, ascending.
pub fn breakpoints(sorted: &IntervalCollection, s: &Rational) -> Result<Vec<Rational>, DispersalError> {
    require_sorted(sorted)?;
    let n = sorted.len();
    let mut out: Vec<Rational> = sorted
        .items
        .iter()
        .enumerate()
        .map(|(i, it)| &it.center + &(s * &Rational::from(n - 1 - i)))
        .collect();
    out.sort();
    Ok(out)
}

/// Lower and upper median of an ascending sequence; E is minimal exactly on
/// the closed range between them.
pub fn median_anchor(sorted_breakpoints: &[Rational]) -> Result<(Rational, Rational), DispersalError> {
    let n = sorted_breakpoints.len();
    if n == 0 {
        return Err(DispersalError::EmptyBreakpoints);
    }
    Ok((sorted_breakpoints[(n - 1) / 2].clone(), sorted_breakpoints[n / 2].clone()))
}

/// A run of sorted intervals `first..=last` (0-based) with its anchor range
/// in the cumulative frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub first: usize,
    pub last: usize,
    pub x1: Rational,
    pub x2: Rational,
    root: u32,
}

impl Block {
    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Collision test in the cumulative frame: `right.x1 <= left.x2`.
///
/// Equivalent to `y1 <= x2 + |right| s` on anchors expressed in each block's
/// own frame.
pub fn blocks_intersect_when_equispaced(left: &Block, right: &Block) -> bool {
    right.x1 <= left.x2
}

/// Sorted instance together with its current blocks.
#[derive(Debug, Clone)]
pub struct Partition {
    s: Rational,
    order: Vec<usize>,
    centers: Vec<Rational>,
    arena: TreapArena,
    blocks: Vec<Block>,
}

/// Splits the sorted instance into maximal runs with consecutive gaps `<= s`.
pub fn initial_partition(instance: &DispersalInstance) -> Partition {
    let order = instance.intervals.sorted_order();
    let centers: Vec<Rational> =
        order.iter().map(|&i| instance.intervals.items[i].center.clone()).collect();
    let n = centers.len();
    let s = instance.s.clone();
    let cumulative: Vec<Rational> = centers
        .iter()
        .enumerate()
        .map(|(i, c)| c + &(&s * &Rational::from(n - 1 - i)))
        .collect();
    let mut arena = TreapArena::with_capacity(n);
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..n {
        let run_ends = i + 1 == n || &centers[i + 1] - &centers[i] > s;
        if run_ends {
            // Inside a run b_{i+1} - b_i = c_{i+1} - c_i - s <= 0, so the
            // breakpoints are already descending.
            let root = arena.build_sorted(cumulative[start..=i].iter().rev().cloned());
            blocks.push(Partition::make_block(&arena, start, i, root));
            start = i + 1;
        }
    }
    Partition { s, order, centers, arena, blocks }
}

impl Partition {
    fn make_block(arena: &TreapArena, first: usize, last: usize, root: u32) -> Block {
        let k = arena.size(root);
        debug_assert_eq!(k, last - first + 1);
        let x1 = arena.kth(root, (k - 1) / 2).clone();
        let x2 = arena.kth(root, k / 2).clone();
        Block { first, last, x1, x2, root }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// Sorted position to input index.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn sorted_centers(&self) -> &[Rational] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Ascending cumulative breakpoints of block `i`.
    pub fn breakpoints_of(&self, i: usize) -> Vec<Rational> {
        if self.blocks[i].root == NIL {
            return Vec::new();
        }
        self.arena.in_order(self.blocks[i].root)
    }

    /// Shift from the cumulative frame to the frame of a block ending at `last`.
    fn frame_offset(&self, last: usize) -> Rational {
        &self.s * &Rational::from(self.centers.len() - 1 - last)
    }

    /// Anchor range of block `i` in its own frame, i.e. as positions of its
    /// last interval.
    pub fn local_anchors(&self, i: usize) -> (Rational, Rational) {
        let b = &self.blocks[i];
        let off = self.frame_offset(b.last);
        (&b.x1 - &off, &b.x2 - &off)
    }

    pub fn merge_blocks(&mut self, left: usize, right: usize) -> Result<(), DispersalError> {
        if right != left + 1 || right >= self.blocks.len() {
            return Err(DispersalError::NonAdjacentBlocks { left, right });
        }
        let r = self.blocks.remove(right);
        let l = &self.blocks[left];
        let root = self.arena.union(l.root, r.root);
        self.blocks[left] = Self::make_block(&self.arena, l.first, r.last, root);
        Ok(())
    }

    /// Runs the stack scan to its fixpoint.
    pub fn merge_all(&mut self) {
        let mut stack: Vec<Block> = Vec::with_capacity(self.blocks.len());
        for block in std::mem::take(&mut self.blocks) {
            let mut cur = block;
            while let Some(top) = stack.last() {
                if !blocks_intersect_when_equispaced(top, &cur) {
                    break;
                }
                let top = stack.pop().unwrap();
                let root = self.arena.union(top.root, cur.root);
                cur = Self::make_block(&self.arena, top.first, cur.last, root);
            }
            stack.push(cur);
        }
        self.blocks = stack;
    }

    /// Final centers in sorted order: each block equispaced with its last
    /// interval at the lower median.
    pub fn placement(&self) -> Vec<Rational> {
        let n = self.centers.len();
        let mut out = Vec::with_capacity(n);
        for b in &self.blocks {
            for i in b.first..=b.last {
                out.push(&b.x1 - &(&self.s * &Rational::from(n - 1 - i)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dispersal {
    pub total: Rational,
    pub movement: MovementVector,
    /// Final centers, input order.
    pub final_centers: Vec<Rational>,
    /// Sorted index ranges of the final blocks.
    pub blocks: Vec<(usize, usize)>,
}

pub fn disperse(instance: &DispersalInstance) -> Dispersal {
    let n = instance.len();
    if n <= 1 {
        return Dispersal {
            total: Rational::zero(),
            movement: MovementVector::zero(n),
            final_centers: instance.intervals.centers(),
            blocks: (0..n).map(|i| (i, i)).collect(),
        };
    }
    let mut partition = initial_partition(instance);
    partition.merge_all();
    let placed = partition.placement();
    let mut final_centers = vec![Rational::zero(); n];
    let mut displacements = vec![Rational::zero(); n];
    for (pos, &idx) in partition.order.iter().enumerate() {
        displacements[idx] = &placed[pos] - &partition.centers[pos];
        final_centers[idx] = placed[pos].clone();
    }
    let movement = MovementVector::new(displacements);
    Dispersal {
        total: movement.total().clone(),
        movement,
        final_centers,
        blocks: partition.blocks.iter().map(|b| (b.first, b.last)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn sorted(cs: &[Rational]) -> IntervalCollection {
        IntervalCollection::unit(cs).sorted()
    }

    fn inst(cs: &[Rational], s: Rational) -> DispersalInstance {
        DispersalInstance::unit(cs, s).unwrap()
    }

    #[test]
    fn equispace_examples() {
        let one = q(1, 1);
        assert_eq!(equispace_cost(&sorted(&[q(5, 1)]), &one, &q(5, 1)).unwrap(), q(0, 1));
        let c = sorted(&[q(0, 1), q(1, 2), q(1, 1)]);
        assert_eq!(equispace_cost(&c, &one, &q(3, 2)).unwrap(), q(1, 1));
        assert_eq!(equispace_cost(&c, &one, &q(2, 1)).unwrap(), q(3, 2));
        let pos = equispace_positions(&c, &one, &q(3, 2)).unwrap();
        assert_eq!(pos, vec![q(-1, 2), q(1, 2), q(3, 2)]);
        let d = equispace_displacements(&c, &one, &q(3, 2)).unwrap();
        assert_eq!(d, vec![q(-1, 2), q(0, 1), q(1, 2)]);
    }

    #[test]
    fn breakpoint_examples() {
        let one = q(1, 1);
        let bp = breakpoints(&sorted(&[q(0, 1), q(1, 2), q(1, 1)]), &one).unwrap();
        assert_eq!(bp, vec![q(1, 1), q(3, 2), q(2, 1)]);
        assert_eq!(breakpoints(&sorted(&[q(5, 1)]), &one).unwrap(), vec![q(5, 1)]);
        assert_eq!(breakpoints(&sorted(&[q(0, 1), q(1, 1)]), &one).unwrap(), vec![q(1, 1), q(1, 1)]);
        let unsorted = IntervalCollection::unit(&[q(1, 1), q(0, 1)]);
        assert_eq!(breakpoints(&unsorted, &one), Err(DispersalError::Unsorted));
    }

    #[test]
    fn median_examples() {
        assert_eq!(median_anchor(&[q(1, 1), q(3, 2), q(2, 1)]).unwrap(), (q(3, 2), q(3, 2)));
        assert_eq!(median_anchor(&[q(1, 1), q(1, 1)]).unwrap(), (q(1, 1), q(1, 1)));
        assert_eq!(
            median_anchor(&[q(0, 1), q(2, 1), q(4, 1), q(10, 1)]).unwrap(),
            (q(2, 1), q(4, 1))
        );
        assert_eq!(median_anchor(&[]), Err(DispersalError::EmptyBreakpoints));
    }

    #[test]
    fn initial_partition_examples() {
        let p = initial_partition(&inst(&[q(0, 1), q(1, 2), q(1, 1), q(5, 1), q(6, 1)], q(1, 1)));
        let ranges: Vec<_> = p.blocks().iter().map(|b| (b.first, b.last)).collect();
        assert_eq!(ranges, vec![(0, 2), (3, 4)]);
        let p = initial_partition(&inst(&[q(0, 1), q(3, 1), q(6, 1)], q(1, 1)));
        assert_eq!(p.blocks().len(), 3);
        let p = initial_partition(&inst(&[], q(1, 1)));
        assert!(p.blocks().is_empty());
    }

    #[test]
    fn intersect_examples() {
        let one = q(1, 1);
        let p = initial_partition(&inst(&[q(0, 1), q(10, 1)], one.clone()));
        let b = p.blocks();
        assert!(!blocks_intersect_when_equispaced(&b[0], &b[1]));
        assert_eq!(p.local_anchors(0).1, q(0, 1));
        assert_eq!(p.local_anchors(1).0, q(10, 1));

        // {0, 0} then {6/5}: local x2 = 1, y1 = 6/5 <= 1 + 1.
        let p = initial_partition(&inst(&[q(0, 1), q(0, 1), q(6, 5)], one.clone()));
        let b = p.blocks();
        assert_eq!(b.len(), 2);
        assert!(blocks_intersect_when_equispaced(&b[0], &b[1]));

        // Boundary: y1 = x2 + |J| s still collides.
        let p = initial_partition(&inst(&[q(0, 1), q(0, 1), q(2, 1)], one.clone()));
        let b = p.blocks();
        assert_eq!(b.len(), 2);
        assert_eq!(p.local_anchors(1).0, &p.local_anchors(0).1 + &one);
        assert!(blocks_intersect_when_equispaced(&b[0], &b[1]));

        let p = initial_partition(&inst(&[q(0, 1), q(0, 1), q(2, 1) + q(1, 100)], one));
        let b = p.blocks();
        assert!(!blocks_intersect_when_equispaced(&b[0], &b[1]));
    }

    #[test]
    fn merge_examples() {
        let mut p = initial_partition(&inst(&[q(1, 1), q(11, 1)], q(1, 1)));
        assert_eq!(p.merge_blocks(0, 2), Err(DispersalError::NonAdjacentBlocks { left: 0, right: 2 }));
        p.merge_blocks(0, 1).unwrap();
        assert_eq!(p.breakpoints_of(0), vec![q(2, 1), q(11, 1)]);

        // Cumulative-frame identity on {0, 1/2} | {1} with s = 1, forced merge.
        let mut p = initial_partition(&inst(&[q(0, 1), q(1, 2), q(3, 1)], q(1, 1)));
        assert_eq!(p.blocks().len(), 2);
        p.merge_blocks(0, 1).unwrap();
        let whole = breakpoints(&sorted(&[q(0, 1), q(1, 2), q(3, 1)]), &q(1, 1)).unwrap();
        assert_eq!(p.breakpoints_of(0), whole);

        // Duplicate cumulative breakpoints are kept.
        let p = initial_partition(&inst(&[q(0, 1), q(2, 1)], q(2, 1)));
        assert_eq!(p.blocks().len(), 1);
        assert_eq!(p.breakpoints_of(0), vec![q(2, 1), q(2, 1)]);
        assert_eq!((p.blocks()[0].x1.clone(), p.blocks()[0].x2.clone()), (q(2, 1), q(2, 1)));
    }

    #[test]
    fn disperse_examples() {
        let d = disperse(&inst(&[q(0, 1), q(1, 1), q(2, 1)], q(1, 1)));
        assert_eq!(d.total, q(0, 1));
        assert!(d.movement.displacements().iter().all(|x| x.is_zero()));

        let d = disperse(&inst(&[q(0, 1), q(1, 2), q(1, 1)], q(1, 1)));
        assert_eq!(d.total, q(1, 1));
        assert_eq!(d.final_centers, vec![q(-1, 2), q(1, 2), q(3, 2)]);

        let d = disperse(&inst(&[q(0, 1), q(0, 1), q(0, 1)], q(1, 1)));
        assert_eq!(d.total, q(2, 1));
        assert_eq!(d.final_centers, vec![q(-1, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn displacements_follow_input_order() {
        let d = disperse(&inst(&[q(1, 1), q(0, 1), q(1, 2)], q(1, 1)));
        assert_eq!(d.final_centers, vec![q(3, 2), q(-1, 2), q(1, 2)]);
        assert_eq!(d.movement.displacements(), &[q(1, 2), q(-1, 2), q(0, 1)]);
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(matches!(
            DispersalInstance::unit(&[q(0, 1)], q(1, 2)),
            Err(DispersalError::SeparationBelowOne(_))
        ));
        let c = IntervalCollection::new(vec![crate::geometry::Interval::new(
            q(0, 1),
            q(2, 1),
            q(1, 1),
            7,
        )]);
        assert!(matches!(
            DispersalInstance::new(c, q(1, 1)),
            Err(DispersalError::NonUnitLength { id: 7, .. })
        ));
    }
}
