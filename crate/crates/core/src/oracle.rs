//! Brute-force optimizers and validity checkers used to certify the solvers.
//!
//! Nothing here calls into `dispersal`'s block machinery; the only shared
//! code is the plain evaluation of E and its breakpoints.

use serde::Serialize;

use crate::dispersal::{
    breakpoints, disperse, equispace_cost, median_anchor, DispersalInstance, MovementVector,
};
use crate::geometry::{intervals_intersect, Interval, IntervalCollection};
use crate::graph::max_clique_interval;
use crate::random;
use crate::rational::Rational;

pub const MAX_BRUTE_FORCE_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("brute force limited to n <= {cap}, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("movement has {got} entries for {expected} intervals")]
    LengthMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub total: Rational,
    /// Sorted index ranges `(first, last)` of the runs.
    pub witness_partition: Vec<(usize, usize)>,
    /// Position of each run's last interval.
    pub witness_anchors: Vec<Rational>,
}

impl OracleResult {
    /// Displacements (input order) that realise the witness.
    pub fn movement(&self, instance: &DispersalInstance) -> MovementVector {
        let order = instance.intervals.sorted_order();
        let n = order.len();
        let mut d = vec![Rational::zero(); n];
        for ((first, last), a) in self.witness_partition.iter().zip(&self.witness_anchors) {
            for pos in *first..=*last {
                let target = a - &(&instance.s * &Rational::from(last - pos));
                let idx = order[pos];
                d[idx] = &target - &instance.intervals.items[idx].center;
            }
        }
        MovementVector::new(d)
    }
}

fn sub_collection(sorted: &IntervalCollection, first: usize, last: usize) -> IntervalCollection {
    IntervalCollection { items: sorted.items[first..=last].to_vec(), sorted: true }
}

/// Enumerates every split of the sorted sequence into consecutive runs,
/// equispaces each run at the leftmost admissible point of its optimal anchor
/// range, and keeps the cheapest feasible split.
pub fn brute_force_disperse(instance: &DispersalInstance) -> Result<OracleResult, OracleError> {
    let n = instance.len();
    if n > MAX_BRUTE_FORCE_N {
        return Err(OracleError::TooLarge { n, cap: MAX_BRUTE_FORCE_N });
    }
    if n == 0 {
        return Ok(OracleResult {
            total: Rational::zero(),
            witness_partition: vec![],
            witness_anchors: vec![],
        });
    }
    let sorted = instance.intervals.sorted();
    let s = &instance.s;
    // Per-run anchor ranges and costs are reused across splits.
    let mut range = vec![vec![None; n]; n];
    for first in 0..n {
        for last in first..n {
            let run = sub_collection(&sorted, first, last);
            let bp = breakpoints(&run, s).expect("sorted");
            range[first][last] = Some(median_anchor(&bp).expect("nonempty"));
        }
    }
    let mut best: Option<OracleResult> = None;
    for mask in 0u32..(1u32 << (n - 1)) {
        // Bit i set: cut between sorted positions i and i + 1.
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 0..n {
            if i + 1 == n || mask & (1 << i) != 0 {
                runs.push((start, i));
                start = i + 1;
            }
        }
        let mut anchors = Vec::with_capacity(runs.len());
        let mut feasible = true;
        let mut prev: Option<Rational> = None;
        for &(first, last) in &runs {
            let (x1, x2) = range[first][last].as_ref().unwrap();
            let len = Rational::from(last - first + 1);
            let a = match &prev {
                None => x1.clone(),
                Some(p) => x1.clone().max(p + &(s * &len)),
            };
            if a > *x2 {
                feasible = false;
                break;
            }
            prev = Some(a.clone());
            anchors.push(a);
        }
        if !feasible {
            continue;
        }
        let total: Rational = runs
            .iter()
            .zip(&anchors)
            .map(|(&(f, l), a)| equispace_cost(&sub_collection(&sorted, f, l), s, a).unwrap())
            .sum();
        if best.as_ref().is_none_or(|b| total < b.total) {
            best = Some(OracleResult { total, witness_partition: runs, witness_anchors: anchors });
        }
    }
    Ok(best.expect("the single-run split is always feasible"))
}

/// Candidate final positions `c_j + z s`, `|z| < n`: every vertex of the
/// ordered dispersal polytope has this form.
fn candidate_grid(centers: &[Rational], step: &Rational) -> Vec<Rational> {
    let n = centers.len() as i64;
    let mut grid: Vec<Rational> = centers
        .iter()
        .flat_map(|c| (-(n - 1)..=(n - 1)).map(move |z| c + &(step * &Rational::from_integer(z))))
        .collect();
    grid.sort();
    grid.dedup();
    grid
}

/// Order-preserving dynamic program over the candidate grid:
/// `dp_i(v) = |v - c_i| + min_{u <= v - s} dp_{i-1}(u)`.
pub fn grid_dp_disperse(instance: &DispersalInstance) -> Rational {
    let n = instance.len();
    if n == 0 {
        return Rational::zero();
    }
    let centers = instance.intervals.sorted().centers();
    let s = &instance.s;
    let grid = candidate_grid(&centers, s);
    let mut dp: Vec<Option<Rational>> = grid.iter().map(|v| Some((v - &centers[0]).abs())).collect();
    for c in &centers[1..] {
        // prefix[j] = min dp over grid[0..=j]
        let mut prefix: Vec<Option<Rational>> = Vec::with_capacity(grid.len());
        let mut run: Option<Rational> = None;
        for v in &dp {
            run = match (run, v) {
                (None, x) => x.clone(),
                (Some(r), Some(x)) => Some(r.min(x.clone())),
                (r, None) => r,
            };
            prefix.push(run.clone());
        }
        let mut next = Vec::with_capacity(grid.len());
        let mut j = 0usize;
        // Largest index with grid[idx] <= v - s, advanced monotonically.
        let mut last_ok: Option<usize> = None;
        for v in &grid {
            let limit = v - s;
            while j < grid.len() && grid[j] <= limit {
                last_ok = Some(j);
                j += 1;
            }
            next.push(last_ok.and_then(|k| prefix[k].clone()).map(|best| best + (v - c).abs()));
        }
        dp = next;
    }
    dp.into_iter().flatten().min().expect("some placement is feasible")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
pub enum Violation {
    #[error("intervals {a} and {b} end {gap} apart, need at least {s}")]
    Spacing { a: usize, b: usize, gap: Rational, s: Rational },
    #[error("claimed total {claimed} but displacements sum to {actual}")]
    Cost { claimed: Rational, actual: Rational },
    #[error("final intervals {a} and {b} intersect")]
    Intersecting { a: usize, b: usize },
    #[error("weighted cost {cost} exceeds budget {budget}")]
    Budget { cost: Rational, budget: Rational },
    #[error("{0}")]
    Shape(String),
}

/// Sorted consecutive final centers at least `s` apart, and a truthful total.
pub fn validate_dispersal(
    instance: &DispersalInstance,
    movement: &MovementVector,
) -> Result<(), Violation> {
    let n = instance.len();
    if movement.len() != n {
        return Err(Violation::Shape(format!("{} displacements for {n} intervals", movement.len())));
    }
    let mut finals: Vec<(Rational, usize)> = instance
        .intervals
        .items
        .iter()
        .zip(movement.displacements())
        .enumerate()
        .map(|(i, (it, d))| (&it.center + d, i))
        .collect();
    finals.sort();
    for w in finals.windows(2) {
        let gap = &w[1].0 - &w[0].0;
        if gap < instance.s {
            return Err(Violation::Spacing { a: w[0].1, b: w[1].1, gap, s: instance.s.clone() });
        }
    }
    let actual: Rational = movement.displacements().iter().map(|d| d.abs()).sum();
    if actual != *movement.total() {
        return Err(Violation::Cost { claimed: movement.total().clone(), actual });
    }
    Ok(())
}

/// Pairwise non-intersection of the moved intervals and Σ w|d| within budget.
pub fn validate_weighted_edgeless(
    intervals: &IntervalCollection,
    movement: &MovementVector,
    budget: &Rational,
) -> Result<(), Violation> {
    if movement.len() != intervals.len() {
        return Err(Violation::Shape(format!(
            "{} displacements for {} intervals",
            movement.len(),
            intervals.len()
        )));
    }
    let moved: Vec<Interval> = intervals
        .items
        .iter()
        .zip(movement.displacements())
        .map(|(it, d)| it.moved_to(&it.center + d))
        .collect();
    for a in 0..moved.len() {
        for b in a + 1..moved.len() {
            if intervals_intersect(&moved[a], &moved[b]) {
                return Err(Violation::Intersecting { a, b });
            }
        }
    }
    let weights: Vec<Rational> = intervals.items.iter().map(|i| i.weight.clone()).collect();
    let cost = movement.weighted_total(&weights);
    if cost > *budget {
        return Err(Violation::Budget { cost, budget: budget.clone() });
    }
    Ok(())
}

pub const MAX_CLIQUE_BRUTE_FORCE_N: usize = 6;

/// Exact minimum movement making unit intervals k-clique-free, by branch and
/// bound over the candidate grid `c_j + z`, with no ordering assumption and
/// cliques measured by the endpoint sweep.
pub fn brute_force_k_clique_free(centers: &[Rational], k: usize) -> Result<Rational, OracleError> {
    let n = centers.len();
    if n > MAX_CLIQUE_BRUTE_FORCE_N {
        return Err(OracleError::TooLarge { n, cap: MAX_CLIQUE_BRUTE_FORCE_N });
    }
    assert!(k >= 2);
    let grid = candidate_grid(centers, &Rational::one());
    // Per interval, candidates by increasing cost.
    let options: Vec<Vec<(Rational, Rational)>> = centers
        .iter()
        .map(|c| {
            let mut o: Vec<(Rational, Rational)> =
                grid.iter().map(|v| ((v - c).abs(), v.clone())).collect();
            o.sort();
            o
        })
        .collect();
    fn clique_ok(placed: &[Rational], k: usize) -> bool {
        let coll = IntervalCollection::unit(placed).sorted();
        max_clique_interval(&coll).expect("sorted") < k
    }
    fn search(
        i: usize,
        options: &[Vec<(Rational, Rational)>],
        k: usize,
        placed: &mut Vec<Rational>,
        cost: Rational,
        best: &mut Option<Rational>,
    ) {
        if i == options.len() {
            if best.as_ref().is_none_or(|b| cost < *b) {
                *best = Some(cost);
            }
            return;
        }
        for (c, v) in &options[i] {
            let total = &cost + c;
            if best.as_ref().is_some_and(|b| total >= *b) {
                break;
            }
            placed.push(v.clone());
            if clique_ok(placed, k) {
                search(i + 1, options, k, placed, total, best);
            }
            placed.pop();
        }
    }
    let mut best = None;
    search(0, &options, k, &mut Vec::new(), Rational::zero(), &mut best);
    Ok(best.unwrap_or_default())
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CrossValidation {
    pub trials: usize,
    pub mismatches: Vec<String>,
}

/// Random instances, `n` in `0..=max_n`, centers in `[0, n]`, `s` in
/// `{1, 3/2, 2}`: fast solver against both oracles, with validation.
pub fn cross_validate(max_n: usize, trials: usize, seed: u64) -> CrossValidation {
    let mut rng = random::rng(seed);
    let mut report = CrossValidation { trials, mismatches: Vec::new() };
    for t in 0..trials {
        let n = rand::Rng::gen_range(&mut rng, 0..=max_n);
        let centers = random::centers(&mut rng, n, 12);
        let s = random::separation(&mut rng);
        let instance = DispersalInstance::unit(&centers, s.clone()).expect("valid instance");
        let fast = disperse(&instance);
        let brute = match brute_force_disperse(&instance) {
            Ok(b) => b,
            Err(e) => {
                report.mismatches.push(format!("trial {t}: {e}"));
                continue;
            }
        };
        let grid = grid_dp_disperse(&instance);
        if fast.total != brute.total || brute.total != grid {
            report.mismatches.push(format!(
                "trial {t}: centers {centers:?} s {s}: fast {} brute {} grid {grid}",
                fast.total, brute.total
            ));
        }
        if let Err(v) = validate_dispersal(&instance, &fast.movement) {
            report.mismatches.push(format!("trial {t}: solver output invalid: {v}"));
        }
        if let Err(v) = validate_dispersal(&instance, &brute.movement(&instance)) {
            report.mismatches.push(format!("trial {t}: oracle witness invalid: {v}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn inst(cs: &[Rational]) -> DispersalInstance {
        DispersalInstance::unit(cs, q(1, 1)).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_disperse(&inst(&[q(0, 1), q(1, 1), q(2, 1)])).unwrap().total, q(0, 1));
        assert_eq!(brute_force_disperse(&inst(&[q(0, 1), q(1, 2), q(1, 1)])).unwrap().total, q(1, 1));
        assert_eq!(brute_force_disperse(&inst(&[q(0, 1), q(0, 1), q(0, 1)])).unwrap().total, q(2, 1));
        assert_eq!(grid_dp_disperse(&inst(&[q(0, 1), q(1, 2), q(1, 1)])), q(1, 1));
        assert_eq!(grid_dp_disperse(&inst(&[q(0, 1), q(0, 1), q(0, 1)])), q(2, 1));
        let big: Vec<Rational> = (0..17).map(|i| q(i, 1)).collect();
        assert!(matches!(brute_force_disperse(&inst(&big)), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn witness_reproduces_total() {
        let i = inst(&[q(0, 1), q(1, 3), q(4, 1), q(4, 1), q(9, 2)]);
        let r = brute_force_disperse(&i).unwrap();
        let m = r.movement(&i);
        assert_eq!(m.total(), &r.total);
        validate_dispersal(&i, &m).unwrap();
    }

    #[test]
    fn validate_examples() {
        let i = inst(&[q(0, 1), q(1, 2), q(1, 1)]);
        let d = disperse(&i);
        assert_eq!(validate_dispersal(&i, &d.movement), Ok(()));
        assert!(matches!(
            validate_dispersal(&i, &MovementVector::zero(3)),
            Err(Violation::Spacing { .. })
        ));
        let lying = MovementVector::with_claimed_total(d.movement.displacements().to_vec(), q(1, 2));
        assert!(matches!(validate_dispersal(&i, &lying), Err(Violation::Cost { .. })));
    }

    #[test]
    fn k_clique_brute_examples() {
        assert_eq!(brute_force_k_clique_free(&[q(0, 1), q(1, 4), q(1, 2)], 3).unwrap(), q(1, 2));
        assert_eq!(brute_force_k_clique_free(&[q(0, 1), q(1, 2), q(1, 1)], 2).unwrap(), q(1, 1));
        assert_eq!(brute_force_k_clique_free(&[q(0, 1), q(0, 1)], 2).unwrap(), q(1, 1));
    }

    #[test]
    fn small_cross_validation() {
        let r = cross_validate(7, 200, 7);
        assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
    }
}
