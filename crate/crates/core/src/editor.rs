//! Edit unit interval graphs into edgeless, acyclic or k-clique-free graphs.
//!
//! Unit intervals avoid a k-clique iff `c_{i+k-1} - c_i >= 1` in sorted
//! order. Those constraints only couple positions that agree mod `k - 1`, so
//! each residue class is dispersed on its own with `s = 1`. Intervals of one
//! class end up pairwise disjoint, hence no point is covered more than `k - 1`
//! times whatever the interleaving of the classes.

use serde::Serialize;

use crate::dispersal::{disperse, DispersalError, DispersalInstance, MovementVector};
use crate::geometry::IntervalCollection;
use crate::graph::{build_interval_graph, is_acyclic, is_edgeless, max_clique_interval};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    Edgeless,
    Acyclic,
    KCliqueFree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EditError {
    #[error(transparent)]
    Dispersal(#[from] DispersalError),
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("internal consistency failure: result violates {0:?}")]
    PostCondition(Property),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EditResult {
    pub total: Rational,
    pub movement: MovementVector,
    pub final_intervals: IntervalCollection,
    pub property: Property,
}

fn unit_check(intervals: &IntervalCollection) -> Result<(), EditError> {
    DispersalInstance::new(intervals.clone(), Rational::one())?;
    Ok(())
}

fn finalize(intervals: &IntervalCollection, d: Vec<Rational>, property: Property) -> EditResult {
    let items = intervals
        .items
        .iter()
        .zip(&d)
        .map(|(it, di)| it.moved_to(&it.center + di))
        .collect();
    let movement = MovementVector::new(d);
    EditResult {
        total: movement.total().clone(),
        movement,
        final_intervals: IntervalCollection::new(items),
        property,
    }
}

pub fn solve_edgeless(intervals: &IntervalCollection) -> Result<EditResult, EditError> {
    let instance = DispersalInstance::new(intervals.clone(), Rational::one())?;
    let out = disperse(&instance);
    let result = finalize(intervals, out.movement.displacements().to_vec(), Property::Edgeless);
    if !is_edgeless(&build_interval_graph(&result.final_intervals)) {
        return Err(EditError::PostCondition(Property::Edgeless));
    }
    Ok(result)
}

/// Input indices of each residue class, in sorted order; class `r` holds the
/// 1-based sorted positions `i` with `i mod (k - 1) = r`.
pub fn residue_classes(intervals: &IntervalCollection, k: usize) -> Vec<Vec<usize>> {
    let m = k - 1;
    let mut classes = vec![Vec::new(); m];
    for (pos, idx) in intervals.sorted_order().into_iter().enumerate() {
        classes[(pos + 1) % m].push(idx);
    }
    classes
}

pub fn solve_k_clique_free(intervals: &IntervalCollection, k: usize) -> Result<EditResult, EditError> {
    if k < 2 {
        return Err(EditError::KTooSmall(k));
    }
    unit_check(intervals)?;
    let mut d = vec![Rational::zero(); intervals.len()];
    for class in residue_classes(intervals, k) {
        if class.is_empty() {
            continue;
        }
        let sub = IntervalCollection::new(class.iter().map(|&i| intervals.items[i].clone()).collect());
        let out = disperse(&DispersalInstance::new(sub, Rational::one())?);
        for (j, &i) in class.iter().enumerate() {
            d[i] = out.movement.displacements()[j].clone();
        }
    }
    let result = finalize(intervals, d, Property::KCliqueFree(k));
    let omega = max_clique_interval(&result.final_intervals.sorted()).expect("sorted");
    if omega >= k {
        return Err(EditError::PostCondition(Property::KCliqueFree(k)));
    }
    Ok(result)
}

pub fn solve_acyclic(intervals: &IntervalCollection) -> Result<EditResult, EditError> {
    let mut result = solve_k_clique_free(intervals, 3)?;
    result.property = Property::Acyclic;
    if !is_acyclic(&build_interval_graph(&result.final_intervals)) {
        return Err(EditError::PostCondition(Property::Acyclic));
    }
    Ok(result)
}

pub fn solve(intervals: &IntervalCollection, property: Property) -> Result<EditResult, EditError> {
    match property {
        Property::Edgeless => solve_edgeless(intervals),
        Property::Acyclic => solve_acyclic(intervals),
        Property::KCliqueFree(k) => solve_k_clique_free(intervals, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn units(cs: &[Rational]) -> IntervalCollection {
        IntervalCollection::unit(cs)
    }

    #[test]
    fn edgeless_examples() {
        assert_eq!(solve_edgeless(&units(&[q(0, 1), q(1, 1), q(2, 1)])).unwrap().total, q(0, 1));
        assert_eq!(solve_edgeless(&units(&[q(0, 1), q(1, 2), q(1, 1)])).unwrap().total, q(1, 1));
        let r = solve_edgeless(&units(&[q(0, 1), q(0, 1)])).unwrap();
        assert_eq!(r.total, q(1, 1));
        let mut finals = r.final_intervals.centers();
        finals.sort();
        assert_eq!(&finals[1] - &finals[0], q(1, 1));
    }

    #[test]
    fn k_clique_examples() {
        let x = units(&[q(0, 1), q(1, 4), q(1, 2), q(3, 1)]);
        assert_eq!(solve_k_clique_free(&x, 2).unwrap(), {
            let mut e = solve_edgeless(&x).unwrap();
            e.property = Property::KCliqueFree(2);
            e
        });
        let tri = units(&[q(0, 1), q(1, 4), q(1, 2)]);
        assert_eq!(residue_classes(&tri, 3), vec![vec![1], vec![0, 2]]);
        assert_eq!(solve_k_clique_free(&tri, 3).unwrap().total, q(1, 2));
        let spread = units(&[q(0, 1), q(1, 1), q(2, 1)]);
        for k in 3..6 {
            assert_eq!(solve_k_clique_free(&spread, k).unwrap().total, q(0, 1));
        }
        assert_eq!(solve_k_clique_free(&tri, 1), Err(EditError::KTooSmall(1)));
    }

    #[test]
    fn acyclic_examples() {
        assert_eq!(
            solve_acyclic(&units(&[q(0, 1), q(1, 2), q(1, 1), q(3, 2)])).unwrap().total,
            q(0, 1)
        );
        assert_eq!(solve_acyclic(&units(&[q(0, 1), q(1, 4), q(1, 2)])).unwrap().total, q(1, 2));
        assert_eq!(solve_acyclic(&units(&[])).unwrap().total, q(0, 1));
    }
}
