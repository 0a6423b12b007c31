//! Weighted intervals from 3-Partition.
//!
//! Items sit stacked with right endpoint 0. Separators of length `B` leave
//! `m` free slots `[2(i-1)B, (2i-1)B]` of length `B`, and two long borders
//! close the row. Separators and borders weigh `12Bm^2`, so with budget `3Bm^2`
//! they cannot move a full unit; the items must be packed into the slots.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dispersal::MovementVector;
use crate::geometry::{Interval, IntervalCollection};
use crate::rational::{q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub sizes: Vec<u64>,
    pub b: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThreePartitionError {
    #[error("need a positive multiple of 3 sizes, got {0}")]
    Count(usize),
    #[error("B must be positive")]
    ZeroB,
    #[error("size s[{index}] = {size} is not strictly between B/4 and B/2")]
    SizeRange { index: usize, size: u64 },
    #[error("sizes sum to {sum}, expected mB = {expected}")]
    Sum { sum: u64, expected: u64 },
    #[error("expected {expected} triples, got {got}")]
    TripleCount { expected: usize, got: usize },
    #[error("index {0} is out of range or used twice")]
    TripleIndex(usize),
    #[error("triple {triple} sums to {sum}, expected B = {b}")]
    TripleSum { triple: usize, sum: u64, b: u64 },
}

impl ThreePartitionInstance {
    pub fn new(sizes: Vec<u64>, b: u64) -> Result<Self, ThreePartitionError> {
        let tp = ThreePartitionInstance { sizes, b };
        tp.validate()?;
        Ok(tp)
    }

    pub fn m(&self) -> usize {
        self.sizes.len() / 3
    }

    pub fn validate(&self) -> Result<(), ThreePartitionError> {
        if self.sizes.is_empty() || !self.sizes.len().is_multiple_of(3) {
            return Err(ThreePartitionError::Count(self.sizes.len()));
        }
        if self.b == 0 {
            return Err(ThreePartitionError::ZeroB);
        }
        for (index, &size) in self.sizes.iter().enumerate() {
            // B/4 < s < B/2 without division.
            if !(self.b < 4 * size && 2 * size < self.b) {
                return Err(ThreePartitionError::SizeRange { index, size });
            }
        }
        let sum: u64 = self.sizes.iter().sum();
        let expected = self.m() as u64 * self.b;
        if sum != expected {
            return Err(ThreePartitionError::Sum { sum, expected });
        }
        Ok(())
    }

    /// Checks that `triples` uses every index once and each triple sums to `B`.
    pub fn check_partition(&self, triples: &[[usize; 3]]) -> Result<(), ThreePartitionError> {
        let m = self.m();
        if triples.len() != m {
            return Err(ThreePartitionError::TripleCount { expected: m, got: triples.len() });
        }
        let mut used = vec![false; self.sizes.len()];
        for (t, triple) in triples.iter().enumerate() {
            for &j in triple {
                if j >= used.len() || used[j] {
                    return Err(ThreePartitionError::TripleIndex(j));
                }
                used[j] = true;
            }
            let sum: u64 = triple.iter().map(|&j| self.sizes[j]).sum();
            if sum != self.b {
                return Err(ThreePartitionError::TripleSum { triple: t, sum, b: self.b });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalRole {
    /// `I_i` for item `i` (0-based).
    Item(usize),
    /// `I^s_i`, `i` in `1..m`.
    Separator(usize),
    LeftBorder,
    RightBorder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedIntervalInstance {
    pub source: ThreePartitionInstance,
    pub intervals: IntervalCollection,
    pub roles: Vec<IntervalRole>,
    pub budget: Rational,
}

impl WeightedIntervalInstance {
    pub fn index_of(&self, role: IntervalRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn items(&self) -> impl Iterator<Item = usize> + '_ {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, IntervalRole::Item(_)))
            .map(|(i, _)| i)
    }
}

/// Layout: items `0..3m`, separators, then left and right border.
///
/// The borders are placed flush against the row, `r(I_l) = 0` and
/// `l(I_r) = (2m-1)B`, so that the outer slots keep their full length `B`.
pub fn build_3partition_instance(
    tp: &ThreePartitionInstance,
) -> Result<WeightedIntervalInstance, ThreePartitionError> {
    tp.validate()?;
    let m = tp.m() as i64;
    let b = Rational::from_integer(tp.b as i64);
    let bm2 = &b * &Rational::from_integer(m * m);
    let heavy = &bm2 * &Rational::from_integer(12);
    let budget = &bm2 * &Rational::from_integer(3);
    let max = Rational::from_integer(*tp.sizes.iter().max().expect("non-empty") as i64);
    let border = &budget + &max;
    let half = q(1, 2);

    let mut items = Vec::new();
    let mut roles = Vec::new();
    for (i, &s) in tp.sizes.iter().enumerate() {
        let len = Rational::from_integer(s as i64);
        items.push(Interval::new(-(&len * &half), len, Rational::one(), items.len()));
        roles.push(IntervalRole::Item(i));
    }
    for i in 1..m {
        let center = &b * &Rational::from_integer(2 * i - 1) + &b * &half;
        items.push(Interval::new(center, b.clone(), heavy.clone(), items.len()));
        roles.push(IntervalRole::Separator(i as usize));
    }
    items.push(Interval::new(-(&border * &half), border.clone(), heavy.clone(), items.len()));
    roles.push(IntervalRole::LeftBorder);
    let right = &b * &Rational::from_integer(2 * m - 1) + &border * &half;
    items.push(Interval::new(right, border, heavy, items.len()));
    roles.push(IntervalRole::RightBorder);

    Ok(WeightedIntervalInstance {
        source: tp.clone(),
        intervals: IntervalCollection::new(items),
        roles,
        budget,
    })
}

/// Packs triple `i` (1-based) left to right into slot `[2(i-1)B, (2i-1)B]`.
/// Separators and borders stay put.
pub fn certificate_movement(
    instance: &WeightedIntervalInstance,
    triples: &[[usize; 3]],
) -> Result<MovementVector, ThreePartitionError> {
    let tp = &instance.source;
    tp.check_partition(triples)?;
    let b = tp.b as i64;
    let mut d = vec![Rational::zero(); instance.intervals.len()];
    for (slot, triple) in triples.iter().enumerate() {
        let mut offset = 2 * slot as i64 * b;
        for &j in triple {
            offset += tp.sizes[j] as i64;
            let idx = instance.index_of(IntervalRole::Item(j)).expect("item present");
            d[idx] = Rational::from_integer(offset);
        }
    }
    Ok(MovementVector::new(d))
}

/// `sum_i 6B(i-1) + 3a_1 + 2a_2 + a_3`, with the triple order as given.
pub fn certificate_cost(tp: &ThreePartitionInstance, triples: &[[usize; 3]]) -> Rational {
    let b = tp.b as i64;
    let total: i64 = triples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let a: Vec<i64> = t.iter().map(|&j| tp.sizes[j] as i64).collect();
            6 * b * i as i64 + 3 * a[0] + 2 * a[1] + a[2]
        })
        .sum();
    Rational::from_integer(total)
}

/// Random yes-instance with `m` triples and its hidden partition.
pub fn random_yes_instance<R: Rng>(
    rng: &mut R,
    m: usize,
    b: u64,
) -> Option<(ThreePartitionInstance, Vec<[usize; 3]>)> {
    // Sizes lie in the open range (B/4, B/2).
    let lo = b / 4 + 1;
    let hi = (b - 1) / 2;
    if lo > hi {
        return None;
    }
    let mut sizes = Vec::with_capacity(3 * m);
    for _ in 0..m {
        let triple = (0..1000).find_map(|_| {
            let a1 = rng.gen_range(lo..=hi);
            let a2 = rng.gen_range(lo..=hi);
            let a3 = b.checked_sub(a1 + a2)?;
            (lo..=hi).contains(&a3).then_some([a1, a2, a3])
        })?;
        sizes.extend(triple);
    }
    let mut perm: Vec<usize> = (0..3 * m).collect();
    perm.shuffle(rng);
    // sizes[k] moves to position perm[k].
    let mut shuffled = vec![0; 3 * m];
    for (k, &p) in perm.iter().enumerate() {
        shuffled[p] = sizes[k];
    }
    let triples = (0..m).map(|t| [perm[3 * t], perm[3 * t + 1], perm[3 * t + 2]]).collect();
    let tp = ThreePartitionInstance::new(shuffled, b).ok()?;
    Some((tp, triples))
}
