#![allow(dead_code)]

use gged::geometry::{IntervalCollection, Point};
use gged::{q, Rational};
use proptest::prelude::*;

pub fn rational(lo: i64, hi: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(move |den| (lo * den..=hi * den).prop_map(move |k| q(k, den)))
}

/// `n` centers in `[0, n]` with small denominators, `n` drawn from `range`.
pub fn centers(range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    range.prop_flat_map(|n| proptest::collection::vec(rational(0, n.max(1) as i64, 6), n))
}

pub fn separation() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(q(1, 1)), Just(q(3, 2)), Just(q(2, 1)), rational(1, 3, 5)]
}

pub fn point() -> impl Strategy<Value = Point> {
    (rational(-5, 5, 8), rational(-5, 5, 8)).prop_map(|(x, y)| Point::new(x, y))
}

pub fn sorted_units(cs: &[Rational]) -> IntervalCollection {
    IntervalCollection::unit(cs).sorted()
}
