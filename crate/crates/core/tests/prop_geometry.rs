mod common;

use common::{point, rational};
use gged::geometry::{intervals_intersect, lm_distance, squared_euclidean, Interval, Metric};
use gged::rational::sqrt_bounds;
use gged::{q, Rational};
use num_rational::BigRational;
use proptest::prelude::*;

fn big(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

proptest! {
    #[test]
    fn parse_display_round_trip(r in rational(-1000, 1000, 97)) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    }

    #[test]
    fn arithmetic_matches_bigrational(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500) {
        let (x, y) = (q(a, b), q(c, d));
        let (bx, by) = (big(a, b), big(c, d));
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if c != 0 {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
    }

    #[test]
    fn overflow_promotes(a in (i64::MAX / 4)..i64::MAX, b in 2i64..1000) {
        let x = Rational::from_integer(a);
        let y = &(&x * &x) / &Rational::from_integer(b);
        prop_assert_eq!(y.to_big(), big(a, 1) * big(a, 1) / big(b, 1));
        prop_assert_eq!(&(&y * &Rational::from_integer(b)) / &x, x);
    }

    #[test]
    fn metric_symmetry_and_triangle(a in point(), b in point(), c in point()) {
        for m in [Metric::L1, Metric::L2] {
            prop_assert_eq!(lm_distance(&a, &b, m), lm_distance(&b, &a, m));
            prop_assert!(lm_distance(&a, &a, m).is_zero());
        }
        let l1 = |p, r| lm_distance(p, r, Metric::L1);
        prop_assert!(l1(&a, &c) <= &l1(&a, &b) + &l1(&b, &c));
        // Euclidean triangle inequality on rigorous square-root enclosures.
        let lo = sqrt_bounds(&squared_euclidean(&a, &c), 40).0;
        let hi = &sqrt_bounds(&squared_euclidean(&a, &b), 40).1 + &sqrt_bounds(&squared_euclidean(&b, &c), 40).1;
        prop_assert!(lo <= hi);
        prop_assert!(squared_euclidean(&a, &b) <= &l1(&a, &b) * &l1(&a, &b));
    }

    #[test]
    fn sqrt_enclosure(x in rational(0, 50, 30)) {
        let (lo, hi) = sqrt_bounds(&x, 32);
        prop_assert!(&lo * &lo <= x && x <= &hi * &hi);
        prop_assert!(&hi - &lo <= q(1, 1 << 30));
    }

    #[test]
    fn open_interval_intersection(c1 in rational(-5, 5, 8), c2 in rational(-5, 5, 8), l1 in rational(1, 3, 4), l2 in rational(1, 3, 4)) {
        let a = Interval::new(c1.clone(), l1.clone(), Rational::one(), 0);
        let b = Interval::new(c2.clone(), l2.clone(), Rational::one(), 1);
        prop_assert_eq!(intervals_intersect(&a, &b), intervals_intersect(&b, &a));
        // Open intervals meet iff some point lies strictly inside both.
        let overlap = std::cmp::min(a.right(), b.right()) > std::cmp::max(a.left(), b.left());
        prop_assert_eq!(intervals_intersect(&a, &b), overlap);
    }
}
