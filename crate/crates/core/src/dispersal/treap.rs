//! Arena of size-augmented treaps holding cumulative breakpoint multisets.
//!
//! `union` is the split-based treap union, which costs O(m log(n/m + 1))
//! expected comparisons for sizes m <= n, so merging a short block into a
//! long one is cheap regardless of which side is shorter.

use crate::rational::Rational;

pub(crate) const NIL: u32 = u32::MAX;

#[derive(Debug, Clone, Default)]
pub(crate) struct TreapArena {
    keys: Vec<Rational>,
    prio: Vec<u64>,
    left: Vec<u32>,
    right: Vec<u32>,
    size: Vec<u32>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl TreapArena {
    pub fn with_capacity(n: usize) -> Self {
        TreapArena {
            keys: Vec::with_capacity(n),
            prio: Vec::with_capacity(n),
            left: Vec::with_capacity(n),
            right: Vec::with_capacity(n),
            size: Vec::with_capacity(n),
        }
    }

    fn node(&mut self, key: Rational) -> u32 {
        let id = self.keys.len() as u32;
        self.keys.push(key);
        self.prio.push(splitmix64(id as u64));
        self.left.push(NIL);
        self.right.push(NIL);
        self.size.push(1);
        id
    }

    pub fn size(&self, t: u32) -> usize {
        if t == NIL {
            0
        } else {
            self.size[t as usize] as usize
        }
    }

    fn update(&mut self, t: u32) {
        let t = t as usize;
        self.size[t] = 1 + self.size(self.left[t]) as u32 + self.size(self.right[t]) as u32;
    }

    /// Builds a treap from keys already in ascending order, in linear time.
    pub fn build_sorted(&mut self, keys: impl IntoIterator<Item = Rational>) -> u32 {
        let mut spine: Vec<u32> = Vec::new();
        for key in keys {
            let v = self.node(key);
            let mut last = NIL;
            while let Some(&top) = spine.last() {
                if self.prio[top as usize] < self.prio[v as usize] {
                    last = spine.pop().unwrap();
                    self.update(last);
                } else {
                    break;
                }
            }
            self.left[v as usize] = last;
            if let Some(&top) = spine.last() {
                self.right[top as usize] = v;
            }
            spine.push(v);
        }
        let mut root = NIL;
        while let Some(top) = spine.pop() {
            self.update(top);
            root = top;
        }
        root
    }

    /// Splits into (keys < pivot, keys >= pivot).
    fn split(&mut self, t: u32, pivot: &Rational) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let ti = t as usize;
        if self.keys[ti] < *pivot {
            let (a, b) = self.split(self.right[ti], pivot);
            self.right[ti] = a;
            self.update(t);
            (t, b)
        } else {
            let (a, b) = self.split(self.left[ti], pivot);
            self.left[ti] = b;
            self.update(t);
            (a, t)
        }
    }

    pub fn union(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        let (a, b) = if self.prio[a as usize] >= self.prio[b as usize] { (a, b) } else { (b, a) };
        let pivot = self.keys[a as usize].clone();
        let (lo, hi) = self.split(b, &pivot);
        let ai = a as usize;
        let l = self.union(self.left[ai], lo);
        let r = self.union(self.right[ai], hi);
        self.left[ai] = l;
        self.right[ai] = r;
        self.update(a);
        a
    }

    /// Zero-based order statistic.
    pub fn kth(&self, mut t: u32, mut k: usize) -> &Rational {
        loop {
            assert!(t != NIL, "order statistic out of range");
            let ti = t as usize;
            let ls = self.size(self.left[ti]);
            if k < ls {
                t = self.left[ti];
            } else if k == ls {
                return &self.keys[ti];
            } else {
                k -= ls + 1;
                t = self.right[ti];
            }
        }
    }

    pub fn in_order(&self, t: u32) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.size(t));
        let mut stack = Vec::new();
        let mut cur = t;
        while cur != NIL || !stack.is_empty() {
            while cur != NIL {
                stack.push(cur);
                cur = self.left[cur as usize];
            }
            let v = stack.pop().unwrap();
            out.push(self.keys[v as usize].clone());
            cur = self.right[v as usize];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn union_is_sorted_multiset_union() {
        let mut arena = TreapArena::default();
        let a = arena.build_sorted((0..50).map(|i| q(2 * i, 1)));
        let b = arena.build_sorted((0..7).map(|i| q(3 * i, 1)));
        let u = arena.union(a, b);
        let mut expected: Vec<Rational> = (0..50).map(|i| q(2 * i, 1)).collect();
        expected.extend((0..7).map(|i| q(3 * i, 1)));
        expected.sort();
        assert_eq!(arena.in_order(u), expected);
        assert_eq!(arena.size(u), 57);
        for (k, v) in expected.iter().enumerate() {
            assert_eq!(arena.kth(u, k), v);
        }
    }

    #[test]
    fn duplicates_survive() {
        let mut arena = TreapArena::default();
        let a = arena.build_sorted([q(1, 1)]);
        let b = arena.build_sorted([q(1, 1)]);
        let u = arena.union(a, b);
        assert_eq!(arena.in_order(u), vec![q(1, 1), q(1, 1)]);
    }
}
