//! Small exact-arithmetic helpers shared by the other modules.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` with the combinatorial convention: zero when `a < 0`, `b < 0`
/// or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

/// `C(a, b)` for small arguments; `None` on overflow.
pub fn binomial_u64(a: u64, b: u64) -> Option<u64> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for t in 0..b {
        acc = acc * u128::from(a - t) / u128::from(t + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of unordered vertex pairs, `C(n, 2)`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Calls `f` with each `k`-element subset of the set bits of `mask`, as a
/// bit mask. Subsets are visited in lexicographic order of their index lists.
pub fn for_each_subset(mask: u64, k: usize, mut f: impl FnMut(u64)) {
    let bits: Vec<u64> = (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| 1u64 << b)
        .collect();
    if k > bits.len() {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0, |acc, &i| acc | bits[i]));
        // rightmost slot that can still move right
        let Some(p) = (0..k).rev().find(|&p| idx[p] < p + bits.len() - k) else {
            return;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// All `k`-subsets of `{0, .., ground-1}` as ascending bit masks.
pub fn subsets_of_size(ground: usize, k: usize) -> Vec<u64> {
    let mask = if ground >= 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    };
    let mut out = Vec::new();
    for_each_subset(mask, k, |s| out.push(s));
    out.sort_unstable();
    out
}

/// 64-bit FNV-1a.
pub(crate) struct Fnv(u64);

impl Fnv {
    pub(crate) fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }

    pub(crate) fn finish(&self) -> u64 {
        self.0
    }
}
