//! Symmetric and exterior powers of a bigraded space.
//!
//! For `V = ⊕_d V_d` the power `Sym^k V` splits over compositions
//! `k = Σ k_d` as `⊗_d Sym^{k_d} V_d` placed in multidegree `Σ k_d·d`;
//! `Λ^k` has the same shape. The recursion below is shared by the plain
//! dimension tables and the equivariant `(plus, minus)` tables, which only
//! differ in how a single homogeneous piece is raised to a power.

use std::collections::BTreeMap;

use super::diamond::Bidegree;

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// `dim Sym^k` of an `m`-dimensional space.
pub(crate) fn sym_dim(m: u64, k: u64) -> u64 {
    match (m, k) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => binomial(m + k - 1, k),
    }
}

/// `dim Λ^k` of an `m`-dimensional space.
pub(crate) fn ext_dim(m: u64, k: u64) -> u64 {
    binomial(m, k)
}

/// Multiplicity attached to a bidegree: a plain dimension or a signed pair.
pub(crate) trait Multiplicity: Copy + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Self;
    fn mul(self, other: Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Multiplicity for u64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn mul(self, other: Self) -> Self {
        self * other
    }
}

/// Convolution of two bigraded tables.
pub(crate) fn convolve<M: Multiplicity>(
    a: &BTreeMap<Bidegree, M>,
    b: &BTreeMap<Bidegree, M>,
) -> BTreeMap<Bidegree, M> {
    let mut out: BTreeMap<Bidegree, M> = BTreeMap::new();
    for (&(p1, q1), &x) in a {
        for (&(p2, q2), &y) in b {
            let slot = out.entry((p1 + p2, q1 + q2)).or_insert_with(M::zero);
            *slot = slot.add(x.mul(y));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Degree-`k` part of `⊕_j P(V)^j` where `piece_power(m, j)` is the `j`-th
/// power of one homogeneous piece.
pub(crate) fn graded_power<M, F>(pieces: &BTreeMap<Bidegree, M>, k: u32, piece_power: F) -> BTreeMap<Bidegree, M>
where
    M: Multiplicity,
    F: Fn(M, u32) -> M,
{
    let k = k as usize;
    // layers[j] collects the contributions using j factors so far
    let mut layers: Vec<BTreeMap<Bidegree, M>> = vec![BTreeMap::new(); k + 1];
    layers[0].insert((0, 0), M::one());

    for (&(p, q), &m) in pieces {
        let powers: Vec<M> = (0..=k as u32).map(|j| piece_power(m, j)).collect();
        let mut next: Vec<BTreeMap<Bidegree, M>> = vec![BTreeMap::new(); k + 1];
        for (used, layer) in layers.iter().enumerate() {
            for (i, &pow) in powers.iter().enumerate().take(k + 1 - used) {
                if pow.is_zero() {
                    continue;
                }
                let shift = (i as u32 * p, i as u32 * q);
                let target = &mut next[used + i];
                for (&(a, b), &v) in layer {
                    let slot = target.entry((a + shift.0, b + shift.1)).or_insert_with(M::zero);
                    *slot = slot.add(v.mul(pow));
                }
            }
        }
        layers = next;
    }

    let mut out = layers.pop().unwrap_or_default();
    out.retain(|_, v| !v.is_zero());
    out
}
