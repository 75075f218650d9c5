//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the library's algebra.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ihs_hodge::equivariant::{EquivariantDiamond, Split};
use rand::Rng;

/// One basis vector: bidegree and eigenvalue (`true` for `+1`).
pub type Basis = Vec<(u32, u32, bool)>;

pub fn basis_of(d: &EquivariantDiamond) -> Basis {
    let mut basis = Vec::new();
    for ((p, q), s) in d.entries() {
        basis.extend(std::iter::repeat_n((p, q, true), s.plus as usize));
        basis.extend(std::iter::repeat_n((p, q, false), s.minus as usize));
    }
    basis
}

/// Visits every index sequence `i_1 <= ... <= i_k` (or `<` when `strict`).
fn sequences(len: usize, k: usize, strict: bool, visit: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, len: usize, k: usize, strict: bool, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            visit(acc);
            return;
        }
        for i in start..len {
            acc.push(i);
            go(if strict { i + 1 } else { i }, len, k, strict, acc, visit);
            acc.pop();
        }
    }
    go(0, len, k, strict, &mut Vec::with_capacity(k), visit);
}

/// Signed-monomial enumeration of `Sym^k` (or `Λ^k` when `strict`) over an
/// explicit basis of even-degree vectors.
pub fn brute_power(basis: &Basis, k: usize, strict: bool) -> BTreeMap<(u32, u32), (u64, u64)> {
    let mut out: BTreeMap<(u32, u32), (u64, u64)> = BTreeMap::new();
    sequences(basis.len(), k, strict, &mut |idx| {
        let (mut p, mut q, mut plus) = (0, 0, true);
        for &i in idx {
            let (bp, bq, s) = basis[i];
            p += bp;
            q += bq;
            plus ^= !s;
        }
        let slot = out.entry((p, q)).or_default();
        if plus {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    });
    out
}

pub fn as_map(d: &EquivariantDiamond) -> BTreeMap<(u32, u32), (u64, u64)> {
    d.entries().map(|(k, Split { plus, minus })| (k, (plus, minus))).collect()
}

/// Random table supported in even total degree, at most `max_total` classes
/// per bidegree.
pub fn random_even_table<R: Rng>(rng: &mut R, max_total: u64) -> EquivariantDiamond {
    let mut rows = Vec::new();
    for p in 0..=2u32 {
        for q in 0..=2u32 {
            if (p + q) % 2 == 1 || rng.gen_bool(0.4) {
                continue;
            }
            let total = rng.gen_range(0..=max_total);
            let plus = rng.gen_range(0..=total);
            rows.push((p, q, plus as i64, (total - plus) as i64));
        }
    }
    EquivariantDiamond::new(None, rows).expect("nonnegative rows")
}

/// Number of orbits of the swap `h1 <-> h2` on monomials `h1^a h2^b` with
/// `a + b = k` and `a, b <= 3`, the hyperplane classes of `P^3 x P^3`.
/// Below the middle degree these span `H^{k,k}` of the incidence divisor.
pub fn swap_orbits(k: u32) -> u64 {
    let monomials: Vec<(u32, u32)> = (0..=3).filter_map(|a| k.checked_sub(a).filter(|&b| b <= 3).map(|b| (a, b))).collect();
    monomials.iter().filter(|&&(a, b)| a <= b).count() as u64
}

/// Naive product of sparse truncated series in `x, y, t`.
pub fn naive_series_mul(
    a: &BTreeMap<(u32, u32, u32), i64>,
    b: &BTreeMap<(u32, u32, u32), i64>,
    max_xy: u32,
    max_t: u32,
) -> BTreeMap<(u32, u32, u32), i64> {
    let mut out = BTreeMap::new();
    for (&(x1, y1, t1), &c1) in a {
        for (&(x2, y2, t2), &c2) in b {
            let (x, y, t) = (x1 + x2, y1 + y2, t1 + t2);
            if x <= max_xy && y <= max_xy && t <= max_t {
                *out.entry((x, y, t)).or_insert(0) += c1 * c2;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}
