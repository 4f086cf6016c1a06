//! Brute-force oracles, written independently of the library's own
//! enumerators: plain nested counting over all assignments, checking every
//! constraint from scratch.

#![allow(dead_code)]

use graphpoly::{IntPoly, Multigraph};
use num_bigint::BigInt;

/// Calls `f` on every vector in `{0..k}^len`, in lexicographic order.
fn for_each_vector(k: u32, len: usize, mut f: impl FnMut(&[u32])) {
    if len > 0 && k == 0 {
        return;
    }
    let mut v = vec![0u32; len];
    loop {
        f(&v);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < k {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Number of maps `V -> Z_k` with different colors at the ends of every edge.
pub fn colorings(g: &Multigraph, k: u32) -> u64 {
    let mut count = 0;
    for_each_vector(k, g.n(), |c| {
        if g.edges().iter().all(|e| c[e.tail] != c[e.head]) {
            count += 1;
        }
    });
    count
}

/// Number of maps `E -> Z_k \ {0}` with zero net outflow at every vertex.
pub fn nowhere_zero_flows(g: &Multigraph, k: u32) -> u64 {
    assert!(k >= 1, "flows need a modulus");
    let mut count = 0;
    let mut net = vec![0i64; g.n()];
    for_each_vector(k, g.m(), |t| {
        if t.contains(&0) {
            return;
        }
        net.iter_mut().for_each(|x| *x = 0);
        for (e, &val) in g.edges().iter().zip(t) {
            net[e.tail] += i64::from(val);
            net[e.head] -= i64::from(val);
        }
        if net.iter().all(|x| x.rem_euclid(i64::from(k)) == 0) {
            count += 1;
        }
    });
    count
}

/// The unique polynomial of degree `< values.len()` taking `values[i]` at
/// `k = start + i`, by Newton forward differences in the basis
/// `(k - start)(k - start - 1)...`. Panics if the data do not come from an
/// integer polynomial.
pub fn interpolate(start: i64, values: &[BigInt]) -> IntPoly {
    let mut diffs = values.to_vec();
    let mut result = IntPoly::zero();
    let mut basis = IntPoly::one();
    let mut factorial = BigInt::from(1);
    for j in 0..values.len() {
        if j > 0 {
            factorial *= j;
            let root = IntPoly::from_i64s(&[-(start + j as i64 - 1), 1]);
            basis = &basis * &root;
        }
        let d = &diffs[0];
        assert_eq!(d % &factorial, BigInt::from(0), "not an integer polynomial");
        result += &basis.scale(d / &factorial);
        for i in 0..diffs.len() - 1 - j {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    result
}

/// Chromatic polynomial reconstructed from brute-force counts at `0..=n`.
pub fn chromatic_by_interpolation(g: &Multigraph) -> IntPoly {
    let values: Vec<BigInt> = (0..=g.n() as u32).map(|k| BigInt::from(colorings(g, k))).collect();
    interpolate(0, &values)
}

/// Flow polynomial reconstructed from brute-force counts at `1..=m-n+c+1`,
/// one more point than its degree needs.
pub fn flow_by_interpolation(g: &Multigraph) -> IntPoly {
    let cyclomatic = g.m() + g.components().count - g.n();
    let values: Vec<BigInt> =
        (1..=cyclomatic as u32 + 1).map(|k| BigInt::from(nowhere_zero_flows(g, k))).collect();
    interpolate(1, &values)
}
