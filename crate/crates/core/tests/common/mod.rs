#![allow(dead_code)] // shared between test targets that use different subsets

//! Shared test oracles, all independent of the library's solver paths:
//! plain machine-integer box enumerations and the greedy edge-removal
//! procedure for catenary degrees.

use factorinv::kernel::IntVector;
use factorinv::monoid::Factorization;
use num_bigint::BigInt;

/// Deterministic xorshift generator so test instances are reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `[lo, hi]` (inclusive).
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

pub fn iv(v: &[i64]) -> IntVector {
    IntVector::from_i64(v)
}

pub fn to_i64(v: &IntVector) -> Vec<i64> {
    v.entries()
        .iter()
        .map(|x| i64::try_from(x).expect("oracle-scale entry"))
        .collect()
}

/// All nonnegative solutions of `A x = 0` (mod the moduli where given)
/// with entries at most `bound`, by full box enumeration.
fn box_solutions(
    matrix: &[Vec<i64>],
    moduli: &[Option<i64>],
    bound: i64,
) -> Vec<Vec<i64>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut current = vec![0i64; cols];
    let mut sums = vec![0i64; rows];

    fn rec(
        matrix: &[Vec<i64>],
        moduli: &[Option<i64>],
        bound: i64,
        idx: usize,
        current: &mut Vec<i64>,
        sums: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == current.len() {
            let ok = sums.iter().enumerate().all(|(r, &s)| match moduli[r] {
                None => s == 0,
                Some(d) => s.rem_euclid(d) == 0,
            });
            if ok {
                out.push(current.clone());
            }
            return;
        }
        for k in 0..=bound {
            current[idx] = k;
            rec(matrix, moduli, bound, idx + 1, current, sums, out);
            for (r, row) in matrix.iter().enumerate() {
                sums[r] += row[idx];
            }
        }
        for (r, row) in matrix.iter().enumerate() {
            sums[r] -= (bound + 1) * row[idx];
        }
        current[idx] = 0;
    }

    rec(matrix, moduli, bound, 0, &mut current, &mut sums, &mut out);
    out
}

/// Componentwise-minimal nonzero solutions within the box `[0..bound]^n`.
/// Every solution below a box vector is itself in the box, so this equals
/// the Hilbert basis intersected with the box.
pub fn brute_hilbert(
    matrix: &[Vec<i64>],
    moduli: &[Option<i64>],
    bound: i64,
) -> Vec<Vec<i64>> {
    let mut sols = box_solutions(matrix, moduli, bound);
    sols.retain(|v| v.iter().any(|&x| x != 0));
    sols.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    let mut minimal: Vec<Vec<i64>> = Vec::new();
    for v in sols {
        if !minimal
            .iter()
            .any(|m| m.iter().zip(&v).all(|(a, b)| a <= b))
        {
            minimal.push(v);
        }
    }
    minimal.sort();
    minimal
}

fn conforms(u: &[i64], v: &[i64]) -> bool {
    u.iter()
        .zip(v)
        .all(|(&a, &b)| a * b >= 0 && a.abs() <= b.abs())
}

/// ⊑-minimal nonzero integer kernel vectors with entries in
/// `[-bound..bound]`, one per ± pair (first nonzero entry positive).
pub fn brute_graver(matrix: &[Vec<i64>], bound: i64) -> Vec<Vec<i64>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut kernel: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; cols];
    let mut sums = vec![0i64; rows];

    fn rec(
        matrix: &[Vec<i64>],
        bound: i64,
        idx: usize,
        current: &mut Vec<i64>,
        sums: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == current.len() {
            if current.iter().any(|&x| x != 0) && sums.iter().all(|&s| s == 0) {
                out.push(current.clone());
            }
            return;
        }
        for (r, row) in matrix.iter().enumerate() {
            sums[r] -= bound * row[idx];
        }
        for k in -bound..=bound {
            current[idx] = k;
            rec(matrix, bound, idx + 1, current, sums, out);
            if k < bound {
                for (r, row) in matrix.iter().enumerate() {
                    sums[r] += row[idx];
                }
            }
        }
        for (r, row) in matrix.iter().enumerate() {
            sums[r] -= bound * row[idx];
        }
        current[idx] = 0;
    }

    rec(matrix, bound, 0, &mut current, &mut sums, &mut kernel);
    kernel.sort_by_key(|v| (v.iter().map(|x| x.abs()).sum::<i64>(), v.clone()));
    let mut minimal: Vec<Vec<i64>> = Vec::new();
    for v in kernel {
        if !minimal.iter().any(|m| conforms(m, &v)) {
            minimal.push(v);
        }
    }
    // one representative per ± pair
    let mut normalized: Vec<Vec<i64>> = minimal
        .into_iter()
        .map(|v| {
            match v.iter().find(|&&x| x != 0) {
                Some(&x) if x < 0 => v.iter().map(|&y| -y).collect(),
                _ => v,
            }
        })
        .collect();
    normalized.sort();
    normalized.dedup();
    normalized
}

/// The catenary degree by the greedy procedure: repeatedly remove a
/// largest-label edge that is not a bridge; when every largest-label edge
/// is a bridge, that label is the answer.
pub fn greedy_bridge_catenary(fiber: &[Factorization]) -> BigInt {
    let n = fiber.len();
    if n <= 1 {
        return BigInt::from(0);
    }
    let mut edges: Vec<(BigInt, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = factorinv::invariants::distance(&fiber[i], &fiber[j]).unwrap();
            edges.push((d, i, j));
        }
    }

    fn connected(n: usize, edges: &[(BigInt, usize, usize)], skip: usize) -> bool {
        let mut adj = vec![Vec::new(); n];
        for (k, (_, i, j)) in edges.iter().enumerate() {
            if k != skip {
                adj[*i].push(*j);
                adj[*j].push(*i);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    loop {
        let max_label = edges.iter().map(|(d, _, _)| d.clone()).max().unwrap();
        let removable = (0..edges.len())
            .filter(|&k| edges[k].0 == max_label)
            .find(|&k| connected(n, &edges, k));
        match removable {
            Some(k) => {
                edges.remove(k);
            }
            None => return max_label,
        }
    }
}
