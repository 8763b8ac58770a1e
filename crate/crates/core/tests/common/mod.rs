//! Brute-force oracles. Nothing here calls into the enumeration, closure or
//! validation code it is used to check; it works from the raw cover list.

#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Arc;

use bassline::{Depth, SpecFunction, SpectralPoset, INF};

/// Order relation by Warshall's algorithm on the cover list.
pub fn warshall(poset: &SpectralPoset) -> Vec<Vec<bool>> {
    let n = poset.len();
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        r[i][i] = true;
    }
    for &(a, b) in poset.covers() {
        r[a.index()][b.index()] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// All saturated chains from `p` to `q`, as their lengths, by depth-first
/// walk over the cover list.
pub fn chain_lengths(poset: &SpectralPoset, p: usize, q: usize) -> Vec<u32> {
    let covers: Vec<(usize, usize)> = poset.covers().iter().map(|(a, b)| (a.index(), b.index())).collect();
    let mut out = Vec::new();
    fn walk(covers: &[(usize, usize)], at: usize, goal: usize, len: u32, out: &mut Vec<u32>) {
        if at == goal {
            out.push(len);
            return;
        }
        for &(a, b) in covers {
            if a == at {
                walk(covers, b, goal, len + 1, out);
            }
        }
    }
    walk(&covers, p, q, 0, &mut out);
    out
}

/// Bass conditions straight from the definition, using the Warshall order.
/// "Saturated" means no third element strictly between.
pub fn is_bass(poset: &SpectralPoset, vals: &[Depth]) -> bool {
    let le = warshall(poset);
    let n = poset.len();
    let lt = |a: usize, b: usize| a != b && le[a][b];
    let in_dom = |i: usize| vals[i] != INF;
    for p in 0..n {
        for q in 0..n {
            if in_dom(p) && le[p][q] && !in_dom(q) {
                return false;
            }
        }
    }
    for p in (0..n).filter(|&p| in_dom(p)) {
        let minimal = !(0..n).any(|q| in_dom(q) && lt(q, p));
        if minimal && vals[p] != Depth::Finite(0) {
            return false;
        }
    }
    for p in 0..n {
        for q in 0..n {
            let saturated = lt(p, q) && !(0..n).any(|r| lt(p, r) && lt(r, q));
            if saturated && in_dom(p) && in_dom(q) && vals[q] > vals[p] + 1 {
                return false;
            }
        }
    }
    true
}

/// Every value vector over `{0, …, max} ∪ {∞}`.
pub fn all_functions(poset: &Arc<SpectralPoset>, max: u32) -> Vec<SpecFunction> {
    let alphabet: Vec<Depth> = (0..=max).map(Depth::Finite).chain([INF]).collect();
    let n = poset.len();
    let total = alphabet.len().pow(n as u32);
    (0..total)
        .map(|mut code| {
            let vals = (0..n)
                .map(|_| {
                    let v = alphabet[code % alphabet.len()];
                    code /= alphabet.len();
                    v
                })
                .collect();
            SpecFunction::new(poset, vals).unwrap()
        })
        .collect()
}

/// Every function with values in `{0, 1, 2, ∞}`.
pub fn level_two_inputs(poset: &Arc<SpectralPoset>) -> Vec<SpecFunction> {
    all_functions(poset, 2)
}

/// Naive filter: all `n`-Bass functions, by scanning every function with
/// values up to the poset height.
pub fn naive_n_bass(poset: &Arc<SpectralPoset>, n: u32) -> Vec<Vec<Depth>> {
    let mut out: Vec<Vec<Depth>> = all_functions(poset, poset.poset_height())
        .into_iter()
        .filter(|f| is_bass(poset, f.values()))
        .filter(|f| f.values().iter().all(|&v| v == INF || v <= Depth::Finite(n)))
        .map(|f| f.values().to_vec())
        .collect();
    out.sort();
    out
}

/// Members of the subset encoded by `mask`.
pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// Builds a poset on `n` points from an arbitrary relation on pairs
/// `i < j` (index order), keeping only the transitive reduction.
pub fn poset_from_relation(n: usize, edges: &[(usize, usize)]) -> Arc<SpectralPoset> {
    let mut r = vec![vec![false; n]; n];
    for &(a, b) in edges {
        let (a, b) = (a % n, b % n);
        if a < b {
            r[a][b] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if r[i][j] && !(0..n).any(|k| r[i][k] && r[k][j]) {
                covers.push((format!("e{i}"), format!("e{j}")));
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    Arc::new(SpectralPoset::new("random", &names, &covers).unwrap())
}

/// Every `n`-Bass sequence prefix, from the axioms alone: `Φ_0, …, Φ_{m-1}`
/// with `m = max(n, 1)`, ascending by at least the upper covers, inside
/// `up(Φ_0)`, and with `Φ_i = up(Φ_0)` for `i >= n`. Returned as masks.
pub fn naive_n_sequences(poset: &SpectralPoset, n: u32) -> Vec<Vec<u64>> {
    let size = poset.len();
    let le = warshall(poset);
    let up = |mask: u64| -> u64 {
        (0..size)
            .filter(|&q| members(mask, size).iter().any(|&p| le[p][q]))
            .fold(0, |acc, q| acc | 1 << q)
    };
    let cov = |mask: u64| -> u64 {
        poset
            .covers()
            .iter()
            .filter(|(a, _)| mask >> a.index() & 1 == 1)
            .fold(mask, |acc, (_, b)| acc | 1 << b.index())
    };
    let m = n.max(1) as usize;
    let subsets = 1u64 << size;
    let mut out = Vec::new();
    let mut prefix = vec![0u64; m];
    loop {
        let limit = up(prefix[0]);
        let ok = (0..m).all(|i| {
            let next = if i + 1 < m { prefix[i + 1] } else { limit };
            cov(prefix[i]) & !next == 0 && prefix[i] & !limit == 0
        }) && (n as usize..m).all(|i| prefix[i] == limit);
        if ok {
            out.push(prefix.clone());
        }
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            prefix[i] += 1;
            if prefix[i] < subsets {
                break;
            }
            prefix[i] = 0;
            i += 1;
        }
    }
}
