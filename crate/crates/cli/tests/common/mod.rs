//! Independent counting oracles. They read only generator dimensions, vertex lists
//! and names, never the library's constructions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use wlim_core::sset::{SimplicialMap, SimplicialSet};

pub fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `n`-simplices: a `k`-generator has one degeneracy per monotone surjection `[n] → [k]`.
pub fn level_size(x: &SimplicialSet, n: usize) -> usize {
    (0..x.len()).map(|g| choose(n, x.gen_dim(g))).sum()
}

/// `|I_n| + |J_n| + Σ_i |I_i| · |J̃_{n-1-i}|`.
pub fn join_level(i: &SimplicialSet, p: &SimplicialMap, n: usize) -> usize {
    let mixed: usize = (0..n).map(|k| level_size(i, k) * level_size(&p.source, n - 1 - k)).sum();
    level_size(i, n) + level_size(&p.target, n) + mixed
}

/// Totally nondegenerate necklaces from `a` to `b`, as bead lists, found by walking beads.
pub fn brute_necklaces(x: &SimplicialSet, a: usize, b: usize, max_beads: usize) -> Vec<Vec<usize>> {
    let beads: Vec<usize> = (0..x.len()).filter(|&g| x.gen_dim(g) >= 1).collect();
    let mut out = Vec::new();
    if a == b {
        out.push(Vec::new());
    }
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(a, Vec::new())];
    while let Some((at, path)) = stack.pop() {
        if path.len() == max_beads {
            continue;
        }
        for &g in &beads {
            if x.first_vertex(g) != at {
                continue;
            }
            let mut next = path.clone();
            next.push(g);
            let end = x.last_vertex(g);
            if end == b {
                out.push(next.clone());
            }
            stack.push((end, next));
        }
    }
    out
}

fn surjections_onto(k: usize, m: usize) -> usize {
    // Inclusion-exclusion over the missed values.
    let mut total: i64 = 0;
    for j in 0..=m {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * choose(m, j) as i64 * ((m - j) as i64).pow(k as u32);
    }
    total as usize
}

/// `(all, nondegenerate)` counts of `m`-simplices of the necklace mapping space.
///
/// A flag `J = T_0 ⊆ … ⊆ T_m = V` assigns each interior vertex the step at which it
/// enters, so there are `m^k` flags, and the nondegenerate ones use every step.
pub fn flagged_counts(x: &SimplicialSet, a: usize, b: usize, m: usize) -> (usize, usize) {
    let mut all = 0;
    let mut nondeg = 0;
    for beads in brute_necklaces(x, a, b, 16) {
        let k: usize = beads.iter().map(|&g| x.gen_dim(g) - 1).sum();
        all += m.pow(k as u32);
        nondeg += surjections_onto(k, m);
    }
    (all, nondeg)
}

/// Vertex sets of the simplices of a subcomplex of a standard simplex, read from names.
fn faces(x: &SimplicialSet) -> Vec<BTreeSet<usize>> {
    (0..x.len())
        .map(|g| {
            let gen = x.gen(g);
            x.vertex_list(&gen).iter().map(|&v| x.name(v).parse::<usize>().expect("integer vertex names")).collect()
        })
        .collect()
}

/// `(all, nondegenerate)` counts of `m`-simplices of `𝔠[X](a, b)` for `X ⊆ Δ[N]`.
///
/// `𝔠[Δ[N]](a, b)` is the nerve of the subsets of `[a, b]` that contain both ends, and the
/// colimit over the simplices of `X` keeps the chains whose top set, cut at the members of
/// the bottom set, has every piece spanning a simplex of `X`.
pub fn cube_colimit_counts(x: &SimplicialSet, a: usize, b: usize, m: usize) -> (usize, usize) {
    let simplices = faces(x);
    let in_x = |s: &BTreeSet<usize>| simplices.iter().any(|f| s.is_subset(f));
    let interior: Vec<usize> = (a + 1..b).collect();
    let sets: Vec<BTreeSet<usize>> = (0..1u32 << interior.len())
        .map(|mask| {
            let mut s: BTreeSet<usize> = [a, b].into_iter().collect();
            s.extend(interior.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
            s
        })
        .collect();
    let allowed = |bottom: &BTreeSet<usize>, top: &BTreeSet<usize>| {
        let cuts: Vec<usize> = bottom.iter().copied().collect();
        cuts.windows(2).all(|w| in_x(&top.range(w[0]..=w[1]).copied().collect()))
    };
    let mut all = 0;
    let mut nondeg = 0;
    // Chains U_0 ⊆ … ⊆ U_m by brute force over all sequences.
    let mut idx = vec![0usize; m + 1];
    loop {
        let chain: Vec<&BTreeSet<usize>> = idx.iter().map(|&i| &sets[i]).collect();
        if chain.windows(2).all(|w| w[0].is_subset(w[1])) && allowed(chain[0], chain[m]) {
            all += 1;
            if chain.windows(2).all(|w| w[0] != w[1]) {
                nondeg += 1;
            }
        }
        let mut k = 0;
        while k <= m {
            idx[k] += 1;
            if idx[k] < sets.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k > m {
            break;
        }
    }
    (all, nondeg)
}
