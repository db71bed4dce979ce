//! Standard simplices, their boundaries and horns, cubes and cubical horns.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use super::map::SimplicialMap;
use super::product::product;
use super::set::{subset_name, Builder, SimplicialSet};
use super::simplex::{corestrict, image_mask, Simplex};
use crate::error::{Error, Result};

/// `Δ[n]`; generators are named by their vertex lists, e.g. `013`.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    simplex_filtered(n, |_| true).expect("standard simplex")
}

/// `Δ[0]` with a chosen vertex name.
pub fn point(name: &str) -> SimplicialSet {
    let mut b = Builder::new();
    b.vertex(name).expect("fresh builder");
    b.build().expect("point")
}

pub fn boundary(n: usize) -> Result<SimplicialSet> {
    if n == 0 {
        return Err(Error::Parameter("boundary needs n ≥ 1".into()));
    }
    let full = (1u64 << (n + 1)) - 1;
    simplex_filtered(n, |m| m != full)
}

/// `Λ^k[n]`: the boundary without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize) -> Result<SimplicialSet> {
    if n == 0 || k > n {
        return Err(Error::Parameter(format!("no horn Λ^{k}[{n}]")));
    }
    let full = (1u64 << (n + 1)) - 1;
    let opposite = full & !(1u64 << k);
    simplex_filtered(n, |m| m != full && m != opposite)
}

fn simplex_filtered(n: usize, keep: impl Fn(u64) -> bool) -> Result<SimplicialSet> {
    let mut b = Builder::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    for size in 1..=n + 1 {
        for subset in (0..=n as u8).combinations(size) {
            let mask = image_mask(&subset);
            if !keep(mask) {
                continue;
            }
            let faces = if size == 1 {
                Vec::new()
            } else {
                subset
                    .iter()
                    .map(|&v| Simplex::generator(index[&(mask & !(1u64 << v))], size - 2))
                    .collect()
            };
            let g = b.add(subset_name(&subset, n), faces)?;
            index.insert(mask, g);
        }
    }
    b.build()
}

/// Generator of `Δ[n]` (as built by [`standard_simplex`]) spanned by a vertex mask.
pub fn simplex_by_vertices(delta: &SimplicialSet, vertices: &[u8]) -> Simplex {
    let top = delta.generators(delta.dim().unwrap_or(0))[0];
    let mask = image_mask(vertices);
    let f = delta.subface(top, mask);
    Simplex { base: f.base, surj: super::simplex::compose(&f.surj, &corestrict(vertices)) }
}

/// The map `Δ[k] → Δ[n]` induced by a monotone `θ : [k] → [n]`.
pub fn standard_map(
    source: &Arc<SimplicialSet>,
    target: &Arc<SimplicialSet>,
    theta: &[u8],
) -> SimplicialMap {
    // Vertex generators of a standard simplex are numbered by their value.
    let images = (0..source.len())
        .map(|g| {
            let verts: Vec<u8> =
                source.vertex_list(&source.gen(g)).into_iter().map(|v| theta[v]).collect();
            simplex_by_vertices(target, &verts)
        })
        .collect();
    SimplicialMap { source: source.clone(), target: target.clone(), images }
}

/// `□[n] = Δ[1]^n`, with `□[0] = Δ[0]`.
pub fn cube(n: usize) -> SimplicialSet {
    cube_filtered(n, |_| true).expect("cube")
}

/// `∂□[n]`: simplices with at least one constant coordinate.
pub fn cube_boundary(n: usize) -> Result<SimplicialSet> {
    cube_filtered(n, |coords| coords.iter().any(Option::is_some))
}

/// `⊓^k_ε[n]`: the union of all codimension-one faces except `{x_k = ε}`.
pub fn cube_horn(n: usize, k: usize, eps: u8) -> Result<SimplicialSet> {
    if k == 0 || k > n || eps > 1 {
        return Err(Error::Parameter(format!("no cubical horn ⊓^{k}_{eps}[{n}]")));
    }
    cube_filtered(n, |coords| {
        coords
            .iter()
            .enumerate()
            .any(|(i, c)| matches!(c, Some(e) if !(i + 1 == k && *e == eps)))
    })
}

/// Sub-simplicial set of `Δ[1]^n` selected by the pattern of constant coordinates.
fn cube_filtered(n: usize, keep: impl Fn(&[Option<u8>]) -> bool) -> Result<SimplicialSet> {
    let interval = Arc::new(standard_simplex(1));
    let mut cur = Arc::new(standard_simplex(0));
    let mut projections: Vec<SimplicialMap> = Vec::new();
    for i in 0..n {
        if i == 0 {
            cur = interval.clone();
            projections.push(SimplicialMap::identity(&interval));
            continue;
        }
        let p = product(&cur, &interval)?;
        let set = p.set.clone();
        projections = projections
            .iter()
            .map(|q| p.left.then(q).expect("projection chain"))
            .collect();
        projections.push(p.right.clone());
        cur = set;
    }
    let coords = |g: usize| -> Vec<Option<u8>> {
        projections
            .iter()
            .map(|q| {
                let y = q.image(g);
                (y.base_dim() == 0).then(|| interval.name(y.base).parse::<u8>().expect("digit"))
            })
            .collect()
    };
    let (set, _) = cur.restrict(|g| keep(&coords(g)))?;
    Ok(set)
}
