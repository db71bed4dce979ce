//! Isomorphism search between finite simplicial sets.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::enumerate::{enumeration_cap, search_order};
use super::map::SimplicialMap;
use super::set::SimplicialSet;
use super::simplex::{Gen, Simplex};
use crate::error::{Error, Result};

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Colour refinement on generators using faces and cofaces; equal colours are necessary
/// for two generators to correspond under an isomorphism.
fn refine(sets: [&SimplicialSet; 2]) -> [Vec<u64>; 2] {
    let cofaces = |x: &SimplicialSet| {
        let mut co: Vec<Vec<(Gen, usize)>> = vec![Vec::new(); x.len()];
        for g in 0..x.len() {
            for (i, f) in x.faces(g).iter().enumerate() {
                co[f.base].push((g, i));
            }
        }
        co
    };
    let co = [cofaces(sets[0]), cofaces(sets[1])];
    let mut colors: [Vec<u64>; 2] = [0, 1].map(|s| {
        let x = sets[s];
        (0..x.len())
            .map(|g| {
                let pattern: Vec<&Vec<u8>> = x.faces(g).iter().map(|f| &f.surj).collect();
                hash_of(&(x.gen_dim(g), pattern))
            })
            .collect()
    });
    let distinct = |c: &[Vec<u64>; 2]| {
        let mut all: Vec<u64> = c[0].iter().chain(&c[1]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut classes = distinct(&colors);
    for _ in 0..32 {
        let next: [Vec<u64>; 2] = [0, 1].map(|s| {
            let x = sets[s];
            (0..x.len())
                .map(|g| {
                    let faces: Vec<(u64, &Vec<u8>)> =
                        x.faces(g).iter().map(|f| (colors[s][f.base], &f.surj)).collect();
                    let mut ups: Vec<(u64, usize, &Vec<u8>)> = co[s][g]
                        .iter()
                        .map(|&(h, i)| (colors[s][h], i, &x.faces(h)[i].surj))
                        .collect();
                    ups.sort_unstable();
                    hash_of(&(colors[s][g], faces, ups))
                })
                .collect()
        });
        let c = distinct(&next);
        colors = next;
        if c == classes {
            break;
        }
        classes = c;
    }
    colors
}

/// An isomorphism `X → Y`, or `None` when there is none.
pub fn is_isomorphic(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<Option<SimplicialMap>> {
    if x.f_vector() != y.f_vector() {
        return Ok(None);
    }
    let [cx, cy] = refine([x, y]);
    let mut sx = cx.clone();
    let mut sy = cy.clone();
    sx.sort_unstable();
    sy.sort_unstable();
    if sx != sy {
        return Ok(None);
    }
    let mut by_faces: HashMap<Vec<Simplex>, Vec<Gen>> = HashMap::new();
    for g in 0..y.len() {
        by_faces.entry(y.faces(g).to_vec()).or_default().push(g);
    }
    let order = search_order(x, &[]);
    let mut assign: Vec<Option<Gen>> = vec![None; x.len()];
    let mut used = vec![false; y.len()];
    let mut tried = 0u64;
    let found = backtrack(x, y, &cx, &cy, &by_faces, &order, 0, &mut assign, &mut used, &mut tried)?;
    Ok(found.then(|| SimplicialMap {
        source: x.clone(),
        target: y.clone(),
        images: assign.iter().map(|a| y.gen(a.expect("complete"))).collect(),
    }))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    x: &SimplicialSet,
    y: &SimplicialSet,
    cx: &[u64],
    cy: &[u64],
    by_faces: &HashMap<Vec<Simplex>, Vec<Gen>>,
    order: &[Gen],
    depth: usize,
    assign: &mut Vec<Option<Gen>>,
    used: &mut Vec<bool>,
    tried: &mut u64,
) -> Result<bool> {
    if depth == order.len() {
        return Ok(true);
    }
    let g = order[depth];
    let cands: Vec<Gen> = if x.gen_dim(g) == 0 {
        y.vertices().to_vec()
    } else {
        let required: Vec<Simplex> = x
            .faces(g)
            .iter()
            .map(|f| Simplex { base: assign[f.base].expect("faces first"), surj: f.surj.clone() })
            .collect();
        by_faces.get(&required).cloned().unwrap_or_default()
    };
    for c in cands {
        if used[c] || cy[c] != cx[g] {
            continue;
        }
        *tried += 1;
        if *tried > enumeration_cap() {
            return Err(Error::CapExceeded(enumeration_cap()));
        }
        assign[g] = Some(c);
        used[c] = true;
        if backtrack(x, y, cx, cy, by_faces, order, depth + 1, assign, used, tried)? {
            return Ok(true);
        }
        used[c] = false;
    }
    assign[g] = None;
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, cube, horn, standard_simplex};

    #[test]
    fn cube_one_is_the_interval() {
        let a = Arc::new(cube(1));
        let b = Arc::new(standard_simplex(1));
        let w = is_isomorphic(&a, &b).unwrap().unwrap();
        w.validate().unwrap();
        assert!(w.is_isomorphism());
    }

    #[test]
    fn different_counts_are_not_isomorphic() {
        let a = Arc::new(standard_simplex(1));
        let b = Arc::new(boundary(1).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
    }

    #[test]
    fn horns_distinguished_by_orientation() {
        let h0 = Arc::new(horn(2, 0).unwrap());
        let h2 = Arc::new(horn(2, 2).unwrap());
        let h1 = Arc::new(horn(2, 1).unwrap());
        assert!(is_isomorphic(&h0, &h2).unwrap().is_none());
        assert!(is_isomorphic(&h0, &h1).unwrap().is_none());
        assert!(is_isomorphic(&h2, &Arc::new(h2.opposite())).unwrap().is_none());
        assert!(is_isomorphic(&h0, &Arc::new(h2.opposite())).unwrap().is_some());
    }
}
