use std::sync::Arc;

use crate::error::{Error, Result};
use std::ops::ControlFlow;

use crate::sset::{
    codegeneracy, coface, exponential, from_levels, is_isomorphic, product, product_map, pullback, search_maps,
    serialize_map, standard_map, standard_simplex, Exponential, Product, SimplicialMap, SimplicialSet, Simplex,
};

use super::slice::fat_weighted_slice;

/// `F ↓_B G = (A × C) ×_{B × B} B^{Δ[1]}`.
pub struct Comma {
    pub set: Arc<SimplicialSet>,
    pub paths: Exponential,
}

pub fn comma(f: &SimplicialMap, g: &SimplicialMap, trunc: usize) -> Result<Comma> {
    if !Arc::ptr_eq(&f.target, &g.target) {
        return Err(Error::Composition("comma of maps with different targets".into()));
    }
    let b = &f.target;
    let interval = Arc::new(crate::sset::standard_simplex(1));
    let paths = exponential(b, &interval, trunc)?;
    let ends = product(b, b)?;
    let ac = product(&f.source, &g.source)?;
    let fg = ends.pair_map(&ac.left.then(f)?, &ac.right.then(g)?)?;
    let ev = ends.pair_map(&paths.evaluate(0)?, &paths.evaluate(1)?)?;
    let pb = pullback(&fg, &ev)?;
    Ok(Comma { set: pb.set, paths })
}

/// Outcome of comparing the fat slice with its comma description.
pub struct CommaCheck {
    pub slice: Arc<SimplicialSet>,
    pub comma: Arc<SimplicialSet>,
    pub witness: Option<SimplicialMap>,
}

/// `Q^p_{//d}` against `Q ×_{Q^J̃} Q^{Δ[1] × J̃} ×_{Q^J̃} Δ[0]`, where the first leg is
/// the constant-map inclusion at the `0` end and the point is `d ∘ p` at the `1` end.
pub fn fat_slice_as_comma(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<CommaCheck> {
    let slice = fat_weighted_slice(p, d, trunc)?;
    let comma = comma_levels(p, d, trunc)?;
    let witness = is_isomorphic(slice.set(), &comma)?;
    Ok(CommaCheck { slice: slice.set().clone(), comma, witness })
}

/// The same pullback, one level at a time: an `n`-simplex is a simplex `σ` of `Q` with a map
/// `Δ[n] × (Δ[1] × J̃) → Q` that is `σ` on the `0` end and `d ∘ p` on the `1` end.
fn comma_levels(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<Arc<SimplicialSet>> {
    let q = &d.target;
    let tilde = &p.source;
    let dp = p.then(d)?;
    let interval = Arc::new(standard_simplex(1));
    let cyl = product(&interval, tilde)?;
    let at = |t: usize| cyl.pair_map(&SimplicialMap::constant(tilde, &interval, t), &SimplicialMap::identity(tilde));
    let ends_at = [at(0)?, at(1)?];
    let id_cyl = SimplicialMap::identity(&cyl.set);
    let simplices: Vec<Arc<SimplicialSet>> = (0..=trunc + 1).map(|n| Arc::new(standard_simplex(n))).collect();
    let prisms: Vec<Product> = simplices.iter().map(|s| product(s, &cyl.set)).collect::<Result<_>>()?;
    let mut levels: Vec<Vec<(Simplex, Vec<Simplex>)>> = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let ends = product(&simplices[n], tilde)?;
        let id = SimplicialMap::identity(&simplices[n]);
        let incl = ends_at.iter().map(|e| product_map(&ends, &prisms[n], &id, e)).collect::<Result<Vec<_>>>()?;
        let mut level = Vec::new();
        for sigma in q.all_simplices(n) {
            let mut fix = Vec::new();
            for z in 0..ends.set.len() {
                let z = ends.set.gen(z);
                let (x, y) = ends.components(&z);
                let theta: Vec<u8> = simplices[n].vertex_list(&x).into_iter().map(|v| v as u8).collect();
                fix.push((incl[0].apply(&z), q.apply(&sigma, &theta)));
                fix.push((incl[1].apply(&z), dp.apply(&y)));
            }
            search_maps(&prisms[n].set, q, &fix, &mut |imgs| {
                level.push((sigma.clone(), imgs.to_vec()));
                ControlFlow::Continue(())
            })?;
        }
        levels.push(level);
    }
    let along = |k: usize, n: usize, theta: &[u8]| {
        product_map(&prisms[k], &prisms[n], &standard_map(&simplices[k], &simplices[n], theta), &id_cyl)
    };
    let faces: Vec<Vec<SimplicialMap>> = (0..=trunc)
        .map(|n| if n == 0 { Ok(Vec::new()) } else { (0..=n).map(|i| along(n - 1, n, &coface(n, i))).collect() })
        .collect::<Result<_>>()?;
    let degens: Vec<Vec<SimplicialMap>> =
        (0..=trunc).map(|n| (0..=n).map(|i| along(n + 1, n, &codegeneracy(n, i))).collect()).collect::<Result<_>>()?;
    let pre = |m: &SimplicialMap, images: &[Simplex]| -> Vec<Simplex> {
        m.images.iter().map(|s| q.apply(&images[s.base], &s.surj)).collect()
    };
    let lv = from_levels(
        &levels,
        |n, i, (sigma, images)| (q.face(sigma, i), pre(&faces[n][i], images)),
        |n, i, (sigma, images)| (q.degen(sigma, i), pre(&degens[n][i], images)),
        |n, (sigma, images)| {
            let m = SimplicialMap { source: prisms[n].set.clone(), target: q.clone(), images: images.clone() };
            format!("{}⇒{}", q.show(sigma), serialize_map(&m, |_| false))
        },
        Some(trunc),
    )?;
    Ok(Arc::new(lv.set))
}

/// The comma object assembled from whole exponentials; only feasible for tiny inputs.
#[cfg(test)]
fn comma_from_exponentials(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<Arc<SimplicialSet>> {
    let q = &d.target;
    let tilde = &p.source;
    let interval = Arc::new(standard_simplex(1));
    let cyl = product(&interval, tilde)?;
    let at = |t: usize| -> Result<SimplicialMap> {
        cyl.pair_map(&SimplicialMap::constant(tilde, &interval, t), &SimplicialMap::identity(tilde))
    };
    let over = exponential(q, tilde, trunc)?;
    let paths = exponential(q, &cyl.set, trunc)?;
    let ev0 = paths.restrict(&over, &at(0)?)?;
    let ev1 = paths.restrict(&over, &at(1)?)?;
    let constant = over.diagonal()?;
    let dp = p.then(d)?;
    let images: Vec<Simplex> = over.products[0].right.then(&dp)?.images;
    let target = over
        .hom
        .simplex_of(0, &images)
        .ok_or_else(|| Error::Structure("d ∘ p is missing from Q^J̃".into()))?;
    let pt = Arc::new(standard_simplex(0));
    let point = SimplicialMap::new(pt, over.set().clone(), vec![target])?;
    let first = pullback(&constant, &ev0)?;
    let second = pullback(&first.right.then(&ev1)?, &point)?;
    Ok(second.set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{nerve, FinCategory};
    use crate::sset::standard_simplex;

    #[test]
    fn comma_of_endpoints_in_an_arrow() {
        let n = nerve(&Arc::new(FinCategory::ordinal(1))).unwrap();
        let pt = Arc::new(standard_simplex(0));
        let f = SimplicialMap::constant(&pt, &n.set, n.vertex(0));
        let g = SimplicialMap::constant(&pt, &n.set, n.vertex(1));
        let c = comma(&f, &g, 2).unwrap();
        assert!(is_isomorphic(&c.set, &pt).unwrap().is_some());
    }

    #[test]
    fn comma_of_points() {
        let pt = Arc::new(standard_simplex(0));
        let id = SimplicialMap::identity(&pt);
        let c = comma(&id, &id, 2).unwrap();
        assert_eq!(c.set.f_vector(), vec![1]);
    }

    #[test]
    fn fat_slice_over_a_vertex_is_a_comma() {
        let n = nerve(&Arc::new(FinCategory::ordinal(2))).unwrap();
        let pt = Arc::new(standard_simplex(0));
        let d = SimplicialMap::constant(&pt, &n.set, n.vertex(1));
        let check = fat_slice_as_comma(&SimplicialMap::identity(&pt), &d, 2).unwrap();
        assert!(check.witness.is_some(), "{:?} vs {:?}", check.slice.f_vector(), check.comma.f_vector());
    }

    #[test]
    fn levelwise_comma_matches_the_exponential_pullback() {
        let n = nerve(&Arc::new(FinCategory::ordinal(2))).unwrap();
        let tilde = Arc::new(standard_simplex(1));
        let pt = Arc::new(standard_simplex(0));
        let p = SimplicialMap::constant(&tilde, &pt, 0);
        let d = SimplicialMap::constant(&pt, &n.set, n.vertex(1));
        let fast = comma_levels(&p, &d, 2).unwrap();
        let slow = comma_from_exponentials(&p, &d, 2).unwrap();
        assert!(is_isomorphic(&fast, &slow).unwrap().is_some());
    }
}
