use std::sync::Arc;

use super::functor::{SSetDiagram, SSetWeight};
use crate::error::{Error, Result};
use crate::fincat::Obj;
use crate::sset::{
    coface, codegeneracy, enumerate_maps, from_levels, product, product_map, serialize_map, standard_map,
    standard_simplex, Gen, Product, SimplicialMap, SimplicialSet, Simplex,
};

/// `∫_j D(j)^{W(j)}`, built degreewise through `trunc`.
pub struct WeightedEnd {
    pub set: Arc<SimplicialSet>,
    /// `Δ[n] × W(j)`, per level and object.
    pub products: Vec<Vec<Product>>,
    /// Images of each listed simplex, one map `Δ[n] × W(j) → D(j)` per object.
    pub families: Vec<Vec<Vec<Vec<Simplex>>>>,
    pub origin: Vec<(usize, usize)>,
    pub bound: usize,
}

fn check_shapes(w: &SSetWeight, d: &SSetDiagram) -> Result<()> {
    if !Arc::ptr_eq(&w.shape, &d.shape) {
        return Err(Error::Composition("weight and diagram have different shapes".into()));
    }
    Ok(())
}

/// Natural families `φ_j : K_j → D(j)` for sources `K_j` carrying the action of the shape.
///
/// `action(f)` is `K_j → K_j'` for `f : j → j'`.
fn natural_families(
    d: &SSetDiagram,
    sources: &[Arc<SimplicialSet>],
    action: impl Fn(usize) -> Result<SimplicialMap>,
) -> Result<Vec<Vec<Vec<Simplex>>>> {
    let c = &d.shape;
    let no = c.object_count();
    let candidates: Vec<Vec<SimplicialMap>> =
        (0..no).map(|j| enumerate_maps(&sources[j], &d.values[j])).collect::<Result<_>>()?;
    let arrows: Vec<(usize, SimplicialMap)> =
        (no..c.morphism_count()).map(|f| Ok((f, action(f)?))).collect::<Result<_>>()?;
    // Arrows are checked as soon as both endpoints are chosen.
    let due: Vec<Vec<usize>> = (0..no)
        .map(|j| (0..arrows.len()).filter(|&k| c.dom(arrows[k].0).max(c.cod(arrows[k].0)) == j).collect())
        .collect();
    let natural = |f: usize, a: &SimplicialMap, phi: &[&SimplicialMap]| {
        let (j, j2) = (c.dom(f), c.cod(f));
        let df = &d.maps[f];
        (0..sources[j].len()).all(|z| {
            let x = sources[j].gen(z);
            df.apply(&phi[j].apply(&x)) == phi[j2].apply(&a.apply(&x))
        })
    };
    let mut out = Vec::new();
    let mut chosen: Vec<&SimplicialMap> = Vec::with_capacity(no);
    fn go<'a>(
        j: usize,
        candidates: &'a [Vec<SimplicialMap>],
        chosen: &mut Vec<&'a SimplicialMap>,
        ok: &dyn Fn(usize, &[&SimplicialMap]) -> bool,
        out: &mut Vec<Vec<Vec<Simplex>>>,
    ) {
        if j == candidates.len() {
            out.push(chosen.iter().map(|m| m.images.clone()).collect());
            return;
        }
        for m in &candidates[j] {
            chosen.push(m);
            if ok(j, chosen) {
                go(j + 1, candidates, chosen, ok, out);
            }
            chosen.pop();
        }
    }
    let ok = |j: usize, phi: &[&SimplicialMap]| due[j].iter().all(|&k| natural(arrows[k].0, &arrows[k].1, phi));
    go(0, &candidates, &mut chosen, &ok, &mut out);
    Ok(out)
}

pub fn weighted_end(w: &SSetWeight, d: &SSetDiagram, trunc: usize) -> Result<WeightedEnd> {
    check_shapes(w, d)?;
    let c = &w.shape;
    let no = c.object_count();
    let simplices: Vec<Arc<SimplicialSet>> = (0..=trunc + 1).map(|n| Arc::new(standard_simplex(n))).collect();
    let products: Vec<Vec<Product>> = simplices
        .iter()
        .map(|s| (0..no).map(|j| product(s, &w.values[j])).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut families = Vec::with_capacity(trunc + 1);
    for n in 0..=trunc {
        let sources: Vec<Arc<SimplicialSet>> = products[n].iter().map(|p| p.set.clone()).collect();
        let id = SimplicialMap::identity(&simplices[n]);
        let action = |f: usize| product_map(&products[n][c.dom(f)], &products[n][c.cod(f)], &id, &w.maps[f]);
        families.push(natural_families(d, &sources, action)?);
    }
    // `along[k][n][j]`: the map Δ[k] × W(j) → Δ[n] × W(j) induced by θ : [k] → [n].
    let induced = |k: usize, n: usize, theta: &[u8], j: Obj| {
        let u = standard_map(&simplices[k], &simplices[n], theta);
        product_map(&products[k][j], &products[n][j], &u, &SimplicialMap::identity(&w.values[j]))
    };
    let mut face_maps: Vec<Vec<Vec<SimplicialMap>>> = vec![Vec::new()];
    let mut degen_maps: Vec<Vec<Vec<SimplicialMap>>> = Vec::new();
    for n in 0..=trunc {
        if n > 0 {
            face_maps.push((0..=n).map(|i| (0..no).map(|j| induced(n - 1, n, &coface(n, i), j)).collect()).collect::<Result<_>>()?);
        }
        if n < trunc {
            degen_maps.push((0..=n).map(|i| (0..no).map(|j| induced(n + 1, n, &codegeneracy(n, i), j)).collect()).collect::<Result<_>>()?);
        }
    }
    let pre = |along: &[SimplicialMap], e: &Vec<Vec<Simplex>>| -> Vec<Vec<Simplex>> {
        (0..no)
            .map(|j| along[j].images.iter().map(|s| d.values[j].apply(&e[j][s.base], &s.surj)).collect())
            .collect()
    };
    let lv = from_levels(
        &families,
        |n, i, e| pre(&face_maps[n][i], e),
        |n, i, e| pre(&degen_maps[n][i], e),
        |n, e| {
            let parts: Vec<String> = (0..no)
                .map(|j| {
                    let m = SimplicialMap { source: products[n][j].set.clone(), target: d.values[j].clone(), images: e[j].clone() };
                    serialize_map(&m, |_| false)
                })
                .collect();
            parts.join("|")
        },
        Some(trunc),
    )?;
    let mut products = products;
    products.truncate(trunc + 1);
    Ok(WeightedEnd { set: Arc::new(lv.set), products, families, origin: lv.origin, bound: trunc })
}

impl WeightedEnd {
    /// The component of a simplex at `j`, as a map `Δ[n] × W(j) → D(j)`.
    pub fn component(&self, g: Gen, j: Obj, d: &SSetDiagram) -> SimplicialMap {
        let (n, k) = self.origin[g];
        SimplicialMap {
            source: self.products[n][j].set.clone(),
            target: d.values[j].clone(),
            images: self.families[n][k][j].clone(),
        }
    }
}

/// Natural transformations `W ⇒ Map(A, D−)`, counted as natural families `W(j) × A → D(j)`.
pub fn weighted_cone_count(w: &SSetWeight, d: &SSetDiagram, a: &Arc<SimplicialSet>) -> Result<usize> {
    check_shapes(w, d)?;
    let c = &w.shape;
    let products: Vec<Product> = w.values.iter().map(|v| product(v, a)).collect::<Result<_>>()?;
    let sources: Vec<Arc<SimplicialSet>> = products.iter().map(|p| p.set.clone()).collect();
    let id = SimplicialMap::identity(a);
    let action = |f: usize| product_map(&products[c.dom(f)], &products[c.cod(f)], &w.maps[f], &id);
    Ok(natural_families(d, &sources, action)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::SSetFunctor;
    use crate::fincat::FinCategory;
    use crate::sset::{exponential, is_isomorphic, point, pullback};

    fn single() -> Arc<FinCategory> {
        Arc::new(FinCategory::discrete(&["•"]))
    }

    #[test]
    fn interval_weight_gives_the_cotensor() {
        let d2 = Arc::new(standard_simplex(2));
        let d1 = Arc::new(standard_simplex(1));
        let shape = single();
        let w = SSetFunctor::constant(&shape, &d1);
        let d = SSetFunctor::constant(&shape, &d2);
        let end = weighted_end(&w, &d, 2).unwrap();
        let exp = exponential(&d2, &d1, 2).unwrap();
        assert!(is_isomorphic(&end.set, exp.set()).unwrap().is_some());
    }

    #[test]
    fn point_weight_gives_the_pullback() {
        let shape = Arc::new(FinCategory::cospan());
        let d1 = Arc::new(standard_simplex(1));
        let d2 = Arc::new(standard_simplex(2));
        let bd = Arc::new(crate::sset::boundary(2).unwrap());
        let f = SimplicialMap::by_names(&d1, &d2).unwrap();
        let g = SimplicialMap::by_names(&bd, &d2).unwrap();
        let d = SSetFunctor::new(shape.clone(), vec![d1.clone(), d2.clone(), bd.clone()], vec![f.clone(), g.clone()]).unwrap();
        let pt = Arc::new(point("*"));
        let w = SSetFunctor::constant(&shape, &pt);
        let end = weighted_end(&w, &d, 2).unwrap();
        let pb = pullback(&f, &g).unwrap();
        assert_eq!(end.set.f_vector(), pb.set.f_vector());
        for a in [standard_simplex(0), standard_simplex(1)] {
            let a = Arc::new(a);
            let maps = enumerate_maps(&a, &end.set).unwrap().len();
            assert_eq!(weighted_cone_count(&w, &d, &a).unwrap(), maps);
        }
    }
}
