use std::sync::Arc;

use super::join::{Join, WeightedJoin};
use crate::error::{Error, Result};
use crate::sset::{
    coproduct, product, product_map, pushout, standard_map, standard_simplex, Product, Pushout,
    SimplicialMap, SimplicialSet,
};

/// `I ⋄ J`: the cylinder `I × Δ[1] × J` with its ends collapsed onto `I` and `J`.
pub struct FatJoin {
    pub set: Arc<SimplicialSet>,
    pub interval: Arc<SimplicialSet>,
    /// `I × Δ[1]`.
    pub cylinder: Product,
    /// `(I × Δ[1]) × J`.
    pub prism: Product,
    /// `I ⊔ J`.
    pub ends: Pushout,
    pub pushout: Pushout,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

pub fn fat_join(i: &Arc<SimplicialSet>, j: &Arc<SimplicialSet>) -> Result<FatJoin> {
    let interval = Arc::new(standard_simplex(1));
    let ij = product(i, j)?;
    let cylinder = product(i, &interval)?;
    let prism = product(&cylinder.set, j)?;
    let ends = coproduct(i, j)?;
    let both = coproduct(&ij.set, &ij.set)?;
    let end = |t: usize| -> Result<SimplicialMap> {
        let c = SimplicialMap::constant(&ij.set, &interval, t);
        prism.pair_map(&cylinder.pair_map(&ij.left, &c)?, &ij.right)
    };
    let incl = both.map_out(&end(0)?, &end(1)?)?;
    let fold = both.map_out(&ij.left.then(&ends.left)?, &ij.right.then(&ends.right)?)?;
    let po = pushout(&incl, &fold)?;
    let left = ends.left.then(&po.right)?;
    let right = ends.right.then(&po.right)?;
    Ok(FatJoin { set: po.set.clone(), interval, cylinder, prism, ends, pushout: po, left, right })
}

/// `u ⋄ J` for `u : I → I'`.
pub fn fat_join_map(from: &FatJoin, to: &FatJoin, u: &SimplicialMap) -> Result<SimplicialMap> {
    let j = &from.right.source;
    if !Arc::ptr_eq(j, &to.right.source) {
        return Err(Error::Composition("fat joins have different second factors".into()));
    }
    let id_j = SimplicialMap::identity(j);
    let t = standard_map(&from.interval, &to.interval, &[0, 1]);
    let cyl = product_map(&from.cylinder, &to.cylinder, u, &t)?;
    let prism = product_map(&from.prism, &to.prism, &cyl, &id_j)?;
    let ends = from.ends.induced(&to.ends, u, &id_j)?;
    from.pushout.induced(&to.pushout, &prism, &ends)
}

/// The collapse `I ⋄ J → I ⋆ J`: a prism simplex `(α, t, β)` whose first `k` vertices
/// have `t = 0` goes to the join of the front of `α` with the back of `β`.
fn collapse(fat: &FatJoin, join: &Join) -> Result<SimplicialMap> {
    let (i, j) = (&fat.left.source, &fat.right.source);
    if !Arc::ptr_eq(i, &join.left.source) || !Arc::ptr_eq(j, &join.right.source) {
        return Err(Error::Composition("fat and neat joins have different factors".into()));
    }
    let prism = &fat.prism;
    let images = (0..prism.set.len())
        .map(|z| {
            let (c, beta) = prism.components(&prism.set.gen(z));
            let (alpha, t) = fat.cylinder.components(&c);
            let n = beta.dim();
            let k = fat.interval.vertex_list(&t).iter().filter(|&&v| v == 0).count();
            let front: Vec<u8> = (0..k as u8).collect();
            let back: Vec<u8> = (k as u8..=n as u8).collect();
            let a = (k > 0).then(|| i.apply(&alpha, &front));
            let b = (k <= n).then(|| j.apply(&beta, &back));
            join.join_parts(a.as_ref(), b.as_ref()).expect("a simplex has a vertex")
        })
        .collect();
    let on_prism = SimplicialMap::new(prism.set.clone(), join.set.clone(), images)?;
    let on_ends = fat.ends.map_out(&join.left, &join.right)?;
    fat.pushout.map_out(&on_prism, &on_ends)
}

/// `I ⋄ᵖ J = (I ⋄ J̃) ⊔_J̃ J`.
pub struct WeightedFatJoin {
    pub set: Arc<SimplicialSet>,
    pub fat: FatJoin,
    pub pushout: Pushout,
    pub weight: SimplicialMap,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

pub fn weighted_fat_join(i: &Arc<SimplicialSet>, p: &SimplicialMap) -> Result<WeightedFatJoin> {
    p.validate()?;
    let fat = fat_join(i, &p.source)?;
    let po = pushout(&fat.right, p)?;
    let left = fat.left.then(&po.left)?;
    Ok(WeightedFatJoin {
        set: po.set.clone(),
        right: po.right.clone(),
        left,
        weight: p.clone(),
        fat,
        pushout: po,
    })
}

pub fn weighted_fat_join_map(
    from: &WeightedFatJoin,
    to: &WeightedFatJoin,
    u: &SimplicialMap,
) -> Result<SimplicialMap> {
    if from.weight != to.weight {
        return Err(Error::Composition("weighted fat joins use different weights".into()));
    }
    let on_fat = fat_join_map(&from.fat, &to.fat, u)?;
    let id_j = SimplicialMap::identity(&from.weight.target);
    from.pushout.induced(&to.pushout, &on_fat, &id_j)
}

/// The comparison `I ⋄ᵖ J → I ⋆ᵖ J`, the identity on `J`.
pub fn fat_to_neat(fat: &WeightedFatJoin, neat: &WeightedJoin) -> Result<SimplicialMap> {
    if fat.weight != neat.weight {
        return Err(Error::Composition("fat and neat joins use different weights".into()));
    }
    let c = collapse(&fat.fat, &neat.join)?.then(&neat.pushout.left)?;
    fat.pushout.map_out(&c, &neat.right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::joins::{weighted_join, weighted_join_map};
    use crate::sset::{horn, is_isomorphic};

    fn d(n: usize) -> Arc<SimplicialSet> {
        Arc::new(standard_simplex(n))
    }

    #[test]
    fn fat_join_of_points_is_an_interval() {
        let f = fat_join(&d(0), &d(0)).unwrap();
        assert!(is_isomorphic(&f.set, &d(1)).unwrap().is_some());
    }

    #[test]
    fn fat_join_with_empty() {
        let e = Arc::new(SimplicialSet::empty());
        let h = Arc::new(horn(2, 0).unwrap());
        assert!(is_isomorphic(&fat_join(&e, &h).unwrap().set, &h).unwrap().is_some());
    }

    #[test]
    fn cone_collapses_one_end_of_the_cylinder() {
        // Δ[0] ⋄ J is J × Δ[1] with J × {0} collapsed to a point.
        let j = d(1);
        let f = fat_join(&d(0), &j).unwrap();
        let interval = d(1);
        let cyl = product(&interval, &j).unwrap();
        let bottom = cyl
            .pair_map(&SimplicialMap::constant(&j, &interval, 0), &SimplicialMap::identity(&j))
            .unwrap();
        let pt = d(0);
        let direct = pushout(&bottom, &SimplicialMap::constant(&j, &pt, 0)).unwrap();
        assert_eq!(f.set.f_vector(), vec![3, 4, 2]);
        assert!(is_isomorphic(&f.set, &direct.set).unwrap().is_some());
    }

    #[test]
    fn comparison_of_points_is_an_isomorphism() {
        let pt = d(0);
        let p = SimplicialMap::identity(&pt);
        let fat = weighted_fat_join(&pt, &p).unwrap();
        let neat = weighted_join(&pt, &p).unwrap();
        let c = fat_to_neat(&fat, &neat).unwrap();
        assert!(c.is_isomorphism());
    }

    #[test]
    fn comparison_is_bijective_on_vertices_and_natural() {
        let h = Arc::new(horn(2, 2).unwrap());
        let p = SimplicialMap::identity(&h);
        let (a, b) = (d(0), d(1));
        let u = standard_map(&a, &b, &[1]);
        let (fa, fb) = (weighted_fat_join(&a, &p).unwrap(), weighted_fat_join(&b, &p).unwrap());
        let (na, nb) = (weighted_join(&a, &p).unwrap(), weighted_join(&b, &p).unwrap());
        let ca = fat_to_neat(&fa, &na).unwrap();
        let cb = fat_to_neat(&fb, &nb).unwrap();
        let mut seen: Vec<usize> = fb.set.vertices().iter().map(|&v| cb.vertex_image(v)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), nb.set.vertices().len());
        assert_eq!(fb.set.vertices().len(), nb.set.vertices().len());
        let lhs = weighted_fat_join_map(&fa, &fb, &u).unwrap().then(&cb).unwrap();
        let rhs = ca.then(&weighted_join_map(&na, &nb, &u).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
