use std::sync::Arc;

use crate::error::{Error, Result};
use crate::joins::{
    fat_to_neat, join_map, weighted_fat_join, weighted_fat_join_map, weighted_join, weighted_join_map,
    JoinPart, WeightedFatJoin, WeightedJoin,
};
use crate::sset::{
    hom_levels, serialize_map, standard_map, standard_simplex, Cosimplicial, Gen, HomLevels, Side,
    SimplicialMap, SimplicialSet, Under,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceKind {
    Neat,
    Fat,
}

/// The levels `Δ[n] ⋆ᵖ J` (or `Δ[n] ⋄ᵖ J`) a slice is built from.
pub enum ConeShapes {
    Neat(Vec<WeightedJoin>),
    Fat(Vec<WeightedFatJoin>),
}

/// `Q^p_{/d}` or its fat variant, up to a truncation.
pub struct Slice {
    pub hom: HomLevels,
    pub simplices: Vec<Arc<SimplicialSet>>,
    pub shapes: ConeShapes,
    pub diagram: SimplicialMap,
    pub weight: SimplicialMap,
}

impl Slice {
    pub fn set(&self) -> &Arc<SimplicialSet> {
        &self.hom.set
    }

    pub fn kind(&self) -> SliceKind {
        match self.shapes {
            ConeShapes::Neat(_) => SliceKind::Neat,
            ConeShapes::Fat(_) => SliceKind::Fat,
        }
    }

    pub fn level(&self, n: usize) -> &Arc<SimplicialSet> {
        &self.hom.cosimplicial.objects[n]
    }

    /// `J → Δ[n] ⋆ᵖ J`.
    pub fn shape_map(&self, n: usize) -> &SimplicialMap {
        match &self.shapes {
            ConeShapes::Neat(v) => &v[n].right,
            ConeShapes::Fat(v) => &v[n].right,
        }
    }

    /// The summit of a cone: the image of the cone point.
    pub fn apex(&self, v: Gen) -> Gen {
        let point = match &self.shapes {
            ConeShapes::Neat(v) => v[0].left.image(0).clone(),
            ConeShapes::Fat(v) => v[0].left.image(0).clone(),
        };
        self.hom.element(v).apply(&point).base
    }
}

fn simplices(trunc: usize) -> Vec<Arc<SimplicialSet>> {
    (0..=trunc).map(|n| Arc::new(standard_simplex(n))).collect()
}

fn check_diagram(p: &SimplicialMap, d: &SimplicialMap) -> Result<()> {
    if !Arc::ptr_eq(&p.target, &d.source) {
        return Err(Error::Composition("the weight and the diagram have different shapes".into()));
    }
    Ok(())
}

pub fn weighted_slice(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<Slice> {
    neat_with(simplices(trunc), p, d)
}

fn neat_with(simplices: Vec<Arc<SimplicialSet>>, p: &SimplicialMap, d: &SimplicialMap) -> Result<Slice> {
    check_diagram(p, d)?;
    let top = simplices.len() - 1;
    let joins: Vec<WeightedJoin> = simplices.iter().map(|s| weighted_join(s, p)).collect::<Result<_>>()?;
    let cos = Cosimplicial::new(
        top,
        |n| Ok(joins[n].set.clone()),
        |k, n, theta, _, _| weighted_join_map(&joins[k], &joins[n], &standard_map(&simplices[k], &simplices[n], theta)),
    )?;
    let shape_maps: Vec<SimplicialMap> = joins.iter().map(|j| j.right.clone()).collect();
    let hom = hom_levels(cos, &d.target, Some(Under { shape_maps: &shape_maps, diagram: d }), |n, m| {
        serialize_map(m, |g| matches!(joins[n].origin[g], JoinPart::Right(_)))
    })?;
    Ok(Slice { hom, simplices, shapes: ConeShapes::Neat(joins), diagram: d.clone(), weight: p.clone() })
}

pub fn fat_weighted_slice(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<Slice> {
    fat_with(simplices(trunc), p, d)
}

fn fat_with(simplices: Vec<Arc<SimplicialSet>>, p: &SimplicialMap, d: &SimplicialMap) -> Result<Slice> {
    check_diagram(p, d)?;
    let top = simplices.len() - 1;
    let joins: Vec<WeightedFatJoin> =
        simplices.iter().map(|s| weighted_fat_join(s, p)).collect::<Result<_>>()?;
    let cos = Cosimplicial::new(
        top,
        |n| Ok(joins[n].set.clone()),
        |k, n, theta, _, _| {
            weighted_fat_join_map(&joins[k], &joins[n], &standard_map(&simplices[k], &simplices[n], theta))
        },
    )?;
    let shape_maps: Vec<SimplicialMap> = joins.iter().map(|j| j.right.clone()).collect();
    let hom = hom_levels(cos, &d.target, Some(Under { shape_maps: &shape_maps, diagram: d }), |n, m| {
        serialize_map(m, |g| joins[n].pushout.origin[g].0 == Side::Right)
    })?;
    Ok(Slice { hom, simplices, shapes: ConeShapes::Fat(joins), diagram: d.clone(), weight: p.clone() })
}

/// Precomposition with `Δ[n] ⋄ᵖ J → Δ[n] ⋆ᵖ J`: the map from the neat slice to the fat one.
///
/// Builds the fat slice over the same standard simplices and returns it with the map.
pub fn fat_to_neat_slice_map(neat: &Slice) -> Result<(Slice, SimplicialMap)> {
    let ConeShapes::Neat(joins) = &neat.shapes else {
        return Err(Error::Parameter("expected a neat slice".into()));
    };
    let fat = fat_with(neat.simplices.clone(), &neat.weight, &neat.diagram)?;
    let ConeShapes::Fat(fats) = &fat.shapes else { unreachable!() };
    let family = fats.iter().zip(joins).map(|(f, j)| fat_to_neat(f, j)).collect::<Result<Vec<_>>>()?;
    let map = neat.hom.precompose(&fat.hom, &family)?;
    Ok((fat, map))
}

/// The slice of `d ∘ p` under `J̃`, with the comparison from the weighted slice
/// given by precomposing with `Δ[n] ⋆ J̃ → Δ[n] ⋆ᵖ J`.
pub fn conical_reduction_map(weighted: &Slice) -> Result<(Slice, SimplicialMap)> {
    let ConeShapes::Neat(joins) = &weighted.shapes else {
        return Err(Error::Parameter("expected a neat slice".into()));
    };
    let p = &weighted.weight;
    let dp = p.then(&weighted.diagram)?;
    let id = SimplicialMap::identity(&p.source);
    let conical = neat_with(weighted.simplices.clone(), &id, &dp)?;
    let ConeShapes::Neat(plain) = &conical.shapes else { unreachable!() };
    let family = plain
        .iter()
        .zip(joins)
        .map(|(c, w)| {
            let same = join_map(&c.join, &w.join, &SimplicialMap::identity(&c.join.left.source), &id)?;
            c.pushout.map_out(&same.then(&w.pushout.left)?, &p.then(&w.right)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = weighted.hom.precompose(&conical.hom, &family)?;
    Ok((conical, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{nerve, FinCategory};
    use crate::sset::is_isomorphic;

    #[test]
    fn slice_of_an_ordinal_over_its_top() {
        let n = nerve(&Arc::new(FinCategory::ordinal(2))).unwrap();
        let pt = Arc::new(standard_simplex(0));
        let d = SimplicialMap::constant(&pt, &n.set, n.vertex(2));
        let s = weighted_slice(&SimplicialMap::identity(&pt), &d, 2).unwrap();
        // N([2]/2) = N([2]) = Δ[2].
        assert_eq!(s.set().f_vector(), vec![3, 3, 1]);
        let apexes: Vec<String> = s.set().vertices().iter().map(|&v| n.set.name(s.apex(v)).to_string()).collect();
        assert_eq!(apexes.len(), 3);
    }

    #[test]
    fn empty_shape_gives_the_target() {
        let q = Arc::new(crate::sset::horn(2, 1).unwrap());
        let e = Arc::new(SimplicialSet::empty());
        let d = SimplicialMap::from_empty(&e, &q).unwrap();
        let s = fat_weighted_slice(&SimplicialMap::identity(&e), &d, 2).unwrap();
        assert!(is_isomorphic(s.set(), &Arc::new(q.skeleton(2))).unwrap().is_some());
    }

    #[test]
    fn reduction_and_comparison_maps_exist() {
        let n = nerve(&Arc::new(FinCategory::ordinal(1))).unwrap();
        let pt = Arc::new(standard_simplex(0));
        let d = SimplicialMap::constant(&pt, &n.set, n.vertex(1));
        let s = weighted_slice(&SimplicialMap::identity(&pt), &d, 2).unwrap();
        let (c, m) = conical_reduction_map(&s).unwrap();
        assert!(m.is_isomorphism());
        assert_eq!(c.set().f_vector(), s.set().f_vector());
        let (fat, f) = fat_to_neat_slice_map(&s).unwrap();
        f.validate().unwrap();
        assert_eq!(fat.set().vertices().len(), 2);
    }
}
