use std::sync::Arc;

use super::necklace::{FlaggedNecklace, Necklace};
use crate::error::{Error, Result};
use crate::joins::{join_map, weighted_join, JoinPart, WeightedJoin};
use crate::sset::{point, Gen, SimplicialMap, SimplicialSet};

/// A flagged necklace in `I ⋆ᵖ J` cut into its part in `I`, its one mixed bead and its
/// part in `J`. The outer parts are expressed in `I` and `J`; the middle bead stays in
/// the weighted join.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub left: Option<FlaggedNecklace>,
    pub middle: Option<FlaggedNecklace>,
    pub right: Option<FlaggedNecklace>,
}

fn translate(n: &FlaggedNecklace, to: impl Fn(Gen) -> Gen) -> FlaggedNecklace {
    let necklace = Necklace {
        start: to(n.necklace.start),
        end: to(n.necklace.end),
        beads: n.necklace.beads.iter().map(|&b| to(b)).collect(),
        dims: n.necklace.dims.clone(),
    };
    FlaggedNecklace { necklace, flag: n.flag.clone() }
}

fn part_of(w: &WeightedJoin, g: Gen) -> JoinPart {
    w.origin[g]
}

pub fn decompose(w: &WeightedJoin, t: &FlaggedNecklace) -> Result<Decomposition> {
    let x = &w.set;
    let beads = &t.necklace.beads;
    let from_i = |g: Gen| match part_of(w, g) {
        JoinPart::Left(h) => h,
        _ => unreachable!("checked to lie in I"),
    };
    let from_j = |g: Gen| match part_of(w, g) {
        JoinPart::Right(h) => h,
        _ => unreachable!("checked to lie in J"),
    };
    let mixed: Vec<usize> =
        (0..beads.len()).filter(|&k| matches!(part_of(w, beads[k]), JoinPart::Mixed(..))).collect();
    match mixed.as_slice() {
        [] => match part_of(w, t.necklace.start) {
            JoinPart::Left(_) => Ok(Decomposition { left: Some(translate(t, from_i)), middle: None, right: None }),
            JoinPart::Right(_) => Ok(Decomposition { left: None, middle: None, right: Some(translate(t, from_j)) }),
            JoinPart::Mixed(..) => Err(Error::Structure("necklace starts at a mixed generator".into())),
        },
        &[k] => {
            let left = t.slice(x, 0, k);
            let middle = t.slice(x, k, k + 1);
            let right = t.slice(x, k + 1, beads.len());
            Ok(Decomposition {
                left: Some(translate(&left, from_i)),
                middle: Some(middle),
                right: Some(translate(&right, from_j)),
            })
        }
        _ => Err(Error::Structure("necklace crosses from I to J twice".into())),
    }
}

/// Inverse of [`decompose`].
pub fn concat(w: &WeightedJoin, d: &Decomposition) -> Result<FlaggedNecklace> {
    let into_i = |g: Gen| w.left.image(g).base;
    let into_j = |g: Gen| w.right.image(g).base;
    let parts: Vec<FlaggedNecklace> = [
        d.left.as_ref().map(|n| translate(n, into_i)),
        d.middle.clone(),
        d.right.as_ref().map(|n| translate(n, into_j)),
    ]
    .into_iter()
    .flatten()
    .collect();
    let mut it = parts.into_iter();
    let first = it.next().ok_or_else(|| Error::Parameter("nothing to concatenate".into()))?;
    it.try_fold(first, |acc, n| acc.concat(&n))
}

/// The three realizations compared by the product decomposition, with the collapse maps.
pub struct Cones {
    pub weighted: WeightedJoin,
    /// `I ⋆ Δ[0]`, cone point `⊤`.
    pub top: WeightedJoin,
    /// `Δ[0] ⋆ᵖ J`, cone point `⊥`.
    pub bottom: WeightedJoin,
    pub to_top: SimplicialMap,
    pub to_bottom: SimplicialMap,
    /// `Δ[0] ⋆ Δ[0]` and the maps onto it from both cones.
    pub base: WeightedJoin,
    pub top_to_base: SimplicialMap,
    pub bottom_to_base: SimplicialMap,
}

impl Cones {
    pub fn new(i: &Arc<SimplicialSet>, p: &SimplicialMap) -> Result<Self> {
        let weighted = weighted_join(i, p)?;
        let t = Arc::new(point("⊤"));
        let top = weighted_join(i, &SimplicialMap::identity(&t))?;
        let b = Arc::new(point("⊥"));
        let bottom = weighted_join(&b, p)?;
        let tilde = &p.source;
        let jt = &weighted.join;
        let to_top = {
            let collapse = SimplicialMap::constant(tilde, &t, 0);
            let on_join = join_map(jt, &top.join, &SimplicialMap::identity(i), &collapse)?;
            let on_join = on_join.then(&top.pushout.left)?;
            let top_vertex = top.right.vertex_image(0);
            let on_j = SimplicialMap::constant(&weighted.right.source, &top.set, top_vertex);
            weighted.pushout.map_out(&on_join, &on_j)?
        };
        let to_bottom = {
            let collapse = SimplicialMap::constant(i, &b, 0);
            let on_join = join_map(jt, &bottom.join, &collapse, &SimplicialMap::identity(tilde))?;
            weighted.pushout.induced(&bottom.pushout, &on_join, &SimplicialMap::identity(&p.target))?
        };
        let base = weighted_join(&b, &SimplicialMap::identity(&t))?;
        let top_to_base = {
            let collapse = SimplicialMap::constant(i, &b, 0);
            let id_t = SimplicialMap::identity(&t);
            let on_join = join_map(&top.join, &base.join, &collapse, &id_t)?;
            top.pushout.induced(&base.pushout, &on_join, &id_t)?
        };
        let bottom_to_base = {
            let collapse = SimplicialMap::constant(tilde, &t, 0);
            let on_join = join_map(&bottom.join, &base.join, &SimplicialMap::identity(&b), &collapse)?;
            let on_join = on_join.then(&base.pushout.left)?;
            let on_j = SimplicialMap::constant(&p.target, &base.set, base.right.vertex_image(0));
            bottom.pushout.map_out(&on_join, &on_j)?
        };
        Ok(Cones { weighted, top, bottom, to_top, to_bottom, base, top_to_base, bottom_to_base })
    }

    pub fn top_vertex(&self) -> Gen {
        self.top.right.vertex_image(0)
    }

    pub fn bottom_vertex(&self) -> Gen {
        self.bottom.left.vertex_image(0)
    }

    /// `Ψ`: the flagged necklace with the given images in both cones.
    pub fn glue(&self, upper: &FlaggedNecklace, lower: &FlaggedNecklace) -> Result<FlaggedNecklace> {
        let du = decompose(&self.top, upper)?;
        let dl = decompose(&self.bottom, lower)?;
        let (Some(mu), Some(ml)) = (&du.middle, &dl.middle) else {
            return Err(Error::Structure("cone necklace without a cone bead".into()));
        };
        let (JoinPart::Mixed(a, _), JoinPart::Mixed(_, c)) =
            (self.top.origin[mu.necklace.beads[0]], self.bottom.origin[ml.necklace.beads[0]])
        else {
            return Err(Error::Structure("cone bead is not mixed".into()));
        };
        let w = &self.weighted;
        let bead = w.mixed_simplex(&w.left_factor().gen(a), &w.weight.source.gen(c)).base;
        let di = mu.necklace.length() - 1;
        let lower_mask = (1u64 << (di + 1)) - 1;
        let flag = mu.flag.iter().zip(&ml.flag).map(|(s, t)| (s & lower_mask) | ((t >> 1) << (di + 1))).collect();
        let middle = FlaggedNecklace { necklace: Necklace::new(&w.set, w.set.first_vertex(bead), vec![bead])?, flag };
        concat(w, &Decomposition { left: du.left, middle: Some(middle), right: dl.right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklaces::mapping_space;
    use crate::sset::standard_simplex;

    #[test]
    fn round_trip_in_a_join_of_intervals() {
        let i = Arc::new(standard_simplex(1));
        let j = Arc::new(standard_simplex(1));
        let w = weighted_join(&i, &SimplicialMap::identity(&j)).unwrap();
        for (u, v) in [(0, 1), (0, 3), (2, 3), (1, 2)] {
            let (u, v) = (w.set.vertices()[u], w.set.vertices()[v]);
            let ms = mapping_space(&w.set, u, v, 2).unwrap();
            for level in &ms.levels {
                for t in level {
                    let d = decompose(&w, t).unwrap();
                    assert_eq!(&concat(&w, &d).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn necklace_in_j_has_no_middle() {
        let i = Arc::new(standard_simplex(0));
        let j = Arc::new(standard_simplex(1));
        let w = weighted_join(&i, &SimplicialMap::identity(&j)).unwrap();
        let e = w.right.image(j.generators(1)[0]).base;
        let t = FlaggedNecklace { necklace: Necklace::new(&w.set, w.set.first_vertex(e), vec![e]).unwrap(), flag: vec![0b11] };
        let d = decompose(&w, &t).unwrap();
        assert!(d.left.is_none() && d.middle.is_none());
        assert_eq!(d.right.unwrap().necklace.beads, j.generators(1).to_vec());
    }
}
