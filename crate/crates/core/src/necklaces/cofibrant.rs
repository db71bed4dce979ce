use std::sync::Arc;

use super::decompose::Cones;
use super::mainfact::product_decomposition;
use super::mapping::{mapping_space, MappingSpace};
use super::necklace::{FlaggedNecklace, Necklace};
use crate::error::{Error, Result};
use crate::joins::{weighted_join, WeightedJoin};
use crate::sset::{
    boundary, cube, cube_boundary, cube_horn, is_isomorphic, point, product, standard_simplex, Gen,
    SimplicialMap, SimplicialSet,
};
use crate::verdict::Verdict;

/// The weight `j ↦ Map(⊥, j)` in the realization of `Δ[0] ⋆ᵖ J`, with the action of
/// the edges of `J` by concatenation.
pub struct CofibrantWeight {
    pub cone: WeightedJoin,
    /// One mapping space per vertex of `J`, in vertex order.
    pub values: Vec<(Gen, MappingSpace)>,
    /// `W(j) → W(j')` for each nondegenerate edge `j → j'` of `J`.
    pub actions: Vec<(Gen, SimplicialMap)>,
}

pub fn cofibrant_weight(p: &SimplicialMap, m_max: usize) -> Result<CofibrantWeight> {
    let bottom = Arc::new(point("⊥"));
    let cone = weighted_join(&bottom, p)?;
    let j = p.target.clone();
    let apex = cone.left.vertex_image(0);
    let values = j
        .vertices()
        .iter()
        .map(|&v| Ok((v, mapping_space(&cone.set, apex, cone.right.vertex_image(v), m_max)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut w = CofibrantWeight { cone, values, actions: Vec::new() };
    let edges: Vec<Gen> = j.generators(1).to_vec();
    for e in edges {
        let (a, b) = (j.first_vertex(e), j.last_vertex(e));
        let from = w.value(a).expect("vertex");
        let to = w.value(b).expect("vertex");
        let bead = w.cone.right.image(e).base;
        let action = from.map_to(to, |x| {
            let edge = FlaggedNecklace {
                necklace: Necklace { start: x.necklace.end, end: w.cone.set.last_vertex(bead), beads: vec![bead], dims: vec![1] },
                flag: vec![0b11; x.flag.len()],
            };
            x.concat(&edge).expect("edge continues the necklace")
        })?;
        w.actions.push((e, action));
    }
    Ok(w)
}

impl CofibrantWeight {
    pub fn value(&self, v: Gen) -> Option<&MappingSpace> {
        self.values.iter().find(|(u, _)| *u == v).map(|(_, m)| m)
    }

    /// `Map_J(j, j') × W(j) → W(j')` on simplices of equal degree.
    pub fn act(&self, path: &FlaggedNecklace, x: &FlaggedNecklace) -> Result<FlaggedNecklace> {
        let right = &self.cone.right;
        let moved = FlaggedNecklace {
            necklace: Necklace {
                start: right.vertex_image(path.necklace.start),
                end: right.vertex_image(path.necklace.end),
                beads: path.necklace.beads.iter().map(|&b| right.image(b).base).collect(),
                dims: path.necklace.dims.clone(),
            },
            flag: path.flag.clone(),
        };
        x.concat(&moved)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubeMode {
    Full,
    Boundary,
}

/// Which hom out of vertex `0` of `Δ[n]` (or `∂Δ[n]`) is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    /// The last vertex `n` of the simplex itself.
    Last,
    /// A vertex of the shape `J`.
    Shape(Gen),
}

pub struct CubeCheck {
    pub verdict: Verdict,
    pub hom: MappingSpace,
    /// Into the claimed model, when the claim holds.
    pub witness: Option<SimplicialMap>,
}

fn claimed_cube(n: usize, mode: CubeMode) -> Result<(SimplicialSet, String)> {
    Ok(match mode {
        CubeMode::Full => (cube(n), format!("□[{n}]")),
        CubeMode::Boundary => (cube_horn(n, n, 0)?, format!("⊓^{n}_0[{n}]")),
    })
}

/// The cube formulas for `Map(0, x)` in the realization of `Δ[n] ⋆ᵖ J` or `∂Δ[n] ⋆ᵖ J`.
///
/// At a vertex of `J` the claimed model is the cube (or cubical horn) times the weight
/// value; at the last vertex of the simplex it is a cube one dimension lower. Comparisons
/// are made on skeleta through `m_max`.
pub fn computation1_check(p: &SimplicialMap, n: usize, mode: CubeMode, x: Endpoint, m_max: usize) -> Result<CubeCheck> {
    if mode == CubeMode::Boundary && n == 0 {
        return Err(Error::Parameter("the boundary of Δ[0] has no vertex 0".into()));
    }
    let i = Arc::new(match mode {
        CubeMode::Full => standard_simplex(n),
        CubeMode::Boundary => boundary(n)?,
    });
    let shell = if mode == CubeMode::Full { format!("Δ[{n}]") } else { format!("∂Δ[{n}]") };
    match x {
        Endpoint::Shape(v) => {
            let cones = Cones::new(&i, p)?;
            let d = product_decomposition(&cones, 0, v, m_max)?;
            let (model, model_name) = claimed_cube(n, mode)?;
            let model = Arc::new(model.skeleton(m_max));
            let claim = format!(
                "Map({shell} ⋆ᵖ J)(0, {}) ≅ {model_name} × W({})",
                p.target.name(v),
                p.target.name(v)
            );
            let iso = is_isomorphic(&d.upper.set, &model)?;
            let witness = match (&iso, d.verdict.holds) {
                (Some(iso), true) => {
                    let upper = d.source.pushforward(&cones.to_top, &d.upper)?.then(iso)?;
                    let lower = d.source.pushforward(&cones.to_bottom, &d.lower)?;
                    Some(product(&model, &d.lower.set)?.pair_map(&upper, &lower)?)
                }
                _ => None,
            };
            let detail = format!(
                "cone factor {:?} against {:?}; {}",
                d.upper.set.f_vector(),
                model.f_vector(),
                d.verdict.detail
            );
            Ok(CubeCheck { verdict: Verdict::new(claim, witness.is_some(), detail), hom: d.source, witness })
        }
        Endpoint::Last => {
            if n == 0 {
                return Err(Error::Parameter("Map(0, 0) is not a cube formula".into()));
            }
            let w = weighted_join(&i, p)?;
            let hom = mapping_space(&w.set, w.left.vertex_image(0), w.left.vertex_image(n), m_max)?;
            let (model, model_name) = if n == 1 && mode == CubeMode::Boundary {
                (cube_boundary(0)?, "⊓_0[0]".to_string())
            } else {
                claimed_cube(n - 1, mode)?
            };
            let model = Arc::new(model.skeleton(m_max));
            let iso = is_isomorphic(&hom.set, &model)?;
            let mut detail = format!("{:?} against {:?}", hom.set.f_vector(), model.f_vector());
            if iso.is_none() && mode == CubeMode::Boundary && n >= 2 {
                let bd = Arc::new(cube_boundary(n - 1)?.skeleton(m_max));
                if is_isomorphic(&hom.set, &bd)?.is_some() {
                    detail.push_str(&format!("; ≅ ∂□[{}] instead", n - 1));
                }
            }
            let claim = format!("Map({shell} ⋆ᵖ J)(0, {n}) ≅ {model_name}");
            let witness = iso;
            Ok(CubeCheck { verdict: Verdict::new(claim, witness.is_some(), detail), hom, witness })
        }
    }
}
