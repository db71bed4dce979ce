use std::sync::Arc;

use super::ho::{ho_category, is_equivalence};
use super::lifting::{first_unfillable, is_terminal_vertex, Counterexample, LiftStatus, LiftVerdict};
use crate::error::{Error, Result};
use crate::joins::{weighted_join, weighted_join_map, WeightedJoin};
use crate::slices::{conical_reduction_map, fat_to_neat_slice_map, weighted_slice, ConeShapes, Slice};
use crate::sset::{boundary, standard_simplex, Gen, SimplicialMap, Simplex};
use crate::verdict::Verdict;

/// Weighted limits of `d` by `p`, found as terminal vertices of the slice and, separately,
/// by lifting against `∂Δ[n] ⋆ᵖ J ↪ Δ[n] ⋆ᵖ J`.
pub struct WeightedLimit {
    pub slice: Slice,
    /// Cones that are limits, as vertices of the slice.
    pub limits: Vec<Gen>,
    /// The summit of each limit cone, in the target of `d`.
    pub apexes: Vec<Gen>,
    /// Per cone, the outcome of the direct lifting search.
    pub direct: Vec<(Gen, LiftVerdict)>,
    /// Both searches pick the same cones.
    pub agree: bool,
    /// Limit cones are pairwise isomorphic in the homotopy category of the slice.
    pub unique: Verdict,
    pub bound: usize,
}

fn cone_point_join(slice: &Slice) -> Result<&WeightedJoin> {
    match &slice.shapes {
        ConeShapes::Neat(joins) => Ok(&joins[0]),
        ConeShapes::Fat(_) => Err(Error::Parameter("expected a neat slice".into())),
    }
}

/// Whether the cone `λ : Δ[0] ⋆ᵖ J → Q` is a limit, checked directly in `Q` up to `n_max`.
pub fn is_limit_cone(slice: &Slice, cone: Gen, n_max: usize) -> Result<LiftVerdict> {
    let base = cone_point_join(slice)?;
    let lambda = slice.hom.element(cone);
    let q = &slice.diagram.target;
    let pt = base.left_factor();
    for n in 1..=n_max {
        let bd = Arc::new(boundary(n)?);
        let simplex = Arc::new(standard_simplex(n));
        let wb = weighted_join(&bd, &slice.weight)?;
        let ws = weighted_join(&simplex, &slice.weight)?;
        let incl = weighted_join_map(&wb, &ws, &SimplicialMap::by_names(&bd, &simplex)?)?;
        let last = bd.find(&n.to_string()).expect("last vertex");
        let iota = weighted_join_map(base, &wb, &SimplicialMap::constant(pt, &bd, last))?;
        let fix: Vec<(Simplex, Simplex)> =
            (0..base.set.len()).map(|g| (iota.apply(&base.set.gen(g)), lambda.apply(&base.set.gen(g)))).collect();
        if let Some(map) = first_unfillable(&incl, q, &fix)? {
            let c = Counterexample { dim: n, inclusion: incl, map };
            return Ok(LiftVerdict { status: LiftStatus::Counterexample(Box::new(c)), bound: n_max });
        }
    }
    Ok(LiftVerdict { status: LiftStatus::VerifiedUpTo(n_max), bound: n_max })
}

fn uniqueness(slice: &Slice, limits: &[Gen]) -> Verdict {
    let claim = "limit cones are unique up to isomorphism";
    if limits.len() < 2 {
        return Verdict::new(claim, true, format!("{} limit cone(s)", limits.len()));
    }
    match ho_category(slice.set()) {
        Ok(ho) => {
            let bad: Vec<String> = limits[1..]
                .iter()
                .filter(|&&v| !ho.isomorphic(limits[0], v))
                .map(|&v| slice.set().name(v).to_string())
                .collect();
            let detail = if bad.is_empty() {
                format!("{} cones in one isomorphism class", limits.len())
            } else {
                format!("not isomorphic to the first: {}", bad.join(", "))
            };
            Verdict::new(claim, bad.is_empty(), detail)
        }
        Err(e) => Verdict::new(claim, false, format!("no homotopy category: {e}")),
    }
}

/// Search for weighted limits with lifting bound `n_max`; the slice is built through `trunc ≥ n_max`.
pub fn weighted_limit(p: &SimplicialMap, d: &SimplicialMap, trunc: usize, n_max: usize) -> Result<WeightedLimit> {
    if n_max > trunc {
        return Err(Error::Parameter(format!("bound {n_max} exceeds the truncation {trunc}")));
    }
    let slice = weighted_slice(p, d, trunc)?;
    let set = slice.set().clone();
    let mut limits = Vec::new();
    let mut direct = Vec::new();
    let mut agree = true;
    for &v in set.vertices() {
        let terminal = is_terminal_vertex(&set, v, n_max)?.verified();
        let lift = is_limit_cone(&slice, v, n_max)?;
        agree &= terminal == lift.verified();
        if terminal {
            limits.push(v);
        }
        direct.push((v, lift));
    }
    let apexes = limits.iter().map(|&v| slice.apex(v)).collect();
    let unique = uniqueness(&slice, &limits);
    Ok(WeightedLimit { slice, limits, apexes, direct, agree, unique, bound: n_max })
}

/// The weighted slice and the conical slice of `d ∘ p` are isomorphic, matching limit cones.
pub fn conical_reduction_check(p: &SimplicialMap, d: &SimplicialMap, trunc: usize, n_max: usize) -> Result<Verdict> {
    let weighted = weighted_slice(p, d, trunc)?;
    let (conical, map) = conical_reduction_map(&weighted)?;
    let iso = map.is_isomorphism();
    let mut parts = vec![Verdict::new(
        "comparison of slices is an isomorphism",
        iso,
        format!("f-vectors {:?} and {:?}", weighted.set().f_vector(), conical.set().f_vector()),
    )];
    if iso {
        let mut moved = Vec::new();
        for &v in weighted.set().vertices() {
            let here = is_terminal_vertex(weighted.set(), v, n_max)?.verified();
            let there = is_terminal_vertex(conical.set(), map.vertex_image(v), n_max)?.verified();
            if here != there {
                moved.push(weighted.set().name(v).to_string());
            }
        }
        parts.push(Verdict::new(
            "limit cones correspond",
            moved.is_empty(),
            if moved.is_empty() { format!("checked up to {n_max}") } else { moved.join(", ") },
        ));
    }
    Ok(Verdict::all("conical reduction", &parts))
}

/// The neat slice maps to the fat one by an equivalence on homotopy categories.
pub fn fat_neat_check(p: &SimplicialMap, d: &SimplicialMap, trunc: usize) -> Result<Verdict> {
    if trunc < 2 {
        return Err(Error::Parameter("homotopy categories need the slices through degree 2".into()));
    }
    let neat = weighted_slice(p, d, trunc)?;
    let (fat, map) = fat_to_neat_slice_map(&neat)?;
    let ho_neat = ho_category(neat.set())?;
    let ho_fat = ho_category(fat.set())?;
    let functor = ho_neat.functor(&map, &ho_fat)?;
    Ok(is_equivalence(&functor))
}
