use std::sync::Arc;

use super::end::{weighted_end, WeightedEnd};
use super::functor::{SSetDiagram, SSetFunctor, SSetWeight};
use crate::error::{Error, Result};
use crate::fincat::{nerve, FinCategory};
use crate::necklaces::cofibrant_weight;
use crate::sset::{horn, is_isomorphic, point, standard_simplex, SimplicialMap, SimplicialSet};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightChoice {
    /// Values `(Δ[0], Λ²[2], Δ[0])`, computed from necklaces.
    CospanCofibrant,
    /// Values `(Δ[0], Δ[1], Δ[0])` with the two endpoint inclusions.
    Comma,
}

/// `{0} ↪ Δ[1] ↩ {1}` on the cospan `a → b ← c`.
pub fn comma_weight(shape: &Arc<FinCategory>) -> Result<SSetWeight> {
    let pt = Arc::new(point("*"));
    let pt2 = Arc::new(point("*"));
    let interval = Arc::new(standard_simplex(1));
    let f = SimplicialMap::constant(&pt, &interval, 0);
    let g = SimplicialMap::constant(&pt2, &interval, 1);
    SSetFunctor::new(shape.clone(), vec![pt, interval, pt2], vec![f, g])
}

/// The necklace weight of the cospan, with the check that its values are `(Δ[0], Λ²[2], Δ[0])`.
pub fn cospan_cofibrant_weight(shape: &Arc<FinCategory>) -> Result<(SSetWeight, Verdict)> {
    let n = nerve(shape)?;
    // Values are at most 1-dimensional, so degree 2 sees all of them.
    let bound = 2;
    let cof = cofibrant_weight(&SimplicialMap::identity(&n.set), bound)?;
    let values: Vec<Arc<SimplicialSet>> = (0..shape.object_count())
        .map(|o| {
            let m = cof.value(n.vertex(o)).expect("one value per vertex");
            if !m.set.generators(bound).is_empty() {
                return Err(Error::Structure(format!("W({}) reaches degree {bound}", shape.object_name(o))));
            }
            Ok(Arc::new(m.set.skeleton(bound).with_truncation(None)))
        })
        .collect::<Result<_>>()?;
    let arrows = (shape.object_count()..shape.morphism_count())
        .map(|f| {
            let edge = n.simplex(shape.dom(f), &[f]).base;
            let (_, act) = cof.actions.iter().find(|(e, _)| *e == edge).expect("one action per edge");
            SimplicialMap::new(values[shape.dom(f)].clone(), values[shape.cod(f)].clone(), act.images.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let w = SSetFunctor::new(shape.clone(), values, arrows)?;
    let pt = Arc::new(standard_simplex(0));
    let h = Arc::new(horn(2, 2)?);
    let parts: Vec<Verdict> = ["a", "b", "c"]
        .iter()
        .map(|&name| {
            let o = shape.find_object(name).expect("cospan object");
            let want = if name == "b" { &h } else { &pt };
            let iso = is_isomorphic(&w.values[o], want)?.is_some();
            Ok(Verdict::new(
                format!("W({name}) ≅ {}", if name == "b" { "Λ²[2]" } else { "Δ[0]" }),
                iso,
                format!("f-vector {:?}", w.values[o].f_vector()),
            ))
        })
        .collect::<Result<_>>()?;
    Ok((w, Verdict::all("cofibrant cospan weight", &parts)))
}

pub struct HomotopyPullback {
    pub end: WeightedEnd,
    pub weight: SSetWeight,
    pub diagram: SSetDiagram,
    pub choice: WeightChoice,
    /// Only for the cofibrant choice.
    pub weight_check: Option<Verdict>,
}

/// The end of `A → B ← C` against the chosen weight. No Kan condition is checked on the inputs.
pub fn homotopy_pullback(f: &SimplicialMap, g: &SimplicialMap, choice: WeightChoice, trunc: usize) -> Result<HomotopyPullback> {
    if !Arc::ptr_eq(&f.target, &g.target) {
        return Err(Error::Composition("the two legs have different targets".into()));
    }
    let shape = Arc::new(FinCategory::cospan());
    let diagram =
        SSetFunctor::new(shape.clone(), vec![f.source.clone(), f.target.clone(), g.source.clone()], vec![f.clone(), g.clone()])?;
    let (weight, weight_check) = match choice {
        WeightChoice::Comma => (comma_weight(&shape)?, None),
        WeightChoice::CospanCofibrant => {
            let (w, v) = cospan_cofibrant_weight(&shape)?;
            (w, Some(v))
        }
    };
    let end = weighted_end(&weight, &diagram, trunc)?;
    Ok(HomotopyPullback { end, weight, diagram, choice, weight_check })
}
