use std::sync::Arc;

use super::category::{CatFunctor, FinCategory, Mor, Obj};
use super::nerve::{nerve, nerve_map, nerve_truncated, Nerve};
use super::weight::{category_of_elements, SetWeight};
use crate::error::{Error, Result};
use crate::sset::{pullback, SimplicialMap, SimplicialSet};

/// A weighted cone: `legs[j][x] : apex → D(j)` for each `x ∈ W(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub apex: Obj,
    pub legs: Vec<Vec<Mor>>,
}

/// The category of `W`-weighted cones over `D`, with the cone of each object.
pub struct ConeCategory {
    pub category: FinCategory,
    pub cones: Vec<Cone>,
}

impl ConeCategory {
    pub fn terminal(&self) -> Option<&Cone> {
        self.category.terminal_object().map(|t| &self.cones[t])
    }
}

fn cones_at(w: &SetWeight, d: &CatFunctor, apex: Obj) -> Vec<Cone> {
    let (j, c) = (&w.shape, &d.target);
    let slots: Vec<(Obj, usize)> = (0..j.object_count())
        .flat_map(|o| (0..w.values[o].len()).map(move |x| (o, x)))
        .collect();
    let mut legs: Vec<Vec<Option<Mor>>> = (0..j.object_count()).map(|o| vec![None; w.values[o].len()]).collect();
    let mut out = Vec::new();
    fn go(
        w: &SetWeight,
        d: &CatFunctor,
        apex: Obj,
        slots: &[(Obj, usize)],
        k: usize,
        legs: &mut Vec<Vec<Option<Mor>>>,
        out: &mut Vec<Cone>,
    ) {
        let (j, c) = (&w.shape, &d.target);
        if k == slots.len() {
            let legs = legs.iter().map(|v| v.iter().map(|m| m.expect("complete")).collect()).collect();
            out.push(Cone { apex, legs });
            return;
        }
        let (o, x) = slots[k];
        for leg in c.hom(apex, d.objects[o]) {
            legs[o][x] = Some(leg);
            let natural = (0..j.morphism_count()).all(|f| {
                let (a, b) = (j.dom(f), j.cod(f));
                (0..w.values[a].len()).all(|y| match (legs[a][y], legs[b][w.apply(f, y)]) {
                    (Some(l), Some(m)) => c.compose(d.morphisms[f], l) == m,
                    _ => true,
                })
            });
            if natural {
                go(w, d, apex, slots, k + 1, legs, out);
            }
        }
        legs[o][x] = None;
    }
    if c.object_count() > 0 {
        go(w, d, apex, &slots, 0, &mut legs, &mut out);
    }
    out
}

/// Objects are `(A, λ)` with `λ : W ⇒ Hom(A, D-)`; arrows are arrows of `C` compatible with the legs.
pub fn weighted_cone_category(w: &SetWeight, d: &CatFunctor) -> Result<ConeCategory> {
    if !Arc::ptr_eq(&w.shape, &d.source) {
        return Err(Error::Composition("weight and diagram have different shapes".into()));
    }
    let c = &d.target;
    let cones: Vec<Cone> = (0..c.object_count()).flat_map(|a| cones_at(w, d, a)).collect();
    let name = |k: usize| {
        let cone = &cones[k];
        let legs: Vec<String> = cone
            .legs
            .iter()
            .enumerate()
            .flat_map(|(o, ls)| {
                ls.iter().enumerate().map(move |(x, &l)| {
                    format!("{}.{}={}", w.shape.object_name(o), w.values[o][x], c.morphism_name(l))
                })
            })
            .collect();
        format!("{}[{}]", c.object_name(cone.apex), legs.join(","))
    };
    let names: Vec<String> = (0..cones.len()).map(name).collect();
    let mut arrows: Vec<(Mor, usize, usize)> = Vec::new();
    for (k1, c1) in cones.iter().enumerate() {
        for (k2, c2) in cones.iter().enumerate() {
            for h in c.hom(c1.apex, c2.apex) {
                let compatible = c2.legs.iter().zip(&c1.legs).all(|(l2, l1)| {
                    l2.iter().zip(l1).all(|(&m2, &m1)| c.compose(m2, h) == m1)
                });
                if compatible && !(k1 == k2 && c.is_identity(h)) {
                    arrows.push((h, k1, k2));
                }
            }
        }
    }
    let arrow_name = |&(h, k1, k2): &(Mor, usize, usize)| format!("{}:{k1}→{k2}", c.morphism_name(h));
    let morphisms: Vec<(String, String, String)> =
        arrows.iter().map(|a| (arrow_name(a), names[a.1].clone(), names[a.2].clone())).collect();
    let mut compose = Vec::new();
    for a in &arrows {
        for b in &arrows {
            if a.2 == b.1 {
                let h = c.compose(b.0, a.0);
                let gf = if a.1 == b.2 && c.is_identity(h) {
                    format!("id_{}", names[a.1])
                } else {
                    arrow_name(&(h, a.1, b.2))
                };
                compose.push((arrow_name(b), arrow_name(a), gf));
            }
        }
    }
    let category = FinCategory::from_parts(names, morphisms, compose)?;
    Ok(ConeCategory { category, cones })
}

/// The terminal weighted cone, if there is one.
pub fn weighted_limit(w: &SetWeight, d: &CatFunctor) -> Result<Option<Cone>> {
    Ok(weighted_cone_category(w, d)?.terminal().cloned())
}

/// The limit of `D ∘ P` over the category of elements, rewritten as a weighted cone.
pub fn weighted_limit_via_elements(w: &SetWeight, d: &CatFunctor) -> Result<Option<Cone>> {
    let p = category_of_elements(w)?;
    let dp = p.then(d)?;
    let ordinary = weighted_cone_category(&SetWeight::terminal(&p.source), &dp)?;
    let Some(cone) = ordinary.terminal() else {
        return Ok(None);
    };
    let mut legs: Vec<Vec<Mor>> = w.values.iter().map(|v| Vec::with_capacity(v.len())).collect();
    for (e, &j) in p.objects.iter().enumerate() {
        legs[j].push(cone.legs[e][0]);
    }
    Ok(Some(Cone { apex: cone.apex, legs }))
}

/// Natural transformations `W ⇒ D` for a diagram of finite sets.
pub fn weighted_limit_in_finset(w: &SetWeight, d: &SetWeight) -> Result<Vec<Vec<Vec<usize>>>> {
    if !Arc::ptr_eq(&w.shape, &d.shape) {
        return Err(Error::Composition("weight and diagram have different shapes".into()));
    }
    let j = &w.shape;
    let slots: Vec<(Obj, usize)> = (0..j.object_count())
        .flat_map(|o| (0..w.values[o].len()).map(move |x| (o, x)))
        .collect();
    let mut assign: Vec<Vec<Option<usize>>> = w.values.iter().map(|v| vec![None; v.len()]).collect();
    let mut out = Vec::new();
    fn go(
        w: &SetWeight,
        d: &SetWeight,
        slots: &[(Obj, usize)],
        k: usize,
        assign: &mut Vec<Vec<Option<usize>>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == slots.len() {
            out.push(assign.iter().map(|v| v.iter().map(|y| y.expect("complete")).collect()).collect());
            return;
        }
        let j = &w.shape;
        let (o, x) = slots[k];
        for y in 0..d.values[o].len() {
            assign[o][x] = Some(y);
            let natural = (0..j.morphism_count()).all(|f| {
                let (a, b) = (j.dom(f), j.cod(f));
                (0..w.values[a].len()).all(|z| match (assign[a][z], assign[b][w.apply(f, z)]) {
                    (Some(u), Some(v)) => d.apply(f, u) == v,
                    _ => true,
                })
            });
            if natural {
                go(w, d, slots, k + 1, assign, out);
            }
        }
        assign[o][x] = None;
    }
    go(w, d, &slots, 0, &mut assign, &mut out);
    Ok(out)
}

/// `J̃ ×_{NJ} N(J/j)` for `p : J̃ → NJ`.
pub fn rectify(p: &SimplicialMap, base: &Nerve, j: Obj) -> Result<Arc<SimplicialSet>> {
    if !Arc::ptr_eq(&p.target, &base.set) {
        return Err(Error::Structure("the weight does not map into the given nerve".into()));
    }
    let forget = base.category.slice_over(j)?;
    let slice = match base.set.truncation() {
        Some(t) => nerve_truncated(&forget.source, t)?,
        None => nerve(&forget.source)?,
    };
    let n = nerve_map(&forget, &slice, base)?;
    Ok(pullback(p, &n)?.set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{horn, is_isomorphic, standard_simplex};

    /// The subsets of `{x, y}` ordered by inclusion.
    fn boolean_lattice() -> Arc<FinCategory> {
        let names = ["∅", "x", "y", "xy"];
        let bits = [0u8, 1, 2, 3];
        Arc::new(FinCategory::poset(&names, |a, b| bits[a] & !bits[b] == 0).unwrap())
    }

    fn cospan_diagram(c: &Arc<FinCategory>) -> CatFunctor {
        let j = Arc::new(FinCategory::cospan());
        let (x, y, xy) = (c.find_object("x").unwrap(), c.find_object("y").unwrap(), c.find_object("xy").unwrap());
        let f = c.find_morphism("x≤xy").unwrap();
        let g = c.find_morphism("y≤xy").unwrap();
        CatFunctor::new(j, c.clone(), vec![x, xy, y], vec![x, xy, y, f, g]).unwrap()
    }

    fn two_leg_weight(j: &Arc<FinCategory>) -> SetWeight {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        SetWeight::new(j.clone(), vec![s(&["0"]), s(&["0", "1"]), s(&["1"])], vec![vec![0], vec![1]]).unwrap()
    }

    #[test]
    fn two_leg_weight_gives_the_product() {
        let c = boolean_lattice();
        let d = cospan_diagram(&c);
        let w = two_leg_weight(&d.source);
        let lim = weighted_limit(&w, &d).unwrap().unwrap();
        assert_eq!(c.object_name(lim.apex), "∅");
        assert_eq!(weighted_limit_via_elements(&w, &d).unwrap(), Some(lim));
    }

    #[test]
    fn terminal_weight_gives_the_pullback() {
        let c = boolean_lattice();
        let d = cospan_diagram(&c);
        let w = SetWeight::terminal(&d.source);
        let lim = weighted_limit(&w, &d).unwrap().unwrap();
        assert_eq!(c.object_name(lim.apex), "∅");
        assert_eq!(weighted_limit_via_elements(&w, &d).unwrap(), Some(lim));
    }

    #[test]
    fn empty_weight_gives_the_terminal_object() {
        let c = boolean_lattice();
        let d = cospan_diagram(&c);
        let w = SetWeight::empty(&d.source);
        let cat = weighted_cone_category(&w, &d).unwrap();
        assert_eq!(cat.category.object_count(), 4);
        let lim = weighted_limit(&w, &d).unwrap().unwrap();
        assert_eq!(c.object_name(lim.apex), "xy");
    }

    #[test]
    fn representable_weight_is_evaluation() {
        let j = Arc::new(FinCategory::cospan());
        let d = two_leg_weight(&j);
        for o in 0..3 {
            let w = SetWeight::representable(&j, o);
            assert_eq!(weighted_limit_in_finset(&w, &d).unwrap().len(), d.values[o].len());
        }
        assert_eq!(weighted_limit_in_finset(&SetWeight::empty(&j), &d).unwrap().len(), 1);
    }

    #[test]
    fn rectified_identity_is_the_slice_nerve() {
        let g = Arc::new(FinCategory::cospan());
        let ng = nerve(&g).unwrap();
        let id = SimplicialMap::identity(&ng.set);
        let at_b = rectify(&id, &ng, 1).unwrap();
        assert!(is_isomorphic(&at_b, &Arc::new(horn(2, 2).unwrap())).unwrap().is_some());
        let at_a = rectify(&id, &ng, 0).unwrap();
        assert!(is_isomorphic(&at_a, &Arc::new(standard_simplex(0))).unwrap().is_some());
    }
}
