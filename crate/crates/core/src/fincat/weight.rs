use std::sync::Arc;

use super::category::{CatFunctor, FinCategory, Mor, Obj};
use crate::error::{Error, Result};

/// A functor `J → FinSet`: named elements per object and a function per arrow.
#[derive(Clone, Debug)]
pub struct SetWeight {
    pub shape: Arc<FinCategory>,
    pub values: Vec<Vec<String>>,
    /// `actions[f][x]` is the index of `W(f)(x)` in `values[cod f]`.
    pub actions: Vec<Vec<usize>>,
}

impl SetWeight {
    /// Build from actions on the non-identity arrows, in morphism order.
    pub fn new(shape: Arc<FinCategory>, values: Vec<Vec<String>>, actions: Vec<Vec<usize>>) -> Result<Self> {
        let no = shape.object_count();
        if values.len() != no {
            return Err(Error::Structure("weight needs one value per object".into()));
        }
        let mut all: Vec<Vec<usize>> = (0..no).map(|o| (0..values[o].len()).collect()).collect();
        if actions.len() != shape.morphism_count() - no {
            return Err(Error::Structure("weight needs one function per non-identity arrow".into()));
        }
        all.extend(actions);
        let w = SetWeight { shape, values, actions: all };
        w.validate()?;
        Ok(w)
    }

    /// The weight constant at a one-element set.
    pub fn terminal(shape: &Arc<FinCategory>) -> Self {
        SetWeight {
            shape: shape.clone(),
            values: vec![vec!["*".to_string()]; shape.object_count()],
            actions: vec![vec![0]; shape.morphism_count()],
        }
    }

    pub fn empty(shape: &Arc<FinCategory>) -> Self {
        SetWeight {
            shape: shape.clone(),
            values: vec![Vec::new(); shape.object_count()],
            actions: vec![Vec::new(); shape.morphism_count()],
        }
    }

    /// The representable `Hom(j, -)`.
    pub fn representable(shape: &Arc<FinCategory>, j: Obj) -> Self {
        let homs: Vec<Vec<Mor>> = (0..shape.object_count()).map(|b| shape.hom(j, b)).collect();
        let values = homs
            .iter()
            .map(|h| h.iter().map(|&f| shape.morphism_name(f).to_string()).collect())
            .collect();
        let actions = (0..shape.morphism_count())
            .map(|g| {
                let (a, b) = (shape.dom(g), shape.cod(g));
                homs[a]
                    .iter()
                    .map(|&f| homs[b].iter().position(|&h| h == shape.compose(g, f)).expect("closed"))
                    .collect()
            })
            .collect();
        SetWeight { shape: shape.clone(), values, actions }
    }

    pub fn apply(&self, f: Mor, x: usize) -> usize {
        self.actions[f][x]
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.shape;
        for f in 0..c.morphism_count() {
            let (a, b) = (c.dom(f), c.cod(f));
            if self.actions[f].len() != self.values[a].len()
                || self.actions[f].iter().any(|&y| y >= self.values[b].len())
            {
                return Err(Error::Structure(format!("W({}) is not a function", c.morphism_name(f))));
            }
            if c.is_identity(f) && self.actions[f].iter().enumerate().any(|(x, &y)| x != y) {
                return Err(Error::Structure(format!("W({}) is not the identity", c.morphism_name(f))));
            }
        }
        for f in 0..c.morphism_count() {
            for g in c.out_of(c.cod(f)) {
                let gf = c.compose(g, f);
                for x in 0..self.values[c.dom(f)].len() {
                    if self.apply(gf, x) != self.apply(g, self.apply(f, x)) {
                        return Err(Error::Structure(format!(
                            "W is not functorial at {} ∘ {}",
                            c.morphism_name(g),
                            c.morphism_name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Elementwise bijection to `other` commuting with the actions, if one exists.
    pub fn isomorphic(&self, other: &SetWeight) -> Option<Vec<Vec<usize>>> {
        let c = &self.shape;
        if c.object_count() != other.shape.object_count()
            || (0..c.object_count()).any(|o| self.values[o].len() != other.values[o].len())
        {
            return None;
        }
        let slots: Vec<(Obj, usize)> = (0..c.object_count())
            .flat_map(|o| (0..self.values[o].len()).map(move |x| (o, x)))
            .collect();
        let mut assign: Vec<Vec<Option<usize>>> =
            (0..c.object_count()).map(|o| vec![None; self.values[o].len()]).collect();
        fn go(w: &SetWeight, v: &SetWeight, slots: &[(Obj, usize)], k: usize, assign: &mut Vec<Vec<Option<usize>>>) -> bool {
            if k == slots.len() {
                return true;
            }
            let (o, x) = slots[k];
            for y in 0..v.values[o].len() {
                if assign[o].contains(&Some(y)) {
                    continue;
                }
                assign[o][x] = Some(y);
                let c = &w.shape;
                let ok = (0..c.morphism_count()).all(|f| {
                    let (a, b) = (c.dom(f), c.cod(f));
                    (0..w.values[a].len()).all(|x| match (assign[a][x], assign[b][w.apply(f, x)]) {
                        (Some(y), Some(z)) => v.apply(f, y) == z,
                        _ => true,
                    })
                });
                if ok && go(w, v, slots, k + 1, assign) {
                    return true;
                }
                assign[o][x] = None;
            }
            false
        }
        go(self, other, &slots, 0, &mut assign)
            .then(|| assign.into_iter().map(|v| v.into_iter().map(|y| y.expect("complete")).collect()).collect())
    }
}

/// `el(W)` with its projection; objects are named `j:x`, arrows `f@x`.
pub fn category_of_elements(w: &SetWeight) -> Result<CatFunctor> {
    let c = &w.shape;
    let obj_name = |j: Obj, x: usize| format!("{}:{}", c.object_name(j), w.values[j][x]);
    let mut objects = Vec::new();
    let mut obj_map = Vec::new();
    for j in 0..c.object_count() {
        for x in 0..w.values[j].len() {
            objects.push(obj_name(j, x));
            obj_map.push(j);
        }
    }
    let mut morphisms = Vec::new();
    let mut lifts: Vec<(Mor, usize)> = Vec::new();
    for f in c.object_count()..c.morphism_count() {
        let (a, b) = (c.dom(f), c.cod(f));
        for x in 0..w.values[a].len() {
            morphisms.push((
                format!("{}@{}", c.morphism_name(f), w.values[a][x]),
                obj_name(a, x),
                obj_name(b, w.apply(f, x)),
            ));
            lifts.push((f, x));
        }
    }
    let mut compose = Vec::new();
    for (k, &(f, x)) in lifts.iter().enumerate() {
        for (l, &(g, y)) in lifts.iter().enumerate() {
            if c.dom(g) == c.cod(f) && y == w.apply(f, x) {
                let gf = c.compose(g, f);
                let name = if c.is_identity(gf) {
                    format!("id_{}", obj_name(c.dom(f), x))
                } else {
                    format!("{}@{}", c.morphism_name(gf), w.values[c.dom(f)][x])
                };
                compose.push((morphisms[l].0.clone(), morphisms[k].0.clone(), name));
            }
        }
    }
    let el = Arc::new(FinCategory::from_parts(objects, morphisms, compose)?);
    let mut mor_map = obj_map.clone();
    mor_map.extend(lifts.iter().map(|&(f, _)| f));
    CatFunctor::new(el, c.clone(), obj_map, mor_map)
}

/// The weight of fibers of a discrete fibration.
pub fn fibers(p: &CatFunctor) -> Result<SetWeight> {
    p.check_discrete_fibration()?;
    let (s, t) = (&p.source, &p.target);
    let mut members: Vec<Vec<Obj>> = vec![Vec::new(); t.object_count()];
    for x in 0..s.object_count() {
        members[p.objects[x]].push(x);
    }
    let values = members
        .iter()
        .map(|m| m.iter().map(|&x| s.object_name(x).to_string()).collect())
        .collect();
    let actions = (0..t.morphism_count())
        .map(|f| {
            members[t.dom(f)]
                .iter()
                .map(|&x| {
                    let lift = s
                        .out_of(x)
                        .into_iter()
                        .find(|&g| p.morphisms[g] == f)
                        .expect("discrete fibration");
                    members[t.cod(f)].iter().position(|&y| y == s.cod(lift)).expect("fiber")
                })
                .collect()
        })
        .collect();
    Ok(SetWeight { shape: t.clone(), values, actions })
}
