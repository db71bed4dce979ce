//! Loaded documents resolved to library objects.
//!
//! Equal documents resolve to the same `Arc`, so a weight and a diagram written
//! against the same shape can be used together.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context};
use wlim_core::enriched::SSetFunctor;
use wlim_core::fincat::{category_of_elements, nerve, nerve_map, nerve_truncated, CatFunctor, FinCategory, Nerve, SetWeight};
use wlim_core::sset::{SimplicialMap, SimplicialSet};

use crate::doc::{map_images, parse, CategoryDoc, DiagramDoc, MapDoc, SSetDoc, SSetFunctorDoc, WeightDoc};

/// A weight `p : J̃ → J`, with the Set-valued functor it came from if any.
pub struct Weight {
    pub p: SimplicialMap,
    pub set: Option<SetWeight>,
}

/// A diagram `d : J → Q`, with the functor it came from if any.
pub struct Diagram {
    pub d: SimplicialMap,
    pub functor: Option<CatFunctor>,
}

pub struct Workspace {
    /// Nerves of looped categories are cut at this dimension.
    pub trunc: usize,
    sets: HashMap<String, Arc<SimplicialSet>>,
    categories: HashMap<String, Arc<FinCategory>>,
    nerves: Vec<Nerve>,
}

fn key<T: serde::Serialize>(doc: &T) -> String {
    let mut v = serde_json::to_value(doc).expect("documents serialize");
    if let Some(o) = v.as_object_mut() {
        o.remove("comment");
    }
    v.to_string()
}

pub fn read<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("in {}", path.display()))
}

impl Workspace {
    pub fn new(trunc: usize) -> Self {
        Workspace { trunc, sets: HashMap::new(), categories: HashMap::new(), nerves: Vec::new() }
    }

    pub fn sset(&mut self, doc: &SSetDoc) -> anyhow::Result<Arc<SimplicialSet>> {
        let k = key(doc);
        if let Some(x) = self.sets.get(&k) {
            return Ok(x.clone());
        }
        let x = Arc::new(doc.to_set()?);
        self.sets.insert(k, x.clone());
        Ok(x)
    }

    /// Registers a computed set unless an equal one is already known.
    fn intern(&mut self, x: &Arc<SimplicialSet>) {
        self.sets.entry(key(&SSetDoc::from_set(x))).or_insert_with(|| x.clone());
    }

    /// The known set equal to `x`, when it is a different `Arc`, as a renaming map into `x`.
    fn renaming(&self, x: &Arc<SimplicialSet>) -> anyhow::Result<Option<SimplicialMap>> {
        match self.sets.get(&key(&SSetDoc::from_set(x))) {
            Some(y) if !Arc::ptr_eq(x, y) => Ok(Some(SimplicialMap::by_names(y, x)?)),
            _ => Ok(None),
        }
    }

    pub fn category(&mut self, doc: &CategoryDoc) -> anyhow::Result<Arc<FinCategory>> {
        let k = key(doc);
        if let Some(c) = self.categories.get(&k) {
            return Ok(c.clone());
        }
        let c = Arc::new(doc.to_category()?);
        self.categories.insert(k, c.clone());
        Ok(c)
    }

    pub fn nerve(&mut self, c: &Arc<FinCategory>) -> anyhow::Result<Nerve> {
        if let Some(n) = self.nerves.iter().find(|n| Arc::ptr_eq(&n.category, c)) {
            return Ok(n.clone());
        }
        let n = match nerve(c) {
            Ok(n) => n,
            Err(_) => nerve_truncated(c, self.trunc)?,
        };
        self.intern(&n.set);
        self.nerves.push(n.clone());
        Ok(n)
    }

    pub fn map(&mut self, doc: &MapDoc) -> anyhow::Result<SimplicialMap> {
        let source = self.sset(&doc.source).context("in /source")?;
        let target = self.sset(&doc.target).context("in /target")?;
        map_images(&source, &target, &doc.images, "/images")
    }

    pub fn weight(&mut self, doc: &WeightDoc) -> anyhow::Result<Weight> {
        match doc {
            WeightDoc::Map(m) => Ok(Weight { p: self.map(m)?, set: None }),
            WeightDoc::Set(s) => {
                let shape = self.category(&s.shape).context("in /shape")?;
                let w = s.to_weight(&shape)?;
                let el = category_of_elements(&w)?;
                let elements = nerve(&el.source)?;
                let base = self.nerve(&shape)?;
                let mut p = nerve_map(&el, &elements, &base)?;
                if let Some(r) = self.renaming(&base.set)? {
                    p = p.then(&r.inverse()?)?;
                }
                Ok(Weight { p, set: Some(w) })
            }
        }
    }

    pub fn diagram(&mut self, doc: &DiagramDoc) -> anyhow::Result<Diagram> {
        match doc {
            DiagramDoc::Map(m) => Ok(Diagram { d: self.map(m)?, functor: None }),
            DiagramDoc::Functor(f) => {
                let source = self.category(&f.source).context("in /source")?;
                let target = self.category(&f.target).context("in /target")?;
                let functor = f.to_functor(&source, &target)?;
                let shape = self.nerve(&source)?;
                let q = self.nerve(&target)?;
                let mut d = nerve_map(&functor, &shape, &q)?;
                if let Some(r) = self.renaming(&shape.set)? {
                    d = r.then(&d)?;
                }
                Ok(Diagram { d, functor: Some(functor) })
            }
        }
    }

    pub fn sset_functor(&mut self, doc: &SSetFunctorDoc, shape: Option<&Arc<FinCategory>>) -> anyhow::Result<SSetFunctor> {
        let c = match shape {
            Some(c) => c.clone(),
            None => self.category(&doc.shape).context("in /shape")?,
        };
        let values = (0..c.object_count())
            .map(|o| {
                let name = c.object_name(o);
                let v = doc.values.get(name).with_context(|| format!("/values/{name}: missing value"))?;
                self.sset(v).with_context(|| format!("in /values/{name}"))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        let maps = (c.object_count()..c.morphism_count())
            .map(|f| {
                let name = c.morphism_name(f);
                let images = doc.maps.get(name).with_context(|| format!("/maps/{name}: missing map"))?;
                map_images(&values[c.dom(f)], &values[c.cod(f)], images, &format!("/maps/{name}"))
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(SSetFunctor::new(c, values, maps)?)
    }

    /// Checks that `p` and `d` share their shape.
    pub fn same_shape(p: &SimplicialMap, d: &SimplicialMap) -> anyhow::Result<()> {
        if !Arc::ptr_eq(&p.target, &d.source) {
            bail!("the weight's target and the diagram's source are different simplicial sets");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::{FunctorDoc, SetWeightDoc};
    use wlim_core::fixtures::{boolean_lattice, lattice_cospan, two_leg_weight};

    #[test]
    fn set_weight_and_functor_share_the_nerve() {
        let lattice = boolean_lattice();
        let d = lattice_cospan(&lattice);
        let w = two_leg_weight(&d.source);
        let mut ws = Workspace::new(2);
        let weight = ws.weight(&WeightDoc::Set(SetWeightDoc::from_weight(&w))).unwrap();
        let diagram = ws.diagram(&DiagramDoc::Functor(FunctorDoc::from_functor(&d))).unwrap();
        Workspace::same_shape(&weight.p, &diagram.d).unwrap();
    }

    #[test]
    fn map_diagram_resolves_against_a_nerve() {
        let lattice = boolean_lattice();
        let d = lattice_cospan(&lattice);
        let mut ws = Workspace::new(2);
        let shape = nerve(&d.source).unwrap();
        let q = nerve(&d.target).unwrap();
        let as_map = MapDoc::from_map(&nerve_map(&d, &shape, &q).unwrap());
        let diagram = ws.diagram(&DiagramDoc::Map(as_map)).unwrap();
        let w = two_leg_weight(&d.source);
        let weight = ws.weight(&WeightDoc::Set(SetWeightDoc::from_weight(&w))).unwrap();
        Workspace::same_shape(&weight.p, &diagram.d).unwrap();
    }
}
