use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Obj};
use crate::sset::{SimplicialMap, SimplicialSet};

/// A functor from a finite category to simplicial sets.
#[derive(Clone)]
pub struct SSetFunctor {
    pub shape: Arc<FinCategory>,
    pub values: Vec<Arc<SimplicialSet>>,
    /// One map per morphism, identities included, in morphism order.
    pub maps: Vec<SimplicialMap>,
}

pub type SSetWeight = SSetFunctor;
pub type SSetDiagram = SSetFunctor;

impl SSetFunctor {
    /// Build from maps on the non-identity arrows, in morphism order.
    pub fn new(shape: Arc<FinCategory>, values: Vec<Arc<SimplicialSet>>, arrows: Vec<SimplicialMap>) -> Result<Self> {
        let no = shape.object_count();
        if values.len() != no {
            return Err(Error::Structure("functor needs one value per object".into()));
        }
        if arrows.len() != shape.morphism_count() - no {
            return Err(Error::Structure("functor needs one map per non-identity arrow".into()));
        }
        let mut maps: Vec<SimplicialMap> = values.iter().map(SimplicialMap::identity).collect();
        maps.extend(arrows);
        let f = SSetFunctor { shape, values, maps };
        f.validate()?;
        Ok(f)
    }

    /// The functor constant at `x`.
    pub fn constant(shape: &Arc<FinCategory>, x: &Arc<SimplicialSet>) -> Self {
        SSetFunctor {
            shape: shape.clone(),
            values: vec![x.clone(); shape.object_count()],
            maps: vec![SimplicialMap::identity(x); shape.morphism_count()],
        }
    }

    pub fn value(&self, j: Obj) -> &Arc<SimplicialSet> {
        &self.values[j]
    }

    pub fn map(&self, f: Mor) -> &SimplicialMap {
        &self.maps[f]
    }

    pub fn validate(&self) -> Result<()> {
        let c = &self.shape;
        for f in 0..c.morphism_count() {
            let m = &self.maps[f];
            if !Arc::ptr_eq(&m.source, &self.values[c.dom(f)]) || !Arc::ptr_eq(&m.target, &self.values[c.cod(f)]) {
                return Err(Error::Structure(format!("the map at {} has the wrong endpoints", c.morphism_name(f))));
            }
            m.validate()?;
        }
        for o in 0..c.object_count() {
            if self.maps[c.identity(o)] != SimplicialMap::identity(&self.values[o]) {
                return Err(Error::Structure(format!("id_{} is not sent to an identity", c.object_name(o))));
            }
        }
        for f in 0..c.morphism_count() {
            for g in c.out_of(c.cod(f)) {
                let gf = self.maps[f].then(&self.maps[g])?;
                if gf.images != self.maps[c.compose(g, f)].images {
                    return Err(Error::Structure(format!(
                        "{} ∘ {} is not preserved",
                        c.morphism_name(g),
                        c.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }
}
