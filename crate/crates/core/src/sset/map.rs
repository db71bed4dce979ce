use std::sync::Arc;

use super::set::SimplicialSet;
use super::simplex::{Gen, Simplex};
use crate::error::{Error, Result};

/// A simplicial map, stored as the images of the source generators.
#[derive(Clone)]
pub struct SimplicialMap {
    pub source: Arc<SimplicialSet>,
    pub target: Arc<SimplicialSet>,
    pub images: Vec<Simplex>,
}

impl std::fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<String> = (0..self.images.len())
            .map(|g| format!("{}↦{}", self.source.name(g), self.target.show(&self.images[g])))
            .collect();
        write!(f, "SimplicialMap[{}]", pairs.join(", "))
    }
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.source, &other.source)
            && Arc::ptr_eq(&self.target, &other.target)
            && self.images == other.images
    }
}

impl SimplicialMap {
    /// Build and validate.
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Simplex>,
    ) -> Result<Self> {
        let m = SimplicialMap { source, target, images };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(x: &Arc<SimplicialSet>) -> Self {
        let images = (0..x.len()).map(|g| x.gen(g)).collect();
        SimplicialMap { source: x.clone(), target: x.clone(), images }
    }

    /// The constant map at a vertex of the target.
    pub fn constant(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>, v: Gen) -> Self {
        let images = (0..source.len())
            .map(|g| Simplex { base: v, surj: vec![0; source.gen_dim(g) + 1] })
            .collect();
        SimplicialMap { source: source.clone(), target: target.clone(), images }
    }

    /// The unique map out of the empty set.
    pub fn from_empty(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>) -> Result<Self> {
        if !source.is_empty() {
            return Err(Error::Composition("source is not empty".into()));
        }
        Ok(SimplicialMap { source: source.clone(), target: target.clone(), images: Vec::new() })
    }

    /// The inclusion of a subset whose generators carry the same names as in `target`.
    pub fn by_names(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>) -> Result<Self> {
        let images = (0..source.len())
            .map(|g| {
                target
                    .find(source.name(g))
                    .map(|h| target.gen(h))
                    .ok_or_else(|| Error::Structure(format!("`{}` has no counterpart", source.name(g))))
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(source.clone(), target.clone(), images)
    }

    /// Image of an arbitrary simplex of the source.
    pub fn apply(&self, x: &Simplex) -> Simplex {
        self.target.apply(&self.images[x.base], &x.surj)
    }

    pub fn image(&self, g: Gen) -> &Simplex {
        &self.images[g]
    }

    pub fn vertex_image(&self, v: Gen) -> Gen {
        self.images[v].base
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::Composition("target and source differ".into()));
        }
        let images = self.images.iter().map(|x| other.apply(x)).collect();
        Ok(SimplicialMap { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// Checks dimensions and compatibility with every face of every generator.
    pub fn validate(&self) -> Result<()> {
        if self.images.len() != self.source.len() {
            return Err(Error::Structure("image list does not cover the source".into()));
        }
        for g in 0..self.source.len() {
            let y = &self.images[g];
            let ok_shape = y.base < self.target.len()
                && y.dim() == self.source.gen_dim(g)
                && y.base_dim() == self.target.gen_dim(y.base);
            if !ok_shape {
                return Err(Error::Structure(format!(
                    "image of `{}` has the wrong dimension",
                    self.source.name(g)
                )));
            }
            for (i, f) in self.source.faces(g).iter().enumerate() {
                if self.apply(f) != self.target.face(y, i) {
                    return Err(Error::Structure(format!(
                        "map does not commute with d_{i} on `{}`",
                        self.source.name(g)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Generators go to distinct generators.
    pub fn is_injective_on_generators(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for y in &self.images {
            if !y.is_nondegenerate() || seen[y.base] {
                return false;
            }
            seen[y.base] = true;
        }
        true
    }

    /// A bijection on generators, hence an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective_on_generators()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<SimplicialMap> {
        if !self.is_isomorphism() {
            return Err(Error::Structure("map is not an isomorphism".into()));
        }
        let mut images = vec![Simplex { base: 0, surj: Vec::new() }; self.target.len()];
        for (g, y) in self.images.iter().enumerate() {
            images[y.base] = self.source.gen(g);
        }
        Ok(SimplicialMap { source: self.target.clone(), target: self.source.clone(), images })
    }

    /// Canonical key for equality tests across maps with equal endpoints.
    pub fn key(&self) -> &[Simplex] {
        &self.images
    }
}

/// A vertex as a map from the point.
pub fn vertex_map(point: &Arc<SimplicialSet>, x: &Arc<SimplicialSet>, v: Gen) -> SimplicialMap {
    SimplicialMap::constant(point, x, v)
}
