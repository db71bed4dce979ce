//! Simplicial sets whose `n`-simplices are maps out of a cosimplicial object:
//! exponentials here, weighted slices elsewhere.

use std::collections::HashMap;
use std::sync::Arc;

use super::enumerate::{enumerate_maps, enumerate_maps_under};
use super::levels::from_levels;
use super::map::SimplicialMap;
use super::product::{product, product_map, Product};
use super::set::SimplicialSet;
use super::simplex::{codegeneracy, coface, Gen, Simplex};
use super::standard::{simplex_by_vertices, standard_map, standard_simplex};
use crate::error::{Error, Result};

/// Objects `C_0..C_N` with the maps induced by cofaces and codegeneracies.
pub struct Cosimplicial {
    pub objects: Vec<Arc<SimplicialSet>>,
    /// `cofaces[n][i] : C_{n-1} → C_n`, empty for `n = 0`.
    pub cofaces: Vec<Vec<SimplicialMap>>,
    /// `codegens[n][i] : C_{n+1} → C_n`, empty for `n = N`.
    pub codegens: Vec<Vec<SimplicialMap>>,
}

impl Cosimplicial {
    /// `induce(k, n, θ)` must return the map `C_k → C_n` for `θ : [k] → [n]`.
    pub fn new(
        top: usize,
        mut object: impl FnMut(usize) -> Result<Arc<SimplicialSet>>,
        mut induce: impl FnMut(usize, usize, &[u8], &Arc<SimplicialSet>, &Arc<SimplicialSet>) -> Result<SimplicialMap>,
    ) -> Result<Self> {
        let objects: Vec<Arc<SimplicialSet>> = (0..=top).map(&mut object).collect::<Result<_>>()?;
        let mut cofaces = vec![Vec::new()];
        let mut codegens = Vec::new();
        for n in 1..=top {
            let maps = (0..=n)
                .map(|i| induce(n - 1, n, &coface(n, i), &objects[n - 1], &objects[n]))
                .collect::<Result<Vec<_>>>()?;
            cofaces.push(maps);
        }
        for n in 0..=top {
            if n == top {
                codegens.push(Vec::new());
                continue;
            }
            let maps = (0..=n)
                .map(|i| induce(n + 1, n, &codegeneracy(n, i), &objects[n + 1], &objects[n]))
                .collect::<Result<Vec<_>>>()?;
            codegens.push(maps);
        }
        Ok(Cosimplicial { objects, cofaces, codegens })
    }

    pub fn top(&self) -> usize {
        self.objects.len() - 1
    }
}

/// Simplicial set of maps `C_n → Q`, optionally under a fixed restriction to a shape `J`.
pub struct HomLevels {
    pub set: Arc<SimplicialSet>,
    pub cosimplicial: Cosimplicial,
    pub target: Arc<SimplicialSet>,
    pub elements: Vec<Vec<SimplicialMap>>,
    pub normal: Vec<Vec<Simplex>>,
    pub origin: Vec<(usize, usize)>,
    index: Vec<HashMap<Vec<Simplex>, usize>>,
}

/// Restriction data for slices: `J → C_n` for each level, and the diagram `J → Q`.
pub struct Under<'a> {
    pub shape_maps: &'a [SimplicialMap],
    pub diagram: &'a SimplicialMap,
}

pub fn hom_levels(
    cos: Cosimplicial,
    target: &Arc<SimplicialSet>,
    under: Option<Under<'_>>,
    name: impl Fn(usize, &SimplicialMap) -> String,
) -> Result<HomLevels> {
    let top = cos.top();
    let mut elements = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let maps = match &under {
            Some(u) => enumerate_maps_under(&u.shape_maps[n], u.diagram)?,
            None => enumerate_maps(&cos.objects[n], target)?,
        };
        elements.push(maps);
    }
    let index: Vec<HashMap<Vec<Simplex>, usize>> = elements
        .iter()
        .map(|lv: &Vec<SimplicialMap>| lv.iter().enumerate().map(|(k, m)| (m.images.clone(), k)).collect())
        .collect();
    let keys: Vec<Vec<Vec<Simplex>>> =
        elements.iter().map(|lv| lv.iter().map(|m| m.images.clone()).collect()).collect();
    let pre = |along: &SimplicialMap, images: &Vec<Simplex>| -> Vec<Simplex> {
        along.images.iter().map(|s| target.apply(&images[s.base], &s.surj)).collect()
    };
    let lv = from_levels(
        &keys,
        |n, i, e| pre(&cos.cofaces[n][i], e),
        |n, i, e| pre(&cos.codegens[n][i], e),
        |n, e| name(n, &elements[n][index[n][e]]),
        Some(top),
    )?;
    Ok(HomLevels {
        set: Arc::new(lv.set),
        cosimplicial: cos,
        target: target.clone(),
        elements,
        normal: lv.normal,
        origin: lv.origin,
        index,
    })
}

impl HomLevels {
    pub fn top(&self) -> usize {
        self.cosimplicial.top()
    }

    /// The simplex represented by a map `C_n → Q`, if it is one of the listed elements.
    pub fn simplex_of(&self, n: usize, images: &[Simplex]) -> Option<Simplex> {
        self.index.get(n)?.get(images).map(|&k| self.normal[n][k].clone())
    }

    /// The map `C_n → Q` underlying a generator.
    pub fn element(&self, g: Gen) -> &SimplicialMap {
        let (n, k) = self.origin[g];
        &self.elements[n][k]
    }

    /// Precomposition with maps `D_n → C_n`, as a simplicial map into `other`.
    pub fn precompose(&self, other: &HomLevels, family: &[SimplicialMap]) -> Result<SimplicialMap> {
        if family.len() <= self.top().min(other.top()) {
            return Err(Error::Parameter("precomposition family is too short".into()));
        }
        let mut images = Vec::with_capacity(self.set.len());
        for g in 0..self.set.len() {
            let n = self.origin[g].0;
            if n > other.top() {
                return Err(Error::Parameter("target of precomposition is truncated lower".into()));
            }
            let phi = self.element(g);
            let composed: Vec<Simplex> = family[n].images.iter().map(|s| phi.apply(s)).collect();
            let s = other.simplex_of(n, &composed).ok_or_else(|| {
                Error::Structure("precomposed map is not a simplex of the target".into())
            })?;
            images.push(s);
        }
        SimplicialMap::new(self.set.clone(), other.set.clone(), images)
    }

    /// A map out of this set defined on the underlying maps of generators.
    pub fn map_to(
        &self,
        target: &Arc<SimplicialSet>,
        f: impl Fn(usize, &SimplicialMap) -> Simplex,
    ) -> Result<SimplicialMap> {
        let images = (0..self.set.len())
            .map(|g| f(self.origin[g].0, self.element(g)))
            .collect();
        SimplicialMap::new(self.set.clone(), target.clone(), images)
    }
}

/// Default simplex name: the sorted list of generator images.
pub fn serialize_map(m: &SimplicialMap, skip: impl Fn(Gen) -> bool) -> String {
    let mut pairs: Vec<(String, String)> = (0..m.images.len())
        .filter(|&g| !skip(g))
        .map(|g| (m.source.name(g).to_string(), m.target.show(&m.images[g])))
        .collect();
    pairs.sort();
    let body: Vec<String> = pairs.into_iter().map(|(a, b)| format!("{a}={b}")).collect();
    format!("[{}]", body.join(";"))
}

/// `Q^K` up to level `trunc`, with the products `Δ[n] × K` it was built from.
pub struct Exponential {
    pub hom: HomLevels,
    pub products: Vec<Product>,
    pub simplices: Vec<Arc<SimplicialSet>>,
}

pub fn exponential(q: &Arc<SimplicialSet>, k: &Arc<SimplicialSet>, trunc: usize) -> Result<Exponential> {
    let simplices: Vec<Arc<SimplicialSet>> = (0..=trunc).map(|n| Arc::new(standard_simplex(n))).collect();
    let products: Vec<Product> =
        simplices.iter().map(|d| product(d, k)).collect::<Result<Vec<_>>>()?;
    let id_k = SimplicialMap::identity(k);
    let cos = Cosimplicial::new(
        trunc,
        |n| Ok(products[n].set.clone()),
        |a, b, theta, _, _| {
            let u = standard_map(&simplices[a], &simplices[b], theta);
            product_map(&products[a], &products[b], &u, &id_k)
        },
    )?;
    let hom = hom_levels(cos, q, None, |_, m| serialize_map(m, |_| false))?;
    Ok(Exponential { hom, products, simplices })
}

impl Exponential {
    pub fn set(&self) -> &Arc<SimplicialSet> {
        &self.hom.set
    }

    /// Restriction along `K' → K`, i.e. the map `Q^K → Q^{K'}`.
    pub fn restrict(&self, other: &Exponential, along: &SimplicialMap) -> Result<SimplicialMap> {
        let family = (0..=self.hom.top().min(other.hom.top()))
            .map(|n| {
                let id_other = SimplicialMap {
                    target: self.simplices[n].clone(),
                    ..SimplicialMap::identity(&other.simplices[n])
                };
                product_map(&other.products[n], &self.products[n], &id_other, along)
            })
            .collect::<Result<Vec<_>>>()?;
        self.hom.precompose(&other.hom, &family)
    }

    /// Evaluation at a vertex `v` of `K`: the map `Q^K → Q`.
    pub fn evaluate(&self, v: Gen) -> Result<SimplicialMap> {
        let q = self.hom.target.clone();
        self.hom.map_to(&q, |n, phi| {
            let top = simplex_by_vertices(&self.simplices[n], &(0..=n as u8).collect::<Vec<_>>());
            let z = self.products[n].pair(&top, &Simplex { base: v, surj: vec![0; n + 1] });
            phi.apply(&z)
        })
    }

    /// The constant-map inclusion of the skeleton `sk_N Q → Q^K`.
    pub fn diagonal(&self) -> Result<SimplicialMap> {
        let q = &self.hom.target;
        let sk = Arc::new(q.skeleton(self.hom.top()));
        let images = (0..sk.len())
            .map(|g| {
                let x = q.gen(q.find(sk.name(g)).expect("skeleton keeps names"));
                let n = x.dim();
                let p = &self.products[n];
                let images: Vec<Simplex> = (0..p.set.len())
                    .map(|z| {
                        let theta: Vec<u8> = self.simplices[n]
                            .vertex_list(p.left.image(z))
                            .into_iter()
                            .map(|v| v as u8)
                            .collect();
                        q.apply(&x, &theta)
                    })
                    .collect();
                self.hom
                    .simplex_of(n, &images)
                    .ok_or_else(|| Error::Structure("constant map missing".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(sk, self.hom.set.clone(), images)
    }
}
