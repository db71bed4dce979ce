use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Obj = usize;
pub type Mor = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// A finite category given by its full composition table.
///
/// Morphism `k < objects.len()` is the identity of object `k`.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    compose: Vec<Option<Mor>>,
    object_index: HashMap<String, Obj>,
    morphism_index: HashMap<String, Mor>,
}

impl FinCategory {
    /// `morphisms` are the non-identity arrows `(name, dom, cod)`; `compose` lists
    /// `(g, f, g∘f)` for every composable pair of them. Identities are named `id_X`.
    pub fn new(
        objects: &[&str],
        morphisms: &[(&str, &str, &str)],
        compose: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let morphisms: Vec<(String, String, String)> = morphisms
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect();
        let compose: Vec<(String, String, String)> = compose
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect();
        Self::from_parts(objects, morphisms, compose)
    }

    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        compose: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let mut object_index = HashMap::new();
        for (k, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), k).is_some() {
                return Err(Error::Structure(format!("duplicate object {o}")));
            }
        }
        let obj = |name: &str| {
            object_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Structure(format!("unknown object {name}")))
        };
        let mut mors: Vec<Morphism> = objects
            .iter()
            .enumerate()
            .map(|(k, o)| Morphism { name: format!("id_{o}"), dom: k, cod: k })
            .collect();
        for (name, d, c) in &morphisms {
            mors.push(Morphism { name: name.clone(), dom: obj(d)?, cod: obj(c)? });
        }
        let mut morphism_index = HashMap::new();
        for (k, m) in mors.iter().enumerate() {
            if morphism_index.insert(m.name.clone(), k).is_some() {
                return Err(Error::Structure(format!("duplicate morphism {}", m.name)));
            }
        }
        let nm = mors.len();
        let no = objects.len();
        let mut table = vec![None; nm * nm];
        for f in 0..nm {
            table[mors[f].cod * nm + f] = Some(f);
            table[f * nm + mors[f].dom] = Some(f);
        }
        let mor = |name: &str| {
            morphism_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Structure(format!("unknown morphism {name}")))
        };
        for (g, f, gf) in &compose {
            let (g, f, gf) = (mor(g)?, mor(f)?, mor(gf)?);
            if mors[f].cod != mors[g].dom {
                return Err(Error::Structure(format!(
                    "{} ∘ {} is not composable",
                    mors[g].name, mors[f].name
                )));
            }
            if mors[gf].dom != mors[f].dom || mors[gf].cod != mors[g].cod {
                return Err(Error::Structure(format!(
                    "{} ∘ {} has the wrong endpoints",
                    mors[g].name, mors[f].name
                )));
            }
            match table[g * nm + f] {
                Some(prev) if prev != gf => {
                    return Err(Error::Structure(format!(
                        "{} ∘ {} is defined twice",
                        mors[g].name, mors[f].name
                    )))
                }
                _ => table[g * nm + f] = Some(gf),
            }
        }
        for f in no..nm {
            for g in no..nm {
                if mors[f].cod == mors[g].dom && table[g * nm + f].is_none() {
                    return Err(Error::Structure(format!(
                        "composition table is missing {} ∘ {}",
                        mors[g].name, mors[f].name
                    )));
                }
            }
        }
        let c = FinCategory { objects, morphisms: mors, compose: table, object_index, morphism_index };
        c.check_associative()?;
        Ok(c)
    }

    fn check_associative(&self) -> Result<()> {
        let nm = self.morphisms.len();
        for f in 0..nm {
            for g in self.out_of(self.cod(f)) {
                for h in self.out_of(self.cod(g)) {
                    let a = self.compose(h, self.compose(g, f));
                    let b = self.compose(self.compose(h, g), f);
                    if a != b {
                        return Err(Error::Structure(format!(
                            "composition is not associative at ({}, {}, {})",
                            self.morphism_name(h),
                            self.morphism_name(g),
                            self.morphism_name(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The poset on `elements` with `a → b` whenever `leq(a, b)`; arrows are named `a≤b`.
    pub fn poset(elements: &[&str], leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = elements.len();
        let name = |a: usize, b: usize| format!("{}≤{}", elements[a], elements[b]);
        let mut morphisms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    if leq(b, a) {
                        return Err(Error::Structure("poset relation is not antisymmetric".into()));
                    }
                    morphisms.push((name(a, b), elements[a].to_string(), elements[b].to_string()));
                }
            }
        }
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a != b && b != c && leq(a, b) && leq(b, c) {
                        if !leq(a, c) {
                            return Err(Error::Structure("poset relation is not transitive".into()));
                        }
                        compose.push((name(b, c), name(a, b), name(a, c)));
                    }
                }
            }
        }
        Self::from_parts(elements.iter().map(|s| s.to_string()).collect(), morphisms, compose)
    }

    /// The ordinal `[n] = {0 < 1 < ... < n}`.
    pub fn ordinal(n: usize) -> Self {
        let names: Vec<String> = (0..=n).map(|k| k.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Self::poset(&refs, |a, b| a <= b).expect("ordinals are posets")
    }

    pub fn discrete(objects: &[&str]) -> Self {
        Self::new(objects, &[], &[]).expect("discrete categories are valid")
    }

    /// The cospan `a → b ← c`, with arrows `f : a → b` and `g : c → b`.
    pub fn cospan() -> Self {
        Self::new(&["a", "b", "c"], &[("f", "a", "b"), ("g", "c", "b")], &[]).expect("valid")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, o: Obj) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, f: Mor) -> &str {
        &self.morphisms[f].name
    }

    pub fn morphism(&self, f: Mor) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn find_object(&self, name: &str) -> Option<Obj> {
        self.object_index.get(name).copied()
    }

    pub fn find_morphism(&self, name: &str) -> Option<Mor> {
        self.morphism_index.get(name).copied()
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f].cod
    }

    pub fn identity(&self, o: Obj) -> Mor {
        o
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        f < self.objects.len()
    }

    /// `g ∘ f`; panics if the pair is not composable.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        let nm = self.morphisms.len();
        self.compose[g * nm + f].unwrap_or_else(|| {
            panic!("{} ∘ {} is not composable", self.morphism_name(g), self.morphism_name(f))
        })
    }

    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.compose[g * self.morphisms.len() + f]
    }

    pub fn hom(&self, a: Obj, b: Obj) -> Vec<Mor> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].dom == a && self.morphisms[f].cod == b)
            .collect()
    }

    pub fn out_of(&self, a: Obj) -> Vec<Mor> {
        (0..self.morphisms.len()).filter(|&f| self.morphisms[f].dom == a).collect()
    }

    /// The composition table as `(g, f, g∘f)` name triples over non-identity arrows.
    pub fn composition_triples(&self) -> Vec<(String, String, String)> {
        let nm = self.morphisms.len();
        let mut out = Vec::new();
        for f in self.objects.len()..nm {
            for g in self.objects.len()..nm {
                if let Some(gf) = self.try_compose(g, f) {
                    out.push((
                        self.morphism_name(g).to_string(),
                        self.morphism_name(f).to_string(),
                        self.morphism_name(gf).to_string(),
                    ));
                }
            }
        }
        out
    }

    /// The object with exactly one arrow from every object, if any.
    pub fn terminal_object(&self) -> Option<Obj> {
        (0..self.objects.len()).find(|&t| (0..self.objects.len()).all(|x| self.hom(x, t).len() == 1))
    }

    pub fn is_isomorphism(&self, f: Mor) -> bool {
        self.hom(self.cod(f), self.dom(f)).into_iter().any(|g| {
            self.is_identity(self.compose(g, f)) && self.is_identity(self.compose(f, g))
        })
    }

    /// The slice `C/j` with its forgetful functor; objects are the arrows into `j`.
    pub fn slice_over(self: &Arc<Self>, j: Obj) -> Result<CatFunctor> {
        let arrows: Vec<Mor> = (0..self.morphisms.len()).filter(|&f| self.cod(f) == j).collect();
        let objects: Vec<String> = arrows.iter().map(|&f| self.morphism_name(f).to_string()).collect();
        let mut morphisms = Vec::new();
        let mut underlying = Vec::new();
        let name = |h: Mor, x: Mor| format!("{}/{}", self.morphism_name(h), self.morphism_name(x));
        for &x in &arrows {
            for &y in &arrows {
                for h in self.hom(self.dom(x), self.dom(y)) {
                    if self.compose(y, h) == x && !(x == y && self.is_identity(h)) {
                        morphisms.push((name(h, x), self.morphism_name(x).to_string(), self.morphism_name(y).to_string()));
                        underlying.push(h);
                    }
                }
            }
        }
        let mut compose = Vec::new();
        for (a, &h1) in underlying.iter().enumerate() {
            for (b, &h2) in underlying.iter().enumerate() {
                if morphisms[a].2 == morphisms[b].1 {
                    let h = self.compose(h2, h1);
                    let x = &morphisms[a].1;
                    let composite = if morphisms[b].2 == *x && self.is_identity(h) {
                        format!("id_{x}")
                    } else {
                        let xm = self.find_morphism(x).expect("object of slice");
                        name(h, xm)
                    };
                    compose.push((morphisms[b].0.clone(), morphisms[a].0.clone(), composite));
                }
            }
        }
        let slice = Arc::new(Self::from_parts(objects, morphisms, compose)?);
        let obj_map: Vec<Obj> = arrows.iter().map(|&f| self.dom(f)).collect();
        let mut mor_map: Vec<Mor> = obj_map.clone();
        mor_map.extend(underlying);
        CatFunctor::new(slice, self.clone(), obj_map, mor_map)
    }

    pub fn opposite(&self) -> Self {
        let no = self.objects.len();
        let morphisms = self.morphisms[no..]
            .iter()
            .map(|m| (m.name.clone(), self.objects[m.cod].clone(), self.objects[m.dom].clone()))
            .collect();
        let compose = self
            .composition_triples()
            .into_iter()
            .map(|(g, f, gf)| (f, g, gf))
            .collect();
        Self::from_parts(self.objects.clone(), morphisms, compose).expect("opposite of a valid category")
    }
}

/// A functor between finite categories.
#[derive(Clone, Debug)]
pub struct CatFunctor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub objects: Vec<Obj>,
    pub morphisms: Vec<Mor>,
}

impl CatFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: Vec<Obj>,
        morphisms: Vec<Mor>,
    ) -> Result<Self> {
        let f = CatFunctor { source, target, objects, morphisms };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        CatFunctor {
            source: c.clone(),
            target: c.clone(),
            objects: (0..c.object_count()).collect(),
            morphisms: (0..c.morphism_count()).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.objects.len() != s.object_count() || self.morphisms.len() != s.morphism_count() {
            return Err(Error::Structure("functor data has the wrong size".into()));
        }
        for f in 0..s.morphism_count() {
            let m = self.morphisms[f];
            if t.dom(m) != self.objects[s.dom(f)] || t.cod(m) != self.objects[s.cod(f)] {
                return Err(Error::Structure(format!("functor does not preserve endpoints of {}", s.morphism_name(f))));
            }
        }
        for o in 0..s.object_count() {
            if self.morphisms[s.identity(o)] != t.identity(self.objects[o]) {
                return Err(Error::Structure(format!("functor does not preserve id_{}", s.object_name(o))));
            }
        }
        for f in 0..s.morphism_count() {
            for g in s.out_of(s.cod(f)) {
                if self.morphisms[s.compose(g, f)] != t.compose(self.morphisms[g], self.morphisms[f]) {
                    return Err(Error::Structure(format!(
                        "functor does not preserve {} ∘ {}",
                        s.morphism_name(g),
                        s.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CatFunctor) -> Result<CatFunctor> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::Composition("functors are not composable".into()));
        }
        Ok(CatFunctor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            morphisms: self.morphisms.iter().map(|&m| other.morphisms[m]).collect(),
        })
    }

    /// Unique lifts of arrows out of every object, with prescribed domain.
    pub fn check_discrete_fibration(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for x in 0..s.object_count() {
            for f in t.out_of(self.objects[x]) {
                let lifts = s.out_of(x).into_iter().filter(|&g| self.morphisms[g] == f).count();
                if lifts != 1 {
                    return Err(Error::Structure(format!(
                        "{} has {lifts} lifts with domain {}",
                        t.morphism_name(f),
                        s.object_name(x)
                    )));
                }
            }
        }
        Ok(())
    }
}
