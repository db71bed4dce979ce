//! JSON documents for simplicial sets, maps, categories, weights and diagrams.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use wlim_core::enriched::SSetFunctor;
use wlim_core::fincat::{CatFunctor, FinCategory, SetWeight};
use wlim_core::sset::{Builder, Simplex, SimplicialMap, SimplicialSet};

/// A document that parsed as JSON but does not describe a valid object.
#[derive(Debug, Error)]
#[error("{pointer}: {message}")]
pub struct SchemaError {
    pub pointer: String,
    pub message: String,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError { pointer: pointer.into(), message: message.into() }
}

type DocResult<T> = std::result::Result<T, SchemaError>;

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDoc {
    pub base: String,
    pub degens: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexDoc {
    pub name: String,
    pub faces: Vec<FaceDoc>,
}

/// `dim` is `-1` for the empty simplicial set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub dim: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    pub simplices: BTreeMap<String, Vec<SimplexDoc>>,
}

fn face_doc(x: &SimplicialSet, s: &Simplex) -> FaceDoc {
    FaceDoc { base: x.name(s.base).to_string(), degens: s.degens() }
}

fn face_of(x: &SimplicialSet, f: &FaceDoc, pointer: &str) -> DocResult<Simplex> {
    let g = x.find(&f.base).ok_or_else(|| schema(format!("{pointer}/base"), format!("unknown generator `{}`", f.base)))?;
    Simplex::from_degens(g, x.gen_dim(g), &f.degens)
        .ok_or_else(|| schema(format!("{pointer}/degens"), "degeneracies must be strictly decreasing and in range"))
}

impl SSetDoc {
    pub fn from_set(x: &SimplicialSet) -> Self {
        let mut simplices = BTreeMap::new();
        let top = x.dim();
        for n in 0..=top.unwrap_or(0) {
            if top.is_none() {
                break;
            }
            let mut level: Vec<SimplexDoc> = x
                .generators(n)
                .iter()
                .map(|&g| SimplexDoc {
                    name: x.name(g).to_string(),
                    faces: x.faces(g).iter().map(|s| face_doc(x, s)).collect(),
                })
                .collect();
            level.sort_by(|a, b| a.name.cmp(&b.name));
            simplices.insert(n.to_string(), level);
        }
        SSetDoc { comment: None, dim: top.map_or(-1, |d| d as i64), truncation: x.truncation(), simplices }
    }

    pub fn to_set(&self) -> anyhow::Result<SimplicialSet> {
        let mut levels: Vec<(usize, &Vec<SimplexDoc>)> = Vec::new();
        for (k, level) in &self.simplices {
            let n: usize = k.parse().map_err(|_| schema(format!("/simplices/{}", escape(k)), "level keys are dimensions"))?;
            if n as i64 > self.dim {
                return Err(schema(format!("/simplices/{}", escape(k)), format!("level above dim {}", self.dim)).into());
            }
            levels.push((n, level));
        }
        levels.sort_by_key(|(n, _)| *n);
        let mut b = Builder::new();
        b.truncation = self.truncation;
        let mut names: Vec<(String, usize)> = Vec::new();
        for (n, level) in levels {
            for (k, s) in level.iter().enumerate() {
                let pointer = format!("/simplices/{n}/{k}");
                let expected = if n == 0 { 0 } else { n + 1 };
                if s.faces.len() != expected {
                    return Err(schema(format!("{pointer}/faces"), format!("a {n}-simplex has {expected} faces")).into());
                }
                let faces = s
                    .faces
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        let p = format!("{pointer}/faces/{i}");
                        let (g, dim) = names
                            .iter()
                            .position(|(nm, _)| nm == &f.base)
                            .map(|g| (g, names[g].1))
                            .ok_or_else(|| schema(format!("{p}/base"), format!("unknown generator `{}`", f.base)))?;
                        let simplex = Simplex::from_degens(g, dim, &f.degens)
                            .ok_or_else(|| schema(format!("{p}/degens"), "degeneracies must be strictly decreasing and in range"))?;
                        if simplex.dim() + 1 != n {
                            return Err(schema(p, format!("face of `{}` has the wrong dimension", s.name)));
                        }
                        Ok(simplex)
                    })
                    .collect::<DocResult<Vec<_>>>()?;
                b.add(s.name.clone(), faces).map_err(|e| schema(pointer.clone(), e.to_string()))?;
                names.push((s.name.clone(), n));
            }
        }
        Ok(b.build()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeDoc {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<ComposeDoc>,
}

impl CategoryDoc {
    pub fn from_category(c: &FinCategory) -> Self {
        let mut objects = c.objects().to_vec();
        objects.sort();
        let mut morphisms: Vec<MorphismDoc> = (c.object_count()..c.morphism_count())
            .map(|f| MorphismDoc {
                name: c.morphism_name(f).to_string(),
                dom: c.object_name(c.dom(f)).to_string(),
                cod: c.object_name(c.cod(f)).to_string(),
            })
            .collect();
        morphisms.sort_by(|a, b| a.name.cmp(&b.name));
        let mut compose: Vec<ComposeDoc> =
            c.composition_triples().into_iter().map(|(g, f, gf)| ComposeDoc { g, f, gf }).collect();
        compose.sort_by(|a, b| (&a.g, &a.f).cmp(&(&b.g, &b.f)));
        CategoryDoc { comment: None, objects, morphisms, compose }
    }

    pub fn to_category(&self) -> anyhow::Result<FinCategory> {
        let morphisms = self.morphisms.iter().map(|m| (m.name.clone(), m.dom.clone(), m.cod.clone())).collect();
        let compose = self.compose.iter().map(|c| (c.g.clone(), c.f.clone(), c.gf.clone())).collect();
        Ok(FinCategory::from_parts(self.objects.clone(), morphisms, compose)?)
    }
}

/// A map between two simplicial sets, with the image of every generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub source: SSetDoc,
    pub target: SSetDoc,
    pub images: BTreeMap<String, FaceDoc>,
}

impl MapDoc {
    pub fn from_map(f: &SimplicialMap) -> Self {
        let images = (0..f.source.len())
            .map(|g| (f.source.name(g).to_string(), face_doc(&f.target, &f.images[g])))
            .collect();
        MapDoc {
            comment: None,
            source: SSetDoc::from_set(&f.source),
            target: SSetDoc::from_set(&f.target),
            images,
        }
    }
}

/// Images keyed by source generator name, resolved against built sets.
pub fn map_images(
    source: &Arc<SimplicialSet>,
    target: &Arc<SimplicialSet>,
    images: &BTreeMap<String, FaceDoc>,
    pointer: &str,
) -> anyhow::Result<SimplicialMap> {
    let mut out = Vec::with_capacity(source.len());
    for g in 0..source.len() {
        let name = source.name(g);
        let p = format!("{pointer}/{}", escape(name));
        let f = images.get(name).ok_or_else(|| schema(p.clone(), "missing image"))?;
        out.push(face_of(target, f, &p)?);
    }
    if let Some(extra) = images.keys().find(|k| source.find(k).is_none()) {
        return Err(schema(format!("{pointer}/{}", escape(extra)), "not a generator of the source").into());
    }
    Ok(SimplicialMap::new(source.clone(), target.clone(), out)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetWeightDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub shape: CategoryDoc,
    pub values: BTreeMap<String, Vec<String>>,
    /// For each non-identity arrow, the image of each element.
    pub actions: BTreeMap<String, BTreeMap<String, String>>,
}

impl SetWeightDoc {
    pub fn from_weight(w: &SetWeight) -> Self {
        let c = &w.shape;
        let values = (0..c.object_count())
            .map(|o| {
                let mut v = w.values[o].clone();
                v.sort();
                (c.object_name(o).to_string(), v)
            })
            .collect();
        let actions = (c.object_count()..c.morphism_count())
            .map(|f| {
                let (a, b) = (c.dom(f), c.cod(f));
                let table = (0..w.values[a].len())
                    .map(|x| (w.values[a][x].clone(), w.values[b][w.apply(f, x)].clone()))
                    .collect();
                (c.morphism_name(f).to_string(), table)
            })
            .collect();
        SetWeightDoc { comment: None, shape: CategoryDoc::from_category(c), values, actions }
    }

    pub fn to_weight(&self, shape: &Arc<FinCategory>) -> anyhow::Result<SetWeight> {
        let c = shape;
        let values: Vec<Vec<String>> = (0..c.object_count())
            .map(|o| {
                let name = c.object_name(o);
                self.values.get(name).cloned().ok_or_else(|| schema(format!("/values/{}", escape(name)), "missing value"))
            })
            .collect::<DocResult<_>>()?;
        let actions = (c.object_count()..c.morphism_count())
            .map(|f| {
                let name = c.morphism_name(f);
                let p = format!("/actions/{}", escape(name));
                let table = self.actions.get(name).ok_or_else(|| schema(p.clone(), "missing action"))?;
                let (a, b) = (c.dom(f), c.cod(f));
                values[a]
                    .iter()
                    .map(|x| {
                        let y = table.get(x).ok_or_else(|| schema(format!("{p}/{}", escape(x)), "missing image"))?;
                        values[b].iter().position(|v| v == y).ok_or_else(|| {
                            schema(format!("{p}/{}", escape(x)), format!("`{y}` is not in W({})", c.object_name(b)))
                        })
                    })
                    .collect::<DocResult<Vec<_>>>()
            })
            .collect::<DocResult<Vec<_>>>()?;
        Ok(SetWeight::new(shape.clone(), values, actions)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub objects: BTreeMap<String, String>,
    /// Non-identity arrows only; images may be identities `id_x`.
    pub morphisms: BTreeMap<String, String>,
}

impl FunctorDoc {
    pub fn from_functor(f: &CatFunctor) -> Self {
        let (s, t) = (&f.source, &f.target);
        FunctorDoc {
            comment: None,
            source: CategoryDoc::from_category(s),
            target: CategoryDoc::from_category(t),
            objects: (0..s.object_count())
                .map(|o| (s.object_name(o).to_string(), t.object_name(f.objects[o]).to_string()))
                .collect(),
            morphisms: (s.object_count()..s.morphism_count())
                .map(|m| (s.morphism_name(m).to_string(), t.morphism_name(f.morphisms[m]).to_string()))
                .collect(),
        }
    }

    pub fn to_functor(&self, source: &Arc<FinCategory>, target: &Arc<FinCategory>) -> anyhow::Result<CatFunctor> {
        let (s, t) = (source, target);
        let objects = (0..s.object_count())
            .map(|o| {
                let p = format!("/objects/{}", escape(s.object_name(o)));
                let img = self.objects.get(s.object_name(o)).ok_or_else(|| schema(p.clone(), "missing image"))?;
                t.find_object(img).ok_or_else(|| schema(p, format!("unknown object `{img}`")))
            })
            .collect::<DocResult<Vec<_>>>()?;
        let mut morphisms: Vec<usize> = (0..s.object_count()).map(|o| t.identity(objects[o])).collect();
        for m in s.object_count()..s.morphism_count() {
            let p = format!("/morphisms/{}", escape(s.morphism_name(m)));
            let img = self.morphisms.get(s.morphism_name(m)).ok_or_else(|| schema(p.clone(), "missing image"))?;
            morphisms.push(t.find_morphism(img).ok_or_else(|| schema(p, format!("unknown arrow `{img}`")))?);
        }
        Ok(CatFunctor::new(s.clone(), t.clone(), objects, morphisms)?)
    }
}

/// A weight: a Set-valued functor, or a map `J̃ → J` of simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightDoc {
    Set(SetWeightDoc),
    Map(MapDoc),
}

/// A diagram: a functor between finite categories, or a map `J → Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DiagramDoc {
    Functor(FunctorDoc),
    Map(MapDoc),
}

/// A functor from a finite category to simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SSetFunctorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub shape: CategoryDoc,
    pub values: BTreeMap<String, SSetDoc>,
    /// For each non-identity arrow, the images of the generators of its domain.
    pub maps: BTreeMap<String, BTreeMap<String, FaceDoc>>,
}

impl SSetFunctorDoc {
    pub fn from_functor(f: &SSetFunctor) -> Self {
        let c = &f.shape;
        SSetFunctorDoc {
            comment: None,
            shape: CategoryDoc::from_category(c),
            values: (0..c.object_count()).map(|o| (c.object_name(o).to_string(), SSetDoc::from_set(&f.values[o]))).collect(),
            maps: (c.object_count()..c.morphism_count())
                .map(|m| (c.morphism_name(m).to_string(), MapDoc::from_map(&f.maps[m]).images))
                .collect(),
        }
    }
}

/// Any document the command line reads, told apart by its fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyDoc {
    SSet(SSetDoc),
    Category(CategoryDoc),
    Map(MapDoc),
    Weight(WeightDoc),
    Diagram(DiagramDoc),
    SSetFunctor(SSetFunctorDoc),
}

/// `serde_json` with a pointer-free message when the JSON itself does not fit the schema.
pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).map_err(|e| schema("", e.to_string()).into())
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use wlim_core::sset::{horn, standard_simplex};

    #[test]
    fn simplex_round_trip() {
        let x = standard_simplex(2);
        let doc = SSetDoc::from_set(&x);
        let y = doc.to_set().unwrap();
        assert_eq!(y.f_vector(), vec![3, 3, 1]);
        assert_eq!(SSetDoc::from_set(&y), doc);
    }

    #[test]
    fn identity_failure_names_the_generator() {
        let mut doc = SSetDoc::from_set(&standard_simplex(2));
        // Swap the vertices of the edge 12 so that d₀d₀ and d₀d₁ disagree on 012.
        let edge = doc.simplices.get_mut("1").unwrap().iter_mut().find(|s| s.name == "12").unwrap();
        edge.faces.swap(0, 1);
        let err = doc.to_set().unwrap_err();
        let core = err.downcast_ref::<wlim_core::Error>().unwrap();
        assert!(matches!(core, wlim_core::Error::Identity { generator, .. } if generator == "012"), "{core}");
    }

    #[test]
    fn bad_reference_has_a_pointer() {
        let mut doc = SSetDoc::from_set(&horn(2, 1).unwrap());
        doc.simplices.get_mut("1").unwrap()[0].faces[0].base = "9".into();
        let err = doc.to_set().unwrap_err();
        let s = err.downcast_ref::<SchemaError>().unwrap();
        assert_eq!(s.pointer, "/simplices/1/0/faces/0/base");
    }
}
