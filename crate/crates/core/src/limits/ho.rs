use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{CatFunctor, FinCategory, Mor};
use crate::sset::{Gen, SimplicialMap, SimplicialSet, Simplex};
use crate::verdict::Verdict;

/// The homotopy category of a quasi-category, with the class of every edge.
pub struct HoCategory {
    pub category: Arc<FinCategory>,
    pub source: Arc<SimplicialSet>,
    /// Object index of each vertex generator.
    pub object: HashMap<Gen, usize>,
    class: HashMap<Simplex, Mor>,
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

pub fn ho_category(q: &Arc<SimplicialSet>) -> Result<HoCategory> {
    let edges = q.all_simplices(1);
    let pos: HashMap<Simplex, usize> = edges.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    let triangles = q.all_simplices(2);
    for t in &triangles {
        let [d0, d1, d2] = [0, 1, 2].map(|i| q.face(t, i));
        let pair = if !d0.is_nondegenerate() {
            Some((d1, d2))
        } else if !d2.is_nondegenerate() {
            Some((d1, d0))
        } else {
            None
        };
        if let Some((a, b)) = pair {
            let (ra, rb) = (find(&mut parent, pos[&a]), find(&mut parent, pos[&b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let verts = q.vertices().to_vec();
    let object: HashMap<Gen, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let names: Vec<String> = verts.iter().map(|&v| q.name(v).to_string()).collect();
    // Representatives: identities first, then nondegenerate edges in generator order.
    let mut mor_of_root: HashMap<usize, Mor> = HashMap::new();
    for (k, &v) in verts.iter().enumerate() {
        let id = q.degen(&q.gen(v), 0);
        let r = find(&mut parent, pos[&id]);
        if mor_of_root.insert(r, k).is_some() {
            return Err(Error::Structure("two vertices are identified by a homotopy".into()));
        }
    }
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut rep: Vec<Simplex> = verts.iter().map(|&v| q.degen(&q.gen(v), 0)).collect();
    for e in &edges {
        let r = find(&mut parent, pos[e]);
        if mor_of_root.contains_key(&r) {
            continue;
        }
        mor_of_root.insert(r, verts.len() + arrows.len());
        let (a, b) = (q.vertex_of(e, 0), q.vertex_of(e, 1));
        arrows.push((q.show(e), q.name(a).to_string(), q.name(b).to_string()));
        rep.push(e.clone());
    }
    let mut class: HashMap<Simplex, Mor> = HashMap::new();
    for e in &edges {
        let r = find(&mut parent, pos[e]);
        class.insert(e.clone(), mor_of_root[&r]);
    }
    let mut by_spine: HashMap<(Mor, Mor), Vec<Mor>> = HashMap::new();
    for t in &triangles {
        let [d0, d1, d2] = [0, 1, 2].map(|i| class[&q.face(t, i)]);
        by_spine.entry((d0, d2)).or_default().push(d1);
    }
    let name_of = |m: Mor| if m < verts.len() { format!("id_{}", names[m]) } else { arrows[m - verts.len()].0.clone() };
    let mut compose = Vec::new();
    let nm = rep.len();
    for f in verts.len()..nm {
        for g in verts.len()..nm {
            let (f_cod, g_dom) = (q.vertex_of(&rep[f], 1), q.vertex_of(&rep[g], 0));
            if f_cod != g_dom {
                continue;
            }
            let results = by_spine.get(&(g, f)).ok_or_else(|| {
                Error::Structure(format!("no 2-simplex composes {} after {}", name_of(g), name_of(f)))
            })?;
            if results.iter().any(|&r| r != results[0]) {
                return Err(Error::Structure(format!(
                    "composite of {} after {} is not well defined",
                    name_of(g),
                    name_of(f)
                )));
            }
            compose.push((name_of(g), name_of(f), name_of(results[0])));
        }
    }
    let category = FinCategory::from_parts(names, arrows, compose)?;
    Ok(HoCategory { category: Arc::new(category), source: q.clone(), object, class })
}

impl HoCategory {
    /// The class of an edge (possibly degenerate).
    pub fn class_of(&self, e: &Simplex) -> Mor {
        self.class[e]
    }

    pub fn object_of(&self, v: Gen) -> usize {
        self.object[&v]
    }

    /// Two vertices are isomorphic in the homotopy category.
    pub fn isomorphic(&self, a: Gen, b: Gen) -> bool {
        let (x, y) = (self.object_of(a), self.object_of(b));
        let c = &self.category;
        c.hom(x, y).into_iter().any(|f| c.is_isomorphism(f))
    }

    /// The functor induced by a simplicial map.
    pub fn functor(&self, f: &SimplicialMap, target: &HoCategory) -> Result<CatFunctor> {
        if !Arc::ptr_eq(&f.source, &self.source) || !Arc::ptr_eq(&f.target, &target.source) {
            return Err(Error::Composition("map does not match the homotopy categories".into()));
        }
        let objects: Vec<usize> = self.source.vertices().iter().map(|&v| target.object_of(f.vertex_image(v))).collect();
        let mut morphisms = vec![0; self.category.morphism_count()];
        for (e, &m) in &self.class {
            morphisms[m] = target.class_of(&f.apply(e));
        }
        let functor = CatFunctor::new(self.category.clone(), target.category.clone(), objects, morphisms)?;
        Ok(functor)
    }
}

/// Full, faithful and essentially surjective, checked exhaustively.
pub fn is_equivalence(f: &CatFunctor) -> Verdict {
    let (s, t) = (&f.source, &f.target);
    let mut problems = Vec::new();
    for a in 0..s.object_count() {
        for b in 0..s.object_count() {
            let mut images: Vec<Mor> = s.hom(a, b).into_iter().map(|m| f.morphisms[m]).collect();
            let n = images.len();
            images.sort_unstable();
            images.dedup();
            let target = t.hom(f.objects[a], f.objects[b]).len();
            if images.len() != n {
                problems.push(format!("not faithful on ({}, {})", s.object_name(a), s.object_name(b)));
            }
            if images.len() != target {
                problems.push(format!("not full on ({}, {})", s.object_name(a), s.object_name(b)));
            }
        }
    }
    for y in 0..t.object_count() {
        let hit = (0..s.object_count()).any(|a| {
            let x = f.objects[a];
            t.hom(x, y).into_iter().any(|m| t.is_isomorphism(m))
        });
        if !hit {
            problems.push(format!("{} is not in the essential image", t.object_name(y)));
        }
    }
    let detail = if problems.is_empty() {
        format!("{} objects onto {}", s.object_count(), t.object_count())
    } else {
        problems.join("; ")
    };
    Verdict::new("equivalence of homotopy categories", problems.is_empty(), detail)
}
