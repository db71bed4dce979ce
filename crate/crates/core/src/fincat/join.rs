use std::collections::HashSet;

use super::category::{CatFunctor, FinCategory};
use super::weight::fibers;
use crate::error::Result;

/// `I ⋆ᴾ J`: arrows `a → b` from `I` to `J` are the elements of the fiber over `b`,
/// named `a*x`; nothing goes from `J` back to `I`.
pub fn cat_weighted_join(i: &FinCategory, p: &CatFunctor) -> Result<FinCategory> {
    let w = fibers(p)?;
    let j = &p.target;
    let mut used: HashSet<String> = HashSet::new();
    let mut fresh = |s: &str| {
        let mut s = s.to_string();
        while !used.insert(s.clone()) {
            s.push('\'');
        }
        s
    };
    let i_obj: Vec<String> = i.objects().iter().map(|o| fresh(o)).collect();
    let j_obj: Vec<String> = j.objects().iter().map(|o| fresh(o)).collect();
    let mut used_m: HashSet<String> = i_obj.iter().chain(&j_obj).map(|o| format!("id_{o}")).collect();
    let mut fresh_m = |s: String| {
        let mut s = s;
        while !used_m.insert(s.clone()) {
            s.push('\'');
        }
        s
    };
    let i_mor: Vec<String> = (0..i.morphism_count()).map(|f| fresh_m(i.morphism_name(f).to_string())).collect();
    let j_mor: Vec<String> = (0..j.morphism_count()).map(|f| fresh_m(j.morphism_name(f).to_string())).collect();
    let (ni, nj) = (i.object_count(), j.object_count());
    let mixed: Vec<Vec<Vec<String>>> = (0..ni)
        .map(|a| {
            (0..nj)
                .map(|b| w.values[b].iter().map(|x| fresh_m(format!("{}*{x}", i_obj[a]))).collect())
                .collect()
        })
        .collect();
    let mut morphisms = Vec::new();
    for f in ni..i.morphism_count() {
        morphisms.push((i_mor[f].clone(), i_obj[i.dom(f)].clone(), i_obj[i.cod(f)].clone()));
    }
    for f in nj..j.morphism_count() {
        morphisms.push((j_mor[f].clone(), j_obj[j.dom(f)].clone(), j_obj[j.cod(f)].clone()));
    }
    for a in 0..ni {
        for b in 0..nj {
            for name in &mixed[a][b] {
                morphisms.push((name.clone(), i_obj[a].clone(), j_obj[b].clone()));
            }
        }
    }
    let name_i = |f: usize| if i.is_identity(f) { format!("id_{}", i_obj[f]) } else { i_mor[f].clone() };
    let name_j = |f: usize| if j.is_identity(f) { format!("id_{}", j_obj[f]) } else { j_mor[f].clone() };
    let mut compose = Vec::new();
    for (g, f, gf) in i.composition_triples() {
        let (g, f, gf) = (i.find_morphism(&g).unwrap(), i.find_morphism(&f).unwrap(), i.find_morphism(&gf).unwrap());
        compose.push((name_i(g), name_i(f), name_i(gf)));
    }
    for (g, f, gf) in j.composition_triples() {
        let (g, f, gf) = (j.find_morphism(&g).unwrap(), j.find_morphism(&f).unwrap(), j.find_morphism(&gf).unwrap());
        compose.push((name_j(g), name_j(f), name_j(gf)));
    }
    for a in 0..ni {
        for b in 0..nj {
            for (x, name) in mixed[a][b].iter().enumerate() {
                for u in ni..i.morphism_count() {
                    if i.cod(u) == a {
                        compose.push((name.clone(), i_mor[u].clone(), mixed[i.dom(u)][b][x].clone()));
                    }
                }
                for f in nj..j.morphism_count() {
                    if j.dom(f) == b {
                        let y = w.apply(f, x);
                        compose.push((j_mor[f].clone(), name.clone(), mixed[a][j.cod(f)][y].clone()));
                    }
                }
            }
        }
    }
    FinCategory::from_parts(i_obj.into_iter().chain(j_obj).collect(), morphisms, compose)
}
