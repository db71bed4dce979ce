//! Exhaustive enumeration of simplicial maps by backtracking over generators.

use std::collections::VecDeque;
use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use super::map::SimplicialMap;
use super::set::SimplicialSet;
use super::simplex::{identity, Gen, Simplex};
use crate::error::{Error, Result};

/// Default number of candidate extensions a single search may try.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// The cap, read once from `WLIM_MAX_CELLS`.
pub fn enumeration_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("WLIM_MAX_CELLS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CAP)
    })
}

/// Generators ordered so that each comes after its faces and close to its vertices.
///
/// Vertices are visited breadth-first along edges, starting from `seeds`; every higher
/// generator is placed right after the last of its vertices.
pub fn search_order(x: &SimplicialSet, seeds: &[Gen]) -> Vec<Gen> {
    let nv = x.len();
    let mut adj: Vec<Vec<Gen>> = vec![Vec::new(); nv];
    for &e in x.generators(1) {
        let (a, b) = (x.first_vertex(e), x.last_vertex(e));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut pos = vec![usize::MAX; nv];
    let mut next = 0;
    let starts = seeds.iter().copied().chain(x.vertices().iter().copied());
    for s in starts {
        if pos[s] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([s]);
        pos[s] = next;
        next += 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<Gen> = (0..x.len()).collect();
    let key = |g: Gen| {
        let top = x.vertex_list(&x.gen(g)).into_iter().map(|v| pos[v]).max().unwrap_or(0);
        (top, x.gen_dim(g), g)
    };
    order.sort_by_key(|&g| key(g));
    order
}

struct Search<'a> {
    x: &'a SimplicialSet,
    y: &'a SimplicialSet,
    order: Vec<Gen>,
    fixed: Vec<Option<Simplex>>,
    checks: Vec<Vec<(Vec<u8>, Simplex)>>,
    assign: Vec<Option<Simplex>>,
    tried: u64,
    cap: u64,
}

impl Search<'_> {
    fn candidates(&self, g: Gen) -> Vec<Simplex> {
        let n = self.x.gen_dim(g);
        if n == 0 {
            return self.y.vertices().iter().map(|&v| Simplex::generator(v, 0)).collect();
        }
        let required: Vec<Simplex> = self
            .x
            .faces(g)
            .iter()
            .map(|f| {
                let img = self.assign[f.base].as_ref().expect("faces are assigned first");
                self.y.apply(img, &f.surj)
            })
            .collect();
        self.y.face_index(n).get(&required).cloned().unwrap_or_default()
    }

    fn consistent(&self, g: Gen, c: &Simplex) -> bool {
        if self.x.gen_dim(g) > 0 {
            let ok = self.x.faces(g).iter().enumerate().all(|(i, f)| {
                let img = self.assign[f.base].as_ref().expect("assigned");
                self.y.apply(img, &f.surj) == self.y.face(c, i)
            });
            if !ok {
                return false;
            }
        }
        self.checks[g].iter().all(|(eta, want)| &self.y.apply(c, eta) == want)
    }

    fn run(
        &mut self,
        depth: usize,
        visit: &mut dyn FnMut(&[Simplex]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if depth == self.order.len() {
            let images: Vec<Simplex> = self.assign.iter().map(|s| s.clone().expect("complete")).collect();
            return Ok(visit(&images));
        }
        let g = self.order[depth];
        let cands = match &self.fixed[g] {
            Some(s) => vec![s.clone()],
            None => self.candidates(g),
        };
        for c in cands {
            self.tried += 1;
            if self.tried > self.cap {
                return Err(Error::CapExceeded(self.cap));
            }
            if !self.consistent(g, &c) {
                continue;
            }
            self.assign[g] = Some(c);
            if self.run(depth + 1, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        self.assign[g] = None;
        Ok(ControlFlow::Continue(()))
    }
}

/// Visit every map `X → Y` sending each constrained simplex `s` to the prescribed `t`.
pub fn search_maps(
    x: &SimplicialSet,
    y: &SimplicialSet,
    constraints: &[(Simplex, Simplex)],
    visit: &mut dyn FnMut(&[Simplex]) -> ControlFlow<()>,
) -> Result<()> {
    if let (Some(t), Some(d)) = (y.truncation(), x.dim()) {
        if d > t {
            return Err(Error::Parameter(format!(
                "source has dimension {d} but the target is truncated at {t}"
            )));
        }
    }
    let mut fixed: Vec<Option<Simplex>> = vec![None; x.len()];
    let mut checks: Vec<Vec<(Vec<u8>, Simplex)>> = vec![Vec::new(); x.len()];
    for (s, t) in constraints {
        if s.dim() != t.dim() {
            return Err(Error::Composition("constraint changes dimension".into()));
        }
        if s.surj == identity(s.dim()) {
            match &fixed[s.base] {
                Some(prev) if prev != t => return Ok(()),
                _ => fixed[s.base] = Some(t.clone()),
            }
        } else {
            checks[s.base].push((s.surj.clone(), t.clone()));
        }
    }
    let seeds: Vec<Gen> = x.vertices().iter().copied().filter(|&v| fixed[v].is_some()).collect();
    let mut search = Search {
        x,
        y,
        order: search_order(x, &seeds),
        fixed,
        checks,
        assign: vec![None; x.len()],
        tried: 0,
        cap: enumeration_cap(),
    };
    let _ = search.run(0, visit)?;
    Ok(())
}

/// All maps `X → Y`.
pub fn enumerate_maps(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<Vec<SimplicialMap>> {
    collect(x, y, &[])
}

fn under_constraints(jx: &SimplicialMap, jy: &SimplicialMap) -> Result<Vec<(Simplex, Simplex)>> {
    if !Arc::ptr_eq(&jx.source, &jy.source) {
        return Err(Error::Composition("maps under different shapes".into()));
    }
    Ok(jx.images.iter().cloned().zip(jy.images.iter().cloned()).collect())
}

/// All maps `f : X → Y` with `f ∘ jx = jy`.
pub fn enumerate_maps_under(jx: &SimplicialMap, jy: &SimplicialMap) -> Result<Vec<SimplicialMap>> {
    collect(&jx.target, &jy.target, &under_constraints(jx, jy)?)
}

/// The first map under `J` in search order, if any.
pub fn find_map_under(jx: &SimplicialMap, jy: &SimplicialMap) -> Result<Option<SimplicialMap>> {
    let cons = under_constraints(jx, jy)?;
    let mut found = None;
    search_maps(&jx.target, &jy.target, &cons, &mut |imgs| {
        found = Some(imgs.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found.map(|images| SimplicialMap {
        source: jx.target.clone(),
        target: jy.target.clone(),
        images,
    }))
}

pub fn count_maps(x: &SimplicialSet, y: &SimplicialSet, constraints: &[(Simplex, Simplex)]) -> Result<usize> {
    let mut n = 0;
    search_maps(x, y, constraints, &mut |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

fn collect(
    x: &Arc<SimplicialSet>,
    y: &Arc<SimplicialSet>,
    constraints: &[(Simplex, Simplex)],
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    search_maps(x, y, constraints, &mut |imgs| {
        out.push(SimplicialMap { source: x.clone(), target: y.clone(), images: imgs.to_vec() });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{boundary, horn, standard_simplex};

    #[test]
    fn monotone_endomaps_of_interval() {
        let d1 = Arc::new(standard_simplex(1));
        let maps = enumerate_maps(&d1, &d1).unwrap();
        assert_eq!(maps.len(), 3);
        for m in &maps {
            m.validate().unwrap();
        }
    }

    #[test]
    fn maps_between_simplices_count_monotone_functions() {
        // Maps Δ[m] → Δ[n] are monotone maps [m] → [n]: C(m+n+1, m+1).
        for (m, n, want) in [(1, 2, 6), (2, 2, 10), (2, 1, 4), (3, 1, 5)] {
            let a = Arc::new(standard_simplex(m));
            let b = Arc::new(standard_simplex(n));
            assert_eq!(enumerate_maps(&a, &b).unwrap().len(), want, "Δ[{m}] → Δ[{n}]");
        }
    }

    #[test]
    fn points_pick_vertices() {
        let pt = Arc::new(standard_simplex(0));
        let h = Arc::new(horn(2, 2).unwrap());
        assert_eq!(enumerate_maps(&pt, &h).unwrap().len(), 3);
    }

    #[test]
    fn under_identity_is_unique() {
        let h = Arc::new(horn(2, 1).unwrap());
        let id = SimplicialMap::identity(&h);
        assert_eq!(enumerate_maps_under(&id, &id).unwrap().len(), 1);
    }

    #[test]
    fn horn_fillers_in_a_simplex() {
        let d2 = Arc::new(standard_simplex(2));
        let (h, old) = d2.restrict(|g| d2.name(g) != "012" && d2.name(g) != "02").unwrap();
        let h = Arc::new(h);
        let incl = SimplicialMap { source: h.clone(), target: d2.clone(), images: old.iter().map(|&g| d2.gen(g)).collect() };
        incl.validate().unwrap();
        let fill = find_map_under(&incl, &incl).unwrap();
        assert!(fill.is_some());
        let bd = Arc::new(boundary(2).unwrap());
        assert_eq!(enumerate_maps(&bd, &d2).unwrap().len(), 10);
    }
}
