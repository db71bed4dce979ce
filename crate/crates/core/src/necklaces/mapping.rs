use std::collections::HashMap;
use std::sync::Arc;

use super::necklace::{enumerate_necklaces, FlaggedNecklace, Necklace};
use crate::error::{Error, Result};
use crate::sset::{from_levels, Gen, SimplicialMap, SimplicialSet, Simplex};

/// `Map_{𝔠[X]}(x, y)` up to degree `m_max`, with its simplices listed as flagged necklaces.
///
/// The simplicial operators read a flag from its top: `d_0` restricts the necklace to
/// `T_{m-1}`, `d_m` refines it along `T_1`, and the inner faces drop `T_{m-i}`. In this
/// orientation the edge of `𝔠[Δ[2]](0, 2)` runs from `(01)∨(12)` to `(02)`.
pub struct MappingSpace {
    pub set: Arc<SimplicialSet>,
    pub space: Arc<SimplicialSet>,
    pub from: Gen,
    pub to: Gen,
    pub necklaces: Vec<Necklace>,
    /// Every `m`-simplex, degenerate ones included.
    pub levels: Vec<Vec<FlaggedNecklace>>,
    pub normal: Vec<Vec<Simplex>>,
    pub origin: Vec<(usize, usize)>,
    index: Vec<HashMap<FlaggedNecklace, usize>>,
}

pub fn mapping_space(x: &Arc<SimplicialSet>, from: Gen, to: Gen, m_max: usize) -> Result<MappingSpace> {
    if let Some(t) = x.truncation() {
        return Err(Error::Parameter(format!("necklaces need all simplices, but the set is truncated at {t}")));
    }
    let necklaces = enumerate_necklaces(x, from, to)?;
    let levels: Vec<Vec<FlaggedNecklace>> = (0..=m_max)
        .map(|m| {
            necklaces
                .iter()
                .flat_map(|n| n.flags(m).into_iter().map(|flag| FlaggedNecklace { necklace: n.clone(), flag }))
                .collect()
        })
        .collect();
    let lv = from_levels(
        &levels,
        |n, i, e: &FlaggedNecklace| e.flag_face(x, n - i),
        |n, i, e: &FlaggedNecklace| e.flag_degen(n - i),
        |_, e| e.show(x),
        Some(m_max),
    )?;
    let index = levels
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect())
        .collect();
    Ok(MappingSpace {
        set: Arc::new(lv.set),
        space: x.clone(),
        from,
        to,
        necklaces,
        levels,
        normal: lv.normal,
        origin: lv.origin,
        index,
    })
}

impl MappingSpace {
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn simplex_of(&self, e: &FlaggedNecklace) -> Option<Simplex> {
        let m = e.degree();
        self.index.get(m)?.get(e).map(|&k| self.normal[m][k].clone())
    }

    /// The flagged necklace behind a generator.
    pub fn necklace(&self, g: Gen) -> &FlaggedNecklace {
        let (n, k) = self.origin[g];
        &self.levels[n][k]
    }

    /// Number of `m`-simplices, degenerate ones included.
    pub fn count(&self, m: usize) -> usize {
        self.levels.get(m).map_or(0, Vec::len)
    }

    /// The map of mapping spaces induced by `f : X → Y`.
    pub fn pushforward(&self, f: &SimplicialMap, target: &MappingSpace) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&f.source, &self.space) || !Arc::ptr_eq(&f.target, &target.space) {
            return Err(Error::Composition("map does not match the mapping spaces".into()));
        }
        if f.vertex_image(self.from) != target.from || f.vertex_image(self.to) != target.to {
            return Err(Error::Composition("map does not preserve the endpoints".into()));
        }
        if target.top() < self.top() {
            return Err(Error::Parameter("target mapping space is truncated lower".into()));
        }
        self.map_to(target, |e| e.pushforward(f))
    }

    /// A map of mapping spaces given levelwise on flagged necklaces.
    pub fn map_to(
        &self,
        target: &MappingSpace,
        f: impl Fn(&FlaggedNecklace) -> FlaggedNecklace,
    ) -> Result<SimplicialMap> {
        let images = (0..self.set.len())
            .map(|g| {
                let img = f(self.necklace(g));
                target.simplex_of(&img).ok_or_else(|| {
                    Error::Structure(format!("`{}` is not a simplex of the target", img.show(&target.space)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(self.set.clone(), target.set.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, cube, horn, is_isomorphic, standard_simplex};

    fn space(x: SimplicialSet, a: &str, b: &str, m: usize) -> MappingSpace {
        let x = Arc::new(x);
        let (a, b) = (x.find(a).unwrap(), x.find(b).unwrap());
        mapping_space(&x, a, b, m).unwrap()
    }

    #[test]
    fn three_necklaces_across_a_triangle() {
        let d2 = standard_simplex(2);
        let ns = enumerate_necklaces(&d2, 0, 2).unwrap();
        assert_eq!(ns.len(), 3);
        let ms = space(d2, "0", "2", 2);
        assert_eq!(ms.count(0), 2);
        assert_eq!(ms.count(1), 3);
        assert_eq!(ms.set.f_vector(), vec![2, 1]);
        assert!(is_isomorphic(&ms.set, &Arc::new(cube(1))).unwrap().is_some());
    }

    #[test]
    fn edge_points_to_the_direct_bead() {
        let ms = space(standard_simplex(2), "0", "2", 1);
        let e = ms.set.generators(1)[0];
        let faces = ms.set.faces(e);
        assert_eq!(ms.necklace(faces[0].base).show(&ms.space), "(02)");
        assert_eq!(ms.necklace(faces[1].base).show(&ms.space), "(01)∨(12)");
    }

    #[test]
    fn cubes_from_simplices() {
        for n in 1..=4 {
            let ms = space(standard_simplex(n), "0", &n.to_string(), n);
            let c = Arc::new(cube(n - 1));
            assert!(is_isomorphic(&ms.set, &c).unwrap().is_some(), "n = {n}");
        }
    }

    #[test]
    fn empty_necklace_is_the_identity() {
        let ms = space(standard_simplex(2), "1", "1", 2);
        assert_eq!(ms.set.f_vector(), vec![1]);
        assert_eq!(ms.necklaces, vec![Necklace::empty(1)]);
    }

    #[test]
    fn no_necklaces_against_orientation() {
        let h = Arc::new(horn(2, 2).unwrap());
        let ms = mapping_space(&h, 2, 0, 2).unwrap();
        assert!(ms.set.is_empty());
        let bd = space(boundary(2).unwrap(), "0", "2", 2);
        assert_eq!(bd.set.f_vector(), vec![2]);
    }

    #[test]
    fn cycles_are_infinite() {
        let d1 = Arc::new(standard_simplex(1));
        let (bd, old) = d1.restrict(|k| d1.gen_dim(k) == 0).unwrap();
        let bd = Arc::new(bd);
        let incl = SimplicialMap { source: bd.clone(), target: d1.clone(), images: old.iter().map(|&k| d1.gen(k)).collect() };
        let pt = Arc::new(standard_simplex(0));
        let c = SimplicialMap::constant(&bd, &pt, 0);
        let circle = crate::sset::pushout(&incl, &c).unwrap().set;
        assert!(matches!(mapping_space(&circle, 0, 0, 1), Err(Error::Infinite(_))));
    }

    #[test]
    fn pushforward_along_a_face() {
        let d1 = Arc::new(standard_simplex(1));
        let d2 = Arc::new(standard_simplex(2));
        let f = crate::sset::standard_map(&d1, &d2, &[0, 2]);
        let a = mapping_space(&d1, 0, 1, 2).unwrap();
        let b = mapping_space(&d2, 0, 2, 2).unwrap();
        let m = a.pushforward(&f, &b).unwrap();
        assert_eq!(b.necklace(m.image(0).base).show(&b.space), "(02)");
    }
}
