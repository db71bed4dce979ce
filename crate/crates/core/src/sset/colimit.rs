//! Coproducts and pushouts.

use std::collections::HashMap;
use std::sync::Arc;

use super::levels::from_levels;
use super::map::SimplicialMap;
use super::product::min_trunc;
use super::set::{Builder, SimplicialSet};
use super::simplex::Simplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `X ⊔_A Y` with its legs; every generator remembers a generator it comes from.
pub struct Pushout {
    pub set: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    pub origin: Vec<(Side, Simplex)>,
}

impl Pushout {
    /// The map out of the pushout determined by compatible maps out of both legs.
    pub fn map_out(&self, fx: &SimplicialMap, fy: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&fx.target, &fy.target)
            || !Arc::ptr_eq(&fx.source, &self.left.source)
            || !Arc::ptr_eq(&fy.source, &self.right.source)
        {
            return Err(Error::Composition("cocone does not match the pushout".into()));
        }
        let images = self
            .origin
            .iter()
            .map(|(side, s)| match side {
                Side::Left => fx.apply(s),
                Side::Right => fy.apply(s),
            })
            .collect();
        SimplicialMap::new(self.set.clone(), fx.target.clone(), images)
    }

    /// The map between pushouts induced by maps of the legs' sources.
    pub fn induced(&self, other: &Pushout, ux: &SimplicialMap, uy: &SimplicialMap) -> Result<SimplicialMap> {
        let fx = ux.then(&other.left)?;
        let fy = uy.then(&other.right)?;
        self.map_out(&fx, &fy)
    }
}

pub fn coproduct(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<Pushout> {
    let mut b = Builder::new();
    let mut origin = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (side, s, out) in [(Side::Left, x, &mut left), (Side::Right, y, &mut right)] {
        let offset = b.len();
        for g in 0..s.len() {
            let faces = s
                .faces(g)
                .iter()
                .map(|f| Simplex { base: f.base + offset, surj: f.surj.clone() })
                .collect();
            let k = b.add_fresh(s.name(g), faces)?;
            origin.push((side, s.gen(g)));
            out.push(s.gen(g).clone());
            out.last_mut().unwrap().base = k;
        }
    }
    b.truncation = min_trunc(x.truncation(), y.truncation());
    let set = Arc::new(b.build()?);
    Ok(Pushout {
        left: SimplicialMap { source: x.clone(), target: set.clone(), images: left },
        right: SimplicialMap { source: y.clone(), target: set.clone(), images: right },
        set,
        origin,
    })
}

/// Pushout of `X ← A → Y`.
///
/// When a leg is a monomorphism the result is assembled from generators directly;
/// otherwise simplices are glued degreewise and renormalized.
pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    if !Arc::ptr_eq(&f.source, &g.source) {
        return Err(Error::Composition("pushout legs have different sources".into()));
    }
    if f.is_injective_on_generators() {
        glue_along_mono(f, g, Side::Right)
    } else if g.is_injective_on_generators() {
        glue_along_mono(g, f, Side::Left)
    } else {
        glue_degreewise(f, g)
    }
}

/// `mono: A ↪ M`, `other: A → O`; `other_side` says which leg `O` is.
fn glue_along_mono(mono: &SimplicialMap, other: &SimplicialMap, other_side: Side) -> Result<Pushout> {
    let (m, o) = (&mono.target, &other.target);
    let mut in_a = vec![None; m.len()];
    for (a, img) in mono.images.iter().enumerate() {
        in_a[img.base] = Some(a);
    }
    let mut b = Builder::new();
    let mut origin = Vec::new();
    for k in 0..o.len() {
        b.add(o.name(k), o.faces(k).to_vec())?;
        origin.push((other_side, o.gen(k)));
    }
    let mut m_images: Vec<Simplex> = Vec::with_capacity(m.len());
    for (k, &from_a) in in_a.iter().enumerate().take(m.len()) {
        if let Some(a) = from_a {
            m_images.push(other.images[a].clone());
            continue;
        }
        let faces = m
            .faces(k)
            .iter()
            .map(|fc| {
                let img = &m_images[fc.base];
                Simplex { base: img.base, surj: super::simplex::compose(&img.surj, &fc.surj) }
            })
            .collect::<Vec<_>>();
        let new = b.add_fresh(m.name(k), faces)?;
        let side = if other_side == Side::Right { Side::Left } else { Side::Right };
        origin.push((side, m.gen(k)));
        m_images.push(Simplex::generator(new, m.gen_dim(k)));
    }
    b.truncation = min_trunc(m.truncation(), o.truncation());
    let set = Arc::new(b.build()?);
    let o_images: Vec<Simplex> = (0..o.len()).map(|k| o.gen(k)).collect();
    let mono_leg = SimplicialMap { source: m.clone(), target: set.clone(), images: m_images };
    let other_leg = SimplicialMap { source: o.clone(), target: set.clone(), images: o_images };
    let (left, right) = match other_side {
        Side::Right => (mono_leg, other_leg),
        Side::Left => (other_leg, mono_leg),
    };
    Ok(Pushout { set, left, right, origin })
}

fn glue_degreewise(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pushout> {
    let (a, x, y) = (&f.source, &f.target, &g.target);
    let top = match (x.dim(), y.dim()) {
        (Some(p), Some(q)) => p.max(q),
        (p, q) => p.or(q).unwrap_or(0),
    };
    let empty = x.is_empty() && y.is_empty();
    let mut levels: Vec<Vec<(Side, Simplex)>> = Vec::new();
    let mut class_of: Vec<HashMap<(Side, Simplex), usize>> = Vec::new();
    for n in 0..=top {
        if empty {
            break;
        }
        let elems: Vec<(Side, Simplex)> = x
            .all_simplices(n)
            .into_iter()
            .map(|s| (Side::Left, s))
            .chain(y.all_simplices(n).into_iter().map(|s| (Side::Right, s)))
            .collect();
        let pos: HashMap<&(Side, Simplex), usize> = elems.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut parent: Vec<usize> = (0..elems.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            let mut c = i;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for s in a.all_simplices(n) {
            let l = pos[&(Side::Left, f.apply(&s))];
            let r = pos[&(Side::Right, g.apply(&s))];
            let (rl, rr) = (find(&mut parent, l), find(&mut parent, r));
            if rl != rr {
                parent[rl.max(rr)] = rl.min(rr);
            }
        }
        let mut reps = Vec::new();
        let mut rep_index: HashMap<usize, usize> = HashMap::new();
        let mut classes = HashMap::new();
        for k in 0..elems.len() {
            let r = find(&mut parent, k);
            let idx = *rep_index.entry(r).or_insert_with(|| {
                reps.push(elems[r].clone());
                reps.len() - 1
            });
            classes.insert(elems[k].clone(), idx);
        }
        levels.push(reps);
        class_of.push(classes);
    }
    let step = |n: usize, e: &(Side, Simplex), op: &dyn Fn(&SimplicialSet, &Simplex) -> Simplex| {
        let set = if e.0 == Side::Left { x } else { y };
        let s = op(set, &e.1);
        let k = class_of[n][&(e.0, s)];
        levels[n][k].clone()
    };
    let lv = from_levels(
        &levels,
        |n, i, e| step(n - 1, e, &|s, z| s.face(z, i)),
        |n, i, e| step(n + 1, e, &|s, z| s.degen(z, i)),
        |_, e| if e.0 == Side::Left { x.show(&e.1) } else { y.show(&e.1) },
        min_trunc(x.truncation(), y.truncation()),
    )?;
    let set = Arc::new(lv.set);
    let origin = lv.origin.iter().map(|&(n, k)| levels[n][k].clone()).collect();
    let leg = |side: Side, src: &Arc<SimplicialSet>| SimplicialMap {
        source: src.clone(),
        target: set.clone(),
        images: (0..src.len())
            .map(|k| {
                let s = src.gen(k);
                let n = s.dim();
                lv.normal[n][class_of[n][&(side, s)]].clone()
            })
            .collect(),
    };
    Ok(Pushout { left: leg(Side::Left, x), right: leg(Side::Right, y), set, origin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard::{horn, standard_simplex};
    use crate::sset::iso::is_isomorphic;

    fn endpoint(x: &Arc<SimplicialSet>, v: &str) -> SimplicialMap {
        let pt = Arc::new(standard_simplex(0));
        SimplicialMap::constant(&pt, x, x.find(v).unwrap())
    }

    #[test]
    fn wedge_of_intervals_is_a_horn() {
        let d1 = Arc::new(standard_simplex(1));
        let d1b = Arc::new(standard_simplex(1));
        let f = endpoint(&d1, "1");
        let g = SimplicialMap { source: f.source.clone(), ..endpoint(&d1b, "1") };
        let p = pushout(&f, &g).unwrap();
        assert_eq!(p.set.f_vector(), vec![3, 2]);
        let h = Arc::new(horn(2, 2).unwrap());
        assert!(is_isomorphic(&p.set, &h).unwrap().is_some());
        p.left.validate().unwrap();
        p.right.validate().unwrap();
    }

    #[test]
    fn degreewise_agrees_with_mono_path() {
        let d1 = Arc::new(standard_simplex(1));
        let d1b = Arc::new(standard_simplex(1));
        let f = endpoint(&d1, "0");
        let g = SimplicialMap { source: f.source.clone(), ..endpoint(&d1b, "1") };
        let fast = pushout(&f, &g).unwrap();
        let slow = glue_degreewise(&f, &g).unwrap();
        assert_eq!(fast.set.f_vector(), slow.set.f_vector());
        assert!(is_isomorphic(&fast.set, &slow.set).unwrap().is_some());
        slow.left.validate().unwrap();
        slow.right.validate().unwrap();
    }

    #[test]
    fn collapsing_an_edge() {
        // Δ[1] ← ∂Δ[1] → Δ[0] with a non-injective right leg: a loop.
        let d1 = Arc::new(standard_simplex(1));
        let (bd, old) = d1.restrict(|k| d1.gen_dim(k) == 0).unwrap();
        let bd = Arc::new(bd);
        let incl = SimplicialMap { source: bd.clone(), target: d1.clone(), images: old.iter().map(|&k| d1.gen(k)).collect() };
        let pt = Arc::new(standard_simplex(0));
        let c = SimplicialMap::constant(&bd, &pt, 0);
        let p = pushout(&incl, &c).unwrap();
        assert_eq!(p.set.f_vector(), vec![1, 1]);
        let slow = glue_degreewise(&incl, &c).unwrap();
        assert_eq!(slow.set.f_vector(), vec![1, 1]);
    }

    #[test]
    fn coproduct_of_points() {
        let pt = Arc::new(standard_simplex(0));
        let c = coproduct(&pt, &pt).unwrap();
        assert_eq!(c.set.f_vector(), vec![2]);
        assert_eq!(c.set.names(), &["0".to_string(), "0'".to_string()]);
    }
}
