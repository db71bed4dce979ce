use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::{pushout, Builder, Gen, Pushout, Side, SimplicialMap, SimplicialSet, Simplex};

/// Where a generator of a join comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JoinPart {
    Left(Gen),
    Right(Gen),
    /// The join `a ⋆ b` of a generator of the left and one of the right factor.
    Mixed(Gen, Gen),
}

/// `I ⋆ J` with its two inclusions.
pub struct Join {
    pub set: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    pub origin: Vec<JoinPart>,
    mixed: HashMap<(Gen, Gen), Gen>,
}

impl Join {
    /// `a ⋆ b` for simplices `a` of `I` and `b` of `J`, either possibly degenerate.
    pub fn join_simplex(&self, a: &Simplex, b: &Simplex) -> Simplex {
        let base = self.mixed[&(a.base, b.base)];
        let shift = a.base_dim() as u8 + 1;
        let surj = a.surj.iter().copied().chain(b.surj.iter().map(|&k| k + shift)).collect();
        Simplex { base, surj }
    }

    /// Like [`Join::join_simplex`], where `None` stands for the empty simplex.
    pub fn join_parts(&self, a: Option<&Simplex>, b: Option<&Simplex>) -> Option<Simplex> {
        match (a, b) {
            (Some(a), Some(b)) => Some(self.join_simplex(a, b)),
            (Some(a), None) => Some(self.left.apply(a)),
            (None, Some(b)) => Some(self.right.apply(b)),
            (None, None) => None,
        }
    }

    pub fn mixed(&self, a: Gen, b: Gen) -> Gen {
        self.mixed[&(a, b)]
    }
}

pub fn join(i: &Arc<SimplicialSet>, j: &Arc<SimplicialSet>) -> Result<Join> {
    let mut b = Builder::new();
    let mut origin = Vec::new();
    for g in 0..i.len() {
        b.add_fresh(i.name(g), i.faces(g).to_vec())?;
        origin.push(JoinPart::Left(g));
    }
    let off = i.len();
    for g in 0..j.len() {
        let faces = j
            .faces(g)
            .iter()
            .map(|f| Simplex { base: f.base + off, surj: f.surj.clone() })
            .collect();
        b.add_fresh(j.name(g), faces)?;
        origin.push(JoinPart::Right(g));
    }
    let mut pairs: Vec<(Gen, Gen)> = (0..i.len()).flat_map(|a| (0..j.len()).map(move |c| (a, c))).collect();
    pairs.sort_by_key(|&(a, c)| (i.gen_dim(a) + j.gen_dim(c), a, c));
    let mut mixed: HashMap<(Gen, Gen), Gen> = HashMap::new();
    let shifted = |s: &Simplex, off: usize| Simplex { base: s.base + off, surj: s.surj.clone() };
    for (a, c) in pairs {
        let (p, q) = (i.gen_dim(a), j.gen_dim(c));
        let join_in = |x: &Simplex, y: &Simplex, mixed: &HashMap<(Gen, Gen), Gen>| {
            let shift = x.base_dim() as u8 + 1;
            Simplex {
                base: mixed[&(x.base, y.base)],
                surj: x.surj.iter().copied().chain(y.surj.iter().map(|&k| k + shift)).collect(),
            }
        };
        let mut faces = Vec::with_capacity(p + q + 2);
        for k in 0..=p {
            if p == 0 {
                faces.push(Simplex::generator(off + c, q));
            } else {
                faces.push(join_in(&i.faces(a)[k], &j.gen(c), &mixed));
            }
        }
        for k in 0..=q {
            if q == 0 {
                faces.push(shifted(&i.gen(a), 0));
            } else {
                faces.push(join_in(&i.gen(a), &j.faces(c)[k], &mixed));
            }
        }
        let g = b.add_fresh(format!("{}*{}", i.name(a), j.name(c)), faces)?;
        mixed.insert((a, c), g);
        origin.push(JoinPart::Mixed(a, c));
    }
    let set = Arc::new(b.build()?);
    let left = SimplicialMap { source: i.clone(), target: set.clone(), images: (0..i.len()).map(|g| i.gen(g)).collect() };
    let right = SimplicialMap {
        source: j.clone(),
        target: set.clone(),
        images: (0..j.len()).map(|g| shifted(&j.gen(g), off)).collect(),
    };
    Ok(Join { set, left, right, origin, mixed })
}

/// `u ⋆ v : I ⋆ J → I' ⋆ J'`.
pub fn join_map(from: &Join, to: &Join, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap> {
    if !Arc::ptr_eq(&u.source, &from.left.source)
        || !Arc::ptr_eq(&u.target, &to.left.source)
        || !Arc::ptr_eq(&v.source, &from.right.source)
        || !Arc::ptr_eq(&v.target, &to.right.source)
    {
        return Err(Error::Composition("maps do not match the joins".into()));
    }
    let images = from
        .origin
        .iter()
        .map(|part| match *part {
            JoinPart::Left(g) => to.left.apply(u.image(g)),
            JoinPart::Right(g) => to.right.apply(v.image(g)),
            JoinPart::Mixed(a, c) => to.join_simplex(u.image(a), v.image(c)),
        })
        .collect();
    SimplicialMap::new(from.set.clone(), to.set.clone(), images)
}

/// `I ⋆ᵖ J = (I ⋆ J̃) ⊔_J̃ J` for a weight `p : J̃ → J`.
pub struct WeightedJoin {
    pub set: Arc<SimplicialSet>,
    pub join: Join,
    pub pushout: Pushout,
    pub weight: SimplicialMap,
    /// `I → I ⋆ᵖ J`.
    pub left: SimplicialMap,
    /// `J → I ⋆ᵖ J`.
    pub right: SimplicialMap,
    /// Origins in terms of `I`, `J` and, for mixed generators, `I × J̃`.
    pub origin: Vec<JoinPart>,
}

impl WeightedJoin {
    /// The image of `a ⋆ b` for `a` in `I` and `b` in `J̃`.
    pub fn mixed_simplex(&self, a: &Simplex, b: &Simplex) -> Simplex {
        self.pushout.left.apply(&self.join.join_simplex(a, b))
    }

    pub fn mixed_parts(&self, a: Option<&Simplex>, b: Option<&Simplex>) -> Option<Simplex> {
        match (a, b) {
            (Some(a), Some(b)) => Some(self.mixed_simplex(a, b)),
            (Some(a), None) => Some(self.left.apply(a)),
            (None, Some(b)) => Some(self.right.apply(&self.weight.apply(b))),
            (None, None) => None,
        }
    }

    pub fn shape(&self) -> &Arc<SimplicialSet> {
        &self.weight.target
    }

    pub fn left_factor(&self) -> &Arc<SimplicialSet> {
        &self.left.source
    }
}

pub fn weighted_join(i: &Arc<SimplicialSet>, p: &SimplicialMap) -> Result<WeightedJoin> {
    p.validate()?;
    let join = join(i, &p.source)?;
    let po = pushout(&join.right, p)?;
    let origin = po
        .origin
        .iter()
        .map(|(side, s)| match side {
            Side::Left => join.origin[s.base],
            Side::Right => JoinPart::Right(s.base),
        })
        .collect();
    let left = join.left.then(&po.left)?;
    Ok(WeightedJoin {
        set: po.set.clone(),
        right: po.right.clone(),
        left,
        origin,
        weight: p.clone(),
        join,
        pushout: po,
    })
}

/// Functoriality in the first variable: `u ⋆ᵖ J` for `u : I → I'`.
pub fn weighted_join_map(from: &WeightedJoin, to: &WeightedJoin, u: &SimplicialMap) -> Result<SimplicialMap> {
    if from.weight != to.weight {
        return Err(Error::Composition("weighted joins use different weights".into()));
    }
    let tilde = SimplicialMap::identity(&from.weight.source);
    let j = SimplicialMap::identity(from.shape());
    let on_join = join_map(&from.join, &to.join, u, &tilde)?;
    from.pushout.induced(&to.pushout, &on_join, &j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, coproduct, horn, is_isomorphic, standard_simplex};

    fn d(n: usize) -> Arc<SimplicialSet> {
        Arc::new(standard_simplex(n))
    }

    #[test]
    fn join_of_simplices_is_a_simplex() {
        for (m, n) in [(0, 0), (0, 1), (1, 1), (2, 0), (1, 2)] {
            let j = join(&d(m), &d(n)).unwrap();
            assert!(is_isomorphic(&j.set, &d(m + n + 1)).unwrap().is_some(), "Δ[{m}] ⋆ Δ[{n}]");
            j.left.validate().unwrap();
            j.right.validate().unwrap();
        }
    }

    #[test]
    fn join_with_empty() {
        let e = Arc::new(SimplicialSet::empty());
        let h = Arc::new(horn(2, 2).unwrap());
        assert!(is_isomorphic(&join(&e, &h).unwrap().set, &h).unwrap().is_some());
        assert!(is_isomorphic(&join(&h, &e).unwrap().set, &h).unwrap().is_some());
    }

    #[test]
    fn cone_on_a_horn() {
        let h = Arc::new(horn(2, 2).unwrap());
        assert_eq!(join(&d(0), &h).unwrap().set.f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn identity_weight_is_the_join() {
        let h = Arc::new(horn(2, 1).unwrap());
        let w = weighted_join(&d(1), &SimplicialMap::identity(&h)).unwrap();
        let j = join(&d(1), &h).unwrap();
        assert!(is_isomorphic(&w.set, &j.set).unwrap().is_some());
    }

    #[test]
    fn empty_weight_is_the_coproduct() {
        let h = Arc::new(boundary(2).unwrap());
        let e = Arc::new(SimplicialSet::empty());
        let w = weighted_join(&d(1), &SimplicialMap::from_empty(&e, &h).unwrap()).unwrap();
        let c = coproduct(&d(1), &h).unwrap();
        assert!(is_isomorphic(&w.set, &c.set).unwrap().is_some());
    }

    #[test]
    fn functorial_in_the_first_variable() {
        let h = Arc::new(horn(2, 2).unwrap());
        let p = SimplicialMap::identity(&h);
        let (a, b, c) = (d(0), d(1), d(2));
        let (wa, wb, wc) = (
            weighted_join(&a, &p).unwrap(),
            weighted_join(&b, &p).unwrap(),
            weighted_join(&c, &p).unwrap(),
        );
        let u = crate::sset::standard_map(&a, &b, &[1]);
        let v = crate::sset::standard_map(&b, &c, &[0, 2]);
        let uv = u.then(&v).unwrap();
        let lhs = weighted_join_map(&wa, &wb, &u).unwrap().then(&weighted_join_map(&wb, &wc, &v).unwrap()).unwrap();
        let rhs = weighted_join_map(&wa, &wc, &uv).unwrap();
        assert_eq!(lhs, rhs);
    }
}
