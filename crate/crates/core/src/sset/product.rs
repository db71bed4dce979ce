//! Products via shuffles, and the other finite limits computed degreewise.

use std::collections::HashMap;
use std::sync::Arc;

use super::levels::from_levels;
use super::map::SimplicialMap;
use super::set::{Builder, SimplicialSet};
use super::simplex::{Gen, Simplex};
use crate::error::{Error, Result};

type Part = (Gen, Gen, Vec<u8>, Vec<u8>);

/// `X × Y` with its projections.
pub struct Product {
    pub set: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
    index: HashMap<Part, Gen>,
}

impl Product {
    /// The simplex `(x, y)` in normal form; both must have the same dimension.
    pub fn pair(&self, x: &Simplex, y: &Simplex) -> Simplex {
        debug_assert_eq!(x.dim(), y.dim());
        pair_in(&self.index, x, y)
    }

    pub fn components(&self, z: &Simplex) -> (Simplex, Simplex) {
        (self.left.apply(z), self.right.apply(z))
    }

    /// The map `Z → X × Y` with components `f` and `g`.
    pub fn pair_map(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        if !Arc::ptr_eq(&f.source, &g.source)
            || !Arc::ptr_eq(&f.target, &self.left.target)
            || !Arc::ptr_eq(&g.target, &self.right.target)
        {
            return Err(Error::Composition("pairing maps with mismatched ends".into()));
        }
        let images = f.images.iter().zip(&g.images).map(|(x, y)| self.pair(x, y)).collect();
        Ok(SimplicialMap { source: f.source.clone(), target: self.set.clone(), images })
    }
}

/// `u × v : X × Y → X' × Y'`.
pub fn product_map(
    from: &Product,
    to: &Product,
    u: &SimplicialMap,
    v: &SimplicialMap,
) -> Result<SimplicialMap> {
    let a = from.left.then(u)?;
    let b = from.right.then(v)?;
    to.pair_map(&a, &b)
}

/// Shuffle patterns: for each step, whether the left, the right, or both coordinates advance.
fn shuffles(p: usize, q: usize, r: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut out = Vec::new();
    fn go(
        p: usize,
        q: usize,
        left: usize,
        a: &mut Vec<u8>,
        b: &mut Vec<u8>,
        out: &mut Vec<(Vec<u8>, Vec<u8>)>,
    ) {
        if left == 0 {
            if *a.last().unwrap() as usize == p && *b.last().unwrap() as usize == q {
                out.push((a.clone(), b.clone()));
            }
            return;
        }
        let (x, y) = (*a.last().unwrap(), *b.last().unwrap());
        for (dx, dy) in [(1u8, 1u8), (1, 0), (0, 1)] {
            if (x + dx) as usize > p || (y + dy) as usize > q {
                continue;
            }
            a.push(x + dx);
            b.push(y + dy);
            go(p, q, left - 1, a, b, out);
            a.pop();
            b.pop();
        }
    }
    go(p, q, r, &mut vec![0], &mut vec![0], &mut out);
    out
}

fn digits(v: &[u8]) -> String {
    v.iter().map(|d| d.to_string()).collect()
}

pub fn product(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<Product> {
    let mut b = Builder::new();
    let mut index: HashMap<Part, Gen> = HashMap::new();
    let mut parts: Vec<Part> = Vec::new();
    let (dx, dy) = (x.dim(), y.dim());
    let top = match (dx, dy) {
        (Some(p), Some(q)) => p + q,
        _ => 0,
    };
    if let (Some(dx), Some(dy)) = (dx, dy) {
        for r in 0..=top {
            for p in 0..=r.min(dx) {
                for q in 0..=r.min(dy) {
                    if p + q < r {
                        continue;
                    }
                    let pats = shuffles(p, q, r);
                    for &a in x.generators(p) {
                        for &c in y.generators(q) {
                            for (alpha, beta) in &pats {
                                let name = if r == 0 || (r == p && r == q) {
                                    format!("({},{})", x.name(a), y.name(c))
                                } else {
                                    format!(
                                        "({},{}){{{}|{}}}",
                                        x.name(a),
                                        y.name(c),
                                        digits(alpha),
                                        digits(beta)
                                    )
                                };
                                let faces = if r == 0 {
                                    Vec::new()
                                } else {
                                    let xs = Simplex { base: a, surj: alpha.clone() };
                                    let ys = Simplex { base: c, surj: beta.clone() };
                                    (0..=r)
                                        .map(|i| {
                                            pair_in(&index, &x.face(&xs, i), &y.face(&ys, i))
                                        })
                                        .collect()
                                };
                                let g = b.add_fresh(name, faces)?;
                                let part = (a, c, alpha.clone(), beta.clone());
                                index.insert(part.clone(), g);
                                parts.push(part);
                            }
                        }
                    }
                }
            }
        }
    }
    b.truncation = min_trunc(x.truncation(), y.truncation());
    let set = Arc::new(b.build()?);
    let left = SimplicialMap {
        source: set.clone(),
        target: x.clone(),
        images: parts.iter().map(|(a, _, al, _)| Simplex { base: *a, surj: al.clone() }).collect(),
    };
    let right = SimplicialMap {
        source: set.clone(),
        target: y.clone(),
        images: parts.iter().map(|(_, c, _, be)| Simplex { base: *c, surj: be.clone() }).collect(),
    };
    Ok(Product { set, left, right, index })
}

fn pair_in(index: &HashMap<Part, Gen>, x: &Simplex, y: &Simplex) -> Simplex {
    let n = x.dim();
    let mut alpha = vec![x.surj[0]];
    let mut beta = vec![y.surj[0]];
    let mut eps = vec![0u8];
    for j in 1..=n {
        if x.surj[j] != x.surj[j - 1] || y.surj[j] != y.surj[j - 1] {
            alpha.push(x.surj[j]);
            beta.push(y.surj[j]);
        }
        eps.push((alpha.len() - 1) as u8);
    }
    Simplex { base: index[&(x.base, y.base, alpha, beta)], surj: eps }
}

pub(crate) fn min_trunc(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Pullback `X ×_B Y` with its legs.
pub struct Pullback {
    pub set: Arc<SimplicialSet>,
    pub left: SimplicialMap,
    pub right: SimplicialMap,
}

/// Degreewise pullback; levels run up to `dim X + dim Y`, capped by any truncation.
pub fn pullback(f: &SimplicialMap, g: &SimplicialMap) -> Result<Pullback> {
    if !Arc::ptr_eq(&f.target, &g.target) {
        return Err(Error::Composition("pullback legs have different targets".into()));
    }
    let (x, y) = (&f.source, &g.source);
    let trunc = min_trunc(min_trunc(x.truncation(), y.truncation()), f.target.truncation());
    let levels: Vec<Vec<(Simplex, Simplex)>> = match (x.dim(), y.dim()) {
        (Some(p), Some(q)) => {
            let top = trunc.map_or(p + q, |t| t.min(p + q));
            (0..=top)
                .map(|n| {
                    let mut by_image: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
                    for t in y.all_simplices(n) {
                        by_image.entry(g.apply(&t)).or_default().push(t);
                    }
                    let mut out = Vec::new();
                    for s in x.all_simplices(n) {
                        if let Some(ts) = by_image.get(&f.apply(&s)) {
                            out.extend(ts.iter().map(|t| (s.clone(), t.clone())));
                        }
                    }
                    out
                })
                .collect()
        }
        _ => Vec::new(),
    };
    let lv = from_levels(
        &levels,
        |_, i, (s, t)| (x.face(s, i), y.face(t, i)),
        |_, i, (s, t)| (x.degen(s, i), y.degen(t, i)),
        |_, (s, t)| format!("({},{})", x.show(s), y.show(t)),
        trunc,
    )?;
    let set = Arc::new(lv.set);
    let left_images = lv.origin.iter().map(|&(n, k)| levels[n][k].0.clone()).collect();
    let right_images = lv.origin.iter().map(|&(n, k)| levels[n][k].1.clone()).collect();
    Ok(Pullback {
        left: SimplicialMap { source: set.clone(), target: x.clone(), images: left_images },
        right: SimplicialMap { source: set.clone(), target: y.clone(), images: right_images },
        set,
    })
}

/// Equalizer of a parallel pair, as the sub-simplicial set where they agree.
pub fn equalizer(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Arc<SimplicialSet>, SimplicialMap)> {
    if !Arc::ptr_eq(&f.source, &g.source) || !Arc::ptr_eq(&f.target, &g.target) {
        return Err(Error::Composition("equalizer of a non-parallel pair".into()));
    }
    let x = &f.source;
    let (set, old) = x.restrict(|k| f.images[k] == g.images[k])?;
    let set = Arc::new(set.with_truncation(x.truncation()));
    let images = old.iter().map(|&k| x.gen(k)).collect();
    let incl = SimplicialMap { source: set.clone(), target: x.clone(), images };
    Ok((set, incl))
}
