use std::collections::HashMap;
use std::sync::Arc;

use super::category::{CatFunctor, FinCategory, Mor, Obj};
use crate::error::{Error, Result};
use crate::sset::{Builder, SimplicialMap, SimplicialSet, Simplex};

/// The nerve of a finite category, remembering which chain each generator is.
#[derive(Clone)]
pub struct Nerve {
    pub category: Arc<FinCategory>,
    pub set: Arc<SimplicialSet>,
    /// Non-identity chains `(x0, [f1, ..., fn])`, indexed by generator.
    pub chains: Vec<(Obj, Vec<Mor>)>,
    index: HashMap<(Obj, Vec<Mor>), usize>,
}

impl Nerve {
    /// The normal form of an arbitrary composable chain starting at `x0`.
    pub fn simplex(&self, x0: Obj, chain: &[Mor]) -> Simplex {
        let c = &self.category;
        let mut start = x0;
        let mut kept = Vec::new();
        let mut surj = vec![0u8];
        for &f in chain {
            if c.is_identity(f) {
                surj.push(kept.len() as u8);
            } else {
                if kept.is_empty() {
                    start = c.dom(f);
                }
                kept.push(f);
                surj.push(kept.len() as u8);
            }
        }
        let base = self.index[&(start, kept)];
        Simplex { base, surj }
    }

    /// The chain underlying an arbitrary simplex.
    pub fn chain_of(&self, s: &Simplex) -> (Obj, Vec<Mor>) {
        let (x0, fs) = &self.chains[s.base];
        let c = &self.category;
        let objects: Vec<Obj> = std::iter::once(*x0).chain(fs.iter().map(|&f| c.cod(f))).collect();
        let chain = s
            .surj
            .windows(2)
            .map(|w| if w[0] == w[1] { c.identity(objects[w[0] as usize]) } else { fs[w[0] as usize] })
            .collect();
        (objects[s.surj[0] as usize], chain)
    }

    pub fn vertex(&self, o: Obj) -> usize {
        self.index[&(o, Vec::new())]
    }
}

fn chain_name(c: &FinCategory, x0: Obj, fs: &[Mor]) -> String {
    if fs.is_empty() {
        c.object_name(x0).to_string()
    } else {
        fs.iter().map(|&f| c.morphism_name(f)).collect::<Vec<_>>().join("|")
    }
}

/// The nerve, which must be finite: no chain of non-identity arrows may revisit an object.
pub fn nerve(c: &Arc<FinCategory>) -> Result<Nerve> {
    build(c, None)
}

/// The nerve truncated at dimension `n`; needed when `C` has non-identity loops.
pub fn nerve_truncated(c: &Arc<FinCategory>, n: usize) -> Result<Nerve> {
    build(c, Some(n))
}

fn build(c: &Arc<FinCategory>, trunc: Option<usize>) -> Result<Nerve> {
    let no = c.object_count();
    let mut levels: Vec<Vec<(Obj, Vec<Mor>)>> = vec![(0..no).map(|o| (o, Vec::new())).collect()];
    loop {
        let n = levels.len();
        if trunc.is_some_and(|t| n > t) {
            break;
        }
        let mut next = Vec::new();
        for (x0, fs) in &levels[n - 1] {
            let end = fs.last().map_or(*x0, |&f| c.cod(f));
            for g in c.out_of(end) {
                if !c.is_identity(g) {
                    let mut ext = fs.clone();
                    ext.push(g);
                    next.push((*x0, ext));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if trunc.is_none() && n >= no {
            return Err(Error::Infinite(
                "the nerve has non-degenerate simplices in every dimension; truncate it".into(),
            ));
        }
        levels.push(next);
    }
    let mut nerve = Nerve {
        category: c.clone(),
        set: Arc::new(SimplicialSet::empty()),
        chains: Vec::new(),
        index: HashMap::new(),
    };
    let mut b = Builder::new();
    b.truncation = trunc;
    for level in &levels {
        for (x0, fs) in level {
            let objects: Vec<Obj> = std::iter::once(*x0).chain(fs.iter().map(|&f| c.cod(f))).collect();
            let faces = (0..=fs.len())
                .filter(|_| !fs.is_empty())
                .map(|i| {
                    let (start, chain) = if i == 0 {
                        (objects[1], fs[1..].to_vec())
                    } else if i == fs.len() {
                        (*x0, fs[..i - 1].to_vec())
                    } else {
                        let mut ch = fs[..i - 1].to_vec();
                        ch.push(c.compose(fs[i], fs[i - 1]));
                        ch.extend_from_slice(&fs[i + 1..]);
                        (*x0, ch)
                    };
                    nerve.simplex(start, &chain)
                })
                .collect();
            let g = b.add_fresh(chain_name(c, *x0, fs), faces)?;
            nerve.index.insert((*x0, fs.clone()), g);
            nerve.chains.push((*x0, fs.clone()));
        }
    }
    nerve.set = Arc::new(b.build()?);
    Ok(nerve)
}

/// `N(F) : N(C) → N(D)`.
pub fn nerve_map(f: &CatFunctor, source: &Nerve, target: &Nerve) -> Result<SimplicialMap> {
    if !Arc::ptr_eq(&f.source, &source.category) || !Arc::ptr_eq(&f.target, &target.category) {
        return Err(Error::Composition("nerves do not belong to the functor".into()));
    }
    if let (Some(t), Some(d)) = (target.set.truncation(), source.set.dim()) {
        if d > t {
            return Err(Error::Parameter("target nerve is truncated below the source".into()));
        }
    }
    let images = source
        .chains
        .iter()
        .map(|(x0, fs)| {
            let chain: Vec<Mor> = fs.iter().map(|&m| f.morphisms[m]).collect();
            target.simplex(f.objects[*x0], &chain)
        })
        .collect();
    SimplicialMap::new(source.set.clone(), target.set.clone(), images)
}
