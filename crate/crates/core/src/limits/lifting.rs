use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::{
    boundary, find_map_under, horn, search_maps, standard_simplex, Gen, SimplicialMap, SimplicialSet, Simplex,
};

/// A map out of `A` that does not extend along `A ↪ B`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub dim: usize,
    pub inclusion: SimplicialMap,
    pub map: SimplicialMap,
}

impl Counterexample {
    /// Re-run the filler search; true when the map still has no extension.
    pub fn revalidate(&self) -> Result<bool> {
        self.map.validate()?;
        Ok(find_map_under(&self.inclusion, &self.map)?.is_none())
    }
}

/// Outcome of a bounded lifting search.
#[derive(Clone, Debug)]
pub enum LiftStatus {
    VerifiedUpTo(usize),
    Counterexample(Box<Counterexample>),
    NoneFound,
}

#[derive(Clone, Debug)]
pub struct LiftVerdict {
    pub status: LiftStatus,
    pub bound: usize,
}

impl LiftVerdict {
    pub fn verified(&self) -> bool {
        matches!(self.status, LiftStatus::VerifiedUpTo(_))
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.status {
            LiftStatus::Counterexample(c) => Some(c),
            _ => None,
        }
    }

    pub fn summary(&self) -> String {
        match &self.status {
            LiftStatus::VerifiedUpTo(n) => format!("verified up to {n}"),
            LiftStatus::Counterexample(c) => format!("counterexample in dimension {}", c.dim),
            LiftStatus::NoneFound => format!("none found up to {}", self.bound),
        }
    }
}

/// Every map `A → Q` satisfying the constraints.
pub(crate) fn maps_with(
    a: &Arc<SimplicialSet>,
    q: &Arc<SimplicialSet>,
    constraints: &[(Simplex, Simplex)],
) -> Result<Vec<SimplicialMap>> {
    let mut out = Vec::new();
    search_maps(a, q, constraints, &mut |imgs| {
        out.push(SimplicialMap { source: a.clone(), target: q.clone(), images: imgs.to_vec() });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The first constrained map out of `inclusion.source` with no extension along `inclusion`.
pub(crate) fn first_unfillable(
    inclusion: &SimplicialMap,
    q: &Arc<SimplicialSet>,
    constraints: &[(Simplex, Simplex)],
) -> Result<Option<SimplicialMap>> {
    for m in maps_with(&inclusion.source, q, constraints)? {
        if find_map_under(inclusion, &m)?.is_none() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn inclusion(sub: SimplicialSet, n: usize) -> Result<SimplicialMap> {
    SimplicialMap::by_names(&Arc::new(sub), &Arc::new(standard_simplex(n)))
}

fn check_bound(q: &SimplicialSet, n_max: usize) -> Result<()> {
    match q.truncation() {
        Some(t) if t < n_max => Err(Error::Parameter(format!("bound {n_max} exceeds the truncation {t}"))),
        _ => Ok(()),
    }
}

/// Inner horn fillers `Λ^k[n] → Q`, `0 < k < n ≤ n_max`.
pub fn is_quasi_category(q: &Arc<SimplicialSet>, n_max: usize) -> Result<LiftVerdict> {
    check_bound(q, n_max)?;
    for n in 2..=n_max {
        for k in 1..n {
            let incl = inclusion(horn(n, k)?, n)?;
            if let Some(map) = first_unfillable(&incl, q, &[])? {
                let c = Counterexample { dim: n, inclusion: incl, map };
                return Ok(LiftVerdict { status: LiftStatus::Counterexample(Box::new(c)), bound: n_max });
            }
        }
    }
    Ok(LiftVerdict { status: LiftStatus::VerifiedUpTo(n_max), bound: n_max })
}

/// Every `∂Δ[n] → Q` with last vertex `t` extends to `Δ[n]`, for `1 ≤ n ≤ n_max`.
pub fn is_terminal_vertex(q: &Arc<SimplicialSet>, t: Gen, n_max: usize) -> Result<LiftVerdict> {
    check_bound(q, n_max)?;
    if t >= q.len() || q.gen_dim(t) != 0 {
        return Err(Error::Parameter(format!("generator {t} is not a vertex")));
    }
    for n in 1..=n_max {
        let incl = inclusion(boundary(n)?, n)?;
        let last = incl.source.find(&n.to_string()).expect("last vertex");
        let fix = [(incl.source.gen(last), q.gen(t))];
        if let Some(map) = first_unfillable(&incl, q, &fix)? {
            let c = Counterexample { dim: n, inclusion: incl, map };
            return Ok(LiftVerdict { status: LiftStatus::Counterexample(Box::new(c)), bound: n_max });
        }
    }
    Ok(LiftVerdict { status: LiftStatus::VerifiedUpTo(n_max), bound: n_max })
}

/// All vertices passing [`is_terminal_vertex`].
pub fn terminal_vertices(q: &Arc<SimplicialSet>, n_max: usize) -> Result<Vec<Gen>> {
    let mut out = Vec::new();
    for &v in q.vertices() {
        if is_terminal_vertex(q, v, n_max)?.verified() {
            out.push(v);
        }
    }
    Ok(out)
}
