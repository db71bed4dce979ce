use std::sync::Arc;

use super::slice::weighted_slice;
use crate::error::Result;
use crate::fincat::{category_of_elements, nerve, nerve_map, nerve_truncated, weighted_cone_category, CatFunctor, Nerve, SetWeight};
use crate::sset::{is_isomorphic, SimplicialMap};
use crate::verdict::Verdict;

/// A Set-valued weight seen as the nerve of its discrete fibration `el(W) → J`.
pub struct NerveWeight {
    pub elements: Nerve,
    pub shape: Nerve,
    pub p: SimplicialMap,
}

pub fn nerve_weight(w: &SetWeight) -> Result<NerveWeight> {
    let el = category_of_elements(w)?;
    let elements = nerve(&el.source)?;
    let shape = nerve(&w.shape)?;
    let p = nerve_map(&el, &elements, &shape)?;
    Ok(NerveWeight { elements, shape, p })
}

/// `N(d) : N(J) → N(C)`, with the nerve of `C` truncated at `trunc` when it has loops.
pub fn nerve_diagram(shape: &Nerve, d: &CatFunctor, trunc: usize) -> Result<(Nerve, SimplicialMap)> {
    let target = match nerve(&d.target) {
        Ok(n) => n,
        Err(_) => nerve_truncated(&d.target, trunc.max(shape.set.dim().unwrap_or(0)))?,
    };
    let map = nerve_map(d, shape, &target)?;
    Ok((target, map))
}

/// The weighted slice of `N(d)` along `N(el W) → N(J)` against the nerve of the cone category.
pub fn nerve_specialization_check(w: &SetWeight, d: &CatFunctor, trunc: usize) -> Result<Verdict> {
    let nw = nerve_weight(w)?;
    let (_, nd) = nerve_diagram(&nw.shape, d, trunc)?;
    let slice = weighted_slice(&nw.p, &nd, trunc)?;
    let cones = weighted_cone_category(w, d)?;
    let nc = nerve_truncated(&Arc::new(cones.category), trunc)?;
    let iso = is_isomorphic(slice.set(), &nc.set)?;
    Ok(Verdict::new(
        "weighted slice of a nerve is the nerve of the cone category",
        iso.is_some(),
        format!("f-vectors {:?} and {:?}", slice.set().f_vector(), nc.set.f_vector()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;

    #[test]
    fn terminal_weight_over_an_ordinal() {
        let c = Arc::new(FinCategory::ordinal(2));
        let j = Arc::new(FinCategory::ordinal(1));
        let up = c.find_morphism("0≤2").unwrap();
        let d = CatFunctor::new(j.clone(), c.clone(), vec![0, 2], vec![0, 2, up]).unwrap();
        let w = SetWeight::terminal(&j);
        let v = nerve_specialization_check(&w, &d, 2).unwrap();
        assert!(v.holds, "{v}");
    }
}
