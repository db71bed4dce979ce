//! The invariant suite behind `wlim check`.
//!
//! Each group runs the library's own comparisons on the shared fixtures, at sizes
//! small enough to finish in seconds.

use std::sync::Arc;

use anyhow::bail;
use wlim_core::enriched::{cospan_cofibrant_weight, weighted_end, SSetFunctor};
use wlim_core::fincat::{nerve, weighted_limit as cat_limit, FinCategory};
use wlim_core::fixtures::{categories, cone_fixtures, end_fixtures, join_fixtures, slice_fixtures};
use wlim_core::joins::{fat_join, fat_to_neat, join, weighted_fat_join, weighted_join};
use wlim_core::limits::{
    conical_reduction_check, fat_neat_check, ho_category, is_quasi_category, is_terminal_vertex, weighted_limit,
};
use wlim_core::necklaces::{computation1_check, mainfact_check, CubeMode, Endpoint};
use wlim_core::slices::{fat_slice_as_comma, nerve_specialization_check};
use wlim_core::sset::{exponential, is_isomorphic, pullback, standard_simplex, SimplicialMap};
use wlim_core::verdict::Verdict;

use crate::doc::{parse, to_json, CategoryDoc, SSetDoc};

pub const GROUPS: [&str; 6] = ["documents", "joins", "necklaces", "slices", "limits", "enriched"];

type Group = anyhow::Result<Vec<Verdict>>;

pub fn run(name: &str, trunc: usize, max_dim: usize) -> anyhow::Result<Vec<(String, Vec<Verdict>)>> {
    let chosen: Vec<&str> = match name {
        "all" => GROUPS.to_vec(),
        g if GROUPS.contains(&g) => vec![g],
        _ => bail!("unknown suite `{name}`; expected `all` or one of {}", GROUPS.join(", ")),
    };
    chosen
        .into_iter()
        .map(|g| {
            let vs = match g {
                "documents" => documents(),
                "joins" => joins(),
                "necklaces" => necklaces(),
                "slices" => slices(trunc, max_dim),
                "limits" => limits(trunc, max_dim),
                _ => enriched(trunc),
            }?;
            Ok((g.to_string(), vs))
        })
        .collect()
}

fn documents() -> Group {
    let mut out = Vec::new();
    for f in join_fixtures(25)? {
        let doc = SSetDoc::from_set(&f.i);
        let again = SSetDoc::from_set(&parse::<SSetDoc>(&to_json(&doc))?.to_set()?);
        out.push(Verdict::new(format!("{} round-trips", f.name), again == doc, "left factor"));
    }
    for (name, c) in categories() {
        let doc = CategoryDoc::from_category(&c);
        let again = CategoryDoc::from_category(&parse::<CategoryDoc>(&to_json(&doc))?.to_category()?);
        out.push(Verdict::new(format!("{name} round-trips"), again == doc, "category"));
    }
    Ok(out)
}

fn iso(claim: String, x: &Arc<wlim_core::sset::SimplicialSet>, y: &Arc<wlim_core::sset::SimplicialSet>) -> anyhow::Result<Verdict> {
    let found = is_isomorphic(x, y)?.is_some();
    Ok(Verdict::new(claim, found, format!("f-vectors {:?} and {:?}", x.f_vector(), y.f_vector())))
}

fn joins() -> Group {
    let mut out = Vec::new();
    for m in 0..=1 {
        for n in 0..=1 {
            let j = join(&Arc::new(standard_simplex(m)), &Arc::new(standard_simplex(n)))?;
            out.push(iso(format!("Δ[{m}] ⋆ Δ[{n}] ≅ Δ[{}]", m + n + 1), &j.set, &Arc::new(standard_simplex(m + n + 1)))?);
        }
    }
    for f in join_fixtures(14)? {
        let w = weighted_join(&f.i, &f.p)?;
        if f.p.is_isomorphism() {
            let plain = join(&f.i, &f.p.target)?;
            out.push(iso(format!("{}: identity weight gives the join", f.name), &w.set, &plain.set)?);
        }
        let fat = weighted_fat_join(&f.i, &f.p)?;
        let c = fat_to_neat(&fat, &w)?;
        let onto = (0..w.set.len()).all(|g| c.images.iter().any(|s| s.base == g && s.is_nondegenerate()));
        out.push(Verdict::new(format!("{}: fat to neat is onto", f.name), onto, format!("{:?} → {:?}", fat.set.f_vector(), w.set.f_vector())));
    }
    let pt = Arc::new(standard_simplex(0));
    out.push(iso("Δ[0] ⋄ Δ[0] ≅ Δ[1]".into(), &fat_join(&pt, &pt)?.set, &Arc::new(standard_simplex(1)))?);
    Ok(out)
}

fn necklaces() -> Group {
    let mut out = Vec::new();
    let pt = Arc::new(standard_simplex(0));
    let id = SimplicialMap::identity(&pt);
    for n in 1..=3 {
        out.push(computation1_check(&id, n, CubeMode::Full, Endpoint::Last, 2)?.verdict);
        out.push(computation1_check(&id, n, CubeMode::Full, Endpoint::Shape(0), 2)?.verdict);
    }
    for f in join_fixtures(12)? {
        out.push(mainfact_check(&f.i, &f.p, 2)?);
    }
    Ok(out)
}

fn slices(trunc: usize, max_dim: usize) -> Group {
    let mut out = Vec::new();
    for s in slice_fixtures()?.iter().rev().take(3) {
        let mut v = conical_reduction_check(&s.p, &s.d, trunc, max_dim.min(2))?;
        v.claim = format!("{}: {}", s.name, v.claim);
        out.push(v);
        let mut v = fat_neat_check(&s.p, &s.d, trunc.max(2))?;
        v.claim = format!("{}: {}", s.name, v.claim);
        out.push(v);
        let c = fat_slice_as_comma(&s.p, &s.d, trunc)?;
        out.push(Verdict::new(
            format!("{}: fat slice is the comma object", s.name),
            c.witness.is_some(),
            format!("f-vectors {:?} and {:?}", c.slice.f_vector(), c.comma.f_vector()),
        ));
    }
    for f in cone_fixtures().iter().take(4) {
        let mut v = nerve_specialization_check(&f.weight, &f.diagram, trunc)?;
        v.claim = format!("{}: {}", f.name, v.claim);
        out.push(v);
    }
    Ok(out)
}

fn limits(trunc: usize, max_dim: usize) -> Group {
    let mut out = Vec::new();
    for (name, c) in categories().into_iter().take(5) {
        let n = nerve(&c)?;
        let q = is_quasi_category(&n.set, max_dim)?;
        out.push(Verdict::new(format!("N({name}) is a quasi-category"), q.verified(), q.summary()));
        let ho = ho_category(&n.set)?;
        out.push(Verdict::new(
            format!("ho N({name}) has the arrows of {name}"),
            ho.category.morphism_count() == c.morphism_count(),
            format!("{} and {}", ho.category.morphism_count(), c.morphism_count()),
        ));
        for o in 0..c.object_count() {
            let t = is_terminal_vertex(&n.set, n.vertex(o), max_dim)?.verified();
            let expected = c.terminal_object() == Some(o);
            out.push(Verdict::new(
                format!("{} terminal in N({name})", c.object_name(o)),
                t == expected,
                format!("lifting says {t}, the category says {expected}"),
            ));
        }
    }
    for (f, s) in cone_fixtures().iter().zip(&slice_fixtures()?) {
        let lim = weighted_limit(&s.p, &s.d, trunc, max_dim.min(trunc))?;
        let expected = cat_limit(&f.weight, &f.diagram)?.map(|c| f.diagram.target.object_name(c.apex).to_string());
        let found: Vec<&str> = lim.apexes.iter().map(|&v| s.d.target.name(v)).collect();
        let ok = lim.agree
            && match &expected {
                Some(a) => found.contains(&a.as_str()),
                None => found.is_empty(),
            };
        out.push(Verdict::new(format!("{}: weighted limit", f.name), ok, format!("apexes {found:?}, expected {expected:?}")));
    }
    Ok(out)
}

fn enriched(trunc: usize) -> Group {
    let mut out = Vec::new();
    let (_, v) = cospan_cofibrant_weight(&Arc::new(FinCategory::cospan()))?;
    out.push(v);
    for f in end_fixtures()? {
        let end = weighted_end(&f.weight, &f.diagram, trunc)?;
        let c = &f.weight.shape;
        if c.object_count() == 1 {
            let exp = exponential(&f.diagram.values[0], &f.weight.values[0], trunc)?;
            out.push(iso(format!("{}: end is the cotensor", f.name), &end.set, exp.set())?);
        } else if f.name.starts_with("point") {
            let pb = pullback(&f.diagram.maps[3], &f.diagram.maps[4])?;
            let pb = Arc::new(pb.set.skeleton(trunc).with_truncation(Some(trunc)));
            out.push(iso(format!("{}: end is the pullback", f.name), &end.set, &pb)?);
        } else {
            let point = SSetFunctor::constant(c, &Arc::new(standard_simplex(0)));
            let base = weighted_end(&point, &f.diagram, trunc)?;
            let vertices = end.set.f_vector().first().copied().unwrap_or(0);
            out.push(Verdict::new(
                format!("{}: end is nonempty over a nonempty pullback", f.name),
                (base.set.f_vector().first().copied().unwrap_or(0) > 0) <= (vertices > 0),
                format!("{vertices} vertices"),
            ));
        }
    }
    Ok(out)
}
