//! Acceptance gate: one line per criterion, each with its own time limit.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{brute_necklaces, cube_colimit_counts, flagged_counts, join_level, level_size};
use wlim_core::enriched::{homotopy_pullback, weighted_cone_count, weighted_end, WeightChoice};
use wlim_core::fincat::{nerve, rectify, weighted_limit as cone_search, weighted_limit_via_elements, CatFunctor, FinCategory, SetWeight};
use wlim_core::fixtures::{
    boolean_lattice, collapsed_wedge, cone_fixtures, end_fixtures, join_fixtures, lattice_cospan, slice_fixtures, split_cospan,
    split_cospan_diagram, two_leg_weight, wedge, weights,
};
use wlim_core::joins::weighted_join;
use wlim_core::limits::{conical_reduction_check, fat_neat_check, weighted_limit};
use wlim_core::necklaces::{
    computation1_check, cofibrant_weight, full_inclusions, mainfact_check, mapping_space, pullback_form, Cones, CubeMode, Endpoint,
};
use wlim_core::slices::{comma, fat_slice_as_comma, nerve_diagram, nerve_specialization_check, nerve_weight};
use wlim_core::sset::{
    boundary, cube, cube_boundary, horn, is_isomorphic, standard_simplex, Builder, Simplex, SimplicialMap, SimplicialSet,
};

type Outcome = Result<String, String>;
type Check = Box<dyn FnOnce(&mut Vec<String>) -> Outcome>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: wlim_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn shared(x: SimplicialSet) -> Arc<SimplicialSet> {
    Arc::new(x)
}

fn join_levels() -> Outcome {
    let fixtures = lib(join_fixtures(25))?;
    ensure(fixtures.len() >= 20, || format!("only {} fixtures", fixtures.len()))?;
    let mut levels = 0;
    for f in &fixtures {
        let w = lib(weighted_join(&f.i, &f.p))?;
        let top = f.i.dim().map_or(0, |d| d + 1) + f.p.source.dim().map_or(0, |d| d + 1) + f.p.target.dim().unwrap_or(0) + 1;
        for n in 0..=top {
            let (got, want) = (level_size(&w.set, n), join_level(&f.i, &f.p, n));
            ensure(got == want, || format!("{}: level {n} has {got}, formula gives {want}", f.name))?;
            levels += 1;
        }
    }
    Ok(format!("{} fixtures, {levels} levels", fixtures.len()))
}

fn product_and_pullback() -> Outcome {
    let lattice = boolean_lattice();
    let split = split_cospan();
    let cases: [(&str, CatFunctor, bool, &str); 4] = [
        ("lattice, two legs", lattice_cospan(&lattice), true, "∅"),
        ("lattice, terminal", lattice_cospan(&lattice), false, "∅"),
        ("split, two legs", split_cospan_diagram(&split), true, "p"),
        ("split, terminal", split_cospan_diagram(&split), false, "q"),
    ];
    for (name, d, two_legs, want) in cases {
        let w = if two_legs { two_leg_weight(&d.source) } else { SetWeight::terminal(&d.source) };
        let apex = |c: Option<wlim_core::fincat::Cone>| c.map(|c| d.target.object_name(c.apex).to_string());
        let searched = apex(lib(cone_search(&w, &d))?);
        let via_el = apex(lib(weighted_limit_via_elements(&w, &d))?);
        let nw = lib(nerve_weight(&w))?;
        let (_, nd) = lib(nerve_diagram(&nw.shape, &d, 2))?;
        let lim = lib(weighted_limit(&nw.p, &nd, 2, 2))?;
        let found: Vec<&str> = lim.apexes.iter().map(|&v| nd.target.name(v)).collect();
        ensure(
            searched.as_deref() == Some(want) && via_el.as_deref() == Some(want) && found == [want] && lim.agree,
            || format!("{name}: cone search {searched:?}, elements {via_el:?}, slice {found:?}, want {want}"),
        )?;
    }
    Ok("product ∅ and p, pullback ∅ and q".into())
}

fn collapsed_cone() -> Outcome {
    let cw = lib(collapsed_wedge())?;
    let pt = shared(standard_simplex(0));
    let w = lib(weighted_join(&pt, &cw.p))?;
    let x = &w.set;
    let f = x.f_vector();
    ensure(f.get(3) == Some(&1) && f.len() == 4, || format!("f-vector {f:?}"))?;
    let top = x.generators(3)[0];
    let faces_of_top: Vec<usize> = x.faces(top).iter().filter(|s| s.is_nondegenerate()).map(|s| s.base).collect();
    let extra: Vec<usize> = x.generators(2).iter().copied().filter(|g| !faces_of_top.contains(g)).collect();
    ensure(extra.len() == 1, || format!("{} triangles off the 3-simplex", extra.len()))?;
    ensure(!x.faces(top)[0].is_nondegenerate(), || "d₀ of the 3-simplex is not collapsed".into())?;
    // The cone point over a, b, c, with two edges into b and the legs a → b ← c.
    let mut b = Builder::new();
    let v: Vec<Simplex> = ["⊥", "a", "b", "c"].iter().map(|n| Simplex::generator(b.vertex(*n).unwrap(), 0)).collect();
    for (name, s, t) in [("⊥a", 0, 1), ("⊥b₀", 0, 2), ("⊥b₁", 0, 2), ("⊥c", 0, 3), ("ab", 1, 2), ("cb", 3, 2)] {
        b.add(name, vec![v[t].clone(), v[s].clone()]).unwrap();
    }
    let expected = shared(b.build().unwrap());
    let skeleton = shared(x.skeleton(1));
    ensure(lib(is_isomorphic(&skeleton, &expected))?.is_some(), || format!("1-skeleton {:?}", skeleton.f_vector()))?;
    Ok(format!("f-vector {f:?}, one extra triangle"))
}

fn vertex_number(x: &SimplicialSet, v: usize) -> usize {
    x.name(v).parse().expect("integer vertex names")
}

fn necklace_counts() -> Outcome {
    let mut sets: Vec<(String, Arc<SimplicialSet>)> = vec![
        ("Δ[1]".into(), shared(standard_simplex(1))),
        ("Δ[2]".into(), shared(standard_simplex(2))),
        ("Δ[3]".into(), shared(standard_simplex(3))),
        ("Λ¹[2]".into(), shared(lib(horn(2, 1))?)),
        ("Λ²[2]".into(), shared(lib(horn(2, 2))?)),
        ("∂Δ[2]".into(), shared(lib(boundary(2))?)),
        ("∂Δ[3]".into(), shared(lib(boundary(3))?)),
        ("wedge".into(), shared(wedge())),
    ];
    for (name, p) in lib(weights())? {
        sets.push((format!("source of {name}"), p.source.clone()));
    }
    for f in lib(join_fixtures(12))? {
        sets.push((f.name.clone(), lib(weighted_join(&f.i, &f.p))?.set));
    }
    let mut pairs = 0;
    for (name, x) in &sets {
        for &a in x.vertices() {
            for &b in x.vertices() {
                let ms = lib(mapping_space(x, a, b, 2))?;
                let brute = brute_necklaces(x, a, b, 16).len();
                ensure(ms.necklaces.len() == brute, || format!("{name}: {} necklaces, brute force {brute}", ms.necklaces.len()))?;
                let fv = ms.set.f_vector();
                for m in 0..=2 {
                    let got = (level_size(&ms.set, m), fv.get(m).copied().unwrap_or(0));
                    let want = flagged_counts(x, a, b, m);
                    ensure(got == want, || format!("{name} ({}, {}) degree {m}: {got:?} against {want:?}", x.name(a), x.name(b)))?;
                }
                pairs += 1;
            }
        }
    }
    let mut cube_pairs = 0;
    for (name, x) in sets.iter().filter(|(n, _)| ["Δ[2]", "Δ[3]", "Λ²[2]", "∂Δ[2]"].contains(&n.as_str())) {
        for &a in x.vertices() {
            for &b in x.vertices() {
                let (na, nb) = (vertex_number(x, a), vertex_number(x, b));
                if na >= nb {
                    continue;
                }
                let ms = lib(mapping_space(x, a, b, 2))?;
                let fv = ms.set.f_vector();
                for m in 0..=2 {
                    let got = (level_size(&ms.set, m), fv.get(m).copied().unwrap_or(0));
                    let want = cube_colimit_counts(x, na, nb, m);
                    ensure(got == want, || format!("{name} ({na}, {nb}) degree {m}: {got:?} against cubes {want:?}"))?;
                }
                cube_pairs += 1;
            }
        }
    }
    Ok(format!("{} sets, {pairs} vertex pairs; {cube_pairs} pairs against the cube colimit", sets.len()))
}

fn cube_identities(notes: &mut Vec<String>) -> Outcome {
    for n in 1..=3usize {
        let x = shared(standard_simplex(n));
        let m = (n - 1).max(1);
        let ms = lib(mapping_space(&x, 0, x.vertices()[n], m))?;
        let model = shared(cube(n - 1).skeleton(m));
        let iso = lib(is_isomorphic(&ms.set, &model))?;
        ensure(iso.as_ref().is_some_and(|w| w.is_isomorphism()), || format!("Map(0, {n}) in Δ[{n}] is not □[{}]", n - 1))?;
    }
    let pt = shared(standard_simplex(0));
    let id = SimplicialMap::identity(&pt);
    for n in 1..=3usize {
        let c = lib(computation1_check(&id, n, CubeMode::Full, Endpoint::Shape(0), n))?;
        ensure(c.verdict.holds && c.witness.is_some(), || c.verdict.to_string())?;
    }
    for n in 2..=3usize {
        let c = lib(computation1_check(&id, n, CubeMode::Boundary, Endpoint::Shape(0), n))?;
        ensure(c.verdict.holds && c.witness.is_some(), || c.verdict.to_string())?;
        let x = shared(lib(boundary(n))?);
        let m = n - 1;
        let ms = lib(mapping_space(&x, 0, x.vertices()[n], m))?;
        let model = shared(lib(cube_boundary(n - 1))?.skeleton(m));
        ensure(lib(is_isomorphic(&ms.set, &model))?.is_some(), || format!("Map(0, {n}) in ∂Δ[{n}] is not ∂□[{}]", n - 1))?;
        let literal = lib(computation1_check(&id, n, CubeMode::Boundary, Endpoint::Last, m))?;
        notes.push(format!("literal boundary endpoint formula: {}", literal.verdict));
    }
    Ok("□[n-1] for n = 1, 2, 3; ⊓ⁿ₀[n] × W and ∂□[n-1] for n = 2, 3".into())
}

fn decomposition() -> Outcome {
    let fixtures: Vec<_> = lib(join_fixtures(25))?
        .into_iter()
        .filter(|f| f.size() <= 12 || (f.name.contains("collapsed wedge") && f.i.len() <= 1))
        .collect();
    ensure(fixtures.len() >= 10, || format!("only {} fixtures", fixtures.len()))?;
    ensure(fixtures.iter().any(|f| f.name.contains("collapsed wedge")), || "collapsed wedge missing".into())?;
    for f in &fixtures {
        let v = lib(mainfact_check(&f.i, &f.p, 2))?;
        ensure(v.holds, || format!("{}: {v}", f.name))?;
        let cones = lib(Cones::new(&f.i, &f.p))?;
        for v in [lib(full_inclusions(&cones, 2))?, lib(pullback_form(&cones, 2))?] {
            ensure(v.holds, || format!("{}: {v}", f.name))?;
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn cofibrant_values() -> Outcome {
    let gamma = Arc::new(FinCategory::cospan());
    let n = lib(nerve(&gamma))?;
    let id = SimplicialMap::identity(&n.set);
    let cof = lib(cofibrant_weight(&id, 2))?;
    let h = shared(lib(horn(2, 2))?);
    let pt = shared(standard_simplex(0));
    for o in 0..gamma.object_count() {
        let v = n.vertex(o);
        let value = &cof.value(v).ok_or("missing value")?.set;
        let want = if gamma.object_name(o) == "b" { &h } else { &pt };
        ensure(lib(is_isomorphic(value, want))?.is_some(), || format!("W({}) has f-vector {:?}", gamma.object_name(o), value.f_vector()))?;
        let rect = lib(rectify(&id, &n, o))?;
        ensure(lib(is_isomorphic(value, &rect))?.is_some(), || format!("W({}) differs from the rectification", gamma.object_name(o)))?;
    }
    Ok("(Δ[0], Λ²[2], Δ[0]), equal to the rectified values".into())
}

fn conical_reduction() -> Outcome {
    let fixtures = lib(slice_fixtures())?;
    for s in &fixtures {
        let v = lib(conical_reduction_check(&s.p, &s.d, 2, 2))?;
        ensure(v.holds, || format!("{}: {v}", s.name))?;
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn fat_and_neat() -> Outcome {
    let fixtures = lib(slice_fixtures())?;
    for s in &fixtures {
        let c = lib(fat_slice_as_comma(&s.p, &s.d, 2))?;
        ensure(c.witness.is_some(), || format!("{}: fat slice {:?}, comma {:?}", s.name, c.slice.f_vector(), c.comma.f_vector()))?;
        let v = lib(fat_neat_check(&s.p, &s.d, 2))?;
        ensure(v.holds, || format!("{}: {v}", s.name))?;
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn nerve_specialization() -> Outcome {
    let fixtures = cone_fixtures();
    ensure(fixtures.len() >= 5, || format!("only {} fixtures", fixtures.len()))?;
    for f in &fixtures {
        let v = lib(nerve_specialization_check(&f.weight, &f.diagram, 2))?;
        ensure(v.holds, || format!("{}: {v}", f.name))?;
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn universal_property() -> Outcome {
    let fixtures = lib(end_fixtures())?;
    let a0 = shared(standard_simplex(0));
    let a1 = shared(standard_simplex(1));
    let mut commas = 0;
    for f in &fixtures {
        let end = lib(weighted_end(&f.weight, &f.diagram, 2))?;
        for (a, k) in [(&a0, 0), (&a1, 1)] {
            let cones = lib(weighted_cone_count(&f.weight, &f.diagram, a))?;
            let simplices = level_size(&end.set, k);
            ensure(cones == simplices, || format!("{}: {cones} cones from Δ[{k}], {simplices} {k}-simplices", f.name))?;
        }
        if f.name.starts_with("comma") {
            let (l, r) = (&f.diagram.maps[3], &f.diagram.maps[4]);
            let hp = lib(homotopy_pullback(l, r, WeightChoice::Comma, 2))?;
            let c = lib(comma(l, r, 2))?;
            ensure(lib(is_isomorphic(&hp.end.set, &c.set))?.is_some(), || format!("{}: end and comma differ", f.name))?;
            commas += 1;
        }
    }
    Ok(format!("{} fixtures, {commas} comma comparisons", fixtures.len()))
}

#[test]
fn acceptance() {
    let mut notes = Vec::new();
    let criteria: Vec<(u32, &str, u64, Check)> = vec![
        (1, "weighted join levels against the formula", 10, Box::new(|_| join_levels())),
        (2, "product and pullback as weighted limits", 1, Box::new(|_| product_and_pullback())),
        (3, "cone on the collapsed wedge", 1, Box::new(|_| collapsed_cone())),
        (4, "necklace counts against brute force and cubes", 60, Box::new(|_| necklace_counts())),
        (5, "cube identities", 30, Box::new(cube_identities)),
        (6, "decomposition of weighted join homs", 60, Box::new(|_| decomposition())),
        (7, "cofibrant replacement of the cospan weight", 5, Box::new(|_| cofibrant_values())),
        (8, "conical reduction", 30, Box::new(|_| conical_reduction())),
        (9, "fat and neat slices", 120, Box::new(|_| fat_and_neat())),
        (10, "nerve specialization", 30, Box::new(|_| nerve_specialization())),
        (11, "ends against cone counts and commas", 30, Box::new(|_| universal_property())),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check(&mut notes);
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (pass, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        println!(
            "criterion {id:>2} {} {name} ({:.2}s of {}s): {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !pass {
            failed.push(id);
        }
    }
    for n in &notes {
        println!("note: {n}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
