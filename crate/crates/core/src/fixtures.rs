//! Small named inputs shared by the test suites and the command-line checker.

use std::sync::Arc;

use crate::enriched::{comma_weight, cospan_cofibrant_weight, SSetDiagram, SSetFunctor, SSetWeight};
use crate::error::Result;
use crate::fincat::{nerve, CatFunctor, FinCategory, Nerve, SetWeight};
use crate::slices::{nerve_diagram, nerve_weight};
use crate::sset::{boundary, horn, point, standard_simplex, Builder, Simplex, SimplicialMap, SimplicialSet};

fn shared(x: SimplicialSet) -> Arc<SimplicialSet> {
    Arc::new(x)
}

/// `Δ[1] ∨ Δ[2]`: the edge `a → b₁` and the triangle `c → b₀ → b₁`, glued at `b₁`.
pub fn wedge() -> SimplicialSet {
    let mut b = Builder::new();
    let v = |b: &mut Builder, n: &str| b.vertex(n).expect("fresh");
    let (a, b0, b1, c) = (v(&mut b, "a"), v(&mut b, "b₀"), v(&mut b, "b₁"), v(&mut b, "c"));
    let pt = |g| Simplex::generator(g, 0);
    let edge = |b: &mut Builder, n: &str, x, y| b.add(n, vec![pt(y), pt(x)]).expect("edge");
    edge(&mut b, "a→b₁", a, b1);
    let cb0 = edge(&mut b, "c→b₀", c, b0);
    let b0b1 = edge(&mut b, "b₀→b₁", b0, b1);
    let cb1 = edge(&mut b, "c→b₁", c, b1);
    let e = |g| Simplex::generator(g, 1);
    b.add("c→b₀→b₁", vec![e(b0b1), e(cb1), e(cb0)]).expect("triangle");
    b.build().expect("wedge")
}

/// The wedge over the cospan `a → b ← c`, with `b₀, b₁ ↦ b` and the triangle sent to `s₁g`.
pub struct CollapsedWedge {
    pub shape: Nerve,
    pub p: SimplicialMap,
}

pub fn collapsed_wedge() -> Result<CollapsedWedge> {
    collapsed_wedge_over(&Arc::new(FinCategory::cospan()))
}

/// Over a given copy of the cospan category.
pub fn collapsed_wedge_over(cospan: &Arc<FinCategory>) -> Result<CollapsedWedge> {
    let shape = nerve(cospan)?;
    let tilde = shared(wedge());
    let n = &shape.set;
    let at = |name: &str, degens: &[usize]| n.simplex(name, degens);
    let images = vec![
        at("a", &[])?,
        at("b", &[])?,
        at("b", &[])?,
        at("c", &[])?,
        at("f", &[])?,
        at("g", &[])?,
        at("b", &[0])?,
        at("g", &[])?,
        at("g", &[1])?,
    ];
    let p = SimplicialMap::new(tilde, n.clone(), images)?;
    Ok(CollapsedWedge { shape, p })
}

/// Input to a weighted join: a simplicial set `I` and a weight `p : J̃ → J`.
pub struct JoinFixture {
    pub name: String,
    pub i: Arc<SimplicialSet>,
    pub p: SimplicialMap,
}

impl JoinFixture {
    /// Nondegenerate simplices of `I`, `J̃` and `J` together.
    pub fn size(&self) -> usize {
        self.i.len() + self.p.source.len() + self.p.target.len()
    }
}

/// Named weights `p : J̃ → J`.
pub fn weights() -> Result<Vec<(String, SimplicialMap)>> {
    let mut out = Vec::new();
    let mut id = |name: &str, x: SimplicialSet| out.push((format!("id {name}"), SimplicialMap::identity(&shared(x))));
    id("Δ[0]", standard_simplex(0));
    id("Δ[1]", standard_simplex(1));
    id("Λ²[2]", horn(2, 2)?);
    id("∂Δ[1]", boundary(1)?);
    let pt = shared(standard_simplex(0));
    out.push(("Δ[1] → Δ[0]".into(), SimplicialMap::constant(&shared(standard_simplex(1)), &pt, 0)));
    out.push(("∂Δ[1] → Δ[0]".into(), SimplicialMap::constant(&shared(boundary(1)?), &pt, 0)));
    out.push(("Δ[2] → Δ[0]".into(), SimplicialMap::constant(&shared(standard_simplex(2)), &pt, 0)));
    let d1 = shared(standard_simplex(1));
    let d2 = shared(standard_simplex(2));
    let s0 = SimplicialMap::new(d2.clone(), d1.clone(), {
        let v = |k: &str, degens: &[usize]| d1.simplex(k, degens).expect("vertex or edge");
        // 0, 1, 2, 01, 02, 12, 012 ↦ 0, 0, 1, s₀0, 01, 01, s₀01
        vec![v("0", &[]), v("0", &[]), v("1", &[]), v("0", &[0]), v("01", &[]), v("01", &[]), v("01", &[0])]
    })?;
    out.push(("s₀ : Δ[2] → Δ[1]".into(), s0));
    let spine = shared(horn(2, 1)?);
    out.push(("Λ¹[2] ↪ Δ[2]".into(), SimplicialMap::by_names(&spine, &d2)?));
    out.push(("∂Δ[2] ↪ Δ[2]".into(), SimplicialMap::by_names(&shared(boundary(2)?), &d2)?));
    let empty = shared(SimplicialSet::empty());
    out.push(("∅ → Δ[1]".into(), SimplicialMap::new(empty, d1.clone(), Vec::new())?));
    out.push(("collapsed wedge".into(), collapsed_wedge()?.p));
    Ok(out)
}

/// Left factors for joins.
pub fn left_factors() -> Result<Vec<(String, Arc<SimplicialSet>)>> {
    Ok(vec![
        ("∅".into(), shared(SimplicialSet::empty())),
        ("Δ[0]".into(), shared(standard_simplex(0))),
        ("Δ[1]".into(), shared(standard_simplex(1))),
        ("∂Δ[1]".into(), shared(boundary(1)?)),
        ("Λ¹[2]".into(), shared(horn(2, 1)?)),
    ])
}

/// Every pairing of a left factor with a weight, at most `max_size` simplices in all.
pub fn join_fixtures(max_size: usize) -> Result<Vec<JoinFixture>> {
    let mut out = Vec::new();
    for (wn, p) in weights()? {
        for (iname, i) in left_factors()? {
            let f = JoinFixture { name: format!("{iname} ⋆ [{wn}]"), i, p: p.clone() };
            if f.size() <= max_size {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// The subsets of `{x, y}` ordered by inclusion.
pub fn boolean_lattice() -> Arc<FinCategory> {
    let bits = [0u8, 1, 2, 3];
    Arc::new(FinCategory::poset(&["∅", "x", "y", "xy"], |a, b| bits[a] & !bits[b] == 0).expect("poset"))
}

/// `x → xy ← y` in the lattice.
pub fn lattice_cospan(c: &Arc<FinCategory>) -> CatFunctor {
    let shape = Arc::new(FinCategory::cospan());
    let o = |n: &str| c.find_object(n).expect("object");
    let m = |n: &str| c.find_morphism(n).expect("arrow");
    CatFunctor::new(shape, c.clone(), vec![o("x"), o("xy"), o("y")], vec![o("x"), o("xy"), o("y"), m("x≤xy"), m("y≤xy")])
        .expect("cospan")
}

/// A cospan `a → b ← c` with a product `p` whose two composites to `b` differ, and a
/// pullback `q` factoring through it.
pub fn split_cospan() -> Arc<FinCategory> {
    let arrows = [
        ("f", "a", "b"),
        ("g", "c", "b"),
        ("pa", "p", "a"),
        ("pc", "p", "c"),
        ("qa", "q", "a"),
        ("qc", "q", "c"),
        ("u", "q", "p"),
        ("f∘pa", "p", "b"),
        ("g∘pc", "p", "b"),
        ("qb", "q", "b"),
    ];
    let compose = [
        ("f", "pa", "f∘pa"),
        ("g", "pc", "g∘pc"),
        ("f", "qa", "qb"),
        ("g", "qc", "qb"),
        ("pa", "u", "qa"),
        ("pc", "u", "qc"),
        ("f∘pa", "u", "qb"),
        ("g∘pc", "u", "qb"),
    ];
    Arc::new(FinCategory::new(&["a", "b", "c", "p", "q"], &arrows, &compose).expect("category"))
}

pub fn split_cospan_diagram(c: &Arc<FinCategory>) -> CatFunctor {
    let shape = Arc::new(FinCategory::cospan());
    let o = |n: &str| c.find_object(n).expect("object");
    let m = |n: &str| c.find_morphism(n).expect("arrow");
    CatFunctor::new(shape, c.clone(), vec![o("a"), o("b"), o("c")], vec![o("a"), o("b"), o("c"), m("f"), m("g")])
        .expect("cospan")
}

/// `{0} ↪ {0, 1} ↩ {1}` on the cospan: cones are pairs of unrelated legs.
pub fn two_leg_weight(shape: &Arc<FinCategory>) -> SetWeight {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    SetWeight::new(shape.clone(), vec![s(&["0"]), s(&["0", "1"]), s(&["1"])], vec![vec![0], vec![1]]).expect("weight")
}

/// Finite categories with finite nerves.
pub fn categories() -> Vec<(String, Arc<FinCategory>)> {
    let mut out: Vec<(String, Arc<FinCategory>)> =
        (0..=3).map(|n| (format!("[{n}]"), Arc::new(FinCategory::ordinal(n)))).collect();
    out.push(("cospan".into(), Arc::new(FinCategory::cospan())));
    out.push(("span".into(), Arc::new(FinCategory::cospan().opposite())));
    out.push(("two points".into(), Arc::new(FinCategory::discrete(&["u", "v"]))));
    out.push((
        "parallel pair".into(),
        Arc::new(FinCategory::new(&["s", "t"], &[("h", "s", "t"), ("k", "s", "t")], &[]).expect("category")),
    ));
    out.push(("boolean lattice".into(), boolean_lattice()));
    out.push(("split cospan".into(), split_cospan()));
    out
}

/// A Set-valued weight with a diagram of the same shape.
pub struct ConeFixture {
    pub name: String,
    pub weight: SetWeight,
    pub diagram: CatFunctor,
}

pub fn cone_fixtures() -> Vec<ConeFixture> {
    let mut out = Vec::new();
    for (cname, d) in [("lattice", lattice_cospan(&boolean_lattice())), ("split", split_cospan_diagram(&split_cospan()))] {
        let shape = d.source.clone();
        let weights = [
            ("two legs", two_leg_weight(&shape)),
            ("terminal", SetWeight::terminal(&shape)),
            ("empty", SetWeight::empty(&shape)),
            ("representable b", SetWeight::representable(&shape, 1)),
        ];
        for (wname, weight) in weights {
            out.push(ConeFixture { name: format!("{wname} over the {cname} cospan"), weight, diagram: d.clone() });
        }
    }
    let c = Arc::new(FinCategory::ordinal(2));
    let j = Arc::new(FinCategory::ordinal(1));
    let up = c.find_morphism("0≤2").expect("arrow");
    let d = CatFunctor::new(j.clone(), c, vec![0, 2], vec![0, 2, up]).expect("functor");
    out.push(ConeFixture { name: "terminal over an arrow in [2]".into(), weight: SetWeight::terminal(&j), diagram: d });
    out
}

/// A weight and a diagram in a simplicial set, both over the shape `J`.
pub struct SliceFixture {
    pub name: String,
    pub p: SimplicialMap,
    pub d: SimplicialMap,
}

/// Slices over nerves: the nerve transports of the cone fixtures, and the collapsed wedge.
pub fn slice_fixtures() -> Result<Vec<SliceFixture>> {
    let mut out = Vec::new();
    for f in cone_fixtures() {
        let nw = nerve_weight(&f.weight)?;
        let (_, d) = nerve_diagram(&nw.shape, &f.diagram, 3)?;
        out.push(SliceFixture { name: f.name, p: nw.p, d });
    }
    for (name, diagram) in [("lattice", lattice_cospan(&boolean_lattice())), ("split", split_cospan_diagram(&split_cospan()))] {
        let cw = collapsed_wedge_over(&diagram.source)?;
        let (_, d) = nerve_diagram(&cw.shape, &diagram, 3)?;
        out.push(SliceFixture { name: format!("collapsed wedge over the {name} cospan"), p: cw.p, d });
    }
    let pt = shared(standard_simplex(0));
    let q = nerve(&Arc::new(FinCategory::ordinal(2)))?;
    let tilde = shared(standard_simplex(1));
    out.push(SliceFixture {
        name: "collapsed interval at the middle of [2]".into(),
        p: SimplicialMap::constant(&tilde, &pt, 0),
        d: SimplicialMap::constant(&pt, &q.set, q.vertex(1)),
    });
    Ok(out)
}

/// A simplicial weight and diagram on a finite shape.
pub struct EndFixture {
    pub name: String,
    pub weight: SSetWeight,
    pub diagram: SSetDiagram,
}

pub fn end_fixtures() -> Result<Vec<EndFixture>> {
    let mut out = Vec::new();
    let cospan = Arc::new(FinCategory::cospan());
    let d1 = shared(standard_simplex(1));
    let d2 = shared(standard_simplex(2));
    let pt = shared(point("*"));
    let legs: Vec<(&str, SimplicialMap, SimplicialMap)> = vec![
        ("vertex and edge into Δ[2]", SimplicialMap::constant(&pt, &d2, 0), SimplicialMap::by_names(&d1, &d2)?),
        ("two ends of Δ[1]", SimplicialMap::constant(&pt, &d1, 0), SimplicialMap::constant(&shared(point("*")), &d1, 1)),
        ("∂Δ[1] and Δ[0] over a point", SimplicialMap::constant(&shared(boundary(1)?), &pt, 0), SimplicialMap::identity(&pt)),
    ];
    let (cof, _) = cospan_cofibrant_weight(&cospan)?;
    for (name, f, g) in legs {
        let diagram =
            SSetFunctor::new(cospan.clone(), vec![f.source.clone(), f.target.clone(), g.source.clone()], vec![f.clone(), g.clone()])?;
        let weights = [
            ("point", SSetFunctor::constant(&cospan, &shared(point("*")))),
            ("comma", comma_weight(&cospan)?),
            ("cofibrant", cof.clone()),
        ];
        for (wname, weight) in weights {
            out.push(EndFixture { name: format!("{wname} weight, {name}"), weight, diagram: diagram.clone() });
        }
    }
    let single = Arc::new(FinCategory::discrete(&["•"]));
    out.push(EndFixture {
        name: "Δ[1] cotensor of Δ[2]".into(),
        weight: SSetFunctor::constant(&single, &d1),
        diagram: SSetFunctor::constant(&single, &d2),
    });
    Ok(out)
}
