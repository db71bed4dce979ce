use std::collections::HashSet;
use std::sync::Arc;

use super::decompose::Cones;
use super::mapping::{mapping_space, MappingSpace};
use crate::error::{Error, Result};
use crate::sset::{product, pullback, Gen, Product, SimplicialMap, SimplicialSet, Simplex};
use crate::verdict::Verdict;

/// `Map(a, b) ≅ Map(a, ⊤) × Map(⊥, b)` for `a` in `I` and `b` in `J`, with its witness.
pub struct ProductDecomposition {
    pub source: MappingSpace,
    pub upper: MappingSpace,
    pub lower: MappingSpace,
    pub product: Product,
    /// `Φ`, assembled from the pushforwards along both collapse maps.
    pub witness: SimplicialMap,
    pub verdict: Verdict,
}

fn vertex(x: &SimplicialSet, v: Gen, what: &str) -> Result<()> {
    if v < x.len() && x.gen_dim(v) == 0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{what} {v} is not a vertex")))
    }
}

/// Check the decomposition of `Map(a, b)` through degree `m_max`.
///
/// `Φ` is a simplicial map by construction; it is compared levelwise against the gluing
/// `Ψ` of the two cone necklaces, which must invert it, and the level sizes must agree.
pub fn product_decomposition(cones: &Cones, a: Gen, b: Gen, m_max: usize) -> Result<ProductDecomposition> {
    let w = &cones.weighted;
    vertex(w.left_factor(), a, "source")?;
    vertex(w.shape(), b, "target")?;
    let source = mapping_space(&w.set, w.left.vertex_image(a), w.right.vertex_image(b), m_max)?;
    let upper = mapping_space(&cones.top.set, cones.top.left.vertex_image(a), cones.top_vertex(), m_max)?;
    let lower = mapping_space(&cones.bottom.set, cones.bottom_vertex(), cones.bottom.right.vertex_image(b), m_max)?;
    let phi_upper = source.pushforward(&cones.to_top, &upper)?;
    let phi_lower = source.pushforward(&cones.to_bottom, &lower)?;
    let product = product(&upper.set, &lower.set)?;
    let witness = product.pair_map(&phi_upper, &phi_lower)?;
    let mut problems = Vec::new();
    for m in 0..=m_max {
        let (n, u, l) = (source.count(m), upper.count(m), lower.count(m));
        if n != u * l {
            problems.push(format!("degree {m}: {n} simplices against {u} × {l}"));
            continue;
        }
        for e in &source.levels[m] {
            let (eu, el) = (e.pushforward(&cones.to_top), e.pushforward(&cones.to_bottom));
            if cones.glue(&eu, &el)? != *e {
                problems.push(format!("Ψ∘Φ moves {}", e.show(&w.set)));
                break;
            }
        }
        for eu in &upper.levels[m] {
            for el in &lower.levels[m] {
                let e = cones.glue(eu, el)?;
                if e.pushforward(&cones.to_top) != *eu || e.pushforward(&cones.to_bottom) != *el {
                    problems.push(format!("Φ∘Ψ moves ({}, {})", eu.show(&upper.space), el.show(&lower.space)));
                }
            }
        }
    }
    let claim = format!(
        "Map({}, {}) ≅ Map({}, ⊤) × Map(⊥, {})",
        w.left_factor().name(a),
        w.shape().name(b),
        w.left_factor().name(a),
        w.shape().name(b)
    );
    let detail = if problems.is_empty() {
        format!("levelwise bijection through degree {m_max}, f-vector {:?}", source.set.f_vector())
    } else {
        problems.join("; ")
    };
    let verdict = Verdict::new(claim, problems.is_empty(), detail);
    Ok(ProductDecomposition { source, upper, lower, product, witness, verdict })
}

/// The pushforward `Map_X(u, v) → Map_{X'}(f u, f v)` is an isomorphism.
fn inclusion_iso(
    x: &Arc<SimplicialSet>,
    f: &SimplicialMap,
    u: Gen,
    v: Gen,
    m_max: usize,
) -> Result<Verdict> {
    let small = mapping_space(x, u, v, m_max)?;
    let big = mapping_space(&f.target, f.vertex_image(u), f.vertex_image(v), m_max)?;
    let claim = format!("Map({}, {}) is unchanged", x.name(u), x.name(v));
    let push = small.pushforward(f, &big)?;
    let holds = push.is_isomorphism();
    Ok(Verdict::new(claim, holds, format!("f-vectors {:?} and {:?}", small.set.f_vector(), big.set.f_vector())))
}

/// The vertices of `I` and `J` span full sub-realizations, and nothing runs from `J` to `I`.
pub fn full_inclusions(cones: &Cones, m_max: usize) -> Result<Verdict> {
    let w = &cones.weighted;
    let (i, j) = (w.left_factor().clone(), w.shape().clone());
    let mut parts = Vec::new();
    for &a in i.vertices() {
        for &a2 in i.vertices() {
            parts.push(inclusion_iso(&i, &w.left, a, a2, m_max)?);
        }
    }
    for &b in j.vertices() {
        for &b2 in j.vertices() {
            parts.push(inclusion_iso(&j, &w.right, b, b2, m_max)?);
        }
    }
    for &b in j.vertices() {
        for &a in i.vertices() {
            let back = mapping_space(&w.set, w.right.vertex_image(b), w.left.vertex_image(a), m_max)?;
            parts.push(Verdict::new(
                format!("Map({}, {}) = ∅", j.name(b), i.name(a)),
                back.set.is_empty(),
                format!("{} simplices", back.set.len()),
            ));
        }
    }
    Ok(Verdict::all("inclusions of I and J are full, nothing runs back", &parts))
}

/// Every hom of the realization of `I ⋆ᵖ J` is the pullback of the cone homs over `Δ[0] ⋆ Δ[0]`.
pub fn pullback_form(cones: &Cones, m_max: usize) -> Result<Verdict> {
    let w = &cones.weighted;
    let over_top = cones.to_top.then(&cones.top_to_base)?;
    let over_bottom = cones.to_bottom.then(&cones.bottom_to_base)?;
    if over_top.images != over_bottom.images {
        return Err(Error::Structure("collapse maps disagree over Δ[0] ⋆ Δ[0]".into()));
    }
    let mut parts = Vec::new();
    for &u in w.set.vertices() {
        for &v in w.set.vertices() {
            let hom = mapping_space(&w.set, u, v, m_max)?;
            let (tu, tv) = (cones.to_top.vertex_image(u), cones.to_top.vertex_image(v));
            let (bu, bv) = (cones.to_bottom.vertex_image(u), cones.to_bottom.vertex_image(v));
            let top = mapping_space(&cones.top.set, tu, tv, m_max)?;
            let bottom = mapping_space(&cones.bottom.set, bu, bv, m_max)?;
            let (su, sv) = (over_top.vertex_image(u), over_top.vertex_image(v));
            let base = mapping_space(&cones.base.set, su, sv, m_max)?;
            let f = top.pushforward(&cones.top_to_base, &base)?;
            let g = bottom.pushforward(&cones.bottom_to_base, &base)?;
            let pb = pullback(&f, &g)?;
            let phi_top = hom.pushforward(&cones.to_top, &top)?;
            let phi_bottom = hom.pushforward(&cones.to_bottom, &bottom)?;
            let mut ok = true;
            for m in 0..=m_max {
                let all = hom.set.all_simplices(m);
                let images: HashSet<(Simplex, Simplex)> =
                    all.iter().map(|s| (phi_top.apply(s), phi_bottom.apply(s))).collect();
                ok &= images.len() == all.len() && all.len() == pb.set.count_simplices(m);
            }
            parts.push(Verdict::new(
                format!("Map({}, {})", w.set.name(u), w.set.name(v)),
                ok,
                format!("f-vectors {:?} and {:?}", hom.set.f_vector(), pb.set.f_vector()),
            ));
        }
    }
    Ok(Verdict::all("realization of the weighted join is the pullback of the cones", &parts))
}

/// All parts of the decomposition theorem for `I ⋆ᵖ J`, product form at every pair `(a, b)`.
pub fn mainfact_check(i: &Arc<SimplicialSet>, p: &SimplicialMap, m_max: usize) -> Result<Verdict> {
    let cones = Cones::new(i, p)?;
    let mut parts = Vec::new();
    for &a in i.vertices() {
        for &b in p.target.vertices() {
            parts.push(product_decomposition(&cones, a, b, m_max)?.verdict);
        }
    }
    parts.push(full_inclusions(&cones, m_max)?);
    parts.push(pullback_form(&cones, m_max)?);
    Ok(Verdict::all("hom decomposition of the weighted join", &parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{horn, standard_simplex};

    #[test]
    fn interval_joined_to_interval() {
        let d1 = Arc::new(standard_simplex(1));
        let j = Arc::new(standard_simplex(1));
        let p = SimplicialMap::identity(&j);
        let cones = Cones::new(&d1, &p).unwrap();
        let d = product_decomposition(&cones, 0, 1, 2).unwrap();
        assert!(d.verdict.holds, "{}", d.verdict);
        d.witness.validate().unwrap();
        // Δ[1] ⋆ Δ[1] = Δ[3], so Map(0, 3) is a square.
        assert_eq!(d.source.set.f_vector(), vec![4, 5, 2]);
        let v = mainfact_check(&d1, &p, 2).unwrap();
        assert!(v.holds, "{v}");
    }

    #[test]
    fn collapsing_weight_on_a_horn() {
        let i = Arc::new(horn(2, 1).unwrap());
        let tilde = Arc::new(standard_simplex(1));
        let pt = Arc::new(standard_simplex(0));
        let p = SimplicialMap::constant(&tilde, &pt, 0);
        let v = mainfact_check(&i, &p, 2).unwrap();
        assert!(v.holds, "{v}");
    }
}
