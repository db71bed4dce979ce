use std::sync::Arc;

use proptest::prelude::*;
use wlim_core::enriched::{weighted_end, SSetFunctor};
use wlim_core::fincat::FinCategory;
use wlim_core::joins::{join, weighted_join};
use wlim_core::necklaces::{concat, decompose, mapping_space};
use wlim_core::sset::{enumerate_maps, is_isomorphic, point, product, standard_simplex, SimplicialMap, SimplicialSet};

/// A subcomplex of `Δ[n]` generated by the chosen vertex subsets.
fn subcomplex(n: usize, chosen: &[bool]) -> SimplicialSet {
    let delta = standard_simplex(n);
    let mask = |g| {
        delta
            .vertex_list(&delta.gen(g))
            .iter()
            .fold(0u32, |m, &v| m | 1 << delta.vertices().iter().position(|&u| u == v).unwrap())
    };
    let top: Vec<u32> = (1..1u32 << (n + 1)).zip(chosen).filter(|(_, &c)| c).map(|(s, _)| s).collect();
    delta.restrict(|g| top.iter().any(|&t| mask(g) & !t == 0)).unwrap().0
}

fn subcomplexes(max_n: usize) -> impl Strategy<Value = SimplicialSet> {
    (0..=max_n).prop_flat_map(|n| prop::collection::vec(any::<bool>(), (1 << (n + 1)) - 1).prop_map(move |c| subcomplex(n, &c)))
}

fn level_size(x: &SimplicialSet, n: usize) -> usize {
    let choose = |n: usize, k: usize| if k > n { 0 } else { (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)) };
    (0..x.len()).map(|g| choose(n, x.gen_dim(g))).sum()
}

fn identities_hold(x: &SimplicialSet) -> bool {
    (0..x.len()).all(|g| {
        let s = x.gen(g);
        let n = s.dim();
        let faces_ok = (0..=n).all(|j| (0..j).all(|i| n < 2 || x.face(&x.face(&s, j), i) == x.face(&x.face(&s, i), j - 1)));
        let degens_ok = (0..=n).all(|i| {
            let t = x.degen(&s, i);
            x.face(&t, i) == s && x.face(&t, i + 1) == s
        });
        faces_ok && degens_ok
    })
}

fn weight(j: SimplicialSet, collapse: bool) -> SimplicialMap {
    let j = Arc::new(j);
    if collapse {
        SimplicialMap::constant(&j, &Arc::new(standard_simplex(0)), 0)
    } else {
        SimplicialMap::identity(&j)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn joins_satisfy_the_simplicial_identities(i in subcomplexes(2), j in subcomplexes(2), collapse in any::<bool>()) {
        let i = Arc::new(i);
        let w = weighted_join(&i, &weight(j, collapse)).unwrap();
        prop_assert!(identities_hold(&i));
        prop_assert!(identities_hold(&w.set));
    }

    #[test]
    fn weighted_join_levels(i in subcomplexes(2), j in subcomplexes(2), collapse in any::<bool>()) {
        let i = Arc::new(i);
        let p = weight(j, collapse);
        let w = weighted_join(&i, &p).unwrap();
        for n in 0..=6 {
            let mixed: usize = (0..n).map(|k| level_size(&i, k) * level_size(&p.source, n - 1 - k)).sum();
            prop_assert_eq!(level_size(&w.set, n), level_size(&i, n) + level_size(&p.target, n) + mixed);
        }
    }

    #[test]
    fn join_of_simplices_is_a_simplex(m in 0usize..=2, n in 0usize..=2) {
        let j = join(&Arc::new(standard_simplex(m)), &Arc::new(standard_simplex(n))).unwrap();
        prop_assert!(is_isomorphic(&j.set, &Arc::new(standard_simplex(m + n + 1))).unwrap().is_some());
    }

    #[test]
    fn maps_out_of_a_simplex_are_its_simplices(x in subcomplexes(3), k in 0usize..=2) {
        let x = Arc::new(x);
        let maps = enumerate_maps(&Arc::new(standard_simplex(k)), &x).unwrap();
        prop_assert_eq!(maps.len(), level_size(&x, k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_then_concat_is_the_identity(i in subcomplexes(1), j in subcomplexes(2), collapse in any::<bool>()) {
        let i = Arc::new(i);
        let w = weighted_join(&i, &weight(j, collapse)).unwrap();
        for &a in w.set.vertices() {
            for &b in w.set.vertices() {
                let ms = mapping_space(&w.set, a, b, 2).unwrap();
                for t in ms.levels.iter().flatten() {
                    let d = decompose(&w, t).unwrap();
                    prop_assert_eq!(&concat(&w, &d).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn end_of_the_point_weight_on_two_objects_is_the_product(a in subcomplexes(1), b in subcomplexes(2)) {
        let shape = Arc::new(FinCategory::discrete(&["u", "v"]));
        let (a, b) = (Arc::new(a), Arc::new(b));
        let d = SSetFunctor::new(shape.clone(), vec![a.clone(), b.clone()], Vec::new()).unwrap();
        let w = SSetFunctor::constant(&shape, &Arc::new(point("*")));
        let end = weighted_end(&w, &d, 2).unwrap();
        let prod = Arc::new(product(&a, &b).unwrap().set.skeleton(2).with_truncation(Some(2)));
        prop_assert!(is_isomorphic(&end.set, &prod).unwrap().is_some());
    }
}
