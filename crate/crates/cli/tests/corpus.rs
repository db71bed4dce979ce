//! The JSON fixture corpus is generated from the library's fixtures and kept in sync.
//!
//! Run with `WLIM_BLESS=1` to rewrite the files after an intentional change.

use std::path::PathBuf;
use std::sync::Arc;

use serde_json::Value;
use wlim_cli::commands::{run, Cli, Command};
use wlim_cli::doc::{to_json, CategoryDoc, DiagramDoc, FunctorDoc, MapDoc, SSetDoc, SSetFunctorDoc, SetWeightDoc, WeightDoc};
use wlim_core::enriched::{comma_weight, SSetFunctor};
use wlim_core::fincat::{FinCategory, SetWeight};
use wlim_core::fixtures::{boolean_lattice, collapsed_wedge, lattice_cospan, split_cospan, split_cospan_diagram, two_leg_weight, wedge};
use wlim_core::sset::{boundary, horn, point, standard_simplex, SimplicialMap};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn with_comment<T: serde::Serialize>(doc: &T, comment: &str) -> Value {
    let mut v = serde_json::to_value(doc).unwrap();
    let o = v.as_object_mut().unwrap();
    let mut out = serde_json::Map::new();
    // Keep the tag first and the comment right after it.
    if let Some(kind) = o.shift_remove("kind") {
        out.insert("kind".into(), kind);
    }
    out.insert("comment".into(), comment.into());
    out.extend(std::mem::take(o));
    Value::Object(out)
}

fn corpus() -> Vec<(&'static str, Value)> {
    let d1 = Arc::new(standard_simplex(1));
    let d2 = Arc::new(standard_simplex(2));
    let pt = Arc::new(point("*"));
    let cospan = Arc::new(FinCategory::cospan());
    let lattice = boolean_lattice();
    let set = |x: &wlim_core::sset::SimplicialSet| SSetDoc::from_set(x);
    let weight = |w: &SetWeight| WeightDoc::Set(SetWeightDoc::from_weight(w));
    let single = Arc::new(FinCategory::discrete(&["•"]));
    vec![
        ("delta2.json", with_comment(&set(&d2), "The standard 2-simplex.")),
        ("delta3.json", with_comment(&set(&standard_simplex(3)), "The standard 3-simplex.")),
        ("boundary2.json", with_comment(&set(&boundary(2).unwrap()), "The boundary of the 2-simplex.")),
        ("spine2.json", with_comment(&set(&horn(2, 1).unwrap()), "The inner horn of the 2-simplex: not a quasi-category.")),
        ("wedge.json", with_comment(&set(&wedge()), "An edge a → b₁ and a triangle c → b₀ → b₁ glued at b₁.")),
        ("lattice.json", with_comment(&CategoryDoc::from_category(&lattice), "Subsets of {x, y} ordered by inclusion.")),
        ("cospan.json", with_comment(&CategoryDoc::from_category(&cospan), "The walking cospan a → b ← c.")),
        (
            "lattice-cospan.json",
            with_comment(&DiagramDoc::Functor(FunctorDoc::from_functor(&lattice_cospan(&lattice))), "The cospan x → xy ← y in the lattice; its product is ∅."),
        ),
        (
            "split-cospan.json",
            with_comment(
                &DiagramDoc::Functor(FunctorDoc::from_functor(&split_cospan_diagram(&split_cospan()))),
                "A cospan whose product p differs from its pullback q.",
            ),
        ),
        (
            "two-leg-weight.json",
            with_comment(&weight(&two_leg_weight(&cospan)), "Two unrelated legs: cones under this weight are spans, so its limit is the product."),
        ),
        ("terminal-weight.json", with_comment(&weight(&SetWeight::terminal(&cospan)), "The terminal weight: its limit is the pullback.")),
        (
            "collapsed-wedge.json",
            with_comment(&WeightDoc::Map(MapDoc::from_map(&collapsed_wedge().unwrap().p)), "The wedge collapsed onto the nerve of the cospan."),
        ),
        (
            "vertex-into-delta2.json",
            with_comment(&MapDoc::from_map(&SimplicialMap::constant(&pt, &d2, 0)), "The vertex 0 of the 2-simplex."),
        ),
        (
            "edge-into-delta2.json",
            with_comment(&MapDoc::from_map(&SimplicialMap::by_names(&d1, &d2).unwrap()), "The edge 01 of the 2-simplex."),
        ),
        (
            "comma-weight.json",
            with_comment(&SSetFunctorDoc::from_functor(&comma_weight(&cospan).unwrap()), "The endpoints of the interval on the cospan."),
        ),
        (
            "interval-weight.json",
            with_comment(&SSetFunctorDoc::from_functor(&SSetFunctor::constant(&single, &d1)), "The interval on a single object."),
        ),
        (
            "delta2-functor.json",
            with_comment(&SSetFunctorDoc::from_functor(&SSetFunctor::constant(&single, &d2)), "The 2-simplex on a single object."),
        ),
    ]
}

#[test]
fn corpus_matches_the_library() {
    let bless = std::env::var_os("WLIM_BLESS").is_some();
    for (name, doc) in corpus() {
        let path = dir().join(name);
        let text = to_json(&doc);
        if bless {
            std::fs::write(&path, &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_default();
        assert_eq!(on_disk, text, "{name} is stale; rerun with WLIM_BLESS=1");
    }
}

#[test]
fn every_fixture_is_canonical() {
    let dir = dir();
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() >= corpus().len());
    let out = std::env::temp_dir().join(format!("wlim-canonical-{}.json", std::process::id()));
    for file in files {
        let cli = Cli { trunc: 2, max_dim: 3, out: Some(out.clone()), command: Command::Build { file: file.clone() } };
        let outcome = run(&cli).unwrap_or_else(|e| panic!("{}: {e:#}", file.display()));
        assert_eq!(outcome.report["valid"], true);
        let saved = std::fs::read_to_string(&out).unwrap();
        let original = std::fs::read_to_string(&file).unwrap();
        assert_eq!(saved, original, "{} is not in canonical form", file.display());
    }
    let _ = std::fs::remove_file(out);
}
