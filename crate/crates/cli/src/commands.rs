//! The command-line surface: argument parsing, dispatch and reports.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wlim_core::enriched::{homotopy_pullback, weighted_end, WeightChoice};
use wlim_core::fincat::{category_of_elements, weighted_limit as cat_weighted_limit, FinCategory};
use wlim_core::joins::{fat_join, join, weighted_fat_join, weighted_join};
use wlim_core::limits::{ho_category, is_quasi_category, is_terminal_vertex, terminal_vertices, weighted_limit};
use wlim_core::necklaces::{cofibrant_weight, mapping_space};
use wlim_core::slices::{comma, fat_weighted_slice, weighted_slice};
use wlim_core::sset::{cube, is_isomorphic, Gen, SimplicialMap, SimplicialSet};
use wlim_core::verdict::Verdict;

use crate::doc::{
    parse, AnyDoc, CategoryDoc, DiagramDoc, FunctorDoc, MapDoc, SSetDoc, SSetFunctorDoc, SetWeightDoc, WeightDoc,
};
use crate::suite;
use crate::workspace::{read, Workspace};

#[derive(Debug, Parser)]
#[command(name = "wlim", version, about = "Weighted joins, slices and limits of finite simplicial sets")]
pub struct Cli {
    /// Degree through which slices, ends and looped nerves are computed.
    #[arg(long, global = true, default_value_t = 2)]
    pub trunc: usize,
    /// Largest boundary dimension tried in lifting searches.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_dim: usize,
    /// Write the resulting document here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a document and print its canonical form.
    Build { file: PathBuf },
    /// Nerve of a finite category.
    Nerve {
        #[arg(long)]
        category: PathBuf,
    },
    /// Category of elements of a Set-valued weight.
    Elements {
        #[arg(long)]
        weight: PathBuf,
    },
    /// Join of two simplicial sets, or the weighted join `I ⋆ᵖ J`.
    Join(JoinArgs),
    /// Slice under a diagram, or the weighted slice.
    Slice(SliceArgs),
    /// Comma object of two maps with a common target.
    Comma {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Mapping space of the homotopy coherent realization between two vertices.
    Mapspace {
        #[arg(long)]
        sset: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Top degree computed.
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Necklace model of the cofibrant weight attached to `p`.
    Cofweight {
        #[arg(long)]
        weight: PathBuf,
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Terminal vertices of a simplicial set.
    Terminal {
        #[arg(long)]
        sset: PathBuf,
        /// Check only this vertex.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Weighted limits of a diagram in a quasi-category.
    Wlimit {
        #[arg(long)]
        weight: PathBuf,
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Weighted end of simplicial-set-valued functors.
    End {
        #[arg(long)]
        weight: PathBuf,
        #[arg(long)]
        diagram: PathBuf,
    },
    /// Homotopy pullback of two maps, as a weighted end.
    Hopb {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = HopbWeight::Cofibrant)]
        weight: HopbWeight,
    },
    /// Homotopy category of a quasi-category.
    Ho {
        #[arg(long)]
        sset: PathBuf,
    },
    /// Run the built-in invariant suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Args)]
pub struct JoinArgs {
    #[arg(long)]
    pub left: PathBuf,
    /// Right factor; with `--weighted`, use `--weight` instead.
    #[arg(long, required_unless_present = "weighted")]
    pub right: Option<PathBuf>,
    #[arg(long, requires = "weight")]
    pub weighted: bool,
    #[arg(long)]
    pub weight: Option<PathBuf>,
    #[arg(long)]
    pub fat: bool,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    #[arg(long)]
    pub diagram: PathBuf,
    #[arg(long, requires = "weight")]
    pub weighted: bool,
    #[arg(long)]
    pub weight: Option<PathBuf>,
    #[arg(long)]
    pub fat: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HopbWeight {
    Cofibrant,
    Comma,
}

/// The report printed on stdout, the document for `--out`, and whether something was found.
pub struct Outcome {
    pub report: Value,
    pub doc: Option<Value>,
    pub found: bool,
}

impl Outcome {
    fn found(report: Value, doc: Option<Value>) -> Self {
        Outcome { report, doc, found: true }
    }
}

fn names(x: &SimplicialSet, gens: &[Gen]) -> Vec<String> {
    gens.iter().map(|&g| x.name(g).to_string()).collect()
}

fn set_report(what: &str, x: &SimplicialSet) -> Value {
    json!({ "command": what, "f_vector": x.f_vector(), "truncation": x.truncation() })
}

fn set_outcome(what: &str, x: &SimplicialSet) -> Outcome {
    Outcome::found(set_report(what, x), Some(to_value(&SSetDoc::from_set(x))))
}

fn to_value<T: serde::Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn verdict(v: &Verdict) -> Value {
    json!({ "claim": v.claim, "holds": v.holds, "detail": v.detail })
}

fn vertex(x: &SimplicialSet, name: &str) -> anyhow::Result<Gen> {
    match x.find(name) {
        Some(g) if x.gen_dim(g) == 0 => Ok(g),
        _ => bail!("`{name}` is not a vertex"),
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let mut ws = Workspace::new(cli.trunc);
    let trunc = cli.trunc;
    let outcome = match &cli.command {
        Command::Build { file } => build(&mut ws, file)?,
        Command::Nerve { category } => {
            let c = ws.category(&read::<CategoryDoc>(category)?)?;
            let n = ws.nerve(&c)?;
            set_outcome("nerve", &n.set)
        }
        Command::Elements { weight } => {
            let WeightDoc::Set(doc) = read::<WeightDoc>(weight)? else {
                bail!("the category of elements needs a Set-valued weight");
            };
            let shape = ws.category(&doc.shape)?;
            let el = category_of_elements(&doc.to_weight(&shape)?)?;
            let report = json!({
                "command": "elements",
                "objects": el.source.object_count(),
                "morphisms": el.source.morphism_count(),
            });
            Outcome::found(report, Some(to_value(&FunctorDoc::from_functor(&el))))
        }
        Command::Join(args) => {
            let i = ws.sset(&read(&args.left)?)?;
            let set = if args.weighted {
                let p = ws.weight(&read(args.weight.as_deref().expect("clap requires it"))?)?.p;
                if args.fat {
                    weighted_fat_join(&i, &p)?.set
                } else {
                    weighted_join(&i, &p)?.set
                }
            } else {
                let right = args.right.as_deref().context("--right is required without --weighted")?;
                let j = ws.sset(&read(right)?)?;
                if args.fat {
                    fat_join(&i, &j)?.set
                } else {
                    join(&i, &j)?.set
                }
            };
            set_outcome("join", &set)
        }
        Command::Slice(args) => {
            let p = match (&args.weight, args.weighted) {
                (Some(w), true) => Some(ws.weight(&read(w)?)?.p),
                _ => None,
            };
            let d = ws.diagram(&read(&args.diagram)?)?.d;
            let p = p.unwrap_or_else(|| SimplicialMap::identity(&d.source));
            Workspace::same_shape(&p, &d)?;
            let s = if args.fat { fat_weighted_slice(&p, &d, trunc)? } else { weighted_slice(&p, &d, trunc)? };
            set_outcome("slice", s.set())
        }
        Command::Comma { left, right } => {
            let f = ws.map(&read(left)?)?;
            let g = ws.map(&read(right)?)?;
            set_outcome("comma", &comma(&f, &g, trunc)?.set)
        }
        Command::Mapspace { sset, from, to, max } => mapspace(&mut ws, sset, from, to, *max)?,
        Command::Cofweight { weight, max } => {
            let p = ws.weight(&read(weight)?)?.p;
            let cof = cofibrant_weight(&p, *max)?;
            let values: Vec<Value> = cof
                .values
                .iter()
                .map(|(v, m)| json!({ "vertex": p.target.name(*v), "f_vector": m.set.f_vector() }))
                .collect();
            Outcome::found(json!({ "command": "cofweight", "max": max, "values": values }), None)
        }
        Command::Terminal { sset, vertex: only } => {
            let q = ws.sset(&read(sset)?)?;
            match only {
                Some(name) => {
                    let t = vertex(&q, name)?;
                    let v = is_terminal_vertex(&q, t, cli.max_dim)?;
                    let report = json!({
                        "command": "terminal",
                        "vertex": name,
                        "terminal": v.verified(),
                        "bound": v.bound,
                        "detail": v.summary(),
                    });
                    Outcome { report, doc: None, found: v.verified() }
                }
                None => {
                    let ts = terminal_vertices(&q, cli.max_dim)?;
                    let report = json!({ "command": "terminal", "bound": cli.max_dim, "terminal": names(&q, &ts) });
                    Outcome { report, doc: None, found: !ts.is_empty() }
                }
            }
        }
        Command::Wlimit { weight, diagram } => wlimit(&mut ws, weight, diagram, trunc, cli.max_dim)?,
        Command::End { weight, diagram } => {
            let w = ws.sset_functor(&read::<SSetFunctorDoc>(weight)?, None)?;
            let d = ws.sset_functor(&read::<SSetFunctorDoc>(diagram)?, Some(&w.shape))?;
            set_outcome("end", &weighted_end(&w, &d, trunc)?.set)
        }
        Command::Hopb { left, right, weight } => {
            let f = ws.map(&read(left)?)?;
            let g = ws.map(&read(right)?)?;
            let choice = match weight {
                HopbWeight::Cofibrant => WeightChoice::CospanCofibrant,
                HopbWeight::Comma => WeightChoice::Comma,
            };
            let hp = homotopy_pullback(&f, &g, choice, trunc)?;
            let mut report = set_report("hopb", &hp.end.set);
            report["weight"] = json!(format!("{weight:?}").to_lowercase());
            if let Some(v) = &hp.weight_check {
                report["weight_check"] = verdict(v);
            }
            Outcome::found(report, Some(to_value(&SSetDoc::from_set(&hp.end.set))))
        }
        Command::Ho { sset } => {
            let q = ws.sset(&read(sset)?)?;
            let qc = is_quasi_category(&q, cli.max_dim)?;
            if !qc.verified() {
                let report = json!({ "command": "ho", "quasi_category": false, "detail": qc.summary() });
                return Ok(Outcome { report, doc: None, found: false });
            }
            let ho = ho_category(&q)?;
            let report = json!({
                "command": "ho",
                "quasi_category": true,
                "objects": ho.category.object_count(),
                "morphisms": ho.category.morphism_count(),
            });
            Outcome::found(report, Some(to_value(&CategoryDoc::from_category(&ho.category))))
        }
        Command::Check { suite: name } => {
            let groups = suite::run(name, trunc, cli.max_dim)?;
            let all = groups.iter().all(|(_, vs)| vs.iter().all(|v| v.holds));
            let report = json!({
                "command": "check",
                "suite": name,
                "holds": all,
                "groups": groups
                    .iter()
                    .map(|(g, vs)| json!({ "group": g, "checks": vs.iter().map(verdict).collect::<Vec<_>>() }))
                    .collect::<Vec<_>>(),
            });
            Outcome { report, doc: None, found: all }
        }
    };
    if let (Some(path), Some(doc)) = (&cli.out, &outcome.doc) {
        std::fs::write(path, crate::doc::to_json(doc)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(outcome)
}

fn build(ws: &mut Workspace, file: &Path) -> anyhow::Result<Outcome> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let doc: AnyDoc = parse(&text).with_context(|| format!("in {}", file.display()))?;
    let (kind, canonical, extra) = match &doc {
        AnyDoc::SSet(d) => {
            let x = ws.sset(d)?;
            let mut c = SSetDoc::from_set(&x);
            c.comment = d.comment.clone();
            ("sset", to_value(&c), json!({ "f_vector": x.f_vector() }))
        }
        AnyDoc::Category(d) => {
            let cat = ws.category(d)?;
            let mut c = CategoryDoc::from_category(&cat);
            c.comment = d.comment.clone();
            ("category", to_value(&c), category_summary(&cat))
        }
        AnyDoc::Map(d) => {
            let f = ws.map(d)?;
            let mut c = MapDoc::from_map(&f);
            c.comment = d.comment.clone();
            ("map", to_value(&c), json!({ "isomorphism": f.is_isomorphism() }))
        }
        AnyDoc::Weight(d) => {
            let w = ws.weight(d)?;
            let c = match (d, &w.set) {
                (WeightDoc::Set(orig), Some(set)) => {
                    let mut c = SetWeightDoc::from_weight(set);
                    c.comment = orig.comment.clone();
                    WeightDoc::Set(c)
                }
                (WeightDoc::Map(orig), _) => {
                    let mut c = MapDoc::from_map(&w.p);
                    c.comment = orig.comment.clone();
                    WeightDoc::Map(c)
                }
                _ => unreachable!("Set weights keep their functor"),
            };
            let extra = json!({ "elements": w.p.source.f_vector(), "shape": w.p.target.f_vector() });
            ("weight", to_value(&c), extra)
        }
        AnyDoc::Diagram(d) => {
            let dg = ws.diagram(d)?;
            let c = match (d, &dg.functor) {
                (DiagramDoc::Functor(orig), Some(f)) => {
                    let mut c = FunctorDoc::from_functor(f);
                    c.comment = orig.comment.clone();
                    DiagramDoc::Functor(c)
                }
                (DiagramDoc::Map(orig), _) => {
                    let mut c = MapDoc::from_map(&dg.d);
                    c.comment = orig.comment.clone();
                    DiagramDoc::Map(c)
                }
                _ => unreachable!("functor diagrams keep their functor"),
            };
            let extra = json!({ "shape": dg.d.source.f_vector(), "target": dg.d.target.f_vector() });
            ("diagram", to_value(&c), extra)
        }
        AnyDoc::SSetFunctor(d) => {
            let f = ws.sset_functor(d, None)?;
            let mut c = SSetFunctorDoc::from_functor(&f);
            c.comment = d.comment.clone();
            let values: Vec<Value> = f.values.iter().map(|v| json!(v.f_vector())).collect();
            ("sset-functor", to_value(&c), json!({ "values": values }))
        }
    };
    let mut report = json!({ "command": "build", "kind": kind, "valid": true });
    if let (Value::Object(r), Value::Object(e)) = (&mut report, extra) {
        r.extend(e);
    }
    Ok(Outcome::found(report, Some(canonical)))
}

fn category_summary(c: &FinCategory) -> Value {
    json!({
        "objects": c.object_count(),
        "morphisms": c.morphism_count(),
        "terminal": c.terminal_object().map(|o| c.object_name(o).to_string()),
    })
}

fn mapspace(ws: &mut Workspace, sset: &Path, from: &str, to: &str, max: usize) -> anyhow::Result<Outcome> {
    let x = ws.sset(&read(sset)?)?;
    let (a, b) = (vertex(&x, from)?, vertex(&x, to)?);
    let ms = mapping_space(&x, a, b, max)?;
    let f = ms.set.f_vector();
    // The cube of the matching vertex count, compared through the computed degree.
    let mut cube_dim = None;
    if let Some(&nv) = f.first() {
        if nv.is_power_of_two() {
            let k = nv.trailing_zeros() as usize;
            let model = Arc::new(cube(k).skeleton(max));
            if is_isomorphic(&ms.set, &model)?.is_some() {
                cube_dim = Some(k);
            }
        }
    }
    let report = json!({
        "command": "mapspace",
        "from": from,
        "to": to,
        "max": max,
        "necklaces": ms.necklaces.len(),
        "f_vector": f,
        "cube": cube_dim,
    });
    Ok(Outcome { report, doc: Some(to_value(&SSetDoc::from_set(&ms.set))), found: !ms.necklaces.is_empty() })
}

fn wlimit(ws: &mut Workspace, weight: &Path, diagram: &Path, trunc: usize, max_dim: usize) -> anyhow::Result<Outcome> {
    let w = ws.weight(&read(weight)?)?;
    let d = ws.diagram(&read(diagram)?)?;
    Workspace::same_shape(&w.p, &d.d)?;
    // Lifting in the slice cannot look past its truncation.
    let lim = weighted_limit(&w.p, &d.d, trunc, max_dim.min(trunc))?;
    let slice = lim.slice.set();
    let mut report = json!({
        "command": "wlimit",
        "trunc": trunc,
        "bound": lim.bound,
        "limits": names(slice, &lim.limits),
        "apexes": names(&d.d.target, &lim.apexes),
        "searches_agree": lim.agree,
        "unique": verdict(&lim.unique),
    });
    if let (Some(sw), Some(f)) = (&w.set, &d.functor) {
        let apex = cat_weighted_limit(sw, f)?.map(|c| f.target.object_name(c.apex).to_string());
        report["category_limit"] = json!(apex);
    }
    Ok(Outcome { report, doc: None, found: !lim.limits.is_empty() })
}
