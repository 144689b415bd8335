use serde_json::{json, Value};
use spinmod_core::category::search::{search_spin_categories, SearchBudget};
use spinmod_core::category::{
    character_table, check_axioms, grading, invertibles, io, modularize, primitive_root, reduced_subcategory,
    refinable_structures, CategoryData,
};
use spinmod_core::invariants::{refined_table, CosetRoute, Evaluator, InvariantValue, Refinement, RefinementOptions};
use spinmod_core::structures::{self, StructureKind};
use spinmod_core::surgery::{linking_matrix, signature};
use spinmod_core::verify::{self, VerifyConfig};
use spinmod_core::RefinementKind;

use crate::{input, CategoryCommand, Command, DeriveCommand, Format, InvariantArgs, KindArg, ManifoldCommand, RefineArg, StructuresArgs, Suite, VerifyArgs};

pub struct Outcome {
    pub text: String,
    /// False when a check ran and failed.
    pub ok: bool,
}

impl Outcome {
    fn json(v: Value) -> Self {
        Outcome {
            text: serde_json::to_string_pretty(&v).expect("json values serialize"),
            ok: true,
        }
    }
}

type Result<T> = std::result::Result<T, String>;

fn err(e: impl ToString) -> String {
    e.to_string()
}

pub fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Category(c) => category(c),
        Command::Manifold(ManifoldCommand::Show { manifold }) => {
            let f = input::manifold(&manifold)?;
            let l = linking_matrix(&f);
            Ok(Outcome::json(json!({
                "vertices": f.vertex_count(),
                "framings": f.framings(),
                "edges": f.edges().iter().map(|e| json!([e.u, e.v, e.sign])).collect::<Vec<_>>(),
                "linking_matrix": l.rows(),
                "signature": signature(&l),
                "text": f.to_text(),
            })))
        }
        Command::Structures(a) => structures_cmd(a),
        Command::Invariant(a) => invariant(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn structure_summary(cat: &CategoryData) -> Result<Value> {
    let group = invertibles(cat);
    let chars = character_table(cat, &group).map_err(err)?;
    let structs = refinable_structures(cat, &group, &chars).map_err(err)?;
    Ok(json!({
        "invertibles": group.elements.iter().map(|&g| cat.label_name(g)).collect::<Vec<_>>(),
        "element_orders": group.element_orders,
        "refinable_structures": structs,
    }))
}

fn category(cmd: CategoryCommand) -> Result<Outcome> {
    match cmd {
        CategoryCommand::Check { category } => {
            let cat = input::category(&category)?;
            let report = check_axioms(&cat);
            let ok = report.premodular && report.modular;
            let mut out = Outcome::json(json!({ "category": cat.name(), "report": report }));
            out.ok = ok;
            Ok(out)
        }
        CategoryCommand::Show { category } => {
            let cat = input::category(&category)?;
            let data: Value = serde_json::from_str(&io::to_json(&cat)).map_err(err)?;
            Ok(Outcome::json(json!({ "data": data, "structure": structure_summary(&cat)? })))
        }
        CategoryCommand::Derive { category, how } => {
            let cat = input::category(&category)?;
            let derived = match how {
                DeriveCommand::Reduce { t, m, e_d } => {
                    let t = cat.find_label(&t).ok_or_else(|| format!("no label named {t}"))?;
                    let group = invertibles(&cat);
                    let d = group.order_of(t).ok_or_else(|| format!("{} is not invertible", cat.label_name(t)))?;
                    let e = primitive_root(&cat, d, e_d).map_err(err)?;
                    let g = grading(&cat, &group, t, &e).map_err(err)?;
                    reduced_subcategory(&cat, &g, m).map_err(err)?
                }
                DeriveCommand::Modularize => modularize(&cat).map_err(err)?,
            };
            Ok(Outcome {
                text: io::to_json(&derived),
                ok: true,
            })
        }
        CategoryCommand::Search {
            max_r,
            max_alpha,
            min_spin_order,
        } => {
            let report = search_spin_categories(SearchBudget {
                max_r,
                max_alpha,
                min_spin_order,
            });
            Ok(Outcome::json(json!({
                "budget": report.budget,
                "examined": report.examined,
                "extensions": report.extensions,
                "spin_candidates": report.spin_candidates,
                "hits": report.hits.iter().map(|h| json!({
                    "description": h.description,
                    "rank": h.category.rank(),
                    "structure": h.structure,
                })).collect::<Vec<_>>(),
            })))
        }
    }
}

fn structures_cmd(a: StructuresArgs) -> Result<Outcome> {
    let l = match (&a.matrix, &a.manifold) {
        (Some(m), _) => input::matrix(m)?,
        (None, Some(f)) => linking_matrix(&input::manifold(f)?),
        (None, None) => return Err("one of --matrix or --manifold is required".into()),
    };
    let kind = match a.kind {
        KindArg::Spin => StructureKind::Spin,
        KindArg::Coh => StructureKind::Cohomology,
        KindArg::Chern => StructureKind::Chern,
        KindArg::Hom => StructureKind::Homology,
    };
    let reps = structures::enumerate(kind, &l, a.d).map_err(err)?;
    Ok(Outcome::json(json!({
        "kind": kind.name(),
        "d": a.d,
        "count": reps.len(),
        "representatives": reps,
    })))
}

fn value_json(v: &InvariantValue) -> Value {
    json!({
        "exact": v.exact,
        "text": v.exact.to_string(),
        "approx": { "re": v.approx.re, "im": v.approx.im },
    })
}

fn complex(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 5e-11 { 0.0 } else { x };
    format!("{:.10} {:+.10}i", clean(re), clean(im))
}

fn invariant(a: InvariantArgs) -> Result<Outcome> {
    let cat = input::category(&a.category)?;
    let forest = input::manifold(&a.manifold)?;
    let ev = Evaluator::new(&cat).map_err(err)?;
    let wrt = ev.wrt(&forest).map_err(err)?;
    let mut rows: Vec<(Option<Vec<i64>>, InvariantValue)> = vec![(None, wrt.clone())];
    let mut doc = json!({
        "category": cat.name(),
        "vertices": forest.vertex_count(),
        "signature": {
            "b_plus": wrt.normalization.b_plus,
            "b_minus": wrt.normalization.b_minus,
            "nullity": wrt.normalization.nullity,
        },
        "denominators": {
            "plus": wrt.normalization.plus_denominator,
            "minus": wrt.normalization.minus_denominator,
        },
        "wrt": value_json(&wrt),
    });
    if let Some(kind) = a.refine {
        let d = a.d.ok_or("--refine needs --d")?;
        let kind = match kind {
            RefineArg::Spin => RefinementKind::Spin,
            RefineArg::Coh => RefinementKind::Cohomology,
            RefineArg::Spinc => RefinementKind::Spinc,
            RefineArg::Hom => RefinementKind::Homology,
        };
        let options = RefinementOptions {
            e_power: a.e_d,
            allow_override: a.allow_override,
            route: if a.enumerate { CosetRoute::Enumerate } else { CosetRoute::Fourier },
        };
        let r = Refinement::new(&ev, kind, d, options).map_err(err)?;
        let table = refined_table(&ev, &r, &forest).map_err(err)?;
        let prefactor = table.entries.first().and_then(|e| e.1.normalization.prefactor.clone());
        doc["refinement"] = json!({
            "kind": kind.name(),
            "d": d,
            "e_d": a.e_d,
            "override": a.allow_override,
            "generator": cat.label_name(r.grading.generator),
            "prefactor": prefactor,
            "table": table.entries.iter().map(|(s, v)| json!({
                "structure": s,
                "value": value_json(v),
            })).collect::<Vec<_>>(),
        });
        rows = table.entries.into_iter().map(|(s, v)| (Some(s), v)).collect();
    }
    let text = match a.format {
        Format::Json => serde_json::to_string_pretty(&doc).expect("json values serialize"),
        Format::Csv => {
            let mut out = String::from("structure,exact,re,im\n");
            for (s, v) in &rows {
                let s = s
                    .as_ref()
                    .map(|s| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                out.push_str(&format!("{s},\"{}\",{},{}\n", v.exact, v.approx.re, v.approx.im));
            }
            out.pop();
            out
        }
        Format::Pretty => {
            let mut out = format!(
                "{} on {} vertices (b+ = {}, b- = {})\nwrt = {}  ≈ {}",
                cat.name(),
                forest.vertex_count(),
                wrt.normalization.b_plus,
                wrt.normalization.b_minus,
                wrt.exact,
                complex(wrt.approx.re, wrt.approx.im)
            );
            if let Some(r) = doc.get("refinement") {
                out.push_str(&format!("\n{} refinement, d = {}", r["kind"].as_str().unwrap_or(""), r["d"]));
                for (s, v) in &rows {
                    out.push_str(&format!(
                        "\n  {:?} -> {}  ≈ {}",
                        s.as_deref().unwrap_or(&[]),
                        v.exact,
                        complex(v.approx.re, v.approx.im)
                    ));
                }
            }
            out
        }
    };
    Ok(Outcome { text, ok: true })
}

fn verify_cmd(a: VerifyArgs) -> Result<Outcome> {
    let cfg = VerifyConfig {
        corpus_size: a.corpus_size,
        seed: a.seed,
        sequences: a.sequences,
        sequence_length: a.sequence_length,
    };
    let name = match a.suite {
        Suite::Sum => "sum",
        Suite::Kirby => "kirby",
        Suite::Lemmas => "lemmas",
        Suite::Decomposition => "decomposition",
        Suite::Oracle => "oracle",
        Suite::Moo => "moo",
        Suite::Spinc => "spinc",
    };
    let report = verify::run_suite(name, &cfg).ok_or_else(|| format!("unknown suite {name}"))?;
    let ok = report.ok();
    let mut out = Outcome::json(json!({ "config": cfg, "pass": ok, "report": report }));
    out.ok = ok;
    Ok(out)
}
