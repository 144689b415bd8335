//! Acceptance report: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use spinmod_core::category::search::SearchBudget;
use spinmod_core::category::{abelian_category, check_axioms, sl2_category, CategoryData};
use spinmod_core::cyclo::make_root;
use spinmod_core::verify::{self, Report, VerifyConfig};

struct Outcome {
    ok: bool,
    summary: String,
    notes: Vec<String>,
}

impl From<Report> for Outcome {
    fn from(r: Report) -> Self {
        let mut notes = r.notes.clone();
        notes.extend(r.failures.iter().take(3).map(|w| format!("witness: {w:?}")));
        Outcome {
            ok: r.ok(),
            summary: format!("{}/{} checks", r.passed, r.checks),
            notes,
        }
    }
}

fn axioms() -> Outcome {
    let mut cats: Vec<CategoryData> = (3..=12).map(|r| sl2_category(r).unwrap()).collect();
    for (n, q) in [(3, make_root(3, 1)), (5, make_root(5, 2)), (7, make_root(7, 1)), (4, make_root(8, 1)), (6, make_root(12, 5))] {
        cats.push(abelian_category(n, &q).unwrap());
    }
    let mut bad = Vec::new();
    for c in &cats {
        let rep = check_axioms(c);
        if !(rep.premodular && rep.modular && rep.transparent_objects == vec![0]) {
            bad.push(format!("{}: {:?}", c.name(), rep.violations));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        summary: format!("{} categories, {} failing", cats.len(), bad.len()),
        notes: bad,
    }
}

fn spinc(cfg: &VerifyConfig) -> Outcome {
    let out = verify::verify_spinc(cfg, SearchBudget::default());
    let mut o = Outcome::from(out.report);
    if !out.invariance_checked {
        o.summary = format!("CONDITIONAL, structure-set and coset-partition checks only: {}", o.summary);
    }
    o
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let seed = cfg.seed;
    type Criterion<'a> = (u32, &'a str, Option<Duration>, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "axioms of sl2(3..12) and modular abelian categories", Some(Duration::from_secs(5)), Box::new(axioms)),
        (2, "refinability of sl2(4..12)", None, Box::new(|| verify::verify_refinability(4..=12).into())),
        (3, "vanishing of F(U_±1(ω_u)) off the distinguished degree", None, Box::new(|| verify::verify_lemmas().into())),
        (4, "sum formulas on the standard corpus", Some(Duration::from_secs(60)), Box::new(|| verify::verify_sum(&cfg).into())),
        (5, "invariance under random move sequences", Some(Duration::from_secs(120)), Box::new(|| verify::verify_kirby(&cfg).into())),
        (
            6,
            "message passing and structure solvers against brute force",
            None,
            Box::new(|| {
                let mut r = verify::verify_dp_oracle(seed, 200);
                let s = verify::verify_structure_oracle(seed, 200);
                r.checks += s.checks;
                r.passed += s.passed;
                r.failures.extend(s.failures);
                r.into()
            }),
        ),
        (7, "Chern vector counts equal cokernel orders", None, Box::new(|| verify::verify_chern_counts(seed, 100).into())),
        (8, "decomposition for sl2(5), sl2(7), sl2(9)", Some(Duration::from_secs(60)), Box::new(|| verify::verify_decomposition(&cfg, &[5, 7, 9]).into())),
        (9, "MOO normalizations, Gauss sums and refined partition", None, Box::new(|| verify::verify_moo().into())),
        (10, "spin^c machinery", None, Box::new(|| spinc(&cfg))),
    ];
    let mut all = true;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = limit.map_or(true, |l| took <= l);
        let ok = out.ok && in_time;
        all &= ok;
        let limit_note = match limit {
            Some(l) if !in_time => format!(", over the {}s limit", l.as_secs()),
            Some(l) => format!(", limit {}s", l.as_secs()),
            None => String::new(),
        };
        println!(
            "criterion {n:>2}: {} {name}: {} ({:.2}s{limit_note})",
            if ok { "PASS" } else { "FAIL" },
            out.summary,
            took.as_secs_f64()
        );
        for note in out.notes {
            println!("              {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
