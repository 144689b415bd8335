//! Verification drivers: each suite returns a report with witnesses for every failure.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{
    abelian_category, character_table, grading, invertibles, kirby_color, primitive_root, refinable_structures,
    sl2_category, CategoryData, KirbyKind,
};
use crate::category::search::{search_spin_categories, SearchBudget};
use crate::corpus::{random_forest, random_moves, standard_corpus, CorpusEntry};
use crate::cyclo::{gauss_sum, make_root, CycloNumber};
use crate::invariants::{
    moo, moo_refined, quadratic_sum, refined_table, CosetRoute, DecompositionSetup, Evaluator,
    InvariantError, MooParams, Refinement, RefinementKind, RefinementOptions,
};
use crate::structures::{self, brute, MatrixMove, StructureKind};
use crate::surgery::{apply_move, signature, LinkingMatrix, Move, PlumbingForest, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub corpus_size: usize,
    pub seed: u64,
    /// Random move sequences per manifold.
    pub sequences: usize,
    pub sequence_length: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            corpus_size: 50,
            seed: 1,
            sequences: 200,
            sequence_length: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub manifold: Option<String>,
    pub forest: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: usize,
    pub passed: usize,
    pub failures: Vec<Witness>,
    pub notes: Vec<String>,
}

/// At most this many witnesses are kept per report.
const MAX_WITNESSES: usize = 20;

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.into(),
            checks: 0,
            passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// True when every check passed.
    pub fn ok(&self) -> bool {
        self.checks == self.passed
    }

    fn pass(&mut self) {
        self.checks += 1;
        self.passed += 1;
    }

    fn fail(&mut self, w: Witness) {
        self.checks += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(w);
        }
    }

    fn check(&mut self, ok: bool, w: impl FnOnce() -> Witness) {
        if ok {
            self.pass()
        } else {
            self.fail(w())
        }
    }

    fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.passed += other.passed;
        for w in other.failures {
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(w);
            }
        }
        self.notes.extend(other.notes);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn witness(check: &str, entry: Option<&CorpusEntry>, detail: impl Into<String>) -> Witness {
    Witness {
        check: check.into(),
        manifold: entry.map(|e| e.name.clone()),
        forest: entry.map(|e| e.forest.to_text()),
        detail: detail.into(),
    }
}

fn forest_witness(check: &str, f: &PlumbingForest, detail: impl Into<String>) -> Witness {
    Witness {
        check: check.into(),
        manifold: None,
        forest: Some(f.to_text()),
        detail: detail.into(),
    }
}

fn per_manifold<F>(suite: &str, corpus: &[CorpusEntry], f: F) -> Report
where
    F: Fn(usize, &CorpusEntry) -> Report + Sync,
{
    let parts: Vec<Report> = corpus.par_iter().enumerate().map(|(i, e)| f(i, e)).collect();
    let mut out = Report::new(suite);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn manifold_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index as u64 + 1);
    r
}

fn evaluator(r: u32) -> Evaluator {
    Evaluator::new(&sl2_category(r).expect("sl2 is built in")).expect("sl2 evaluates")
}

struct RefinedSetup {
    label: String,
    ev: Evaluator,
    refinement: Refinement,
}

impl RefinedSetup {
    fn new(r: u32, kind: RefinementKind, d: u64) -> Result<Self, InvariantError> {
        let ev = evaluator(r);
        let refinement = Refinement::new(&ev, kind, d, RefinementOptions::default())?;
        Ok(RefinedSetup {
            label: format!("sl2({r}) {} d={d}", kind.name()),
            ev,
            refinement,
        })
    }
}

/// Σ over the spin table of sl2(8) and the cohomology table of sl2(6) equals the WRT invariant.
pub fn verify_sum(cfg: &VerifyConfig) -> Report {
    let setups = [
        RefinedSetup::new(8, RefinementKind::Spin, 2).expect("sl2(8) is 2-spin"),
        RefinedSetup::new(6, RefinementKind::Cohomology, 2).expect("sl2(6) is 2-refinable"),
    ];
    let corpus = standard_corpus(cfg.seed, cfg.corpus_size);
    let mut report = per_manifold("sum", &corpus, |_, entry| {
        let mut rep = Report::new("sum");
        for s in &setups {
            let outcome = (|| {
                let wrt = s.ev.wrt(&entry.forest)?.exact;
                let table = refined_table(&s.ev, &s.refinement, &entry.forest)?;
                let total = table.total().unwrap_or_else(|| CycloNumber::zero(wrt.field()));
                Ok::<_, InvariantError>((wrt, total))
            })();
            match outcome {
                Ok((wrt, total)) => rep.check(wrt == total, || {
                    witness(&s.label, Some(entry), format!("wrt = {wrt}, table sum = {total}"))
                }),
                Err(e) => rep.fail(witness(&s.label, Some(entry), e.to_string())),
            }
        }
        rep
    });
    report.note(format!("{} manifolds, seed {}", corpus.len(), cfg.seed));
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Fingerprint {
    wrt: Vec<CycloNumber>,
    tables: Vec<Vec<CycloNumber>>,
}

fn fingerprint(plain: &[Evaluator], refined: &[RefinedSetup], f: &PlumbingForest) -> Result<Fingerprint, InvariantError> {
    Ok(Fingerprint {
        wrt: plain.iter().map(|e| e.wrt(f).map(|v| v.exact)).collect::<Result<_, _>>()?,
        tables: refined
            .iter()
            .map(|s| refined_table(&s.ev, &s.refinement, f).map(|t| t.multiset()))
            .collect::<Result<_, _>>()?,
    })
}

/// WRT values and refined-table multisets are unchanged by random move sequences.
pub fn verify_kirby(cfg: &VerifyConfig) -> Report {
    let plain = [evaluator(5), evaluator(6), evaluator(8)];
    let refined = [
        RefinedSetup::new(8, RefinementKind::Spin, 2).expect("sl2(8) is 2-spin"),
        RefinedSetup::new(6, RefinementKind::Cohomology, 2).expect("sl2(6) is 2-refinable"),
        RefinedSetup::new(6, RefinementKind::Homology, 2).expect("sl2(6) is 2-refinable"),
    ];
    let corpus = standard_corpus(cfg.seed, cfg.corpus_size);
    let mut report = per_manifold("kirby", &corpus, |i, entry| {
        let mut rep = Report::new("kirby");
        let base = match fingerprint(&plain, &refined, &entry.forest) {
            Ok(b) => b,
            Err(e) => {
                rep.fail(witness("baseline", Some(entry), e.to_string()));
                return rep;
            }
        };
        let mut rng = manifold_rng(cfg.seed, i);
        for _ in 0..cfg.sequences {
            let (moves, end) = random_moves(&mut rng, &entry.forest, cfg.sequence_length, 12);
            match fingerprint(&plain, &refined, &end) {
                Ok(fp) => rep.check(fp == base, || {
                    witness("move sequence", Some(entry), format!("{moves:?} changes the invariants"))
                }),
                Err(e) => rep.fail(witness("move sequence", Some(entry), format!("{moves:?}: {e}"))),
            }
        }
        rep
    });
    report.note(format!(
        "{} manifolds x {} sequences of {} moves; wrt on sl2(5), sl2(6), sl2(8); tables: {}",
        corpus.len(),
        cfg.sequences,
        cfg.sequence_length,
        refined.iter().map(|s| s.label.as_str()).collect::<Vec<_>>().join(", ")
    ));
    report
}

/// F(U_±1(ω_u)) vanishes off the distinguished degree; related twist and character identities.
pub fn verify_lemmas() -> Report {
    let mut rep = Report::new("lemmas");
    let unknot = |m: i64| PlumbingForest::chain(&[m]);
    // (r, d, surviving degree)
    for (r, d, keep) in [(8u32, 2usize, 1usize), (12, 2, 1), (6, 2, 0), (10, 2, 0)] {
        let ev = evaluator(r);
        let cat = ev.category();
        let group = invertibles(cat);
        let e = primitive_root(cat, d, 1).expect("field contains e_d");
        let g = grading(cat, &group, (r - 2) as usize, &e).expect("t grades");
        for m in [1i64, -1] {
            let mut total = CycloNumber::zero(cat.field());
            for u in 0..d {
                let w = kirby_color(cat, KirbyKind::Graded(u), Some(&g)).expect("graded color").weights;
                let v = ev.eval_weighted(&unknot(m), &[&w]).expect("evaluates");
                let label = format!("sl2({r}) U_{m:+}(ω_{u})");
                rep.check(v.is_zero() == (u != keep), || {
                    forest_witness(&label, &unknot(m), format!("value {v}"))
                });
                total += &v;
            }
            let (plus, minus) = ev.denominators();
            let want = if m > 0 { plus } else { minus };
            rep.check(&total == want, || {
                forest_witness("graded parts sum to F(U(ω))", &unknot(m), format!("{total} vs {want}"))
            });
        }
    }
    // ⟨t⟩ = ±1, and θ_t = −1 exactly when r ≡ 0 mod 4
    for r in 3..=12u32 {
        let cat = sl2_category(r).expect("builtin");
        let t = (r - 2) as usize;
        let q = cat.qdim(t);
        let one = CycloNumber::one(cat.field());
        rep.check(q == &one || q == &-&one, || {
            witness(&format!("sl2({r}) ⟨t⟩ = ±1"), None, format!("⟨t⟩ = {q}"))
        });
        let spin = cat.twist(t) == &-&one;
        rep.check(spin == (r % 4 == 0), || {
            witness(&format!("sl2({r}) spin type"), None, format!("θ_t = {}", cat.twist(t)))
        });
    }
    // Σ_{x even} e_{2d}^{(1+x)i} = d·e_{2d}^i [d | i]: d at i = 0, −d at i = d
    for d in [1i64, 2, 3, 4, 6] {
        for i in 0..2 * d {
            let mut s = CycloNumber::zero(make_root(2 * d as u32, 1).field());
            for x in (0..2 * d).step_by(2) {
                s += &make_root(2 * d as u32, (1 + x) * i);
            }
            let want = if i == 0 { d } else if i == d { -d } else { 0 };
            rep.check(s.as_integer() == Some(want), || {
                witness("even character sum", None, format!("d={d} i={i}: {s}"))
            });
        }
    }
    rep
}

/// τ_C(M) = τ_C̃(M)·τ^MOO_ξ(M) for sl2(r) with r odd.
pub fn verify_decomposition(cfg: &VerifyConfig, rs: &[u32]) -> Report {
    let corpus = standard_corpus(cfg.seed, cfg.corpus_size);
    let mut report = Report::new("decomposition");
    for &r in rs {
        let setup = match DecompositionSetup::sl2(r) {
            Ok(s) => s,
            Err(e) => {
                report.fail(witness(&format!("sl2({r}) setup"), None, e.to_string()));
                continue;
            }
        };
        report.note(format!(
            "sl2({r}): η = {}, ξ = {}, reduced rank {}",
            setup.eta,
            setup.xi,
            setup.reduced.rank()
        ));
        let part = per_manifold("decomposition", &corpus, |_, entry| {
            let mut rep = Report::new("decomposition");
            let label = format!("sl2({r})");
            match setup.check(&entry.forest) {
                Ok(c) => rep.check(c.holds, || {
                    witness(
                        &label,
                        Some(entry),
                        format!("lhs {} vs {} · {}", c.lhs, c.reduced, c.moo),
                    )
                }),
                Err(e) => rep.fail(witness(&label, Some(entry), e.to_string())),
            }
            rep
        });
        report.absorb(part);
    }
    report
}

fn oracle_categories() -> Vec<CategoryData> {
    let mut out: Vec<CategoryData> = (3..=6).map(|r| sl2_category(r).expect("builtin")).collect();
    out.push(abelian_category(3, &make_root(3, 1)).expect("q^6 = 1"));
    out.push(abelian_category(5, &make_root(5, 2)).expect("q^10 = 1"));
    out
}

/// The message-passing evaluator against brute-force coloring sums.
pub fn verify_dp_oracle(seed: u64, instances: usize) -> Report {
    let evs: Vec<Evaluator> = oracle_categories()
        .iter()
        .map(|c| Evaluator::new(c).expect("evaluates"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(usize, PlumbingForest, Vec<Vec<i64>>)> = (0..instances)
        .map(|_| {
            let k = rng.gen_range(0..evs.len());
            let f = random_forest(&mut rng, 4, 4);
            let rank = evs[k].category().rank();
            let w = (0..f.vertex_count() * rank).map(|_| rng.gen_range(-3..=3)).collect::<Vec<i64>>();
            (k, f, w.chunks(rank).map(|c| c.to_vec()).collect())
        })
        .collect();
    let parts: Vec<Report> = cases
        .par_iter()
        .map(|(k, f, ints)| {
            let mut rep = Report::new("oracle");
            let ev = &evs[*k];
            // integer weights twisted by quantum dimensions keep the test away from trivial cases
            let weights: Vec<Vec<CycloNumber>> = ints
                .iter()
                .map(|row| row.iter().zip(ev.category().qdims()).map(|(&c, q)| q.scale(c)).collect())
                .collect();
            let w: Vec<&[CycloNumber]> = weights.iter().map(|x| x.as_slice()).collect();
            let label = format!("dp vs brute on {}", ev.category().name());
            match (ev.eval_weighted(f, &w), ev.eval_weighted_brute(f, &w)) {
                (Ok(a), Ok(b)) => rep.check(a == b, || forest_witness(&label, f, format!("{a} vs {b}"))),
                (a, b) => rep.fail(forest_witness(&label, f, format!("{a:?} / {b:?}"))),
            }
            rep
        })
        .collect();
    let mut out = Report::new("oracle");
    for p in parts {
        out.absorb(p);
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng, max_n: usize, bound: i64) -> LinkingMatrix {
    let n = rng.gen_range(1..=max_n);
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    LinkingMatrix::new(rows).expect("symmetric")
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

/// Structure-set solvers against exhaustive search.
pub fn verify_structure_oracle(seed: u64, instances: usize) -> Report {
    let mut rep = Report::new("oracle");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let kinds = [StructureKind::Spin, StructureKind::Cohomology, StructureKind::Chern, StructureKind::Homology];
    let mut done = 0;
    while done < instances {
        let l = random_matrix(&mut rng, 4, 6);
        let d = rng.gen_range(2..=8u64);
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let m = kind.coordinate_modulus(d) as u128;
        if m.pow(l.size() as u32) > brute::MAX_SEARCH {
            continue;
        }
        if kind == StructureKind::Spin && d % 2 == 1 {
            continue;
        }
        done += 1;
        let fast = structures::enumerate(kind, &l, d);
        let slow = match kind {
            StructureKind::Spin => brute::spin_solutions(&l, d),
            StructureKind::Cohomology => brute::cohomology_classes(&l, d),
            StructureKind::Chern => brute::chern_vectors(&l, d),
            StructureKind::Homology => brute::homology_classes(&l, d),
        };
        let label = format!("{} d={d}", kind.name());
        match (fast, slow) {
            (Ok(a), Ok(b)) => {
                let (a, b) = (sorted(a), sorted(b));
                rep.check(a == b, || {
                    witness(&label, None, format!("L = {:?}: {} vs {} elements", l.rows(), a.len(), b.len()))
                })
            }
            (a, b) => rep.fail(witness(&label, None, format!("L = {:?}: {a:?} / {b:?}", l.rows()))),
        }
    }
    rep
}

/// |Chern vectors| = |coker(L mod d)|, the latter from the diagonal form.
pub fn verify_chern_counts(seed: u64, instances: usize) -> Report {
    let mut rep = Report::new("chern-count");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc4e2);
    for _ in 0..instances {
        let l = random_matrix(&mut rng, 4, 6);
        let d = rng.gen_range(2..=4u64);
        let label = format!("d={d}");
        match structures::chern_vectors(&l, d) {
            Ok(c) => {
                let coker = structures::cokernel_order(&l, d);
                rep.check(c.classes.len() as u128 == coker, || {
                    witness(&label, None, format!("L = {:?}: {} vs {coker}", l.rows(), c.classes.len()))
                })
            }
            Err(e) => rep.fail(witness(&label, None, format!("L = {:?}: {e}", l.rows()))),
        }
    }
    rep
}

pub fn verify_oracle(cfg: &VerifyConfig) -> Report {
    let mut rep = verify_dp_oracle(cfg.seed, 200);
    rep.absorb(verify_structure_oracle(cfg.seed, 200));
    rep.absorb(verify_chern_counts(cfg.seed, 100));
    rep.suite = "oracle".into();
    rep
}

/// Unrefined and refined MOO normalizations, Gauss sum norms and the refined partition identity.
pub fn verify_moo() -> Report {
    let mut rep = Report::new("moo");
    let one = LinkingMatrix::new(vec![vec![1]]).expect("1x1");
    let zero = LinkingMatrix::new(vec![vec![0]]).expect("1x1");
    for (m, xi) in [(2u32, make_root(4, 1)), (3, make_root(3, 1)), (4, make_root(8, 1)), (5, make_root(5, 2)), (7, make_root(7, 3))] {
        let p = MooParams::new(m, xi);
        let a = moo(&one, &p).map(|v| v.exact);
        rep.check(matches!(&a, Ok(v) if v.is_one()), || witness("moo([1]) = 1", None, format!("m={m}: {a:?}")));
        let b = moo(&zero, &p).map(|v| v.exact.as_integer());
        rep.check(b == Ok(Some(m as i64)), || witness("moo([0]) = m", None, format!("m={m}: {b:?}")));
    }
    for m in [3u32, 5, 7] {
        for k in 1..m as i64 {
            let g = gauss_sum(m, &make_root(m, k));
            let n = (&g * &g.conj()).as_integer();
            rep.check(n == Some(m as i64), || witness("|g|² = m", None, format!("m={m}, ξ=ζ_{m}^{k}: {n:?}")));
        }
    }
    // Σ_c over (Z_δ)^n of refined values = unrefined sum over Z_{αδm}, same normalization
    let mats = [
        LinkingMatrix::new(vec![vec![2, 1], vec![1, -2]]).expect("sym"),
        LinkingMatrix::new(vec![vec![1, 1], vec![1, 3]]).expect("sym"),
        LinkingMatrix::new(vec![vec![-1]]).expect("sym"),
        LinkingMatrix::new(vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, -3]]).expect("sym"),
    ];
    for (m, delta, alpha, xi) in [(2u32, 2u32, 1u32, make_root(8, 1)), (3, 2, 1, make_root(12, 1)), (1, 2, 2, make_root(8, 3)), (3, 1, 1, make_root(3, 1))] {
        for l in &mats {
            let n = l.size();
            let mut total = CycloNumber::zero(xi.field());
            let mut ok = true;
            let mut classes = Vec::new();
            brute::for_each_vector(delta as u64, n, |c| classes.push(c.to_vec()));
            for c in classes {
                match moo_refined(l, &MooParams::new(m, xi.clone()).refined(delta, alpha, c)) {
                    Ok(v) => total += &v.exact,
                    Err(_) => ok = false,
                }
            }
            let range = (alpha * delta * m) as i64;
            let unrefined = quadratic_sum(l, &xi, range, 1, &vec![0; n]);
            let g = quadratic_sum(
                &one,
                &xi,
                range,
                delta as i64,
                &[if delta == 1 { 0 } else { delta as i64 / 2 }],
            );
            let sig = signature(l);
            let want = (|| {
                let g = g?;
                let den = g.pow(sig.b_plus as i64)? * g.conj().pow(sig.b_minus as i64)?;
                Ok::<_, InvariantError>(unrefined?.try_div(&den)?)
            })();
            let label = format!("refined partition m={m} δ={delta} α={alpha}");
            rep.check(ok && want.as_ref() == Ok(&total), || {
                witness(&label, None, format!("L = {:?}: {total} vs {want:?}", l.rows()))
            });
        }
    }
    rep
}

/// The outcome of the spin^c suite, including whether the full invariance check ran.
#[derive(Debug, Clone, Serialize)]
pub struct SpincOutcome {
    pub report: Report,
    /// Categories with a cyclic 2d-spin subgroup, d even, found by the search.
    pub instances: usize,
    pub invariance_checked: bool,
}

/// Multiset invariance of spin^c tables under stabilization and orientation reversal.
fn spinc_invariance(
    ev: &Evaluator,
    r: &Refinement,
    corpus: &[CorpusEntry],
    label: &str,
) -> Report {
    per_manifold("spinc", corpus, |_, entry| {
        let mut rep = Report::new("spinc");
        let table = |f: &PlumbingForest| refined_table(ev, r, f).map(|t| t.multiset());
        let base = match table(&entry.forest) {
            Ok(b) => b,
            Err(e) => {
                rep.fail(witness(label, Some(entry), e.to_string()));
                return rep;
            }
        };
        let mut moves = vec![Move::Stabilize(Sign::Plus), Move::Stabilize(Sign::Minus)];
        moves.extend((0..entry.forest.vertex_count()).map(|v| Move::Reverse { vertex: v }));
        for mv in moves {
            let after = apply_move(&entry.forest, &mv).map_err(InvariantError::from).and_then(|f| table(&f));
            rep.check(after.as_ref() == Ok(&base), || {
                witness(label, Some(entry), format!("{mv:?} changes the table"))
            });
        }
        rep
    })
}

/// Structure-set and coset-partition checks for Chern vectors.
fn chern_structure_checks(seed: u64) -> Report {
    let mut rep = Report::new("spinc");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5c);
    for _ in 0..60 {
        let l = random_matrix(&mut rng, 3, 5);
        let n = l.size();
        let d = rng.gen_range(1..=4u64);
        let m = 2 * d;
        let set = match structures::chern_vectors(&l, d) {
            Ok(s) => s,
            Err(e) => {
                rep.fail(witness("chern vectors", None, e.to_string()));
                continue;
            }
        };
        // cosets c + 2·Im L partition the vectors with σ_i ≡ L_ii (mod 2)
        let elems = set.subgroup.elements();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut disjoint = true;
        for c in &set.classes {
            for k in &elems {
                let x: Vec<i64> = c.iter().zip(k).map(|(a, b)| (a + b).rem_euclid(m as i64)).collect();
                disjoint &= seen.insert(x);
            }
        }
        let diag = l.diagonal();
        let all_characteristic = seen
            .iter()
            .all(|x| x.iter().zip(&diag).all(|(a, b)| (a - b).rem_euclid(2) == 0));
        let expected = (d as usize).pow(n as u32);
        rep.check(disjoint && all_characteristic && seen.len() == expected, || {
            witness(
                "coset partition",
                None,
                format!("L = {:?}, d={d}: {} elements covered, expected {expected}", l.rows(), seen.len()),
            )
        });
        rep.check(set.classes.len() as u128 == structures::cokernel_order(&l, d), || {
            witness("chern count", None, format!("L = {:?}, d={d}", l.rows()))
        });
        // transport along a slide is a bijection on classes
        if n >= 2 {
            let mv = MatrixMove::Slide { i: 0, j: 1, sign: 1 };
            let moved: Result<Vec<Vec<i64>>, _> = set
                .classes
                .iter()
                .map(|c| structures::transport(StructureKind::Chern, &l, d, &mv, c).map(|x| x.1))
                .collect();
            let ok = match moved {
                Ok(v) => {
                    let distinct: HashSet<Vec<i64>> = v.into_iter().collect();
                    distinct.len() == set.classes.len()
                }
                Err(_) => false,
            };
            rep.check(ok, || witness("chern transport", None, format!("L = {:?}, d={d}", l.rows())));
        }
    }
    rep
}

/// Spin^c suite. The full invariance check runs only on 2d-spin categories
/// (d even) found by the bounded search; otherwise the structure checks run alone.
pub fn verify_spinc(cfg: &VerifyConfig, budget: SearchBudget) -> SpincOutcome {
    let mut report = chern_structure_checks(cfg.seed);
    let search = search_spin_categories(budget);
    let hits: Vec<_> = search
        .hits
        .iter()
        .filter(|h| h.structure.is_spin && h.structure.order % 4 == 0 && h.structure.generator.is_some())
        .collect();
    report.note(format!(
        "search budget {:?}: {} categories examined, {} extensions, {} instances with a cyclic 2d-spin subgroup (d even)",
        search.budget,
        search.examined,
        search.extensions,
        hits.len()
    ));
    let small: Vec<CorpusEntry> = standard_corpus(cfg.seed, cfg.corpus_size.min(10))
        .into_iter()
        .filter(|e| e.forest.vertex_count() <= 4)
        .collect();
    let mut checked = false;
    for h in &hits {
        let Ok(ev) = Evaluator::new(&h.category) else { continue };
        let d = (h.structure.order / 2) as u64;
        match Refinement::new(&ev, RefinementKind::Spinc, d, RefinementOptions::default()) {
            Ok(r) => {
                report.absorb(spinc_invariance(&ev, &r, &small, &h.description));
                checked = true;
            }
            Err(e) => report.fail(witness(&h.description, None, e.to_string())),
        }
    }
    if !checked {
        report.note(
            "CONDITIONAL: the bounded search produced no category with a cyclic 2d-spin subgroup for even d, \
             so stabilization and orientation-reversal invariance of spin^c tables was not checked; \
             only the Chern structure-set and coset-partition checks ran",
        );
    }
    // exploration outside the hypotheses: reported, never counted
    let ev = evaluator(8);
    let opts = RefinementOptions {
        allow_override: true,
        route: CosetRoute::Fourier,
        ..Default::default()
    };
    if let Ok(r) = Refinement::new(&ev, RefinementKind::Spinc, 1, opts) {
        let explore = spinc_invariance(&ev, &r, &small, "sl2(8) spinc d=1 (override)");
        report.note(format!(
            "exploration, not asserted: sl2(8) with d = 1 under the override passes {}/{} stabilization and reversal checks",
            explore.passed, explore.checks
        ));
    }
    SpincOutcome {
        report,
        instances: hits.len(),
        invariance_checked: checked,
    }
}

/// Refinability of sl2(r): 2-refinable iff r even, 2-spin iff r ≡ 0 mod 4.
pub fn verify_refinability(rs: impl IntoIterator<Item = u32>) -> Report {
    let mut rep = Report::new("refinability");
    for r in rs {
        let cat = sl2_category(r).expect("builtin");
        let group = invertibles(&cat);
        let outcome = character_table(&cat, &group).and_then(|ch| refinable_structures(&cat, &group, &ch));
        match outcome {
            Ok(structs) => {
                let two: Vec<_> = structs.iter().filter(|s| s.order == 2).collect();
                let refinable = !two.is_empty();
                let spin = two.iter().any(|s| s.is_spin);
                rep.check(refinable == (r % 2 == 0) && spin == (r % 4 == 0), || {
                    witness(
                        &format!("sl2({r})"),
                        None,
                        format!("2-refinable: {refinable}, 2-spin: {spin}"),
                    )
                });
            }
            Err(e) => rep.fail(witness(&format!("sl2({r})"), None, e.to_string())),
        }
    }
    rep
}

pub const SUITES: [&str; 7] = ["sum", "kirby", "lemmas", "decomposition", "oracle", "moo", "spinc"];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<Report> {
    Some(match name {
        "sum" => verify_sum(cfg),
        "kirby" => verify_kirby(cfg),
        "lemmas" => verify_lemmas(),
        "decomposition" => verify_decomposition(cfg, &[5, 7, 9]),
        "oracle" => verify_oracle(cfg),
        "moo" => verify_moo(),
        "spinc" => verify_spinc(cfg, SearchBudget::default()).report,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            corpus_size: 6,
            seed: 3,
            sequences: 3,
            sequence_length: 4,
        }
    }

    #[test]
    fn suites_pass_at_small_scale() {
        for name in ["sum", "kirby", "lemmas", "moo"] {
            let r = run_suite(name, &small()).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.failures);
            assert!(r.checks > 0);
        }
        let r = verify_decomposition(&small(), &[5]);
        assert!(r.ok(), "{:?}", r.failures);
        assert!(run_suite("nope", &small()).is_none());
    }

    #[test]
    fn oracles_pass() {
        assert!(verify_dp_oracle(1, 30).ok());
        assert!(verify_structure_oracle(1, 30).ok());
        assert!(verify_chern_counts(1, 30).ok());
        assert!(verify_refinability(4..=8).ok());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_sum(&small());
        let b = verify_sum(&small());
        assert_eq!(a, b);
    }

    #[test]
    fn failures_carry_witnesses() {
        let mut r = Report::new("x");
        r.check(false, || witness("c", None, "boom"));
        r.check(true, || unreachable!());
        assert!(!r.ok());
        assert_eq!((r.checks, r.passed, r.failures.len()), (2, 1, 1));
    }
}
