//! Reproducible manifold corpora and random Kirby-move sequences.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::surgery::{apply_move, Edge, Move, PlumbingForest, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub forest: PlumbingForest,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// A random forest with 1..=max_n vertices and framings in [−bound, bound].
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, max_n: usize, bound: i64) -> PlumbingForest {
    let n = rng.gen_range(1..=max_n.max(1));
    let framings: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        // mostly trees, occasionally a new component
        if rng.gen_bool(0.85) {
            let u = rng.gen_range(0..v);
            edges.push(Edge::new(u, v, random_sign(rng)));
        }
    }
    PlumbingForest::new(framings, edges).expect("edges attach to earlier vertices")
}

/// The chain with framings −a_1, …, −a_k where p/q = a_1 − 1/(a_2 − …), a_i ≥ 2.
pub fn lens_chain(p: i64, q: i64) -> PlumbingForest {
    assert!(p > q && q >= 1 && num_integer::gcd(p, q) == 1, "need p > q >= 1 coprime");
    let (mut p, mut q) = (p, q);
    let mut framings = Vec::new();
    while q != 0 {
        let a = (p + q - 1) / q;
        framings.push(-a);
        (p, q) = (q, a * q - p);
    }
    PlumbingForest::chain(&framings)
}

/// The E8 plumbing: a star with arms of lengths 1, 2 and 4, framings 2.
pub fn e8() -> PlumbingForest {
    let edges = vec![
        Edge::new(0, 1, 1),
        Edge::new(0, 2, 1),
        Edge::new(2, 3, 1),
        Edge::new(0, 4, 1),
        Edge::new(4, 5, 1),
        Edge::new(5, 6, 1),
        Edge::new(6, 7, 1),
    ];
    PlumbingForest::new(vec![2; 8], edges).expect("E8 is a tree")
}

pub const LENS_SPACES: [(i64, i64); 6] = [(2, 1), (3, 1), (5, 2), (7, 3), (8, 3), (13, 5)];

/// `size` random forests (n ≤ 8, |m| ≤ 5) followed by lens chains and E8.
pub fn standard_corpus(seed: u64, size: usize) -> Vec<CorpusEntry> {
    let mut r = rng(seed);
    let mut out: Vec<CorpusEntry> = (0..size)
        .map(|i| CorpusEntry {
            name: format!("random-{i}"),
            forest: random_forest(&mut r, 8, 5),
        })
        .collect();
    for (p, q) in LENS_SPACES {
        out.push(CorpusEntry {
            name: format!("lens({p},{q})"),
            forest: lens_chain(p, q),
        });
    }
    out.push(CorpusEntry {
        name: "e8".into(),
        forest: e8(),
    });
    out
}

/// Vertices that can be blown down.
pub fn blow_down_targets(forest: &PlumbingForest) -> Vec<usize> {
    (0..forest.vertex_count())
        .filter(|&v| forest.framing(v).abs() == 1 && forest.degree(v) <= 1)
        .collect()
}

/// A random legal sequence of `len` moves and the forest it ends at.
///
/// Forests are kept below `cap` vertices by preferring blow-downs near the cap.
pub fn random_moves<R: Rng + ?Sized>(
    rng: &mut R,
    forest: &PlumbingForest,
    len: usize,
    cap: usize,
) -> (Vec<Move>, PlumbingForest) {
    let mut cur = forest.clone();
    let mut moves = Vec::with_capacity(len);
    for _ in 0..len {
        let n = cur.vertex_count();
        let downs = blow_down_targets(&cur);
        let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let mut options: Vec<Move> = Vec::new();
        if let Some(&v) = downs.choose(rng) {
            options.push(Move::BlowDown { vertex: v });
            if n >= cap {
                options.push(Move::BlowDown { vertex: v });
            }
        }
        if n > 0 {
            options.push(Move::Reverse {
                vertex: rng.gen_range(0..n),
            });
        }
        if n < cap {
            options.push(Move::Stabilize(sign));
            if n > 0 {
                options.push(Move::BlowUp {
                    vertex: rng.gen_range(0..n),
                    sign,
                });
                options.push(Move::BlowUp {
                    vertex: rng.gen_range(0..n),
                    sign,
                });
            }
        }
        let Some(mv) = options.choose(rng).copied() else {
            break;
        };
        cur = apply_move(&cur, &mv).expect("generated moves are legal");
        moves.push(mv);
    }
    (moves, cur)
}
