use serde::{Deserialize, Serialize};

use super::SurgeryError;

/// A signed clasp between two vertices, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: i8,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: i8) -> Self {
        Edge {
            u: u.min(v),
            v: u.max(v),
            sign,
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Framed unknots plumbed along a forest with signed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlumbingForest {
    framings: Vec<i64>,
    edges: Vec<Edge>,
}

impl PlumbingForest {
    /// Validates signs, endpoints and acyclicity; edges are stored sorted.
    pub fn new(framings: Vec<i64>, edges: Vec<Edge>) -> Result<Self, SurgeryError> {
        let n = framings.len();
        let mut edges: Vec<Edge> = edges.into_iter().map(|e| Edge::new(e.u, e.v, e.sign)).collect();
        edges.sort();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &edges {
            if e.sign != 1 && e.sign != -1 {
                return Err(SurgeryError::InvalidForest(format!("edge sign {} is not ±1", e.sign)));
            }
            if e.v >= n {
                return Err(SurgeryError::InvalidForest(format!("edge endpoint {} out of range", e.v)));
            }
            if e.u == e.v {
                return Err(SurgeryError::InvalidForest(format!("loop at vertex {}", e.u)));
            }
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return Err(SurgeryError::InvalidForest(format!(
                    "edge ({}, {}) closes a cycle or repeats an edge",
                    e.u, e.v
                )));
            }
            parent[a] = b;
        }
        Ok(PlumbingForest { framings, edges })
    }

    pub fn empty() -> Self {
        PlumbingForest {
            framings: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// A chain v_0 – v_1 – … with positive edges.
    pub fn chain(framings: &[i64]) -> Self {
        let edges = (1..framings.len()).map(|i| Edge::new(i - 1, i, 1)).collect();
        PlumbingForest::new(framings.to_vec(), edges).expect("chains are trees")
    }

    pub fn vertex_count(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.framings.is_empty()
    }

    pub fn framing(&self, v: usize) -> i64 {
        self.framings[v]
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbours of `v` with the sign of the connecting edge.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, i8)> {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| (e.other(v), e.sign))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, i8)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        adj
    }

    /// Parses the line format `vertex <id> framing <m>` / `edge <u> <v> <±1>`.
    ///
    /// Vertex ids are arbitrary tokens; vertices are numbered in order of appearance.
    /// Blank lines and text after `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, SurgeryError> {
        let mut ids: Vec<String> = Vec::new();
        let mut framings = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| SurgeryError::Parse {
                line: lineno + 1,
                message: msg.to_string(),
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["vertex", id, "framing", m] => {
                    if ids.iter().any(|x| x == id) {
                        return Err(err("duplicate vertex id"));
                    }
                    let m: i64 = m.parse().map_err(|_| err("framing is not an integer"))?;
                    ids.push(id.to_string());
                    framings.push(m);
                }
                ["edge", u, v, s] => {
                    let find = |x: &str| ids.iter().position(|y| y == x).ok_or_else(|| err("unknown vertex id"));
                    let sign: i8 = match *s {
                        "+1" | "1" | "+" => 1,
                        "-1" | "-" => -1,
                        _ => return Err(err("edge sign must be +1 or -1")),
                    };
                    edges.push(Edge::new(find(u)?, find(v)?, sign));
                }
                _ => return Err(err("expected `vertex <id> framing <m>` or `edge <u> <v> <±1>`")),
            }
        }
        PlumbingForest::new(framings, edges)
    }

    /// Writes the forest in the format accepted by [`parse`](Self::parse).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, m) in self.framings.iter().enumerate() {
            out.push_str(&format!("vertex {v} framing {m}\n"));
        }
        for e in &self.edges {
            out.push_str(&format!("edge {} {} {:+}\n", e.u, e.v, e.sign));
        }
        out
    }
}
