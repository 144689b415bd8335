use crate::category::CategoryData;
use crate::cyclo::CycloNumber;
use crate::surgery::{signature, linking_matrix, PlumbingForest, SignaturePair};

use super::{InvariantError, InvariantValue, Normalization};

/// Colored and weighted evaluation of plumbing forests in a fixed category.
///
/// Caches inverse twists, inverse dimensions and the ±1-framed unknot
/// denominators F(U_{±1}(ω)).
#[derive(Debug, Clone)]
pub struct Evaluator {
    cat: CategoryData,
    inv_twist: Vec<CycloNumber>,
    inv_qdim: Vec<Option<CycloNumber>>,
    plus: CycloNumber,
    minus: CycloNumber,
    inv_plus: Option<CycloNumber>,
    inv_minus: Option<CycloNumber>,
}

impl Evaluator {
    pub fn new(cat: &CategoryData) -> Result<Self, InvariantError> {
        let inv_twist = cat
            .twists()
            .iter()
            .map(|t| t.invert())
            .collect::<Result<Vec<_>, _>>()?;
        let inv_qdim = cat.qdims().iter().map(|q| q.invert().ok()).collect();
        let field = cat.field();
        let mut plus = CycloNumber::zero(field);
        let mut minus = CycloNumber::zero(field);
        for l in 0..cat.rank() {
            let q2 = cat.qdim(l) * cat.qdim(l);
            plus += &q2 * cat.twist(l);
            minus += &q2 * &inv_twist[l];
        }
        Ok(Evaluator {
            cat: cat.clone(),
            inv_twist,
            inv_qdim,
            inv_plus: plus.invert().ok(),
            inv_minus: minus.invert().ok(),
            plus,
            minus,
        })
    }

    pub fn category(&self) -> &CategoryData {
        &self.cat
    }

    /// F(U_1(ω)) and F(U_{−1}(ω)).
    pub fn denominators(&self) -> (&CycloNumber, &CycloNumber) {
        (&self.plus, &self.minus)
    }

    fn theta_pow(&self, l: usize, m: i64) -> CycloNumber {
        let base = if m >= 0 { self.cat.twist(l) } else { &self.inv_twist[l] };
        base.pow(m.abs()).expect("nonnegative power")
    }

    fn s_signed(&self, child: usize, parent: usize, sign: i8) -> &CycloNumber {
        if sign > 0 {
            self.cat.s(child, parent)
        } else {
            self.cat.s(self.cat.dual(child), parent)
        }
    }

    fn check_colors(&self, forest: &PlumbingForest, colors: &[usize]) -> Result<(), InvariantError> {
        if colors.len() != forest.vertex_count() {
            return Err(InvariantError::InvalidParameter(format!(
                "{} colors for {} vertices",
                colors.len(),
                forest.vertex_count()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= self.cat.rank()) {
            return Err(InvariantError::InvalidParameter(format!("color {c} out of range")));
        }
        Ok(())
    }

    /// F(L(λ_1, …, λ_n)), rooting each tree at its smallest vertex.
    pub fn eval_colored(&self, forest: &PlumbingForest, colors: &[usize]) -> Result<CycloNumber, InvariantError> {
        let roots = component_roots(forest);
        self.eval_colored_rooted(forest, colors, &roots)
    }

    /// F(L(λ_1, …, λ_n)) with one explicit root per tree:
    /// ⟨λ_r⟩ · Π θ_{λ_v}^{m_v} · Π_{parent u, child v} S̃^{(ε)}_{λ_v λ_u} / ⟨λ_u⟩.
    pub fn eval_colored_rooted(
        &self,
        forest: &PlumbingForest,
        colors: &[usize],
        roots: &[usize],
    ) -> Result<CycloNumber, InvariantError> {
        self.check_colors(forest, colors)?;
        let adj = forest.adjacency();
        let mut visited = vec![false; forest.vertex_count()];
        let mut value = CycloNumber::one(self.cat.field());
        for &r in roots {
            if r >= forest.vertex_count() || visited[r] {
                return Err(InvariantError::InvalidParameter(format!("bad root {r}")));
            }
            visited[r] = true;
            value *= self.cat.qdim(colors[r]);
            let mut stack = vec![r];
            while let Some(u) = stack.pop() {
                value *= self.theta_pow(colors[u], forest.framing(u));
                for &(v, sign) in &adj[u] {
                    if visited[v] {
                        continue;
                    }
                    visited[v] = true;
                    let inv = self.inv_qdim[colors[u]]
                        .as_ref()
                        .ok_or(InvariantError::ZeroDimension { vertex: u, label: colors[u] })?;
                    value = &(&value * self.s_signed(colors[v], colors[u], sign)) * inv;
                    stack.push(v);
                }
            }
        }
        if let Some(v) = visited.iter().position(|&x| !x) {
            return Err(InvariantError::InvalidParameter(format!("vertex {v} is in no rooted tree")));
        }
        Ok(value)
    }

    /// Σ over all colorings of Π_v w_v(λ_v) · F(L(λ)), by leaf-to-root message passing.
    pub fn eval_weighted(&self, forest: &PlumbingForest, weights: &[&[CycloNumber]]) -> Result<CycloNumber, InvariantError> {
        let n = forest.vertex_count();
        let rank = self.cat.rank();
        self.check_weights(forest, weights)?;
        let field = self.cat.field();
        let adj = forest.adjacency();
        let mut parent: Vec<Option<(usize, i8)>> = vec![None; n];
        let mut visited = vec![false; n];
        let mut total = CycloNumber::one(field);
        for r in component_roots(forest) {
            // preorder; processed in reverse for leaf-to-root messages
            let mut order = vec![r];
            visited[r] = true;
            let mut i = 0;
            while i < order.len() {
                let u = order[i];
                for &(v, s) in &adj[u] {
                    if !visited[v] {
                        visited[v] = true;
                        parent[v] = Some((u, s));
                        order.push(v);
                    }
                }
                i += 1;
            }
            // acc[v][λ] = f_v(λ) · Π_children M_c(λ)
            let mut acc: Vec<Option<Vec<CycloNumber>>> = vec![None; n];
            for &v in &order {
                let deg = adj[v].len() as i64;
                let mut row = Vec::with_capacity(rank);
                for l in 0..rank {
                    let w = &weights[v][l];
                    if w.is_zero() {
                        row.push(CycloNumber::zero(field));
                        continue;
                    }
                    let mut f = w * &self.theta_pow(l, forest.framing(v));
                    if deg == 0 {
                        f *= self.cat.qdim(l);
                    } else if deg >= 2 {
                        let inv = self.inv_qdim[l]
                            .as_ref()
                            .ok_or(InvariantError::ZeroDimension { vertex: v, label: l })?;
                        f *= inv.pow(deg - 1)?;
                    }
                    row.push(f);
                }
                acc[v] = Some(row);
            }
            for &v in order.iter().rev() {
                let row = acc[v].take().expect("filled");
                match parent[v] {
                    None => {
                        total *= crate::cyclo::sum(field, &row);
                    }
                    Some((u, sign)) => {
                        let mut msg = vec![CycloNumber::zero(field); rank];
                        for (l, a) in row.iter().enumerate() {
                            if a.is_zero() {
                                continue;
                            }
                            for (mu, m) in msg.iter_mut().enumerate() {
                                let s = self.s_signed(l, mu, sign);
                                if !s.is_zero() {
                                    *m += a * s;
                                }
                            }
                        }
                        let target = acc[u].as_mut().expect("parent pending");
                        for (t, m) in target.iter_mut().zip(msg) {
                            if !t.is_zero() {
                                *t = &*t * &m;
                            }
                        }
                    }
                }
            }
        }
        Ok(total)
    }

    /// The same sum by enumerating all |Γ|^n colorings.
    pub fn eval_weighted_brute(&self, forest: &PlumbingForest, weights: &[&[CycloNumber]]) -> Result<CycloNumber, InvariantError> {
        self.check_weights(forest, weights)?;
        let n = forest.vertex_count();
        let rank = self.cat.rank();
        let mut total = CycloNumber::zero(self.cat.field());
        let mut colors = vec![0usize; n];
        loop {
            let mut w = CycloNumber::one(self.cat.field());
            for (v, &c) in colors.iter().enumerate() {
                w *= &weights[v][c];
            }
            if !w.is_zero() {
                total += &w * &self.eval_colored(forest, &colors)?;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(total);
                }
                colors[k] += 1;
                if colors[k] < rank {
                    break;
                }
                colors[k] = 0;
                k += 1;
            }
        }
    }

    fn check_weights(&self, forest: &PlumbingForest, weights: &[&[CycloNumber]]) -> Result<(), InvariantError> {
        if weights.len() != forest.vertex_count() || weights.iter().any(|w| w.len() != self.cat.rank()) {
            return Err(InvariantError::InvalidParameter(
                "one weight per label is needed at every vertex".into(),
            ));
        }
        if weights.iter().flat_map(|w| w.iter()).any(|x| x.order() != self.cat.field().order()) {
            return Err(InvariantError::InvalidParameter("weights lie in a different field".into()));
        }
        Ok(())
    }

    /// F(L(ω, …, ω)).
    pub fn eval_plain(&self, forest: &PlumbingForest) -> Result<CycloNumber, InvariantError> {
        let w = self.cat.qdims();
        self.eval_weighted(forest, &vec![w; forest.vertex_count()])
    }

    /// value · F(U_1(ω))^{−b_+} · F(U_{−1}(ω))^{−b_−}, times an optional rational prefactor.
    pub fn normalize(
        &self,
        value: CycloNumber,
        sig: SignaturePair,
        prefactor: Option<(num_rational::BigRational, String)>,
        structure: Option<Vec<i64>>,
    ) -> Result<InvariantValue, InvariantError> {
        let inv = |x: &Option<CycloNumber>, b: usize, which: &str| -> Result<CycloNumber, InvariantError> {
            if b == 0 {
                return Ok(CycloNumber::one(self.cat.field()));
            }
            let x = x
                .as_ref()
                .ok_or_else(|| InvariantError::ZeroDenominator(format!("F(U_{which}(ω)) = 0")))?;
            Ok(x.pow(b as i64)?)
        };
        let mut exact = value * inv(&self.inv_plus, sig.b_plus, "+1")? * inv(&self.inv_minus, sig.b_minus, "-1")?;
        let mut factor = None;
        if let Some((q, label)) = prefactor {
            exact = exact.scale_rational(&q);
            factor = Some(label);
        }
        Ok(InvariantValue::new(
            exact,
            Normalization {
                b_plus: sig.b_plus,
                b_minus: sig.b_minus,
                nullity: sig.nullity,
                plus_denominator: self.plus.clone(),
                minus_denominator: self.minus.clone(),
                prefactor: factor,
            },
            structure,
        ))
    }

    /// The WRT invariant F(L(ω,…,ω)) / (F(U_1(ω))^{b_+} F(U_{−1}(ω))^{b_−}).
    pub fn wrt(&self, forest: &PlumbingForest) -> Result<InvariantValue, InvariantError> {
        let sig = signature(&linking_matrix(forest));
        self.normalize(self.eval_plain(forest)?, sig, None, None)
    }
}

/// The smallest vertex of each connected component.
pub fn component_roots(forest: &PlumbingForest) -> Vec<usize> {
    let n = forest.vertex_count();
    let adj = forest.adjacency();
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        roots.push(r);
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    roots
}
