//! Non-backtracking walk matrices A^(t) and the Geronimus polynomials p^(t)
//! with p^(t)(A) = A^(t) for regular graphs.

use crate::graph::RegularGraph;
use nalgebra::DMatrix;

/// Exact integer coefficients of p^(t) for degree-d graphs, ascending degree.
/// p0 = 1, p1 = x, p2 = x^2 - d, p_{t+1} = x p_t - (d-1) p_{t-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeronimusPolynomial {
    pub t: usize,
    pub d: usize,
    pub coefficients: Vec<i128>,
}

pub fn geronimus(t: usize, d: usize) -> GeronimusPolynomial {
    assert!(d >= 2);
    let mut prev: Vec<i128> = vec![1];
    if t == 0 {
        return GeronimusPolynomial { t, d, coefficients: prev };
    }
    let mut cur: Vec<i128> = vec![0, 1];
    for k in 1..t {
        let mut next = vec![0i128; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        // The first step uses weight d (all d neighbors extend a length-0
        // path); afterwards one of the d edges backtracks.
        let weight = if k == 1 { d as i128 } else { (d - 1) as i128 };
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= weight * c;
        }
        prev = cur;
        cur = next;
    }
    GeronimusPolynomial { t, d, coefficients: cur }
}

impl GeronimusPolynomial {
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_i128(&self, x: i128) -> i128 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Roots, ascending. The three-term recurrence makes these the
    /// eigenvalues of the symmetric tridiagonal Jacobi matrix with zero
    /// diagonal and off-diagonals sqrt(d), sqrt(d-1), ..., sqrt(d-1), so the
    /// roots are all real and computed by a symmetric solve.
    pub fn roots(&self) -> Vec<f64> {
        let t = self.t;
        if t == 0 {
            return Vec::new();
        }
        let mut m = DMatrix::zeros(t, t);
        for i in 1..t {
            let b = if i == 1 { self.d as f64 } else { (self.d - 1) as f64 };
            m[(i, i - 1)] = b.sqrt();
            m[(i - 1, i)] = b.sqrt();
        }
        let mut roots: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        roots
    }
}

/// Integer matrix counting non-backtracking t-paths between vertex pairs,
/// computed by the recursion A^(t+1) = A A^(t) - (d-1) A^(t-1),
/// A^(2) = A^2 - dI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NbwMatrix {
    pub t: usize,
    pub n: usize,
    /// Row-major n*n entries.
    pub entries: Vec<i128>,
}

impl NbwMatrix {
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.n + j]
    }
}

fn adj_times(g: &RegularGraph, m: &[i128]) -> Vec<i128> {
    let n = g.n();
    let mut out = vec![0i128; n * n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            let row = &m[(u as usize) * n..(u as usize + 1) * n];
            let target = &mut out[v * n..(v + 1) * n];
            for (o, &x) in target.iter_mut().zip(row) {
                *o += x;
            }
        }
    }
    out
}

pub fn nbw_matrix(g: &RegularGraph, t: usize) -> NbwMatrix {
    let n = g.n();
    let mut prev = vec![0i128; n * n];
    for i in 0..n {
        prev[i * n + i] = 1;
    }
    if t == 0 {
        return NbwMatrix { t, n, entries: prev };
    }
    let mut cur = vec![0i128; n * n];
    for v in 0..n {
        for &u in g.neighbors(v) {
            cur[v * n + u as usize] = 1;
        }
    }
    for k in 1..t {
        let mut next = adj_times(g, &cur);
        let weight = if k == 1 { g.d() as i128 } else { (g.d() - 1) as i128 };
        for (x, &p) in next.iter_mut().zip(&prev) {
            *x -= weight * p;
        }
        prev = cur;
        cur = next;
    }
    NbwMatrix { t, n, entries: cur }
}

/// Views A^(t) as a multigraph adjacency (positive entry = edge) and reports
/// (connected, non-bipartite). A positive diagonal entry counts as an odd
/// closed walk, so it forces non-bipartiteness.
pub fn nbw_connected_nonbipartite(g: &RegularGraph, t: usize) -> (bool, bool) {
    let m = nbw_matrix(g, t);
    let n = m.n;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut loops = false;
    for i in 0..n {
        if m.get(i, i) > 0 {
            loops = true;
        }
        for j in 0..n {
            if i != j && m.get(i, j) > 0 {
                adj[i].push(j as u32);
            }
        }
    }
    let connected = crate::graph::component_count_adj(&adj) <= 1;
    let nonbipartite = loops || !crate::graph::is_bipartite_adj(&adj);
    (connected, nonbipartite)
}

/// trace(A^t) in exact integer arithmetic, via t sparse mat-vec products per
/// basis vector.
pub fn trace_adjacency_power(g: &RegularGraph, t: usize) -> i128 {
    let n = g.n();
    let mut trace = 0i128;
    let mut x = vec![0i128; n];
    let mut y = vec![0i128; n];
    for v in 0..n {
        x.fill(0);
        x[v] = 1;
        for _ in 0..t {
            for (w, slot) in y.iter_mut().enumerate() {
                *slot = g.neighbors(w).iter().map(|&u| x[u as usize]).sum();
            }
            std::mem::swap(&mut x, &mut y);
        }
        trace += x[v];
    }
    trace
}
