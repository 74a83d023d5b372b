//! Spectra of adjacency matrices: dense symmetric solves with multiplicity
//! grouping, and an iterative extreme-eigenvalue mode for graphs past the
//! dense limit.

use crate::error::{Error, Result};
use crate::graph::{vertex_cap, RegularGraph};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;

pub const DENSE_LIMIT_DEFAULT: usize = 20_000;
pub const MULTIPLICITY_TOL_DEFAULT: f64 = 1e-8;

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueGroup {
    pub value: f64,
    pub mult: usize,
}

/// Sorted eigenvalue multiset of a d-regular graph with the gap statistics
/// used throughout: lambda2, lambda_min, lambda_abs = max(lambda2, -lambda_n)
/// and the normalized gap 1 - lambda2/d.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub d: usize,
    /// Descending, grouped at the multiplicity tolerance.
    pub eigenvalues: Vec<EigenvalueGroup>,
    pub lambda2: f64,
    pub lambda_min: f64,
    #[serde(skip)]
    pub lambda_abs: f64,
    pub normalized_gap: f64,
}

impl SpectrumReport {
    /// Builds a report from a raw eigenvalue list (any order).
    pub fn from_values(mut values: Vec<f64>, d: usize, tol: f64) -> SpectrumReport {
        assert!(!values.is_empty());
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let n = values.len();
        let lambda2 = if n > 1 { values[1] } else { values[0] };
        let lambda_min = *values.last().unwrap();
        let mut eigenvalues: Vec<EigenvalueGroup> = Vec::new();
        for v in values {
            match eigenvalues.last_mut() {
                Some(g) if (g.value - v).abs() <= tol => g.mult += 1,
                _ => eigenvalues.push(EigenvalueGroup { value: v, mult: 1 }),
            }
        }
        SpectrumReport {
            n,
            d,
            eigenvalues,
            lambda2,
            lambda_min,
            lambda_abs: lambda2.max(-lambda_min),
            normalized_gap: 1.0 - lambda2 / d as f64,
        }
    }

    /// Flat descending list with multiplicities expanded.
    pub fn values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|g| std::iter::repeat(g.value).take(g.mult))
            .collect()
    }

    /// Compares two spectra as sorted multisets.
    pub fn multiset_eq(&self, other: &SpectrumReport, tol: f64) -> bool {
        let a = self.values();
        let b = other.values();
        a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }
}

pub fn adjacency_matrix(g: &RegularGraph) -> DMatrix<f64> {
    let n = g.n();
    let mut m = DMatrix::zeros(n, n);
    for v in 0..n {
        for &u in g.neighbors(v) {
            m[(v, u as usize)] = 1.0;
        }
    }
    m
}

/// All eigenvalues of a symmetric matrix, descending.
pub fn symmetric_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    let mut vals: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// Full spectrum of a regular graph by dense symmetric eigensolve.
pub fn spectrum(g: &RegularGraph) -> Result<SpectrumReport> {
    spectrum_with_tol(g, MULTIPLICITY_TOL_DEFAULT)
}

pub fn spectrum_with_tol(g: &RegularGraph, tol: f64) -> Result<SpectrumReport> {
    let limit = vertex_cap(DENSE_LIMIT_DEFAULT);
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "dense eigensolve".into(),
            size: g.n(),
            limit,
        });
    }
    let vals = symmetric_eigenvalues(adjacency_matrix(g));
    Ok(SpectrumReport::from_values(vals, g.d(), tol))
}

fn matvec(g: &RegularGraph, x: &DVector<f64>, y: &mut DVector<f64>) {
    for v in 0..g.n() {
        let mut s = 0.0;
        for &u in g.neighbors(v) {
            s += x[u as usize];
        }
        y[v] = s;
    }
}

/// Extreme eigenvalues (lambda2, lambda_min) of a connected regular graph by
/// Lanczos with full reorthogonalization, deflating the known top eigenvector
/// (all-ones). The start vector is fixed (v_i proportional to sin(i+1)) so
/// runs are deterministic. Converges when the Ritz residual estimates for
/// both extremes drop below `tol`.
pub fn extreme_eigenvalues(g: &RegularGraph, tol: f64, max_iter: usize) -> Result<(f64, f64)> {
    let n = g.n();
    assert!(n >= 3);
    let ones = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let mut v = DVector::from_fn(n, |i, _| ((i + 1) as f64).sin());
    let proj = ones.dot(&v);
    v -= &ones * proj;
    v /= v.norm();

    let mut basis: Vec<DVector<f64>> = vec![v];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = DVector::zeros(n);
    for k in 0..max_iter.min(n - 1) {
        matvec(g, &basis[k], &mut w);
        let alpha = basis[k].dot(&w);
        alphas.push(alpha);
        // Full reorthogonalization keeps the basis clean despite the tight
        // eigenvalue clusters these adjacency matrices have.
        for _ in 0..2 {
            let p = ones.dot(&w);
            w -= &ones * p;
            for b in &basis {
                let p = b.dot(&w);
                w -= b * p;
            }
        }
        let beta = w.norm();
        if beta < 1e-12 {
            betas.push(0.0);
            break;
        }
        betas.push(beta);
        if k >= 10 && k % 5 == 0 {
            if let Some(pair) = ritz_extremes(&alphas, &betas, tol) {
                return Ok(pair);
            }
        }
        basis.push(&w / beta);
    }
    ritz_extremes(&alphas, &betas, f64::INFINITY)
        .ok_or_else(|| Error::NoConvergence("Lanczos produced no Ritz values".into()))
}

fn ritz_extremes(alphas: &[f64], betas: &[f64], tol: f64) -> Option<(f64, f64)> {
    let k = alphas.len();
    let mut t = DMatrix::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alphas[i];
        if i + 1 < k {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let eig = t.symmetric_eigen();
    let mut idx: Vec<usize> = (0..k).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());
    let top = idx[0];
    let bot = idx[k - 1];
    let beta_last = betas[k - 1];
    let res_top = (beta_last * eig.eigenvectors[(k - 1, top)]).abs();
    let res_bot = (beta_last * eig.eigenvectors[(k - 1, bot)]).abs();
    (res_top <= tol && res_bot <= tol)
        .then(|| (eig.eigenvalues[top], eig.eigenvalues[bot]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn petersen_spectrum() {
        let report = spectrum(&graph::petersen()).unwrap();
        let groups: Vec<(f64, usize)> = report
            .eigenvalues
            .iter()
            .map(|g| ((g.value * 1e6).round() / 1e6, g.mult))
            .collect();
        assert_eq!(groups, vec![(3.0, 1), (1.0, 5), (-2.0, 4)]);
        // Cross-check against the characteristic polynomial
        // (x-3)(x-1)^5(x+2)^4 evaluated at each reported eigenvalue.
        for g in &report.eigenvalues {
            let x = g.value;
            let p = (x - 3.0) * (x - 1.0).powi(5) * (x + 2.0).powi(4);
            assert!(p.abs() < 1e-4);
        }
        assert!((report.lambda2 - 1.0).abs() < 1e-8);
        assert!((report.lambda_min + 2.0).abs() < 1e-8);
        assert!((report.normalized_gap - 2.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn small_fixed_spectra() {
        let k4 = spectrum(&graph::complete(4).unwrap()).unwrap();
        assert_eq!(
            k4.eigenvalues.iter().map(|g| g.mult).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert!((k4.lambda_min + 1.0).abs() < 1e-8);
        let c4 = spectrum(&graph::cycle(4).unwrap()).unwrap();
        let vals = c4.values();
        for (v, expect) in vals.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!((v - expect).abs() < 1e-8);
        }
    }

    #[test]
    fn trace_identities() {
        for g in [graph::petersen(), graph::icosahedron()] {
            let report = spectrum(&g).unwrap();
            let vals = report.values();
            let s1: f64 = vals.iter().sum();
            let s2: f64 = vals.iter().map(|v| v * v).sum();
            assert!(s1.abs() < 1e-6 * (g.n() * g.d()) as f64);
            assert!((s2 - (g.n() * g.d()) as f64).abs() < 1e-6 * (g.n() * g.d()) as f64);
        }
    }

    #[test]
    fn tensor_spectrum_is_pointwise_product() {
        let g = graph::petersen();
        let h = graph::complete(4).unwrap();
        let t = graph::tensor_product(&g, &h);
        let mut expect: Vec<f64> = spectrum(&g)
            .unwrap()
            .values()
            .iter()
            .flat_map(|a| spectrum(&h).unwrap().values().iter().map(|b| a * b).collect::<Vec<_>>())
            .collect();
        expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let actual = spectrum(&t).unwrap().values();
        for (x, y) in actual.iter().zip(&expect) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn lanczos_matches_dense_on_fixtures() {
        for g in [
            graph::petersen(),
            graph::icosahedron(),
            graph::torus_triangulation(7, 9).unwrap(),
            graph::random_regular_high_girth(200, 3, 6, 11, 5000).unwrap(),
        ] {
            let dense = spectrum(&g).unwrap();
            let (l2, lmin) = extreme_eigenvalues(&g, 1e-8, 400).unwrap();
            assert!((l2 - dense.lambda2).abs() < 1e-6, "lambda2 {l2} vs {}", dense.lambda2);
            assert!(
                (lmin - dense.lambda_min).abs() < 1e-6,
                "lambda_min {lmin} vs {}",
                dense.lambda_min
            );
        }
    }
}
