//! The lower-bound machinery for (a,b)-regular graphs: the Alon-Boppana-type
//! value b + 2 sqrt(a-b-1), the walk census behind it, the entropy tradeoff
//! S(beta, a, b) and its numeric table, and the local coordinates (Phi, Psi)
//! with the cross-edge count R.
//!
//! All logarithms are base 2.

use crate::error::{Error, Result};
use crate::graph::RegularGraph;

/// b + 2 sqrt(a - b - 1), the asymptotic floor for lambda2 of a connected
/// (a,b)-regular graph.
pub fn abtb_value(a: usize, b: usize) -> Result<f64> {
    if a <= b {
        return Err(Error::InvalidPair { a, b });
    }
    Ok(b as f64 + 2.0 * ((a - b - 1) as f64).sqrt())
}

fn binom(n: u64, k: u64) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Per-vertex census of the closed walks driving the bound:
/// sum over 0 <= k < t/2 of t!/(k! k! (t-2k)!) / (k+1) * b^(t-2k) (a-b-1)^k.
/// Every summand is an integer (a ballot-number identity), which is asserted.
pub fn catalan_walk_census(a: usize, b: usize, t: usize) -> u128 {
    assert!(t >= 1 && a > b);
    let mut total: u128 = 0;
    for k in 0..((t + 1) / 2) {
        let (t64, k64) = (t as u64, k as u64);
        // trinomial(t; k, k, t-2k) = binom(t, 2k) * binom(2k, k)
        let trinomial = binom(t64, 2 * k64) * binom(2 * k64, k64);
        assert_eq!(trinomial % (k as u128 + 1), 0, "summand k = {k} not integral");
        let catalan_factor = trinomial / (k as u128 + 1);
        total += catalan_factor
            * (b as u128).pow((t - 2 * k) as u32)
            * ((a - b - 1) as u128).pow(k as u32);
    }
    total
}

fn log2(x: f64) -> f64 {
    x.log2()
}

fn check_nondegenerate(a: usize, b: usize) -> Result<()> {
    if b <= 1 {
        return Err(Error::Degenerate {
            a,
            b,
            reason: "b <= 1: positive link expansion forces triangle components".into(),
        });
    }
    if a <= b + 2 {
        return Err(Error::Degenerate {
            a,
            b,
            reason: "a - b <= 2: the graph is a disjoint union of fixed blocks".into(),
        });
    }
    Ok(())
}

/// H(alpha, alpha, 1-2alpha) + alpha log(a-b-1) + (1-2alpha) log b.
pub fn entropy_objective(alpha: f64, a: usize, b: usize) -> Result<f64> {
    if !(0.0 < alpha && alpha < 0.5) {
        return Err(Error::DomainError(format!("alpha = {alpha} outside (0, 1/2)")));
    }
    if b == 0 || a <= b + 1 {
        return Err(Error::DomainError(format!("need b >= 1 and a > b + 1, got ({a}, {b})")));
    }
    let h = -2.0 * alpha * log2(alpha) - (1.0 - 2.0 * alpha) * log2(1.0 - 2.0 * alpha);
    Ok(h + alpha * log2((a - b - 1) as f64) + (1.0 - 2.0 * alpha) * log2(b as f64))
}

fn golden_max(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    // Grid scan as a safety net against non-unimodality, then golden section.
    let mut best_x = lo + (hi - lo) / 2.0;
    let mut best = f(best_x);
    const GRID: usize = 10_000;
    for i in 1..GRID {
        let x = lo + (hi - lo) * i as f64 / GRID as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let w = (hi - lo) / GRID as f64;
    lo = (best_x - w).max(lo);
    hi = (best_x + w).min(hi);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut x1, mut x2) = (hi - inv_phi * (hi - lo), lo + inv_phi * (hi - lo));
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > 1e-13 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let x = (lo + hi) / 2.0;
    (x, f(x))
}

/// Numeric maximizer of the entropy objective; the closed form is
/// alpha* = sqrt(a-b-1)/(b+2 sqrt(a-b-1)), value* = log2(b+2 sqrt(a-b-1)).
pub fn entropy_argmax(a: usize, b: usize) -> Result<(f64, f64)> {
    if b == 0 || a <= b + 1 {
        return Err(Error::DomainError(format!("need b >= 1 and a > b + 1, got ({a}, {b})")));
    }
    Ok(golden_max(1e-9, 0.5 - 1e-9, |x| {
        entropy_objective(x, a, b).unwrap()
    }))
}

/// S(beta, a, b) with the cross-edge correction
/// Delta = beta^2 log(1 + r/(a-b-1)) + beta(1-2 beta) log(1 - r/(b(a-b-1))).
pub fn tradeoff_objective(beta: f64, a: usize, b: usize, r: u64) -> Result<f64> {
    check_nondegenerate(a, b)?;
    if r as f64 >= (b * (a - b - 1)) as f64 {
        return Err(Error::DomainError(format!(
            "r = {r} >= b(a-b-1) = {}",
            b * (a - b - 1)
        )));
    }
    let base = entropy_objective(beta, a, b)?;
    let delta = beta * beta * log2(1.0 + r as f64 / (a - b - 1) as f64)
        + beta * (1.0 - 2.0 * beta) * log2(1.0 - r as f64 / (b * (a - b - 1)) as f64);
    Ok(base + delta)
}

fn max_tradeoff(a: usize, b: usize, r: u64) -> Result<(f64, f64)> {
    check_nondegenerate(a, b)?;
    if r as f64 >= (b * (a - b - 1)) as f64 {
        return Err(Error::DomainError(format!("r = {r} too large for ({a}, {b})")));
    }
    Ok(golden_max(1e-9, 0.5 - 1e-9, |x| {
        tradeoff_objective(x, a, b, r).unwrap()
    }))
}

/// One cell of the numeric table: with c = sqrt(a-b-1) and r = 1,
/// (b+2c)^2 / log2(e) * (max_beta S(beta, a, b) - log2(b+2c)).
pub fn tradeoff_cell(a_minus_b_minus_1: usize, b: usize) -> Result<f64> {
    let a = a_minus_b_minus_1 + b + 1;
    let c = (a_minus_b_minus_1 as f64).sqrt();
    let (_, max_s) = max_tradeoff(a, b, 1)?;
    Ok((b as f64 + 2.0 * c).powi(2) / std::f64::consts::E.log2() * (max_s - log2(b as f64 + 2.0 * c)))
}

/// The 7x7 table over a-b-1 in 2..=8 (rows) and b in 2..=8 (columns).
pub fn tradeoff_table() -> Vec<Vec<f64>> {
    (2..=8)
        .map(|c2| (2..=8).map(|b| tradeoff_cell(c2, b).unwrap()).collect())
        .collect()
}

/// r = min(R-floor, ceil(b(c^3 - c^2)/(b + c))) where the delta-driven floor
/// is R >= min(b+1, a-b-1) delta.
pub fn optimal_r(a: usize, b: usize, delta: f64) -> Result<u64> {
    check_nondegenerate(a, b)?;
    assert!(delta >= 0.0);
    let c = ((a - b - 1) as f64).sqrt();
    let r_from_delta = ((b + 1).min(a - b - 1) as f64 * delta).floor();
    let unconstrained = (b as f64 * (c.powi(3) - c.powi(2)) / (b as f64 + c)).ceil();
    let r = r_from_delta.min(unconstrained.max(0.0)) as u64;
    // Keep r inside the domain of the tradeoff objective.
    Ok(r.min((b * (a - b - 1)) as u64 - 1))
}

/// Multiplicative improvement over the base bound:
/// 1 + epsilon = 2^(max_beta S(beta, a, b, r) - log2(b + 2c)).
pub fn tradeoff_epsilon(a: usize, b: usize, delta: f64) -> Result<f64> {
    let r = optimal_r(a, b, delta)?;
    let c = ((a - b - 1) as f64).sqrt();
    let (_, max_s) = max_tradeoff(a, b, r)?;
    Ok((max_s - log2(b as f64 + 2.0 * c)).exp2() - 1.0)
}

/// delta below which epsilon is guaranteed to increase with delta:
/// b(a-b-1)(sqrt(a-b-1) - 1) / ((b + sqrt(a-b-1)) min(b+1, a-b-1)).
pub fn delta_threshold(a: usize, b: usize) -> Result<f64> {
    if a <= b + 1 {
        return Err(Error::InvalidPair { a, b });
    }
    let c = ((a - b - 1) as f64).sqrt();
    Ok((b * (a - b - 1)) as f64 * (c - 1.0) / ((b as f64 + c) * (b + 1).min(a - b - 1) as f64))
}

/// Neighbor partition at an edge x-z of an (a,b)-regular graph:
/// Psi = N(x) intersect N(z), Phi = N(x) minus (N(z) union {z}).
pub fn local_coordinates(
    g: &RegularGraph,
    x: usize,
    z: usize,
) -> Result<(Vec<u32>, Vec<u32>)> {
    let (a, b) = g
        .ab_regularity()
        .ok_or_else(|| Error::NotABRegular("graph is not (a,b)-regular".into()))?;
    if !g.has_edge(x, z) {
        return Err(Error::DomainError(format!("{x}-{z} is not an edge")));
    }
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for &u in g.neighbors(x) {
        if u as usize == z {
            continue;
        }
        if g.has_edge(u as usize, z) {
            psi.push(u);
        } else {
            phi.push(u);
        }
    }
    debug_assert_eq!(psi.len(), b);
    debug_assert_eq!(phi.len(), a - b - 1);
    Ok((phi, psi))
}

/// R = the least |E(Phi_{x,z}, Psi_{x,z})| over all edges xz.
pub fn cross_edge_min(g: &RegularGraph) -> Result<usize> {
    g.ab_regularity()
        .ok_or_else(|| Error::NotABRegular("graph is not (a,b)-regular".into()))?;
    let mut best = usize::MAX;
    for (x, z) in g.edges() {
        for (x, z) in [(x as usize, z as usize), (z as usize, x as usize)] {
            let (phi, psi) = local_coordinates(g, x, z)?;
            let count: usize = phi
                .iter()
                .map(|&u| psi.iter().filter(|&&v| g.has_edge(u as usize, v as usize)).count())
                .sum();
            best = best.min(count);
        }
    }
    Ok(best)
}
