//! Formula-driven polygraph spectra via the symmetric polynomial chi_S,
//! global eigenvalue bounds, and the mixing-lemma toolkit (set and multiset
//! expander mixing, Desai-Rao least-eigenvalue bound).

use crate::eigen::{self, SpectrumReport, MULTIPLICITY_TOL_DEFAULT};
use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::nbw::{geronimus, GeronimusPolynomial};
use crate::polygraph::DistanceMultiset;

/// Evaluator for chi_S(lambda_1, ..., lambda_m) =
/// sum over rearrangements omega of S of prod_j p^(omega_j)(lambda_j),
/// with p the Geronimus polynomials of degree d.
pub struct ChiEvaluator {
    s: DistanceMultiset,
    arrangements: Vec<Vec<usize>>,
    polys: Vec<(usize, GeronimusPolynomial)>,
}

impl ChiEvaluator {
    pub fn new(s: &DistanceMultiset, d: usize) -> ChiEvaluator {
        let polys = s
            .multiplicities()
            .iter()
            .map(|&(l, _)| (l, geronimus(l, d)))
            .collect();
        ChiEvaluator {
            s: s.clone(),
            arrangements: s.arrangements(),
            polys,
        }
    }

    fn poly(&self, l: usize) -> &GeronimusPolynomial {
        &self.polys.iter().find(|(v, _)| *v == l).unwrap().1
    }

    pub fn eval(&self, lambdas: &[f64]) -> f64 {
        assert_eq!(lambdas.len(), self.s.m());
        let mut total = 0.0;
        for om in &self.arrangements {
            let mut prod = 1.0;
            for (j, &l) in om.iter().enumerate() {
                prod *= self.poly(l).eval(lambdas[j]);
            }
            total += prod;
        }
        total
    }
}

/// One-shot chi_S evaluation.
pub fn chi(s: &DistanceMultiset, d: usize, lambdas: &[f64]) -> f64 {
    ChiEvaluator::new(s, d).eval(lambdas)
}

pub const FORMULA_TUPLE_CAP: usize = 2_000_000;

/// The full spectrum of G_S from the spectrum of G: chi_S evaluated on all
/// n^m ordered tuples of base eigenvalues. Valid whenever the polygraph
/// itself is (girth(G) > 3 max(S)).
pub fn polygraph_spectrum_by_formula(g: &RegularGraph, s: &DistanceMultiset) -> Result<SpectrumReport> {
    let base = eigen::spectrum(g)?;
    let m = s.m();
    let n = g.n();
    let count = (n as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if count > FORMULA_TUPLE_CAP as u64 {
        return Err(Error::SizeLimit {
            what: format!("formula spectrum over {n}^{m} tuples"),
            size: count.min(usize::MAX as u64) as usize,
            limit: FORMULA_TUPLE_CAP,
        });
    }
    let base_vals = base.values();
    let ev = ChiEvaluator::new(s, g.d());
    // Per distinct S-value table of p^(l)(lambda_i).
    let tables: Vec<(usize, Vec<f64>)> = s
        .multiplicities()
        .iter()
        .map(|&(l, _)| (l, base_vals.iter().map(|&x| ev.poly(l).eval(x)).collect()))
        .collect();
    let table = |l: usize| -> &[f64] { &tables.iter().find(|(v, _)| *v == l).unwrap().1 };
    let a_s = crate::polygraph::a_s(s, g.d());
    let mut vals = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; m];
    loop {
        let mut total = 0.0;
        for om in &ev.arrangements {
            let mut prod = 1.0;
            for (j, &l) in om.iter().enumerate() {
                prod *= table(l)[idx[j]];
            }
            total += prod;
        }
        vals.push(total);
        let mut j = m;
        loop {
            if j == 0 {
                let mut report = SpectrumReport::from_values(vals, 0, MULTIPLICITY_TOL_DEFAULT);
                report.d = a_s.min(usize::MAX as u64) as usize;
                report.normalized_gap = 1.0 - report.lambda2 / a_s as f64;
                return Ok(report);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < n {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Upper bound on lambda(G_S): multinomial(S) mu^s d^(m-1) (d-1)^(N-m-s+1)
/// with mu = max(lambda(G), 2 sqrt(d-1)), s = min(S), N = sum(S).
pub fn lambda_bound(s: &DistanceMultiset, d: usize, lambda_g: f64) -> f64 {
    let mu = lambda_g.max(2.0 * ((d - 1) as f64).sqrt());
    let m = s.m() as i32;
    let n_sum = s.total() as i32;
    let s_min = s.min() as i32;
    s.multinomial() as f64
        * mu.powi(s_min)
        * (d as f64).powi(m - 1)
        * ((d - 1) as f64).powi(n_sum - m - s_min + 1)
}

/// Exact specialization lambda(G_{[1,1,1]}) <= mu d^2.
pub fn lambda_bound_111(d: usize, lambda_g: f64) -> f64 {
    lambda_g.max(2.0 * ((d - 1) as f64).sqrt()) * (d as f64).powi(2)
}

/// Exact specialization lambda(G_{[1,2,3]}) <= 6 mu d^2 (d-1)^3.
pub fn lambda_bound_123(d: usize, lambda_g: f64) -> f64 {
    6.0 * lambda_g.max(2.0 * ((d - 1) as f64).sqrt())
        * (d as f64).powi(2)
        * ((d - 1) as f64).powi(3)
}

/// Set-version expander mixing interval for the ordered-pair count
/// e(A,B) = #{(u,v) : u in A, v in B, uv in E}:
/// D|A||B|/N +- lambda sqrt(|A||B|(1-|A|/N)(1-|B|/N)).
pub fn eml_interval(n: usize, deg: f64, lambda: f64, a: f64, b: f64) -> (f64, f64) {
    let nf = n as f64;
    let main = deg * a * b / nf;
    let dev = lambda * (a * b * (1.0 - a / nf) * (1.0 - b / nf)).sqrt();
    (main - dev, main + dev)
}

/// Multiset expander mixing interval for e(P,C) = sum_{x in P} w_x |N(x) ^ C|
/// where P has total weight w_sum and squared weight w_sq_sum:
/// D w_sum |C|/N +- lambda sqrt((w_sq_sum - w_sum^2/N)|C|(1-|C|/N)).
pub fn eml_multiset_interval(
    n: usize,
    deg: f64,
    lambda: f64,
    w_sum: f64,
    w_sq_sum: f64,
    c: f64,
) -> (f64, f64) {
    let nf = n as f64;
    let main = deg * w_sum * c / nf;
    let var = (w_sq_sum - w_sum * w_sum / nf).max(0.0);
    let dev = lambda * (var * c * (1.0 - c / nf)).sqrt();
    (main - dev, main + dev)
}

/// Mixing interval for a concrete graph, with lambda taken from its dense
/// spectrum.
pub fn eml_bound(g: &RegularGraph, a: usize, b: usize) -> Result<(f64, f64)> {
    let spec = eigen::spectrum(g)?;
    Ok(eml_interval(g.n(), g.d() as f64, spec.lambda_abs, a as f64, b as f64))
}

pub fn eml_multiset_bound(g: &RegularGraph, weights: &[f64], c: usize) -> Result<(f64, f64)> {
    assert_eq!(weights.len(), g.n());
    let spec = eigen::spectrum(g)?;
    let w_sum: f64 = weights.iter().sum();
    let w_sq: f64 = weights.iter().map(|w| w * w).sum();
    Ok(eml_multiset_interval(g.n(), g.d() as f64, spec.lambda_abs, w_sum, w_sq, c as f64))
}

/// Observed ordered-pair count e(A,B).
pub fn count_pairs_between(g: &RegularGraph, a: &[usize], b: &[usize]) -> usize {
    let mut in_b = vec![false; g.n()];
    for &v in b {
        in_b[v] = true;
    }
    a.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| in_b[w as usize]).count())
        .sum()
}

/// Observed weighted count e(P,C) = sum_x w_x |N(x) ^ C|.
pub fn count_weighted_between(g: &RegularGraph, weights: &[f64], c: &[usize]) -> f64 {
    let mut in_c = vec![false; g.n()];
    for &v in c {
        in_c[v] = true;
    }
    (0..g.n())
        .map(|u| {
            weights[u]
                * g.neighbors(u).iter().filter(|&&w| in_c[w as usize]).count() as f64
        })
        .sum()
}

pub const DESAI_RAO_CAP: usize = 14;

#[derive(Debug, Clone, Copy)]
pub struct DesaiRaoReport {
    /// Psi = min over nonempty U of (b(U) + |E(U, U^c)|) / |U|, with b(U)
    /// the fewest edge deletions making the induced subgraph bipartite.
    pub psi: f64,
    /// -D + Psi^2 / 4D.
    pub bound: f64,
    pub lambda_min: f64,
    pub holds: bool,
}

/// Exhaustive check of the least-eigenvalue bound lambda_min >= -D + Psi^2/4D.
/// Psi and every b(U) are computed exactly by brute force, hence the small cap.
pub fn desai_rao_check(g: &RegularGraph) -> Result<DesaiRaoReport> {
    let n = g.n();
    if n > DESAI_RAO_CAP {
        return Err(Error::SizeLimit {
            what: "desai_rao_check".into(),
            size: n,
            limit: DESAI_RAO_CAP,
        });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    // edges_within[S] = number of edges inside subset S.
    let full = 1usize << n;
    let mut edges_within = vec![0u32; full];
    for set in 1..full {
        let v = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        edges_within[set] = edges_within[rest] + (masks[v] & rest as u32).count_ones();
    }
    let mut psi = f64::INFINITY;
    for u in 1..full {
        // b(U): min over 2-colorings c of U of monochromatic edges.
        let mut b = u32::MAX;
        let mut c = u;
        loop {
            b = b.min(edges_within[c] + edges_within[u & !c]);
            if c == 0 {
                break;
            }
            c = (c - 1) & u;
        }
        let cut = g.d() as u32 * u.count_ones() - 2 * edges_within[u];
        psi = psi.min((b + cut) as f64 / (u.count_ones() as f64));
    }
    let d = g.d() as f64;
    let bound = -d + psi * psi / (4.0 * d);
    let lambda_min = eigen::spectrum(g)?.lambda_min;
    Ok(DesaiRaoReport {
        psi,
        bound,
        lambda_min,
        holds: lambda_min >= bound - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::polygraph::{a_s, build_polygraph};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(v: &[usize]) -> DistanceMultiset {
        DistanceMultiset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn chi_closed_forms() {
        let s110 = s(&[1, 1, 0]);
        // chi_{[1,1,0]} = l1 l2 + l1 l3 + l2 l3.
        for t in [[3.0, 3.0, 3.0], [1.0, 3.0, 3.0], [-2.0, -2.0, 3.0], [0.3, -1.7, 2.0]] {
            let expect = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
            assert!((chi(&s110, 3, &t) - expect).abs() < 1e-12);
        }
        assert_eq!(chi(&s110, 3, &[3.0, 3.0, 3.0]), a_s(&s110, 3) as f64);
        assert_eq!(chi(&s110, 3, &[1.0, 3.0, 3.0]), 15.0);
        assert_eq!(chi(&s110, 3, &[-2.0, -2.0, 3.0]), -8.0);
        // Symmetry in the arguments.
        let s123 = s(&[1, 2, 3]);
        let a = chi(&s123, 3, &[1.0, -2.0, 3.0]);
        let b = chi(&s123, 3, &[3.0, 1.0, -2.0]);
        assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn formula_matches_built_polygraph() {
        let g = graph::petersen();
        let p = build_polygraph(&g, &s(&[1, 1, 0])).unwrap();
        let built = eigen::spectrum(p.graph()).unwrap();
        let formula = polygraph_spectrum_by_formula(&g, &s(&[1, 1, 0])).unwrap();
        assert_eq!(formula.n, 1000);
        assert!(formula.multiset_eq(&built, 1e-6));
        assert!((formula.lambda2 - 15.0).abs() < 1e-6);
        assert!((formula.lambda_min + 8.0).abs() < 1e-6);
        // lambda2(G_{[1,1,0]}) = d^2 + 2 d lambda2(G).
        let base = eigen::spectrum(&g).unwrap();
        assert!((built.lambda2 - (9.0 + 6.0 * base.lambda2)).abs() < 1e-6);
    }

    #[test]
    fn formula_matches_built_on_cycle_fixture() {
        let g = graph::cycle(9).unwrap();
        let p = build_polygraph(&g, &s(&[1, 2])).unwrap();
        let built = eigen::spectrum(p.graph()).unwrap();
        let formula = polygraph_spectrum_by_formula(&g, &s(&[1, 2])).unwrap();
        assert!(formula.multiset_eq(&built, 1e-6));
    }

    #[test]
    fn s_single_one_reproduces_base() {
        for g in [graph::petersen(), graph::icosahedron()] {
            let base = eigen::spectrum(&g).unwrap();
            let formula = polygraph_spectrum_by_formula(&g, &s(&[1])).unwrap();
            assert!(formula.multiset_eq(&base, 1e-9));
        }
    }

    #[test]
    fn k4_pair_products() {
        let g = graph::complete(4).unwrap();
        let formula = polygraph_spectrum_by_formula(&g, &s(&[1, 1])).unwrap();
        let mut expect: Vec<f64> = Vec::new();
        for a in [3.0, -1.0, -1.0, -1.0] {
            for b in [3.0, -1.0, -1.0, -1.0] {
                expect.push(a * b);
            }
        }
        expect.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (x, y) in formula.values().iter().zip(&expect) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn chi_strict_contraction() {
        // |chi(tuple)| < a_S for non-bipartite connected bases unless the
        // tuple is all-d.
        for (g, sm) in [
            (graph::petersen(), s(&[1, 1, 0])),
            (graph::cycle(9).unwrap(), s(&[1, 2])),
            (graph::icosahedron(), s(&[1, 1])),
        ] {
            let a = a_s(&sm, g.d()) as f64;
            let base = eigen::spectrum(&g).unwrap().values();
            let ev = ChiEvaluator::new(&sm, g.d());
            let m = sm.m();
            let mut idx = vec![0usize; m];
            'outer: loop {
                let tuple: Vec<f64> = idx.iter().map(|&i| base[i]).collect();
                let all_d = tuple.iter().all(|&x| (x - g.d() as f64).abs() < 1e-8);
                let v = ev.eval(&tuple);
                if all_d {
                    assert!((v - a).abs() < 1e-6);
                } else {
                    assert!(v.abs() < a - 1e-6, "tuple {tuple:?} gives {v}");
                }
                let mut j = m;
                loop {
                    if j == 0 {
                        break 'outer;
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < base.len() {
                        break;
                    }
                    idx[j] = 0;
                }
            }
        }
    }

    #[test]
    fn lambda_bound_examples_and_soundness() {
        // S = [1]: bound = mu.
        let mu = 2.0 * 2f64.sqrt();
        assert!((lambda_bound(&s(&[1]), 3, 2.0) - mu).abs() < 1e-12);
        // S = [1,2,3]: 6 mu d^2 (d-1)^3; Ramanujan mu gives 12 d^2 (d-1)^(7/2).
        for d in [3usize, 5, 10] {
            let ram = 2.0 * ((d - 1) as f64).sqrt();
            let b = lambda_bound(&s(&[1, 2, 3]), d, ram);
            assert!((b - lambda_bound_123(d, ram)).abs() < 1e-6);
            let stated = 12.0 * (d as f64).powi(2) * ((d - 1) as f64).powf(3.5);
            assert!((b - stated).abs() < 1e-6 * stated);
        }
        // Soundness against built polygraphs.
        for (g, sm) in [
            (graph::petersen(), s(&[1, 1, 0])),
            (graph::petersen(), s(&[1, 1])),
            (graph::cycle(9).unwrap(), s(&[1, 2])),
        ] {
            let base = eigen::spectrum(&g).unwrap();
            let p = build_polygraph(&g, &sm).unwrap();
            let actual = eigen::spectrum(p.graph()).unwrap().lambda_abs;
            let bound = lambda_bound(&sm, g.d(), base.lambda_abs);
            assert!(bound >= actual - 1e-9, "S = {:?}: {bound} < {actual}", sm.entries());
        }
        assert!(lambda_bound_111(3, 2.0) >= 18.0); // |chi(3,3,-2)| = 18
    }

    #[test]
    fn eml_contains_observed_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            graph::petersen(),
            graph::icosahedron(),
            graph::torus_triangulation(7, 7).unwrap(),
        ] {
            let n = g.n();
            for _ in 0..200 {
                let mut verts: Vec<usize> = (0..n).collect();
                verts.shuffle(&mut rng);
                let a = &verts[0..n / 3];
                let b = &verts[n / 3..n / 3 + n / 2];
                let (lo, hi) = eml_bound(&g, a.len(), b.len()).unwrap();
                let obs = count_pairs_between(&g, a, b) as f64;
                assert!(lo - 1e-9 <= obs && obs <= hi + 1e-9, "{lo} {obs} {hi}");
            }
        }
    }

    #[test]
    fn eml_full_sets_and_weight_reduction() {
        let g = graph::petersen();
        let n = g.n();
        let all: Vec<usize> = (0..n).collect();
        let (lo, hi) = eml_bound(&g, n, n).unwrap();
        let total = count_pairs_between(&g, &all, &all) as f64;
        assert_eq!(total, (2 * g.edge_count()) as f64);
        assert!(lo - 1e-9 <= total && total <= hi + 1e-9);
        // All-ones weights reduce the multiset bound to the set bound.
        let c: Vec<usize> = (0..4).collect();
        let w = vec![1.0; n];
        let (mlo, mhi) = eml_multiset_bound(&g, &w, c.len()).unwrap();
        let (slo, shi) = eml_bound(&g, n, c.len()).unwrap();
        assert!((mlo - slo).abs() < 1e-9 && (mhi - shi).abs() < 1e-9);
        let obs = count_weighted_between(&g, &w, &c);
        assert!(mlo - 1e-9 <= obs && obs <= mhi + 1e-9);
    }

    #[test]
    fn eml_multiset_contains_weighted_counts() {
        let g = graph::icosahedron();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let weights: Vec<f64> =
                (0..g.n()).map(|_| rand::Rng::gen_range(&mut rng, 0..5) as f64).collect();
            let mut verts: Vec<usize> = (0..g.n()).collect();
            verts.shuffle(&mut rng);
            let c = &verts[0..5];
            let (lo, hi) = eml_multiset_bound(&g, &weights, c.len()).unwrap();
            let obs = count_weighted_between(&g, &weights, c);
            assert!(lo - 1e-9 <= obs && obs <= hi + 1e-9, "{lo} {obs} {hi}");
        }
    }

    #[test]
    fn desai_rao_fixtures() {
        let k4 = desai_rao_check(&graph::complete(4).unwrap()).unwrap();
        assert!((k4.lambda_min + 1.0).abs() < 1e-8);
        assert!(k4.holds);
        assert!(k4.psi > 0.0);

        // Bipartite C6: Psi = 0 (U = V has b = 0, no cut), bound = -D exactly.
        let c6 = desai_rao_check(&graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c6.psi, 0.0);
        assert!((c6.bound + 2.0).abs() < 1e-12);
        assert!((c6.lambda_min + 2.0).abs() < 1e-8);
        assert!(c6.holds);

        let p = desai_rao_check(&graph::petersen()).unwrap();
        assert!((p.lambda_min + 2.0).abs() < 1e-8);
        assert!(p.holds);
        assert!(p.lambda_min >= -3.0 + p.psi * p.psi / 12.0 - 1e-9);

        assert!(matches!(
            desai_rao_check(&graph::cycle(16).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }
}
