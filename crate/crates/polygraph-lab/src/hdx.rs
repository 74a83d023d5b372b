//! High-dimensional-expansion diagnostics: the 2-dimensional clique complex,
//! the Aux edge-triangle-edge walk graph, center classes T_x with their
//! K_{d,d,d} skeletons, coboundary and discrepancy witnesses, and the
//! geometric-overlap calculator.

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::{self, RegularGraph};
use crate::polygraph::{Polygraph, TriangleRecord};
use std::collections::{BTreeMap, HashMap};

/// 2-skeleton of the clique complex: the graph plus its triangle list and a
/// per-edge triangle index.
pub struct CliqueComplex2 {
    graph: RegularGraph,
    triangles: Vec<[u32; 3]>,
    /// Edge (u < v) -> indices into `triangles`.
    edge_triangles: HashMap<(u32, u32), Vec<u32>>,
}

fn edge_key(u: u32, v: u32) -> (u32, u32) {
    (u.min(v), u.max(v))
}

impl CliqueComplex2 {
    pub fn graph(&self) -> &RegularGraph {
        &self.graph
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn triangles_of_edge(&self, u: u32, v: u32) -> &[u32] {
        self.edge_triangles
            .get(&edge_key(u, v))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }
}

/// Enumerates all triangles by sorted neighbor-list intersection. When the
/// graph is (a,b)-regular the count is checked against a b n / 6.
pub fn clique_complex_2(g: &RegularGraph) -> CliqueComplex2 {
    let mut triangles = Vec::new();
    let mut edge_triangles: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
    for u in 0..g.n() as u32 {
        for &v in g.neighbors(u as usize) {
            if v <= u {
                continue;
            }
            for &w in g.neighbors(v as usize) {
                if w > v && g.has_edge(u as usize, w as usize) {
                    let id = triangles.len() as u32;
                    triangles.push([u, v, w]);
                    for (a, b) in [(u, v), (v, w), (u, w)] {
                        edge_triangles.entry((a, b)).or_default().push(id);
                    }
                }
            }
        }
    }
    if let Some((a, b)) = g.ab_regularity() {
        debug_assert_eq!(triangles.len(), a * b * g.n() / 6);
    }
    CliqueComplex2 {
        graph: g.clone(),
        triangles,
        edge_triangles,
    }
}

/// The Aux graph: one vertex per edge of the underlying graph, e ~ f iff
/// e union f spans a triangle.
pub struct AuxGraph {
    /// Edge list of the underlying graph, in `edges()` order.
    pub edges: Vec<(u32, u32)>,
    pub adj: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct AuxReport {
    pub n: usize,
    pub degree_histogram: Vec<(usize, usize)>,
    pub regular_degree: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub lambda2: Option<f64>,
    pub lambda_min: Option<f64>,
    pub normalized_gap: Option<f64>,
}

pub const AUX_DENSE_CAP: usize = 2_000;
pub const AUX_EDGE_CAP: usize = 50_000;

pub fn aux_graph(c: &CliqueComplex2) -> Result<AuxGraph> {
    let g = c.graph();
    if g.edge_count() > AUX_EDGE_CAP {
        return Err(Error::SizeLimit {
            what: "aux graph".into(),
            size: g.edge_count(),
            limit: AUX_EDGE_CAP,
        });
    }
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let index: HashMap<(u32, u32), u32> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); edges.len()];
    for t in c.triangles() {
        let ids = [
            index[&edge_key(t[0], t[1])],
            index[&edge_key(t[1], t[2])],
            index[&edge_key(t[0], t[2])],
        ];
        // Two edges determine their union, so no triangle pair repeats.
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            adj[ids[a] as usize].push(ids[b]);
            adj[ids[b] as usize].push(ids[a]);
        }
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    Ok(AuxGraph { edges, adj })
}

/// Degree profile, connectivity and (for regular Aux graphs) the extreme
/// eigenvalues: dense below AUX_DENSE_CAP, Lanczos above.
pub fn aux_report(aux: &AuxGraph) -> Result<AuxReport> {
    let n = aux.adj.len();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for row in &aux.adj {
        *hist.entry(row.len()).or_insert(0) += 1;
    }
    let regular_degree = (hist.len() == 1).then(|| *hist.keys().next().unwrap());
    let connected = graph::component_count_adj(&aux.adj) == 1;
    let bipartite = graph::is_bipartite_adj(&aux.adj);
    let (mut lambda2, mut lambda_min, mut gap) = (None, None, None);
    if let Some(deg) = regular_degree {
        if deg > 0 && connected {
            let g = RegularGraph::from_canonical_adjacency(aux.adj.clone(), None)?;
            let (l2, lmin) = if n <= AUX_DENSE_CAP {
                let s = eigen::spectrum(&g)?;
                (s.lambda2, s.lambda_min)
            } else {
                eigen::extreme_eigenvalues(&g, 1e-8, 600)?
            };
            lambda2 = Some(l2);
            lambda_min = Some(lmin);
            gap = Some(1.0 - l2 / deg as f64);
        }
    }
    Ok(AuxReport {
        n,
        degree_histogram: hist.into_iter().collect(),
        regular_degree,
        connected,
        bipartite,
        lambda2,
        lambda_min,
        normalized_gap: gap,
    })
}

/// Exact histogram of the number of triangles through each edge.
pub fn triangles_per_edge(c: &CliqueComplex2) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for (u, v) in c.graph().edges() {
        *hist.entry(c.triangles_of_edge(u, v).len()).or_insert(0) += 1;
    }
    hist
}

/// The classes T_x of a [1,1,0] polygraph: triangles grouped by center.
/// Every class has d^3 triangles; every class vertex differs from the center
/// in exactly one coordinate, giving the complete tripartite K_{d,d,d}
/// skeleton.
pub struct CenterClass {
    pub center: Vec<u32>,
    pub triangle_ids: Vec<usize>,
}

pub fn center_partition(p: &Polygraph) -> Result<(Vec<TriangleRecord>, Vec<CenterClass>)> {
    if p.s().entries() != [0, 1, 1] {
        return Err(Error::WrongS {
            expected: "[1,1,0]".into(),
            actual: format!("{:?}", p.s().entries()),
        });
    }
    let triangles = p.enumerate_triangles()?;
    let mut classes: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        classes.entry(t.center.clone()).or_default().push(i);
    }
    let mut out: Vec<CenterClass> = classes
        .into_iter()
        .map(|(center, triangle_ids)| CenterClass {
            center,
            triangle_ids,
        })
        .collect();
    out.sort_by(|a, b| a.center.cmp(&b.center));
    Ok((triangles, out))
}

/// Checks that a center class's 1-skeleton is the complete tripartite
/// K_{d,d,d}, with parts indexed by the coordinate moved off the center.
pub fn class_skeleton_is_kddd(p: &Polygraph, triangles: &[TriangleRecord], class: &CenterClass) -> bool {
    let d = p.base().d();
    if class.triangle_ids.len() != d * d * d {
        return false;
    }
    // parts[i] = base vertices appearing in coordinate i among class members.
    let mut parts: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); 3];
    let mut members: std::collections::BTreeSet<usize> = Default::default();
    for &t in &class.triangle_ids {
        for &v in &triangles[t].vertices {
            members.insert(v);
        }
    }
    for &v in &members {
        let tup = p.tuple_of(v);
        let moved: Vec<usize> = (0..3).filter(|&i| tup[i] != class.center[i]).collect();
        if moved.len() != 1 {
            return false;
        }
        parts[moved[0]].insert(tup[moved[0]]);
    }
    if members.len() != 3 * d || parts.iter().any(|p| p.len() != d) {
        return false;
    }
    // All d^3 combinations appear as triangles.
    let mut seen: std::collections::BTreeSet<[u32; 3]> = Default::default();
    for &t in &class.triangle_ids {
        let mut key = [0u32; 3];
        for &v in &triangles[t].vertices {
            let tup = p.tuple_of(v);
            let i = (0..3).find(|&i| tup[i] != class.center[i]).unwrap();
            key[i] = tup[i];
        }
        seen.insert(key);
    }
    seen.len() == d * d * d
}

/// Multiset of midpoints over all polygraph edges (each [1,1,0] edge has
/// exactly two).
pub fn midpoint_multiset(p: &Polygraph) -> Result<HashMap<Vec<u32>, usize>> {
    let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
    for (u, v) in p.graph().edges() {
        let (m1, m2) = p.midpoints_110(u as usize, v as usize)?;
        *counts.entry(m1).or_insert(0) += 1;
        *counts.entry(m2).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Lower bound d (w - 2d^2)^+ on the number of triangles spanned by any w
/// edges of K_{d,d,d}.
pub fn kddd_triangle_floor(d: usize, w: usize) -> usize {
    assert!(w <= 3 * d * d);
    d * w.saturating_sub(2 * d * d)
}

/// Exhaustive minimum number of triangles over all w-edge subsets of
/// K_{d,d,d}; feasible only for d = 2 (12 edges).
pub fn kddd_min_triangles_exhaustive(d: usize, w: usize) -> usize {
    let edges: Vec<(usize, usize, usize)> = {
        // Edge ids: (part pair, i, j).
        let mut e = Vec::new();
        for pair in 0..3 {
            for i in 0..d {
                for j in 0..d {
                    e.push((pair, i, j));
                }
            }
        }
        e
    };
    assert!(edges.len() <= 20, "exhaustive search only for tiny d");
    let mut best = usize::MAX;
    for mask in 0u32..1 << edges.len() {
        if mask.count_ones() as usize != w {
            continue;
        }
        let has = |pair: usize, i: usize, j: usize| {
            let id = pair * d * d + i * d + j;
            mask >> id & 1 == 1
        };
        let mut tris = 0;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    // Parts P0, P1, P2; edge pairs: 0 = (P0,P1), 1 = (P1,P2),
                    // 2 = (P0,P2).
                    if has(0, a, b) && has(1, b, c) && has(2, a, c) {
                        tris += 1;
                    }
                }
            }
        }
        best = best.min(tris);
    }
    best
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct WitnessReport {
    pub property_1_checked: usize,
    pub violations: usize,
    pub odd_cycle: Vec<usize>,
    pub is_cut: bool,
}

/// Shortest odd cycle of a connected non-bipartite graph.
pub fn shortest_odd_cycle(g: &RegularGraph) -> Result<Vec<u32>> {
    let mut best: Option<Vec<u32>> = None;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![u32::MAX; g.n()];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root as u32]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u as usize) {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                }
            }
        }
        for (u, v) in g.edges() {
            if dist[u as usize] != dist[v as usize] {
                continue;
            }
            let len = dist[u as usize] + dist[v as usize] + 1;
            if best.as_ref().is_some_and(|b| b.len() <= len) {
                continue;
            }
            let path = |mut x: u32| {
                let mut p = vec![x];
                while x as usize != root {
                    x = parent[x as usize];
                    p.push(x);
                }
                p
            };
            let pu = path(u); // u ... root
            let mut pv = path(v);
            pv.pop(); // drop root
            pv.reverse(); // root-child ... v
            let mut cycle = pu;
            cycle.extend(pv);
            // Keep only simple cycles (for the minimal odd closed walk the
            // two paths meet at the root alone).
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == cycle.len() && cycle.len() % 2 == 1 {
                best = Some(cycle);
            }
        }
    }
    best.ok_or(Error::BipartiteBase)
}

/// The cocycle-obstruction witness for S = [1,1,0] or [1,1,2]: the edge set
/// A of profiles with the first coordinate moving by 1 meets every triangle
/// exactly twice, yet carries an odd cycle lifted from the base, so A is not
/// a cut.
pub fn coboundary_witness(p: &Polygraph) -> Result<WitnessReport> {
    let s = p.s().entries();
    let variant_110 = s == [0, 1, 1];
    let variant_112 = s == [1, 1, 2];
    if !variant_110 && !variant_112 {
        return Err(Error::WrongS {
            expected: "[1,1,0] or [1,1,2]".into(),
            actual: format!("{:?}", s),
        });
    }
    let in_a = |x: usize, y: usize| -> bool {
        let prof = p.distance_profile(x, y);
        if variant_110 {
            prof == [1, 1, 0] || prof == [1, 0, 1]
        } else {
            prof == [1, 1, 2] || prof == [1, 2, 1]
        }
    };
    // Property (1): every triangle contains exactly two A-edges.
    let triangles = p.enumerate_triangles()?;
    let mut violations = 0;
    for t in &triangles {
        let [x, y, z] = t.vertices;
        let count = [(x, y), (y, z), (x, z)]
            .iter()
            .filter(|&&(a, b)| in_a(a, b))
            .count();
        if count != 2 {
            violations += 1;
        }
    }
    // Property (2): an odd base cycle lifts to an odd cycle inside (V, A).
    let cycle = shortest_odd_cycle(p.base())?;
    let l = cycle.len();
    let lift: Vec<usize> = (0..l)
        .map(|j| {
            let tuple = if variant_110 {
                vec![cycle[j], cycle[j], cycle[0]]
            } else {
                vec![cycle[j], cycle[j], cycle[(2 * j) % l]]
            };
            p.index_of(&tuple)
        })
        .collect();
    for j in 0..l {
        let (x, y) = (lift[j], lift[(j + 1) % l]);
        if !p.graph().has_edge(x, y) || !in_a(x, y) {
            return Err(Error::DomainError(format!(
                "odd-cycle lift failed at step {j}"
            )));
        }
    }
    Ok(WitnessReport {
        property_1_checked: triangles.len(),
        violations,
        odd_cycle: lift,
        is_cut: false,
    })
}

/// The discrepancy counterexample for 0 in S: A^m and (A^c)^m admit no
/// crossing edges because every polygraph edge freezes some coordinate.
pub fn discrepancy_witness(
    p: &Polygraph,
    a: &[u32],
) -> Result<(Vec<usize>, Vec<usize>, usize)> {
    if p.s().min() != 0 {
        return Err(Error::ZeroNotInS);
    }
    let n = p.base().n();
    let mut in_a = vec![false; n];
    for &v in a {
        in_a[v as usize] = true;
    }
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for v in 0..p.graph().n() {
        let tup = p.tuple_of(v);
        if tup.iter().all(|&x| in_a[x as usize]) {
            side_a.push(v);
        } else if tup.iter().all(|&x| !in_a[x as usize]) {
            side_b.push(v);
        }
    }
    let in_side_b: std::collections::HashSet<usize> = side_b.iter().copied().collect();
    let cross = side_a
        .iter()
        .map(|&v| {
            p.graph()
                .neighbors(v)
                .iter()
                .filter(|&&u| in_side_b.contains(&(u as usize)))
                .count()
        })
        .sum();
    Ok((side_a, side_b, cross))
}

/// All intermediate terms of the geometric-overlap lower bound.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OverlapReport {
    pub mu: f64,
    pub n_total: f64,
    pub degree_123: f64,
    pub lambda_123: f64,
    pub e_ab_lower: f64,
    pub e_ab_upper: f64,
    pub m_size: f64,
    pub w_max: f64,
    pub degree_111: f64,
    pub lambda_111: f64,
    pub e_mc_lower: f64,
    pub fan_deficit: f64,
    pub triangle_lower: f64,
    pub total_triangles: f64,
    pub fraction: f64,
}

/// Composes the overlap chain: mixing bound for the [1,2,3] edges between
/// A and B, two directed midpoints per such edge forming the multiset M,
/// the multiset mixing bound for [1,1,1] edges between M and C, and the fan
/// correction: every midpoint keeps at least (d-1)^2(d-2) of its d^3
/// [1,1,1]-neighbors inside completed triangles, so
/// |T(A,B,C)| >= |E(M,C)| - (d^3 - (d-1)^2(d-2)) |M|.
///
/// The second moment of M has no a-priori control; we cap the per-vertex
/// multiplicity by w_max (default 2d: a vertex serves as the directed
/// midpoint of at most 2d edges per incident configuration in the worst
/// case modeled here) and expose it as a parameter.
pub fn overlap_bound_calculator(
    n_base: f64,
    d: usize,
    lambda_g: f64,
    a: f64,
    b: f64,
    c: f64,
    w_max: Option<f64>,
) -> OverlapReport {
    let df = d as f64;
    let mu = lambda_g.max(2.0 * (df - 1.0).sqrt());
    let n_total = n_base.powi(3);
    let degree_123 = 6.0 * df.powi(3) * (df - 1.0).powi(3);
    let lambda_123 = 6.0 * mu * df.powi(2) * (df - 1.0).powi(3);
    let (e_ab_lower, e_ab_upper) = {
        let main = degree_123 * a * b / n_total;
        let dev = lambda_123 * (a * b * (1.0 - a / n_total) * (1.0 - b / n_total)).sqrt();
        (main - dev, main + dev)
    };
    let m_size = 2.0 * e_ab_lower.max(0.0).floor();
    let w_max = w_max.unwrap_or(2.0 * df);
    let degree_111 = df.powi(3);
    let lambda_111 = mu * df.powi(2);
    let w_sq = w_max * m_size;
    let e_mc_lower = {
        let main = degree_111 * m_size * c / n_total;
        let var = (w_sq - m_size * m_size / n_total).max(0.0);
        main - lambda_111 * (var * c * (1.0 - c / n_total)).sqrt()
    };
    let fan_deficit = degree_111 - (df - 1.0).powi(2) * (df - 2.0);
    let triangle_lower = e_mc_lower - fan_deficit * m_size;
    let b_123 = 2.0 * (df - 1.0).powi(2) * (4.0 * df - 7.0);
    let total_triangles = degree_123 * b_123 * n_total / 6.0;
    OverlapReport {
        mu,
        n_total,
        degree_123,
        lambda_123,
        e_ab_lower,
        e_ab_upper,
        m_size,
        w_max,
        degree_111,
        lambda_111,
        e_mc_lower,
        fan_deficit,
        triangle_lower,
        total_triangles,
        fraction: triangle_lower / total_triangles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygraph::{build_polygraph, DistanceMultiset};

    fn s(v: &[usize]) -> DistanceMultiset {
        DistanceMultiset::new(v.to_vec()).unwrap()
    }

    fn petersen_110() -> Polygraph {
        build_polygraph(&graph::petersen(), &s(&[1, 1, 0])).unwrap()
    }

    #[test]
    fn complex_counts() {
        assert_eq!(clique_complex_2(&graph::petersen()).triangles().len(), 0);
        assert_eq!(clique_complex_2(&graph::icosahedron()).triangles().len(), 20);
        let p = petersen_110();
        let c = clique_complex_2(p.graph());
        assert_eq!(c.triangles().len(), 27_000); // 27 * 6 * 1000 / 6
    }

    #[test]
    fn aux_fixtures() {
        // Icosahedron: every edge lies in 2 triangles, so Aux is 4-regular.
        let c = clique_complex_2(&graph::icosahedron());
        let aux = aux_graph(&c).unwrap();
        let report = aux_report(&aux).unwrap();
        assert_eq!(report.n, 30);
        assert_eq!(report.regular_degree, Some(4));
        assert!(report.connected);
        let hist = triangles_per_edge(&c);
        assert_eq!(hist.into_iter().collect::<Vec<_>>(), vec![(2, 30)]);

        // Triangle-free graph: edgeless Aux.
        let c = clique_complex_2(&graph::petersen());
        let aux = aux_graph(&c).unwrap();
        assert!(aux.adj.iter().all(|r| r.is_empty()));

        // K4: every edge in exactly 2 triangles.
        let c = clique_complex_2(&graph::complete(4).unwrap());
        assert_eq!(
            triangles_per_edge(&c).into_iter().collect::<Vec<_>>(),
            vec![(2, 6)]
        );
    }

    #[test]
    fn aux_gap_of_petersen_polygraph() {
        let p = petersen_110();
        let c = clique_complex_2(p.graph());
        let aux = aux_graph(&c).unwrap();
        let report = aux_report(&aux).unwrap();
        assert_eq!(report.n, 13_500);
        assert_eq!(report.regular_degree, Some(12)); // 4d
        assert!(report.connected);
        assert!(!report.bipartite);
        assert!(report.lambda2.unwrap() < 12.0 - 1e-3);
        assert!(report.normalized_gap.unwrap() > 0.0);
        // 2d triangles per polygraph edge.
        let hist = triangles_per_edge(&c);
        assert_eq!(hist.into_iter().collect::<Vec<_>>(), vec![(6, 13_500)]);
    }

    #[test]
    fn center_classes_partition_and_skeleton() {
        let p = petersen_110();
        let (triangles, classes) = center_partition(&p).unwrap();
        let total: usize = classes.iter().map(|c| c.triangle_ids.len()).sum();
        assert_eq!(total, triangles.len());
        assert_eq!(classes.len(), 1000); // one class per tuple, d^3 each
        for class in &classes {
            assert_eq!(class.triangle_ids.len(), 27);
            assert!(class_skeleton_is_kddd(&p, &triangles, class));
        }
    }

    #[test]
    fn edges_have_two_midpoint_classes() {
        let p = petersen_110();
        let (triangles, classes) = center_partition(&p).unwrap();
        // Index: edge -> centers of classes containing it.
        let mut edge_centers: HashMap<(usize, usize), std::collections::BTreeSet<Vec<u32>>> =
            HashMap::new();
        for class in &classes {
            for &t in &class.triangle_ids {
                let [x, y, z] = triangles[t].vertices;
                for (a, b) in [(x, y), (y, z), (x, z)] {
                    edge_centers
                        .entry((a.min(b), a.max(b)))
                        .or_default()
                        .insert(class.center.clone());
                }
            }
        }
        let multiset = midpoint_multiset(&p).unwrap();
        let total: usize = multiset.values().sum();
        assert_eq!(total, 2 * p.graph().edge_count());
        for ((u, v), centers) in &edge_centers {
            let (m1, m2) = p.midpoints_110(*u, *v).unwrap();
            let expect: std::collections::BTreeSet<Vec<u32>> = [m1, m2].into_iter().collect();
            assert_eq!(centers, &expect, "edge ({u},{v})");
        }
    }

    #[test]
    fn kddd_floor_and_tightness() {
        assert_eq!(kddd_triangle_floor(2, 8), 0);
        assert_eq!(kddd_triangle_floor(2, 9), 2);
        assert_eq!(kddd_triangle_floor(2, 12), 8);
        assert_eq!(kddd_triangle_floor(3, 27), 27);
        for w in 0..=12 {
            let exact = kddd_min_triangles_exhaustive(2, w);
            let floor = kddd_triangle_floor(2, w);
            assert!(exact >= floor, "w = {w}");
            assert_eq!(exact, floor, "floor not tight at w = {w}");
        }
    }

    #[test]
    fn coboundary_witness_on_petersen() {
        let p = petersen_110();
        let report = coboundary_witness(&p).unwrap();
        assert_eq!(report.property_1_checked, 27_000);
        assert_eq!(report.violations, 0);
        assert_eq!(report.odd_cycle.len(), 5);
        assert!(!report.is_cut);
    }

    #[test]
    fn coboundary_witness_112_on_cycle() {
        let g = graph::cycle(9).unwrap();
        let p = build_polygraph(&g, &s(&[1, 1, 2])).unwrap();
        let report = coboundary_witness(&p).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.property_1_checked > 0);
        assert_eq!(report.odd_cycle.len(), 9);
    }

    #[test]
    fn coboundary_witness_refusals() {
        let c20 = graph::cycle(20).unwrap();
        let p = build_polygraph(&c20, &s(&[1, 2, 3])).unwrap();
        assert!(matches!(coboundary_witness(&p), Err(Error::WrongS { .. })));

        let c6 = graph::cycle(6).unwrap();
        let p = build_polygraph(&c6, &s(&[1, 1, 0])).unwrap();
        assert!(matches!(coboundary_witness(&p), Err(Error::BipartiteBase)));
    }

    #[test]
    fn discrepancy_zero_cross_edges() {
        let p = petersen_110();
        let a: Vec<u32> = (0..5).collect();
        let (sa, sb, cross) = discrepancy_witness(&p, &a).unwrap();
        assert_eq!((sa.len(), sb.len()), (125, 125));
        assert_eq!(cross, 0);
        assert_eq!(sa.len() * 8, p.graph().n());

        let p111 = build_polygraph(&graph::petersen(), &s(&[1, 1])).unwrap();
        assert!(matches!(
            discrepancy_witness(&p111, &a),
            Err(Error::ZeroNotInS)
        ));
    }

    #[test]
    fn overlap_calculator_regimes() {
        // Reference regime: d = 1600, lambda = d/20, sixths of the vertices.
        let n: f64 = 1e8;
        let d = 1600;
        let sixth = n.powi(3) / 6.0;
        let r = overlap_bound_calculator(n, d, 80.0, sixth, sixth, sixth, None);
        assert!(r.triangle_lower > 0.0);
        assert!(r.fraction > 0.0 && r.fraction < 1.0);
        assert!((r.fraction - 5.14e-3).abs() < 5e-4);
        // No expansion: bound collapses to vacuous.
        let bad = overlap_bound_calculator(n, d, d as f64, sixth, sixth, sixth, None);
        assert!(bad.triangle_lower <= 0.0);
        // Small-d probe: record the sign only.
        let probe = overlap_bound_calculator(1e6, 10, 6.0, 1e18 / 6.0, 1e18 / 6.0, 1e18 / 6.0, None);
        let _ = probe.triangle_lower.is_sign_positive();
    }

    #[test]
    fn shortest_odd_cycles() {
        assert_eq!(shortest_odd_cycle(&graph::petersen()).unwrap().len(), 5);
        assert_eq!(shortest_odd_cycle(&graph::complete(4).unwrap()).unwrap().len(), 3);
        assert!(matches!(
            shortest_odd_cycle(&graph::cycle(8).unwrap()),
            Err(Error::BipartiteBase)
        ));
    }
}
