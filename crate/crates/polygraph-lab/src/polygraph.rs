//! Polygraphs G_S: the graph on V(G)^m in which two m-tuples are adjacent
//! iff their coordinatewise distance multiset equals S. Includes the degree
//! formulas a_S and b_S, the positivity criteria for b_S, and the triangle
//! center/midpoint mechanics.

use crate::error::{Error, Result};
use crate::graph::RegularGraph;

/// The multiset S = [l_1 <= ... <= l_m] of coordinate distances.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceMultiset {
    entries: Vec<usize>,
}

impl DistanceMultiset {
    pub fn new(mut entries: Vec<usize>) -> Result<DistanceMultiset> {
        if entries.is_empty() {
            return Err(Error::ParameterTooSmall("S must have m >= 1 entries".into()));
        }
        entries.sort_unstable();
        Ok(DistanceMultiset { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn max(&self) -> usize {
        *self.entries.last().unwrap()
    }

    pub fn min(&self) -> usize {
        self.entries[0]
    }

    /// N = sum of the entries.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_all_zero(&self) -> bool {
        self.max() == 0
    }

    /// Distinct values with multiplicities, ascending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &e in &self.entries {
            match out.last_mut() {
                Some((v, c)) if *v == e => *c += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    /// m! / (m_1! ... m_k!).
    pub fn multinomial(&self) -> u64 {
        let fact = |x: usize| (1..=x as u64).product::<u64>();
        let mut r = fact(self.m());
        for (_, c) in self.multiplicities() {
            r /= fact(c);
        }
        r
    }

    /// The distinct rearrangements of S (the set Omega), sorted.
    pub fn arrangements(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.m());
        let mut pool = self.multiplicities();
        fn rec(pool: &mut Vec<(usize, usize)>, current: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<usize>>) {
            if current.len() == m {
                out.push(current.clone());
                return;
            }
            for i in 0..pool.len() {
                if pool[i].1 == 0 {
                    continue;
                }
                pool[i].1 -= 1;
                current.push(pool[i].0);
                rec(pool, current, m, out);
                current.pop();
                pool[i].1 += 1;
            }
        }
        rec(&mut pool, &mut current, self.m(), &mut out);
        out
    }
}

/// floor(d (d-1)^{l-1}): size of the radius-l sphere in the d-regular tree
/// (the floor only matters at l = 0, where the value is 1).
fn tree_sphere(d: usize, l: usize) -> u64 {
    if l == 0 {
        1
    } else {
        d as u64 * (d as u64 - 1).pow(l as u32 - 1)
    }
}

/// Degree of G_S: m!/(m_1! ... m_k!) * prod_j floor(d (d-1)^{l_j - 1}).
pub fn a_s(s: &DistanceMultiset, d: usize) -> u64 {
    assert!(d >= 2);
    s.multinomial() * s.entries().iter().map(|&l| tree_sphere(d, l)).product::<u64>()
}

/// f_i(j,k): the number of tree vertices at depth k and distance i from a
/// fixed vertex at depth j (depths measured from the root of T_d, i <= depth
/// geometry as in the appendix case split).
fn f(i: usize, j: usize, k: usize, d: usize) -> u64 {
    let d = d as u64;
    if i == 0 {
        return if j == k { tree_sphere(d as usize, j) } else { 0 };
    }
    if (i + j + k) % 2 == 1 {
        return 0;
    }
    let half = (i + j + k) / 2;
    let max = i.max(j).max(k);
    if half < max {
        return 0;
    }
    let e = ((j + k - i) / 2) as u32;
    if half == max {
        (d - 1).pow(e)
    } else {
        (d - 2) * (d - 1).pow(e - 1)
    }
}

/// Link degree of G_S via the appendix closed form:
/// b_S = sum over omega, omega' in Omega of prod_j f_{l_j}(omega_j, omega'_j).
pub fn b_s(s: &DistanceMultiset, d: usize) -> u64 {
    assert!(d >= 3);
    let omega = s.arrangements();
    let l = s.entries();
    let mut total = 0u64;
    for om in &omega {
        for omp in &omega {
            let mut p = 1u64;
            for j in 0..s.m() {
                p *= f(l[j], om[j], omp[j], d);
                if p == 0 {
                    break;
                }
            }
            total += p;
        }
    }
    total
}

/// b_S > 0 iff there is a 3 x m matrix whose rows are rearrangements of S and
/// whose every column has even sum and satisfies the (non-strict) triangle
/// inequality. Row 1 can be fixed to sorted S by row symmetry. Returns the
/// witness matrix when one exists.
pub fn b_s_positive(s: &DistanceMultiset) -> Result<Option<[Vec<usize>; 3]>> {
    if s.m() > 8 {
        return Err(Error::SizeLimit {
            what: "b_s_positive exhaustive matrix search".into(),
            size: s.m(),
            limit: 8,
        });
    }
    let row1 = s.entries().to_vec();
    let perms = s.arrangements();
    for row2 in &perms {
        for row3 in &perms {
            let ok = (0..s.m()).all(|j| {
                let (a, b, c) = (row1[j], row2[j], row3[j]);
                (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
            });
            if ok {
                return Ok(Some([row1, row2.clone(), row3.clone()]));
            }
        }
    }
    Ok(None)
}

/// Closed-form b_S > 0 criterion for m = 3: either all of p,q,r are even, or
/// their sum is even and they satisfy the (non-strict) triangle inequality.
pub fn b_s_positive_m3(p: usize, q: usize, r: usize) -> bool {
    assert!(p <= q && q <= r);
    let all_even = p % 2 == 0 && q % 2 == 0 && r % 2 == 0;
    let sum_even_triangle = (p + q + r) % 2 == 0 && p + q >= r;
    all_even || sum_even_triangle
}

/// One triangle of G_S with its three ordered distance profiles and its
/// coordinatewise tree-center.
#[derive(Debug, Clone)]
pub struct TriangleRecord {
    /// Vertex indices, ascending.
    pub vertices: [usize; 3],
    /// Profiles for the pairs (v0,v1), (v1,v2), (v0,v2).
    pub profiles: [Vec<usize>; 3],
    pub center: Vec<u32>,
}

/// Explicit polygraph over a base graph, with the formula constants recorded
/// and verified against the construction.
#[derive(Debug, Clone)]
pub struct Polygraph {
    base: RegularGraph,
    s: DistanceMultiset,
    graph: RegularGraph,
    a_s: u64,
    b_s: Option<u64>,
    girth_safe: bool,
    /// All-pairs base distances, row-major n x n.
    dist: Vec<u16>,
}

pub const POLYGRAPH_VERTEX_CAP: usize = 2_000_000;
pub const POLYGRAPH_EDGE_SLOT_CAP: u64 = 500_000_000;
const BASE_DIST_TABLE_CAP: usize = 5_000;

pub fn build_polygraph(base: &RegularGraph, s: &DistanceMultiset) -> Result<Polygraph> {
    build_polygraph_with_options(base, s, false)
}

/// `override_girth` skips the girth precondition; the result is marked
/// girth-unsafe and the regularity constants are not guaranteed.
pub fn build_polygraph_with_options(
    base: &RegularGraph,
    s: &DistanceMultiset,
    override_girth: bool,
) -> Result<Polygraph> {
    if s.is_all_zero() {
        return Err(Error::DomainError(
            "S must contain a positive entry; G_S would have no edges".into(),
        ));
    }
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let girth = base.girth().unwrap_or(usize::MAX);
    let girth_safe = girth > 3 * s.max();
    if !girth_safe && !override_girth {
        return Err(Error::GirthTooSmall {
            required: 3 * s.max(),
            actual: girth,
        });
    }
    let n = base.n();
    if n > BASE_DIST_TABLE_CAP {
        return Err(Error::SizeLimit {
            what: "base graph for explicit polygraph construction".into(),
            size: n,
            limit: BASE_DIST_TABLE_CAP,
        });
    }
    let m = s.m();
    let cap = crate::graph::vertex_cap(POLYGRAPH_VERTEX_CAP);
    let total = (n as u64).checked_pow(m as u32).filter(|&t| t <= cap as u64).ok_or(
        Error::SizeLimit {
            what: format!("polygraph vertex count n^m with n = {n}, m = {m}"),
            size: usize::MAX,
            limit: cap,
        },
    )? as usize;
    let a_s_val = a_s(s, base.d());
    if a_s_val.saturating_mul(total as u64) > POLYGRAPH_EDGE_SLOT_CAP {
        return Err(Error::SizeLimit {
            what: "polygraph edge slots a_S * n^m".into(),
            size: (a_s_val.saturating_mul(total as u64)).min(usize::MAX as u64) as usize,
            limit: POLYGRAPH_EDGE_SLOT_CAP as usize,
        });
    }

    let mut dist = vec![u16::MAX; n * n];
    for v in 0..n {
        for (u, &d) in base.bfs_distances(v).iter().enumerate() {
            if d != usize::MAX {
                dist[v * n + u] = d as u16;
            }
        }
    }

    // sphere[vi][v] = vertices at distance vals[vi] from v.
    let vals: Vec<usize> = s.multiplicities().iter().map(|&(v, _)| v).collect();
    let sphere: Vec<Vec<Vec<u32>>> = vals
        .iter()
        .map(|&l| {
            (0..n)
                .map(|v| {
                    (0..n)
                        .filter(|&u| dist[v * n + u] as usize == l)
                        .map(|u| u as u32)
                        .collect()
                })
                .collect()
        })
        .collect();
    let val_index = |l: usize| vals.iter().position(|&v| v == l).unwrap();
    let arrangements: Vec<Vec<usize>> = s
        .arrangements()
        .iter()
        .map(|om| om.iter().map(|&l| val_index(l)).collect())
        .collect();

    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(total);
    let mut labels: Vec<Vec<u32>> = Vec::with_capacity(total);
    let mut tuple = vec![0u32; m];
    for v in 0..total {
        decode(v, n, &mut tuple);
        let mut nbrs: Vec<u32> = Vec::with_capacity(a_s_val as usize);
        for om in &arrangements {
            let pools: Vec<&[u32]> = (0..m)
                .map(|j| sphere[om[j]][tuple[j] as usize].as_slice())
                .collect();
            if pools.iter().any(|p| p.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; m];
            loop {
                let mut code = 0u64;
                for j in 0..m {
                    code = code * n as u64 + pools[j][idx[j]] as u64;
                }
                nbrs.push(code as u32);
                let mut j = m;
                loop {
                    if j == 0 {
                        break;
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] < pools[j].len() {
                        break;
                    }
                    idx[j] = 0;
                    if j == 0 {
                        j = usize::MAX;
                        break;
                    }
                }
                if j == usize::MAX {
                    break;
                }
            }
        }
        nbrs.sort_unstable();
        adj.push(nbrs);
        labels.push(tuple.iter().copied().collect());
    }
    let graph = RegularGraph::from_canonical_adjacency(adj, Some(labels))?;
    if girth_safe && graph.d() != a_s_val as usize {
        return Err(Error::DomainError(format!(
            "constructed degree {} disagrees with a_S = {a_s_val}",
            graph.d()
        )));
    }
    let b_s_val = (base.d() >= 3).then(|| b_s(s, base.d()));
    Ok(Polygraph {
        base: base.clone(),
        s: s.clone(),
        graph,
        a_s: a_s_val,
        b_s: b_s_val,
        girth_safe,
        dist,
    })
}

fn decode(mut v: usize, n: usize, tuple: &mut [u32]) {
    for slot in tuple.iter_mut().rev() {
        *slot = (v % n) as u32;
        v /= n;
    }
}

impl Polygraph {
    pub fn base(&self) -> &RegularGraph {
        &self.base
    }

    pub fn s(&self) -> &DistanceMultiset {
        &self.s
    }

    pub fn graph(&self) -> &RegularGraph {
        &self.graph
    }

    pub fn a_s(&self) -> u64 {
        self.a_s
    }

    pub fn b_s(&self) -> Option<u64> {
        self.b_s
    }

    pub fn girth_safe(&self) -> bool {
        self.girth_safe
    }

    pub fn m(&self) -> usize {
        self.s.m()
    }

    pub fn tuple_of(&self, v: usize) -> &[u32] {
        self.graph.label(v).unwrap()
    }

    pub fn index_of(&self, tuple: &[u32]) -> usize {
        tuple
            .iter()
            .fold(0usize, |acc, &x| acc * self.base.n() + x as usize)
    }

    pub fn base_dist(&self, u: u32, v: u32) -> usize {
        self.dist[u as usize * self.base.n() + v as usize] as usize
    }

    /// Ordered coordinatewise distance tuple between two polygraph vertices.
    pub fn distance_profile(&self, x: usize, y: usize) -> Vec<usize> {
        let (tx, ty) = (self.tuple_of(x), self.tuple_of(y));
        tx.iter().zip(ty).map(|(&a, &b)| self.base_dist(a, b)).collect()
    }

    /// Number of edges among the neighbors of v, divided by half the
    /// neighbor count: the degree of v's link when the link is regular.
    pub fn link_degree(&self, v: usize) -> Option<usize> {
        let nbrs = self.graph.neighbors(v);
        let mut deg: Option<usize> = None;
        for &u in nbrs {
            let d = self
                .graph
                .neighbors(u as usize)
                .iter()
                .filter(|&&w| nbrs.binary_search(&w).is_ok())
                .count();
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Every triangle exactly once, with profiles and centers.
    pub fn enumerate_triangles(&self) -> Result<Vec<TriangleRecord>> {
        let g = &self.graph;
        let mut out = Vec::new();
        for (x, y) in g.edges() {
            let (nx, ny) = (g.neighbors(x as usize), g.neighbors(y as usize));
            // Sorted-list intersection, keeping z > y so each triangle is
            // produced once with x < y < z.
            let (mut i, mut j) = (0, 0);
            while i < nx.len() && j < ny.len() {
                match nx[i].cmp(&ny[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let z = nx[i];
                        if z > y {
                            let (x, y, z) = (x as usize, y as usize, z as usize);
                            out.push(TriangleRecord {
                                vertices: [x, y, z],
                                profiles: [
                                    self.distance_profile(x, y),
                                    self.distance_profile(y, z),
                                    self.distance_profile(x, z),
                                ],
                                center: self.center(x, y, z)?,
                            });
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Coordinatewise tree-center of a triple. Requires the girth-safe
    /// regime and pairwise coordinate distances at most max(S), which make
    /// the center exist uniquely.
    pub fn center(&self, x: usize, y: usize, z: usize) -> Result<Vec<u32>> {
        if !self.girth_safe {
            return Err(Error::CenterUndefined);
        }
        let (tx, ty, tz) = (
            self.tuple_of(x).to_vec(),
            self.tuple_of(y).to_vec(),
            self.tuple_of(z).to_vec(),
        );
        let mut center = Vec::with_capacity(self.m());
        for i in 0..self.m() {
            let (a, b, c) = (tx[i], ty[i], tz[i]);
            let (dab, dbc, dac) = (
                self.base_dist(a, b),
                self.base_dist(b, c),
                self.base_dist(a, c),
            );
            let max_s = self.s.max();
            if dab > max_s || dbc > max_s || dac > max_s {
                return Err(Error::CenterUndefined);
            }
            if (dab + dbc + dac) % 2 != 0 || dab + dbc < dac || dab + dac < dbc || dbc + dac < dab {
                return Err(Error::CenterUndefined);
            }
            let from_a = (dab + dac - dbc) / 2;
            let from_b = (dab + dbc - dac) / 2;
            let from_c = (dac + dbc - dab) / 2;
            let mut found: Option<u32> = None;
            for w in 0..self.base.n() as u32 {
                if self.base_dist(a, w) == from_a
                    && self.base_dist(b, w) == from_b
                    && self.base_dist(c, w) == from_c
                {
                    if found.is_some() {
                        return Err(Error::CenterUndefined);
                    }
                    found = Some(w);
                }
            }
            center.push(found.ok_or(Error::CenterUndefined)?);
        }
        Ok(center)
    }

    /// The two midpoints of a [1,1,0] edge: keep the frozen coordinate, and
    /// mix the two moving coordinates one way each.
    pub fn midpoints_110(&self, x: usize, y: usize) -> Result<(Vec<u32>, Vec<u32>)> {
        if self.s.entries() != [0, 1, 1] {
            return Err(Error::WrongS {
                expected: "[0, 1, 1]".into(),
                actual: format!("{:?}", self.s.entries()),
            });
        }
        let profile = self.distance_profile(x, y);
        let moving: Vec<usize> = (0..3).filter(|&i| profile[i] == 1).collect();
        if moving.len() != 2 {
            return Err(Error::DomainError("not a [1,1,0] edge".into()));
        }
        let (tx, ty) = (self.tuple_of(x), self.tuple_of(y));
        let mut m1 = tx.to_vec();
        m1[moving[1]] = ty[moving[1]];
        let mut m2 = tx.to_vec();
        m2[moving[0]] = ty[moving[0]];
        Ok((m1, m2))
    }

    /// The directed-edge midpoint for S = [1,2,3]: the distance-1 coordinate
    /// comes from the tail, the distance-2 coordinate from the head, and the
    /// distance-3 coordinate is the first internal vertex of the length-3
    /// path from the tail. Asymmetric in direction by design.
    pub fn midpoint_123(&self, u: usize, v: usize) -> Result<Vec<u32>> {
        if self.s.entries() != [1, 2, 3] {
            return Err(Error::WrongS {
                expected: "[1, 2, 3]".into(),
                actual: format!("{:?}", self.s.entries()),
            });
        }
        let profile = self.distance_profile(u, v);
        let (tu, tv) = (self.tuple_of(u).to_vec(), self.tuple_of(v).to_vec());
        let mut mid = vec![0u32; 3];
        for i in 0..3 {
            mid[i] = match profile[i] {
                1 => tu[i],
                2 => tv[i],
                3 => {
                    // Unique by girth > 9: the neighbor of u_i at distance 2
                    // from v_i.
                    let z = self
                        .base
                        .neighbors(tu[i] as usize)
                        .iter()
                        .copied()
                        .find(|&w| self.base_dist(w, tv[i]) == 2);
                    z.ok_or_else(|| Error::DomainError("no length-3 geodesic found".into()))?
                }
                _ => return Err(Error::DomainError("not a [1,2,3] edge".into())),
            };
        }
        Ok(mid)
    }
}
