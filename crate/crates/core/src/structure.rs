//! Non-symmetry graph invariants: distances, diameter, clique number, cut
//! vertices, bipartiteness, Eulerian and distance-regularity tests, and the
//! simple-cycle census.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shortest-path edge counts between every pair of vertices of a connected
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.entries[u * self.n + v] as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0) as usize
    }

    fn row(&self, u: usize) -> &[u8] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut entries = vec![u8::MAX; n * n];
    for s in 0..n {
        let row = &mut entries[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in 0..n {
                if g.has_edge(v, u) && row[u] == u8::MAX {
                    row[u] = row[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        if row.contains(&u8::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, entries })
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(all_pairs_distances(g)?.max())
}

/// Largest clique, by branch and bound over neighbor bitmasks.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut candidates: u16, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        while candidates != 0 {
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            expand(g, size + 1, candidates & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.all_vertices(), &mut best);
    best
}

/// Articulation points via DFS lowpoints, sorted ascending.
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    fn visit(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        is_cut: &mut [bool],
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut children = 0;
        for u in 0..g.n() {
            if !g.has_edge(v, u) || Some(u) == parent {
                continue;
            }
            if disc[u] == usize::MAX {
                children += 1;
                visit(g, u, Some(v), timer, disc, low, is_cut);
                low[v] = low[v].min(low[u]);
                if parent.is_some() && low[u] >= disc[v] {
                    is_cut[v] = true;
                }
            } else {
                low[v] = low[v].min(disc[u]);
            }
        }
        if parent.is_none() && children > 1 {
            is_cut[v] = true;
        }
    }

    visit(g, 0, None, &mut timer, &mut disc, &mut low, &mut is_cut);
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}

/// Definitional cut-vertex test: delete each vertex and check whether the
/// remainder stays connected.
pub fn cut_vertices_by_deletion(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 2 {
        return Ok(Vec::new());
    }
    let all = g.all_vertices();
    Ok((0..n)
        .filter(|&v| {
            let start = if v == 0 { 1 } else { 0 };
            let removed = 1u16 << v;
            g.reach(start, removed) != all & !removed
        })
        .collect())
}

/// Two-colors every component by BFS.
pub fn bipartite_test(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in 0..n {
                if !g.has_edge(v, u) {
                    continue;
                }
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected with every degree even.
pub fn eulerian_test(g: &Graph) -> bool {
    g.is_connected() && (0..g.n()).all(|v| g.degree(v).is_multiple_of(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceRegularMode {
    /// Every vertex has the same count of vertices at each distance.
    PaperDef,
    /// Intersection numbers `c_i, a_i, b_i` depend only on the distance.
    Strict,
}

pub fn distance_regular_test(g: &Graph, mode: DistanceRegularMode) -> Result<bool> {
    let dist = all_pairs_distances(g)?;
    Ok(match mode {
        DistanceRegularMode::PaperDef => distance_degree_regular(&dist),
        DistanceRegularMode::Strict => intersection_array_consistent(g, &dist),
    })
}

fn distance_profile(dist: &DistanceMatrix, u: usize) -> Vec<usize> {
    let mut counts = vec![0usize; dist.max() + 1];
    for &d in dist.row(u) {
        counts[d as usize] += 1;
    }
    counts
}

fn distance_degree_regular(dist: &DistanceMatrix) -> bool {
    let first = distance_profile(dist, 0);
    (1..dist.n()).all(|u| distance_profile(dist, u) == first)
}

fn intersection_array_consistent(g: &Graph, dist: &DistanceMatrix) -> bool {
    let n = g.n();
    let mut seen: Vec<Option<[usize; 3]>> = vec![None; dist.max() + 1];
    for u in 0..n {
        for v in 0..n {
            let i = dist.get(u, v);
            let mut triple = [0usize; 3];
            for w in (0..n).filter(|&w| g.has_edge(v, w)) {
                let dw = dist.get(u, w);
                // neighbors of v sit at distance i-1, i or i+1 from u
                triple[dw + 1 - i] += 1;
            }
            match seen[i] {
                None => seen[i] = Some(triple),
                Some(t) if t != triple => return false,
                _ => {}
            }
        }
    }
    true
}

/// Counts of simple cycles by length together with the fundamental cycle
/// basis of the BFS tree rooted at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCensus {
    /// Every length 3..=n is present as a key.
    pub counts: BTreeMap<usize, u64>,
    pub basis: Vec<Vec<(usize, usize)>>,
}

pub fn cycle_census(g: &Graph) -> CycleCensus {
    let n = g.n();
    let mut counts: BTreeMap<usize, u64> = (3..=n).map(|k| (k, 0)).collect();

    fn extend(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        used: u16,
        counts: &mut BTreeMap<usize, u64>,
    ) {
        let last = *path.last().unwrap();
        for u in (start + 1)..g.n() {
            if g.has_edge(last, u) && used >> u & 1 == 0 {
                path.push(u);
                extend(g, start, path, used | 1 << u, counts);
                path.pop();
            }
        }
        // close the cycle once, orienting it so the second vertex is the
        // smaller end neighbor of `start`
        if path.len() >= 3 && g.has_edge(last, start) && path[1] < last {
            *counts.entry(path.len()).or_insert(0) += 1;
        }
    }

    for s in 0..n {
        let mut path = vec![s];
        extend(g, s, &mut path, 1 << s, &mut counts);
    }

    CycleCensus {
        counts,
        basis: bfs_cycle_basis(g),
    }
}

fn bfs_cycle_basis(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for u in 0..n {
            if g.has_edge(v, u) && !seen[u] {
                seen[u] = true;
                parent[u] = v;
                depth[u] = depth[v] + 1;
                queue.push_back(u);
            }
        }
    }

    let is_tree_edge = |a: usize, b: usize| parent[a] == b || parent[b] == a;
    let mut basis = Vec::new();
    for (u, v) in g.edges() {
        if !seen[u] || is_tree_edge(u, v) {
            continue;
        }
        // walk both ends up to their lowest common ancestor
        let (mut a, mut b) = (u, v);
        let mut up_from_u = vec![u];
        let mut up_from_v = vec![v];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                up_from_u.push(a);
            } else {
                b = parent[b];
                up_from_v.push(b);
            }
        }
        up_from_v.pop();
        let walk: Vec<usize> = up_from_u
            .into_iter()
            .chain(up_from_v.into_iter().rev())
            .collect();
        let mut cycle: Vec<(usize, usize)> = walk.windows(2).map(|w| (w[0], w[1])).collect();
        cycle.push((v, u));
        basis.push(cycle);
    }
    basis
}

/// Number of shortest odd cycles (cycles whose length is the odd girth);
/// zero for bipartite graphs.
pub fn min_odd_cycle_count(counts: &BTreeMap<usize, u64>) -> u64 {
    counts
        .iter()
        .find(|(len, &c)| *len % 2 == 1 && c > 0)
        .map_or(0, |(_, &c)| c)
}

/// Every non-symmetry property of one connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    pub edges: usize,
    pub diameter: usize,
    pub clique_number: usize,
    pub bipartite: bool,
    pub eulerian: bool,
    pub distance_regular_paperdef: bool,
    pub distance_regular_strict: bool,
    pub cut_vertices: Vec<usize>,
    pub cut_vertex_count: usize,
    /// Non-increasing.
    pub degree_sequence: Vec<usize>,
    pub cycle_counts: BTreeMap<usize, u64>,
    pub cycle_basis: Vec<Vec<(usize, usize)>>,
    pub min_odd_cycle_count: u64,
}

impl StructureProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        let dist = all_pairs_distances(g)?;
        let cut_vertices = cut_vertices(g)?;
        let census = cycle_census(g);
        let mut degree_sequence = g.degrees();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self {
            edges: g.edge_count(),
            diameter: dist.max(),
            clique_number: clique_number(g),
            bipartite: bipartite_test(g),
            eulerian: eulerian_test(g),
            distance_regular_paperdef: distance_degree_regular(&dist),
            distance_regular_strict: intersection_array_consistent(g, &dist),
            cut_vertex_count: cut_vertices.len(),
            cut_vertices,
            degree_sequence,
            min_odd_cycle_count: min_odd_cycle_count(&census.counts),
            cycle_counts: census.counts,
            cycle_basis: census.basis,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()
    }

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn distances() {
        let k4 = all_pairs_distances(&Graph::complete(4).unwrap()).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(k4.get(u, v), usize::from(u != v));
            }
        }
        assert_eq!(
            all_pairs_distances(&Graph::path(4).unwrap())
                .unwrap()
                .get(0, 3),
            3
        );
        let c6 = all_pairs_distances(&Graph::cycle(6).unwrap()).unwrap();
        for u in 0..6 {
            assert_eq!(c6.get(u, (u + 3) % 6), 3);
        }
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            all_pairs_distances(&split),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::complete(8).unwrap()).unwrap(), 1);
        assert_eq!(diameter(&Graph::cycle(8).unwrap()).unwrap(), 4);
        assert_eq!(diameter(&Graph::star(7).unwrap()).unwrap(), 2);
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&Graph::complete(5).unwrap()), 5);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&paw()), 3);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn cut_vertex_examples() {
        assert!(cut_vertices(&Graph::cycle(4).unwrap()).unwrap().is_empty());
        assert_eq!(cut_vertices(&Graph::star(3).unwrap()).unwrap(), vec![0]);
        assert_eq!(cut_vertices(&Graph::path(4).unwrap()).unwrap(), vec![1, 2]);
        assert_eq!(
            cut_vertices_by_deletion(&Graph::path(4).unwrap()).unwrap(),
            vec![1, 2]
        );
        assert_eq!(cut_vertices(&paw()).unwrap(), vec![2]);
    }

    #[test]
    fn bipartite_examples() {
        assert!(bipartite_test(&Graph::cycle(6).unwrap()));
        assert!(!bipartite_test(&Graph::cycle(5).unwrap()));
        assert!(bipartite_test(&Graph::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn eulerian_examples() {
        assert!(eulerian_test(&Graph::cycle(4).unwrap()));
        assert!(!eulerian_test(&Graph::path(4).unwrap()));
        assert!(eulerian_test(&Graph::complete(5).unwrap()));
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!eulerian_test(&two_triangles));
    }

    #[test]
    fn distance_regular_examples() {
        use DistanceRegularMode::*;
        let c5 = Graph::cycle(5).unwrap();
        assert!(distance_regular_test(&c5, PaperDef).unwrap());
        assert!(distance_regular_test(&c5, Strict).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(!distance_regular_test(&p4, PaperDef).unwrap());
        assert!(!distance_regular_test(&p4, Strict).unwrap());
        assert!(distance_regular_test(&prism(), PaperDef).unwrap());
        assert!(!distance_regular_test(&prism(), Strict).unwrap());
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(distance_regular_test(&k33, Strict).unwrap());
    }

    #[test]
    fn cycle_census_examples() {
        let c5 = cycle_census(&Graph::cycle(5).unwrap());
        assert_eq!(c5.counts, BTreeMap::from([(3, 0), (4, 0), (5, 1)]));
        assert_eq!(c5.basis.len(), 1);
        assert_eq!(c5.basis[0].len(), 5);

        let k4 = cycle_census(&Graph::complete(4).unwrap());
        assert_eq!(k4.counts, BTreeMap::from([(3, 4), (4, 3)]));
        assert_eq!(k4.basis.len(), 3);

        let star = cycle_census(&Graph::star(3).unwrap());
        assert!(star.counts.values().all(|&c| c == 0));
        assert!(star.basis.is_empty());
    }

    #[test]
    fn basis_cycles_are_closed_walks_on_edges() {
        let g = prism();
        for cycle in cycle_census(&g).basis {
            for (i, &(a, b)) in cycle.iter().enumerate() {
                assert!(g.has_edge(a, b));
                assert_eq!(b, cycle[(i + 1) % cycle.len()].0);
            }
        }
    }

    #[test]
    fn min_odd_cycles() {
        let count = |g: Graph| min_odd_cycle_count(&cycle_census(&g).counts);
        assert_eq!(count(Graph::cycle(4).unwrap()), 0);
        assert_eq!(count(Graph::complete(4).unwrap()), 4);
        assert_eq!(count(Graph::cycle(5).unwrap()), 1);
    }

    #[test]
    fn profile_of_paw() {
        let p = StructureProfile::compute(&paw()).unwrap();
        assert_eq!(p.edges, 4);
        assert_eq!(p.diameter, 2);
        assert_eq!(p.degree_sequence, vec![3, 2, 2, 1]);
        assert_eq!(p.cut_vertex_count, 1);
        assert!(!p.bipartite && !p.eulerian);
        assert_eq!(p.min_odd_cycle_count, 1);
    }
}
