//! Automorphism groups by exhaustive permutation search.

use std::collections::{HashSet, VecDeque};

use crate::canon::refine_colors;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SYMMETRY_VERTICES: usize = 8;

type Perm = [u8; MAX_SYMMETRY_VERTICES];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSummary {
    pub group_size: u64,
    /// Image lists: `generator[v]` is the image of vertex `v`.
    pub generators: Vec<Vec<usize>>,
    /// Disjoint vertex classes, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    pub orbit_count: usize,
}

/// All automorphisms of `g` as image lists, in lexicographic order.
fn automorphisms(g: &Graph) -> Vec<Perm> {
    let n = g.n();
    let colors = refine_colors(g);
    let mut found = Vec::new();
    let mut image: Perm = [0; MAX_SYMMETRY_VERTICES];

    fn extend(
        g: &Graph,
        colors: &[u32],
        v: usize,
        used: u16,
        image: &mut Perm,
        found: &mut Vec<Perm>,
    ) {
        let n = g.n();
        if v == n {
            found.push(*image);
            return;
        }
        for w in 0..n {
            if used >> w & 1 == 1 || colors[w] != colors[v] {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u] as usize, w));
            if consistent {
                image[v] = w as u8;
                extend(g, colors, v + 1, used | 1 << w, image, found);
            }
        }
    }

    extend(g, &colors, 0, 0, &mut image, &mut found);
    debug_assert!(found
        .iter()
        .all(|p| p[..n].iter().all(|&x| (x as usize) < n)));
    found
}

fn compose(a: &Perm, b: &Perm, n: usize) -> Perm {
    let mut out = [0; MAX_SYMMETRY_VERTICES];
    for v in 0..n {
        out[v] = a[b[v] as usize];
    }
    out
}

fn identity(n: usize) -> Perm {
    let mut id = [0; MAX_SYMMETRY_VERTICES];
    for (v, slot) in id.iter_mut().enumerate().take(n) {
        *slot = v as u8;
    }
    id
}

/// Group generated by `gens`, as a set of image lists.
fn closure(gens: &[Perm], n: usize) -> HashSet<Perm> {
    let id = identity(n);
    let mut group = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x, n);
            if group.insert(y) {
                queue.push_back(y);
            }
        }
    }
    group
}

pub fn automorphism_group(g: &Graph) -> Result<AutomorphismSummary> {
    let n = g.n();
    if n > MAX_SYMMETRY_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "automorphism search supports n <= {MAX_SYMMETRY_VERTICES}, got {n}"
        )));
    }
    let autos = automorphisms(g);

    let mut generators: Vec<Perm> = Vec::new();
    let mut reached = closure(&generators, n);
    for a in &autos {
        if reached.len() == autos.len() {
            break;
        }
        if !reached.contains(a) {
            generators.push(*a);
            reached = closure(&generators, n);
        }
    }

    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if orbit_of[v] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = autos.iter().map(|a| a[v] as usize).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            orbit_of[m] = orbits.len();
        }
        orbits.push(members);
    }

    Ok(AutomorphismSummary {
        group_size: autos.len() as u64,
        generators: generators
            .iter()
            .map(|p| p[..n].iter().map(|&x| x as usize).collect())
            .collect(),
        orbit_count: orbits.len(),
        orbits,
    })
}

pub fn orbit_count(g: &Graph) -> Result<usize> {
    Ok(automorphism_group(g)?.orbit_count)
}

/// Size of the group generated by `generators` on `n` points.
pub fn generated_group_size(generators: &[Vec<usize>], n: usize) -> usize {
    let gens: Vec<Perm> = generators
        .iter()
        .map(|g| {
            let mut p = identity(n);
            for (v, &x) in g.iter().enumerate() {
                p[v] = x as u8;
            }
            p
        })
        .collect();
    closure(&gens, n).len()
}
