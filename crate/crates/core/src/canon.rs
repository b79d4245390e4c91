//! Canonical labeling and exhaustive enumeration of connected graphs up to
//! isomorphism.
//!
//! The canonical form is the lexicographically smallest upper-triangle bit
//! string `x(0,1) x(0,2) x(1,2) x(0,3) ...` over all relabelings that keep
//! vertices sorted by their refined degree class. Restricting to those
//! relabelings is isomorphism-invariant, so equal forms mean isomorphic
//! graphs and vice versa.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Packed upper-triangle bit string, first character in the most
/// significant used bit. Ordering matches lexicographic string order for
/// graphs of equal size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bit_len(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// 64-bit digest used for seeding.
    pub fn digest(&self) -> u64 {
        let folded = (self.bits as u64) ^ ((self.bits >> 64) as u64).rotate_left(17);
        folded ^ (self.n as u64) << 56
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.bit_len();
        for k in 0..len {
            let bit = self.bits >> (len - 1 - k) & 1;
            f.write_str(if bit == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Equitable refinement of the degree partition. Returns a color per vertex;
/// colors are ranks of isomorphism-invariant signatures, so two vertices
/// related by an automorphism always share a color.
pub(crate) fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colors: Vec<u32> = g.degrees().into_iter().map(|d| d as u32).collect();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&u| g.has_edge(v, u))
                    .map(|u| colors[u])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u32)
            .collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    // cell_of_position[j] = the color class that must fill label j
    cell_of_position: Vec<u32>,
    colors: Vec<u32>,
    order: Vec<usize>,
    used: u16,
    best: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, j: usize) -> u32 {
        let vj = self.order[j];
        let mut c = 0u32;
        for i in 0..j {
            c = c << 1 | self.g.has_edge(self.order[i], vj) as u32;
        }
        c
    }

    fn descend(&mut self, j: usize, improved: bool) {
        if j == self.n {
            if improved {
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let cell = self.cell_of_position[j];
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != cell {
                continue;
            }
            self.order[j] = v;
            let col = self.column(j);
            let mut now_improved = improved;
            if col > self.best[j] {
                continue;
            }
            if col < self.best[j] {
                self.best[j] = col;
                for b in &mut self.best[j + 1..] {
                    *b = u32::MAX;
                }
                now_improved = true;
            }
            self.used |= 1 << v;
            self.descend(j + 1, now_improved);
            self.used &= !(1 << v);
        }
    }
}

/// Canonical form together with the relabeling that realizes it:
/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let colors = refine_colors(g);
    let mut cell_of_position = colors.clone();
    cell_of_position.sort_unstable();

    let mut search = Search {
        g,
        n,
        cell_of_position,
        colors,
        order: vec![0; n],
        used: 0,
        best: vec![u32::MAX; n],
        best_order: Vec::new(),
    };
    search.descend(0, false);

    let mut bits = 0u128;
    for j in 1..n {
        bits = bits << j | search.best[j] as u128;
    }
    let mut perm = vec![0usize; n];
    for (label, &v) in search.best_order.iter().enumerate() {
        perm[v] = label;
    }
    (CanonicalForm { n: n as u8, bits }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// `g` relabeled into its canonical labeling (id dropped).
pub fn canonical_graph(g: &Graph) -> (CanonicalForm, Graph) {
    let (form, perm) = canonical_labeling(g);
    let mut out = Graph::empty(g.n()).expect("size already validated");
    for (u, v) in g.edges() {
        out.add_edge(perm[u], perm[v]).expect("perm is a bijection");
    }
    (form, out)
}

/// One canonical representative per isomorphism class of all simple graphs
/// on `n` vertices (connected or not), sorted by canonical form.
fn all_graphs(n: usize) -> Vec<(CanonicalForm, Graph)> {
    let mut level: Vec<(CanonicalForm, Graph)> = vec![canonical_graph(&Graph::empty(1).unwrap())];
    for k in 2..=n {
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for (_, base) in &level {
            for subset in 0u16..(1 << (k - 1)) {
                let mut masks: Vec<u16> = base.adjacency().to_vec();
                for (v, m) in masks.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *m |= 1 << (k - 1);
                    }
                }
                masks.push(subset);
                let extended = Graph::from_adjacency(&masks).expect("extension is simple");
                let (form, canon) = canonical_graph(&extended);
                seen.entry(form).or_insert(canon);
            }
        }
        level = seen.into_iter().collect();
    }
    level
}

/// Connected graphs on `n` vertices up to isomorphism, in canonical-form
/// order, with 1-based ids assigned in that order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(3..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "enumeration supports 3 <= n <= 8, got {n}"
        )));
    }
    Ok(all_graphs(n)
        .into_iter()
        .map(|(_, g)| g)
        .filter(Graph::is_connected)
        .enumerate()
        .map(|(i, g)| g.with_id(i as u32 + 1))
        .collect())
}
