use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_QAOA_VERTICES: usize = 16;

/// Number of cut edges for every assignment `z`, where bit `v` of `z` is the
/// side of vertex `v`.
pub fn cost_vector(g: &Graph) -> Vec<u32> {
    let edges = g.edges();
    (0..1usize << g.n())
        .map(|z| {
            edges
                .iter()
                .filter(|&&(u, v)| (z >> u ^ z >> v) & 1 == 1)
                .count() as u32
        })
        .collect()
}

/// Bit set over the `2^n` assignments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSet {
    words: Vec<u64>,
}

impl StateSet {
    fn with_len(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, z: usize) {
        self.words[z / 64] |= 1 << (z % 64);
    }

    #[inline]
    pub fn contains(&self, z: usize) -> bool {
        self.words
            .get(z / 64)
            .is_some_and(|w| w >> (z % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCutSummary {
    pub cmax: u32,
    pub optimal_count: u64,
    pub optimal: StateSet,
}

pub fn maxcut_bruteforce(g: &Graph) -> Result<MaxCutSummary> {
    if g.n() > MAX_QAOA_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "brute-force MaxCut supports n <= {MAX_QAOA_VERTICES}"
        )));
    }
    Ok(summarize(&cost_vector(g)))
}

pub(crate) fn summarize(costs: &[u32]) -> MaxCutSummary {
    let cmax = costs.iter().copied().max().unwrap_or(0);
    let mut optimal = StateSet::with_len(costs.len());
    for (z, &c) in costs.iter().enumerate() {
        if c == cmax {
            optimal.insert(z);
        }
    }
    MaxCutSummary {
        cmax,
        optimal_count: optimal.len() as u64,
        optimal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cost_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let costs = cost_vector(&c4);
        assert_eq!(costs[0], 0);
        assert_eq!(costs[0b0101], 4);
        assert_eq!(cost_vector(&Graph::complete(2).unwrap())[0b01], 1);
    }

    #[test]
    fn bruteforce_examples() {
        let c4 = maxcut_bruteforce(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((c4.cmax, c4.optimal_count), (4, 2));
        assert_eq!(c4.optimal.iter().collect::<Vec<_>>(), vec![0b0101, 0b1010]);

        let k4 = maxcut_bruteforce(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!((k4.cmax, k4.optimal_count), (4, 6));

        let k5 = maxcut_bruteforce(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!((k5.cmax, k5.optimal_count), (6, 20));
    }

    #[test]
    fn optimal_set_is_complement_closed() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let mc = maxcut_bruteforce(&g).unwrap();
        let costs = cost_vector(&g);
        assert_eq!(mc.optimal_count % 2, 0);
        for z in mc.optimal.iter() {
            assert_eq!(costs[z], mc.cmax);
            assert!(mc.optimal.contains(z ^ 0b11111));
        }
    }
}
