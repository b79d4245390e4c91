//! Exact statevector simulation of the depth-`p` QAOA circuit for MaxCut.
//!
//! The circuit starts from the uniform superposition and applies, for each
//! layer, the phase separator `exp(-i γ C)` followed by the transverse-field
//! mixer `exp(-i β Σ X_q)`. `C(z)` is the integer cut value, so the phase
//! angle has period `2π`; the mixer has period `π` up to a global phase.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::graph::Graph;
use crate::qaoa::maxcut::{cost_vector, summarize, MaxCutSummary, StateSet};

/// Phase angles `gammas` and mixing angles `betas`, one of each per layer.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleVector {
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
}

impl AngleVector {
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Self {
        assert_eq!(
            gammas.len(),
            betas.len(),
            "one gamma and one beta per layer"
        );
        Self { gammas, betas }
    }

    pub fn zeros(p: usize) -> Self {
        Self::new(vec![0.0; p], vec![0.0; p])
    }

    pub fn p(&self) -> usize {
        self.gammas.len()
    }

    /// Reduces every angle into `γ ∈ [0, 2π)`, `β ∈ [0, π)`.
    pub fn canonical(&self) -> Self {
        let wrap = |x: f64, period: f64| {
            let r = x.rem_euclid(period);
            if r >= period {
                0.0
            } else {
                r
            }
        };
        Self::new(
            self.gammas.iter().map(|&g| wrap(g, TAU)).collect(),
            self.betas.iter().map(|&b| wrap(b, PI)).collect(),
        )
    }

    /// Appends zero layers up to depth `p`; zero layers are the identity.
    pub fn padded(&self, p: usize) -> Self {
        let mut out = self.clone();
        out.gammas.resize(p.max(self.p()), 0.0);
        out.betas.resize(p.max(self.p()), 0.0);
        out
    }

    /// Flat parameter vector `[γ_1, β_1, γ_2, β_2, ...]`.
    pub fn to_flat(&self) -> Vec<f64> {
        self.gammas
            .iter()
            .zip(&self.betas)
            .flat_map(|(&g, &b)| [g, b])
            .collect()
    }

    pub fn from_flat(x: &[f64]) -> Self {
        Self::new(
            x.iter().step_by(2).copied().collect(),
            x.iter().skip(1).step_by(2).copied().collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    pub amplitudes: Vec<Complex64>,
}

impl Statevector {
    pub fn uniform(n: usize) -> Self {
        let dim = 1usize << n;
        let a = (dim as f64).sqrt().recip();
        Self {
            amplitudes: vec![Complex64::new(a, 0.0); dim],
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Precomputed MaxCut instance for repeated circuit evaluations.
#[derive(Clone, Debug)]
pub struct QaoaProblem {
    n: usize,
    edges: usize,
    costs: Vec<u32>,
    maxcut: MaxCutSummary,
}

impl QaoaProblem {
    pub fn new(g: &Graph) -> Self {
        let costs = cost_vector(g);
        let maxcut = summarize(&costs);
        Self {
            n: g.n(),
            edges: g.edge_count(),
            costs,
            maxcut,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn costs(&self) -> &[u32] {
        &self.costs
    }

    pub fn maxcut(&self) -> &MaxCutSummary {
        &self.maxcut
    }

    fn phase_layer(&self, amps: &mut [Complex64], gamma: f64) {
        let table: Vec<Complex64> = (0..=self.edges)
            .map(|c| Complex64::from_polar(1.0, -gamma * c as f64))
            .collect();
        for (a, &c) in amps.iter_mut().zip(&self.costs) {
            *a *= table[c as usize];
        }
    }

    fn mixing_layer(&self, amps: &mut [Complex64], beta: f64) {
        let (s, c) = beta.sin_cos();
        let mis = Complex64::new(0.0, -s);
        for q in 0..self.n {
            let bit = 1usize << q;
            for z in 0..amps.len() {
                if z & bit == 0 {
                    let (a0, a1) = (amps[z], amps[z | bit]);
                    amps[z] = a0 * c + a1 * mis;
                    amps[z | bit] = a0 * mis + a1 * c;
                }
            }
        }
    }

    pub fn evolve(&self, angles: &AngleVector) -> Statevector {
        let mut sv = Statevector::uniform(self.n);
        for (&g, &b) in angles.gammas.iter().zip(&angles.betas) {
            self.phase_layer(&mut sv.amplitudes, g);
            self.mixing_layer(&mut sv.amplitudes, b);
        }
        sv
    }

    /// `Σ_z C(z) |ψ_z|²`.
    pub fn expectation(&self, sv: &Statevector) -> f64 {
        sv.amplitudes
            .iter()
            .zip(&self.costs)
            .map(|(a, &c)| c as f64 * a.norm_sqr())
            .sum()
    }

    /// Probability mass on maximum cuts.
    pub fn prob_cmax(&self, sv: &Statevector) -> f64 {
        prob_in(&self.maxcut.optimal, sv)
    }

    /// `⟨C⟩` and its gradient with respect to the flat parameter vector
    /// `[γ_1, β_1, ...]`, by reverse-mode propagation through the circuit.
    pub fn expectation_and_gradient(&self, angles: &AngleVector) -> (f64, Vec<f64>) {
        let p = angles.p();
        let mut psi = self.evolve(angles).amplitudes;
        let mut lambda: Vec<Complex64> = psi
            .iter()
            .zip(&self.costs)
            .map(|(a, &c)| a * c as f64)
            .collect();
        let value: f64 = lambda
            .iter()
            .zip(&psi)
            .map(|(l, a)| (l.conj() * a).re)
            .sum();

        let mut grad = vec![0.0; 2 * p];
        for l in (0..p).rev() {
            // mixer: generator Σ_q X_q
            let mut overlap = Complex64::new(0.0, 0.0);
            for z in 0..psi.len() {
                let mut flipped = Complex64::new(0.0, 0.0);
                for q in 0..self.n {
                    flipped += psi[z ^ 1 << q];
                }
                overlap += lambda[z].conj() * flipped;
            }
            grad[2 * l + 1] = 2.0 * overlap.im;
            self.mixing_layer(&mut psi, -angles.betas[l]);
            self.mixing_layer(&mut lambda, -angles.betas[l]);

            // phase separator: generator C
            let overlap: Complex64 = lambda
                .iter()
                .zip(&psi)
                .zip(&self.costs)
                .map(|((lz, az), &c)| lz.conj() * az * c as f64)
                .sum();
            grad[2 * l] = 2.0 * overlap.im;
            self.phase_layer(&mut psi, -angles.gammas[l]);
            self.phase_layer(&mut lambda, -angles.gammas[l]);
        }
        (value, grad)
    }
}

pub fn prob_in(set: &StateSet, sv: &Statevector) -> f64 {
    set.iter().map(|z| sv.amplitudes[z].norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_state_metrics() {
        let c4 = QaoaProblem::new(&Graph::cycle(4).unwrap());
        let sv = c4.evolve(&AngleVector::zeros(0));
        assert!((c4.expectation(&sv) - 2.0).abs() < 1e-12);
        assert!((c4.prob_cmax(&sv) - 0.125).abs() < 1e-12);
        assert!(sv
            .probabilities()
            .iter()
            .all(|&p| (p - 1.0 / 16.0).abs() < 1e-15));
    }

    #[test]
    fn zero_angles_are_identity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let prob = QaoaProblem::new(&g);
        let e = prob.expectation(&prob.evolve(&AngleVector::zeros(3)));
        assert!((e - 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_edge_optimum() {
        let k2 = QaoaProblem::new(&Graph::complete(2).unwrap());
        let angles = AngleVector::new(vec![PI / 2.0], vec![PI / 8.0]);
        let sv = k2.evolve(&angles);
        assert!((k2.expectation(&sv) - 1.0).abs() < 1e-12);
        assert!((sv.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gradient_matches_central_differences() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let prob = QaoaProblem::new(&g);
        let angles = AngleVector::new(vec![0.3, 1.1, 2.0], vec![0.7, 0.2, 2.9]);
        let (value, grad) = prob.expectation_and_gradient(&angles);
        let x = angles.to_flat();
        let f = |x: &[f64]| prob.expectation(&prob.evolve(&AngleVector::from_flat(x)));
        assert!((value - f(&x)).abs() < 1e-12);
        let h = 1e-5;
        for i in 0..x.len() {
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[i] += h;
            xm[i] -= h;
            let fd = (f(&xp) - f(&xm)) / (2.0 * h);
            assert!(
                (fd - grad[i]).abs() <= 1e-6 * fd.abs().max(1.0),
                "param {i}: {fd} vs {}",
                grad[i]
            );
        }
    }

    #[test]
    fn canonical_angles() {
        let a = AngleVector::new(vec![-0.5, 7.0], vec![4.0, -0.1]).canonical();
        assert!((a.gammas[0] - (TAU - 0.5)).abs() < 1e-12);
        assert!((a.gammas[1] - (7.0 - TAU)).abs() < 1e-12);
        assert!((a.betas[0] - (4.0 - PI)).abs() < 1e-12);
        assert!((a.betas[1] - (PI - 0.1)).abs() < 1e-12);
        assert_eq!(AngleVector::from_flat(&a.to_flat()), a);
    }
}
