//! Chebyshev-Gauss quadrature on finite intervals.
//!
//! The `n`-point rule has nodes `t_i = cos((2i - 1) pi / (2n))` and uniform
//! weights `pi / n`. It integrates `g(t) / sqrt(1 - t^2)` exactly for
//! polynomial `g` up to degree `2n - 1`. To integrate a plain function `f`
//! over `[a, b]`, the interval is mapped to `[-1, 1]` and the weight is
//! folded into the summand:
//!
//! ```text
//! int_a^b f(z) dz  ~=  (b - a)/2 * sum_i w_i * f(x(t_i)) * sqrt(1 - t_i^2)
//! ```
//!
//! which is the form the piecewise outage integrals take after their linear
//! change of variable.

use crate::Error;
use std::f64::consts::PI;

/// An `n`-point Chebyshev-Gauss rule (nodes in `(-1, 1)`, weights `pi / n`).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds the `n`-point rule. Nodes come out strictly decreasing.
    pub fn chebyshev_gauss(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroQuadratureOrder);
        }
        let weight = PI / n as f64;
        let nodes: Vec<f64> = (1..=n)
            .map(|i| ((2 * i - 1) as f64 * PI / (2.0 * n as f64)).cos())
            .collect();
        let weights = vec![weight; n];
        Ok(Self { nodes, weights })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Approximates `int_a^b f(z) dz` with the square-root weight folded in.
    ///
    /// Requires `a <= b`; any non-finite integrand value aborts the
    /// integration with an error.
    pub fn integrate<F>(&self, a: f64, b: f64, f: F) -> Result<f64, Error>
    where
        F: Fn(f64) -> f64,
    {
        if a.is_nan() || b.is_nan() || a > b {
            return Err(Error::InvertedInterval { a, b });
        }
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (&t, &w) in self.nodes.iter().zip(&self.weights) {
            let z = half * t + mid;
            let fz = f(z);
            if !fz.is_finite() {
                return Err(Error::NonFiniteIntegrand { at: z });
            }
            acc += w * fz * (1.0 - t * t).sqrt();
        }
        Ok(half * acc)
    }
}
