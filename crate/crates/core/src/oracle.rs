//! Finite-difference oracle: a second-order flux-form discretization of T in
//! self-adjoint form, its tridiagonal eigenproblem, resolvent solves and a
//! tensor-product resolvent for one extra factor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::radial::{coefficients, RadialOperator, SampledRadialFunction};
use crate::spaceform::{volume_density_unchecked, ProductConfig, RadialGrid, SpaceForm};

/// Fewest grid points accepted by [`discretize_t`].
pub const MIN_POINTS: usize = 200;

/// Truncation radius for k < 0, in units of 1/√|k|.
pub const DEFAULT_R_MAX: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    /// Grid spans (0, diam); the flux vanishes at both ends.
    DirichletAtDiam,
    /// Grid spans (0, r_max) with f(r_max) = 0.
    TruncatedAtRmax,
}

/// Tridiagonal discretization A of T. With D = diag(weights), D·A is
/// symmetric: its off-diagonal (i, i+1) entry is `offdiag[i]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteOperator {
    pub grid: RadialGrid,
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub weights: Vec<f64>,
    pub boundary: Boundary,
}

/// Staggered oracle grid on (0, diam) for k > 0 or (0, r_max) for k < 0.
pub fn oracle_grid(m: &SpaceForm, points: usize, r_max: Option<f64>) -> Result<RadialGrid> {
    if points < MIN_POINTS {
        return Err(Error::GridTooCoarse { points, required: MIN_POINTS });
    }
    let r_max = if m.is_compact() {
        m.diam()
    } else {
        r_max.unwrap_or(DEFAULT_R_MAX / m.kappa())
    };
    RadialGrid::staggered(m, r_max, points)
}

/// Flux-form discretization
/// (A f)_i = (m_{i+½}(f_{i+1}-f_i)/h_{i+½} - m_{i-½}(f_i-f_{i-1})/h_{i-½})/(m_i Δ_i) - V_i f_i
/// with cell faces midway between nodes, the first face at r = 0 and the last
/// at r_max.
pub fn discretize_t(m: &SpaceForm, grid: &RadialGrid) -> Result<DiscreteOperator> {
    let n = grid.len();
    if n < MIN_POINTS {
        return Err(Error::GridTooCoarse { points: n, required: MIN_POINTS });
    }
    let r = &grid.points;
    let face = |i: usize| -> f64 {
        if i == 0 {
            0.0
        } else if i == n {
            grid.r_max
        } else {
            0.5 * (r[i - 1] + r[i])
        }
    };
    let weights: Vec<f64> = (0..n)
        .map(|i| volume_density_unchecked(m, r[i]) * (face(i + 1) - face(i)))
        .collect();
    let offdiag: Vec<f64> = (0..n - 1)
        .map(|i| volume_density_unchecked(m, face(i + 1)) / (r[i + 1] - r[i]))
        .collect();
    let boundary = if m.is_compact() && (grid.r_max - m.diam()).abs() <= 1e-12 * m.diam() {
        Boundary::DirichletAtDiam
    } else {
        Boundary::TruncatedAtRmax
    };
    // f = 0 at the last face; vanishes identically when m(r_max) = 0
    let outer = match boundary {
        Boundary::DirichletAtDiam => 0.0,
        Boundary::TruncatedAtRmax => volume_density_unchecked(m, grid.r_max) / (grid.r_max - r[n - 1]),
    };
    let diag = (0..n)
        .map(|i| {
            let left = if i > 0 { offdiag[i - 1] } else { 0.0 };
            let right = if i + 1 < n { offdiag[i] } else { outer };
            let (_, v) = coefficients(m, RadialOperator::T, r[i])?;
            Ok(-(left + right) / weights[i] - v)
        })
        .collect::<Result<_>>()?;
    Ok(DiscreteOperator { grid: grid.clone(), diag, offdiag, weights, boundary })
}

impl DiscreteOperator {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// A f.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * f[i];
                if i > 0 {
                    v += self.offdiag[i - 1] * f[i - 1] / self.weights[i];
                }
                if i + 1 < n {
                    v += self.offdiag[i] * f[i + 1] / self.weights[i];
                }
                v
            })
            .collect()
    }

    /// Off-diagonal of the symmetric similarity transform D^{½} A D^{-½}.
    pub fn symmetric_offdiag(&self) -> Vec<f64> {
        self.offdiag
            .iter()
            .enumerate()
            .map(|(i, &e)| e / (self.weights[i] * self.weights[i + 1]).sqrt())
            .collect()
    }

    /// Number of eigenvalues of -A below x (Sturm count).
    fn count_below(&self, x: f64, e2: &[f64]) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.len() {
            let b = if i > 0 { e2[i - 1] / q } else { 0.0 };
            q = -self.diag[i] - x - b;
            if q == 0.0 {
                q = -f64::EPSILON * (self.diag[i].abs() + x.abs()).max(1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `count` smallest eigenvalues of -A, ascending.
    pub fn eigenvalues(&self, count: usize) -> Vec<f64> {
        let e: Vec<f64> = self.symmetric_offdiag();
        let e2: Vec<f64> = e.iter().map(|v| v * v).collect();
        let n = self.len();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..n {
            let rad = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
            lo = lo.min(-self.diag[i] - rad);
            hi = hi.max(-self.diag[i] + rad);
        }
        (0..count.min(n))
            .map(|j| {
                let (mut a, mut b) = (lo, hi);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if mid <= a || mid >= b {
                        break;
                    }
                    if self.count_below(mid, &e2) > j {
                        b = mid;
                    } else {
                        a = mid;
                    }
                }
                0.5 * (a + b)
            })
            .collect()
    }

    /// The `count` lowest eigenpairs of -A. Eigenvectors are normalized in
    /// the weighted norm Σ wᵢ vᵢ² = 1 and positive at the first node.
    pub fn eigenpairs(&self, count: usize) -> Result<Vec<(f64, Vec<f64>)>> {
        let e: Vec<f64> = self.symmetric_offdiag().iter().map(|v| -v).collect();
        let neg_diag: Vec<f64> = self.diag.iter().map(|d| -d).collect();
        let n = self.len();
        self.eigenvalues(count)
            .into_iter()
            .map(|lambda| {
                let shift = lambda + 1e-12 * lambda.abs().max(1.0);
                let d: Vec<f64> = neg_diag.iter().map(|v| v - shift).collect();
                let mut y = vec![1.0; n];
                for _ in 0..4 {
                    y = thomas_symmetric(&d, &e, &y)?;
                    let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
                    y.iter_mut().for_each(|v| *v /= norm);
                }
                let mut v: Vec<f64> = y.iter().zip(&self.weights).map(|(y, w)| y / w.sqrt()).collect();
                if v[0] < 0.0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                Ok((lambda, v))
            })
            .collect()
    }
}

/// Solves the symmetric tridiagonal system with diagonal d and off-diagonal e.
fn thomas_symmetric(d: &[f64], e: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    thomas(e, d, e, rhs)
}

/// Thomas elimination for sub-diagonal a, diagonal b, super-diagonal c.
fn thomas(a: &[f64], b: &[f64], c: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    let mut cp = vec![0.0; n];
    let mut dp = vec![0.0; n];
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut piv = b[0];
    for i in 0..n {
        if i > 0 {
            piv = b[i] - a[i - 1] * cp[i - 1];
        }
        if !piv.is_finite() {
            return Err(Error::SingularSystem(i));
        }
        if piv.abs() < tiny {
            piv = tiny.copysign(piv);
        }
        cp[i] = if i + 1 < n { c[i] / piv } else { 0.0 };
        dp[i] = (rhs[i] - if i > 0 { a[i - 1] * dp[i - 1] } else { 0.0 }) / piv;
    }
    for i in (0..n - 1).rev() {
        dp[i] -= cp[i] * dp[i + 1];
    }
    if dp.iter().any(|v| !v.is_finite()) {
        return Err(Error::SingularSystem(n));
    }
    Ok(dp)
}

/// Solves (μ - A) f = source.
pub fn resolvent_solve(
    op: &DiscreteOperator,
    mu: f64,
    source: &SampledRadialFunction,
) -> Result<SampledRadialFunction> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::InvalidParameter(format!("μ = {mu} must be > 0")));
    }
    if source.values.len() != op.len() {
        return Err(Error::InvalidParameter("source does not live on the operator grid".into()));
    }
    let n = op.len();
    let lower: Vec<f64> = (1..n).map(|i| -op.offdiag[i - 1] / op.weights[i]).collect();
    let upper: Vec<f64> = (0..n - 1).map(|i| -op.offdiag[i] / op.weights[i]).collect();
    let diag: Vec<f64> = op.diag.iter().map(|d| mu - d).collect();
    let values = thomas(&lower, &diag, &upper, &source.values)?;
    SampledRadialFunction::new(op.grid.clone(), values)
}

/// Discrete delta at the first node, scaled so that Σ wᵢ δᵢ = 1.
pub fn delta_source(op: &DiscreteOperator) -> SampledRadialFunction {
    let mut values = vec![0.0; op.len()];
    values[0] = 1.0 / op.weights[0];
    SampledRadialFunction { grid: op.grid.clone(), values }
}

/// Discrete Green's function of μ - A with the pole at r = 0.
pub fn discrete_green(op: &DiscreteOperator, mu: f64) -> Result<SampledRadialFunction> {
    resolvent_solve(op, mu, &delta_source(op))
}

/// Cubic Lagrange interpolation of grid values at r (linear near the ends).
pub fn interpolate(grid: &RadialGrid, values: &[f64], r: f64) -> Result<f64> {
    let p = &grid.points;
    let n = p.len();
    if n < 4 || !(r >= p[0] && r <= p[n - 1]) {
        return Err(Error::DomainError(format!(
            "r = {r} outside the grid [{}, {}]",
            p.first().copied().unwrap_or(f64::NAN),
            p.last().copied().unwrap_or(f64::NAN)
        )));
    }
    let i = p.partition_point(|&x| x <= r).clamp(2, n - 2) - 2;
    let xs = &p[i..i + 4];
    let ys = &values[i..i + 4];
    let mut acc = 0.0;
    for a in 0..4 {
        let mut l = 1.0;
        for b in 0..4 {
            if a != b {
                l *= (r - xs[b]) / (xs[a] - xs[b]);
            }
        }
        acc += l * ys[a];
    }
    Ok(acc)
}

/// Value at r = 0 of an even-in-r grid function from the first two
/// staggered nodes.
fn value_at_origin(values: &[f64]) -> f64 {
    (9.0 * values[0] - values[1]) / 8.0
}

/// ‖a - b‖ / ‖b‖ in L²(dμ) over grid points with r >= r_min.
pub fn relative_l2(grid: &RadialGrid, a: &[f64], b: &[f64], r_min: f64) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for (i, &r) in grid.points.iter().enumerate() {
        if r >= r_min {
            num += grid.mu_weights[i] * (a[i] - b[i]).powi(2);
            den += grid.mu_weights[i] * b[i] * b[i];
        }
    }
    (num / den).sqrt()
}

/// Oracle grid sizes and mode count for [`tensor_resolvent`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TensorGrids {
    pub base_points: usize,
    pub factor_points: usize,
    pub modes: usize,
    /// Truncation radius for k < 0 directions.
    pub r_max: Option<f64>,
}

impl Default for TensorGrids {
    fn default() -> Self {
        Self { base_points: 2000, factor_points: 2000, modes: 16, r_max: None }
    }
}

/// Product kernel K(r₀, r₁) of a base with at most one factor, by expanding
/// the factor direction in the discrete eigenbasis of -T₁ and solving the
/// delta-source problem (m² + λ₁ - T₀) g = δ per mode.
pub fn tensor_resolvent(
    config: &ProductConfig,
    grids: &TensorGrids,
    r0: f64,
    r_bar: &[f64],
) -> Result<f64> {
    config.validate()?;
    if config.factors.len() > 1 {
        return Err(Error::InvalidParameter("tensor oracle supports at most one factor".into()));
    }
    if r_bar.len() != config.factors.len() {
        return Err(Error::InvalidParameter("one radius per factor required".into()));
    }
    let g0 = oracle_grid(&config.base, grids.base_points, grids.r_max)?;
    let op0 = discretize_t(&config.base, &g0)?;
    let m2 = config.mass * config.mass;
    let Some(factor) = config.factors.first() else {
        let g = discrete_green(&op0, m2)?;
        return interpolate(&g0, &g.values, r0);
    };
    let g1 = oracle_grid(factor, grids.factor_points, grids.r_max)?;
    let op1 = discretize_t(factor, &g1)?;
    let mut sum = 0.0;
    for (lambda, v) in op1.eigenpairs(grids.modes)? {
        let w0 = value_at_origin(&v);
        let w1 = if r_bar[0] < g1.points[0] {
            w0
        } else {
            interpolate(&g1, &v, r_bar[0])?
        };
        let g = discrete_green(&op0, m2 + lambda)?;
        sum += w0 * w1 * interpolate(&g0, &g.values, r0)?;
    }
    Ok(sum)
}
