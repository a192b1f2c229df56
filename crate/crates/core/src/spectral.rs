//! Spectral measure of T, the unitary transform U and its inverse, and the
//! functional calculus g(-T).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre_on;
use crate::radial::{atom, atom_eigenfunctions, eigenfunction_w_on_points, SampledRadialFunction};
use crate::spaceform::{sphere_area, SpaceForm};
use crate::specialfn::{ln_gamma, ln_gamma_abs};

/// Default number of atoms beyond the ground state.
pub const DEFAULT_J_MAX: usize = 64;
/// Default number of Gauss–Legendre nodes for the continuous spectrum.
pub const DEFAULT_NODE_COUNT: usize = 256;
/// Default cutoff s_max = √(λ_max/|k|).
pub const DEFAULT_S_MAX: f64 = 40.0;

/// How much of the spectrum to keep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralTruncation {
    /// Highest atom index (k > 0).
    pub j_max: usize,
    /// Upper end of the continuous window (k < 0); `None` means 1600|k|.
    pub lambda_max: Option<f64>,
    /// Quadrature nodes on the continuous window (k < 0).
    pub node_count: usize,
}

impl Default for SpectralTruncation {
    fn default() -> Self {
        Self { j_max: DEFAULT_J_MAX, lambda_max: None, node_count: DEFAULT_NODE_COUNT }
    }
}

impl SpectralTruncation {
    pub fn atoms(j_max: usize) -> Self {
        Self { j_max, ..Self::default() }
    }

    pub fn density(lambda_max: f64, node_count: usize) -> Self {
        Self { lambda_max: Some(lambda_max), node_count, ..Self::default() }
    }

    /// λ_max actually used for a space form of curvature k < 0.
    pub fn resolved_lambda_max(&self, k: f64) -> f64 {
        self.lambda_max.unwrap_or(DEFAULT_S_MAX * DEFAULT_S_MAX * k.abs())
    }
}

/// The spectral measure: atoms (k > 0) or a density with a quadrature plan
/// (k < 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpectralMeasureRep {
    Atoms {
        lambda: Vec<f64>,
        weights: Vec<f64>,
        j_max: usize,
    },
    Density {
        /// Quadrature nodes in λ, ascending.
        nodes: Vec<f64>,
        /// dλ quadrature weights.
        quad_weights: Vec<f64>,
        /// Spectral density at the nodes.
        density: Vec<f64>,
        lambda_max: f64,
    },
}

impl SpectralMeasureRep {
    /// Spectral parameters at which U f is sampled.
    pub fn lambdas(&self) -> &[f64] {
        match self {
            Self::Atoms { lambda, .. } => lambda,
            Self::Density { nodes, .. } => nodes,
        }
    }

    /// Mass carried by each node: the atom weight or density·dλ.
    pub fn masses(&self) -> Vec<f64> {
        match self {
            Self::Atoms { weights, .. } => weights.clone(),
            Self::Density { quad_weights, density, .. } => {
                quad_weights.iter().zip(density).map(|(q, d)| q * d).collect()
            }
        }
    }

    pub fn len(&self) -> usize {
        self.lambdas().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// ∫ h dϑ for h sampled at the nodes.
    pub fn integrate(&self, h: &[f64]) -> f64 {
        self.masses().iter().zip(h).map(|(m, v)| m * v).sum()
    }
}

/// U f sampled at the nodes of a spectral measure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralCoefficients {
    pub measure: SpectralMeasureRep,
    pub values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Atom weight 1/‖w_j‖² = k^{n/2}(2j+n) j! (j+n-1)! / (2^{n-1}|S^{n-1}| Γ(j+n/2) Γ(j+n/2+1)).
pub fn atom_weight(m: &SpaceForm, j: usize) -> Result<f64> {
    let (n, jf) = (m.n(), j as f64);
    let ln = 0.5 * n * m.k().ln() + (2.0 * jf + n).ln() + ln_gamma_abs(jf + 1.0)?
        + ln_gamma_abs(jf + n)?
        - (n - 1.0) * 2f64.ln()
        - sphere_area(m.dim).ln()
        - ln_gamma_abs(jf + n / 2.0)?
        - ln_gamma_abs(jf + n / 2.0 + 1.0)?;
    Ok(ln.exp())
}

/// ∫_0^1 z^{n/2-1}(1-z)^{n/2} P_j^{(n/2-1,n/2)}(1-2z)² dz in closed form.
pub fn jacobi_norm_integral(n: usize, j: usize) -> Result<f64> {
    let (n, jf) = (n as f64, j as f64);
    Ok((ln_gamma_abs(jf + n / 2.0)? + ln_gamma_abs(jf + n / 2.0 + 1.0)?
        - (2.0 * jf + n).ln()
        - ln_gamma_abs(jf + 1.0)?
        - ln_gamma_abs(jf + n)?)
        .exp())
}

/// |Γ(n/2+is)Γ(is) / (Γ(n/2)Γ(2is))|², s = √(λ/|k|).
pub fn connection_modulus_sqr(n: usize, s: f64) -> Result<f64> {
    let h = n as f64 / 2.0;
    let is = Complex64::new(0.0, s);
    let l = ln_gamma(Complex64::new(h, s))?.re + ln_gamma(is)?.re
        - ln_gamma_abs(h)?
        - ln_gamma(2.0 * is)?.re;
    Ok((2.0 * l).exp())
}

/// Density of the continuous spectral measure (k < 0):
/// |K₀|²(-k)^{(n-1)/2} / (2^{n+1} π |S^{n-1}| √λ).
pub fn spectral_density(m: &SpaceForm, lambda: f64) -> Result<f64> {
    if m.is_compact() {
        return Err(Error::DomainError("spectral density needs k < 0".into()));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::DomainError(format!("λ = {lambda} must be > 0")));
    }
    let n = m.n();
    let s = (lambda / m.k().abs()).sqrt();
    Ok(connection_modulus_sqr(m.dim, s)? * m.k().abs().powf(0.5 * (n - 1.0))
        / (2f64.powf(n + 1.0) * PI * sphere_area(m.dim) * lambda.sqrt()))
}

/// Builds the truncated spectral measure.
pub fn spectral_measure(m: &SpaceForm, trunc: &SpectralTruncation) -> Result<SpectralMeasureRep> {
    if m.is_compact() {
        let lambda = (0..=trunc.j_max).map(|j| atom(m, j)).collect();
        let weights = (0..=trunc.j_max).map(|j| atom_weight(m, j)).collect::<Result<_>>()?;
        return Ok(SpectralMeasureRep::Atoms { lambda, weights, j_max: trunc.j_max });
    }
    let ak = m.k().abs();
    let lambda_max = trunc.resolved_lambda_max(m.k());
    if !(lambda_max > 0.0) || trunc.node_count == 0 {
        return Err(Error::InvalidParameter("empty spectral window".into()));
    }
    // λ = |k| s², dλ = 2|k| s ds
    let (s, ws) = gauss_legendre_on(0.0, (lambda_max / ak).sqrt(), trunc.node_count);
    let nodes: Vec<f64> = s.iter().map(|&s| ak * s * s).collect();
    let quad_weights = s.iter().zip(&ws).map(|(&s, &w)| 2.0 * ak * s * w).collect();
    let density = nodes.iter().map(|&l| spectral_density(m, l)).collect::<Result<_>>()?;
    Ok(SpectralMeasureRep::Density { nodes, quad_weights, density, lambda_max })
}

/// Eigenfunction table w(r_i, λ_q) as rows per node.
fn eigen_table(m: &SpaceForm, measure: &SpectralMeasureRep, rs: &[f64]) -> Result<Vec<Vec<f64>>> {
    match measure {
        SpectralMeasureRep::Atoms { j_max, .. } => {
            let mut table = vec![vec![0.0; rs.len()]; j_max + 1];
            for (i, &r) in rs.iter().enumerate() {
                for (j, w) in atom_eigenfunctions(m, *j_max, r)?.into_iter().enumerate() {
                    table[j][i] = w;
                }
            }
            Ok(table)
        }
        SpectralMeasureRep::Density { nodes, .. } => {
            nodes.iter().map(|&l| eigenfunction_w_on_points(m, l, rs)).collect()
        }
    }
}

fn check_measure(m: &SpaceForm, measure: &SpectralMeasureRep) -> Result<()> {
    let ok = matches!(
        (m.is_compact(), measure),
        (true, SpectralMeasureRep::Atoms { .. }) | (false, SpectralMeasureRep::Density { .. })
    );
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter("spectral measure does not match the curvature sign".into()))
    }
}

/// U f(λ) = ∫ f w(·, λ) dμ at every node of `measure`.
pub fn forward_transform(
    m: &SpaceForm,
    f: &SampledRadialFunction,
    measure: &SpectralMeasureRep,
) -> Result<SpectralCoefficients> {
    check_measure(m, measure)?;
    let table = eigen_table(m, measure, &f.grid.points)?;
    let fw: Vec<f64> = f.values.iter().zip(&f.grid.mu_weights).map(|(v, w)| v * w).collect();
    let values = table
        .iter()
        .map(|row| row.iter().zip(&fw).map(|(a, b)| a * b).sum())
        .collect();
    let mut warnings = Vec::new();
    let total = f.norm_sqr();
    let n = f.values.len();
    let tail_start = n - n / 10;
    let tail: f64 = (tail_start..n)
        .map(|i| f.values[i] * f.values[i] * f.grid.mu_weights[i])
        .sum();
    let short_window = m.is_compact() && f.grid.r_max < m.diam() * (1.0 - 1e-12);
    if total > 0.0 && (tail > 1e-10 * total || (short_window && f.values[n - 1] != 0.0)) {
        warnings.push(format!(
            "TruncationWarning: outer grid tail carries {:.3e} of the norm",
            tail / total
        ));
    }
    Ok(SpectralCoefficients { measure: measure.clone(), values, warnings })
}

/// U⁻¹h at many radii (r = 0 allowed).
pub fn inverse_transform_on_points(
    m: &SpaceForm,
    coeffs: &SpectralCoefficients,
    rs: &[f64],
) -> Result<Vec<f64>> {
    check_measure(m, &coeffs.measure)?;
    let table = eigen_table(m, &coeffs.measure, rs)?;
    let masses = coeffs.measure.masses();
    let mut out = vec![0.0; rs.len()];
    for ((row, &mass), &h) in table.iter().zip(&masses).zip(&coeffs.values) {
        for (o, w) in out.iter_mut().zip(row) {
            *o += mass * h * w;
        }
    }
    Ok(out)
}

/// U⁻¹h(r) = ∫ w(r, λ) h(λ) dϑ(λ).
pub fn inverse_transform(m: &SpaceForm, coeffs: &SpectralCoefficients, r: f64) -> Result<f64> {
    Ok(inverse_transform_on_points(m, coeffs, &[r])?[0])
}

/// g(-T) f, returned on f's grid.
pub fn functional_calculus(
    m: &SpaceForm,
    g: impl Fn(f64) -> f64,
    f: &SampledRadialFunction,
    measure: &SpectralMeasureRep,
) -> Result<SampledRadialFunction> {
    let mut coeffs = forward_transform(m, f, measure)?;
    for (v, &l) in coeffs.values.iter_mut().zip(measure.lambdas()) {
        *v *= g(l);
    }
    let values = inverse_transform_on_points(m, &coeffs, &f.grid.points)?;
    SampledRadialFunction::new(f.grid.clone(), values)
}
