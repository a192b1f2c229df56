//! Radial Green's function of λ₀ - T on the base factor, its normalization
//! and the spectral synthesis of the product-space kernel.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::radial::{atom_eigenfunctions, atom_index, eigenfunction_w_on_points};
use crate::spaceform::{sphere_area, ProductConfig, SpaceForm};
use crate::specialfn::{
    hyp2f1_derivatives_scaled, hyp2f1_scaled, hyp2f1_sweep, ln_gamma, ln_gamma_abs,
    HypergeometricTriple, Scaled,
};
use crate::spectral::{spectral_measure, SpectralMeasureRep, SpectralTruncation};

type C = Complex64;

/// Relative shift applied to λ₀ by the opt-in resonance perturbation.
pub const RESONANCE_SHIFT: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalizationMethod {
    ClosedForm,
    AsymptoticMatch,
}

/// The constant C(n₀, k₀, λ₀) multiplying the hypergeometric profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreenNormalization {
    #[serde(rename = "C")]
    pub c: f64,
    /// ln|C|, kept because C under- or overflows for large λ₀.
    pub ln_abs_c: f64,
    pub method: NormalizationMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GreenOptions {
    /// Force a normalization method instead of the per-sign default.
    pub method: Option<NormalizationMethod>,
    /// Shift λ₀ by [`RESONANCE_SHIFT`] (relative) instead of failing at a
    /// resonance.
    pub perturb: bool,
}

/// g(·, λ₀) on a base space form, solving (λ₀ - T)g = 0 away from the pole
/// with the flat-space singularity at r = 0.
#[derive(Debug, Clone)]
pub struct RadialGreen {
    pub base: SpaceForm,
    pub lambda0: f64,
    pub normalization: GreenNormalization,
    pub warnings: Vec<String>,
    triple: HypergeometricTriple,
    /// Exponent e in the prefactor (1-z)^e (k₀ < 0 only).
    exponent: f64,
    sign_c: f64,
}

fn resonance(base: &SpaceForm, lambda0: f64) -> Option<usize> {
    if !base.is_compact() || lambda0 > 0.0 {
        return None;
    }
    let t = (-lambda0 / base.k()).sqrt() - base.n() / 2.0;
    let j = t.round();
    if j >= 0.0 && (t - j).abs() < 1e-9 {
        Some(j as usize)
    } else {
        None
    }
}

impl RadialGreen {
    pub fn new(base: &SpaceForm, lambda0: f64) -> Result<Self> {
        Self::with_options(base, lambda0, GreenOptions::default())
    }

    pub fn with_options(base: &SpaceForm, lambda0: f64, opts: GreenOptions) -> Result<Self> {
        if !lambda0.is_finite() {
            return Err(Error::NonFinite(format!("λ₀ = {lambda0}")));
        }
        let mut lambda0 = lambda0;
        let mut warnings = Vec::new();
        if let Some(j) = resonance(base, lambda0) {
            if !opts.perturb {
                return Err(Error::ResonanceError(format!(
                    "√(-λ₀/k₀) - n₀/2 = {j} for λ₀ = {lambda0}"
                )));
            }
            let shifted = lambda0 * (1.0 + RESONANCE_SHIFT);
            warnings.push(format!("resonant λ₀ = {lambda0} perturbed to {shifted}"));
            lambda0 = shifted;
        }
        let (n, k) = (base.n(), base.k());
        let h = n / 2.0;
        let (triple, exponent) = if base.is_compact() {
            // a, b = n/2 ± √(-λ₀/k₀)
            let root = C::new(-lambda0 / k, 0.0).sqrt();
            (HypergeometricTriple::new(h + root, h - root, C::new(h + 1.0, 0.0))?, 0.5)
        } else {
            if lambda0 <= 0.0 {
                return Err(Error::DomainError(format!(
                    "λ₀ = {lambda0} must be > 0 for k₀ < 0"
                )));
            }
            let sigma = (lambda0 / k.abs()).sqrt();
            (HypergeometricTriple::real(h + sigma, sigma, 1.0 + 2.0 * sigma)?, 0.5 - h - sigma)
        };
        let method = opts.method.unwrap_or(if base.is_compact() {
            NormalizationMethod::ClosedForm
        } else {
            NormalizationMethod::AsymptoticMatch
        });
        let mut g = Self {
            base: *base,
            lambda0,
            normalization: GreenNormalization { c: 1.0, ln_abs_c: 0.0, method },
            warnings,
            triple,
            exponent,
            sign_c: 1.0,
        };
        let (ln_abs, sign) = match method {
            NormalizationMethod::ClosedForm => g.closed_form_constant()?,
            NormalizationMethod::AsymptoticMatch => g.matched_constant()?,
        };
        g.sign_c = sign;
        g.normalization = GreenNormalization { c: sign * ln_abs.exp(), ln_abs_c: ln_abs, method };
        Ok(g)
    }

    /// ln|C| and sign of C from the closed form.
    fn closed_form_constant(&self) -> Result<(f64, f64)> {
        let (n, k) = (self.base.n(), self.base.k());
        let h = n / 2.0;
        let t = &self.triple;
        // Γ(a)Γ(b)/Γ(c), with c = n/2+1 for k > 0 and c = 1+2σ for k < 0
        let num = ln_gamma(t.a)? + ln_gamma(t.b)? - ln_gamma(t.c)?;
        let ln = num.re + (h - 1.0) * (0.25 * k.abs()).ln()
            - (2.0 * sphere_area(self.base.dim)).ln()
            - ln_gamma_abs(h)?;
        let sign = C::new(0.0, num.im).exp().re.signum();
        Ok((ln, sign))
    }

    /// C fixed by matching the r → 0 asymptotics of the unnormalized profile.
    fn matched_constant(&self) -> Result<(f64, f64)> {
        let n0 = self.base.dim;
        let unnorm = |r: f64| -> Result<Scaled> { self.profile(r) };
        let area = sphere_area(n0);
        if n0 == 2 {
            let (r1, r2) = (1e-4, 1e-5);
            let (g1, g2) = (unnorm(r1)?, unnorm(r2)?);
            let s = g1.log_scale.max(g2.log_scale);
            let d = g2.mantissa.re * (g2.log_scale - s).exp() - g1.mantissa.re * (g1.log_scale - s).exp();
            let a = d / (r1 / r2).ln();
            // C·A = 1/(2π)
            return Ok((-(2.0 * std::f64::consts::PI * a.abs()).ln() - s, a.signum()));
        }
        let p = n0 as f64 - 2.0;
        let rb = if n0 % 2 == 1 { 1e-3 } else { 1e-2 };
        let pts: Vec<f64> = (0..5).map(|i| rb * 0.5f64.powi(i)).collect();
        let vals: Vec<Scaled> = pts.iter().map(|&r| unnorm(r)).collect::<Result<_>>()?;
        let s = vals.iter().map(|v| v.log_scale).fold(f64::NEG_INFINITY, f64::max);
        let ys: Vec<f64> = pts
            .iter()
            .zip(&vals)
            .map(|(&r, v)| r.powf(p) * v.mantissa.re * (v.log_scale - s).exp())
            .collect();
        // r^{n-2} g is a series in r for odd n; even n adds r^{n-2} ln r terms.
        let a0 = if n0 % 2 == 1 {
            neville_at_zero(&pts, &ys)
        } else {
            log_series_at_zero(&pts, &ys, n0 as i32 - 2)
        };
        Ok((-(p * area * a0.abs()).ln() - s, a0.signum()))
    }

    /// Unnormalized profile (C = 1) at r.
    fn profile(&self, r: f64) -> Result<Scaled> {
        let s = self.base.kappa();
        if self.base.is_compact() {
            let c = (0.5 * s * r).cos();
            let f = hyp2f1_scaled(&self.triple, c * c)?;
            Ok(Scaled { mantissa: f.mantissa * c, log_scale: f.log_scale })
        } else {
            let ch = (0.5 * s * r).cosh();
            let f = hyp2f1_scaled(&self.triple, 1.0 / (ch * ch))?;
            Ok(Scaled { mantissa: f.mantissa, log_scale: f.log_scale + 2.0 * self.exponent * ch.ln() })
        }
    }

    fn finish(&self, v: Scaled) -> f64 {
        self.sign_c * v.mantissa.re * (v.log_scale + self.normalization.ln_abs_c).exp()
    }

    /// g(r, λ₀).
    pub fn value(&self, r: f64) -> Result<f64> {
        self.base.check_radius(r)?;
        Ok(self.finish(self.profile(r)?))
    }

    /// g at many radii in one ODE sweep.
    pub fn values(&self, rs: &[f64]) -> Result<Vec<f64>> {
        for &r in rs {
            self.base.check_radius(r)?;
        }
        let s = self.base.kappa();
        let xs: Vec<f64> = rs
            .iter()
            .map(|&r| {
                if self.base.is_compact() {
                    (0.5 * s * r).cos().powi(2)
                } else {
                    1.0 / (0.5 * s * r).cosh().powi(2)
                }
            })
            .collect();
        let fs = hyp2f1_sweep(&self.triple, &xs)?;
        Ok(rs
            .iter()
            .zip(fs)
            .map(|(&r, f)| {
                let pre = if self.base.is_compact() {
                    Scaled { mantissa: f.mantissa * (0.5 * s * r).cos(), log_scale: f.log_scale }
                } else {
                    let ch = (0.5 * s * r).cosh();
                    Scaled { mantissa: f.mantissa, log_scale: f.log_scale + 2.0 * self.exponent * ch.ln() }
                };
                self.finish(pre)
            })
            .collect())
    }

    /// (g, g', g'') at r.
    pub fn jet(&self, r: f64) -> Result<[f64; 3]> {
        self.base.check_radius(r)?;
        let s = self.base.kappa();
        let x = Jet::variable(r) * (0.5 * s);
        let (pre, arg) = if self.base.is_compact() {
            let c = x.cos();
            (c, c * c)
        } else {
            let ch = x.cosh();
            (ch.powf(2.0 * self.exponent), ch.powf(-2.0))
        };
        let (d, scale) = hyp2f1_derivatives_scaled(&self.triple, arg.v.re)?;
        let g = (pre * arg.compose(d)).scale(C::new(
            self.sign_c * (scale + self.normalization.ln_abs_c).exp(),
            0.0,
        ));
        Ok(g.re())
    }

    /// Leading r → 0 behaviour: 1/((n₀-2)|S| r^{n₀-2}) or ln(1/r)/(2π).
    pub fn asymptote(&self, r: f64) -> f64 {
        flat_asymptote(self.base.dim, r)
    }
}

/// Flat-space singularity of the Green's function in dimension n.
pub fn flat_asymptote(n: usize, r: f64) -> f64 {
    if n == 2 {
        (1.0 / r).ln() / (2.0 * std::f64::consts::PI)
    } else {
        1.0 / ((n as f64 - 2.0) * sphere_area(n) * r.powi(n as i32 - 2))
    }
}

fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = xs.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]);
        }
    }
    p[0]
}

/// Constant term of a fit by {1, r², .., r^{2q}} ∪ {r^p ln r, r^{p+2} ln r, ..}
/// with as many basis functions as points.
fn log_series_at_zero(xs: &[f64], ys: &[f64], p: i32) -> f64 {
    let n = xs.len();
    let basis = |r: f64| -> Vec<f64> {
        let mut b = Vec::with_capacity(n);
        let (mut even, mut log) = (0, p);
        while b.len() < n {
            if even <= log || even < p {
                b.push(r.powi(even));
                even += 2;
            } else {
                b.push(r.powi(log) * r.ln());
                log += 2;
            }
        }
        b
    };
    let mut a: Vec<Vec<f64>> = xs.iter().map(|&r| basis(r)).collect();
    let mut y = ys.to_vec();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        a.swap(col, piv);
        y.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for c in col..n {
                a[row][c] -= f * a[col][c];
            }
            y[row] -= f * y[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (y[row] - s) / a[row][row];
    }
    x[0]
}

/// C(n₀, k₀, λ₀) with the default method for the sign of k₀.
pub fn green_constant(base: &SpaceForm, lambda0: f64) -> Result<GreenNormalization> {
    Ok(RadialGreen::new(base, lambda0)?.normalization)
}

/// C(n₀, k₀, λ₀) by an explicit method.
pub fn green_constant_with(
    base: &SpaceForm,
    lambda0: f64,
    method: NormalizationMethod,
) -> Result<GreenNormalization> {
    let opts = GreenOptions { method: Some(method), perturb: false };
    Ok(RadialGreen::with_options(base, lambda0, opts)?.normalization)
}

/// g(r₀, λ₀).
pub fn radial_green(base: &SpaceForm, lambda0: f64, r0: f64) -> Result<f64> {
    RadialGreen::new(base, lambda0)?.value(r0)
}

/// w(0, λ) = Γ(j+n/2)/(j! Γ(n/2)) for an atom, 1 on the continuous spectrum.
pub fn eigenfunction_at_origin(m: &SpaceForm, lambda: f64) -> Result<f64> {
    if !m.is_compact() {
        return Ok(1.0);
    }
    let j = atom_index(m, lambda)? as f64;
    let h = m.n() / 2.0;
    Ok((ln_gamma_abs(j + h)? - ln_gamma_abs(j + 1.0)? - ln_gamma_abs(h)?).exp())
}

/// w̄(0, λ̄) = ∏_a w_a(0, λ_a) over the factors.
pub fn synthesis_weight(config: &ProductConfig, lambda_bar: &[f64]) -> Result<f64> {
    if lambda_bar.len() != config.factors.len() {
        return Err(Error::InvalidParameter(format!(
            "{} spectral values for {} factors",
            lambda_bar.len(),
            config.factors.len()
        )));
    }
    config
        .factors
        .iter()
        .zip(lambda_bar)
        .try_fold(1.0, |acc, (m, &l)| Ok(acc * eigenfunction_at_origin(m, l)?))
}

/// Evaluated product kernel with its error estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreenKernelResult {
    pub value: f64,
    /// Relative change between the last two truncation levels (adaptive) or a
    /// relative tail bound (fixed truncation).
    pub truncation_error: f64,
    /// Atoms or quadrature nodes used per factor.
    pub terms_used: Vec<usize>,
    /// Number of Green's function evaluations in the final level.
    pub green_evaluations: usize,
}

/// Truncation used for a factor at adaptive level L.
pub fn level_truncation(m: &SpaceForm, level: u32) -> SpectralTruncation {
    let scale = 1usize << level;
    if m.is_compact() {
        SpectralTruncation::atoms(16 * scale - 1)
    } else {
        let s_max = 8.0 * scale as f64;
        SpectralTruncation::density(m.k().abs() * s_max * s_max, 32 * scale)
    }
}

/// Highest adaptive level tried before giving up.
pub const MAX_LEVEL: u32 = 6;

struct Term {
    lambda: f64,
    coeff: f64,
}

/// Σ_λ̄ w̄(0,λ̄) w̄(r̄,λ̄) ϑ̄(λ̄) g(r₀, m² + |λ̄|) over a fixed truncation,
/// with the Green factor skipped once the remaining absolute mass times the
/// (decreasing) Green's function cannot matter.
fn kernel_sum(
    config: &ProductConfig,
    r0: f64,
    r_bar: &[f64],
    measures: &[SpectralMeasureRep],
    cutoff: f64,
) -> Result<(f64, usize)> {
    let mut terms = vec![Term { lambda: 0.0, coeff: 1.0 }];
    for ((m, &r), rep) in config.factors.iter().zip(r_bar).zip(measures) {
        let lambdas = rep.lambdas();
        let masses = rep.masses();
        let w_r: Vec<f64> = if m.is_compact() {
            let SpectralMeasureRep::Atoms { j_max, .. } = rep else { unreachable!() };
            atom_eigenfunctions(m, *j_max, r)?
        } else {
            lambdas
                .iter()
                .map(|&l| Ok(eigenfunction_w_on_points(m, l, &[r])?[0]))
                .collect::<Result<_>>()?
        };
        let w0: Vec<f64> = lambdas
            .iter()
            .map(|&l| eigenfunction_at_origin(m, l))
            .collect::<Result<_>>()?;
        let mut next = Vec::with_capacity(terms.len() * lambdas.len());
        for t in &terms {
            for q in 0..lambdas.len() {
                next.push(Term {
                    lambda: t.lambda + lambdas[q],
                    coeff: t.coeff * w0[q] * w_r[q] * masses[q],
                });
            }
        }
        terms = next;
    }
    terms.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    let mut suffix = vec![0.0; terms.len() + 1];
    for i in (0..terms.len()).rev() {
        suffix[i] = suffix[i + 1] + terms[i].coeff.abs();
    }
    let m2 = config.mass * config.mass;
    let mut sum = 0.0;
    let mut evals = 0;
    for (i, t) in terms.iter().enumerate() {
        let g = RadialGreen::new(&config.base, m2 + t.lambda)
            .and_then(|g| g.value(r0))
            .map_err(|e| match e {
                Error::ResonanceError(msg) => {
                    Error::ResonanceError(format!("{msg} at |λ̄| = {}", t.lambda))
                }
                other => other,
            })?;
        evals += 1;
        sum += t.coeff * g;
        if g.abs() * suffix[i + 1] <= cutoff * sum.abs() {
            break;
        }
    }
    Ok((sum, evals))
}

fn check_kernel_args(config: &ProductConfig, r0: f64, r_bar: &[f64]) -> Result<()> {
    config.validate()?;
    config.base.check_radius(r0)?;
    if r_bar.len() != config.factors.len() {
        return Err(Error::InvalidParameter(format!(
            "{} radii for {} factors",
            r_bar.len(),
            config.factors.len()
        )));
    }
    for (m, &r) in config.factors.iter().zip(r_bar) {
        if !(r == 0.0 || m.check_radius(r).is_ok()) {
            return Err(Error::DomainError(format!("factor radius {r} out of range")));
        }
    }
    Ok(())
}

/// Product kernel at a fixed truncation per factor. The error estimate is a
/// tail bound from |w_j(r)| <= w_j(0) and the monotone decay of g in λ₀
/// (first order in the number of truncated factors).
pub fn product_kernel_fixed(
    config: &ProductConfig,
    r0: f64,
    r_bar: &[f64],
    truncations: &[SpectralTruncation],
) -> Result<GreenKernelResult> {
    check_kernel_args(config, r0, r_bar)?;
    if truncations.len() != config.factors.len() {
        return Err(Error::InvalidParameter("one truncation per factor required".into()));
    }
    let measures: Vec<SpectralMeasureRep> = config
        .factors
        .iter()
        .zip(truncations)
        .map(|(m, t)| spectral_measure(m, t))
        .collect::<Result<_>>()?;
    let (value, evals) = kernel_sum(config, r0, r_bar, &measures, 1e-18)?;
    let m2 = config.mass * config.mass;
    // Lowest |λ̄| and absolute mass of the retained part of the other factors.
    let mut tail = 0.0;
    for (a, (m, t)) in config.factors.iter().zip(truncations).enumerate() {
        let others: f64 = measures
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(b, rep)| {
                let fm = &config.factors[b];
                rep.lambdas()
                    .iter()
                    .zip(rep.masses())
                    .map(|(&l, w)| Ok(eigenfunction_at_origin(fm, l)?.powi(2) * w.abs()))
                    .sum::<Result<f64>>()
            })
            .product::<Result<f64>>()?;
        let base_shift: f64 = measures
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(_, rep)| rep.lambdas()[0])
            .sum();
        tail += others * factor_tail(config, m, t, r0, m2 + base_shift)?;
    }
    let scale = value.abs().max(f64::MIN_POSITIVE);
    Ok(GreenKernelResult {
        value,
        truncation_error: tail / scale,
        terms_used: measures.iter().map(|m| m.len()).collect(),
        green_evaluations: evals,
    })
}

/// Σ_{j > J} w_j(0)² ϑ_j g(r₀, shift + λ_j) (atoms) or the analogous integral
/// beyond λ_max with |w| <= 1.
fn factor_tail(
    config: &ProductConfig,
    m: &SpaceForm,
    t: &SpectralTruncation,
    r0: f64,
    shift: f64,
) -> Result<f64> {
    let mut tail = 0.0;
    if m.is_compact() {
        let mut j = t.j_max + 1;
        loop {
            let l = crate::radial::atom(m, j);
            let w0 = eigenfunction_at_origin(m, l)?;
            let term = w0 * w0 * crate::spectral::atom_weight(m, j)?
                * RadialGreen::new(&config.base, shift + l)?.value(r0)?.abs();
            tail += term;
            if term <= 1e-17 * tail || term == 0.0 || j > t.j_max + 100_000 {
                break;
            }
            j += 1;
        }
    } else {
        let ak = m.k().abs();
        let mut s0 = (t.resolved_lambda_max(m.k()) / ak).sqrt();
        let (x, w) = crate::quadrature::gauss_legendre(32);
        loop {
            let s1 = 2.0 * s0;
            let mut part = 0.0;
            for (&xi, &wi) in x.iter().zip(&w) {
                let s = s0 + 0.5 * (xi + 1.0) * (s1 - s0);
                let l = ak * s * s;
                let d = crate::spectral::spectral_density(m, l)?;
                let g = RadialGreen::new(&config.base, shift + l)?.value(r0)?.abs();
                part += 0.5 * (s1 - s0) * wi * 2.0 * ak * s * d * g;
            }
            tail += part;
            if part <= 1e-17 * tail || part == 0.0 || s1 > 1e6 {
                break;
            }
            s0 = s1;
        }
    }
    Ok(tail)
}

/// Product kernel K(r₀, r̄) with truncation refined until successive levels
/// agree to `tol` (relative).
pub fn product_kernel(
    config: &ProductConfig,
    r0: f64,
    r_bar: &[f64],
    tol: f64,
) -> Result<GreenKernelResult> {
    check_kernel_args(config, r0, r_bar)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol = {tol} must be > 0")));
    }
    if config.factors.is_empty() {
        let g = radial_green(&config.base, config.mass * config.mass, r0)?;
        return Ok(GreenKernelResult {
            value: g,
            truncation_error: 0.0,
            terms_used: vec![],
            green_evaluations: 1,
        });
    }
    let mut previous: Option<f64> = None;
    let mut last_err = f64::INFINITY;
    for level in 0..=MAX_LEVEL {
        let measures: Vec<SpectralMeasureRep> = config
            .factors
            .iter()
            .map(|m| spectral_measure(m, &level_truncation(m, level)))
            .collect::<Result<_>>()?;
        let (value, evals) = kernel_sum(config, r0, r_bar, &measures, 1e-3 * tol)?;
        if let Some(p) = previous {
            let err = (value - p).abs() / value.abs().max(f64::MIN_POSITIVE);
            last_err = err;
            if err < tol {
                return Ok(GreenKernelResult {
                    value,
                    truncation_error: err,
                    terms_used: measures.iter().map(|m| m.len()).collect(),
                    green_evaluations: evals,
                });
            }
        }
        previous = Some(value);
    }
    Err(Error::ToleranceNotMet { tol, achieved: last_err })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::{apply_operator, RadialOperator};
    use std::f64::consts::PI;

    #[test]
    fn ode_residual_both_signs() {
        for (n, k, l) in [(3usize, 1.0, 2.0), (2, 1.0, 1.5), (4, 4.0, 3.0), (3, -1.0, 2.0), (2, -1.0, 0.7), (4, -4.0, 5.0)] {
            let m = SpaceForm::new(n, k).unwrap();
            let g = RadialGreen::new(&m, l).unwrap();
            let hi = if k > 0.0 { 0.95 * m.diam() } else { 5.0 };
            for i in 0..30 {
                let r = 0.05 + (hi - 0.05) * i as f64 / 29.0;
                let j = g.jet(r).unwrap();
                let res = l * j[0] - apply_operator(&m, RadialOperator::T, j, r).unwrap();
                assert!(res.abs() <= 1e-6 * j[0].abs().max(1.0), "n={n} k={k} r={r} res={res}");
                assert!((g.value(r).unwrap() - j[0]).abs() < 1e-12 * j[0].abs().max(1e-300));
            }
        }
    }

    #[test]
    fn methods_agree() {
        for (n, k, l) in [(3usize, 1.0, 2.0), (2, 1.0, 1.0), (4, 1.0, 3.0), (3, -1.0, 2.0), (2, -4.0, 5.0), (4, -1.0, 0.5), (5, 1.0, 2.0), (6, 1.0, 2.0), (6, -1.0, 3.0)] {
            let m = SpaceForm::new(n, k).unwrap();
            let a = green_constant_with(&m, l, NormalizationMethod::ClosedForm).unwrap();
            let b = green_constant_with(&m, l, NormalizationMethod::AsymptoticMatch).unwrap();
            assert!((a.c / b.c - 1.0).abs() < 1e-6, "n={n} k={k}: {} vs {}", a.c, b.c);
        }
    }

    #[test]
    fn default_methods() {
        let s = SpaceForm::new(3, 1.0).unwrap();
        assert_eq!(green_constant(&s, 2.0).unwrap().method, NormalizationMethod::ClosedForm);
        let h = SpaceForm::new(3, -1.0).unwrap();
        let c = green_constant(&h, 2.0).unwrap();
        assert_eq!(c.method, NormalizationMethod::AsymptoticMatch);
        assert!(c.c.is_finite() && c.c > 0.0);
    }

    #[test]
    fn flux_normalization() {
        // -m(r) g'(r) → 1 as r → 0
        for (n, k) in [(3usize, 1.0), (2, -1.0), (4, -4.0)] {
            let m = SpaceForm::new(n, k).unwrap();
            let g = RadialGreen::new(&m, 1.3).unwrap();
            let r = 1e-5;
            let flux = -crate::spaceform::volume_density(&m, r).unwrap() * g.jet(r).unwrap()[1];
            assert!((flux - 1.0).abs() < 1e-4, "n={n} k={k} flux={flux}");
        }
    }

    #[test]
    fn resonance_and_domain() {
        let s = SpaceForm::new(3, 1.0).unwrap();
        // √(-λ₀) - 3/2 = 1 ⇒ λ₀ = -6.25
        assert!(matches!(RadialGreen::new(&s, -6.25), Err(Error::ResonanceError(_))));
        let p = RadialGreen::with_options(&s, -6.25, GreenOptions { perturb: true, method: None }).unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert!(RadialGreen::new(&s, -3.0).is_ok());
        let h = SpaceForm::new(3, -1.0).unwrap();
        assert!(matches!(RadialGreen::new(&h, -1.0), Err(Error::DomainError(_))));
    }

    #[test]
    fn large_lambda_does_not_overflow() {
        let s = SpaceForm::new(3, 1.0).unwrap();
        let g = RadialGreen::new(&s, 2.5e5).unwrap();
        let v = g.value(1.0).unwrap();
        assert!((0.0..1e-150).contains(&v));
        let near = g.value(1e-3).unwrap();
        assert!(near.is_finite() && near > 0.0);
    }

    #[test]
    fn synthesis_weights() {
        let base = SpaceForm::new(3, 1.0).unwrap();
        let cfg = ProductConfig::new(base, vec![SpaceForm::new(2, 1.0).unwrap()], 1.0).unwrap();
        assert!((synthesis_weight(&cfg, &[16.0]).unwrap() - 1.0).abs() < 1e-14);
        let cfg4 = ProductConfig::new(base, vec![SpaceForm::new(4, 1.0).unwrap()], 1.0).unwrap();
        assert!((synthesis_weight(&cfg4, &[16.0]).unwrap() - 3.0).abs() < 1e-13);
        let hyp = ProductConfig::new(base, vec![SpaceForm::new(3, -1.0).unwrap(); 2], 1.0).unwrap();
        assert_eq!(synthesis_weight(&hyp, &[0.3, 7.0]).unwrap(), 1.0);
    }

    #[test]
    fn empty_product_is_base_green() {
        let base = SpaceForm::new(3, 1.0).unwrap();
        let cfg = ProductConfig::new(base, vec![], 1.0).unwrap();
        let k = product_kernel(&cfg, 1.0, &[], 1e-6).unwrap();
        assert_eq!(k.value, radial_green(&base, 1.0, 1.0).unwrap());
    }

    #[test]
    fn one_factor_matches_naive_sum() {
        let base = SpaceForm::new(3, 1.0).unwrap();
        let f = SpaceForm::new(2, 1.0).unwrap();
        let cfg = ProductConfig::new(base, vec![f], 1.0).unwrap();
        let j_max = 31;
        let fixed = product_kernel_fixed(&cfg, 1.0, &[1.0], &[SpectralTruncation::atoms(j_max)]).unwrap();
        // naive: Σ_j w_j(0) w_j(1) weight_j g(1, 1 + (1+j)²)
        let mut naive = 0.0;
        for j in 0..=j_max {
            let l = (1.0 + j as f64).powi(2);
            let w1 = crate::radial::eigenfunction_w(&f, l, 1.0).unwrap();
            let wt = 1.0 / (2.0 * PI) * (2 * j + 2) as f64 / 2.0;
            naive += 1.0 * w1 * wt * radial_green(&base, 1.0 + l, 1.0).unwrap();
        }
        assert!((fixed.value - naive).abs() < 1e-8 * naive.abs(), "{} {}", fixed.value, naive);
        let adaptive = product_kernel(&cfg, 1.0, &[1.0], 1e-8).unwrap();
        assert!((adaptive.value - naive).abs() < 1e-7 * naive.abs());
    }

    #[test]
    fn tail_bound_decreases() {
        let base = SpaceForm::new(3, 1.0).unwrap();
        let cfg = ProductConfig::new(base, vec![SpaceForm::new(2, 1.0).unwrap()], 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for j in [3usize, 7, 15, 31] {
            let r = product_kernel_fixed(&cfg, 1.0, &[1.0], &[SpectralTruncation::atoms(j)]).unwrap();
            assert!(r.truncation_error < prev);
            prev = r.truncation_error;
        }
        let hyp = ProductConfig::new(base, vec![SpaceForm::new(3, -1.0).unwrap()], 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for s in [4.0, 8.0, 16.0] {
            let t = SpectralTruncation::density(s * s, 128);
            let r = product_kernel_fixed(&hyp, 1.0, &[0.5], &[t]).unwrap();
            assert!(r.truncation_error < prev);
            prev = r.truncation_error;
        }
    }
}
