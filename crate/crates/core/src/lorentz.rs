//! Riesz kernels on a Lorentzian base, the spectral solution f_α of
//! (λ_shift - T₀) f = g_α and the α = 2 weight of the advanced kernel.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::{synthesis_weight, RadialGreen};
use crate::quadrature::gauss_legendre_on;
use crate::radial::{atom, atom_eigenfunction_jets, atom_eigenfunctions};
use crate::spaceform::{volume_density_unchecked, ProductConfig, Signature, SpaceForm};
use crate::specialfn::{hyp2f1_sweep, is_gamma_pole, ln_gamma, HypergeometricTriple};
use crate::spectral::atom_weight;

type C = Complex64;

/// Extra quadrature nodes beyond 2·j_max when transforming g_α.
const EXTRA_NODES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RieszParams {
    pub alpha: C,
    #[serde(rename = "M0")]
    pub base: SpaceForm,
    /// m² + |λ̄|.
    pub lambda_shift: f64,
}

impl RieszParams {
    pub fn new(alpha: C, base: SpaceForm, lambda_shift: f64) -> Result<Self> {
        if base.signature != Signature::Lorentzian {
            return Err(Error::InvalidParameter("Riesz kernels need a Lorentzian base".into()));
        }
        if !(lambda_shift.is_finite() && lambda_shift >= 0.0) {
            return Err(Error::InvalidParameter(format!("lambda_shift = {lambda_shift} must be >= 0")));
        }
        if !(alpha.re.is_finite() && alpha.im.is_finite()) {
            return Err(Error::NonFinite(format!("α = {alpha}")));
        }
        Ok(Self { alpha, base, lambda_shift })
    }

    pub fn real(alpha: f64, base: SpaceForm, lambda_shift: f64) -> Result<Self> {
        Self::new(C::new(alpha, 0.0), base, lambda_shift)
    }

    fn with_alpha(&self, alpha: C) -> Self {
        Self { alpha, ..*self }
    }

    /// Re α > n₀ + 2 and k₀ > 0, where the spectral construction converges.
    fn check_certified(&self) -> Result<()> {
        if !self.base.is_compact() {
            return Err(Error::DomainError("f_α needs a base with k₀ > 0".into()));
        }
        let n = self.base.n();
        if self.alpha.re <= n + 2.0 {
            return Err(Error::InvalidParameter(format!(
                "Re α = {} must exceed n₀ + 2 = {}",
                self.alpha.re,
                n + 2.0
            )));
        }
        Ok(())
    }
}

/// g_α(s) = π^{1-n₀/2} 2^{1-α} s^{α-n₀} / (Γ(α/2) Γ((α-n₀)/2 + 1)).
pub fn riesz_kernel(params: &RieszParams, s: f64) -> Result<C> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::DomainError(format!("s = {s} must be > 0")));
    }
    let n = params.base.n();
    let a = params.alpha;
    let (g1, g2) = (a / 2.0, (a - n) / 2.0 + 1.0);
    for g in [g1, g2] {
        if is_gamma_pole(g) {
            return Err(Error::PoleError(format!("Γ({g}) in g_α")));
        }
    }
    let ln = (1.0 - n / 2.0) * std::f64::consts::PI.ln() + (1.0 - a) * std::f64::consts::LN_2
        + (a - n) * s.ln()
        - ln_gamma(g1)?
        - ln_gamma(g2)?;
    Ok(ln.exp())
}

/// Spectral coefficients of f_α in the atom basis of the base.
#[derive(Debug, Clone, PartialEq)]
pub struct FAlpha {
    pub params: RieszParams,
    /// c_j = weight_j · (U₀g_α)(λ_j) / (λ_shift + λ_j).
    pub coefficients: Vec<C>,
    /// (U₀g_α)(λ_j).
    pub transform: Vec<C>,
}

impl FAlpha {
    pub fn new(params: &RieszParams, j_max: usize) -> Result<Self> {
        params.check_certified()?;
        let m = &params.base;
        let (xs, ws) = gauss_legendre_on(0.0, m.diam(), 2 * j_max + EXTRA_NODES);
        let mut transform = vec![C::new(0.0, 0.0); j_max + 1];
        for (&r, &w) in xs.iter().zip(&ws) {
            let g = riesz_kernel(params, r)? * (w * volume_density_unchecked(m, r));
            for (t, wj) in transform.iter_mut().zip(atom_eigenfunctions(m, j_max, r)?) {
                *t += g * wj;
            }
        }
        let coefficients = transform
            .iter()
            .enumerate()
            .map(|(j, &t)| Ok(t * atom_weight(m, j)? / (params.lambda_shift + atom(m, j))))
            .collect::<Result<_>>()?;
        Ok(Self { params: *params, coefficients, transform })
    }

    pub fn j_max(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// f_α(r).
    pub fn value(&self, r: f64) -> Result<C> {
        let w = atom_eigenfunctions(&self.params.base, self.j_max(), r)?;
        Ok(self.coefficients.iter().zip(w).map(|(c, w)| c * w).sum())
    }

    /// (f_α, f_α', f_α'') at r.
    pub fn jet(&self, r: f64) -> Result<[C; 3]> {
        let w = atom_eigenfunction_jets(&self.params.base, self.j_max(), r)?;
        let mut out = [C::new(0.0, 0.0); 3];
        for (c, wj) in self.coefficients.iter().zip(w) {
            for d in 0..3 {
                out[d] += c * wj[d];
            }
        }
        Ok(out)
    }

    /// (λ_shift - T₀) f_α - g_α at r.
    pub fn elliptic_residual(&self, r: f64) -> Result<C> {
        let m = &self.params.base;
        let (a, v) = crate::radial::coefficients(m, crate::radial::RadialOperator::T, r)?;
        let f = self.jet(r)?;
        let tf = f[2] + f[1] * a - f[0] * v;
        Ok(f[0] * self.params.lambda_shift - tf - riesz_kernel(&self.params, r)?)
    }
}

/// f_α(r₀) from j_max + 1 atoms of the base.
pub fn f_alpha(params: &RieszParams, r0: f64, j_max: usize) -> Result<C> {
    FAlpha::new(params, j_max)?.value(r0)
}

/// Largest mismatch between the real- and imaginary-direction difference
/// quotients of α ↦ f_α(r₀), relative to their size. Small for a holomorphic
/// family.
pub fn holomorphy_defect(params: &RieszParams, r0: f64, j_max: usize, h: f64) -> Result<f64> {
    let at = |d: C| f_alpha(&params.with_alpha(params.alpha + d), r0, j_max);
    let dr = (at(C::new(h, 0.0))? - at(C::new(-h, 0.0))?) / (2.0 * h);
    let di = (at(C::new(0.0, h))? - at(C::new(0.0, -h))?) / C::new(0.0, 2.0 * h);
    Ok((dr - di).norm() / dr.norm().max(di.norm()).max(f64::MIN_POSITIVE))
}

/// g₂ on a base of dimension n₀ ∈ {2, 3}.
fn riesz_two(n0: usize, s: f64) -> f64 {
    if n0 == 2 {
        0.5
    } else {
        1.0 / (2.0 * std::f64::consts::PI * s)
    }
}

/// Nodes per unit radius in the variation-of-parameters quadrature.
const VP_NODES: usize = 96;

/// f₂(r) solving (μ - T₀) f = g₂ with f regular at both ends of (0, diam),
/// by variation of parameters with the regular solution u₀ and the Green's
/// function g of the base:
/// f(r) = g(r) ∫₀^r u₀ g₂ dμ + u₀(r) ∫_r^diam g g₂ dμ.
pub fn f_two_on_points(base: &SpaceForm, mu: f64, rs: &[f64]) -> Result<Vec<f64>> {
    if !base.is_compact() {
        return Err(Error::DomainError("α = 2 needs a base with k₀ > 0".into()));
    }
    let n0 = base.dim;
    if n0 > 3 {
        return Err(Error::ContinuationUnsupported(format!(
            "α = 2 on a base of dimension {n0} needs distributional continuation"
        )));
    }
    if !(mu > 0.0) {
        return Err(Error::InvalidParameter(format!("μ = {mu} must be > 0")));
    }
    let d = base.diam();
    let green = RadialGreen::new(base, mu)?;
    // u₀ = cos(κr/2) F(n/2 + iσ, n/2 - iσ; n/2; z), T u₀ = μ u₀, u₀(0) = 1
    let h = base.n() / 2.0;
    let sigma = (mu / base.k()).sqrt();
    let triple = HypergeometricTriple::new(C::new(h, sigma), C::new(h, -sigma), C::new(h, 0.0))?;
    let s = base.kappa();
    let u0 = |pts: &[f64]| -> Result<Vec<f64>> {
        let zs: Vec<f64> = pts.iter().map(|&r| (0.5 * s * r).sin().powi(2)).collect();
        Ok(hyp2f1_sweep(&triple, &zs)?
            .into_iter()
            .zip(pts)
            .map(|(f, &r)| (0.5 * s * r).cos() * f.mantissa.re * f.log_scale.exp())
            .collect())
    };
    rs.iter()
        .map(|&r| {
            base.check_radius(r)?;
            let (xl, wl) = gauss_legendre_on(0.0, r, VP_NODES.max((VP_NODES as f64 * r).ceil() as usize));
            let (xr, wr) =
                gauss_legendre_on(r, d, VP_NODES.max((VP_NODES as f64 * (d - r)).ceil() as usize));
            let left: f64 = u0(&xl)?
                .iter()
                .zip(&xl)
                .zip(&wl)
                .map(|((u, &x), w)| u * riesz_two(n0, x) * volume_density_unchecked(base, x) * w)
                .sum();
            let right: f64 = green
                .values(&xr)?
                .iter()
                .zip(&xr)
                .zip(&wr)
                .map(|((g, &x), w)| g * riesz_two(n0, x) * volume_density_unchecked(base, x) * w)
                .sum();
            Ok(green.value(r)? * left + u0(&[r])?[0] * right)
        })
        .collect()
}

/// w̄(0, λ̄) · f₂(r₀) with μ = m² + |λ̄|, the scalar weight of the advanced
/// fundamental solution.
pub fn advanced_kernel_weights(config: &ProductConfig, lambda_bar: &[f64], r0: f64) -> Result<f64> {
    config.validate()?;
    if config.base.signature != Signature::Lorentzian {
        return Err(Error::InvalidParameter("advanced kernel needs a Lorentzian base".into()));
    }
    let weight = synthesis_weight(config, lambda_bar)?;
    let mu = config.mass * config.mass + lambda_bar.iter().sum::<f64>();
    Ok(weight * f_two_on_points(&config.base, mu, &[r0])?[0])
}
