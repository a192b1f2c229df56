//! Radial operators T and T̂, their eigenfunctions, the local Frobenius
//! solutions at infinity (k < 0) and the connection coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::spaceform::{RadialGrid, SpaceForm};
use crate::specialfn::{
    hyp2f1_derivatives_scaled, hyp2f1_sweep, jacobi_all, jacobi_all_with_derivatives, ln_gamma,
    HypergeometricTriple,
};

type C = Complex64;

/// Values of a radial function on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledRadialFunction {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
}

impl SampledRadialFunction {
    pub fn new(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} grid points",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: RadialGrid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.points.iter().map(|&r| f(r)).collect();
        Self { grid, values }
    }

    /// ∫ |f|² dμ.
    pub fn norm_sqr(&self) -> f64 {
        self.values
            .iter()
            .zip(&self.grid.mu_weights)
            .map(|(v, w)| v * v * w)
            .sum()
    }
}

/// K₀(λ), K₊(λ) in w₋ = K₀ w₀ + K₊ w₊.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConnectionCoefficients {
    #[serde(rename = "K0")]
    pub k0: Complex64,
    #[serde(rename = "Kplus")]
    pub kplus: Complex64,
    pub lambda: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialOperator {
    /// sec² potential.
    T,
    /// csc² potential.
    THat,
}

/// First-order coefficient (n-1)√k cot(√k r) = m'/m and potential V(r), so
/// that T f = f'' + A f' - V f.
pub fn coefficients(m: &SpaceForm, op: RadialOperator, r: f64) -> Result<(f64, f64)> {
    m.check_radius(r)?;
    let (n, k, s) = (m.n(), m.k(), m.kappa());
    let (a, half) = if m.is_compact() {
        let half = match op {
            RadialOperator::T => 1.0 / (0.5 * s * r).cos().powi(2),
            RadialOperator::THat => 1.0 / (0.5 * s * r).sin().powi(2),
        };
        ((n - 1.0) * s / (s * r).tan(), half)
    } else {
        // √k = i√|k|: cos → cosh, sin → i sinh
        let half = match op {
            RadialOperator::T => 1.0 / (0.5 * s * r).cosh().powi(2),
            RadialOperator::THat => -1.0 / (0.5 * s * r).sinh().powi(2),
        };
        ((n - 1.0) * s / (s * r).tanh(), half)
    };
    let v = 0.25 * k * (n - 1.0) * (half + n - 1.0);
    if !(a.is_finite() && v.is_finite()) {
        return Err(Error::NonFinite(format!("operator coefficients at r = {r}")));
    }
    Ok((a, v))
}

/// Applies T or T̂ to a function given by its (value, f', f'') at r.
pub fn apply_operator(m: &SpaceForm, op: RadialOperator, f: [f64; 3], r: f64) -> Result<f64> {
    let (a, v) = coefficients(m, op, r)?;
    Ok(f[2] + a * f[1] - v * f[0])
}

/// T f(r) for a closure returning (f, f', f'') at r.
pub fn apply_t<F>(m: &SpaceForm, f: F, r: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<[f64; 3]>,
{
    apply_operator(m, RadialOperator::T, f(r)?, r)
}

/// T̂ f(r) for a closure returning (f, f', f'') at r.
pub fn apply_that<F>(m: &SpaceForm, f: F, r: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<[f64; 3]>,
{
    apply_operator(m, RadialOperator::THat, f(r)?, r)
}

/// Finite-difference weights for derivatives 0..=max_d at x0 (Fornberg).
pub(crate) fn fd_weights(x0: f64, xs: &[f64], max_d: usize) -> Vec<Vec<f64>> {
    let n = xs.len();
    let mut c = vec![vec![0.0; n]; max_d + 1];
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(max_d);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// Applies T or T̂ to sampled data with five-point stencils. The two outermost
/// points at each end are dropped; the result lives on the remaining points.
pub fn apply_operator_sampled(
    m: &SpaceForm,
    op: RadialOperator,
    f: &SampledRadialFunction,
) -> Result<SampledRadialFunction> {
    let pts = &f.grid.points;
    let n = pts.len();
    if n < 5 {
        return Err(Error::GridTooCoarse { points: n, required: 5 });
    }
    let mut points = Vec::with_capacity(n - 4);
    let mut weights = Vec::with_capacity(n - 4);
    let mut values = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let w = fd_weights(pts[i], &pts[i - 2..=i + 2], 2);
        let fv = &f.values[i - 2..=i + 2];
        let d1: f64 = w[1].iter().zip(fv).map(|(a, b)| a * b).sum();
        let d2: f64 = w[2].iter().zip(fv).map(|(a, b)| a * b).sum();
        values.push(apply_operator(m, op, [f.values[i], d1, d2], pts[i])?);
        points.push(pts[i]);
        weights.push(f.grid.mu_weights[i]);
    }
    Ok(SampledRadialFunction {
        grid: RadialGrid { points, mu_weights: weights, r_max: f.grid.r_max },
        values,
    })
}

pub fn apply_t_sampled(m: &SpaceForm, f: &SampledRadialFunction) -> Result<SampledRadialFunction> {
    apply_operator_sampled(m, RadialOperator::T, f)
}

pub fn apply_that_sampled(
    m: &SpaceForm,
    f: &SampledRadialFunction,
) -> Result<SampledRadialFunction> {
    apply_operator_sampled(m, RadialOperator::THat, f)
}

/// λ_j = k(n/2 + j)².
pub fn atom(m: &SpaceForm, j: usize) -> f64 {
    let v = m.n() / 2.0 + j as f64;
    m.k() * v * v
}

/// Index j of the atom equal to λ (within 1e-9 relative), for k > 0.
pub fn atom_index(m: &SpaceForm, lambda: f64) -> Result<usize> {
    let t = (lambda / m.k()).max(0.0).sqrt() - m.n() / 2.0;
    let j = t.round().max(0.0) as usize;
    let lj = atom(m, j);
    if (lambda - lj).abs() <= 1e-9 * lj.max(1.0) {
        Ok(j)
    } else {
        Err(Error::NotAnEigenvalue { lambda, nearest: lj })
    }
}

/// z(r) as a jet in r.
pub(crate) fn z_jet(m: &SpaceForm, r: f64) -> Jet {
    let (k, s) = (m.k(), m.kappa());
    if m.is_compact() {
        let h = 0.5 * s * r;
        Jet::real(h.sin().powi(2), 0.5 * s * (s * r).sin(), 0.5 * k * (s * r).cos())
    } else {
        let h = 0.5 * s * r;
        Jet::real(-h.sinh().powi(2), -0.5 * s * (s * r).sinh(), 0.5 * k * (s * r).cosh())
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("spectral parameter λ = {lambda} must be > 0")))
    }
}

fn check_closed_radius(m: &SpaceForm, r: f64) -> Result<()> {
    if r == 0.0 || (m.is_compact() && r == m.diam()) {
        Ok(())
    } else {
        m.check_radius(r)
    }
}

/// Conjugate parameters (n/2 + i s, n/2 - i s; n/2) of the k < 0 eigenfunction.
fn continuum_triple(m: &SpaceForm, lambda: f64) -> Result<HypergeometricTriple> {
    let s = (lambda / m.k().abs()).sqrt();
    let h = m.n() / 2.0;
    HypergeometricTriple::new(C::new(h, s), C::new(h, -s), C::new(h, 0.0))
}

/// w_M(r, λ) with its first two r-derivatives.
pub fn eigenfunction_w_jet(m: &SpaceForm, lambda: f64, r: f64) -> Result<[f64; 3]> {
    check_lambda(lambda)?;
    check_closed_radius(m, r)?;
    let (n, s) = (m.n(), m.kappa());
    if m.is_compact() {
        let j = atom_index(m, lambda)?;
        let x = Jet::real((s * r).cos(), -s * (s * r).sin(), -m.k() * (s * r).cos());
        let p = jacobi_all_with_derivatives(j, n / 2.0 - 1.0, n / 2.0, x.v.re)?[j];
        let pj = x.compose(p.map(|v| C::new(v, 0.0)));
        let half = Jet::real((0.5 * s * r).cos(), -0.5 * s * (0.5 * s * r).sin(), -0.25 * m.k() * (0.5 * s * r).cos());
        Ok((half * pj).re())
    } else {
        let t = continuum_triple(m, lambda)?;
        let z = z_jet(m, r);
        let (d, scale) = hyp2f1_derivatives_scaled(&t, z.v.re)?;
        let half = Jet::real((0.5 * s * r).cosh(), 0.5 * s * (0.5 * s * r).sinh(), 0.25 * s * s * (0.5 * s * r).cosh());
        let w = (half * z.compose(d)).scale(C::new(scale.exp(), 0.0));
        let out = w.re();
        if out.iter().all(|v| v.is_finite()) {
            Ok(out)
        } else {
            Err(Error::NonFinite(format!("w(r={r}, λ={lambda})")))
        }
    }
}

/// w_M(r, λ); λ must be an atom k(n/2+j)² when k > 0. Normalized so that
/// w(0, λ) = 1 for k < 0.
pub fn eigenfunction_w(m: &SpaceForm, lambda: f64, r: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_closed_radius(m, r)?;
    let (n, s) = (m.n(), m.kappa());
    if m.is_compact() {
        let j = atom_index(m, lambda)?;
        let p = jacobi_all(j, n / 2.0 - 1.0, n / 2.0, (s * r).cos())?[j];
        Ok((0.5 * s * r).cos() * p)
    } else {
        Ok(eigenfunction_w_on_points(m, lambda, &[r])?[0])
    }
}

/// w_M(·, λ) at many radii (k < 0: one ODE sweep; k > 0: λ must be an atom).
pub fn eigenfunction_w_on_points(m: &SpaceForm, lambda: f64, rs: &[f64]) -> Result<Vec<f64>> {
    check_lambda(lambda)?;
    for &r in rs {
        check_closed_radius(m, r)?;
    }
    let s = m.kappa();
    if m.is_compact() {
        return rs.iter().map(|&r| eigenfunction_w(m, lambda, r)).collect();
    }
    let t = continuum_triple(m, lambda)?;
    let zs: Vec<f64> = rs.iter().map(|&r| -(0.5 * s * r).sinh().powi(2)).collect();
    let vals = hyp2f1_sweep(&t, &zs)?;
    rs.iter()
        .zip(vals)
        .map(|(&r, f)| {
            let ln_cosh = (0.5 * s * r).cosh().ln();
            let v = f.mantissa.re * (f.log_scale + ln_cosh).exp();
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite(format!("w(r={r}, λ={lambda})")))
            }
        })
        .collect()
}

/// All atom eigenfunctions w_0 .. w_jmax at r (k > 0).
pub fn atom_eigenfunctions(m: &SpaceForm, jmax: usize, r: f64) -> Result<Vec<f64>> {
    if !m.is_compact() {
        return Err(Error::DomainError("atom eigenfunctions need k > 0".into()));
    }
    check_closed_radius(m, r)?;
    let (n, s) = (m.n(), m.kappa());
    let half = (0.5 * s * r).cos();
    Ok(jacobi_all(jmax, n / 2.0 - 1.0, n / 2.0, (s * r).cos())?
        .into_iter()
        .map(|p| half * p)
        .collect())
}

/// (w_j, w_j', w_j'') at r for j = 0 .. jmax (k > 0).
pub fn atom_eigenfunction_jets(m: &SpaceForm, jmax: usize, r: f64) -> Result<Vec<[f64; 3]>> {
    if !m.is_compact() {
        return Err(Error::DomainError("atom eigenfunctions need k > 0".into()));
    }
    check_closed_radius(m, r)?;
    let (n, s, k) = (m.n(), m.kappa(), m.k());
    let (x1, x2) = (-s * (s * r).sin(), -k * (s * r).cos());
    let h = [(0.5 * s * r).cos(), -0.5 * s * (0.5 * s * r).sin(), -0.25 * k * (0.5 * s * r).cos()];
    Ok(jacobi_all_with_derivatives(jmax, n / 2.0 - 1.0, n / 2.0, (s * r).cos())?
        .into_iter()
        .map(|p| {
            let (p1, p2) = (p[1] * x1, p[2] * x1 * x1 + p[1] * x2);
            [h[0] * p[0], h[1] * p[0] + h[0] * p1, h[2] * p[0] + 2.0 * h[1] * p1 + h[0] * p2]
        })
        .collect())
}

/// ν = √(λ/k) on the principal branch.
pub fn nu(m: &SpaceForm, lambda: C) -> C {
    (lambda / m.k()).sqrt()
}

/// w₀, w₊, w₋ as jets in z (derivatives with respect to z), k < 0, z < 0.
///
/// w₀ = (1-z)^{1/2} F(n/2+ν, n/2-ν; n/2; z)
/// w± = (-z)^{-n/2±ν} (1-z)^{1/2} F(n/2∓ν, 1∓ν; 1∓2ν; 1/z)
pub fn homogeneous_solutions_jet(m: &SpaceForm, lambda: C, z: f64) -> Result<[Jet; 3]> {
    if m.is_compact() {
        return Err(Error::DomainError("homogeneous solutions at infinity need k < 0".into()));
    }
    if !(lambda.re > 0.0) {
        return Err(Error::InvalidParameter(format!("Re λ must be > 0, got {lambda}")));
    }
    if !(z < 0.0 && z.is_finite()) {
        return Err(Error::DomainError(format!("z = {z} must be < 0")));
    }
    let n2 = m.n() / 2.0;
    let v = nu(m, lambda);
    let x = Jet::variable(z);
    let root = (-x + 1.0).powf(0.5);
    let f_jet = |t: HypergeometricTriple, arg: Jet| -> Result<Jet> {
        let (d, scale) = hyp2f1_derivatives_scaled(&t, arg.v.re)?;
        Ok(arg.compose(d).scale(C::new(scale.exp(), 0.0)))
    };
    let w0 = root * f_jet(HypergeometricTriple::new(n2 + v, n2 - v, C::new(n2, 0.0))?, x)?;
    let inv = Jet::constant(C::new(1.0, 0.0)) / x;
    let mut pm = [Jet::zero(); 2];
    for (slot, sgn) in pm.iter_mut().zip([1.0, -1.0]) {
        let t = HypergeometricTriple::new(n2 - sgn * v, 1.0 - sgn * v, 1.0 - 2.0 * sgn * v)?;
        let power = (-x).powc(-n2 + sgn * v);
        *slot = power * root * f_jet(t, inv)?;
    }
    Ok([w0, pm[0], pm[1]])
}

/// (w₀, w₊, w₋) at z < 0.
pub fn homogeneous_solutions(m: &SpaceForm, lambda: C, z: f64) -> Result<(C, C, C)> {
    let [w0, wp, wm] = homogeneous_solutions_jet(m, lambda, z)?;
    Ok((w0.v, wp.v, wm.v))
}

/// P(z)(w₊'w₋ - w₊w₋') with P = [z(z-1)]^{n/2}; constant, equal to -2ν.
pub fn reduced_wronskian(m: &SpaceForm, lambda: C, z: f64) -> Result<C> {
    let [_, wp, wm] = homogeneous_solutions_jet(m, lambda, z)?;
    let p = (z * (z - 1.0)).powf(m.n() / 2.0);
    Ok(p * (wp.d1 * wm.v - wp.v * wm.d1))
}

/// K₀ and K₊ for k < 0 and λ > 0.
pub fn connection_coefficients(m: &SpaceForm, lambda: f64) -> Result<ConnectionCoefficients> {
    if m.is_compact() {
        return Err(Error::DomainError("connection coefficients need k < 0".into()));
    }
    check_lambda(lambda)?;
    let n2 = C::new(m.n() / 2.0, 0.0);
    let v = nu(m, C::new(lambda, 0.0));
    let lg = ln_gamma;
    let k0 = (lg(n2 - v)? + lg(-v)? - lg(n2)? - lg(-2.0 * v)?).exp();
    let kplus = -(lg(2.0 * v)? + lg(n2 - v)? + lg(-v)? - lg(-2.0 * v)? - lg(n2 + v)? - lg(v)?).exp();
    Ok(ConnectionCoefficients { k0, kplus, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constant_function() {
        let m = SpaceForm::new(2, 1.0).unwrap();
        let one = |_: f64| Ok([1.0, 0.0, 0.0]);
        assert!((apply_t(&m, one, PI / 2.0).unwrap() + 0.75).abs() < 1e-14);
        assert!((apply_that(&m, one, PI / 2.0).unwrap() + 0.75).abs() < 1e-14);
        let zero = |_: f64| Ok([0.0; 3]);
        assert_eq!(apply_t(&m, zero, 1.0).unwrap(), 0.0);
        assert_eq!(apply_that(&m, zero, 1.0).unwrap(), 0.0);
        // k < 0: csc²(i/2) = -csch²(1/2)
        let h = SpaceForm::new(3, -1.0).unwrap();
        let expected = 0.5 * (2.0 - 1.0 / 0.5_f64.sinh().powi(2));
        assert!((apply_that(&h, one, 1.0).unwrap() - expected).abs() < 1e-14);
        assert!(matches!(apply_t(&m, one, 0.0), Err(Error::DomainError(_))));
    }

    #[test]
    fn ground_state() {
        let m = SpaceForm::new(2, 1.0).unwrap();
        for i in 1..20 {
            let r = i as f64 * 0.15;
            let w = |r: f64| eigenfunction_w_jet(&m, 1.0, r);
            let tw = apply_t(&m, w, r).unwrap();
            assert!((tw + eigenfunction_w(&m, 1.0, r).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn values_at_origin_and_frozen() {
        let m = SpaceForm::new(2, 1.0).unwrap();
        assert!((eigenfunction_w(&m, 4.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(matches!(eigenfunction_w(&m, 3.0, 1.0), Err(Error::NotAnEigenvalue { .. })));
        let h = SpaceForm::new(2, -1.0).unwrap();
        assert_eq!(eigenfunction_w(&h, 2.5, 0.0).unwrap(), 1.0);
        // 40-digit reference evaluations
        let v = eigenfunction_w(&h, 1.0, 1.0).unwrap();
        assert!((v - 0.674_481_745_857_248_57).abs() < 1e-12);
        let h3 = SpaceForm::new(3, -4.0).unwrap();
        let v = eigenfunction_w(&h3, 10.0, 0.7).unwrap();
        assert!((v - 0.207_079_016_017_507_5).abs() < 1e-12);
    }

    #[test]
    fn eigen_relation_both_signs() {
        for (n, k, lambdas) in [
            (3usize, 4.0, vec![atom(&SpaceForm::new(3, 4.0).unwrap(), 2)]),
            (2, -1.0, vec![0.3, 5.0, 200.0]),
            (4, -4.0, vec![1.0, 40.0]),
        ] {
            let m = SpaceForm::new(n, k).unwrap();
            let r_hi = if k > 0.0 { m.diam() } else { 6.0 };
            for &l in &lambdas {
                for i in 1..40 {
                    let r = r_hi * i as f64 / 40.0;
                    let w = eigenfunction_w_jet(&m, l, r).unwrap();
                    let res = apply_operator(&m, RadialOperator::T, w, r).unwrap() + l * w[0];
                    assert!(res.abs() < 1e-8 * w[0].abs().max(1.0), "n={n} k={k} λ={l} r={r} res={res}");
                }
            }
        }
    }

    #[test]
    fn self_adjoint_form() {
        let m = SpaceForm::new(3, -1.0).unwrap();
        let f = |r: f64| (-(r - 1.0) * (r - 1.0)).exp();
        let fp = |r: f64| -2.0 * (r - 1.0) * f(r);
        let mm = |r: f64| crate::spaceform::volume_density(&m, r).unwrap();
        let h = 1e-3;
        for &r in &[0.4, 1.0, 1.7] {
            let flux = |r: f64| mm(r) * fp(r);
            let d = -flux(r + 2.0 * h) + 8.0 * flux(r + h) - 8.0 * flux(r - h) + flux(r - 2.0 * h);
            let div = d / (12.0 * h) / mm(r);
            let (_, v) = coefficients(&m, RadialOperator::T, r).unwrap();
            let f2 = (4.0 * (r - 1.0).powi(2) - 2.0) * f(r);
            let t = apply_operator(&m, RadialOperator::T, [f(r), fp(r), f2], r).unwrap();
            assert!((t - (div - v * f(r))).abs() < 1e-10);
        }
    }

    #[test]
    fn sampled_operator_fourth_order() {
        let m = SpaceForm::new(2, 1.0).unwrap();
        let f = |r: f64| (r - 1.5).sin() * r * r;
        let jet = |r: f64| {
            Ok([
                f(r),
                (r - 1.5).cos() * r * r + 2.0 * r * (r - 1.5).sin(),
                -(r - 1.5).sin() * r * r + 4.0 * r * (r - 1.5).cos() + 2.0 * (r - 1.5).sin(),
            ])
        };
        let mut errs = vec![];
        for n in [100usize, 200] {
            let grid = RadialGrid::staggered(&m, 3.0, n).unwrap();
            let s = SampledRadialFunction::from_fn(grid, f);
            let t = apply_t_sampled(&m, &s).unwrap();
            let e = t
                .grid
                .points
                .iter()
                .zip(&t.values)
                .filter(|(r, _)| **r > 0.5 && **r < 2.5)
                .map(|(&r, v)| (v - apply_t(&m, jet, r).unwrap()).abs())
                .fold(0.0, f64::max);
            errs.push(e);
        }
        let order = (errs[0] / errs[1]).log2();
        assert!(order > 3.5, "order {order}");
    }

    #[test]
    fn wronskian_and_connection() {
        let m = SpaceForm::new(3, -1.0).unwrap();
        let lam = C::new(2.0, 0.0);
        let expected = -2.0 * nu(&m, lam);
        for &z in &[-10.0, -3.0, -1.0, -0.4, -0.1] {
            let w = reduced_wronskian(&m, lam, z).unwrap();
            assert!((w - expected).norm() < 1e-8 * expected.norm(), "z={z} w={w}");
        }
        for (n, k, l) in [(3usize, -1.0, 2.0), (2, -4.0, 7.0), (4, -1.0, 0.5)] {
            let m = SpaceForm::new(n, k).unwrap();
            let cc = connection_coefficients(&m, l).unwrap();
            for &z in &[-5.0, -0.8, -0.2] {
                let (w0, wp, wm) = homogeneous_solutions(&m, C::new(l, 0.0), z).unwrap();
                let res = wm - cc.k0 * w0 - cc.kplus * wp;
                assert!(res.norm() < 1e-8 * wm.norm().max(1.0), "n={n} z={z} res={res}");
            }
        }
    }

    #[test]
    fn homogeneous_solution_near_origin() {
        let m = SpaceForm::new(3, -1.0).unwrap();
        let (w0, _, _) = homogeneous_solutions(&m, C::new(1.5, 0.0), -1e-9).unwrap();
        assert!((w0 - 1.0).norm() < 1e-8);
    }
}
