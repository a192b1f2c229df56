//! Space forms, product configurations and radial quadrature grids.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre_on;
use crate::specialfn::gamma_real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    #[default]
    Riemannian,
    Lorentzian,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpaceForm {
    dim: usize,
    curvature: f64,
    #[serde(default)]
    signature: Signature,
}

/// A simply connected space form of dimension `dim` and constant sectional
/// curvature `curvature` (nonzero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpaceForm")]
pub struct SpaceForm {
    pub dim: usize,
    pub curvature: f64,
    pub signature: Signature,
}

impl TryFrom<RawSpaceForm> for SpaceForm {
    type Error = Error;
    fn try_from(r: RawSpaceForm) -> Result<Self> {
        Self::with_signature(r.dim, r.curvature, r.signature)
    }
}

impl SpaceForm {
    pub fn with_signature(dim: usize, curvature: f64, signature: Signature) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!("dimension {dim} < 2")));
        }
        if !curvature.is_finite() || curvature == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "curvature must be finite and nonzero, got {curvature}"
            )));
        }
        Ok(Self { dim, curvature, signature })
    }

    /// Riemannian space form.
    pub fn new(dim: usize, curvature: f64) -> Result<Self> {
        Self::with_signature(dim, curvature, Signature::Riemannian)
    }

    pub fn lorentzian(dim: usize, curvature: f64) -> Result<Self> {
        Self::with_signature(dim, curvature, Signature::Lorentzian)
    }

    /// Dimension as a float.
    pub fn n(&self) -> f64 {
        self.dim as f64
    }

    pub fn k(&self) -> f64 {
        self.curvature
    }

    /// √|k|.
    pub fn kappa(&self) -> f64 {
        self.curvature.abs().sqrt()
    }

    pub fn is_compact(&self) -> bool {
        self.curvature > 0.0
    }

    /// π/√k for k > 0, infinity for k < 0.
    pub fn diam(&self) -> f64 {
        diam(self)
    }

    pub fn check_radius(&self, r: f64) -> Result<()> {
        let ok = r.is_finite() && r > 0.0 && (!self.is_compact() || r < self.diam());
        if ok {
            Ok(())
        } else {
            Err(Error::DomainError(format!(
                "r = {r} outside (0, {}) for n={}, k={}",
                self.diam(),
                self.dim,
                self.curvature
            )))
        }
    }
}

/// M0 × M1 × … × MN together with the mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductConfig {
    pub base: SpaceForm,
    #[serde(default)]
    pub factors: Vec<SpaceForm>,
    pub mass: f64,
}

impl ProductConfig {
    pub fn new(base: SpaceForm, factors: Vec<SpaceForm>, mass: f64) -> Result<Self> {
        let cfg = Self { base, factors, mass };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::ConfigError(format!("mass must be > 0, got {}", self.mass)));
        }
        if let Some(i) = self
            .factors
            .iter()
            .position(|f| f.signature != Signature::Riemannian)
        {
            return Err(Error::ConfigError(format!("factor {i} is not Riemannian")));
        }
        Ok(())
    }

    /// Parses and validates the JSON configuration document.
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self =
            serde_json::from_str(text).map_err(|e| Error::ConfigError(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }
}

/// |S^{n-1}| = 2π^{n/2}/Γ(n/2).
pub fn sphere_area(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    2.0 * PI.powf(h) / gamma_real(h).expect("n/2 is positive")
}

pub fn diam(m: &SpaceForm) -> f64 {
    if m.is_compact() {
        PI / m.kappa()
    } else {
        f64::INFINITY
    }
}

/// sin(√k r)/√k with the hyperbolic branch for k < 0.
pub(crate) fn sin_k(m: &SpaceForm, r: f64) -> f64 {
    let s = m.kappa();
    if m.is_compact() {
        (s * r).sin() / s
    } else {
        (s * r).sinh() / s
    }
}

/// m_M without range checks (zero at the poles of a sphere).
pub(crate) fn volume_density_unchecked(m: &SpaceForm, r: f64) -> f64 {
    sphere_area(m.dim) * sin_k(m, r).abs().powi(m.dim as i32 - 1)
}

/// m_M(r) = |S^{n-1}| (sin(√k r)/√k)^{n-1}.
pub fn volume_density(m: &SpaceForm, r: f64) -> Result<f64> {
    m.check_radius(r)?;
    Ok(volume_density_unchecked(m, r))
}

/// z = sin²(√k r/2); equals -sinh²(√|k| r/2) for k < 0.
pub fn z_of_r(m: &SpaceForm, r: f64) -> Result<f64> {
    let ok = r.is_finite() && r >= 0.0 && (!m.is_compact() || r <= m.diam());
    if !ok {
        return Err(Error::DomainError(format!("r = {r} outside [0, {}]", m.diam())));
    }
    let h = 0.5 * m.kappa() * r;
    Ok(if m.is_compact() { h.sin().powi(2) } else { -h.sinh().powi(2) })
}

/// Inverse of [`z_of_r`].
pub fn r_of_z(m: &SpaceForm, z: f64) -> Result<f64> {
    let s = m.kappa();
    if m.is_compact() {
        if !(0.0..=1.0).contains(&z) {
            return Err(Error::DomainError(format!("z = {z} outside [0, 1]")));
        }
        Ok(2.0 * z.sqrt().asin() / s)
    } else {
        if !(z <= 0.0 && z.is_finite()) {
            return Err(Error::DomainError(format!("z = {z} must be <= 0")));
        }
        Ok(2.0 * (-z).sqrt().asinh() / s)
    }
}

/// Radial sample points with μ_M-quadrature weights m_M(r_i)·Δ_i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    pub points: Vec<f64>,
    pub mu_weights: Vec<f64>,
    pub r_max: f64,
}

impl RadialGrid {
    /// Grid from explicit points and plain (dr) quadrature weights.
    pub fn from_dr_weights(m: &SpaceForm, points: Vec<f64>, dr: &[f64], r_max: f64) -> Result<Self> {
        if points.len() != dr.len() {
            return Err(Error::InvalidParameter("points/weights length mismatch".into()));
        }
        if m.is_compact() && r_max > m.diam() * (1.0 + 1e-14) {
            return Err(Error::DomainError(format!(
                "r_max = {r_max} exceeds diam = {}",
                m.diam()
            )));
        }
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(Error::DomainError(format!("r_max = {r_max}")));
        }
        let ascending = points.windows(2).all(|p| p[0] < p[1]);
        let inside = points.iter().all(|&r| r > 0.0 && r <= r_max);
        if !ascending || !inside {
            return Err(Error::InvalidParameter("grid points must ascend inside (0, r_max]".into()));
        }
        let mu_weights: Vec<f64> = points
            .iter()
            .zip(dr)
            .map(|(&r, &w)| w * volume_density_unchecked(m, r))
            .collect();
        if mu_weights.iter().any(|&w| !(w > 0.0)) {
            return Err(Error::InvalidParameter("non-positive quadrature weight".into()));
        }
        Ok(Self { points, mu_weights, r_max })
    }

    /// n-point Gauss–Legendre rule on (0, r_max).
    pub fn gauss_legendre(m: &SpaceForm, r_max: f64, n: usize) -> Result<Self> {
        let (x, w) = gauss_legendre_on(0.0, r_max, n);
        Self::from_dr_weights(m, x, &w, r_max)
    }

    /// `panels` equal panels on (0, r_max), each with a `per_panel`-point
    /// Gauss–Legendre rule.
    pub fn composite(m: &SpaceForm, r_max: f64, panels: usize, per_panel: usize) -> Result<Self> {
        let width = r_max / panels as f64;
        let mut x = Vec::with_capacity(panels * per_panel);
        let mut w = Vec::with_capacity(panels * per_panel);
        for p in 0..panels {
            let (px, pw) = gauss_legendre_on(p as f64 * width, (p + 1) as f64 * width, per_panel);
            x.extend(px);
            w.extend(pw);
        }
        Self::from_dr_weights(m, x, &w, r_max)
    }

    /// Cell-centred uniform grid r_i = (i + 1/2) h, h = r_max/n.
    pub fn staggered(m: &SpaceForm, r_max: f64, n: usize) -> Result<Self> {
        let h = r_max / n as f64;
        let x: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) * h).collect();
        Self::from_dr_weights(m, x, &vec![h; n], r_max)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// ∫ f dμ over the grid.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        values.iter().zip(&self.mu_weights).map(|(v, w)| v * w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_areas() {
        assert!((sphere_area(2) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(3) - 4.0 * PI).abs() < 1e-13);
        assert!((sphere_area(4) - 2.0 * PI * PI).abs() < 1e-13);
    }

    #[test]
    fn densities() {
        let s = SpaceForm::new(2, 1.0).unwrap();
        assert!((volume_density(&s, PI / 2.0).unwrap() - 2.0 * PI).abs() < 1e-14);
        let h = SpaceForm::new(2, -1.0).unwrap();
        assert!((volume_density(&h, 1.0).unwrap() - 7.384_006_872_882_645).abs() < 1e-12);
        let s3 = SpaceForm::new(3, 4.0).unwrap();
        assert!((volume_density(&s3, PI / 4.0).unwrap() - PI).abs() < 1e-13);
        assert!(matches!(volume_density(&s, 4.0), Err(Error::DomainError(_))));
        assert!(matches!(volume_density(&h, 0.0), Err(Error::DomainError(_))));
    }

    #[test]
    fn flat_limit_of_density() {
        for (n, k) in [(2usize, 1.0), (3, -4.0), (4, 4.0)] {
            let m = SpaceForm::new(n, k).unwrap();
            let dev = |r: f64| volume_density(&m, r).unwrap() / (sphere_area(n) * r.powi(n as i32 - 1)) - 1.0;
            let (d3, d4) = (dev(1e-3), dev(1e-4));
            // O(r²): the deviation drops by ~100 per decade
            assert!(d3.abs() < 1e-5);
            let ratio = d3 / d4;
            assert!((ratio - 100.0).abs() < 1.0, "n={n} k={k} ratio={ratio}");
        }
    }

    #[test]
    fn z_coordinate() {
        let s = SpaceForm::new(2, 1.0).unwrap();
        assert!((z_of_r(&s, PI).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(z_of_r(&s, 0.0).unwrap(), 0.0);
        let h = SpaceForm::new(2, -1.0).unwrap();
        assert!((z_of_r(&h, 1.0).unwrap() + 0.271_540_317_407_621_9).abs() < 1e-14);
        for &z in &[0.01, 0.3, 0.77, 0.999] {
            assert!((z_of_r(&s, r_of_z(&s, z).unwrap()).unwrap() - z).abs() < 1e-14);
            assert!((z_of_r(&h, r_of_z(&h, -z * 10.0).unwrap()).unwrap() + z * 10.0).abs() < 1e-14 * 10.0);
        }
        let mut prev = 0.0;
        for i in 1..100 {
            let r = i as f64 * 0.03;
            let zs = z_of_r(&s, r).unwrap();
            let zh = z_of_r(&h, r).unwrap();
            assert!(zs > prev);
            assert!(zh < 0.0 && zh < z_of_r(&h, r - 0.03).unwrap());
            prev = zs;
        }
    }

    #[test]
    fn total_volume_of_sphere() {
        let s = SpaceForm::new(2, 1.0).unwrap();
        let g = RadialGrid::gauss_legendre(&s, PI, 40).unwrap();
        let vol: f64 = g.mu_weights.iter().sum();
        assert!((vol - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn config_json() {
        let text = r#"{"base":{"dim":3,"curvature":1.0,"signature":"riemannian"},
                       "factors":[{"dim":2,"curvature":1.0}],"mass":1.0}"#;
        let cfg = ProductConfig::from_json(text).unwrap();
        assert_eq!(cfg.factors.len(), 1);
        assert_eq!(cfg.base.signature, Signature::Riemannian);
        let back = ProductConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
        let bad = [
            r#"{"base":{"dim":3,"curvature":0.0},"factors":[],"mass":1.0}"#,
            r#"{"base":{"dim":3,"curvature":1.0},"factors":[],"mass":0.0}"#,
            r#"{"base":{"dim":3,"curvature":1.0},"factors":[{"dim":2,"curvature":1.0,"signature":"lorentzian"}],"mass":1.0}"#,
            r#"{"base":{"dim":1,"curvature":1.0},"mass":1.0}"#,
            r#"{"base":{"dim":3,"curvature":1.0}}"#,
            "not json",
        ];
        for b in bad {
            assert!(matches!(ProductConfig::from_json(b), Err(Error::ConfigError(_))), "{b}");
        }
    }
}
