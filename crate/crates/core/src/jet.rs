//! Second-order forward-mode jets: a value with its first two derivatives
//! with respect to one real variable.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

type C = Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet {
    pub fn new(v: C, d1: C, d2: C) -> Self {
        Self { v, d1, d2 }
    }

    pub fn constant(v: C) -> Self {
        Self::new(v, C::new(0.0, 0.0), C::new(0.0, 0.0))
    }

    pub fn real(v: f64, d1: f64, d2: f64) -> Self {
        Self::new(C::new(v, 0.0), C::new(d1, 0.0), C::new(d2, 0.0))
    }

    /// The independent variable itself at `x`.
    pub fn variable(x: f64) -> Self {
        Self::real(x, 1.0, 0.0)
    }

    pub fn zero() -> Self {
        Self::constant(C::new(0.0, 0.0))
    }

    /// Real parts of (value, first, second derivative).
    pub fn re(&self) -> [f64; 3] {
        [self.v.re, self.d1.re, self.d2.re]
    }

    /// g(self) given g, g', g'' evaluated at `self.v`.
    pub fn compose(self, g: [C; 3]) -> Self {
        Self::new(g[0], g[1] * self.d1, g[2] * self.d1 * self.d1 + g[1] * self.d2)
    }

    pub fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.compose([s, c, -s])
    }

    pub fn cos(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        self.compose([c, -s, -c])
    }

    pub fn sinh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.compose([s, c, s])
    }

    pub fn cosh(self) -> Self {
        let (s, c) = (self.v.sinh(), self.v.cosh());
        self.compose([c, s, c])
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        self.compose([e, e, e])
    }

    pub fn ln(self) -> Self {
        let inv = 1.0 / self.v;
        self.compose([self.v.ln(), inv, -inv * inv])
    }

    /// self^p on the principal branch.
    pub fn powc(self, p: C) -> Self {
        let l = self.v.ln();
        let v = (p * l).exp();
        let d = p * ((p - 1.0) * l).exp();
        let dd = p * (p - 1.0) * ((p - 2.0) * l).exp();
        self.compose([v, d, dd])
    }

    pub fn powf(self, p: f64) -> Self {
        self.powc(C::new(p, 0.0))
    }

    pub fn scale(self, k: C) -> Self {
        Self::new(self.v * k, self.d1 * k, self.d2 * k)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet::new(-self.v, -self.d1, -self.d2)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        )
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let inv = 1.0 / o.v;
        let r = o.compose([inv, -inv * inv, 2.0 * inv * inv * inv]);
        self * r
    }
}

impl Add<C> for Jet {
    type Output = Jet;
    fn add(self, k: C) -> Jet {
        Jet::new(self.v + k, self.d1, self.d2)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, k: f64) -> Jet {
        self + C::new(k, 0.0)
    }
}

impl Mul<C> for Jet {
    type Output = Jet;
    fn mul(self, k: C) -> Jet {
        self.scale(k)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, k: f64) -> Jet {
        self.scale(C::new(k, 0.0))
    }
}
