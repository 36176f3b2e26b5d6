//! Ambient R^4 = C^2 primitives and pointwise surface geometry.
//!
//! The identification is fixed once: coordinates (x1, y1, x2, y2) with
//! z1 = x1 + i y1, z2 = x2 + i y2, and J(x1, y1, x2, y2) = (-y1, x1, -y2, x2).

use crate::real::{Cx, Real};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("degenerate metric at theta=({theta1:.6}, {theta2:.6}): det={det:.3e}")]
    DegenerateMetric { theta1: f64, theta2: f64, det: f64 },
    #[error("surface not Lagrangian at theta=({theta1:.6}, {theta2:.6}): |omega|={residual:.3e}")]
    NotLagrangian {
        theta1: f64,
        theta2: f64,
        residual: f64,
    },
}

/// Tolerance knobs shared by the geometric operations.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub metric_degeneracy: f64,
    pub lagrangian_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            metric_degeneracy: 1e-12,
            lagrangian_residual: 1e-10,
        }
    }
}

/// Vector in R^4, generic over the scalar so jets can flow through.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec4<T = f64>(pub [T; 4]);

impl<T: Real> Vec4<T> {
    pub fn zero() -> Self {
        Vec4([T::from_f64(0.0); 4])
    }

    pub fn from_cx(z1: Cx<T>, z2: Cx<T>) -> Self {
        Vec4([z1.re, z1.im, z2.re, z2.im])
    }

    pub fn z1(self) -> Cx<T> {
        Cx::new(self.0[0], self.0[1])
    }

    pub fn z2(self) -> Cx<T> {
        Cx::new(self.0[2], self.0[3])
    }

    pub fn dot(self, o: Self) -> T {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2] + self.0[3] * o.0[3]
    }

    pub fn norm2(self) -> T {
        self.dot(self)
    }

    pub fn scale(self, s: T) -> Self {
        Vec4([self.0[0] * s, self.0[1] * s, self.0[2] * s, self.0[3] * s])
    }

    pub fn add(self, o: Self) -> Self {
        Vec4([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
            self.0[3] + o.0[3],
        ])
    }

    pub fn sub(self, o: Self) -> Self {
        Vec4([
            self.0[0] - o.0[0],
            self.0[1] - o.0[1],
            self.0[2] - o.0[2],
            self.0[3] - o.0[3],
        ])
    }

    /// The complex structure J, i.e. multiplication by i on both factors.
    pub fn j(self) -> Self {
        Vec4([-self.0[1], self.0[0], -self.0[3], self.0[2]])
    }

    /// Standard symplectic form omega(u, v) = <Ju, v>.
    pub fn omega(self, o: Self) -> T {
        self.j().dot(o)
    }
}

impl Vec4<f64> {
    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn map_f64(self, f: impl Fn(f64) -> f64) -> Self {
        Vec4([f(self.0[0]), f(self.0[1]), f(self.0[2]), f(self.0[3])])
    }
}

/// Position and derivatives of an immersion at one parameter point.
#[derive(Debug, Clone, Copy)]
pub struct TorusEval<T = f64> {
    pub x: Vec4<T>,
    pub x1: Vec4<T>,
    pub x2: Vec4<T>,
    pub x11: Vec4<T>,
    pub x12: Vec4<T>,
    pub x22: Vec4<T>,
}

/// First fundamental form with determinant and inverse.
#[derive(Debug, Clone, Copy)]
pub struct FirstFundamentalForm {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
    pub det: f64,
    pub inv11: f64,
    pub inv12: f64,
    pub inv22: f64,
}

impl FirstFundamentalForm {
    pub fn new(g11: f64, g12: f64, g22: f64) -> Self {
        let det = g11 * g22 - g12 * g12;
        FirstFundamentalForm {
            g11,
            g12,
            g22,
            det,
            inv11: g22 / det,
            inv12: -g12 / det,
            inv22: g11 / det,
        }
    }
}

/// Generic metric data valid for jet scalars as well.
#[derive(Debug, Clone, Copy)]
pub struct Metric<T> {
    pub g11: T,
    pub g12: T,
    pub g22: T,
    pub det: T,
    pub inv11: T,
    pub inv12: T,
    pub inv22: T,
}

impl<T: Real> Metric<T> {
    pub fn from_tangents(x1: Vec4<T>, x2: Vec4<T>) -> Self {
        let g11 = x1.dot(x1);
        let g12 = x1.dot(x2);
        let g22 = x2.dot(x2);
        let det = g11 * g22 - g12 * g12;
        let idet = det.recip();
        Metric {
            g11,
            g12,
            g22,
            det,
            inv11: g22 * idet,
            inv12: -g12 * idet,
            inv22: g11 * idet,
        }
    }
}

/// Removes the span of the tangents from `w` using the metric inverse.
pub fn project_normal<T: Real>(m: &Metric<T>, x1: Vec4<T>, x2: Vec4<T>, w: Vec4<T>) -> Vec4<T> {
    let c1 = w.dot(x1);
    let c2 = w.dot(x2);
    let a1 = m.inv11 * c1 + m.inv12 * c2;
    let a2 = m.inv12 * c1 + m.inv22 * c2;
    w.sub(x1.scale(a1)).sub(x2.scale(a2))
}

/// Mean curvature vector from the pointwise 2-jet of the immersion.
pub fn mean_curvature_from_eval<T: Real>(e: &TorusEval<T>, m: &Metric<T>) -> Vec4<T> {
    let h_raw = e
        .x11
        .scale(m.inv11)
        .add(e.x12.scale(m.inv12 + m.inv12))
        .add(e.x22.scale(m.inv22));
    project_normal(m, e.x1, e.x2, h_raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_squares_to_minus_one() {
        let v = Vec4([1.0, 2.0, 3.0, 4.0]);
        let jj = v.j().j();
        for k in 0..4 {
            assert_eq!(jj.0[k], -v.0[k]);
        }
    }

    #[test]
    fn omega_is_antisymmetric() {
        let u = Vec4([0.3, -1.2, 0.7, 2.0]);
        let v = Vec4([1.1, 0.4, -0.6, 0.9]);
        assert!((u.omega(v) + v.omega(u)).abs() < 1e-15);
        assert!(u.omega(u).abs() < 1e-15);
    }

    #[test]
    fn complex_view_roundtrip() {
        let v = Vec4([0.1, 0.2, 0.3, 0.4]);
        let w = Vec4::from_cx(v.z1(), v.z2());
        assert_eq!(v, w);
        // J is multiplication by i in the complex view
        let ji = Vec4::from_cx(v.z1().mul_i(), v.z2().mul_i());
        assert_eq!(v.j(), ji);
    }
}
