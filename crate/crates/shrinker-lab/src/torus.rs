//! Immersed parameter tori in R^4 and the pointwise geometric operations.

use crate::geom::{
    mean_curvature_from_eval, project_normal, FirstFundamentalForm, GeomError, Metric, TorusEval,
    Tolerances, Vec4,
};
use crate::quad::{KahanSum, QuadratureGrid};
use std::sync::Arc;

/// How the evaluator was built; sampled backends are exact trigonometric
/// interpolants of their sample set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Backend {
    Analytic,
    FourierSampled(usize),
}

type Evaluator = dyn Fn(f64, f64) -> TorusEval + Send + Sync;

/// A doubly periodic immersion with exact first and second derivatives.
#[derive(Clone)]
pub struct ImmersedTorus {
    eval: Arc<Evaluator>,
    backend: Backend,
    tol: Tolerances,
}

impl ImmersedTorus {
    pub fn new(eval: Arc<Evaluator>, backend: Backend) -> Self {
        ImmersedTorus {
            eval,
            backend,
            tol: Tolerances::default(),
        }
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn eval(&self, theta1: f64, theta2: f64) -> TorusEval {
        (self.eval)(theta1, theta2)
    }

    fn metric_at(&self, theta1: f64, theta2: f64) -> Result<(TorusEval, Metric<f64>), GeomError> {
        let e = self.eval(theta1, theta2);
        let m = Metric::from_tangents(e.x1, e.x2);
        if m.det <= self.tol.metric_degeneracy {
            return Err(GeomError::DegenerateMetric {
                theta1,
                theta2,
                det: m.det,
            });
        }
        Ok((e, m))
    }

    /// g_ij = <d_i X, d_j X> with determinant and inverse.
    pub fn first_fundamental_form(
        &self,
        theta1: f64,
        theta2: f64,
    ) -> Result<FirstFundamentalForm, GeomError> {
        let (_, m) = self.metric_at(theta1, theta2)?;
        Ok(FirstFundamentalForm::new(m.g11, m.g12, m.g22))
    }

    /// Mean curvature vector H = g^{ij} (d_ij X)^perp.
    pub fn mean_curvature_vector(&self, theta1: f64, theta2: f64) -> Result<Vec4, GeomError> {
        let (e, m) = self.metric_at(theta1, theta2)?;
        Ok(mean_curvature_from_eval(&e, &m))
    }

    /// Removes the tangential part of `w` at the given point.
    pub fn normal_project(&self, theta1: f64, theta2: f64, w: Vec4) -> Result<Vec4, GeomError> {
        let (e, m) = self.metric_at(theta1, theta2)?;
        Ok(project_normal(&m, e.x1, e.x2, w))
    }

    /// Integral of the scalar field `f` against the induced volume form.
    pub fn surface_integral(
        &self,
        grid: &QuadratureGrid,
        mut f: impl FnMut(f64, f64) -> f64,
    ) -> Result<f64, GeomError> {
        self.integrate_with_eval(grid, |t1, t2, _| f(t1, t2))
    }

    /// Same, but the integrand sees the full pointwise jet (used by the
    /// Gaussian functionals to avoid double evaluation).
    pub fn integrate_with_eval(
        &self,
        grid: &QuadratureGrid,
        mut f: impl FnMut(f64, f64, &TorusEval) -> f64,
    ) -> Result<f64, GeomError> {
        let mut acc = KahanSum::new();
        for i in 0..grid.n() {
            for j in 0..grid.n() {
                let (t1, t2) = grid.node(i, j);
                let (e, m) = self.metric_at(t1, t2)?;
                acc.add(f(t1, t2, &e) * m.det.sqrt());
            }
        }
        Ok(acc.value() * grid.weight())
    }

    /// Max over nodes of |omega(d1 X, d2 X)|; zero characterizes Lagrangian.
    pub fn symplectic_residual(&self, grid: &QuadratureGrid) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..grid.n() {
            for j in 0..grid.n() {
                let (t1, t2) = grid.node(i, j);
                let e = self.eval(t1, t2);
                worst = worst.max(e.x1.omega(e.x2).abs());
            }
        }
        worst
    }

    /// Phase of the holomorphic volume form dz1 ^ dz2 on the orthonormalized
    /// tangent frame, in [0, 2pi). Errors if the point is not Lagrangian to
    /// tolerance.
    pub fn lagrangian_angle(&self, theta1: f64, theta2: f64) -> Result<f64, GeomError> {
        let (e, m) = self.metric_at(theta1, theta2)?;
        let res = e.x1.omega(e.x2).abs();
        if res > self.tol.lagrangian_residual {
            return Err(GeomError::NotLagrangian {
                theta1,
                theta2,
                residual: res,
            });
        }
        let e1 = e.x1.scale(1.0 / m.g11.sqrt());
        let p = e.x2.sub(e1.scale(e.x2.dot(e1)));
        let e2 = p.scale(1.0 / p.norm());
        // Omega(E1, E2) = det_C [[E1.z1, E2.z1], [E1.z2, E2.z2]]
        let det = e1
            .z1()
            .mul(e2.z2())
            .add(e1.z2().mul(e2.z1()).scale(-1.0));
        let ang = det.im.atan2(det.re);
        Ok(ang.rem_euclid(2.0 * std::f64::consts::PI))
    }

    /// The image under x -> scale * rot * x + shift, with exact derivatives.
    pub fn transformed(&self, rot: [[f64; 4]; 4], shift: Vec4, scale: f64) -> ImmersedTorus {
        let base = self.eval.clone();
        let apply_lin = move |v: Vec4| -> Vec4 {
            let mut out = [0.0; 4];
            for (r, row) in rot.iter().enumerate() {
                let mut acc = 0.0;
                for (c, m) in row.iter().enumerate() {
                    acc += m * v.0[c];
                }
                out[r] = acc * scale;
            }
            Vec4(out)
        };
        let backend = self.backend;
        ImmersedTorus::new(
            Arc::new(move |t1, t2| {
                let e = base(t1, t2);
                TorusEval {
                    x: apply_lin(e.x).add(shift),
                    x1: apply_lin(e.x1),
                    x2: apply_lin(e.x2),
                    x11: apply_lin(e.x11),
                    x12: apply_lin(e.x12),
                    x22: apply_lin(e.x22),
                }
            }),
            backend,
        )
        .with_tolerances(self.tol)
    }
}

impl std::fmt::Debug for ImmersedTorus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ImmersedTorus")
            .field("backend", &self.backend)
            .finish()
    }
}
