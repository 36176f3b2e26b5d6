//! Sparse trigonometric polynomials on the parameter torus.
//!
//! Every cataloged normal field is a short combination of
//! cos/sin(m1*theta1 + m2*theta2), so fields are stored exactly in that
//! form. Derivatives, the induced Laplacian and L2 pairings are then exact
//! operations on the mode list, which is what makes the eigenvalue checks
//! sharp instead of grid-limited.

use std::collections::BTreeMap;
use std::f64::consts::PI;

/// One mode: a*cos(m1 t1 + m2 t2) + b*sin(m1 t1 + m2 t2), keyed canonically
/// with m1 > 0, or m1 == 0 and m2 >= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigTerm {
    pub m1: i32,
    pub m2: i32,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigPoly {
    terms: Vec<TrigTerm>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        TrigPoly { terms: vec![] }
    }

    pub fn constant(v: f64) -> Self {
        TrigPoly::from_terms(vec![TrigTerm {
            m1: 0,
            m2: 0,
            a: v,
            b: 0.0,
        }])
    }

    /// a*cos(m1 t1 + m2 t2)
    pub fn cos(m1: i32, m2: i32, a: f64) -> Self {
        TrigPoly::from_terms(vec![TrigTerm { m1, m2, a, b: 0.0 }])
    }

    /// b*sin(m1 t1 + m2 t2)
    pub fn sin(m1: i32, m2: i32, b: f64) -> Self {
        TrigPoly::from_terms(vec![TrigTerm { m1, m2, a: 0.0, b }])
    }

    pub fn from_terms(terms: Vec<TrigTerm>) -> Self {
        let mut map: BTreeMap<(i32, i32), (f64, f64)> = BTreeMap::new();
        for t in terms {
            let (m1, m2, a, b) = canonicalize(t.m1, t.m2, t.a, t.b);
            let e = map.entry((m1, m2)).or_insert((0.0, 0.0));
            e.0 += a;
            e.1 += b;
        }
        let terms = map
            .into_iter()
            .filter(|&(_, (a, b))| a != 0.0 || b != 0.0)
            .map(|((m1, m2), (a, b))| TrigTerm { m1, m2, a, b })
            .collect();
        TrigPoly { terms }
    }

    pub fn terms(&self) -> &[TrigTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, t1: f64, t2: f64) -> f64 {
        let mut v = 0.0;
        for t in &self.terms {
            let p = t.m1 as f64 * t1 + t.m2 as f64 * t2;
            v += t.a * p.cos() + t.b * p.sin();
        }
        v
    }

    pub fn add(&self, o: &TrigPoly) -> TrigPoly {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&o.terms);
        TrigPoly::from_terms(terms)
    }

    pub fn scale(&self, s: f64) -> TrigPoly {
        TrigPoly {
            terms: self
                .terms
                .iter()
                .map(|t| TrigTerm {
                    m1: t.m1,
                    m2: t.m2,
                    a: t.a * s,
                    b: t.b * s,
                })
                .collect(),
        }
    }

    pub fn sub(&self, o: &TrigPoly) -> TrigPoly {
        self.add(&o.scale(-1.0))
    }

    /// Partial derivative in theta1.
    pub fn d1(&self) -> TrigPoly {
        self.derive(|t| t.m1)
    }

    /// Partial derivative in theta2.
    pub fn d2(&self) -> TrigPoly {
        self.derive(|t| t.m2)
    }

    fn derive(&self, m_of: impl Fn(&TrigTerm) -> i32) -> TrigPoly {
        TrigPoly::from_terms(
            self.terms
                .iter()
                .map(|t| {
                    let m = m_of(t) as f64;
                    TrigTerm {
                        m1: t.m1,
                        m2: t.m2,
                        a: t.b * m,
                        b: -t.a * m,
                    }
                })
                .collect(),
        )
    }

    /// Induced Laplacian on the flat torus of the target geometry:
    /// -(1/2)(d11 + d22), i.e. each mode scales by (m1^2 + m2^2)/2.
    pub fn laplacian_l(&self) -> TrigPoly {
        TrigPoly {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mu = (t.m1 * t.m1 + t.m2 * t.m2) as f64 / 2.0;
                    TrigTerm {
                        m1: t.m1,
                        m2: t.m2,
                        a: t.a * mu,
                        b: t.b * mu,
                    }
                })
                .collect(),
        }
    }

    /// Exact integral of p*q over the parameter torus against d(theta)^2
    /// (no volume factor).
    pub fn param_inner(&self, o: &TrigPoly) -> f64 {
        let mut acc = 0.0;
        for t in &self.terms {
            for u in &o.terms {
                if t.m1 == u.m1 && t.m2 == u.m2 {
                    if t.m1 == 0 && t.m2 == 0 {
                        acc += 4.0 * PI * PI * t.a * u.a;
                    } else {
                        acc += 2.0 * PI * PI * (t.a * u.a + t.b * u.b);
                    }
                }
            }
        }
        acc
    }

    /// Sup-norm bound: sum of mode amplitudes.
    pub fn amplitude_bound(&self) -> f64 {
        self.terms.iter().map(|t| t.a.hypot(t.b)).sum()
    }

    /// Shift arguments: p(theta1 + a1, theta2 + a2).
    pub fn shifted(&self, a1: f64, a2: f64) -> TrigPoly {
        TrigPoly::from_terms(
            self.terms
                .iter()
                .map(|t| {
                    let d = t.m1 as f64 * a1 + t.m2 as f64 * a2;
                    let (sd, cd) = d.sin_cos();
                    TrigTerm {
                        m1: t.m1,
                        m2: t.m2,
                        a: t.a * cd + t.b * sd,
                        b: -t.a * sd + t.b * cd,
                    }
                })
                .collect(),
        )
    }
}

fn canonicalize(m1: i32, m2: i32, a: f64, b: f64) -> (i32, i32, f64, f64) {
    if m1 < 0 || (m1 == 0 && m2 < 0) {
        (-m1, -m2, a, -b)
    } else {
        (m1, m2, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_matches_closed_form() {
        // p = 3 cos(t1 + 2 t2): d1 = -3 sin(t1 + 2 t2), d2 = -6 sin(t1 + 2 t2)
        let p = TrigPoly::cos(1, 2, 3.0);
        let (t1, t2) = (0.4, 1.1);
        assert!((p.d1().eval(t1, t2) + 3.0 * (t1 + 2.0 * t2).sin()).abs() < 1e-14);
        assert!((p.d2().eval(t1, t2) + 6.0 * (t1 + 2.0 * t2).sin()).abs() < 1e-14);
    }

    #[test]
    fn canonical_negative_modes() {
        // sin(-t1 + t2) = -sin(t1 - t2)
        let p = TrigPoly::sin(-1, 1, 1.0);
        assert!((p.eval(0.3, 0.8) - (0.8f64 - 0.3).sin()).abs() < 1e-14);
        let q = TrigPoly::sin(1, -1, -1.0);
        assert_eq!(p, q);
    }

    #[test]
    fn laplacian_eigenmodes() {
        let p = TrigPoly::cos(1, 1, 1.0);
        let lp = p.laplacian_l();
        // mode (1,1): eigenvalue 1
        assert_eq!(lp, p);
        let q = TrigPoly::sin(1, 0, 2.0);
        assert_eq!(q.laplacian_l(), q.scale(0.5));
    }

    #[test]
    fn inner_product_orthogonality() {
        let p = TrigPoly::cos(1, 1, 1.0);
        let q = TrigPoly::sin(1, 1, 1.0);
        let r = TrigPoly::cos(1, -1, 1.0);
        assert_eq!(p.param_inner(&q), 0.0);
        assert_eq!(p.param_inner(&r), 0.0);
        assert!((p.param_inner(&p) - 2.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn shift_is_translation() {
        let p = TrigPoly::from_terms(vec![
            TrigTerm {
                m1: 1,
                m2: 1,
                a: 0.7,
                b: -0.2,
            },
            TrigTerm {
                m1: 2,
                m2: -1,
                a: 0.1,
                b: 0.4,
            },
        ]);
        let s = p.shifted(0.3, -0.9);
        assert!((s.eval(1.0, 2.0) - p.eval(1.3, 1.1)).abs() < 1e-14);
    }
}
