//! Truncated Taylor arithmetic.
//!
//! `Jet<N>` carries the coefficients c0..c_{N-1} of a univariate Taylor
//! polynomial and propagates them exactly through arithmetic and the
//! elementary functions, which is how order-6 coefficients are extracted
//! without the cancellation that kills finite differences at that order.
//! `Jet2<NR, NS>` is the bivariate analogue truncated at degree NR-1 in the
//! first variable and NS-1 in the second.

use crate::real::Real;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<const N: usize> {
    pub c: [f64; N],
}

impl<const N: usize> Jet<N> {
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        Jet { c }
    }

    /// The expansion variable: value `v` plus a unit first-order part.
    pub fn variable(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        if N > 1 {
            c[1] = 1.0;
        }
        Jet { c }
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.c[k]
    }

    /// k-th derivative at the expansion point, i.e. k! * c_k.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut f = 1.0;
        for j in 2..=k {
            f *= j as f64;
        }
        self.c[k] * f
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.c;
        for k in 0..N {
            c[k] += o.c[k];
        }
        Jet { c }
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut c = self.c;
        for k in 0..N {
            c[k] -= o.c[k];
        }
        Jet { c }
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut c = self.c;
        for v in c.iter_mut() {
            *v = -*v;
        }
        Jet { c }
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut c = [0.0; N];
        for i in 0..N {
            if self.c[i] == 0.0 {
                continue;
            }
            for j in 0..N - i {
                c[i + j] += self.c[i] * o.c[j];
            }
        }
        Jet { c }
    }
}

impl<const N: usize> Div for Jet<N> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let mut c = [0.0; N];
        let b0 = o.c[0];
        for k in 0..N {
            let mut acc = self.c[k];
            for j in 0..k {
                acc -= c[j] * o.c[k - j];
            }
            c[k] = acc / b0;
        }
        Jet { c }
    }
}

impl<const N: usize> Real for Jet<N> {
    fn from_f64(v: f64) -> Self {
        Jet::constant(v)
    }

    fn val(self) -> f64 {
        self.c[0]
    }

    fn exp(self) -> Self {
        // e' = a' e  =>  k e_k = sum_{j=1..k} j a_j e_{k-j}
        let mut e = [0.0; N];
        e[0] = self.c[0].exp();
        for k in 1..N {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (j as f64) * self.c[j] * e[k - j];
            }
            e[k] = acc / k as f64;
        }
        Jet { c: e }
    }

    fn sqrt(self) -> Self {
        // s^2 = a  =>  s_k = (a_k - sum_{j=1..k-1} s_j s_{k-j}) / (2 s_0)
        let mut s = [0.0; N];
        s[0] = self.c[0].sqrt();
        for k in 1..N {
            let mut acc = self.c[k];
            for j in 1..k {
                acc -= s[j] * s[k - j];
            }
            s[k] = acc / (2.0 * s[0]);
        }
        Jet { c: s }
    }

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    fn sinh(self) -> Self {
        self.sinh_cosh().0
    }

    fn cosh(self) -> Self {
        self.sinh_cosh().1
    }

    fn recip(self) -> Self {
        Jet::constant(1.0) / self
    }
}

impl<const N: usize> Jet<N> {
    /// sin and cos propagated jointly via s' = a' c, c' = -a' s.
    pub fn sin_cos(self) -> (Self, Self) {
        let mut s = [0.0; N];
        let mut c = [0.0; N];
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for k in 1..N {
            let (mut sa, mut ca) = (0.0, 0.0);
            for j in 1..=k {
                sa += (j as f64) * self.c[j] * c[k - j];
                ca -= (j as f64) * self.c[j] * s[k - j];
            }
            s[k] = sa / k as f64;
            c[k] = ca / k as f64;
        }
        (Jet { c: s }, Jet { c })
    }

    /// sinh and cosh propagated jointly.
    pub fn sinh_cosh(self) -> (Self, Self) {
        let mut s = [0.0; N];
        let mut c = [0.0; N];
        s[0] = self.c[0].sinh();
        c[0] = self.c[0].cosh();
        for k in 1..N {
            let (mut sa, mut ca) = (0.0, 0.0);
            for j in 1..=k {
                sa += (j as f64) * self.c[j] * c[k - j];
                ca += (j as f64) * self.c[j] * s[k - j];
            }
            s[k] = sa / k as f64;
            c[k] = ca / k as f64;
        }
        (Jet { c: s }, Jet { c })
    }
}

/// Bivariate jet: coefficients of r^i s^j for i < NR, j < NS.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2<const NR: usize, const NS: usize> {
    pub c: [[f64; NS]; NR],
}

impl<const NR: usize, const NS: usize> Jet2<NR, NS> {
    pub fn zero() -> Self {
        Jet2 {
            c: [[0.0; NS]; NR],
        }
    }

    pub fn constant(v: f64) -> Self {
        let mut j = Self::zero();
        j.c[0][0] = v;
        j
    }

    /// The first expansion variable (r) with value 0.
    pub fn var_r() -> Self {
        let mut j = Self::zero();
        if NR > 1 {
            j.c[1][0] = 1.0;
        }
        j
    }

    /// The second expansion variable (s) with value 0.
    pub fn var_s() -> Self {
        let mut j = Self::zero();
        if NS > 1 {
            j.c[0][1] = 1.0;
        }
        j
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.c[i][j]
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|row| row.iter().all(|&v| v == 0.0))
    }

    /// Composes an analytic function given by the Taylor coefficients `g` of
    /// g(x) around x = c00 with this jet: result = sum_k g[k] * (self - c00)^k.
    fn compose(self, g: &[f64]) -> Self {
        let mut delta = self;
        delta.c[0][0] = 0.0;
        let mut acc = Self::constant(g[g.len() - 1]);
        for k in (0..g.len() - 1).rev() {
            acc = acc * delta;
            acc.c[0][0] += g[k];
        }
        acc
    }

    /// Maximum number of nonvanishing powers of a zero-constant jet, plus one.
    fn nilpotency() -> usize {
        NR + NS - 1
    }
}

impl<const NR: usize, const NS: usize> Add for Jet2<NR, NS> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.c;
        for i in 0..NR {
            for j in 0..NS {
                c[i][j] += o.c[i][j];
            }
        }
        Jet2 { c }
    }
}

impl<const NR: usize, const NS: usize> Sub for Jet2<NR, NS> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut c = self.c;
        for i in 0..NR {
            for j in 0..NS {
                c[i][j] -= o.c[i][j];
            }
        }
        Jet2 { c }
    }
}

impl<const NR: usize, const NS: usize> Neg for Jet2<NR, NS> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut c = self.c;
        for row in c.iter_mut() {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        Jet2 { c }
    }
}

impl<const NR: usize, const NS: usize> Mul for Jet2<NR, NS> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut c = [[0.0; NS]; NR];
        for i1 in 0..NR {
            for j1 in 0..NS {
                let a = self.c[i1][j1];
                if a == 0.0 {
                    continue;
                }
                for i2 in 0..NR - i1 {
                    for j2 in 0..NS - j1 {
                        c[i1 + i2][j1 + j2] += a * o.c[i2][j2];
                    }
                }
            }
        }
        Jet2 { c }
    }
}

impl<const NR: usize, const NS: usize> Div for Jet2<NR, NS> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<const NR: usize, const NS: usize> Real for Jet2<NR, NS> {
    fn from_f64(v: f64) -> Self {
        Self::constant(v)
    }

    fn val(self) -> f64 {
        self.c[0][0]
    }

    fn exp(self) -> Self {
        let x0 = self.c[0][0];
        let e0 = x0.exp();
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        let mut fact = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *gk = e0 / fact;
        }
        self.compose(&g)
    }

    fn sqrt(self) -> Self {
        let x0 = self.c[0][0];
        let r0 = x0.sqrt();
        let n = Self::nilpotency();
        // Taylor of sqrt(x0 + d) = r0 * (1 + d/x0)^{1/2}
        let mut g = vec![0.0; n + 1];
        let mut binom = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                binom *= (0.5 - (k as f64 - 1.0)) / k as f64;
            }
            *gk = r0 * binom / x0.powi(k as i32);
        }
        self.compose(&g)
    }

    fn sin(self) -> Self {
        let x0 = self.c[0][0];
        let (s0, c0) = x0.sin_cos();
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        let mut fact = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *gk = match k % 4 {
                0 => s0,
                1 => c0,
                2 => -s0,
                _ => -c0,
            } / fact;
        }
        self.compose(&g)
    }

    fn cos(self) -> Self {
        let x0 = self.c[0][0];
        let (s0, c0) = x0.sin_cos();
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        let mut fact = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *gk = match k % 4 {
                0 => c0,
                1 => -s0,
                2 => -c0,
                _ => s0,
            } / fact;
        }
        self.compose(&g)
    }

    fn sinh(self) -> Self {
        let x0 = self.c[0][0];
        let (s0, c0) = (x0.sinh(), x0.cosh());
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        let mut fact = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *gk = if k % 2 == 0 { s0 } else { c0 } / fact;
        }
        self.compose(&g)
    }

    fn cosh(self) -> Self {
        let x0 = self.c[0][0];
        let (s0, c0) = (x0.sinh(), x0.cosh());
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        let mut fact = 1.0;
        for (k, gk) in g.iter_mut().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            *gk = if k % 2 == 0 { c0 } else { s0 } / fact;
        }
        self.compose(&g)
    }

    fn recip(self) -> Self {
        let x0 = self.c[0][0];
        let n = Self::nilpotency();
        let mut g = vec![0.0; n + 1];
        for (k, gk) in g.iter_mut().enumerate() {
            *gk = if k % 2 == 0 { 1.0 } else { -1.0 } / x0.powi(k as i32 + 1);
        }
        self.compose(&g)
    }
}

impl<const NR: usize, const NS: usize> Jet2<NR, NS> {
    /// Guard against misuse of `compose` on jets with large deltas.
    pub fn debug_is_zero(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type J9 = Jet<9>;

    #[test]
    fn exp_series() {
        let x = J9::variable(0.0);
        let e = x.exp();
        let mut fact = 1.0;
        for k in 0..9 {
            if k > 0 {
                fact *= k as f64;
            }
            assert_relative_eq!(e.c[k], 1.0 / fact, epsilon = 1e-14);
        }
    }

    #[test]
    fn sin_cos_around_point() {
        let x0 = 0.7;
        let x = J9::variable(x0);
        let (s, c) = x.sin_cos();
        assert_relative_eq!(s.c[0], x0.sin(), epsilon = 1e-14);
        assert_relative_eq!(s.c[1], x0.cos(), epsilon = 1e-14);
        assert_relative_eq!(c.c[2], -x0.cos() / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Jet::<6> {
            c: [1.3, -0.2, 0.05, 0.7, -0.3, 0.11],
        };
        let b = Jet::<6> {
            c: [0.8, 0.4, -0.9, 0.2, 0.6, -0.05],
        };
        let q = (a * b) / b;
        for k in 0..6 {
            assert_relative_eq!(q.c[k], a.c[k], epsilon = 1e-12);
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let a = Jet::<8> {
            c: [2.0, 0.3, -0.4, 0.1, 0.2, -0.6, 0.05, 0.8],
        };
        let r = a.sqrt();
        let sq = r * r;
        for k in 0..8 {
            assert_relative_eq!(sq.c[k], a.c[k], epsilon = 1e-12);
        }
    }

    #[test]
    fn cosh_sinh_identity() {
        let x = Jet::<9>::variable(0.3);
        let (s, c) = x.sinh_cosh();
        let one = c * c - s * s;
        assert_relative_eq!(one.c[0], 1.0, epsilon = 1e-13);
        for k in 1..9 {
            assert_relative_eq!(one.c[k], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn bivariate_product_and_exp() {
        type J = Jet2<4, 8>;
        let r = J::var_r();
        let s = J::var_s();
        // (1 + r s)^2 = 1 + 2 r s + r^2 s^2
        let p = (J::constant(1.0) + r * s) * (J::constant(1.0) + r * s);
        assert_relative_eq!(p.coeff(0, 0), 1.0);
        assert_relative_eq!(p.coeff(1, 1), 2.0);
        assert_relative_eq!(p.coeff(2, 2), 1.0);
        // exp(r + s): coefficient of r^i s^j is 1/(i! j!)
        let e = (r + s).exp();
        assert_relative_eq!(e.coeff(2, 3), 1.0 / (2.0 * 6.0), epsilon = 1e-13);
        assert_relative_eq!(e.coeff(3, 7), 1.0 / (6.0 * 5040.0), epsilon = 1e-13);
    }

    #[test]
    fn bivariate_sqrt_recip() {
        type J = Jet2<4, 6>;
        let r = J::var_r();
        let s = J::var_s();
        let a = J::constant(2.0) + r + s * s * J::constant(0.5) + r * s;
        let b = a.sqrt() * a.sqrt();
        let i = a * a.recip();
        for v in 0..4 {
            for w in 0..6 {
                assert_relative_eq!(b.coeff(v, w), a.coeff(v, w), epsilon = 1e-12);
                let expect = if v == 0 && w == 0 { 1.0 } else { 0.0 };
                assert_relative_eq!(i.coeff(v, w), expect, epsilon = 1e-12);
            }
        }
    }
}
