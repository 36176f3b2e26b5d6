//! Scalar abstraction shared by plain `f64` evaluation and truncated Taylor
//! (jet) evaluation, so the same geometric pipelines can run in either mode.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arithmetic with the elementary functions needed by the surface pipelines.
pub trait Real:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(v: f64) -> Self;
    /// Value part (0th-order coefficient for jets).
    fn val(self) -> f64;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn recip(self) -> Self;
}

impl Real for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn val(self) -> f64 {
        self
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn recip(self) -> Self {
        1.0 / self
    }
}

/// Complex number over any `Real` scalar; used for the C^2 view of R^4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cx<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> Cx<T> {
    pub fn new(re: T, im: T) -> Self {
        Cx { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cx::new(T::from_f64(re), T::from_f64(im))
    }

    /// e^{i a} for a real scalar argument.
    pub fn cis(a: T) -> Self {
        Cx::new(a.cos(), a.sin())
    }

    pub fn conj(self) -> Self {
        Cx::new(self.re, -self.im)
    }

    pub fn scale(self, s: T) -> Self {
        Cx::new(self.re * s, self.im * s)
    }

    /// Multiplication by i.
    pub fn mul_i(self) -> Self {
        Cx::new(-self.im, self.re)
    }

    pub fn mul(self, o: Self) -> Self {
        Cx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    pub fn add(self, o: Self) -> Self {
        Cx::new(self.re + o.re, self.im + o.im)
    }

    pub fn norm2(self) -> T {
        self.re * self.re + self.im * self.im
    }
}
