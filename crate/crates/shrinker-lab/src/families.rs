//! The catalog: explicit deformation families of the Clifford torus, the
//! generator normal fields of the relevant group actions, and the spectrum
//! of the normal-bundle Laplacian.

use crate::geom::{TorusEval, Vec4};
use crate::real::{Cx, Real};
use crate::torus::{Backend, ImmersedTorus};
use crate::trig::TrigPoly;
use std::sync::Arc;
use thiserror::Error;

pub const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Clifford,
    A,
    B,
    C,
    D,
    Dilation,
}

/// A family member: the tag plus the deformation parameter (ignored by
/// `Clifford`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyId {
    pub family: Family,
    pub s: f64,
}

impl FamilyId {
    pub fn new(family: Family, s: f64) -> Self {
        FamilyId { family, s }
    }
}

/// Position and derivatives of the family immersion, generic in the scalar
/// so the same formulas run in jet arithmetic.
pub fn eval_family<T: Real>(family: Family, s: T, t1: f64, t2: f64) -> TorusEval<T> {
    let r2 = T::from_f64(SQRT2);
    let u1 = Cx::<T>::cis(T::from_f64(t1));
    let u2 = Cx::<T>::cis(T::from_f64(t2));
    let iu1 = u1.mul_i();
    let iu2 = u2.mul_i();
    // one-parameter group coefficients: z1 = a1*w1 + b1*w2, z2 = a2*w1' + b2*w2'
    // where each w is u_j or conj(u_j); handled per family below.
    let (ch, sh) = (s.cosh(), s.sinh());
    let zero = Cx::new(T::from_f64(0.0), T::from_f64(0.0));
    let scale = |c: Cx<T>| c.scale(r2);

    // For each component we produce (value, d1, d2, d11, d12, d22).
    struct Comp<T> {
        v: Cx<T>,
        d1: Cx<T>,
        d2: Cx<T>,
        d11: Cx<T>,
        d12: Cx<T>,
        d22: Cx<T>,
    }
    // component alpha * u + beta * w, where u depends on t1 with phase +1 or -1
    // and w depends on t2 with phase +1 or -1 (or vice versa, via swap).
    let comp = |alpha: T, u: Cx<T>, su: f64, beta: T, w: Cx<T>, sw: f64| -> Comp<T> {
        // d/dt of e^{i s t} is i s e^{i s t}
        let du = u.mul_i().scale(T::from_f64(su));
        let dw = w.mul_i().scale(T::from_f64(sw));
        let d2u = u.scale(T::from_f64(-su * su));
        let d2w = w.scale(T::from_f64(-sw * sw));
        Comp {
            v: u.scale(alpha).add(w.scale(beta)),
            d1: du.scale(alpha),
            d2: dw.scale(beta),
            d11: d2u.scale(alpha),
            d12: zero,
            d22: d2w.scale(beta),
        }
    };

    let zerot = T::from_f64(0.0);
    let (c1, c2) = match family {
        Family::Clifford => (
            comp(T::from_f64(1.0), u1, 1.0, zerot, u2, 1.0),
            comp(zerot, u1, 1.0, T::from_f64(1.0), u2, 1.0),
        ),
        // z1 = cosh s e^{i t1} + sinh s e^{-i t2};  z2 = sinh s e^{-i t1} + cosh s e^{i t2}
        Family::A => (
            comp(ch, u1, 1.0, sh, u2.conj(), -1.0),
            {
                let c = comp(sh, u1.conj(), -1.0, ch, u2, 1.0);
                c
            },
        ),
        // z1 = cosh s e^{i t1} + i sinh s e^{-i t2};  z2 = i sinh s e^{-i t1} + cosh s e^{i t2}
        Family::B => (
            comp_cx(
                Cx::new(ch, zerot),
                u1,
                1.0,
                Cx::new(zerot, sh),
                u2.conj(),
                -1.0,
                zero,
            ),
            comp_cx(
                Cx::new(zerot, sh),
                u1.conj(),
                -1.0,
                Cx::new(ch, zerot),
                u2,
                1.0,
                zero,
            ),
        ),
        // z1 = cosh s e^{i t1} + sinh s e^{i t2};  z2 = sinh s e^{i t1} + cosh s e^{i t2}
        Family::C => (
            comp(ch, u1, 1.0, sh, u2, 1.0),
            comp(sh, u1, 1.0, ch, u2, 1.0),
        ),
        // z1 = cosh s e^{i t1} - i sinh s e^{i t2};  z2 = i sinh s e^{i t1} + cosh s e^{i t2}
        Family::D => (
            comp_cx(
                Cx::new(ch, zerot),
                u1,
                1.0,
                Cx::new(zerot, -sh),
                u2,
                1.0,
                zero,
            ),
            comp_cx(
                Cx::new(zerot, sh),
                u1,
                1.0,
                Cx::new(ch, zerot),
                u2,
                1.0,
                zero,
            ),
        ),
        // z1 = (1/sqrt(cosh 2s)) e^{-s} e^{i t1};  z2 = (1/sqrt(cosh 2s)) e^{s} e^{i t2}
        Family::Dilation => {
            let inv = (s + s).cosh().sqrt().recip();
            let em = (-s).exp() * inv;
            let ep = s.exp() * inv;
            (
                comp(em, u1, 1.0, zerot, u2, 1.0),
                comp(zerot, u1, 1.0, ep, u2, 1.0),
            )
        }
    };

    // component with complex coefficients: alpha * u + beta * w
    fn comp_cx<T: Real>(
        alpha: Cx<T>,
        u: Cx<T>,
        su: f64,
        beta: Cx<T>,
        w: Cx<T>,
        sw: f64,
        zero: Cx<T>,
    ) -> CompT<T> {
        let du = u.mul_i().scale(T::from_f64(su));
        let dw = w.mul_i().scale(T::from_f64(sw));
        let d2u = u.scale(T::from_f64(-su * su));
        let d2w = w.scale(T::from_f64(-sw * sw));
        CompT {
            v: alpha.mul(u).add(beta.mul(w)),
            d1: alpha.mul(du),
            d2: beta.mul(dw),
            d11: alpha.mul(d2u),
            d12: zero,
            d22: beta.mul(d2w),
        }
    }
    struct CompT<T> {
        v: Cx<T>,
        d1: Cx<T>,
        d2: Cx<T>,
        d11: Cx<T>,
        d12: Cx<T>,
        d22: Cx<T>,
    }
    impl<T: Real> From<Comp<T>> for CompT<T> {
        fn from(c: Comp<T>) -> Self {
            CompT {
                v: c.v,
                d1: c.d1,
                d2: c.d2,
                d11: c.d11,
                d12: c.d12,
                d22: c.d22,
            }
        }
    }

    let c1: CompT<T> = c1.into();
    let c2: CompT<T> = c2.into();
    let _ = iu1;
    let _ = iu2;
    TorusEval {
        x: Vec4::from_cx(scale(c1.v), scale(c2.v)),
        x1: Vec4::from_cx(scale(c1.d1), scale(c2.d1)),
        x2: Vec4::from_cx(scale(c1.d2), scale(c2.d2)),
        x11: Vec4::from_cx(scale(c1.d11), scale(c2.d11)),
        x12: Vec4::from_cx(scale(c1.d12), scale(c2.d12)),
        x22: Vec4::from_cx(scale(c1.d22), scale(c2.d22)),
    }
}

/// Builds the immersion for a family member with analytic derivatives.
pub fn make_surface(id: FamilyId) -> ImmersedTorus {
    let FamilyId { family, s } = id;
    let s = if family == Family::Clifford { 0.0 } else { s };
    ImmersedTorus::new(
        Arc::new(move |t1, t2| eval_family::<f64>(family, s, t1, t2)),
        Backend::Analytic,
    )
}

/// The Clifford torus itself.
pub fn clifford() -> ImmersedTorus {
    make_surface(FamilyId::new(Family::Clifford, 0.0))
}

/// A normal field on the Clifford torus in the frame {JX1, JX2}.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NormalField {
    pub f1: TrigPoly,
    pub f2: TrigPoly,
}

impl NormalField {
    pub fn new(f1: TrigPoly, f2: TrigPoly) -> Self {
        NormalField { f1, f2 }
    }

    pub fn zero() -> Self {
        NormalField::default()
    }

    /// Ambient vector f1*JX1 + f2*JX2 at the given parameters.
    pub fn ambient(&self, t1: f64, t2: f64) -> Vec4 {
        let jx1 = Vec4([-SQRT2 * t1.cos(), -SQRT2 * t1.sin(), 0.0, 0.0]);
        let jx2 = Vec4([0.0, 0.0, -SQRT2 * t2.cos(), -SQRT2 * t2.sin()]);
        jx1.scale(self.f1.eval(t1, t2))
            .add(jx2.scale(self.f2.eval(t1, t2)))
    }

    pub fn add(&self, o: &NormalField) -> NormalField {
        NormalField::new(self.f1.add(&o.f1), self.f2.add(&o.f2))
    }

    pub fn sub(&self, o: &NormalField) -> NormalField {
        NormalField::new(self.f1.sub(&o.f1), self.f2.sub(&o.f2))
    }

    pub fn scale(&self, s: f64) -> NormalField {
        NormalField::new(self.f1.scale(s), self.f2.scale(s))
    }

    /// L2 inner product against the induced volume (factor 2) with the frame
    /// norms |JXi|^2 = 2: <V, W> = 4 * int (f1 g1 + f2 g2) dtheta.
    pub fn l2_inner(&self, o: &NormalField) -> f64 {
        4.0 * (self.f1.param_inner(&o.f1) + self.f2.param_inner(&o.f2))
    }

    pub fn l2_norm(&self) -> f64 {
        self.l2_inner(self).sqrt()
    }

    /// Pointwise sup bound from mode amplitudes (frame vectors have norm
    /// sqrt(2), orthogonal).
    pub fn sup_bound(&self) -> f64 {
        SQRT2 * (self.f1.amplitude_bound() + self.f2.amplitude_bound()).max(0.0)
    }

    pub fn shifted(&self, a1: f64, a2: f64) -> NormalField {
        NormalField::new(self.f1.shifted(a1, a2), self.f2.shifted(a1, a2))
    }
}

/// Componentwise induced Laplacian on the normal bundle: in the frame
/// {JX1, JX2} it acts diagonally on (f1, f2).
pub fn normal_laplacian(v: &NormalField) -> NormalField {
    NormalField::new(v.f1.laplacian_l(), v.f2.laplacian_l())
}

/// Named generator fields of the group actions on the Clifford torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    U1,
    U2,
    T10,
    Ti0,
    T01,
    T0i,
    Y1,
    Y2,
    Y3,
    Y4,
    Va,
    Vb,
    Vc,
    Vd,
}

impl Generator {
    pub const ALL: [Generator; 14] = [
        Generator::U1,
        Generator::U2,
        Generator::T10,
        Generator::Ti0,
        Generator::T01,
        Generator::T0i,
        Generator::Y1,
        Generator::Y2,
        Generator::Y3,
        Generator::Y4,
        Generator::Va,
        Generator::Vb,
        Generator::Vc,
        Generator::Vd,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Generator::U1 => "U1",
            Generator::U2 => "U2",
            Generator::T10 => "T(1,0)",
            Generator::Ti0 => "T(i,0)",
            Generator::T01 => "T(0,1)",
            Generator::T0i => "T(0,i)",
            Generator::Y1 => "Y1",
            Generator::Y2 => "Y2",
            Generator::Y3 => "Y3",
            Generator::Y4 => "Y4",
            Generator::Va => "V_A",
            Generator::Vb => "V_B",
            Generator::Vc => "V_C",
            Generator::Vd => "V_D",
        }
    }

    /// Eigenvalue of the normal Laplacian on this field.
    pub fn eigenvalue(&self) -> f64 {
        match self {
            Generator::U1 | Generator::U2 => 0.0,
            Generator::T10 | Generator::Ti0 | Generator::T01 | Generator::T0i => 0.5,
            _ => 1.0,
        }
    }

    /// Whether the field is of Hamiltonian type, J grad f.
    pub fn hamiltonian(&self) -> bool {
        !matches!(
            self,
            Generator::U1 | Generator::U2 | Generator::Y3 | Generator::Y4 | Generator::Vc | Generator::Vd
        )
    }

    /// The generating potential f with V = J grad f, when Hamiltonian.
    pub fn potential(&self) -> Option<TrigPoly> {
        match self {
            Generator::T10 => Some(TrigPoly::sin(1, 0, -SQRT2)),
            Generator::Ti0 => Some(TrigPoly::cos(1, 0, SQRT2)),
            Generator::T01 => Some(TrigPoly::sin(0, 1, -SQRT2)),
            Generator::T0i => Some(TrigPoly::cos(0, 1, SQRT2)),
            Generator::Y1 => Some(TrigPoly::sin(1, -1, 2.0)),
            Generator::Y2 => Some(TrigPoly::cos(1, -1, 2.0)),
            Generator::Va => Some(TrigPoly::sin(1, 1, -2.0)),
            Generator::Vb => Some(TrigPoly::cos(1, 1, 2.0)),
            _ => None,
        }
    }
}

/// Closed-form normal field of a generator.
pub fn generator_field(g: Generator) -> NormalField {
    let inv_r2 = 1.0 / SQRT2;
    match g {
        Generator::U1 => NormalField::new(TrigPoly::constant(1.0), TrigPoly::constant(1.0)),
        Generator::U2 => NormalField::new(TrigPoly::constant(1.0), TrigPoly::constant(-1.0)),
        Generator::T10 => NormalField::new(TrigPoly::cos(1, 0, -inv_r2), TrigPoly::zero()),
        Generator::Ti0 => NormalField::new(TrigPoly::sin(1, 0, -inv_r2), TrigPoly::zero()),
        Generator::T01 => NormalField::new(TrigPoly::zero(), TrigPoly::cos(0, 1, -inv_r2)),
        Generator::T0i => NormalField::new(TrigPoly::zero(), TrigPoly::sin(0, 1, -inv_r2)),
        Generator::Y1 => NormalField::new(TrigPoly::cos(1, -1, 1.0), TrigPoly::cos(1, -1, -1.0)),
        Generator::Y2 => NormalField::new(TrigPoly::sin(1, -1, -1.0), TrigPoly::sin(1, -1, 1.0)),
        Generator::Y3 => NormalField::new(TrigPoly::cos(1, 1, 1.0), TrigPoly::cos(1, 1, -1.0)),
        Generator::Y4 => NormalField::new(TrigPoly::sin(1, 1, 1.0), TrigPoly::sin(1, 1, -1.0)),
        Generator::Va => NormalField::new(TrigPoly::cos(1, 1, -1.0), TrigPoly::cos(1, 1, -1.0)),
        Generator::Vb => NormalField::new(TrigPoly::sin(1, 1, -1.0), TrigPoly::sin(1, 1, -1.0)),
        Generator::Vc => NormalField::new(TrigPoly::cos(1, -1, -1.0), TrigPoly::cos(1, -1, -1.0)),
        Generator::Vd => NormalField::new(TrigPoly::sin(1, -1, 1.0), TrigPoly::sin(1, -1, 1.0)),
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("no cataloged eigenspace for eigenvalue {0}/2 (only 0, 1/2, 1 are cataloged)")]
pub struct UnsupportedEigenvalue(pub u32);

/// Spanning sets of the normal Laplacian eigenspaces for eigenvalue n/2,
/// n in {0, 1, 2}; dimensions 2, 8, 8.
pub fn eigenspace_basis(n: u32) -> Result<Vec<NormalField>, UnsupportedEigenvalue> {
    match n {
        0 => Ok(vec![
            generator_field(Generator::U1),
            generator_field(Generator::U2),
        ]),
        1 => {
            let mut out = Vec::with_capacity(8);
            for frame in 0..2 {
                for angle in 0..2 {
                    for phase in 0..2 {
                        let (m1, m2) = if angle == 0 { (1, 0) } else { (0, 1) };
                        let p = if phase == 0 {
                            TrigPoly::cos(m1, m2, 1.0)
                        } else {
                            TrigPoly::sin(m1, m2, 1.0)
                        };
                        out.push(if frame == 0 {
                            NormalField::new(p, TrigPoly::zero())
                        } else {
                            NormalField::new(TrigPoly::zero(), p)
                        });
                    }
                }
            }
            Ok(out)
        }
        2 => {
            let mut out = Vec::with_capacity(8);
            for &m2 in &[1i32, -1i32] {
                for &fsign in &[1.0, -1.0] {
                    for phase in 0..2 {
                        let p = if phase == 0 {
                            TrigPoly::cos(1, m2, 1.0)
                        } else {
                            TrigPoly::sin(1, m2, 1.0)
                        };
                        out.push(NormalField::new(p.clone(), p.scale(fsign)));
                    }
                }
            }
            Ok(out)
        }
        other => Err(UnsupportedEigenvalue(other)),
    }
}

/// Variation field of a family at s = 0 (normal part), from the catalog.
pub fn family_variation_field(family: Family) -> Option<Generator> {
    match family {
        Family::A => Some(Generator::Va),
        Family::B => Some(Generator::Vb),
        Family::C => Some(Generator::Vc),
        Family::D => Some(Generator::Vd),
        Family::Dilation => Some(Generator::U2),
        Family::Clifford => None,
    }
}
