//! The Heisenberg group C^2 × R, horospherical coordinates, and the
//! matrices of Heisenberg translations, rotations, dilations and the
//! inversion.
//!
//! The group law is `(ξ, ν)·(z, u) = (ξ + z, ν + u + 2 Im(z* ξ))`. The
//! translation matrix `N_(τ,t)` acts on boundary points as left
//! multiplication by `(τ, t)` under exactly this law; the tests pin that
//! agreement rather than trusting either formula in isolation.

use crate::arith::{GaussInt, GaussRat, Rat};
use crate::error::{Error, Result};
use crate::form::{GroupElement, Vector31};
use num_traits::{Signed, Zero};

/// `Σ conj(b_j)·a_j`, the standard Hermitian product `b* a` on C^2.
pub fn inner2(a: &[GaussRat; 2], b: &[GaussRat; 2]) -> GaussRat {
    b[0].conj() * &a[0] + b[1].conj() * &a[1]
}

/// `‖a‖^2`.
pub fn norm2(a: &[GaussRat; 2]) -> Rat {
    a[0].norm() + a[1].norm()
}

/// A point of the Heisenberg group, i.e. a finite boundary point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisPoint {
    pub xi: [GaussRat; 2],
    pub nu: Rat,
}

impl HeisPoint {
    pub fn new(xi: [GaussRat; 2], nu: Rat) -> Self {
        HeisPoint { xi, nu }
    }

    pub fn origin() -> Self {
        HeisPoint::new([GaussRat::zero(), GaussRat::zero()], Rat::zero())
    }

    pub fn inverse(&self) -> Self {
        HeisPoint::new([-&self.xi[0], -&self.xi[1]], -&self.nu)
    }

    pub fn to_horo(&self) -> HoroPoint {
        HoroPoint {
            xi: self.xi.clone(),
            nu: self.nu.clone(),
            u: Rat::zero(),
        }
    }
}

/// Group law of the Heisenberg group.
pub fn heis_mul(p: &HeisPoint, q: &HeisPoint) -> HeisPoint {
    let twist = inner2(&p.xi, &q.xi).im() * Rat::from_integer(2.into());
    HeisPoint {
        xi: [&p.xi[0] + &q.xi[0], &p.xi[1] + &q.xi[1]],
        nu: &p.nu + &q.nu + twist,
    }
}

/// Horospherical coordinates `(ξ, ν, u)` with `u >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HoroPoint {
    pub xi: [GaussRat; 2],
    pub nu: Rat,
    pub u: Rat,
}

impl HoroPoint {
    pub fn new(xi: [GaussRat; 2], nu: Rat, u: Rat) -> Result<Self> {
        if u.is_negative() {
            return Err(Error::Invalid(format!("height u must be >= 0, got {u}")));
        }
        Ok(HoroPoint { xi, nu, u })
    }

    pub fn origin() -> Self {
        HeisPoint::origin().to_horo()
    }

    pub fn is_boundary(&self) -> bool {
        self.u.is_zero()
    }
}

/// The lift `ψ(ξ, ν, u) = ((-‖ξ‖² - u + iν)/2, ξ1, ξ2, 1)`.
pub fn psi(p: &HoroPoint) -> Vector31 {
    let half = Rat::new(1.into(), 2.into());
    let top = GaussRat::from_parts(&((-norm2(&p.xi) - &p.u) * &half), &(&p.nu * &half));
    [top, p.xi[0].clone(), p.xi[1].clone(), GaussRat::one()]
}

/// The lift of the point at infinity, `e_1`.
pub fn psi_infinity() -> Vector31 {
    crate::form::basis_vector(0)
}

/// Parameters `(τ, t)` of a Heisenberg translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisTranslationParams {
    pub tau: [GaussRat; 2],
    pub t: Rat,
}

impl HeisTranslationParams {
    pub fn new(tau: [GaussRat; 2], t: Rat) -> Self {
        HeisTranslationParams { tau, t }
    }

    /// Integral convenience constructor.
    pub fn ints(tau: [(i64, i64); 2], t: i64) -> Self {
        HeisTranslationParams {
            tau: tau.map(|(a, b)| GaussRat::from_i64(a, b)),
            t: Rat::from_integer(t.into()),
        }
    }

    pub fn as_point(&self) -> HeisPoint {
        HeisPoint::new(self.tau.clone(), self.t.clone())
    }
}

/// `N_(τ,t)`. The result is J-unitary for every rational `(τ, t)`, but only
/// integral when `(-‖τ‖² + it)/2` lies in Z[i].
pub fn translation(params: &HeisTranslationParams) -> GroupElement {
    let [t1, t2] = &params.tau;
    let half = Rat::new(1.into(), 2.into());
    let corner = GaussRat::from_parts(&(-norm2(&params.tau) * &half), &(&params.t * &half));
    let z = GaussRat::zero;
    let o = GaussRat::one;
    GroupElement::from_rows([
        [o(), -t1.conj(), -t2.conj(), corner],
        [z(), o(), z(), t1.clone()],
        [z(), z(), o(), t2.clone()],
        [z(), z(), z(), o()],
    ])
}

/// A 2×2 matrix over Q(i), used for the rotation block.
pub type Mat2 = [[GaussRat; 2]; 2];

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

pub fn mat2_conj_transpose(a: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].conj()))
}

pub fn mat2_identity() -> Mat2 {
    [
        [GaussRat::one(), GaussRat::zero()],
        [GaussRat::zero(), GaussRat::one()],
    ]
}

pub fn mat2_is_unitary(u: &Mat2) -> bool {
    mat2_mul(&mat2_conj_transpose(u), u) == mat2_identity()
}

pub fn mat2_from_ints(u: &[[GaussInt; 2]; 2]) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| u[i][j].clone().into()))
}

/// `M_U = diag(1, U, 1)`.
pub fn rotation(u: &Mat2) -> Result<GroupElement> {
    if !mat2_is_unitary(u) {
        return Err(Error::Invalid("rotation block is not unitary".into()));
    }
    let z = GaussRat::zero;
    let o = GaussRat::one;
    Ok(GroupElement::from_rows([
        [o(), z(), z(), z()],
        [z(), u[0][0].clone(), u[0][1].clone(), z()],
        [z(), u[1][0].clone(), u[1][1].clone(), z()],
        [z(), z(), z(), o()],
    ]))
}

/// `A_r = diag(r, 1, 1, 1/r)` for rational `r > 0`.
pub fn dilation(r: &Rat) -> Result<GroupElement> {
    if !r.is_positive() {
        return Err(Error::NonPositiveDilation(r.to_string()));
    }
    let z = GaussRat::zero;
    let o = GaussRat::one;
    Ok(GroupElement::from_rows([
        [GaussRat::from_rat(r), z(), z(), z()],
        [z(), o(), z(), z()],
        [z(), z(), o(), z()],
        [z(), z(), z(), GaussRat::from_rat(&r.recip())],
    ]))
}

/// The involution `R` exchanging `0` and `∞`.
pub fn inversion() -> GroupElement {
    GroupElement::from_int_pairs([
        [(0, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (-1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (-1, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
    ])
}

/// Reads horospherical boundary coordinates off a null vector with nonzero
/// last entry.
pub fn boundary_point_of(v: &Vector31) -> Result<HeisPoint> {
    let last = v[3].inv().ok_or(Error::MapsToInfinity)?;
    let top = &v[0] * &last;
    Ok(HeisPoint {
        xi: [&v[1] * &last, &v[2] * &last],
        nu: top.im() * Rat::from_integer(2.into()),
    })
}

/// The image of a boundary point under `g`.
pub fn boundary_action(g: &GroupElement, p: &HeisPoint) -> Result<HeisPoint> {
    boundary_point_of(&g.apply(&psi(&p.to_horo())))
}
