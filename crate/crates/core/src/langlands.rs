//! Langlands decomposition of elements fixing infinity:
//! `P = λ · N_(τ,t) · A_r · M_U`.
//!
//! The scalar unit `λ ∈ {1, i, -1, -i}` is not part of the classical
//! decomposition. At the matrix level (we never pass to PU(3,1)) an
//! integral stabilizer element can have `P_11 = λ` for any unit, and the
//! scalar matrices `λI` are not products of the four stabilizer
//! generators, so `λ` is split off explicitly and reported.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{GaussInt, GaussRat, Rat};
use crate::error::{Error, Result};
use crate::form::{stabilizes_infinity, GroupElement};
use crate::heisenberg::{dilation, norm2, rotation, translation, HeisTranslationParams, Mat2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanglandsParams {
    pub scalar_unit: GaussInt,
    pub tau: [GaussRat; 2],
    pub t: Rat,
    pub r: Rat,
    pub u: Mat2,
}

impl LanglandsParams {
    pub fn identity() -> Self {
        LanglandsParams {
            scalar_unit: GaussInt::one(),
            tau: [GaussRat::zero(), GaussRat::zero()],
            t: Rat::zero(),
            r: Rat::one(),
            u: crate::heisenberg::mat2_identity(),
        }
    }

    pub fn translation_params(&self) -> HeisTranslationParams {
        HeisTranslationParams::new(self.tau.clone(), self.t.clone())
    }

    /// The constraints every integral stabilizer element satisfies:
    /// `r = 1`, `t ∈ 2Z`, `τ ∈ Z[i]^2`, `‖τ‖² ∈ 2Z` and `U` integral.
    pub fn satisfies_integral_constraints(&self) -> bool {
        let two = num_bigint::BigInt::from(2);
        let even = |q: &Rat| q.is_integer() && q.numer().is_multiple_of(&two);
        self.r.is_one()
            && even(&self.t)
            && self.tau.iter().all(GaussRat::is_integral)
            && even(&norm2(&self.tau))
            && self.u.iter().flatten().all(GaussRat::is_integral)
    }
}

/// Splits a stabilizer element into `(λ, τ, t, r, U)`.
///
/// Fails if `P` does not fix infinity, if `P_11` is not a unit times a
/// positive rational, or if `P` is not of the J-unitary block shape (the
/// recomposition would then disagree with `P`).
pub fn decompose(p: &GroupElement) -> Result<LanglandsParams> {
    if !stabilizes_infinity(p) {
        return Err(Error::NotInStabilizer);
    }
    if p.get(3, 3).is_zero() {
        return Err(Error::Invalid("entry (4,4) vanishes".into()));
    }
    let p11 = p.get(0, 0);
    let (unit, r) = GaussInt::units()
        .into_iter()
        .find_map(|u| {
            let q = p11 * &GaussRat::from_int(u.conj());
            (q.is_real() && q.re().is_positive()).then(|| (u, q.re()))
        })
        .ok_or_else(|| Error::UnitNormalization(p11.to_string()))?;

    let unit_inv = GaussRat::from_int(unit.conj());
    let u: Mat2 = std::array::from_fn(|i| std::array::from_fn(|j| p.get(i + 1, j + 1) * &unit_inv));
    let tau = [1, 2].map(|k| (p.get(k, 3) * &unit_inv).scale(&r));
    let corner = p.get(0, 3) * &unit_inv;
    let t = corner.im() * &r * Rat::from_integer(2.into());

    let params = LanglandsParams {
        scalar_unit: unit,
        tau,
        t,
        r,
        u,
    };
    if recompose(&params)? != *p {
        return Err(Error::Invalid(
            "matrix is not of the form λ·N·A·M (not J-unitary?)".into(),
        ));
    }
    Ok(params)
}

/// `λ · N_(τ,t) · A_r · M_U`.
pub fn recompose(params: &LanglandsParams) -> Result<GroupElement> {
    let n = translation(&params.translation_params());
    let a = dilation(&params.r)?;
    let m = rotation(&params.u)?;
    let nam = &(&n * &a) * &m;
    Ok(if params.scalar_unit.is_one() {
        nam
    } else {
        nam.scale(&GaussRat::from_int(params.scalar_unit.clone()))
    })
}
