use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{forward_binop, GaussInt, Rat};

/// An element of Q(i), written `num / den` with `den` a positive rational
/// integer and `gcd(num.re, num.im, den) = 1`. The canonical form makes
/// structural equality coincide with equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    num: GaussInt,
    den: BigInt,
}

impl GaussRat {
    /// Builds and canonicalizes `num / den`. Panics on a zero denominator.
    pub fn new(num: GaussInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = GaussRat { num, den };
        r.canonicalize();
        r
    }

    pub fn from_int(z: GaussInt) -> Self {
        GaussRat {
            num: z,
            den: BigInt::one(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussRat::from_int(GaussInt::new(re, im))
    }

    pub fn from_rat(r: &Rat) -> Self {
        GaussRat {
            num: GaussInt::new(r.numer().clone(), 0),
            den: r.denom().clone(),
        }
    }

    /// `re + im·i` from two rationals.
    pub fn from_parts(re: &Rat, im: &Rat) -> Self {
        let den = re.denom().lcm(im.denom());
        let num = GaussInt::new(
            re.numer() * (&den / re.denom()),
            im.numer() * (&den / im.denom()),
        );
        GaussRat::new(num, den)
    }

    pub fn zero() -> Self {
        GaussRat::from_int(GaussInt::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(GaussInt::one())
    }

    pub fn i() -> Self {
        GaussRat::from_int(GaussInt::i())
    }

    fn canonicalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = -&self.num;
        }
        let g = self.num.re.gcd(&self.num.im).gcd(&self.den);
        if !g.is_one() {
            self.num.re /= &g;
            self.num.im /= &g;
            self.den /= &g;
        }
    }

    pub fn numer(&self) -> &GaussInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True iff the value lies in Z[i].
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_gauss_int(&self) -> Option<GaussInt> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn re(&self) -> Rat {
        Rat::new(self.num.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> Rat {
        Rat::new(self.num.im.clone(), self.den.clone())
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.num.im.is_zero()
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    /// Squared modulus `|z|^2`.
    pub fn norm(&self) -> Rat {
        Rat::new(self.num.norm(), &self.den * &self.den)
    }

    pub fn scale(&self, r: &Rat) -> GaussRat {
        GaussRat::new(self.num.scale(r.numer()), &self.den * r.denom())
    }

    pub fn inv(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return None;
        }
        // 1/(a/d) = d·conj(a)/|a|^2
        let n = self.num.norm();
        Some(GaussRat::new(self.num.conj().scale(&self.den), n))
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Option<GaussRat> {
        rhs.inv().map(|r| self * &r)
    }
}

impl From<GaussInt> for GaussRat {
    fn from(z: GaussInt) -> Self {
        GaussRat::from_int(z)
    }
}

impl From<i64> for GaussRat {
    fn from(v: i64) -> Self {
        GaussRat::from_i64(v, 0)
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        if self.den == rhs.den {
            return GaussRat::new(&self.num + &rhs.num, self.den.clone());
        }
        GaussRat::new(
            self.num.scale(&rhs.den) + rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.den.is_one() && rhs.den.is_one() {
            return GaussRat::from_int(&self.num * &rhs.num);
        }
        GaussRat::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

forward_binop!(GaussRat, Add, add);
forward_binop!(GaussRat, Sub, sub);
forward_binop!(GaussRat, Mul, mul);

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.re.is_zero() || self.num.im.is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn q(re: i64, im: i64, den: i64) -> GaussRat {
        GaussRat::new(GaussInt::new(re, im), BigInt::from(den))
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(2, 4, 6), q(1, 2, 3));
        assert_eq!(q(-2, 0, -4), q(1, 0, 2));
        assert_eq!(q(0, 0, 17), GaussRat::zero());
        assert_eq!(*q(4, 6, 2).denom(), BigInt::from(1));
        assert!(q(4, 6, 2).is_integral());
    }

    #[test]
    fn inverse_and_parts() {
        // 1/(1+i) = (1-i)/2
        assert_eq!(q(1, 1, 1).inv().unwrap(), q(1, -1, 2));
        assert!(GaussRat::zero().inv().is_none());
        let z = q(3, -5, 7);
        assert_eq!(z.re(), rat(3, 7));
        assert_eq!(z.im(), rat(-5, 7));
        assert_eq!(z.norm(), rat(34, 49));
        assert_eq!(GaussRat::from_parts(&rat(1, 2), &rat(-1, 3)), q(3, -2, 6));
    }

    fn arb() -> impl Strategy<Value = GaussRat> {
        (-500i64..500, -500i64..500, 1i64..60).prop_map(|(a, b, d)| q(a, b, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, GaussRat::zero());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            if let Some(ai) = a.inv() {
                prop_assert_eq!(&a * &ai, GaussRat::one());
            }
        }

        #[test]
        fn rebuilding_from_parts_is_identity(a in arb()) {
            let again = GaussRat::new(a.numer().clone(), a.denom().clone());
            prop_assert_eq!(&again, &a);
            prop_assert_eq!(GaussRat::from_parts(&a.re(), &a.im()), a);
        }
    }
}
