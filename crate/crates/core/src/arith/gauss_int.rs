use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::forward_binop;

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::default()
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// The four units `1, i, -1, -i`, in that order.
    pub fn units() -> [GaussInt; 4] {
        [
            GaussInt::new(1, 0),
            GaussInt::new(0, 1),
            GaussInt::new(-1, 0),
            GaussInt::new(0, -1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Multiplication by `i`, without a general product.
    pub fn mul_i(&self) -> GaussInt {
        GaussInt {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> GaussInt {
        GaussInt {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// `u^k` for a unit `u`, with `k` taken mod 4.
    pub fn unit_pow(&self, k: i64) -> GaussInt {
        let mut acc = GaussInt::one();
        for _ in 0..k.rem_euclid(4) {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_binop!(GaussInt, Add, add);
forward_binop!(GaussInt, Sub, sub);
forward_binop!(GaussInt, Mul, mul);

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => match () {
                _ if self.im.is_one() => write!(f, "i"),
                _ if (-&self.im).is_one() => write!(f, "-i"),
                _ => write!(f, "{}i", self.im),
            },
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                let mag = self.im.abs();
                if mag.is_one() {
                    write!(f, "{}{}i", self.re, sign)
                } else {
                    write!(f, "{}{}{}i", self.re, sign, mag)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn products() {
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
        assert_eq!(g(0, 1) * g(0, 1), g(-1, 0));
        // (2+3i)(4+5i) = 8 + 10i + 12i + 15i^2
        assert_eq!(g(2, 3) * g(4, 5), g(8 - 15, 10 + 12));
        assert_eq!(g(2, 3) * g(4, 5), g(-7, 22));
    }

    #[test]
    fn norms() {
        assert_eq!(g(1, 1).norm(), BigInt::from(2));
        assert_eq!(g(0, 0).norm(), BigInt::from(0));
        assert_eq!(g(3, 4).norm(), BigInt::from(3 * 3 + 4 * 4));
    }

    #[test]
    fn units_are_exactly_the_fourth_roots_of_unity() {
        assert!(g(0, 1).is_unit());
        assert!(g(-1, 0).is_unit());
        assert!(!g(1, 1).is_unit());
        assert!(!g(0, 0).is_unit());
        let mut found = Vec::new();
        for re in -3..=3 {
            for im in -3..=3 {
                if g(re, im).is_unit() {
                    found.push(g(re, im));
                }
            }
        }
        found.sort();
        let mut units = GaussInt::units().to_vec();
        units.sort();
        assert_eq!(found, units);
    }

    #[test]
    fn display() {
        assert_eq!(g(3, -1).to_string(), "3-i");
        assert_eq!(g(0, -2).to_string(), "-2i");
        assert_eq!(g(-4, 0).to_string(), "-4");
        assert_eq!(g(1, 5).to_string(), "1+5i");
    }

    fn arb() -> impl Strategy<Value = GaussInt> {
        (-1_000_000i64..1_000_000, -1_000_000i64..1_000_000).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            prop_assert_eq!(a.mul_i(), &a * GaussInt::i());
        }
    }
}
