//! Exact arithmetic over Z[i], Q(i) and Q.
//!
//! Nothing in this crate touches floating point. Every equality and every
//! inequality downstream is decided on the types defined here, and moduli of
//! complex numbers are only ever compared through their squares.

mod gauss_int;
mod gauss_rat;
mod rat;

pub use gauss_int::GaussInt;
pub use gauss_rat::GaussRat;
pub use rat::{format_rat, parse_rat, rat, Rat};

/// Forwards the owned/borrowed operator combinations to the `&a op &b` impl.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
