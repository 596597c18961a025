use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, which `BigRational` guarantees.
pub type Rat = BigRational;

/// `p/q` as a [`Rat`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form, always `"p/q"` with `q >= 1`.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_positive() {
                Ok(Rat::new(p, q))
            } else if q.is_negative() {
                Ok(Rat::new(-p, -q))
            } else {
                Err(Error::Parse(format!("zero denominator in {s:?}")))
            }
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::new(p, BigInt::one()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_roundtrips() {
        for r in [rat(0, 1), rat(-3, 4), rat(13, 4), rat(7, 1)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&rat(4, -8)), "-1/2");
        assert_eq!(parse_rat("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("5").unwrap(), rat(5, 1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x/2").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn big_values_survive() {
        let s = "123456789012345678901234567891/1000000000000000000000000000000";
        assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
    }
}
