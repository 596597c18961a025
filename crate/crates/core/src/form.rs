//! The Hermitian form of signature (3,1) and membership in U(3,1; Z[i]).
//!
//! Coordinates are ordered so that the form matrix is
//!
//! ```text
//!     | 0 0 0 1 |
//! J = | 0 1 0 0 |
//!     | 0 0 1 0 |
//!     | 1 0 0 0 |
//! ```
//!
//! i.e. the first and last coordinates pair with each other and the two
//! middle coordinates carry the positive definite block. Indices in this
//! module are zero-based; entry `(3, 0)` is the classical `g_41`.

use std::fmt;
use std::ops::Mul;

use crate::arith::{GaussInt, GaussRat};

/// A column vector in C^{3,1} with entries in Q(i).
pub type Vector31 = [GaussRat; 4];

/// `<w, z> = z* J w`.
pub fn hermitian_product(w: &Vector31, z: &Vector31) -> GaussRat {
    z[0].conj() * &w[3] + z[1].conj() * &w[1] + z[2].conj() * &w[2] + z[3].conj() * &w[0]
}

/// `e_k` as a [`Vector31`].
pub fn basis_vector(k: usize) -> Vector31 {
    let mut v: Vector31 = std::array::from_fn(|_| GaussRat::zero());
    v[k] = GaussRat::one();
    v
}

/// A 4×4 matrix over Q(i). Integral members of U(3,1; Z[i]) have every
/// entry in Z[i]; intermediate products (dilations, inverses of
/// non-integral matrices) may not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    rows: [[GaussRat; 4]; 4],
}

impl GroupElement {
    pub fn from_rows(rows: [[GaussRat; 4]; 4]) -> Self {
        GroupElement { rows }
    }

    /// Builds an integral matrix from `(re, im)` pairs.
    pub fn from_int_pairs(rows: [[(i64, i64); 4]; 4]) -> Self {
        GroupElement {
            rows: rows.map(|r| r.map(|(a, b)| GaussRat::from_i64(a, b))),
        }
    }

    pub fn from_gauss_ints(rows: &[[GaussInt; 4]; 4]) -> Self {
        GroupElement {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| rows[i][j].clone().into())),
        }
    }

    pub fn identity() -> Self {
        Self::scalar(GaussRat::one())
    }

    pub fn scalar(s: GaussRat) -> Self {
        GroupElement {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { s.clone() } else { GaussRat::zero() })
            }),
        }
    }

    /// The form matrix `J`.
    pub fn form() -> Self {
        GroupElement::from_int_pairs([
            [(0, 0), (0, 0), (0, 0), (1, 0)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(1, 0), (0, 0), (0, 0), (0, 0)],
        ])
    }

    pub fn rows(&self) -> &[[GaussRat; 4]; 4] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussRat {
        &self.rows[row][col]
    }

    pub fn conj_transpose(&self) -> Self {
        GroupElement {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].conj())),
        }
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        GroupElement {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| &self.rows[i][j] * s)),
        }
    }

    pub fn apply(&self, v: &Vector31) -> Vector31 {
        std::array::from_fn(|i| {
            self.rows[i]
                .iter()
                .zip(v)
                .fold(GaussRat::zero(), |acc, (a, b)| acc + a * b)
        })
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(GaussRat::is_integral)
    }

    pub fn to_gauss_ints(&self) -> Option<[[GaussInt; 4]; 4]> {
        if !self.is_integral() {
            return None;
        }
        Some(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.rows[i][j].numer().clone())
        }))
    }

    /// `G* J G == J`.
    pub fn is_j_unitary(&self) -> bool {
        let j = GroupElement::form();
        &(&self.conj_transpose() * &j) * self == j
    }

    /// `J G* J`, which is `G^{-1}` whenever `G` is J-unitary.
    pub fn unitary_inverse(&self) -> Self {
        // J is the permutation swapping indices 0 and 3.
        const P: [usize; 4] = [3, 1, 2, 0];
        GroupElement {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[P[j]][P[i]].conj())),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity()
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GroupElement::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl<'a> Mul<&'a GroupElement> for &'a GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..4).fold(GaussRat::zero(), |acc, k| {
                        if self.rows[i][k].is_zero() || rhs.rows[k][j].is_zero() {
                            acc
                        } else {
                            acc + &self.rows[i][k] * &rhs.rows[k][j]
                        }
                    })
                })
            }),
        }
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        &self * &rhs
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (n, row) in cells.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (k, c) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Integral and J-unitary.
pub fn is_member(g: &GroupElement) -> bool {
    g.is_integral() && g.is_j_unitary()
}

/// For a member of U(3,1), fixing infinity is equivalent to `g_41 = 0`.
pub fn stabilizes_infinity(g: &GroupElement) -> bool {
    g.get(3, 0).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::heisenberg::{psi, HoroPoint};

    #[test]
    fn form_is_an_involution() {
        let j = GroupElement::form();
        assert_eq!(j.conj_transpose(), j);
        assert!((&j * &j).is_identity());
    }

    #[test]
    fn product_on_special_vectors() {
        let zero = psi(&HoroPoint::origin());
        let inf = basis_vector(0);
        assert!(hermitian_product(&zero, &zero).is_zero());
        assert_eq!(hermitian_product(&inf, &zero), GaussRat::one());
        let p = HoroPoint::new(
            [GaussRat::zero(), GaussRat::zero()],
            crate::arith::rat(0, 1),
            crate::arith::rat(1, 1),
        )
        .unwrap();
        let v = psi(&p);
        assert_eq!(hermitian_product(&v, &v), GaussRat::from(-1));
    }

    #[test]
    fn product_is_hermitian() {
        let w = [(1, 2), (0, -1), (3, 0), (-2, 5)].map(|(a, b)| GaussRat::from_i64(a, b));
        let z = [(4, -1), (2, 2), (0, 1), (1, 1)].map(|(a, b)| GaussRat::from_i64(a, b));
        assert_eq!(hermitian_product(&w, &z), hermitian_product(&z, &w).conj());
    }

    #[test]
    fn membership() {
        assert!(is_member(&GroupElement::identity()));
        assert!(is_member(&generators::inversion()));
        let d = GroupElement::from_int_pairs([
            [(2, 0), (0, 0), (0, 0), (0, 0)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (1, 0)],
        ]);
        assert!(!is_member(&d));
        assert!(!d.is_j_unitary());
    }

    #[test]
    fn stabilizer_test() {
        assert!(stabilizes_infinity(&generators::t1()));
        assert!(stabilizes_infinity(&generators::m2()));
        assert!(!stabilizes_infinity(&generators::inversion()));
    }

    #[test]
    fn unitary_inverse_matches_product() {
        let g = &(&generators::t1() * &generators::inversion()) * &generators::m2();
        let inv = g.unitary_inverse();
        assert!((&g * &inv).is_identity());
        assert!((&inv * &g).is_identity());
        let j = GroupElement::form();
        assert_eq!(inv, &(&j * &g.conj_transpose()) * &j);
    }
}
