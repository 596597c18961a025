//! The finite group U(2; Z[i]) and shortest words in `U1`, `U2`.
//!
//! Every element is monomial: `diag(a, b)` or `[[0, b], [a, 0]]` with
//! `a, b ∈ {±1, ±i}`, so the group has 32 elements. A breadth-first search
//! over the Cayley graph, expanding letters in the fixed order
//! `U1 < U2 < U1⁻¹ < U2⁻¹`, gives every element its shortlex-least word.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::arith::GaussInt;
use crate::error::{Error, Result};
use crate::heisenberg::{mat2_from_ints, Mat2};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct U2Element(pub [[GaussInt; 2]; 2]);

impl U2Element {
    pub fn identity() -> Self {
        U2Element::diag(GaussInt::one(), GaussInt::one())
    }

    pub fn diag(a: GaussInt, b: GaussInt) -> Self {
        U2Element([[a, GaussInt::zero()], [GaussInt::zero(), b]])
    }

    /// `[[0, b], [a, 0]]`.
    pub fn antidiag(a: GaussInt, b: GaussInt) -> Self {
        U2Element([[GaussInt::zero(), b], [a, GaussInt::zero()]])
    }

    pub fn u1() -> Self {
        U2Element::antidiag(GaussInt::one(), GaussInt::one())
    }

    pub fn u2() -> Self {
        U2Element::diag(GaussInt::i(), GaussInt::one())
    }

    pub fn mul(&self, rhs: &U2Element) -> U2Element {
        let (a, b) = (&self.0, &rhs.0);
        U2Element(std::array::from_fn(|i| {
            std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j])
        }))
    }

    /// The conjugate transpose, which is the inverse for unitary elements.
    pub fn adjoint(&self) -> U2Element {
        U2Element(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i].conj())
        }))
    }

    pub fn is_unitary(&self) -> bool {
        self.adjoint().mul(self) == U2Element::identity()
    }

    pub fn to_mat2(&self) -> Mat2 {
        mat2_from_ints(&self.0)
    }

    /// Accepts a rotation block if it is integral and unitary.
    pub fn from_mat2(m: &Mat2) -> Result<U2Element> {
        let mut e = U2Element::identity();
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                e.0[i][j] = x.to_gauss_int().ok_or(Error::NotInU2)?;
            }
        }
        if e.is_unitary() {
            Ok(e)
        } else {
            Err(Error::NotInU2)
        }
    }
}

impl fmt::Display for U2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

/// All 32 elements: the 16 diagonal ones, then the 16 antidiagonal ones.
pub fn enumerate_u2() -> Vec<U2Element> {
    let units = GaussInt::units();
    let mut out = Vec::with_capacity(32);
    for a in &units {
        for b in &units {
            out.push(U2Element::diag(a.clone(), b.clone()));
        }
    }
    for a in &units {
        for b in &units {
            out.push(U2Element::antidiag(a.clone(), b.clone()));
        }
    }
    out
}

/// Letters, declared in breadth-first expansion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum U2Letter {
    U1,
    U2,
    U1Inv,
    U2Inv,
}

impl U2Letter {
    pub const ALL: [U2Letter; 4] = [U2Letter::U1, U2Letter::U2, U2Letter::U1Inv, U2Letter::U2Inv];

    pub fn matrix(self) -> U2Element {
        match self {
            U2Letter::U1 | U2Letter::U1Inv => U2Element::u1(),
            U2Letter::U2 => U2Element::u2(),
            U2Letter::U2Inv => U2Element::u2().adjoint(),
        }
    }

    pub fn inverse(self) -> U2Letter {
        match self {
            U2Letter::U1 => U2Letter::U1Inv,
            U2Letter::U2 => U2Letter::U2Inv,
            U2Letter::U1Inv => U2Letter::U1,
            U2Letter::U2Inv => U2Letter::U2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            U2Letter::U1 => "U1",
            U2Letter::U2 => "U2",
            U2Letter::U1Inv => "U1^-1",
            U2Letter::U2Inv => "U2^-1",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct U2Word(pub Vec<U2Letter>);

impl U2Word {
    pub fn evaluate(&self) -> U2Element {
        self.0
            .iter()
            .fold(U2Element::identity(), |acc, l| acc.mul(&l.matrix()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> U2Word {
        U2Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }
}

impl fmt::Display for U2Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<_> = self.0.iter().map(|l| l.name()).collect();
        write!(f, "{}", names.join("·"))
    }
}

/// Breadth-first search from the identity; every element reached gets the
/// word along which it was first discovered.
fn bfs_table() -> HashMap<U2Element, U2Word> {
    let mut table = HashMap::new();
    let mut queue = VecDeque::new();
    table.insert(U2Element::identity(), U2Word::default());
    queue.push_back(U2Element::identity());
    while let Some(cur) = queue.pop_front() {
        let word = table[&cur].clone();
        for letter in U2Letter::ALL {
            let next = cur.mul(&letter.matrix());
            if !table.contains_key(&next) {
                let mut w = word.clone();
                w.0.push(letter);
                table.insert(next.clone(), w);
                queue.push_back(next);
            }
        }
    }
    table
}

fn table() -> &'static HashMap<U2Element, U2Word> {
    static TABLE: OnceLock<HashMap<U2Element, U2Word>> = OnceLock::new();
    TABLE.get_or_init(bfs_table)
}

/// A shortest word in `U1^{±1}, U2^{±1}` evaluating to `u`.
pub fn u2_word(u: &U2Element) -> Result<U2Word> {
    table().get(u).cloned().ok_or(Error::NotInU2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn g(a: i64, b: i64) -> GaussInt {
        GaussInt::new(a, b)
    }

    #[test]
    fn enumeration_is_the_whole_group() {
        let all = enumerate_u2();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 32);
        assert!(set.contains(&U2Element::u1()));
        assert!(set.contains(&U2Element::u2()));
        for a in &all {
            assert!(a.is_unitary());
            assert!(set.contains(&a.adjoint()));
            for b in &all {
                assert!(set.contains(&a.mul(b)));
            }
        }
        // Brute force over small entries finds nothing else.
        let vals: Vec<GaussInt> = (-1..=1)
            .flat_map(|a| (-1..=1).map(move |b| g(a, b)))
            .collect();
        let mut count = 0;
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    for d in &vals {
                        let m = U2Element([[a.clone(), b.clone()], [c.clone(), d.clone()]]);
                        if m.is_unitary() {
                            assert!(set.contains(&m));
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 32);
    }

    #[test]
    fn u1_u2_u1_is_diag_1_i() {
        let w = U2Word(vec![U2Letter::U1, U2Letter::U2, U2Letter::U1]);
        assert_eq!(w.evaluate(), U2Element::diag(g(1, 0), g(0, 1)));
        assert_eq!(u2_word(&U2Element::diag(g(1, 0), g(0, 1))).unwrap(), w);
        assert!(u2_word(&U2Element::identity()).unwrap().is_empty());
        assert_eq!(
            u2_word(&U2Element::u1()).unwrap(),
            U2Word(vec![U2Letter::U1])
        );
    }

    #[test]
    fn generator_orders() {
        let u1 = U2Element::u1();
        let u2 = U2Element::u2();
        assert_eq!(u1.mul(&u1), U2Element::identity());
        let u2_sq = u2.mul(&u2);
        assert_ne!(u2_sq, U2Element::identity());
        assert_eq!(u2_sq.mul(&u2_sq), U2Element::identity());
    }

    #[test]
    fn every_element_has_a_minimal_word() {
        // Independent length oracle: iterate all words of length n.
        let mut shortest: HashMap<U2Element, usize> = HashMap::new();
        let mut layer = vec![(U2Element::identity(), 0usize)];
        shortest.insert(U2Element::identity(), 0);
        for n in 1..=8 {
            let mut next = Vec::new();
            for (e, _) in &layer {
                for l in U2Letter::ALL {
                    let f = e.mul(&l.matrix());
                    shortest.entry(f.clone()).or_insert(n);
                    next.push((f, n));
                }
            }
            next.sort();
            next.dedup();
            layer = next;
        }
        assert_eq!(shortest.len(), 32);
        for e in enumerate_u2() {
            let w = u2_word(&e).unwrap();
            assert_eq!(w.evaluate(), e);
            assert_eq!(w.len(), shortest[&e], "non-minimal word for {e}");
        }
    }

    #[test]
    fn rejects_non_members() {
        let m = U2Element::diag(g(1, 1), g(1, 0));
        assert!(u2_word(&m).is_err());
        let block = m.to_mat2();
        assert!(U2Element::from_mat2(&block).is_err());
        assert_eq!(
            U2Element::from_mat2(&U2Element::u2().to_mat2()).unwrap(),
            U2Element::u2()
        );
    }
}
