//! Words in the five generators `T1, T2, M1, M2, R` and their exact
//! evaluation.
//!
//! All five generators are integral, so words are evaluated in a plain
//! Z[i] matrix. Right multiplication by a generator power is a handful of
//! column operations, which keeps evaluation of long words cheap.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::GaussInt;
use crate::form::GroupElement;
use crate::generators;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T1,
    T2,
    M1,
    M2,
    R,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::T1,
        Generator::T2,
        Generator::M1,
        Generator::M2,
        Generator::R,
    ];

    /// The four generators of the stabilizer of infinity.
    pub const STABILIZER: [Generator; 4] =
        [Generator::T1, Generator::T2, Generator::M1, Generator::M2];

    pub fn name(self) -> &'static str {
        match self {
            Generator::T1 => "T1",
            Generator::T2 => "T2",
            Generator::M1 => "M1",
            Generator::M2 => "M2",
            Generator::R => "R",
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s)
    }

    pub fn matrix(self) -> GroupElement {
        match self {
            Generator::T1 => generators::t1(),
            Generator::T2 => generators::t2(),
            Generator::M1 => generators::m1(),
            Generator::M2 => generators::m2(),
            Generator::R => generators::inversion(),
        }
    }

    /// Finite order, if any.
    pub fn order(self) -> Option<u32> {
        match self {
            Generator::M1 | Generator::R => Some(2),
            Generator::M2 => Some(4),
            Generator::T1 | Generator::T2 => None,
        }
    }
}

/// A generator raised to an integer power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exp: BigInt,
}

impl Letter {
    pub fn new(generator: Generator, exp: impl Into<BigInt>) -> Self {
        Letter {
            generator,
            exp: exp.into(),
        }
    }
}

/// `g1^e1 · g2^e2 · …`, evaluated left to right as a matrix product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn new() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn single(g: Generator, exp: i64) -> Self {
        GeneratorWord(vec![Letter::new(g, exp)])
    }

    pub fn push(&mut self, g: Generator, exp: impl Into<BigInt>) {
        self.0.push(Letter::new(g, exp));
    }

    pub fn extend(&mut self, other: &GeneratorWord) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of generator applications, `Σ |e_k|`.
    pub fn syllable_weight(&self) -> BigInt {
        self.0.iter().map(|l| l.exp.abs()).sum()
    }

    pub fn uses_only(&self, gens: &[Generator]) -> bool {
        self.0.iter().all(|l| gens.contains(&l.generator))
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord(
            self.0
                .iter()
                .rev()
                .map(|l| Letter::new(l.generator, -&l.exp))
                .collect(),
        )
    }

    /// `self^k` for `k >= 0`, or the inverse repeated for `k < 0`.
    pub fn repeat(&self, k: i64) -> GeneratorWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = GeneratorWord::new();
        for _ in 0..k.unsigned_abs() {
            out.extend(&base);
        }
        out
    }

    /// Merges equal neighbours, reduces finite-order exponents into
    /// `(-order/2, order/2]` and drops trivial letters.
    pub fn simplify(&self) -> GeneratorWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            let mut exp = reduce_exp(l.generator, &l.exp);
            if let Some(last) = out.last() {
                if last.generator == l.generator {
                    exp = reduce_exp(l.generator, &(&last.exp + &exp));
                    out.pop();
                }
            }
            if !exp.is_zero() {
                out.push(Letter::new(l.generator, exp));
            }
        }
        GeneratorWord(out)
    }

    pub fn evaluate(&self) -> GroupElement {
        GroupElement::from_gauss_ints(&self.evaluate_int().0)
    }

    /// Evaluation as an integral matrix.
    pub fn evaluate_int(&self) -> IntMatrix {
        let mut acc = IntMatrix::identity();
        for l in &self.0 {
            acc.mul_generator_pow(l.generator, &l.exp);
        }
        acc
    }
}

/// A random word with `1..=max_len` letters from `alphabet` and nonzero
/// exponents in `[-3, 3]`.
pub fn random_word<R: rand::Rng>(
    rng: &mut R,
    alphabet: &[Generator],
    max_len: usize,
) -> GeneratorWord {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut w = GeneratorWord::new();
    for _ in 0..len {
        let g = alphabet[rng.gen_range(0..alphabet.len())];
        let mut e = rng.gen_range(1..=3i64);
        if rng.gen_bool(0.5) {
            e = -e;
        }
        w.push(g, e);
    }
    w
}

fn reduce_exp(g: Generator, e: &BigInt) -> BigInt {
    match g.order() {
        None => e.clone(),
        Some(n) => {
            let n = BigInt::from(n);
            let r = e.mod_floor(&n);
            if &r + &r > n {
                r - n
            } else {
                r
            }
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            if l.exp.is_one() {
                write!(f, "{}", l.generator.name())?;
            } else {
                write!(f, "{}^{}", l.generator.name(), l.exp)?;
            }
        }
        Ok(())
    }
}

/// A 4×4 matrix over Z[i], the working type for word evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix(pub [[GaussInt; 4]; 4]);

impl IntMatrix {
    pub fn identity() -> Self {
        IntMatrix(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    GaussInt::one()
                } else {
                    GaussInt::zero()
                }
            })
        }))
    }

    pub fn to_group_element(&self) -> GroupElement {
        GroupElement::from_gauss_ints(&self.0)
    }

    fn col(&self, c: usize) -> [GaussInt; 4] {
        std::array::from_fn(|r| self.0[r][c].clone())
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in self.0.iter_mut() {
            row.swap(a, b);
        }
    }

    /// Right multiplication by `N_(τ, t)` for integral `τ` and integral
    /// corner `c = (-‖τ‖² + it)/2`.
    fn mul_translation(&mut self, tau: [&GaussInt; 2], corner: &GaussInt) {
        let c0 = self.col(0);
        let c1 = self.col(1);
        let c2 = self.col(2);
        let (n1, n2) = (tau[0].conj(), tau[1].conj());
        for (r, row) in self.0.iter_mut().enumerate() {
            row[1] = &row[1] - &(&n1 * &c0[r]);
            row[2] = &row[2] - &(&n2 * &c0[r]);
            row[3] = &row[3] + &(corner * &c0[r]) + (tau[0] * &c1[r]) + (tau[1] * &c2[r]);
        }
    }

    /// Right multiplication by `g^e`.
    pub fn mul_generator_pow(&mut self, g: Generator, e: &BigInt) {
        match g {
            Generator::T1 => {
                // T1^k = N_((k,k), 0), corner -k^2.
                let k = GaussInt::new(e.clone(), 0);
                let corner = GaussInt::new(-(e * e), 0);
                self.mul_translation([&k, &k], &corner);
            }
            Generator::T2 => {
                // T2^k = N_((0,0), 2k), corner ik.
                let corner = GaussInt::new(0, e.clone());
                for row in self.0.iter_mut() {
                    row[3] = &row[3] + &(&corner * &row[0]);
                }
            }
            Generator::M1 => {
                if e.is_odd() {
                    self.swap_cols(1, 2);
                }
            }
            Generator::M2 => {
                let k = e.mod_floor(&BigInt::from(4)).to_i64().unwrap_or(0);
                let unit = GaussInt::i().unit_pow(k);
                if !unit.is_one() {
                    for row in self.0.iter_mut() {
                        row[1] = &row[1] * &unit;
                    }
                }
            }
            Generator::R => {
                if e.is_odd() {
                    self.swap_cols(0, 3);
                    for row in self.0.iter_mut() {
                        row[1] = -&row[1];
                        row[2] = -&row[2];
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::is_member;

    fn naive(word: &GeneratorWord) -> GroupElement {
        let mut acc = GroupElement::identity();
        for l in &word.0 {
            let m = l.generator.matrix();
            let k = l.exp.to_i64().unwrap();
            let p = if k < 0 {
                m.unitary_inverse().pow(k.unsigned_abs())
            } else {
                m.pow(k as u64)
            };
            acc = &acc * &p;
        }
        acc
    }

    #[test]
    fn column_ops_match_matrix_products() {
        for g in Generator::ALL {
            for e in -5i64..=5 {
                let w = GeneratorWord::single(g, e);
                assert_eq!(w.evaluate(), naive(&w), "{g:?}^{e}");
            }
        }
        let mut w = GeneratorWord::new();
        for (g, e) in [
            (Generator::T1, 2),
            (Generator::M2, 3),
            (Generator::R, 1),
            (Generator::T2, -4),
            (Generator::M1, 1),
            (Generator::T1, -1),
            (Generator::R, 1),
        ] {
            w.push(g, e);
        }
        let m = w.evaluate();
        assert_eq!(m, naive(&w));
        assert!(is_member(&m));
        assert!((&m * &w.inverse().evaluate()).is_identity());
    }

    #[test]
    fn simplify_respects_orders() {
        let mut w = GeneratorWord::new();
        w.push(Generator::M2, 3);
        w.push(Generator::M2, 2);
        w.push(Generator::M1, 3);
        w.push(Generator::T1, 1);
        w.push(Generator::T1, -1);
        w.push(Generator::R, 2);
        let s = w.simplify();
        assert_eq!(s.to_string(), "M2·M1");
        assert_eq!(s.evaluate(), w.evaluate());
        assert_eq!(
            GeneratorWord::single(Generator::M2, 3)
                .simplify()
                .to_string(),
            "M2^-1"
        );
        assert_eq!(
            GeneratorWord::single(Generator::M2, 2)
                .simplify()
                .to_string(),
            "M2^2"
        );
    }

    #[test]
    fn huge_exponents() {
        let big: BigInt = "100000000000000000000".parse().unwrap();
        let w = GeneratorWord(vec![Letter::new(Generator::T2, big.clone())]);
        let m = w.evaluate();
        assert_eq!(m.get(0, 3).numer().im, big);
        let w = GeneratorWord(vec![Letter::new(Generator::T1, big.clone())]);
        assert!(is_member(&w.evaluate()));
    }
}
