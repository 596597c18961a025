//! The five generating matrices, written out entry by entry.
//!
//! These are literal constants, not built from the constructors in
//! [`crate::heisenberg`], so the constructor tests compare two independent
//! sources.

use crate::form::GroupElement;

/// `N_((1,1)ᵀ, 0)`.
pub fn t1() -> GroupElement {
    GroupElement::from_int_pairs([
        [(1, 0), (-1, 0), (-1, 0), (-1, 0)],
        [(0, 0), (1, 0), (0, 0), (1, 0)],
        [(0, 0), (0, 0), (1, 0), (1, 0)],
        [(0, 0), (0, 0), (0, 0), (1, 0)],
    ])
}

/// `N_((0,0)ᵀ, 2)`, the central vertical translation.
pub fn t2() -> GroupElement {
    GroupElement::from_int_pairs([
        [(1, 0), (0, 0), (0, 0), (0, 1)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (1, 0)],
    ])
}

/// `M_{U1}` with `U1 = [[0,1],[1,0]]`.
pub fn m1() -> GroupElement {
    GroupElement::from_int_pairs([
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (1, 0)],
    ])
}

/// `M_{U2}` with `U2 = diag(i, 1)`.
pub fn m2() -> GroupElement {
    GroupElement::from_int_pairs([
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 1), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (1, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (1, 0)],
    ])
}

/// The involution `R`.
pub fn inversion() -> GroupElement {
    GroupElement::from_int_pairs([
        [(0, 0), (0, 0), (0, 0), (1, 0)],
        [(0, 0), (-1, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (-1, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
    ])
}

/// All five, keyed by the names used in words and fixtures.
pub fn all() -> Vec<(&'static str, GroupElement)> {
    vec![
        ("T1", t1()),
        ("T2", t2()),
        ("M1", m1()),
        ("M2", m2()),
        ("R", inversion()),
    ]
}
