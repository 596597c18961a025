use num_traits::Zero;

use crate::arith::{GaussRat, Rat};
use crate::error::{Error, Result};
use crate::form::GroupElement;
use crate::heisenberg::{inversion, translation, HeisPoint, HeisTranslationParams};

/// A spinal sphere: the boundary, in the Heisenberg group, of the isometric
/// sphere of some element.
///
/// The Cygan radius `r` satisfies `r² = 2/|a41|`, which is irrational when
/// `|a41|` is, so the sphere stores `r⁴ = 4/|a41|²` instead. A boundary
/// point is strictly inside iff its [`sphere_value`] is below `radius_pow4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinalSphere {
    pub id: String,
    pub center: HeisPoint,
    pub radius_pow4: Rat,
}

impl SpinalSphere {
    /// `r²`, when it is rational.
    pub fn radius_sq(&self) -> Option<Rat> {
        let n = self.radius_pow4.numer().sqrt();
        let d = self.radius_pow4.denom().sqrt();
        (&n * &n == *self.radius_pow4.numer() && &d * &d == *self.radius_pow4.denom())
            .then(|| Rat::new(n, d))
    }

    pub fn contains(&self, p: &HeisPoint) -> bool {
        sphere_value(p, self) < self.radius_pow4
    }

    /// The sphere as seen in real coordinates, for the covering loop.
    pub(crate) fn real_center(&self) -> RealCenter {
        RealCenter {
            a1: self.center.xi[0].re(),
            b1: self.center.xi[0].im(),
            a2: self.center.xi[1].re(),
            b2: self.center.xi[1].im(),
            t0: self.center.nu.clone(),
        }
    }
}

/// Center `(a1 + i b1, a2 + i b2, t0)` split into real coordinates.
#[derive(Clone, Debug)]
pub(crate) struct RealCenter {
    pub a1: Rat,
    pub b1: Rat,
    pub a2: Rat,
    pub b2: Rat,
    pub t0: Rat,
}

/// The isometric sphere of `g`: center `g⁻¹(∞)`, `r⁴ = 4/|g_41|²`.
///
/// With `g⁻¹ = J g* J`, the vector `g⁻¹ e1` is
/// `(conj a44, conj a42, conj a43, conj a41)`, so the center is
/// `ζ1 = conj(a42)/conj(a41)`, `ζ2 = conj(a43)/conj(a41)`,
/// `t0 = 2 Im(conj(a44)/conj(a41))`.
pub fn isometric_sphere(g: &GroupElement, id: impl Into<String>) -> Result<SpinalSphere> {
    let a41 = g.get(3, 0);
    let inv = a41.conj().inv().ok_or(Error::StabilizesInfinity)?;
    let z1 = g.get(3, 1).conj() * &inv;
    let z2 = g.get(3, 2).conj() * &inv;
    let t0 = (g.get(3, 3).conj() * &inv).im() * Rat::from_integer(2.into());
    Ok(SpinalSphere {
        id: id.into(),
        center: HeisPoint::new([z1, z2], t0),
        radius_pow4: Rat::from_integer(4.into()) / a41.norm(),
    })
}

/// `A² + B²` with `A = |ξ1 - ζ1|² + |ξ2 - ζ2|²` and
/// `B = t - t0 + 2 Im(ξ1 conj ζ1 + ξ2 conj ζ2)`: the fourth power of the
/// Cygan distance from the boundary point `(ξ, t)` to the center.
pub fn sphere_value(p: &HeisPoint, s: &SpinalSphere) -> Rat {
    let c = &s.center;
    let a = (&p.xi[0] - &c.xi[0]).norm() + (&p.xi[1] - &c.xi[1]).norm();
    let twist = (&p.xi[0] * &c.xi[0].conj() + &p.xi[1] * &c.xi[1].conj()).im();
    let b = &p.nu - &c.nu + twist * Rat::from_integer(2.into());
    &a * &a + &b * &b
}

/// `T2^k · g · T2^-k`.
pub fn vertical_conjugate(g: &GroupElement, k: i64) -> GroupElement {
    let t = translation(&HeisTranslationParams::ints([(0, 0), (0, 0)], 2 * k));
    &(&t * g) * &t.unitary_inverse()
}

/// The maps `N_τ R N_τ⁻¹` whose spheres are used for the covering, keyed
/// by index: `0` is `R` itself, then `τ = (1,1), (1,i), (i,i), (i,1)`.
pub fn base_map(index: usize) -> GroupElement {
    let tau = match index {
        0 => return inversion(),
        1 => [(1, 0), (1, 0)],
        2 => [(1, 0), (0, 1)],
        3 => [(0, 1), (0, 1)],
        4 => [(0, 1), (1, 0)],
        _ => panic!("no base map {index}"),
    };
    let n = translation(&HeisTranslationParams::ints(tau, 0));
    &(&n * &inversion()) * &n.unitary_inverse()
}

/// The element whose sphere is `S{index}` shifted vertically by `2k`.
pub fn sphere_map(index: usize, k: i64) -> GroupElement {
    vertical_conjugate(&base_map(index), k)
}

fn sphere_id(index: usize, k: i64) -> String {
    match k {
        0 => format!("S{index}"),
        _ => format!("S{index}@t0={:+}", 2 * k),
    }
}

/// `S0`, then `S1..S4` each with vertical shifts `t0 ∈ {-2, 0, 2}`.
pub fn standard_sphere_list() -> Vec<SpinalSphere> {
    let mut out = vec![isometric_sphere(&sphere_map(0, 0), sphere_id(0, 0)).expect("R moves ∞")];
    for index in 1..=4 {
        for k in [0, -1, 1] {
            out.push(
                isometric_sphere(&sphere_map(index, k), sphere_id(index, k)).expect("moves ∞"),
            );
        }
    }
    out
}

pub fn find_sphere<'a>(spheres: &'a [SpinalSphere], id: &str) -> Option<&'a SpinalSphere> {
    spheres.iter().find(|s| s.id == id)
}

/// The point `(ξ, t)` from real coordinates.
pub fn point(x1: &Rat, y1: &Rat, x2: &Rat, y2: &Rat, t: &Rat) -> HeisPoint {
    HeisPoint::new(
        [GaussRat::from_parts(x1, y1), GaussRat::from_parts(x2, y2)],
        t.clone(),
    )
}

/// True iff the center is at the origin of the Heisenberg group.
pub fn is_centered_at_origin(s: &SpinalSphere) -> bool {
    s.center.xi.iter().all(GaussRat::is_zero) && s.center.nu.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::form::is_member;
    use crate::generators;
    use crate::heisenberg::{boundary_action, heis_mul};
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::from_i64(a, b)
    }

    #[test]
    fn sphere_of_inversion() {
        let s = isometric_sphere(&generators::inversion(), "S0").unwrap();
        assert!(is_centered_at_origin(&s));
        assert_eq!(s.radius_pow4, rat(4, 1));
        assert_eq!(s.radius_sq(), Some(rat(2, 1)));
        assert!(isometric_sphere(&generators::t1(), "x").is_err());
    }

    #[test]
    fn sphere_values() {
        let s0 = isometric_sphere(&generators::inversion(), "S0").unwrap();
        assert_eq!(sphere_value(&HeisPoint::origin(), &s0), rat(0, 1));
        let corner = HeisPoint::new([g(1, 0), g(1, 0)], rat(0, 1));
        assert_eq!(sphere_value(&corner, &s0), rat(4, 1));
        assert!(!s0.contains(&corner));
        let half = GaussRat::from_parts(&rat(1, 2), &rat(0, 1));
        let p = HeisPoint::new([half.clone(), half], rat(1, 1));
        assert_eq!(sphere_value(&p, &s0), rat(5, 4));
        assert!(s0.contains(&p));
    }

    #[test]
    fn conjugated_spheres_have_the_right_centers() {
        let expected = [
            (1, [(1, 0), (1, 0)]),
            (2, [(1, 0), (0, 1)]),
            (3, [(0, 1), (0, 1)]),
            (4, [(0, 1), (1, 0)]),
        ];
        for (index, tau) in expected {
            let m = base_map(index);
            assert!(is_member(&m));
            let s = isometric_sphere(&m, "s").unwrap();
            let tau = tau.map(|(a, b)| g(a, b));
            assert_eq!(s.center, HeisPoint::new(tau.clone(), rat(0, 1)));
            // Independent route: the center is N_τ(0).
            let n = translation(&HeisTranslationParams::new(tau, rat(0, 1)));
            assert_eq!(boundary_action(&n, &HeisPoint::origin()).unwrap(), s.center);
            // The map sends its own center to infinity; the inverse sends ∞ there.
            assert!(boundary_action(&m, &s.center).is_err());
            assert_eq!(s.radius_pow4, rat(4, 1));
            for k in [-1, 1] {
                let shifted = isometric_sphere(&sphere_map(index, k), "s").unwrap();
                assert_eq!(shifted.center.xi, s.center.xi);
                assert_eq!(shifted.center.nu, rat(2 * k, 1));
            }
        }
        assert_eq!(standard_sphere_list().len(), 13);
    }

    #[test]
    fn sphere_of_s1_matches_its_boundary_equation() {
        // |ξ1-1|² + |ξ2-1|² + i(t + 2 Im(ξ1 + ξ2)) has modulus 2 on S1.
        let s1 = isometric_sphere(&base_map(1), "S1").unwrap();
        let p = HeisPoint::new([g(1, 1), g(0, 0)], rat(3, 1));
        let a = rat(1 + 1, 1);
        let b = rat(3 + 2, 1);
        assert_eq!(sphere_value(&p, &s1), &a * &a + &b * &b);
    }

    #[test]
    fn non_unit_corner() {
        // g_41 = 2: r⁴ = 4/4 = 1.
        let m = GroupElement::from_int_pairs([
            [(0, 0), (0, 0), (0, 0), (1, 0)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(2, 0), (0, 0), (0, 0), (0, 0)],
        ]);
        let s = isometric_sphere(&m, "x").unwrap();
        assert_eq!(s.radius_pow4, rat(1, 1));
        assert_eq!(s.radius_sq(), Some(rat(1, 1)));
        let m = GroupElement::from_int_pairs([
            [(0, 0), (0, 0), (0, 0), (1, 0)],
            [(0, 0), (1, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (1, 0), (0, 0)],
            [(1, 1), (0, 0), (0, 0), (0, 0)],
        ]);
        let s = isometric_sphere(&m, "x").unwrap();
        assert_eq!(s.radius_pow4, rat(2, 1));
        assert_eq!(s.radius_sq(), None);
    }

    fn arb_tau() -> impl Strategy<Value = (HeisPoint, HeisPoint)> {
        let q = || {
            (-30i64..30, -30i64..30, 1i64..5)
                .prop_map(|(a, b, d)| GaussRat::new(crate::arith::GaussInt::new(a, b), d.into()))
        };
        let r = || (-30i64..30, 1i64..5).prop_map(|(a, d)| rat(a, d));
        ((q(), q(), r()), (q(), q(), r())).prop_map(|((a, b, c), (d, e, f))| {
            (HeisPoint::new([a, b], c), HeisPoint::new([d, e], f))
        })
    }

    proptest! {
        #[test]
        fn translating_the_map_translates_the_sphere((shift, p) in arb_tau()) {
            let n = translation(&HeisTranslationParams::new(shift.xi.clone(), shift.nu.clone()));
            let conj = &(&n * &inversion()) * &n.unitary_inverse();
            let s = isometric_sphere(&conj, "c").unwrap();
            let s0 = isometric_sphere(&inversion(), "S0").unwrap();
            prop_assert_eq!(&s.center, &heis_mul(&shift, &s0.center));
            prop_assert_eq!(&s.radius_pow4, &s0.radius_pow4);
            // Values are invariant: the sphere value of N(p) w.r.t. the
            // translated sphere equals that of p w.r.t. S0.
            let moved = heis_mul(&shift, &p);
            prop_assert_eq!(sphere_value(&moved, &s), sphere_value(&p, &s0));
        }
    }
}
