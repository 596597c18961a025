use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{rat, GaussRat, Rat};

use super::sphere::{RealCenter, SpinalSphere};

/// A point of the complex plane with rational coordinates.
pub type Vertex = [Rat; 2];

fn v(x: (i64, i64), y: (i64, i64)) -> Vertex {
    [rat(x.0, x.1), rat(y.0, y.1)]
}

fn midpoint(a: &Vertex, b: &Vertex) -> Vertex {
    let half = rat(1, 2);
    [(&a[0] + &b[0]) * &half, (&a[1] + &b[1]) * &half]
}

/// A convex polygon (triangle or quadrilateral) with vertices listed in
/// counter-clockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    pub vertices: Vec<Vertex>,
}

impl Polygon {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Polygon { vertices }
    }

    /// Shoelace area.
    pub fn area(&self) -> Rat {
        let n = self.vertices.len();
        let twice: Rat = (0..n)
            .map(|k| {
                let (a, b) = (&self.vertices[k], &self.vertices[(k + 1) % n]);
                &a[0] * &b[1] - &b[0] * &a[1]
            })
            .sum();
        twice.abs() * rat(1, 2)
    }

    /// Largest squared distance between two vertices.
    pub fn diameter_sq(&self) -> Rat {
        let mut best = Rat::zero();
        for (k, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[k + 1..] {
                let dx = &a[0] - &b[0];
                let dy = &a[1] - &b[1];
                let d = &dx * &dx + &dy * &dy;
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    pub fn centroid(&self) -> Vertex {
        let n = Rat::from_integer(self.vertices.len().into());
        let sx: Rat = self.vertices.iter().map(|p| p[0].clone()).sum();
        let sy: Rat = self.vertices.iter().map(|p| p[1].clone()).sum();
        [sx / &n, sy / n]
    }

    /// Splits through edge midpoints into four pieces of the same shape:
    /// a triangle into its four midpoint triangles, a quadrilateral along
    /// its two bimedians (which cross at the vertex centroid).
    pub fn split4(&self) -> [Polygon; 4] {
        let p = &self.vertices;
        match p.len() {
            3 => {
                let m01 = midpoint(&p[0], &p[1]);
                let m12 = midpoint(&p[1], &p[2]);
                let m20 = midpoint(&p[2], &p[0]);
                [
                    Polygon::new(vec![p[0].clone(), m01.clone(), m20.clone()]),
                    Polygon::new(vec![m01.clone(), p[1].clone(), m12.clone()]),
                    Polygon::new(vec![m20.clone(), m12.clone(), p[2].clone()]),
                    Polygon::new(vec![m01, m12, m20]),
                ]
            }
            4 => {
                let m: Vec<Vertex> = (0..4).map(|k| midpoint(&p[k], &p[(k + 1) % 4])).collect();
                let c = self.centroid();
                std::array::from_fn(|k| {
                    Polygon::new(vec![
                        p[k].clone(),
                        m[k].clone(),
                        c.clone(),
                        m[(k + 3) % 4].clone(),
                    ])
                })
            }
            n => panic!("polygon with {n} vertices"),
        }
    }

    /// Strict point-in-polygon test for counter-clockwise convex polygons,
    /// boundary included.
    pub fn contains(&self, q: &Vertex) -> bool {
        let n = self.vertices.len();
        (0..n).all(|k| {
            let (a, b) = (&self.vertices[k], &self.vertices[(k + 1) % n]);
            let cross = (&b[0] - &a[0]) * (&q[1] - &a[1]) - (&b[1] - &a[1]) * (&q[0] - &a[0]);
            !cross.is_negative()
        })
    }

    pub fn vertex_as_gauss(k: &Vertex) -> GaussRat {
        GaussRat::from_parts(&k[0], &k[1])
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|p| Polygon::vertex_as_gauss(p).to_string())
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `S1`: triangle `i, i/2, (1+i)/2`.
pub fn base_s1() -> Polygon {
    Polygon::new(vec![
        v((0, 1), (1, 2)),
        v((1, 2), (1, 2)),
        v((0, 1), (1, 1)),
    ])
}

/// `S2`: square `0, 1/2, (1+i)/2, i/2`.
pub fn base_s2() -> Polygon {
    Polygon::new(vec![
        v((0, 1), (0, 1)),
        v((1, 2), (0, 1)),
        v((1, 2), (1, 2)),
        v((0, 1), (1, 2)),
    ])
}

/// `S3`: triangle `0, 1, (1+i)/2`.
pub fn base_s3() -> Polygon {
    Polygon::new(vec![
        v((0, 1), (0, 1)),
        v((1, 1), (0, 1)),
        v((1, 2), (1, 2)),
    ])
}

/// The triangle `0, 1, i`.
pub fn base_triangle() -> Polygon {
    Polygon::new(vec![
        v((0, 1), (0, 1)),
        v((1, 1), (0, 1)),
        v((0, 1), (1, 1)),
    ])
}

/// `P1 × P2 × [t_lo, t_hi]` in `C × C × R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub xi1: Polygon,
    pub xi2: Polygon,
    pub t_lo: Rat,
    pub t_hi: Rat,
}

impl Region {
    pub fn new(xi1: Polygon, xi2: Polygon, t_lo: Rat, t_hi: Rat) -> Self {
        Region {
            xi1,
            xi2,
            t_lo,
            t_hi,
        }
    }

    pub fn measure(&self) -> Rat {
        self.xi1.area() * self.xi2.area() * (&self.t_hi - &self.t_lo)
    }

    pub fn vertex_count(&self) -> usize {
        self.xi1.vertices.len()
            * self.xi2.vertices.len()
            * if self.t_lo == self.t_hi { 1 } else { 2 }
    }

    fn t_values(&self) -> Vec<&Rat> {
        if self.t_lo == self.t_hi {
            vec![&self.t_lo]
        } else {
            vec![&self.t_lo, &self.t_hi]
        }
    }

    pub fn contains(&self, xi1: &Vertex, xi2: &Vertex, t: &Rat) -> bool {
        self.xi1.contains(xi1) && self.xi2.contains(xi2) && &self.t_lo <= t && t <= &self.t_hi
    }

    pub fn centroid(&self) -> (Vertex, Vertex, Rat) {
        (
            self.xi1.centroid(),
            self.xi2.centroid(),
            (&self.t_lo + &self.t_hi) * rat(1, 2),
        )
    }

    /// Splits the factor with the largest weighted extent. The sphere value
    /// moves several times faster along ξ than along t, so t is split only
    /// when its length exceeds twice the larger polygon diameter.
    pub fn split(&self) -> Vec<Region> {
        let d1 = self.xi1.diameter_sq();
        let d2 = self.xi2.diameter_sq();
        let len = &self.t_hi - &self.t_lo;
        let t_score = &len * &len * rat(1, 4);
        if t_score > d1 && t_score > d2 {
            let mid = (&self.t_lo + &self.t_hi) * rat(1, 2);
            vec![
                Region::new(
                    self.xi1.clone(),
                    self.xi2.clone(),
                    self.t_lo.clone(),
                    mid.clone(),
                ),
                Region::new(self.xi1.clone(), self.xi2.clone(), mid, self.t_hi.clone()),
            ]
        } else if d1 >= d2 {
            self.xi1
                .split4()
                .into_iter()
                .map(|p| Region::new(p, self.xi2.clone(), self.t_lo.clone(), self.t_hi.clone()))
                .collect()
        } else {
            self.xi2
                .split4()
                .into_iter()
                .map(|p| Region::new(self.xi1.clone(), p, self.t_lo.clone(), self.t_hi.clone()))
                .collect()
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ξ1 ∈ {}, ξ2 ∈ {}, t ∈ [{}, {}]",
            self.xi1, self.xi2, self.t_lo, self.t_hi
        )
    }
}

/// The nine pieces `Sa × Sb × [-1, 1]`, ordered `(S1,S1), (S1,S2), …,
/// (S3,S3)`.
pub fn sigma_pieces() -> Vec<Region> {
    let bases = [base_s1(), base_s2(), base_s3()];
    let mut out = Vec::with_capacity(9);
    for a in &bases {
        for b in &bases {
            out.push(Region::new(a.clone(), b.clone(), rat(-1, 1), rat(1, 1)));
        }
    }
    out
}

/// The whole region `Δ × Δ × [-1, 1]`.
pub fn sigma() -> Region {
    Region::new(base_triangle(), base_triangle(), rat(-1, 1), rat(1, 1))
}

/// Per-vertex terms of the sphere value along one ξ factor:
/// `|ξ - ζ|²` and `2 Im(ξ conj ζ)`.
fn polygon_terms(p: &Polygon, a: &Rat, b: &Rat) -> Vec<(Rat, Rat)> {
    p.vertices
        .iter()
        .map(|q| {
            let dx = &q[0] - a;
            let dy = &q[1] - b;
            let quad = &dx * &dx + &dy * &dy;
            // Im((x + iy)(a - ib)) = y a - x b
            let lin = (&q[1] * a - &q[0] * b) * Rat::from_integer(2.into());
            (quad, lin)
        })
        .collect()
}

pub(crate) fn max_bound_real(reg: &Region, c: &RealCenter) -> Rat {
    let terms1 = polygon_terms(&reg.xi1, &c.a1, &c.b1);
    let terms2 = polygon_terms(&reg.xi2, &c.a2, &c.b2);
    let ts: Vec<Rat> = reg.t_values().into_iter().map(|t| t - &c.t0).collect();
    let mut best: Option<Rat> = None;
    for (q1, l1) in &terms1 {
        for (q2, l2) in &terms2 {
            let a = q1 + q2;
            let a_sq = &a * &a;
            let lin = l1 + l2;
            for t in &ts {
                let b = t + &lin;
                let val = &a_sq + &b * &b;
                if best.as_ref().is_none_or(|cur| val > *cur) {
                    best = Some(val);
                }
            }
        }
    }
    best.expect("region has vertices")
}

/// An exact upper bound for the sphere value over the region.
///
/// `A = |ξ1 - ζ1|² + |ξ2 - ζ2|²` is a nonnegative convex function and `B`
/// is affine in the five real coordinates, so `A² + B²` is convex and its
/// maximum over the polytope is attained at a vertex. The vertices of the
/// product are the products of vertices.
pub fn region_max_bound(reg: &Region, s: &SpinalSphere) -> Rat {
    max_bound_real(reg, &s.real_center())
}
