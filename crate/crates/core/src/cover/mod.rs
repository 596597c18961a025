//! Spinal spheres and an exact certificate that they cover the region
//! `Σ = Δ × Δ × [-1, 1]`, where `Δ` is the triangle `0, 1, i`.
//!
//! All comparisons happen on the fourth-power scale: a point is inside a
//! sphere of Cygan radius `r` iff `A² + B² < r⁴`.

mod region;
mod sphere;
mod verify;

pub use region::{
    base_s1, base_s2, base_s3, base_triangle, region_max_bound, sigma, sigma_pieces, Polygon,
    Region, Vertex,
};
pub use sphere::{
    base_map, find_sphere, is_centered_at_origin, isometric_sphere, point, sphere_map,
    sphere_value, standard_sphere_list, vertical_conjugate, SpinalSphere,
};
pub use verify::{
    check_certificate, check_tree, verify_covering, verify_region, CoverCertificate, Leaf,
    PieceCertificate, ProofTree, UncoveredBox,
};
