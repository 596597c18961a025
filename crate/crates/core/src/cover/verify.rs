//! Branch-and-bound covering of regions by spinal spheres.
//!
//! Each region is tested against every sphere whose interior contains the
//! region's centroid; if none bounds the whole region strictly below `r⁴`
//! the region is split and the children are tried. The result is a proof
//! tree that [`check_tree`] can replay from scratch.

use std::fmt;

use num_traits::Signed;

use crate::arith::Rat;

use super::region::{max_bound_real, Region, Vertex};
use super::sphere::{point, sphere_value, SpinalSphere};

/// One accepted box: `bound < r⁴` for the named sphere, `margin = r⁴ - bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub region: Region,
    pub sphere_id: String,
    pub bound: Rat,
    pub margin: Rat,
    pub depth: u32,
}

/// A box left over when the depth budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncoveredBox {
    pub region: Region,
    /// A vertex or the centroid of the box that lies in no open sphere.
    /// When present, no amount of subdivision covers the box.
    pub witness: Option<(Vertex, Vertex, Rat)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofTree {
    Leaf { sphere_id: String },
    Split(Vec<ProofTree>),
    Open,
}

#[derive(Clone, Debug)]
pub struct PieceCertificate {
    /// 1-based piece number.
    pub piece: usize,
    pub region: Region,
    pub tree: ProofTree,
    /// Leaves in depth-first order, which is deterministic.
    pub leaves: Vec<Leaf>,
    pub uncovered: Vec<UncoveredBox>,
    /// Deepest level reached.
    pub depth: u32,
}

impl PieceCertificate {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn min_margin(&self) -> Option<&Rat> {
        self.leaves.iter().map(|l| &l.margin).min()
    }
}

#[derive(Clone, Debug)]
pub struct CoverCertificate {
    pub max_depth: u32,
    pub pieces: Vec<PieceCertificate>,
}

impl CoverCertificate {
    pub fn is_complete(&self) -> bool {
        self.pieces.iter().all(PieceCertificate::is_complete)
    }

    pub fn leaf_count(&self) -> usize {
        self.pieces.iter().map(PieceCertificate::leaf_count).sum()
    }

    pub fn depth(&self) -> u32 {
        self.pieces.iter().map(|p| p.depth).max().unwrap_or(0)
    }

    pub fn uncovered(&self) -> impl Iterator<Item = (usize, &UncoveredBox)> {
        self.pieces
            .iter()
            .flat_map(|p| p.uncovered.iter().map(move |u| (p.piece, u)))
    }
}

impl fmt::Display for CoverCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            let status = if p.is_complete() {
                "covered".to_string()
            } else {
                format!("{} uncovered boxes", p.uncovered.len())
            };
            writeln!(
                f,
                "Σ{}: {} leaves, depth {}, {}",
                p.piece,
                p.leaf_count(),
                p.depth,
                status
            )?;
        }
        Ok(())
    }
}

struct Search<'a> {
    spheres: &'a [SpinalSphere],
    centers: Vec<super::sphere::RealCenter>,
    max_depth: u32,
    leaves: Vec<Leaf>,
    uncovered: Vec<UncoveredBox>,
    deepest: u32,
}

impl Search<'_> {
    fn visit(&mut self, reg: &Region, depth: u32) -> ProofTree {
        self.deepest = self.deepest.max(depth);
        let (c1, c2, ct) = reg.centroid();
        let at = point(&c1[0], &c1[1], &c2[0], &c2[1], &ct);
        // Spheres not containing the centroid cannot contain the region.
        // Try the rest from the most interior outwards.
        let mut candidates: Vec<(Rat, usize)> = self
            .spheres
            .iter()
            .enumerate()
            .filter_map(|(k, s)| {
                let slack = &s.radius_pow4 - sphere_value(&at, s);
                slack.is_positive().then(|| (slack / &s.radius_pow4, k))
            })
            .collect();
        candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, k) in &candidates {
            let s = &self.spheres[*k];
            let bound = max_bound_real(reg, &self.centers[*k]);
            if bound < s.radius_pow4 {
                self.leaves.push(Leaf {
                    region: reg.clone(),
                    sphere_id: s.id.clone(),
                    margin: &s.radius_pow4 - &bound,
                    bound,
                    depth,
                });
                return ProofTree::Leaf {
                    sphere_id: s.id.clone(),
                };
            }
        }
        if depth >= self.max_depth || candidates.is_empty() {
            let witness = if candidates.is_empty() {
                Some((c1, c2, ct))
            } else {
                find_witness(reg, self.spheres)
            };
            self.uncovered.push(UncoveredBox {
                region: reg.clone(),
                witness,
            });
            return ProofTree::Open;
        }
        ProofTree::Split(
            reg.split()
                .iter()
                .map(|child| self.visit(child, depth + 1))
                .collect(),
        )
    }
}

/// A vertex of `reg` outside every open sphere, if any.
fn find_witness(reg: &Region, spheres: &[SpinalSphere]) -> Option<(Vertex, Vertex, Rat)> {
    for q1 in &reg.xi1.vertices {
        for q2 in &reg.xi2.vertices {
            for t in [&reg.t_lo, &reg.t_hi] {
                let p = point(&q1[0], &q1[1], &q2[0], &q2[1], t);
                if spheres.iter().all(|s| !s.contains(&p)) {
                    return Some((q1.clone(), q2.clone(), t.clone()));
                }
            }
        }
    }
    None
}

/// Covers one region, splitting at most `max_depth` times along any branch.
pub fn verify_region(
    piece: usize,
    region: &Region,
    spheres: &[SpinalSphere],
    max_depth: u32,
) -> PieceCertificate {
    let mut search = Search {
        spheres,
        centers: spheres.iter().map(SpinalSphere::real_center).collect(),
        max_depth,
        leaves: Vec::new(),
        uncovered: Vec::new(),
        deepest: 0,
    };
    let tree = search.visit(region, 0);
    PieceCertificate {
        piece,
        region: region.clone(),
        tree,
        leaves: search.leaves,
        uncovered: search.uncovered,
        depth: search.deepest,
    }
}

/// Runs [`verify_region`] on each piece; pieces are numbered from 1.
pub fn verify_covering(
    pieces: &[Region],
    spheres: &[SpinalSphere],
    max_depth: u32,
) -> CoverCertificate {
    CoverCertificate {
        max_depth,
        pieces: pieces
            .iter()
            .enumerate()
            .map(|(k, r)| verify_region(k + 1, r, spheres, max_depth))
            .collect(),
    }
}

/// Replays a proof tree: every leaf's bound is recomputed from the sphere
/// list and must be strictly below `r⁴`, and every split must be the
/// canonical one. Returns the number of leaves.
pub fn check_tree(
    region: &Region,
    tree: &ProofTree,
    spheres: &[SpinalSphere],
) -> Result<usize, String> {
    match tree {
        ProofTree::Open => Err(format!("open box {region}")),
        ProofTree::Leaf { sphere_id } => {
            let s = spheres
                .iter()
                .find(|s| &s.id == sphere_id)
                .ok_or_else(|| format!("unknown sphere {sphere_id}"))?;
            let bound = super::region::region_max_bound(region, s);
            if bound < s.radius_pow4 {
                Ok(1)
            } else {
                Err(format!(
                    "{sphere_id} bound {bound} ≥ {} on {region}",
                    s.radius_pow4
                ))
            }
        }
        ProofTree::Split(children) => {
            let parts = region.split();
            if parts.len() != children.len() {
                return Err(format!("split arity mismatch on {region}"));
            }
            let mut n = 0;
            for (r, t) in parts.iter().zip(children) {
                n += check_tree(r, t, spheres)?;
            }
            Ok(n)
        }
    }
}

/// Independent audit of a certificate: proof trees replay, leaf margins
/// are positive, leaf boxes sit inside their piece, and leaf measures sum
/// to the piece measure.
pub fn check_certificate(cert: &CoverCertificate, spheres: &[SpinalSphere]) -> Result<(), String> {
    for p in &cert.pieces {
        let n =
            check_tree(&p.region, &p.tree, spheres).map_err(|e| format!("Σ{}: {e}", p.piece))?;
        if n != p.leaves.len() {
            return Err(format!(
                "Σ{}: tree has {n} leaves, list has {}",
                p.piece,
                p.leaves.len()
            ));
        }
        let mut total = Rat::default();
        for l in &p.leaves {
            if !l.margin.is_positive() {
                return Err(format!("Σ{}: non-positive margin", p.piece));
            }
            let inside = l
                .region
                .xi1
                .vertices
                .iter()
                .all(|q| p.region.xi1.contains(q))
                && l.region
                    .xi2
                    .vertices
                    .iter()
                    .all(|q| p.region.xi2.contains(q))
                && l.region.t_lo >= p.region.t_lo
                && l.region.t_hi <= p.region.t_hi;
            if !inside {
                return Err(format!("Σ{}: leaf outside piece", p.piece));
            }
            total += l.region.measure();
        }
        if total != p.region.measure() {
            return Err(format!(
                "Σ{}: leaf measure {total} ≠ {}",
                p.piece,
                p.region.measure()
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::cover::region::sigma_pieces;
    use crate::cover::sphere::{find_sphere, isometric_sphere, standard_sphere_list};
    use crate::generators;

    #[test]
    fn sigma5_needs_no_subdivision() {
        let s0 = isometric_sphere(&generators::inversion(), "S0").unwrap();
        let pieces = sigma_pieces();
        let cert = verify_region(5, &pieces[4], std::slice::from_ref(&s0), 0);
        assert!(cert.is_complete());
        assert_eq!(cert.leaf_count(), 1);
        assert_eq!(cert.leaves[0].margin, rat(2, 1));
    }

    #[test]
    fn depth_zero_reports_uncovered_boxes() {
        let spheres = standard_sphere_list();
        let pieces = sigma_pieces();
        let cert = verify_region(9, &pieces[8], &spheres, 0);
        assert!(!cert.is_complete());
        assert_eq!(cert.uncovered.len(), 1);
        assert!(cert.uncovered[0].witness.is_none());
    }

    #[test]
    fn sigma9_with_s1_translates_alone_leaves_a_gap() {
        // Near ξ = (0, 0) both spheres centred over (1, 1) are too far away.
        let all = standard_sphere_list();
        let two: Vec<SpinalSphere> = ["S1", "S1@t0=+2"]
            .iter()
            .map(|id| find_sphere(&all, id).unwrap().clone())
            .collect();
        let cert = verify_region(9, &sigma_pieces()[8], &two, 6);
        assert!(!cert.is_complete());
        // The corner (0, 0, 0) is on the boundary of S1, hence in no open
        // sphere of the pair.
        let zero = [rat(0, 1), rat(0, 1)];
        assert!(cert
            .uncovered
            .iter()
            .any(|u| u.witness == Some((zero.clone(), zero.clone(), rat(0, 1)))));
        let with_s0: Vec<SpinalSphere> = two
            .iter()
            .cloned()
            .chain([find_sphere(&all, "S0").unwrap().clone()])
            .collect();
        let cert = verify_region(9, &sigma_pieces()[8], &with_s0, 8);
        assert!(cert.is_complete());
    }

    #[test]
    fn checker_rejects_tampering() {
        let spheres = standard_sphere_list();
        let pieces = sigma_pieces();
        let mut cert = verify_covering(&pieces[..2], &spheres, 8);
        assert!(cert.is_complete());
        check_certificate(&cert, &spheres).unwrap();
        // Reassign a leaf to a sphere that does not cover it.
        fn retarget(t: &mut ProofTree) -> bool {
            match t {
                ProofTree::Leaf { sphere_id } if sphere_id != "S4@t0=+2" => {
                    *sphere_id = "S4@t0=+2".into();
                    true
                }
                ProofTree::Split(cs) => cs.iter_mut().any(retarget),
                _ => false,
            }
        }
        assert!(retarget(&mut cert.pieces[0].tree));
        assert!(check_certificate(&cert, &spheres).is_err());
    }
}
