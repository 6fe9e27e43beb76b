//! Vertex chiseling: cutting corners off smooth polytopes.
//!
//! Chiseling a vertex `v` at depth `b` replaces `v` by the `n` points
//! `v + b*u_i` along its primitive edge directions and adds one cut facet.
//! Because the directions form a lattice basis there is a unique integer
//! vector `w` with `w . u_i = 1` for all `i`; the retained region satisfies
//! `w . (x - v) >= b`, stored as `(-w) . x <= -(w . v) - b`.

use num_traits::One;

use super::{build, linalg, Edge, Halfspace, IntVec, SmoothPolytope};
use crate::rational::{int, to_int, Int};
use crate::{Error, Result};

/// A base polytope plus a sequence of full-chisel depths.
#[derive(Clone, Debug)]
pub struct ChiselPlan {
    pub base: ChiselBase,
    pub depths: Vec<Int>,
}

/// The base polytope of a [`ChiselPlan`].
#[derive(Clone, Debug)]
pub enum ChiselBase {
    /// The cube `[0, scale]^dim`.
    Cube { dim: usize, scale: Int },
    /// The hexagon prism scaled by `scale`.
    HexagonPrism { scale: Int },
    /// Any explicitly given smooth polytope.
    Explicit(Box<SmoothPolytope>),
}

impl ChiselPlan {
    /// Builds the base and applies every chisel stage in order. A failing
    /// stage is reported with its index (1-based).
    pub fn apply(&self) -> Result<SmoothPolytope> {
        let mut p = match &self.base {
            ChiselBase::Cube { dim, scale } => build::make_box(&vec![scale.clone(); *dim])?,
            ChiselBase::HexagonPrism { scale } => build::make_hexagon_prism(scale)?,
            ChiselBase::Explicit(p) => p.as_ref().clone(),
        };
        for (stage, b) in self.depths.iter().enumerate() {
            p = p.chisel_all(b).map_err(|e| Error::ChiselStage {
                stage: stage + 1,
                source: Box::new(e),
            })?;
        }
        Ok(p)
    }
}

/// Incident-edge data at one vertex: edge index, outgoing primitive
/// direction, integer length, opposite endpoint.
struct Corner {
    edge_indices: Vec<usize>,
    directions: Vec<IntVec>,
    lengths: Vec<Int>,
    others: Vec<usize>,
}

impl SmoothPolytope {
    fn corner(&self, v: usize) -> Result<Corner> {
        let edge_indices = self.edges_at(v);
        if edge_indices.len() != self.dim() {
            return Err(Error::NotSmooth(format!(
                "vertex {v} has {} incident edges, expected {}",
                edge_indices.len(),
                self.dim()
            )));
        }
        let mut directions = Vec::with_capacity(edge_indices.len());
        let mut lengths = Vec::with_capacity(edge_indices.len());
        let mut others = Vec::with_capacity(edge_indices.len());
        for &ei in &edge_indices {
            let e = &self.edges()[ei];
            directions.push(e.direction_from(v));
            lengths.push(e.int_length.clone());
            others.push(e.other_end(v));
        }
        Ok(Corner {
            edge_indices,
            directions,
            lengths,
            others,
        })
    }

    /// The integer vector `w` with `w . u_i = 1` for every outgoing
    /// direction at the corner. Exists and is integral exactly because the
    /// directions form a lattice basis.
    fn cut_normal(&self, v: usize, corner: &Corner) -> Result<IntVec> {
        let rows: Vec<Vec<Int>> = corner.directions.iter().map(|d| d.0.clone()).collect();
        let ones = vec![Int::one(); self.dim()];
        let solution = linalg::solve_int(&rows, &ones)
            .ok_or_else(|| Error::NotSmooth(format!("edge directions at vertex {v} are dependent")))?;
        let mut w = Vec::with_capacity(solution.len());
        for c in &solution {
            w.push(to_int(c).ok_or_else(|| {
                Error::NotSmooth(format!(
                    "edge directions at vertex {v} do not form a lattice basis"
                ))
            })?);
        }
        Ok(IntVec(w))
    }

    fn cut_halfspace(&self, v: usize, w: &IntVec, b: &Int) -> Halfspace {
        Halfspace {
            normal: w.neg(),
            rhs: -(w.dot(&self.vertices()[v])) - b,
        }
    }

    /// Chisels off a single vertex at depth `b`.
    ///
    /// Every edge at the vertex must have integer length at least `b + 1`,
    /// so that the new points lie inside the old edges.
    pub fn chisel_vertex(&self, v: usize, b: &Int) -> Result<SmoothPolytope> {
        if b < &Int::one() {
            return Err(Error::InvalidParameter(format!("chisel depth must be >= 1, got {b}")));
        }
        if v >= self.vertex_count() {
            return Err(Error::InvalidParameter(format!("vertex index {v} out of range")));
        }
        let n = self.dim();
        let corner = self.corner(v)?;
        for (i, &ei) in corner.edge_indices.iter().enumerate() {
            if corner.lengths[i] < b + Int::one() {
                return Err(Error::ChiselDepth {
                    depth: b.clone(),
                    needed: b + Int::one(),
                    edge: self.edges()[ei].ends,
                    length: corner.lengths[i].clone(),
                });
            }
        }
        let w = self.cut_normal(v, &corner)?;

        // old vertices minus v, then the n new corner points
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut vertices = Vec::with_capacity(self.vertex_count() - 1 + n);
        for (i, vert) in self.vertices().iter().enumerate() {
            if i != v {
                new_index[i] = vertices.len();
                vertices.push(vert.clone());
            }
        }
        let first_new = vertices.len();
        for d in &corner.directions {
            vertices.push(self.vertices()[v].add(&d.scaled(b)));
        }

        let mut edges = Vec::with_capacity(self.edge_count() + n * (n - 1) / 2);
        for (ei, e) in self.edges().iter().enumerate() {
            if let Some(slot) = corner.edge_indices.iter().position(|&x| x == ei) {
                // shortened remainder of an edge at v
                let a = first_new + slot;
                let z = new_index[corner.others[slot]];
                edges.push(normalized_edge(&vertices, a, z)?);
            } else {
                edges.push(Edge {
                    ends: (new_index[e.ends.0], new_index[e.ends.1]),
                    direction: e.direction.clone(),
                    int_length: e.int_length.clone(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                edges.push(normalized_edge(&vertices, first_new + i, first_new + j)?);
            }
        }

        let mut halfspaces = self.halfspaces().to_vec();
        halfspaces.push(self.cut_halfspace(v, &w, b));

        SmoothPolytope::assemble(n, vertices, edges, halfspaces)?
            .validated_smooth("chiseled vertex")
    }

    /// Chisels all vertices simultaneously at depth `b` (the full chisel).
    ///
    /// Every edge must have integer length at least `2b + 1`; each original
    /// edge keeps a shortened middle part and each original vertex turns
    /// into a cut simplex facet. The vertex count multiplies by the
    /// dimension.
    pub fn chisel_all(&self, b: &Int) -> Result<SmoothPolytope> {
        if b < &Int::one() {
            return Err(Error::InvalidParameter(format!("chisel depth must be >= 1, got {b}")));
        }
        let n = self.dim();
        let needed = int(2) * b + Int::one();
        for e in self.edges() {
            if e.int_length < needed {
                return Err(Error::ChiselDepth {
                    depth: b.clone(),
                    needed,
                    edge: e.ends,
                    length: e.int_length.clone(),
                });
            }
        }

        let mut corners = Vec::with_capacity(self.vertex_count());
        for v in 0..self.vertex_count() {
            corners.push(self.corner(v)?);
        }

        // one new vertex per (vertex, incident edge) pair
        let mut vertices = Vec::with_capacity(n * self.vertex_count());
        let mut id = vec![vec![usize::MAX; 0]; self.vertex_count()];
        for (v, corner) in corners.iter().enumerate() {
            id[v] = corner
                .directions
                .iter()
                .map(|d| {
                    vertices.push(self.vertices()[v].add(&d.scaled(b)));
                    vertices.len() - 1
                })
                .collect();
        }
        let slot_of = |v: usize, ei: usize| -> usize {
            corners[v]
                .edge_indices
                .iter()
                .position(|&x| x == ei)
                .expect("edge incident to vertex")
        };

        let mut edges = Vec::with_capacity(self.edge_count() + self.vertex_count() * n * (n - 1) / 2);
        for (ei, e) in self.edges().iter().enumerate() {
            let (p, q) = e.ends;
            let a = id[p][slot_of(p, ei)];
            let z = id[q][slot_of(q, ei)];
            edges.push(normalized_edge(&vertices, a, z)?);
        }
        for ids in &id {
            for i in 0..n {
                for j in i + 1..n {
                    edges.push(normalized_edge(&vertices, ids[i], ids[j])?);
                }
            }
        }

        let mut halfspaces = self.halfspaces().to_vec();
        for (v, corner) in corners.iter().enumerate() {
            let w = self.cut_normal(v, corner)?;
            halfspaces.push(self.cut_halfspace(v, &w, b));
        }

        SmoothPolytope::assemble(n, vertices, edges, halfspaces)?
            .validated_smooth("full chisel")
    }
}

/// Edge between two vertex indices with orientation normalized to run from
/// the lower index to the higher.
fn normalized_edge(vertices: &[IntVec], a: usize, b: usize) -> Result<Edge> {
    debug_assert_ne!(a, b);
    Edge::between(vertices, a, b)
}

/// Convenience free function mirroring [`ChiselPlan::apply`].
pub fn apply_chisel_plan(plan: &ChiselPlan) -> Result<SmoothPolytope> {
    plan.apply()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::build::{make_box, make_hexagon_prism};
    use crate::rational::int;

    fn cube(dim: usize, scale: i64) -> SmoothPolytope {
        make_box(&vec![int(scale); dim]).unwrap()
    }

    #[test]
    fn pentagon_from_square_corner() {
        // 3 x [0,1]^2 with the origin chiseled at depth 1 is a pentagon
        let p = cube(2, 3).chisel_vertex(0, &int(1)).unwrap();
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 5);
        assert_eq!(p.facet_count(), 5);
        assert!(p.validate().unwrap().is_smooth);
        // the cut facet is x + y >= 1, stored as -x - y <= -1
        let cut = p.halfspaces().last().unwrap();
        assert_eq!(cut.normal, IntVec::from_i64s(&[-1, -1]));
        assert_eq!(cut.rhs, int(-1));
    }

    #[test]
    fn corner_chiseled_doubled_cube() {
        for n in 2..=4 {
            let p = cube(n, 2).chisel_vertex(0, &int(1)).unwrap();
            assert_eq!(p.vertex_count(), (1 << n) - 1 + n);
            assert!(p.validate().unwrap().is_smooth);
        }
    }

    #[test]
    fn chisel_vertex_rejects_short_edges() {
        match cube(3, 1).chisel_vertex(0, &int(1)) {
            Err(Error::ChiselDepth { length, needed, .. }) => {
                assert_eq!(length, int(1));
                assert_eq!(needed, int(2));
            }
            other => panic!("expected depth error, got {other:?}"),
        }
    }

    #[test]
    fn octagon_from_full_chisel() {
        let p = cube(2, 3).chisel_all(&int(1)).unwrap();
        assert_eq!(p.vertex_count(), 8);
        assert_eq!(p.edge_count(), 8);
        assert_eq!(p.facet_count(), 8);
        assert!(p.validate().unwrap().is_smooth);
    }

    #[test]
    fn first_tower_stage() {
        let p = cube(3, 3).chisel_all(&int(1)).unwrap();
        assert_eq!(p.vertex_count(), 24);
        assert_eq!(p.edge_count(), 36);
        assert_eq!(p.facet_count(), 14);
        assert!(p.validate().unwrap().is_smooth);
        assert!(cube(3, 1).chisel_all(&int(1)).is_err());
    }

    #[test]
    fn vertex_count_law() {
        // a full chisel multiplies the vertex count by the dimension
        for (p, n) in [
            (cube(2, 5), 2usize),
            (cube(3, 5), 3),
            (make_hexagon_prism(&int(3)).unwrap(), 3),
        ] {
            let f0 = p.vertex_count();
            let chiseled = p.chisel_all(&int(1)).unwrap();
            assert_eq!(chiseled.vertex_count(), n * f0);
        }
    }

    #[test]
    fn tower_plan_stages() {
        let plan = ChiselPlan {
            base: ChiselBase::Cube { dim: 3, scale: int(9) },
            depths: vec![int(3), int(1)],
        };
        let p = plan.apply().unwrap();
        assert_eq!(p.vertex_count(), 72);
        assert_eq!(p.facet_count(), 38);
        assert!(p.validate().unwrap().is_smooth);
    }

    #[test]
    fn plan_reports_failing_stage() {
        let plan = ChiselPlan {
            base: ChiselBase::Cube { dim: 3, scale: int(3) },
            depths: vec![int(2)],
        };
        match plan.apply() {
            Err(Error::ChiselStage { stage: 1, .. }) => {}
            other => panic!("expected stage-1 error, got {other:?}"),
        }
        let plan = ChiselPlan {
            base: ChiselBase::Cube { dim: 3, scale: int(9) },
            depths: vec![int(3), int(2)],
        };
        match plan.apply() {
            Err(Error::ChiselStage { stage: 2, .. }) => {}
            other => panic!("expected stage-2 error, got {other:?}"),
        }
    }

    #[test]
    fn product_with_segment() {
        let stage1 = cube(3, 3).chisel_all(&int(1)).unwrap();
        let segment = make_box(&[int(730)]).unwrap();
        let product = stage1.product(&segment).unwrap();
        assert_eq!(product.vertex_count(), 48);
        assert_eq!(product.facet_count(), stage1.facet_count() + 2);
        assert!(product.validate().unwrap().is_smooth);
    }
}
