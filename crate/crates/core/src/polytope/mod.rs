//! Explicit vertex/edge/halfspace representations of smooth lattice
//! polytopes.
//!
//! A [`SmoothPolytope`] carries all three layers of data at once: integer
//! vertices, edges with primitive directions and integer lengths, and
//! facet-defining halfspaces. Constructors keep the layers consistent;
//! [`SmoothPolytope::validate`] re-checks everything from scratch and
//! reports smoothness and reflexivity.

mod build;
mod chisel;
mod format;
mod hrep;
mod linalg;

pub use build::{make_box, make_hexagon_prism};
pub use chisel::{apply_chisel_plan, ChiselBase, ChiselPlan};
pub use format::{parse_polytope_file, render_polytope_file, PolytopeFile};
pub use hrep::enumerate_vertices;
pub(crate) use hrep::rational_vertices;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::rational::Int;
use crate::{Error, Result};

/// An integer point or direction of fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(pub Vec<Int>);

impl IntVec {
    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![Int::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, c: &Int) -> IntVec {
        IntVec(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    /// Gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> Int {
        self.0
            .iter()
            .fold(Int::zero(), |acc, a| acc.gcd(a))
    }

    /// Splits into a primitive direction and its positive integer content.
    /// Returns an error for the zero vector.
    pub fn primitive_part(&self) -> Result<(IntVec, Int)> {
        let g = self.content();
        if g.is_zero() {
            return Err(Error::Inconsistent("zero vector has no direction".into()));
        }
        Ok((IntVec(self.0.iter().map(|a| a / &g).collect()), g))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }
}

impl std::fmt::Display for IntVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The halfspace `normal . x <= rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: IntVec,
    pub rhs: Int,
}

impl Halfspace {
    /// Builds a halfspace, dividing out the content of the normal. The
    /// content must divide the right-hand side (it always does for
    /// facet-defining inequalities of lattice polytopes).
    pub fn new(normal: IntVec, rhs: Int) -> Result<Halfspace> {
        let (primitive, g) = normal
            .primitive_part()
            .map_err(|_| Error::Inconsistent("halfspace normal is zero".into()))?;
        if g.is_one() {
            return Ok(Halfspace { normal: primitive, rhs });
        }
        let (q, r) = rhs.div_rem(&g);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "normal content {g} does not divide right-hand side {rhs}"
            )));
        }
        Ok(Halfspace {
            normal: primitive,
            rhs: q,
        })
    }

    pub fn contains(&self, point: &IntVec) -> bool {
        self.normal.dot(point) <= self.rhs
    }

    pub fn is_tight_at(&self, point: &IntVec) -> bool {
        self.normal.dot(point) == self.rhs
    }
}

/// An edge between two vertices, stored with its primitive direction
/// (oriented from the lower vertex index to the higher) and integer length:
/// `vertex[ends.1] = vertex[ends.0] + int_length * direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub ends: (usize, usize),
    pub direction: IntVec,
    pub int_length: Int,
}

impl Edge {
    /// Builds an edge between two distinct vertices, deriving the primitive
    /// direction and integer length from their difference.
    pub fn between(vertices: &[IntVec], i: usize, j: usize) -> Result<Edge> {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let diff = vertices[hi].sub(&vertices[lo]);
        let (direction, int_length) = diff
            .primitive_part()
            .map_err(|_| Error::Inconsistent(format!("edge ({lo}, {hi}) has coincident endpoints")))?;
        Ok(Edge {
            ends: (lo, hi),
            direction,
            int_length,
        })
    }

    /// The outgoing primitive direction seen from endpoint `v`.
    pub fn direction_from(&self, v: usize) -> IntVec {
        if v == self.ends.0 {
            self.direction.clone()
        } else {
            self.direction.neg()
        }
    }

    /// The endpoint opposite to `v`.
    pub fn other_end(&self, v: usize) -> usize {
        if v == self.ends.0 {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// A lattice polytope with explicit vertex, edge and halfspace data.
///
/// The name records the intended class: everything this crate constructs is
/// smooth (each vertex lies on exactly `dim` edges whose primitive
/// directions form a lattice basis). Data ingested from files may fail that
/// check; [`SmoothPolytope::validate`] reports it rather than assuming it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothPolytope {
    dim: usize,
    vertices: Vec<IntVec>,
    edges: Vec<Edge>,
    halfspaces: Vec<Halfspace>,
}

/// The outcome of [`SmoothPolytope::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dim: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub facet_count: usize,
    pub is_smooth: bool,
    pub is_reflexive: bool,
    pub min_edge_length: Option<Int>,
}

impl SmoothPolytope {
    /// Assembles a polytope from its three data layers, checking structural
    /// consistency (index ranges, edge arithmetic, vertex feasibility).
    pub fn assemble(
        dim: usize,
        vertices: Vec<IntVec>,
        edges: Vec<Edge>,
        halfspaces: Vec<Halfspace>,
    ) -> Result<SmoothPolytope> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension 0 is not supported".into()));
        }
        if vertices.is_empty() {
            return Err(Error::Inconsistent("polytope has no vertices".into()));
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::Inconsistent(format!(
                    "vertex {v} does not have dimension {dim}"
                )));
            }
        }
        for h in &halfspaces {
            if h.normal.dim() != dim {
                return Err(Error::Inconsistent("halfspace dimension mismatch".into()));
            }
            if !h.normal.is_primitive() {
                return Err(Error::Inconsistent(format!(
                    "halfspace normal {} is not primitive",
                    h.normal
                )));
            }
        }
        for e in &edges {
            let (i, j) = e.ends;
            if i >= j || j >= vertices.len() {
                return Err(Error::Inconsistent(format!(
                    "edge endpoints ({i}, {j}) out of range"
                )));
            }
            if e.int_length < Int::one() || !e.direction.is_primitive() {
                return Err(Error::Inconsistent(format!(
                    "edge ({i}, {j}) has invalid direction or length"
                )));
            }
            let reconstructed = vertices[i].add(&e.direction.scaled(&e.int_length));
            if reconstructed != vertices[j] {
                return Err(Error::Inconsistent(format!(
                    "edge ({i}, {j}) does not connect its endpoints"
                )));
            }
        }
        let p = SmoothPolytope {
            dim,
            vertices,
            edges,
            halfspaces,
        };
        p.check_feasibility()?;
        Ok(p)
    }

    fn check_feasibility(&self) -> Result<()> {
        for (vi, v) in self.vertices.iter().enumerate() {
            for h in &self.halfspaces {
                if !h.contains(v) {
                    return Err(Error::Inconsistent(format!(
                        "vertex {vi} = {v} violates halfspace {} . x <= {}",
                        h.normal, h.rhs
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn min_edge_length(&self) -> Option<Int> {
        self.edges.iter().map(|e| e.int_length.clone()).min()
    }

    /// Edge indices incident to a vertex, in ascending edge order.
    pub fn edges_at(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.ends.0 == v || e.ends.1 == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Full consistency check and classification.
    ///
    /// Errors indicate structurally inconsistent data (vertex/halfspace
    /// mismatch, broken edges, non-facet-defining halfspaces). A polytope
    /// that is merely not smooth or not reflexive yields `Ok` with the
    /// corresponding flags unset.
    pub fn validate(&self) -> Result<ValidationReport> {
        let n = self.dim;
        self.check_feasibility()?;

        // every halfspace must be facet-defining: tight at >= n vertices
        for h in &self.halfspaces {
            let tight = self.vertices.iter().filter(|v| h.is_tight_at(v)).count();
            if tight < n {
                return Err(Error::Inconsistent(format!(
                    "halfspace {} . x <= {} is tight at only {tight} vertices",
                    h.normal, h.rhs
                )));
            }
        }

        // edge midpoints (doubled) must lie in the doubled polytope
        for e in &self.edges {
            let double_mid = self.vertices[e.ends.0].add(&self.vertices[e.ends.1]);
            for h in &self.halfspaces {
                if h.normal.dot(&double_mid) > Int::from(2) * &h.rhs {
                    return Err(Error::Inconsistent(format!(
                        "midpoint of edge {:?} escapes the halfspace system",
                        e.ends
                    )));
                }
            }
        }

        // smoothness: every vertex on exactly n tight halfspaces and n
        // edges whose primitive directions form a lattice basis
        let mut is_smooth = true;
        for (vi, v) in self.vertices.iter().enumerate() {
            let tight = self
                .halfspaces
                .iter()
                .filter(|h| h.is_tight_at(v))
                .count();
            let incident = self.edges_at(vi);
            if tight < n || incident.len() != n {
                is_smooth = false;
                continue;
            }
            let dirs: Vec<Vec<Int>> = incident
                .iter()
                .map(|&ei| self.edges[ei].direction_from(vi).0)
                .collect();
            let det = linalg::det_int(&dirs);
            if !linalg::is_unit(&det) {
                is_smooth = false;
            }
        }

        let origin = IntVec::zeros(n);
        let is_reflexive = self
            .halfspaces
            .iter()
            .all(|h| h.rhs == Int::one() && h.normal.dot(&origin) < h.rhs);

        Ok(ValidationReport {
            dim: n,
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            facet_count: self.facet_count(),
            is_smooth,
            is_reflexive,
            min_edge_length: self.min_edge_length(),
        })
    }

    /// Validates and additionally requires smoothness; used by the
    /// construction operations, which promise smooth outputs.
    pub(crate) fn validated_smooth(self, context: &str) -> Result<SmoothPolytope> {
        let report = self.validate()?;
        if !report.is_smooth {
            return Err(Error::NotSmooth(context.to_string()));
        }
        Ok(self)
    }

    /// Scales vertices, right-hand sides and edge lengths by `c >= 1`.
    pub fn dilate(&self, c: &Int) -> Result<SmoothPolytope> {
        if c < &Int::one() {
            return Err(Error::InvalidParameter(format!(
                "dilation factor must be >= 1, got {c}"
            )));
        }
        Ok(SmoothPolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(c)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    ends: e.ends,
                    direction: e.direction.clone(),
                    int_length: &e.int_length * c,
                })
                .collect(),
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    normal: h.normal.clone(),
                    rhs: &h.rhs * c,
                })
                .collect(),
        })
    }

    /// Cartesian product: vertices concatenate, edges pair an edge of one
    /// factor with a vertex of the other, halfspaces embed with zero padding.
    pub fn product(&self, other: &SmoothPolytope) -> Result<SmoothPolytope> {
        let dim = self.dim + other.dim;
        let stride = other.vertex_count();
        let index = |ip: usize, iq: usize| ip * stride + iq;

        let mut vertices = Vec::with_capacity(self.vertex_count() * stride);
        for p in &self.vertices {
            for q in &other.vertices {
                let mut coords = p.0.clone();
                coords.extend(q.0.iter().cloned());
                vertices.push(IntVec(coords));
            }
        }

        let mut edges = Vec::new();
        for e in &self.edges {
            for iq in 0..stride {
                let mut direction = e.direction.0.clone();
                direction.extend(std::iter::repeat_n(Int::zero(), other.dim));
                edges.push(Edge {
                    ends: (index(e.ends.0, iq), index(e.ends.1, iq)),
                    direction: IntVec(direction),
                    int_length: e.int_length.clone(),
                });
            }
        }
        for ip in 0..self.vertex_count() {
            for e in &other.edges {
                let mut direction = vec![Int::zero(); self.dim];
                direction.extend(e.direction.0.iter().cloned());
                edges.push(Edge {
                    ends: (index(ip, e.ends.0), index(ip, e.ends.1)),
                    direction: IntVec(direction),
                    int_length: e.int_length.clone(),
                });
            }
        }

        let mut halfspaces = Vec::with_capacity(self.facet_count() + other.facet_count());
        for h in &self.halfspaces {
            let mut normal = h.normal.0.clone();
            normal.extend(std::iter::repeat_n(Int::zero(), other.dim));
            halfspaces.push(Halfspace {
                normal: IntVec(normal),
                rhs: h.rhs.clone(),
            });
        }
        for h in &other.halfspaces {
            let mut normal = vec![Int::zero(); self.dim];
            normal.extend(h.normal.0.iter().cloned());
            halfspaces.push(Halfspace {
                normal: IntVec(normal),
                rhs: h.rhs.clone(),
            });
        }

        SmoothPolytope::assemble(dim, vertices, edges, halfspaces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn intvec_basics() {
        let v = IntVec::from_i64s(&[2, -4, 6]);
        assert_eq!(v.content(), int(2));
        let (dir, len) = v.primitive_part().unwrap();
        assert_eq!(dir, IntVec::from_i64s(&[1, -2, 3]));
        assert_eq!(len, int(2));
        assert!(IntVec::from_i64s(&[3, 5]).is_primitive());
        assert!(IntVec::zeros(2).primitive_part().is_err());
        assert_eq!(
            IntVec::from_i64s(&[1, 2]).dot(&IntVec::from_i64s(&[3, 4])),
            int(11)
        );
    }

    #[test]
    fn halfspace_normalization() {
        let h = Halfspace::new(IntVec::from_i64s(&[2, 4]), int(6)).unwrap();
        assert_eq!(h.normal, IntVec::from_i64s(&[1, 2]));
        assert_eq!(h.rhs, int(3));
        assert!(Halfspace::new(IntVec::from_i64s(&[2, 4]), int(3)).is_err());
        assert!(Halfspace::new(IntVec::zeros(2), int(1)).is_err());
    }

    #[test]
    fn edge_between() {
        let vertices = vec![IntVec::from_i64s(&[0, 0]), IntVec::from_i64s(&[0, 3])];
        let e = Edge::between(&vertices, 1, 0).unwrap();
        assert_eq!(e.ends, (0, 1));
        assert_eq!(e.direction, IntVec::from_i64s(&[0, 1]));
        assert_eq!(e.int_length, int(3));
        assert_eq!(e.direction_from(1), IntVec::from_i64s(&[0, -1]));
        assert_eq!(e.other_end(0), 1);
    }

    #[test]
    fn assemble_rejects_bad_data() {
        let vertices = vec![IntVec::from_i64s(&[0]), IntVec::from_i64s(&[2])];
        let halfspaces = vec![
            Halfspace::new(IntVec::from_i64s(&[1]), int(2)).unwrap(),
            Halfspace::new(IntVec::from_i64s(&[-1]), int(0)).unwrap(),
        ];
        let bad_edge = Edge {
            ends: (0, 5),
            direction: IntVec::from_i64s(&[1]),
            int_length: int(2),
        };
        assert!(matches!(
            SmoothPolytope::assemble(1, vertices.clone(), vec![bad_edge], halfspaces.clone()),
            Err(Error::Inconsistent(_))
        ));
        let edge = Edge::between(&vertices, 0, 1).unwrap();
        let p = SmoothPolytope::assemble(1, vertices, vec![edge], halfspaces).unwrap();
        let report = p.validate().unwrap();
        assert!(report.is_smooth);
        assert_eq!(report.min_edge_length, Some(int(2)));
    }
}
