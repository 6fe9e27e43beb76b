//! Vertex enumeration from a halfspace description.
//!
//! Intended for small systems (tens of inequalities): every `n`-subset of
//! halfspaces with independent normals is solved exactly, kept when
//! feasible, and deduplicated. Boundedness is established first by ruling
//! out recession directions, which for a pointed system must appear as
//! kernel directions of `(n-1)`-subsets.

use num_traits::{Signed, Zero};

use super::{linalg, Edge, Halfspace, IntVec, SmoothPolytope};
use crate::rational::{is_integer, rat_int, to_int, Int, Rational};
use crate::{Error, Result};

/// Exact rational vertices of the bounded polyhedron `A x <= rhs`,
/// deduplicated and sorted lexicographically. Errors when the system is
/// unbounded.
pub(crate) fn rational_vertices(
    halfspaces: &[Halfspace],
    dim: usize,
) -> Result<Vec<Vec<Rational>>> {
    if dim == 0 {
        return Err(Error::InvalidParameter("dimension 0 is not supported".into()));
    }
    if halfspaces.len() < dim + 1 {
        return Err(Error::Unbounded {
            direction: format!("fewer than {} halfspaces", dim + 1),
        });
    }
    check_bounded(halfspaces, dim)?;

    let f = halfspaces.len();
    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        let rows: Vec<Vec<Int>> = subset
            .iter()
            .map(|&i| halfspaces[i].normal.0.clone())
            .collect();
        let rhs: Vec<Int> = subset.iter().map(|&i| halfspaces[i].rhs.clone()).collect();
        if let Some(point) = linalg::solve_int(&rows, &rhs) {
            let feasible = halfspaces.iter().all(|h| {
                let value: Rational = h
                    .normal
                    .0
                    .iter()
                    .zip(&point)
                    .map(|(a, x)| rat_int(a) * x)
                    .sum();
                value <= rat_int(&h.rhs)
            });
            if feasible && !vertices.contains(&point) {
                vertices.push(point);
            }
        }
        if !advance(&mut subset, f) {
            break;
        }
    }
    if vertices.is_empty() {
        return Err(Error::Inconsistent(
            "halfspace system has no vertices (empty or not full-dimensional)".into(),
        ));
    }
    vertices.sort();
    Ok(vertices)
}

/// Advances an ascending index subset in lexicographic order.
fn advance(subset: &mut [usize], bound: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < bound - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Errors with a recession direction if one exists.
fn check_bounded(halfspaces: &[Halfspace], dim: usize) -> Result<()> {
    let all_rows: Vec<Vec<Int>> = halfspaces.iter().map(|h| h.normal.0.clone()).collect();
    // lineality: a direction in the kernel of every normal
    if let Some(d) = linalg::kernel_direction(&all_rows, dim) {
        return Err(Error::Unbounded {
            direction: format_direction(&d),
        });
    }
    // extreme rays live on (n-1)-subsets of tight constraints
    if dim == 1 {
        // in one dimension the normals are +-1; both signs must occur
        for sign in [1i64, -1] {
            let d = Int::from(sign);
            if halfspaces.iter().all(|h| !(&h.normal.0[0] * &d).is_positive()) {
                return Err(Error::Unbounded {
                    direction: format!("({sign})"),
                });
            }
        }
        return Ok(());
    }
    let f = halfspaces.len();
    let mut subset: Vec<usize> = (0..dim - 1).collect();
    loop {
        let rows: Vec<Vec<Int>> = subset
            .iter()
            .map(|&i| halfspaces[i].normal.0.clone())
            .collect();
        if let Some(d) = linalg::kernel_direction(&rows, dim) {
            // kernel of n-1 independent rows is one-dimensional: check both
            // orientations against every halfspace
            for candidate in [d.clone(), d.iter().map(|c| -c).collect::<Vec<_>>()] {
                let recedes = halfspaces.iter().all(|h| {
                    let value: Rational = h
                        .normal
                        .0
                        .iter()
                        .zip(&candidate)
                        .map(|(a, x)| rat_int(a) * x)
                        .sum();
                    !value.is_positive()
                });
                if recedes && candidate.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Unbounded {
                        direction: format_direction(&candidate),
                    });
                }
            }
        }
        if !advance(&mut subset, f) {
            break;
        }
    }
    Ok(())
}

fn format_direction(d: &[Rational]) -> String {
    let entries: Vec<String> = d.iter().map(|c| c.to_string()).collect();
    format!("({})", entries.join(", "))
}

/// Enumerates the vertices of a bounded lattice polytope given by
/// halfspaces. Errors on unbounded systems and on non-integral vertices.
pub fn enumerate_vertices(halfspaces: &[Halfspace], dim: usize) -> Result<Vec<IntVec>> {
    let rational = rational_vertices(halfspaces, dim)?;
    rational
        .into_iter()
        .map(|point| {
            if point.iter().all(is_integer) {
                Ok(IntVec(point.iter().map(|c| to_int(c).unwrap()).collect()))
            } else {
                Err(Error::NonIntegralVertex(format_direction(&point)))
            }
        })
        .collect()
}

impl SmoothPolytope {
    /// Builds the full polytope data from halfspaces alone: vertices by
    /// enumeration, edges by matching vertex pairs that share `dim - 1`
    /// tight halfspaces.
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<SmoothPolytope> {
        let vertices = enumerate_vertices(&halfspaces, dim)?;
        let edges = reconstruct_edges(&vertices, &halfspaces, dim)?;
        SmoothPolytope::assemble(dim, vertices, edges, halfspaces)
    }

    /// Builds polytope data from an explicit vertex list plus halfspaces,
    /// reconstructing edges the same way.
    pub fn from_vertices_and_halfspaces(
        dim: usize,
        vertices: Vec<IntVec>,
        halfspaces: Vec<Halfspace>,
    ) -> Result<SmoothPolytope> {
        let edges = reconstruct_edges(&vertices, &halfspaces, dim)?;
        SmoothPolytope::assemble(dim, vertices, edges, halfspaces)
    }
}

/// Edges of a simple polytope from tight-set combinatorics: two vertices are
/// adjacent exactly when their tight halfspace sets share `dim - 1`
/// elements.
fn reconstruct_edges(
    vertices: &[IntVec],
    halfspaces: &[Halfspace],
    dim: usize,
) -> Result<Vec<Edge>> {
    let tight: Vec<Vec<usize>> = vertices
        .iter()
        .map(|v| {
            (0..halfspaces.len())
                .filter(|&i| halfspaces[i].is_tight_at(v))
                .collect()
        })
        .collect();
    for (vi, t) in tight.iter().enumerate() {
        if t.len() != dim {
            return Err(Error::Inconsistent(format!(
                "vertex {} is tight on {} halfspaces, expected {dim} (simple polytope required)",
                vertices[vi],
                t.len()
            )));
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let shared = tight[i].iter().filter(|x| tight[j].contains(x)).count();
            if shared == dim - 1 {
                edges.push(Edge::between(vertices, i, j)?);
            }
        }
    }
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::make_box;
    use crate::rational::int;

    fn hs(normal: &[i64], rhs: i64) -> Halfspace {
        Halfspace {
            normal: IntVec::from_i64s(normal),
            rhs: int(rhs),
        }
    }

    #[test]
    fn unit_square_from_inequalities() {
        let system = vec![hs(&[1, 0], 1), hs(&[-1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 0)];
        let vertices = enumerate_vertices(&system, 2).unwrap();
        assert_eq!(
            vertices,
            vec![
                IntVec::from_i64s(&[0, 0]),
                IntVec::from_i64s(&[0, 1]),
                IntVec::from_i64s(&[1, 0]),
                IntVec::from_i64s(&[1, 1]),
            ]
        );
        let p = SmoothPolytope::from_halfspaces(2, system).unwrap();
        assert_eq!(p.edge_count(), 4);
        assert!(p.validate().unwrap().is_smooth);
    }

    #[test]
    fn triangle_from_inequalities() {
        let system = vec![hs(&[1, 1], 1), hs(&[-1, 0], 0), hs(&[0, -1], 0)];
        let vertices = enumerate_vertices(&system, 2).unwrap();
        assert_eq!(vertices.len(), 3);
    }

    #[test]
    fn unbounded_is_detected() {
        let system = vec![hs(&[1, 0], 1), hs(&[-1, 0], 0), hs(&[0, -1], 0)];
        match enumerate_vertices(&system, 2) {
            Err(Error::Unbounded { .. }) => {}
            other => panic!("expected unbounded error, got {other:?}"),
        }
        // missing any lower bound entirely
        let system = vec![hs(&[1, 0], 1), hs(&[0, 1], 1)];
        assert!(matches!(
            enumerate_vertices(&system, 2),
            Err(Error::Unbounded { .. })
        ));
    }

    #[test]
    fn non_integral_vertex_is_rejected() {
        let system = vec![hs(&[2, 0], 1), hs(&[-1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 0)];
        match enumerate_vertices(&system, 2) {
            Err(Error::NonIntegralVertex(_)) => {}
            other => panic!("expected non-integral error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_through_halfspaces() {
        let cube = make_box(&[int(2), int(3), int(4)]).unwrap();
        let rebuilt = SmoothPolytope::from_halfspaces(3, cube.halfspaces().to_vec()).unwrap();
        assert_eq!(rebuilt.vertex_count(), 8);
        assert_eq!(rebuilt.edge_count(), 12);
        assert!(rebuilt.validate().unwrap().is_smooth);
        let mut expected: Vec<IntVec> = cube.vertices().to_vec();
        expected.sort();
        assert_eq!(rebuilt.vertices(), &expected[..]);
    }
}
