//! Explicit base polytopes: boxes and the hexagon prism.

use num_traits::{One, Zero};

use super::{Edge, Halfspace, IntVec, SmoothPolytope};
use crate::rational::Int;
use crate::{Error, Result};

/// The box `[0, a_1] x ... x [0, a_n]` with all `2^n` vertices, `n 2^(n-1)`
/// edges and `2n` halfspaces.
pub fn make_box(sides: &[Int]) -> Result<SmoothPolytope> {
    let n = sides.len();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "box needs at least one side (dimension 0 is not supported)".into(),
        ));
    }
    if n > 20 {
        return Err(Error::InvalidParameter(format!(
            "dimension {n} too large for an explicit vertex representation"
        )));
    }
    if sides.iter().any(|a| a < &Int::one()) {
        return Err(Error::InvalidParameter(format!(
            "box sides must be >= 1, got {sides:?}"
        )));
    }

    let count = 1usize << n;
    let mut vertices = Vec::with_capacity(count);
    for mask in 0..count {
        let coords = (0..n)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    sides[i].clone()
                } else {
                    Int::zero()
                }
            })
            .collect();
        vertices.push(IntVec(coords));
    }

    let mut edges = Vec::with_capacity(n * count / 2);
    for i in 0..n {
        let mut direction = vec![Int::zero(); n];
        direction[i] = Int::one();
        for mask in 0..count {
            if mask & (1 << i) != 0 {
                continue;
            }
            edges.push(Edge {
                ends: (mask, mask | (1 << i)),
                direction: IntVec(direction.clone()),
                int_length: sides[i].clone(),
            });
        }
    }

    let mut halfspaces = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut up = vec![Int::zero(); n];
        up[i] = Int::one();
        halfspaces.push(Halfspace {
            normal: IntVec(up.clone()),
            rhs: sides[i].clone(),
        });
        up[i] = -Int::one();
        halfspaces.push(Halfspace {
            normal: IntVec(up),
            rhs: Int::zero(),
        });
    }

    SmoothPolytope::assemble(n, vertices, edges, halfspaces)?.validated_smooth("box")
}

/// `scale` times the prism over the smooth hexagon with vertices
/// `(1,1), (0,1), (-1,0), (-1,-1), (0,-1), (1,0)`: 12 vertices, 18 edges,
/// 8 halfspaces.
pub fn make_hexagon_prism(scale: &Int) -> Result<SmoothPolytope> {
    if scale < &Int::one() {
        return Err(Error::InvalidParameter(format!(
            "prism scale must be >= 1, got {scale}"
        )));
    }
    let hex = [(1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0)];
    let mut vertices = Vec::with_capacity(12);
    for z in [0i64, 1] {
        for (x, y) in hex {
            vertices.push(IntVec::from_i64s(&[x, y, z]));
        }
    }

    let mut edges = Vec::with_capacity(18);
    for level in [0usize, 6] {
        for i in 0..6 {
            let a = level + i;
            let b = level + (i + 1) % 6;
            edges.push(Edge::between(&vertices, a, b)?);
        }
    }
    for i in 0..6 {
        edges.push(Edge::between(&vertices, i, i + 6)?);
    }

    let normals: [(i64, i64, i64, i64); 8] = [
        (1, 0, 0, 1),
        (0, 1, 0, 1),
        (-1, 1, 0, 1),
        (-1, 0, 0, 1),
        (0, -1, 0, 1),
        (1, -1, 0, 1),
        (0, 0, 1, 1),
        (0, 0, -1, 0),
    ];
    let halfspaces = normals
        .iter()
        .map(|&(a, b, c, rhs)| Halfspace {
            normal: IntVec::from_i64s(&[a, b, c]),
            rhs: Int::from(rhs),
        })
        .collect();

    SmoothPolytope::assemble(3, vertices, edges, halfspaces)?
        .validated_smooth("hexagon prism")?
        .dilate(scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn unit_cube() {
        let cube = make_box(&[int(1), int(1), int(1)]).unwrap();
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.edge_count(), 12);
        assert_eq!(cube.facet_count(), 6);
        let report = cube.validate().unwrap();
        assert!(report.is_smooth);
        // origin lies on the boundary, so this cube is not reflexive
        assert!(!report.is_reflexive);
    }

    #[test]
    fn scaled_seven_cube() {
        let cube = make_box(&vec![int(5); 7]).unwrap();
        assert_eq!(cube.vertex_count(), 128);
        assert_eq!(cube.edge_count(), 7 * 64);
        assert!(cube.edges().iter().all(|e| e.int_length == int(5)));
        assert!(cube.validate().unwrap().is_smooth);
    }

    #[test]
    fn rectangle() {
        let rect = make_box(&[int(2), int(3)]).unwrap();
        let mut lengths: Vec<Int> = rect.edges().iter().map(|e| e.int_length.clone()).collect();
        lengths.sort();
        lengths.dedup();
        assert_eq!(lengths, vec![int(2), int(3)]);
        assert!(make_box(&[]).is_err());
        assert!(make_box(&[int(0)]).is_err());
    }

    #[test]
    fn hexagon_prism() {
        let prism = make_hexagon_prism(&int(1)).unwrap();
        assert_eq!(prism.vertex_count(), 12);
        assert_eq!(prism.edge_count(), 18);
        assert_eq!(prism.facet_count(), 8);
        assert!(prism.validate().unwrap().is_smooth);
        assert_eq!(prism.min_edge_length(), Some(int(1)));
    }

    #[test]
    fn hexagon_prism_scaling_composes() {
        let scaled = make_hexagon_prism(&int(3)).unwrap();
        let dilated = make_hexagon_prism(&int(1)).unwrap().dilate(&int(3)).unwrap();
        assert_eq!(scaled, dilated);
        assert_eq!(scaled.min_edge_length(), Some(int(3)));
    }

    #[test]
    fn products() {
        let segment = make_box(&[int(1)]).unwrap();
        let square = segment.product(&segment).unwrap();
        assert_eq!(square.vertex_count(), 4);
        assert_eq!(square.edge_count(), 4);
        assert_eq!(square.facet_count(), 4);
        assert!(square.validate().unwrap().is_smooth);
        // same vertex set as the directly built unit square
        let mut a: Vec<IntVec> = square.vertices().to_vec();
        let mut b: Vec<IntVec> = make_box(&[int(1), int(1)]).unwrap().vertices().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn dilation() {
        let cube = make_box(&[int(1), int(1), int(1)]).unwrap();
        let tripled = cube.dilate(&int(3)).unwrap();
        assert_eq!(tripled.min_edge_length(), Some(int(3)));
        assert_eq!(
            tripled.vertices()[7],
            IntVec::from_i64s(&[3, 3, 3])
        );
        assert!(cube.dilate(&int(0)).is_err());
    }
}
