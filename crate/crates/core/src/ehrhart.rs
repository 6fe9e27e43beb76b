//! Closed-form Ehrhart polynomials of the chiseled families.
//!
//! The central identity: chiseling one vertex of a smooth polytope at depth
//! `b` removes `C(b*t + n - 1, n)` from the Ehrhart polynomial, so a full
//! chisel of a polytope with `f0` vertices removes `f0 * C(b*t + n - 1, n)`,
//! and iterating multiplies the vertex count by `n` at every stage. All
//! family polynomials below are assembled from that recurrence plus the
//! product rule `i(P x Q, t) = i(P, t) * i(Q, t)`.

use num_traits::{One, Signed};

use crate::poly::{binomial_poly, Polynomial};
use crate::rational::{
    binomial_u, floor_int, int, rat, rat_int, rat_pow, rat_pow_int, Int, Rational,
};
use crate::{Error, Result};

/// The three base polytopes with textbook Ehrhart polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicPolytope {
    /// Unit cube `[0,1]^n`: `(t+1)^n`.
    Cube,
    /// Convex hull of the `n` standard basis vectors, dimension `n-1`:
    /// `C(t+n-1, n-1)`.
    StdSimplex,
    /// Convex hull of the origin and the basis vectors: `C(t+n, n)`.
    UnimodSimplex,
}

/// Ehrhart polynomial of a basic polytope.
pub fn ehrhart_basic(which: BasicPolytope, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension parameter must be >= 1".into()));
    }
    Ok(match which {
        BasicPolytope::Cube => scaled_cube(n, &Int::one()),
        BasicPolytope::StdSimplex => binomial_poly(&Int::one(), &Int::from(n - 1), n - 1),
        BasicPolytope::UnimodSimplex => binomial_poly(&Int::one(), &Int::from(n), n),
    })
}

/// `(a*t + 1)^n`, the Ehrhart polynomial of the cube `[0,a]^n`.
pub fn scaled_cube(n: usize, a: &Int) -> Polynomial {
    Polynomial::linear(rat(1), rat_int(a)).pow(n)
}

/// Ehrhart polynomial after iterated full chiseling, computed symbolically.
///
/// `base_poly` is the Ehrhart polynomial of a base polytope with `f0`
/// vertices and minimum integer edge length 1 (unit cube, unit hexagon
/// prism). The base is dilated by `scale` and then fully chiseled at the
/// given depths in order. Validity is tracked analytically: the minimum
/// integer edge length starts at `scale`, each stage of depth `b` requires
/// it to be at least `2b + 1`, and afterwards it becomes
/// `min(b, previous - 2b)` (cut-facet edges versus shortened edges).
pub fn ehrhart_chisel_series(
    base_poly: &Polynomial,
    f0: &Int,
    dim: usize,
    scale: &Int,
    depths: &[Int],
) -> Result<Polynomial> {
    if dim == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    if scale < &Int::one() {
        return Err(Error::InvalidParameter("scale must be >= 1".into()));
    }
    let mut result = base_poly.compose_scale(scale);
    let mut min_edge = scale.clone();
    let mut vertices = rat_int(f0);
    let n_rat = rat(dim as i64);
    for (stage, b) in depths.iter().enumerate() {
        if b < &Int::one() {
            return Err(Error::InvalidParameter(format!(
                "chisel depth at stage {} must be >= 1",
                stage + 1
            )));
        }
        let needed = Int::from(2) * b + Int::one();
        if min_edge < needed {
            return Err(Error::ChiselStage {
                stage: stage + 1,
                source: Box::new(Error::InvalidParameter(format!(
                    "minimum edge length {min_edge} < {needed} required for depth {b}"
                ))),
            });
        }
        let cut = binomial_poly(b, &Int::from(dim - 1), dim).scaled(&vertices);
        result = &result - &cut;
        vertices *= &n_rat;
        min_edge = b.clone().min(min_edge - Int::from(2) * b);
    }
    Ok(result)
}

/// Ehrhart polynomial of the cube `[0,a]^n` with all `2^n` corners chiseled
/// at depth `b`: `(a*t+1)^n - 2^n * C(b*t+n-1, n)`. Requires `a > 2b >= 2`.
pub fn ehrhart_chiseled_cube(n: usize, a: &Int, b: &Int) -> Result<Polynomial> {
    if n == 0 || b < &Int::one() || *a < Int::from(2) * b + Int::one() {
        return Err(Error::InvalidParameter(format!(
            "chiseled cube needs n >= 1 and a > 2b >= 2, got n={n}, a={a}, b={b}"
        )));
    }
    let corners = rat_pow(2, n as i64);
    Ok(&scaled_cube(n, a) - &binomial_poly(b, &Int::from(n - 1), n).scaled(&corners))
}

/// Ehrhart polynomial of `[0,a]^n` with a single corner chiseled at depth
/// `b`: `(a*t+1)^n - C(b*t+n-1, n)`. Requires `a > b >= 1`.
pub fn ehrhart_corner_chiseled_cube(n: usize, a: &Int, b: &Int) -> Result<Polynomial> {
    if n == 0 || b < &Int::one() || a <= b {
        return Err(Error::InvalidParameter(format!(
            "corner-chiseled cube needs n >= 1 and a > b >= 1, got n={n}, a={a}, b={b}"
        )));
    }
    Ok(&scaled_cube(n, a) - &binomial_poly(b, &Int::from(n - 1), n))
}

/// Ehrhart polynomial of the box `prod [0, a_i]` with the corner at the
/// origin chiseled at depth `b`:
/// `prod (a_i*t + 1) - C(b*t+n, n) + C(b*t+n-1, n-1)`. Requires every
/// `a_i > b >= 1`.
pub fn ehrhart_corner_chiseled_box(sides: &[Int], b: &Int) -> Result<Polynomial> {
    let n = sides.len();
    if n == 0 {
        return Err(Error::InvalidParameter("box needs at least one side".into()));
    }
    if b < &Int::one() || sides.iter().any(|a| a <= b) {
        return Err(Error::InvalidParameter(format!(
            "corner-chiseled box needs every side > b >= 1, got sides={sides:?}, b={b}"
        )));
    }
    let mut product = Polynomial::one();
    for a in sides {
        product = &product * &Polynomial::linear(rat(1), rat_int(a));
    }
    let cut = &binomial_poly(b, &Int::from(n), n) - &binomial_poly(b, &Int::from(n - 1), n - 1);
    Ok(&product - &cut)
}

/// Coefficients of the Ehrhart polynomial of the iterated chisel tower over
/// the 3-cube: `cubic*t^3 + quadratic*t^2 - neg_linear*t + 1`.
///
/// Stage `k` scales the 3-cube by `3^k` and chisels at depths
/// `3^(k-1), ..., 3, 1`. `neg_linear` is positive (so the linear Ehrhart
/// coefficient is negative) exactly for `k >= 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerCoeffs {
    pub cubic: Rational,
    pub quadratic: Rational,
    pub neg_linear: Rational,
}

/// Closed forms for the chisel-tower coefficients:
/// `neg_linear = 3^(k-2) (8k - 27)`, `quadratic = 3^(k-1) (7*3^k + 2)`,
/// `cubic = (1/2) 3^(k-2) (17*3^(2k) + 1)`.
pub fn cube_tower_coeffs(k: u32) -> Result<TowerCoeffs> {
    if k == 0 {
        return Err(Error::InvalidParameter("tower stage k must be >= 1".into()));
    }
    let k_i = k as i64;
    let neg_linear = rat_pow(3, k_i - 2) * rat(8 * k_i - 27);
    let quadratic = rat_pow(3, k_i - 1) * (rat(7) * rat_pow(3, k_i) + rat(2));
    let cubic = rat(1) / rat(2) * rat_pow(3, k_i - 2) * (rat(17) * rat_pow(3, 2 * k_i) + rat(1));
    Ok(TowerCoeffs {
        cubic,
        quadratic,
        neg_linear,
    })
}

impl TowerCoeffs {
    /// The tower polynomial `cubic*t^3 + quadratic*t^2 - neg_linear*t + 1`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![
            rat(1),
            -self.neg_linear.clone(),
            self.quadratic.clone(),
            self.cubic.clone(),
        ])
    }
}

/// Ehrhart polynomial of the chisel tower at stage `k`, via the chisel
/// recurrence on `(t+1)^3`.
pub fn ehrhart_cube_tower(k: u32) -> Result<Polynomial> {
    let depths: Vec<Int> = (0..k).rev().map(|j| int(3).pow(j)).collect();
    ehrhart_chisel_series(
        &scaled_cube(3, &Int::one()),
        &Int::from(8),
        3,
        &int(3).pow(k),
        &depths,
    )
}

/// Ehrhart polynomial of the analogous tower over the hexagon prism
/// (12 vertices, base polynomial `(3t^2+3t+1)(t+1)`).
pub fn ehrhart_hex_tower(k: u32) -> Result<Polynomial> {
    let base = &Polynomial::from_int_coeffs(&[1, 3, 3]) * &Polynomial::from_int_coeffs(&[1, 1]);
    let depths: Vec<Int> = (0..k).rev().map(|j| int(3).pow(j)).collect();
    ehrhart_chisel_series(&base, &Int::from(12), 3, &int(3).pow(k), &depths)
}

/// Ehrhart polynomial of (chisel tower at stage `k`) x `[0,a]^n`.
pub fn ehrhart_cube_tower_product(n: usize, k: u32, a: &Int) -> Result<Polynomial> {
    check_product_params(n, a)?;
    Ok(&ehrhart_cube_tower(k)? * &scaled_cube(n, a))
}

/// Ehrhart polynomial of (hexagon-prism tower at stage `k`) x `[0,a]^n`.
pub fn ehrhart_hex_tower_product(n: usize, k: u32, a: &Int) -> Result<Polynomial> {
    check_product_params(n, a)?;
    Ok(&ehrhart_hex_tower(k)? * &scaled_cube(n, a))
}

fn check_product_params(n: usize, a: &Int) -> Result<()> {
    if n == 0 || a < &Int::one() {
        return Err(Error::InvalidParameter(format!(
            "product family needs n >= 1 and a >= 1, got n={n}, a={a}"
        )));
    }
    Ok(())
}

/// Coefficient vector (ascending, length `n+4`) of the product of the
/// stage-`k` tower polynomial with `(a*t+1)^n`, from the expanded closed
/// forms rather than polynomial multiplication.
///
/// With `q1 = neg_linear`, `q2 = quadratic`, `q3 = cubic`:
/// entry 0 is 1, entry 1 is `n*a - q1`, entries `2..=n+3` are
/// `C(n,j) a^j - C(n,j-1) a^(j-1) q1 + C(n,j-2) a^(j-2) q2 + C(n,j-3) a^(j-3) q3`.
pub fn product_coeffs(n: usize, k: u32, a: &Int) -> Result<Vec<Rational>> {
    check_product_params(n, a)?;
    let TowerCoeffs {
        cubic,
        quadratic,
        neg_linear,
    } = cube_tower_coeffs(k)?;
    let mut mu = Vec::with_capacity(n + 4);
    mu.push(rat(1));
    mu.push(rat(n as i64) * rat_int(a) - &neg_linear);
    // a^(j-3) may have negative exponent only when the binomial in front is
    // zero, so accumulate the four shifted terms with explicit guards.
    let term = |j: usize, shift: usize, factor: &Rational| -> Rational {
        if j < shift || j - shift > n {
            return rat(0);
        }
        rat_int(&binomial_u(n, j - shift)) * rat_pow_int(a, (j - shift) as u32) * factor
    };
    for j in 2..=n + 3 {
        let value = term(j, 0, &rat(1)) - term(j, 1, &neg_linear)
            + term(j, 2, &quadratic)
            + term(j, 3, &cubic);
        mu.push(value);
    }
    Ok(mu)
}

/// The cube scale used for the product construction at stage `k`:
/// `floor(7k * 3^(k-2) / n)`.
pub fn default_product_scale(n: usize, k: u32) -> Result<Int> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter(
            "product scale needs n >= 1 and k >= 1".into(),
        ));
    }
    let value = rat(7) * rat(k as i64) * rat_pow(3, k as i64 - 2) / rat(n as i64);
    Ok(floor_int(&value))
}

/// Whether the sufficient conditions for simultaneously negative product
/// coefficients hold at stage `k` with the default scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleBounds {
    pub scale: Int,
    /// `neg_linear > n * scale`, which makes the linear coefficient negative.
    pub linear_negative: bool,
    /// `quadratic < 8 * 3^(2k-1)`.
    pub quadratic_bounded: bool,
    /// `cubic < 3^(3k)`.
    pub cubic_bounded: bool,
    /// `scale >= (6/n) k 3^(k-2)`.
    pub scale_large_enough: bool,
}

impl ScaleBounds {
    pub fn all_hold(&self) -> bool {
        self.linear_negative && self.quadratic_bounded && self.cubic_bounded && self.scale_large_enough
    }
}

/// Evaluates the bounds behind the default-scale construction.
pub fn product_scale_bounds(n: usize, k: u32) -> Result<ScaleBounds> {
    let scale = default_product_scale(n, k)?;
    let TowerCoeffs {
        cubic,
        quadratic,
        neg_linear,
    } = cube_tower_coeffs(k)?;
    let k_i = k as i64;
    Ok(ScaleBounds {
        linear_negative: neg_linear > rat(n as i64) * rat_int(&scale),
        quadratic_bounded: quadratic < rat(8) * rat_pow(3, 2 * k_i - 1),
        cubic_bounded: cubic < rat_pow(3, 3 * k_i),
        scale_large_enough: rat_int(&scale) >= rat(6) / rat(n as i64) * rat(k_i) * rat_pow(3, k_i - 2),
        scale,
    })
}

/// How `search_negative` picks candidate cube scales.
#[derive(Clone, Debug)]
pub enum ScaleSearch {
    /// Multiplicative grid over `1..=max`, refined down to the smallest
    /// scale in the run of witnesses found.
    UpTo(Int),
    /// Test exactly these scales.
    Exactly(Vec<Int>),
    /// Test only the default scale from [`default_product_scale`].
    Formula,
}

/// A product instance whose low coefficients are simultaneously negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativityWitness {
    pub k: u32,
    /// Cube scale; `None` for `n = 0` (the bare tower).
    pub a: Option<Int>,
    /// Indices `j` with a negative `t^j` coefficient.
    pub negative_indices: Vec<usize>,
}

/// Searches stages `k <= k_max` for product instances where the coefficients
/// of `t^1 ..= t^(n+1)` are all negative. For `n = 0` the bare tower is
/// scanned for a negative linear coefficient. Output is deterministic and
/// ascending in `k`; for `ScaleSearch::UpTo` the smallest witness scale in
/// the discovered run is reported for each stage.
pub fn search_negative(n: usize, k_max: u32, search: &ScaleSearch) -> Result<Vec<NegativityWitness>> {
    let mut witnesses = Vec::new();
    for k in 1..=k_max {
        if n == 0 {
            let coeffs = cube_tower_coeffs(k)?;
            if coeffs.neg_linear.is_positive() {
                witnesses.push(NegativityWitness {
                    k,
                    a: None,
                    negative_indices: vec![1],
                });
            }
            continue;
        }
        match search {
            ScaleSearch::Exactly(list) => {
                for a in list {
                    if let Some(w) = witness_at(n, k, a)? {
                        witnesses.push(w);
                    }
                }
            }
            ScaleSearch::Formula => {
                let a = default_product_scale(n, k)?;
                if let Some(w) = witness_at(n, k, &a)? {
                    witnesses.push(w);
                }
            }
            ScaleSearch::UpTo(max) => {
                if let Some(w) = grid_search(n, k, max)? {
                    witnesses.push(w);
                }
            }
        }
    }
    Ok(witnesses)
}

fn witness_at(n: usize, k: u32, a: &Int) -> Result<Option<NegativityWitness>> {
    if a < &Int::one() {
        return Ok(None);
    }
    let mu = product_coeffs(n, k, a)?;
    let negative_indices: Vec<usize> = mu
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(j, _)| j)
        .collect();
    let all = (1..=n + 1).all(|j| negative_indices.contains(&j));
    Ok(all.then(|| NegativityWitness {
        k,
        a: Some(a.clone()),
        negative_indices,
    }))
}

/// Multiplicative grid (ratio ~1.02) over `[1, upper]`, then a linear walk
/// down from the first hit to the smallest witness in its run. The grid is
/// capped by `neg_linear / n`, since the linear coefficient is negative only
/// below that.
fn grid_search(n: usize, k: u32, max: &Int) -> Result<Option<NegativityWitness>> {
    let coeffs = cube_tower_coeffs(k)?;
    if !coeffs.neg_linear.is_positive() {
        return Ok(None);
    }
    // n*a <= q1 - 1  =>  a <= floor((q1 - 1) / n); q1 is rational only for
    // k = 1 where it is negative, so to_integer is exact here.
    let q1 = coeffs.neg_linear.to_integer();
    let upper = ((q1 - Int::one()) / Int::from(n)).min(max.clone());
    let mut a = Int::one();
    while a <= upper {
        if let Some(first) = witness_at(n, k, &a)? {
            let mut best = first;
            let mut down = best.a.clone().unwrap() - Int::one();
            while down >= Int::one() {
                match witness_at(n, k, &down)? {
                    Some(w) => best = w,
                    None => break,
                }
                down -= Int::one();
            }
            return Ok(Some(best));
        }
        let step = (&a / Int::from(50)).max(Int::one());
        a += step;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn parse(s: &str) -> Int {
        s.parse().unwrap()
    }

    #[test]
    fn basic_polynomials() {
        assert_eq!(
            ehrhart_basic(BasicPolytope::Cube, 2).unwrap(),
            Polynomial::from_int_coeffs(&[1, 2, 1])
        );
        assert_eq!(
            ehrhart_basic(BasicPolytope::UnimodSimplex, 3).unwrap(),
            Polynomial::from_coeffs(vec![rat(1), ratio(11, 6), rat(1), ratio(1, 6)])
        );
        assert_eq!(
            ehrhart_basic(BasicPolytope::StdSimplex, 1).unwrap(),
            Polynomial::one()
        );
        assert!(ehrhart_basic(BasicPolytope::Cube, 0).is_err());
    }

    #[test]
    fn tower_coeff_closed_forms() {
        let c1 = cube_tower_coeffs(1).unwrap();
        assert_eq!(c1.neg_linear, ratio(-19, 3));
        assert_eq!(c1.quadratic, rat(23));
        assert_eq!(c1.cubic, ratio(77, 3));

        let c3 = cube_tower_coeffs(3).unwrap();
        assert_eq!(c3.neg_linear, rat(-9));
        assert_eq!(c3.quadratic, rat(1719));
        assert_eq!(c3.cubic, rat(18591));

        let c4 = cube_tower_coeffs(4).unwrap();
        assert_eq!(c4.neg_linear, rat(45));
        assert_eq!(c4.quadratic, rat(15363));
        assert_eq!(c4.cubic, rat(501921));
    }

    #[test]
    fn tower_series_matches_closed_form() {
        for k in 1..=8 {
            let series = ehrhart_cube_tower(k).unwrap();
            let closed = cube_tower_coeffs(k).unwrap().polynomial();
            assert_eq!(series, closed, "stage {k}");
        }
    }

    #[test]
    fn chisel_series_empty_depths() {
        let base = Polynomial::from_int_coeffs(&[1, 2, 1]);
        let p = ehrhart_chisel_series(&base, &int(4), 2, &int(5), &[]).unwrap();
        assert_eq!(p, Polynomial::from_int_coeffs(&[1, 10, 25]));
    }

    #[test]
    fn chisel_series_stage_validation() {
        // scale 3 cannot take a depth-2 chisel (needs edge length 5)
        let base = scaled_cube(3, &Int::one());
        match ehrhart_chisel_series(&base, &int(8), 3, &int(3), &[int(2)]) {
            Err(Error::ChiselStage { stage: 1, .. }) => {}
            other => panic!("expected stage-1 failure, got {other:?}"),
        }
        // second stage too deep: after depth 1 from scale 3 the minimum is 1
        match ehrhart_chisel_series(&base, &int(8), 3, &int(3), &[int(1), int(1)]) {
            Err(Error::ChiselStage { stage: 2, .. }) => {}
            other => panic!("expected stage-2 failure, got {other:?}"),
        }
    }

    #[test]
    fn chiseled_cube_examples() {
        let q = ehrhart_chiseled_cube(2, &int(3), &int(1)).unwrap();
        assert_eq!(q, Polynomial::from_int_coeffs(&[1, 4, 7]));
        // one-dimensional: the segment [b, a-b]
        let q = ehrhart_chiseled_cube(1, &int(7), &int(2)).unwrap();
        assert_eq!(q, Polynomial::from_int_coeffs(&[1, 3]));
        assert!(ehrhart_chiseled_cube(2, &int(2), &int(1)).is_err());
        assert!(ehrhart_chiseled_cube(2, &int(5), &int(0)).is_err());
    }

    #[test]
    fn chiseled_cube_linear_coefficient_law() {
        // [t^1] = a*n - b*2^n/n, negative for the (5,2) family exactly when n >= 7
        for n in 1..=9usize {
            for (a, b) in [(5i64, 2i64), (3, 1), (9, 4)] {
                if a <= 2 * b {
                    continue;
                }
                let p = ehrhart_chiseled_cube(n, &int(a), &int(b)).unwrap();
                let expected = rat(a * n as i64) - rat(b) * rat_pow(2, n as i64) / rat(n as i64);
                assert_eq!(p.coeff(1), expected);
            }
            let p = ehrhart_chiseled_cube(n, &int(5), &int(2)).unwrap();
            assert_eq!(p.coeff(1).is_negative(), n >= 7, "n = {n}");
        }
    }

    #[test]
    fn corner_chiseled_cube_examples() {
        let p = ehrhart_corner_chiseled_cube(2, &int(3), &int(1)).unwrap();
        assert_eq!(
            p,
            Polynomial::from_coeffs(vec![rat(1), ratio(11, 2), ratio(17, 2)])
        );
        for (n, a, b) in [(2usize, 3i64, 1i64), (3, 2, 1), (5, 7, 3)] {
            let p = ehrhart_corner_chiseled_cube(n, &int(a), &int(b)).unwrap();
            assert_eq!(p.coeff(0), rat(1));
        }
        assert!(ehrhart_corner_chiseled_cube(2, &int(2), &int(2)).is_err());
    }

    #[test]
    fn corner_chiseled_box_examples() {
        let p = ehrhart_corner_chiseled_box(&[int(2), int(3)], &int(1)).unwrap();
        assert_eq!(
            p,
            Polynomial::from_coeffs(vec![rat(1), ratio(9, 2), ratio(11, 2)])
        );
        // equal sides collapse to the corner-chiseled cube (Pascal identity)
        for (n, a, b) in [(3usize, 3i64, 1i64), (4, 5, 2), (7, 2, 1)] {
            let sides = vec![int(a); n];
            assert_eq!(
                ehrhart_corner_chiseled_box(&sides, &int(b)).unwrap(),
                ehrhart_corner_chiseled_cube(n, &int(a), &int(b)).unwrap()
            );
        }
        let p = ehrhart_corner_chiseled_box(&[int(3), int(4), int(5)], &int(2)).unwrap();
        assert!(p.coeffs().iter().all(|c| c.is_positive()));
        assert!(ehrhart_corner_chiseled_box(&[int(2), int(3)], &int(2)).is_err());
    }

    #[test]
    fn product_coeff_examples() {
        let mu = product_coeffs(1, 6, &int(730)).unwrap();
        assert_eq!(
            mu,
            vec![
                rat(1),
                rat(-971),
                rat(-1215),
                rat(1271473119),
                rat(267104933370)
            ]
        );
        let mu = product_coeffs(2, 8, &int(8599)).unwrap();
        assert_eq!(
            mu,
            vec![
                rat(1),
                rat(-9775),
                rat(-289492130),
                rat(-237422178),
                rat_int(&parse("12014689492982241")),
                rat_int(&parse("19723429316570261841")),
            ]
        );
    }

    #[test]
    fn product_coeffs_match_polynomial_product() {
        // formula route versus polynomial-multiplication route
        let mut rng = crate::testutil::Rng::new(0x6d75);
        for _ in 0..20 {
            let n = 1 + rng.below(5) as usize;
            let k = 1 + rng.below(6) as u32;
            let a = int(1 + rng.below(10_000) as i64);
            let mu = product_coeffs(n, k, &a).unwrap();
            let p = ehrhart_cube_tower_product(n, k, &a).unwrap();
            assert_eq!(mu.len(), n + 4);
            for (j, c) in mu.iter().enumerate() {
                assert_eq!(&p.coeff(j), c, "n={n} k={k} a={a} j={j}");
            }
        }
    }

    #[test]
    fn product_coeff_invariants() {
        for (n, k, a) in [(1usize, 4u32, 11i64), (3, 2, 5), (5, 6, 9999)] {
            let mu = product_coeffs(n, k, &int(a)).unwrap();
            assert_eq!(mu[0], rat(1));
            let cubic = cube_tower_coeffs(k).unwrap().cubic;
            assert_eq!(mu[n + 3], rat_pow_int(&int(a), n as u32) * cubic);
            assert!(mu[n + 3].is_positive());
        }
    }

    #[test]
    fn default_scale_examples() {
        assert_eq!(
            default_product_scale(1, 28).unwrap(),
            parse("498205702352484")
        );
        assert_eq!(default_product_scale(7, 19).unwrap(), parse("2453663097"));
        assert_eq!(default_product_scale(1, 2).unwrap(), int(14));
    }

    #[test]
    fn scale_bounds_examples() {
        let b = product_scale_bounds(1, 28).unwrap();
        assert!(b.all_hold());

        let b = product_scale_bounds(1, 6).unwrap();
        assert_eq!(b.scale, int(3402));
        assert!(!b.linear_negative);

        let b = product_scale_bounds(1, 4).unwrap();
        assert!(b.quadratic_bounded && b.cubic_bounded);
    }

    #[test]
    fn search_finds_reference_witnesses() {
        // bare tower: first stage with a negative linear coefficient is 4
        let w = search_negative(0, 6, &ScaleSearch::Formula).unwrap();
        assert_eq!(w.first().map(|w| w.k), Some(4));
        assert_eq!(w.iter().map(|w| w.k).collect::<Vec<_>>(), vec![4, 5, 6]);

        let w = search_negative(1, 6, &ScaleSearch::UpTo(int(1_000_000))).unwrap();
        let last = w.last().unwrap();
        assert_eq!((last.k, last.a.clone()), (6, Some(int(730))));
        assert_eq!(last.negative_indices, vec![1, 2]);

        let w = search_negative(2, 8, &ScaleSearch::UpTo(int(1_000_000))).unwrap();
        let at8 = w.iter().find(|w| w.k == 8).unwrap();
        assert_eq!(at8.a, Some(int(8599)));
        assert_eq!(at8.negative_indices, vec![1, 2, 3]);
    }

    #[test]
    fn witness_sign_pattern() {
        // coefficients t^1..t^(n+1) negative, all others positive
        for (n, k, a) in [(1usize, 6u32, 730i64), (2, 8, 8599)] {
            let mu = product_coeffs(n, k, &int(a)).unwrap();
            for (j, c) in mu.iter().enumerate() {
                if (1..=n + 1).contains(&j) {
                    assert!(c.is_negative(), "j={j}");
                } else {
                    assert!(c.is_positive(), "j={j}");
                }
            }
        }
    }
}
