//! Closed-form Berline-Vergne α-values and the local-formula cross-check.
//!
//! The α-value of a face weights its normalized volume in the local formula
//! for lattice-point counts: summing `α(F) * nvol(F)` over all k-dimensional
//! faces gives the `t^k` Ehrhart coefficient. For the families here (cubes,
//! standard and unimodular simplices, and a cube with one chiseled corner)
//! all faces of a dimension fall into a handful of orbits under orthogonal
//! unimodular symmetry, which pins each α-value down in closed form.

use num_traits::{One, Signed};

use crate::ehrhart::{ehrhart_corner_chiseled_box, ehrhart_corner_chiseled_cube};
use crate::poly::{binomial_poly, Polynomial};
use crate::rational::{
    binomial_u, factorial, rat, rat_int, rat_pow, rat_pow_int, Int, Rational,
};
use crate::{Error, Result};

/// Which orbit of faces an α-value is requested for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceClass {
    /// Any k-face of the unit cube.
    Cube,
    /// Any k-face of the standard simplex (the convex hull of the basis
    /// vectors, dimension n-1).
    StdSimplex,
    /// A k-face of the unimodular simplex; the two orbits are split by
    /// whether the face contains the origin.
    UnimodSimplex { contains_origin: bool },
    /// A k-face of a cube with one corner chiseled; the two orbits are split
    /// by whether the face lies on the cut simplex facet.
    CornerChisel { on_cut: bool },
}

/// `[t^k] C(t + c, m)` helper.
fn binom_coeff(c: usize, m: usize, k: usize) -> Rational {
    binomial_poly(&Int::one(), &Int::from(c), m).coeff(k)
}

/// Exact α-value for a k-dimensional face of the given class in ambient
/// dimension `n`.
///
/// Closed forms: cube faces give `2^(k-n)`; standard-simplex faces give
/// `k!/C(n,k+1) * [t^k] C(t+n-1, n-1)`; unimodular-simplex faces give
/// `2^(k-n)` when they contain the origin and otherwise
/// `(k! [t^k] C(t+n, n) - C(n,k) 2^(k-n)) / C(n,k+1)`; faces on the cut of a
/// corner-chiseled cube give
/// `(C(n,k) 2^(k-n) - k! [t^k] C(t+n-1, n)) / C(n,k+1)`, all other faces of
/// it give the cube value `2^(k-n)`.
pub fn alpha_value(class: FaceClass, n: usize, k: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameter("ambient dimension must be >= 1".into()));
    }
    let max_k = match class {
        FaceClass::Cube | FaceClass::UnimodSimplex { contains_origin: true } => n,
        FaceClass::CornerChisel { on_cut: false } => n,
        FaceClass::StdSimplex
        | FaceClass::UnimodSimplex { contains_origin: false }
        | FaceClass::CornerChisel { on_cut: true } => n - 1,
    };
    if k > max_k {
        return Err(Error::InvalidParameter(format!(
            "face dimension {k} out of range for {class:?} in dimension {n}"
        )));
    }
    let two_pow = rat_pow(2, k as i64 - n as i64);
    let k_fact = rat_int(&factorial(k));
    let value = match class {
        FaceClass::Cube
        | FaceClass::UnimodSimplex { contains_origin: true }
        | FaceClass::CornerChisel { on_cut: false } => two_pow,
        FaceClass::StdSimplex => {
            k_fact / rat_int(&binomial_u(n, k + 1)) * binom_coeff(n - 1, n - 1, k)
        }
        FaceClass::UnimodSimplex { contains_origin: false } => {
            (k_fact * binom_coeff(n, n, k) - rat_int(&binomial_u(n, k)) * two_pow)
                / rat_int(&binomial_u(n, k + 1))
        }
        FaceClass::CornerChisel { on_cut: true } => {
            (rat_int(&binomial_u(n, k)) * two_pow - k_fact * binom_coeff(n - 1, n, k))
                / rat_int(&binomial_u(n, k + 1))
        }
    };
    Ok(value)
}

/// α-values of cut-simplex faces of the corner-chiseled cube, rows
/// `n = 1..=n_max`, columns `k = 0..=n`. The diagonal entry (the polytope
/// itself) is 1.
pub fn alpha_table(n_max: usize) -> Result<Vec<Vec<Rational>>> {
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..n {
            row.push(alpha_value(FaceClass::CornerChisel { on_cut: true }, n, k)?);
        }
        row.push(rat(1));
        rows.push(row);
    }
    Ok(rows)
}

/// Positivity scan of one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityScan {
    pub n: usize,
    pub all_positive: bool,
    /// `(k, value)` pairs with a nonpositive α-value.
    pub negative_entries: Vec<(usize, Rational)>,
}

/// Scans the α-values of row `n` for negative entries. All rows up to
/// `n = 6` are positive; negatives first appear at `n = 7`.
pub fn scan_alpha_positivity(n: usize) -> Result<PositivityScan> {
    let row = alpha_table(n)?.pop().expect("n >= 1 rows");
    let negative_entries: Vec<(usize, Rational)> = row
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_positive())
        .map(|(k, v)| (k, v.clone()))
        .collect();
    Ok(PositivityScan {
        n,
        all_positive: negative_entries.is_empty(),
        negative_entries,
    })
}

/// Rebuilds the Ehrhart polynomial of the corner-chiseled cube `[0,a]^n`
/// from α-values and normalized face volumes, one face class at a time.
///
/// Face classes of the chiseled polytope, per dimension `k`:
/// cut-simplex faces (count `C(n,k+1)`, normalized volume `b^k/k!`),
/// truncated faces through the chiseled corner (count `C(n,k)`, volume
/// `a^k - b^k/k!`), and untouched cube faces (count `C(n,k)(2^(n-k)-1)`,
/// volume `a^k`). The result equals the closed form
/// `(a*t+1)^n - C(b*t+n-1, n)` exactly.
pub fn reconstruct_ehrhart_from_alpha(n: usize, a: &Int, b: &Int) -> Result<Polynomial> {
    if n == 0 || b < &Int::one() || a <= b {
        return Err(Error::InvalidParameter(format!(
            "reconstruction needs n >= 1 and a > b >= 1, got n={n}, a={a}, b={b}"
        )));
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let a_pow = rat_pow_int(a, k as u32);
        let b_pow = rat_pow_int(b, k as u32);
        let k_fact = rat_int(&factorial(k));
        let cube_alpha = rat_pow(2, k as i64 - n as i64);

        // untouched cube faces
        let untouched = rat_int(&binomial_u(n, k))
            * (rat_pow(2, n as i64 - k as i64) - rat(1))
            * &a_pow
            * &cube_alpha;
        // truncated faces through the chiseled corner; at k = 0 the corner
        // itself is gone and the volume term vanishes
        let truncated =
            rat_int(&binomial_u(n, k)) * (&a_pow - &b_pow / &k_fact) * &cube_alpha;
        // faces of the cut simplex
        let cut = if k < n {
            let alpha = alpha_value(FaceClass::CornerChisel { on_cut: true }, n, k)?;
            rat_int(&binomial_u(n, k + 1)) * (&b_pow / &k_fact) * alpha
        } else {
            rat(0)
        };
        coeffs.push(untouched + truncated + cut);
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Positivity report for a corner-chiseled box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCornerPositivity {
    pub polynomial: Polynomial,
    /// Every Ehrhart coefficient is strictly positive.
    pub all_positive: bool,
    /// The coefficientwise lower bound `(a*t+1)^n - C(b*t+n-1, n)` with
    /// `a = min side`.
    pub lower_bound: Polynomial,
    /// The polynomial dominates the lower bound coefficientwise.
    pub bound_holds: bool,
}

/// Checks that a corner-chiseled box has positive Ehrhart coefficients and
/// that the coefficientwise bound through the equal-sided case holds.
pub fn check_box_corner_positivity(sides: &[Int], b: &Int) -> Result<BoxCornerPositivity> {
    let polynomial = ehrhart_corner_chiseled_box(sides, b)?;
    let n = sides.len();
    let min_side = sides.iter().min().expect("nonempty").clone();
    let lower_bound = ehrhart_corner_chiseled_cube(n, &min_side, b)?;
    let all_positive = (0..=n).all(|k| polynomial.coeff(k).is_positive());
    let bound_holds = (0..=n).all(|k| polynomial.coeff(k) >= lower_bound.coeff(k));
    Ok(BoxCornerPositivity {
        polynomial,
        all_positive,
        lower_bound,
        bound_holds,
    })
}
