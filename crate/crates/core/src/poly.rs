//! Dense univariate polynomials over exact rationals.
//!
//! `Polynomial` stores coefficients in ascending degree order. The
//! representation is canonical: the vector is empty for the zero polynomial
//! and the last entry is nonzero otherwise, so `==` is semantic equality.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{
    binomial_u, debug_assert_reduced, factorial, is_integer, rat, rat_int, Int, Rational,
};
use crate::{Error, Result};

/// A dense univariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c0 + c1*t`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Polynomial::from_coeffs(vec![c0, c1])
    }

    /// Construct from ascending-degree coefficients; trailing zeros are
    /// stripped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    /// Construct from machine-integer coefficients, ascending degree.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        for c in &self.coeffs {
            debug_assert_reduced(c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    /// Ascending-degree coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, t: &Int) -> Rational {
        self.eval(&rat_int(t))
    }

    /// `p(c*t)`: substitute a scaled variable.
    pub fn compose_scale(&self, c: &Int) -> Polynomial {
        let mut power = Rational::one();
        let scale = rat_int(c);
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power = &power * &scale;
                out
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Multiply every coefficient by a rational.
    pub fn scaled(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p^e` by repeated multiplication.
    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integer)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The binomial coefficient `C(b*t + c, n)` expanded as a polynomial in `t`.
///
/// For `b >= 1` the result has degree `n` and leading coefficient `b^n / n!`,
/// and evaluates to the integer binomial coefficient at every integer `t`
/// with `b*t + c >= 0`.
pub fn binomial_poly(b: &Int, c: &Int, n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..n {
        let shift = c - Int::from(i);
        acc = &acc * &Polynomial::linear(rat_int(&shift), rat_int(b));
    }
    acc.scaled(&Rational::new(Int::one(), factorial(n)))
}

/// Exact polynomial interpolation through `(t, value)` samples.
///
/// Uses Newton divided differences, so intermediate values stay small. The
/// result is the unique polynomial of degree below the sample count passing
/// through every sample. Duplicate abscissas are rejected.
pub fn interpolate(samples: &[(Int, Rational)]) -> Result<Polynomial> {
    if samples.is_empty() {
        return Err(Error::InvalidParameter(
            "interpolation needs at least one sample".into(),
        ));
    }
    for (i, (t, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(s, _)| s == t) {
            return Err(Error::DuplicateAbscissa(t.clone()));
        }
    }
    let xs: Vec<Rational> = samples.iter().map(|(t, _)| rat_int(t)).collect();
    let mut dd: Vec<Rational> = samples.iter().map(|(_, v)| v.clone()).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner expansion of the Newton form.
    let mut p = Polynomial::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Polynomial::linear(-&xs[i], rat(1));
        p = &(&p * &factor) + &Polynomial::constant(dd[i].clone());
    }
    Ok(p)
}

/// The coefficient vector of a polynomial in the shifted-binomial basis
/// `C(t + n - j, n)`, `j = 0..=n`, where `n` is the degree.
///
/// For the Ehrhart polynomial of a lattice polytope this is the h*-vector.
/// `integral` flags whether every entry is an integer; a non-integral entry
/// signals that the input was not the Ehrhart polynomial of a lattice
/// polytope, but the transform is still exact and invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStarVector {
    pub values: Vec<Rational>,
    pub integral: bool,
}

/// Change of basis from monomials to the shifted-binomial basis.
///
/// Solves the triangular system through the evaluations `p(0), ..., p(n)`:
/// `h_j = sum_{i<=j} (-1)^(j-i) C(n+1, j-i) p(i)`.
#[allow(clippy::needless_range_loop)]
pub fn hstar_transform(p: &Polynomial) -> Result<HStarVector> {
    let n = p
        .degree()
        .ok_or_else(|| Error::InvalidParameter("zero polynomial has no h* vector".into()))?;
    let evals: Vec<Rational> = (0..=n).map(|i| p.eval(&rat(i as i64))).collect();
    let mut values = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut h = rat(0);
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            h += rat_int(&(binomial_u(n + 1, j - i) * Int::from(sign))) * &evals[i];
        }
        values.push(h);
    }
    let integral = values.iter().all(is_integer);
    Ok(HStarVector { values, integral })
}

/// Inverse of [`hstar_transform`]: `sum_j h_j * C(t + n - j, n)` with
/// `n = values.len() - 1`.
pub fn hstar_expand(values: &[Rational]) -> Polynomial {
    if values.is_empty() {
        return Polynomial::zero();
    }
    let n = values.len() - 1;
    let mut acc = Polynomial::zero();
    for (j, h) in values.iter().enumerate() {
        let basis = binomial_poly(&Int::one(), &Int::from(n - j), n);
        acc = &acc + &basis.scaled(h);
    }
    acc
}
