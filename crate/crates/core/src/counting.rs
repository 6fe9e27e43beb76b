//! Exact brute-force lattice-point counting in dilates.
//!
//! Points are enumerated coordinate by coordinate in input order. For a
//! fixed prefix the feasible interval of the next coordinate is derived by
//! interval propagation over every halfspace, using per-coordinate bounding
//! boxes of the dilate for the unfixed tail; the final coordinate is never
//! looped over, its interval length is added directly. The outermost
//! coordinate range is split into slabs that are counted on separate
//! threads and summed in slab order, so results are identical for every
//! thread count.
//!
//! Inequality checks run in `i64` when a precomputed bound certifies that no
//! intermediate value can overflow, and in arbitrary precision otherwise.

use num_integer::Integer as NumInteger;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::{interpolate, Polynomial};
use crate::polytope::{Halfspace, SmoothPolytope};
use crate::rational::{ceil_int, floor_int, rat_int, Int, Rational};
use crate::{Error, Result};

/// One exact count of lattice points in a dilate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSample {
    pub t: Int,
    pub count: Int,
    /// Whether boundary points were excluded.
    pub strict: bool,
}

/// Knobs for the enumerator.
#[derive(Clone, Debug)]
pub struct CountOptions {
    /// Worker threads for the slab decomposition.
    pub threads: usize,
    /// Maximum number of candidate prefixes before the count refuses to run.
    pub budget: u128,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: 2_000_000_000,
        }
    }
}

/// Counts lattice points of `t * P`, closed (`<=`) or strict (`<`).
pub fn count_points(
    p: &SmoothPolytope,
    t: &Int,
    strict: bool,
    opts: &CountOptions,
) -> Result<CountSample> {
    let (lo, hi) = integer_box(p, t)?;
    count_with_box(p.halfspaces(), p.dim(), t, strict, lo, hi, opts)
}

/// Strict-inequality count: lattice points interior to `t * P`.
pub fn count_interior(p: &SmoothPolytope, t: &Int, opts: &CountOptions) -> Result<CountSample> {
    count_points(p, t, true, opts)
}

/// Counts lattice points of the dilate of a raw halfspace system. The
/// system must be bounded; its (possibly non-integral) vertices are computed
/// to obtain the bounding box.
pub fn count_in_system(
    halfspaces: &[Halfspace],
    dim: usize,
    t: &Int,
    strict: bool,
    opts: &CountOptions,
) -> Result<CountSample> {
    let vertices = crate::polytope::rational_vertices(halfspaces, dim)?;
    let t_rat = rat_int(t);
    let mut lo = Vec::with_capacity(dim);
    let mut hi = Vec::with_capacity(dim);
    for i in 0..dim {
        let min = vertices.iter().map(|v| &v[i]).min().expect("vertices");
        let max = vertices.iter().map(|v| &v[i]).max().expect("vertices");
        lo.push(ceil_int(&(min * &t_rat)));
        hi.push(floor_int(&(max * &t_rat)));
    }
    count_with_box(halfspaces, dim, t, strict, lo, hi, opts)
}

/// Ehrhart polynomial by interpolation through brute-force counts at
/// `t = 0 ..= dim`.
pub fn ehrhart_via_counting(p: &SmoothPolytope, opts: &CountOptions) -> Result<Polynomial> {
    let samples: Result<Vec<(Int, Rational)>> = (0..=p.dim() as i64)
        .map(|t| {
            let t = Int::from(t);
            let sample = count_points(p, &t, false, opts)?;
            Ok((t, rat_int(&sample.count)))
        })
        .collect();
    interpolate(&samples?)
}

fn integer_box(p: &SmoothPolytope, t: &Int) -> Result<(Vec<Int>, Vec<Int>)> {
    if t.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "dilation factor must be >= 0, got {t}"
        )));
    }
    let dim = p.dim();
    let mut lo = Vec::with_capacity(dim);
    let mut hi = Vec::with_capacity(dim);
    for i in 0..dim {
        let min = p.vertices().iter().map(|v| &v.0[i]).min().expect("vertices");
        let max = p.vertices().iter().map(|v| &v.0[i]).max().expect("vertices");
        lo.push(min * t);
        hi.push(max * t);
    }
    Ok((lo, hi))
}

fn count_with_box(
    halfspaces: &[Halfspace],
    dim: usize,
    t: &Int,
    strict: bool,
    lo: Vec<Int>,
    hi: Vec<Int>,
    opts: &CountOptions,
) -> Result<CountSample> {
    if t.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "dilation factor must be >= 0, got {t}"
        )));
    }
    let system = System::build(halfspaces, dim, t, strict, lo, hi);
    system.check_budget(opts.budget)?;
    let threads = opts.threads.max(1);
    let count = match system.narrowed() {
        Some(narrow) => narrow.count(threads),
        None => system.count(threads),
    };
    Ok(CountSample {
        t: t.clone(),
        count,
        strict,
    })
}

/// Scalars the enumerator can run on: machine integers for speed, big
/// integers for unbounded range.
trait CountScalar: NumInteger + Clone + Send + Sync {
    fn to_int(&self) -> Int;
    fn from_usize(v: usize) -> Self;
}

impl CountScalar for i64 {
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
    fn from_usize(v: usize) -> Self {
        v as i64
    }
}

impl CountScalar for Int {
    fn to_int(&self) -> Int {
        self.clone()
    }
    fn from_usize(v: usize) -> Self {
        Int::from(v)
    }
}

/// A fully preprocessed counting instance over scalar type `T`.
struct System<T> {
    dim: usize,
    /// `[facet][coordinate]`.
    normals: Vec<Vec<T>>,
    /// Right-hand sides, dilated and adjusted for strictness.
    rhs: Vec<T>,
    lo: Vec<T>,
    hi: Vec<T>,
    /// `tail_min[j][facet]`: minimum of the facet's partial sum over the box
    /// coordinates `j..`, with `tail_min[dim]` all zero.
    tail_min: Vec<Vec<T>>,
}

impl System<Int> {
    fn build(
        halfspaces: &[Halfspace],
        dim: usize,
        t: &Int,
        strict: bool,
        lo: Vec<Int>,
        hi: Vec<Int>,
    ) -> System<Int> {
        let normals: Vec<Vec<Int>> = halfspaces.iter().map(|h| h.normal.0.clone()).collect();
        let rhs: Vec<Int> = halfspaces
            .iter()
            .map(|h| {
                let scaled = &h.rhs * t;
                if strict {
                    scaled - Int::from(1)
                } else {
                    scaled
                }
            })
            .collect();
        let mut sys = System {
            dim,
            normals,
            rhs,
            lo,
            hi,
            tail_min: Vec::new(),
        };
        sys.tail_min = sys.compute_tail_min();
        sys
    }

    /// Candidate prefixes: the product of box widths over all coordinates
    /// except the last.
    fn check_budget(&self, budget: u128) -> Result<()> {
        let mut estimate = Int::from(1);
        for i in 0..self.dim.saturating_sub(1) {
            let width = (&self.hi[i] - &self.lo[i] + Int::from(1)).max(Int::zero());
            estimate *= width;
        }
        if estimate > Int::from(budget) {
            return Err(Error::BudgetExceeded {
                estimate: estimate.to_string(),
                budget,
            });
        }
        Ok(())
    }

    /// The `i64` copy of the system when a certified bound shows that every
    /// intermediate value stays far away from overflow.
    #[allow(clippy::needless_range_loop)]
    fn narrowed(&self) -> Option<System<i64>> {
        let limit = Int::from(1i64 << 61);
        let mut worst = Int::zero();
        for (f, normal) in self.normals.iter().enumerate() {
            let mut cap = self.rhs[f].abs();
            for i in 0..self.dim {
                cap += (&normal[i] * &self.lo[i])
                    .abs()
                    .max((&normal[i] * &self.hi[i]).abs());
            }
            worst = worst.max(cap);
        }
        for i in 0..self.dim {
            worst = worst.clone().max(self.lo[i].abs()).max(self.hi[i].abs());
        }
        if Int::from(4) * worst >= limit {
            return None;
        }
        let small = |v: &Int| v.to_i64().expect("certified to fit");
        Some(System {
            dim: self.dim,
            normals: self
                .normals
                .iter()
                .map(|row| row.iter().map(small).collect())
                .collect(),
            rhs: self.rhs.iter().map(small).collect(),
            lo: self.lo.iter().map(small).collect(),
            hi: self.hi.iter().map(small).collect(),
            tail_min: self
                .tail_min
                .iter()
                .map(|row| row.iter().map(small).collect())
                .collect(),
        })
    }
}

impl<T: CountScalar> System<T> {
    #[allow(clippy::needless_range_loop)]
    fn compute_tail_min(&self) -> Vec<Vec<T>> {
        let f = self.normals.len();
        let mut tail = vec![vec![T::zero(); f]; self.dim + 1];
        for j in (0..self.dim).rev() {
            for fi in 0..f {
                let a = &self.normals[fi][j];
                let at_lo = a.clone() * self.lo[j].clone();
                let at_hi = a.clone() * self.hi[j].clone();
                tail[j][fi] = tail[j + 1][fi].clone() + at_lo.min(at_hi);
            }
        }
        tail
    }

    /// Feasible interval of coordinate `depth` under the fixed prefix
    /// partials; `None` when some constraint already excludes every tail.
    fn bounds_at(&self, depth: usize, partial: &[T]) -> Option<(T, T)> {
        let mut lo = self.lo[depth].clone();
        let mut hi = self.hi[depth].clone();
        for (fi, normal) in self.normals.iter().enumerate() {
            let a = &normal[depth];
            let rem = self.rhs[fi].clone() - partial[fi].clone() - self.tail_min[depth + 1][fi].clone();
            if a.is_zero() {
                if rem < T::zero() {
                    return None;
                }
            } else if *a > T::zero() {
                hi = hi.min(rem.div_floor(a));
            } else {
                lo = lo.max(rem.div_ceil(a));
            }
            if lo > hi {
                return None;
            }
        }
        Some((lo, hi))
    }

    fn count(&self, threads: usize) -> Int {
        let zero_partial = vec![T::zero(); self.normals.len()];
        let Some((lo0, hi0)) = self.bounds_at(0, &zero_partial) else {
            return Int::zero();
        };
        if self.dim == 1 {
            return (hi0 - lo0 + T::one()).to_int();
        }
        let total = hi0.clone() - lo0.clone() + T::one();
        let step = total.div_ceil(&T::from_usize(threads));
        let mut slabs = Vec::new();
        let mut start = lo0;
        while start <= hi0 {
            let end = (start.clone() + step.clone() - T::one()).min(hi0.clone());
            slabs.push((start.clone(), end.clone()));
            start = end + T::one();
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = slabs
                .into_iter()
                .map(|(from, to)| scope.spawn(move || self.count_slab(from, to)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("slab worker panicked"))
                .sum()
        })
    }

    fn count_slab(&self, from: T, to: T) -> Int {
        let f = self.normals.len();
        let mut partial: Vec<T> = (0..f)
            .map(|fi| self.normals[fi][0].clone() * from.clone())
            .collect();
        // one scratch row per level that saves partials (depths 1..dim-1)
        let mut saved = vec![vec![T::zero(); f]; self.dim];
        let mut acc = Int::zero();
        let mut x = from;
        loop {
            self.descend(1, &mut partial, &mut saved, &mut acc);
            if x == to {
                break;
            }
            x = x + T::one();
            for (fi, p) in partial.iter_mut().enumerate() {
                *p = p.clone() + self.normals[fi][0].clone();
            }
        }
        acc
    }

    /// Recursive enumeration; `saved[0]` is the scratch row for this level.
    fn descend(&self, depth: usize, partial: &mut [T], saved: &mut [Vec<T>], acc: &mut Int) {
        let Some((lo, hi)) = self.bounds_at(depth, partial) else {
            return;
        };
        if depth == self.dim - 1 {
            *acc += (hi - lo + T::one()).to_int();
            return;
        }
        let (cur, rest) = saved.split_at_mut(1);
        let cur = &mut cur[0];
        for (fi, p) in partial.iter_mut().enumerate() {
            cur[fi] = p.clone();
            *p = p.clone() + self.normals[fi][depth].clone() * lo.clone();
        }
        let mut x = lo;
        loop {
            self.descend(depth + 1, partial, rest, acc);
            if x == hi {
                break;
            }
            x = x + T::one();
            for (fi, p) in partial.iter_mut().enumerate() {
                *p = p.clone() + self.normals[fi][depth].clone();
            }
        }
        for (fi, p) in partial.iter_mut().enumerate() {
            *p = cur[fi].clone();
        }
    }
}

#[cfg(test)]
pub(crate) fn count_points_bignum_path(
    p: &SmoothPolytope,
    t: &Int,
    strict: bool,
    threads: usize,
) -> Int {
    let (lo, hi) = integer_box(p, t).unwrap();
    let system = System::build(p.halfspaces(), p.dim(), t, strict, lo, hi);
    system.count(threads)
}
