//! Exact grid searches over the small polynomial optimisation problems that
//! the density and bipartite lower bounds rest on.
//!
//! All arithmetic is in exact rationals, so a reported gap is a property of
//! the grid, never of rounding.

use num::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Rational;

/// Wide rational for grid arithmetic.
pub type Exact = num::rational::Ratio<i128>;

fn q(n: i128, d: i128) -> Exact {
    Exact::new(n, d)
}

fn widen(x: Rational) -> Exact {
    Exact::new(*x.numer() as i128, *x.denom() as i128)
}

/// A named point that the grid always contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub point: Vec<Exact>,
    pub feasible: bool,
    pub value: Exact,
    /// `value − closed_form`.
    pub gap: Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSearchResult {
    /// Extremum over the feasible grid.
    pub value: Exact,
    /// Lexicographically smallest grid point attaining it.
    pub point: Vec<Exact>,
    pub resolution: usize,
    pub closed_form: Exact,
    /// `value − closed_form` for minimisations, `closed_form − value` for
    /// maximisations; never negative when the closed form is a true bound.
    pub gap: Exact,
    pub corner: Option<Corner>,
    pub evaluated: u64,
}

impl GridSearchResult {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

fn check_s(s: Exact) -> Result<()> {
    if s <= Exact::zero() {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    if s > q(1, 2) {
        return Err(Error::Infeasible(format!(
            "s = {s} leaves no point with s <= alpha <= 1/2"
        )));
    }
    Ok(())
}

/// `{s + (½ − s)·i/R}` plus extra forced values inside `[s, ½]`, sorted.
fn axis(s: Exact, resolution: usize, forced: &[Exact]) -> Vec<Exact> {
    let r = resolution as i128;
    let mut v: Vec<Exact> = (0..=r).map(|i| s + (q(1, 2) - s) * q(i, r)).collect();
    v.extend(forced.iter().copied().filter(|&x| x >= s && x <= q(1, 2)));
    v.sort();
    v.dedup();
    v
}

/// Minimises `f` over the square grid restricted to `a + b >= sum_min`.
fn grid_min(values: &[Exact], sum_min: Exact, f: impl Fn(Exact, Exact) -> Exact) -> Option<(Exact, Vec<Exact>, u64)> {
    let mut best: Option<(Exact, Vec<Exact>)> = None;
    let mut count = 0u64;
    for &a in values {
        for &b in values {
            if a + b < sum_min {
                continue;
            }
            count += 1;
            let v = f(a, b);
            if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
                best = Some((v, vec![a, b]));
            }
        }
    }
    best.map(|(v, p)| (v, p, count))
}

pub fn appendix_a_objective(s: Exact, a: Exact, b: Exact) -> Exact {
    (Exact::from_integer(1) + s) * (a + b) - a * a - b * b
}

pub fn appendix_a_closed_form(s: Exact) -> Exact {
    q(1, 4) + q(3, 2) * s - q(2, 1) * s * s
}

/// Minimises `(1+s)(α+β) − α² − β²` over `s ≤ α, β ≤ ½`, `α + β ≥ ½`.
///
/// The corner `(½ − s, s)` is forced onto the grid and always evaluates to
/// the closed form, but it lies in the region only when `s ≤ ¼`; beyond
/// that the grid minimum sits strictly above the closed form.
pub fn verify_appendix_a(s: Rational, resolution: usize) -> Result<GridSearchResult> {
    let s = widen(s);
    check_s(s)?;
    if resolution == 0 {
        return Err(Error::InvalidParameter("resolution must be positive".into()));
    }
    let closed = appendix_a_closed_form(s);
    let corner = vec![q(1, 2) - s, s];
    let values = axis(s, resolution, &[q(1, 2) - s]);
    let f = |a, b| appendix_a_objective(s, a, b);
    let (value, point, evaluated) =
        grid_min(&values, q(1, 2), f).ok_or_else(|| Error::Infeasible("empty region".into()))?;
    let cv = f(corner[0], corner[1]);
    Ok(GridSearchResult {
        value,
        point,
        resolution,
        closed_form: closed,
        gap: value - closed,
        corner: Some(Corner {
            feasible: corner[0] >= s,
            point: corner,
            value: cv,
            gap: cv - closed,
        }),
        evaluated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

pub fn appendix_b_objective(s: Exact, a: Exact, b: Exact) -> Exact {
    let one = Exact::from_integer(1);
    (one + s) * a - a * a + (one + s) * b - b * b - a * b
}

pub fn appendix_b_closed_form(s: Exact, parity: Parity) -> Exact {
    match parity {
        Parity::Even => q(1, 4) + s,
        Parity::Odd => q(1, 4) + s - s * s / Exact::from_integer(4),
    }
}

/// Minimises `(1+s)α − α² + (1+s)β − β² − αβ` over `s ≤ α, β ≤ ½` with
/// `α + β ≥ ½ + s` (even) or `α + β ≥ ½ + s/2` (odd).
///
/// The reported corner is `(½, s)` for even parity and `(½ − s/2, s)` for
/// odd parity; the odd corner is in the region only when `s ≤ ⅓`.
pub fn verify_appendix_b(s: Rational, parity: Parity, resolution: usize) -> Result<GridSearchResult> {
    let s = widen(s);
    check_s(s)?;
    if resolution == 0 {
        return Err(Error::InvalidParameter("resolution must be positive".into()));
    }
    let sum_min = match parity {
        Parity::Even => q(1, 2) + s,
        Parity::Odd => q(1, 2) + s / Exact::from_integer(2),
    };
    let closed = appendix_b_closed_form(s, parity);
    let corner = match parity {
        Parity::Even => vec![q(1, 2), s],
        Parity::Odd => vec![q(1, 2) - s / Exact::from_integer(2), s],
    };
    let values = axis(s, resolution, &[q(1, 2), q(1, 2) - s / Exact::from_integer(2)]);
    let f = |a, b| appendix_b_objective(s, a, b);
    let (value, point, evaluated) = grid_min(&values, sum_min, f)
        .ok_or_else(|| Error::Infeasible(format!("no grid point with alpha + beta >= {sum_min}")))?;
    let cv = f(corner[0], corner[1]);
    Ok(GridSearchResult {
        value,
        point,
        resolution,
        closed_form: closed,
        gap: value - closed,
        corner: Some(Corner {
            feasible: corner[0] >= s && corner[0] + corner[1] >= sum_min,
            point: corner,
            value: cv,
            gap: cv - closed,
        }),
        evaluated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CMode {
    /// Only the slice `z₁ = z₂ = 0`, `z₃ = x₃y₃`, where balance reduces to
    /// `x₁y₁ = x₂y₂`. Grid values are `{i/R} ∪ {½}`.
    Fast,
    /// Every `x, y` on the `1/R` simplex grid and every `z` on the `1/R²`
    /// grid below `x_i y_i`.
    Full,
}

/// Compositions of `r` into three nonnegative parts.
fn compositions(r: i128) -> Vec<[i128; 3]> {
    let mut out = Vec::new();
    for a in 0..=r {
        for b in 0..=r - a {
            out.push([a, b, r - a - b]);
        }
    }
    out
}

fn balanced(a: &[i128; 3]) -> bool {
    a[0] <= a[1] + a[2] && a[1] <= a[2] + a[0] && a[2] <= a[0] + a[1]
}

/// Maximises `Σ(x_i y_i − z_i)` under the simplex, `0 ≤ z_i ≤ x_i y_i` and
/// the three balance constraints `α_i ≤ α_j + α_k`. The closed form is ½.
/// Points are reported as `(x₁, y₁, z₁, x₂, y₂, z₂, x₃, y₃, z₃)`.
pub fn verify_appendix_c(resolution: usize, mode: CMode) -> Result<GridSearchResult> {
    if resolution < 4 {
        return Err(Error::InvalidParameter("resolution must be at least 4".into()));
    }
    match mode {
        CMode::Fast => appendix_c_fast(resolution),
        CMode::Full => appendix_c_full(resolution),
    }
}

fn appendix_c_fast(resolution: usize) -> Result<GridSearchResult> {
    let r = resolution as i128;
    let mut values: Vec<Exact> = (0..=r).map(|i| q(i, r)).collect();
    values.push(q(1, 2));
    values.sort();
    values.dedup();
    let one = Exact::from_integer(1);
    let zero = Exact::zero();
    let mut best: Option<(Exact, Vec<Exact>)> = None;
    let mut evaluated = 0u64;
    for &x1 in &values {
        for &y1 in &values {
            for &x2 in values.iter().filter(|&&x2| x1 + x2 <= one) {
                for &y2 in values.iter().filter(|&&y2| y1 + y2 <= one) {
                    evaluated += 1;
                    if x1 * y1 != x2 * y2 {
                        continue;
                    }
                    let (x3, y3) = (one - x1 - x2, one - y1 - y2);
                    let v = x1 * y1 + x2 * y2;
                    let p = vec![x1, y1, zero, x2, y2, zero, x3, y3, x3 * y3];
                    if best.as_ref().is_none_or(|(bv, bp)| v > *bv || (v == *bv && p < *bp)) {
                        best = Some((v, p));
                    }
                }
            }
        }
    }
    let (value, point) = best.expect("origin slice is feasible");
    Ok(GridSearchResult {
        value,
        point,
        resolution,
        closed_form: q(1, 2),
        gap: q(1, 2) - value,
        corner: None,
        evaluated,
    })
}

fn appendix_c_full(resolution: usize) -> Result<GridSearchResult> {
    let r = resolution as i128;
    let comps = compositions(r);
    let pairs: Vec<([i128; 3], [i128; 3])> = comps.iter().flat_map(|&x| comps.iter().map(move |&y| (x, y))).collect();
    // Per (x, y): best Σα in units of 1/R², as α_i = x_i y_i − z_i ranges
    // over every integer in [0, P_i].
    let results: Vec<(i128, Vec<i128>, u64)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let p = [x[0] * y[0], x[1] * y[1], x[2] * y[2]];
            let mut best = (-1i128, Vec::new());
            let mut count = 0u64;
            for z1 in 0..=p[0] {
                for z2 in 0..=p[1] {
                    for z3 in 0..=p[2] {
                        count += 1;
                        let alpha = [p[0] - z1, p[1] - z2, p[2] - z3];
                        if !balanced(&alpha) {
                            continue;
                        }
                        let v = alpha.iter().sum::<i128>();
                        // Scan order is lexicographic in z, so keep the first.
                        if v > best.0 {
                            best = (v, vec![x[0], y[0], z1, x[1], y[1], z2, x[2], y[2], z3]);
                        }
                    }
                }
            }
            (best.0, best.1, count)
        })
        .collect();
    let evaluated = results.iter().map(|r| r.2).sum();
    let to_point = |raw: &Vec<i128>| -> Vec<Exact> {
        raw.iter()
            .enumerate()
            .map(|(i, &v)| if i % 3 == 2 { q(v, r * r) } else { q(v, r) })
            .collect()
    };
    let (value, point) = results
        .iter()
        .filter(|res| res.0 >= 0)
        .map(|res| (q(res.0, r * r), to_point(&res.1)))
        .fold(None::<(Exact, Vec<Exact>)>, |acc, (v, p)| match acc {
            Some((bv, bp)) if bv > v || (bv == v && bp <= p) => Some((bv, bp)),
            _ => Some((v, p)),
        })
        .expect("z = x·y is always balanced");
    Ok(GridSearchResult {
        value,
        point,
        resolution,
        closed_form: q(1, 2),
        gap: q(1, 2) - value,
        corner: None,
        evaluated,
    })
}

/// Maximum of `Σα` on the slice `x₃ = 1` over the full grid in `y` and `z₃`.
pub fn appendix_c_slice_x3_one(resolution: usize) -> Exact {
    let r = resolution as i128;
    let mut best = i128::MIN;
    for y in compositions(r) {
        let p3 = r * y[2];
        for z3 in 0..=p3 {
            let alpha = [0, 0, p3 - z3];
            if balanced(&alpha) {
                best = best.max(alpha[2]);
            }
        }
    }
    q(best, r * r)
}
