//! Antipodality of point pairs, decided exactly over the rationals.
//!
//! A pair (x, y) of a configuration X is antipodal when some direction u
//! exposes x as a maximizer and y as a minimizer of u over X, with strictly
//! different values, i.e. X fits between two distinct parallel supporting
//! hyperplanes through x and y.
//!
//! Two routes compute the same edge set and are cross-checked against each
//! other on every full analysis:
//!  (a) a feasibility LP for the exposing direction, pair by pair;
//!  (b) the difference-body boundary test: (x, y) antipodal iff the gauge of
//!      conv(X - X) equals one at x - y.

use crate::error::{Error, Result};
use crate::lp::{Program, Rel, VarDomain};
use crate::norm::gauge_norm;
use crate::point::{Point, PointConfiguration};
use crate::polytope::{difference_body, AffineChart};
use crate::Rational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct AntipodalAnalysis {
    /// Antipodal index pairs (i, j), i < j, over the original point list.
    pub edges: Vec<(usize, usize)>,
    pub flags: Vec<String>,
}

/// A direction exposing points `i` (as max) and `j` (as min) with a gap,
/// or `None` when the pair is not antipodal. `i == j` and coincident
/// points are never antipodal.
pub fn separating_direction(
    cfg: &PointConfiguration<Rational>,
    i: usize,
    j: usize,
) -> Result<Option<Point<Rational>>> {
    let n = cfg.len();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let xi = &cfg.points()[i];
    let xj = &cfg.points()[j];
    if xi == xj {
        return Ok(None);
    }
    Ok(direction_for_values(cfg, xi, xj))
}

/// The LP behind [`separating_direction`], phrased on point values.
///
/// Variables: u in R^d, free. Constraints: u.(xi - xj) = 1 plus, for every
/// other value z, u.(xi - z) >= 0 and u.(z - xj) >= 0. The normalization
/// both rules out u = 0 and forces the two hyperplanes apart; any exposing
/// direction rescales to satisfy it.
fn direction_for_values(
    cfg: &PointConfiguration<Rational>,
    xi: &Point<Rational>,
    xj: &Point<Rational>,
) -> Option<Point<Rational>> {
    let d = cfg.dim();
    let mut lp: Program<Rational> = Program::new(d, VarDomain::Free);
    lp.push(xi.sub(xj).0, Rel::Eq, Rational::one());
    for (z, _, _) in cfg.distinct_points() {
        if z == *xi || z == *xj {
            continue;
        }
        lp.push(xi.sub(&z).0, Rel::Ge, Rational::zero());
        lp.push(z.sub(xj).0, Rel::Ge, Rational::zero());
    }
    lp.feasible_point().map(Point)
}

/// Antipodal edge set over the original indices, with both routes run and
/// compared. Disagreement is a bug in one of them and surfaces as
/// [`Error::Internal`].
pub fn antipodal_edges(cfg: &PointConfiguration<Rational>) -> Result<AntipodalAnalysis> {
    let (values, value_of) = distinct_values(cfg);
    let mut flags = Vec::new();
    let chart = AffineChart::build(cfg.points(), cfg.points()[0].clone());
    if chart.affine_dim() < cfg.dim() {
        flags.push("degenerate-affine-hull".to_string());
    }

    let m = values.len();
    if m < 2 {
        return Ok(AntipodalAnalysis {
            edges: Vec::new(),
            flags,
        });
    }

    let mut by_value = vec![vec![false; m]; m];
    for a in 0..m {
        for b in (a + 1)..m {
            by_value[a][b] = direction_for_values(cfg, &values[a], &values[b]).is_some();
        }
    }

    // Independent route: x - y on the boundary of the difference body.
    let db = difference_body(cfg)?;
    for a in 0..m {
        for b in (a + 1)..m {
            let diff = values[a].sub(&values[b]);
            let g = gauge_norm(&db, &diff)?;
            if g > Rational::one() {
                return Err(Error::Internal(format!(
                    "difference of configuration points outside its difference body \
                     (gauge {})",
                    g
                )));
            }
            let boundary = g == Rational::one();
            if boundary != by_value[a][b] {
                return Err(Error::Internal(format!(
                    "antipodality routes disagree on value pair ({}, {}): \
                     direction LP says {}, difference-body gauge says {}",
                    a, b, by_value[a][b], boundary
                )));
            }
        }
    }

    Ok(AntipodalAnalysis {
        edges: expand_edges(cfg.len(), &value_of, &by_value),
        flags,
    })
}

/// Single-route edge set for tight inner loops (subset searches). Skips the
/// difference-body cross-check; callers re-verify any final witness through
/// the full analysis.
pub fn antipodal_edges_lp_only(cfg: &PointConfiguration<Rational>) -> Result<Vec<(usize, usize)>> {
    let (values, value_of) = distinct_values(cfg);
    let m = values.len();
    if m < 2 {
        return Ok(Vec::new());
    }
    let mut by_value = vec![vec![false; m]; m];
    for a in 0..m {
        for b in (a + 1)..m {
            by_value[a][b] = direction_for_values(cfg, &values[a], &values[b]).is_some();
        }
    }
    Ok(expand_edges(cfg.len(), &value_of, &by_value))
}

fn distinct_values(cfg: &PointConfiguration<Rational>) -> (Vec<Point<Rational>>, Vec<usize>) {
    let mut values: Vec<Point<Rational>> = Vec::new();
    let mut value_of = Vec::with_capacity(cfg.len());
    for p in cfg.points() {
        match values.iter().position(|v| v == p) {
            Some(idx) => value_of.push(idx),
            None => {
                value_of.push(values.len());
                values.push(p.clone());
            }
        }
    }
    (values, value_of)
}

fn expand_edges(n: usize, value_of: &[usize], by_value: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (value_of[i], value_of[j]);
            if a == b {
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if by_value[lo][hi] {
                edges.push((i, j));
            }
        }
    }
    edges
}
