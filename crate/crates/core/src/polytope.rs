//! Convex hulls with exact H-representations, difference bodies, and volumes.
//!
//! Hulls are computed by brute-force facet enumeration over affine-dim-sized
//! point subsets with exact orientation tests. That is quadratic nonsense
//! asymptotically and exactly right at this crate's scale (d <= 5, n <= 64):
//! no degenerate-position heuristics, no epsilon geometry, reproducible
//! output ordering.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg;
use crate::point::{Point, PointConfiguration};
use crate::scalar::Scalar;

/// Exact affine coordinate system for a point set: `y = base + basis . local`,
/// with the affine hull cut out by `normal . y = c` equalities in ambient
/// coordinates.
#[derive(Clone, Debug)]
pub struct AffineChart<S> {
    pub base: Point<S>,
    pub basis: Vec<Point<S>>,
    pub equalities: Vec<(Point<S>, S)>,
}

impl<S: Scalar> AffineChart<S> {
    /// Chart through `base` spanning the affine hull of `points`.
    pub fn build(points: &[Point<S>], base: Point<S>) -> Self {
        let dim = base.dim();
        let directions: Vec<Vec<S>> = points.iter().map(|p| p.sub(&base).0).collect();
        let keep = linalg::independent_subset(&directions);
        let basis: Vec<Point<S>> = keep.iter().map(|&i| Point(directions[i].clone())).collect();
        let basis_rows: Vec<Vec<S>> = basis.iter().map(|b| b.0.clone()).collect();
        let equalities = linalg::nullspace(&basis_rows, dim)
            .into_iter()
            .map(|w| {
                let n = Point(w);
                let c = n.dot(&base);
                (n, c)
            })
            .collect();
        AffineChart {
            base,
            basis,
            equalities,
        }
    }

    pub fn affine_dim(&self) -> usize {
        self.basis.len()
    }

    /// Local coordinates of an ambient point, or None when it lies outside
    /// the affine hull.
    pub fn to_local(&self, p: &Point<S>) -> Option<Vec<S>> {
        for (n, c) in &self.equalities {
            if n.dot(p) != *c {
                return None;
            }
        }
        if self.basis.is_empty() {
            return if p == &self.base { Some(vec![]) } else { None };
        }
        // Columns of the system are the basis vectors.
        let dim = self.base.dim();
        let mat: Vec<Vec<S>> = (0..dim)
            .map(|r| self.basis.iter().map(|b| b.0[r].clone()).collect())
            .collect();
        let rhs = p.sub(&self.base).0;
        linalg::solve(&mat, &rhs)
    }

    pub fn to_ambient(&self, local: &[S]) -> Point<S> {
        assert_eq!(local.len(), self.basis.len());
        let mut out = self.base.clone();
        for (c, b) in local.iter().zip(&self.basis) {
            out = out.add(&b.scale(c));
        }
        out
    }
}

/// One facet inequality `normal . y <= offset` in ambient coordinates,
/// meaningful jointly with the chart's affine-hull equalities.
#[derive(Clone, Debug)]
pub struct Facet<S> {
    pub normal: Point<S>,
    pub offset: S,
}

#[derive(Clone, Debug)]
pub struct Polytope<S> {
    pub dim: usize,
    /// Extreme points only, sorted lexicographically.
    pub vertices: Vec<Point<S>>,
    /// Present whenever the hull was fully enumerated; difference bodies skip
    /// facet enumeration and answer gauge queries from the V-representation.
    pub facets: Option<Vec<Facet<S>>>,
    pub chart: AffineChart<S>,
    pub affine_dim: usize,
}

const MAX_HULL_POINTS: usize = 64;
const MAX_HULL_DIM: usize = 5;

fn dedupe_sorted<S: Scalar>(points: &[Point<S>]) -> Vec<Point<S>> {
    let mut pts: Vec<Point<S>> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a == b);
    pts
}

/// Scales (normal, offset) so the first nonzero normal coordinate has unit
/// magnitude. Positive scaling only: the inequality's orientation survives.
fn canonical_scale<S: Scalar>(normal: &mut [S], offset: &mut S) {
    let Some(first) = normal.iter().find(|c| !c.is_zero()) else {
        return;
    };
    let f = first.abs();
    for c in normal.iter_mut() {
        *c = c.clone() / f.clone();
    }
    *offset = offset.clone() / f;
}

/// Facets of the full-dimensional hull of `locals` (affine dim == coordinate
/// count), as local-coordinate inequalities.
fn local_facets<S: Scalar>(locals: &[Vec<S>], a: usize) -> Vec<(Vec<S>, S)> {
    match a {
        0 => vec![],
        1 => {
            let mut lo = locals[0][0].clone();
            let mut hi = lo.clone();
            for l in locals {
                if l[0].total_cmp(&lo) == Ordering::Less {
                    lo = l[0].clone();
                }
                if l[0].total_cmp(&hi) == Ordering::Greater {
                    hi = l[0].clone();
                }
            }
            vec![(vec![S::one()], hi), (vec![-S::one()], -lo)]
        }
        2 => {
            let hull = monotone_chain(locals);
            let m = hull.len();
            let mut out = Vec::with_capacity(m);
            for i in 0..m {
                let u = &locals[hull[i]];
                let v = &locals[hull[(i + 1) % m]];
                // Outward normal of a counterclockwise edge.
                let n = vec![v[1].clone() - u[1].clone(), u[0].clone() - v[0].clone()];
                let o = n[0].clone() * u[0].clone() + n[1].clone() * u[1].clone();
                let mut n = n;
                let mut o = o;
                canonical_scale(&mut n, &mut o);
                out.push((n, o));
            }
            out
        }
        _ => brute_force_facets(locals, a),
    }
}

/// Indices of hull vertices in counterclockwise order (Andrew's monotone
/// chain with exact cross products). Collinear boundary points are dropped.
fn monotone_chain<S: Scalar>(locals: &[Vec<S>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..locals.len()).collect();
    idx.sort_by(|&i, &j| {
        locals[i][0]
            .total_cmp(&locals[j][0])
            .then_with(|| locals[i][1].total_cmp(&locals[j][1]))
    });
    let cross = |o: usize, a: usize, b: usize| -> Ordering {
        let v = (locals[a][0].clone() - locals[o][0].clone())
            * (locals[b][1].clone() - locals[o][1].clone())
            - (locals[a][1].clone() - locals[o][1].clone())
                * (locals[b][0].clone() - locals[o][0].clone());
        v.total_cmp(&S::zero())
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && cross(lower[lower.len() - 2], lower[lower.len() - 1], i) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross(upper[upper.len() - 2], upper[upper.len() - 1], i) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn brute_force_facets<S: Scalar>(locals: &[Vec<S>], a: usize) -> Vec<(Vec<S>, S)> {
    let mut facets: Vec<(Vec<S>, S)> = Vec::new();
    for subset in (0..locals.len()).combinations(a) {
        let q0 = &locals[subset[0]];
        let dirs: Vec<Vec<S>> = subset[1..]
            .iter()
            .map(|&i| {
                locals[i]
                    .iter()
                    .zip(q0)
                    .map(|(x, y)| x.clone() - y.clone())
                    .collect()
            })
            .collect();
        let ns = linalg::nullspace(&dirs, a);
        // Exactly one normal direction means the subset spans a hyperplane.
        if ns.len() != 1 {
            continue;
        }
        let mut n = ns.into_iter().next().unwrap();
        let mut o = n
            .iter()
            .zip(q0)
            .fold(S::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
        let mut any_pos = false;
        let mut any_neg = false;
        for l in locals {
            let side = n
                .iter()
                .zip(l)
                .fold(-o.clone(), |acc, (c, x)| acc + c.clone() * x.clone());
            if side > S::zero() {
                any_pos = true;
            } else if side < S::zero() {
                any_neg = true;
            }
            if any_pos && any_neg {
                break;
            }
        }
        if any_pos && any_neg {
            continue;
        }
        if any_pos {
            for c in n.iter_mut() {
                *c = -c.clone();
            }
            o = -o;
        }
        canonical_scale(&mut n, &mut o);
        if !facets.iter().any(|(n2, o2)| *n2 == n && *o2 == o) {
            facets.push((n, o));
        }
    }
    facets
}

impl<S: Scalar> Polytope<S> {
    pub fn contains(&self, p: &Point<S>) -> bool {
        for (n, c) in &self.chart.equalities {
            if n.dot(p) != *c {
                return false;
            }
        }
        match &self.facets {
            Some(fs) => fs.iter().all(|f| f.normal.dot(p) <= f.offset),
            None => panic!("contains() needs an H-representation"),
        }
    }

    /// Strict inequality on every facet; equalities still required (interior
    /// relative to the affine hull).
    pub fn strictly_contains(&self, p: &Point<S>) -> bool {
        for (n, c) in &self.chart.equalities {
            if n.dot(p) != *c {
                return false;
            }
        }
        match &self.facets {
            Some(fs) => fs.iter().all(|f| f.normal.dot(p) < f.offset),
            None => panic!("strictly_contains() needs an H-representation"),
        }
    }

    pub fn on_boundary(&self, p: &Point<S>) -> bool {
        self.contains(p) && !self.strictly_contains(p)
    }

    /// The half-homothet `center + (P - center)/2`, exact in all parts.
    pub fn half_homothet(&self, center: &Point<S>) -> Polytope<S> {
        let half = S::from_ratio(1, 2);
        let map = |p: &Point<S>| center.add(&p.sub(center).scale(&half));
        let vertices: Vec<Point<S>> = self.vertices.iter().map(|v| map(v)).collect();
        let facets = self.facets.as_ref().map(|fs| {
            fs.iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    // normal.y <= (offset + normal.center)/2 on the image.
                    offset: (f.offset.clone() + f.normal.dot(center)) * half.clone(),
                })
                .collect()
        });
        let base = map(&self.chart.base);
        let basis = self
            .chart
            .basis
            .iter()
            .map(|b| b.scale(&half))
            .collect::<Vec<_>>();
        let equalities = self
            .chart
            .equalities
            .iter()
            .map(|(n, _)| (n.clone(), n.dot(&base)))
            .collect();
        Polytope {
            dim: self.dim,
            vertices,
            facets,
            chart: AffineChart {
                base,
                basis,
                equalities,
            },
            affine_dim: self.affine_dim,
        }
    }
}

/// Convex hull with extreme points and ambient facet inequalities.
pub fn convex_hull<S: Scalar>(points: &[Point<S>]) -> Result<Polytope<S>> {
    if points.is_empty() {
        return Err(Error::DegenerateConfiguration("hull of no points".into()));
    }
    let dim = points[0].dim();
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch("hull input dims differ".into()));
    }
    if dim > MAX_HULL_DIM {
        return Err(Error::TooLarge(format!(
            "hull limited to dimension {}, got {}",
            MAX_HULL_DIM, dim
        )));
    }
    let pts = dedupe_sorted(points);
    if pts.len() > MAX_HULL_POINTS {
        return Err(Error::TooLarge(format!(
            "hull limited to {} distinct points, got {}",
            MAX_HULL_POINTS,
            pts.len()
        )));
    }
    let base = pts[0].clone();
    hull_with_chart(&pts, AffineChart::build(&pts, base))
}

/// Hull with the chart centered at the origin; fails unless the origin lies
/// in the affine hull. Norm bodies are built this way so gauge queries are
/// linear in local coordinates.
pub fn convex_hull_centered<S: Scalar>(points: &[Point<S>]) -> Result<Polytope<S>> {
    if points.is_empty() {
        return Err(Error::DegenerateConfiguration("hull of no points".into()));
    }
    let dim = points[0].dim();
    let pts = dedupe_sorted(points);
    let origin = Point::zero(dim);
    let chart = AffineChart::build(&pts, origin);
    // A chart based at the origin spans aff(points) + span{0..}; it matches
    // the true affine hull exactly when the origin belongs to that hull.
    let reference = AffineChart::build(&pts, pts[0].clone());
    if chart.affine_dim() != reference.affine_dim() {
        return Err(Error::InvalidBody(
            "origin is not in the affine hull of the body".into(),
        ));
    }
    hull_with_chart(&pts, chart)
}

fn hull_with_chart<S: Scalar>(pts: &[Point<S>], chart: AffineChart<S>) -> Result<Polytope<S>> {
    let dim = chart.base.dim();
    let a = chart.affine_dim();
    let locals: Vec<Vec<S>> = pts
        .iter()
        .map(|p| chart.to_local(p).expect("chart spans its defining points"))
        .collect();

    if a == 0 {
        return Ok(Polytope {
            dim,
            vertices: vec![pts[0].clone()],
            facets: Some(vec![]),
            chart,
            affine_dim: 0,
        });
    }

    let lf = local_facets(&locals, a);

    // A vertex is a point whose tight facet normals span the local space.
    let mut vertices = Vec::new();
    for (p, l) in pts.iter().zip(&locals) {
        let active: Vec<Vec<S>> = lf
            .iter()
            .filter(|(n, o)| {
                let v = n
                    .iter()
                    .zip(l)
                    .fold(-o.clone(), |acc, (c, x)| acc + c.clone() * x.clone());
                v.is_zero()
            })
            .map(|(n, _)| n.clone())
            .collect();
        if linalg::rank(&active) == a {
            vertices.push(p.clone());
        }
    }
    vertices.sort_by(|x, y| x.lex_cmp(y));

    // Lift local facet normals to ambient: solve basis^T w = n.
    let basis_t: Vec<Vec<S>> = chart.basis.iter().map(|b| b.0.clone()).collect();
    let mut facets = Vec::with_capacity(lf.len());
    for (n, o) in lf {
        let w = linalg::solve(&basis_t, &n)
            .ok_or_else(|| Error::Internal("facet lift system inconsistent".into()))?;
        let mut normal = w;
        let mut offset = o + Point(normal.clone()).dot(&chart.base);
        canonical_scale(&mut normal, &mut offset);
        facets.push(Facet {
            normal: Point(normal),
            offset,
        });
    }

    Ok(Polytope {
        dim,
        vertices,
        facets: Some(facets),
        chart,
        affine_dim: a,
    })
}

/// Hull of all pairwise differences of distinct points of `X`, with an
/// origin-centered chart and extreme points found by exact LP pruning rather
/// than facet enumeration (facets stay unset; the gauge engine works from
/// the V-representation).
pub fn difference_body<S: Scalar>(cfg: &PointConfiguration<S>) -> Result<Polytope<S>> {
    let distinct: Vec<Point<S>> = cfg
        .distinct_points()
        .into_iter()
        .map(|(p, _, _)| p)
        .collect();
    if distinct.len() < 2 {
        return Err(Error::DegenerateConfiguration(
            "difference body needs two distinct points".into(),
        ));
    }
    let dim = cfg.dim();
    let mut diffs: Vec<Point<S>> = Vec::new();
    for i in 0..distinct.len() {
        for j in 0..distinct.len() {
            if i != j {
                diffs.push(distinct[i].sub(&distinct[j]));
            }
        }
    }
    let diffs = dedupe_sorted(&diffs);

    // Midpoint pre-filter: a point that is the average of two others in the
    // set is a strict convex combination, hence not extreme. Cheap and exact;
    // kills most of the lattice-like interiors before any LP runs.
    let doubled: Vec<Point<S>> = diffs.iter().map(|p| p.scale(&S::from_int(2))).collect();
    let is_present = |q: &Point<S>| -> bool { diffs.binary_search_by(|p| p.lex_cmp(q)).is_ok() };
    let mut candidates: Vec<Point<S>> = Vec::new();
    'outer: for (idx, p) in diffs.iter().enumerate() {
        for q in &diffs {
            if q == p {
                continue;
            }
            let r = Point(
                doubled[idx]
                    .0
                    .iter()
                    .zip(&q.0)
                    .map(|(d, qq)| d.clone() - qq.clone())
                    .collect(),
            );
            if r != *q && is_present(&r) {
                continue 'outer;
            }
        }
        candidates.push(p.clone());
    }

    // LP extremality: p is extreme iff it is not a convex combination of the
    // other candidates (non-extreme survivors of the pre-filter cannot hide
    // an extreme point, so testing against candidates only is sound).
    let mut vertices: Vec<Point<S>> = Vec::new();
    for (i, p) in candidates.iter().enumerate() {
        let others: Vec<&Point<S>> = candidates
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q)
            .collect();
        if !in_convex_hull_lp(p, &others) {
            vertices.push(p.clone());
        }
    }
    vertices.sort_by(|x, y| x.lex_cmp(y));

    // Origin-symmetric by construction; check anyway, it is load-bearing.
    for v in &vertices {
        let neg = v.scale(&-S::one());
        if !vertices.iter().any(|w| *w == neg) {
            return Err(Error::Internal(
                "difference body vertex set not symmetric".into(),
            ));
        }
    }

    let chart = AffineChart::build(&vertices, Point::zero(dim));
    let affine_dim = chart.affine_dim();
    Ok(Polytope {
        dim,
        vertices,
        facets: None,
        chart,
        affine_dim,
    })
}

/// Feasibility of `p = sum c_q q, c >= 0, sum c = 1` by exact LP.
fn in_convex_hull_lp<S: Scalar>(p: &Point<S>, others: &[&Point<S>]) -> bool {
    use crate::lp::{Program, Rel, VarDomain};
    if others.is_empty() {
        return false;
    }
    let dim = p.dim();
    let m = others.len();
    let mut lp: Program<S> = Program::new(m, VarDomain::NonNegative);
    for r in 0..dim {
        let row: Vec<S> = others.iter().map(|q| q.0[r].clone()).collect();
        lp.push(row, Rel::Eq, p.0[r].clone());
    }
    lp.push(vec![S::one(); m], Rel::Eq, S::one());
    lp.feasible_point().is_some()
}

/// Exact volume by simplicial decomposition; zero when not full-dimensional.
pub fn polytope_volume<S: Scalar>(p: &Polytope<S>) -> Result<S> {
    if p.affine_dim < p.dim {
        return Ok(S::zero());
    }
    let simplices = triangulate(&p.vertices)?;
    let d = p.dim;
    let mut factorial = S::one();
    for i in 2..=d {
        factorial = factorial * S::from_int(i as i64);
    }
    let mut total = S::zero();
    for s in &simplices {
        let v0 = &p.vertices[s[0]];
        let mat: Vec<Vec<S>> = s[1..].iter().map(|&i| p.vertices[i].sub(v0).0).collect();
        total = total + linalg::determinant(&mat).abs();
    }
    Ok(total / factorial)
}

/// Triangulation of the hull of `points` into simplices of its affine
/// dimension, as index lists into `points`. Cones each facet triangulation
/// to the lexicographically smallest vertex.
pub fn triangulate<S: Scalar>(points: &[Point<S>]) -> Result<Vec<Vec<usize>>> {
    let hull = convex_hull(points)?;
    let a = hull.affine_dim;
    if a == 0 {
        let i = points
            .iter()
            .position(|p| *p == hull.vertices[0])
            .expect("vertex originates from input");
        return Ok(vec![vec![i]]);
    }
    let index_of = |q: &Point<S>| -> usize {
        points
            .iter()
            .position(|p| p == q)
            .expect("vertex originates from input")
    };
    if a == 1 {
        let lo = index_of(&hull.vertices[0]);
        let hi = index_of(hull.vertices.last().unwrap());
        return Ok(vec![vec![lo, hi]]);
    }
    let apex = hull.vertices[0].clone();
    let apex_idx = index_of(&apex);
    let facets = hull.facets.as_ref().expect("hull carries facets");
    let mut out = Vec::new();
    for f in facets {
        if f.normal.dot(&apex) == f.offset {
            continue; // facet contains the apex, contributes no volume
        }
        let fverts: Vec<Point<S>> = hull
            .vertices
            .iter()
            .filter(|v| f.normal.dot(v) == f.offset)
            .cloned()
            .collect();
        let sub = triangulate(&fverts)?;
        for simplex in sub {
            let mut s: Vec<usize> = vec![apex_idx];
            s.extend(simplex.iter().map(|&i| index_of(&fverts[i])));
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, RatPoint, Rational};

    fn pts(coords: &[&[i64]]) -> Vec<RatPoint> {
        coords.iter().map(|c| Point::from_ints(c)).collect()
    }

    #[test]
    fn square_with_center_drops_center() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(p.facets.as_ref().unwrap().len(), 4);
        assert_eq!(p.affine_dim, 2);

        let with_center = [
            pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
            vec![Point(vec![rat(1, 2), rat(1, 2)])],
        ]
        .concat();
        let q = convex_hull(&with_center).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.facets.as_ref().unwrap().len(), 4);
        assert!(q.strictly_contains(&Point(vec![rat(1, 2), rat(1, 2)])));
        assert!(q.on_boundary(&Point(vec![rat(0, 1), rat(1, 2)])));
        assert!(!q.contains(&Point(vec![rat(2, 1), rat(0, 1)])));
    }

    #[test]
    fn collinear_points_reduce_to_segment() {
        let p = convex_hull(&pts(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap();
        assert_eq!(p.affine_dim, 1);
        assert_eq!(p.vertices.len(), 2);
        assert_eq!(p.vertices[0], Point::from_ints(&[0, 0]));
        assert_eq!(p.vertices[1], Point::from_ints(&[2, 2]));
        // Midpoint on the segment, off-hull point rejected by equalities.
        assert!(p.contains(&Point::from_ints(&[1, 1])));
        assert!(!p.contains(&Point::from_ints(&[1, 0])));
    }

    #[test]
    fn cube_hull_counts() {
        let corners: Vec<RatPoint> = (0..8)
            .map(|m| Point::from_ints(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        let p = convex_hull(&corners).unwrap();
        assert_eq!(p.vertices.len(), 8);
        assert_eq!(p.facets.as_ref().unwrap().len(), 6);
        assert_eq!(p.affine_dim, 3);
        for v in &p.vertices {
            assert!(p.contains(v));
            assert!(!p.strictly_contains(v));
        }
    }

    #[test]
    fn facets_tight_at_enough_vertices() {
        let corners: Vec<RatPoint> = (0..16)
            .map(|m| Point::from_ints(&[m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1]))
            .collect();
        let p = convex_hull(&corners).unwrap();
        assert_eq!(p.vertices.len(), 16);
        assert_eq!(p.facets.as_ref().unwrap().len(), 8);
        for f in p.facets.as_ref().unwrap() {
            let tight = p
                .vertices
                .iter()
                .filter(|v| f.normal.dot(v) == f.offset)
                .count();
            assert!(
                tight >= p.affine_dim,
                "facet tight at {} < {}",
                tight,
                p.affine_dim
            );
        }
    }

    #[test]
    fn difference_body_of_unit_square() {
        let cfg =
            PointConfiguration::<Rational>::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let db = difference_body(&cfg).unwrap();
        let expect = pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]);
        assert_eq!(db.vertices, dedupe_sorted(&expect));
        assert_eq!(db.affine_dim, 2);
    }

    #[test]
    fn difference_body_of_triangle_is_hexagon() {
        let cfg = PointConfiguration::<Rational>::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let db = difference_body(&cfg).unwrap();
        let expect = pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]);
        assert_eq!(db.vertices, dedupe_sorted(&expect));
    }

    #[test]
    fn difference_body_of_segment() {
        let cfg = PointConfiguration::<Rational>::from_ints(2, &[&[0, 0], &[2, 0]]);
        let db = difference_body(&cfg).unwrap();
        assert_eq!(db.affine_dim, 1);
        assert_eq!(db.vertices, pts(&[&[-2, 0], &[2, 0]]));
    }

    #[test]
    fn difference_body_rejects_single_point() {
        let cfg = PointConfiguration::<Rational>::from_ints(2, &[&[3, 4], &[3, 4]]);
        assert!(matches!(
            difference_body(&cfg),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn volumes() {
        let cube: Vec<RatPoint> = (0..8)
            .map(|m| Point::from_ints(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]))
            .collect();
        assert_eq!(
            polytope_volume(&convex_hull(&cube).unwrap()).unwrap(),
            rat(1, 1)
        );

        let tri = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(polytope_volume(&tri).unwrap(), rat(1, 2));

        let hexagon = convex_hull(&pts(&[
            &[1, 0],
            &[-1, 0],
            &[0, 1],
            &[0, -1],
            &[1, -1],
            &[-1, 1],
        ]))
        .unwrap();
        assert_eq!(polytope_volume(&hexagon).unwrap(), rat(3, 1));

        let segment = convex_hull(&pts(&[&[0, 0], &[2, 0]])).unwrap();
        assert_eq!(polytope_volume(&segment).unwrap(), rat(0, 1));
    }

    #[test]
    fn four_dim_volume() {
        let corners: Vec<RatPoint> = (0..16)
            .map(|m| Point::from_ints(&[m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1]))
            .collect();
        let p = convex_hull(&corners).unwrap();
        assert_eq!(polytope_volume(&p).unwrap(), rat(1, 1));
    }

    #[test]
    fn half_homothet_scaling_law() {
        let square = convex_hull(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])).unwrap();
        let piece = square.half_homothet(&Point::from_ints(&[0, 0]));
        assert_eq!(polytope_volume(&piece).unwrap(), rat(1, 1));
        assert_eq!(polytope_volume(&square).unwrap(), rat(4, 1));
        // The piece is the corner quarter.
        assert!(piece.contains(&Point::from_ints(&[1, 1])));
        assert!(!piece.contains(&Point(vec![rat(3, 2), rat(3, 2)])));
        // Independent recomputation from scratch agrees.
        let fresh = convex_hull(&piece.vertices).unwrap();
        assert_eq!(polytope_volume(&fresh).unwrap(), rat(1, 1));
    }

    #[test]
    fn centered_hull_requires_origin_in_affine_hull() {
        let ok = convex_hull_centered(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert!(ok.is_ok());
        // Segment on the line y=1: its affine hull misses the origin even
        // though its linear span is the whole plane.
        let bad = convex_hull_centered(&pts(&[&[1, 1], &[2, 1]]));
        assert!(matches!(bad, Err(Error::InvalidBody(_))));
    }
}
