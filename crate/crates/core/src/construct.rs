//! Explicit configurations: cube families, doubled simplices, polygon
//! boundary sets, prism lifts, the six-point showcase realizations, and the
//! seven-point unit-distance witness. Each shipped instance carries the
//! verifier, parameter k, norm, and count it is expected to certify.

use std::f64::consts::PI;

use crate::catalog::CatalogMember;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::point::{AnyConfig, Point, PointConfiguration};
use crate::scalar::Scalar;
use crate::{rat, Rational};

const MAX_CUBE_DIM: usize = 16;
const MAX_CONSTRUCT_POINTS: usize = 1 << 20;

/// {0,1}^d with every vertex repeated k-1 times; (k-1)*2^d points total.
pub fn cube_config(d: usize, k: usize) -> Result<PointConfiguration<Rational>> {
    if d < 1 || k < 2 {
        return Err(Error::InvalidSpec(format!(
            "cube family needs d >= 1 and k >= 2, got d={} k={}",
            d, k
        )));
    }
    if d > MAX_CUBE_DIM || (k - 1).saturating_mul(1 << d) > MAX_CONSTRUCT_POINTS {
        return Err(Error::TooLarge(format!("cube family d={} k={}", d, k)));
    }
    let corners: Vec<Point<Rational>> = (0..1usize << d)
        .map(|mask| Point((0..d).map(|j| rat(((mask >> j) & 1) as i64, 1)).collect()))
        .collect();
    let base = PointConfiguration::new(d, corners)?;
    multiplicity_lift(&base, k - 1)
}

/// Every point repeated m times, block by block in the original order.
pub fn multiplicity_lift<S: Scalar>(
    cfg: &PointConfiguration<S>,
    m: usize,
) -> Result<PointConfiguration<S>> {
    if m < 1 {
        return Err(Error::InvalidSpec("multiplicity must be positive".into()));
    }
    if cfg.len().saturating_mul(m) > MAX_CONSTRUCT_POINTS {
        return Err(Error::TooLarge(format!("lift to {} copies", m)));
    }
    let mut pts = Vec::with_capacity(cfg.len() * m);
    for p in cfg.points() {
        for _ in 0..m {
            pts.push(p.clone());
        }
    }
    PointConfiguration::new(cfg.dim(), pts)
}

/// Standard-basis regular simplex e_1..e_{d+1} in ambient dimension d+1,
/// every vertex doubled; 2d+2 points, all distinct-pair distances equal.
pub fn simplex_double(d: usize) -> Result<PointConfiguration<Rational>> {
    if d < 1 {
        return Err(Error::InvalidSpec("simplex needs d >= 1".into()));
    }
    if d > 64 {
        return Err(Error::TooLarge(format!("simplex dimension {}", d)));
    }
    let verts: Vec<Point<Rational>> = (0..=d)
        .map(|i| Point((0..=d).map(|j| rat((i == j) as i64, 1)).collect()))
        .collect();
    let base = PointConfiguration::new(d + 1, verts)?;
    multiplicity_lift(&base, 2)
}

/// m float points on the unit circle at angles 2*pi*j/m.
pub fn regular_polygon(m: usize) -> Result<PointConfiguration<f64>> {
    if m < 3 {
        return Err(Error::InvalidSpec(format!(
            "polygon needs m >= 3, got {}",
            m
        )));
    }
    let pts: Vec<Point<f64>> = (0..m)
        .map(|j| {
            let th = 2.0 * PI * (j as f64) / (m as f64);
            Point(vec![th.cos(), th.sin()])
        })
        .collect();
    PointConfiguration::new(2, pts)
}

/// Boundary points of a centrally symmetric convex 2s-gon, with the
/// prescribed number of evenly spaced points per side (counts include both
/// endpoints; shared endpoints are emitted once). Opposite sides are exactly
/// parallel, so a side direction supports the whole side: regular-polygon
/// float coordinates would lose those tie directions to rounding, hence the
/// exact lattice-direction polygon here.
pub fn sided_polygon(side_counts: &[usize]) -> Result<PointConfiguration<Rational>> {
    let n = side_counts.len();
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidSpec(format!(
            "side counts must come in opposite pairs, got {} sides",
            n
        )));
    }
    let s = n / 2;
    for i in 0..s {
        if side_counts[i] != side_counts[i + s] {
            return Err(Error::InvalidSpec(format!(
                "opposite sides {} and {} carry {} vs {} points",
                i,
                i + s,
                side_counts[i],
                side_counts[i + s]
            )));
        }
    }
    if let Some(i) = side_counts.iter().position(|&c| c < 2) {
        return Err(Error::InvalidSpec(format!(
            "side {} needs at least its two endpoints, got count {}",
            i, side_counts[i]
        )));
    }

    // Edge vectors with strictly increasing direction angle; walking them,
    // then their negations, closes a convex centrally symmetric 2s-gon.
    let gens: Vec<Point<Rational>> = (0..s)
        .map(|i| Point(vec![rat((s - 1 - i) as i64, 1), rat(i as i64, 1)]))
        .collect();
    let total = gens.iter().fold(Point::zero(2), |acc, g| acc.add(g));
    let mut vertex = total.scale(&rat(-1, 2));

    let mut pts: Vec<Point<Rational>> = Vec::new();
    for side in 0..2 * s {
        let dir = if side < s {
            gens[side].clone()
        } else {
            gens[side - s].scale(&rat(-1, 1))
        };
        let c = side_counts[side];
        // Emit the start vertex and the interior points; the far endpoint is
        // the next side's start.
        for j in 0..c - 1 {
            let step = dir.scale(&rat(j as i64, (c - 1) as i64));
            pts.push(vertex.add(&step));
        }
        vertex = vertex.add(&dir);
    }
    PointConfiguration::new(2, pts)
}

/// Half the number of distinct points sided_polygon emits: the k for which
/// the boundary set is k-antipodal.
pub fn sided_polygon_k(side_counts: &[usize]) -> usize {
    side_counts.iter().map(|c| c - 1).sum::<usize>() / 2
}

/// Duplicates the configuration at unit offset along a fresh coordinate
/// axis, once per lift. The unit offset keeps a diameter-1 input at
/// diameter 1 under the max norm, so cross-layer pairs all realize it.
pub fn prism_lift<S: Scalar>(
    cfg: &PointConfiguration<S>,
    times: usize,
) -> Result<PointConfiguration<S>> {
    if times < 1 {
        return Err(Error::InvalidSpec("prism lift needs times >= 1".into()));
    }
    if cfg.len().saturating_mul(1 << times.min(40)) > MAX_CONSTRUCT_POINTS {
        return Err(Error::TooLarge(format!("prism lift {} times", times)));
    }
    let mut dim = cfg.dim();
    let mut pts: Vec<Point<S>> = cfg.points().to_vec();
    for _ in 0..times {
        let mut next = Vec::with_capacity(pts.len() * 2);
        for p in &pts {
            let mut q = p.0.clone();
            q.push(S::zero());
            next.push(Point(q));
        }
        for p in &pts {
            let mut q = p.0.clone();
            q.push(S::one());
            next.push(Point(q));
        }
        dim += 1;
        pts = next;
    }
    PointConfiguration::new(dim, pts)
}

/// Regular (2k-1)-gon in the z=0 plane (circumradius 1) plus the apex above
/// the center at the polygon's diameter from every rim vertex; 2k points.
pub fn odd_gon_with_apex(k: usize) -> Result<PointConfiguration<f64>> {
    if k < 3 {
        return Err(Error::InvalidSpec(format!(
            "apex construction needs k >= 3, got {}",
            k
        )));
    }
    let m = 2 * k - 1;
    let diam = odd_gon_diameter(m);
    let mut pts: Vec<Point<f64>> = (0..m)
        .map(|j| {
            let th = 2.0 * PI * (j as f64) / (m as f64);
            Point(vec![th.cos(), th.sin(), 0.0])
        })
        .collect();
    pts.push(Point(vec![0.0, 0.0, (diam * diam - 1.0).sqrt()]));
    PointConfiguration::new(3, pts)
}

/// Longest chord of the regular m-gon with circumradius 1, m odd.
fn odd_gon_diameter(m: usize) -> f64 {
    2.0 * (PI * ((m / 2) as f64) / (m as f64)).sin()
}

/// Unit-edge regular tetrahedron.
fn unit_tetrahedron() -> Vec<Point<f64>> {
    let s = 8f64.sqrt();
    [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ]
    .iter()
    .map(|c| Point(vec![c[0] / s, c[1] / s, c[2] / s]))
    .collect()
}

/// The two points on the common perpendicular of two opposite tetrahedron
/// edges that sit at unit distance from both endpoints of the far edge.
/// Their separation is sqrt(3) - sqrt(2)/2, just over 1.
fn tetrahedron_axis_points() -> (Point<f64>, Point<f64>) {
    let t = unit_tetrahedron();
    let m12 = t[0].midpoint(&t[1]);
    let m34 = t[2].midpoint(&t[3]);
    let c = 1.5f64.sqrt();
    let p34 = m12.add(&m34.sub(&m12).scale(&c));
    let p12 = m34.add(&m12.sub(&m34).scale(&c));
    (p12, p34)
}

/// Distance between the two axis points; equals sqrt(3) - sqrt(2)/2.
pub fn ball_tetrahedron_axis_length() -> f64 {
    let (p12, p34) = tetrahedron_axis_points();
    fnorm(&p12.sub(&p34))
}

/// Unit-edge regular tetrahedron plus a centered unit segment along the
/// common perpendicular of two opposite edges; 6 points, diameter graph a
/// 4-clique plus a disjoint edge.
pub fn ball_tetrahedron_segment() -> PointConfiguration<f64> {
    let t = unit_tetrahedron();
    let (p12, p34) = tetrahedron_axis_points();
    let c = p12.midpoint(&p34);
    let u = funit(&p12.sub(&p34));
    let s1 = c.sub(&u.scale(&0.5));
    let s2 = c.add(&u.scale(&0.5));
    let mut pts = t;
    pts.push(s1);
    pts.push(s2);
    PointConfiguration::new(3, pts).expect("fixed coordinates share a dimension")
}

/// Tetrahedron-plus-segment variants realizing the remaining 4-clique
/// catalog graphs. The segment endpoints start on the axis and are moved on
/// distance-preserving circles (or placed by a deterministic max-margin scan
/// over such a circle), so each intended unit distance is kept exactly while
/// every unintended one drops clearly below the diameter.
pub fn ball_tetrahedron_variant(member: CatalogMember) -> Result<PointConfiguration<f64>> {
    let t = unit_tetrahedron();
    let (p12, p34) = tetrahedron_axis_points();
    let (s1, s2) = match member {
        CatalogMember::M2a => {
            return Ok(ball_tetrahedron_segment());
        }
        CatalogMember::M2b => {
            let s1 = rotate_towards(&p34, &t[0], &t[1], 0.99);
            let s2 = s1.add(&funit(&p12.sub(&s1)));
            (s1, s2)
        }
        CatalogMember::M2c => {
            let s2 = p34.add(&funit(&p12.sub(&p34)));
            (p34.clone(), s2)
        }
        CatalogMember::M2d => {
            let s1 = rotate_towards(&p34, &t[0], &t[1], 0.99);
            let s2 = max_margin_circle_point(&t[2], &s1, &[&t[0], &t[1], &t[3]])?;
            (s1, s2)
        }
        CatalogMember::M2e => {
            let s2 = max_margin_circle_point(&t[2], &p34, &[&t[0], &t[1], &t[3]])?;
            (p34.clone(), s2)
        }
        _ => {
            return Err(Error::InvalidSpec(format!(
                "no tetrahedron variant for catalog member {}",
                member.name()
            )));
        }
    };
    let mut pts = t;
    pts.push(s1);
    pts.push(s2);
    PointConfiguration::new(3, pts)
}

/// Pentagon-plus-apex with one or two apex spokes dropped: the named rim
/// vertices are pulled toward the apex by 1% of the apex distance, moving on
/// the circle that keeps both of their rim diameters, so only the spoke
/// leaves the diameter graph.
pub fn pentagon_apex_perturbed(spokes_removed: usize) -> Result<PointConfiguration<f64>> {
    if spokes_removed < 1 || spokes_removed > 2 {
        return Err(Error::InvalidSpec(format!(
            "can drop one or two spokes, got {}",
            spokes_removed
        )));
    }
    let base = odd_gon_with_apex(3)?;
    let rim: Vec<Point<f64>> = base.points()[..5].to_vec();
    let apex = base.points()[5].clone();

    // Rim vertex 0 keeps its distances to rim 2 and rim 3, its two partners
    // on the long-diagonal cycle.
    let p = circle_move(&rim[0], &rim[2], &rim[3], &apex, 0.99);
    let mut pts = vec![
        p.clone(),
        rim[1].clone(),
        rim[2].clone(),
        rim[3].clone(),
        rim[4].clone(),
        apex.clone(),
    ];
    if spokes_removed == 2 {
        // Rim vertex 2 is adjacent to vertex 0 on that cycle; its partners
        // are the moved point and rim 4.
        let q = circle_move(&rim[2], &p, &rim[4], &apex, 0.99);
        pts[2] = q;
    }
    PointConfiguration::new(3, pts)
}

/// The rigid 7-point planar configuration with 11 unit distances and
/// unit-distance independence number 2: two unit rhombus pairs sharing a
/// vertex, rotated so the far tips land at unit distance.
pub fn moser_spindle() -> PointConfiguration<f64> {
    let a = Point(vec![0.0, 0.0]);
    let b = Point(vec![1.0, 0.0]);
    let c = Point(vec![0.5, 3f64.sqrt() / 2.0]);
    let d = b.add(&c);
    let theta = 2.0 * (0.5 / 3f64.sqrt()).asin();
    let (sin, cos) = theta.sin_cos();
    let rot = |p: &Point<f64>| {
        Point(vec![
            cos * p.0[0] - sin * p.0[1],
            sin * p.0[0] + cos * p.0[1],
        ])
    };
    let pts = vec![
        a.clone(),
        b.clone(),
        c.clone(),
        d.clone(),
        rot(&b),
        rot(&c),
        rot(&d),
    ];
    PointConfiguration::new(2, pts).expect("fixed coordinates share a dimension")
}

/// One verified realization per catalog member, in catalog order.
pub fn catalog_realizations() -> Vec<(CatalogMember, PointConfiguration<f64>)> {
    let mut out = Vec::with_capacity(8);
    out.push((
        CatalogMember::M1a,
        odd_gon_with_apex(3).expect("fixed construction parameters"),
    ));
    out.push((
        CatalogMember::M1b,
        pentagon_apex_perturbed(1).expect("fixed construction parameters"),
    ));
    out.push((
        CatalogMember::M1c,
        pentagon_apex_perturbed(2).expect("fixed construction parameters"),
    ));
    for member in [
        CatalogMember::M2a,
        CatalogMember::M2b,
        CatalogMember::M2c,
        CatalogMember::M2d,
        CatalogMember::M2e,
    ] {
        out.push((
            member,
            ball_tetrahedron_variant(member).expect("fixed construction parameters"),
        ));
    }
    out
}

// Float vector helpers for the three-dimensional recipes.

fn fnorm(p: &Point<f64>) -> f64 {
    p.dot(p).sqrt()
}

fn funit(p: &Point<f64>) -> Point<f64> {
    p.scale(&(1.0 / fnorm(p)))
}

fn cross3(a: &Point<f64>, b: &Point<f64>) -> Point<f64> {
    Point(vec![
        a.0[1] * b.0[2] - a.0[2] * b.0[1],
        a.0[2] * b.0[0] - a.0[0] * b.0[2],
        a.0[0] * b.0[1] - a.0[1] * b.0[0],
    ])
}

/// Rotates p about `center` in the plane spanned toward `target`, keeping
/// |p - center|, until the distance to `target` is factor times its original
/// value. factor < 1 and target off the sphere's far side keep this
/// monotone, so bisection on the angle converges.
fn rotate_towards(
    p: &Point<f64>,
    center: &Point<f64>,
    target: &Point<f64>,
    factor: f64,
) -> Point<f64> {
    let a = p.sub(center);
    let r = fnorm(&a);
    let e1 = a.scale(&(1.0 / r));
    let b = target.sub(center);
    let b_perp = b.sub(&e1.scale(&b.dot(&e1)));
    let e2 = funit(&b_perp);
    let goal = factor * fnorm(&p.sub(target));
    let place = |th: f64| center.add(&e1.scale(&(r * th.cos())).add(&e2.scale(&(r * th.sin()))));
    let (mut lo, mut hi) = (0.0f64, PI / 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if fnorm(&place(mid).sub(target)) > goal {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    place(0.5 * (lo + hi))
}

/// Moves x along the circle of points equidistant from a and b (the circle
/// through x with axis a-b), toward `target`, until the distance to target
/// is shrink times its original value.
fn circle_move(
    x: &Point<f64>,
    a: &Point<f64>,
    b: &Point<f64>,
    target: &Point<f64>,
    shrink: f64,
) -> Point<f64> {
    let u = funit(&b.sub(a));
    let foot = a.add(&u.scale(&x.sub(a).dot(&u)));
    let rad = fnorm(&x.sub(&foot));
    let e1 = x.sub(&foot).scale(&(1.0 / rad));
    let mut e2 = cross3(&u, &e1);
    if e2.dot(&target.sub(x)) < 0.0 {
        e2 = e2.scale(&-1.0);
    }
    let goal = shrink * fnorm(&x.sub(target));
    let place = |th: f64| {
        foot.add(
            &e1.scale(&(rad * th.cos()))
                .add(&e2.scale(&(rad * th.sin()))),
        )
    };
    let (mut lo, mut hi) = (0.0f64, PI / 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if fnorm(&place(mid).sub(target)) > goal {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    place(0.5 * (lo + hi))
}

const CIRCLE_SCAN_SAMPLES: usize = 4096;

/// Deterministic scan of the circle at unit distance from both `c1` and
/// `c2`, returning the sample farthest below unit distance from every point
/// in `clear`. Errors if no sample has positive clearance.
fn max_margin_circle_point(
    c1: &Point<f64>,
    c2: &Point<f64>,
    clear: &[&Point<f64>],
) -> Result<Point<f64>> {
    let d = c2.sub(c1);
    let dist = fnorm(&d);
    let dn = d.scale(&(1.0 / dist));
    // Unit spheres around both centers intersect in a circle at offset x
    // along the axis, radius h.
    let x = dist / 2.0;
    let h2 = 1.0 - x * x;
    if h2 <= 0.0 {
        return Err(Error::DegenerateConfiguration(
            "unit spheres do not meet in a circle".into(),
        ));
    }
    let h = h2.sqrt();
    let center = c1.add(&dn.scale(&x));
    let tmp = if dn.0[0].abs() < 0.9 {
        Point(vec![1.0, 0.0, 0.0])
    } else {
        Point(vec![0.0, 1.0, 0.0])
    };
    let e1 = funit(&cross3(&dn, &tmp));
    let e2 = cross3(&dn, &e1);

    let mut best: Option<(f64, Point<f64>)> = None;
    for i in 0..CIRCLE_SCAN_SAMPLES {
        let th = 2.0 * PI * (i as f64) / (CIRCLE_SCAN_SAMPLES as f64);
        let p = center.add(&e1.scale(&(h * th.cos())).add(&e2.scale(&(h * th.sin()))));
        let worst = clear
            .iter()
            .map(|q| fnorm(&p.sub(q)))
            .fold(f64::NEG_INFINITY, f64::max);
        let margin = 1.0 - worst;
        if margin > 0.0 && best.as_ref().map_or(true, |(m, _)| margin > *m) {
            best = Some((margin, p));
        }
    }
    best.map(|(_, p)| p)
        .ok_or_else(|| Error::DegenerateConfiguration("no clearance anywhere on the circle".into()))
}

/// What a shipped construction certifies: the verifier to run, its k, the
/// norm (None for antipodality, which is norm-free), the point count, and
/// optionally the diameter graph up to isomorphism.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub property: &'static str,
    pub k: usize,
    pub norm: Option<&'static str>,
    pub expected_count: usize,
    pub expected_graph: Option<&'static str>,
}

impl Expectation {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "norm": self.norm,
            "expected_count": self.expected_count,
            "expected_graph": self.expected_graph,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ShippedConstruction {
    pub name: &'static str,
    pub config: AnyConfig,
    pub expectation: Expectation,
}

fn entry(
    name: &'static str,
    config: AnyConfig,
    property: &'static str,
    k: usize,
    norm: Option<&'static str>,
    expected_graph: Option<&'static str>,
) -> ShippedConstruction {
    let expected_count = config.len();
    ShippedConstruction {
        name,
        config,
        expectation: Expectation {
            property,
            k,
            norm,
            expected_count,
            expected_graph,
        },
    }
}

/// The fixed showcase table; every row's configuration passes its advertised
/// verifier with its advertised parameters.
pub fn shipped_constructions() -> Vec<ShippedConstruction> {
    let ok = "fixed construction parameters";
    let hexagon = sided_polygon(&[2; 6]).expect(ok);
    let square_sides = sided_polygon(&[3, 2, 3, 2]).expect(ok);
    let mut rows = vec![
        entry(
            "cube-2-2",
            AnyConfig::Exact(cube_config(2, 2).expect(ok)),
            "k-diametral",
            2,
            Some("linf"),
            None,
        ),
        entry(
            "cube-3-3",
            AnyConfig::Exact(cube_config(3, 3).expect(ok)),
            "k-diametral",
            3,
            Some("linf"),
            None,
        ),
        entry(
            "cube-2-4",
            AnyConfig::Exact(cube_config(2, 4).expect(ok)),
            "k-antipodal",
            4,
            None,
            None,
        ),
        entry(
            "cube-3-2-unit",
            AnyConfig::Exact(cube_config(3, 2).expect(ok)),
            "k-equidistant",
            2,
            Some("linf"),
            None,
        ),
        entry(
            "triangle-doubled",
            AnyConfig::Float(multiplicity_lift(&regular_polygon(3).expect(ok), 2).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            None,
        ),
        entry(
            "tetrahedron-doubled",
            AnyConfig::Float(
                multiplicity_lift(
                    &PointConfiguration::new(3, unit_tetrahedron()).expect(ok),
                    2,
                )
                .expect(ok),
            ),
            "k-diametral",
            3,
            Some("euclidean"),
            None,
        ),
        entry(
            "simplex-double-3",
            AnyConfig::Exact(simplex_double(3).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            None,
        ),
        entry(
            "simplex-double-5",
            AnyConfig::Exact(simplex_double(5).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            None,
        ),
        entry(
            "pentagon",
            AnyConfig::Float(regular_polygon(5).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            Some("cycle-5"),
        ),
        entry(
            "square",
            AnyConfig::Exact(sided_polygon(&[2, 2, 2, 2]).expect(ok)),
            "k-antipodal",
            2,
            None,
            None,
        ),
        entry(
            "hexagon",
            AnyConfig::Exact(hexagon.clone()),
            "k-antipodal",
            3,
            None,
            None,
        ),
        entry(
            "square-boundary-8",
            AnyConfig::Exact(sided_polygon(&[3, 3, 3, 3]).expect(ok)),
            "k-antipodal",
            4,
            None,
            None,
        ),
        entry(
            "decagon",
            AnyConfig::Exact(sided_polygon(&[2; 10]).expect(ok)),
            "k-antipodal",
            5,
            None,
            None,
        ),
        entry(
            "hexagon-prism",
            AnyConfig::Exact(prism_lift(&hexagon, 1).expect(ok)),
            "k-antipodal",
            3,
            None,
            None,
        ),
        entry(
            "square-sides-6",
            AnyConfig::Exact(square_sides.clone()),
            "k-diametral",
            3,
            Some("linf"),
            None,
        ),
        entry(
            "square-sides-6-prism",
            AnyConfig::Exact(prism_lift(&square_sides, 1).expect(ok)),
            "k-diametral",
            3,
            Some("linf"),
            None,
        ),
        entry(
            "odd-gon-apex-3",
            AnyConfig::Float(odd_gon_with_apex(3).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            Some("1-a"),
        ),
        entry(
            "odd-gon-apex-4",
            AnyConfig::Float(odd_gon_with_apex(4).expect(ok)),
            "k-diametral",
            4,
            Some("euclidean"),
            Some("wheel-7"),
        ),
        entry(
            "ball-tetra-segment",
            AnyConfig::Float(ball_tetrahedron_segment()),
            "k-diametral",
            3,
            Some("euclidean"),
            Some("2-a"),
        ),
        entry(
            "pentagon-apex-drop-1",
            AnyConfig::Float(pentagon_apex_perturbed(1).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            Some("1-b"),
        ),
        entry(
            "pentagon-apex-drop-2",
            AnyConfig::Float(pentagon_apex_perturbed(2).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            Some("1-c"),
        ),
        entry(
            "moser-spindle",
            AnyConfig::Float(moser_spindle()),
            "k-equidistant",
            3,
            Some("euclidean"),
            None,
        ),
    ];
    for member in [
        CatalogMember::M2b,
        CatalogMember::M2c,
        CatalogMember::M2d,
        CatalogMember::M2e,
    ] {
        let name: &'static str = match member {
            CatalogMember::M2b => "ball-tetra-b",
            CatalogMember::M2c => "ball-tetra-c",
            CatalogMember::M2d => "ball-tetra-d",
            CatalogMember::M2e => "ball-tetra-e",
            _ => unreachable!(),
        };
        rows.push(entry(
            name,
            AnyConfig::Float(ball_tetrahedron_variant(member).expect(ok)),
            "k-diametral",
            3,
            Some("euclidean"),
            Some(member.name()),
        ));
    }
    rows
}

/// Resolves an expectation's graph name: a catalog member, "cycle-N", or
/// "wheel-N" (rim length N).
pub fn expected_graph_instance(name: &str) -> Result<LabeledGraph> {
    if let Some(member) = CatalogMember::from_name(name) {
        return Ok(member.graph());
    }
    if let Some(m) = name
        .strip_prefix("cycle-")
        .and_then(|s| s.parse::<usize>().ok())
    {
        if m < 3 {
            return Err(Error::InvalidSpec(format!("cycle length {}", m)));
        }
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|i| (i.min((i + 1) % m), i.max((i + 1) % m)))
            .collect();
        return LabeledGraph::new(m, edges, crate::graph::GraphKind::Abstract, None);
    }
    if let Some(m) = name
        .strip_prefix("wheel-")
        .and_then(|s| s.parse::<usize>().ok())
    {
        return crate::catalog::wheel_graph(m);
    }
    Err(Error::InvalidSpec(format!("unknown graph name {}", name)))
}
