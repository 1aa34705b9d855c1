//! Deterministic SVG rendering of 2D and 3D configurations: points as
//! circles, graph edges as line segments, hull outline dashed. 3D drops to
//! the plane through a fixed cabinet projection, so identical inputs always
//! produce identical bytes.

use diametral::graph::LabeledGraph;
use diametral::point::AnyConfig;

const SIDE: f64 = 480.0;
const MARGIN: f64 = 40.0;
/// Depth foreshortening of the cabinet projection: half length, 45 degrees.
const DEPTH: f64 = std::f64::consts::FRAC_1_SQRT_2 / 2.0;

fn projected(cfg: &AnyConfig) -> Result<Vec<(f64, f64)>, String> {
    let rows: Vec<Vec<f64>> = match cfg {
        AnyConfig::Exact(c) => c
            .points()
            .iter()
            .map(|p| p.0.iter().map(diametral::Scalar::to_f64).collect())
            .collect(),
        AnyConfig::Float(c) => c.points().iter().map(|p| p.0.clone()).collect(),
    };
    match cfg.dim() {
        2 => Ok(rows.iter().map(|p| (p[0], -p[1])).collect()),
        3 => Ok(rows
            .iter()
            .map(|p| (p[0] + DEPTH * p[1], -(p[2] + DEPTH * p[1])))
            .collect()),
        d => Err(format!("plotting supports dimension 2 or 3, got {}", d)),
    }
}

/// Map projected coordinates into the fixed viewport, preserving aspect.
fn viewport(pts: &[(f64, f64)]) -> impl Fn((f64, f64)) -> (f64, f64) {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    if pts.is_empty() {
        (xmin, xmax, ymin, ymax) = (0.0, 1.0, 0.0, 1.0);
    }
    let span = (xmax - xmin).max(ymax - ymin).max(1e-12);
    let scale = (SIDE - 2.0 * MARGIN) / span;
    let xmid = (xmin + xmax) / 2.0;
    let ymid = (ymin + ymax) / 2.0;
    move |(x, y)| {
        (
            SIDE / 2.0 + (x - xmid) * scale,
            SIDE / 2.0 + (y - ymid) * scale,
        )
    }
}

/// Indices of the convex hull of the projected points, counterclockwise.
fn planar_hull(pts: &[(f64, f64)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .partial_cmp(&pts[b])
            .expect("finite projected coordinates")
    });
    order.dedup_by(|&mut a, &mut b| pts[a] == pts[b]);
    if order.len() < 3 {
        return Vec::new();
    }
    let cross = |o: usize, a: usize, b: usize| {
        (pts[a].0 - pts[o].0) * (pts[b].1 - pts[o].1)
            - (pts[a].1 - pts[o].1) * (pts[b].0 - pts[o].0)
    };
    let mut hull: Vec<usize> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let it: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in it {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], i) <= 0.0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

fn fmt(v: f64) -> String {
    format!("{:.3}", v)
}

/// Renders the configuration, with the edges of `graph` when given. The
/// graph must label the same point list.
pub fn emit_svg(cfg: &AnyConfig, graph: Option<&LabeledGraph>) -> Result<String, String> {
    if let Some(g) = graph {
        if g.n != cfg.len() {
            return Err(format!(
                "graph has {} vertices but the configuration has {} points",
                g.n,
                cfg.len()
            ));
        }
    }
    let raw = projected(cfg)?;
    let place = viewport(&raw);
    let pts: Vec<(f64, f64)> = raw.iter().map(|&p| place(p)).collect();

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {side} {side}\" width=\"{side}\" height=\"{side}\">\n",
        side = SIDE as u32
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    let hull = planar_hull(&raw);
    if !hull.is_empty() {
        out.push_str("<path d=\"");
        for (i, &v) in hull.iter().enumerate() {
            out.push_str(if i == 0 { "M" } else { "L" });
            out.push_str(&fmt(pts[v].0));
            out.push(' ');
            out.push_str(&fmt(pts[v].1));
        }
        out.push_str("Z\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n");
    }

    if let Some(g) = graph {
        for &(a, b) in &g.edges {
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
                fmt(pts[a].0),
                fmt(pts[a].1),
                fmt(pts[b].0),
                fmt(pts[b].1)
            ));
        }
    }

    for &(x, y) in &pts {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#c0392b\" stroke=\"#222222\"/>\n",
            fmt(x),
            fmt(y)
        ));
    }

    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use diametral::catalog::CatalogMember;
    use diametral::construct;
    use diametral::graph::{build_graph, GraphKind};
    use diametral::norm::Norm;
    use diametral::point::PointConfiguration;
    use diametral::DEFAULT_REL_TOL;

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn pentagon_with_diameter_graph_has_five_circles_and_five_segments() {
        let cfg = construct::regular_polygon(5).unwrap();
        let g = build_graph(&cfg, &Norm::Euclidean, GraphKind::Diameter, DEFAULT_REL_TOL).unwrap();
        let svg = emit_svg(&AnyConfig::Float(cfg), Some(&g)).unwrap();
        assert_eq!(count(&svg, "<circle"), 5);
        assert_eq!(count(&svg, "<line"), 5);
        assert_eq!(count(&svg, "<path"), 1);
    }

    #[test]
    fn six_point_catalog_realization_has_six_circles_and_seven_segments() {
        let (_, cfg) = construct::catalog_realizations()
            .into_iter()
            .find(|(m, _)| *m == CatalogMember::M2a)
            .expect("2-a ships");
        let g = build_graph(&cfg, &Norm::Euclidean, GraphKind::Diameter, DEFAULT_REL_TOL).unwrap();
        let svg = emit_svg(&AnyConfig::Float(cfg), Some(&g)).unwrap();
        assert_eq!(count(&svg, "<circle"), 6);
        assert_eq!(count(&svg, "<line"), 7);
    }

    #[test]
    fn no_graph_means_points_only() {
        let cfg = construct::regular_polygon(5).unwrap();
        let svg = emit_svg(&AnyConfig::Float(cfg), None).unwrap();
        assert_eq!(count(&svg, "<circle"), 5);
        assert_eq!(count(&svg, "<line"), 0);
    }

    #[test]
    fn output_is_deterministic() {
        let cfg = construct::cube_config(3, 2).unwrap();
        let a = emit_svg(&AnyConfig::Exact(cfg.clone()), None).unwrap();
        let b = emit_svg(&AnyConfig::Exact(cfg), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn high_dimension_is_refused() {
        let cfg = construct::cube_config(4, 2).unwrap();
        let err = emit_svg(&AnyConfig::Exact(cfg), None).unwrap_err();
        assert!(err.contains("dimension 2 or 3"), "{}", err);
    }

    #[test]
    fn degenerate_layouts_still_render() {
        let cfg = PointConfiguration::from_ints(2, &[&[1, 1]]);
        let svg = emit_svg(&AnyConfig::Exact(cfg), None).unwrap();
        assert_eq!(count(&svg, "<circle"), 1);
        assert_eq!(count(&svg, "<path"), 0);
    }
}
