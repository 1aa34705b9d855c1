//! Property verifiers producing certificate reports.
//!
//! Each checker answers a yes/no question about a configuration and backs
//! the answer up: a `false` verdict for the quantifier properties comes with
//! a size-k index set that is pairwise non-adjacent in the relevant graph,
//! a `true` verdict for packing/tiling comes with the exact volume
//! accounting, and every report records whether it was computed exactly or
//! numerically.

use crate::antipodal::antipodal_edges;
use crate::error::{Error, Result};
use crate::graph::{build_graph, find_independent_set, GraphKind, LabeledGraph};
use crate::linalg;
use crate::lp::{Outcome, Program, Rel, VarDomain};
use crate::norm::Norm;
use crate::point::{Point, PointConfiguration};
use crate::polytope::{convex_hull, polytope_volume, Polytope};
use crate::scalar::{format_rational, Scalar, ScalarValue};
use crate::Rational;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    None,
    /// A violating k-tuple: indices pairwise non-adjacent in the graph the
    /// property quantifies over.
    Indices(Vec<usize>),
    /// A certifying edge summary.
    Edges(Vec<(usize, usize)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numerical,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numerical => "numerical",
        }
    }

    fn for_scalar<S: Scalar>() -> Mode {
        if S::EXACT {
            Mode::Exact
        } else {
            Mode::Numerical
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub property: String,
    pub k: usize,
    pub verdict: bool,
    pub witness: Witness,
    pub diameter_key: Option<ScalarValue>,
    pub mode: Mode,
    pub flags: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = match &self.witness {
            Witness::None => serde_json::Value::Null,
            Witness::Indices(ix) => serde_json::json!(ix),
            Witness::Edges(es) => {
                serde_json::json!(es.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>())
            }
        };
        serde_json::json!({
            "property": self.property,
            "k": self.k,
            "verdict": self.verdict,
            "witness": witness,
            "diameter_key": match &self.diameter_key {
                Some(k) => k.to_json(),
                None => serde_json::Value::Null,
            },
            "mode": self.mode.name(),
            "flags": self.flags,
        })
    }
}

fn require_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidInstance(format!(
            "property parameter k must be at least 2, got {}",
            k
        )));
    }
    Ok(())
}

/// Verdict for "the graph has no independent set of size k", with the
/// violating set as witness when one exists.
fn independence_verdict(g: &LabeledGraph, k: usize) -> (bool, Witness) {
    let mis = find_independent_set(g);
    if mis.len() >= k {
        (false, Witness::Indices(mis[..k].to_vec()))
    } else {
        (true, Witness::None)
    }
}

fn common_flags<S: Scalar>(cfg: &PointConfiguration<S>, k: usize, rel_tol: f64) -> Vec<String> {
    let mut flags = Vec::new();
    if cfg.len() < k {
        flags.push("vacuous".to_string());
    }
    if !S::EXACT {
        flags.push(format!("rel-tol={}", rel_tol));
    }
    flags
}

/// Every k points of `cfg` contain a pair realizing the diameter.
pub fn is_k_diametral<S: Scalar>(
    cfg: &PointConfiguration<S>,
    norm: &Norm<S>,
    k: usize,
    rel_tol: f64,
) -> Result<VerificationReport> {
    require_k(k)?;
    let g = build_graph(cfg, norm, GraphKind::Diameter, rel_tol)?;
    let (verdict, witness) = independence_verdict(&g, k);
    let mut flags = common_flags(cfg, k, rel_tol);
    flags.push(format!("norm={}", norm.name()));
    Ok(VerificationReport {
        property: "k-diametral".to_string(),
        k,
        verdict,
        witness,
        diameter_key: g.diameter_key,
        mode: Mode::for_scalar::<S>(),
        flags,
    })
}

/// Every k points of `cfg` contain an antipodal pair. Decided exactly; a
/// float configuration is promoted coordinate-for-coordinate to rationals
/// first and the report says so.
pub fn is_k_antipodal<S: Scalar>(
    cfg: &PointConfiguration<S>,
    k: usize,
) -> Result<VerificationReport> {
    require_k(k)?;
    let exact = cfg.to_exact();
    let analysis = antipodal_edges(&exact)?;
    let g = LabeledGraph::new(cfg.len(), analysis.edges, GraphKind::Antipodal, None)?;
    let (verdict, witness) = independence_verdict(&g, k);
    let mut flags = Vec::new();
    if cfg.len() < k {
        flags.push("vacuous".to_string());
    }
    if !S::EXACT {
        flags.push("rationalized-input".to_string());
    }
    flags.extend(analysis.flags);
    Ok(VerificationReport {
        property: "k-antipodal".to_string(),
        k,
        verdict,
        witness,
        diameter_key: None,
        mode: Mode::for_scalar::<S>(),
        flags,
    })
}

/// Every k points of `cfg` contain a pair at distance exactly one.
pub fn is_k_equidistant<S: Scalar>(
    cfg: &PointConfiguration<S>,
    norm: &Norm<S>,
    k: usize,
    rel_tol: f64,
) -> Result<VerificationReport> {
    require_k(k)?;
    let g = build_graph(cfg, norm, GraphKind::UnitDistance, rel_tol)?;
    let (verdict, witness) = independence_verdict(&g, k);
    let mut flags = common_flags(cfg, k, rel_tol);
    flags.push(format!("norm={}", norm.name()));
    Ok(VerificationReport {
        property: "k-equidistant".to_string(),
        k,
        verdict,
        witness,
        diameter_key: None,
        mode: Mode::for_scalar::<S>(),
        flags,
    })
}

/// Cross-validates two faces of the same fact: `cfg` is k-antipodal
/// exactly when it is k-diametral under the gauge of its own difference
/// body, with matching edge sets and gauge diameter exactly one.
///
/// A `false` verdict is a counterexample certificate and must never happen;
/// the two computations share no geometry code beyond scalar arithmetic.
pub fn check_antipodal_gauge_equivalence<S: Scalar>(
    cfg: &PointConfiguration<S>,
    k: usize,
) -> Result<VerificationReport> {
    require_k(k)?;
    let exact = cfg.to_exact();
    if exact.all_points_equal() {
        return Err(Error::DegenerateConfiguration(
            "equivalence check needs two distinct points".into(),
        ));
    }

    // The separating-direction route on one side, the difference-body gauge
    // on the other; running the cross-checking edge builder here would fold
    // the second route into the first and test nothing.
    let lp_edges = crate::antipodal::antipodal_edges_lp_only(&exact)?;
    let ga = LabeledGraph::new(exact.len(), lp_edges, GraphKind::Antipodal, None)?;
    let (verdict_a, _) = independence_verdict(&ga, k);

    let db = crate::polytope::difference_body(&exact)?;
    let gauge = Norm::gauge(db)?;
    let gd = build_graph(&exact, &gauge, GraphKind::Diameter, 0.0)?;
    let (verdict_d, witness_d) = independence_verdict(&gd, k);

    let mut flags = Vec::new();
    if cfg.len() < k {
        flags.push("vacuous".to_string());
    }
    if !S::EXACT {
        flags.push("rationalized-input".to_string());
    }
    flags.push(format!("k-antipodal={}", verdict_a));
    flags.push(format!("gauge-k-diametral={}", verdict_d));

    let diameter_is_one = gd.diameter_key == Some(ScalarValue::Exact(Rational::one()));
    if !diameter_is_one {
        flags.push("gauge-diameter-not-one".to_string());
    }
    let edges_equal = ga.edges == gd.edges;
    if !edges_equal {
        flags.push("edge-set-mismatch".to_string());
    }
    if verdict_a != verdict_d {
        flags.push("verdict-mismatch".to_string());
    }

    let verdict = verdict_a == verdict_d && edges_equal && diameter_is_one;
    let witness = if verdict {
        Witness::Edges(ga.edges)
    } else if !edges_equal {
        // Counterexample certificate: the symmetric difference.
        let in_a: Vec<_> = ga
            .edges
            .iter()
            .filter(|e| !gd.edges.contains(e))
            .copied()
            .collect();
        let in_d: Vec<_> = gd
            .edges
            .iter()
            .filter(|e| !ga.edges.contains(e))
            .copied()
            .collect();
        Witness::Edges(in_a.into_iter().chain(in_d).collect())
    } else {
        witness_d
    };

    Ok(VerificationReport {
        property: "antipodal-gauge-equivalence".to_string(),
        k,
        verdict,
        witness,
        diameter_key: gd.diameter_key,
        mode: Mode::for_scalar::<S>(),
        flags,
    })
}

const MAX_PACKING_SUBSETS: usize = 100_000;

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u128::from(u64::MAX) {
            return usize::MAX;
        }
    }
    acc.min(usize::MAX as u128) as usize
}

fn body_facets(
    body: &Polytope<Rational>,
) -> Result<(Polytope<Rational>, Vec<crate::polytope::Facet<Rational>>)> {
    match &body.facets {
        Some(f) => Ok((body.clone(), f.clone())),
        None => {
            let rebuilt = convex_hull(&body.vertices)?;
            let f = rebuilt.facets.clone().expect("hull always carries facets");
            Ok((rebuilt, f))
        }
    }
}

/// The half-homothets of `body` at the given centers are checked to form a
/// (k-1)-fold packing of `body`: no k of them share an interior point.
/// Also accounts the exact volume ratio of pieces to body.
pub fn verify_k_fold_packing(
    body: &Polytope<Rational>,
    centers: &[Point<Rational>],
    k: usize,
) -> Result<VerificationReport> {
    require_k(k)?;
    if centers.is_empty() {
        return Err(Error::InvalidInstance(
            "packing needs at least one center".into(),
        ));
    }
    if body.affine_dim < body.dim {
        return Err(Error::InvalidInstance(
            "packing verification needs a full-dimensional body".into(),
        ));
    }
    let (body, facets) = body_facets(body)?;
    for c in centers {
        if c.dim() != body.dim {
            return Err(Error::DimensionMismatch(
                "packing center dimension differs from body".into(),
            ));
        }
    }

    let pieces: Vec<Polytope<Rational>> = centers.iter().map(|c| body.half_homothet(c)).collect();
    for (l, piece) in pieces.iter().enumerate() {
        for v in &piece.vertices {
            for f in &facets {
                if f.normal.dot(v) > f.offset {
                    return Err(Error::InvalidInstance(format!(
                        "piece {} is not contained in the body",
                        l
                    )));
                }
            }
        }
    }

    let body_vol = polytope_volume(&body)?;
    let piece_vol_sum = pieces
        .iter()
        .map(polytope_volume)
        .try_fold(Rational::zero(), |acc, v| v.map(|v| acc + v))?;
    let ratio = piece_vol_sum / body_vol;
    let ratio_flag = format!("volume-ratio={}", format_rational(&ratio));

    let n = pieces.len();
    if binomial(n, k) > MAX_PACKING_SUBSETS {
        return Err(Error::TooLarge(format!(
            "{} choose {} piece subsets exceed the packing budget",
            n, k
        )));
    }

    let mut verdict = true;
    let mut witness = Witness::None;
    'subsets: for subset in (0..n).combinations(k) {
        if open_common_point(&pieces, &subset)? {
            verdict = false;
            witness = Witness::Indices(subset);
            break 'subsets;
        }
    }

    if verdict && ratio > Rational::from_integer((k as i64 - 1).into()) {
        return Err(Error::Internal(
            "packing verified but piece volume exceeds (k-1) times the body volume".into(),
        ));
    }

    Ok(VerificationReport {
        property: "k-fold-packing".to_string(),
        k,
        verdict,
        witness,
        diameter_key: None,
        mode: Mode::Exact,
        flags: vec![ratio_flag],
    })
}

/// Do the pieces indexed by `subset` share an open interior point?
/// Maximizes the margin t over points y with w.y + t <= o for every facet
/// (w, o) of each selected piece: a positive optimum is an interior point.
fn open_common_point(pieces: &[Polytope<Rational>], subset: &[usize]) -> Result<bool> {
    let dim = pieces[0].dim;
    let mut lp: Program<Rational> = Program::new(dim + 1, VarDomain::Free);
    for &l in subset {
        let facets = pieces[l]
            .facets
            .as_ref()
            .ok_or_else(|| Error::Internal("packing piece lost its facets".into()))?;
        for f in facets {
            let mut row = f.normal.0.clone();
            row.push(Rational::one());
            lp.push(row, Rel::Le, f.offset.clone());
        }
    }
    let mut objective = vec![Rational::zero(); dim + 1];
    objective[dim] = Rational::one();
    match lp.maximize(&objective) {
        Outcome::Optimal { value, .. } => Ok(value > Rational::zero()),
        Outcome::Infeasible => Err(Error::Internal(
            "piece intersection LP cannot be infeasible: t is unconstrained below".into(),
        )),
        Outcome::Unbounded => Err(Error::Internal(
            "piece intersection LP cannot be unbounded: pieces are bounded".into(),
        )),
    }
}

#[derive(Clone, Debug)]
pub struct TilingInstance {
    pub body: Polytope<Rational>,
    pub centers: Vec<Point<Rational>>,
    pub k: usize,
    pub sample_count: usize,
    pub seed: u64,
}

const SAMPLE_DENOM_BITS: u32 = 20;

/// Denominator-cleared facet inequality over sampling lattice coordinates.
struct LatticeForm {
    a: BigInt,
    b: Vec<BigInt>,
}

impl LatticeForm {
    fn eval(&self, u: &[BigInt]) -> BigInt {
        let mut t = self.a.clone();
        for (bc, uc) in self.b.iter().zip(u) {
            if !bc.is_zero() {
                t += bc * uc;
            }
        }
        t
    }
}

/// The half-homothets at the centers are checked to tile `body` with
/// multiplicity k-1: exact volume identity, plus seeded random interior
/// samples that must each lie in the interior of exactly k-1 pieces.
pub fn verify_multiple_tiling(instance: &TilingInstance) -> Result<VerificationReport> {
    let TilingInstance {
        body,
        centers,
        k,
        sample_count,
        seed,
    } = instance;
    let (k, sample_count, seed) = (*k, *sample_count, *seed);
    require_k(k)?;
    if centers.is_empty() {
        return Err(Error::InvalidInstance(
            "tiling needs at least one center".into(),
        ));
    }
    if body.affine_dim < body.dim {
        return Err(Error::InvalidInstance(
            "tiling verification needs a full-dimensional body".into(),
        ));
    }
    if sample_count < 1000 {
        return Err(Error::InvalidInstance(format!(
            "tiling verification needs at least 1000 samples, got {}",
            sample_count
        )));
    }
    let (body, facets) = body_facets(body)?;
    let pieces: Vec<Polytope<Rational>> = centers.iter().map(|c| body.half_homothet(c)).collect();
    for (l, piece) in pieces.iter().enumerate() {
        for v in &piece.vertices {
            for f in &facets {
                if f.normal.dot(v) > f.offset {
                    return Err(Error::InvalidInstance(format!(
                        "piece {} is not contained in the body",
                        l
                    )));
                }
            }
        }
    }

    let mut flags = vec![
        format!("seed={}", seed),
        format!("samples={}", sample_count),
    ];

    let body_vol = polytope_volume(&body)?;
    // The pieces are translates of one half-homothet, so one triangulated
    // volume covers all of them.
    let piece_vol_sum =
        polytope_volume(&pieces[0])? * Rational::from_integer((pieces.len() as i64).into());
    let expected = Rational::from_integer((k as i64 - 1).into()) * body_vol.clone();
    flags.push(format!(
        "volume-ratio={}",
        format_rational(&(piece_vol_sum.clone() / body_vol))
    ));
    if piece_vol_sum != expected {
        flags.push("volume-identity-failed".to_string());
        return Ok(VerificationReport {
            property: "multiple-tiling".to_string(),
            k,
            verdict: false,
            witness: Witness::None,
            diameter_key: None,
            mode: Mode::Exact,
            flags,
        });
    }

    // Bounding box of the body, for rejection sampling on a dyadic grid.
    let dim = body.dim;
    let mut lo = body.vertices[0].0.clone();
    let mut hi = lo.clone();
    for v in &body.vertices {
        for (c, coord) in v.0.iter().enumerate() {
            if *coord < lo[c] {
                lo[c] = coord.clone();
            }
            if *coord > hi[c] {
                hi[c] = coord.clone();
            }
        }
    }

    // A sample is y_c = lo_c + (hi_c - lo_c) u_c / 2^B with integer lattice
    // coordinates u. Each facet test n.y <=> off becomes an integer affine
    // form a + sum b_c u_c <=> 0 after clearing denominators, so the hot
    // loop never normalizes a rational.
    let lattice_form = |normal: &Point<Rational>, offset: &Rational| -> LatticeForm {
        let mut a = normal.dot(&Point(lo.clone())) - offset;
        let scale = Rational::from_integer(BigInt::one() << SAMPLE_DENOM_BITS);
        let b: Vec<Rational> = (0..dim)
            .map(|c| normal.0[c].clone() * (hi[c].clone() - lo[c].clone()) / scale.clone())
            .collect();
        let mut l = a.denom().clone();
        for bc in &b {
            l = l.lcm(bc.denom());
        }
        a *= Rational::from_integer(l.clone());
        debug_assert!(a.is_integer());
        LatticeForm {
            a: a.to_integer(),
            b: b.iter()
                .map(|bc| (bc * Rational::from_integer(l.clone())).to_integer())
                .collect(),
        }
    };
    let body_forms: Vec<LatticeForm> = facets
        .iter()
        .map(|f| lattice_form(&f.normal, &f.offset))
        .collect();
    let piece_forms: Vec<Vec<LatticeForm>> = pieces
        .iter()
        .map(|piece| {
            piece
                .facets
                .as_ref()
                .expect("homothet keeps facets")
                .iter()
                .map(|f| lattice_form(&f.normal, &f.offset))
                .collect()
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    let max_attempts = sample_count.saturating_mul(100);
    let mut u = vec![BigInt::zero(); dim];
    while accepted < sample_count {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::Internal(
                "tiling sampler rejection rate is implausibly high".into(),
            ));
        }
        for uc in u.iter_mut() {
            *uc = BigInt::from(rng.gen_range(0..(1u64 << SAMPLE_DENOM_BITS)));
        }
        if !body_forms.iter().all(|f| f.eval(&u).is_negative()) {
            continue; // outside or on the body boundary
        }
        let mut on_piece_boundary = false;
        let mut coverage = 0usize;
        for forms in &piece_forms {
            let mut inside = true;
            for f in forms {
                let v = f.eval(&u);
                if v.is_zero() {
                    on_piece_boundary = true;
                    break;
                }
                if v.is_positive() {
                    inside = false;
                }
            }
            if on_piece_boundary {
                break;
            }
            if inside {
                coverage += 1;
            }
        }
        if on_piece_boundary {
            continue;
        }
        if coverage != k - 1 {
            flags.push(format!(
                "sample-coverage={} expected={} after {} accepted samples",
                coverage,
                k - 1,
                accepted
            ));
            return Ok(VerificationReport {
                property: "multiple-tiling".to_string(),
                k,
                verdict: false,
                witness: Witness::None,
                diameter_key: None,
                mode: Mode::Exact,
                flags,
            });
        }
        accepted += 1;
    }

    Ok(VerificationReport {
        property: "multiple-tiling".to_string(),
        k,
        verdict: true,
        witness: Witness::None,
        diameter_key: None,
        mode: Mode::Exact,
        flags,
    })
}

/// Is `cfg` the extremal k-diametral configuration: the vertex set of an
/// affine cube with every vertex of multiplicity k-1? Applies only to
/// configurations of exactly (k-1) * 2^dim points that are k-antipodal;
/// anything else gets a not-applicable report rather than an error.
pub fn verify_cube_extremal(
    cfg: &PointConfiguration<Rational>,
    k: usize,
) -> Result<VerificationReport> {
    require_k(k)?;
    let d = cfg.dim();
    let report = |verdict: bool, flags: Vec<String>| VerificationReport {
        property: "cube-extremal".to_string(),
        k,
        verdict,
        witness: Witness::None,
        diameter_key: None,
        mode: Mode::Exact,
        flags,
    };

    if d >= usize::BITS as usize
        || 2usize
            .checked_pow(d as u32)
            .and_then(|c| c.checked_mul(k - 1))
            != Some(cfg.len())
    {
        return Ok(report(
            false,
            vec![format!(
                "not-applicable: {} points, extremal count is (k-1)*2^{}",
                cfg.len(),
                d
            )],
        ));
    }
    let anti = is_k_antipodal(cfg, k)?;
    if !anti.verdict {
        return Ok(report(
            false,
            vec!["not-applicable: configuration is not k-antipodal".to_string()],
        ));
    }

    let distinct = cfg.distinct_points();
    if distinct.len() != 1 << d {
        return Ok(report(
            false,
            vec![format!(
                "distinct point count {} differs from 2^{}",
                distinct.len(),
                d
            )],
        ));
    }
    if let Some((_, mult, idx)) = distinct.iter().find(|(_, m, _)| *m != k - 1) {
        return Ok(report(
            false,
            vec![format!(
                "point at index {} has multiplicity {}, expected {}",
                idx,
                mult,
                k - 1
            )],
        ));
    }

    let points: Vec<Point<Rational>> = distinct.into_iter().map(|(p, _, _)| p).collect();
    if is_affine_cube(&points, d) {
        Ok(report(true, Vec::new()))
    } else {
        Ok(report(
            false,
            vec!["distinct points are not the vertex set of an affine cube".to_string()],
        ))
    }
}

/// Do the 2^d given distinct points form {v0 + sum of S : S subseteq G} for
/// some d linearly independent generators G? Checked by brute force over
/// generator subsets; v0 is the lexicographic minimum.
fn is_affine_cube(points: &[Point<Rational>], d: usize) -> bool {
    let mut sorted: Vec<Point<Rational>> = points.to_vec();
    sorted.sort_by(|a, b| a.lex_cmp(b));
    let v0 = sorted[0].clone();
    let diffs: Vec<Point<Rational>> = sorted[1..].iter().map(|p| p.sub(&v0)).collect();
    for gens in (0..diffs.len()).combinations(d) {
        let rows: Vec<Vec<Rational>> = gens.iter().map(|&g| diffs[g].0.clone()).collect();
        if linalg::rank(&rows) != d {
            continue;
        }
        let mut sums: Vec<Point<Rational>> = vec![v0.clone()];
        for &g in &gens {
            let extend: Vec<Point<Rational>> = sums.iter().map(|s| s.add(&diffs[g])).collect();
            sums.extend(extend);
        }
        sums.sort_by(|a, b| a.lex_cmp(b));
        if sums == sorted {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::convex_hull;
    use crate::{rat, FloatConfig, RatConfig};

    fn cfg(dim: usize, coords: &[&[i64]]) -> RatConfig {
        PointConfiguration::from_ints(dim, coords)
    }

    fn doubled_square() -> RatConfig {
        cfg(
            2,
            &[
                &[0, 0],
                &[1, 0],
                &[0, 1],
                &[1, 1],
                &[0, 0],
                &[1, 0],
                &[0, 1],
                &[1, 1],
            ],
        )
    }

    fn square_body() -> Polytope<Rational> {
        convex_hull(&[
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[0, 1]),
            Point::from_ints(&[1, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn doubled_square_is_3_diametral_linf() {
        let r = is_k_diametral(&doubled_square(), &Norm::Linf, 3, 0.0).unwrap();
        assert!(r.verdict);
        assert_eq!(r.diameter_key, Some(ScalarValue::Exact(rat(1, 1))));
        assert_eq!(r.mode, Mode::Exact);
    }

    #[test]
    fn square_is_not_2_diametral_euclidean() {
        let r = is_k_diametral(
            &cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
            &Norm::Euclidean,
            2,
            0.0,
        )
        .unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness, Witness::Indices(vec![0, 1]));
    }

    #[test]
    fn pentagon_is_3_diametral_euclidean_float() {
        let pts: Vec<crate::point::Point<f64>> = (0..5)
            .map(|i| {
                let t = 2.0 * std::f64::consts::PI * i as f64 / 5.0;
                Point(vec![t.cos(), t.sin()])
            })
            .collect();
        let c = FloatConfig::new(2, pts).unwrap();
        let r = is_k_diametral(&c, &Norm::Euclidean, 3, 1e-9).unwrap();
        assert!(r.verdict);
        assert_eq!(r.mode, Mode::Numerical);
        assert!(r.flags.iter().any(|f| f.starts_with("rel-tol=")));
    }

    #[test]
    fn vacuous_when_fewer_points_than_k() {
        let r = is_k_diametral(&cfg(2, &[&[0, 0], &[1, 0]]), &Norm::Euclidean, 3, 0.0).unwrap();
        assert!(r.verdict);
        assert!(r.flags.iter().any(|f| f == "vacuous"));
    }

    #[test]
    fn zero_diameter_is_an_error() {
        assert!(matches!(
            is_k_diametral(&cfg(2, &[&[1, 1], &[1, 1]]), &Norm::Euclidean, 2, 0.0),
            Err(Error::DegenerateConfiguration(_))
        ));
        assert!(matches!(
            is_k_diametral(&cfg(2, &[&[0, 0], &[1, 1]]), &Norm::Euclidean, 1, 0.0),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn hexagon_is_3_antipodal() {
        let hexagon = cfg(
            2,
            &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
        );
        let r = is_k_antipodal(&hexagon, 3).unwrap();
        assert!(r.verdict);
        let r2 = is_k_antipodal(&hexagon, 2).unwrap();
        assert!(!r2.verdict);
    }

    #[test]
    fn square_plus_centroid_fails_2_antipodal_with_centroid_witness() {
        let c = cfg(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]);
        let r = is_k_antipodal(&c, 2).unwrap();
        assert!(!r.verdict);
        match &r.witness {
            Witness::Indices(ix) => assert!(ix.contains(&4)),
            w => panic!("expected index witness, got {:?}", w),
        }
    }

    #[test]
    fn single_point_is_vacuously_antipodal() {
        let r = is_k_antipodal(&cfg(2, &[&[5, 5]]), 2).unwrap();
        assert!(r.verdict);
        assert!(r.flags.iter().any(|f| f == "vacuous"));
    }

    #[test]
    fn hexagonal_prism_lift_is_3_antipodal() {
        let mut pts: Vec<&[i64]> = Vec::new();
        let base: [[i64; 3]; 12] = [
            [1, 0, 0],
            [1, 1, 0],
            [0, 1, 0],
            [-1, 0, 0],
            [-1, -1, 0],
            [0, -1, 0],
            [1, 0, 1],
            [1, 1, 1],
            [0, 1, 1],
            [-1, 0, 1],
            [-1, -1, 1],
            [0, -1, 1],
        ];
        for row in &base {
            pts.push(row);
        }
        let c = cfg(3, &pts);
        let r = is_k_antipodal(&c, 3).unwrap();
        assert!(r.verdict, "12-point prism should be 3-antipodal");
    }

    #[test]
    fn unit_square_equidistance() {
        let square = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let r = is_k_equidistant(&square, &Norm::Euclidean, 2, 0.0).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness, Witness::Indices(vec![0, 3]));
        let r3 = is_k_equidistant(&square, &Norm::Euclidean, 3, 0.0).unwrap();
        assert!(r3.verdict);
    }

    #[test]
    fn equilateral_triangle_equidistant_float() {
        let c = FloatConfig::new(
            2,
            vec![
                Point(vec![0.0, 0.0]),
                Point(vec![1.0, 0.0]),
                Point(vec![0.5, 3.0_f64.sqrt() / 2.0]),
            ],
        )
        .unwrap();
        let r = is_k_equidistant(&c, &Norm::Euclidean, 2, 1e-9).unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn equivalence_on_triangle_and_square_with_centroid() {
        let triangle = cfg(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let r = check_antipodal_gauge_equivalence(&triangle, 2).unwrap();
        assert!(r.verdict);
        assert_eq!(r.diameter_key, Some(ScalarValue::Exact(rat(1, 1))));
        assert!(r.flags.iter().any(|f| f == "k-antipodal=true"));

        let sq_c = cfg(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]);
        let r = check_antipodal_gauge_equivalence(&sq_c, 2).unwrap();
        assert!(r.verdict);
        assert!(r.flags.iter().any(|f| f == "k-antipodal=false"));
        assert!(r.flags.iter().any(|f| f == "gauge-k-diametral=false"));
    }

    #[test]
    fn equivalence_on_degenerate_configurations() {
        let collinear = cfg(2, &[&[0, 0], &[1, 0], &[2, 0], &[3, 0]]);
        let r = check_antipodal_gauge_equivalence(&collinear, 2).unwrap();
        assert!(r.verdict);

        let with_dups = cfg(2, &[&[0, 0], &[0, 0], &[1, 2]]);
        let r = check_antipodal_gauge_equivalence(&with_dups, 3).unwrap();
        assert!(r.verdict);

        assert!(matches!(
            check_antipodal_gauge_equivalence(&cfg(2, &[&[1, 1], &[1, 1]]), 2),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn corner_half_squares_pack_once() {
        let body = square_body();
        let corners = vec![
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[0, 1]),
            Point::from_ints(&[1, 1]),
        ];
        let r = verify_k_fold_packing(&body, &corners, 2).unwrap();
        assert!(r.verdict);
        assert!(r.flags.iter().any(|f| f == "volume-ratio=1"));
    }

    #[test]
    fn doubled_corner_half_squares_pack_twice() {
        let body = square_body();
        let mut centers = Vec::new();
        for _ in 0..2 {
            centers.extend([
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
            ]);
        }
        let r = verify_k_fold_packing(&body, &centers, 3).unwrap();
        assert!(r.verdict);
        assert!(r.flags.iter().any(|f| f == "volume-ratio=2"));

        // Two copies of the same corner piece do share interior points.
        let r2 = verify_k_fold_packing(&body, &centers, 2).unwrap();
        assert!(!r2.verdict);
    }

    #[test]
    fn overlapping_half_squares_fail_with_witness() {
        let body = square_body();
        let centers = vec![Point::from_ints(&[0, 0]), Point(vec![rat(1, 4), rat(1, 4)])];
        let r = verify_k_fold_packing(&body, &centers, 2).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness, Witness::Indices(vec![0, 1]));
    }

    #[test]
    fn packing_rejects_escaping_piece() {
        let body = square_body();
        let centers = vec![Point::from_ints(&[3, 3])];
        assert!(matches!(
            verify_k_fold_packing(&body, &centers, 2),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn corner_half_squares_tile_once() {
        let inst = TilingInstance {
            body: square_body(),
            centers: vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
            ],
            k: 2,
            sample_count: 1000,
            seed: 7,
        };
        let r = verify_multiple_tiling(&inst).unwrap();
        assert!(r.verdict, "flags: {:?}", r.flags);
        assert!(r.flags.iter().any(|f| f == "seed=7"));
    }

    #[test]
    fn doubled_corners_tile_twice() {
        let mut centers = Vec::new();
        for _ in 0..2 {
            centers.extend([
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
            ]);
        }
        let inst = TilingInstance {
            body: square_body(),
            centers,
            k: 3,
            sample_count: 1000,
            seed: 99,
        };
        let r = verify_multiple_tiling(&inst).unwrap();
        assert!(r.verdict, "flags: {:?}", r.flags);
    }

    #[test]
    fn short_tiling_fails_volume_identity() {
        // Three corner pieces cannot tile: volume 3/4 vs required 1.
        let inst = TilingInstance {
            body: square_body(),
            centers: vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
            ],
            k: 2,
            sample_count: 1000,
            seed: 1,
        };
        let r = verify_multiple_tiling(&inst).unwrap();
        assert!(!r.verdict);
        assert!(r.flags.iter().any(|f| f == "volume-identity-failed"));
    }

    #[test]
    fn tiling_multiplicity_violation_is_caught_by_sampling() {
        // Four pieces whose volumes sum right but that do not tile: three
        // distinct corners plus a duplicate corner piece. Total volume is 1
        // and multiplicity is 2 near one corner, 0 near another.
        let inst = TilingInstance {
            body: square_body(),
            centers: vec![
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[0, 0]),
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
            ],
            k: 2,
            sample_count: 1000,
            seed: 3,
        };
        let r = verify_multiple_tiling(&inst).unwrap();
        assert!(!r.verdict);
        assert!(r.flags.iter().any(|f| f.starts_with("sample-coverage=")));
    }

    #[test]
    fn tiling_preconditions() {
        let inst = TilingInstance {
            body: square_body(),
            centers: vec![Point::from_ints(&[0, 0])],
            k: 2,
            sample_count: 10,
            seed: 0,
        };
        assert!(matches!(
            verify_multiple_tiling(&inst),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn doubled_square_corners_are_cube_extremal() {
        let r = verify_cube_extremal(&doubled_square(), 3).unwrap();
        assert!(r.verdict, "flags: {:?}", r.flags);
    }

    #[test]
    fn sheared_cube_is_still_cube_extremal() {
        // Image of the doubled square under an affine shear.
        let sheared = cfg(
            2,
            &[
                &[0, 0],
                &[2, 1],
                &[1, 3],
                &[3, 4],
                &[0, 0],
                &[2, 1],
                &[1, 3],
                &[3, 4],
            ],
        );
        let r = verify_cube_extremal(&sheared, 3).unwrap();
        assert!(r.verdict, "flags: {:?}", r.flags);
    }

    #[test]
    fn wrong_count_is_not_applicable() {
        let r = verify_cube_extremal(&cfg(2, &[&[0, 0], &[1, 0], &[0, 1]]), 3).unwrap();
        assert!(!r.verdict);
        assert!(r.flags.iter().any(|f| f.starts_with("not-applicable")));
    }

    #[test]
    fn skewed_multiplicities_fail_cube_extremality() {
        // Right count (8 = 2 * 2^2) but one corner tripled and one single:
        // the three copies are pairwise non-antipodal, so this is not even
        // 3-antipodal and the precondition gate reports not-applicable.
        let c = cfg(
            2,
            &[
                &[0, 0],
                &[0, 0],
                &[0, 0],
                &[1, 0],
                &[0, 1],
                &[0, 1],
                &[1, 1],
                &[1, 1],
            ],
        );
        let r = verify_cube_extremal(&c, 3).unwrap();
        assert!(!r.verdict);
        assert!(r.flags.iter().any(|f| f.starts_with("not-applicable")));
    }

    #[test]
    fn monotonicity_in_k() {
        let configs = [
            cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
            cfg(2, &[&[0, 0], &[3, 1], &[1, 4], &[2, 2], &[4, 4]]),
            cfg(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ];
        for c in &configs {
            for k in 2..5usize {
                let d1 = is_k_diametral(c, &Norm::Euclidean, k, 0.0).unwrap().verdict;
                let d2 = is_k_diametral(c, &Norm::Euclidean, k + 1, 0.0)
                    .unwrap()
                    .verdict;
                assert!(!d1 || d2, "diametral monotonicity failed at k={}", k);
                let a1 = is_k_antipodal(c, k).unwrap().verdict;
                let a2 = is_k_antipodal(c, k + 1).unwrap().verdict;
                assert!(!a1 || a2, "antipodal monotonicity failed at k={}", k);
            }
        }
    }

    #[test]
    fn multiplicity_lift_preserves_diametrality() {
        // 2-diametral distinct sets stay k-diametral after an (k-1)-fold lift.
        let base = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(is_k_diametral(&base, &Norm::Linf, 2, 0.0).unwrap().verdict);
        for k in 3..5usize {
            let mut pts = Vec::new();
            for _ in 0..(k - 1) {
                pts.extend(base.points().iter().cloned());
            }
            let lifted = PointConfiguration::new(2, pts).unwrap();
            let r = is_k_diametral(&lifted, &Norm::Linf, k, 0.0).unwrap();
            assert!(r.verdict, "lift to k={} failed", k);
        }
    }

    #[test]
    fn diametral_implies_equidistant_after_rescale() {
        let configs = [
            cfg(2, &[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]),
            cfg(2, &[&[0, 0], &[3, 0], &[1, 1]]),
        ];
        for c in &configs {
            let r = is_k_diametral(c, &Norm::Linf, 3, 0.0).unwrap();
            if !r.verdict {
                continue;
            }
            let Some(ScalarValue::Exact(diam)) = r.diameter_key else {
                panic!("exact diameter expected")
            };
            let scaled = PointConfiguration::new(
                c.dim(),
                c.points()
                    .iter()
                    .map(|p| p.scale(&(Rational::one() / diam.clone())))
                    .collect(),
            )
            .unwrap();
            let e = is_k_equidistant(&scaled, &Norm::Linf, 3, 0.0).unwrap();
            assert!(e.verdict);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = is_k_diametral(&doubled_square(), &Norm::Linf, 3, 0.0).unwrap();
        let j = r.to_json();
        assert_eq!(j["property"], "k-diametral");
        assert_eq!(j["k"], 3);
        assert_eq!(j["verdict"], true);
        assert_eq!(j["witness"], serde_json::Value::Null);
        assert_eq!(j["diameter_key"], "1");
        assert_eq!(j["mode"], "exact");
        assert!(j["flags"]
            .as_array()
            .unwrap()
            .iter()
            .any(|f| f == "norm=linf"));
    }
}
