//! Self-maps of the line set: elliptic reflections, collineation-induced
//! maps, direct/opposite classification, the induced plane maps on the two
//! eigenplanes, the common-perpendicular construction, sampled checks of the
//! relation-preservation condition, and admissibility of plane-map pairs.

use crate::clifford::{
    left_parallel, related, right_parallel, side_parallel, RelationReport, RelationViolation,
    Spread,
};
use crate::error::{Error, Result};
use crate::klein::{klein_bilinear, klein_inverse, klein_map, omega, second_compound};
use crate::klein::{EllipticSpace, Line, Side};
use crate::mat::{self, Mat};
use crate::projective::Point;
use crate::sample::Sampler;
use crate::scalar::{self, int, Scalar};
use num_traits::{One, Zero};

/// Provenance of a line map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// Induced by a harmonic homology at a point and its polar plane.
    Reflection,
    /// Induced by an arbitrary invertible point collineation.
    Collineation,
    /// A composition of matrix-backed maps.
    Composite,
    /// A matrix-backed base with finitely many explicit output overrides.
    Table,
}

#[derive(Debug, Clone)]
enum MapRepr {
    /// `induced` is the second compound of `point`; it acts on Plücker
    /// sextuples and always carries lines to lines.
    Matrix { point: Mat, induced: Mat },
    Table { base: Box<LineMap>, overrides: Vec<(Line, Line)> },
}

/// A self-map of the line set of PG(3, Q).
///
/// Matrix-backed maps are total and send the Klein quadric to itself; table
/// maps replace the outputs of a matrix-backed base on finitely many lines
/// and exist to produce guaranteed-failing inputs for the checking harness.
#[derive(Debug, Clone)]
pub struct LineMap {
    kind: MapKind,
    repr: MapRepr,
}

impl LineMap {
    /// The identity map on lines.
    pub fn identity() -> LineMap {
        LineMap {
            kind: MapKind::Collineation,
            repr: MapRepr::Matrix { point: Mat::identity(4), induced: Mat::identity(6) },
        }
    }

    /// The line map induced by an invertible 4×4 point matrix.
    pub fn from_point_matrix(point: Mat) -> Result<LineMap> {
        if point.rows() != 4 || point.cols() != 4 {
            return Err(Error::AmbientMismatch { expected: 4, found: point.rows().max(point.cols()) });
        }
        if point.det().is_zero() {
            return Err(Error::Singular);
        }
        let induced = second_compound(&point);
        Ok(LineMap { kind: MapKind::Collineation, repr: MapRepr::Matrix { point, induced } })
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_matrix_backed(&self) -> bool {
        matches!(self.repr, MapRepr::Matrix { .. })
    }

    /// The 4×4 point matrix, when the map is matrix-backed.
    pub fn point_matrix(&self) -> Option<&Mat> {
        match &self.repr {
            MapRepr::Matrix { point, .. } => Some(point),
            MapRepr::Table { .. } => None,
        }
    }

    /// The 6×6 matrix acting on Plücker sextuples, when matrix-backed.
    pub fn induced_matrix(&self) -> Option<&Mat> {
        match &self.repr {
            MapRepr::Matrix { induced, .. } => Some(induced),
            MapRepr::Table { .. } => None,
        }
    }

    /// Image of a line.
    pub fn apply(&self, a: &Line) -> Line {
        match &self.repr {
            MapRepr::Matrix { induced, .. } => Line::new(induced.mul_vec(a.plucker()))
                .expect("the compound of an invertible matrix maps lines to lines"),
            MapRepr::Table { base, overrides } => {
                for (src, dst) in overrides {
                    if a == src {
                        return dst.clone();
                    }
                }
                base.apply(a)
            }
        }
    }

    /// The composition `self` after `inner` (`x` goes first through `inner`).
    ///
    /// A table-backed outer map is not supported, since rewriting its
    /// overrides would require inverting the inner map.
    pub fn compose(&self, inner: &LineMap) -> Result<LineMap> {
        match (&self.repr, &inner.repr) {
            (
                MapRepr::Matrix { point: p2, induced: i2 },
                MapRepr::Matrix { point: p1, induced: i1 },
            ) => Ok(LineMap {
                kind: MapKind::Composite,
                repr: MapRepr::Matrix { point: p2.mul(p1), induced: i2.mul(i1) },
            }),
            (MapRepr::Matrix { .. }, MapRepr::Table { base, overrides }) => {
                let new_base = self.compose(base)?;
                let new_overrides = overrides
                    .iter()
                    .map(|(src, dst)| (src.clone(), self.apply(dst)))
                    .collect();
                Ok(LineMap {
                    kind: MapKind::Table,
                    repr: MapRepr::Table { base: Box::new(new_base), overrides: new_overrides },
                })
            }
            (MapRepr::Table { .. }, _) => Err(Error::Internal(
                "composition with a table-backed outer map is not supported".into(),
            )),
        }
    }

    /// Wrap the map in a table that exchanges the outputs at `u` and `v`.
    ///
    /// The result agrees with the original map everywhere except at the two
    /// named lines, whose images are swapped; with a bijective base the
    /// result stays bijective.
    pub fn with_swap(self, u: Line, v: Line) -> Result<LineMap> {
        if u == v {
            return Err(Error::EqualLines);
        }
        let iu = self.apply(&u);
        let iv = self.apply(&v);
        let overrides = vec![(u, iv), (v, iu)];
        Ok(LineMap { kind: MapKind::Table, repr: MapRepr::Table { base: Box::new(self), overrides } })
    }
}

/// The line map induced by the harmonic homology with center `q` and axis
/// the polar plane of `q`: an involutory collineation fixing `q` and its
/// polar plane pointwise.
pub fn reflection(es: &EllipticSpace, q: &Point) -> LineMap {
    let m = es.polarity().form();
    let mq = m.mul_vec(q.coords());
    let denom = mat::dot(q.coords(), &mq);
    debug_assert!(!denom.is_zero(), "the form is anisotropic");
    let factor = int(2) / denom;
    let mut rows = Vec::with_capacity(4);
    for i in 0..4 {
        let mut row = Vec::with_capacity(4);
        for (j, mqj) in mq.iter().enumerate() {
            let mut val = if i == j { Scalar::one() } else { Scalar::zero() };
            val -= factor.clone() * q.coords()[i].clone() * mqj.clone();
            row.push(val);
        }
        rows.push(row);
    }
    let point = Mat::from_rows(rows);
    debug_assert!(
        point.transpose().mul(m).mul(&point).sub(m).is_zero(),
        "a reflection preserves the form"
    );
    let induced = second_compound(&point);
    LineMap { kind: MapKind::Reflection, repr: MapRepr::Matrix { point, induced } }
}

/// Which implication of the defining relation-preservation condition to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Only: related pairs must have related images.
    Forward,
    /// Both directions: the relation must hold before iff it holds after.
    Iff,
}

/// A line related to `a`, built from a random point on `a` joined to a
/// random point on the polar line of `a`.
pub fn related_partner(es: &EllipticSpace, a: &Line, sampler: &mut Sampler) -> Line {
    let foot = sampler.point_on_line(a);
    let polar = es.polar_line(a);
    let top = sampler.point_on_line(&polar);
    klein_map(&foot, &top).expect("a line and its polar line are disjoint")
}

/// The six lines with a single nonzero Plücker coordinate (the edges of the
/// coordinate tetrahedron).
fn coordinate_lines() -> Vec<Line> {
    (0..6)
        .map(|i| {
            let mut v = vec![Scalar::zero(); 6];
            v[i] = Scalar::one();
            Line::new(v).expect("coordinate sextuples are lines")
        })
        .collect()
}

/// Deterministic probe pairs aimed at the overrides of a table map: each
/// override source is paired with every related coordinate line and with a
/// constructed related partner, so a perturbed output cannot hide from the
/// sampled check.
fn table_probe_pairs(es: &EllipticSpace, map: &LineMap) -> Vec<(Line, Line)> {
    let MapRepr::Table { overrides, .. } = &map.repr else {
        return Vec::new();
    };
    let mut probes = Vec::new();
    for (src, _) in overrides {
        for c in coordinate_lines() {
            if &c != src && related(es, &c, src) {
                probes.push((c, src.clone()));
            }
        }
        let (foot, _) = klein_inverse(src);
        let (top, _) = klein_inverse(&es.polar_line(src));
        let chain = klein_map(&foot, &top).expect("a line and its polar line are disjoint");
        probes.push((chain, src.clone()));
    }
    probes
}

/// Core loop shared by `check_condition` and the `classify` precondition:
/// returns the report together with the first violating pair.
fn condition_scan(
    es: &EllipticSpace,
    map: &LineMap,
    mode: CheckMode,
    sampler: &mut Sampler,
    trials: u32,
) -> (RelationReport, Option<(Line, Line)>) {
    let mut probes = table_probe_pairs(es, map).into_iter();
    let total = probes.len() as u32 + trials;
    let mut report = RelationReport { trials: total, ..Default::default() };
    let mut first = None;
    for trial in 0..total {
        let (a, b) = if let Some(pair) = probes.next() {
            pair
        } else if trial % 2 == 0 {
            let a = sampler.line();
            let b = related_partner(es, &a, sampler);
            (a, b)
        } else {
            let a = sampler.line();
            let b = sampler.line_other_than(&a);
            (a, b)
        };
        let fa = map.apply(&a);
        let fb = map.apply(&b);
        let before = related(es, &a, &b);
        let after = related(es, &fa, &fb);
        if before && !after {
            report.violations.push(RelationViolation {
                trial,
                witness: format!("a={a}, b={b}"),
                expected: "related lines have related images".into(),
                actual: format!("images {fa} and {fb} are not related"),
            });
            if first.is_none() {
                first = Some((a.clone(), b.clone()));
            }
        }
        if mode == CheckMode::Iff && !before && after {
            report.violations.push(RelationViolation {
                trial,
                witness: format!("a={a}, b={b}"),
                expected: "unrelated lines have unrelated images".into(),
                actual: format!("images {fa} and {fb} are related"),
            });
            if first.is_none() {
                first = Some((a.clone(), b.clone()));
            }
        }
    }
    (report, first)
}

/// Sampled check of the relation-preservation condition for a line map.
///
/// Half of the random trials force a related pair via the concurrent
/// construction (a point on `a` joined to a point on the polar line), so
/// related inputs appear in every trial set; for table-backed maps the
/// overridden lines are probed deterministically first.
pub fn check_condition(
    es: &EllipticSpace,
    map: &LineMap,
    mode: CheckMode,
    sampler: &mut Sampler,
    trials: u32,
) -> RelationReport {
    condition_scan(es, map, mode, sampler, trials).0
}

/// How a relation-preserving line map acts on the two parallelism classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Left-parallel pairs stay left-parallel and right stay right.
    Direct,
    /// The two kinds of parallelism are exchanged.
    Opposite,
    /// The map breaks the condition or fits neither pattern; the witness is
    /// a concrete line pair exhibiting the failure.
    Neither { witness: (Line, Line) },
}

/// Decide whether a map is direct or opposite.
///
/// The relation-preservation condition is checked first on samples; a
/// violation yields `Neither` with the offending pair. Matrix-backed maps
/// are then decided exactly by where the induced matrix sends the left
/// eigenplane; table maps fall back to sampled parallel pairs.
pub fn classify(
    es: &EllipticSpace,
    map: &LineMap,
    sampler: &mut Sampler,
    trials: u32,
) -> Classification {
    let (report, witness) = condition_scan(es, map, CheckMode::Forward, sampler, trials);
    if !report.passed() {
        let witness = witness.expect("a failed report records its first witness pair");
        return Classification::Neither { witness };
    }
    if let MapRepr::Matrix { induced, .. } = &map.repr {
        let basis = es.left_plane().basis();
        let mut in_left = true;
        let mut in_right = true;
        for i in 0..basis.rows() {
            let image = induced.mul_vec(basis.row(i));
            if !es.left_plane().contains_vec(&image) {
                in_left = false;
            }
            if !es.right_plane().contains_vec(&image) {
                in_right = false;
            }
        }
        if in_left {
            return Classification::Direct;
        }
        if in_right {
            return Classification::Opposite;
        }
        let witness = parallel_break_witness(es, map, sampler)
            .expect("a map moving the eigenplanes off themselves breaks some parallel pair");
        return Classification::Neither { witness };
    }
    sampled_classification(es, map, sampler, trials)
}

/// Search for a parallel pair whose images are parallel on neither side.
fn parallel_break_witness(
    es: &EllipticSpace,
    map: &LineMap,
    sampler: &mut Sampler,
) -> Option<(Line, Line)> {
    for _ in 0..400 {
        let a = sampler.line();
        for side in [Side::Left, Side::Right] {
            let spread = Spread::new(es, side, a.clone());
            let Ok(b) = spread.line_through(&sampler.point4()) else {
                continue;
            };
            if b == a {
                continue;
            }
            let fa = map.apply(&a);
            let fb = map.apply(&b);
            if !left_parallel(es, &fa, &fb) && !right_parallel(es, &fa, &fb) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Classification by sampled parallel pairs alone (for table-backed maps).
fn sampled_classification(
    es: &EllipticSpace,
    map: &LineMap,
    sampler: &mut Sampler,
    trials: u32,
) -> Classification {
    let mut preserved = true;
    let mut swapped = true;
    let mut last_pair = None;
    for _ in 0..trials.max(1) {
        let a = sampler.line();
        for side in [Side::Left, Side::Right] {
            let spread = Spread::new(es, side, a.clone());
            let Ok(b) = spread.line_through(&sampler.point4()) else {
                continue;
            };
            if b == a {
                continue;
            }
            let fa = map.apply(&a);
            let fb = map.apply(&b);
            let same = side_parallel(es, side, &fa, &fb);
            let other = side_parallel(es, side.other(), &fa, &fb);
            if !same && !other {
                return Classification::Neither { witness: (a, b) };
            }
            if !same {
                preserved = false;
            }
            if !other {
                swapped = false;
            }
            last_pair = Some((a.clone(), b));
        }
    }
    match (preserved, swapped) {
        (true, _) => Classification::Direct,
        (false, true) => Classification::Opposite,
        (false, false) => Classification::Neither {
            witness: last_pair.expect("at least one parallel pair was sampled"),
        },
    }
}

/// The two common perpendiculars of distinct intersecting lines: the polar
/// plane of the intersection point cuts the joining plane in a line `a`,
/// and the pair is `(a, a^pi)`. Both returned lines intersect `g` and `h`
/// orthogonally.
pub fn common_perpendicular(es: &EllipticSpace, g: &Line, h: &Line) -> Result<(Line, Line)> {
    if g == h {
        return Err(Error::EqualLines);
    }
    let sg = g.to_subspace();
    let sh = h.to_subspace();
    let meet = sg.meet(&sh);
    if meet.is_empty() {
        return Err(Error::SkewLines);
    }
    let p = meet.as_point()?;
    let joining_plane = sg.span(&sh);
    let axis = es.polarity().polar_point(&p).meet(&joining_plane);
    let pts = axis.basis_points();
    debug_assert_eq!(pts.len(), 2, "the perpendicular axis is a line");
    let a = klein_map(&pts[0], &pts[1])?;
    let a_polar = es.polar_line(&a);
    Ok((a, a_polar))
}

/// A projective self-map of one eigenplane, stored as an invertible 3×3
/// matrix acting on that plane's basis coordinates.
#[derive(Debug, Clone)]
pub struct PlaneMap {
    side: Side,
    matrix: Mat,
}

impl PlaneMap {
    pub fn new(side: Side, matrix: Mat) -> Result<PlaneMap> {
        if matrix.rows() != 3 || matrix.cols() != 3 {
            return Err(Error::AmbientMismatch {
                expected: 3,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if matrix.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(PlaneMap { side, matrix })
    }

    pub fn identity(side: Side) -> PlaneMap {
        PlaneMap { side, matrix: Mat::identity(3) }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    /// Image of a coordinate triple.
    pub fn apply_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(coords)
    }

    /// Image of a point of the plane (errors if the point is off the plane).
    pub fn apply(&self, es: &EllipticSpace, p: &Point) -> Result<Point> {
        let coords = es.plane_coords(self.side, p)?;
        es.plane_point(self.side, &self.matrix.mul_vec(&coords))
    }

    pub fn inverse(&self) -> PlaneMap {
        PlaneMap {
            side: self.side,
            matrix: self.matrix.inverse().expect("plane maps are invertible"),
        }
    }

    /// Exact test that the map commutes with the restricted polarity, i.e.
    /// preserves conjugacy: the pulled-back form must be a scalar multiple
    /// of the plane's form.
    pub fn commutes_with_polarity(&self, es: &EllipticSpace) -> bool {
        ad1_witness(es, self).is_none()
    }
}

/// The plane map induced on an eigenplane by a direct matrix-backed line
/// map: the restriction of the induced 6×6 matrix to the plane, written in
/// the plane's RREF basis coordinates. Errors when the map is not
/// matrix-backed or does not carry the plane to itself.
pub fn induced_plane_map(es: &EllipticSpace, map: &LineMap, side: Side) -> Result<PlaneMap> {
    let induced = map.induced_matrix().ok_or(Error::NotDirect)?;
    let basis = es.plane(side).basis();
    let pivots: Vec<usize> = (0..basis.rows())
        .map(|i| {
            basis.row(i).iter().position(|x| !x.is_zero()).expect("basis rows are nonzero")
        })
        .collect();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..basis.rows() {
        let image = induced.mul_vec(basis.row(j));
        // In RREF coordinates the coefficient of each basis row can be read
        // off at its pivot column; reconstruction then certifies membership.
        let coords: Vec<Scalar> = pivots.iter().map(|&p| image[p].clone()).collect();
        let mut recon = vec![Scalar::zero(); basis.cols()];
        for (i, c) in coords.iter().enumerate() {
            recon = mat::add_vec(&recon, &mat::scale_vec(basis.row(i), c));
        }
        if recon != image {
            return Err(Error::NotDirect);
        }
        cols.push(coords);
    }
    let rows: Vec<Vec<Scalar>> =
        (0..3).map(|i| (0..3).map(|j| cols[j][i].clone()).collect()).collect();
    PlaneMap::new(side, Mat::from_rows(rows))
}

/// Whether the transformed form equals a nonzero scalar multiple of `k`.
fn form_proportional(s: &Mat, k: &Mat) -> bool {
    for i in 0..k.rows() {
        for j in 0..k.cols() {
            if !k.row(i)[j].is_zero() {
                let lambda = s.row(i)[j].clone() / k.row(i)[j].clone();
                if lambda.is_zero() {
                    return false;
                }
                return s.sub(&k.scale(&lambda)).is_zero();
            }
        }
    }
    false
}

/// `None` when the plane map commutes with the restricted polarity; a
/// conjugate pair of plane points with non-conjugate images otherwise.
fn ad1_witness(es: &EllipticSpace, pm: &PlaneMap) -> Option<String> {
    let k = es.side_form(pm.side());
    let s = pm.matrix().transpose().mul(k).mul(pm.matrix());
    if form_proportional(&s, k) {
        return None;
    }
    // The failure always shows on a unit vector or a sum of two of them:
    // equality of the conjugacy relations on those six points forces the
    // forms to be proportional.
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..3 {
        let mut v = vec![Scalar::zero(); 3];
        v[i] = Scalar::one();
        candidates.push(v);
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mut v = vec![Scalar::zero(); 3];
            v[i] = Scalar::one();
            v[j] = Scalar::one();
            candidates.push(v);
        }
    }
    for u in &candidates {
        let row = Mat::from_rows(vec![k.mul_vec(u)]);
        let conj = row.kernel();
        for r in 0..conj.rows() {
            let v = conj.row(r);
            if !mat::dot(&s.mul_vec(v), u).is_zero() {
                return Some(format!(
                    "plane points with coordinates u=({}) and v=({}) are conjugate but their images are not",
                    scalar::fmt_vec(u),
                    scalar::fmt_vec(v)
                ));
            }
        }
    }
    Some("the restricted form is not preserved up to a scalar factor".into())
}

/// Whether the joining line of two Klein-space points meets the quadric in
/// a rational point, by the discriminant of the restricted binary form.
fn secant_meets_quadric(x: &Point, y: &Point) -> bool {
    let qx = omega(x.coords());
    let qy = omega(y.coords());
    let b = klein_bilinear(x.coords(), y.coords());
    let disc = b.clone() * b - int(4) * qx * qy;
    scalar::is_square(&disc)
}

/// Outcome of the admissibility check for a pair of plane maps.
#[derive(Debug, Clone)]
pub struct AdmissibleReport {
    /// Both maps commute with their restricted polarities (checked exactly).
    pub ad1_ok: bool,
    /// A conjugate pair breaking commutation, when there is one.
    pub ad1_witness: Option<String>,
    /// Sampled check that secant joins keep meeting the quadric.
    pub ad2: RelationReport,
}

impl AdmissibleReport {
    pub fn passed(&self) -> bool {
        self.ad1_ok && self.ad2.passed()
    }
}

/// Check admissibility of a plane-map pair.
///
/// The commutation condition is decided exactly from the matrices. The
/// secant condition is sampled: on even trials the two points are the
/// projections of one random line (so the hypothesis holds by
/// construction), on odd trials they come from independent lines and the
/// implication is tested only when the hypothesis holds.
pub fn admissible_check(
    es: &EllipticSpace,
    zeta: &PlaneMap,
    eta: &PlaneMap,
    sampler: &mut Sampler,
    trials: u32,
) -> AdmissibleReport {
    assert_eq!(zeta.side(), Side::Left, "zeta must act on the left plane");
    assert_eq!(eta.side(), Side::Right, "eta must act on the right plane");
    let witness_left = ad1_witness(es, zeta).map(|w| format!("left: {w}"));
    let witness_right = ad1_witness(es, eta).map(|w| format!("right: {w}"));
    let ad1_ok = witness_left.is_none() && witness_right.is_none();
    let ad1_witness = witness_left.or(witness_right);
    let mut ad2 = RelationReport { trials, ..Default::default() };
    for trial in 0..trials {
        let a = sampler.line();
        let x = es.right_image(&a);
        let y = if trial % 2 == 0 {
            es.left_image(&a)
        } else {
            es.left_image(&sampler.line())
        };
        if !secant_meets_quadric(&x, &y) {
            continue;
        }
        let xz = zeta.apply(es, &x).expect("zeta maps the left plane to itself");
        let ye = eta.apply(es, &y).expect("eta maps the right plane to itself");
        if !secant_meets_quadric(&xz, &ye) {
            ad2.violations.push(RelationViolation {
                trial,
                witness: format!(
                    "X=({}), Y=({})",
                    scalar::fmt_vec(x.coords()),
                    scalar::fmt_vec(y.coords())
                ),
                expected: "the join of the images meets the quadric".into(),
                actual: "the image discriminant is not a square".into(),
            });
        }
    }
    AdmissibleReport { ad1_ok, ad1_witness, ad2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{ortho_intersect, parallel_witness};

    fn es() -> EllipticSpace {
        EllipticSpace::standard()
    }

    fn line(p: [i64; 6]) -> Line {
        Line::from_ints(&p).expect("test sextuple is a line")
    }

    fn point(c: [i64; 4]) -> Point {
        Point::from_ints(&c).expect("test point is nonzero")
    }

    #[test]
    fn reflection_at_e0_has_the_expected_matrices() {
        let es = es();
        let r = reflection(&es, &point([1, 0, 0, 0]));
        assert_eq!(r.kind(), MapKind::Reflection);
        let expected_point =
            Mat::from_int_rows(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(r.point_matrix().expect("matrix-backed").sub(&expected_point).is_zero());
        let expected_induced = Mat::from_int_rows(&[
            &[-1, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        assert!(r.induced_matrix().expect("matrix-backed").sub(&expected_induced).is_zero());
        assert_eq!(r.apply(&line([1, 0, 0, 0, 0, 0])), line([1, 0, 0, 0, 0, 0]));
        assert_eq!(r.apply(&line([0, 1, 0, 0, 0, 0])), line([0, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn reflection_is_an_involution_on_sampled_lines() {
        let es = es();
        let r = reflection(&es, &point([1, -2, 0, 3]));
        let mut sampler = Sampler::new(11);
        for _ in 0..100 {
            let a = sampler.line();
            assert_eq!(r.apply(&r.apply(&a)), a);
        }
        let doubled = r.compose(&r).expect("matrix maps compose");
        assert!(doubled
            .induced_matrix()
            .expect("matrix-backed")
            .sub(&Mat::identity(6))
            .is_zero());
    }

    #[test]
    fn reflection_classifies_opposite() {
        let es = es();
        let r = reflection(&es, &point([1, 0, 0, 0]));
        let mut sampler = Sampler::new(2);
        assert_eq!(classify(&es, &r, &mut sampler, 40), Classification::Opposite);
    }

    #[test]
    fn composite_of_two_reflections_is_direct() {
        let es = es();
        let r0 = reflection(&es, &point([1, 0, 0, 0]));
        let r1 = reflection(&es, &point([0, 1, 0, 0]));
        let comp = r0.compose(&r1).expect("matrix maps compose");
        assert_eq!(comp.kind(), MapKind::Composite);
        let expected = Mat::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 0, -1],
        ]);
        assert!(comp.induced_matrix().expect("matrix-backed").sub(&expected).is_zero());
        assert_eq!(comp.apply(&line([0, 0, 1, 0, 0, 0])), line([0, 0, 1, 0, 0, 0]));
        let mut sampler = Sampler::new(3);
        assert_eq!(classify(&es, &comp, &mut sampler, 40), Classification::Direct);
    }

    #[test]
    fn three_reflections_classify_opposite() {
        let es = es();
        let r0 = reflection(&es, &point([1, 0, 0, 0]));
        let r1 = reflection(&es, &point([0, 1, 0, 0]));
        let r2 = reflection(&es, &point([0, 0, 1, 0]));
        let comp = r2
            .compose(&r0.compose(&r1).expect("matrix maps compose"))
            .expect("matrix maps compose");
        let mut sampler = Sampler::new(4);
        assert_eq!(classify(&es, &comp, &mut sampler, 40), Classification::Opposite);
    }

    #[test]
    fn identity_is_direct_and_satisfies_the_condition() {
        let es = es();
        let id = LineMap::identity();
        let mut sampler = Sampler::new(5);
        assert_eq!(classify(&es, &id, &mut sampler, 30), Classification::Direct);
        let report = check_condition(&es, &id, CheckMode::Iff, &mut sampler, 30);
        assert!(report.passed());
        assert_eq!(report.trials, 30);
    }

    #[test]
    fn reflection_satisfies_the_condition_iff() {
        let es = es();
        let r = reflection(&es, &point([2, 1, -1, 3]));
        let mut sampler = Sampler::new(6);
        let report = check_condition(&es, &r, CheckMode::Iff, &mut sampler, 1000);
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn table_swap_is_flagged_with_the_documented_witness() {
        let es = es();
        let u = line([0, 1, 0, 0, 0, 0]);
        let v = line([1, 0, 2, 2, 0, -1]);
        assert!(!related(&es, &line([1, 0, 0, 0, 0, 0]), &v));
        let map = LineMap::identity().with_swap(u.clone(), v.clone()).expect("distinct lines");
        assert_eq!(map.kind(), MapKind::Table);
        assert_eq!(map.apply(&u), v);
        assert_eq!(map.apply(&v), u);
        let mut sampler = Sampler::new(7);
        let (report, first) = condition_scan(&es, &map, CheckMode::Forward, &mut sampler, 50);
        assert!(!report.passed());
        assert_eq!(
            first,
            Some((line([1, 0, 0, 0, 0, 0]), line([0, 1, 0, 0, 0, 0]))),
            "the first probe pair is the coordinate-line witness"
        );
        let witness = &report.violations[0].witness;
        assert_eq!(witness, "a=1 0 0 0 0 0, b=0 1 0 0 0 0");
    }

    #[test]
    fn classify_rejects_the_table_swap() {
        let es = es();
        let map = LineMap::identity()
            .with_swap(line([0, 1, 0, 0, 0, 0]), line([1, 0, 2, 2, 0, -1]))
            .expect("distinct lines");
        let mut sampler = Sampler::new(8);
        let got = classify(&es, &map, &mut sampler, 50);
        assert_eq!(
            got,
            Classification::Neither {
                witness: (line([1, 0, 0, 0, 0, 0]), line([0, 1, 0, 0, 0, 0]))
            }
        );
    }

    #[test]
    fn common_perpendicular_of_coordinate_lines() {
        let es = es();
        let g = line([1, 0, 0, 0, 0, 0]);
        let h = line([0, 1, 0, 0, 0, 0]);
        let (a, b) = common_perpendicular(&es, &g, &h).expect("distinct intersecting lines");
        assert_eq!(a, line([0, 0, 0, 0, 0, 1]));
        assert_eq!(b, line([0, 0, 1, 0, 0, 0]));
        for perp in [&a, &b] {
            assert!(ortho_intersect(&es, perp, &g));
            assert!(ortho_intersect(&es, perp, &h));
        }
        let (c, d) = common_perpendicular(&es, &h, &g).expect("order does not matter");
        assert!((c == a && d == b) || (c == b && d == a));
    }

    #[test]
    fn common_perpendicular_rejects_equal_and_skew_lines() {
        let es = es();
        let g = line([1, 0, 0, 0, 0, 0]);
        assert!(matches!(common_perpendicular(&es, &g, &g), Err(Error::EqualLines)));
        let skew = es.polar_line(&g);
        assert!(matches!(common_perpendicular(&es, &g, &skew), Err(Error::SkewLines)));
    }

    #[test]
    fn induced_plane_maps_of_the_composite() {
        let es = es();
        let r0 = reflection(&es, &point([1, 0, 0, 0]));
        let r1 = reflection(&es, &point([0, 1, 0, 0]));
        let comp = r0.compose(&r1).expect("matrix maps compose");
        let phi_l = induced_plane_map(&es, &comp, Side::Left).expect("direct map");
        let phi_r = induced_plane_map(&es, &comp, Side::Right).expect("direct map");
        let expected = Mat::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
        assert!(phi_l.matrix().sub(&expected).is_zero());
        assert!(phi_r.matrix().sub(&expected).is_zero());
        assert!(phi_l.commutes_with_polarity(&es));
        assert!(phi_r.commutes_with_polarity(&es));
    }

    #[test]
    fn induced_plane_map_of_identity_is_identity() {
        let es = es();
        let id = LineMap::identity();
        let pm = induced_plane_map(&es, &id, Side::Left).expect("direct map");
        assert!(pm.matrix().sub(&Mat::identity(3)).is_zero());
    }

    #[test]
    fn induced_plane_map_rejects_opposite_maps() {
        let es = es();
        let r = reflection(&es, &point([1, 0, 0, 0]));
        assert!(matches!(induced_plane_map(&es, &r, Side::Left), Err(Error::NotDirect)));
        let table = LineMap::identity()
            .with_swap(line([1, 0, 0, 0, 0, 0]), line([0, 1, 0, 0, 0, 0]))
            .expect("distinct lines");
        assert!(matches!(induced_plane_map(&es, &table, Side::Left), Err(Error::NotDirect)));
    }

    #[test]
    fn plane_map_tracks_the_line_map_on_projections() {
        let es = es();
        let r0 = reflection(&es, &point([1, 1, 0, -2]));
        let r1 = reflection(&es, &point([0, 1, 2, 1]));
        let comp = r0.compose(&r1).expect("matrix maps compose");
        let mut sampler = Sampler::new(9);
        assert_eq!(classify(&es, &comp, &mut sampler, 30), Classification::Direct);
        let phi_l = induced_plane_map(&es, &comp, Side::Left).expect("direct map");
        for _ in 0..25 {
            let a = sampler.line();
            let x = es.right_image(&a);
            let via_plane = phi_l.apply(&es, &x).expect("projection lies on the plane");
            let via_lines = es.right_image(&comp.apply(&a));
            assert_eq!(via_plane, via_lines);
        }
    }

    #[test]
    fn admissible_pair_from_a_direct_map_passes() {
        let es = es();
        let r0 = reflection(&es, &point([1, 0, 0, 0]));
        let r1 = reflection(&es, &point([0, 1, 0, 0]));
        let comp = r0.compose(&r1).expect("matrix maps compose");
        let zeta = induced_plane_map(&es, &comp, Side::Left).expect("direct map");
        let eta = induced_plane_map(&es, &comp, Side::Right).expect("direct map");
        let mut sampler = Sampler::new(10);
        let report = admissible_check(&es, &zeta, &eta, &mut sampler, 100);
        assert!(report.ad1_ok);
        assert!(report.ad1_witness.is_none());
        assert!(report.ad2.passed());
        let inverse_report =
            admissible_check(&es, &zeta.inverse(), &eta.inverse(), &mut sampler, 100);
        assert!(inverse_report.passed(), "inverses of an admissible pair stay admissible");
    }

    #[test]
    fn shear_on_the_right_plane_fails_ad1() {
        let es = es();
        let zeta = PlaneMap::identity(Side::Left);
        let eta = PlaneMap::new(
            Side::Right,
            Mat::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        )
        .expect("invertible shear");
        let mut sampler = Sampler::new(12);
        let report = admissible_check(&es, &zeta, &eta, &mut sampler, 20);
        assert!(!report.ad1_ok);
        let witness = report.ad1_witness.as_deref().expect("a witness is produced");
        assert!(witness.starts_with("right:"), "witness names the failing side: {witness}");
        assert!(!report.passed());
    }

    #[test]
    fn polar_involution_commutes_with_matrix_maps() {
        let es = es();
        let r = reflection(&es, &point([3, -1, 2, 1]));
        let mut sampler = Sampler::new(13);
        for _ in 0..50 {
            let a = sampler.line();
            assert_eq!(es.polar_line(&r.apply(&a)), r.apply(&es.polar_line(&a)));
        }
    }

    #[test]
    fn images_of_a_parallel_pair_are_parallel_on_exactly_one_side() {
        let es = es();
        let (a, b) = parallel_witness(&es).expect("the standard space has parallel pairs");
        let r = reflection(&es, &point([1, 0, 0, 0]));
        let (fa, fb) = (r.apply(&a), r.apply(&b));
        assert!(right_parallel(&es, &fa, &fb) && !left_parallel(&es, &fa, &fb));
        let comp = r.compose(&reflection(&es, &point([0, 1, 0, 0]))).expect("compose");
        let (ga, gb) = (comp.apply(&a), comp.apply(&b));
        assert!(left_parallel(&es, &ga, &gb) && !right_parallel(&es, &ga, &gb));
    }
}
