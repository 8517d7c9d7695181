//! The gnomonic-projection suite: projecting a parallel spread's quadric
//! from its off-plane center onto an invariant plane, the image conic of a
//! regulus, exact interior-point decisions, and the quadrangle
//! configuration with its self-polar diagonal triangle and fourth-harmonic
//! identities.

use crate::clifford::{related, Regulus, RelationReport, RelationViolation, Spread};
use crate::error::{Error, Result};
use crate::klein::{klein_bilinear, lines_meet, omega, EllipticSpace, Line, Side};
use crate::linemaps::{induced_plane_map, LineMap};
use crate::mat::{self, Mat};
use crate::projective::{Point, Subspace};
use crate::scalar::{self, frac, int, Scalar};
use num_traits::Zero;

/// The center of the gnomonic projection attached to a spread: the one
/// point where the opposite invariant plane meets the spread's carrier,
/// namely the common projection image of all members.
pub fn projection_center(es: &EllipticSpace, spread: &Spread) -> Point {
    let center = match spread.side() {
        Side::Left => es.left_image(spread.base()),
        Side::Right => es.right_image(spread.base()),
    };
    debug_assert!(spread.carrier().contains_point(&center));
    debug_assert!(es.plane(spread.side().other()).contains_point(&center));
    center
}

/// Project a point of the spread's carrier from the projection center onto
/// the invariant plane of the spread's side. On the spread quadric this is
/// the common-image projection; the plane itself stays fixed pointwise.
/// Errors when the point is outside the carrier or equals the center.
pub fn gnomonic_project(es: &EllipticSpace, spread: &Spread, x: &Point) -> Result<Point> {
    if !spread.carrier().contains_point(x) {
        return Err(Error::OutsideDomain);
    }
    let image = match spread.side() {
        Side::Left => es.project_to_left(x)?,
        Side::Right => es.project_to_right(x)?,
    };
    debug_assert!(
        {
            let center = projection_center(es, spread);
            Subspace::from_points(&[x.clone(), center])
                .map(|line| line.contains_point(&image))
                .unwrap_or(true)
        },
        "the image lies on the line joining the point with the center"
    );
    Ok(image)
}

/// A conic of a projective plane inside the Klein space: the carrier plane
/// together with a nondegenerate symmetric form in the plane's basis
/// coordinates.
#[derive(Debug, Clone)]
pub struct Conic {
    plane: Subspace,
    form: Mat,
}

impl Conic {
    pub fn new(plane: Subspace, form: Mat) -> Result<Conic> {
        if plane.vdim() != 3 {
            return Err(Error::AmbientMismatch { expected: 3, found: plane.vdim() });
        }
        if form.rows() != 3 || form.cols() != 3 {
            return Err(Error::AmbientMismatch {
                expected: 3,
                found: form.rows().max(form.cols()),
            });
        }
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if form.rank() != 3 {
            return Err(Error::DegenerateConic);
        }
        Ok(Conic { plane, form })
    }

    pub fn plane(&self) -> &Subspace {
        &self.plane
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    /// Coordinates of an ambient point in the carrier plane's basis; errors
    /// when the point is off the plane.
    pub fn coords(&self, p: &Point) -> Result<Vec<Scalar>> {
        self.plane
            .basis()
            .transpose()
            .solve(p.coords())
            .ok_or(Error::OutsideDomain)
    }

    /// Embed plane coordinates back into the ambient space.
    pub fn point_from_coords(&self, coords: &[Scalar]) -> Result<Point> {
        Point::new(self.plane.basis().transpose().mul_vec(coords))
    }

    /// Value of the quadratic form on plane coordinates.
    pub fn value(&self, coords: &[Scalar]) -> Scalar {
        mat::dot(coords, &self.form.mul_vec(coords))
    }

    /// The symmetric bilinear form attached to the conic.
    pub fn bilinear(&self, c: &[Scalar], d: &[Scalar]) -> Scalar {
        mat::dot(c, &self.form.mul_vec(d))
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        Ok(self.value(&self.coords(p)?).is_zero())
    }

    /// Line coordinates (in the plane) of the polar line of a point.
    pub fn polar_line_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.form.mul_vec(coords)
    }

    /// Plane coordinates of the pole of a line given by line coordinates.
    pub fn pole_coords(&self, line: &[Scalar]) -> Vec<Scalar> {
        self.form
            .inverse()
            .expect("the form has rank 3")
            .mul_vec(line)
    }

    /// The second point where the line through a conic point `x` and an
    /// off-conic point `u` meets the conic (equal to `x` exactly when the
    /// line is tangent there).
    pub fn second_intersection(&self, x: &Point, u: &Point) -> Result<Point> {
        let cx = self.coords(x)?;
        let cu = self.coords(u)?;
        if !self.value(&cx).is_zero() {
            return Err(Error::NotOnQuadric);
        }
        let qu = self.value(&cu);
        if qu.is_zero() {
            return Err(Error::PointOnConic);
        }
        let b = self.bilinear(&cx, &cu);
        let other = mat::sub_vec(
            &mat::scale_vec(&cx, &qu),
            &mat::scale_vec(&cu, &(int(2) * b)),
        );
        self.point_from_coords(&other)
    }
}

/// The conic cut out of a plane by the Klein quadric, as a form in the
/// plane's basis coordinates. Errors when the section is degenerate.
pub fn restricted_quadric(plane: &Subspace) -> Result<Conic> {
    if plane.vdim() != 3 {
        return Err(Error::AmbientMismatch { expected: 3, found: plane.vdim() });
    }
    let basis = plane.basis();
    let mut form = Mat::zeros(3, 3);
    let half = frac(1, 2);
    for i in 0..3 {
        for j in 0..3 {
            form[(i, j)] = if i == j {
                omega(basis.row(i))
            } else {
                &half * &klein_bilinear(basis.row(i), basis.row(j))
            };
        }
    }
    Conic::new(plane.clone(), form)
}

/// The restricted polarity of an invariant plane as a conic (definite form,
/// so it has no points, but poles, polars, and conjugacy are all defined).
pub fn kappa_conic(es: &EllipticSpace, side: Side) -> Conic {
    Conic::new(es.plane(side).clone(), es.side_form(side).clone())
        .expect("the restricted form is symmetric and definite")
}

/// Exact interiority: whether every line of the carrier plane through the
/// point meets the conic in two points over the real closure. For the
/// rank-3 forms handled here this is a sign condition: the form must be
/// indefinite and the form value at the point must have the determinant's
/// sign. Errors when the point is off the plane or on the conic.
pub fn interior_point(conic: &Conic, u: &Point) -> Result<bool> {
    let cu = conic.coords(u)?;
    let q = conic.value(&cu);
    if q.is_zero() {
        return Err(Error::PointOnConic);
    }
    let (_, diag) = conic.form().congruent_diagonalize();
    let signs: Vec<i8> = diag.iter().filter(|d| !d.is_zero()).map(scalar::sign).collect();
    debug_assert_eq!(signs.len(), 3, "the form has rank 3");
    if signs.iter().all(|&s| s == signs[0]) {
        // Definite section: the conic has no real points and no line is a
        // secant, so no point is interior.
        return Ok(false);
    }
    Ok(scalar::sign(&q) == scalar::sign(&conic.form().det()))
}

/// The fixed objects of the quadrangle construction for a base line and a
/// transversal: the regulus, its plane conic, the projected conic `k` in
/// the invariant plane, the trace line `u`, and the pole of `u`.
#[derive(Debug, Clone)]
pub struct Prop9Frame {
    pub regulus: Regulus,
    /// The projected conic in the left invariant plane.
    pub k: Conic,
    /// The regulus conic in its own carrier plane.
    pub carrier_conic: Conic,
    /// The line where the regulus plane meets the left invariant plane.
    pub u: Subspace,
    /// Line coordinates of `u` inside the left plane.
    pub u_line: Vec<Scalar>,
    /// The pole of `u` with respect to `k` (a point of the left plane).
    pub pole: Point,
    /// Whether the pole of `u` agrees for `k` and the restricted polarity.
    pub pole_matches_polarity: bool,
}

/// Validate the preconditions and build the frame: the transversal must
/// meet the base line without being related to it. The projected conic is
/// fitted from five projected regulus members and verified on fifteen
/// more.
pub fn prop9_frame(es: &EllipticSpace, a: &Line, t: &Line) -> Result<Prop9Frame> {
    if related(es, a, t) {
        return Err(Error::RelatedTransversal);
    }
    if !lines_meet(a, t) {
        return Err(Error::TransversalMissesBase);
    }
    let spread = Spread::new(es, Side::Left, a.clone());
    let regulus = Regulus::new(spread, t.clone())?;
    let members = regulus.sample_members(20);
    let mut projected: Vec<Point> = Vec::new();
    for member in &members {
        let image = gnomonic_project(es, regulus.spread(), &member.klein_point())?;
        if !projected.contains(&image) {
            projected.push(image);
        }
    }
    if projected.len() < 5 {
        return Err(Error::Internal("too few distinct projected regulus points".into()));
    }
    let coords: Vec<Vec<Scalar>> = projected
        .iter()
        .map(|p| es.plane_coords(Side::Left, p))
        .collect::<Result<_>>()?;
    let monomials = |c: &[Scalar]| {
        vec![
            &c[0] * &c[0],
            &c[0] * &c[1],
            &c[0] * &c[2],
            &c[1] * &c[1],
            &c[1] * &c[2],
            &c[2] * &c[2],
        ]
    };
    let fit = Mat::from_rows(coords.iter().take(5).map(|c| monomials(c)).collect());
    let kernel = fit.kernel();
    if kernel.rows() != 1 {
        return Err(Error::DegenerateConic);
    }
    let f = kernel.row(0);
    let half = frac(1, 2);
    let form = Mat::from_rows(vec![
        vec![f[0].clone(), &half * &f[1], &half * &f[2]],
        vec![&half * &f[1], f[3].clone(), &half * &f[4]],
        vec![&half * &f[2], &half * &f[4], f[5].clone()],
    ]);
    let k = Conic::new(es.left_plane().clone(), form)?;
    for c in coords.iter().skip(5) {
        if !k.value(c).is_zero() {
            return Err(Error::Internal("fitted conic misses a projected regulus point".into()));
        }
    }
    // Plane of the regulus conic and its trace in the left plane.
    let member_points: Vec<Point> = members.iter().take(5).map(|m| m.klein_point()).collect();
    let carrier_plane = Subspace::from_points(&member_points)?;
    if carrier_plane.vdim() != 3 {
        return Err(Error::Internal("regulus points do not span a plane".into()));
    }
    let carrier_conic = restricted_quadric(&carrier_plane)?;
    let u = carrier_plane.meet(es.left_plane());
    if u.vdim() != 2 {
        return Err(Error::Internal("the regulus plane does not trace a line".into()));
    }
    let u_pts: Vec<Vec<Scalar>> = u
        .basis_points()
        .iter()
        .map(|p| es.plane_coords(Side::Left, p))
        .collect::<Result<_>>()?;
    let u_line = {
        let rows = Mat::from_rows(u_pts.clone());
        let ker = rows.kernel();
        debug_assert_eq!(ker.rows(), 1);
        ker.row(0).to_vec()
    };
    let pole_k = k.pole_coords(&u_line);
    let kappa = kappa_conic(es, Side::Left);
    let pole_kappa = kappa.pole_coords(&u_line);
    let pole_matches_polarity = projectively_equal(&pole_k, &pole_kappa);
    let pole = es.plane_point(Side::Left, &pole_k)?;
    Ok(Prop9Frame { regulus, k, carrier_conic, u, u_line, pole, pole_matches_polarity })
}

/// The projected conic of the regulus of a base line and a transversal.
pub fn conic_k(es: &EllipticSpace, a: &Line, t: &Line) -> Result<Conic> {
    Ok(prop9_frame(es, a, t)?.k)
}

fn cross3(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn projectively_equal(a: &[Scalar], b: &[Scalar]) -> bool {
    match (mat::normalize_projective(a), mat::normalize_projective(b)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}

fn push_check(
    report: &mut RelationReport,
    trial: u32,
    ok: bool,
    witness: String,
    expected: &str,
    actual: &str,
) {
    if !ok {
        report.violations.push(RelationViolation {
            trial,
            witness,
            expected: expected.into(),
            actual: actual.into(),
        });
    }
}

/// Run the full quadrangle construction over sampled conic points.
///
/// The frame checks (pole agreement, interiority, coincidence of the three
/// involutions induced on the trace line) run once; then for each of
/// `trials` parameter values a quadrangle `{A, B, X, X-bar}` is built on
/// the projected conic with its diagonal triangle, and the self-polarity
/// and image identities are verified for the plane map induced by the
/// supplied direct line map.
pub fn prop9_configuration(
    es: &EllipticSpace,
    a: &Line,
    t: &Line,
    phi: &LineMap,
    trials: u32,
) -> Result<RelationReport> {
    let frame = prop9_frame(es, a, t)?;
    let phi_l = induced_plane_map(es, phi, Side::Left)?;
    let mut report = RelationReport::default();

    push_check(
        &mut report,
        0,
        frame.pole_matches_polarity,
        format!("trace-line coordinates ({})", scalar::fmt_vec(&frame.u_line)),
        "the pole of the trace line agrees for the conic and the restricted polarity",
        "the two poles differ",
    );
    push_check(
        &mut report,
        0,
        interior_point(&frame.k, &frame.pole)? ,
        format!("pole ({})", scalar::fmt_vec(frame.pole.coords())),
        "the pole of the trace line is interior to the projected conic",
        "the pole is not interior",
    );
    check_involution_coincidence(es, &frame, &mut report)?;

    let kappa = kappa_conic(es, Side::Left);
    let u_pole_coords = frame.k.coords(&frame.pole)?;
    // Conic points come from the rational regulus parametrization.
    let members = frame.regulus.sample_members(trials as usize + 8);
    let mut points: Vec<Vec<Scalar>> = Vec::new();
    for member in &members {
        let image = gnomonic_project(es, frame.regulus.spread(), &member.klein_point())?;
        let c = frame.k.coords(&image)?;
        if !points.iter().any(|p| projectively_equal(p, &c)) {
            points.push(c);
        }
    }
    let ca = points[0].clone();
    let a_point = frame.k.point_from_coords(&ca)?;
    let b_point = frame.k.second_intersection(&a_point, &frame.pole)?;
    let cb = frame.k.coords(&b_point)?;
    if projectively_equal(&ca, &cb) {
        return Err(Error::Internal("the secant through the interior pole is tangent".into()));
    }

    let mut tested = 0u32;
    for cx in points.iter().skip(1) {
        if tested == trials {
            break;
        }
        // Degenerate samples (X coinciding with A or B) are skipped, which
        // resamples the parameter.
        if projectively_equal(cx, &ca) || projectively_equal(cx, &cb) {
            continue;
        }
        tested += 1;
        let trial = tested;
        let x_point = frame.k.point_from_coords(cx)?;
        let xbar_point = frame.k.second_intersection(&x_point, &frame.pole)?;
        let cxb = frame.k.coords(&xbar_point)?;
        let witness = format!("X=({})", scalar::fmt_vec(cx));
        push_check(
            &mut report,
            trial,
            !projectively_equal(cx, &cxb),
            witness.clone(),
            "the secant through the interior pole meets the conic again",
            "the second intersection coincides with X",
        );

        let l_ab = cross3(&ca, &cb);
        let l_xxb = cross3(cx, &cxb);
        push_check(
            &mut report,
            trial,
            projectively_equal(&cross3(&l_ab, &l_xxb), &u_pole_coords),
            witness.clone(),
            "the pole is a diagonal point of the quadrangle",
            "the two secants do not meet at the pole",
        );

        let xa = cross3(&cross3(&ca, cx), &cross3(&cb, &cxb));
        let xb = cross3(&cross3(&ca, &cxb), &cross3(&cb, cx));
        // Self-polarity of the diagonal triangle for the projected conic.
        let self_polar_k = frame.k.bilinear(&u_pole_coords, &xa).is_zero()
            && frame.k.bilinear(&u_pole_coords, &xb).is_zero()
            && frame.k.bilinear(&xa, &xb).is_zero();
        push_check(
            &mut report,
            trial,
            self_polar_k,
            witness.clone(),
            "the diagonal triangle is self-polar for the projected conic",
            "a pair of diagonal points fails conjugacy",
        );
        // ... and for the restricted polarity.
        let self_polar_kappa = kappa.bilinear(&u_pole_coords, &xa).is_zero()
            && kappa.bilinear(&u_pole_coords, &xb).is_zero()
            && kappa.bilinear(&xa, &xb).is_zero();
        push_check(
            &mut report,
            trial,
            self_polar_kappa,
            witness.clone(),
            "the diagonal triangle is self-polar for the restricted polarity",
            "a pair of diagonal points fails restricted conjugacy",
        );
        push_check(
            &mut report,
            trial,
            projectively_equal(&cross3(&xa, &xb), &frame.u_line),
            witness.clone(),
            "the two off-pole diagonal points span the trace line",
            "their join is a different line",
        );

        // Images under the induced plane map.
        let pa = phi_l.apply_coords(&ca);
        let pb = phi_l.apply_coords(&cb);
        let px = phi_l.apply_coords(cx);
        let pxb = phi_l.apply_coords(&cxb);
        let pu = phi_l.apply_coords(&u_pole_coords);
        let image_pts = [&pa, &pb, &px, &pxb];
        let mut distinct = true;
        for i in 0..image_pts.len() {
            for j in (i + 1)..image_pts.len() {
                if projectively_equal(image_pts[i], image_pts[j]) {
                    distinct = false;
                }
            }
        }
        push_check(
            &mut report,
            trial,
            distinct,
            witness.clone(),
            "the plane map is injective on the sampled conic points",
            "two sampled conic points share an image",
        );
        let l_pab = cross3(&pa, &pb);
        push_check(
            &mut report,
            trial,
            mat::dot(&l_pab, &pu).is_zero(),
            witness.clone(),
            "the pole image lies on the join of the two base images",
            "the pole image is off that join",
        );
        push_check(
            &mut report,
            trial,
            !mat::dot(&l_pab, &px).is_zero(),
            witness.clone(),
            "the image of X avoids the join of the two base images",
            "the image of X falls on that join",
        );
        let off_pole = [&pa, &pb, &px, &pxb]
            .iter()
            .all(|p| !projectively_equal(p, &pu));
        push_check(
            &mut report,
            trial,
            off_pole,
            witness.clone(),
            "no sampled conic image equals the pole image",
            "a conic image hits the pole image",
        );
        // Fourth-harmonic identity: the polar of the pole image is the join
        // of the images of the off-pole diagonal points, and differs from
        // the join of the base images.
        let u_prime = kappa.polar_line_coords(&pu);
        let pxa = phi_l.apply_coords(&xa);
        let pxb2 = phi_l.apply_coords(&xb);
        push_check(
            &mut report,
            trial,
            projectively_equal(&u_prime, &cross3(&pxa, &pxb2)),
            witness.clone(),
            "the polar of the pole image is the join of the diagonal images",
            "the fourth-harmonic line differs",
        );
        push_check(
            &mut report,
            trial,
            !projectively_equal(&u_prime, &l_pab),
            witness.clone(),
            "the fourth-harmonic line differs from the join of the base images",
            "the two lines coincide",
        );
        // The trace-line point on the base secant maps to the matching
        // intersection and stays off the diagonal images.
        let c_coords = cross3(&frame.u_line, &l_ab);
        let pc = phi_l.apply_coords(&c_coords);
        push_check(
            &mut report,
            trial,
            projectively_equal(&pc, &cross3(&u_prime, &l_pab)),
            witness.clone(),
            "the trace point of the base secant maps to the matching intersection",
            "the image is a different point",
        );
        push_check(
            &mut report,
            trial,
            !projectively_equal(&pc, &pxa) && !projectively_equal(&pc, &pxb2),
            witness.clone(),
            "the trace-point image avoids the diagonal images",
            "the trace-point image hits a diagonal image",
        );
    }
    report.trials = tested;
    Ok(report)
}

/// The restricted polarity, the regulus conic, and the projected conic all
/// induce the same involution on the trace line; checked on ten points.
fn check_involution_coincidence(
    es: &EllipticSpace,
    frame: &Prop9Frame,
    report: &mut RelationReport,
) -> Result<()> {
    let kappa = kappa_conic(es, Side::Left);
    let u_pts: Vec<Vec<Scalar>> = frame
        .u
        .basis_points()
        .iter()
        .map(|p| es.plane_coords(Side::Left, p))
        .collect::<Result<_>>()?;
    for step in 0..10i64 {
        let coords: Vec<Scalar> = (0..3)
            .map(|i| &u_pts[0][i] + &(&int(step) * &u_pts[1][i]))
            .collect();
        let p = es.plane_point(Side::Left, &coords)?;
        // Involution induced by the projected conic.
        let via_k = cross3(&frame.k.polar_line_coords(&coords), &frame.u_line);
        // Involution induced by the restricted polarity.
        let via_kappa = cross3(&kappa.polar_line_coords(&coords), &frame.u_line);
        let agree_plane = projectively_equal(&via_k, &via_kappa);
        // Involution induced by the regulus conic in its own plane.
        let cw = frame.carrier_conic.coords(&p)?;
        let polar_w = frame.carrier_conic.polar_line_coords(&cw);
        // Lift the polar line back to the ambient space and meet it with u.
        let basis = frame.carrier_conic.plane().basis();
        let normal: Vec<Scalar> = polar_w.to_vec();
        // Points of the carrier plane conjugate to p: kernel of the row.
        let row = Mat::from_rows(vec![normal]);
        let ker = row.kernel();
        let mut gens = Vec::new();
        for i in 0..ker.rows() {
            gens.push(basis.transpose().mul_vec(ker.row(i)));
        }
        let polar_sub = Subspace::from_rows(6, &Mat::from_rows(gens));
        let image_sub = polar_sub.meet(&frame.u);
        let via_regulus = image_sub.as_point()?;
        let lifted = es.plane_point(
            Side::Left,
            &mat::normalize_projective(&via_k).ok_or(Error::ZeroVector)?,
        )?;
        push_check(
            report,
            0,
            agree_plane && lifted == via_regulus,
            format!("trace point ({})", scalar::fmt_vec(&coords)),
            "the three induced involutions agree",
            "an induced involution image differs",
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linemaps::reflection;
    use crate::projective::Point;

    fn es() -> EllipticSpace {
        EllipticSpace::standard()
    }

    fn line(p: [i64; 6]) -> Line {
        Line::from_ints(&p).expect("test sextuple is a line")
    }

    fn point6(c: [i64; 6]) -> Point {
        Point::from_ints(&c).expect("test point is nonzero")
    }

    fn base_and_transversal() -> (Line, Line) {
        (line([1, 0, 0, 0, 0, 0]), line([1, 1, 0, 0, 0, 0]))
    }

    #[test]
    fn projection_center_of_the_standard_spread() {
        let es = es();
        let spread = Spread::new(&es, Side::Left, line([1, 0, 0, 0, 0, 0]));
        assert_eq!(projection_center(&es, &spread), point6([1, 0, 0, -1, 0, 0]));
    }

    #[test]
    fn gnomonic_projection_examples() {
        let es = es();
        let a = line([1, 0, 0, 0, 0, 0]);
        let spread = Spread::new(&es, Side::Left, a.clone());
        // The base line's Klein point projects to its common image.
        assert_eq!(
            gnomonic_project(&es, &spread, &a.klein_point()).expect("base point in carrier"),
            es.right_image(&a)
        );
        // Documented value.
        assert_eq!(
            gnomonic_project(&es, &spread, &point6([0, 0, 0, 1, 0, 0])).expect("in carrier"),
            point6([1, 0, 0, 1, 0, 0])
        );
        // The invariant plane inside the carrier stays fixed pointwise.
        for c in [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [1, 2, -1, 1, 2, -1]] {
            let p = point6(c);
            assert!(es.left_plane().contains_point(&p));
            assert_eq!(gnomonic_project(&es, &spread, &p).expect("plane point"), p);
        }
        // The center is rejected, as is a point outside the carrier.
        assert!(matches!(
            gnomonic_project(&es, &spread, &point6([1, 0, 0, -1, 0, 0])),
            Err(Error::CenterPlane)
        ));
        assert!(matches!(
            gnomonic_project(&es, &spread, &point6([0, 1, 0, 0, 0, 0])),
            Err(Error::OutsideDomain)
        ));
    }

    #[test]
    fn projection_identifies_polar_fibers() {
        let es = es();
        let a = line([1, 0, 0, 0, 0, 0]);
        let spread = Spread::new(&es, Side::Left, a.clone());
        let member = spread
            .line_through(&Point::from_ints(&[0, 1, 1, 0]).expect("nonzero"))
            .expect("spread member");
        let polar = es.polar_line(&member);
        assert!(spread.contains(&polar), "the polar of a member is a member");
        assert_eq!(
            gnomonic_project(&es, &spread, &member.klein_point()).expect("member"),
            gnomonic_project(&es, &spread, &polar.klein_point()).expect("polar member"),
        );
    }

    #[test]
    fn interior_point_sign_examples() {
        let es = es();
        let form = Mat::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let conic = Conic::new(es.left_plane().clone(), form).expect("rank 3");
        let center = es.plane_point(Side::Left, &[int(0), int(0), int(1)]).expect("lift");
        assert!(interior_point(&conic, &center).expect("off the conic"));
        let outside = es.plane_point(Side::Left, &[int(1), int(0), int(0)]).expect("lift");
        assert!(!interior_point(&conic, &outside).expect("off the conic"));
        let on = es.plane_point(Side::Left, &[int(1), int(0), int(1)]).expect("lift");
        assert!(matches!(interior_point(&conic, &on), Err(Error::PointOnConic)));
    }

    #[test]
    fn conic_k_preconditions() {
        let es = es();
        let a = line([1, 0, 0, 0, 0, 0]);
        assert!(matches!(conic_k(&es, &a, &a), Err(Error::RelatedTransversal)));
        // Orthogonal intersecting transversal is related.
        assert!(matches!(
            conic_k(&es, &a, &line([0, 1, 0, 0, 0, 0])),
            Err(Error::RelatedTransversal)
        ));
        // The polar line is skew.
        let polar = es.polar_line(&a);
        assert!(matches!(conic_k(&es, &a, &polar), Err(Error::TransversalMissesBase)));
    }

    #[test]
    fn fitted_conic_carries_the_projected_regulus() {
        let es = es();
        let (a, t) = base_and_transversal();
        let frame = prop9_frame(&es, &a, &t).expect("valid configuration");
        assert_eq!(frame.k.form().rank(), 3);
        let members = frame.regulus.sample_members(30);
        for member in &members {
            let image = gnomonic_project(&es, frame.regulus.spread(), &member.klein_point())
                .expect("members lie in the carrier");
            assert!(frame.k.contains(&image).expect("image lies in the plane"));
        }
        assert!(frame.pole_matches_polarity);
        assert!(interior_point(&frame.k, &frame.pole).expect("pole off the conic"));
    }

    #[test]
    fn second_intersections_are_rational_and_distinct() {
        let es = es();
        let (a, t) = base_and_transversal();
        let frame = prop9_frame(&es, &a, &t).expect("valid configuration");
        let members = frame.regulus.sample_members(12);
        for member in &members {
            let x = gnomonic_project(&es, frame.regulus.spread(), &member.klein_point())
                .expect("member in carrier");
            let xbar = frame.k.second_intersection(&x, &frame.pole).expect("secant");
            assert!(frame.k.contains(&xbar).expect("second point on the conic"));
            assert_ne!(x, xbar, "a secant through an interior point is never tangent");
        }
    }

    #[test]
    fn configuration_passes_for_identity_and_composite() {
        let es = es();
        let (a, t) = base_and_transversal();
        let id = LineMap::identity();
        let report = prop9_configuration(&es, &a, &t, &id, 20).expect("valid configuration");
        assert!(report.passed(), "identity violations: {:?}", report.violations);
        assert_eq!(report.trials, 20);

        let r0 = reflection(&es, &Point::from_ints(&[1, 0, 0, 0]).expect("nonzero"));
        let r1 = reflection(&es, &Point::from_ints(&[0, 1, 0, 0]).expect("nonzero"));
        let comp = r0.compose(&r1).expect("matrix maps compose");
        let report = prop9_configuration(&es, &a, &t, &comp, 20).expect("valid configuration");
        assert!(report.passed(), "composite violations: {:?}", report.violations);
    }

    #[test]
    fn configuration_rejects_non_direct_maps() {
        let es = es();
        let (a, t) = base_and_transversal();
        let r0 = reflection(&es, &Point::from_ints(&[1, 0, 0, 0]).expect("nonzero"));
        assert!(matches!(
            prop9_configuration(&es, &a, &t, &r0, 5),
            Err(Error::NotDirect)
        ));
    }

    #[test]
    fn restricted_quadric_of_the_left_plane_is_definite() {
        let es = es();
        let conic = restricted_quadric(es.left_plane()).expect("rank 3");
        let (_, diag) = conic.form().congruent_diagonalize();
        let signs: Vec<i8> = diag.iter().map(scalar::sign).collect();
        assert!(signs.iter().all(|&s| s == signs[0]), "definite: the plane avoids the quadric");
    }
}
