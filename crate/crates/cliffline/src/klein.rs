//! The Klein correspondence between lines of PG(3, Q) and points of the
//! Klein quadric in PG(5, Q), and the structure an elliptic polarity induces
//! there: the polar involution on Plücker coordinates, its two invariant
//! planes, the projections onto them, and the restricted polarities.
//!
//! Plücker coordinates are always ordered (p01, p02, p03, p23, p31, p12).
//! With that ordering the quadric is `p01*p23 + p02*p31 + p03*p12 = 0`, the
//! associated bilinear form is the half-swap of the two coordinate triples,
//! and two lines meet exactly when their images are conjugate under it.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::polarity::Polarity;
use crate::projective::{cross_ratio, CrossRatio, Point, Subspace};
use crate::scalar::{self, Scalar};

/// Index pairs backing the Plücker coordinate order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

/// A line of PG(3, Q), held as its normalized Plücker sextuple.
///
/// The constructor enforces membership of the Klein quadric, so every value
/// of this type is an actual line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    plucker: Vec<Scalar>,
}

impl Line {
    pub fn new(plucker: Vec<Scalar>) -> Result<Line> {
        if plucker.len() != 6 {
            return Err(Error::AmbientMismatch { expected: 6, found: plucker.len() });
        }
        let plucker = mat::normalize_projective(&plucker).ok_or(Error::ZeroVector)?;
        if !omega(&plucker).is_zero() {
            return Err(Error::NotOnQuadric);
        }
        Ok(Line { plucker })
    }

    pub fn from_ints(p: &[i64; 6]) -> Result<Line> {
        Line::new(p.iter().map(|&n| scalar::int(n)).collect())
    }

    pub fn plucker(&self) -> &[Scalar] {
        &self.plucker
    }

    /// The Klein image as a projective point of PG(5).
    pub fn klein_point(&self) -> Point {
        Point::new(self.plucker.clone()).expect("plucker vector is nonzero")
    }

    /// The line as a 1-dimensional subspace of PG(3).
    pub fn to_subspace(&self) -> Subspace {
        let (x, y) = klein_inverse(self);
        Subspace::from_points(&[x, y]).expect("line spans a subspace")
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.to_subspace().contains_point(p)
    }
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", scalar::fmt_vec(&self.plucker))
    }
}

/// Quadratic form of the Klein quadric.
pub fn omega(p: &[Scalar]) -> Scalar {
    assert_eq!(p.len(), 6);
    &(&p[0] * &p[3]) + &(&p[1] * &p[4]) + (&p[2] * &p[5])
}

/// Polarized bilinear form: `B(p, q) = Ω(p+q) - Ω(p) - Ω(q)`.
pub fn klein_bilinear(p: &[Scalar], q: &[Scalar]) -> Scalar {
    assert_eq!(p.len(), 6);
    assert_eq!(q.len(), 6);
    (0..3).map(|i| &(&p[i] * &q[i + 3]) + &(&p[i + 3] * &q[i])).sum()
}

/// Matrix of the bilinear form: the half-swap permutation.
pub fn klein_form_matrix() -> Mat {
    dual_swap_matrix()
}

/// The permutation exchanging (p01, p02, p03) with (p23, p31, p12); this is
/// both the ray/axial coordinate conversion and the Gram matrix of the
/// Klein bilinear form.
pub fn dual_swap_matrix() -> Mat {
    let mut d = Mat::zeros(6, 6);
    for i in 0..3 {
        d[(i, i + 3)] = Scalar::one();
        d[(i + 3, i)] = Scalar::one();
    }
    d
}

/// Klein map: the line joining two distinct points, as a Plücker sextuple.
pub fn klein_map(x: &Point, y: &Point) -> Result<Line> {
    for p in [x, y] {
        if p.ambient() != 4 {
            return Err(Error::AmbientMismatch { expected: 4, found: p.ambient() });
        }
    }
    let (xs, ys) = (x.coords(), y.coords());
    let p: Vec<Scalar> = PAIRS
        .iter()
        .map(|&(a, b)| &(&xs[a] * &ys[b]) - &(&xs[b] * &ys[a]))
        .collect();
    if mat::is_zero_vec(&p) {
        return Err(Error::CoincidentPoints);
    }
    Line::new(p)
}

/// Two distinct points spanning the line: the first two independent columns
/// of the antisymmetric Plücker matrix.
pub fn klein_inverse(line: &Line) -> (Point, Point) {
    let p = line.plucker();
    let mut m = Mat::zeros(4, 4);
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        m[(i, j)] = p[k].clone();
        m[(j, i)] = -p[k].clone();
    }
    let mut found: Vec<Point> = Vec::new();
    for j in 0..4 {
        let col = m.col(j);
        if mat::is_zero_vec(&col) {
            continue;
        }
        let cand = Point::new(col).expect("nonzero column");
        if found.is_empty() {
            found.push(cand);
        } else if found[0] != cand {
            found.push(cand);
            break;
        }
    }
    assert_eq!(found.len(), 2, "rank-2 Plücker matrix yields two independent columns");
    let y = found.pop().unwrap();
    let x = found.pop().unwrap();
    (x, y)
}

/// Whether two lines intersect: conjugacy of their Klein images.
pub fn lines_meet(a: &Line, b: &Line) -> bool {
    klein_bilinear(a.plucker(), b.plucker()).is_zero()
}

/// Second compound of a 4x4 matrix, acting on Plücker sextuples: the image
/// of a wedge `x ∧ y` under `m` applied to both factors.
pub fn second_compound(m: &Mat) -> Mat {
    assert_eq!((m.rows(), m.cols()), (4, 4));
    let mut out = Mat::zeros(6, 6);
    for (r, &(ar, br)) in PAIRS.iter().enumerate() {
        for (c, &(ac, bc)) in PAIRS.iter().enumerate() {
            out[(r, c)] =
                &(&m[(ar, ac)] * &m[(br, bc)]) - &(&m[(ar, bc)] * &m[(br, ac)]);
        }
    }
    out
}

/// Klein image of the star of lines through a point: a plane contained in
/// the quadric.
pub fn star_plane(q: &Point) -> Subspace {
    assert_eq!(q.ambient(), 4);
    let mut rows = Vec::new();
    for j in 0..4 {
        let mut e = vec![Scalar::zero(); 4];
        e[j] = Scalar::one();
        let wedge: Vec<Scalar> = PAIRS
            .iter()
            .map(|&(a, b)| &(&q.coords()[a] * &e[b]) - &(&q.coords()[b] * &e[a]))
            .collect();
        if !mat::is_zero_vec(&wedge) {
            rows.push(wedge);
        }
    }
    let plane = Subspace::from_rows(6, &Mat::from_rows(rows));
    debug_assert_eq!(plane.dim(), 2);
    plane
}

/// Outcome of testing a polarity for classicality.
#[derive(Debug, Clone)]
pub struct ClassicalityReport {
    /// Form is symmetric with nonzero determinant.
    pub polarity_ok: bool,
    /// Rational diagonalization is definite.
    pub anisotropic: bool,
    /// The square of the induced involution is this scalar times identity.
    pub involution_square: Option<Scalar>,
    /// Whether that scalar is a rational square.
    pub square_scalar: bool,
    /// Vector-space dimensions of the two eigenspaces after normalization.
    pub eigenplane_dims: Option<(usize, usize)>,
    /// A concrete Clifford-parallel pair witnessing the parallelism the
    /// classical structure provides (base line and a parallel mate that is
    /// neither the base nor its polar).
    pub witness: Option<(Line, Line)>,
    pub classical: bool,
}

impl std::fmt::Display for ClassicalityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "polarity valid:        {}", self.polarity_ok)?;
        writeln!(f, "anisotropic over Q:    {}", self.anisotropic)?;
        match &self.involution_square {
            Some(s) => writeln!(f, "involution square:     {} * identity", scalar::fmt_scalar(s))?,
            None => writeln!(f, "involution square:     not computed")?,
        }
        writeln!(f, "square in Q:           {}", self.square_scalar)?;
        match self.eigenplane_dims {
            Some((l, r)) => writeln!(f, "eigenplane dims:       ({l}, {r})")?,
            None => writeln!(f, "eigenplane dims:       not computed")?,
        }
        match &self.witness {
            Some((a, b)) => {
                writeln!(f, "parallel witness:      ({a}) and ({b})")?;
            }
            None => writeln!(f, "parallel witness:      none")?,
        }
        write!(f, "classical:             {}", self.classical)
    }
}

/// A classical elliptic 3-space: an anisotropic polarity together with the
/// split structure it induces on the Klein quadric.
///
/// Invariants established at construction: the polar involution squares to
/// the identity and fixes exactly two skew planes; the left and right planes
/// are its +1 and -1 eigenplanes, exchanged by the quadric's polarity; and
/// the quadric's form restricted to either plane is definite, so neither
/// plane meets the quadric.
#[derive(Debug, Clone)]
pub struct EllipticSpace {
    polarity: Polarity,
    polar_involution: Mat,
    left_plane: Subspace,
    right_plane: Subspace,
    left_form: Mat,
    right_form: Mat,
}

impl EllipticSpace {
    pub fn new(polarity: Polarity) -> Result<EllipticSpace> {
        if !polarity.certify_anisotropic() {
            return Err(Error::NotAnisotropic);
        }
        let raw = dual_swap_matrix().mul(&second_compound(polarity.form()));
        let square = raw.mul(&raw);
        let sigma = square[(0, 0)].clone();
        if square != Mat::identity(6).scale(&sigma) || sigma.is_zero() {
            return Err(Error::Internal(
                "polar involution does not square to a scalar matrix".into(),
            ));
        }
        let root = scalar::square_root(&sigma).ok_or_else(|| {
            Error::NotClassical(format!(
                "involution squares to {} times identity, which is not a rational square",
                scalar::fmt_scalar(&sigma)
            ))
        })?;
        let inv_root = Scalar::one() / root;
        let mut alpha = raw.scale(&inv_root);

        let plus = eigenplane(&alpha, false);
        let minus = eigenplane(&alpha, true);
        if plus.vdim() != 3 || minus.vdim() != 3 {
            return Err(Error::NotClassical(format!(
                "eigenspace dimensions are ({}, {}), not (3, 3)",
                plus.vdim(),
                minus.vdim()
            )));
        }

        // Deterministic labeling: the eigenplane with the smaller reduced
        // basis becomes the left plane, and the sign of the involution is
        // chosen so the left plane is its +1 eigenplane.
        let (left_plane, right_plane) = if basis_label_cmp(&plus, &minus).is_le() {
            (plus, minus)
        } else {
            alpha = alpha.scale(&-Scalar::one());
            (minus, plus)
        };

        let space = EllipticSpace::assemble(polarity, alpha, left_plane, right_plane)?;
        Ok(space)
    }

    fn assemble(
        polarity: Polarity,
        alpha: Mat,
        left_plane: Subspace,
        right_plane: Subspace,
    ) -> Result<EllipticSpace> {
        if !left_plane.meet(&right_plane).is_empty()
            || left_plane.span(&right_plane) != Subspace::full(6)
        {
            return Err(Error::Internal("invariant planes are not skew".into()));
        }
        let b6 = klein_form_matrix();
        let left_polar =
            Subspace::from_rows(6, &left_plane.basis().mul(&b6).kernel());
        if left_polar != right_plane {
            return Err(Error::Internal(
                "quadric polarity does not exchange the invariant planes".into(),
            ));
        }
        let left_form = gram(left_plane.basis(), &b6);
        let right_form = gram(right_plane.basis(), &b6);
        for form in [&left_form, &right_form] {
            let (_, diag) = form.congruent_diagonalize();
            let signs: Vec<i8> = diag.iter().map(scalar::sign).collect();
            if !(signs.iter().all(|&s| s == 1) || signs.iter().all(|&s| s == -1)) {
                return Err(Error::Internal(
                    "quadric form is not definite on an invariant plane".into(),
                ));
            }
        }
        Ok(EllipticSpace { polarity, polar_involution: alpha, left_plane, right_plane, left_form, right_form })
    }

    pub fn standard() -> EllipticSpace {
        EllipticSpace::new(Polarity::standard()).expect("identity form is classical")
    }

    /// Test hook: exchange the two plane labels, bypassing the deterministic
    /// labeling rule. Used to demonstrate that the verification scenarios
    /// catch a mislabeled space.
    #[doc(hidden)]
    pub fn with_swapped_labels_for_tests(&self) -> EllipticSpace {
        EllipticSpace {
            polarity: self.polarity.clone(),
            polar_involution: self.polar_involution.scale(&-Scalar::one()),
            left_plane: self.right_plane.clone(),
            right_plane: self.left_plane.clone(),
            left_form: self.right_form.clone(),
            right_form: self.left_form.clone(),
        }
    }

    pub fn polarity(&self) -> &Polarity {
        &self.polarity
    }

    /// The 6x6 involution acting on Plücker vectors; sends each line's image
    /// to the image of its polar line.
    pub fn polar_involution(&self) -> &Mat {
        &self.polar_involution
    }

    pub fn left_plane(&self) -> &Subspace {
        &self.left_plane
    }

    pub fn right_plane(&self) -> &Subspace {
        &self.right_plane
    }

    pub fn plane(&self, side: Side) -> &Subspace {
        match side {
            Side::Left => &self.left_plane,
            Side::Right => &self.right_plane,
        }
    }

    /// Gram matrix of the Klein form restricted to the left plane, in its
    /// RREF basis: the polarity induced there.
    pub fn left_form(&self) -> &Mat {
        &self.left_form
    }

    pub fn right_form(&self) -> &Mat {
        &self.right_form
    }

    pub fn side_form(&self, side: Side) -> &Mat {
        match side {
            Side::Left => &self.left_form,
            Side::Right => &self.right_form,
        }
    }

    /// Polar line, computed on Plücker coordinates.
    pub fn polar_line(&self, a: &Line) -> Line {
        let image = self.polar_involution.mul_vec(a.plucker());
        Line::new(image).expect("involution preserves the quadric")
    }

    /// Image of a PG(5) point under the polar involution.
    pub fn involution_point(&self, p: &Point) -> Point {
        Point::new(self.polar_involution.mul_vec(p.coords())).expect("involution is invertible")
    }

    /// Projection from the left plane onto the right plane:
    /// `x ↦ (x ∨ left) ∩ right`. Errors when `x` lies in the left plane.
    pub fn project_to_right(&self, x: &Point) -> Result<Point> {
        let img = mat::sub_vec(x.coords(), &self.polar_involution.mul_vec(x.coords()));
        Point::new(img).map_err(|_| Error::CenterPlane)
    }

    /// Projection from the right plane onto the left plane:
    /// `x ↦ (x ∨ right) ∩ left`. Errors when `x` lies in the right plane.
    pub fn project_to_left(&self, x: &Point) -> Result<Point> {
        let img = mat::add_vec(x.coords(), &self.polar_involution.mul_vec(x.coords()));
        Point::new(img).map_err(|_| Error::CenterPlane)
    }

    pub fn project(&self, side: Side, x: &Point) -> Result<Point> {
        match side {
            // The "left image" of a line lives in the right plane and vice
            // versa: projecting *from* the left plane lands on the right.
            Side::Left => self.project_to_right(x),
            Side::Right => self.project_to_left(x),
        }
    }

    /// Left image of a line: common projection of its Klein image from the
    /// left plane (lies in the right plane).
    pub fn left_image(&self, a: &Line) -> Point {
        self.project_to_right(&a.klein_point())
            .expect("quadric avoids the invariant planes")
    }

    /// Right image of a line (lies in the left plane).
    pub fn right_image(&self, a: &Line) -> Point {
        self.project_to_left(&a.klein_point())
            .expect("quadric avoids the invariant planes")
    }

    /// The quadruple (left image, right image, point, polar point) is a
    /// harmonic range on the line joining the two projections.
    pub fn harmonic_range_check(&self, a: &Line) -> bool {
        let p = a.klein_point();
        let ap = self.involution_point(&p);
        let lam = self.left_image(a);
        let rho = self.right_image(a);
        cross_ratio(&lam, &rho, &p, &ap)
            == Ok(CrossRatio::Finite(-Scalar::one()))
    }

    /// Coordinates of a point of one invariant plane in that plane's RREF
    /// basis.
    pub fn plane_coords(&self, side: Side, p: &Point) -> Result<Vec<Scalar>> {
        let basis = self.plane(side).basis();
        basis
            .transpose()
            .solve(p.coords())
            .ok_or_else(|| Error::Internal("point does not lie in the plane".into()))
    }

    /// Embed plane coordinates back into PG(5).
    pub fn plane_point(&self, side: Side, coords: &[Scalar]) -> Result<Point> {
        assert_eq!(coords.len(), 3);
        let v = self.plane(side).basis().transpose().mul_vec(coords);
        Point::new(v)
    }

    /// Whether two points of the given invariant plane are conjugate under
    /// the polarity the quadric induces there.
    pub fn plane_conjugate(&self, _side: Side, p: &Point, q: &Point) -> bool {
        klein_bilinear(p.coords(), q.coords()).is_zero()
    }
}

/// Kernel of (alpha -/+ identity): the +1 eigenplane for `negate = false`,
/// the -1 eigenplane for `negate = true`.
fn eigenplane(alpha: &Mat, negate: bool) -> Subspace {
    let shift = if negate {
        alpha.add(&Mat::identity(6))
    } else {
        alpha.sub(&Mat::identity(6))
    };
    Subspace::from_rows(6, &shift.kernel())
}

fn basis_label_cmp(a: &Subspace, b: &Subspace) -> std::cmp::Ordering {
    let (ma, mb) = (a.basis(), b.basis());
    for i in 0..ma.rows().min(mb.rows()) {
        for j in 0..ma.cols() {
            let ord = scalar::label_cmp(&ma[(i, j)], &mb[(i, j)]);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
    }
    ma.rows().cmp(&mb.rows())
}

fn gram(basis: &Mat, form: &Mat) -> Mat {
    basis.mul(form).mul(&basis.transpose())
}

/// Which invariant plane a construction is anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Full classicality diagnosis for a candidate form. Unlike
/// [`EllipticSpace::new`], this never fails early: it reports how far the
/// form gets.
pub fn classicality_report(form: &Mat) -> ClassicalityReport {
    let mut report = ClassicalityReport {
        polarity_ok: false,
        anisotropic: false,
        involution_square: None,
        square_scalar: false,
        eigenplane_dims: None,
        witness: None,
        classical: false,
    };
    let Ok(polarity) = Polarity::new(form.clone()) else {
        return report;
    };
    report.polarity_ok = true;
    report.anisotropic = polarity.certify_anisotropic();

    let raw = dual_swap_matrix().mul(&second_compound(form));
    let square = raw.mul(&raw);
    let sigma = square[(0, 0)].clone();
    if square == Mat::identity(6).scale(&sigma) && !sigma.is_zero() {
        report.involution_square = Some(sigma.clone());
        report.square_scalar = scalar::is_square(&sigma);
        if report.square_scalar {
            let root = scalar::square_root(&sigma).unwrap();
            let alpha = raw.scale(&(Scalar::one() / root));
            let plus = eigenplane(&alpha, false);
            let minus = eigenplane(&alpha, true);
            report.eigenplane_dims = Some((plus.vdim(), minus.vdim()));
        }
    }

    if report.anisotropic {
        if let Ok(space) = EllipticSpace::new(polarity) {
            report.witness = crate::clifford::parallel_witness(&space);
            report.classical = report.witness.is_some();
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn pt(v: &[i64]) -> Point {
        Point::from_ints(v).unwrap()
    }

    fn ln(p: &[i64; 6]) -> Line {
        Line::from_ints(p).unwrap()
    }

    #[test]
    fn klein_map_of_coordinate_edges() {
        let e = |i: usize| {
            let mut v = [0i64; 4];
            v[i] = 1;
            pt(&v)
        };
        assert_eq!(klein_map(&e(0), &e(1)).unwrap(), ln(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(klein_map(&e(2), &e(3)).unwrap(), ln(&[0, 0, 0, 1, 0, 0]));
        assert_eq!(klein_map(&e(3), &e(1)).unwrap(), ln(&[0, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn klein_map_general_example() {
        let a = klein_map(&pt(&[1, 1, 0, 0]), &pt(&[0, 0, 1, 1])).unwrap();
        assert_eq!(a, ln(&[0, 1, 1, 0, -1, 1]));
        assert!(omega(a.plucker()).is_zero());
    }

    #[test]
    fn klein_map_rejects_coincident_points() {
        assert_eq!(
            klein_map(&pt(&[1, 2, 3, 4]), &pt(&[2, 4, 6, 8])),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn line_constructor_enforces_quadric() {
        assert_eq!(Line::from_ints(&[1, 0, 0, 1, 0, 0]), Err(Error::NotOnQuadric));
        assert!(Line::from_ints(&[1, 0, 2, 2, 0, -1]).is_ok());
    }

    #[test]
    fn klein_inverse_roundtrip_examples() {
        for p in [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 1, 0, -1, 1],
            [1, 1, 0, -1, 1, 0],
            [1, 0, 2, 2, 0, -1],
        ] {
            let line = ln(&p);
            let (x, y) = klein_inverse(&line);
            assert_ne!(x, y);
            assert_eq!(klein_map(&x, &y).unwrap(), line);
        }
    }

    #[test]
    fn meeting_criterion_examples() {
        let a = ln(&[1, 0, 0, 0, 0, 0]); // e0 ∨ e1
        let b = ln(&[0, 1, 0, 0, 0, 0]); // e0 ∨ e2
        let c = ln(&[0, 0, 0, 1, 0, 0]); // e2 ∨ e3
        assert!(lines_meet(&a, &b));
        assert!(!lines_meet(&a, &c));
        assert_eq!(klein_bilinear(a.plucker(), c.plucker()), int(1));
    }

    #[test]
    fn second_compound_identity_and_diagonal() {
        assert_eq!(second_compound(&Mat::identity(4)), Mat::identity(6));
        let m = Mat::from_int_rows(&[
            &[-1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        let c = second_compound(&m);
        let want = Mat::from_rows(vec![
            vec![int(-1), int(0), int(0), int(0), int(0), int(0)],
            vec![int(0), int(-1), int(0), int(0), int(0), int(0)],
            vec![int(0), int(0), int(-1), int(0), int(0), int(0)],
            vec![int(0), int(0), int(0), int(1), int(0), int(0)],
            vec![int(0), int(0), int(0), int(0), int(1), int(0)],
            vec![int(0), int(0), int(0), int(0), int(0), int(1)],
        ]);
        assert_eq!(c, want);
    }

    #[test]
    fn standard_space_structure() {
        let es = EllipticSpace::standard();
        // Left plane: (n | n). Right plane: (n | -n).
        let left = Mat::from_int_rows(&[
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0, 1],
        ]);
        let right = Mat::from_int_rows(&[
            &[1, 0, 0, -1, 0, 0],
            &[0, 1, 0, 0, -1, 0],
            &[0, 0, 1, 0, 0, -1],
        ]);
        assert_eq!(es.left_plane().basis(), &left);
        assert_eq!(es.right_plane().basis(), &right);
        // Restricted forms are (twice) the dot product, up to sign.
        assert_eq!(es.left_form(), &Mat::identity(3).scale(&int(2)));
        assert_eq!(es.right_form(), &Mat::identity(3).scale(&int(-2)));
    }

    #[test]
    fn polar_line_on_plucker_coordinates() {
        let es = EllipticSpace::standard();
        let a = ln(&[1, 0, 0, 0, 0, 0]);
        assert_eq!(es.polar_line(&a), ln(&[0, 0, 0, 1, 0, 0]));
        // Matches the geometric polar computed through the polarity.
        let polar_subspace = es.polarity().polar(&a.to_subspace());
        let pts = polar_subspace.basis_points();
        let geometric = klein_map(&pts[0], &pts[1]).unwrap();
        assert_eq!(es.polar_line(&a), geometric);
    }

    #[test]
    fn projections_of_a_coordinate_line() {
        let es = EllipticSpace::standard();
        let a = ln(&[1, 0, 0, 0, 0, 0]);
        assert_eq!(es.left_image(&a), pt(&[1, 0, 0, -1, 0, 0]));
        assert_eq!(es.right_image(&a), pt(&[1, 0, 0, 1, 0, 0]));
        // Projections agree with the span/meet definition.
        let join = es.left_plane().span_point(&a.klein_point());
        let lam = join.meet(es.right_plane());
        assert_eq!(lam.as_point().unwrap(), es.left_image(&a));
        let join = es.right_plane().span_point(&a.klein_point());
        let rho = join.meet(es.left_plane());
        assert_eq!(rho.as_point().unwrap(), es.right_image(&a));
    }

    #[test]
    fn projection_rejects_plane_points() {
        let es = EllipticSpace::standard();
        let in_left = pt(&[1, 0, 0, 1, 0, 0]);
        assert_eq!(es.project_to_right(&in_left), Err(Error::CenterPlane));
    }

    #[test]
    fn harmonic_range_example() {
        let es = EllipticSpace::standard();
        let a = ln(&[1, 0, 0, 0, 0, 0]);
        assert!(es.harmonic_range_check(&a));
        let lam = es.left_image(&a);
        let rho = es.right_image(&a);
        let p = a.klein_point();
        let ap = es.involution_point(&p);
        assert_eq!(
            cross_ratio(&lam, &rho, &p, &ap).unwrap(),
            CrossRatio::Finite(int(-1))
        );
    }

    #[test]
    fn scaled_diagonal_form_is_classical() {
        let form = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 4, 0],
            &[0, 0, 0, 4],
        ]);
        let es = EllipticSpace::new(Polarity::new(form).unwrap()).unwrap();
        let sq = es.polar_involution().mul(es.polar_involution());
        assert_eq!(sq, Mat::identity(6));
        assert_eq!(es.left_plane().vdim(), 3);
        // Restricted form stays definite.
        let (_, diag) = es.left_form().congruent_diagonalize();
        assert!(diag.iter().all(|d| scalar::sign(d) == scalar::sign(&diag[0])));
    }

    #[test]
    fn nonsquare_determinant_is_not_classical() {
        let form = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 2],
        ]);
        let err = EllipticSpace::new(Polarity::new(form.clone()).unwrap()).unwrap_err();
        match err {
            Error::NotClassical(msg) => assert!(msg.contains('2'), "message: {msg}"),
            other => panic!("expected NotClassical, got {other:?}"),
        }
        let report = classicality_report(&form);
        assert!(report.polarity_ok && report.anisotropic);
        assert_eq!(report.involution_square, Some(int(2)));
        assert!(!report.square_scalar);
        assert!(!report.classical);
    }

    #[test]
    fn indefinite_form_is_rejected() {
        let form = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
        ]);
        let err = EllipticSpace::new(Polarity::new(form.clone()).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotAnisotropic);
        let report = classicality_report(&form);
        assert!(report.polarity_ok);
        assert!(!report.anisotropic);
        assert!(!report.classical);
    }

    #[test]
    fn plane_coordinates_roundtrip() {
        let es = EllipticSpace::standard();
        let p = pt(&[1, 2, -3, 1, 2, -3]);
        let coords = es.plane_coords(Side::Left, &p).unwrap();
        assert_eq!(coords, vec![int(1), int(2), int(-3)]);
        assert_eq!(es.plane_point(Side::Left, &coords).unwrap(), p);
        assert!(es.plane_coords(Side::Left, &pt(&[1, 0, 0, -1, 0, 0])).is_err());
    }

    #[test]
    fn star_plane_lies_on_quadric() {
        let q = pt(&[1, -2, 0, 3]);
        let star = star_plane(&q);
        assert_eq!(star.dim(), 2);
        for p in star.basis_points() {
            assert!(omega(p.coords()).is_zero());
        }
        // The sum of two basis vectors stays on the quadric: the plane is
        // entirely contained in it.
        let s = mat::add_vec(star.basis().row(0), star.basis().row(1));
        assert!(omega(&s).is_zero());
    }

    #[test]
    fn block_form_is_classical() {
        let form = Mat::from_int_rows(&[
            &[2, 1, 0, 0],
            &[1, 2, 0, 0],
            &[0, 0, 2, 1],
            &[0, 0, 1, 2],
        ]);
        let es = EllipticSpace::new(Polarity::new(form).unwrap()).unwrap();
        assert_eq!(es.polar_involution().mul(es.polar_involution()), Mat::identity(6));
        let a = klein_map(&pt(&[1, 0, 0, 0]), &pt(&[0, 1, 0, 0])).unwrap();
        assert!(es.harmonic_range_check(&a));
    }

    #[test]
    fn labeling_is_deterministic_and_detectably_swapped() {
        let es = EllipticSpace::standard();
        let swapped = es.with_swapped_labels_for_tests();
        assert_ne!(es.left_plane(), swapped.left_plane());
        assert!(basis_label_cmp(es.left_plane(), es.right_plane()).is_le());
        assert!(basis_label_cmp(swapped.left_plane(), swapped.right_plane()).is_gt());
    }

    #[test]
    fn half_integer_scalars_survive_normalization() {
        let p = Point::new(vec![frac(1, 2), int(1), int(0), int(0)]).unwrap();
        assert_eq!(p, pt(&[1, 2, 0, 0]));
    }

    fn arb_point4() -> impl Strategy<Value = Point> {
        proptest::collection::vec(-9i64..=9, 4)
            .prop_filter("nonzero", |v| v.iter().any(|&n| n != 0))
            .prop_map(|v| Point::from_ints(&v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn images_lie_on_quadric(x in arb_point4(), y in arb_point4()) {
            prop_assume!(x != y);
            let line = klein_map(&x, &y).unwrap();
            prop_assert!(omega(line.plucker()).is_zero());
            let (u, v) = klein_inverse(&line);
            prop_assert_eq!(klein_map(&u, &v).unwrap(), line);
        }

        #[test]
        fn meeting_matches_rank(x in arb_point4(), y in arb_point4(), z in arb_point4(), w in arb_point4()) {
            prop_assume!(x != y && z != w);
            let a = klein_map(&x, &y).unwrap();
            let b = klein_map(&z, &w).unwrap();
            let stack = Mat::from_rows(vec![
                x.coords().to_vec(), y.coords().to_vec(),
                z.coords().to_vec(), w.coords().to_vec(),
            ]);
            prop_assert_eq!(lines_meet(&a, &b), stack.rank() <= 3);
        }

        #[test]
        fn involution_matches_geometric_polar(x in arb_point4(), y in arb_point4()) {
            prop_assume!(x != y);
            let es = EllipticSpace::standard();
            let a = klein_map(&x, &y).unwrap();
            let polar = es.polarity().polar(&a.to_subspace());
            let pts = polar.basis_points();
            let geometric = klein_map(&pts[0], &pts[1]).unwrap();
            prop_assert_eq!(es.polar_line(&a), geometric);
            // The polar involution really is involutive on lines.
            prop_assert_eq!(es.polar_line(&es.polar_line(&a)), a.clone());
            // A line and its polar are skew.
            prop_assert!(!lines_meet(&a, &es.polar_line(&a)));
        }

        #[test]
        fn harmonic_range_universal(x in arb_point4(), y in arb_point4()) {
            prop_assume!(x != y);
            let es = EllipticSpace::standard();
            let a = klein_map(&x, &y).unwrap();
            prop_assert!(es.harmonic_range_check(&a));
        }
    }
}
