//! Polarities of PG(3, Q) given by symmetric invertible 4x4 forms, with the
//! anisotropy certificate that admits a form as elliptic.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::projective::{Point, Subspace};
use crate::scalar::{sign, Scalar};

/// A projective polarity of PG(3, Q): x and y are conjugate when
/// `x^T M y = 0`. The matrix is symmetric and invertible by construction;
/// anisotropy is certified separately (see [`Polarity::certify_anisotropic`])
/// and enforced where an elliptic space is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarity {
    form: Mat,
}

impl Polarity {
    pub fn new(form: Mat) -> Result<Polarity> {
        if form.rows() != 4 || form.cols() != 4 {
            return Err(Error::AmbientMismatch { expected: 4, found: form.rows() });
        }
        if !form.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if form.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(Polarity { form })
    }

    /// The standard elliptic polarity (identity form).
    pub fn standard() -> Polarity {
        Polarity { form: Mat::identity(4) }
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    /// Whether the form is definite after exact rational diagonalization.
    ///
    /// Definiteness over Q implies definiteness over R, hence no nonzero
    /// isotropic vectors at all: the polarity has no self-conjugate points.
    pub fn certify_anisotropic(&self) -> bool {
        let (_, diag) = self.form.congruent_diagonalize();
        let signs: Vec<i8> = diag.iter().map(sign).collect();
        signs.iter().all(|&s| s == 1) || signs.iter().all(|&s| s == -1)
    }

    pub fn conjugate(&self, x: &Point, y: &Point) -> bool {
        self.apply_form(x.coords(), y.coords()).is_zero()
    }

    pub fn apply_form(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::mat::dot(&self.form.mul_vec(y), x)
    }

    /// Polar subspace: all points conjugate to every point of `s`.
    ///
    /// A point, line, or plane maps to its polar plane, line, or point; the
    /// polar of the empty subspace is the whole space.
    pub fn polar(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient(), 4, "polarity acts on PG(3)");
        let conditions = s.basis().mul(&self.form);
        Subspace::from_rows(4, &conditions.kernel())
    }

    pub fn polar_point(&self, p: &Point) -> Subspace {
        self.polar(&Subspace::point(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::Point;

    fn pt(v: &[i64]) -> Point {
        Point::from_ints(v).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_forms() {
        let asym = Mat::from_int_rows(&[
            &[1, 1, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(Polarity::new(asym), Err(Error::NotSymmetric));
        let sing = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 1],
        ]);
        assert_eq!(Polarity::new(sing), Err(Error::Singular));
    }

    #[test]
    fn anisotropy_certificate() {
        assert!(Polarity::standard().certify_anisotropic());
        let diag_pos = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 2, 0, 0],
            &[0, 0, 3, 0],
            &[0, 0, 0, 5],
        ]);
        assert!(Polarity::new(diag_pos).unwrap().certify_anisotropic());
        let indef = Mat::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
        ]);
        assert!(!Polarity::new(indef).unwrap().certify_anisotropic());
    }

    #[test]
    fn polar_of_point_is_coordinate_plane() {
        let pi = Polarity::standard();
        let plane = pi.polar_point(&pt(&[1, 0, 0, 0]));
        assert_eq!(plane.dim(), 2);
        assert_eq!(
            plane.basis(),
            &Mat::from_int_rows(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn polar_of_line_is_opposite_edge() {
        let pi = Polarity::standard();
        let line = Subspace::from_points(&[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])]).unwrap();
        let polar = pi.polar(&line);
        assert_eq!(polar.dim(), 1);
        assert!(polar.contains_point(&pt(&[0, 0, 1, 0])));
        assert!(polar.contains_point(&pt(&[0, 0, 0, 1])));
        // A line and its polar are complementary in an elliptic polarity.
        assert!(line.meet(&polar).is_empty());
    }

    #[test]
    fn polar_of_plane_is_point() {
        let pi = Polarity::standard();
        let plane =
            Subspace::from_points(&[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0]), pt(&[0, 0, 1, 0])])
                .unwrap();
        let polar = pi.polar(&plane);
        assert_eq!(polar.dim(), 0);
        assert_eq!(polar.as_point().unwrap(), pt(&[0, 0, 0, 1]));
    }

    #[test]
    fn conjugacy_is_symmetric_and_never_reflexive() {
        let pi = Polarity::standard();
        assert!(pi.conjugate(&pt(&[1, 0, 0, 0]), &pt(&[0, 1, 0, 0])));
        assert!(!pi.conjugate(&pt(&[1, 1, 0, 0]), &pt(&[1, 0, 0, 0])));
        // No self-conjugate points for an anisotropic form.
        for v in [[1, 2, 3, 4], [1, -1, 0, 2], [0, 0, 1, -5]] {
            let p = pt(&v);
            assert!(!pi.conjugate(&p, &p));
        }
    }

    #[test]
    fn polarity_is_involutive_and_inclusion_reversing() {
        let form = Mat::from_int_rows(&[
            &[2, 1, 0, 0],
            &[1, 2, 0, 0],
            &[0, 0, 2, 1],
            &[0, 0, 1, 2],
        ]);
        let pi = Polarity::new(form).unwrap();
        assert!(pi.certify_anisotropic());
        let line = Subspace::from_points(&[pt(&[1, 2, 0, 1]), pt(&[0, 1, 1, 0])]).unwrap();
        let polar = pi.polar(&line);
        assert_eq!(pi.polar(&polar), line);
        let p = pt(&[1, 2, 0, 1]);
        let plane = pi.polar_point(&p);
        // p on the line, so the line's polar lies inside p's polar plane.
        assert!(plane.contains(&polar));
    }
}
