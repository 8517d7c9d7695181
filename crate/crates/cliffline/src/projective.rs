//! Projective points and subspaces with exact span/meet/incidence, plus the
//! cross ratio and harmonic conjugates on lines.
//!
//! A subspace is represented by the RREF basis of its underlying vector
//! space, so equality of subspaces is structural equality of matrices. The
//! empty subspace (projective dimension -1) is a first-class value: it is
//! what the meet of complementary subspaces returns.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mat::{self, Mat};
use crate::scalar::Scalar;

/// A projective point: nonzero homogeneous coordinates, normalized so the
/// first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Result<Point> {
        let coords = mat::normalize_projective(&coords).ok_or(Error::ZeroVector)?;
        Ok(Point { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Point> {
        Point::new(coords.iter().map(|&n| crate::scalar::int(n)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn ambient(&self) -> usize {
        self.coords.len()
    }
}

/// A projective subspace of PG(n-1, Q), held as an RREF basis matrix whose
/// rows span the underlying vector space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    /// Empty subspace (projective dimension -1).
    pub fn empty(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(0, ambient) }
    }

    /// Whole space PG(ambient-1).
    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(ambient) }
    }

    /// Subspace spanned by the rows of `gens` (not necessarily independent).
    pub fn from_rows(ambient: usize, gens: &Mat) -> Subspace {
        assert_eq!(gens.cols(), ambient, "generator width must match ambient");
        let red = gens.rref();
        let rows: Vec<Vec<Scalar>> =
            (0..red.rank).map(|i| red.mat.row(i).to_vec()).collect();
        let basis = if rows.is_empty() { Mat::zeros(0, ambient) } else { Mat::from_rows(rows) };
        Subspace { ambient, basis }
    }

    pub fn from_points(points: &[Point]) -> Result<Subspace> {
        let ambient = points.first().ok_or(Error::ZeroVector)?.ambient();
        for p in points {
            if p.ambient() != ambient {
                return Err(Error::AmbientMismatch { expected: ambient, found: p.ambient() });
            }
        }
        let gens = Mat::from_rows(points.iter().map(|p| p.coords().to_vec()).collect());
        Ok(Subspace::from_rows(ambient, &gens))
    }

    pub fn point(p: &Point) -> Subspace {
        Subspace::from_rows(p.ambient(), &Mat::from_rows(vec![p.coords().to_vec()]))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// RREF basis matrix; one row per vector-space dimension.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Dimension of the underlying vector space.
    pub fn vdim(&self) -> usize {
        self.basis.rows()
    }

    /// Projective dimension: -1 for the empty subspace.
    pub fn dim(&self) -> isize {
        self.basis.rows() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.rows() == 0
    }

    pub fn basis_points(&self) -> Vec<Point> {
        (0..self.vdim())
            .map(|i| Point::new(self.basis.row(i).to_vec()).expect("basis rows are nonzero"))
            .collect()
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if mat::is_zero_vec(v) {
            return true;
        }
        let stacked = self.basis.stack(&Mat::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.vdim()
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.contains_vec(p.coords())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.vdim()).all(|i| self.contains_vec(other.basis.row(i)))
    }

    /// Join: smallest subspace containing both.
    pub fn span(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in span");
        Subspace::from_rows(self.ambient, &self.basis.stack(&other.basis))
    }

    pub fn span_point(&self, p: &Point) -> Subspace {
        self.span(&Subspace::point(p))
    }

    /// Meet: intersection of the two subspaces.
    ///
    /// Each subspace is the solution set of its annihilator, so the meet is
    /// the kernel of the stacked annihilators.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in meet");
        let ann_a = self.basis.kernel();
        let ann_b = other.basis.kernel();
        let joint = ann_a.stack(&ann_b);
        Subspace::from_rows(self.ambient, &joint.kernel())
    }

    /// The single point of a zero-dimensional subspace.
    pub fn as_point(&self) -> Result<Point> {
        if self.vdim() != 1 {
            return Err(Error::Internal(format!(
                "expected a point, got projective dimension {}",
                self.dim()
            )));
        }
        Point::new(self.basis.row(0).to_vec())
    }
}

/// Exact cross ratio of four collinear points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Scalar),
    Infinite,
}

/// Cross ratio (a, b; c, d).
///
/// With representatives chosen so that c = a + b, the value is the parameter
/// k with d = k*a + b; equivalently (c2*d1)/(c1*d2) in the basis (a, b).
/// Requires the four points collinear with at least three distinct.
pub fn cross_ratio(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<CrossRatio> {
    if a == b {
        return Err(Error::DegenerateCrossRatio);
    }
    let base = Mat::from_rows(vec![a.coords().to_vec(), b.coords().to_vec()]).transpose();
    let cc = base.solve(c.coords()).ok_or(Error::NotCollinear)?;
    let dd = base.solve(d.coords()).ok_or(Error::NotCollinear)?;
    let num = &cc[1] * &dd[0];
    let den = &cc[0] * &dd[1];
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(Error::DegenerateCrossRatio),
        (false, true) => Ok(CrossRatio::Infinite),
        _ => Ok(CrossRatio::Finite(num / den)),
    }
}

/// The fourth harmonic point: the unique d with (a, b; c, d) = -1.
///
/// Requires a, b, c pairwise distinct and collinear.
pub fn harmonic_conjugate(a: &Point, b: &Point, c: &Point) -> Result<Point> {
    if a == b || c == a || c == b {
        return Err(Error::DegenerateCrossRatio);
    }
    let base = Mat::from_rows(vec![a.coords().to_vec(), b.coords().to_vec()]).transpose();
    let cc = base.solve(c.coords()).ok_or(Error::NotCollinear)?;
    let d = mat::sub_vec(
        &mat::scale_vec(b.coords(), &cc[1]),
        &mat::scale_vec(a.coords(), &cc[0]),
    );
    Point::new(d)
}
