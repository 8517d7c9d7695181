//! Dense matrices over the exact rational scalars, with the row-reduction
//! routines the geometric layers are built on.
//!
//! Pivoting always selects the first row with a nonzero entry in the current
//! column, so reduced forms are canonical: two row-equivalent matrices have
//! identical RREF, which is what makes subspace equality structural.

use num_traits::{One, Zero};
use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Convenience constructor for integer-entried fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::scalar::int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let data = self.data.iter().map(|a| a * s).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    /// Vertical stack.
    pub fn stack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Scalar::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{x : self * x = 0}`, one row per free
    /// column of the RREF (that column's entry set to 1).
    pub fn kernel(&self) -> Mat {
        let Rref { mat, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -mat[(i, f)].clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Mat::zeros(0, self.cols)
        } else {
            Mat::from_rows(rows)
        }
    }

    /// Determinant by Gaussian elimination; square matrices only.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det *= m[(c, c)].clone();
            let inv = Scalar::one() / m[(c, c)].clone();
            for i in (c + 1)..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(i, j)] - &(&f * &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let red = aug.rref();
        if red.rank < n || red.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red.mat[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One exact solution of `self * x = rhs` (free variables set to zero),
    /// or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, rhs.len(), "dimension mismatch in solve");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let red = aug.rref();
        if red.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in red.pivots.iter().enumerate() {
            x[p] = red.mat[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Congruent diagonalization of a symmetric matrix: returns `(t, d)` with
    /// `t * self * t^T` diagonal with entries `d`.
    pub fn congruent_diagonalize(&self) -> (Mat, Vec<Scalar>) {
        assert!(self.is_symmetric(), "congruent diagonalization of a non-symmetric matrix");
        let n = self.rows;
        let mut g = self.clone();
        let mut t = Mat::identity(n);
        for i in 0..n {
            if g[(i, i)].is_zero() {
                if let Some(j) = ((i + 1)..n).find(|&j| !g[(j, j)].is_zero()) {
                    g.swap_rows(i, j);
                    g.swap_cols(i, j);
                    t.swap_rows(i, j);
                } else if let Some((j, k)) = first_offdiag(&g, i) {
                    // Pull a nonzero onto the diagonal: row/col j += row/col k.
                    g.add_row(j, k, &Scalar::one());
                    g.add_col(j, k, &Scalar::one());
                    t.add_row(j, k, &Scalar::one());
                    if j != i {
                        g.swap_rows(i, j);
                        g.swap_cols(i, j);
                        t.swap_rows(i, j);
                    }
                } else {
                    break; // trailing block is zero
                }
            }
            let d = g[(i, i)].clone();
            for j in 0..n {
                if j != i && !g[(j, i)].is_zero() {
                    let f = -(&g[(j, i)] / &d);
                    g.add_row(j, i, &f);
                    g.add_col(j, i, &f);
                    t.add_row(j, i, &f);
                }
            }
        }
        let diag = (0..n).map(|i| g[(i, i)].clone()).collect();
        (t, diag)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &Scalar) {
        for j in 0..self.cols {
            let v = &self[(dst, j)] + &(f * &self[(src, j)]);
            self[(dst, j)] = v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &Scalar) {
        for i in 0..self.rows {
            let v = &self[(i, dst)] + &(f * &self[(i, src)]);
            self[(i, dst)] = v;
        }
    }
}

fn first_offdiag(g: &Mat, from: usize) -> Option<(usize, usize)> {
    for j in from..g.rows() {
        for k in (j + 1)..g.cols() {
            if !g[(j, k)].is_zero() {
                return Some((j, k));
            }
        }
    }
    None
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dimension mismatch in dot product");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(v: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scale a vector so its first nonzero entry is 1; `None` for the zero vector.
pub fn normalize_projective(v: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = Scalar::one() / lead.clone();
    Some(scale_vec(v, &inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_is_fixed() {
        let m = Mat::identity(3);
        let r = m.rref();
        assert_eq!(r.mat, m);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.mat.row(0), &[int(1), int(2)][..]);
        assert!(is_zero_vec(r.mat.row(1)));
    }

    #[test]
    fn rref_of_line_images_stack() {
        // Plücker vectors of four pairwise-distinct concurrent/skew lines
        // through the coordinate tetrahedron span a 4-space.
        let m = Mat::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Mat::zeros(2, 3);
        let k = m.kernel();
        assert_eq!(k.rows(), 3);
        assert_eq!(k, Mat::identity(3));
    }

    #[test]
    fn kernel_of_coordinate_form() {
        let m = Mat::from_int_rows(&[&[1, 0, 0, 0]]);
        let k = m.kernel();
        assert_eq!(k.rows(), 3);
        for i in 0..3 {
            assert!(dot(m.row(0), k.row(i)).is_zero());
        }
        assert!(k.row_vecs().contains(&vec![int(0), int(1), int(0), int(0)]));
    }

    #[test]
    fn kernel_of_transversal_conditions() {
        // Hyperplane conditions x23 = x01 = x31 = x02 = 0 in the ordering
        // (p01, p02, p03, p23, p31, p12): kernel is spanned by e3 and e6.
        let m = Mat::from_int_rows(&[
            &[0, 0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
        ]);
        let k = m.kernel();
        assert_eq!(m.rank(), 4);
        assert_eq!(k.rows(), 2);
        let want = Mat::from_int_rows(&[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]]);
        assert_eq!(k.rref().mat, want);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_int_rows(&[&[2, 1], &[1, 1]]);
        let x = m.solve(&[int(3), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert_eq!(m.det(), int(1));

        let sing = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.det(), int(0));
        assert!(sing.solve(&[int(1), int(0)]).is_none());
    }

    #[test]
    fn congruent_diagonalization_certificate() {
        let m = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        let (t, d) = m.congruent_diagonalize();
        let back = t.mul(&m).mul(&t.transpose());
        for i in 0..2 {
            assert_eq!(back[(i, i)], d[i]);
            for j in 0..2 {
                if i != j {
                    assert!(back[(i, j)].is_zero());
                }
            }
        }
        // A hyperbolic plane diagonalizes with opposite signs.
        assert_eq!(crate::scalar::sign(&d[0]) * crate::scalar::sign(&d[1]), -1);
    }

    #[test]
    fn normalize_projective_leading_one() {
        let v = vec![int(0), int(-2), int(4)];
        assert_eq!(normalize_projective(&v).unwrap(), vec![int(0), int(1), int(-2)]);
        assert!(normalize_projective(&[int(0), int(0)]).is_none());
    }

    fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
            Mat::from_rows(
                v.chunks(cols)
                    .map(|c| c.iter().map(|&n| int(n)).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rref_is_idempotent(m in arb_mat(3, 5)) {
            let r = m.rref();
            let rr = r.mat.rref();
            prop_assert_eq!(r.mat, rr.mat);
            prop_assert_eq!(r.rank, rr.rank);
        }

        #[test]
        fn kernel_annihilates(m in arb_mat(3, 5)) {
            let k = m.kernel();
            prop_assert_eq!(k.rows() + m.rank(), 5);
            for i in 0..k.rows() {
                prop_assert!(is_zero_vec(&m.mul_vec(k.row(i))));
            }
        }

        #[test]
        fn diagonalize_symmetric(m in arb_mat(3, 3)) {
            let s = m.add(&m.transpose());
            let (t, d) = s.congruent_diagonalize();
            let back = t.mul(&s).mul(&t.transpose());
            for i in 0..3 {
                prop_assert_eq!(&back[(i, i)], &d[i]);
                for j in 0..3 {
                    if i != j {
                        prop_assert!(back[(i, j)].is_zero());
                    }
                }
            }
        }

        #[test]
        fn det_matches_invertibility(m in arb_mat(3, 3)) {
            let inv = m.inverse();
            prop_assert_eq!(m.det().is_zero(), inv.is_none());
            if let Some(ref inv) = inv {
                prop_assert_eq!(m.mul(inv), Mat::identity(3));
            }
        }
    }
}
