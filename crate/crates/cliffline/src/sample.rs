//! Deterministic random generation of rational test instances.
//!
//! All randomized checks draw through a [`Sampler`] seeded from a `u64`, so
//! every run with the same seed examines exactly the same instances on every
//! platform. Coordinates are small integers, which keeps the exact
//! arithmetic fast while still exercising generic position.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::klein::{klein_map, Line};
use crate::mat::Mat;
use crate::projective::Point;
use crate::scalar::{int, Scalar};

const COORD_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

/// Deterministic source of random projective data.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream for a named sub-task: hash the name into the seed
    /// so distinct scenarios never share a stream, regardless of the order
    /// they run in.
    pub fn derive(seed: u64, name: &str) -> Sampler {
        // FNV-1a, for a stable and dependency-free string hash.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in name.bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        Sampler::new(seed ^ h)
    }

    fn coord(&mut self) -> Scalar {
        int(self.rng.gen_range(COORD_RANGE))
    }

    pub fn usize_below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    /// A random point of PG(3).
    pub fn point4(&mut self) -> Point {
        loop {
            let v: Vec<Scalar> = (0..4).map(|_| self.coord()).collect();
            if let Ok(p) = Point::new(v) {
                return p;
            }
        }
    }

    /// A random point of PG(3) distinct from (and hence spanning a line
    /// with) the given one.
    pub fn point4_independent(&mut self, other: &Point) -> Point {
        loop {
            let p = self.point4();
            if p != *other {
                return p;
            }
        }
    }

    /// A random line of PG(3).
    pub fn line(&mut self) -> Line {
        let x = self.point4();
        let y = self.point4_independent(&x);
        klein_map(&x, &y).expect("distinct points span a line")
    }

    /// A random line distinct from the given one.
    pub fn line_other_than(&mut self, avoid: &Line) -> Line {
        loop {
            let l = self.line();
            if l != *avoid {
                return l;
            }
        }
    }

    /// A random point on the given line: a random combination of two
    /// spanning points.
    pub fn point_on_line(&mut self, line: &Line) -> Point {
        let sub = line.to_subspace();
        let basis = sub.basis();
        loop {
            let (s, t) = (self.coord(), self.coord());
            let v: Vec<Scalar> = (0..basis.cols())
                .map(|j| &(&s * &basis[(0, j)]) + &(&t * &basis[(1, j)]))
                .collect();
            if let Ok(p) = Point::new(v) {
                return p;
            }
        }
    }

    /// A random invertible 4x4 integer matrix.
    pub fn invertible4(&mut self) -> Mat {
        loop {
            let rows: Vec<Vec<Scalar>> =
                (0..4).map(|_| (0..4).map(|_| self.coord()).collect()).collect();
            let m = Mat::from_rows(rows);
            if m.inverse().is_some() {
                return m;
            }
        }
    }
}
