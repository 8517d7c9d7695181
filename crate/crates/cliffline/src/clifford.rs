//! Clifford parallelism: the relations between lines of a classical
//! elliptic space (orthogonal intersection, relatedness, left/right/Clifford
//! parallelism), parallel spreads and their reguli, and an independent
//! transversal-counting oracle that decides parallelism straight from its
//! definition as "at least three common orthogonal transversals".

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::klein::{klein_bilinear, klein_form_matrix, omega, star_plane, EllipticSpace, Line, Side};
use crate::mat::{self, Mat};
use crate::projective::{Point, Subspace};
use crate::sample::Sampler;
use crate::scalar::{self, int, Scalar};

/// Height bound for the rational-point search in the one branch of the
/// transversal oracle that is not otherwise decided.
pub const SEARCH_HEIGHT: u64 = 50;

/// Orthogonal intersection: `a` meets both `b` and the polar line of `b`.
///
/// Computed as vanishing of the Klein form against the image of `b` and
/// against its polar-involution image. The relation is symmetric because
/// the involution is self-adjoint for the Klein form.
pub fn ortho_intersect(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    let (ag, bg) = (a.plucker(), b.plucker());
    klein_bilinear(ag, bg).is_zero()
        && klein_bilinear(ag, &es.polar_involution().mul_vec(bg)).is_zero()
}

/// Related lines: orthogonally intersecting or equal.
pub fn related(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    a == b || ortho_intersect(es, a, b)
}

/// Orthogonal intersection restated through the plane projections: the two
/// left images are conjugate in the right plane and the two right images
/// are conjugate in the left plane. Equivalent to [`ortho_intersect`];
/// kept separate so the equivalence itself can be property-tested.
pub fn ortho_intersect_via_projections(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    es.plane_conjugate(Side::Right, &es.left_image(a), &es.left_image(b))
        && es.plane_conjugate(Side::Left, &es.right_image(a), &es.right_image(b))
}

/// Left parallelism: equality of left images.
pub fn left_parallel(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    es.left_image(a) == es.left_image(b)
}

/// Right parallelism: equality of right images.
pub fn right_parallel(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    es.right_image(a) == es.right_image(b)
}

/// Clifford parallelism: left or right parallel.
pub fn clifford_parallel(es: &EllipticSpace, a: &Line, b: &Line) -> bool {
    left_parallel(es, a, b) || right_parallel(es, a, b)
}

pub fn side_parallel(es: &EllipticSpace, side: Side, a: &Line, b: &Line) -> bool {
    match side {
        Side::Left => left_parallel(es, a, b),
        Side::Right => right_parallel(es, a, b),
    }
}

/// Number of common orthogonal transversals of two lines: the lines `x`
/// with `x ≈ a` and `x ≈ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalCount {
    Finite(usize),
    Infinite,
    /// The restricted form needed a rational point on a conic and the
    /// bounded search found none; the bound is recorded.
    Inconclusive { search_height: u64 },
}

impl TransversalCount {
    pub fn is_conclusive(&self) -> bool {
        !matches!(self, TransversalCount::Inconclusive { .. })
    }
}

impl std::fmt::Display for TransversalCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TransversalCount::Finite(n) => write!(f, "Finite({n})"),
            TransversalCount::Infinite => write!(f, "Infinite"),
            TransversalCount::Inconclusive { search_height } => {
                write!(f, "Inconclusive(search height {search_height})")
            }
        }
    }
}

/// Count the common orthogonal transversals of `a` and `b` directly: the
/// quadric points inside the intersection of the four polar hyperplanes of
/// the images of `a`, `b` and their polar lines. Independent of the
/// projection machinery, so it can arbitrate the parallelism definitions.
pub fn transversal_count(es: &EllipticSpace, a: &Line, b: &Line) -> TransversalCount {
    let alpha = es.polar_involution();
    let vectors = [
        a.plucker().to_vec(),
        alpha.mul_vec(a.plucker()),
        b.plucker().to_vec(),
        alpha.mul_vec(b.plucker()),
    ];
    let b6 = klein_form_matrix();
    let constraints = Mat::from_rows(vectors.iter().map(|v| b6.mul_vec(v)).collect());
    if constraints.rank() <= 2 {
        // The four conditions span only the pair (a, polar of a): `b` is
        // that line or its polar, and every line meeting both qualifies.
        return TransversalCount::Infinite;
    }
    let w = Subspace::from_rows(6, &constraints.kernel());
    // Every transversal meets `a` and meets `b`, so its image lies in the
    // star plane of its foot on either line. Meeting a few rational feet's
    // star planes with W constructs rational quadric points of W whenever
    // the feet carry transversals — in particular for every genuinely
    // parallel pair, whose transversals sweep out all of `a` and `b`.
    let hints = if w.vdim() >= 3 {
        let mut hints = star_meet_hints(a, &w);
        hints.extend(star_meet_hints(b, &w));
        hints
    } else {
        Vec::new()
    };
    gamma_points_in_with_hints(&w, &hints)
}

/// Quadric points of `w` constructed by meeting `w` with the star planes
/// of a few rational points on `line`. Star planes lie entirely on the
/// quadric, so every vector of such a meet is a quadric point of `w`.
fn star_meet_hints(line: &Line, w: &Subspace) -> Vec<Vec<Scalar>> {
    let sub = line.to_subspace();
    let basis = sub.basis();
    let (p0, p1) = (basis.row(0), basis.row(1));
    let feet = [
        p0.to_vec(),
        p1.to_vec(),
        mat::add_vec(p0, p1),
        mat::add_vec(p0, &mat::scale_vec(p1, &int(2))),
    ];
    let mut hints = Vec::new();
    for foot in feet {
        let q = Point::new(foot).expect("line basis combinations are nonzero");
        let meet = star_plane(&q).meet(w);
        for row in meet.basis().row_vecs() {
            debug_assert!(omega(&row).is_zero());
            hints.push(row);
        }
    }
    hints
}

/// Count the points of the Klein quadric inside a subspace of PG(5), with
/// exact case analysis; the only undecided outcome is an indefinite
/// conic-or-surface with no rational point found by the bounded search.
pub fn gamma_points_in(w: &Subspace) -> TransversalCount {
    gamma_points_in_with_hints(w, &[])
}

/// [`gamma_points_in`] with caller-supplied candidate points: ambient
/// vectors already known to lie in `w` and on the quadric. Hints short-cut
/// the indefinite branch (one rational point on a rank-3 conic already
/// implies infinitely many).
pub fn gamma_points_in_with_hints(w: &Subspace, hints: &[Vec<Scalar>]) -> TransversalCount {
    use TransversalCount::{Finite, Infinite};
    assert_eq!(w.ambient(), 6);
    let k = w.vdim();
    match k {
        0 => Finite(0),
        1 => {
            if omega(w.basis().row(0)).is_zero() {
                Finite(1)
            } else {
                Finite(0)
            }
        }
        2 => {
            // The quadric restricted to a projective line is a binary
            // quadratic form; count its projective roots.
            let (u, v) = (w.basis().row(0), w.basis().row(1));
            let a = omega(u);
            let b = klein_bilinear(u, v);
            let c = omega(v);
            if a.is_zero() && b.is_zero() && c.is_zero() {
                return Infinite;
            }
            let disc = &(&b * &b) - &(&int(4) * &(&a * &c));
            if disc.is_zero() {
                Finite(1)
            } else if scalar::is_square(&disc) {
                Finite(2)
            } else {
                Finite(0)
            }
        }
        _ => {
            let basis = w.basis();
            let gram = basis.mul(&klein_form_matrix()).mul(&basis.transpose());
            if gram.is_zero() {
                // Totally isotropic subspace of projective dimension >= 2.
                return Infinite;
            }
            let rank = gram.rank();
            if k - rank >= 2 {
                // The radical alone is a line inside the quadric.
                return Infinite;
            }
            let (_, diag) = gram.congruent_diagonalize();
            let nonzero: Vec<Scalar> = diag.iter().filter(|d| !d.is_zero()).cloned().collect();
            debug_assert_eq!(nonzero.len(), rank);
            let signs: Vec<i8> = nonzero.iter().map(scalar::sign).collect();
            if signs.iter().all(|&s| s == signs[0]) {
                // Definite: anisotropic over the rationals, so the quadric
                // meets `w` in the radical point if there is one.
                return Finite(k - rank);
            }
            if rank == 2 {
                // One hyperbolic-or-anisotropic binary part plus a radical
                // point (k - rank = 1 here): exactly decided by whether the
                // binary part represents zero.
                let prod = -(&nonzero[0] * &nonzero[1]);
                return if scalar::is_square(&prod) { Infinite } else { Finite(k - rank) };
            }
            if rank >= 5 {
                // Indefinite rational forms in five or more variables
                // always represent zero.
                return Infinite;
            }
            // Indefinite of rank 3 or 4: a nontrivial zero outside the
            // radical yields an infinite rational family. Try the supplied
            // geometric candidates first, then a bounded coordinate search.
            for hint in hints {
                debug_assert!(w.contains_vec(hint) && omega(hint).is_zero());
                if !mat::is_zero_vec(&basis.mul(&klein_form_matrix()).mul_vec(hint)) {
                    return Infinite;
                }
            }
            let height = if rank == 3 { SEARCH_HEIGHT } else { 10 };
            if gram_zero_search(&gram, height as i64) {
                Infinite
            } else {
                TransversalCount::Inconclusive { search_height: height }
            }
        }
    }
}

/// Bounded search for a nontrivial, non-radical zero of the quadratic form
/// `q(c) = c·gram·cᵀ`: the leading coordinates sweep an integer box and the
/// last coordinate is solved exactly from the resulting quadratic, so every
/// zero whose leading-coordinate ratio has height at most `height` is found
/// regardless of the size of its last coordinate.
fn gram_zero_search(gram: &Mat, height: i64) -> bool {
    let k = gram.rows();
    let value = |c: &[Scalar]| -> Scalar {
        let gc = gram.mul_vec(c);
        mat::dot(c, &gc)
    };
    let non_radical = |c: &[Scalar]| !mat::is_zero_vec(&gram.mul_vec(c));
    // Basis vectors first: a zero diagonal entry is a quadric point.
    for i in 0..k {
        if gram[(i, i)].is_zero() {
            let mut c = vec![Scalar::zero(); k];
            c[i] = Scalar::one();
            if non_radical(&c) {
                return true;
            }
        }
    }
    // Odometer over the first k-1 coordinates (first kept nonnegative,
    // zeros allowed); the last coordinate u solves A·u² + B·u + C = 0.
    let a_coef = gram[(k - 1, k - 1)].clone();
    let mut lead = vec![0i64; k - 1];
    loop {
        // Advance.
        let mut i = k - 2;
        loop {
            if lead[i] < height {
                lead[i] += 1;
                break;
            }
            lead[i] = if i == 0 { 0 } else { -height };
            if i == 0 {
                return false;
            }
            i -= 1;
        }
        let c_lead: Vec<Scalar> = lead.iter().map(|&x| int(x)).collect();
        let mut b_coef = Scalar::zero();
        for (i, ci) in c_lead.iter().enumerate() {
            b_coef = &b_coef + &(ci * &gram[(i, k - 1)]);
        }
        let b_coef = &b_coef + &b_coef;
        let mut with_zero = c_lead.clone();
        with_zero.push(Scalar::zero());
        let c_coef = value(&with_zero);
        let mut roots: Vec<Scalar> = Vec::new();
        if a_coef.is_zero() {
            if !b_coef.is_zero() {
                roots.push(-&c_coef / &b_coef);
            } else if c_coef.is_zero() {
                roots.push(Scalar::zero());
            }
        } else {
            let disc = &(&b_coef * &b_coef) - &(&int(4) * &(&a_coef * &c_coef));
            if let Some(root) = scalar::square_root(&disc) {
                let two_a = &a_coef + &a_coef;
                roots.push(&(&-&b_coef + &root) / &two_a);
                roots.push(&(&-&b_coef - &root) / &two_a);
            }
        }
        for u in roots {
            let mut c = c_lead.clone();
            c.push(u);
            if !mat::is_zero_vec(&c) && value(&c).is_zero() && non_radical(&c) {
                return true;
            }
        }
    }
}

/// A parallel class of lines: all lines sharing one projection image with
/// the base. Its Klein image is the quadric section of a 3-dimensional
/// carrier subspace, and exactly one member passes through each point of
/// the space.
#[derive(Debug, Clone)]
pub struct Spread {
    base: Line,
    side: Side,
    carrier: Subspace,
}

impl Spread {
    pub fn new(es: &EllipticSpace, side: Side, base: Line) -> Spread {
        // Carrier: the invariant plane of the chosen side joined with the
        // base's Klein image. For the left spread that plane is the left
        // one (the common image then lies in the right plane).
        let carrier = es.plane(side).span_point(&base.klein_point());
        debug_assert_eq!(carrier.vdim(), 4);
        Spread { base, side, carrier }
    }

    pub fn base(&self) -> &Line {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The 3-space whose quadric section is the spread's Klein image.
    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    /// Membership: the Klein image lies in the carrier.
    pub fn contains(&self, x: &Line) -> bool {
        self.carrier.contains_point(&x.klein_point())
    }

    /// The unique member through a point: the star of lines through the
    /// point is a plane on the quadric, and it meets the carrier in a
    /// single quadric point.
    pub fn line_through(&self, q: &Point) -> Result<Line> {
        let meet = star_plane(q).meet(&self.carrier);
        let image = meet
            .as_point()
            .map_err(|_| Error::Internal("spread carrier meets a star plane degenerately".into()))?;
        Line::new(image.coords().to_vec())
            .map_err(|_| Error::Internal("spread member image left the quadric".into()))
    }
}

/// The unique member of a spread through a point of PG(3).
pub fn spread_line_through(_es: &EllipticSpace, spread: &Spread, q: &Point) -> Result<Line> {
    spread.line_through(q)
}

/// Members of a spread meeting a fixed transversal line: one member per
/// point of the transversal, forming a regulus.
#[derive(Debug, Clone)]
pub struct Regulus {
    spread: Spread,
    transversal: Line,
}

impl Regulus {
    pub fn new(spread: Spread, transversal: Line) -> Result<Regulus> {
        if spread.contains(&transversal) {
            return Err(Error::LineInSpread);
        }
        Ok(Regulus { spread, transversal })
    }

    pub fn spread(&self) -> &Spread {
        &self.spread
    }

    pub fn transversal(&self) -> &Line {
        &self.transversal
    }

    /// The member through a point of the transversal.
    pub fn member_at(&self, q: &Point) -> Result<Line> {
        if !self.transversal.contains(q) {
            return Err(Error::OutsideDomain);
        }
        self.spread.line_through(q)
    }

    /// Deterministically parametrized members: the transversal's points at
    /// parameters 0, 1, 2, ... and infinity give pairwise distinct members.
    pub fn sample_members(&self, count: usize) -> Vec<Line> {
        let sub = self.transversal.to_subspace();
        let basis = sub.basis();
        let mut out = Vec::with_capacity(count);
        for t in 0..count {
            let q = if t == 0 {
                Point::new(basis.row(1).to_vec()).expect("basis rows are nonzero")
            } else {
                let s = int(t as i64 - 1);
                let v: Vec<Scalar> = (0..basis.cols())
                    .map(|j| &basis[(0, j)] + &(&s * &basis[(1, j)]))
                    .collect();
                Point::new(v).expect("affine combination of independent rows")
            };
            out.push(self.member_at(&q).expect("parametrizing point lies on the transversal"));
        }
        out
    }
}

/// A Clifford-parallel companion of the coordinate line through the first
/// two basis points, lying in neither that line nor its polar: certifies
/// that the space genuinely carries Clifford parallelism. The companion is
/// confirmed by the transversal oracle before being returned.
pub fn parallel_witness(es: &EllipticSpace) -> Option<(Line, Line)> {
    let e0 = Point::from_ints(&[1, 0, 0, 0]).ok()?;
    let e1 = Point::from_ints(&[0, 1, 0, 0]).ok()?;
    let a = crate::klein::klein_map(&e0, &e1).ok()?;
    let a_polar = es.polar_line(&a);
    let spread = Spread::new(es, Side::Left, a.clone());
    let candidates = [
        [0, 1, 1, 0],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 0, 1],
        [1, 1, 1, 1],
    ];
    for cand in candidates {
        let q = Point::from_ints(&cand).ok()?;
        if a.contains(&q) || a_polar.contains(&q) {
            continue;
        }
        let Ok(b) = spread.line_through(&q) else { continue };
        if b == a || b == a_polar {
            continue;
        }
        if transversal_count(es, &a, &b) == TransversalCount::Infinite {
            return Some((a, b));
        }
    }
    None
}

/// One failed trial in a relation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationViolation {
    pub trial: u32,
    pub witness: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a sampled relation check: trial count, violations in trial
/// order, and the number of trials the oracle could not decide.
#[derive(Debug, Clone, Default)]
pub struct RelationReport {
    pub trials: u32,
    pub violations: Vec<RelationViolation>,
    pub inconclusive: u32,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn require_ortho(es: &EllipticSpace, a: &Line, b: &Line) -> Result<()> {
    if ortho_intersect(es, a, b) {
        Ok(())
    } else {
        Err(Error::NotRelated)
    }
}

/// For orthogonally intersecting `a`, `b`: through every sampled point the
/// members of the two left spreads intersect orthogonally, so each member
/// of the first spread has an orthogonal partner in the second.
pub fn check_relation_6(
    es: &EllipticSpace,
    a: &Line,
    b: &Line,
    sampler: &mut Sampler,
    trials: u32,
) -> Result<RelationReport> {
    require_ortho(es, a, b)?;
    let sl_a = Spread::new(es, Side::Left, a.clone());
    let sl_b = Spread::new(es, Side::Left, b.clone());
    let mut report = RelationReport { trials, ..Default::default() };
    for trial in 0..trials {
        let q = sampler.point4();
        let x = sl_a.line_through(&q)?;
        let y = sl_b.line_through(&q)?;
        if !ortho_intersect(es, &x, &y) {
            report.violations.push(RelationViolation {
                trial,
                witness: format!("point ({}) members ({x}) and ({y})", scalar::fmt_vec(q.coords())),
                expected: "members through a common point intersect orthogonally".into(),
                actual: "orthogonal intersection fails".into(),
            });
        }
    }
    Ok(report)
}

/// Whether some member of a spread intersects a given line orthogonally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartnerDecision {
    Yes,
    No,
    Undecided { search_height: u64 },
}

/// Decide whether some member of the given spread intersects `x`
/// orthogonally: quadric points in the carrier cut by the two polar
/// hyperplanes of `x`'s image and its polar image.
pub fn has_ortho_partner_in(es: &EllipticSpace, spread: &Spread, x: &Line) -> PartnerDecision {
    let b6 = klein_form_matrix();
    let xg = x.plucker().to_vec();
    let xpg = es.polar_involution().mul_vec(&xg);
    let rows = Mat::from_rows(vec![b6.mul_vec(&xg), b6.mul_vec(&xpg)]);
    let cut = Subspace::from_rows(6, &rows.kernel());
    let w = spread.carrier().meet(&cut);
    if &w == spread.carrier() {
        // Both hyperplanes contain the whole carrier: every member of the
        // spread qualifies.
        return PartnerDecision::Yes;
    }
    // Any partner meets `x`, so candidate points come from the star planes
    // of rational feet on `x`; the spread's base and its polar are further
    // cheap candidates.
    let mut hints = if w.vdim() >= 3 { star_meet_hints(x, &w) } else { Vec::new() };
    for v in [
        spread.base().plucker().to_vec(),
        es.polar_involution().mul_vec(spread.base().plucker()),
    ] {
        if w.contains_vec(&v) {
            hints.push(v);
        }
    }
    match gamma_points_in_with_hints(&w, &hints) {
        TransversalCount::Finite(0) => PartnerDecision::No,
        TransversalCount::Finite(_) | TransversalCount::Infinite => PartnerDecision::Yes,
        TransversalCount::Inconclusive { search_height } => {
            PartnerDecision::Undecided { search_height }
        }
    }
}

fn check_regulus_partner(
    es: &EllipticSpace,
    members_of: &Spread,
    partners_in: &Spread,
    other_base: &Line,
    sampler: &mut Sampler,
    trials: u32,
) -> Result<RelationReport> {
    let mut report = RelationReport { trials, ..Default::default() };
    for trial in 0..trials {
        // Half the samples pass through the other base line, so both sides
        // of the equivalence are exercised.
        let q = if trial % 2 == 0 {
            sampler.point_on_line(other_base)
        } else {
            sampler.point4()
        };
        let x = members_of.line_through(&q)?;
        let in_regulus = klein_bilinear(x.plucker(), other_base.plucker()).is_zero();
        let partner = has_ortho_partner_in(es, partners_in, &x);
        let has_partner = match partner {
            PartnerDecision::Yes => true,
            PartnerDecision::No => false,
            PartnerDecision::Undecided { .. } => {
                report.inconclusive += 1;
                continue;
            }
        };
        if has_partner != in_regulus {
            report.violations.push(RelationViolation {
                trial,
                witness: format!("member ({x}) through ({})", scalar::fmt_vec(q.coords())),
                expected: format!(
                    "partner exists iff the member meets the other base (membership: {in_regulus})"
                ),
                actual: format!("partner decision {partner:?}"),
            });
        }
    }
    Ok(report)
}

/// Members of the left spread of `a` admitting an orthogonal partner in
/// the right spread of `b` are exactly those meeting `b` (the regulus of
/// `a` with transversal `b`).
pub fn check_relation_7(
    es: &EllipticSpace,
    a: &Line,
    b: &Line,
    sampler: &mut Sampler,
    trials: u32,
) -> Result<RelationReport> {
    require_ortho(es, a, b)?;
    let sl_a = Spread::new(es, Side::Left, a.clone());
    let sr_b = Spread::new(es, Side::Right, b.clone());
    check_regulus_partner(es, &sl_a, &sr_b, b, sampler, trials)
}

/// Dual of the seventh relation: members of the right spread of `b` with a
/// partner in the left spread of `a` are exactly those meeting `a`.
pub fn check_relation_8(
    es: &EllipticSpace,
    a: &Line,
    b: &Line,
    sampler: &mut Sampler,
    trials: u32,
) -> Result<RelationReport> {
    require_ortho(es, a, b)?;
    let sr_b = Spread::new(es, Side::Right, b.clone());
    let sl_a = Spread::new(es, Side::Left, a.clone());
    check_regulus_partner(es, &sr_b, &sl_a, a, sampler, trials)
}

/// Every member of the regulus of `a` along `b` intersects every member of
/// the opposite regulus of `b` along `a` orthogonally: checked on an
/// `n x n` grid of sampled members.
pub fn check_relation_9(
    es: &EllipticSpace,
    a: &Line,
    b: &Line,
    sampler: &mut Sampler,
    grid: u32,
) -> Result<RelationReport> {
    require_ortho(es, a, b)?;
    let sl_a = Spread::new(es, Side::Left, a.clone());
    let sr_b = Spread::new(es, Side::Right, b.clone());
    let xs: Vec<Line> = (0..grid)
        .map(|_| sl_a.line_through(&sampler.point_on_line(b)))
        .collect::<Result<_>>()?;
    let ys: Vec<Line> = (0..grid)
        .map(|_| sr_b.line_through(&sampler.point_on_line(a)))
        .collect::<Result<_>>()?;
    let mut report = RelationReport { trials: grid * grid, ..Default::default() };
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            if !ortho_intersect(es, x, y) {
                report.violations.push(RelationViolation {
                    trial: (i as u32) * grid + j as u32,
                    witness: format!("pair ({x}) and ({y})"),
                    expected: "opposite regulus members intersect orthogonally".into(),
                    actual: "orthogonal intersection fails".into(),
                });
            }
        }
    }
    Ok(report)
}
