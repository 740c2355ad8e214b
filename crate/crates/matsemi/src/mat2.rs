//! Exact 2x2 matrices over the ambient field: arithmetic, rank,
//! idempotent/nilpotent predicates, and the explicit rank-1 parametrizations.

use std::fmt;

use crate::projline::{ProjError, ProjPoint};
use crate::scalar::{CycloScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Point(#[from] ProjError),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix does not have rank one")]
    NotRankOne,
    #[error("image and kernel coincide; no idempotent exists on that class")]
    CoincidentPoints,
    #[error("nilpotent scale must be nonzero")]
    ZeroScale,
}

/// Row-major exact 2x2 matrix. All four entries share one ambient order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    e: [CycloScalar; 4],
}

impl Mat2 {
    pub fn new(entries: [CycloScalar; 4]) -> Result<Self, MatError> {
        let order = entries[0].order();
        for x in &entries[1..] {
            if x.order() != order {
                return Err(ScalarError::OrderMismatch(order, x.order()).into());
            }
        }
        Ok(Mat2 { e: entries })
    }

    pub fn from_rows(
        order: u64,
        rows: [[i64; 2]; 2],
    ) -> Self {
        Mat2 {
            e: [
                CycloScalar::from_int(order, rows[0][0]),
                CycloScalar::from_int(order, rows[0][1]),
                CycloScalar::from_int(order, rows[1][0]),
                CycloScalar::from_int(order, rows[1][1]),
            ],
        }
    }

    pub fn identity(order: u64) -> Self {
        Mat2::from_rows(order, [[1, 0], [0, 1]])
    }

    pub fn zero_matrix(order: u64) -> Self {
        Mat2::from_rows(order, [[0, 0], [0, 0]])
    }

    pub fn diag(a: CycloScalar, d: CycloScalar) -> Result<Self, MatError> {
        let order = a.order();
        Mat2::new([
            a,
            CycloScalar::zero(order),
            CycloScalar::zero(order),
            d,
        ])
    }

    /// Entry at row r, column c (0-based).
    pub fn entry(&self, r: usize, c: usize) -> &CycloScalar {
        &self.e[2 * r + c]
    }

    pub fn entries(&self) -> &[CycloScalar; 4] {
        &self.e
    }

    pub fn order(&self) -> u64 {
        self.e[0].order()
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &other.e;
        Mat2 {
            e: [
                &(a * p) + &(b * r),
                &(a * q) + &(b * s),
                &(c * p) + &(d * r),
                &(c * q) + &(d * s),
            ],
        }
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut e = self.e.clone();
        for (x, y) in e.iter_mut().zip(&other.e) {
            *x = &*x + y;
        }
        Mat2 { e }
    }

    pub fn scale(&self, z: &CycloScalar) -> Mat2 {
        let mut e = self.e.clone();
        for x in e.iter_mut() {
            *x = &*x * z;
        }
        Mat2 { e }
    }

    pub fn det(&self) -> CycloScalar {
        let [a, b, c, d] = &self.e;
        &(a * d) - &(b * c)
    }

    /// The adjugate, an anti-automorphism of the matrix monoid. On rank-1
    /// matrices it swaps image and kernel.
    pub fn adjugate(&self) -> Mat2 {
        let [a, b, c, d] = &self.e;
        Mat2 {
            e: [d.clone(), b.negate(), c.negate(), a.clone()],
        }
    }

    pub fn inverse(&self) -> Result<Mat2, MatError> {
        let det = self.det();
        if det.is_zero() {
            return Err(MatError::Singular);
        }
        let inv = det.invert()?;
        Ok(self.adjugate().scale(&inv))
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> u8 {
        if !self.det().is_zero() {
            2
        } else if self.is_zero() {
            0
        } else {
            1
        }
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    /// x^2 = x with x nonzero; the zero matrix is not an idempotent.
    pub fn is_idempotent(&self) -> bool {
        !self.is_zero() && self.mul(self) == *self
    }

    /// x^2 = 0 (the zero matrix counts).
    pub fn is_nilpotent(&self) -> bool {
        self.mul(self).is_zero()
    }

    /// Image and kernel of a rank-1 matrix as canonical projective points.
    ///
    /// The image generator is the first nonzero column; the kernel vector is
    /// read off the first nonzero row, keeping canonical forms deterministic.
    pub fn image_kernel(&self) -> Result<(ProjPoint, ProjPoint), MatError> {
        if self.rank() != 1 {
            return Err(MatError::NotRankOne);
        }
        let [a, b, c, d] = &self.e;
        let image = if !a.is_zero() || !c.is_zero() {
            ProjPoint::new(a.clone(), c.clone())?
        } else {
            ProjPoint::new(b.clone(), d.clone())?
        };
        // (a b) . (b, -a) = 0, and the second row is proportional.
        let kernel = if !a.is_zero() || !b.is_zero() {
            ProjPoint::new(b.clone(), a.negate())?
        } else {
            ProjPoint::new(d.clone(), c.negate())?
        };
        Ok((image, kernel))
    }

    /// The unique rank-1 idempotent with the given image v = [a:b] and
    /// kernel u = [c:d], namely 1/(ad-bc) * [[ad, -ac], [bd, -bc]].
    /// Requires v != u.
    pub fn idempotent_from_points(v: &ProjPoint, u: &ProjPoint) -> Result<Mat2, MatError> {
        let (a, b) = (v.a(), v.b());
        let (c, d) = (u.a(), u.b());
        let denom = &(a * d) - &(b * c);
        if denom.is_zero() {
            return Err(MatError::CoincidentPoints);
        }
        let inv = denom.invert()?;
        Ok(Mat2::new([
            a * d,
            (a * c).negate(),
            b * d,
            (b * c).negate(),
        ])?
        .scale(&inv))
    }

    /// The rank-1 nilpotent with image = kernel = v = [a:b] and scale
    /// lambda, namely lambda * [[ab, -a^2], [b^2, -ab]]. Requires lambda != 0.
    pub fn nilpotent_from_point(v: &ProjPoint, lambda: &CycloScalar) -> Result<Mat2, MatError> {
        if lambda.is_zero() {
            return Err(MatError::ZeroScale);
        }
        let (a, b) = (v.a(), v.b());
        Ok(Mat2::new([
            a * b,
            (a * a).negate(),
            b * b,
            (a * b).negate(),
        ])?
        .scale(lambda))
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0], self.e[1], self.e[2], self.e[3]
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
