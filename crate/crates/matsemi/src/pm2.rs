//! The projective quotient of the 2x2 matrix monoid by nonzero scalars, and
//! the combinatorial multiplication law on its rank-1 classes.

use std::fmt;

use crate::mat2::{Mat2, MatError};
use crate::projline::ProjPoint;
use crate::scalar::CycloScalar;

/// A projective class of 2x2 matrices: zero, a rank-1 (image, kernel) pair,
/// or an invertible class held by a canonically scaled representative whose
/// first nonzero entry (row-major) is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PM2Elem {
    Zero,
    RankOne { image: ProjPoint, kernel: ProjPoint },
    Invertible { rep: Mat2 },
}

/// Projection of a matrix onto its class. Two matrices project equally iff
/// one is a nonzero scalar multiple of the other.
pub fn project(x: &Mat2) -> PM2Elem {
    match x.rank() {
        0 => PM2Elem::Zero,
        1 => {
            let (image, kernel) = x.image_kernel().expect("rank checked");
            PM2Elem::RankOne { image, kernel }
        }
        _ => PM2Elem::Invertible {
            rep: canonical_scale(x),
        },
    }
}

/// Scale so the first nonzero entry in row-major order is 1.
fn canonical_scale(x: &Mat2) -> Mat2 {
    let lead = x
        .entries()
        .iter()
        .find(|e| !e.is_zero())
        .expect("nonzero matrix");
    x.scale(&lead.invert().expect("nonzero entry"))
}

/// The scalar z with x = z * y, when x and y are proportional and y != 0.
pub fn scalar_ratio(x: &Mat2, y: &Mat2) -> Result<CycloScalar, MatError> {
    let (i, lead) = y
        .entries()
        .iter()
        .enumerate()
        .find(|(_, e)| !e.is_zero())
        .ok_or(MatError::NotRankOne)?;
    let z = x.entries()[i].try_div(lead)?;
    if &y.scale(&z) == x {
        Ok(z)
    } else {
        Err(MatError::NotRankOne)
    }
}

impl PM2Elem {
    pub fn is_zero(&self) -> bool {
        matches!(self, PM2Elem::Zero)
    }

    pub fn rank(&self) -> u8 {
        match self {
            PM2Elem::Zero => 0,
            PM2Elem::RankOne { .. } => 1,
            PM2Elem::Invertible { .. } => 2,
        }
    }

    /// A concrete matrix in the class. Rank-1 classes use the idempotent on
    /// (image, kernel) when image != kernel, the unit-scale nilpotent
    /// otherwise.
    pub fn representative(&self, order: u64) -> Mat2 {
        match self {
            PM2Elem::Zero => Mat2::zero_matrix(order),
            PM2Elem::RankOne { image, kernel } => {
                if image == kernel {
                    Mat2::nilpotent_from_point(image, &CycloScalar::one(order))
                        .expect("unit scale is nonzero")
                } else {
                    Mat2::idempotent_from_points(image, kernel).expect("distinct points")
                }
            }
            PM2Elem::Invertible { rep } => rep.clone(),
        }
    }

    /// Idempotent under the quotient multiplication (nonzero, image != kernel).
    pub fn is_idempotent_class(&self) -> bool {
        matches!(self, PM2Elem::RankOne { image, kernel } if image != kernel)
    }

    /// Nilpotent under the quotient multiplication (image = kernel).
    pub fn is_nilpotent_class(&self) -> bool {
        matches!(self, PM2Elem::RankOne { image, kernel } if image == kernel)
    }
}

/// Multiplication in the quotient. Rank-1 pairs follow the combinatorial
/// law ((v,u)(v',u') = (v,u') unless u = v', which kills the product); cases
/// involving an invertible class multiply representatives and re-project,
/// which is exact because projection is a homomorphism.
pub fn pm2_mul(x: &PM2Elem, y: &PM2Elem) -> PM2Elem {
    match (x, y) {
        (PM2Elem::Zero, _) | (_, PM2Elem::Zero) => PM2Elem::Zero,
        (
            PM2Elem::RankOne { image: v, kernel: u },
            PM2Elem::RankOne {
                image: v2,
                kernel: u2,
            },
        ) => {
            if u == v2 {
                PM2Elem::Zero
            } else {
                PM2Elem::RankOne {
                    image: v.clone(),
                    kernel: u2.clone(),
                }
            }
        }
        (PM2Elem::Invertible { rep }, other) => {
            let order = rep.order();
            project(&rep.mul(&other.representative(order)))
        }
        (other, PM2Elem::Invertible { rep }) => {
            let order = rep.order();
            project(&other.representative(order).mul(rep))
        }
    }
}

impl fmt::Display for PM2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PM2Elem::Zero => write!(f, "0"),
            PM2Elem::RankOne { image, kernel } => write!(f, "({image}, {kernel})"),
            PM2Elem::Invertible { rep } => write!(f, "inv{rep}"),
        }
    }
}
