//! Canonical points of the projective line over the ambient field, and
//! finite/cofinite point sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::mat2::Mat2;
use crate::scalar::{CycloScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjError {
    #[error("both homogeneous coordinates are zero")]
    BothCoordinatesZero,
    #[error("only invertible matrices act on the projective line")]
    SingularTransform,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A point [a : b] of the projective line in canonical form: b = 1 when
/// possible, otherwise a = 1 (the unique point at infinity). Equality and
/// ordering are coefficient-wise on the canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    a: CycloScalar,
    b: CycloScalar,
}

impl ProjPoint {
    /// Canonical representative of [a : b].
    pub fn new(a: CycloScalar, b: CycloScalar) -> Result<Self, ProjError> {
        a.try_add(&b)?; // surfaces order mismatches
        if a.is_zero() && b.is_zero() {
            return Err(ProjError::BothCoordinatesZero);
        }
        let order = a.order();
        if b.is_zero() {
            Ok(ProjPoint {
                a: CycloScalar::one(order),
                b: CycloScalar::zero(order),
            })
        } else {
            let inv = b.invert()?;
            Ok(ProjPoint {
                a: a.try_mul(&inv)?,
                b: CycloScalar::one(order),
            })
        }
    }

    /// The affine point [t : 1].
    pub fn affine(t: CycloScalar) -> Self {
        let order = t.order();
        ProjPoint {
            a: t,
            b: CycloScalar::one(order),
        }
    }

    pub fn affine_int(order: u64, t: i64) -> Self {
        ProjPoint::affine(CycloScalar::from_int(order, t))
    }

    /// The point at infinity [1 : 0].
    pub fn infinity(order: u64) -> Self {
        ProjPoint {
            a: CycloScalar::one(order),
            b: CycloScalar::zero(order),
        }
    }

    pub fn a(&self) -> &CycloScalar {
        &self.a
    }

    pub fn b(&self) -> &CycloScalar {
        &self.b
    }

    pub fn order(&self) -> u64 {
        self.a.order()
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }
}

/// Image of a point under an invertible matrix acting linearly on
/// homogeneous coordinates. The action factors through the projective
/// group: scaling g does not change it.
pub fn moebius_apply(g: &Mat2, p: &ProjPoint) -> Result<ProjPoint, ProjError> {
    if !g.is_invertible() {
        return Err(ProjError::SingularTransform);
    }
    let a = g.entry(0, 0) * p.a() + g.entry(0, 1) * p.b();
    let b = g.entry(1, 0) * p.a() + g.entry(1, 1) * p.b();
    ProjPoint::new(a, b)
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.a, self.b)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.a, self.b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SetMode {
    Finite,
    Cofinite,
}

/// A finite or cofinite subset of the projective line. In `Cofinite` mode
/// the listed points are the complement.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PointSet {
    mode: SetMode,
    points: BTreeSet<ProjPoint>,
}

impl PointSet {
    pub fn finite<I: IntoIterator<Item = ProjPoint>>(points: I) -> Self {
        PointSet {
            mode: SetMode::Finite,
            points: points.into_iter().collect(),
        }
    }

    pub fn cofinite<I: IntoIterator<Item = ProjPoint>>(excluded: I) -> Self {
        PointSet {
            mode: SetMode::Cofinite,
            points: excluded.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        PointSet::finite([])
    }

    /// The whole projective line.
    pub fn full() -> Self {
        PointSet::cofinite([])
    }

    pub fn mode(&self) -> SetMode {
        self.mode
    }

    pub fn is_finite(&self) -> bool {
        self.mode == SetMode::Finite
    }

    /// The listed points: the set itself when finite, the complement when
    /// cofinite.
    pub fn listed(&self) -> &BTreeSet<ProjPoint> {
        &self.points
    }

    pub fn len_if_finite(&self) -> Option<usize> {
        match self.mode {
            SetMode::Finite => Some(self.points.len()),
            SetMode::Cofinite => None,
        }
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        match self.mode {
            SetMode::Finite => self.points.contains(p),
            SetMode::Cofinite => !self.points.contains(p),
        }
    }

    pub fn complement(&self) -> PointSet {
        PointSet {
            mode: match self.mode {
                SetMode::Finite => SetMode::Cofinite,
                SetMode::Cofinite => SetMode::Finite,
            },
            points: self.points.clone(),
        }
    }

    pub fn intersect(&self, other: &PointSet) -> PointSet {
        match (self.mode, other.mode) {
            (SetMode::Finite, _) => {
                PointSet::finite(self.points.iter().filter(|p| other.contains(p)).cloned())
            }
            (_, SetMode::Finite) => other.intersect(self),
            (SetMode::Cofinite, SetMode::Cofinite) => {
                PointSet::cofinite(self.points.union(&other.points).cloned())
            }
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        self.complement()
            .intersect(&other.complement())
            .complement()
    }

    /// Concrete point list relative to a finite ambient sample: a finite set
    /// denotes itself, a cofinite set denotes the ambient minus the excluded
    /// points.
    pub fn materialize(&self, ambient: &BTreeSet<ProjPoint>) -> BTreeSet<ProjPoint> {
        match self.mode {
            SetMode::Finite => self.points.clone(),
            SetMode::Cofinite => ambient
                .iter()
                .filter(|p| !self.points.contains(p))
                .cloned()
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    const N: u64 = 12;

    fn pt(t: i64) -> ProjPoint {
        ProjPoint::affine_int(N, t)
    }

    #[test]
    fn normalize_examples() {
        let p = ProjPoint::new(CycloScalar::from_int(N, 2), CycloScalar::from_int(N, 4)).unwrap();
        assert_eq!(p.a().as_rational().unwrap(), &rat(1, 2));
        assert!(p.b().is_one());

        let inf = ProjPoint::new(CycloScalar::from_int(N, 3), CycloScalar::zero(N)).unwrap();
        assert_eq!(inf, ProjPoint::infinity(N));

        let z = CycloScalar::zeta(N);
        let q = ProjPoint::new(z.clone(), z).unwrap();
        assert_eq!(q, pt(1));

        assert_eq!(
            ProjPoint::new(CycloScalar::zero(N), CycloScalar::zero(N)),
            Err(ProjError::BothCoordinatesZero)
        );
    }

    #[test]
    fn moebius_examples() {
        let id = Mat2::identity(N);
        assert_eq!(moebius_apply(&id, &pt(1)).unwrap(), pt(1));

        let swap = Mat2::from_rows(N, [[0, -1], [1, 0]]);
        assert_eq!(
            moebius_apply(&swap, &ProjPoint::infinity(N)).unwrap(),
            pt(0)
        );

        let shift = Mat2::from_rows(N, [[1, 1], [0, 1]]);
        assert_eq!(moebius_apply(&shift, &pt(3)).unwrap(), pt(4));

        let singular = Mat2::from_rows(N, [[1, 0], [0, 0]]);
        assert_eq!(
            moebius_apply(&singular, &pt(1)),
            Err(ProjError::SingularTransform)
        );
    }

    #[test]
    fn moebius_action_properties() {
        let mut s = crate::sample::Sampler::new(408, N);
        for _ in 0..150 {
            let g = s.invertible();
            let h = s.invertible();
            let p = s.point();
            // composition
            assert_eq!(
                moebius_apply(&g.mul(&h), &p).unwrap(),
                moebius_apply(&g, &moebius_apply(&h, &p).unwrap()).unwrap()
            );
            // the action ignores scaling of g
            let z = s.nonzero_scalar();
            assert_eq!(
                moebius_apply(&g.scale(&z), &p).unwrap(),
                moebius_apply(&g, &p).unwrap()
            );
        }
    }

    #[test]
    fn pointset_modes() {
        let p = ProjPoint::infinity(N);
        let q = pt(0);
        let f1 = PointSet::finite([p.clone()]);
        let f2 = PointSet::finite([p.clone(), q.clone()]);
        assert_eq!(f1.intersect(&f2), f1);
        assert_eq!(PointSet::full().intersect(&f1), f1);
        assert_eq!(
            PointSet::cofinite([p.clone()]).intersect(&PointSet::cofinite([q.clone()])),
            PointSet::cofinite([p.clone(), q.clone()])
        );
        assert!(PointSet::cofinite([p.clone()]).contains(&q));
        assert!(!PointSet::cofinite([p.clone()]).contains(&p));
    }

    proptest! {
        #[test]
        fn normalize_is_scale_invariant(a in -20i64..20, b in -20i64..20, num in -9i64..9, den in 1i64..9) {
            prop_assume!(a != 0 || b != 0);
            prop_assume!(num != 0);
            let lambda = CycloScalar::from_rational(N, rat(num, den));
            let sa = CycloScalar::from_int(N, a);
            let sb = CycloScalar::from_int(N, b);
            let p = ProjPoint::new(sa.clone(), sb.clone()).unwrap();
            let q = ProjPoint::new(sa.try_mul(&lambda).unwrap(), sb.try_mul(&lambda).unwrap()).unwrap();
            prop_assert_eq!(p.clone(), q);
            // idempotent: re-normalizing the canonical form is a fixpoint
            let again = ProjPoint::new(p.a().clone(), p.b().clone()).unwrap();
            prop_assert_eq!(p, again);
        }

        #[test]
        fn pointset_lattice_laws(xs in proptest::collection::btree_set(-4i64..4, 0..4),
                                 ys in proptest::collection::btree_set(-4i64..4, 0..4),
                                 mx in any::<bool>(), my in any::<bool>()) {
            let mk = |set: &std::collections::BTreeSet<i64>, cof: bool| {
                let pts = set.iter().map(|&t| pt(t));
                if cof { PointSet::cofinite(pts) } else { PointSet::finite(pts) }
            };
            let x = mk(&xs, mx);
            let y = mk(&ys, my);
            // commutativity and absorption, checked on sample membership
            prop_assert_eq!(x.intersect(&y), y.intersect(&x));
            prop_assert_eq!(x.union(&y), y.union(&x));
            prop_assert_eq!(x.union(&x.intersect(&y)), x.clone());
            prop_assert_eq!(x.intersect(&x.union(&y)), x.clone());
            for t in -5i64..5 {
                let p = pt(t);
                prop_assert_eq!(x.intersect(&y).contains(&p), x.contains(&p) && y.contains(&p));
                prop_assert_eq!(x.union(&y).contains(&p), x.contains(&p) || y.contains(&p));
            }
        }
    }
}
