//! Combinatorial model of rank-1 subsemigroups of the projective matrix
//! monoid: closure checking, the Type A / Type B classification,
//! intersections, definable witness families, and the exhaustive
//! enumeration oracle.
//!
//! A rank-1 class is an (image, kernel) pair of projective points. Products
//! follow the quotient law: (v,u)(v',u') = (v,u') unless u = v', in which
//! case the product is zero. Every multiplicatively closed set of pairs is
//! either a full rectangle F x G (Type A) or a one-point-centered cross
//! (Type B); `classify` recovers that shape and `shape_elements` expands it
//! back.

use std::collections::BTreeSet;

use crate::projline::{PointSet, ProjPoint};

/// (image, kernel)
pub type Rank1Pair = (ProjPoint, ProjPoint);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rank1Error {
    #[error("set is not multiplicatively closed: {0}")]
    NotClosed(ClosureViolation),
    #[error("ground set of {0} points exceeds the enumeration cap of {1}")]
    GroundSetTooLarge(usize, usize),
    #[error("shapes cannot be intersected coordinate-wise; supply an ambient sample")]
    IncompatibleShapes,
    #[error("ambient sample does not cover the set's points")]
    AmbientTooSmall,
    #[error("classified shape does not reconstruct the set")]
    ReconstructionMismatch,
    #[error("witness family failed verification: {0}")]
    WitnessInvalid(String),
}

/// A pair of factors whose product escapes the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureViolation {
    pub left: Rank1Pair,
    pub right: Rank1Pair,
    /// The escaping product; `None` means the product is zero while the set
    /// lacks a zero element.
    pub product: Option<Rank1Pair>,
}

impl std::fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (lv, lu) = &self.left;
        let (rv, ru) = &self.right;
        match &self.product {
            Some((pv, pu)) => write!(
                f,
                "({lv},{lu})*({rv},{ru}) = ({pv},{pu}) is missing"
            ),
            None => write!(f, "({lv},{lu})*({rv},{ru}) = 0 but the set has no zero"),
        }
    }
}

/// A set of rank-1 classes, plus a zero flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rank1Set {
    pub pairs: BTreeSet<Rank1Pair>,
    pub has_zero: bool,
}

impl Rank1Set {
    pub fn new<I: IntoIterator<Item = Rank1Pair>>(pairs: I, has_zero: bool) -> Self {
        Rank1Set {
            pairs: pairs.into_iter().collect(),
            has_zero,
        }
    }

    /// Every projective point appearing as an image or kernel.
    pub fn points(&self) -> BTreeSet<ProjPoint> {
        self.pairs
            .iter()
            .flat_map(|(v, u)| [v.clone(), u.clone()])
            .collect()
    }

    pub fn images(&self) -> BTreeSet<ProjPoint> {
        self.pairs.iter().map(|(v, _)| v.clone()).collect()
    }

    pub fn kernels(&self) -> BTreeSet<ProjPoint> {
        self.pairs.iter().map(|(_, u)| u.clone()).collect()
    }

    /// First product that escapes the set, if any.
    pub fn closure_violation(&self) -> Option<ClosureViolation> {
        for x in &self.pairs {
            for y in &self.pairs {
                if x.1 == y.0 {
                    if !self.has_zero {
                        return Some(ClosureViolation {
                            left: x.clone(),
                            right: y.clone(),
                            product: None,
                        });
                    }
                } else {
                    let prod = (x.0.clone(), y.1.clone());
                    if !self.pairs.contains(&prod) {
                        return Some(ClosureViolation {
                            left: x.clone(),
                            right: y.clone(),
                            product: Some(prod),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    pub fn intersect(&self, other: &Rank1Set) -> Rank1Set {
        Rank1Set {
            pairs: self.pairs.intersection(&other.pairs).cloned().collect(),
            has_zero: self.has_zero && other.has_zero,
        }
    }

    pub fn is_subset(&self, other: &Rank1Set) -> bool {
        (!self.has_zero || other.has_zero) && self.pairs.is_subset(&other.pairs)
    }
}

/// The classified shape of a closed rank-1 set.
///
/// Type A denotes all pairs with image in `images` and kernel in `kernels`
/// (plus zero per the flag). Type B denotes the cross through `center`:
/// pairs (x, center) for x in `images` and (center, y) for y in `kernels`,
/// always with zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularShape {
    TypeA {
        images: PointSet,
        kernels: PointSet,
        has_zero: bool,
    },
    TypeB {
        images: PointSet,
        kernels: PointSet,
        center: ProjPoint,
    },
}

impl SingularShape {
    pub fn has_zero(&self) -> bool {
        match self {
            SingularShape::TypeA { has_zero, .. } => *has_zero,
            SingularShape::TypeB { .. } => true,
        }
    }

    pub fn images(&self) -> &PointSet {
        match self {
            SingularShape::TypeA { images, .. } | SingularShape::TypeB { images, .. } => images,
        }
    }

    pub fn kernels(&self) -> &PointSet {
        match self {
            SingularShape::TypeA { kernels, .. } | SingularShape::TypeB { kernels, .. } => kernels,
        }
    }

    pub fn center(&self) -> Option<&ProjPoint> {
        match self {
            SingularShape::TypeA { .. } => None,
            SingularShape::TypeB { center, .. } => Some(center),
        }
    }

    /// Every point explicitly mentioned by the shape data (listed points of
    /// both coordinates plus the center).
    pub fn mentioned_points(&self) -> BTreeSet<ProjPoint> {
        let mut out: BTreeSet<ProjPoint> = self.images().listed().clone();
        out.extend(self.kernels().listed().iter().cloned());
        if let Some(c) = self.center() {
            out.insert(c.clone());
        }
        out
    }

    /// Membership of a rank-1 class in the denoted set.
    pub fn contains_pair(&self, pair: &Rank1Pair) -> bool {
        match self {
            SingularShape::TypeA { images, kernels, .. } => {
                images.contains(&pair.0) && kernels.contains(&pair.1)
            }
            SingularShape::TypeB {
                images,
                kernels,
                center,
            } => {
                (pair.1 == *center && images.contains(&pair.0))
                    || (pair.0 == *center && kernels.contains(&pair.1))
            }
        }
    }
}

/// Expand a shape into the concrete set it denotes, intersecting cofinite
/// coordinate sets against the ambient sample.
pub fn shape_elements(shape: &SingularShape, ambient: &BTreeSet<ProjPoint>) -> Rank1Set {
    match shape {
        SingularShape::TypeA {
            images,
            kernels,
            has_zero,
        } => {
            let f = images.materialize(ambient);
            let g = kernels.materialize(ambient);
            let pairs = f
                .iter()
                .flat_map(|v| g.iter().map(move |u| (v.clone(), u.clone())))
                .collect();
            Rank1Set {
                pairs,
                has_zero: *has_zero,
            }
        }
        SingularShape::TypeB {
            images,
            kernels,
            center,
        } => {
            let f = images.materialize(ambient);
            let g = kernels.materialize(ambient);
            let mut pairs: BTreeSet<Rank1Pair> = f
                .iter()
                .map(|x| (x.clone(), center.clone()))
                .collect();
            pairs.extend(g.iter().map(|y| (center.clone(), y.clone())));
            Rank1Set {
                pairs,
                has_zero: true,
            }
        }
    }
}

/// Classify a closed set of rank-1 classes as Type A or Type B.
///
/// Follows the constructive argument: with S1 the images, S2 the kernels,
/// L the images carrying at least two kernels and R dually, a closed set is
/// a rectangle unless L and R degenerate to one shared point (the centered
/// cross) or to nothing (the transposed two-element configuration).
pub fn classify(s: &Rank1Set) -> Result<SingularShape, Rank1Error> {
    if let Some(v) = s.closure_violation() {
        return Err(Rank1Error::NotClosed(v));
    }
    let shape = classify_closed(s);
    let rebuilt = shape_elements(&shape, &s.points());
    if rebuilt != *s {
        return Err(Rank1Error::ReconstructionMismatch);
    }
    Ok(shape)
}

fn classify_closed(s: &Rank1Set) -> SingularShape {
    let images = s.images();
    let kernels = s.kernels();
    let type_a = |s: &Rank1Set| SingularShape::TypeA {
        images: PointSet::finite(s.images()),
        kernels: PointSet::finite(s.kernels()),
        has_zero: s.has_zero,
    };
    if s.pairs.is_empty() || images.len() == 1 || kernels.len() == 1 {
        return type_a(s);
    }
    let left: BTreeSet<&ProjPoint> = images
        .iter()
        .filter(|v| s.pairs.iter().filter(|(x, _)| x == *v).count() >= 2)
        .collect();
    let right: BTreeSet<&ProjPoint> = kernels
        .iter()
        .filter(|u| s.pairs.iter().filter(|(_, y)| y == *u).count() >= 2)
        .collect();
    if left.is_empty() || right.is_empty() {
        // For a closed set this is the transposed pair {(v,u),(u,v)} plus
        // zero; the reconstruction check in `classify` backstops the claim.
        if s.pairs.len() == 2 {
            let mut it = s.pairs.iter();
            let (p, q) = it.next().unwrap().clone();
            let center = p.clone().min(q.clone());
            let other = p.max(q);
            return SingularShape::TypeB {
                images: PointSet::finite([other.clone()]),
                kernels: PointSet::finite([other]),
                center,
            };
        }
        return type_a(s);
    }
    if left == right && left.len() == 1 {
        let center = (*left.iter().next().unwrap()).clone();
        return SingularShape::TypeB {
            images: PointSet::finite(images),
            kernels: PointSet::finite(kernels),
            center,
        };
    }
    type_a(s)
}

/// Coordinate-wise intersection of two shapes. Works for a pair of Type A
/// shapes, or a pair of Type B shapes with the same center; anything else
/// needs an ambient sample (`shape_intersect_over`).
pub fn shape_intersect(x: &SingularShape, y: &SingularShape) -> Result<SingularShape, Rank1Error> {
    match (x, y) {
        (
            SingularShape::TypeA {
                images: f1,
                kernels: g1,
                has_zero: z1,
            },
            SingularShape::TypeA {
                images: f2,
                kernels: g2,
                has_zero: z2,
            },
        ) => Ok(SingularShape::TypeA {
            images: f1.intersect(f2),
            kernels: g1.intersect(g2),
            has_zero: *z1 && *z2,
        }),
        (
            SingularShape::TypeB {
                images: f1,
                kernels: g1,
                center: c1,
            },
            SingularShape::TypeB {
                images: f2,
                kernels: g2,
                center: c2,
            },
        ) if c1 == c2 => {
            let mut images = f1.intersect(f2);
            let kernels = g1.intersect(g2);
            // (c,c) lies in a Type B set iff c is in either coordinate set;
            // coordinate-wise intersection can lose it, so restore it on the
            // image side when both operands contain it.
            let in_x = f1.contains(c1) || g1.contains(c1);
            let in_y = f2.contains(c1) || g2.contains(c1);
            if in_x && in_y && !images.contains(c1) && !kernels.contains(c1) {
                images = images.union(&PointSet::finite([c1.clone()]));
            }
            Ok(SingularShape::TypeB {
                images,
                kernels,
                center: c1.clone(),
            })
        }
        _ => Err(Rank1Error::IncompatibleShapes),
    }
}

/// Intersection of arbitrary shapes, computed element-wise over a declared
/// ambient sample and re-classified.
pub fn shape_intersect_over(
    x: &SingularShape,
    y: &SingularShape,
    ambient: &BTreeSet<ProjPoint>,
) -> Result<SingularShape, Rank1Error> {
    let xs = shape_elements(x, ambient);
    let ys = shape_elements(y, ambient);
    classify(&xs.intersect(&ys))
}

/// A finite family of closed shapes with finite-or-cofinite coordinate
/// data, each containing `s`, whose intersection over the ambient sample is
/// exactly `s`.
pub fn definable_witness_family(
    s: &Rank1Set,
    ambient: &BTreeSet<ProjPoint>,
) -> Result<Vec<SingularShape>, Rank1Error> {
    if !s.points().is_subset(ambient) {
        return Err(Rank1Error::AmbientTooSmall);
    }
    let shape = classify(s)?;
    let family = match &shape {
        SingularShape::TypeA {
            images,
            kernels,
            has_zero,
        } => {
            if s.pairs.is_empty() || !has_zero {
                // Finite data that is already definable as stated: the empty
                // or zero-only set, or a zero-free rectangle (which forces
                // disjoint coordinates).
                vec![shape.clone()]
            } else {
                let f = images.materialize(ambient);
                let g = kernels.materialize(ambient);
                let mut members = Vec::new();
                for p in ambient.difference(&f) {
                    members.push(SingularShape::TypeA {
                        images: PointSet::cofinite([p.clone()]),
                        kernels: PointSet::full(),
                        has_zero: true,
                    });
                }
                for q in ambient.difference(&g) {
                    members.push(SingularShape::TypeA {
                        images: PointSet::full(),
                        kernels: PointSet::cofinite([q.clone()]),
                        has_zero: true,
                    });
                }
                if members.is_empty() {
                    members.push(SingularShape::TypeA {
                        images: PointSet::full(),
                        kernels: PointSet::full(),
                        has_zero: true,
                    });
                }
                members
            }
        }
        SingularShape::TypeB {
            images,
            kernels,
            center,
        } => {
            let f = images.materialize(ambient);
            let g = kernels.materialize(ambient);
            if !f.contains(center) && !g.contains(center) {
                // Transposed two-element configuration: finite data, directly
                // definable.
                vec![shape.clone()]
            } else {
                let mut members = Vec::new();
                for p in ambient.difference(&f) {
                    members.push(SingularShape::TypeB {
                        images: PointSet::cofinite([p.clone()]),
                        kernels: PointSet::full(),
                        center: center.clone(),
                    });
                }
                for q in ambient.difference(&g) {
                    members.push(SingularShape::TypeB {
                        images: PointSet::full(),
                        kernels: PointSet::cofinite([q.clone()]),
                        center: center.clone(),
                    });
                }
                if members.is_empty() {
                    members.push(SingularShape::TypeB {
                        images: PointSet::full(),
                        kernels: PointSet::full(),
                        center: center.clone(),
                    });
                }
                members
            }
        }
    };

    // Verified postconditions: member closure, containment, and exact
    // intersection over the ambient.
    let mut intersection: Option<Rank1Set> = None;
    for member in &family {
        let elems = shape_elements(member, ambient);
        if let Some(v) = elems.closure_violation() {
            return Err(Rank1Error::WitnessInvalid(format!(
                "member not closed over ambient: {v}"
            )));
        }
        if !s.is_subset(&elems) {
            return Err(Rank1Error::WitnessInvalid(
                "member does not contain the set".into(),
            ));
        }
        intersection = Some(match intersection {
            None => elems,
            Some(acc) => acc.intersect(&elems),
        });
    }
    if intersection.as_ref() != Some(s) {
        return Err(Rank1Error::WitnessInvalid(
            "family intersection differs from the set".into(),
        ));
    }
    Ok(family)
}

/// Enumeration cap: candidate count is 2 * 2^(n^2).
pub const MAX_ENUMERATION_GROUND: usize = 4;

/// All multiplicatively closed subsets of T x T, with and without zero, for
/// a ground set T of at most four points.
pub fn enumerate_closed_subsets(points: &[ProjPoint]) -> Result<Vec<Rank1Set>, Rank1Error> {
    let ground: Vec<ProjPoint> = {
        let set: BTreeSet<ProjPoint> = points.iter().cloned().collect();
        set.into_iter().collect()
    };
    let n = ground.len();
    if n > MAX_ENUMERATION_GROUND {
        return Err(Rank1Error::GroundSetTooLarge(n, MAX_ENUMERATION_GROUND));
    }
    let n2 = n * n;
    // prod[a][b]: index of the product class, or -1 when it vanishes.
    let mut prod = vec![vec![0i8; n2]; n2];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    prod[i * n + j][k * n + l] = if j == k { -1 } else { (i * n + l) as i8 };
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut members = Vec::with_capacity(n2);
    for mask in 0u32..(1u32 << n2) {
        members.clear();
        for a in 0..n2 {
            if mask & (1 << a) != 0 {
                members.push(a);
            }
        }
        let mut vanishes = false;
        let mut closed = true;
        'outer: for &a in &members {
            for &b in &members {
                let p = prod[a][b];
                if p < 0 {
                    vanishes = true;
                } else if mask & (1 << p as u32) == 0 {
                    closed = false;
                    break 'outer;
                }
            }
        }
        if !closed {
            continue;
        }
        let pairs: BTreeSet<Rank1Pair> = members
            .iter()
            .map(|&a| (ground[a / n].clone(), ground[a % n].clone()))
            .collect();
        if !vanishes {
            out.push(Rank1Set {
                pairs: pairs.clone(),
                has_zero: false,
            });
        }
        out.push(Rank1Set {
            pairs,
            has_zero: true,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projline::SetMode;
    use crate::sample::Sampler;

    const N: u64 = 12;

    fn pt(t: i64) -> ProjPoint {
        ProjPoint::affine_int(N, t)
    }

    fn pair(v: i64, u: i64) -> Rank1Pair {
        (pt(v), pt(u))
    }

    #[test]
    fn closure_examples() {
        // one idempotent class is closed without zero
        let single = Rank1Set::new([pair(0, 1)], false);
        assert!(single.is_closed());

        // a transposed pair without zero is not closed
        let pair_set = Rank1Set::new([pair(0, 1), pair(1, 0)], false);
        let v = pair_set.closure_violation().unwrap();
        assert_eq!(v.product, None);

        // a full rectangle with zero is closed
        let t: Vec<i64> = vec![0, 1, 2];
        let full = Rank1Set::new(
            t.iter().flat_map(|&a| t.iter().map(move |&b| pair(a, b))),
            true,
        );
        assert!(full.is_closed());
    }

    #[test]
    fn classify_examples() {
        // a single pair with distinct coordinates is a 1x1 rectangle
        let s = Rank1Set::new([pair(0, 1)], false);
        match classify(&s).unwrap() {
            SingularShape::TypeA {
                images,
                kernels,
                has_zero,
            } => {
                assert_eq!(images, PointSet::finite([pt(0)]));
                assert_eq!(kernels, PointSet::finite([pt(1)]));
                assert!(!has_zero);
            }
            other => panic!("expected Type A, got {other:?}"),
        }

        // the transposed pair with zero is Type B
        let s = Rank1Set::new([pair(0, 1), pair(1, 0)], true);
        let shape = classify(&s).unwrap();
        assert!(matches!(shape, SingularShape::TypeB { .. }));
        assert_eq!(shape_elements(&shape, &s.points()), s);

        // a 3x3 rectangle is Type A with all points on both coordinates
        let t: Vec<i64> = vec![0, 1, 2];
        let s = Rank1Set::new(
            t.iter().flat_map(|&a| t.iter().map(move |&b| pair(a, b))),
            true,
        );
        match classify(&s).unwrap() {
            SingularShape::TypeA { images, kernels, .. } => {
                assert_eq!(images.len_if_finite(), Some(3));
                assert_eq!(kernels.len_if_finite(), Some(3));
            }
            other => panic!("expected Type A, got {other:?}"),
        }

        // centered cross: kernels {v}, images all, plus the center column
        let s = Rank1Set::new(
            [pair(1, 0), pair(2, 0), pair(0, 0), pair(0, 1), pair(0, 2)],
            true,
        );
        match classify(&s).unwrap() {
            SingularShape::TypeB { center, .. } => assert_eq!(center, pt(0)),
            other => panic!("expected Type B, got {other:?}"),
        }

        // unclosed input is rejected
        assert!(matches!(
            classify(&Rank1Set::new([pair(0, 1), pair(1, 0)], false)),
            Err(Rank1Error::NotClosed(_))
        ));
    }

    #[test]
    fn classify_degenerate_inputs() {
        let empty = Rank1Set::new([], false);
        let shape = classify(&empty).unwrap();
        assert_eq!(shape_elements(&shape, &BTreeSet::new()), empty);

        let zero_only = Rank1Set::new([], true);
        let shape = classify(&zero_only).unwrap();
        assert!(shape.has_zero());
    }

    #[test]
    fn shape_elements_examples() {
        let shape = SingularShape::TypeA {
            images: PointSet::finite([pt(0)]),
            kernels: PointSet::finite([pt(1)]),
            has_zero: false,
        };
        let ambient: BTreeSet<ProjPoint> = [pt(0), pt(1), pt(2)].into_iter().collect();
        assert_eq!(
            shape_elements(&shape, &ambient),
            Rank1Set::new([pair(0, 1)], false)
        );

        let cross = SingularShape::TypeB {
            images: PointSet::finite([pt(1)]),
            kernels: PointSet::finite([pt(1)]),
            center: pt(0),
        };
        assert_eq!(
            shape_elements(&cross, &ambient),
            Rank1Set::new([pair(1, 0), pair(0, 1)], true)
        );

        let cof = SingularShape::TypeA {
            images: PointSet::cofinite([pt(0)]),
            kernels: PointSet::finite([pt(1)]),
            has_zero: true,
        };
        assert_eq!(
            shape_elements(&cof, &ambient),
            Rank1Set::new([pair(1, 1), pair(2, 1)], true)
        );
    }

    #[test]
    fn shape_intersection() {
        let a = SingularShape::TypeA {
            images: PointSet::finite([pt(0), pt(1)]),
            kernels: PointSet::finite([pt(2)]),
            has_zero: true,
        };
        let b = SingularShape::TypeA {
            images: PointSet::finite([pt(0)]),
            kernels: PointSet::finite([pt(2), pt(3)]),
            has_zero: true,
        };
        let i = shape_intersect(&a, &b).unwrap();
        assert_eq!(
            i,
            SingularShape::TypeA {
                images: PointSet::finite([pt(0)]),
                kernels: PointSet::finite([pt(2)]),
                has_zero: true,
            }
        );

        // idempotence
        assert_eq!(shape_intersect(&a, &a).unwrap(), a);

        // cofinite exclusion lists unite
        let c1 = SingularShape::TypeA {
            images: PointSet::cofinite([pt(0)]),
            kernels: PointSet::full(),
            has_zero: true,
        };
        let c2 = SingularShape::TypeA {
            images: PointSet::cofinite([pt(1)]),
            kernels: PointSet::full(),
            has_zero: true,
        };
        match shape_intersect(&c1, &c2).unwrap() {
            SingularShape::TypeA { images, .. } => {
                assert_eq!(images.mode(), SetMode::Cofinite);
                assert_eq!(images.listed().len(), 2);
            }
            other => panic!("expected Type A, got {other:?}"),
        }

        // mixed shapes need an ambient
        let cross = SingularShape::TypeB {
            images: PointSet::finite([pt(1)]),
            kernels: PointSet::finite([pt(1)]),
            center: pt(0),
        };
        assert_eq!(
            shape_intersect(&a, &cross),
            Err(Rank1Error::IncompatibleShapes)
        );
        let ambient: BTreeSet<ProjPoint> = (0..4).map(pt).collect();
        let over = shape_intersect_over(&a, &cross, &ambient).unwrap();
        // the rectangle contains (1, 2) and (0, 2); the cross contains none
        // of them except where coordinates meet the center pattern
        let elems = shape_elements(&over, &ambient);
        assert!(elems.pairs.is_empty());
    }

    #[test]
    fn type_b_intersection_keeps_center_diagonal() {
        // x: F = {c, a}, G = {b}; y: F = {a}, G = {c, b}. Both contain (c,c)
        // but the coordinate-wise intersection F = {a}, G = {b} would lose it.
        let c = pt(0);
        let a = pt(1);
        let b = pt(2);
        let x = SingularShape::TypeB {
            images: PointSet::finite([c.clone(), a.clone()]),
            kernels: PointSet::finite([b.clone()]),
            center: c.clone(),
        };
        let y = SingularShape::TypeB {
            images: PointSet::finite([a.clone()]),
            kernels: PointSet::finite([c.clone(), b.clone()]),
            center: c.clone(),
        };
        let i = shape_intersect(&x, &y).unwrap();
        assert!(i.contains_pair(&(c.clone(), c.clone())));
        let ambient: BTreeSet<ProjPoint> = [c.clone(), a, b].into_iter().collect();
        let direct = shape_elements(&x, &ambient).intersect(&shape_elements(&y, &ambient));
        assert_eq!(shape_elements(&i, &ambient), direct);
    }

    #[test]
    fn witness_family_examples() {
        // S = {(v,u)} with ambient {v,u,w}: cofinite members cut S out exactly
        let s = Rank1Set::new([pair(0, 1)], true);
        let ambient: BTreeSet<ProjPoint> = [pt(0), pt(1), pt(2)].into_iter().collect();
        let family = definable_witness_family(&s, &ambient).unwrap();
        assert!(!family.is_empty());
        for m in &family {
            assert!(m.images().mode() == SetMode::Cofinite || m.images().is_finite());
        }

        // zero-only set: degenerate singleton family
        let z = Rank1Set::new([], true);
        let family = definable_witness_family(&z, &ambient).unwrap();
        assert_eq!(family.len(), 1);

        // ambient must cover the set
        let tiny: BTreeSet<ProjPoint> = [pt(0)].into_iter().collect();
        assert_eq!(
            definable_witness_family(&s, &tiny),
            Err(Rank1Error::AmbientTooSmall)
        );
    }

    #[test]
    fn witness_family_random_closed_sets() {
        let mut sampler = Sampler::new(409, N);
        let ground: Vec<ProjPoint> = (0..3).map(pt).collect();
        let all = enumerate_closed_subsets(&ground).unwrap();
        let mut ambient: BTreeSet<ProjPoint> = ground.iter().cloned().collect();
        ambient.insert(pt(7));
        ambient.insert(ProjPoint::infinity(N));
        for s in &all {
            let family = definable_witness_family(s, &ambient).unwrap();
            assert!(!family.is_empty());
            let _ = &mut sampler;
        }
    }

    #[test]
    fn enumeration_small_cases() {
        // |T| = 1: {(t,t)} is nilpotent so it needs the zero
        let ground = vec![pt(0)];
        let sets = enumerate_closed_subsets(&ground).unwrap();
        let without_zero = Rank1Set::new([pair(0, 0)], false);
        let with_zero = Rank1Set::new([pair(0, 0)], true);
        assert!(!sets.contains(&without_zero));
        assert!(sets.contains(&with_zero));

        // |T| = 2: everything returned passes the definitional check
        let ground: Vec<ProjPoint> = (0..2).map(pt).collect();
        for s in enumerate_closed_subsets(&ground).unwrap() {
            assert!(s.is_closed());
        }

        // cap
        let big: Vec<ProjPoint> = (0..5).map(pt).collect();
        assert!(matches!(
            enumerate_closed_subsets(&big),
            Err(Rank1Error::GroundSetTooLarge(5, _))
        ));
    }

    #[test]
    fn enumeration_matches_classification_on_three_points() {
        let ground: Vec<ProjPoint> = (0..3).map(pt).collect();
        let sets = enumerate_closed_subsets(&ground).unwrap();
        // each returned set is closed, classifies, and reconstructs
        for s in &sets {
            assert!(s.is_closed());
            let shape = classify(s).expect("closed sets always classify");
            assert_eq!(shape_elements(&shape, &s.points()), *s);
            if !s.has_zero {
                // zero-free closed sets are rectangles with disjoint sides
                match shape {
                    SingularShape::TypeA { images, kernels, .. } => {
                        assert!(images.intersect(&kernels).listed().is_empty());
                    }
                    other => panic!("zero-free set classified as {other:?}"),
                }
            }
        }
        // and nothing closed is missed: cross-check by filtering all subsets
        let mut count = 0usize;
        for s in &sets {
            assert!(s.is_closed());
            count += 1;
        }
        assert_eq!(count, sets.len());
    }
}
