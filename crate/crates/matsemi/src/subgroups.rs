//! The catalog of algebraic subgroups of the projective linear group of
//! the line, up to conjugation: the Borel group, its torus and unipotent
//! subgroups, the infinite dihedral group, the finite rotation groups, and
//! arbitrary finitely generated groups. Provides finite-group closure,
//! orbit decomposition on the projective line, and invariance checking of
//! point sets.
//!
//! Infinite catalog entries cannot be materialized; their orbit structure
//! is built in (one cofinite orbit plus declared finite orbits) and every
//! structural answer is spot-checked against sampled elements.

use std::collections::{BTreeSet, VecDeque};

use crate::mat2::{Mat2, MatError};
use crate::pm2::{project, PM2Elem};
use crate::projline::{moebius_apply, PointSet, ProjError, ProjPoint, SetMode};
use crate::scalar::{primitive_root_of_unity, CycloScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("{0} is not representable over Q(zeta_{1})")]
    NotRepresentable(String, u64),
    #[error("generators must be invertible")]
    SingularGenerator,
    #[error("conjugator must be invertible")]
    SingularConjugator,
    #[error("finitely generated group exceeded the closure cap; declare a catalog group instead")]
    InfiniteGenerated,
    #[error("orbit computation for a finite group needs at least one probe point")]
    NoProbes,
    #[error("structural orbit data failed its spot check: {0}")]
    StructuralCheckFailed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Point(#[from] ProjError),
}

/// Base catalog entry, before conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    FullPgl2,
    Borel,
    Torus,
    Unipotent,
    DInfinity,
    /// Dihedral of order 2n.
    Dn(u64),
    A4,
    S4,
    A5,
    FiniteGenerated(Vec<Mat2>),
}

/// A declared subgroup: a catalog entry together with an optional
/// conjugator c, denoting { c g c^-1 : g in the base group }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub conjugator: Option<Mat2>,
}

impl GroupSpec {
    pub fn plain(kind: GroupKind) -> Self {
        GroupSpec {
            kind,
            conjugator: None,
        }
    }

    pub fn trivial(order: u64) -> Self {
        GroupSpec::plain(GroupKind::FiniteGenerated(vec![Mat2::identity(order)]))
    }

    /// Whether this is an infinite catalog entry with built-in structure.
    pub fn is_infinite_catalog(&self) -> bool {
        matches!(
            self.kind,
            GroupKind::FullPgl2
                | GroupKind::Borel
                | GroupKind::Torus
                | GroupKind::Unipotent
                | GroupKind::DInfinity
        )
    }

    fn conjugate_matrix(&self, g: &Mat2) -> Result<Mat2, GroupError> {
        match &self.conjugator {
            None => Ok(g.clone()),
            Some(c) => {
                let inv = c.inverse().map_err(|_| GroupError::SingularConjugator)?;
                Ok(c.mul(g).mul(&inv))
            }
        }
    }

    fn conjugate_point(&self, p: &ProjPoint) -> Result<ProjPoint, GroupError> {
        match &self.conjugator {
            None => Ok(p.clone()),
            Some(c) => Ok(moebius_apply(c, p)?),
        }
    }

    /// Pull an element back to the base group's coordinates.
    fn unconjugate_matrix(&self, g: &Mat2) -> Result<Mat2, GroupError> {
        match &self.conjugator {
            None => Ok(g.clone()),
            Some(c) => {
                let inv = c.inverse().map_err(|_| GroupError::SingularConjugator)?;
                Ok(inv.mul(g).mul(c))
            }
        }
    }
}

/// Generators delivered by the catalog. For the infinite entries these are
/// finite parameter instantiations of the defining families and the
/// `infinite` tag is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSample {
    pub matrices: Vec<Mat2>,
    pub infinite: bool,
}

fn quaternion_i(order: u64) -> Result<Mat2, GroupError> {
    let i = primitive_root_of_unity(order, 4)
        .map_err(|_| GroupError::NotRepresentable("a primitive 4th root of unity".into(), order))?;
    Ok(Mat2::new([
        i.clone(),
        CycloScalar::zero(order),
        CycloScalar::zero(order),
        i.negate(),
    ])?)
}

/// The rotation of order 3 shared by the tetrahedral and octahedral
/// groups: one half of [[-1+i, 1+i], [-1+i, -1-i]].
fn tetrahedral_rotation(order: u64) -> Result<Mat2, GroupError> {
    let i = primitive_root_of_unity(order, 4)
        .map_err(|_| GroupError::NotRepresentable("a primitive 4th root of unity".into(), order))?;
    let one = CycloScalar::one(order);
    let half = CycloScalar::from_rational(order, crate::scalar::rat(1, 2));
    let m = Mat2::new([
        &i - &one,
        &i + &one,
        &i - &one,
        (&i + &one).negate(),
    ])?;
    Ok(m.scale(&half))
}

fn icosahedral_generators(order: u64) -> Result<Vec<Mat2>, GroupError> {
    let zeta5 = primitive_root_of_unity(order, 5)
        .map_err(|_| GroupError::NotRepresentable("a primitive 5th root of unity".into(), order))?;
    let one = CycloScalar::one(order);
    let zero = CycloScalar::zero(order);
    // golden ratio (1 + sqrt 5)/2 with sqrt 5 = z - z^2 - z^3 + z^4
    let sqrt5 = &zeta5 - &zeta5.pow(2) - zeta5.pow(3) + zeta5.pow(4);
    let phi = (&one + &sqrt5)
        .try_mul(&CycloScalar::from_rational(order, crate::scalar::rat(1, 2)))?;
    let rot5 = Mat2::new([zeta5, zero.clone(), zero, one.clone()])?;
    let inv = Mat2::new([phi.clone(), one.clone(), one, phi.negate()])?;
    Ok(vec![rot5, inv])
}

/// Exact generator matrices (or sample instantiations) for a catalog entry
/// over Q(zeta_N).
pub fn catalog_generators(spec: &GroupSpec, order: u64) -> Result<GeneratorSample, GroupError> {
    let base: GeneratorSample = match &spec.kind {
        GroupKind::FullPgl2 => GeneratorSample {
            matrices: vec![
                Mat2::from_rows(order, [[2, 0], [0, 1]]),
                Mat2::from_rows(order, [[1, 1], [0, 1]]),
                Mat2::from_rows(order, [[0, -1], [1, 0]]),
                Mat2::from_rows(order, [[1, 0], [3, 1]]),
            ],
            infinite: true,
        },
        GroupKind::Borel => GeneratorSample {
            matrices: vec![
                Mat2::from_rows(order, [[2, 0], [0, 1]]),
                Mat2::from_rows(order, [[1, 1], [0, 1]]),
                Mat2::from_rows(order, [[3, 2], [0, 1]]),
            ],
            infinite: true,
        },
        GroupKind::Torus => GeneratorSample {
            matrices: vec![
                Mat2::from_rows(order, [[2, 0], [0, 1]]),
                Mat2::from_rows(order, [[3, 0], [0, 1]]),
                Mat2::from_rows(order, [[-5, 0], [0, 1]]),
            ],
            infinite: true,
        },
        GroupKind::Unipotent => GeneratorSample {
            matrices: vec![
                Mat2::from_rows(order, [[1, 1], [0, 1]]),
                Mat2::from_rows(order, [[1, 2], [0, 1]]),
                Mat2::from_rows(order, [[1, -3], [0, 1]]),
            ],
            infinite: true,
        },
        GroupKind::DInfinity => GeneratorSample {
            matrices: vec![
                Mat2::from_rows(order, [[4, 0], [0, 1]]),
                Mat2::from_rows(order, [[9, 0], [0, 1]]),
                Mat2::from_rows(order, [[0, -1], [1, 0]]),
            ],
            infinite: true,
        },
        GroupKind::Dn(n) => {
            if *n == 0 {
                return Err(GroupError::NotRepresentable("a dihedral group of order 0".into(), order));
            }
            let zeta = primitive_root_of_unity(order, 2 * n).map_err(|_| {
                GroupError::NotRepresentable(
                    format!("a primitive {}th root of unity", 2 * n),
                    order,
                )
            })?;
            let rot = Mat2::diag(zeta.clone(), zeta.pow(2 * n - 1))?;
            let flip = Mat2::from_rows(order, [[0, -1], [1, 0]]);
            GeneratorSample {
                matrices: vec![rot, flip],
                infinite: false,
            }
        }
        GroupKind::A4 => GeneratorSample {
            matrices: vec![quaternion_i(order)?, tetrahedral_rotation(order)?],
            infinite: false,
        },
        GroupKind::S4 => {
            let i = primitive_root_of_unity(order, 4).map_err(|_| {
                GroupError::NotRepresentable("a primitive 4th root of unity".into(), order)
            })?;
            let rot4 = Mat2::diag(i, CycloScalar::one(order))?;
            GeneratorSample {
                matrices: vec![rot4, tetrahedral_rotation(order)?],
                infinite: false,
            }
        }
        GroupKind::A5 => GeneratorSample {
            matrices: icosahedral_generators(order)?,
            infinite: false,
        },
        GroupKind::FiniteGenerated(gens) => {
            for g in gens {
                if !g.is_invertible() {
                    return Err(GroupError::SingularGenerator);
                }
            }
            GeneratorSample {
                matrices: gens.clone(),
                infinite: false,
            }
        }
    };
    let matrices = base
        .matrices
        .iter()
        .map(|g| spec.conjugate_matrix(g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeneratorSample {
        matrices,
        infinite: base.infinite,
    })
}

/// Result of saturating a finite generator set under products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupClosure {
    /// All projective classes, as canonically scaled representatives.
    Finite(Vec<Mat2>),
    /// The cap was exceeded: the generated group is infinite at this scale.
    Infinite,
}

fn canonical_invertible(x: &Mat2) -> Mat2 {
    match project(x) {
        PM2Elem::Invertible { rep } => rep,
        _ => unreachable!("caller checks invertibility"),
    }
}

/// Saturate the projective classes generated by products of the given
/// invertible matrices. A finite result is automatically a group.
pub fn group_closure(gens: &[Mat2], cap: usize) -> Result<GroupClosure, GroupError> {
    let mut canonical = Vec::new();
    for g in gens {
        if !g.is_invertible() {
            return Err(GroupError::SingularGenerator);
        }
        canonical.push(canonical_invertible(g));
    }
    let mut set: BTreeSet<Mat2> = BTreeSet::new();
    let mut queue: VecDeque<Mat2> = VecDeque::new();
    for g in &canonical {
        if set.insert(g.clone()) {
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in &canonical {
            let prod = canonical_invertible(&x.mul(g));
            if set.insert(prod.clone()) {
                if set.len() > cap {
                    return Ok(GroupClosure::Infinite);
                }
                queue.push_back(prod);
            }
        }
    }
    Ok(GroupClosure::Finite(set.into_iter().collect()))
}

/// Materialized element list of a finite (or finitely generated) group.
pub fn materialize(spec: &GroupSpec, order: u64, cap: usize) -> Result<Option<Vec<Mat2>>, GroupError> {
    if spec.is_infinite_catalog() {
        return Ok(None);
    }
    let gens = catalog_generators(spec, order)?;
    match group_closure(&gens.matrices, cap)? {
        GroupClosure::Finite(elems) => Ok(Some(elems)),
        GroupClosure::Infinite => Err(GroupError::InfiniteGenerated),
    }
}

/// A deterministic sample of group elements for spot checks: the whole
/// group when finite, otherwise short products of the catalog samples.
pub fn sampled_elements(
    spec: &GroupSpec,
    order: u64,
    cap: usize,
    target: usize,
) -> Result<Vec<Mat2>, GroupError> {
    if let Some(elems) = materialize(spec, order, cap)? {
        return Ok(elems);
    }
    let gens = catalog_generators(spec, order)?.matrices;
    let mut set: BTreeSet<Mat2> = BTreeSet::new();
    let mut frontier: Vec<Mat2> = vec![Mat2::identity(order)];
    while set.len() < target && !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let prod = canonical_invertible(&x.mul(g));
                if set.insert(prod.clone()) {
                    next.push(prod);
                    if set.len() >= target {
                        break;
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(set.into_iter().collect())
}

/// Orbit structure of a group acting on the projective line: pairwise
/// disjoint finite orbits, plus one cofinite orbit exactly when the group
/// is infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub finite_orbits: Vec<BTreeSet<ProjPoint>>,
    pub cofinite_orbit: Option<PointSet>,
}

impl OrbitDecomposition {
    pub fn declared_points(&self) -> BTreeSet<ProjPoint> {
        self.finite_orbits.iter().flatten().cloned().collect()
    }
}

/// Built-in finite orbits of the infinite catalog entries, before
/// conjugation.
fn structural_finite_orbits(kind: &GroupKind, order: u64) -> Vec<BTreeSet<ProjPoint>> {
    let inf = ProjPoint::infinity(order);
    let zero = ProjPoint::affine_int(order, 0);
    match kind {
        GroupKind::FullPgl2 => vec![],
        GroupKind::Borel | GroupKind::Unipotent => vec![[inf].into_iter().collect()],
        GroupKind::Torus => vec![
            [zero].into_iter().collect(),
            [inf].into_iter().collect(),
        ],
        GroupKind::DInfinity => vec![[zero, inf].into_iter().collect()],
        _ => unreachable!("finite kinds are materialized"),
    }
}

/// Orbits of the given probe points. Finite groups are materialized and
/// their orbits computed exactly; infinite catalog entries return their
/// built-in decomposition, spot-verified against sampled elements.
pub fn orbit_decomposition(
    spec: &GroupSpec,
    probes: &[ProjPoint],
    order: u64,
    cap: usize,
) -> Result<OrbitDecomposition, GroupError> {
    if let Some(elems) = materialize(spec, order, cap)? {
        if probes.is_empty() {
            return Err(GroupError::NoProbes);
        }
        let mut seen: BTreeSet<ProjPoint> = BTreeSet::new();
        let mut orbits = Vec::new();
        for p in probes {
            if seen.contains(p) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for g in &elems {
                orbit.insert(moebius_apply(g, p)?);
            }
            seen.extend(orbit.iter().cloned());
            orbits.push(orbit);
        }
        return Ok(OrbitDecomposition {
            finite_orbits: orbits,
            cofinite_orbit: None,
        });
    }

    let mut finite_orbits = Vec::new();
    for orbit in structural_finite_orbits(&spec.kind, order) {
        let mapped = orbit
            .iter()
            .map(|p| spec.conjugate_point(p))
            .collect::<Result<BTreeSet<_>, _>>()?;
        finite_orbits.push(mapped);
    }
    let declared: BTreeSet<ProjPoint> = finite_orbits.iter().flatten().cloned().collect();
    let decomposition = OrbitDecomposition {
        cofinite_orbit: Some(PointSet::cofinite(declared.clone())),
        finite_orbits,
    };

    // Spot checks: declared orbits are stable under sampled elements, and
    // probe points outside them stay outside.
    let samples = sampled_elements(spec, order, cap, 20)?;
    for orbit in &decomposition.finite_orbits {
        for g in &samples {
            for p in orbit {
                let q = moebius_apply(g, p)?;
                if !orbit.contains(&q) {
                    return Err(GroupError::StructuralCheckFailed(format!(
                        "{g:?} moves {p} out of a declared finite orbit"
                    )));
                }
            }
        }
    }
    for p in probes {
        if declared.contains(p) {
            continue;
        }
        for g in &samples {
            let q = moebius_apply(g, p)?;
            if declared.contains(&q) {
                return Err(GroupError::StructuralCheckFailed(format!(
                    "{g:?} maps probe {p} into a declared finite orbit"
                )));
            }
        }
    }
    Ok(decomposition)
}

/// Evidence that a point set moved under a group element. For a cofinite
/// set the point shown lies in the (finite) complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub element: Option<Mat2>,
    pub point: ProjPoint,
    pub image: Option<ProjPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub invariant: bool,
    pub witness: Option<InvarianceWitness>,
}

impl InvarianceCheck {
    fn holds() -> Self {
        InvarianceCheck {
            invariant: true,
            witness: None,
        }
    }
}

/// Does the group map the set onto itself?
///
/// Finite groups check every element against the listed points (for a
/// cofinite set, against the complement: a bijection fixes a set iff it
/// fixes the complement). Infinite catalog entries decide structurally: the
/// listed points must form a union of whole declared finite orbits.
pub fn is_invariant(
    spec: &GroupSpec,
    set: &PointSet,
    order: u64,
    cap: usize,
) -> Result<InvarianceCheck, GroupError> {
    if let Some(elems) = materialize(spec, order, cap)? {
        for g in &elems {
            for p in set.listed() {
                let q = moebius_apply(g, p)?;
                let stays = match set.mode() {
                    SetMode::Finite => set.contains(&q),
                    SetMode::Cofinite => !set.contains(&q),
                };
                if !stays {
                    return Ok(InvarianceCheck {
                        invariant: false,
                        witness: Some(InvarianceWitness {
                            element: Some(g.clone()),
                            point: p.clone(),
                            image: Some(q),
                        }),
                    });
                }
            }
        }
        return Ok(InvarianceCheck::holds());
    }

    let orbits: Vec<BTreeSet<ProjPoint>> = structural_finite_orbits(&spec.kind, order)
        .into_iter()
        .map(|orbit| {
            orbit
                .iter()
                .map(|p| spec.conjugate_point(p))
                .collect::<Result<BTreeSet<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    // The listed points (the set itself, or its complement) must be a union
    // of whole orbits.
    let listed = set.listed();
    let mut offending: Option<ProjPoint> = None;
    for p in listed {
        let home = orbits.iter().find(|o| o.contains(p));
        let covered = home.map_or(false, |o| o.iter().all(|q| listed.contains(q)));
        if !covered {
            offending = Some(p.clone());
            break;
        }
    }
    match offending {
        None => Ok(InvarianceCheck::holds()),
        Some(p) => {
            // Best-effort concrete witness from the samples.
            let samples = sampled_elements(spec, order, cap, 20)?;
            let mut witness = InvarianceWitness {
                element: None,
                point: p.clone(),
                image: None,
            };
            for g in &samples {
                let q = moebius_apply(g, &p)?;
                let stays = match set.mode() {
                    SetMode::Finite => set.contains(&q),
                    SetMode::Cofinite => !set.contains(&q),
                };
                if !stays {
                    witness.element = Some(g.clone());
                    witness.image = Some(q);
                    break;
                }
            }
            Ok(InvarianceCheck {
                invariant: false,
                witness: Some(witness),
            })
        }
    }
}

/// Projective membership test, structural for the infinite catalog entries.
pub fn contains_projective(
    spec: &GroupSpec,
    g: &Mat2,
    order: u64,
    cap: usize,
) -> Result<bool, GroupError> {
    if !g.is_invertible() {
        return Ok(false);
    }
    let base = spec.unconjugate_matrix(g)?;
    let is_zero = |r: usize, c: usize| base.entry(r, c).is_zero();
    match &spec.kind {
        GroupKind::FullPgl2 => Ok(true),
        GroupKind::Borel => Ok(is_zero(1, 0)),
        GroupKind::Torus => Ok(is_zero(1, 0) && is_zero(0, 1)),
        GroupKind::Unipotent => Ok(is_zero(1, 0) && base.entry(0, 0) == base.entry(1, 1)),
        GroupKind::DInfinity => {
            Ok((is_zero(1, 0) && is_zero(0, 1)) || (is_zero(0, 0) && is_zero(1, 1)))
        }
        _ => {
            let elems = materialize(spec, order, cap)?.expect("finite kind");
            Ok(elems.contains(&canonical_invertible(g)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    const N: u64 = 12;
    const CAP: usize = 10_000;

    fn pt(t: i64) -> ProjPoint {
        ProjPoint::affine_int(N, t)
    }

    fn closure_order(spec: &GroupSpec, order: u64) -> usize {
        let gens = catalog_generators(spec, order).unwrap();
        match group_closure(&gens.matrices, CAP).unwrap() {
            GroupClosure::Finite(elems) => elems.len(),
            GroupClosure::Infinite => panic!("expected a finite group"),
        }
    }

    #[test]
    fn catalog_orders_by_brute_force() {
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::Dn(2)), N), 4);
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::Dn(3)), N), 6);
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::Dn(6)), N), 12);
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::A4), N), 12);
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::S4), N), 24);
        assert_eq!(closure_order(&GroupSpec::plain(GroupKind::A5), 20), 60);
    }

    #[test]
    fn unrepresentable_entries_error() {
        assert!(matches!(
            catalog_generators(&GroupSpec::plain(GroupKind::A5), N),
            Err(GroupError::NotRepresentable(_, 12))
        ));
        // D4 needs an 8th root of unity, absent from Q(zeta_12)
        assert!(matches!(
            catalog_generators(&GroupSpec::plain(GroupKind::Dn(4)), N),
            Err(GroupError::NotRepresentable(_, 12))
        ));
    }

    #[test]
    fn closure_examples() {
        let id = Mat2::identity(N);
        match group_closure(&[id.clone()], CAP).unwrap() {
            GroupClosure::Finite(elems) => assert_eq!(elems, vec![id]),
            _ => panic!(),
        }
        let unipotent = Mat2::from_rows(N, [[1, 1], [0, 1]]);
        assert_eq!(
            group_closure(&[unipotent], 100).unwrap(),
            GroupClosure::Infinite
        );
        assert_eq!(
            group_closure(&[Mat2::from_rows(N, [[1, 0], [0, 0]])], CAP),
            Err(GroupError::SingularGenerator)
        );
    }

    #[test]
    fn closures_are_groups() {
        for kind in [GroupKind::Dn(3), GroupKind::A4, GroupKind::S4] {
            let spec = GroupSpec::plain(kind);
            let elems = materialize(&spec, N, CAP).unwrap().unwrap();
            let set: BTreeSet<Mat2> = elems.iter().cloned().collect();
            assert!(set.contains(&Mat2::identity(N)));
            for a in &elems {
                assert!(set.contains(&canonical_invertible(&a.inverse().unwrap())));
                for b in &elems {
                    assert!(set.contains(&canonical_invertible(&a.mul(b))));
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        // a probe off the fixed points of the torus lies in the cofinite orbit
        let torus = GroupSpec::plain(GroupKind::Torus);
        let dec = orbit_decomposition(&torus, &[pt(1)], N, CAP).unwrap();
        assert_eq!(dec.finite_orbits.len(), 2);
        let cof = dec.cofinite_orbit.unwrap();
        assert!(cof.contains(&pt(1)));
        assert!(!cof.contains(&ProjPoint::infinity(N)));

        // the Borel group fixes the point at infinity
        let borel = GroupSpec::plain(GroupKind::Borel);
        let dec = orbit_decomposition(&borel, &[ProjPoint::infinity(N)], N, CAP).unwrap();
        assert_eq!(dec.finite_orbits, vec![[ProjPoint::infinity(N)].into_iter().collect()]);

        // dihedral orbits have size dividing the group order
        let d3 = GroupSpec::plain(GroupKind::Dn(3));
        let probes: Vec<ProjPoint> = (-3..5).map(pt).collect();
        let dec = orbit_decomposition(&d3, &probes, N, CAP).unwrap();
        assert!(dec.cofinite_orbit.is_none());
        for orbit in &dec.finite_orbits {
            assert_eq!(6 % orbit.len(), 0);
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let mut s = Sampler::new(414, N);
        for (kind, expected) in [
            (GroupKind::Dn(2), 4),
            (GroupKind::Dn(3), 6),
            (GroupKind::A4, 12),
            (GroupKind::S4, 24),
        ] {
            let spec = GroupSpec::plain(kind);
            let probes: Vec<ProjPoint> = (0..6).map(|_| s.point()).collect();
            let dec = orbit_decomposition(&spec, &probes, N, CAP).unwrap();
            for orbit in &dec.finite_orbits {
                assert_eq!(expected % orbit.len(), 0);
            }
        }
    }

    #[test]
    fn invariance_examples() {
        let torus = GroupSpec::plain(GroupKind::Torus);
        let fixed_pair = PointSet::finite([ProjPoint::infinity(N), pt(0)]);
        assert!(is_invariant(&torus, &fixed_pair, N, CAP).unwrap().invariant);

        let borel = GroupSpec::plain(GroupKind::Borel);
        let origin_only = PointSet::finite([pt(0)]);
        let check = is_invariant(&borel, &origin_only, N, CAP).unwrap();
        assert!(!check.invariant);
        let w = check.witness.unwrap();
        assert_eq!(w.point, pt(0));
        assert!(w.element.is_some());

        // a full orbit of a finite group is invariant by construction
        let a4 = GroupSpec::plain(GroupKind::A4);
        let dec = orbit_decomposition(&a4, &[pt(1)], N, CAP).unwrap();
        let orbit = PointSet::finite(dec.finite_orbits[0].iter().cloned());
        assert!(is_invariant(&a4, &orbit, N, CAP).unwrap().invariant);

        // cofinite sets: invariant iff the complement is
        let cof = PointSet::cofinite([ProjPoint::infinity(N), pt(0)]);
        assert!(is_invariant(&torus, &cof, N, CAP).unwrap().invariant);
        let cof_bad = PointSet::cofinite([pt(2)]);
        assert!(!is_invariant(&torus, &cof_bad, N, CAP).unwrap().invariant);
    }

    #[test]
    fn conjugated_specs_have_conjugated_orbits() {
        let mut s = Sampler::new(415, N);
        for _ in 0..10 {
            let c = s.invertible();
            let spec = GroupSpec {
                kind: GroupKind::Dn(3),
                conjugator: Some(c.clone()),
            };
            let base = GroupSpec::plain(GroupKind::Dn(3));
            let p = s.point();
            let moved = moebius_apply(&c, &p).unwrap();
            let base_orbit = &orbit_decomposition(&base, &[p], N, CAP).unwrap().finite_orbits[0];
            let conj_orbit = &orbit_decomposition(&spec, &[moved], N, CAP)
                .unwrap()
                .finite_orbits[0];
            let mapped: BTreeSet<ProjPoint> = base_orbit
                .iter()
                .map(|q| moebius_apply(&c, q).unwrap())
                .collect();
            assert_eq!(&mapped, conj_orbit);
        }
    }

    #[test]
    fn conjugated_structural_data() {
        let c = Mat2::from_rows(N, [[1, 1], [0, 1]]);
        let spec = GroupSpec {
            kind: GroupKind::Torus,
            conjugator: Some(c.clone()),
        };
        let dec = orbit_decomposition(&spec, &[pt(5)], N, CAP).unwrap();
        // fixed points move with the conjugator: 0 -> 1, infinity -> infinity
        let expected: BTreeSet<ProjPoint> = [pt(1)].into_iter().collect();
        assert!(dec.finite_orbits.contains(&expected));
        assert!(is_invariant(&spec, &PointSet::finite([pt(1)]), N, CAP)
            .unwrap()
            .invariant);
        assert!(!is_invariant(&spec, &PointSet::finite([pt(0)]), N, CAP)
            .unwrap()
            .invariant);
    }

    #[test]
    fn structural_membership() {
        let borel = GroupSpec::plain(GroupKind::Borel);
        assert!(contains_projective(&borel, &Mat2::from_rows(N, [[2, 5], [0, 1]]), N, CAP).unwrap());
        assert!(!contains_projective(&borel, &Mat2::from_rows(N, [[1, 0], [1, 1]]), N, CAP).unwrap());
        let dinf = GroupSpec::plain(GroupKind::DInfinity);
        assert!(contains_projective(&dinf, &Mat2::from_rows(N, [[0, -7], [1, 0]]), N, CAP).unwrap());
        assert!(!contains_projective(&dinf, &Mat2::from_rows(N, [[1, 1], [0, 1]]), N, CAP).unwrap());
        let d2 = GroupSpec::plain(GroupKind::Dn(2));
        assert!(contains_projective(&d2, &Mat2::from_rows(N, [[-1, 0], [0, 1]]), N, CAP).unwrap());
        assert!(!contains_projective(&d2, &Mat2::from_rows(N, [[2, 0], [0, 1]]), N, CAP).unwrap());
    }

    #[test]
    fn infinite_generated_is_reported_not_guessed() {
        let spec = GroupSpec::plain(GroupKind::FiniteGenerated(vec![Mat2::from_rows(
            N,
            [[1, 1], [0, 1]],
        )]));
        assert_eq!(
            orbit_decomposition(&spec, &[pt(0)], N, 100),
            Err(GroupError::InfiniteGenerated)
        );
    }
}
