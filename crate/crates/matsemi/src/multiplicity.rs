//! Multiplicity sets of singular matrix semigroups: the scalar attached to
//! each projective class, the product formula for idempotent pairs, the
//! nilpotent product formula, and verification of the multiplicity laws on
//! concrete data.
//!
//! For an element x of a semigroup S, the multiplicity is the set of
//! scalars z with z*x in S. Idempotent classes carry multiplicatively
//! closed sets, reported with Zariski-closure semantics (a torsion group or
//! the full torus); nilpotent classes may carry arbitrary finite sets, so
//! the scale of a concrete nilpotent representative must be kept.

use std::collections::{BTreeMap, BTreeSet};

use crate::mat2::{Mat2, MatError};
use crate::pm2::{pm2_mul, project, scalar_ratio, PM2Elem};
use crate::projline::ProjPoint;
use crate::rank1::{classify, Rank1Error, Rank1Pair, Rank1Set, SingularShape};
use crate::scalar::{
    roots_of_unity, torsion_bound, torsion_closure, CycloScalar, Multiplicity, ScalarError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultError {
    #[error("the {0} factor is not idempotent data (image = kernel)")]
    NotIdempotentData(&'static str),
    #[error("the product vanishes (kernel of the left factor is the image of the right)")]
    ZeroProduct,
    #[error("the product is nilpotent, not a multiple of an idempotent")]
    NilpotentProduct,
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("anchor points must be pairwise distinct")]
    AnchorsNotDistinct,
    #[error("kernel of the right factor must equal the image of the left factor")]
    KernelMismatch,
    #[error("input contains an invertible matrix")]
    NonSingularInput,
    #[error(transparent)]
    Shape(#[from] Rank1Error),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Scalar factor of a product of two rank-1 idempotents.
///
/// For idempotents e on (v,u) = ([a:b],[c:d]) and f on (v',u') =
/// ([x:y],[z:w]) whose product is a nonzero multiple of an idempotent, the
/// product is lambda * h with h the idempotent on (v, u') and
///
///   lambda = (aw - bz)(dx - cy) / ((ad - bc)(xw - yz)),
///
/// independent of the homogeneous representatives.
pub fn lambda_product(
    e: &Rank1Pair,
    f: &Rank1Pair,
) -> Result<(CycloScalar, Rank1Pair), MultError> {
    let (v, u) = e;
    let (vp, up) = f;
    if v == u {
        return Err(MultError::NotIdempotentData("left"));
    }
    if vp == up {
        return Err(MultError::NotIdempotentData("right"));
    }
    if u == vp {
        return Err(MultError::ZeroProduct);
    }
    if v == up {
        return Err(MultError::NilpotentProduct);
    }
    let (a, b) = (v.a(), v.b());
    let (c, d) = (u.a(), u.b());
    let (x, y) = (vp.a(), vp.b());
    let (z, w) = (up.a(), up.b());
    let num = (a * w - b * z) * (d * x - c * y);
    let den = (a * d - b * c) * (x * w - y * z);
    let lambda = num.try_div(&den)?;
    Ok((lambda, (v.clone(), up.clone())))
}

/// Inverse of the lambda map in its kernel argument.
///
/// For fixed pairwise-distinct anchors v = [a:b], v' = [x:y], u' = [z:w],
/// the map [c:d] -> lambda is a bijection from the line minus {v, v'} onto
/// the nonzero scalars; this solves the homogeneous linear equation
///
///   [lambda*b*(xw-yz) - y*(aw-bz)] c + [x*(aw-bz) - a*lambda*(xw-yz)] d = 0
///
/// for the unique preimage [c:d].
pub fn lambda_preimage(
    lambda: &CycloScalar,
    v: &ProjPoint,
    vp: &ProjPoint,
    up: &ProjPoint,
) -> Result<ProjPoint, MultError> {
    if lambda.is_zero() {
        return Err(MultError::ZeroLambda);
    }
    if v == vp || v == up || vp == up {
        return Err(MultError::AnchorsNotDistinct);
    }
    let (a, b) = (v.a(), v.b());
    let (x, y) = (vp.a(), vp.b());
    let (z, w) = (up.a(), up.b());
    let aw_bz = a * w - b * z;
    let xw_yz = x * w - y * z;
    let coeff_c = lambda * b * &xw_yz - y * &aw_bz;
    let coeff_d = x * &aw_bz - &(a * lambda) * &xw_yz;
    Ok(ProjPoint::new(coeff_d, coeff_c.negate()).map_err(MatError::from)?)
}

fn idempotent_pair_preconditions(e: &Rank1Pair, f: &Rank1Pair) -> Result<(), MultError> {
    if e.0 == e.1 {
        return Err(MultError::NotIdempotentData("left"));
    }
    if f.0 == f.1 {
        return Err(MultError::NotIdempotentData("right"));
    }
    if f.1 != e.0 {
        return Err(MultError::KernelMismatch);
    }
    if e.1 == f.0 {
        return Err(MultError::ZeroProduct);
    }
    Ok(())
}

/// Product of the idempotents on (v,u) and (v',v): a nilpotent with image
/// and kernel v, computed by exact matrix multiplication.
pub fn nilpotent_product(e: &Rank1Pair, f: &Rank1Pair) -> Result<Mat2, MultError> {
    idempotent_pair_preconditions(e, f)?;
    let left = Mat2::idempotent_from_points(&e.0, &e.1)?;
    let right = Mat2::idempotent_from_points(&f.0, &f.1)?;
    Ok(left.mul(&right))
}

/// The same product through the closed formula: with v = [a:b], u = [c:d],
/// v' = [x:y],
///
///   e*f = (cy - dx) / ((ad - bc)(ay - bx)) * [[ab, -a^2], [b^2, -ab]].
///
/// The bottom-right entry is -ab, forced by the nilpotent parametrization
/// and by direct multiplication.
pub fn nilpotent_product_formula(e: &Rank1Pair, f: &Rank1Pair) -> Result<Mat2, MultError> {
    idempotent_pair_preconditions(e, f)?;
    let (a, b) = (e.0.a(), e.0.b());
    let (c, d) = (e.1.a(), e.1.b());
    let (x, y) = (f.0.a(), f.0.b());
    let num = c * y - d * x;
    let den = (a * d - b * c) * (a * y - b * x);
    let coeff = num.try_div(&den)?;
    let base = Mat2::new([
        a * b,
        (a * a).negate(),
        b * b,
        (a * b).negate(),
    ])?;
    Ok(base.scale(&coeff))
}

/// Multiplicity data for one projective class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    /// Canonical base: the idempotent of the class when image != kernel,
    /// otherwise the least concrete member (the scale of a nilpotent cannot
    /// be recovered from its class).
    pub base: Mat2,
    pub multiplicity: Multiplicity,
}

/// The singular part of a monoid: classified shape plus per-class
/// multiplicity data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPart {
    pub order: u64,
    pub shape: SingularShape,
    pub classes: BTreeMap<Rank1Pair, ClassData>,
    /// Common idempotent multiplicity when all idempotent classes agree.
    pub z_idempotent: Option<Multiplicity>,
    /// Common nilpotent multiplicity when all nilpotent classes agree.
    pub z_nilpotent: Option<Multiplicity>,
    /// A concrete nilpotent member, present iff a nonzero nilpotent exists.
    pub nilpotent_base: Option<Mat2>,
    /// All nonzero classes share one multiplicity set.
    pub equal_multiplicity: bool,
}

impl SingularPart {
    /// Trivial singular part (no singular elements).
    pub fn empty(order: u64) -> Self {
        SingularPart {
            order,
            shape: SingularShape::TypeA {
                images: crate::projline::PointSet::empty(),
                kernels: crate::projline::PointSet::empty(),
                has_zero: false,
            },
            classes: BTreeMap::new(),
            z_idempotent: None,
            z_nilpotent: None,
            nilpotent_base: None,
            equal_multiplicity: true,
        }
    }

    /// The multiplicity governing a class, falling back to the common
    /// values for classes not individually listed.
    pub fn multiplicity_for(&self, pair: &Rank1Pair) -> Option<&Multiplicity> {
        if let Some(data) = self.classes.get(pair) {
            return Some(&data.multiplicity);
        }
        if pair.0 == pair.1 {
            self.z_nilpotent.as_ref()
        } else {
            self.z_idempotent.as_ref()
        }
    }

    /// Exact membership of a matrix in the denoted singular set.
    pub fn contains(&self, m: &Mat2) -> bool {
        match project(m) {
            PM2Elem::Zero => self.shape.has_zero(),
            PM2Elem::Invertible { .. } => false,
            PM2Elem::RankOne { image, kernel } => {
                let pair = (image.clone(), kernel.clone());
                if !self.shape.contains_pair(&pair) {
                    return false;
                }
                let Some(mult) = self.multiplicity_for(&pair) else {
                    return false;
                };
                if *mult == Multiplicity::FullTorus {
                    return true;
                }
                let base = if let Some(data) = self.classes.get(&pair) {
                    data.base.clone()
                } else if image != kernel {
                    match Mat2::idempotent_from_points(&image, &kernel) {
                        Ok(e) => e,
                        Err(_) => return false,
                    }
                } else {
                    match &self.nilpotent_base {
                        Some(n) if project(n) == project(m) => n.clone(),
                        // Torsion nilpotent data without a concrete scale is
                        // undecidable; report non-membership rather than guess.
                        _ => return false,
                    }
                };
                match scalar_ratio(m, &base) {
                    Ok(z) => mult.contains(&z),
                    Err(_) => false,
                }
            }
        }
    }

    pub fn has_nilpotent(&self) -> bool {
        self.nilpotent_base.is_some() || self.classes.keys().any(|(v, u)| v == u)
    }

    /// Mirror through the adjugate anti-automorphism: images and kernels
    /// swap, class bases map exactly (adj of the idempotent on (v,u) is the
    /// idempotent on (u,v); adj of a nilpotent is its negative), and all
    /// multiplicity sets are preserved.
    pub fn adjugate(&self) -> SingularPart {
        let shape = match &self.shape {
            SingularShape::TypeA {
                images,
                kernels,
                has_zero,
            } => SingularShape::TypeA {
                images: kernels.clone(),
                kernels: images.clone(),
                has_zero: *has_zero,
            },
            SingularShape::TypeB {
                images,
                kernels,
                center,
            } => SingularShape::TypeB {
                images: kernels.clone(),
                kernels: images.clone(),
                center: center.clone(),
            },
        };
        let classes = self
            .classes
            .iter()
            .map(|((v, u), data)| {
                (
                    (u.clone(), v.clone()),
                    ClassData {
                        base: data.base.adjugate(),
                        multiplicity: data.multiplicity.clone(),
                    },
                )
            })
            .collect();
        SingularPart {
            order: self.order,
            shape,
            classes,
            z_idempotent: self.z_idempotent.clone(),
            z_nilpotent: self.z_nilpotent.clone(),
            nilpotent_base: self.nilpotent_base.as_ref().map(|n| n.adjugate()),
            equal_multiplicity: self.equal_multiplicity,
        }
    }
}

fn common_value(values: Vec<&Multiplicity>) -> Option<Multiplicity> {
    let mut it = values.into_iter();
    let first = it.next()?;
    if it.all(|v| v == first) {
        Some(first.clone())
    } else {
        None
    }
}

/// Multiplicity of a nilpotent class from its enumerated scalar ratios.
///
/// Unlike idempotent multiplicities these need not be multiplicatively
/// closed, so the exact finite set is kept unless it is a full torsion
/// group. Saturation output (`closed_input = false`) containing a
/// non-torsion ratio denotes a Zariski-dense scalar set.
pub(crate) fn nilpotent_multiplicity(
    order: u64,
    ratios: &BTreeSet<CycloScalar>,
    closed_input: bool,
) -> Result<Multiplicity, MultError> {
    let mut all_torsion = true;
    let mut n = 1u64;
    for z in ratios {
        if z.is_zero() {
            return Err(ScalarError::ZeroArgument.into());
        }
        match z.root_of_unity_order()? {
            Some(k) => n = n.max(1).lcm_with(k),
            None => all_torsion = false,
        }
    }
    if !all_torsion {
        return Ok(if closed_input {
            Multiplicity::Explicit(ratios.clone())
        } else {
            Multiplicity::FullTorus
        });
    }
    let mu: BTreeSet<CycloScalar> = roots_of_unity(order, n).into_iter().collect();
    if mu == *ratios {
        Ok(Multiplicity::RootsOfUnity(n))
    } else {
        Ok(Multiplicity::Explicit(ratios.clone()))
    }
}

trait LcmWith {
    fn lcm_with(self, other: u64) -> u64;
}

impl LcmWith for u64 {
    fn lcm_with(self, other: u64) -> u64 {
        num_integer::Integer::lcm(&self, &other)
    }
}

/// Group a concrete set of singular matrices by projective class and record
/// each class's multiplicity relative to its canonical base.
///
/// `closed_input` states that the elements form a literally closed set (as
/// opposed to saturation output from the closure engine, where a
/// non-torsion scalar marks a Zariski-dense class).
pub fn compute_multiplicities(
    order: u64,
    elements: &[Mat2],
    closed_input: bool,
) -> Result<SingularPart, MultError> {
    let mut has_zero = false;
    let mut groups: BTreeMap<Rank1Pair, Vec<Mat2>> = BTreeMap::new();
    for m in elements {
        match m.rank() {
            0 => has_zero = true,
            1 => {
                let (image, kernel) = m.image_kernel()?;
                groups.entry((image, kernel)).or_default().push(m.clone());
            }
            _ => return Err(MultError::NonSingularInput),
        }
    }

    let mut classes: BTreeMap<Rank1Pair, ClassData> = BTreeMap::new();
    for (pair, members) in &groups {
        let (v, u) = pair;
        let base = if v != u {
            Mat2::idempotent_from_points(v, u)?
        } else {
            members.iter().min().expect("nonempty class").clone()
        };
        let ratios: BTreeSet<CycloScalar> = members
            .iter()
            .map(|m| scalar_ratio(m, &base))
            .collect::<Result<_, _>>()?;
        let multiplicity = if v != u {
            let gens: Vec<CycloScalar> = ratios.iter().cloned().collect();
            torsion_closure(&gens)?
        } else {
            nilpotent_multiplicity(order, &ratios, closed_input)?
        };
        classes.insert(pair.clone(), ClassData { base, multiplicity });
    }
    assemble_singular_part(order, classes, has_zero)
}

/// Assemble classified per-class data into a `SingularPart`, deriving the
/// shape and the common multiplicity summaries.
pub(crate) fn assemble_singular_part(
    order: u64,
    classes: BTreeMap<Rank1Pair, ClassData>,
    has_zero: bool,
) -> Result<SingularPart, MultError> {
    let shape = classify(&Rank1Set::new(classes.keys().cloned(), has_zero))?;
    let z_idempotent = common_value(
        classes
            .iter()
            .filter(|((v, u), _)| v != u)
            .map(|(_, d)| &d.multiplicity)
            .collect(),
    );
    let z_nilpotent = common_value(
        classes
            .iter()
            .filter(|((v, u), _)| v == u)
            .map(|(_, d)| &d.multiplicity)
            .collect(),
    );
    let nilpotent_base = classes
        .iter()
        .find(|((v, u), _)| v == u)
        .map(|(_, d)| d.base.clone());
    let distinct: BTreeSet<&Multiplicity> = classes.values().map(|d| &d.multiplicity).collect();
    let equal_multiplicity = distinct.len() <= 1;

    Ok(SingularPart {
        order,
        shape,
        classes,
        z_idempotent,
        z_nilpotent,
        nilpotent_base,
        equal_multiplicity,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawStatus {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    pub status: LawStatus,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn push(&mut self, law: &str, status: LawStatus, witness: Option<String>) {
        self.checks.push(LawCheck {
            law: law.to_string(),
            status,
            witness,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status != LawStatus::Violated)
    }
}

fn side_len(set: &crate::projline::PointSet) -> Option<usize> {
    set.len_if_finite()
}

/// Check the multiplicity laws on concrete class data and report each with
/// a witness on violation.
pub fn check_multiplicity_laws(part: &SingularPart) -> LawReport {
    let mut report = LawReport::default();
    let idempotent_classes: Vec<(&Rank1Pair, &ClassData)> = part
        .classes
        .iter()
        .filter(|((v, u), _)| v != u)
        .collect();
    let nilpotent_classes: Vec<(&Rank1Pair, &ClassData)> = part
        .classes
        .iter()
        .filter(|((v, u), _)| v == u)
        .collect();
    let is_type_a = matches!(part.shape, SingularShape::TypeA { .. });
    let f_len = side_len(part.shape.images());
    let g_len = side_len(part.shape.kernels());
    let wide = f_len.map_or(true, |n| n > 1) && g_len.map_or(true, |n| n > 1);
    let single_line = f_len == Some(1) || g_len == Some(1);

    // Law: all idempotent multiplicities agree (rectangle shapes only).
    if !is_type_a {
        report.push(
            "idempotent-multiplicities-agree",
            LawStatus::NotApplicable,
            Some("the rectangle hypothesis fails for a centered cross; arms may differ".into()),
        );
    } else {
        let mut status = LawStatus::Holds;
        let mut witness = None;
        for window in idempotent_classes.windows(2) {
            let (p1, d1) = &window[0];
            let (p2, d2) = &window[1];
            if d1.multiplicity != d2.multiplicity {
                status = LawStatus::Violated;
                witness = Some(format!(
                    "classes ({},{}) and ({},{}) carry {:?} vs {:?}",
                    p1.0, p1.1, p2.0, p2.1, d1.multiplicity, d2.multiplicity
                ));
                break;
            }
        }
        report.push("idempotent-multiplicities-agree", status, witness);
    }

    // Law: with both sides of the rectangle nontrivial, nilpotent classes
    // carry the idempotent multiplicity.
    if is_type_a && wide && !nilpotent_classes.is_empty() && !idempotent_classes.is_empty() {
        let ze = &idempotent_classes[0].1.multiplicity;
        let mut status = LawStatus::Holds;
        let mut witness = None;
        for (pair, data) in &nilpotent_classes {
            if &data.multiplicity != ze {
                status = LawStatus::Violated;
                witness = Some(format!(
                    "nilpotent class ({},{}) carries {:?}, idempotents carry {:?}",
                    pair.0, pair.1, data.multiplicity, ze
                ));
                break;
            }
        }
        report.push("nilpotent-multiplicity-agrees", status, witness);
    } else {
        report.push(
            "nilpotent-multiplicity-agrees",
            LawStatus::NotApplicable,
            None,
        );
    }

    // Laws for a single-line rectangle: one nilpotent class at most, the
    // idempotent multiplicity embeds in the nilpotent one, nilpotents form
    // an ideal, and idempotent products are idempotent with unit scalar.
    if is_type_a && single_line && !nilpotent_classes.is_empty() {
        let mut status = LawStatus::Holds;
        let mut witness = None;
        if nilpotent_classes.len() > 1 {
            status = LawStatus::Violated;
            witness = Some("more than one nilpotent class".into());
        }
        if status == LawStatus::Holds {
            let zn = &nilpotent_classes[0].1.multiplicity;
            for (pair, data) in &idempotent_classes {
                if !data.multiplicity.subset_of(zn) {
                    status = LawStatus::Violated;
                    witness = Some(format!(
                        "Z of idempotent class ({},{}) is not contained in the nilpotent Z",
                        pair.0, pair.1
                    ));
                    break;
                }
            }
        }
        if status == LawStatus::Holds {
            // class-level ideal property
            'ideal: for (np, _) in &nilpotent_classes {
                let n_elem = PM2Elem::RankOne {
                    image: np.0.clone(),
                    kernel: np.1.clone(),
                };
                for (cp, _) in part.classes.iter() {
                    let c_elem = PM2Elem::RankOne {
                        image: cp.0.clone(),
                        kernel: cp.1.clone(),
                    };
                    for prod in [pm2_mul(&n_elem, &c_elem), pm2_mul(&c_elem, &n_elem)] {
                        let ok = match &prod {
                            PM2Elem::Zero => part.shape.has_zero(),
                            PM2Elem::RankOne { image, kernel } => image == kernel,
                            PM2Elem::Invertible { .. } => false,
                        };
                        if !ok {
                            status = LawStatus::Violated;
                            witness = Some(format!(
                                "product of ({},{}) with ({},{}) leaves the nilpotent ideal",
                                np.0, np.1, cp.0, cp.1
                            ));
                            break 'ideal;
                        }
                    }
                }
            }
        }
        report.push("single-line-nilpotents-form-ideal", status, witness);
    } else {
        report.push(
            "single-line-nilpotents-form-ideal",
            LawStatus::NotApplicable,
            None,
        );
    }

    if is_type_a && single_line && idempotent_classes.len() >= 1 {
        let mut status = LawStatus::Holds;
        let mut witness = None;
        'pairs: for (p1, _) in &idempotent_classes {
            for (p2, _) in &idempotent_classes {
                match lambda_product(p1, p2) {
                    Ok((lambda, h)) => {
                        if !lambda.is_one() || h.0 == h.1 {
                            status = LawStatus::Violated;
                            witness = Some(format!(
                                "({},{}) * ({},{}) has scalar {} on ({},{})",
                                p1.0, p1.1, p2.0, p2.1, lambda, h.0, h.1
                            ));
                            break 'pairs;
                        }
                    }
                    Err(MultError::ZeroProduct) => {}
                    Err(MultError::NilpotentProduct) => {
                        status = LawStatus::Violated;
                        witness = Some(format!(
                            "({},{}) * ({},{}) is nilpotent",
                            p1.0, p1.1, p2.0, p2.1
                        ));
                        break 'pairs;
                    }
                    Err(e) => {
                        status = LawStatus::Violated;
                        witness = Some(e.to_string());
                        break 'pairs;
                    }
                }
            }
        }
        report.push("single-line-idempotent-products", status, witness);
    } else {
        report.push(
            "single-line-idempotent-products",
            LawStatus::NotApplicable,
            None,
        );
    }

    // Law: cross decomposition with its exact product relations.
    if let SingularShape::TypeB { center, .. } = &part.shape {
        let mut status = LawStatus::Holds;
        let mut witness = None;
        let e_side: Vec<&ClassData> = part
            .classes
            .iter()
            .filter(|((v, u), _)| v == center && u != center)
            .map(|(_, d)| d)
            .collect();
        let f_side: Vec<&ClassData> = part
            .classes
            .iter()
            .filter(|((v, u), _)| u == center && v != center)
            .map(|(_, d)| d)
            .collect();
        // arm-internal multiplicities agree
        for (label, arm) in [("image-center", &e_side), ("kernel-center", &f_side)] {
            let distinct: BTreeSet<&Multiplicity> =
                arm.iter().map(|d| &d.multiplicity).collect();
            if distinct.len() > 1 {
                status = LawStatus::Violated;
                witness = Some(format!("{label} arm carries unequal multiplicities"));
            }
        }
        // exact product relations on canonical bases
        if status == LawStatus::Holds {
            let n = part.nilpotent_base.clone();
            'rel: for e in &e_side {
                for f in &f_side {
                    if !f.base.mul(&e.base).is_zero() {
                        status = LawStatus::Violated;
                        witness = Some("f*e is not zero".into());
                        break 'rel;
                    }
                    if let Some(n) = &n {
                        if !n.mul(&e.base).is_zero()
                            || !f.base.mul(n).is_zero()
                            || e.base.mul(n) != *n
                            || n.mul(&f.base) != *n
                        {
                            status = LawStatus::Violated;
                            witness = Some("nilpotent relations fail".into());
                            break 'rel;
                        }
                    }
                }
            }
        }
        report.push("cross-decomposition-relations", status, witness);
    } else {
        report.push(
            "cross-decomposition-relations",
            LawStatus::NotApplicable,
            None,
        );
    }

    // Law: a rectangle with a nontrivial side and more kernels than any
    // torsion group can hold forces the full torus.
    let bound = torsion_bound(part.order) as usize;
    let g_big = !part.shape.kernels().is_finite() || g_len.map_or(false, |n| n > bound);
    let f_big = !part.shape.images().is_finite() || f_len.map_or(false, |n| n > bound);
    let forced = is_type_a
        && ((f_len.map_or(true, |n| n > 1) && g_big)
            || (g_len.map_or(true, |n| n > 1) && f_big));
    if forced && !part.classes.is_empty() {
        let mut status = LawStatus::Holds;
        let mut witness = None;
        for (pair, data) in &part.classes {
            if data.multiplicity != Multiplicity::FullTorus {
                status = LawStatus::Violated;
                witness = Some(format!(
                    "class ({},{}) carries {:?} despite the forced full torus",
                    pair.0, pair.1, data.multiplicity
                ));
                break;
            }
        }
        report.push("oversized-side-forces-full-torus", status, witness);
    } else {
        report.push(
            "oversized-side-forces-full-torus",
            LawStatus::NotApplicable,
            None,
        );
    }

    report
}
