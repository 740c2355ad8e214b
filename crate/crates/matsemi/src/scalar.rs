//! Exact arithmetic in a fixed cyclotomic field Q(zeta_N).
//!
//! Every scalar in this crate lives in one ambient field Q(zeta_N), chosen
//! once per session (default N = 12). Elements are stored as reduced
//! coordinate vectors over the power basis 1, zeta, ..., zeta^(phi(N)-1),
//! so equality is coefficient-wise and all arithmetic is exact.
//!
//! Scalars of different ambient orders never mix: binary operations on
//! mismatched orders are an error, not a coercion.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (num_rational maintains that canonical form).
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("ambient cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero scalar not allowed here")]
    ZeroArgument,
    #[error("mu_{0} is not contained in Q(zeta_{1})")]
    TorsionNotRepresentable(u64, u64),
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Q (ascending coefficient vectors).
// ---------------------------------------------------------------------------

fn ptrim(v: &mut Vec<Rational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn pmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    ptrim(&mut out);
    out
}

/// Long division; `den` must be nonzero. Returns (quotient, remainder).
fn pdivrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    ptrim(&mut rem);
    let mut den = den.to_vec();
    ptrim(&mut den);
    assert!(!den.is_empty(), "polynomial division by zero");
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead = den.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        quot[shift] = factor.clone();
        for (i, d) in den.iter().enumerate() {
            let t = &factor * d;
            rem[shift + i] -= t;
        }
        // The leading term cancels exactly, so the degree strictly drops.
        ptrim(&mut rem);
    }
    ptrim(&mut quot);
    (quot, rem)
}

/// Extended gcd: returns (g, u) with u*a = g modulo b and g the monic gcd.
fn pext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    ptrim(&mut r0);
    ptrim(&mut r1);
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = pdivrem(&r0, &r1);
        let u = psub(&u0, &pmul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    // normalize gcd to monic
    if let Some(lead) = r0.last().cloned() {
        for c in r0.iter_mut() {
            *c /= &lead;
        }
        for c in u0.iter_mut() {
            *c /= &lead;
        }
    }
    (r0, u0)
}

fn psub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    ptrim(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers.
// ---------------------------------------------------------------------------

/// Euler totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Sorted list of divisors.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

// ---------------------------------------------------------------------------
// The ambient field: cached cyclotomic modulus per order.
// ---------------------------------------------------------------------------

struct CycloField {
    phi: usize,
    /// Monic minimal polynomial of zeta_N over Q, ascending, length phi+1.
    modulus: Vec<Rational>,
}

impl CycloField {
    /// Reduce a polynomial in zeta modulo the cyclotomic minimal polynomial
    /// and pad to exactly phi coefficients.
    fn reduce(&self, poly: &[Rational]) -> Vec<Rational> {
        let (_, mut rem) = pdivrem(poly, &self.modulus);
        rem.resize(self.phi, Rational::zero());
        rem
    }
}

fn cyclotomic_polynomial(n: u64) -> Vec<Rational> {
    // x^n - 1 divided by the product of the cyclotomic polynomials of all
    // proper divisors, computed bottom-up.
    let mut table: HashMap<u64, Vec<Rational>> = HashMap::new();
    for d in divisors(n) {
        let mut num = vec![Rational::zero(); d as usize + 1];
        num[0] = -Rational::one();
        num[d as usize] = Rational::one();
        let mut acc = num;
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let (q, r) = pdivrem(&acc, &table[&e]);
            debug_assert!(r.is_empty());
            acc = q;
        }
        table.insert(d, acc);
    }
    table.remove(&n).unwrap()
}

fn field(order: u64) -> Arc<CycloField> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| {
            assert!(order >= 1, "cyclotomic order must be positive");
            let modulus = cyclotomic_polynomial(order);
            Arc::new(CycloField {
                phi: modulus.len() - 1,
                modulus,
            })
        })
        .clone()
}

// ---------------------------------------------------------------------------
// CycloScalar
// ---------------------------------------------------------------------------

/// An element of Q(zeta_N), the exact stand-in for a complex scalar.
///
/// `coeffs` always has length phi(N) and is fully reduced modulo the N-th
/// cyclotomic polynomial, so derived equality and ordering are canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloScalar {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    fn from_reduced(order: u64, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(order));
        CycloScalar { order, coeffs }
    }

    /// Build from an arbitrary polynomial in zeta (any length); reduces.
    pub fn from_poly(order: u64, poly: &[Rational]) -> Self {
        let f = field(order);
        CycloScalar::from_reduced(order, f.reduce(poly))
    }

    pub fn from_rational(order: u64, value: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(order) as usize];
        coeffs[0] = value;
        CycloScalar::from_reduced(order, coeffs)
    }

    pub fn from_int(order: u64, value: i64) -> Self {
        CycloScalar::from_rational(order, rat(value, 1))
    }

    pub fn zero(order: u64) -> Self {
        CycloScalar::from_int(order, 0)
    }

    pub fn one(order: u64) -> Self {
        CycloScalar::from_int(order, 1)
    }

    /// The distinguished primitive N-th root of unity zeta_N.
    pub fn zeta(order: u64) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// zeta_N^k, reduced.
    pub fn zeta_pow(order: u64, k: u64) -> Self {
        let k = (k % order) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        CycloScalar::from_poly(order, &poly)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in the prime field Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), ScalarError> {
        if self.order != other.order {
            Err(ScalarError::OrderMismatch(self.order, other.order))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloScalar::from_reduced(self.order, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloScalar::from_reduced(self.order, coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        Ok(CycloScalar::from_poly(
            self.order,
            &pmul(&self.coeffs, &other.coeffs),
        ))
    }

    pub fn negate(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        CycloScalar::from_reduced(self.order, coeffs)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo
    /// the cyclotomic polynomial (which is irreducible over Q).
    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let f = field(self.order);
        let mut poly = self.coeffs.clone();
        ptrim(&mut poly);
        let (g, u) = pext_gcd(&poly, &f.modulus);
        debug_assert_eq!(g.len(), 1, "cyclotomic modulus must be coprime to a nonzero element");
        let inv_g = g[0].recip();
        let scaled: Vec<Rational> = u.iter().map(|c| c * &inv_g).collect();
        Ok(CycloScalar::from_poly(self.order, &scaled))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check_order(other)?;
        let inv = other.invert()?;
        self.try_mul(&inv)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloScalar::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).unwrap();
            }
            base = base.try_mul(&base).unwrap();
            exp >>= 1;
        }
        acc
    }

    /// The multiplicative order when `self` is a root of unity.
    ///
    /// A nonzero z in Q(zeta_N) is a root of unity iff z^lcm(2,N) = 1; the
    /// order is then the least divisor d of lcm(2,N) with z^d = 1.
    pub fn root_of_unity_order(&self) -> Result<Option<u64>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroArgument);
        }
        let l = lcm_u64(2, self.order);
        if !self.pow(l).is_one() {
            return Ok(None);
        }
        for d in divisors(l) {
            if self.pow(d).is_one() {
                return Ok(Some(d));
            }
        }
        unreachable!("z^l = 1 so some divisor of l is the order");
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c.is_one() {
                        write!(f, "zeta")?;
                    } else {
                        write!(f, "{c}*zeta")?;
                    }
                }
                _ => {
                    if c.is_one() {
                        write!(f, "zeta^{i}")?;
                    } else {
                        write!(f, "{c}*zeta^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                self.$checked(rhs).expect("scalar operands share one ambient order")
            }
        }
        impl std::ops::$trait for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $method(self, rhs: CycloScalar) -> CycloScalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl std::ops::Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        self.negate()
    }
}

impl std::ops::Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        self.negate()
    }
}

// ---------------------------------------------------------------------------
// Multiplicity: Zariski-closed multiplicative scalar sets.
// ---------------------------------------------------------------------------

/// A multiplicative scalar set reported with Zariski-closure semantics.
///
/// The closed subgroups of the multiplicative group are the torsion groups
/// mu_n and the full group itself; `Explicit` keeps a finite enumeration
/// for sets that are not multiplicatively closed (nilpotent multiplicities
/// and intermediate states).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Multiplicity {
    FullTorus,
    RootsOfUnity(u64),
    Explicit(BTreeSet<CycloScalar>),
}

impl Multiplicity {
    pub fn contains(&self, z: &CycloScalar) -> bool {
        match self {
            Multiplicity::FullTorus => !z.is_zero(),
            Multiplicity::RootsOfUnity(n) => !z.is_zero() && z.pow(*n).is_one(),
            Multiplicity::Explicit(set) => set.contains(z),
        }
    }

    /// Containment test between multiplicity sets.
    pub fn subset_of(&self, other: &Multiplicity) -> bool {
        match (self, other) {
            (_, Multiplicity::FullTorus) => true,
            (Multiplicity::FullTorus, _) => false,
            (Multiplicity::RootsOfUnity(n), Multiplicity::RootsOfUnity(m)) => m % n == 0,
            (Multiplicity::Explicit(set), other) => set.iter().all(|z| other.contains(z)),
            (Multiplicity::RootsOfUnity(n), Multiplicity::Explicit(set)) => {
                // mu_n is finite; materialize it in the explicit set's
                // ambient order and test element-wise.
                match set.iter().next() {
                    None => false,
                    Some(w) => {
                        let order = w.order();
                        torsion_bound(order) % n == 0
                            && roots_of_unity(order, *n).iter().all(|z| set.contains(z))
                    }
                }
            }
        }
    }

    /// All elements when the set is finite; None for the full torus.
    pub fn elements(&self, order: u64) -> Option<Vec<CycloScalar>> {
        match self {
            Multiplicity::FullTorus => None,
            Multiplicity::RootsOfUnity(n) => Some(roots_of_unity(order, *n)),
            Multiplicity::Explicit(set) => Some(set.iter().cloned().collect()),
        }
    }

    /// Does z * self land inside other?
    pub fn scaled_subset_of(&self, z: &CycloScalar, other: &Multiplicity, order: u64) -> bool {
        match self.elements(order) {
            None => !z.is_zero() && matches!(other, Multiplicity::FullTorus),
            Some(els) => els.iter().all(|e| other.contains(&(e * z))),
        }
    }
}

/// A primitive m-th root of unity inside Q(zeta_N); requires m | lcm(2, N).
pub fn primitive_root_of_unity(order: u64, m: u64) -> Result<CycloScalar, ScalarError> {
    let l = lcm_u64(2, order);
    if m == 0 || l % m != 0 {
        return Err(ScalarError::TorsionNotRepresentable(m, order));
    }
    // A primitive lcm(2,N)-th root: zeta itself for even N, -zeta for odd N.
    let xi = if order % 2 == 0 {
        CycloScalar::zeta(order)
    } else {
        CycloScalar::zeta(order).negate()
    };
    Ok(xi.pow(l / m))
}

/// The group mu_n inside Q(zeta_N); requires n | lcm(2, N).
pub fn roots_of_unity(order: u64, n: u64) -> Vec<CycloScalar> {
    let xi = primitive_root_of_unity(order, n)
        .unwrap_or_else(|e| panic!("{e}"));
    (0..n).map(|k| xi.pow(k)).collect()
}

/// Zariski closure of the multiplicative semigroup generated by `gens`:
/// mu_n (n the lcm of the generators' orders) when every generator is a
/// root of unity, the full torus otherwise.
pub fn torsion_closure(gens: &[CycloScalar]) -> Result<Multiplicity, ScalarError> {
    let mut n = 1u64;
    for g in gens {
        if g.is_zero() {
            return Err(ScalarError::ZeroArgument);
        }
        match g.root_of_unity_order()? {
            Some(k) => n = lcm_u64(n, k),
            None => return Ok(Multiplicity::FullTorus),
        }
    }
    Ok(Multiplicity::RootsOfUnity(n))
}

/// lcm(2, N): the order of the torsion subgroup of Q(zeta_N)*.
pub fn torsion_bound(order: u64) -> u64 {
    lcm_u64(2, order)
}
