//! Seeded random generation of scalars, points, and matrices for the
//! verification harness. A fixed seed gives a fully deterministic stream.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mat2::Mat2;
use crate::projline::ProjPoint;
use crate::scalar::{rat, torsion_bound, CycloScalar};

pub struct Sampler {
    rng: ChaCha8Rng,
    order: u64,
}

impl Sampler {
    pub fn new(seed: u64, order: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            order,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// True once in `n` draws.
    pub fn flip(&mut self, n: u32) -> bool {
        self.rng.gen_ratio(1, n)
    }

    pub fn usize_below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn rational(&mut self) -> crate::scalar::Rational {
        rat(self.rng.gen_range(-9..=9), self.rng.gen_range(1..=6))
    }

    /// A small field element: usually rational, sometimes with zeta terms.
    pub fn scalar(&mut self) -> CycloScalar {
        let mut s = CycloScalar::from_rational(self.order, self.rational());
        if self.rng.gen_bool(0.35) && self.order > 2 {
            let k = self.rng.gen_range(1..self.order);
            let coeff = CycloScalar::from_rational(self.order, self.rational());
            s = s + coeff * CycloScalar::zeta_pow(self.order, k);
        }
        s
    }

    pub fn nonzero_scalar(&mut self) -> CycloScalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A random root of unity in the ambient field.
    pub fn torsion_scalar(&mut self) -> CycloScalar {
        let l = torsion_bound(self.order);
        let xi = if self.order % 2 == 0 {
            CycloScalar::zeta(self.order)
        } else {
            CycloScalar::zeta(self.order).negate()
        };
        xi.pow(self.rng.gen_range(0..l))
    }

    /// Mostly affine points with small coordinates, occasionally infinity.
    pub fn point(&mut self) -> ProjPoint {
        if self.flip(10) {
            ProjPoint::infinity(self.order)
        } else {
            ProjPoint::affine(self.scalar())
        }
    }

    pub fn distinct_points(&mut self, k: usize) -> Vec<ProjPoint> {
        let mut out: Vec<ProjPoint> = Vec::with_capacity(k);
        while out.len() < k {
            let p = self.point();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Uniform small-entry matrix of any rank.
    pub fn matrix(&mut self) -> Mat2 {
        match self.rng.gen_range(0..10) {
            0 => Mat2::zero_matrix(self.order),
            1..=4 => self.rank_one(),
            _ => self.invertible(),
        }
    }

    pub fn invertible(&mut self) -> Mat2 {
        loop {
            let m = Mat2::new([
                self.scalar(),
                self.scalar(),
                self.scalar(),
                self.scalar(),
            ])
            .expect("uniform order");
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// A random rank-1 matrix: a scaled idempotent or a nilpotent.
    pub fn rank_one(&mut self) -> Mat2 {
        let z = self.nonzero_scalar();
        if self.rng.gen_bool(0.3) {
            let v = self.point();
            Mat2::nilpotent_from_point(&v, &z).expect("nonzero scale")
        } else {
            let pts = self.distinct_points(2);
            Mat2::idempotent_from_points(&pts[0], &pts[1])
                .expect("distinct points")
                .scale(&z)
        }
    }

    pub fn matrix_of_rank(&mut self, rank: u8) -> Mat2 {
        match rank {
            0 => Mat2::zero_matrix(self.order),
            1 => self.rank_one(),
            _ => self.invertible(),
        }
    }
}
