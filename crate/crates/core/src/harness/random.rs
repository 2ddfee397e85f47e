//! Seeded element generators.
//!
//! Everything is driven by a `ChaCha8Rng`, so a given seed and stream id
//! always yields the same elements on every platform.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classification::lift_alternative;
use crate::element::{dim_of, half_of, CDElement};
use crate::rational::Rational;

pub const DEFAULT_COEFFICIENT_BOUND: i64 = 8;
pub const DEFAULT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Purity {
    Any,
    Pure,
    DoublyPure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub level: u32,
    /// Numerators are drawn from `[-bound, bound]`, denominators from `[1, bound]`.
    pub coefficient_bound: i64,
    pub purity: Purity,
    /// Number of random instances per statement, on top of any exhaustive part.
    pub trials: usize,
}

impl RandomSpec {
    pub fn new(seed: u64, level: u32) -> Self {
        RandomSpec {
            seed,
            level,
            coefficient_bound: DEFAULT_COEFFICIENT_BOUND,
            purity: Purity::Any,
            trials: DEFAULT_TRIALS,
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn at_level(&self, level: u32) -> Self {
        RandomSpec { level, ..self.clone() }
    }

    pub fn sampler(&self, stream: u64) -> Sampler {
        Sampler::new(self.seed, stream, self.coefficient_bound)
    }

    /// The stream of elements drawn from this `RandomSpec` alone.
    pub fn elements(&self) -> impl Iterator<Item = CDElement> {
        let mut s = self.sampler(0);
        let (level, purity) = (self.level, self.purity);
        std::iter::repeat_with(move || s.element(level, purity))
    }
}

/// FNV-1a, used to derive a per-statement stream id from its name.
pub fn stream_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64, bound: i64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng, bound: bound.max(1) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.random_range(-self.bound..=self.bound);
        let q = self.rng.random_range(1..=self.bound);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn allowed(level: u32, purity: Purity) -> Vec<usize> {
        let h = if level == 0 { usize::MAX } else { half_of(level) };
        (0..dim_of(level))
            .filter(|&i| match purity {
                Purity::Any => true,
                Purity::Pure => i != 0,
                Purity::DoublyPure => i != 0 && i != h,
            })
            .collect()
    }

    /// Dense random element (every allowed coordinate drawn independently).
    pub fn element(&mut self, level: u32, purity: Purity) -> CDElement {
        let allowed = Self::allowed(level, purity);
        let mut coeffs = vec![Rational::zero(); dim_of(level)];
        for i in allowed {
            coeffs[i] = self.rational();
        }
        CDElement::from_coeffs(level, coeffs).expect("length matches")
    }

    /// Random element supported on at most `terms` allowed coordinates.
    pub fn sparse(&mut self, level: u32, purity: Purity, terms: usize) -> CDElement {
        let allowed = Self::allowed(level, purity);
        let mut coeffs = vec![Rational::zero(); dim_of(level)];
        for _ in 0..terms {
            if allowed.is_empty() {
                break;
            }
            let i = allowed[self.below(allowed.len())];
            coeffs[i] = self.nonzero_rational();
        }
        CDElement::from_coeffs(level, coeffs).expect("length matches")
    }

    pub fn nonzero(&mut self, level: u32, purity: Purity) -> CDElement {
        loop {
            let x = self.element(level, purity);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Dense or sparse with equal odds, never zero.
    pub fn mixed(&mut self, level: u32, purity: Purity) -> CDElement {
        loop {
            let x = if self.chance(0.5) {
                self.element(level, purity)
            } else {
                let terms = 1 + self.below(3);
                self.sparse(level, purity, terms)
            };
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn basis_index(&mut self, level: u32, purity: Purity) -> usize {
        let allowed = Self::allowed(level, purity);
        allowed[self.below(allowed.len())]
    }

    /// Rational point on the unit sphere in `dims` dimensions, by inverse
    /// stereographic projection of a random rational point.
    pub fn unit_vector(&mut self, dims: usize) -> Vec<Rational> {
        assert!(dims > 0);
        if dims == 1 {
            return vec![if self.chance(0.5) { Rational::one() } else { -Rational::one() }];
        }
        let t: Vec<Rational> = (0..dims - 1).map(|_| self.rational()).collect();
        let s: Rational = t.iter().map(|x| x * x).sum();
        let denom = &s + Rational::one();
        let mut v: Vec<Rational> = t.iter().map(|x| x * Rational::from_integer(2.into()) / &denom).collect();
        v.push((&s - Rational::one()) / &denom);
        v
    }

    /// Unit-norm element supported on `indices`.
    pub fn unit_on(&mut self, level: u32, indices: &[usize]) -> CDElement {
        let v = self.unit_vector(indices.len());
        let terms: Vec<(usize, Rational)> = indices.iter().copied().zip(v).collect();
        CDElement::from_terms(level, &terms).expect("indices in range")
    }

    /// Unit-norm element on `1..=max_terms` distinct random allowed coordinates.
    pub fn unit(&mut self, level: u32, purity: Purity, max_terms: usize) -> CDElement {
        let mut allowed = Self::allowed(level, purity);
        let k = 1 + self.below(max_terms.min(allowed.len()));
        let mut chosen = Vec::with_capacity(k);
        for _ in 0..k {
            chosen.push(allowed.swap_remove(self.below(allowed.len())));
        }
        chosen.sort_unstable();
        self.unit_on(level, &chosen)
    }

    /// Random nonzero pure alternative element. Below level 4 every element
    /// is alternative; above, lifts `(r a, s a)` of a pure alternative `a`
    /// plus a multiple of `ẽ0` are alternative.
    pub fn alternative_pure(&mut self, level: u32) -> CDElement {
        loop {
            let x = self.alternative_pure_inner(level);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn alternative_pure_inner(&mut self, level: u32) -> CDElement {
        if level <= 3 {
            return self.mixed(level, Purity::Pure);
        }
        let inner = self.alternative_pure(level - 1);
        let (r, s) = (self.rational(), self.rational());
        let lifted = lift_alternative(&inner, &r, &s).expect("pure alternative input");
        if self.chance(0.5) {
            let t = self.rational();
            let e = CDElement::tilde_unit(level).expect("level >= 1");
            lifted.add(&e.scale(&t)).expect("same level")
        } else {
            lifted
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::is_alternative;

    #[test]
    fn streams_are_reproducible() {
        let spec = RandomSpec::new(42, 4);
        let a: Vec<_> = spec.elements().take(5).collect();
        let b: Vec<_> = spec.elements().take(5).collect();
        assert_eq!(a, b);
        let c: Vec<_> = RandomSpec::new(43, 4).elements().take(5).collect();
        assert_ne!(a, c);
        assert_ne!(stream_id("lemma_1_1"), stream_id("lemma_1_6"));
    }

    #[test]
    fn purity_and_bounds() {
        let mut s = Sampler::new(1, 0, 3);
        for _ in 0..50 {
            let x = s.element(4, Purity::DoublyPure);
            assert!(x.is_doubly_pure());
            for c in x.coeffs() {
                assert!(c.numer().magnitude() <= &3u32.into());
                assert!(c.denom() <= &BigInt::from(3));
            }
            assert!(s.mixed(3, Purity::Pure).is_pure());
        }
    }

    #[test]
    fn unit_vectors() {
        let mut s = Sampler::new(7, 0, 8);
        for d in 1..6 {
            let v = s.unit_vector(d);
            assert_eq!(v.iter().map(|x| x * x).sum::<Rational>(), Rational::one());
        }
        assert_eq!(s.unit(4, Purity::DoublyPure, 3).norm_sq(), Rational::one());
    }

    #[test]
    fn alternative_generator() {
        let mut s = Sampler::new(3, 0, 5);
        for level in 4..=5 {
            for _ in 0..10 {
                let a = s.alternative_pure(level);
                assert!(a.is_pure() && !a.is_zero());
                assert!(is_alternative(&a), "{a}");
            }
        }
    }
}
