//! Complex L² spaces over finite measure spaces.
//!
//! A [`FieldFunction`] is a complex value per point plus a reference to the
//! measure weighting the points. The inner product is linear in the first
//! slot and conjugate-linear in the second: `⟨f,h⟩ = Σ_x w(x)·f(x)·conj(h(x))`.
//!
//! Scalars are complex throughout: the irreducibility certificates downstream
//! rely on Schur's lemma over an algebraically closed field.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand_core::RngCore;

use crate::error::Error;
use crate::group::InvariantMeasure;
use crate::tol::Tolerances;
use crate::C64;

/// A complex-valued function on a finite measure space.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldFunction {
    values: Vec<C64>,
    measure: Arc<InvariantMeasure>,
}

impl FieldFunction {
    /// Wraps explicit values; the length must match the measure.
    pub fn new(values: Vec<C64>, measure: Arc<InvariantMeasure>) -> Result<Self, Error> {
        if values.len() != measure.len() {
            return Err(Error::DimensionMismatch { expected: measure.len(), found: values.len() });
        }
        Ok(FieldFunction { values, measure })
    }

    /// The zero function.
    pub fn zero(measure: Arc<InvariantMeasure>) -> Self {
        let values = vec![C64::new(0.0, 0.0); measure.len()];
        FieldFunction { values, measure }
    }

    /// Builds a function by evaluating `f` at every point index.
    pub fn from_fn(measure: Arc<InvariantMeasure>, mut f: impl FnMut(usize) -> C64) -> Self {
        let values = (0..measure.len()).map(|x| f(x)).collect();
        FieldFunction { values, measure }
    }

    /// Indicator of a single point.
    pub fn indicator(measure: Arc<InvariantMeasure>, point: usize) -> Result<Self, Error> {
        if point >= measure.len() {
            return Err(Error::DimensionMismatch { expected: measure.len(), found: point });
        }
        Ok(Self::from_fn(measure, |x| {
            if x == point {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        }))
    }

    /// Function with independent standard complex Gaussian entries
    /// (real and imaginary parts each N(0,1)), deterministic in the RNG.
    pub fn random_normal(measure: Arc<InvariantMeasure>, rng: &mut impl RngCore) -> Self {
        Self::from_fn(measure, |_| C64::new(standard_normal(rng), standard_normal(rng)))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: usize) -> C64 {
        self.values[x]
    }

    pub fn measure(&self) -> &Arc<InvariantMeasure> {
        &self.measure
    }

    /// Pointwise scaling `α·f`.
    pub fn scaled(&self, alpha: C64) -> Self {
        FieldFunction {
            values: self.values.iter().map(|v| v * alpha).collect(),
            measure: self.measure.clone(),
        }
    }

    /// True when all values are exactly zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.re == 0.0 && v.im == 0.0)
    }
}

/// Same measure space: identical weights and side tag.
pub(crate) fn same_space(f: &FieldFunction, h: &FieldFunction) -> Result<(), Error> {
    if f.len() != h.len() {
        return Err(Error::DimensionMismatch { expected: f.len(), found: h.len() });
    }
    if !Arc::ptr_eq(&f.measure, &h.measure) && f.measure.as_ref() != h.measure.as_ref() {
        return Err(Error::MeasureMismatch);
    }
    Ok(())
}

impl core::ops::Add for &FieldFunction {
    type Output = FieldFunction;
    fn add(self, rhs: &FieldFunction) -> FieldFunction {
        same_space(self, rhs).expect("adding functions on different spaces");
        FieldFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
            measure: self.measure.clone(),
        }
    }
}

impl core::ops::Sub for &FieldFunction {
    type Output = FieldFunction;
    fn sub(self, rhs: &FieldFunction) -> FieldFunction {
        same_space(self, rhs).expect("subtracting functions on different spaces");
        FieldFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
            measure: self.measure.clone(),
        }
    }
}

/// Weighted inner product `Σ_x w(x)·f(x)·conj(h(x))`.
pub fn inner_product(f: &FieldFunction, h: &FieldFunction) -> Result<C64, Error> {
    same_space(f, h)?;
    let w = f.measure.weights();
    let mut acc = C64::new(0.0, 0.0);
    for x in 0..f.len() {
        acc += f.values[x] * h.values[x].conj() * w[x];
    }
    Ok(acc)
}

/// L² norm `sqrt(⟨f,f⟩)`. The inner product of a function with itself is
/// real up to roundoff; the real part is clamped at zero before the root.
pub fn norm(f: &FieldFunction) -> f64 {
    let w = f.measure.weights();
    let mut acc = 0.0;
    for x in 0..f.len() {
        acc += f.values[x].norm_sqr() * w[x];
    }
    acc.max(0.0).sqrt()
}

/// Orthonormalizes a family with modified Gram–Schmidt, dropping vectors
/// whose residual norm falls below `tol.rank_abs`. The returned family is
/// orthonormal and spans the same subspace; rank deficiency shows up as a
/// shorter list.
pub fn gram_schmidt(fs: &[FieldFunction], tol: &Tolerances) -> Vec<FieldFunction> {
    let mut out: Vec<FieldFunction> = Vec::with_capacity(fs.len());
    for f in fs {
        let mut v = f.clone();
        // Two passes of projection for numerical stability.
        for _ in 0..2 {
            for b in &out {
                let c = inner_product(&v, b).expect("gram_schmidt: mixed measure spaces");
                v = &v - &b.scaled(c);
            }
        }
        let n = norm(&v);
        if n >= tol.rank_abs {
            out.push(v.scaled(C64::new(1.0 / n, 0.0)));
        }
    }
    out
}

/// Standard normal deviate by Box–Muller, reproducible across platforms.
pub(crate) fn standard_normal(rng: &mut impl RngCore) -> f64 {
    // (0,1] and [0,1) uniforms from the top 53 bits.
    let u1 = ((rng.next_u64() >> 11) as f64 + 1.0) * (1.0 / 9007199254740992.0);
    let u2 = (rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0);
    (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
}

/// Character-style exponential `e^{2πi·k·x/n}` used widely in tests.
#[cfg(test)]
pub(crate) fn character(measure: Arc<InvariantMeasure>, n: usize, k: usize) -> FieldFunction {
    FieldFunction::from_fn(measure, |x| {
        C64::from_polar(1.0, core::f64::consts::TAU * (k * x % n) as f64 / n as f64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Side;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn counting(n: usize) -> Arc<InvariantMeasure> {
        Arc::new(InvariantMeasure::counting(n, Side::Left).unwrap())
    }

    #[test]
    fn constant_inner_product_on_z4() {
        let m = counting(4);
        let one = FieldFunction::from_fn(m.clone(), |_| C64::new(1.0, 0.0));
        let ip = inner_product(&one, &one).unwrap();
        assert!((ip.re - 4.0).abs() < 1e-12 && ip.im.abs() < 1e-12);
    }

    #[test]
    fn characters_orthogonal_on_z4() {
        let m = counting(4);
        let c1 = character(m.clone(), 4, 1);
        let c2 = character(m.clone(), 4, 2);
        let ip = inner_product(&c1, &c2).unwrap();
        assert!(ip.norm() < 1e-12);
    }

    #[test]
    fn inner_product_conjugate_symmetry() {
        let m = counting(7);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = FieldFunction::random_normal(m.clone(), &mut rng);
        let h = FieldFunction::random_normal(m.clone(), &mut rng);
        let a = inner_product(&f, &h).unwrap();
        let b = inner_product(&h, &f).unwrap();
        assert!((a - b.conj()).norm() < 1e-12);
    }

    #[test]
    fn mismatched_spaces_error() {
        let f = FieldFunction::zero(counting(3));
        let h = FieldFunction::zero(counting(4));
        assert!(matches!(inner_product(&f, &h), Err(Error::DimensionMismatch { .. })));
        let m_right =
            Arc::new(InvariantMeasure::counting(3, Side::Right).unwrap());
        let h2 = FieldFunction::zero(m_right);
        assert!(matches!(inner_product(&f, &h2), Err(Error::MeasureMismatch)));
    }

    #[test]
    fn norm_examples() {
        let m = counting(5);
        assert_eq!(norm(&FieldFunction::zero(m.clone())), 0.0);
        let chi = character(m.clone(), 5, 2);
        assert!((norm(&chi) - 5f64.sqrt()).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = FieldFunction::random_normal(m, &mut rng);
        let alpha = C64::new(-2.5, 1.25);
        assert!((norm(&f.scaled(alpha)) - alpha.norm() * norm(&f)).abs() < 1e-10);
    }

    #[test]
    fn gram_schmidt_drops_duplicates() {
        let m = counting(3);
        let c0 = character(m.clone(), 3, 0);
        let out = gram_schmidt(&[c0.clone(), c0.clone()], &Tolerances::default());
        assert_eq!(out.len(), 1);
        assert!((norm(&out[0]) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gram_schmidt_orthonormalizes_characters() {
        let m = counting(3);
        let c0 = character(m.clone(), 3, 0);
        let c1 = character(m.clone(), 3, 1);
        let out = gram_schmidt(&[c0, c1], &Tolerances::default());
        assert_eq!(out.len(), 2);
        for i in 0..2 {
            for j in 0..2 {
                let ip = inner_product(&out[i], &out[j]).unwrap();
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((ip - C64::new(target, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn gram_schmidt_empty() {
        assert!(gram_schmidt(&[], &Tolerances::default()).is_empty());
    }
}
