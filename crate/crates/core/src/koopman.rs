//! The Koopman operator family of a finite group action.
//!
//! For a left action `g·x` the composition operator is
//! `K_g[ψ](x) = ψ(g·x)`. Each `K_g` is a permutation matrix on the standard
//! basis of L²(X), the family is unitary with respect to any invariant
//! measure, and it acts from the *right*: `K_g∘K_h = K_{hg}`. The whole
//! family is materialized eagerly as dense matrices because the commutant
//! solves downstream consume them in general dense form.

use alloc::sync::Arc;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::Error;
use crate::group::{FiniteGroup, GAction, InvariantMeasure, Side};
use crate::space::FieldFunction;
use crate::C64;

/// The Koopman representation of a finite group action: the action, an
/// invariant measure on the point set, and one permutation matrix per
/// group element.
#[derive(Debug, Clone)]
pub struct KoopmanRep {
    action: Arc<GAction>,
    measure: Arc<InvariantMeasure>,
    group_measure: Arc<InvariantMeasure>,
    matrices: Vec<DMatrix<C64>>,
}

impl KoopmanRep {
    /// Builds the operator family, verifying that the measure is invariant
    /// under the action and tagged left-invariant.
    pub fn new(action: Arc<GAction>, measure: Arc<InvariantMeasure>) -> Result<Self, Error> {
        if measure.side() != Side::Left {
            return Err(Error::InvalidParameter(
                "koopman representation expects a left-invariant measure on the point space",
            ));
        }
        measure.invariant_under(&action)?;
        let n = action.num_points();
        let order = action.group().order();
        let mut matrices = Vec::with_capacity(order);
        for g in 0..order {
            let mut m = DMatrix::<C64>::zeros(n, n);
            for x in 0..n {
                m[(x, action.apply(g, x))] = C64::new(1.0, 0.0);
            }
            matrices.push(m);
        }
        let group_measure = Arc::new(InvariantMeasure::counting(order, Side::Right)?);
        Ok(KoopmanRep { action, measure, group_measure, matrices })
    }

    /// Convenience constructor: regular action with counting measure.
    pub fn regular(group: Arc<FiniteGroup>) -> Result<Self, Error> {
        let order = group.order();
        let action = Arc::new(GAction::regular(group));
        let measure = Arc::new(InvariantMeasure::counting(order, Side::Left)?);
        Self::new(action, measure)
    }

    pub fn action(&self) -> &Arc<GAction> {
        &self.action
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.action.group()
    }

    /// The left-invariant measure on the point space.
    pub fn measure(&self) -> &Arc<InvariantMeasure> {
        &self.measure
    }

    /// The right-invariant counting measure on the group, shared by all
    /// coefficient functions over G.
    pub fn group_measure(&self) -> &Arc<InvariantMeasure> {
        &self.group_measure
    }

    /// Dimension of L²(X) (number of points).
    pub fn dim(&self) -> usize {
        self.action.num_points()
    }

    /// Dense matrix of `K_g`.
    pub fn matrix(&self, g: usize) -> &DMatrix<C64> {
        &self.matrices[g]
    }

    /// Applies `K_g` by table lookup: `(K_g ψ)(x) = ψ(g·x)`. Exact — the
    /// values are permuted, not recombined.
    pub fn apply(&self, g: usize, psi: &FieldFunction) -> Result<FieldFunction, Error> {
        self.check_on_space(psi)?;
        let out = FieldFunction::from_fn(self.measure.clone(), |x| {
            psi.value(self.action.apply(g, x))
        });
        Ok(out)
    }

    /// Solves the single-layer network equation `K_g[ψ] = f` exactly.
    ///
    /// Group elements are invertible maps, so the pseudo-inverse is simply
    /// `K_g† = K_{g⁻¹}` and the round trip `K_g[K_g†[f]] = f` is exact in
    /// permutation arithmetic.
    pub fn solve_single_layer(&self, g: usize, f: &FieldFunction) -> Result<FieldFunction, Error> {
        self.apply(self.group().inv(g), f)
    }

    pub(crate) fn check_on_space(&self, f: &FieldFunction) -> Result<(), Error> {
        if f.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: f.len() });
        }
        if !Arc::ptr_eq(f.measure(), &self.measure) && f.measure().as_ref() != self.measure.as_ref()
        {
            return Err(Error::MeasureMismatch);
        }
        Ok(())
    }

    pub(crate) fn check_on_group(&self, gamma: &FieldFunction) -> Result<(), Error> {
        if gamma.len() != self.group().order() {
            return Err(Error::DimensionMismatch {
                expected: self.group().order(),
                found: gamma.len(),
            });
        }
        if !Arc::ptr_eq(gamma.measure(), &self.group_measure)
            && gamma.measure().as_ref() != self.group_measure.as_ref()
        {
            return Err(Error::MeasureMismatch);
        }
        Ok(())
    }
}

/// The dual action on coefficient functions over G:
/// `K̂_g[γ](h) = γ(h·g⁻¹)`.
///
/// Like the Koopman family itself this composes as an anti-homomorphism,
/// `K̂_g∘K̂_h = K̂_{hg}`, which is exactly what makes the ridgelet transform
/// and the network intertwine the two actions.
pub fn dual_action(
    group: &FiniteGroup,
    g: usize,
    gamma: &FieldFunction,
) -> Result<FieldFunction, Error> {
    if gamma.len() != group.order() {
        return Err(Error::DimensionMismatch { expected: group.order(), found: gamma.len() });
    }
    if gamma.measure().side() != Side::Right {
        return Err(Error::MeasureMismatch);
    }
    let g_inv = group.inv(g);
    Ok(FieldFunction::from_fn(gamma.measure().clone(), |h| gamma.value(group.mul(h, g_inv))))
}
