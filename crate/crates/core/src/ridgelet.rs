//! Ridgelet analysis and synthesis for the Koopman operator family.
//!
//! The analysis side sends a function on X to a coefficient function on G:
//!
//! ```text
//! R_ψ[f](g) = ⟨f, K_g[ψ]⟩ = Σ_x w(x)·f(x)·conj(ψ(g·x))
//! ```
//!
//! The synthesis side is the network: a γ-weighted mixture of the
//! subnetworks `ψ∘g`,
//!
//! ```text
//! N_ψ[γ](x) = Σ_g w_r(g)·γ(g)·ψ(g·x)
//! ```
//!
//! which is exactly the adjoint of the analysis map. On an invariant
//! subspace where the restricted family is irreducible, the composition
//! `N_ψ∘R_ψ` commutes with every `K_g`, so by Schur's lemma it is a scalar:
//! `N_ψ[R_ψ[f]] = c_ψ·f` with `c_ψ = ‖R_ψ[ψ]‖² / ‖ψ‖²`.
//!
//! Measures follow the right/left split: coefficient functions on G carry
//! the right-invariant counting measure, functions on X the left-invariant
//! measure of the representation. For finite groups the two coincide; the
//! tags keep the bookkeeping visible.

use alloc::vec::Vec;

use nalgebra::DMatrix;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;
use crate::koopman::{dual_action, KoopmanRep};
use crate::schur::{basis_matrix_std, Subspace};
use crate::space::{inner_product, norm, FieldFunction};
use crate::tol::Tolerances;
use crate::C64;

/// Coefficient function on the group produced by the analysis transform,
/// together with a fingerprint of the ψ that produced it.
#[derive(Debug, Clone)]
pub struct RidgeletCoefficients {
    gamma: FieldFunction,
    psi_id: u64,
}

impl RidgeletCoefficients {
    /// The coefficient function γ on G (right-invariant counting measure).
    pub fn gamma(&self) -> &FieldFunction {
        &self.gamma
    }

    /// FNV-1a fingerprint of the generating ψ's bit pattern.
    pub fn psi_id(&self) -> u64 {
        self.psi_id
    }

    pub fn into_gamma(self) -> FieldFunction {
        self.gamma
    }
}

/// A synthesis vector ψ paired with a certified-irreducible invariant
/// subspace containing it, plus its admissibility constant.
#[derive(Debug, Clone)]
pub struct AdmissiblePair {
    psi: FieldFunction,
    subspace: Subspace,
    c_psi: f64,
}

impl AdmissiblePair {
    /// Validates the pairing: ψ must be nonzero, the subspace certified
    /// irreducible, and ψ a member of the subspace (relative projection
    /// residual below `tol.membership`).
    pub fn new(
        rep: &KoopmanRep,
        psi: FieldFunction,
        subspace: Subspace,
        tol: &Tolerances,
    ) -> Result<Self, Error> {
        rep.check_on_space(&psi)?;
        if norm(&psi) == 0.0 {
            return Err(Error::ZeroVector);
        }
        if !subspace.is_irreducible() {
            return Err(Error::NotIrreducible { commutant_dim: subspace.commutant_dim() });
        }
        let residual = subspace.membership_residual(&psi)?;
        if residual >= tol.membership {
            return Err(Error::OutsideSubspace { residual });
        }
        let c_psi = admissibility_constant(rep, &psi)?;
        Ok(AdmissiblePair { psi, subspace, c_psi })
    }

    pub fn psi(&self) -> &FieldFunction {
        &self.psi
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// `c_ψ = ‖R_ψ[ψ]‖² / ‖ψ‖²`; positive for nonzero ψ on a finite group.
    pub fn c_psi(&self) -> f64 {
        self.c_psi
    }
}

/// Analysis transform: `R_ψ[f](g) = Σ_x w(x)·f(x)·conj(ψ(g·x))`.
pub fn ridgelet_transform(
    rep: &KoopmanRep,
    psi: &FieldFunction,
    f: &FieldFunction,
) -> Result<RidgeletCoefficients, Error> {
    rep.check_on_space(psi)?;
    rep.check_on_space(f)?;
    let action = rep.action();
    let w = rep.measure().weights();
    let n = rep.dim();
    let gamma = FieldFunction::from_fn(rep.group_measure().clone(), |g| {
        let mut acc = C64::new(0.0, 0.0);
        for x in 0..n {
            acc += f.value(x) * psi.value(action.apply(g, x)).conj() * w[x];
        }
        acc
    });
    Ok(RidgeletCoefficients { gamma, psi_id: fingerprint(psi) })
}

/// Synthesis network: `N_ψ[γ](x) = Σ_g w_r(g)·γ(g)·ψ(g·x)`, linear in γ.
pub fn dnn_apply(
    rep: &KoopmanRep,
    psi: &FieldFunction,
    gamma: &FieldFunction,
) -> Result<FieldFunction, Error> {
    rep.check_on_space(psi)?;
    rep.check_on_group(gamma)?;
    let action = rep.action();
    let wr = rep.group_measure().weights();
    let order = rep.group().order();
    let out = FieldFunction::from_fn(rep.measure().clone(), |x| {
        let mut acc = C64::new(0.0, 0.0);
        for g in 0..order {
            acc += gamma.value(g) * psi.value(action.apply(g, x)) * wr[g];
        }
        acc
    });
    Ok(out)
}

/// Admissibility constant `c_ψ = ‖R_ψ[ψ]‖²_{L²(G)} / ‖ψ‖²_{L²(X)}`.
///
/// Always finite on a finite group; errors on ψ = 0.
pub fn admissibility_constant(rep: &KoopmanRep, psi: &FieldFunction) -> Result<f64, Error> {
    rep.check_on_space(psi)?;
    let denom = norm(psi);
    if denom == 0.0 {
        return Err(Error::ZeroVector);
    }
    let coeffs = ridgelet_transform(rep, psi, psi)?;
    let num = norm(coeffs.gamma());
    Ok((num / denom) * (num / denom))
}

/// Reconstruction through the network: computes `N_ψ[R_ψ[f]]` and returns
/// it together with the relative error against the predicted `c_ψ·f`.
///
/// Preconditions follow the reconstruction identity: `f` must lie in the
/// pair's certified-irreducible subspace. The relative error is zero up to
/// roundoff when the preconditions hold.
pub fn reconstruct(
    rep: &KoopmanRep,
    pair: &AdmissiblePair,
    f: &FieldFunction,
    tol: &Tolerances,
) -> Result<(FieldFunction, f64), Error> {
    rep.check_on_space(f)?;
    if !pair.subspace.is_irreducible() {
        return Err(Error::NotIrreducible { commutant_dim: pair.subspace.commutant_dim() });
    }
    let residual = pair.subspace.membership_residual(f)?;
    if residual >= tol.membership {
        return Err(Error::OutsideSubspace { residual });
    }
    let coeffs = ridgelet_transform(rep, &pair.psi, f)?;
    let out = dnn_apply(rep, &pair.psi, coeffs.gamma())?;
    let target = f.scaled(C64::new(pair.c_psi, 0.0));
    let denom = norm(&target);
    let rel = if denom > 0.0 {
        norm(&(&out - &target)) / denom
    } else if norm(&out) == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    Ok((out, rel))
}

/// Absolute defect of the duality identity
/// `⟨γ, R_ψ[f]⟩_{L²(G)} = ⟨N_ψ[γ], f⟩_{L²(X)}`.
pub fn adjointness_gap(
    rep: &KoopmanRep,
    psi: &FieldFunction,
    gamma: &FieldFunction,
    f: &FieldFunction,
) -> Result<f64, Error> {
    let coeffs = ridgelet_transform(rep, psi, f)?;
    let lhs = inner_product(gamma, coeffs.gamma())?;
    let rhs = inner_product(&dnn_apply(rep, psi, gamma)?, f)?;
    Ok((lhs - rhs).norm())
}

/// Defects of the two intertwining identities at a fixed group element:
/// `‖R_ψ[K_g[f]] − K̂_g[R_ψ[f]]‖` and `‖N_ψ[K̂_g[γ]] − K_g[N_ψ[γ]]‖`.
pub fn intertwining_gaps(
    rep: &KoopmanRep,
    psi: &FieldFunction,
    f: &FieldFunction,
    gamma: &FieldFunction,
    g: usize,
) -> Result<(f64, f64), Error> {
    let group = rep.group();

    let analysis_lhs = ridgelet_transform(rep, psi, &rep.apply(g, f)?)?;
    let analysis_rhs = dual_action(group, g, ridgelet_transform(rep, psi, f)?.gamma())?;
    let gap_analysis = norm(&(analysis_lhs.gamma() - &analysis_rhs));

    let synthesis_lhs = dnn_apply(rep, psi, &dual_action(group, g, gamma)?)?;
    let synthesis_rhs = rep.apply(g, &dnn_apply(rep, psi, gamma)?)?;
    let gap_synthesis = norm(&(&synthesis_lhs - &synthesis_rhs));

    Ok((gap_analysis, gap_synthesis))
}

/// Explicit matrix of the composition `N_ψ∘R_ψ` acting on value vectors:
/// `M = Σ_g w_r(g)·(K_gψ)·(K_gψ)^H·W`.
pub fn composition_matrix(rep: &KoopmanRep, psi: &FieldFunction) -> Result<DMatrix<C64>, Error> {
    rep.check_on_space(psi)?;
    let n = rep.dim();
    let w = rep.measure().weights();
    let wr = rep.group_measure().weights();
    let mut m = DMatrix::<C64>::zeros(n, n);
    for g in rep.group().elements() {
        let kpsi = rep.apply(g, psi)?;
        for row in 0..n {
            let a = kpsi.value(row) * wr[g];
            for col in 0..n {
                m[(row, col)] += a * kpsi.value(col).conj() * w[col];
            }
        }
    }
    Ok(m)
}

/// Schur commutation certificate: `max_g ‖M·K_g − K_g·M‖_F` for the
/// composition matrix `M` of `N_ψ∘R_ψ`, measured in the half-weighted
/// coordinates where the K's are honestly unitary.
pub fn commuting_certificate(rep: &KoopmanRep, psi: &FieldFunction) -> Result<f64, Error> {
    let m = composition_matrix_std(rep, psi)?;
    let mut worst = 0.0f64;
    for g in rep.group().elements() {
        let k = rep.matrix(g);
        worst = worst.max((&m * k - k * &m).norm());
    }
    Ok(worst)
}

/// Distance of the restriction `M|_H` from the Schur scalar `c_ψ·I` on the
/// pair's subspace: `‖B^H·M·B − c_ψ·I‖_F`.
pub fn schur_scalar_gap(rep: &KoopmanRep, pair: &AdmissiblePair) -> Result<f64, Error> {
    let m = composition_matrix_std(rep, pair.psi())?;
    let b = basis_matrix_std(rep, pair.subspace().basis());
    let restricted = b.adjoint() * m * b;
    let d = restricted.nrows();
    let scalar = DMatrix::<C64>::identity(d, d) * C64::new(pair.c_psi(), 0.0);
    Ok((restricted - scalar).norm())
}

/// Composition matrix conjugated into half-weighted coordinates:
/// `Σ_g w_r(g)·u_g·u_g^H` with `u_g = √w ⊙ K_gψ`. Hermitian PSD.
fn composition_matrix_std(rep: &KoopmanRep, psi: &FieldFunction) -> Result<DMatrix<C64>, Error> {
    rep.check_on_space(psi)?;
    let n = rep.dim();
    let w = rep.measure().weights();
    let wr = rep.group_measure().weights();
    let mut m = DMatrix::<C64>::zeros(n, n);
    for g in rep.group().elements() {
        let kpsi = rep.apply(g, psi)?;
        let u: Vec<C64> = (0..n).map(|x| kpsi.value(x) * w[x].sqrt()).collect();
        for row in 0..n {
            let a = u[row] * wr[g];
            for col in 0..n {
                m[(row, col)] += a * u[col].conj();
            }
        }
    }
    Ok(m)
}

/// FNV-1a over the IEEE-754 bit patterns of the values.
fn fingerprint(f: &FieldFunction) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bits: u64| {
        for byte in bits.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for v in f.values() {
        eat(v.re.to_bits());
        eat(v.im.to_bits());
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, GAction, InvariantMeasure, Side};
    use crate::schur::decompose_invariant;
    use crate::space::character;
    use alloc::sync::Arc;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn regular_cyclic(n: usize) -> KoopmanRep {
        KoopmanRep::regular(Arc::new(FiniteGroup::cyclic(n).unwrap())).unwrap()
    }

    fn regular_symmetric(n: usize) -> KoopmanRep {
        KoopmanRep::regular(Arc::new(FiniteGroup::symmetric(n).unwrap())).unwrap()
    }

    #[test]
    fn trivial_group_coefficient_is_inner_product() {
        let group = Arc::new(FiniteGroup::cyclic(1).unwrap());
        let action = Arc::new(GAction::trivial(group, 3).unwrap());
        let measure = Arc::new(InvariantMeasure::counting(3, Side::Left).unwrap());
        let rep = KoopmanRep::new(action, measure).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let coeffs = ridgelet_transform(&rep, &psi, &f).unwrap();
        let expect = inner_product(&f, &psi).unwrap();
        assert!((coeffs.gamma().value(0) - expect).norm() < 1e-12);
    }

    #[test]
    fn character_coefficients_on_cyclic_groups() {
        let n = 5;
        let rep = regular_cyclic(n);
        let chi = character(rep.measure().clone(), n, 2);
        let coeffs = ridgelet_transform(&rep, &chi, &chi).unwrap();
        for g in 0..n {
            let expect = chi.value(g).conj() * n as f64;
            assert!((coeffs.gamma().value(g) - expect).norm() < 1e-10);
        }
    }

    #[test]
    fn orthogonal_characters_give_zero_coefficients() {
        let rep = regular_cyclic(4);
        let f = character(rep.measure().clone(), 4, 1);
        let psi = character(rep.measure().clone(), 4, 2);
        let coeffs = ridgelet_transform(&rep, &psi, &f).unwrap();
        assert!(norm(coeffs.gamma()) < 1e-12);
    }

    #[test]
    fn network_on_identity_indicator_returns_psi() {
        let rep = regular_symmetric(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let gamma =
            FieldFunction::indicator(rep.group_measure().clone(), rep.group().identity()).unwrap();
        let out = dnn_apply(&rep, &psi, &gamma).unwrap();
        assert!(norm(&(&out - &psi)) < 1e-12);
        let zero = FieldFunction::zero(rep.group_measure().clone());
        assert!(dnn_apply(&rep, &psi, &zero).unwrap().is_zero());
    }

    #[test]
    fn network_reproduces_character_identity() {
        let n = 4;
        let rep = regular_cyclic(n);
        let chi = character(rep.measure().clone(), n, 1);
        let gamma = FieldFunction::from_fn(rep.group_measure().clone(), |g| {
            chi.value(g).conj() * n as f64
        });
        let out = dnn_apply(&rep, &chi, &gamma).unwrap();
        let expect = chi.scaled(C64::new((n * n) as f64, 0.0));
        assert!(norm(&(&out - &expect)) < 1e-9);
    }

    #[test]
    fn admissibility_constant_examples() {
        // Z_n with a character: c_ψ = n².
        for n in [2usize, 3, 4, 6] {
            let rep = regular_cyclic(n);
            let chi = character(rep.measure().clone(), n, 1 % n);
            let c = admissibility_constant(&rep, &chi).unwrap();
            assert!(
                (c - (n * n) as f64).abs() < 1e-10 * (n * n) as f64,
                "c_psi for Z_{n}: {c}"
            );
        }

        // Trivial group: c_ψ = ‖ψ‖².
        let group = Arc::new(FiniteGroup::cyclic(1).unwrap());
        let action = Arc::new(GAction::trivial(group, 4).unwrap());
        let measure = Arc::new(InvariantMeasure::counting(4, Side::Left).unwrap());
        let rep = KoopmanRep::new(action, measure).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let c = admissibility_constant(&rep, &psi).unwrap();
        let n2 = norm(&psi) * norm(&psi);
        assert!((c - n2 * n2 / n2).abs() < 1e-9 * c.max(1.0));

        // Quadratic scaling in ψ.
        let rep = regular_symmetric(3);
        let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let alpha = C64::new(1.5, -0.5);
        let c1 = admissibility_constant(&rep, &psi).unwrap();
        let c2 = admissibility_constant(&rep, &psi.scaled(alpha)).unwrap();
        assert!((c2 - alpha.norm_sqr() * c1).abs() < 1e-9 * c2.abs());

        // Zero vector refused.
        let zero = FieldFunction::zero(rep.measure().clone());
        assert!(matches!(admissibility_constant(&rep, &zero), Err(Error::ZeroVector)));
    }

    #[test]
    fn reconstruction_on_character_span() {
        let n = 4;
        let rep = regular_cyclic(n);
        let tol = Tolerances::default();
        let chi = character(rep.measure().clone(), n, 1);
        let sub = crate::schur::Subspace::certify(&rep, &[chi.clone()], &tol).unwrap();
        let pair = AdmissiblePair::new(&rep, chi.clone(), sub, &tol).unwrap();
        assert!((pair.c_psi() - 16.0).abs() < 1e-10);
        let (out, rel) = reconstruct(&rep, &pair, &chi, &tol).unwrap();
        assert!(rel < 1e-10, "relative error {rel}");
        let expect = chi.scaled(C64::new(16.0, 0.0));
        assert!(norm(&(&out - &expect)) < 1e-8);
    }

    #[test]
    fn reconstruction_on_s3_two_dim_block() {
        let rep = regular_symmetric(3);
        let tol = Tolerances::default();
        let subs = decompose_invariant(&rep, 0, &tol);
        let block = subs.iter().find(|s| s.dim() == 2).unwrap().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..5 {
            let psi = random_in_span(&block, &mut rng);
            let f = random_in_span(&block, &mut rng);
            let pair = AdmissiblePair::new(&rep, psi, block.clone(), &tol).unwrap();
            let (_, rel) = reconstruct(&rep, &pair, &f, &tol).unwrap();
            assert!(rel < 1e-9, "relative error {rel}");
        }
    }

    #[test]
    fn reconstruction_guards() {
        let rep = regular_cyclic(4);
        let tol = Tolerances::default();
        let chi1 = character(rep.measure().clone(), 4, 1);
        let chi2 = character(rep.measure().clone(), 4, 2);
        let sub = crate::schur::Subspace::certify(&rep, &[chi1.clone()], &tol).unwrap();
        let pair = AdmissiblePair::new(&rep, chi1.clone(), sub, &tol).unwrap();
        // f outside the subspace.
        assert!(matches!(
            reconstruct(&rep, &pair, &chi2, &tol),
            Err(Error::OutsideSubspace { .. })
        ));
        // Reducible subspace refused at pairing time.
        let sub2 =
            crate::schur::Subspace::certify(&rep, &[chi1.clone(), chi2.clone()], &tol).unwrap();
        assert!(matches!(
            AdmissiblePair::new(&rep, chi1, sub2, &tol),
            Err(Error::NotIrreducible { .. })
        ));
    }

    #[test]
    fn negative_control_annihilates_other_components() {
        let rep = regular_cyclic(4);
        let psi = character(rep.measure().clone(), 4, 1);
        let f = character(rep.measure().clone(), 4, 2);
        let coeffs = ridgelet_transform(&rep, &psi, &f).unwrap();
        let out = dnn_apply(&rep, &psi, coeffs.gamma()).unwrap();
        assert!(norm(&out) < 1e-9);
    }

    #[test]
    fn adjointness_gap_randomized() {
        for rep in [regular_cyclic(6), regular_symmetric(3)] {
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..25 {
                let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
                let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
                let gamma = FieldFunction::random_normal(rep.group_measure().clone(), &mut rng);
                let gap = adjointness_gap(&rep, &psi, &gamma, &f).unwrap();
                let scale = norm(&psi) * norm(&f) * norm(&gamma) + 1.0;
                assert!(gap < 1e-10 * scale, "gap {gap} vs scale {scale}");
            }
            let zero = FieldFunction::zero(rep.group_measure().clone());
            let mut rng2 = ChaCha8Rng::seed_from_u64(18);
            let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng2);
            let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng2);
            assert_eq!(adjointness_gap(&rep, &psi, &zero, &f).unwrap(), 0.0);
        }
    }

    #[test]
    fn intertwining_gaps_all_elements() {
        for rep in [regular_cyclic(5), regular_symmetric(3)] {
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
            let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
            let gamma = FieldFunction::random_normal(rep.group_measure().clone(), &mut rng);
            for g in rep.group().elements() {
                let (a, b) = intertwining_gaps(&rep, &psi, &f, &gamma, g).unwrap();
                assert!(a < 1e-10, "analysis intertwining gap {a} at g={g}");
                assert!(b < 1e-10, "synthesis intertwining gap {b} at g={g}");
            }
            let e = rep.group().identity();
            let (a, b) = intertwining_gaps(&rep, &psi, &f, &gamma, e).unwrap();
            assert_eq!((a, b), (0.0, 0.0));
        }
    }

    #[test]
    fn certificate_and_scalar_block_on_z4() {
        let rep = regular_cyclic(4);
        let tol = Tolerances::default();
        let chi = character(rep.measure().clone(), 4, 1);
        let cert = commuting_certificate(&rep, &chi).unwrap();
        assert!(cert < 1e-9);

        let sub = crate::schur::Subspace::certify(&rep, &[chi.clone()], &tol).unwrap();
        let pair = AdmissiblePair::new(&rep, chi, sub, &tol).unwrap();
        let gap = schur_scalar_gap(&rep, &pair).unwrap();
        // M restricted to span{χ_1} is 16·I = n²·I.
        assert!(gap < 1e-8 * pair.c_psi());
    }

    #[test]
    fn certificate_on_s3_block() {
        let rep = regular_symmetric(3);
        let tol = Tolerances::default();
        let subs = decompose_invariant(&rep, 3, &tol);
        let block = subs.iter().find(|s| s.dim() == 2).unwrap().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let psi = random_in_span(&block, &mut rng);
        let pair = AdmissiblePair::new(&rep, psi, block, &tol).unwrap();
        let cert = commuting_certificate(&rep, pair.psi()).unwrap();
        assert!(cert < 1e-9 * pair.c_psi().max(1.0));
        let gap = schur_scalar_gap(&rep, &pair).unwrap();
        assert!(gap < 1e-8 * pair.c_psi());
    }

    #[test]
    fn linearity_properties() {
        let rep = regular_symmetric(3);
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
        let alpha = C64::new(0.7, -2.1);

        // R is linear in f and conjugate-linear in ψ.
        let lhs = ridgelet_transform(&rep, &psi, &f.scaled(alpha)).unwrap();
        let rhs = ridgelet_transform(&rep, &psi, &f).unwrap().into_gamma().scaled(alpha);
        assert!(norm(&(lhs.gamma() - &rhs)) < 1e-10);

        let lhs = ridgelet_transform(&rep, &psi.scaled(alpha), &f).unwrap();
        let rhs =
            ridgelet_transform(&rep, &psi, &f).unwrap().into_gamma().scaled(alpha.conj());
        assert!(norm(&(lhs.gamma() - &rhs)) < 1e-10);

        // The network is linear in γ.
        let g1 = FieldFunction::random_normal(rep.group_measure().clone(), &mut rng);
        let g2 = FieldFunction::random_normal(rep.group_measure().clone(), &mut rng);
        let lhs = dnn_apply(&rep, &psi, &(&g1 + &g2)).unwrap();
        let rhs = &dnn_apply(&rep, &psi, &g1).unwrap() + &dnn_apply(&rep, &psi, &g2).unwrap();
        assert!(norm(&(&lhs - &rhs)) < 1e-10);
    }

    pub(crate) fn random_in_span(sub: &Subspace, rng: &mut ChaCha8Rng) -> FieldFunction {
        let mut out = FieldFunction::zero(sub.basis()[0].measure().clone());
        for b in sub.basis() {
            let c = C64::new(
                crate::space::standard_normal(rng),
                crate::space::standard_normal(rng),
            );
            out = &out + &b.scaled(c);
        }
        out
    }
}
