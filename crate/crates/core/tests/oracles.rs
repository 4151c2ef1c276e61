//! Independent oracles: every check here recomputes its expected value by a
//! route that shares no code with the library path it verifies (explicit
//! Gaussian elimination instead of SVD, direct index loops instead of the
//! transform pipeline).

use std::sync::Arc;

use deep_ridgelet::{
    compute_commutant, decompose_invariant, reconstruct, ridgelet_transform, AdmissiblePair,
    FieldFunction, FiniteGroup, GAction, InvariantMeasure, KoopmanRep, Side, Subspace,
    Tolerances, C64,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn regular_cyclic(n: usize) -> KoopmanRep {
    KoopmanRep::regular(Arc::new(FiniteGroup::cyclic(n).unwrap())).unwrap()
}

fn regular_symmetric(n: usize) -> KoopmanRep {
    KoopmanRep::regular(Arc::new(FiniteGroup::symmetric(n).unwrap())).unwrap()
}

fn character(measure: Arc<InvariantMeasure>, n: usize, k: usize) -> FieldFunction {
    FieldFunction::from_fn(measure, |x| {
        C64::from_polar(1.0, std::f64::consts::TAU * ((k * x) % n) as f64 / n as f64)
    })
}

fn random_complex(rng: &mut ChaCha8Rng) -> C64 {
    let u = |r: &mut ChaCha8Rng| (r.next_u64() >> 11) as f64 / 9007199254740992.0 - 0.5;
    C64::new(4.0 * u(rng), 4.0 * u(rng))
}

/// Rank of a complex matrix by Gaussian elimination with partial pivoting.
fn rank_by_elimination(mut rows: Vec<Vec<C64>>, tol: f64) -> usize {
    let nrows = rows.len();
    let ncols = rows[0].len();
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows)
            .max_by(|&i, &j| rows[i][col].norm().partial_cmp(&rows[j][col].norm()).unwrap());
        let Some(pivot) = pivot else { break };
        if rows[pivot][col].norm() <= tol * scale {
            continue;
        }
        rows.swap(rank, pivot);
        let inv = C64::new(1.0, 0.0) / rows[rank][col];
        for i in 0..nrows {
            if i != rank {
                let factor = rows[i][col] * inv;
                if factor.norm() > 0.0 {
                    for c in col..ncols {
                        let sub = factor * rows[rank][c];
                        rows[i][c] -= sub;
                    }
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Commutant dimension straight from the definition: unknowns T[k][l]
/// (row-major), one equation per (g, i, j) for (T·K_g − K_g·T)[i][j] = 0,
/// with K_g read off the action table.
fn commutant_dim_brute(rep: &KoopmanRep) -> usize {
    let n = rep.dim();
    let action = rep.action();
    let mut rows = Vec::new();
    for g in rep.group().elements() {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![C64::new(0.0, 0.0); n * n];
                // (T·K_g)[i][j] = Σ_y T[i][y]·[j == g·y]
                for y in 0..n {
                    if action.apply(g, y) == j {
                        row[i * n + y] += C64::new(1.0, 0.0);
                    }
                }
                // (K_g·T)[i][j] = T[g·i][j]
                row[action.apply(g, i) * n + j] -= C64::new(1.0, 0.0);
                rows.push(row);
            }
        }
    }
    n * n - rank_by_elimination(rows, 1e-12)
}

/// Restricted commutant dimension from the definition, with the restricted
/// operators assembled from weighted inner products.
fn restricted_commutant_dim_brute(rep: &KoopmanRep, sub: &Subspace) -> usize {
    let d = sub.dim();
    let n = rep.dim();
    let w = rep.measure().weights();
    let action = rep.action();
    let restricted: Vec<Vec<C64>> = rep
        .group()
        .elements()
        .map(|g| {
            let mut m = vec![C64::new(0.0, 0.0); d * d];
            for i in 0..d {
                for j in 0..d {
                    let mut acc = C64::new(0.0, 0.0);
                    for x in 0..n {
                        acc += sub.basis()[j].value(action.apply(g, x))
                            * sub.basis()[i].value(x).conj()
                            * w[x];
                    }
                    m[i * d + j] = acc;
                }
            }
            m
        })
        .collect();
    let mut rows = Vec::new();
    for m in &restricted {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![C64::new(0.0, 0.0); d * d];
                for y in 0..d {
                    row[i * d + y] += m[y * d + j];
                    row[y * d + j] -= m[i * d + y];
                }
                rows.push(row);
            }
        }
    }
    d * d - rank_by_elimination(rows, 1e-10)
}

#[test]
fn commutant_dimensions_match_elimination_oracle() {
    for n in [3usize, 4, 5] {
        let rep = regular_cyclic(n);
        let dim = compute_commutant(&rep, &Tolerances::default()).dimension();
        assert_eq!(dim, commutant_dim_brute(&rep), "Z_{n}");
        assert_eq!(dim, n);
    }
    let rep = regular_symmetric(3);
    let dim = compute_commutant(&rep, &Tolerances::default()).dimension();
    assert_eq!(dim, commutant_dim_brute(&rep));
    assert_eq!(dim, 6);

    // Trivial group acting on 4 points: everything commutes.
    let group = Arc::new(FiniteGroup::cyclic(1).unwrap());
    let action = Arc::new(GAction::trivial(group, 4).unwrap());
    let measure = Arc::new(InvariantMeasure::counting(4, Side::Left).unwrap());
    let rep = KoopmanRep::new(action, measure).unwrap();
    let dim = compute_commutant(&rep, &Tolerances::default()).dimension();
    assert_eq!(dim, commutant_dim_brute(&rep));
    assert_eq!(dim, 16);
}

#[test]
fn restricted_blocks_have_scalar_commutant_by_oracle() {
    for rep in [regular_cyclic(6), regular_symmetric(3)] {
        let subs = decompose_invariant(&rep, 0, &Tolerances::default());
        for (i, sub) in subs.iter().enumerate() {
            assert!(sub.is_irreducible(), "block {i} not certified irreducible");
            assert_eq!(
                restricted_commutant_dim_brute(&rep, sub),
                1,
                "block {i} oracle disagrees"
            );
        }
    }
}

#[test]
fn cyclic_decomposition_matches_character_projectors() {
    for n in 2..=8usize {
        let rep = regular_cyclic(n);
        let subs = decompose_invariant(&rep, 0, &Tolerances::default());
        assert_eq!(subs.len(), n, "Z_{n} block count");
        let mut used = vec![false; n];
        for sub in &subs {
            assert_eq!(sub.dim(), 1);
            let b = &sub.basis()[0];
            let mut best = (usize::MAX, f64::INFINITY);
            for k in 0..n {
                let chi = character(rep.measure().clone(), n, k);
                // Frobenius distance of the two rank-one projectors, formed
                // entrywise (the 2−2|⟨b,χ⟩|² shortcut is algebraically equal
                // but loses half the digits to cancellation).
                let mut dist2 = 0.0f64;
                for x in 0..n {
                    for y in 0..n {
                        let p_sub = b.value(x) * b.value(y).conj();
                        let p_chi = chi.value(x) * chi.value(y).conj() / n as f64;
                        dist2 += (p_sub - p_chi).norm_sqr();
                    }
                }
                let dist = dist2.sqrt();
                if dist < best.1 {
                    best = (k, dist);
                }
            }
            assert!(best.1 < 1e-8, "Z_{n}: projection distance {}", best.1);
            assert!(!used[best.0], "Z_{n}: character {} matched twice", best.0);
            used[best.0] = true;
        }
    }
}

#[test]
fn composition_operator_matches_brute_force_matrix() {
    let rep = regular_symmetric(3);
    let tol = Tolerances::default();
    let subs = decompose_invariant(&rep, 5, &tol);
    let block = subs.iter().find(|s| s.dim() == 2).unwrap().clone();

    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut psi = FieldFunction::zero(rep.measure().clone());
    let mut f = FieldFunction::zero(rep.measure().clone());
    for b in block.basis() {
        psi = &psi + &b.scaled(random_complex(&mut rng));
        f = &f + &b.scaled(random_complex(&mut rng));
    }

    // Explicit kernel: M[x][y] = Σ_g w_r(g)·ψ(g·x)·conj(ψ(g·y))·w(y).
    let n = rep.dim();
    let w = rep.measure().weights();
    let wr = rep.group_measure().weights();
    let action = rep.action();
    let mut out_brute = vec![C64::new(0.0, 0.0); n];
    for x in 0..n {
        let mut acc = C64::new(0.0, 0.0);
        for y in 0..n {
            let mut kernel = C64::new(0.0, 0.0);
            for g in rep.group().elements() {
                kernel += psi.value(action.apply(g, x))
                    * psi.value(action.apply(g, y)).conj()
                    * wr[g];
            }
            acc += kernel * f.value(y) * w[y];
        }
        out_brute[x] = acc;
    }

    let pair = AdmissiblePair::new(&rep, psi, block, &tol).unwrap();
    let (out, rel) = reconstruct(&rep, &pair, &f, &tol).unwrap();
    assert!(rel < 1e-9, "relative error {rel}");
    let mut diff = 0.0f64;
    let mut scale = 0.0f64;
    for x in 0..n {
        diff += (out.value(x) - out_brute[x]).norm_sqr();
        scale += out_brute[x].norm_sqr();
    }
    assert!(diff.sqrt() < 1e-9 * scale.sqrt().max(1.0));
}

#[test]
fn ridgelet_coefficients_match_direct_summation() {
    let rep = regular_symmetric(3);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let psi = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
    let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
    let coeffs = ridgelet_transform(&rep, &psi, &f).unwrap();
    let n = rep.dim();
    let w = rep.measure().weights();
    let action = rep.action();
    for g in rep.group().elements() {
        let mut acc = C64::new(0.0, 0.0);
        for x in 0..n {
            acc += f.value(x) * psi.value(action.apply(g, x)).conj() * w[x];
        }
        assert!((coeffs.gamma().value(g) - acc).norm() < 1e-12);
    }
}

#[test]
fn single_layer_roundtrips_exact_everywhere() {
    let mut reps: Vec<KoopmanRep> = (2..=8).map(regular_cyclic).collect();
    reps.push(regular_symmetric(3));
    reps.push(regular_symmetric(4));
    for rep in &reps {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in rep.group().elements() {
            for _ in 0..10 {
                let f = FieldFunction::random_normal(rep.measure().clone(), &mut rng);
                let psi = rep.solve_single_layer(g, &f).unwrap();
                let back = rep.apply(g, &psi).unwrap();
                assert_eq!(back.values(), f.values(), "roundtrip not exact at g={g}");
            }
        }
    }
}
