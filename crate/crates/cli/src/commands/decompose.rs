//! The `decompose` pipeline: commutant computation and invariant-subspace
//! decomposition with per-block certificates.

use anyhow::Result;

use deep_ridgelet::{compute_commutant, decompose_invariant, inner_product, Tolerances, C64};

use crate::commands::{build_group_context, EXACT_GATE};
use crate::config::ExperimentConfig;
use crate::report::{DecomposeReport, SubspaceEntry};
use crate::Outcome;

pub fn run(config: &ExperimentConfig) -> Result<(DecomposeReport, Outcome)> {
    let ctx = build_group_context(config)?;
    let rep = &ctx.rep;
    let gate = config.gate(EXACT_GATE);
    let tol = Tolerances::default();

    let commutant = compute_commutant(rep, &tol);
    let subspaces = decompose_invariant(rep, config.seed, &tol);

    let entries: Vec<SubspaceEntry> = subspaces
        .iter()
        .map(|s| SubspaceEntry {
            dim: s.dim(),
            irreducible: s.is_irreducible(),
            commutant_dim: s.commutant_dim(),
            invariance_residual: s.invariance_residual(),
        })
        .collect();

    let dimension_total: usize = subspaces.iter().map(|s| s.dim()).sum();
    let all: Vec<_> = subspaces.iter().flat_map(|s| s.basis()).collect();
    let mut orthogonality = 0.0f64;
    for i in 0..all.len() {
        for j in 0..all.len() {
            let ip = inner_product(all[i], all[j])?;
            let target = if i == j { 1.0 } else { 0.0 };
            orthogonality = orthogonality.max((ip - C64::new(target, 0.0)).norm());
        }
    }

    let pass = entries.iter().all(|e| e.irreducible && e.invariance_residual < gate)
        && dimension_total == rep.dim()
        && orthogonality < gate
        && commutant.residual() < gate;

    let report = DecomposeReport {
        pipeline: "decompose",
        group: ctx.label,
        order: rep.group().order(),
        points: rep.dim(),
        seed: config.seed,
        tolerance: gate,
        commutant_dim: commutant.dimension(),
        commutant_residual: commutant.residual(),
        subspaces: entries,
        dimension_total,
        max_orthogonality_defect: orthogonality,
        pass,
    };
    let outcome = if pass { Outcome::Pass } else { Outcome::CheckFailed };
    Ok((report, outcome))
}
