//! The `verify` pipeline: operator-law checks over one group fixture.
//!
//! Checks, in report order: unitarity, the right-action composition law
//! `K_g·K_h = K_{hg}`, permutation structure of the operator matrices, the
//! exact single-layer round trip `K_g[K_g†[f]] = f`, analysis/synthesis
//! duality, both intertwining identities, and the dual-action composition
//! law. Gaps on random inputs are normalized by the input norms so the
//! tolerance is scale-free.

use anyhow::Result;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use deep_ridgelet::{
    adjointness_gap, dual_action, inner_product, intertwining_gaps, norm, FieldFunction,
    KoopmanRep,
};

use crate::commands::{build_group_context, EXACT_GATE};
use crate::config::ExperimentConfig;
use crate::report::{LawCheck, VerifyReport};
use crate::Outcome;

const RANDOM_PAIRS_PER_ELEMENT: usize = 3;
const ADJOINTNESS_TRIALS: usize = 100;
const ROUNDTRIP_DRAWS: usize = 10;

pub fn run(config: &ExperimentConfig) -> Result<(VerifyReport, Outcome)> {
    let ctx = build_group_context(config)?;
    let rep = &ctx.rep;
    let gate = config.gate(EXACT_GATE);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut laws = Vec::new();
    let push = |laws: &mut Vec<LawCheck>, law: &str, max_gap: f64| {
        laws.push(LawCheck {
            law: law.to_string(),
            max_gap,
            tolerance: gate,
            pass: max_gap < gate,
        });
    };

    push(&mut laws, "unitarity", unitarity_gap(rep, &mut rng));
    push(&mut laws, "right_action_law", right_action_gap(rep));
    push(&mut laws, "permutation_matrices", permutation_gap(rep));
    push(&mut laws, "single_layer_roundtrip", roundtrip_gap(rep, &mut rng));
    push(&mut laws, "adjointness", adjointness(rep, &mut rng));
    let (analysis, synthesis) = intertwining(rep, &mut rng)?;
    push(&mut laws, "analysis_intertwining", analysis);
    push(&mut laws, "synthesis_intertwining", synthesis);
    push(&mut laws, "dual_action_law", dual_action_gap(rep));

    let pass = laws.iter().all(|l| l.pass);
    let report = VerifyReport {
        pipeline: "verify",
        group: ctx.label,
        order: rep.group().order(),
        points: rep.dim(),
        seed: config.seed,
        tolerance: gate,
        laws,
        pass,
    };
    let outcome = if pass { Outcome::Pass } else { Outcome::CheckFailed };
    Ok((report, outcome))
}

fn unitarity_gap(rep: &KoopmanRep, rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for g in rep.group().elements() {
        for _ in 0..RANDOM_PAIRS_PER_ELEMENT {
            let psi = FieldFunction::random_normal(rep.measure().clone(), rng);
            let phi = FieldFunction::random_normal(rep.measure().clone(), rng);
            let lhs = inner_product(&rep.apply(g, &psi).unwrap(), &rep.apply(g, &phi).unwrap())
                .unwrap();
            let rhs = inner_product(&psi, &phi).unwrap();
            let scale = norm(&psi) * norm(&phi) + 1.0;
            worst = worst.max((lhs - rhs).norm() / scale);
        }
    }
    worst
}

fn right_action_gap(rep: &KoopmanRep) -> f64 {
    let group = rep.group();
    let mut worst = 0.0f64;
    for g in group.elements() {
        for h in group.elements() {
            let prod = rep.matrix(g) * rep.matrix(h);
            let diff = &prod - rep.matrix(group.mul(h, g));
            worst = worst.max(diff.norm());
        }
    }
    worst
}

fn permutation_gap(rep: &KoopmanRep) -> f64 {
    let n = rep.dim();
    let mut worst = 0.0f64;
    for g in rep.group().elements() {
        let m = rep.matrix(g);
        for i in 0..n {
            let mut row_sum = 0.0;
            let mut col_sum = 0.0;
            for j in 0..n {
                let r = m[(i, j)];
                let c = m[(j, i)];
                // Entries must be exactly 0 or 1.
                worst = worst.max(r.im.abs()).max(r.re.abs().min((r.re - 1.0).abs()));
                row_sum += r.re;
                col_sum += c.re;
            }
            worst = worst.max((row_sum - 1.0).abs()).max((col_sum - 1.0).abs());
        }
    }
    worst
}

fn roundtrip_gap(rep: &KoopmanRep, rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for g in rep.group().elements() {
        for _ in 0..ROUNDTRIP_DRAWS {
            let f = FieldFunction::random_normal(rep.measure().clone(), rng);
            let psi = rep.solve_single_layer(g, &f).unwrap();
            let back = rep.apply(g, &psi).unwrap();
            for (a, b) in back.values().iter().zip(f.values()) {
                worst = worst.max((a - b).norm());
            }
        }
    }
    worst
}

fn adjointness(rep: &KoopmanRep, rng: &mut ChaCha8Rng) -> f64 {
    let mut worst = 0.0f64;
    for _ in 0..ADJOINTNESS_TRIALS {
        let psi = FieldFunction::random_normal(rep.measure().clone(), rng);
        let f = FieldFunction::random_normal(rep.measure().clone(), rng);
        let gamma = FieldFunction::random_normal(rep.group_measure().clone(), rng);
        let gap = adjointness_gap(rep, &psi, &gamma, &f).unwrap();
        let scale = norm(&psi) * norm(&f) * norm(&gamma) + 1.0;
        worst = worst.max(gap / scale);
    }
    worst
}

fn intertwining(rep: &KoopmanRep, rng: &mut ChaCha8Rng) -> Result<(f64, f64)> {
    let mut worst_analysis = 0.0f64;
    let mut worst_synthesis = 0.0f64;
    for g in rep.group().elements() {
        for _ in 0..RANDOM_PAIRS_PER_ELEMENT {
            let psi = FieldFunction::random_normal(rep.measure().clone(), rng);
            let f = FieldFunction::random_normal(rep.measure().clone(), rng);
            let gamma = FieldFunction::random_normal(rep.group_measure().clone(), rng);
            let (a, s) = intertwining_gaps(rep, &psi, &f, &gamma, g)?;
            let scale_a = norm(&psi) * norm(&f) + 1.0;
            let scale_s = norm(&psi) * norm(&gamma) + 1.0;
            worst_analysis = worst_analysis.max(a / scale_a);
            worst_synthesis = worst_synthesis.max(s / scale_s);
        }
    }
    Ok((worst_analysis, worst_synthesis))
}

/// `K̂_g∘K̂_h = K̂_{hg}` checked exactly on all index maps: both sides send
/// the indicator of `k` to the indicator of `k·g⁻¹·h⁻¹ = k·(hg)⁻¹`.
fn dual_action_gap(rep: &KoopmanRep) -> f64 {
    let group = rep.group();
    let order = group.order();
    let mut worst = 0.0f64;
    let gm = rep.group_measure().clone();
    for g in group.elements() {
        for h in group.elements() {
            let hg = group.mul(h, g);
            for p in 0..order {
                let gamma = FieldFunction::indicator(gm.clone(), p).unwrap();
                let lhs = dual_action(group, g, &dual_action(group, h, &gamma).unwrap()).unwrap();
                let rhs = dual_action(group, hg, &gamma).unwrap();
                for (a, b) in lhs.values().iter().zip(rhs.values()) {
                    worst = worst.max((a - b).norm());
                }
            }
        }
    }
    worst
}
