//! Pipeline implementations behind the CLI subcommands.

pub mod decompose;
pub mod reconstruct;
pub mod verify;
pub mod wavelet;

use std::sync::Arc;

use anyhow::{Context, Result};

use deep_ridgelet::{FiniteGroup, GAction, InvariantMeasure, KoopmanRep, Side};

use crate::config::{ActionSpec, ExperimentConfig, GroupSpec};
use crate::fileio;

/// Default pass/fail gate for the exact finite-group pipelines.
pub const EXACT_GATE: f64 = 1e-9;

/// Default pass/fail gate for the quadrature wavelet pipeline.
pub const WAVELET_GATE: f64 = 5e-2;

pub struct GroupContext {
    pub label: String,
    pub rep: KoopmanRep,
}

/// Builds the Koopman representation from the config's group/action specs:
/// counting measure, eager operator cache, full fixture validation.
pub fn build_group_context(config: &ExperimentConfig) -> Result<GroupContext> {
    let spec = config.group.as_ref().context("config has no `group` specification")?;
    let (group, embedded) = match spec {
        GroupSpec::Cyclic(n) => (Arc::new(FiniteGroup::cyclic(*n)?), None),
        GroupSpec::Symmetric(n) => (Arc::new(FiniteGroup::symmetric(*n)?), None),
        GroupSpec::CayleyFile(path) => {
            let parsed = fileio::load_group_file(&config.resolve(path))?;
            (parsed.group, parsed.embedded_action)
        }
    };
    let action = match &config.action {
        Some(ActionSpec::Regular) => GAction::regular(group),
        Some(ActionSpec::TrivialPoints(points)) => GAction::trivial(group, *points)?,
        Some(ActionSpec::File(path)) => fileio::load_action_file(&config.resolve(path), group)?,
        None => match embedded {
            Some(block) => fileio::bind_action(block, group)?,
            None => GAction::regular(group),
        },
    };
    let measure = Arc::new(InvariantMeasure::counting(action.num_points(), Side::Left)?);
    let rep = KoopmanRep::new(Arc::new(action), measure)?;
    Ok(GroupContext { label: spec.label(), rep })
}
