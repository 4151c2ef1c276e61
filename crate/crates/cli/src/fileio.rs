//! Fixture file formats.
//!
//! Group/action files:
//! ```json
//! {"order": 4, "cayley": [[0,1,2,3], ...],
//!  "action": {"num_points": 4, "table": [[...], ...], "origin": 0}}
//! ```
//! The `action` block is optional (regular action is the default) and may
//! also live in its own file. Signal fixtures:
//! ```json
//! {"dx": 0.03125, "re": [...], "im": [...]}
//! ```
//! with `im` optional. Malformed tables are rejected with the position of
//! the first offending entry.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use deep_ridgelet::{FiniteGroup, GAction, SampledSignal, C64};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    order: usize,
    cayley: Vec<Vec<usize>>,
    #[serde(default)]
    action: Option<ActionBlock>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionBlock {
    num_points: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    origin: usize,
}

/// A parsed group file: the validated group plus its optional embedded
/// action block (not yet bound to the group).
pub struct ParsedGroupFile {
    pub group: Arc<FiniteGroup>,
    pub embedded_action: Option<ActionBlock>,
}

pub fn load_group_file(path: &Path) -> Result<ParsedGroupFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read group file {}", path.display()))?;
    let file: GroupFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse group file {}", path.display()))?;
    if file.cayley.len() != file.order {
        bail!(
            "{}: cayley table has {} rows, declared order is {}",
            path.display(),
            file.cayley.len(),
            file.order
        );
    }
    let group = FiniteGroup::from_cayley(&file.cayley)
        .with_context(|| format!("invalid cayley table in {}", path.display()))?;
    Ok(ParsedGroupFile { group: Arc::new(group), embedded_action: file.action })
}

pub fn load_action_file(path: &Path, group: Arc<FiniteGroup>) -> Result<GAction> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read action file {}", path.display()))?;
    let block: ActionBlock = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse action file {}", path.display()))?;
    bind_action(block, group).with_context(|| format!("invalid action in {}", path.display()))
}

pub fn bind_action(block: ActionBlock, group: Arc<FiniteGroup>) -> Result<GAction> {
    GAction::new(group, block.num_points, &block.table, block.origin).map_err(Into::into)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignalFile {
    dx: f64,
    re: Vec<f64>,
    #[serde(default)]
    im: Option<Vec<f64>>,
}

pub fn load_signal_file(path: &Path) -> Result<SampledSignal> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read signal file {}", path.display()))?;
    let file: SignalFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse signal file {}", path.display()))?;
    let im = file.im.unwrap_or_else(|| vec![0.0; file.re.len()]);
    if im.len() != file.re.len() {
        bail!(
            "{}: `re` has {} samples but `im` has {}",
            path.display(),
            file.re.len(),
            im.len()
        );
    }
    let values: Vec<C64> =
        file.re.iter().zip(&im).map(|(&re, &im)| C64::new(re, im)).collect();
    SampledSignal::new(values, file.dx)
        .with_context(|| format!("invalid signal in {}", path.display()))
}
