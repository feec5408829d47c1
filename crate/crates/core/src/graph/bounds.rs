use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Edge factor for graphs without a K5 subdivision: such graphs are taken to
/// have at most `3n` edges.
pub const NO_K5_SUBDIVISION_EDGE_FACTOR: u64 = 3;

/// Edge factor for graphs without a K6 subdivision (`m <= 4n`).
pub const NO_K6_SUBDIVISION_EDGE_FACTOR: u64 = 4;

/// Slack at or below which a no-K6-subdivision check is flagged as close to
/// the bound, where the additive constant of the true bound matters.
pub const NEAR_BOUNDARY_SLACK: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeBoundRegime {
    Planar,
    NoK5Subdivision,
    NoK6Subdivision,
}

impl EdgeBoundRegime {
    pub fn bound(self, n: u64) -> u64 {
        match self {
            EdgeBoundRegime::Planar => 3 * n - 6,
            EdgeBoundRegime::NoK5Subdivision => NO_K5_SUBDIVISION_EDGE_FACTOR * n,
            EdgeBoundRegime::NoK6Subdivision => NO_K6_SUBDIVISION_EDGE_FACTOR * n,
        }
    }
}

impl std::str::FromStr for EdgeBoundRegime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(EdgeBoundRegime::Planar),
            "no-k5-subdivision" | "no-K5-subdiv" | "no-k5-subdiv" => Ok(EdgeBoundRegime::NoK5Subdivision),
            "no-k6-subdivision" | "no-K6-subdiv" | "no-k6-subdiv" => Ok(EdgeBoundRegime::NoK6Subdivision),
            other => Err(Error::InvalidParams(format!("unknown edge-bound regime {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBoundCheck {
    pub regime: EdgeBoundRegime,
    pub vertices: u64,
    pub edges: u64,
    pub bound: u64,
    pub within: bool,
    /// `bound - edges`; negative when the bound is exceeded.
    pub slack: i64,
    pub near_boundary: bool,
}

/// Compares the edge count of `g` with the extremal bound of `regime`.
pub fn edge_bound_check(g: &Graph, regime: EdgeBoundRegime) -> Result<EdgeBoundCheck> {
    let n = g.order() as u64;
    if regime == EdgeBoundRegime::Planar && n < 3 {
        return Err(Error::Precondition(format!("planar edge bound needs at least 3 vertices, got {n}")));
    }
    let edges = g.size() as u64;
    let bound = regime.bound(n);
    let slack = bound as i64 - edges as i64;
    Ok(EdgeBoundCheck {
        regime,
        vertices: n,
        edges,
        bound,
        within: edges <= bound,
        slack,
        near_boundary: regime == EdgeBoundRegime::NoK6Subdivision && slack <= NEAR_BOUNDARY_SLACK,
    })
}
