use std::time::{Duration, Instant};

use serde::Serialize;

/// Limits for one exhaustive graph-level search. A search that runs out
/// reports an inconclusive outcome instead of an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Maximum number of search nodes; `None` for unlimited.
    pub max_steps: Option<u64>,
    /// Wall-clock limit; `None` for unlimited.
    #[serde(serialize_with = "ser_duration_ms")]
    pub time_limit: Option<Duration>,
}

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(10);

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: None, time_limit: Some(DEFAULT_TIME_LIMIT) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_steps: None, time_limit: None }
    }

    pub fn steps(max_steps: u64) -> Self {
        Budget { max_steps: Some(max_steps), time_limit: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Budget { max_steps: None, time_limit: Some(Duration::from_secs_f64(secs)) }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            steps: 0,
            max_steps: self.max_steps,
            deadline: self.time_limit.map(|d| Instant::now() + d),
        }
    }
}

fn ser_duration_ms<S: serde::Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&(d.as_millis() as u64)),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

#[derive(Debug)]
pub(crate) struct Meter {
    steps: u64,
    max_steps: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), Exhausted> {
        self.steps += 1;
        if self.max_steps.is_some_and(|m| self.steps > m) {
            return Err(Exhausted);
        }
        if self.steps & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Exhausted);
                }
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn steps(&self) -> u64 {
        self.steps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_limit_trips() {
        let mut m = Budget::steps(3).meter();
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert_eq!(m.tick(), Err(Exhausted));
        assert_eq!(m.steps(), 4);
    }

    #[test]
    fn unlimited_never_trips() {
        let mut m = Budget::unlimited().meter();
        for _ in 0..10_000 {
            m.tick().unwrap();
        }
    }
}
