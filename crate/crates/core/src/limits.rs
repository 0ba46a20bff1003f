//! Degree caps shared by enumeration and the brute-force counters.

use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_degree`].
pub const MAX_DEGREE_ENV: &str = "PRELIE_MAX_DEGREE";

/// Upper bounds on the degrees the library will work with.
///
/// The planar count grows like the Catalan numbers, so the enumeration cap
/// bounds memory; the brute-force cap bounds the factorial searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree accepted by the enumerators.
    pub max_degree: usize,
    /// Largest degree accepted by the bijection counters.
    pub brute_force_degree: usize,
    /// Largest degree accepted by the multi-generator monomial enumerator.
    pub multigen_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 12,
            brute_force_degree: 8,
            multigen_degree: 5,
        }
    }
}

impl Limits {
    /// Defaults, with `max_degree` taken from `PRELIE_MAX_DEGREE` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_DEGREE_ENV) {
            limits.max_degree = raw.trim().parse().map_err(|_| {
                Error::parse(
                    &raw,
                    0,
                    format!("{MAX_DEGREE_ENV} must be a positive integer"),
                )
            })?;
        }
        Ok(limits)
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree == 0 || degree > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn check_brute_force(&self, degree: usize) -> Result<()> {
        if degree > self.brute_force_degree {
            return Err(Error::CapExceeded {
                what: "brute-force",
                degree,
                cap: self.brute_force_degree,
            });
        }
        Ok(())
    }
}
