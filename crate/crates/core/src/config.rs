use serde::{Deserialize, Serialize};

/// Resource caps and knobs shared by every operation that enumerates.
///
/// Defaults are sized so that PSigmaL(2,27) (degree 28, order 29484) fits
/// comfortably.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    /// Maximum permutation degree accepted by group construction.
    pub cap_degree: usize,
    /// Maximum group order for element enumeration (brute-force scans).
    pub cap_order: u128,
    /// Maximum coset-space size for quotient and section actions.
    pub cap_cosets: u128,
    /// Maximum group order fed to the nilpotent-subgroup enumeration.
    pub cap_nilpotent: u128,
    /// Maximum number of subgroup classes retained during enumeration.
    pub cap_classes: usize,
    /// Time budget for the bounded section-isomorphism search.
    pub timeout_iso_search_ms: u64,
    /// Default seed for seeded operations.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cap_degree: 1024,
            cap_order: 200_000,
            cap_cosets: 10_000,
            cap_nilpotent: 30_000,
            cap_classes: 10_000,
            timeout_iso_search_ms: 30_000,
            seed: 0,
        }
    }
}
