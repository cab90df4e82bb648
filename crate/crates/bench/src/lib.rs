//! Fixed inputs shared by the benchmarks.

use lgtw::families::{generate, FamilySpec};
use lgtw::Graph;

/// Family members small enough for every exact solver.
pub fn fixtures() -> Vec<(String, Graph)> {
    [
        FamilySpec::Complete { n: 5 },
        FamilySpec::CompleteBipartite { p: 3, q: 3 },
        FamilySpec::PathPower { n: 9, k: 2 },
        FamilySpec::CyclePowerMatched { n: 8, k: 2 },
    ]
    .into_iter()
    .map(|s| (s.to_string().replace(' ', "-"), generate(&s).expect("valid family")))
    .collect()
}
