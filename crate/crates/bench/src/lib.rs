//! Fixtures shared by the benchmarks.

use legdga::dga::{appendix_m10_139, appendix_m10_161, GradedDga};
use legdga::{build_front, FrontDiagram, Z2};

/// The two ten-crossing fronts, by name.
pub fn fronts() -> Vec<(&'static str, FrontDiagram)> {
    ["m10_161", "m10_139"]
        .into_iter()
        .map(|name| (name, build_front(legdga::knots::builtin(name).expect("built-in knot"))))
        .collect()
}

/// The published Z/2 differentials (m10_139 at t = 1).
pub fn z2_tables() -> Vec<(&'static str, GradedDga<Z2>)> {
    vec![("m10_161", appendix_m10_161()), ("m10_139", appendix_m10_139().to_z2())]
}
