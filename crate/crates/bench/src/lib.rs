//! Fixed inputs shared by the benchmarks.

use brauerlink::{parse_braid, BraidWord};

/// Named braid words, from small to large.
pub const BRAIDS: &[(&str, &str)] = &[
    ("trefoil", "braid 2: 1 1 1"),
    ("figure_eight", "braid 3: 1 -2 1 -2"),
    ("whitehead", "braid 3: 1 1 -2 1 -2"),
    ("torus_2_7", "braid 2: 1 1 1 1 1 1 1"),
    ("torus_3_4", "braid 3: 1 2 1 2 1 2 1 2"),
    ("knot_10_crossings", "braid 4: 1 -2 1 3 -2 -2 3 1 -2 3"),
];

pub fn braid(name: &str) -> BraidWord {
    let (_, text) = BRAIDS
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no benchmark braid named {name}"));
    parse_braid(text).expect("benchmark braids parse")
}
