//! Fixtures shared by the benchmarks.

use k3walls::{parse_config, Annotations, K3Config, MukaiVector, RunConfig};

pub fn example_config() -> RunConfig {
    parse_config("h2 = 16\nv = 2,1,3\n").expect("valid config")
}

pub fn example_inputs() -> (K3Config, MukaiVector, Annotations) {
    let cfg = example_config();
    (cfg.k3(), cfg.v.clone(), Annotations::default())
}
