//! Exact wall-and-chamber computations for Bridgeland stability on K3
//! surfaces of Picard rank one, and the induced decomposition of the movable
//! cone of the moduli space.
//!
//! ```
//! use k3walls::{parse_config, render_report, run_pipeline, Annotations};
//!
//! let config = parse_config("h2 = 16\nv = 2,1,3").unwrap();
//! let report = run_pipeline(&config, &Annotations::default()).unwrap();
//! assert!(render_report(&report).contains("center = 3/16"));
//! ```

pub mod annotations;
pub mod classify;
pub mod cones;
pub mod config;
pub mod error;
pub mod lattice;
pub mod pipeline;
pub mod plane;
pub mod rational;
pub mod report;
pub mod svg;
pub mod walls;

pub use annotations::{parse_annotations, Annotations, WallAnnotation, WallStatus};
pub use classify::{
    classify_lattice, classify_wall, solve_norm_pairing, wall_lattice, DivisorialKind, NormSolutions, WallKind,
    WallLattice, WallTypeRecord, WitnessRole,
};
pub use cones::{
    assemble_cones, compute_l, orthogonal_basis, reflect, wall_image, ConeChart, ConeEdge, NSBasis, NSRay, Reflected,
};
pub use config::{parse_config, RunConfig};
pub use error::{Error, Result};
pub use lattice::{
    chern_to_mukai, euler_chi, hrr_oracle, mukai_pairing, mukai_to_chern, square, ChernCharacter, ChernVector,
    K3Config, MukaiVector,
};
pub use pipeline::{load_annotations, load_run, run_pipeline, RunReport, WallRecord};
pub use plane::{find_holes_on_ray, is_valid_point, reduced_charge, StabilityPoint};
pub use rational::{Int, Rat};
pub use report::render_report;
pub use svg::{render_halfplane_svg, render_ns_cone_svg};
pub use walls::{numerical_wall, ray_intersection, search_destabilizers, SearchWindow, Side, Wall, WallShape};
