//! End-to-end run: walls in the `(β, α)` half-plane, their classification,
//! and the induced chamber structure of `NS(M)`.

use std::path::Path;

use crate::annotations::{parse_annotations, Annotations, WallAnnotation, WallStatus};
use crate::classify::{classify_wall, WallKind, WallTypeRecord};
use crate::cones::{assemble_cones, compute_l, orthogonal_basis, wall_image, ChamberWall, ConeChart, NSBasis, NSRay};
use crate::config::{parse_config, RunConfig};
use crate::error::{Error, Result};
use crate::lattice::{mukai_pairing, square, K3Config, MukaiVector};
use crate::plane::{find_holes_on_ray, is_valid_point, HoleReport, StabilityPoint, DEFAULT_HOLE_SEARCH_LIMIT};
use crate::rational::{floor, int, rat, rat_int, rational_sqrt, Int, Rat};
use crate::walls::{
    numerical_wall, q_invariant, search_destabilizers, walls_meet, with_holes, SearchOutcome, SearchWindow, Side, Wall,
    WallShape,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaySearch {
    pub beta: Rat,
    pub side: Side,
    pub holes: Vec<HoleReport>,
    /// `None` when no search was run (`rank_bound = 0`).
    pub outcome: Option<SearchOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallRecord {
    pub name: String,
    pub wall: Wall,
    /// Rays on which the wall was found; empty for the vertical wall.
    pub found_on: Vec<Rat>,
    pub classification: WallTypeRecord,
    pub annotation: Option<WallAnnotation>,
    pub image: Option<NSRay>,
}

impl WallRecord {
    pub fn is_actual_candidate(&self) -> bool {
        self.annotation.as_ref().is_none_or(|a| a.status == WallStatus::Actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyChecks {
    /// No two walls meet in the open half-plane.
    pub walls_disjoint: bool,
    /// Every wall image is orthogonal to `v` and to its witness.
    pub images_orthogonal: bool,
    pub reference_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub config: RunConfig,
    pub v_square: Int,
    pub q: Rat,
    /// Rays actually searched, with `true` when they came from `μ ± sqrt(Q)`.
    pub default_rays: bool,
    pub searches: Vec<RaySearch>,
    pub walls: Vec<WallRecord>,
    pub basis: Option<NSBasis>,
    pub reference_point: Option<StabilityPoint>,
    pub cones: Option<ConeChart>,
    pub gieseker_model: String,
    pub checks: ConsistencyChecks,
    pub notes: Vec<String>,
}

fn mu(v: &MukaiVector) -> Rat {
    Rat::new(v.c.clone(), v.r.clone())
}

/// `μ ± sqrt(Q)` when `Q > 0` is a rational square.
pub fn default_rays(k3: &K3Config, v: &MukaiVector) -> Result<Option<Vec<Rat>>> {
    let q = q_invariant(k3, v)?;
    if q <= rat(0, 1) {
        return Ok(None);
    }
    Ok(rational_sqrt(&q).map(|s| vec![mu(v) - &s, mu(v) + s]))
}

/// A point of the Gieseker chamber: `β` an integer below `μ`, and `α²`
/// doubled from 1 until it clears every wall and is a stability condition.
pub fn reference_point(k3: &K3Config, v: &MukaiVector, walls: &[Wall]) -> Result<StabilityPoint> {
    let m = mu(v);
    let fl = rat_int(&floor(&m));
    let beta = if fl < m { fl } else { m - rat(1, 1) };
    let mut alpha2 = rat(1, 1);
    loop {
        let clear = walls.iter().all(|w| match &w.shape {
            WallShape::Vertical { .. } => true,
            WallShape::Semicircle { center, radius2 } => {
                let d = &beta - center;
                &d * &d + &alpha2 > *radius2
            }
        });
        let pt = StabilityPoint::new(beta.clone(), alpha2.clone())?;
        if clear && is_valid_point(k3, &pt) {
            return Ok(pt);
        }
        alpha2 *= rat(2, 1);
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Reads a config file and the annotation file it names, which is resolved
/// relative to the config file's directory.
pub fn load_run(config_path: &Path) -> Result<(RunConfig, Annotations)> {
    let config = parse_config(&read(config_path)?)?;
    let annotations = load_annotations(&config, config_path.parent().unwrap_or(Path::new(".")))?;
    Ok((config, annotations))
}

pub fn load_annotations(config: &RunConfig, base: &Path) -> Result<Annotations> {
    match &config.annotations {
        Some(name) => parse_annotations(&read(&base.join(name))?),
        None => Ok(Annotations::default()),
    }
}

pub fn run_pipeline(config: &RunConfig, annotations: &Annotations) -> Result<RunReport> {
    let k3 = config.k3();
    let v = &config.v;
    let v_square = square(&k3, v);
    let q = q_invariant(&k3, v)?;
    let gieseker_model = annotations.gieseker_model.clone().unwrap_or_else(|| format!("M_S[{}]", v.triple()));
    let mut notes = Vec::new();
    let mut report = RunReport {
        config: config.clone(),
        v_square: v_square.clone(),
        q,
        default_rays: false,
        searches: Vec::new(),
        walls: Vec::new(),
        basis: None,
        reference_point: None,
        cones: None,
        gieseker_model,
        checks: ConsistencyChecks { walls_disjoint: true, images_orthogonal: true, reference_valid: true },
        notes: Vec::new(),
    };

    if v_square < int(0) {
        notes.push(format!(
            "v^2 = {v_square}: the moduli space has dimension v^2 + 2 = 0 and is a single point; no walls are computed"
        ));
        report.notes = notes;
        return Ok(report);
    }

    let rays = match &config.rays {
        Some(r) => r.clone(),
        None => match default_rays(&k3, v)? {
            Some(r) => {
                report.default_rays = true;
                r
            }
            None => {
                notes.push("sqrt(Q) is not rational and no rays were given; no destabilizer search was run".into());
                Vec::new()
            }
        },
    };

    let vertical_witness = v + &MukaiVector::new(0, 0, 1);
    let vertical = numerical_wall(&k3, v, &vertical_witness)?
        .ok_or_else(|| Error::Inconsistent("vertical wall missing".into()))?;
    let mut found: Vec<(Wall, Vec<Rat>)> = vec![(with_holes(&k3, vertical), Vec::new())];

    for beta in &rays {
        let side =
            Side::of(v, beta).ok_or_else(|| Error::RayOnVerticalWall { beta: beta.clone(), v: Box::new(v.clone()) })?;
        let holes = find_holes_on_ray(&k3, beta, DEFAULT_HOLE_SEARCH_LIMIT);
        let outcome = if config.rank_bound == 0 {
            None
        } else {
            Some(search_destabilizers(&k3, v, &SearchWindow::new(beta.clone(), side, config.rank_bound))?)
        };
        for cand in outcome.iter().flat_map(|o| &o.candidates) {
            match found.iter_mut().find(|(w, _)| w.shape == cand.wall.shape) {
                Some((_, on)) => on.push(beta.clone()),
                None => found.push((with_holes(&k3, cand.wall.clone()), vec![beta.clone()])),
            }
        }
        report.searches.push(RaySearch { beta: beta.clone(), side, holes, outcome });
    }
    if config.rank_bound == 0 {
        notes.push("rank_bound = 0: no search performed".into());
    }

    found.sort_by(|a, b| a.0.shape.center().cmp(b.0.shape.center()).then_with(|| a.0.witness.cmp(&b.0.witness)));
    for (i, (wall, found_on)) in found.into_iter().enumerate() {
        let classification = classify_wall(&k3, v, &wall.witness)?;
        let annotation = annotations.wall(&wall.witness).cloned();
        report.walls.push(WallRecord {
            name: format!("W{}", i + 1),
            wall,
            found_on,
            classification,
            annotation,
            image: None,
        });
    }
    for (i, a) in report.walls.iter().enumerate() {
        for b in &report.walls[i + 1..] {
            if walls_meet(&a.wall.shape, &b.wall.shape).is_some() {
                report.checks.walls_disjoint = false;
                notes.push(format!("{} and {} meet in the open half-plane", a.name, b.name));
            }
        }
    }

    if v_square == int(0) {
        notes.push("v^2 = 0: v-perp is degenerate; cones are not assembled".into());
        report.notes = notes;
        return Ok(report);
    }

    let basis = orthogonal_basis(&k3, v)?;
    for w in report.walls.iter_mut() {
        let image = wall_image(&k3, &basis, v, &w.wall.witness)?;
        let ok = mukai_pairing(&k3, &image.ambient, v) == int(0)
            && mukai_pairing(&k3, &image.ambient, &w.wall.witness) == int(0);
        report.checks.images_orthogonal &= ok;
        w.image = Some(image);
    }
    let shapes: Vec<Wall> = report.walls.iter().map(|w| w.wall.clone()).collect();
    let pt = reference_point(&k3, v, &shapes)?;
    report.checks.reference_valid = is_valid_point(&k3, &pt);
    let reference = compute_l(&k3, &basis, &pt, v)?;
    let chamber_walls: Vec<ChamberWall> = report
        .walls
        .iter()
        .filter(|w| w.is_actual_candidate())
        .map(|w| ChamberWall {
            name: w.name.clone(),
            witness: w.wall.witness.clone(),
            kind: w.classification.kind,
            model: w.annotation.as_ref().and_then(|a| a.model.clone()),
        })
        .collect();
    for w in report.walls.iter().filter(|w| !w.is_actual_candidate()) {
        notes.push(format!("{} is annotated not-actual and does not cut the movable cone", w.name));
    }
    if annotations.walls.is_empty()
        && report.walls.iter().any(|w| w.classification.kind != WallKind::FakeOrUnknown && !w.wall.is_vertical())
    {
        notes.push("no annotations: every numerical candidate is treated as actual".into());
    }
    report.cones = Some(assemble_cones(&k3, v, &basis, &reference, &chamber_walls, &report.gieseker_model)?);
    report.basis = Some(basis);
    report.reference_point = Some(pt);
    report.notes = notes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::ConeEdge;

    fn cfg(text: &str) -> RunConfig {
        crate::config::parse_config(text).unwrap()
    }

    #[test]
    fn reference_point_for_genus_nine() {
        let k3 = K3Config::new(16).unwrap();
        let pt = reference_point(&k3, &MukaiVector::new(2, 1, 3), &[]).unwrap();
        assert_eq!((pt.beta, pt.alpha2), (rat(0, 1), rat(1, 1)));
    }

    #[test]
    fn default_rays_genus_nine() {
        let k3 = K3Config::new(16).unwrap();
        assert_eq!(default_rays(&k3, &MukaiVector::new(2, 1, 3)).unwrap(), Some(vec![rat(1, 4), rat(3, 4)]));
    }

    #[test]
    fn unannotated_run_keeps_all_candidates() {
        let r = run_pipeline(&cfg("h2=16\nv=2,1,3"), &Annotations::default()).unwrap();
        let witnesses: Vec<String> = r.walls.iter().map(|w| w.wall.witness.triple()).collect();
        assert_eq!(witnesses, ["3,1,3", "2,1,4", "1,1,8", "1,1,9"]);
        assert!(r.checks.walls_disjoint && r.checks.images_orthogonal);
        assert!(r.cones.is_some());
    }

    #[test]
    fn rank_bound_zero() {
        let r = run_pipeline(&cfg("h2=16\nv=2,1,3\nrank_bound=0"), &Annotations::default()).unwrap();
        assert_eq!(r.walls.len(), 1);
        assert!(r.walls[0].wall.is_vertical());
        assert!(r.searches.iter().all(|s| s.outcome.is_none()));
        let c = r.cones.unwrap();
        assert!(matches!(&c.mov[0], ConeEdge::Ray(x) if x.coords.1 == rat(0, 1)));
    }

    #[test]
    fn rigid_vector() {
        let r = run_pipeline(&cfg("h2=16\nv=1,0,1"), &Annotations::default()).unwrap();
        assert!(r.walls.is_empty() && r.cones.is_none());
        assert_eq!(r.v_square, int(-2));
    }
}
