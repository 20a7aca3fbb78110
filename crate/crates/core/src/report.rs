//! Deterministic text rendering of a [`RunReport`].
//!
//! Sections are `[config]`, `[lattice]`, `[search beta=..]`, `[wall Wn]`,
//! `[ns]`, `[cones]`, `[checks]` and `[notes]`; every line inside a section
//! is `key = value`. Rationals are written `p/q`; irrational lengths carry a
//! six-digit decimal next to their exact square.

use std::fmt::Write as _;

use crate::cones::{ConeChart, ConeEdge, NSRay};
use crate::lattice::{mukai_pairing, K3Config, MukaiVector};
use crate::pipeline::{RunReport, WallRecord};
use crate::plane::HoleReport;
use crate::rational::{rational_sqrt, sqrt_to_decimal, Rat};
use crate::walls::WallShape;

const DIGITS: u32 = 6;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.iter().map(f).collect::<Vec<_>>().join("; ")
    }
}

/// `sqrt(x)` exactly when rational, otherwise `sqrt(x) ~ d.dddddd`.
pub fn format_sqrt(x: &Rat) -> String {
    match rational_sqrt(x) {
        Some(r) => r.to_string(),
        None => format!("sqrt({x}) ~ {}", sqrt_to_decimal(x, DIGITS)),
    }
}

pub fn format_ray(r: &NSRay) -> String {
    let (a, b) = r.integral_coords();
    format!("{} [{a}e1 {} {}e2]", r.ambient.triple(), if b < 0.into() { "-" } else { "+" }, b.magnitude())
}

pub fn format_edge(e: &ConeEdge) -> String {
    match e {
        ConeEdge::Ray(r) => format_ray(r),
        ConeEdge::PositiveBoundary { sign, ratio } => {
            format!("boundary [e1 {} sqrt({ratio})e2]", if *sign < 0 { "-" } else { "+" })
        }
    }
}

fn format_hole_report(h: &HoleReport) -> String {
    match &h.alpha2_threshold {
        Some(a) => format!("{} below alpha2 = {a}", h.delta.triple()),
        None => format!("{} (no threshold)", h.delta.triple()),
    }
}

fn write_wall(s: &mut String, k3: &K3Config, v: &MukaiVector, w: &WallRecord) {
    let _ = writeln!(s, "[wall {}]", w.name);
    let _ = writeln!(s, "witness = {}", w.wall.witness.triple());
    match &w.wall.shape {
        WallShape::Vertical { beta } => {
            let _ = writeln!(s, "shape = vertical");
            let _ = writeln!(s, "beta = {beta}");
        }
        WallShape::Semicircle { center, radius2 } => {
            let _ = writeln!(s, "shape = semicircle");
            let _ = writeln!(s, "center = {center}");
            let _ = writeln!(s, "radius_squared = {radius2}");
            let _ = writeln!(s, "radius = {}", format_sqrt(radius2));
        }
    }
    let found: Vec<String> = w.found_on.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(s, "found_on_rays = {}", if found.is_empty() { "none".into() } else { found.join(", ") });
    let _ = writeln!(
        s,
        "holes = {}",
        list(&w.wall.holes, |h| format!("(beta = {}, alpha2 = {}) root {}", h.beta, h.alpha2, h.root.triple()))
    );
    let c = &w.classification;
    let _ = writeln!(s, "kind = {}", c.kind);
    let _ = writeln!(s, "bouncing = {}", yes_no(c.bouncing));
    let _ = writeln!(s, "totally_semistable_flag = {}", yes_no(c.totally_semistable_flag));
    let _ = writeln!(s, "witnesses = {}", list(&c.witnesses, |x| format!("{} {}", x.role.label(), x.class.triple())));
    let l = &c.lattice;
    let _ = writeln!(s, "lattice_basis = {}; {}", l.basis[0].triple(), l.basis[1].triple());
    let _ = writeln!(s, "lattice_gram = {},{},{}", l.gram[0][0], l.gram[0][1], l.gram[1][1]);
    let _ = writeln!(s, "v_in_lattice = {},{}", l.v_coords[0], l.v_coords[1]);
    match &w.annotation {
        Some(a) => {
            let _ = writeln!(s, "status = {}", a.status);
            if let Some(m) = &a.model {
                let _ = writeln!(s, "model_across = {m}");
            }
            if let Some(n) = &a.note {
                let _ = writeln!(s, "note = {n}");
            }
        }
        None => {
            let _ = writeln!(s, "status = numerical candidate");
        }
    }
    if let Some(img) = &w.image {
        let _ = writeln!(s, "image = {}", format_ray(img));
        let on_v = mukai_pairing(k3, &img.ambient, v);
        let on_w = mukai_pairing(k3, &img.ambient, &w.wall.witness);
        let _ = writeln!(s, "image_pairings = <image, v> = {on_v}, <image, {}> = {on_w}", w.wall.witness.triple());
    }
    s.push('\n');
}

fn write_cones(s: &mut String, c: &ConeChart) {
    let _ = writeln!(s, "[cones]");
    let _ = writeln!(s, "pos = {} .. {}", format_edge(&c.pos[0]), format_edge(&c.pos[1]));
    let _ = writeln!(s, "mov = {} .. {}", format_edge(&c.mov[0]), format_edge(&c.mov[1]));
    let _ = writeln!(s, "nef = {} .. {}", format_edge(&c.nef[0]), format_edge(&c.nef[1]));
    for img in &c.images {
        let mut line = format!("image {} = {} role {}", img.wall, format_ray(&img.image), img.role.label());
        if let Some(r) = &img.reflected {
            let _ = write!(line, " reflected {}", format_ray(r));
        }
        let _ = writeln!(s, "{line}");
    }
    for ch in &c.chambers {
        let _ = writeln!(
            s,
            "chamber {} = {} .. {} model {}{}",
            ch.label,
            format_edge(&ch.lower),
            format_edge(&ch.upper),
            ch.model,
            if ch.contains_reference { " (nef cone)" } else { "" }
        );
    }
    s.push('\n');
}

/// `[config]` and `[lattice]`.
pub fn render_header(r: &RunReport) -> String {
    let mut s = String::new();
    s.push_str("[config]\n");
    s.push_str(&r.config.serialize());
    s.push('\n');

    let _ = writeln!(s, "[lattice]");
    let _ = writeln!(s, "v_square = {}", r.v_square);
    let _ = writeln!(s, "moduli_dimension = {}", &r.v_square + 2);
    let _ = writeln!(s, "q = {}", r.q);
    let rays: Vec<String> = r.searches.iter().map(|x| x.beta.to_string()).collect();
    let _ = writeln!(
        s,
        "rays = {}{}",
        if rays.is_empty() { "none".into() } else { rays.join(", ") },
        if r.default_rays { " (mu +- sqrt(q))" } else { "" }
    );
    s.push('\n');
    s
}

/// `[search beta=..]` and `[wall Wn]` sections.
pub fn render_walls(r: &RunReport) -> String {
    let mut s = String::new();
    for search in &r.searches {
        let _ = writeln!(s, "[search beta={}]", search.beta);
        let _ = writeln!(s, "side = {}", search.side.label());
        let _ = writeln!(s, "holes_on_ray = {}", list(&search.holes, format_hole_report));
        match &search.outcome {
            None => {
                let _ = writeln!(s, "saturation = no search performed");
            }
            Some(o) => {
                let ranks: Vec<String> = o.saturation.nonempty_ranks.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "rank_bound = {}", o.saturation.rank_bound);
                let _ =
                    writeln!(s, "nonempty_ranks = {}", if ranks.is_empty() { "none".into() } else { ranks.join(", ") });
                let _ = writeln!(
                    s,
                    "empty_run_start = {}",
                    o.saturation.empty_run_start.map_or("none".into(), |x| x.to_string())
                );
                let _ = writeln!(s, "candidates = {}", list(&o.candidates, |c| c.w.triple()));
            }
        }
        s.push('\n');
    }
    let k3 = r.config.k3();
    for w in &r.walls {
        write_wall(&mut s, &k3, &r.config.v, w);
    }
    s
}

/// `[ns]` and `[cones]`; empty when no cones were assembled.
pub fn render_cones(r: &RunReport) -> String {
    let mut s = String::new();
    if let (Some(b), Some(pt), Some(c)) = (&r.basis, &r.reference_point, &r.cones) {
        let _ = writeln!(s, "[ns]");
        let _ = writeln!(s, "e1 = {}", b.e1.triple());
        let _ = writeln!(s, "e2 = {}", b.e2.triple());
        let _ = writeln!(s, "gram = {},{}", b.gram.0, b.gram.1);
        let _ = writeln!(s, "reference_point = (beta = {}, alpha2 = {})", pt.beta, pt.alpha2);
        let _ = writeln!(s, "reference_ray = {}", format_ray(&c.reference));
        s.push('\n');
        write_cones(&mut s, c);
    }
    s
}

/// `[checks]` and `[notes]`.
pub fn render_checks(r: &RunReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[checks]");
    let _ = writeln!(s, "walls_disjoint = {}", yes_no(r.checks.walls_disjoint));
    let _ = writeln!(s, "images_orthogonal = {}", yes_no(r.checks.images_orthogonal));
    let _ = writeln!(s, "reference_valid = {}", yes_no(r.checks.reference_valid));
    let _ = writeln!(s, "cones_nested = {}", if r.cones.is_some() { "yes" } else { "not assembled" });
    s.push('\n');

    let _ = writeln!(s, "[notes]");
    for n in &r.notes {
        let _ = writeln!(s, "- {n}");
    }
    s
}

pub fn render_report(r: &RunReport) -> String {
    let mut s = String::from("# k3walls report\n\n");
    s.push_str(&render_header(r));
    s.push_str(&render_walls(r));
    s.push_str(&render_cones(r));
    s.push_str(&render_checks(r));
    s
}
