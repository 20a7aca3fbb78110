//! SVG 1.1 figures: walls in the `(β, α)` half-plane, and the cones of
//! `NS(M)` in `(e1, e2)`-coordinates.
//!
//! Coordinates are the exact values multiplied by the configured scale.
//! Non-integral coordinates are written with six decimals, rounded half away
//! from zero; square roots are rounded to nearest. Exact values are repeated
//! in `data-*` attributes.
//!
//! Style table:
//!
//! | class          | stroke  | dash |
//! |----------------|---------|------|
//! | `pos-boundary` | green   | none |
//! | `divisorial`   | red     | 6 4  |
//! | `flopping`     | blue    | 2 3  |
//! | `fake`         | gray    | 1 3  |
//! | `not-actual`   | gray    | 1 3  |
//! | `ray`          | black   | 1 4  |

use std::fmt::Write as _;

use num_traits::Signed;

use crate::annotations::WallStatus;
use crate::classify::WallKind;
use crate::cones::{ConeChart, ConeEdge, ImageRole, NSRay, Position};
use crate::pipeline::{RunReport, WallRecord};
use crate::rational::{floor_sqrt, int, rat, rat_int, rational_sqrt, sqrt_to_decimal, to_decimal, Rat};
use crate::walls::WallShape;

const DIGITS: u32 = 6;

const STYLE: &str = "\
.axis{stroke:#000;stroke-width:1}\
.ray{stroke:#000;stroke-width:0.5;stroke-dasharray:1 4}\
.pos-boundary{stroke:#1a9641;stroke-width:2;fill:none}\
.divisorial{stroke:#d7191c;stroke-width:2;stroke-dasharray:6 4;fill:none}\
.flopping{stroke:#2b83ba;stroke-width:2;stroke-dasharray:2 3;fill:none}\
.fake,.not-actual{stroke:#999;stroke-width:1;stroke-dasharray:1 3;fill:none}\
.hole{fill:#fff;stroke:#000;stroke-width:1}\
.ample{fill:#000}\
text{font-family:serif;font-size:14px}";

fn num(x: &Rat) -> String {
    to_decimal(x, DIGITS)
}

/// `sqrt(x)`, exact when possible.
fn root(x: &Rat) -> String {
    match rational_sqrt(x) {
        Some(r) => num(&r),
        None => sqrt_to_decimal(x, DIGITS),
    }
}

fn neg(s: String) -> String {
    if s == "0" {
        s
    } else if let Some(rest) = s.strip_prefix('-') {
        rest.to_string()
    } else {
        format!("-{s}")
    }
}

/// Rational upper bound for `sqrt(x)` within `1/1000`.
fn sqrt_upper(x: &Rat) -> Rat {
    Rat::new(floor_sqrt(&(x * rat(1_000_000, 1))) + 1, int(1000))
}

fn header(s: &mut String, view: [Rat; 4], title: &str) {
    let [x, y, w, h] = view.map(|q| num(&q));
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x} {y} {w} {h}" width="{w}" height="{h}">"#
    );
    let _ = writeln!(s, "<title>{title}</title>");
    let _ = writeln!(s, "<style>{STYLE}</style>");
}

fn wall_class(w: &WallRecord) -> &'static str {
    if w.annotation.as_ref().is_some_and(|a| a.status == WallStatus::NotActual) {
        return "not-actual";
    }
    match w.classification.kind {
        WallKind::Divisorial(_) => "divisorial",
        WallKind::Flopping => "flopping",
        WallKind::FakeOrUnknown => "fake",
    }
}

/// `(a)` with a prime inserted before the closing parenthesis.
fn primed(label: &str, prime: &str) -> String {
    match label.strip_suffix(')') {
        Some(head) => format!("{head}{prime})"),
        None => format!("{label}{prime}"),
    }
}

fn text(s: &mut String, x: &str, y: &str, label: &str) {
    let _ = writeln!(s, r#"<text x="{x}" y="{y}" text-anchor="middle">{label}</text>"#);
}

/// Label of the movable-cone chamber on the far side of a wall's image.
fn far_chamber(cones: &ConeChart, wall: &str) -> Option<String> {
    let img = cones.images.iter().find(|i| i.wall == wall && i.role == ImageRole::ChamberWall)?;
    let line = img.effective();
    let on = |e: &ConeEdge| e.ray().is_some_and(|r| r.same_line(line));
    cones.chambers.iter().find(|c| !c.contains_reference && (on(&c.lower) || on(&c.upper))).map(|c| c.label.clone())
}

/// Figure of the walls in the upper half-plane, `x = β·scale`, `y = -α·scale`.
pub fn render_halfplane_svg(report: &RunReport) -> String {
    let scale = rat_int(&int(report.config.scale as i64));
    let v = &report.config.v;
    let mu = Rat::new(v.c.clone(), v.r.clone());

    let mut lo = &mu - rat(1, 2);
    let mut hi = &mu + rat(1, 2);
    let mut top = rat(1, 2);
    for w in &report.walls {
        if let WallShape::Semicircle { center, radius2 } = &w.wall.shape {
            let r = sqrt_upper(radius2);
            lo = lo.min(center - &r - rat(1, 8));
            hi = hi.max(center + &r + rat(1, 8));
            top = top.max(&r + rat(1, 4));
        }
    }
    let foot = rat(1, 16);
    let view = [&lo * &scale, -(&top * &scale), (&hi - &lo) * &scale, (&top + &foot) * &scale];
    let y_top = num(&-(&top * &scale));

    let mut s = String::new();
    header(&mut s, view, "Walls in the (beta, alpha) half-plane");
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{}" y1="0" x2="{}" y2="0"/>"#,
        num(&(&lo * &scale)),
        num(&(&hi * &scale))
    );
    for search in &report.searches {
        let x = num(&(&search.beta * &scale));
        let _ = writeln!(s, r#"<line class="ray" data-beta="{}" x1="{x}" y1="0" x2="{x}" y2="{y_top}"/>"#, search.beta);
    }

    for w in &report.walls {
        let class = wall_class(w);
        let witness = w.wall.witness.triple();
        match &w.wall.shape {
            WallShape::Vertical { beta } => {
                let x = num(&(beta * &scale));
                let _ = writeln!(
                    s,
                    r#"<line class="{class}" data-wall="{}" data-witness="{witness}" data-beta="{beta}" x1="{x}" y1="0" x2="{x}" y2="{y_top}"/>"#,
                    w.name
                );
            }
            WallShape::Semicircle { center, radius2 } => {
                let cx = center * &scale;
                let r2 = radius2 * &scale * &scale;
                let (r_attr, r) = match rational_sqrt(&r2) {
                    Some(r) => (format!(r#"data-r="{}""#, num(&r)), num(&r)),
                    None => (format!(r#"data-r2="{r2}""#), sqrt_to_decimal(&r2, DIGITS)),
                };
                let left = match rational_sqrt(&r2) {
                    Some(rr) => num(&(&cx - rr)),
                    None => sqrt_offset(&cx, &r2, -1),
                };
                let right = match rational_sqrt(&r2) {
                    Some(rr) => num(&(&cx + rr)),
                    None => sqrt_offset(&cx, &r2, 1),
                };
                let _ = writeln!(
                    s,
                    r#"<path class="{class}" data-wall="{}" data-witness="{witness}" data-cx="{}" {r_attr} d="M {left} 0 A {r} {r} 0 0 1 {right} 0"/>"#,
                    w.name,
                    num(&cx)
                );
            }
        }
        for h in &w.wall.holes {
            let _ = writeln!(
                s,
                r#"<circle class="hole" data-wall="{}" data-root="{}" data-beta="{}" data-alpha2="{}" cx="{}" cy="{}" r="4"/>"#,
                w.name,
                h.root.triple(),
                h.beta,
                h.alpha2,
                num(&(&h.beta * &scale)),
                neg(root(&(&h.alpha2 * &scale * &scale)))
            );
        }
    }

    // chamber labels: unprimed left of the vertical wall, primed right of it
    let actual_arcs: Vec<(&WallRecord, &Rat, &Rat)> = report
        .walls
        .iter()
        .filter(|w| w.is_actual_candidate())
        .filter_map(|w| match &w.wall.shape {
            WallShape::Semicircle { center, radius2 } => Some((w, center, radius2)),
            WallShape::Vertical { .. } => None,
        })
        .collect();
    let gieseker_label = report
        .cones
        .as_ref()
        .and_then(|c| c.chambers.iter().find(|ch| ch.contains_reference))
        .map_or("(a)".to_string(), |ch| ch.label.clone());
    for (left, prime) in [(true, ""), (false, "'")] {
        let arcs: Vec<_> = actual_arcs.iter().filter(|(_, c, _)| (**c < mu) == left).collect();
        let outer = arcs.iter().max_by(|a, b| a.2.cmp(b.2));
        let (ox, oy) = match outer {
            Some((_, c, r2)) => ((*c).clone(), sqrt_upper(r2) + rat(1, 8)),
            None => (if left { &mu - rat(1, 4) } else { &mu + rat(1, 4) }, rat(1, 4)),
        };
        text(&mut s, &num(&(&ox * &scale)), &num(&-(&oy * &scale)), &primed(&gieseker_label, prime));
        for (w, c, r2) in arcs {
            if let Some(label) = report.cones.as_ref().and_then(|cones| far_chamber(cones, &w.name)) {
                let y = -(floor_sqrt(&(*r2 * &scale * &scale)) / int(2));
                text(&mut s, &num(&(*c * &scale)), &y.to_string(), &primed(&label, prime));
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

/// `cx ± sqrt(r2)` with the root rounded to nearest at six decimals.
fn sqrt_offset(cx: &Rat, r2: &Rat, sign: i32) -> String {
    let unit = 10i64.pow(DIGITS);
    let twice = floor_sqrt(&(r2 * rat(4 * unit * unit, 1)));
    let root = Rat::new((twice + 1) / 2, int(unit));
    num(&if sign < 0 { cx - root } else { cx + root })
}

/// Point at direction `(a, b)` in `(e1, e2)`-coordinates, scaled so that the
/// larger coordinate has absolute value `len`. Returns SVG `(x, y)`.
fn rational_point(a: &Rat, b: &Rat, len: &Rat) -> (String, String) {
    let m = a.abs().max(b.abs());
    (num(&(a * len / &m)), num(&-(b * len / &m)))
}

fn edge_point(e: &ConeEdge, len: &Rat) -> (String, String, String) {
    match e {
        ConeEdge::Ray(r) => {
            let (a, b) = r.integral_coords();
            let (x, y) = rational_point(&rat_int(&a), &rat_int(&b), len);
            (x, y, format!("{a},{b}"))
        }
        ConeEdge::PositiveBoundary { sign, ratio } => {
            // direction (1, sign·sqrt(ratio))
            let (x, y) = if *ratio <= rat(1, 1) {
                (num(len), sqrt_to_decimal(&(ratio * len * len), DIGITS))
            } else {
                (sqrt_to_decimal(&(len * len / ratio), DIGITS), num(len))
            };
            let y = if *sign > 0 { neg(y) } else { y };
            (x, y, format!("1,{}sqrt({ratio})", if *sign < 0 { "-" } else { "" }))
        }
    }
}

/// Rational slope used to place labels between two edges.
fn approx_slope(e: &ConeEdge) -> Rat {
    match e.position() {
        Position::Rational(t) => t,
        Position::Sqrt { sign, ratio } => sqrt_upper(&ratio) * rat(sign as i64, 1),
    }
}

fn ray_line(s: &mut String, class: &str, e: &ConeEdge, len: &Rat, extra: &str) {
    let (x, y, dir) = edge_point(e, len);
    let _ = writeln!(s, r#"<line class="{class}" data-dir="{dir}"{extra} x1="0" y1="0" x2="{x}" y2="{y}"/>"#);
}

/// Figure of the positive cone of `NS(M)` with its chamber decomposition,
/// `x = a·scale`, `y = -b·scale` for the class `a e1 + b e2`.
pub fn render_ns_cone_svg(report: &RunReport) -> String {
    let scale = rat_int(&int(report.config.scale as i64));
    let margin = &scale / rat(8, 1);
    let view = [-margin.clone(), -(&scale + &margin), &scale + rat(2, 1) * &margin, rat(2, 1) * (&scale + &margin)];
    let mut s = String::new();
    header(&mut s, view, "Cones in NS(M)");
    let Some(cones) = &report.cones else {
        s.push_str("</svg>\n");
        return s;
    };
    let _ = writeln!(s, r#"<line class="axis" x1="0" y1="0" x2="{}" y2="0"/>"#, num(&scale));
    let _ = writeln!(s, r#"<line class="axis" x1="0" y1="{}" x2="0" y2="{}"/>"#, num(&-scale.clone()), num(&scale));
    for e in &cones.pos {
        ray_line(&mut s, "pos-boundary", e, &scale, "");
    }

    let names = |ray: &NSRay, roles: &[ImageRole]| -> String {
        cones
            .images
            .iter()
            .filter(|i| roles.contains(&i.role) && i.effective().same_line(ray))
            .map(|i| i.wall.clone())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for e in &cones.mov {
        if let Some(r) = e.ray() {
            let walls = names(r, &[ImageRole::MovableBoundary]);
            if !walls.is_empty() {
                ray_line(&mut s, "divisorial", e, &scale, &format!(r#" data-wall="{walls}""#));
            }
        }
    }
    for ch in cones.chambers.iter().skip(1) {
        if let Some(r) = ch.lower.ray() {
            let walls = names(r, &[ImageRole::ChamberWall]);
            ray_line(&mut s, "flopping", &ch.lower, &scale, &format!(r#" data-wall="{walls}""#));
        }
    }

    let (a, b) = cones.reference.integral_coords();
    let (x, y) = rational_point(&rat_int(&a), &rat_int(&b), &(&scale * rat(3, 4)));
    let _ = writeln!(s, r#"<circle class="ample" data-dir="{a},{b}" cx="{x}" cy="{y}" r="5"/>"#);

    for ch in &cones.chambers {
        let t = (approx_slope(&ch.lower) + approx_slope(&ch.upper)) / rat(2, 1);
        let (x, y) = rational_point(&rat(1, 1), &t, &(&scale * rat(9, 10)));
        text(&mut s, &x, &y, &ch.label);
    }
    s.push_str("</svg>\n");
    s
}
