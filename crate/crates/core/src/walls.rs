//! Numerical walls for a fixed class `v` in the `(β, α²)` half-plane, and
//! the finite search for destabilizing classes along a vertical ray.
//!
//! For `v.r > 0` every numerical wall `W(w)` is either the vertical line
//! `β = v.c/v.r` or a semicircle centred on the `β`-axis with
//!
//! ```text
//! C  = (v.r w.s - v.s w.r) / (H² (v.r w.c - v.c w.r))
//! R² = (C - v.c/v.r)² - Q,      Q = v² / (H² v.r²)
//! ```
//!
//! All comparisons against `√Q` are done on squares.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{square, K3Config, MukaiVector};
use crate::plane::{
    expected_shift, find_holes_on_ray, reduced_charge, root_vanishing_alpha2, slope_compare, StabilityPoint,
    DEFAULT_HOLE_SEARCH_LIMIT,
};
use crate::rational::{ceil, floor, floor_sqrt, int, rat, rat_int, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WallShape {
    Vertical { beta: Rat },
    Semicircle { center: Rat, radius2: Rat },
}

impl WallShape {
    /// Position used for ordering walls left to right.
    pub fn center(&self) -> &Rat {
        match self {
            WallShape::Vertical { beta } => beta,
            WallShape::Semicircle { center, .. } => center,
        }
    }
}

/// A point of a wall where a root has vanishing central charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallHole {
    pub beta: Rat,
    pub alpha2: Rat,
    pub root: MukaiVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub shape: WallShape,
    pub witness: MukaiVector,
    pub holes: Vec<WallHole>,
}

impl Wall {
    pub fn is_vertical(&self) -> bool {
        matches!(self.shape, WallShape::Vertical { .. })
    }
}

fn mu(v: &MukaiVector) -> Rat {
    Rat::new(v.c.clone(), v.r.clone())
}

/// `Q = v² / (H² v.r²)`.
pub fn q_invariant(cfg: &K3Config, v: &MukaiVector) -> Result<Rat> {
    if v.r.is_zero() {
        return Err(Error::ZeroRank(v.clone()));
    }
    Ok(Rat::new(square(cfg, v), cfg.h2_int() * &v.r * &v.r))
}

/// The numerical wall `W(w)` for `v`, or `None` when the circle is empty.
/// The returned wall has no holes attached; see [`wall_holes`].
pub fn numerical_wall(cfg: &K3Config, v: &MukaiVector, w: &MukaiVector) -> Result<Option<Wall>> {
    if !v.r.is_positive() {
        return Err(Error::NonPositiveRank(v.clone()));
    }
    if w.is_zero() || v.is_proportional(w) {
        return Err(Error::Proportional { v: Box::new(v.clone()), w: Box::new(w.clone()) });
    }
    let denom = &v.r * &w.c - &v.c * &w.r;
    if denom.is_zero() {
        let shape = WallShape::Vertical { beta: mu(v) };
        return Ok(Some(Wall { shape, witness: w.clone(), holes: Vec::new() }));
    }
    let center = Rat::new(&v.r * &w.s - &v.s * &w.r, cfg.h2_int() * denom);
    let offset = &center - mu(v);
    let radius2 = &offset * &offset - q_invariant(cfg, v)?;
    if !radius2.is_positive() {
        return Ok(None);
    }
    let shape = WallShape::Semicircle { center, radius2 };
    Ok(Some(Wall { shape, witness: w.clone(), holes: Vec::new() }))
}

/// True iff the centre lies strictly outside `[μ - √Q, μ + √Q]`.
pub fn side_constraint_check(cfg: &K3Config, v: &MukaiVector, wall: &Wall) -> Result<bool> {
    let WallShape::Semicircle { center, .. } = &wall.shape else {
        return Err(Error::NotSemicircle);
    };
    let q = q_invariant(cfg, v)?;
    let offset = center - mu(v);
    if offset.is_zero() {
        return Ok(false);
    }
    Ok(&offset * &offset > q)
}

/// `α² = R² - (β₀ - C)²` where the semicircle meets `{β = β₀}`.
pub fn ray_intersection(wall: &Wall, beta0: &Rat) -> Result<Option<Rat>> {
    let WallShape::Semicircle { center, radius2 } = &wall.shape else {
        return Err(Error::NotSemicircle);
    };
    let d = beta0 - center;
    let a2 = radius2 - &d * &d;
    Ok(a2.is_positive().then_some(a2))
}

/// The quotient class `t = v - w` of `E ↪ F ↠ T`.
pub fn decompose_class(v: &MukaiVector, w: &MukaiVector) -> MukaiVector {
    v - w
}

/// `Re Z(v) Im Z(w) = Re Z(w) Im Z(v)` at `pt` (after cancelling `α`).
pub fn wall_identity_holds(cfg: &K3Config, v: &MukaiVector, w: &MukaiVector, pt: &StabilityPoint) -> bool {
    let zv = reduced_charge(cfg, pt, v);
    let zw = reduced_charge(cfg, pt, w);
    &zv.re * &zw.im_over_alpha == &zw.re * &zv.im_over_alpha
}

/// A common point `(β, α²)` of two walls in the open half-plane, if any.
pub fn walls_meet(a: &WallShape, b: &WallShape) -> Option<(Rat, Rat)> {
    use WallShape::*;
    match (a, b) {
        (Vertical { beta: x }, Vertical { beta: y }) => (x == y).then(|| (x.clone(), rat(1, 1))),
        (Vertical { beta }, Semicircle { center, radius2 }) | (Semicircle { center, radius2 }, Vertical { beta }) => {
            let d = beta - center;
            let a2 = radius2 - &d * &d;
            a2.is_positive().then(|| (beta.clone(), a2))
        }
        (Semicircle { center: c1, radius2: r1 }, Semicircle { center: c2, radius2: r2 }) => {
            if c1 == c2 {
                return (r1 == r2).then(|| (c1.clone(), r1.clone()));
            }
            // (β-C1)² - (β-C2)² = R1² - R2²
            let beta = (r1 - r2 + c2 * c2 - c1 * c1) / (rat(2, 1) * (c2 - c1));
            let d = &beta - c1;
            let a2 = r1 - &d * &d;
            a2.is_positive().then_some((beta, a2))
        }
    }
}

/// Holes of `wall`: points on it where a root `δ` with `0 < δ.r <= rank_limit`
/// has `Z(δ) = 0`.
pub fn wall_holes(cfg: &K3Config, wall: &Wall, rank_limit: u64) -> Vec<WallHole> {
    match &wall.shape {
        WallShape::Vertical { beta } => find_holes_on_ray(cfg, beta, rank_limit)
            .into_iter()
            .filter_map(|h| h.alpha2_threshold.map(|a2| WallHole { beta: beta.clone(), alpha2: a2, root: h.delta }))
            .collect(),
        WallShape::Semicircle { center, radius2 } => {
            let h2 = cfg.h2_int();
            let reach = floor_sqrt(radius2) + Int::one();
            let mut holes = Vec::new();
            for r in 1..=rank_limit {
                let r = Int::from(r);
                let rr = rat_int(&r);
                let lo = floor(&(center * &rr)) - &reach * &r;
                let hi = ceil(&(center * &rr)) + &reach * &r;
                let mut c = lo;
                while c <= hi {
                    let num = &h2 * &c * &c + int(2);
                    let den = int(2) * &r;
                    if (&num % &den).is_zero() {
                        let root = MukaiVector::from_ints(r.clone(), c.clone(), num / den);
                        let beta = Rat::new(c.clone(), r.clone());
                        let alpha2 = root_vanishing_alpha2(cfg, &beta, &root);
                        let d = &beta - center;
                        if alpha2.is_positive() && &d * &d + &alpha2 == *radius2 {
                            holes.push(WallHole { beta, alpha2, root });
                        }
                    }
                    c += 1;
                }
            }
            holes.sort_by(|a, b| a.beta.cmp(&b.beta).then(a.root.cmp(&b.root)));
            holes
        }
    }
}

/// Attaches holes found with the default search limit.
pub fn with_holes(cfg: &K3Config, mut wall: Wall) -> Wall {
    wall.holes = wall_holes(cfg, &wall, DEFAULT_HOLE_SEARCH_LIMIT);
    wall
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    LeftOfVertical,
    RightOfVertical,
}

impl Side {
    pub fn of(v: &MukaiVector, beta0: &Rat) -> Option<Side> {
        match beta0.cmp(&mu(v)) {
            Ordering::Less => Some(Side::LeftOfVertical),
            Ordering::Greater => Some(Side::RightOfVertical),
            Ordering::Equal => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Side::LeftOfVertical => "left",
            Side::RightOfVertical => "right",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchWindow {
    pub beta0: Rat,
    pub side: Side,
    pub rank_bound: u64,
    /// Enforce `w² >= -2` on the subobject class.
    pub require_subobject_square: bool,
    /// Also enforce `t² >= -2` on the quotient class.
    pub require_quotient_square: bool,
}

impl SearchWindow {
    pub fn new(beta0: Rat, side: Side, rank_bound: u64) -> Self {
        SearchWindow { beta0, side, rank_bound, require_subobject_square: true, require_quotient_square: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub w: MukaiVector,
    pub wall: Wall,
}

/// Per-rank emptiness record of a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationEvidence {
    pub rank_bound: u64,
    /// Ranks at which at least one candidate survived.
    pub nonempty_ranks: Vec<u64>,
    /// Start of the first run of [`SATURATION_RUN`] consecutive empty ranks.
    pub empty_run_start: Option<u64>,
}

pub const SATURATION_RUN: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub window: SearchWindow,
    pub candidates: Vec<Candidate>,
    pub saturation: SaturationEvidence,
}

/// Enumerates classes `w` with `1 <= w.r <= rank_bound` whose wall could
/// destabilize `v` along the ray `β = β₀`:
///
/// * `0 < Im Z(w) < Im Z(v')` at `β₀`, where `v' = ±v` is the shift lying in
///   the heart at `β₀`;
/// * the centre of `W(w)` is on the requested side, outside the band of
///   half-width `√Q` around `v.c/v.r`;
/// * `w² >= -2` (and `(v' - w)² >= -2` in strict mode).
pub fn search_destabilizers(cfg: &K3Config, v: &MukaiVector, window: &SearchWindow) -> Result<SearchOutcome> {
    if !v.r.is_positive() {
        return Err(Error::NonPositiveRank(v.clone()));
    }
    let beta0 = &window.beta0;
    match Side::of(v, beta0) {
        None => return Err(Error::RayOnVerticalWall { beta: beta0.clone(), v: Box::new(v.clone()) }),
        Some(side) if side != window.side => return Err(Error::WrongSide { beta: beta0.clone() }),
        _ => {}
    }
    let v_heart = if expected_shift(v, beta0) == 0 { v.clone() } else { -v };
    let im_bound = rat_int(&v_heart.c) - beta0 * rat_int(&v_heart.r);
    let h2 = cfg.h2_int();
    let q = q_invariant(cfg, v)?;
    let mu_v = mu(v);
    let side_sign = match window.side {
        Side::LeftOfVertical => -1,
        Side::RightOfVertical => 1,
    };

    let mut found: Vec<Candidate> = Vec::new();
    let mut nonempty_ranks = Vec::new();
    for rank in 1..=window.rank_bound {
        let r = Int::from(rank);
        let rr = rat_int(&r);
        let c_lo = floor(&(beta0 * &rr)) + Int::one();
        let c_hi = ceil(&(beta0 * &rr + &im_bound)) - Int::one();
        let mut hit = false;
        let mut c = c_lo;
        while c <= c_hi {
            let denom = &v.r * &c - &v.c * &r;
            if denom.is_zero() {
                c += 1;
                continue;
            }
            // C(s) - μ = k (s - s0)
            let k = Rat::new(v.r.clone(), &h2 * &denom);
            let s0 = (rat_int(&v.s) * &rr + rat_int(&h2) * rat_int(&denom) * &mu_v) / rat_int(&v.r);
            let dir = side_sign * if k.is_positive() { 1 } else { -1 };
            let bound = if q.is_positive() { &q / (&k * &k) } else { Rat::zero() };
            let admissible = |s: &Int| {
                let d = rat_int(s) - &s0;
                let signed_ok = if dir > 0 { d.is_positive() } else { d.is_negative() };
                signed_ok && &d * &d > bound
            };

            let mut lower: Option<Int> = None;
            let mut upper: Option<Int> = None;
            let root = floor_sqrt(&bound);
            if dir > 0 {
                let mut s = floor(&s0) + &root - Int::one();
                while !admissible(&s) {
                    s += 1;
                }
                lower = Some(s);
            } else {
                let mut s = ceil(&s0) - &root + Int::one();
                while !admissible(&s) {
                    s -= 1;
                }
                upper = Some(s);
            }
            if window.require_subobject_square {
                // h2 c² - 2 r s >= -2
                let cap = floor(&Rat::new(&h2 * &c * &c + int(2), int(2) * &r));
                upper = Some(upper.map_or(cap.clone(), |u| u.min(cap)));
            }
            if window.require_quotient_square {
                // t = v' - w with t² >= -2, i.e. t.r t.s <= (h2 t.c² + 2) / 2
                let tr = &v_heart.r - &r;
                let tc = &v_heart.c - &c;
                if !tr.is_zero() {
                    let slack = floor(&Rat::new(&h2 * &tc * &tc + int(2), int(2) * tr.abs()));
                    if tr.is_positive() {
                        let b = &v_heart.s - slack;
                        lower = Some(lower.map_or(b.clone(), |l| l.max(b)));
                    } else {
                        let b = &v_heart.s + slack;
                        upper = Some(upper.map_or(b.clone(), |u| u.min(b)));
                    }
                }
            }
            let (Some(lo), Some(hi)) = (lower, upper) else {
                return Err(Error::UnboundedSearch { rank: rank as i64, c1: c.to_string() });
            };
            let mut s = lo;
            while s <= hi {
                let w = MukaiVector::from_ints(r.clone(), c.clone(), s.clone());
                if !w.is_proportional(v) {
                    if let Some(wall) = numerical_wall(cfg, v, &w)? {
                        if !wall.is_vertical()
                            && side_constraint_check(cfg, v, &wall)?
                            && ray_intersection(&wall, beta0)?.is_some()
                        {
                            found.push(Candidate { w, wall });
                            hit = true;
                        }
                    }
                }
                s += 1;
            }
            c += 1;
        }
        if hit {
            nonempty_ranks.push(rank);
        }
    }

    let candidates = dedup_partners(cfg, &v_heart, beta0, found)?;
    let empty_run_start = first_empty_run(window.rank_bound, &nonempty_ranks);
    Ok(SearchOutcome {
        window: window.clone(),
        candidates,
        saturation: SaturationEvidence { rank_bound: window.rank_bound, nonempty_ranks, empty_run_start },
    })
}

fn first_empty_run(rank_bound: u64, nonempty: &[u64]) -> Option<u64> {
    let mut start = 1;
    for r in 1..=rank_bound {
        if nonempty.contains(&r) {
            start = r + 1;
        } else if r + 1 - start == SATURATION_RUN {
            return Some(start);
        }
    }
    None
}

/// `w` and `v' - w` generate the same wall; keep one. Both have positive rank
/// here, so the tie-break is the larger `μ_Z` just above the wall on `β₀`.
fn dedup_partners(cfg: &K3Config, v_heart: &MukaiVector, beta0: &Rat, found: Vec<Candidate>) -> Result<Vec<Candidate>> {
    let mut kept: Vec<Candidate> = Vec::new();
    for cand in found {
        let partner = v_heart - &cand.w;
        if let Some(pos) = kept.iter().position(|k| k.w == partner) {
            let a2 = ray_intersection(&cand.wall, beta0)?.expect("candidate walls cross the ray") + Rat::one();
            let pt = StabilityPoint::new(beta0.clone(), a2)?;
            let keep_new = match slope_compare(cfg, &pt, &cand.w, &partner)? {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => cand.w < partner,
            };
            if keep_new {
                kept[pos] = cand;
            }
        } else {
            kept.push(cand);
        }
    }
    kept.sort_by(|a, b| a.w.cmp(&b.w));
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s16() -> K3Config {
        K3Config::new(16).unwrap()
    }

    fn v() -> MukaiVector {
        MukaiVector::new(2, 1, 3)
    }

    fn semicircle(center: Rat, radius2: Rat) -> WallShape {
        WallShape::Semicircle { center, radius2 }
    }

    #[test]
    fn q_values() {
        let k = s16();
        assert_eq!(q_invariant(&k, &v()).unwrap(), rat(1, 16));
        assert_eq!(q_invariant(&k, &MukaiVector::new(2, 1, 4)).unwrap(), rat(0, 1));
        assert_eq!(q_invariant(&k, &MukaiVector::new(1, 0, -1)).unwrap(), rat(1, 8));
        assert!(q_invariant(&k, &MukaiVector::new(0, 1, 0)).is_err());
    }

    #[test]
    fn example_walls() {
        let k = s16();
        let wv = numerical_wall(&k, &v(), &MukaiVector::new(2, 1, 4)).unwrap().unwrap();
        assert_eq!(wv.shape, WallShape::Vertical { beta: rat(1, 2) });
        let cases = [((3, 1, 3), (3, 16), (9, 256)), ((1, 1, 8), (13, 16), (9, 256)), ((1, 1, 9), (15, 16), (33, 256))];
        for ((r, c, s), (cn, cd), (rn, rd)) in cases {
            let wall = numerical_wall(&k, &v(), &MukaiVector::new(r, c, s)).unwrap().unwrap();
            assert_eq!(wall.shape, semicircle(rat(cn, cd), rat(rn, rd)));
        }
    }

    #[test]
    fn wall_errors_and_empty() {
        let k = s16();
        assert!(numerical_wall(&k, &v(), &MukaiVector::new(4, 2, 6)).is_err());
        assert!(numerical_wall(&k, &MukaiVector::new(0, 1, 0), &v()).is_err());
        // centre inside the forbidden band: C = 1/2 gives R² = -Q < 0
        let w = MukaiVector::new(0, 1, 8);
        let wall = numerical_wall(&k, &v(), &w).unwrap();
        assert!(wall.is_none());
    }

    #[test]
    fn side_checks() {
        let k = s16();
        let mk = |c: Rat| Wall { shape: semicircle(c, rat(1, 1)), witness: MukaiVector::zero(), holes: vec![] };
        assert!(side_constraint_check(&k, &v(), &mk(rat(3, 16))).unwrap());
        assert!(!side_constraint_check(&k, &v(), &mk(rat(1, 2))).unwrap());
        assert!(side_constraint_check(&k, &v(), &mk(rat(13, 16))).unwrap());
        assert!(!side_constraint_check(&k, &v(), &mk(rat(3, 4))).unwrap());
        let vertical =
            Wall { shape: WallShape::Vertical { beta: rat(1, 2) }, witness: MukaiVector::zero(), holes: vec![] };
        assert!(side_constraint_check(&k, &v(), &vertical).is_err());
    }

    #[test]
    fn ray_intersections() {
        let k = s16();
        let w9 = numerical_wall(&k, &v(), &MukaiVector::new(1, 1, 9)).unwrap().unwrap();
        assert_eq!(ray_intersection(&w9, &rat(2, 3)).unwrap(), Some(rat(1, 18)));
        let wl = numerical_wall(&k, &v(), &MukaiVector::new(3, 1, 3)).unwrap().unwrap();
        assert_eq!(ray_intersection(&wl, &rat(1, 3)).unwrap(), Some(rat(1, 72)));
        assert_eq!(ray_intersection(&wl, &rat(1, 2)).unwrap(), None);
    }

    #[test]
    fn decompose() {
        assert_eq!(decompose_class(&v(), &MukaiVector::new(3, 1, 3)), MukaiVector::new(-1, 0, 0));
        assert_eq!(decompose_class(&v(), &MukaiVector::new(2, 1, 4)), MukaiVector::new(0, 0, -1));
        assert_eq!(decompose_class(&v(), &v()), MukaiVector::zero());
    }

    #[test]
    fn left_search() {
        let k = s16();
        let out = search_destabilizers(&k, &v(), &SearchWindow::new(rat(1, 4), Side::LeftOfVertical, 50)).unwrap();
        let ws: Vec<_> = out.candidates.iter().map(|c| c.w.clone()).collect();
        assert_eq!(ws, vec![MukaiVector::new(3, 1, 3)]);
        assert_eq!(out.saturation.nonempty_ranks, vec![3]);
        assert_eq!(out.saturation.empty_run_start, Some(4));
    }

    #[test]
    fn right_search() {
        let k = s16();
        let out = search_destabilizers(&k, &v(), &SearchWindow::new(rat(3, 4), Side::RightOfVertical, 50)).unwrap();
        let ws: Vec<_> = out.candidates.iter().map(|c| c.w.clone()).collect();
        assert_eq!(ws, vec![MukaiVector::new(1, 1, 8), MukaiVector::new(1, 1, 9)]);
        assert_eq!(out.saturation.empty_run_start, Some(2));
    }

    #[test]
    fn search_edge_cases() {
        let k = s16();
        let out = search_destabilizers(&k, &v(), &SearchWindow::new(rat(1, 4), Side::LeftOfVertical, 0)).unwrap();
        assert!(out.candidates.is_empty());
        assert_eq!(out.saturation.empty_run_start, None);
        let err = search_destabilizers(&k, &v(), &SearchWindow::new(rat(1, 2), Side::LeftOfVertical, 5));
        assert!(matches!(err, Err(Error::RayOnVerticalWall { .. })));
        let err = search_destabilizers(&k, &v(), &SearchWindow::new(rat(3, 4), Side::LeftOfVertical, 5));
        assert!(matches!(err, Err(Error::WrongSide { .. })));
        let mut loose = SearchWindow::new(rat(1, 4), Side::LeftOfVertical, 5);
        loose.require_subobject_square = false;
        assert!(matches!(search_destabilizers(&k, &v(), &loose), Err(Error::UnboundedSearch { .. })));
    }

    #[test]
    fn strict_quotient_mode_keeps_left_wall() {
        // t = (-1,0,0) has t² = 0, so strict mode keeps (3,1,3)
        let k = s16();
        let mut win = SearchWindow::new(rat(1, 4), Side::LeftOfVertical, 20);
        win.require_quotient_square = true;
        let out = search_destabilizers(&k, &v(), &win).unwrap();
        assert_eq!(out.candidates.len(), 1);
    }

    #[test]
    fn holes_on_walls() {
        let k = s16();
        let wl = with_holes(&k, numerical_wall(&k, &v(), &MukaiVector::new(3, 1, 3)).unwrap().unwrap());
        assert_eq!(wl.holes, vec![WallHole { beta: rat(1, 3), alpha2: rat(1, 72), root: MukaiVector::new(3, 1, 3) }]);
        let wr = with_holes(&k, numerical_wall(&k, &v(), &MukaiVector::new(1, 1, 8)).unwrap().unwrap());
        assert_eq!(wr.holes, vec![WallHole { beta: rat(2, 3), alpha2: rat(1, 72), root: MukaiVector::new(3, 2, 11) }]);
        let w9 = with_holes(&k, numerical_wall(&k, &v(), &MukaiVector::new(1, 1, 9)).unwrap().unwrap());
        // the wall of (1,1,9) runs through the hole of (1,1,9) itself
        assert!(w9.holes.contains(&WallHole { beta: rat(1, 1), alpha2: rat(1, 8), root: MukaiVector::new(1, 1, 9) }));
        let wv = with_holes(&k, numerical_wall(&k, &v(), &MukaiVector::new(2, 1, 4)).unwrap().unwrap());
        assert!(wv.holes.is_empty());
    }

    #[test]
    fn meeting_points() {
        let a = semicircle(rat(0, 1), rat(1, 1));
        let b = semicircle(rat(1, 1), rat(1, 1));
        assert_eq!(walls_meet(&a, &b), Some((rat(1, 2), rat(3, 4))));
        let vert = WallShape::Vertical { beta: rat(5, 1) };
        assert_eq!(walls_meet(&a, &vert), None);
    }
}
