//! Central charges `Z_{α,β}` on the `(β, α²)` upper half-plane.
//!
//! Points store `α²` rather than `α`, so everything that enters a
//! comparison stays rational: `Re Z` is rational and `Im Z = α · im_over_alpha`
//! with `im_over_alpha` rational.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{square, K3Config, MukaiVector};
use crate::rational::{int, rat, rat_int, Int, Rat};

/// Default bound on the multiplier `t` in [`find_holes_on_ray`].
pub const DEFAULT_HOLE_SEARCH_LIMIT: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StabilityPoint {
    pub beta: Rat,
    pub alpha2: Rat,
}

impl StabilityPoint {
    pub fn new(beta: Rat, alpha2: Rat) -> Result<Self> {
        if !alpha2.is_positive() {
            return Err(Error::NonPositiveAlpha2(alpha2));
        }
        Ok(StabilityPoint { beta, alpha2 })
    }
}

impl fmt::Display for StabilityPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta={}, alpha^2={})", self.beta, self.alpha2)
    }
}

/// `Z = re + i·α·im_over_alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCharge {
    pub re: Rat,
    pub im_over_alpha: Rat,
}

impl Add for &ReducedCharge {
    type Output = ReducedCharge;
    fn add(self, o: &ReducedCharge) -> ReducedCharge {
        ReducedCharge { re: &self.re + &o.re, im_over_alpha: &self.im_over_alpha + &o.im_over_alpha }
    }
}

/// `Re Z = -s + H²βc + (H²/2)(α² - β²) r`, `Im Z / α = H²(c - βr)`.
pub fn reduced_charge(cfg: &K3Config, pt: &StabilityPoint, u: &MukaiVector) -> ReducedCharge {
    let h2 = cfg.h2_rat();
    let (r, c, s) = (rat_int(&u.r), rat_int(&u.c), rat_int(&u.s));
    let beta = &pt.beta;
    let re = -s + &h2 * beta * &c + &h2 / rat(2, 1) * (&pt.alpha2 - beta * beta) * &r;
    let im_over_alpha = &h2 * (c - beta * r);
    ReducedCharge { re, im_over_alpha }
}

/// `μ_β(u) = c/r - β`; torsion classes have infinite slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    Infinite,
}

pub fn slope_mu_beta(u: &MukaiVector, beta: &Rat) -> Slope {
    if u.r.is_zero() {
        Slope::Infinite
    } else {
        Slope::Finite(Rat::new(u.c.clone(), u.r.clone()) - beta)
    }
}

/// Compares `μ_Z(u) = -Re Z(u) / Im Z(u)` with `μ_Z(w)`. Both classes must
/// have `Im Z > 0` at `pt`.
pub fn slope_compare(cfg: &K3Config, pt: &StabilityPoint, u: &MukaiVector, w: &MukaiVector) -> Result<Ordering> {
    let zu = reduced_charge(cfg, pt, u);
    let zw = reduced_charge(cfg, pt, w);
    if !zu.im_over_alpha.is_positive() {
        return Err(Error::NotInHeart(u.clone()));
    }
    if !zw.im_over_alpha.is_positive() {
        return Err(Error::NotInHeart(w.clone()));
    }
    // -re_u / im_u  vs  -re_w / im_w, with positive denominators
    let lhs = -&zu.re * &zw.im_over_alpha;
    let rhs = -&zw.re * &zu.im_over_alpha;
    Ok(lhs.cmp(&rhs))
}

/// Shift `k` (mod 2) with `v[k]` having `Im Z > 0` at `β`: 0 when
/// `c - βr > 0`, otherwise 1.
pub fn expected_shift(v: &MukaiVector, beta: &Rat) -> u8 {
    let numerator = rat_int(&v.c) - beta * rat_int(&v.r);
    if numerator.is_positive() {
        0
    } else {
        1
    }
}

/// A root `δ` (`δ² = -2`, `δ.r > 0`, `μ_β(δ) = 0`) on a vertical ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleReport {
    pub delta: MukaiVector,
    /// Largest `α²` with `Re Z(δ) <= 0`; `None` if `Re Z(δ) > 0` for all `α² > 0`.
    pub alpha2_threshold: Option<Rat>,
}

/// `α²` at which `Re Z_{α,β}(δ)` vanishes (may be non-positive).
pub fn root_vanishing_alpha2(cfg: &K3Config, beta: &Rat, delta: &MukaiVector) -> Rat {
    let h2 = cfg.h2_rat();
    let (r, c, s) = (rat_int(&delta.r), rat_int(&delta.c), rat_int(&delta.s));
    beta * beta + rat(2, 1) * (s - &h2 * beta * c) / (h2 * r)
}

/// Roots on the ray `{β = p/q}`, parametrised as `δ = (qt, pt, (H²p²t² + 2)/(2qt))`
/// for `t = 1..=search_limit`.
pub fn find_holes_on_ray(cfg: &K3Config, beta: &Rat, search_limit: u64) -> Vec<HoleReport> {
    let p = beta.numer().clone();
    let q = beta.denom().clone();
    let h2 = cfg.h2_int();
    let mut holes = Vec::new();
    for t in 1..=search_limit {
        let t = Int::from(t);
        let num = &h2 * &p * &p * &t * &t + int(2);
        let den = int(2) * &q * &t;
        let (s, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            continue;
        }
        let delta = MukaiVector::from_ints(&q * &t, &p * &t, s);
        debug_assert_eq!(square(cfg, &delta), int(-2));
        let a2 = root_vanishing_alpha2(cfg, beta, &delta);
        holes.push(HoleReport { delta, alpha2_threshold: a2.is_positive().then_some(a2) });
    }
    holes
}

/// Whether `σ_{α,β}` is a stability condition: every root with `μ_β = 0`
/// must have `Re Z > 0`. Points with `α² H² > 2` are always valid.
pub fn is_valid_point(cfg: &K3Config, pt: &StabilityPoint) -> bool {
    if &pt.alpha2 * cfg.h2_rat() > rat(2, 1) {
        return true;
    }
    find_holes_on_ray(cfg, &pt.beta, DEFAULT_HOLE_SEARCH_LIMIT)
        .iter()
        .all(|h| h.alpha2_threshold.as_ref().is_none_or(|a| a < &pt.alpha2))
}
