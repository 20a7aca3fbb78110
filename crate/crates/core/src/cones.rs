//! `NS(M) ≅ v⊥`: the divisor map `l`, images of walls, and the positive,
//! movable and nef cones.
//!
//! Every ray of `v⊥` meeting the closed positive cone has a positive
//! `e1`-coordinate, so rays are ordered by the slope `t = b/a` of their
//! coordinates `a e1 + b e2`. The positive cone is `t² < e1² / (-e2²)`.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::classify::{kernel_basis, WallKind};
use crate::error::{Error, Result};
use crate::lattice::{cross, mukai_pairing, square, K3Config, MukaiVector};
use crate::plane::{is_valid_point, reduced_charge, StabilityPoint};
use crate::rational::{int, rat, rat_int, rational_sqrt, Int, Rat};

/// `n` with `n·x = <x, u>` for the Euclidean dot product.
fn gram_normal(cfg: &K3Config, u: &MukaiVector) -> MukaiVector {
    MukaiVector::from_ints(-&u.s, cfg.h2_int() * &u.c, -&u.r)
}

/// Primitive integer vector positively proportional to `x`.
pub fn integral_direction(x: &[Rat; 3]) -> MukaiVector {
    let l = x.iter().fold(Int::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<Int> = x.iter().map(|q| (q * rat_int(&l)).to_integer()).collect();
    MukaiVector::from_ints(scaled[0].clone(), scaled[1].clone(), scaled[2].clone()).primitive_part()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSBasis {
    pub e1: MukaiVector,
    pub e2: MukaiVector,
    /// `(e1², e2²)`
    pub gram: (Int, Int),
}

impl NSBasis {
    /// Rational coordinates of `u` against `(e1, e2)`.
    pub fn coords(&self, cfg: &K3Config, u: &MukaiVector) -> (Rat, Rat) {
        (
            Rat::new(mukai_pairing(cfg, u, &self.e1), self.gram.0.clone()),
            Rat::new(mukai_pairing(cfg, u, &self.e2), self.gram.1.clone()),
        )
    }

    pub fn combine(&self, a: &Rat, b: &Rat) -> [Rat; 3] {
        let e = |i: usize, x: &MukaiVector| rat_int(x.entries()[i]);
        std::array::from_fn(|i| a * e(i, &self.e1) + b * e(i, &self.e2))
    }

    pub fn in_span(&self, cfg: &K3Config, u: &MukaiVector) -> bool {
        let (a, b) = self.coords(cfg, u);
        let back = self.combine(&a, &b);
        u.entries().iter().zip(back.iter()).all(|(x, y)| rat_int(x) == *y)
    }

    /// `e1² / (-e2²)`: the positive cone is `t² < ratio`.
    pub fn boundary_ratio(&self) -> Rat {
        Rat::new(self.gram.0.clone(), -self.gram.1.clone())
    }

    pub fn ray_at_slope(&self, t: &Rat) -> NSRay {
        let ambient = integral_direction(&self.combine(&Rat::one(), t));
        NSRay { coords: solve_two(&self.e1, &self.e2, &ambient), ambient }
    }
}

/// Solves `u = a x + b y` for linearly independent `x, y`.
fn solve_two(x: &MukaiVector, y: &MukaiVector, u: &MukaiVector) -> (Rat, Rat) {
    let ex = x.entries();
    let ey = y.entries();
    let eu = u.entries();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = ex[i] * ey[j] - ex[j] * ey[i];
        if !det.is_zero() {
            let a = Rat::new(eu[i] * ey[j] - eu[j] * ey[i], det.clone());
            let b = Rat::new(ex[i] * eu[j] - ex[j] * eu[i], det);
            return (a, b);
        }
    }
    (Rat::zero(), Rat::zero())
}

/// Ray (or line) of `v⊥` with a primitive integral representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSRay {
    pub ambient: MukaiVector,
    pub coords: (Rat, Rat),
}

impl NSRay {
    /// Ray spanned by `u`, keeping its orientation.
    pub fn from_direction(cfg: &K3Config, basis: &NSBasis, u: &MukaiVector) -> Result<NSRay> {
        let ambient = u.primitive_part();
        if ambient.is_zero() || !basis.in_span(cfg, &ambient) {
            return Err(Error::Inconsistent(format!("{u} is not a nonzero class of v-perp")));
        }
        let coords = basis.coords(cfg, &ambient);
        Ok(NSRay { ambient, coords })
    }

    /// Line spanned by `u`, oriented so the first nonzero coordinate is positive.
    pub fn line(cfg: &K3Config, basis: &NSBasis, u: &MukaiVector) -> Result<NSRay> {
        let ray = NSRay::from_direction(cfg, basis, u)?;
        let (a, b) = &ray.coords;
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            Ok(ray.opposite())
        } else {
            Ok(ray)
        }
    }

    pub fn opposite(&self) -> NSRay {
        NSRay { ambient: -&self.ambient, coords: (-&self.coords.0, -&self.coords.1) }
    }

    /// `b / a`; `None` when `a = 0`.
    pub fn slope(&self) -> Option<Rat> {
        (!self.coords.0.is_zero()).then(|| &self.coords.1 / &self.coords.0)
    }

    pub fn square(&self, cfg: &K3Config) -> Int {
        square(cfg, &self.ambient)
    }

    pub fn same_line(&self, other: &NSRay) -> bool {
        self.ambient.is_proportional(&other.ambient)
    }

    /// Coordinates scaled to coprime integers with the same orientation.
    pub fn integral_coords(&self) -> (Int, Int) {
        let (a, b) = &self.coords;
        let l = a.denom().lcm(b.denom());
        let (x, y) = ((a * rat_int(&l)).to_integer(), (b * rat_int(&l)).to_integer());
        let g = x.gcd(&y);
        if g.is_zero() {
            (x, y)
        } else {
            (x / &g, y / g)
        }
    }
}

/// Orthogonal basis of `v⊥` with `e1² > 0 > e2²`. `e1` lies in the component
/// of the positive cone containing the image of `l`.
pub fn orthogonal_basis(cfg: &K3Config, v: &MukaiVector) -> Result<NSBasis> {
    let v2 = square(cfg, v);
    if !v2.is_positive() {
        return Err(Error::NonPositiveSquare(v2.to_string()));
    }
    let nv = gram_normal(cfg, v);
    let mut e1 = if !v.r.is_zero() {
        MukaiVector::from_ints(Int::zero(), v.r.clone(), cfg.h2_int() * &v.c).primitive_part()
    } else {
        positive_class_in(cfg, &nv.primitive_part())
    };
    let probe = StabilityPoint::new(Rat::zero(), rat(2, 1))?;
    if mukai_pairing(cfg, &l_vector(cfg, &probe, v), &e1).is_negative() {
        e1 = -&e1;
    }
    let mut e2 = cross(&nv, &gram_normal(cfg, &e1)).primitive_part();
    if e2.entries().iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        e2 = -&e2;
    }
    let gram = (square(cfg, &e1), square(cfg, &e2));
    Ok(NSBasis { e1, e2, gram })
}

/// First class of positive square in `n⊥`, scanning growing boxes.
fn positive_class_in(cfg: &K3Config, n: &MukaiVector) -> MukaiVector {
    let [k1, k2] = kernel_basis(n);
    let mut bound = 1i64;
    loop {
        for x in -bound..=bound {
            for y in -bound..=bound {
                let u = &k1.scale(&int(x)) + &k2.scale(&int(y));
                if square(cfg, &u).is_positive() {
                    return u.primitive_part();
                }
            }
        }
        bound += 1;
    }
}

/// `l ∝ (I', βI' - Re, (H²/2)((β² - α²)I' - 2βRe))` with `Re = Re Z(v)`,
/// `I' = Im Z(v)/α`.
fn l_vector(cfg: &K3Config, pt: &StabilityPoint, v: &MukaiVector) -> MukaiVector {
    let z = reduced_charge(cfg, pt, v);
    let (re, ip) = (&z.re, &z.im_over_alpha);
    let beta = &pt.beta;
    let half_h2 = cfg.h2_rat() / rat(2, 1);
    let third = half_h2 * ((beta * beta - &pt.alpha2) * ip - rat(2, 1) * beta * re);
    integral_direction(&[ip.clone(), beta * ip - re, third])
}

/// The divisor ray `l(σ_{α,β})` in `v⊥`.
pub fn compute_l(cfg: &K3Config, basis: &NSBasis, pt: &StabilityPoint, v: &MukaiVector) -> Result<NSRay> {
    if !is_valid_point(cfg, pt) {
        return Err(Error::InvalidStabilityPoint(pt.to_string()));
    }
    NSRay::from_direction(cfg, basis, &l_vector(cfg, pt, v))
}

/// The line `v⊥ ∩ w⊥`.
pub fn wall_image(cfg: &K3Config, basis: &NSBasis, v: &MukaiVector, w: &MukaiVector) -> Result<NSRay> {
    let direction = cross(&gram_normal(cfg, v), &gram_normal(cfg, w));
    if direction.is_zero() {
        return Err(Error::Proportional { v: Box::new(v.clone()), w: Box::new(w.clone()) });
    }
    NSRay::line(cfg, basis, &direction)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reflected {
    Integral(MukaiVector),
    Rational([Rat; 3]),
}

impl Reflected {
    pub fn direction(&self) -> MukaiVector {
        match self {
            Reflected::Integral(u) => u.clone(),
            Reflected::Rational(x) => integral_direction(x),
        }
    }
}

/// `u - 2(<u,d>/<d,d>) d`.
pub fn reflect(cfg: &K3Config, d: &MukaiVector, u: &MukaiVector) -> Result<Reflected> {
    let d2 = square(cfg, d);
    if d2.is_zero() {
        return Err(Error::IsotropicReflection(d.clone()));
    }
    let k = Rat::new(int(2) * mukai_pairing(cfg, u, d), d2);
    if k.is_integer() {
        return Ok(Reflected::Integral(u - &d.scale(&k.to_integer())));
    }
    let (ue, de) = (u.entries(), d.entries());
    Ok(Reflected::Rational(std::array::from_fn(|i| rat_int(ue[i]) - &k * rat_int(de[i]))))
}

/// Position of a ray of the closed positive cone, by slope `t = b/a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Position {
    Rational(Rat),
    /// `t = sign·sqrt(ratio)` with `ratio` not a rational square.
    Sqrt {
        sign: i8,
        ratio: Rat,
    },
}

fn cmp_rat_sqrt(x: &Rat, sign: i8, ratio: &Rat) -> Ordering {
    if sign > 0 {
        if x.is_negative() {
            Ordering::Less
        } else {
            (x * x).cmp(ratio)
        }
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        ratio.cmp(&(x * x))
    }
}

impl PartialOrd for Position {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Position {
    fn cmp(&self, other: &Self) -> Ordering {
        use Position::*;
        match (self, other) {
            (Rational(x), Rational(y)) => x.cmp(y),
            (Rational(x), Sqrt { sign, ratio }) => cmp_rat_sqrt(x, *sign, ratio),
            (Sqrt { sign, ratio }, Rational(y)) => cmp_rat_sqrt(y, *sign, ratio).reverse(),
            (Sqrt { sign: s1, ratio: r1 }, Sqrt { sign: s2, ratio: r2 }) => {
                s1.cmp(s2).then_with(|| if *s1 > 0 { r1.cmp(r2) } else { r2.cmp(r1) })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeEdge {
    Ray(NSRay),
    /// Irrational boundary ray `e1 + sign·sqrt(ratio)·e2` of the positive cone.
    PositiveBoundary {
        sign: i8,
        ratio: Rat,
    },
}

impl ConeEdge {
    pub fn position(&self) -> Position {
        match self {
            ConeEdge::Ray(r) => Position::Rational(r.slope().expect("cone rays have positive e1-coordinate")),
            ConeEdge::PositiveBoundary { sign, ratio } => Position::Sqrt { sign: *sign, ratio: ratio.clone() },
        }
    }

    pub fn ray(&self) -> Option<&NSRay> {
        match self {
            ConeEdge::Ray(r) => Some(r),
            ConeEdge::PositiveBoundary { .. } => None,
        }
    }
}

fn positive_boundary(basis: &NSBasis, sign: i8) -> ConeEdge {
    let ratio = basis.boundary_ratio();
    match rational_sqrt(&ratio) {
        Some(m) => ConeEdge::Ray(basis.ray_at_slope(&(m * Rat::from_integer(int(sign as i64))))),
        None => ConeEdge::PositiveBoundary { sign, ratio },
    }
}

/// A classified wall as seen by the cone assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberWall {
    pub name: String,
    pub witness: MukaiVector,
    pub kind: WallKind,
    /// Model on the far side of the wall, seen from the Gieseker chamber.
    pub model: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageRole {
    MovableBoundary,
    ChamberWall,
    OutsideMovable,
    Ignored,
}

impl ImageRole {
    pub fn label(&self) -> &'static str {
        match self {
            ImageRole::MovableBoundary => "movable-boundary",
            ImageRole::ChamberWall => "chamber-wall",
            ImageRole::OutsideMovable => "outside-movable",
            ImageRole::Ignored => "ignored",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallImage {
    pub wall: String,
    pub kind: WallKind,
    pub image: NSRay,
    /// Image after reflection across the adjacent divisorial line.
    pub reflected: Option<NSRay>,
    pub role: ImageRole,
}

impl WallImage {
    pub fn effective(&self) -> &NSRay {
        self.reflected.as_ref().unwrap_or(&self.image)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub label: String,
    pub lower: ConeEdge,
    pub upper: ConeEdge,
    pub model: String,
    pub contains_reference: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeChart {
    pub basis: NSBasis,
    pub reference: NSRay,
    /// `[lower, upper]` by slope.
    pub pos: [ConeEdge; 2],
    pub mov: [ConeEdge; 2],
    pub nef: [ConeEdge; 2],
    pub chambers: Vec<Chamber>,
    pub images: Vec<WallImage>,
}

fn chamber_label(i: usize) -> String {
    let mut n = i;
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (n % 26) as u8) as char);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    format!("({s})")
}

/// Positive, movable and nef cones together with the chamber decomposition
/// of the movable cone. `reference` is `l` of a point in the Gieseker chamber.
pub fn assemble_cones(
    cfg: &K3Config,
    v: &MukaiVector,
    basis: &NSBasis,
    reference: &NSRay,
    walls: &[ChamberWall],
    gieseker_model: &str,
) -> Result<ConeChart> {
    let t_ref = match reference.slope() {
        Some(t) if reference.coords.0.is_positive() => Position::Rational(t),
        _ => return Err(Error::Inconsistent(format!("reference ray {} is not positive", reference.ambient))),
    };
    let pos = [positive_boundary(basis, -1), positive_boundary(basis, 1)];
    let within_pos = |p: &Position| *p >= pos[0].position() && *p <= pos[1].position();

    let mut images = Vec::new();
    for w in walls {
        let image = wall_image(cfg, basis, v, &w.witness)?;
        let role = if w.kind == WallKind::FakeOrUnknown { ImageRole::Ignored } else { ImageRole::OutsideMovable };
        if role != ImageRole::Ignored && (image.square(cfg).is_negative() || !image.coords.0.is_positive()) {
            return Err(Error::ImageOutsidePositiveCone(image.ambient));
        }
        images.push(WallImage { wall: w.name.clone(), kind: w.kind, image, reflected: None, role });
    }

    // nearest divisorial lines on either side of the reference
    let mut lower: (ConeEdge, Option<usize>) = (pos[0].clone(), None);
    let mut upper: (ConeEdge, Option<usize>) = (pos[1].clone(), None);
    for (i, img) in images.iter().enumerate() {
        if !matches!(img.kind, WallKind::Divisorial(_)) {
            continue;
        }
        let p = ConeEdge::Ray(img.image.clone()).position();
        match p.cmp(&t_ref) {
            Ordering::Equal => {
                return Err(Error::Inconsistent(format!("reference ray lies on the image of {}", img.wall)))
            }
            Ordering::Less if p >= lower.0.position() => lower = (ConeEdge::Ray(img.image.clone()), Some(i)),
            Ordering::Greater if p <= upper.0.position() => upper = (ConeEdge::Ray(img.image.clone()), Some(i)),
            _ => {}
        }
    }
    for i in [lower.1, upper.1].into_iter().flatten() {
        images[i].role = ImageRole::MovableBoundary;
    }
    let mov = [lower.0.clone(), upper.0.clone()];
    let inside = |p: &Position| *p > mov[0].position() && *p < mov[1].position();

    let divisorial_line = |j: Option<usize>| j.map(|j| images[j].image.clone());
    let (lower_line, upper_line) = (divisorial_line(lower.1), divisorial_line(upper.1));
    for img in images.iter_mut().filter(|i| i.kind == WallKind::Flopping) {
        let p = ConeEdge::Ray(img.image.clone()).position();
        if inside(&p) {
            img.role = ImageRole::ChamberWall;
            continue;
        }
        let across = if p < mov[0].position() {
            lower_line.as_ref()
        } else if p > mov[1].position() {
            upper_line.as_ref()
        } else {
            None
        };
        if let Some(line) = across {
            let d = cross(&gram_normal(cfg, v), &gram_normal(cfg, &line.ambient)).primitive_part();
            let r = NSRay::line(cfg, basis, &reflect(cfg, &d, &img.image.ambient)?.direction())?;
            let q = ConeEdge::Ray(r.clone()).position();
            if within_pos(&q) && inside(&q) {
                img.role = ImageRole::ChamberWall;
            }
            img.reflected = Some(r);
        }
    }

    // distinct interior lines, in slope order, with the walls landing on each
    let mut cuts: Vec<(NSRay, Vec<usize>)> = Vec::new();
    for (i, img) in images.iter().enumerate().filter(|(_, i)| i.role == ImageRole::ChamberWall) {
        let ray = img.effective();
        match cuts.iter_mut().find(|(r, _)| r.same_line(ray)) {
            Some((_, ids)) => ids.push(i),
            None => cuts.push((ray.clone(), vec![i])),
        }
    }
    cuts.sort_by_key(|(r, _)| ConeEdge::Ray(r.clone()).position());

    let mut edges = vec![mov[0].clone()];
    edges.extend(cuts.iter().map(|(r, _)| ConeEdge::Ray(r.clone())));
    edges.push(mov[1].clone());
    let mut chambers: Vec<Chamber> = edges
        .windows(2)
        .enumerate()
        .map(|(i, e)| Chamber {
            label: chamber_label(i),
            lower: e[0].clone(),
            upper: e[1].clone(),
            model: String::new(),
            contains_reference: e[0].position() < t_ref && t_ref < e[1].position(),
        })
        .collect();
    let g = chambers
        .iter()
        .position(|c| c.contains_reference)
        .ok_or_else(|| Error::Inconsistent("reference ray lies on a chamber wall".into()))?;

    let model_at = |cut: usize| -> String {
        cuts[cut]
            .1
            .iter()
            .find_map(|&i| walls[i].model.clone())
            .unwrap_or_else(|| format!("unidentified model across {}", walls[cuts[cut].1[0]].name))
    };
    chambers[g].model = gieseker_model.to_string();
    for (i, chamber) in chambers.iter_mut().enumerate().skip(g + 1) {
        chamber.model = model_at(i - 1);
    }
    for i in (0..g).rev() {
        chambers[i].model = model_at(i);
    }
    let nef = [chambers[g].lower.clone(), chambers[g].upper.clone()];

    let chart = ConeChart { basis: basis.clone(), reference: reference.clone(), pos, mov, nef, chambers, images };
    check_nesting(cfg, &chart)?;
    Ok(chart)
}

/// `Nef ⊆ Mov ⊆ closed Pos`, by slope order and by non-negative pairing of
/// nef generators with rational positive-cone generators.
pub fn check_nesting(cfg: &K3Config, chart: &ConeChart) -> Result<()> {
    let p = |e: &ConeEdge| e.position();
    let ordered = p(&chart.pos[0]) <= p(&chart.mov[0])
        && p(&chart.mov[0]) <= p(&chart.nef[0])
        && p(&chart.nef[0]) < p(&chart.nef[1])
        && p(&chart.nef[1]) <= p(&chart.mov[1])
        && p(&chart.mov[1]) <= p(&chart.pos[1]);
    if !ordered {
        return Err(Error::Inconsistent("cones are not nested".into()));
    }
    for n in chart.nef.iter().filter_map(ConeEdge::ray) {
        for q in chart.pos.iter().filter_map(ConeEdge::ray) {
            if mukai_pairing(cfg, &n.ambient, &q.ambient).is_negative() {
                return Err(Error::Inconsistent(format!("nef ray {} pairs negatively with {}", n.ambient, q.ambient)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::DivisorialKind;

    fn k() -> K3Config {
        K3Config::new(16).unwrap()
    }

    fn v() -> MukaiVector {
        MukaiVector::new(2, 1, 3)
    }

    fn basis() -> NSBasis {
        orthogonal_basis(&k(), &v()).unwrap()
    }

    fn example_walls() -> Vec<ChamberWall> {
        let w = |name: &str, witness, kind, model: Option<&str>| ChamberWall {
            name: name.into(),
            witness,
            kind,
            model: model.map(str::to_string),
        };
        vec![
            w("W1", MukaiVector::new(2, 1, 4), WallKind::Divisorial(DivisorialKind::LiGiesekerUhlenbeck), None),
            w("W2", MukaiVector::new(3, 1, 3), WallKind::Flopping, Some("M_S[5,2,6]")),
            w("W3", MukaiVector::new(1, 1, 8), WallKind::Flopping, Some("M_S[5,2,6]")),
        ]
    }

    fn chart() -> ConeChart {
        let b = basis();
        let pt = StabilityPoint::new(rat(0, 1), rat(1, 1)).unwrap();
        let reference = compute_l(&k(), &b, &pt, &v()).unwrap();
        assemble_cones(&k(), &v(), &b, &reference, &example_walls(), "M_S[2,1,3]").unwrap()
    }

    fn ray(a: i64, b: i64) -> ConeEdge {
        ConeEdge::Ray(basis().ray_at_slope(&rat(b, a)))
    }

    #[test]
    fn basis_for_genus_nine() {
        let b = basis();
        assert_eq!(b.e1, MukaiVector::new(0, -1, -8));
        assert_eq!(b.e2, MukaiVector::new(2, 1, 5));
        assert_eq!(b.gram, (int(16), int(-4)));
        assert_eq!(mukai_pairing(&k(), &b.e1, &v()), int(0));
    }

    #[test]
    fn basis_without_rank() {
        let k4 = K3Config::new(4).unwrap();
        let v0 = MukaiVector::new(0, 1, 0);
        let b = orthogonal_basis(&k4, &v0).unwrap();
        assert!(b.gram.0.is_positive() && b.gram.1.is_negative());
        assert_eq!(mukai_pairing(&k4, &b.e1, &v0), int(0));
        assert_eq!(mukai_pairing(&k4, &b.e2, &v0), int(0));
        assert_eq!(mukai_pairing(&k4, &b.e1, &b.e2), int(0));
        assert!(orthogonal_basis(&k(), &MukaiVector::new(2, 1, 4)).is_err());
    }

    #[test]
    fn images_of_example_walls() {
        let b = basis();
        let img = |w| wall_image(&k(), &b, &v(), &w).unwrap();
        assert!(img(MukaiVector::new(2, 1, 4)).same_line(&NSRay::line(&k(), &b, &b.e1).unwrap()));
        let wl = img(MukaiVector::new(3, 1, 3));
        assert_eq!(wl.ambient, MukaiVector::new(16, 3, 0));
        assert_eq!(wl.coords, (rat(5, 1), rat(8, 1)));
        let wr = img(MukaiVector::new(1, 1, 8));
        assert!(wr.ambient.is_proportional(&MukaiVector::new(16, 13, 80)));
        assert!(wall_image(&k(), &b, &v(), &MukaiVector::new(4, 2, 6)).is_err());
    }

    #[test]
    fn l_at_example_points() {
        let b = basis();
        let l0 = compute_l(&k(), &b, &StabilityPoint::new(rat(0, 1), rat(1, 1)).unwrap(), &v()).unwrap();
        assert_eq!(l0.ambient, MukaiVector::new(16, -13, -128));
        assert_eq!(l0.coords, (rat(21, 1), rat(8, 1)));
        let l1 = compute_l(&k(), &b, &StabilityPoint::new(rat(1, 4), rat(1, 1)).unwrap(), &v()).unwrap();
        assert_eq!(l1.ambient, MukaiVector::new(4, -7, -62));
        assert_eq!(l1.integral_coords(), (int(9), int(2)));
        let bad = StabilityPoint::new(rat(0, 1), rat(1, 8)).unwrap();
        assert!(compute_l(&k(), &b, &bad, &v()).is_err());
    }

    #[test]
    fn reflection_examples() {
        let d = MukaiVector::new(2, 1, 5);
        let u = MukaiVector::new(16, 13, 80);
        assert_eq!(reflect(&k(), &d, &u).unwrap(), Reflected::Integral(MukaiVector::new(-16, -3, 0)));
        assert_eq!(reflect(&k(), &d, &d).unwrap(), Reflected::Integral(-&d));
        assert!(reflect(&k(), &MukaiVector::new(2, 1, 4), &u).is_err());
        // 2<u,d>/d² = 5/2 for u = (1,0,0)
        match reflect(&k(), &d, &MukaiVector::new(1, 0, 0)).unwrap() {
            Reflected::Rational(x) => assert_eq!(x, [rat(-4, 1), rat(-5, 2), rat(-25, 2)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn positions_order() {
        let s = |sign, r| Position::Sqrt { sign, ratio: rat(r, 1) };
        let q = |x| Position::Rational(rat(x, 1));
        assert!(q(1) < s(1, 2) && q(2) > s(1, 2) && q(-1) > s(-1, 2) && q(-2) < s(-1, 2));
        assert!(s(-1, 3) < s(-1, 2) && s(-1, 2) < s(1, 2) && s(1, 2) < s(1, 3));
    }

    #[test]
    fn genus_nine_chart() {
        let c = chart();
        assert_eq!(c.pos, [ray(1, -2), ray(1, 2)]);
        for e in &c.pos {
            assert_eq!(e.ray().unwrap().square(&k()), int(0));
        }
        assert_eq!(c.mov, [ray(1, 0), ray(1, 2)]);
        assert_eq!(c.nef, [ray(1, 0), ray(5, 8)]);
        assert_eq!(c.chambers.len(), 2);
        assert_eq!(c.chambers[0].model, "M_S[2,1,3]");
        assert!(c.chambers[0].contains_reference);
        assert_eq!(c.chambers[1].label, "(b)");
        assert_eq!(c.chambers[1].model, "M_S[5,2,6]");
        let right = &c.images[2];
        assert_eq!(right.role, ImageRole::ChamberWall);
        assert_eq!(right.reflected.as_ref().unwrap().ambient, MukaiVector::new(16, 3, 0));
        assert_eq!(c.images[0].role, ImageRole::MovableBoundary);
    }

    #[test]
    fn no_walls_gives_positive_cone() {
        let b = basis();
        let pt = StabilityPoint::new(rat(0, 1), rat(1, 1)).unwrap();
        let reference = compute_l(&k(), &b, &pt, &v()).unwrap();
        let c = assemble_cones(&k(), &v(), &b, &reference, &[], "M").unwrap();
        assert_eq!(c.mov, c.pos);
        assert_eq!(c.nef, c.pos);
        assert_eq!(c.chambers.len(), 1);
    }

    #[test]
    fn irrational_boundary() {
        // v = (1,0,-2) on h2 = 2: v⊥ has gram (2, -4), so the boundary slope is sqrt(1/2)
        let k2 = K3Config::new(2).unwrap();
        let vv = MukaiVector::new(1, 0, -2);
        let b = orthogonal_basis(&k2, &vv).unwrap();
        let reference = compute_l(&k2, &b, &StabilityPoint::new(rat(-1, 1), rat(4, 1)).unwrap(), &vv).unwrap();
        let c = assemble_cones(&k2, &vv, &b, &reference, &[], "M").unwrap();
        assert_eq!(b.gram, (int(2), int(-4)));
        assert!(matches!(c.pos[0], ConeEdge::PositiveBoundary { sign: -1, .. }));
        assert_eq!(c.chambers.len(), 1);
    }

    #[test]
    fn chamber_labels() {
        assert_eq!(chamber_label(0), "(a)");
        assert_eq!(chamber_label(25), "(z)");
        assert_eq!(chamber_label(26), "(aa)");
    }
}
