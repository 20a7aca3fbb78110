//! The rank-two lattice `H_W` attached to a wall and the lattice-level
//! classification of the wall.
//!
//! `H_W` is the saturation of `Z v + Z w` in the Mukai lattice. A wall is
//! classified by searching `H_W` for isotropic and spherical classes with
//! prescribed pairing against `v`:
//!
//! | class           | pairing with `v`       | type                    |
//! |-----------------|------------------------|-------------------------|
//! | isotropic       | 1                      | divisorial, Hilbert–Chow |
//! | isotropic       | 2                      | divisorial, LGU          |
//! | spherical       | 0                      | divisorial, Brill–Noether|
//! | spherical       | `0 < <s,v> <= v²/2`    | flopping                 |

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{cross, mukai_pairing, square, K3Config, MukaiVector};
use crate::rational::{exact_isqrt, int, Int};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into `[0, pivot)`, zero rows dropped.
pub fn hermite_normal_form(rows: &[MukaiVector]) -> Vec<MukaiVector> {
    let mut m: Vec<[Int; 3]> = rows.iter().map(|u| [u.r.clone(), u.c.clone(), u.s.clone()]).collect();
    let mut row = 0;
    for col in 0..3 {
        if row >= m.len() {
            break;
        }
        for i in row + 1..m.len() {
            while !m[i][col].is_zero() {
                let q = m[row][col].div_floor(&m[i][col]);
                let sub: [Int; 3] = std::array::from_fn(|j| &m[row][j] - &q * &m[i][j]);
                m[row] = sub;
                m.swap(row, i);
            }
        }
        if m[row][col].is_zero() {
            continue;
        }
        if m[row][col].is_negative() {
            m[row] = std::array::from_fn(|j| -&m[row][j]);
        }
        for i in 0..row {
            let q = m[i][col].div_floor(&m[row][col]);
            let sub: [Int; 3] = std::array::from_fn(|j| &m[i][j] - &q * &m[row][j]);
            m[i] = sub;
        }
        row += 1;
    }
    m.truncate(row);
    m.into_iter().map(|[r, c, s]| MukaiVector::from_ints(r, c, s)).collect()
}

/// Z-basis of `{x : n·x = 0}` for a primitive `n` (Euclidean dot product).
pub(crate) fn kernel_basis(n: &MukaiVector) -> [MukaiVector; 2] {
    let (a, b, c) = (&n.r, &n.c, &n.s);
    if a.is_zero() && b.is_zero() {
        return [MukaiVector::new(1, 0, 0), MukaiVector::new(0, 1, 0)];
    }
    let eg = a.extended_gcd(b);
    let g = eg.gcd;
    let k1 = MukaiVector::from_ints(b / &g, -(a / &g), Int::zero());
    // cross(k1, k2) = n, so {k1, k2} spans the whole kernel
    let k2 = MukaiVector::from_ints(&eg.x * c, &eg.y * c, -g);
    [k1, k2]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallLattice {
    pub basis: [MukaiVector; 2],
    pub gram: [[Int; 2]; 2],
    pub v_coords: [Int; 2],
}

impl WallLattice {
    pub fn det(&self) -> Int {
        &self.gram[0][0] * &self.gram[1][1] - &self.gram[0][1] * &self.gram[1][0]
    }

    /// Coordinates of `u` in the basis, if `u` lies in the lattice.
    pub fn coords(&self, u: &MukaiVector) -> Option<[Int; 2]> {
        let [b1, b2] = &self.basis;
        let (x, y, e) = (b1.entries(), b2.entries(), u.entries());
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = x[i] * y[j] - x[j] * y[i];
            if det.is_zero() {
                continue;
            }
            let (p, rp) = (e[i] * y[j] - e[j] * y[i]).div_rem(&det);
            let (q, rq) = (x[i] * e[j] - x[j] * e[i]).div_rem(&det);
            if !rp.is_zero() || !rq.is_zero() || self.element(&p, &q) != *u {
                return None;
            }
            return Some([p, q]);
        }
        None
    }

    /// The same lattice with basis `(a b1 + b b2, c b1 + d b2)`; `None`
    /// unless `ad - bc = ±1`.
    pub fn rebased(&self, cfg: &K3Config, m: [[i64; 2]; 2]) -> Option<WallLattice> {
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() != 1 {
            return None;
        }
        let basis = m.map(|[a, b]| self.element(&int(a), &int(b)));
        let gram = std::array::from_fn(|i| std::array::from_fn(|j| mukai_pairing(cfg, &basis[i], &basis[j])));
        let mut out = WallLattice { basis, gram, v_coords: [Int::zero(), Int::zero()] };
        let v = self.element(&self.v_coords[0], &self.v_coords[1]);
        out.v_coords = out.coords(&v)?;
        Some(out)
    }

    pub fn contains(&self, u: &MukaiVector) -> bool {
        self.coords(u).is_some()
    }

    pub fn element(&self, x: &Int, y: &Int) -> MukaiVector {
        &self.basis[0].scale(x) + &self.basis[1].scale(y)
    }

    /// Same sublattice of the Mukai lattice, regardless of basis.
    pub fn same_lattice(&self, other: &WallLattice) -> bool {
        self.basis.iter().all(|b| other.contains(b)) && other.basis.iter().all(|b| self.contains(b))
    }
}

/// Saturation of `Z v + Z w` with its canonical (HNF) basis.
pub fn wall_lattice(cfg: &K3Config, v: &MukaiVector, w: &MukaiVector) -> Result<WallLattice> {
    let normal = cross(v, w);
    if normal.is_zero() {
        return Err(Error::Proportional { v: Box::new(v.clone()), w: Box::new(w.clone()) });
    }
    let kernel = kernel_basis(&normal.primitive_part());
    let hnf = hermite_normal_form(&kernel);
    let basis: [MukaiVector; 2] = [hnf[0].clone(), hnf[1].clone()];
    let gram = std::array::from_fn(|i| std::array::from_fn(|j| mukai_pairing(cfg, &basis[i], &basis[j])));
    let mut lattice = WallLattice { basis, gram, v_coords: [Int::zero(), Int::zero()] };
    lattice.v_coords = lattice.coords(v).ok_or_else(|| Error::Inconsistent(format!("{v} not in its wall lattice")))?;
    Ok(lattice)
}

/// Solutions of `u² = n`, `<u, v> = c` in a wall lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormSolutions {
    Finite(Vec<MukaiVector>),
    /// Every `base + k·direction` is a solution.
    InfiniteFamily {
        base: MukaiVector,
        direction: MukaiVector,
    },
}

impl NormSolutions {
    pub fn is_empty(&self) -> bool {
        matches!(self, NormSolutions::Finite(v) if v.is_empty())
    }

    /// The listed solutions, or the base point of an infinite family.
    pub fn representatives(&self) -> Vec<MukaiVector> {
        match self {
            NormSolutions::Finite(v) => v.clone(),
            NormSolutions::InfiniteFamily { base, .. } => vec![base.clone()],
        }
    }
}

/// Solves `u² = n`, `<u, v> = c` for `u` in `lattice`. The linear condition
/// cuts out `u0 + k d` with `<d, v> = 0`; substituting into the norm gives
/// `d² k² + 2<u0,d> k + u0² - n = 0`, solved over the integers.
pub fn solve_norm_pairing(
    cfg: &K3Config,
    lattice: &WallLattice,
    v: &MukaiVector,
    n: &Int,
    c: &Int,
) -> Result<NormSolutions> {
    let [b1, b2] = &lattice.basis;
    let p1 = mukai_pairing(cfg, b1, v);
    let p2 = mukai_pairing(cfg, b2, v);
    if p1.is_zero() && p2.is_zero() {
        return Err(Error::DegenerateLattice);
    }
    let eg = p1.extended_gcd(&p2);
    let g = eg.gcd;
    if !(c % &g).is_zero() {
        return Ok(NormSolutions::Finite(Vec::new()));
    }
    let m = c / &g;
    let u0 = lattice.element(&(&eg.x * &m), &(&eg.y * &m));
    let d = lattice.element(&(&p2 / &g), &-(&p1 / &g));

    let a = square(cfg, &d);
    let b = mukai_pairing(cfg, &u0, &d);
    let k0 = square(cfg, &u0) - n;
    let at = |k: &Int| &u0 + &d.scale(k);

    let mut sols = Vec::new();
    if a.is_zero() {
        if b.is_zero() {
            if k0.is_zero() {
                return Ok(NormSolutions::InfiniteFamily { base: u0, direction: d });
            }
        } else {
            let (k, rem) = (-&k0).div_rem(&(int(2) * &b));
            if rem.is_zero() {
                sols.push(at(&k));
            }
        }
    } else {
        let disc = &b * &b - &a * &k0;
        if let Some(root) = exact_isqrt(&disc) {
            for num in [-&b + &root, -&b - &root] {
                let (k, rem) = num.div_rem(&a);
                if rem.is_zero() {
                    sols.push(at(&k));
                }
            }
        }
    }
    sols.sort();
    sols.dedup();
    Ok(NormSolutions::Finite(sols))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisorialKind {
    HilbertChow,
    LiGiesekerUhlenbeck,
    BrillNoether,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallKind {
    Divisorial(DivisorialKind),
    Flopping,
    FakeOrUnknown,
}

impl fmt::Display for WallKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WallKind::Divisorial(DivisorialKind::HilbertChow) => "divisorial/hilbert-chow",
            WallKind::Divisorial(DivisorialKind::LiGiesekerUhlenbeck) => "divisorial/li-gieseker-uhlenbeck",
            WallKind::Divisorial(DivisorialKind::BrillNoether) => "divisorial/brill-noether",
            WallKind::Flopping => "flopping",
            WallKind::FakeOrUnknown => "fake-or-unknown",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessRole {
    /// `u² = 0`, `<u,v> = 1`
    IsotropicPairingOne,
    /// `u² = 0`, `<u,v> = 2`
    IsotropicPairingTwo,
    /// `s² = -2`, `<s,v> = 0`
    SphericalOrthogonal,
    /// `s² = -2`, `0 < <s,v> <= v²/2`
    SphericalFlop,
    /// `s² = -2`, `<s,v> < 0`
    SphericalNegative,
}

impl WitnessRole {
    pub fn label(&self) -> &'static str {
        match self {
            WitnessRole::IsotropicPairingOne => "isotropic-pairing-1",
            WitnessRole::IsotropicPairingTwo => "isotropic-pairing-2",
            WitnessRole::SphericalOrthogonal => "spherical-orthogonal",
            WitnessRole::SphericalFlop => "spherical-flop",
            WitnessRole::SphericalNegative => "spherical-negative",
        }
    }

    /// Whether `(square, pairing)` satisfies the role's defining equations.
    pub fn accepts(&self, square: &Int, pairing: &Int, v_square: &Int) -> bool {
        match self {
            WitnessRole::IsotropicPairingOne => square.is_zero() && pairing.is_one(),
            WitnessRole::IsotropicPairingTwo => square.is_zero() && *pairing == int(2),
            WitnessRole::SphericalOrthogonal => *square == int(-2) && pairing.is_zero(),
            WitnessRole::SphericalFlop => *square == int(-2) && pairing.is_positive() && int(2) * pairing <= *v_square,
            WitnessRole::SphericalNegative => *square == int(-2) && pairing.is_negative(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub class: MukaiVector,
    pub role: WitnessRole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallTypeRecord {
    pub kind: WallKind,
    pub bouncing: bool,
    /// A spherical class with negative pairing against `v` exists in `H_W`
    /// (searched for `-v² <= <s,v> <= -1`). Effectivity is not checked.
    pub totally_semistable_flag: bool,
    pub witnesses: Vec<Witness>,
    pub lattice: WallLattice,
}

impl WallTypeRecord {
    pub fn witnesses_with(&self, role: WitnessRole) -> impl Iterator<Item = &MukaiVector> {
        self.witnesses.iter().filter(move |w| w.role == role).map(|w| &w.class)
    }
}

pub fn classify_wall(cfg: &K3Config, v: &MukaiVector, w: &MukaiVector) -> Result<WallTypeRecord> {
    classify_lattice(cfg, v, wall_lattice(cfg, v, w)?)
}

/// Classification from any basis of the wall lattice.
pub fn classify_lattice(cfg: &K3Config, v: &MukaiVector, lattice: WallLattice) -> Result<WallTypeRecord> {
    let v2 = square(cfg, v);
    let find = |n: i64, c: &Int| -> Result<Vec<MukaiVector>> {
        Ok(solve_norm_pairing(cfg, &lattice, v, &int(n), c)?.representatives())
    };
    let tag = |classes: Vec<MukaiVector>, role: WitnessRole| -> Vec<Witness> {
        classes.into_iter().map(|class| Witness { class, role }).collect()
    };

    let mut witnesses = Vec::new();
    let mut kind = WallKind::FakeOrUnknown;
    let steps: [(i64, Int, WitnessRole, WallKind); 3] = [
        (0, int(1), WitnessRole::IsotropicPairingOne, WallKind::Divisorial(DivisorialKind::HilbertChow)),
        (0, int(2), WitnessRole::IsotropicPairingTwo, WallKind::Divisorial(DivisorialKind::LiGiesekerUhlenbeck)),
        (-2, int(0), WitnessRole::SphericalOrthogonal, WallKind::Divisorial(DivisorialKind::BrillNoether)),
    ];
    for (n, c, role, k) in steps {
        let found = find(n, &c)?;
        if !found.is_empty() {
            witnesses = tag(found, role);
            kind = k;
            break;
        }
    }
    if kind == WallKind::FakeOrUnknown {
        let half = v2.div_floor(&int(2));
        let mut c = Int::one();
        while c <= half {
            witnesses.extend(tag(find(-2, &c)?, WitnessRole::SphericalFlop));
            c += 1;
        }
        if !witnesses.is_empty() {
            kind = WallKind::Flopping;
        }
    }

    let mut negative = Vec::new();
    let mut c = int(-1);
    let floor_c = -v2.clone().max(Int::one());
    while c >= floor_c {
        negative.extend(find(-2, &c)?);
        c -= 1;
    }
    let totally_semistable_flag = !negative.is_empty();
    witnesses.extend(tag(negative, WitnessRole::SphericalNegative));

    Ok(WallTypeRecord {
        kind,
        bouncing: matches!(kind, WallKind::Divisorial(_)),
        totally_semistable_flag,
        witnesses,
        lattice,
    })
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

    fn span(a: MukaiVector, b: MukaiVector) -> WallLattice {
        let basis = [a, b];
        let gram = std::array::from_fn(|i| std::array::from_fn(|j| mukai_pairing(&s16(), &basis[i], &basis[j])));
        WallLattice { basis, gram, v_coords: [Int::zero(), Int::zero()] }
    }

    #[test]
    fn hnf_basics() {
        let h = hermite_normal_form(&[MukaiVector::new(2, 1, 4), MukaiVector::new(0, 0, 1)]);
        assert_eq!(h, vec![MukaiVector::new(2, 1, 0), MukaiVector::new(0, 0, 1)]);
        let h = hermite_normal_form(&[MukaiVector::new(4, 6, 0), MukaiVector::new(6, 9, 0)]);
        assert_eq!(h, vec![MukaiVector::new(2, 3, 0)]);
        let h = hermite_normal_form(&[MukaiVector::new(0, -3, 1), MukaiVector::new(-1, 0, 0)]);
        assert_eq!(h, vec![MukaiVector::new(1, 0, 0), MukaiVector::new(0, 3, -1)]);
    }

    #[test]
    fn example_lattices() {
        let k = s16();
        let lv = wall_lattice(&k, &v(), &MukaiVector::new(2, 1, 4)).unwrap();
        assert!(lv.same_lattice(&span(MukaiVector::new(2, 1, 4), MukaiVector::new(0, 0, 1))));
        let ll = wall_lattice(&k, &v(), &MukaiVector::new(3, 1, 3)).unwrap();
        assert!(ll.same_lattice(&span(MukaiVector::new(0, 1, 3), MukaiVector::new(1, 0, 0))));
        let lr = wall_lattice(&k, &v(), &MukaiVector::new(1, 1, 8)).unwrap();
        assert!(lr.contains(&MukaiVector::new(3, 2, 11)));
        for l in [&lv, &ll, &lr] {
            assert!(l.det().is_negative());
            assert_eq!(&l.element(&l.v_coords[0], &l.v_coords[1]), &v());
        }
    }

    #[test]
    fn saturation_of_non_saturated_span() {
        // span((1,0,0),(1,2,0)) has index 2 in its saturation
        let k = s16();
        let l = wall_lattice(&k, &MukaiVector::new(1, 0, 0), &MukaiVector::new(1, 2, 0)).unwrap();
        assert!(l.contains(&MukaiVector::new(0, 1, 0)));
        assert!(wall_lattice(&k, &v(), &MukaiVector::new(-4, -2, -6)).is_err());
    }

    #[test]
    fn left_wall_norm_equations() {
        let k = s16();
        let l = wall_lattice(&k, &v(), &MukaiVector::new(3, 1, 3)).unwrap();
        let solve = |n: i64, c: i64| solve_norm_pairing(&k, &l, &v(), &int(n), &int(c)).unwrap();
        assert!(solve(0, 1).is_empty());
        assert!(solve(0, 2).is_empty());
        assert!(solve(-2, 0).is_empty());
        assert_eq!(solve(-2, 1), NormSolutions::Finite(vec![MukaiVector::new(3, 1, 3)]));
    }

    #[test]
    fn vertical_wall_has_no_spherical_classes() {
        let k = s16();
        let l = wall_lattice(&k, &v(), &MukaiVector::new(2, 1, 4)).unwrap();
        for c in -4..=4 {
            assert!(solve_norm_pairing(&k, &l, &v(), &int(-2), &int(c)).unwrap().is_empty());
        }
    }

    #[test]
    fn isotropic_direction_family() {
        // v = (1,0,0) is isotropic, so every multiple of v solves u² = 0, <u,v> = 0
        let k = s16();
        let vv = MukaiVector::new(1, 0, 0);
        let l = wall_lattice(&k, &vv, &MukaiVector::new(0, 0, 1)).unwrap();
        match solve_norm_pairing(&k, &l, &vv, &int(0), &int(0)).unwrap() {
            NormSolutions::InfiniteFamily { base, direction } => {
                assert_eq!(square(&k, &direction), int(0));
                assert_eq!(square(&k, &base), int(0));
                assert!(direction.is_proportional(&vv));
            }
            other => panic!("expected a family, got {other:?}"),
        }
    }

    #[test]
    fn classifications() {
        let k = s16();
        let rv = classify_wall(&k, &v(), &MukaiVector::new(2, 1, 4)).unwrap();
        assert_eq!(rv.kind, WallKind::Divisorial(DivisorialKind::LiGiesekerUhlenbeck));
        assert!(rv.bouncing && !rv.totally_semistable_flag);
        assert!(rv.witnesses_with(WitnessRole::IsotropicPairingTwo).any(|u| *u == MukaiVector::new(2, 1, 4)));

        let rl = classify_wall(&k, &v(), &MukaiVector::new(3, 1, 3)).unwrap();
        assert_eq!(rl.kind, WallKind::Flopping);
        assert!(!rl.bouncing && rl.totally_semistable_flag);
        assert_eq!(rl.witnesses_with(WitnessRole::SphericalFlop).collect::<Vec<_>>(), vec![&MukaiVector::new(3, 1, 3)]);
        assert!(rl.witnesses_with(WitnessRole::SphericalNegative).any(|u| *u == MukaiVector::new(-3, -1, -3)));

        let rr = classify_wall(&k, &v(), &MukaiVector::new(1, 1, 8)).unwrap();
        assert_eq!(rr.kind, WallKind::Flopping);
        assert_eq!(
            rr.witnesses_with(WitnessRole::SphericalFlop).collect::<Vec<_>>(),
            vec![&MukaiVector::new(3, 2, 11)]
        );
    }
}
