//! The algebraic Mukai lattice `H^0 ⊕ Z·H ⊕ H^4` of a K3 surface with
//! Picard group generated by a single ample class `H`.
//!
//! A class is stored as `(r, c, s)`: rank, first Chern class as a multiple
//! of `H`, and `ch_2 + r`. The pairing is
//! `<u, w> = H^2 u.c w.c - u.r w.s - u.s w.r` and `chi(E, F) = -<v(E), v(F)>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, rat_int, Int, Rat};

/// Numerical data of the polarized surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct K3Config {
    h2: i64,
}

impl K3Config {
    pub fn new(h2: i64) -> Result<Self> {
        if h2 < 2 || h2 % 2 != 0 {
            return Err(Error::InvalidH2(h2));
        }
        Ok(K3Config { h2 })
    }

    pub fn h2(&self) -> i64 {
        self.h2
    }

    pub fn h2_int(&self) -> Int {
        int(self.h2)
    }

    pub fn h2_rat(&self) -> Rat {
        Rat::from_integer(self.h2_int())
    }

    /// `g = H^2/2 + 1`.
    pub fn genus(&self) -> i64 {
        self.h2 / 2 + 1
    }
}

/// A Mukai vector `(r, c, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MukaiVector {
    pub r: Int,
    pub c: Int,
    pub s: Int,
}

impl MukaiVector {
    pub fn new(r: i64, c: i64, s: i64) -> Self {
        MukaiVector { r: int(r), c: int(c), s: int(s) }
    }

    pub fn from_ints(r: Int, c: Int, s: Int) -> Self {
        MukaiVector { r, c, s }
    }

    pub fn zero() -> Self {
        MukaiVector::new(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.c.is_zero() && self.s.is_zero()
    }

    pub fn entries(&self) -> [&Int; 3] {
        [&self.r, &self.c, &self.s]
    }

    /// gcd of the entries (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.r.gcd(&self.c).gcd(&self.s)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive_part(&self) -> MukaiVector {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        MukaiVector::from_ints(&self.r / &g, &self.c / &g, &self.s / &g)
    }

    pub fn scale(&self, k: &Int) -> MukaiVector {
        MukaiVector::from_ints(&self.r * k, &self.c * k, &self.s * k)
    }

    /// True when `self` and `other` are linearly dependent over Q.
    pub fn is_proportional(&self, other: &MukaiVector) -> bool {
        cross(self, other).is_zero()
    }

    /// Comma-separated form `r,c,s` used by config and report files.
    pub fn triple(&self) -> String {
        format!("{},{},{}", self.r, self.c, self.s)
    }

    pub fn parse_triple(text: &str) -> Option<MukaiVector> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return None;
        }
        let mut it = parts.iter().map(|p| p.parse::<BigInt>());
        Some(MukaiVector::from_ints(it.next()?.ok()?, it.next()?.ok()?, it.next()?.ok()?))
    }
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.s)
    }
}

impl Add for &MukaiVector {
    type Output = MukaiVector;
    fn add(self, o: &MukaiVector) -> MukaiVector {
        MukaiVector::from_ints(&self.r + &o.r, &self.c + &o.c, &self.s + &o.s)
    }
}

impl Sub for &MukaiVector {
    type Output = MukaiVector;
    fn sub(self, o: &MukaiVector) -> MukaiVector {
        MukaiVector::from_ints(&self.r - &o.r, &self.c - &o.c, &self.s - &o.s)
    }
}

impl Neg for &MukaiVector {
    type Output = MukaiVector;
    fn neg(self) -> MukaiVector {
        MukaiVector::from_ints(-&self.r, -&self.c, -&self.s)
    }
}

impl Mul<&MukaiVector> for &Int {
    type Output = MukaiVector;
    fn mul(self, u: &MukaiVector) -> MukaiVector {
        u.scale(self)
    }
}

/// Euclidean cross product of the coordinate vectors. Its entries are the
/// 2x2 minors of the matrix with rows `u`, `w`.
pub fn cross(u: &MukaiVector, w: &MukaiVector) -> MukaiVector {
    MukaiVector::from_ints(&u.c * &w.s - &u.s * &w.c, &u.s * &w.r - &u.r * &w.s, &u.r * &w.c - &u.c * &w.r)
}

/// Euclidean dot product of coordinates (not the Mukai pairing).
pub fn dot(u: &MukaiVector, w: &MukaiVector) -> Int {
    &u.r * &w.r + &u.c * &w.c + &u.s * &w.s
}

/// Labels `(rank, c_1, c_2)` with `c_1` a multiple of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector {
    pub rank: Int,
    pub c1: Int,
    pub c2: Int,
}

impl ChernVector {
    pub fn new(rank: i64, c1: i64, c2: i64) -> Self {
        ChernVector { rank: int(rank), c1: int(c1), c2: int(c2) }
    }
}

pub fn mukai_pairing(cfg: &K3Config, u: &MukaiVector, w: &MukaiVector) -> Int {
    cfg.h2_int() * &u.c * &w.c - &u.r * &w.s - &u.s * &w.r
}

pub fn square(cfg: &K3Config, u: &MukaiVector) -> Int {
    mukai_pairing(cfg, u, u)
}

/// `(r, c_1, c_2) -> (r, c_1, c_1^2 H^2 / 2 - c_2 + r)`.
pub fn chern_to_mukai(cfg: &K3Config, ch: &ChernVector) -> MukaiVector {
    let ch2 = &ch.c1 * &ch.c1 * int(cfg.h2() / 2) - &ch.c2;
    MukaiVector::from_ints(ch.rank.clone(), ch.c1.clone(), ch2 + &ch.rank)
}

pub fn mukai_to_chern(cfg: &K3Config, u: &MukaiVector) -> ChernVector {
    let ch2 = &u.s - &u.r;
    let c2 = &u.c * &u.c * int(cfg.h2() / 2) - ch2;
    ChernVector { rank: u.r.clone(), c1: u.c.clone(), c2 }
}

/// `chi(E, F) = -<v(E), v(F)>`.
pub fn euler_chi(cfg: &K3Config, u: &MukaiVector, w: &MukaiVector) -> Int {
    -mukai_pairing(cfg, u, w)
}

pub fn is_spherical(cfg: &K3Config, u: &MukaiVector) -> bool {
    square(cfg, u) == int(-2)
}

pub fn is_isotropic(cfg: &K3Config, u: &MukaiVector) -> bool {
    square(cfg, u).is_zero()
}

pub fn is_primitive(u: &MukaiVector) -> bool {
    u.is_primitive()
}

/// An element of the even cohomology ring with rational coefficients,
/// graded as `(H^0, multiple of H, integral of the H^4 part)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCharacter {
    pub rank: Rat,
    pub h: Rat,
    pub pt: Rat,
}

impl ChernCharacter {
    pub fn new(rank: Rat, h: Rat, pt: Rat) -> Self {
        ChernCharacter { rank, h, pt }
    }

    pub fn from_ints(rank: i64, h: i64, pt: i64) -> Self {
        let q = |n: i64| BigRational::from_integer(int(n));
        ChernCharacter { rank: q(rank), h: q(h), pt: q(pt) }
    }

    /// `ch = v / sqrt(td)`, i.e. `(r, c, s - r)`.
    pub fn of_mukai(u: &MukaiVector) -> Self {
        ChernCharacter { rank: rat_int(&u.r), h: rat_int(&u.c), pt: rat_int(&(&u.s - &u.r)) }
    }

    /// Todd class of a K3 surface.
    pub fn todd() -> Self {
        ChernCharacter::from_ints(1, 0, 2)
    }

    /// `(a, b, c)^∨ = (a, -b, c)`.
    pub fn dual(&self) -> Self {
        ChernCharacter { rank: self.rank.clone(), h: -&self.h, pt: self.pt.clone() }
    }

    /// Cup product, using `H·H = H^2`.
    pub fn mul(&self, other: &Self, cfg: &K3Config) -> Self {
        let rank = &self.rank * &other.rank;
        let h = &self.rank * &other.h + &self.h * &other.rank;
        let pt = &self.rank * &other.pt + &self.pt * &other.rank + &self.h * &other.h * cfg.h2_rat();
        ChernCharacter { rank, h, pt }
    }

    /// Degree-4 part.
    pub fn integral(&self) -> Rat {
        self.pt.clone()
    }
}

/// Integral of a product of classes.
pub fn integrate_product(cfg: &K3Config, factors: &[ChernCharacter]) -> Rat {
    factors.iter().fold(ChernCharacter::from_ints(1, 0, 0), |acc, f| acc.mul(f, cfg)).integral()
}

/// Riemann-Roch: `chi(E, F) = ∫ ch(E)^∨ ch(F) td(S)`, computed in the
/// cohomology ring without going through the Mukai pairing.
pub fn hrr_oracle(cfg: &K3Config, ch_e: &ChernCharacter, ch_f: &ChernCharacter) -> Rat {
    integrate_product(cfg, &[ch_e.dual(), ch_f.clone(), ChernCharacter::todd()])
}

/// Gram matrix of the pairing in the standard basis.
pub fn gram_matrix(cfg: &K3Config) -> [[Int; 3]; 3] {
    let basis = [MukaiVector::new(1, 0, 0), MukaiVector::new(0, 1, 0), MukaiVector::new(0, 0, 1)];
    std::array::from_fn(|i| std::array::from_fn(|j| mukai_pairing(cfg, &basis[i], &basis[j])))
}

/// Signature `(positive, negative)` of a symmetric integer 3x3 matrix, read
/// off the characteristic polynomial with Descartes' rule (exact for
/// polynomials whose roots are all real).
pub fn signature3(m: &[[Int; 3]; 3]) -> (usize, usize) {
    let trace = &m[0][0] + &m[1][1] + &m[2][2];
    let minors = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] + &m[0][0] * &m[2][2] - &m[0][2] * &m[2][0]
        + &m[1][1] * &m[2][2]
        - &m[1][2] * &m[2][1];
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    // p(x) = x^3 - trace x^2 + minors x - det
    let coeffs = [BigInt::one(), -trace, minors, -det];
    let reflected: Vec<Int> =
        coeffs.iter().enumerate().map(|(i, c)| if (3 - i) % 2 == 1 { -c } else { c.clone() }).collect();
    (sign_changes(&coeffs), sign_changes(&reflected))
}

fn sign_changes(coeffs: &[Int]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s16() -> K3Config {
        K3Config::new(16).unwrap()
    }

    #[test]
    fn config_validation() {
        assert_eq!(s16().genus(), 9);
        assert!(K3Config::new(15).is_err());
        assert!(K3Config::new(0).is_err());
        assert_eq!(K3Config::new(2).unwrap().genus(), 2);
    }

    #[test]
    fn pairing_values() {
        let k = s16();
        let v = MukaiVector::new(2, 1, 3);
        assert_eq!(square(&k, &v), int(4));
        assert_eq!(square(&k, &MukaiVector::new(3, 1, 3)), int(-2));
        assert_eq!(square(&k, &MukaiVector::new(2, 1, 4)), int(0));
        assert_eq!(mukai_pairing(&k, &MukaiVector::new(3, 1, 3), &v), int(1));
    }

    #[test]
    fn chern_dictionary() {
        let k = s16();
        assert_eq!(chern_to_mukai(&k, &ChernVector::new(2, 1, 7)), MukaiVector::new(2, 1, 3));
        assert_eq!(chern_to_mukai(&k, &ChernVector::new(5, 2, 31)), MukaiVector::new(5, 2, 6));
        let k4 = K3Config::new(4).unwrap();
        assert_eq!(chern_to_mukai(&k4, &ChernVector::new(0, 1, 2)), MukaiVector::new(0, 1, 0));
        assert_eq!(mukai_to_chern(&k, &MukaiVector::new(5, 2, 6)), ChernVector::new(5, 2, 31));
    }

    #[test]
    fn euler_characteristics() {
        let k = s16();
        let v = MukaiVector::new(2, 1, 3);
        assert_eq!(euler_chi(&k, &MukaiVector::new(3, 1, 3), &v), int(-1));
        assert_eq!(euler_chi(&k, &v, &v), int(-4));
        assert_eq!(euler_chi(&k, &MukaiVector::new(1, 0, 1), &v), int(5));
    }

    #[test]
    fn hrr_small_cases() {
        let k = s16();
        let o = ChernCharacter::from_ints(1, 0, 0);
        assert_eq!(hrr_oracle(&k, &o, &o), rat(2, 1));
        // ∫ (2,H,1)(3,-H,0)(1,0,2)
        let lit = integrate_product(
            &k,
            &[ChernCharacter::from_ints(2, 1, 1), ChernCharacter::from_ints(3, -1, 0), ChernCharacter::todd()],
        );
        assert_eq!(lit, rat(-1, 1));
        let e = ChernCharacter::of_mukai(&MukaiVector::new(3, 1, 3));
        let f = ChernCharacter::of_mukai(&MukaiVector::new(2, 1, 3));
        assert_eq!(hrr_oracle(&k, &e, &f), rat(-1, 1));
    }

    #[test]
    fn predicates() {
        let k = s16();
        assert!(is_spherical(&k, &MukaiVector::new(3, 1, 3)));
        assert!(is_isotropic(&k, &MukaiVector::new(2, 1, 4)));
        let p = MukaiVector::new(0, 0, 1);
        assert!(is_isotropic(&k, &p) && is_primitive(&p));
        assert!(!is_primitive(&MukaiVector::new(4, 2, 6)));
        assert!(!is_primitive(&MukaiVector::zero()));
    }

    #[test]
    fn lattice_signature() {
        for h2 in [2, 4, 16, 100] {
            let g = gram_matrix(&K3Config::new(h2).unwrap());
            assert_eq!(signature3(&g), (2, 1));
        }
    }

    #[test]
    fn signature_of_definite_matrix() {
        let m = [[int(2), int(0), int(0)], [int(0), int(3), int(0)], [int(0), int(0), int(-1)]];
        assert_eq!(signature3(&m), (2, 1));
        let m = [[int(-2), int(1), int(0)], [int(1), int(-2), int(0)], [int(0), int(0), int(-1)]];
        assert_eq!(signature3(&m), (0, 3));
    }

    #[test]
    fn triple_round_trip() {
        let u = MukaiVector::new(-3, 2, 11);
        assert_eq!(MukaiVector::parse_triple(&u.triple()), Some(u));
        assert_eq!(MukaiVector::parse_triple("1,2"), None);
    }
}
