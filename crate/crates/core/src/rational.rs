//! Small helpers around `BigInt` / `BigRational`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(n: &Int) -> Rat {
    BigRational::from_integer(n.clone())
}

/// Parses `p/q` or a bare integer.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn floor(x: &Rat) -> Int {
    x.numer().div_floor(x.denom())
}

pub fn ceil(x: &Rat) -> Int {
    -((-x.numer()).div_floor(x.denom()))
}

/// `Some(r)` with `r >= 0` and `r * r == x`, when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = exact_isqrt(x.numer())?;
    let d = exact_isqrt(x.denom())?;
    Some(BigRational::new(n, d))
}

/// Exact integer square root, `None` for non-squares.
pub fn exact_isqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Largest integer `k` with `k*k <= x` for `x >= 0`.
pub fn floor_sqrt(x: &Rat) -> Int {
    debug_assert!(!x.is_negative());
    // floor(sqrt(p/q)) = floor(sqrt(floor(p/q)))
    floor(x).sqrt()
}

pub fn sign(x: &Int) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// half away from zero. Integers print without a fractional part.
pub fn to_decimal(x: &Rat, digits: u32) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let mag = scaled.abs();
    let rounded = floor(&(mag + rat(1, 2)));
    fixed_point(&rounded, x.is_negative(), &scale, digits)
}

/// Decimal rendering of `sqrt(x)` (x >= 0), rounded to nearest at `digits`.
pub fn sqrt_to_decimal(x: &Rat, digits: u32) -> String {
    if let Some(r) = rational_sqrt(x) {
        return to_decimal(&r, digits);
    }
    let scale = BigInt::from(10u32).pow(digits);
    // round(sqrt(x) * 10^d) = floor((floor(sqrt(4 x 10^2d)) + 1) / 2)
    let four_x = x * BigRational::from_integer(BigInt::from(4) * &scale * &scale);
    let root = floor(&four_x).sqrt();
    let rounded = (root + BigInt::one()) / BigInt::from(2);
    fixed_point(&rounded, false, &scale, digits)
}

fn fixed_point(mag: &Int, negative: bool, scale: &Int, digits: u32) -> String {
    let (whole, frac) = mag.div_rem(scale);
    let mut frac = format!("{:0>width$}", frac.to_string(), width = digits as usize);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if negative && !(whole.is_zero() && frac.is_empty()) { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}
