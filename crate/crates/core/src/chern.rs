//! Chern characters on P³ (polarization H with H³ = 1), twisted characters,
//! the tilt and Bridgeland slope functions, and the Riemann–Roch pairing.
//!
//! A character is stored as `(ch0, H²·ch1, H·ch2, ch3)`; all arithmetic is
//! exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::{is_integer, parse_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("expected four comma-separated rationals, got `{0}`")]
    Malformed(String),
    #[error("`{0}` is not a rational number")]
    BadRational(String),
    #[error("({0}) is not in the lattice Z + Z + 1/2 Z + 1/6 Z")]
    OffLattice(String),
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(Rational),
    #[error("s must be positive, got {0}")]
    NonPositiveS(Rational),
    #[error("this computation needs the parameter s")]
    MissingS,
    #[error("number of points must be nonnegative, got {0}")]
    NegativeLength(i64),
    #[error("projective space dimension must be 1, 2 or 3, got {0}")]
    BadDimension(i64),
}

/// Slope value in ℚ ∪ {+∞}. `+∞` compares above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedSlope {
    Finite(Rational),
    PositiveInfinity,
}

impl ExtendedSlope {
    fn ratio(num: Rational, den: &Rational) -> Self {
        if den.is_zero() {
            ExtendedSlope::PositiveInfinity
        } else {
            ExtendedSlope::Finite(num / den)
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedSlope::Finite(q) => Some(q),
            ExtendedSlope::PositiveInfinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedSlope::PositiveInfinity)
    }
}

impl fmt::Display for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedSlope::Finite(q) => write!(f, "{q}"),
            ExtendedSlope::PositiveInfinity => f.write_str("+inf"),
        }
    }
}

/// A point `(α, β)` of the stability half-plane, optionally with the
/// Bridgeland parameter `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityPoint {
    alpha: Rational,
    beta: Rational,
    s: Option<Rational>,
}

impl StabilityPoint {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self, ChernError> {
        if !alpha.is_positive() {
            return Err(ChernError::NonPositiveAlpha(alpha));
        }
        Ok(StabilityPoint {
            alpha,
            beta,
            s: None,
        })
    }

    pub fn with_s(mut self, s: Rational) -> Result<Self, ChernError> {
        if !s.is_positive() {
            return Err(ChernError::NonPositiveS(s));
        }
        self.s = Some(s);
        Ok(self)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `α²`, the variable every wall equation is polynomial in.
    pub fn alpha_sq(&self) -> Rational {
        &self.alpha * &self.alpha
    }

    pub fn s(&self) -> Option<&Rational> {
        self.s.as_ref()
    }

    pub fn require_s(&self) -> Result<&Rational, ChernError> {
        self.s.as_ref().ok_or(ChernError::MissingS)
    }
}

/// Chern character `(ch0, ch1, ch2, ch3)` of an object on P³.
///
/// Characters built through [`ChernCharacter::new`] or parsed from text lie
/// in the lattice `Z ⊕ Z ⊕ ½Z ⊕ ⅙Z`. Twisting by a non-integral β leaves the
/// lattice, so [`ChernCharacter::from_rationals`] accepts arbitrary values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    ch: [Rational; 4],
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational, ch3: Rational) -> Result<Self, ChernError> {
        let v = Self::from_rationals(ch0, ch1, ch2, ch3);
        if v.in_lattice() {
            Ok(v)
        } else {
            Err(ChernError::OffLattice(v.to_string()))
        }
    }

    pub fn from_rationals(ch0: Rational, ch1: Rational, ch2: Rational, ch3: Rational) -> Self {
        ChernCharacter {
            ch: [ch0, ch1, ch2, ch3],
        }
    }

    pub fn zero() -> Self {
        Self::from_rationals(Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    /// Character of a skyscraper sheaf of length `n`: `(0, 0, 0, n)`.
    pub fn points(n: i64) -> Self {
        Self::from_rationals(Rational::zero(), Rational::zero(), Rational::zero(), Rational::from_integer(n.into()))
    }

    pub fn ch0(&self) -> &Rational {
        &self.ch[0]
    }
    pub fn ch1(&self) -> &Rational {
        &self.ch[1]
    }
    pub fn ch2(&self) -> &Rational {
        &self.ch[2]
    }
    pub fn ch3(&self) -> &Rational {
        &self.ch[3]
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.ch
    }

    pub fn in_lattice(&self) -> bool {
        let two = Rational::from_integer(2.into());
        let six = Rational::from_integer(6.into());
        is_integer(&self.ch[0])
            && is_integer(&self.ch[1])
            && is_integer(&(&self.ch[2] * two))
            && is_integer(&(&self.ch[3] * six))
    }

    /// Derived dual: `(ch0, −ch1, ch2, −ch3)`.
    pub fn dual(&self) -> Self {
        let [a, b, c, d] = &self.ch;
        Self::from_rationals(a.clone(), -b, c.clone(), -d)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let [a, b, c, d] = &self.ch;
        Self::from_rationals(a * k, b * k, c * k, d * k)
    }

    /// Twisted character `e^{−βH}·ch`.
    pub fn twist(&self, beta: &Rational) -> Self {
        let [c0, c1, c2, c3] = &self.ch;
        let b2 = beta * beta / Rational::from_integer(2.into());
        let b3 = beta * beta * beta / Rational::from_integer(6.into());
        Self::from_rationals(
            c0.clone(),
            c1 - beta * c0,
            c2 - beta * c1 + &b2 * c0,
            c3 - beta * c2 + &b2 * c1 - b3 * c0,
        )
    }

    /// `μ_β = ch1^β / ch0`, `+∞` for rank zero.
    pub fn mu_slope(&self, beta: &Rational) -> ExtendedSlope {
        let t = self.twist(beta);
        ExtendedSlope::ratio(t.ch[1].clone(), &t.ch[0])
    }

    /// `ν_{α,β} = (ch2^β − α²/2·ch0) / ch1^β`, `+∞` when `ch1^β = 0`.
    pub fn nu_slope(&self, p: &StabilityPoint) -> ExtendedSlope {
        let t = self.twist(p.beta());
        let num = &t.ch[2] - p.alpha_sq() / Rational::from_integer(2.into()) * &t.ch[0];
        ExtendedSlope::ratio(num, &t.ch[1])
    }

    /// `λ_{α,β,s} = (ch3^β − α²(1/6 + s)·ch1^β) / (ch2^β − α²/2·ch0)`, `+∞`
    /// when the denominator vanishes.
    pub fn lambda_slope(&self, p: &StabilityPoint) -> Result<ExtendedSlope, ChernError> {
        let s = p.require_s()?;
        let t = self.twist(p.beta());
        let a = p.alpha_sq();
        let sixth = Rational::new(1.into(), 6.into());
        let num = &t.ch[3] - &a * (sixth + s) * &t.ch[1];
        let den = &t.ch[2] - a / Rational::from_integer(2.into()) * &t.ch[0];
        Ok(ExtendedSlope::ratio(num, &den))
    }

    /// Bogomolov discriminant `ch1² − 2·ch0·ch2`.
    pub fn discriminant(&self) -> Rational {
        let [c0, c1, c2, _] = &self.ch;
        c1 * c1 - Rational::from_integer(2.into()) * c0 * c2
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch: std::array::from_fn(|i| &self.ch[i] + &rhs.ch[i]),
        }
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch: std::array::from_fn(|i| &self.ch[i] - &rhs.ch[i]),
        }
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        ChernCharacter {
            ch: std::array::from_fn(|i| -&self.ch[i]),
        }
    }
}

impl Add for ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: ChernCharacter) -> ChernCharacter {
        &self + &rhs
    }
}

impl Sub for ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: ChernCharacter) -> ChernCharacter {
        &self - &rhs
    }
}

impl fmt::Display for ChernCharacter {
    /// Text form `1,0,-2,2` / `0,1,-5/2,13/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.ch;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for ChernCharacter {
    type Err = ChernError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(ChernError::Malformed(s.to_string()));
        }
        let mut vals = Vec::with_capacity(4);
        for p in parts {
            vals.push(parse_rational(p).ok_or_else(|| ChernError::BadRational(p.to_string()))?);
        }
        let [a, b, c, d]: [Rational; 4] = vals.try_into().expect("four components");
        ChernCharacter::new(a, b, c, d)
    }
}

impl Serialize for ChernCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.ch.iter().map(|q| q.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = <[String; 4]>::deserialize(deserializer)?;
        strings.join(",").parse().map_err(serde::de::Error::custom)
    }
}

/// The sheaves whose characters appear in the walls and diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SheafSpec {
    /// `O(d)`
    LineBundle(i64),
    /// `O_V(d)` for a plane `V`
    PlaneTwist(i64),
    /// `I_Z(d)` for `n` points `Z`
    IdealPoints(i64, i64),
    /// `I_{Z/V}(d)` for `n` points on a plane `V`
    PlaneIdealPoints(i64, i64),
    /// `Ω¹_V` of a plane
    CotangentPlane,
    /// ideal sheaf of two skew lines, `(1, 0, −2, 2)`
    SkewLinesIdeal,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn sheaf_library(spec: SheafSpec) -> Result<ChernCharacter, ChernError> {
    use SheafSpec::*;
    let line = |d: i64| ChernCharacter::from_rationals(q(1, 1), q(d, 1), q(d * d, 2), q(d * d * d, 6));
    let plane = |d: i64| &line(d) - &line(d - 1);
    Ok(match spec {
        LineBundle(d) => line(d),
        PlaneTwist(d) => plane(d),
        IdealPoints(_, n) | PlaneIdealPoints(_, n) if n < 0 => return Err(ChernError::NegativeLength(n)),
        IdealPoints(d, n) => &line(d) - &ChernCharacter::points(n),
        PlaneIdealPoints(d, n) => &plane(d) - &ChernCharacter::points(n),
        // Euler sequence 0 → Ω¹_V → O_V(−1)^3 → O_V → 0
        CotangentPlane => &plane(-1).scale(&q(3, 1)) - &plane(0),
        SkewLinesIdeal => ChernCharacter::from_rationals(q(1, 1), q(0, 1), q(-2, 1), q(2, 1)),
    })
}

/// Todd class of P³ as coefficients of `1, H, H², H³`.
pub fn todd_coefficients() -> [Rational; 4] {
    [q(1, 1), q(2, 1), q(11, 6), q(1, 1)]
}

/// `χ(F, G) = ∫ ch(F)^∨ · ch(G) · td(P³)`.
pub fn euler_pairing(f: &ChernCharacter, g: &ChernCharacter) -> Rational {
    let fd = f.dual();
    let prod = truncated_product(fd.components(), g.components());
    truncated_product(&prod, &todd_coefficients())[3].clone()
}

fn truncated_product(a: &[Rational; 4], b: &[Rational; 4]) -> [Rational; 4] {
    std::array::from_fn(|k| (0..=k).map(|i| &a[i] * &b[k - i]).fold(Rational::zero(), |x, y| x + y))
}

/// `(h⁰, …, hⁿ)` of `O(d)` on `Pⁿ`.
pub fn bott_cohomology(n: i64, d: i64) -> Result<Vec<BigUint>, ChernError> {
    if !(1..=3).contains(&n) {
        return Err(ChernError::BadDimension(n));
    }
    let mut h = vec![BigUint::zero(); n as usize + 1];
    let choose = |top: i64, k: i64| binomial(BigUint::from(top as u64), BigUint::from(k as u64));
    if d >= 0 {
        h[0] = choose(d + n, n);
    }
    if d < -n {
        h[n as usize] = choose(-d - 1, n);
    }
    Ok(h)
}

impl PartialOrd for ChernCharacter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChernCharacter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ch.cmp(&other.ch)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use SheafSpec::*;

    fn ch(s: &str) -> ChernCharacter {
        let parts: Vec<Rational> = s.split(',').map(|p| parse_rational(p).unwrap()).collect();
        ChernCharacter::from_rationals(parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone())
    }

    fn pt(alpha: Rational, beta: Rational) -> StabilityPoint {
        StabilityPoint::new(alpha, beta).unwrap()
    }

    #[test]
    fn twist_examples() {
        assert_eq!(ch("1,0,-2,2").twist(&q(-2, 1)), ch("1,2,0,-2/3"));
        let v = ch("3,-1,5/2,7/6");
        assert_eq!(v.twist(&Rational::zero()), v);
        assert_eq!(ch("1,-1,1/2,-7/6").twist(&q(-2, 1)), ch("1,1,1/2,-5/6"));
    }

    #[test]
    fn mu_slope_examples() {
        assert_eq!(ch("1,0,-2,2").mu_slope(&q(-2, 1)), ExtendedSlope::Finite(q(2, 1)));
        assert_eq!(ch("0,1,-5/2,19/6").mu_slope(&q(7, 3)), ExtendedSlope::PositiveInfinity);
        assert_eq!(ch("1,-1,1/2,-1/6").mu_slope(&Rational::zero()), ExtendedSlope::Finite(q(-1, 1)));
        assert!(ExtendedSlope::PositiveInfinity > ExtendedSlope::Finite(q(10_i64.pow(12), 1)));
    }

    #[test]
    fn nu_slope_examples() {
        let zero = ExtendedSlope::Finite(Rational::zero());
        assert_eq!(ch("1,0,-2,2").nu_slope(&pt(q(3, 2), q(-5, 2))), zero);
        assert_eq!(ch("0,1,-5/2,19/6").nu_slope(&pt(q(1, 1), q(-5, 2))), zero);
        assert!(ch("0,0,1,0").nu_slope(&pt(q(1, 3), q(4, 1))).is_infinite());
    }

    #[test]
    fn lambda_slope_examples() {
        let p = pt(q(3, 2), q(-5, 2)).with_s(q(1, 3)).unwrap();
        assert!(ch("1,0,-2,2").lambda_slope(&p).unwrap().is_infinite());
        let p = pt(q(1, 1), Rational::zero()).with_s(q(1, 1)).unwrap();
        assert!(ch("0,0,0,1").lambda_slope(&p).unwrap().is_infinite());
        let no_s = pt(q(1, 1), Rational::zero());
        assert_eq!(ch("1,0,0,0").lambda_slope(&no_s), Err(ChernError::MissingS));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(ch("1,0,-2,2").discriminant(), q(4, 1));
        assert_eq!(ch("1,-1,1/2,-1/6").discriminant(), Rational::zero());
        assert_eq!(ch("0,1,-5/2,19/6").discriminant(), q(1, 1));
    }

    #[test]
    fn library_examples() {
        assert_eq!(sheaf_library(PlaneIdealPoints(-2, 1)).unwrap(), ch("0,1,-5/2,13/6"));
        let cot = sheaf_library(CotangentPlane).unwrap();
        assert_eq!(cot, ch("0,2,-4,10/3"));
        assert_eq!(&sheaf_library(LineBundle(-2)).unwrap() + &cot, ch("1,0,-2,2"));
        assert_eq!(sheaf_library(LineBundle(0)).unwrap(), ch("1,0,0,0"));
        assert_eq!(sheaf_library(IdealPoints(0, -1)), Err(ChernError::NegativeLength(-1)));
        assert!(sheaf_library(PlaneTwist(-7)).unwrap().in_lattice());
    }

    #[test]
    fn text_form_round_trips_and_validates() {
        let v: ChernCharacter = "0, 1, -5/2, 13/6".parse().unwrap();
        assert_eq!(v.to_string(), "0,1,-5/2,13/6");
        assert!(matches!("1,0,-2".parse::<ChernCharacter>(), Err(ChernError::Malformed(_))));
        assert!(matches!("1,0,x,2".parse::<ChernCharacter>(), Err(ChernError::BadRational(_))));
        assert!(matches!("1,1/2,0,0".parse::<ChernCharacter>(), Err(ChernError::OffLattice(_))));
        assert!(matches!("1,0,1/3,0".parse::<ChernCharacter>(), Err(ChernError::OffLattice(_))));
    }

    #[test]
    fn euler_pairing_examples() {
        let o = sheaf_library(LineBundle(0)).unwrap();
        assert_eq!(euler_pairing(&o, &o), q(1, 1));
        let f = sheaf_library(LineBundle(-1)).unwrap();
        let g = sheaf_library(PlaneIdealPoints(-2, 1)).unwrap();
        assert_eq!(euler_pairing(&f, &g), q(-1, 1));
        for d in 0..=2 {
            let expected = q((d + 1) * (d + 2) * (d + 3), 6);
            assert_eq!(euler_pairing(&o, &sheaf_library(LineBundle(d)).unwrap()), expected);
        }
    }

    #[test]
    fn bott_examples() {
        let as_u = |v: Vec<BigUint>| v.into_iter().map(|x| u64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_u(bott_cohomology(2, 2).unwrap()), [6, 0, 0]);
        assert_eq!(as_u(bott_cohomology(3, -4).unwrap()), [0, 0, 0, 1]);
        assert_eq!(as_u(bott_cohomology(2, -1).unwrap()), [0, 0, 0]);
        assert_eq!(as_u(bott_cohomology(1, -3).unwrap()), [0, 2]);
        assert_eq!(bott_cohomology(4, 0), Err(ChernError::BadDimension(4)));
        assert_eq!(bott_cohomology(0, 0), Err(ChernError::BadDimension(0)));
    }

    #[test]
    fn stability_point_validation() {
        assert!(StabilityPoint::new(Rational::zero(), q(1, 1)).is_err());
        assert!(pt(q(1, 1), q(1, 1)).with_s(Rational::zero()).is_err());
    }
}
