//! Numerical ν-walls and the search for destabilizing characters along an
//! integral β-ray.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;
use wallcross_polyring::{Monomial, Polynomial};

use crate::chern::ChernCharacter;
use crate::rational::{self, is_integer, Rational};
use crate::symbolic::{self, A};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TiltError {
    #[error("both twisted first Chern characters vanish identically, so both slopes are +inf everywhere")]
    DegenerateSlopes,
    #[error("rank bound must be positive")]
    ZeroRankBound,
    #[error("beta0 = {0} is not an integer; the search relies on integral twisted characters")]
    NonIntegralBeta(Rational),
    #[error("character {0} is not in the lattice")]
    OffLattice(String),
    #[error("twisted ch1 at beta0 is {0}, but the search needs it positive")]
    NonPositiveTwistedCh1(Rational),
    #[error("d is unbounded for r = {0}")]
    Unbounded(i64),
}

/// Locus of a numerical ν-wall in the `(α, β)` half-plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WallLocus {
    /// `α² + (β − center_beta)² = radius_sq`, with `radius_sq > 0`.
    Circle {
        #[serde(with = "rational::as_string")]
        center_beta: Rational,
        #[serde(with = "rational::as_string")]
        radius_sq: Rational,
    },
    #[serde(rename = "vline")]
    VerticalLine {
        #[serde(with = "rational::as_string")]
        beta: Rational,
    },
    Everywhere,
    Empty,
}

impl WallLocus {
    /// Whether `(α², β)` satisfies the locus equation.
    pub fn contains(&self, alpha_sq: &Rational, beta: &Rational) -> bool {
        match self {
            WallLocus::Circle {
                center_beta,
                radius_sq,
            } => {
                let d = beta - center_beta;
                alpha_sq + &d * &d == *radius_sq
            }
            WallLocus::VerticalLine { beta: b } => beta == b,
            WallLocus::Everywhere => true,
            WallLocus::Empty => false,
        }
    }
}

impl fmt::Display for WallLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WallLocus::Circle {
                center_beta,
                radius_sq,
            } => {
                let shift = if center_beta.is_negative() {
                    format!("beta + {}", -center_beta)
                } else if center_beta.is_zero() {
                    "beta".to_string()
                } else {
                    format!("beta - {center_beta}")
                };
                write!(f, "circle: alpha^2 + ({shift})^2 = {radius_sq}")
            }
            WallLocus::VerticalLine { beta } => write!(f, "vertical line: beta = {beta}"),
            WallLocus::Everywhere => f.write_str("everywhere"),
            WallLocus::Empty => f.write_str("empty"),
        }
    }
}

/// `ν(f) = ν(g)` cleared of denominators, as a polynomial in `(a, b)`:
/// `(ch2^b(f) − a/2·ch0(f))·ch1^b(g) − (ch2^b(g) − a/2·ch0(g))·ch1^b(f)`.
pub fn nu_wall_polynomial(f: &ChernCharacter, g: &ChernCharacter) -> Polynomial {
    let tf = symbolic::twisted(f);
    let tg = symbolic::twisted(g);
    let half_a = &symbolic::var(A) * &symbolic::constant(&Rational::new(1.into(), 2.into()));
    let nf = &tf[2] - &(&half_a * &tf[0]);
    let ng = &tg[2] - &(&half_a * &tg[0]);
    &(&nf * &tg[1]) - &(&ng * &tf[1])
}

fn coeff(p: &Polynomial, a: u32, b: u32) -> Rational {
    p.coefficient(&Monomial::from_exponents(vec![a, b, 0]))
}

/// Classifies the numerical wall `ν_{α,β}(f) = ν_{α,β}(g)`.
pub fn nu_wall(f: &ChernCharacter, g: &ChernCharacter) -> Result<WallLocus, TiltError> {
    let degenerate = |v: &ChernCharacter| v.ch0().is_zero() && v.ch1().is_zero();
    if degenerate(f) && degenerate(g) {
        return Err(TiltError::DegenerateSlopes);
    }
    let p = nu_wall_polynomial(f, g);
    // p = k·(a + b²) + l·b + m
    let k = coeff(&p, 1, 0);
    let l = coeff(&p, 0, 1);
    let m = coeff(&p, 0, 0);
    Ok(if !k.is_zero() {
        let two = Rational::from_integer(2.into());
        let center = -&l / (&two * &k);
        let radius_sq = &center * &center - &m / &k;
        if radius_sq.is_positive() {
            WallLocus::Circle {
                center_beta: center,
                radius_sq,
            }
        } else {
            WallLocus::Empty
        }
    } else if !l.is_zero() {
        WallLocus::VerticalLine { beta: -m / l }
    } else if m.is_zero() {
        WallLocus::Everywhere
    } else {
        WallLocus::Empty
    })
}

/// The conic `ch2^β − α²/2·ch0 = 0`, written
/// `a_coeff·a + b2_coeff·β² + b_coeff·β + constant = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicLocus {
    pub a_coeff: Rational,
    pub b2_coeff: Rational,
    pub b_coeff: Rational,
    pub constant: Rational,
}

impl ConicLocus {
    pub fn to_polynomial(&self) -> Polynomial {
        let ring = symbolic::wall_ring();
        Polynomial::from_terms(
            ring,
            [
                (Monomial::from_exponents(vec![1, 0, 0]), self.a_coeff.clone()),
                (Monomial::from_exponents(vec![0, 2, 0]), self.b2_coeff.clone()),
                (Monomial::from_exponents(vec![0, 1, 0]), self.b_coeff.clone()),
                (Monomial::one(3), self.constant.clone()),
            ],
        )
    }

    pub fn contains(&self, alpha_sq: &Rational, beta: &Rational) -> bool {
        (&self.a_coeff * alpha_sq + &self.b2_coeff * beta * beta + &self.b_coeff * beta + &self.constant).is_zero()
    }

    /// The same conic with the leading nonzero coefficient scaled to 1.
    pub fn normalized(&self) -> ConicLocus {
        let lead = [&self.a_coeff, &self.b2_coeff, &self.b_coeff, &self.constant]
            .into_iter()
            .find(|c| !c.is_zero())
            .cloned();
        match lead {
            Some(c) => ConicLocus {
                a_coeff: &self.a_coeff / &c,
                b2_coeff: &self.b2_coeff / &c,
                b_coeff: &self.b_coeff / &c,
                constant: &self.constant / &c,
            },
            None => self.clone(),
        }
    }
}

impl fmt::Display for ConicLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.to_polynomial())
    }
}

pub fn nu_zero_locus(v: &ChernCharacter) -> ConicLocus {
    let half = Rational::new(1.into(), 2.into());
    ConicLocus {
        a_coeff: -&half * v.ch0(),
        b2_coeff: &half * v.ch0(),
        b_coeff: -v.ch1(),
        constant: v.ch2().clone(),
    }
}

/// Twisted truncated character `(ch0, ch1, ch2)` at a fixed β₀.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwistedClass {
    pub r: i64,
    pub c: i64,
    #[serde(with = "rational::as_string")]
    pub d: Rational,
}

impl TwistedClass {
    pub fn discriminant(&self) -> Rational {
        let (r, c) = (Rational::from_integer(self.r.into()), Rational::from_integer(self.c.into()));
        &c * &c - Rational::from_integer(2.into()) * r * &self.d
    }

    /// Untwisted character with `ch3` set to zero; only degrees ≤ 2 carry
    /// information.
    pub fn untwist(&self, beta0: &Rational) -> ChernCharacter {
        ChernCharacter::from_rationals(
            Rational::from_integer(self.r.into()),
            Rational::from_integer(self.c.into()),
            self.d.clone(),
            Rational::zero(),
        )
        .twist(&-beta0)
    }
}

impl fmt::Display for TwistedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.c, self.d)
    }
}

/// An unordered pair `{F, G}` with `ch^{β₀}(F) + ch^{β₀}(G) = ch^{β₀}(E)` in
/// degrees ≤ 2. The class of larger rank comes first; equal ranks are
/// ordered by `(c, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DestabilizerCandidate {
    pub candidate: TwistedClass,
    pub complement: TwistedClass,
    #[serde(with = "rational::as_string")]
    pub beta0: Rational,
}

impl DestabilizerCandidate {
    fn normalized(x: TwistedClass, y: TwistedClass, beta0: Rational) -> Self {
        let x_first = x.r > y.r || (x.r == y.r && (x.c, &x.d) <= (y.c, &y.d));
        let (candidate, complement) = if x_first { (x, y) } else { (y, x) };
        DestabilizerCandidate {
            candidate,
            complement,
            beta0,
        }
    }

    /// The numerical wall along which the pair has equal ν-slope.
    pub fn wall(&self) -> Result<WallLocus, TiltError> {
        nu_wall(&self.candidate.untwist(&self.beta0), &self.complement.untwist(&self.beta0))
    }

    /// `α²` at which the pair has equal slope on the ray `β = β₀`.
    pub fn alpha_sq(&self) -> Option<Rational> {
        equal_slope_alpha_sq(&self.candidate, &self.complement)
    }
}

fn equal_slope_alpha_sq(f: &TwistedClass, g: &TwistedClass) -> Option<Rational> {
    // ν(F) = ν(E) on β = β₀ ⇔ d·C − D·c = a·(r·C − R·c)/2
    let e = TwistedClass {
        r: f.r + g.r,
        c: f.c + g.c,
        d: &f.d + &g.d,
    };
    let (rr, cc) = (Rational::from_integer(e.r.into()), Rational::from_integer(e.c.into()));
    let (r, c) = (Rational::from_integer(f.r.into()), Rational::from_integer(f.c.into()));
    let den = &r * &cc - &rr * &c;
    if den.is_zero() {
        return None;
    }
    Some(Rational::from_integer(2.into()) * (&f.d * &cc - &e.d * &c) / den)
}

/// Checks every condition a returned candidate must satisfy.
pub fn is_admissible(f: &TwistedClass, g: &TwistedClass) -> bool {
    let total_c = f.c + g.c;
    f.c > 0
        && f.c < total_c
        && is_integer(&(&f.d * Rational::from_integer(2.into())))
        && equal_slope_alpha_sq(f, g).is_some_and(|a| a.is_positive())
        && !f.discriminant().is_negative()
        && !g.discriminant().is_negative()
}

fn ceil_half(x: &Rational) -> i64 {
    (x * Rational::from_integer(2.into())).ceil().to_integer().to_i64().expect("bound fits in i64")
}

fn floor_half(x: &Rational) -> i64 {
    (x * Rational::from_integer(2.into())).floor().to_integer().to_i64().expect("bound fits in i64")
}

fn twisted_integral(v: &ChernCharacter, beta0: i64) -> Result<(i64, i64, Rational), TiltError> {
    if !v.in_lattice() {
        return Err(TiltError::OffLattice(v.to_string()));
    }
    let t = v.twist(&Rational::from_integer(beta0.into()));
    let to_i = |q: &Rational| q.to_integer().to_i64().expect("character entry fits in i64");
    Ok((to_i(t.ch0()), to_i(t.ch1()), t.ch2().clone()))
}

/// All unordered pairs `{F, G}` with `0 < ch1^{β₀}(F) < ch1^{β₀}(E)`,
/// `|ch0(F)| ≤ rank_bound`, nonnegative discriminants on both sides, and an
/// equal-slope point with `α² > 0` on the ray `β = β₀`.
///
/// The result is complete up to `rank_bound`.
pub fn enumerate_destabilizers(
    v: &ChernCharacter,
    beta0: &Rational,
    rank_bound: u32,
) -> Result<Vec<DestabilizerCandidate>, TiltError> {
    if rank_bound == 0 {
        return Err(TiltError::ZeroRankBound);
    }
    if !is_integer(beta0) {
        return Err(TiltError::NonIntegralBeta(beta0.clone()));
    }
    let b0 = beta0.to_integer().to_i64().expect("beta0 fits in i64");
    let (rr, cc, dd) = twisted_integral(v, b0)?;
    if cc <= 0 {
        return Err(TiltError::NonPositiveTwistedCh1(Rational::from_integer(cc.into())));
    }
    let rb = i64::from(rank_bound);
    let two = Rational::from_integer(2.into());
    let mut found = Vec::new();
    for r in -rb..=rb {
        for c in 1..cc {
            let (rq, cq) = (Rational::from_integer(r.into()), Rational::from_integer(c.into()));
            let (gr, gc) = (rr - r, cc - c);
            let den = &rq * Rational::from_integer(cc.into()) - Rational::from_integer(rr.into()) * &cq;
            if den.is_zero() {
                continue;
            }
            let mut lo: Option<i64> = None;
            let mut hi: Option<i64> = None;
            let mut tighten_lo = |x: i64| lo = Some(lo.map_or(x, |l| l.max(x)));
            let mut tighten_hi = |x: i64| hi = Some(hi.map_or(x, |h| h.min(x)));
            // c² − 2rd ≥ 0
            if r != 0 {
                let bound = &cq * &cq / (&two * &rq);
                if r > 0 {
                    tighten_hi(floor_half(&bound));
                } else {
                    tighten_lo(ceil_half(&bound));
                }
            }
            // (C − c)² − 2(R − r)(D − d) ≥ 0
            if gr != 0 {
                let gcq = Rational::from_integer(gc.into());
                let grq = Rational::from_integer(gr.into());
                let bound = &dd - &gcq * &gcq / (&two * &grq);
                if gr > 0 {
                    tighten_lo(ceil_half(&bound));
                } else {
                    tighten_hi(floor_half(&bound));
                }
            }
            // α² = 2(d·C − D·c)/den > 0
            let pivot = &dd * &cq / Rational::from_integer(cc.into());
            if den.is_positive() {
                tighten_lo(floor_half(&pivot) + 1);
            } else {
                tighten_hi(ceil_half(&pivot) - 1);
            }
            let (Some(lo), Some(hi)) = (lo, hi) else {
                return Err(TiltError::Unbounded(r));
            };
            for twice_d in lo..=hi {
                let f = TwistedClass {
                    r,
                    c,
                    d: Rational::new(twice_d.into(), 2.into()),
                };
                let g = TwistedClass {
                    r: gr,
                    c: gc,
                    d: &dd - &f.d,
                };
                if is_admissible(&f, &g) {
                    found.push(DestabilizerCandidate::normalized(f, g, beta0.clone()));
                }
            }
        }
    }
    found.sort_by(|x, y| (&x.candidate, &x.complement).cmp(&(&y.candidate, &y.complement)));
    found.dedup();
    Ok(found)
}

/// Pairs `(n, n′)` of nonnegative integers with
/// `(f3_base − n) + (g3_base − n′) = e3`.
pub fn refine_point_lengths(e3: &Rational, f3_base: &Rational, g3_base: &Rational) -> Vec<(u64, u64)> {
    let total = f3_base + g3_base - e3;
    if !is_integer(&total) || total.is_negative() {
        return Vec::new();
    }
    let n = total.to_integer().to_u64().expect("point count fits in u64");
    (0..=n).map(|k| (k, n - k)).collect()
}
